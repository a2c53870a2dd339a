//! Binary input vectors and coordinate sets.
//!
//! Coordinates are 1-based everywhere in the public API: a point of
//! dimension `n` has coordinates `1..=n`, and an [`IndexSet`] holds members
//! drawn from the same range. Bits are packed into `u64` words internally.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A point of `{0,1}^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    n: usize,
    words: Vec<u64>,
}

impl Point {
    pub fn zeros(n: usize) -> Self {
        Point {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn ones(n: usize) -> Self {
        let mut p = Point {
            n,
            words: vec![u64::MAX; words_for(n)],
        };
        p.clear_tail();
        p
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut p = Point::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                p.words[i / WORD] |= 1 << (i % WORD);
            }
        }
        p
    }

    /// Point whose coordinate `i` is bit `i - 1` of `mask`. Requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD, "from_mask supports at most 64 coordinates");
        let mut p = Point::zeros(n);
        if n > 0 {
            p.words[0] = mask;
            p.clear_tail();
        }
        p
    }

    /// Inverse of [`Point::from_mask`]. Requires `n <= 64`.
    pub fn to_mask(&self) -> u64 {
        assert!(self.n <= WORD, "to_mask supports at most 64 coordinates");
        self.words.first().copied().unwrap_or(0)
    }

    /// Uniformly random point, one fair bit per coordinate.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut p = Point {
            n,
            words: (0..words_for(n)).map(|_| rng.gen()).collect(),
        };
        p.clear_tail();
        p
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Bit at 1-based coordinate `i`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i >= 1 && i <= self.n);
        let j = i - 1;
        self.words[j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i >= 1 && i <= self.n);
        let j = i - 1;
        let m = 1u64 << (j % WORD);
        if bit {
            self.words[j / WORD] |= m;
        } else {
            self.words[j / WORD] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i >= 1 && i <= self.n);
        let j = i - 1;
        self.words[j / WORD] ^= 1 << (j % WORD);
    }

    /// `𝟙ⁿ − x`.
    pub fn complement(&self) -> Self {
        let mut p = Point {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        p.clear_tail();
        p
    }

    /// Hamming weight `|S_x|`.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Coordinatewise `self <= other`.
    pub fn le(&self, other: &Point) -> bool {
        self.n == other.n
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// Coordinates equal to `bit`, ascending.
    pub fn coordinates_equal_to(&self, bit: bool) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = if bit { w } else { !w };
            while w != 0 {
                let j = wi * WORD + w.trailing_zeros() as usize;
                if j >= self.n {
                    break;
                }
                out.push(j + 1);
                w &= w - 1;
            }
        }
        out
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.n).map(|i| self.get(i))
    }

    fn clear_tail(&mut self) {
        let r = self.n % WORD;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 128 {
            write!(f, "Point({self})")
        } else {
            write!(f, "Point(n={}, weight={})", self.n, self.weight())
        }
    }
}

/// Parses a bitstring; character `j` (1-based) is coordinate `j`.
impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty bitstring".into()));
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("invalid bit character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Point::from_bits(&bits))
    }
}

/// A subset of `[n]`, kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    n: usize,
    members: Vec<usize>,
}

impl IndexSet {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(IndexSet { n, members })
    }

    /// Builds from members already known to be sorted, unique and in range.
    pub(crate) fn from_sorted(n: usize, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|&i| i >= 1 && i <= n));
        IndexSet { n, members }
    }

    pub fn empty(n: usize) -> Self {
        IndexSet {
            n,
            members: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        IndexSet {
            n,
            members: (1..=n).collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        let mut members: Vec<usize> = self.members.iter().chain(&other.members).copied().collect();
        members.sort_unstable();
        members.dedup();
        IndexSet {
            n: self.n.max(other.n),
            members,
        }
    }

    pub fn without(&self, i: usize) -> IndexSet {
        IndexSet {
            n: self.n,
            members: self.members.iter().copied().filter(|&m| m != i).collect(),
        }
    }

    /// `[n] ∖ self`.
    pub fn complement(&self) -> IndexSet {
        IndexSet {
            n: self.n,
            members: (1..=self.n).filter(|&i| !self.contains(i)).collect(),
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexSet(n={}, {self})", self.n)
    }
}

/// `S_x = {i : x_i = 1}`.
pub fn support(x: &Point) -> IndexSet {
    IndexSet::from_sorted(x.n, x.coordinates_equal_to(true))
}

/// The indicator point `x_S` of dimension `n`.
pub fn point_of(set: &IndexSet, n: usize) -> Result<Point> {
    let mut p = Point::zeros(n);
    for i in set.iter() {
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        p.set(i, true);
    }
    Ok(p)
}

/// `x|_S` as `(coordinate, bit)` pairs in increasing coordinate order.
pub fn restrict(x: &Point, set: &IndexSet) -> Result<Vec<(usize, bool)>> {
    set.iter()
        .map(|i| {
            if i > x.n {
                Err(Error::IndexOutOfRange { index: i, n: x.n })
            } else {
                Ok((i, x.get(i)))
            }
        })
        .collect()
}
