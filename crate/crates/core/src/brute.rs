//! Ground truth by exhaustive enumeration.
//!
//! Every limit here is a hard [`Error::Capacity`]; nothing is sampled or
//! truncated. The exhaustive certificate check does not assume
//! monotonicity, so it can stand as an independent check on the fast path.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::function::{MonotoneFunction, RangeKind};
use crate::point::{IndexSet, Point};

/// Largest number of free coordinates an exhaustive check will enumerate.
pub const MAX_FREE_COORDINATES: usize = 24;
/// Largest `n` for which `C(f)` is computed.
pub const MAX_COMPLEXITY_N: usize = 16;
/// Largest `n` for which monotonicity is checked.
pub const MAX_MONOTONE_N: usize = 20;
/// Largest number of candidate subsets examined by [`cert_complexity_at`].
pub const MAX_CANDIDATE_SUBSETS: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Enumerate every completion of the free coordinates.
    Exhaustive,
    /// Compare `f(x)` with `f` at the least and greatest consistent points.
    /// Exact for monotone `f` only.
    MonotoneFast,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityReport {
    pub value: usize,
    /// A smallest certificate at `input`.
    pub witness: IndexSet,
    /// The input the report refers to; for `C(f)` the first maximizing input
    /// in truth-table order.
    pub input: Point,
}

fn check_point(f: &MonotoneFunction, x: &Point) -> Result<()> {
    if x.dimension() != f.dimension() {
        return Err(Error::Dimension {
            expected: f.dimension(),
            found: x.dimension(),
        });
    }
    Ok(())
}

fn check_set(f: &MonotoneFunction, s: &IndexSet) -> Result<()> {
    let n = f.dimension();
    match s.iter().find(|&i| i > n) {
        Some(index) => Err(Error::IndexOutOfRange { index, n }),
        None => Ok(()),
    }
}

/// Whether every `y` with `y|_S = x|_S` has `f(y) = f(x)`.
pub fn is_certificate(f: &MonotoneFunction, x: &Point, s: &IndexSet, mode: CheckMode) -> Result<bool> {
    check_point(f, x)?;
    check_set(f, s)?;
    match mode {
        CheckMode::Exhaustive => exhaustive_check(f, x, s),
        CheckMode::MonotoneFast => Ok(fast_check(f, x, s.members())),
    }
}

fn exhaustive_check(f: &MonotoneFunction, x: &Point, s: &IndexSet) -> Result<bool> {
    let n = f.dimension();
    let free: Vec<usize> = (1..=n).filter(|&i| !s.contains(i)).collect();
    if free.len() > MAX_FREE_COORDINATES {
        return Err(Error::Capacity(format!(
            "{} free coordinates exceed the exhaustive limit of {MAX_FREE_COORDINATES}",
            free.len()
        )));
    }
    let target = f.eval(x);
    let mut y = x.clone();
    for &i in &free {
        y.set(i, false);
    }
    if f.eval(&y) != target {
        return Ok(false);
    }
    // Gray code: each step flips one free coordinate.
    for step in 1u64..(1u64 << free.len()) {
        y.flip(free[step.trailing_zeros() as usize]);
        if f.eval(&y) != target {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fast_check(f: &MonotoneFunction, x: &Point, s: &[usize]) -> bool {
    let n = f.dimension();
    let target = f.eval(x);
    let mut lo = Point::zeros(n);
    let mut hi = Point::ones(n);
    for &i in s {
        let b = x.get(i);
        lo.set(i, b);
        hi.set(i, b);
    }
    match f.kind() {
        RangeKind::Boolean if target != 0.0 => f.eval(&lo) == target,
        RangeKind::Boolean => f.eval(&hi) == target,
        RangeKind::Real => f.eval(&lo) == target && f.eval(&hi) == target,
    }
}

/// Whether `S` is a certificate none of whose single-element deletions is one.
pub fn is_minimal(f: &MonotoneFunction, x: &Point, s: &IndexSet, mode: CheckMode) -> Result<bool> {
    if !is_certificate(f, x, s, mode)? {
        return Err(Error::Contract(format!("{s} is not a certificate at {x}")));
    }
    for a in s.iter() {
        if is_certificate(f, x, &s.without(a), mode)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn binomial(m: usize, k: usize) -> u64 {
    crate::combinatorics::binomial(m as u64, k as u64).unwrap_or(u64::MAX)
}

/// `C(f, x)` with a size-then-lexicographic first witness. Assumes `f` monotone.
///
/// For Boolean `f` the candidates are subsets of `S_x` when `f(x) = 1` and of
/// the zero set when `f(x) = 0`; for real `f` they are subsets of `[n]`.
pub fn cert_complexity_at(f: &MonotoneFunction, x: &Point) -> Result<ComplexityReport> {
    check_point(f, x)?;
    let n = f.dimension();
    let pool: Vec<usize> = match f.kind() {
        RangeKind::Boolean => x.coordinates_equal_to(f.eval(x) != 0.0),
        RangeKind::Real => (1..=n).collect(),
    };
    let mut examined = 0u64;
    for k in 0..=pool.len() {
        examined = examined.saturating_add(binomial(pool.len(), k));
        if examined > MAX_CANDIDATE_SUBSETS {
            return Err(Error::Capacity(format!(
                "more than {MAX_CANDIDATE_SUBSETS} candidate subsets"
            )));
        }
        for combo in pool.iter().copied().combinations(k) {
            if fast_check(f, x, &combo) {
                return Ok(ComplexityReport {
                    value: k,
                    witness: IndexSet::from_sorted(n, combo),
                    input: x.clone(),
                });
            }
        }
    }
    // The whole pool always certifies a monotone function.
    Err(Error::NotMonotone)
}

/// All `2ⁿ` values in truth-table order (entry `t` is `f(Point::from_mask(n, t))`).
pub fn values(f: &MonotoneFunction) -> Result<Vec<f64>> {
    let n = f.dimension();
    if n > MAX_MONOTONE_N {
        return Err(Error::Capacity(format!(
            "tabulating 2^{n} values exceeds the limit n <= {MAX_MONOTONE_N}"
        )));
    }
    Ok((0..1u64 << n).map(|t| f.eval(&Point::from_mask(n, t))).collect())
}

fn table_is_monotone(n: usize, table: &[f64]) -> bool {
    (0..table.len()).all(|t| {
        (0..n)
            .filter(|i| t >> i & 1 == 0)
            .all(|i| table[t] <= table[t | 1 << i])
    })
}

/// Single-flip monotonicity check over all `n·2ⁿ⁻¹` edges of the cube.
pub fn is_monotone(f: &MonotoneFunction) -> Result<bool> {
    Ok(table_is_monotone(f.dimension(), &values(f)?))
}

/// Per-input certificate complexity for every input, in truth-table order.
/// Fails with [`Error::NotMonotone`] when `f` is not monotone.
pub fn cert_complexity_table(f: &MonotoneFunction) -> Result<Vec<usize>> {
    let n = f.dimension();
    if n > MAX_COMPLEXITY_N {
        return Err(Error::Capacity(format!(
            "C(f) is limited to n <= {MAX_COMPLEXITY_N}, got {n}"
        )));
    }
    let table = values(f)?;
    if !table_is_monotone(n, &table) {
        return Err(Error::NotMonotone);
    }
    Ok(match f.kind() {
        RangeKind::Boolean => boolean_table(n, &table),
        RangeKind::Real => real_table(n, &table),
    })
}

/// For `f(x) = 1`: the lightest 1-input below `x`. For `f(x) = 0`: the
/// heaviest 0-input above `x`, whose zeros are the certificate.
fn boolean_table(n: usize, table: &[f64]) -> Vec<usize> {
    let size = table.len();
    let weight = |t: usize| t.count_ones() as i64;
    let mut lightest_one_below: Vec<i64> = (0..size)
        .map(|t| if table[t] != 0.0 { weight(t) } else { i64::MAX })
        .collect();
    let mut heaviest_zero_above: Vec<i64> = (0..size)
        .map(|t| if table[t] == 0.0 { weight(t) } else { i64::MIN })
        .collect();
    for i in 0..n {
        let bit = 1 << i;
        for t in 0..size {
            if t & bit != 0 {
                lightest_one_below[t] = lightest_one_below[t].min(lightest_one_below[t ^ bit]);
            } else {
                heaviest_zero_above[t] = heaviest_zero_above[t].max(heaviest_zero_above[t | bit]);
            }
        }
    }
    (0..size)
        .map(|t| {
            if table[t] != 0.0 {
                lightest_one_below[t] as usize
            } else {
                n - heaviest_zero_above[t] as usize
            }
        })
        .collect()
}

/// Splits a certificate into fixed ones and fixed zeros: the consistent
/// inputs form an interval, so each half is minimized independently.
fn real_table(n: usize, table: &[f64]) -> Vec<usize> {
    let full = (1usize << n) - 1;
    (0..table.len())
        .map(|t| {
            let target = table[t];
            let mut ones = usize::MAX;
            let mut sub = t;
            loop {
                if table[sub] == target {
                    ones = ones.min(sub.count_ones() as usize);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & t;
            }
            let zero_set = full & !t;
            let mut zeros = usize::MAX;
            let mut sub = zero_set;
            loop {
                if table[full ^ sub] == target {
                    zeros = zeros.min(sub.count_ones() as usize);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & zero_set;
            }
            ones + zeros
        })
        .collect()
}

/// `C(f) = max_x C(f, x)`, with the first maximizing input and its witness.
pub fn cert_complexity(f: &MonotoneFunction) -> Result<ComplexityReport> {
    let n = f.dimension();
    let per_input = cert_complexity_table(f)?;
    let (best, _) = per_input
        .iter()
        .enumerate()
        .fold((0usize, 0usize), |(bt, bv), (t, &v)| if v > bv { (t, v) } else { (bt, bv) });
    let report = cert_complexity_at(f, &Point::from_mask(n, best as u64))?;
    debug_assert_eq!(report.value, per_input[best]);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::{
        binarize, make_dnf, make_indicator, make_threshold, make_weighted_real,
        random_monotone_dnf,
    };
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(n: usize, m: &[usize]) -> IndexSet {
        IndexSet::new(n, m.iter().copied()).unwrap()
    }

    fn p(s: &str) -> Point {
        s.parse().unwrap()
    }

    fn or(n: usize) -> MonotoneFunction {
        make_dnf(n, (1..=n).map(|i| set(n, &[i])).collect()).unwrap()
    }

    fn both(f: &MonotoneFunction, x: &Point, s: &IndexSet) -> (bool, bool) {
        (
            is_certificate(f, x, s, CheckMode::Exhaustive).unwrap(),
            is_certificate(f, x, s, CheckMode::MonotoneFast).unwrap(),
        )
    }

    #[test]
    fn certificate_examples() {
        let f = or(3);
        assert_eq!(both(&f, &p("100"), &set(3, &[1])), (true, true));
        assert_eq!(both(&f, &p("000"), &set(3, &[1, 2])), (false, false));

        let g = make_dnf(5, vec![set(5, &[2, 4])]).unwrap();
        assert_eq!(both(&g, &Point::ones(5), &set(5, &[2, 4])), (true, true));
        assert_eq!(both(&g, &Point::ones(5), &set(5, &[2])), (false, false));
    }

    #[test]
    fn exhaustive_capacity_limit() {
        let f = make_threshold(30, 3).unwrap();
        let x = Point::ones(30);
        assert!(matches!(
            is_certificate(&f, &x, &set(30, &[1, 2, 3, 4, 5]), CheckMode::Exhaustive),
            Err(Error::Capacity(_))
        ));
        assert!(is_certificate(&f, &x, &set(30, &[1, 2, 3, 4, 5, 6]), CheckMode::Exhaustive).unwrap());
    }

    #[test]
    fn minimality_examples() {
        let f = or(3);
        let x = p("110");
        assert!(is_minimal(&f, &x, &set(3, &[1]), CheckMode::Exhaustive).unwrap());
        assert!(!is_minimal(&f, &x, &set(3, &[1, 2]), CheckMode::Exhaustive).unwrap());
        assert!(matches!(
            is_minimal(&f, &x, &set(3, &[3]), CheckMode::Exhaustive),
            Err(Error::Contract(_))
        ));
        let g = make_dnf(5, vec![set(5, &[2, 4])]).unwrap();
        assert!(is_minimal(&g, &Point::ones(5), &set(5, &[2, 4]), CheckMode::Exhaustive).unwrap());
    }

    #[test]
    fn complexity_examples() {
        let f = make_indicator(6, 3, set(6, &[1, 4, 5])).unwrap();
        let r = cert_complexity_at(&f, &Point::ones(6)).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness, set(6, &[1, 4, 5]));
        assert!(cert_complexity(&f).unwrap().value >= 3);

        let zero = make_dnf(4, vec![]).unwrap();
        let r = cert_complexity_at(&zero, &p("1010")).unwrap();
        assert_eq!((r.value, r.witness.len()), (0, 0));
        assert_eq!(cert_complexity(&zero).unwrap().value, 0);

        let g = make_dnf(5, vec![set(5, &[2, 4])]).unwrap();
        assert_eq!(cert_complexity_at(&g, &Point::ones(5)).unwrap().value, 2);

        for n in 1..=8 {
            let r = cert_complexity(&or(n)).unwrap();
            assert_eq!(r.value, n);
            assert_eq!(r.input, Point::zeros(n));
        }
    }

    #[test]
    fn complexity_capacity() {
        let f = make_threshold(17, 2).unwrap();
        assert!(matches!(cert_complexity(&f), Err(Error::Capacity(_))));
    }

    #[test]
    fn monotonicity_examples() {
        let popcount = make_weighted_real(5, vec![1.0; 5]).unwrap();
        assert!(is_monotone(&popcount).unwrap());
        assert!(is_monotone(&random_monotone_dnf(10, 4, 3, 11).unwrap()).unwrap());
        assert!(!table_is_monotone(2, &[0.0, 1.0, 1.0, 0.0]));
    }

    /// Size-lex search over all of `[n]` with the exhaustive check.
    fn reference_complexity_at(f: &MonotoneFunction, x: &Point) -> usize {
        let n = f.dimension();
        (0..=n)
            .find(|&k| {
                (1..=n).combinations(k).any(|c| {
                    is_certificate(f, x, &IndexSet::new(n, c).unwrap(), CheckMode::Exhaustive)
                        .unwrap()
                })
            })
            .unwrap()
    }

    #[test]
    fn complexity_table_matches_reference_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for round in 0..12 {
            let n = rng.gen_range(2..=7);
            let f = if round % 3 == 2 {
                let w = (0..n).map(|_| rng.gen_range(0..3) as f64).collect();
                make_weighted_real(n, w).unwrap()
            } else {
                random_monotone_dnf(n, rng.gen_range(0..5), rng.gen_range(1..=n), rng.gen()).unwrap()
            };
            let table = cert_complexity_table(&f).unwrap();
            for t in 0..1u64 << n {
                let x = Point::from_mask(n, t);
                let expected = reference_complexity_at(&f, &x);
                assert_eq!(table[t as usize], expected, "round {round} x={x}");
                let at = cert_complexity_at(&f, &x).unwrap();
                assert_eq!(at.value, expected);
                assert!(is_certificate(&f, &x, &at.witness, CheckMode::Exhaustive).unwrap());
            }
        }
    }

    #[test]
    fn modes_agree_on_all_pairs_small_n() {
        for seed in 0..4 {
            let n = 6;
            let f = random_monotone_dnf(n, 4, 3, seed).unwrap();
            for t in 0..1u64 << n {
                let x = Point::from_mask(n, t);
                for m in 0..1u64 << n {
                    let s = crate::point::support(&Point::from_mask(n, m));
                    let (a, b) = both(&f, &x, &s);
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn one_witness_within_support() {
        let f = random_monotone_dnf(10, 5, 4, 9).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let x = Point::random(10, &mut rng);
            let r = cert_complexity_at(&f, &x).unwrap();
            if f.eval(&x) == 1.0 {
                assert!(r.witness.iter().all(|i| x.get(i)));
            }
        }
    }

    #[test]
    fn binarized_complexity_never_exceeds_original() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..10 {
            let n = rng.gen_range(2..=8);
            let w: Vec<f64> = (0..n).map(|_| rng.gen_range(0..4) as f64 * 0.5).collect();
            let f = make_weighted_real(n, w).unwrap();
            let cf = cert_complexity(&f).unwrap().value;
            let x = Point::random(n, &mut rng);
            for tie in [false, true] {
                let g = binarize(&f, &x, tie).unwrap();
                assert!(cert_complexity(&g).unwrap().value <= cf);
            }
        }
    }
}
