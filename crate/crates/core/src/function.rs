//! Monotone functions over `{0,1}^n` and the constructions the certifiers use.

use std::fmt;
use std::sync::Arc;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::point::{IndexSet, Point};

/// Largest dimension accepted for explicit truth tables.
pub const MAX_TRUTH_TABLE_N: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeKind {
    Boolean,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    TruthTable,
    Dnf,
    Threshold,
    Indicator,
    WeightedReal,
    Derived,
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Representation::TruthTable => "truth_table",
            Representation::Dnf => "dnf",
            Representation::Threshold => "threshold",
            Representation::Indicator => "indicator",
            Representation::WeightedReal => "weighted_real",
            Representation::Derived => "derived",
        })
    }
}

#[derive(Debug)]
enum Body {
    TruthTable(Vec<bool>),
    Dnf(Vec<IndexSet>),
    Threshold(usize),
    Indicator { k: usize, planted: IndexSet },
    WeightedReal(Vec<f64>),
    Constant(f64),
    Dual(MonotoneFunction),
    Binarized { inner: MonotoneFunction, pivot: f64, tie: bool },
}

/// An immutable, cheaply clonable function `{0,1}^n → {0,1}` or `→ ℝ`.
///
/// Boolean functions evaluate to exactly `0.0` or `1.0`.
#[derive(Debug, Clone)]
pub struct MonotoneFunction {
    n: usize,
    kind: RangeKind,
    body: Arc<Body>,
}

fn bool_value(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

impl MonotoneFunction {
    fn build(n: usize, kind: RangeKind, body: Body) -> Self {
        MonotoneFunction {
            n,
            kind,
            body: Arc::new(body),
        }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> RangeKind {
        self.kind
    }

    pub fn is_boolean(&self) -> bool {
        self.kind == RangeKind::Boolean
    }

    pub fn representation(&self) -> Representation {
        match &*self.body {
            Body::TruthTable(_) => Representation::TruthTable,
            Body::Dnf(_) => Representation::Dnf,
            Body::Threshold(_) => Representation::Threshold,
            Body::Indicator { .. } => Representation::Indicator,
            Body::WeightedReal(_) => Representation::WeightedReal,
            Body::Constant(_) | Body::Dual(_) | Body::Binarized { .. } => Representation::Derived,
        }
    }

    /// The reduced (antichain) minterm list of a DNF.
    pub fn minterms(&self) -> Option<&[IndexSet]> {
        match &*self.body {
            Body::Dnf(m) => Some(m),
            _ => None,
        }
    }

    pub fn truth_table(&self) -> Option<&[bool]> {
        match &*self.body {
            Body::TruthTable(t) => Some(t),
            _ => None,
        }
    }

    pub fn threshold(&self) -> Option<usize> {
        match &*self.body {
            Body::Threshold(k) => Some(*k),
            _ => None,
        }
    }

    pub fn planted(&self) -> Option<(usize, &IndexSet)> {
        match &*self.body {
            Body::Indicator { k, planted } => Some((*k, planted)),
            _ => None,
        }
    }

    pub fn weights(&self) -> Option<&[f64]> {
        match &*self.body {
            Body::WeightedReal(w) => Some(w),
            _ => None,
        }
    }

    /// Evaluates `f(x)`, checking the dimension.
    pub fn evaluate(&self, x: &Point) -> Result<f64> {
        if x.dimension() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: x.dimension(),
            });
        }
        Ok(self.eval(x))
    }

    pub(crate) fn eval(&self, x: &Point) -> f64 {
        debug_assert_eq!(x.dimension(), self.n);
        match &*self.body {
            Body::TruthTable(table) => bool_value(table[x.to_mask() as usize]),
            Body::Dnf(minterms) => {
                bool_value(minterms.iter().any(|t| t.iter().all(|i| x.get(i))))
            }
            Body::Threshold(k) => bool_value(x.weight() >= *k),
            Body::Indicator { k, planted } => {
                let w = x.weight();
                bool_value(w > *k || (w == *k && planted.iter().all(|i| x.get(i))))
            }
            Body::WeightedReal(weights) => x
                .coordinates_equal_to(true)
                .into_iter()
                .map(|i| weights[i - 1])
                .sum(),
            Body::Constant(v) => *v,
            Body::Dual(inner) => 1.0 - inner.eval(&x.complement()),
            Body::Binarized { inner, pivot, tie } => {
                let v = inner.eval(x);
                if v < *pivot {
                    0.0
                } else if v > *pivot {
                    1.0
                } else {
                    bool_value(*tie)
                }
            }
        }
    }

    /// Constant function; Boolean when `value` is 0 or 1, real otherwise.
    pub fn constant(n: usize, value: f64) -> Result<Self> {
        check_dimension(n)?;
        if !value.is_finite() {
            return Err(Error::Contract("constant value must be finite".into()));
        }
        let kind = if value == 0.0 || value == 1.0 {
            RangeKind::Boolean
        } else {
            RangeKind::Real
        };
        Ok(Self::build(n, kind, Body::Constant(value)))
    }
}

fn check_dimension(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Contract("dimension must be positive".into()))
    } else {
        Ok(())
    }
}

fn check_members(n: usize, set: &IndexSet) -> Result<()> {
    match set.iter().find(|&i| i > n) {
        Some(index) => Err(Error::IndexOutOfRange { index, n }),
        None => Ok(()),
    }
}

/// `g(x) = 1 − f(𝟙ⁿ − x)`. One evaluation of `g` costs one evaluation of `f`.
pub fn dualize(f: &MonotoneFunction) -> Result<MonotoneFunction> {
    if !f.is_boolean() {
        return Err(Error::Kind);
    }
    Ok(MonotoneFunction::build(
        f.n,
        RangeKind::Boolean,
        Body::Dual(f.clone()),
    ))
}

/// Threshold `f` at `f(x_star)`, resolving ties to `tie`.
///
/// Evaluates `f(x_star)` once here; each evaluation of the result costs one
/// evaluation of `f`.
pub fn binarize(f: &MonotoneFunction, x_star: &Point, tie: bool) -> Result<MonotoneFunction> {
    let pivot = f.evaluate(x_star)?;
    Ok(MonotoneFunction::build(
        f.n,
        RangeKind::Boolean,
        Body::Binarized {
            inner: f.clone(),
            pivot,
            tie,
        },
    ))
}

/// Monotone DNF `⋁_T ⋀_{i∈T} x_i`; the minterm list is reduced to an antichain.
pub fn make_dnf(n: usize, minterms: Vec<IndexSet>) -> Result<MonotoneFunction> {
    check_dimension(n)?;
    for t in &minterms {
        check_members(n, t)?;
    }
    let mut sorted = minterms
        .into_iter()
        .map(|t| IndexSet::from_sorted(n, t.members().to_vec()))
        .collect::<Vec<_>>();
    sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
    let mut reduced: Vec<IndexSet> = Vec::with_capacity(sorted.len());
    for t in sorted {
        if !reduced.iter().any(|r| r.is_subset(&t)) {
            reduced.push(t);
        }
    }
    Ok(MonotoneFunction::build(n, RangeKind::Boolean, Body::Dnf(reduced)))
}

/// `f(x) = 1` iff `|S_x| >= k`.
pub fn make_threshold(n: usize, k: usize) -> Result<MonotoneFunction> {
    check_dimension(n)?;
    Ok(MonotoneFunction::build(n, RangeKind::Boolean, Body::Threshold(k)))
}

/// The k-indicator `f_P`: 0 below weight `k`, 1 above, and at weight exactly
/// `k` equal to 1 only on `x_P`.
pub fn make_indicator(n: usize, k: usize, planted: IndexSet) -> Result<MonotoneFunction> {
    check_dimension(n)?;
    check_members(n, &planted)?;
    if planted.len() != k {
        return Err(Error::Contract(format!(
            "planted set has {} members, expected k = {k}",
            planted.len()
        )));
    }
    let planted = IndexSet::from_sorted(n, planted.members().to_vec());
    Ok(MonotoneFunction::build(
        n,
        RangeKind::Boolean,
        Body::Indicator { k, planted },
    ))
}

/// Explicit truth table; entry `t` is the value at `Point::from_mask(n, t)`.
/// Non-monotone tables are rejected.
pub fn make_truth_table(n: usize, table: Vec<bool>) -> Result<MonotoneFunction> {
    check_dimension(n)?;
    if n > MAX_TRUTH_TABLE_N {
        return Err(Error::Capacity(format!(
            "truth tables are limited to n <= {MAX_TRUTH_TABLE_N}"
        )));
    }
    if table.len() != 1 << n {
        return Err(Error::Dimension {
            expected: 1 << n,
            found: table.len(),
        });
    }
    let f = MonotoneFunction::build(n, RangeKind::Boolean, Body::TruthTable(table));
    if !crate::brute::is_monotone(&f)? {
        return Err(Error::NotMonotone);
    }
    Ok(f)
}

/// `f(x) = Σ_{i∈S_x} w_i` with nonnegative weights.
pub fn make_weighted_real(n: usize, weights: Vec<f64>) -> Result<MonotoneFunction> {
    check_dimension(n)?;
    if weights.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: weights.len(),
        });
    }
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::Contract("weights must be finite and nonnegative".into()));
    }
    Ok(MonotoneFunction::build(
        n,
        RangeKind::Real,
        Body::WeightedReal(weights),
    ))
}

/// Random monotone DNF: each minterm has width uniform in `1..=max_width`
/// and members drawn uniformly without replacement. Deterministic in `seed`.
pub fn random_monotone_dnf(
    n: usize,
    num_minterms: usize,
    max_width: usize,
    seed: u64,
) -> Result<MonotoneFunction> {
    check_dimension(n)?;
    if max_width == 0 || max_width > n {
        return Err(Error::Contract(format!(
            "max_width must lie in 1..={n}, got {max_width}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let minterms = (0..num_minterms)
        .map(|_| {
            let width = rng.gen_range(1..=max_width);
            let picked = index::sample(&mut rng, n, width).into_iter().map(|j| j + 1);
            IndexSet::new(n, picked)
        })
        .collect::<Result<Vec<_>>>()?;
    make_dnf(n, minterms)
}
