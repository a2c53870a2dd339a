//! Certifiers for monotone functions under query access.
//!
//! [`certify_binary`] grows a certificate one coordinate at a time. Each
//! step binary-searches the remaining candidates for the shortest prefix
//! that, together with the coordinates chosen so far, forces the value. The
//! result is a minimal certificate, so its size is at most `C(f)`, and the
//! run costs at most `|A|·(1+⌈log₂ n⌉) + 2` queries.
//!
//! [`certify_real`] reduces a real-valued function to two Boolean
//! thresholdings at `f(x*)` and unions their certificates.
//! [`angluin_certify`] is the linear local-search baseline.

use std::fmt;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::function::RangeKind;
use crate::oracle::Oracle;
use crate::point::{point_of, IndexSet, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Binary,
    Angluin,
    Real,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Binary => "binary",
            Algorithm::Angluin => "angluin",
            Algorithm::Real => "real",
        })
    }
}

#[derive(Debug, Clone)]
pub struct CertifyResult {
    pub certificate: Certificate,
    pub queries_used: u64,
    /// Coordinates added to the working set.
    pub iterations: usize,
    pub algorithm: Algorithm,
    /// Whether the run went through `g(x) = 1 − f(𝟙ⁿ − x)` because `f(x*) = 0`.
    pub dualized: bool,
    /// Coordinates in the order they were added (binary) or kept (angluin).
    pub insertion_order: Vec<usize>,
}

/// `⌈log₂ n⌉`, with `ceil_log2(1) = 0`.
pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Worst-case query count of [`certify_binary`] for a certificate of the given size.
pub fn binary_query_bound(cert_size: usize, n: usize) -> u64 {
    cert_size as u64 * (1 + ceil_log2(n) as u64) + 2
}

/// Which value the run certifies. On the zero side every point handed to
/// the oracle is the complement of the dual point, so a dual query is a
/// single query to `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Ones,
    Zeros,
}

impl Side {
    fn for_value(v: f64) -> Side {
        if v != 0.0 {
            Side::Ones
        } else {
            Side::Zeros
        }
    }

    /// Coordinates a certificate may draw from.
    fn candidates(self, x: &Point) -> Vec<usize> {
        x.coordinates_equal_to(self == Side::Ones)
    }

    /// The oracle-side image of the empty working set.
    fn base(self, n: usize) -> Point {
        match self {
            Side::Ones => Point::zeros(n),
            Side::Zeros => Point::ones(n),
        }
    }

    fn mark(self, p: &mut Point, i: usize) {
        p.set(i, self == Side::Ones);
    }

    fn hit(self, v: f64) -> bool {
        match self {
            Side::Ones => v != 0.0,
            Side::Zeros => v == 0.0,
        }
    }
}

/// Boolean view `g_b` of a real oracle, thresholded at `pivot` with ties to `tie`.
struct Binarized<'a, O: Oracle + ?Sized> {
    inner: &'a mut O,
    pivot: f64,
    tie: bool,
}

impl<O: Oracle + ?Sized> Binarized<'_, O> {
    fn map(&self, v: f64) -> f64 {
        let above = if v < self.pivot {
            false
        } else if v > self.pivot {
            true
        } else {
            self.tie
        };
        if above {
            1.0
        } else {
            0.0
        }
    }
}

impl<O: Oracle + ?Sized> Oracle for Binarized<'_, O> {
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn kind(&self) -> RangeKind {
        RangeKind::Boolean
    }

    fn query(&mut self, x: &Point) -> Result<f64> {
        let v = self.inner.query(x)?;
        Ok(self.map(v))
    }

    fn peek(&self, x: &Point) -> f64 {
        self.map(self.inner.peek(x))
    }

    fn queries(&self) -> u64 {
        self.inner.queries()
    }
}

fn check_boolean<O: Oracle + ?Sized>(oracle: &O) -> Result<()> {
    if oracle.kind() != RangeKind::Boolean {
        return Err(Error::Kind);
    }
    Ok(())
}

fn check_dimension<O: Oracle + ?Sized>(oracle: &O, x: &Point) -> Result<()> {
    if x.dimension() != oracle.dimension() {
        return Err(Error::Dimension {
            expected: oracle.dimension(),
            found: x.dimension(),
        });
    }
    Ok(())
}

/// Position of the first member of `candidates` whose prefix, added to
/// `base`, hits. Assumes the empty prefix misses and the full prefix hits;
/// neither endpoint is queried, so this costs at most `⌈log₂ m⌉` queries.
fn prefix_position<O: Oracle + ?Sized>(
    oracle: &mut O,
    side: Side,
    base: &Point,
    candidates: &[usize],
) -> Result<usize> {
    if candidates.is_empty() {
        return Err(Error::Search("f(x_{A∪S}) = 0 with S empty"));
    }
    let (mut lo, mut hi) = (0, candidates.len());
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let mut p = base.clone();
        for &i in &candidates[..mid] {
            side.mark(&mut p, i);
        }
        if side.hit(oracle.query(&p)?) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi - 1)
}

fn with_marked(side: Side, base: &Point, members: &[usize]) -> Point {
    let mut p = base.clone();
    for &i in members {
        side.mark(&mut p, i);
    }
    p
}

/// The smallest `s ∈ S` with `f(x_{A ∪ ([s]∩S)}) = 1`.
///
/// Requires `f(x_A) = 0` and `f(x_{A∪S}) = 1`; both are checked with
/// uncounted evaluations and reported as [`Error::Search`]. The binary
/// search itself makes at most `⌈log₂ |S|⌉` counted queries.
pub fn search<O: Oracle + ?Sized>(oracle: &mut O, a: &IndexSet, s: &IndexSet) -> Result<usize> {
    check_boolean(oracle)?;
    let n = oracle.dimension();
    let base = point_of(a, n)?;
    let top = point_of(&a.union(s), n)?;
    if oracle.peek(&base) != 0.0 {
        return Err(Error::Search("f(x_A) = 1"));
    }
    if oracle.peek(&top) == 0.0 {
        return Err(Error::Search("f(x_{A∪S}) = 0"));
    }
    let pos = prefix_position(oracle, Side::Ones, &base, s.members())?;
    Ok(s.members()[pos])
}

/// Main loop, for a run whose certified value is already known.
fn grow<O: Oracle + ?Sized>(oracle: &mut O, x_star: &Point, side: Side) -> Result<Vec<usize>> {
    let n = x_star.dimension();
    let mut chosen = Vec::new();
    let mut candidates = side.candidates(x_star);
    let mut base = side.base(n);
    loop {
        if side.hit(oracle.query(&base)?) {
            break;
        }
        debug_assert!(
            side.hit(oracle.peek(&with_marked(side, &base, &candidates))),
            "loop invariant: f(x_(A∪S)) = 1"
        );
        let pos = prefix_position(oracle, side, &base, &candidates)?;
        let s = candidates[pos];
        side.mark(&mut base, s);
        chosen.push(s);
        candidates.truncate(pos);
    }
    Ok(chosen)
}

fn finish(
    x_star: &Point,
    value: f64,
    order: Vec<usize>,
    queries_used: u64,
    algorithm: Algorithm,
    dualized: bool,
) -> CertifyResult {
    let n = x_star.dimension();
    let mut members = order.clone();
    members.sort_unstable();
    CertifyResult {
        certificate: Certificate::new(IndexSet::from_sorted(n, members), x_star.clone(), value),
        queries_used,
        iterations: order.len(),
        algorithm,
        dualized,
        insertion_order: order,
    }
}

/// Certifies `f(x*)` for a monotone Boolean `f` with a minimal certificate.
///
/// When `f(x*) = 0` the same procedure runs on the dual at the complement of
/// `x*`; the returned coordinates are then zeros of `x*`.
pub fn certify_binary<O: Oracle + ?Sized>(oracle: &mut O, x_star: &Point) -> Result<CertifyResult> {
    check_boolean(oracle)?;
    check_dimension(oracle, x_star)?;
    let start = oracle.queries();
    let value = oracle.query(x_star)?;
    let side = Side::for_value(value);
    let order = grow(oracle, x_star, side)?;
    Ok(finish(
        x_star,
        value,
        order,
        oracle.queries() - start,
        Algorithm::Binary,
        side == Side::Zeros,
    ))
}

/// Certifies `f(x*)` for a monotone real-valued `f` with at most `2·C(f)` coordinates.
///
/// `f(x*)` is queried once and shared by both thresholded runs; since
/// `g_b(x*) = b` by construction, neither run re-queries `x*`.
pub fn certify_real<O: Oracle + ?Sized>(oracle: &mut O, x_star: &Point) -> Result<CertifyResult> {
    check_dimension(oracle, x_star)?;
    let start = oracle.queries();
    let pivot = oracle.query(x_star)?;

    let mut order = Vec::new();
    for tie in [false, true] {
        let mut g = Binarized {
            inner: &mut *oracle,
            pivot,
            tie,
        };
        let side = if tie { Side::Ones } else { Side::Zeros };
        order.extend(grow(&mut g, x_star, side)?);
    }
    let iterations = order.len();
    let mut result = finish(
        x_star,
        pivot,
        order,
        oracle.queries() - start,
        Algorithm::Real,
        false,
    );
    result.iterations = iterations;
    Ok(result)
}

/// Local-search baseline: start from every candidate coordinate and drop
/// each one, in increasing index order, whenever the rest still certifies.
/// Costs exactly one query per candidate plus one for `f(x*)`.
pub fn angluin_certify<O: Oracle + ?Sized>(oracle: &mut O, x_star: &Point) -> Result<CertifyResult> {
    check_boolean(oracle)?;
    check_dimension(oracle, x_star)?;
    let start = oracle.queries();
    let value = oracle.query(x_star)?;
    let side = Side::for_value(value);

    // The oracle-side image of "all candidates kept" is x* itself.
    let mut current = x_star.clone();
    let mut kept = Vec::new();
    for i in side.candidates(x_star) {
        current.flip(i);
        if !side.hit(oracle.query(&current)?) {
            current.flip(i);
            kept.push(i);
        }
    }
    Ok(finish(
        x_star,
        value,
        kept,
        oracle.queries() - start,
        Algorithm::Angluin,
        side == Side::Zeros,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::{make_dnf, make_weighted_real, MonotoneFunction};
    use crate::oracle::CountingOracle;

    fn set(n: usize, m: &[usize]) -> IndexSet {
        IndexSet::new(n, m.iter().copied()).unwrap()
    }

    fn or(n: usize) -> MonotoneFunction {
        make_dnf(n, (1..=n).map(|i| set(n, &[i])).collect()).unwrap()
    }

    fn dnf(n: usize, terms: &[&[usize]]) -> MonotoneFunction {
        make_dnf(n, terms.iter().map(|t| set(n, t)).collect()).unwrap()
    }

    fn p(s: &str) -> Point {
        s.parse().unwrap()
    }

    /// Linear scan for the smallest hitting prefix; independent of the binary search.
    fn scan_prefix(f: &MonotoneFunction, a: &IndexSet, s: &IndexSet) -> usize {
        let n = f.dimension();
        let mut x = point_of(a, n).unwrap();
        for i in s.iter() {
            x.set(i, true);
            if f.eval(&x) == 1.0 {
                return i;
            }
        }
        panic!("no prefix hits");
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(8), 3);
        assert_eq!(ceil_log2(1 << 20), 20);
        assert_eq!(binary_query_bound(8, 1 << 20), 170);
    }

    #[test]
    fn search_examples() {
        let f = dnf(5, &[&[2, 4]]);
        let mut o = CountingOracle::new(f.clone());
        let (a, s) = (IndexSet::empty(5), IndexSet::full(5));
        assert_eq!(scan_prefix(&f, &a, &s), 4);
        assert_eq!(search(&mut o, &a, &s).unwrap(), 4);

        let (a, s) = (set(5, &[4]), set(5, &[1, 2, 3]));
        assert_eq!(scan_prefix(&f, &a, &s), 2);
        assert_eq!(search(&mut o, &a, &s).unwrap(), 2);

        let mut o = CountingOracle::new(or(8));
        assert_eq!(search(&mut o, &IndexSet::empty(8), &IndexSet::full(8)).unwrap(), 1);
        assert!(o.count() <= 3);
    }

    #[test]
    fn search_reports_violated_preconditions() {
        let f = dnf(5, &[&[2, 4]]);
        let mut o = CountingOracle::new(f);
        assert!(matches!(
            search(&mut o, &set(5, &[2, 4]), &set(5, &[1])),
            Err(Error::Search(_))
        ));
        assert!(matches!(
            search(&mut o, &IndexSet::empty(5), &set(5, &[1, 2, 3])),
            Err(Error::Search(_))
        ));
        assert_eq!(o.count(), 0);
    }

    #[test]
    fn binary_examples() {
        let mut o = CountingOracle::new(or(5));
        let r = certify_binary(&mut o, &Point::ones(5)).unwrap();
        assert_eq!(r.certificate.indices().members(), &[1]);

        let mut o = CountingOracle::new(dnf(4, &[&[1, 2, 3, 4]]));
        let r = certify_binary(&mut o, &Point::ones(4)).unwrap();
        assert_eq!(r.certificate.indices().members(), &[1, 2, 3, 4]);

        let mut o = CountingOracle::new(dnf(5, &[&[2, 4]]));
        let r = certify_binary(&mut o, &Point::ones(5)).unwrap();
        assert_eq!(r.certificate.indices().members(), &[2, 4]);
        assert_eq!(r.insertion_order, vec![4, 2]);
        assert!(r.queries_used <= 9);
        assert_eq!(r.queries_used, o.count());

        let mut o = CountingOracle::new(dnf(5, &[&[1, 2]]));
        let r = certify_binary(&mut o, &p("01111")).unwrap();
        assert!(r.dualized);
        assert_eq!(r.certificate.restriction(), vec![(1, false)]);
        assert_eq!(r.certificate.value(), 0.0);
    }

    #[test]
    fn binary_constant_functions() {
        let zero = make_dnf(4, vec![]).unwrap();
        let mut o = CountingOracle::new(zero);
        let r = certify_binary(&mut o, &p("1010")).unwrap();
        assert!(r.certificate.is_empty());

        let one = make_dnf(4, vec![IndexSet::empty(4)]).unwrap();
        let mut o = CountingOracle::new(one);
        let r = certify_binary(&mut o, &Point::zeros(4)).unwrap();
        assert!(r.certificate.is_empty());
        assert_eq!(r.queries_used, 2);
    }

    #[test]
    fn binary_rejects_real() {
        let f = make_weighted_real(2, vec![1.0, 1.0]).unwrap();
        let mut o = CountingOracle::new(f);
        assert!(matches!(certify_binary(&mut o, &Point::ones(2)), Err(Error::Kind)));
        assert!(matches!(angluin_certify(&mut o, &Point::ones(2)), Err(Error::Kind)));
    }

    #[test]
    fn budget_error_propagates() {
        let mut o = CountingOracle::new(dnf(5, &[&[2, 4]])).with_budget(3);
        assert!(matches!(
            certify_binary(&mut o, &Point::ones(5)),
            Err(Error::Budget { budget: 3 })
        ));
    }

    #[test]
    fn real_examples() {
        let popcount = make_weighted_real(3, vec![1.0; 3]).unwrap();
        let mut o = CountingOracle::new(popcount);
        let r = certify_real(&mut o, &p("101")).unwrap();
        assert_eq!(r.certificate.indices().members(), &[1, 2, 3]);
        assert_eq!(r.certificate.value(), 2.0);
        assert_eq!(r.queries_used, o.count());

        let five = MonotoneFunction::constant(4, 5.0).unwrap();
        let mut o = CountingOracle::new(five);
        let r = certify_real(&mut o, &p("0110")).unwrap();
        assert!(r.certificate.is_empty());

        let w = make_weighted_real(3, vec![1.0, 0.0, 0.0]).unwrap();
        let mut o = CountingOracle::new(w);
        let r = certify_real(&mut o, &p("100")).unwrap();
        assert_eq!(r.certificate.indices().members(), &[1]);
    }

    #[test]
    fn angluin_examples() {
        let mut o = CountingOracle::new(or(5));
        let r = angluin_certify(&mut o, &Point::ones(5)).unwrap();
        assert_eq!(r.certificate.indices().members(), &[5]);

        let mut o = CountingOracle::new(dnf(4, &[&[1, 2, 3, 4]]));
        let r = angluin_certify(&mut o, &Point::ones(4)).unwrap();
        assert_eq!(r.certificate.indices().members(), &[1, 2, 3, 4]);
        assert_eq!(r.queries_used, 5);

        let mut o = CountingOracle::new(dnf(5, &[&[2, 4]]));
        let r = angluin_certify(&mut o, &Point::ones(5)).unwrap();
        assert_eq!(r.certificate.indices().members(), &[2, 4]);

        let mut o = CountingOracle::new(dnf(5, &[&[1, 2]]));
        let r = angluin_certify(&mut o, &p("01111")).unwrap();
        assert!(r.dualized);
        assert_eq!(r.certificate.restriction(), vec![(1, false)]);
        assert_eq!(r.queries_used, 2);
    }
}
