//! Query access to a function, with every evaluation counted.

use crate::error::{Error, Result};
use crate::function::{MonotoneFunction, RangeKind};
use crate::point::Point;

/// Query access as seen by the certifiers.
pub trait Oracle {
    fn dimension(&self) -> usize;

    fn kind(&self) -> RangeKind;

    /// One counted evaluation.
    fn query(&mut self, x: &Point) -> Result<f64>;

    /// Uncounted evaluation, reserved for precondition checks and debug
    /// assertions. Never part of an algorithm's decision path.
    fn peek(&self, x: &Point) -> f64;

    /// Counted evaluations so far.
    fn queries(&self) -> u64;
}

/// Wraps a [`MonotoneFunction`] and tallies every query. Repeated queries of
/// the same point are counted again; nothing is memoized.
#[derive(Debug, Clone)]
pub struct CountingOracle {
    inner: MonotoneFunction,
    count: u64,
    budget: Option<u64>,
    log: Option<Vec<(Point, f64)>>,
}

impl CountingOracle {
    pub fn new(inner: MonotoneFunction) -> Self {
        CountingOracle {
            inner,
            count: 0,
            budget: None,
            log: None,
        }
    }

    /// Fails any query that would push the tally past `budget`.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    /// Records a `(point, value)` transcript in issue order.
    pub fn with_log(mut self) -> Self {
        self.log = Some(Vec::new());
        self
    }

    pub fn function(&self) -> &MonotoneFunction {
        &self.inner
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn reset(&mut self) {
        self.count = 0;
        if let Some(log) = &mut self.log {
            log.clear();
        }
    }

    /// Drains the transcript. Empty when logging is off.
    pub fn take_log(&mut self) -> Vec<(Point, f64)> {
        self.log.as_mut().map(std::mem::take).unwrap_or_default()
    }
}

impl Oracle for CountingOracle {
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn kind(&self) -> RangeKind {
        self.inner.kind()
    }

    fn query(&mut self, x: &Point) -> Result<f64> {
        if x.dimension() != self.inner.dimension() {
            return Err(Error::Dimension {
                expected: self.inner.dimension(),
                found: x.dimension(),
            });
        }
        if let Some(budget) = self.budget {
            if self.count >= budget {
                return Err(Error::Budget { budget });
            }
        }
        let v = self.inner.eval(x);
        self.count += 1;
        if let Some(log) = &mut self.log {
            log.push((x.clone(), v));
        }
        Ok(v)
    }

    fn peek(&self, x: &Point) -> f64 {
        self.inner.eval(x)
    }

    fn queries(&self) -> u64 {
        self.count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::{binarize, dualize, make_dnf, make_weighted_real};
    use crate::point::IndexSet;

    fn and2() -> MonotoneFunction {
        make_dnf(2, vec![IndexSet::new(2, [1, 2]).unwrap()]).unwrap()
    }

    #[test]
    fn counts_every_query() {
        let mut o = CountingOracle::new(and2());
        let x: Point = "11".parse().unwrap();
        assert_eq!(o.query(&x).unwrap(), 1.0);
        assert_eq!(o.count(), 1);
        o.query(&x).unwrap();
        assert_eq!(o.count(), 2);
        o.reset();
        assert_eq!(o.count(), 0);
    }

    #[test]
    fn budget_is_enforced_before_evaluating() {
        let mut o = CountingOracle::new(and2()).with_budget(0);
        assert!(matches!(o.query(&Point::ones(2)), Err(Error::Budget { budget: 0 })));
        assert_eq!(o.count(), 0);

        let mut o = CountingOracle::new(and2()).with_budget(2);
        o.query(&Point::ones(2)).unwrap();
        o.query(&Point::ones(2)).unwrap();
        assert!(o.query(&Point::ones(2)).is_err());
        assert_eq!(o.count(), 2);
    }

    #[test]
    fn dimension_mismatch() {
        let mut o = CountingOracle::new(and2());
        assert!(matches!(o.query(&Point::ones(3)), Err(Error::Dimension { .. })));
        assert_eq!(o.count(), 0);
    }

    #[test]
    fn transcript_in_issue_order_and_replays() {
        let f = and2();
        let mut o = CountingOracle::new(f.clone()).with_log();
        let pts = ["00", "11", "10"];
        for s in pts {
            o.query(&s.parse().unwrap()).unwrap();
        }
        let log = o.take_log();
        assert_eq!(log.len(), 3);
        for ((x, v), s) in log.iter().zip(pts) {
            assert_eq!(x.to_string(), s);
            assert_eq!(f.evaluate(x).unwrap(), *v);
        }
        assert!(o.take_log().is_empty());
        assert_eq!(o.count(), 3);
    }

    #[test]
    fn derived_functions_count_once_per_outer_evaluation() {
        let mut o = CountingOracle::new(dualize(&and2()).unwrap());
        o.query(&Point::zeros(2)).unwrap();
        assert_eq!(o.count(), 1);

        let f = make_weighted_real(2, vec![1.0, 2.0]).unwrap();
        let mut o = CountingOracle::new(binarize(&f, &Point::ones(2), true).unwrap());
        assert_eq!(o.query(&Point::ones(2)).unwrap(), 1.0);
        assert_eq!(o.count(), 1);
    }
}
