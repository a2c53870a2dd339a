//! Certificates for monotone functions under query access.
//!
//! A certificate for `f` at `x*` is a set of coordinates whose values in
//! `x*` alone force `f(x*)`. This crate finds one of size at most `C(f)`
//! with `O(C(f)·log n)` queries for monotone Boolean `f`
//! ([`certifier::certify_binary`]) and of size at most `2·C(f)` for
//! monotone real-valued `f` ([`certifier::certify_real`]). It also provides
//! brute-force ground truth ([`brute`]) and the k-indicator hardness
//! family for shortest certificates ([`adversary`]).
//!
//! ```
//! use monocert::{certify_binary, make_dnf, CountingOracle, IndexSet, Point};
//!
//! let f = make_dnf(5, vec![IndexSet::new(5, [2, 4]).unwrap()]).unwrap();
//! let mut oracle = CountingOracle::new(f);
//! let result = certify_binary(&mut oracle, &Point::ones(5)).unwrap();
//! assert_eq!(result.certificate.indices().members(), &[2, 4]);
//! assert!(result.queries_used <= 9);
//! ```

pub mod adversary;
pub mod bench;
pub mod brute;
pub mod certificate;
pub mod certifier;
pub mod combinatorics;
pub mod description;
pub mod error;
pub mod function;
pub mod oracle;
pub mod point;

pub use certificate::Certificate;
pub use certifier::{angluin_certify, certify_binary, certify_real, search, Algorithm, CertifyResult};
pub use error::{Error, Result};
pub use function::{
    binarize, dualize, make_dnf, make_indicator, make_threshold, make_truth_table,
    make_weighted_real, random_monotone_dnf, MonotoneFunction, RangeKind, Representation,
};
pub use oracle::{CountingOracle, Oracle};
pub use point::{point_of, restrict, support, IndexSet, Point};
