use std::fmt;

use crate::point::{IndexSet, Point};

/// A set of coordinates of `reference` whose values fix `f(reference)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    indices: IndexSet,
    reference: Point,
    value: f64,
}

impl Certificate {
    /// `indices` must lie within the dimension of `reference`.
    pub fn new(indices: IndexSet, reference: Point, value: f64) -> Self {
        assert!(
            indices.iter().all(|i| i <= reference.dimension()),
            "certificate indices exceed the reference dimension"
        );
        Certificate {
            indices,
            reference,
            value,
        }
    }

    pub fn indices(&self) -> &IndexSet {
        &self.indices
    }

    pub fn reference(&self) -> &Point {
        &self.reference
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `reference|_indices`.
    pub fn restriction(&self) -> Vec<(usize, bool)> {
        self.indices
            .iter()
            .map(|i| (i, self.reference.get(i)))
            .collect()
    }

    /// Whether `y` agrees with the reference on every certified coordinate.
    pub fn is_consistent(&self, y: &Point) -> bool {
        y.dimension() == self.reference.dimension()
            && self.indices.iter().all(|i| y.get(i) == self.reference.get(i))
    }
}

/// Coordinates fixed to 1 print bare, coordinates fixed to 0 print as `i=0`.
impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, bit)) in self.restriction().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            if bit {
                write!(f, "{i}")?;
            } else {
                write!(f, "{i}=0")?;
            }
        }
        f.write_str("}")
    }
}
