//! JSON function description files.
//!
//! ```json
//! {"n": 5, "repr": "dnf", "minterms": [[2, 4]]}
//! {"n": 2, "repr": "truth_table", "table": "0001"}
//! {"n": 6, "repr": "indicator", "k": 3, "P": [1, 4, 5]}
//! ```
//!
//! Indices are 1-based. Character `t` of `table` is `f` at the point whose
//! coordinate `i` equals bit `i-1` of `t`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{
    make_dnf, make_indicator, make_threshold, make_truth_table, make_weighted_real,
    MonotoneFunction,
};
use crate::point::IndexSet;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionDescription {
    pub n: usize,
    #[serde(flatten)]
    pub body: DescriptionBody,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "repr", rename_all = "snake_case")]
pub enum DescriptionBody {
    Dnf {
        minterms: Vec<Vec<usize>>,
    },
    TruthTable {
        table: String,
    },
    Threshold {
        k: usize,
    },
    Indicator {
        k: usize,
        #[serde(rename = "P")]
        planted: Vec<usize>,
    },
    WeightedReal {
        weights: Vec<f64>,
    },
}

impl FunctionDescription {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptions always serialize")
    }

    pub fn build(&self) -> Result<MonotoneFunction> {
        let n = self.n;
        match &self.body {
            DescriptionBody::Dnf { minterms } => {
                let terms = minterms
                    .iter()
                    .map(|t| IndexSet::new(n, t.iter().copied()))
                    .collect::<Result<Vec<_>>>()?;
                make_dnf(n, terms)
            }
            DescriptionBody::TruthTable { table } => {
                let bits = table
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::Parse(format!("invalid table character {other:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                make_truth_table(n, bits)
            }
            DescriptionBody::Threshold { k } => make_threshold(n, *k),
            DescriptionBody::Indicator { k, planted } => {
                make_indicator(n, *k, IndexSet::new(n, planted.iter().copied())?)
            }
            DescriptionBody::WeightedReal { weights } => make_weighted_real(n, weights.clone()),
        }
    }

    /// Describes a function built by one of the named constructors.
    /// Derived functions have no file form.
    pub fn describe(f: &MonotoneFunction) -> Option<Self> {
        let body = if let Some(m) = f.minterms() {
            DescriptionBody::Dnf {
                minterms: m.iter().map(|t| t.members().to_vec()).collect(),
            }
        } else if let Some(t) = f.truth_table() {
            DescriptionBody::TruthTable {
                table: t.iter().map(|&b| if b { '1' } else { '0' }).collect(),
            }
        } else if let Some(k) = f.threshold() {
            DescriptionBody::Threshold { k }
        } else if let Some((k, p)) = f.planted() {
            DescriptionBody::Indicator {
                k,
                planted: p.members().to_vec(),
            }
        } else {
            DescriptionBody::WeightedReal {
                weights: f.weights()?.to_vec(),
            }
        };
        Some(FunctionDescription { n: f.dimension(), body })
    }
}

pub fn parse_function(text: &str) -> Result<MonotoneFunction> {
    FunctionDescription::parse(text)?.build()
}
