//! The k-indicator family and the shortest-certificate search game.
//!
//! Every `f_P` has `C(f_P, 𝟙ⁿ) = k`, and the only size-`k` certificate at
//! `𝟙ⁿ` is `P` itself. Probing size-`k` subsets in a uniformly random order
//! hits `P` at a uniformly distributed position, so the expected cost is
//! `(C(n,k)+1)/2` queries.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::Certificate;
use crate::combinatorics::{binomial, mix_seed, unrank_combination};
use crate::error::{Error, Result};
use crate::function::{make_indicator, MonotoneFunction, RangeKind};
use crate::oracle::{CountingOracle, Oracle};
use crate::point::{IndexSet, Point};

/// Largest subset family that will be materialized for shuffled probing.
pub const MAX_SUBSETS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetOrder {
    Lexicographic,
    /// Uniform random permutation drawn from `seed`.
    Shuffled { seed: u64 },
}

/// `f_P` for `1 <= k <= n-1` and `|P| = k`.
pub fn make_fk(n: usize, k: usize, planted: IndexSet) -> Result<MonotoneFunction> {
    if k == 0 || k >= n {
        return Err(Error::Contract(format!("k must lie in 1..={}, got {k}", n.saturating_sub(1))));
    }
    make_indicator(n, k, planted)
}

fn subset_count(m: usize, k: usize) -> Result<u64> {
    binomial(m as u64, k as u64)
        .filter(|&c| c <= MAX_SUBSETS)
        .ok_or_else(|| Error::Capacity(format!("C({m},{k}) exceeds {MAX_SUBSETS}")))
}

/// Probes `f(x_S)` for size-`k` subsets `S ⊆ S_{x*}` in the given order and
/// returns the first hit with the number of queries issued.
///
/// `f(x*) = 1` is a precondition and is not queried.
pub fn exhaustive_shortest_cert<O: Oracle + ?Sized>(
    oracle: &mut O,
    x_star: &Point,
    k: usize,
    order: SubsetOrder,
) -> Result<(Certificate, u64)> {
    if oracle.kind() != RangeKind::Boolean {
        return Err(Error::Kind);
    }
    if x_star.dimension() != oracle.dimension() {
        return Err(Error::Dimension {
            expected: oracle.dimension(),
            found: x_star.dimension(),
        });
    }
    let n = x_star.dimension();
    let pool = x_star.coordinates_equal_to(true);
    let start = oracle.queries();

    let probe = |oracle: &mut O, members: Vec<usize>| -> Result<Option<Certificate>> {
        let mut x = Point::zeros(n);
        for &i in &members {
            x.set(i, true);
        }
        Ok((oracle.query(&x)? != 0.0)
            .then(|| Certificate::new(IndexSet::from_sorted(n, members), x_star.clone(), 1.0)))
    };

    match order {
        SubsetOrder::Lexicographic => {
            for combo in pool.iter().copied().combinations(k) {
                if let Some(c) = probe(oracle, combo)? {
                    return Ok((c, oracle.queries() - start));
                }
            }
        }
        SubsetOrder::Shuffled { seed } => {
            let total = subset_count(pool.len(), k)? as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut ranks: Vec<u32> = (0..total as u32).collect();
            // Forward Fisher-Yates, drawn lazily so a hit stops the shuffle.
            for i in 0..total {
                let j = rng.gen_range(i..total);
                ranks.swap(i, j);
                let members = unrank_combination(ranks[i] as u64, pool.len(), k)
                    .into_iter()
                    .map(|p| pool[p])
                    .collect();
                if let Some(c) = probe(oracle, members)? {
                    return Ok((c, oracle.queries() - start));
                }
            }
        }
    }
    Err(Error::Exhausted {
        k,
        queries: oracle.queries() - start,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub trial: usize,
    pub seed: u64,
    pub planted: IndexSet,
    pub queries: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HardnessTrialStats {
    pub n: usize,
    pub k: usize,
    pub trials: usize,
    pub mean_queries: f64,
    pub min_queries: u64,
    pub max_queries: u64,
    pub total_subsets: u64,
    pub seed: u64,
}

impl HardnessTrialStats {
    pub fn from_outcomes(n: usize, k: usize, seed: u64, total_subsets: u64, outcomes: &[TrialOutcome]) -> Self {
        let sum: u64 = outcomes.iter().map(|o| o.queries).sum();
        HardnessTrialStats {
            n,
            k,
            trials: outcomes.len(),
            mean_queries: sum as f64 / outcomes.len().max(1) as f64,
            min_queries: outcomes.iter().map(|o| o.queries).min().unwrap_or(0),
            max_queries: outcomes.iter().map(|o| o.queries).max().unwrap_or(0),
            total_subsets,
            seed,
        }
    }

    /// Expected cost of the uniformly shuffled searcher, `(C(n,k)+1)/2`.
    pub fn reference_mean(&self) -> f64 {
        (self.total_subsets as f64 + 1.0) / 2.0
    }
}

/// One trial per index: plant a uniform `P`, shuffle the probe order
/// independently, and count the queries needed to find `P` at `𝟙ⁿ`.
pub fn hardness_trials(n: usize, k: usize, trials: usize, seed: u64) -> Result<Vec<TrialOutcome>> {
    if trials == 0 {
        return Err(Error::Contract("trials must be at least 1".into()));
    }
    let total = subset_count(n, k)?;
    (0..trials)
        .map(|trial| {
            let trial_seed = mix_seed(seed, trial as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
            let rank = rng.gen_range(0..total);
            let planted = IndexSet::new(n, unrank_combination(rank, n, k).into_iter().map(|p| p + 1))?;
            let f = make_fk(n, k, planted.clone())?;
            let mut oracle = CountingOracle::new(f);
            let order = SubsetOrder::Shuffled { seed: rng.gen() };
            let (cert, queries) = exhaustive_shortest_cert(&mut oracle, &Point::ones(n), k, order)?;
            debug_assert_eq!(cert.indices(), &planted);
            Ok(TrialOutcome {
                trial,
                seed: trial_seed,
                planted,
                queries,
            })
        })
        .collect()
}

pub fn hardness_experiment(n: usize, k: usize, trials: usize, seed: u64) -> Result<HardnessTrialStats> {
    let outcomes = hardness_trials(n, k, trials, seed)?;
    Ok(HardnessTrialStats::from_outcomes(n, k, seed, subset_count(n, k)?, &outcomes))
}

/// Queries spent by the lexicographic searcher when `P` is the last subset.
pub fn lexicographic_worst_case(n: usize, k: usize) -> Result<u64> {
    let planted = IndexSet::new(n, (n - k + 1)..=n)?;
    let mut oracle = CountingOracle::new(make_fk(n, k, planted)?);
    let (_, queries) = exhaustive_shortest_cert(&mut oracle, &Point::ones(n), k, SubsetOrder::Lexicographic)?;
    Ok(queries)
}
