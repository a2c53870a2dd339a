//! Benchmark sweeps over random monotone DNFs, emitted as CSV.

use std::io::Write;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::brute::{cert_complexity, cert_complexity_at, is_certificate, is_minimal, CheckMode};
use crate::certifier::{angluin_certify, binary_query_bound, certify_binary, Algorithm, CertifyResult};
use crate::combinatorics::mix_seed;
use crate::error::{Error, Result};
use crate::function::{random_monotone_dnf, MonotoneFunction, Representation};
use crate::oracle::CountingOracle;
use crate::point::Point;

pub const CSV_HEADER: &str =
    "seed,n,repr,algorithm,cert_size,C_f,C_f_x,queries_used,query_bound,valid,minimal,wall_time_us";

/// Up to this dimension records carry brute-force complexity and exhaustive checks.
pub const BRUTE_FORCE_MAX_N: usize = 14;

/// Random draws spent looking for an input with `f(x) = 0`.
const ZERO_INPUT_ATTEMPTS: usize = 64;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n_list: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub minterms: usize,
    pub width: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub seed: u64,
    pub n: usize,
    pub repr: Representation,
    pub algorithm: Algorithm,
    pub cert_size: usize,
    /// `C(f)`, or `-1` when not computed.
    pub c_f: i64,
    /// `C(f, x*)`, or `-1` when not computed.
    pub c_f_x: i64,
    pub queries_used: u64,
    pub query_bound: u64,
    pub valid: bool,
    pub minimal: bool,
    pub wall_time_us: u64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.seed,
            self.n,
            self.repr,
            self.algorithm,
            self.cert_size,
            self.c_f,
            self.c_f_x,
            self.queries_used,
            self.query_bound,
            self.valid,
            self.minimal,
            self.wall_time_us
        )
    }

    pub fn holds_invariants(&self) -> bool {
        self.valid
            && self.minimal
            && (self.c_f < 0 || self.cert_size as i64 <= self.c_f)
            && (self.algorithm != Algorithm::Binary || self.queries_used <= self.query_bound)
    }
}

fn record(
    f: &MonotoneFunction,
    seed: u64,
    x_star: &Point,
    c_f: i64,
    run: fn(&mut CountingOracle, &Point) -> Result<CertifyResult>,
) -> Result<BenchRecord> {
    let n = f.dimension();
    let mut oracle = CountingOracle::new(f.clone());
    let started = Instant::now();
    let result = run(&mut oracle, x_star)?;
    let wall_time_us = started.elapsed().as_micros() as u64;

    let cert = result.certificate.indices();
    let (mode, c_f_x) = if n <= BRUTE_FORCE_MAX_N {
        (CheckMode::Exhaustive, cert_complexity_at(f, x_star)?.value as i64)
    } else {
        (CheckMode::MonotoneFast, -1)
    };
    let valid = is_certificate(f, x_star, cert, mode)?;
    let minimal = valid && is_minimal(f, x_star, cert, mode)?;
    Ok(BenchRecord {
        seed,
        n,
        repr: f.representation(),
        algorithm: result.algorithm,
        cert_size: cert.len(),
        c_f,
        c_f_x,
        queries_used: result.queries_used,
        query_bound: binary_query_bound(cert.len(), n),
        valid,
        minimal,
        wall_time_us,
    })
}

/// Runs both certifiers on `𝟙ⁿ` and, when one turns up, on a random input
/// with `f(x) = 0`. Rows come out in `(n, trial)` order.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::new();
    for &n in &config.n_list {
        if n == 0 {
            return Err(Error::Contract("n must be positive".into()));
        }
        for trial in 0..config.trials {
            let seed = mix_seed(mix_seed(config.seed, n as u64), trial as u64);
            let f = random_monotone_dnf(n, config.minterms, config.width.clamp(1, n), seed)?;
            let c_f = if n <= BRUTE_FORCE_MAX_N {
                cert_complexity(&f)?.value as i64
            } else {
                -1
            };

            let mut inputs = vec![Point::ones(n)];
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, u64::MAX));
            if let Some(zero) = (0..ZERO_INPUT_ATTEMPTS)
                .map(|_| Point::random(n, &mut rng))
                .find(|x| f.eval(x) == 0.0)
            {
                inputs.push(zero);
            }

            for x_star in &inputs {
                records.push(record(&f, seed, x_star, c_f, certify_binary)?);
                records.push(record(&f, seed, x_star, c_f, angluin_certify)?);
            }
        }
    }
    Ok(records)
}

pub fn write_csv<W: Write>(records: &[BenchRecord], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

/// Fails with [`Error::Verification`] naming the first record that breaks an invariant.
pub fn check_records(records: &[BenchRecord]) -> Result<()> {
    match records.iter().find(|r| !r.holds_invariants()) {
        Some(bad) => Err(Error::Verification(format!("invariant violated: {}", bad.csv_row()))),
        None => Ok(()),
    }
}
