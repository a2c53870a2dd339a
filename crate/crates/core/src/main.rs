use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use monocert::adversary::{hardness_trials, lexicographic_worst_case, HardnessTrialStats};
use monocert::bench::{check_records, run_bench, write_csv, BenchConfig, BRUTE_FORCE_MAX_N};
use monocert::brute::{cert_complexity, cert_complexity_at, is_certificate, is_minimal, CheckMode};
use monocert::combinatorics::binomial;
use monocert::description::parse_function;
use monocert::{
    angluin_certify, certify_binary, certify_real, CountingOracle, Error, IndexSet,
    MonotoneFunction, Point, Result,
};

#[derive(Parser)]
#[command(name = "monocert", version, about = "Certify values of monotone functions with few queries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Binary,
    Angluin,
}

#[derive(Subcommand)]
enum Command {
    /// Find a certificate for f at an input.
    Certify {
        function: PathBuf,
        input: String,
        /// Treat f as real-valued and certify with two thresholded runs.
        #[arg(long)]
        real: bool,
        #[arg(long, value_enum, default_value = "binary")]
        algorithm: AlgorithmArg,
        /// Check the result by brute force (n <= 14).
        #[arg(long)]
        verify: bool,
    },
    /// Check whether a coordinate set is a (minimal) certificate.
    Verify {
        function: PathBuf,
        input: String,
        /// Comma-separated 1-based coordinates; empty for the empty set.
        indices: String,
    },
    /// Certificate complexity C(f), or C(f,x) when an input is given.
    Complexity {
        function: PathBuf,
        input: Option<String>,
    },
    /// Sweep random monotone DNFs and emit CSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        minterms: usize,
        #[arg(long, default_value_t = 3)]
        width: usize,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shortest-certificate search on the k-indicator family.
    Adversary {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-trial CSV destination.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<MonotoneFunction> {
    parse_function(&fs::read_to_string(path)?)
}

fn load_input(f: &MonotoneFunction, text: &str) -> Result<Point> {
    let x: Point = text.parse()?;
    if x.dimension() != f.dimension() {
        return Err(Error::Dimension {
            expected: f.dimension(),
            found: x.dimension(),
        });
    }
    Ok(x)
}

fn parse_indices(n: usize, text: &str) -> Result<IndexSet> {
    let members = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|e| Error::Parse(format!("index {s:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    IndexSet::new(n, members)
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn certify(function: &Path, input: &str, real: bool, algorithm: AlgorithmArg, verify: bool) -> Result<()> {
    let f = load(function)?;
    let x = load_input(&f, input)?;
    let mut oracle = CountingOracle::new(f.clone());
    let result = match (real, algorithm) {
        (true, _) => certify_real(&mut oracle, &x)?,
        (false, AlgorithmArg::Binary) => certify_binary(&mut oracle, &x)?,
        (false, AlgorithmArg::Angluin) => angluin_certify(&mut oracle, &x)?,
    };
    let cert = &result.certificate;
    println!("certificate: {}, value: {}", cert, cert.value());
    println!("queries: {}", result.queries_used);
    if verify {
        if f.dimension() > BRUTE_FORCE_MAX_N {
            println!("verify: skipped (n > {BRUTE_FORCE_MAX_N})");
            return Ok(());
        }
        let valid = is_certificate(&f, &x, cert.indices(), CheckMode::Exhaustive)?;
        println!("valid: {valid}");
        if !valid {
            return Err(Error::Verification(format!("{cert} is not a certificate")));
        }
        // The union of the two thresholded certificates need not be minimal.
        if !real {
            let minimal = is_minimal(&f, &x, cert.indices(), CheckMode::Exhaustive)?;
            println!("minimal: {minimal}");
            if !minimal {
                return Err(Error::Verification(format!("{cert} is not minimal")));
            }
        }
    }
    Ok(())
}

fn verify(function: &Path, input: &str, indices: &str) -> Result<()> {
    let f = load(function)?;
    let x = load_input(&f, input)?;
    let set = parse_indices(f.dimension(), indices)?;
    let valid = is_certificate(&f, &x, &set, CheckMode::Exhaustive)?;
    println!("is_certificate: {valid}");
    if valid {
        println!("is_minimal: {}", is_minimal(&f, &x, &set, CheckMode::Exhaustive)?);
    } else {
        println!("is_minimal: n/a");
    }
    Ok(())
}

fn complexity(function: &Path, input: Option<&str>) -> Result<()> {
    let f = load(function)?;
    match input {
        Some(text) => {
            let x = load_input(&f, text)?;
            let report = cert_complexity_at(&f, &x)?;
            println!("C(f,x) = {}", report.value);
            println!("x: {x}");
            println!("witness: {}", report.witness);
        }
        None => {
            let report = cert_complexity(&f)?;
            println!("C(f) = {}", report.value);
            println!("x: {}", report.input);
            println!("witness: {}", report.witness);
        }
    }
    Ok(())
}

fn bench(config: BenchConfig, out: Option<&Path>) -> Result<()> {
    let records = run_bench(&config)?;
    let mut sink = open_output(out)?;
    write_csv(&records, &mut sink)?;
    sink.flush()?;
    if let Some(p) = out {
        eprintln!("wrote {} rows to {}", records.len(), p.display());
    }
    check_records(&records)
}

fn adversary(n: usize, k: usize, trials: usize, seed: u64, out: Option<&Path>) -> Result<()> {
    let outcomes = hardness_trials(n, k, trials, seed)?;
    let total = binomial(n as u64, k as u64).expect("bounded by hardness_trials");
    let stats = HardnessTrialStats::from_outcomes(n, k, seed, total, &outcomes);
    println!("n = {n}, k = {k}, trials = {trials}, seed = {seed}");
    println!("C(n,k) = {total}");
    println!(
        "mean_queries = {:.3} (reference (C(n,k)+1)/2 = {:.1})",
        stats.mean_queries,
        stats.reference_mean()
    );
    println!("min_queries = {}, max_queries = {}", stats.min_queries, stats.max_queries);
    println!("lexicographic worst case = {}", lexicographic_worst_case(n, k)?);
    if let Some(p) = out {
        let mut sink = open_output(Some(p))?;
        writeln!(sink, "trial,seed,planted,queries")?;
        for o in &outcomes {
            let planted = o.planted.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
            writeln!(sink, "{},{},{},{}", o.trial, o.seed, planted, o.queries)?;
        }
        sink.flush()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Certify {
            function,
            input,
            real,
            algorithm,
            verify: check,
        } => certify(&function, &input, real, algorithm, check),
        Command::Verify {
            function,
            input,
            indices,
        } => verify(&function, &input, &indices),
        Command::Complexity { function, input } => complexity(&function, input.as_deref()),
        Command::Bench {
            n_list,
            trials,
            seed,
            minterms,
            width,
            out,
        } => bench(
            BenchConfig {
                n_list,
                trials,
                seed,
                minterms,
                width,
            },
            out.as_deref(),
        ),
        Command::Adversary {
            n,
            k,
            trials,
            seed,
            out,
        } => adversary(n, k, trials, seed, out.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
