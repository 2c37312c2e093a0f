//! Command-line front end: parse matroid or permutation inputs, dispatch
//! to the engine, render reports and traces.
//!
//! Exit codes: 0 success; 1 domain errors (not a matroid, not a positroid,
//! empty product); 2 parse or usage errors; 3 oracle mismatch under
//! `--check`.

mod input;

use clap::{Parser, Subcommand, ValueEnum};
use ecodim::*;
use input::{parse_input, parse_partition, Parsed};
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(String),
    Mismatch(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Domain(m) | CliError::Mismatch(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "ecodim",
    about = "Matroid invariants: expected codimension, positroids, and Schubert expansions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    /// Full power set
    All,
    /// All intervals [i, j]
    Intervals,
    /// All cyclic intervals
    Cyclic,
    /// Sets with connected restriction and contraction
    Flacets,
}

impl FamilyKind {
    fn name(self) -> &'static str {
        match self {
            FamilyKind::All => "all",
            FamilyKind::Intervals => "intervals",
            FamilyKind::Cyclic => "cyclic",
            FamilyKind::Flacets => "flacets",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Expected codimension of a matroid over a set family
    Ec {
        /// Input file; `-` or absent reads stdin
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FamilyKind::All)]
        family: FamilyKind,
        #[arg(long)]
        json: bool,
    },
    /// Positroid recognition, cyclic rank matrix, affine permutation
    Positroid {
        file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// The valuative polynomial s_M(x, y, z)
    Spoly {
        file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Tutte polynomial t_M(x, y) = s_M(x-1, y-1, 0)
    Tutte {
        file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Expand sigma_lambda * sigma_mu in G(k, n) through shifts
    Lr {
        k: usize,
        n: usize,
        lambda: String,
        /// Literal separator `x`
        sep: String,
        mu: String,
        /// Render the degeneration tree
        #[arg(long)]
        trace: bool,
        /// Cross-check against the tableau oracle (exit 3 on mismatch)
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Render the full degeneration tree of a Schubert product
    ShiftTrace {
        k: usize,
        n: usize,
        lambda: String,
        sep: String,
        mu: String,
    },
    /// Run the pipeline and the oracle side by side
    Check {
        k: usize,
        n: usize,
        lambda: String,
        sep: String,
        mu: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_input(file: Option<PathBuf>) -> Result<Parsed, CliError> {
    let text = match file {
        Some(ref p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Parse(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    parse_input(&text)
}

fn subset_key(s: Subset) -> String {
    s.to_string()
}

fn family_of(kind: FamilyKind, m: &Matroid) -> Result<SetFamily, CliError> {
    match kind {
        FamilyKind::All => Ok(SetFamily::power_set(m.n())),
        FamilyKind::Intervals => Ok(SetFamily::intervals(m.n())),
        FamilyKind::Cyclic => Ok(SetFamily::cyclic_intervals(m.n())),
        FamilyKind::Flacets => flacets(m).map_err(|e| CliError::Domain(e.to_string())),
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Ec { file, family, json } => {
            let m = read_input(file)?.into_matroid()?;
            let fam = family_of(family, &m)?;
            let size = fam.len();
            let report = ec_report(&m, fam);
            if json {
                let mut a = serde_json::Map::new();
                let mut b = serde_json::Map::new();
                for (idx, &s) in report.family.sets().iter().enumerate() {
                    if report.a[idx] != 0 {
                        a.insert(subset_key(s), json!(report.a[idx]));
                    }
                    if report.b[idx] != 0 {
                        b.insert(subset_key(s), json!(report.b[idx]));
                    }
                }
                println!(
                    "{}",
                    json!({
                        "n": m.n(),
                        "k": m.k(),
                        "family": family.name(),
                        "ec": report.ec,
                        "a": a,
                        "b": b,
                    })
                );
            } else {
                println!("n = {}  k = {}", m.n(), m.k());
                println!("family: {} ({} sets)", family.name(), size);
                println!("ec = {}", report.ec);
            }
            Ok(())
        }
        Command::Positroid { file, json } => {
            let m = read_input(file)?.into_matroid()?;
            let crm = CyclicRankMatrix::from_matroid(&m);
            if !is_positroid(&m) {
                if json {
                    println!("{}", json!({ "n": m.n(), "k": m.k(), "positroid": false }));
                } else {
                    println!("n = {}  k = {}", m.n(), m.k());
                    print!("{crm}");
                    println!("not a positroid");
                }
                return Err(CliError::Domain("not a positroid".to_string()));
            }
            let pi = affine_permutation(&crm).map_err(|e| CliError::Domain(e.to_string()))?;
            let ec_value = positroid_ec(&m).map_err(|e| CliError::Domain(e.to_string()))?;
            if json {
                println!(
                    "{}",
                    json!({
                        "n": m.n(),
                        "k": m.k(),
                        "positroid": true,
                        "pi": pi.window(),
                        "length": pi.length(),
                        "ec": ec_value,
                    })
                );
            } else {
                println!("n = {}  k = {}", m.n(), m.k());
                print!("{crm}");
                println!("pi = {pi}");
                println!("l(pi) = {}", pi.length());
                println!("ec = {ec_value}");
            }
            Ok(())
        }
        Command::Spoly { file, json } => {
            let m = read_input(file)?.into_matroid()?;
            let s = s_polynomial(&m);
            if json {
                let terms: Vec<_> = s
                    .terms()
                    .map(|(&(x, y, z), &c)| json!({"x": x, "y": y, "z": z, "coeff": c}))
                    .collect();
                println!(
                    "{}",
                    json!({"n": m.n(), "k": m.k(), "s": s.to_string(), "terms": terms})
                );
            } else {
                println!("n = {}  k = {}", m.n(), m.k());
                println!("s = {s}");
            }
            Ok(())
        }
        Command::Tutte { file, json } => {
            let m = read_input(file)?.into_matroid()?;
            let t = tutte_polynomial(&m);
            if json {
                let terms: Vec<_> = t
                    .terms()
                    .map(|(&(x, y), &c)| json!({"x": x, "y": y, "coeff": c}))
                    .collect();
                println!(
                    "{}",
                    json!({"n": m.n(), "k": m.k(), "t": t.to_string(), "terms": terms})
                );
            } else {
                println!("n = {}  k = {}", m.n(), m.k());
                println!("t = {t}");
            }
            Ok(())
        }
        Command::Lr { k, n, lambda, sep, mu, trace, check, json } => {
            let (lambda, mu) = lr_args(k, n, &lambda, &sep, &mu)?;
            let (expansion, shift_trace) = match lr_expand(&lambda, &mu, k, n) {
                Ok(out) => out,
                Err(IrmError::EmptyIntersection) => {
                    return Err(CliError::Domain(
                        "empty product: every coefficient vanishes in this box".to_string(),
                    ))
                }
                Err(e) => return Err(CliError::Domain(e.to_string())),
            };
            if trace {
                print!("{shift_trace}");
            }
            if json {
                let terms: Vec<_> = expansion
                    .iter()
                    .map(|(p, mult)| json!({"partition": p.parts(), "multiplicity": mult}))
                    .collect();
                println!(
                    "{}",
                    json!({
                        "k": k,
                        "n": n,
                        "lambda": lambda.parts(),
                        "mu": mu.parts(),
                        "expansion": terms,
                    })
                );
            } else {
                println!("{expansion}");
            }
            if check {
                let oracle = schur_product_in_box(&lambda, &mu, k, n);
                if oracle == expansion {
                    println!("check: ok");
                } else {
                    println!("oracle: {oracle}");
                    return Err(CliError::Mismatch(
                        "pipeline and oracle disagree".to_string(),
                    ));
                }
            }
            Ok(())
        }
        Command::ShiftTrace { k, n, lambda, sep, mu } => {
            let (lambda, mu) = lr_args(k, n, &lambda, &sep, &mu)?;
            match lr_expand(&lambda, &mu, k, n) {
                Ok((expansion, trace)) => {
                    print!("{trace}");
                    println!("{expansion}");
                    Ok(())
                }
                Err(IrmError::EmptyIntersection) => Err(CliError::Domain(
                    "empty product: every coefficient vanishes in this box".to_string(),
                )),
                Err(e) => Err(CliError::Domain(e.to_string())),
            }
        }
        Command::Check { k, n, lambda, sep, mu } => {
            let (lambda, mu) = lr_args(k, n, &lambda, &sep, &mu)?;
            let oracle = schur_product_in_box(&lambda, &mu, k, n);
            let pipeline = match lr_expand(&lambda, &mu, k, n) {
                Ok((expansion, _)) => expansion,
                Err(IrmError::EmptyIntersection) => SchubertExpansion::new(),
                Err(e) => return Err(CliError::Domain(e.to_string())),
            };
            println!("pipeline: {pipeline}");
            println!("oracle:   {oracle}");
            if pipeline == oracle {
                println!("check: ok");
                Ok(())
            } else {
                Err(CliError::Mismatch("pipeline and oracle disagree".to_string()))
            }
        }
    }
}

fn lr_args(
    k: usize,
    n: usize,
    lambda: &str,
    sep: &str,
    mu: &str,
) -> Result<(Partition, Partition), CliError> {
    if k < 1 || n < k || n > 16 {
        return Err(CliError::Parse(format!("need 1 <= k <= n <= 16, got k={k} n={n}")));
    }
    if sep != "x" {
        return Err(CliError::Parse(format!("expected literal `x` between partitions, got `{sep}`")));
    }
    Ok((parse_partition(lambda, k, n)?, parse_partition(mu, k, n)?))
}
