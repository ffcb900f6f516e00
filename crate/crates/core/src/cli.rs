//! The `skewspec` command line: one subcommand per analysis, each printing
//! a JSON report on stdout.
//!
//! Exit codes: 0 success, 1 negative analysis outcome (a validation
//! failure, or non-invariance under `--expect-invariant`), 2 usage or
//! input errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::charpoly::char_poly;
use crate::error::Error;
use crate::format::{parse_edge_list, parse_wdg, write_wdg};
use crate::graph::WeightedDigraph;
use crate::invariance::{brute_force_invariance, decide_invariance, invariant_char_poly, orientations_of_graph};
use crate::signing::{apply_signing, parse_signing_spec};
use crate::subdigraph::{enumerate_cycles, Cycle};
use crate::symmetry::{build_scaling_certificate, cycle_symmetry_up_to, SymmetryVerdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "skewspec", version, about = "Skew-signing invariance of weighted symmetric digraphs")]
pub struct Cli {
    /// Omit the elapsed time from reports, making them byte-reproducible.
    #[arg(long, global = true)]
    no_timing: bool,

    /// Refuse cycle and subdigraph enumeration above this many vertices.
    #[arg(long, global = true, default_value_t = 10)]
    max_vertices: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a wdg file describes a pwls digraph.
    Validate { file: PathBuf },
    /// Characteristic polynomial of the weighted matrix or one of its signings.
    Charpoly {
        file: PathBuf,
        /// `none`, `all-plus` or `bits:<01...>` (one bit per digon, 1 = plus).
        #[arg(long, default_value = "none")]
        signing: String,
    },
    /// Structural invariance decision with certificate or witness.
    Decide {
        file: PathBuf,
        #[arg(long)]
        expect_invariant: bool,
    },
    /// Exhaustive invariance check over every skew-signing.
    Brute {
        file: PathBuf,
        #[arg(long, env = "SKEWSPEC_CAP", default_value_t = crate::signing::DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        expect_invariant: bool,
    },
    /// List the simple directed cycles.
    Cycles {
        file: PathBuf,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Cycle-symmetry up to a length bound, with scaling certificate.
    Symmetry {
        file: PathBuf,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// The polynomial shared by all skew-signings.
    InvariantPoly { file: PathBuf },
    /// Skew-characteristic polynomials over all orientations of a graph.
    Orientations {
        edge_file: PathBuf,
        #[arg(long, env = "SKEWSPEC_CAP", default_value_t = crate::signing::DEFAULT_CAP)]
        cap: usize,
    },
    /// Convert an edge list to wdg (unit weights, or random ones with --seed).
    FromGraph {
        edge_file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    input_digest: String,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

/// SHA-256 of the canonical wdg serialization, hex encoded.
pub fn input_digest(d: &WeightedDigraph) -> String {
    hex::encode(Sha256::digest(write_wdg(d).as_bytes()))
}

enum Failure {
    Usage(String),
    Negative(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<WeightedDigraph, Failure> {
    parse_wdg(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn check_size(d: &WeightedDigraph, max: usize) -> Result<(), Failure> {
    if d.vertex_count() > max {
        return Err(Failure::Usage(format!(
            "{} vertices exceed --max-vertices {max}",
            d.vertex_count()
        )));
    }
    Ok(())
}

fn cycles_json(cycles: &[Cycle]) -> Value {
    Value::from(cycles.iter().map(Cycle::to_one_based).collect::<Vec<_>>())
}

struct Outcome {
    command: &'static str,
    digest: String,
    result: Value,
    negative: bool,
}

impl Outcome {
    fn new(command: &'static str, d: &WeightedDigraph, result: Value) -> Self {
        Self {
            command,
            digest: input_digest(d),
            result,
            negative: false,
        }
    }
}

enum Output {
    Report(Outcome),
    Text(String),
}

fn to_value<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let max_v = cli.max_vertices;
    let out = match &cli.command {
        Command::Validate { file } => {
            let d = load(file)?;
            let report = d.validate_pwls();
            let result = if report.is_ok() {
                json!({ "ok": true })
            } else {
                let violations: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
                json!({ "ok": false, "violations": violations })
            };
            let mut o = Outcome::new("validate", &d, result);
            o.negative = !report.is_ok();
            o
        }
        Command::Charpoly { file, signing } => {
            let d = load(file)?;
            let m = match parse_signing_spec(&d, signing)? {
                None => d.to_matrix(),
                Some(s) => apply_signing(&d, &s)?,
            };
            let p = char_poly(&m);
            let result = json!({ "signing": signing, "poly": to_value(p.to_json()), "text": p.to_string() });
            Outcome::new("charpoly", &d, result)
        }
        Command::Decide { file, expect_invariant } => {
            let d = load(file)?;
            check_size(&d, max_v)?;
            let v = decide_invariance(&d)?;
            let mut o = Outcome::new("decide", &d, to_value(v.to_json()));
            o.negative = *expect_invariant && !v.is_invariant();
            o
        }
        Command::Brute {
            file,
            cap,
            expect_invariant,
        } => {
            let d = load(file)?;
            let b = brute_force_invariance(&d, *cap)?;
            let mut o = Outcome::new("brute", &d, to_value(b.to_json()));
            o.negative = *expect_invariant && !b.invariant();
            o
        }
        Command::Cycles { file, max_len } => {
            let d = load(file)?;
            check_size(&d, max_v)?;
            let k = max_len.unwrap_or(d.vertex_count()).max(1);
            let cycles = enumerate_cycles(&d, k)?;
            let result = json!({ "max_len": k, "count": cycles.len(), "cycles": cycles_json(&cycles) });
            Outcome::new("cycles", &d, result)
        }
        Command::Symmetry { file, max_len } => {
            let d = load(file)?;
            check_size(&d, max_v)?;
            let q = max_len.unwrap_or(d.vertex_count()).max(2);
            let verdict = if q >= d.vertex_count() {
                match build_scaling_certificate(&d)? {
                    Ok(c) => SymmetryVerdict::Symmetric(Some(c)),
                    Err(w) => SymmetryVerdict::Asymmetric(crate::symmetry::AsymmetryWitness::Cycle(w)),
                }
            } else {
                cycle_symmetry_up_to(&d, q)?
            };
            let cert = verdict.to_json();
            let result = json!({
                "max_len": q,
                "cycle_symmetric": verdict.is_cycle_symmetric(),
                "mu": cert.mu,
                "witness": to_value(cert.witness),
            });
            Outcome::new("symmetry", &d, result)
        }
        Command::InvariantPoly { file } => {
            let d = load(file)?;
            check_size(&d, max_v)?;
            match invariant_char_poly(&d) {
                Ok(p) => {
                    let result = json!({ "poly": to_value(p.to_json()), "text": p.to_string() });
                    Outcome::new("invariant-poly", &d, result)
                }
                Err(e @ Error::NotInvariant(_)) => return Err(Failure::Negative(e.to_string())),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Orientations { edge_file, cap } => {
            let g = parse_edge_list(&read(edge_file)?).map_err(|e| Failure::Usage(format!("{}: {e}", edge_file.display())))?;
            let d = WeightedDigraph::from_graph(&g.edges, g.n)?;
            let s = orientations_of_graph(&g.edges, g.n, *cap)?;
            let polys: Vec<Value> = s.distinct_polys.iter().map(|p| to_value(p.to_json())).collect();
            let result = json!({
                "all_same": s.all_same,
                "distinct_poly_count": s.distinct_poly_count(),
                "distinct_polys": polys,
            });
            Outcome::new("orientations", &d, result)
        }
        Command::FromGraph { edge_file, seed } => {
            let g = parse_edge_list(&read(edge_file)?).map_err(|e| Failure::Usage(format!("{}: {e}", edge_file.display())))?;
            let text = match seed {
                None => write_wdg(&WeightedDigraph::from_graph(&g.edges, g.n)?),
                Some(s) => {
                    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*s);
                    let d = WeightedDigraph::from_graph_random(&g.edges, g.n, &mut rng)?;
                    format!("# random weights, seed {s}\n{}", write_wdg(&d))
                }
            };
            return Ok(Output::Text(text));
        }
    };
    Ok(Output::Report(out))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(Output::Text(t)) => {
            let _ = write!(stdout, "{t}");
            EXIT_OK
        }
        Ok(Output::Report(o)) => {
            let report = Report {
                command: o.command,
                input_digest: o.digest,
                result: o.result,
                elapsed_ms: (!cli.no_timing).then(|| start.elapsed().as_secs_f64() * 1e3),
            };
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            let _ = writeln!(stdout, "{text}");
            if o.negative {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            }
        }
        Err(Failure::Negative(m)) => {
            let _ = writeln!(stderr, "skewspec: {m}");
            EXIT_NEGATIVE
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "skewspec: error: {m}");
            EXIT_USAGE
        }
    }
}
