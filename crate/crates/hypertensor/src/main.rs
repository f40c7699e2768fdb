//! Thin command-line front end. Results go to stdout as deterministic JSON
//! or CSV; diagnostics go to stderr. Exit codes: 2 parse error, 3 invalid
//! parameters, 4 non-convergence, 5 Laplacian on non-odd-bipartite input,
//! 6 failed verification assertion.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hypertensor::report::{
    assertion_lines, eigenpair_json, exit_code_for, monotonicity_csv, round_sig, run_report,
    EXIT_ASSERTION,
};
use hypertensor::{io, Error, Result, SolverConfig};

#[derive(Parser)]
#[command(name = "hypertensor", version, about = "Largest H-eigenvalues of uniform hypergraph tensors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TensorKind {
    A,
    Q,
    L,
}

#[derive(Subcommand)]
enum Command {
    /// Build the generalized power hypergraph G^{k,s} of a graph.
    GenPower {
        /// Graph file: first line "n m", then m lines "u v", 0-based.
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        s: usize,
        /// Hypergraph JSON output path; the labeling goes to <out>.labeling.json.
        #[arg(long)]
        out: PathBuf,
    },
    /// Largest H-eigenvalue of the A, Q or L tensor of a hypergraph.
    Radius {
        /// Hypergraph JSON file.
        #[arg(long, conflicts_with_all = ["graph", "k", "s", "quotient"])]
        hypergraph: Option<PathBuf>,
        /// Graph file; builds G^{k,s} first.
        #[arg(long, requires = "k", requires = "s")]
        graph: Option<PathBuf>,
        #[arg(short)]
        k: Option<usize>,
        #[arg(short)]
        s: Option<usize>,
        /// Solve on the quotient B^{k,s} and lift the eigenvector (Q only).
        #[arg(long)]
        quotient: bool,
        #[arg(long, value_enum, default_value = "q")]
        tensor: TensorKind,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 1_000_000)]
        max_iter: usize,
        /// Power-iteration shift; defaults to 0 for Q-type, 1 for A-type.
        #[arg(long)]
        shift: Option<f64>,
    },
    /// Scan lambda(B^{k,s}) over (k, s) grids and verify the monotonicity laws.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Inclusive range A:B:STEP (or a single value).
        #[arg(long, value_name = "A:B:STEP")]
        k_range: String,
        /// Inclusive range A:B:STEP (or a single value).
        #[arg(long, value_name = "A:B:STEP")]
        s_range: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Closed-form spectral radius for a d-regular seed: largest root of
    /// (x-d)(x-1)^((k-2s)/(2s)) = d.
    RegularRoot {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        s: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e) as u8)
        }
    }
}

fn parse_range(spec: &str) -> Result<Vec<usize>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad range component '{s}' in '{spec}'")))
    };
    match parts.as_slice() {
        [single] => Ok(vec![parse(single)?]),
        [a, b, step] => {
            let (a, b, step) = (parse(a)?, parse(b)?, parse(step)?);
            if step == 0 {
                return Err(Error::Parse(format!("zero step in range '{spec}'")));
            }
            Ok((a..=b).step_by(step).collect())
        }
        _ => Err(Error::Parse(format!(
            "range '{spec}' must be A:B:STEP or a single value"
        ))),
    }
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::GenPower { graph, k, s, out } => {
            let started = Instant::now();
            let g = io::read_graph_file(&graph)?;
            let (h, labeling) = hypertensor::build_generalized_power(&g, k, s)?;

            let hypergraph_json = serde_json::to_string_pretty(&io::hypergraph_to_json(&h))?;
            std::fs::write(&out, hypergraph_json + "\n")?;
            let labeling_path = labeling_path(&out);
            let labeling_json = serde_json::to_string_pretty(&serde_json::to_value(&labeling)?)?;
            std::fs::write(&labeling_path, labeling_json + "\n")?;

            let report = run_report(
                "gen-power",
                json!({"graph": graph.display().to_string(), "k": k, "s": s}),
                json!({
                    "hypergraph_file": out.display().to_string(),
                    "labeling_file": labeling_path.display().to_string(),
                    "n": h.n(),
                    "m": h.m(),
                    "k": h.k(),
                }),
                started.elapsed().as_millis(),
            );
            println!("{report}");
            Ok(0)
        }
        Command::Radius {
            hypergraph,
            graph,
            k,
            s,
            quotient,
            tensor,
            tol,
            max_iter,
            shift,
        } => {
            let started = Instant::now();
            let cfg = SolverConfig {
                tol,
                max_iter,
                shift,
            };
            let tensor_name = match tensor {
                TensorKind::A => "A",
                TensorKind::Q => "Q",
                TensorKind::L => "L",
            };

            if quotient && tensor != TensorKind::Q {
                return Err(Error::InvalidConfig(
                    "--quotient applies to the signless Laplacian (--tensor q) only".into(),
                ));
            }

            let (h, seed) = match (&hypergraph, &graph) {
                (Some(path), None) => (io::read_hypergraph_file(path)?, None),
                (None, Some(path)) => {
                    let g = io::read_graph_file(path)?;
                    let (k, s) = (k.unwrap(), s.unwrap());
                    let (h, _) = hypertensor::build_generalized_power(&g, k, s)?;
                    (h, Some((g, k, s)))
                }
                _ => {
                    return Err(Error::InvalidConfig(
                        "pass exactly one of --hypergraph or --graph with -k and -s".into(),
                    ))
                }
            };

            let mut inputs = json!({
                "tensor": tensor_name,
                "tol": tol,
                "n": h.n(),
                "m": h.m(),
                "k": h.k(),
            });
            if let Some((_, k, s)) = &seed {
                inputs["power_k"] = json!(k);
                inputs["power_s"] = json!(s);
            }

            let outputs = if quotient {
                let (g, k, s) = seed.expect("--quotient requires --graph");
                let (pair, lifted, lifted_residual) =
                    hypertensor::quotient_radius_lifted(&g, k, s, &cfg)?;
                json!({
                    "eigenpair": eigenpair_json(&pair),
                    "quotient_dim": pair.vector.len(),
                    "lifted_vector": lifted.iter().map(|&v| json!(round_sig(v, 12))).collect::<Vec<_>>(),
                    "lifted_residual": round_sig(lifted_residual, 12),
                })
            } else {
                match tensor {
                    TensorKind::A => {
                        json!({"eigenpair": eigenpair_json(&hypertensor::adjacency_radius(&h, &cfg)?)})
                    }
                    TensorKind::Q => {
                        json!({"eigenpair": eigenpair_json(&hypertensor::signless_radius(&h, &cfg)?)})
                    }
                    TensorKind::L => {
                        let (pair, flipped) =
                            hypertensor::laplacian_radius_odd_bipartite(&h, &cfg)?;
                        json!({
                            "eigenpair": eigenpair_json(&pair),
                            "signed_vector": flipped.iter().map(|&v| json!(round_sig(v, 12))).collect::<Vec<_>>(),
                        })
                    }
                }
            };

            let report = run_report("radius", inputs, outputs, started.elapsed().as_millis());
            println!("{report}");
            Ok(0)
        }
        Command::Verify {
            graph,
            k_range,
            s_range,
            tol,
        } => {
            let g = io::read_graph_file(&graph)?;
            let ks = parse_range(&k_range)?;
            let ss = parse_range(&s_range)?;
            let cfg = SolverConfig {
                tol,
                ..SolverConfig::default()
            };
            let report = hypertensor::verify_monotonicity(&g, &ks, &ss, &cfg)?;
            print!("{}", monotonicity_csv(&report));
            print!("{}", assertion_lines(&report));
            if report.all_passed() {
                Ok(0)
            } else {
                Ok(EXIT_ASSERTION)
            }
        }
        Command::RegularRoot { d, k, s } => {
            let started = Instant::now();
            let (root, bracket) = hypertensor::regular_radius_bracketed(d, k, s)?;
            let report = run_report(
                "regular-root",
                json!({"d": d, "k": k, "s": s}),
                json!({
                    "root": round_sig(root, 12),
                    "bracket": [round_sig(bracket.0, 12), round_sig(bracket.1, 12)],
                }),
                started.elapsed().as_millis(),
            );
            println!("{report}");
            Ok(0)
        }
    }
}

fn labeling_path(out: &std::path::Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".labeling.json");
    out.with_file_name(name)
}
