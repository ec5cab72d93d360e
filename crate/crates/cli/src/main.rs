//! `ramsey-lab`: batch front end for the chorded-cycle Ramsey laboratory.
//!
//! Exit codes: 0 success, 2 budget exceeded, 3 invalid input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use ramsey_cli::commands::{
    cmd_certify, cmd_classify, cmd_constants, cmd_construct, cmd_embed_chain, cmd_prepare,
    cmd_ramsey, load_coloring, parse_kind, CommandOutput, EmbedChainArgs, RamseyArgs,
};
use ramsey_cli::manifest::RunManifest;
use ramsey_cli::{sweep, CliError, CliResult};
use ramsey_core::machinery::ParameterInputs;
use serde_json::json;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "ramsey-lab", version, about = "Ramsey numbers of cycles with chords: exact small cases, extremal certificates, host preparation, and regular-pair embedding demos")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Directory for result, witness, checkpoint, and manifest files
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Ramsey number of a pattern by exhaustive arrowing search
    Ramsey {
        /// Pattern: chord shorthand (C6+0-3), graph6, or a JSON file
        #[arg(long)]
        pattern: String,
        /// Largest board to try
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_seconds: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Resume from a checkpoint file written by an earlier budgeted run
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Structural classification: bipartiteness, almost-bipartite index,
    /// degrees, chord count
    Classify {
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
    },
    /// Emit one of the extremal colorings
    Construct {
        /// even | odd | k-part
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Certify that a coloring avoids a monochromatic pattern
    Certify {
        /// Construction kind (even | odd | k-part), or use --coloring
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// JSON file with a coloring ({"N": .., "red_edges": [..]})
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        pattern: String,
        /// search | structural
        #[arg(long, default_value = "structural")]
        mode: String,
    },
    /// Evaluate the parameter chain in log space
    Constants {
        #[arg(long)]
        delta: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1.5)]
        c2: f64,
        #[arg(long, default_value_t = 1e4)]
        m_reg: f64,
        #[arg(long, default_value_t = 1e6)]
        n_reg: f64,
        #[arg(long, default_value_t = 1e6)]
        n_even: f64,
        #[arg(long, default_value_t = 1e6)]
        n_pair_path: f64,
    },
    /// Decompose a chorded cycle into core plus odd connectors
    Prepare {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        z: usize,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
    },
    /// Allocate and embed anchored odd paths across a seeded cluster chain
    EmbedChain {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        cluster_size: usize,
        #[arg(long)]
        density: f64,
        /// Comma-separated odd path lengths, e.g. 19,21,19
        #[arg(long)]
        lengths: String,
        #[arg(long, default_value_t = 0.004)]
        eps: f64,
        /// Epsilon for the sampled regularity evidence
        #[arg(long, default_value_t = 0.1)]
        check_eps: f64,
        /// Seed for the host and the sampled regularity evidence (required:
        /// all randomized subcommands are explicitly seeded)
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2000)]
        samples: u64,
    },
    /// Classify, certify, and compute each case; compare to the plain cycle
    SweepTheorem {
        /// Comma-separated chord shorthands, e.g. C5,C6+0-2,C6+0-3
        #[arg(long)]
        cases: String,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_seconds: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

fn run(cli: &Cli) -> CliResult<(String, serde_json::Value, Option<u64>, CommandOutput)> {
    let out_dir = cli.common.out.as_deref();
    match &cli.command {
        Command::Ramsey {
            pattern,
            n_max,
            budget_nodes,
            budget_seconds,
            workers,
            resume,
        } => {
            let args = RamseyArgs {
                pattern: pattern.clone(),
                n_max: *n_max,
                budget_nodes: *budget_nodes,
                budget_seconds: *budget_seconds,
                workers: *workers,
                resume: resume.clone(),
            };
            let params = json!({
                "pattern": pattern, "n_max": n_max, "budget_nodes": budget_nodes,
                "budget_seconds": budget_seconds, "workers": workers,
                "resume": resume.as_ref().map(|p| p.display().to_string()),
            });
            Ok(("ramsey".into(), params, None, cmd_ramsey(&args, out_dir)?))
        }
        Command::Classify { pattern, k_max } => {
            let params = json!({"pattern": pattern, "k_max": k_max});
            Ok(("classify".into(), params, None, cmd_classify(pattern, *k_max)?))
        }
        Command::Construct { kind, n, k } => {
            let parsed = parse_kind(kind, *n, *k)?;
            let params = json!({"kind": kind, "n": n, "k": k});
            Ok(("construct".into(), params, None, cmd_construct(parsed, out_dir)?))
        }
        Command::Certify {
            kind,
            n,
            k,
            coloring,
            pattern,
            mode,
        } => {
            let coloring = match (kind, coloring) {
                (Some(kind), None) => {
                    let n = n.ok_or_else(|| CliError::InvalidInput("--kind needs --n".into()))?;
                    parse_kind(kind, n, *k)?
                        .build()
                        .map_err(|e| CliError::InvalidInput(e.to_string()))?
                }
                (None, Some(path)) => load_coloring(path)?,
                _ => {
                    return Err(CliError::InvalidInput(
                        "give exactly one of --kind or --coloring".into(),
                    ))
                }
            };
            let mode = match mode.as_str() {
                "search" => ramsey_core::extremal::CertifyMode::Search,
                "structural" => ramsey_core::extremal::CertifyMode::Structural,
                other => {
                    return Err(CliError::InvalidInput(format!(
                        "unknown mode {other:?} (expected search or structural)"
                    )))
                }
            };
            let params = json!({"kind": kind, "n": n, "k": k, "pattern": pattern, "mode": mode});
            Ok(("certify".into(), params, None, cmd_certify(&coloring, pattern, mode)?))
        }
        Command::Constants {
            delta,
            k,
            c2,
            m_reg,
            n_reg,
            n_even,
            n_pair_path,
        } => {
            let inputs = ParameterInputs {
                delta: *delta,
                k: *k,
                c2: *c2,
                m_reg_cap: *m_reg,
                n_reg: *n_reg,
                n_even: *n_even,
                n_pair_path: *n_pair_path,
            };
            let params = serde_json::to_value(inputs).unwrap();
            Ok(("constants".into(), params, None, cmd_constants(inputs)?))
        }
        Command::Prepare { pattern, z, k_max } => {
            let params = json!({"pattern": pattern, "z": z, "k_max": k_max});
            Ok(("prepare".into(), params, None, cmd_prepare(pattern, *z, *k_max)?))
        }
        Command::EmbedChain {
            ell,
            cluster_size,
            density,
            lengths,
            eps,
            check_eps,
            seed,
            samples,
        } => {
            let lengths: Vec<usize> = lengths
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| CliError::InvalidInput(format!("length {s:?}")))
                })
                .collect::<CliResult<_>>()?;
            let args = EmbedChainArgs {
                ell: *ell,
                cluster_size: *cluster_size,
                density: *density,
                lengths: lengths.clone(),
                eps: *eps,
                check_eps: *check_eps,
                seed: *seed,
                samples: *samples,
            };
            let params = json!({
                "ell": ell, "cluster_size": cluster_size, "density": density,
                "lengths": lengths, "eps": eps, "check_eps": check_eps,
                "samples": samples,
            });
            Ok(("embed-chain".into(), params, Some(*seed), cmd_embed_chain(&args)?))
        }
        Command::SweepTheorem {
            cases,
            budget_nodes,
            budget_seconds,
            workers,
        } => {
            let case_list: Vec<String> = cases
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            if case_list.is_empty() {
                return Err(CliError::InvalidInput("no sweep cases given".into()));
            }
            let rows = sweep::sweep_cases(&case_list, *budget_nodes, *budget_seconds, *workers)?;
            let params = json!({
                "cases": case_list, "budget_nodes": budget_nodes,
                "budget_seconds": budget_seconds, "workers": workers,
            });
            let output = CommandOutput {
                result: sweep::rows_to_json(&rows),
                canonical: sweep::rows_to_json(&rows),
                table: sweep::rows_to_table(&rows),
            };
            Ok(("sweep-theorem".into(), params, None, output))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok((command, parameters, seed, output)) => {
            let wall_ms = started.elapsed().as_millis() as u64;
            let manifest = RunManifest::new(&command, parameters, seed, wall_ms, &output.canonical);
            if let Some(dir) = &cli.common.out {
                if let Err(e) = manifest.write_to(dir) {
                    eprintln!("error: writing manifest: {e}");
                    std::process::exit(1);
                }
                let result_path = dir.join("result.json");
                if let Err(e) = std::fs::write(
                    &result_path,
                    serde_json::to_string_pretty(&output.result).unwrap(),
                ) {
                    eprintln!("error: writing result: {e}");
                    std::process::exit(1);
                }
            }
            match cli.common.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&output.result).unwrap()),
                Format::Table => println!("{}", output.table),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
