//! Command-line front end: parse graphs, run the engine, verify the
//! characterization statements, and emit tables or stable JSON.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use stress_core::checks::Invariant;
use stress_core::classify::{classify, ClassificationReport};
use stress_core::generators::{self, Fixture};
use stress_core::oracle::stress_oracle;
use stress_core::stress::stress_profile;
use stress_core::verify::{
    verify_invariant_battery, verify_invariants, verify_k_stress_characterization,
    verify_star_characterization, verify_unique_stress_theorem, ScanOptions, VerificationReport,
};
use stress_core::{Graph, StressProfile};

pub mod formats;
pub mod json;

use formats::InputFormat;

/// Errors surfaced to the user. Parse and usage problems exit with 2,
/// domain failures (including a falsified statement) with 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Usage(String),

    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Domain(#[from] stress_core::Error),

    #[error("{0} falsified: {1} counterexample(s) found")]
    Falsified(&'static str, usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Domain(_) | CliError::Falsified(..) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Auto,
    Edgelist,
    Adjmatrix,
    Graph6,
}

impl FormatArg {
    fn resolve(self) -> Option<InputFormat> {
        match self {
            FormatArg::Auto => None,
            FormatArg::Edgelist => Some(InputFormat::EdgeList),
            FormatArg::Adjmatrix => Some(InputFormat::AdjMatrix),
            FormatArg::Graph6 => Some(InputFormat::Graph6),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmitArg {
    Edgelist,
    Graph6,
}

#[derive(Debug, Parser)]
#[command(
    name = "stress",
    version,
    about = "Exact stress centrality for simple graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the stress of every vertex.
    Compute {
        /// Input file (defaults to stdin).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        /// Emit machine-readable JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Classify a graph: connectivity, stress regularity, strong
    /// regularity, recognized family.
    Classify {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        #[arg(long)]
        json: bool,
    },
    /// Generate a named family: complete N, cycle N, path N, star N,
    /// complete_bipartite M N, windmill N M, cocktail_party K,
    /// named TAG, random_tree N SEED.
    Generate {
        family: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = EmitArg::Edgelist)]
        emit: EmitArg,
    },
    /// Exhaustively check a statement over all small connected graphs.
    /// Theorems: 2.4, 2.6, 4.1, 4.2, 6.5, 6.6, battery.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_n: usize,
        /// Skip graphs below this minimum degree (required at n = 8).
        #[arg(long)]
        prune_min_degree: Option<usize>,
        /// Worker threads for the scan (default 1).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Stress by brute-force geodesic enumeration, for cross-checks.
    Oracle {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        #[arg(long)]
        json: bool,
    },
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute {
            input,
            format,
            json,
        } => {
            for g in read_graphs(input.as_deref(), format)? {
                let profile = stress_profile(&g)?;
                if json {
                    println!("{}", json::profile_json(g.n(), &profile));
                } else {
                    print_profile_table(&g, &profile);
                }
            }
            Ok(())
        }
        Command::Classify {
            input,
            format,
            json,
        } => {
            for g in read_graphs(input.as_deref(), format)? {
                let report = classify(&g)?;
                if json {
                    println!("{}", json::classification_json(&report));
                } else {
                    print_classification(&report);
                }
            }
            Ok(())
        }
        Command::Generate {
            family,
            params,
            emit,
        } => {
            let g = generate(&family, &params)?;
            match emit {
                EmitArg::Edgelist => print!("{}", formats::emit_edge_list(&g)),
                EmitArg::Graph6 => println!("{}", formats::emit_graph6(&g)?),
            }
            Ok(())
        }
        Command::Verify {
            theorem,
            max_n,
            prune_min_degree,
            jobs,
            json,
        } => run_verify(&theorem, max_n, prune_min_degree, jobs, json),
        Command::Oracle {
            input,
            format,
            json,
        } => {
            for g in read_graphs(input.as_deref(), format)? {
                let stress: Vec<u64> = g
                    .vertices()
                    .map(|v| stress_oracle(&g, v))
                    .collect::<Result<_, _>>()?;
                let total = stress.iter().sum();
                let profile = StressProfile { stress, total };
                if json {
                    println!("{}", json::profile_json(g.n(), &profile));
                } else {
                    print_oracle_table(&profile);
                }
            }
            Ok(())
        }
    }
}

fn read_graphs(path: Option<&Path>, format: FormatArg) -> Result<Vec<Graph>, CliError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    formats::parse_input(&text, format.resolve())
}

fn print_profile_table(g: &Graph, profile: &StressProfile) {
    println!("{:>6}  {:>6}  {:>12}  {:>10}", "vertex", "degree", "eccentricity", "stress");
    for v in g.vertices() {
        let ecc = match g.eccentricity(v) {
            Ok(e) => e.to_string(),
            Err(_) => "-".to_string(),
        };
        println!(
            "{:>6}  {:>6}  {:>12}  {:>10}",
            v,
            g.degree(v),
            ecc,
            profile.stress[v]
        );
    }
    println!("total stress: {}", profile.total);
}

fn print_oracle_table(profile: &StressProfile) {
    println!("{:>6}  {:>10}", "vertex", "stress");
    for (v, s) in profile.stress.iter().enumerate() {
        println!("{:>6}  {:>10}", v, s);
    }
    println!("total stress: {}", profile.total);
}

fn print_classification(r: &ClassificationReport) {
    println!("n: {}", r.n);
    println!("connected: {}", r.is_connected);
    match r.diameter {
        Some(d) => println!("diameter: {d}"),
        None => println!("diameter: -"),
    }
    match r.stress_regular_k {
        Some(k) => println!("stress regular: k = {k}"),
        None => println!("stress regular: no"),
    }
    println!(
        "simplicial: {}",
        if r.simplicial.is_empty() {
            "(none)".to_string()
        } else {
            format!("{:?}", r.simplicial)
        }
    );
    match &r.srg {
        Some(p) => println!("srg: ({}, {}, {}, {})", p.v, p.k, p.lambda, p.mu),
        None => println!("srg: no"),
    }
    match r.one_stress_center {
        Some(v) => println!("one-stress center: {v}"),
        None => println!("one-stress center: (none)"),
    }
    println!("family: {}", r.recognized_family);
    for finding in &r.findings {
        println!("finding: {finding}");
    }
}

fn parse_param(params: &[String], idx: usize, family: &str) -> Result<usize, CliError> {
    let raw = params
        .get(idx)
        .ok_or_else(|| CliError::Usage(format!("`{family}` needs more parameters")))?;
    raw.parse()
        .map_err(|_| CliError::Usage(format!("invalid parameter `{raw}` for `{family}`")))
}

fn expect_arity(params: &[String], arity: usize, family: &str) -> Result<(), CliError> {
    if params.len() != arity {
        return Err(CliError::Usage(format!(
            "`{family}` takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn generate(family: &str, params: &[String]) -> Result<Graph, CliError> {
    let lower = family.to_ascii_lowercase();
    let graph = match lower.as_str() {
        "complete" => {
            expect_arity(params, 1, family)?;
            generators::complete(parse_param(params, 0, family)?)
        }
        "cycle" => {
            expect_arity(params, 1, family)?;
            generators::cycle(parse_param(params, 0, family)?)
        }
        "path" => {
            expect_arity(params, 1, family)?;
            generators::path(parse_param(params, 0, family)?)
        }
        "star" => {
            expect_arity(params, 1, family)?;
            generators::star(parse_param(params, 0, family)?)
        }
        "complete_bipartite" => {
            expect_arity(params, 2, family)?;
            generators::complete_bipartite(
                parse_param(params, 0, family)?,
                parse_param(params, 1, family)?,
            )
        }
        "windmill" => {
            expect_arity(params, 2, family)?;
            generators::windmill(
                parse_param(params, 0, family)?,
                parse_param(params, 1, family)?,
            )
        }
        "cocktail_party" => {
            expect_arity(params, 1, family)?;
            generators::cocktail_party(parse_param(params, 0, family)?)
        }
        "named" => {
            expect_arity(params, 1, family)?;
            let fixture: Fixture = params[0]
                .parse()
                .map_err(|e: stress_core::Error| CliError::Usage(e.to_string()))?;
            Ok(generators::named(fixture))
        }
        "random_tree" => {
            expect_arity(params, 2, family)?;
            let n = parse_param(params, 0, family)?;
            let seed = params[1]
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("invalid seed `{}`", params[1])))?;
            generators::random_tree(n, seed)
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown family `{family}`; expected one of complete, cycle, path, star, \
                 complete_bipartite, windmill, cocktail_party, named, random_tree"
            )))
        }
    };
    graph.map_err(|e| CliError::Usage(e.to_string()))
}

fn run_verify(
    theorem: &str,
    max_n: usize,
    prune_min_degree: Option<usize>,
    jobs: Option<usize>,
    json: bool,
) -> Result<(), CliError> {
    let opts = ScanOptions {
        prune_min_degree,
        jobs: jobs.unwrap_or(1),
    };
    let usage = |e: stress_core::Error| CliError::Usage(e.to_string());
    let reports: Vec<VerificationReport> = match theorem {
        "2.4" => vec![
            verify_invariants(&[Invariant::SimplicialZeroStress], max_n, &opts).map_err(usage)?
                [0]
            .clone(),
        ],
        "2.6" => vec![
            verify_invariants(&[Invariant::TotalStressIdentity], max_n, &opts).map_err(usage)?[0]
                .clone(),
        ],
        "4.1" => vec![verify_unique_stress_theorem(max_n, &opts).map_err(usage)?],
        "4.2" => vec![verify_star_characterization(max_n, &opts).map_err(usage)?],
        "6.5" => vec![verify_k_stress_characterization(1, max_n, &opts).map_err(usage)?],
        "6.6" => vec![verify_k_stress_characterization(2, max_n, &opts).map_err(usage)?],
        "battery" => verify_invariant_battery(max_n, &opts).map_err(usage)?,
        _ => {
            return Err(CliError::Usage(format!(
                "unknown theorem `{theorem}`; expected 2.4, 2.6, 4.1, 4.2, 6.5, 6.6, or battery"
            )))
        }
    };

    if json {
        if reports.len() == 1 {
            println!("{}", json::verification_json(&reports[0])?);
        } else {
            println!("{}", json::verification_batch_json(&reports)?);
        }
    } else {
        for r in &reports {
            print_report(r);
        }
    }

    let failed: usize = reports.iter().map(|r| r.counterexamples.len()).sum();
    if failed > 0 {
        let tag = reports
            .iter()
            .find(|r| !r.verified())
            .map(|r| r.theorem.tag())
            .unwrap_or("statement");
        return Err(CliError::Falsified(tag, failed));
    }
    Ok(())
}

fn print_report(r: &VerificationReport) {
    println!(
        "{}  max_n={}  scanned={}  witnesses={}  counterexamples={}  elapsed={:.2?}  {}",
        r.theorem.tag(),
        r.max_n,
        r.graphs_scanned,
        r.witnesses.len(),
        r.counterexamples.len(),
        r.elapsed,
        if r.verified() { "PASS" } else { "FAIL" }
    );
    for c in &r.counterexamples {
        println!("  counterexample n={} edges={:?}", c.n, c.edges);
    }
}
