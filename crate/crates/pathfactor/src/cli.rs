//! Command-line driver. Every subcommand prints one JSON report document on
//! stdout and uses the exit contract: 0 = ran to completion (including
//! negative decisions), 1 = a counterexample verdict was found, 2 = usage
//! or parse error.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::construct::parse_construction;
use crate::edgelist::parse_edge_list;
use crate::factor::{
    decide_factor, extract_path_factor, is_avoidable, is_critical_avoidable, FactorKind,
};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::harness::{
    build_remark_graph, hunt, verify_condition_instance, verify_sharpness, HuntParams,
    RemarkFamily, SufficientCondition, Verdict,
};
use crate::report::{
    graph_digest, text_digest, AnalyzeResults, DecideResults, FactorStatus, GenerateResults,
    HuntResults, HuntSummaryJson, ReportDocument, Results, VerifyResults,
};
use crate::sun::sun_count;
use crate::toughness::{connectivity, isolated_toughness, toughness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "pathfactor",
    version,
    about = "Exact path-factor, toughness, and avoidability computations on small graphs"
)]
struct Cli {
    /// Zero the timing field so output is byte-stable across runs
    #[arg(long, global = true)]
    stable: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// graph6 string
    #[arg(long)]
    g6: Option<String>,
    /// edge-list file (`order m` header, then `u v` lines)
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// construction expression, e.g. "K3+(3*K1|K2)"
    #[arg(long)]
    expr: Option<String>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalGraphInput {
    /// graph6 string
    #[arg(long)]
    g6: Option<String>,
    /// edge-list file (`order m` header, then `u v` lines)
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// construction expression, e.g. "K3+(3*K1|K2)"
    #[arg(long)]
    expr: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecideMode {
    /// does a factor exist
    Factor,
    /// does a factor avoiding each single edge exist
    Avoidable,
    /// does avoidability survive deleting any n vertices
    Critical,
}

#[derive(Subcommand)]
enum Command {
    /// Compute i, components, connectivity, toughness, isolated toughness,
    /// sun count, and factor existence with witnesses
    Analyze {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Decide factor existence, avoidability, or critical avoidability
    Decide {
        #[command(flatten)]
        input: GraphInput,
        /// minimum path order (2 or 3)
        #[arg(long)]
        k: u8,
        #[arg(long, value_enum)]
        mode: DecideMode,
        /// number of deleted vertices (critical mode only)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Emit a sharp construction (or any expression) as graph6 with its
    /// expected exact metrics
    Generate {
        /// sharp family id 1..=6
        #[arg(long)]
        remark: Option<u8>,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
        /// construction expression instead of a family
        #[arg(long)]
        expr: Option<String>,
    },
    /// Verify a sufficient condition on a graph, or a sharp family instance
    Verify {
        /// condition id 6..=8 (requires a graph input)
        #[arg(long)]
        theorem: Option<u8>,
        /// sharp family id 1..=6
        #[arg(long)]
        remark: Option<u8>,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[command(flatten)]
        input: OptionalGraphInput,
    },
    /// Randomized soundness sweep of a sufficient condition
    Hunt {
        /// condition id 6..=8
        #[arg(long)]
        theorem: u8,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
    },
}

/// Entry point used by the binary: parses argv, runs, prints the report,
/// returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors
            e.exit();
        }
    };
    match execute(cli) {
        Ok((doc, code)) => {
            println!("{}", doc.to_json());
            code
        }
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli) -> Result<(ReportDocument, i32), String> {
    let started = Instant::now();
    let stable = cli.stable;
    let finish = |command: String, digest: String, results: Results, code: i32| {
        let timing = if stable {
            0
        } else {
            started.elapsed().as_millis() as u64
        };
        Ok((ReportDocument::new(command, digest, results, timing), code))
    };

    match cli.command {
        Command::Analyze { input } => {
            let graph = load_graph(&input.g6, &input.edges, &input.expr)?;
            let results = analyze(&graph)?;
            finish(
                format!("analyze {}", describe_input(&input.g6, &input.edges, &input.expr)),
                graph_digest(&graph),
                Results::Analyze(results),
                EXIT_OK,
            )
        }
        Command::Decide { input, k, mode, n } => {
            let graph = load_graph(&input.g6, &input.edges, &input.expr)?;
            let kind = FactorKind::from_min_order(k as usize)
                .ok_or_else(|| format!("--k must be 2 or 3, got {k}"))?;
            let results = decide(&graph, kind, mode, n)?;
            let mode_name = match mode {
                DecideMode::Factor => "factor",
                DecideMode::Avoidable => "avoidable",
                DecideMode::Critical => "critical",
            };
            finish(
                format!(
                    "decide --k {k} --mode {mode_name}{} {}",
                    n.map(|n| format!(" --n {n}")).unwrap_or_default(),
                    describe_input(&input.g6, &input.edges, &input.expr)
                ),
                graph_digest(&graph),
                Results::Decide(results),
                EXIT_OK,
            )
        }
        Command::Generate { remark, n, r, expr } => match (remark, expr) {
            (Some(id), None) => {
                let family = RemarkFamily::from_id(id)
                    .ok_or_else(|| format!("--remark must be 1..=6, got {id}"))?;
                let (graph, expected) =
                    build_remark_graph(family, n, r).map_err(|e| e.to_string())?;
                let graph6 = emit_graph6(&graph).map_err(|e| e.to_string())?;
                let results = GenerateResults {
                    graph6: graph6.clone(),
                    order: graph.order(),
                    edge_count: graph.edge_count(),
                    family: Some(id),
                    removal_count: Some(n),
                    margin: Some(r),
                    expression: Some(family.expression(n, r)),
                    expected: Some(expected),
                };
                finish(
                    format!("generate --remark {id} --n {n} --r {r}"),
                    text_digest(&format!("remark:{id}:{n}:{r}")),
                    Results::Generate(results),
                    EXIT_OK,
                )
            }
            (None, Some(expr)) => {
                let graph = parse_construction(&expr).map_err(|e| e.to_string())?;
                let graph6 = emit_graph6(&graph).map_err(|e| e.to_string())?;
                let results = GenerateResults {
                    graph6,
                    order: graph.order(),
                    edge_count: graph.edge_count(),
                    family: None,
                    removal_count: None,
                    margin: None,
                    expression: Some(expr.clone()),
                    expected: None,
                };
                finish(
                    format!("generate --expr {expr}"),
                    graph_digest(&graph),
                    Results::Generate(results),
                    EXIT_OK,
                )
            }
            _ => Err("generate needs exactly one of --remark or --expr".to_string()),
        },
        Command::Verify {
            theorem,
            remark,
            n,
            r,
            input,
        } => match (theorem, remark) {
            (Some(id), None) => {
                let condition = SufficientCondition::from_id(id)
                    .ok_or_else(|| format!("--theorem must be 6..=8, got {id}"))?;
                if input.g6.is_none() && input.edges.is_none() && input.expr.is_none() {
                    return Err("verify --theorem needs a graph (--g6, --edges or --expr)".into());
                }
                let graph = load_graph(&input.g6, &input.edges, &input.expr)?;
                let report =
                    verify_condition_instance(condition, &graph, n, r).map_err(|e| e.to_string())?;
                let code = exit_for(&[report.verdict]);
                finish(
                    format!(
                        "verify --theorem {id} --n {n} --r {r} {}",
                        describe_input(&input.g6, &input.edges, &input.expr)
                    ),
                    graph_digest(&graph),
                    Results::Verify(VerifyResults {
                        mode: "theorem".to_string(),
                        id,
                        removal_count: n,
                        margin: r,
                        report,
                    }),
                    code,
                )
            }
            (None, Some(id)) => {
                if input.g6.is_some() || input.edges.is_some() || input.expr.is_some() {
                    return Err("verify --remark builds its own graph; drop the graph input".into());
                }
                let family = RemarkFamily::from_id(id)
                    .ok_or_else(|| format!("--remark must be 1..=6, got {id}"))?;
                let report = verify_sharpness(family, n, r).map_err(|e| e.to_string())?;
                let code = exit_for(&[report.verdict]);
                finish(
                    format!("verify --remark {id} --n {n} --r {r}"),
                    text_digest(&format!("remark:{id}:{n}:{r}")),
                    Results::Verify(VerifyResults {
                        mode: "remark".to_string(),
                        id,
                        removal_count: n,
                        margin: r,
                        report,
                    }),
                    code,
                )
            }
            _ => Err("verify needs exactly one of --theorem or --remark".to_string()),
        },
        Command::Hunt {
            theorem,
            max_order,
            samples,
            seed,
            n,
            r,
        } => {
            let condition = SufficientCondition::from_id(theorem)
                .ok_or_else(|| format!("--theorem must be 6..=8, got {theorem}"))?;
            let params = HuntParams {
                condition,
                removal_count: n,
                margin: r,
                max_order,
                samples,
                seed,
            };
            let (reports, summary) = hunt(&params).map_err(|e| e.to_string())?;
            let code = if summary.counterexamples > 0 {
                EXIT_COUNTEREXAMPLE
            } else {
                EXIT_OK
            };
            finish(
                format!(
                    "hunt --theorem {theorem} --max-order {max_order} --samples {samples} --seed {seed} --n {n} --r {r}"
                ),
                text_digest(&format!("hunt:{theorem}:{n}:{r}:{max_order}:{samples}:{seed}")),
                Results::Hunt(HuntResults {
                    condition: theorem,
                    removal_count: n,
                    margin: r,
                    max_order,
                    samples,
                    seed,
                    summary: HuntSummaryJson::from(&summary),
                    reports,
                }),
                code,
            )
        }
    }
}

fn exit_for(verdicts: &[Verdict]) -> i32 {
    if verdicts.contains(&Verdict::Counterexample) {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}

fn describe_input(
    g6: &Option<String>,
    edges: &Option<PathBuf>,
    expr: &Option<String>,
) -> String {
    if let Some(text) = g6 {
        format!("--g6 {text}")
    } else if let Some(path) = edges {
        format!("--edges {}", path.display())
    } else if let Some(text) = expr {
        format!("--expr {text}")
    } else {
        String::new()
    }
}

fn load_graph(
    g6: &Option<String>,
    edges: &Option<PathBuf>,
    expr: &Option<String>,
) -> Result<Graph, String> {
    if let Some(text) = g6 {
        parse_graph6(text).map_err(|e| e.to_string())
    } else if let Some(path) = edges {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        parse_edge_list(&text).map_err(|e| e.to_string())
    } else if let Some(text) = expr {
        parse_construction(text).map_err(|e| e.to_string())
    } else {
        Err("a graph input (--g6, --edges or --expr) is required".to_string())
    }
}

fn analyze(graph: &Graph) -> Result<AnalyzeResults, String> {
    let empty = graph.order() == 0;
    let mut factors = Vec::new();
    for kind in [FactorKind::AtLeast2, FactorKind::AtLeast3] {
        let certificate = decide_factor(graph, kind);
        let exists = certificate.is_none();
        factors.push(FactorStatus {
            k: kind,
            exists,
            factor: if exists {
                extract_path_factor(graph, kind)
            } else {
                None
            },
            certificate,
        });
    }
    Ok(AnalyzeResults {
        graph6: emit_graph6(graph).map_err(|e| e.to_string())?,
        order: graph.order(),
        edge_count: graph.edge_count(),
        isolated: graph.isolated_count(),
        components: graph.components().len(),
        connectivity: if empty {
            None
        } else {
            Some(connectivity(graph).map_err(|e| e.to_string())?)
        },
        toughness: if empty {
            None
        } else {
            Some(toughness(graph).map_err(|e| e.to_string())?)
        },
        isolated_toughness: if empty {
            None
        } else {
            Some(isolated_toughness(graph).map_err(|e| e.to_string())?)
        },
        sun_count: sun_count(graph),
        factors,
    })
}

fn decide(
    graph: &Graph,
    kind: FactorKind,
    mode: DecideMode,
    n: Option<usize>,
) -> Result<DecideResults, String> {
    match mode {
        DecideMode::Factor => {
            if n.is_some() {
                return Err("--n only applies to --mode critical".to_string());
            }
            let certificate = decide_factor(graph, kind);
            let holds = certificate.is_none();
            Ok(DecideResults {
                k: kind,
                mode: "factor".to_string(),
                removal_count: None,
                holds,
                vacuous: false,
                factor: if holds {
                    extract_path_factor(graph, kind)
                } else {
                    None
                },
                certificate,
            })
        }
        DecideMode::Avoidable => {
            if n.is_some() {
                return Err("--n only applies to --mode critical".to_string());
            }
            let outcome = is_avoidable(graph, kind);
            Ok(DecideResults {
                k: kind,
                mode: "avoidable".to_string(),
                removal_count: None,
                holds: outcome.holds,
                vacuous: outcome.vacuous,
                factor: None,
                certificate: outcome.certificate,
            })
        }
        DecideMode::Critical => {
            let n = n.ok_or_else(|| "--mode critical requires --n".to_string())?;
            let outcome = is_critical_avoidable(graph, kind, n).map_err(|e| e.to_string())?;
            Ok(DecideResults {
                k: kind,
                mode: "critical".to_string(),
                removal_count: Some(n),
                holds: outcome.holds,
                vacuous: outcome.vacuous,
                factor: None,
                certificate: outcome.certificate,
            })
        }
    }
}
