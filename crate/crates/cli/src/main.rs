//! `totdom`: exact total domination computations and verification campaigns.
//!
//! Results go to stdout as JSON, one object per line. Exit codes: 0 success,
//! 1 a mathematical violation was found, 2 usage or runtime error, 3
//! malformed graph6 input.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use totdom::corpus::{self, GraphRecord};
use totdom::families::{self, Decomposer};
use totdom::gn::{self, DEFAULT_EXACT_CAP};
use totdom::harness::{self, CampaignConfig, CampaignKind, CampaignParams};
use totdom::solvers::{self, DEFAULT_ENUMERATION_LIMIT};
use totdom::{cartesian_product, Error, Graph, Result};

#[derive(Parser)]
#[command(name = "totdom", version, about = "Exact total domination of graphs and Cartesian products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Total domination number with the least minimum TD-set.
    GammaT { input: String },
    /// Domination number with the least minimum dominating set.
    Gamma { input: String },
    /// 2-packing number with the least maximum packing.
    Rho2 { input: String },
    /// Membership in F1, F2, F3 with witnesses.
    Classify { g6: String },
    /// The Cartesian product G □ H.
    Product {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// Also solve γ_t of the product.
        #[arg(long)]
        gamma_t: bool,
    },
    /// Decomposes a minimum TD-set of G □ H and checks statements A to M.
    Decompose {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// Decompose every minimum TD-set instead of only the least one.
        #[arg(long)]
        all_min_sets: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// The graphs G_k, G_n and bounds on γ_t(G_k □ G_n).
    Gn {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Print the explicit TD-set of size 2kn + 2k.
        #[arg(long)]
        construct: bool,
        /// Solve γ_t(G_k □ G_n) exactly.
        #[arg(long)]
        exact: bool,
        /// Largest k·n the exact solver accepts.
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        cap: usize,
    },
    /// Exact q_t(G, H).
    Quotient {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Runs a verification campaign over two corpora.
    Verify(VerifyArgs),
    /// Connected (or all) graphs on n vertices up to isomorphism, as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Campaign {
    Ho,
    Q1,
    Thm2,
    Thm3,
    Prop1,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    campaign: Campaign,
    /// Enumerated connected graphs with at most this many vertices.
    #[arg(long, conflicts_with = "g_file")]
    g_max: Option<usize>,
    #[arg(long)]
    g_file: Option<PathBuf>,
    #[arg(long, conflicts_with = "h_file")]
    h_max: Option<usize>,
    #[arg(long)]
    h_file: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// JSONL result file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Checkpoint file; an existing one resumes the campaign.
    #[arg(long, requires = "out")]
    checkpoint: Option<PathBuf>,
    /// Also write `<out>.csv`.
    #[arg(long, requires = "out")]
    csv: bool,
    /// Cap on minimum TD-sets per pair for prop1.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    td_set_cap: usize,
    /// Stop once this many items are done, leaving the checkpoint for a
    /// later resume.
    #[arg(long, requires = "checkpoint")]
    stop_at: Option<usize>,
}

fn print(value: serde_json::Value) {
    println!("{value}");
}

fn parse(g6: &str) -> Result<Graph> {
    corpus::parse_graph6(g6)
}

/// Graphs named by a graph6 file path or an inline graph6 string.
fn inputs(input: &str) -> Result<Vec<GraphRecord>> {
    let path = Path::new(input);
    if path.is_file() {
        corpus::read_graph6_file(path, vec![])
    } else {
        let graph = parse(input)?;
        Ok(vec![GraphRecord {
            g6: input.to_string(),
            graph,
            source: corpus::Source::Enumerated,
        }])
    }
}

fn load_corpus(max: Option<usize>, file: &Option<PathBuf>, default_max: usize) -> Result<(Vec<GraphRecord>, String)> {
    match file {
        Some(path) => {
            let records = corpus::read_graph6_file(path, vec![])?;
            Ok((records, format!("file:{}", path.display())))
        }
        None => {
            let max = max.unwrap_or(default_max);
            Ok((corpus::connected_corpus(1, max)?, format!("connected<={max}")))
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<i32> {
    let (kind, g_default, h_default) = match args.campaign {
        Campaign::Ho => (CampaignKind::Ho, 6, 5),
        Campaign::Q1 => (CampaignKind::Question1, 6, 5),
        Campaign::Thm2 => (CampaignKind::Theorem2, 7, 0),
        Campaign::Thm3 => (CampaignKind::Theorem3, 6, 5),
        Campaign::Prop1 => (CampaignKind::Proposition1, 6, 4),
    };
    let (g, g_label) = load_corpus(args.g_max, &args.g_file, g_default)?;
    let (h, h_label) = if kind.is_pairwise() {
        let (h, label) = load_corpus(args.h_max, &args.h_file, h_default)?;
        (h, Some(label))
    } else {
        (Vec::new(), None)
    };
    let mut cfg = CampaignConfig::new(kind, g, h);
    cfg.params = CampaignParams {
        g_corpus: g_label,
        h_corpus: h_label,
        td_set_cap: args.td_set_cap,
        ..CampaignParams::default()
    };
    cfg.jobs = args.jobs;
    cfg.out = args.out.clone();
    cfg.checkpoint = args.checkpoint.clone();
    cfg.csv = args.csv;
    cfg.stop_at = args.stop_at;
    let report = harness::run_campaign(&cfg)?;
    print(serde_json::to_value(&report)?);
    for v in &report.violations {
        eprintln!("violation [{}] at item {}: {} {}", v.check, v.index, v.g6_g, v.g6_h.as_deref().unwrap_or(""));
    }
    Ok(report.exit_code())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::GammaT { input } => {
            for r in inputs(&input)? {
                let s = solvers::gamma_t(&r.graph)?;
                print(json!({ "g6": r.g6, "gamma_t": s.value, "certificate": s.certificate.to_vec() }));
            }
        }
        Command::Gamma { input } => {
            for r in inputs(&input)? {
                let s = solvers::gamma(&r.graph);
                print(json!({ "g6": r.g6, "gamma": s.value, "certificate": s.certificate.to_vec() }));
            }
        }
        Command::Rho2 { input } => {
            for r in inputs(&input)? {
                let s = solvers::rho_2(&r.graph);
                print(json!({ "g6": r.g6, "rho2": s.value, "certificate": s.certificate.to_vec() }));
            }
        }
        Command::Classify { g6 } => {
            let g = parse(&g6)?;
            let c = families::classify(&g)?;
            print(json!({ "g6": g6, "families": c.labels(), "witnesses": c }));
        }
        Command::Product { g, h, gamma_t } => {
            let p = cartesian_product(&parse(&g)?, &parse(&h)?);
            let pg = p.graph();
            let mut out = json!({
                "n": pg.n(),
                "edges": pg.edge_count(),
                "g6": corpus::write_graph6(pg).ok(),
            });
            if gamma_t {
                let s = solvers::gamma_t(pg)?;
                let pairs: Vec<_> = s.certificate.iter().map(|v| p.coords(v)).collect();
                out["gamma_t"] = json!(s.value);
                out["certificate"] = json!(pairs);
            }
            print(out);
        }
        Command::Decompose { g, h, all_min_sets, limit } => {
            let d = Decomposer::new(&parse(&g)?, &parse(&h)?)?;
            let pg = d.product().graph();
            let sets = if all_min_sets {
                solvers::all_min_td_sets(pg, limit)?
            } else {
                vec![solvers::gamma_t(pg)?.certificate]
            };
            let mut failed = false;
            for set in &sets {
                let report = d.decompose(set)?;
                failed |= !report.all_pass();
                print(serde_json::to_value(&report)?);
            }
            return Ok(i32::from(failed));
        }
        Command::Gn { k, n, construct, exact, cap } => {
            if !(2 <= k && k <= n) {
                return Err(Error::InvalidParameter(format!("need 2 <= k <= n, got k={k}, n={n}")));
            }
            let mut out = json!({
                "k": k,
                "n": n,
                "gamma_t_gk": 2 * k,
                "gamma_t_gn": 2 * n,
                "lower": 2 * k * n + k,
                "upper": 2 * k * n + 2 * k,
            });
            if construct {
                let d = gn::gn_product_tdset(k, n)?;
                let nh = 3 * n;
                let pairs: Vec<_> = d.iter().map(|v| (v / nh, v % nh)).collect();
                out["construction_size"] = json!(d.len());
                out["construction"] = json!(pairs);
            }
            if exact {
                if cap > DEFAULT_EXACT_CAP {
                    eprintln!(
                        "warning: raising the exact-solver cap to k·n <= {cap}; products of {} vertices may take very long",
                        9 * k * n
                    );
                }
                let q = gn::gn_quotient_check(k, n, cap)?;
                out["exact"] = json!(q.bounds.exact);
                out["bounds_hold"] = json!(q.bounds.holds());
                out["qt"] = json!(harness::format_ratio(&q.qt));
                out["corollary_interval"] = json!([harness::format_ratio(&q.lower), harness::format_ratio(&q.upper)]);
                out["within_corollary"] = json!(q.within());
                print(out);
                return Ok(i32::from(!(q.bounds.holds() && q.within())));
            }
            print(out);
        }
        Command::Quotient { g, h } => {
            let r = harness::quotient(&parse(&g)?, &parse(&h)?)?;
            print(serde_json::to_value(&r)?);
            return Ok(i32::from(!r.satisfies_ho()));
        }
        Command::Verify(args) => return verify(&args),
        Command::Enumerate { n, connected, out } => {
            let graphs = if connected {
                corpus::enumerate_connected(n)?
            } else {
                corpus::enumerate_all(n)?
            };
            let mut sink: Box<dyn Write> = match out {
                Some(path) => Box::new(BufWriter::new(File::create(path)?)),
                None => Box::new(BufWriter::new(io::stdout().lock())),
            };
            for g in &graphs {
                writeln!(sink, "{}", corpus::write_graph6(g)?)?;
            }
            sink.flush()?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_format_error() { 3 } else { 2 })
        }
    }
}
