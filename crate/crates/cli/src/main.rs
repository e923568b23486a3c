//! `mkneser`: generate graph families, build matching Kneser graphs, solve
//! for χ and ex, and run the verification suites.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or input error,
//! 3 timeout / unknown result.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mkneser::graph::{parse_edge_list, write_edge_list};
use mkneser::homcert::write_hom_witness;
use mkneser::kneser::write_vertex_map;
use mkneser::report::render_table;
use mkneser::solvers::write_dimacs;
use mkneser::verify::{self, ChiSample, Run};
use mkneser::{
    build_matching_kneser, certify_family, chromatic_number, gap_report, matching_graph,
    min_deletion_set, petersen, shaebani_graph, shaebani_tree, Error, FamilyParams, LabeledGraph,
    LowerBound, SolveOptions, Verdict,
};

/// Overrides the default solver timeout (seconds) when `--timeout` is absent.
const TIMEOUT_ENV: &str = "MKNESER_TIMEOUT";

#[derive(Debug, Parser)]
#[command(name = "mkneser", version, about = "Matching Kneser graphs: chromatic and generalized Turán numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Solver time budget in seconds.
    #[arg(long, global = true)]
    timeout: Option<u64>,

    /// Maximum number of r-matchings for an explicitly built Kneser graph.
    #[arg(long = "kneser-cap", global = true, default_value_t = mkneser::kneser::DEFAULT_KNESER_CAP)]
    kneser_cap: usize,

    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// lK₂ (needs --l)
    Matching,
    /// The (r, Θ, Γ) construction (needs --r, --theta, --gamma)
    Shaebani,
    /// The radius-2 tree (needs --r, --theta)
    Tree,
    Petersen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Petersen,
    Lovasz,
    Theorem2,
    Prop1,
    Corollary,
    Growth,
    /// Every suite plus the χ ≤ |E| − ex check over all of them.
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a family instance as an edge list.
    Gen {
        family: Family,
        #[arg(long)]
        l: Option<usize>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Build (G, rK₂) from a graph file.
    Kneser {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Exact chromatic number of a graph file.
    Chi {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also write the graph as a DIMACS coloring instance.
        #[arg(long)]
        dimacs: Option<PathBuf>,
    },
    /// Minimum deletion set and ex(G, rK₂).
    Turan {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// |E| − ex against χ(G, rK₂).
    Gap {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Certify χ(G, rK₂) = Θ and |E| − ex = Θ + Γ for a family instance.
    Certify {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run a verification suite.
    Verify { target: Target },
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    theta: Option<usize>,
    #[arg(long)]
    gamma: Option<usize>,
}

/// Failure categories, mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
    Unknown(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Timeout(_) => Failure::Unknown(e.to_string()),
            Error::Internal(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Unknown(msg)) => {
            eprintln!("unknown: {msg}");
            ExitCode::from(3)
        }
    }
}

fn options(common: &Common) -> CliResult<SolveOptions> {
    let seconds = match common.timeout {
        Some(s) => Some(s),
        None => match std::env::var(TIMEOUT_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("{TIMEOUT_ENV} must be a whole number of seconds")))?,
            ),
            Err(_) => None,
        },
    };
    let mut opts = SolveOptions {
        kneser_cap: common.kneser_cap,
        ..SolveOptions::default()
    };
    if let Some(s) = seconds {
        opts.timeout = Duration::from_secs(s);
    }
    Ok(opts)
}

fn read_graph(path: &Path) -> CliResult<LabeledGraph> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn emit(common: &Common, contents: &str) -> CliResult<()> {
    match &common.out {
        Some(path) => write_file(path, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn require(value: Option<usize>, flag: &str) -> CliResult<usize> {
    value.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn family_params(p: &ParamArgs) -> CliResult<FamilyParams> {
    Ok(FamilyParams::new(
        require(p.r, "r")?,
        require(p.theta, "theta")?,
        require(p.gamma, "gamma")?,
    )?)
}

fn run(cli: Cli) -> CliResult<()> {
    let common = &cli.common;
    let opts = options(common)?;
    match &cli.command {
        Command::Gen { family, l, params } => {
            let g = match family {
                Family::Matching => {
                    let l = require(*l, "l")?;
                    if l == 0 {
                        return Err(Failure::Usage("--l must be at least 1".into()));
                    }
                    matching_graph(l)
                }
                Family::Shaebani => shaebani_graph(&family_params(params)?),
                Family::Tree => shaebani_tree(require(params.r, "r")?, require(params.theta, "theta")?)?,
                Family::Petersen => petersen(),
            };
            emit(common, &write_edge_list(&g))
        }
        Command::Kneser { input, r } => {
            let g = read_graph(input)?;
            let kg = build_matching_kneser(&g, *r, opts.kneser_cap)?;
            let edges = write_edge_list(&kg.to_graph());
            let map = write_vertex_map(&kg);
            match &common.out {
                Some(path) => {
                    write_file(path, &edges)?;
                    write_file(&sibling(path, ".vertices"), &map)
                }
                None => {
                    print!("{edges}");
                    for line in map.lines() {
                        println!("# {line}");
                    }
                    Ok(())
                }
            }
        }
        Command::Chi { input, dimacs } => {
            let g = read_graph(input)?;
            if let Some(path) = dimacs {
                write_file(path, &write_dimacs(&g))?;
            }
            let cert = chromatic_number(&g, &mut opts.budget())?;
            let text = match common.format {
                Format::Json => json(&cert),
                Format::Text => format!(
                    "k={}\nlower bound: {}\ncoloring: {}\n",
                    cert.k,
                    describe_lower_bound(&cert.lower_bound),
                    join(&cert.coloring)
                ),
            };
            emit(common, &text)
        }
        Command::Turan { input, r } => {
            let g = read_graph(input)?;
            let cert = min_deletion_set(&g, *r, &mut opts.budget())?;
            let ex = cert.optimal.then(|| g.edge_count() - cert.size);
            let text = match common.format {
                Format::Json => json(&serde_json::json!({
                    "edge_count": g.edge_count(),
                    "ex": ex,
                    "certificate": cert,
                })),
                Format::Text => format!(
                    "|E|={}\nex={}\ndeleted ({}{}): {}\n",
                    g.edge_count(),
                    ex.map_or("unknown".to_string(), |v| v.to_string()),
                    cert.size,
                    if cert.optimal { ", optimal" } else { ", upper bound only" },
                    cert.deleted.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                ),
            };
            emit(common, &text)?;
            if cert.optimal {
                Ok(())
            } else {
                Err(Failure::Unknown("deletion search timed out; size is an upper bound".into()))
            }
        }
        Command::Gap { input, r } => {
            let g = read_graph(input)?;
            let name = input.file_stem().map_or("graph".into(), |s| s.to_string_lossy().into_owned());
            let rep = gap_report(&name, &g, *r, &opts)?;
            let text = match common.format {
                Format::Json => json(&rep),
                Format::Text => render_table(std::slice::from_ref(&rep)),
            };
            emit(common, &text)?;
            if rep.verdict == Verdict::Unknown {
                Err(Failure::Unknown("chi or ex could not be determined".into()))
            } else {
                Ok(())
            }
        }
        Command::Certify { params } => {
            let p = family_params(params)?;
            let (rep, cert) = certify_family(&p, &opts)?;
            let text = match common.format {
                Format::Json => json(&rep),
                Format::Text => format!(
                    "{}theta={} certified via K({},{}) ({} r-matchings, forward and backward homomorphisms verified{})\n",
                    render_table(std::slice::from_ref(&rep)),
                    cert.chi(),
                    p.l(),
                    p.subset_size(),
                    cert.vertex_count,
                    if cert.forward_exhaustive { "" } else { "; forward vertex by vertex" }
                ),
            };
            if let Some(path) = &common.out {
                write_file(&sibling(path, ".forward.hom"), &write_hom_witness(&cert.forward))?;
                write_file(&sibling(path, ".backward.hom"), &write_hom_witness(cert.backward()))?;
            }
            emit(common, &text)?;
            match &rep.predicted {
                Some(pred) if pred.matches => Ok(()),
                _ if rep.verdict == Verdict::Unknown => Err(Failure::Unknown("turan search timed out".into())),
                _ => Err(Failure::Verification("computed values differ from the closed forms".into())),
            }
        }
        Command::Verify { target } => verify_target(*target, &opts),
    }
}

fn describe_lower_bound(lb: &LowerBound) -> String {
    match lb {
        LowerBound::Empty => "empty graph".into(),
        LowerBound::Edgeless => "edgeless graph".into(),
        LowerBound::Clique { vertices } => format!("clique {}", join(vertices)),
        LowerBound::Exhaustion { refuted_colors } => format!("no proper {refuted_colors}-coloring (exhaustive search)"),
        LowerBound::Homomorphism { source, source_chi, .. } => {
            format!("homomorphism from {source} (chi = {source_chi})")
        }
    }
}

fn join(values: &[usize]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

type Suite = fn(&SolveOptions) -> mkneser::Result<Run>;

fn verify_target(target: Target, opts: &SolveOptions) -> CliResult<()> {
    let suites: Vec<(&str, Suite)> = match target {
        Target::Petersen => vec![("petersen", verify::petersen)],
        Target::Lovasz => vec![("lovasz", verify::lovasz)],
        Target::Theorem2 => vec![("theorem2", verify::theorem)],
        Target::Prop1 => vec![("prop1", verify::proposition_duality)],
        Target::Corollary => vec![("corollary", verify::corollary)],
        Target::Growth => vec![("growth", verify::growth)],
        Target::All => vec![
            ("petersen", verify::petersen),
            ("lovasz", verify::lovasz),
            ("theorem2", verify::theorem),
            ("corollary", verify::corollary),
            ("prop1", verify::proposition_duality),
            ("growth", verify::growth),
        ],
    };
    let mut samples: Vec<ChiSample> = Vec::new();
    let mut ok = true;
    for (name, suite) in suites {
        let run = suite(opts)?;
        ok &= print_run(name, &run);
        if name == "petersen" {
            if let Some(s) = run.samples.first() {
                println!("chi={}, D={}, {}", s.chi, s.removal_bound, if s.chi < s.removal_bound { "VIOLATED" } else { "HOLDS" });
            }
        }
        samples.extend(run.samples);
    }
    if target == Target::All {
        ok &= print_run("a-h inequality", &verify::conjectured_bound(&samples));
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification("see the FAIL lines above".into()))
    }
}

fn print_run(name: &str, run: &Run) -> bool {
    for c in &run.checks {
        println!("{c}");
    }
    let passed = run.passed();
    println!("{name}: {}", if passed { "PASS" } else { "FAIL" });
    passed
}
