//! Command-line front end: validate, enumerate, and measure restriction-graph
//! permutation families.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 semantic rejection
//! (cyclic input, empty family, tied extremes), 3 enumeration limit exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use permbound::extremal::{self, DiameterReport};
use permbound::families::{self, descent_to_graph, DescentSet, HessenbergFunction};
use permbound::format;
use permbound::oracle;
use permbound::{Error, Metric, Permutation, RestrictionGraph};

/// Default cap on exhaustive enumeration, overridable by PERMBOUND_LIMIT.
const DEFAULT_LIMIT: usize = 8;

#[derive(Parser)]
#[command(
    name = "permbound",
    version,
    about = "Diameters of permutation families constrained by restriction graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a graph and report whether it is acyclic.
    Validate(InputArgs),
    /// List every satisfying permutation.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        limit: LimitArg,
    },
    /// Diameter of the satisfying family in the chosen metric.
    Diameter {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_metric)]
        metric: Metric,
        /// Print the witness pair when one is available.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        limit: LimitArg,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Test whether the induced order has dimension at most 2.
    Dimension(InputArgs),
    /// Closed-form vs generic diameters for a shared descent set.
    Descent {
        #[arg(long)]
        n: usize,
        /// Comma-separated descent positions, e.g. 1,3.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        descents: Vec<u32>,
        #[arg(long, value_parser = parse_metric)]
        metric: Metric,
        /// Sweep all 2^(n-1) descent sets instead.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        limit: LimitArg,
    },
    /// Windowed inversion sets: inspect one permutation or measure a family.
    Hessenberg {
        /// Comma-separated window bounds, e.g. 2,3,4,4.
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<u32>,
        /// Permutation in one-line notation.
        #[arg(long, conflicts_with = "set")]
        sigma: Option<String>,
        /// File of `i j` pairs selecting the family.
        #[arg(long)]
        set: Option<String>,
        #[command(flatten)]
        limit: LimitArg,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, edge-list text or JSON.
    input: String,
}

#[derive(Args)]
struct LimitArg {
    /// Exhaustive-enumeration cap [default: 8, or PERMBOUND_LIMIT].
    #[arg(long)]
    limit: Option<usize>,
}

impl LimitArg {
    fn resolve(&self) -> Result<usize, String> {
        if let Some(l) = self.limit {
            return Ok(l);
        }
        match std::env::var("PERMBOUND_LIMIT") {
            Ok(s) => s
                .parse()
                .map_err(|_| format!("bad PERMBOUND_LIMIT value {s:?}")),
            Err(_) => Ok(DEFAULT_LIMIT),
        }
    }
}

fn parse_metric(s: &str) -> Result<Metric, String> {
    match s {
        "linf" => Ok(Metric::Linf),
        "kendall" => Ok(Metric::Kendall),
        _ => Err(format!("unknown metric {s:?} (expected linf or kendall)")),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::CyclicGraph { .. } | Error::NotAdmissible | Error::NonUniqueExtremes => 2,
        Error::LimitExceeded { .. } => 3,
        _ => 1,
    }
}

fn load_graph(args: &InputArgs) -> Result<RestrictionGraph, Error> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", args.input)))?;
    format::parse_graph_auto(&text)
}

fn format_cycle(cycle: &[u32]) -> String {
    let mut out = String::new();
    for v in cycle.iter().chain(cycle.first()) {
        if !out.is_empty() {
            out.push('\u{2192}');
        }
        out.push_str(&v.to_string());
    }
    out
}

/// Runs one subcommand; `Ok` carries the process exit code for answers that
/// are not errors but still signal through the code (cyclic validate).
fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Validate(input) => {
            let g = load_graph(&input)?;
            match g.topological_order() {
                Ok(_) => {
                    println!("acyclic; n={}; {} edges", g.n(), g.edge_count());
                    Ok(0)
                }
                Err(Error::CyclicGraph { cycle }) => {
                    println!("cyclic; witness: {}", format_cycle(&cycle));
                    Ok(2)
                }
                Err(e) => Err(e),
            }
        }
        Command::Enumerate { input, limit } => {
            let g = load_graph(&input)?;
            let limit = limit.resolve().map_err(Error::Parse)?;
            if !g.is_acyclic() {
                eprintln!("warning: graph is cyclic; the family is empty");
            }
            let fam = oracle::enumerate_family(&g, limit)?;
            for p in &fam {
                println!("{p}");
            }
            println!("count={}", fam.len());
            Ok(0)
        }
        Command::Diameter {
            input,
            metric,
            witness,
            limit,
            json,
        } => {
            let g = load_graph(&input)?;
            let limit = limit.resolve().map_err(Error::Parse)?;
            let report = match metric {
                Metric::Linf => extremal::linf_diameter(&g)?,
                Metric::Kendall => extremal::kendall_diameter(&g, limit)?,
            };
            if json {
                println!("{}", report_json(&report));
            } else {
                print_report(&report, witness);
            }
            Ok(0)
        }
        Command::Dimension(input) => {
            let g = load_graph(&input)?;
            match extremal::dimension_at_most_two(&g)? {
                Some(r) => {
                    println!("dim<=2: yes");
                    println!("ext1: {}", join(r.ext1()));
                    println!("ext2: {}", join(r.ext2()));
                    let (s1, s2) = r.permutations()?;
                    println!("sigma1: {s1}");
                    println!("sigma2: {s2}");
                }
                None => println!("dim<=2: no"),
            }
            Ok(0)
        }
        Command::Descent {
            n,
            descents,
            metric,
            all,
            limit,
        } => {
            let limit = limit.resolve().map_err(Error::Parse)?;
            if all {
                if n == 0 || n > 20 {
                    return Err(Error::Parse("sweep needs 1 <= n <= 20".into()));
                }
                for mask in 0u32..(1 << (n - 1)) {
                    let pos: Vec<u32> =
                        (1..n as u32).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    let d = DescentSet::new(n, pos)?;
                    let (closed, generic) = descent_values(&d, metric, limit)?;
                    println!(
                        "D={{{}}} closed={} generic={} agree={}",
                        d.positions()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                        closed,
                        generic,
                        if closed == generic { "yes" } else { "no" }
                    );
                }
            } else {
                let d = DescentSet::new(n, descents)?;
                let (closed, generic) = descent_values(&d, metric, limit)?;
                println!("{d}; metric={}", metric.name());
                println!("closed-form: {closed}");
                println!("generic:     {generic}");
                println!(
                    "agree:       {}",
                    if closed == generic { "yes" } else { "no" }
                );
            }
            Ok(0)
        }
        Command::Hessenberg {
            h,
            sigma,
            set,
            limit,
        } => {
            let limit = limit.resolve().map_err(Error::Parse)?;
            let h = HessenbergFunction::new(h)?;
            match (sigma, set) {
                (Some(sigma), None) => {
                    let sigma = Permutation::parse(&sigma)?;
                    let s = families::h_inversion_set(&sigma, &h)?;
                    println!("{h}");
                    println!("sigma = {sigma}");
                    println!("Inv_h = {s}");
                    Ok(0)
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
                    let s = format::parse_inversion_pairs(&text, h.n())?;
                    let family = families::hessenberg_family(&h, &s, limit)?;
                    let endpoint = families::hessenberg_diameter_of_family(&family)?;
                    let mut brute = 0u64;
                    for i in 0..family.len() {
                        for j in (i + 1)..family.len() {
                            brute = brute.max(family[i].kendall_distance(&family[j])?);
                        }
                    }
                    println!("{h}");
                    println!("set = {s}");
                    println!("family size: {}", family.len());
                    println!("l(x)-l(omega):   {endpoint}");
                    println!("oracle diameter: {brute}");
                    println!("agree: {}", if endpoint == brute { "yes" } else { "no" });
                    Ok(0)
                }
                _ => Err(Error::Parse("pass exactly one of --sigma or --set".into())),
            }
        }
    }
}

/// Closed-form and generic-pathway diameters for one descent set.
fn descent_values(d: &DescentSet, metric: Metric, limit: usize) -> Result<(u64, u64), Error> {
    let g = descent_to_graph(d);
    Ok(match metric {
        Metric::Linf => (
            families::descent_linf_closed_form(d) as u64,
            extremal::linf_diameter_bound(&g)? as u64,
        ),
        Metric::Kendall => (
            families::descent_kendall_closed_form(d),
            extremal::kendall_diameter(&g, limit)?.bound,
        ),
    })
}

fn join(v: &[u32]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn perm_values(p: &Permutation) -> Vec<u32> {
    p.as_slice().to_vec()
}

fn report_json(r: &DiameterReport) -> String {
    let witness = r
        .witness
        .as_ref()
        .map(|(a, b)| serde_json::json!([perm_values(a), perm_values(b)]))
        .unwrap_or(serde_json::Value::Null);
    serde_json::json!({
        "metric": r.metric.name(),
        "bound": r.bound,
        "attained": r.attained,
        "method": r.method.name(),
        "witness": witness,
    })
    .to_string()
}

fn print_report(r: &DiameterReport, witness: bool) {
    println!("metric:   {}", r.metric.name());
    println!("bound:    {}", r.bound);
    println!("attained: {}", if r.attained { "yes" } else { "no" });
    println!("method:   {}", r.method.name());
    if witness {
        match &r.witness {
            Some((a, b)) => println!("witness:  {a} | {b}"),
            None => println!("witness:  none"),
        }
    }
}
