//! Argument definitions and the four subcommands.

use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use rml_core::coloring::{construct_split, SplitSpec};
use rml_core::counting::count_in_view;
use rml_core::search::{anneal_min, exhaustive_min, SearchConfig, MAX_EXHAUSTIVE_N};
use rml_core::{Color, Error, MonoCount, Pattern};

use crate::error::CliError;
use crate::report::{Provenance, Report};
use crate::rmc::{read_rmc, to_rmc, write_rmc};
use crate::suites::{self, Suite};

#[derive(Debug, Parser)]
#[command(name = "rml", version, about = "Monochromatic copies in two-colored complete graphs")]
pub struct Cli {
    /// Worker threads for the library's parallel loops.
    #[arg(long, env = "RML_THREADS", global = true)]
    pub threads: Option<usize>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a split coloring, optionally with flipped pairs.
    Construct(ConstructArgs),
    /// Count monochromatic copies of a pattern in a coloring file.
    Count(CountArgs),
    /// Minimize the monochromatic count over colorings of K_n.
    Search(SearchArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two comma-separated integers, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("{t:?} is not a nonnegative integer"));
    Ok((num(a)?, num(b)?))
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Sizes of the two blue cliques, `a,b`.
    #[arg(long, value_parser = parse_pair)]
    pub split: (usize, usize),
    /// Pair `i,j` to invert after construction; repeatable.
    #[arg(long, value_parser = parse_pair)]
    pub flip: Vec<(usize, usize)>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorChoice {
    Red,
    Blue,
    Both,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// `P_k`, `C_k`, `S_k` or `K3`.
    #[arg(long)]
    pub pattern: Pattern,
    #[arg(long, value_enum, default_value_t = ColorChoice::Both)]
    pub color: ColorChoice,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("method").required(true).args(["exhaustive", "anneal"])))]
pub struct SearchArgs {
    #[arg(long)]
    pub pattern: Pattern,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long)]
    pub anneal: bool,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub restarts: Option<usize>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub initial_temperature: Option<f64>,
    #[arg(long)]
    pub cooling: Option<f64>,
    /// Where to write the witness coloring.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

/// A finished command: its report, human-readable lines, and whether a
/// verification failed.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub lines: Vec<String>,
    pub failed: bool,
}

pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut outcome = match command {
        Command::Construct(a) => construct(a)?,
        Command::Count(a) => count(a)?,
        Command::Search(a) => search(a)?,
        Command::Verify(a) => verify(a)?,
    };
    outcome.report.wall_time_ms = u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX);
    Ok(outcome)
}

fn summary(report: Report) -> Outcome {
    let lines = report.to_text().lines().map(str::to_owned).collect();
    Outcome { report, lines, failed: false }
}

fn construct(args: &ConstructArgs) -> Result<Outcome, CliError> {
    let (a, b) = args.split;
    let spec = SplitSpec { a, b, flips: args.flip.clone() };
    let c = construct_split(&spec)?;
    let mut r = Report::new("construct");
    r.input("split", format!("{a},{b}"));
    if !args.flip.is_empty() {
        let flips: Vec<String> = args.flip.iter().map(|(i, j)| format!("{i},{j}")).collect();
        r.input("flip", flips.join(" "));
    }
    if let Some(out) = &args.out {
        write_rmc(out, &c)?;
        r.input("out", out.display());
    }
    r.push("n", c.n(), Provenance::Exact)
        .push("red_edges", c.red_edge_count(), Provenance::Exact)
        .push("blue_edges", c.blue_edge_count(), Provenance::Exact);
    r.witness = Some(to_rmc(&c));
    Ok(summary(r))
}

fn count(args: &CountArgs) -> Result<Outcome, CliError> {
    let c = read_rmc(&args.input)?;
    let mut r = Report::new("count");
    r.input("in", args.input.display()).input("pattern", args.pattern);
    let colors: &[Color] = match args.color {
        ColorChoice::Red => &[Color::Red],
        ColorChoice::Blue => &[Color::Blue],
        ColorChoice::Both => &[Color::Red, Color::Blue],
    };
    r.input("color", format!("{:?}", args.color).to_lowercase());
    let mut total = MonoCount::zero();
    for &color in colors {
        let m = count_in_view(&c.view(color), args.pattern)?;
        total = MonoCount(total.0 + &m.0);
        r.push(color.name(), m, Provenance::Exact);
    }
    r.push("total", total, Provenance::Exact);
    Ok(summary(r))
}

fn search(args: &SearchArgs) -> Result<Outcome, CliError> {
    let mut r = Report::new("search");
    r.input("pattern", args.pattern).input("n", args.n);
    let result = if args.exhaustive {
        r.input("method", "exhaustive");
        exhaustive_min(args.pattern, args.n).map_err(|e| match e {
            Error::Capability(_) => CliError::Usage(format!("{e} (n > {MAX_EXHAUSTIVE_N}: rerun with --anneal)")),
            e => e.into(),
        })?
    } else {
        let mut cfg = SearchConfig::with_seed(args.seed);
        if let Some(v) = args.restarts {
            cfg.restarts = v;
        }
        if let Some(v) = args.steps {
            cfg.steps_per_restart = v;
        }
        if let Some(v) = args.initial_temperature {
            cfg.initial_temperature = v;
        }
        if let Some(v) = args.cooling {
            cfg.cooling_rate = v;
        }
        r.input("method", "anneal")
            .input("seed", cfg.seed)
            .input("restarts", cfg.restarts)
            .input("steps", cfg.steps_per_restart)
            .input("initial_temperature", cfg.initial_temperature)
            .input("cooling", cfg.cooling_rate);
        anneal_min(args.pattern, args.n, &cfg)?
    };
    let provenance = if result.exact { Provenance::Exact } else { Provenance::UpperBound };
    r.push("best_count", &result.best_count, provenance)
        .push("explored", result.explored, Provenance::Exact);
    if let Some(out) = &args.out {
        write_rmc(out, &result.witness)?;
        r.input("out", out.display());
    }
    r.witness = Some(to_rmc(&result.witness));
    Ok(summary(r))
}

fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let checks = suites::run(args.suite, args.seed)?;
    let mut r = Report::new("verify");
    r.input("suite", args.suite.name()).input("seed", args.seed);
    let mut failed = false;
    let mut lines = Vec::with_capacity(checks.len() + 1);
    for c in &checks {
        failed |= !c.passed;
        lines.push(c.line());
        r.push(&c.anchor, if c.passed { "PASS" } else { "FAIL" }, c.provenance);
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    lines.push(format!("{passed}/{} checks passed", checks.len()));
    Ok(Outcome { report: r, lines, failed })
}
