//! `satkit` — command-line front end for the solvers, the seating encoder,
//! and the sweep harness.
//!
//! Solving follows the SAT-competition conventions: a verdict line
//! (`s SATISFIABLE` / `s UNSATISFIABLE` / `s UNKNOWN`), a `v` model line
//! when a model exists, and exit codes 10, 20, and 30 respectively, with 1
//! reserved for parse and I/O failures. Every randomized command either
//! takes `--seed` or draws one from system entropy and reports it, so any
//! run can be replayed exactly.

mod model_file;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use model_file::parse_model;
use satkit::cnf::{Formula, Model, UnknownReason, Variable, Verdict};
use satkit::dimacs::{parse_dimacs, serialize_dimacs, DimacsDocument, ParseMode};
use satkit::experiment::{emit_csv, emit_plot_svg, parse_config, run_experiment_with_progress};
use satkit::oracle::brute_force_solve;
use satkit::resolution::{pl_resolution, ResolutionLimits};
use satkit::seating::{
    decode, encode, generate_instance, parse_instance, serialize_instance, SeatingInstance,
};
use satkit::walksat::{verify_model, walksat, WalkSatParams};

#[derive(Parser)]
#[command(
    name = "satkit",
    version,
    about = "CNF-SAT toolkit: complete and stochastic solvers, a seating encoder, and sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a DIMACS CNF file and report the verdict.
    Solve(SolveArgs),
    /// Check a model file against a DIMACS CNF file.
    Verify(VerifyArgs),
    /// Draw a random seating instance.
    Generate(GenerateArgs),
    /// Encode a seating instance (from a file, or freshly drawn) as DIMACS.
    EncodeSeating(EncodeSeatingArgs),
    /// Turn a satisfying model of an encoded instance back into a chart.
    Decode(DecodeArgs),
    /// Run a satisfiability sweep described by a config file.
    Experiment(ExperimentArgs),
}

impl Command {
    /// Exit code when the command fails outright (unreadable or malformed
    /// inputs): `verify` and `decode` reserve 1 for honest negative
    /// outcomes, so their failures exit 2.
    fn failure_code(&self) -> u8 {
        match self {
            Command::Verify(_) | Command::Decode(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolverChoice {
    /// Stochastic local search; sound but incomplete.
    Walksat,
    /// Saturation resolution; complete within its resource limits.
    Resolution,
    /// Exhaustive enumeration; exact up to 24 variables.
    Oracle,
}

#[derive(Args)]
struct SolveArgs {
    /// DIMACS CNF file to solve.
    path: PathBuf,
    /// Solver to run.
    #[arg(long, value_enum)]
    solver: SolverChoice,
    /// WalkSAT random-move probability.
    #[arg(short, long, default_value_t = 0.5)]
    p: f64,
    /// WalkSAT flip budget.
    #[arg(long, default_value_t = 100)]
    max_flips: u64,
    /// Seed for walksat (drawn from entropy and echoed when omitted).
    #[arg(long)]
    seed: Option<u64>,
    /// Resolution clause cap.
    #[arg(long, default_value_t = ResolutionLimits::default().max_clauses)]
    max_clauses: usize,
    /// Resolution round cap.
    #[arg(long, default_value_t = ResolutionLimits::default().max_rounds)]
    max_rounds: u32,
    /// Resolution time budget in seconds.
    #[arg(long, default_value_t = 60.0)]
    time_budget: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// DIMACS CNF file.
    cnf: PathBuf,
    /// Model file: `v` lines or signed literals, `0`-terminated.
    model: PathBuf,
}

#[derive(Args)]
struct GenerateArgs {
    /// Number of guests.
    #[arg(long)]
    guests: u32,
    /// Number of tables.
    #[arg(long)]
    tables: u32,
    /// Probability that a pair are friends.
    #[arg(long, default_value_t = 0.0)]
    f: f64,
    /// Probability that a pair are enemies.
    #[arg(long, default_value_t = 0.0)]
    e: f64,
    /// Generator seed (drawn from entropy and echoed when omitted).
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EncodeSeatingArgs {
    /// Instance file to encode (instead of drawing one).
    #[arg(long, conflicts_with_all = ["f", "e", "seed"])]
    instance: Option<PathBuf>,
    /// Number of guests (checked against the file when both are given).
    #[arg(long, required_unless_present = "instance")]
    guests: Option<u32>,
    /// Number of tables (checked against the file when both are given).
    #[arg(long, required_unless_present = "instance")]
    tables: Option<u32>,
    /// Probability that a pair are friends (drawing mode).
    #[arg(long, default_value_t = 0.0)]
    f: f64,
    /// Probability that a pair are enemies (drawing mode).
    #[arg(long, default_value_t = 0.0)]
    e: f64,
    /// Generator seed (drawn from entropy and echoed when omitted).
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecodeArgs {
    /// Instance file the model's formula was encoded from.
    #[arg(long)]
    instance: PathBuf,
    /// Model file for the encoded formula.
    #[arg(long)]
    model: PathBuf,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Sweep config file (flat `key = value` lines).
    #[arg(long)]
    config: PathBuf,
    /// Write the CSV table here (stdout when omitted).
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Also write an SVG plot here.
    #[arg(long)]
    plot: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let failure_code = cli.command.failure_code();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(failure_code)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Generate(args) => cmd_generate(args),
        Command::EncodeSeating(args) => cmd_encode_seating(args),
        Command::Decode(args) => cmd_decode(args),
        Command::Experiment(args) => cmd_experiment(args),
    }
}

/// Reads and leniently parses a DIMACS file, echoing recoverable defects as
/// comment lines so they never corrupt the machine-readable output.
fn read_dimacs(path: &PathBuf) -> Result<Formula> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed = parse_dimacs(&text, ParseMode::Lenient)
        .with_context(|| format!("parsing {}", path.display()))?;
    for warning in &parsed.warnings {
        println!("c warning: {warning}");
    }
    Ok(parsed.document.formula)
}

fn entropy_seed() -> u64 {
    rand::random()
}

fn model_line(model: &Model) -> String {
    let mut line = String::from("v");
    for id in 1..=model.num_vars() {
        let code = i64::from(id);
        line.push_str(&format!(
            " {}",
            if model.value(Variable::new(id)) { code } else { -code }
        ));
    }
    line.push_str(" 0");
    line
}

fn cmd_solve(args: SolveArgs) -> Result<u8> {
    let formula = read_dimacs(&args.path)?;
    let verdict = match args.solver {
        SolverChoice::Walksat => {
            if !args.p.is_finite() || !(0.0..=1.0).contains(&args.p) {
                bail!("-p must lie in [0, 1]");
            }
            if args.max_flips == 0 {
                bail!("--max-flips must be at least 1");
            }
            let seed = args.seed.unwrap_or_else(entropy_seed);
            println!("c seed {seed}");
            let params = WalkSatParams { p: args.p, max_flips: args.max_flips, seed };
            walksat(&formula, &params).0
        }
        SolverChoice::Resolution => {
            if !args.time_budget.is_finite() || args.time_budget <= 0.0 {
                bail!("--time-budget must be a positive number of seconds");
            }
            if args.max_clauses == 0 || args.max_rounds == 0 {
                bail!("--max-clauses and --max-rounds must be at least 1");
            }
            let limits = ResolutionLimits {
                max_clauses: args.max_clauses,
                max_rounds: args.max_rounds,
                time_budget: Duration::from_secs_f64(args.time_budget),
            };
            pl_resolution(&formula, &limits).0
        }
        SolverChoice::Oracle => brute_force_solve(&formula)?,
    };
    match verdict {
        Verdict::Satisfiable(model) => {
            println!("s SATISFIABLE");
            if let Some(model) = model {
                println!("{}", model_line(&model));
            }
            Ok(10)
        }
        Verdict::Unsatisfiable => {
            println!("s UNSATISFIABLE");
            Ok(20)
        }
        Verdict::Unknown(reason) => {
            let explanation = match reason {
                UnknownReason::FlipBudgetExhausted => "flip budget exhausted",
                UnknownReason::ResourceLimitExceeded => "resource limit exceeded",
            };
            println!("c {explanation}");
            println!("s UNKNOWN");
            Ok(30)
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let cnf_text =
        fs::read_to_string(&args.cnf).with_context(|| format!("reading {}", args.cnf.display()))?;
    let parsed = parse_dimacs(&cnf_text, ParseMode::Lenient)
        .with_context(|| format!("parsing {}", args.cnf.display()))?;
    let formula = parsed.document.formula;
    let model_text = fs::read_to_string(&args.model)
        .with_context(|| format!("reading {}", args.model.display()))?;
    let model = parse_model(&model_text, formula.num_vars())
        .with_context(|| format!("parsing {}", args.model.display()))?;
    if verify_model(&formula, &model) {
        println!("VALID");
        Ok(0)
    } else {
        println!("INVALID");
        Ok(1)
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<u8> {
    let seed = args.seed.unwrap_or_else(entropy_seed);
    eprintln!("seed: {seed}");
    let instance = generate_instance(args.guests, args.tables, args.f, args.e, seed)?;
    write_text(args.out.as_ref(), &serialize_instance(&instance))?;
    Ok(0)
}

fn cmd_encode_seating(args: EncodeSeatingArgs) -> Result<u8> {
    let instance = load_or_draw_instance(&args)?;
    let (formula, _) = encode(&instance);
    let document = DimacsDocument {
        comments: vec![
            format!(
                "seating encoding: {} guests, {} tables",
                instance.num_guests(),
                instance.num_tables()
            ),
            "variable (guest i, table n) = (i - 1) * tables + n".to_string(),
        ],
        formula,
    };
    write_text(args.out.as_ref(), &serialize_dimacs(&document))?;
    Ok(0)
}

fn load_or_draw_instance(args: &EncodeSeatingArgs) -> Result<SeatingInstance> {
    let Some(path) = &args.instance else {
        let (guests, tables) = (
            args.guests.expect("clap requires --guests without --instance"),
            args.tables.expect("clap requires --tables without --instance"),
        );
        let seed = args.seed.unwrap_or_else(entropy_seed);
        eprintln!("seed: {seed}");
        return Ok(generate_instance(guests, tables, args.f, args.e, seed)?);
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let instance =
        parse_instance(&text).with_context(|| format!("parsing {}", path.display()))?;
    // Dimension flags are redundant alongside a file, but when given they
    // must agree with it — silently encoding something other than what the
    // caller named would be worse than an error.
    if let Some(guests) = args.guests {
        if guests != instance.num_guests() {
            bail!(
                "--guests {} contradicts {}, which declares {} guests",
                guests,
                path.display(),
                instance.num_guests()
            );
        }
    }
    if let Some(tables) = args.tables {
        if tables != instance.num_tables() {
            bail!(
                "--tables {} contradicts {}, which declares {} tables",
                tables,
                path.display(),
                instance.num_tables()
            );
        }
    }
    Ok(instance)
}

fn cmd_decode(args: DecodeArgs) -> Result<u8> {
    let instance_text = fs::read_to_string(&args.instance)
        .with_context(|| format!("reading {}", args.instance.display()))?;
    let instance = parse_instance(&instance_text)
        .with_context(|| format!("parsing {}", args.instance.display()))?;
    let (_, map) = encode(&instance);
    let model_text = fs::read_to_string(&args.model)
        .with_context(|| format!("reading {}", args.model.display()))?;
    let model = parse_model(&model_text, map.num_vars())
        .with_context(|| format!("parsing {}", args.model.display()))?;
    match decode(&model, &map) {
        Ok(chart) => {
            for guest in 1..=chart.num_guests() {
                println!("{guest} {}", chart.table_of(guest));
            }
            Ok(0)
        }
        Err(err) => {
            // A well-formed model that is not a seating chart is an honest
            // negative outcome, not a usage failure.
            eprintln!("cannot decode: {err}");
            Ok(1)
        }
    }
}

fn cmd_experiment(args: ExperimentArgs) -> Result<u8> {
    let text = fs::read_to_string(&args.config)
        .with_context(|| format!("reading {}", args.config.display()))?;
    let config = parse_config(&text)?;
    let points = run_experiment_with_progress(&config, |point| {
        eprintln!(
            "e = {:.3}: P_complete {:.3}, P_walksat {:.3}, unknown {:.3}",
            point.e, point.p_complete, point.p_walksat, point.unknown_complete
        );
    })?;
    let csv = emit_csv(&points);
    match &args.csv {
        Some(path) => {
            fs::write(path, &csv).with_context(|| format!("writing {}", path.display()))?;
        }
        None => print!("{csv}"),
    }
    if let Some(path) = &args.plot {
        let svg = emit_plot_svg(&points)?;
        fs::write(path, svg).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(0)
}

fn write_text(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        }
        None => print!("{text}"),
    }
    Ok(())
}
