//! Phase-transition sweeps over random seating instances.
//!
//! A sweep walks an increasing list of enemy probabilities `e`. At each
//! point it draws `instances_per_point` random instances, encodes each to
//! CNF, and hands the *identical* formula to two solvers: a complete one
//! (resolution by default, the brute-force oracle on request) and WalkSAT.
//! The per-point result records, for each solver, the fraction of instances
//! found satisfiable, plus the fraction the complete solver had to abandon
//! within its resource limits — reported separately so that `p_complete`
//! only ever counts proven verdicts.
//!
//! Because WalkSAT models are verified before they are counted and both
//! solvers see the same instances, `p_walksat <= p_complete +
//! unknown_complete` holds exactly at every point.
//!
//! # Reproducibility
//!
//! Every random choice in a sweep descends from `master_seed` through
//! [`derive_seed`], a fixed integer-mixing function over (master seed, point
//! index, instance index, stream). Stream [`STREAM_INSTANCE`] seeds instance
//! generation and stream [`STREAM_WALKSAT`] seeds the WalkSAT run, so the
//! schedule is independent of execution order and reruns of an equal
//! [`ExperimentConfig`] reproduce every verdict.
//!
//! The mean-runtime fields are part of that contract: they report a
//! deterministic cost model — operation counts at one microsecond per unit —
//! rather than wall-clock time, so equal configs yield byte-identical CSV
//! output on any machine. Resolution costs its generated resolvents plus
//! final clause count, the oracle costs the assignments it enumerated, and
//! WalkSAT costs its flips plus the initial assignment. Wall-clock figures,
//! where needed, are the caller's to measure.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::time::Duration;

use thiserror::Error;

use crate::cnf::{Formula, Variable, Verdict};
use crate::oracle::{self, brute_force_solve};
use crate::resolution::{pl_resolution_with, ResolutionLimits, TautologyPolicy};
use crate::seating::{encode, generate_instance};
use crate::walksat::{verify_model, walksat, WalkSatParams};

/// Stream index for derived seeds that feed instance generation.
pub const STREAM_INSTANCE: u64 = 0;
/// Stream index for derived seeds that feed the WalkSAT run.
pub const STREAM_WALKSAT: u64 = 1;

/// The solver paired against WalkSAT in a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompleteSolver {
    /// Saturation resolution under [`ResolutionLimits`]; may return Unknown.
    Resolution,
    /// Exhaustive enumeration; exact, but capped at 24 variables.
    Oracle,
}

/// Everything that defines a sweep. Equal configs produce equal results.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    /// Guests per instance.
    pub guests: u32,
    /// Tables per instance.
    pub tables: u32,
    /// Friendship probability, fixed across the sweep.
    pub friend_p: f64,
    /// Enemy probabilities to sweep, strictly increasing.
    pub e_values: Vec<f64>,
    /// Random instances drawn at each point.
    pub instances_per_point: u32,
    /// WalkSAT random-move probability.
    pub walksat_p: f64,
    /// WalkSAT flip budget per instance.
    pub walksat_max_flips: u64,
    /// Resource limits when the complete solver is resolution.
    pub resolution_limits: ResolutionLimits,
    /// Which complete solver runs opposite WalkSAT.
    pub complete_solver: CompleteSolver,
    /// Root of the seed schedule; see [`derive_seed`].
    pub master_seed: u64,
}

impl ExperimentConfig {
    /// A config with the given dimensions, sweep, and seed, and defaults
    /// everywhere else: `friend_p = 0`, 100 instances per point, WalkSAT at
    /// `p = 0.5` with 100 flips, default resolution limits, resolution as
    /// the complete solver.
    pub fn new(guests: u32, tables: u32, e_values: Vec<f64>, master_seed: u64) -> Self {
        ExperimentConfig {
            guests,
            tables,
            friend_p: 0.0,
            e_values,
            instances_per_point: 100,
            walksat_p: 0.5,
            walksat_max_flips: 100,
            resolution_limits: ResolutionLimits::default(),
            complete_solver: CompleteSolver::Resolution,
            master_seed,
        }
    }

    /// Checks every config invariant, returning the first violation.
    pub fn validate(&self) -> Result<(), ExperimentError> {
        let invalid = |message: String| Err(ExperimentError::InvalidConfig(message));
        if self.guests == 0 || self.tables == 0 {
            return invalid("guests and tables must both be at least 1".into());
        }
        let Some(num_vars) = self.guests.checked_mul(self.tables) else {
            return invalid(format!(
                "{} guests x {} tables exceeds the variable space",
                self.guests, self.tables
            ));
        };
        if self.instances_per_point == 0 {
            return invalid("instances_per_point must be at least 1".into());
        }
        if self.e_values.is_empty() {
            return invalid("e_values must contain at least one probability".into());
        }
        if self.e_values.iter().any(|e| !e.is_finite() || !(0.0..=1.0).contains(e)) {
            return invalid("every value in e_values must lie in [0, 1]".into());
        }
        if self.e_values.windows(2).any(|pair| pair[0] >= pair[1]) {
            return invalid("e_values must be strictly increasing".into());
        }
        if !self.friend_p.is_finite() || !(0.0..=1.0).contains(&self.friend_p) {
            return invalid("friend_p must lie in [0, 1]".into());
        }
        let max_e = *self.e_values.last().expect("e_values checked non-empty");
        if self.friend_p + max_e > 1.0 {
            return invalid(format!(
                "friend_p + max(e_values) = {} exceeds 1",
                self.friend_p + max_e
            ));
        }
        if !self.walksat_p.is_finite() || !(0.0..=1.0).contains(&self.walksat_p) {
            return invalid("walksat_p must lie in [0, 1]".into());
        }
        if self.walksat_max_flips == 0 {
            return invalid("walksat_max_flips must be at least 1".into());
        }
        if self.resolution_limits.max_clauses == 0
            || self.resolution_limits.max_rounds == 0
            || self.resolution_limits.time_budget.is_zero()
        {
            return invalid("resolution limits must all be positive".into());
        }
        if self.complete_solver == CompleteSolver::Oracle && num_vars > oracle::DEFAULT_VAR_LIMIT {
            return invalid(format!(
                "the oracle solver handles at most {} variables, but guests x tables = {num_vars}",
                oracle::DEFAULT_VAR_LIMIT
            ));
        }
        Ok(())
    }
}

/// Aggregated results for one enemy probability.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPoint {
    /// The enemy probability this point was sampled at.
    pub e: f64,
    /// Fraction of instances the complete solver proved satisfiable.
    pub p_complete: f64,
    /// Fraction of instances WalkSAT solved with a verified model.
    pub p_walksat: f64,
    /// Fraction of instances the complete solver abandoned at its limits.
    pub unknown_complete: f64,
    /// Mean complete-solver cost (deterministic model; see module docs).
    pub mean_runtime_complete: Duration,
    /// Mean WalkSAT cost (deterministic model; see module docs).
    pub mean_runtime_walksat: Duration,
}

/// Failures raised by sweep configuration and plotting.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExperimentError {
    /// A config-file line could not be parsed.
    #[error("config line {line}: {message}")]
    Config {
        /// 1-based line number in the config text.
        line: usize,
        /// What went wrong on that line.
        message: String,
    },
    /// The configuration violates an invariant.
    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(String),
    /// A plot was requested for an empty point list.
    #[error("cannot plot an empty point list")]
    EmptyInput,
}

/// The finalizing permutation of the splitmix64 generator.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the seed for one random stream of one instance of one sweep
/// point.
///
/// The four words are folded, in order, into a zero-initialized hash: each
/// step offsets the word by the golden-ratio constant `0x9E3779B97F4A7C15`,
/// XORs it in, and applies the splitmix64 finalizer. The function is fixed —
/// published results depend on it — and gives distinct, well-mixed seeds for
/// distinct inputs, so sweep instances can be regenerated individually
/// without replaying the whole run.
pub fn derive_seed(master_seed: u64, point_index: u64, instance_index: u64, stream: u64) -> u64 {
    let mut h = 0u64;
    for word in [master_seed, point_index, instance_index, stream] {
        h = mix64(h ^ word.wrapping_add(0x9E37_79B9_7F4A_7C15));
    }
    h
}

/// Assignments the oracle enumerated before returning `verdict`: models are
/// visited in counting order (variable 1 most significant, false before
/// true), so a found model's position fixes the count exactly.
fn oracle_work_units(formula: &Formula, verdict: &Verdict) -> u64 {
    match verdict {
        Verdict::Satisfiable(Some(model)) => {
            let mut index = 0u64;
            for id in 1..=formula.num_vars() {
                index = (index << 1) | u64::from(model.value(Variable::new(id)));
            }
            index + 1
        }
        Verdict::Satisfiable(None) => 1,
        Verdict::Unsatisfiable => 1u64 << formula.num_vars(),
        Verdict::Unknown(_) => 0,
    }
}

/// Mean duration of `total_units` work units (one microsecond each) spread
/// over `count` runs, rounded down to whole nanoseconds.
fn mean_work_duration(total_units: u64, count: u32) -> Duration {
    let nanos = u128::from(total_units) * 1_000 / u128::from(count);
    Duration::from_nanos(nanos as u64)
}

/// Runs the sweep described by `config`; see
/// [`run_experiment_with_progress`].
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ExperimentPoint>, ExperimentError> {
    run_experiment_with_progress(config, |_| {})
}

/// Runs the sweep described by `config`, invoking `on_point` with each
/// finished point in `e_values` order (useful for progress reporting on
/// long runs).
///
/// Both solvers see the identical instance: for instance `k` of point `i`
/// the instance is drawn with seed `derive_seed(master_seed, i, k, 0)`,
/// encoded once, and solved by the complete solver and by WalkSAT (seeded
/// with `derive_seed(master_seed, i, k, 1)`). A WalkSAT success counts
/// toward `p_walksat` only if its model verifies against the formula.
/// Instances the complete solver abandons at its resource limits are
/// recorded in `unknown_complete` and never abort the sweep.
///
/// The only error is config validation. Rerunning an equal config returns
/// equal points; the one caveat is the resolution wall-clock time budget,
/// which could flip a verdict to Unknown on a machine too slow to finish
/// within it — the default budget leaves orders-of-magnitude headroom at
/// the scales this module targets.
pub fn run_experiment_with_progress(
    config: &ExperimentConfig,
    mut on_point: impl FnMut(&ExperimentPoint),
) -> Result<Vec<ExperimentPoint>, ExperimentError> {
    config.validate()?;
    let count = config.instances_per_point;
    let mut points = Vec::with_capacity(config.e_values.len());
    for (point_index, &e) in config.e_values.iter().enumerate() {
        let mut sat_complete = 0u32;
        let mut unknown_complete = 0u32;
        let mut sat_walksat = 0u32;
        let mut work_complete = 0u64;
        let mut work_walksat = 0u64;
        for instance_index in 0..u64::from(count) {
            let instance_seed =
                derive_seed(config.master_seed, point_index as u64, instance_index, STREAM_INSTANCE);
            let instance =
                generate_instance(config.guests, config.tables, config.friend_p, e, instance_seed)
                    .expect("dimensions and probabilities were validated before the sweep");
            let (formula, _) = encode(&instance);

            let complete_verdict = match config.complete_solver {
                CompleteSolver::Resolution => {
                    let (verdict, stats) = pl_resolution_with(
                        &formula,
                        &config.resolution_limits,
                        TautologyPolicy::Discard,
                    );
                    work_complete += stats.resolvents_generated + stats.clauses_final as u64;
                    verdict
                }
                CompleteSolver::Oracle => {
                    let verdict = brute_force_solve(&formula)
                        .expect("the variable count was validated before the sweep");
                    work_complete += oracle_work_units(&formula, &verdict);
                    verdict
                }
            };
            match complete_verdict {
                Verdict::Satisfiable(_) => sat_complete += 1,
                Verdict::Unsatisfiable => {}
                Verdict::Unknown(_) => unknown_complete += 1,
            }

            let walksat_seed =
                derive_seed(config.master_seed, point_index as u64, instance_index, STREAM_WALKSAT);
            let params = WalkSatParams {
                p: config.walksat_p,
                max_flips: config.walksat_max_flips,
                seed: walksat_seed,
            };
            let (walksat_verdict, walksat_stats) = walksat(&formula, &params);
            work_walksat += walksat_stats.flips_used + 1;
            if let Some(model) = walksat_verdict.model() {
                if verify_model(&formula, model) {
                    sat_walksat += 1;
                }
            }
        }
        let point = ExperimentPoint {
            e,
            p_complete: f64::from(sat_complete) / f64::from(count),
            p_walksat: f64::from(sat_walksat) / f64::from(count),
            unknown_complete: f64::from(unknown_complete) / f64::from(count),
            mean_runtime_complete: mean_work_duration(work_complete, count),
            mean_runtime_walksat: mean_work_duration(work_walksat, count),
        };
        on_point(&point);
        points.push(point);
    }
    Ok(points)
}

/// Renders points as CSV: the fixed header
/// `e,P_complete,P_walksat,unknown_complete,mean_rt_complete_ms,mean_rt_walksat_ms`
/// followed by one row per point, every field at six decimals. Equal points
/// render to equal bytes; an empty slice renders the header alone.
pub fn emit_csv(points: &[ExperimentPoint]) -> String {
    let mut out =
        String::from("e,P_complete,P_walksat,unknown_complete,mean_rt_complete_ms,mean_rt_walksat_ms\n");
    for point in points {
        let _ = writeln!(
            out,
            "{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}",
            point.e,
            point.p_complete,
            point.p_walksat,
            point.unknown_complete,
            millis(point.mean_runtime_complete),
            millis(point.mean_runtime_walksat),
        );
    }
    out
}

fn millis(duration: Duration) -> f64 {
    duration.as_secs_f64() * 1_000.0
}

/// Renders points as a self-contained SVG line chart: both solvers' P
/// values against e, complete solver in blue, WalkSAT in red, with a
/// legend, axis labels `e` and `P`, and the y-axis fixed to `[0, 1]`.
/// Output bytes are a pure function of the input. A single point degrades
/// to one-vertex polylines; an empty slice is an [`ExperimentError::EmptyInput`]
/// error.
pub fn emit_plot_svg(points: &[ExperimentPoint]) -> Result<String, ExperimentError> {
    if points.is_empty() {
        return Err(ExperimentError::EmptyInput);
    }
    const WIDTH: f64 = 640.0;
    const HEIGHT: f64 = 420.0;
    const LEFT: f64 = 60.0;
    const RIGHT: f64 = 610.0;
    const TOP: f64 = 30.0;
    const BOTTOM: f64 = 370.0;
    const COMPLETE_COLOR: &str = "#1f77b4";
    const WALKSAT_COLOR: &str = "#d62728";

    let min_e = points.iter().map(|p| p.e).fold(f64::INFINITY, f64::min);
    let max_e = points.iter().map(|p| p.e).fold(f64::NEG_INFINITY, f64::max);
    let x_of = |e: f64| {
        if max_e > min_e {
            LEFT + (e - min_e) / (max_e - min_e) * (RIGHT - LEFT)
        } else {
            (LEFT + RIGHT) / 2.0
        }
    };
    let y_of = |p: f64| BOTTOM - p * (BOTTOM - TOP);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">"
    );
    let _ = writeln!(svg, "  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#ffffff\"/>");

    // Horizontal gridlines and y-axis tick labels over the fixed [0, 1] range.
    for tick in 0..=4 {
        let value = f64::from(tick) * 0.25;
        let y = y_of(value);
        let _ = writeln!(
            svg,
            "  <line x1=\"{LEFT}\" y1=\"{y:.2}\" x2=\"{RIGHT}\" y2=\"{y:.2}\" \
             stroke=\"#dddddd\" stroke-width=\"1\"/>"
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{value:.2}</text>",
            LEFT - 8.0,
            y + 4.0,
        );
    }
    // One x-axis tick per sweep point.
    for point in points {
        let x = x_of(point.e);
        let _ = writeln!(
            svg,
            "  <line x1=\"{x:.2}\" y1=\"{BOTTOM}\" x2=\"{x:.2}\" y2=\"{:.2}\" \
             stroke=\"#333333\" stroke-width=\"1\"/>",
            BOTTOM + 5.0,
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{x:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{:.2}</text>",
            BOTTOM + 18.0,
            point.e,
        );
    }
    let _ = writeln!(
        svg,
        "  <line x1=\"{LEFT}\" y1=\"{TOP}\" x2=\"{LEFT}\" y2=\"{BOTTOM}\" \
         stroke=\"#333333\" stroke-width=\"1\"/>"
    );
    let _ = writeln!(
        svg,
        "  <line x1=\"{LEFT}\" y1=\"{BOTTOM}\" x2=\"{RIGHT}\" y2=\"{BOTTOM}\" \
         stroke=\"#333333\" stroke-width=\"1\"/>"
    );

    for (color, series, label_y) in [
        (COMPLETE_COLOR, points.iter().map(|p| p.p_complete).collect::<Vec<_>>(), 0),
        (WALKSAT_COLOR, points.iter().map(|p| p.p_walksat).collect::<Vec<_>>(), 1),
    ] {
        let vertices: Vec<String> = points
            .iter()
            .zip(&series)
            .map(|(point, &value)| format!("{:.2},{:.2}", x_of(point.e), y_of(value)))
            .collect();
        let _ = writeln!(
            svg,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>",
            vertices.join(" "),
        );
        for (point, &value) in points.iter().zip(&series) {
            let _ = writeln!(
                svg,
                "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{color}\"/>",
                x_of(point.e),
                y_of(value),
            );
        }
        // Legend entry: a sample segment and the series name, top-right.
        let y = TOP + 10.0 + f64::from(label_y) * 18.0;
        let name = if label_y == 0 { "complete" } else { "walksat" };
        let _ = writeln!(
            svg,
            "  <line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" \
             stroke=\"{color}\" stroke-width=\"2\"/>",
            RIGHT - 120.0,
            RIGHT - 90.0,
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{:.2}\" y=\"{:.2}\">{name}</text>",
            RIGHT - 84.0,
            y + 4.0,
        );
    }

    let _ = writeln!(
        svg,
        "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">e</text>",
        (LEFT + RIGHT) / 2.0,
        HEIGHT - 8.0,
    );
    let _ = writeln!(
        svg,
        "  <text x=\"18\" y=\"{:.2}\" text-anchor=\"middle\">P</text>",
        (TOP + BOTTOM) / 2.0,
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Parses the flat `key = value` config-file format.
///
/// Blank lines are skipped and `#` starts a comment. Keys mirror the
/// [`ExperimentConfig`] fields: `guests`, `tables`, `e_values`, and
/// `master_seed` are required; `friend_p`, `instances_per_point`,
/// `walksat_p`, `walksat_max_flips`, `resolution_max_clauses`,
/// `resolution_max_rounds`, `resolution_time_budget_secs`, and
/// `complete_solver` (`resolution` or `oracle`) are optional and default as
/// in [`ExperimentConfig::new`]. `e_values` is a list separated by commas
/// or whitespace. Duplicate and unknown keys are errors, and the parsed
/// config is validated before it is returned.
pub fn parse_config(text: &str) -> Result<ExperimentConfig, ExperimentError> {
    let mut guests: Option<u32> = None;
    let mut tables: Option<u32> = None;
    let mut friend_p = 0.0f64;
    let mut e_values: Option<Vec<f64>> = None;
    let mut instances_per_point = 100u32;
    let mut walksat_p = 0.5f64;
    let mut walksat_max_flips = 100u64;
    let mut resolution_limits = ResolutionLimits::default();
    let mut complete_solver = CompleteSolver::Resolution;
    let mut master_seed: Option<u64> = None;
    let mut seen_keys: HashSet<String> = HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split_once('#').map_or(raw, |(head, _)| head).trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(ExperimentError::Config {
                line,
                message: format!("expected `key = value`, found `{content}`"),
            });
        };
        let (key, value) = (key.trim(), value.trim());
        if !seen_keys.insert(key.to_string()) {
            return Err(ExperimentError::Config {
                line,
                message: format!("duplicate key `{key}`"),
            });
        }
        match key {
            "guests" => guests = Some(parse_scalar(value, key, line)?),
            "tables" => tables = Some(parse_scalar(value, key, line)?),
            "friend_p" => friend_p = parse_scalar(value, key, line)?,
            "e_values" => {
                let list = value
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|token| !token.is_empty())
                    .map(|token| parse_scalar(token, key, line))
                    .collect::<Result<Vec<f64>, _>>()?;
                e_values = Some(list);
            }
            "instances_per_point" => instances_per_point = parse_scalar(value, key, line)?,
            "walksat_p" => walksat_p = parse_scalar(value, key, line)?,
            "walksat_max_flips" => walksat_max_flips = parse_scalar(value, key, line)?,
            "resolution_max_clauses" => {
                resolution_limits.max_clauses = parse_scalar(value, key, line)?;
            }
            "resolution_max_rounds" => {
                resolution_limits.max_rounds = parse_scalar(value, key, line)?;
            }
            "resolution_time_budget_secs" => {
                let secs: f64 = parse_scalar(value, key, line)?;
                if !secs.is_finite() || secs <= 0.0 {
                    return Err(ExperimentError::Config {
                        line,
                        message: "resolution_time_budget_secs must be a positive number".into(),
                    });
                }
                resolution_limits.time_budget = Duration::from_secs_f64(secs);
            }
            "complete_solver" => {
                complete_solver = match value {
                    "resolution" => CompleteSolver::Resolution,
                    "oracle" => CompleteSolver::Oracle,
                    other => {
                        return Err(ExperimentError::Config {
                            line,
                            message: format!(
                                "unknown solver `{other}` (expected `resolution` or `oracle`)"
                            ),
                        })
                    }
                };
            }
            "master_seed" => master_seed = Some(parse_scalar(value, key, line)?),
            other => {
                return Err(ExperimentError::Config {
                    line,
                    message: format!("unknown key `{other}`"),
                });
            }
        }
    }

    let missing =
        |key: &str| ExperimentError::InvalidConfig(format!("missing required key `{key}`"));
    let config = ExperimentConfig {
        guests: guests.ok_or_else(|| missing("guests"))?,
        tables: tables.ok_or_else(|| missing("tables"))?,
        friend_p,
        e_values: e_values.ok_or_else(|| missing("e_values"))?,
        instances_per_point,
        walksat_p,
        walksat_max_flips,
        resolution_limits,
        complete_solver,
        master_seed: master_seed.ok_or_else(|| missing("master_seed"))?,
    };
    config.validate()?;
    Ok(config)
}

fn parse_scalar<T>(value: &str, key: &str, line: usize) -> Result<T, ExperimentError>
where
    T: std::str::FromStr,
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|err| ExperimentError::Config {
        line,
        message: format!("invalid value `{value}` for `{key}`: {err}"),
    })
}
