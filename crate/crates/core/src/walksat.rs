//! The WalkSAT stochastic local-search solver.
//!
//! Starting from a uniformly random assignment, each iteration first checks
//! satisfaction, then picks a uniformly random false clause and flips one of
//! its variables: with probability `p` a uniformly random one (the walk
//! move), otherwise one whose flip maximizes the total number of satisfied
//! clauses (the greedy move). The solver is sound — a `Satisfiable` verdict
//! always carries a model that really satisfies the formula — but incomplete:
//! exhausting the flip budget says nothing about unsatisfiability.
//!
//! All randomness comes from one ChaCha8 stream seeded with `params.seed`,
//! consumed in a fixed order: the initial assignment (one boolean per
//! variable, ascending), then per iteration the false-clause pick, the
//! branch pick, and either the random symbol pick or — on greedy moves —
//! a tie-break drawn only when several flips share the maximum. Equal seeds
//! therefore replay identical runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{Clause, Formula, Model, UnknownReason, Variable, Verdict};

/// Tuning knobs for `walksat`.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkSatParams {
    /// Probability of a random-walk move instead of a greedy one.
    pub p: f64,
    /// Number of flips before giving up.
    pub max_flips: u64,
    /// Seed for the run's random stream.
    pub seed: u64,
}

impl WalkSatParams {
    /// The standard setting: `p = 0.5`, `max_flips = 100`.
    pub fn new(seed: u64) -> Self {
        WalkSatParams { p: 0.5, max_flips: 100, seed }
    }
}

impl Default for WalkSatParams {
    fn default() -> Self {
        WalkSatParams::new(0)
    }
}

/// Counters describing a `walksat` run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkSatStats {
    /// Flips performed before returning.
    pub flips_used: u64,
    /// Restarts performed; the single-try strategy never restarts.
    pub restarts: u32,
    /// False clauses at return — zero exactly when a model was found.
    pub final_unsat_count: usize,
}

/// True when `model` satisfies `formula`; the check used on every verdict a
/// stochastic run reports.
pub fn verify_model(formula: &Formula, model: &Model) -> bool {
    formula.eval(model)
}

/// Runs WalkSAT once.
///
/// Returns `Satisfiable` with the found model, or
/// `Unknown(FlipBudgetExhausted)` after `max_flips` unsuccessful flips.
/// Satisfaction is checked before each flip (including flip 0), so a lucky
/// initial assignment costs zero flips; the assignment reached by the final
/// flip is not checked. A formula containing the empty clause can never be
/// satisfied, and the walk gives up immediately without spending flips.
///
/// # Panics
///
/// Panics unless `0 <= p <= 1` and `max_flips >= 1`.
pub fn walksat(formula: &Formula, params: &WalkSatParams) -> (Verdict, WalkSatStats) {
    assert!(
        params.p.is_finite() && (0.0..=1.0).contains(&params.p),
        "walk probability must lie in [0, 1]"
    );
    assert!(params.max_flips >= 1, "max_flips must be positive");

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut model = Model::new((0..formula.num_vars()).map(|_| rng.gen::<bool>()).collect());

    let unsat_count = |model: &Model| formula.num_clauses() - formula.count_satisfied(model);
    if formula.clauses().iter().any(Clause::is_empty) {
        let final_unsat_count = unsat_count(&model);
        return (
            Verdict::Unknown(UnknownReason::FlipBudgetExhausted),
            WalkSatStats { flips_used: 0, restarts: 0, final_unsat_count },
        );
    }

    for flips_used in 0..params.max_flips {
        let false_clauses: Vec<usize> = (0..formula.num_clauses())
            .filter(|&index| !formula.clauses()[index].eval(&model))
            .collect();
        if false_clauses.is_empty() {
            return (
                Verdict::Satisfiable(Some(model)),
                WalkSatStats { flips_used, restarts: 0, final_unsat_count: 0 },
            );
        }
        let clause = &formula.clauses()[false_clauses[rng.gen_range(0..false_clauses.len())]];
        let var = choose_flip_var(clause, &model, formula, params.p, &mut rng);
        model.flip(var);
    }

    let final_unsat_count = unsat_count(&model);
    (
        Verdict::Unknown(UnknownReason::FlipBudgetExhausted),
        WalkSatStats { flips_used: params.max_flips, restarts: 0, final_unsat_count },
    )
}

/// Picks the variable WalkSAT flips for a false `clause`: with probability
/// `p` a uniformly random symbol of the clause, otherwise a flip that
/// maximizes the number of satisfied clauses of `formula`, ties broken
/// uniformly at random (the tie-break draw happens only when two or more
/// variables share the maximum).
///
/// # Panics
///
/// Panics if `clause` is empty.
pub fn choose_flip_var(
    clause: &Clause,
    model: &Model,
    formula: &Formula,
    p: f64,
    rng: &mut impl Rng,
) -> Variable {
    assert!(!clause.is_empty(), "cannot flip a variable of the empty clause");
    if rng.gen_bool(p) {
        return clause.literals()[rng.gen_range(0..clause.len())].var();
    }
    let mut scratch = model.clone();
    let mut best: Vec<Variable> = Vec::new();
    let mut best_count = 0;
    for literal in clause.literals() {
        let var = literal.var();
        scratch.flip(var);
        let count = formula.count_satisfied(&scratch);
        scratch.flip(var);
        if best.is_empty() || count > best_count {
            best.clear();
            best.push(var);
            best_count = count;
        } else if count == best_count {
            best.push(var);
        }
    }
    if best.len() == 1 {
        best[0]
    } else {
        best[rng.gen_range(0..best.len())]
    }
}
