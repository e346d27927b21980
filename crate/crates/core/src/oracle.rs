//! Exhaustive truth-table solving — the reference the real solvers are
//! checked against, usable on its own for small inputs.
//!
//! Assignments are enumerated in counting order: variable 1 is the most
//! significant position and `false < true`, so the first model returned is
//! the lexicographically first satisfying assignment.

use thiserror::Error;

use crate::cnf::{Formula, Model, Verdict};
use crate::seating::{EncodingMap, SeatingChart, SeatingInstance};

/// Largest variable count `brute_force_solve` accepts by default.
pub const DEFAULT_VAR_LIMIT: u32 = 24;

/// Largest number of seatings `brute_force_seating` will enumerate.
pub const SEATING_ASSIGNMENT_LIMIT: u64 = 1 << 24;

/// Errors produced by the brute-force procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("formula has {num_vars} variables, above the brute-force limit of {limit}")]
    TooManyVariables { num_vars: u32, limit: u32 },
    #[error("instance allows {assignments} seatings, above the brute-force limit of {limit}")]
    TooManySeatings { assignments: u64, limit: u64 },
}

/// Finds the lexicographically first satisfying assignment, or proves there
/// is none. Never returns `Unknown`.
pub fn brute_force_solve(formula: &Formula) -> Result<Verdict, OracleError> {
    brute_force_solve_with_limit(formula, DEFAULT_VAR_LIMIT)
}

/// `brute_force_solve` with an explicit variable limit.
pub fn brute_force_solve_with_limit(
    formula: &Formula,
    var_limit: u32,
) -> Result<Verdict, OracleError> {
    let num_vars = formula.num_vars();
    if num_vars > var_limit {
        return Err(OracleError::TooManyVariables { num_vars, limit: var_limit });
    }
    let mut model = Model::all_false(num_vars);
    loop {
        if formula.eval(&model) {
            return Ok(Verdict::Satisfiable(Some(model)));
        }
        if !increment(&mut model) {
            return Ok(Verdict::Unsatisfiable);
        }
    }
}

/// Counts the formula's models by full enumeration.
pub fn count_models(formula: &Formula) -> Result<u64, OracleError> {
    count_models_with_limit(formula, DEFAULT_VAR_LIMIT)
}

/// `count_models` with an explicit variable limit.
pub fn count_models_with_limit(formula: &Formula, var_limit: u32) -> Result<u64, OracleError> {
    let num_vars = formula.num_vars();
    if num_vars > var_limit {
        return Err(OracleError::TooManyVariables { num_vars, limit: var_limit });
    }
    let mut model = Model::all_false(num_vars);
    let mut count = 0;
    loop {
        if formula.eval(&model) {
            count += 1;
        }
        if !increment(&mut model) {
            return Ok(count);
        }
    }
}

/// Advances the model one step in counting order (the last variable is the
/// least significant position). Returns false once every assignment has been
/// visited.
fn increment(model: &mut Model) -> bool {
    let values = model.values();
    for index in (0..values.len()).rev() {
        let var = crate::cnf::Variable::new(index as u32 + 1);
        if model.value(var) {
            model.set(var, false);
        } else {
            model.set(var, true);
            return true;
        }
    }
    false
}

/// Decides a seating instance by enumerating all `N^M` guest-to-table maps
/// (guest 1 most significant, tables ascending) and checking the friend and
/// enemy constraints directly — no CNF involved. A found seating is returned
/// as a model under the instance's `EncodingMap`.
pub fn brute_force_seating(instance: &SeatingInstance) -> Result<Verdict, OracleError> {
    let guests = instance.num_guests();
    let tables = instance.num_tables();
    match (tables as u64).checked_pow(guests) {
        Some(assignments) if assignments <= SEATING_ASSIGNMENT_LIMIT => {}
        overflowing => {
            return Err(OracleError::TooManySeatings {
                assignments: overflowing.unwrap_or(u64::MAX),
                limit: SEATING_ASSIGNMENT_LIMIT,
            })
        }
    }

    let mut seats = vec![1u32; guests as usize];
    loop {
        if seats_ok(instance, &seats) {
            let map = EncodingMap::new(guests, tables);
            let chart = SeatingChart::new(seats);
            return Ok(Verdict::Satisfiable(Some(map.chart_to_model(&chart))));
        }
        // Advance in base N from the last guest; a wrap means exhaustion.
        let mut pos = seats.len();
        loop {
            if pos == 0 {
                return Ok(Verdict::Unsatisfiable);
            }
            pos -= 1;
            if seats[pos] < tables {
                seats[pos] += 1;
                break;
            }
            seats[pos] = 1;
        }
    }
}

fn seats_ok(instance: &SeatingInstance, seats: &[u32]) -> bool {
    instance.related_pairs().all(|((i, j), relation)| {
        let same = seats[(i - 1) as usize] == seats[(j - 1) as usize];
        match relation {
            crate::seating::Relation::Friends => same,
            crate::seating::Relation::Enemies => !same,
            crate::seating::Relation::Indifferent => true,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::cnf::Clause;
    use crate::seating::{decode, Relation};

    fn formula(num_vars: u32, clauses: &[&[i64]]) -> Formula {
        Formula::new(
            num_vars,
            clauses.iter().map(|codes| Clause::from_dimacs(codes.iter().copied())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn finds_the_lexicographically_first_model() {
        // (A v B): counting order visits FF, FT, TF, TT.
        let verdict = brute_force_solve(&formula(2, &[&[1, 2]])).unwrap();
        assert_eq!(verdict.model().unwrap().values(), &[false, true]);

        // (A & B) as two unit clauses.
        let verdict = brute_force_solve(&formula(2, &[&[1], &[2]])).unwrap();
        assert_eq!(verdict.model().unwrap().values(), &[true, true]);
    }

    #[test]
    fn contradictions_are_unsatisfiable() {
        assert!(brute_force_solve(&formula(1, &[&[1], &[-1]])).unwrap().is_unsatisfiable());
        assert!(brute_force_solve(&formula(0, &[&[]])).unwrap().is_unsatisfiable());
    }

    #[test]
    fn empty_formulas_are_satisfiable() {
        let verdict = brute_force_solve(&Formula::empty(3)).unwrap();
        assert_eq!(verdict.model().unwrap().values(), &[false, false, false]);

        let verdict = brute_force_solve(&Formula::empty(0)).unwrap();
        assert_eq!(verdict.model().unwrap().num_vars(), 0);
    }

    #[test]
    fn model_counts_match_truth_tables() {
        assert_eq!(count_models(&formula(2, &[&[1, 2]])).unwrap(), 3);
        assert_eq!(count_models(&Formula::empty(2)).unwrap(), 4);
        assert_eq!(count_models(&formula(1, &[&[-1]])).unwrap(), 1);
        assert_eq!(count_models(&formula(1, &[&[1], &[-1]])).unwrap(), 0);
        assert_eq!(count_models(&Formula::empty(0)).unwrap(), 1);
    }

    #[test]
    fn the_variable_limit_is_enforced() {
        let wide = Formula::empty(25);
        assert_eq!(
            brute_force_solve(&wide).unwrap_err(),
            OracleError::TooManyVariables { num_vars: 25, limit: 24 }
        );
        assert_eq!(
            count_models(&wide).unwrap_err(),
            OracleError::TooManyVariables { num_vars: 25, limit: 24 }
        );
        assert!(brute_force_solve_with_limit(&wide, 25).is_ok());
    }

    #[test]
    fn seating_oracle_matches_hand_analysis() {
        // Three mutual enemies cannot share two tables.
        let mut everyone_hostile = SeatingInstance::new(3, 2).unwrap();
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            everyone_hostile.set_relation(i, j, Relation::Enemies).unwrap();
        }
        assert!(brute_force_seating(&everyone_hostile).unwrap().is_unsatisfiable());

        // A friendly triangle sits at one table; the oracle finds the first
        // chart in lexicographic order.
        let mut friendly = SeatingInstance::new(3, 2).unwrap();
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            friendly.set_relation(i, j, Relation::Friends).unwrap();
        }
        let verdict = brute_force_seating(&friendly).unwrap();
        let map = EncodingMap::new(3, 2);
        let chart = decode(verdict.model().unwrap(), &map).unwrap();
        assert_eq!(chart.tables(), &[1, 1, 1]);
    }

    #[test]
    fn seating_oracle_returns_the_first_chart() {
        let mut instance = SeatingInstance::new(2, 2).unwrap();
        instance.set_relation(1, 2, Relation::Enemies).unwrap();
        let verdict = brute_force_seating(&instance).unwrap();
        let chart = decode(verdict.model().unwrap(), &EncodingMap::new(2, 2)).unwrap();
        assert_eq!(chart.tables(), &[1, 2]);
    }

    #[test]
    fn seating_oracle_rejects_oversized_instances() {
        let instance = SeatingInstance::new(25, 2).unwrap();
        assert!(matches!(
            brute_force_seating(&instance),
            Err(OracleError::TooManySeatings { .. })
        ));
    }
}
