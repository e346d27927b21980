//! Deterministic fixtures shared by the criterion benches.
//!
//! Every helper takes explicit seeds or sizes so that repeated bench runs
//! measure the same inputs; none of them touch global state.

use satkit::seating::{encode, generate_instance, Relation, SeatingInstance};
use satkit::Formula;

/// CNF encoding of a randomly generated seating instance.
///
/// `e` is the enemy density passed to the generator (friend density is zero,
/// matching the sweep configurations shipped with the CLI).
///
/// # Panics
///
/// Panics if the dimensions or density are rejected by the generator; benches
/// only call it with known-good parameters.
pub fn seating_formula(num_guests: u32, num_tables: u32, e: f64, seed: u64) -> Formula {
    let instance = generate_instance(num_guests, num_tables, 0.0, e, seed)
        .expect("bench fixture parameters are valid");
    encode(&instance).0
}

/// CNF encoding of an unsatisfiable instance: every pair of guests is a pair
/// of enemies, and there are more guests than tables.
///
/// Refuting it forces the brute-force oracle through its entire assignment
/// space, which makes it a stable worst-case benchmark input.
///
/// # Panics
///
/// Panics if `num_guests <= num_tables` (the clique would be seatable) or if
/// the dimensions are rejected.
pub fn enemy_clique_formula(num_guests: u32, num_tables: u32) -> Formula {
    assert!(
        num_guests > num_tables,
        "an enemy clique is satisfiable unless guests outnumber tables"
    );
    let mut instance =
        SeatingInstance::new(num_guests, num_tables).expect("bench fixture dimensions are valid");
    for i in 1..=num_guests {
        for j in (i + 1)..=num_guests {
            instance
                .set_relation(i, j, Relation::Enemies)
                .expect("pair indices are in range");
        }
    }
    encode(&instance).0
}
