//! Helpers shared by the integration and acceptance suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use satkit::cnf::{Clause, Formula};
use satkit::seating::{Relation, SeatingInstance};

/// Draws a random formula with up to `max_vars` variables, up to
/// `max_clauses` clauses, and clause width 1 to 3. Clauses canonicalize on
/// construction, so drawn duplicates within a clause collapse.
pub fn random_formula(rng: &mut ChaCha8Rng, max_vars: u32, max_clauses: usize) -> Formula {
    let num_vars = rng.gen_range(1..=max_vars);
    let num_clauses = rng.gen_range(0..=max_clauses);
    let clauses = (0..num_clauses)
        .map(|_| {
            let width = rng.gen_range(1..=3usize);
            Clause::from_dimacs((0..width).map(|_| {
                let var = i64::from(rng.gen_range(1..=num_vars));
                if rng.gen::<bool>() {
                    var
                } else {
                    -var
                }
            }))
        })
        .collect();
    Formula::new(num_vars, clauses).expect("drawn literals stay within num_vars")
}

/// Draws a random seating instance with uniformly chosen relations on every
/// pair (friends, enemies, and indifferent each a third).
#[allow(dead_code)] // each integration test binary uses its own slice of this module
pub fn random_instance(rng: &mut ChaCha8Rng, num_guests: u32, num_tables: u32) -> SeatingInstance {
    let mut instance = SeatingInstance::new(num_guests, num_tables)
        .expect("test dimensions are positive");
    for i in 1..=num_guests {
        for j in (i + 1)..=num_guests {
            let relation = match rng.gen_range(0..3u8) {
                0 => Relation::Friends,
                1 => Relation::Enemies,
                _ => Relation::Indifferent,
            };
            instance.set_relation(i, j, relation).expect("pair indices are in range");
        }
    }
    instance
}
