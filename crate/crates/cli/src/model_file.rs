//! Parsing of model files: the assignments fed to `verify` and `decode`.
//!
//! Accepted shapes are solver-style `v` lines (`v 1 -2 3 0`), bare signed
//! literals separated by whitespace or newlines, or a mix. `c` comment lines
//! and `s` status lines are skipped, a `0` token ends the model, and
//! everything after it is ignored — so a solver's stdout can be saved and
//! replayed directly.

use anyhow::{bail, Result};
use satkit::cnf::Model;

/// Parses a model file into a total assignment over `num_vars` variables.
///
/// Fails on unreadable tokens, variables outside `1..=num_vars`,
/// contradictory literals (both `x` and `-x`), and partial assignments —
/// every variable must receive a value, else a verification pass would be
/// meaningless.
pub fn parse_model(text: &str, num_vars: u32) -> Result<Model> {
    let mut values: Vec<Option<bool>> = vec![None; num_vars as usize];
    'lines: for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('s') {
            continue;
        }
        for token in trimmed.split_whitespace() {
            if token == "v" {
                continue;
            }
            let code: i64 = match token.parse() {
                Ok(code) => code,
                Err(_) => bail!("unreadable literal `{token}` in model file"),
            };
            if code == 0 {
                break 'lines;
            }
            let var = code.unsigned_abs();
            if var > u64::from(num_vars) {
                bail!("model assigns variable {var}, but the formula has only {num_vars}");
            }
            let slot = &mut values[(var - 1) as usize];
            let value = code > 0;
            match *slot {
                Some(existing) if existing != value => {
                    bail!("model assigns variable {var} both true and false")
                }
                _ => *slot = Some(value),
            }
        }
    }
    let mut model_values = Vec::with_capacity(num_vars as usize);
    for (index, slot) in values.iter().enumerate() {
        match slot {
            Some(value) => model_values.push(*value),
            None => bail!("model leaves variable {} unassigned", index + 1),
        }
    }
    Ok(Model::new(model_values))
}
