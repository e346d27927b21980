//! A compact CNF-SAT toolkit built around two solvers and one application.
//!
//! The pieces fit together as a pipeline:
//!
//! - [`cnf`] — the shared vocabulary: variables, literals, canonical
//!   clauses, formulas, models, and solver verdicts. The most-used types
//!   are re-exported at the crate root.
//! - [`dimacs`] — parsing and serialization of the standard DIMACS CNF
//!   interchange format, with comment preservation and a lenient mode
//!   that reports recoverable defects as warnings.
//! - [`resolution`] — a complete saturation solver built on the resolution
//!   rule, with configurable resource limits that turn runaway instances
//!   into honest `Unknown` verdicts.
//! - [`walksat`] — the WalkSAT stochastic local-search solver: fast,
//!   seeded, sound for its `Satisfiable` verdicts, and silent on
//!   unsatisfiability.
//! - [`oracle`] — brute-force enumeration for desk-scale ground truth;
//!   the reference the other solvers are tested against.
//! - [`seating`] — a worked constraint problem: seat guests at tables so
//!   friends share one and enemies never do, encoded to CNF and decoded
//!   back to seating charts.
//! - [`experiment`] — reproducible sweeps that measure how often random
//!   seating instances stay satisfiable as the enmity probability grows,
//!   with CSV and SVG output.
//!
//! Determinism is a design rule throughout: every randomized component
//! takes an explicit seed, and equal seeds replay equal runs.

pub mod cnf;
pub mod dimacs;
pub mod experiment;
pub mod oracle;
pub mod resolution;
pub mod seating;
pub mod walksat;

pub use cnf::{
    Clause, CnfError, Formula, Literal, Model, Polarity, UnknownReason, Variable, Verdict,
};
