//! Saturation-based resolution proving.
//!
//! `pl_resolution` repeatedly resolves every pair of clauses in its working
//! set. Deriving the empty clause proves unsatisfiability; a round that adds
//! nothing new means the set is saturated and the formula is satisfiable
//! (no witness model is produced). Clause, round, and wall-clock limits bound
//! the otherwise exponential blow-up; hitting one yields `Unknown`, never a
//! wrong verdict.
//!
//! Each round conceptually resolves the full pairwise closure of the working
//! set, but pairs already resolved in an earlier round are skipped: their
//! resolvents are in the set already, so the outcome is unchanged.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::cnf::{Clause, Formula, UnknownReason, Verdict};

/// Resource limits for `pl_resolution`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionLimits {
    /// Largest working-set size, counting input clauses and resolvents.
    pub max_clauses: usize,
    /// Largest number of saturation rounds.
    pub max_rounds: u32,
    /// Wall-clock budget for the whole run.
    pub time_budget: Duration,
}

impl Default for ResolutionLimits {
    fn default() -> Self {
        ResolutionLimits {
            max_clauses: 200_000,
            max_rounds: 1_000,
            time_budget: Duration::from_secs(60),
        }
    }
}

/// Whether tautological resolvents are kept or dropped.
///
/// Dropping them never changes the verdict — a tautology subsumes nothing and
/// resolves only to clauses derivable without it — but shrinks the working
/// set considerably.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TautologyPolicy {
    #[default]
    Discard,
    Keep,
}

/// Counters describing a `pl_resolution` run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionStats {
    /// Rounds attempted (at most `max_rounds`).
    pub rounds: u32,
    /// Working-set size at return (at most `max_clauses`).
    pub clauses_final: usize,
    /// Resolvents emitted by pair resolution, counting repeats.
    pub resolvents_generated: u64,
    /// Wall-clock time spent.
    pub elapsed: Duration,
    /// True when the empty clause was derived (or present in the input).
    pub derived_empty: bool,
}

/// Resolves two clauses on every clashing variable, dropping tautological
/// resolvents.
pub fn pl_resolve(ci: &Clause, cj: &Clause) -> Vec<Clause> {
    pl_resolve_with(ci, cj, TautologyPolicy::Discard)
}

/// `pl_resolve` under an explicit tautology policy.
///
/// For each literal of `ci` whose negation appears in `cj`, the resolvent
/// merges the remaining literals of both clauses into canonical form. The
/// returned list is duplicate-free; resolving `{A, B}` with `{~A, C}` gives
/// `{B, C}`, and `{A}` with `{~A}` gives the empty clause.
pub fn pl_resolve_with(ci: &Clause, cj: &Clause, policy: TautologyPolicy) -> Vec<Clause> {
    let mut resolvents: Vec<Clause> = Vec::new();
    for &pivot in ci.literals() {
        if !cj.contains(pivot.negated()) {
            continue;
        }
        let merged = Clause::new(
            ci.literals()
                .iter()
                .copied()
                .filter(|&lit| lit != pivot)
                .chain(cj.literals().iter().copied().filter(|&lit| lit != pivot.negated())),
        );
        if policy == TautologyPolicy::Discard && merged.is_tautology() {
            continue;
        }
        if !resolvents.contains(&merged) {
            resolvents.push(merged);
        }
    }
    resolvents
}

/// Decides a formula by resolution saturation under the default tautology
/// policy.
pub fn pl_resolution(formula: &Formula, limits: &ResolutionLimits) -> (Verdict, ResolutionStats) {
    pl_resolution_with(formula, limits, TautologyPolicy::Discard)
}

/// `pl_resolution` under an explicit tautology policy.
pub fn pl_resolution_with(
    formula: &Formula,
    limits: &ResolutionLimits,
    policy: TautologyPolicy,
) -> (Verdict, ResolutionStats) {
    assert!(limits.max_clauses >= 1, "max_clauses must be positive");
    assert!(limits.max_rounds >= 1, "max_rounds must be positive");
    assert!(limits.time_budget > Duration::ZERO, "time_budget must be positive");

    let start = Instant::now();
    let mut resolvents_generated: u64 = 0;

    let stats = |rounds: u32, clauses_final: usize, resolvents_generated: u64, derived_empty: bool| {
        ResolutionStats {
            rounds,
            clauses_final,
            resolvents_generated,
            elapsed: start.elapsed(),
            derived_empty,
        }
    };

    // An empty input clause is already the contradiction the loop searches
    // for; no pair resolution is needed.
    if formula.clauses().iter().any(Clause::is_empty) {
        let distinct: HashSet<&Clause> = formula.clauses().iter().collect();
        return (Verdict::Unsatisfiable, stats(0, distinct.len().min(limits.max_clauses), 0, true));
    }

    // The working set: `all` fixes the pair-iteration order, `seen` answers
    // membership. Duplicates in the input collapse here.
    let mut all: Vec<Clause> = Vec::new();
    let mut seen: HashSet<Clause> = HashSet::new();
    for clause in formula.clauses() {
        if seen.contains(clause) {
            continue;
        }
        if seen.len() == limits.max_clauses {
            return (
                Verdict::Unknown(UnknownReason::ResourceLimitExceeded),
                stats(0, seen.len(), 0, false),
            );
        }
        seen.insert(clause.clone());
        all.push(clause.clone());
    }

    // Pairs whose first member predates `frontier` were resolved in an
    // earlier round and are skipped.
    let mut frontier = 0;
    let mut pair_counter: u64 = 0;
    for round in 1..=limits.max_rounds {
        if start.elapsed() > limits.time_budget {
            return (
                Verdict::Unknown(UnknownReason::ResourceLimitExceeded),
                stats(round, all.len(), resolvents_generated, false),
            );
        }
        let round_start = all.len();
        let mut fresh: Vec<Clause> = Vec::new();
        for j in frontier..round_start {
            for i in 0..j {
                pair_counter += 1;
                if pair_counter.is_multiple_of(4096) && start.elapsed() > limits.time_budget {
                    return (
                        Verdict::Unknown(UnknownReason::ResourceLimitExceeded),
                        stats(round, seen.len(), resolvents_generated, false),
                    );
                }
                for resolvent in pl_resolve_with(&all[i], &all[j], policy) {
                    resolvents_generated += 1;
                    if resolvent.is_empty() {
                        return (
                            Verdict::Unsatisfiable,
                            stats(round, seen.len(), resolvents_generated, true),
                        );
                    }
                    if seen.contains(&resolvent) {
                        continue;
                    }
                    if seen.len() == limits.max_clauses {
                        return (
                            Verdict::Unknown(UnknownReason::ResourceLimitExceeded),
                            stats(round, seen.len(), resolvents_generated, false),
                        );
                    }
                    seen.insert(resolvent.clone());
                    fresh.push(resolvent);
                }
            }
        }
        if fresh.is_empty() {
            // Saturated: nothing new can ever be derived, and the empty
            // clause is not in the set.
            return (Verdict::Satisfiable(None), stats(round, all.len(), resolvents_generated, false));
        }
        frontier = round_start;
        all.extend(fresh);
    }
    (
        Verdict::Unknown(UnknownReason::ResourceLimitExceeded),
        stats(limits.max_rounds, all.len(), resolvents_generated, false),
    )
}
