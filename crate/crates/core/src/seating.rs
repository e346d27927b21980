//! Table-seating instances and their CNF encoding.
//!
//! Guests `1..=M` must be seated at tables `1..=N`. A pair of guests may be
//! `Friends` (they must share a table) or `Enemies` (they must not); all other
//! pairs are `Indifferent`. The encoding introduces one variable per
//! guest/table pair — `X(i, n)` is true when guest `i` sits at table `n` —
//! numbered `var(i, n) = (i - 1) * N + n`.
//!
//! `encode` emits clauses in four blocks, in this order:
//!
//! 1. every guest sits at some table (one clause per guest);
//! 2. no guest sits at two tables (one clause per guest and table pair);
//! 3. friends sit together (two implication clauses per friend pair and
//!    table);
//! 4. enemies sit apart (one clause per enemy pair and table).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cnf::{Clause, Formula, Literal, Model, Variable};

/// How a pair of guests feels about sharing a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Friends,
    Enemies,
    Indifferent,
}

/// Errors produced by the seating module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeatingError {
    #[error("a seating instance needs at least one guest and one table (got {guests} guests, {tables} tables)")]
    InvalidDimensions { guests: u32, tables: u32 },
    #[error("guest pair ({i}, {j}) is invalid for {guests} guests")]
    InvalidPair { i: u32, j: u32, guests: u32 },
    #[error("relation probabilities must satisfy f >= 0, e >= 0, f + e <= 1 (got f = {f}, e = {e})")]
    InvalidProbability { f: f64, e: f64 },
    #[error("model assigns guest {guest} to {eligible} tables; a seating needs exactly one")]
    NotAFunction { guest: u32, eligible: usize },
    #[error("instance text, line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A seating problem: guest and table counts plus the pairwise relations.
///
/// Only non-indifferent pairs are stored; `relation` answers for every pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeatingInstance {
    num_guests: u32,
    num_tables: u32,
    relations: BTreeMap<(u32, u32), Relation>,
}

impl SeatingInstance {
    /// An instance with every pair indifferent.
    pub fn new(num_guests: u32, num_tables: u32) -> Result<Self, SeatingError> {
        if num_guests < 1 || num_tables < 1 {
            return Err(SeatingError::InvalidDimensions { guests: num_guests, tables: num_tables });
        }
        Ok(SeatingInstance { num_guests, num_tables, relations: BTreeMap::new() })
    }

    pub fn num_guests(&self) -> u32 {
        self.num_guests
    }

    pub fn num_tables(&self) -> u32 {
        self.num_tables
    }

    fn check_pair(&self, i: u32, j: u32) -> Result<(u32, u32), SeatingError> {
        if i == j || i < 1 || j < 1 || i > self.num_guests || j > self.num_guests {
            return Err(SeatingError::InvalidPair { i, j, guests: self.num_guests });
        }
        Ok((i.min(j), i.max(j)))
    }

    /// Records the relation of an unordered guest pair.
    pub fn set_relation(&mut self, i: u32, j: u32, relation: Relation) -> Result<(), SeatingError> {
        let key = self.check_pair(i, j)?;
        match relation {
            Relation::Indifferent => {
                self.relations.remove(&key);
            }
            other => {
                self.relations.insert(key, other);
            }
        }
        Ok(())
    }

    /// The relation of an unordered guest pair.
    ///
    /// # Panics
    ///
    /// Panics if the pair is out of range or degenerate (`i == j`).
    pub fn relation(&self, i: u32, j: u32) -> Relation {
        let key = self.check_pair(i, j).expect("valid guest pair");
        self.relations.get(&key).copied().unwrap_or(Relation::Indifferent)
    }

    /// Non-indifferent pairs in lexicographic order.
    pub fn related_pairs(&self) -> impl Iterator<Item = ((u32, u32), Relation)> + '_ {
        self.relations.iter().map(|(&pair, &relation)| (pair, relation))
    }

    /// Friend pairs in lexicographic order.
    pub fn friend_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.related_pairs().filter(|&(_, r)| r == Relation::Friends).map(|(p, _)| p)
    }

    /// Enemy pairs in lexicographic order.
    pub fn enemy_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.related_pairs().filter(|&(_, r)| r == Relation::Enemies).map(|(p, _)| p)
    }

    pub fn num_friend_pairs(&self) -> usize {
        self.friend_pairs().count()
    }

    pub fn num_enemy_pairs(&self) -> usize {
        self.enemy_pairs().count()
    }
}

/// Draws a random instance: every unordered pair, visited in lexicographic
/// order `(1,2), (1,3), …`, becomes `Friends` with probability `f`, `Enemies`
/// with probability `e`, and stays `Indifferent` otherwise.
///
/// One uniform draw `u` in `[0, 1)` decides each pair: `u < f` means friends
/// and `f <= u < f + e` means enemies, so equal seeds give equal instances.
pub fn generate_instance(
    num_guests: u32,
    num_tables: u32,
    f: f64,
    e: f64,
    seed: u64,
) -> Result<SeatingInstance, SeatingError> {
    if !f.is_finite() || !e.is_finite() || f < 0.0 || e < 0.0 || f + e > 1.0 {
        return Err(SeatingError::InvalidProbability { f, e });
    }
    let mut instance = SeatingInstance::new(num_guests, num_tables)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 1..=num_guests {
        for j in (i + 1)..=num_guests {
            let u: f64 = rng.gen();
            let relation = if u < f {
                Relation::Friends
            } else if u < f + e {
                Relation::Enemies
            } else {
                Relation::Indifferent
            };
            instance.set_relation(i, j, relation).expect("generated pairs are valid");
        }
    }
    Ok(instance)
}

/// The variable numbering used by `encode`: `var(i, n) = (i - 1) * N + n`,
/// a bijection between guest/table pairs and variables `1..=M*N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EncodingMap {
    num_guests: u32,
    num_tables: u32,
}

impl EncodingMap {
    pub fn new(num_guests: u32, num_tables: u32) -> Self {
        assert!(num_guests >= 1 && num_tables >= 1, "dimensions are 1-based");
        num_guests.checked_mul(num_tables).expect("variable count fits u32");
        EncodingMap { num_guests, num_tables }
    }

    pub fn num_guests(&self) -> u32 {
        self.num_guests
    }

    pub fn num_tables(&self) -> u32 {
        self.num_tables
    }

    /// Total number of variables, `M * N`.
    pub fn num_vars(&self) -> u32 {
        self.num_guests * self.num_tables
    }

    /// The variable stating that `guest` sits at `table`.
    ///
    /// # Panics
    ///
    /// Panics if `guest` or `table` is out of range.
    pub fn var(&self, guest: u32, table: u32) -> Variable {
        assert!(guest >= 1 && guest <= self.num_guests, "guest out of range");
        assert!(table >= 1 && table <= self.num_tables, "table out of range");
        Variable::new((guest - 1) * self.num_tables + table)
    }

    /// The guest/table pair a variable stands for.
    ///
    /// # Panics
    ///
    /// Panics if `var` is not one of the map's variables.
    pub fn guest_table(&self, var: Variable) -> (u32, u32) {
        assert!(var.id() <= self.num_vars(), "variable out of range");
        let index = var.id() - 1;
        (index / self.num_tables + 1, index % self.num_tables + 1)
    }

    /// The model whose true variables are exactly the chart's seat choices.
    pub fn chart_to_model(&self, chart: &SeatingChart) -> Model {
        assert_eq!(chart.num_guests(), self.num_guests, "chart and map disagree on guests");
        let mut model = Model::all_false(self.num_vars());
        for guest in 1..=self.num_guests {
            model.set(self.var(guest, chart.table_of(guest)), true);
        }
        model
    }
}

/// A total assignment of guests to tables; `tables()[i - 1]` seats guest `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeatingChart {
    tables: Vec<u32>,
}

impl SeatingChart {
    /// # Panics
    ///
    /// Panics if any table index is zero.
    pub fn new(tables: Vec<u32>) -> Self {
        assert!(tables.iter().all(|&t| t >= 1), "table indices are 1-based");
        SeatingChart { tables }
    }

    pub fn num_guests(&self) -> u32 {
        self.tables.len() as u32
    }

    pub fn table_of(&self, guest: u32) -> u32 {
        self.tables[(guest - 1) as usize]
    }

    pub fn tables(&self) -> &[u32] {
        &self.tables
    }

    /// True when the chart seats every guest of the instance at a real table,
    /// keeps every friend pair together, and keeps every enemy pair apart.
    pub fn satisfies(&self, instance: &SeatingInstance) -> bool {
        if self.num_guests() != instance.num_guests() {
            return false;
        }
        if self.tables.iter().any(|&t| t > instance.num_tables()) {
            return false;
        }
        instance.related_pairs().all(|((i, j), relation)| match relation {
            Relation::Friends => self.table_of(i) == self.table_of(j),
            Relation::Enemies => self.table_of(i) != self.table_of(j),
            Relation::Indifferent => true,
        })
    }
}

/// Encodes an instance as CNF over the variables of an `EncodingMap`.
///
/// A model of the formula corresponds to exactly one valid seating chart,
/// recoverable with `decode`.
pub fn encode(instance: &SeatingInstance) -> (Formula, EncodingMap) {
    let m = instance.num_guests();
    let n = instance.num_tables();
    let map = EncodingMap::new(m, n);
    let mut clauses = Vec::new();

    // Block 1: every guest sits at some table.
    for i in 1..=m {
        clauses.push(Clause::new((1..=n).map(|t| Literal::positive(map.var(i, t)))));
    }
    // Block 2: no guest sits at two tables.
    for i in 1..=m {
        for k in 1..n {
            for t in (k + 1)..=n {
                clauses.push(Clause::new([
                    Literal::negative(map.var(i, k)),
                    Literal::negative(map.var(i, t)),
                ]));
            }
        }
    }
    // Block 3: friends sit together (both implications, per table).
    for (i, j) in instance.friend_pairs() {
        for t in 1..=n {
            clauses.push(Clause::new([
                Literal::negative(map.var(i, t)),
                Literal::positive(map.var(j, t)),
            ]));
            clauses.push(Clause::new([
                Literal::negative(map.var(j, t)),
                Literal::positive(map.var(i, t)),
            ]));
        }
    }
    // Block 4: enemies sit apart.
    for (i, j) in instance.enemy_pairs() {
        for t in 1..=n {
            clauses.push(Clause::new([
                Literal::negative(map.var(i, t)),
                Literal::negative(map.var(j, t)),
            ]));
        }
    }

    let formula = Formula::new(map.num_vars(), clauses).expect("encoder stays in range");
    (formula, map)
}

/// Reads a seating chart back out of a model of an encoded instance.
///
/// Errors with `NotAFunction` when some guest has zero or several true
/// seat variables.
///
/// # Panics
///
/// Panics if the model does not cover the map's variables.
pub fn decode(model: &Model, map: &EncodingMap) -> Result<SeatingChart, SeatingError> {
    let mut tables = Vec::with_capacity(map.num_guests() as usize);
    for guest in 1..=map.num_guests() {
        let seats: Vec<u32> =
            (1..=map.num_tables()).filter(|&t| model.value(map.var(guest, t))).collect();
        match seats.as_slice() {
            [table] => tables.push(*table),
            _ => return Err(SeatingError::NotAFunction { guest, eligible: seats.len() }),
        }
    }
    Ok(SeatingChart::new(tables))
}

/// Parses the plain-text instance format: a `seating M N` header line
/// followed by one `i j F` or `i j E` line per related pair.
pub fn parse_instance(input: &str) -> Result<SeatingInstance, SeatingError> {
    let mut instance: Option<SeatingInstance> = None;
    let mut seen: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for (index, line) in input.lines().enumerate() {
        let line_no = index + 1;
        let parse_err =
            |message: String| SeatingError::Parse { line: line_no, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match &mut instance {
            None => {
                if tokens.len() != 3 || tokens[0] != "seating" {
                    return Err(parse_err(format!(
                        "expected header `seating M N`, found {line:?}"
                    )));
                }
                let guests: u32 =
                    tokens[1].parse().map_err(|_| parse_err("bad guest count".to_string()))?;
                let tables: u32 =
                    tokens[2].parse().map_err(|_| parse_err("bad table count".to_string()))?;
                instance = Some(SeatingInstance::new(guests, tables).map_err(|e| parse_err(e.to_string()))?);
            }
            Some(instance) => {
                if tokens.len() != 3 {
                    return Err(parse_err(format!("expected `i j F|E`, found {line:?}")));
                }
                let i: u32 =
                    tokens[0].parse().map_err(|_| parse_err("bad guest index".to_string()))?;
                let j: u32 =
                    tokens[1].parse().map_err(|_| parse_err("bad guest index".to_string()))?;
                let relation = match tokens[2] {
                    "F" => Relation::Friends,
                    "E" => Relation::Enemies,
                    other => return Err(parse_err(format!("unknown relation {other:?}"))),
                };
                let key = (i.min(j), i.max(j));
                if let Some(first) = seen.insert(key, line_no) {
                    return Err(parse_err(format!(
                        "pair ({}, {}) already appeared on line {first}",
                        key.0, key.1
                    )));
                }
                instance.set_relation(i, j, relation).map_err(|e| parse_err(e.to_string()))?;
            }
        }
    }
    instance.ok_or(SeatingError::Parse { line: 0, message: "empty instance text".to_string() })
}

/// Serializes an instance to the plain-text format, pairs in lexicographic
/// order. `parse_instance(serialize_instance(i))` reproduces the instance.
pub fn serialize_instance(instance: &SeatingInstance) -> String {
    let mut out = String::new();
    writeln!(out, "seating {} {}", instance.num_guests(), instance.num_tables())
        .expect("writing to a String cannot fail");
    for ((i, j), relation) in instance.related_pairs() {
        let tag = match relation {
            Relation::Friends => "F",
            Relation::Enemies => "E",
            Relation::Indifferent => unreachable!("only related pairs are stored"),
        };
        writeln!(out, "{i} {j} {tag}").expect("writing to a String cannot fail");
    }
    out
}
