//! Core CNF vocabulary: variables, literals, clauses, formulas, models, and
//! solver verdicts.
//!
//! A formula is an ordered list of clauses over variables `1..=num_vars`; a
//! clause is a sorted, duplicate-free disjunction of literals. The empty
//! clause is satisfied by no model and the empty formula by every model.

use std::fmt;

use thiserror::Error;

/// Errors produced while assembling CNF values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    /// A clause mentions a variable above the formula's declared range.
    #[error("variable {var} exceeds the declared range of {num_vars} variables")]
    VariableOutOfRange { var: u32, num_vars: u32 },
}

/// A propositional variable, identified by a 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable(u32);

impl Variable {
    /// Creates a variable from a 1-based index.
    ///
    /// # Panics
    ///
    /// Panics if `id` is zero.
    pub fn new(id: u32) -> Self {
        assert!(id >= 1, "variable indices are 1-based");
        Variable(id)
    }

    /// The 1-based index of this variable.
    pub fn id(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// The sign of a literal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    /// The opposite sign.
    pub fn negated(self) -> Self {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }
}

/// A variable together with a polarity.
///
/// Literals order by `(variable, polarity)` with the positive literal first;
/// this is also the canonical order of literals inside a clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: Variable,
    polarity: Polarity,
}

impl Literal {
    pub fn new(var: Variable, polarity: Polarity) -> Self {
        Literal { var, polarity }
    }

    /// The positive literal of `var`.
    pub fn positive(var: Variable) -> Self {
        Literal::new(var, Polarity::Positive)
    }

    /// The negative literal of `var`.
    pub fn negative(var: Variable) -> Self {
        Literal::new(var, Polarity::Negative)
    }

    /// Parses a DIMACS-style code: `k` is the positive literal of variable
    /// `k`, `-k` the negative one.
    ///
    /// # Panics
    ///
    /// Panics if `code` is zero (the DIMACS clause terminator) or does not
    /// fit a `u32` variable index.
    pub fn from_dimacs(code: i64) -> Self {
        assert!(code != 0, "0 terminates a DIMACS clause; it is not a literal");
        let var = Variable::new(u32::try_from(code.unsigned_abs()).expect("variable index fits u32"));
        if code > 0 {
            Literal::positive(var)
        } else {
            Literal::negative(var)
        }
    }

    /// The DIMACS-style signed code of this literal.
    pub fn to_dimacs(self) -> i64 {
        let id = i64::from(self.var.id());
        match self.polarity {
            Polarity::Positive => id,
            Polarity::Negative => -id,
        }
    }

    pub fn var(self) -> Variable {
        self.var
    }

    pub fn polarity(self) -> Polarity {
        self.polarity
    }

    pub fn is_positive(self) -> bool {
        self.polarity == Polarity::Positive
    }

    /// The same variable with the opposite polarity.
    pub fn negated(self) -> Self {
        Literal::new(self.var, self.polarity.negated())
    }

    /// Truth value under `model`.
    ///
    /// # Panics
    ///
    /// Panics if the variable lies outside the model's range.
    pub fn eval(self, model: &Model) -> bool {
        model.value(self.var) == self.is_positive()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A disjunction of literals, kept sorted and duplicate-free.
///
/// Equality is therefore set equality. A clause may be empty, and it may be
/// a tautology (both polarities of some variable).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    /// Builds a clause in canonical form: literals sorted by
    /// `(variable, polarity)` with duplicates merged.
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Self {
        let mut lits: Vec<Literal> = literals.into_iter().collect();
        lits.sort_unstable();
        lits.dedup();
        Clause { literals: lits }
    }

    /// The clause with no literals, which no model satisfies.
    pub fn empty() -> Self {
        Clause { literals: Vec::new() }
    }

    /// Convenience constructor from DIMACS-style signed codes.
    pub fn from_dimacs(codes: impl IntoIterator<Item = i64>) -> Self {
        Clause::new(codes.into_iter().map(Literal::from_dimacs))
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn contains(&self, literal: Literal) -> bool {
        self.literals.binary_search(&literal).is_ok()
    }

    /// True when some variable occurs in both polarities.
    pub fn is_tautology(&self) -> bool {
        // Canonical order puts both polarities of a variable next to each
        // other, and duplicates are already merged.
        self.literals.windows(2).any(|w| w[0].var() == w[1].var())
    }

    /// The largest variable mentioned, if any.
    pub fn max_var(&self) -> Option<Variable> {
        self.literals.last().map(|lit| lit.var())
    }

    /// Truth value under `model`; the empty clause is false.
    ///
    /// # Panics
    ///
    /// Panics if the clause mentions a variable outside the model's range.
    pub fn eval(&self, model: &Model) -> bool {
        self.literals.iter().any(|lit| lit.eval(model))
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for lit in &self.literals {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{lit}")?;
            first = false;
        }
        Ok(())
    }
}

/// A CNF formula: an ordered list of clauses over variables `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl Formula {
    /// Builds a formula, rejecting clauses that mention variables above
    /// `num_vars`.
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<Self, CnfError> {
        for clause in &clauses {
            if let Some(var) = clause.max_var() {
                if var.id() > num_vars {
                    return Err(CnfError::VariableOutOfRange { var: var.id(), num_vars });
                }
            }
        }
        Ok(Formula { num_vars, clauses })
    }

    /// The formula with no clauses, which every model satisfies.
    pub fn empty(num_vars: u32) -> Self {
        Formula { num_vars, clauses: Vec::new() }
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// True when every clause is satisfied; the empty formula is true.
    ///
    /// # Panics
    ///
    /// Panics if the formula mentions a variable outside the model's range.
    pub fn eval(&self, model: &Model) -> bool {
        self.clauses.iter().all(|clause| clause.eval(model))
    }

    /// Number of clauses satisfied by `model`.
    pub fn count_satisfied(&self, model: &Model) -> usize {
        self.clauses.iter().filter(|clause| clause.eval(model)).count()
    }
}

/// A total truth assignment for variables `1..=num_vars()`; index 0 holds
/// variable 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Model {
    values: Vec<bool>,
}

impl Model {
    pub fn new(values: Vec<bool>) -> Self {
        Model { values }
    }

    /// The all-false model over `num_vars` variables.
    pub fn all_false(num_vars: u32) -> Self {
        Model { values: vec![false; num_vars as usize] }
    }

    pub fn num_vars(&self) -> u32 {
        self.values.len() as u32
    }

    /// Truth value of `var`.
    ///
    /// # Panics
    ///
    /// Panics if `var` lies outside the model's range.
    pub fn value(&self, var: Variable) -> bool {
        self.values[(var.id() - 1) as usize]
    }

    pub fn set(&mut self, var: Variable, value: bool) {
        self.values[(var.id() - 1) as usize] = value;
    }

    pub fn flip(&mut self, var: Variable) {
        let slot = &mut self.values[(var.id() - 1) as usize];
        *slot = !*slot;
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }
}

/// Why a solver stopped without an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknownReason {
    /// A stochastic solver spent its flip budget without finding a model.
    FlipBudgetExhausted,
    /// A complete solver hit its clause, round, or time limit.
    ResourceLimitExceeded,
}

/// The outcome of a solver run.
///
/// `Satisfiable` carries a model only when the producing solver constructs
/// one; saturation-based proofs establish satisfiability without a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Satisfiable(Option<Model>),
    Unsatisfiable,
    Unknown(UnknownReason),
}

impl Verdict {
    pub fn is_satisfiable(&self) -> bool {
        matches!(self, Verdict::Satisfiable(_))
    }

    pub fn is_unsatisfiable(&self) -> bool {
        matches!(self, Verdict::Unsatisfiable)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }

    /// The witness model, when the verdict carries one.
    pub fn model(&self) -> Option<&Model> {
        match self {
            Verdict::Satisfiable(model) => model.as_ref(),
            _ => None,
        }
    }
}
