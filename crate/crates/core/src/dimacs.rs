//! DIMACS CNF reading and writing.
//!
//! The reader treats the body as a whitespace-separated token stream, so a
//! clause may span lines and one line may hold several clauses. `c` lines are
//! comments (preserved in order), the header is `p cnf <num_vars>
//! <num_clauses>`, every clause ends with `0`, and everything after a lone
//! `%` is ignored — a convention of older benchmark archives.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cnf::{Clause, Formula, Literal};

/// How strictly `parse_dimacs` treats a clause-count mismatch.
///
/// Real-world headers are frequently wrong, so the lenient mode records a
/// warning and trusts the body; the strict mode rejects the file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    #[default]
    Lenient,
    Strict,
}

/// Errors produced by `parse_dimacs`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    /// No `p cnf` header appeared before clause data (or the end of input).
    #[error("missing `p cnf` header")]
    MissingHeader,
    /// A `p` line that does not read `p cnf <num_vars> <num_clauses>`.
    #[error("malformed header line {line:?}")]
    MalformedHeader { line: String },
    /// An extra field inside the header — classically a stray `0` terminator.
    #[error("unexpected extra field {token:?} inside the `p cnf` header")]
    ZeroInsideHeader { token: String },
    /// A literal whose variable exceeds the declared count.
    #[error("literal {literal} exceeds the declared {num_vars} variables")]
    VarOutOfRange { literal: i64, num_vars: u32 },
    /// Strict mode only: body clause count disagrees with the header.
    #[error("header declares {declared} clauses but the body holds {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
    /// A body token that is neither an integer, a comment, nor `%`.
    #[error("unexpected token {token:?} in clause data")]
    TrailingGarbage { token: String },
}

/// A parsed DIMACS file: its comments (in order of appearance) and formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimacsDocument {
    pub comments: Vec<String>,
    pub formula: Formula,
}

impl DimacsDocument {
    /// Wraps a formula with no comments.
    pub fn from_formula(formula: Formula) -> Self {
        DimacsDocument { comments: Vec::new(), formula }
    }
}

/// The result of a parse: the document plus any lenient-mode warnings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedDimacs {
    pub document: DimacsDocument,
    pub warnings: Vec<String>,
}

/// Parses DIMACS CNF text.
pub fn parse_dimacs(input: &str, mode: ParseMode) -> Result<ParsedDimacs, DimacsError> {
    let mut comments = Vec::new();
    let mut warnings = Vec::new();
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();

    'lines: for line in input.lines() {
        let trimmed = line.trim_start();
        if let Some(rest) = trimmed.strip_prefix('c') {
            comments.push(rest.strip_prefix(' ').unwrap_or(rest).to_string());
            continue;
        }
        if header.is_none() && trimmed.starts_with('p') {
            header = Some(parse_header(trimmed)?);
            continue;
        }
        for token in trimmed.split_whitespace() {
            if token == "%" {
                break 'lines;
            }
            let (num_vars, _) = header.ok_or(DimacsError::MissingHeader)?;
            let code: i64 = token
                .parse()
                .map_err(|_| DimacsError::TrailingGarbage { token: token.to_string() })?;
            if code == 0 {
                clauses.push(Clause::new(pending.drain(..)));
            } else {
                if code.unsigned_abs() > u64::from(num_vars) {
                    return Err(DimacsError::VarOutOfRange { literal: code, num_vars });
                }
                pending.push(Literal::from_dimacs(code));
            }
        }
    }

    let (num_vars, declared) = header.ok_or(DimacsError::MissingHeader)?;
    if !pending.is_empty() {
        warnings.push("final clause is not 0-terminated".to_string());
        clauses.push(Clause::new(pending.drain(..)));
    }
    if clauses.len() != declared {
        match mode {
            ParseMode::Strict => {
                return Err(DimacsError::ClauseCountMismatch { declared, found: clauses.len() })
            }
            ParseMode::Lenient => warnings.push(format!(
                "header declares {declared} clauses but the body holds {}",
                clauses.len()
            )),
        }
    }
    let formula = Formula::new(num_vars, clauses).expect("literals were range-checked while parsing");
    Ok(ParsedDimacs { document: DimacsDocument { comments, formula }, warnings })
}

/// Parses DIMACS CNF text leniently, keeping only the formula.
pub fn parse_formula(input: &str) -> Result<Formula, DimacsError> {
    parse_dimacs(input, ParseMode::Lenient).map(|parsed| parsed.document.formula)
}

fn parse_header(line: &str) -> Result<(u32, usize), DimacsError> {
    let malformed = || DimacsError::MalformedHeader { line: line.to_string() };
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() < 4 || tokens[0] != "p" || tokens[1] != "cnf" {
        return Err(malformed());
    }
    if tokens.len() > 4 {
        return Err(DimacsError::ZeroInsideHeader { token: tokens[4].to_string() });
    }
    let num_vars: u32 = tokens[2].parse().map_err(|_| malformed())?;
    let num_clauses: usize = tokens[3].parse().map_err(|_| malformed())?;
    Ok((num_vars, num_clauses))
}

/// Serializes a document: comments first, then the header, then one
/// `0`-terminated clause per line.
///
/// `parse_dimacs(serialize_dimacs(doc))` reproduces the document exactly.
pub fn serialize_dimacs(document: &DimacsDocument) -> String {
    let mut out = String::new();
    for comment in &document.comments {
        if comment.is_empty() {
            out.push_str("c\n");
        } else {
            writeln!(out, "c {comment}").expect("writing to a String cannot fail");
        }
    }
    let formula = &document.formula;
    writeln!(out, "p cnf {} {}", formula.num_vars(), formula.num_clauses())
        .expect("writing to a String cannot fail");
    for clause in formula.clauses() {
        for literal in clause.literals() {
            write!(out, "{} ", literal.to_dimacs()).expect("writing to a String cannot fail");
        }
        out.push_str("0\n");
    }
    out
}

/// Serializes a bare formula with no comments.
pub fn serialize_formula(formula: &Formula) -> String {
    serialize_dimacs(&DimacsDocument { comments: Vec::new(), formula: formula.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    use proptest::prelude::*;

    use crate::cnf::Variable;

    fn parsed(input: &str) -> ParsedDimacs {
        parse_dimacs(input, ParseMode::Lenient).unwrap()
    }

    #[test]
    fn parses_comments_header_and_clauses() {
        let parsed = parsed("c hi\np cnf 2 2\n1 -2 0 2 0\n");
        assert_eq!(parsed.document.comments, vec!["hi".to_string()]);
        assert_eq!(parsed.document.formula.num_vars(), 2);
        assert_eq!(
            parsed.document.formula.clauses(),
            &[Clause::from_dimacs([1, -2]), Clause::from_dimacs([2])]
        );
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn clauses_may_span_lines() {
        let parsed = parsed("p cnf 3 1\n1\n2 3 0\n");
        assert_eq!(parsed.document.formula.clauses(), &[Clause::from_dimacs([1, 2, 3])]);
    }

    #[test]
    fn comments_may_interrupt_clauses() {
        let parsed = parsed("p cnf 2 1\n1\nc middle\n2 0\n");
        assert_eq!(parsed.document.formula.clauses(), &[Clause::from_dimacs([1, 2])]);
        assert_eq!(parsed.document.comments, vec!["middle".to_string()]);
    }

    #[test]
    fn empty_formula_round_trips() {
        let parsed = parsed("p cnf 0 0\n");
        assert_eq!(parsed.document.formula, Formula::empty(0));
        assert_eq!(serialize_dimacs(&parsed.document), "p cnf 0 0\n");
    }

    #[test]
    fn lone_zero_is_the_empty_clause() {
        let parsed = parsed("p cnf 1 1\n0\n");
        assert_eq!(parsed.document.formula.clauses(), &[Clause::empty()]);
    }

    #[test]
    fn percent_ends_the_token_stream() {
        // Legacy archives terminate files with "% \n 0"; neither token may
        // become a clause.
        let parsed = parsed("p cnf 1 1\n1 0\n%\n0\n");
        assert_eq!(parsed.document.formula.clauses(), &[Clause::from_dimacs([1])]);
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn missing_header_is_rejected() {
        assert_eq!(parse_dimacs("1 2 0\n", ParseMode::Lenient).unwrap_err(), DimacsError::MissingHeader);
        assert_eq!(parse_dimacs("c only\n", ParseMode::Lenient).unwrap_err(), DimacsError::MissingHeader);
        assert_eq!(parse_dimacs("", ParseMode::Lenient).unwrap_err(), DimacsError::MissingHeader);
    }

    #[test]
    fn malformed_headers_are_rejected() {
        assert!(matches!(
            parse_dimacs("p cnf x 1\n", ParseMode::Lenient).unwrap_err(),
            DimacsError::MalformedHeader { .. }
        ));
        assert!(matches!(
            parse_dimacs("p sat 1 1\n", ParseMode::Lenient).unwrap_err(),
            DimacsError::MalformedHeader { .. }
        ));
        assert_eq!(
            parse_dimacs("p cnf 1 1 0\n1 0\n", ParseMode::Lenient).unwrap_err(),
            DimacsError::ZeroInsideHeader { token: "0".to_string() }
        );
    }

    #[test]
    fn out_of_range_literals_are_rejected() {
        assert_eq!(
            parse_dimacs("p cnf 1 1\n2 0\n", ParseMode::Lenient).unwrap_err(),
            DimacsError::VarOutOfRange { literal: 2, num_vars: 1 }
        );
    }

    #[test]
    fn garbage_tokens_are_rejected() {
        assert_eq!(
            parse_dimacs("p cnf 1 1\n1 zz 0\n", ParseMode::Lenient).unwrap_err(),
            DimacsError::TrailingGarbage { token: "zz".to_string() }
        );
    }

    #[test]
    fn clause_count_mismatch_warns_or_errors() {
        let parsed = parse_dimacs("p cnf 1 2\n1 0\n", ParseMode::Lenient).unwrap();
        assert_eq!(parsed.document.formula.num_clauses(), 1);
        assert_eq!(parsed.warnings.len(), 1);

        assert_eq!(
            parse_dimacs("p cnf 1 2\n1 0\n", ParseMode::Strict).unwrap_err(),
            DimacsError::ClauseCountMismatch { declared: 2, found: 1 }
        );
    }

    #[test]
    fn unterminated_final_clause_is_kept_with_a_warning() {
        let parsed = parse_dimacs("p cnf 2 1\n1 2\n", ParseMode::Lenient).unwrap();
        assert_eq!(parsed.document.formula.clauses(), &[Clause::from_dimacs([1, 2])]);
        assert_eq!(parsed.warnings, vec!["final clause is not 0-terminated".to_string()]);
    }

    #[test]
    fn serialize_single_unit_clause() {
        let formula = Formula::new(1, vec![Clause::from_dimacs([1])]).unwrap();
        assert_eq!(serialize_formula(&formula), "p cnf 1 1\n1 0\n");
    }

    #[test]
    fn serialize_preserves_comments_and_order() {
        let document = DimacsDocument {
            comments: vec!["first".to_string(), String::new()],
            formula: Formula::new(2, vec![Clause::from_dimacs([-1, 2]), Clause::empty()]).unwrap(),
        };
        let text = serialize_dimacs(&document);
        assert_eq!(text, "c first\nc\np cnf 2 2\n-1 2 0\n0\n");
        let back = parse_dimacs(&text, ParseMode::Strict).unwrap();
        assert_eq!(back.document, document);
        assert!(back.warnings.is_empty());
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        (1u32..=12).prop_flat_map(|num_vars| {
            let literal = (1..=num_vars, any::<bool>()).prop_map(|(id, positive)| {
                let var = Variable::new(id);
                if positive { Literal::positive(var) } else { Literal::negative(var) }
            });
            let clause = proptest::collection::vec(literal, 0..6).prop_map(Clause::new);
            proptest::collection::vec(clause, 0..15)
                .prop_map(move |clauses| Formula::new(num_vars, clauses).unwrap())
        })
    }

    proptest! {
        #[test]
        fn round_trip_reproduces_the_formula(formula in arb_formula()) {
            let text = serialize_formula(&formula);
            let back = parse_dimacs(&text, ParseMode::Strict).unwrap();
            prop_assert_eq!(back.document.formula, formula);
            prop_assert!(back.warnings.is_empty());
        }
    }
}
