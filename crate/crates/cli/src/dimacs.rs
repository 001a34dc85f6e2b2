//! DIMACS CNF reader and writer.

use std::fmt::Write as _;

use cubecalc_core::sat::{Clause, CnfFormula, Literal};

use crate::error::ParseError;

/// Parses `p cnf <vars> <clauses>` followed by zero-terminated clauses.
/// Comment lines (`c ...`) are skipped and a line starting with `%` ends
/// the input, as in the SATLIB benchmark files.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut current_line = 0;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(ParseError::Header {
                    line,
                    reason: "second header line".into(),
                });
            }
            header = Some(parse_header(trimmed, line)?);
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(ParseError::Header {
                line,
                reason: "clause before the `p cnf` line".into(),
            });
        };

        for token in trimmed.split_whitespace() {
            let lit: i64 = token.parse().map_err(|_| ParseError::BadToken {
                line,
                token: token.to_string(),
            })?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(ParseError::EmptyClause { line });
                }
                clauses.push(Clause::new(std::mem::take(&mut current)));
                continue;
            }
            if lit.unsigned_abs() > num_vars as u64 {
                return Err(ParseError::LiteralOutOfRange {
                    line,
                    literal: lit,
                    num_vars,
                });
            }
            if current.is_empty() {
                current_line = line;
            }
            current.push(Literal::from_signed(lit));
        }
    }

    let Some((num_vars, expected)) = header else {
        return Err(ParseError::Header {
            line: last_line.max(1),
            reason: "no `p cnf` line".into(),
        });
    };
    if !current.is_empty() {
        return Err(ParseError::MissingTerminator { line: current_line });
    }
    if clauses.len() != expected {
        return Err(ParseError::ClauseCount {
            line: last_line,
            expected,
            found: clauses.len(),
        });
    }
    Ok(CnfFormula::new(num_vars, clauses)
        .expect("literals were range-checked and clauses are nonempty"))
}

fn parse_header(line_text: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let bad = |reason: &str| ParseError::Header {
        line,
        reason: reason.to_string(),
    };
    let fields: Vec<&str> = line_text.split_whitespace().collect();
    match fields.as_slice() {
        ["p", "cnf", n, m] => {
            let n = n
                .parse()
                .map_err(|_| bad("variable count is not a number"))?;
            let m = m.parse().map_err(|_| bad("clause count is not a number"))?;
            Ok((n, m))
        }
        ["p", fmt, ..] if *fmt != "cnf" => Err(bad("only the `cnf` format is supported")),
        _ => Err(bad("expected `p cnf <vars> <clauses>`")),
    }
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.clauses().len());
    for c in f.clauses() {
        for l in &c.literals {
            write!(out, "{} ", l.to_signed()).unwrap();
        }
        out.push_str("0\n");
    }
    out
}
