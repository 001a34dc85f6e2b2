//! Unit propagation and pure-literal elimination.

use super::cnf::{Clause, CnfFormula, Literal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preprocessed {
    /// Simplification alone settled satisfiability.
    Decided(bool),
    /// An equisatisfiable formula in which every clause has at least two
    /// literals and every remaining variable occurs with both polarities.
    /// Variable numbering is unchanged.
    Undecided(CnfFormula),
}

/// Runs unit propagation and pure-literal elimination to a fixpoint.
/// Repeated literals inside a clause are merged and tautological clauses
/// are dropped first.
pub fn preprocess(formula: &CnfFormula) -> Preprocessed {
    let mut clauses: Vec<Vec<Literal>> = formula
        .clauses()
        .iter()
        .filter_map(|c| {
            let mut lits: Vec<Literal> = Vec::with_capacity(c.len());
            for &l in &c.literals {
                if lits.contains(&l.negate()) {
                    return None;
                }
                if !lits.contains(&l) {
                    lits.push(l);
                }
            }
            Some(lits)
        })
        .collect();

    loop {
        if clauses.is_empty() {
            return Preprocessed::Decided(true);
        }
        if clauses.iter().any(Vec::is_empty) {
            return Preprocessed::Decided(false);
        }
        let forced = clauses
            .iter()
            .find(|c| c.len() == 1)
            .map(|c| c[0])
            .or_else(|| pure_literal(formula.num_vars(), &clauses));
        let Some(lit) = forced else { break };
        clauses.retain(|c| !c.contains(&lit));
        for c in &mut clauses {
            c.retain(|&l| l != lit.negate());
        }
    }

    let clauses = clauses.into_iter().map(Clause::new).collect();
    Preprocessed::Undecided(
        CnfFormula::new(formula.num_vars(), clauses).expect("simplification keeps clauses valid"),
    )
}

fn pure_literal(num_vars: usize, clauses: &[Vec<Literal>]) -> Option<Literal> {
    let mut seen = vec![(false, false); num_vars];
    for l in clauses.iter().flatten() {
        let s = &mut seen[l.var.index()];
        if l.negated {
            s.1 = true;
        } else {
            s.0 = true;
        }
    }
    seen.iter()
        .enumerate()
        .find_map(|(v, &(pos, neg))| match (pos, neg) {
            (true, false) => Some(Literal::pos(v)),
            (false, true) => Some(Literal::neg(v)),
            _ => None,
        })
}
