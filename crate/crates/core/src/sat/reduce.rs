//! Rewriting an arbitrary 3-CNF into one where each variable occurs at most
//! three times, at most once negated.

use super::cnf::{Clause, CnfFormula, Literal};
use crate::error::{Error, Result};
use crate::multipoly::VarId;

/// Equisatisfiable (3,3) form of `formula`.
///
/// Occurrence `j` of `x_i` is replaced by a fresh `y_{i,j}` and the cycle
/// `x_i → y_{i,1} → ⋯ → y_{i,m} → x_i` is appended, forcing all copies
/// equal. Variables that then carry two negative occurrences have their
/// polarity flipped everywhere (a renaming `y ↦ ¬y` in place).
///
/// Original variables keep their ids; the copies of `x_i` follow
/// `num_vars`, grouped by `i`. Variables with no occurrences get no chain.
pub fn reduce_3sat_to_33sat(formula: &CnfFormula) -> Result<CnfFormula> {
    if let Some((i, c)) = formula
        .clauses()
        .iter()
        .enumerate()
        .find(|(_, c)| c.len() > 3)
    {
        return Err(Error::ClauseTooWide {
            clause: i,
            width: c.len(),
        });
    }

    let n = formula.num_vars();
    let counts: Vec<usize> = formula.occurrences().iter().map(|o| o.total()).collect();
    let mut first_copy = Vec::with_capacity(n);
    let mut next = n;
    for &m in &counts {
        first_copy.push(next);
        next += m;
    }

    let mut seen = vec![0usize; n];
    let mut clauses: Vec<Clause> = formula
        .clauses()
        .iter()
        .map(|c| {
            Clause::new(
                c.literals
                    .iter()
                    .map(|l| {
                        let i = l.var.index();
                        let copy = VarId::from(first_copy[i] + seen[i]);
                        seen[i] += 1;
                        Literal {
                            var: copy,
                            negated: l.negated,
                        }
                    })
                    .collect(),
            )
        })
        .collect();

    for (i, &m) in counts.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let y = |j: usize| VarId::from(first_copy[i] + j);
        clauses.push(Clause::new(vec![Literal::neg(i), Literal::pos(y(0))]));
        for j in 1..m {
            clauses.push(Clause::new(vec![
                Literal::neg(y(j - 1)),
                Literal::pos(y(j)),
            ]));
        }
        clauses.push(Clause::new(vec![Literal::neg(y(m - 1)), Literal::pos(i)]));
    }

    let chained = CnfFormula::new(next, clauses)?;
    let flip: Vec<bool> = chained
        .occurrences()
        .iter()
        .map(|o| o.negative >= 2)
        .collect();
    let clauses = chained
        .clauses()
        .iter()
        .map(|c| {
            Clause::new(
                c.literals
                    .iter()
                    .map(|&l| if flip[l.var.index()] { l.negate() } else { l })
                    .collect(),
            )
        })
        .collect();
    CnfFormula::new(next, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::sat::truth_table_sat;

    fn check(f: &CnfFormula) {
        let g = reduce_3sat_to_33sat(f).unwrap();
        assert!(g.is_33sat_instance(), "{g}");
        let l = Limits::default();
        assert_eq!(truth_table_sat(f, &l), truth_table_sat(&g, &l));
    }

    #[test]
    fn single_unit_clause() {
        check(&CnfFormula::from_signed(1, &[&[1]]));
    }

    #[test]
    fn doubly_negated_variable() {
        let f = CnfFormula::from_signed(3, &[&[1, 2, 3], &[-1, -2], &[-1, 2]]);
        assert!(!f.is_33sat_instance());
        check(&f);
    }

    #[test]
    fn smallest_contradiction_stays_unsat() {
        let f = CnfFormula::from_signed(1, &[&[1], &[-1]]);
        let g = reduce_3sat_to_33sat(&f).unwrap();
        assert_eq!(truth_table_sat(&g, &Limits::default()), Ok(false));
    }

    #[test]
    fn layout() {
        // x0 occurs twice: copies 1 and 2, chain of three clauses
        let f = CnfFormula::from_signed(1, &[&[1], &[1]]);
        let g = reduce_3sat_to_33sat(&f).unwrap();
        assert_eq!(g.num_vars(), 3);
        assert_eq!(
            g,
            CnfFormula::from_signed(3, &[&[2], &[3], &[-1, 2], &[-2, 3], &[-3, 1]])
        );
    }

    #[test]
    fn rejects_wide_clause() {
        let f = CnfFormula::from_signed(4, &[&[1, 2, 3, 4]]);
        assert_eq!(
            reduce_3sat_to_33sat(&f),
            Err(Error::ClauseTooWide {
                clause: 0,
                width: 4
            })
        );
    }
}
