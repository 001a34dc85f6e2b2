use super::cnf::CnfFormula;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Exhaustive satisfiability check over all `2^num_vars` assignments.
pub fn truth_table_sat(formula: &CnfFormula, limits: &Limits) -> Result<bool> {
    let n = formula.num_vars();
    let limit = limits.max_truth_table_vars.min(63);
    if n > limit {
        return Err(Error::VarLimit { needed: n, limit });
    }
    let masks: Vec<(u64, u64)> = formula
        .clauses()
        .iter()
        .map(|c| {
            c.literals.iter().fold((0, 0), |(pos, neg), l| {
                let bit = 1u64 << l.var.0;
                if l.negated {
                    (pos, neg | bit)
                } else {
                    (pos | bit, neg)
                }
            })
        })
        .collect();
    Ok((0..1u64 << n).any(|a| masks.iter().all(|&(pos, neg)| (a & pos) | (!a & neg) != 0)))
}
