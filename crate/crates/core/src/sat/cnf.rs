use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::multipoly::VarId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: VarId,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: impl Into<VarId>) -> Self {
        Literal {
            var: var.into(),
            negated: false,
        }
    }

    pub fn neg(var: impl Into<VarId>) -> Self {
        Literal {
            var: var.into(),
            negated: true,
        }
    }

    /// DIMACS-style signed, one-based literal: `3` is `x2`, `-1` is `¬x0`.
    pub fn from_signed(lit: i64) -> Self {
        assert!(lit != 0, "0 is the clause terminator, not a literal");
        let var = VarId((lit.unsigned_abs() - 1) as u32);
        Literal {
            var,
            negated: lit < 0,
        }
    }

    pub fn to_signed(self) -> i64 {
        let v = self.var.0 as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn negate(self) -> Self {
        Literal {
            negated: !self.negated,
            ..self
        }
    }

    pub fn is_true_under(self, assignment: u64) -> bool {
        (assignment >> self.var.0 & 1 == 1) != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "¬{}", self.var)
        } else {
            write!(f, "{}", self.var)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clause {
    pub literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Self {
        Clause { literals }
    }

    pub fn from_signed(lits: &[i64]) -> Self {
        Clause::new(lits.iter().map(|&l| Literal::from_signed(l)).collect())
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }
}

/// Occurrence counts for one variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Occurrences {
    pub positive: usize,
    pub negative: usize,
}

impl Occurrences {
    pub fn total(&self) -> usize {
        self.positive + self.negative
    }
}

/// Conjunction of clauses over variables `0..num_vars`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    /// Rejects empty clauses and literals outside `0..num_vars`.
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self> {
        for (i, c) in clauses.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::EmptyClause(i));
            }
            if let Some(l) = c.literals.iter().find(|l| l.var.index() >= num_vars) {
                return Err(Error::VarOutOfRange {
                    var: l.var,
                    num_vars,
                });
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Convenience for tests and examples; panics on invalid input.
    pub fn from_signed(num_vars: usize, clauses: &[&[i64]]) -> Self {
        Self::new(
            num_vars,
            clauses.iter().map(|c| Clause::from_signed(c)).collect(),
        )
        .expect("valid formula")
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn max_clause_width(&self) -> usize {
        self.clauses.iter().map(Clause::len).max().unwrap_or(0)
    }

    pub fn occurrences(&self) -> Vec<Occurrences> {
        let mut occ = vec![Occurrences::default(); self.num_vars];
        for l in self.clauses.iter().flat_map(|c| &c.literals) {
            let o = &mut occ[l.var.index()];
            if l.negated {
                o.negative += 1;
            } else {
                o.positive += 1;
            }
        }
        occ
    }

    pub fn is_satisfied_by(&self, assignment: u64) -> bool {
        self.clauses
            .iter()
            .all(|c| c.literals.iter().any(|l| l.is_true_under(assignment)))
    }

    /// Renumbers the variables that occur onto `0..k`, in order of first
    /// index. Returns the new formula and, for each new variable, its old id.
    pub fn compact(&self) -> (CnfFormula, Vec<VarId>) {
        let mut used: BTreeMap<VarId, VarId> = BTreeMap::new();
        for l in self.clauses.iter().flat_map(|c| &c.literals) {
            used.insert(l.var, l.var);
        }
        let old: Vec<VarId> = used.keys().copied().collect();
        for (new, v) in used.values_mut().enumerate() {
            *v = VarId::from(new);
        }
        let clauses = self
            .clauses
            .iter()
            .map(|c| {
                Clause::new(
                    c.literals
                        .iter()
                        .map(|l| Literal {
                            var: used[&l.var],
                            negated: l.negated,
                        })
                        .collect(),
                )
            })
            .collect();
        (
            CnfFormula {
                num_vars: old.len(),
                clauses,
            },
            old,
        )
    }

    /// Checks the (3,3) occurrence discipline: every clause has at most three
    /// literals, and every variable occurs at most three times in total, at
    /// most once negated and at most twice positive.
    pub fn check_three_three(&self) -> InstanceReport {
        let mut report = InstanceReport::default();
        for (i, c) in self.clauses.iter().enumerate() {
            if c.len() > 3 {
                report.wide_clauses.push(i);
            }
        }
        for (v, o) in self.occurrences().into_iter().enumerate() {
            if o.total() > 3 || o.negative > 1 || o.positive > 2 {
                report.violations.push((VarId::from(v), o));
            }
        }
        report
    }

    pub fn is_33sat_instance(&self) -> bool {
        self.check_three_three().is_ok()
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return f.write_str("⊤");
        }
        for c in &self.clauses {
            f.write_str("(")?;
            for (i, l) in c.literals.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ∨ ")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Diagnostics from [`CnfFormula::check_three_three`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstanceReport {
    /// Indices of clauses with more than three literals.
    pub wide_clauses: Vec<usize>,
    /// Variables breaking an occurrence bound, with their counts.
    pub violations: Vec<(VarId, Occurrences)>,
}

impl InstanceReport {
    pub fn is_ok(&self) -> bool {
        self.wide_clauses.is_empty() && self.violations.is_empty()
    }
}
