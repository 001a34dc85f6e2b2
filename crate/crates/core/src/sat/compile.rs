//! Turning (3,3) formulas into polynomial instances.

use num_bigint::BigInt;

use super::cnf::CnfFormula;
use super::gadgets::GadgetSet;
use crate::error::{Error, Result};
use crate::multipoly::{Monomial, MultiPoly, VarId};
use crate::rat::Rat;
use crate::structured::{ProdMulti, ProdSumUni, SumFactor};

/// Which gadget a literal occurrence receives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    FirstPositive,
    SecondPositive,
    Negative,
}

/// Roles for every literal, counted in clause order then literal order.
pub fn literal_roles(formula: &CnfFormula) -> Result<Vec<Vec<Role>>> {
    let report = formula.check_three_three();
    if let Some(&i) = report.wide_clauses.first() {
        return Err(Error::ClauseTooWide {
            clause: i,
            width: formula.clauses()[i].len(),
        });
    }
    if let Some(&(var, o)) = report.violations.first() {
        return Err(Error::NotThreeThree {
            var,
            positive: o.positive,
            negative: o.negative,
        });
    }
    let mut positives = vec![0usize; formula.num_vars()];
    Ok(formula
        .clauses()
        .iter()
        .map(|c| {
            c.literals
                .iter()
                .map(|l| {
                    if l.negated {
                        return Role::Negative;
                    }
                    let k = &mut positives[l.var.index()];
                    *k += 1;
                    if *k == 1 {
                        Role::FirstPositive
                    } else {
                        Role::SecondPositive
                    }
                })
                .collect()
        })
        .collect())
}

/// The constant `3·S²` every compiled instance carries.
pub fn scale_multiplier(scale: u64) -> Result<Rat> {
    if scale == 0 {
        return Err(Error::ZeroScale);
    }
    let s = BigInt::from(scale);
    Ok(Rat::from_integer(BigInt::from(3) * &s * &s))
}

/// One sum factor per clause, with each literal replaced by its gadget in
/// the literal's own variable, times `3·S²`.
///
/// For a (3,3) formula the integral is zero exactly when the formula is
/// unsatisfiable, and otherwise a positive multiple of `3·S²`.
pub fn compile_integration_instance(
    formula: &CnfFormula,
    gadgets: &GadgetSet,
    scale: u64,
) -> Result<ProdSumUni> {
    let multiplier = scale_multiplier(scale)?;
    let roles = literal_roles(formula)?;
    let mut factors: Vec<SumFactor> = formula
        .clauses()
        .iter()
        .zip(&roles)
        .map(|(c, rs)| {
            let parts = c.literals.iter().zip(rs).map(|(l, r)| {
                let gadget = match r {
                    Role::FirstPositive => &gadgets.g1,
                    Role::SecondPositive => &gadgets.g2,
                    Role::Negative => &gadgets.f,
                };
                (l.var, gadget.clone())
            });
            SumFactor::new(Rat::default(), parts)
        })
        .collect();
    match factors.first_mut() {
        Some(first) => *first = first.scale(&multiplier),
        None => factors.push(SumFactor::from_constant(multiplier)),
    }
    let degree = [&gadgets.g1, &gadgets.g2, &gadgets.f]
        .iter()
        .filter_map(|g| g.degree())
        .max()
        .unwrap_or(0) as u32;
    ProdSumUni::new(factors, degree.max(1))
}

/// A compiled derivative instance and the bookkeeping behind its shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeInstance {
    pub product: ProdMulti,
    /// All variables, `0..n`.
    pub vars: Vec<VarId>,
    /// Boolean variables of the source formula.
    pub bool_vars: usize,
    /// Variables created for the literals, four per boolean variable.
    pub literal_vars: usize,
    /// Degree of the clause part of the product, two per clause.
    pub clause_degree: usize,
    /// Number of linear padding factors.
    pub padding: usize,
}

/// Literal-variable layout for boolean variable `i`.
pub fn z1(i: usize) -> VarId {
    VarId::from(4 * i)
}
pub fn z2(i: usize) -> VarId {
    VarId::from(4 * i + 1)
}
pub fn u1(i: usize) -> VarId {
    VarId::from(4 * i + 2)
}
pub fn u2(i: usize) -> VarId {
    VarId::from(4 * i + 3)
}

/// Clause product with literals replaced by degree-two monomials
/// (first positive `z₁u₁`, second positive `z₂u₂`, negative `z₁z₂`),
/// followed by `m − 2k` padding factors `v_j · Σ_{x ∈ literal vars} x`, all
/// times `3·S²`.
///
/// Consistent literal choices are exactly the multilinear terms of the
/// clause product, and the padding completes each of them to the full
/// product of all variables, so the coefficient of that monomial is zero
/// exactly when the formula is unsatisfiable.
pub fn compile_derivative_instance(formula: &CnfFormula, scale: u64) -> Result<DerivativeInstance> {
    let multiplier = scale_multiplier(scale)?;
    let roles = literal_roles(formula)?;
    let d = formula.num_vars();
    let m = 4 * d;
    let k = formula.clauses().len();
    let clause_degree = 2 * k;
    if clause_degree > m {
        return Err(Error::TooManyClauses {
            clauses: k,
            vars: d,
        });
    }
    let padding = m - clause_degree;

    let mut factors: Vec<MultiPoly> = formula
        .clauses()
        .iter()
        .zip(&roles)
        .map(|(c, rs)| {
            MultiPoly::from_terms(c.literals.iter().zip(rs).map(|(l, r)| {
                let i = l.var.index();
                let (a, b) = match r {
                    Role::FirstPositive => (z1(i), u1(i)),
                    Role::SecondPositive => (z2(i), u2(i)),
                    Role::Negative => (z1(i), z2(i)),
                };
                (Monomial::multilinear([a, b]), Rat::from_integer(1.into()))
            }))
        })
        .collect();

    let literal_sum = MultiPoly::from_terms(
        (0..m).map(|x| (Monomial::var(VarId::from(x)), Rat::from_integer(1.into()))),
    );
    for j in 0..padding {
        factors.push(&literal_sum * &MultiPoly::var(VarId::from(m + j)));
    }

    match factors.first_mut() {
        Some(first) => *first = first.scale(&multiplier),
        None => factors.push(MultiPoly::constant(multiplier)),
    }

    let n = m + padding;
    Ok(DerivativeInstance {
        product: ProdMulti::new(factors, 2)?,
        vars: (0..n).map(VarId::from).collect(),
        bool_vars: d,
        literal_vars: m,
        clause_degree,
        padding,
    })
}
