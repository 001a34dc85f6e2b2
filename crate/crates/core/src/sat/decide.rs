//! Satisfiability decided by exact integration or by a mixed derivative.

use num_traits::Signed;

use super::cnf::CnfFormula;
use super::compile::{compile_derivative_instance, compile_integration_instance};
use super::gadgets::default_gadgets;
use super::preprocess::{preprocess, Preprocessed};
use super::reduce::reduce_3sat_to_33sat;
use super::truth_table::truth_table_sat;
use crate::derivative::multilinear_coefficient;
use crate::error::{Error, Result};
use crate::integrate::integrate_prodsum;
use crate::limits::Limits;
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Integration,
    Derivative,
    TruthTable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Unit propagation or pure-literal elimination settled it.
    Simplification,
    /// Integral of the compiled instance over the unit cube.
    Integral(Rat),
    /// Coefficient of the full multilinear monomial of the compiled instance.
    Coefficient(Rat),
    TruthTable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub satisfiable: bool,
    pub evidence: Evidence,
}

/// Simplify, then bring the formula into (3,3) form if it is not already.
/// `Err(answer)` when simplification alone decides.
fn prepare(formula: &CnfFormula) -> Result<std::result::Result<CnfFormula, bool>> {
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
    let simplified = match preprocess(formula) {
        Preprocessed::Decided(answer) => return Ok(Err(answer)),
        Preprocessed::Undecided(g) => g.compact().0,
    };
    if simplified.is_33sat_instance() {
        Ok(Ok(simplified))
    } else {
        reduce_3sat_to_33sat(&simplified).map(Ok)
    }
}

pub fn decide(formula: &CnfFormula, route: Route, limits: &Limits) -> Result<Decision> {
    if route == Route::TruthTable {
        return Ok(Decision {
            satisfiable: truth_table_sat(formula, limits)?,
            evidence: Evidence::TruthTable,
        });
    }
    let instance = match prepare(formula)? {
        Ok(f) => f,
        Err(satisfiable) => {
            return Ok(Decision {
                satisfiable,
                evidence: Evidence::Simplification,
            });
        }
    };
    match route {
        Route::Integration => {
            let p = compile_integration_instance(&instance, &default_gadgets(), 1)?;
            let value = integrate_prodsum(&p, limits)?;
            Ok(Decision {
                satisfiable: value.is_positive(),
                evidence: Evidence::Integral(value),
            })
        }
        Route::Derivative => {
            let inst = compile_derivative_instance(&instance, 1)?;
            let value = multilinear_coefficient(&inst.product, &inst.vars, limits)?;
            Ok(Decision {
                satisfiable: value.is_positive(),
                evidence: Evidence::Coefficient(value),
            })
        }
        Route::TruthTable => unreachable!(),
    }
}

pub fn decide_sat_via_integration(formula: &CnfFormula, limits: &Limits) -> Result<bool> {
    decide(formula, Route::Integration, limits).map(|d| d.satisfiable)
}

pub fn decide_sat_via_derivative(formula: &CnfFormula, limits: &Limits) -> Result<bool> {
    decide(formula, Route::Derivative, limits).map(|d| d.satisfiable)
}
