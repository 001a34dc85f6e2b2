//! CNF formulas and their reductions to polynomial integration and
//! differentiation.

mod cnf;
mod compile;
mod decide;
mod gadgets;
mod preprocess;
mod reduce;
mod truth_table;

pub use cnf::{Clause, CnfFormula, InstanceReport, Literal, Occurrences};
pub use compile::{
    compile_derivative_instance, compile_integration_instance, literal_roles, scale_multiplier,
    DerivativeInstance, Role,
};
pub use decide::{
    decide, decide_sat_via_derivative, decide_sat_via_integration, Decision, Evidence, Route,
};
pub use gadgets::{
    default_gadgets, verify_gadgets, GadgetCheck, GadgetReport, GadgetSet, Requirement,
};
pub use preprocess::{preprocess, Preprocessed};
pub use reduce::reduce_3sat_to_33sat;
pub use truth_table::truth_table_sat;
