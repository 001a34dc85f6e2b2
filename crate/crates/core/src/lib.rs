//! Exact integration over the unit cube and mixed derivatives at the origin
//! for product-form polynomials, together with the reductions that turn
//! 3-CNF satisfiability into either computation.
//!
//! All arithmetic is exact ([`Rat`] is an arbitrary-precision rational);
//! the zero/positive distinction the reductions rely on never passes
//! through floating point.

pub mod derivative;
pub mod error;
pub mod integrate;
pub mod limits;
pub mod multipoly;
pub mod rat;
pub mod sat;
pub mod structured;
pub mod unipoly;

pub use derivative::{derivative_at_origin_oracle, has_multilinear_term, multilinear_coefficient};
pub use error::{Error, ErrorKind, Result};
pub use integrate::{
    expand_prodmulti, expand_prodsum, integrate_cwide, integrate_disjoint_product,
    integrate_prodsum, width_of,
};
pub use limits::Limits;
pub use multipoly::{Monomial, MultiPoly, VarId};
pub use rat::Rat;
pub use structured::{ProdMulti, ProdSumUni, SumFactor};
pub use unipoly::UniPoly;
