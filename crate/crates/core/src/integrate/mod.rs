//! Exact integration over the unit cube for product-form polynomials.
//!
//! Three routes compute the same number:
//! * full expansion followed by term-wise integration (the oracle),
//! * a dynamic program over which factors are still unassigned
//!   ([`integrate_prodsum`]),
//! * divide-and-conquer elimination for products of bounded width
//!   ([`integrate_cwide`]).

mod cwide;
mod subset_dp;

pub use cwide::{integrate_cwide, width_of};
pub use subset_dp::integrate_prodsum;

use crate::error::Result;
use crate::limits::Limits;
use crate::multipoly::MultiPoly;
use crate::structured::{ProdMulti, ProdSumUni, SumFactor};

pub use crate::multipoly::integrate_disjoint_product;

/// Multiplies a sequence of factors out in full, left to right.
pub(crate) fn expand_factors<'a>(
    factors: impl IntoIterator<Item = &'a MultiPoly>,
    limits: &Limits,
) -> Result<MultiPoly> {
    factors.into_iter().try_fold(MultiPoly::one(), |acc, f| {
        acc.mul_limited(f, limits.max_terms)
    })
}

/// Full sum-of-products expansion. Exponential in the number of factors;
/// intended as an oracle on small inputs.
pub fn expand_prodsum(p: &ProdSumUni, limits: &Limits) -> Result<MultiPoly> {
    let factors: Vec<MultiPoly> = p.factors().iter().map(SumFactor::to_multi).collect();
    expand_factors(&factors, limits)
}

pub fn expand_prodmulti(p: &ProdMulti, limits: &Limits) -> Result<MultiPoly> {
    expand_factors(p.factors(), limits)
}
