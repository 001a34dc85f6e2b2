//! File formats, Monte-Carlo cross-checks and approximation contracts used
//! by the `cubecalc` binary.

pub mod approx;
pub mod dimacs;
pub mod document;
pub mod error;
pub mod montecarlo;

pub use approx::{check_r_factor, check_rs_factor, ApproxCheck, ApproxError};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use document::{parse_poly, serialize_poly, Body, Kind, PolyDocument};
pub use error::ParseError;
pub use montecarlo::{mc_estimate, Estimate};

use cubecalc_core::Limits;

pub const TERM_CAP_VAR: &str = "CUBECALC_TERM_CAP";
pub const DP_FACTOR_CAP_VAR: &str = "CUBECALC_DP_FACTOR_CAP";

/// Default limits, overridden by `CUBECALC_TERM_CAP` and
/// `CUBECALC_DP_FACTOR_CAP` when set.
pub fn limits_from_env() -> Result<Limits, String> {
    let mut limits = Limits::default();
    let read = |name: &str| -> Result<Option<usize>, String> {
        match std::env::var(name) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Some)
                .map_err(|_| format!("{name}={v:?} is not a nonnegative integer")),
            Err(std::env::VarError::NotPresent) => Ok(None),
            Err(e) => Err(format!("{name}: {e}")),
        }
    };
    if let Some(n) = read(TERM_CAP_VAR)? {
        limits.max_terms = n;
    }
    if let Some(n) = read(DP_FACTOR_CAP_VAR)? {
        limits.max_dp_factors = n;
    }
    Ok(limits)
}
