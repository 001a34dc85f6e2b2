/// Caps on the work a single call may do. Exceeding one is reported as a
/// resource error rather than running away.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of distinct terms held by any intermediate expansion.
    pub max_terms: usize,
    /// Maximum number of factors the subset dynamic program may track at once.
    pub max_dp_factors: usize,
    /// Maximum number of variables for exhaustive truth-table search.
    pub max_truth_table_vars: usize,
}

/// Hard ceiling on `max_dp_factors`; states are packed into a `u64`.
pub const DP_FACTOR_CEILING: usize = 64;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_terms: 1_000_000,
            max_dp_factors: 20,
            max_truth_table_vars: 24,
        }
    }
}
