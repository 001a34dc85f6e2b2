//! Multiplicative and additive approximation contracts.
//!
//! An approximation `A` of a true value `F` is r-factor when it lies between
//! `F/r` and `rF` (the interval flips for negative `F`), and (r, s)-factor
//! when that interval is widened by `s` on both ends.

use cubecalc_core::Rat;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error("r must be at least 1, got {0}")]
    FactorBelowOne(Rat),
    #[error("s must be nonnegative, got {0}")]
    NegativeSlack(Rat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxCheck {
    true_value: Rat,
    approx_value: Rat,
    r: Rat,
    s: Rat,
}

impl ApproxCheck {
    pub fn new(true_value: Rat, approx_value: Rat, r: Rat, s: Rat) -> Result<Self, ApproxError> {
        if r < Rat::one() {
            return Err(ApproxError::FactorBelowOne(r));
        }
        if s < Rat::zero() {
            return Err(ApproxError::NegativeSlack(s));
        }
        Ok(ApproxCheck {
            true_value,
            approx_value,
            r,
            s,
        })
    }

    pub fn true_value(&self) -> &Rat {
        &self.true_value
    }

    pub fn approx_value(&self) -> &Rat {
        &self.approx_value
    }

    pub fn r(&self) -> &Rat {
        &self.r
    }

    pub fn s(&self) -> &Rat {
        &self.s
    }

    /// `[lo, hi]` allowed for the approximation with slack `s`.
    fn interval(&self, s: &Rat) -> (Rat, Rat) {
        let shrunk = &self.true_value / &self.r;
        let grown = &self.true_value * &self.r;
        let (lo, hi) = if self.true_value >= Rat::zero() {
            (shrunk, grown)
        } else {
            (grown, shrunk)
        };
        (lo - s, hi + s)
    }
}

/// Ignores `s`.
pub fn check_r_factor(c: &ApproxCheck) -> bool {
    let (lo, hi) = c.interval(&Rat::zero());
    lo <= c.approx_value && c.approx_value <= hi
}

pub fn check_rs_factor(c: &ApproxCheck) -> bool {
    let (lo, hi) = c.interval(&c.s);
    lo <= c.approx_value && c.approx_value <= hi
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubecalc_core::rat::{frac, int};

    fn check(f: i64, a: i64, r: i64, s: i64) -> ApproxCheck {
        ApproxCheck::new(int(f), int(a), int(r), int(s)).unwrap()
    }

    #[test]
    fn zero_true_value() {
        assert!(check_r_factor(&check(0, 0, 5, 0)));
        assert!(!check_r_factor(&check(0, 1, 5, 0)));
        assert!(!check_r_factor(&check(0, -1, 5, 0)));
    }

    #[test]
    fn r_factor_examples() {
        assert!(check_r_factor(&check(4, 5, 2, 0)));
        assert!(!check_r_factor(&check(-4, -1, 2, 0)));
        assert!(check_r_factor(&check(-4, -8, 2, 0)));
        assert!(check_r_factor(&check(-4, -2, 2, 0)));
    }

    #[test]
    fn rs_factor_examples() {
        for a in -3..=3 {
            assert!(check_rs_factor(&check(0, a, 1, 3)));
        }
        assert!(!check_rs_factor(&check(0, 4, 1, 3)));
        assert!(!check_rs_factor(&check(0, -4, 1, 3)));
        // interval is [4, 26]
        assert!(check_rs_factor(&check(12, 4, 2, 2)));
        assert!(check_rs_factor(&check(12, 26, 2, 2)));
        assert!(!check_rs_factor(&check(12, 27, 2, 2)));
        assert!(!check_r_factor(&check(12, 4, 2, 2)));
    }

    #[test]
    fn rational_bounds() {
        let c = ApproxCheck::new(int(3), frac(3, 2), frac(2, 1), int(0)).unwrap();
        assert!(check_r_factor(&c));
        let c = ApproxCheck::new(int(3), frac(149, 100), int(2), int(0)).unwrap();
        assert!(!check_r_factor(&c));
    }

    #[test]
    fn validation() {
        assert_eq!(
            ApproxCheck::new(int(1), int(1), frac(1, 2), int(0)),
            Err(ApproxError::FactorBelowOne(frac(1, 2)))
        );
        assert_eq!(
            ApproxCheck::new(int(1), int(1), int(1), int(-1)),
            Err(ApproxError::NegativeSlack(int(-1)))
        );
    }
}
