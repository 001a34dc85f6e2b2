//! The scalar type. `BigRational` keeps itself in lowest terms with a
//! positive denominator and renders as `num/den` (or `num` when the
//! denominator is one), which is exactly the canonical text form we need.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_positive_integer(r: &Rat) -> bool {
    r.is_integer() && r.is_positive()
}

/// `true` when `r` is an integer multiple of the integer `m`.
pub fn is_multiple_of(r: &Rat, m: &BigInt) -> bool {
    if !r.is_integer() {
        return false;
    }
    if m.is_zero() {
        return r.is_zero();
    }
    (r.numer() % m).is_zero()
}

/// Reduced-form check: positive denominator, coprime parts, zero as 0/1.
pub fn is_canonical(r: &Rat) -> bool {
    use num_integer::Integer;
    r.denom().is_positive()
        && r.numer().gcd(r.denom()).is_one()
        && (!r.numer().is_zero() || r.denom().is_one())
}
