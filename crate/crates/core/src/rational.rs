//! Conversions between unsigned integers and exact rationals.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;

/// `num / den` as a reduced rational. Panics if `den` is zero.
pub fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn from_uint(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

pub fn is_non_negative(x: &BigRational) -> bool {
    !x.is_negative()
}
