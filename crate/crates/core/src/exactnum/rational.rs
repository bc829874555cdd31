use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Arbitrary precision rational number in lowest terms.
pub type Rational = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Returns the integer value of `r` if its denominator is one.
pub fn rational_to_integer(r: &Rational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}
