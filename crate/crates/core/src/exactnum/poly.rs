use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with big integer coefficients, `coeffs[i]` multiplies `t^i`.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// `1 - t^n`.
    pub fn one_minus_t_pow(n: usize) -> Self {
        let mut p = Self::one();
        p = &p - &Self::monomial(BigInt::one(), n);
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact quotient `self / b`; fails if the division leaves a remainder
    /// or needs non-integer coefficients.
    pub fn divexact(&self, b: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.divrem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Integer long division. Fails if a quotient coefficient is not an integer.
    pub fn divrem(&self, b: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead = &b.coeffs[db];
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let c = &r[i + db];
            if c.is_zero() {
                continue;
            }
            let (qc, rem) = c.div_rem(lead);
            if !rem.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[i + j] -= &qc * bj;
            }
            q[i] = qc;
        }
        Ok((IntPoly::new(q), IntPoly::new(r)))
    }

    /// Reverses coefficients within `0..=n`: returns `t^n p(1/t)`.
    pub fn reversed(&self, n: usize) -> IntPoly {
        let mut c = vec![BigInt::zero(); n + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            assert!(i <= n, "reversal degree below polynomial degree");
            c[n - i] = x.clone();
        }
        IntPoly::new(c)
    }

    /// `self` divided by its content, with positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut p = IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect());
        if p.coeffs.last().is_some_and(|x| x.is_negative()) {
            p = -&p;
        }
        p
    }

    /// Pseudo-remainder: the remainder of `lead(b)^e self` on division by `b`.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("nonzero divisor");
        let lb = &b.coeffs[db];
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.coeffs[dr].clone();
            r = &r.scale(lb) - &(&IntPoly::monomial(lr, dr - db) * b);
        }
        r
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Coefficients as machine integers, for serialisation.
    pub fn to_i64(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .map(|c| i64::try_from(c).expect("coefficient exceeds i64"))
            .collect()
    }

    /// Gcd of the coefficients (nonnegative), zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
            .abs()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_gcd() {
        // (1 - t^2)(1 + t^3) and (1 - t)(1 + t)^2 share (1 - t)(1 + t)^2
        let a = &IntPoly::one_minus_t_pow(2) * &IntPoly::from_i64(&[1, 0, 0, 1]);
        let b = &IntPoly::from_i64(&[1, -1]) * &IntPoly::from_i64(&[1, 2, 1]);
        let g = a.gcd(&b);
        assert_eq!(g, IntPoly::from_i64(&[-1, -1, 1, 1]).primitive());
        assert_eq!(a.gcd(&IntPoly::from_i64(&[3])), IntPoly::one());
        assert_eq!(
            IntPoly::from_i64(&[4, -6]).primitive(),
            IntPoly::from_i64(&[-2, 3])
        );
    }

    #[test]
    fn square_of_one_minus_t2() {
        let p = IntPoly::one_minus_t_pow(2);
        assert_eq!(&p * &p, IntPoly::from_i64(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn exact_quotient() {
        let q = IntPoly::one_minus_t_pow(4)
            .divexact(&IntPoly::one_minus_t_pow(2))
            .unwrap();
        assert_eq!(q, IntPoly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn inexact_quotient_is_an_error() {
        let r = IntPoly::one_minus_t_pow(3).divexact(&IntPoly::one_minus_t_pow(2));
        assert_eq!(r, Err(Error::InexactDivision));
    }

    #[test]
    fn non_integral_quotient_is_an_error() {
        let r = IntPoly::from_i64(&[1, 1]).divexact(&IntPoly::from_i64(&[0, 2]));
        assert_eq!(r, Err(Error::InexactDivision));
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPoly::from_i64(&[1, -2, 0, 3]).to_string(),
            "1 - 2t + 3t^3"
        );
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
