use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::IntPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Rational function `num / den` in one variable, expanded as a power series
/// at `t = 0` on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    pub num: IntPoly,
    pub den: IntPoly,
}

impl RationalSeries {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(RationalSeries { num, den })
    }

    /// Builds `num / den` from rational numerator coefficients by clearing
    /// their common denominator into `den`.
    pub fn from_rational_numerator(num: &[Rational], den: IntPoly) -> Result<Self> {
        let l = num.iter().fold(BigInt::from(1), |acc, c| {
            num_integer::lcm(acc, c.denom().clone())
        });
        let n = IntPoly::new(num.iter().map(|c| (c * &l).to_integer()).collect());
        Self::new(n, den.scale(&l))
    }

    /// `self + other` over the product of the denominators.
    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        RationalSeries {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    /// `r * self` for a nonzero rational `r`.
    pub fn scale(&self, r: &Rational) -> RationalSeries {
        let (mut p, mut q) = (r.numer().clone(), r.denom().clone());
        if p < BigInt::zero() {
            p = -p;
            q = -q;
        }
        RationalSeries {
            num: self.num.scale(&p),
            den: self.den.scale(&q),
        }
    }

    /// Lowest terms with integer coefficients and positive `den(0)`.
    pub fn reduced(&self) -> RationalSeries {
        let g = self.num.gcd(&self.den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (
                self.num.divexact(&g).expect("gcd divides the numerator"),
                self.den.divexact(&g).expect("gcd divides the denominator"),
            )
        } else {
            (self.num.clone(), self.den.clone())
        };
        let c = num_integer::gcd(num.content(), den.content());
        if !c.is_zero() && c != BigInt::from(1) {
            num = IntPoly::new(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPoly::new(den.coeffs().iter().map(|x| x / &c).collect());
        }
        if den.coeff(0) < BigInt::zero() {
            num = -&num;
            den = -&den;
        }
        RationalSeries { num, den }
    }

    pub fn expand(&self, k: usize) -> Result<Vec<Rational>> {
        series_expand(self, k)
    }

    /// Equality as rational functions, by cross multiplication.
    pub fn same_function(&self, other: &RationalSeries) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

/// First `k + 1` coefficients of the power series of `f`.
pub fn series_expand(f: &RationalSeries, k: usize) -> Result<Vec<Rational>> {
    let d0 = f.den.coeff(0);
    if d0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let d0 = Rational::from_integer(d0);
    let den = f.den.coeffs();
    let mut out: Vec<Rational> = Vec::with_capacity(k + 1);
    for n in 0..=k {
        let mut c = Rational::from_integer(f.num.coeff(n));
        for j in 1..den.len().min(n + 1) {
            if !den[j].is_zero() {
                c -= &out[n - j] * &den[j];
            }
        }
        out.push(c / &d0);
    }
    Ok(out)
}
