use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linalg::solve_rational;
use super::poly::IntPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

pub fn euler_phi(m: usize) -> usize {
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// The `m`-th cyclotomic polynomial, by dividing `t^m - 1` by the
/// cyclotomic polynomials of the proper divisors of `m`.
pub fn cyclotomic_polynomial(m: usize) -> IntPoly {
    assert!(m >= 1);
    let mut p = &IntPoly::monomial(BigInt::one(), m) - &IntPoly::one();
    for d in 1..m {
        if m % d == 0 {
            p = p
                .divexact(&cyclotomic_polynomial(d))
                .expect("cyclotomic polynomials divide t^m - 1");
        }
    }
    p
}

/// The field Q(zeta_m) with power basis `1, z, ..., z^(phi(m)-1)` and a
/// table of reduced coordinates of every power `z^k`, `0 <= k < m`.
#[derive(Debug)]
pub struct CycloField {
    conductor: usize,
    degree: usize,
    powers: Vec<Vec<BigInt>>,
}

impl CycloField {
    pub fn new(m: usize) -> Arc<CycloField> {
        assert!(m >= 1, "conductor must be positive");
        let phi = cyclotomic_polynomial(m);
        let degree = phi.degree().unwrap();
        let phi = phi.coeffs();
        let mut powers = Vec::with_capacity(m);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by z and reduce with the monic relation
            let top = cur.pop().unwrap();
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, p) in cur.iter_mut().zip(phi) {
                    *c -= &top * p;
                }
            }
        }
        Arc::new(CycloField {
            conductor: m,
            degree,
            powers,
        })
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn power(&self, k: usize) -> &[BigInt] {
        &self.powers[k % self.conductor]
    }
}

/// Element of a cyclotomic field, stored as integer coordinates over the
/// power basis with one positive common denominator, in lowest terms.
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyclo_arith(a: &CycloNum, b: &CycloNum, op: ArithOp) -> Result<CycloNum> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl CycloNum {
    fn build(field: Arc<CycloField>, num: Vec<BigInt>, den: BigInt) -> CycloNum {
        let mut x = CycloNum { field, num, den };
        x.normalize();
        x
    }

    /// Restores lowest terms with a positive denominator.
    pub fn normalize(&mut self) {
        assert!(!self.den.is_zero());
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    pub fn zero(field: &Arc<CycloField>) -> CycloNum {
        CycloNum {
            field: field.clone(),
            num: vec![BigInt::zero(); field.degree],
            den: BigInt::one(),
        }
    }

    pub fn one(field: &Arc<CycloField>) -> CycloNum {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<CycloField>, n: i64) -> CycloNum {
        Self::from_rational(field, &Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(field: &Arc<CycloField>, r: &Rational) -> CycloNum {
        let mut num = vec![BigInt::zero(); field.degree];
        num[0] = r.numer().clone();
        Self::build(field.clone(), num, r.denom().clone())
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> CycloNum {
        let m = field.conductor as i64;
        let e = k.rem_euclid(m) as usize;
        CycloNum {
            field: field.clone(),
            num: field.power(e).to_vec(),
            den: BigInt::one(),
        }
    }

    /// Builds from rational coordinates over the power basis.
    pub fn from_coords(field: &Arc<CycloField>, coords: &[Rational]) -> CycloNum {
        assert_eq!(coords.len(), field.degree);
        let l = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords.iter().map(|c| (c * &l).to_integer()).collect();
        Self::build(field.clone(), num, l)
    }

    /// `sum_k c_k zeta_m^k` for integer weights given per exponent `k mod m`.
    pub fn from_power_weights(field: &Arc<CycloField>, weights: &[(usize, BigInt)]) -> CycloNum {
        let mut num = vec![BigInt::zero(); field.degree];
        for (k, w) in weights {
            if w.is_zero() {
                continue;
            }
            for (c, p) in num.iter_mut().zip(field.power(*k)) {
                if !p.is_zero() {
                    *c += w * p;
                }
            }
        }
        CycloNum {
            field: field.clone(),
            num,
            den: BigInt::one(),
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn conductor(&self) -> usize {
        self.field.conductor
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// Integer numerators and the common denominator of the coordinates.
    pub fn raw_parts(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Re-expresses the value in `Q(zeta_M)` where the current conductor
    /// divides `M`.
    pub fn lift_to(&self, target: &Arc<CycloField>) -> CycloNum {
        let m = self.field.conductor;
        let big = target.conductor;
        assert!(big % m == 0, "conductor {m} does not divide {big}");
        if Arc::ptr_eq(&self.field, target) {
            return self.clone();
        }
        let step = big / m;
        let weights: Vec<(usize, BigInt)> = self
            .num
            .iter()
            .enumerate()
            .map(|(j, c)| (j * step, c.clone()))
            .collect();
        let mut x = Self::from_power_weights(target, &weights);
        x.den = self.den.clone();
        x.normalize();
        x
    }

    /// Image under the automorphism `zeta -> zeta^a`, `gcd(a, m) = 1`.
    pub fn galois(&self, a: i64) -> CycloNum {
        let m = self.field.conductor as i64;
        assert_eq!(a.gcd(&m), 1, "not a Galois automorphism");
        let weights: Vec<(usize, BigInt)> = self
            .num
            .iter()
            .enumerate()
            .map(|(j, c)| (((j as i64) * a).rem_euclid(m) as usize, c.clone()))
            .collect();
        let mut x = Self::from_power_weights(&self.field, &weights);
        x.den = self.den.clone();
        x.normalize();
        x
    }

    /// Complex conjugation, `zeta -> zeta^(-1)`.
    pub fn conj(&self) -> CycloNum {
        self.galois(-1)
    }

    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(&self.field, &r.recip()));
        }
        let n = self.field.degree;
        // column j holds the coordinates of self * z^j
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| (self * &Self::zeta_pow(&self.field, j as i64)).coords())
            .collect();
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect();
        let mut rhs = vec![Rational::zero(); n];
        rhs[0] = Rational::one();
        let x = solve_rational(&rows, &rhs)
            .ok_or_else(|| Error::Internal("singular multiplication map".into()))?;
        Ok(Self::from_coords(&self.field, &x))
    }

    pub fn checked_div(&self, other: &CycloNum) -> Result<CycloNum> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (a, b) = common(self, other);
        Ok(&a * &b.inv()?)
    }

    pub fn pow(&self, e: u32) -> CycloNum {
        let mut acc = Self::one(&self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_int(&self, c: &BigInt) -> CycloNum {
        Self::build(
            self.field.clone(),
            self.num.iter().map(|x| x * c).collect(),
            self.den.clone(),
        )
    }

    pub fn scale_rational(&self, r: &Rational) -> CycloNum {
        Self::build(
            self.field.clone(),
            self.num.iter().map(|x| x * r.numer()).collect(),
            &self.den * r.denom(),
        )
    }

    /// Floating point value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.field.conductor as f64;
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / d;
            let th = 2.0 * std::f64::consts::PI * j as f64 / m;
            re += c * th.cos();
            im += c * th.sin();
        }
        (re, im)
    }

    fn same_field_add(&self, o: &CycloNum, sign: bool) -> CycloNum {
        let num = if self.den == o.den {
            self.num
                .iter()
                .zip(&o.num)
                .map(|(a, b)| if sign { a + b } else { a - b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&o.num)
                .map(|(a, b)| {
                    let x = a * &o.den;
                    let y = b * &self.den;
                    if sign {
                        x + y
                    } else {
                        x - y
                    }
                })
                .collect()
        };
        let den = if self.den == o.den {
            self.den.clone()
        } else {
            &self.den * &o.den
        };
        Self::build(self.field.clone(), num, den)
    }

    fn same_field_mul(&self, o: &CycloNum) -> CycloNum {
        let f = &self.field;
        let n = f.degree;
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut num: Vec<BigInt> = prod[..n].to_vec();
        for (k, c) in prod.iter().enumerate().skip(n) {
            if c.is_zero() {
                continue;
            }
            for (x, p) in num.iter_mut().zip(f.power(k)) {
                if !p.is_zero() {
                    *x += c * p;
                }
            }
        }
        Self::build(f.clone(), num, &self.den * &o.den)
    }
}

fn same_field(a: &CycloNum, b: &CycloNum) -> bool {
    Arc::ptr_eq(&a.field, &b.field) || a.field.conductor == b.field.conductor
}

/// Lifts both operands to a common field.
fn common(a: &CycloNum, b: &CycloNum) -> (CycloNum, CycloNum) {
    if same_field(a, b) {
        return (a.clone(), b.clone());
    }
    let (ma, mb) = (a.field.conductor, b.field.conductor);
    let l = ma.lcm(&mb);
    let target = if l == ma {
        a.field.clone()
    } else if l == mb {
        b.field.clone()
    } else {
        CycloField::new(l)
    };
    (a.lift_to(&target), b.lift_to(&target))
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, o: &CycloNum) -> CycloNum {
        if same_field(self, o) {
            self.same_field_add(o, true)
        } else {
            let (a, b) = common(self, o);
            a.same_field_add(&b, true)
        }
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, o: &CycloNum) -> CycloNum {
        if same_field(self, o) {
            self.same_field_add(o, false)
        } else {
            let (a, b) = common(self, o);
            a.same_field_add(&b, false)
        }
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, o: &CycloNum) -> CycloNum {
        if same_field(self, o) {
            self.same_field_mul(o)
        } else {
            let (a, b) = common(self, o);
            a.same_field_mul(&b)
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, o: &CycloNum) -> bool {
        if same_field(self, o) {
            self.den == o.den && self.num == o.num
        } else {
            let (a, b) = common(self, o);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CycloNum {}

/// Hashing is only consistent with equality for values sharing a conductor.
impl Hash for CycloNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.conductor.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let m = self.field.conductor;
        let mut first = true;
        write!(f, "(")?;
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (j, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "z{m}^{j}")?,
                (_, false) => write!(f, "{a}*z{m}^{j}")?,
            }
        }
        write!(f, ")")?;
        if !self.den.is_one() {
            write!(f, "/{}", self.den)?;
        }
        Ok(())
    }
}
