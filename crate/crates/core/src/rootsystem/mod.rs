//! Affine root lattice: simple reflections, the bipartite Coxeter elements,
//! the coefficient sequences `a`, `b`, `c`, the z-polynomial and the
//! exponents.
//!
//! Weyl group elements are integer matrices acting on column vectors of
//! coordinates in the simple roots; a product `XY` applies `Y` first. The
//! reflection `s_i` sends `alpha_j` to `alpha_j - A_ij alpha_i`.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{
    nullspace_primitive, rational_to_integer, IntMatrix, IntPoly, Rational, RationalSeries,
};

/// Integer vector in the basis `alpha_0, ..., alpha_l`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<BigInt>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        RootVector(vec![BigInt::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = BigInt::one();
        v
    }

    pub fn from_i64(v: &[i64]) -> Self {
        RootVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &BigInt) -> RootVector {
        RootVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn apply(m: &IntMatrix, v: &RootVector) -> RootVector {
        RootVector(m.mul_vec(&v.0))
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0
            .iter()
            .map(|x| i64::try_from(x).expect("coordinate exceeds i64"))
            .collect()
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Invariant symmetric form `(x, y) = x^T D A y` with `D` the smallest
/// positive integer diagonal making `DA` symmetric.
#[derive(Clone, Debug)]
pub struct BilinearForm {
    pub symmetrizer: Vec<BigInt>,
    pub matrix: IntMatrix,
}

impl BilinearForm {
    pub fn new(a: &IntMatrix) -> Result<BilinearForm> {
        let n = a.rows();
        let mut d: Vec<Option<Rational>> = vec![None; n];
        d[0] = Some(Rational::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().unwrap();
            for j in 0..n {
                if j == i || a[(i, j)].is_zero() {
                    continue;
                }
                if a[(j, i)].is_zero() {
                    return Err(Error::Internal("Cartan matrix is not symmetrisable".into()));
                }
                let dj = &di * Rational::new(a[(i, j)].clone(), a[(j, i)].clone());
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(x) if *x != dj => {
                        return Err(Error::Internal("Cartan matrix is not symmetrisable".into()))
                    }
                    Some(_) => {}
                }
            }
        }
        let d: Vec<Rational> = d
            .into_iter()
            .map(|x| x.ok_or_else(|| Error::Internal("disconnected diagram".into())))
            .collect::<Result<_>>()?;
        let l = d.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut sym: Vec<BigInt> = d.iter().map(|x| (x * &l).to_integer()).collect();
        let g = sym.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        for x in sym.iter_mut() {
            *x = &*x / &g;
        }
        let mut matrix = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                matrix[(i, j)] = &sym[i] * &a[(i, j)];
            }
        }
        Ok(BilinearForm {
            symmetrizer: sym,
            matrix,
        })
    }

    pub fn pair(&self, x: &RootVector, y: &RootVector) -> BigInt {
        x.0.iter()
            .zip(self.matrix.mul_vec(&y.0))
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// Whether the orbit formulas and the closed-form generating function are
/// available for a diagram, and if not, which identities failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitSupport {
    Supported,
    Unsupported(Vec<String>),
}

impl OrbitSupport {
    pub fn is_supported(&self) -> bool {
        matches!(self, OrbitSupport::Supported)
    }
}

/// Simple reflections and Coxeter elements of an affine diagram.
#[derive(Clone, Debug)]
pub struct CoxeterData {
    /// Matrix `A` defining the reflections.
    pub a: IntMatrix,
    pub form: BilinearForm,
    /// Two-colouring of the diagram with node 0 in the second part.
    pub parts: (Vec<usize>, Vec<usize>),
    pub reflections: Vec<IntMatrix>,
    /// Product of the reflections of the first part.
    pub c1: IntMatrix,
    /// Product of the reflections of the second part without node 0.
    pub c2: IntMatrix,
    /// Finite Coxeter element `C2 C1`.
    pub c: IntMatrix,
    /// Affine Coxeter element `s_0 C`.
    pub ca: IntMatrix,
    /// `s_0 C2`.
    pub ca2: IntMatrix,
    /// Order of `C`.
    pub h: usize,
    /// `h / 2` when `h` is even.
    pub g: Option<usize>,
    /// Primitive positive null vector of `A`.
    pub delta: RootVector,
    /// `delta - alpha_0`.
    pub psi: RootVector,
    pub support: OrbitSupport,
}

fn reflection(a: &IntMatrix, i: usize) -> IntMatrix {
    let n = a.rows();
    let mut s = IntMatrix::identity(n);
    for j in 0..n {
        s[(i, j)] -= &a[(i, j)];
    }
    s
}

fn two_colouring(a: &IntMatrix) -> Result<Vec<u8>> {
    let n = a.rows();
    let mut col = vec![0u8; n];
    col[0] = 2;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for y in 0..n {
            if y == x || (a[(x, y)].is_zero() && a[(y, x)].is_zero()) {
                continue;
            }
            if col[y] == 0 {
                col[y] = 3 - col[x];
                queue.push_back(y);
            } else if col[y] == col[x] {
                return Err(Error::NoBipartition);
            }
        }
    }
    if col.contains(&0) {
        return Err(Error::Internal("disconnected diagram".into()));
    }
    Ok(col)
}

/// Builds the Coxeter data of the reflection matrix `a` with affine node 0.
pub fn build_coxeter(a: &IntMatrix) -> Result<CoxeterData> {
    let n = a.rows();
    let col = two_colouring(a)?;
    let p1: Vec<usize> = (0..n).filter(|&i| col[i] == 1).collect();
    let p2: Vec<usize> = (0..n).filter(|&i| col[i] == 2).collect();
    let reflections: Vec<IntMatrix> = (0..n).map(|i| reflection(a, i)).collect();
    let product = |idx: &[usize]| {
        idx.iter()
            .fold(IntMatrix::identity(n), |m, &i| &m * &reflections[i])
    };
    let c1 = product(&p1);
    let c2 = product(&p2[1..]);
    let c = &c2 * &c1;
    let ca = &reflections[0] * &c;
    let ca2 = &reflections[0] * &c2;
    let id = IntMatrix::identity(n);
    let mut h = 1;
    let mut m = c.clone();
    while m != id {
        m = &m * &c;
        h += 1;
        if h > 4 * n * n + 64 {
            return Err(Error::Internal(
                "finite Coxeter element has no finite order".into(),
            ));
        }
    }
    let form = BilinearForm::new(a)?;
    let ker = nullspace_primitive(a);
    if ker.len() != 1 || ker[0].iter().any(|x| !x.is_positive()) {
        return Err(Error::Internal("reflection matrix is not affine".into()));
    }
    let delta = RootVector(ker.into_iter().next().unwrap());
    let psi = delta.sub(&RootVector::unit(n, 0));
    let mut cd = CoxeterData {
        a: a.clone(),
        form,
        parts: (p1, p2),
        reflections,
        c1,
        c2,
        c,
        ca,
        ca2,
        h,
        g: (h % 2 == 0).then_some(h / 2),
        delta,
        psi,
        support: OrbitSupport::Supported,
    };
    let failed: Vec<String> = cd
        .structure_identities()
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect();
    if !failed.is_empty() {
        cd.support = OrbitSupport::Unsupported(failed);
    }
    Ok(cd)
}

impl CoxeterData {
    pub fn rank(&self) -> usize {
        self.a.rows()
    }

    pub fn alpha0(&self) -> RootVector {
        RootVector::unit(self.rank(), 0)
    }

    /// Finite part of the bipartition: `(P1, P2 without node 0)`.
    pub fn finite_parts(&self) -> (Vec<usize>, Vec<usize>) {
        (self.parts.0.clone(), self.parts.1[1..].to_vec())
    }

    /// `C^(k) alpha_0` for `k >= 0`, where `C^(k)` alternates `C1`, `C2`,
    /// `C1`, ... starting with `C1`.
    pub fn alternating_orbit(&self, k: usize) -> RootVector {
        self.alternating_orbits(k).pop().unwrap()
    }

    /// `C^(0) alpha_0, ..., C^(k) alpha_0`.
    pub fn alternating_orbits(&self, k: usize) -> Vec<RootVector> {
        let mut out = vec![self.alpha0()];
        for j in 1..=k {
            let m = if j % 2 == 1 { &self.c1 } else { &self.c2 };
            let next = RootVector::apply(m, &out[j - 1]);
            out.push(next);
        }
        out
    }

    /// `C^(k) alpha_0` with `C^(k) alpha_0 = 0` for negative `k`.
    pub fn alternating_orbit_signed(&self, k: i64) -> RootVector {
        if k < 0 {
            RootVector::zero(self.rank())
        } else {
            self.alternating_orbit(k as usize)
        }
    }

    /// `2 (C^i alpha_0, alpha_0) / (alpha_0, alpha_0)` as an exact rational.
    pub fn a_ratio(&self, i: usize) -> Rational {
        let a0 = self.alpha0();
        let v = RootVector::apply(&self.c.pow(i as u32), &a0);
        Rational::new(
            BigInt::from(2) * self.form.pair(&v, &a0),
            self.form.pair(&a0, &a0),
        )
    }

    /// `a_0 = 1` and `a_i` for `1 <= i < h`.
    pub fn a_sequence(&self) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::one()];
        for i in 1..self.h {
            let r = self.a_ratio(i);
            out.push(rational_to_integer(&r).ok_or_else(|| {
                Error::violation("a-sequence integrality", format!("a_{i} = {r}"))
            })?);
        }
        Ok(out)
    }

    /// Named identities that the orbit and closed-form machinery relies on.
    pub fn structure_identities(&self) -> Vec<(String, bool)> {
        let mut out = Vec::new();
        let n = self.rank();
        let h = self.h;
        let a0 = self.alpha0();
        out.push(("h is even".to_string(), h % 2 == 0));
        out.push((
            "null root has coefficient 1 at the affine node".to_string(),
            self.delta.0[0].is_one(),
        ));
        let target = a0.add(&self.psi.scale(&BigInt::from(2)));
        let orb = self.alternating_orbits(2 * h);
        out.push((
            "C^(h) alpha0 = alpha0 + 2 psi".to_string(),
            orb[h] == target,
        ));
        out.push((
            "C^(h-1) alpha0 = alpha0 + 2 psi".to_string(),
            orb[h - 1] == target,
        ));
        let two_delta = self.delta.scale(&BigInt::from(2));
        out.push((
            "C^(i) alpha0 + C^(i+h) alpha0 = 2 delta".to_string(),
            (1..=h).all(|i| orb[i].add(&orb[i + h]) == two_delta),
        ));
        let Some(g) = self.g else {
            return out;
        };
        out.push((
            "C^g psi = -psi".to_string(),
            RootVector::apply(&self.c.pow(g as u32), &self.psi) == self.psi.neg(),
        ));
        let a: Vec<Rational> = (0..=h + g).map(|i| self.a_ratio(i)).collect();
        out.push((
            "a_g = -2".to_string(),
            a[g] == Rational::from_integer(BigInt::from(-2)),
        ));
        out.push((
            "a_i + a_(i+g) = 0".to_string(),
            (1..g).all(|i| (&a[i] + &a[i + g]).is_zero()),
        ));
        let z = self.z_unchecked();
        out.push((
            "z_i = z_(h-i)".to_string(),
            (0..=h).all(|i| z[i] == z[h - i]),
        ));
        let nz: Vec<usize> = (0..n).filter(|&i| !z[g].0[i].is_zero()).collect();
        out.push((
            "z_g = 2 alpha_(i*)".to_string(),
            nz.len() == 1 && z[g].0[nz[0]] == BigInt::from(2),
        ));
        out
    }

    fn z_unchecked(&self) -> Vec<RootVector> {
        let h = self.h;
        let orb = self.alternating_orbits(h);
        let mut z = vec![orb[0].clone()];
        for i in 1..h {
            z.push(orb[i].sub(&orb[i - 1]));
        }
        z.push(self.delta.scale(&BigInt::from(2)).sub(&orb[h - 1]));
        z
    }

    /// Coefficient vectors `z_0, ..., z_h` of the numerator of the closed
    /// form generating function: `z_0 = alpha_0`,
    /// `z_i = C^(i) alpha_0 - C^(i-1) alpha_0` for `0 < i < h`, and
    /// `z_h = 2 delta - C^(h-1) alpha_0`, so that the coefficients sum to
    /// `2 delta`.
    pub fn z_polynomial(&self) -> Result<Vec<RootVector>> {
        self.require_support()?;
        Ok(self.z_unchecked())
    }

    /// Node `i*` with `z_g = 2 alpha_{i*}`, if `z_g` has that form.
    pub fn i_star(&self) -> Result<Option<usize>> {
        let z = self.z_polynomial()?;
        let g = self.g.unwrap();
        let nz: Vec<usize> = (0..self.rank()).filter(|&i| !z[g].0[i].is_zero()).collect();
        Ok(match nz.as_slice() {
            [i] if z[g].0[*i] == BigInt::from(2) => Some(*i),
            _ => None,
        })
    }

    /// `c_0 = 1`, `c_i = a_i` for `0 < i < g`, `c_g = -1`.
    pub fn c_sequence(&self) -> Result<Vec<BigInt>> {
        self.require_support()?;
        let g = self.g.unwrap();
        let a = self.a_sequence()?;
        let mut c: Vec<BigInt> = a[..g].to_vec();
        c.push(BigInt::from(-1));
        Ok(c)
    }

    /// `sum_{i=0}^{g+1} (c_i - c_{i-1}) t^{2i}`.
    pub fn c_denominator(&self) -> Result<IntPoly> {
        let c = self.c_sequence()?;
        let g = c.len() - 1;
        let get = |i: i64| -> BigInt {
            if i < 0 || i as usize > g {
                BigInt::zero()
            } else {
                c[i as usize].clone()
            }
        };
        let mut coeffs = vec![BigInt::zero(); 2 * g + 3];
        for i in 0..=(g + 1) as i64 {
            coeffs[2 * i as usize] = get(i) - get(i - 1);
        }
        Ok(IntPoly::new(coeffs))
    }

    /// `C_a^{-1} = C1 C2 s_0`.
    pub fn ca_inverse(&self) -> IntMatrix {
        &(&self.c1 * &self.c2) * &self.reflections[0]
    }

    /// `C_a^i alpha_0` for any integer `i`.
    pub fn affine_orbit(&self, i: i64) -> RootVector {
        let m = if i >= 0 {
            self.ca.pow(i as u32)
        } else {
            self.ca_inverse().pow(i.unsigned_abs() as u32)
        };
        RootVector::apply(&m, &self.alpha0())
    }

    /// Checks for `0 <= i <= imax` that
    /// `C_a^i alpha_0 = sum_{j<=i} b_j C^{i-j} alpha_0` and
    /// `C_a^{-i} alpha_0 = -sum_{j<i} b_j C1 C^{i-j-1} alpha_0`.
    pub fn affine_orbit_identities(&self, b: &[BigInt], imax: usize) -> Result<()> {
        self.require_support()?;
        if b.len() <= imax {
            return Err(Error::Internal("b-sequence too short".into()));
        }
        let n = self.rank();
        let mut c_pow = vec![self.alpha0()];
        for j in 1..=imax {
            let next = RootVector::apply(&self.c, &c_pow[j - 1]);
            c_pow.push(next);
        }
        let c1_pow: Vec<RootVector> = c_pow
            .iter()
            .map(|v| RootVector::apply(&self.c1, v))
            .collect();
        let inv = self.ca_inverse();
        let mut fwd = self.alpha0();
        let mut back = self.alpha0();
        for i in 0..=imax {
            let mut expect = RootVector::zero(n);
            for j in 0..=i {
                expect = expect.add(&c_pow[i - j].scale(&b[j]));
            }
            if fwd != expect {
                return Err(Error::violation(
                    "affine-coxeter-orbit",
                    format!("C_a^{i} alpha0 = {fwd:?}, expansion gives {expect:?}"),
                ));
            }
            if i > 0 {
                let mut expect = RootVector::zero(n);
                for j in 0..i {
                    expect = expect.sub(&c1_pow[i - j - 1].scale(&b[j]));
                }
                if back != expect {
                    return Err(Error::violation(
                        "affine-coxeter-orbit",
                        format!("C_a^-{i} alpha0 = {back:?}, expansion gives {expect:?}"),
                    ));
                }
            }
            fwd = RootVector::apply(&self.ca, &fwd);
            back = RootVector::apply(&inv, &back);
        }
        Ok(())
    }

    /// Named properties of the chain `C^(k) psi`, `0 <= k < h`, and of the
    /// z-polynomial: distinct and decreasing from `psi` to `-psi`,
    /// `C^(g-1) psi = alpha_(i*)` with `i*` in the part matching `g`, and
    /// every `z_k` nonzero.
    pub fn psi_chain_identities(&self) -> Result<Vec<(String, bool)>> {
        self.require_support()?;
        let h = self.h;
        let g = self.g.unwrap();
        let mut chain = vec![self.psi.clone()];
        for j in 1..h {
            let m = if j % 2 == 1 { &self.c1 } else { &self.c2 };
            let next = RootVector::apply(m, &chain[j - 1]);
            chain.push(next);
        }
        let distinct = {
            let mut v = chain.clone();
            v.sort();
            v.dedup();
            v.len() == h
        };
        let decreasing = chain
            .windows(2)
            .all(|w| w[0].sub(&w[1]).0.iter().all(|x| !x.is_negative()));
        let z = self.z_unchecked();
        let star = self.i_star()?;
        let part = if g % 2 == 1 {
            &self.parts.0
        } else {
            &self.parts.1
        };
        Ok(vec![
            ("C^(k) psi distinct".to_string(), distinct),
            ("C^(k) psi decreasing".to_string(), decreasing),
            (
                "C^(h-1) psi = -psi".to_string(),
                chain[h - 1] == self.psi.neg(),
            ),
            (
                "C^(g-1) psi = alpha_(i*)".to_string(),
                star.is_some_and(|i| chain[g - 1] == RootVector::unit(self.rank(), i)),
            ),
            (
                "i* lies in the part matching g".to_string(),
                star.is_some_and(|i| part.contains(&i)),
            ),
            ("z_k nonzero".to_string(), z.iter().all(|v| !v.is_zero())),
        ])
    }

    pub fn require_support(&self) -> Result<()> {
        match &self.support {
            OrbitSupport::Supported => Ok(()),
            OrbitSupport::Unsupported(why) => Err(Error::OrbitUnavailable(why.join("; "))),
        }
    }

    pub fn to_json(&self, exponents: Option<(usize, usize)>) -> Value {
        let a_seq = self.a_sequence().map(|a| RootVector(a).to_i64()).ok();
        let z = self
            .z_polynomial()
            .ok()
            .map(|z| z.iter().map(RootVector::to_i64).collect::<Vec<_>>());
        json!({
            "h": self.h,
            "g": self.g,
            "a_seq": a_seq,
            "exponents": exponents.map(|(a, b)| json!({"a": a, "b": b})),
            "z": z,
            "bipartition": [self.parts.0, self.parts.1],
            "delta": self.delta.to_i64(),
            "orbit_support": match &self.support {
                OrbitSupport::Supported => json!("supported"),
                OrbitSupport::Unsupported(why) => json!({"unsupported": why}),
            },
        })
    }
}

/// Extended coefficients `a_0, ..., a_K` of
/// `a(t) = (sum_{i<h} a_i t^i + t^h) / (1 - t^h)`.
pub fn a_series(a: &[BigInt], k: usize) -> Vec<BigInt> {
    let h = a.len();
    (0..=k)
        .map(|i| {
            if i < h {
                a[i].clone()
            } else if i % h == 0 {
                // t^h/(1-t^h) adds one to every multiple of h
                &a[0] + BigInt::one()
            } else {
                a[i % h].clone()
            }
        })
        .collect()
}

/// `b_0, ..., b_K` with `a(t) b(t) = 1`, computed by the recursion
/// `b_s = -sum_{j<s} b_j a_{s-j}` and checked against the expansion of
/// `(1 - t^h) / (sum_{i<h} a_i t^i + t^h)`.
pub fn b_sequence(a: &[BigInt], k: usize) -> Result<Vec<BigInt>> {
    if a.first() != Some(&BigInt::one()) {
        return Err(Error::Internal("a_0 must be 1".into()));
    }
    let h = a.len();
    let ext = a_series(a, k);
    let mut b = vec![BigInt::one()];
    for s in 1..=k {
        let v: BigInt = (0..s).map(|j| &b[j] * &ext[s - j]).sum();
        b.push(-v);
    }
    let mut den = a.to_vec();
    den.push(BigInt::one());
    let f = RationalSeries::new(IntPoly::one_minus_t_pow(h), IntPoly::new(den))?;
    let rational: Vec<Rational> = f.expand(k)?;
    for (s, (x, y)) in b.iter().zip(&rational).enumerate() {
        if Rational::from_integer(x.clone()) != *y {
            return Err(Error::Internal(format!(
                "b_{s}: recursion gives {x}, rational form gives {y}"
            )));
        }
    }
    Ok(b)
}

/// Exponents `a = 2 max dim`, `b = h + 2 - a` of the pair, checked against
/// `ab = 2|N|` and the factorisation of the c-denominator.
pub fn exponents(cd: &CoxeterData, max_irrep_dim: usize, order_n: usize) -> Result<(usize, usize)> {
    let a = 2 * max_irrep_dim;
    if cd.h + 2 <= a {
        return Err(Error::violation(
            "exponents",
            format!("h = {} too small for a = {a}", cd.h),
        ));
    }
    let b = cd.h + 2 - a;
    if a * b != 2 * order_n {
        return Err(Error::violation(
            "ab = 2|N|",
            format!("a = {a}, b = {b}, |N| = {order_n}"),
        ));
    }
    let den = cd.c_denominator()?;
    let fac = &IntPoly::one_minus_t_pow(a) * &IntPoly::one_minus_t_pow(b);
    if den != fac {
        return Err(Error::violation(
            "denominator factorisation",
            format!("{den} != (1 - t^{a})(1 - t^{b})"),
        ));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> CoxeterData {
        build_coxeter(&IntMatrix::from_i64(&[vec![2, -2], vec![-2, 2]])).unwrap()
    }

    #[test]
    fn affine_a1() {
        let cd = a1();
        assert_eq!(cd.parts, (vec![1], vec![0]));
        assert_eq!(cd.h, 2);
        assert_eq!(cd.alternating_orbit(1), RootVector::from_i64(&[1, 2]));
        assert_eq!(
            cd.a_sequence().unwrap(),
            vec![BigInt::from(1), BigInt::from(-2)]
        );
        let z = cd.z_polynomial().unwrap();
        assert_eq!(
            z,
            vec![
                RootVector::from_i64(&[1, 0]),
                RootVector::from_i64(&[0, 2]),
                RootVector::from_i64(&[1, 0])
            ]
        );
        assert_eq!(cd.i_star().unwrap(), Some(1));
        let b = b_sequence(&cd.a_sequence().unwrap(), 4).unwrap();
        assert_eq!(b, [1, 2, 2, 2, 2].map(BigInt::from).to_vec());
        assert_eq!(exponents(&cd, 1, 2).unwrap(), (2, 2));
        assert_eq!(cd.affine_orbit(1), RootVector::from_i64(&[3, 2]));
        assert_eq!(cd.affine_orbit(-1), RootVector::from_i64(&[-1, -2]));
        cd.affine_orbit_identities(&b, 4).unwrap();
        assert!(cd.psi_chain_identities().unwrap().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn odd_cycle_has_no_bipartition() {
        let c = IntMatrix::from_i64(&[
            vec![2, -1, 0, 0, -1],
            vec![-1, 2, -1, 0, 0],
            vec![0, -1, 2, -1, 0],
            vec![0, 0, -1, 2, -1],
            vec![-1, 0, 0, -1, 2],
        ]);
        assert_eq!(build_coxeter(&c).unwrap_err(), Error::NoBipartition);
    }

    #[test]
    fn twisted_a2_is_gated() {
        let cd = build_coxeter(&IntMatrix::from_i64(&[vec![2, -4], vec![-1, 2]])).unwrap();
        assert!(!cd.support.is_supported());
        assert!(matches!(cd.z_polynomial(), Err(Error::OrbitUnavailable(_))));
    }

    #[test]
    fn symmetrizer() {
        let f = BilinearForm::new(&IntMatrix::from_i64(&[vec![2, -1], vec![-4, 2]])).unwrap();
        assert_eq!(f.symmetrizer, vec![BigInt::from(4), BigInt::from(1)]);
        assert_eq!(f.matrix, f.matrix.transpose());
    }
}
