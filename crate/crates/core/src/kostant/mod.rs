//! Kostant vectors `x_k`, the multiplicities of the node modules in the
//! symmetric powers `S^k(V)` written as vectors in the root lattice, and
//! their generating functions.
//!
//! Four root-system methods (recursion, binomial expansion, affine Coxeter
//! orbits, prefix sums of `b`) are checked against a character-theoretic
//! decomposition and against Molien series.

mod molien;

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

pub use molien::{denominator_divides, molien_series};

use crate::error::{Error, Result};
use crate::exactnum::{rational_to_integer, IntMatrix, IntPoly, Rational, RationalSeries};
use crate::groups::{inner_product, symmetric_power_characters, FiniteSubgroup, GroupPair};
use crate::quiver::{McKayQuiver, Mode};
use crate::rootsystem::{b_sequence, build_coxeter, exponents, CoxeterData, RootVector};

/// Multiplicities of the node modules in `S^k(V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantVector {
    pub k: usize,
    pub coords: RootVector,
}

impl KostantVector {
    /// Nonnegativity and `sum_i w_i x_i = k + 1`.
    pub fn check(&self, weights: &[BigInt]) -> Result<()> {
        if self.coords.0.iter().any(Signed::is_negative) {
            return Err(Error::violation(
                "nonnegative multiplicities",
                format!("x_{} = {:?}", self.k, self.coords),
            ));
        }
        let total: BigInt = self.coords.0.iter().zip(weights).map(|(x, w)| x * w).sum();
        if total != BigInt::from(self.k + 1) {
            return Err(Error::violation(
                "dimension bookkeeping",
                format!("x_{} = {:?} has weighted sum {total}", self.k, self.coords),
            ));
        }
        Ok(())
    }
}

fn alpha0(n: usize) -> RootVector {
    RootVector::unit(n, 0)
}

/// `x_0, ..., x_k` from `x_0 = alpha_0`, `x_1 = X alpha_0` and
/// `x_{j+1} = X x_j - x_{j-1}`.
pub fn xk_recursive_all(transfer: &IntMatrix, k: usize) -> Vec<RootVector> {
    let n = transfer.rows();
    let mut out = vec![alpha0(n)];
    if k >= 1 {
        out.push(RootVector::apply(transfer, &out[0]));
    }
    for j in 1..k {
        let next = RootVector::apply(transfer, &out[j]).sub(&out[j - 1]);
        out.push(next);
    }
    out
}

pub fn xk_recursive(transfer: &IntMatrix, k: usize) -> KostantVector {
    KostantVector {
        k,
        coords: xk_recursive_all(transfer, k).pop().unwrap(),
    }
}

/// `x_k = sum_j (-1)^j binom(k-j, j) (2I - A)^{k-2j} alpha_0` for the
/// reflection matrix `A`.
pub fn xk_binomial(reflection: &IntMatrix, k: usize) -> KostantVector {
    let n = reflection.rows();
    let x = IntMatrix::identity(n)
        .scale(&BigInt::from(2))
        .sub(reflection);
    let mut powers = vec![alpha0(n)];
    for p in 1..=k {
        let next = RootVector::apply(&x, &powers[p - 1]);
        powers.push(next);
    }
    let mut acc = RootVector::zero(n);
    for j in 0..=k / 2 {
        let mut c = binomial(BigInt::from(k - j), BigInt::from(j));
        if j % 2 == 1 {
            c = -c;
        }
        acc = acc.add(&powers[k - 2 * j].scale(&c));
    }
    KostantVector { k, coords: acc }
}

/// Orbit sums of the affine Coxeter element: `sum_{j=0}^{2m} C_a^{j-m}
/// alpha_0` for `k = 2m` and `sum_{j=0}^{m} C_a^{2j-m} x_1` for `k = 2m+1`.
pub fn xk_orbit(cd: &CoxeterData, k: usize) -> Result<KostantVector> {
    cd.require_support()?;
    let n = cd.rank();
    let m = (k / 2) as i64;
    let inv = cd.ca_inverse();
    let power = |e: i64, v: &RootVector| -> RootVector {
        if e >= 0 {
            RootVector::apply(&cd.ca.pow(e as u32), v)
        } else {
            RootVector::apply(&inv.pow(e.unsigned_abs() as u32), v)
        }
    };
    let mut acc = RootVector::zero(n);
    if k % 2 == 0 {
        for j in 0..=2 * m {
            acc = acc.add(&power(j - m, &alpha0(n)));
        }
    } else {
        let two = IntMatrix::identity(n).scale(&BigInt::from(2));
        let x1 = RootVector::apply(&two.sub(&cd.a), &alpha0(n));
        for j in 0..=m {
            acc = acc.add(&power(2 * j - m, &x1));
        }
    }
    Ok(KostantVector { k, coords: acc })
}

/// `x_k = sum_{i<=k/2} (b_0 + ... + b_i)(C^(k-2i) alpha_0 - C^(k-2i-1) alpha_0)`
/// with `C^(-1) alpha_0 = 0`.
pub fn xk_theorem(cd: &CoxeterData, b: &[BigInt], k: usize) -> Result<KostantVector> {
    cd.require_support()?;
    if b.len() <= k / 2 {
        return Err(Error::Internal("b-sequence too short".into()));
    }
    let n = cd.rank();
    let orb = cd.alternating_orbits(k);
    let at = |j: i64| {
        if j < 0 {
            RootVector::zero(n)
        } else {
            orb[j as usize].clone()
        }
    };
    let mut acc = RootVector::zero(n);
    let mut prefix = BigInt::zero();
    for i in 0..=k / 2 {
        prefix += &b[i];
        let j = (k - 2 * i) as i64;
        acc = acc.add(&at(j).sub(&at(j - 1)).scale(&prefix));
    }
    Ok(KostantVector { k, coords: acc })
}

/// `(1 + t^h) / ((1 - t^a)(1 - t^b))`.
pub fn closed_form_node0(h: usize, a: usize, b: usize) -> RationalSeries {
    let num = &IntPoly::one() + &IntPoly::monomial(BigInt::one(), h);
    let den = &IntPoly::one_minus_t_pow(a) * &IntPoly::one_minus_t_pow(b);
    RationalSeries::new(num, den).expect("denominator has constant term 1")
}

/// `X(t) = z(t) / ((1 - t^a)(1 - t^b))`, one component per node.
#[derive(Clone, Debug)]
pub struct GeneratingFunction {
    pub a: usize,
    pub b: usize,
    pub h: usize,
    pub z: Vec<RootVector>,
    pub components: Vec<RationalSeries>,
}

impl GeneratingFunction {
    pub fn new(z: Vec<RootVector>, a: usize, b: usize) -> Result<GeneratingFunction> {
        let h = z.len() - 1;
        let n = z[0].len();
        let den = &IntPoly::one_minus_t_pow(a) * &IntPoly::one_minus_t_pow(b);
        let components = (0..n)
            .map(|i| {
                RationalSeries::new(
                    IntPoly::new(z.iter().map(|v| v.0[i].clone()).collect()),
                    den.clone(),
                )
            })
            .collect::<Result<_>>()?;
        Ok(GeneratingFunction {
            a,
            b,
            h,
            z,
            components,
        })
    }

    pub fn denominator(&self) -> IntPoly {
        &IntPoly::one_minus_t_pow(self.a) * &IntPoly::one_minus_t_pow(self.b)
    }

    /// Numerator `z(t)_i` of component `i`.
    pub fn numerator(&self, i: usize) -> IntPoly {
        self.components[i].num.clone()
    }

    /// `x_0, ..., x_k` read off the power series.
    pub fn expand(&self, k: usize) -> Result<Vec<RootVector>> {
        let cols: Vec<Vec<Rational>> = self
            .components
            .iter()
            .map(|c| c.expand(k))
            .collect::<Result<_>>()?;
        (0..=k)
            .map(|j| {
                cols.iter()
                    .map(|col| {
                        rational_to_integer(&col[j]).ok_or_else(|| {
                            Error::NonIntegral(format!("series coefficient {}", col[j]))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(RootVector)
            })
            .collect()
    }
}

/// A quiver of a pair together with its Coxeter data, the input of every
/// Kostant-vector computation.
#[derive(Debug)]
pub struct KostantSystem {
    pub pair: Arc<GroupPair>,
    pub quiver: McKayQuiver,
    /// Coxeter data, or the reason it is unavailable (odd cycles).
    pub coxeter: Result<CoxeterData>,
}

impl KostantSystem {
    pub fn build(pair: Arc<GroupPair>, mode: Mode) -> Result<KostantSystem> {
        let quiver = McKayQuiver::build(&pair, mode)?;
        let coxeter = build_coxeter(&quiver.reflection_matrix());
        if let Err(e) = &coxeter {
            if *e != Error::NoBipartition {
                return Err(e.clone());
            }
        }
        Ok(KostantSystem {
            pair,
            quiver,
            coxeter,
        })
    }

    pub fn mode(&self) -> Mode {
        self.quiver.mode()
    }

    pub fn rank(&self) -> usize {
        self.quiver.len()
    }

    pub fn coxeter(&self) -> Result<&CoxeterData> {
        self.coxeter.as_ref().map_err(Clone::clone)
    }

    /// Whether the orbit formulas and the closed form are available.
    pub fn supported(&self) -> bool {
        self.coxeter
            .as_ref()
            .is_ok_and(|cd| cd.support.is_supported())
    }

    /// Group whose characters the nodes are: `N` for restricted quivers,
    /// `G` otherwise.
    pub fn node_group(&self) -> &Arc<FiniteSubgroup> {
        match self.mode() {
            Mode::Restricted => &self.pair.n,
            _ => &self.pair.g,
        }
    }

    pub fn weights(&self) -> Result<Vec<BigInt>> {
        self.quiver.node_weights()
    }

    /// `(a, b) = (2 max dim, h + 2 - a)` from the irreducible modules of `N`
    /// and the order of `C`; defined whenever the diagram is bipartite.
    pub fn exponent_pair(&self) -> Result<(usize, usize)> {
        let h = self.coxeter()?.h;
        let a = 2 * self.pair.n_table.dims().into_iter().max().unwrap_or(1);
        if h + 2 <= a {
            return Err(Error::violation("exponents", format!("h = {h}, a = {a}")));
        }
        Ok((a, h + 2 - a))
    }

    /// Exponents checked against `ab = 2|N|` and the c-denominator.
    pub fn exponents(&self) -> Result<(usize, usize)> {
        let maxd = self.pair.n_table.dims().into_iter().max().unwrap_or(1);
        exponents(self.coxeter()?, maxd, self.pair.n.order())
    }

    /// `3h`, or three times the number of nodes without a Coxeter element.
    pub fn default_depth(&self) -> usize {
        match &self.coxeter {
            Ok(cd) => 3 * cd.h,
            Err(_) => 3 * self.rank(),
        }
    }

    pub fn xk_recursive_all(&self, k: usize) -> Vec<RootVector> {
        xk_recursive_all(&self.quiver.transfer_matrix(), k)
    }

    pub fn xk_binomial(&self, k: usize) -> KostantVector {
        xk_binomial(&self.quiver.reflection_matrix(), k)
    }

    pub fn xk_orbit(&self, k: usize) -> Result<KostantVector> {
        xk_orbit(self.coxeter()?, k)
    }

    pub fn b_sequence(&self, k: usize) -> Result<Vec<BigInt>> {
        b_sequence(&self.coxeter()?.a_sequence()?, k)
    }

    pub fn xk_theorem(&self, b: &[BigInt], k: usize) -> Result<KostantVector> {
        xk_theorem(self.coxeter()?, b, k)
    }

    /// Character decomposition of `S^0(V), ..., S^K(V)` in the nodes: a
    /// linear solve in the node characters for irreducible and restricted
    /// quivers, the pairing `<S^k(V), Ind phi>_G` for induced quivers.
    pub fn xk_character_all(&self, kmax: usize) -> Result<Vec<RootVector>> {
        let nodes = &self.quiver.nodes;
        symmetric_power_characters(self.node_group(), kmax)
            .iter()
            .map(|s| match self.mode() {
                Mode::Induced => nodes
                    .chars
                    .iter()
                    .map(|c| {
                        let r = inner_product(s, c)?;
                        match rational_to_integer(&r) {
                            Some(x) if !x.is_negative() => Ok(x),
                            _ => Err(Error::NonIntegral(format!("pairing {r}"))),
                        }
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(RootVector),
                _ => nodes.decompose_integral(s).map(RootVector),
            })
            .collect()
    }

    pub fn xk_character(&self, k: usize) -> Result<KostantVector> {
        Ok(KostantVector {
            k,
            coords: self.xk_character_all(k)?.pop().unwrap(),
        })
    }

    /// Molien series of every node. Restricted nodes are mutually
    /// orthogonal, so node `i` is the Molien series of its character divided
    /// by its norm.
    pub fn molien_components(&self) -> Result<Vec<RationalSeries>> {
        let chars = &self.quiver.nodes.chars;
        if self.mode() == Mode::Restricted {
            for (i, a) in chars.iter().enumerate() {
                for b in &chars[..i] {
                    if !inner_product(a, b)?.is_zero() {
                        return Err(Error::Orthogonality(
                            "restricted nodes are not orthogonal".into(),
                        ));
                    }
                }
            }
        }
        chars
            .iter()
            .map(|c| {
                let f = molien_series(c)?;
                Ok(match self.mode() {
                    Mode::Restricted => f.scale(&inner_product(c, c)?.recip()),
                    _ => f,
                })
            })
            .collect()
    }

    pub fn molien_component(&self, node: usize) -> Result<RationalSeries> {
        if node >= self.rank() {
            return Err(Error::BadInput(format!("node {node} out of range")));
        }
        Ok(self.molien_components()?.swap_remove(node))
    }

    /// `sum_i w_i X(t)_i`, which must equal `1/(1-t)^2`.
    pub fn molien_total(&self) -> Result<RationalSeries> {
        let w = self.weights()?;
        let comps = self.molien_components()?;
        let mut acc = RationalSeries::new(IntPoly::zero(), IntPoly::one())?;
        for (c, wi) in comps.iter().zip(&w) {
            acc = acc.add(&c.scale(&Rational::from_integer(wi.clone())));
        }
        Ok(acc)
    }

    /// Closed form `z(t) / ((1 - t^a)(1 - t^b))`, checked against the
    /// recursion up to degree `3h`.
    pub fn generating_function(&self) -> Result<GeneratingFunction> {
        let cd = self.coxeter()?;
        let (a, b) = self.exponents()?;
        let gf = GeneratingFunction::new(cd.z_polynomial()?, a, b)?;
        let depth = 3 * cd.h;
        let series = gf.expand(depth)?;
        let rec = self.xk_recursive_all(depth);
        for (k, (x, y)) in series.iter().zip(&rec).enumerate() {
            if let Some(i) = (0..self.rank()).find(|&i| x.0[i] != y.0[i]) {
                return Err(Error::violation(
                    "closed-form-generating-function",
                    format!(
                        "k = {k}, node {i}: series {} vs recursion {}",
                        x.0[i], y.0[i]
                    ),
                ));
            }
        }
        Ok(gf)
    }

    /// Poincare series of one node: the closed form when available, the
    /// reduced Molien series otherwise.
    pub fn poincare_series(&self, node: usize) -> Result<RationalSeries> {
        if node >= self.rank() {
            return Err(Error::BadInput(format!("node {node} out of range")));
        }
        if self.supported() {
            Ok(self.generating_function()?.components.swap_remove(node))
        } else {
            Ok(self.molien_component(node)?.reduced())
        }
    }

    /// JSON with exponents, z-polynomial, per-node series and `x_0..x_K`.
    pub fn to_json(&self, depth: usize) -> Result<Value> {
        let xk = self.xk_recursive_all(depth);
        let (a, b, z, series) = if self.supported() {
            let gf = self.generating_function()?;
            let series: Vec<RationalSeries> = gf.components.clone();
            (
                Some(gf.a),
                Some(gf.b),
                Some(gf.z.iter().map(RootVector::to_i64).collect::<Vec<_>>()),
                series,
            )
        } else {
            let series = self
                .molien_components()?
                .iter()
                .map(RationalSeries::reduced)
                .collect();
            (None, None, None, series)
        };
        let mut series_json = serde_json::Map::new();
        for (i, f) in series.iter().enumerate() {
            series_json.insert(
                format!("node_{i}"),
                json!({"num": f.num.to_i64(), "den": f.den.to_i64()}),
            );
        }
        Ok(json!({
            "pair": self.pair.spec.name(),
            "mode": self.mode().name(),
            "a": a,
            "b": b,
            "h": self.coxeter.as_ref().ok().map(|cd| cd.h),
            "z": z,
            "series": series_json,
            "xk": xk.iter().map(RootVector::to_i64).collect::<Vec<_>>(),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::PairSpec;

    fn system(name: &str, mode: Mode) -> KostantSystem {
        let pair = GroupPair::build(name.parse::<PairSpec>().unwrap()).unwrap();
        KostantSystem::build(Arc::new(pair), mode).unwrap()
    }

    #[test]
    fn cyclic_two_vectors() {
        let s = system("C2", Mode::Irreducible);
        let x = s.xk_recursive_all(4);
        let want: Vec<RootVector> = [[1, 0], [0, 2], [3, 0], [0, 4], [5, 0]]
            .iter()
            .map(|v| RootVector::from_i64(v))
            .collect();
        assert_eq!(x, want);
        assert_eq!(s.xk_character_all(4).unwrap(), want);
        assert_eq!(s.xk_binomial(2).coords, want[2]);
        assert_eq!(s.xk_orbit(2).unwrap().coords, want[2]);
        let b = s.b_sequence(4).unwrap();
        for k in 0..=4 {
            assert_eq!(s.xk_theorem(&b, k).unwrap().coords, want[k]);
            assert_eq!(s.xk_orbit(k).unwrap().coords, want[k]);
        }
        let gf = s.generating_function().unwrap();
        assert_eq!((gf.a, gf.b, gf.h), (2, 2, 2));
        assert!(gf.components[0].same_function(&closed_form_node0(2, 2, 2)));
    }

    #[test]
    fn quaternion_restriction_to_centre() {
        let s = system("C2<D2", Mode::Restricted);
        assert_eq!(
            s.xk_character(1).unwrap().coords,
            RootVector::from_i64(&[0, 1])
        );
        assert!(!s.supported());
        assert!(matches!(s.xk_orbit(2), Err(Error::OrbitUnavailable(_))));
    }
}
