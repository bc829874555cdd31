//! Molien series of individual characters.
//!
//! For `g` in `SL2` with trace `tau`, `det(1 - t g) = 1 - tau t + t^2`, so
//! the multiplicity series of `psi` in the symmetric algebra is
//! `(1/|H|) sum_K |K| conj(psi(g_K)) / (1 - tau_K t + t^2)`. Every such
//! denominator divides `(1 - t^E)^2` with `E` the exponent of `H`, which
//! becomes the common denominator.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{CycloNum, IntPoly, Rational, RationalSeries};
use crate::groups::{Character, FiniteSubgroup};

/// `(1 - t^E)^2 / (1 - tau t + t^2)` with cyclotomic coefficients.
fn class_numerator(group: &Arc<FiniteSubgroup>, tau: &CycloNum, e: usize) -> Result<Vec<CycloNum>> {
    let field = group.field();
    let mut n = vec![CycloNum::zero(field); 2 * e + 1];
    n[0] = CycloNum::one(field);
    n[e] = CycloNum::from_int(field, -2);
    n[2 * e] = CycloNum::one(field);
    // the divisor has constant term 1, so divide from the low end
    let mut q: Vec<CycloNum> = Vec::with_capacity(2 * e - 1);
    for i in 0..=2 * e {
        let mut c = n[i].clone();
        if i >= 1 {
            if let Some(p) = q.get(i - 1) {
                c = &c + &(tau * p);
            }
        }
        if i >= 2 {
            if let Some(p) = q.get(i - 2) {
                c = &c - p;
            }
        }
        if i < 2 * e - 1 {
            q.push(c);
        } else if !c.is_zero() {
            return Err(Error::Internal(
                "class denominator does not divide (1 - t^E)^2".into(),
            ));
        }
    }
    Ok(q)
}

/// Series `sum_k <S^k(V), psi> t^k` for a character `psi` of `group`.
pub fn molien_series(psi: &Character) -> Result<RationalSeries> {
    let group = psi.group();
    let e = group.exponent();
    let field = group.field();
    let traces = group.class_traces();
    let mut acc = vec![CycloNum::zero(field); 2 * e - 1];
    for (c, size) in group.class_sizes().into_iter().enumerate() {
        let w = psi.value(c).conj().scale_int(&BigInt::from(size));
        if w.is_zero() {
            continue;
        }
        for (i, q) in class_numerator(group, &traces[c], e)?.iter().enumerate() {
            acc[i] = &acc[i] + &(&w * q);
        }
    }
    let order = Rational::from_integer(BigInt::from(group.order()));
    let num: Vec<Rational> = acc
        .iter()
        .map(|x| {
            x.to_rational().map(|r| r / &order).ok_or_else(|| {
                Error::Internal(format!("Molien numerator coefficient {x} is not rational"))
            })
        })
        .collect::<Result<_>>()?;
    let one = IntPoly::one_minus_t_pow(e);
    let den = &one * &one;
    RationalSeries::from_rational_numerator(&num, den)
}

/// Whether the reduced denominator of `f` divides `d`.
pub fn denominator_divides(f: &RationalSeries, d: &IntPoly) -> bool {
    let r = f.reduced();
    r.den.gcd(d).degree() == r.den.degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{trivial_character, SubgroupSpec};

    #[test]
    fn cyclic_two_invariants() {
        let g = FiniteSubgroup::generate(SubgroupSpec::Cyclic(2)).unwrap();
        let f = molien_series(&trivial_character(&g)).unwrap();
        let expect = RationalSeries::new(
            IntPoly::from_i64(&[1, 0, 1]),
            IntPoly::from_i64(&[1, 0, -2, 0, 1]),
        )
        .unwrap();
        assert!(f.same_function(&expect));
        let r = f.reduced();
        assert_eq!(r.num, IntPoly::from_i64(&[1, 0, 1]));
    }
}
