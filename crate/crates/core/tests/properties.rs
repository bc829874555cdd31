//! Randomized invariants of the exact arithmetic, the character theory and
//! the Kostant-vector methods.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use mckay::exactnum::{series_expand, CycloField, CycloNum, IntPoly, Rational, RationalSeries};
use mckay::groups::{
    fundamental_character, inner_product, symmetric_power_characters, Character, GroupPair,
};
use mckay::kostant::KostantSystem;
use mckay::quiver::Mode;
use mckay::verify::{catalog, modes, Level};

const CONDUCTORS: [usize; 5] = [4, 5, 8, 12, 20];

fn fields() -> &'static Vec<Arc<CycloField>> {
    static F: OnceLock<Vec<Arc<CycloField>>> = OnceLock::new();
    F.get_or_init(|| CONDUCTORS.iter().map(|&m| CycloField::new(m)).collect())
}

fn pairs() -> &'static Vec<Arc<GroupPair>> {
    static P: OnceLock<Vec<Arc<GroupPair>>> = OnceLock::new();
    P.get_or_init(|| {
        catalog(Level::Fast)
            .into_iter()
            .map(|s| Arc::new(GroupPair::build(s).unwrap()))
            .collect()
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

/// Three random elements of one of the test fields.
fn cyclo_triple() -> impl Strategy<Value = (CycloNum, CycloNum, CycloNum)> {
    (0..CONDUCTORS.len()).prop_flat_map(|fi| {
        let field = fields()[fi].clone();
        let d = field.degree();
        let elem = || proptest::collection::vec(rational(), d);
        (elem(), elem(), elem()).prop_map(move |(a, b, c)| {
            (
                CycloNum::from_coords(&field, &a),
                CycloNum::from_coords(&field, &b),
                CycloNum::from_coords(&field, &c),
            )
        })
    })
}

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-5i64..=5, 1..=max_len).prop_map(|c| IntPoly::from_i64(&c))
}

/// Denominators with constant term 1.
fn monic_den(max_len: usize) -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-3i64..=3, 0..max_len).prop_map(|mut c| {
        c.insert(0, 1);
        IntPoly::from_i64(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in cyclo_triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(&a * &inv, CycloNum::one(a.field()));
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn normalization_is_idempotent((a, b, _c) in cyclo_triple()) {
        let x = &a * &b;
        let mut y = x.clone();
        y.normalize();
        prop_assert_eq!(y.raw_parts(), x.raw_parts());
        let rebuilt = CycloNum::from_coords(x.field(), &x.coords());
        prop_assert_eq!(rebuilt.raw_parts(), x.raw_parts());
    }

    #[test]
    fn series_reconstruction(num in poly(5), den in monic_den(5), k in 0usize..20) {
        let f = RationalSeries::new(num.clone(), den.clone()).unwrap();
        let s = series_expand(&f, k).unwrap();
        for j in 0..=k {
            let conv: Rational = (0..=j)
                .map(|i| &s[i] * Rational::from_integer(den.coeff(j - i)))
                .sum();
            prop_assert_eq!(conv, Rational::from_integer(num.coeff(j)), "degree {}", j);
        }
    }

    #[test]
    fn reduction_preserves_the_function(num in poly(5), den in monic_den(4), common in monic_den(3)) {
        let f = RationalSeries::new(&num * &common, &den * &common).unwrap();
        let r = f.reduced();
        prop_assert!(r.same_function(&f));
        prop_assert!(r.den.degree() <= den.degree());
        prop_assert_eq!(r.reduced(), r.clone());
        prop_assert_eq!(series_expand(&r, 12).unwrap(), series_expand(&f, 12).unwrap());
    }

    #[test]
    fn polynomial_gcd_divides(a in poly(5), b in poly(5), c in poly(3)) {
        let g = (&a * &c).gcd(&(&b * &c));
        if !c.is_zero() && !(a.is_zero() && b.is_zero()) {
            prop_assert!((&a * &c).divexact(&g).is_ok());
            prop_assert!((&b * &c).divexact(&g).is_ok());
            prop_assert!(g.degree() >= c.degree());
        }
    }

    #[test]
    fn frobenius_reciprocity_on_combinations(
        pi in 0..64usize,
        cg in proptest::collection::vec(-2i64..=2, 13),
        cn in proptest::collection::vec(-2i64..=2, 13),
    ) {
        let pair = &pairs()[pi % pairs().len()];
        let combo = |chars: &[Character], coeffs: &[i64]| {
            chars.iter().zip(coeffs).fold(chars[0].scale(&Rational::zero()), |acc, (c, &w)| {
                acc.sum(&c.scale(&Rational::from_integer(BigInt::from(w))))
            })
        };
        let chi = combo(&pair.g_table.irreducibles, &cg);
        let phi = combo(&pair.n_table.irreducibles, &cn);
        prop_assert_eq!(
            inner_product(&pair.restrict(&chi), &phi).unwrap(),
            inner_product(&chi, &pair.induce(&phi)).unwrap()
        );
    }

    #[test]
    fn recursion_matches_binomial_and_bookkeeping(pi in 0..64usize, mi in 0..2usize, k in 0usize..40) {
        let pair = pairs()[pi % pairs().len()].clone();
        let ms = modes(&pair.spec);
        let sys = KostantSystem::build(pair, ms[mi % ms.len()]).unwrap();
        let x = sys.xk_binomial(k);
        prop_assert_eq!(&x.coords, &sys.xk_recursive_all(k)[k]);
        x.check(&sys.weights().unwrap()).unwrap();
    }
}

#[test]
fn symmetric_power_trace_recursion() {
    for pair in pairs().iter().filter(|p| p.spec.is_equal()) {
        let g = &pair.g;
        let v = fundamental_character(g);
        let p = symmetric_power_characters(g, 12);
        for k in 1..12 {
            assert_eq!(
                p[k + 1].sum(&p[k - 1]),
                v.product(&p[k]),
                "{} k = {k}",
                pair.spec
            );
        }
    }
}

#[test]
fn groups_have_the_catalogued_order() {
    for pair in pairs() {
        for (g, s) in [(&pair.g, pair.spec.ambient), (&pair.n, pair.spec.normal)] {
            assert_eq!(g.order(), s.order());
            assert_eq!(g.class_sizes().iter().sum::<usize>(), g.order());
            let t = if Arc::ptr_eq(g, &pair.g) {
                &pair.g_table
            } else {
                &pair.n_table
            };
            t.check_orthogonality().unwrap();
            assert_eq!(t.dims().iter().map(|d| d * d).sum::<usize>(), g.order());
        }
    }
}

/// Labels are left null vectors of the Cartan matrix (tensoring with `V`
/// doubles dimensions); the right null vector of the reflection matrix is
/// the null root.
#[test]
fn labels_and_null_root() {
    for pair in pairs() {
        for mode in modes(&pair.spec) {
            let sys = KostantSystem::build(pair.clone(), mode).unwrap();
            let q = &sys.quiver;
            let l = &q.kac_labels;
            assert!(
                q.cartan.transpose().mul_vec(l).iter().all(Zero::is_zero),
                "{} {mode}",
                pair.spec
            );
            if let Ok(cd) = sys.coxeter() {
                assert!(q
                    .reflection_matrix()
                    .mul_vec(&cd.delta.0)
                    .iter()
                    .all(Zero::is_zero));
                if mode != Mode::Restricted {
                    assert_eq!(&cd.delta.0, l, "{} {mode}", pair.spec);
                }
            }
        }
        if !pair.spec.is_equal() {
            let r = KostantSystem::build(pair.clone(), Mode::Restricted).unwrap();
            let i = KostantSystem::build(pair.clone(), Mode::Induced).unwrap();
            assert_eq!(r.rank(), i.rank(), "{}", pair.spec);
        }
    }
}

#[test]
fn weyl_group_structure() {
    for pair in pairs() {
        for mode in modes(&pair.spec) {
            let sys = KostantSystem::build(pair.clone(), mode).unwrap();
            let Ok(cd) = sys.coxeter() else { continue };
            let n = cd.rank();
            let id = mckay::exactnum::IntMatrix::identity(n);
            for s in &cd.reflections {
                assert_eq!(s * s, id);
            }
            for part in [&cd.parts.0, &cd.parts.1] {
                for &i in part.iter() {
                    for &j in part.iter() {
                        let (si, sj) = (&cd.reflections[i], &cd.reflections[j]);
                        assert_eq!(si * sj, sj * si, "{} {mode}: {i} {j}", pair.spec);
                    }
                }
            }
            assert_eq!(cd.c.pow(cd.h as u32), id);
            if cd.support.is_supported() {
                let a: Vec<Rational> = (1..=2 * cd.h).map(|i| cd.a_ratio(i)).collect();
                for i in 0..cd.h {
                    assert_eq!(a[i], a[i + cd.h], "{} {mode}: a_{}", pair.spec, i + 1);
                }
                let bad: Vec<String> = cd
                    .psi_chain_identities()
                    .unwrap()
                    .into_iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(name, _)| name)
                    .collect();
                assert!(bad.is_empty(), "{} {mode}: {bad:?}", pair.spec);
            }
            assert_eq!(cd.psi.add(&cd.alpha0()), cd.delta);
        }
    }
}
