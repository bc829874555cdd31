//! Documented examples for each module, checked through the public API.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use mckay::exactnum::{
    cyclo_arith, series_expand, ArithOp, CycloField, CycloNum, IntMatrix, IntPoly, Rational,
    RationalSeries,
};
use mckay::groups::{
    character_table, fundamental_character, inner_product, symmetric_power_character,
    trivial_character, FiniteSubgroup, GroupPair, PairSpec, SubgroupSpec,
};
use mckay::kostant::{closed_form_node0, molien_series, KostantSystem};
use mckay::quiver::{cubic_identity_check, detect_type, AffineType, McKayQuiver, Mode};
use mckay::rootsystem::{b_sequence, build_coxeter, RootVector};
use mckay::Error;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn rats(v: &[i64]) -> Vec<Rational> {
    v.iter()
        .map(|&x| Rational::from_integer(BigInt::from(x)))
        .collect()
}

fn group(s: &str) -> Arc<FiniteSubgroup> {
    FiniteSubgroup::generate(s.parse().unwrap()).unwrap()
}

fn pair(s: &str) -> GroupPair {
    GroupPair::build(s.parse().unwrap()).unwrap()
}

fn system(s: &str, mode: Mode) -> KostantSystem {
    KostantSystem::build(Arc::new(pair(s)), mode).unwrap()
}

fn series(num: &[i64], den: &[i64]) -> RationalSeries {
    RationalSeries::new(IntPoly::from_i64(num), IntPoly::from_i64(den)).unwrap()
}

#[test]
fn cyclotomic_examples() {
    let f4 = CycloField::new(4);
    let z4 = CycloNum::zeta_pow(&f4, 1);
    assert_eq!(
        cyclo_arith(&z4, &z4, ArithOp::Mul).unwrap(),
        CycloNum::from_int(&f4, -1)
    );

    let f5 = CycloField::new(5);
    let z = |k| CycloNum::zeta_pow(&f5, k);
    let s = &(&z(1) + &z(4)) + &(&z(2) + &z(3));
    assert_eq!(s, CycloNum::from_int(&f5, -1));

    let f8 = CycloField::new(8);
    let x = &CycloNum::one(&f8) + &CycloNum::zeta_pow(&f8, 1);
    assert_eq!(
        cyclo_arith(&x, &x, ArithOp::Div).unwrap(),
        CycloNum::one(&f8)
    );
    assert!(cyclo_arith(&x, &CycloNum::zero(&f8), ArithOp::Div).is_err());
}

#[test]
fn series_examples() {
    assert_eq!(
        series_expand(&series(&[1], &[1, -1]), 3).unwrap(),
        rats(&[1, 1, 1, 1])
    );
    assert_eq!(
        series_expand(&series(&[1, 0, 1], &[1, 0, -2, 0, 1]), 4).unwrap(),
        rats(&[1, 0, 3, 0, 5])
    );
    assert_eq!(
        series_expand(&series(&[1, -1], &[1, -1]), 2).unwrap(),
        rats(&[1, 0, 0])
    );
    assert!(RationalSeries::new(IntPoly::one(), IntPoly::from_i64(&[0, 1])).is_err());
}

#[test]
fn polynomial_examples() {
    let p = IntPoly::one_minus_t_pow(2);
    assert_eq!(&p * &p, IntPoly::from_i64(&[1, 0, -2, 0, 1]));
    assert_eq!(
        IntPoly::one_minus_t_pow(4).divexact(&p).unwrap(),
        IntPoly::from_i64(&[1, 0, 1])
    );
    assert!(IntPoly::one_minus_t_pow(3).divexact(&p).is_err());
}

#[test]
fn group_orders_and_classes() {
    let c2 = group("C2");
    assert_eq!((c2.order(), c2.num_classes()), (2, 2));
    let q8 = group("D2");
    assert_eq!((q8.order(), q8.num_classes()), (8, 5));
    let i = group("I");
    assert_eq!((i.order(), i.num_classes()), (120, 9));
}

#[test]
fn character_table_dimensions() {
    let sorted = |g: &str| {
        let mut d = character_table(&group(g)).unwrap().dims();
        d.sort();
        d
    };
    assert_eq!(sorted("C2"), vec![1, 1]);
    assert_eq!(sorted("D2"), vec![1, 1, 1, 1, 2]);
    assert_eq!(sorted("I"), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    let t = character_table(&group("I")).unwrap();
    t.check_orthogonality().unwrap();
    assert_eq!(t.dims().iter().map(|d| d * d).sum::<usize>(), 120);
}

#[test]
fn symmetric_power_examples() {
    let c2 = group("C2");
    assert_eq!(symmetric_power_character(&c2, 0), trivial_character(&c2));
    assert_eq!(
        symmetric_power_character(&c2, 1),
        fundamental_character(&c2)
    );
    let p2 = symmetric_power_character(&c2, 2);
    let f = c2.field();
    assert!(p2.values().iter().all(|v| *v == CycloNum::from_int(f, 3)));
}

#[test]
fn restriction_and_induction_examples() {
    let p = pair("C2<D2");
    let one = Rational::one();
    let triv_g = trivial_character(&p.g);
    assert_eq!(p.restrict(&triv_g), trivial_character(&p.n));

    let sign = p
        .n_table
        .irreducibles
        .iter()
        .find(|c| **c != trivial_character(&p.n))
        .unwrap()
        .clone();
    let two_dim = p
        .g_table
        .irreducibles
        .iter()
        .find(|c| c.dim() == Rational::from_integer(BigInt::from(2)))
        .unwrap();
    let two = Rational::from_integer(BigInt::from(2));
    assert_eq!(p.restrict(two_dim), sign.scale(&two));

    let ind_triv = p.induce(&trivial_character(&p.n));
    let linear = p
        .g_table
        .irreducibles
        .iter()
        .filter(|c| c.dim() == one)
        .fold(None, |acc: Option<mckay::groups::Character>, c| {
            Some(acc.map_or_else(|| c.clone(), |a| a.sum(c)))
        })
        .unwrap();
    assert_eq!(ind_triv, linear);
    assert_eq!(ind_triv.dim(), Rational::from_integer(BigInt::from(4)));
    assert_eq!(p.induce(&sign), two_dim.scale(&two));
}

#[test]
fn inner_product_examples() {
    let i = group("I");
    let v = fundamental_character(&i);
    assert_eq!(inner_product(&v, &v).unwrap(), Rational::one());
    let c4 = group("C4");
    let v = fundamental_character(&c4);
    assert_eq!(
        inner_product(&v, &v).unwrap(),
        Rational::from_integer(BigInt::from(2))
    );
    let t = trivial_character(&c4);
    assert_eq!(inner_product(&t, &t).unwrap(), Rational::one());
}

#[test]
fn type_detection_examples() {
    let a11 = IntMatrix::from_i64(&[vec![2, -2], vec![-2, 2]]);
    let (t, perm) = detect_type(&a11, &ints(&[1, 1])).unwrap();
    assert_eq!(t, AffineType::new('A', 1, 1));
    assert_eq!(perm, vec![0, 1]);

    let q = McKayQuiver::build(&pair("C2<D2"), Mode::Restricted).unwrap();
    assert_eq!(q.cartan.to_i64_rows(), vec![vec![2, -4], vec![-1, 2]]);
    assert_eq!(q.affine_type, AffineType::new('A', 2, 2));
    assert_eq!(q.affine_type.to_string(), "A2^(2)");

    let e8 = McKayQuiver::build(&pair("I"), Mode::Irreducible).unwrap();
    assert_eq!(e8.cartan.rows(), 9);
    assert_eq!(e8.affine_type, AffineType::new('E', 8, 1));

    let junk = IntMatrix::from_i64(&[vec![2, -3], vec![-3, 2]]);
    assert!(detect_type(&junk, &ints(&[1, 1])).is_err());
}

#[test]
fn cubic_identity_examples() {
    assert!(cubic_identity_check(&ints(&[1, 2, 3, 4, 5, 6, 4, 2, 3])));
    assert!(cubic_identity_check(&ints(&[1, 1])));
    assert!(!cubic_identity_check(&ints(&[1, 3])));
}

#[test]
fn odd_cycle_has_no_bipartition() {
    let q = McKayQuiver::build(&pair("C5"), Mode::Irreducible).unwrap();
    assert!(matches!(
        build_coxeter(&q.reflection_matrix()),
        Err(Error::NoBipartition)
    ));
}

#[test]
fn affine_a1_b_sequence() {
    // b(t) = (1 + t)/(1 - t)
    let cd = build_coxeter(&IntMatrix::from_i64(&[vec![2, -2], vec![-2, 2]])).unwrap();
    let a = cd.a_sequence().unwrap();
    assert_eq!(b_sequence(&a, 5).unwrap(), ints(&[1, 2, 2, 2, 2, 2]));
    assert_eq!(cd.alternating_orbit(0), RootVector::from_i64(&[1, 0]));
}

#[test]
fn kostant_vectors_of_c2() {
    let sys = system("C2", Mode::Irreducible);
    let expect = [[1, 0], [0, 2], [3, 0], [0, 4], [5, 0]];
    let rec = sys.xk_recursive_all(4);
    for (k, e) in expect.iter().enumerate() {
        assert_eq!(rec[k], RootVector::from_i64(e));
        assert_eq!(sys.xk_binomial(k).coords, rec[k]);
        assert_eq!(sys.xk_orbit(k).unwrap().coords, rec[k]);
        assert_eq!(sys.xk_character(k).unwrap().coords, rec[k]);
    }
    let b = sys.b_sequence(2).unwrap();
    assert_eq!(
        sys.xk_theorem(&b, 2).unwrap().coords,
        RootVector::from_i64(&[3, 0])
    );
    let p = sys.poincare_series(0).unwrap();
    assert!(p.same_function(&series(&[1, 0, 1], &[1, 0, -2, 0, 1])));
    assert_eq!(sys.exponents().unwrap(), (2, 2));
}

#[test]
fn restricted_first_vector_of_c2_in_quaternions() {
    let sys = system("C2<D2", Mode::Restricted);
    assert_eq!(
        sys.xk_character(0).unwrap().coords,
        RootVector::from_i64(&[1, 0])
    );
    assert_eq!(
        sys.xk_character(1).unwrap().coords,
        RootVector::from_i64(&[0, 1])
    );
    assert!(matches!(sys.xk_orbit(2), Err(Error::OrbitUnavailable(_))));
}

#[test]
fn icosahedral_invariants() {
    let sys = system("I", Mode::Irreducible);
    assert_eq!(sys.exponents().unwrap(), (12, 20));
    assert_eq!(sys.coxeter().unwrap().h, 30);
    let m = molien_series(&trivial_character(sys.node_group())).unwrap();
    assert!(m.same_function(&closed_form_node0(30, 12, 20)));
    assert!(sys
        .poincare_series(0)
        .unwrap()
        .same_function(&closed_form_node0(30, 12, 20)));
}

#[test]
fn e8_binomial_matches_recursion() {
    let sys = system("I", Mode::Irreducible);
    assert_eq!(sys.xk_binomial(5).coords, sys.xk_recursive_all(5)[5]);
}

#[test]
fn e8_prefix_sum_formula() {
    let sys = system("I", Mode::Irreducible);
    let b = sys.b_sequence(15).unwrap();
    let rec = sys.xk_recursive_all(30);
    for (k, x) in rec.iter().enumerate() {
        assert_eq!(&sys.xk_theorem(&b, k).unwrap().coords, x, "k = {k}");
    }
}

#[test]
fn pair_names_parse() {
    let p: PairSpec = "T<O".parse().unwrap();
    assert_eq!(p.normal, SubgroupSpec::BinaryTetrahedral);
    assert_eq!(p.ambient, SubgroupSpec::BinaryOctahedral);
    assert!(matches!("Q".parse::<PairSpec>(), Err(Error::BadInput(_))));
    assert!(matches!(
        "C3<D2".parse::<PairSpec>(),
        Err(Error::BadInput(_))
    ));
}
