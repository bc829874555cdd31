//! Catalog-wide verification: every checked identity becomes one row of a
//! report, per input and mode.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{IntPoly, Rational, RationalSeries};
use crate::groups::{inner_product, GroupPair, PairSpec, SubgroupSpec, MAX_NODES};
use crate::kostant::{closed_form_node0, denominator_divides, KostantSystem, KostantVector};
use crate::quiver::{
    coxeter_number_via_classes, cubic_identity_check, expected_types, find_isomorphism,
    McKayQuiver, Mode,
};
use crate::rootsystem::{a_series, OrbitSupport, RootVector};

/// How much of the catalog to cover and how deep to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            _ => Err(Error::BadInput(format!("unknown level {s:?}"))),
        }
    }
}

impl Level {
    /// Depth of the four-method comparison, in multiples of `h`.
    fn method_factor(&self) -> usize {
        match self {
            Level::Fast => 2,
            Level::Full => 3,
        }
    }

    /// Depth of the series comparison, in multiples of `h`.
    fn series_factor(&self) -> usize {
        match self {
            Level::Fast => 3,
            Level::Full => 4,
        }
    }

    fn vanishing_depth(&self) -> usize {
        match self {
            Level::Fast => 40,
            Level::Full => 60,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    /// Not applicable to this input, with the reason.
    Skipped(String),
    /// Reported without being asserted.
    Note(String),
}

impl Status {
    pub fn is_failure(&self) -> bool {
        matches!(self, Status::Fail(_))
    }

    fn label(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail(_) => "FAIL",
            Status::Skipped(_) => "SKIPPED",
            Status::Note(_) => "NOTE",
        }
    }

    fn detail(&self) -> &str {
        match self {
            Status::Pass => "",
            Status::Fail(s) | Status::Skipped(s) | Status::Note(s) => s,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            other => write!(f, "{} ({})", other.label(), other.detail()),
        }
    }
}

impl From<Result<()>> for Status {
    fn from(r: Result<()>) -> Status {
        match r {
            Ok(()) => Status::Pass,
            Err(e) => Status::Fail(e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRow {
    pub input: String,
    /// Quiver mode, or `None` for rows about the pair itself.
    pub mode: Option<Mode>,
    pub identity: &'static str,
    pub status: Status,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub rows: Vec<CheckRow>,
}

impl Report {
    pub fn passed(&self) -> bool {
        !self.rows.iter().any(|r| r.status.is_failure())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| r.status.is_failure())
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let mode = r.mode.map_or("-", |m| m.name());
            out.push_str(&format!(
                "{} {} {}: {}\n",
                r.input, mode, r.identity, r.status
            ));
        }
        let fails = self.failures().count();
        out.push_str(&format!("{} rows, {} failed\n", self.rows.len(), fails));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("input,mode,identity,status,detail\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},\"{}\"\n",
                r.input,
                r.mode.map_or("-", |m| m.name()),
                r.identity,
                r.status.label(),
                r.status.detail().replace('"', "'")
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "rows": self.rows.iter().map(|r| json!({
                "input": r.input,
                "mode": r.mode.map(|m| m.name()),
                "identity": r.identity,
                "status": r.status.label(),
                "detail": r.status.detail(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Cataloged inputs: the small parameters at [`Level::Fast`], the whole
/// supported range at [`Level::Full`].
pub fn catalog(level: Level) -> Vec<PairSpec> {
    use SubgroupSpec::*;
    let (cmax, dmax, ddmax, pmax) = match level {
        Level::Fast => (8, 5, 3, 3),
        Level::Full => (MAX_NODES, MAX_NODES - 3, MAX_NODES - 2, MAX_NODES - 1),
    };
    let mut out: Vec<PairSpec> = Vec::new();
    out.extend((2..=cmax).map(|n| PairSpec::equal(Cyclic(n))));
    out.extend((2..=dmax).map(|n| PairSpec::equal(BinaryDihedral(n))));
    for g in [BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral] {
        out.push(PairSpec::equal(g));
    }
    out.extend((2..=ddmax).map(|m| PairSpec::new(BinaryDihedral(m), BinaryDihedral(2 * m))));
    out.extend((2..=pmax).map(|n| PairSpec::new(Cyclic(2 * n), BinaryDihedral(n))));
    out.extend((1..=pmax).map(|n| PairSpec::new(Cyclic(2 * n), BinaryDihedral(2 * n))));
    out.push(PairSpec::new(BinaryTetrahedral, BinaryOctahedral));
    out.push(PairSpec::new(BinaryDihedral(2), BinaryTetrahedral));
    out
}

/// Modes with a quiver for the pair.
pub fn modes(spec: &PairSpec) -> Vec<Mode> {
    if spec.is_equal() {
        vec![Mode::Irreducible]
    } else {
        vec![Mode::Restricted, Mode::Induced]
    }
}

struct Rows<'a> {
    input: &'a str,
    mode: Option<Mode>,
    out: Vec<CheckRow>,
}

impl Rows<'_> {
    fn push(&mut self, identity: &'static str, status: impl Into<Status>) {
        self.out.push(CheckRow {
            input: self.input.to_string(),
            mode: self.mode,
            identity,
            status: status.into(),
        });
    }
}

fn check(cond: bool, detail: impl FnOnce() -> String) -> Status {
    if cond {
        Status::Pass
    } else {
        Status::Fail(detail())
    }
}

fn compare(name: &str, a: &[RootVector], b: &[RootVector]) -> Status {
    match a.iter().zip(b).position(|(x, y)| x != y) {
        None if a.len() == b.len() => Status::Pass,
        None => Status::Fail(format!("{name}: lengths {} and {}", a.len(), b.len())),
        Some(k) => Status::Fail(format!("{name} at k = {k}: {:?} vs {:?}", a[k], b[k])),
    }
}

/// Rows about the groups and both quivers of a pair.
fn pair_rows(pair: &GroupPair) -> Vec<CheckRow> {
    let name = pair.spec.name();
    let mut rows = Rows {
        input: &name,
        mode: None,
        out: Vec::new(),
    };
    let orth = pair
        .g_table
        .check_orthogonality()
        .and_then(|_| pair.n_table.check_orthogonality());
    rows.push("character-orthogonality", Status::from(orth));

    let frob = (|| -> Result<()> {
        for rho in &pair.g_table.irreducibles {
            for phi in &pair.n_table.irreducibles {
                let l = inner_product(&pair.restrict(rho), phi)?;
                let r = inner_product(rho, &pair.induce(phi))?;
                if l != r {
                    return Err(Error::violation(
                        "frobenius-reciprocity",
                        format!("{l} != {r}"),
                    ));
                }
            }
        }
        Ok(())
    })();
    rows.push("frobenius-reciprocity", Status::from(frob));

    let quivers: Vec<_> = modes(&pair.spec)
        .into_iter()
        .map(|m| McKayQuiver::build(pair, m))
        .collect();
    let Ok(quivers) = quivers.into_iter().collect::<Result<Vec<_>>>() else {
        rows.push(
            "affine-type",
            Status::Fail("quiver construction failed".into()),
        );
        return rows.out;
    };
    let (exp_r, exp_i) = expected_types(&pair.spec).expect("cataloged pair");
    let detected: Vec<_> = quivers.iter().map(|q| q.affine_type).collect();
    let expected = if pair.spec.is_equal() {
        vec![exp_r]
    } else {
        vec![exp_r, exp_i]
    };
    rows.push(
        "affine-type",
        check(detected == expected, || {
            format!("detected {detected:?}, expected {expected:?}")
        }),
    );

    // node dimensions are the labels of the detected type, times |G:N| for
    // induced nodes
    let dims = (|| -> Result<()> {
        for q in &quivers {
            let scale = if q.mode() == Mode::Induced {
                q.index
            } else {
                1
            };
            let comarks = q.affine_type.comarks();
            for (i, d) in q.nodes.dims().iter().enumerate() {
                if *d != &comarks[q.type_perm[i]] * BigInt::from(scale) {
                    return Err(Error::violation(
                        "label-dimension",
                        format!("{} node {i}: dimension {d}", q.mode()),
                    ));
                }
            }
        }
        if let [r, ind] = quivers.as_slice() {
            // dual pairs: restricted dimensions are the marks of the induced
            // type; the A_{2n}^(2) family reads the marks of its own type in
            // reverse
            let r_dims = r.nodes.dims();
            let marks = if r.affine_type.dual() == ind.affine_type {
                ind.affine_type.marks()
            } else {
                let mut m = r.affine_type.marks();
                m.reverse();
                m
            };
            let mut sorted_dims = r_dims.clone();
            sorted_dims.sort();
            let mut sorted_marks = marks.clone();
            sorted_marks.sort();
            if sorted_dims != sorted_marks {
                return Err(Error::violation(
                    "label-dimension",
                    format!("restricted dimensions {r_dims:?} vs marks {marks:?}"),
                ));
            }
        }
        Ok(())
    })();
    rows.push("label-dimension", Status::from(dims));

    if let [r, ind] = quivers.as_slice() {
        let dual = r.affine_type.dual() == ind.affine_type;
        if dual {
            let ones = vec![BigInt::one(); r.len()];
            let ok =
                find_isomorphism(&r.adjacency.transpose(), &ones, &ind.adjacency, &ones).is_some();
            rows.push(
                "dual-adjacency",
                check(ok, || {
                    "restricted adjacency transposed is not the induced adjacency".into()
                }),
            );
        } else {
            rows.push(
                "dual-adjacency",
                Status::Skipped(format!(
                    "{} and {} are not dual",
                    r.affine_type, ind.affine_type
                )),
            );
        }
    }

    let cls = coxeter_number_via_classes(pair);
    let r_type = quivers[0].affine_type;
    let target = r_type.algebra_coxeter_number();
    rows.push(
        "coxeter-number-class-sum",
        match cls {
            Ok(s) => check(s == target, || {
                format!("class sum {s}, Coxeter number of {r_type} algebra {target}")
            }),
            Err(e) => Status::Fail(e.to_string()),
        },
    );
    rows.out
}

/// Rows about one quiver.
pub fn system_rows(sys: &KostantSystem, level: Level) -> Vec<CheckRow> {
    let name = sys.pair.spec.name();
    let mut rows = Rows {
        input: &name,
        mode: Some(sys.mode()),
        out: Vec::new(),
    };
    let labels = &sys.quiver.kac_labels;
    rows.push(
        "cubic-label-identity",
        check(cubic_identity_check(labels), || {
            format!("labels {labels:?}")
        }),
    );
    let n = sys.rank();
    let weights = match sys.weights() {
        Ok(w) => w,
        Err(e) => {
            rows.push("dimension-bookkeeping", Status::Fail(e.to_string()));
            return rows.out;
        }
    };
    let cd = match sys.coxeter() {
        Ok(cd) => Some(cd),
        Err(Error::NoBipartition) => {
            rows.push(
                "bipartition",
                Status::Skipped("odd cycle, no bipartition".into()),
            );
            None
        }
        Err(e) => {
            rows.push("bipartition", Status::Fail(e.to_string()));
            return rows.out;
        }
    };
    if cd.is_some() {
        rows.push("bipartition", Status::Pass);
    }
    let h = cd.map_or(n, |c| c.h);
    let kmax = level.series_factor() * h;
    let kmeth = level.method_factor() * h;
    let character = match sys.xk_character_all(kmax.max(level.vanishing_depth())) {
        Ok(x) => x,
        Err(e) => {
            rows.push("recursion-vs-character", Status::Fail(e.to_string()));
            return rows.out;
        }
    };
    let book = (|| -> Result<()> {
        for (k, x) in character.iter().enumerate() {
            KostantVector {
                k,
                coords: x.clone(),
            }
            .check(&weights)?;
        }
        Ok(())
    })();
    rows.push("dimension-bookkeeping", Status::from(book));
    let rec = sys.xk_recursive_all(kmax);
    rows.push(
        "recursion-vs-character",
        compare("recursion", &rec, &character[..=kmax]),
    );
    let bin: Vec<RootVector> = (0..=kmeth).map(|k| sys.xk_binomial(k).coords).collect();
    rows.push(
        "binomial-vs-character",
        compare("binomial", &bin, &character[..=kmeth]),
    );

    let molien = sys.molien_components();
    let total = molien
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|_| sys.molien_total());
    let inv_sq = RationalSeries::new(IntPoly::one(), {
        let p = IntPoly::one_minus_t_pow(1);
        &p * &p
    })
    .expect("constant term 1");
    rows.push(
        "molien-total",
        match &total {
            Ok(t) => check(t.same_function(&inv_sq), || {
                "weighted sum differs from 1/(1-t)^2".into()
            }),
            Err(e) => Status::Fail(e.to_string()),
        },
    );
    rows.push(
        "molien-vs-character",
        match &molien {
            Ok(comps) => (|| -> Status {
                for (i, c) in comps.iter().enumerate() {
                    let s = match c.expand(kmax) {
                        Ok(s) => s,
                        Err(e) => return Status::Fail(e.to_string()),
                    };
                    for (k, x) in character[..=kmax].iter().enumerate() {
                        if s[k] != Rational::from_integer(x.0[i].clone()) {
                            return Status::Fail(format!(
                                "k = {k}, node {i}: Molien {} vs {}",
                                s[k], x.0[i]
                            ));
                        }
                    }
                }
                Status::Pass
            })(),
            Err(e) => Status::Fail(e.to_string()),
        },
    );

    let Some(cd) = cd else {
        return rows.out;
    };

    // parity vanishing holds for every bipartite diagram
    let (p1, p2) = (&cd.parts.0, &cd.parts.1);
    let vanish = (|| -> Status {
        for (k, x) in character
            .iter()
            .enumerate()
            .take(level.vanishing_depth() + 1)
        {
            let zero_part = if k % 2 == 0 { p1 } else { p2 };
            if let Some(&i) = zero_part.iter().find(|&&i| !x.0[i].is_zero()) {
                return Status::Fail(format!("k = {k}: node {i} has multiplicity {}", x.0[i]));
            }
        }
        Status::Pass
    })();
    rows.push("parity-vanishing", vanish);

    match sys.exponent_pair() {
        Ok((a, b)) => {
            rows.push(
                "node0-closed-form",
                match &molien {
                    Ok(comps) => check(comps[0].same_function(&closed_form_node0(h, a, b)), || {
                        format!("node 0 differs from (1 + t^{h})/((1 - t^{a})(1 - t^{b}))")
                    }),
                    Err(e) => Status::Fail(e.to_string()),
                },
            );
        }
        Err(e) => rows.push("node0-closed-form", Status::Fail(e.to_string())),
    }

    if !cd.support.is_supported() {
        let why = match &cd.support {
            OrbitSupport::Unsupported(w) => w.join("; "),
            _ => unreachable!(),
        };
        rows.push("orbit-support", Status::Skipped(why.clone()));
        for id in [
            "orbit-sum",
            "prefix-sum-formula",
            "affine-coxeter-orbit",
            "a-sequence-antiperiodicity",
            "b-sequence-inverse",
            "exponents",
            "closed-form-generating-function",
            "poincare-series",
            "z-polynomial-structure",
            "coxeter-psi-chain",
            "coefficient-palindromy",
        ] {
            rows.push(
                id,
                Status::Skipped("orbit machinery unavailable for this type".into()),
            );
        }
        // whether the Molien series still fit the product denominator
        if let (Ok((a, b)), Ok(comps)) = (sys.exponent_pair(), &molien) {
            let den = &IntPoly::one_minus_t_pow(a) * &IntPoly::one_minus_t_pow(b);
            let fits = comps.iter().all(|c| denominator_divides(c, &den));
            rows.push(
                "denominator-form",
                Status::Note(format!(
                    "(1 - t^{a})(1 - t^{b}) {} a common denominator",
                    if fits { "is" } else { "is not" }
                )),
            );
        }
        return rows.out;
    }
    rows.push("orbit-support", Status::Pass);

    let orbit = (0..=kmeth)
        .map(|k| sys.xk_orbit(k).map(|x| x.coords))
        .collect::<Result<Vec<_>>>();
    rows.push(
        "orbit-sum",
        match orbit {
            Ok(o) => compare("orbit", &o, &character[..=kmeth]),
            Err(e) => Status::Fail(e.to_string()),
        },
    );
    let b = sys.b_sequence(4 * h);
    let b = match b {
        Ok(b) => b,
        Err(e) => {
            rows.push("b-sequence-inverse", Status::Fail(e.to_string()));
            return rows.out;
        }
    };
    let theorem = (0..=kmeth)
        .map(|k| sys.xk_theorem(&b, k).map(|x| x.coords))
        .collect::<Result<Vec<_>>>();
    rows.push(
        "prefix-sum-formula",
        match theorem {
            Ok(t) => compare("prefix sums", &t, &character[..=kmeth]),
            Err(e) => Status::Fail(e.to_string()),
        },
    );
    rows.push(
        "affine-coxeter-orbit",
        Status::from(cd.affine_orbit_identities(&b, 2 * h)),
    );

    let a = cd.a_sequence();
    rows.push(
        "a-sequence-antiperiodicity",
        match &a {
            Ok(a) => {
                let g = cd.g.unwrap();
                let ext = a_series(a, h + g);
                check(
                    ext[g] == BigInt::from(-2) && (1..g).all(|i| (&ext[i] + &ext[i + g]).is_zero()),
                    || format!("a = {a:?}"),
                )
            }
            Err(e) => Status::Fail(e.to_string()),
        },
    );
    rows.push(
        "b-sequence-inverse",
        match &a {
            Ok(a) => {
                let ext = a_series(a, 4 * h);
                let ok = (0..=4 * h).all(|s| {
                    let c: BigInt = (0..=s).map(|j| &ext[j] * &b[s - j]).sum();
                    c == if s == 0 {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                });
                check(ok, || "a(t) b(t) != 1".into())
            }
            Err(e) => Status::Fail(e.to_string()),
        },
    );
    rows.push("exponents", Status::from(sys.exponents().map(|_| ())));

    let gf = sys.generating_function();
    rows.push(
        "closed-form-generating-function",
        match &gf {
            Ok(gf) => match gf.expand(kmax) {
                Ok(s) => compare("closed form", &s, &character[..=kmax]),
                Err(e) => Status::Fail(e.to_string()),
            },
            Err(e) => Status::Fail(e.to_string()),
        },
    );
    rows.push(
        "poincare-series",
        match (&gf, &molien) {
            (Ok(gf), Ok(m)) => check(
                gf.components.iter().zip(m).all(|(x, y)| x.same_function(y)),
                || "closed form differs from the Molien series".into(),
            ),
            (Err(e), _) | (_, Err(e)) => Status::Fail(e.to_string()),
        },
    );

    let z = cd.z_polynomial();
    rows.push(
        "z-polynomial-structure",
        match &z {
            Ok(z) => {
                let g = cd.g.unwrap();
                let sums: Vec<BigInt> = (0..n).map(|i| z.iter().map(|v| &v.0[i]).sum()).collect();
                let two_delta = cd.delta.scale(&BigInt::from(2)).0;
                let star = cd.i_star().ok().flatten();
                check(
                    (0..=h).all(|k| z[k] == z[h - k]) && star.is_some() && sums == two_delta,
                    || format!("z_g = {:?}, coefficient sums {sums:?}", z[g]),
                )
            }
            Err(e) => Status::Fail(e.to_string()),
        },
    );
    rows.push(
        "coxeter-psi-chain",
        match cd.psi_chain_identities() {
            Ok(ids) => {
                let bad: Vec<String> = ids
                    .into_iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(n, _)| n)
                    .collect();
                check(bad.is_empty(), || bad.join("; "))
            }
            Err(e) => Status::Fail(e.to_string()),
        },
    );
    rows.push(
        "coefficient-palindromy",
        match (gf.as_ref().map_err(Clone::clone), cd.i_star()) {
            (Ok(gf), Ok(Some(star))) => {
                let g = cd.g.unwrap();
                let ok = (0..n).all(|i| {
                    let num = gf.numerator(i);
                    let c = |j: usize| num.coeff(j);
                    (0..=g).all(|k| c(g + k) == c(g - k)) && (i == star || c(g).is_zero())
                });
                check(ok, || "numerator not palindromic about t^g".into())
            }
            (Err(e), _) | (_, Err(e)) => Status::Fail(e.to_string()),
            (_, Ok(None)) => Status::Fail("no node i* with z_g = 2 alpha_(i*)".into()),
        },
    );
    rows.out
}

/// All rows for one cataloged pair.
pub fn verify_pair(spec: PairSpec, level: Level) -> Vec<CheckRow> {
    let name = spec.name();
    let pair = match GroupPair::build(spec) {
        Ok(p) => Arc::new(p),
        Err(e) => {
            return vec![CheckRow {
                input: name,
                mode: None,
                identity: "group-construction",
                status: Status::Fail(e.to_string()),
            }]
        }
    };
    let mut out = pair_rows(&pair);
    for mode in modes(&spec) {
        match KostantSystem::build(pair.clone(), mode) {
            Ok(sys) => out.extend(system_rows(&sys, level)),
            Err(e) => out.push(CheckRow {
                input: name.clone(),
                mode: Some(mode),
                identity: "quiver-construction",
                status: Status::Fail(e.to_string()),
            }),
        }
    }
    out
}

/// Rows for the given inputs, or for the catalog of `level` when empty.
/// Inputs are checked concurrently; rows keep the input order.
pub fn verify(inputs: &[PairSpec], level: Level, mode: Option<Mode>) -> Report {
    let inputs = if inputs.is_empty() {
        catalog(level)
    } else {
        inputs.to_vec()
    };
    let rows: Vec<Vec<CheckRow>> = inputs
        .par_iter()
        .map(|&spec| verify_pair(spec, level))
        .collect();
    Report {
        rows: rows
            .into_iter()
            .flatten()
            .filter(|r| mode.is_none() || r.mode.is_none() || r.mode == mode)
            .collect(),
    }
}
