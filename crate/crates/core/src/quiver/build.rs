use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::affine::{detect_type, AffineType};
use crate::error::{Error, Result};
use crate::exactnum::{rational_to_integer, solve_rational, IntMatrix, Rational};
use crate::groups::{fundamental_character, inner_product, Character, GroupPair};

/// Which modules form the nodes of a quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Irreducible modules of `G` (requires `N = G`).
    Irreducible,
    /// Distinct restrictions to `N` of the irreducible modules of `G`.
    Restricted,
    /// Distinct inductions to `G` of the irreducible modules of `N`.
    Induced,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Irreducible => "irreducible",
            Mode::Restricted => "restricted",
            Mode::Induced => "induced",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "irreducible" => Ok(Mode::Irreducible),
            "restricted" => Ok(Mode::Restricted),
            "induced" => Ok(Mode::Induced),
            _ => Err(Error::BadInput(format!("unknown mode {s:?}"))),
        }
    }
}

/// The node modules of a quiver, as characters of `N` (restricted) or of
/// `G` (irreducible, induced). Node 0 contains or is induced from the
/// trivial module.
#[derive(Clone, Debug)]
pub struct NodeSet {
    pub mode: Mode,
    pub chars: Vec<Character>,
    pub trivial_index: usize,
}

impl NodeSet {
    pub fn build(pair: &GroupPair, mode: Mode) -> Result<NodeSet> {
        let raw: Vec<Character> = match mode {
            Mode::Irreducible => {
                if !pair.spec.is_equal() {
                    return Err(Error::BadInput(
                        "irreducible mode requires a single group".into(),
                    ));
                }
                pair.g_table.irreducibles.clone()
            }
            Mode::Restricted => pair
                .g_table
                .irreducibles
                .iter()
                .map(|c| pair.restrict(c))
                .collect(),
            Mode::Induced => pair
                .n_table
                .irreducibles
                .iter()
                .map(|c| pair.induce(c))
                .collect(),
        };
        // the trivial module comes first in both tables, so raw[0] is the
        // node of the trivial module
        let mut chars: Vec<Character> = Vec::new();
        for c in raw {
            if !chars.contains(&c) {
                chars.push(c);
            }
        }
        let first = chars.remove(0);
        chars.sort_by(|a, b| crate::groups::char_sort_key(a).cmp(&crate::groups::char_sort_key(b)));
        chars.insert(0, first);
        Ok(NodeSet {
            mode,
            chars,
            trivial_index: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn dims(&self) -> Vec<BigInt> {
        self.chars
            .iter()
            .map(|c| c.dim_integer().expect("module dimensions are integers"))
            .collect()
    }

    /// Coefficients of `chi` in the node characters, by an exact linear
    /// solve over the rational coordinates of the character values.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<Rational>> {
        let n = self.chars.len();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        for c in 0..chi.values().len() {
            let target = chi.value(c).coords();
            let cols: Vec<Vec<Rational>> = self.chars.iter().map(|x| x.value(c).coords()).collect();
            for t in 0..target.len() {
                rows.push((0..n).map(|i| cols[i][t].clone()).collect());
                rhs.push(target[t].clone());
            }
        }
        solve_rational(&rows, &rhs)
            .ok_or_else(|| Error::NonIntegral("class function outside the node span".into()))
    }

    /// Like [`NodeSet::decompose`] but requires nonnegative integers.
    pub fn decompose_integral(&self, chi: &Character) -> Result<Vec<BigInt>> {
        self.decompose(chi)?
            .iter()
            .map(|r| match rational_to_integer(r) {
                Some(x) if !x.is_negative() => Ok(x),
                _ => Err(Error::NonIntegral(format!("coefficient {r}"))),
            })
            .collect()
    }
}

/// McKay quiver of a pair in one mode.
#[derive(Clone, Debug)]
pub struct McKayQuiver {
    pub nodes: NodeSet,
    /// `adjacency[j][i]` is the multiplicity of node `i` in `V (x) node j`.
    pub adjacency: IntMatrix,
    /// `2I - adjacency^T`.
    pub cartan: IntMatrix,
    pub kac_labels: Vec<BigInt>,
    pub affine_type: AffineType,
    /// Node `i` is node `type_perm[i]` of the catalog diagram.
    pub type_perm: Vec<usize>,
    pub index: usize,
}

impl McKayQuiver {
    pub fn build(pair: &GroupPair, mode: Mode) -> Result<McKayQuiver> {
        let nodes = NodeSet::build(pair, mode)?;
        let n = nodes.len();
        let v = fundamental_character(nodes.chars[0].group());
        let mut adjacency = IntMatrix::zeros(n, n);
        for j in 0..n {
            let row = nodes.decompose_integral(&v.product(&nodes.chars[j]))?;
            for (i, x) in row.into_iter().enumerate() {
                adjacency[(j, i)] = x;
            }
        }
        for i in 0..n {
            if !adjacency[(i, i)].is_zero() {
                return Err(Error::violation(
                    "adjacency",
                    format!("self-loop at node {i}"),
                ));
            }
        }
        let cartan = IntMatrix::identity(n)
            .scale(&BigInt::from(2))
            .sub(&adjacency.transpose());
        let index = pair.index();
        let dims = nodes.dims();
        let kac_labels: Vec<BigInt> = match mode {
            Mode::Irreducible | Mode::Restricted => dims,
            Mode::Induced => dims
                .iter()
                .map(|d| {
                    if (d % index).is_zero() {
                        Ok(d / index)
                    } else {
                        Err(Error::violation(
                            "induced dimension divisible by the index",
                            format!("dimension {d}, index {index}"),
                        ))
                    }
                })
                .collect::<Result<_>>()?,
        };
        if !cartan
            .transpose()
            .mul_vec(&kac_labels)
            .iter()
            .all(Zero::is_zero)
        {
            return Err(Error::violation(
                "labels annihilate the transposed Cartan matrix",
                format!("{mode} quiver of {}", pair.spec),
            ));
        }
        let (affine_type, type_perm) = detect_type(&cartan, &kac_labels)?;
        Ok(McKayQuiver {
            nodes,
            adjacency,
            cartan,
            kac_labels,
            affine_type,
            type_perm,
            index,
        })
    }

    pub fn mode(&self) -> Mode {
        self.nodes.mode
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Matrix whose simple reflections drive the root-system machinery:
    /// the Cartan matrix for irreducible and restricted quivers, its
    /// transpose for induced quivers.
    pub fn reflection_matrix(&self) -> IntMatrix {
        match self.mode() {
            Mode::Induced => self.cartan.transpose(),
            _ => self.cartan.clone(),
        }
    }

    /// Matrix `X` with `x_{k+1} = X x_k - x_{k-1}` on Kostant vectors:
    /// `2I` minus the reflection matrix.
    pub fn transfer_matrix(&self) -> IntMatrix {
        IntMatrix::identity(self.len())
            .scale(&BigInt::from(2))
            .sub(&self.reflection_matrix())
    }

    /// Weights `w` with `sum_i w_i (x_k)_i = k + 1`: node dimensions for
    /// irreducible and restricted quivers, and for induced quivers the
    /// dimension of the restriction of the node module divided by its
    /// multiplicity-free part, i.e. `dim Ind phi / <Ind phi, Ind phi>`.
    pub fn node_weights(&self) -> Result<Vec<BigInt>> {
        match self.mode() {
            Mode::Induced => self
                .nodes
                .chars
                .iter()
                .map(|c| {
                    let norm = inner_product(c, c)?;
                    let w = c.dim() / norm;
                    rational_to_integer(&w)
                        .ok_or_else(|| Error::Internal("non-integral node weight".into()))
                })
                .collect(),
            _ => Ok(self.nodes.dims()),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mode": self.mode().name(),
            "nodes": self.nodes.dims().iter().map(|d| json!({
                "dim": i64::try_from(d).expect("dimension exceeds i64"),
                "mode": self.mode().name(),
            })).collect::<Vec<_>>(),
            "adjacency": self.adjacency.to_i64_rows(),
            "cartan": self.cartan.to_i64_rows(),
            "labels": self.kac_labels.iter().map(|d| i64::try_from(d).expect("label exceeds i64")).collect::<Vec<_>>(),
            "type": self.affine_type.to_string(),
            "alpha0": self.nodes.trivial_index,
            "canonical_permutation": self.type_perm,
            "canonical_cartan": self.cartan.permuted(&self.type_perm).to_i64_rows(),
        })
    }
}

/// `d^2 sum d_i - 3 d sum d_i^2 + 2 sum d_i^3 = 0` with `d` the largest label.
pub fn cubic_identity_check(labels: &[BigInt]) -> bool {
    let Some(d) = labels.iter().max() else {
        return false;
    };
    let s1: BigInt = labels.iter().sum();
    let s2: BigInt = labels.iter().map(|x| x * x).sum();
    let s3: BigInt = labels.iter().map(|x| x * x * x).sum();
    (d * d * s1 - BigInt::from(3) * d * s2 + BigInt::from(2) * s3).is_zero()
}

/// Sum of the dimensions of the restricted modules, one for each class of
/// `G` contained in `N`. Fails if the number of such classes differs from
/// the number of restricted modules.
pub fn coxeter_number_via_classes(pair: &GroupPair) -> Result<usize> {
    let nodes = NodeSet::build(
        pair,
        if pair.spec.is_equal() {
            Mode::Irreducible
        } else {
            Mode::Restricted
        },
    )?;
    let classes = pair.g_classes_in_n().len();
    if classes != nodes.len() {
        return Err(Error::violation(
            "classes of G inside N match restricted modules",
            format!("{classes} classes, {} modules", nodes.len()),
        ));
    }
    let s: BigInt = nodes.dims().iter().sum();
    Ok(usize::try_from(s).expect("small sum"))
}
