use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::subgroup::FiniteSubgroup;
use crate::error::{Error, Result};
use crate::exactnum::{rational_to_integer, CycloNum, Rational};

/// Class function on a finite subgroup, one value per conjugacy class.
#[derive(Clone)]
pub struct Character {
    group: Arc<FiniteSubgroup>,
    values: Vec<CycloNum>,
}

impl Character {
    pub fn new(group: &Arc<FiniteSubgroup>, values: Vec<CycloNum>) -> Self {
        assert_eq!(values.len(), group.num_classes());
        Character {
            group: group.clone(),
            values,
        }
    }

    pub fn group(&self) -> &Arc<FiniteSubgroup> {
        &self.group
    }

    pub fn values(&self) -> &[CycloNum] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycloNum {
        &self.values[class]
    }

    /// Value at the identity.
    pub fn dim(&self) -> Rational {
        self.values[0]
            .to_rational()
            .expect("character value at the identity is rational")
    }

    /// Value at the identity as an integer, if it is one.
    pub fn dim_integer(&self) -> Option<BigInt> {
        rational_to_integer(&self.dim())
    }

    pub fn same_group(&self, o: &Character) -> bool {
        Arc::ptr_eq(&self.group, &o.group)
    }

    fn zip_with(&self, o: &Character, f: impl Fn(&CycloNum, &CycloNum) -> CycloNum) -> Character {
        assert!(self.same_group(o), "characters of different groups");
        Character {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn product(&self, o: &Character) -> Character {
        self.zip_with(o, |a, b| a * b)
    }

    pub fn sum(&self, o: &Character) -> Character {
        self.zip_with(o, |a, b| a + b)
    }

    pub fn difference(&self, o: &Character) -> Character {
        self.zip_with(o, |a, b| a - b)
    }

    pub fn scale(&self, r: &Rational) -> Character {
        Character {
            group: self.group.clone(),
            values: self.values.iter().map(|a| a.scale_rational(r)).collect(),
        }
    }

    pub fn conj(&self) -> Character {
        Character {
            group: self.group.clone(),
            values: self.values.iter().map(CycloNum::conj).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycloNum::is_zero)
    }
}

impl PartialEq for Character {
    fn eq(&self, o: &Character) -> bool {
        self.same_group(o) && self.values == o.values
    }
}

impl Eq for Character {}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character{:?}", self.values)
    }
}

/// `(1/|G|) sum_g a(g) conj(b(g))`, summed per class.
pub fn inner_product(a: &Character, b: &Character) -> Result<Rational> {
    if !a.same_group(b) {
        return Err(Error::Internal(
            "inner product of characters of different groups".into(),
        ));
    }
    let g = a.group();
    let field = g.field();
    let mut acc = CycloNum::zero(field);
    for (c, size) in g.class_sizes().into_iter().enumerate() {
        let t = &a.values[c] * &b.values[c].conj();
        acc = &acc + &t.scale_int(&BigInt::from(size));
    }
    let r = acc
        .to_rational()
        .ok_or_else(|| Error::Internal("inner product is not rational".into()))?;
    Ok(r / Rational::from_integer(BigInt::from(g.order())))
}

pub fn trivial_character(g: &Arc<FiniteSubgroup>) -> Character {
    Character::new(g, vec![CycloNum::one(g.field()); g.num_classes()])
}

/// Character of the natural two-dimensional module: the trace.
pub fn fundamental_character(g: &Arc<FiniteSubgroup>) -> Character {
    Character::new(g, g.class_traces())
}

/// Characters of `S^0(V), ..., S^K(V)` by `p_{k+1} = chi_V p_k - p_{k-1}`.
pub fn symmetric_power_characters(g: &Arc<FiniteSubgroup>, max_k: usize) -> Vec<Character> {
    let v = fundamental_character(g);
    let mut out = vec![trivial_character(g)];
    if max_k >= 1 {
        out.push(v.clone());
    }
    for k in 1..max_k {
        let next = v.product(&out[k]).difference(&out[k - 1]);
        out.push(next);
    }
    out
}

pub fn symmetric_power_character(g: &Arc<FiniteSubgroup>, k: usize) -> Character {
    symmetric_power_characters(g, k).pop().unwrap()
}

/// Irreducible characters of a group together with its class sizes.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub irreducibles: Vec<Character>,
    pub class_sizes: Vec<usize>,
}

impl CharacterTable {
    pub fn dims(&self) -> Vec<usize> {
        self.irreducibles
            .iter()
            .map(|c| {
                let d = c.dim_integer().expect("integer dimension");
                usize::try_from(d).expect("small dimension")
            })
            .collect()
    }

    /// Multiplicities of the irreducibles in `chi`.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<Rational>> {
        self.irreducibles
            .iter()
            .map(|x| inner_product(chi, x))
            .collect()
    }

    /// Checks the row and column orthogonality relations and the sum of
    /// squared dimensions.
    pub fn check_orthogonality(&self) -> Result<()> {
        let r = self.irreducibles.len();
        let Some(first) = self.irreducibles.first() else {
            return Err(Error::Orthogonality("empty table".into()));
        };
        let g = first.group().clone();
        if r != g.num_classes() {
            return Err(Error::Orthogonality(format!(
                "{r} irreducibles for {} classes",
                g.num_classes()
            )));
        }
        for a in 0..r {
            for b in 0..r {
                let ip = inner_product(&self.irreducibles[a], &self.irreducibles[b])?;
                let want = if a == b { 1 } else { 0 };
                if ip != Rational::from_integer(BigInt::from(want)) {
                    return Err(Error::Orthogonality(format!("<chi{a}, chi{b}> = {ip}")));
                }
            }
        }
        let field = g.field();
        for i in 0..r {
            for j in 0..r {
                let mut s = CycloNum::zero(field);
                for x in &self.irreducibles {
                    s = &s + &(x.value(i) * &x.value(j).conj());
                }
                let want = if i == j {
                    CycloNum::from_int(field, (g.order() / self.class_sizes[i]) as i64)
                } else {
                    CycloNum::zero(field)
                };
                if s != want {
                    return Err(Error::Orthogonality(format!("columns {i}, {j}")));
                }
            }
        }
        let sq: BigInt = self
            .irreducibles
            .iter()
            .map(|x| {
                let d = x.dim_integer().unwrap_or_else(BigInt::zero);
                &d * &d
            })
            .sum();
        if sq != BigInt::from(g.order()) {
            return Err(Error::Orthogonality(format!(
                "sum of squared dimensions {sq}"
            )));
        }
        Ok(())
    }
}
