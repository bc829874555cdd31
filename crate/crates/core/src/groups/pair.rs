use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;

use super::character::{Character, CharacterTable};
use super::chartab::character_table;
use super::spec::SubgroupSpec;
use super::subgroup::FiniteSubgroup;
use crate::error::{Error, Result};
use crate::exactnum::{CycloNum, Rational};

/// Largest number of quiver nodes supported end to end.
pub const MAX_NODES: usize = 13;

/// The cataloged families of normal pairs `N < G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairFamily {
    /// `N = G`.
    Equal,
    /// `D_{n-1} < D_{2(n-1)}`, `n >= 3`.
    DihedralInDihedral,
    /// `C_{2n} < D_n`, `n >= 2`.
    CyclicInDihedral,
    /// `C_{2n} < D_{2n}`, `n >= 1`.
    CyclicInDihedralDouble,
    /// `T < O`.
    TetrahedralInOctahedral,
    /// `D_2 < T`.
    QuaternionInTetrahedral,
}

/// A normal pair `N < G` from the catalog; `N = G` is allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairSpec {
    pub normal: SubgroupSpec,
    pub ambient: SubgroupSpec,
}

impl PairSpec {
    pub fn equal(g: SubgroupSpec) -> Self {
        PairSpec {
            normal: g,
            ambient: g,
        }
    }

    pub fn new(normal: SubgroupSpec, ambient: SubgroupSpec) -> Self {
        PairSpec { normal, ambient }
    }

    pub fn is_equal(&self) -> bool {
        self.normal == self.ambient
    }

    pub fn index(&self) -> usize {
        self.ambient.order() / self.normal.order()
    }

    /// Family of the pair, or an error if it is not in the catalog.
    pub fn family(&self) -> Result<PairFamily> {
        use SubgroupSpec::*;
        let bad = |why: &str| Err(Error::BadInput(format!("pair {self} {why}")));
        match (self.normal, self.ambient) {
            (n, g) if n == g => match g {
                Cyclic(k) if (2..=MAX_NODES).contains(&k) => Ok(PairFamily::Equal),
                BinaryDihedral(k) if (2..=MAX_NODES - 3).contains(&k) => Ok(PairFamily::Equal),
                BinaryTetrahedral | BinaryOctahedral | BinaryIcosahedral => Ok(PairFamily::Equal),
                _ => bad("is outside the supported parameter range"),
            },
            (BinaryDihedral(m), BinaryDihedral(k)) if k == 2 * m => {
                // m + 2 nodes
                if (2..MAX_NODES - 1).contains(&m) {
                    Ok(PairFamily::DihedralInDihedral)
                } else {
                    bad("is outside the supported parameter range")
                }
            }
            (Cyclic(c), BinaryDihedral(k)) if c == 2 * k => {
                if (2..MAX_NODES).contains(&k) {
                    Ok(PairFamily::CyclicInDihedral)
                } else {
                    bad("is outside the supported parameter range")
                }
            }
            (Cyclic(c), BinaryDihedral(k)) if c == k && k % 2 == 0 => {
                if (1..MAX_NODES).contains(&(k / 2)) {
                    Ok(PairFamily::CyclicInDihedralDouble)
                } else {
                    bad("is outside the supported parameter range")
                }
            }
            (BinaryTetrahedral, BinaryOctahedral) => Ok(PairFamily::TetrahedralInOctahedral),
            (BinaryDihedral(2), BinaryTetrahedral) => Ok(PairFamily::QuaternionInTetrahedral),
            _ => bad("is not a cataloged normal pair"),
        }
    }

    /// Pair name as accepted by [`FromStr`]: `"T<O"`, or `"I"` when `N = G`.
    pub fn name(&self) -> String {
        if self.is_equal() {
            self.ambient.name()
        } else {
            format!("{}<{}", self.normal, self.ambient)
        }
    }
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for PairSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let p = match s.split_once('<') {
            Some((n, g)) => PairSpec::new(n.parse()?, g.parse()?),
            None => PairSpec::equal(s.parse()?),
        };
        p.family()?;
        Ok(p)
    }
}

/// A cataloged pair with both groups, their character tables and the
/// embedding of `N` into `G`.
///
/// `N` is generated inside the field of `G`; for `N = G` both sides share
/// one group.
#[derive(Debug)]
pub struct GroupPair {
    pub spec: PairSpec,
    pub family: PairFamily,
    pub g: Arc<FiniteSubgroup>,
    pub n: Arc<FiniteSubgroup>,
    pub g_table: CharacterTable,
    pub n_table: CharacterTable,
    embedding: Vec<usize>,
    g_to_n: Vec<Option<usize>>,
    class_map: Vec<usize>,
}

impl GroupPair {
    pub fn build(spec: PairSpec) -> Result<GroupPair> {
        let family = spec.family()?;
        let g = FiniteSubgroup::generate(spec.ambient)?;
        let g_table = character_table(&g)?;
        let (n, n_table) = if spec.is_equal() {
            (g.clone(), g_table.clone())
        } else {
            let n = FiniteSubgroup::generate_in(spec.normal, g.field())?;
            let t = character_table(&n)?;
            (n, t)
        };
        let embedding: Vec<usize> = n
            .elements()
            .iter()
            .map(|x| g.find(x).ok_or(Error::ElementNotFound))
            .collect::<Result<_>>()?;
        let mut g_to_n = vec![None; g.order()];
        for (i, &j) in embedding.iter().enumerate() {
            g_to_n[j] = Some(i);
        }
        for x in 0..g.order() {
            for &y in &embedding {
                let c = g.mul(g.mul(x, y), g.inverse(x));
                if g_to_n[c].is_none() {
                    return Err(Error::NotNormal);
                }
            }
        }
        let class_map = (0..n.num_classes())
            .map(|c| g.class_of(embedding[n.representative(c)]))
            .collect();
        Ok(GroupPair {
            spec,
            family,
            g,
            n,
            g_table,
            n_table,
            embedding,
            g_to_n,
            class_map,
        })
    }

    pub fn index(&self) -> usize {
        self.g.order() / self.n.order()
    }

    /// Index in `G` of each element of `N`.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    /// `G`-class containing each `N`-class.
    pub fn class_map(&self) -> &[usize] {
        &self.class_map
    }

    /// `G`-classes contained in `N`.
    pub fn g_classes_in_n(&self) -> Vec<usize> {
        (0..self.g.num_classes())
            .filter(|&c| self.g_to_n[self.g.representative(c)].is_some())
            .collect()
    }

    pub fn restrict(&self, chi: &Character) -> Character {
        assert!(
            Arc::ptr_eq(chi.group(), &self.g),
            "character of the wrong group"
        );
        Character::new(
            &self.n,
            self.class_map
                .iter()
                .map(|&c| chi.value(c).clone())
                .collect(),
        )
    }

    /// Frobenius formula `Ind phi(x) = (1/|N|) sum_{y in G} phi(y x y^-1)`
    /// with `phi` extended by zero outside `N`.
    pub fn induce(&self, phi: &Character) -> Character {
        assert!(
            Arc::ptr_eq(phi.group(), &self.n),
            "character of the wrong group"
        );
        let field = self.g.field();
        let inv_n = Rational::new(BigInt::from(1), BigInt::from(self.n.order()));
        let values = (0..self.g.num_classes())
            .map(|c| {
                let x = self.g.representative(c);
                let mut counts = vec![0i64; self.n.num_classes()];
                for y in 0..self.g.order() {
                    let conj = self.g.mul(self.g.mul(y, x), self.g.inverse(y));
                    if let Some(i) = self.g_to_n[conj] {
                        counts[self.n.class_of(i)] += 1;
                    }
                }
                let mut acc = CycloNum::zero(field);
                for (k, &cnt) in counts.iter().enumerate() {
                    if cnt != 0 {
                        acc = &acc + &phi.value(k).scale_int(&BigInt::from(cnt));
                    }
                }
                acc.scale_rational(&inv_n)
            })
            .collect();
        Character::new(&self.g, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_pairs() {
        let p: PairSpec = "C2<D2".parse().unwrap();
        assert_eq!(p.family().unwrap(), PairFamily::CyclicInDihedralDouble);
        assert_eq!(p.index(), 4);
        assert_eq!("T<O".parse::<PairSpec>().unwrap().index(), 2);
        assert_eq!(
            "D3<D6".parse::<PairSpec>().unwrap().family().unwrap(),
            PairFamily::DihedralInDihedral
        );
        assert_eq!(
            "C6<D3".parse::<PairSpec>().unwrap().family().unwrap(),
            PairFamily::CyclicInDihedral
        );
        assert!("I".parse::<PairSpec>().unwrap().is_equal());
        assert!("D11<D22".parse::<PairSpec>().is_ok());
        for bad in [
            "C2<T", "C3<D2", "O<T", "C1", "D1", "C4<D1", "I<I<I", "Q", "D12<D24",
        ] {
            assert!(bad.parse::<PairSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn class_map_respects_embedding() {
        let p = GroupPair::build("D2<T".parse().unwrap()).unwrap();
        assert_eq!(p.index(), 3);
        for (c, &gc) in p.class_map().iter().enumerate() {
            let x = p.embedding()[p.n.representative(c)];
            assert_eq!(p.g.class_of(x), gc);
        }
        // -1 and 1 are single classes of G inside N, plus the class of i, j, k
        assert_eq!(p.g_classes_in_n().len(), 3);
    }
}
