use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;

use super::element::GroupElement;
use crate::error::Error;
use crate::exactnum::{CycloField, CycloNum};

/// One of the finite subgroups of SL2(C) up to conjugacy.
///
/// `BinaryDihedral(n)` has order `4n`; `BinaryDihedral(2)` is the
/// quaternion group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupSpec {
    Cyclic(usize),
    BinaryDihedral(usize),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl SubgroupSpec {
    pub fn order(&self) -> usize {
        match *self {
            SubgroupSpec::Cyclic(n) => n,
            SubgroupSpec::BinaryDihedral(n) => 4 * n,
            SubgroupSpec::BinaryTetrahedral => 24,
            SubgroupSpec::BinaryOctahedral => 48,
            SubgroupSpec::BinaryIcosahedral => 120,
        }
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        match *self {
            SubgroupSpec::Cyclic(n) => n,
            SubgroupSpec::BinaryDihedral(n) => (2 * n).lcm(&4),
            SubgroupSpec::BinaryTetrahedral => 12,
            SubgroupSpec::BinaryOctahedral => 24,
            SubgroupSpec::BinaryIcosahedral => 60,
        }
    }

    /// Conductor of the cyclotomic field used for both the matrix entries
    /// and the character values: it contains the generator entries and the
    /// roots of unity of order dividing the exponent.
    pub fn conductor(&self) -> usize {
        match *self {
            SubgroupSpec::Cyclic(n) => n,
            SubgroupSpec::BinaryDihedral(n) => (2 * n).lcm(&4),
            SubgroupSpec::BinaryTetrahedral | SubgroupSpec::BinaryOctahedral => 24,
            SubgroupSpec::BinaryIcosahedral => 60,
        }
    }

    /// Standard generators as matrices over `field`, whose conductor must
    /// be a multiple of [`SubgroupSpec::conductor`].
    pub fn generators(&self, field: &Arc<CycloField>) -> Vec<GroupElement> {
        let m = field.conductor();
        assert!(
            m % self.conductor() == 0,
            "field conductor {m} too small for {self}"
        );
        let z = |num: usize, den: usize| CycloNum::zeta_pow(field, (m / den * num) as i64);
        let int = |k: i64| CycloNum::from_int(field, k);
        let half = |x: &CycloNum| x.scale_rational(&crate::exactnum::rat(1, 2));
        let diag = |a: CycloNum| {
            let inv = a.conj();
            GroupElement::new([a, int(0), int(0), inv])
        };
        let b = GroupElement::new([int(0), int(1), int(-1), int(0)]);
        let i = z(1, 4);
        // (1 + i + j + k)/2 with i = diag(i, -i), j = b, k = ij
        let tet = GroupElement::new([
            half(&(&int(1) + &i)),
            half(&(&int(1) + &i)),
            half(&(&int(-1) + &i)),
            half(&(&int(1) - &i)),
        ]);
        match *self {
            SubgroupSpec::Cyclic(n) => vec![diag(z(1, n))],
            SubgroupSpec::BinaryDihedral(n) => vec![diag(z(1, 2 * n)), b],
            SubgroupSpec::BinaryTetrahedral => vec![tet, diag(i), b],
            SubgroupSpec::BinaryOctahedral => vec![tet, diag(i), b, diag(z(1, 8))],
            SubgroupSpec::BinaryIcosahedral => {
                // golden ratio and its inverse inside Q(zeta_5)
                let phi = -&(&z(2, 5) + &z(3, 5));
                let phi_inv = &z(1, 5) + &z(4, 5);
                let ip = &i * &phi_inv;
                // (phi + i/phi + j)/2
                let ico = GroupElement::new([
                    half(&(&phi + &ip)),
                    half(&int(1)),
                    half(&int(-1)),
                    half(&(&phi - &ip)),
                ]);
                vec![tet, ico]
            }
        }
    }

    /// Short name as accepted by [`FromStr`]: `C4`, `D3`, `T`, `O`, `I`.
    pub fn name(&self) -> String {
        match *self {
            SubgroupSpec::Cyclic(n) => format!("C{n}"),
            SubgroupSpec::BinaryDihedral(n) => format!("D{n}"),
            SubgroupSpec::BinaryTetrahedral => "T".into(),
            SubgroupSpec::BinaryOctahedral => "O".into(),
            SubgroupSpec::BinaryIcosahedral => "I".into(),
        }
    }
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for SubgroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::BadInput(format!("unknown group name {s:?}"));
        let param = |rest: &str| -> Result<usize, Error> {
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let n: usize = rest.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            Ok(n)
        };
        match s {
            "T" => Ok(SubgroupSpec::BinaryTetrahedral),
            "O" => Ok(SubgroupSpec::BinaryOctahedral),
            "I" => Ok(SubgroupSpec::BinaryIcosahedral),
            _ if s.starts_with('C') => Ok(SubgroupSpec::Cyclic(param(&s[1..])?)),
            _ if s.starts_with('D') => Ok(SubgroupSpec::BinaryDihedral(param(&s[1..])?)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!(
            "C4".parse::<SubgroupSpec>().unwrap(),
            SubgroupSpec::Cyclic(4)
        );
        assert_eq!(
            "D3".parse::<SubgroupSpec>().unwrap(),
            SubgroupSpec::BinaryDihedral(3)
        );
        assert_eq!(
            "I".parse::<SubgroupSpec>().unwrap(),
            SubgroupSpec::BinaryIcosahedral
        );
        for bad in ["", "C", "C0", "X2", "D-1", "C2x"] {
            assert!(bad.parse::<SubgroupSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn generators_have_determinant_one() {
        for s in [
            SubgroupSpec::Cyclic(5),
            SubgroupSpec::BinaryDihedral(3),
            SubgroupSpec::BinaryTetrahedral,
            SubgroupSpec::BinaryOctahedral,
            SubgroupSpec::BinaryIcosahedral,
        ] {
            let f = CycloField::new(s.conductor());
            for g in s.generators(&f) {
                assert_eq!(g.det(), CycloNum::one(&f), "{s}");
            }
        }
    }
}
