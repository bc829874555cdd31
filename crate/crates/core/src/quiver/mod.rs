//! McKay quivers of restricted, induced and irreducible modules, their
//! Cartan matrices, affine types and labels.

mod affine;
mod build;

pub use affine::{detect_type, find_isomorphism, AffineType};
pub use build::{coxeter_number_via_classes, cubic_identity_check, McKayQuiver, Mode, NodeSet};

use crate::groups::{PairFamily, PairSpec, SubgroupSpec};

/// Affine types expected for a cataloged pair, as `(restricted, induced)`.
/// For `N = G` both entries are the type of the McKay quiver of `G`.
pub fn expected_types(pair: &PairSpec) -> Option<(AffineType, AffineType)> {
    use SubgroupSpec::*;
    let family = pair.family().ok()?;
    let t = |l, n, r| AffineType::new(l, n, r);
    let both = |x: AffineType| Some((x, x));
    match family {
        PairFamily::Equal => match pair.ambient {
            Cyclic(n) => both(t('A', n - 1, 1)),
            BinaryDihedral(n) => both(t('D', n + 2, 1)),
            BinaryTetrahedral => both(t('E', 6, 1)),
            BinaryOctahedral => both(t('E', 7, 1)),
            BinaryIcosahedral => both(t('E', 8, 1)),
        },
        PairFamily::DihedralInDihedral => {
            let BinaryDihedral(m) = pair.normal else {
                return None;
            };
            let n = m + 1;
            Some((t('A', 2 * n - 1, 2), t('B', n, 1)))
        }
        PairFamily::CyclicInDihedral => {
            let BinaryDihedral(n) = pair.ambient else {
                return None;
            };
            Some((t('D', n + 1, 2), t('C', n, 1)))
        }
        PairFamily::CyclicInDihedralDouble => {
            let Cyclic(c) = pair.normal else { return None };
            let n = c / 2;
            let induced = if n == 1 { t('A', 1, 1) } else { t('C', n, 1) };
            Some((t('A', 2 * n, 2), induced))
        }
        PairFamily::TetrahedralInOctahedral => Some((t('E', 6, 2), t('F', 4, 1))),
        PairFamily::QuaternionInTetrahedral => Some((t('D', 4, 3), t('G', 2, 1))),
    }
}

/// Whether the pair belongs to the family whose restricted quiver has type
/// `A_{2n}^(2)`, where the affine node carries mark 2.
pub fn is_a2n_twisted_family(pair: &PairSpec) -> bool {
    matches!(pair.family(), Ok(PairFamily::CyclicInDihedralDouble))
}
