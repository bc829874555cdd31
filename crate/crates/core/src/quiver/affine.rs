//! Affine Dynkin diagrams in the convention where the entry `a_ij` of the
//! Cartan matrix is `<alpha_i^vee, alpha_j>`, so a double bond between a long
//! root `i` and a short root `j` has `a_ij = -1` and `a_ji = -2`. Node 0 is
//! the affine node.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{nullspace_primitive, IntMatrix};

/// An affine type `X_n^(r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineType {
    pub letter: char,
    pub n: usize,
    pub twist: u8,
}

impl AffineType {
    pub const fn new(letter: char, n: usize, twist: u8) -> Self {
        AffineType { letter, n, twist }
    }

    /// Whether the type exists in the classification.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        match (self.letter, self.twist) {
            ('A', 1) => n >= 1,
            ('B', 1) => n >= 3,
            ('C', 1) => n >= 2,
            ('D', 1) => n >= 4,
            ('E', 1) => (6..=8).contains(&n),
            ('F', 1) => n == 4,
            ('G', 1) => n == 2,
            ('A', 2) => n == 2 || n >= 4,
            ('D', 2) => n >= 3,
            ('E', 2) => n == 6,
            ('D', 3) => n == 4,
            _ => false,
        }
    }

    pub fn num_nodes(&self) -> usize {
        match (self.letter, self.twist) {
            ('A', 2) if self.n % 2 == 0 => self.n / 2 + 1,
            ('A', 2) => (self.n + 1) / 2 + 1,
            ('D', 2) => self.n,
            ('E', 2) => 5,
            ('D', 3) => 3,
            _ => self.n + 1,
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        self.twist == 1 && matches!(self.letter, 'A' | 'D' | 'E')
    }

    /// Type whose Cartan matrix is the transpose of this one.
    pub fn dual(&self) -> AffineType {
        let l = self.num_nodes() - 1;
        match (self.letter, self.twist) {
            ('B', 1) => AffineType::new('A', 2 * l - 1, 2),
            ('A', 2) if self.n % 2 == 1 => AffineType::new('B', l, 1),
            ('C', 1) => AffineType::new('D', l + 1, 2),
            ('D', 2) => AffineType::new('C', l, 1),
            ('F', 1) => AffineType::new('E', 6, 2),
            ('E', 2) => AffineType::new('F', 4, 1),
            ('G', 1) => AffineType::new('D', 4, 3),
            ('D', 3) => AffineType::new('G', 2, 1),
            _ => *self,
        }
    }

    /// Coxeter number of the finite root system obtained by deleting node 0.
    pub fn finite_coxeter_number(&self) -> usize {
        let l = self.num_nodes() - 1;
        match (self.letter, self.twist) {
            ('A', 1) => l + 1,
            ('B', 1) | ('C', 1) => 2 * l,
            ('D', 1) => 2 * l - 2,
            ('E', 1) => [12, 18, 30][self.n - 6],
            ('F', 1) => 12,
            ('G', 1) => 6,
            ('A', 2) | ('D', 2) => 2 * l,
            ('E', 2) => 12,
            ('D', 3) => 6,
            _ => unreachable!("invalid type"),
        }
    }

    /// Coxeter number of the simple Lie algebra of type `X_n` underlying
    /// `X_n^(r)`. Differs from [`AffineType::finite_coxeter_number`] only for
    /// `A_{2l}^(2)`, where it is `2l + 1`.
    pub fn algebra_coxeter_number(&self) -> usize {
        let n = self.n;
        match self.letter {
            'A' => n + 1,
            'B' | 'C' => 2 * n,
            'D' => 2 * n - 2,
            'E' => [12, 18, 30][n - 6],
            'F' => 12,
            'G' => 6,
            _ => unreachable!("invalid type"),
        }
    }

    /// Cartan matrix with the affine node first.
    pub fn cartan(&self) -> IntMatrix {
        assert!(self.is_valid(), "invalid affine type {self}");
        let n = self.num_nodes();
        let l = n - 1;
        let mut edges: Vec<(usize, usize, i64, i64)> = Vec::new();
        let path = |ids: &[usize], e: &mut Vec<(usize, usize, i64, i64)>| {
            for w in ids.windows(2) {
                e.push((w[0], w[1], -1, -1));
            }
        };
        let range = |a: usize, b: usize| (a..b).collect::<Vec<_>>();
        match (self.letter, self.twist) {
            ('A', 1) if l == 1 => edges.push((0, 1, -2, -2)),
            ('A', 1) => {
                path(&range(0, l + 1), &mut edges);
                edges.push((l, 0, -1, -1));
            }
            ('B', 1) => {
                edges.push((0, 2, -1, -1));
                edges.push((1, 2, -1, -1));
                path(&range(2, l), &mut edges);
                edges.push((l - 1, l, -1, -2));
            }
            ('C', 1) => {
                edges.push((0, 1, -1, -2));
                path(&range(1, l), &mut edges);
                edges.push((l, l - 1, -1, -2));
            }
            ('D', 1) => {
                edges.push((0, 2, -1, -1));
                edges.push((1, 2, -1, -1));
                path(&range(2, l - 1), &mut edges);
                edges.push((l - 2, l - 1, -1, -1));
                edges.push((l - 2, l, -1, -1));
            }
            ('E', 1) => {
                // arms from the branch node; node 0 ends the first arm
                let arms: &[usize] = match self.n {
                    6 => &[2, 2, 2],
                    7 => &[3, 3, 1],
                    _ => &[5, 2, 1],
                };
                // build with branch node 0 then relabel so the affine end is 0
                let mut raw = Vec::new();
                let mut next = 1;
                let mut ends = Vec::new();
                for &len in arms {
                    let mut prev = 0;
                    for _ in 0..len {
                        raw.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                    ends.push(prev);
                }
                let a0 = ends[0];
                let relabel = |x: usize| {
                    if x == a0 {
                        0
                    } else if x < a0 {
                        x + 1
                    } else {
                        x
                    }
                };
                for (a, b) in raw {
                    edges.push((relabel(a), relabel(b), -1, -1));
                }
            }
            ('F', 1) => {
                path(&[0, 1, 2], &mut edges);
                edges.push((2, 3, -1, -2));
                edges.push((3, 4, -1, -1));
            }
            ('G', 1) => {
                edges.push((0, 1, -1, -1));
                edges.push((1, 2, -1, -3));
            }
            ('A', 2) if l == 1 => edges.push((0, 1, -4, -1)),
            ('A', 2) if self.n % 2 == 0 => {
                edges.push((0, 1, -2, -1));
                path(&range(1, l), &mut edges);
                edges.push((l - 1, l, -2, -1));
            }
            ('A', 2) => {
                edges.push((0, 2, -1, -1));
                edges.push((1, 2, -1, -1));
                path(&range(2, l), &mut edges);
                edges.push((l - 1, l, -2, -1));
            }
            ('D', 2) => {
                edges.push((0, 1, -2, -1));
                path(&range(1, l), &mut edges);
                edges.push((l, l - 1, -2, -1));
            }
            ('E', 2) => {
                path(&[0, 1, 2], &mut edges);
                edges.push((2, 3, -2, -1));
                edges.push((3, 4, -1, -1));
            }
            ('D', 3) => {
                edges.push((0, 1, -1, -1));
                edges.push((1, 2, -3, -1));
            }
            _ => unreachable!(),
        }
        let mut a = IntMatrix::identity(n).scale(&BigInt::from(2));
        for (i, j, aij, aji) in edges {
            a[(i, j)] = BigInt::from(aij);
            a[(j, i)] = BigInt::from(aji);
        }
        a
    }

    /// Primitive positive kernel vector of the Cartan matrix (marks).
    pub fn marks(&self) -> Vec<BigInt> {
        primitive_null(&self.cartan())
    }

    /// Primitive positive kernel vector of the transposed Cartan matrix
    /// (comarks). These are the labels of a quiver of this type.
    pub fn comarks(&self) -> Vec<BigInt> {
        primitive_null(&self.cartan().transpose())
    }

    /// All valid types with at most `max_nodes` nodes.
    pub fn catalog(max_nodes: usize) -> Vec<AffineType> {
        let mut out = Vec::new();
        for n in 1..=2 * max_nodes + 2 {
            for (letter, twist) in [
                ('A', 1),
                ('B', 1),
                ('C', 1),
                ('D', 1),
                ('E', 1),
                ('F', 1),
                ('G', 1),
                ('A', 2),
                ('D', 2),
                ('E', 2),
                ('D', 3),
            ] {
                let t = AffineType::new(letter, n, twist);
                if t.is_valid() && t.num_nodes() <= max_nodes {
                    out.push(t);
                }
            }
        }
        out.sort();
        out
    }
}

fn primitive_null(a: &IntMatrix) -> Vec<BigInt> {
    let ker = nullspace_primitive(a);
    assert_eq!(ker.len(), 1, "affine Cartan matrices have corank one");
    ker.into_iter().next().unwrap()
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}^({})", self.letter, self.n, self.twist)
    }
}

impl FromStr for AffineType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadInput(format!("unknown affine type {s:?}"));
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rest: String = chars.collect();
        let (n, tw) = rest.split_once("^(").ok_or_else(bad)?;
        let tw = tw.strip_suffix(')').ok_or_else(bad)?;
        let t = AffineType::new(
            letter,
            n.parse().map_err(|_| bad())?,
            tw.parse().map_err(|_| bad())?,
        );
        if t.is_valid() {
            Ok(t)
        } else {
            Err(bad())
        }
    }
}

fn node_signature(
    a: &IntMatrix,
    i: usize,
    label: &BigInt,
) -> (BigInt, Vec<BigInt>, Vec<BigInt>, BigInt) {
    let n = a.rows();
    let mut row: Vec<BigInt> = (0..n)
        .filter(|&j| j != i)
        .map(|j| a[(i, j)].clone())
        .collect();
    let mut col: Vec<BigInt> = (0..n)
        .filter(|&j| j != i)
        .map(|j| a[(j, i)].clone())
        .collect();
    row.sort();
    col.sort();
    (a[(i, i)].clone(), row, col, label.clone())
}

/// Permutation `p` with `b[p[i]][p[j]] == a[i][j]` respecting per-node
/// signatures, found by backtracking in increasing order of target nodes.
pub fn find_isomorphism(
    a: &IntMatrix,
    a_labels: &[BigInt],
    b: &IntMatrix,
    b_labels: &[BigInt],
) -> Option<Vec<usize>> {
    let n = a.rows();
    if b.rows() != n || a_labels.len() != n || b_labels.len() != n {
        return None;
    }
    let sa: Vec<_> = (0..n).map(|i| node_signature(a, i, &a_labels[i])).collect();
    let sb: Vec<_> = (0..n).map(|i| node_signature(b, i, &b_labels[i])).collect();
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| sa[i] == sb[j]).collect())
        .collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        a: &IntMatrix,
        b: &IntMatrix,
        cand: &[Vec<usize>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = perm.len();
        if i == n {
            return true;
        }
        for &j in &cand[i] {
            if used[j] {
                continue;
            }
            let ok = (0..i).all(|k| a[(i, k)] == b[(j, perm[k])] && a[(k, i)] == b[(perm[k], j)]);
            if !ok {
                continue;
            }
            perm[i] = j;
            used[j] = true;
            if go(i + 1, a, b, cand, perm, used) {
                return true;
            }
            used[j] = false;
        }
        perm[i] = usize::MAX;
        false
    }
    if go(0, a, b, &candidates, &mut perm, &mut used) {
        Some(perm)
    } else {
        None
    }
}

/// Identifies an affine Cartan matrix. Returns the type and the permutation
/// `p` sending node `i` to catalog node `p[i]`.
pub fn detect_type(cartan: &IntMatrix, labels: &[BigInt]) -> Result<(AffineType, Vec<usize>)> {
    let n = cartan.rows();
    if n != cartan.cols() || n > crate::groups::MAX_NODES || n < 2 {
        return Err(Error::UnrecognizedDiagram(format!(
            "{n}x{} matrix",
            cartan.cols()
        )));
    }
    for t in AffineType::catalog(n) {
        if t.num_nodes() != n {
            continue;
        }
        if let Some(p) = find_isomorphism(cartan, labels, &t.cartan(), &t.comarks()) {
            return Ok((t, p));
        }
    }
    Err(Error::UnrecognizedDiagram(format!("{cartan}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn catalog_entries_are_affine() {
        for t in AffineType::catalog(13) {
            let c = t.cartan();
            assert_eq!(c.rows(), t.num_nodes());
            let d = t.comarks();
            assert!(
                c.transpose()
                    .mul_vec(&d)
                    .iter()
                    .all(|x| *x == BigInt::from(0)),
                "{t}"
            );
            assert!(d.iter().all(|x| *x > BigInt::from(0)), "{t}");
            assert_eq!(t.dual().dual(), t);
            if t.letter == 'A' && t.twist == 2 && t.n % 2 == 0 {
                // self-dual up to reversing the chain
                assert!(find_isomorphism(&c, &t.comarks(), &c.transpose(), &t.marks()).is_some());
            } else {
                assert_eq!(t.dual().cartan(), c.transpose(), "{t}");
            }
            assert_eq!(t.to_string().parse::<AffineType>().unwrap(), t);
        }
    }

    #[test]
    fn coxeter_numbers() {
        let a4 = AffineType::new('A', 4, 2);
        assert_eq!(
            (a4.finite_coxeter_number(), a4.algebra_coxeter_number()),
            (4, 5)
        );
        let e6 = AffineType::new('E', 6, 2);
        assert_eq!(
            (e6.finite_coxeter_number(), e6.algebra_coxeter_number()),
            (12, 12)
        );
        let d4 = AffineType::new('D', 4, 3);
        assert_eq!(
            (d4.finite_coxeter_number(), d4.algebra_coxeter_number()),
            (6, 6)
        );
    }

    #[test]
    fn known_marks() {
        let mut e8 = AffineType::new('E', 8, 1).marks();
        e8.sort();
        assert_eq!(e8, ints(&[1, 2, 2, 3, 3, 4, 4, 5, 6]));
        assert_eq!(AffineType::new('A', 2, 2).comarks(), ints(&[1, 2]));
        assert_eq!(AffineType::new('A', 2, 2).marks(), ints(&[2, 1]));
        assert_eq!(AffineType::new('F', 4, 1).marks(), ints(&[1, 2, 3, 4, 2]));
        assert_eq!(AffineType::new('F', 4, 1).comarks(), ints(&[1, 2, 3, 2, 1]));
    }

    #[test]
    fn detect_small() {
        let a1 = IntMatrix::from_i64(&[vec![2, -2], vec![-2, 2]]);
        assert_eq!(
            detect_type(&a1, &ints(&[1, 1])).unwrap(),
            (AffineType::new('A', 1, 1), vec![0, 1])
        );
        let a2 = IntMatrix::from_i64(&[vec![2, -4], vec![-1, 2]]);
        assert_eq!(
            detect_type(&a2, &ints(&[1, 2])).unwrap().0,
            AffineType::new('A', 2, 2)
        );
        let bad = IntMatrix::from_i64(&[vec![2, -3], vec![-3, 2]]);
        assert!(matches!(
            detect_type(&bad, &ints(&[1, 1])),
            Err(Error::UnrecognizedDiagram(_))
        ));
    }

    #[test]
    fn detect_relabelled() {
        let t = AffineType::new('E', 7, 1);
        let p = [3, 0, 7, 1, 2, 6, 4, 5];
        let c = t.cartan().permuted(&p);
        let mut labels = vec![BigInt::from(0); 8];
        for (i, &pi) in p.iter().enumerate() {
            labels[pi] = t.comarks()[i].clone();
        }
        let (found, perm) = detect_type(&c, &labels).unwrap();
        assert_eq!(found, t);
        assert_eq!(c.permuted(&perm), t.cartan());
    }
}
