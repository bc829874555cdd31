use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::rational::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..m[r].len() {
                    let d = &f * &m[row][c];
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Solves `a x = b` exactly. `a` is given by rows and may have more rows
/// than columns. Returns `None` unless the system has exactly one solution.
pub fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.len(), b.len());
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols);
    if pivots.len() != ncols {
        return None;
    }
    if m[ncols..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    Some((0..ncols).map(|i| m[i][ncols].clone()).collect())
}

/// Basis of the integer kernel of `a`, each vector primitive (coprime
/// entries) with its first nonzero entry positive.
pub fn nullspace_primitive(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = a.cols();
    let mut m: Vec<Vec<Rational>> = (0..a.rows())
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_integer(a[(i, j)].clone()))
                .collect()
        })
        .collect();
    let pivots = rref(&mut m, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let mut iv: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
            let g = iv.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            let lead_neg = iv
                .iter()
                .find(|x| !x.is_zero())
                .is_some_and(|x| x.is_negative());
            for x in iv.iter_mut() {
                *x = &*x / &g;
                if lead_neg {
                    *x = -&*x;
                }
            }
            iv
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    #[test]
    fn overdetermined_consistent() {
        let a = vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(2, 1)],
            vec![rat(1, 1), rat(1, 1)],
        ];
        let x = solve_rational(&a, &[rat(1, 1), rat(1, 1), rat(3, 2)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(1, 2)]);
        assert!(solve_rational(&a, &[rat(1, 1), rat(1, 1), rat(2, 1)]).is_none());
    }

    #[test]
    fn kernel_of_affine_a1() {
        let c = IntMatrix::from_i64(&[vec![2, -2], vec![-2, 2]]);
        assert_eq!(
            nullspace_primitive(&c),
            vec![vec![BigInt::from(1), BigInt::from(1)]]
        );
    }

    #[test]
    fn kernel_of_twisted_a2() {
        let c = IntMatrix::from_i64(&[vec![2, -4], vec![-1, 2]]);
        assert_eq!(
            nullspace_primitive(&c),
            vec![vec![BigInt::from(2), BigInt::from(1)]]
        );
        assert_eq!(
            nullspace_primitive(&c.transpose()),
            vec![vec![BigInt::from(1), BigInt::from(2)]]
        );
    }
}
