use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Dense matrix with big integer entries, row-major. Acts on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(1);
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> IntMatrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Conjugation `p m p^{-1}` by the permutation matrix sending basis
    /// vector `i` to `perm[i]`: entry `(perm[i], perm[j])` of the result is
    /// entry `(i, j)` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> IntMatrix {
        assert_eq!(self.rows, self.cols);
        assert_eq!(perm.len(), self.rows);
        let mut m = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(perm[i], perm[j])] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Entries as `i64`; panics if an entry does not fit.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_i64().expect("matrix entry exceeds i64"))
                    .collect()
            })
            .collect()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows);
        let mut m = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] += a * b;
                    }
                }
            }
        }
        m
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_and_transpose() {
        let m = IntMatrix::from_i64(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(m.pow(5), IntMatrix::from_i64(&[vec![1, 5], vec![0, 1]]));
        assert_eq!(
            m.transpose(),
            IntMatrix::from_i64(&[vec![1, 0], vec![1, 1]])
        );
        assert_eq!(m.pow(0), IntMatrix::identity(2));
    }

    #[test]
    fn permutation_conjugation() {
        let m = IntMatrix::from_i64(&[vec![2, -4], vec![-1, 2]]);
        assert_eq!(
            m.permuted(&[1, 0]),
            IntMatrix::from_i64(&[vec![2, -1], vec![-4, 2]])
        );
    }
}
