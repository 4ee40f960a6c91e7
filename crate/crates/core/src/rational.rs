//! Exact rational scalars and small dense matrices over them.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

/// Exact rational number used for norms, inner products and Gram entries.
pub type Rational = num_rational::Ratio<i64>;

/// Square matrix of exact rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from `(numerator, denominator)` pairs.
    pub fn from_fractions(rows: &[&[(i64, i64)]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(p, q)| Rational::new(p, q)).collect())
                .collect(),
        )
    }

    pub fn from_integers(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// `P M Pᵀ` where row/column `i` of the result is row/column `perm[i]` of
    /// `self`.
    pub fn permuted(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.n);
        let mut out = Matrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self[(perm[i], perm[j])];
            }
        }
        out
    }

    /// Direct sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let n = self.n + other.n;
        let mut out = Matrix::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out[(self.n + i, self.n + j)] = other[(i, j)];
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.n);
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Determinant by exact Gaussian elimination.
    pub fn determinant(&self) -> Rational {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for r in col + 1..n {
                let f = a[r * n + col] / p;
                if f.is_zero() {
                    continue;
                }
                for k in col..n {
                    let sub = f * a[col * n + k];
                    a[r * n + k] -= sub;
                }
            }
        }
        det
    }

    /// Leading principal minors `det(M[..k, ..k])` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<Rational> {
        (1..=self.n)
            .map(|k| {
                let rows = (0..k)
                    .map(|i| self.row(i)[..k].to_vec())
                    .collect::<Vec<_>>();
                Matrix::from_rows(rows).determinant()
            })
            .collect()
    }

    /// Sylvester's criterion on a symmetric matrix.
    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric() && self.leading_minors().iter().all(|m| *m > Rational::zero())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        let m = Matrix::from_integers(&[&[2, -1], &[-1, 2]]);
        assert_eq!(m.determinant(), Rational::from_integer(3));
        let g2 = Matrix::from_fractions(&[&[(2, 1), (-1, 1)], &[(-1, 1), (2, 3)]]);
        assert_eq!(g2.determinant(), Rational::new(1, 3));
        // needs a row swap
        let m = Matrix::from_integers(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant(), Rational::from_integer(-1));
        assert_eq!(Matrix::zeros(0).determinant(), Rational::one());
    }

    #[test]
    fn positive_definite() {
        assert!(Matrix::from_integers(&[&[2, -1], &[-1, 2]]).is_positive_definite());
        assert!(!Matrix::from_integers(&[&[2, -2], &[-2, 2]]).is_positive_definite());
        assert!(!Matrix::from_integers(&[&[2, -1], &[0, 2]]).is_positive_definite());
    }
}
