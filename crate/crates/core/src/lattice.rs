//! Exact positive-definite lattices: Gram matrices of root lattices, short
//! vector enumeration and co-root systems.
//!
//! Everything is computed over arbitrary-precision rationals.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graph::{realize, DynkinGraph};
use crate::rational::{Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("Gram matrix is not square")]
    NotSquare,
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is not positive definite (leading minor {0} is not positive)")]
    NotPositiveDefinite(usize),
    #[error("Gram matrix has non-integral entry at ({0}, {1}); co-roots need an integral lattice")]
    NonIntegralLattice(usize, usize),
}

fn big(q: Rational) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// A positive-definite lattice given by its Gram matrix in some basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: Vec<Vec<BigRational>>,
    /// `L` (unit lower triangular) of `gram = L D Lᵀ`.
    l: Vec<Vec<BigRational>>,
    d: Vec<BigRational>,
}

impl Lattice {
    pub fn new(gram: Vec<Vec<BigRational>>) -> Result<Self, LatticeError> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(LatticeError::NotSquare);
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        let mut l = vec![vec![BigRational::zero(); n]; n];
        let mut d = vec![BigRational::zero(); n];
        for i in 0..n {
            let mut di = gram[i][i].clone();
            for k in 0..i {
                di -= &l[i][k] * &l[i][k] * &d[k];
            }
            if !di.is_positive() {
                return Err(LatticeError::NotPositiveDefinite(i + 1));
            }
            l[i][i] = BigRational::one();
            for j in i + 1..n {
                let mut v = gram[j][i].clone();
                for k in 0..i {
                    v -= &l[j][k] * &l[i][k] * &d[k];
                }
                l[j][i] = v / &di;
            }
            d[i] = di;
        }
        Ok(Self { gram, l, d })
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self, LatticeError> {
        Self::new(m.rows().map(|r| r.iter().map(|&q| big(q)).collect()).collect())
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self, LatticeError> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    /// Product of the pivots of the `L D Lᵀ` decomposition.
    pub fn determinant(&self) -> BigRational {
        self.d.iter().fold(BigRational::one(), |acc, x| acc * x)
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> BigRational {
        let mut s = BigRational::zero();
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                if xi != 0 && yj != 0 {
                    s += &self.gram[i][j] * int(xi * yj);
                }
            }
        }
        s
    }

    pub fn norm(&self, x: &[i64]) -> BigRational {
        self.inner(x, x)
    }

    pub fn is_integral(&self) -> bool {
        self.gram.iter().flatten().all(|q| q.is_integer())
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let (n, m) = (self.rank(), other.rank());
        let mut gram = vec![vec![BigRational::zero(); n + m]; n + m];
        for i in 0..n {
            gram[i][..n].clone_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            gram[n + i][n..].clone_from_slice(&other.gram[i]);
        }
        Lattice::new(gram).expect("direct sum of positive-definite lattices")
    }
}

/// Root lattice `Q(Γ)` with the Gram matrix of the standard realization.
pub fn root_lattice(g: &DynkinGraph) -> Lattice {
    Lattice::from_matrix(&realize(g).gram()).expect("Dynkin Gram matrices are positive definite")
}

/// Integer coordinate vectors with their norms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RootSet {
    vectors: BTreeMap<Vec<i64>, BigRational>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.vectors.contains_key(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[i64], &BigRational)> {
        self.vectors.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn count_with_norm(&self, norm: i64) -> usize {
        let n = int(norm);
        self.vectors.values().filter(|v| **v == n).count()
    }

    pub fn is_closed_under_negation(&self) -> bool {
        self.vectors.keys().all(|x| {
            let neg: Vec<i64> = x.iter().map(|v| -v).collect();
            self.vectors.contains_key(&neg)
        })
    }

    pub fn contains_zero(&self) -> bool {
        self.vectors.keys().any(|x| x.iter().all(|&v| v == 0))
    }

    fn retain(&mut self, f: impl Fn(&[i64], &BigRational) -> bool) {
        self.vectors.retain(|k, v| f(k, v));
    }
}

fn floor(q: &BigRational) -> i64 {
    q.floor().to_integer().to_i64().expect("coordinate fits in i64")
}

/// All `x` in `Zⁿ` with `xᵀ G x <= bound`, the zero vector included.
///
/// Coordinates are fixed from the last to the first. With
/// `G = L D Lᵀ`, `xᵀ G x = Σᵢ dᵢ (xᵢ + cᵢ)²` where `cᵢ` depends only on later
/// coordinates, so each coordinate ranges over an interval around `-cᵢ`.
pub fn short_vectors(lattice: &Lattice, bound: &BigRational) -> RootSet {
    let n = lattice.rank();
    let mut out = RootSet::default();
    if bound.is_negative() {
        return out;
    }
    let mut x = vec![0i64; n];

    fn descend(
        lat: &Lattice,
        i: usize,
        budget: BigRational,
        bound: &BigRational,
        x: &mut Vec<i64>,
        out: &mut RootSet,
    ) {
        let n = lat.rank();
        let mut c = BigRational::zero();
        for j in i + 1..n {
            if x[j] != 0 {
                c += &lat.l[j][i] * int(x[j]);
            }
        }
        let d = &lat.d[i];
        let cost = |xi: i64| {
            let y = int(xi) + &c;
            d * &y * &y
        };
        let visit = |xi: i64, x: &mut Vec<i64>, out: &mut RootSet| -> bool {
            let used = cost(xi);
            if used > budget {
                return false;
            }
            x[i] = xi;
            if i == 0 {
                let norm = bound - (&budget - &used);
                out.vectors.insert(x.clone(), norm);
            } else {
                descend(lat, i - 1, &budget - &used, bound, x, out);
            }
            true
        };
        let start = floor(&-&c);
        let mut xi = start;
        while visit(xi, x, out) {
            xi -= 1;
        }
        let mut xi = start + 1;
        while visit(xi, x, out) {
            xi += 1;
        }
        x[i] = 0;
    }

    if n == 0 {
        out.vectors.insert(Vec::new(), BigRational::zero());
        return out;
    }
    descend(lattice, n - 1, bound.clone(), bound, &mut x, &mut out);
    out
}

/// `{x : x² ∈ {2, 4, 6}, 2(x, y)/x² ∈ Z for all y}`; integrality is tested on
/// the basis vectors, which suffices by linearity.
pub fn coroot_system(lattice: &Lattice) -> Result<RootSet, LatticeError> {
    for (i, row) in lattice.gram.iter().enumerate() {
        if let Some(j) = row.iter().position(|q| !q.is_integer()) {
            return Err(LatticeError::NonIntegralLattice(i, j));
        }
    }
    let n = lattice.rank();
    let mut set = short_vectors(lattice, &int(6));
    let allowed = [int(2), int(4), int(6)];
    set.retain(|x, norm| {
        allowed.contains(norm)
            && (0..n).all(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                (int(2) * lattice.inner(x, &e) / norm).is_integer()
            })
    });
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_name;

    fn lat(name: &str) -> Lattice {
        root_lattice(&parse_name(name).unwrap())
    }

    #[test]
    fn rank_one() {
        let l = Lattice::from_integers(&[&[2]]).unwrap();
        let s = short_vectors(&l, &int(2));
        assert_eq!(s.len(), 3);
        assert!(s.contains(&[1]) && s.contains(&[-1]) && s.contains(&[0]));
        let c = coroot_system(&l).unwrap();
        assert_eq!(c.len(), 2);
        assert!(!c.contains_zero());
    }

    #[test]
    fn bc1_gram() {
        let l = lat("BC1");
        assert_eq!(l.gram(), &[vec![BigRational::new(1.into(), 2.into())]]);
        assert_eq!(short_vectors(&l, &int(2)).len(), 5);
    }

    #[test]
    fn a2_roots() {
        let s = short_vectors(&lat("A2"), &int(2));
        assert_eq!(s.count_with_norm(2), 6);
        assert_eq!(s.len(), 7);
    }

    #[test]
    fn determinants() {
        assert_eq!(lat("E8").determinant(), int(1));
        assert_eq!(lat("E7").determinant(), int(2));
        assert_eq!(lat("D6").determinant(), int(4));
        assert_eq!(lat("A4+A2").determinant(), int(15));
        assert_eq!(lat("G2").determinant(), BigRational::new(1.into(), 3.into()));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Lattice::from_integers(&[&[2, -2], &[-2, 2]]).unwrap_err(),
            LatticeError::NotPositiveDefinite(2)
        );
        assert_eq!(
            Lattice::from_integers(&[&[2, 1], &[0, 2]]).unwrap_err(),
            LatticeError::NotSymmetric
        );
        assert_eq!(
            coroot_system(&lat("G2")).unwrap_err(),
            LatticeError::NonIntegralLattice(1, 1)
        );
    }
}
