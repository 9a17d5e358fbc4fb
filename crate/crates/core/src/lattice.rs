//! Integer lattices: subgroups of Z^s with a canonical Hermite basis.
//!
//! A lattice is stored together with the canonical Hermite normal form of
//! its generating rows, computed once at construction. The canonical form
//! doubles as the identity of the lattice: two lattices are equal iff their
//! canonical forms coincide.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::matrix::{hnf, snf, unimodular_inverse, IntMatrix};

/// Subgroup of Z^s spanned by the rows of a basis matrix.
///
/// Generating rows may be dependent or zero; canonicalization drops zero
/// rows, so `basis()` always returns an independent echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient_dim: usize,
    // canonical Hermite form of the row span, zero rows removed
    canonical: IntMatrix,
}

impl Lattice {
    /// Lattice spanned by the rows of `generators`.
    pub fn from_generators(generators: &IntMatrix) -> Self {
        let hf = hnf(generators);
        let rows: Vec<Vec<BigInt>> = (0..hf.rank()).map(|i| hf.h.row(i)).collect();
        Lattice {
            ambient_dim: generators.cols(),
            canonical: IntMatrix::from_rows(rows, generators.cols()),
        }
    }

    /// Lattice spanned by the given row vectors. Panics on ragged input.
    pub fn from_rows(ambient_dim: usize, rows: Vec<Vec<BigInt>>) -> Self {
        Self::from_generators(&IntMatrix::from_rows(rows, ambient_dim))
    }

    /// Convenience constructor from `i64` rows.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_generators(&IntMatrix::from_rows_i64(rows))
    }

    /// The zero lattice in Z^s.
    pub fn zero(ambient_dim: usize) -> Self {
        Lattice {
            ambient_dim,
            canonical: IntMatrix::zero(0, ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Canonical Hermite basis, one independent row per rank.
    pub fn basis(&self) -> &IntMatrix {
        &self.canonical
    }

    /// Rank of the row span over the rationals.
    pub fn rank(&self) -> usize {
        self.canonical.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool, Error> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.len(),
            });
        }
        let mut rem = v.to_vec();
        for i in 0..self.canonical.rows() {
            // pivot column = first nonzero entry of row i
            let p = (0..self.ambient_dim)
                .find(|&j| !self.canonical.get(i, j).is_zero())
                .expect("canonical basis has no zero rows");
            let pivot = self.canonical.get(i, p);
            let (q, r) = rem[p].div_rem(pivot);
            if !r.is_zero() {
                return Ok(false);
            }
            if !q.is_zero() {
                for j in 0..self.ambient_dim {
                    rem[j] -= &q * self.canonical.get(i, j);
                }
            }
        }
        Ok(rem.iter().all(|x| x.is_zero()))
    }

    /// Coordinates of `v` in the canonical basis, if `v` is a member.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>, Error> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.len(),
            });
        }
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.canonical.rows());
        for i in 0..self.canonical.rows() {
            let p = (0..self.ambient_dim)
                .find(|&j| !self.canonical.get(i, j).is_zero())
                .expect("canonical basis has no zero rows");
            let pivot = self.canonical.get(i, p);
            let (q, r) = rem[p].div_rem(pivot);
            if !r.is_zero() {
                return Ok(None);
            }
            for j in 0..self.ambient_dim {
                rem[j] -= &q * self.canonical.get(i, j);
            }
            coords.push(q);
        }
        if rem.iter().all(|x| x.is_zero()) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    /// Structural equality of canonical forms.
    pub fn equal(&self, other: &Lattice) -> Result<bool, Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        Ok(self.canonical == other.canonical)
    }

    /// Is `self` a sublattice of `other`?
    pub fn subset_of(&self, other: &Lattice) -> Result<bool, Error> {
        for i in 0..self.canonical.rows() {
            if !other.contains(&self.canonical.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Saturation: `(Q-span of self) ∩ Z^s`, the smallest saturated lattice
    /// containing `self`.
    ///
    /// With `u * b * v = d` in Smith form, the row span of `b` equals the
    /// span of the rows `d_i * (row i of v^{-1})`; dropping the `d_i`
    /// factors yields the saturation.
    pub fn saturation(&self) -> Lattice {
        let r = self.rank();
        if r == 0 {
            return Lattice::zero(self.ambient_dim);
        }
        let sf = snf(&self.canonical);
        debug_assert_eq!(sf.rank, r);
        let v_inv = unimodular_inverse(&sf.v).expect("smith transform is unimodular");
        let rows: Vec<Vec<BigInt>> = (0..r).map(|i| v_inv.row(i)).collect();
        Lattice::from_rows(self.ambient_dim, rows)
    }

    /// True iff every lattice member is orthogonal to `omega`.
    pub fn is_homogeneous(&self, omega: &GradingVector) -> Result<bool, Error> {
        if omega.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: omega.len(),
            });
        }
        Ok((0..self.canonical.rows()).all(|i| {
            let dot: BigInt = (0..self.ambient_dim)
                .map(|j| self.canonical.get(i, j) * &omega.0[j])
                .sum();
            dot.is_zero()
        }))
    }

    /// Image of the unit vectors under the quotient isomorphism
    /// `Z^s / Sat(self) -> Z`, defined when the rank is `s - 1`.
    ///
    /// The sign is canonicalized so the first nonzero entry is positive.
    pub fn configuration(&self) -> Result<Vec<BigInt>, Error> {
        let s = self.ambient_dim;
        if s == 0 || self.rank() != s - 1 {
            return Err(Error::RankMismatch {
                rank: self.rank(),
                required: s.saturating_sub(1),
            });
        }
        if s == 1 {
            // zero lattice in Z^1: the quotient map is the identity
            return Ok(vec![BigInt::one()]);
        }
        let sat = self.saturation();
        let sf = snf(sat.basis());
        debug_assert!(sf.invariant_factors().iter().all(|d| d.is_one()));
        // rows of sat * v span Z^{s-1} x {0}, so the last coordinate of
        // x * v is the quotient map; its value on e_i is v[i][s-1]
        let mut config = sf.v.col(s - 1);
        if let Some(first) = config.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for c in config.iter_mut() {
                    *c = -c.clone();
                }
            }
        }
        debug_assert!({
            let g = config
                .iter()
                .fold(BigInt::zero(), |acc, x| acc.gcd(x));
            g.is_one()
        });
        Ok(config)
    }
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Lattice(dim {}, rank {}) {:?}",
            self.ambient_dim,
            self.rank(),
            self.canonical
        )
    }
}

/// Strictly positive integer weights `deg t_i = ω_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingVector(Vec<BigInt>);

impl GradingVector {
    pub fn new(weights: Vec<BigInt>) -> Result<Self, Error> {
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(GradingVector(weights))
    }

    pub fn from_i64(weights: &[i64]) -> Result<Self, Error> {
        Self::new(weights.iter().map(|&w| BigInt::from(w)).collect())
    }

    /// The standard grading `(1, ..., 1)`.
    pub fn standard(dim: usize) -> Self {
        GradingVector(vec![BigInt::one(); dim])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.0
    }

    /// Weighted dot product `<ω, v>`.
    pub fn dot(&self, v: &[BigInt]) -> Result<BigInt, Error> {
        if v.len() != self.0.len() {
            return Err(Error::DimensionMismatch {
                expected: self.0.len(),
                got: v.len(),
            });
        }
        Ok(self.0.iter().zip(v).map(|(w, x)| w * x).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_of_spanning_rows() {
        let l = Lattice::from_rows_i64(&[vec![2, -2, 0], vec![0, 2, -2]]);
        assert_eq!(l.rank(), 2);
        assert_eq!(Lattice::zero(3).rank(), 0);
        let dep = Lattice::from_rows_i64(&[vec![1, -1], vec![2, -2]]);
        assert_eq!(dep.rank(), 1);
    }

    #[test]
    fn membership() {
        let l = Lattice::from_rows_i64(&[vec![2, -2, 0], vec![0, 2, -2]]);
        assert!(l.contains(&big(&[2, 0, -2])).unwrap());
        assert!(!l.contains(&big(&[1, -1, 0])).unwrap());
        assert!(l.contains(&big(&[0, 0, 0])).unwrap());
        // every basis row is a member
        for row in l.basis().row_vecs() {
            assert!(l.contains(&row).unwrap());
        }
        assert!(l.contains(&big(&[1, 1])).is_err());
    }

    #[test]
    fn equality_is_span_equality() {
        let a = Lattice::from_rows_i64(&[vec![1, -1]]);
        let b = Lattice::from_rows_i64(&[vec![-1, 1]]);
        assert!(a.equal(&b).unwrap());

        let c = Lattice::from_rows_i64(&[vec![2, -2]]);
        assert!(!a.equal(&c).unwrap());

        let d = Lattice::from_rows_i64(&[vec![2, -2, 0], vec![0, 2, -2]]);
        let e = Lattice::from_rows_i64(&[vec![2, 0, -2], vec![0, 2, -2]]);
        assert!(d.equal(&e).unwrap());
    }

    #[test]
    fn saturation_divides_out_torsion() {
        let l = Lattice::from_rows_i64(&[vec![2, -2, 0], vec![0, 2, -2]]);
        let sat = l.saturation();
        let expected = Lattice::from_rows_i64(&[vec![1, -1, 0], vec![0, 1, -1]]);
        assert!(sat.equal(&expected).unwrap());
        assert_eq!(sat.rank(), l.rank());
        assert!(l.subset_of(&sat).unwrap());
        // idempotent
        assert!(sat.saturation().equal(&sat).unwrap());

        let fixed = Lattice::from_rows_i64(&[vec![1, -1]]);
        assert!(fixed.saturation().equal(&fixed).unwrap());

        let zero = Lattice::zero(4);
        assert!(zero.saturation().equal(&zero).unwrap());
    }

    #[test]
    fn homogeneity() {
        let l = Lattice::from_rows_i64(&[vec![2, -2, 0], vec![0, 2, -2]]);
        assert!(l.is_homogeneous(&GradingVector::standard(3)).unwrap());

        let curve = Lattice::from_rows_i64(&[vec![3, -2]]);
        let w = GradingVector::from_i64(&[2, 3]).unwrap();
        assert!(curve.is_homogeneous(&w).unwrap());

        let bad = Lattice::from_rows_i64(&[vec![1, 0]]);
        assert!(!bad.is_homogeneous(&GradingVector::standard(2)).unwrap());
    }

    #[test]
    fn grading_vector_rejects_nonpositive() {
        assert!(GradingVector::from_i64(&[1, 0]).is_err());
        assert!(GradingVector::from_i64(&[1, -2]).is_err());
        assert!(GradingVector::from_i64(&[2, 3]).is_ok());
    }

    #[test]
    fn configuration_examples() {
        let l = Lattice::from_rows_i64(&[vec![2, -2, 0], vec![0, 2, -2]]);
        assert_eq!(l.configuration().unwrap(), big(&[1, 1, 1]));

        let anti = Lattice::from_rows_i64(&[vec![1, -1]]);
        assert_eq!(anti.configuration().unwrap(), big(&[1, 1]));

        let skew = Lattice::from_rows_i64(&[vec![2, -1]]);
        assert_eq!(skew.configuration().unwrap(), big(&[1, 2]));
    }

    #[test]
    fn configuration_functional_kills_saturation() {
        let l = Lattice::from_rows_i64(&[vec![2, -1]]);
        let config = l.configuration().unwrap();
        let sat = l.saturation();
        for row in sat.basis().row_vecs() {
            let dot: BigInt = row.iter().zip(&config).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        // kernel of the functional equals the saturation
        let kernel = Lattice::from_rows_i64(&[vec![2, -1]]);
        assert!(kernel.equal(&sat).unwrap());
    }

    #[test]
    fn configuration_requires_corank_one() {
        let full = Lattice::from_rows_i64(&[vec![1, 0], vec![0, 1]]);
        assert!(full.configuration().is_err());
        let low = Lattice::from_rows_i64(&[vec![1, -1, 0]]);
        assert!(low.configuration().is_err());
    }
}
