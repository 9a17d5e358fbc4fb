//! Dense arbitrary-precision integer matrices and their normal forms.
//!
//! Everything downstream (lattice membership, saturation, kernels, quotient
//! maps) reduces to the two workhorses here: the row-style Hermite normal
//! form and the Smith normal form, both with unimodular transformation
//! matrices tracked exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::Error;

/// Dense row-major matrix over the integers.
///
/// Zero rows and zero columns are allowed; a `0 x n` matrix carries the
/// ambient dimension of the zero lattice.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// Zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of `i64` entries. Panics on ragged input.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    /// Builds a matrix from rows of `BigInt` entries. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        assert!(rows.iter().all(|row| row.len() == cols), "ragged rows");
        let r = rows.len();
        let mut m = Self::zero(r, cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    /// Row `i` as a vector.
    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    /// All rows, top to bottom.
    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Column `j` as a vector.
    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Row-vector times matrix: `v * self`.
    pub fn mul_row_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "shape mismatch in vector product");
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] += vi * self.get(i, j);
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Exact determinant of a square matrix by fraction-free (Bareiss)
    /// elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(k, k) * m.get(i, j) - m.get(i, k) * m.get(k, j);
                    m.set(i, j, &num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }

    /// True iff the matrix is square with determinant `+1` or `-1`.
    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    // row_a <- x*row_a + y*row_b ; row_b <- z*row_a_old + w*row_b_old
    fn combine_rows(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
        for j in 0..self.cols {
            let va = self.get(a, j).clone();
            let vb = self.get(b, j).clone();
            self.set(a, j, x * &va + y * &vb);
            self.set(b, j, z * &va + w * &vb);
        }
    }

    fn combine_cols(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
        for i in 0..self.rows {
            let va = self.get(i, a).clone();
            let vb = self.get(i, b).clone();
            self.set(i, a, x * &va + y * &vb);
            self.set(i, b, z * &va + w * &vb);
        }
    }

    // row_a <- row_a - q*row_b
    fn sub_row_mul(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(a, j) - q * self.get(b, j);
            self.set(a, j, v);
        }
    }

    // col_a <- col_a - q*col_b
    fn sub_col_mul(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, a) - q * self.get(i, b);
            self.set(i, a, v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of a Hermite normal form computation: `u * m == h` with `u`
/// unimodular, `h` in canonical row-style form.
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Pivot column of each nonzero row of `h`, strictly increasing.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    /// Number of nonzero rows of `h`.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

// extended gcd with d > 0: d = x*a + y*b
fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let eg = a.extended_gcd(b);
    if eg.gcd.is_negative() {
        (-eg.gcd, -eg.x, -eg.y)
    } else {
        (eg.gcd, eg.x, eg.y)
    }
}

/// Canonical row-style Hermite normal form.
///
/// Pivots are positive, each entry above a pivot is reduced into
/// `[0, pivot)`, pivot columns strictly increase, and zero rows sit at the
/// bottom. `u` collects the row operations, so `u * m == h` and
/// `|det u| == 1`.
pub fn hnf(m: &IntMatrix) -> HermiteForm {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut pivots = Vec::new();
    let mut pr = 0; // next pivot row

    for col in 0..h.cols() {
        if pr >= h.rows() {
            break;
        }
        // bring the absolutely smallest nonzero entry of the column up as
        // the pivot, then clear below it with a single xgcd combination per
        // row; small pivots keep intermediate entries from blowing up
        let best = (pr..h.rows())
            .filter(|&r| !h.get(r, col).is_zero())
            .min_by_key(|&r| h.get(r, col).abs());
        let Some(best) = best else { continue };
        h.swap_rows(pr, best);
        u.swap_rows(pr, best);

        for r in pr + 1..h.rows() {
            if h.get(r, col).is_zero() {
                continue;
            }
            let a = h.get(pr, col).clone();
            let b = h.get(r, col).clone();
            if b.is_multiple_of(&a) {
                let q = &b / &a;
                h.sub_row_mul(r, pr, &q);
                u.sub_row_mul(r, pr, &q);
            } else {
                // [x y; -b/d a/d] has determinant 1 and maps (a, b) to (d, 0)
                let (d, x, y) = xgcd(&a, &b);
                let z = -(&b / &d);
                let w = &a / &d;
                h.combine_rows(pr, r, &x, &y, &z, &w);
                u.combine_rows(pr, r, &x, &y, &z, &w);
            }
        }
        if h.get(pr, col).is_negative() {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        // reduce entries above the pivot into [0, pivot)
        let p = h.get(pr, col).clone();
        for r in 0..pr {
            let q = h.get(r, col).div_floor(&p);
            h.sub_row_mul(r, pr, &q);
            u.sub_row_mul(r, pr, &q);
        }
        pivots.push(col);
        pr += 1;
    }

    HermiteForm { h, u, pivots }
}

/// Result of a Smith normal form computation: `u * m * v == d` with `u`, `v`
/// unimodular and `d` diagonal with `d_1 | d_2 | ...`, all entries
/// nonnegative.
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl SmithForm {
    /// The nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Smith normal form over the integers.
pub fn snf(m: &IntMatrix) -> SmithForm {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    let mut t = 0;

    while t < d.rows() && t < d.cols() {
        // move the absolutely smallest nonzero entry of the trailing block
        // to (t, t)
        let mut best: Option<(usize, usize)> = None;
        for i in t..d.rows() {
            for j in t..d.cols() {
                if !d.get(i, j).is_zero()
                    && best.is_none_or(|(bi, bj)| d.get(i, j).abs() < d.get(bi, bj).abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);

        loop {
            // clear the rest of row t with column operations; subtraction in
            // the divisible case keeps the pivot fixed, and every xgcd
            // combination strictly shrinks it, so the alternation terminates
            for j in t + 1..d.cols() {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let a = d.get(t, t).clone();
                let b = d.get(t, j).clone();
                if b.is_multiple_of(&a) {
                    let q = &b / &a;
                    d.sub_col_mul(j, t, &q);
                    v.sub_col_mul(j, t, &q);
                } else {
                    let (g, x, y) = xgcd(&a, &b);
                    let z = -(&b / &g);
                    let w = &a / &g;
                    d.combine_cols(t, j, &x, &y, &z, &w);
                    v.combine_cols(t, j, &x, &y, &z, &w);
                }
            }
            // clear the rest of column t with row operations; the xgcd case
            // can reintroduce entries in row t, hence the outer loop
            for i in t + 1..d.rows() {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let a = d.get(t, t).clone();
                let b = d.get(i, t).clone();
                if b.is_multiple_of(&a) {
                    let q = &b / &a;
                    d.sub_row_mul(i, t, &q);
                    u.sub_row_mul(i, t, &q);
                } else {
                    let (g, x, y) = xgcd(&a, &b);
                    let z = -(&b / &g);
                    let w = &a / &g;
                    d.combine_rows(t, i, &x, &y, &z, &w);
                    u.combine_rows(t, i, &x, &y, &z, &w);
                }
            }
            let row_clear = (t + 1..d.cols()).all(|j| d.get(t, j).is_zero());
            let col_clear = (t + 1..d.rows()).all(|i| d.get(i, t).is_zero());
            if row_clear && col_clear {
                // enforce divisibility: fold any bad entry into row t and
                // restart the clearing; the pivot gcd strictly shrinks
                let bad = (t + 1..d.rows()).find(|&i| {
                    (t + 1..d.cols()).any(|j| !d.get(i, j).is_multiple_of(d.get(t, t)))
                });
                match bad {
                    Some(i) => {
                        let one = BigInt::one();
                        let zero = BigInt::zero();
                        // row t += row i
                        d.combine_rows(t, i, &one, &one, &zero, &one);
                        u.combine_rows(t, i, &one, &one, &zero, &one);
                    }
                    None => break,
                }
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SmithForm { d, u, v, rank: t }
}

/// Basis of the left kernel `{ x : x * m == 0 }`, one row per basis vector.
///
/// The rows of the unimodular `u` from `u * m == h` that map onto zero rows
/// of `h` are exactly such a basis.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let hf = hnf(m);
    let r = hf.rank();
    let rows: Vec<Vec<BigInt>> = (r..m.rows()).map(|i| hf.u.row(i)).collect();
    IntMatrix::from_rows(rows, m.rows())
}

/// Inverse of a unimodular matrix.
///
/// The Hermite form of a unimodular matrix is the identity, so the tracked
/// transformation is the inverse.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix, Error> {
    let hf = hnf(m);
    if !hf.h.is_identity() {
        return Err(Error::NotUnimodular);
    }
    Ok(hf.u)
}
