//! Dense exact matrices and the linear algebra the rest of the crate runs on:
//! reduced row echelon form, fraction-free rank, kernels, row-space sums and
//! intersections. Everything is exact; subspaces are represented by basis
//! rows and canonicalized through `rref` so that equality of row spaces is
//! equality of matrices.

use crate::error::Error;
use crate::scalar::{ExactScalar, FieldTag};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: FieldTag,
    entries: Vec<ExactScalar>,
}

/// Result of `rref`: the echelon form, its rank and pivot columns.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    pub mat: ExactMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize, field: FieldTag) -> Self {
        ExactMatrix { rows, cols, field, entries: vec![ExactScalar::zero(field); rows * cols] }
    }

    pub fn identity(n: usize, field: FieldTag) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, ExactScalar::one(field));
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldTag,
        mut f: impl FnMut(usize, usize) -> ExactScalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let e = f(r, c);
                debug_assert_eq!(e.field(), field);
                entries.push(e);
            }
        }
        ExactMatrix { rows, cols, field, entries }
    }

    pub fn from_rows(field: FieldTag, cols: usize, rows: Vec<Vec<ExactScalar>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            entries.extend(row);
        }
        ExactMatrix { rows: n, cols, field, entries }
    }

    /// Build a rational matrix from integer literals (test and Gram helper).
    pub fn from_i64(field: FieldTag, data: &[&[i64]]) -> Self {
        let rows = data.len();
        let cols = if rows == 0 { 0 } else { data[0].len() };
        Self::from_fn(rows, cols, field, |r, c| ExactScalar::from_int(data[r][c], field))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &ExactScalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[ExactScalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Self {
        ExactMatrix {
            rows: 1,
            cols: self.cols,
            field: self.field,
            entries: self.row(r).to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.field, |r, c| self.at(c, r).clone())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, self.field, |r, c| self.at(r, c).conj())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.field, |r, c| self.at(c, r).conj())
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self::from_fn(self.rows, self.cols, self.field, |r, c| self.at(r, c) * s)
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        ExactMatrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.field, other.field);
        Self::from_fn(self.rows, self.cols + other.cols, self.field, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, self.field, |r, c| self.at(r0 + r, c0 + c).clone())
    }

    /// Keep the listed rows, in order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, self.field, |r, c| self.at(idx[r], c).clone())
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        assert_eq!(a.field, b.field);
        let zero = ExactScalar::zero(a.field);
        Self::from_fn(a.rows + b.rows, a.cols + b.cols, a.field, |r, c| {
            if r < a.rows && c < a.cols {
                a.at(r, c).clone()
            } else if r >= a.rows && c >= a.cols {
                b.at(r - a.rows, c - a.cols).clone()
            } else {
                zero.clone()
            }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row[target] += factor * row[source]
    fn row_axpy(&mut self, target: usize, source: usize, factor: &ExactScalar) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let add = self.at(source, c) * factor;
            if add.is_zero() {
                continue;
            }
            let v = self.at(target, c) + &add;
            self.set(target, c, v);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &ExactScalar) {
        for c in 0..self.cols {
            let v = self.at(r, c) * factor;
            self.set(r, c, v);
        }
    }

    /// Unique reduced row echelon form, with rank and pivot columns.
    pub fn rref(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = m.at(lead, col).inv();
            m.scale_row(lead, &inv);
            for r in 0..m.rows {
                if r != lead && !m.at(r, col).is_zero() {
                    let f = -m.at(r, col);
                    m.row_axpy(r, lead, &f);
                }
            }
            pivot_cols.push(col);
            lead += 1;
        }
        RowEchelon { mat: m, rank: pivot_cols.len(), pivot_cols }
    }

    /// Rank through pivoted exact Gaussian elimination (no normalization).
    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Fraction-free Bareiss rank on a denominator-cleared copy. Pivots are
    /// chosen from the bottom row up, deliberately differing from `rref`'s
    /// top-down scan.
    pub fn rank_bareiss(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Clear denominators row by row; row scaling preserves rank.
        let mut m = self.clone();
        for r in 0..m.rows {
            let mut lcm = BigInt::one();
            for c in 0..m.cols {
                let e = m.at(r, c);
                lcm = num_integer::lcm(lcm, e.re().denom().clone());
                lcm = num_integer::lcm(lcm, e.im().denom().clone());
            }
            let f = ExactScalar::rational(BigRational::from_integer(lcm), m.field);
            m.scale_row(r, &f);
        }
        let mut rank = 0usize;
        let mut prev = ExactScalar::one(m.field);
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).rev().find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            for r in row + 1..m.rows {
                for c in col + 1..m.cols {
                    let num = m.at(row, col) * m.at(r, c) - m.at(r, col) * m.at(row, c);
                    let v = &num / &prev;
                    debug_assert!(v.re().denom().is_one() && v.im().denom().is_one());
                    m.set(r, c, v);
                }
                m.set(r, col, ExactScalar::zero(m.field));
            }
            prev = m.at(row, col).clone();
            rank += 1;
            row += 1;
        }
        rank
    }

    /// Basis of the right null space, one kernel vector per column.
    pub fn kernel(&self) -> ExactMatrix {
        let ech = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivot_cols.contains(c)).collect();
        let mut k = ExactMatrix::zero(self.cols, free.len(), self.field);
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, ExactScalar::one(self.field));
            for (i, &pc) in ech.pivot_cols.iter().enumerate() {
                k.set(pc, j, -ech.mat.at(i, fc));
            }
        }
        k
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&ExactMatrix::identity(n, self.field));
        let ech = aug.rref();
        if ech.rank < n || ech.pivot_cols.iter().take(n).copied().ne(0..n) {
            return None;
        }
        Some(ech.mat.submatrix(0, n, n, 2 * n))
    }

    /// One solution `x` (column) of `self · x = b`, or `None`.
    pub fn solve(&self, b: &ExactMatrix) -> Option<ExactMatrix> {
        assert_eq!(b.cols, 1);
        assert_eq!(b.rows, self.rows);
        let aug = self.hstack(b);
        let ech = aug.rref();
        // Inconsistent iff a pivot lands in the augmented column.
        if ech.pivot_cols.iter().any(|&c| c == self.cols) {
            return None;
        }
        let mut x = ExactMatrix::zero(self.cols, 1, self.field);
        for (i, &pc) in ech.pivot_cols.iter().enumerate() {
            x.set(pc, 0, ech.mat.at(i, self.cols).clone());
        }
        Some(x)
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        assert_eq!(self.field, rhs.field);
        let mut out = ExactMatrix::zero(self.rows, rhs.cols, self.field);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c) + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix::from_fn(self.rows, self.cols, self.field, |r, c| self.at(r, c) + rhs.at(r, c))
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix::from_fn(self.rows, self.cols, self.field, |r, c| self.at(r, c) - rhs.at(r, c))
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, self.field, |r, c| -self.at(r, c))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Canonical basis (rref rows, zero rows dropped) of the row space.
pub fn row_space_basis(m: &ExactMatrix) -> ExactMatrix {
    let ech = m.rref();
    ech.mat.submatrix(0, ech.rank, 0, m.cols())
}

/// Basis of rowspace(a) + rowspace(b).
pub fn subspace_sum(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix, Error> {
    if a.cols() != b.cols() {
        return Err(Error::AmbientMismatch(a.cols(), b.cols()));
    }
    Ok(row_space_basis(&a.vstack(b)))
}

/// Basis of rowspace(a) ∩ rowspace(b), via the kernel of the stacked system.
pub fn subspace_intersect(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix, Error> {
    if a.cols() != b.cols() {
        return Err(Error::AmbientMismatch(a.cols(), b.cols()));
    }
    let ra = a.rows();
    if ra == 0 || b.rows() == 0 {
        return Ok(ExactMatrix::zero(0, a.cols(), a.field()));
    }
    // α·a = β·b  ⟺  (α, β) ∈ ker [aᵀ | -bᵀ]
    let stacked = a.transpose().hstack(&(-&b.transpose()));
    let ker = stacked.kernel();
    let mut rows = Vec::new();
    for j in 0..ker.cols() {
        let mut v = vec![ExactScalar::zero(a.field()); a.cols()];
        for i in 0..ra {
            let coef = ker.at(i, j);
            if coef.is_zero() {
                continue;
            }
            for c in 0..a.cols() {
                v[c] = &v[c] + &(coef * a.at(i, c));
            }
        }
        rows.push(v);
    }
    Ok(row_space_basis(&ExactMatrix::from_rows(a.field(), a.cols(), rows)))
}

/// Is the row vector `v` in the row space of `m`?
pub fn in_row_space(m: &ExactMatrix, v: &ExactMatrix) -> bool {
    debug_assert_eq!(v.rows(), 1);
    if v.is_zero() {
        return true;
    }
    m.vstack(v).rank() == m.rank()
}

/// Rows of `sup` that extend `sub` to a basis of rowspace(sub)+rowspace(sup).
pub fn extend_basis(sub: &ExactMatrix, sup: &ExactMatrix) -> ExactMatrix {
    let mut acc = row_space_basis(sub);
    let mut picked: Vec<usize> = Vec::new();
    let mut rank = acc.rows();
    for r in 0..sup.rows() {
        let cand = acc.vstack(&sup.row_vec(r));
        let new_rank = cand.rank();
        if new_rank > rank {
            rank = new_rank;
            picked.push(r);
            acc = row_space_basis(&cand);
        }
    }
    sup.select_rows(&picked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactScalar {
        ExactScalar::from_ratio(n, d, FieldTag::Q)
    }

    #[test]
    fn rref_identity_is_fixed() {
        let m = ExactMatrix::identity(3, FieldTag::Q);
        let e = m.rref();
        assert_eq!(e.mat, m);
        assert_eq!(e.rank, 3);
        assert_eq!(e.pivot_cols, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero_matrix() {
        let m = ExactMatrix::zero(2, 4, FieldTag::Q);
        let e = m.rref();
        assert_eq!(e.mat, m);
        assert_eq!(e.rank, 0);
    }

    #[test]
    fn rref_rank_one_case() {
        // Hand elimination: second row is twice the first, 2x2 determinant 0.
        let m = ExactMatrix::from_i64(FieldTag::Q, &[&[1, 2], &[2, 4]]);
        let e = m.rref();
        assert_eq!(e.mat, ExactMatrix::from_i64(FieldTag::Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(e.rank, 1);
        let det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        assert!(det.is_zero());
    }

    #[test]
    fn kernel_full_rank_is_empty() {
        let m = ExactMatrix::identity(4, FieldTag::Q);
        assert_eq!(m.kernel().cols(), 0);
    }

    #[test]
    fn kernel_of_zero_map() {
        let m = ExactMatrix::zero(2, 3, FieldTag::Q);
        let k = m.kernel();
        assert_eq!(k.cols(), 3);
        assert_eq!(k, ExactMatrix::identity(3, FieldTag::Q));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = ExactMatrix::from_i64(FieldTag::Q, &[&[1, 1, 0]]);
        let k = m.kernel();
        assert_eq!(k.cols(), 2);
        assert!((&m * &k).is_zero());
    }

    #[test]
    fn sum_and_intersection_idempotent() {
        let a = row_space_basis(&ExactMatrix::from_i64(FieldTag::Q, &[&[1, 2, 3], &[0, 1, 1]]));
        assert_eq!(subspace_sum(&a, &a).unwrap(), a);
        assert_eq!(subspace_intersect(&a, &a).unwrap(), a);
    }

    #[test]
    fn complementary_coordinate_subspaces() {
        let a = ExactMatrix::from_i64(FieldTag::Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let b = ExactMatrix::from_i64(FieldTag::Q, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(subspace_sum(&a, &b).unwrap(), ExactMatrix::identity(4, FieldTag::Q));
        assert_eq!(subspace_intersect(&a, &b).unwrap().rows(), 0);
    }

    #[test]
    fn generic_planes_sharing_a_line() {
        // Two planes in Q^4 with a one-dimensional intersection.
        let a = ExactMatrix::from_i64(FieldTag::Q, &[&[1, 0, 1, 0], &[0, 1, 0, 0]]);
        let b = ExactMatrix::from_i64(FieldTag::Q, &[&[1, 0, 1, 0], &[0, 0, 0, 1]]);
        let s = subspace_sum(&a, &b).unwrap();
        let i = subspace_intersect(&a, &b).unwrap();
        assert_eq!(s.rows(), 3);
        assert_eq!(i.rows(), 1);
        assert_eq!(a.rows() + b.rows(), s.rows() + i.rows());
        assert!(in_row_space(&a, &i.row_vec(0)));
        assert!(in_row_space(&b, &i.row_vec(0)));
    }

    #[test]
    fn mismatched_ambient_dimension_is_an_error() {
        let a = ExactMatrix::zero(1, 3, FieldTag::Q);
        let b = ExactMatrix::zero(1, 4, FieldTag::Q);
        assert!(subspace_sum(&a, &b).is_err());
        assert!(subspace_intersect(&a, &b).is_err());
    }

    #[test]
    fn solve_and_inverse() {
        let m = ExactMatrix::from_i64(FieldTag::Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, ExactMatrix::identity(2, FieldTag::Q));
        let b = ExactMatrix::from_i64(FieldTag::Q, &[&[3], &[2]]);
        let x = m.solve(&b).unwrap();
        assert_eq!(&m * &x, b);
        assert_eq!(x.at(0, 0), &q(1, 1));
    }

    #[test]
    fn bareiss_handles_gaussian_entries() {
        let i = ExactScalar::i(FieldTag::QiBilinear);
        let one = ExactScalar::one(FieldTag::QiBilinear);
        let m = ExactMatrix::from_rows(
            FieldTag::QiBilinear,
            2,
            vec![vec![one.clone(), i.clone()], vec![i.clone(), -&one]],
        );
        // Second row is i times the first.
        assert_eq!(m.rank_bareiss(), 1);
        assert_eq!(m.rank(), 1);
    }
}
