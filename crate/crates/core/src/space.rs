//! Ambient form spaces and subspaces.
//!
//! A `FormSpace` is a vector space `V = U ⊕ W` with `U ⊥ W`, carrying one of
//! four standard nondegenerate forms: a real symmetric form of signature
//! `(p, q)` split as `(p1, q1) ⊕ (p-p1, q-q1)`, the analogous hermitian form,
//! the split symmetric bilinear form over the Gaussian rationals, or the
//! standard symplectic form. Coordinates are fixed once and for all:
//!
//! * signed cases: `u1+ … u{p1}+ | u1- … u{q1}- | w1+ … w{p-p1}+ | w1- … w{q-q1}-`
//! * split orthogonal: `u1 … um | w1 … w{n-m}`, orthonormal
//! * symplectic: `e1 … em | f1 … fm | e{m+1} … en | f{m+1} … fn` with `(e_i, f_i) = 1`
//!
//! Subspaces are basis-row matrices canonicalized by reduced echelon form, so
//! subspace equality is matrix equality.

use crate::error::{Error, Result};
use crate::matrix::{self, ExactMatrix};
use crate::scalar::{ExactScalar, FieldTag};
use std::fmt;
use std::sync::Arc;

/// The four standard symmetric-pair cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    RealOrthogonal,
    Unitary,
    ComplexOrthogonal,
    Symplectic,
}

impl CaseTag {
    pub fn field_tag(self) -> FieldTag {
        match self {
            CaseTag::RealOrthogonal | CaseTag::Symplectic => FieldTag::Q,
            CaseTag::Unitary => FieldTag::QiHermitian,
            CaseTag::ComplexOrthogonal => FieldTag::QiBilinear,
        }
    }

    /// True for the cases whose orbit invariant carries a signature pair.
    pub fn is_signed(self) -> bool {
        matches!(self, CaseTag::RealOrthogonal | CaseTag::Unitary)
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::RealOrthogonal => "real-orthogonal",
            CaseTag::Unitary => "unitary",
            CaseTag::ComplexOrthogonal => "complex-orthogonal",
            CaseTag::Symplectic => "symplectic",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "real-orthogonal" => Ok(CaseTag::RealOrthogonal),
            "unitary" => Ok(CaseTag::Unitary),
            "complex-orthogonal" => Ok(CaseTag::ComplexOrthogonal),
            "symplectic" => Ok(CaseTag::Symplectic),
            other => Err(Error::Parse(format!("unknown case `{other}`"))),
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Group parameters. Signed cases use `(p, q, p1, q1)`; the split orthogonal
/// case uses `(n, m)`; the symplectic case uses `(n, m)` meaning the ambient
/// group acts on dimension `2n` and the first factor on dimension `2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(untagged)]
pub enum GroupParams {
    Signature { p: usize, q: usize, p1: usize, q1: usize },
    Split { n: usize, m: usize },
}

impl GroupParams {
    pub fn validate(&self, case: CaseTag) -> Result<()> {
        match (case, self) {
            (CaseTag::RealOrthogonal | CaseTag::Unitary, GroupParams::Signature { p, q, p1, q1 }) => {
                if *p1 > 0 && p1 < p && *q1 > 0 && q1 < q {
                    Ok(())
                } else {
                    Err(Error::InvalidParams(format!(
                        "need 0 < p1 < p and 0 < q1 < q, got p={p} q={q} p1={p1} q1={q1}"
                    )))
                }
            }
            (CaseTag::ComplexOrthogonal | CaseTag::Symplectic, GroupParams::Split { n, m }) => {
                if *m > 0 && m < n {
                    Ok(())
                } else {
                    Err(Error::InvalidParams(format!("need 0 < m < n, got n={n} m={m}")))
                }
            }
            _ => Err(Error::InvalidParams(format!(
                "parameter shape does not match case {case}"
            ))),
        }
    }

    pub fn signature(&self) -> (usize, usize, usize, usize) {
        match self {
            GroupParams::Signature { p, q, p1, q1 } => (*p, *q, *p1, *q1),
            _ => panic!("signature parameters requested for a split case"),
        }
    }

    pub fn split(&self) -> (usize, usize) {
        match self {
            GroupParams::Split { n, m } => (*n, *m),
            _ => panic!("split parameters requested for a signed case"),
        }
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupParams::Signature { p, q, p1, q1 } => write!(f, "p={p};q={q};p1={p1};q1={q1}"),
            GroupParams::Split { n, m } => write!(f, "n={n};m={m}"),
        }
    }
}

/// Which factor of the fixed split `V = U ⊕ W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    U,
    W,
}

/// Ambient space with its Gram matrix and the fixed `U ⊕ W` split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpace {
    pub case: CaseTag,
    pub params: GroupParams,
    dim_v: usize,
    dim_u: usize,
    gram: ExactMatrix,
}

impl FormSpace {
    /// The standard space for the given case and parameters.
    pub fn standard(case: CaseTag, params: GroupParams) -> Result<Arc<FormSpace>> {
        params.validate(case)?;
        let field = case.field_tag();
        let (dim_v, dim_u, gram) = match case {
            CaseTag::RealOrthogonal | CaseTag::Unitary => {
                let (p, q, p1, q1) = params.signature();
                let d = p + q;
                let mut g = ExactMatrix::zero(d, d, field);
                let neg = |k: usize, lo: usize, hi: usize| k >= lo && k < hi;
                for k in 0..d {
                    // u+ block, u- block, w+ block, w- block
                    let minus = neg(k, p1, p1 + q1) || neg(k, p1 + q1 + (p - p1), d);
                    g.set(k, k, ExactScalar::from_int(if minus { -1 } else { 1 }, field));
                }
                (d, p1 + q1, g)
            }
            CaseTag::ComplexOrthogonal => {
                let (n, m) = params.split();
                (n, m, ExactMatrix::identity(n, field))
            }
            CaseTag::Symplectic => {
                let (n, m) = params.split();
                let d = 2 * n;
                let mut g = ExactMatrix::zero(d, d, field);
                let one = ExactScalar::one(field);
                // (e_i, f_i) = 1 within each factor block.
                for i in 0..m {
                    g.set(i, m + i, one.clone());
                    g.set(m + i, i, -&one);
                }
                let base = 2 * m;
                for i in 0..(n - m) {
                    g.set(base + i, base + (n - m) + i, one.clone());
                    g.set(base + (n - m) + i, base + i, -&one);
                }
                (d, 2 * m, g)
            }
        };
        Ok(Arc::new(FormSpace { case, params, dim_v, dim_u, gram }))
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim_factor(&self, factor: Factor) -> usize {
        match factor {
            Factor::U => self.dim_u,
            Factor::W => self.dim_v - self.dim_u,
        }
    }

    pub fn factor_range(&self, factor: Factor) -> std::ops::Range<usize> {
        match factor {
            Factor::U => 0..self.dim_u,
            Factor::W => self.dim_u..self.dim_v,
        }
    }

    pub fn gram(&self) -> &ExactMatrix {
        &self.gram
    }

    /// The Gram block of one factor (the split is Gram-block-diagonal).
    pub fn factor_gram(&self, factor: Factor) -> ExactMatrix {
        let r = self.factor_range(factor);
        self.gram.submatrix(r.start, r.end, r.start, r.end)
    }

    pub fn field(&self) -> FieldTag {
        self.case.field_tag()
    }

    /// Largest dimension of an isotropic subspace.
    pub fn max_isotropic_dim(&self) -> usize {
        match self.case {
            CaseTag::RealOrthogonal | CaseTag::Unitary => {
                let (p, q, _, _) = self.params.signature();
                p.min(q)
            }
            CaseTag::ComplexOrthogonal => self.params.split().0 / 2,
            CaseTag::Symplectic => self.params.split().0,
        }
    }

    /// Pairing matrix `(a_i, b_j)` of two lists of row vectors.
    pub fn pair_rows(&self, a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        assert_eq!(a.cols(), self.dim_v);
        assert_eq!(b.cols(), self.dim_v);
        &(a * &self.gram) * &b.conj_transpose()
    }

    /// `(x, y)` for two single row vectors.
    pub fn pair(&self, x: &ExactMatrix, y: &ExactMatrix) -> ExactScalar {
        self.pair_rows(x, y).at(0, 0).clone()
    }

    /// Does `h` preserve the form exactly: `σ(h)ᵀ · G · h = G`?
    pub fn is_isometry(&self, h: &ExactMatrix) -> bool {
        h.is_square()
            && h.rows() == self.dim_v
            && &(&h.conj_transpose() * &self.gram) * h == self.gram
    }

    /// Same check against one factor's Gram block.
    pub fn is_factor_isometry(&self, factor: Factor, h: &ExactMatrix) -> bool {
        let g = self.factor_gram(factor);
        h.is_square() && h.rows() == g.rows() && &(&h.conj_transpose() * &g) * h == g
    }

    // Fixed-coordinate index helpers (1-based mathematical indices).

    pub fn coord_u_plus(&self, i: usize) -> usize {
        let (_, _, p1, _) = self.params.signature();
        debug_assert!(1 <= i && i <= p1);
        i - 1
    }

    pub fn coord_u_minus(&self, j: usize) -> usize {
        let (_, _, p1, q1) = self.params.signature();
        debug_assert!(1 <= j && j <= q1);
        p1 + j - 1
    }

    pub fn coord_w_plus(&self, t: usize) -> usize {
        let (p, _, p1, q1) = self.params.signature();
        debug_assert!(1 <= t && t <= p - p1);
        p1 + q1 + t - 1
    }

    pub fn coord_w_minus(&self, l: usize) -> usize {
        let (p, q, p1, q1) = self.params.signature();
        debug_assert!(1 <= l && l <= q - q1);
        p1 + q1 + (p - p1) + l - 1
    }

    /// Split orthogonal coordinates: `u_i` then `w_j`.
    pub fn coord_split_u(&self, i: usize) -> usize {
        let (_, m) = self.params.split();
        debug_assert!(1 <= i && i <= m);
        i - 1
    }

    pub fn coord_split_w(&self, j: usize) -> usize {
        let (n, m) = self.params.split();
        debug_assert!(1 <= j && j <= n - m);
        m + j - 1
    }

    /// Symplectic coordinate of `e_i` (`i ≤ m` lands in U, else in W).
    pub fn coord_e(&self, i: usize) -> usize {
        let (n, m) = self.params.split();
        debug_assert!(1 <= i && i <= n);
        if i <= m {
            i - 1
        } else {
            2 * m + (i - m - 1)
        }
    }

    /// Symplectic coordinate of `f_i`.
    pub fn coord_f(&self, i: usize) -> usize {
        let (n, m) = self.params.split();
        debug_assert!(1 <= i && i <= n);
        if i <= m {
            m + i - 1
        } else {
            2 * m + (n - m) + (i - m - 1)
        }
    }
}

/// Isometry type `(s, s+, s-)`: radical dimension and the maximal positive
/// and negative definite dimensions of a restricted form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct IsometryType {
    pub s: usize,
    pub s_plus: usize,
    pub s_minus: usize,
}

impl IsometryType {
    pub fn dim(&self) -> usize {
        self.s + self.s_plus + self.s_minus
    }
}

/// A subspace of a `FormSpace`, stored as canonical (rref) basis rows.
#[derive(Debug, Clone)]
pub struct Subspace {
    space: Arc<FormSpace>,
    basis: ExactMatrix,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Subspace {
    /// Canonicalize the given basis rows; rejects dependent rows.
    pub fn new(space: Arc<FormSpace>, basis: ExactMatrix) -> Result<Subspace> {
        if basis.cols() != space.dim_v() {
            return Err(Error::AmbientMismatch(basis.cols(), space.dim_v()));
        }
        if basis.field() != space.field() {
            return Err(Error::Shape("scalar field does not match the space".into()));
        }
        let given = basis.rows();
        let canon = matrix::row_space_basis(&basis);
        if canon.rows() < given {
            return Err(Error::DependentBasis);
        }
        Ok(Subspace { space, basis: canon })
    }

    /// Same, but spans (dependent rows are allowed and collapsed).
    pub fn span(space: Arc<FormSpace>, basis: ExactMatrix) -> Result<Subspace> {
        if basis.cols() != space.dim_v() {
            return Err(Error::AmbientMismatch(basis.cols(), space.dim_v()));
        }
        let canon = matrix::row_space_basis(&basis);
        Ok(Subspace { space, basis: canon })
    }

    pub fn zero(space: Arc<FormSpace>) -> Subspace {
        let cols = space.dim_v();
        let field = space.field();
        Subspace { space, basis: ExactMatrix::zero(0, cols, field) }
    }

    pub fn space(&self) -> &Arc<FormSpace> {
        &self.space
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn contains_vector(&self, v: &ExactMatrix) -> bool {
        matrix::in_row_space(&self.basis, v)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|r| self.contains_vector(&other.basis.row_vec(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        debug_assert!(Arc::ptr_eq(&self.space, &other.space) || self.space == other.space);
        Ok(Subspace { space: self.space.clone(), basis: matrix::subspace_sum(&self.basis, &other.basis)? })
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        debug_assert!(Arc::ptr_eq(&self.space, &other.space) || self.space == other.space);
        Ok(Subspace {
            space: self.space.clone(),
            basis: matrix::subspace_intersect(&self.basis, &other.basis)?,
        })
    }

    /// Image under the ambient linear map `h` (columns convention), rref'd.
    pub fn apply(&self, h: &ExactMatrix) -> Subspace {
        assert_eq!(h.rows(), self.space.dim_v());
        let image = &self.basis * &h.transpose();
        Subspace { space: self.space.clone(), basis: matrix::row_space_basis(&image) }
    }

    /// Gram matrix of the restricted form on this subspace's basis.
    pub fn restricted_gram(&self) -> ExactMatrix {
        self.space.pair_rows(&self.basis, &self.basis)
    }

    /// Projection onto a factor along the split (zero the other block).
    pub fn project(&self, factor: Factor) -> Subspace {
        let keep = self.space.factor_range(factor);
        let proj = ExactMatrix::from_fn(
            self.basis.rows(),
            self.basis.cols(),
            self.basis.field(),
            |r, c| {
                if keep.contains(&c) {
                    self.basis.at(r, c).clone()
                } else {
                    ExactScalar::zero(self.basis.field())
                }
            },
        );
        Subspace { space: self.space.clone(), basis: matrix::row_space_basis(&proj) }
    }

    /// Intersection with a factor (as a coordinate subspace of `V`).
    pub fn intersect_factor(&self, factor: Factor) -> Subspace {
        let range = self.space.factor_range(factor);
        let field = self.basis.field();
        let d = self.space.dim_v();
        let mut rows = Vec::new();
        for i in 0..d {
            if range.contains(&i) {
                let mut row = vec![ExactScalar::zero(field); d];
                row[i] = ExactScalar::one(field);
                rows.push(row);
            }
        }
        let factor_space = ExactMatrix::from_rows(field, d, rows);
        let basis = matrix::subspace_intersect(&self.basis, &factor_space).expect("same ambient");
        Subspace { space: self.space.clone(), basis }
    }

    /// `Rad(S) = S ∩ S^⊥`: kernel of the restricted Gram, lifted back.
    pub fn radical(&self) -> Subspace {
        let m = self.restricted_gram();
        let alpha = m.transpose().kernel(); // columns: coefficient vectors
        let mut rows = Vec::new();
        let field = self.basis.field();
        for j in 0..alpha.cols() {
            let mut v = vec![ExactScalar::zero(field); self.basis.cols()];
            for i in 0..self.basis.rows() {
                let coef = alpha.at(i, j);
                if coef.is_zero() {
                    continue;
                }
                for c in 0..self.basis.cols() {
                    v[c] = &v[c] + &(coef * self.basis.at(i, c));
                }
            }
            rows.push(v);
        }
        let basis =
            matrix::row_space_basis(&ExactMatrix::from_rows(field, self.basis.cols(), rows));
        Subspace { space: self.space.clone(), basis }
    }

    /// Orthogonal complement inside the whole space.
    pub fn perp(&self) -> Subspace {
        // (x, b_j) = 0 for all j  ⟺  x · (G σ(B)ᵀ) = 0.
        let m = &self.space.gram * &self.basis.conj_transpose();
        let ker = m.transpose().kernel();
        let basis = matrix::row_space_basis(&ker.transpose());
        Subspace { space: self.space.clone(), basis }
    }

    pub fn is_isotropic(&self) -> bool {
        self.restricted_gram().is_zero()
    }

    /// `(s, s+, s-)` of the restricted form; signed cases only.
    pub fn signature(&self) -> Result<IsometryType> {
        if !self.space.case.is_signed() {
            return Err(Error::CaseMismatch(self.space.case.name()));
        }
        let gram = self.restricted_gram();
        let diag = congruence_diagonalize(&gram).diag;
        let mut t = IsometryType { s: 0, s_plus: 0, s_minus: 0 };
        for d in &diag {
            assert!(d.is_rational(), "hermitian diagonal must be rational");
            match d.rational_sign() {
                0 => t.s += 1,
                1 => t.s_plus += 1,
                -1 => t.s_minus += 1,
                _ => unreachable!(),
            }
        }
        Ok(t)
    }

    /// `(radical dimension, rank)` of the restricted form; any case.
    pub fn radical_rank(&self) -> (usize, usize) {
        let gram = self.restricted_gram();
        let rank = gram.rank();
        (self.dim() - rank, rank)
    }
}

/// Result of symmetric/hermitian congruence diagonalization: `c` is the basis
/// change (new rows = `c` times old rows) and `diag` the diagonal Gram values,
/// so `c · M · σ(c)ᵀ = diag(d)`.
#[derive(Debug, Clone)]
pub struct CongruenceDiag {
    pub c: ExactMatrix,
    pub diag: Vec<ExactScalar>,
}

/// Diagonalize a symmetric (or hermitian) Gram matrix by congruence.
///
/// A zero diagonal with a nonzero off-diagonal entry is handled by the
/// characteristic-not-2 move `row_i += λ·row_j` with `λ = 1`, falling back to
/// `λ = i` in the hermitian case when the off-diagonal entry is purely
/// imaginary.
pub fn congruence_diagonalize(gram: &ExactMatrix) -> CongruenceDiag {
    assert!(gram.is_square());
    let k = gram.rows();
    let field = gram.field();
    let hermitian = field == FieldTag::QiHermitian;
    let mut w = gram.clone();
    let mut c = ExactMatrix::identity(k, field);

    // basis_i += λ basis_j, applied to both the transform and the Gram.
    fn axpy(
        w: &mut ExactMatrix,
        c: &mut ExactMatrix,
        i: usize,
        j: usize,
        lambda: &ExactScalar,
    ) {
        let k = w.rows();
        for col in 0..c.cols() {
            let v = c.at(i, col) + &(lambda * c.at(j, col));
            c.set(i, col, v);
        }
        for col in 0..k {
            let v = w.at(i, col) + &(lambda * w.at(j, col));
            w.set(i, col, v);
        }
        let lc = lambda.conj();
        for row in 0..k {
            let v = w.at(row, i) + &(&lc * w.at(row, j));
            w.set(row, i, v);
        }
    }

    fn swap(w: &mut ExactMatrix, c: &mut ExactMatrix, i: usize, j: usize) {
        if i == j {
            return;
        }
        let k = w.rows();
        for col in 0..c.cols() {
            let a = c.at(i, col).clone();
            let b = c.at(j, col).clone();
            c.set(i, col, b);
            c.set(j, col, a);
        }
        for col in 0..k {
            let a = w.at(i, col).clone();
            let b = w.at(j, col).clone();
            w.set(i, col, b);
            w.set(j, col, a);
        }
        for row in 0..k {
            let a = w.at(row, i).clone();
            let b = w.at(row, j).clone();
            w.set(row, i, b);
            w.set(row, j, a);
        }
    }

    let mut step = 0usize;
    while step < k {
        // Prefer an existing nonzero diagonal entry.
        if let Some(p) = (step..k).find(|&r| !w.at(r, r).is_zero()) {
            swap(&mut w, &mut c, step, p);
        } else {
            // Look for a nonzero off-diagonal pair in the trailing block.
            let mut found = None;
            'outer: for i in step..k {
                for j in (i + 1)..k {
                    if !w.at(i, j).is_zero() {
                        found = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let Some((i, j)) = found else {
                break; // trailing block is zero: remaining diagonal entries are 0
            };
            let one = ExactScalar::one(field);
            axpy(&mut w, &mut c, i, j, &one);
            if w.at(i, i).is_zero() {
                // Hermitian with purely imaginary off-diagonal: undo and use λ = i.
                debug_assert!(hermitian);
                axpy(&mut w, &mut c, i, j, &-&one);
                axpy(&mut w, &mut c, i, j, &ExactScalar::i(field));
            }
            debug_assert!(!w.at(i, i).is_zero());
            swap(&mut w, &mut c, step, i);
        }
        let pivot = w.at(step, step).clone();
        for r in (step + 1)..k {
            if !w.at(r, step).is_zero() {
                let lambda = -&(w.at(r, step) / &pivot);
                axpy(&mut w, &mut c, r, step, &lambda);
            }
        }
        step += 1;
    }
    let diag = (0..k).map(|i| w.at(i, i).clone()).collect();
    CongruenceDiag { c, diag }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real_space(p: usize, q: usize, p1: usize, q1: usize) -> Arc<FormSpace> {
        FormSpace::standard(CaseTag::RealOrthogonal, GroupParams::Signature { p, q, p1, q1 })
            .unwrap()
    }

    fn row(space: &Arc<FormSpace>, coords: &[(usize, i64)]) -> ExactMatrix {
        let mut m = ExactMatrix::zero(1, space.dim_v(), space.field());
        for &(c, v) in coords {
            m.set(0, c, ExactScalar::from_int(v, space.field()));
        }
        m
    }

    #[test]
    fn standard_real_orthogonal_2211() {
        let s = real_space(2, 2, 1, 1);
        assert_eq!(s.dim_v(), 4);
        assert_eq!(s.gram(), &ExactMatrix::from_i64(FieldTag::Q, &[
            &[1, 0, 0, 0],
            &[0, -1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, -1],
        ]));
    }

    #[test]
    fn standard_symplectic_n2_m1() {
        let s = FormSpace::standard(CaseTag::Symplectic, GroupParams::Split { n: 2, m: 1 }).unwrap();
        assert_eq!(s.dim_v(), 4);
        let e1 = row(&s, &[(s.coord_e(1), 1)]);
        let f1 = row(&s, &[(s.coord_f(1), 1)]);
        let e2 = row(&s, &[(s.coord_e(2), 1)]);
        let f2 = row(&s, &[(s.coord_f(2), 1)]);
        assert!(s.pair(&e1, &f1).is_one());
        assert!(s.pair(&e2, &f2).is_one());
        assert_eq!(s.pair(&f1, &e1), ExactScalar::from_int(-1, FieldTag::Q));
        assert!(s.pair(&e1, &e2).is_zero());
        assert!(s.pair(&e1, &f2).is_zero());
    }

    #[test]
    fn standard_unitary_2211() {
        let s = FormSpace::standard(
            CaseTag::Unitary,
            GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 },
        )
        .unwrap();
        assert_eq!(s.dim_v(), 4);
        for (k, sign) in [(0usize, 1i64), (1, -1), (2, 1), (3, -1)] {
            assert_eq!(
                s.gram().at(k, k),
                &ExactScalar::from_int(sign, FieldTag::QiHermitian)
            );
        }
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(FormSpace::standard(
            CaseTag::RealOrthogonal,
            GroupParams::Signature { p: 2, q: 2, p1: 0, q1: 1 }
        )
        .is_err());
        assert!(FormSpace::standard(CaseTag::Symplectic, GroupParams::Split { n: 2, m: 2 }).is_err());
    }

    #[test]
    fn projection_of_subspace_inside_u() {
        let sp = real_space(2, 2, 1, 1);
        // S = span(u1+) lives inside U.
        let s = Subspace::new(sp.clone(), row(&sp, &[(0, 1)])).unwrap();
        assert_eq!(s.project(Factor::U), s);
        assert_eq!(s.project(Factor::W).dim(), 0);
    }

    #[test]
    fn projection_is_coordinate_shadow() {
        let sp = real_space(2, 2, 1, 1);
        // S = span(u1+ + w1-): projections are the two coordinate lines.
        let v = row(&sp, &[(0, 1), (3, 1)]);
        let s = Subspace::new(sp.clone(), v).unwrap();
        assert_eq!(s.project(Factor::U), Subspace::new(sp.clone(), row(&sp, &[(0, 1)])).unwrap());
        assert_eq!(s.project(Factor::W), Subspace::new(sp.clone(), row(&sp, &[(3, 1)])).unwrap());
        // Agrees with (S + W) ∩ U.
        let w_block = Subspace::new(
            sp.clone(),
            ExactMatrix::from_i64(FieldTag::Q, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]),
        )
        .unwrap();
        let u_block = Subspace::new(
            sp.clone(),
            ExactMatrix::from_i64(FieldTag::Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
        )
        .unwrap();
        let via_def = s.sum(&w_block).unwrap().intersect(&u_block).unwrap();
        assert_eq!(via_def, s.project(Factor::U));
    }

    #[test]
    fn radical_of_isotropic_is_everything() {
        let sp = real_space(2, 2, 1, 1);
        let s = Subspace::new(sp.clone(), row(&sp, &[(0, 1), (1, 1)])).unwrap();
        assert!(s.is_isotropic());
        assert_eq!(s.radical(), s);
    }

    #[test]
    fn radical_of_nondegenerate_is_zero() {
        let sp = real_space(2, 2, 1, 1);
        let basis = ExactMatrix::from_i64(FieldTag::Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let s = Subspace::new(sp, basis).unwrap();
        assert_eq!(s.radical().dim(), 0);
    }

    #[test]
    fn signature_examples() {
        let sp = real_space(2, 2, 1, 1);
        let pos = Subspace::new(sp.clone(), row(&sp, &[(0, 1)])).unwrap();
        assert_eq!(pos.signature().unwrap(), IsometryType { s: 0, s_plus: 1, s_minus: 0 });
        let iso = Subspace::new(sp.clone(), row(&sp, &[(0, 1), (1, 1)])).unwrap();
        let line = Subspace::new(sp.clone(), row(&sp, &[(0, 1), (1, 1)])).unwrap();
        assert!(line.is_isotropic());
        assert_eq!(iso.signature().unwrap(), IsometryType { s: 1, s_plus: 0, s_minus: 0 });
        let u = Subspace::new(
            sp.clone(),
            ExactMatrix::from_i64(FieldTag::Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
        )
        .unwrap();
        assert_eq!(u.signature().unwrap(), IsometryType { s: 0, s_plus: 1, s_minus: 1 });
    }

    #[test]
    fn isotropic_checks() {
        let sp = real_space(2, 2, 1, 1);
        assert!(Subspace::new(sp.clone(), row(&sp, &[(0, 1), (1, 1)])).unwrap().is_isotropic());
        assert!(!Subspace::new(sp.clone(), row(&sp, &[(0, 1)])).unwrap().is_isotropic());
    }

    #[test]
    fn signature_case_mismatch_errors() {
        let sp = FormSpace::standard(CaseTag::Symplectic, GroupParams::Split { n: 2, m: 1 }).unwrap();
        let s = Subspace::new(sp.clone(), row(&sp, &[(0, 1)])).unwrap();
        assert!(s.signature().is_err());
        assert_eq!(s.radical_rank(), (1, 0));
    }

    #[test]
    fn perp_dimension() {
        let sp = real_space(2, 2, 1, 1);
        let s = Subspace::new(sp.clone(), row(&sp, &[(0, 1), (1, 1)])).unwrap();
        let perp = s.perp();
        assert_eq!(perp.dim(), 3);
        assert!(perp.contains(&s));
    }

    #[test]
    fn dependent_rows_rejected() {
        let sp = real_space(2, 2, 1, 1);
        let m = ExactMatrix::from_i64(FieldTag::Q, &[&[1, 0, 0, 1], &[2, 0, 0, 2]]);
        assert!(matches!(Subspace::new(sp, m), Err(Error::DependentBasis)));
    }

    #[test]
    fn hermitian_congruence_with_imaginary_offdiagonal() {
        // Gram [[0, i], [-i, 0]] needs the λ = i pivot move.
        let f = FieldTag::QiHermitian;
        let i = ExactScalar::i(f);
        let zero = ExactScalar::zero(f);
        let gram = ExactMatrix::from_rows(
            f,
            2,
            vec![vec![zero.clone(), i.clone()], vec![-&i, zero.clone()]],
        );
        let d = congruence_diagonalize(&gram);
        let lhs = &(&d.c * &gram) * &d.c.conj_transpose();
        for r in 0..2 {
            for c in 0..2 {
                if r == c {
                    assert_eq!(lhs.at(r, c), &d.diag[r]);
                    assert!(d.diag[r].is_rational());
                } else {
                    assert!(lhs.at(r, c).is_zero());
                }
            }
        }
        let signs: Vec<i32> = d.diag.iter().map(|x| x.rational_sign()).collect();
        assert_eq!(signs.iter().filter(|&&s| s > 0).count(), 1);
        assert_eq!(signs.iter().filter(|&&s| s < 0).count(), 1);
    }
}
