//! Infinitesimal isometries and the tangent-space orbit-dimension oracle.
//!
//! For each factor the Lie algebra `{A : σ(A)ᵀ·G + G·A = 0}` has an explicit
//! basis (assembled from elementary matrices against the fixed Gram), and the
//! orbit dimension of an isotropic subspace is the exact rank of the linear
//! map sending an algebra element to its action on the subspace modulo the
//! subspace. Real cases are ranked over the rationals (the hermitian case
//! after realification, giving real dimensions); the split orthogonal case is
//! ranked over the Gaussian rationals, giving field dimensions.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::orbits::dim_group;
use crate::scalar::{ExactScalar, FieldTag};
use crate::space::{CaseTag, Factor, FormSpace, Subspace};

/// Basis of one factor's isometry Lie algebra over the reporting field.
#[derive(Debug, Clone)]
pub struct LieAlgebraBasis {
    pub case: CaseTag,
    pub factor: Factor,
    pub basis: Vec<ExactMatrix>,
}

/// `E_ij − E_ji` (antisymmetric elementary).
fn antisym(d: usize, field: FieldTag, i: usize, j: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zero(d, d, field);
    m.set(i, j, ExactScalar::one(field));
    m.set(j, i, ExactScalar::from_int(-1, field));
    m
}

/// `E_ij + E_ji` (symmetric elementary; `i = j` gives `E_ii`).
fn sym(d: usize, field: FieldTag, i: usize, j: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zero(d, d, field);
    if i == j {
        m.set(i, i, ExactScalar::one(field));
    } else {
        m.set(i, j, ExactScalar::one(field));
        m.set(j, i, ExactScalar::one(field));
    }
    m
}

/// Explicit basis of `{A : σ(A)ᵀ·G + G·A = 0}` for one factor.
///
/// The element count always equals the factor's closed-form group dimension;
/// this is asserted. Over the hermitian field the basis is a basis over the
/// rationals (realified count), matching real group dimensions.
pub fn lie_algebra(space: &FormSpace, factor: Factor) -> LieAlgebraBasis {
    let g = space.factor_gram(factor);
    let d = g.rows();
    let field = space.field();
    let mut basis = Vec::new();
    match space.case {
        CaseTag::RealOrthogonal => {
            for i in 0..d {
                for j in (i + 1)..d {
                    basis.push(&g * &antisym(d, field, i, j));
                }
            }
        }
        CaseTag::Unitary => {
            // A = G(K + iS): K antisymmetric, S symmetric, both rational.
            for i in 0..d {
                for j in (i + 1)..d {
                    basis.push(&g * &antisym(d, field, i, j));
                }
            }
            let iu = ExactScalar::i(field);
            for i in 0..d {
                for j in i..d {
                    basis.push(&g * &sym(d, field, i, j).scale(&iu));
                }
            }
        }
        CaseTag::ComplexOrthogonal => {
            for i in 0..d {
                for j in (i + 1)..d {
                    basis.push(antisym(d, field, i, j));
                }
            }
        }
        CaseTag::Symplectic => {
            for i in 0..d {
                for j in i..d {
                    basis.push(&g * &sym(d, field, i, j));
                }
            }
        }
    }
    let expected = factor_dim(space, factor);
    assert_eq!(basis.len(), expected, "algebra basis count must match the group dimension");
    for a in &basis {
        debug_assert!((&(&a.conj_transpose() * &g) + &(&g * a)).is_zero());
    }
    LieAlgebraBasis { case: space.case, factor, basis }
}

/// Closed-form dimension of one factor of the group.
pub fn factor_dim(space: &FormSpace, factor: Factor) -> usize {
    let d = space.dim_factor(factor);
    match space.case {
        CaseTag::RealOrthogonal | CaseTag::ComplexOrthogonal => d * (d - 1) / 2,
        CaseTag::Unitary => d * d,
        CaseTag::Symplectic => (d / 2) * (d + 1),
    }
}

/// Reduce the row vector `v` modulo the echelon row space of `basis` and
/// return its coordinates on the non-pivot columns.
fn quotient_coords(
    basis: &ExactMatrix,
    pivots: &[usize],
    free: &[usize],
    v: &[ExactScalar],
) -> Vec<ExactScalar> {
    let mut w: Vec<ExactScalar> = v.to_vec();
    for (i, &p) in pivots.iter().enumerate() {
        if w[p].is_zero() {
            continue;
        }
        let coef = w[p].clone();
        for c in 0..basis.cols() {
            let e = basis.at(i, c);
            if !e.is_zero() {
                w[c] = &w[c] - &(&coef * e);
            }
        }
    }
    free.iter().map(|&c| w[c].clone()).collect()
}

/// Exact orbit dimension of the identity-component action at `s`: the rank
/// of `A ↦ (A·s_1, …, A·s_r) mod S` over the combined factor algebras.
pub fn tangent_orbit_dim(s: &Subspace) -> Result<usize> {
    if !s.is_isotropic() {
        return Err(Error::NotIsotropic);
    }
    let space = s.space();
    let d = space.dim_v();
    let field = space.field();
    let hermitian = field == FieldTag::QiHermitian;
    let echelon = s.basis(); // already rref
    let pivots: Vec<usize> = {
        // recover pivots of the canonical basis: first nonzero entry per row
        (0..echelon.rows())
            .map(|r| (0..d).find(|&c| !echelon.at(r, c).is_zero()).expect("nonzero row"))
            .collect()
    };
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();

    let mut blocks: Vec<ExactMatrix> = Vec::new();
    for factor in [Factor::U, Factor::W] {
        let alg = lie_algebra(space, factor);
        let range = space.factor_range(factor);
        for a in alg.basis {
            let mut big = ExactMatrix::zero(d, d, field);
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    let v = a.at(i, j);
                    if !v.is_zero() {
                        big.set(range.start + i, range.start + j, v.clone());
                    }
                }
            }
            blocks.push(big);
        }
    }

    let r = s.dim();
    let real_cols = r * free.len() * if hermitian { 2 } else { 1 };
    let out_field = if field == FieldTag::QiBilinear { FieldTag::QiBilinear } else { FieldTag::Q };
    let mut rows: Vec<Vec<ExactScalar>> = Vec::with_capacity(blocks.len());
    for a in &blocks {
        let image = echelon * &a.transpose(); // row i = action on s_i
        let mut flat: Vec<ExactScalar> = Vec::with_capacity(real_cols);
        for i in 0..r {
            let coords = quotient_coords(echelon, &pivots, &free, image.row(i));
            for c in coords {
                if hermitian {
                    flat.push(ExactScalar::rational(c.re().clone(), FieldTag::Q));
                    flat.push(ExactScalar::rational(c.im().clone(), FieldTag::Q));
                } else if field == FieldTag::Q {
                    flat.push(c);
                } else {
                    flat.push(c);
                }
            }
        }
        rows.push(flat);
    }
    let mat = ExactMatrix::from_rows(out_field, real_cols, rows);
    Ok(mat.rank())
}

/// Dimension of the infinitesimal stabilizer `{A ∈ 𝔥 : A·S ⊆ S}`.
pub fn tangent_stabilizer_dim(s: &Subspace) -> Result<usize> {
    let space = s.space();
    let total = dim_group(space.case, space.params);
    Ok(total - tangent_orbit_dim(s)?)
}

/// Brute-force check (test helper): solve the defining linear system for the
/// factor algebra by a generic kernel computation and compare dimensions.
pub fn lie_algebra_dim_by_kernel(space: &FormSpace, factor: Factor) -> usize {
    let g = space.factor_gram(factor);
    let d = g.rows();
    let field = space.field();
    let hermitian = field == FieldTag::QiHermitian;
    // Unknowns: entries of A (realified when hermitian). Equations:
    // σ(A)ᵀG + GA = 0, entrywise.
    let unknowns = d * d * if hermitian { 2 } else { 1 };
    let mut rows: Vec<Vec<ExactScalar>> = Vec::new();
    let q = FieldTag::Q;
    let out_field = if field == FieldTag::QiBilinear { field } else { q };
    for r in 0..d {
        for c in 0..d {
            // sum_k conj(A[k][r]) G[k][c] + G[r][k] A[k][c] = 0
            if hermitian {
                let mut re_row = vec![ExactScalar::zero(q); unknowns];
                let mut im_row = vec![ExactScalar::zero(q); unknowns];
                for k in 0..d {
                    let gkc = g.at(k, c).re().clone();
                    let grk = g.at(r, k).re().clone();
                    // conj(A[k][r]) = x[k][r] - i y[k][r]
                    let idx = k * d + r;
                    re_row[2 * idx] = &re_row[2 * idx] + &ExactScalar::rational(gkc.clone(), q);
                    im_row[2 * idx + 1] =
                        &im_row[2 * idx + 1] - &ExactScalar::rational(gkc.clone(), q);
                    let idx2 = k * d + c;
                    re_row[2 * idx2] = &re_row[2 * idx2] + &ExactScalar::rational(grk.clone(), q);
                    im_row[2 * idx2 + 1] =
                        &im_row[2 * idx2 + 1] + &ExactScalar::rational(grk.clone(), q);
                }
                rows.push(re_row);
                rows.push(im_row);
            } else {
                let mut row = vec![ExactScalar::zero(out_field); unknowns];
                for k in 0..d {
                    let idx = k * d + r;
                    row[idx] = &row[idx] + g.at(k, c);
                    let idx2 = k * d + c;
                    row[idx2] = &row[idx2] + g.at(r, k);
                }
                rows.push(row);
            }
        }
    }
    let m = ExactMatrix::from_rows(out_field, unknowns, rows);
    unknowns - m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::OrbitParams;
    use crate::orbits::canonical_rep;
    use crate::space::GroupParams;

    #[test]
    fn algebra_counts_match_group_dims() {
        let s = FormSpace::standard(
            CaseTag::RealOrthogonal,
            GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 },
        )
        .unwrap();
        assert_eq!(lie_algebra(&s, Factor::U).basis.len(), 1);
        let u = FormSpace::standard(
            CaseTag::Unitary,
            GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 },
        )
        .unwrap();
        assert_eq!(lie_algebra(&u, Factor::U).basis.len(), 4);
        let sy = FormSpace::standard(CaseTag::Symplectic, GroupParams::Split { n: 2, m: 1 }).unwrap();
        assert_eq!(lie_algebra(&sy, Factor::U).basis.len(), 3);
    }

    #[test]
    fn algebra_matches_generic_kernel_solution() {
        for (case, params) in [
            (CaseTag::RealOrthogonal, GroupParams::Signature { p: 3, q: 2, p1: 2, q1: 1 }),
            (CaseTag::Unitary, GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 }),
            (CaseTag::ComplexOrthogonal, GroupParams::Split { n: 5, m: 2 }),
            (CaseTag::Symplectic, GroupParams::Split { n: 3, m: 1 }),
        ] {
            let s = FormSpace::standard(case, params).unwrap();
            for factor in [Factor::U, Factor::W] {
                let explicit = lie_algebra(&s, factor).basis.len();
                let solved = lie_algebra_dim_by_kernel(&s, factor);
                assert_eq!(explicit, solved, "case {case}");
            }
        }
    }

    #[test]
    fn tangent_dims_match_small_examples() {
        let c = CaseTag::RealOrthogonal;
        let p = GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 };
        let s = canonical_rep(c, p, &OrbitParams::signed(c, 0, 0, 1, 0, 0)).unwrap();
        assert_eq!(tangent_orbit_dim(&s).unwrap(), 1);
        let s = canonical_rep(c, p, &OrbitParams::signed(c, 0, 0, 0, 1, 0)).unwrap();
        assert_eq!(tangent_orbit_dim(&s).unwrap(), 2);

        let u = CaseTag::Unitary;
        let s = canonical_rep(u, p, &OrbitParams::signed(u, 0, 0, 0, 1, 0)).unwrap();
        assert_eq!(tangent_orbit_dim(&s).unwrap(), 5);
    }

    #[test]
    fn tangent_requires_isotropic() {
        let sp = FormSpace::standard(
            CaseTag::RealOrthogonal,
            GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 },
        )
        .unwrap();
        let mut m = ExactMatrix::zero(1, 4, FieldTag::Q);
        m.set(0, 0, ExactScalar::one(FieldTag::Q));
        let s = Subspace::new(sp, m).unwrap();
        assert!(matches!(tangent_orbit_dim(&s), Err(Error::NotIsotropic)));
    }
}
