//! Constructive isometry extension: given a pairing-preserving bijection
//! between two vector lists in one factor, produce a full isometry of that
//! factor restricting to it. This is the classical extension theorem, run
//! entirely inside the base field.
//!
//! Shape of the construction: the span's radical is first completed with
//! isotropic dual vectors on both sides (making the spans nondegenerate and
//! keeping the two Grams equal), then the lists are orthogonalized by a
//! common coefficient transform and matched one vector at a time through
//! explicit rank-two isometries; the symplectic case instead completes both
//! lists to full standard bases. Degenerate two-dimensional configurations
//! are handled by a unit scaling on a line followed by a transvection.

use crate::error::{Error, Result};
use crate::matrix::{self, ExactMatrix};
use crate::scalar::ExactScalar;
use crate::space::{congruence_diagonalize, CaseTag, Factor, FormSpace};

/// Pairing of row lists against an explicit Gram matrix.
fn pair(gram: &ExactMatrix, a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    &(a * gram) * &b.conj_transpose()
}

fn pair_one(gram: &ExactMatrix, a: &ExactMatrix, b: &ExactMatrix) -> ExactScalar {
    pair(gram, a, b).at(0, 0).clone()
}

/// Basis rows of `{v : (p, v) = 0 for all rows p}`.
fn perp_rows(gram: &ExactMatrix, rows: &ExactMatrix) -> ExactMatrix {
    let m = rows * gram; // (p, v) = row · G · σ(v)ᵀ
    let ker = m.kernel(); // columns are σ(v)ᵀ
    matrix::row_space_basis(&ker.transpose().conj())
}

/// Solve for a row vector `u` with prescribed pairings `(rows_i, u) = rhs_i`.
fn solve_pairings(gram: &ExactMatrix, rows: &ExactMatrix, rhs: &[ExactScalar]) -> Option<ExactMatrix> {
    // (r, u) = r · G · σ(u)ᵀ, so the unknown is σ(u)ᵀ.
    let coef = rows * gram;
    let mut b = ExactMatrix::zero(rhs.len(), 1, gram.field());
    for (i, v) in rhs.iter().enumerate() {
        b.set(i, 0, v.clone());
    }
    let x = coef.solve(&b)?;
    Some(x.transpose().conj())
}

/// The linear map that is `μ` on the anisotropic line through `x` and the
/// identity on `x`-perp; an isometry whenever `N(μ) = 1`.
fn line_scaling(gram: &ExactMatrix, x: &ExactMatrix, mu: &ExactScalar) -> ExactMatrix {
    let d = gram.rows();
    let field = gram.field();
    let n = pair_one(gram, x, x);
    debug_assert!(!n.is_zero());
    // v ↦ v + (μ-1)·(v,x)/n · x, as a matrix acting on columns. With row
    // pairings (v, x) = Σ_c v_c · (G·σ(x)ᵀ)_c.
    let mut g = ExactMatrix::identity(d, field);
    let coef = &(mu - &ExactScalar::one(field)) / &n;
    let gx = gram * &x.conj_transpose();
    for r in 0..d {
        for c in 0..d {
            let add = &(&coef * x.at(0, r)) * gx.at(c, 0);
            if !add.is_zero() {
                let v = g.at(r, c) + &add;
                g.set(r, c, v);
            }
        }
    }
    g
}

/// Transvection fixing `{w, u}`-perp: `v ↦ v + (v,w)·u − (v,u)·w − κ/2·(v,w)·w`
/// with `w` isotropic, `u ⊥ w`, `κ = (u,u)`. An exact isometry.
fn transvection(gram: &ExactMatrix, w: &ExactMatrix, u: &ExactMatrix) -> ExactMatrix {
    let d = gram.rows();
    let field = gram.field();
    debug_assert!(pair_one(gram, w, w).is_zero());
    debug_assert!(pair_one(gram, w, u).is_zero());
    let kappa = pair_one(gram, u, u);
    let half = ExactScalar::from_ratio(1, 2, field);
    let gw = gram * &w.conj_transpose(); // v ↦ (v,w) coefficients
    let gu = gram * &u.conj_transpose();
    let mut g = ExactMatrix::identity(d, field);
    for r in 0..d {
        for c in 0..d {
            let vw = gw.at(c, 0);
            let vu = gu.at(c, 0);
            let mut add = &(u.at(0, r) * vw) - &(w.at(0, r) * vu);
            add = &add - &(&(&(&half * &kappa) * vw) * w.at(0, r));
            if !add.is_zero() {
                let v = g.at(r, c) + &add;
                g.set(r, c, v);
            }
        }
    }
    g
}

/// An isometry sending `x` to `y`, assuming `(x,x) = (y,y) ≠ 0`. Rows in
/// `fixed` must pair to zero with both `x` and `y`; they are left pointwise
/// fixed (the degenerate configuration constrains its transvection on them
/// explicitly).
fn map_vector(
    gram: &ExactMatrix,
    x: &ExactMatrix,
    y: &ExactMatrix,
    fixed: &ExactMatrix,
) -> Result<ExactMatrix> {
    let d = gram.rows();
    let field = gram.field();
    if x == y {
        return Ok(ExactMatrix::identity(d, field));
    }
    let n = pair_one(gram, x, x);
    let ny = pair_one(gram, y, y);
    if n != ny || n.is_zero() {
        return Err(Error::NotIsometry);
    }
    let c = pair_one(gram, x, y);
    // Is y on the line through x?
    let xy = x.vstack(y);
    if xy.rank() == 1 {
        // y = μ x with N(μ) = 1; scale the line.
        let mu = {
            // match on the first nonzero coordinate
            let j = (0..d).find(|&j| !x.at(0, j).is_zero()).expect("x nonzero");
            y.at(0, j) / x.at(0, j)
        };
        let g = line_scaling(gram, x, &mu);
        return Ok(g);
    }
    let m = &n - &(&(&c * &c.conj()) / &n);
    if !m.is_zero() {
        // Nondegenerate plane: map the basis (x, w) to (y, w') where
        // w = y − σ(c)/n·x and w' = x − c/n·y share the pairing table.
        let w = y - &x.scale(&(&c.conj() / &n));
        let wp = x - &y.scale(&(&c / &n));
        let plane = x.vstack(&w);
        let image = y.vstack(&wp);
        let comp = perp_rows(gram, &plane);
        let t_dom = plane.vstack(&comp);
        let t_img = image.vstack(&comp);
        let inv = t_dom
            .transpose()
            .inverse()
            .ok_or_else(|| Error::Inconsistency("plane completion is singular".into()))?;
        return Ok(&t_img.transpose() * &inv);
    }
    // Degenerate plane: y = μx + w with N(μ) = 1 and w ≠ 0 isotropic,
    // w ⊥ x, w ⊥ y. Scale the line by μ, then add w by a transvection.
    let mu = &c.conj() / &n;
    debug_assert!((&mu * &mu.conj()).is_one());
    let w = y - &x.scale(&mu);
    debug_assert!(pair_one(gram, &w, &w).is_zero());
    debug_assert!(pair_one(gram, x, &w).is_zero());
    // u drives the transvection: with E(v) = v + (v,w)u − (v,u)w − κ/2 (v,w)w
    // and (x,w) = 0, E(μx) = μx − μ(x,u)·w, so require (x, u) = −σ(μ). The
    // fixed rows must not feel E, so they pair to zero with u as well.
    let rows = x.vstack(&w).vstack(fixed);
    let mut rhs = vec![-&mu.conj(), ExactScalar::zero(field)];
    rhs.extend(vec![ExactScalar::zero(field); fixed.rows()]);
    let u = solve_pairings(gram, &rows, &rhs)
        .ok_or_else(|| Error::Inconsistency("transvection system unsolvable".into()))?;
    let e = transvection(gram, &w, &u);
    let phi = line_scaling(gram, x, &mu);
    Ok(&e * &phi)
}

/// Append isotropic duals for the radical of the span of `rows`, returning
/// `(adapted rows, transform)` where the adapted list is
/// `[nondegenerate part | radical part]` obtained by an invertible
/// coefficient transform common to any equal-Gram list.
fn radical_adapted_transform(gram: &ExactMatrix, rows: &ExactMatrix) -> ExactMatrix {
    let m = pair(gram, rows, rows);
    let rad_coeff = m.transpose().kernel(); // columns: radical coefficients
    let rad_rows = matrix::row_space_basis(&rad_coeff.transpose());
    let k = rows.rows();
    let id = ExactMatrix::identity(k, gram.field());
    let extension = matrix::extend_basis(&rad_rows, &id);
    // order: [complement | radical]
    extension.vstack(&rad_rows)
}

/// Build isotropic duals `d_j` to the radical vectors of the adapted list:
/// `(ρ_j, d_i) = δ_ij`, zero pairings against the rest of the list and the
/// previous duals, and `(d_i, d_i) = 0`.
fn radical_duals(
    gram: &ExactMatrix,
    nonrad: &ExactMatrix,
    rad: &ExactMatrix,
) -> Result<ExactMatrix> {
    let field = gram.field();
    let d = gram.rows();
    let mut duals = ExactMatrix::zero(0, d, field);
    let symplectic_like = {
        // alternating form: (v, v) = 0 identically
        let mut alt = true;
        for i in 0..gram.rows() {
            if !gram.at(i, i).is_zero() {
                alt = false;
                break;
            }
        }
        alt && gram.conj_transpose() == -gram
    };
    for i in 0..rad.rows() {
        let mut rows = rad.clone();
        let mut rhs = vec![ExactScalar::zero(field); rad.rows()];
        rhs[i] = ExactScalar::one(field);
        rows = rows.vstack(nonrad);
        rhs.extend(vec![ExactScalar::zero(field); nonrad.rows()]);
        rows = rows.vstack(&duals);
        rhs.extend(vec![ExactScalar::zero(field); duals.rows()]);
        let mut u = solve_pairings(gram, &rows, &rhs)
            .ok_or_else(|| Error::Inconsistency("radical dual system unsolvable".into()))?;
        if !symplectic_like {
            let kappa = pair_one(gram, &u, &u);
            if !kappa.is_zero() {
                let half = ExactScalar::from_ratio(1, 2, field);
                u = &u - &rad.row_vec(i).scale(&(&half * &kappa));
            }
        }
        debug_assert!(pair_one(gram, &u, &u).is_zero());
        duals = duals.vstack(&u);
    }
    Ok(duals)
}

/// Complete a list carrying the standard interleaved hyperbolic pairing
/// `(e_1, f_1, e_2, f_2, …)` to a full symplectic basis of the factor.
fn complete_symplectic_basis(gram: &ExactMatrix, list: &ExactMatrix) -> Result<ExactMatrix> {
    let d = gram.rows();
    let field = gram.field();
    let mut basis = list.clone();
    // Reduce a candidate against the current pairs.
    let reduce = |basis: &ExactMatrix, v: &ExactMatrix| -> ExactMatrix {
        let mut v = v.clone();
        let npairs = basis.rows() / 2;
        for p in 0..npairs {
            let e = basis.row_vec(2 * p);
            let f = basis.row_vec(2 * p + 1);
            let ve = pair_one(gram, &v, &e);
            let vf = pair_one(gram, &v, &f);
            // v' = v − (v,f)·e + (v,e)·f kills both pairings since (e,f) = 1
            v = &v - &e.scale(&vf);
            v = &v - &f.scale(&-&ve);
        }
        v
    };
    while basis.rows() < d {
        let mut new_e = None;
        for j in 0..d {
            let mut cand = ExactMatrix::zero(1, d, field);
            cand.set(0, j, ExactScalar::one(field));
            let red = reduce(&basis, &cand);
            if !red.is_zero() && !matrix::in_row_space(&basis, &red) {
                new_e = Some(red);
                break;
            }
        }
        let e = new_e.ok_or_else(|| Error::Inconsistency("symplectic completion stalled".into()))?;
        let mut partner = None;
        for j in 0..d {
            let mut cand = ExactMatrix::zero(1, d, field);
            cand.set(0, j, ExactScalar::one(field));
            let red = reduce(&basis, &cand);
            let pe = pair_one(gram, &e, &red);
            if !pe.is_zero() {
                partner = Some(red.scale(&pe.inv()));
                break;
            }
        }
        let f = partner
            .ok_or_else(|| Error::Inconsistency("no symplectic partner found".into()))?;
        debug_assert!(pair_one(gram, &e, &f).is_one());
        basis = basis.vstack(&e).vstack(&f);
    }
    Ok(basis)
}

/// Coefficient transform bringing a nondegenerate alternating Gram to the
/// standard interleaved pair form: `C · M · Cᵀ = J`.
pub fn symplectic_transform(gram_list: &ExactMatrix) -> Result<ExactMatrix> {
    symplectic_gs(gram_list)
}

fn symplectic_gs(gram_list: &ExactMatrix) -> Result<ExactMatrix> {
    let k = gram_list.rows();
    let field = gram_list.field();
    let mut c = ExactMatrix::identity(k, field);
    let mut w = gram_list.clone();
    let mut done = 0usize;
    while done < k {
        // find a partner column for row `done`
        let j = (done..k)
            .find(|&j| !w.at(done, j).is_zero())
            .ok_or_else(|| Error::Inconsistency("degenerate alternating block".into()))?;
        // normalize the pair so (e, f) = 1, bring partner next to it
        let scale = w.at(done, j).inv();
        // rows operate on both c and w (congruence)
        let apply_scale = |mat: &mut ExactMatrix, row: usize, s: &ExactScalar| {
            for col in 0..mat.cols() {
                let v = mat.at(row, col) * s;
                mat.set(row, col, v);
            }
        };
        // scale row j
        apply_scale(&mut c, j, &scale);
        apply_scale(&mut w, j, &scale);
        for col in 0..k {
            let v = w.at(col, j) * &scale.conj();
            w.set(col, j, v);
        }
        // swap j into position done+1
        let target = done + 1;
        if j != target {
            for col in 0..c.cols() {
                let a = c.at(j, col).clone();
                let b = c.at(target, col).clone();
                c.set(j, col, b);
                c.set(target, col, a);
            }
            for col in 0..k {
                let a = w.at(j, col).clone();
                let b = w.at(target, col).clone();
                w.set(j, col, b);
                w.set(target, col, a);
            }
            for row in 0..k {
                let a = w.at(row, j).clone();
                let b = w.at(row, target).clone();
                w.set(row, j, b);
                w.set(row, target, a);
            }
        }
        // eliminate pairings of the rest against the pair (done, done+1)
        for r in (done + 2)..k {
            let re = w.at(r, done).clone();
            let rf = w.at(r, done + 1).clone();
            if !rf.is_zero() {
                // v -= (v,f)·e  with (e,f)=1: adjust row r by -rf * row done
                let lam = -&rf;
                for col in 0..c.cols() {
                    let v = c.at(r, col) + &(&lam * c.at(done, col));
                    c.set(r, col, v);
                }
                for col in 0..k {
                    let v = w.at(r, col) + &(&lam * w.at(done, col));
                    w.set(r, col, v);
                }
                let lc = lam.conj();
                for row in 0..k {
                    let v = w.at(row, r) + &(&lc * w.at(row, done));
                    w.set(row, r, v);
                }
            }
            let re = if rf.is_zero() { re } else { w.at(r, done).clone() };
            if !re.is_zero() {
                // v += (v,e)·f
                let lam = re;
                for col in 0..c.cols() {
                    let v = c.at(r, col) + &(&lam * c.at(done + 1, col));
                    c.set(r, col, v);
                }
                for col in 0..k {
                    let v = w.at(r, col) + &(&lam * w.at(done + 1, col));
                    w.set(r, col, v);
                }
                let lc = lam.conj();
                for row in 0..k {
                    let v = w.at(row, r) + &(&lc * w.at(row, done + 1));
                    w.set(row, r, v);
                }
            }
        }
        done += 2;
    }
    Ok(c)
}

/// Extend the pairing-preserving map `domain_i ↦ image_i` (rows in factor
/// coordinates) to a full isometry `g` of the factor: `σ(g)ᵀ·G·g = G` and
/// `g` sends each domain row to its image row.
pub fn witt_extend(
    space: &FormSpace,
    factor: Factor,
    domain: &ExactMatrix,
    image: &ExactMatrix,
) -> Result<ExactMatrix> {
    let gram = space.factor_gram(factor);
    let d = gram.rows();
    if domain.cols() != d || image.cols() != d || domain.rows() != image.rows() {
        return Err(Error::Shape(format!(
            "domain {}x{}, image {}x{}, factor dimension {}",
            domain.rows(),
            domain.cols(),
            image.rows(),
            image.cols(),
            d
        )));
    }
    let k = domain.rows();
    if domain.rank() < k || image.rank() < k {
        return Err(Error::DependentBasis);
    }
    if pair(&gram, domain, domain) != pair(&gram, image, image) {
        return Err(Error::NotIsometry);
    }
    // Adapt both lists by the same coefficient transform so the radical of
    // the span sits at the tail, then append isotropic duals on both sides.
    let t = radical_adapted_transform(&gram, domain);
    let dom = &t * domain;
    let img = &t * image;
    let rad_count = {
        let m = pair(&gram, &dom, &dom);
        let k = dom.rows();
        let mut rad = 0;
        for i in (0..k).rev() {
            if (0..k).all(|j| m.at(i, j).is_zero()) {
                rad += 1;
            } else {
                break;
            }
        }
        rad
    };
    let split = dom.rows() - rad_count;
    let dom_nonrad = dom.submatrix(0, split, 0, d);
    let dom_rad = dom.submatrix(split, dom.rows(), 0, d);
    let img_nonrad = img.submatrix(0, split, 0, d);
    let img_rad = img.submatrix(split, img.rows(), 0, d);
    let dom_duals = radical_duals(&gram, &dom_nonrad, &dom_rad)?;
    let img_duals = radical_duals(&gram, &img_nonrad, &img_rad)?;
    let dom_full = dom.vstack(&dom_duals);
    let img_full = img.vstack(&img_duals);
    debug_assert_eq!(pair(&gram, &dom_full, &dom_full), pair(&gram, &img_full, &img_full));

    let g = if space.case == CaseTag::Symplectic {
        let c = symplectic_gs(&pair(&gram, &dom_full, &dom_full))?;
        let dom_pairs = &c * &dom_full;
        let img_pairs = &c * &img_full;
        let dom_basis = complete_symplectic_basis(&gram, &dom_pairs)?;
        let img_basis = complete_symplectic_basis(&gram, &img_pairs)?;
        debug_assert_eq!(pair(&gram, &dom_basis, &dom_basis), pair(&gram, &img_basis, &img_basis));
        let inv = dom_basis
            .transpose()
            .inverse()
            .ok_or_else(|| Error::Inconsistency("incomplete symplectic basis".into()))?;
        &img_basis.transpose() * &inv
    } else {
        // Orthogonalize the (now nondegenerate) common Gram and match the
        // vectors one by one with plane isometries.
        let diag = congruence_diagonalize(&pair(&gram, &dom_full, &dom_full));
        let dom_orth = &diag.c * &dom_full;
        let img_orth = &diag.c * &img_full;
        let mut g = ExactMatrix::identity(d, gram.field());
        let mut current = dom_orth.clone();
        for i in 0..current.rows() {
            let x = current.row_vec(i);
            let y = img_orth.row_vec(i);
            let matched = img_orth.submatrix(0, i, 0, d);
            let tau = map_vector(&gram, &x, &y, &matched)?;
            current = &current * &tau.transpose();
            g = &tau * &g;
        }
        g
    };
    if !space.is_factor_isometry(factor, &g) {
        return Err(Error::Inconsistency("extension is not an isometry".into()));
    }
    if &(domain * &g.transpose()) != image {
        return Err(Error::Inconsistency("extension does not restrict to the map".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldTag;
    use crate::space::GroupParams;

    fn real_space(p: usize, q: usize, p1: usize, q1: usize) -> std::sync::Arc<FormSpace> {
        FormSpace::standard(CaseTag::RealOrthogonal, GroupParams::Signature { p, q, p1, q1 })
            .unwrap()
    }

    #[test]
    fn whole_factor_domain_returns_the_map() {
        let sp = real_space(3, 3, 2, 1);
        let g = space_factor_identityish(&sp);
        let d = 3;
        let dom = ExactMatrix::identity(d, FieldTag::Q);
        let img = &dom * &g.transpose();
        let ext = witt_extend(&sp, Factor::U, &dom, &img).unwrap();
        assert_eq!(ext, g);
    }

    // A handy nontrivial isometry of the U factor of O(2,1)-type blocks.
    fn space_factor_identityish(sp: &FormSpace) -> ExactMatrix {
        // U factor has Gram diag(1,1,-1); use a rational boost in coords (0,2).
        let mut g = ExactMatrix::identity(3, FieldTag::Q);
        g.set(0, 0, ExactScalar::from_ratio(5, 3, FieldTag::Q));
        g.set(0, 2, ExactScalar::from_ratio(4, 3, FieldTag::Q));
        g.set(2, 0, ExactScalar::from_ratio(4, 3, FieldTag::Q));
        g.set(2, 2, ExactScalar::from_ratio(5, 3, FieldTag::Q));
        assert!(sp.is_factor_isometry(Factor::U, &g));
        g
    }

    #[test]
    fn hyperbolic_rotation_from_one_vector() {
        // U = R^{1,1}: u1+ ↦ (5/3)u1+ + (4/3)u1-, norm (25-16)/9 = 1.
        let sp = real_space(2, 2, 1, 1);
        let dom = ExactMatrix::from_i64(FieldTag::Q, &[&[1, 0]]);
        let mut img = ExactMatrix::zero(1, 2, FieldTag::Q);
        img.set(0, 0, ExactScalar::from_ratio(5, 3, FieldTag::Q));
        img.set(0, 1, ExactScalar::from_ratio(4, 3, FieldTag::Q));
        let g = witt_extend(&sp, Factor::U, &dom, &img).unwrap();
        assert!(sp.is_factor_isometry(Factor::U, &g));
        assert_eq!(&dom * &g.transpose(), img);
    }

    #[test]
    fn pairing_mismatch_is_rejected() {
        // u1+ ↦ u1- has norms 1 vs -1.
        let sp = real_space(2, 2, 1, 1);
        let dom = ExactMatrix::from_i64(FieldTag::Q, &[&[1, 0]]);
        let img = ExactMatrix::from_i64(FieldTag::Q, &[&[0, 1]]);
        assert!(matches!(witt_extend(&sp, Factor::U, &dom, &img), Err(Error::NotIsometry)));
    }

    #[test]
    fn isotropic_line_maps_extend() {
        // W factor of O(2,2;1,1) is R^{1,1}: map the isotropic w+ + w- to
        // its rescale (an isometry of the line pair structure).
        let sp = real_space(2, 2, 1, 1);
        let dom = ExactMatrix::from_i64(FieldTag::Q, &[&[1, 1]]);
        let img = ExactMatrix::from_i64(FieldTag::Q, &[&[2, 2]]);
        let g = witt_extend(&sp, Factor::W, &dom, &img).unwrap();
        assert!(sp.is_factor_isometry(Factor::W, &g));
        assert_eq!(&dom * &g.transpose(), img);
    }

    #[test]
    fn symplectic_extension() {
        let sp =
            FormSpace::standard(CaseTag::Symplectic, GroupParams::Split { n: 3, m: 2 }).unwrap();
        // U factor is 4-dimensional symplectic: map e1 ↦ e1 + f2 (isotropic
        // to isotropic, consistent pairings), extend.
        let mut dom = ExactMatrix::zero(1, 4, FieldTag::Q);
        dom.set(0, 0, ExactScalar::one(FieldTag::Q));
        let mut img = ExactMatrix::zero(1, 4, FieldTag::Q);
        img.set(0, 0, ExactScalar::one(FieldTag::Q));
        img.set(0, 3, ExactScalar::one(FieldTag::Q));
        let g = witt_extend(&sp, Factor::U, &dom, &img).unwrap();
        assert!(sp.is_factor_isometry(Factor::U, &g));
        assert_eq!(&dom * &g.transpose(), img);
    }

    #[test]
    fn hermitian_extension_with_phase() {
        let sp = FormSpace::standard(
            CaseTag::Unitary,
            GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 },
        )
        .unwrap();
        let f = FieldTag::QiHermitian;
        // U factor is C^{1,1}. Map u+ to a unit multiple: (3/5 + 4/5 i)·u+.
        let dom = ExactMatrix::from_i64(f, &[&[1, 0]]);
        let mut img = ExactMatrix::zero(1, 2, f);
        img.set(
            0,
            0,
            ExactScalar::new(
                num_rational::BigRational::new(3.into(), 5.into()),
                num_rational::BigRational::new(4.into(), 5.into()),
                f,
            ),
        );
        let g = witt_extend(&sp, Factor::U, &dom, &img).unwrap();
        assert!(sp.is_factor_isometry(Factor::U, &g));
        assert_eq!(&dom * &g.transpose(), img);
    }
}
