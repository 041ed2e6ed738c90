//! Constructive orbit-equivalence witnesses: given two isotropic subspaces
//! with the same invariant tuple, build `(g1, g2)` in the split-stabilizer
//! subgroup carrying one onto the other.
//!
//! The construction mirrors the uniqueness proof: decompose each subspace as
//! `(S ∩ U) ⊕ (S ∩ W) ⊕ graph part`, adapt the graph part so its U-side Gram
//! splits into a radical block and a nondegenerate block, match the two
//! nondegenerate blocks by an exact congruence, and extend both factor maps
//! with the isometry-extension machinery. The W side is forced by the graph
//! and needs no independent matching.
//!
//! Matching two congruent blocks over the rationals or Gaussian rationals is
//! a representation problem; it is attacked in layers (square scalings,
//! explicit hyperbolic planes, a complete ternary descent over the
//! rationals, norm decompositions for the hermitian case, then seeded
//! re-randomization of the decomposition). Same-tuple subspaces need not be
//! equivalent under the *rational* points of the group — a line spanned by a
//! norm-2 vector is not rationally movable onto a norm-1 line — and when no
//! matching exists (or none is found) a structured error is returned.

use crate::error::{Error, Result};
use crate::invariants::classify;
use crate::matrix::{self, ExactMatrix};
use crate::nt;
use crate::orbits::IsometryElement;
use crate::sample::SplitMix64;
use crate::scalar::{ExactScalar, FieldTag};
use crate::space::{congruence_diagonalize, CaseTag, Factor, FormSpace, Subspace};
use crate::witt::witt_extend;
use num_rational::BigRational;
use num_traits::Zero;

const OUTER_ATTEMPTS: u64 = 24;
const RANDOM_LAYER_ATTEMPTS: u64 = 48;

/// A witness `(g1, g2)` with `(g1 ⊕ g2)·S = S2`; requires equal invariants.
pub fn orbit_witness(s: &Subspace, s2: &Subspace) -> Result<IsometryElement> {
    let t1 = classify(s)?;
    let t2 = classify(s2)?;
    if t1 != t2 {
        return Err(Error::DifferentOrbits(t1.to_string(), t2.to_string()));
    }
    if s.space() != s2.space() {
        return Err(Error::Shape("subspaces live in different form spaces".into()));
    }
    let mut last = Error::MatchingFailed;
    for attempt in 0..OUTER_ATTEMPTS {
        match try_witness(s, s2, attempt) {
            Ok(h) => {
                if !h.is_valid(s.space()) {
                    return Err(Error::Inconsistency("witness blocks fail the Gram identity".into()));
                }
                if s.apply(&h.embed()) != *s2 {
                    return Err(Error::Inconsistency("witness does not map the subspace".into()));
                }
                return Ok(h);
            }
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Graph-adapted data for one side: factor intersections, graph vectors and
/// their factor parts, ordered `[nondegenerate block | radical block]`.
struct AdaptedSide {
    su: ExactMatrix,
    sw: ExactMatrix,
    u_part: ExactMatrix,
    w_part: ExactMatrix,
    /// Gram of the nondegenerate leading block of `u_part`.
    gamma: ExactMatrix,
    nondeg: usize,
}

fn factor_mask(space: &FormSpace, rows: &ExactMatrix, factor: Factor) -> ExactMatrix {
    let keep = space.factor_range(factor);
    ExactMatrix::from_fn(rows.rows(), rows.cols(), rows.field(), |r, c| {
        if keep.contains(&c) {
            rows.at(r, c).clone()
        } else {
            ExactScalar::zero(rows.field())
        }
    })
}

fn adapt_side(s: &Subspace, rng: &mut SplitMix64, perturb: bool) -> Result<AdaptedSide> {
    let space = s.space().clone();
    let su = s.intersect_factor(Factor::U);
    let sw = s.intersect_factor(Factor::W);
    let inner = su.basis().vstack(sw.basis());
    let graph = matrix::extend_basis(&inner, s.basis());
    let k = graph.rows();
    let mut u_part = factor_mask(&space, &graph, Factor::U);
    let mut w_part = factor_mask(&space, &graph, Factor::W);
    if k > 0 && perturb {
        // Re-randomize the complement choice: a unit-triangular coefficient
        // mix plus a seeded row rotation keeps independence and the graph.
        let field = space.field();
        let mut l = ExactMatrix::identity(k, field);
        for r in 0..k {
            for c in 0..r {
                l.set(r, c, rng.scalar(field, 2));
            }
        }
        let rot = rng.below(k as u64) as usize;
        let perm: Vec<usize> = (0..k).map(|i| (i + rot) % k).collect();
        let l = l.select_rows(&perm);
        u_part = &l * &u_part;
        w_part = &l * &w_part;
    }
    // Split the graph coefficients into a radical and a nondegenerate block.
    let gram_u = space.pair_rows(&u_part, &u_part);
    let rad_coeff = matrix::row_space_basis(&gram_u.transpose().kernel().transpose());
    let nonrad_coeff = matrix::extend_basis(&rad_coeff, &ExactMatrix::identity(k, space.field()));
    let order = nonrad_coeff.vstack(&rad_coeff);
    let u_part = &order * &u_part;
    let w_part = &order * &w_part;
    let nondeg = nonrad_coeff.rows();
    let gamma = space
        .pair_rows(&u_part, &u_part)
        .submatrix(0, nondeg, 0, nondeg);
    Ok(AdaptedSide { su: su.basis().clone(), sw: sw.basis().clone(), u_part, w_part, gamma, nondeg })
}

fn try_witness(s: &Subspace, s2: &Subspace, attempt: u64) -> Result<IsometryElement> {
    let space = s.space().clone();
    let mut rng = SplitMix64::new(0xA5EED ^ attempt.wrapping_mul(0x9E3779B97F4A7C15));
    let a_side = adapt_side(s, &mut rng, attempt > 0)?;
    let b_side = adapt_side(s2, &mut rng, attempt > 0)?;
    if a_side.nondeg != b_side.nondeg || a_side.u_part.rows() != b_side.u_part.rows() {
        return Err(Error::Inconsistency("adapted blocks disagree in size".into()));
    }
    let c = a_side.nondeg;
    let field = space.field();

    // Match the nondegenerate blocks: m · Γ₂ · σ(m)ᵀ = Γ₁.
    let m = if c == 0 {
        ExactMatrix::identity(0, field)
    } else if space.case == CaseTag::Symplectic {
        let t1 = crate::witt::symplectic_transform(&a_side.gamma)?;
        let t2 = crate::witt::symplectic_transform(&b_side.gamma)?;
        let t1_inv = t1.inverse().ok_or(Error::MatchingFailed)?;
        &t1_inv * &t2
    } else {
        match_forms(&a_side.gamma, &b_side.gamma, &mut rng).ok_or(Error::MatchingFailed)?
    };
    debug_assert_eq!(&(&m * &b_side.gamma) * &m.conj_transpose(), a_side.gamma);

    let d = space.dim_v();
    // Domain and image lists on the U side (ambient coordinates).
    let b_u_nondeg = b_side.u_part.submatrix(0, c, 0, d);
    let b_u_rad = b_side.u_part.submatrix(c, b_side.u_part.rows(), 0, d);
    let b_w_nondeg = b_side.w_part.submatrix(0, c, 0, d);
    let b_w_rad = b_side.w_part.submatrix(c, b_side.w_part.rows(), 0, d);
    let img_u = b_side
        .su
        .vstack(&(&m * &b_u_nondeg))
        .vstack(&b_u_rad);
    let dom_u = a_side.su.vstack(&a_side.u_part);
    let img_w = b_side
        .sw
        .vstack(&(&m * &b_w_nondeg))
        .vstack(&b_w_rad);
    let dom_w = a_side.sw.vstack(&a_side.w_part);

    // Slice to factor coordinates and extend on each factor.
    let ur = space.factor_range(Factor::U);
    let wr = space.factor_range(Factor::W);
    let cut = |rows: &ExactMatrix, r: &std::ops::Range<usize>| {
        rows.submatrix(0, rows.rows(), r.start, r.end)
    };
    let g1 = witt_extend(&space, Factor::U, &cut(&dom_u, &ur), &cut(&img_u, &ur))?;
    let g2 = witt_extend(&space, Factor::W, &cut(&dom_w, &wr), &cut(&img_w, &wr))?;
    Ok(IsometryElement { h1: g1, h2: g2 })
}

/// Find `m` with `m · Γ₂ · σ(m)ᵀ = Γ₁` for nondegenerate congruent symmetric
/// or hermitian Grams, by representing the diagonal of `Γ₁` inside `Γ₂`.
fn match_forms(gamma1: &ExactMatrix, gamma2: &ExactMatrix, rng: &mut SplitMix64) -> Option<ExactMatrix> {
    let field = gamma1.field();
    let k = gamma1.rows();
    let d1 = congruence_diagonalize(gamma1);
    let mut rows: Vec<ExactMatrix> = Vec::new();
    // `current` spans the unmatched complement inside the Γ₂ space.
    let mut current = ExactMatrix::identity(k, field);
    for target in &d1.diag {
        let q = &(&current * gamma2) * &current.conj_transpose();
        let y_coeff = represent(&q, target, rng)?;
        let y_row = &y_coeff * &current;
        // Complement of y inside current: z with z·Q·σ(y)ᵀ = 0.
        let pairing = &q * &y_coeff.conj_transpose();
        let ker = pairing.transpose().kernel();
        let comp = matrix::row_space_basis(&ker.transpose());
        rows.push(y_row);
        current = &comp * &current;
    }
    let mut n = ExactMatrix::zero(0, k, field);
    for r in rows {
        n = n.vstack(&r);
    }
    let c1_inv = d1.c.inverse()?;
    let m = &c1_inv * &n;
    if &(&m * gamma2) * &m.conj_transpose() == *gamma1 {
        Some(m)
    } else {
        None
    }
}

/// A coefficient row `y` with `y·Q·σ(y)ᵀ = target`, or `None`.
fn represent(q: &ExactMatrix, target: &ExactScalar, rng: &mut SplitMix64) -> Option<ExactMatrix> {
    let field = q.field();
    let k = q.rows();
    if target.is_zero() {
        // Not needed by callers (diagonals of nondegenerate forms), but keep
        // a sane answer for the zero-dimensional case.
        return if k == 0 { Some(ExactMatrix::zero(1, 0, field)) } else { None };
    }
    for attempt in 0..RANDOM_LAYER_ATTEMPTS {
        // Randomized congruence path: a unit-triangular mix exposes fresh
        // diagonals on each attempt.
        let mut l = ExactMatrix::identity(k, field);
        if attempt > 0 {
            for r in 0..k {
                for c in 0..r {
                    l.set(r, c, rng.scalar(field, 2));
                }
            }
        }
        let q_mixed = &(&l * q) * &l.conj_transpose();
        let diag = congruence_diagonalize(&q_mixed);
        let values: Vec<ExactScalar> = diag.diag.clone();
        if let Some(coeff) = represent_diagonal(&values, target, field, rng) {
            // coeff is w.r.t. the diagonalized basis: rows diag.c · l.
            let back = &(&coeff * &diag.c) * &l;
            let check = (&(&back * q) * &back.conj_transpose()).at(0, 0).clone();
            if check == *target {
                return Some(back);
            }
        }
    }
    None
}

fn scalar_ratio_is_square(a: &ExactScalar, b: &ExactScalar, field: FieldTag) -> Option<ExactScalar> {
    // sqrt(a/b) in the scalar field, if it exists.
    let ratio = a / b;
    match field {
        FieldTag::Q => nt::rational_sqrt(ratio.re()).map(|s| ExactScalar::rational(s, field)),
        FieldTag::QiBilinear => gaussian_sqrt(&ratio),
        FieldTag::QiHermitian => None,
    }
}

/// Square root in the Gaussian rationals, if one exists.
pub fn gaussian_sqrt(z: &ExactScalar) -> Option<ExactScalar> {
    let field = z.field();
    if z.is_zero() {
        return Some(ExactScalar::zero(field));
    }
    if z.im().is_zero() {
        let x = z.re();
        if let Some(s) = nt::rational_sqrt(x) {
            return Some(ExactScalar::rational(s, field));
        }
        if let Some(s) = nt::rational_sqrt(&-x) {
            return Some(ExactScalar::new(BigRational::zero(), s, field));
        }
        return None;
    }
    let norm = z.norm_sq();
    let n = nt::rational_sqrt(&norm)?;
    let half = BigRational::new(1.into(), 2.into());
    let a2 = (z.re() + &n) * &half;
    let a = nt::rational_sqrt(&a2)?;
    if a.is_zero() {
        return None;
    }
    let b = z.im() / (&a * BigRational::from_integer(2.into()));
    let cand = ExactScalar::new(a, b, field);
    if &(&cand * &cand) == z {
        Some(cand)
    } else {
        None
    }
}

/// Layered representation of `target` by a diagonal form.
fn represent_diagonal(
    diag: &[ExactScalar],
    target: &ExactScalar,
    field: FieldTag,
    rng: &mut SplitMix64,
) -> Option<ExactMatrix> {
    let k = diag.len();
    let row = |coords: Vec<(usize, ExactScalar)>| {
        let mut m = ExactMatrix::zero(1, k, field);
        for (i, v) in coords {
            m.set(0, i, v);
        }
        m
    };
    // Layer 1: a single coordinate after a square scaling.
    for i in 0..k {
        if diag[i].is_zero() {
            continue;
        }
        match field {
            FieldTag::QiHermitian => {
                let ratio = target / &diag[i];
                if ratio.is_rational() {
                    if let Some((x, y)) = nt::rational_two_squares(ratio.re()) {
                        return Some(row(vec![(i, ExactScalar::new(x, y, field))]));
                    }
                }
            }
            _ => {
                if let Some(s) = scalar_ratio_is_square(target, &diag[i], field) {
                    return Some(row(vec![(i, s)]));
                }
            }
        }
    }
    // Layer 2: explicit hyperbolic pairs represent everything.
    for i in 0..k {
        for j in (i + 1)..k {
            if diag[i].is_zero() || diag[j].is_zero() {
                continue;
            }
            if let Some(v) = hyperbolic_pair_represent(&diag[i], &diag[j], target, field) {
                return Some(row(vec![(i, v.0), (j, v.1)]));
            }
        }
    }
    // Layer 3 (rational and hermitian): complete ternary descent on pairs.
    if matches!(field, FieldTag::Q | FieldTag::QiHermitian) {
        for i in 0..k {
            for j in (i + 1)..k {
                if let Some((x, y)) =
                    legendre_pair_represent(diag[i].re(), diag[j].re(), target.re())
                {
                    return Some(row(vec![
                        (i, ExactScalar::rational(x, field)),
                        (j, ExactScalar::rational(y, field)),
                    ]));
                }
            }
        }
    }
    if k < 3 {
        return None;
    }
    // Layer 4: seeded reduction of the target along one coordinate, retrying
    // the earlier layers on the rest.
    for _ in 0..RANDOM_LAYER_ATTEMPTS {
        let pick = rng.below(k as u64) as usize;
        if diag[pick].is_zero() {
            continue;
        }
        let z = rng.scalar(field, 3);
        if z.is_zero() {
            continue;
        }
        let used = match field {
            FieldTag::QiHermitian => {
                // contributes δ·N(z), a real value
                ExactScalar::rational(
                    (&z * &z.conj()).re() * diag[pick].re(),
                    field,
                )
            }
            _ => &(&z * &z) * &diag[pick],
        };
        let rest_target = target - &used;
        if rest_target.is_zero() {
            return Some(row(vec![(pick, z)]));
        }
        let rest: Vec<ExactScalar> = diag
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pick)
            .map(|(_, v)| v.clone())
            .collect();
        if let Some(sub) = represent_diagonal_small(&rest, &rest_target, field) {
            let mut coords = vec![(pick, z)];
            let mut idx = 0usize;
            for i in 0..k {
                if i == pick {
                    continue;
                }
                let v = sub.at(0, idx).clone();
                if !v.is_zero() {
                    coords.push((i, v));
                }
                idx += 1;
            }
            return Some(row(coords));
        }
    }
    None
}

/// The non-recursive layers only (used inside the randomized reduction).
fn represent_diagonal_small(
    diag: &[ExactScalar],
    target: &ExactScalar,
    field: FieldTag,
) -> Option<ExactMatrix> {
    let k = diag.len();
    let row = |coords: Vec<(usize, ExactScalar)>| {
        let mut m = ExactMatrix::zero(1, k, field);
        for (i, v) in coords {
            m.set(0, i, v);
        }
        m
    };
    for i in 0..k {
        if diag[i].is_zero() {
            continue;
        }
        match field {
            FieldTag::QiHermitian => {
                let ratio = target / &diag[i];
                if ratio.is_rational() {
                    if let Some((x, y)) = nt::rational_two_squares(ratio.re()) {
                        return Some(row(vec![(i, ExactScalar::new(x, y, field))]));
                    }
                }
            }
            _ => {
                if let Some(s) = scalar_ratio_is_square(target, &diag[i], field) {
                    return Some(row(vec![(i, s)]));
                }
            }
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if diag[i].is_zero() || diag[j].is_zero() {
                continue;
            }
            if let Some(v) = hyperbolic_pair_represent(&diag[i], &diag[j], target, field) {
                return Some(row(vec![(i, v.0), (j, v.1)]));
            }
            if matches!(field, FieldTag::Q | FieldTag::QiHermitian) {
                if let Some((x, y)) =
                    legendre_pair_represent(diag[i].re(), diag[j].re(), target.re())
                {
                    return Some(row(vec![
                        (i, ExactScalar::rational(x, field)),
                        (j, ExactScalar::rational(y, field)),
                    ]));
                }
            }
        }
    }
    None
}

/// If `diag(d1, d2)` is an explicit hyperbolic plane (isotropy witnessed by a
/// square root in the field), represent any nonzero target on it.
fn hyperbolic_pair_represent(
    d1: &ExactScalar,
    d2: &ExactScalar,
    target: &ExactScalar,
    field: FieldTag,
) -> Option<(ExactScalar, ExactScalar)> {
    match field {
        FieldTag::Q | FieldTag::QiBilinear => {
            // isotropic (1, s) needs s² = -d1/d2
            let s = scalar_ratio_is_square(&-d1, d2, field)?;
            // e = (1, s), f = (1, -s): (e,f) = d1 - s²d2 = 2d1, (f,f) = 0.
            // x = e + λf with (x,x) = 2λ(e,f) = 4λd1 = target.
            let four = ExactScalar::from_int(4, field);
            let lam = target / &(&four * d1);
            let one = ExactScalar::one(field);
            Some((&one + &lam, &s - &(&lam * &s)))
        }
        FieldTag::QiHermitian => {
            // need N(z) = -d1/d2 with real quotient
            let ratio = -(d1 / d2);
            if !ratio.is_rational() {
                return None;
            }
            let (x, y) = nt::rational_two_squares(ratio.re())?;
            let z = ExactScalar::new(x, y, field);
            // e = (1, z), f = (1, -z): (e,f) = d1 - N(z)·(-1)… = d1 + d1 = 2d1
            // (x = e + λf) norm = 4·d1·Re(λ): λ real = target/(4 d1).
            let four = ExactScalar::from_int(4, field);
            let lam = target / &(&four * d1);
            if !lam.is_rational() {
                return None;
            }
            let one = ExactScalar::one(field);
            Some((&one + &lam, &z - &(&lam * &z)))
        }
    }
}

/// Represent a rational target on `diag(a, b)` through the complete ternary
/// descent: solve `a·x² + b·y² = target`.
fn legendre_pair_represent(
    a: &BigRational,
    b: &BigRational,
    target: &BigRational,
) -> Option<(BigRational, BigRational)> {
    if a.is_zero() || b.is_zero() || target.is_zero() {
        return None;
    }
    // Clear denominators: multiply through by the lcm L; roots scale back.
    let l = lcm3(a.denom(), b.denom(), target.denom());
    let ai = (a * BigRational::from_integer(l.clone())).to_integer();
    let bi = (b * BigRational::from_integer(l.clone())).to_integer();
    let ti = (target * BigRational::from_integer(l)).to_integer();
    let (x, y, z) = nt::solve_ternary(&ai, &bi, &-ti)?;
    if z.is_zero() {
        // Isotropic pair: explicit hyperbolic plane; represent target there.
        // e = (x, y) isotropic, f = (x, -y): (e,f) = 2ax², (f,f) = 0.
        let fx = BigRational::from_integer(x);
        let fy = BigRational::from_integer(y);
        let e_f = BigRational::from_integer(2.into()) * a * &fx * &fx;
        if e_f.is_zero() {
            return None;
        }
        let lam = target / (e_f * BigRational::from_integer(2.into()));
        // w = e + λ f = ((1+λ)x, (1-λ)y)
        let one = BigRational::from_integer(1.into());
        return Some(((&one + &lam) * fx, (&one - &lam) * fy));
    }
    let zq = BigRational::from_integer(z);
    Some((
        BigRational::from_integer(x) / zq.clone(),
        BigRational::from_integer(y) / zq,
    ))
}

fn lcm3(a: &num_bigint::BigInt, b: &num_bigint::BigInt, c: &num_bigint::BigInt) -> num_bigint::BigInt {
    use num_integer::Integer;
    a.lcm(b).lcm(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::OrbitParams;
    use crate::orbits::{canonical_rep, is_in_stabilizer};
    use crate::sample::cayley_pair;
    use crate::space::GroupParams;

    #[test]
    fn witness_on_equal_subspaces() {
        let c = CaseTag::RealOrthogonal;
        let p = GroupParams::Signature { p: 3, q: 3, p1: 1, q1: 2 };
        for t in crate::orbits::valid_tuples(c, p, 2).unwrap() {
            let s = canonical_rep(c, p, &t).unwrap();
            let h = orbit_witness(&s, &s).unwrap();
            assert!(is_in_stabilizer(&h, &s).unwrap(), "tuple {t}");
        }
    }

    #[test]
    fn witness_moves_transformed_subspace() {
        for (case, params) in [
            (CaseTag::RealOrthogonal, GroupParams::Signature { p: 3, q: 3, p1: 2, q1: 1 }),
            (CaseTag::Unitary, GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 }),
            (CaseTag::ComplexOrthogonal, GroupParams::Split { n: 5, m: 2 }),
            (CaseTag::Symplectic, GroupParams::Split { n: 3, m: 1 }),
        ] {
            let space = FormSpace::standard(case, params).unwrap();
            let r = 2.min(space.max_isotropic_dim());
            for t in crate::orbits::valid_tuples(case, params, r).unwrap() {
                let s = canonical_rep(case, params, &t).unwrap();
                let h = cayley_pair(&space, 11, 2).unwrap();
                let s2 = s.apply(&h.embed());
                let g = orbit_witness(&s, &s2).unwrap();
                assert_eq!(s.apply(&g.embed()), s2, "case {case} tuple {t}");
                assert!(g.is_valid(&space));
            }
        }
    }

    #[test]
    fn witness_rejects_different_orbits() {
        let c = CaseTag::RealOrthogonal;
        let p = GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 };
        let s = canonical_rep(c, p, &OrbitParams::signed(c, 1, 0, 0, 0, 0)).unwrap();
        let s2 = canonical_rep(c, p, &OrbitParams::signed(c, 0, 1, 0, 0, 0)).unwrap();
        assert!(matches!(orbit_witness(&s, &s2), Err(Error::DifferentOrbits(_, _))));
    }

    #[test]
    fn witness_fails_across_square_classes() {
        // span(u+ + w-) and span(v + w) with (v,v) = 2: same tuple, but no
        // rational witness can exist since 1/2 is not a rational square.
        let c = CaseTag::RealOrthogonal;
        let p = GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 };
        let space = FormSpace::standard(c, p).unwrap();
        let s = canonical_rep(c, p, &OrbitParams::signed(c, 0, 0, 0, 1, 0)).unwrap();
        let mut basis = ExactMatrix::zero(1, 4, FieldTag::Q);
        // v = 3/2 u+ + 1/2 u-: (v,v) = 9/4 - 1/4 = 2; w = 1/2 w+ + 3/2 w-: -2.
        basis.set(0, 0, ExactScalar::from_ratio(3, 2, FieldTag::Q));
        basis.set(0, 1, ExactScalar::from_ratio(1, 2, FieldTag::Q));
        basis.set(0, 2, ExactScalar::from_ratio(1, 2, FieldTag::Q));
        basis.set(0, 3, ExactScalar::from_ratio(3, 2, FieldTag::Q));
        let s2 = Subspace::new(space, basis).unwrap();
        assert_eq!(classify(&s2).unwrap(), classify(&s).unwrap());
        assert!(matches!(orbit_witness(&s, &s2), Err(Error::MatchingFailed)));
    }

    #[test]
    fn gaussian_sqrt_cases() {
        let f = FieldTag::QiBilinear;
        let i = ExactScalar::i(f);
        // sqrt(-1) = i
        assert_eq!(gaussian_sqrt(&ExactScalar::from_int(-1, f)).unwrap(), i);
        // sqrt(2i) = 1 + i
        let z = ExactScalar::new(BigRational::zero(), BigRational::from_integer(2.into()), f);
        let s = gaussian_sqrt(&z).unwrap();
        assert_eq!(&s * &s, z);
        // 3 is not a square in Q(i)
        assert!(gaussian_sqrt(&ExactScalar::from_int(3, f)).is_none());
        // 2i-like general: (3+4i) = (2+i)^2
        let z = ExactScalar::new(
            BigRational::from_integer(3.into()),
            BigRational::from_integer(4.into()),
            f,
        );
        let s = gaussian_sqrt(&z).unwrap();
        assert_eq!(&s * &s, z);
    }
}
