//! Orbit-level computations: enumeration of all orbit tuples for given group
//! data, canonical representatives, group/stabilizer/orbit dimensions, open
//! orbits, and identity-component orbit counts.
//!
//! Dimension conventions: real dimensions for the real orthogonal, unitary
//! and symplectic cases; field dimensions for the split orthogonal case over
//! the Gaussian rationals (half the real dimension when the field is read as
//! the complex numbers).

use crate::error::{Error, Result};
use crate::invariants::{validate_params, OrbitParams, Tuple};
use crate::matrix::ExactMatrix;
use crate::scalar::ExactScalar;
use crate::space::{CaseTag, Factor, FormSpace, GroupParams, Subspace};

/// Full report for one orbit.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct OrbitInfo {
    pub case: CaseTag,
    pub params: GroupParams,
    pub tuple: Tuple,
    pub dim_h: usize,
    pub dim_stab: usize,
    pub dim_orbit: usize,
    pub is_open: bool,
    pub component_count: usize,
}

/// An element `(h1, h2)` of the split-stabilizer subgroup, each block an
/// isometry of its factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryElement {
    pub h1: ExactMatrix,
    pub h2: ExactMatrix,
}

impl IsometryElement {
    pub fn identity(space: &FormSpace) -> Self {
        let f = space.field();
        IsometryElement {
            h1: ExactMatrix::identity(space.dim_factor(Factor::U), f),
            h2: ExactMatrix::identity(space.dim_factor(Factor::W), f),
        }
    }

    /// The block-diagonal action on all of `V`.
    pub fn embed(&self) -> ExactMatrix {
        ExactMatrix::block_diag(&self.h1, &self.h2)
    }

    pub fn compose(&self, other: &IsometryElement) -> IsometryElement {
        IsometryElement { h1: &self.h1 * &other.h1, h2: &self.h2 * &other.h2 }
    }

    /// Do both blocks preserve their factor Gram matrices exactly?
    pub fn is_valid(&self, space: &FormSpace) -> bool {
        space.is_factor_isometry(Factor::U, &self.h1)
            && space.is_factor_isometry(Factor::W, &self.h2)
    }
}

fn b2(x: i128) -> i128 {
    x * (x - 1) / 2
}

/// Dimension of the symplectic group on `x` coordinates (`x` even).
fn dim_sp(x: i128) -> i128 {
    debug_assert!(x >= 0 && x % 2 == 0);
    (x / 2) * (x + 1)
}

/// `dim H = dim G1 + dim G2` in the conventions above.
pub fn dim_group(case: CaseTag, params: GroupParams) -> usize {
    match case {
        CaseTag::RealOrthogonal => {
            let (p, q, p1, q1) = params.signature();
            (b2((p1 + q1) as i128) + b2((p + q - p1 - q1) as i128)) as usize
        }
        CaseTag::Unitary => {
            let (p, q, p1, q1) = params.signature();
            let d1 = (p1 + q1) as i128;
            let d2 = (p + q - p1 - q1) as i128;
            (d1 * d1 + d2 * d2) as usize
        }
        CaseTag::ComplexOrthogonal => {
            let (n, m) = params.split();
            (b2(m as i128) + b2((n - m) as i128)) as usize
        }
        CaseTag::Symplectic => {
            let (n, m) = params.split();
            (dim_sp(2 * m as i128) + dim_sp(2 * (n - m) as i128)) as usize
        }
    }
}

/// Closed-form stabilizer dimension of any subspace in the orbit `t`.
pub fn dim_stabilizer(case: CaseTag, params: GroupParams, t: &OrbitParams) -> Result<usize> {
    if !validate_params(case, params, t) {
        return Err(Error::InvalidTuple(format!("{t} for {case} {params}")));
    }
    // All closed forms are assembled as 2·dim to keep the arithmetic integral.
    let twice: i128 = match (case, t.tuple) {
        (CaseTag::RealOrthogonal, Tuple::Signed { r_u, r_w, a, a_u, a_w }) => {
            let (p, q, p1, q1) = params.signature();
            let (d1, d2) = ((p1 + q1) as i128, (p + q - p1 - q1) as i128);
            let (r_u, r_w, a, c) = (r_u as i128, r_w as i128, a as i128, (a_u + a_w) as i128);
            let k1 = d1 - 2 * r_u - 2 * a;
            let k2 = d2 - 2 * r_w - 2 * a;
            b2(d1) + b2(d2) + r_u * r_u + r_w * r_w + 2 * b2(c) - 2 * a * c - b2(k1) - b2(k2)
                + 2 * b2(k1 - c)
                + 2 * b2(k2 - c)
        }
        (CaseTag::Unitary, Tuple::Signed { r_u, r_w, a, a_u, a_w }) => {
            let (p, q, p1, q1) = params.signature();
            let (d1, d2) = ((p1 + q1) as i128, (p + q - p1 - q1) as i128);
            let (r_u, r_w, a, c) = (r_u as i128, r_w as i128, a as i128, (a_u + a_w) as i128);
            let k1 = d1 - 2 * r_u - 2 * a;
            let k2 = d2 - 2 * r_w - 2 * a;
            d1 * d1 + d2 * d2 + 2 * r_u * r_u + 2 * r_w * r_w + 2 * c * c - 4 * a * c
                - k1 * k1
                - k2 * k2
                + 2 * (k1 - c) * (k1 - c)
                + 2 * (k2 - c) * (k2 - c)
        }
        (CaseTag::ComplexOrthogonal, Tuple::Split { r_u, r_w, a, b }) => {
            let (n, m) = params.split();
            let (d1, d2) = (m as i128, (n - m) as i128);
            let (r_u, r_w, a, b) = (r_u as i128, r_w as i128, a as i128, b as i128);
            let k1 = d1 - 2 * r_u - 2 * a;
            let k2 = d2 - 2 * r_w - 2 * a;
            b2(d1) + b2(d2) + r_u * r_u + r_w * r_w + 2 * b2(b) - 2 * a * b - b2(k1) - b2(k2)
                + 2 * b2(k1 - b)
                + 2 * b2(k2 - b)
        }
        (CaseTag::Symplectic, Tuple::Split { r_u, r_w, a, b }) => {
            let (n, m) = params.split();
            let (d1, d2) = (2 * m as i128, 2 * (n - m) as i128);
            let (r_u, r_w, a, b) = (r_u as i128, r_w as i128, a as i128, b as i128);
            let k1 = d1 - 2 * r_u - 2 * a;
            let k2 = d2 - 2 * r_w - 2 * a;
            dim_sp(d1) + dim_sp(d2) + r_u * r_u + r_w * r_w - 2 * a * b - dim_sp(k1) - dim_sp(k2)
                + 2 * dim_sp(b)
                + 2 * dim_sp(k1 - b)
                + 2 * dim_sp(k2 - b)
        }
        _ => unreachable!("tuple shape checked by validate_params"),
    };
    assert!(twice >= 0 && twice % 2 == 0, "stabilizer dimension must be a nonnegative integer");
    let dim = (twice / 2) as usize;
    assert!(dim <= dim_group(case, params));
    Ok(dim)
}

/// `dim H - dim H_S`.
pub fn dim_orbit(case: CaseTag, params: GroupParams, t: &OrbitParams) -> Result<usize> {
    Ok(dim_group(case, params) - dim_stabilizer(case, params, t)?)
}

/// Number of orbits of the intersection with the ambient identity component
/// inside the orbit `t` (1, 2 or 4 in the real orthogonal case, 1 or 2 in the
/// split orthogonal case, always 1 in the connected cases).
pub fn component_count(case: CaseTag, params: GroupParams, t: &OrbitParams) -> Result<usize> {
    if !validate_params(case, params, t) {
        return Err(Error::InvalidTuple(format!("{t} for {case} {params}")));
    }
    Ok(match (case, t.tuple) {
        (CaseTag::RealOrthogonal, Tuple::Signed { r_u, r_w, a, a_u, a_w }) => {
            let (p, q, p1, q1) = params.signature();
            // Each true indicator contributes one non-identity coset of
            // H/(H ∩ G0) meeting the stabilizer; the met cosets form a
            // subgroup of the Klein four-group.
            let hit_pos = r_u + a + a_u < p1 || r_w + a + a_w < p - p1;
            let hit_neg = r_u + a + a_w < q1 || r_w + a + a_u < q - q1;
            let hit_mixed = r_u + r_w + a_u + a_w > 0;
            match [hit_pos, hit_neg, hit_mixed].iter().filter(|&&x| x).count() {
                0 => 4,
                1 => 2,
                _ => 1,
            }
        }
        (CaseTag::ComplexOrthogonal, Tuple::Split { r_u, r_w, a, b }) => {
            let (n, m) = params.split();
            let hit_u = 2 * r_u + 2 * a + b < m;
            let hit_w = 2 * r_w + 2 * a + b < n - m;
            if hit_u || hit_w {
                1
            } else {
                2
            }
        }
        _ => 1,
    })
}

/// All tuples with entry sum `r` satisfying the case's constraint system,
/// in lexicographic order.
pub fn valid_tuples(case: CaseTag, params: GroupParams, r: usize) -> Result<Vec<OrbitParams>> {
    params.validate(case)?;
    let mut out = Vec::new();
    if case.is_signed() {
        for r_u in 0..=r {
            for r_w in 0..=(r - r_u) {
                for a in 0..=(r - r_u - r_w) {
                    for a_u in 0..=(r - r_u - r_w - a) {
                        let a_w = r - r_u - r_w - a - a_u;
                        let t = OrbitParams::signed(case, r_u, r_w, a, a_u, a_w);
                        if validate_params(case, params, &t) {
                            out.push(t);
                        }
                    }
                }
            }
        }
    } else {
        for r_u in 0..=r {
            for r_w in 0..=(r - r_u) {
                for a in 0..=(r - r_u - r_w) {
                    let b = r - r_u - r_w - a;
                    let t = OrbitParams::split(case, r_u, r_w, a, b);
                    if validate_params(case, params, &t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Enumerate every orbit of isotropic dimension `r`, fully populated and
/// sorted lexicographically by tuple. `r = 0` yields the single zero orbit.
pub fn enumerate_orbits(case: CaseTag, params: GroupParams, r: usize) -> Result<Vec<OrbitInfo>> {
    params.validate(case)?;
    let space = FormSpace::standard(case, params)?;
    let max = space.max_isotropic_dim();
    if r > max {
        return Err(Error::RankOutOfRange { r, max });
    }
    let tuples = valid_tuples(case, params, r)?;
    let dim_h = dim_group(case, params);
    let mut infos: Vec<OrbitInfo> = tuples
        .into_iter()
        .map(|t| {
            let dim_stab = dim_stabilizer(case, params, &t)?;
            Ok(OrbitInfo {
                case,
                params,
                tuple: t.tuple,
                dim_h,
                dim_stab,
                dim_orbit: dim_h - dim_stab,
                is_open: false,
                component_count: component_count(case, params, &t)?,
            })
        })
        .collect::<Result<_>>()?;
    if let Some(max_dim) = infos.iter().map(|i| i.dim_orbit).max() {
        for info in &mut infos {
            info.is_open = info.dim_orbit == max_dim;
        }
    }
    Ok(infos)
}

/// The canonical isotropic representative of the orbit `t`, in the fixed
/// coordinates, echelon-normalized.
pub fn canonical_rep(case: CaseTag, params: GroupParams, t: &OrbitParams) -> Result<Subspace> {
    if !validate_params(case, params, t) {
        return Err(Error::InvalidTuple(format!("{t} for {case} {params}")));
    }
    let space = FormSpace::standard(case, params)?;
    let field = space.field();
    let d = space.dim_v();
    let one = ExactScalar::one(field);
    let mut rows: Vec<Vec<ExactScalar>> = Vec::new();
    let mut push = |coords: &[(usize, ExactScalar)]| {
        let mut v = vec![ExactScalar::zero(field); d];
        for (c, s) in coords {
            v[*c] = s.clone();
        }
        rows.push(v);
    };
    match t.tuple {
        Tuple::Signed { r_u, r_w, a, a_u, a_w } => {
            for i in 1..=r_u {
                push(&[(space.coord_u_plus(i), one.clone()), (space.coord_u_minus(i), one.clone())]);
            }
            for j in 1..=r_w {
                push(&[(space.coord_w_plus(j), one.clone()), (space.coord_w_minus(j), one.clone())]);
            }
            for c in 1..=a_u {
                push(&[
                    (space.coord_u_plus(r_u + c), one.clone()),
                    (space.coord_w_minus(r_w + c), one.clone()),
                ]);
            }
            for dd in 1..=a_w {
                push(&[
                    (space.coord_u_minus(r_u + dd), one.clone()),
                    (space.coord_w_plus(r_w + dd), one.clone()),
                ]);
            }
            for l in 1..=a {
                push(&[
                    (space.coord_u_plus(r_u + a_u + l), one.clone()),
                    (space.coord_u_minus(r_u + a_w + l), one.clone()),
                    (space.coord_w_plus(r_w + a_w + l), one.clone()),
                    (space.coord_w_minus(r_w + a_u + l), one.clone()),
                ]);
            }
        }
        Tuple::Split { r_u, r_w, a, b } => match case {
            CaseTag::ComplexOrthogonal => {
                let (n, m) = params.split();
                let i = ExactScalar::i(field);
                for k in 1..=r_u {
                    push(&[
                        (space.coord_split_u(k), one.clone()),
                        (space.coord_split_u(m + 1 - k), i.clone()),
                    ]);
                }
                for k in 1..=r_w {
                    push(&[
                        (space.coord_split_w(k), one.clone()),
                        (space.coord_split_w(n - m + 1 - k), i.clone()),
                    ]);
                }
                for l in 1..=b {
                    push(&[
                        (space.coord_split_u(r_u + a + l), one.clone()),
                        (space.coord_split_w(r_w + a + l), i.clone()),
                    ]);
                }
                for k in 1..=a {
                    push(&[
                        (space.coord_split_u(r_u + k), one.clone()),
                        (space.coord_split_u(m + 1 - r_u - k), i.clone()),
                        (space.coord_split_w(r_w + k), one.clone()),
                        (space.coord_split_w(n - m + 1 - r_w - k), i.clone()),
                    ]);
                }
            }
            CaseTag::Symplectic => {
                let (n, m) = params.split();
                for i in (m - r_u + 1)..=m {
                    push(&[(space.coord_e(i), one.clone())]);
                }
                for j in (n - r_w + 1)..=n {
                    push(&[(space.coord_e(j), one.clone())]);
                }
                for l in 1..=(b / 2) {
                    push(&[(space.coord_e(l), one.clone()), (space.coord_f(m + l), one.clone())]);
                    push(&[(space.coord_f(l), one.clone()), (space.coord_e(m + l), one.clone())]);
                }
                for k in (b / 2 + 1)..=(b / 2 + a) {
                    push(&[(space.coord_e(k), one.clone()), (space.coord_e(m + k), one.clone())]);
                }
            }
            _ => unreachable!(),
        },
    }
    let basis = ExactMatrix::from_rows(field, d, rows);
    let s = Subspace::new(space, basis)?;
    debug_assert!(s.is_isotropic());
    Ok(s)
}

/// The open orbits of `Gr(r)` in closed form, lexicographically sorted.
///
/// The result is cross-checked against the maximal-dimension subset of the
/// full enumeration; a mismatch is an internal error.
pub fn open_orbits(case: CaseTag, params: GroupParams, r: usize) -> Result<Vec<OrbitParams>> {
    params.validate(case)?;
    let space = FormSpace::standard(case, params)?;
    let max = space.max_isotropic_dim();
    if r == 0 || r > max {
        return Err(Error::RankOutOfRange { r, max });
    }
    let mut open: Vec<OrbitParams> = match case {
        CaseTag::RealOrthogonal | CaseTag::Unitary => {
            let (p, q, p1, q1) = params.signature();
            let alpha = p1.min(q - q1);
            let beta = q1.min(p - p1);
            if r < alpha + beta {
                let lo = r.saturating_sub(beta);
                let hi = r.min(alpha);
                (lo..=hi).map(|a_u| OrbitParams::signed(case, 0, 0, 0, a_u, r - a_u)).collect()
            } else {
                let rest = r - alpha - beta;
                let dim_u = p1 + q1;
                let dim_w = p + q - p1 - q1;
                if dim_u > dim_w {
                    vec![OrbitParams::signed(case, rest, 0, 0, alpha, beta)]
                } else {
                    vec![OrbitParams::signed(case, 0, rest, 0, alpha, beta)]
                }
            }
        }
        CaseTag::ComplexOrthogonal => {
            let (n, m) = params.split();
            let small = m.min(n - m);
            if r <= small {
                vec![OrbitParams::split(case, 0, 0, 0, r)]
            } else if m > n - m {
                vec![OrbitParams::split(case, r - (n - m), 0, 0, n - m)]
            } else {
                vec![OrbitParams::split(case, 0, r - m, 0, m)]
            }
        }
        CaseTag::Symplectic => {
            let (n, m) = params.split();
            let small = (2 * m).min(2 * (n - m));
            if r <= small {
                if r % 2 == 0 {
                    vec![OrbitParams::split(case, 0, 0, 0, r)]
                } else {
                    vec![OrbitParams::split(case, 0, 0, 1, r - 1)]
                }
            } else if m <= n - m {
                vec![OrbitParams::split(case, 0, r - 2 * m, 0, 2 * m)]
            } else {
                vec![OrbitParams::split(case, r - 2 * (n - m), 0, 0, 2 * (n - m))]
            }
        }
    };
    open.sort();
    let enumerated: Vec<OrbitParams> = enumerate_orbits(case, params, r)?
        .into_iter()
        .filter(|i| i.is_open)
        .map(|i| OrbitParams { case, tuple: i.tuple })
        .collect();
    if open != enumerated {
        return Err(Error::Inconsistency(format!(
            "closed-form open orbits {:?} disagree with the dimension argmax {:?}",
            open.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            enumerated.iter().map(|t| t.to_string()).collect::<Vec<_>>()
        )));
    }
    Ok(open)
}

/// Does `(h1, h2)` fix the subspace (as a set)?
pub fn is_in_stabilizer(h: &IsometryElement, s: &Subspace) -> Result<bool> {
    let space = s.space();
    if h.h1.rows() != space.dim_factor(Factor::U) || h.h2.rows() != space.dim_factor(Factor::W) {
        return Err(Error::Shape("isometry blocks do not match the split".into()));
    }
    Ok(s.apply(&h.embed()) == *s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::classify;

    fn real(p: usize, q: usize, p1: usize, q1: usize) -> GroupParams {
        GroupParams::Signature { p, q, p1, q1 }
    }

    #[test]
    fn dim_group_examples() {
        assert_eq!(dim_group(CaseTag::RealOrthogonal, real(2, 2, 1, 1)), 2);
        assert_eq!(dim_group(CaseTag::Unitary, real(2, 2, 1, 1)), 8);
        assert_eq!(dim_group(CaseTag::Symplectic, GroupParams::Split { n: 2, m: 1 }), 6);
        assert_eq!(dim_group(CaseTag::ComplexOrthogonal, GroupParams::Split { n: 4, m: 2 }), 2);
    }

    #[test]
    fn dim_stabilizer_examples() {
        let c = CaseTag::RealOrthogonal;
        let p = real(2, 2, 1, 1);
        assert_eq!(dim_stabilizer(c, p, &OrbitParams::signed(c, 0, 0, 1, 0, 0)).unwrap(), 1);
        assert_eq!(dim_orbit(c, p, &OrbitParams::signed(c, 0, 0, 1, 0, 0)).unwrap(), 1);
        assert_eq!(dim_stabilizer(c, p, &OrbitParams::signed(c, 0, 0, 0, 1, 0)).unwrap(), 0);
        assert_eq!(dim_orbit(c, p, &OrbitParams::signed(c, 0, 0, 0, 1, 0)).unwrap(), 2);

        let u = CaseTag::Unitary;
        assert_eq!(dim_stabilizer(u, p, &OrbitParams::signed(u, 0, 0, 0, 1, 0)).unwrap(), 3);
        assert_eq!(dim_orbit(u, p, &OrbitParams::signed(u, 0, 0, 0, 1, 0)).unwrap(), 5);
        // Stabilizer of an isotropic line inside U: a parabolic of U(1,1)
        // times the full second factor, of real dimension 3 + 4.
        assert_eq!(dim_stabilizer(u, p, &OrbitParams::signed(u, 1, 0, 0, 0, 0)).unwrap(), 7);

        let co = CaseTag::ComplexOrthogonal;
        let sp = GroupParams::Split { n: 4, m: 2 };
        assert_eq!(dim_stabilizer(co, sp, &OrbitParams::split(co, 0, 0, 0, 1)).unwrap(), 0);
        assert_eq!(dim_orbit(co, sp, &OrbitParams::split(co, 0, 0, 0, 1)).unwrap(), 2);

        let sy = CaseTag::Symplectic;
        let spp = GroupParams::Split { n: 2, m: 1 };
        assert_eq!(dim_stabilizer(sy, spp, &OrbitParams::split(sy, 0, 0, 0, 2)).unwrap(), 3);
    }

    #[test]
    fn enumerate_real_2211_r1() {
        let infos = enumerate_orbits(CaseTag::RealOrthogonal, real(2, 2, 1, 1), 1).unwrap();
        assert_eq!(infos.len(), 5);
        let tuples: Vec<Tuple> = infos.iter().map(|i| i.tuple).collect();
        let expect: Vec<Tuple> = [
            (0, 0, 0, 0, 1),
            (0, 0, 0, 1, 0),
            (0, 0, 1, 0, 0),
            (0, 1, 0, 0, 0),
            (1, 0, 0, 0, 0),
        ]
        .iter()
        .map(|&(r_u, r_w, a, a_u, a_w)| Tuple::Signed { r_u, r_w, a, a_u, a_w })
        .collect();
        assert_eq!(tuples, expect);
    }

    #[test]
    fn enumerate_real_4422_r3_open_set() {
        let infos = enumerate_orbits(CaseTag::RealOrthogonal, real(4, 4, 2, 2), 3).unwrap();
        let open: Vec<Tuple> = infos.iter().filter(|i| i.is_open).map(|i| i.tuple).collect();
        assert_eq!(
            open,
            vec![
                Tuple::Signed { r_u: 0, r_w: 0, a: 0, a_u: 1, a_w: 2 },
                Tuple::Signed { r_u: 0, r_w: 0, a: 0, a_u: 2, a_w: 1 },
            ]
        );
    }

    #[test]
    fn enumerate_symplectic_61_r1() {
        let infos =
            enumerate_orbits(CaseTag::Symplectic, GroupParams::Split { n: 6, m: 1 }, 1).unwrap();
        let tuples: Vec<Tuple> = infos.iter().map(|i| i.tuple).collect();
        assert_eq!(
            tuples,
            vec![
                Tuple::Split { r_u: 0, r_w: 0, a: 1, b: 0 },
                Tuple::Split { r_u: 0, r_w: 1, a: 0, b: 0 },
                Tuple::Split { r_u: 1, r_w: 0, a: 0, b: 0 },
            ]
        );
    }

    #[test]
    fn enumerate_r0_gives_zero_orbit() {
        let infos = enumerate_orbits(CaseTag::RealOrthogonal, real(2, 2, 1, 1), 0).unwrap();
        assert_eq!(infos.len(), 1);
        assert_eq!(infos[0].dim_orbit, 0);
        assert_eq!(infos[0].component_count, 1);
        assert!(infos[0].is_open);
    }

    #[test]
    fn enumerate_rejects_out_of_range() {
        assert!(matches!(
            enumerate_orbits(CaseTag::RealOrthogonal, real(2, 2, 1, 1), 3),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn canonical_rep_examples() {
        let c = CaseTag::RealOrthogonal;
        let p = real(2, 2, 1, 1);
        let s = canonical_rep(c, p, &OrbitParams::signed(c, 0, 0, 0, 1, 0)).unwrap();
        assert_eq!(s.basis(), &ExactMatrix::from_i64(crate::scalar::FieldTag::Q, &[&[1, 0, 0, 1]]));

        let co = CaseTag::ComplexOrthogonal;
        let s = canonical_rep(co, GroupParams::Split { n: 4, m: 2 }, &OrbitParams::split(co, 1, 0, 0, 0))
            .unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.is_isotropic());
        // span(u1 + i·u2)
        assert!(s.basis().at(0, 0).is_one());
        assert_eq!(s.basis().at(0, 1), &ExactScalar::i(crate::scalar::FieldTag::QiBilinear));

        let sy = CaseTag::Symplectic;
        let s = canonical_rep(sy, GroupParams::Split { n: 2, m: 1 }, &OrbitParams::split(sy, 0, 0, 0, 2))
            .unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.is_isotropic());
        let space = s.space();
        // span(e1 + f2, f1 + e2)
        let mut v1 = ExactMatrix::zero(1, 4, crate::scalar::FieldTag::Q);
        v1.set(0, space.coord_e(1), ExactScalar::from_int(1, crate::scalar::FieldTag::Q));
        v1.set(0, space.coord_f(2), ExactScalar::from_int(1, crate::scalar::FieldTag::Q));
        assert!(s.contains_vector(&v1));
        let mut v2 = ExactMatrix::zero(1, 4, crate::scalar::FieldTag::Q);
        v2.set(0, space.coord_f(1), ExactScalar::from_int(1, crate::scalar::FieldTag::Q));
        v2.set(0, space.coord_e(2), ExactScalar::from_int(1, crate::scalar::FieldTag::Q));
        assert!(s.contains_vector(&v2));
    }

    #[test]
    fn canonical_rep_classifies_back_small() {
        for case in [CaseTag::RealOrthogonal, CaseTag::Unitary] {
            let params = real(3, 3, 1, 2);
            for r in 1..=3 {
                for t in valid_tuples(case, params, r).unwrap() {
                    let s = canonical_rep(case, params, &t).unwrap();
                    assert_eq!(classify(&s).unwrap(), t, "case {case} tuple {t}");
                }
            }
        }
        for (case, params) in [
            (CaseTag::ComplexOrthogonal, GroupParams::Split { n: 5, m: 2 }),
            (CaseTag::Symplectic, GroupParams::Split { n: 3, m: 1 }),
        ] {
            let max = if case == CaseTag::Symplectic { 3 } else { 2 };
            for r in 1..=max {
                for t in valid_tuples(case, params, r).unwrap() {
                    let s = canonical_rep(case, params, &t).unwrap();
                    assert_eq!(classify(&s).unwrap(), t, "case {case} tuple {t}");
                }
            }
        }
    }

    #[test]
    fn open_orbits_examples() {
        let c = CaseTag::RealOrthogonal;
        assert_eq!(
            open_orbits(c, real(4, 4, 2, 2), 3).unwrap(),
            vec![OrbitParams::signed(c, 0, 0, 0, 1, 2), OrbitParams::signed(c, 0, 0, 0, 2, 1)]
        );
        // Unique open orbit regime: p1 + q1 <= r <= p - p1, q - q1, dim U <= dim W.
        assert_eq!(
            open_orbits(c, real(5, 5, 1, 1), 3).unwrap(),
            vec![OrbitParams::signed(c, 0, 1, 0, 1, 1)]
        );

        let sy = CaseTag::Symplectic;
        let sp = GroupParams::Split { n: 6, m: 1 };
        let expect = [
            OrbitParams::split(sy, 0, 0, 1, 0),
            OrbitParams::split(sy, 0, 0, 0, 2),
            OrbitParams::split(sy, 0, 1, 0, 2),
            OrbitParams::split(sy, 0, 2, 0, 2),
            OrbitParams::split(sy, 0, 3, 0, 2),
            OrbitParams::split(sy, 0, 4, 0, 2),
        ];
        for (r, want) in (1..=6).zip(expect) {
            assert_eq!(open_orbits(sy, sp, r).unwrap(), vec![want], "r = {r}");
        }

        let u = CaseTag::Unitary;
        assert_eq!(
            open_orbits(u, real(4, 4, 2, 2), 3).unwrap(),
            vec![OrbitParams::signed(u, 0, 0, 0, 1, 2), OrbitParams::signed(u, 0, 0, 0, 2, 1)]
        );
    }

    #[test]
    fn component_count_examples() {
        let c = CaseTag::RealOrthogonal;
        let p = real(2, 2, 1, 1);
        assert_eq!(component_count(c, p, &OrbitParams::signed(c, 0, 0, 1, 0, 0)).unwrap(), 4);
        assert_eq!(component_count(c, p, &OrbitParams::signed(c, 1, 0, 0, 0, 0)).unwrap(), 1);

        let co = CaseTag::ComplexOrthogonal;
        let sp = GroupParams::Split { n: 4, m: 2 };
        assert_eq!(component_count(co, sp, &OrbitParams::split(co, 0, 0, 0, 2)).unwrap(), 2);
        assert_eq!(component_count(co, sp, &OrbitParams::split(co, 0, 0, 0, 1)).unwrap(), 1);

        let u = CaseTag::Unitary;
        assert_eq!(component_count(u, p, &OrbitParams::signed(u, 0, 0, 1, 0, 0)).unwrap(), 1);
    }

    #[test]
    fn open_orbit_has_maximal_even_b() {
        let sy = CaseTag::Symplectic;
        let sp = GroupParams::Split { n: 6, m: 1 };
        for r in 1..=6 {
            let open = open_orbits(sy, sp, r).unwrap();
            let tuples = valid_tuples(sy, sp, r).unwrap();
            let max_b = tuples
                .iter()
                .map(|t| match t.tuple {
                    Tuple::Split { b, .. } => b,
                    _ => unreachable!(),
                })
                .max()
                .unwrap();
            for o in open {
                match o.tuple {
                    Tuple::Split { b, .. } => {
                        assert_eq!(b % 2, 0);
                        assert_eq!(b, max_b);
                    }
                    _ => unreachable!(),
                }
            }
        }
    }

    #[test]
    fn stabilizer_membership() {
        let c = CaseTag::RealOrthogonal;
        let p = real(2, 2, 1, 1);
        let t = OrbitParams::signed(c, 0, 0, 0, 1, 0);
        let s = canonical_rep(c, p, &t).unwrap();
        let id = IsometryElement::identity(s.space());
        assert!(is_in_stabilizer(&id, &s).unwrap());
    }
}
