//! Orbit invariants of isotropic subspaces under the split-stabilizer
//! subgroup: the case-tagged integer tuple, its constraint system, and the
//! classification map. Every invariant is recomputed from both factors and
//! any disagreement is reported as an internal-consistency error instead of
//! trusting one side.

use crate::error::{Error, Result};
use crate::space::{CaseTag, Factor, GroupParams, IsometryType, Subspace};
use std::cmp::Ordering;
use std::fmt;

/// The case-tagged orbit invariant: `(r_U, r_W, a, a_U, a_W)` in the signed
/// cases, `(r_U, r_W, a, b)` in the split cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tuple {
    Signed { r_u: usize, r_w: usize, a: usize, a_u: usize, a_w: usize },
    Split { r_u: usize, r_w: usize, a: usize, b: usize },
}

impl Tuple {
    pub fn entries(&self) -> Vec<usize> {
        match *self {
            Tuple::Signed { r_u, r_w, a, a_u, a_w } => vec![r_u, r_w, a, a_u, a_w],
            Tuple::Split { r_u, r_w, a, b } => vec![r_u, r_w, a, b],
        }
    }

    /// Total isotropic dimension `r` (sum of entries).
    pub fn r(&self) -> usize {
        self.entries().iter().sum()
    }

    pub fn r_u(&self) -> usize {
        match *self {
            Tuple::Signed { r_u, .. } | Tuple::Split { r_u, .. } => r_u,
        }
    }

    pub fn r_w(&self) -> usize {
        match *self {
            Tuple::Signed { r_w, .. } | Tuple::Split { r_w, .. } => r_w,
        }
    }

    pub fn a(&self) -> usize {
        match *self {
            Tuple::Signed { a, .. } | Tuple::Split { a, .. } => a,
        }
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.entries();
        write!(f, "(")?;
        for (i, v) in e.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl serde::Serialize for Tuple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrbitParams {
    pub case: CaseTag,
    pub tuple: Tuple,
}

impl OrbitParams {
    pub fn signed(case: CaseTag, r_u: usize, r_w: usize, a: usize, a_u: usize, a_w: usize) -> Self {
        debug_assert!(case.is_signed());
        OrbitParams { case, tuple: Tuple::Signed { r_u, r_w, a, a_u, a_w } }
    }

    pub fn split(case: CaseTag, r_u: usize, r_w: usize, a: usize, b: usize) -> Self {
        debug_assert!(!case.is_signed());
        OrbitParams { case, tuple: Tuple::Split { r_u, r_w, a, b } }
    }

    pub fn r(&self) -> usize {
        self.tuple.r()
    }

    /// Parse a comma-separated entry list for the given case.
    pub fn parse(case: CaseTag, s: &str) -> Result<Self> {
        let entries: Vec<usize> = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
            .collect::<Result<_>>()?;
        let tuple = match (case.is_signed(), entries.as_slice()) {
            (true, &[r_u, r_w, a, a_u, a_w]) => Tuple::Signed { r_u, r_w, a, a_u, a_w },
            (false, &[r_u, r_w, a, b]) => Tuple::Split { r_u, r_w, a, b },
            _ => {
                return Err(Error::Parse(format!(
                    "expected {} entries for case {case}, got {}",
                    if case.is_signed() { 5 } else { 4 },
                    entries.len()
                )))
            }
        };
        Ok(OrbitParams { case, tuple })
    }
}

impl PartialOrd for OrbitParams {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrbitParams {
    fn cmp(&self, other: &Self) -> Ordering {
        self.tuple.entries().cmp(&other.tuple.entries())
    }
}

impl fmt::Display for OrbitParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tuple)
    }
}

/// Does the tuple satisfy the case's inequality system?
pub fn validate_params(case: CaseTag, params: GroupParams, t: &OrbitParams) -> bool {
    if t.case != case || params.validate(case).is_err() {
        return false;
    }
    match (case, t.tuple) {
        (CaseTag::RealOrthogonal | CaseTag::Unitary, Tuple::Signed { r_u, r_w, a, a_u, a_w }) => {
            let (p, q, p1, q1) = params.signature();
            r_u + a + a_u <= p1
                && r_u + a + a_w <= q1
                && r_w + a + a_w <= p - p1
                && r_w + a + a_u <= q - q1
        }
        (CaseTag::ComplexOrthogonal, Tuple::Split { r_u, r_w, a, b }) => {
            let (n, m) = params.split();
            2 * r_u + 2 * a + b <= m && 2 * r_w + 2 * a + b <= n - m
        }
        (CaseTag::Symplectic, Tuple::Split { r_u, r_w, a, b }) => {
            let (n, m) = params.split();
            b % 2 == 0 && r_u + a + b / 2 <= m && r_w + a + b / 2 <= n - m
        }
        _ => false,
    }
}

/// The orbit invariant of an isotropic subspace.
///
/// Every entry is computed from the U side and recomputed from the W side;
/// disagreement is an internal error. The result always satisfies
/// `validate_params`.
pub fn classify(s: &Subspace) -> Result<OrbitParams> {
    let space = s.space();
    let r = s.dim();
    let basis = s.basis();
    let d = space.dim_v();
    let ur = space.factor_range(Factor::U);
    let bu = basis.submatrix(0, r, ur.start, ur.end);
    let bw = basis.submatrix(0, r, ur.end, d);
    classify_split_rows(space, &bu, &bw)
}

/// `classify` on the two factor slices of any independent spanning rows.
///
/// The computation runs on ranks of the slices and on the two factor pairing
/// matrices; the pairing matrix of a spanning list has the rank and
/// signature of the restricted form, so no echelon normalization is needed.
pub fn classify_split_rows(
    space: &crate::space::FormSpace,
    bu: &crate::matrix::ExactMatrix,
    bw: &crate::matrix::ExactMatrix,
) -> Result<OrbitParams> {
    let case = space.case;
    let r = bu.rows();
    debug_assert_eq!(bw.rows(), r);
    let gu = space.factor_gram(Factor::U);
    let gw = space.factor_gram(Factor::W);
    let mu = &(&bu * &gu) * &bu.conj_transpose();
    let mw = &(&bw * &gw) * &bw.conj_transpose();
    // U ⊥ W, so the restricted Gram on S is the sum of the factor pairings.
    if !(&mu + &mw).is_zero() {
        return Err(Error::NotIsotropic);
    }
    let rho_u = bu.rank(); // dim proj_U S
    let rho_w = bw.rank();
    let r_u = r - rho_w; // dim (S ∩ U)
    let r_w = r - rho_u;
    let rank_mu = mu.rank();
    let rank_mw = mw.rank();
    if rank_mu != rank_mw {
        return Err(Error::Inconsistency(format!(
            "restricted form ranks differ across factors: {rank_mu} vs {rank_mw}"
        )));
    }
    let rad_u = rho_u - rank_mu; // dim Rad(proj_U S)
    let rad_w = rho_w - rank_mw;
    if rad_u < r_u || rad_w < r_w {
        return Err(Error::Inconsistency("factor intersection outside projection radical".into()));
    }
    let a = rad_u - r_u;
    if rad_w - r_w != a {
        return Err(Error::Inconsistency(format!(
            "radical excess differs across factors: {} vs {}",
            a,
            rad_w - r_w
        )));
    }
    let t = if case.is_signed() {
        let sig = |m: &crate::matrix::ExactMatrix| -> Result<(usize, usize)> {
            let diag = crate::space::congruence_diagonalize(m).diag;
            let mut plus = 0;
            let mut minus = 0;
            for v in diag {
                if !v.is_rational() {
                    return Err(Error::Inconsistency("non-real hermitian diagonal".into()));
                }
                match v.rational_sign() {
                    1 => plus += 1,
                    -1 => minus += 1,
                    _ => {}
                }
            }
            Ok((plus, minus))
        };
        let (a_u, a_w) = sig(&mu)?;
        let (w_plus, w_minus) = sig(&mw)?;
        if a_u != w_minus || a_w != w_plus {
            return Err(Error::Inconsistency(format!(
                "factor signatures are not mutually negated: ({a_u},{a_w}) vs ({w_plus},{w_minus})"
            )));
        }
        OrbitParams::signed(case, r_u, r_w, a, a_u, a_w)
    } else {
        if case == CaseTag::Symplectic && rank_mu % 2 != 0 {
            return Err(Error::Inconsistency(format!("odd symplectic rank b={rank_mu}")));
        }
        OrbitParams::split(case, r_u, r_w, a, rank_mu)
    };
    if t.r() != r {
        return Err(Error::Inconsistency(format!(
            "tuple sum {} does not match dim S = {}",
            t.r(),
            r
        )));
    }
    if !validate_params(case, space.params, &t) {
        return Err(Error::Inconsistency(format!("classified tuple {t} violates the constraints")));
    }
    Ok(t)
}

/// The ambient-group orbit invariant `(s, s+, s-)` of an arbitrary subspace
/// (not necessarily isotropic); signed cases only.
pub fn isometry_type(s: &Subspace) -> Result<IsometryType> {
    s.signature()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ExactMatrix;
    use crate::scalar::ExactScalar;
    use crate::space::FormSpace;
    use std::sync::Arc;

    fn real2211() -> Arc<FormSpace> {
        FormSpace::standard(
            CaseTag::RealOrthogonal,
            GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 },
        )
        .unwrap()
    }

    fn line(space: &Arc<FormSpace>, coords: &[(usize, i64)]) -> Subspace {
        let mut m = ExactMatrix::zero(1, space.dim_v(), space.field());
        for &(c, v) in coords {
            m.set(0, c, ExactScalar::from_int(v, space.field()));
        }
        Subspace::new(space.clone(), m).unwrap()
    }

    #[test]
    fn classify_line_inside_u() {
        let sp = real2211();
        let s = line(&sp, &[(0, 1), (1, 1)]); // u1+ + u1-
        assert_eq!(
            classify(&s).unwrap(),
            OrbitParams::signed(CaseTag::RealOrthogonal, 1, 0, 0, 0, 0)
        );
    }

    #[test]
    fn classify_mixed_line() {
        let sp = real2211();
        let s = line(&sp, &[(0, 1), (3, 1)]); // u1+ + w1-
        assert_eq!(
            classify(&s).unwrap(),
            OrbitParams::signed(CaseTag::RealOrthogonal, 0, 0, 0, 1, 0)
        );
    }

    #[test]
    fn classify_symplectic_e1() {
        let sp =
            FormSpace::standard(CaseTag::Symplectic, GroupParams::Split { n: 2, m: 1 }).unwrap();
        let s = line(&sp, &[(sp.coord_e(1), 1)]);
        assert_eq!(classify(&s).unwrap(), OrbitParams::split(CaseTag::Symplectic, 1, 0, 0, 0));
    }

    #[test]
    fn classify_rejects_non_isotropic() {
        let sp = real2211();
        let s = line(&sp, &[(0, 1)]);
        assert!(matches!(classify(&s), Err(Error::NotIsotropic)));
    }

    #[test]
    fn validate_small_examples() {
        let case = CaseTag::RealOrthogonal;
        let params = GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 };
        assert!(validate_params(case, params, &OrbitParams::signed(case, 0, 0, 1, 0, 0)));
        assert!(!validate_params(case, params, &OrbitParams::signed(case, 2, 0, 0, 0, 0)));
        let sy = CaseTag::Symplectic;
        let sp = GroupParams::Split { n: 2, m: 1 };
        assert!(!validate_params(sy, sp, &OrbitParams::split(sy, 0, 0, 1, 1)));
        assert!(validate_params(sy, sp, &OrbitParams::split(sy, 0, 0, 0, 2)));
    }

    #[test]
    fn isometry_type_examples() {
        let sp = real2211();
        let iso = line(&sp, &[(0, 1), (1, 1)]);
        assert_eq!(
            isometry_type(&iso).unwrap(),
            IsometryType { s: 1, s_plus: 0, s_minus: 0 }
        );
        let u = Subspace::new(
            sp.clone(),
            ExactMatrix::from_i64(crate::scalar::FieldTag::Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
        )
        .unwrap();
        assert_eq!(isometry_type(&u).unwrap(), IsometryType { s: 0, s_plus: 1, s_minus: 1 });
    }

    #[test]
    fn classify_empty_subspace() {
        let sp = real2211();
        let s = Subspace::zero(sp);
        assert_eq!(
            classify(&s).unwrap(),
            OrbitParams::signed(CaseTag::RealOrthogonal, 0, 0, 0, 0, 0)
        );
    }
}
