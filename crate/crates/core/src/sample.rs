//! Deterministic sampling: seeded group elements through the Cayley
//! transform, and diagonal sign isometries with their component labels.

use crate::error::{Error, Result};
use crate::lie::lie_algebra;
use crate::matrix::ExactMatrix;
use crate::orbits::IsometryElement;
use crate::scalar::{ExactScalar, FieldTag};
use crate::space::{CaseTag, Factor, FormSpace};
use num_bigint::BigInt;
use num_rational::BigRational;

/// SplitMix64: state advances by the golden-ratio increment and the output
/// is the finalizer `z ^= z>>30, *= M1, z ^= z>>27, *= M2, z ^= z>>31`.
/// Fixed transition, stable across platforms; seeds are part of the CLI
/// contract.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw below `n` (simple modulo; bias is irrelevant here,
    /// byte-stability is what matters).
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// A rational with numerator in `[-magnitude, magnitude]` and denominator
    /// in `[1, magnitude]`.
    pub fn ratio(&mut self, magnitude: u64) -> BigRational {
        let m = magnitude.max(1);
        let num = self.below(2 * m + 1) as i64 - m as i64;
        let den = 1 + self.below(m) as i64;
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn scalar(&mut self, field: FieldTag, magnitude: u64) -> ExactScalar {
        if field.is_gaussian() {
            ExactScalar::new(self.ratio(magnitude), self.ratio(magnitude), field)
        } else {
            ExactScalar::rational(self.ratio(magnitude), field)
        }
    }
}

/// A seeded factor isometry in the identity component: a random Lie algebra
/// element `A` with bounded rational coefficients, mapped through
/// `g = (I - A)(I + A)^{-1}`. Resamples (bounded) when `I + A` is singular.
pub fn cayley_sample(
    space: &FormSpace,
    factor: Factor,
    seed: u64,
    magnitude: u64,
) -> Result<ExactMatrix> {
    let alg = lie_algebra(space, factor);
    let d = space.dim_factor(factor);
    let field = space.field();
    let mut rng = SplitMix64::new(seed);
    for _ in 0..64 {
        let mut a = ExactMatrix::zero(d, d, field);
        for basis_el in &alg.basis {
            // Sparse combination: keep roughly half the generators.
            if rng.below(2) == 0 {
                continue;
            }
            let coeff = if space.case == CaseTag::ComplexOrthogonal {
                rng.scalar(field, magnitude)
            } else {
                ExactScalar::rational(rng.ratio(magnitude), field)
            };
            if coeff.is_zero() {
                continue;
            }
            a = &a + &basis_el.scale(&coeff);
        }
        let id = ExactMatrix::identity(d, field);
        let Some(inv) = (&id + &a).inverse() else {
            continue;
        };
        let g = &(&id - &a) * &inv;
        debug_assert!(space.is_factor_isometry(factor, &g));
        return Ok(g);
    }
    Err(Error::SamplerExhausted)
}

/// A seeded element of the full subgroup's identity component: independent
/// Cayley samples on both factors.
pub fn cayley_pair(space: &FormSpace, seed: u64, magnitude: u64) -> Result<IsometryElement> {
    let h1 = cayley_sample(space, Factor::U, seed ^ 0x9E37_79B9, magnitude)?;
    let h2 = cayley_sample(space, Factor::W, seed.wrapping_add(0x7F4A_7C15), magnitude)?;
    Ok(IsometryElement { h1, h2 })
}

/// Component label of a factor-block-diagonal sign isometry: one reversal
/// parity per fixed-basis block (four blocks in the real orthogonal case,
/// two in the split orthogonal case, none for the connected cases).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentLabel(pub Vec<bool>);

impl ComponentLabel {
    pub fn product(&self, other: &ComponentLabel) -> ComponentLabel {
        assert_eq!(self.0.len(), other.0.len());
        ComponentLabel(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }

    /// The invariant distinguishing cosets of the subgroup's intersection
    /// with the ambient identity component: block parities multiply in pairs.
    pub fn coset(&self) -> Vec<bool> {
        match self.0.len() {
            4 => vec![self.0[0] ^ self.0[2], self.0[1] ^ self.0[3]],
            2 => vec![self.0[0] ^ self.0[1]],
            _ => vec![],
        }
    }

    pub fn is_identity_coset(&self) -> bool {
        self.coset().iter().all(|&b| !b)
    }
}

impl std::fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", if b { '-' } else { '+' })?;
        }
        Ok(())
    }
}

/// The diagonal isometry negating exactly the flipped ambient basis vectors,
/// with its component label. Errors when an index is out of range or the
/// diagonal is not an isometry of the form (symplectic flips must pair
/// each `e_i` with its `f_i`).
pub fn sign_element(space: &FormSpace, flips: &[usize]) -> Result<(IsometryElement, ComponentLabel)> {
    let d = space.dim_v();
    for &i in flips {
        if i >= d {
            return Err(Error::IndexOutOfRange(i));
        }
    }
    let field = space.field();
    let mut diag = ExactMatrix::identity(d, field);
    for &i in flips {
        diag.set(i, i, ExactScalar::from_int(-1, field));
    }
    let du = space.dim_factor(Factor::U);
    let h = IsometryElement {
        h1: diag.submatrix(0, du, 0, du),
        h2: diag.submatrix(du, d, du, d),
    };
    if !h.is_valid(space) {
        return Err(Error::NotIsometry);
    }
    let parity = |lo: usize, hi: usize| flips.iter().filter(|&&i| i >= lo && i < hi).count() % 2 == 1;
    let label = match space.case {
        CaseTag::RealOrthogonal | CaseTag::Unitary => {
            let (p, q, p1, q1) = space.params.signature();
            let label = ComponentLabel(vec![
                parity(0, p1),
                parity(p1, p1 + q1),
                parity(p1 + q1, p1 + q1 + (p - p1)),
                parity(p1 + q1 + (p - p1), p + q),
            ]);
            if space.case == CaseTag::Unitary {
                // The unitary groups are connected; keep no label.
                ComponentLabel(vec![])
            } else {
                label
            }
        }
        CaseTag::ComplexOrthogonal => {
            let (n, m) = space.params.split();
            ComponentLabel(vec![parity(0, m), parity(m, n)])
        }
        CaseTag::Symplectic => ComponentLabel(vec![]),
    };
    Ok((h, label))
}

/// Representative flip sets for every component of the subgroup (sixteen in
/// the real orthogonal case, four in the split orthogonal case, one
/// otherwise). Each flips at most one last basis vector per block, exactly
/// as the coset decomposition of the component group requires.
pub fn component_representative_flips(space: &FormSpace) -> Vec<Vec<usize>> {
    match space.case {
        CaseTag::RealOrthogonal => {
            let (p, q, p1, q1) = space.params.signature();
            let last = [
                space.coord_u_plus(p1),
                space.coord_u_minus(q1),
                space.coord_w_plus(p - p1),
                space.coord_w_minus(q - q1),
            ];
            (0..16u32)
                .map(|mask| {
                    (0..4).filter(|&b| mask & (1 << b) != 0).map(|b| last[b]).collect()
                })
                .collect()
        }
        CaseTag::ComplexOrthogonal => {
            let (n, m) = space.params.split();
            let last = [space.coord_split_u(m), space.coord_split_w(n - m)];
            (0..4u32)
                .map(|mask| {
                    (0..2).filter(|&b| mask & (1 << b) != 0).map(|b| last[b]).collect()
                })
                .collect()
        }
        _ => vec![vec![]],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::GroupParams;

    fn real2211() -> std::sync::Arc<FormSpace> {
        FormSpace::standard(
            CaseTag::RealOrthogonal,
            GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 },
        )
        .unwrap()
    }

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..16 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn cayley_preserves_gram_exactly() {
        for (case, params) in [
            (CaseTag::RealOrthogonal, GroupParams::Signature { p: 3, q: 2, p1: 1, q1: 1 }),
            (CaseTag::Unitary, GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 }),
            (CaseTag::ComplexOrthogonal, GroupParams::Split { n: 5, m: 2 }),
            (CaseTag::Symplectic, GroupParams::Split { n: 3, m: 1 }),
        ] {
            let space = FormSpace::standard(case, params).unwrap();
            for seed in 0..5 {
                let g = cayley_sample(&space, Factor::U, seed, 2).unwrap();
                assert!(space.is_factor_isometry(Factor::U, &g), "case {case} seed {seed}");
            }
        }
    }

    #[test]
    fn cayley_zero_algebra_component_is_identity() {
        // With an empty generator pick the transform of A = 0 is the identity;
        // emulate by checking (I-0)(I+0)^{-1} directly through a seed whose
        // first draws skip every generator is not guaranteed, so check the
        // identity algebraically instead.
        let space = real2211();
        let d = space.dim_factor(Factor::U);
        let id = ExactMatrix::identity(d, space.field());
        let a = ExactMatrix::zero(d, d, space.field());
        let g = &(&id - &a) * &(&id + &a).inverse().unwrap();
        assert_eq!(g, id);
    }

    #[test]
    fn cayley_same_seed_same_output() {
        let space = real2211();
        let a = cayley_sample(&space, Factor::W, 7, 2).unwrap();
        let b = cayley_sample(&space, Factor::W, 7, 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sign_element_identity_and_labels() {
        let space = real2211();
        let (h, label) = sign_element(&space, &[]).unwrap();
        assert_eq!(h.embed(), ExactMatrix::identity(4, FieldTag::Q));
        assert_eq!(label, ComponentLabel(vec![false; 4]));
        assert!(label.is_identity_coset());

        // Flip w1+ only: component (+,+,-,+), a non-identity coset.
        let (h, label) = sign_element(&space, &[2]).unwrap();
        assert!(h.is_valid(&space));
        assert_eq!(label, ComponentLabel(vec![false, false, true, false]));
        assert_eq!(label.coset(), vec![true, false]);
    }

    #[test]
    fn sign_labels_compose() {
        let space = real2211();
        // u1+ & w1- together, and u1+ alone, compose to w1- alone.
        let (_, l1) = sign_element(&space, &[0, 3]).unwrap();
        let (_, l2) = sign_element(&space, &[0]).unwrap();
        let (_, l3) = sign_element(&space, &[3]).unwrap();
        assert_eq!(l1.product(&l2), l3);
        assert_eq!(l1.coset(), vec![true, true]);
    }

    #[test]
    fn symplectic_sign_must_pair() {
        let space =
            FormSpace::standard(CaseTag::Symplectic, GroupParams::Split { n: 2, m: 1 }).unwrap();
        assert!(matches!(sign_element(&space, &[0]), Err(Error::NotIsometry)));
        let (h, _) = sign_element(&space, &[space.coord_e(1), space.coord_f(1)]).unwrap();
        assert!(h.is_valid(&space));
    }

    #[test]
    fn component_representatives_cover() {
        let space = real2211();
        let reps = component_representative_flips(&space);
        assert_eq!(reps.len(), 16);
        let labels: std::collections::HashSet<Vec<bool>> = reps
            .iter()
            .map(|f| sign_element(&space, f).unwrap().1 .0)
            .collect();
        assert_eq!(labels.len(), 16);
    }

    #[test]
    fn index_out_of_range() {
        let space = real2211();
        assert!(matches!(sign_element(&space, &[9]), Err(Error::IndexOutOfRange(9))));
    }
}
