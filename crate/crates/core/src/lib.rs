//! Exact-arithmetic classification of symmetric-subgroup orbits on isotropic
//! Grassmannians.
//!
//! A classical group `G` preserving a nondegenerate form on `V` acts on the
//! Grassmannian of `r`-dimensional isotropic subspaces; the stabilizer
//! `H = G1 × G2` of an orthogonal splitting `V = U ⊕ W` has finitely many
//! orbits there. This crate computes, entirely over the rationals and
//! Gaussian rationals:
//!
//! * the complete orbit invariant of an isotropic subspace (a 5-tuple in the
//!   signed cases, a 4-tuple in the split ones) and its constraint system;
//! * canonical representatives, stabilizer and orbit dimensions, open
//!   orbits, and identity-component orbit counts;
//! * independent verification machinery: explicit Lie-algebra bases, an
//!   exact tangent-space orbit-dimension oracle, seeded Cayley-transform
//!   samples, and diagonal sign elements with component labels;
//! * constructive Witt-style isometry extension and orbit-equivalence
//!   witnesses.
//!
//! Four cases are supported: real orthogonal `O(p,q)` split as
//! `O(p1,q1) × O(p-p1,q-q1)`, the analogous unitary pairs, split orthogonal
//! pairs over the Gaussian rationals (standing in for any algebraically
//! closed field of characteristic 0), and symplectic pairs.

pub mod error;
pub mod invariants;
pub mod io;
pub mod lie;
pub mod matrix;
pub mod nt;
pub mod orbits;
pub mod sample;
pub mod scalar;
pub mod space;
pub mod verify;
pub mod witness;
pub mod witt;

pub use error::{Error, Result};
pub use invariants::{classify, isometry_type, validate_params, OrbitParams, Tuple};
pub use matrix::{subspace_intersect, subspace_sum, ExactMatrix, RowEchelon};
pub use orbits::{
    canonical_rep, component_count, dim_group, dim_orbit, dim_stabilizer, enumerate_orbits,
    is_in_stabilizer, open_orbits, valid_tuples, IsometryElement, OrbitInfo,
};
pub use sample::{cayley_pair, cayley_sample, sign_element, ComponentLabel, SplitMix64};
pub use scalar::{ExactScalar, FieldTag};
pub use space::{CaseTag, Factor, FormSpace, GroupParams, IsometryType, Subspace};
pub use witness::orbit_witness;
pub use witt::witt_extend;
