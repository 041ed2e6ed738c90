//! Verification suites: property checks pairing the closed-form orbit
//! calculus against the independent tangent-space oracle, invariance under
//! seeded group elements across all components, open-orbit cross-checks,
//! component-count constructive checks, symplectic parity, and witness
//! soundness. The same engine backs the command-line `verify` command and
//! the acceptance test target.

use crate::invariants::{classify, OrbitParams, Tuple};
use crate::lie::tangent_orbit_dim;
use crate::orbits::{
    canonical_rep, component_count, dim_group, dim_stabilizer, enumerate_orbits, is_in_stabilizer,
    open_orbits, valid_tuples,
};
use crate::sample::{cayley_pair, component_representative_flips, sign_element, SplitMix64};
use crate::space::{CaseTag, FormSpace, GroupParams};
use rayon::prelude::*;

pub const ALL_CASES: [CaseTag; 4] =
    [CaseTag::RealOrthogonal, CaseTag::Unitary, CaseTag::ComplexOrthogonal, CaseTag::Symplectic];

/// Size bounds for exhaustive sweeps: ambient dimension limits per case.
#[derive(Debug, Clone, Copy)]
pub struct Scale {
    pub max_ambient: usize,
    pub max_symplectic_ambient: usize,
}

/// The scale the acceptance criteria are pinned at.
pub const ACCEPTANCE_SCALE: Scale = Scale { max_ambient: 8, max_symplectic_ambient: 10 };

/// A smaller sweep for quick runs.
pub const QUICK_SCALE: Scale = Scale { max_ambient: 6, max_symplectic_ambient: 8 };

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str, checked: usize, failures: Vec<String>) -> Self {
        SuiteReport { name: name.to_string(), checked, failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        if self.passed() {
            format!("{}: PASS ({} checks)", self.name, self.checked)
        } else {
            let first = self.failures.first().cloned().unwrap_or_default();
            format!(
                "{}: FAIL ({} checks, {} failures; first: {})",
                self.name,
                self.checked,
                self.failures.len(),
                first
            )
        }
    }
}

/// Every parameter set of a case within the scale bounds.
pub fn all_group_params(case: CaseTag, scale: &Scale) -> Vec<GroupParams> {
    let mut out = Vec::new();
    match case {
        CaseTag::RealOrthogonal | CaseTag::Unitary => {
            let a = scale.max_ambient;
            for p in 2..=a.saturating_sub(2) {
                for q in 2..=(a - p) {
                    for p1 in 1..p {
                        for q1 in 1..q {
                            out.push(GroupParams::Signature { p, q, p1, q1 });
                        }
                    }
                }
            }
        }
        CaseTag::ComplexOrthogonal => {
            for n in 2..=scale.max_ambient {
                for m in 1..n {
                    out.push(GroupParams::Split { n, m });
                }
            }
        }
        CaseTag::Symplectic => {
            for n in 2..=(scale.max_symplectic_ambient / 2) {
                for m in 1..n {
                    out.push(GroupParams::Split { n, m });
                }
            }
        }
    }
    out
}

/// Every `(params, tuple)` with `1 ≤ r ≤ max isotropic dimension` in scale.
pub fn canonical_targets(case: CaseTag, scale: &Scale) -> Vec<(GroupParams, OrbitParams)> {
    let mut out = Vec::new();
    for params in all_group_params(case, scale) {
        let space = FormSpace::standard(case, params).expect("validated params");
        for r in 1..=space.max_isotropic_dim() {
            for t in valid_tuples(case, params, r).expect("validated params") {
                out.push((params, t));
            }
        }
    }
    out
}

fn collect_failures<T: Sync>(
    items: &[T],
    f: impl Fn(usize, &T) -> Vec<String> + Sync,
) -> Vec<String> {
    items
        .par_iter()
        .enumerate()
        .map(|(i, item)| f(i, item))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Criterion: classifying the canonical representative returns its tuple,
/// for every validated tuple at scale.
pub fn suite_round_trip(scale: &Scale) -> SuiteReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for case in ALL_CASES {
        let targets = canonical_targets(case, scale);
        checked += targets.len();
        failures.extend(collect_failures(&targets, |_, (params, t)| {
            let mut out = Vec::new();
            match canonical_rep(case, *params, t) {
                Ok(s) => match classify(&s) {
                    Ok(back) if back == *t => {}
                    Ok(back) => out.push(format!("{case} {params} {t}: classified as {back}")),
                    Err(e) => out.push(format!("{case} {params} {t}: classify failed: {e}")),
                },
                Err(e) => out.push(format!("{case} {params} {t}: canonical_rep failed: {e}")),
            }
            out
        }));
    }
    SuiteReport::new("round-trip", checked, failures)
}

/// Criterion: the tuple is invariant under seeded identity-component samples
/// composed with every component sign representative.
pub fn suite_h_invariance(scale: &Scale, seed: u64, trials: u64) -> SuiteReport {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for case in ALL_CASES {
        let targets = canonical_targets(case, scale);
        let per_item: Vec<Vec<String>> = targets
            .par_iter()
            .enumerate()
            .map(|(idx, (params, t))| {
                let mut out = Vec::new();
                let space = FormSpace::standard(case, *params).expect("validated");
                let s = match canonical_rep(case, *params, t) {
                    Ok(s) => s,
                    Err(e) => return vec![format!("{case} {params} {t}: rep failed: {e}")],
                };
                let reps = component_representative_flips(&space);
                let mut item_seed = SplitMix64::new(seed ^ (idx as u64).wrapping_mul(0x9E3779B97F4A7C15));
                for _ in 0..trials {
                    let h = match cayley_pair(&space, item_seed.next_u64(), 2) {
                        Ok(h) => h,
                        Err(e) => {
                            out.push(format!("{case} {params} {t}: sampler failed: {e}"));
                            continue;
                        }
                    };
                    for flips in &reps {
                        let (sig, _) = sign_element(&space, flips).expect("representative flips");
                        let g = sig.compose(&h);
                        let s2 = s.apply(&g.embed());
                        match classify(&s2) {
                            Ok(back) if back == *t => {}
                            Ok(back) => out.push(format!(
                                "{case} {params} {t}: moved to {back} under a group element"
                            )),
                            Err(e) => out
                                .push(format!("{case} {params} {t}: classify after move failed: {e}")),
                        }
                    }
                }
                out
            })
            .collect();
        for ((params, _), fails) in targets.iter().zip(per_item.iter()) {
            let space = FormSpace::standard(case, *params).expect("validated");
            checked += trials as usize * component_representative_flips(&space).len();
            failures.extend(fails.iter().cloned());
        }
    }
    SuiteReport::new("h-invariance", checked, failures)
}

/// Criterion: closed-form orbit dimension equals the tangent-space rank at
/// every canonical representative, as exact integers. `corruption` shifts
/// the closed form and must make the suite fail (harness sensitivity).
pub fn suite_formula_vs_oracle(scale: &Scale, corruption: i64) -> SuiteReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for case in ALL_CASES {
        let targets = canonical_targets(case, scale);
        checked += targets.len();
        failures.extend(collect_failures(&targets, |_, (params, t)| {
            let mut out = Vec::new();
            let formula = match dim_stabilizer(case, *params, t) {
                Ok(d) => dim_group(case, *params) as i64 - d as i64 + corruption,
                Err(e) => {
                    out.push(format!("{case} {params} {t}: formula failed: {e}"));
                    return out;
                }
            };
            let s = canonical_rep(case, *params, t).expect("validated tuple");
            match tangent_orbit_dim(&s) {
                Ok(oracle) => {
                    if oracle as i64 != formula {
                        out.push(format!(
                            "{case} {params} {t}: formula {formula} vs oracle {oracle}"
                        ));
                    }
                }
                Err(e) => out.push(format!("{case} {params} {t}: oracle failed: {e}")),
            }
            out
        }));
    }
    SuiteReport::new("formula-vs-oracle", checked, failures)
}

/// Criterion: the closed-form open-orbit sets match the dimension argmax of
/// the enumeration everywhere in scale, plus pinned spot values.
pub fn suite_open_orbits(scale: &Scale) -> SuiteReport {
    let mut checked = 0;
    let mut failures: Vec<String> = Vec::new();
    for case in ALL_CASES {
        for params in all_group_params(case, scale) {
            let space = FormSpace::standard(case, params).expect("validated");
            for r in 1..=space.max_isotropic_dim() {
                checked += 1;
                if let Err(e) = open_orbits(case, params, r) {
                    failures.push(format!("{case} {params} r={r}: {e}"));
                }
            }
        }
    }
    // Spot: two open orbits for the signed cases at (4,4,2,2), r = 3.
    for case in [CaseTag::RealOrthogonal, CaseTag::Unitary] {
        checked += 1;
        let params = GroupParams::Signature { p: 4, q: 4, p1: 2, q1: 2 };
        match open_orbits(case, params, 3) {
            Ok(open) => {
                let expect = vec![
                    OrbitParams::signed(case, 0, 0, 0, 1, 2),
                    OrbitParams::signed(case, 0, 0, 0, 2, 1),
                ];
                if open != expect {
                    failures.push(format!("{case} (4,4,2,2) r=3 open set mismatch: {open:?}"));
                }
            }
            Err(e) => failures.push(format!("{case} (4,4,2,2) r=3: {e}")),
        }
    }
    // Spot: the published open-orbit sequence for the 12-dimensional
    // symplectic ambient split 2 + 10.
    {
        let case = CaseTag::Symplectic;
        let params = GroupParams::Split { n: 6, m: 1 };
        let expect = [
            OrbitParams::split(case, 0, 0, 1, 0),
            OrbitParams::split(case, 0, 0, 0, 2),
            OrbitParams::split(case, 0, 1, 0, 2),
            OrbitParams::split(case, 0, 2, 0, 2),
            OrbitParams::split(case, 0, 3, 0, 2),
            OrbitParams::split(case, 0, 4, 0, 2),
        ];
        for (r, want) in (1..=6).zip(expect) {
            checked += 1;
            match open_orbits(case, params, r) {
                Ok(open) if open == vec![want] => {}
                Ok(open) => failures.push(format!("symplectic (6,1) r={r}: got {open:?}")),
                Err(e) => failures.push(format!("symplectic (6,1) r={r}: {e}")),
            }
        }
    }
    SuiteReport::new("open-orbits", checked, failures)
}

/// Criterion: validated signed tuples sharing `(r_U, r_W, a, a_U + a_W)`
/// have equal orbit dimension.
pub fn suite_equal_dimension(scale: &Scale) -> SuiteReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for case in [CaseTag::RealOrthogonal, CaseTag::Unitary] {
        for params in all_group_params(case, scale) {
            let space = FormSpace::standard(case, params).expect("validated");
            for r in 1..=space.max_isotropic_dim() {
                let infos = enumerate_orbits(case, params, r).expect("in range");
                let mut groups: std::collections::BTreeMap<(usize, usize, usize, usize), Vec<usize>> =
                    Default::default();
                for info in &infos {
                    if let Tuple::Signed { r_u, r_w, a, a_u, a_w } = info.tuple {
                        groups.entry((r_u, r_w, a, a_u + a_w)).or_default().push(info.dim_orbit);
                    }
                }
                for (key, dims) in groups {
                    checked += 1;
                    if dims.windows(2).any(|w| w[0] != w[1]) {
                        failures.push(format!(
                            "{case} {params} r={r}: dims {dims:?} differ in class {key:?}"
                        ));
                    }
                }
            }
        }
    }
    SuiteReport::new("equal-dimension", checked, failures)
}

/// The clopen-coset invariant vectors generated by a set, as an F2 span size.
fn f2_span_size(vectors: &[Vec<bool>]) -> usize {
    let mut basis: Vec<Vec<bool>> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for b in &basis {
            if v.iter().zip(b).any(|(x, y)| *x && *y) {
                // reduce on the leading set bit of b
                let lead = b.iter().position(|&x| x).unwrap();
                if v[lead] {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x ^= *y;
                    }
                }
            }
        }
        if v.iter().any(|&x| x) {
            basis.push(v);
        }
    }
    1usize << basis.len()
}

/// Sign witnesses for every true component indicator of a tuple, with the
/// predicted coset invariant of each; empty for the connected cases.
pub fn component_indicator_witnesses(
    space: &FormSpace,
    t: &OrbitParams,
) -> Vec<(Vec<usize>, Vec<bool>)> {
    let mut out = Vec::new();
    match (space.case, t.tuple) {
        (CaseTag::RealOrthogonal, Tuple::Signed { r_u, r_w, a, a_u, a_w }) => {
            let (p, q, p1, q1) = space.params.signature();
            if r_u + a + a_u < p1 {
                out.push((vec![space.coord_u_plus(p1)], vec![true, false]));
            } else if r_w + a + a_w < p - p1 {
                out.push((vec![space.coord_w_plus(p - p1)], vec![true, false]));
            }
            if r_u + a + a_w < q1 {
                out.push((vec![space.coord_u_minus(q1)], vec![false, true]));
            } else if r_w + a + a_u < q - q1 {
                out.push((vec![space.coord_w_minus(q - q1)], vec![false, true]));
            }
            if r_u > 0 {
                out.push((vec![space.coord_u_plus(1), space.coord_u_minus(1)], vec![true, true]));
            } else if r_w > 0 {
                out.push((vec![space.coord_w_plus(1), space.coord_w_minus(1)], vec![true, true]));
            } else if a_u > 0 {
                out.push((
                    vec![space.coord_u_plus(r_u + 1), space.coord_w_minus(r_w + 1)],
                    vec![true, true],
                ));
            } else if a_w > 0 {
                out.push((
                    vec![space.coord_u_minus(r_u + 1), space.coord_w_plus(r_w + 1)],
                    vec![true, true],
                ));
            }
        }
        (CaseTag::ComplexOrthogonal, Tuple::Split { r_u, r_w, a, b }) => {
            let (n, m) = space.params.split();
            if 2 * r_u + 2 * a + b < m {
                out.push((vec![space.coord_split_u(r_u + a + b + 1)], vec![true]));
            }
            if 2 * r_w + 2 * a + b < n - m {
                out.push((vec![space.coord_split_w(r_w + a + b + 1)], vec![true]));
            }
        }
        _ => {}
    }
    out
}

/// Criterion: component counts — pinned spot values, and for every tuple the
/// constructive sign elements land in the stabilizer in the predicted cosets
/// and generate a subgroup of exactly the size the count demands.
pub fn suite_component_counts(scale: &Scale) -> SuiteReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    // Spot values.
    {
        let c = CaseTag::RealOrthogonal;
        let p = GroupParams::Signature { p: 2, q: 2, p1: 1, q1: 1 };
        checked += 1;
        match component_count(c, p, &OrbitParams::signed(c, 0, 0, 1, 0, 0)) {
            Ok(4) => {}
            other => failures.push(format!("real (2,2,1,1) (0,0,1,0,0): N = {other:?}, want 4")),
        }
        let co = CaseTag::ComplexOrthogonal;
        let sp = GroupParams::Split { n: 4, m: 2 };
        checked += 1;
        match component_count(co, sp, &OrbitParams::split(co, 0, 0, 0, 2)) {
            Ok(2) => {}
            other => failures.push(format!("split (4,2) (0,0,0,2): N = {other:?}, want 2")),
        }
        let u = CaseTag::Unitary;
        checked += 1;
        match component_count(u, p, &OrbitParams::signed(u, 0, 0, 1, 0, 0)) {
            Ok(1) => {}
            other => failures.push(format!("unitary N = {other:?}, want 1")),
        }
    }
    for case in [CaseTag::RealOrthogonal, CaseTag::ComplexOrthogonal] {
        let targets = canonical_targets(case, scale);
        checked += targets.len();
        failures.extend(collect_failures(&targets, |_, (params, t)| {
            let mut out = Vec::new();
            let space = FormSpace::standard(case, *params).expect("validated");
            let n = match component_count(case, *params, t) {
                Ok(n) => n,
                Err(e) => {
                    out.push(format!("{case} {params} {t}: component count failed: {e}"));
                    return out;
                }
            };
            let s = canonical_rep(case, *params, t).expect("validated tuple");
            let witnesses = component_indicator_witnesses(&space, t);
            let mut cosets = Vec::new();
            for (flips, predicted) in &witnesses {
                match sign_element(&space, flips) {
                    Ok((h, label)) => {
                        match is_in_stabilizer(&h, &s) {
                            Ok(true) => {}
                            Ok(false) => out.push(format!(
                                "{case} {params} {t}: sign element {flips:?} not in stabilizer"
                            )),
                            Err(e) => out.push(format!("{case} {params} {t}: {e}")),
                        }
                        if &label.coset() != predicted {
                            out.push(format!(
                                "{case} {params} {t}: sign element coset {:?} != predicted {predicted:?}",
                                label.coset()
                            ));
                        }
                        cosets.push(label.coset());
                    }
                    Err(e) => out.push(format!("{case} {params} {t}: sign element failed: {e}")),
                }
            }
            let total = if case == CaseTag::RealOrthogonal { 4 } else { 2 };
            if f2_span_size(&cosets) != total / n {
                out.push(format!(
                    "{case} {params} {t}: witnesses generate {} cosets, expected {}",
                    f2_span_size(&cosets),
                    total / n
                ));
            }
            out
        }));
    }
    SuiteReport::new("component-counts", checked, failures)
}

/// Criterion: classification never returns an odd `b` on seeded random
/// isotropic subspaces, and every open orbit's `b` is even and maximal among
/// validated tuples of its dimension slice.
pub fn suite_symplectic_parity(scale: &Scale, seed: u64, samples: u64) -> SuiteReport {
    let case = CaseTag::Symplectic;
    let mut checked = 0;
    let mut failures = Vec::new();
    // Deterministic part: open orbits maximize even b.
    for params in all_group_params(case, scale) {
        let space = FormSpace::standard(case, params).expect("validated");
        for r in 1..=space.max_isotropic_dim() {
            checked += 1;
            let tuples = valid_tuples(case, params, r).expect("in range");
            let max_b = tuples
                .iter()
                .map(|t| match t.tuple {
                    Tuple::Split { b, .. } => b,
                    _ => unreachable!(),
                })
                .max()
                .unwrap_or(0);
            match open_orbits(case, params, r) {
                Ok(open) => {
                    for o in open {
                        if let Tuple::Split { b, .. } = o.tuple {
                            if b % 2 != 0 || b != max_b {
                                failures.push(format!(
                                    "{params} r={r}: open tuple {o} has b={b}, max even b={max_b}"
                                ));
                            }
                        }
                    }
                }
                Err(e) => failures.push(format!("{params} r={r}: {e}")),
            }
        }
    }
    // Random part.
    let param_list = all_group_params(case, scale);
    let indices: Vec<u64> = (0..samples).collect();
    let fails = collect_failures(&indices, |_, &i| {
        let mut rng = SplitMix64::new(seed ^ i.wrapping_mul(0xD1B54A32D192ED03));
        let params = param_list[rng.below(param_list.len() as u64) as usize];
        let space = FormSpace::standard(case, params).expect("validated");
        let r = 1 + rng.below(space.max_isotropic_dim() as u64) as usize;
        let tuples = valid_tuples(case, params, r).expect("in range");
        if tuples.is_empty() {
            return vec![];
        }
        let t = &tuples[rng.below(tuples.len() as u64) as usize];
        let s = canonical_rep(case, params, t).expect("validated tuple");
        let h = match cayley_pair(&space, rng.next_u64(), 2) {
            Ok(h) => h,
            Err(e) => return vec![format!("sample {i}: sampler failed: {e}")],
        };
        let s2 = s.apply(&h.embed());
        match classify(&s2) {
            Ok(back) => match back.tuple {
                Tuple::Split { b, .. } if b % 2 == 0 => vec![],
                Tuple::Split { b, .. } => vec![format!("sample {i}: odd b = {b}")],
                _ => vec![format!("sample {i}: wrong tuple shape")],
            },
            Err(e) => vec![format!("sample {i}: classify failed: {e}")],
        }
    });
    checked += samples as usize;
    failures.extend(fails);
    SuiteReport::new("symplectic-parity", checked, failures)
}

/// Criterion: for seeded pairs `(S, h·S)` the witness construction returns a
/// subgroup element carrying `S` to `h·S` exactly.
pub fn suite_witness(scale: &Scale, seed: u64, pairs_per_case: u64) -> SuiteReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for case in ALL_CASES {
        let targets = canonical_targets(case, scale);
        if targets.is_empty() {
            continue;
        }
        let indices: Vec<u64> = (0..pairs_per_case).collect();
        checked += indices.len();
        failures.extend(collect_failures(&indices, |_, &i| {
            let mut rng = SplitMix64::new(seed ^ i.wrapping_mul(0xBF58476D1CE4E5B9) ^ case as u64);
            let (params, t) = &targets[rng.below(targets.len() as u64) as usize];
            let space = FormSpace::standard(case, *params).expect("validated");
            let s = canonical_rep(case, *params, t).expect("validated tuple");
            let h = match cayley_pair(&space, rng.next_u64(), 2) {
                Ok(h) => h,
                Err(e) => return vec![format!("{case} pair {i}: sampler failed: {e}")],
            };
            let s2 = s.apply(&h.embed());
            match crate::witness::orbit_witness(&s, &s2) {
                Ok(g) => {
                    let mapped = s.apply(&g.embed());
                    let mut out = Vec::new();
                    if mapped != s2 {
                        out.push(format!("{case} {params} {t} pair {i}: witness misses target"));
                    }
                    if !g.is_valid(&space) {
                        out.push(format!("{case} {params} {t} pair {i}: witness not an isometry"));
                    }
                    out
                }
                Err(e) => vec![format!("{case} {params} {t} pair {i}: witness failed: {e}")],
            }
        }));
    }
    SuiteReport::new("witness-soundness", checked, failures)
}

/// Run every suite at the given scale with the given seeds and budgets, in
/// the fixed reporting order.
pub fn run_all(
    scale: &Scale,
    seed: u64,
    trials: u64,
    witness_pairs: u64,
    parity_samples: u64,
) -> Vec<SuiteReport> {
    vec![
        suite_round_trip(scale),
        suite_h_invariance(scale, seed, trials),
        suite_formula_vs_oracle(scale, 0),
        suite_open_orbits(scale),
        suite_equal_dimension(scale),
        suite_component_counts(scale),
        suite_symplectic_parity(scale, seed, parity_samples),
        suite_witness(scale, seed, witness_pairs),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_round_trip_passes() {
        let scale = Scale { max_ambient: 5, max_symplectic_ambient: 6 };
        let report = suite_round_trip(&scale);
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.checked > 0);
    }

    #[test]
    fn corrupted_formula_is_detected() {
        let scale = Scale { max_ambient: 4, max_symplectic_ambient: 4 };
        let clean = suite_formula_vs_oracle(&scale, 0);
        assert!(clean.passed(), "{:?}", clean.failures);
        let corrupted = suite_formula_vs_oracle(&scale, 1);
        assert!(!corrupted.passed());
    }

    #[test]
    fn f2_span_sizes() {
        assert_eq!(f2_span_size(&[]), 1);
        assert_eq!(f2_span_size(&[vec![true, false]]), 2);
        assert_eq!(f2_span_size(&[vec![true, false], vec![true, false]]), 2);
        assert_eq!(f2_span_size(&[vec![true, false], vec![false, true]]), 4);
        assert_eq!(f2_span_size(&[vec![true, true], vec![false, true]]), 4);
    }

    #[test]
    fn small_component_suite_passes() {
        let scale = Scale { max_ambient: 5, max_symplectic_ambient: 6 };
        let report = suite_component_counts(&scale);
        assert!(report.passed(), "{:?}", report.failures);
    }
}
