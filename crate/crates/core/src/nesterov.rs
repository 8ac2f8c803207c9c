//! The perfectly-centered test with witnesses, Nesterov rounding `P + P*`,
//! the predicted pair lattice of the rounding, closed-form rounded f-vectors
//! for simplices and cubes, and repeated rounding in dimension 3.
//!
//! A polytope is perfectly centered when every nonempty face meets its own
//! outer normal cone. The candidate meeting point of a face F is forced: any
//! point of `relint(F) ∩ N(F;P)` is orthogonal to F's direction space, so it
//! must be the foot of the perpendicular from the origin onto `aff(F)`. The
//! checker projects and then tests the two memberships exactly, so it is
//! complete, not heuristic.

use std::collections::{HashMap, HashSet};

use crate::bitset::BitSet;
use crate::error::Error;
use crate::lattice::{dual_face, FaceLattice};
use crate::linalg::{affine_hull, project_onto_affine, Vector};
use crate::minkowski::{binomial, minkowski_sum, SumContext};
use crate::polytope::Polytope;
use crate::rational::Rational;
use crate::Result;

/// Why a face has no witness point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessFailure {
    /// The projection of the origin onto aff(F) is not in relint(F).
    OutsideRelativeInterior,
    /// The projection is in relint(F) but not in the normal cone N(F;P).
    OutsideNormalCone,
    /// For F = P: the origin is not in the interior.
    NotCentered,
}

impl std::fmt::Display for WitnessFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            WitnessFailure::OutsideRelativeInterior => {
                "projection of origin lies outside the relative interior"
            }
            WitnessFailure::OutsideNormalCone => "projection lies outside the normal cone",
            WitnessFailure::NotCentered => "origin is not interior",
        };
        f.write_str(msg)
    }
}

/// Per-face result of the perfectly-centered test.
#[derive(Clone, Debug)]
pub struct WitnessEntry {
    pub face_dim: i32,
    pub face_vertices: Vec<usize>,
    pub witness: Option<Vector>,
    pub failure: Option<WitnessFailure>,
}

/// Report of the perfectly-centered test: one entry per nonempty face,
/// `overall` true iff every face has a witness.
#[derive(Clone, Debug)]
pub struct PerfectCenterReport {
    pub entries: Vec<WitnessEntry>,
    pub overall: bool,
}

impl PerfectCenterReport {
    pub fn first_failure(&self) -> Option<&WitnessEntry> {
        self.entries.iter().find(|e| e.failure.is_some())
    }

    /// The witness of the face with the given vertex index set, if any.
    pub fn witness_for(&self, vertices: &[usize]) -> Option<&Vector> {
        self.entries
            .iter()
            .find(|e| e.face_vertices == vertices)
            .and_then(|e| e.witness.as_ref())
    }
}

/// Tests whether every nonempty face meets its outer normal cone, producing
/// the (unique) witness point per face or the reason there is none.
pub fn perfectly_centered_witnesses(p: &Polytope) -> Result<PerfectCenterReport> {
    let lattice = FaceLattice::build(p);
    perfectly_centered_with_lattice(p, &lattice)
}

/// Same as [`perfectly_centered_witnesses`] with a precomputed lattice.
pub fn perfectly_centered_with_lattice(
    p: &Polytope,
    lattice: &FaceLattice,
) -> Result<PerfectCenterReport> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let origin = Vector::zero(p.ambient_dim());
    let mut entries = Vec::new();

    for &i in &lattice.nontrivial_indices() {
        let face = &lattice.faces()[i];
        let members: Vec<Vector> = face.verts.iter().map(|v| p.vertices()[v].clone()).collect();
        let subspace = affine_hull(&members)?;
        let candidate = project_onto_affine(&origin, &subspace)?;
        let failure = if !p.relint_contains(face, &candidate) {
            Some(WitnessFailure::OutsideRelativeInterior)
        } else if &p.support_set(&candidate) != face {
            Some(WitnessFailure::OutsideNormalCone)
        } else {
            None
        };
        entries.push(WitnessEntry {
            face_dim: face.dim,
            face_vertices: face.vertex_indices(),
            witness: failure.is_none().then_some(candidate),
            failure,
        });
    }

    // F = P itself: N(P;P) = {0}, so the test degenerates to centeredness
    // and the witness is the origin.
    let centered = p.is_centered();
    entries.push(WitnessEntry {
        face_dim: p.intrinsic_dim() as i32,
        face_vertices: (0..p.vertex_count()).collect(),
        witness: centered.then(|| origin.clone()),
        failure: (!centered).then_some(WitnessFailure::NotCentered),
    });

    let overall = entries.iter().all(|e| e.failure.is_none());
    Ok(PerfectCenterReport { entries, overall })
}

/// The Nesterov rounding `P + P*` (scaling factor fixed at 1; the face
/// lattice of `P + αP*` does not depend on α > 0).
pub fn nesterov_round(p: &Polytope) -> Result<SumContext> {
    let dual = p.polar_dual()?;
    minkowski_sum(vec![p.clone(), dual])
}

/// One element of the predicted face lattice of a rounding: an ordered pair
/// of nontrivial faces `G ⊆ F` of P, standing for the face `G + F^D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PredictedPair {
    /// Lattice index of G in the face lattice of P.
    pub lower: usize,
    /// Lattice index of F.
    pub upper: usize,
    /// dim G + (d - 1 - dim F).
    pub dim: i32,
}

/// The face lattice that the rounding of a perfectly centered polytope must
/// have: all ordered pairs of nontrivial faces `G ⊆ F`, ordered by
/// `(G₁,F₁) ≤ (G₂,F₂) ⟺ G₁ ⊆ G₂ and F₁ ⊇ F₂`.
#[derive(Clone, Debug)]
pub struct PredictedLattice {
    pub ambient_dim: usize,
    pub pairs: Vec<PredictedPair>,
}

/// Builds the predicted lattice from the face lattice of P.
pub fn predicted_rounding_lattice(lattice: &FaceLattice, ambient_dim: usize) -> PredictedLattice {
    let nontrivial = lattice.nontrivial_indices();
    let mut pairs = Vec::new();
    for &g in &nontrivial {
        for &f in &nontrivial {
            let face_g = &lattice.faces()[g];
            let face_f = &lattice.faces()[f];
            if face_g.verts.is_subset(&face_f.verts) {
                pairs.push(PredictedPair {
                    lower: g,
                    upper: f,
                    dim: face_g.dim + (ambient_dim as i32 - 1 - face_f.dim),
                });
            }
        }
    }
    PredictedLattice { ambient_dim, pairs }
}

impl PredictedLattice {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Predicted f-vector: pair counts per dimension 0 .. d-1.
    pub fn counts_by_dim(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.ambient_dim];
        for pair in &self.pairs {
            counts[pair.dim as usize] += 1;
        }
        counts
    }

    /// The predicted order relation between two pairs.
    pub fn leq(&self, lattice: &FaceLattice, a: &PredictedPair, b: &PredictedPair) -> bool {
        let faces = lattice.faces();
        faces[a.lower].verts.is_subset(&faces[b.lower].verts)
            && faces[b.upper].verts.is_subset(&faces[a.upper].verts)
    }
}

/// Outcome of mechanically checking the rounding of a perfectly centered
/// polytope against its predicted lattice.
#[derive(Clone, Debug)]
pub struct RoundingVerification {
    pub sum_f_vector: Vec<u64>,
    pub predicted_counts: Vec<u64>,
    /// Every nontrivial face of P + P* decomposes as G + F^D with G ⊆ F
    /// nontrivial, each pair hit exactly once.
    pub bijection: bool,
    /// dim(G + F^D) = dim G + (d - 1 - dim F) for every face.
    pub dims_preserved: bool,
    /// Inclusion of faces matches the predicted pair order, both directions.
    pub order_preserved: bool,
    pub f_vectors_match: bool,
}

impl RoundingVerification {
    pub fn ok(&self) -> bool {
        self.bijection && self.dims_preserved && self.order_preserved && self.f_vectors_match
    }
}

/// Verifies that the face lattice of `P + P*` is exactly the predicted pair
/// lattice. Refuses polytopes that are not perfectly centered: the
/// characterization has that hypothesis.
pub fn verify_rounding(p: &Polytope) -> Result<RoundingVerification> {
    let p_lattice = FaceLattice::build(p);
    let pc = perfectly_centered_with_lattice(p, &p_lattice)?;
    if !pc.overall {
        let entry = pc.first_failure().expect("failed report has a failure");
        return Err(Error::NotPerfectlyCentered(format!(
            "face {:?} (dim {}): {}",
            entry.face_vertices,
            entry.face_dim,
            entry.failure.expect("failure present")
        )));
    }

    let d = p.ambient_dim();
    let ctx = nesterov_round(p)?;
    let sum_lattice = FaceLattice::build(ctx.sum());
    let dual = &ctx.summands()[1];

    // Vertex set of F^D (in the dual) -> lattice index of F (in P).
    let mut dual_index: HashMap<BitSet, usize> = HashMap::new();
    for &i in &p_lattice.nontrivial_indices() {
        let df = dual_face(p, dual, &p_lattice.faces()[i])?;
        dual_index.insert(df.verts, i);
    }

    let predicted = predicted_rounding_lattice(&p_lattice, d);
    let nontrivial_sum = sum_lattice.nontrivial_indices();

    let mut bijection = true;
    let mut dims_preserved = true;
    let mut assigned: HashMap<usize, PredictedPair> = HashMap::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for &h in &nontrivial_sum {
        let face = &sum_lattice.faces()[h];
        let dec = ctx.decompose_face(face)?;
        let g_part = &dec.parts[0];
        let f_dual_part = &dec.parts[1];
        let Some(g_idx) = p_lattice.face_index(&g_part.verts) else {
            bijection = false;
            continue;
        };
        let Some(&f_idx) = dual_index.get(&f_dual_part.verts) else {
            bijection = false;
            continue;
        };
        // The pair must be ordered: G ⊆ F.
        if !p_lattice.faces()[g_idx]
            .verts
            .is_subset(&p_lattice.faces()[f_idx].verts)
        {
            bijection = false;
            continue;
        }
        if !seen.insert((g_idx, f_idx)) {
            bijection = false;
        }
        let pair = PredictedPair {
            lower: g_idx,
            upper: f_idx,
            dim: p_lattice.faces()[g_idx].dim + (d as i32 - 1 - p_lattice.faces()[f_idx].dim),
        };
        if pair.dim != face.dim {
            dims_preserved = false;
        }
        assigned.insert(h, pair);
    }
    // Onto: every predicted pair is realized.
    if seen.len() != predicted.len() || assigned.len() != nontrivial_sum.len() {
        bijection = false;
    }

    // Order preservation in both directions (this subsumes Hasse covers).
    let mut order_preserved = bijection;
    if bijection {
        'outer: for &h1 in &nontrivial_sum {
            for &h2 in &nontrivial_sum {
                let included = sum_lattice.faces()[h1]
                    .verts
                    .is_subset(&sum_lattice.faces()[h2].verts);
                let predicted_leq = predicted.leq(&p_lattice, &assigned[&h1], &assigned[&h2]);
                if included != predicted_leq {
                    order_preserved = false;
                    break 'outer;
                }
            }
        }
    }

    let sum_f_vector = sum_lattice.f_vector();
    let predicted_counts = predicted.counts_by_dim();
    let f_vectors_match = sum_f_vector == predicted_counts;

    Ok(RoundingVerification {
        sum_f_vector,
        predicted_counts,
        bijection,
        dims_preserved,
        order_preserved,
        f_vectors_match,
    })
}

/// Which closed-form rounding f-vector to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoundingKind {
    Simplex,
    Cube,
}

/// Closed-form f-vector of the Nesterov rounding of a perfectly centered
/// d-simplex or d-cube:
/// simplex `f_k = C(d+1, k+2)·(2^(k+2) - 2)`,
/// cube    `f_k = C(d, k+1)·2^(d-k-1)·(3^(k+1) - 1)`.
pub fn closed_form_fvector(kind: RoundingKind, dim: usize) -> Vec<u64> {
    assert!(dim >= 1, "dimension must be at least 1");
    (0..dim)
        .map(|k| {
            let value = match kind {
                RoundingKind::Simplex => {
                    binomial((dim + 1) as u64, (k + 2) as u64) * ((1u64 << (k + 2)) - 2)
                }
                RoundingKind::Cube => {
                    binomial(dim as u64, (k + 1) as u64)
                        * (1u64 << (dim - k - 1))
                        * (3u64.pow((k + 1) as u32) - 1)
                }
            };
            u64::try_from(&value).expect("f-vector entry fits in u64 at desk scale")
        })
        .collect()
}

/// f-vectors of repeated 3-dimensional roundings predicted by the
/// recurrences `f0_(n) = 4^(n-1)·f0_(1)`, `f1_(n) = 2·f0_(n)`,
/// `f2_(n) = f2_(1) + (4^(n-1) - 1)·f0_(1)`, given the first rounding's
/// f-vector.
pub fn repeated_fvector_recurrence(first: &[u64; 3], rounds: usize) -> Vec<[u64; 3]> {
    (1..=rounds)
        .map(|n| {
            let factor = 4u64.pow((n - 1) as u32);
            [
                factor * first[0],
                2 * factor * first[0],
                first[2] + (factor - 1) * first[0],
            ]
        })
        .collect()
}

/// One computed rounding step.
#[derive(Clone, Debug)]
pub struct RoundStep {
    pub f_vector: Vec<u64>,
    pub euler_residual: i64,
    pub perfectly_centered: bool,
}

/// Result of iterating the rounding on a perfectly centered 3-polytope.
#[derive(Clone, Debug)]
pub struct RepeatedRoundReport {
    /// Step i holds the polytope after i+1 roundings.
    pub steps: Vec<RoundStep>,
    /// f-vectors the recurrences predict from the first step.
    pub recurrence: Vec<[u64; 3]>,
    pub recurrences_match: bool,
}

impl RepeatedRoundReport {
    /// Facet-to-vertex ratios f2/f0 per computed step.
    pub fn ratios(&self) -> Vec<Rational> {
        self.steps
            .iter()
            .map(|s| crate::rational::rat(s.f_vector[2] as i64, s.f_vector[0] as i64))
            .collect()
    }
}

/// Iterates the Nesterov rounding `rounds` times on a perfectly centered
/// 3-polytope, checking perfect centering and the f-vector recurrences after
/// every step. Loss of perfect centering is a hard failure.
pub fn repeated_round_check(p: &Polytope, rounds: usize) -> Result<RepeatedRoundReport> {
    if p.ambient_dim() != 3 || !p.is_full_dimensional() {
        return Err(Error::Domain(
            "repeated rounding check requires a 3-dimensional polytope".into(),
        ));
    }
    let initial = perfectly_centered_witnesses(p)?;
    if !initial.overall {
        return Err(Error::NotPerfectlyCentered(
            "repeated rounding requires a perfectly centered start".into(),
        ));
    }

    let mut current = p.clone();
    let mut steps = Vec::with_capacity(rounds);
    for round in 1..=rounds {
        let ctx = nesterov_round(&current)?;
        current = ctx.sum().clone();
        let lattice = FaceLattice::build(&current);
        let pc = perfectly_centered_with_lattice(&current, &lattice)?;
        if !pc.overall {
            return Err(Error::PerfectCenteringLost { round });
        }
        steps.push(RoundStep {
            f_vector: lattice.f_vector(),
            euler_residual: lattice.euler_residual(),
            perfectly_centered: pc.overall,
        });
    }

    let recurrence = if let Some(first) = steps.first() {
        repeated_fvector_recurrence(
            &[first.f_vector[0], first.f_vector[1], first.f_vector[2]],
            rounds,
        )
    } else {
        Vec::new()
    };
    let recurrences_match = steps
        .iter()
        .zip(&recurrence)
        .all(|(s, r)| s.f_vector == r.to_vec());

    Ok(RepeatedRoundReport {
        steps,
        recurrence,
        recurrences_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::rational::{int, rat};

    #[test]
    fn cubes_are_perfectly_centered() {
        for d in 1..=4 {
            let p = construct::cube(d).unwrap();
            let report = perfectly_centered_witnesses(&p).unwrap();
            assert!(report.overall, "cube({d}) must be perfectly centered");
        }
    }

    #[test]
    fn cube_witnesses_are_the_expected_points() {
        let p = construct::cube(3).unwrap();
        let report = perfectly_centered_witnesses(&p).unwrap();
        // Facet x1 <= 1 has witness e1.
        let facet = p.support_set(&Vector::from_ints(&[1, 0, 0]));
        assert_eq!(
            report.witness_for(&facet.vertex_indices()),
            Some(&Vector::from_ints(&[1, 0, 0]))
        );
        // A vertex is its own witness.
        let corner = p.support_set(&Vector::from_ints(&[1, 1, 1]));
        assert_eq!(
            report.witness_for(&corner.vertex_indices()),
            Some(&Vector::from_ints(&[1, 1, 1]))
        );
    }

    #[test]
    fn skewed_quadrilateral_is_not_perfectly_centered() {
        // A centered but not perfectly centered quadrilateral.
        let p = crate::polytope::convex_hull(
            &[
                Vector::new(vec![int(-2), int(-1)]),
                Vector::new(vec![rat(1, 2), int(-1)]),
                Vector::new(vec![rat(7, 2), int(2)]),
                Vector::new(vec![int(1), int(2)]),
            ],
            2,
        )
        .unwrap();
        assert!(p.is_centered());
        let report = perfectly_centered_witnesses(&p).unwrap();
        assert!(!report.overall);
        assert!(report.first_failure().is_some());
    }

    #[test]
    fn perfectly_centered_rectangles_with_non_pc_sum() {
        // Two perfectly centered rectangles whose Minkowski sum is not
        // perfectly centered.
        let r1 = crate::polytope::convex_hull(
            &[
                Vector::new(vec![int(-2), rat(-1, 5)]),
                Vector::new(vec![int(2), rat(-1, 5)]),
                Vector::new(vec![int(2), rat(1, 5)]),
                Vector::new(vec![int(-2), rat(1, 5)]),
            ],
            2,
        )
        .unwrap();
        let r2 = crate::polytope::convex_hull(
            &[
                Vector::new(vec![rat(19, 25), rat(5, 2)]),
                Vector::new(vec![rat(-19, 25), rat(-5, 2)]),
                Vector::new(vec![rat(31, 25), rat(23, 10)]),
                Vector::new(vec![rat(-31, 25), rat(-23, 10)]),
            ],
            2,
        )
        .unwrap();
        assert!(perfectly_centered_witnesses(&r1).unwrap().overall);
        assert!(perfectly_centered_witnesses(&r2).unwrap().overall);
        let ctx = minkowski_sum(vec![r1, r2]).unwrap();
        let report = perfectly_centered_witnesses(ctx.sum()).unwrap();
        assert!(!report.overall, "sum of pc polytopes need not be pc");
    }

    #[test]
    fn pc_checker_rejects_flat_input() {
        let seg =
            construct::segment(&Vector::from_ints(&[-1, 0]), &Vector::from_ints(&[1, 0])).unwrap();
        assert!(matches!(
            perfectly_centered_witnesses(&seg),
            Err(Error::NotFullDimensional)
        ));
    }

    #[test]
    fn rounding_of_cube3_has_expected_f_vector() {
        let ctx = nesterov_round(&construct::cube(3).unwrap()).unwrap();
        let l = FaceLattice::build(ctx.sum());
        assert_eq!(l.f_vector(), closed_form_fvector(RoundingKind::Cube, 3));
        assert_eq!(l.f_vector(), vec![24, 48, 26]);
    }

    #[test]
    fn rounding_of_tetrahedron_has_expected_f_vector() {
        let ctx = nesterov_round(&construct::tetrahedron_pc()).unwrap();
        let l = FaceLattice::build(ctx.sum());
        assert_eq!(l.f_vector(), closed_form_fvector(RoundingKind::Simplex, 3));
        assert_eq!(l.f_vector(), vec![12, 24, 14]);
        assert_eq!(l.euler_residual(), 0);
    }

    #[test]
    fn rounding_only_needs_centeredness() {
        // Centered but not perfectly centered: rounding still a polytope.
        let p = crate::polytope::convex_hull(
            &[
                Vector::new(vec![int(-2), int(-1)]),
                Vector::new(vec![rat(1, 2), int(-1)]),
                Vector::new(vec![rat(7, 2), int(2)]),
                Vector::new(vec![int(1), int(2)]),
            ],
            2,
        )
        .unwrap();
        let ctx = nesterov_round(&p).unwrap();
        let l = FaceLattice::build(ctx.sum());
        assert_eq!(l.euler_residual(), 0);
    }

    #[test]
    fn predicted_lattice_counts_for_tetrahedron() {
        let p = construct::tetrahedron_pc();
        let l = FaceLattice::build(&p);
        let predicted = predicted_rounding_lattice(&l, 3);
        assert_eq!(predicted.len(), 50);
        assert_eq!(predicted.counts_by_dim(), vec![12, 24, 14]);
    }

    #[test]
    fn predicted_lattice_counts_for_cube3() {
        let p = construct::cube(3).unwrap();
        let l = FaceLattice::build(&p);
        let predicted = predicted_rounding_lattice(&l, 3);
        assert_eq!(predicted.len(), 98);
        assert_eq!(predicted.counts_by_dim(), vec![24, 48, 26]);
    }

    #[test]
    fn predicted_lattice_of_a_segment() {
        // d = 1: the only ordered pairs are (vertex, same vertex).
        let seg = construct::cube(1).unwrap();
        let l = FaceLattice::build(&seg);
        let predicted = predicted_rounding_lattice(&l, 1);
        assert_eq!(predicted.len(), 2);
        assert_eq!(predicted.counts_by_dim(), vec![2]);
        let ctx = nesterov_round(&seg).unwrap();
        assert_eq!(ctx.sum().vertex_count(), 2);
    }

    #[test]
    fn verify_rounding_tetrahedron() {
        let report = verify_rounding(&construct::tetrahedron_pc()).unwrap();
        assert!(report.ok(), "{report:?}");
        assert_eq!(report.sum_f_vector, vec![12, 24, 14]);
    }

    #[test]
    fn verify_rounding_cube3() {
        let report = verify_rounding(&construct::cube(3).unwrap()).unwrap();
        assert!(report.ok(), "{report:?}");
        assert_eq!(report.sum_f_vector, vec![24, 48, 26]);
    }

    #[test]
    fn verify_rounding_cube4() {
        let report = verify_rounding(&construct::cube(4).unwrap()).unwrap();
        assert!(report.ok(), "{report:?}");
        assert_eq!(
            report.sum_f_vector,
            closed_form_fvector(RoundingKind::Cube, 4)
        );
    }

    #[test]
    fn verify_rounding_refuses_non_pc_input() {
        let p = crate::polytope::convex_hull(
            &[
                Vector::new(vec![int(-2), int(-1)]),
                Vector::new(vec![rat(1, 2), int(-1)]),
                Vector::new(vec![rat(7, 2), int(2)]),
                Vector::new(vec![int(1), int(2)]),
            ],
            2,
        )
        .unwrap();
        assert!(matches!(
            verify_rounding(&p),
            Err(Error::NotPerfectlyCentered(_))
        ));
    }

    #[test]
    fn closed_forms_satisfy_euler() {
        for d in 1..=8 {
            for kind in [RoundingKind::Simplex, RoundingKind::Cube] {
                let f = closed_form_fvector(kind, d);
                let alternating: i64 = f
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
                    .sum();
                let expected = 1 - if d % 2 == 0 { 1 } else { -1 };
                assert_eq!(alternating, expected, "kind {kind:?} d {d}");
            }
        }
    }

    #[test]
    fn closed_form_small_dimensions() {
        // d = 2: triangle + dual is a hexagon, square + dual an octagon.
        assert_eq!(closed_form_fvector(RoundingKind::Simplex, 2), vec![6, 6]);
        assert_eq!(closed_form_fvector(RoundingKind::Cube, 2), vec![8, 8]);
    }

    #[test]
    fn recurrence_values_from_tetrahedron() {
        let fs = repeated_fvector_recurrence(&[12, 24, 14], 3);
        assert_eq!(fs, vec![[12, 24, 14], [48, 96, 50], [192, 384, 194]]);
    }

    #[test]
    fn repeated_rounding_two_steps_geometrically() {
        let report = repeated_round_check(&construct::tetrahedron_pc(), 2).unwrap();
        assert!(report.recurrences_match);
        assert_eq!(report.steps[0].f_vector, vec![12, 24, 14]);
        assert_eq!(report.steps[1].f_vector, vec![48, 96, 50]);
        assert!(report.steps.iter().all(|s| s.perfectly_centered));
        assert!(report.steps.iter().all(|s| s.euler_residual == 0));
        let ratios = report.ratios();
        assert_eq!(ratios[0], rat(7, 6));
        assert_eq!(ratios[1], rat(25, 24));
    }

    #[test]
    fn repeated_rounding_three_steps_geometrically() {
        let report = repeated_round_check(&construct::tetrahedron_pc(), 3).unwrap();
        assert!(report.recurrences_match);
        assert_eq!(report.steps[2].f_vector, vec![192, 384, 194]);
        assert_eq!(report.ratios()[2], rat(97, 96));
    }

    #[test]
    fn repeated_rounding_rejects_bad_inputs() {
        assert!(repeated_round_check(&construct::cube(2).unwrap(), 1).is_err());
        let skew = crate::polytope::convex_hull(
            &[
                Vector::from_ints(&[-2, -1, -1]),
                Vector::from_ints(&[3, -1, -1]),
                Vector::from_ints(&[1, 2, -1]),
                Vector::from_ints(&[0, 0, 2]),
            ],
            3,
        )
        .unwrap();
        if !perfectly_centered_witnesses(&skew).unwrap().overall {
            assert!(matches!(
                repeated_round_check(&skew, 1),
                Err(Error::NotPerfectlyCentered(_))
            ));
        }
    }
}
