//! Minkowski sums with provenance, unique face decomposition, the
//! relative-general-position predicate, and the trivial upper bounds.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::bitset::BitSet;
use crate::error::Error;
use crate::lattice::{cone_interior_point, normal_cone};
use crate::linalg::Vector;
use crate::polytope::{convex_hull, Face, Polytope};
use crate::Result;

/// A Minkowski sum together with its summands and, for every vertex of the
/// sum, the unique tuple of summand vertices it decomposes into.
#[derive(Clone, Debug)]
pub struct SumContext {
    summands: Vec<Polytope>,
    sum: Polytope,
    provenance: Vec<Vec<usize>>,
}

/// The unique decomposition `F = F_1 + ... + F_n` of a face of the sum into
/// faces of the summands. `exact` records whether the dimensions add up.
#[derive(Clone, Debug)]
pub struct FaceDecomposition {
    pub parts: Vec<Face>,
    pub exact: bool,
}

/// Sums the polytopes: hull of all vertex-tuple sums, with the surviving
/// tuples recorded per vertex.
pub fn minkowski_sum(summands: Vec<Polytope>) -> Result<SumContext> {
    let Some(first) = summands.first() else {
        return Err(Error::EmptyInput);
    };
    let dim = first.ambient_dim();
    for p in &summands {
        if p.ambient_dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.ambient_dim(),
            });
        }
    }

    let mut points = Vec::new();
    let mut tuple_of_point: HashMap<Vector, Vec<usize>> = HashMap::new();
    let counts: Vec<usize> = summands.iter().map(|p| p.vertex_count()).collect();
    let mut tuple = vec![0usize; summands.len()];
    'odometer: loop {
        let mut point = Vector::zero(dim);
        for (k, p) in summands.iter().enumerate() {
            point = point.add(&p.vertices()[tuple[k]]);
        }
        // A colliding sum point cannot be a vertex (vertex decompositions
        // are unique), so keeping the first tuple is safe.
        tuple_of_point
            .entry(point.clone())
            .or_insert_with(|| tuple.clone());
        points.push(point);

        let mut k = summands.len();
        loop {
            if k == 0 {
                break 'odometer;
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < counts[k] {
                break;
            }
            tuple[k] = 0;
        }
    }

    let sum = convex_hull(&points, dim)?;
    let provenance = sum
        .vertices()
        .iter()
        .map(|v| tuple_of_point[v].clone())
        .collect();
    Ok(SumContext {
        summands,
        sum,
        provenance,
    })
}

impl SumContext {
    pub fn sum(&self) -> &Polytope {
        &self.sum
    }

    pub fn summands(&self) -> &[Polytope] {
        &self.summands
    }

    /// Summand vertex indices composing the given sum vertex.
    pub fn provenance(&self, vertex: usize) -> &[usize] {
        &self.provenance[vertex]
    }

    /// Vertices of the sum whose provenance lies inside each part.
    pub fn vertices_from_parts(&self, parts: &[Face]) -> BitSet {
        assert_eq!(parts.len(), self.summands.len());
        BitSet::from_indices(
            self.sum.vertex_count(),
            (0..self.sum.vertex_count()).filter(|&v| {
                self.provenance[v]
                    .iter()
                    .zip(parts)
                    .all(|(&pv, part)| part.verts.contains(pv))
            }),
        )
    }

    /// Decomposes a nonempty face of the sum into one face per summand via a
    /// witness direction from the relative interior of its normal cone.
    pub fn decompose_face(&self, face: &Face) -> Result<FaceDecomposition> {
        if face.is_empty() {
            return Err(Error::TrivialFace);
        }
        let direction = if face.dim == self.sum.intrinsic_dim() as i32 {
            Vector::zero(self.sum.ambient_dim())
        } else {
            cone_interior_point(&normal_cone(&self.sum, face)?)?
        };
        let parts: Vec<Face> = self
            .summands
            .iter()
            .map(|p| p.support_set(&direction))
            .collect();
        // The parts must re-sum to exactly this face.
        let resummed = self.vertices_from_parts(&parts);
        assert_eq!(resummed, face.verts, "face decomposition failed to re-sum");
        let part_dim_total: i32 = parts.iter().map(|f| f.dim).sum();
        Ok(FaceDecomposition {
            exact: part_dim_total == face.dim,
            parts,
        })
    }

    /// True iff every facet of the sum decomposes exactly; reports the facet
    /// indices that do not.
    pub fn relatively_in_general_position(&self) -> Result<(bool, Vec<usize>)> {
        let mut violators = Vec::new();
        for f in 0..self.sum.facet_count() {
            let face = self.sum.facet_face(f);
            if !self.decompose_face(&face)?.exact {
                violators.push(f);
            }
        }
        Ok((violators.is_empty(), violators))
    }
}

/// `f_0(P_1 + ... + P_n) <= prod f_0(P_i)`.
pub fn trivial_vertex_bound(f0: &[u64]) -> BigUint {
    f0.iter().map(|&n| BigUint::from(n)).product()
}

/// Trivial bound on the number of k-faces of a sum: the number of ways to
/// pick `s_i >= 1` vertices per summand with `sum s_i = k + n`, i.e.
/// the sum of `prod C(f_0(P_i), s_i)` over all such integral compositions.
pub fn trivial_kface_bound(f0: &[u64], k: usize) -> BigUint {
    let n = f0.len();
    if n == 0 {
        return BigUint::from(0u32);
    }
    let mut total = BigUint::from(0u32);
    let budget = k + n;
    let mut choice = vec![0u64; n];
    compositions(f0, 0, budget, &mut choice, &mut total);
    total
}

fn compositions(f0: &[u64], i: usize, budget: usize, choice: &mut [u64], total: &mut BigUint) {
    let n = f0.len();
    let remaining_summands = n - i - 1;
    if i == n - 1 {
        let s = budget as u64;
        if s >= 1 && s <= f0[i] {
            choice[i] = s;
            let mut product = BigUint::from(1u32);
            for (fi, si) in f0.iter().zip(choice.iter()) {
                product *= binomial(*fi, *si);
            }
            *total += product;
        }
        return;
    }
    let max_here = f0[i].min(budget.saturating_sub(remaining_summands) as u64);
    for s in 1..=max_here {
        choice[i] = s;
        compositions(f0, i + 1, budget - s as usize, choice, total);
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut result = BigUint::from(1u32);
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}
