//! Face-lattice enumeration, normal cones, and dual faces.
//!
//! The lattice is built by closing the family of facet vertex-sets under
//! intersection: every nonempty proper face of a polytope is the intersection
//! of the facets containing it. The ranked result carries Hasse covers, an
//! f-vector and the Euler residual.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::Error;
use crate::linalg::Vector;
use crate::polytope::{Face, Polytope};
use crate::Result;

/// All faces of a polytope, ranked by dimension, with Hasse covers.
///
/// Faces are sorted by (dimension, vertex set); index 0 is the empty face and
/// the last index is the polytope itself.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Face>,
    index: HashMap<BitSet, usize>,
    covers: Vec<(usize, usize)>,
    intrinsic_dim: usize,
}

/// A polyhedral cone with apex at the origin, given by generator rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub generators: Vec<Vector>,
}

impl FaceLattice {
    /// Enumerates every face of the polytope exactly once.
    pub fn build(p: &Polytope) -> FaceLattice {
        let nv = p.vertex_count();
        let mut known: HashSet<BitSet> = HashSet::new();
        let mut queue: Vec<BitSet> = Vec::new();

        let whole = BitSet::full(nv);
        known.insert(whole.clone());
        for f in 0..p.facet_count() {
            let set = p.facet_vertex_set(f).clone();
            if known.insert(set.clone()) {
                queue.push(set);
            }
        }
        while let Some(set) = queue.pop() {
            for f in 0..p.facet_count() {
                let meet = set.intersection(p.facet_vertex_set(f));
                if !meet.is_empty() && known.insert(meet.clone()) {
                    queue.push(meet);
                }
            }
        }

        let mut faces: Vec<Face> = known
            .into_iter()
            .map(|verts| p.face_from_vertex_set(verts))
            .collect();
        faces.push(p.empty_face());
        faces.sort_by(|a, b| (a.dim, &a.verts).cmp(&(b.dim, &b.verts)));

        let index: HashMap<BitSet, usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.verts.clone(), i))
            .collect();

        // Covers: faces one dimension apart with nested vertex sets.
        let dim = p.intrinsic_dim();
        let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); dim + 2];
        for (i, f) in faces.iter().enumerate() {
            by_dim[(f.dim + 1) as usize].push(i);
        }
        let mut covers = Vec::new();
        for level in 0..=dim {
            for &lo in &by_dim[level] {
                for &hi in &by_dim[level + 1] {
                    if faces[lo].verts.is_subset(&faces[hi].verts) {
                        covers.push((lo, hi));
                    }
                }
            }
        }

        FaceLattice {
            faces,
            index,
            covers,
            intrinsic_dim: dim,
        }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn intrinsic_dim(&self) -> usize {
        self.intrinsic_dim
    }

    pub fn face_index(&self, verts: &BitSet) -> Option<usize> {
        self.index.get(verts).copied()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Indices of the nontrivial faces (everything except ∅ and P).
    pub fn nontrivial_indices(&self) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| {
                let f = &self.faces[i];
                !f.is_empty() && f.dim < self.intrinsic_dim as i32
            })
            .collect()
    }

    /// Counts of k-faces for k = 0 .. dim-1 (∅ and P excluded by convention).
    pub fn f_vector(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.intrinsic_dim];
        for f in &self.faces {
            if f.dim >= 0 && (f.dim as usize) < self.intrinsic_dim {
                counts[f.dim as usize] += 1;
            }
        }
        counts
    }

    /// `Σ (-1)^k f_k - (1 - (-1)^dim)`; zero for every polytope.
    pub fn euler_residual(&self) -> i64 {
        let alternating: i64 = self
            .f_vector()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        let expected = 1 - if self.intrinsic_dim.is_multiple_of(2) {
            1
        } else {
            -1
        };
        alternating - expected
    }

    /// Every interval of height two contains exactly two intermediate faces.
    pub fn diamond_property_holds(&self) -> bool {
        let mut uppers: Vec<Vec<usize>> = vec![Vec::new(); self.faces.len()];
        for &(lo, hi) in &self.covers {
            uppers[lo].push(hi);
        }
        for (g, face_g) in self.faces.iter().enumerate() {
            for face_f in &self.faces {
                if face_f.dim != face_g.dim + 2 {
                    continue;
                }
                let nested = if face_g.is_empty() {
                    true
                } else {
                    face_g.verts.is_subset(&face_f.verts)
                };
                if !nested {
                    continue;
                }
                let between = uppers[g]
                    .iter()
                    .filter(|&&h| self.faces[h].verts.is_subset(&face_f.verts))
                    .count();
                if between != 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Hasse diagram in DOT format.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph face_lattice {\n  rankdir=BT;\n");
        for (i, f) in self.faces.iter().enumerate() {
            let label = if f.is_empty() {
                "empty".to_string()
            } else if f.dim == self.intrinsic_dim as i32 {
                "P".to_string()
            } else {
                format!(
                    "d{}: {}",
                    f.dim,
                    f.vertex_indices()
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                )
            };
            let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
        }
        for &(lo, hi) in &self.covers {
            let _ = writeln!(out, "  n{lo} -> n{hi};");
        }
        out.push_str("}\n");
        out
    }

    /// One face per line as `(dim) [vertex indices]`, for diffing in tests.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.faces {
            let _ = writeln!(
                out,
                "({}) [{}]",
                f.dim,
                f.vertex_indices()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
        out
    }
}

/// The outer normal cone `N(F; P)` of a nontrivial face, generated by the
/// outer normals of the facets containing the face.
pub fn normal_cone(p: &Polytope, face: &Face) -> Result<Cone> {
    if face.is_empty() || face.dim == p.intrinsic_dim() as i32 {
        return Err(Error::TrivialFace);
    }
    let generators: Vec<Vector> = face
        .facets
        .iter()
        .map(|f| p.facets()[f].normal.clone())
        .collect();
    debug_assert!(!generators.is_empty());
    Ok(Cone { generators })
}

/// A point in the relative interior of a pointed cone: the sum of one
/// representative per generator ray.
pub fn cone_interior_point(cone: &Cone) -> Result<Vector> {
    let Some(first) = cone.generators.first() else {
        return Err(Error::ZeroCone);
    };
    let mut sum = Vector::zero(first.dim());
    for g in &cone.generators {
        sum = sum.add(g);
    }
    if sum.is_zero() {
        return Err(Error::ZeroCone);
    }
    Ok(sum)
}

/// Membership in the *closed* normal cone: `x ∈ cl N(F; P)` iff the
/// maximizer set of `x` contains `F`. Exact, no feasibility solve needed.
pub fn closed_normal_cone_contains(p: &Polytope, face: &Face, x: &Vector) -> bool {
    if face.is_empty() {
        return true;
    }
    face.verts.is_subset(&p.support_set(x).verts)
}

/// The dual face `F^D = {x ∈ P* : ⟨x, f⟩ = 1 for all f ∈ F}` of a nontrivial
/// face, as a face of the supplied polar dual.
pub fn dual_face(p: &Polytope, p_dual: &Polytope, face: &Face) -> Result<Face> {
    if face.is_empty() || face.dim == p.intrinsic_dim() as i32 {
        return Err(Error::TrivialFace);
    }
    let one = crate::rational::int(1);
    let members = (0..p_dual.vertex_count()).filter(|&w| {
        face.verts
            .iter()
            .all(|v| p_dual.vertices()[w].dot(&p.vertices()[v]) == one)
    });
    let verts = BitSet::from_indices(p_dual.vertex_count(), members);
    Ok(p_dual.face_from_vertex_set(verts))
}
