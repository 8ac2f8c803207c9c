//! Polytope representations: linked V-representation, H-representation and
//! exact vertex–facet incidence.
//!
//! Lower-dimensional polytopes are first-class: facets are taken relative to
//! the affine hull, with normals lying in its direction space. Vertices are
//! kept in lexicographic order and facet normals are primitive integer
//! vectors, so equal polytopes have identical representations.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bitset::BitSet;
use crate::error::Error;
use crate::hull::extreme_rays;
use crate::linalg::{
    affine_hull, int_dot, integer_rank, primitive_integer_row, solve, AffineSubspace, Vector,
};
use crate::rational::Rational;
use crate::Result;

/// A closed halfspace `⟨normal, x⟩ ≤ offset` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vector,
    pub offset: Rational,
}

/// A face of a specific polytope, identified by the set of vertices it
/// contains. `dim = -1` encodes the empty face.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub verts: BitSet,
    pub facets: BitSet,
    pub dim: i32,
}

impl Face {
    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }

    pub fn vertex_indices(&self) -> Vec<usize> {
        self.verts.indices()
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }
}

/// A convex polytope with exact rational coordinates.
#[derive(Clone, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    intrinsic_dim: usize,
    vertices: Vec<Vector>,
    facets: Vec<Halfspace>,
    /// Per facet: the vertices lying on it.
    facet_vertices: Vec<BitSet>,
    /// Per vertex: the facets it lies on.
    vertex_facets: Vec<BitSet>,
    affine: AffineSubspace,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl Polytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn intrinsic_dim(&self) -> usize {
        self.intrinsic_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.intrinsic_dim == self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn affine_subspace(&self) -> &AffineSubspace {
        &self.affine
    }

    pub fn facet_vertex_set(&self, f: usize) -> &BitSet {
        &self.facet_vertices[f]
    }

    pub fn vertex_facet_set(&self, v: usize) -> &BitSet {
        &self.vertex_facets[v]
    }

    /// Index of a vertex with exactly these coordinates, if present.
    pub fn vertex_index(&self, p: &Vector) -> Option<usize> {
        self.vertices.binary_search(p).ok()
    }

    /// Exact membership test for the polytope as a point set.
    pub fn contains(&self, p: &Vector) -> bool {
        if p.dim() != self.ambient_dim {
            return false;
        }
        if self.intrinsic_dim < self.ambient_dim && !self.affine.contains(p) {
            return false;
        }
        self.facets.iter().all(|h| h.normal.dot(p) <= h.offset)
    }

    /// The face consisting of all vertices, i.e. the polytope itself.
    pub fn whole_face(&self) -> Face {
        self.face_from_vertex_set(BitSet::full(self.vertex_count()))
    }

    /// The empty face (dimension -1).
    pub fn empty_face(&self) -> Face {
        Face {
            verts: BitSet::new(self.vertex_count()),
            facets: BitSet::full(self.facet_count()),
            dim: -1,
        }
    }

    /// Builds the face determined by a nonempty set of vertex indices.
    ///
    /// The set must already be a face (closed under incidence): this computes
    /// the facets containing all listed vertices and the exact dimension.
    pub fn face_from_vertex_set(&self, verts: BitSet) -> Face {
        assert!(!verts.is_empty(), "use empty_face() for the empty face");
        let mut facets = BitSet::full(self.facet_count());
        for v in verts.iter() {
            facets = facets.intersection(&self.vertex_facets[v]);
        }
        let members: Vec<Vector> = verts.iter().map(|v| self.vertices[v].clone()).collect();
        let dim = affine_hull(&members).expect("nonempty vertex set").dim() as i32;
        let face = Face { verts, facets, dim };
        debug_assert_eq!(
            face.verts,
            self.vertices_on_facets(&face.facets),
            "vertex set is not incidence-closed"
        );
        face
    }

    /// All vertices incident to every facet in the given set.
    pub fn vertices_on_facets(&self, facets: &BitSet) -> BitSet {
        let mut verts = BitSet::full(self.vertex_count());
        for f in facets.iter() {
            verts = verts.intersection(&self.facet_vertices[f]);
        }
        verts
    }

    /// The face of the facet with index `f`.
    pub fn facet_face(&self, f: usize) -> Face {
        let face = self.face_from_vertex_set(self.facet_vertices[f].clone());
        debug_assert_eq!(face.dim, self.intrinsic_dim as i32 - 1);
        face
    }

    /// The set of maximizers of `⟨·, c⟩` over the polytope, as a face.
    /// The zero direction yields the whole polytope.
    pub fn support_set(&self, c: &Vector) -> Face {
        assert_eq!(c.dim(), self.ambient_dim, "direction dimension mismatch");
        let values: Vec<Rational> = self.vertices.iter().map(|v| v.dot(c)).collect();
        let max = values.iter().max().expect("polytope has vertices").clone();
        let verts = BitSet::from_indices(
            self.vertex_count(),
            (0..self.vertex_count()).filter(|&i| values[i] == max),
        );
        self.face_from_vertex_set(verts)
    }

    /// True iff `p` lies in the relative interior of the face: on every facet
    /// of the face, strictly inside every other facet, and in the affine hull
    /// of the polytope.
    pub fn relint_contains(&self, face: &Face, p: &Vector) -> bool {
        if face.is_empty() || p.dim() != self.ambient_dim {
            return false;
        }
        if self.intrinsic_dim < self.ambient_dim && !self.affine.contains(p) {
            return false;
        }
        for (f, h) in self.facets.iter().enumerate() {
            let value = h.normal.dot(p);
            if face.facets.contains(f) {
                if value != h.offset {
                    return false;
                }
            } else if value >= h.offset {
                return false;
            }
        }
        true
    }

    /// True iff the origin lies in the relative interior of the polytope.
    pub fn is_centered(&self) -> bool {
        self.relint_contains(&self.whole_face(), &Vector::zero(self.ambient_dim))
    }

    /// The polar dual `P* = {x : ⟨x, y⟩ ≤ 1 for all y ∈ P}`, computed by
    /// exact vertex enumeration. Requires a full-dimensional centered
    /// polytope (otherwise the dual is unbounded).
    pub fn polar_dual(&self) -> Result<Polytope> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        if !self.is_centered() {
            return Err(Error::NotCentered);
        }
        let d = self.ambient_dim;
        // Homogenize: {(t, x) : ⟨v, x⟩ ≤ t for all vertices v, t ≥ 0}.
        let mut rows: Vec<Vec<BigInt>> = self
            .vertices
            .iter()
            .map(|v| {
                let mut h = vec![-Rational::one()];
                h.extend_from_slice(v.coords());
                primitive_integer_row(&h)
            })
            .collect();
        let mut t_row = vec![BigInt::zero(); d + 1];
        t_row[0] = BigInt::from(-1);
        rows.push(t_row);
        let rays = extreme_rays(&rows)?;
        let dual_vertices: Vec<Vector> = rays
            .iter()
            .map(|r| {
                let t = r[0].clone();
                assert!(t.is_positive(), "dual of a centered polytope is bounded");
                Vector::new(
                    r[1..]
                        .iter()
                        .map(|x| Rational::new(x.clone(), t.clone()))
                        .collect(),
                )
            })
            .collect();
        convex_hull(&dual_vertices, d)
    }

    /// Scales the polytope by a positive rational factor.
    pub fn scale(&self, s: &Rational) -> Result<Polytope> {
        if !s.is_positive() {
            return Err(Error::Domain(format!(
                "scale factor must be positive, got {s}"
            )));
        }
        let scaled: Vec<Vector> = self.vertices.iter().map(|v| v.scale(s)).collect();
        convex_hull(&scaled, self.ambient_dim)
    }

    /// Translates the polytope by a vector.
    pub fn translate(&self, t: &Vector) -> Result<Polytope> {
        let moved: Vec<Vector> = self.vertices.iter().map(|v| v.add(t)).collect();
        convex_hull(&moved, self.ambient_dim)
    }

    /// Applies a linear map given by matrix rows (exact).
    pub fn transform(&self, rows: &[Vector]) -> Result<Polytope> {
        let mapped: Vec<Vector> = self
            .vertices
            .iter()
            .map(|v| Vector::new(rows.iter().map(|r| r.dot(v)).collect()))
            .collect();
        convex_hull(&mapped, rows.len())
    }
}

/// Exact convex hull: extreme points, irredundant facets relative to the
/// affine hull, and exact incidence.
///
/// A single point yields a 0-dimensional polytope with no facets.
pub fn convex_hull(points: &[Vector], ambient_dim: usize) -> Result<Polytope> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    for p in points {
        if p.dim() != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: p.dim(),
            });
        }
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();

    let affine = affine_hull(&pts)?;
    let m = affine.dim();
    if m == 0 {
        let vertex = pts[0].clone();
        return Ok(Polytope {
            ambient_dim,
            intrinsic_dim: 0,
            vertices: vec![vertex],
            facets: Vec::new(),
            facet_vertices: Vec::new(),
            vertex_facets: vec![BitSet::new(0)],
            affine,
        });
    }

    let full = m == ambient_dim;
    // Gram matrix of the affine basis, for the intrinsic coordinate change.
    let gram: Vec<Vec<Rational>> = affine
        .basis
        .iter()
        .map(|bi| affine.basis.iter().map(|bj| bi.dot(bj)).collect())
        .collect();
    let to_intrinsic = |p: &Vector| -> Vec<Rational> {
        if full {
            return p.coords().to_vec();
        }
        let diff = p.sub(&affine.base);
        let rhs: Vec<Rational> = affine.basis.iter().map(|b| b.dot(&diff)).collect();
        solve(&gram, &rhs).expect("independent basis has invertible Gram matrix")
    };

    // Homogenized integer rows (1, λ) per point; the hull's facets are the
    // extreme rays of {y : ⟨(1, λ_i), y⟩ ≤ 0}.
    let hpoints: Vec<Vec<BigInt>> = pts
        .iter()
        .map(|p| {
            let mut row = vec![Rational::one()];
            row.extend(to_intrinsic(p));
            primitive_integer_row(&row)
        })
        .collect();
    let rays = extreme_rays(&hpoints)?;

    // Map each intrinsic facet (α, β), meaning ⟨α, λ⟩ ≤ β, back to an ambient
    // halfspace with a primitive integer normal in the direction space.
    let mut facet_data: Vec<(Halfspace, usize)> = Vec::with_capacity(rays.len());
    for (ray_idx, ray) in rays.iter().enumerate() {
        let beta = -Rational::from_integer(ray[0].clone());
        let alpha: Vec<Rational> = ray[1..]
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect();
        let (normal_raw, offset_raw) = if full {
            (Vector::new(alpha), beta)
        } else {
            let mu = solve(&gram, &alpha).expect("Gram matrix invertible");
            let mut a = Vector::zero(ambient_dim);
            for (c, b) in mu.iter().zip(&affine.basis) {
                a = a.add(&b.scale(c));
            }
            let offset = &beta + a.dot(&affine.base);
            (a, offset)
        };
        facet_data.push((canonical_halfspace(&normal_raw, &offset_raw), ray_idx));
    }
    facet_data.sort_by(|(h1, _), (h2, _)| {
        (h1.normal.coords(), &h1.offset).cmp(&(h2.normal.coords(), &h2.offset))
    });

    // Incidence in homogeneous integer form, then the extremeness test:
    // a point is a vertex iff its active facet normals span the direction
    // space of the affine hull.
    let mut vertices = Vec::new();
    let mut vertex_active: Vec<Vec<usize>> = Vec::new();
    for (i, hp) in hpoints.iter().enumerate() {
        let active: Vec<usize> = facet_data
            .iter()
            .enumerate()
            .filter(|(_, (_, ray_idx))| int_dot(hp, &rays[*ray_idx]).is_zero())
            .map(|(f, _)| f)
            .collect();
        let normals: Vec<Vec<BigInt>> = active
            .iter()
            .map(|&f| rays[facet_data[f].1][1..].to_vec())
            .collect();
        if integer_rank(normals) == m {
            vertices.push(pts[i].clone());
            vertex_active.push(active);
        }
    }

    let nv = vertices.len();
    let nf = facet_data.len();
    let mut facet_vertices = vec![BitSet::new(nv); nf];
    let mut vertex_facets = vec![BitSet::new(nf); nv];
    for (v, active) in vertex_active.iter().enumerate() {
        for &f in active {
            facet_vertices[f].insert(v);
            vertex_facets[v].insert(f);
        }
    }

    let facets: Vec<Halfspace> = facet_data.into_iter().map(|(h, _)| h).collect();
    if cfg!(debug_assertions) {
        for v in &vertices {
            for (f, h) in facets.iter().enumerate() {
                let value = h.normal.dot(v);
                assert!(value <= h.offset, "vertex violates facet");
                let on = value == h.offset;
                let idx = vertices.binary_search(v).unwrap();
                assert_eq!(on, facet_vertices[f].contains(idx));
            }
        }
    }

    let affine = affine_hull(&vertices)?;
    Ok(Polytope {
        ambient_dim,
        intrinsic_dim: m,
        vertices,
        facets,
        facet_vertices,
        vertex_facets,
        affine,
    })
}

/// Scales a halfspace so the normal is the primitive integer vector on its
/// ray; the offset is scaled by the same positive factor.
fn canonical_halfspace(normal: &Vector, offset: &Rational) -> Halfspace {
    let ints = normal.primitive_integer();
    let lead = ints
        .iter()
        .position(|x| !x.is_zero())
        .expect("facet normal is nonzero");
    let scale = Rational::from_integer(ints[lead].clone()) / normal.coord(lead);
    debug_assert!(scale.is_positive());
    Halfspace {
        normal: Vector::new(ints.into_iter().map(Rational::from_integer).collect()),
        offset: offset * scale,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::rational::{int, rat};

    fn v(coords: &[i64]) -> Vector {
        Vector::from_ints(coords)
    }

    #[test]
    fn square_with_interior_point_dropped() {
        let pts = vec![
            v(&[-1, -1]),
            v(&[1, -1]),
            v(&[1, 1]),
            v(&[-1, 1]),
            v(&[0, 0]),
        ];
        let p = convex_hull(&pts, 2).unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.facet_count(), 4);
        assert_eq!(p.intrinsic_dim(), 2);
        assert!(p.vertex_index(&v(&[0, 0])).is_none());
    }

    #[test]
    fn midpoint_of_an_edge_is_not_a_vertex() {
        let pts = vec![v(&[0, 0]), v(&[2, 0]), v(&[1, 0]), v(&[0, 2])];
        let p = convex_hull(&pts, 2).unwrap();
        assert_eq!(p.vertex_count(), 3);
    }

    #[test]
    fn cube_has_known_counts() {
        let p = construct::cube(3).unwrap();
        assert_eq!(p.vertex_count(), 8);
        assert_eq!(p.facet_count(), 6);
        assert!(p.is_full_dimensional());
        for h in p.facets() {
            assert_eq!(h.offset, int(1));
        }
    }

    #[test]
    fn hull_is_idempotent() {
        let pts = vec![
            v(&[0, 0, 0]),
            v(&[2, 0, 1]),
            v(&[1, 3, 0]),
            v(&[0, 1, 2]),
            v(&[1, 1, 1]),
        ];
        let p = convex_hull(&pts, 3).unwrap();
        let q = convex_hull(p.vertices(), 3).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.facets(), q.facets());
    }

    #[test]
    fn single_point_polytope() {
        let p = convex_hull(&[v(&[2, 2, 2]), v(&[2, 2, 2])], 3).unwrap();
        assert_eq!(p.intrinsic_dim(), 0);
        assert_eq!(p.vertex_count(), 1);
        assert_eq!(p.facet_count(), 0);
        assert!(!p.is_centered());
        assert!(p.contains(&v(&[2, 2, 2])));
        assert!(!p.contains(&v(&[2, 2, 1])));
    }

    #[test]
    fn flat_segment_in_the_plane_is_centered() {
        let p = convex_hull(&[v(&[-1, 0]), v(&[1, 0])], 2).unwrap();
        assert_eq!(p.intrinsic_dim(), 1);
        assert_eq!(p.facet_count(), 2);
        assert!(p.is_centered());
        // Normals live in the direction space of the affine hull.
        for h in p.facets() {
            assert!(h.normal.coord(1).is_zero());
        }
    }

    #[test]
    fn shifted_square_with_facet_through_origin_is_not_centered() {
        let p = convex_hull(&[v(&[0, 0]), v(&[2, 0]), v(&[2, 2]), v(&[0, 2])], 2).unwrap();
        assert!(!p.is_centered());
        assert!(p.contains(&Vector::zero(2)));
    }

    #[test]
    fn cube_dual_is_cross_polytope() {
        let dual = construct::cube(3).unwrap().polar_dual().unwrap();
        assert_eq!(dual.vertex_count(), 6);
        assert_eq!(dual.facet_count(), 8);
        assert_eq!(dual, construct::cross_polytope(3).unwrap());
    }

    #[test]
    fn polar_duality_is_an_involution() {
        for p in [
            construct::cube(3).unwrap(),
            construct::cross_polytope(4).unwrap(),
            construct::tetrahedron_pc(),
        ] {
            let back = p.polar_dual().unwrap().polar_dual().unwrap();
            assert_eq!(back, p);
        }
    }

    #[test]
    fn tetrahedron_dual_is_reflected_tetrahedron() {
        let dual = construct::tetrahedron_pc().polar_dual().unwrap();
        assert_eq!(dual.vertex_count(), 4);
        assert_eq!(dual.facet_count(), 4);
        let reflected: Vec<Vector> = construct::tetrahedron_pc()
            .vertices()
            .iter()
            .map(|v| v.neg())
            .collect();
        assert_eq!(dual, convex_hull(&reflected, 3).unwrap());
    }

    #[test]
    fn dual_of_uncentered_polytope_is_an_error() {
        let p = convex_hull(&[v(&[0, 0]), v(&[2, 0]), v(&[2, 2]), v(&[0, 2])], 2).unwrap();
        assert!(matches!(p.polar_dual(), Err(Error::NotCentered)));
        let flat = convex_hull(&[v(&[-1, 0]), v(&[1, 0])], 2).unwrap();
        assert!(matches!(flat.polar_dual(), Err(Error::NotFullDimensional)));
    }

    #[test]
    fn support_set_of_cube_edge_vertex_whole() {
        let p = construct::cube(3).unwrap();

        let edge = p.support_set(&v(&[1, 1, 0]));
        assert_eq!(edge.dim, 1);
        let edge_verts: Vec<Vector> = edge
            .vertex_indices()
            .iter()
            .map(|&i| p.vertices()[i].clone())
            .collect();
        assert_eq!(edge_verts, vec![v(&[1, 1, -1]), v(&[1, 1, 1])]);

        let vertex = p.support_set(&v(&[1, 2, 3]));
        assert_eq!(vertex.dim, 0);
        assert_eq!(p.vertices()[vertex.vertex_indices()[0]], v(&[1, 1, 1]));

        let whole = p.support_set(&Vector::zero(3));
        assert_eq!(whole.dim, 3);
        assert_eq!(whole.vertex_count(), 8);
    }

    #[test]
    fn support_set_is_incidence_closed() {
        let p = construct::cube(3).unwrap();
        let face = p.support_set(&v(&[1, 1, 0]));
        assert_eq!(face.verts, p.vertices_on_facets(&face.facets));
    }

    #[test]
    fn relint_membership_distinguishes_boundary() {
        let p = construct::cube(2).unwrap();
        let whole = p.whole_face();
        assert!(p.relint_contains(&whole, &Vector::zero(2)));
        assert!(!p.relint_contains(&whole, &v(&[1, 0])));
        let edge = p.support_set(&v(&[1, 0]));
        assert!(p.relint_contains(&edge, &v(&[1, 0])));
        assert!(!p.relint_contains(&edge, &v(&[1, 1])));
        assert!(!p.relint_contains(&edge, &Vector::zero(2)));
    }

    #[test]
    fn scaling_preserves_combinatorics() {
        let p = construct::cube(3).unwrap();
        let s = p.scale(&rat(3, 2)).unwrap();
        assert_eq!(s.vertex_count(), 8);
        assert_eq!(s.facet_count(), 6);
        assert_eq!(s.vertices()[0], v(&[-1, -1, -1]).scale(&rat(3, 2)));
    }
}
