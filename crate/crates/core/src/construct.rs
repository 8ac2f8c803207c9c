//! Standard polytope constructors.

use crate::error::Error;
use crate::linalg::Vector;
use crate::param::rational_circle_point;
use crate::polytope::{convex_hull, Polytope};
use crate::rational::{int, Rational};
use crate::Result;

/// The cube `[-1, 1]^d`.
pub fn cube(dim: usize) -> Result<Polytope> {
    if dim == 0 {
        return Err(Error::InvalidConstruction(
            "cube needs dimension >= 1".into(),
        ));
    }
    let mut points = Vec::with_capacity(1 << dim);
    for mask in 0..1u64 << dim {
        let coords: Vec<Rational> = (0..dim)
            .map(|i| if mask >> i & 1 == 1 { int(1) } else { int(-1) })
            .collect();
        points.push(Vector::new(coords));
    }
    convex_hull(&points, dim)
}

/// The cross-polytope `conv{±e_i}`.
pub fn cross_polytope(dim: usize) -> Result<Polytope> {
    if dim == 0 {
        return Err(Error::InvalidConstruction(
            "cross-polytope needs dimension >= 1".into(),
        ));
    }
    let mut points = Vec::with_capacity(2 * dim);
    for i in 0..dim {
        points.push(Vector::unit(dim, i));
        points.push(Vector::unit(dim, i).neg());
    }
    convex_hull(&points, dim)
}

/// The rational regular tetrahedron `conv{(1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1)}`,
/// which is perfectly centered.
pub fn tetrahedron_pc() -> Polytope {
    let points = vec![
        Vector::from_ints(&[1, 1, 1]),
        Vector::from_ints(&[1, -1, -1]),
        Vector::from_ints(&[-1, 1, -1]),
        Vector::from_ints(&[-1, -1, 1]),
    ];
    convex_hull(&points, 3).expect("fixed tetrahedron is valid")
}

/// A d-simplex `conv{0, e_1, ..., e_d}`. Only its combinatorics matter here.
pub fn simplex(dim: usize) -> Result<Polytope> {
    if dim == 0 {
        return Err(Error::InvalidConstruction(
            "simplex needs dimension >= 1".into(),
        ));
    }
    let mut points = vec![Vector::zero(dim)];
    for i in 0..dim {
        points.push(Vector::unit(dim, i));
    }
    convex_hull(&points, dim)
}

/// Cyclic polytope: hull of points `(t, t², ..., t^d)` on the moment curve,
/// for pairwise distinct rational parameters.
pub fn cyclic(dim: usize, params: &[Rational]) -> Result<Polytope> {
    if dim == 0 {
        return Err(Error::InvalidConstruction(
            "cyclic polytope needs dimension >= 1".into(),
        ));
    }
    let mut sorted = params.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidConstruction(
            "cyclic polytope parameters must be pairwise distinct".into(),
        ));
    }
    let points: Vec<Vector> = params.iter().map(|t| moment_curve_point(dim, t)).collect();
    convex_hull(&points, dim)
}

pub fn moment_curve_point(dim: usize, t: &Rational) -> Vector {
    let mut coords = Vec::with_capacity(dim);
    let mut power = t.clone();
    for _ in 0..dim {
        coords.push(power.clone());
        power *= t;
    }
    Vector::new(coords)
}

/// Polygon with vertices on the unit half-circle, embedded in the plane
/// spanned by `e_axis` and the last coordinate axis of the ambient space.
///
/// Parameters must be pairwise distinct and positive; each maps to the circle
/// point `((1-t²)/(1+t²), 2t/(1+t²))` placed at coordinates (axis, last).
pub fn halfcircle_polygon(params: &[Rational], axis: usize, ambient: usize) -> Result<Polytope> {
    if ambient < 2 || axis + 1 >= ambient {
        return Err(Error::InvalidConstruction(format!(
            "half-circle polygon needs axis < ambient - 1, got axis {axis}, ambient {ambient}"
        )));
    }
    if params.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut sorted = params.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidConstruction(
            "half-circle parameters must be pairwise distinct".into(),
        ));
    }
    let mut points = Vec::with_capacity(params.len());
    for t in params {
        let c = rational_circle_point(t)?;
        let mut coords = vec![Rational::from_integer(0.into()); ambient];
        coords[axis] = c.coord(0).clone();
        coords[ambient - 1] = c.coord(1).clone();
        points.push(Vector::new(coords));
    }
    convex_hull(&points, ambient)
}

/// The segment between two points.
pub fn segment(a: &Vector, b: &Vector) -> Result<Polytope> {
    convex_hull(&[a.clone(), b.clone()], a.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use num_traits::Zero;

    #[test]
    fn cube_and_cross_counts() {
        let c4 = cube(4).unwrap();
        assert_eq!((c4.vertex_count(), c4.facet_count()), (16, 8));
        let x4 = cross_polytope(4).unwrap();
        assert_eq!((x4.vertex_count(), x4.facet_count()), (8, 16));
        assert!(cube(0).is_err());
    }

    #[test]
    fn tetrahedron_is_centered() {
        let t = tetrahedron_pc();
        assert_eq!((t.vertex_count(), t.facet_count()), (4, 4));
        assert!(t.is_centered());
    }

    #[test]
    fn simplex_counts() {
        let s = simplex(5).unwrap();
        assert_eq!((s.vertex_count(), s.facet_count()), (6, 6));
    }

    #[test]
    fn cyclic_rejects_duplicates() {
        assert!(cyclic(4, &[int(1), int(2), int(1)]).is_err());
        let c = cyclic(4, &[int(1), int(2), int(3), int(4), int(5), int(6)]).unwrap();
        assert_eq!(c.vertex_count(), 6);
        assert!(c.is_full_dimensional());
    }

    #[test]
    fn halfcircle_polygon_lies_in_its_plane() {
        let p = halfcircle_polygon(&[rat(1, 3), rat(1, 2), int(1), int(2)], 0, 3).unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.intrinsic_dim(), 2);
        for v in p.vertices() {
            assert!(v.coord(1).is_zero());
        }
        assert!(halfcircle_polygon(&[int(1), int(1)], 0, 3).is_err());
        assert!(halfcircle_polygon(&[int(1)], 2, 3).is_err());
    }

    #[test]
    fn single_parameter_gives_a_point() {
        let p = halfcircle_polygon(&[int(1)], 0, 3).unwrap();
        assert_eq!(p.intrinsic_dim(), 0);
        assert_eq!(p.vertices()[0], Vector::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn segment_construction() {
        let s = segment(&Vector::from_ints(&[-1, 0]), &Vector::from_ints(&[1, 0])).unwrap();
        assert_eq!(s.intrinsic_dim(), 1);
        assert_eq!(s.vertex_count(), 2);
    }
}
