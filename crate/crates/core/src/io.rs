//! Polytope files and OFF figure export.
//!
//! A polytope file is a JSON object with a name, the ambient dimension, and
//! the vertex coordinates as rational strings (`"p/q"` or `"p"`). Only the
//! V-representation is stored: the H-representation and incidence are
//! recomputed on load, never trusted from disk.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::{rank, Vector};
use crate::polytope::{convex_hull, Polytope};
use crate::rational::{format_rational, parse_rational, sign, to_f64, Rational};
use crate::Result;

#[derive(Serialize, Deserialize)]
struct PolytopeFile {
    name: String,
    ambient_dim: usize,
    vertices: Vec<Vec<String>>,
}

pub fn polytope_to_json(name: &str, p: &Polytope) -> String {
    let file = PolytopeFile {
        name: name.to_string(),
        ambient_dim: p.ambient_dim(),
        vertices: p
            .vertices()
            .iter()
            .map(|v| v.coords().iter().map(format_rational).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("polytope file serializes")
}

pub fn polytope_from_json(text: &str) -> Result<(String, Polytope)> {
    let file: PolytopeFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut points = Vec::with_capacity(file.vertices.len());
    for (i, coords) in file.vertices.iter().enumerate() {
        if coords.len() != file.ambient_dim {
            return Err(Error::Parse {
                line: 0,
                column: 0,
                message: format!(
                    "vertex {i} has {} coordinates, expected {}",
                    coords.len(),
                    file.ambient_dim
                ),
            });
        }
        let parsed: Result<Vec<Rational>> = coords.iter().map(|s| parse_rational(s)).collect();
        points.push(Vector::new(parsed?));
    }
    let polytope = convex_hull(&points, file.ambient_dim)?;
    Ok((file.name, polytope))
}

pub fn save_polytope<W: Write>(mut writer: W, name: &str, p: &Polytope) -> Result<()> {
    writer.write_all(polytope_to_json(name, p).as_bytes())?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn load_polytope<R: Read>(mut reader: R) -> Result<(String, Polytope)> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    polytope_from_json(&text)
}

pub fn save_polytope_file(path: &Path, name: &str, p: &Polytope) -> Result<()> {
    save_polytope(std::fs::File::create(path)?, name, p)
}

pub fn load_polytope_file(path: &Path) -> Result<(String, Polytope)> {
    load_polytope(std::fs::File::open(path)?)
}

/// OFF export of a full-dimensional 3-polytope. Facet vertices are listed in
/// boundary order, counter-clockwise seen from outside.
///
/// Coordinates are decimal renderings, for figures only; the exact rationals
/// live in the polytope file format.
pub fn to_off(p: &Polytope) -> Result<String> {
    if p.ambient_dim() != 3 || !p.is_full_dimensional() {
        return Err(Error::Domain(
            "OFF export needs a full-dimensional 3-polytope".into(),
        ));
    }
    let nv = p.vertex_count();
    let nf = p.facet_count();
    let ne = nv + nf - 2;

    let mut out = String::from("OFF\n");
    out.push_str("# coordinates are decimal approximations of exact rational values\n");
    let _ = writeln!(out, "{nv} {nf} {ne}");
    for v in p.vertices() {
        let _ = writeln!(
            out,
            "{} {} {}",
            to_f64(v.coord(0)),
            to_f64(v.coord(1)),
            to_f64(v.coord(2))
        );
    }
    for f in 0..nf {
        let ring = facet_boundary_order(p, f);
        let mut line = ring.len().to_string();
        for idx in ring {
            let _ = write!(line, " {idx}");
        }
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

/// Vertices of a facet in cyclic boundary order with outward orientation,
/// computed exactly.
fn facet_boundary_order(p: &Polytope, facet: usize) -> Vec<usize> {
    let members = p.facet_vertex_set(facet).indices();
    assert!(members.len() >= 3, "3-polytope facets are polygons");
    let points: Vec<&Vector> = members.iter().map(|&i| &p.vertices()[i]).collect();

    // Centroid of the polygon's vertices is in its relative interior.
    let inv_n = Rational::new(1.into(), (points.len() as i64).into());
    let mut centroid = Vector::zero(3);
    for q in &points {
        centroid = centroid.add(q);
    }
    centroid = centroid.scale(&inv_n);

    // A basis of the facet plane.
    let u = points[1].sub(points[0]);
    let w = points[2..]
        .iter()
        .map(|q| q.sub(points[0]))
        .find(|cand| rank(&[u.clone(), cand.clone()]).expect("same dims") == 2)
        .expect("facet spans a plane");

    // Planar coordinates relative to the centroid via the Gram system.
    let gram = [[u.dot(&u), u.dot(&w)], [w.dot(&u), w.dot(&w)]];
    let planar: Vec<(Rational, Rational)> = points
        .iter()
        .map(|q| {
            let diff = q.sub(&centroid);
            let rhs = [u.dot(&diff), w.dot(&diff)];
            let sol = crate::linalg::solve(&[gram[0].to_vec(), gram[1].to_vec()], &rhs)
                .expect("plane basis Gram is invertible");
            (sol[0].clone(), sol[1].clone())
        })
        .collect();

    // Exact angular order around the centroid.
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by(|&i, &j| angular_cmp(&planar[i], &planar[j]));

    // Fix the orientation so the boundary is counter-clockwise as seen from
    // outside, i.e. consistent with the outer facet normal.
    let a = &p.vertices()[members[order[0]]];
    let b = &p.vertices()[members[order[1]]];
    let c = &p.vertices()[members[order[2]]];
    let n = cross3(&b.sub(a), &c.sub(a));
    if n.dot(&p.facets()[facet].normal) < Rational::zero() {
        order.reverse();
    }
    order.into_iter().map(|i| members[i]).collect()
}

fn angular_cmp(a: &(Rational, Rational), b: &(Rational, Rational)) -> std::cmp::Ordering {
    let half = |q: &(Rational, Rational)| -> u8 {
        match sign(&q.1) {
            1 => 0,
            -1 => 1,
            _ => {
                if sign(&q.0) >= 0 {
                    0
                } else {
                    1
                }
            }
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a.0 * &b.1 - &b.0 * &a.1;
        match sign(&cross) {
            1 => std::cmp::Ordering::Less,
            -1 => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        }
    })
}

fn cross3(a: &Vector, b: &Vector) -> Vector {
    Vector::new(vec![
        a.coord(1) * b.coord(2) - a.coord(2) * b.coord(1),
        a.coord(2) * b.coord(0) - a.coord(0) * b.coord(2),
        a.coord(0) * b.coord(1) - a.coord(1) * b.coord(0),
    ])
}
