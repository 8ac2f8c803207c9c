//! Exact double description method.
//!
//! One engine serves both conversion directions. Facet enumeration of
//! `conv(points)` asks for the extreme rays of the polar of the homogenization
//! cone; vertex enumeration of an H-polytope asks for the extreme rays of the
//! homogenization cone itself. Both cones are pointed and full-dimensional
//! once a polytope is reduced to coordinates of its affine hull.
//!
//! Rays are primitive integer vectors; all comparisons are exact.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bitset::BitSet;
use crate::error::Error;
use crate::linalg::{int_dot, reduce_int_row, solve};
use crate::rational::Rational;
use crate::Result;

struct Ray {
    coords: Vec<BigInt>,
    /// Constraints (by index into `rows`) this ray satisfies with equality.
    active: BitSet,
}

/// Extreme rays of the pointed cone `{y : ⟨a, y⟩ ≤ 0 for every row a}`.
///
/// Pointedness is equivalent to the rows having full column rank; that is a
/// precondition here and violating it is reported as an error.
pub fn extreme_rays(rows: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let m = rows[0].len();
    debug_assert!(rows.iter().all(|r| r.len() == m));
    if m == 0 {
        return Ok(Vec::new());
    }

    let basis = independent_rows(rows, m)
        .ok_or_else(|| Error::Domain("cone is not pointed: constraint rows do not span".into()))?;

    // Simplicial start: rays r_i with ⟨a_j, r_i⟩ = -δ_ij for j in the basis.
    let mut rays = initial_rays(rows, &basis, n)?;

    let in_basis: Vec<bool> = {
        let mut b = vec![false; n];
        for &i in &basis {
            b[i] = true;
        }
        b
    };

    for (t, &skip) in in_basis.iter().enumerate() {
        if !skip {
            insert_constraint(&mut rays, rows, t);
        }
    }

    Ok(rays.into_iter().map(|r| r.coords).collect())
}

/// Indices of `m` linearly independent rows, or `None` if rank < m.
fn independent_rows(rows: &[Vec<BigInt>], m: usize) -> Option<Vec<usize>> {
    let mut chosen = Vec::with_capacity(m);
    let mut echelon: Vec<Vec<BigInt>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut reduced = row.clone();
        for e in &echelon {
            let lead = e.iter().position(|x| !x.is_zero()).unwrap();
            if !reduced[lead].is_zero() {
                let p = e[lead].clone();
                let f = reduced[lead].clone();
                for c in 0..reduced.len() {
                    reduced[c] = &reduced[c] * &p - &e[c] * &f;
                }
                reduce_int_row(&mut reduced);
            }
        }
        if reduced.iter().any(|x| !x.is_zero()) {
            chosen.push(i);
            echelon.push(reduced);
            echelon.sort_by_key(|r| r.iter().position(|x| !x.is_zero()).unwrap());
            if chosen.len() == m {
                return Some(chosen);
            }
        }
    }
    None
}

fn initial_rays(rows: &[Vec<BigInt>], basis: &[usize], n: usize) -> Result<Vec<Ray>> {
    let m = basis.len();
    let a: Vec<Vec<Rational>> = basis
        .iter()
        .map(|&i| {
            rows[i]
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut rays = Vec::with_capacity(m);
    for i in 0..m {
        let mut rhs = vec![Rational::zero(); m];
        rhs[i] = -Rational::from_integer(BigInt::from(1));
        let x = solve(&a, &rhs)
            .ok_or_else(|| Error::Domain("cone is not pointed: singular starting basis".into()))?;
        let mut coords = crate::linalg::primitive_integer_row(&x);
        reduce_int_row(&mut coords);
        let mut active = BitSet::new(n);
        for (j, &row_idx) in basis.iter().enumerate() {
            if j != i {
                active.insert(row_idx);
            }
        }
        rays.push(Ray { coords, active });
    }
    Ok(rays)
}

fn insert_constraint(rays: &mut Vec<Ray>, rows: &[Vec<BigInt>], t: usize) {
    let a = &rows[t];
    let values: Vec<BigInt> = rays.iter().map(|r| int_dot(a, &r.coords)).collect();

    let mut violating = Vec::new();
    let mut feasible = Vec::new();
    for (i, v) in values.iter().enumerate() {
        match v.sign() {
            num_bigint::Sign::Plus => violating.push(i),
            num_bigint::Sign::Minus => feasible.push(i),
            num_bigint::Sign::NoSign => {}
        }
    }
    if violating.is_empty() {
        for (r, v) in rays.iter_mut().zip(&values) {
            if v.is_zero() {
                r.active.insert(t);
            }
        }
        return;
    }

    let mut new_rays = Vec::new();
    for &p in &violating {
        for &q in &feasible {
            let common = rays[p].active.intersection(&rays[q].active);
            if !adjacent(rays, p, q, &common) {
                continue;
            }
            // Positive combination landing on the hyperplane of constraint t.
            let sp = &values[p];
            let sq = &values[q];
            let mut coords: Vec<BigInt> = rays[p]
                .coords
                .iter()
                .zip(&rays[q].coords)
                .map(|(cp, cq)| cq * sp - cp * sq)
                .collect();
            reduce_int_row(&mut coords);
            let mut active = common;
            active.insert(t);
            new_rays.push(Ray { coords, active });
        }
    }

    let mut kept = Vec::with_capacity(rays.len());
    for (i, mut r) in rays.drain(..).enumerate() {
        match values[i].sign() {
            num_bigint::Sign::Plus => {}
            num_bigint::Sign::Minus => kept.push(r),
            num_bigint::Sign::NoSign => {
                r.active.insert(t);
                kept.push(r);
            }
        }
    }
    kept.extend(new_rays);
    *rays = kept;
}

/// Combinatorial adjacency: rays p and q are adjacent iff no third ray's
/// active set contains the intersection of theirs. Valid for pointed cones.
fn adjacent(rays: &[Ray], p: usize, q: usize, common: &BitSet) -> bool {
    rays.iter()
        .enumerate()
        .all(|(i, r)| i == p || i == q || !common.is_subset(&r.active))
}
