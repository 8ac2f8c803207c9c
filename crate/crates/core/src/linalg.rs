//! Exact rational vectors and the linear algebra the geometric predicates
//! reduce to: rank, linear solves, affine hulls and orthogonal projection.
//!
//! Rank and the convex-hull inner loops work on integer rows (denominators
//! cleared, rows reduced by their gcd) to keep coefficient growth in check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{format_rational, Rational};
use crate::Result;

/// A point or direction in d-dimensional rational space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[axis] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "add of mismatched dimensions");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "sub of mismatched dimensions");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a * s).collect())
    }

    /// The unique primitive integer vector on the same ray (zero stays zero).
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        primitive_integer_row(&self.0)
    }
}

impl std::fmt::Display for Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Debug for Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

/// Clears denominators and divides by the gcd; the result spans the same ray.
pub fn primitive_integer_row(coords: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coords {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in &mut ints {
            *x = &*x / &g;
        }
    }
    ints
}

pub fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides a row by the gcd of its entries (in place).
pub fn reduce_int_row(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank of an integer matrix by fraction-free elimination with per-row gcd
/// reduction. Consumes the matrix.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (pivot_row, rest) = {
            let (head, tail) = rows.split_at_mut(rank + 1);
            (&head[rank], tail)
        };
        let p = pivot_row[col].clone();
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..ncols {
                row[c] = &row[c] * &p - &pivot_row[c] * &f;
            }
            reduce_int_row(row);
        }
        rank += 1;
    }
    rank
}

/// Rank of the subspace spanned by the given vectors, computed exactly.
pub fn rank(rows: &[Vector]) -> Result<usize> {
    if rows.is_empty() {
        return Ok(0);
    }
    let dim = rows[0].dim();
    for r in rows {
        if r.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: r.dim(),
            });
        }
    }
    Ok(integer_rank(
        rows.iter().map(|r| r.primitive_integer()).collect(),
    ))
}

/// Solves the square system `a x = b` exactly. `None` if `a` is singular.
#[allow(clippy::needless_range_loop)]
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    m[r][c] = &m[r][c] - &f * &m[col][c];
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Determinant of a square rational matrix.
#[allow(clippy::needless_range_loop)]
pub fn determinant(a: &[Vector]) -> Rational {
    let n = a.len();
    assert!(a.iter().all(|row| row.dim() == n));
    let mut m: Vec<Vec<Rational>> = a.iter().map(|r| r.coords().to_vec()).collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    det
}

/// An affine subspace given by a basepoint and a linearly independent
/// direction basis. Its dimension is the basis count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSubspace {
    pub base: Vector,
    pub basis: Vec<Vector>,
}

impl AffineSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.dim()
    }

    /// Exact membership test.
    pub fn contains(&self, p: &Vector) -> bool {
        if p.dim() != self.ambient_dim() {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(p.sub(&self.base));
        rank(&rows).expect("dimensions agree") == self.basis.len()
    }
}

/// Affine hull of a nonempty point set. The basis is a maximal independent
/// subset of differences from the first point.
pub fn affine_hull(points: &[Vector]) -> Result<AffineSubspace> {
    let Some(base) = points.first() else {
        return Err(Error::EmptyInput);
    };
    let dim = base.dim();
    let mut basis: Vec<Vector> = Vec::new();
    // Echelonized integer copies of the basis, for fast independence tests.
    let mut echelon: Vec<Vec<BigInt>> = Vec::new();
    for p in &points[1..] {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        let diff = p.sub(base);
        let mut row = diff.primitive_integer();
        reduce_against(&mut row, &echelon);
        if row.iter().any(|x| !x.is_zero()) {
            reduce_int_row(&mut row);
            basis.push(diff);
            echelon.push(row);
            echelon.sort_by_key(|r| leading_index(r));
            if basis.len() == dim {
                break;
            }
        }
    }
    Ok(AffineSubspace {
        base: base.clone(),
        basis,
    })
}

fn leading_index(row: &[BigInt]) -> usize {
    row.iter().position(|x| !x.is_zero()).unwrap_or(row.len())
}

/// Cross-multiplication reduction of `row` against echelon rows.
fn reduce_against(row: &mut [BigInt], echelon: &[Vec<BigInt>]) {
    for e in echelon {
        let lead = leading_index(e);
        if lead == e.len() || row[lead].is_zero() {
            continue;
        }
        let p = e[lead].clone();
        let f = row[lead].clone();
        for c in 0..row.len() {
            row[c] = &row[c] * &p - &e[c] * &f;
        }
        reduce_int_row(row);
    }
}

/// Foot of the perpendicular from `p` onto the affine subspace: the unique
/// `q` in the subspace with `p - q` orthogonal to every basis vector.
pub fn project_onto_affine(p: &Vector, subspace: &AffineSubspace) -> Result<Vector> {
    if p.dim() != subspace.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: subspace.ambient_dim(),
            found: p.dim(),
        });
    }
    let k = subspace.basis.len();
    if k == 0 {
        return Ok(subspace.base.clone());
    }
    // Normal equations (B^T B) x = B^T (p - base); exact, and B^T B is
    // invertible because the basis is independent.
    let diff = p.sub(&subspace.base);
    let gram: Vec<Vec<Rational>> = subspace
        .basis
        .iter()
        .map(|bi| subspace.basis.iter().map(|bj| bi.dot(bj)).collect())
        .collect();
    let rhs: Vec<Rational> = subspace.basis.iter().map(|bi| bi.dot(&diff)).collect();
    let coeffs = solve(&gram, &rhs).expect("Gram matrix of independent basis is invertible");
    let mut q = subspace.base.clone();
    for (c, b) in coeffs.iter().zip(&subspace.basis) {
        q = q.add(&b.scale(c));
    }
    Ok(q)
}
