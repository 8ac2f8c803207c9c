//! Rational parametrizations: points on the unit circle and exactly
//! orthogonal rotation matrices.
//!
//! Both replace constructions that are classically written with cos/sin.
//! The Pythagorean parametrization `t ↦ ((1-t²)/(1+t²), 2t/(1+t²))` walks the
//! open upper half-circle in strictly increasing angular order as `t` grows,
//! which is all the order-driven arguments downstream need.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::linalg::{solve, Vector};
use crate::rational::{rat, Rational};
use crate::Result;

/// Point ((1-t²)/(1+t²), 2t/(1+t²)) on the unit circle, for t > 0.
///
/// As t ranges over (0, ∞) the angle ranges monotonically over (0, π).
pub fn rational_circle_point(t: &Rational) -> Result<Vector> {
    if !t.is_positive() {
        return Err(Error::Domain(format!(
            "circle parameter must be positive, got {t}"
        )));
    }
    let one = Rational::one();
    let t2 = t * t;
    let denom = &one + &t2;
    let x = (&one - &t2) / &denom;
    let y = (rat(2, 1) * t) / &denom;
    Ok(Vector::new(vec![x, y]))
}

/// An exactly orthogonal d×d rational matrix from the Cayley transform
/// Q = (I - A)(I + A)⁻¹ of a random skew-symmetric A with small entries.
///
/// Deterministic: the same seed always yields the same matrix. Rows of the
/// result are returned as vectors.
#[allow(clippy::needless_range_loop)]
pub fn random_rational_rotation(dim: usize, seed: u64) -> Result<Vec<Vector>> {
    if dim < 2 {
        return Err(Error::Domain(format!(
            "rotation needs dimension >= 2, got {dim}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // I + A is invertible for every real skew-symmetric A, but guard and
    // resample anyway.
    loop {
        let mut skew = vec![vec![Rational::zero(); dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let numer = rng.gen_range(-4i64..=4);
                let entry = rat(numer, 16);
                skew[i][j] = entry.clone();
                skew[j][i] = -entry;
            }
        }
        if let Some(q) = cayley_transform(&skew) {
            return Ok(q);
        }
    }
}

/// Cayley transform of a skew-symmetric matrix; `None` if I + A is singular.
#[allow(clippy::needless_range_loop)]
pub fn cayley_transform(skew: &[Vec<Rational>]) -> Option<Vec<Vector>> {
    let dim = skew.len();
    let mut i_plus = skew.to_vec();
    let mut i_minus = skew.to_vec();
    for r in 0..dim {
        i_plus[r][r] += Rational::one();
        for c in 0..dim {
            i_minus[r][c] = -&i_minus[r][c];
        }
        i_minus[r][r] += Rational::one();
    }
    // Column c of Q solves (I + A)ᵀ qᵀ... work row-wise instead:
    // Q = (I - A) · (I + A)⁻¹, so Q·(I + A) = I - A, and row r of Q solves
    // (I + A)ᵀ x = (row r of I - A).
    let i_plus_t: Vec<Vec<Rational>> = (0..dim)
        .map(|r| (0..dim).map(|c| i_plus[c][r].clone()).collect())
        .collect();
    let mut rows = Vec::with_capacity(dim);
    for r in 0..dim {
        let x = solve(&i_plus_t, &i_minus[r])?;
        rows.push(Vector::new(x));
    }
    Some(rows)
}
