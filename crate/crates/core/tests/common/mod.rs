//! Helpers shared by the integration suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use sumdual::construct;
use sumdual::linalg::Vector;
use sumdual::rational::{rat, Rational};
use sumdual::Polytope;

/// The cube under a random rational linear map near the identity: cube
/// combinatorics, perturbed geometry.
pub fn perturbed_cube(rng: &mut ChaCha8Rng) -> Polytope {
    let cube = construct::cube(3).unwrap();
    let map: Vec<Vector> = (0..3)
        .map(|i| {
            let mut row: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-2..=2), 40)).collect();
            row[i] += rat(1, 1);
            Vector::new(row)
        })
        .collect();
    cube.transform(&map).unwrap()
}

/// Random lattice-point hull in the given dimension.
pub fn random_hull(rng: &mut ChaCha8Rng, dim: usize, max_points: usize) -> Polytope {
    let count = rng.gen_range(1..=max_points);
    let points: Vec<Vector> = (0..count)
        .map(|_| {
            Vector::new(
                (0..dim)
                    .map(|_| crate::common::int_rat(rng.gen_range(-6..=6)))
                    .collect(),
            )
        })
        .collect();
    sumdual::polytope::convex_hull(&points, dim).unwrap()
}

pub fn int_rat(n: i64) -> Rational {
    sumdual::rational::int(n)
}
