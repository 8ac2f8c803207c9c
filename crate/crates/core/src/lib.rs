//! Exact convex-polytope calculus over the rationals.
//!
//! This crate computes Minkowski sums, polar duals, face lattices and normal
//! cones of convex polytopes with **exact rational arithmetic** — no floating
//! point is used in any geometric predicate. On top of that substrate it
//! implements:
//!
//! * the *perfectly centered* test (every nonempty face meets its own outer
//!   normal cone) with explicit witness points,
//! * *Nesterov rounding* `P + P*` (sum of a centered polytope with its polar
//!   dual), the pair lattice `(G, F)` with `G ⊆ F` that predicts the face
//!   lattice of the rounding of a perfectly centered polytope, and the
//!   closed-form f-vectors of rounded simplices and cubes,
//! * repeated rounding in dimension 3 and its f-vector recurrences,
//! * the trivial upper bounds on `f_k` of a Minkowski sum together with the
//!   constructions that attain them: half-circle polygon families for the
//!   vertex bound, perturbed simplicial pairs for the 3D facet/edge bounds,
//!   and sums of cyclic polytopes for low-dimensional face bounds,
//! * the exact 3D face-count relations for sums of polytopes relatively in
//!   general position.
//!
//! Everything is built for *desk scale* (ambient dimension ≤ ~8, vertex
//! counts in the hundreds): hulls are computed with an exact double
//! description method, and face lattices by closing facet vertex-sets under
//! intersection. All values are immutable after construction and all
//! operations are pure functions.

pub mod bitset;
pub mod construct;
pub mod error;
pub mod extremal;
pub mod hull;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod minkowski;
pub mod nesterov;
pub mod param;
pub mod polytope;
pub mod rational;

pub use bitset::BitSet;
pub use error::Error;
pub use lattice::{Cone, FaceLattice};
pub use linalg::{AffineSubspace, Vector};
pub use minkowski::{FaceDecomposition, SumContext};
pub use polytope::{Face, Halfspace, Polytope};
pub use rational::Rational;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
