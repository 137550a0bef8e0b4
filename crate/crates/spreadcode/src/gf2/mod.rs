//! Exact linear algebra over GF(2) for small ambient dimensions (n <= 16).
//!
//! Vectors are bitmasks with coordinate 1 leftmost, so the tuple notation of
//! the projective geometry literature reads off directly: "135" is 10101,
//! "u" is the all-ones vector 11111, and a weight-4 vector like 11101 is
//! written by its complement as "4u". Subspaces live in reduced row-echelon
//! canonical form, which makes equality, hashing and set membership cheap and
//! deterministic everywhere else in the crate.

mod linmap;
mod subspace;
mod vector;

pub use linmap::LinearMap;
pub use subspace::{
    enumerate_subspaces, gaussian_binomial, line_from_points, SchubertSignature, Subspace,
};
pub use vector::Vector;
