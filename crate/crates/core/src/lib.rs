//! Combinatorial maps on closed surfaces, zigzags and z-monodromy.
//!
//! The crate computes zigzags (Petrie walks) and z-monodromies of faces in
//! maps on closed surfaces, and realizes every admissible signed permutation
//! as the z-monodromy of a face, first on the sphere through a chord-diagram
//! construction and then on any closed surface by a connected sum.

pub mod export;
pub mod map;
pub mod monodromy;
pub mod planar;
pub mod simplify;
pub mod surface;
