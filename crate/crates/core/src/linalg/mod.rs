//! Exact linear algebra on tensor powers of a finite-dimensional space.

pub mod composite;
pub mod echelon;
pub mod map;
pub mod poly;
pub mod sparse;
pub mod subspace;

pub use composite::{compose_chain, id, Chain, Factor, Stage};
pub use echelon::{determinant, rref, Rref};
pub use map::{index_to_tuple, tensor_power_dim, tuple_to_index, LinearMap};
pub use poly::{char_poly, det, min_poly, Poly};
pub use sparse::{Accumulator, SparseVec};
pub use subspace::{image_basis, kernel_basis, kernel_of_columns, quotient_dim, rank, SubspaceBasis};

pub use crate::stage;
