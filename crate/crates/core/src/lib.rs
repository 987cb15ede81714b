//! Adjoint cohomology of finite-dimensional Hopf algebras, computed exactly.

pub mod acceptance;
pub mod cli;
pub mod cohomology;
pub mod constructions;
pub mod deformation;
pub mod error;
pub mod groupoid;
pub mod groups;
pub mod hopf;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{DualScalar, FieldSpec, Scalar};
