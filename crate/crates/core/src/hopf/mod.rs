//! Hopf algebras given by structure constants.

pub mod adjoint;
pub mod algebra;
pub mod schema;

pub use adjoint::{
    adjoint_map, check_adjoint_conditions, check_adjoint_conditions_for, check_ybe, r_matrix, r_matrix_from,
    r_matrix_inverse, AdjointConditions,
};
pub use algebra::{check_hopf_axioms, Axiom, AxiomCheck, AxiomReport, HopfAlgebra, HopfData};
