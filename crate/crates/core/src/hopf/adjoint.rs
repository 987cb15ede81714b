//! The adjoint map, the R-matrix it induces, and the Yang–Baxter check.

use super::algebra::HopfAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{compose_chain, id, Chain, LinearMap};
use crate::stage;

pub(crate) fn adjoint_from_structure(h: &HopfAlgebra) -> LinearMap {
    let tau = h.tau();
    compose_chain(
        h.field(),
        h.dim(),
        vec![
            stage![h.mu()],
            stage![h.mu(), id(1)],
            stage![h.antipode(), id(2)],
            stage![&tau, id(1)],
            stage![id(1), h.delta()],
        ],
    )
    .expect("structure maps are well-shaped")
}

/// `ad(x ⊗ y) = S(y₁) x y₂`.
pub fn adjoint_map(h: &HopfAlgebra) -> LinearMap {
    h.ad().clone()
}

/// `(1 ⊗ a)(τ ⊗ 1)(1 ⊗ Δ)` for an arbitrary `a: H⊗H → H`.
pub fn r_matrix_from(h: &HopfAlgebra, a: &LinearMap) -> Result<LinearMap> {
    let tau = h.tau();
    compose_chain(h.field(), h.dim(), vec![stage![id(1), a], stage![&tau, id(1)], stage![id(1), h.delta()]])
}

/// `R_ad = (1 ⊗ ad)(τ ⊗ 1)(1 ⊗ Δ)`.
pub fn r_matrix(h: &HopfAlgebra) -> LinearMap {
    r_matrix_from(h, h.ad()).expect("ad is 2→1")
}

/// `R⁻¹(b ⊗ a) = b₃ a S⁻¹(b₂) ⊗ b₁`.
pub fn r_matrix_inverse(h: &HopfAlgebra) -> Result<LinearMap> {
    let s_inv = h.antipode().inverse().map_err(|_| Error::AntipodeNotInvertible)?;
    let (f, d) = (h.field(), h.dim());
    // b₁ ⊗ S⁻¹b₂ ⊗ b₃ ⊗ a  ↦  b₃ ⊗ a ⊗ S⁻¹b₂ ⊗ b₁
    let shuffle = LinearMap::permutation(f, d, &[2, 3, 1, 0]);
    compose_chain(
        f,
        d,
        vec![
            stage![h.mu(), id(1)],
            stage![h.mu(), id(2)],
            stage![&shuffle],
            stage![id(1), &s_inv, id(2)],
            stage![h.delta(), id(2)],
            stage![h.delta(), id(1)],
        ],
    )
}

/// `(R⊗1)(1⊗R)(R⊗1) = (1⊗R)(R⊗1)(1⊗R)` on `H^⊗3`.
pub fn check_ybe(r: &LinearMap) -> Result<bool> {
    if r.in_arity() != 2 || r.out_arity() != 2 {
        return Err(Error::ArityMismatch(format!(
            "YBE needs a map H⊗H → H⊗H, got arity {}→{}",
            r.in_arity(),
            r.out_arity()
        )));
    }
    let (f, d) = (r.field(), r.base_dim());
    let lhs = Chain::new(f, d, vec![stage![r, id(1)], stage![id(1), r], stage![r, id(1)]])?;
    let rhs = Chain::new(f, d, vec![stage![id(1), r], stage![r, id(1)], stage![id(1), r]])?;
    Ok(lhs.to_map() == rhs.to_map())
}

/// Outcome of the two adjoint conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjointConditions {
    /// `ad(ad ⊗ 1) = ad(1 ⊗ μ)`
    pub module: bool,
    /// `(ad ⊗ μ)(1 ⊗ τ ⊗ 1)(Δ ⊗ Δ) = (1 ⊗ μ)(τ ⊗ 1)(1 ⊗ Δ)(1 ⊗ ad)(τ ⊗ 1)(1 ⊗ Δ)`
    pub braided: bool,
}

pub fn check_adjoint_conditions(h: &HopfAlgebra) -> AdjointConditions {
    check_adjoint_conditions_for(h, h.ad()).expect("ad is 2→1")
}

/// The same two identities with `ad` replaced by an arbitrary `a: H⊗H → H`.
pub fn check_adjoint_conditions_for(h: &HopfAlgebra, a: &LinearMap) -> Result<AdjointConditions> {
    let (f, d) = (h.field(), h.dim());
    let (mu, delta, tau) = (h.mu(), h.delta(), h.tau());
    let first_l = compose_chain(f, d, vec![stage![a], stage![a, id(1)]])?;
    let first_r = compose_chain(f, d, vec![stage![a], stage![id(1), mu]])?;
    let second_l = compose_chain(f, d, vec![stage![a, mu], stage![id(1), &tau, id(1)], stage![delta, delta]])?;
    let second_r = compose_chain(
        f,
        d,
        vec![
            stage![id(1), mu],
            stage![&tau, id(1)],
            stage![id(1), delta],
            stage![id(1), a],
            stage![&tau, id(1)],
            stage![id(1), delta],
        ],
    )?;
    Ok(AdjointConditions { module: first_l == first_r, braided: second_l == second_r })
}
