//! First-order deformations `ad + tφ`: the deformed YBE along 2-cocycles,
//! and the obstruction residuals `(ξ₁, ξ₂)` along arbitrary 2-cochains.

use hopf_adjoint::cohomology::{d2, superline_cocycles, Cochain};
use hopf_adjoint::constructions::superline;
use hopf_adjoint::deformation::{check_deformed_ybe, deformed_r_matrix, residuals};
use hopf_adjoint::FieldSpec;

fn main() -> hopf_adjoint::Result<()> {
    let q = FieldSpec::Rationals;
    let h = superline(q)?;
    for (name, phi) in ["α", "β", "γ"].iter().zip(superline_cocycles(&h)) {
        let r = deformed_r_matrix(&h, &phi)?;
        println!("{name}: deformed YBE {}, perturbation of R has {} entries", check_deformed_ybe(&h, &phi)?, r.perturbation.nnz());
    }
    // a 2-cochain that is not a cocycle: φ(g⊗g) = 1 (output 1, input g⊗g = 5)
    let phi = Cochain::from_vector(q, 4, 2, &hopf_adjoint::linalg::SparseVec::unit(5, q))?;
    let res = residuals(&h, &phi)?;
    println!("\nnon-cocycle: residual entries {:?}, YBE {}", res.norms(), check_deformed_ybe(&h, &phi)?);
    println!("residuals equal d2(φ): {}", Cochain::Deg3 { xi1: res.xi1.clone(), xi2: res.xi2.clone() }.to_vector() == d2(&h, &phi)?.to_vector());
    Ok(())
}
