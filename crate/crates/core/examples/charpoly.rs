//! Spectrum of `R_ad`: determinant, characteristic and minimal polynomial.

use hopf_adjoint::constructions::builtin_algebra;
use hopf_adjoint::hopf::r_matrix;
use hopf_adjoint::linalg::{char_poly, det, min_poly};
use hopf_adjoint::FieldSpec;

fn main() -> hopf_adjoint::Result<()> {
    for uri in ["builtin:superline", "builtin:kg:c3", "builtin:kg:s3", "builtin:fun:c3"] {
        let r = r_matrix(&builtin_algebra(uri, FieldSpec::Rationals)?);
        println!("{uri}");
        println!("  det     {}", det(&r)?);
        println!("  charpoly {}", char_poly(&r)?.factored_string());
        println!("  minpoly  {}", min_poly(&r)?.factored_string());
    }
    Ok(())
}
