//! `R_ad` solves the Yang–Baxter equation and is invertible, for every
//! small built-in.

use hopf_adjoint::acceptance::small_builtins;
use hopf_adjoint::constructions::builtin_algebra;
use hopf_adjoint::hopf::{check_ybe, r_matrix, r_matrix_inverse};
use hopf_adjoint::linalg::LinearMap;
use hopf_adjoint::FieldSpec;

fn main() -> hopf_adjoint::Result<()> {
    for field in [FieldSpec::Rationals, FieldSpec::PrimeField(3)] {
        for uri in small_builtins() {
            let h = match builtin_algebra(&uri, field) {
                Ok(h) => h,
                Err(e) => {
                    println!("{uri:<20} {field}: {e}");
                    continue;
                }
            };
            let r = r_matrix(&h);
            let inv = r_matrix_inverse(&h)?.compose(&r)? == LinearMap::identity(field, h.dim(), 2);
            println!("{uri:<20} {field}: ybe {} inverse {inv}", check_ybe(&r)?);
        }
    }
    Ok(())
}
