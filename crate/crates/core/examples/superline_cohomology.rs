//! `H¹` and `H²` of the superline, with the three 2-cocycles as tables.

use hopf_adjoint::cohomology::table::{bilinear_table, render_table};
use hopf_adjoint::cohomology::{cohomology, superline_cocycles, Cochain, CohomologyOptions};
use hopf_adjoint::constructions::superline;
use hopf_adjoint::FieldSpec;

fn main() -> hopf_adjoint::Result<()> {
    let h = superline(FieldSpec::Rationals)?;
    for n in 1..=3 {
        let r = cohomology(&h, n, CohomologyOptions::default())?;
        println!("H{n}: dim C {} Z {} B {} H {}", r.dim_c, r.dim_z, r.dim_b, r.dim_h);
    }
    for (name, c) in ["α", "β", "γ"].iter().zip(superline_cocycles(&h)) {
        if let Cochain::Deg2(m) = &c {
            println!("\n{name}:");
            print!("{}", render_table(&h, &bilinear_table(&h, m)));
        }
    }
    Ok(())
}
