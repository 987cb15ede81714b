//! Hopf-axiom check and the adjoint-action table of the superline.

use hopf_adjoint::cohomology::table::{bilinear_table, render_table};
use hopf_adjoint::constructions::superline;
use hopf_adjoint::hopf::{check_adjoint_conditions, check_hopf_axioms};
use hopf_adjoint::FieldSpec;

fn main() -> hopf_adjoint::Result<()> {
    let h = superline(FieldSpec::Rationals)?;
    let report = check_hopf_axioms(h.data())?;
    for c in &report.checks {
        println!("{:<28} {}", c.axiom.name(), c.holds);
    }
    let cond = check_adjoint_conditions(&h);
    println!("ad module map: {}, braided: {}\n", cond.module, cond.braided);
    println!("ad(row ⊗ column):");
    print!("{}", render_table(&h, &bilinear_table(&h, h.ad())));
    Ok(())
}
