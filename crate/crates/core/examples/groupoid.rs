//! Cocycles of the conjugate groupoid of S₃ in degrees 1–3 over several
//! coefficient fields.

use hopf_adjoint::groupoid::{boundary_matrix, conjugate_groupoid, groupoid_cocycle_space};
use hopf_adjoint::groups::FiniteGroup;
use hopf_adjoint::FieldSpec;

fn main() -> hopf_adjoint::Result<()> {
    let gd = conjugate_groupoid(&FiniteGroup::symmetric(3)?);
    println!("{} objects, {} morphisms, {} composable pairs", gd.objects().len(), gd.morphisms().len(), gd.strings(2).len());
    let fields: Vec<FieldSpec> = ["Q", "Fp:2", "Fp:3", "Fp:5", "Fp:7"].iter().map(|s| s.parse().unwrap()).collect();
    for n in 1..=3 {
        let dims = fields.iter().map(|&f| groupoid_cocycle_space(&gd, n, f).map(|z| z.dim())).collect::<Result<Vec<_>, _>>()?;
        println!("degree {n}: {dims:?}  (Q, F2, F3, F5, F7)");
    }
    let b1 = boundary_matrix(&gd, 1, FieldSpec::Rationals)?;
    let b2 = boundary_matrix(&gd, 2, FieldSpec::Rationals)?;
    println!("∂₁∂₂ = 0: {}", b1.compose(&b2).is_zero());
    Ok(())
}
