//! Diagonal 2-cocycles `φ(x⊗y) = a(x,y)·(x◁y)` of group algebras, compared
//! against the full kernel of `D₂`.

use hopf_adjoint::cohomology::{cohomology, diagonal_2cocycles, CohomologyOptions};
use hopf_adjoint::constructions::group_algebra;
use hopf_adjoint::groups::FiniteGroup;
use hopf_adjoint::FieldSpec;

fn main() -> hopf_adjoint::Result<()> {
    let groups = [("c2", FiniteGroup::cyclic(2)?), ("c3", FiniteGroup::cyclic(3)?), ("s3", FiniteGroup::symmetric(3)?)];
    for (name, g) in &groups {
        for f in [FieldSpec::Rationals, FieldSpec::PrimeField(3), FieldSpec::PrimeField(5)] {
            let diag = diagonal_2cocycles(g, f).dim();
            let z2 = cohomology(&group_algebra(g, f), 2, CohomologyOptions::default())?;
            println!("k{name} over {f}: diagonal {diag}, dim Z² {}, dim H² {}", z2.dim_z, z2.dim_h);
        }
    }
    Ok(())
}
