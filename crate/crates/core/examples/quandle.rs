//! Rack cocycles of the conjugation quandle of S₃: ψ from diagonal
//! 2-cocycles and θ from group 3-cocycles.

use hopf_adjoint::cohomology::{diagonal_2cocycles, group_3cocycles, GroupFunction};
use hopf_adjoint::groupoid::{check_rack_2cocycle, check_rack_3cocycle, rack_2cocycle_from, rack_3cocycle_from};
use hopf_adjoint::groups::FiniteGroup;
use hopf_adjoint::FieldSpec;

fn main() -> hopf_adjoint::Result<()> {
    let q = FieldSpec::Rationals;
    let s3 = FiniteGroup::symmetric(3)?;
    for (i, v) in diagonal_2cocycles(&s3, q).vectors().iter().enumerate() {
        let psi = rack_2cocycle_from(&s3, &GroupFunction::from_vector(q, 6, 2, v))?;
        let support = psi.values.iter().filter(|x| !x.is_zero()).count();
        println!("ψ{i}: {support} nonzero values, rack 2-cocycle {}", check_rack_2cocycle(&s3, &psi));
    }
    let z3 = group_3cocycles(&s3, q);
    let ok = z3
        .vectors()
        .iter()
        .map(|v| rack_3cocycle_from(&s3, &GroupFunction::from_vector(q, 6, 3, v)).map(|th| check_rack_3cocycle(&s3, &th)))
        .collect::<hopf_adjoint::Result<Vec<bool>>>()?;
    println!("group 3-cocycles: dim {}, θ passes the rack 3-cocycle check for {}/{}", z3.dim(), ok.iter().filter(|&&b| b).count(), ok.len());
    Ok(())
}
