//! The adjoint cochain complex `C¹ → C² → C³ → C⁴` and its cohomology.

pub mod cochain;
pub mod complex;
pub mod group;
pub mod report;
pub mod table;

pub use cochain::{block_shapes, space_dim, Cochain};
pub use complex::{c1_basis, d1, d2, d3, AdjointComplex, Mutation};
pub use group::{
    check_group_3cocycle, diagonal_2cocycles, group_3cocycles, group_3coboundary, group_3cocycle_failure, lift_diagonal,
    require_diagonal_cocycle, GroupFunction,
};
pub use report::{check_size, cohomology, two_cochain, CohomologyOptions, CohomologyReport};

use crate::hopf::HopfAlgebra;
use crate::linalg::SparseVec;

/// The three 2-cocycles spanning `H²` of the superline, as tabulated:
/// α: `φ(g⊗x) = φ(g⊗gx) = 1`, `φ(x⊗g) = −1`;
/// β: `φ(gx⊗x) = 1`, `φ(gx⊗gx) = −1`;
/// γ: `φ(gx⊗g) = g`, `φ(gx⊗x) = x`, `φ(gx⊗gx) = x`.
///
/// The algebra must be [`crate::constructions::superline`].
pub fn superline_cocycles(h: &HopfAlgebra) -> [Cochain; 3] {
    let f = h.field();
    let (one, g, x, gx) = (0, 1, 2, 3);
    let c = |i: usize, k: i64| SparseVec::from_pairs([(i, f.from_i64(k))]);
    let alpha = two_cochain(h, &[((g, x), c(one, 1)), ((g, gx), c(one, 1)), ((x, g), c(one, -1))]);
    let beta = two_cochain(h, &[((gx, x), c(one, 1)), ((gx, gx), c(one, -1))]);
    let gamma = two_cochain(h, &[((gx, g), c(g, 1)), ((gx, x), c(x, 1)), ((gx, gx), c(x, 1))]);
    [alpha, beta, gamma]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{function_algebra, group_algebra, superline};
    use crate::groups::FiniteGroup;
    use crate::linalg::{LinearMap, SubspaceBasis};
    use crate::scalar::FieldSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn superline_c1_and_h1() {
        let h = superline(q()).unwrap();
        let c1 = c1_basis(&h);
        assert_eq!(c1.dim(), 1);
        // f(x) = x, f(gx) = gx, f(1) = f(g) = 0
        let f = LinearMap::from_columns(
            q(),
            4,
            1,
            1,
            vec![SparseVec::new(), SparseVec::new(), SparseVec::unit(2, q()), SparseVec::unit(3, q())],
        );
        assert!(c1.contains(&f.to_hom_vector()));
        let df = d1(&h, &Cochain::Deg1(f)).unwrap();
        assert!(df.is_zero());
        let r = cohomology(&h, 1, CohomologyOptions::default()).unwrap();
        assert_eq!((r.dim_c, r.dim_z, r.dim_b, r.dim_h), (1, 1, 0, 1));
    }

    #[test]
    fn d1_rejects_non_derivations() {
        let h = superline(q()).unwrap();
        let idn = LinearMap::identity(q(), 4, 1);
        assert!(matches!(d1(&h, &Cochain::Deg1(idn)), Err(crate::Error::NotInC1)));
    }

    #[test]
    fn superline_h2_is_spanned_by_the_table() {
        for f in [q(), FieldSpec::PrimeField(5)] {
            let h = superline(f).unwrap();
            let r = cohomology(&h, 2, CohomologyOptions { basis: true, ..Default::default() }).unwrap();
            assert_eq!((r.dim_z, r.dim_b, r.dim_h), (3, 0, 3));
            let table = SubspaceBasis::span(f, 64, superline_cocycles(&h).iter().map(Cochain::to_vector));
            assert_eq!(r.cocycles.unwrap(), table);
        }
    }

    #[test]
    fn group_algebra_c1_vanishes() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(c1_basis(&group_algebra(&s3, q())).dim(), 0);
        assert_eq!(c1_basis(&function_algebra(&s3, q())).dim(), 0);
    }

    #[test]
    fn diagonal_system_dimensions() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(diagonal_2cocycles(&s3, q()).dim(), 3);
        // the same system over 𝔽₃ picks up Hom(ℤ₃, 𝔽₃) on the 3-cycle class
        assert_eq!(diagonal_2cocycles(&s3, FieldSpec::PrimeField(3)).dim(), 4);
        assert_eq!(diagonal_2cocycles(&FiniteGroup::cyclic(1).unwrap(), q()).dim(), 0);
    }

    #[test]
    fn general_kernel_matches_diagonal_solver() {
        for (g, f) in [
            (FiniteGroup::cyclic(2).unwrap(), q()),
            (FiniteGroup::cyclic(3).unwrap(), FieldSpec::PrimeField(5)),
            (FiniteGroup::cyclic(4).unwrap(), q()),
            (FiniteGroup::symmetric(3).unwrap(), FieldSpec::PrimeField(3)),
        ] {
            let h = group_algebra(&g, f);
            let r = cohomology(&h, 2, CohomologyOptions::default()).unwrap();
            let diag = diagonal_2cocycles(&g, f);
            assert_eq!(r.dim_z, diag.dim());
            assert_eq!(r.dim_b, 0);
            for v in diag.vectors() {
                let phi = lift_diagonal(&g, &GroupFunction::from_vector(f, g.order(), 2, v));
                assert!(d2(&h, &phi).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn function_algebra_h1_h2_vanish() {
        let h = function_algebra(&FiniteGroup::cyclic(3).unwrap(), q());
        for n in 1..=2 {
            assert_eq!(cohomology(&h, n, CohomologyOptions::default()).unwrap().dim_h, 0);
        }
    }

    #[test]
    fn d3_d2_vanishes_on_random_cochains() {
        let f = FieldSpec::PrimeField(7);
        let h = group_algebra(&FiniteGroup::cyclic(3).unwrap(), f);
        let cx = AdjointComplex::new(&h);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let v = SparseVec::from_pairs((0..27).map(|i| (i, f.from_i64(rng.gen_range(0..7)))));
            let phi = Cochain::from_vector(f, 3, 2, &v).unwrap();
            assert!(cx.d3(&cx.d2(&phi).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn omitting_the_r_term_breaks_d3_d2() {
        let h = superline(q()).unwrap();
        let cx = AdjointComplex::with_mutation(&h, Mutation::OmitRTerm);
        let broken = (0..64).any(|j| {
            let phi = Cochain::basis_element(q(), 4, 2, j).unwrap();
            !cx.d3(&cx.d2(&phi).unwrap()).unwrap().is_zero()
        });
        assert!(broken);
    }

    #[test]
    fn group_3cocycle_identity() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(check_group_3cocycle(&s3, &GroupFunction::constant(q().one(), 6, 3)));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = GroupFunction::from_fn(6, 2, |_| q().from_i64(rng.gen_range(-5..5)));
        assert!(check_group_3cocycle(&s3, &group_3coboundary(&s3, &a)));
        let mut spike = GroupFunction::zero(q(), 6, 3);
        spike.values[100] = q().one();
        assert!(!check_group_3cocycle(&s3, &spike));
        // a diagonal 2-cocycle has vanishing coboundary
        let diag = diagonal_2cocycles(&s3, q());
        let a = GroupFunction::from_vector(q(), 6, 2, &diag.vectors()[0]);
        assert!(group_3coboundary(&s3, &a).values.iter().all(|v| v.is_zero()));
        let z3 = group_3cocycles(&s3, q());
        assert!(z3.contains(&group_3coboundary(&s3, &GroupFunction::from_fn(6, 2, |_| q().from_i64(rng.gen_range(-5..5)))).to_vector()));
        for v in z3.vectors() {
            assert!(check_group_3cocycle(&s3, &GroupFunction::from_vector(q(), 6, 3, v)));
        }
    }
}
