use proptest::prelude::*;

use hopf_adjoint::acceptance::mutate;
use hopf_adjoint::cohomology::{
    cohomology, d2, diagonal_2cocycles, superline_cocycles, AdjointComplex, Cochain, CohomologyOptions,
};
use hopf_adjoint::constructions::{builtin_algebra, group_algebra, superline};
use hopf_adjoint::deformation::{check_deformed_ybe, residuals};
use hopf_adjoint::groupoid::{boundary_matrix, conjugate_groupoid, groupoid_cocycle_space};
use hopf_adjoint::groups::FiniteGroup;
use hopf_adjoint::hopf::check_hopf_axioms;
use hopf_adjoint::linalg::{char_poly, image_basis, kernel_basis, min_poly, rank, LinearMap, SparseVec};
use hopf_adjoint::{FieldSpec, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rationals;

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(Q), Just(FieldSpec::PrimeField(3)), Just(FieldSpec::PrimeField(5)), Just(FieldSpec::PrimeField(7))]
}

fn map(f: FieldSpec, d: usize, a: usize, b: usize) -> impl Strategy<Value = LinearMap> {
    let n = d.pow(a as u32) * d.pow(b as u32);
    proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], n).prop_map(move |xs| {
        let cols = d.pow(a as u32);
        LinearMap::from_fn(f, d, a, b, |j| SparseVec::from_pairs((0..xs.len() / cols).map(|i| (i, f.from_i64(xs[i * cols + j])))))
    })
}

fn square(max_d: usize) -> impl Strategy<Value = LinearMap> {
    (field(), 1..=max_d).prop_flat_map(|(f, d)| map(f, d, 1, 1))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rank_nullity(m in (field(), 1usize..=3, 1usize..=2, 0usize..=2).prop_flat_map(|(f, d, a, b)| map(f, d, a, b))) {
        prop_assert_eq!(rank(&m) + kernel_basis(&m).dim(), m.cols());
        prop_assert_eq!(image_basis(&m).dim(), rank(&m));
    }

    #[test]
    fn min_poly_divides_char_poly_and_annihilates(m in square(6)) {
        let cp = char_poly(&m).unwrap();
        let mp = min_poly(&m).unwrap();
        prop_assert_eq!(cp.degree(), m.rows());
        prop_assert!(cp.div_rem(&mp).1.is_zero());
        // p(M) = 0 by Horner
        let idn = LinearMap::identity(m.field(), m.base_dim(), 1);
        let mut acc = LinearMap::zero(m.field(), m.base_dim(), 1, 1);
        for c in mp.coeffs().iter().rev() {
            acc = m.compose(&acc).unwrap().combine(c, &idn).unwrap();
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn tensor_is_functorial((a, b, c, d) in field().prop_flat_map(|f| (map(f, 2, 1, 1), map(f, 2, 1, 2), map(f, 2, 1, 1), map(f, 2, 2, 1)))) {
        // (a⊗b)(c⊗d) = ac ⊗ bd
        let lhs = a.tensor(&b).unwrap().compose(&c.tensor(&d).unwrap()).unwrap();
        let rhs = a.compose(&c).unwrap().tensor(&b.compose(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d2_is_linear_and_d3_kills_its_image(seed in any::<u64>(), p in prop_oneof![Just(3u64), Just(5), Just(7)]) {
        let f = FieldSpec::PrimeField(p);
        let h = group_algebra(&FiniteGroup::cyclic(3).unwrap(), f);
        let cx = AdjointComplex::new(&h);
        let v = random_vector(f, 27, seed);
        let w = random_vector(f, 27, seed.wrapping_add(1));
        let c = f.from_i64(2);
        let sum = cx.apply(2, &v.add_scaled(&c, &w)).unwrap();
        prop_assert_eq!(sum, cx.apply(2, &v).unwrap().add_scaled(&c, &cx.apply(2, &w).unwrap()));
        prop_assert!(cx.apply(3, &cx.apply(2, &v).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn deformed_ybe_holds_on_the_cocycle_span(cs in proptest::collection::vec(-20i64..=20, 3)) {
        let h = superline(Q).unwrap();
        let v = superline_cocycles(&h)
            .iter()
            .zip(&cs)
            .fold(SparseVec::new(), |acc, (z, &c)| acc.add_scaled(&Q.from_i64(c), &z.to_vector()));
        prop_assert!(check_deformed_ybe(&h, &Cochain::from_vector(Q, 4, 2, &v).unwrap()).unwrap());
    }

    #[test]
    fn residuals_match_d2(seed in any::<u64>()) {
        let h = superline(FieldSpec::PrimeField(5)).unwrap();
        let phi = Cochain::from_vector(h.field(), 4, 2, &random_vector(h.field(), 64, seed)).unwrap();
        let res = residuals(&h, &phi).unwrap();
        let d = d2(&h, &phi).unwrap();
        prop_assert_eq!(Cochain::Deg3 { xi1: res.xi1.clone(), xi2: res.xi2.clone() }.to_vector(), d.to_vector());
        prop_assert_eq!(res.is_zero(), check_deformed_ybe(&h, &phi).unwrap() && d.is_zero());
    }

    #[test]
    fn scalar_field_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, f in field()) {
        let (x, y, z) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        if !y.is_zero() {
            prop_assert_eq!(&x.div(&y).unwrap() * &y, x.clone());
        }
        prop_assert_eq!(&x - &x, f.zero());
        let _: &Scalar = &x;
    }
}

fn random_vector(f: FieldSpec, n: usize, seed: u64) -> SparseVec {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SparseVec::from_pairs((0..n).map(|i| (i, f.from_i64(rng.gen_range(-4..=4)))))
}

#[test]
fn every_single_entry_mutation_is_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for h in [group_algebra(&FiniteGroup::cyclic(2).unwrap(), Q), superline(Q).unwrap()] {
        assert!(check_hopf_axioms(h.data()).unwrap().all_hold());
        for _ in 0..100 {
            let (data, what) = mutate(h.data(), &mut rng);
            let report = check_hopf_axioms(&data).unwrap();
            let fail = report.first_failure().unwrap_or_else(|| panic!("{what} accepted"));
            assert!(fail.witness.is_some(), "{what}");
        }
    }
}

#[test]
fn boundary_squares_to_zero() {
    for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)] {
        let gd = conjugate_groupoid(&g.unwrap());
        for n in 1..=2 {
            let lower = boundary_matrix(&gd, n, Q).unwrap();
            let upper = boundary_matrix(&gd, n + 1, Q).unwrap();
            assert!(lower.compose(&upper).is_zero());
        }
    }
}

#[test]
fn diagonal_system_equals_groupoid_degree_2() {
    for g in [FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::symmetric(3), FiniteGroup::dihedral(4)] {
        let g = g.unwrap();
        let gd = conjugate_groupoid(&g);
        for f in [Q, FieldSpec::PrimeField(2), FieldSpec::PrimeField(3), FieldSpec::PrimeField(5)] {
            assert_eq!(diagonal_2cocycles(&g, f), groupoid_cocycle_space(&gd, 2, f).unwrap());
        }
    }
}

#[test]
fn group_algebra_cocycles_are_diagonal() {
    // C¹ = 0 and B² = 0, so H² = Z²; every cocycle is diagonal
    for (g, f) in [(FiniteGroup::dihedral(3).unwrap(), FieldSpec::PrimeField(5)), (FiniteGroup::cyclic(5).unwrap(), FieldSpec::PrimeField(5))] {
        let h = group_algebra(&g, f);
        let r = cohomology(&h, 2, CohomologyOptions::default()).unwrap();
        assert_eq!((r.dim_z, r.dim_b), (diagonal_2cocycles(&g, f).dim(), 0));
    }
}

#[test]
fn r_matrix_is_the_flip_for_commutative_cocommutative() {
    // ad is trivial there (ad(a⊗b) = ε(b)a), so R_ad = τ
    for n in 2..=4 {
        let a = builtin_algebra(&format!("builtin:kg:c{n}"), Q).unwrap();
        let b = builtin_algebra(&format!("builtin:fun:c{n}"), Q).unwrap();
        let tau = a.tau();
        assert_eq!(hopf_adjoint::hopf::r_matrix(&a), tau);
        assert_eq!(hopf_adjoint::hopf::r_matrix(&b), b.tau());
    }
}
