//! Built-in Hopf algebras: `kG`, `k^G` and the bosonized superline.

use crate::error::{Error, Result};
use crate::groups::{group_from_spec, FiniteGroup, GroupSpec};
use crate::hopf::{HopfAlgebra, HopfData};
use crate::linalg::{LinearMap, SparseVec};
use crate::scalar::FieldSpec;

fn unit_vec(i: usize, f: FieldSpec) -> SparseVec {
    SparseVec::unit(i, f)
}

/// Group algebra: group-like basis, `S(x) = x⁻¹`.
pub fn group_algebra(g: &FiniteGroup, field: FieldSpec) -> HopfAlgebra {
    let n = g.order();
    let data = HopfData {
        field,
        labels: g.labels().to_vec(),
        mu: LinearMap::from_fn(field, n, 2, 1, |j| unit_vec(g.mul(j / n, j % n), field)),
        delta: LinearMap::from_fn(field, n, 1, 2, |x| unit_vec(x * n + x, field)),
        unit: LinearMap::from_columns(field, n, 0, 1, vec![unit_vec(g.identity(), field)]),
        counit: LinearMap::from_fn(field, n, 1, 0, |_| unit_vec(0, field)),
        antipode: LinearMap::from_fn(field, n, 1, 1, |x| unit_vec(g.inv(x), field)),
    };
    HopfAlgebra::new(data).expect("group algebras are Hopf algebras")
}

/// Functions on `G` in the basis `δ_g`, labelled `d_<g>`.
pub fn function_algebra(g: &FiniteGroup, field: FieldSpec) -> HopfAlgebra {
    let n = g.order();
    let data = HopfData {
        field,
        labels: g.labels().iter().map(|l| format!("d_{l}")).collect(),
        mu: LinearMap::from_fn(field, n, 2, 1, |j| {
            let (a, b) = (j / n, j % n);
            if a == b {
                unit_vec(a, field)
            } else {
                SparseVec::new()
            }
        }),
        delta: LinearMap::from_fn(field, n, 1, 2, |h| {
            // Σ_{uv=h} δ_u ⊗ δ_v
            SparseVec::from_pairs((0..n).map(|u| (u * n + g.mul(g.inv(u), h), field.one())))
        }),
        unit: LinearMap::from_columns(field, n, 0, 1, vec![SparseVec::from_pairs((0..n).map(|i| (i, field.one())))]),
        counit: LinearMap::from_fn(field, n, 1, 0, |x| {
            if x == g.identity() {
                unit_vec(0, field)
            } else {
                SparseVec::new()
            }
        }),
        antipode: LinearMap::from_fn(field, n, 1, 1, |x| unit_vec(g.inv(x), field)),
    };
    HopfAlgebra::new(data).expect("function algebras are Hopf algebras")
}

pub const SUPERLINE_LABELS: [&str; 4] = ["1", "g", "x", "gx"];

/// Basis `g^a x^b` at index `a + 2b`.
fn gx(i: usize) -> (usize, usize) {
    (i & 1, i >> 1)
}

/// The 4-dimensional Hopf algebra `⟨g, x | g² = 1, x² = 0, xg = −gx⟩` with
/// `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
pub fn superline(field: FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::CharTwoUnsupported);
    }
    let f = field;
    let (one, g, x, gxi) = (0, 1, 2, 3);
    let mu = LinearMap::from_fn(f, 4, 2, 1, |j| {
        let ((a1, b1), (a2, b2)) = (gx(j / 4), gx(j % 4));
        if b1 + b2 > 1 {
            return SparseVec::new();
        }
        let sign = if b1 * a2 == 1 { -1 } else { 1 };
        SparseVec::from_pairs([(((a1 + a2) % 2) + 2 * (b1 + b2), f.from_i64(sign))])
    });
    let pair = |a: usize, b: usize| a * 4 + b;
    let delta = LinearMap::from_columns(
        f,
        4,
        1,
        2,
        vec![
            SparseVec::from_pairs([(pair(one, one), f.one())]),
            SparseVec::from_pairs([(pair(g, g), f.one())]),
            SparseVec::from_pairs([(pair(x, one), f.one()), (pair(g, x), f.one())]),
            SparseVec::from_pairs([(pair(gxi, g), f.one()), (pair(one, gxi), f.one())]),
        ],
    );
    let antipode = LinearMap::from_columns(
        f,
        4,
        1,
        1,
        vec![
            unit_vec(one, f),
            unit_vec(g, f),
            SparseVec::from_pairs([(gxi, f.from_i64(-1))]),
            unit_vec(x, f),
        ],
    );
    let counit = LinearMap::from_fn(f, 4, 1, 0, |i| if gx(i).1 == 0 { unit_vec(0, f) } else { SparseVec::new() });
    let data = HopfData {
        field: f,
        labels: SUPERLINE_LABELS.iter().map(|s| s.to_string()).collect(),
        mu,
        delta,
        unit: LinearMap::from_columns(f, 4, 0, 1, vec![unit_vec(one, f)]),
        counit,
        antipode,
    };
    HopfAlgebra::new(data)
}

/// Resolves `builtin:kg:<group>`, `builtin:fun:<group>`, `builtin:superline`.
pub fn builtin_algebra(uri: &str, field: FieldSpec) -> Result<HopfAlgebra> {
    let rest = uri.strip_prefix("builtin:").ok_or_else(|| Error::Parse(format!("not a builtin URI: {uri}")))?;
    if rest == "superline" {
        return superline(field);
    }
    let (kind, group) = rest.split_once(':').ok_or_else(|| Error::Parse(format!("unknown builtin {uri}")))?;
    let spec: GroupSpec = group.parse()?;
    if let GroupSpec::File(_) = spec {
        return Err(Error::Parse(format!("unknown group {group:?} in {uri}")));
    }
    let g = group_from_spec(&spec)?;
    match kind {
        "kg" => Ok(group_algebra(&g, field)),
        "fun" => Ok(function_algebra(&g, field)),
        _ => Err(Error::Parse(format!("unknown builtin family {kind:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{adjoint_map, check_adjoint_conditions, check_ybe, r_matrix, r_matrix_inverse};
    use crate::linalg::{compose_chain, det, Accumulator};
    use crate::stage;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn named(h: &HopfAlgebra, labels: &[&str]) -> usize {
        labels.iter().fold(0, |acc, l| acc * h.dim() + h.labels().iter().position(|x| x == l).unwrap())
    }

    #[test]
    fn superline_ad_table() {
        let h = superline(q()).unwrap();
        let ad = adjoint_map(&h);
        // rows: first argument; columns: second argument (x ⊗ y ↦ Ad_y(x))
        let table: [[(i64, &str); 4]; 4] = [
            [(1, "1"), (1, "1"), (0, "1"), (0, "1")],
            [(1, "g"), (1, "g"), (2, "x"), (2, "x")],
            [(1, "x"), (-1, "x"), (0, "1"), (0, "1")],
            [(1, "gx"), (-1, "gx"), (0, "1"), (0, "1")],
        ];
        for (a, row) in table.iter().enumerate() {
            for (b, &(c, lbl)) in row.iter().enumerate() {
                let expect = if c == 0 {
                    SparseVec::new()
                } else {
                    SparseVec::from_pairs([(named(&h, &[lbl]), q().from_i64(c))])
                };
                assert_eq!(ad.column(a * 4 + b), expect, "ad({} ⊗ {})", h.labels()[a], h.labels()[b]);
            }
        }
    }

    #[test]
    fn superline_r_matrix_polys() {
        let h = superline(q()).unwrap();
        let r = r_matrix(&h);
        assert!(det(&r).unwrap().is_one());
        assert_eq!(crate::linalg::char_poly(&r).unwrap().factored_string(), "(λ²+1)²(λ+1)⁴(λ−1)⁸");
        assert_eq!(crate::linalg::min_poly(&r).unwrap().factored_string(), "(λ²+1)(λ+1)(λ−1)²");
    }

    #[test]
    fn group_algebra_ad_is_conjugation() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let h = group_algebra(&g, q());
        let ad = adjoint_map(&h);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(ad.column(x * 6 + y), SparseVec::unit(g.conj(x, y).unwrap(), q()));
            }
        }
    }

    #[test]
    fn function_algebra_ad_and_delta() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let h = function_algebra(&z2, q());
        // Δ(δ_e) = δ_e⊗δ_e + δ_g⊗δ_g
        let de = h.delta().column(0);
        assert_eq!(de, SparseVec::from_pairs([(0, q().one()), (3, q().one())]));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let h = function_algebra(&s3, q());
        let ad = adjoint_map(&h);
        for a in 0..6 {
            for b in 0..6 {
                let expect = if b == s3.identity() { SparseVec::unit(a, q()) } else { SparseVec::new() };
                assert_eq!(ad.column(a * 6 + b), expect);
            }
        }
    }

    #[test]
    fn z3_antipode_over_f5() {
        let f = FieldSpec::PrimeField(5);
        let h = group_algebra(&FiniteGroup::cyclic(3).unwrap(), f);
        assert_eq!(*h.antipode(), LinearMap::from_fn(f, 3, 1, 1, |x| SparseVec::unit([0, 2, 1][x], f)));
    }

    #[test]
    fn builtins_satisfy_everything() {
        for uri in ["builtin:kg:c2", "builtin:kg:s3", "builtin:fun:c3", "builtin:superline", "builtin:kg:d4"] {
            let h = builtin_algebra(uri, q()).unwrap();
            let c = check_adjoint_conditions(&h);
            assert!(c.module && c.braided, "{uri}");
            let r = r_matrix(&h);
            assert!(check_ybe(&r).unwrap(), "{uri}");
            let ri = r_matrix_inverse(&h).unwrap();
            let idn = LinearMap::identity(q(), h.dim(), 2);
            assert_eq!(ri.compose(&r).unwrap(), idn);
            assert_eq!(r.compose(&ri).unwrap(), idn);
            // ad(a ⊗ 1) = a, R(x ⊗ 1) = 1 ⊗ x
            let one = h.unit().column(0);
            for a in 0..h.dim() {
                let mut acc = Accumulator::default();
                for (i, c) in one.iter() {
                    for (k, v) in h.ad().column(a * h.dim() + i).iter() {
                        acc.add(*k, &(v * c));
                    }
                }
                assert_eq!(acc.finish(), SparseVec::unit(a, q()));
            }
        }
    }

    #[test]
    fn cocommutative_and_commutative() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let kg = group_algebra(&g, q());
        let tau = kg.tau();
        assert_eq!(tau.compose(kg.delta()).unwrap(), *kg.delta());
        let fun = function_algebra(&g, q());
        assert_eq!(fun.mu().compose(&fun.tau()).unwrap(), *fun.mu());
    }

    #[test]
    fn swapped_multiplication_breaks_second_condition() {
        let h = group_algebra(&FiniteGroup::cyclic(3).unwrap(), q());
        let fake = compose_chain(q(), 3, vec![stage![h.mu()], stage![&h.tau()]]).unwrap();
        let c = crate::hopf::check_adjoint_conditions_for(&h, &fake).unwrap();
        assert!(!c.braided);
    }

    #[test]
    fn superline_rejects_char_two() {
        assert!(matches!(superline(FieldSpec::PrimeField(2)), Err(Error::CharTwoUnsupported)));
    }
}
