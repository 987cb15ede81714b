//! Finite groupoids, their nerve complex, the conjugate groupoid of a group,
//! and rack cocycles built from group data.
//!
//! `C_m` is spanned by strings `(x₀, f₀, …, f_{m−1})` of composable
//! morphisms (`C₀` = objects) and
//! `∂(x₀,f₀,…,f_{m−1}) = (x₁,f₁,…) + Σᵢ (−1)^{i+1}(…, fᵢf_{i+1}, …) + (−1)^m (x₀,f₀,…,f_{m−2})`,
//! with `fᵢf_{i+1}` meaning "first `fᵢ`, then `f_{i+1}`".
//!
//! Cocycle degrees follow the adjoint complex: a degree-`n` cochain lives on
//! `C_{n−1}`. Degree 2 is the system `a(x₁,f₁) − a(x₀,f₀f₁) + a(x₀,f₀) = 0`,
//! which on the conjugate groupoid is `a(x,y) + a(x◁y,z) − a(x,yz) = 0`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::cohomology::{require_diagonal_cocycle, GroupFunction};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{rref, SparseVec, SubspaceBasis};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    /// `(f, g) ↦ fg` for `target(f) = source(g)`.
    composition: HashMap<(usize, usize), usize>,
    identities: Vec<usize>,
}

impl FiniteGroupoid {
    /// `compose(f, g)` is called for every composable pair and must return
    /// the index of `fg`. Validates the groupoid axioms.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let bad = |m: String| Error::NotAGroup(format!("groupoid: {m}"));
        if let Some(m) = morphisms.iter().find(|m| m.source >= objects.len() || m.target >= objects.len()) {
            return Err(bad(format!("morphism {} has an unknown endpoint", m.label)));
        }
        let mut composition = HashMap::new();
        for (f, mf) in morphisms.iter().enumerate() {
            for (g, mg) in morphisms.iter().enumerate() {
                if mf.target == mg.source {
                    let h = compose(f, g);
                    if h >= morphisms.len() || morphisms[h].source != mf.source || morphisms[h].target != mg.target {
                        return Err(bad(format!("{}·{} has the wrong endpoints", mf.label, mg.label)));
                    }
                    composition.insert((f, g), h);
                }
            }
        }
        let mut identities = Vec::with_capacity(objects.len());
        for x in 0..objects.len() {
            let e = (0..morphisms.len())
                .find(|&e| {
                    morphisms[e].source == x
                        && morphisms[e].target == x
                        && morphisms.iter().enumerate().all(|(f, m)| {
                            (m.source != x || composition[&(e, f)] == f) && (m.target != x || composition[&(f, e)] == f)
                        })
                })
                .ok_or_else(|| bad(format!("object {} has no identity", objects[x])))?;
            identities.push(e);
        }
        let gd = FiniteGroupoid { objects, morphisms, composition, identities };
        for f in 0..gd.morphisms.len() {
            let m = &gd.morphisms[f];
            let has_inverse = (0..gd.morphisms.len()).any(|g| {
                gd.morphisms[g].source == m.target
                    && gd.compose(f, g) == Some(gd.identities[m.source])
                    && gd.compose(g, f) == Some(gd.identities[m.target])
            });
            if !has_inverse {
                return Err(bad(format!("{} is not invertible", m.label)));
            }
        }
        for (&(f, g), &fg) in &gd.composition {
            for h in 0..gd.morphisms.len() {
                if gd.morphisms[h].source == gd.morphisms[g].target {
                    let left = gd.compose(fg, h);
                    let right = gd.compose(g, h).and_then(|gh| gd.compose(f, gh));
                    if left != right {
                        return Err(bad(format!(
                            "associativity fails at ({}, {}, {})",
                            gd.morphisms[f].label, gd.morphisms[g].label, gd.morphisms[h].label
                        )));
                    }
                }
            }
        }
        Ok(gd)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    /// `fg` (first `f`), when composable.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.composition.get(&(f, g)).copied()
    }

    /// Generators of `C_m`: morphism strings (for `m = 0`, objects as `[x]`).
    pub fn strings(&self, m: usize) -> Vec<Vec<usize>> {
        if m == 0 {
            return (0..self.objects.len()).map(|x| vec![x]).collect();
        }
        let mut out: Vec<Vec<usize>> = (0..self.morphisms.len()).map(|f| vec![f]).collect();
        for _ in 1..m {
            out = out
                .into_iter()
                .flat_map(|s| {
                    let t = self.morphisms[*s.last().unwrap()].target;
                    (0..self.morphisms.len()).filter(move |&g| self.morphisms[g].source == t).map(move |g| {
                        let mut s2 = s.clone();
                        s2.push(g);
                        s2
                    })
                })
                .collect();
        }
        out
    }
}

/// Objects `G`; morphisms `(x,y): x → x◁y`; `(x,y)(x◁y,z) = (x,yz)`.
/// Morphism `(x,y)` has index `x·|G| + y`.
pub fn conjugate_groupoid(g: &FiniteGroup) -> FiniteGroupoid {
    let n = g.order();
    let morphisms = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            Morphism { source: x, target: g.conj_unchecked(x, y), label: format!("({},{})", g.label(x), g.label(y)) }
        })
        .collect();
    FiniteGroupoid::new(g.labels().to_vec(), morphisms, |f, h| (f / n) * n + g.mul(f % n, h % n))
        .expect("conjugate groupoids are groupoids")
}

/// An integer matrix between free modules on string bases.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<SparseVec>,
}

impl BoundaryMatrix {
    pub fn compose(&self, inner: &BoundaryMatrix) -> BoundaryMatrix {
        assert_eq!(self.cols, inner.rows);
        let columns = inner
            .columns
            .iter()
            .map(|c| {
                c.iter().fold(SparseVec::new(), |acc, (i, x)| acc.add_scaled(x, &self.columns[*i]))
            })
            .collect();
        BoundaryMatrix { rows: self.rows, cols: inner.cols, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }
}

/// `∂: C_{n+1} → C_n` on the string bases, for `n ∈ 0..=3`.
pub fn boundary_matrix(gd: &FiniteGroupoid, n: usize, field: FieldSpec) -> Result<BoundaryMatrix> {
    if n > 3 {
        return Err(Error::UnsupportedDegree(n));
    }
    let domain = gd.strings(n + 1);
    let codomain = gd.strings(n);
    let index: HashMap<&[usize], usize> = codomain.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let m = n + 1;
    let sign = |k: usize| if k % 2 == 0 { field.one() } else { field.from_i64(-1) };
    let columns = domain
        .par_iter()
        .map(|s| {
            let mut terms: Vec<(usize, Scalar)> = Vec::with_capacity(m + 1);
            let face = |t: Vec<usize>| index[t.as_slice()];
            if m == 1 {
                terms.push((face(vec![gd.morphisms[s[0]].target]), field.one()));
                terms.push((face(vec![gd.morphisms[s[0]].source]), sign(1)));
            } else {
                terms.push((face(s[1..].to_vec()), field.one()));
                for i in 0..m - 1 {
                    let mut t = s[..i].to_vec();
                    t.push(gd.compose(s[i], s[i + 1]).expect("composable string"));
                    t.extend_from_slice(&s[i + 2..]);
                    terms.push((face(t), sign(i + 1)));
                }
                terms.push((face(s[..m - 1].to_vec()), sign(m)));
            }
            SparseVec::from_pairs(terms)
        })
        .collect();
    Ok(BoundaryMatrix { rows: codomain.len(), cols: domain.len(), columns })
}

/// Degree-`n` cocycles: functions on `C_{n−1}` annihilating `∂(C_n)`.
pub fn groupoid_cocycle_space(gd: &FiniteGroupoid, n: usize, field: FieldSpec) -> Result<SubspaceBasis> {
    if !(1..=3).contains(&n) {
        return Err(Error::UnsupportedDegree(n));
    }
    let b = boundary_matrix(gd, n - 1, field)?;
    let e = rref(field, b.rows, b.columns);
    Ok(SubspaceBasis::span(field, b.rows, e.null_space()))
}

/// `ψ(x,y) + ψ(x◁y,z) = ψ(x,z) + ψ(x◁z, y◁z)`; first failing triple.
pub fn rack_2cocycle_failure(g: &FiniteGroup, psi: &GroupFunction) -> Option<[usize; 3]> {
    let n = g.order();
    let c = |x, y| g.conj_unchecked(x, y);
    (0..n * n * n)
        .into_par_iter()
        .find_first(|&t| {
            let (x, y, z) = (t / (n * n), (t / n) % n, t % n);
            psi.get(&[x, y]) + psi.get(&[c(x, y), z]) != psi.get(&[x, z]) + psi.get(&[c(x, z), c(y, z)])
        })
        .map(|t| [t / (n * n), (t / n) % n, t % n])
}

pub fn check_rack_2cocycle(g: &FiniteGroup, psi: &GroupFunction) -> bool {
    rack_2cocycle_failure(g, psi).is_none()
}

/// `θ(x,y,z) + θ(x◁z,y◁z,w) + θ(x,z,w) = θ(x◁y,z,w) + θ(x,y,w) + θ(x◁w,y◁w,z◁w)`.
pub fn rack_3cocycle_failure(g: &FiniteGroup, th: &GroupFunction) -> Option<[usize; 4]> {
    let n = g.order();
    let c = |x, y| g.conj_unchecked(x, y);
    (0..n.pow(4))
        .into_par_iter()
        .find_first(|&t| {
            let (x, y, z, w) = (t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n);
            let lhs = &(th.get(&[x, y, z]) + th.get(&[c(x, z), c(y, z), w])) + th.get(&[x, z, w]);
            let rhs = &(th.get(&[c(x, y), z, w]) + th.get(&[x, y, w])) + th.get(&[c(x, w), c(y, w), c(z, w)]);
            lhs != rhs
        })
        .map(|t| [t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n])
}

pub fn check_rack_3cocycle(g: &FiniteGroup, th: &GroupFunction) -> bool {
    rack_3cocycle_failure(g, th).is_none()
}

/// `ψ = a` for a solution of `a(x,y) + a(x◁y,z) − a(x,yz) = 0`.
pub fn rack_2cocycle_from(g: &FiniteGroup, a: &GroupFunction) -> Result<GroupFunction> {
    require_diagonal_cocycle(g, a)?;
    Ok(a.clone())
}

/// `θ(x,y,z) = c(x,y,z) − c(x, z, z⁻¹yz)` for `c` satisfying the group
/// 3-cocycle identity.
pub fn rack_3cocycle_from(g: &FiniteGroup, c: &GroupFunction) -> Result<GroupFunction> {
    if let Some(t) = crate::cohomology::group_3cocycle_failure(g, c) {
        return Err(Error::NotACocycle(t.to_vec()));
    }
    Ok(GroupFunction::from_fn(g.order(), 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        c.get(&[x, y, z]) - c.get(&[x, z, g.conj_unchecked(y, z)])
    }))
}

/// Groupoid 2-cochain (on `C₁`, indexed like the conjugate groupoid's
/// morphisms) read as a function `G×G → k`.
pub fn as_group_function(g: &FiniteGroup, field: FieldSpec, v: &SparseVec) -> GroupFunction {
    GroupFunction::from_vector(field, g.order(), 2, v)
}

/// Associativity of `(f₀,a)(f₁,b) = (f₀f₁, a + b + c(f₀,f₁))` on
/// `morphisms × k`, for `c` a function on `C₂`. Since the `a`, `b` shifts
/// cancel, this is exactly the 2-cocycle condition on `C₃`; checked
/// directly on triples.
pub fn twisted_extension_is_associative(gd: &FiniteGroupoid, field: FieldSpec, c: &SparseVec) -> bool {
    let c2 = gd.strings(2);
    let index: HashMap<&[usize], usize> = c2.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let cval = |f: usize, g: usize| c.get(index[[f, g].as_slice()]).cloned().unwrap_or_else(|| field.zero());
    gd.strings(3).iter().all(|s| {
        let (f, g, h) = (s[0], s[1], s[2]);
        let fg = gd.compose(f, g).unwrap();
        let gh = gd.compose(g, h).unwrap();
        // ((f,0)(g,0))(h,0) vs (f,0)((g,0)(h,0))
        let left = &cval(f, g) + &cval(fg, h);
        let right = &cval(g, h) + &cval(f, gh);
        left == right
    })
}

/// Whether `a(x₀,f₀) := α(f₀)` is a groupoid 1-cocycle, i.e. annihilates
/// `∂(C₂)`; equivalently `α(fg) = α(f) + α(g)`.
pub fn is_one_cocycle(gd: &FiniteGroupoid, field: FieldSpec, alpha: &[Scalar]) -> bool {
    let b = boundary_matrix(gd, 1, field).expect("degree 1 is supported");
    b.columns.iter().all(|col| {
        col.iter().fold(field.zero(), |acc, (i, x)| &acc + &(x * &alpha[*i])).is_zero()
    })
}

pub fn is_additive(gd: &FiniteGroupoid, alpha: &[Scalar]) -> bool {
    gd.strings(2).iter().all(|s| alpha[gd.compose(s[0], s[1]).unwrap()] == &alpha[s[0]] + &alpha[s[1]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{diagonal_2cocycles, group_3coboundary};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn conjugate_groupoid_shapes() {
        let t = conjugate_groupoid(&FiniteGroup::cyclic(1).unwrap());
        assert_eq!((t.objects().len(), t.morphisms().len()), (1, 1));
        let z2 = conjugate_groupoid(&FiniteGroup::cyclic(2).unwrap());
        assert_eq!(z2.morphisms().len(), 4);
        assert!(z2.morphisms().iter().all(|m| m.source == m.target));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let gd = conjugate_groupoid(&s3);
        assert_eq!((gd.objects().len(), gd.morphisms().len()), (6, 36));
        for (i, m) in gd.morphisms().iter().enumerate() {
            assert_eq!(m.target, s3.conj(i / 6, i % 6).unwrap());
        }
    }

    #[test]
    fn boundary_squares_to_zero() {
        for g in [FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()] {
            let gd = conjugate_groupoid(&g);
            for n in 0..2 {
                let outer = boundary_matrix(&gd, n, q()).unwrap();
                let inner = boundary_matrix(&gd, n + 1, q()).unwrap();
                assert!(outer.compose(&inner).is_zero());
            }
        }
    }

    #[test]
    fn boundary_row_pattern() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let gd = conjugate_groupoid(&g);
        let b = boundary_matrix(&gd, 1, q()).unwrap();
        let c2 = gd.strings(2);
        let c1 = gd.strings(1);
        let at = |s: Vec<usize>| c1.iter().position(|t| *t == s).unwrap();
        // (f₀, f₁) = ((e,g), (e,g)) with f₀f₁ = (e, g²)
        let s = c2.iter().position(|s| *s == vec![1, 1]).unwrap();
        let expected = SparseVec::from_pairs([(at(vec![1]), q().one()), (at(vec![2]), q().from_i64(-1)), (at(vec![1]), q().one())]);
        assert_eq!(b.columns[s], expected);
    }

    #[test]
    fn s3_degree_two_dimensions() {
        let gd = conjugate_groupoid(&FiniteGroup::symmetric(3).unwrap());
        let dims: Vec<usize> = [q(), FieldSpec::PrimeField(2), FieldSpec::PrimeField(3), FieldSpec::PrimeField(5), FieldSpec::PrimeField(7)]
            .iter()
            .map(|&f| groupoid_cocycle_space(&gd, 2, f).unwrap().dim())
            .collect();
        assert_eq!(dims, [3, 5, 4, 3, 3]);
    }

    #[test]
    fn diagonal_solutions_are_the_groupoid_cocycles() {
        for g in [FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()] {
            for f in [q(), FieldSpec::PrimeField(3)] {
                let gd = conjugate_groupoid(&g);
                assert_eq!(groupoid_cocycle_space(&gd, 2, f).unwrap(), diagonal_2cocycles(&g, f));
            }
        }
    }

    #[test]
    fn rack_cocycles_from_group_data() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        for v in diagonal_2cocycles(&s3, q()).vectors() {
            let psi = rack_2cocycle_from(&s3, &as_group_function(&s3, q(), v)).unwrap();
            assert!(check_rack_2cocycle(&s3, &psi));
        }
        let mut bad = GroupFunction::zero(q(), 6, 2);
        bad.values[7] = q().one();
        assert!(matches!(rack_2cocycle_from(&s3, &bad), Err(Error::NotACocycle(_))));

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = GroupFunction::from_fn(6, 2, |_| q().from_i64(rng.gen_range(-3..4)));
        let th = rack_3cocycle_from(&s3, &group_3coboundary(&s3, &a)).unwrap();
        assert!(check_rack_3cocycle(&s3, &th));
        let k = rack_3cocycle_from(&s3, &GroupFunction::constant(q().from_i64(7), 6, 3)).unwrap();
        assert!(k.values.iter().all(Scalar::is_zero));
        let mut spike = GroupFunction::zero(q(), 6, 3);
        spike.values[11] = q().one();
        assert!(matches!(rack_3cocycle_from(&s3, &spike), Err(Error::NotACocycle(_))));
    }

    #[test]
    fn random_psi_is_not_a_rack_cocycle() {
        let f = FieldSpec::PrimeField(7);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let psi = GroupFunction::from_fn(6, 2, |_| f.from_i64(rng.gen_range(0..7)));
        assert!(!check_rack_2cocycle(&s3, &psi));
        assert!(check_rack_2cocycle(&s3, &GroupFunction::zero(f, 6, 2)));
    }

    #[test]
    fn twisted_extensions_and_one_cocycles() {
        let f = FieldSpec::PrimeField(3);
        let gd = conjugate_groupoid(&FiniteGroup::cyclic(3).unwrap());
        for c in groupoid_cocycle_space(&gd, 3, f).unwrap().vectors() {
            assert!(twisted_extension_is_associative(&gd, f, c));
        }
        let mut spike = SparseVec::unit(0, f);
        spike = spike.add_scaled(&f.one(), &SparseVec::unit(4, f));
        let z3 = groupoid_cocycle_space(&gd, 3, f).unwrap();
        assert_eq!(z3.contains(&spike), twisted_extension_is_associative(&gd, f, &spike));

        let g4 = FiniteGroup::cyclic(4).unwrap();
        let gd4 = conjugate_groupoid(&g4);
        let q = FieldSpec::Rationals;
        // Hom(ℤ₄, ℚ) = 0: the only additive α on the identity-only pieces is zero
        let zero = vec![q.zero(); 16];
        assert!(is_one_cocycle(&gd4, q, &zero) && is_additive(&gd4, &zero));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let alpha: Vec<Scalar> = (0..16).map(|_| q.from_i64(rng.gen_range(-1..2))).collect();
            assert_eq!(is_one_cocycle(&gd4, q, &alpha), is_additive(&gd4, &alpha));
        }
        // α(x,y) = β(x◁y) − β(x) is always additive
        let beta = [3, -1, 4, 1];
        let cob: Vec<Scalar> =
            (0..16).map(|i| q.from_i64(beta[g4.conj_unchecked(i / 4, i % 4)] - beta[i / 4])).collect();
        assert!(is_one_cocycle(&gd4, q, &cob) && is_additive(&gd4, &cob));
    }
}
