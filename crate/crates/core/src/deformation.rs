//! First-order deformations `ad_t = ad + tφ` over `k[t]/(t²)`.
//!
//! Maps over the dual numbers are kept as pairs `(base, perturbation)` and
//! composed with materialized Kronecker products, deliberately independent
//! of the slot-wise evaluator used by the differentials, so the obstruction
//! maps below are a genuine cross-check of `d2`.

use crate::cohomology::Cochain;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::LinearMap;
use crate::scalar::DualScalar;

/// `base + t·perturbation`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformedMap {
    pub base: LinearMap,
    pub perturbation: LinearMap,
}

impl DeformedMap {
    pub fn new(base: LinearMap, perturbation: LinearMap) -> Result<Self> {
        if base.field() != perturbation.field() {
            return Err(Error::FieldMismatch(base.field(), perturbation.field()));
        }
        if (base.base_dim(), base.in_arity(), base.out_arity())
            != (perturbation.base_dim(), perturbation.in_arity(), perturbation.out_arity())
        {
            return Err(Error::ArityMismatch("base and perturbation differ in shape".into()));
        }
        Ok(DeformedMap { base, perturbation })
    }

    pub fn embed(m: &LinearMap) -> Self {
        DeformedMap {
            base: m.clone(),
            perturbation: LinearMap::zero(m.field(), m.base_dim(), m.in_arity(), m.out_arity()),
        }
    }

    pub fn identity(m: &LinearMap, arity: usize) -> Self {
        Self::embed(&LinearMap::identity(m.field(), m.base_dim(), arity))
    }

    /// `self ∘ other`; the `t²` term is dropped.
    pub fn compose(&self, other: &DeformedMap) -> Result<DeformedMap> {
        Ok(DeformedMap {
            base: self.base.compose(&other.base)?,
            perturbation: self.base.compose(&other.perturbation)?.add(&self.perturbation.compose(&other.base)?)?,
        })
    }

    pub fn tensor(&self, other: &DeformedMap) -> Result<DeformedMap> {
        Ok(DeformedMap {
            base: self.base.tensor(&other.base)?,
            perturbation: self.base.tensor(&other.perturbation)?.add(&self.perturbation.tensor(&other.base)?)?,
        })
    }

    pub fn sub(&self, other: &DeformedMap) -> Result<DeformedMap> {
        Ok(DeformedMap { base: self.base.sub(&other.base)?, perturbation: self.perturbation.sub(&other.perturbation)? })
    }

    pub fn entry(&self, row: usize, col: usize) -> DualScalar {
        DualScalar::new(self.base.entry(row, col), self.perturbation.entry(row, col)).expect("same field")
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.perturbation.is_zero()
    }
}

impl From<&LinearMap> for DeformedMap {
    fn from(m: &LinearMap) -> Self {
        DeformedMap::embed(m)
    }
}

fn phi_of(phi: &Cochain) -> Result<&LinearMap> {
    match phi {
        Cochain::Deg2(m) => Ok(m),
        other => Err(Error::ArityMismatch(format!("expected a 2-cochain (2→1), got degree {}", other.degree()))),
    }
}

/// `ad_t = ad + tφ`.
pub fn deformed_ad(h: &HopfAlgebra, phi: &Cochain) -> Result<DeformedMap> {
    let phi = phi_of(phi)?;
    if phi.base_dim() != h.dim() {
        return Err(Error::ArityMismatch("cochain and algebra differ in dimension".into()));
    }
    DeformedMap::new(h.ad().clone(), phi.clone())
}

/// First-order obstructions: the `t`-coefficients of the two adjoint
/// conditions for `ad_t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Residuals {
    pub xi1: LinearMap,
    pub xi2: LinearMap,
}

impl Residuals {
    pub fn is_zero(&self) -> bool {
        self.xi1.is_zero() && self.xi2.is_zero()
    }

    /// Number of nonzero coordinates of each residual.
    pub fn norms(&self) -> [usize; 2] {
        [self.xi1.nnz(), self.xi2.nnz()]
    }
}

/// `ad_t(ad_t⊗1) − ad_t(1⊗μ)` and
/// `(ad_t⊗μ)(1⊗τ⊗1)(Δ⊗Δ) − (1⊗μ)(τ⊗1)(1⊗Δ)(1⊗ad_t)(τ⊗1)(1⊗Δ)` over dual numbers.
fn condition_defects(h: &HopfAlgebra, ad_t: &DeformedMap) -> Result<(DeformedMap, DeformedMap)> {
    let one = DeformedMap::identity(h.mu(), 1);
    let mu = DeformedMap::from(h.mu());
    let delta = DeformedMap::from(h.delta());
    let tau = DeformedMap::from(&h.tau());

    let first = ad_t.compose(&ad_t.tensor(&one)?)?.sub(&ad_t.compose(&one.tensor(&mu)?)?)?;

    let delta_delta = delta.tensor(&delta)?;
    let middle_swap = one.tensor(&tau)?.tensor(&one)?;
    let lhs = ad_t.tensor(&mu)?.compose(&middle_swap)?.compose(&delta_delta)?;
    let tw = tau.tensor(&one)?.compose(&one.tensor(&delta)?)?;
    let rhs = one
        .tensor(&mu)?
        .compose(&tw)?
        .compose(&one.tensor(ad_t)?)?
        .compose(&tw)?;
    Ok((first, lhs.sub(&rhs)?))
}

pub fn residuals(h: &HopfAlgebra, phi: &Cochain) -> Result<Residuals> {
    let ad_t = deformed_ad(h, phi)?;
    let (a, b) = condition_defects(h, &ad_t)?;
    debug_assert!(a.base.is_zero() && b.base.is_zero(), "ad satisfies the adjoint conditions");
    Ok(Residuals { xi1: a.perturbation, xi2: b.perturbation })
}

/// `R_{ad+tφ} = (1⊗ad_t)(τ⊗1)(1⊗Δ)`.
pub fn deformed_r_matrix(h: &HopfAlgebra, phi: &Cochain) -> Result<DeformedMap> {
    let ad_t = deformed_ad(h, phi)?;
    let one = DeformedMap::identity(h.mu(), 1);
    let tau = DeformedMap::from(&h.tau());
    let delta = DeformedMap::from(h.delta());
    one.tensor(&ad_t)?.compose(&tau.tensor(&one)?)?.compose(&one.tensor(&delta)?)
}

/// The YBE for a map over dual numbers.
pub fn check_ybe_dual(r: &DeformedMap) -> Result<bool> {
    if r.base.in_arity() != 2 || r.base.out_arity() != 2 {
        return Err(Error::ArityMismatch("YBE needs a map H⊗H → H⊗H".into()));
    }
    let one = DeformedMap::identity(&r.base, 1);
    let r1 = r.tensor(&one)?;
    let r2 = one.tensor(r)?;
    let lhs = r1.compose(&r2)?.compose(&r1)?;
    let rhs = r2.compose(&r1)?.compose(&r2)?;
    Ok(lhs == rhs)
}

pub fn check_deformed_ybe(h: &HopfAlgebra, phi: &Cochain) -> Result<bool> {
    check_ybe_dual(&deformed_r_matrix(h, phi)?)
}

/// A map `Σᵢ tⁱ cᵢ` modulo `t^len`.
#[derive(Debug, Clone, PartialEq)]
struct Series(Vec<LinearMap>);

impl Series {
    fn constant(m: &LinearMap, len: usize) -> Series {
        let zero = LinearMap::zero(m.field(), m.base_dim(), m.in_arity(), m.out_arity());
        let mut v = vec![zero; len];
        v[0] = m.clone();
        Series(v)
    }

    fn combine(&self, other: &Series, op: impl Fn(&LinearMap, &LinearMap) -> Result<LinearMap>) -> Result<Series> {
        let len = self.0.len();
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc: Option<LinearMap> = None;
            for i in 0..=k {
                let term = op(&self.0[i], &other.0[k - i])?;
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term)?,
                });
            }
            out.push(acc.unwrap());
        }
        Ok(Series(out))
    }

    fn compose(&self, other: &Series) -> Result<Series> {
        self.combine(other, |a, b| a.compose(b))
    }

    fn tensor(&self, other: &Series) -> Result<Series> {
        self.combine(other, |a, b| a.tensor(b))
    }

    fn sub(&self, other: &Series) -> Result<Series> {
        Ok(Series(self.0.iter().zip(&other.0).map(|(a, b)| a.sub(b)).collect::<Result<_>>()?))
    }
}

/// For `ad_t = ad + t·ad₁ + ⋯ + tⁿ·adₙ`, the coefficients of `t⁰ … t^{n+1}`
/// in the two adjoint-condition defects. The truncation satisfies the
/// conditions modulo `t^{n+2}` iff every returned pair vanishes.
pub fn higher_order_residuals(h: &HopfAlgebra, ads: &[LinearMap]) -> Result<Vec<Residuals>> {
    let len = ads.len() + 2;
    for a in ads {
        if (a.in_arity(), a.out_arity(), a.base_dim()) != (2, 1, h.dim()) || a.field() != h.field() {
            return Err(Error::ArityMismatch("each adᵢ must be a map H⊗H → H over the algebra's field".into()));
        }
    }
    let mut coeffs = vec![h.ad().clone()];
    coeffs.extend(ads.iter().cloned());
    coeffs.push(LinearMap::zero(h.field(), h.dim(), 2, 1));
    let ad_t = Series(coeffs);
    let one = Series::constant(&LinearMap::identity(h.field(), h.dim(), 1), len);
    let mu = Series::constant(h.mu(), len);
    let delta = Series::constant(h.delta(), len);
    let tau = Series::constant(&h.tau(), len);

    let first = ad_t.compose(&ad_t.tensor(&one)?)?.sub(&ad_t.compose(&one.tensor(&mu)?)?)?;
    let lhs = ad_t.tensor(&mu)?.compose(&one.tensor(&tau)?.tensor(&one)?)?.compose(&delta.tensor(&delta)?)?;
    let tw = tau.tensor(&one)?.compose(&one.tensor(&delta)?)?;
    let rhs = one.tensor(&mu)?.compose(&tw)?.compose(&one.tensor(&ad_t)?)?.compose(&tw)?;
    let second = lhs.sub(&rhs)?;
    Ok(first.0.into_iter().zip(second.0).map(|(xi1, xi2)| Residuals { xi1, xi2 }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{d2, superline_cocycles};
    use crate::constructions::{group_algebra, superline};
    use crate::groups::FiniteGroup;
    use crate::linalg::SparseVec;
    use crate::scalar::FieldSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_deformation() {
        let h = superline(FieldSpec::Rationals).unwrap();
        let zero = Cochain::zero(h.field(), 4, 2).unwrap();
        assert_eq!(deformed_ad(&h, &zero).unwrap(), DeformedMap::embed(h.ad()));
        assert!(residuals(&h, &zero).unwrap().is_zero());
        let r = deformed_r_matrix(&h, &zero).unwrap();
        assert_eq!(r.base, crate::hopf::r_matrix(&h));
        assert!(r.perturbation.is_zero());
    }

    #[test]
    fn superline_cocycles_deform_the_ybe() {
        let h = superline(FieldSpec::Rationals).unwrap();
        for phi in superline_cocycles(&h) {
            assert!(residuals(&h, &phi).unwrap().is_zero());
            assert!(check_deformed_ybe(&h, &phi).unwrap());
            let r = deformed_r_matrix(&h, &phi).unwrap();
            // the t-part is (1⊗φ)(τ⊗1)(1⊗Δ)
            let Cochain::Deg2(m) = &phi else { unreachable!() };
            assert_eq!(r.perturbation, crate::hopf::r_matrix_from(&h, m).unwrap());
        }
    }

    #[test]
    fn residuals_agree_with_d2() {
        let f = FieldSpec::PrimeField(5);
        let h = group_algebra(&FiniteGroup::cyclic(3).unwrap(), f);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let v = SparseVec::from_pairs((0..27).map(|i| (i, f.from_i64(rng.gen_range(0..5)))));
            let phi = Cochain::from_vector(f, 3, 2, &v).unwrap();
            let r = residuals(&h, &phi).unwrap();
            let Cochain::Deg3 { xi1, xi2 } = d2(&h, &phi).unwrap() else { unreachable!() };
            assert_eq!((r.xi1, r.xi2), (xi1, xi2));
        }
    }

    #[test]
    fn non_cocycle_breaks_the_deformed_ybe() {
        let h = superline(FieldSpec::Rationals).unwrap();
        let phi = Cochain::basis_element(h.field(), 4, 2, 0).unwrap();
        assert!(!residuals(&h, &phi).unwrap().is_zero());
        assert!(!check_deformed_ybe(&h, &phi).unwrap());
    }

    #[test]
    fn higher_order_residuals_extend_first_order() {
        let h = superline(FieldSpec::Rationals).unwrap();
        let [alpha, ..] = superline_cocycles(&h);
        let Cochain::Deg2(a1) = &alpha else { unreachable!() };
        let res = higher_order_residuals(&h, std::slice::from_ref(a1)).unwrap();
        assert_eq!(res.len(), 3);
        assert!(res[0].is_zero() && res[1].is_zero());
        // the t² coefficient is the obstruction to extending to second order
        let first = residuals(&h, &alpha).unwrap();
        assert!(first.is_zero());
    }
}
