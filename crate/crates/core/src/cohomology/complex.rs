//! The differentials `D₁`, `D₂`, `D₃` of the adjoint complex.
//!
//! Each is a sum of composites of `ad`, `μ`, `Δ`, `τ` and the cochain
//! itself. The parts not involving the cochain are composed once, up front.

use rayon::prelude::*;

use super::cochain::{block_shapes, space_dim, Cochain};
use crate::error::{Error, Result};
use crate::hopf::{r_matrix, HopfAlgebra};
use crate::linalg::{compose_chain, id, kernel_of_columns, tensor_power_dim, Chain, LinearMap, SparseVec, SubspaceBasis};
use crate::stage;

/// Deliberate defects, for checking that the test suite notices them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Drops the `(1⊗μ)(τ⊗1)(1⊗ξ₂)(R_ad⊗1)` term of `d^{3,2}`.
    OmitRTerm,
}

/// Fixed composites used by the differentials of one algebra.
pub struct AdjointComplex<'h> {
    h: &'h HopfAlgebra,
    mutation: Mutation,
    tau: LinearMap,
    /// `ad⊗1 − 1⊗μ`
    a21: LinearMap,
    /// `(τ⊗1)(1⊗Δ)`
    u: LinearMap,
    /// `(1⊗μ)(τ⊗1)(1⊗Δ)`
    v: LinearMap,
    /// `(1⊗τ⊗1)(Δ⊗Δ)`
    w: LinearMap,
    /// `1⊗μ⊗1 − ad⊗1² − 1²⊗μ`
    a31: LinearMap,
    /// `(ad⊗μ)(1⊗τ⊗1)(1²⊗Δ)`
    p1: LinearMap,
    /// `R_ad ⊗ 1`
    r1: LinearMap,
    /// `(1⊗μ)(τ⊗1)`
    m: LinearMap,
    /// `(1⊗τ⊗1²)(τ⊗1³)(1²⊗τ⊗1)(1⊗Δ⊗Δ)`
    q1: LinearMap,
    /// `(1⊗μ)(1²⊗μ)(τ⊗1²)(1⊗τ⊗1)(1²⊗Δ)`
    q2: LinearMap,
    /// `(1²⊗τ⊗1)(1²⊗μ⊗1²)(1⊗τ⊗1³)(Δ⊗Δ⊗Δ)`
    q3: LinearMap,
    /// `1⊗μ`
    one_mu: LinearMap,
    /// `(1⊗μ⊗1)(τ⊗1²)(1⊗Δ⊗1)`
    e1: LinearMap,
    /// `1⊗Δ`
    one_delta: LinearMap,
}

impl<'h> AdjointComplex<'h> {
    pub fn new(h: &'h HopfAlgebra) -> Self {
        Self::with_mutation(h, Mutation::None)
    }

    pub fn with_mutation(h: &'h HopfAlgebra, mutation: Mutation) -> Self {
        let (f, d) = (h.field(), h.dim());
        let (ad, mu, delta) = (h.ad(), h.mu(), h.delta());
        let tau = h.tau();
        let c = |stages| compose_chain(f, d, stages).expect("fixed composites are well-shaped");
        let ad1 = c(vec![stage![ad, id(1)]]);
        let one_mu = c(vec![stage![id(1), mu]]);
        let a21 = ad1.sub(&one_mu).unwrap();
        let a31 = c(vec![stage![id(1), mu, id(1)]])
            .sub(&c(vec![stage![ad, id(2)]]))
            .unwrap()
            .sub(&c(vec![stage![id(2), mu]]))
            .unwrap();
        let r = r_matrix(h);
        AdjointComplex {
            h,
            mutation,
            a21,
            u: c(vec![stage![&tau, id(1)], stage![id(1), delta]]),
            v: c(vec![stage![id(1), mu], stage![&tau, id(1)], stage![id(1), delta]]),
            w: c(vec![stage![id(1), &tau, id(1)], stage![delta, delta]]),
            a31,
            p1: c(vec![stage![ad, mu], stage![id(1), &tau, id(1)], stage![id(2), delta]]),
            r1: c(vec![stage![&r, id(1)]]),
            m: c(vec![stage![id(1), mu], stage![&tau, id(1)]]),
            q1: c(vec![
                stage![id(1), &tau, id(2)],
                stage![&tau, id(3)],
                stage![id(2), &tau, id(1)],
                stage![id(1), delta, delta],
            ]),
            q2: c(vec![
                stage![id(1), mu],
                stage![id(2), mu],
                stage![&tau, id(2)],
                stage![id(1), &tau, id(1)],
                stage![id(2), delta],
            ]),
            q3: c(vec![
                stage![id(2), &tau, id(1)],
                stage![id(2), mu, id(2)],
                stage![id(1), &tau, id(3)],
                stage![delta, delta, delta],
            ]),
            e1: c(vec![stage![id(1), mu, id(1)], stage![&tau, id(2)], stage![id(1), delta, id(1)]]),
            one_delta: c(vec![stage![id(1), delta]]),
            one_mu,
            tau,
        }
    }

    pub fn algebra(&self) -> &HopfAlgebra {
        self.h
    }

    fn chain(&self, stages: Vec<crate::linalg::Stage<'_>>) -> LinearMap {
        compose_chain(self.h.field(), self.h.dim(), stages).expect("differential composites are well-shaped")
    }

    fn check(&self, c: &Cochain, degree: usize) -> Result<()> {
        if c.degree() != degree {
            return Err(Error::ArityMismatch(format!("expected a degree-{degree} cochain, got degree {}", c.degree())));
        }
        if c.field() != self.h.field() {
            return Err(Error::FieldMismatch(self.h.field(), c.field()));
        }
        if c.base_dim() != self.h.dim() {
            return Err(Error::ArityMismatch(format!(
                "cochain over dimension {}, algebra of dimension {}",
                c.base_dim(),
                self.h.dim()
            )));
        }
        Ok(())
    }

    /// The two defects `fμ − μ(f⊗1) − μ(1⊗f)` and `Δf − (f⊗1)Δ − (1⊗f)Δ`.
    pub fn c1_defects(&self, f: &LinearMap) -> (LinearMap, LinearMap) {
        let (mu, delta) = (self.h.mu(), self.h.delta());
        let lhs1 = self.chain(vec![stage![f], stage![mu]]);
        let rhs1 = self.chain(vec![stage![mu], stage![f, id(1)]]).add(&self.chain(vec![stage![mu], stage![id(1), f]])).unwrap();
        let lhs2 = self.chain(vec![stage![delta], stage![f]]);
        let rhs2 =
            self.chain(vec![stage![f, id(1)], stage![delta]]).add(&self.chain(vec![stage![id(1), f], stage![delta]])).unwrap();
        (lhs1.sub(&rhs1).unwrap(), lhs2.sub(&rhs2).unwrap())
    }

    pub fn in_c1(&self, f: &LinearMap) -> bool {
        let (a, b) = self.c1_defects(f);
        a.is_zero() && b.is_zero()
    }

    /// Basis of `C¹ ⊆ Hom(H,H)` in Hom-space coordinates.
    pub fn c1_basis(&self) -> SubspaceBasis {
        let (f, d) = (self.h.field(), self.h.dim());
        let n = d * d;
        let split = tensor_power_dim(d, 3);
        let columns: Vec<SparseVec> = (0..n)
            .into_par_iter()
            .map(|j| {
                let e = LinearMap::from_hom_vector(f, d, 1, 1, &SparseVec::unit(j, f));
                let (a, b) = self.c1_defects(&e);
                let mut v: Vec<_> = a.to_hom_vector().iter().cloned().collect();
                v.extend(b.to_hom_vector().shifted(split).iter().cloned());
                SparseVec::from_pairs(v)
            })
            .collect();
        kernel_of_columns(f, n, columns)
    }

    /// `d^{1,1}(f) = ad(1⊗f) − f ad + ad(f⊗1)`, after checking `f ∈ C¹`.
    pub fn d1(&self, c: &Cochain) -> Result<Cochain> {
        self.check(c, 1)?;
        let f = c.blocks()[0];
        if !self.in_c1(f) {
            return Err(Error::NotInC1);
        }
        Ok(Cochain::Deg2(self.d1_unchecked(f)))
    }

    fn d1_unchecked(&self, f: &LinearMap) -> LinearMap {
        let ad = self.h.ad();
        self.chain(vec![stage![ad], stage![id(1), f]])
            .sub(&self.chain(vec![stage![f], stage![ad]]))
            .unwrap()
            .add(&self.chain(vec![stage![ad], stage![f, id(1)]]))
            .unwrap()
    }

    /// `(d^{2,1}φ, d^{2,2}φ)`.
    pub fn d2(&self, c: &Cochain) -> Result<Cochain> {
        self.check(c, 2)?;
        let phi = c.blocks()[0];
        let (ad, mu) = (self.h.ad(), self.h.mu());
        // ad(φ⊗1) + φ(ad⊗1) − φ(1⊗μ)
        let d21 = self.chain(vec![stage![ad], stage![phi, id(1)]]).add(&self.chain(vec![stage![phi], stage![&self.a21]]))?;
        // (φ⊗μ)(1⊗τ⊗1)(Δ⊗Δ) − (1⊗μ)(τ⊗1)(1⊗Δ)(1⊗φ)(τ⊗1)(1⊗Δ)
        let d22 = self
            .chain(vec![stage![phi, mu], stage![&self.w]])
            .sub(&self.chain(vec![stage![&self.v], stage![id(1), phi], stage![&self.u]]))?;
        Ok(Cochain::Deg3 { xi1: d21, xi2: d22 })
    }

    /// `(d^{3,1}ξ, d^{3,2}ξ, d^{3,3}ξ)` in `C⁴`.
    pub fn d3(&self, c: &Cochain) -> Result<Cochain> {
        self.check(c, 3)?;
        let (xi1, xi2) = (c.blocks()[0], c.blocks()[1]);
        let (ad, mu) = (self.h.ad(), self.h.mu());

        // ad(ξ₁⊗1) + ξ₁(1⊗μ⊗1) − ξ₁(ad⊗1² + 1²⊗μ)
        let d31 = self.chain(vec![stage![ad], stage![xi1, id(1)]]).add(&self.chain(vec![stage![xi1], stage![&self.a31]]))?;

        let t1 = self.chain(vec![stage![&self.p1], stage![xi2, id(1)]]);
        let t3 = self.chain(vec![stage![&self.q2], stage![id(2), xi1], stage![&self.q1]]);
        let t4 = self.chain(vec![stage![xi1, mu], stage![&self.q3]]);
        let t5 = self.chain(vec![stage![xi2], stage![&self.one_mu]]);
        let mut d32 = t1.add(&t3)?.sub(&t4)?.sub(&t5)?;
        if self.mutation != Mutation::OmitRTerm {
            let t2 = self.chain(vec![stage![&self.m], stage![id(1), xi2], stage![&self.r1]]);
            d32 = d32.add(&t2)?;
        }

        // (1⊗μ⊗1)(τ⊗1²)(1⊗Δ⊗1)(1⊗ξ₂)(τ⊗1)(1⊗Δ) + (ξ₂⊗μ)(1⊗τ⊗1)(Δ⊗Δ) − (1⊗Δ)ξ₂
        let d33 = self
            .chain(vec![stage![&self.e1], stage![id(1), xi2], stage![&self.u]])
            .add(&self.chain(vec![stage![xi2, mu], stage![&self.w]]))?
            .sub(&self.chain(vec![stage![&self.one_delta], stage![xi2]]))?;
        Ok(Cochain::Deg4 { c41: d31, c32: d32, c23: d33 })
    }

    /// `D_n` on a cochain of degree `n`.
    pub fn differential(&self, c: &Cochain) -> Result<Cochain> {
        match c.degree() {
            1 => self.d1(c),
            2 => self.d2(c),
            3 => self.d3(c),
            n => Err(Error::UnsupportedDegree(n)),
        }
    }

    /// `D_n` applied to a coordinate vector of `Cⁿ` (ambient coordinates for
    /// degree 1; the C¹ check is skipped).
    pub fn apply(&self, degree: usize, v: &SparseVec) -> Result<SparseVec> {
        let (f, d) = (self.h.field(), self.h.dim());
        let c = Cochain::from_vector(f, d, degree, v)?;
        Ok(match degree {
            1 => self.d1_unchecked(c.blocks()[0]).to_hom_vector(),
            _ => self.differential(&c)?.to_vector(),
        })
    }

    /// Images of the standard basis of `Cⁿ` (matrix columns of `D_n`).
    pub fn columns(&self, degree: usize) -> Result<Vec<SparseVec>> {
        let (f, d) = (self.h.field(), self.h.dim());
        let n = space_dim(d, degree)?;
        block_shapes(degree + 1)?;
        (0..n).into_par_iter().map(|j| self.apply(degree, &SparseVec::unit(j, f))).collect()
    }

    pub fn tau(&self) -> &LinearMap {
        &self.tau
    }

    /// Evaluates a custom composite over this algebra.
    pub fn composite(&self, stages: Vec<crate::linalg::Stage<'_>>) -> Result<LinearMap> {
        Ok(Chain::new(self.h.field(), self.h.dim(), stages)?.to_map())
    }
}

pub fn c1_basis(h: &HopfAlgebra) -> SubspaceBasis {
    AdjointComplex::new(h).c1_basis()
}

pub fn d1(h: &HopfAlgebra, f: &Cochain) -> Result<Cochain> {
    AdjointComplex::new(h).d1(f)
}

pub fn d2(h: &HopfAlgebra, phi: &Cochain) -> Result<Cochain> {
    AdjointComplex::new(h).d2(phi)
}

pub fn d3(h: &HopfAlgebra, xi: &Cochain) -> Result<Cochain> {
    AdjointComplex::new(h).d3(xi)
}
