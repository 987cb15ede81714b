use serde::Serialize;

use super::cochain::{space_dim, Cochain};
use super::complex::{AdjointComplex, Mutation};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{kernel_of_columns, quotient_dim, LinearMap, SparseVec, SubspaceBasis};
use crate::scalar::FieldSpec;

#[derive(Debug, Clone, Copy, Default)]
pub struct CohomologyOptions {
    /// Return a basis of `Zⁿ`.
    pub basis: bool,
    /// Ignore the degree-3 memory policy.
    pub allow_large: bool,
    pub mutation: Mutation,
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyReport {
    pub degree: usize,
    #[serde(rename = "dimC")]
    pub dim_c: usize,
    #[serde(rename = "dimZ")]
    pub dim_z: usize,
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    #[serde(rename = "dimH")]
    pub dim_h: usize,
    #[serde(skip)]
    pub cocycles: Option<SubspaceBasis>,
    #[serde(skip)]
    pub coboundaries: Option<SubspaceBasis>,
}

impl CohomologyReport {
    /// Cocycle basis as cochains, when requested.
    pub fn basis(&self, field: FieldSpec, d: usize) -> Option<Vec<Cochain>> {
        let z = self.cocycles.as_ref()?;
        Some(z.vectors().iter().map(|v| Cochain::from_vector(field, d, self.degree, v).unwrap()).collect())
    }
}

/// Whether `Hⁿ` of a `d`-dimensional algebra over `field` fits the default
/// memory policy: degree 3 up to `d = 4` over ℚ and `d = 6` over 𝔽_p.
pub fn check_size(field: FieldSpec, d: usize, degree: usize) -> Result<()> {
    let limit = match (degree, field) {
        (3, FieldSpec::Rationals) => 4,
        (3, FieldSpec::PrimeField(_)) => 6,
        _ => 8,
    };
    if d > limit {
        return Err(Error::TooLarge { rows: space_dim(d, degree + 1)?, cols: space_dim(d, degree)? });
    }
    Ok(())
}

/// `Hⁿ = Zⁿ/Bⁿ` for `n ∈ {1, 2, 3}`, with `B¹ = 0`.
pub fn cohomology(h: &HopfAlgebra, degree: usize, opts: CohomologyOptions) -> Result<CohomologyReport> {
    if !(1..=3).contains(&degree) {
        return Err(Error::UnsupportedDegree(degree));
    }
    let (f, d) = (h.field(), h.dim());
    if f.characteristic() == 2 {
        return Err(Error::CharTwoUnsupported);
    }
    if !opts.allow_large {
        check_size(f, d, degree)?;
    }
    let cx = AdjointComplex::with_mutation(h, opts.mutation);

    if degree == 1 {
        let c1 = cx.c1_basis();
        let images: Vec<SparseVec> = c1.vectors().iter().map(|v| cx.apply(1, v)).collect::<Result<_>>()?;
        // kernel in C¹-coordinates, mapped back into Hom(H,H)
        let ker = kernel_of_columns(f, c1.dim(), images);
        let z_vectors = ker.vectors().iter().map(|k| {
            let mut acc = SparseVec::new();
            for (i, c) in k.iter() {
                acc = acc.add_scaled(c, &c1.vectors()[*i]);
            }
            acc
        });
        let z = SubspaceBasis::span(f, d * d, z_vectors);
        let dim_z = z.dim();
        return Ok(CohomologyReport {
            degree,
            dim_c: c1.dim(),
            dim_z,
            dim_b: 0,
            dim_h: dim_z,
            cocycles: opts.basis.then_some(z),
            coboundaries: opts.basis.then(|| SubspaceBasis::zero(f, d * d)),
        });
    }

    let dim_c = space_dim(d, degree)?;
    let columns = cx.columns(degree)?;
    let b = if degree == 2 {
        let c1 = cx.c1_basis();
        let images: Vec<SparseVec> = c1.vectors().iter().map(|v| cx.apply(1, v)).collect::<Result<_>>()?;
        SubspaceBasis::span(f, dim_c, images)
    } else {
        SubspaceBasis::span(f, dim_c, cx.columns(2)?)
    };
    let (dim_z, z) = if opts.basis {
        let z = kernel_of_columns(f, dim_c, columns);
        (z.dim(), Some(z))
    } else {
        let rank = SubspaceBasis::span(f, space_dim(d, degree + 1)?, columns).dim();
        (dim_c - rank, None)
    };
    let dim_b = b.dim();
    let dim_h = match &z {
        Some(z) => quotient_dim(z, &b)?,
        None => {
            // B ⊆ Z is D_n D_{n-1} = 0; check it on the coboundary basis
            if let Some(index) = b.vectors().iter().position(|v| !cx.apply(degree, v).map(|w| w.is_zero()).unwrap_or(false)) {
                return Err(Error::NotContained { index });
            }
            dim_z - dim_b
        }
    };
    Ok(CohomologyReport {
        degree,
        dim_c,
        dim_z,
        dim_b,
        dim_h,
        cocycles: z,
        coboundaries: opts.basis.then_some(b),
    })
}

/// Convenience: a single 2-cochain from its values on basis pairs.
pub fn two_cochain(h: &HopfAlgebra, values: &[((usize, usize), SparseVec)]) -> Cochain {
    let d = h.dim();
    let mut cols = vec![SparseVec::new(); d * d];
    for ((a, b), v) in values {
        cols[a * d + b] = v.clone();
    }
    Cochain::Deg2(LinearMap::from_columns(h.field(), d, 2, 1, cols))
}
