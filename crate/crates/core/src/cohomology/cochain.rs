use crate::error::{Error, Result};
use crate::linalg::{tensor_power_dim, LinearMap, SparseVec};
use crate::scalar::FieldSpec;

/// A homogeneous element of `Cⁿ = ⊕ᵢ Hom(H^⊗(n+1−i), H^⊗i)`.
///
/// Degree 4 only occurs as the target of `D₃`, with the three blocks
/// `Hom(H⁴,H) ⊕ Hom(H³,H²) ⊕ Hom(H²,H³)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Cochain {
    Deg1(LinearMap),
    Deg2(LinearMap),
    Deg3 { xi1: LinearMap, xi2: LinearMap },
    Deg4 { c41: LinearMap, c32: LinearMap, c23: LinearMap },
}

/// `(in_arity, out_arity)` of each block, in coordinate order.
pub fn block_shapes(degree: usize) -> Result<&'static [(usize, usize)]> {
    Ok(match degree {
        1 => &[(1, 1)],
        2 => &[(2, 1)],
        3 => &[(3, 1), (2, 2)],
        4 => &[(4, 1), (3, 2), (2, 3)],
        n => return Err(Error::UnsupportedDegree(n)),
    })
}

/// Dimension of the ambient `Cⁿ` (for degree 1, before the C¹ constraints).
pub fn space_dim(d: usize, degree: usize) -> Result<usize> {
    Ok(block_shapes(degree)?.iter().map(|&(a, b)| tensor_power_dim(d, a + b)).sum())
}

impl Cochain {
    pub fn degree(&self) -> usize {
        match self {
            Cochain::Deg1(_) => 1,
            Cochain::Deg2(_) => 2,
            Cochain::Deg3 { .. } => 3,
            Cochain::Deg4 { .. } => 4,
        }
    }

    pub fn blocks(&self) -> Vec<&LinearMap> {
        match self {
            Cochain::Deg1(f) | Cochain::Deg2(f) => vec![f],
            Cochain::Deg3 { xi1, xi2 } => vec![xi1, xi2],
            Cochain::Deg4 { c41, c32, c23 } => vec![c41, c32, c23],
        }
    }

    fn from_blocks(degree: usize, mut blocks: Vec<LinearMap>) -> Cochain {
        match degree {
            1 => Cochain::Deg1(blocks.remove(0)),
            2 => Cochain::Deg2(blocks.remove(0)),
            3 => {
                let xi2 = blocks.pop().unwrap();
                Cochain::Deg3 { xi1: blocks.pop().unwrap(), xi2 }
            }
            _ => {
                let c23 = blocks.pop().unwrap();
                let c32 = blocks.pop().unwrap();
                Cochain::Deg4 { c41: blocks.pop().unwrap(), c32, c23 }
            }
        }
    }

    /// Checks block arities against the degree.
    pub fn new(degree: usize, blocks: Vec<LinearMap>) -> Result<Cochain> {
        let shapes = block_shapes(degree)?;
        if blocks.len() != shapes.len() {
            return Err(Error::ArityMismatch(format!(
                "degree {degree} needs {} blocks, got {}",
                shapes.len(),
                blocks.len()
            )));
        }
        for (b, &(a, o)) in blocks.iter().zip(shapes) {
            if (b.in_arity(), b.out_arity()) != (a, o) {
                return Err(Error::ArityMismatch(format!(
                    "degree {degree} block must be {a}→{o}, got {}→{}",
                    b.in_arity(),
                    b.out_arity()
                )));
            }
        }
        Ok(Self::from_blocks(degree, blocks))
    }

    pub fn zero(field: FieldSpec, d: usize, degree: usize) -> Result<Cochain> {
        let blocks = block_shapes(degree)?.iter().map(|&(a, b)| LinearMap::zero(field, d, a, b)).collect();
        Ok(Self::from_blocks(degree, blocks))
    }

    pub fn field(&self) -> FieldSpec {
        self.blocks()[0].field()
    }

    pub fn base_dim(&self) -> usize {
        self.blocks()[0].base_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks().iter().all(|b| b.is_zero())
    }

    /// Concatenated Hom-space coordinates of the blocks.
    pub fn to_vector(&self) -> SparseVec {
        let mut entries = Vec::new();
        let mut offset = 0;
        for b in self.blocks() {
            entries.extend(b.to_hom_vector().shifted(offset).iter().cloned());
            offset += b.rows() * b.cols();
        }
        SparseVec::from_pairs(entries)
    }

    pub fn from_vector(field: FieldSpec, d: usize, degree: usize, v: &SparseVec) -> Result<Cochain> {
        let shapes = block_shapes(degree)?;
        let mut blocks = Vec::with_capacity(shapes.len());
        let mut offset = 0;
        for &(a, b) in shapes {
            let size = tensor_power_dim(d, a + b);
            let part = SparseVec::from_pairs(
                v.iter().filter(|(i, _)| *i >= offset && *i < offset + size).map(|(i, x)| (i - offset, x.clone())),
            );
            blocks.push(LinearMap::from_hom_vector(field, d, a, b, &part));
            offset += size;
        }
        Ok(Self::from_blocks(degree, blocks))
    }

    pub fn basis_element(field: FieldSpec, d: usize, degree: usize, index: usize) -> Result<Cochain> {
        Self::from_vector(field, d, degree, &SparseVec::unit(index, field))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree(),
            "blocks": self.blocks().iter().map(|b| b.to_json()).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_round_trip() {
        let f = FieldSpec::PrimeField(7);
        for degree in 1..=4 {
            let n = space_dim(2, degree).unwrap();
            for i in [0, n / 3, n - 1] {
                let c = Cochain::basis_element(f, 2, degree, i).unwrap();
                assert_eq!(c.to_vector(), SparseVec::unit(i, f));
                assert_eq!(Cochain::from_vector(f, 2, degree, &c.to_vector()).unwrap(), c);
            }
        }
        assert_eq!(space_dim(6, 3).unwrap(), 2 * 1296);
        assert_eq!(space_dim(6, 4).unwrap(), 3 * 7776);
    }

    #[test]
    fn arity_is_checked() {
        let f = FieldSpec::Rationals;
        let wrong = LinearMap::zero(f, 2, 1, 1);
        assert!(matches!(Cochain::new(2, vec![wrong]), Err(Error::ArityMismatch(_))));
    }
}
