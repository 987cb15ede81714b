use super::echelon::{rref, Rref};
use super::map::LinearMap;
use super::sparse::SparseVec;
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A subspace of `k^n`, held as a reduced row echelon basis.
///
/// Two `SubspaceBasis` values compare equal exactly when they span the same
/// subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    echelon: Rref,
}

impl SubspaceBasis {
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        SubspaceBasis { echelon: rref(field, ambient_dim, vectors) }
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::span(field, ambient_dim, std::iter::empty())
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::span(field, ambient_dim, (0..ambient_dim).map(|i| SparseVec::unit(i, field)))
    }

    pub fn field(&self) -> FieldSpec {
        self.echelon.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.ncols
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.echelon.rows
    }

    pub fn dense_vectors(&self) -> Vec<Vec<Scalar>> {
        self.echelon.rows.iter().map(|v| v.to_dense(self.ambient_dim(), self.field())).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.echelon.pivots
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon.reduce(v).is_zero()
    }

    /// Coordinates of `v` in terms of [`Self::vectors`].
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        self.echelon.coordinates(v)
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.vectors().iter().all(|v| other.contains(v))
    }
}

/// Rank of a map.
pub fn rank(f: &LinearMap) -> usize {
    rref(f.field(), f.cols(), f.sparse_rows()).rank()
}

/// `ker f` as a subspace of `H^⊗in_arity`.
pub fn kernel_basis(f: &LinearMap) -> SubspaceBasis {
    kernel_of_columns(f.field(), f.cols(), f.columns())
}

/// `im f` as a subspace of `H^⊗out_arity`.
pub fn image_basis(f: &LinearMap) -> SubspaceBasis {
    SubspaceBasis::span(f.field(), f.rows(), f.columns())
}

/// Kernel of the matrix whose `j`-th column is `columns[j]`.
pub fn kernel_of_columns(field: FieldSpec, ncols: usize, columns: Vec<SparseVec>) -> SubspaceBasis {
    assert_eq!(columns.len(), ncols);
    let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for (j, col) in columns.into_iter().enumerate() {
        for (i, v) in col.into_entries() {
            if rows.len() <= i {
                rows.resize_with(i + 1, Vec::new);
            }
            rows[i].push((j, v));
        }
    }
    let e = rref(field, ncols, rows.into_iter().map(SparseVec::from_pairs));
    SubspaceBasis::span(field, ncols, e.null_space())
}

/// `dim Z − dim B`, after checking `B ⊆ Z`.
pub fn quotient_dim(z: &SubspaceBasis, b: &SubspaceBasis) -> Result<usize> {
    if z.field() != b.field() {
        return Err(Error::FieldMismatch(z.field(), b.field()));
    }
    if z.ambient_dim() != b.ambient_dim() {
        return Err(Error::ArityMismatch(format!(
            "ambient dimensions differ: {} vs {}",
            z.ambient_dim(),
            b.ambient_dim()
        )));
    }
    if let Some(index) = b.vectors().iter().position(|v| !z.contains(v)) {
        return Err(Error::NotContained { index });
    }
    Ok(z.dim() - b.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn v(vals: &[i64]) -> SparseVec {
        SparseVec::from_dense(&vals.iter().map(|&x| q().from_i64(x)).collect::<Vec<_>>())
    }

    fn ones2() -> LinearMap {
        LinearMap::from_rows(q(), 2, 1, 1, &[vec![q().one(), q().one()], vec![q().one(), q().one()]]).unwrap()
    }

    #[test]
    fn kernel_examples() {
        let z = kernel_basis(&LinearMap::zero(q(), 2, 1, 1));
        assert_eq!(z, SubspaceBasis::full(q(), 2));
        assert_eq!(kernel_basis(&LinearMap::identity(q(), 3, 1)).dim(), 0);
        let k = kernel_basis(&ones2());
        assert_eq!(k.dim(), 1);
        assert_eq!(k.vectors()[0], v(&[1, -1]));
    }

    #[test]
    fn image_examples() {
        assert_eq!(image_basis(&LinearMap::zero(q(), 2, 1, 1)).dim(), 0);
        assert_eq!(image_basis(&LinearMap::identity(q(), 3, 1)), SubspaceBasis::full(q(), 3));
        let im = image_basis(&ones2());
        assert_eq!(im.dim(), 1);
        assert_eq!(im.vectors()[0], v(&[1, 1]));
    }

    #[test]
    fn quotient_examples() {
        let full = SubspaceBasis::full(q(), 2);
        assert_eq!(quotient_dim(&full, &SubspaceBasis::zero(q(), 2)).unwrap(), 2);
        assert_eq!(quotient_dim(&full, &full).unwrap(), 0);
        let b = SubspaceBasis::span(q(), 2, [v(&[1, 1])]);
        assert_eq!(quotient_dim(&full, &b).unwrap(), 1);
        let z = SubspaceBasis::span(q(), 2, [v(&[1, 0])]);
        assert!(matches!(quotient_dim(&z, &b), Err(Error::NotContained { index: 0 })));
    }

    #[test]
    fn echelon_canonicalization() {
        let a = SubspaceBasis::span(q(), 3, [v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = SubspaceBasis::span(q(), 3, [v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
    }
}
