//! Linear maps `H^⊗a → H^⊗b` with exact entries.
//!
//! Basis tuples `(i₁,…,i_k)` of `H^⊗k` are linearized big-endian,
//! `index = Σ i_m · d^(k−m)`, so `e_i ⊗ e_j` sits at `i·d + j`. `H^⊗0` is
//! the one-dimensional ground field.

use std::fmt;

use rayon::prelude::*;

use super::sparse::{Accumulator, SparseVec};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Matrices below this fill ratio are kept as per-column coordinate lists.
pub const DENSE_THRESHOLD: f64 = 0.10;

#[derive(Clone)]
enum Storage {
    /// Column-major.
    Dense(Vec<Scalar>),
    Sparse(Vec<SparseVec>),
}

#[derive(Clone)]
pub struct LinearMap {
    field: FieldSpec,
    base_dim: usize,
    in_arity: usize,
    out_arity: usize,
    storage: Storage,
}

pub fn tensor_power_dim(d: usize, k: usize) -> usize {
    d.pow(k as u32)
}

/// Big-endian digits of `index` in base `d`, `k` of them.
pub fn index_to_tuple(mut index: usize, d: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in (0..k).rev() {
        out[slot] = index % d;
        index /= d;
    }
    out
}

pub fn tuple_to_index(tuple: &[usize], d: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * d + i)
}

impl LinearMap {
    /// Builds a map from its columns (images of the basis of `H^⊗in_arity`).
    pub fn from_columns(
        field: FieldSpec,
        base_dim: usize,
        in_arity: usize,
        out_arity: usize,
        columns: Vec<SparseVec>,
    ) -> Self {
        let rows = tensor_power_dim(base_dim, out_arity);
        let cols = tensor_power_dim(base_dim, in_arity);
        assert_eq!(columns.len(), cols, "column count does not match input arity");
        debug_assert!(columns.iter().all(|c| c.iter().all(|(i, v)| *i < rows && v.field() == field)));
        let nnz: usize = columns.iter().map(SparseVec::nnz).sum();
        let density = if rows * cols == 0 { 0.0 } else { nnz as f64 / (rows * cols) as f64 };
        let storage = if density >= DENSE_THRESHOLD && rows * cols <= 1 << 20 {
            let mut data = vec![field.zero(); rows * cols];
            for (j, col) in columns.into_iter().enumerate() {
                for (i, v) in col.into_entries() {
                    data[j * rows + i] = v;
                }
            }
            Storage::Dense(data)
        } else {
            Storage::Sparse(columns)
        };
        LinearMap { field, base_dim, in_arity, out_arity, storage }
    }

    /// Builds a map column by column; columns are computed in parallel.
    pub fn from_fn<F>(field: FieldSpec, base_dim: usize, in_arity: usize, out_arity: usize, f: F) -> Self
    where
        F: Fn(usize) -> SparseVec + Sync + Send,
    {
        let cols = tensor_power_dim(base_dim, in_arity);
        let columns: Vec<SparseVec> = (0..cols).into_par_iter().map(f).collect();
        Self::from_columns(field, base_dim, in_arity, out_arity, columns)
    }

    /// Row-major rows of scalars.
    pub fn from_rows(
        field: FieldSpec,
        base_dim: usize,
        in_arity: usize,
        out_arity: usize,
        rows: &[Vec<Scalar>],
    ) -> Result<Self> {
        let nrows = tensor_power_dim(base_dim, out_arity);
        let ncols = tensor_power_dim(base_dim, in_arity);
        if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ArityMismatch(format!(
                "expected a {nrows}x{ncols} matrix for arities {in_arity}→{out_arity} over dim {base_dim}"
            )));
        }
        let mut columns = vec![Vec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.field() != field {
                    return Err(Error::FieldMismatch(field, v.field()));
                }
                if !v.is_zero() {
                    columns[j].push((i, v.clone()));
                }
            }
        }
        Ok(Self::from_columns(
            field,
            base_dim,
            in_arity,
            out_arity,
            columns.into_iter().map(SparseVec::from_pairs).collect(),
        ))
    }

    pub fn zero(field: FieldSpec, base_dim: usize, in_arity: usize, out_arity: usize) -> Self {
        let cols = tensor_power_dim(base_dim, in_arity);
        Self::from_columns(field, base_dim, in_arity, out_arity, vec![SparseVec::new(); cols])
    }

    pub fn identity(field: FieldSpec, base_dim: usize, arity: usize) -> Self {
        let n = tensor_power_dim(base_dim, arity);
        Self::from_columns(field, base_dim, arity, arity, (0..n).map(|j| SparseVec::unit(j, field)).collect())
    }

    /// Permutes tensor slots: output slot `k` carries input slot `perm[k]`.
    pub fn permutation(field: FieldSpec, base_dim: usize, perm: &[usize]) -> Self {
        let k = perm.len();
        let mut seen = vec![false; k];
        for &p in perm {
            assert!(p < k && !seen[p], "not a permutation: {perm:?}");
            seen[p] = true;
        }
        let n = tensor_power_dim(base_dim, k);
        let columns = (0..n)
            .map(|j| {
                let t = index_to_tuple(j, base_dim, k);
                let out: Vec<usize> = perm.iter().map(|&p| t[p]).collect();
                SparseVec::unit(tuple_to_index(&out, base_dim), field)
            })
            .collect();
        Self::from_columns(field, base_dim, k, k, columns)
    }

    /// The transposition τ(x ⊗ y) = y ⊗ x.
    pub fn swap(field: FieldSpec, base_dim: usize) -> Self {
        Self::permutation(field, base_dim, &[1, 0])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn in_arity(&self) -> usize {
        self.in_arity
    }

    pub fn out_arity(&self) -> usize {
        self.out_arity
    }

    pub fn rows(&self) -> usize {
        tensor_power_dim(self.base_dim, self.out_arity)
    }

    pub fn cols(&self) -> usize {
        tensor_power_dim(self.base_dim, self.in_arity)
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse(_))
    }

    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Dense(d) => d.iter().filter(|v| !v.is_zero()).count(),
            Storage::Sparse(c) => c.iter().map(SparseVec::nnz).sum(),
        }
    }

    pub fn density(&self) -> f64 {
        let total = self.rows() * self.cols();
        if total == 0 {
            0.0
        } else {
            self.nnz() as f64 / total as f64
        }
    }

    pub fn column(&self, j: usize) -> SparseVec {
        match &self.storage {
            Storage::Sparse(c) => c[j].clone(),
            Storage::Dense(d) => {
                let r = self.rows();
                SparseVec::from_dense(&d[j * r..(j + 1) * r])
            }
        }
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        (0..self.cols()).map(|j| self.column(j)).collect()
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        match &self.storage {
            Storage::Sparse(c) => c[col].get(row).cloned().unwrap_or_else(|| self.field.zero()),
            Storage::Dense(d) => d[col * self.rows() + row].clone(),
        }
    }

    /// Image of a coordinate vector of `H^⊗in_arity`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::default();
        for (j, c) in v.iter() {
            match &self.storage {
                Storage::Sparse(cols) => {
                    for (i, x) in cols[*j].iter() {
                        acc.add(*i, &(x * c));
                    }
                }
                Storage::Dense(d) => {
                    let r = self.rows();
                    for (i, x) in d[j * r..(j + 1) * r].iter().enumerate() {
                        if !x.is_zero() {
                            acc.add(i, &(x * c));
                        }
                    }
                }
            }
        }
        acc.finish()
    }

    pub fn apply_to_basis(&self, tuple: &[usize]) -> SparseVec {
        assert_eq!(tuple.len(), self.in_arity);
        self.column(tuple_to_index(tuple, self.base_dim))
    }

    fn check_compatible(&self, other: &LinearMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.base_dim != other.base_dim {
            return Err(Error::ArityMismatch(format!(
                "base dimensions differ: {} vs {}",
                self.base_dim, other.base_dim
            )));
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &LinearMap) -> Result<()> {
        self.check_compatible(other)?;
        if self.in_arity != other.in_arity || self.out_arity != other.out_arity {
            return Err(Error::ArityMismatch(format!(
                "{}→{} vs {}→{}",
                self.in_arity, self.out_arity, other.in_arity, other.out_arity
            )));
        }
        Ok(())
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &LinearMap) -> Result<LinearMap> {
        self.check_compatible(f)?;
        if f.out_arity != self.in_arity {
            return Err(Error::ArityMismatch(format!(
                "cannot compose {}→{} after {}→{}",
                self.in_arity, self.out_arity, f.in_arity, f.out_arity
            )));
        }
        let columns: Vec<SparseVec> =
            (0..f.cols()).into_par_iter().map(|j| self.apply(&f.column(j))).collect();
        Ok(LinearMap::from_columns(self.field, self.base_dim, f.in_arity, self.out_arity, columns))
    }

    /// Kronecker product: `(f ⊗ g)(e_i ⊗ e_j) = f(e_i) ⊗ g(e_j)`.
    pub fn tensor(&self, g: &LinearMap) -> Result<LinearMap> {
        self.check_compatible(g)?;
        let (gc, gr) = (g.cols(), g.rows());
        let g_cols = g.columns();
        let f_cols = self.columns();
        let columns = (0..self.cols() * gc)
            .map(|j| {
                let (jf, jg) = (j / gc, j % gc);
                let mut out = Vec::with_capacity(f_cols[jf].nnz() * g_cols[jg].nnz());
                for (i, x) in f_cols[jf].iter() {
                    for (k, y) in g_cols[jg].iter() {
                        out.push((i * gr + k, x * y));
                    }
                }
                SparseVec::from_pairs(out)
            })
            .collect();
        Ok(LinearMap::from_columns(
            self.field,
            self.base_dim,
            self.in_arity + g.in_arity,
            self.out_arity + g.out_arity,
            columns,
        ))
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.combine(&self.field.one(), other)
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.combine(&-self.field.one(), other)
    }

    /// `self + c·other`.
    pub fn combine(&self, c: &Scalar, other: &LinearMap) -> Result<LinearMap> {
        self.check_same_shape(other)?;
        let columns = (0..self.cols())
            .map(|j| self.column(j).add_scaled(c, &other.column(j)))
            .collect();
        Ok(LinearMap::from_columns(self.field, self.base_dim, self.in_arity, self.out_arity, columns))
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        let columns = (0..self.cols()).map(|j| self.column(j).scale(c)).collect();
        LinearMap::from_columns(self.field, self.base_dim, self.in_arity, self.out_arity, columns)
    }

    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Dense(d) => d.iter().all(Scalar::is_zero),
            Storage::Sparse(c) => c.iter().all(SparseVec::is_zero),
        }
    }

    /// First column (in index order) where the two maps differ.
    pub fn first_difference(&self, other: &LinearMap) -> Option<usize> {
        (0..self.cols().max(other.cols())).find(|&j| {
            j >= self.cols() || j >= other.cols() || self.column(j) != other.column(j)
        })
    }

    /// Coordinates in `Hom(H^⊗a, H^⊗b)` w.r.t. the elementary maps
    /// `E_{out,in}` ordered by output index, then input index.
    pub fn to_hom_vector(&self) -> SparseVec {
        let cols = self.cols();
        let mut pairs = Vec::with_capacity(self.nnz());
        for j in 0..cols {
            for (i, v) in self.column(j).iter() {
                pairs.push((i * cols + j, v.clone()));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    pub fn from_hom_vector(
        field: FieldSpec,
        base_dim: usize,
        in_arity: usize,
        out_arity: usize,
        v: &SparseVec,
    ) -> Self {
        let cols = tensor_power_dim(base_dim, in_arity);
        let mut columns = vec![Vec::new(); cols];
        for (k, x) in v.iter() {
            columns[k % cols].push((k / cols, x.clone()));
        }
        LinearMap::from_columns(
            field,
            base_dim,
            in_arity,
            out_arity,
            columns.into_iter().map(SparseVec::from_pairs).collect(),
        )
    }

    /// The elementary map sending basis input `input` to basis output `output`.
    pub fn elementary(
        field: FieldSpec,
        base_dim: usize,
        in_arity: usize,
        out_arity: usize,
        output: usize,
        input: usize,
    ) -> Self {
        let cols = tensor_power_dim(base_dim, in_arity);
        let mut columns = vec![SparseVec::new(); cols];
        columns[input] = SparseVec::unit(output, field);
        LinearMap::from_columns(field, base_dim, in_arity, out_arity, columns)
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![self.field.zero(); self.cols()]; self.rows()];
        for j in 0..self.cols() {
            for (i, v) in self.column(j).iter() {
                rows[*i][j] = v.clone();
            }
        }
        rows
    }

    /// Row vectors as sparse vectors (the transpose's columns).
    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows()];
        for j in 0..self.cols() {
            for (i, v) in self.column(j).iter() {
                rows[*i].push((j, v.clone()));
            }
        }
        rows.into_iter().map(SparseVec::from_pairs).collect()
    }

    pub fn require_square(&self) -> Result<()> {
        if self.in_arity != self.out_arity {
            return Err(Error::NotSquare { rows: self.rows(), cols: self.cols() });
        }
        Ok(())
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<LinearMap> {
        self.require_square()?;
        let n = self.rows();
        let field = self.field;
        let mut a = self.to_dense_rows();
        let mut inv: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(c, p);
            inv.swap(c, p);
            let pinv = a[c][c].inv()?;
            for j in 0..n {
                a[c][j] = &a[c][j] * &pinv;
                inv[c][j] = &inv[c][j] * &pinv;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let factor = a[r][c].clone();
                    for j in 0..n {
                        let t = &a[c][j] * &factor;
                        a[r][j] -= &t;
                        let t = &inv[c][j] * &factor;
                        inv[r][j] -= &t;
                    }
                }
            }
        }
        LinearMap::from_rows(field, self.base_dim, self.in_arity, self.out_arity, &inv)
    }

    /// `(row, col, value)` triples of the nonzero entries, column-major.
    pub fn triples(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::with_capacity(self.nnz());
        for j in 0..self.cols() {
            for (i, v) in self.column(j).iter() {
                out.push((*i, j, v.clone()));
            }
        }
        out
    }

    /// JSON dump used by `--dump-matrix`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "field": self.field.to_string(),
            "base_dim": self.base_dim,
            "in_arity": self.in_arity,
            "out_arity": self.out_arity,
            "entries": self.triples().iter().map(|(r, c, v)| serde_json::json!([r, c, v.to_json()])).collect::<Vec<_>>(),
        })
    }
}

impl PartialEq for LinearMap {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.base_dim == other.base_dim
            && self.in_arity == other.in_arity
            && self.out_arity == other.out_arity
            && self.first_difference(other).is_none()
    }
}

impl Eq for LinearMap {}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "LinearMap {}→{} over {} (d={}, {})",
            self.in_arity,
            self.out_arity,
            self.field,
            self.base_dim,
            if self.is_sparse() { "sparse" } else { "dense" }
        )?;
        if self.rows() * self.cols() <= 400 {
            for row in self.to_dense_rows() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn big_endian_indexing() {
        assert_eq!(tuple_to_index(&[1, 2], 3), 5);
        assert_eq!(index_to_tuple(5, 3, 2), vec![1, 2]);
        assert_eq!(index_to_tuple(0, 3, 0), Vec::<usize>::new());
    }

    #[test]
    fn swap_is_an_involution() {
        let t = LinearMap::swap(q(), 3);
        assert_eq!(t.compose(&t).unwrap(), LinearMap::identity(q(), 3, 2));
        // τ(e_0 ⊗ e_1) = e_1 ⊗ e_0
        assert_eq!(t.apply_to_basis(&[0, 1]), SparseVec::unit(3, q()));
    }

    #[test]
    fn identity_composition_law() {
        let f = LinearMap::from_fn(q(), 4, 2, 1, |j| SparseVec::unit(j % 4, q()).scale(&q().from_i64(j as i64)));
        let id2 = LinearMap::identity(q(), 4, 2);
        let id1 = LinearMap::identity(q(), 4, 1);
        assert_eq!(f.compose(&id2).unwrap(), f);
        assert_eq!(id1.compose(&f).unwrap(), f);
        assert!(matches!(f.compose(&id1), Err(Error::ArityMismatch(_))));
    }

    #[test]
    fn storage_choice_follows_density() {
        assert!(LinearMap::identity(q(), 2, 1).rows() == 2);
        assert!(!LinearMap::identity(q(), 2, 1).is_sparse());
        assert!(LinearMap::identity(q(), 4, 2).is_sparse());
        // semantic equality across storage kinds
        let dense = LinearMap::from_rows(q(), 2, 1, 1, &[vec![q().one(), q().zero()], vec![q().zero(), q().one()]]).unwrap();
        assert_eq!(dense, LinearMap::identity(q(), 2, 1));
    }

    #[test]
    fn inverse_of_permutation() {
        let p = LinearMap::permutation(q(), 2, &[2, 0, 1]);
        let pinv = p.inverse().unwrap();
        assert_eq!(p.compose(&pinv).unwrap(), LinearMap::identity(q(), 2, 3));
        let z = LinearMap::zero(q(), 2, 1, 1);
        assert!(matches!(z.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn hom_vector_round_trip() {
        let f = LinearMap::elementary(q(), 3, 2, 1, 2, 7);
        let v = f.to_hom_vector();
        assert_eq!(v, SparseVec::unit(2 * 9 + 7, q()));
        assert_eq!(LinearMap::from_hom_vector(q(), 3, 2, 1, &v), f);
    }
}
