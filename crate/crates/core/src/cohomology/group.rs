//! Group algebras: diagonal 2-cocycles `φ(x⊗y) = a(x,y)·(x◁y)` and the
//! group-level 3-cocycle identity.

use rayon::prelude::*;

use super::cochain::Cochain;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{rref, tensor_power_dim, LinearMap, SparseVec, SubspaceBasis};
use crate::scalar::{FieldSpec, Scalar};

/// A function `G^arity → k`, stored big-endian like tensor indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFunction {
    pub order: usize,
    pub arity: usize,
    pub values: Vec<Scalar>,
}

impl GroupFunction {
    pub fn zero(field: FieldSpec, order: usize, arity: usize) -> Self {
        Self::constant(field.zero(), order, arity)
    }

    pub fn constant(c: Scalar, order: usize, arity: usize) -> Self {
        GroupFunction { order, arity, values: vec![c; tensor_power_dim(order, arity)] }
    }

    pub fn from_fn(order: usize, arity: usize, mut f: impl FnMut(&[usize]) -> Scalar) -> Self {
        let values = (0..tensor_power_dim(order, arity))
            .map(|i| f(&crate::linalg::index_to_tuple(i, order, arity)))
            .collect();
        GroupFunction { order, arity, values }
    }

    pub fn from_vector(field: FieldSpec, order: usize, arity: usize, v: &SparseVec) -> Self {
        GroupFunction { order, arity, values: v.to_dense(tensor_power_dim(order, arity), field) }
    }

    pub fn to_vector(&self) -> SparseVec {
        SparseVec::from_dense(&self.values)
    }

    pub fn get(&self, args: &[usize]) -> &Scalar {
        debug_assert_eq!(args.len(), self.arity);
        &self.values[crate::linalg::tuple_to_index(args, self.order)]
    }

    pub fn field(&self) -> FieldSpec {
        self.values[0].field()
    }

    /// Label-indexed JSON: `{ "x,y": value }`.
    pub fn to_labelled_json(&self, g: &FiniteGroup) -> serde_json::Value {
        serde_json::Value::Object(
            self.values
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let key = crate::linalg::index_to_tuple(i, self.order, self.arity)
                        .iter()
                        .map(|&x| g.label(x))
                        .collect::<Vec<_>>()
                        .join(",");
                    (key, v.to_json())
                })
                .collect(),
        )
    }
}

/// `a(x,y) + a(x◁y, z) − a(x, yz)` at one triple.
pub fn diagonal_defect(g: &FiniteGroup, a: &GroupFunction, x: usize, y: usize, z: usize) -> Scalar {
    &(a.get(&[x, y]) + a.get(&[g.conj_unchecked(x, y), z])) - a.get(&[x, g.mul(y, z)])
}

/// Solutions `a: G×G → k` of `a(x,y) + a(x◁y,z) − a(x,yz) = 0`.
pub fn diagonal_2cocycles(g: &FiniteGroup, field: FieldSpec) -> SubspaceBasis {
    let n = g.order();
    let rows = (0..n * n * n).map(|t| {
        let (x, y, z) = (t / (n * n), (t / n) % n, t % n);
        SparseVec::from_pairs([
            (x * n + y, field.one()),
            (g.conj_unchecked(x, y) * n + z, field.one()),
            (x * n + g.mul(y, z), field.from_i64(-1)),
        ])
    });
    let e = rref(field, n * n, rows);
    SubspaceBasis::span(field, n * n, e.null_space())
}

/// `φ(x⊗y) = a(x,y)·(x◁y)` on `kG`.
pub fn lift_diagonal(g: &FiniteGroup, a: &GroupFunction) -> Cochain {
    let n = g.order();
    let field = a.field();
    let map = LinearMap::from_fn(field, n, 2, 1, |j| {
        let (x, y) = (j / n, j % n);
        SparseVec::from_pairs([(g.conj_unchecked(x, y), a.get(&[x, y]).clone())])
    });
    Cochain::Deg2(map)
}

/// `c(x,y,z) + c(x,yz,w) = c(x◁y,z,w) + c(x,y,zw)` for all quadruples;
/// returns the first failing one.
pub fn group_3cocycle_failure(g: &FiniteGroup, c: &GroupFunction) -> Option<[usize; 4]> {
    let n = g.order();
    (0..n.pow(4)).into_par_iter().find_first(|&t| {
        let (x, y, z, w) = (t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n);
        let lhs = c.get(&[x, y, z]) + c.get(&[x, g.mul(y, z), w]);
        let rhs = c.get(&[g.conj_unchecked(x, y), z, w]) + c.get(&[x, y, g.mul(z, w)]);
        lhs != rhs
    })
    .map(|t| [t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n])
}

/// Solutions `c: G³ → k` of the group 3-cocycle identity.
pub fn group_3cocycles(g: &FiniteGroup, field: FieldSpec) -> SubspaceBasis {
    let n = g.order();
    let idx = |x: usize, y: usize, z: usize| (x * n + y) * n + z;
    let rows = (0..n.pow(4)).map(|t| {
        let (x, y, z, w) = (t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n);
        let mut row = SparseVec::new();
        for (i, c) in [
            (idx(x, y, z), 1),
            (idx(x, g.mul(y, z), w), 1),
            (idx(g.conj_unchecked(x, y), z, w), -1),
            (idx(x, y, g.mul(z, w)), -1),
        ] {
            row = row.add_scaled(&field.from_i64(c), &SparseVec::unit(i, field));
        }
        row
    });
    let e = rref(field, n * n * n, rows);
    SubspaceBasis::span(field, n * n * n, e.null_space())
}

pub fn check_group_3cocycle(g: &FiniteGroup, c: &GroupFunction) -> bool {
    group_3cocycle_failure(g, c).is_none()
}

/// `c(x,y,z) = a(x,y) + a(x◁y, z) − a(x, yz)`.
pub fn group_3coboundary(g: &FiniteGroup, a: &GroupFunction) -> GroupFunction {
    GroupFunction::from_fn(g.order(), 3, |t| diagonal_defect(g, a, t[0], t[1], t[2]))
}

/// Checks the reduced 2-cocycle identity, reporting the failing triple.
pub fn require_diagonal_cocycle(g: &FiniteGroup, a: &GroupFunction) -> Result<()> {
    let n = g.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !diagonal_defect(g, a, x, y, z).is_zero() {
                    return Err(Error::NotACocycle(vec![x, y, z]));
                }
            }
        }
    }
    Ok(())
}
