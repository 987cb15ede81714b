//! Composites of tensor products of maps, evaluated slot by slot.
//!
//! A formula such as `(ad ⊗ μ)(1 ⊗ τ ⊗ 1)(Δ ⊗ Δ)` is written as a list of
//! stages in the same left-to-right order:
//!
//! ```
//! # use hopf_adjoint::linalg::{Chain, id, stage, LinearMap};
//! # use hopf_adjoint::scalar::FieldSpec;
//! # let f = FieldSpec::Rationals;
//! # let tau = LinearMap::swap(f, 2);
//! let twist = Chain::new(f, 2, vec![stage![id(1), &tau], stage![&tau, id(1)]]).unwrap();
//! assert_eq!(twist.in_arity(), 3);
//! ```
//!
//! Each factor acts on its own block of tensor slots; identities are skipped,
//! so no Kronecker product with an identity is ever materialized.

use rayon::prelude::*;

use super::map::{tensor_power_dim, LinearMap};
use super::sparse::{Accumulator, SparseVec};
use crate::error::{Error, Result};
use crate::scalar::FieldSpec;

/// One tensor factor of a stage.
#[derive(Clone, Copy)]
pub enum Factor<'a> {
    Id(usize),
    Map(&'a LinearMap),
}

/// Identity on `k` tensor slots.
pub fn id(k: usize) -> Factor<'static> {
    Factor::Id(k)
}

impl<'a> From<&'a LinearMap> for Factor<'a> {
    fn from(m: &'a LinearMap) -> Self {
        Factor::Map(m)
    }
}

impl<'a> Factor<'a> {
    fn arities(&self) -> (usize, usize) {
        match self {
            Factor::Id(k) => (*k, *k),
            Factor::Map(m) => (m.in_arity(), m.out_arity()),
        }
    }
}

/// A tensor product of factors.
pub struct Stage<'a>(pub Vec<Factor<'a>>);

#[macro_export]
macro_rules! stage {
    ($($f:expr),* $(,)?) => {
        $crate::linalg::Stage(vec![$($crate::linalg::Factor::from($f)),*])
    };
}

impl<'a> Stage<'a> {
    pub fn in_arity(&self) -> usize {
        self.0.iter().map(|f| f.arities().0).sum()
    }

    pub fn out_arity(&self) -> usize {
        self.0.iter().map(|f| f.arities().1).sum()
    }
}

struct Prepared {
    /// Slot position of the factor's input block (after earlier factors ran).
    pos: usize,
    in_arity: usize,
    out_arity: usize,
    columns: Vec<SparseVec>,
}

struct PreparedStage {
    in_arity: usize,
    factors: Vec<Prepared>,
}

/// A composite of stages, ready for evaluation on vectors.
pub struct Chain {
    field: FieldSpec,
    base_dim: usize,
    in_arity: usize,
    out_arity: usize,
    /// In application order (the formula's rightmost stage first).
    stages: Vec<PreparedStage>,
}

impl Chain {
    /// `stages` are given in formula order: the last one is applied first.
    pub fn new(field: FieldSpec, base_dim: usize, stages: Vec<Stage<'_>>) -> Result<Chain> {
        if stages.is_empty() {
            return Err(Error::ArityMismatch("empty composite".into()));
        }
        for st in &stages {
            for f in &st.0 {
                if let Factor::Map(m) = f {
                    if m.field() != field {
                        return Err(Error::FieldMismatch(field, m.field()));
                    }
                    if m.base_dim() != base_dim {
                        return Err(Error::ArityMismatch(format!(
                            "factor over dimension {} in a composite over dimension {base_dim}",
                            m.base_dim()
                        )));
                    }
                }
            }
        }
        for w in stages.windows(2) {
            if w[0].in_arity() != w[1].out_arity() {
                return Err(Error::ArityMismatch(format!(
                    "stage with input arity {} follows a stage with output arity {}",
                    w[0].in_arity(),
                    w[1].out_arity()
                )));
            }
        }
        let in_arity = stages.last().unwrap().in_arity();
        let out_arity = stages[0].out_arity();
        let prepared = stages
            .iter()
            .rev()
            .map(|st| {
                let mut pos = 0;
                let mut factors = Vec::new();
                for f in &st.0 {
                    match f {
                        Factor::Id(k) => pos += k,
                        Factor::Map(m) => {
                            factors.push(Prepared {
                                pos,
                                in_arity: m.in_arity(),
                                out_arity: m.out_arity(),
                                columns: m.columns(),
                            });
                            pos += m.out_arity();
                        }
                    }
                }
                PreparedStage { in_arity: st.in_arity(), factors }
            })
            .collect();
        Ok(Chain { field, base_dim, in_arity, out_arity, stages: prepared })
    }

    pub fn in_arity(&self) -> usize {
        self.in_arity
    }

    pub fn out_arity(&self) -> usize {
        self.out_arity
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let d = self.base_dim;
        let mut cur = v.clone();
        for st in &self.stages {
            let mut arity = st.in_arity;
            for f in &st.factors {
                if cur.is_zero() {
                    return cur;
                }
                let suffix = arity - f.pos - f.in_arity;
                let suffix_dim = tensor_power_dim(d, suffix);
                let in_dim = tensor_power_dim(d, f.in_arity);
                let out_dim = tensor_power_dim(d, f.out_arity);
                let mut acc = Accumulator::default();
                for (idx, c) in cur.iter() {
                    let suffix_part = idx % suffix_dim;
                    let rest = idx / suffix_dim;
                    let mid = rest % in_dim;
                    let prefix = rest / in_dim;
                    for (o, x) in f.columns[mid].iter() {
                        acc.add((prefix * out_dim + o) * suffix_dim + suffix_part, &(x * c));
                    }
                }
                cur = acc.finish();
                arity = arity - f.in_arity + f.out_arity;
            }
        }
        cur
    }

    pub fn to_map(&self) -> LinearMap {
        let cols = tensor_power_dim(self.base_dim, self.in_arity);
        let columns: Vec<SparseVec> = (0..cols)
            .into_par_iter()
            .map(|j| self.apply(&SparseVec::unit(j, self.field)))
            .collect();
        LinearMap::from_columns(self.field, self.base_dim, self.in_arity, self.out_arity, columns)
    }
}

/// Evaluates a composite written in formula order to a matrix.
pub fn compose_chain(field: FieldSpec, base_dim: usize, stages: Vec<Stage<'_>>) -> Result<LinearMap> {
    Ok(Chain::new(field, base_dim, stages)?.to_map())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_matches_explicit_kronecker_products() {
        let f = FieldSpec::PrimeField(5);
        let d = 3;
        let a = LinearMap::from_fn(f, d, 2, 1, |j| {
            SparseVec::from_pairs([(j % 3, f.from_i64(j as i64 + 1)), ((j * 7) % 3, f.from_i64(2))])
        });
        let b = LinearMap::from_fn(f, d, 1, 2, |j| SparseVec::from_pairs([(j * 4 % 9, f.from_i64(3)), (8 - j, f.one())]));
        let tau = LinearMap::swap(f, d);
        let one = LinearMap::identity(f, d, 1);
        let via_chain = compose_chain(f, d, vec![stage![&a, &b], stage![id(1), &tau], stage![&b, id(1)]]).unwrap();
        let explicit = a
            .tensor(&b)
            .unwrap()
            .compose(&one.tensor(&tau).unwrap())
            .unwrap()
            .compose(&b.tensor(&one).unwrap())
            .unwrap();
        assert_eq!(via_chain, explicit);
    }

    #[test]
    fn rejects_mismatched_stages() {
        let f = FieldSpec::Rationals;
        let tau = LinearMap::swap(f, 2);
        assert!(matches!(
            Chain::new(f, 2, vec![stage![&tau], stage![id(3)]]),
            Err(Error::ArityMismatch(_))
        ));
    }
}
