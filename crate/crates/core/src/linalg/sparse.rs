use std::collections::BTreeMap;

use crate::scalar::{FieldSpec, Scalar};

/// Sparse coordinate vector: strictly increasing indices, no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize, field: FieldSpec) -> Self {
        SparseVec { entries: vec![(index, field.one())] }
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Accumulator::default();
        for (i, v) in pairs {
            acc.add(i, &v);
        }
        acc.finish()
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, field: FieldSpec) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c·other` by merging.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub(crate) fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect() }
    }
}

/// Collects sums of contributions keyed by index.
#[derive(Debug, Default)]
pub struct Accumulator {
    map: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn add(&mut self, index: usize, value: &Scalar) {
        if value.is_zero() {
            return;
        }
        match self.map.get_mut(&index) {
            Some(v) => *v += value,
            None => {
                self.map.insert(index, value.clone());
            }
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec {
            entries: self.map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_cancels_entries() {
        let f = FieldSpec::Rationals;
        let a = SparseVec::from_pairs([(0, f.from_i64(1)), (3, f.from_i64(2))]);
        let b = SparseVec::from_pairs([(3, f.from_i64(1)), (5, f.from_i64(7))]);
        let c = a.add_scaled(&f.from_i64(-2), &b);
        assert_eq!(c, SparseVec::from_pairs([(0, f.from_i64(1)), (5, f.from_i64(-14))]));
        assert_eq!(c.get(3), None);
        assert_eq!(c.to_dense(6, f)[5], f.from_i64(-14));
    }
}
