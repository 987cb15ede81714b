//! Incremental reduced row echelon form over ℚ and 𝔽_p.
//!
//! Rows are fed one at a time and reduced against the current pivot rows,
//! which are kept fully reduced (zero in every other pivot column). Over ℚ
//! the rows are held as primitive integer vectors and eliminated
//! fraction-free: `r ← a·r − b·s` followed by division by the content, so
//! no rational arithmetic happens until the final normalization. Over 𝔽_p
//! this is ordinary Gauss–Jordan on `u64` residues.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::sparse::SparseVec;
use crate::scalar::{FieldSpec, Scalar};

/// A matrix in reduced row echelon form, leftmost pivots, pivot entries 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub field: FieldSpec,
    pub ncols: usize,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after reduction by the rows; zero iff `v` lies in the row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = r.get(p).cloned() {
                r = r.add_scaled(&-c, row);
            }
        }
        r
    }

    /// Coordinates of `v` w.r.t. the rows, if `v` lies in their span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self
            .pivots
            .iter()
            .map(|&p| v.get(p).cloned().unwrap_or_else(|| self.field.zero()))
            .collect();
        let mut r = v.clone();
        for (row, c) in self.rows.iter().zip(&coords) {
            r = r.add_scaled(&-c.clone(), row);
        }
        r.is_zero().then_some(coords)
    }

    /// Basis of `{x : row·x = 0 for every row}`, one vector per free column.
    pub fn null_space(&self) -> Vec<SparseVec> {
        let is_pivot: HashMap<usize, usize> = self.pivots.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let mut out = Vec::new();
        for free in 0..self.ncols {
            if is_pivot.contains_key(&free) {
                continue;
            }
            let mut pairs = vec![(free, self.field.one())];
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if let Some(v) = row.get(free) {
                    pairs.push((p, -v.clone()));
                }
            }
            out.push(SparseVec::from_pairs(pairs));
        }
        out
    }
}

/// Row reduction of the span of `rows`.
pub fn rref(field: FieldSpec, ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Rref {
    match field {
        FieldSpec::Rationals => {
            let mut e = Engine::new(IntegerRows);
            for r in rows {
                e.insert(IntegerRows::from_scalars(&r));
            }
            e.finish_rational(ncols)
        }
        FieldSpec::PrimeField(p) => {
            let mut e = Engine::new(ModRows(p));
            for r in rows {
                e.insert(ModRows::from_scalars(&r));
            }
            e.finish_modular(ncols, p)
        }
    }
}

type Row<E> = Vec<(usize, E)>;

trait RowArith {
    type E: Clone;
    fn is_zero(e: &Self::E) -> bool;
    /// `target` with column `col` cleared using `pivot_row` (whose entry at `col` is its pivot).
    fn eliminate(&self, target: &Row<Self::E>, pivot_row: &Row<Self::E>, col: usize) -> Row<Self::E>;
    /// Canonical scaling of a fresh pivot row.
    fn normalize(&self, row: Row<Self::E>) -> Row<Self::E>;
}

fn lookup<E>(row: &Row<E>, col: usize) -> Option<&E> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &row[k].1)
}

/// Merges `a·x + b·y` for sparse rows, dropping zeros.
fn merge<E: Clone>(
    x: &Row<E>,
    y: &Row<E>,
    mut fx: impl FnMut(&E) -> E,
    mut fy: impl FnMut(&E) -> E,
    mut both: impl FnMut(&E, &E) -> E,
    is_zero: impl Fn(&E) -> bool,
) -> Row<E> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take = if i == x.len() {
            1
        } else if j == y.len() {
            0
        } else if x[i].0 < y[j].0 {
            0
        } else if y[j].0 < x[i].0 {
            1
        } else {
            2
        };
        let (c, v) = match take {
            0 => {
                i += 1;
                (x[i - 1].0, fx(&x[i - 1].1))
            }
            1 => {
                j += 1;
                (y[j - 1].0, fy(&y[j - 1].1))
            }
            _ => {
                i += 1;
                j += 1;
                (x[i - 1].0, both(&x[i - 1].1, &y[j - 1].1))
            }
        };
        if !is_zero(&v) {
            out.push((c, v));
        }
    }
    out
}

struct ModRows(u64);

impl ModRows {
    fn from_scalars(v: &SparseVec) -> Row<u64> {
        v.iter()
            .map(|(i, s)| match s {
                Scalar::Modular { value, .. } => (*i, *value),
                Scalar::Rational(_) => panic!("rational entry in a modular elimination"),
            })
            .collect()
    }

    fn inv(&self, a: u64) -> u64 {
        let p = self.0;
        let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }
}

impl RowArith for ModRows {
    type E = u64;

    fn is_zero(e: &u64) -> bool {
        *e == 0
    }

    fn eliminate(&self, target: &Row<u64>, pivot_row: &Row<u64>, col: usize) -> Row<u64> {
        let p = self.0;
        let b = *lookup(target, col).expect("column present in target");
        let nb = (p - b) % p;
        merge(target, pivot_row, |x| *x, |y| y * nb % p, |x, y| (x + y * nb) % p, Self::is_zero)
    }

    fn normalize(&self, row: Row<u64>) -> Row<u64> {
        let p = self.0;
        let lead_inv = self.inv(row[0].1);
        row.into_iter().map(|(c, v)| (c, v * lead_inv % p)).collect()
    }
}

struct IntegerRows;

impl IntegerRows {
    fn from_scalars(v: &SparseVec) -> Row<BigInt> {
        let mut lcm = BigInt::one();
        for (_, s) in v.iter() {
            match s {
                Scalar::Rational(r) => lcm = lcm.lcm(r.denom()),
                Scalar::Modular { .. } => panic!("modular entry in a rational elimination"),
            }
        }
        let row = v
            .iter()
            .map(|(i, s)| {
                let r = s.as_rational();
                (*i, r.numer() * (&lcm / r.denom()))
            })
            .collect();
        Self::primitive(row)
    }

    fn primitive(row: Row<BigInt>) -> Row<BigInt> {
        let mut g = BigInt::zero();
        for (_, v) in &row {
            g = g.gcd(v);
            if g.is_one() {
                return row;
            }
        }
        if g.is_zero() || g.is_one() {
            return row;
        }
        row.into_iter().map(|(c, v)| (c, v / &g)).collect()
    }
}

impl RowArith for IntegerRows {
    type E = BigInt;

    fn is_zero(e: &BigInt) -> bool {
        e.is_zero()
    }

    fn eliminate(&self, target: &Row<BigInt>, pivot_row: &Row<BigInt>, col: usize) -> Row<BigInt> {
        let a = lookup(pivot_row, col).expect("pivot present").clone();
        let b = lookup(target, col).expect("column present in target").clone();
        // a·target − b·pivot_row, divided through by gcd(a, b) first
        let g = a.gcd(&b);
        let (a, b) = (&a / &g, &b / &g);
        let nb = -b;
        let row = merge(
            target,
            pivot_row,
            |x| x * &a,
            |y| y * &nb,
            |x, y| x * &a + y * &nb,
            Self::is_zero,
        );
        Self::primitive(row)
    }

    fn normalize(&self, row: Row<BigInt>) -> Row<BigInt> {
        let row = Self::primitive(row);
        if row[0].1.is_negative() {
            row.into_iter().map(|(c, v)| (c, -v)).collect()
        } else {
            row
        }
    }
}

struct Engine<A: RowArith> {
    arith: A,
    rows: Vec<Row<A::E>>,
    pivot_cols: Vec<usize>,
    pivot_index: HashMap<usize, usize>,
}

impl<A: RowArith> Engine<A> {
    fn new(arith: A) -> Self {
        Engine { arith, rows: Vec::new(), pivot_cols: Vec::new(), pivot_index: HashMap::new() }
    }

    fn insert(&mut self, mut r: Row<A::E>) {
        // Entries in pivot columns only disappear during reduction; no new ones appear.
        let hits: Vec<usize> = r.iter().map(|(c, _)| *c).filter(|c| self.pivot_index.contains_key(c)).collect();
        for c in hits {
            if lookup(&r, c).is_some() {
                let k = self.pivot_index[&c];
                r = self.arith.eliminate(&r, &self.rows[k], c);
            }
        }
        if r.is_empty() {
            return;
        }
        let r = self.arith.normalize(r);
        let lead = r[0].0;
        for k in 0..self.rows.len() {
            if lookup(&self.rows[k], lead).is_some() {
                self.rows[k] = self.arith.eliminate(&self.rows[k], &r, lead);
            }
        }
        self.pivot_index.insert(lead, self.rows.len());
        self.pivot_cols.push(lead);
        self.rows.push(r);
    }

    fn sorted(self) -> Vec<(usize, Row<A::E>)> {
        let mut v: Vec<(usize, Row<A::E>)> = self.pivot_cols.into_iter().zip(self.rows).collect();
        v.sort_by_key(|(p, _)| *p);
        v
    }
}

impl Engine<IntegerRows> {
    fn finish_rational(self, ncols: usize) -> Rref {
        let sorted = self.sorted();
        let pivots = sorted.iter().map(|(p, _)| *p).collect();
        let rows = sorted
            .into_iter()
            .map(|(_, row)| {
                let lead = row[0].1.clone();
                SparseVec::from_pairs(
                    row.into_iter()
                        .map(|(c, v)| (c, Scalar::Rational(BigRational::new(v, lead.clone())))),
                )
            })
            .collect();
        Rref { field: FieldSpec::Rationals, ncols, pivots, rows }
    }
}

impl Engine<ModRows> {
    fn finish_modular(self, ncols: usize, p: u64) -> Rref {
        let sorted = self.sorted();
        let pivots = sorted.iter().map(|(p, _)| *p).collect();
        let rows = sorted
            .into_iter()
            .map(|(_, row)| {
                SparseVec::from_pairs(row.into_iter().map(|(c, v)| (c, Scalar::Modular { value: v, modulus: p })))
            })
            .collect();
        Rref { field: FieldSpec::PrimeField(p), ncols, pivots, rows }
    }
}

/// Determinant by Bareiss fraction-free elimination (ℚ) or Gauss (𝔽_p).
pub fn determinant(field: FieldSpec, rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    if n == 0 {
        return field.one();
    }
    match field {
        FieldSpec::Rationals => {
            // clear denominators row by row, remembering the scaling
            let mut scale = BigRational::one();
            let mut m: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|row| {
                    let l = row.iter().fold(BigInt::one(), |acc, s| acc.lcm(s.as_rational().denom()));
                    scale *= BigRational::from_integer(l.clone());
                    row.iter().map(|s| {
                        let r = s.as_rational();
                        r.numer() * (&l / r.denom())
                    }).collect()
                })
                .collect();
            let mut sign = BigInt::one();
            let mut prev = BigInt::one();
            for k in 0..n - 1 {
                if m[k][k].is_zero() {
                    match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                        Some(r) => {
                            m.swap(k, r);
                            sign = -sign;
                        }
                        None => return field.zero(),
                    }
                }
                for i in k + 1..n {
                    for j in k + 1..n {
                        let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                        m[i][j] = v;
                    }
                }
                prev = m[k][k].clone();
            }
            let det = BigRational::from_integer(sign * &m[n - 1][n - 1]) / scale;
            Scalar::Rational(det)
        }
        FieldSpec::PrimeField(_) => {
            let mut m: Vec<Vec<Scalar>> = rows.to_vec();
            let mut det = field.one();
            for k in 0..n {
                let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                    return field.zero();
                };
                if p != k {
                    m.swap(k, p);
                    det = -det;
                }
                det = &det * &m[k][k];
                let inv = m[k][k].inv().expect("nonzero pivot");
                for i in k + 1..n {
                    if m[i][k].is_zero() {
                        continue;
                    }
                    let f = &m[i][k] * &inv;
                    for j in k..n {
                        let t = &m[k][j] * &f;
                        m[i][j] -= &t;
                    }
                }
            }
            det
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecq(vals: &[i64]) -> SparseVec {
        let f = FieldSpec::Rationals;
        SparseVec::from_dense(&vals.iter().map(|&v| f.from_i64(v)).collect::<Vec<_>>())
    }

    #[test]
    fn canonical_form_is_independent_of_input_order() {
        let a = rref(FieldSpec::Rationals, 3, vec![vecq(&[1, 2, 3]), vecq(&[2, 4, 7])]);
        let b = rref(FieldSpec::Rationals, 3, vec![vecq(&[3, 6, 10]), vecq(&[0, 0, 5]), vecq(&[1, 2, 3])]);
        assert_eq!(a, b);
        assert_eq!(a.pivots, vec![0, 2]);
        assert_eq!(a.rows[0], vecq(&[1, 2, 0]));
    }

    #[test]
    fn null_space_is_annihilated() {
        let f = FieldSpec::PrimeField(7);
        let rows: Vec<SparseVec> = [[1, 2, 3, 4], [2, 4, 6, 1], [0, 1, 1, 1]]
            .iter()
            .map(|r| SparseVec::from_dense(&r.iter().map(|&v| f.from_i64(v)).collect::<Vec<_>>()))
            .collect();
        let e = rref(f, 4, rows.clone());
        for k in e.null_space() {
            for r in &rows {
                let dot = r.iter().fold(f.zero(), |acc, (i, v)| &acc + &(v * &k.get(*i).cloned().unwrap_or(f.zero())));
                assert!(dot.is_zero());
            }
        }
        assert_eq!(e.rank() + e.null_space().len(), 4);
    }

    #[test]
    fn bareiss_determinant() {
        let f = FieldSpec::Rationals;
        let m: Vec<Vec<Scalar>> = [[2, 0, 1], [1, 3, 2], [1, 1, 1]]
            .iter()
            .map(|r| r.iter().map(|&v| f.from_i64(v)).collect())
            .collect();
        // 2(3−2) − 0 + 1(1−3) = 0
        assert!(determinant(f, &m).is_zero());
        let m: Vec<Vec<Scalar>> = [[0, 1], [1, 0]].iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect();
        assert_eq!(determinant(f, &m), f.from_i64(-1));
        let half = f.parse_scalar("1/2").unwrap();
        let m = vec![vec![half.clone(), f.one()], vec![f.zero(), half]];
        assert_eq!(determinant(f, &m), f.parse_scalar("1/4").unwrap());
    }
}
