//! Finite groups by multiplication table.
//!
//! Products are read left to right: for permutations, `xy` applies `x`
//! first. With conjugation `x ◁ y = y⁻¹xy` this gives `(1 2) ◁ (1 2 3) = (2 3)`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if labels.len() != n {
            return Err(Error::NotAGroup(format!("{} labels for a table of order {n}", labels.len())));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::NotAGroup(format!("entry {bad} in row {i} is out of range")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", labels[x])))?;
            inverse.push(inv);
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[x], labels[y], labels[z]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, table, identity, inverse })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAGroup("cyclic group of order 0".into()));
        }
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(labels, table)
    }

    /// Permutations of `{1..n}` in lexicographic one-line order, labelled
    /// in cycle notation.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::NotAGroup(format!("symmetric group S{n} is not supported (1 ≤ n ≤ 5)")));
        }
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        while let Some(next) = next_permutation(perms.last().unwrap()) {
            perms.push(next);
        }
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|x| perms.iter().map(|y| index(&(0..n).map(|i| y[x[i]]).collect::<Vec<_>>())).collect())
            .collect();
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        Self::from_table(labels, table)
    }

    /// Order `2n`: `r^k s^e` stored at index `e·n + k`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAGroup("dihedral group with n = 0".into()));
        }
        let elem = |i: usize| (i % n, i / n);
        let table = (0..2 * n)
            .map(|a| {
                (0..2 * n)
                    .map(|b| {
                        let ((k1, e1), (k2, e2)) = (elem(a), elem(b));
                        let k = if e1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
                        ((e1 + e2) % 2) * n + k
                    })
                    .collect()
            })
            .collect();
        let labels = (0..2 * n)
            .map(|i| {
                let (k, e) = elem(i);
                let r = match k {
                    0 => String::new(),
                    1 => "r".into(),
                    _ => format!("r^{k}"),
                };
                match (r.is_empty(), e) {
                    (true, 0) => "e".into(),
                    (_, 0) => r,
                    (_, _) => format!("{r}s"),
                }
            })
            .collect();
        Self::from_table(labels, table)
    }

    /// `{ "order": n, "labels": [...], "table": [[...]] }`; labels optional.
    pub fn from_json(v: &Value) -> Result<Self> {
        let table: Vec<Vec<usize>> = serde_json::from_value(
            v.get("table").cloned().ok_or_else(|| Error::Parse("group JSON needs \"table\"".into()))?,
        )?;
        if let Some(order) = v.get("order").and_then(Value::as_u64) {
            if order as usize != table.len() {
                return Err(Error::NotAGroup(format!("order {order} but table has {} rows", table.len())));
            }
        }
        let labels = match v.get("labels") {
            Some(l) => serde_json::from_value(l.clone())?,
            None => (0..table.len()).map(|i| i.to_string()).collect(),
        };
        Self::from_table(labels, table)
    }

    pub fn to_json(&self) -> Value {
        json!({ "order": self.order(), "labels": self.labels, "table": self.table })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|x| (0..self.order()).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// `x ◁ y = y⁻¹ x y`; unchecked indices.
    pub fn conj_unchecked(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn conj(&self, x: usize, y: usize) -> Result<usize> {
        for i in [x, y] {
            if i >= self.order() {
                return Err(Error::IndexOutOfRange { index: i, order: self.order() });
            }
        }
        Ok(self.conj_unchecked(x, y))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn next_permutation(p: &[usize]) -> Option<Vec<usize>> {
    let mut p = p.to_vec();
    let i = (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1])?;
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    Some(p)
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut i = p[start];
        while i != start {
            seen[i] = true;
            cycle.push(i + 1);
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// A group named on the command line: `c<n>`, `s<n>`, `d<n>`, or a JSON file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
    Dihedral(usize),
    File(String),
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let named = |prefix: char| -> Option<usize> {
            let rest = s.strip_prefix(prefix).or_else(|| s.strip_prefix(prefix.to_ascii_uppercase()))?;
            rest.parse().ok()
        };
        if let Some(n) = named('c') {
            Ok(GroupSpec::Cyclic(n))
        } else if let Some(n) = named('s') {
            Ok(GroupSpec::Symmetric(n))
        } else if let Some(n) = named('d') {
            Ok(GroupSpec::Dihedral(n))
        } else if s.is_empty() {
            Err(Error::Parse("empty group name".into()))
        } else {
            Ok(GroupSpec::File(s.to_string()))
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "c{n}"),
            GroupSpec::Symmetric(n) => write!(f, "s{n}"),
            GroupSpec::Dihedral(n) => write!(f, "d{n}"),
            GroupSpec::File(p) => write!(f, "{p}"),
        }
    }
}

pub fn group_from_spec(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
        GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
        GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
        GroupSpec::File(p) => {
            let text = std::fs::read_to_string(Path::new(p))?;
            FiniteGroup::from_json(&serde_json::from_str(&text)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_s3() {
        let c1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.labels(), ["e", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"]);
    }

    #[test]
    fn conjugation_convention() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let at = |l: &str| s3.index_of(l).unwrap();
        assert_eq!(s3.conj(at("(1 2)"), at("(1 2 3)")).unwrap(), at("(2 3)"));
        for x in 0..6 {
            assert_eq!(s3.conj(x, s3.identity()).unwrap(), x);
        }
        assert!(matches!(s3.conj(6, 0), Err(Error::IndexOutOfRange { index: 6, order: 6 })));
        let c4 = FiniteGroup::cyclic(4).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(c4.conj(x, y).unwrap(), x);
            }
        }
    }

    #[test]
    fn broken_associativity_is_rejected() {
        // a Latin square with identity 0 that is not associative
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = (0..5).map(|i| i.to_string()).collect();
        assert!(matches!(FiniteGroup::from_table(labels, table), Err(Error::NotAGroup(m)) if m.contains("associativity")));
    }

    #[test]
    fn named_families() {
        assert_eq!("s3".parse::<GroupSpec>().unwrap(), GroupSpec::Symmetric(3));
        assert_eq!("c4".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(4));
        let d4 = group_from_spec(&"d4".parse().unwrap()).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        let d3 = FiniteGroup::dihedral(3).unwrap();
        // D3 ≅ S3: same number of elements of each order
        let order_profile = |g: &FiniteGroup| {
            let mut v: Vec<usize> = (0..g.order())
                .map(|x| {
                    let mut k = 1;
                    let mut y = x;
                    while y != g.identity() {
                        y = g.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect();
            v.sort();
            v
        };
        assert_eq!(order_profile(&d3), order_profile(&FiniteGroup::symmetric(3).unwrap()));
    }

    #[test]
    fn json_round_trip() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(FiniteGroup::from_json(&s3.to_json()).unwrap(), s3);
    }
}
