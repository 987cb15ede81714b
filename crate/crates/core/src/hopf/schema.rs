//! JSON form of structure constants. Layout (see `docs/schemas/algebra.md`):
//!
//! - `mu[i][j]`: coordinates of `e_i · e_j`
//! - `delta[i][j][k]`: coefficient of `e_j ⊗ e_k` in `Δ(e_i)`
//! - `unit`: coordinates of `η(1)`
//! - `counit[i]`: `ε(e_i)`
//! - `antipode[i]`: coordinates of `S(e_i)`
//!
//! Scalars are strings `"n/d"` over ℚ and integers over 𝔽_p.

use serde_json::{json, Value};

use super::algebra::{HopfAlgebra, HopfData};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, SparseVec};
use crate::scalar::{FieldSpec, Scalar};

fn vector_json(v: &SparseVec, len: usize, f: FieldSpec) -> Value {
    Value::Array(v.to_dense(len, f).iter().map(Scalar::to_json).collect())
}

pub fn data_to_json(data: &HopfData) -> Value {
    let (f, d) = (data.field, data.labels.len());
    let mu: Vec<Value> = (0..d)
        .map(|i| Value::Array((0..d).map(|j| vector_json(&data.mu.column(i * d + j), d, f)).collect()))
        .collect();
    let delta: Vec<Value> = (0..d)
        .map(|i| {
            let dense = data.delta.column(i).to_dense(d * d, f);
            Value::Array(dense.chunks(d).map(|row| Value::Array(row.iter().map(Scalar::to_json).collect())).collect())
        })
        .collect();
    let counit: Vec<Value> = (0..d).map(|i| data.counit.entry(0, i).to_json()).collect();
    let antipode: Vec<Value> = (0..d).map(|i| vector_json(&data.antipode.column(i), d, f)).collect();
    json!({
        "field": f.to_string(),
        "dim": d,
        "labels": data.labels,
        "mu": mu,
        "delta": delta,
        "unit": vector_json(&data.unit.column(0), d, f),
        "counit": counit,
        "antipode": antipode,
    })
}

pub fn to_json(h: &HopfAlgebra) -> Value {
    data_to_json(h.data())
}

fn array<'a>(v: &'a Value, what: &str, len: usize) -> Result<&'a Vec<Value>> {
    let a = v.as_array().ok_or_else(|| Error::Parse(format!("{what} must be an array")))?;
    if a.len() != len {
        return Err(Error::MalformedAlgebra(format!("{what} has length {}, expected {len}", a.len())));
    }
    Ok(a)
}

fn vector(v: &Value, what: &str, d: usize, f: FieldSpec) -> Result<SparseVec> {
    let entries = array(v, what, d)?;
    let dense = entries.iter().map(|x| f.scalar_from_json(x)).collect::<Result<Vec<_>>>()?;
    Ok(SparseVec::from_dense(&dense))
}

/// Parses the structure constants without checking the axioms.
pub fn data_from_json(v: &Value) -> Result<HopfData> {
    let field: FieldSpec = v
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing \"field\"".into()))?
        .parse()?;
    let d = v.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing \"dim\"".into()))? as usize;
    if d == 0 {
        return Err(Error::MalformedAlgebra("dimension 0".into()));
    }
    let labels: Vec<String> = match v.get("labels") {
        Some(l) => array(l, "labels", d)?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| Error::Parse("labels must be strings".into())))
            .collect::<Result<_>>()?,
        None => (0..d).map(|i| format!("e{i}")).collect(),
    };
    let get = |key: &str| v.get(key).ok_or_else(|| Error::Parse(format!("missing \"{key}\"")));

    let mut mu_cols = Vec::with_capacity(d * d);
    for (i, row) in array(get("mu")?, "mu", d)?.iter().enumerate() {
        for (j, cell) in array(row, &format!("mu[{i}]"), d)?.iter().enumerate() {
            mu_cols.push(vector(cell, &format!("mu[{i}][{j}]"), d, field)?);
        }
    }
    let mut delta_cols = Vec::with_capacity(d);
    for (i, m) in array(get("delta")?, "delta", d)?.iter().enumerate() {
        let mut flat = Vec::with_capacity(d * d);
        for (j, row) in array(m, &format!("delta[{i}]"), d)?.iter().enumerate() {
            for x in array(row, &format!("delta[{i}][{j}]"), d)? {
                flat.push(field.scalar_from_json(x)?);
            }
        }
        delta_cols.push(SparseVec::from_dense(&flat));
    }
    let unit = vector(get("unit")?, "unit", d, field)?;
    let counit = array(get("counit")?, "counit", d)?
        .iter()
        .map(|x| Ok(SparseVec::from_dense(&[field.scalar_from_json(x)?])))
        .collect::<Result<Vec<_>>>()?;
    let antipode = array(get("antipode")?, "antipode", d)?
        .iter()
        .enumerate()
        .map(|(i, c)| vector(c, &format!("antipode[{i}]"), d, field))
        .collect::<Result<Vec<_>>>()?;

    Ok(HopfData {
        field,
        labels,
        mu: LinearMap::from_columns(field, d, 2, 1, mu_cols),
        delta: LinearMap::from_columns(field, d, 1, 2, delta_cols),
        unit: LinearMap::from_columns(field, d, 0, 1, vec![unit]),
        counit: LinearMap::from_columns(field, d, 1, 0, counit),
        antipode: LinearMap::from_columns(field, d, 1, 1, antipode),
    })
}

/// Parses and validates.
pub fn from_json(v: &Value) -> Result<HopfAlgebra> {
    HopfAlgebra::new(data_from_json(v)?)
}

pub fn from_json_str(s: &str) -> Result<HopfAlgebra> {
    from_json(&serde_json::from_str(s)?)
}
