//! The `hmodcat.json` and `eqmod.json` wire formats.
//!
//! `hmodcat.json`:
//! ```json
//! {"hopf": "divided_power:2" | {...},
//!  "objects": ["*"],
//!  "hom_dims": [[2]],
//!  "compose": [[i, j, k, c], ...],
//!  "units": [[1, 0]],
//!  "h_action": [[i, r, c, coeff], ...]}
//! ```
//!
//! `eqmod.json`:
//! ```json
//! {"cat": "truncpoly:2" | {...hmodcat...},
//!  "hopf": "divided_power:2",
//!  "object_grading": [2],
//!  "a_action": [[i, r, c, coeff], ...],
//!  "h_action": [[i, r, c, coeff], ...]}
//! ```
//!
//! Sparse triples are emitted in lexicographic order, so output is
//! canonical.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::Error;
use crate::exactla::scalar::{scalar_from_json, scalar_to_json};
use crate::exactla::{FieldSpec, Matrix, Scalar};
use crate::hopfcore::{by_name, hopf_from_json, hopf_to_json, HopfPresentation};

use super::category::{category_by_name, validate_category, HModuleCategory, RawCategory};
use super::module::{validate_equivariant, EquivariantModule};

fn sparse_matrices_from_json(
    field: FieldSpec,
    v: &Value,
    count: usize,
    dim: usize,
    what: &str,
) -> Result<Vec<Matrix>, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("{what} must be an array of [i,r,c,coeff]")))?;
    let mut out = vec![Matrix::zeros(field, dim, dim); count];
    for t in arr {
        let t = t
            .as_array()
            .filter(|t| t.len() == 4)
            .ok_or_else(|| Error::Json(format!("{what} entries must be [i,r,c,coeff]")))?;
        let idx = |n: usize| -> Result<usize, Error> {
            t[n].as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Error::Json(format!("{what} index not an integer")))
        };
        let (i, r, c) = (idx(0)?, idx(1)?, idx(2)?);
        if i >= count || r >= dim || c >= dim {
            return Err(Error::Json(format!("{what} triple out of range")));
        }
        let coeff = scalar_from_json(field, &t[3]).map_err(Error::Json)?;
        let cur = out[i].get(r, c).add(&coeff);
        out[i].set(r, c, cur);
    }
    Ok(out)
}

fn sparse_matrices_to_json(ms: &[Matrix]) -> Value {
    let mut arr = Vec::new();
    for (i, m) in ms.iter().enumerate() {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let v = m.get(r, c);
                if !v.is_zero() {
                    arr.push(json!([i, r, c, scalar_to_json(v)]));
                }
            }
        }
    }
    Value::Array(arr)
}

fn hopf_of(v: &Value) -> Result<Arc<HopfPresentation>, Error> {
    match v {
        Value::String(name) => Ok(Arc::new(by_name(name)?)),
        obj => Ok(Arc::new(hopf_from_json(obj)?)),
    }
}

/// Parse and validate an `hmodcat.json` document.
pub fn category_from_json(v: &Value) -> Result<HModuleCategory, Error> {
    let hopf = hopf_of(
        v.get("hopf")
            .ok_or_else(|| Error::Json("hopf missing".into()))?,
    )?;
    let field = hopf.field();
    let objects: Vec<String> = v
        .get("objects")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("objects missing".into()))?
        .iter()
        .map(|s| s.as_str().unwrap_or_default().to_string())
        .collect();
    let hom_dims: Vec<Vec<usize>> = v
        .get("hom_dims")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("hom_dims missing".into()))?
        .iter()
        .map(|row| {
            row.as_array()
                .map(|r| {
                    r.iter()
                        .map(|x| x.as_u64().unwrap_or(0) as usize)
                        .collect()
                })
                .ok_or_else(|| Error::Json("hom_dims rows must be arrays".into()))
        })
        .collect::<Result<_, _>>()?;
    let total_dim: usize = hom_dims.iter().flatten().sum();

    let compose_arr = v
        .get("compose")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("compose missing".into()))?;
    let mut compose = Vec::new();
    for t in compose_arr {
        let t = t
            .as_array()
            .filter(|t| t.len() == 4)
            .ok_or_else(|| Error::Json("compose entries must be [i,j,k,c]".into()))?;
        let idx = |n: usize| t[n].as_u64().map(|x| x as usize);
        compose.push((
            idx(0).ok_or_else(|| Error::Json("bad compose index".into()))?,
            idx(1).ok_or_else(|| Error::Json("bad compose index".into()))?,
            idx(2).ok_or_else(|| Error::Json("bad compose index".into()))?,
            scalar_from_json(field, &t[3]).map_err(Error::Json)?,
        ));
    }

    let units: Vec<Vec<Scalar>> = v
        .get("units")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("units missing".into()))?
        .iter()
        .map(|u| {
            u.as_array()
                .ok_or_else(|| Error::Json("unit rows must be arrays".into()))?
                .iter()
                .map(|x| scalar_from_json(field, x).map_err(Error::Json))
                .collect()
        })
        .collect::<Result<_, _>>()?;

    let h_action = sparse_matrices_from_json(
        field,
        v.get("h_action")
            .ok_or_else(|| Error::Json("h_action missing".into()))?,
        hopf.dim(),
        total_dim,
        "h_action",
    )?;

    Ok(validate_category(RawCategory {
        hopf,
        objects,
        hom_dims,
        compose,
        units,
        h_action,
    })?)
}

/// Serialize a category to the canonical `hmodcat.json` form.
pub fn category_to_json(cat: &HModuleCategory) -> Value {
    let n = cat.n_objects();
    let total = cat.total_dim();
    let mut hom_dims = vec![vec![0usize; n]; n];
    for t in 0..total {
        let (x, y) = cat.block_of(t);
        hom_dims[x][y] += 1;
    }
    let mut compose = Vec::new();
    for i in 0..total {
        for j in 0..total {
            for k in 0..total {
                let c = cat.left_mult(i).get(k, j);
                if !c.is_zero() {
                    compose.push(json!([i, j, k, scalar_to_json(c)]));
                }
            }
        }
    }
    let units: Vec<Value> = (0..n)
        .map(|x| {
            Value::Array(
                cat.object_unit(x)
                    .iter()
                    .map(scalar_to_json)
                    .collect(),
            )
        })
        .collect();
    let h_action: Vec<Matrix> = (0..cat.hopf().dim())
        .map(|i| cat.h_action(i).clone())
        .collect();
    json!({
        "hopf": match cat.hopf().catalog_id() {
            Some(id) => Value::String(id.to_string()),
            None => hopf_to_json(cat.hopf()),
        },
        "objects": cat.objects(),
        "hom_dims": hom_dims,
        "compose": Value::Array(compose),
        "units": Value::Array(units),
        "h_action": sparse_matrices_to_json(&h_action),
    })
}

/// Parse and validate an `eqmod.json` document. The category may be given
/// by shorthand (relative to the `hopf` field) or inline.
pub fn eqmod_from_json(v: &Value) -> Result<EquivariantModule, Error> {
    let cat: Arc<HModuleCategory> = match v.get("cat") {
        Some(Value::String(name)) => {
            let hopf = hopf_of(
                v.get("hopf")
                    .ok_or_else(|| Error::Json("hopf missing for category shorthand".into()))?,
            )?;
            Arc::new(category_by_name(name, &hopf)?)
        }
        Some(obj) => Arc::new(category_from_json(obj)?),
        None => return Err(Error::Json("cat missing".into())),
    };
    let field = cat.field();
    let grading: Vec<usize> = v
        .get("object_grading")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("object_grading missing".into()))?
        .iter()
        .map(|x| x.as_u64().unwrap_or(0) as usize)
        .collect();
    if grading.len() != cat.n_objects() {
        return Err(Error::Json("object_grading length mismatch".into()));
    }
    let dim: usize = grading.iter().sum();
    let a_action = sparse_matrices_from_json(
        field,
        v.get("a_action")
            .ok_or_else(|| Error::Json("a_action missing".into()))?,
        cat.total_dim(),
        dim,
        "a_action",
    )?;
    let h_action = sparse_matrices_from_json(
        field,
        v.get("h_action")
            .ok_or_else(|| Error::Json("h_action missing".into()))?,
        cat.hopf().dim(),
        dim,
        "h_action",
    )?;
    Ok(validate_equivariant(&cat, grading, a_action, h_action)?)
}

/// Serialize an equivariant module to the canonical `eqmod.json` form.
pub fn eqmod_to_json(m: &EquivariantModule) -> Value {
    let cat = m.cat();
    let cat_field = match cat.name() {
        Some(name) => Value::String(name.to_string()),
        None => category_to_json(cat),
    };
    let a_action: Vec<Matrix> = (0..cat.total_dim())
        .map(|i| m.a_action(i).clone())
        .collect();
    let h_action: Vec<Matrix> = (0..m.hopf().dim())
        .map(|i| m.h_action(i).clone())
        .collect();
    let mut out = serde_json::Map::new();
    out.insert("cat".into(), cat_field);
    if cat.name().is_some() {
        out.insert(
            "hopf".into(),
            match m.hopf().catalog_id() {
                Some(id) => Value::String(id.to_string()),
                None => hopf_to_json(m.hopf()),
            },
        );
    }
    out.insert("object_grading".into(), json!(m.grading()));
    out.insert("a_action".into(), sparse_matrices_to_json(&a_action));
    out.insert("h_action".into(), sparse_matrices_to_json(&h_action));
    Value::Object(out)
}
