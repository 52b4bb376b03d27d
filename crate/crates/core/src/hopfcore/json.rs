//! The `hopf.json` wire format.
//!
//! ```json
//! {"field": {"kind": "prime", "p": 3},
//!  "dim": 3,
//!  "basis": ["1", "d", "d2"],
//!  "unit": [1, 0, 0],
//!  "mult": [[i, j, k, c], ...],
//!  "comult": [[i, j, k, c], ...],
//!  "counit": [...],
//!  "antipode": [[...], ...]}
//! ```
//!
//! Indices are 0-based. Coefficients are integers over prime fields and
//! integers or `"a/b"` strings over ℚ. Output ordering of the sparse triples
//! is lexicographic in `(i, j, k)`, so serialization is canonical.

use serde_json::{json, Value};

use crate::error::Error;
use crate::exactla::scalar::{scalar_from_json, scalar_to_json};
use crate::exactla::{FieldSpec, Matrix, Scalar};

use super::presentation::{validate_hopf, HopfPresentation, RawHopf};

pub(crate) fn field_to_json(field: FieldSpec) -> Value {
    match field {
        FieldSpec::Prime(p) => json!({"kind": "prime", "p": p}),
        FieldSpec::Rational => json!({"kind": "rational"}),
    }
}

pub(crate) fn field_from_json(v: &Value) -> Result<FieldSpec, Error> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Json("field.kind missing".into()))?;
    match kind {
        "prime" => {
            let p = v
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Json("field.p missing".into()))?;
            Ok(FieldSpec::prime(p).map_err(crate::error::LinAlgError::from)?)
        }
        "rational" => Ok(FieldSpec::Rational),
        other => Err(Error::Json(format!("unknown field kind `{other}`"))),
    }
}

fn scalars_from_json(field: FieldSpec, v: &Value, what: &str) -> Result<Vec<Scalar>, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("{what} must be an array")))?;
    arr.iter()
        .map(|x| scalar_from_json(field, x).map_err(Error::Json))
        .collect()
}

fn triples_from_json(
    field: FieldSpec,
    v: &Value,
    what: &str,
) -> Result<Vec<(usize, usize, usize, Scalar)>, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("{what} must be an array")))?;
    arr.iter()
        .map(|t| {
            let t = t
                .as_array()
                .filter(|t| t.len() == 4)
                .ok_or_else(|| Error::Json(format!("{what} entries must be [i,j,k,c]")))?;
            let idx = |n: usize| -> Result<usize, Error> {
                t[n].as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Json(format!("{what} index not an integer")))
            };
            Ok((
                idx(0)?,
                idx(1)?,
                idx(2)?,
                scalar_from_json(field, &t[3]).map_err(Error::Json)?,
            ))
        })
        .collect()
}

pub(crate) fn matrix_from_json(field: FieldSpec, v: &Value, what: &str) -> Result<Matrix, Error> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("{what} must be an array of rows")))?;
    let nrows = rows.len();
    let ncols = rows
        .first()
        .and_then(|r| r.as_array())
        .map(|r| r.len())
        .unwrap_or(0);
    let mut entries = Vec::with_capacity(nrows * ncols);
    for r in rows {
        let r = r
            .as_array()
            .filter(|r| r.len() == ncols)
            .ok_or_else(|| Error::Json(format!("{what} rows must have equal length")))?;
        for e in r {
            entries.push(scalar_from_json(field, e).map_err(Error::Json)?);
        }
    }
    Matrix::new(field, nrows, ncols, entries)
        .map_err(|e| Error::Json(format!("{what}: {e}")))
}

pub(crate) fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

/// Parse and validate a `hopf.json` document.
pub fn hopf_from_json(v: &Value) -> Result<HopfPresentation, Error> {
    let field = field_from_json(
        v.get("field")
            .ok_or_else(|| Error::Json("field missing".into()))?,
    )?;
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("dim missing".into()))? as usize;
    let basis_labels: Vec<String> = v
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("basis missing".into()))?
        .iter()
        .map(|s| s.as_str().unwrap_or_default().to_string())
        .collect();
    let raw = RawHopf {
        field,
        dim,
        basis_labels,
        unit: scalars_from_json(
            field,
            v.get("unit").ok_or_else(|| Error::Json("unit missing".into()))?,
            "unit",
        )?,
        mult: triples_from_json(
            field,
            v.get("mult").ok_or_else(|| Error::Json("mult missing".into()))?,
            "mult",
        )?,
        comult: triples_from_json(
            field,
            v.get("comult")
                .ok_or_else(|| Error::Json("comult missing".into()))?,
            "comult",
        )?,
        counit: scalars_from_json(
            field,
            v.get("counit")
                .ok_or_else(|| Error::Json("counit missing".into()))?,
            "counit",
        )?,
        antipode: matrix_from_json(
            field,
            v.get("antipode")
                .ok_or_else(|| Error::Json("antipode missing".into()))?,
            "antipode",
        )?,
    };
    Ok(validate_hopf(raw)?)
}

/// Recover the raw structure constants of a validated presentation, with the
/// canonical lexicographic `(i, j, k)` ordering.
pub(crate) fn to_raw(h: &HopfPresentation) -> RawHopf {
    let dim = h.dim();
    let mut mult = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let c = h.left_mult(i).get(k, j);
                if !c.is_zero() {
                    mult.push((i, j, k, c.clone()));
                }
            }
        }
    }
    let mut comult = Vec::new();
    for i in 0..dim {
        for (j, k, c) in h.comult(i).terms() {
            comult.push((i, *j, *k, c.clone()));
        }
    }
    RawHopf {
        field: h.field(),
        dim,
        basis_labels: h.basis_labels().to_vec(),
        unit: h.unit().to_vec(),
        mult,
        comult,
        counit: h.counit().to_vec(),
        antipode: h.antipode().clone(),
    }
}

/// Serialize a validated presentation to the canonical `hopf.json` form.
pub fn hopf_to_json(h: &HopfPresentation) -> Value {
    let raw = to_raw(h);
    let triples = |ts: &[(usize, usize, usize, Scalar)]| -> Value {
        Value::Array(
            ts.iter()
                .map(|(i, j, k, c)| json!([i, j, k, scalar_to_json(c)]))
                .collect(),
        )
    };
    json!({
        "field": field_to_json(raw.field),
        "dim": raw.dim,
        "basis": raw.basis_labels,
        "unit": raw.unit.iter().map(scalar_to_json).collect::<Vec<_>>(),
        "mult": triples(&raw.mult),
        "comult": triples(&raw.comult),
        "counit": raw.counit.iter().map(scalar_to_json).collect::<Vec<_>>(),
        "antipode": matrix_to_json(&raw.antipode),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{divided_power, sweedler};

    #[test]
    fn round_trip_divided_power() {
        let h = divided_power(3).unwrap();
        let v = hopf_to_json(&h);
        let h2 = hopf_from_json(&v).unwrap();
        assert_eq!(h, h2);
        // Canonical output: serializing twice is byte-identical.
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            serde_json::to_string(&hopf_to_json(&h2)).unwrap()
        );
    }

    #[test]
    fn round_trip_sweedler() {
        let h = sweedler(3).unwrap();
        let h2 = hopf_from_json(&hopf_to_json(&h)).unwrap();
        assert_eq!(h, h2);
    }

    #[test]
    fn rejects_missing_fields() {
        let v = serde_json::json!({"dim": 2});
        assert!(hopf_from_json(&v).is_err());
    }
}
