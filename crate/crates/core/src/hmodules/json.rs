//! The `module.json` wire format.
//!
//! ```json
//! {"hopf": "divided_power:3" | {...hopf.json...},
//!  "dim": 2,
//!  "action": {"d": [[0,1],[0,0]], "d2": [[0,0],[0,0]]}}
//! ```
//!
//! Actions are given for the non-unit basis labels; the unit acts as the
//! identity.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::Error;
use crate::exactla::Matrix;
use crate::hopfcore::{by_name, hopf_from_json, hopf_to_json, HopfPresentation};

use super::module::{validate_module, HModule};

/// Parse a `module.json` document. The embedded `hopf` field may be a
/// catalog shorthand or an inline `hopf.json` object; alternatively pass a
/// preloaded presentation to use when the field is absent.
pub fn hmodule_from_json(
    v: &Value,
    context: Option<&Arc<HopfPresentation>>,
) -> Result<HModule, Error> {
    let hopf: Arc<HopfPresentation> = match v.get("hopf") {
        Some(Value::String(name)) => Arc::new(by_name(name)?),
        Some(obj) => Arc::new(hopf_from_json(obj)?),
        None => context
            .cloned()
            .ok_or_else(|| Error::Json("module.json needs a `hopf` field".into()))?,
    };
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("dim missing".into()))? as usize;
    let actions = v
        .get("action")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Json("action map missing".into()))?;

    let unit_index = (0..hopf.dim()).find(|&i| {
        hopf.unit()
            .iter()
            .enumerate()
            .all(|(j, c)| if j == i { c.is_one() } else { c.is_zero() })
    });

    let mut action = Vec::with_capacity(hopf.dim());
    for (i, label) in hopf.basis_labels().iter().enumerate() {
        if let Some(mv) = actions.get(label) {
            action.push(crate::hopfcore::matrix_from_json(hopf.field(), mv, label)?);
        } else if unit_index == Some(i) {
            action.push(Matrix::identity(hopf.field(), dim));
        } else {
            return Err(Error::Json(format!(
                "action for basis label `{label}` missing"
            )));
        }
    }
    for (i, a) in action.iter().enumerate() {
        if a.rows() != dim || a.cols() != dim {
            return Err(Error::Json(format!(
                "action for `{}` must be {dim}x{dim}",
                hopf.basis_labels()[i]
            )));
        }
    }
    Ok(validate_module(&hopf, action)?)
}

/// Serialize a module; the Hopf algebra is written as its catalog shorthand
/// when known and inline otherwise.
pub fn hmodule_to_json(m: &HModule) -> Value {
    let h = m.hopf();
    let hopf_field = match h.catalog_id() {
        Some(id) => Value::String(id.to_string()),
        None => hopf_to_json(h),
    };
    let unit_index = (0..h.dim()).find(|&i| {
        h.unit()
            .iter()
            .enumerate()
            .all(|(j, c)| if j == i { c.is_one() } else { c.is_zero() })
    });
    let mut actions = serde_json::Map::new();
    for (i, label) in h.basis_labels().iter().enumerate() {
        if unit_index == Some(i) {
            continue;
        }
        actions.insert(
            label.clone(),
            crate::hopfcore::matrix_to_json(m.action(i)),
        );
    }
    json!({
        "hopf": hopf_field,
        "dim": m.dim(),
        "action": Value::Object(actions),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hmodules::jordan::jordan_module;
    use crate::hopfcore::divided_power;

    #[test]
    fn round_trip_jordan_block() {
        let h = Arc::new(divided_power(3).unwrap());
        let j2 = jordan_module(&h, 2).unwrap();
        let v = hmodule_to_json(&j2);
        let back = hmodule_from_json(&v, None).unwrap();
        assert_eq!(back.dim(), 2);
        for i in 0..h.dim() {
            assert_eq!(back.action(i), j2.action(i));
        }
    }

    #[test]
    fn missing_action_is_an_error() {
        let v = serde_json::json!({
            "hopf": "divided_power:2",
            "dim": 1,
            "action": {}
        });
        assert!(hmodule_from_json(&v, None).is_err());
    }
}
