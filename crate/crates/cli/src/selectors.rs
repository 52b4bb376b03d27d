//! Catalog shorthand parsing: Hopf algebras, module categories, and module
//! selectors.

use std::sync::Arc;

use hopfo::equivariant::EquivariantModule;
use hopfo::hmodules::HModule;
use hopfo::hopfcore::HopfPresentation;

/// A Hopf algebra from a catalog shorthand or a `hopf.json` path.
pub fn load_hopf(name: &str) -> Result<Arc<HopfPresentation>, String> {
    if name.ends_with(".json") || std::path::Path::new(name).exists() {
        let text = std::fs::read_to_string(name).map_err(|e| format!("{name}: {e}"))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| format!("{name}: {e}"))?;
        return Ok(Arc::new(
            hopfo::hopfcore::hopf_from_json(&value).map_err(|e| e.to_string())?,
        ));
    }
    Ok(Arc::new(
        hopfo::hopfcore::by_name(name).map_err(|e| e.to_string())?,
    ))
}

/// Parse an H-module selector: `k`, `H`/`regular`, `kereps`, `hmodlambda`,
/// `J<k>`, `char<a>`, sums with `+`, or a `module.json` path.
pub fn parse_module(hopf: &Arc<HopfPresentation>, sel: &str) -> Result<HModule, String> {
    let mut parts = sel.split('+');
    let first = parse_atom(hopf, parts.next().expect("split is nonempty"))?;
    parts.try_fold(first, |acc, p| {
        let m = parse_atom(hopf, p)?;
        acc.direct_sum(&m).map_err(|e| e.to_string())
    })
}

fn parse_atom(hopf: &Arc<HopfPresentation>, sel: &str) -> Result<HModule, String> {
    let sel = sel.trim();
    if sel.ends_with(".json") {
        let text = std::fs::read_to_string(sel).map_err(|e| format!("{sel}: {e}"))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| format!("{sel}: {e}"))?;
        return hopfo::hmodules::hmodule_from_json(&value, Some(hopf)).map_err(|e| e.to_string());
    }
    match sel.to_ascii_lowercase().as_str() {
        "k" => Ok(HModule::trivial(hopf)),
        "h" | "regular" => Ok(hopfo::hmodules::regular_module(hopf)),
        "kereps" => Ok(hopfo::hmodules::counit_kernel_module(hopf).0),
        "hmodlambda" => Ok(hopfo::hmodules::quotient_by_integral(hopf).0),
        s if s.starts_with('j') => {
            let k: usize = s[1..]
                .parse()
                .map_err(|_| format!("bad Jordan selector `{sel}`"))?;
            hopfo::hmodules::jordan_module(hopf, k).map_err(|e| e.to_string())
        }
        s if s.starts_with("char") => {
            let a: u64 = s[4..]
                .parse()
                .map_err(|_| format!("bad character selector `{sel}`"))?;
            hopfo::cotorsion::character_module(hopf, a).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown module selector `{other}`")),
    }
}

/// Parse an equivariant-module selector relative to a category name: for
/// `--a k` the plain H-module selectors apply; otherwise the selector names
/// a member of the built-in (A, H) catalog, or an `eqmod.json` path.
pub fn parse_equivariant(
    hopf: &Arc<HopfPresentation>,
    cat_name: &str,
    sel: &str,
) -> Result<EquivariantModule, String> {
    if sel.ends_with(".json") {
        let text = std::fs::read_to_string(sel).map_err(|e| format!("{sel}: {e}"))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| format!("{sel}: {e}"))?;
        return hopfo::equivariant::eqmod_from_json(&value).map_err(|e| e.to_string());
    }
    if cat_name == "k" {
        if let Ok(m) = parse_module(hopf, sel) {
            let cat = Arc::new(hopfo::equivariant::trivial_category(hopf));
            return Ok(EquivariantModule::from_hmodule(&m, &cat));
        }
    }
    let hopf_name = hopf
        .catalog_id()
        .map(|id| id.to_string())
        .ok_or("catalog selectors need a catalog Hopf algebra")?;
    let pair = hopfo::cotorsion::builtin_catalog(cat_name, &hopf_name)
        .map_err(|e| e.to_string())?;
    pair.modules
        .into_iter()
        .find(|(n, _)| n == sel)
        .map(|(_, m)| m)
        .ok_or_else(|| format!("no catalog module named `{sel}` in ({cat_name}, {hopf_name})"))
}
