//! The homotopy and stable-category machinery: homotopies through the cone,
//! stable homs, mapping cones and standard triangles, A-split extensions,
//! quasi-isomorphism and acyclicity predicates, long exact sequences.

mod cone;
mod extension;
mod homotopies;
mod quism;

pub use cone::{mapping_cone, null_homotopy_iff_cone_splits, ConeSplitVerdict, TriangleData};
pub use extension::{direct_sum_extension, ExtensionData};
pub use homotopies::{
    is_contractible, is_homotopic, lambda_inclusion, stable_hom, StableHom,
};
pub use quism::{
    is_quism, is_sigma_acyclic, is_sigma_quism, long_exact_check, sigma_map,
    surjectivity_transfer, LongExactReport,
};
