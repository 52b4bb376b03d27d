//! Ext¹ over the smash product, cocycle-generated extensions,
//! Σ-semiprojectivity witnesses, and the catalog-scale verification of the
//! Hovey triple and the contractible cotorsion pair.

mod catalog;
mod cocycle;
mod ext;
mod hovey;
mod projectives;

pub use catalog::{builtin_catalog, builtin_pairs, character_module, CatalogPair};
pub use cocycle::{a_split_cocycle_space, extension_from_theta, CocycleSpace};
pub use ext::{ext1, ext1_with, extension_from_cocycle, Ext1Data, Presentation};
pub use hovey::{
    contractible_pair_report, hovey_triple_report, hovey_triple_report_with, CheckRow,
    OrthogonalityReport,
};
pub use projectives::{
    is_a_projective, is_projective_module, semiprojective_witness, SemiprojectiveWitness,
};
pub use projectives::hmodule_sigma_acyclic as sigma_acyclic_hmodule;
