//! H-module categories, smash products `A#H`, and H-equivariant A-modules.
//!
//! Multi-object categories are handled as object-graded algebras with
//! orthogonal idempotents (the category algebra); all the linear algebra
//! then runs on total morphism spaces, with the grading enforced through
//! entry masks and block checks.

mod adjoints;
mod category;
mod homspace;
mod json;
mod module;
mod smash;

pub use adjoints::{
    adjunction_phi, adjunction_psi, cone_adjoint, e_functor, evaluation_at_unit, forgetful,
};
pub use category::{
    a2_quiver_category, category_by_name, trivial_category, truncated_polynomial_category,
    validate_category, HModuleCategory,
};
pub use homspace::{equivariant_hom_basis, hom_space, is_morphism, HomSpace};
pub use json::{category_from_json, category_to_json, eqmod_from_json, eqmod_to_json};
pub use module::{validate_equivariant, CategoryModule, EquivariantModule};
pub use smash::{from_smash_module, smash, to_smash_module, SmashAlgebra};
