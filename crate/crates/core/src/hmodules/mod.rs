//! Finite-dimensional left H-modules and the Hopfological functor zoo.

mod functors;
mod homology;
mod jordan;
mod json;
mod module;
mod split;

pub use functors::{
    cone, desuspend, is_free, is_projective, lambda_left_inclusion, lambda_right_inclusion,
    sigma_power, suspend, switching_iso, switching_naturality_check, SwitchingIso,
};
pub use homology::{homology, induced_on_homology, HomologyData};
pub use jordan::{jordan_decompose, jordan_module, jordan_type_of_nilpotent, projective_by_jordan_oracle};
pub use json::{hmodule_from_json, hmodule_to_json};
pub use module::{
    counit_kernel_module, equivariant_maps, integral_submodule, is_equivariant_map, map_of_vec,
    quotient_by_integral, regular_module, validate_module, vec_of_map, HModule,
};
pub use split::{split_off_trivials, DecompositionReport};
