//! Finite-dimensional Hopf algebras by structure constants.
//!
//! A presentation carries the multiplication, unit, comultiplication,
//! counit and antipode of H in a fixed basis. [`validate_hopf`] checks all
//! axioms by brute-force expansion and caches the antipode inverse, the
//! (normalized) left integral, the counit kernel and the integral line kλ.

mod catalog;
mod json;
mod presentation;

pub use catalog::{by_name, divided_power, group_algebra, sweedler, taft, CatalogId};
pub use json::{hopf_from_json, hopf_to_json};
pub(crate) use json::{matrix_from_json, matrix_to_json};
pub(crate) use presentation::algebra_generators;
pub use presentation::{validate_hopf, HopfPresentation, RawHopf, SweedlerExpansion};
