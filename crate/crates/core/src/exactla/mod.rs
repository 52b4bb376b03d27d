//! Exact scalar arithmetic and dense linear algebra over GF(p) and ℚ.
//!
//! Everything downstream — Hopf axiom validation, homology, intertwiner
//! solves, Ext¹ — reduces to the operations in this module. Matrices are
//! dense and row-major; prime-field eliminations run on raw `u64` rows.

mod maps;
mod matrix;
pub(crate) mod scalar;
mod subspace;

pub use maps::{solve_intertwiner, AffineSolution, MapConstraint, MapShape};
pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar};
pub use subspace::{quotient_map, Subspace};
