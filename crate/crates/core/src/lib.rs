//! Exact computer algebra for Hopfological algebra.
//!
//! The crate is organized in layers, bottom to top:
//!
//! - [`exactla`] — exact dense linear algebra over prime fields GF(p) and ℚ:
//!   reduced echelon forms, kernels, solving, quotients, Kronecker products.
//! - [`hopfcore`] — finite-dimensional Hopf algebras given by structure
//!   constants, with axiom validation, left integrals, antipode inverses and
//!   a built-in catalog (truncated polynomial algebras, group algebras,
//!   Taft/Sweedler algebras).
//! - [`hmodules`] — finite-dimensional left H-modules: tensor products,
//!   hom-modules with the conjugation action, the canonical homology
//!   `H(M) = Z(M)/B(M)`, cone/suspension functors, freeness and projectivity
//!   tests, and a Jordan-type oracle for truncated polynomial Hopf algebras.
//! - [`equivariant`] — H-module categories and algebras, smash products
//!   `A#H`, H-equivariant A-modules, hom-spaces with their H-action, and the
//!   adjoint functors `C ⊣ U ⊣ E`.
//! - [`homotopy`] — homotopy of equivariant maps, stable homs, mapping cones
//!   and standard triangles, A-split extensions, quasi-isomorphism and
//!   acyclicity predicates, long-exact-sequence checks.
//! - [`cotorsion`] — Ext¹ over `A#H` via free presentations, extension
//!   construction from cocycles, semiprojectivity witnesses, and the
//!   catalog-scale Hovey-triple and contractible-pair verification suites.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads.

pub mod cotorsion;
pub mod equivariant;
pub mod error;
pub mod exactla;
pub mod hmodules;
pub mod homotopy;
pub mod hopfcore;
pub mod prng;
pub mod suites;

pub use error::Error;
pub use exactla::{FieldSpec, Matrix, Scalar, Subspace};
pub use hopfcore::HopfPresentation;
