//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("linear algebra: {0}")]
    LinAlg(#[from] LinAlgError),

    #[error("hopf algebra: {0}")]
    Hopf(#[from] HopfError),

    #[error("module: {0}")]
    Module(#[from] ModuleError),

    #[error("category: {0}")]
    Category(#[from] CategoryError),

    #[error("json: {0}")]
    Json(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinAlgError {
    #[error("field mismatch: {0:?} vs {1:?}")]
    FieldMismatch(crate::exactla::FieldSpec, crate::exactla::FieldSpec),

    #[error("dimension mismatch: {context} ({left} vs {right})")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime modulus {0} too large (must fit in 31 bits)")]
    PrimeTooLarge(u64),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error("axiom `{axiom}` violated at basis indices {indices:?}")]
    Axiom {
        axiom: &'static str,
        indices: Vec<usize>,
    },

    #[error("antipode matrix is singular")]
    SingularAntipode,

    #[error("left integral space has dimension {0}, expected 1")]
    IntegralDimension(usize),

    #[error("inconsistent presentation: {0}")]
    Shape(String),

    #[error("unsupported catalog parameters: {0}")]
    UnsupportedCatalog(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModuleError {
    #[error("action is not an algebra map: rho(b{i})·rho(b{j}) != sum of structure constants")]
    NotAlgebraMap { i: usize, j: usize },

    #[error("unit of the algebra does not act as identity")]
    UnitAction,

    #[error("modules live over different Hopf algebras")]
    HopfMismatch,

    #[error("modules live over different module categories")]
    CategoryMismatch,

    #[error("operation requires a {expected} Hopf algebra")]
    WrongFamily { expected: &'static str },

    #[error("action matrices malformed: {0}")]
    Shape(String),

    #[error("map is not {0}")]
    NotAMorphism(&'static str),

    #[error("no invertible solution found: {0}")]
    SolverExhausted(&'static str),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CategoryError {
    #[error("axiom `{axiom}` violated at basis indices {indices:?}")]
    Axiom {
        axiom: &'static str,
        indices: Vec<usize>,
    },

    #[error("inconsistent category data: {0}")]
    Shape(String),
}
