//! Jordan-type oracles for the nilpotent generator of catalog algebras.
//!
//! Over `F_p[d]/(d^p)` every module is a sum of Jordan blocks J_1..J_p of
//! the nilpotent generator; the block multiset classifies the module and is
//! the independent oracle behind the tensor, suspension and homology tests.
//! The same rank bookkeeping yields an exact projectivity certificate for
//! the other catalog families (Taft/Sweedler via x, cyclic p-groups via
//! g−1), which matters at dimensions where the generic section solve is out
//! of reach.

use std::sync::Arc;

use crate::error::ModuleError;
use crate::exactla::Matrix;
use crate::hopfcore::{CatalogId, HopfPresentation};

use super::module::{validate_module, HModule};

/// Jordan block sizes (descending) of a nilpotent matrix, from the rank
/// sequence of its powers.
pub fn jordan_type_of_nilpotent(n: &Matrix, max_size: usize) -> Vec<usize> {
    assert_eq!(n.rows(), n.cols());
    let mut ranks = Vec::with_capacity(max_size + 1);
    let mut power = Matrix::identity(n.field(), n.rows());
    for _ in 0..=max_size {
        ranks.push(power.rank());
        power = power.matmul(n);
    }
    assert_eq!(
        power.rank(),
        0,
        "matrix is not nilpotent of degree <= {max_size}"
    );
    let mut blocks = Vec::new();
    for s in 1..=max_size {
        // #blocks of size >= s equals rank(n^(s-1)) - rank(n^s).
        let at_least_s = ranks[s - 1] - ranks[s];
        let at_least_s1 = if s < max_size { ranks[s] - ranks[s + 1] } else { 0 };
        for _ in 0..at_least_s.saturating_sub(at_least_s1) {
            blocks.push(s);
        }
    }
    blocks.sort_unstable_by(|a, b| b.cmp(a));
    blocks
}

/// Multiset of Jordan block sizes of the d-action for modules over
/// `divided_power:p`; the partition of dim m into parts ≤ p.
pub fn jordan_decompose(m: &HModule) -> Result<Vec<usize>, ModuleError> {
    match m.hopf().catalog_id() {
        Some(CatalogId::DividedPower { p }) => {
            Ok(jordan_type_of_nilpotent(m.action(1), *p as usize))
        }
        _ => Err(ModuleError::WrongFamily {
            expected: "divided_power",
        }),
    }
}

/// The Jordan block J_k as a module over `divided_power:p` (k ≤ p).
pub fn jordan_module(hopf: &Arc<HopfPresentation>, k: usize) -> Result<HModule, ModuleError> {
    if !matches!(hopf.catalog_id(), Some(CatalogId::DividedPower { .. })) {
        return Err(ModuleError::WrongFamily {
            expected: "divided_power",
        });
    }
    let f = hopf.field();
    let nil = Matrix::from_fn(f, k, k, |i, j| if i + 1 == j { f.one() } else { f.zero() });
    let action = (0..hopf.dim()).map(|a| nil.pow(a)).collect();
    validate_module(hopf, action)
}

/// Exact projectivity certificate for catalog families where module theory
/// pins it to a Jordan type; `None` when no family oracle applies.
///
/// - semisimple H: everything is projective;
/// - `divided_power:p`: projective ⟺ every d-block has size p;
/// - Taft/Sweedler T_n: Nakayama of finite type, indecomposables are the
///   length-1..n string modules and x acts on each as a single block, so
///   projective ⟺ every x-block has size n;
/// - cyclic group C_p over GF(p): projective ⟺ every (g−1)-block has size p.
pub fn projective_by_jordan_oracle(m: &HModule) -> Option<bool> {
    let h = m.hopf();
    if m.dim() == 0 {
        return Some(true);
    }
    if h.is_semisimple() {
        return Some(true);
    }
    match h.catalog_id()? {
        CatalogId::DividedPower { p } => {
            let blocks = jordan_type_of_nilpotent(m.action(1), *p as usize);
            Some(blocks.iter().all(|&s| s == *p as usize))
        }
        CatalogId::Taft { n, .. } => {
            let blocks = jordan_type_of_nilpotent(m.action(1), *n as usize);
            Some(blocks.iter().all(|&s| s == *n as usize))
        }
        CatalogId::Sweedler { .. } => {
            let blocks = jordan_type_of_nilpotent(m.action(1), 2);
            Some(blocks.iter().all(|&s| s == 2))
        }
        CatalogId::GroupAlgebra { factors, field } => {
            let crate::exactla::FieldSpec::Prime(p) = field else {
                return None;
            };
            if factors.as_slice() != [*p] {
                return None;
            }
            let id = Matrix::identity(m.field(), m.dim());
            let u = m.action(1).sub(&id);
            let blocks = jordan_type_of_nilpotent(&u, *p as usize);
            Some(blocks.iter().all(|&s| s == *p as usize))
        }
    }
}
