//! Homotopy witnesses and stable hom spaces.
//!
//! A homotopy between `f, g: M → N` is a morphism `φ: C(M) → N` with
//! `φ∘(1⊗λ) = f − g`; finding one is an affine intertwiner solve.

use crate::equivariant::{hom_space, is_morphism, EquivariantModule, HomSpace};
use crate::exactla::{
    solve_intertwiner, MapConstraint, MapShape, Matrix, Subspace,
};
use crate::hmodules::HModule;

/// The inclusion `M → C(M) = M⊗H`, `m ↦ m⊗λ`.
pub fn lambda_inclusion(m: &EquivariantModule) -> Matrix {
    let hopf = m.hopf();
    let field = m.cat().field();
    let (dh, dm) = (hopf.dim(), m.dim());
    let mut out = Matrix::zeros(field, dm * dh, dm);
    for a in 0..dm {
        for (i, li) in hopf.left_integral().iter().enumerate() {
            out.set(a * dh + i, a, li.clone());
        }
    }
    out
}

/// Solve for a homotopy witness between two morphisms, or return `None`.
pub fn is_homotopic(
    m: &EquivariantModule,
    n: &EquivariantModule,
    f: &Matrix,
    g: &Matrix,
) -> Option<Matrix> {
    debug_assert!(is_morphism(f, m, n));
    debug_assert!(is_morphism(g, m, n));
    let cone = m.cone();
    let diff = f.sub(g);
    let iota = lambda_inclusion(m);
    let cat = m.cat();
    let hopf = m.hopf();
    let shape = MapShape::masked(
        cat.field(),
        n.dim(),
        cone.dim(),
        cone.amod().graded_mask_into(n.amod()),
    );
    let mut constraints: Vec<MapConstraint> = Vec::new();
    for &gidx in cat.generators() {
        constraints.push(MapConstraint::Intertwine {
            p: n.a_action(gidx),
            q: cone.a_action(gidx),
        });
    }
    for &gidx in hopf.generators() {
        constraints.push(MapConstraint::Intertwine {
            p: n.h_action(gidx),
            q: cone.h_action(gidx),
        });
    }
    constraints.push(MapConstraint::ComposeRight {
        f: &iota,
        rhs: &diff,
    });
    solve_intertwiner(&shape, &constraints).map(|sol| sol.particular)
}

/// Contractibility in `lMod H` (forgetting A): the identity is homotopic to
/// zero through an H-module cone.
pub fn is_contractible(m: &EquivariantModule) -> bool {
    hmodule_is_contractible(&m.as_hmodule())
}

/// The same, for a plain H-module.
pub fn hmodule_is_contractible(m: &HModule) -> bool {
    if m.dim() == 0 {
        return true;
    }
    let hopf = m.hopf();
    let field = m.field();
    let cone = crate::hmodules::cone(m);
    let id = Matrix::identity(field, m.dim());
    let iota = crate::hmodules::lambda_right_inclusion(m);
    let shape = MapShape::full(field, m.dim(), cone.dim());
    let mut constraints: Vec<MapConstraint> = Vec::new();
    for &g in hopf.generators() {
        constraints.push(MapConstraint::Intertwine {
            p: m.action(g),
            q: cone.action(g),
        });
    }
    constraints.push(MapConstraint::ComposeRight { f: &iota, rhs: &id });
    solve_intertwiner(&shape, &constraints).is_some()
}

/// The stable hom `T(M, N) = C^H(M, N)/≃`, computed as the homotopy
/// quotient and cross-checked against `H(hom_space(M, N))`, which must
/// agree exactly (a disagreement would falsify the identification of
/// homotopy classes with homology and is treated as an internal error).
pub struct StableHom {
    pub dim: usize,
    /// Representative morphisms spanning the quotient.
    pub representatives: Vec<Matrix>,
    pub hom: HomSpace,
}

pub fn stable_hom(m: &EquivariantModule, n: &EquivariantModule) -> StableHom {
    let hom = hom_space(m, n);
    let field = m.cat().field();
    let s = hom.dim();

    // Null-homotopic maps: images of φ∘(1⊗λ) for equivariant φ: C(M) → N.
    let cone = m.cone();
    let iota = lambda_inclusion(m);
    let phis = crate::equivariant::equivariant_hom_basis(&cone, n);
    let mut null_rows = Matrix::zeros(field, phis.len(), s);
    for (r, phi) in phis.iter().enumerate() {
        let composite = phi.matmul(&iota);
        let coords = hom
            .coordinates(&composite)
            .expect("null-homotopic maps are A-linear");
        null_rows.paste(r, 0, &coords.transpose());
    }
    let null_span = Subspace::from_rows(s, &null_rows);

    // The two computations must agree: null-homotopic = B(hom_space).
    assert_eq!(
        &null_span,
        hom.homology().b(),
        "homotopy quotient disagrees with the canonical homology of the hom space"
    );

    let z = hom.homology().z().clone();
    let mut working = null_span;
    let mut representatives = Vec::new();
    for r in 0..z.dim() {
        let row = z.basis().submatrix(r..r + 1, 0..s);
        let grown = working.sum(&Subspace::from_rows(s, &row));
        if grown.dim() > working.dim() {
            representatives.push(hom.map_of(&row.transpose()));
            working = grown;
        }
    }
    assert_eq!(representatives.len(), hom.homology().dim_h());
    StableHom {
        dim: representatives.len(),
        representatives,
        hom,
    }
}
