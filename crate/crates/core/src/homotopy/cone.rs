//! Mapping cones and standard triangles.

use crate::equivariant::{is_morphism, EquivariantModule};
use crate::exactla::{solve_intertwiner, MapConstraint, MapShape, Matrix, Subspace};
use crate::hmodules::quotient_by_integral;

use super::homotopies::{is_homotopic, lambda_inclusion};

/// A standard triangle `M →f N →j_f C_f →δ_f Σ(M)`: the mapping cone with
/// its structure maps, the verified exact row `0 → N → C_f → Σ(M) → 0`, and
/// the commuting pushout square.
pub struct TriangleData {
    pub source: EquivariantModule,
    pub target: EquivariantModule,
    pub f: Matrix,
    pub cone: EquivariantModule,
    pub j_f: Matrix,
    pub delta_f: Matrix,
    /// `q_f: C(M) → C_f`, the pushout leg.
    pub q_f: Matrix,
    pub suspension: EquivariantModule,
}

/// `C_f = (N ⊕ C(M)) / {(f(m), −m⊗λ)}` with the induced maps. The exact
/// row and the pushout square are verified on construction.
pub fn mapping_cone(
    m: &EquivariantModule,
    n: &EquivariantModule,
    f: &Matrix,
) -> TriangleData {
    assert!(is_morphism(f, m, n), "mapping cone needs a morphism of C^H");
    let field = m.cat().field();
    let cone_m = m.cone();
    let iota = lambda_inclusion(m);

    let w = n.direct_sum(&cone_m);
    let e_n = n.amod().sum_embedding(w.grading(), true);
    let e_c = cone_m.amod().sum_embedding(w.grading(), false);

    // The graph of (f, −ι): a graded invariant subspace of W.
    let r_map = e_n.matmul(f).sub(&e_c.matmul(&iota));
    let relations = Subspace::from_columns(w.dim(), &r_map);
    let (cone, proj, section) = w
        .quotient(&relations)
        .expect("the relation subspace is an invariant graded submodule");

    let j_f = proj.matmul(&e_n);
    // Σ(M) and the projection C(M) → Σ(M) = M⊗(H/(λ)).
    let suspension = m.suspend();
    let (_, lam_proj, _) = quotient_by_integral(m.hopf());
    let id_m = Matrix::identity(field, m.dim());
    let p_m = id_m.kronecker(&lam_proj).expect("same field");
    let q_w = p_m.matmul(&e_c.transpose());
    let delta_f = q_w.matmul(&section);
    let q_f = proj.matmul(&e_c);

    // Exact row and pushout square.
    assert_eq!(cone.dim(), n.dim() + suspension.dim());
    assert_eq!(j_f.rank(), n.dim(), "j_f must be injective");
    assert_eq!(delta_f.rank(), suspension.dim(), "δ_f must be surjective");
    assert!(delta_f.matmul(&j_f).is_zero(), "δ_f ∘ j_f = 0");
    assert_eq!(
        q_f.matmul(&iota),
        j_f.matmul(f),
        "the pushout square must commute"
    );
    debug_assert!(is_morphism(&j_f, n, &cone));
    debug_assert!(is_morphism(&delta_f, &cone, &suspension));

    TriangleData {
        source: m.clone(),
        target: n.clone(),
        f: f.clone(),
        cone,
        j_f,
        delta_f,
        q_f,
        suspension,
    }
}

/// Both sides of the null-homotopy/split-cone equivalence, asserted to
/// agree: `f ≃ 0` iff the cone extension is isomorphic to the trivial one
/// (equivalently, `j_f` has an equivariant retraction).
pub struct ConeSplitVerdict {
    pub null_homotopic: bool,
    pub cone_splits: bool,
    pub homotopy: Option<Matrix>,
    pub retraction: Option<Matrix>,
}

pub fn null_homotopy_iff_cone_splits(
    m: &EquivariantModule,
    n: &EquivariantModule,
    f: &Matrix,
) -> ConeSplitVerdict {
    let zero = Matrix::zeros(m.cat().field(), n.dim(), m.dim());
    let homotopy = is_homotopic(m, n, f, &zero);

    let tri = mapping_cone(m, n, f);
    // An equivariant retraction ρ: C_f → N with ρ∘j_f = 1; together with
    // δ_f it assembles to an isomorphism of extensions C_f ≅ N ⊕ Σ(M).
    let cat = m.cat();
    let hopf = m.hopf();
    let id_n = Matrix::identity(cat.field(), n.dim());
    let shape = MapShape::masked(
        cat.field(),
        n.dim(),
        tri.cone.dim(),
        tri.cone.amod().graded_mask_into(n.amod()),
    );
    let mut constraints: Vec<MapConstraint> = Vec::new();
    for &g in cat.generators() {
        constraints.push(MapConstraint::Intertwine {
            p: n.a_action(g),
            q: tri.cone.a_action(g),
        });
    }
    for &g in hopf.generators() {
        constraints.push(MapConstraint::Intertwine {
            p: n.h_action(g),
            q: tri.cone.h_action(g),
        });
    }
    constraints.push(MapConstraint::ComposeRight {
        f: &tri.j_f,
        rhs: &id_n,
    });
    let retraction = solve_intertwiner(&shape, &constraints).map(|s| s.particular);

    let verdict = ConeSplitVerdict {
        null_homotopic: homotopy.is_some(),
        cone_splits: retraction.is_some(),
        homotopy,
        retraction,
    };
    assert_eq!(
        verdict.null_homotopic, verdict.cone_splits,
        "null homotopy and cone splitting must agree"
    );
    verdict
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::equivariant::trivial_category;
    use crate::hmodules::{homology, jordan_module, regular_module, HModule};
    use crate::hopfcore::divided_power;

    fn k_context(
        p: u64,
    ) -> (
        Arc<crate::hopfcore::HopfPresentation>,
        Arc<crate::equivariant::HModuleCategory>,
    ) {
        let h = Arc::new(divided_power(p).unwrap());
        let cat = Arc::new(trivial_category(&h));
        (h, cat)
    }

    #[test]
    fn cone_dimension_bookkeeping() {
        let (h, cat) = k_context(3);
        let m = EquivariantModule::from_hmodule(&jordan_module(&h, 2).unwrap(), &cat);
        let n = EquivariantModule::from_hmodule(&jordan_module(&h, 3).unwrap(), &cat);
        let f = Matrix::zeros(h.field(), 3, 2);
        let tri = mapping_cone(&m, &n, &f);
        // dim C_f = dim N + dim M·dim H − dim M.
        assert_eq!(tri.cone.dim(), 3 + 2 * 3 - 2);
    }

    #[test]
    fn cone_of_identity_is_sigma_acyclic() {
        let (h, cat) = k_context(3);
        let m = EquivariantModule::from_hmodule(&jordan_module(&h, 2).unwrap(), &cat);
        let id = Matrix::identity(h.field(), 2);
        let tri = mapping_cone(&m, &m, &id);
        for n in -2..=2 {
            assert_eq!(
                homology(&tri.cone.sigma_power(n).as_hmodule()).dim_h(),
                0,
                "n = {n}"
            );
        }
    }

    #[test]
    fn zero_map_gives_split_cone() {
        let (h, cat) = k_context(2);
        let m = EquivariantModule::from_hmodule(&HModule::trivial(&h), &cat);
        let n = EquivariantModule::from_hmodule(&regular_module(&h), &cat);
        let f = Matrix::zeros(h.field(), 2, 1);
        let v = null_homotopy_iff_cone_splits(&m, &n, &f);
        assert!(v.null_homotopic && v.cone_splits);
    }

    #[test]
    fn identity_on_k_gives_unsplit_cone() {
        let (h, cat) = k_context(3);
        let k = EquivariantModule::from_hmodule(&HModule::trivial(&h), &cat);
        let id = Matrix::identity(h.field(), 1);
        let v = null_homotopy_iff_cone_splits(&k, &k, &id);
        assert!(!v.null_homotopic && !v.cone_splits);
    }
}
