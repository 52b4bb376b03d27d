//! Quasi-isomorphisms, Σ-window predicates, and long exact sequences.
//!
//! Σ-quantification over all of ℤ is not decidable generically, so every
//! Σ-predicate here is window-relative: it quantifies over `n ∈ [−w, w]`
//! and says so in its name and reports.

use crate::equivariant::EquivariantModule;
use crate::error::ModuleError;
use crate::exactla::{Matrix, Subspace};
use crate::hmodules::{homology, induced_on_homology, HomologyData};

use super::cone::mapping_cone;
use super::extension::ExtensionData;

/// `Σⁿf` as a matrix (`f ⊗ 1` on the iterated suspension factors), matching
/// the index layout of `EquivariantModule::sigma_power`.
pub fn sigma_map(
    m: &EquivariantModule,
    f: &Matrix,
    n: i64,
) -> Matrix {
    let hopf = m.hopf();
    let field = m.cat().field();
    let q_dim = hopf.dim() - 1;
    let mut out = f.clone();
    let steps = n.unsigned_abs();
    for _ in 0..steps {
        let id = Matrix::identity(field, q_dim);
        out = out.kronecker(&id).expect("same field");
    }
    out
}

/// Whether `H(f): H(M) → H(N)` is an isomorphism.
pub fn is_quism(m: &EquivariantModule, n: &EquivariantModule, f: &Matrix) -> bool {
    let hm = homology(&m.as_hmodule());
    let hn = homology(&n.as_hmodule());
    if hm.dim_h() != hn.dim_h() {
        return false;
    }
    let induced = induced_on_homology(f, &hm, &hn);
    induced.rank() == hn.dim_h()
}

/// Whether `H(Σⁿf)` is an isomorphism for every `n ∈ [−window, window]`.
pub fn is_sigma_quism(
    m: &EquivariantModule,
    n: &EquivariantModule,
    f: &Matrix,
    window: u32,
) -> bool {
    let w = window as i64;
    for k in -w..=w {
        let sm = m.sigma_power(k);
        let sn = n.sigma_power(k);
        let sf = sigma_map(m, f, k);
        if !is_quism(&sm, &sn, &sf) {
            return false;
        }
    }
    true
}

/// Whether `H(ΣⁿM) = 0` for every `n ∈ [−window, window]`, checking n = 0
/// first so that most failures exit cheaply.
pub fn is_sigma_acyclic(m: &EquivariantModule, window: u32) -> bool {
    if homology(&m.as_hmodule()).dim_h() != 0 {
        return false;
    }
    let mut up = m.clone();
    for _ in 0..window {
        up = up.suspend();
        if homology(&up.as_hmodule()).dim_h() != 0 {
            return false;
        }
    }
    let mut down = m.clone();
    for _ in 0..window {
        down = down.desuspend();
        if homology(&down.as_hmodule()).dim_h() != 0 {
            return false;
        }
    }
    true
}

/// One joint of a long exact sequence: `rank_in + rank_out` versus the
/// middle homology dimension (exact iff equal, given the composite is 0).
#[derive(Clone, Debug)]
pub struct LesJoint {
    pub n: i64,
    pub at: &'static str,
    pub dim_middle: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub composite_zero: bool,
}

impl LesJoint {
    pub fn exact(&self) -> bool {
        self.composite_zero && self.rank_in + self.rank_out == self.dim_middle
    }
}

/// Exactness report for the homology long exact sequence of an A-split
/// extension over a window.
pub struct LongExactReport {
    pub joints: Vec<LesJoint>,
}

impl LongExactReport {
    pub fn all_exact(&self) -> bool {
        self.joints.iter().all(LesJoint::exact)
    }
}

/// Build the triangle of an A-split short exact sequence through the
/// mapping cone of `i`, transport its connecting map to homology, and check
/// exactness of `… → H(ΣⁿL) → H(ΣⁿM) → H(ΣⁿN) → H(Σⁿ⁺¹L) → …` at every
/// joint of the window.
pub fn long_exact_check(
    ext: &ExtensionData,
    window: u32,
) -> Result<LongExactReport, ModuleError> {
    if ext.a_split_retraction().is_none() {
        return Err(ModuleError::NotAMorphism("an A-split extension"));
    }
    let tri = mapping_cone(&ext.sub, &ext.middle, &ext.i);
    // u: C_i → N, induced by (p, 0) on M ⊕ C(L) through the pushout; it is
    // a quism because the row is A-split. Recover it from u∘j_f = p and
    // u∘q_f = 0, which determine u since [j_f | q_f] spans the cone.
    let u = {
        let stacked = tri.j_f.hstack(&tri.q_f);
        let rhs = ext
            .p
            .hstack(&Matrix::zeros(ext.p.field(), ext.quotient.dim(), tri.q_f.cols()));
        let ut = stacked
            .transpose()
            .solve(&rhs.transpose())
            .expect("shapes agree")
            .expect("u exists by the universal property of the pushout");
        let u = ut.transpose();
        debug_assert_eq!(u.matmul(&stacked), rhs);
        u
    };

    // Degree n of the long exact sequence lives on the Σⁿ-suspended
    // triangle; Σⁿ(ΣL) and Σⁿ⁺¹L only agree on the nose for n ≥ 0, so the
    // third joint is computed entirely inside the suspended triangle.
    let susp_middle = ext.middle.suspend();
    let field = ext.i.field();
    let q_dim = ext.sub.hopf().dim() - 1;
    let susp_i = ext
        .i
        .kronecker(&Matrix::identity(field, q_dim))
        .expect("same field");

    let wdw = window as i64;
    let mut joints = Vec::new();
    for k in -wdw..=wdw {
        let sl = ext.sub.sigma_power(k);
        let sm = ext.middle.sigma_power(k);
        let sn = ext.quotient.sigma_power(k);
        let ssl = tri.suspension.sigma_power(k);
        let ssm = susp_middle.sigma_power(k);
        let (hl, hm, hn, h_ssl, h_ssm) = (
            homology(&sl.as_hmodule()),
            homology(&sm.as_hmodule()),
            homology(&sn.as_hmodule()),
            homology(&ssl.as_hmodule()),
            homology(&ssm.as_hmodule()),
        );
        let hi = induced_on_homology(&sigma_map(&ext.sub, &ext.i, k), &hl, &hm);
        let hp = induced_on_homology(&sigma_map(&ext.middle, &ext.p, k), &hm, &hn);

        // Connecting map through the cone: H(Σⁿ u) is invertible since u is
        // a quism; δ = H(Σⁿ δ_i) ∘ H(Σⁿ u)⁻¹.
        let s_cone = tri.cone.sigma_power(k);
        let h_cone = homology(&s_cone.as_hmodule());
        let hu = induced_on_homology(&sigma_map(&tri.cone, &u, k), &h_cone, &hn);
        let hu_inv = hu
            .inverse()
            .expect("u is a quism for an A-split extension");
        let hdelta = {
            let hd = induced_on_homology(
                &sigma_map(&tri.cone, &tri.delta_f, k),
                &h_cone,
                &h_ssl,
            );
            hd.matmul(&hu_inv)
        };
        // The next map of the sequence, Σⁿ(Σi): Σⁿ(ΣL) → Σⁿ(ΣM).
        let h_susp_i = induced_on_homology(
            &sigma_map(&tri.suspension, &susp_i, k),
            &h_ssl,
            &h_ssm,
        );

        joints.push(joint(k, "H(M)", &hm, &hi, &hp));
        joints.push(joint(k, "H(N)", &hn, &hp, &hdelta));
        joints.push(joint(k, "H(ΣL)", &h_ssl, &hdelta, &h_susp_i));
    }
    Ok(LongExactReport { joints })
}

fn joint(
    n: i64,
    at: &'static str,
    middle: &HomologyData,
    incoming: &Matrix,
    outgoing: &Matrix,
) -> LesJoint {
    LesJoint {
        n,
        at,
        dim_middle: middle.dim_h(),
        rank_in: incoming.rank(),
        rank_out: outgoing.rank(),
        composite_zero: outgoing.matmul(incoming).is_zero(),
    }
}

/// For a surjective quism, both `Z(f)` and `B(f)` are surjective; check by
/// rank computations.
pub fn surjectivity_transfer(
    m: &EquivariantModule,
    n: &EquivariantModule,
    f: &Matrix,
) -> Result<bool, ModuleError> {
    if f.rank() != n.dim() {
        return Err(ModuleError::NotAMorphism("surjective"));
    }
    if !is_quism(m, n, f) {
        return Err(ModuleError::NotAMorphism("a quism"));
    }
    let hm = homology(&m.as_hmodule());
    let hn = homology(&n.as_hmodule());
    let z_image = image_of_subspace(f, hm.z());
    let b_image = image_of_subspace(f, hm.b());
    Ok(z_image == *hn.z() && b_image == *hn.b())
}

fn image_of_subspace(f: &Matrix, s: &Subspace) -> Subspace {
    s.map_by(f)
}
