//! Free presentations over A#H and the Ext¹ functor.

use crate::equivariant::{
    cone_adjoint, equivariant_hom_basis, is_morphism, EquivariantModule,
};
use crate::exactla::{Matrix, Subspace};
use crate::hmodules::vec_of_map;
use crate::homotopy::ExtensionData;

/// A free cover `0 → K₀ → F₀ →π M → 0` over Λ = A#H. The cover is built on
/// a greedy generating set (one free slot `Λ·eₓ = A(x,−)⊗H` per generator),
/// which keeps the kernel small; free modules get a zero kernel on the nose.
pub struct Presentation {
    pub module: EquivariantModule,
    pub cover: EquivariantModule,
    pub pi: Matrix,
    pub kernel: EquivariantModule,
    pub kernel_inclusion: Matrix,
    /// Per slot: the generating vector of `module` and the embedding of its
    /// free module into the cover.
    pub slots: Vec<(Matrix, Matrix)>,
}

impl Presentation {
    pub fn new(m: &EquivariantModule) -> Presentation {
        let cat = m.cat();
        let hopf = m.hopf();
        let field = cat.field();
        let d = m.dim();

        // Greedy generating set over the standard basis: a vector is new if
        // it lies outside the Λ-submodule generated so far.
        let mut ops: Vec<&Matrix> = Vec::new();
        for i in 0..cat.total_dim() {
            ops.push(m.a_action(i));
        }
        let hop_start = ops.len();
        for i in 0..hopf.dim() {
            ops.push(m.h_action(i));
        }
        let _ = hop_start;
        let closure = |span: Subspace| -> Subspace {
            let mut cur = span;
            loop {
                let mut rows = cur.basis().clone();
                for op in &ops {
                    rows = rows.vstack(&cur.map_by(op).basis().clone());
                }
                let next = Subspace::from_rows(d, &rows);
                if next.dim() == cur.dim() {
                    return next;
                }
                cur = next;
            }
        };

        let mut generated = Subspace::zero(field, d);
        let mut generators: Vec<usize> = Vec::new();
        for t in 0..d {
            if generated.dim() == d {
                break;
            }
            let mut v = Matrix::zeros(field, d, 1);
            v.set(t, 0, field.one());
            if !generated.contains(&v) {
                generators.push(t);
                let rows = generated.basis().vstack(&v.transpose());
                generated = closure(Subspace::from_rows(d, &rows));
            }
        }
        assert_eq!(generated.dim(), d, "basis vectors generate the module");

        // Object of each generator (basis vectors are homogeneous).
        let object_of = |t: usize| -> usize {
            let offs = m.amod().offsets();
            let grad = m.grading();
            (0..grad.len())
                .find(|&x| t >= offs[x] && t < offs[x] + grad[x])
                .expect("inside some block")
        };

        // Assemble the cover ⊕_j A(x_j,−)⊗H and π.
        let mut cover: Option<EquivariantModule> = None;
        let mut slot_frees: Vec<(EquivariantModule, Vec<usize>, Matrix)> = Vec::new();
        for &t in &generators {
            let x = object_of(t);
            let (col, ordered) =
                EquivariantModule::column_module_ordered(cat, x);
            let free = cone_adjoint(col.amod());
            let mut gen_vec = Matrix::zeros(field, d, 1);
            gen_vec.set(t, 0, field.one());
            slot_frees.push((free.clone(), ordered, gen_vec));
            cover = Some(match cover {
                None => free,
                Some(c) => c.direct_sum(&free),
            });
        }
        let cover = cover.unwrap_or_else(|| EquivariantModule::zero(cat));

        // Embeddings of each slot into the iterated sum (left-assembled).
        let mut embeddings: Vec<Matrix> = Vec::new();
        if !slot_frees.is_empty() {
            let mut partial = slot_frees[0].0.clone();
            embeddings.push(Matrix::identity(field, partial.dim()));
            for (free, _, _) in &slot_frees[1..] {
                let sum = partial.direct_sum(free);
                let e_old = partial.amod().sum_embedding(sum.grading(), true);
                let e_new = free.amod().sum_embedding(sum.grading(), false);
                for e in &mut embeddings {
                    *e = e_old.matmul(e);
                }
                embeddings.push(e_new);
                partial = sum;
            }
        }

        // π: slot j, basis (t, i) = (1⊗b_i)(a_t⊗1)·eₓ ↦ ρ_H(b_i)·ρ_A(a_t)·v_j.
        let dh = hopf.dim();
        let mut pi = Matrix::zeros(field, d, cover.dim());
        for (j, (free, ordered, gen_vec)) in slot_frees.iter().enumerate() {
            let mut local = Matrix::zeros(field, d, free.dim());
            for (tpos, &abasis) in ordered.iter().enumerate() {
                for i in 0..dh {
                    let img = m
                        .h_action(i)
                        .matmul(m.a_action(abasis))
                        .matmul(gen_vec);
                    for r in 0..d {
                        local.set(r, tpos * dh + i, img.get(r, 0).clone());
                    }
                }
            }
            pi = pi.add(&local.matmul(&embeddings[j].transpose()));
        }
        assert_eq!(pi.rank(), d, "the cover must surject");
        debug_assert!(is_morphism(&pi, &cover, m));

        let (kernel, kernel_inclusion) = cover
            .submodule(&pi.kernel())
            .expect("the kernel of a morphism is a graded submodule");

        Presentation {
            module: m.clone(),
            cover,
            pi,
            kernel,
            kernel_inclusion,
            slots: slot_frees
                .into_iter()
                .zip(embeddings)
                .map(|((_, _, g), e)| (g, e))
                .collect(),
        }
    }
}

/// `Ext¹(M, N)` computed as `coker(Hom_Λ(F₀, N) → Hom_Λ(K₀, N))`, with a
/// basis of representing cocycles.
pub struct Ext1Data {
    pub dim: usize,
    /// Cocycles `K₀ → N` spanning the cokernel.
    pub cocycles: Vec<Matrix>,
    pub presentation: Presentation,
}

pub fn ext1(m: &EquivariantModule, n: &EquivariantModule) -> Ext1Data {
    let pres = Presentation::new(m);
    let (dim, cocycles) = ext1_with(&pres, n);
    Ext1Data {
        dim,
        cocycles,
        presentation: pres,
    }
}

/// Ext¹ against a precomputed presentation (the presentation depends only
/// on M, so sweeps over many N reuse it). Returns the dimension and a basis
/// of representing cocycles.
pub fn ext1_with(pres: &Presentation, n: &EquivariantModule) -> (usize, Vec<Matrix>) {
    let field = n.cat().field();
    let k0 = &pres.kernel;
    if k0.dim() == 0 {
        return (0, vec![]);
    }
    let hom_k0 = equivariant_hom_basis(k0, n);
    let s = hom_k0.len();
    if s == 0 {
        return (0, vec![]);
    }
    let mut flat = Matrix::zeros(field, n.dim() * k0.dim(), s);
    for (j, f) in hom_k0.iter().enumerate() {
        flat.paste(0, j, &vec_of_map(f));
    }

    // Maps from the free cover are freely determined by generator images:
    // for slot j with `Λ`-free basis (a_t⊗b_i) and any w in N(x_j), the map
    // sends (a_t⊗b_i)·e_j to ρ(a_t)ρ(b_i)·w. Restrict each to K₀ and take
    // coordinates in the hom basis.
    let hopf = n.hopf();
    let cat = n.cat();
    let dh = hopf.dim();
    let mut image_rows = Matrix::zeros(field, 0, s);
    for (gen_vec, embedding) in &pres.slots {
        // Object of the generator in M: reuse the grading of the module.
        let offs = pres.module.amod().offsets();
        let grad = pres.module.grading();
        let t_idx = (0..pres.module.dim())
            .find(|&t| !gen_vec.get(t, 0).is_zero())
            .expect("generators are nonzero");
        let x = (0..grad.len())
            .find(|&ob| t_idx >= offs[ob] && t_idx < offs[ob] + grad[ob])
            .expect("inside a block");
        // Basis vectors of N(x).
        let n_off = n.amod().offsets()[x];
        for w_local in 0..n.grading()[x] {
            let mut w = Matrix::zeros(field, n.dim(), 1);
            w.set(n_off + w_local, 0, field.one());
            // The free map on this slot, restricted to the cover.
            let ordered = slot_basis_order(cat, x);
            let mut local = Matrix::zeros(field, n.dim(), ordered.len() * dh);
            for (tpos, &abasis) in ordered.iter().enumerate() {
                for i in 0..dh {
                    let img = n.h_action(i).matmul(n.a_action(abasis)).matmul(&w);
                    for r in 0..n.dim() {
                        local.set(r, tpos * dh + i, img.get(r, 0).clone());
                    }
                }
            }
            let on_cover = local.matmul(&embedding.transpose());
            let restricted = on_cover.matmul(&pres.kernel_inclusion);
            let coords = flat
                .solve(&vec_of_map(&restricted))
                .expect("shapes agree")
                .expect("restrictions of free maps are Λ-linear");
            image_rows = image_rows.vstack(&coords.transpose());
        }
    }
    let image = Subspace::from_rows(s, &image_rows);

    // Lift a basis of the cokernel.
    let mut working = image;
    let mut cocycles = Vec::new();
    for j in 0..s {
        let mut coords = Matrix::zeros(field, 1, s);
        coords.set(0, j, field.one());
        let grown = working.sum(&Subspace::from_rows(s, &coords));
        if grown.dim() > working.dim() {
            cocycles.push(hom_k0[j].clone());
            working = grown;
        }
    }
    (cocycles.len(), cocycles)
}

fn slot_basis_order(
    cat: &std::sync::Arc<crate::equivariant::HModuleCategory>,
    x: usize,
) -> Vec<usize> {
    let mut ordered: Vec<usize> = (0..cat.total_dim())
        .filter(|&t| cat.block_of(t).0 == x)
        .collect();
    ordered.sort_by_key(|&t| (cat.block_of(t).1, t));
    ordered
}

/// Realize a cocycle `c: K₀ → N` as an extension `0 → N → E → M → 0` by the
/// pushout of the presentation along `c`. The extension splits
/// equivariantly iff the cocycle is a coboundary.
pub fn extension_from_cocycle(
    pres: &Presentation,
    n: &EquivariantModule,
    c: &Matrix,
) -> ExtensionData {
    let field = n.cat().field();
    let w = n.direct_sum(&pres.cover);
    let e_n = n.amod().sum_embedding(w.grading(), true);
    let e_f = pres.cover.amod().sum_embedding(w.grading(), false);

    let r_map = e_n
        .matmul(c)
        .sub(&e_f.matmul(&pres.kernel_inclusion));
    let relations = Subspace::from_columns(w.dim(), &r_map);
    let (e_mod, proj, section) = w
        .quotient(&relations)
        .expect("the graph of a cocycle is an invariant graded subspace");
    let i_e = proj.matmul(&e_n);
    let q_w = pres.pi.matmul(&e_f.transpose());
    let p_e = q_w.matmul(&section);
    let _ = field;
    ExtensionData::new(n.clone(), e_mod, pres.module.clone(), i_e, p_e)
        .expect("the pushout row is exact")
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::equivariant::{trivial_category, EquivariantModule};
    use crate::hmodules::{jordan_decompose, jordan_module, regular_module, HModule};
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
    fn free_modules_have_zero_kernel_and_ext() {
        let (h, cat) = k_context(3);
        let reg = EquivariantModule::from_hmodule(&regular_module(&h), &cat);
        let pres = Presentation::new(&reg);
        assert_eq!(pres.kernel.dim(), 0);
        for n in [
            EquivariantModule::from_hmodule(&HModule::trivial(&h), &cat),
            reg.clone(),
        ] {
            assert_eq!(ext1(&reg, &n).dim, 0);
        }
    }

    #[test]
    fn ext_of_trivial_by_trivial_over_dp() {
        for p in [2u64, 3, 5] {
            let (h, cat) = k_context(p);
            let k = EquivariantModule::from_hmodule(&HModule::trivial(&h), &cat);
            let e = ext1(&k, &k);
            assert_eq!(e.dim, 1, "ext1(k,k) over divided_power:{p}");
        }
    }

    #[test]
    fn nonzero_cocycle_gives_jordan_block_extension() {
        let (h, cat) = k_context(3);
        let k = EquivariantModule::from_hmodule(&HModule::trivial(&h), &cat);
        let e = ext1(&k, &k);
        let ext = extension_from_cocycle(&e.presentation, &k, &e.cocycles[0]);
        // The middle term is J2 by the Jordan oracle.
        let middle = crate::hmodules::validate_module(
            &h,
            (0..h.dim()).map(|i| ext.middle.h_action(i).clone()).collect(),
        )
        .unwrap();
        assert_eq!(jordan_decompose(&middle).unwrap(), vec![2]);
        assert!(ext.equivariant_retraction().is_none());
        assert!(ext.a_split_retraction().is_some());
    }

    #[test]
    fn zero_cocycle_splits() {
        let (h, cat) = k_context(3);
        let k = EquivariantModule::from_hmodule(&HModule::trivial(&h), &cat);
        let j2 = EquivariantModule::from_hmodule(&jordan_module(&h, 2).unwrap(), &cat);
        let e = ext1(&k, &j2);
        let zero = Matrix::zeros(h.field(), j2.dim(), e.presentation.kernel.dim());
        let ext = extension_from_cocycle(&e.presentation, &j2, &zero);
        assert!(ext.equivariant_retraction().is_some());
    }

    #[test]
    fn coboundaries_split_and_cocycles_do_not() {
        // Both directions of the Ext¹ correspondence on a catalog case.
        let (h, cat) = k_context(2);
        let k = EquivariantModule::from_hmodule(&HModule::trivial(&h), &cat);
        let e = ext1(&k, &k);
        assert_eq!(e.dim, 1);
        for c in &e.cocycles {
            let ext = extension_from_cocycle(&e.presentation, &k, c);
            assert!(ext.equivariant_retraction().is_none());
        }
    }
}
