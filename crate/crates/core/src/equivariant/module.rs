//! Modules over a category algebra and H-equivariant A-modules.

use std::sync::Arc;

use crate::error::ModuleError;
use crate::exactla::{quotient_map, Matrix, Scalar, Subspace};
use crate::hmodules::HModule;
use crate::hopfcore::HopfPresentation;

use super::category::HModuleCategory;

/// A module over the underlying k-category of an [`HModuleCategory`]: an
/// object-graded space with one action matrix per basis morphism of A₁.
#[derive(Clone, Debug)]
pub struct CategoryModule {
    cat: Arc<HModuleCategory>,
    grading: Vec<usize>,
    offsets: Vec<usize>,
    dim: usize,
    action: Vec<Matrix>,
}

impl CategoryModule {
    pub(crate) fn new_unchecked(
        cat: Arc<HModuleCategory>,
        grading: Vec<usize>,
        action: Vec<Matrix>,
    ) -> CategoryModule {
        assert_eq!(grading.len(), cat.n_objects());
        assert_eq!(action.len(), cat.total_dim());
        let mut offsets = Vec::with_capacity(grading.len());
        let mut dim = 0;
        for g in &grading {
            offsets.push(dim);
            dim += g;
        }
        for a in &action {
            assert!(a.rows() == dim && a.cols() == dim);
        }
        CategoryModule {
            cat,
            grading,
            offsets,
            dim,
            action,
        }
    }

    /// Validate the unit, algebra-map and grading axioms.
    pub fn validate(
        cat: &Arc<HModuleCategory>,
        grading: Vec<usize>,
        action: Vec<Matrix>,
    ) -> Result<CategoryModule, ModuleError> {
        let m = CategoryModule::new_unchecked(cat.clone(), grading, action);
        m.check_axioms()?;
        Ok(m)
    }

    pub fn check_axioms(&self) -> Result<(), ModuleError> {
        let cat = &self.cat;
        let field = cat.field();
        // Unit idempotents act as the block projections.
        for x in 0..cat.n_objects() {
            let px = self.action_of(cat.object_unit(x));
            let expected = Matrix::from_fn(field, self.dim, self.dim, |i, j| {
                let inside = |t: usize| {
                    t >= self.offsets[x] && t < self.offsets[x] + self.grading[x]
                };
                if i == j && inside(i) {
                    field.one()
                } else {
                    field.zero()
                }
            });
            if px != expected {
                return Err(ModuleError::UnitAction);
            }
        }
        // Algebra map.
        for i in 0..cat.total_dim() {
            for j in 0..cat.total_dim() {
                let prod = self.action[i].matmul(&self.action[j]);
                let mut expected = Matrix::zeros(field, self.dim, self.dim);
                for k in 0..cat.total_dim() {
                    let c = cat.left_mult(i).get(k, j);
                    if !c.is_zero() {
                        expected = expected.add(&self.action[k].scale(c));
                    }
                }
                if prod != expected {
                    return Err(ModuleError::NotAlgebraMap { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn cat(&self) -> &Arc<HModuleCategory> {
        &self.cat
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grading(&self) -> &[usize] {
        &self.grading
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn action_of(&self, x: &[Scalar]) -> Matrix {
        let field = self.cat.field();
        let mut out = Matrix::zeros(field, self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[i].scale(c));
            }
        }
        out
    }

    /// Mask of entries allowed for a grading-preserving map into `target`.
    pub fn graded_mask_into(&self, target: &CategoryModule) -> Vec<bool> {
        assert_eq!(self.cat.n_objects(), target.cat.n_objects());
        let mut mask = vec![false; target.dim * self.dim];
        for x in 0..self.grading.len() {
            for r in target.offsets[x]..target.offsets[x] + target.grading[x] {
                for c in self.offsets[x]..self.offsets[x] + self.grading[x] {
                    mask[r * self.dim + c] = true;
                }
            }
        }
        mask
    }

    pub fn direct_sum(&self, other: &CategoryModule) -> CategoryModule {
        assert!(*self.cat == *other.cat);
        // Concatenate blockwise so the grading stays contiguous.
        let grading: Vec<usize> = self
            .grading
            .iter()
            .zip(&other.grading)
            .map(|(a, b)| a + b)
            .collect();
        let dim = self.dim + other.dim;
        let embed_self = self.sum_embedding(&grading, true);
        let embed_other = other.sum_embedding(&grading, false);
        let action = (0..self.cat.total_dim())
            .map(|i| {
                let a = embed_self
                    .matmul(&self.action[i])
                    .matmul(&embed_self.transpose());
                let b = embed_other
                    .matmul(&other.action[i])
                    .matmul(&embed_other.transpose());
                a.add(&b)
            })
            .collect();
        let out = CategoryModule::new_unchecked(self.cat.clone(), grading, action);
        assert_eq!(out.dim, dim);
        out
    }

    /// Embedding of this module into a blockwise sum with the given total
    /// grading; `first` selects the leading slice of each block.
    pub fn sum_embedding(&self, sum_grading: &[usize], first: bool) -> Matrix {
        let field = self.cat.field();
        let total: usize = sum_grading.iter().sum();
        let mut sum_offsets = Vec::with_capacity(sum_grading.len());
        let mut acc = 0;
        for g in sum_grading {
            sum_offsets.push(acc);
            acc += g;
        }
        let mut out = Matrix::zeros(field, total, self.dim);
        for x in 0..self.grading.len() {
            let dst0 = if first {
                sum_offsets[x]
            } else {
                sum_offsets[x] + (sum_grading[x] - self.grading[x])
            };
            for t in 0..self.grading[x] {
                out.set(dst0 + t, self.offsets[x] + t, field.one());
            }
        }
        out
    }
}

/// An H-equivariant A-module: a graded A-module together with a compatible
/// grading-preserving H-action.
#[derive(Clone, Debug)]
pub struct EquivariantModule {
    amod: CategoryModule,
    h_action: Vec<Matrix>,
}

/// Validate all equivariant-module axioms.
pub fn validate_equivariant(
    cat: &Arc<HModuleCategory>,
    grading: Vec<usize>,
    a_action: Vec<Matrix>,
    h_action: Vec<Matrix>,
) -> Result<EquivariantModule, ModuleError> {
    let amod = CategoryModule::validate(cat, grading, a_action)?;
    let m = EquivariantModule { amod, h_action };
    m.check_axioms()?;
    Ok(m)
}

impl EquivariantModule {
    pub(crate) fn new_unchecked(
        amod: CategoryModule,
        h_action: Vec<Matrix>,
    ) -> EquivariantModule {
        assert_eq!(h_action.len(), amod.cat().hopf().dim());
        for m in &h_action {
            assert!(m.rows() == amod.dim() && m.cols() == amod.dim());
        }
        EquivariantModule { amod, h_action }
    }

    /// H-module law, grading preservation and the compatibility
    /// `h·(a·m) = Σ (h₁·a)·(h₂·m)`; the A-module axioms are checked when
    /// the underlying [`CategoryModule`] is built.
    pub fn check_axioms(&self) -> Result<(), ModuleError> {
        let cat = self.cat();
        let hopf = cat.hopf();
        self.as_hmodule().check_algebra_map()?;
        for (hi, m) in self.h_action.iter().enumerate() {
            for x in 0..self.grading().len() {
                for y in 0..self.grading().len() {
                    if x == y {
                        continue;
                    }
                    for r in self.block_rows(y) {
                        for c in self.block_rows(x) {
                            if !m.get(r, c).is_zero() {
                                return Err(ModuleError::Shape(format!(
                                    "h_action[{hi}] crosses the object grading"
                                )));
                            }
                        }
                    }
                }
            }
        }
        for hi in 0..hopf.dim() {
            for ai in 0..cat.total_dim() {
                let lhs = self.h_action[hi].matmul(self.amod.action(ai));
                let mut rhs = Matrix::zeros(cat.field(), self.dim(), self.dim());
                for (h1, h2, c) in hopf.comult(hi).terms() {
                    let ha = cat.h_on_basis(*h1, ai);
                    let term = self.amod.action_of(&ha).matmul(&self.h_action[*h2]);
                    rhs = rhs.add(&term.scale(c));
                }
                if lhs != rhs {
                    return Err(ModuleError::NotAlgebraMap { i: hi, j: ai });
                }
            }
        }
        Ok(())
    }

    fn block_rows(&self, x: usize) -> std::ops::Range<usize> {
        self.amod.offsets()[x]..self.amod.offsets()[x] + self.amod.grading()[x]
    }

    pub fn cat(&self) -> &Arc<HModuleCategory> {
        self.amod.cat()
    }

    pub fn hopf(&self) -> &Arc<HopfPresentation> {
        self.amod.cat().hopf()
    }

    pub fn dim(&self) -> usize {
        self.amod.dim()
    }

    pub fn grading(&self) -> &[usize] {
        self.amod.grading()
    }

    pub fn a_action(&self, i: usize) -> &Matrix {
        self.amod.action(i)
    }

    pub fn h_action(&self, i: usize) -> &Matrix {
        &self.h_action[i]
    }

    pub fn amod(&self) -> &CategoryModule {
        &self.amod
    }

    pub fn same_context(&self, other: &EquivariantModule) -> bool {
        *self.cat() == *other.cat()
    }

    /// The underlying H-module (forgetting A).
    pub fn as_hmodule(&self) -> HModule {
        HModule::new_unchecked(self.hopf().clone(), self.h_action.clone())
    }

    /// View a plain H-module as an equivariant module over A = k.
    pub fn from_hmodule(m: &HModule, trivial_cat: &Arc<HModuleCategory>) -> EquivariantModule {
        assert_eq!(trivial_cat.total_dim(), 1, "expected the category k");
        let field = trivial_cat.field();
        let amod = CategoryModule::new_unchecked(
            trivial_cat.clone(),
            vec![m.dim()],
            vec![Matrix::identity(field, m.dim())],
        );
        EquivariantModule::new_unchecked(amod, m.actions().to_vec())
    }

    pub fn zero(cat: &Arc<HModuleCategory>) -> EquivariantModule {
        let field = cat.field();
        let grading = vec![0; cat.n_objects()];
        let amod = CategoryModule::new_unchecked(
            cat.clone(),
            grading,
            vec![Matrix::zeros(field, 0, 0); cat.total_dim()],
        );
        EquivariantModule::new_unchecked(
            amod,
            vec![Matrix::zeros(field, 0, 0); cat.hopf().dim()],
        )
    }

    /// The free rank-one column module A(x, −) = ⊕_y A(x, y), which is the
    /// equivariant module C(A eₓ); over the smash product these are exactly
    /// the free modules of rank one.
    pub fn column_module(cat: &Arc<HModuleCategory>, x: usize) -> EquivariantModule {
        EquivariantModule::column_module_ordered(cat, x).0
    }

    /// Like [`EquivariantModule::column_module`], also returning the list of
    /// A₁-basis indices realizing the module basis (target-major order).
    pub fn column_module_ordered(
        cat: &Arc<HModuleCategory>,
        x: usize,
    ) -> (EquivariantModule, Vec<usize>) {
        // Basis: all morphisms with source x, in basis order; H acts by the
        // category action, A by composition.
        let field = cat.field();
        let indices: Vec<usize> = (0..cat.total_dim())
            .filter(|&t| cat.block_of(t).0 == x)
            .collect();
        let mut grading = vec![0; cat.n_objects()];
        for &t in &indices {
            grading[cat.block_of(t).1] += 1;
        }
        // Check that basis order groups targets contiguously (it does, for
        // block-lex enumeration with fixed source... not in general), so
        // instead reorder by target.
        let mut ordered = indices.clone();
        ordered.sort_by_key(|&t| (cat.block_of(t).1, t));
        let pos_of = |t: usize| ordered.iter().position(|&s| s == t).expect("in set");
        let d = ordered.len();
        let a_action = (0..cat.total_dim())
            .map(|i| {
                let mut m = Matrix::zeros(field, d, d);
                for (cpos, &t) in ordered.iter().enumerate() {
                    let prod = cat.left_mult(i).column(t);
                    for (k, c) in prod.iter().enumerate() {
                        if !c.is_zero() {
                            if cat.block_of(k).0 == x {
                                m.set(pos_of(k), cpos, c.clone());
                            } else {
                                assert!(c.is_zero());
                            }
                        }
                    }
                }
                m
            })
            .collect();
        let h_action = (0..cat.hopf().dim())
            .map(|i| {
                let mut m = Matrix::zeros(field, d, d);
                for (cpos, &t) in ordered.iter().enumerate() {
                    let acted = cat.h_action(i).column(t);
                    for (k, c) in acted.iter().enumerate() {
                        if !c.is_zero() {
                            m.set(pos_of(k), cpos, c.clone());
                        }
                    }
                }
                m
            })
            .collect();
        let amod = CategoryModule::new_unchecked(cat.clone(), grading, a_action);
        (EquivariantModule::new_unchecked(amod, h_action), ordered)
    }

    pub fn direct_sum(&self, other: &EquivariantModule) -> EquivariantModule {
        assert!(self.same_context(other));
        let amod = self.amod.direct_sum(&other.amod);
        let e1 = self.amod.sum_embedding(amod.grading(), true);
        let e2 = other.amod.sum_embedding(amod.grading(), false);
        let h_action = (0..self.hopf().dim())
            .map(|i| {
                e1.matmul(self.h_action(i))
                    .matmul(&e1.transpose())
                    .add(&e2.matmul(other.h_action(i)).matmul(&e2.transpose()))
            })
            .collect();
        EquivariantModule::new_unchecked(amod, h_action)
    }

    /// Right action of an H-module: A acts on the M factor, H diagonally.
    /// Composite indices are M-major, so the object grading stays
    /// contiguous with block dims `grading[x]·dim V`.
    pub fn tensor_hmodule(&self, v: &HModule) -> Result<EquivariantModule, ModuleError> {
        if !(Arc::ptr_eq(self.hopf(), v.hopf()) || **self.hopf() == **v.hopf()) {
            return Err(ModuleError::HopfMismatch);
        }
        let field = self.cat().field();
        let dv = v.dim();
        let grading: Vec<usize> = self.grading().iter().map(|g| g * dv).collect();
        let idv = Matrix::identity(field, dv);
        let a_action: Vec<Matrix> = (0..self.cat().total_dim())
            .map(|i| self.a_action(i).kronecker(&idv).expect("same field"))
            .collect();
        let hopf = self.hopf().clone();
        let h_action: Vec<Matrix> = (0..hopf.dim())
            .map(|i| {
                let mut m = Matrix::zeros(field, self.dim() * dv, self.dim() * dv);
                for (h1, h2, c) in hopf.comult(i).terms() {
                    let kron = self.h_action(*h1)
                        .kronecker(v.action(*h2))
                        .expect("same field");
                    m = m.add(&kron.scale(c));
                }
                m
            })
            .collect();
        let amod = CategoryModule::new_unchecked(self.cat().clone(), grading, a_action);
        Ok(EquivariantModule::new_unchecked(amod, h_action))
    }

    /// `C(M) = M⊗H`.
    pub fn cone(&self) -> EquivariantModule {
        self.tensor_hmodule(&crate::hmodules::regular_module(self.hopf()))
            .expect("same hopf")
    }

    /// `Σ(M) = M⊗(H/(λ))`.
    pub fn suspend(&self) -> EquivariantModule {
        self.tensor_hmodule(&crate::hmodules::quotient_by_integral(self.hopf()).0)
            .expect("same hopf")
    }

    /// `Σ⁻¹(M) = M⊗Ker ε`.
    pub fn desuspend(&self) -> EquivariantModule {
        self.tensor_hmodule(&crate::hmodules::counit_kernel_module(self.hopf()).0)
            .expect("same hopf")
    }

    pub fn sigma_power(&self, n: i64) -> EquivariantModule {
        let mut out = self.clone();
        if n >= 0 {
            for _ in 0..n {
                out = out.suspend();
            }
        } else {
            for _ in 0..(-n) {
                out = out.desuspend();
            }
        }
        out
    }

    /// Restrict to a subspace invariant under both actions and compatible
    /// with the grading; returns the restricted module and the inclusion.
    pub fn submodule(&self, sub: &Subspace) -> Option<(EquivariantModule, Matrix)> {
        // Grading compatibility: the subspace must be spanned blockwise.
        let grading = self.graded_dims_of(sub)?;
        let incl = sub.inclusion();
        let restrict = |ops: &[Matrix]| -> Option<Vec<Matrix>> {
            ops.iter()
                .map(|a| sub.coordinates_of_columns(&a.matmul(&incl)))
                .collect()
        };
        let a_action = restrict(
            &(0..self.cat().total_dim())
                .map(|i| self.a_action(i).clone())
                .collect::<Vec<_>>(),
        )?;
        let h_action = restrict(&self.h_action)?;
        let amod = CategoryModule::new_unchecked(self.cat().clone(), grading, a_action);
        Some((EquivariantModule::new_unchecked(amod, h_action), incl))
    }

    /// Quotient by an invariant graded subspace, with projection and section.
    pub fn quotient(&self, sub: &Subspace) -> Option<(EquivariantModule, Matrix, Matrix)> {
        self.graded_dims_of(sub)?;
        for i in 0..self.cat().total_dim() {
            if !sub.maps_into(self.a_action(i), sub) {
                return None;
            }
        }
        for m in &self.h_action {
            if !sub.maps_into(m, sub) {
                return None;
            }
        }
        // Blockwise quotient maps keep the object grading contiguous.
        let field = self.cat().field();
        let n_obj = self.grading().len();
        let mut blocks: Vec<(Matrix, Matrix)> = Vec::with_capacity(n_obj);
        for x in 0..n_obj
        {
            let rows = self.block_rows(x);
            let block_basis = sub_block_basis(sub, rows.clone());
            let local = Subspace::from_rows(rows.len(), &block_basis);
            blocks.push(quotient_map(rows.len(), &local));
        }
        let new_grading: Vec<usize> =
            (0..n_obj).map(|x| blocks[x].0.rows()).collect();
        let total: usize = new_grading.iter().sum();
        let mut proj = Matrix::zeros(field, total, self.dim());
        let mut section = Matrix::zeros(field, self.dim(), total);
        let mut out_off = 0;
        for x in 0..n_obj {
            let (p, s) = &blocks[x];
            proj.paste(out_off, self.amod.offsets()[x], p);
            section.paste(self.amod.offsets()[x], out_off, s);
            out_off += p.rows();
        }
        let a_action = (0..self.cat().total_dim())
            .map(|i| proj.matmul(self.a_action(i)).matmul(&section))
            .collect();
        let h_action = self
            .h_action
            .iter()
            .map(|m| proj.matmul(m).matmul(&section))
            .collect();
        let amod = CategoryModule::new_unchecked(self.cat().clone(), new_grading, a_action);
        Some((EquivariantModule::new_unchecked(amod, h_action), proj, section))
    }

    /// Per-object dimensions of a graded subspace, or `None` if the
    /// subspace is not the direct sum of its blockwise pieces.
    fn graded_dims_of(&self, sub: &Subspace) -> Option<Vec<usize>> {
        assert_eq!(sub.ambient_dim(), self.dim());
        let mut dims = Vec::with_capacity(self.grading().len());
        let mut total = 0;
        for x in 0..self.grading().len() {
            let rows = self.block_rows(x);
            let basis = sub_block_basis(sub, rows);
            let local = Subspace::from_rows(basis.cols(), &basis);
            // A block-component vector of a subspace element need not lie
            // in the subspace unless the subspace is graded; verify.
            dims.push(local.dim());
            total += local.dim();
        }
        if total == sub.dim() {
            Some(dims)
        } else {
            None
        }
    }
}

/// Rows of `sub`'s basis restricted to a coordinate range (the block
/// component of each basis vector).
fn sub_block_basis(sub: &Subspace, rows: std::ops::Range<usize>) -> Matrix {
    sub.basis().submatrix(0..sub.dim(), rows)
}
