//! The H-module type, validation, tensor and hom constructions, and the
//! distinguished modules attached to a Hopf algebra.

use std::sync::Arc;

use crate::error::ModuleError;
use crate::exactla::{
    quotient_map, solve_intertwiner, MapConstraint, MapShape, Matrix, Scalar, Subspace,
};
use crate::hopfcore::HopfPresentation;

/// A finite-dimensional left H-module: one action matrix per basis element
/// of H. The algebra-map law `ρ(b_i)ρ(b_j) = Σ_k c_ij^k ρ(b_k)` is checked
/// by [`validate_module`]; functor outputs are correct by construction.
#[derive(Clone, Debug)]
pub struct HModule {
    hopf: Arc<HopfPresentation>,
    dim: usize,
    action: Vec<Matrix>,
}

/// Check the algebra-map invariant and wrap the action matrices.
pub fn validate_module(
    hopf: &Arc<HopfPresentation>,
    action: Vec<Matrix>,
) -> Result<HModule, ModuleError> {
    let m = HModule::new_unchecked(hopf.clone(), action);
    m.check_algebra_map()?;
    Ok(m)
}

impl HModule {
    pub(crate) fn new_unchecked(hopf: Arc<HopfPresentation>, action: Vec<Matrix>) -> HModule {
        assert_eq!(action.len(), hopf.dim(), "one action matrix per basis element");
        let dim = action.first().map(|m| m.rows()).unwrap_or(0);
        for a in &action {
            assert!(
                a.rows() == dim && a.cols() == dim && a.field() == hopf.field(),
                "action matrices must be square of equal size over the ground field"
            );
        }
        HModule { hopf, dim, action }
    }

    /// Re-run the validation invariant (unit acts as identity, action is an
    /// algebra map). Reports the first offending basis pair.
    pub fn check_algebra_map(&self) -> Result<(), ModuleError> {
        let h = &self.hopf;
        let mut unit_action = Matrix::zeros(h.field(), self.dim, self.dim);
        for (i, u) in h.unit().iter().enumerate() {
            unit_action = unit_action.add(&self.action[i].scale(u));
        }
        if !unit_action.is_identity() {
            return Err(ModuleError::UnitAction);
        }
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let prod = self.action[i].matmul(&self.action[j]);
                let mut expected = Matrix::zeros(h.field(), self.dim, self.dim);
                for k in 0..h.dim() {
                    let c = h.left_mult(i).get(k, j);
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

    pub fn hopf(&self) -> &Arc<HopfPresentation> {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> crate::exactla::FieldSpec {
        self.hopf.field()
    }

    /// Action matrix of the `i`-th basis element.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Action matrix of an arbitrary element given by coordinates.
    pub fn action_of(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[i].scale(c));
            }
        }
        out
    }

    /// Action of the fixed left integral λ.
    pub fn lambda_action(&self) -> Matrix {
        self.action_of(&self.hopf.left_integral().to_vec())
    }

    pub fn same_hopf(&self, other: &HModule) -> bool {
        Arc::ptr_eq(&self.hopf, &other.hopf) || *self.hopf == *other.hopf
    }

    /// The trivial module k with `ρ(h) = ε(h)`.
    pub fn trivial(hopf: &Arc<HopfPresentation>) -> HModule {
        let action = (0..hopf.dim())
            .map(|i| {
                Matrix::new(hopf.field(), 1, 1, vec![hopf.counit_of(i).clone()])
                    .expect("1x1 matrix")
            })
            .collect();
        HModule::new_unchecked(hopf.clone(), action)
    }

    /// The zero module.
    pub fn zero(hopf: &Arc<HopfPresentation>) -> HModule {
        let action = (0..hopf.dim())
            .map(|_| Matrix::zeros(hopf.field(), 0, 0))
            .collect();
        HModule::new_unchecked(hopf.clone(), action)
    }

    pub fn direct_sum(&self, other: &HModule) -> Result<HModule, ModuleError> {
        if !self.same_hopf(other) {
            return Err(ModuleError::HopfMismatch);
        }
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Ok(HModule::new_unchecked(self.hopf.clone(), action))
    }

    /// Tensor product with the diagonal action through Δ. Composite indices
    /// are left-factor major, matching `Matrix::kronecker`.
    pub fn tensor(&self, other: &HModule) -> Result<HModule, ModuleError> {
        if !self.same_hopf(other) {
            return Err(ModuleError::HopfMismatch);
        }
        let h = &self.hopf;
        let dim = self.dim * other.dim;
        let mut action = Vec::with_capacity(h.dim());
        for i in 0..h.dim() {
            let mut m = Matrix::zeros(h.field(), dim, dim);
            for (j, k, c) in h.comult(i).terms() {
                let kron = self.action[*j]
                    .kronecker(&other.action[*k])
                    .expect("same field");
                m = m.add(&kron.scale(c));
            }
            action.push(m);
        }
        Ok(HModule::new_unchecked(h.clone(), action))
    }

    /// The hom-module on the full linear hom space Hom_k(self, other) with
    /// the conjugation action `(h·f) = Σ ρ_N(h₂) · f · ρ_M(S⁻¹(h₁))`.
    /// Elements are dim(other) × dim(self) matrices flattened row-major;
    /// see [`vec_of_map`] and [`map_of_vec`].
    pub fn hom_module(&self, other: &HModule) -> Result<HModule, ModuleError> {
        if !self.same_hopf(other) {
            return Err(ModuleError::HopfMismatch);
        }
        let h = &self.hopf;
        let dim = other.dim * self.dim;
        let sinv = h.antipode_inverse();
        let mut action = Vec::with_capacity(h.dim());
        for i in 0..h.dim() {
            let mut m = Matrix::zeros(h.field(), dim, dim);
            for (j, k, c) in h.comult(i).terms() {
                // ρ_M(S⁻¹(b_j)) = Σ_t S⁻¹[t, j] ρ_M(b_t)
                let mut source_op = Matrix::zeros(h.field(), self.dim, self.dim);
                for t in 0..h.dim() {
                    let s = sinv.get(t, *j);
                    if !s.is_zero() {
                        source_op = source_op.add(&self.action[t].scale(s));
                    }
                }
                // f ↦ B f C is kron(B, Cᵀ) on the row-major flattening.
                let kron = other.action[*k]
                    .kronecker(&source_op.transpose())
                    .expect("same field");
                m = m.add(&kron.scale(c));
            }
            action.push(m);
        }
        Ok(HModule::new_unchecked(h.clone(), action))
    }

    /// Restrict the action to an invariant subspace; `None` if the subspace
    /// is not stable under all action matrices. Also returns the inclusion.
    pub fn submodule(&self, sub: &Subspace) -> Option<(HModule, Matrix)> {
        let incl = sub.inclusion();
        let mut action = Vec::with_capacity(self.hopf.dim());
        for a in &self.action {
            let mapped = a.matmul(&incl);
            let coords = sub.coordinates_of_columns(&mapped)?;
            action.push(coords);
        }
        Some((
            HModule::new_unchecked(self.hopf.clone(), action),
            incl,
        ))
    }

    /// Quotient by an invariant subspace, with the projection and a section.
    pub fn quotient(&self, sub: &Subspace) -> Option<(HModule, Matrix, Matrix)> {
        // Well-defined only when sub is invariant.
        for a in &self.action {
            if !sub.maps_into(a, sub) {
                return None;
            }
        }
        let (proj, section) = quotient_map(self.dim, sub);
        let action = self
            .action
            .iter()
            .map(|a| proj.matmul(a).matmul(&section))
            .collect();
        Some((
            HModule::new_unchecked(self.hopf.clone(), action),
            proj,
            section,
        ))
    }
}

/// The left regular module: H acting on itself by left multiplication.
pub fn regular_module(hopf: &Arc<HopfPresentation>) -> HModule {
    let action = (0..hopf.dim()).map(|i| hopf.left_mult(i).clone()).collect();
    HModule::new_unchecked(hopf.clone(), action)
}

/// The 1-dimensional submodule kλ of the regular module, with its inclusion.
pub fn integral_submodule(hopf: &Arc<HopfPresentation>) -> (HModule, Matrix) {
    let regular = regular_module(hopf);
    regular
        .submodule(hopf.integral_ideal())
        .expect("kλ is a left submodule since hλ = ε(h)λ")
}

/// The quotient H/(λ) of the regular module by kλ (the suspension factor),
/// with the projection and a section.
pub fn quotient_by_integral(hopf: &Arc<HopfPresentation>) -> (HModule, Matrix, Matrix) {
    let regular = regular_module(hopf);
    regular
        .quotient(hopf.integral_ideal())
        .expect("kλ is a left submodule since hλ = ε(h)λ")
}

/// Ker ε as a left submodule of the regular module (the desuspension
/// factor), with its inclusion.
pub fn counit_kernel_module(hopf: &Arc<HopfPresentation>) -> (HModule, Matrix) {
    let regular = regular_module(hopf);
    regular
        .submodule(hopf.counit_kernel())
        .expect("Ker ε is a left ideal since ε is an algebra map")
}

/// Row-major flattening of a module map `f: M -> N` (a dim N × dim M matrix)
/// into a coordinate vector of the hom-module.
pub fn vec_of_map(f: &Matrix) -> Matrix {
    let field = f.field();
    let mut v = Matrix::zeros(field, f.rows() * f.cols(), 1);
    for i in 0..f.rows() {
        for j in 0..f.cols() {
            v.set(i * f.cols() + j, 0, f.get(i, j).clone());
        }
    }
    v
}

/// Inverse of [`vec_of_map`].
pub fn map_of_vec(v: &Matrix, target_dim: usize, source_dim: usize) -> Matrix {
    assert_eq!(v.rows(), target_dim * source_dim);
    Matrix::from_fn(v.field(), target_dim, source_dim, |i, j| {
        v.get(i * source_dim + j, 0).clone()
    })
}

/// Whether `f: m -> n` commutes with the H-action.
pub fn is_equivariant_map(f: &Matrix, m: &HModule, n: &HModule) -> bool {
    assert_eq!(f.cols(), m.dim());
    assert_eq!(f.rows(), n.dim());
    (0..m.hopf().dim()).all(|i| f.matmul(m.action(i)) == n.action(i).matmul(f))
}

/// Basis of the space of equivariant maps `m -> n`. Commuting with the
/// algebra generators suffices, which keeps the solve small.
pub fn equivariant_maps(m: &HModule, n: &HModule) -> Vec<Matrix> {
    assert!(m.same_hopf(n));
    let h = m.hopf();
    let shape = MapShape::full(h.field(), n.dim(), m.dim());
    let constraints: Vec<MapConstraint> = h
        .generators()
        .iter()
        .map(|&g| MapConstraint::Intertwine {
            p: n.action(g),
            q: m.action(g),
        })
        .collect();
    solve_intertwiner(&shape, &constraints)
        .expect("homogeneous system")
        .kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::hopfcore::{divided_power, group_algebra};

    fn dp(p: u64) -> Arc<HopfPresentation> {
        Arc::new(divided_power(p).unwrap())
    }

    fn jordan_module(hopf: &Arc<HopfPresentation>, k: usize) -> HModule {
        crate::hmodules::jordan_module(hopf, k).unwrap()
    }

    #[test]
    fn trivial_and_regular_validate() {
        for h in [
            dp(3),
            Arc::new(group_algebra(&[2], FieldSpec::Rational).unwrap()),
            Arc::new(crate::hopfcore::sweedler(3).unwrap()),
        ] {
            HModule::trivial(&h).check_algebra_map().unwrap();
            regular_module(&h).check_algebra_map().unwrap();
        }
    }

    #[test]
    fn oversized_jordan_block_rejected() {
        // J4 over F_3[d]/(d³) fails because d³ must act as zero but doesn't.
        let h = dp(3);
        let f = h.field();
        let nil = Matrix::from_fn(f, 4, 4, |i, j| {
            if i + 1 == j {
                f.one()
            } else {
                f.zero()
            }
        });
        let action: Vec<Matrix> = (0..3).map(|a| nil.pow(a)).collect();
        let err = validate_module(&h, action).unwrap_err();
        assert!(matches!(err, ModuleError::NotAlgebraMap { .. }));
    }

    #[test]
    fn tensor_unit_is_identity() {
        let h = dp(3);
        let m = jordan_module(&h, 2);
        let k = HModule::trivial(&h);
        let km = k.tensor(&m).unwrap();
        // k ⊗ M has the same action matrices under index collapse.
        for i in 0..h.dim() {
            assert_eq!(km.action(i), m.action(i));
        }
        let mk = m.tensor(&k).unwrap();
        for i in 0..h.dim() {
            assert_eq!(mk.action(i), m.action(i));
        }
    }

    #[test]
    fn tensor_validates() {
        let h = dp(3);
        let m = jordan_module(&h, 2);
        m.tensor(&m).unwrap().check_algebra_map().unwrap();
        m.tensor(&regular_module(&h))
            .unwrap()
            .check_algebra_map()
            .unwrap();
    }

    #[test]
    fn hom_module_validates_and_invariants_are_intertwiners() {
        let h = dp(3);
        let j2 = jordan_module(&h, 2);
        let hom = j2.hom_module(&j2).unwrap();
        hom.check_algebra_map().unwrap();
        assert_eq!(hom.dim(), 4);

        // Invariants of hom = equivariant maps, as subspaces of the hom space.
        let z = crate::hmodules::homology(&hom).z().clone();
        let inter = equivariant_maps(&j2, &j2);
        assert_eq!(z.dim(), inter.len());
        for f in &inter {
            assert!(z.contains(&vec_of_map(f)));
        }
        // dim Hom_k = 4, dim equivariants = 2 for J2 over F_3[d]/(d³).
        assert_eq!(inter.len(), 2);
    }

    #[test]
    fn hom_from_trivial_is_the_module() {
        let h = dp(3);
        let m = jordan_module(&h, 2);
        let k = HModule::trivial(&h);
        let hom = k.hom_module(&m).unwrap();
        for i in 0..h.dim() {
            assert_eq!(hom.action(i), m.action(i));
        }
    }

    #[test]
    fn distinguished_modules() {
        let h = dp(3);
        let (q, _, _) = quotient_by_integral(&h);
        assert_eq!(q.dim(), 2);
        q.check_algebra_map().unwrap();
        let (ke, _) = counit_kernel_module(&h);
        assert_eq!(ke.dim(), 2);
        ke.check_algebra_map().unwrap();
        let (ideal, _) = integral_submodule(&h);
        assert_eq!(ideal.dim(), 1);
        ideal.check_algebra_map().unwrap();
    }

    #[test]
    fn counit_kernel_of_group_algebra_is_augmentation_ideal() {
        let h = Arc::new(group_algebra(&[2], FieldSpec::Rational).unwrap());
        let (ke, incl) = counit_kernel_module(&h);
        assert_eq!(ke.dim(), 1);
        // Spanned by 1 - g.
        let f = h.field();
        let span = Subspace::from_columns(2, &incl);
        assert!(span.contains(&Matrix::from_i64(f, 2, 1, &[1, -1])));
    }
}
