//! The adjoint functors around the forgetful functor:
//! `C ⊣ U ⊣ E`, with the explicit adjunction maps Φ and Ψ for `U ⊣ E`.

use crate::error::ModuleError;
use crate::exactla::Matrix;

use super::module::{CategoryModule, EquivariantModule};

/// `U`: forget the H-action.
pub fn forgetful(m: &EquivariantModule) -> CategoryModule {
    m.amod().clone()
}

/// `C(N) = Λ⊗_A N` for a plain A-module N, written on the space N⊗H
/// (N-major indices): H multiplies the H factor from the left, and
/// `a·(m⊗h) = Σ (S⁻¹(h₁)·a)·m ⊗ h₂`. When H acts trivially on A this is
/// the familiar `a·(m⊗h) = a·m⊗h`.
pub fn cone_adjoint(n: &CategoryModule) -> EquivariantModule {
    let cat = n.cat();
    let hopf = cat.hopf();
    let field = cat.field();
    let dh = hopf.dim();
    let dn = n.dim();
    let id_n = Matrix::identity(field, dn);
    let sinv = hopf.antipode_inverse();
    let grading: Vec<usize> = n.grading().iter().map(|g| g * dh).collect();
    let a_action = (0..cat.total_dim())
        .map(|s| {
            let mut out = Matrix::zeros(field, dn * dh, dn * dh);
            for i in 0..dh {
                for (j, k, c) in hopf.comult(i).terms() {
                    // The A-element S⁻¹(b_j)·a_s.
                    let mut acted = vec![field.zero(); cat.total_dim()];
                    for (t, sc) in sinv.column(*j).iter().enumerate() {
                        if sc.is_zero() {
                            continue;
                        }
                        for (u, v) in cat.h_on_basis(t, s).iter().enumerate() {
                            if !v.is_zero() {
                                acted[u] = acted[u].add(&sc.mul(v));
                            }
                        }
                    }
                    let op = n.action_of(&acted);
                    for t in 0..dn {
                        for t2 in 0..dn {
                            let v = op.get(t, t2);
                            if !v.is_zero() {
                                let cur = out.get(t * dh + k, t2 * dh + i).add(&c.mul(v));
                                out.set(t * dh + k, t2 * dh + i, cur);
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    let h_action = (0..dh)
        .map(|i| id_n.kronecker(hopf.left_mult(i)).expect("same field"))
        .collect();
    let amod = CategoryModule::new_unchecked(cat.clone(), grading, a_action);
    EquivariantModule::new_unchecked(amod, h_action)
}

/// `E(N) = Hom_k(H, N)`, the coinduction `Hom_A(A#H, N)` written on the
/// k-linear hom space: `(h·φ)(g) = φ(g·h)` and `(a·φ)(g) = Σ (g₁·a)·φ(g₂)`.
/// An element is a dim N × dim H matrix flattened row-major (N-major), so
/// the object grading stays contiguous.
pub fn e_functor(n: &CategoryModule) -> EquivariantModule {
    let cat = n.cat();
    let hopf = cat.hopf();
    let field = cat.field();
    let dh = hopf.dim();
    let dn = n.dim();
    let id_n = Matrix::identity(field, dn);
    let grading: Vec<usize> = n.grading().iter().map(|g| g * dh).collect();

    // φ ↦ φ∘R_b on matrices is kron(I, R_bᵀ) row-major, where R_b is right
    // multiplication by b on H.
    let h_action = (0..dh)
        .map(|i| {
            let rb = Matrix::from_fn(field, dh, dh, |k, j| hopf.left_mult(j).get(k, i).clone());
            id_n.kronecker(&rb.transpose()).expect("same field")
        })
        .collect();

    // (a·φ)(b_i) = Σ_{Δ(b_i)} c · ρ_N(b_j·a) · φ(b_k).
    let a_action = (0..cat.total_dim())
        .map(|s| {
            let mut out = Matrix::zeros(field, dn * dh, dn * dh);
            for i in 0..dh {
                for (j, k, c) in hopf.comult(i).terms() {
                    let op = n.action_of(&cat.h_on_basis(*j, s));
                    for t in 0..dn {
                        for t2 in 0..dn {
                            let v = op.get(t, t2);
                            if !v.is_zero() {
                                let cur = out.get(t * dh + i, t2 * dh + k).add(&c.mul(v));
                                out.set(t * dh + i, t2 * dh + k, cur);
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    let amod = CategoryModule::new_unchecked(cat.clone(), grading, a_action);
    EquivariantModule::new_unchecked(amod, h_action)
}

/// Evaluation at the unit, `E(N) → N, φ ↦ φ(1)`, the counit of `U ⊣ E`
/// composed with the identification.
pub fn evaluation_at_unit(n: &CategoryModule) -> Matrix {
    let cat = n.cat();
    let hopf = cat.hopf();
    let field = cat.field();
    let dh = hopf.dim();
    let mut out = Matrix::zeros(field, n.dim(), n.dim() * dh);
    for t in 0..n.dim() {
        for (i, u) in hopf.unit().iter().enumerate() {
            if !u.is_zero() {
                out.set(t, t * dh + i, u.clone());
            }
        }
    }
    out
}

/// `Φ(φ)(m)(h) = φ(h·m)`: turn an A-linear map `U(M) → N` into an
/// equivariant map `M → E(N)`. The output is verified equivariant and
/// A-linear; a non-A-linear input is rejected.
pub fn adjunction_phi(
    m: &EquivariantModule,
    n: &CategoryModule,
    phi: &Matrix,
) -> Result<Matrix, ModuleError> {
    let cat = m.cat();
    let hopf = m.hopf();
    let field = cat.field();
    let dh = hopf.dim();
    assert_eq!(phi.rows(), n.dim());
    assert_eq!(phi.cols(), m.dim());
    if !is_a_linear(phi, m.amod(), n) {
        return Err(ModuleError::NotAMorphism("A-linear"));
    }
    let mut out = Matrix::zeros(field, n.dim() * dh, m.dim());
    for i in 0..dh {
        let block = phi.matmul(m.h_action(i));
        for t in 0..n.dim() {
            for c in 0..m.dim() {
                out.set(t * dh + i, c, block.get(t, c).clone());
            }
        }
    }
    let en = e_functor(n);
    debug_assert!(is_a_linear(&out, m.amod(), en.amod()));
    debug_assert!(is_h_equivariant(&out, m, &en));
    Ok(out)
}

/// `Ψ(ψ)(m) = ψ(m)(1)`: the inverse adjunction map.
pub fn adjunction_psi(n: &CategoryModule, psi: &Matrix) -> Matrix {
    evaluation_at_unit(n).matmul(psi)
}

/// A-linearity of a matrix map between category modules (grading blocks
/// included, since the unit idempotents are part of the action).
pub fn is_a_linear(f: &Matrix, source: &CategoryModule, target: &CategoryModule) -> bool {
    (0..source.cat().total_dim())
        .all(|i| f.matmul(source.action(i)) == target.action(i).matmul(f))
}

/// H-equivariance of a matrix map between equivariant modules.
pub fn is_h_equivariant(
    f: &Matrix,
    source: &EquivariantModule,
    target: &EquivariantModule,
) -> bool {
    (0..source.hopf().dim())
        .all(|i| f.matmul(source.h_action(i)) == target.h_action(i).matmul(f))
}
