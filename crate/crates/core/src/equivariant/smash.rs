//! The smash product `A#H` and the equivalence between equivariant modules
//! and `A#H`-modules.

use std::sync::Arc;

use crate::error::{CategoryError, ModuleError};
use crate::exactla::{Matrix, Scalar};
use crate::hopfcore::HopfPresentation;

use super::category::{validate_category, HModuleCategory, RawCategory};
use super::module::{CategoryModule, EquivariantModule};

/// The smash product: same objects as A, morphism spaces `A(x,y)⊗H`, and
/// multiplication `(a⊗h)(b⊗g) = Σ a∘(h₁·b) ⊗ h₂g`. The underlying graded
/// algebra is exposed as an [`HModuleCategory`] with the trivial H-action.
#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    base: Arc<HModuleCategory>,
    hopf: Arc<HopfPresentation>,
    algebra: Arc<HModuleCategory>,
}

impl SmashAlgebra {
    pub fn base(&self) -> &Arc<HModuleCategory> {
        &self.base
    }

    pub fn hopf(&self) -> &Arc<HopfPresentation> {
        &self.hopf
    }

    /// The smash product as a plain graded algebra (trivial H-action);
    /// basis element `a_t ⊗ b_i` sits at index `t·dim H + i`.
    pub fn algebra(&self) -> &Arc<HModuleCategory> {
        &self.algebra
    }

    pub fn total_dim(&self) -> usize {
        self.algebra.total_dim()
    }
}

/// Build `A#H` and re-verify associativity and the unit on the result.
pub fn smash(cat: &Arc<HModuleCategory>) -> Result<SmashAlgebra, CategoryError> {
    let hopf = cat.hopf().clone();
    let field = cat.field();
    let (da, dh) = (cat.total_dim(), hopf.dim());
    let dim = da * dh;
    let idx = |t: usize, i: usize| t * dh + i;

    // Composition constants: (a_t⊗b_i)(a_s⊗b_j) = Σ a_t·(b_i1·a_s) ⊗ b_i2·b_j.
    let mut compose: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for t in 0..da {
        for i in 0..dh {
            for s in 0..da {
                for j in 0..dh {
                    let mut out: Vec<(usize, Scalar)> = Vec::new();
                    for (i1, i2, c) in hopf.comult(i).terms() {
                        let acted = cat.h_on_basis(*i1, s);
                        let left = cat.compose(&cat_basis(cat, t), &acted);
                        let hh = hopf.element_mult(
                            &hopf.basis_vector(*i2),
                            &hopf.basis_vector(j),
                        );
                        for (u, lu) in left.iter().enumerate() {
                            if lu.is_zero() {
                                continue;
                            }
                            for (v, hv) in hh.iter().enumerate() {
                                if hv.is_zero() {
                                    continue;
                                }
                                out.push((idx(u, v), c.mul(&lu.mul(hv))));
                            }
                        }
                    }
                    for (k, val) in out {
                        compose.push((idx(t, i), idx(s, j), k, val));
                    }
                }
            }
        }
    }

    // Units: η_{A#H}(x) = η_A(x) ⊗ 1.
    let units: Vec<Vec<Scalar>> = (0..cat.n_objects())
        .map(|x| {
            let mut u = vec![field.zero(); dim];
            for (t, c) in cat.object_unit(x).iter().enumerate() {
                if !c.is_zero() {
                    for (i, h) in hopf.unit().iter().enumerate() {
                        if !h.is_zero() {
                            u[idx(t, i)] = c.mul(h);
                        }
                    }
                }
            }
            u
        })
        .collect();

    let hom_dims: Vec<Vec<usize>> = (0..cat.n_objects())
        .map(|x| {
            (0..cat.n_objects())
                .map(|y| {
                    (0..da)
                        .filter(|&t| cat.block_of(t) == (x, y))
                        .count()
                        * dh
                })
                .collect()
        })
        .collect();

    // Basis order must be block-lex for validate_category: with the A-basis
    // already block-lex and the H-factor minor, `t·dh + i` is block-lex too.
    let trivial_h: Vec<Matrix> = (0..dh)
        .map(|i| Matrix::identity(field, dim).scale(hopf.counit_of(i)))
        .collect();

    let mut algebra = validate_category(RawCategory {
        hopf: hopf.clone(),
        objects: cat.objects().to_vec(),
        hom_dims,
        compose,
        units,
        h_action: trivial_h,
    })?;
    if let Some(name) = cat.name() {
        algebra.set_name(format!("({name})#H"));
    }
    Ok(SmashAlgebra {
        base: cat.clone(),
        hopf,
        algebra: Arc::new(algebra),
    })
}

fn cat_basis(cat: &HModuleCategory, t: usize) -> Vec<Scalar> {
    let mut v = vec![cat.field().zero(); cat.total_dim()];
    v[t] = cat.field().one();
    v
}

/// View an equivariant module as a module over `A#H`: `(a⊗h)` acts as
/// `a·(h·−)`.
pub fn to_smash_module(sm: &SmashAlgebra, m: &EquivariantModule) -> CategoryModule {
    assert!(**m.cat() == **sm.base());
    let dh = sm.hopf.dim();
    let action = (0..sm.total_dim())
        .map(|ti| {
            let (t, i) = (ti / dh, ti % dh);
            m.a_action(t).matmul(m.h_action(i))
        })
        .collect();
    CategoryModule::new_unchecked(sm.algebra.clone(), m.grading().to_vec(), action)
}

/// Reconstruct the equivariant module from an `A#H`-module; rejects modules
/// whose reconstructed actions fail the equivariance axioms.
pub fn from_smash_module(
    sm: &SmashAlgebra,
    m: &CategoryModule,
) -> Result<EquivariantModule, ModuleError> {
    assert!(**m.cat() == **sm.algebra());
    let field = sm.hopf.field();
    let dh = sm.hopf.dim();
    let da = sm.base.total_dim();
    let dim = m.dim();
    // a_t ↦ action of a_t ⊗ 1.
    let a_action: Vec<Matrix> = (0..da)
        .map(|t| {
            let mut out = Matrix::zeros(field, dim, dim);
            for (i, u) in sm.hopf.unit().iter().enumerate() {
                if !u.is_zero() {
                    out = out.add(&m.action(t * dh + i).scale(u));
                }
            }
            out
        })
        .collect();
    // b_i ↦ action of Σ_x η(x) ⊗ b_i.
    let h_action: Vec<Matrix> = (0..dh)
        .map(|i| {
            let mut out = Matrix::zeros(field, dim, dim);
            for (t, c) in unit_coords(&sm.base).iter().enumerate() {
                if !c.is_zero() {
                    out = out.add(&m.action(t * dh + i).scale(c));
                }
            }
            out
        })
        .collect();
    super::module::validate_equivariant(
        sm.base(),
        m.grading().to_vec(),
        a_action,
        h_action,
    )
}

fn unit_coords(cat: &HModuleCategory) -> Vec<Scalar> {
    cat.unit_vector().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariant::category::{trivial_category, truncated_polynomial_category};
    use crate::equivariant::module::EquivariantModule;
    use crate::hmodules::regular_module;
    use crate::hopfcore::divided_power;

    #[test]
    fn smash_with_trivial_base_is_h_itself() {
        let h = Arc::new(divided_power(3).unwrap());
        let cat = Arc::new(trivial_category(&h));
        let sm = smash(&cat).unwrap();
        assert_eq!(sm.total_dim(), 3);
        // Structure constants agree with H after the index collapse.
        for i in 0..3 {
            assert_eq!(sm.algebra().left_mult(i), h.left_mult(i));
        }
    }

    #[test]
    fn smash_dimension_is_product() {
        let h = Arc::new(divided_power(2).unwrap());
        let cat = Arc::new(truncated_polynomial_category(&h, 2).unwrap());
        let sm = smash(&cat).unwrap();
        assert_eq!(sm.total_dim(), 4);
    }

    #[test]
    fn smash_round_trip_is_identity() {
        let h = Arc::new(divided_power(2).unwrap());
        let cat = Arc::new(truncated_polynomial_category(&h, 2).unwrap());
        let sm = smash(&cat).unwrap();
        let m = EquivariantModule::column_module(&cat, 0);
        let as_smash = to_smash_module(&sm, &m);
        as_smash.check_axioms().unwrap();
        let back = from_smash_module(&sm, &as_smash).unwrap();
        for i in 0..cat.total_dim() {
            assert_eq!(back.a_action(i), m.a_action(i));
        }
        for i in 0..h.dim() {
            assert_eq!(back.h_action(i), m.h_action(i));
        }
    }

    #[test]
    fn hom_space_invariants_equal_smash_intertwiners() {
        // Equivariant maps computed in the (A, H) language coincide, as a
        // subspace of the linear hom space, with the Λ-linear maps of the
        // corresponding A#H-modules.
        use crate::exactla::{solve_intertwiner, MapConstraint, MapShape, Subspace};
        use crate::hmodules::vec_of_map;

        let h = Arc::new(divided_power(2).unwrap());
        let cat = Arc::new(truncated_polynomial_category(&h, 2).unwrap());
        let sm = smash(&cat).unwrap();
        let m = EquivariantModule::column_module(&cat, 0);
        let n = m.cone();

        let hs = crate::equivariant::hom_space(&m, &n);
        let equivariant = hs.equivariant_maps();

        let sm_m = to_smash_module(&sm, &m);
        let sm_n = to_smash_module(&sm, &n);
        let shape = MapShape::masked(
            cat.field(),
            sm_n.dim(),
            sm_m.dim(),
            sm_m.graded_mask_into(&sm_n),
        );
        let constraints: Vec<MapConstraint> = sm
            .algebra()
            .generators()
            .iter()
            .map(|&g| MapConstraint::Intertwine {
                p: sm_n.action(g),
                q: sm_m.action(g),
            })
            .collect();
        let lambda_linear = solve_intertwiner(&shape, &constraints)
            .expect("homogeneous")
            .kernel;

        assert_eq!(equivariant.len(), lambda_linear.len());
        let ambient = n.dim() * m.dim();
        let span_of = |maps: &[crate::exactla::Matrix]| -> Subspace {
            let mut rows = crate::exactla::Matrix::zeros(cat.field(), maps.len(), ambient);
            for (r, f) in maps.iter().enumerate() {
                rows.paste(r, 0, &vec_of_map(f).transpose());
            }
            Subspace::from_rows(ambient, &rows)
        };
        assert_eq!(span_of(&equivariant), span_of(&lambda_linear));
    }

    #[test]
    fn trivial_base_smash_modules_are_h_modules() {
        let h = Arc::new(divided_power(3).unwrap());
        let cat = Arc::new(trivial_category(&h));
        let sm = smash(&cat).unwrap();
        let reg = regular_module(&h);
        let em = EquivariantModule::from_hmodule(&reg, &cat);
        let as_smash = to_smash_module(&sm, &em);
        for i in 0..3 {
            assert_eq!(as_smash.action(i), reg.action(i));
        }
    }

    #[test]
    fn free_rank_one_smash_module_is_the_cone_of_a() {
        // The free rank-one Λ-module at x, pulled back through the smash
        // equivalence, matches C(A(x,−)) with the cone H-action.
        let h = Arc::new(divided_power(2).unwrap());
        let cat = Arc::new(truncated_polynomial_category(&h, 2).unwrap());
        let sm = smash(&cat).unwrap();
        let free_cm = EquivariantModule::column_module(sm.algebra(), 0)
            .amod()
            .clone();
        let eq = from_smash_module(&sm, &free_cm).unwrap();
        assert_eq!(eq.dim(), 4);
        let base_col = EquivariantModule::column_module(&cat, 0);
        let cone = super::super::adjoints::cone_adjoint(base_col.amod());
        assert_eq!(cone.dim(), eq.dim());
        assert_eq!(crate::hmodules::homology(&eq.as_hmodule()).dim_h(), 0);
        assert_eq!(crate::hmodules::homology(&cone.as_hmodule()).dim_h(), 0);
    }
}
