//! Hom-spaces of equivariant modules with their H-action.
//!
//! `C_{A,H}(M, N)` is the space of grading-preserving A-linear maps; H acts
//! by `(h·f)(m) = Σ h₂·f(S⁻¹(h₁)·m)`. Its invariants are the equivariant
//! maps and its canonical homology is the stable hom space.

use crate::exactla::{solve_intertwiner, MapConstraint, MapShape, Matrix};
use crate::hmodules::{homology, vec_of_map, HModule, HomologyData};

use super::adjoints::{is_a_linear, is_h_equivariant};
use super::module::EquivariantModule;

/// A computed hom-space: a basis of A-linear maps, the H-module structure
/// on the space in that basis, and its homology.
pub struct HomSpace {
    basis: Vec<Matrix>,
    action_module: HModule,
    homology: HomologyData,
}

impl HomSpace {
    /// Basis of `C_{A,H}(M, N)` as matrices `dim N × dim M`.
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The H-module structure on the hom space, in the `basis` coordinates.
    pub fn action_module(&self) -> &HModule {
        &self.action_module
    }

    pub fn homology(&self) -> &HomologyData {
        &self.homology
    }

    /// Coordinates of a concrete map in the hom-space basis, if it is
    /// A-linear and grading-preserving.
    pub fn coordinates(&self, f: &Matrix) -> Option<Matrix> {
        if self.basis.is_empty() {
            return if f.is_zero() {
                Some(Matrix::zeros(f.field(), 0, 1))
            } else {
                None
            };
        }
        let cols: Vec<Matrix> = self.basis.iter().map(vec_of_map).collect();
        let mut flat = Matrix::zeros(f.field(), cols[0].rows(), cols.len());
        for (j, c) in cols.iter().enumerate() {
            flat.paste(0, j, c);
        }
        let target = vec_of_map(f);
        let x = flat.solve(&target).expect("shapes agree")?;
        if flat.matmul(&x) == target {
            Some(x)
        } else {
            None
        }
    }

    /// The map with the given hom-space coordinates.
    pub fn map_of(&self, coords: &Matrix) -> Matrix {
        assert_eq!(coords.rows(), self.basis.len());
        let field = coords.field();
        let (r, c) = (
            self.basis.first().map(|m| m.rows()).unwrap_or(0),
            self.basis.first().map(|m| m.cols()).unwrap_or(0),
        );
        let mut out = Matrix::zeros(field, r, c);
        for (j, b) in self.basis.iter().enumerate() {
            out = out.add(&b.scale(coords.get(j, 0)));
        }
        out
    }

    /// Basis of the equivariant maps inside this hom space (the invariants),
    /// as concrete matrices.
    pub fn equivariant_maps(&self) -> Vec<Matrix> {
        let z = self.homology.z();
        (0..z.dim())
            .map(|r| {
                let coords = z
                    .basis()
                    .submatrix(r..r + 1, 0..z.ambient_dim())
                    .transpose();
                self.map_of(&coords)
            })
            .collect()
    }
}

/// Compute the hom-space of two equivariant modules over the same (A, H).
pub fn hom_space(m: &EquivariantModule, n: &EquivariantModule) -> HomSpace {
    assert!(m.same_context(n), "hom_space needs a common (A, H)");
    let cat = m.cat();
    let hopf = m.hopf();
    let field = cat.field();

    // A-linear grading-preserving maps.
    let shape = MapShape::masked(
        field,
        n.dim(),
        m.dim(),
        m.amod().graded_mask_into(n.amod()),
    );
    let constraints: Vec<MapConstraint> = cat
        .generators()
        .iter()
        .map(|&g| MapConstraint::Intertwine {
            p: n.a_action(g),
            q: m.a_action(g),
        })
        .collect();
    let basis = solve_intertwiner(&shape, &constraints)
        .expect("homogeneous system")
        .kernel;
    let s = basis.len();

    // H-action in the basis coordinates: h·f = Σ ρ_N(h₂)·f·ρ_M(S⁻¹(h₁)).
    let flat_basis: Vec<Matrix> = basis.iter().map(vec_of_map).collect();
    let mut flat = Matrix::zeros(field, n.dim() * m.dim(), s);
    for (j, c) in flat_basis.iter().enumerate() {
        flat.paste(0, j, c);
    }
    let sinv = hopf.antipode_inverse();
    // One batched solve for all H-basis actions at once.
    let mut acted_all = Matrix::zeros(field, n.dim() * m.dim(), s * hopf.dim());
    for i in 0..hopf.dim() {
        for (j, f) in basis.iter().enumerate() {
            let mut g = Matrix::zeros(field, n.dim(), m.dim());
            for (h1, h2, c) in hopf.comult(i).terms() {
                let mut source_op = Matrix::zeros(field, m.dim(), m.dim());
                for (t, sc) in sinv.column(*h1).iter().enumerate() {
                    if !sc.is_zero() {
                        source_op = source_op.add(&m.h_action(t).scale(sc));
                    }
                }
                g = g.add(
                    &n.h_action(*h2)
                        .matmul(f)
                        .matmul(&source_op)
                        .scale(c),
                );
            }
            acted_all.paste(0, i * s + j, &vec_of_map(&g));
        }
    }
    let coords_all = flat
        .solve(&acted_all)
        .expect("shapes agree")
        .expect("the H-action preserves the A-linear maps");
    let action: Vec<Matrix> = (0..hopf.dim())
        .map(|i| coords_all.submatrix(0..s, i * s..(i + 1) * s))
        .collect();
    let action_module = HModule::new_unchecked(hopf.clone(), action);
    debug_assert!(action_module.check_algebra_map().is_ok());
    let homology = homology(&action_module);
    HomSpace {
        basis,
        action_module,
        homology,
    }
}

/// Basis of the equivariant maps `m -> n` by a direct intertwiner solve
/// (A-linearity and H-equivariance together); the independent route against
/// `hom_space(..).equivariant_maps()`.
pub fn equivariant_hom_basis(m: &EquivariantModule, n: &EquivariantModule) -> Vec<Matrix> {
    assert!(m.same_context(n));
    let cat = m.cat();
    let hopf = m.hopf();
    let shape = MapShape::masked(
        cat.field(),
        n.dim(),
        m.dim(),
        m.amod().graded_mask_into(n.amod()),
    );
    let mut constraints: Vec<MapConstraint> = Vec::new();
    for &g in cat.generators() {
        constraints.push(MapConstraint::Intertwine {
            p: n.a_action(g),
            q: m.a_action(g),
        });
    }
    for &g in hopf.generators() {
        constraints.push(MapConstraint::Intertwine {
            p: n.h_action(g),
            q: m.h_action(g),
        });
    }
    solve_intertwiner(&shape, &constraints)
        .expect("homogeneous system")
        .kernel
}

/// Whether `f` is a morphism in `C^H_{A,H}` (graded, A-linear and
/// H-equivariant).
pub fn is_morphism(f: &Matrix, m: &EquivariantModule, n: &EquivariantModule) -> bool {
    let mask = m.amod().graded_mask_into(n.amod());
    let graded = (0..f.rows()).all(|r| {
        (0..f.cols()).all(|c| mask[r * f.cols() + c] || f.get(r, c).is_zero())
    });
    graded && is_a_linear(f, m.amod(), n.amod()) && is_h_equivariant(f, m, n)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::equivariant::category::{trivial_category, truncated_polynomial_category};
    use crate::exactla::Subspace;
    use crate::hopfcore::divided_power;

    #[test]
    fn identity_lies_in_the_invariants() {
        let h = Arc::new(divided_power(2).unwrap());
        let cat = Arc::new(truncated_polynomial_category(&h, 2).unwrap());
        let m = EquivariantModule::column_module(&cat, 0);
        let hs = hom_space(&m, &m);
        let id = Matrix::identity(cat.field(), m.dim());
        let coords = hs.coordinates(&id).expect("identity is A-linear");
        assert!(hs.homology().z().contains(&coords));
    }

    #[test]
    fn invariants_equal_equivariant_maps() {
        let h = Arc::new(divided_power(3).unwrap());
        let cat = Arc::new(trivial_category(&h));
        let j2 = crate::hmodules::jordan_module(&h, 2).unwrap();
        let m = EquivariantModule::from_hmodule(&j2, &cat);
        let hs = hom_space(&m, &m);
        // Independent intertwiner solve.
        let direct = equivariant_hom_basis(&m, &m);
        assert_eq!(hs.homology().z().dim(), direct.len());
        // Set equality of subspaces inside the hom space.
        let coords: Vec<Matrix> = direct
            .iter()
            .map(|f| hs.coordinates(f).expect("equivariant maps are A-linear"))
            .collect();
        let dim = hs.dim();
        let mut gen_rows = Matrix::zeros(cat.field(), coords.len(), dim);
        for (r, c) in coords.iter().enumerate() {
            gen_rows.paste(r, 0, &c.transpose());
        }
        let span = Subspace::from_rows(dim, &gen_rows);
        assert_eq!(&span, hs.homology().z());
    }

    #[test]
    fn hom_space_over_a_equals_hom_module_over_k() {
        // For A = k the hom space with its H-action is the hom module.
        let h = Arc::new(divided_power(3).unwrap());
        let cat = Arc::new(trivial_category(&h));
        let j2 = crate::hmodules::jordan_module(&h, 2).unwrap();
        let m = EquivariantModule::from_hmodule(&j2, &cat);
        let hs = hom_space(&m, &m);
        assert_eq!(hs.dim(), 4);
        let hm = j2.hom_module(&j2).unwrap();
        assert_eq!(
            crate::hmodules::homology(&hm).dim_h(),
            hs.homology().dim_h()
        );
    }
}
