//! Finite H-module categories as object-graded algebras.

use std::sync::Arc;

use crate::error::CategoryError;
use crate::exactla::{FieldSpec, Matrix, Scalar};
use crate::hopfcore::{algebra_generators, CatalogId, HopfPresentation};

/// A finite left H-module category: objects, a graded total morphism space
/// A₁ with composition as an algebra, orthogonal unit idempotents, and an
/// H-action satisfying the Sweedler-expanded Leibniz rule.
#[derive(Clone, Debug)]
pub struct HModuleCategory {
    hopf: Arc<HopfPresentation>,
    objects: Vec<String>,
    /// Source and target object of each basis morphism.
    basis_blocks: Vec<(usize, usize)>,
    total_dim: usize,
    /// `left_mult[i]` is composition `a_i ∘ (−)` on A₁.
    left_mult: Vec<Matrix>,
    /// Coordinates of Σ_x η(x).
    unit_vector: Vec<Scalar>,
    /// Coordinates of each η(x).
    object_units: Vec<Vec<Scalar>>,
    /// `h_action[i]` is the action of the i-th basis element of H on A₁.
    h_action: Vec<Matrix>,
    generators: Vec<usize>,
    name: Option<String>,
}

impl PartialEq for HModuleCategory {
    fn eq(&self, other: &Self) -> bool {
        *self.hopf == *other.hopf
            && self.basis_blocks == other.basis_blocks
            && self.left_mult == other.left_mult
            && self.object_units == other.object_units
            && self.h_action == other.h_action
    }
}

impl HModuleCategory {
    pub fn hopf(&self) -> &Arc<HopfPresentation> {
        &self.hopf
    }

    pub fn field(&self) -> FieldSpec {
        self.hopf.field()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    /// `(source, target)` objects of the i-th basis morphism.
    pub fn block_of(&self, i: usize) -> (usize, usize) {
        self.basis_blocks[i]
    }

    pub fn left_mult(&self, i: usize) -> &Matrix {
        &self.left_mult[i]
    }

    pub fn unit_vector(&self) -> &[Scalar] {
        &self.unit_vector
    }

    pub fn object_unit(&self, x: usize) -> &[Scalar] {
        &self.object_units[x]
    }

    pub fn h_action(&self, i: usize) -> &Matrix {
        &self.h_action[i]
    }

    /// Algebra generators of A₁ (for intertwiner solves).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub(crate) fn set_name(&mut self, name: String) {
        self.name = Some(name);
    }

    /// Composition of two coordinate vectors in A₁.
    pub fn compose(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let field = self.field();
        let mut out = vec![field.zero(); self.total_dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for k in 0..self.total_dim {
                    let m = self.left_mult[i].get(k, j);
                    if !m.is_zero() {
                        out[k] = out[k].add(&m.mul(&c));
                    }
                }
            }
        }
        out
    }

    /// The element `h·a` for basis indices of H and A₁.
    pub fn h_on_basis(&self, h_index: usize, a_index: usize) -> Vec<Scalar> {
        self.h_action[h_index].column(a_index)
    }

    fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.total_dim];
        v[i] = self.field().one();
        v
    }
}

/// Raw category data for validation: basis morphisms are listed block-lex
/// (source-major), `compose[i][j]` given as sparse triples, units per
/// object, and one H-action matrix per basis element of H.
pub struct RawCategory {
    pub hopf: Arc<HopfPresentation>,
    pub objects: Vec<String>,
    /// `hom_dims[x][y]` = dim A(x, y).
    pub hom_dims: Vec<Vec<usize>>,
    /// Sparse `(i, j, k, c)`: the composite `a_i ∘ a_j` contains `c·a_k`.
    pub compose: Vec<(usize, usize, usize, Scalar)>,
    /// Unit idempotent coordinates per object.
    pub units: Vec<Vec<Scalar>>,
    pub h_action: Vec<Matrix>,
}

/// Check all the category and enrichment axioms exhaustively on basis
/// elements.
pub fn validate_category(raw: RawCategory) -> Result<HModuleCategory, CategoryError> {
    let field = raw.hopf.field();
    let n_obj = raw.objects.len();
    if n_obj == 0 || n_obj > 16 {
        return Err(CategoryError::Shape(
            "object count must be between 1 and 16".into(),
        ));
    }
    if raw.hom_dims.len() != n_obj || raw.hom_dims.iter().any(|r| r.len() != n_obj) {
        return Err(CategoryError::Shape("hom_dims must be n_obj × n_obj".into()));
    }

    // Basis layout: block (x, y) at offset, source-major then target.
    let mut basis_blocks = Vec::new();
    for x in 0..n_obj {
        for y in 0..n_obj {
            for _ in 0..raw.hom_dims[x][y] {
                basis_blocks.push((x, y));
            }
        }
    }
    let total_dim = basis_blocks.len();
    if total_dim == 0 {
        return Err(CategoryError::Shape("empty morphism space".into()));
    }
    if raw.units.len() != n_obj || raw.units.iter().any(|u| u.len() != total_dim) {
        return Err(CategoryError::Shape("units malformed".into()));
    }
    if raw.h_action.len() != raw.hopf.dim()
        || raw
            .h_action
            .iter()
            .any(|m| m.rows() != total_dim || m.cols() != total_dim)
    {
        return Err(CategoryError::Shape("h_action malformed".into()));
    }

    let mut left_mult = vec![Matrix::zeros(field, total_dim, total_dim); total_dim];
    for (i, j, k, c) in &raw.compose {
        if *i >= total_dim || *j >= total_dim || *k >= total_dim {
            return Err(CategoryError::Shape(format!(
                "compose triple ({i},{j},{k}) out of range"
            )));
        }
        let v = left_mult[*i].get(*k, *j).add(c);
        left_mult[*i].set(*k, *j, v);
    }

    // Grading: a_i ∘ a_j is zero unless src(a_i) = tgt(a_j), and lands in
    // (src a_j, tgt a_i).
    for i in 0..total_dim {
        let (si, ti) = basis_blocks[i];
        for j in 0..total_dim {
            let (sj, tj) = basis_blocks[j];
            for k in 0..total_dim {
                let c = left_mult[i].get(k, j);
                if c.is_zero() {
                    continue;
                }
                if si != tj || basis_blocks[k] != (sj, ti) {
                    return Err(CategoryError::Axiom {
                        axiom: "grading",
                        indices: vec![i, j, k],
                    });
                }
            }
        }
    }

    // Associativity.
    for i in 0..total_dim {
        for j in 0..total_dim {
            let prod = left_mult[i].matmul(&left_mult[j]);
            let mut expected = Matrix::zeros(field, total_dim, total_dim);
            for k in 0..total_dim {
                let c = left_mult[i].get(k, j);
                if !c.is_zero() {
                    expected = expected.add(&left_mult[k].scale(c));
                }
            }
            if prod != expected {
                return Err(CategoryError::Axiom {
                    axiom: "associativity",
                    indices: vec![i, j],
                });
            }
        }
    }

    // Units: η(y)∘a = a = a∘η(x) for a: x → y, and orthogonality of the
    // idempotents.
    let cat_probe = HModuleCategory {
        hopf: raw.hopf.clone(),
        objects: raw.objects.clone(),
        basis_blocks: basis_blocks.clone(),
        total_dim,
        left_mult: left_mult.clone(),
        unit_vector: vec![field.zero(); total_dim],
        object_units: raw.units.clone(),
        h_action: raw.h_action.clone(),
        generators: vec![],
        name: None,
    };
    for a in 0..total_dim {
        let (x, y) = basis_blocks[a];
        let av = cat_probe.basis_vector(a);
        if cat_probe.compose(&raw.units[y], &av) != av
            || cat_probe.compose(&av, &raw.units[x]) != av
        {
            return Err(CategoryError::Axiom {
                axiom: "unit",
                indices: vec![a],
            });
        }
    }
    for x in 0..n_obj {
        for y in 0..n_obj {
            let prod = cat_probe.compose(&raw.units[x], &raw.units[y]);
            let expected = if x == y {
                raw.units[x].clone()
            } else {
                vec![field.zero(); total_dim]
            };
            if prod != expected {
                return Err(CategoryError::Axiom {
                    axiom: "unit-orthogonality",
                    indices: vec![x, y],
                });
            }
        }
    }
    let mut unit_vector = vec![field.zero(); total_dim];
    for u in &raw.units {
        for (t, c) in u.iter().enumerate() {
            unit_vector[t] = unit_vector[t].add(c);
        }
    }

    // The H-action is an H-module structure on A₁ ...
    let as_hmodule = crate::hmodules::HModule::new_unchecked(raw.hopf.clone(), raw.h_action.clone());
    if let Err(e) = as_hmodule.check_algebra_map() {
        return Err(CategoryError::Axiom {
            axiom: match e {
                crate::error::ModuleError::UnitAction => "h-action-unit",
                _ => "h-action-multiplicative",
            },
            indices: vec![],
        });
    }
    // ... preserving each (source, target) block ...
    for (hi, m) in raw.h_action.iter().enumerate() {
        for j in 0..total_dim {
            for k in 0..total_dim {
                if !m.get(k, j).is_zero() && basis_blocks[k] != basis_blocks[j] {
                    return Err(CategoryError::Axiom {
                        axiom: "h-action-grading",
                        indices: vec![hi, j, k],
                    });
                }
            }
        }
    }
    // ... fixing the units: h·η(x) = ε(h)η(x) ...
    for hi in 0..raw.hopf.dim() {
        for (x, u) in raw.units.iter().enumerate() {
            let acted: Vec<Scalar> = {
                let m = &raw.h_action[hi];
                (0..total_dim)
                    .map(|k| {
                        let mut acc = field.zero();
                        for (j, uj) in u.iter().enumerate() {
                            if !uj.is_zero() {
                                acc = acc.add(&m.get(k, j).mul(uj));
                            }
                        }
                        acc
                    })
                    .collect()
            };
            let expected: Vec<Scalar> = u
                .iter()
                .map(|c| c.mul(raw.hopf.counit_of(hi)))
                .collect();
            if acted != expected {
                return Err(CategoryError::Axiom {
                    axiom: "h-fixes-units",
                    indices: vec![hi, x],
                });
            }
        }
    }
    // ... and satisfying the Leibniz rule h·(g∘f) = Σ (h₁·g)∘(h₂·f).
    for hi in 0..raw.hopf.dim() {
        for i in 0..total_dim {
            for j in 0..total_dim {
                let prod = cat_probe.compose(&cat_probe.basis_vector(i), &cat_probe.basis_vector(j));
                let lhs: Vec<Scalar> = {
                    let m = &raw.h_action[hi];
                    (0..total_dim)
                        .map(|k| {
                            let mut acc = field.zero();
                            for (t, pt) in prod.iter().enumerate() {
                                if !pt.is_zero() {
                                    acc = acc.add(&m.get(k, t).mul(pt));
                                }
                            }
                            acc
                        })
                        .collect()
                };
                let mut rhs = vec![field.zero(); total_dim];
                for (h1, h2, c) in raw.hopf.comult(hi).terms() {
                    let gi = cat_probe.h_on_basis(*h1, i);
                    let fj = cat_probe.h_on_basis(*h2, j);
                    let comp = cat_probe.compose(&gi, &fj);
                    for t in 0..total_dim {
                        rhs[t] = rhs[t].add(&c.mul(&comp[t]));
                    }
                }
                if lhs != rhs {
                    return Err(CategoryError::Axiom {
                        axiom: "enrichment-leibniz",
                        indices: vec![hi, i, j],
                    });
                }
            }
        }
    }

    let generators = algebra_generators(field, total_dim, &left_mult, &unit_vector);
    Ok(HModuleCategory {
        hopf: raw.hopf,
        objects: raw.objects,
        basis_blocks,
        total_dim,
        left_mult,
        unit_vector,
        object_units: raw.units,
        h_action: raw.h_action,
        generators,
        name: None,
    })
}

/// The one-object category A = k with the counit action: equivariant
/// modules over it are plain H-modules.
pub fn trivial_category(hopf: &Arc<HopfPresentation>) -> HModuleCategory {
    let field = hopf.field();
    let h_action = (0..hopf.dim())
        .map(|i| {
            Matrix::new(field, 1, 1, vec![hopf.counit_of(i).clone()]).expect("1x1")
        })
        .collect();
    let mut cat = validate_category(RawCategory {
        hopf: hopf.clone(),
        objects: vec!["*".into()],
        hom_dims: vec![vec![1]],
        compose: vec![(0, 0, 0, field.one())],
        units: vec![vec![field.one()]],
        h_action,
    })
    .expect("the trivial category is valid");
    cat.set_name("k".into());
    cat
}

/// `A = k[x]/(xⁿ)` as a module algebra over `divided_power:p`, with the
/// generator acting as d/dx.
pub fn truncated_polynomial_category(
    hopf: &Arc<HopfPresentation>,
    n: usize,
) -> Result<HModuleCategory, CategoryError> {
    let Some(CatalogId::DividedPower { p }) = hopf.catalog_id() else {
        return Err(CategoryError::Shape(
            "truncated polynomial algebra needs a divided_power Hopf algebra".into(),
        ));
    };
    if n == 0 {
        return Err(CategoryError::Shape("need n >= 1".into()));
    }
    // d/dx descends to k[x]/(xⁿ) as a derivation only when d/dx(xⁿ) = n·x^(n-1)
    // vanishes mod p.
    if n > 1 && n % (*p as usize) != 0 {
        return Err(CategoryError::Shape(format!(
            "k[x]/(x^{n}) is a module algebra over divided_power:{p} only when {p} divides {n}"
        )));
    }
    let field = hopf.field();
    let mut compose = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a + b < n {
                compose.push((a, b, a + b, field.one()));
            }
        }
    }
    // d/dx: x^m ↦ m·x^(m-1); the a-th basis element of H acts as its a-th
    // power.
    let ddx = Matrix::from_fn(field, n, n, |i, j| {
        if i + 1 == j {
            field.from_i64(j as i64)
        } else {
            field.zero()
        }
    });
    let h_action = (0..hopf.dim()).map(|a| ddx.pow(a)).collect();
    let mut units = vec![field.zero(); n];
    units[0] = field.one();
    let mut cat = validate_category(RawCategory {
        hopf: hopf.clone(),
        objects: vec!["*".into()],
        hom_dims: vec![vec![n]],
        compose,
        units: vec![units],
        h_action,
    })?;
    cat.set_name(format!("truncpoly:{n}"));
    Ok(cat)
}

/// The two-object A₂ quiver category (objects 0, 1, one arrow 0 → 1) with
/// the trivial H-action.
pub fn a2_quiver_category(hopf: &Arc<HopfPresentation>) -> HModuleCategory {
    let field = hopf.field();
    // Basis block-lex: e0 at (0,0), arrow at (0,1), e1 at (1,1).
    let compose = vec![
        (0, 0, 0, field.one()), // e0 ∘ e0
        (1, 0, 1, field.one()), // α ∘ e0
        (2, 1, 1, field.one()), // e1 ∘ α
        (2, 2, 2, field.one()), // e1 ∘ e1
    ];
    let one = |t: usize| {
        let mut v = vec![field.zero(); 3];
        v[t] = field.one();
        v
    };
    let h_action = (0..hopf.dim())
        .map(|i| Matrix::identity(field, 3).scale(hopf.counit_of(i)))
        .collect();
    let mut cat = validate_category(RawCategory {
        hopf: hopf.clone(),
        objects: vec!["0".into(), "1".into()],
        hom_dims: vec![vec![1, 1], vec![0, 1]],
        compose,
        units: vec![one(0), one(2)],
        h_action,
    })
    .expect("the A2 quiver category is valid");
    cat.set_name("a2".into());
    cat
}

/// Parse a category shorthand: `k`, `truncpoly:n`, `a2`.
pub fn category_by_name(
    name: &str,
    hopf: &Arc<HopfPresentation>,
) -> Result<HModuleCategory, CategoryError> {
    match name.split(':').collect::<Vec<_>>().as_slice() {
        ["k"] => Ok(trivial_category(hopf)),
        ["a2"] => Ok(a2_quiver_category(hopf)),
        ["truncpoly", n] => {
            let n: usize = n
                .parse()
                .map_err(|_| CategoryError::Shape(format!("bad truncpoly degree in `{name}`")))?;
            truncated_polynomial_category(hopf, n)
        }
        _ => Err(CategoryError::Shape(format!(
            "cannot parse category name `{name}`"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{divided_power, sweedler};

    #[test]
    fn trivial_category_for_every_catalog_hopf() {
        for h in [
            Arc::new(divided_power(2).unwrap()),
            Arc::new(divided_power(3).unwrap()),
            Arc::new(sweedler(3).unwrap()),
        ] {
            let cat = trivial_category(&h);
            assert_eq!(cat.total_dim(), 1);
        }
    }

    #[test]
    fn truncated_polynomials_satisfy_leibniz() {
        let h2 = Arc::new(divided_power(2).unwrap());
        assert_eq!(truncated_polynomial_category(&h2, 2).unwrap().total_dim(), 2);
        assert_eq!(truncated_polynomial_category(&h2, 4).unwrap().total_dim(), 4);
        let h3 = Arc::new(divided_power(3).unwrap());
        assert_eq!(truncated_polynomial_category(&h3, 3).unwrap().total_dim(), 3);
        // d/dx is not a derivation of k[x]/(x²) in characteristic 3.
        assert!(truncated_polynomial_category(&h3, 2).is_err());
    }

    #[test]
    fn truncpoly_needs_divided_power() {
        let h = Arc::new(sweedler(3).unwrap());
        assert!(truncated_polynomial_category(&h, 2).is_err());
    }

    #[test]
    fn a2_quiver_validates() {
        let h = Arc::new(divided_power(2).unwrap());
        let cat = a2_quiver_category(&h);
        assert_eq!(cat.n_objects(), 2);
        assert_eq!(cat.total_dim(), 3);
        assert_eq!(cat.block_of(1), (0, 1));
    }

    #[test]
    fn broken_leibniz_is_caught() {
        // x acting as the identity on k[x]/(x²) is an H-module structure
        // (d ↦ 0 would be, too) but d ↦ id violates multiplicativity, while
        // d ↦ x·(d/dx) violates Leibniz. Exercise the Leibniz check.
        let h = Arc::new(divided_power(2).unwrap());
        let field = h.field();
        // d acts by the rank-one map x ↦ x (not a derivation).
        let bad = Matrix::from_i64(field, 2, 2, &[0, 0, 0, 1]);
        let raw = RawCategory {
            hopf: h.clone(),
            objects: vec!["*".into()],
            hom_dims: vec![vec![2]],
            compose: vec![
                (0, 0, 0, field.one()),
                (0, 1, 1, field.one()),
                (1, 0, 1, field.one()),
            ],
            units: vec![vec![field.one(), field.zero()]],
            h_action: vec![Matrix::identity(field, 2), bad],
        };
        let err = validate_category(raw).unwrap_err();
        assert!(matches!(
            err,
            CategoryError::Axiom {
                axiom: "enrichment-leibniz" | "h-action-multiplicative" | "h-fixes-units",
                ..
            }
        ));
    }
}
