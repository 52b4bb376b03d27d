//! Hopf algebra presentations and axiom validation.

use std::collections::BTreeMap;

use crate::error::HopfError;
use crate::exactla::{FieldSpec, Matrix, Scalar, Subspace};

use super::catalog::CatalogId;

/// Sparse coproduct of one basis element: `Δ(b) = Σ c · (b_left ⊗ b_right)`,
/// with zero terms dropped and terms ordered left-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweedlerExpansion {
    terms: Vec<(usize, usize, Scalar)>,
}

impl SweedlerExpansion {
    fn from_map(map: BTreeMap<(usize, usize), Scalar>) -> SweedlerExpansion {
        SweedlerExpansion {
            terms: map
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((j, k), c)| (j, k, c))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(usize, usize, Scalar)] {
        &self.terms
    }
}

/// Raw structure constants, as ingested from JSON or built by the catalog.
/// `mult` holds triples `(i, j, k, c)` meaning `b_i · b_j` contains `c·b_k`;
/// `comult` holds `(i, j, k, c)` meaning `Δ(b_i)` contains `c·(b_j ⊗ b_k)`.
#[derive(Clone, Debug)]
pub struct RawHopf {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub unit: Vec<Scalar>,
    pub mult: Vec<(usize, usize, usize, Scalar)>,
    pub comult: Vec<(usize, usize, usize, Scalar)>,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
}

/// A validated finite-dimensional Hopf algebra with cached derived data.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    field: FieldSpec,
    dim: usize,
    basis_labels: Vec<String>,
    /// `left_mult[i]` is the matrix of left multiplication by `b_i`:
    /// column `j` holds the coordinates of `b_i · b_j`.
    left_mult: Vec<Matrix>,
    unit: Vec<Scalar>,
    comult: Vec<SweedlerExpansion>,
    counit: Vec<Scalar>,
    antipode: Matrix,
    // Cached on validation.
    s_inverse: Matrix,
    left_integral: Vec<Scalar>,
    counit_kernel: Subspace,
    integral_ideal: Subspace,
    generators: Vec<usize>,
    catalog_id: Option<CatalogId>,
}

impl PartialEq for HopfPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.left_mult == other.left_mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

/// Check every Hopf axiom on a raw presentation and cache derived data.
/// The first violated axiom is reported with the offending basis indices.
pub fn validate_hopf(raw: RawHopf) -> Result<HopfPresentation, HopfError> {
    let RawHopf {
        field,
        dim,
        basis_labels,
        unit,
        mult,
        comult,
        counit,
        antipode,
    } = raw;

    if dim == 0 {
        return Err(HopfError::Shape("dimension must be at least 1".into()));
    }
    for (name, len) in [
        ("basis_labels", basis_labels.len()),
        ("unit", unit.len()),
        ("counit", counit.len()),
    ] {
        if len != dim {
            return Err(HopfError::Shape(format!(
                "{name} has length {len}, expected {dim}"
            )));
        }
    }
    if antipode.rows() != dim || antipode.cols() != dim {
        return Err(HopfError::Shape(format!(
            "antipode is {}x{}, expected {dim}x{dim}",
            antipode.rows(),
            antipode.cols()
        )));
    }
    if antipode.field() != field
        || unit.iter().any(|c| c.field() != field)
        || counit.iter().any(|c| c.field() != field)
    {
        return Err(HopfError::Shape("scalar field mismatch".into()));
    }

    // Left-multiplication matrices from the sparse triples.
    let mut left_mult = vec![Matrix::zeros(field, dim, dim); dim];
    for (i, j, k, c) in &mult {
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(HopfError::Shape(format!(
                "mult triple ({i},{j},{k}) out of range"
            )));
        }
        let v = left_mult[*i].get(*k, *j).add(c);
        left_mult[*i].set(*k, *j, v);
    }

    // Coproducts as Sweedler expansions.
    let mut comult_maps = vec![BTreeMap::new(); dim];
    for (i, j, k, c) in &comult {
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(HopfError::Shape(format!(
                "comult triple ({i},{j},{k}) out of range"
            )));
        }
        let e = comult_maps[*i]
            .entry((*j, *k))
            .or_insert_with(|| field.zero());
        *e = e.add(c);
    }
    let comult: Vec<SweedlerExpansion> = comult_maps
        .into_iter()
        .map(SweedlerExpansion::from_map)
        .collect();

    let element_mult = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for k in 0..dim {
                    let m = left_mult[i].get(k, j);
                    if !m.is_zero() {
                        out[k] = out[k].add(&m.mul(&c));
                    }
                }
            }
        }
        out
    };
    let basis_vec = |i: usize| -> Vec<Scalar> {
        let mut v = vec![field.zero(); dim];
        v[i] = field.one();
        v
    };

    // Unit axiom: 1 acts as identity on both sides.
    let mut left_by_unit = Matrix::zeros(field, dim, dim);
    for (i, u) in unit.iter().enumerate() {
        left_by_unit = left_by_unit.add(&left_mult[i].scale(u));
    }
    if !left_by_unit.is_identity() {
        return Err(HopfError::Axiom {
            axiom: "unit-left",
            indices: vec![],
        });
    }
    for j in 0..dim {
        if element_mult(&basis_vec(j), &unit) != basis_vec(j) {
            return Err(HopfError::Axiom {
                axiom: "unit-right",
                indices: vec![j],
            });
        }
    }

    // Associativity: L(b_i)·L(b_j) = L(b_i · b_j).
    for i in 0..dim {
        for j in 0..dim {
            let prod = left_mult[i].matmul(&left_mult[j]);
            let mut expected = Matrix::zeros(field, dim, dim);
            for k in 0..dim {
                let c = left_mult[i].get(k, j);
                if !c.is_zero() {
                    expected = expected.add(&left_mult[k].scale(c));
                }
            }
            if prod != expected {
                return Err(HopfError::Axiom {
                    axiom: "associativity",
                    indices: vec![i, j],
                });
            }
        }
    }

    // Coassociativity: (Δ⊗1)Δ = (1⊗Δ)Δ on each basis element.
    for i in 0..dim {
        let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        let mut rhs = lhs.clone();
        for (j, k, c) in comult[i].terms() {
            for (a, b, d) in comult[*j].terms() {
                let e = lhs.entry((*a, *b, *k)).or_insert_with(|| field.zero());
                *e = e.add(&c.mul(d));
            }
            for (a, b, d) in comult[*k].terms() {
                let e = rhs.entry((*j, *a, *b)).or_insert_with(|| field.zero());
                *e = e.add(&c.mul(d));
            }
        }
        lhs.retain(|_, c| !c.is_zero());
        rhs.retain(|_, c| !c.is_zero());
        if lhs != rhs {
            return Err(HopfError::Axiom {
                axiom: "coassociativity",
                indices: vec![i],
            });
        }
    }

    // Counit axiom: (ε⊗1)Δ = id = (1⊗ε)Δ.
    for i in 0..dim {
        let mut left = vec![field.zero(); dim];
        let mut right = vec![field.zero(); dim];
        for (j, k, c) in comult[i].terms() {
            left[*k] = left[*k].add(&c.mul(&counit[*j]));
            right[*j] = right[*j].add(&c.mul(&counit[*k]));
        }
        if left != basis_vec(i) || right != basis_vec(i) {
            return Err(HopfError::Axiom {
                axiom: "counit",
                indices: vec![i],
            });
        }
    }

    // Bialgebra: Δ and ε are algebra maps.
    let tensor_of = |i: usize| -> BTreeMap<(usize, usize), Scalar> {
        comult[i]
            .terms()
            .iter()
            .map(|(j, k, c)| ((*j, *k), c.clone()))
            .collect()
    };
    for i in 0..dim {
        for j in 0..dim {
            // Δ(b_i b_j)
            let mut lhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for k in 0..dim {
                let c = left_mult[i].get(k, j);
                if c.is_zero() {
                    continue;
                }
                for ((a, b), d) in tensor_of(k) {
                    let e = lhs.entry((a, b)).or_insert_with(|| field.zero());
                    *e = e.add(&c.mul(&d));
                }
            }
            // Δ(b_i)·Δ(b_j) in H⊗H
            let mut rhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for (a1, b1, c1) in comult[i].terms() {
                for (a2, b2, c2) in comult[j].terms() {
                    let la = element_mult(&basis_vec(*a1), &basis_vec(*a2));
                    let lb = element_mult(&basis_vec(*b1), &basis_vec(*b2));
                    let c = c1.mul(c2);
                    for (a, ca) in la.iter().enumerate() {
                        if ca.is_zero() {
                            continue;
                        }
                        for (b, cb) in lb.iter().enumerate() {
                            if cb.is_zero() {
                                continue;
                            }
                            let e = rhs.entry((a, b)).or_insert_with(|| field.zero());
                            *e = e.add(&c.mul(&ca.mul(cb)));
                        }
                    }
                }
            }
            lhs.retain(|_, c| !c.is_zero());
            rhs.retain(|_, c| !c.is_zero());
            if lhs != rhs {
                return Err(HopfError::Axiom {
                    axiom: "comultiplicative",
                    indices: vec![i, j],
                });
            }
            // ε(b_i b_j) = ε(b_i)ε(b_j)
            let mut eps = field.zero();
            for k in 0..dim {
                eps = eps.add(&left_mult[i].get(k, j).mul(&counit[k]));
            }
            if eps != counit[i].mul(&counit[j]) {
                return Err(HopfError::Axiom {
                    axiom: "counit-multiplicative",
                    indices: vec![i, j],
                });
            }
        }
    }
    // Δ(1) = 1⊗1 and ε(1) = 1.
    {
        let mut delta_unit: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (i, u) in unit.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (j, k, c) in comult[i].terms() {
                let e = delta_unit.entry((*j, *k)).or_insert_with(|| field.zero());
                *e = e.add(&u.mul(c));
            }
        }
        let mut expected: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (j, uj) in unit.iter().enumerate() {
            if uj.is_zero() {
                continue;
            }
            for (k, uk) in unit.iter().enumerate() {
                if uk.is_zero() {
                    continue;
                }
                expected.insert((j, k), uj.mul(uk));
            }
        }
        delta_unit.retain(|_, c| !c.is_zero());
        if delta_unit != expected {
            return Err(HopfError::Axiom {
                axiom: "comultiplicative-unit",
                indices: vec![],
            });
        }
        let mut eps_unit = field.zero();
        for (i, u) in unit.iter().enumerate() {
            eps_unit = eps_unit.add(&u.mul(&counit[i]));
        }
        if !eps_unit.is_one() {
            return Err(HopfError::Axiom {
                axiom: "counit-unit",
                indices: vec![],
            });
        }
    }

    // Antipode axiom: μ(S⊗1)Δ = η∘ε = μ(1⊗S)Δ.
    for i in 0..dim {
        let mut left = vec![field.zero(); dim];
        let mut right = vec![field.zero(); dim];
        for (j, k, c) in comult[i].terms() {
            let sj: Vec<Scalar> = antipode.column(*j);
            let sk: Vec<Scalar> = antipode.column(*k);
            let l = element_mult(&sj, &basis_vec(*k));
            let r = element_mult(&basis_vec(*j), &sk);
            for t in 0..dim {
                left[t] = left[t].add(&c.mul(&l[t]));
                right[t] = right[t].add(&c.mul(&r[t]));
            }
        }
        let expected: Vec<Scalar> = unit.iter().map(|u| u.mul(&counit[i])).collect();
        if left != expected || right != expected {
            return Err(HopfError::Axiom {
                axiom: "antipode",
                indices: vec![i],
            });
        }
    }

    let s_inverse = antipode.inverse().ok_or(HopfError::SingularAntipode)?;

    // Left integral: the solution space of { b_i·λ = ε(b_i)·λ for all i }.
    let identity = Matrix::identity(field, dim);
    let mut stacked = Matrix::zeros(field, 0, dim);
    for i in 0..dim {
        stacked = stacked.vstack(&left_mult[i].sub(&identity.scale(&counit[i])));
    }
    let integral_space = stacked.kernel();
    if integral_space.dim() != 1 {
        return Err(HopfError::IntegralDimension(integral_space.dim()));
    }
    // The echelon basis row has leading coefficient 1, which is exactly the
    // normalization "first nonzero coordinate equals 1".
    let left_integral: Vec<Scalar> = integral_space.basis().row(0).to_vec();

    let counit_row = Matrix::new(field, 1, dim, counit.clone()).expect("length checked");
    let counit_kernel = counit_row.kernel();
    let integral_ideal = Subspace::from_rows(
        dim,
        &Matrix::new(field, 1, dim, left_integral.clone()).expect("length checked"),
    );

    let generators = algebra_generators(field, dim, &left_mult, &unit);

    Ok(HopfPresentation {
        field,
        dim,
        basis_labels,
        left_mult,
        unit,
        comult,
        counit,
        antipode,
        s_inverse,
        left_integral,
        counit_kernel,
        integral_ideal,
        generators,
        catalog_id: None,
    })
}

/// Greedy algebra generating set: repeatedly adjoin the first basis element
/// outside the subalgebra generated so far. Solver shortcuts use these
/// indices (a linear map commuting with generators commutes with everything).
pub(crate) fn algebra_generators(
    field: FieldSpec,
    dim: usize,
    left_mult: &[Matrix],
    unit: &[Scalar],
) -> Vec<usize> {
    let close = |span: &Subspace| -> Subspace {
        let mut cur = span.clone();
        loop {
            let mut gens = cur.basis().clone();
            for r in 0..cur.dim() {
                for s in 0..cur.dim() {
                    let x = cur.basis().row(r);
                    let y = cur.basis().row(s);
                    let mut prod = vec![field.zero(); dim];
                    for (i, xi) in x.iter().enumerate() {
                        if xi.is_zero() {
                            continue;
                        }
                        for k in 0..dim {
                            let mut acc = field.zero();
                            for (j, yj) in y.iter().enumerate() {
                                if !yj.is_zero() {
                                    acc = acc.add(&left_mult[i].get(k, j).mul(yj));
                                }
                            }
                            prod[k] = prod[k].add(&xi.mul(&acc));
                        }
                    }
                    gens = gens.vstack(&Matrix::new(field, 1, dim, prod).expect("length"));
                }
            }
            let next = Subspace::from_rows(dim, &gens);
            if next.dim() == cur.dim() {
                return next;
            }
            cur = next;
        }
    };

    let unit_row = Matrix::new(field, 1, dim, unit.to_vec()).expect("length");
    let mut span = close(&Subspace::from_rows(dim, &unit_row));
    let mut gens = Vec::new();
    while span.dim() < dim {
        let next = (0..dim)
            .find(|&i| {
                let mut v = vec![field.zero(); dim];
                v[i] = field.one();
                !span.contains(&Matrix::col_vector(field, &v))
            })
            .expect("span is proper, so some basis vector is missing");
        gens.push(next);
        let mut rows = span.basis().clone();
        let mut v = vec![field.zero(); dim];
        v[next] = field.one();
        rows = rows.vstack(&Matrix::new(field, 1, dim, v).expect("length"));
        span = close(&Subspace::from_rows(dim, &rows));
    }
    gens
}

impl HopfPresentation {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    /// Left multiplication matrix of the `i`-th basis element.
    pub fn left_mult(&self, i: usize) -> &Matrix {
        &self.left_mult[i]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn comult(&self, i: usize) -> &SweedlerExpansion {
        &self.comult[i]
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn counit_of(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// The cached antipode inverse; `S·S⁻¹ = S⁻¹·S = I`.
    pub fn antipode_inverse(&self) -> &Matrix {
        &self.s_inverse
    }

    /// The normalized left integral λ (first nonzero coordinate 1).
    pub fn left_integral(&self) -> &[Scalar] {
        &self.left_integral
    }

    pub fn counit_kernel(&self) -> &Subspace {
        &self.counit_kernel
    }

    /// The line kλ inside H.
    pub fn integral_ideal(&self) -> &Subspace {
        &self.integral_ideal
    }

    /// Indices of a greedy algebra generating set (not including 1).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn catalog_id(&self) -> Option<&CatalogId> {
        self.catalog_id.as_ref()
    }

    pub(crate) fn set_catalog_id(&mut self, id: CatalogId) {
        self.catalog_id = Some(id);
    }

    /// ε(λ) ≠ 0 detects semisimplicity (Larson–Radford/Maschke direction
    /// used here: the integral is not in the counit kernel).
    pub fn is_semisimple(&self) -> bool {
        !self.counit_of_element(&self.left_integral).is_zero()
    }

    /// Multiply two coordinate vectors in H.
    pub fn element_mult(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for k in 0..self.dim {
                    let m = self.left_mult[i].get(k, j);
                    if !m.is_zero() {
                        out[k] = out[k].add(&m.mul(&c));
                    }
                }
            }
        }
        out
    }

    pub fn counit_of_element(&self, x: &[Scalar]) -> Scalar {
        let mut out = self.field.zero();
        for (i, xi) in x.iter().enumerate() {
            out = out.add(&xi.mul(&self.counit[i]));
        }
        out
    }

    /// The matrix of left multiplication by an element.
    pub fn left_mult_of(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = out.add(&self.left_mult[i].scale(xi));
            }
        }
        out
    }

    /// Δ²(b_i) as sparse triples `(a, b, c, coeff)` with
    /// `(Δ⊗1)Δ(b_i) = Σ coeff · b_a⊗b_b⊗b_c`.
    pub fn comult_square(&self, i: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (j, k, c) in self.comult[i].terms() {
            for (a, b, d) in self.comult[*j].terms() {
                let e = out
                    .entry((*a, *b, *k))
                    .or_insert_with(|| self.field.zero());
                *e = e.add(&c.mul(d));
            }
        }
        out.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((a, b, c2), d)| (a, b, c2, d))
            .collect()
    }

    /// Coordinates of the basis vector `e_i`.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{divided_power, group_algebra};

    #[test]
    fn broken_coassociativity_is_reported() {
        // Start from GF(3)[∂]/(∂³) and corrupt Δ(∂).
        let h = divided_power(3).unwrap();
        let mut raw = crate::hopfcore::json::to_raw(&h);
        raw.comult = raw
            .comult
            .into_iter()
            .map(|(i, j, k, c)| if (i, j, k) == (1, 0, 1) { (1, 0, 2, c) } else { (i, j, k, c) })
            .collect();
        let err = validate_hopf(raw).unwrap_err();
        match err {
            HopfError::Axiom { axiom, indices } => {
                // Corrupting Δ(∂) must be caught on basis index 1 by one of
                // the coalgebra axioms.
                assert!(
                    axiom == "coassociativity" || axiom == "counit" || axiom == "comultiplicative",
                    "unexpected axiom {axiom}"
                );
                assert!(indices.contains(&1));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn group_algebra_antipode_is_inversion() {
        let h = group_algebra(&[2], FieldSpec::Rational).unwrap();
        // C2: S swaps nothing (every element is its own inverse).
        assert!(h.antipode().is_identity());
        assert_eq!(h.antipode_inverse(), h.antipode());
    }

    #[test]
    fn generators_of_divided_power() {
        let h = divided_power(3).unwrap();
        // ∂ generates the whole algebra.
        assert_eq!(h.generators(), &[1]);
    }
}
