//! The canonical homology `H(M) = Z(M)/B(M)` of an H-module:
//! invariants modulo the image of the integral.

use crate::exactla::{Matrix, Subspace};

use super::module::HModule;

/// Invariants `Z(M)`, boundaries `B(M) = λM`, and a lifted basis of the
/// subquotient `H(M) = Z(M)/B(M)`.
#[derive(Clone, Debug)]
pub struct HomologyData {
    z: Subspace,
    b: Subspace,
    dim_h: usize,
    /// Rows are representative vectors in M lifting a basis of H(M).
    representatives: Matrix,
}

impl HomologyData {
    pub fn z(&self) -> &Subspace {
        &self.z
    }

    pub fn b(&self) -> &Subspace {
        &self.b
    }

    pub fn dim_h(&self) -> usize {
        self.dim_h
    }

    pub fn representatives(&self) -> &Matrix {
        &self.representatives
    }

    pub fn is_acyclic(&self) -> bool {
        self.dim_h == 0
    }
}

/// Compute `Z(M) = ∩_h ker(ρ(h) − ε(h)I)` over the basis of H,
/// `B(M) = im ρ(λ)`, and canonical representatives for the quotient.
pub fn homology(m: &HModule) -> HomologyData {
    let h = m.hopf();
    let field = m.field();
    let d = m.dim();
    let id = Matrix::identity(field, d);

    let mut stacked = Matrix::zeros(field, 0, d);
    for i in 0..h.dim() {
        let block = m.action(i).sub(&id.scale(h.counit_of(i)));
        if !block.is_zero() {
            stacked = stacked.vstack(&block);
        }
    }
    let z = if stacked.rows() == 0 {
        Subspace::full(field, d)
    } else {
        stacked.kernel()
    };
    let b = m.lambda_action().column_space();
    assert!(
        b.is_subspace_of(&z),
        "B(M) ⊆ Z(M) must hold for a valid module"
    );

    // Deterministic lifted quotient basis: sweep the echelon basis of Z,
    // keeping the vectors that grow the span over B.
    let mut working = b.clone();
    let mut reps = Matrix::zeros(field, 0, d);
    for r in 0..z.dim() {
        let row = z.basis().submatrix(r..r + 1, 0..d);
        let grown = working.sum(&Subspace::from_rows(d, &row));
        if grown.dim() > working.dim() {
            reps = reps.vstack(&row);
            working = grown;
        }
    }
    let dim_h = z.dim() - b.dim();
    assert_eq!(reps.rows(), dim_h);
    HomologyData {
        z,
        b,
        dim_h,
        representatives: reps,
    }
}

/// The matrix of `H(f): H(M) -> H(N)` for an equivariant `f: M -> N`,
/// in the canonical representative bases.
pub fn induced_on_homology(f: &Matrix, hm: &HomologyData, hn: &HomologyData) -> Matrix {
    let field = f.field();
    let dim_m = hm.dim_h;
    let dim_n = hn.dim_h;
    // Solve [reps_Nᵀ | B_basisᵀ]·x = f·rep for each representative of H(M);
    // the rep coordinates are the induced matrix column.
    let reps_n = hn.representatives.transpose();
    let b_n = hn.b.inclusion();
    let lhs = reps_n.hstack(&b_n);
    let mut out = Matrix::zeros(field, dim_n, dim_m);
    for c in 0..dim_m {
        let rep = hm
            .representatives
            .submatrix(c..c + 1, 0..hm.representatives.cols())
            .transpose();
        let v = f.matmul(&rep);
        let x = lhs
            .solve(&v)
            .expect("shapes agree")
            .expect("f maps Z into Z and B into B for equivariant f");
        for r in 0..dim_n {
            out.set(r, c, x.get(r, 0).clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exactla::FieldSpec;
    use crate::hmodules::jordan::jordan_module;
    use crate::hmodules::{regular_module, HModule};
    use crate::hopfcore::{divided_power, group_algebra, sweedler};

    #[test]
    fn homology_of_regular_module_vanishes() {
        for h in [
            Arc::new(divided_power(2).unwrap()),
            Arc::new(divided_power(3).unwrap()),
            Arc::new(sweedler(3).unwrap()),
        ] {
            let hd = homology(&regular_module(&h));
            assert_eq!(hd.dim_h(), 0, "H(H) = 0 for {:?}", h.catalog_id());
            assert_eq!(hd.z().dim(), 1, "Z(H) = kλ is one-dimensional");
        }
    }

    #[test]
    fn homology_of_trivial_module() {
        // Non-semisimple: ε(λ) = 0, so B(k) = 0 and H(k) = k.
        let h = Arc::new(divided_power(3).unwrap());
        let hd = homology(&HModule::trivial(&h));
        assert_eq!(hd.dim_h(), 1);

        // Semisimple control case: ε(λ) ≠ 0 makes B(k) = k and H(k) = 0.
        let ss = Arc::new(group_algebra(&[2], FieldSpec::Rational).unwrap());
        let hd = homology(&HModule::trivial(&ss));
        assert_eq!(hd.dim_h(), 0);
    }

    #[test]
    fn jordan_blocks_have_expected_homology() {
        for p in [2u64, 3, 5] {
            let h = Arc::new(divided_power(p).unwrap());
            for k in 1..=p as usize {
                let hd = homology(&jordan_module(&h, k).unwrap());
                let expected = if k < p as usize { 1 } else { 0 };
                assert_eq!(hd.dim_h(), expected, "J_{k} over dp{p}");
            }
        }
    }

    #[test]
    fn induced_map_of_identity_is_identity() {
        let h = Arc::new(divided_power(3).unwrap());
        let m = jordan_module(&h, 2).unwrap();
        let hd = homology(&m);
        let id = Matrix::identity(h.field(), 2);
        assert!(induced_on_homology(&id, &hd, &hd).is_identity());
    }
}
