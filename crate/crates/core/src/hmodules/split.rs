//! Greedy splitting of trivial summands: find equivariant pairs
//! `s: k -> m`, `r: m -> k` with `r∘s = 1`, peel off `ker r`, repeat.

use crate::exactla::{solve_intertwiner, MapConstraint, MapShape, Matrix};

use super::homology::homology;
use super::module::HModule;

/// Result of [`split_off_trivials`]: `m ≅ k^multiplicity ⊕ complement`,
/// witnessed by a mutually inverse pair of equivariant matrices. The first
/// `multiplicity` coordinates of the sum are the trivial summands.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub multiplicity: usize,
    pub complement: HModule,
    /// m -> k^multiplicity ⊕ complement
    pub into_sum: Matrix,
    /// k^multiplicity ⊕ complement -> m
    pub from_sum: Matrix,
}

/// Basis of the space of equivariant maps `m -> k` (coinvariant functionals).
fn coinvariant_functionals(m: &HModule) -> Vec<Matrix> {
    let h = m.hopf();
    let field = m.field();
    let shape = MapShape::full(field, 1, m.dim());
    let eps: Vec<Matrix> = h
        .generators()
        .iter()
        .map(|&g| {
            Matrix::new(field, 1, 1, vec![h.counit_of(g).clone()]).expect("1x1")
        })
        .collect();
    let constraints: Vec<MapConstraint> = h
        .generators()
        .iter()
        .zip(&eps)
        .map(|(&g, e)| MapConstraint::Intertwine {
            p: e,
            q: m.action(g),
        })
        .collect();
    solve_intertwiner(&shape, &constraints)
        .expect("homogeneous system")
        .kernel
}

pub fn split_off_trivials(m: &HModule) -> DecompositionReport {
    let field = m.field();
    let mut cur = m.clone();
    // Accumulated iso m ≅ k^a ⊕ cur.
    let mut into_sum = Matrix::identity(field, m.dim());
    let mut from_sum = Matrix::identity(field, m.dim());
    let mut multiplicity = 0usize;

    loop {
        let invariants = homology(&cur).z().clone();
        let functionals = coinvariant_functionals(&cur);
        // First pair with nonzero pairing, in canonical order.
        let mut found: Option<(Matrix, Matrix)> = None;
        'search: for r in &functionals {
            for si in 0..invariants.dim() {
                let s = invariants
                    .basis()
                    .submatrix(si..si + 1, 0..cur.dim())
                    .transpose();
                let pairing = r.matmul(&s).get(0, 0).clone();
                if let Some(inv) = pairing.inv() {
                    found = Some((r.scale(&inv), s));
                    break 'search;
                }
            }
        }
        let Some((r, s)) = found else {
            break;
        };

        // cur ≅ k ⊕ ker r via forward = [r ; coords∘(1 − s·r)].
        let ker = r.kernel();
        let (next, incl) = cur
            .submodule(&ker)
            .expect("kernel of an equivariant functional is a submodule");
        let reduce = Matrix::identity(field, cur.dim()).sub(&s.matmul(&r));
        let coords = ker
            .coordinates_of_columns(&reduce)
            .expect("1 − s·r lands in ker r");
        let step_forward = r.vstack(&coords);
        let step_backward = s.hstack(&incl);
        debug_assert!(step_forward.matmul(&step_backward).is_identity());
        debug_assert!(step_backward.matmul(&step_forward).is_identity());

        // Graft the step into the accumulated iso: the new trivial line goes
        // in front of the remaining complement block.
        let a = multiplicity;
        let expand = |step: &Matrix, rows: usize, cols: usize| -> Matrix {
            let mut out = Matrix::zeros(field, a + rows, a + cols);
            out.paste(0, 0, &Matrix::identity(field, a));
            out.paste(a, a, step);
            out
        };
        into_sum = expand(&step_forward, step_forward.rows(), step_forward.cols())
            .matmul(&into_sum);
        from_sum = from_sum.matmul(&expand(
            &step_backward,
            step_backward.rows(),
            step_backward.cols(),
        ));
        multiplicity += 1;
        cur = next;
    }

    debug_assert!(into_sum.matmul(&from_sum).is_identity());
    debug_assert!(from_sum.matmul(&into_sum).is_identity());
    DecompositionReport {
        multiplicity,
        complement: cur,
        into_sum,
        from_sum,
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::hmodules::{
        counit_kernel_module, is_projective, quotient_by_integral, regular_module,
        HModule,
    };
    use crate::hopfcore::{divided_power, sweedler};

    #[test]
    fn trivial_plus_free_splits_once() {
        let h = Arc::new(divided_power(3).unwrap());
        let m = HModule::trivial(&h)
            .direct_sum(&regular_module(&h))
            .unwrap();
        let rep = split_off_trivials(&m);
        assert_eq!(rep.multiplicity, 1);
        assert_eq!(rep.complement.dim(), 3);
        assert!(is_projective(&rep.complement));
    }

    #[test]
    fn regular_module_has_no_trivial_summand() {
        for h in [
            Arc::new(divided_power(2).unwrap()),
            Arc::new(sweedler(3).unwrap()),
        ] {
            let rep = split_off_trivials(&regular_module(&h));
            assert_eq!(rep.multiplicity, 0);
        }
    }

    #[test]
    fn kernel_tensor_quotient_splits_off_one_trivial() {
        // Ker ε ⊗ H/(λ) ≅ k ⊕ Q with Q projective.
        for h in [
            Arc::new(divided_power(2).unwrap()),
            Arc::new(divided_power(3).unwrap()),
            Arc::new(sweedler(3).unwrap()),
        ] {
            let m = counit_kernel_module(&h)
                .0
                .tensor(&quotient_by_integral(&h).0)
                .unwrap();
            let rep = split_off_trivials(&m);
            assert_eq!(rep.multiplicity, 1, "{:?}", h.catalog_id());
            assert!(is_projective(&rep.complement), "{:?}", h.catalog_id());
        }
    }

    #[test]
    fn witnesses_are_equivariant() {
        let h = Arc::new(divided_power(3).unwrap());
        let m = HModule::trivial(&h)
            .direct_sum(&regular_module(&h))
            .unwrap();
        let rep = split_off_trivials(&m);
        let sum = HModule::trivial(&h)
            .direct_sum(&rep.complement)
            .unwrap();
        assert!(crate::hmodules::is_equivariant_map(&rep.into_sum, &m, &sum));
        assert!(crate::hmodules::is_equivariant_map(&rep.from_sum, &sum, &m));
    }
}
