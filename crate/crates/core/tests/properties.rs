//! Property-based checks of the linear-algebra kernel and randomized
//! consistency sweeps of the algebraic oracles.

use std::sync::Arc;

use proptest::prelude::*;

use hopfo::exactla::{FieldSpec, Matrix, Subspace};
use hopfo::hmodules::{homology, jordan_decompose, jordan_module};
use hopfo::hopfcore::by_name;
use hopfo::prng::Prng;

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(3).unwrap()),
        Just(FieldSpec::prime(5).unwrap()),
        Just(FieldSpec::prime(7).unwrap()),
        Just(FieldSpec::Rational),
    ]
}

fn matrix(field: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-6i64..=6, rows * cols)
        .prop_map(move |data| Matrix::from_i64(field, rows, cols, &data))
}

fn sized_matrix() -> impl Strategy<Value = Matrix> {
    (fields(), 0usize..5, 0usize..5)
        .prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rref_is_idempotent_and_rank_nullity_holds(m in sized_matrix()) {
        let (r, pivots) = m.rref();
        let (r2, pivots2) = r.rref();
        prop_assert_eq!(&r2, &r);
        prop_assert_eq!(&pivots2, &pivots);
        prop_assert_eq!(m.rank(), pivots.len());
        prop_assert_eq!(m.kernel().dim() + m.rank(), m.cols());
    }

    #[test]
    fn solve_solutions_are_exact(
        (m, x) in (fields(), 1usize..5, 1usize..5).prop_flat_map(|(f, r, c)| {
            (matrix(f, r, c), matrix(f, c, 1))
        })
    ) {
        let b = m.matmul(&x);
        let sol = m.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.matmul(&sol), b);
    }

    #[test]
    fn kronecker_is_functorial(
        (a, c, b, d) in (fields(), 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4)
            .prop_flat_map(|(f, m, n, p, q, r, s)| {
                (matrix(f, m, n), matrix(f, n, p), matrix(f, q, r), matrix(f, r, s))
            })
    ) {
        // (a·c) ⊗ (b·d) = (a⊗b)·(c⊗d)
        let lhs = a.matmul(&c).kronecker(&b.matmul(&d)).unwrap();
        let rhs = a.kronecker(&b).unwrap().matmul(&c.kronecker(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn span_equal_generating_sets_canonicalize_identically(
        (gens, perm_seed, scale) in (fields(), 1usize..4, 1usize..5)
            .prop_flat_map(|(f, r, c)| (matrix(f, r, c), any::<u64>(), 1i64..5))
    ) {
        let ambient = gens.cols();
        let s1 = Subspace::from_rows(ambient, &gens);
        // Rescale rows by a unit and add a row that is a sum of the others:
        // same span.
        let field = gens.field();
        let unit = if field.from_i64(scale).is_zero() {
            field.one()
        } else {
            field.from_i64(scale)
        };
        let mut doubled = gens.scale(&unit);
        let mut sum = Matrix::zeros(field, 1, ambient);
        for i in 0..gens.rows() {
            sum = sum.add(&gens.submatrix(i..i + 1, 0..ambient));
        }
        doubled = doubled.vstack(&sum);
        let _ = perm_seed;
        let s2 = Subspace::from_rows(ambient, &doubled);
        prop_assert_eq!(s1, s2);
    }

    #[test]
    fn quotient_maps_compose_to_identity(m in sized_matrix()) {
        let sub = Subspace::from_rows(m.cols(), &m);
        let (proj, section) = hopfo::exactla::quotient_map(m.cols(), &sub);
        prop_assert!(proj.matmul(&section).is_identity());
        prop_assert_eq!(proj.rows(), m.cols() - sub.dim());
    }
}

/// Jordan oracle consistency: for ≥100 random p-complex modules, the
/// homology dimension equals the number of Jordan blocks of size < p.
#[test]
fn jordan_oracle_matches_homology_on_random_modules() {
    let mut rng = Prng::new(42);
    let mut checked = 0;
    for p in [2u64, 3, 5] {
        let h = Arc::new(by_name(&format!("divided_power:{p}")).unwrap());
        for _ in 0..40 {
            // Random module = random multiset of block sizes (a module over
            // F_p[d]/(d^p) is exactly such a sum).
            let mut m = jordan_module(&h, 1 + rng.below(p) as usize).unwrap();
            for _ in 0..rng.below(3) {
                let next = jordan_module(&h, 1 + rng.below(p) as usize).unwrap();
                m = m.direct_sum(&next).unwrap();
            }
            let blocks = jordan_decompose(&m).unwrap();
            let expected: usize = blocks.iter().filter(|&&s| s < p as usize).count();
            assert_eq!(homology(&m).dim_h(), expected, "blocks {blocks:?} over dp{p}");
            checked += 1;
        }
    }
    assert!(checked >= 100, "only {checked} modules checked");
}

/// Homology functoriality: equivariant maps send Z into Z and B into B.
#[test]
fn equivariant_maps_respect_z_and_b() {
    let mut rng = Prng::new(7);
    for p in [2u64, 3] {
        let h = Arc::new(by_name(&format!("divided_power:{p}")).unwrap());
        let field = h.field();
        let modules = [
            jordan_module(&h, 1).unwrap(),
            jordan_module(&h, p as usize).unwrap(),
            jordan_module(&h, 1)
                .unwrap()
                .direct_sum(&jordan_module(&h, p as usize).unwrap())
                .unwrap(),
        ];
        for m in &modules {
            for n in &modules {
                let basis = hopfo::hmodules::equivariant_maps(m, n);
                for _ in 0..5 {
                    let Some(f) = rng.combination(&basis, field) else {
                        continue;
                    };
                    let hm = homology(m);
                    let hn = homology(n);
                    assert!(hm.z().map_by(&f).is_subspace_of(hn.z()));
                    assert!(hm.b().map_by(&f).is_subspace_of(hn.b()));
                }
            }
        }
    }
}
