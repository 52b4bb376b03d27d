//! Built-in module catalogs for the verification suites: a named list of
//! equivariant modules per (A, H) pair, rich enough to exercise the
//! orthogonality, triangle and splitting checks.

use std::sync::Arc;

use crate::equivariant::{
    category_by_name, cone_adjoint, e_functor, EquivariantModule, HModuleCategory,
};
use crate::error::{Error, ModuleError};
use crate::exactla::Matrix;
use crate::hmodules::{
    counit_kernel_module, jordan_module, quotient_by_integral, regular_module, validate_module,
    HModule,
};
use crate::hopfcore::{by_name, CatalogId, HopfPresentation};

/// A named (A, H) pair with its module catalog.
pub struct CatalogPair {
    pub name: String,
    pub hopf: Arc<HopfPresentation>,
    pub cat: Arc<HModuleCategory>,
    pub modules: Vec<(String, EquivariantModule)>,
}

/// The four pairs the verification suites quantify over.
pub fn builtin_pairs() -> Vec<(&'static str, &'static str)> {
    vec![
        ("k", "divided_power:2"),
        ("k", "divided_power:3"),
        ("truncpoly:2", "divided_power:2"),
        ("k", "sweedler:3"),
    ]
}

/// The 1-dimensional module attached to the `a`-th character of a catalog
/// algebra with grouplike part (g ↦ qᵃ, x ↦ 0 for Taft/Sweedler; g ↦ χ(g)
/// for group algebras).
pub fn character_module(
    hopf: &Arc<HopfPresentation>,
    a: u64,
) -> Result<HModule, ModuleError> {
    let field = hopf.field();
    let action: Vec<Matrix> = match hopf.catalog_id() {
        Some(CatalogId::Sweedler { .. }) | Some(CatalogId::Taft { .. }) => {
            let n = match hopf.catalog_id() {
                Some(CatalogId::Taft { n, .. }) => *n,
                _ => 2,
            };
            let nn = n as usize;
            // Basis g^s x^b at index s·n + b; the character kills x.
            // χ(g) must be an n-th root of unity: reuse the structure
            // constants by reading off the action of g on x (xg = q·gx),
            // i.e. q = coefficient of (gx) in x·g.
            let x_times_g = hopf.element_mult(&hopf.basis_vector(1), &hopf.basis_vector(nn));
            let q = x_times_g[nn + 1].clone();
            let mut qa = field.one();
            for _ in 0..a {
                qa = qa.mul(&q);
            }
            (0..hopf.dim())
                .map(|t| {
                    let (s, b) = (t / nn, t % nn);
                    let v = if b != 0 {
                        field.zero()
                    } else {
                        let mut out = field.one();
                        for _ in 0..s {
                            out = out.mul(&qa);
                        }
                        out
                    };
                    Matrix::new(field, 1, 1, vec![v]).expect("1x1")
                })
                .collect()
        }
        _ => {
            return Err(ModuleError::WrongFamily {
                expected: "taft/sweedler",
            })
        }
    };
    validate_module(hopf, action)
}

/// The left ideal H·e for an idempotent-type element; used to carve the
/// indecomposable projectives of the Sweedler algebra out of the regular
/// module.
fn left_ideal(hopf: &Arc<HopfPresentation>, e: &[crate::exactla::Scalar]) -> Option<HModule> {
    let field = hopf.field();
    let dh = hopf.dim();
    // Right multiplication by e: columns are b_j·e.
    let mut r = Matrix::zeros(field, dh, dh);
    for j in 0..dh {
        let col = hopf.element_mult(&hopf.basis_vector(j), e);
        for k in 0..dh {
            r.set(k, j, col[k].clone());
        }
    }
    let span = r.column_space();
    regular_module(hopf).submodule(&span).map(|(m, _)| m)
}

/// Build the named module catalog for a pair given by category and Hopf
/// shorthands (≥ 12 modules per pair).
pub fn builtin_catalog(cat_name: &str, hopf_name: &str) -> Result<CatalogPair, Error> {
    let hopf = Arc::new(by_name(hopf_name)?);
    let cat = Arc::new(category_by_name(cat_name, &hopf)?);

    let mut modules: Vec<(String, EquivariantModule)> = Vec::new();
    let mut push = |name: &str, m: EquivariantModule| {
        modules.push((name.to_string(), m));
    };

    if cat.total_dim() == 1 && cat.n_objects() == 1 {
        // A = k: equivariant modules are H-modules.
        let lift = |m: &HModule| EquivariantModule::from_hmodule(m, &cat);
        let k = HModule::trivial(&hopf);
        let reg = regular_module(&hopf);
        let hq = quotient_by_integral(&hopf).0;
        let ke = counit_kernel_module(&hopf).0;
        push("k", lift(&k));
        push("H", lift(&reg));
        push("H/l", lift(&hq));
        push("KerEps", lift(&ke));
        push("Sk", lift(&k).suspend());
        push("S-k", lift(&k).desuspend());
        push("C(k)", lift(&k).cone());
        push("E(k)", e_functor(lift(&k).amod()));
        push("k+H", lift(&k.direct_sum(&reg).expect("same hopf")));
        push("KerEps*H/l", lift(&ke.tensor(&hq).expect("same hopf")));
        push("H+H", lift(&reg.direct_sum(&reg).expect("same hopf")));
        match hopf.catalog_id() {
            Some(CatalogId::DividedPower { p }) => {
                if *p > 2 {
                    push("J2", lift(&jordan_module(&hopf, 2).expect("k <= p")));
                    let j2j1 = jordan_module(&hopf, 2)
                        .expect("k <= p")
                        .direct_sum(&jordan_module(&hopf, 1).expect("k <= p"))
                        .expect("same hopf");
                    push("J2+J1", lift(&j2j1));
                } else {
                    push("k+k", lift(&k.direct_sum(&k).expect("same hopf")));
                    push("C(k)+k", lift(&k).cone().direct_sum(&lift(&k)));
                }
            }
            Some(CatalogId::Sweedler { .. }) | Some(CatalogId::Taft { .. }) => {
                let sign = character_module(&hopf, 1).expect("taft family");
                push("k-", lift(&sign));
                // e± = 2(1 ± g) are the idempotents of k[C2] ⊂ H4 (char 3).
                let field = hopf.field();
                let two = field.from_i64(2);
                let nn = match hopf.catalog_id() {
                    Some(CatalogId::Taft { n, .. }) => *n as usize,
                    _ => 2,
                };
                let mut e_plus = vec![field.zero(); hopf.dim()];
                e_plus[0] = two.clone();
                e_plus[nn] = two.clone();
                if let Some(p) = left_ideal(&hopf, &e_plus) {
                    push("P+", lift(&p));
                }
                let mut e_minus = vec![field.zero(); hopf.dim()];
                e_minus[0] = two.clone();
                e_minus[nn] = two.neg();
                if let Some(p) = left_ideal(&hopf, &e_minus) {
                    push("P-", lift(&p));
                }
            }
            _ => {
                push("k+k", lift(&k.direct_sum(&k).expect("same hopf")));
            }
        }
    } else {
        // Multi-dimensional A: build around the column modules.
        let mut cols: Vec<EquivariantModule> = Vec::new();
        for x in 0..cat.n_objects() {
            let c = EquivariantModule::column_module(&cat, x);
            if c.dim() > 0 {
                cols.push(c);
            }
        }
        let a0 = cols[0].clone();
        push("A", a0.clone());
        push("C(A)", a0.cone());
        push("SA", a0.suspend());
        push("S-A", a0.desuspend());
        push("E(A)", e_functor(a0.amod()));
        push("A+A", a0.direct_sum(&a0));
        push("A*H", a0.tensor_hmodule(&regular_module(&hopf)).expect("same hopf"));
        push(
            "A*H/l",
            a0.tensor_hmodule(&quotient_by_integral(&hopf).0).expect("same hopf"),
        );
        push(
            "A*KerEps",
            a0.tensor_hmodule(&counit_kernel_module(&hopf).0).expect("same hopf"),
        );
        push("SS-A", a0.desuspend().suspend());
        push("C(A)+A", a0.cone().direct_sum(&a0));
        push("C(C(A))", cone_adjoint(a0.cone().amod()));
        for (i, c) in cols.iter().enumerate().skip(1) {
            push(&format!("A(x{i})"), c.clone());
        }
    }

    Ok(CatalogPair {
        name: format!("({cat_name}, {hopf_name})"),
        hopf,
        cat,
        modules,
    })
}
