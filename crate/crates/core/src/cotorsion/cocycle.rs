//! A-split extensions from H-direction cocycles.
//!
//! An A-split extension of Q by T is, after choosing an A-splitting,
//! `T ⊕ Q` with the H-action `[[ρ_T(h), θ(h)], [0, ρ_Q(h)]]` for a
//! one-cocycle θ; sampling the cocycle space is the generator behind the
//! A-split suites.

use crate::equivariant::{validate_equivariant, EquivariantModule};
use crate::exactla::{Matrix, Scalar};
use crate::homotopy::ExtensionData;
use crate::prng::Prng;

/// A basis of the space of cocycles `θ: H → Hom_A(Q, T)` (each basis
/// element is one matrix per H-basis element, graded and A-compatible).
pub struct CocycleSpace {
    pub sub: EquivariantModule,
    pub quotient: EquivariantModule,
    pub basis: Vec<Vec<Matrix>>,
}

/// Solve the cocycle constraints:
/// θ(b_i·b_j) = ρ_T(b_i)θ(b_j) + θ(b_i)ρ_Q(b_j), θ(1) = 0, and
/// θ(h)∘ρ_{Q,A}(a) = Σ ρ_{T,A}(h₁·a)∘θ(h₂) for all basis a, h.
/// (The raw space of A-split extension data; coboundaries are not quotiented
/// out — that is what the split checks downstream decide.)
pub fn a_split_cocycle_space(
    sub: &EquivariantModule,
    quotient: &EquivariantModule,
) -> CocycleSpace {
    assert!(sub.same_context(quotient));
    cocycle_space_raw(sub, quotient)
}

/// Build the A-split extension attached to a cocycle θ (one matrix per
/// H-basis element).
pub fn extension_from_theta(
    sub: &EquivariantModule,
    quotient: &EquivariantModule,
    theta: &[Matrix],
) -> ExtensionData {
    let cat = sub.cat();
    let field = cat.field();
    let sum = sub.direct_sum(quotient);
    let e_t = sub.amod().sum_embedding(sum.grading(), true);
    let e_q = quotient.amod().sum_embedding(sum.grading(), false);
    let a_action: Vec<Matrix> = (0..cat.total_dim())
        .map(|i| {
            e_t.matmul(sub.a_action(i))
                .matmul(&e_t.transpose())
                .add(&e_q.matmul(quotient.a_action(i)).matmul(&e_q.transpose()))
        })
        .collect();
    let h_action: Vec<Matrix> = (0..sub.hopf().dim())
        .map(|i| {
            e_t.matmul(sub.h_action(i))
                .matmul(&e_t.transpose())
                .add(&e_q.matmul(quotient.h_action(i)).matmul(&e_q.transpose()))
                .add(&e_t.matmul(&theta[i]).matmul(&e_q.transpose()))
        })
        .collect();
    let middle = validate_equivariant(cat, sum.grading().to_vec(), a_action, h_action)
        .expect("cocycle data assembles to a valid equivariant module");
    let _ = field;
    ExtensionData::new(
        sub.clone(),
        middle,
        quotient.clone(),
        e_t,
        e_q.transpose(),
    )
    .expect("block extensions are exact")
}

impl CocycleSpace {
    /// A deterministic random element of the cocycle space.
    pub fn sample(&self, rng: &mut Prng) -> Vec<Matrix> {
        let field = self.sub.cat().field();
        let dh = self.sub.hopf().dim();
        let (dt, dq) = (self.sub.dim(), self.quotient.dim());
        let mut theta = vec![Matrix::zeros(field, dt, dq); dh];
        for basis_elem in &self.basis {
            let c = rng.scalar(field);
            if c.is_zero() {
                continue;
            }
            for (i, t) in basis_elem.iter().enumerate() {
                theta[i] = theta[i].add(&t.scale(&c));
            }
        }
        theta
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

// -- raw solver ----------------------------------------------------------

/// Internal: the cocycle space by a raw linear solve (the mixed two-sided
/// equations are not expressible through `MapConstraint`).
pub(crate) fn cocycle_space_raw(
    sub: &EquivariantModule,
    quotient: &EquivariantModule,
) -> CocycleSpace {
    let cat = sub.cat();
    let hopf = sub.hopf();
    let field = cat.field();
    let dh = hopf.dim();
    let (dt, dq) = (sub.dim(), quotient.dim());

    let block_mask = quotient.amod().graded_mask_into(sub.amod());
    // Unknown layout: u = i·(dt·dq) + r·dq + c for θ(b_i)[r][c].
    let allowed: Vec<(usize, usize, usize)> = (0..dh)
        .flat_map(|i| {
            let bm = &block_mask;
            (0..dt).flat_map(move |r| {
                (0..dq)
                    .filter(move |&c| bm[r * dq + c])
                    .map(move |c| (i, r, c))
            })
        })
        .collect();
    let index_of: std::collections::HashMap<(usize, usize, usize), usize> = allowed
        .iter()
        .enumerate()
        .map(|(u, &t)| (t, u))
        .collect();
    let nu = allowed.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();

    // θ(1) = 0 (the unit is a combination of basis elements).
    for r in 0..dt {
        for c in 0..dq {
            let mut row = vec![field.zero(); nu];
            let mut nonzero = false;
            for (i, u) in hopf.unit().iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                if let Some(&t) = index_of.get(&(i, r, c)) {
                    row[t] = row[t].add(u);
                    nonzero = true;
                }
            }
            if nonzero {
                rows.push(row);
            }
        }
    }

    // Multiplicativity: θ(b_i b_j) = ρ_T(b_i)θ(b_j) + θ(b_i)ρ_Q(b_j).
    for i in 0..dh {
        for j in 0..dh {
            for r in 0..dt {
                for c in 0..dq {
                    let mut row = vec![field.zero(); nu];
                    // LHS: Σ_k mult_ij^k θ(b_k)[r][c]
                    for k in 0..dh {
                        let m = hopf.left_mult(i).get(k, j);
                        if m.is_zero() {
                            continue;
                        }
                        if let Some(&t) = index_of.get(&(k, r, c)) {
                            row[t] = row[t].add(m);
                        }
                    }
                    // − ρ_T(b_i)θ(b_j): entry (r,c) = Σ_s ρ_T(b_i)[r][s] θ(b_j)[s][c]
                    for s in 0..dt {
                        let v = sub.h_action(i).get(r, s);
                        if v.is_zero() {
                            continue;
                        }
                        if let Some(&t) = index_of.get(&(j, s, c)) {
                            row[t] = row[t].sub(v);
                        }
                    }
                    // − θ(b_i)ρ_Q(b_j)
                    for s in 0..dq {
                        let v = quotient.h_action(j).get(s, c);
                        if v.is_zero() {
                            continue;
                        }
                        if let Some(&t) = index_of.get(&(i, r, s)) {
                            row[t] = row[t].sub(v);
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }

    // A-compatibility: θ(b_i)∘ρ_{Q,A}(a) = Σ ρ_{T,A}(b_{i1}·a)∘θ(b_{i2}).
    for i in 0..dh {
        for a in 0..cat.total_dim() {
            for r in 0..dt {
                for c in 0..dq {
                    let mut row = vec![field.zero(); nu];
                    for s in 0..dq {
                        let v = quotient.a_action(a).get(s, c);
                        if v.is_zero() {
                            continue;
                        }
                        if let Some(&t) = index_of.get(&(i, r, s)) {
                            row[t] = row[t].add(v);
                        }
                    }
                    for (i1, i2, coef) in hopf.comult(i).terms() {
                        let acted = cat.h_on_basis(*i1, a);
                        let op = sub.amod().action_of(&acted);
                        for s in 0..dt {
                            let v = op.get(r, s);
                            if v.is_zero() {
                                continue;
                            }
                            if let Some(&t) = index_of.get(&(*i2, s, c)) {
                                row[t] = row[t].sub(&coef.mul(v));
                            }
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }

    let nrows = rows.len();
    let mut entries = Vec::with_capacity(nrows * nu);
    for row in rows {
        entries.extend(row);
    }
    let a = Matrix::new(field, nrows, nu, entries).expect("consistent");
    let ker = a.kernel();
    let basis = (0..ker.dim())
        .map(|b| {
            let mut theta = vec![Matrix::zeros(field, dt, dq); dh];
            for (u, &(i, r, c)) in allowed.iter().enumerate() {
                let v = ker.basis().get(b, u);
                if !v.is_zero() {
                    theta[i].set(r, c, v.clone());
                }
            }
            theta
        })
        .collect();
    CocycleSpace {
        sub: sub.clone(),
        quotient: quotient.clone(),
        basis,
    }
}
