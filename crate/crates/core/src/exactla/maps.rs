//! Linear-map solving: spaces of matrices cut out by intertwining and
//! composition constraints, with optional entry masks for graded maps.
//!
//! This is the workhorse behind hom-space computation, section/retraction
//! solves, homotopy witnesses and freeness searches. Unknowns are the
//! (masked) entries of a `rows x cols` matrix `X`, flattened row-major.

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};

/// Shape of the unknown matrix. `mask[i*cols + j] = false` forces entry
/// `(i, j)` to zero and removes it from the unknowns.
#[derive(Clone)]
pub struct MapShape {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    pub mask: Option<Vec<bool>>,
}

impl MapShape {
    pub fn full(field: FieldSpec, rows: usize, cols: usize) -> MapShape {
        MapShape {
            field,
            rows,
            cols,
            mask: None,
        }
    }

    pub fn masked(field: FieldSpec, rows: usize, cols: usize, mask: Vec<bool>) -> MapShape {
        assert_eq!(mask.len(), rows * cols);
        MapShape {
            field,
            rows,
            cols,
            mask: Some(mask),
        }
    }

    fn allowed(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self
                    .mask
                    .as_ref()
                    .map(|m| m[i * self.cols + j])
                    .unwrap_or(true)
                {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// A linear condition on the unknown matrix `X`.
pub enum MapConstraint<'a> {
    /// `P·X = X·Q` (interwining a pair of operators).
    Intertwine { p: &'a Matrix, q: &'a Matrix },
    /// `X·F = Rhs`.
    ComposeRight { f: &'a Matrix, rhs: &'a Matrix },
    /// `G·X = Rhs`.
    ComposeLeft { g: &'a Matrix, rhs: &'a Matrix },
}

/// The affine solution set `{particular + span(kernel)}` of a constraint
/// system. For homogeneous systems the particular solution is zero.
pub struct AffineSolution {
    pub particular: Matrix,
    pub kernel: Vec<Matrix>,
}

impl AffineSolution {
    pub fn dim(&self) -> usize {
        self.kernel.len()
    }

    /// Deterministic enumeration of an invertible element of the affine
    /// set, if one can be found: the particular solution first, then single
    /// basis perturbations with small coefficients, then a greedy
    /// rank-completion pass, then pairs.
    pub fn find_invertible(&self) -> Option<Matrix> {
        let n = self.particular.rows();
        if n != self.particular.cols() {
            return None;
        }
        let full = |m: &Matrix| m.rank() == n;
        if full(&self.particular) {
            return Some(self.particular.clone());
        }
        let coeffs = small_coefficients(self.particular.field());
        for b in &self.kernel {
            for c in &coeffs {
                let cand = self.particular.add(&b.scale(c));
                if full(&cand) {
                    return Some(cand);
                }
            }
        }
        // Greedy rank completion.
        let mut x = self.particular.clone();
        let mut rank = x.rank();
        loop {
            let mut improved = false;
            for b in &self.kernel {
                for c in &coeffs {
                    let cand = x.add(&b.scale(c));
                    let r = cand.rank();
                    if r > rank {
                        x = cand;
                        rank = r;
                        improved = true;
                        if rank == n {
                            return Some(x);
                        }
                    }
                }
            }
            if !improved {
                break;
            }
        }
        // Pairs as a last resort.
        for (i, bi) in self.kernel.iter().enumerate() {
            for bj in &self.kernel[i + 1..] {
                for c in &coeffs {
                    let cand = self.particular.add(bi).add(&bj.scale(c));
                    if full(&cand) {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }
}

fn small_coefficients(field: FieldSpec) -> Vec<Scalar> {
    match field {
        FieldSpec::Prime(p) => (1..p.min(5)).map(|v| field.from_i64(v as i64)).collect(),
        FieldSpec::Rational => vec![field.one(), field.from_i64(-1), field.from_i64(2)],
    }
}

/// Solve the given constraints. Returns `None` when the affine system is
/// inconsistent; the homogeneous part always has at least the zero solution.
pub fn solve_intertwiner(shape: &MapShape, constraints: &[MapConstraint]) -> Option<AffineSolution> {
    let field = shape.field;
    let unknowns = shape.allowed();
    let index_of: std::collections::HashMap<(usize, usize), usize> = unknowns
        .iter()
        .enumerate()
        .map(|(t, &ij)| (ij, t))
        .collect();
    let nu = unknowns.len();

    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let mut push_eq = |coeffs: Vec<Scalar>, b: Scalar| {
        if coeffs.iter().all(Scalar::is_zero) && b.is_zero() {
            return;
        }
        rows.push(coeffs);
        rhs.push(b);
    };

    for c in constraints {
        match c {
            MapConstraint::Intertwine { p, q } => {
                assert_eq!(p.rows(), shape.rows, "P must act on the target");
                assert_eq!(q.rows(), shape.cols, "Q must act on the source");
                // Equation (i, j): sum_k P[i,k] X[k,j] - sum_k X[i,k] Q[k,j] = 0
                for i in 0..shape.rows {
                    for j in 0..shape.cols {
                        let mut coeffs = vec![field.zero(); nu];
                        for k in 0..shape.rows {
                            if let Some(&t) = index_of.get(&(k, j)) {
                                coeffs[t] = coeffs[t].add(p.get(i, k));
                            }
                        }
                        for k in 0..shape.cols {
                            if let Some(&t) = index_of.get(&(i, k)) {
                                coeffs[t] = coeffs[t].sub(q.get(k, j));
                            }
                        }
                        push_eq(coeffs, field.zero());
                    }
                }
            }
            MapConstraint::ComposeRight { f, rhs: r } => {
                assert_eq!(f.rows(), shape.cols);
                assert_eq!(r.rows(), shape.rows);
                assert_eq!(r.cols(), f.cols());
                for i in 0..shape.rows {
                    for j in 0..f.cols() {
                        let mut coeffs = vec![field.zero(); nu];
                        for k in 0..shape.cols {
                            if let Some(&t) = index_of.get(&(i, k)) {
                                coeffs[t] = coeffs[t].add(f.get(k, j));
                            }
                        }
                        push_eq(coeffs, r.get(i, j).clone());
                    }
                }
            }
            MapConstraint::ComposeLeft { g, rhs: r } => {
                assert_eq!(g.cols(), shape.rows);
                assert_eq!(r.rows(), g.rows());
                assert_eq!(r.cols(), shape.cols);
                for i in 0..g.rows() {
                    for j in 0..shape.cols {
                        let mut coeffs = vec![field.zero(); nu];
                        for k in 0..shape.rows {
                            if let Some(&t) = index_of.get(&(k, j)) {
                                coeffs[t] = coeffs[t].add(g.get(i, k));
                            }
                        }
                        push_eq(coeffs, r.get(i, j).clone());
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
    let a = Matrix::new(field, nrows, nu, entries).expect("consistent by construction");
    let b = Matrix::new(field, nrows, 1, rhs).expect("consistent by construction");

    let particular_vec = if b.is_zero() {
        Matrix::zeros(field, nu, 1)
    } else {
        a.solve(&b).expect("shapes agree")?
    };
    let kernel = a.kernel();

    let unflatten = |v: &Matrix| -> Matrix {
        let mut m = Matrix::zeros(field, shape.rows, shape.cols);
        for (t, &(i, j)) in unknowns.iter().enumerate() {
            m.set(i, j, v.get(t, 0).clone());
        }
        m
    };
    let particular = unflatten(&particular_vec);
    let basis = (0..kernel.dim())
        .map(|r| unflatten(&kernel.basis().submatrix(r..r + 1, 0..nu).transpose()))
        .collect();
    Some(AffineSolution {
        particular,
        kernel: basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn commutant_of_jordan_block() {
        // Matrices commuting with nilpotent J2 are a + b·J2: dimension 2.
        let f = gf(3);
        let j2 = Matrix::from_i64(f, 2, 2, &[0, 1, 0, 0]);
        let sol = solve_intertwiner(
            &MapShape::full(f, 2, 2),
            &[MapConstraint::Intertwine { p: &j2, q: &j2 }],
        )
        .unwrap();
        assert_eq!(sol.dim(), 2);
        let inv = sol.find_invertible().unwrap();
        assert_eq!(inv.rank(), 2);
    }

    #[test]
    fn affine_retraction_solve() {
        // Find t with t·i = id for the inclusion i = e1: k -> k^2.
        let f = gf(5);
        let i = Matrix::from_i64(f, 2, 1, &[1, 0]);
        let id = Matrix::identity(f, 1);
        let sol = solve_intertwiner(
            &MapShape::full(f, 1, 2),
            &[MapConstraint::ComposeRight { f: &i, rhs: &id }],
        )
        .unwrap();
        let t = &sol.particular;
        assert!(t.matmul(&i).is_identity());
    }

    #[test]
    fn inconsistent_affine_system() {
        let f = gf(5);
        let zero = Matrix::zeros(f, 2, 1);
        let id = Matrix::identity(f, 1);
        assert!(solve_intertwiner(
            &MapShape::full(f, 1, 2),
            &[MapConstraint::ComposeRight { f: &zero, rhs: &id }],
        )
        .is_none());
    }

    #[test]
    fn mask_restricts_unknowns() {
        // Diagonal maps commuting with everything diagonal: 2 unknowns.
        let f = gf(3);
        let mask = vec![true, false, false, true];
        let sol = solve_intertwiner(&MapShape::masked(f, 2, 2, mask), &[]).unwrap();
        assert_eq!(sol.dim(), 2);
        assert!(sol.kernel.iter().all(|b| b.get(0, 1).is_zero()));
    }
}
