//! Canonical subspaces of k^n and quotient maps.

use super::matrix::Matrix;
use super::scalar::FieldSpec;

/// A subspace of k^n, stored as the reduced row-echelon basis of its row
/// span. Two equal subspaces have identical basis matrices, so `==` is
/// subspace equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    /// Span of the rows of `gens` inside k^ambient.
    pub fn from_rows(ambient_dim: usize, gens: &Matrix) -> Subspace {
        assert_eq!(gens.cols(), ambient_dim, "generator length mismatch");
        let (r, pivots) = gens.rref();
        let basis = r.submatrix(0..pivots.len(), 0..ambient_dim);
        Subspace {
            ambient_dim,
            basis,
        }
    }

    /// Span of a list of column vectors.
    pub fn from_columns(ambient_dim: usize, cols: &Matrix) -> Subspace {
        Subspace::from_rows(ambient_dim, &cols.transpose())
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Basis vectors as columns (an inclusion matrix k^dim -> k^ambient).
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Membership test for a column vector.
    pub fn contains(&self, v: &Matrix) -> bool {
        assert_eq!(v.rows(), self.ambient_dim);
        assert_eq!(v.cols(), 1);
        self.coordinates(v).is_some()
    }

    /// Coordinates of a column vector in the canonical basis, if it lies in
    /// the subspace.
    pub fn coordinates(&self, v: &Matrix) -> Option<Matrix> {
        let incl = self.inclusion();
        let x = incl.solve(v).expect("shapes match")?;
        if incl.matmul(&x) == *v {
            Some(x)
        } else {
            None
        }
    }

    /// Coordinates for several column vectors at once; `None` if any column
    /// falls outside the subspace.
    pub fn coordinates_of_columns(&self, vs: &Matrix) -> Option<Matrix> {
        let incl = self.inclusion();
        let x = incl.solve(vs).expect("shapes match")?;
        if incl.matmul(&x) == *vs {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        (0..self.dim()).all(|i| {
            let v = self.basis.submatrix(i..i + 1, 0..self.ambient_dim).transpose();
            other.contains(&v)
        })
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::from_rows(self.ambient_dim, &self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        // Solutions of c·A = d·B correspond to the kernel of [Aᵀ | -Bᵀ].
        let stacked = self
            .basis
            .transpose()
            .hstack(&other.basis.transpose().neg());
        let ker = stacked.kernel();
        let mut gens = Matrix::zeros(self.field(), ker.dim(), self.ambient_dim);
        for r in 0..ker.dim() {
            let c = ker
                .basis()
                .submatrix(r..r + 1, 0..self.dim())
                .matmul(&self.basis);
            gens.paste(r, 0, &c);
        }
        Subspace::from_rows(self.ambient_dim, &gens)
    }

    /// Image of this subspace under the column-vector map `m`.
    pub fn map_by(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        Subspace::from_rows(m.rows(), &m.matmul(&self.inclusion()).transpose())
    }

    /// Whether the column-vector map `m` sends this subspace into `target`.
    pub fn maps_into(&self, m: &Matrix, target: &Subspace) -> bool {
        self.map_by(m).is_subspace_of(target)
    }
}

/// A projection `proj: k^ambient -> k^(ambient - dim sub)` whose kernel is
/// exactly `sub`, together with a section with `proj·section = I`. The
/// quotient coordinates are the non-pivot coordinates of the subspace basis,
/// so the construction is deterministic.
pub fn quotient_map(ambient_dim: usize, sub: &Subspace) -> (Matrix, Matrix) {
    assert_eq!(sub.ambient_dim(), ambient_dim, "ambient dimension mismatch");
    let field = sub.field();
    let s = sub.dim();
    let basis = sub.basis();

    let mut is_pivot = vec![false; ambient_dim];
    let mut pivots = Vec::with_capacity(s);
    for r in 0..s {
        let c = (0..ambient_dim)
            .find(|&c| !basis.get(r, c).is_zero())
            .expect("echelon basis rows are nonzero");
        is_pivot[c] = true;
        pivots.push(c);
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();

    let mut proj = Matrix::zeros(field, free.len(), ambient_dim);
    for (t, &fc) in free.iter().enumerate() {
        proj.set(t, fc, field.one());
        for (r, &pc) in pivots.iter().enumerate() {
            proj.set(t, pc, basis.get(r, fc).neg());
        }
    }
    let mut section = Matrix::zeros(field, ambient_dim, free.len());
    for (t, &fc) in free.iter().enumerate() {
        section.set(fc, t, field.one());
    }
    (proj, section)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn canonical_basis_is_span_invariant() {
        let f = gf(5);
        let a = Matrix::from_i64(f, 2, 3, &[1, 1, 0, 0, 1, 1]);
        let b = Matrix::from_i64(f, 2, 3, &[1, 2, 1, 2, 3, 1]);
        assert_eq!(Subspace::from_rows(3, &a), Subspace::from_rows(3, &b));
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let f = gf(3);
        let (proj, section) = quotient_map(3, &Subspace::zero(f, 3));
        assert!(proj.is_identity());
        assert!(section.is_identity());
    }

    #[test]
    fn quotient_of_k3_by_e1() {
        let f = gf(3);
        let e1 = Subspace::from_rows(3, &Matrix::from_i64(f, 1, 3, &[1, 0, 0]));
        let (proj, section) = quotient_map(3, &e1);
        assert_eq!(proj.rows(), 2);
        assert!(proj.matmul(&section).is_identity());
        // Kernel of proj is exactly the subspace.
        assert_eq!(proj.kernel(), e1);
    }

    #[test]
    fn quotient_by_full_space() {
        let f = gf(3);
        let (proj, section) = quotient_map(2, &Subspace::full(f, 2));
        assert_eq!(proj.rows(), 0);
        assert_eq!(section.cols(), 0);
    }

    #[test]
    fn intersection_and_sum() {
        let f = gf(7);
        let u = Subspace::from_rows(3, &Matrix::from_i64(f, 2, 3, &[1, 0, 0, 0, 1, 0]));
        let v = Subspace::from_rows(3, &Matrix::from_i64(f, 2, 3, &[0, 1, 0, 0, 0, 1]));
        let meet = u.intersect(&v);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&Matrix::from_i64(f, 3, 1, &[0, 1, 0])));
        assert_eq!(u.sum(&v).dim(), 3);
    }
}
