//! Dense row-major matrices over an exact field.

use std::fmt;

use crate::error::LinAlgError;

use super::scalar::{inv_mod, FieldSpec, Scalar};
use super::subspace::Subspace;

/// A dense matrix over GF(p) or ℚ. Entries are stored row-major and are
/// always canonical representatives.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<Scalar>,
    ) -> Result<Matrix, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::DimensionMismatch {
                context: "entry count",
                left: entries.len(),
                right: rows * cols,
            });
        }
        for e in &entries {
            if e.field() != field {
                return Err(LinAlgError::FieldMismatch(field, e.field()));
            }
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.field(), field, "from_fn produced a foreign scalar");
                entries.push(e);
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Convenience constructor from signed integers.
    pub fn from_i64(field: FieldSpec, rows: usize, cols: usize, data: &[i64]) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix::from_fn(field, rows, cols, |i, j| field.from_i64(data[i * cols + j]))
    }

    /// A column vector from a coordinate slice.
    pub fn col_vector(field: FieldSpec, coords: &[Scalar]) -> Matrix {
        Matrix::new(field, coords.len(), 1, coords.to_vec()).expect("consistent by construction")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        assert_eq!(v.field(), self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.field, other.field);
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        assert_eq!(c.field(), self.field);
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "matmul field mismatch");
        assert_eq!(
            self.cols, other.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        if let (FieldSpec::Prime(p), Some(a), Some(b)) =
            (self.field, self.fp_entries(), other.fp_entries())
        {
            return Matrix::from_fp(
                self.field,
                self.rows,
                other.cols,
                matmul_fp(&a, &b, self.rows, self.cols, other.cols, p),
            );
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// `self^k` for square matrices, `k >= 0`.
    pub fn pow(&self, k: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut out = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            out = out.matmul(self);
        }
        out
    }

    /// Kronecker product with left-factor-major composite indices:
    /// row `i` of `self` and row `i'` of `other` land in row `i·other.rows + i'`.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch(self.field, other.field));
        }
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + i2, j * other.cols + j2, a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stack vertically: `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Concatenate horizontally: `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.field, other.field);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Block diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field);
        let mut out = Matrix::zeros(
            self.field,
            self.rows + other.rows,
            self.cols + other.cols,
        );
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, other);
        out
    }

    /// Copy `block` into `self` with upper-left corner at `(i0, j0)`.
    pub fn paste(&mut self, i0: usize, j0: usize, block: &Matrix) {
        assert!(i0 + block.rows <= self.rows && j0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(i0 + i, j0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        Matrix::from_fn(
            self.field,
            rows.len(),
            cols.len(),
            |i, j| self.get(rows.start + i, cols.start + j).clone(),
        )
    }

    pub fn select_rows(&self, sel: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, sel.len(), self.cols, |i, j| {
            self.get(sel[i], j).clone()
        })
    }

    /// Reduced row-echelon form and the pivot columns. Pivot choice is the
    /// leftmost nonzero column with the topmost unused row, so the result is
    /// deterministic and canonical.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        if let (FieldSpec::Prime(p), Some(mut data)) = (self.field, self.fp_entries()) {
            let pivots = rref_fp(&mut data, self.rows, self.cols, p);
            return (
                Matrix::from_fp(self.field, self.rows, self.cols, data),
                pivots,
            );
        }
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("pivot nonzero");
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of `{v : self·v = 0}` as a [`Subspace`] of k^cols.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut rows = Matrix::zeros(self.field, free.len(), self.cols);
        for (t, &fc) in free.iter().enumerate() {
            rows.set(t, fc, self.field.one());
            for (pr, &pc) in pivots.iter().enumerate() {
                rows.set(t, pc, r.get(pr, fc).neg());
            }
        }
        Subspace::from_rows(self.cols, &rows)
    }

    /// Column space as a subspace of k^rows.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_rows(self.rows, &self.transpose())
    }

    /// One solution `x` of `self·x = b` (free variables set to zero), or
    /// `None` if the system is inconsistent. `b` may have several columns.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>, LinAlgError> {
        if self.field != b.field {
            return Err(LinAlgError::FieldMismatch(self.field, b.field));
        }
        if self.rows != b.rows {
            return Err(LinAlgError::DimensionMismatch {
                context: "solve rhs rows",
                left: self.rows,
                right: b.rows,
            });
        }
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (pr, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(pr, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        match self.solve(&id).expect("shapes match") {
            Some(x) if self.matmul(&x).is_identity() => Some(x),
            _ => None,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Raw `u64` entries when this is a prime-field matrix.
    fn fp_entries(&self) -> Option<Vec<u64>> {
        if !matches!(self.field, FieldSpec::Prime(_)) {
            return None;
        }
        Some(
            self.entries
                .iter()
                .map(|e| e.fp_value().expect("prime field entry"))
                .collect(),
        )
    }

    fn from_fp(field: FieldSpec, rows: usize, cols: usize, data: Vec<u64>) -> Matrix {
        let FieldSpec::Prime(p) = field else {
            unreachable!()
        };
        Matrix {
            field,
            rows,
            cols,
            entries: data.into_iter().map(|v| Scalar::Fp { v, p }).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn matmul_fp(a: &[u64], b: &[u64], m: usize, n: usize, k: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; m * k];
    for i in 0..m {
        for t in 0..n {
            let av = a[i * n + t];
            if av == 0 {
                continue;
            }
            let (orow, brow) = (i * k, t * k);
            for j in 0..k {
                out[orow + j] = (out[orow + j] + av * b[brow + j]) % p;
            }
        }
    }
    out
}

fn rref_fp(data: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                data.swap(r * cols + j, pr * cols + j);
            }
        }
        let inv = inv_mod(data[r * cols + c], p);
        for j in c..cols {
            data[r * cols + j] = data[r * cols + j] * inv % p;
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = data[i * cols + c];
            if f == 0 {
                continue;
            }
            let neg = p - f;
            for j in c..cols {
                data[i * cols + j] = (data[i * cols + j] + neg * data[r * cols + j]) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(gf(5), 3);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero() {
        let z = Matrix::zeros(gf(7), 2, 3);
        let (r, pivots) = z.rref();
        assert_eq!(r, z);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_scales_row() {
        // [[2,1]] over GF(3): 2^{-1} = 2, so the row becomes [1, 2].
        let m = Matrix::from_i64(gf(3), 1, 2, &[2, 1]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_i64(gf(3), 1, 2, &[1, 2]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn kernel_dimensions() {
        assert_eq!(Matrix::zeros(gf(3), 2, 3).kernel().dim(), 3);
        assert_eq!(Matrix::identity(gf(3), 4).kernel().dim(), 0);
    }

    #[test]
    fn kernel_of_jordan_block() {
        // Nilpotent J3 over GF(3): e1 -> 0, e2 -> e1, e3 -> e2.
        let j3 = Matrix::from_i64(gf(3), 3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
        let ker = j3.kernel();
        assert_eq!(ker.dim(), 1);
        assert!(ker.contains(&Matrix::from_i64(gf(3), 3, 1, &[1, 0, 0])));
    }

    #[test]
    fn solve_scalar_equation() {
        // 2x = 1 over GF(3) has x = 2.
        let m = Matrix::from_i64(gf(3), 1, 1, &[2]);
        let b = Matrix::from_i64(gf(3), 1, 1, &[1]);
        assert_eq!(
            m.solve(&b).unwrap().unwrap(),
            Matrix::from_i64(gf(3), 1, 1, &[2])
        );
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let b = Matrix::from_i64(gf(5), 2, 1, &[3, 4]);
        assert_eq!(
            Matrix::identity(gf(5), 2).solve(&b).unwrap().unwrap(),
            b
        );
        let zero = Matrix::zeros(gf(5), 1, 1);
        let one = Matrix::from_i64(gf(5), 1, 1, &[1]);
        assert!(zero.solve(&one).unwrap().is_none());
    }

    #[test]
    fn solve_rejects_shape_mismatch() {
        let m = Matrix::zeros(gf(5), 2, 2);
        let b = Matrix::zeros(gf(5), 3, 1);
        assert!(m.solve(&b).is_err());
    }

    #[test]
    fn kronecker_of_identities() {
        let a = Matrix::identity(gf(7), 2);
        let b = Matrix::identity(gf(7), 3);
        assert_eq!(a.kronecker(&b).unwrap(), Matrix::identity(gf(7), 6));
    }

    #[test]
    fn kronecker_unit_and_shape() {
        let f = gf(5);
        let a = Matrix::from_i64(f, 2, 3, &[1, 2, 3, 4, 0, 1]);
        let unit = Matrix::identity(f, 1);
        assert_eq!(a.kronecker(&unit).unwrap(), a);

        let b = Matrix::zeros(f, 4, 5);
        let k = a.kronecker(&b).unwrap();
        assert_eq!((k.rows(), k.cols()), (8, 15));
    }

    #[test]
    fn kronecker_rejects_field_mismatch() {
        let a = Matrix::identity(gf(2), 1);
        let b = Matrix::identity(FieldSpec::Rational, 1);
        assert!(a.kronecker(&b).is_err());
    }

    #[test]
    fn rational_rref() {
        let f = FieldSpec::Rational;
        let m = Matrix::from_i64(f, 2, 3, &[2, 4, 6, 1, 2, 4]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(r, Matrix::from_i64(f, 2, 3, &[1, 2, 0, 0, 0, 1]));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(gf(5), 2, 2, &[1, 2, 3, 4]);
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        assert!(inv.matmul(&m).is_identity());

        let singular = Matrix::from_i64(gf(5), 2, 2, &[1, 2, 2, 4]);
        assert!(singular.inverse().is_none());
    }
}
