//! Dense matrices over GF(p) with exact row reduction.

use super::field::Fp;
use std::fmt;

/// Row-major dense matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.p())?;
        for r in 0..self.rows.min(24) {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows(field: Fp, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = field.reduce(x);
            }
        }
        m
    }

    pub fn from_data(field: Fp, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < field.p()));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Fp, nrows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, nrows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), nrows);
            for i in 0..nrows {
                m.data[i * m.cols + j] = c[i];
            }
        }
        m
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(field: Fp, ncols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            data.extend_from_slice(r);
        }
        Matrix::from_data(field, rows.len(), ncols, data)
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        let c = self.cols;
        &mut self.data[r * c..(r + 1) * c]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in product: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = self.field;
        let p = f.p() as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let n = other.cols;
        let mut acc = vec![0u64; n];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0u32;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * n..(k + 1) * n];
                for (x, &b) in acc.iter_mut().zip(orow) {
                    *x += a * b as u64;
                }
                pending += 1;
                // keep the accumulator far from overflow
                if pending >= 1 << 20 {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            let orow = &mut out.data[i * n..(i + 1) * n];
            for (o, &x) in orow.iter_mut().zip(&acc) {
                *o = (x % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, other: &Matrix, s: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, s));
        }
    }

    /// Kronecker product; index `(i, j)` of the result factors as
    /// `(i1 * rows(other) + i2, j1 * cols(other) + j2)`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(f, self.rows * r2, self.cols * c2);
        let oc = out.cols;
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        out.data[(i1 * r2 + i2) * oc + j1 * c2 + j2] = f.mul(a, other.get(i2, j2));
                    }
                }
            }
        }
        out
    }

    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let f = blocks[0].field;
        let rows = blocks[0].rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(f, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                out.data[r * cols + off..r * cols + off + b.cols].copy_from_slice(b.row(r));
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let f = blocks[0].field;
        let cols = blocks[0].cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix::from_data(f, rows, cols, data)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.data[i * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    /// Reduced row-echelon form in place; returns the pivot columns.
    /// Pivoting is deterministic: first nonzero entry at or below the current row.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            if inv != 1 {
                for j in c..cols {
                    let x = self.data[r * cols + j];
                    self.data[r * cols + j] = f.mul(x, inv);
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (prow, after) = rest.split_at_mut(cols);
            let prow = &prow[..];
            let eliminate = |row: &mut [u32]| {
                let factor = row[c];
                if factor != 0 {
                    let neg = f.neg(factor);
                    for j in c..cols {
                        if prow[j] != 0 {
                            row[j] = f.add(row[j], f.mul(neg, prow[j]));
                        }
                    }
                }
            };
            for row in before.chunks_mut(cols) {
                eliminate(row);
            }
            for row in after.chunks_mut(cols) {
                eliminate(row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place();
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> super::Subspace {
        let (r, piv) = self.rref();
        let f = self.field;
        let n = self.cols;
        let mut is_pivot = vec![usize::MAX; n];
        for (i, &c) in piv.iter().enumerate() {
            is_pivot[c] = i;
        }
        let mut vecs = Vec::new();
        for free in 0..n {
            if is_pivot[free] != usize::MAX {
                continue;
            }
            let mut v = vec![0u32; n];
            v[free] = 1;
            for (i, &c) in piv.iter().enumerate() {
                v[c] = f.neg(r.get(i, free));
            }
            vecs.push(v);
        }
        super::Subspace::from_vectors(f, n, vecs)
    }

    /// Some `x` with `self * x = b`, or `None`.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let bm = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        self.solve_many(&bm).map(|x| x.column(0))
    }

    /// Some `X` with `self * X = B`, or `None` if any column is inconsistent.
    pub fn solve_many(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, self.rows);
        let n = self.cols;
        let aug = Matrix::hstack(&[self, b]);
        let (r, piv) = aug.rref();
        if piv.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (i, &c) in piv.iter().enumerate() {
            for j in 0..b.cols {
                x.set(c, j, r.get(i, n + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        if self.rank() != self.rows {
            return None;
        }
        self.solve_many(&id)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Flattens row-major into a single vector.
    pub fn to_vec(&self) -> Vec<u32> {
        self.data.clone()
    }

    pub fn from_vec(field: Fp, rows: usize, cols: usize, v: &[u32]) -> Matrix {
        Matrix::from_data(field, rows, cols, v.to_vec())
    }
}

/// `(X ⊗ Y) v` without materialising the Kronecker product. `v` is indexed
/// `i * cols(Y) + j`.
pub fn kron_apply(x: &Matrix, y: &Matrix, v: &[u32]) -> Vec<u32> {
    assert_eq!(v.len(), x.cols() * y.cols());
    let f = x.field();
    let vm = Matrix::from_vec(f, x.cols(), y.cols(), v);
    x.mul(&vm).mul(&y.transpose()).to_vec()
}

/// `(X ⊗ Y) B` for a matrix `B` whose rows are indexed like `kron_apply` input.
pub fn kron_mul(x: &Matrix, y: &Matrix, b: &Matrix) -> Matrix {
    let f = x.field();
    let cols: Vec<Vec<u32>> = (0..b.cols()).map(|j| kron_apply(x, y, &b.column(j))).collect();
    Matrix::from_columns(f, x.rows() * y.rows(), &cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Fp {
        Fp::new(p)
    }

    #[test]
    fn rref_identity_gf2() {
        let id = Matrix::identity(gf(2), 2);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn rref_zero() {
        let z = Matrix::zeros(gf(3), 3, 3);
        let (r, piv) = z.rref();
        assert_eq!(r, z);
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_all_ones_gf2() {
        let m = Matrix::from_rows(gf(2), &[vec![1, 1], vec![1, 1]]);
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::from_rows(gf(2), &[vec![1, 1], vec![0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(gf(5), 3).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(gf(5), 2, 2).kernel().dim(), 2);
        let k = Matrix::from_rows(gf(2), &[vec![1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(gf(7), 3);
        assert_eq!(id.solve(&[1, 2, 3]), Some(vec![1, 2, 3]));
        let z = Matrix::zeros(gf(7), 2, 2);
        assert_eq!(z.solve(&[1, 0]), None);
        let m = Matrix::from_rows(gf(2), &[vec![1, 1]]);
        let x = m.solve(&[1]).unwrap();
        assert!(x == vec![1, 0] || x == vec![0, 1]);
    }

    #[test]
    #[should_panic]
    fn solve_dimension_mismatch() {
        Matrix::identity(gf(3), 2).solve(&[1, 2, 3]);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(gf(5), &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(gf(5), 2));
        assert!(Matrix::from_rows(gf(5), &[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn kron_apply_matches_kron() {
        let f = gf(3);
        let x = Matrix::from_rows(f, &[vec![1, 2], vec![0, 1], vec![2, 2]]);
        let y = Matrix::from_rows(f, &[vec![1, 1, 0], vec![2, 0, 1]]);
        let v: Vec<u32> = (0..6).map(|i| (i * 2 + 1) % 3).collect();
        assert_eq!(kron_apply(&x, &y, &v), x.kron(&y).mul_vec(&v));
    }
}
