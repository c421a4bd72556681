use super::field::Fp;
use super::matrix::Matrix;

/// A subspace of GF(p)^n stored by its canonical reduced echelon basis, so
/// equal subspaces compare equal as data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Fp, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Fp, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn from_vectors(field: Fp, ambient_dim: usize, vectors: Vec<Vec<u32>>) -> Self {
        let m = Matrix::from_row_vectors(field, ambient_dim, &vectors);
        Self::row_space(&m)
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, piv) = m.rref();
        let k = piv.len();
        let rows: Vec<usize> = (0..k).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: r.submatrix(&rows, &cols),
            pivots: piv,
        }
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn field(&self) -> Fp {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    /// Echelon basis as rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient_dim);
        let f = self.field();
        let mut w = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let a = w[c];
            if a != 0 {
                let na = f.neg(a);
                for (x, &b) in w.iter_mut().zip(self.basis.row(i)) {
                    if b != 0 {
                        *x = f.add(*x, f.mul(na, b));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis (the entries at pivot
    /// positions), or `None` if `v` is not in the subspace.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Coordinates without the membership check.
    pub fn coords_unchecked(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// The vector with the given coordinates.
    pub fn combine(&self, coeffs: &[u32]) -> Vec<u32> {
        assert_eq!(coeffs.len(), self.dim());
        let f = self.field();
        let mut v = vec![0u32; self.ambient_dim];
        for (i, &a) in coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (x, &b) in v.iter_mut().zip(self.basis.row(i)) {
                *x = f.add(*x, f.mul(a, b));
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::row_space(&Matrix::vstack(&[&self.basis, &other.basis]))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let f = self.field();
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(f, self.ambient_dim);
        }
        // solve a·B1 = b·B2
        let stacked = Matrix::vstack(&[&self.basis, &other.basis.scale(f.neg(1))]);
        let ker = stacked.transpose().kernel();
        let vecs = ker
            .basis_vectors()
            .into_iter()
            .map(|c| self.combine(&c[..self.dim()]))
            .collect();
        Subspace::from_vectors(f, self.ambient_dim, vecs)
    }
}

/// A quotient `ambient / kernel` with explicit projection and section.
/// Quotient coordinates are indexed by the non-pivot coordinates of the kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient_dim: usize,
    kernel: Subspace,
    free: Vec<usize>,
    projection: Matrix,
    section: Matrix,
}

impl QuotientSpace {
    pub fn new(ambient_dim: usize, kernel: Subspace) -> Self {
        assert_eq!(kernel.ambient_dim(), ambient_dim);
        let f = kernel.field();
        let mut is_pivot = vec![None; ambient_dim];
        for (i, &c) in kernel.pivots().iter().enumerate() {
            is_pivot[c] = Some(i);
        }
        let free: Vec<usize> = (0..ambient_dim).filter(|&c| is_pivot[c].is_none()).collect();
        let q = free.len();
        let mut projection = Matrix::zeros(f, q, ambient_dim);
        let mut section = Matrix::zeros(f, ambient_dim, q);
        for (j, &c) in free.iter().enumerate() {
            projection.set(j, c, 1);
            section.set(c, j, 1);
        }
        for (i, &c) in kernel.pivots().iter().enumerate() {
            let row = kernel.basis().row(i);
            for (j, &fc) in free.iter().enumerate() {
                projection.set(j, c, f.neg(row[fc]));
            }
        }
        QuotientSpace {
            ambient_dim,
            kernel,
            free,
            projection,
            section,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.free.len()
    }
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        let w = self.kernel.reduce(v);
        self.free.iter().map(|&c| w[c]).collect()
    }

    pub fn lift(&self, q: &[u32]) -> Vec<u32> {
        self.section.mul_vec(q)
    }
}

/// Quotient of `GF(p)^ambient_dim` by `s`.
pub fn quotient(ambient_dim: usize, s: &Subspace) -> QuotientSpace {
    QuotientSpace::new(ambient_dim, s.clone())
}
