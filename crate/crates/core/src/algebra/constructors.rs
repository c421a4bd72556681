//! Group algebras, truncated polynomial algebras and algebra homomorphisms.

use super::{Algebra, AlgebraError};
use crate::exactla::{Fp, Matrix};
use std::sync::Arc;

/// `GF(p)G` from a multiplication table (`table[i][j]` is the index of
/// `g_i g_j`), with the standard form `s(g) = [g = 1]`.
pub fn group_algebra(p: u32, table: &[Vec<usize>]) -> Result<Arc<Algebra>, AlgebraError> {
    group_algebra_named(format!("GF({p})G{}", table.len()), p, table)
}

pub fn group_algebra_named(
    name: impl Into<String>,
    p: u32,
    table: &[Vec<usize>],
) -> Result<Arc<Algebra>, AlgebraError> {
    let n = table.len();
    check_group(table)?;
    let id = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g)).unwrap();
    let mut mul = vec![0u32; n * n * n];
    for i in 0..n {
        for j in 0..n {
            mul[(i * n + j) * n + table[i][j]] = 1;
        }
    }
    let mut unit = vec![0u32; n];
    unit[id] = 1;
    let labels = (0..n)
        .map(|g| if g == id { "1".to_string() } else { format!("g{g}") })
        .collect();
    if !crate::exactla::is_prime(p) {
        return Err(AlgebraError::Malformed(format!("characteristic {p} is not prime")));
    }
    Algebra::new(name, Fp::new(p), labels, mul, unit.clone(), unit)
}

fn check_group(table: &[Vec<usize>]) -> Result<(), AlgebraError> {
    let n = table.len();
    if n == 0 {
        return Err(AlgebraError::NotAGroup("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(AlgebraError::NotAGroup(format!("row {i} has length {}", row.len())));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return Err(AlgebraError::NotAGroup(format!("entry {x} in row {i} out of range")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(AlgebraError::NotAGroup(format!(
                        "not associative on ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    let id = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| AlgebraError::NotAGroup("no identity element".into()))?;
    for g in 0..n {
        if !(0..n).any(|h| table[g][h] == id && table[h][g] == id) {
            return Err(AlgebraError::NotAGroup(format!("element {g} has no inverse")));
        }
    }
    Ok(())
}

/// Cyclic group of order `n`, element `k` being `g^k`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// The permutations of `{0,1,2}` in the order: identity, `r`, `r^2` (the
/// rotation subgroup), then the three transpositions. Product is composition
/// `(gh)(x) = g(h(x))`.
pub fn symmetric_group_s3_table() -> Vec<Vec<usize>> {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    let index = |q: [usize; 3]| perms.iter().position(|p| *p == q).unwrap();
    perms
        .iter()
        .map(|g| {
            perms
                .iter()
                .map(|h| index([g[h[0]], g[h[1]], g[h[2]]]))
                .collect()
        })
        .collect()
}

/// `GF(p)[x]/(x^N)` with basis `1, x, ..., x^{N-1}` and form the top
/// coefficient.
pub fn truncated_poly(p: u32, n: usize) -> Result<Arc<Algebra>, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::Malformed("truncation degree must be at least 1".into()));
    }
    if !crate::exactla::is_prime(p) {
        return Err(AlgebraError::Malformed(format!("characteristic {p} is not prime")));
    }
    let mut mul = vec![0u32; n * n * n];
    for i in 0..n {
        for j in 0..n - i {
            mul[(i * n + j) * n + i + j] = 1;
        }
    }
    let mut unit = vec![0u32; n];
    unit[0] = 1;
    let mut sform = vec![0u32; n];
    sform[n - 1] = 1;
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    Algebra::new(format!("GF({p})[x]/(x^{n})"), Fp::new(p), labels, mul, unit, sform)
}

/// A unital algebra homomorphism, `matrix` being `dim target × dim source`.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    pub matrix: Matrix,
}

impl AlgebraMap {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix) -> Result<Self, AlgebraError> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(AlgebraError::Malformed("algebra map has the wrong shape".into()));
        }
        if source.p() != target.p() {
            return Err(AlgebraError::CharMismatch(source.p(), target.p()));
        }
        if matrix.mul_vec(source.unit()) != target.unit() {
            return Err(AlgebraError::NotAHomomorphism("unit not preserved".into()));
        }
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let lhs = matrix.mul_vec(&source.basis_product(i, j));
                let rhs = target.product(&matrix.column(i), &matrix.column(j));
                if lhs != rhs {
                    return Err(AlgebraError::NotAHomomorphism(format!(
                        "product of basis elements {i}, {j} not preserved"
                    )));
                }
            }
        }
        Ok(AlgebraMap { source, target, matrix })
    }

    pub fn apply(&self, a: &[u32]) -> Vec<u32> {
        self.matrix.mul_vec(a)
    }

    /// The map sending basis element `i` of the source to basis element
    /// `index[i]` of the target (subgroup embeddings).
    pub fn from_basis_indices(
        source: Arc<Algebra>,
        target: Arc<Algebra>,
        index: &[usize],
    ) -> Result<Self, AlgebraError> {
        let mut m = Matrix::zeros(source.field(), target.dim(), source.dim());
        for (i, &t) in index.iter().enumerate() {
            m.set(t, i, 1);
        }
        AlgebraMap::new(source, target, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn powers_of_one_plus_x(a: &Algebra, n: usize) -> Matrix {
        let g = {
            let mut v = a.unit().to_vec();
            v[1] = 1;
            v
        };
        let mut cols = vec![a.unit().to_vec()];
        for _ in 1..n {
            let next = a.product(cols.last().unwrap(), &g);
            cols.push(next);
        }
        Matrix::from_columns(a.field(), a.dim(), &cols)
    }

    #[test]
    fn c2_is_dual_numbers() {
        let c2 = group_algebra(2, &cyclic_table(2)).unwrap();
        let a2 = truncated_poly(2, 2).unwrap();
        let m = powers_of_one_plus_x(&a2, 2);
        let iso = AlgebraMap::new(c2, a2, m).unwrap();
        assert!(iso.matrix.is_invertible());
    }

    #[test]
    fn c4_is_truncated_quartic() {
        let c4 = group_algebra(2, &cyclic_table(4)).unwrap();
        let a4 = truncated_poly(2, 4).unwrap();
        let m = powers_of_one_plus_x(&a4, 4);
        let iso = AlgebraMap::new(c4.clone(), a4, m).unwrap();
        assert!(iso.matrix.is_invertible());
        assert!(c4.validate().is_ok());
    }

    #[test]
    fn trivial_group_and_n1_are_the_ground_field() {
        let t = group_algebra(5, &[vec![0]]).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(t.structure_constants(), &[1]);
        let k = truncated_poly(5, 1).unwrap();
        assert_eq!(k.structure_constants(), &[1]);
        assert_eq!(k.sform(), &[1]);
    }

    #[test]
    fn not_a_group() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(group_algebra(2, &bad), Err(AlgebraError::NotAGroup(_))));
        let ragged = vec![vec![0, 1], vec![1]];
        assert!(matches!(group_algebra(2, &ragged), Err(AlgebraError::NotAGroup(_))));
    }

    #[test]
    fn subgroup_embeddings() {
        let c2 = group_algebra(2, &cyclic_table(2)).unwrap();
        let c4 = group_algebra(2, &cyclic_table(4)).unwrap();
        assert!(AlgebraMap::from_basis_indices(c2.clone(), c4.clone(), &[0, 2]).is_ok());
        assert!(AlgebraMap::from_basis_indices(c2, c4, &[0, 1]).is_err());
        let c3 = group_algebra(3, &cyclic_table(3)).unwrap();
        let s3 = group_algebra(3, &symmetric_group_s3_table()).unwrap();
        assert!(AlgebraMap::from_basis_indices(c3, s3.clone(), &[0, 1, 2]).is_ok());
        assert!(s3.validate().is_ok());
    }
}
