//! Finite-dimensional algebras given by structure constants, together with a
//! symmetrising form.

mod constructors;
mod idempotents;
mod json;
mod radical;

pub use constructors::{
    cyclic_table, group_algebra, group_algebra_named, symmetric_group_s3_table, truncated_poly,
    AlgebraMap,
};
pub use json::AlgebraDef;

use crate::exactla::{Fp, Matrix, Subspace};
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("multiplication is not associative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NonAssociative(usize, usize, usize),
    #[error("unit is not a two-sided identity: fails against basis element e{0}")]
    BadUnit(usize),
    #[error("form is not symmetric: s(e{0} e{1}) != s(e{1} e{0})")]
    FormNotSymmetric(usize, usize),
    #[error("form is degenerate: Gram matrix has nonzero kernel vector {0:?}")]
    FormDegenerate(Vec<u32>),
    #[error("characteristic mismatch: {0} vs {1}")]
    CharMismatch(u32, u32),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("malformed definition: {0}")]
    Malformed(String),
    #[error("not an algebra homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("supplied radical rejected: {0}")]
    BadRadical(String),
}

/// How an algebra was derived from others, used to shortcut structural
/// computations (over a perfect field the radical of a tensor product is
/// `rad A ⊗ C + A ⊗ rad C`).
#[derive(Clone)]
enum Origin {
    Given,
    Opposite(Arc<Algebra>),
    Tensor(Arc<Algebra>, Arc<Algebra>),
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A finite-dimensional associative unital algebra over GF(p) with a chosen
/// symmetrising form. Immutable after validation.
pub struct Algebra {
    id: u64,
    name: String,
    field: Fp,
    dim: usize,
    labels: Vec<String>,
    // c^k_{ij} at (i * dim + j) * dim + k
    mul: Vec<u32>,
    unit: Vec<u32>,
    sform: Vec<u32>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    user_radical: Option<Subspace>,
    origin: Origin,
    opposite: OnceLock<Arc<Algebra>>,
    radical: OnceLock<Subspace>,
    idempotents: OnceLock<Vec<Vec<u32>>>,
    generators: OnceLock<Vec<usize>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("p", &self.field.p())
            .field("dim", &self.dim)
            .finish()
    }
}

impl Algebra {
    /// Builds and validates an algebra from dense structure constants.
    pub fn new(
        name: impl Into<String>,
        field: Fp,
        labels: Vec<String>,
        mul: Vec<u32>,
        unit: Vec<u32>,
        sform: Vec<u32>,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        let a = Self::build(name.into(), field, labels, mul, unit, sform)?;
        a.validate()?;
        Ok(Arc::new(a))
    }

    fn build(
        name: String,
        field: Fp,
        labels: Vec<String>,
        mul: Vec<u32>,
        unit: Vec<u32>,
        sform: Vec<u32>,
    ) -> Result<Algebra, AlgebraError> {
        let dim = unit.len();
        if mul.len() != dim * dim * dim || sform.len() != dim || labels.len() != dim {
            return Err(AlgebraError::Malformed(format!(
                "inconsistent sizes: dim {dim}, {} structure constants, {} form values, {} labels",
                mul.len(),
                sform.len(),
                labels.len()
            )));
        }
        if dim == 0 {
            return Err(AlgebraError::Malformed("zero-dimensional algebra".into()));
        }
        let mut left = Vec::with_capacity(dim);
        let mut right = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut l = Matrix::zeros(field, dim, dim);
            let mut r = Matrix::zeros(field, dim, dim);
            for j in 0..dim {
                for k in 0..dim {
                    // e_i e_j = sum_k c^k_ij e_k
                    l.set(k, j, mul[(i * dim + j) * dim + k]);
                    // e_j e_i
                    r.set(k, j, mul[(j * dim + i) * dim + k]);
                }
            }
            left.push(l);
            right.push(r);
        }
        Ok(Algebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name,
            field,
            dim,
            labels,
            mul,
            unit,
            sform,
            left,
            right,
            user_radical: None,
            origin: Origin::Given,
            opposite: OnceLock::new(),
            radical: OnceLock::new(),
            idempotents: OnceLock::new(),
            generators: OnceLock::new(),
        })
    }

    /// Checks associativity, the unit, symmetry and nondegeneracy of the form.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        let f = self.field;
        let id = Matrix::identity(f, n);
        let lu = self.left_mult(&self.unit);
        let ru = self.right_mult(&self.unit);
        for j in 0..n {
            if lu.column(j) != id.column(j) || ru.column(j) != id.column(j) {
                return Err(AlgebraError::BadUnit(j));
            }
        }
        // L_{e_i} L_{e_j} = L_{e_i e_j} column by column
        for i in 0..n {
            for j in 0..n {
                let lhs = self.left[i].mul(&self.left[j]);
                let rhs = self.left_mult(&self.basis_product(i, j));
                if lhs != rhs {
                    let l = (0..n).find(|&l| lhs.column(l) != rhs.column(l)).unwrap();
                    return Err(AlgebraError::NonAssociative(i, j, l));
                }
            }
        }
        let g = self.gram();
        for i in 0..n {
            for j in 0..i {
                if g.get(i, j) != g.get(j, i) {
                    return Err(AlgebraError::FormNotSymmetric(j, i));
                }
            }
        }
        let ker = g.kernel();
        if ker.dim() > 0 {
            return Err(AlgebraError::FormDegenerate(ker.basis_vectors()[0].clone()));
        }
        Ok(())
    }

    pub fn id(&self) -> u64 {
        self.id
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn p(&self) -> u32 {
        self.field.p()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &[u32] {
        &self.unit
    }
    pub fn sform(&self) -> &[u32] {
        &self.sform
    }
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.mul[(i * self.dim + j) * self.dim + k]
    }
    pub fn structure_constants(&self) -> &[u32] {
        &self.mul
    }

    /// Same characteristic, dimension, multiplication, unit and form.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.id == other.id
            || (self.field == other.field
                && self.dim == other.dim
                && self.mul == other.mul
                && self.unit == other.unit
                && self.sform == other.sform)
    }

    pub fn basis_element(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<u32> {
        let n = self.dim;
        self.mul[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
    }

    /// Matrix of left multiplication by the basis element `e_i`.
    pub fn left_basis(&self, i: usize) -> &Matrix {
        &self.left[i]
    }
    /// Matrix of right multiplication by the basis element `e_i`.
    pub fn right_basis(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    pub fn left_mult(&self, a: &[u32]) -> Matrix {
        combine(self.field, self.dim, &self.left, a)
    }

    pub fn right_mult(&self, a: &[u32]) -> Matrix {
        combine(self.field, self.dim, &self.right, a)
    }

    pub fn product(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        self.left_mult(a).mul_vec(b)
    }

    /// s(a)
    pub fn form(&self, a: &[u32]) -> u32 {
        let f = self.field;
        a.iter()
            .zip(&self.sform)
            .fold(0, |acc, (&x, &s)| f.add(acc, f.mul(x, s)))
    }

    /// Gram matrix `G_ij = s(e_i e_j)`.
    pub fn gram(&self) -> Matrix {
        let n = self.dim;
        let mut g = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, self.form(&self.basis_product(i, j)));
            }
        }
        g
    }

    /// The opposite algebra: same basis, unit and form; transposed products.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let n = self.dim;
                let mut mul = vec![0; n * n * n];
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            mul[(i * n + j) * n + k] = self.mul[(j * n + i) * n + k];
                        }
                    }
                }
                let name = match self.name.strip_suffix("^op") {
                    Some(base) => base.to_string(),
                    None => format!("{}^op", self.name),
                };
                let mut op = Algebra::build(
                    name,
                    self.field,
                    self.labels.clone(),
                    mul,
                    self.unit.clone(),
                    self.sform.clone(),
                )
                .expect("opposite of a valid algebra");
                op.origin = Origin::Opposite(self.clone());
                let op = Arc::new(op);
                // the opposite of the opposite is the original algebra itself
                let _ = op.opposite.set(self.clone());
                op
            })
            .clone()
    }

    /// Basis of the Jacobson radical. A radical supplied with the definition
    /// takes precedence (it has been verified at load time).
    pub fn radical_basis(&self) -> &Subspace {
        self.radical.get_or_init(|| {
            if let Some(r) = &self.user_radical {
                return r.clone();
            }
            match &self.origin {
                Origin::Given => radical::trace_radical(self),
                Origin::Opposite(a) => a.radical_basis().clone(),
                Origin::Tensor(a, c) => {
                    let f = self.field;
                    let mut vecs = Vec::new();
                    for r in a.radical_basis().basis_vectors() {
                        for j in 0..c.dim {
                            vecs.push(kron_vec(f, &r, &c.basis_element(j)));
                        }
                    }
                    for r in c.radical_basis().basis_vectors() {
                        for i in 0..a.dim {
                            vecs.push(kron_vec(f, &a.basis_element(i), &r));
                        }
                    }
                    Subspace::from_vectors(f, self.dim, vecs)
                }
            }
        })
    }

    /// A complete set of pairwise orthogonal primitive idempotents.
    pub fn primitive_idempotents(&self) -> &[Vec<u32>] {
        self.idempotents.get_or_init(|| match &self.origin {
            // idempotents and primitivity are unchanged in the opposite algebra
            Origin::Opposite(a) => a.primitive_idempotents().to_vec(),
            _ => idempotents::primitive_idempotents(self),
        })
    }

    /// Indices of basis elements that generate the algebra.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut gens: Vec<usize> = Vec::new();
            let mut span = Subspace::from_vectors(self.field, self.dim, vec![self.unit.clone()]);
            for i in 0..self.dim {
                if span.contains(&self.basis_element(i)) {
                    continue;
                }
                gens.push(i);
                span = self.subalgebra_closure(&gens);
                if span.dim() == self.dim {
                    break;
                }
            }
            gens
        })
    }

    /// Subalgebra generated by the given basis elements.
    pub fn subalgebra_closure(&self, gens: &[usize]) -> Subspace {
        let mut span = Subspace::from_vectors(self.field, self.dim, vec![self.unit.clone()]);
        loop {
            let mut vecs = span.basis_vectors();
            for v in span.basis_vectors() {
                for &g in gens {
                    vecs.push(self.right[g].mul_vec(&v));
                }
            }
            let next = Subspace::from_vectors(self.field, self.dim, vecs);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    /// The factors `(A, C)` when this algebra was built as `A ⊗ C`.
    pub fn tensor_factors(&self) -> Option<(&Arc<Algebra>, &Arc<Algebra>)> {
        match &self.origin {
            Origin::Tensor(a, c) => Some((a, c)),
            _ => None,
        }
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical_basis().dim() == 0
    }

    /// Verifies that `rad` is a nilpotent two-sided ideal with semisimple
    /// quotient.
    pub fn check_radical(&self, rad: &Subspace) -> Result<(), AlgebraError> {
        let n = self.dim;
        for v in rad.basis_vectors() {
            for i in 0..n {
                if !rad.contains(&self.left[i].mul_vec(&v)) || !rad.contains(&self.right[i].mul_vec(&v)) {
                    return Err(AlgebraError::BadRadical(format!(
                        "not a two-sided ideal (fails with basis element {i})"
                    )));
                }
            }
        }
        // nilpotent: rad^k = 0 for some k <= dim + 1
        let mut power = rad.clone();
        let mut steps = 0;
        while power.dim() > 0 {
            steps += 1;
            if steps > n + 1 {
                return Err(AlgebraError::BadRadical("not nilpotent".into()));
            }
            let mut vecs = Vec::new();
            for a in power.basis_vectors() {
                for b in rad.basis_vectors() {
                    vecs.push(self.product(&a, &b));
                }
            }
            let next = Subspace::from_vectors(self.field, n, vecs);
            if next == power {
                return Err(AlgebraError::BadRadical("not nilpotent".into()));
            }
            power = next;
        }
        let q = self.quotient_algebra(rad);
        if q.radical_basis().dim() != 0 {
            return Err(AlgebraError::BadRadical("quotient is not semisimple".into()));
        }
        Ok(())
    }

    /// The quotient algebra `A / I` for a two-sided ideal `I`, in quotient
    /// coordinates. Its form is left zero: quotients are only used for
    /// structural computations.
    pub fn quotient_algebra(&self, ideal: &Subspace) -> Algebra {
        let q = crate::exactla::quotient(self.dim, ideal);
        let m = q.dim();
        let mut mul = vec![0; m * m * m];
        for a in 0..m {
            let xa = q.section().column(a);
            for b in 0..m {
                let xb = q.section().column(b);
                let prod = q.project(&self.product(&xa, &xb));
                mul[(a * m + b) * m..(a * m + b + 1) * m].copy_from_slice(&prod);
            }
        }
        let unit = q.project(&self.unit);
        Algebra::build(
            format!("{}/I", self.name),
            self.field,
            (0..m).map(|i| format!("q{i}")).collect(),
            mul,
            unit,
            vec![0; m],
        )
        .unwrap_or_else(|_| panic!("quotient of {} is zero-dimensional", self.name))
    }

    /// Attaches a user-supplied radical after verifying it.
    pub fn with_radical(self: Arc<Self>, rad: Subspace) -> Result<Arc<Algebra>, AlgebraError> {
        self.check_radical(&rad)?;
        let mut a = Algebra::build(
            self.name.clone(),
            self.field,
            self.labels.clone(),
            self.mul.clone(),
            self.unit.clone(),
            self.sform.clone(),
        )?;
        a.user_radical = Some(rad);
        Ok(Arc::new(a))
    }
}

fn combine(field: Fp, n: usize, mats: &[Matrix], a: &[u32]) -> Matrix {
    let mut out = Matrix::zeros(field, n, n);
    for (m, &c) in mats.iter().zip(a) {
        out.add_scaled(m, c);
    }
    out
}

/// Re-validation entry point for externally constructed definitions.
pub fn validate_algebra(def: &AlgebraDef) -> Result<Arc<Algebra>, AlgebraError> {
    def.build()
}

/// `A ⊗ C` with basis `e_i ⊗ f_j` at index `i * dim C + j` and form `s_A ⊗ s_C`.
pub fn tensor(a: &Arc<Algebra>, c: &Arc<Algebra>) -> Result<Arc<Algebra>, AlgebraError> {
    if a.p() != c.p() {
        return Err(AlgebraError::CharMismatch(a.p(), c.p()));
    }
    let key = (a.id, c.id);
    let cache = tensor_cache();
    if let Some(t) = cache.lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let f = a.field;
    let (na, nc) = (a.dim, c.dim);
    let n = na * nc;
    let mut mul = vec![0; n * n * n];
    for i in 0..na {
        for i2 in 0..na {
            for k in 0..na {
                let x = a.mul[(i * na + i2) * na + k];
                if x == 0 {
                    continue;
                }
                for j in 0..nc {
                    for j2 in 0..nc {
                        for l in 0..nc {
                            let y = c.mul[(j * nc + j2) * nc + l];
                            if y == 0 {
                                continue;
                            }
                            let (r, s, t) = (i * nc + j, i2 * nc + j2, k * nc + l);
                            mul[(r * n + s) * n + t] = f.mul(x, y);
                        }
                    }
                }
            }
        }
    }
    let labels = a
        .labels
        .iter()
        .flat_map(|x| c.labels.iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let mut t = Algebra::build(
        format!("{}⊗{}", a.name, c.name),
        f,
        labels,
        mul,
        kron_vec(f, &a.unit, &c.unit),
        kron_vec(f, &a.sform, &c.sform),
    )?;
    t.origin = Origin::Tensor(a.clone(), c.clone());
    let t = Arc::new(t);
    cache.lock().unwrap().insert(key, t.clone());
    Ok(t)
}

pub(crate) fn kron_vec(f: Fp, u: &[u32], v: &[u32]) -> Vec<u32> {
    u.iter()
        .flat_map(|&x| v.iter().map(move |&y| f.mul(x, y)))
        .collect()
}

fn tensor_cache() -> &'static Mutex<HashMap<(u64, u64), Arc<Algebra>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<Algebra>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The algebra `A ⊗ B^0` over which `A`-`B`-bimodules are left modules.
pub fn bimodule_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Arc<Algebra> {
    tensor(a, &b.opposite()).expect("bimodule algebras share a characteristic")
}

/// The enveloping algebra `A ⊗ A^0`.
pub fn enveloping(a: &Arc<Algebra>) -> Arc<Algebra> {
    bimodule_algebra(a, a)
}

/// The ground field as a one-dimensional symmetric algebra with the identity
/// as form. Shared per characteristic.
pub fn ground_field(p: u32) -> Arc<Algebra> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Algebra>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut g = cache.lock().unwrap();
    g.entry(p)
        .or_insert_with(|| {
            let f = Fp::new(p);
            let a = Algebra::new(format!("GF({p})"), f, vec!["1".into()], vec![1], vec![1], vec![1])
                .expect("ground field is symmetric");
            // the ground field is its own opposite
            let _ = a.opposite.set(a.clone());
            a
        })
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn a2() -> Arc<Algebra> {
        truncated_poly(2, 2).unwrap()
    }

    #[test]
    fn truncated_poly_gram_is_antidiagonal() {
        let a = a2();
        let g = a.gram();
        assert_eq!(g, Matrix::from_rows(Fp::new(2), &[vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn degenerate_form_rejected() {
        let a = a2();
        let r = Algebra::new(
            "bad",
            a.field(),
            a.labels().to_vec(),
            a.structure_constants().to_vec(),
            a.unit().to_vec(),
            vec![1, 0],
        );
        assert!(matches!(r, Err(AlgebraError::FormDegenerate(_))));
    }

    fn constants(n: usize, entries: &[(usize, usize, usize)]) -> Vec<u32> {
        let mut mul = vec![0u32; n * n * n];
        for &(i, j, k) in entries {
            mul[(i * n + j) * n + k] = 1;
        }
        mul
    }

    #[test]
    fn bad_unit_detected() {
        // e0 e0 = e0, e0 x = x e0 = x, x x = x, claimed unit x
        let mul = constants(2, &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]);
        let labels = vec!["1".to_string(), "x".to_string()];
        let r = Algebra::new("u", Fp::new(3), labels, mul, vec![0, 1], vec![1, 0]);
        assert!(matches!(r, Err(AlgebraError::BadUnit(_))));
    }

    #[test]
    fn non_associative_detected() {
        // a a = b, b b = a, a b = b a = 0 fails (a a) b = a (a b)
        let mut entries = vec![(1, 1, 2), (2, 2, 1)];
        for j in 0..3 {
            entries.push((0, j, j));
            if j > 0 {
                entries.push((j, 0, j));
            }
        }
        let mul = constants(3, &entries);
        let labels = vec!["1".into(), "a".into(), "b".into()];
        let r = Algebra::new("na", Fp::new(3), labels, mul, vec![1, 0, 0], vec![1, 0, 0]);
        assert!(matches!(r, Err(AlgebraError::NonAssociative(..))));
    }

    #[test]
    fn asymmetric_form_detected() {
        let s3 = group_algebra(3, &constructors::symmetric_group_s3_table()).unwrap();
        let mut form = s3.sform().to_vec();
        form[3] = 1;
        let r = Algebra::new(
            "asym",
            s3.field(),
            s3.labels().to_vec(),
            s3.structure_constants().to_vec(),
            s3.unit().to_vec(),
            form,
        );
        assert!(matches!(r, Err(AlgebraError::FormNotSymmetric(..))));
    }

    #[test]
    fn ground_field_gf3_is_valid() {
        let k = ground_field(3);
        assert_eq!(k.dim(), 1);
        assert!(k.validate().is_ok());
    }

    #[test]
    fn opposite_is_an_involution() {
        let a = group_algebra(3, &constructors::symmetric_group_s3_table()).unwrap();
        let op = a.opposite();
        assert!(op.validate().is_ok());
        assert_eq!(op.sform(), a.sform());
        assert!(Arc::ptr_eq(&op.opposite(), &a));
        let b = a2();
        assert_eq!(b.opposite().structure_constants(), b.structure_constants());
    }

    #[test]
    fn tensor_with_ground_field_and_enveloping_dims() {
        let a = a2();
        let t = tensor(&a, &ground_field(2)).unwrap();
        assert_eq!(t.structure_constants(), a.structure_constants());
        assert_eq!(enveloping(&a).dim(), 4);
        assert!(enveloping(&a).validate().is_ok());
        let c4 = group_algebra(2, &constructors::cyclic_table(4)).unwrap();
        let e = enveloping(&c4);
        assert_eq!(e.dim(), 16);
        assert!(e.validate().is_ok());
        assert!(matches!(
            tensor(&a, &ground_field(3)),
            Err(AlgebraError::CharMismatch(2, 3))
        ));
    }

    #[test]
    fn tensor_gram_is_kronecker() {
        let a = a2();
        let c = group_algebra(2, &constructors::cyclic_table(2)).unwrap();
        let t = tensor(&a, &c).unwrap();
        assert_eq!(t.gram(), a.gram().kron(&c.gram()));
        assert!(t.gram().is_invertible());
    }

    #[test]
    fn generators_generate() {
        for a in [
            a2(),
            group_algebra(3, &constructors::symmetric_group_s3_table()).unwrap(),
            enveloping(&group_algebra(2, &constructors::cyclic_table(4)).unwrap()),
        ] {
            assert_eq!(a.subalgebra_closure(a.generators()).dim(), a.dim());
        }
    }
}
