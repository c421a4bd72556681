use super::{Module, ModuleError};
use crate::algebra::{bimodule_algebra, ground_field, Algebra, AlgebraMap};
use crate::exactla::Matrix;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// An `A`-`B`-bimodule, stored as a left module over `A ⊗ B^0`; the basis
/// element `e_i ⊗ f_j` sits at index `i · dim B + j` and acts by
/// `m ↦ e_i m f_j`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    module: Arc<Module>,
}

impl Bimodule {
    pub fn new(left: Arc<Algebra>, right: Arc<Algebra>, module: Arc<Module>) -> Result<Self, ModuleError> {
        let env = bimodule_algebra(&left, &right);
        if !module.algebra().same_structure(&env) {
            return Err(ModuleError::AlgebraMismatch(format!(
                "module over {} is not a {}-{} bimodule",
                module.algebra().name(),
                left.name(),
                right.name()
            )));
        }
        let module = module.view_over(&env);
        Ok(Bimodule { left, right, module })
    }

    /// From commuting left and right actions (`r[j]` is `m ↦ m f_j`).
    pub fn from_sides(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        l: &[Matrix],
        r: &[Matrix],
    ) -> Result<Self, ModuleError> {
        let env = bimodule_algebra(&left, &right);
        let mut act = Vec::with_capacity(env.dim());
        for li in l {
            for rj in r {
                if li.mul(rj) != rj.mul(li) {
                    return Err(ModuleError::Invalid("left and right actions do not commute".into()));
                }
                act.push(li.mul(rj));
            }
        }
        let module = Module::new(env, act)?;
        Ok(Bimodule { left, right, module })
    }

    /// `A` as an `A`-`A`-bimodule; one shared object per algebra.
    pub fn regular(a: &Arc<Algebra>) -> Self {
        static C: OnceLock<Mutex<HashMap<u64, Bimodule>>> = OnceLock::new();
        let c = C.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(b) = c.lock().unwrap().get(&a.id()) {
            return b.clone();
        }
        let b = Self::build_regular(a);
        c.lock().unwrap().entry(a.id()).or_insert(b).clone()
    }

    fn build_regular(a: &Arc<Algebra>) -> Self {
        let env = bimodule_algebra(a, a);
        let n = a.dim();
        let mut act = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                act.push(a.left_basis(i).mul(a.right_basis(j)));
            }
        }
        Bimodule { left: a.clone(), right: a.clone(), module: Module::from_actions(env, act) }
    }

    /// `A` as an `A`-`B`-bimodule through an algebra map `φ: B → A`,
    /// `a · m · b = a m φ(b)`.
    pub fn restricted_regular(phi: &AlgebraMap) -> Self {
        let a = &phi.target;
        let b = &phi.source;
        let l: Vec<Matrix> = (0..a.dim()).map(|i| a.left_basis(i).clone()).collect();
        let r: Vec<Matrix> = (0..b.dim()).map(|j| a.right_mult(&phi.matrix.column(j))).collect();
        let env = bimodule_algebra(a, b);
        let mut act = Vec::with_capacity(env.dim());
        for li in &l {
            for rj in &r {
                act.push(li.mul(rj));
            }
        }
        Bimodule { left: a.clone(), right: b.clone(), module: Module::from_actions(env, act) }
    }

    /// A left module as an `A`-`k`-bimodule.
    pub fn from_left(v: &Arc<Module>) -> Self {
        let a = v.algebra().clone();
        let k = ground_field(a.p());
        let env = bimodule_algebra(&a, &k);
        Bimodule { left: a, right: k, module: v.view_over(&env) }
    }

    /// A left `B^0`-module (a right `B`-module) as a `k`-`B`-bimodule.
    pub fn from_right(v: &Arc<Module>) -> Self {
        let b = v.algebra().opposite();
        let k = ground_field(b.p());
        let env = bimodule_algebra(&k, &b);
        Bimodule { left: k, right: b, module: v.view_over(&env) }
    }

    pub fn left(&self) -> &Arc<Algebra> {
        &self.left
    }
    pub fn right(&self) -> &Arc<Algebra> {
        &self.right
    }
    pub fn module(&self) -> &Arc<Module> {
        &self.module
    }
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// The underlying left `A`-module, when `B` is the ground field.
    pub fn as_left_module(&self) -> Arc<Module> {
        assert_eq!(self.right.dim(), 1, "not a left module");
        self.module.view_over(&self.left)
    }

    /// The underlying left `B^0`-module, when `A` is the ground field.
    pub fn as_right_module(&self) -> Arc<Module> {
        assert_eq!(self.left.dim(), 1, "not a right module");
        self.module.view_over(&self.right.opposite())
    }

    /// Action of `a ∈ A` on the left.
    pub fn left_action(&self, a: &[u32]) -> Matrix {
        let db = self.right.dim();
        let ub = self.right.unit();
        let mut coeffs = vec![0u32; self.left.dim() * db];
        let f = self.left.field();
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in ub.iter().enumerate() {
                coeffs[i * db + j] = f.mul(x, y);
            }
        }
        self.module.action(&coeffs)
    }

    /// Action of `b ∈ B` on the right.
    pub fn right_action(&self, b: &[u32]) -> Matrix {
        let db = self.right.dim();
        let ua = self.left.unit();
        let mut coeffs = vec![0u32; self.left.dim() * db];
        let f = self.left.field();
        for (i, &x) in ua.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                coeffs[i * db + j] = f.mul(x, y);
            }
        }
        self.module.action(&coeffs)
    }

    pub fn left_basis_action(&self, i: usize) -> Matrix {
        self.left_action(&self.left.basis_element(i))
    }

    pub fn right_basis_action(&self, j: usize) -> Matrix {
        self.right_action(&self.right.basis_element(j))
    }

    /// The `B`-`A`-bimodule `M^∨ = Hom_k(M, k)` with `(b φ a)(m) = φ(a m b)`.
    /// The double dual is the original module object.
    pub fn dual(&self) -> Bimodule {
        let env = bimodule_algebra(&self.right, &self.left);
        let module = self
            .module
            .bimodule_dual
            .get_or_init(|| {
                let (da, db) = (self.left.dim(), self.right.dim());
                let mut act = Vec::with_capacity(da * db);
                for j in 0..db {
                    for i in 0..da {
                        act.push(self.module.act(i * db + j).transpose());
                    }
                }
                let d = Module::from_actions(env.clone(), act);
                let _ = d.bimodule_dual.set(self.module.clone());
                d
            })
            .clone();
        Bimodule { left: self.right.clone(), right: self.left.clone(), module }
    }

    /// Whether `f: self -> other` is a bimodule homomorphism.
    pub fn is_hom_to(&self, other: &Bimodule, f: &Matrix) -> bool {
        self.module.is_hom_to(&other.module, f)
    }
}
