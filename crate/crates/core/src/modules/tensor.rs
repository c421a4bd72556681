//! `M ⊗_B N` as a quotient of `M ⊗_k N`.

use super::{Bimodule, Functor, Module};
use crate::algebra::{bimodule_algebra, Algebra};
use crate::exactla::{kron_mul, quotient, Matrix, Subspace};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// `M ⊗_B N` for an `A`-`B`-bimodule `M` and a `B`-`C`-bimodule `N`, with
/// the projection from `M ⊗_k N` (index `i · dim N + j`) and a section.
#[derive(Debug)]
pub struct TensorProduct {
    pub m: Bimodule,
    pub n: Bimodule,
    pub result: Bimodule,
    pub proj: Matrix,
    pub sect: Matrix,
}

impl TensorProduct {
    /// The class of `x ⊗ y`.
    pub fn pure(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.proj.field();
        let v: Vec<u32> = x.iter().flat_map(|&a| y.iter().map(move |&b| f.mul(a, b))).collect();
        self.proj.mul_vec(&v)
    }

    /// `f ⊗ g: M ⊗_B N → M' ⊗_B N'` for `target = M' ⊗_B N'`.
    pub fn map_to(&self, target: &TensorProduct, f: &Matrix, g: &Matrix) -> Matrix {
        target.proj.mul(&kron_mul(f, g, &self.sect))
    }

    pub fn dim(&self) -> usize {
        self.result.dim()
    }
}

fn compute(m: &Bimodule, n: &Bimodule) -> TensorProduct {
    let b = m.right();
    assert!(
        b.same_structure(n.left()),
        "tensor over mismatched algebras {} and {}",
        b.name(),
        n.left().name()
    );
    let f = b.field();
    let (dm, dn) = (m.dim(), n.dim());
    let total = dm * dn;
    let mut rel_rows = Vec::new();
    let id_m = Matrix::identity(f, dm);
    let id_n = Matrix::identity(f, dn);
    for &g in b.generators() {
        let rb = m.right_basis_action(g);
        let lb = n.left_basis_action(g);
        let rel = rb.kron(&id_n).sub(&id_m.kron(&lb));
        rel_rows.push(rel.transpose());
    }
    let rels = if rel_rows.is_empty() {
        Subspace::zero(f, total)
    } else {
        let refs: Vec<&Matrix> = rel_rows.iter().collect();
        Subspace::row_space(&Matrix::vstack(&refs))
    };
    let q = quotient(total, &rels);
    let proj = q.projection().clone();
    let sect = q.section().clone();
    let (a, c) = (m.left().clone(), n.right().clone());
    let env = bimodule_algebra(&a, &c);
    let la: Vec<Matrix> = (0..a.dim()).map(|i| m.left_basis_action(i)).collect();
    let rc: Vec<Matrix> = (0..c.dim()).map(|j| n.right_basis_action(j)).collect();
    let mut act = Vec::with_capacity(a.dim() * c.dim());
    for l in &la {
        for r in &rc {
            act.push(proj.mul(&kron_mul(l, r, &sect)));
        }
    }
    let module = Module::from_actions(env, act);
    let result = Bimodule::new(a, c, module).expect("tensor product over the right algebra");
    TensorProduct { m: m.clone(), n: n.clone(), result, proj, sect }
}

fn cache() -> &'static Mutex<HashMap<(u64, u64), Arc<TensorProduct>>> {
    static C: OnceLock<Mutex<HashMap<(u64, u64), Arc<TensorProduct>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `M ⊗_B N`, cached per pair of module objects so that repeated products
/// are the same object.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> Arc<TensorProduct> {
    let key = (m.module().id(), n.module().id());
    if let Some(t) = cache().lock().unwrap().get(&key) {
        return t.clone();
    }
    let t = Arc::new(compute(m, n));
    cache().lock().unwrap().entry(key).or_insert(t).clone()
}

struct Applied {
    first: Option<Arc<TensorProduct>>,
    second: Option<Arc<TensorProduct>>,
    output: Arc<Module>,
}

/// `X ↦ M ⊗_B X ⊗_{B'} N` (either factor optional) on `B`-`B'`-bimodules, or
/// on left `B`-modules when `N` is absent and inputs are flagged as left
/// modules. Results are cached per input module so that towers built from
/// it are consistent.
pub struct TensorFunctor {
    m: Option<Bimodule>,
    n: Option<Bimodule>,
    inner: (Arc<Algebra>, Arc<Algebra>),
    left_modules: bool,
    applied: Mutex<HashMap<u64, Arc<Applied>>>,
}

impl TensorFunctor {
    /// On `B`-`B'`-bimodules.
    pub fn on_bimodules(m: Option<Bimodule>, n: Option<Bimodule>, b: Arc<Algebra>, b2: Arc<Algebra>) -> Self {
        TensorFunctor { m, n, inner: (b, b2), left_modules: false, applied: Mutex::new(HashMap::new()) }
    }

    /// `V ↦ M ⊗_B V` on left `B`-modules, giving left `A`-modules.
    pub fn on_left_modules(m: Bimodule) -> Self {
        let b = m.right().clone();
        let k = crate::algebra::ground_field(b.p());
        TensorFunctor { m: Some(m), n: None, inner: (b, k), left_modules: true, applied: Mutex::new(HashMap::new()) }
    }

    fn apply(&self, x: &Arc<Module>) -> Arc<Applied> {
        if let Some(a) = self.applied.lock().unwrap().get(&x.id()) {
            return a.clone();
        }
        let xb = if self.left_modules {
            Bimodule::from_left(&x.view_over(&self.inner.0))
        } else {
            Bimodule::new(self.inner.0.clone(), self.inner.1.clone(), x.clone()).expect("input over the inner algebras")
        };
        let first = self.m.as_ref().map(|m| tensor_over(m, &xb));
        let y = first.as_ref().map(|t| t.result.clone()).unwrap_or(xb);
        let second = self.n.as_ref().map(|n| tensor_over(&y, n));
        let z = second.as_ref().map(|t| t.result.clone()).unwrap_or(y);
        let output = if self.left_modules { z.as_left_module() } else { z.module().clone() };
        let applied = Arc::new(Applied { first, second, output });
        self.applied.lock().unwrap().entry(x.id()).or_insert(applied).clone()
    }

    /// The tensor products used for `x`, outermost last.
    pub fn products(&self, x: &Arc<Module>) -> (Option<Arc<TensorProduct>>, Option<Arc<TensorProduct>>) {
        let a = self.apply(x);
        (a.first.clone(), a.second.clone())
    }
}

impl Functor for TensorFunctor {
    fn module(&self, x: &Arc<Module>) -> Arc<Module> {
        self.apply(x).output.clone()
    }

    fn map(&self, src: &Arc<Module>, tgt: &Arc<Module>, f: &Matrix) -> Matrix {
        let (s, t) = (self.apply(src), self.apply(tgt));
        let fld = f.field();
        let mut g = f.clone();
        if let (Some(ts), Some(tt)) = (&s.first, &t.first) {
            let id = Matrix::identity(fld, ts.m.dim());
            g = ts.map_to(tt, &id, &g);
        }
        if let (Some(ts), Some(tt)) = (&s.second, &t.second) {
            let id = Matrix::identity(fld, ts.n.dim());
            g = ts.map_to(tt, &g, &id);
        }
        g
    }
}
