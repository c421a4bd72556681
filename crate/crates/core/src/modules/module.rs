use super::projective::ProjStructure;
use super::ModuleError;
use crate::algebra::Algebra;
use crate::exactla::{Matrix, Subspace};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A finite-dimensional left module: one action matrix per basis element of
/// the algebra.
pub struct Module {
    id: u64,
    alg: Arc<Algebra>,
    dim: usize,
    act: Vec<Matrix>,
    pub(super) proj: OnceLock<Option<Arc<ProjStructure>>>,
    dual: OnceLock<Arc<Module>>,
    pub(super) bimodule_dual: OnceLock<Arc<Module>>,
    pub(super) spin: OnceLock<Arc<super::hom::Spin>>,
    radical: OnceLock<Subspace>,
    views: Mutex<Vec<Arc<Module>>>,
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Module")
            .field("id", &self.id)
            .field("algebra", &self.alg.name())
            .field("dim", &self.dim)
            .finish()
    }
}

impl Module {
    /// Validated constructor.
    pub fn new(alg: Arc<Algebra>, act: Vec<Matrix>) -> Result<Arc<Module>, ModuleError> {
        let m = Self::raw(alg, act);
        m.validate()?;
        Ok(Arc::new(m))
    }

    /// Trusted constructor for modules built by the engine itself.
    pub fn from_actions(alg: Arc<Algebra>, act: Vec<Matrix>) -> Arc<Module> {
        let m = Self::raw(alg, act);
        debug_assert!(m.dim > 24 || m.validate().is_ok(), "engine built an invalid module");
        Arc::new(m)
    }

    fn raw(alg: Arc<Algebra>, act: Vec<Matrix>) -> Module {
        assert_eq!(act.len(), alg.dim(), "one action matrix per basis element");
        let dim = act.first().map(|m| m.rows()).unwrap_or(0);
        Module {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            alg,
            dim,
            act,
            proj: OnceLock::new(),
            dual: OnceLock::new(),
            bimodule_dual: OnceLock::new(),
            spin: OnceLock::new(),
            radical: OnceLock::new(),
            views: Mutex::new(Vec::new()),
        }
    }

    pub fn zero(alg: Arc<Algebra>) -> Arc<Module> {
        let f = alg.field();
        let act = (0..alg.dim()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        let m = Arc::new(Self::raw(alg, act));
        let _ = m.proj.set(Some(Arc::new(ProjStructure::empty(&m))));
        m
    }

    /// The left regular module.
    pub fn regular(alg: &Arc<Algebra>) -> Arc<Module> {
        let act = (0..alg.dim()).map(|i| alg.left_basis(i).clone()).collect();
        let m = Arc::new(Self::raw(alg.clone(), act));
        m.set_projective_structure(ProjStructure::regular(alg));
        m
    }

    /// The trivial module of a group algebra, or any module where every
    /// basis element acts by the given scalar.
    pub fn one_dimensional(alg: &Arc<Algebra>, values: &[u32]) -> Result<Arc<Module>, ModuleError> {
        let f = alg.field();
        let act = values
            .iter()
            .map(|&v| Matrix::from_data(f, 1, 1, vec![v % f.p()]))
            .collect();
        Module::new(alg.clone(), act)
    }

    /// The one-dimensional module on which the radical acts as zero, for a
    /// local algebra whose top is the ground field.
    pub fn simple_top(alg: &Arc<Algebra>) -> Result<Arc<Module>, ModuleError> {
        let rad = alg.radical_basis();
        if rad.dim() + 1 != alg.dim() {
            return Err(ModuleError::Invalid(format!(
                "{} is not local with one-dimensional top",
                alg.name()
            )));
        }
        let q = crate::exactla::quotient(alg.dim(), rad);
        let values: Vec<u32> = (0..alg.dim())
            .map(|i| {
                let c = q.project(&alg.basis_element(i))[0];
                let u = q.project(alg.unit())[0];
                alg.field().mul(c, alg.field().inv(u))
            })
            .collect();
        Module::one_dimensional(alg, &values)
    }

    pub fn id(&self) -> u64 {
        self.id
    }
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }
    /// Action matrix of basis element `i`.
    pub fn act(&self, i: usize) -> &Matrix {
        &self.act[i]
    }
    pub fn actions(&self) -> &[Matrix] {
        &self.act
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn action(&self, a: &[u32]) -> Matrix {
        let f = self.alg.field();
        let mut out = Matrix::zeros(f, self.dim, self.dim);
        for (m, &c) in self.act.iter().zip(a) {
            if c != 0 {
                out.add_scaled(m, c);
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        let n = self.alg.dim();
        let d = self.dim;
        let f = self.alg.field();
        for (i, m) in self.act.iter().enumerate() {
            if m.rows() != d || m.cols() != d {
                return Err(ModuleError::Invalid(format!("action of basis element {i} has the wrong shape")));
            }
            if m.field() != f {
                return Err(ModuleError::Invalid("action over the wrong field".into()));
            }
        }
        if self.action(self.alg.unit()) != Matrix::identity(f, d) {
            return Err(ModuleError::Invalid("unit does not act as the identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.act[i].mul(&self.act[j]);
                let rhs = self.action(&self.alg.basis_product(i, j));
                if lhs != rhs {
                    return Err(ModuleError::Invalid(format!(
                        "action not multiplicative on basis elements {i}, {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether `f: self -> other` intertwines the actions.
    pub fn is_hom_to(&self, other: &Module, f: &Matrix) -> bool {
        f.rows() == other.dim
            && f.cols() == self.dim
            && (0..self.alg.dim()).all(|i| f.mul(&self.act[i]) == other.act[i].mul(f))
    }

    /// The same actions viewed over a structurally identical algebra (for
    /// instance `A` and `A ⊗ k`). Views are shared, so round trips return
    /// the original module object.
    pub fn view_over(self: &Arc<Self>, alg: &Arc<Algebra>) -> Arc<Module> {
        if Arc::ptr_eq(alg, &self.alg) {
            return self.clone();
        }
        assert!(alg.same_structure(&self.alg), "viewing a module over a different algebra");
        let mut views = self.views.lock().unwrap();
        if let Some(v) = views.iter().find(|v| Arc::ptr_eq(&v.alg, alg)) {
            return v.clone();
        }
        let v = Arc::new(Self::raw(alg.clone(), self.act.clone()));
        if let Some(Some(p)) = self.proj.get() {
            let _ = v.proj.set(Some(p.clone()));
        }
        v.views.lock().unwrap().push(self.clone());
        views.push(v.clone());
        v
    }

    /// The k-dual, a module over the opposite algebra via transposes. The
    /// double dual is the original module object.
    pub fn dual(self: &Arc<Self>) -> Arc<Module> {
        self.dual
            .get_or_init(|| {
                let op = self.alg.opposite();
                let act = self.act.iter().map(|m| m.transpose()).collect();
                let d = Arc::new(Self::raw(op, act));
                let _ = d.dual.set(self.clone());
                d
            })
            .clone()
    }

    pub fn direct_sum(mods: &[Arc<Module>]) -> (Arc<Module>, Vec<Matrix>, Vec<Matrix>) {
        assert!(!mods.is_empty());
        let alg = mods[0].alg.clone();
        let f = alg.field();
        let total: usize = mods.iter().map(|m| m.dim).sum();
        let mut act = Vec::with_capacity(alg.dim());
        for i in 0..alg.dim() {
            let mut a = Matrix::zeros(f, total, total);
            let mut off = 0;
            for m in mods {
                for r in 0..m.dim {
                    for c in 0..m.dim {
                        a.set(off + r, off + c, m.act[i].get(r, c));
                    }
                }
                off += m.dim;
            }
            act.push(a);
        }
        let sum = Module::from_actions(alg, act);
        let mut incl = Vec::new();
        let mut proj = Vec::new();
        let mut off = 0;
        for m in mods {
            let mut i = Matrix::zeros(f, total, m.dim);
            let mut p = Matrix::zeros(f, m.dim, total);
            for r in 0..m.dim {
                i.set(off + r, r, 1);
                p.set(r, off + r, 1);
            }
            incl.push(i);
            proj.push(p);
            off += m.dim;
        }
        (sum, incl, proj)
    }

    /// The submodule on an invariant subspace; its basis is the echelon
    /// basis of `s`, and the returned matrix is the inclusion.
    pub fn submodule(&self, s: &Subspace) -> (Arc<Module>, Matrix) {
        let f = self.alg.field();
        let basis = s.basis_vectors();
        let incl = Matrix::from_columns(f, self.dim, &basis);
        let act = self
            .act
            .iter()
            .map(|a| {
                let cols: Vec<Vec<u32>> = basis
                    .iter()
                    .map(|v| {
                        let w = a.mul_vec(v);
                        debug_assert!(s.contains(&w), "subspace is not invariant");
                        s.coords_unchecked(&w)
                    })
                    .collect();
                Matrix::from_columns(f, basis.len(), &cols)
            })
            .collect();
        (Module::from_actions(self.alg.clone(), act), incl)
    }

    /// The quotient by an invariant subspace, with the projection.
    pub fn quotient_module(&self, s: &Subspace) -> (Arc<Module>, Matrix) {
        let q = crate::exactla::quotient(self.dim, s);
        let act = self
            .act
            .iter()
            .map(|a| q.projection().mul(a).mul(q.section()))
            .collect();
        (Module::from_actions(self.alg.clone(), act), q.projection().clone())
    }

    /// `rad(A) · M`.
    pub fn radical(&self) -> &Subspace {
        self.radical.get_or_init(|| {
            let f = self.alg.field();
            let mut vecs = Vec::new();
            for j in self.alg.radical_basis().basis_vectors() {
                let m = self.action(&j);
                for c in 0..self.dim {
                    vecs.push(m.column(c));
                }
            }
            Subspace::from_vectors(f, self.dim, vecs)
        })
    }

    /// The submodule generated by the given vectors.
    pub fn span_submodule(&self, vecs: Vec<Vec<u32>>) -> Subspace {
        let f = self.alg.field();
        let gens = self.alg.generators().to_vec();
        let mut span = Subspace::from_vectors(f, self.dim, vecs);
        loop {
            let mut more = span.basis_vectors();
            for v in span.basis_vectors() {
                for &g in &gens {
                    more.push(self.act[g].mul_vec(&v));
                }
            }
            let next = Subspace::from_vectors(f, self.dim, more);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    /// Projective structure, computed on first use. `None` when the module
    /// is not projective.
    pub fn projective_structure(self: &Arc<Self>) -> Option<Arc<ProjStructure>> {
        self.proj
            .get_or_init(|| ProjStructure::detect(self).map(Arc::new))
            .clone()
    }

    pub fn is_projective(self: &Arc<Self>) -> bool {
        self.projective_structure().is_some()
    }

    pub(super) fn set_projective_structure(&self, p: ProjStructure) {
        let _ = self.proj.set(Some(Arc::new(p)));
    }
}
