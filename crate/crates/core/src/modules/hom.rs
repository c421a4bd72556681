//! Hom spaces, the projectively-factoring subspace and stable Hom.
//!
//! `Hom_Λ(U, V)` is solved on a presentation of `U`: the basis of `U` is
//! spun from module generators under algebra generators, a hom is fixed by
//! the images of the module generators, and every spin step not used to
//! define a basis vector becomes a linear constraint.

use super::Module;
use crate::exactla::{quotient, Matrix, QuotientSpace, Subspace};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug, Clone, Copy)]
enum Step {
    Generator,
    Apply { gen: usize, from: usize },
}

/// A spun basis `w_0, ..., w_{d-1}` of a module.
#[derive(Debug)]
pub struct Spin {
    steps: Vec<Step>,
    /// `block[t]`: the module generator `w_t` descends from.
    block: Vec<usize>,
    generators: Vec<usize>,
    basis: Matrix,
    basis_inv: Matrix,
}

/// Incremental forward elimination.
struct Echelon {
    rows: Vec<(usize, Vec<u32>)>,
    field: crate::exactla::Fp,
}

impl Echelon {
    fn insert(&mut self, v: &[u32]) -> bool {
        let f = self.field;
        let mut w = v.to_vec();
        for (c, r) in &self.rows {
            let a = w[*c];
            if a != 0 {
                let na = f.neg(a);
                for (x, &y) in w.iter_mut().zip(r) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(na, y));
                    }
                }
            }
        }
        match w.iter().position(|&x| x != 0) {
            None => false,
            Some(c) => {
                let inv = f.inv(w[c]);
                for x in w.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                self.rows.push((c, w));
                true
            }
        }
    }
}

impl Spin {
    fn compute(u: &Module) -> Spin {
        let f = u.algebra().field();
        let d = u.dim();
        let alg_gens = u.algebra().generators().to_vec();
        let mut ech = Echelon { rows: Vec::new(), field: f };
        let mut vecs: Vec<Vec<u32>> = Vec::with_capacity(d);
        let mut steps = Vec::with_capacity(d);
        let mut block = Vec::with_capacity(d);
        let mut generators = Vec::new();
        for c in 0..d {
            if vecs.len() == d {
                break;
            }
            let mut e = vec![0u32; d];
            e[c] = 1;
            if !ech.insert(&e) {
                continue;
            }
            let j = generators.len();
            generators.push(vecs.len());
            steps.push(Step::Generator);
            block.push(j);
            vecs.push(e);
            let mut t = vecs.len() - 1;
            while t < vecs.len() {
                for &g in &alg_gens {
                    let w = u.act(g).mul_vec(&vecs[t]);
                    if ech.insert(&w) {
                        steps.push(Step::Apply { gen: g, from: t });
                        block.push(j);
                        vecs.push(w);
                    }
                }
                t += 1;
            }
        }
        let basis = Matrix::from_columns(f, d, &vecs);
        let basis_inv = basis.inverse().expect("spun vectors form a basis");
        Spin { steps, block, generators, basis, basis_inv }
    }

    /// Spun basis vectors that are module generators.
    pub fn generator_vectors(&self) -> Vec<Vec<u32>> {
        self.generators.iter().map(|&t| self.basis.column(t)).collect()
    }
}

pub(super) fn spin_of(u: &Arc<Module>) -> Arc<Spin> {
    u.spin.get_or_init(|| Arc::new(Spin::compute(u))).clone()
}

/// Module generators of `u` (not necessarily minimal).
pub fn module_generators(u: &Arc<Module>) -> Vec<Vec<u32>> {
    spin_of(u).generator_vectors()
}

/// A basis of `Hom_Λ(U, V)`, stored as the echelon basis of the flattened
/// (row-major, `dim V × dim U`) matrices.
#[derive(Debug)]
pub struct HomSpace {
    src: Arc<Module>,
    tgt: Arc<Module>,
    basis: Subspace,
}

impl HomSpace {
    pub fn source(&self) -> &Arc<Module> {
        &self.src
    }
    pub fn target(&self) -> &Arc<Module> {
        &self.tgt
    }
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
    pub fn flat_basis(&self) -> &Subspace {
        &self.basis
    }

    fn reshape(&self, v: Vec<u32>) -> Matrix {
        Matrix::from_data(self.src.algebra().field(), self.tgt.dim(), self.src.dim(), v)
    }

    pub fn map(&self, i: usize) -> Matrix {
        self.reshape(self.basis.basis().row(i).to_vec())
    }

    pub fn maps(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.map(i)).collect()
    }

    pub fn combine(&self, coeffs: &[u32]) -> Matrix {
        self.reshape(self.basis.combine(coeffs))
    }

    /// Coordinates of a hom in the basis (read off at pivot positions).
    pub fn coords(&self, f: &Matrix) -> Vec<u32> {
        debug_assert!(self.contains(f), "not a homomorphism between these modules");
        self.basis.coords_unchecked(f.data())
    }

    pub fn contains(&self, f: &Matrix) -> bool {
        f.rows() == self.tgt.dim() && f.cols() == self.src.dim() && self.basis.contains(f.data())
    }
}

fn flat_space(u: &Module, v: &Module, maps: Vec<Matrix>) -> Subspace {
    let f = u.algebra().field();
    Subspace::from_vectors(f, u.dim() * v.dim(), maps.into_iter().map(|m| m.data().to_vec()).collect())
}

fn compute_hom(u: &Arc<Module>, v: &Arc<Module>) -> HomSpace {
    assert!(
        u.algebra().same_structure(v.algebra()),
        "Hom between modules over different algebras"
    );
    let f = u.algebra().field();
    if u.dim() == 0 || v.dim() == 0 {
        return HomSpace {
            src: u.clone(),
            tgt: v.clone(),
            basis: Subspace::zero(f, u.dim() * v.dim()),
        };
    }
    if let Some(Some(p)) = u.proj.get() {
        let maps = p.hom_basis(v);
        return HomSpace { src: u.clone(), tgt: v.clone(), basis: flat_space(u, v, maps) };
    }
    let spin = spin_of(u);
    let dv = v.dim();
    let r = spin.generators.len();
    let n = r * dv;
    // f(w_t) = psi[t] · F_{block[t]}
    let mut psi: Vec<Matrix> = Vec::with_capacity(u.dim());
    for step in &spin.steps {
        let m = match *step {
            Step::Generator => Matrix::identity(f, dv),
            Step::Apply { gen, from } => v.act(gen).mul(&psi[from]),
        };
        psi.push(m);
    }
    let mut defined = HashMap::new();
    for (t, step) in spin.steps.iter().enumerate() {
        if let Step::Apply { gen, from } = *step {
            defined.insert((from, gen), t);
        }
    }
    // running kernel, columns are solutions
    let mut kernel = Matrix::identity(f, n);
    let alg_gens = u.algebra().generators().to_vec();
    for t in 0..u.dim() {
        for &g in &alg_gens {
            if defined.contains_key(&(t, g)) || kernel.cols() == 0 {
                continue;
            }
            let c = spin.basis_inv.mul_vec(&u.act(g).mul_vec(&spin.basis.column(t)));
            let mut con = Matrix::zeros(f, dv, n);
            for (s, &cs) in c.iter().enumerate() {
                if cs != 0 {
                    add_block(&mut con, &psi[s], spin.block[s], cs);
                }
            }
            add_block(&mut con, &v.act(g).mul(&psi[t]), spin.block[t], f.neg(1));
            let ck = con.mul(&kernel);
            let ker = ck.kernel();
            if ker.dim() == kernel.cols() {
                continue;
            }
            let kb = Matrix::from_columns(f, kernel.cols(), &ker.basis_vectors());
            kernel = kernel.mul(&kb);
        }
    }
    let mut maps = Vec::with_capacity(kernel.cols());
    for col in 0..kernel.cols() {
        let x = kernel.column(col);
        let images: Vec<Vec<u32>> = (0..u.dim())
            .map(|t| {
                let j = spin.block[t];
                psi[t].mul_vec(&x[j * dv..(j + 1) * dv])
            })
            .collect();
        let fw = Matrix::from_columns(f, dv, &images);
        maps.push(fw.mul(&spin.basis_inv));
    }
    HomSpace { src: u.clone(), tgt: v.clone(), basis: flat_space(u, v, maps) }
}

fn add_block(con: &mut Matrix, m: &Matrix, block: usize, scale: u32) {
    let f = con.field();
    let dv = m.rows();
    for r in 0..dv {
        for c in 0..m.cols() {
            let x = m.get(r, c);
            if x != 0 {
                let col = block * dv + c;
                con.set(r, col, f.add(con.get(r, col), f.mul(scale, x)));
            }
        }
    }
}

struct Cache<T> {
    map: Mutex<HashMap<(u64, u64), Arc<T>>>,
}

const CACHE_LIMIT: usize = 512;

impl<T> Cache<T> {
    fn get_or(&self, key: (u64, u64), make: impl FnOnce() -> T) -> Arc<T> {
        if let Some(x) = self.map.lock().unwrap().get(&key) {
            return x.clone();
        }
        let x = Arc::new(make());
        let mut m = self.map.lock().unwrap();
        if m.len() >= CACHE_LIMIT {
            m.clear();
        }
        m.entry(key).or_insert(x).clone()
    }
}

fn hom_cache() -> &'static Cache<HomSpace> {
    static C: OnceLock<Cache<HomSpace>> = OnceLock::new();
    C.get_or_init(|| Cache { map: Mutex::new(HashMap::new()) })
}

fn stable_cache() -> &'static Cache<StableHom> {
    static C: OnceLock<Cache<StableHom>> = OnceLock::new();
    C.get_or_init(|| Cache { map: Mutex::new(HashMap::new()) })
}

/// Basis of `Hom_Λ(U, V)`.
pub fn hom_space(u: &Arc<Module>, v: &Arc<Module>) -> Arc<HomSpace> {
    hom_cache().get_or((u.id(), v.id()), || compute_hom(u, v))
}

/// The subspace of `Hom(U, V)` (in hom coordinates) spanned by the maps
/// `λ_{τ,v}: u ↦ τ(u)·v`, `τ ∈ Hom(U, Λ)`. It suffices to let `v` run over
/// module generators of `V`, since `λ_{τ,av} = λ_{τa,v}`.
pub fn pr_subspace(u: &Arc<Module>, v: &Arc<Module>) -> Subspace {
    let h = hom_space(u, v);
    let f = u.algebra().field();
    if h.dim() == 0 {
        return Subspace::zero(f, 0);
    }
    if let Some(Some(_)) = u.proj.get() {
        return Subspace::full(f, h.dim());
    }
    let reg = Module::regular(u.algebra());
    let taus = hom_space(u, &reg).maps();
    let n = u.algebra().dim();
    let mut coords = Vec::new();
    for g in module_generators(v) {
        let cols: Vec<Vec<u32>> = (0..n).map(|k| v.act(k).mul_vec(&g)).collect();
        let mv = Matrix::from_columns(f, v.dim(), &cols);
        for tau in &taus {
            coords.push(h.coords(&mv.mul(tau)));
        }
    }
    Subspace::from_vectors(f, h.dim(), coords)
}

/// The same subspace computed as the image of `Hom(U, P) → Hom(U, V)` for
/// a projective cover `P ↠ V`.
pub fn pr_subspace_via_cover(u: &Arc<Module>, v: &Arc<Module>, mode: super::CoverMode) -> Subspace {
    let h = hom_space(u, v);
    let f = u.algebra().field();
    let cover = super::cover::projective_cover(v, mode);
    let through = hom_space(u, &cover.p);
    let coords = through.maps().iter().map(|g| h.coords(&cover.pi.mul(g))).collect();
    Subspace::from_vectors(f, h.dim(), coords)
}

/// `Hom(U, V)` modulo maps factoring through projectives.
#[derive(Debug)]
pub struct StableHom {
    hom: Arc<HomSpace>,
    pr: Subspace,
    quotient: QuotientSpace,
}

impl StableHom {
    pub fn hom(&self) -> &Arc<HomSpace> {
        &self.hom
    }
    pub fn pr(&self) -> &Subspace {
        &self.pr
    }
    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
    /// Stable-class coordinates of a hom.
    pub fn class_of(&self, f: &Matrix) -> Vec<u32> {
        self.quotient.project(&self.hom.coords(f))
    }
    /// A representative hom of stable coordinates.
    pub fn rep(&self, c: &[u32]) -> Matrix {
        self.hom.combine(&self.quotient.lift(c))
    }
    pub fn basis_reps(&self) -> Vec<Matrix> {
        (0..self.dim())
            .map(|i| {
                let mut c = vec![0u32; self.dim()];
                c[i] = 1;
                self.rep(&c)
            })
            .collect()
    }
    pub fn is_stably_zero(&self, f: &Matrix) -> bool {
        self.class_of(f).iter().all(|&x| x == 0)
    }
    /// Basis of the projectively-factoring maps, as homs.
    pub fn pr_maps(&self) -> Vec<Matrix> {
        self.pr.basis_vectors().iter().map(|c| self.hom.combine(c)).collect()
    }
}

pub fn stable_hom(u: &Arc<Module>, v: &Arc<Module>) -> Arc<StableHom> {
    stable_cache().get_or((u.id(), v.id()), || {
        let hom = hom_space(u, v);
        let pr = pr_subspace(u, v);
        let quotient = quotient(hom.dim(), &pr);
        StableHom { hom, pr, quotient }
    })
}
