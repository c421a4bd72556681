//! Tate cohomology: stable maps `Ω^n U → V`, the duality map built from
//! traces over projectives, the induced pairing and Yoneda products.

mod duality;
mod yoneda;

pub use duality::{layer_pairing, layer_trace, pairing, tate_duality, DualityMap};
pub use yoneda::{shift_class, transport, yoneda};

use crate::algebra::Algebra;
use crate::modules::{stable_hom, Bimodule, CoverMode, Module, ModuleError, StableHom, Tower};
use crate::exactla::Matrix;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TateError {
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("duality matrix is singular ({rows} x {cols}, rank {rank})")]
    DegeneratePairing { rows: usize, cols: usize, rank: usize },
    #[error("trace functional does not vanish on maps factoring through projectives")]
    NotWellDefined,
    #[error("classes do not compose: {0}")]
    ModuleMismatch(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// One tower per module object, all built with the same cover mode.
pub struct Towers {
    mode: CoverMode,
    map: Mutex<HashMap<u64, Arc<Tower>>>,
}

impl Towers {
    pub fn new(mode: CoverMode) -> Self {
        Towers { mode, map: Mutex::new(HashMap::new()) }
    }

    pub fn mode(&self) -> CoverMode {
        self.mode
    }

    pub fn of(&self, m: &Arc<Module>) -> Arc<Tower> {
        self.map
            .lock()
            .unwrap()
            .entry(m.id())
            .or_insert_with(|| Tower::new(m, self.mode))
            .clone()
    }

    /// Registers an externally built tower for its base.
    pub fn insert(&self, t: Arc<Tower>) {
        self.map.lock().unwrap().insert(t.base().id(), t);
    }
}

/// A class in `\hat{Ext}^n(U, V)`, represented by a hom `Ω^n U → V` with
/// `Ω^n U` taken from a fixed tower of `U`.
#[derive(Clone, Debug)]
pub struct TateClass {
    pub source: Arc<Tower>,
    pub target: Arc<Module>,
    pub degree: i32,
    pub rep: Matrix,
}

impl TateClass {
    pub fn new(source: Arc<Tower>, target: Arc<Module>, degree: i32, rep: Matrix) -> Result<Self, TateError> {
        let om = source.omega(degree);
        if !om.is_hom_to(&target, &rep) {
            return Err(ModuleError::Invalid("representative is not a module map".into()).into());
        }
        Ok(TateClass { source, target, degree, rep })
    }

    pub fn space(&self) -> Arc<StableHom> {
        hat_ext(&self.source, &self.target, self.degree)
    }

    /// Coordinates in the stable Hom space.
    pub fn coords(&self) -> Vec<u32> {
        self.space().class_of(&self.rep)
    }

    pub fn is_zero(&self) -> bool {
        self.space().is_stably_zero(&self.rep)
    }

    pub fn same_class(&self, other: &TateClass) -> bool {
        self.degree == other.degree
            && self.rep.rows() == other.rep.rows()
            && self.rep.cols() == other.rep.cols()
            && self.space().is_stably_zero(&self.rep.sub(&other.rep))
    }

    pub fn scale(&self, c: u32) -> TateClass {
        TateClass { rep: self.rep.scale(c), ..self.clone() }
    }

    /// The class of `Id_{Ω^0 U}` in degree zero.
    pub fn identity(t: &Arc<Tower>) -> TateClass {
        let u = t.base().clone();
        let rep = Matrix::identity(u.algebra().field(), u.dim());
        TateClass { source: t.clone(), target: u, degree: 0, rep }
    }

    /// The basis classes of `\hat{Ext}^n(U, V)`.
    pub fn basis(t: &Arc<Tower>, v: &Arc<Module>, n: i32) -> Vec<TateClass> {
        hat_ext(t, v, n)
            .basis_reps()
            .into_iter()
            .map(|rep| TateClass { source: t.clone(), target: v.clone(), degree: n, rep })
            .collect()
    }
}

/// `\hat{Ext}^n(U, V)` as the stable Hom space from `Ω^n U` to `V`.
pub fn hat_ext(t: &Arc<Tower>, v: &Arc<Module>, n: i32) -> Arc<StableHom> {
    stable_hom(&t.omega(n), v)
}

/// The regular bimodule of `A` as a module over the enveloping algebra.
pub fn regular_bimodule(a: &Arc<Algebra>) -> Arc<Module> {
    Bimodule::regular(a).module().clone()
}

/// `\hat{HH}^n(A)` for `n` in `window`, from a tower of `A` over `A ⊗ A^0`.
pub fn hat_hh_dims(a: &Arc<Algebra>, window: (i32, i32), mode: CoverMode) -> BTreeMap<i32, usize> {
    let reg = regular_bimodule(a);
    let t = Tower::new(&reg, mode);
    (window.0..=window.1).map(|n| (n, hat_ext(&t, &reg, n).dim())).collect()
}

/// Dimensions of `\hat{Ext}^n(U, V)` and `\hat{Ext}^n(V, U)` over a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDimTable {
    pub forward: BTreeMap<i32, usize>,
    pub backward: BTreeMap<i32, usize>,
}

impl GradedDimTable {
    /// Pairs `(n, dim^{n-1}(V, U), dim^{-n}(U, V))` available in the window.
    pub fn symmetry_pairs(&self) -> Vec<(i32, usize, usize)> {
        self.forward
            .keys()
            .filter_map(|&m| {
                let n = -m;
                let b = *self.backward.get(&(n - 1))?;
                Some((n, b, self.forward[&m]))
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_pairs().iter().all(|&(_, a, b)| a == b)
    }
}

pub fn graded_dims(tu: &Arc<Tower>, tv: &Arc<Tower>, window: (i32, i32)) -> GradedDimTable {
    let (u, v) = (tu.base(), tv.base());
    let forward = (window.0..=window.1).map(|n| (n, hat_ext(tu, v, n).dim())).collect();
    let backward = (window.0..=window.1).map(|n| (n, hat_ext(tv, u, n).dim())).collect();
    GradedDimTable { forward, backward }
}
