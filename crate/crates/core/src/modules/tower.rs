//! Complete resolutions: towers of short exact sequences
//! `0 → Ω^{k+1} → P_k → Ω^k → 0` for all integers `k`, built from
//! projective covers above degree zero and from duals of covers over the
//! opposite algebra below it.

use super::cover::{projective_cover, CoverMode};
use super::{Module, ModuleError};
use crate::exactla::Matrix;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

/// One short exact sequence `0 → upper →ι P →π lower → 0`, where `lower`
/// is `Ω^k` and `upper` is `Ω^{k+1}`.
#[derive(Debug)]
pub struct Layer {
    pub k: i32,
    pub upper: Arc<Module>,
    pub p: Arc<Module>,
    pub lower: Arc<Module>,
    pub iota: Matrix,
    pub pi: Matrix,
    retraction: OnceLock<Matrix>,
    section: OnceLock<Matrix>,
}

impl Layer {
    fn new(k: i32, upper: Arc<Module>, p: Arc<Module>, lower: Arc<Module>, iota: Matrix, pi: Matrix) -> Self {
        debug_assert!(pi.mul(&iota).is_zero());
        Layer { k, upper, p, lower, iota, pi, retraction: OnceLock::new(), section: OnceLock::new() }
    }

    /// A linear left inverse of `ι`.
    pub fn retraction(&self) -> &Matrix {
        self.retraction.get_or_init(|| {
            let f = self.iota.field();
            let id = Matrix::identity(f, self.iota.cols());
            self.iota
                .transpose()
                .solve_many(&id)
                .expect("ι is injective")
                .transpose()
        })
    }

    /// A linear right inverse of `π`.
    pub fn section(&self) -> &Matrix {
        self.section.get_or_init(|| {
            let f = self.pi.field();
            let id = Matrix::identity(f, self.pi.rows());
            self.pi.solve_many(&id).expect("π is surjective")
        })
    }
}

/// An exact functor applied layerwise to build induced towers.
pub trait Functor: Send + Sync {
    fn module(&self, x: &Arc<Module>) -> Arc<Module>;
    fn map(&self, src: &Arc<Module>, tgt: &Arc<Module>, f: &Matrix) -> Matrix;
}

enum Builder {
    Covers(CoverMode),
    Induced { source: Arc<Tower>, functor: Arc<dyn Functor> },
    Shifted { source: Arc<Tower>, s: i32 },
}

pub struct Tower {
    base: Arc<Module>,
    builder: Builder,
    layers: Mutex<BTreeMap<i32, Arc<Layer>>>,
}

impl std::fmt::Debug for Tower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Tower").field("base", &self.base).finish()
    }
}

impl Tower {
    pub fn new(base: &Arc<Module>, mode: CoverMode) -> Arc<Tower> {
        Arc::new(Tower {
            base: base.clone(),
            builder: Builder::Covers(mode),
            layers: Mutex::new(BTreeMap::new()),
        })
    }

    /// The tower `F(T)`, whose layers are images of the layers of `T`.
    pub fn induced(source: &Arc<Tower>, functor: Arc<dyn Functor>) -> Arc<Tower> {
        let base = functor.module(&source.base);
        Arc::new(Tower {
            base,
            builder: Builder::Induced { source: source.clone(), functor },
            layers: Mutex::new(BTreeMap::new()),
        })
    }

    /// The tower of `Ω^s` of the base, sharing layers with `source`.
    pub fn shifted(source: &Arc<Tower>, s: i32) -> Arc<Tower> {
        if s == 0 {
            return source.clone();
        }
        if let Builder::Shifted { source: inner, s: t } = &source.builder {
            return Tower::shifted(inner, s + t);
        }
        Arc::new(Tower {
            base: source.omega(s),
            builder: Builder::Shifted { source: source.clone(), s },
            layers: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn base(&self) -> &Arc<Module> {
        &self.base
    }

    pub fn mode(&self) -> Option<CoverMode> {
        match &self.builder {
            Builder::Covers(m) => Some(*m),
            Builder::Induced { .. } => None,
            Builder::Shifted { source, .. } => source.mode(),
        }
    }

    /// `Ω^n` of the base.
    pub fn omega(&self, n: i32) -> Arc<Module> {
        match n {
            0 => self.base.clone(),
            n if n > 0 => self.layer(n - 1).upper.clone(),
            n => self.layer(n).lower.clone(),
        }
    }

    pub fn layer(&self, k: i32) -> Arc<Layer> {
        if let Builder::Shifted { source, s } = &self.builder {
            return source.layer(k + s);
        }
        if let Some(l) = self.layers.lock().unwrap().get(&k) {
            return l.clone();
        }
        let built = self.build(k);
        self.layers.lock().unwrap().entry(k).or_insert(built).clone()
    }

    fn build(&self, k: i32) -> Arc<Layer> {
        match &self.builder {
            Builder::Covers(mode) => {
                if k >= 0 {
                    let lower = self.omega(k);
                    let cover = projective_cover(&lower, *mode);
                    let ker = cover.pi.kernel();
                    let (upper, iota) = cover.p.submodule(&ker);
                    Arc::new(Layer::new(k, upper, cover.p, lower, iota, cover.pi))
                } else {
                    let upper = self.omega(k + 1);
                    let dual = upper.dual();
                    let cover = projective_cover(&dual, *mode);
                    let ker = cover.pi.kernel();
                    let (kmod, j) = cover.p.submodule(&ker);
                    let p = cover.p.dual();
                    let lower = kmod.dual();
                    Arc::new(Layer::new(k, upper, p, lower, cover.pi.transpose(), j.transpose()))
                }
            }
            Builder::Induced { source, functor } => {
                let s = source.layer(k);
                let upper = functor.module(&s.upper);
                let p = functor.module(&s.p);
                let lower = functor.module(&s.lower);
                let iota = functor.map(&s.upper, &s.p, &s.iota);
                let pi = functor.map(&s.p, &s.lower, &s.pi);
                Arc::new(Layer::new(k, upper, p, lower, iota, pi))
            }
            Builder::Shifted { .. } => unreachable!("shifted towers delegate"),
        }
    }
}

/// Some `g: P → P'` with `onto · g = h`, for `P` projective, `h: P → Y` and
/// `onto: P' ↠ Y`.
pub fn lift_through(p: &Arc<Module>, h: &Matrix, onto: &Matrix, target: &Arc<Module>) -> Result<Matrix, ModuleError> {
    let ps = p
        .projective_structure()
        .ok_or_else(|| ModuleError::LiftFailed("source of a lift is not projective".into()))?;
    ps.lift_through(h, onto, target)
        .ok_or_else(|| ModuleError::LiftFailed("map does not factor through the surjection".into()))
}

/// Some `g: P → P'` with `g · ι = h`, for `ι: X ↪ P` injective, `h: X → P'`
/// and `P'` injective (projective, the algebra being symmetric).
pub fn extend_through(p: &Arc<Module>, iota: &Matrix, h: &Matrix, target: &Arc<Module>) -> Result<Matrix, ModuleError> {
    let g_t = lift_through(&target.dual(), &h.transpose(), &iota.transpose(), &p.dual())?;
    Ok(g_t.transpose())
}

/// Moves `f: lower(x) → lower(y)` to `upper(x) → upper(y)`.
pub fn step_up(f: &Matrix, x: &Layer, y: &Layer) -> Result<Matrix, ModuleError> {
    let g = lift_through(&x.p, &f.mul(&x.pi), &y.pi, &y.p)?;
    Ok(y.retraction().mul(&g.mul(&x.iota)))
}

/// Moves `f: upper(x) → upper(y)` to `lower(x) → lower(y)`.
pub fn step_down(f: &Matrix, x: &Layer, y: &Layer) -> Result<Matrix, ModuleError> {
    let g = extend_through(&x.p, &x.iota, &y.iota.mul(f), &y.p)?;
    Ok(y.pi.mul(&g).mul(x.section()))
}

/// Shifts `f: Ω^a X → Ω^b Y` to `Ω^{a+s} X → Ω^{b+s} Y` through the layers of
/// the two towers.
pub fn chain_lift(f: &Matrix, tx: &Tower, a: i32, ty: &Tower, b: i32, s: i32) -> Result<Matrix, ModuleError> {
    let mut g = f.clone();
    if s >= 0 {
        for i in 0..s {
            g = step_up(&g, &tx.layer(a + i), &ty.layer(b + i))?;
        }
    } else {
        for i in 0..(-s) {
            g = step_down(&g, &tx.layer(a - i - 1), &ty.layer(b - i - 1))?;
        }
    }
    Ok(g)
}
