//! Transfer maps on Tate–Hochschild cohomology and on Tate Ext.

use super::mates::{counit_at, left_mate, right_mate, unit_at};
use super::pack::AdjunctionPack;
use super::plumbing::{identity, left_unitor, right_unitor, tensor_maps};
use crate::exactla::Matrix;
use crate::modules::{chain_lift, hom_space, tensor_over, Bimodule, Functor, Module, TensorFunctor, Tower};
use crate::tate::{hat_ext, transport, TateClass, TateError, Towers};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// `tr_X: \hat{HH}^*(Q) → \hat{HH}^*(P)` for a `P`-`Q`-bimodule `X`, with the
/// towers it runs on.
pub struct HhTransfer {
    pub pack: AdjunctionPack,
    /// Towers of the regular bimodules.
    pub tp: Arc<Tower>,
    pub tq: Arc<Tower>,
    /// `T_P ⊗_P X`
    pub tx: Arc<Tower>,
    /// `X^∨ ⊗_P T_P ⊗_P X`
    pub ts: Arc<Tower>,
    /// `X ⊗_Q T_Q`
    pub tl: Arc<Tower>,
    /// `X ⊗_Q T_Q ⊗_Q X^∨`
    pub th: Arc<Tower>,
    h: Arc<TensorFunctor>,
    /// `X^∨ ⊗_P (P ⊗_P X) → Q`
    pub e1: Matrix,
    /// `(X ⊗_Q Q) ⊗_Q X^∨ → P`
    pub e4: Matrix,
    /// `P → (X ⊗_Q Q) ⊗_Q X^∨`
    eps_h: Matrix,
}

impl HhTransfer {
    pub fn new(pack: &AdjunctionPack, towers: &Towers) -> Self {
        let (x, xv) = (&pack.m, &pack.mv);
        let (p, q) = (x.left().clone(), x.right().clone());
        let (rp, rq) = (Bimodule::regular(&p), Bimodule::regular(&q));
        let tp = towers.of(rp.module());
        let tq = towers.of(rq.module());
        let right_x = TensorFunctor::on_bimodules(None, Some(x.clone()), p.clone(), p.clone());
        let tx = Tower::induced(&tp, Arc::new(right_x));
        let left_xv = TensorFunctor::on_bimodules(Some(xv.clone()), None, p.clone(), q.clone());
        let ts = Tower::induced(&tx, Arc::new(left_xv));
        let h = Arc::new(TensorFunctor::on_bimodules(Some(x.clone()), Some(xv.clone()), q.clone(), q.clone()));
        let th = Tower::induced(&tq, h.clone());
        let left_x = TensorFunctor::on_bimodules(Some(x.clone()), None, q.clone(), q.clone());
        let tl = Tower::induced(&tq, Arc::new(left_x));

        let lam = left_unitor(x);
        let px = lam.tp.result.clone();
        let e1 = pack.eta_mv.mul(&tensor_maps((xv, &px), (xv, x), &identity(xv), &lam.to));
        let rho = right_unitor(x);
        let xq = rho.tp.result.clone();
        let e4 = pack.eta_m.mul(&tensor_maps((&xq, xv), (x, xv), &rho.to, &identity(xv)));
        let eps_h = tensor_maps((x, xv), (&xq, xv), &rho.from, &identity(xv)).mul(&pack.eps_mv);
        HhTransfer { pack: pack.clone(), tp, tq, tx, ts, tl, th, h, e1, e4, eps_h }
    }

    fn on_tq(&self, zeta: &TateClass) -> Result<TateClass, TateError> {
        if zeta.target.id() != self.tq.base().id() {
            return Err(TateError::ModuleMismatch("class is not a Tate–Hochschild class of Q".into()));
        }
        if Arc::ptr_eq(&zeta.source, &self.tq) {
            Ok(zeta.clone())
        } else {
            transport(zeta, &self.tq)
        }
    }

    /// Through the two adjunction isomorphisms: precompose with `η_{X^∨}`,
    /// take the left mate, then the right mate, then postcompose with `η_X`.
    pub fn apply(&self, zeta: &TateClass) -> Result<TateClass, TateError> {
        let zeta = self.on_tq(zeta)?;
        let m = zeta.degree;
        let (p, q) = (self.pack.m.left().clone(), self.pack.m.right().clone());
        let y1 = chain_lift(&self.e1, &self.ts, 0, &self.tq, 0, m)?;
        let z1 = zeta.rep.mul(&y1);
        let v = Bimodule::new(p.clone(), q.clone(), self.tx.omega(m))?;
        let rq = Bimodule::regular(&q);
        let z2 = left_mate(&self.pack.dual(), &v, &rq, &z1);
        let w = Bimodule::new(p.clone(), p.clone(), self.tp.omega(m))?;
        let xq = tensor_over(&self.pack.m, &rq).result.clone();
        let z3 = right_mate(&self.pack, &w, &xq, &z2);
        TateClass::new(self.tp.clone(), self.tp.base().clone(), m, self.e4.mul(&z3))
    }

    /// `Σ^n(η_X) ∘ (Id_X ⊗ ζ ⊗ Id_{X^∨}) ∘ ε_{X^∨}` directly on the tower
    /// `X ⊗_Q T_Q ⊗_Q X^∨`.
    pub fn direct(&self, zeta: &TateClass) -> Result<TateClass, TateError> {
        let zeta = self.on_tq(zeta)?;
        let m = zeta.degree;
        let c = chain_lift(&self.eps_h, &self.tp, 0, &self.th, 0, m)?;
        let hz = self.h.map(&self.tq.omega(m), self.tq.base(), &zeta.rep);
        TateClass::new(self.tp.clone(), self.tp.base().clone(), m, self.e4.mul(&hz).mul(&c))
    }

    /// The matrix of `tr_X` in degree `n` between stable bases.
    pub fn matrix(&self, n: i32) -> Result<Matrix, TateError> {
        let src = TateClass::basis(&self.tq, self.tq.base(), n);
        let tgt = hat_ext(&self.tp, self.tp.base(), n);
        let f = self.pack.m.left().field();
        let mut cols = Vec::with_capacity(src.len());
        for z in &src {
            cols.push(tgt.class_of(&self.apply(z)?.rep));
        }
        Ok(Matrix::from_columns(f, tgt.dim(), &cols))
    }
}

/// `tr_{M^∨}(V, W): \hat{Ext}^n_A(M ⊗ V, M ⊗ W) → \hat{Ext}^n_B(V, W)` for the
/// pack of an `A`-`B`-bimodule `M`.
pub struct ExtTransfer {
    pub pack: AdjunctionPack,
    f: Arc<TensorFunctor>,
    g: Arc<TensorFunctor>,
    induced: Mutex<HashMap<(usize, bool), Arc<Tower>>>,
}

impl ExtTransfer {
    pub fn new(pack: &AdjunctionPack) -> Self {
        ExtTransfer {
            pack: pack.clone(),
            f: Arc::new(TensorFunctor::on_left_modules(pack.m.clone())),
            g: Arc::new(TensorFunctor::on_left_modules(pack.mv.clone())),
            induced: Mutex::new(HashMap::new()),
        }
    }

    /// `M ⊗_B V`
    pub fn induce(&self, v: &Arc<Module>) -> Arc<Module> {
        self.f.module(v)
    }

    /// `M ⊗_B f`
    pub fn induce_map(&self, src: &Arc<Module>, tgt: &Arc<Module>, f: &Matrix) -> Matrix {
        self.f.map(src, tgt, f)
    }

    /// `M^∨ ⊗_A U`
    pub fn restrict(&self, u: &Arc<Module>) -> Arc<Module> {
        self.g.module(u)
    }

    pub fn restrict_map(&self, src: &Arc<Module>, tgt: &Arc<Module>, f: &Matrix) -> Matrix {
        self.g.map(src, tgt, f)
    }

    /// The tower `M ⊗_B T` of `M ⊗_B V`, one per tower of `V`.
    pub fn induced_tower(&self, t: &Arc<Tower>) -> Arc<Tower> {
        let key = (Arc::as_ptr(t) as usize, true);
        self.induced
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Tower::induced(t, self.f.clone()))
            .clone()
    }

    /// The tower `M^∨ ⊗_A T` of `M^∨ ⊗_A U`.
    pub fn restricted_tower(&self, t: &Arc<Tower>) -> Arc<Tower> {
        let key = (Arc::as_ptr(t) as usize, false);
        self.induced
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Tower::induced(t, self.g.clone()))
            .clone()
    }

    /// `Y → M^∨ ⊗_A (M ⊗_B Y)`
    pub fn unit(&self, y: &Arc<Module>) -> Matrix {
        unit_at(&self.pack, &Bimodule::from_left(y))
    }

    /// `M^∨ ⊗_A (M ⊗_B Y) → Y`
    pub fn counit(&self, y: &Arc<Module>) -> Matrix {
        counit_at(&self.pack, &Bimodule::from_left(y))
    }

    fn on_induced(&self, eta: &TateClass, tv: &Arc<Tower>) -> Result<TateClass, TateError> {
        let ft = self.induced_tower(tv);
        if ft.base().id() != eta.source.base().id() {
            return Err(TateError::ModuleMismatch("class does not start at M ⊗ V".into()));
        }
        if Arc::ptr_eq(&eta.source, &ft) {
            Ok(eta.clone())
        } else {
            transport(eta, &ft)
        }
    }

    /// `c_W ∘ (Id_{M^∨} ⊗ η) ∘ u_{Ω^n V}` for `η: M ⊗ Ω^n V → M ⊗ W`.
    pub fn apply(&self, eta: &TateClass, tv: &Arc<Tower>, w: &Arc<Module>) -> Result<TateClass, TateError> {
        let eta = self.on_induced(eta, tv)?;
        let n = eta.degree;
        let ov = tv.omega(n);
        if self.induce(w).id() != eta.target.id() {
            return Err(TateError::ModuleMismatch("class does not end at M ⊗ W".into()));
        }
        let fo = self.induce(&ov);
        let g_eta = self.restrict_map(&fo, &eta.target, &eta.rep);
        let rep = self.counit(w).mul(&g_eta).mul(&self.unit(&ov));
        TateClass::new(tv.clone(), w.clone(), n, rep)
    }

    /// The same transfer through the left mate: `c_W ∘ L(η)`.
    pub fn via_left_mate(&self, eta: &TateClass, tv: &Arc<Tower>, w: &Arc<Module>) -> Result<TateClass, TateError> {
        let eta = self.on_induced(eta, tv)?;
        let n = eta.degree;
        let ov = tv.omega(n);
        let l = left_mate(&self.pack, &Bimodule::from_left(&ov), &Bimodule::from_left(&eta.target), &eta.rep);
        TateClass::new(tv.clone(), w.clone(), n, self.counit(w).mul(&l))
    }

    /// The same transfer through the mirror adjunction: `η` is the mate of
    /// a unique `ψ: M^∨ ⊗ (M ⊗ Ω^n V) → W`, and the transfer is `ψ ∘ u`.
    pub fn via_mirror_mate(&self, eta: &TateClass, tv: &Arc<Tower>, w: &Arc<Module>) -> Result<TateClass, TateError> {
        let eta = self.on_induced(eta, tv)?;
        let n = eta.degree;
        let ov = tv.omega(n);
        let fo = self.induce(&ov);
        let gfo = self.restrict(&fo);
        let dual = self.pack.dual();
        let (yb, wb) = (Bimodule::from_left(&fo), Bimodule::from_left(w));
        let homs = hom_space(&gfo, w);
        let images: Vec<Matrix> = homs.maps().iter().map(|psi| left_mate(&dual, &yb, &wb, psi)).collect();
        let fld = w.algebra().field();
        let cols: Vec<Vec<u32>> = images.iter().map(|m| m.to_vec()).collect();
        let big = Matrix::from_columns(fld, eta.rep.rows() * eta.rep.cols(), &cols);
        let coeffs = big
            .solve(&eta.rep.to_vec())
            .ok_or_else(|| TateError::ModuleMismatch("class is not a mate".into()))?;
        let psi = homs.combine(&coeffs);
        TateClass::new(tv.clone(), w.clone(), n, psi.mul(&self.unit(&ov)))
    }
}
