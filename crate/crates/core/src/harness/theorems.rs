//! The two transfer/duality diagrams, each with its intermediate squares.

use super::fixtures::Fixture;
use super::par::{degrees, map_ordered};
use super::report::{dims, DegreeVerdict, DiagramReport};
use super::HarnessError;
use crate::adjunction::{left_mate, right_mate, AdjunctionPack, ExtTransfer, HhTransfer};
use crate::exactla::{Fp, Matrix};
use crate::modules::{chain_lift, Bimodule, CoverMode, Module, Tower};
use crate::tate::{pairing, TateClass, TateError, Towers};
use std::sync::Arc;
use std::time::Instant;

type Step<'a> = dyn Fn(&TateClass) -> Result<TateClass, TateError> + Sync + 'a;

/// `(⟨g(x_i), y_j⟩, ⟨x_i, f(y_j)⟩)` as two matrices with rows over `ys`.
pub fn adjoint_square(fld: Fp, xs: &[TateClass], ys: &[TateClass], g: &Step, f: &Step) -> Result<(Matrix, Matrix), TateError> {
    let gx: Vec<TateClass> = xs.iter().map(g).collect::<Result<_, _>>()?;
    let fy: Vec<TateClass> = ys.iter().map(f).collect::<Result<_, _>>()?;
    let mut lhs = Matrix::zeros(fld, ys.len(), xs.len());
    let mut rhs = Matrix::zeros(fld, ys.len(), xs.len());
    for (j, y) in ys.iter().enumerate() {
        for (i, x) in xs.iter().enumerate() {
            lhs.set(j, i, pairing(&gx[i], y)?);
            rhs.set(j, i, pairing(x, &fy[j])?);
        }
    }
    Ok((lhs, rhs))
}

fn run<F>(diagram: &str, fx: &Fixture, window: (i32, i32), per_degree: F) -> Result<DiagramReport, HarnessError>
where
    F: Fn(i32) -> Result<DegreeVerdict, HarnessError> + Sync + Send,
{
    let start = Instant::now();
    let ds = degrees(window);
    let verdicts: Vec<DegreeVerdict> = map_ordered(&ds, |&n| per_degree(n)).into_iter().collect::<Result<_, _>>()?;
    Ok(DiagramReport::new(diagram, &fx.name, verdicts, start.elapsed().as_millis() as u64))
}

fn with_target(t: &Arc<Tower>, target: &Arc<Module>, degree: i32, rep: Matrix) -> Result<TateClass, TateError> {
    TateClass::new(t.clone(), target.clone(), degree, rep)
}

/// `⟨tr_{M^∨} ζ, η⟩_B = ⟨ζ, tr_M η⟩_A` for `ζ ∈ \hat{HH}^{n-1}(A)` and
/// `η ∈ \hat{HH}^{-n}(B)`, then the four steps of the transfer separately.
pub fn verify_theorem1(fx: &Fixture, window: (i32, i32), mode: CoverMode) -> Result<Vec<DiagramReport>, HarnessError> {
    let pack = AdjunctionPack::build(&fx.m)?;
    let towers = Towers::new(mode);
    let tr = HhTransfer::new(&pack, &towers);
    let trd = HhTransfer::new(&pack.dual(), &towers);
    let dual = pack.dual();
    let (ta, tb) = (tr.tp.clone(), tr.tq.clone());
    let (ra, rb) = (ta.base().clone(), tb.base().clone());
    let (p, q) = (fx.a.clone(), fx.b.clone());
    let fld = p.field();
    let mut out = Vec::new();

    out.push(run("thm1", fx, window, |n| {
        let zs = TateClass::basis(&ta, &ra, n - 1);
        let es = TateClass::basis(&tb, &rb, -n);
        let (l, r) = adjoint_square(fld, &zs, &es, &|z| trd.apply(z), &|e| tr.apply(e))?;
        let d = dims([
            ("HH^{n-1}(A)", zs.len()),
            ("HH^{-n}(B)", es.len()),
            ("HH^{-n}(A)", hh_dim(&ta, -n)),
            ("HH^{n-1}(B)", hh_dim(&tb, n - 1)),
        ]);
        Ok(DegreeVerdict::compare(n, d, &l, &r))
    })?);

    let s = tr.ts.base().clone();
    out.push(run("thm1/precompose-counit", fx, window, |n| {
        let xs = TateClass::basis(&tb, &s, n - 1);
        let ys = TateClass::basis(&tb, &rb, -n);
        let g = |x: &TateClass| with_target(&tb, &rb, x.degree, tr.e1.mul(&x.rep));
        let f = |y: &TateClass| {
            let c = chain_lift(&tr.e1, &tr.ts, 0, &tb, 0, y.degree)?;
            with_target(&tr.ts, &rb, y.degree, y.rep.mul(&c))
        };
        let (l, r) = adjoint_square(fld, &xs, &ys, &g, &f)?;
        Ok(DegreeVerdict::compare(n, dims([("x", xs.len()), ("y", ys.len())]), &l, &r))
    })?);

    let px = tr.tx.base().clone();
    let xq = tr.tl.base().clone();
    let xq_b = Bimodule::new(p.clone(), q.clone(), xq.clone())?;
    let px_b = Bimodule::new(p.clone(), q.clone(), px.clone())?;
    out.push(run("thm1/left-mate", fx, window, |n| {
        let xs = TateClass::basis(&tr.tl, &px, n - 1);
        let ys = TateClass::basis(&tr.ts, &rb, -n);
        let g = |x: &TateClass| {
            let v = Bimodule::new(q.clone(), q.clone(), tb.omega(x.degree))?;
            with_target(&tb, &s, x.degree, left_mate(&pack, &v, &px_b, &x.rep))
        };
        let f = |y: &TateClass| {
            let v = Bimodule::new(p.clone(), q.clone(), tr.tx.omega(y.degree))?;
            with_target(&tr.tx, &xq, y.degree, left_mate(&dual, &v, &Bimodule::regular(&q), &y.rep))
        };
        let (l, r) = adjoint_square(fld, &xs, &ys, &g, &f)?;
        Ok(DegreeVerdict::compare(n, dims([("x", xs.len()), ("y", ys.len())]), &l, &r))
    })?);

    let h = tr.th.base().clone();
    out.push(run("thm1/right-mate", fx, window, |n| {
        let xs = TateClass::basis(&tr.th, &ra, n - 1);
        let ys = TateClass::basis(&tr.tx, &xq, -n);
        let g = |x: &TateClass| {
            let w = Bimodule::new(p.clone(), q.clone(), tr.tl.omega(x.degree))?;
            with_target(&tr.tl, &px, x.degree, right_mate(&dual, &w, &Bimodule::regular(&p), &x.rep))
        };
        let f = |y: &TateClass| {
            let w = Bimodule::new(p.clone(), p.clone(), ta.omega(y.degree))?;
            with_target(&ta, &h, y.degree, right_mate(&pack, &w, &xq_b, &y.rep))
        };
        let (l, r) = adjoint_square(fld, &xs, &ys, &g, &f)?;
        Ok(DegreeVerdict::compare(n, dims([("x", xs.len()), ("y", ys.len())]), &l, &r))
    })?);

    out.push(run("thm1/postcompose-counit", fx, window, |n| {
        let xs = TateClass::basis(&ta, &ra, n - 1);
        let ys = TateClass::basis(&ta, &h, -n);
        let g = |x: &TateClass| {
            let c = chain_lift(&tr.e4, &tr.th, 0, &ta, 0, x.degree)?;
            with_target(&tr.th, &ra, x.degree, x.rep.mul(&c))
        };
        let f = |y: &TateClass| with_target(&ta, &ra, y.degree, tr.e4.mul(&y.rep));
        let (l, r) = adjoint_square(fld, &xs, &ys, &g, &f)?;
        Ok(DegreeVerdict::compare(n, dims([("x", xs.len()), ("y", ys.len())]), &l, &r))
    })?);
    Ok(out)
}

/// For `B`-modules `V`, `W`: `⟨tr(η), τ⟩_B = ⟨η, M ⊗ τ⟩_A` and
/// `⟨M ⊗ ζ, θ⟩_A = ⟨ζ, tr(θ)⟩_B`, the mate square with `U = M ⊗ W`, and
/// naturality of the counit.
pub fn verify_theorem2(
    fx: &Fixture,
    v: &Arc<Module>,
    w: &Arc<Module>,
    label: &str,
    window: (i32, i32),
    mode: CoverMode,
) -> Result<Vec<DiagramReport>, HarnessError> {
    let pack = AdjunctionPack::build(&fx.m)?;
    let et = ExtTransfer::new(&pack);
    let towers = Towers::new(mode);
    let (tv, tw) = (towers.of(v), towers.of(w));
    let (ftv, ftw) = (et.induced_tower(&tv), et.induced_tower(&tw));
    let (fv, fw) = (ftv.base().clone(), ftw.base().clone());
    let fld = fx.a.field();
    let name = |d: &str| format!("{d}[{label}]");
    let mut out = Vec::new();

    let fmap = |t: &Arc<Tower>, ft: &Arc<Tower>, target: &Arc<Module>, c: &TateClass| {
        let ftarget = et.induce(target);
        with_target(ft, &ftarget, c.degree, et.induce_map(&t.omega(c.degree), target, &c.rep))
    };
    let dv = |n: i32, xs: &[TateClass], ys: &[TateClass], l: &Matrix, r: &Matrix| {
        DegreeVerdict::compare(n, dims([("x", xs.len()), ("y", ys.len())]), l, r)
    };

    out.push(run(&name("thm2/transfer-then-pair"), fx, window, |n| {
        let xs = TateClass::basis(&ftv, &fw, n - 1);
        let ys = TateClass::basis(&tw, v, -n);
        let (l, r) = adjoint_square(fld, &xs, &ys, &|x| et.apply(x, &tv, w), &|y| fmap(&tw, &ftw, v, y))?;
        Ok(dv(n, &xs, &ys, &l, &r))
    })?);

    out.push(run(&name("thm2/induce-then-pair"), fx, window, |n| {
        let xs = TateClass::basis(&tv, w, n - 1);
        let ys = TateClass::basis(&ftw, &fv, -n);
        let (l, r) = adjoint_square(fld, &xs, &ys, &|x| fmap(&tv, &ftv, w, x), &|y| et.apply(y, &tw, v))?;
        Ok(dv(n, &xs, &ys, &l, &r))
    })?);

    let tu = towers.of(&fw);
    out.push(run(&name("thm2/mates"), fx, window, |n| mate_square(&et, &tv, &tu, n))?);

    let gftw = et.restricted_tower(&ftw);
    let gfw = gftw.base().clone();
    let c = et.counit(w);
    out.push(run(&name("thm2/counit-naturality"), fx, window, |n| {
        let xs = TateClass::basis(&tv, &gfw, n - 1);
        let ys = TateClass::basis(&tw, v, -n);
        let g = |x: &TateClass| with_target(&tv, w, x.degree, c.mul(&x.rep));
        let f = |y: &TateClass| {
            let lift = chain_lift(&c, &gftw, 0, &tw, 0, y.degree)?;
            with_target(&gftw, v, y.degree, y.rep.mul(&lift))
        };
        let (l, r) = adjoint_square(fld, &xs, &ys, &g, &f)?;
        Ok(dv(n, &xs, &ys, &l, &r))
    })?);
    Ok(out)
}

/// `⟨L(x), y⟩ = ⟨x, L'(y)⟩` for `x ∈ \hat{Ext}^{n-1}(M ⊗ V, U)` and
/// `y ∈ \hat{Ext}^{-n}(M^∨ ⊗ U, V)`, where `L`, `L'` are the mates of the two
/// adjunctions; `tv`, `tu` are towers of the `B`-module `V` and the
/// `A`-module `U`.
pub fn mate_square(et: &ExtTransfer, tv: &Arc<Tower>, tu: &Arc<Tower>, n: i32) -> Result<DegreeVerdict, HarnessError> {
    let (v, u) = (tv.base(), tu.base());
    let dual = et.pack.dual();
    let ftv = et.induced_tower(tv);
    let gtu = et.restricted_tower(tu);
    let (fv, gu) = (ftv.base().clone(), gtu.base().clone());
    let xs = TateClass::basis(&ftv, u, n - 1);
    let ys = TateClass::basis(&gtu, v, -n);
    let g = |x: &TateClass| {
        let om = Bimodule::from_left(&tv.omega(x.degree));
        with_target(tv, &gu, x.degree, left_mate(&et.pack, &om, &Bimodule::from_left(u), &x.rep))
    };
    let f = |y: &TateClass| {
        let om = Bimodule::from_left(&tu.omega(y.degree));
        with_target(tu, &fv, y.degree, left_mate(&dual, &om, &Bimodule::from_left(v), &y.rep))
    };
    let (l, r) = adjoint_square(u.algebra().field(), &xs, &ys, &g, &f)?;
    Ok(DegreeVerdict::compare(n, dims([("x", xs.len()), ("y", ys.len())]), &l, &r))
}

/// The Ext-transfer squares for every pair of the fixture's `B`-modules.
pub fn verify_theorem2_all(fx: &Fixture, window: (i32, i32), mode: CoverMode) -> Result<Vec<DiagramReport>, HarnessError> {
    let mut out = Vec::new();
    for (vn, v) in &fx.modules_b {
        for (wn, w) in &fx.modules_b {
            out.extend(verify_theorem2(fx, v, w, &format!("{vn},{wn}"), window, mode)?);
        }
    }
    Ok(out)
}

pub(super) fn hh_dim(t: &Arc<Tower>, n: i32) -> usize {
    crate::tate::hat_ext(t, t.base(), n).dim()
}
