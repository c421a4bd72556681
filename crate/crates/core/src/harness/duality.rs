//! Nondegeneracy, symmetry, Yoneda compatibility and shift invariance of
//! the Tate pairing over basis classes.

use super::fixtures::Fixture;
use super::par::{degrees, map_ordered};
use super::report::{dims, DegreeVerdict, DiagramReport};
use super::HarnessError;
use crate::exactla::{Fp, Matrix};
use crate::modules::{CoverMode, Module, Tower};
use crate::tate::{pairing, regular_bimodule, shift_class, yoneda, TateClass, TateError, Towers};
use std::sync::Arc;
use std::time::Instant;

fn run<F>(diagram: String, fixture: &str, window: (i32, i32), per_degree: F) -> Result<DiagramReport, HarnessError>
where
    F: Fn(i32) -> Result<DegreeVerdict, TateError> + Sync + Send,
{
    let start = Instant::now();
    let verdicts: Vec<DegreeVerdict> =
        map_ordered(&degrees(window), |&n| per_degree(n)).into_iter().collect::<Result<_, _>>()?;
    Ok(DiagramReport::new(&diagram, fixture, verdicts, start.elapsed().as_millis() as u64))
}

fn gram(
    fld: Fp,
    zs: &[TateClass],
    es: &[TateClass],
    f: impl Fn(&TateClass, &TateClass) -> Result<u32, TateError>,
) -> Result<Matrix, TateError> {
    let mut g = Matrix::zeros(fld, zs.len(), es.len());
    for (i, z) in zs.iter().enumerate() {
        for (j, e) in es.iter().enumerate() {
            g.set(i, j, f(z, e)?);
        }
    }
    Ok(g)
}

/// The pairing `\hat{Ext}^{n-1}(V,U) × \hat{Ext}^{-n}(U,V) → k` has full rank.
pub fn nondegeneracy(tu: &Arc<Tower>, tv: &Arc<Tower>, n: i32) -> Result<DegreeVerdict, TateError> {
    let zs = TateClass::basis(tv, tu.base(), n - 1);
    let es = TateClass::basis(tu, tv.base(), -n);
    let g = gram(tu.base().algebra().field(), &zs, &es, pairing)?;
    let rank = g.rank();
    let ok = zs.len() == es.len() && rank == zs.len();
    Ok(DegreeVerdict::flag(n, dims([("Ext^{n-1}(V,U)", zs.len()), ("Ext^{-n}(U,V)", es.len()), ("rank", rank)]), ok))
}

/// `⟨ζ, η⟩ = ⟨η, ζ⟩`.
pub fn symmetry(tu: &Arc<Tower>, tv: &Arc<Tower>, n: i32) -> Result<DegreeVerdict, TateError> {
    let zs = TateClass::basis(tv, tu.base(), n - 1);
    let es = TateClass::basis(tu, tv.base(), -n);
    let l = gram(tu.base().algebra().field(), &zs, &es, pairing)?;
    let r = gram(tu.base().algebra().field(), &zs, &es, |z, e| pairing(e, z))?;
    Ok(DegreeVerdict::compare(n, dims([("Ext^{n-1}(V,U)", zs.len()), ("Ext^{-n}(U,V)", es.len())]), &l, &r))
}

/// `⟨ζη, τ⟩ = ⟨ζ, ητ⟩` for `ζ: V ⇝ U` of degree `n-1`, `η: U ⇝ V` of
/// degree `±1` and `τ` closing the loop.
pub fn yoneda_compatibility(tu: &Arc<Tower>, tv: &Arc<Tower>, n: i32) -> Result<DegreeVerdict, TateError> {
    let (u, v) = (tu.base(), tv.base());
    let fld = u.algebra().field();
    let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
    let mut triples = 0;
    for b in [-1, 1] {
        let c = -1 - (n - 1) - b;
        let zs = TateClass::basis(tv, u, n - 1);
        let es = TateClass::basis(tu, v, b);
        let ts = TateClass::basis(tv, u, c);
        for z in &zs {
            for e in &es {
                let ze = yoneda(z, e)?;
                for t in &ts {
                    lhs.push(pairing(&ze, t)?);
                    rhs.push(pairing(z, &yoneda(e, t)?)?);
                    triples += 1;
                }
            }
        }
    }
    let l = Matrix::from_vec(fld, 1, lhs.len(), &lhs);
    let r = Matrix::from_vec(fld, 1, rhs.len(), &rhs);
    Ok(DegreeVerdict::compare(n, dims([("triples", triples)]), &l, &r))
}

/// `⟨Ω^s ζ, Ω^s η⟩ = ⟨ζ, η⟩` for `s = ±1`.
pub fn shift_invariance(tu: &Arc<Tower>, tv: &Arc<Tower>, n: i32) -> Result<DegreeVerdict, TateError> {
    let zs = TateClass::basis(tv, tu.base(), n - 1);
    let es = TateClass::basis(tu, tv.base(), -n);
    let base = gram(tu.base().algebra().field(), &zs, &es, pairing)?;
    let mut ok = true;
    for s in [-1, 1] {
        let shifted = gram(tu.base().algebra().field(), &zs, &es, |z, e| pairing(&shift_class(z, tu, s)?, &shift_class(e, tv, s)?))?;
        ok &= shifted == base;
    }
    Ok(DegreeVerdict::flag(n, dims([("Ext^{n-1}(V,U)", zs.len()), ("Ext^{-n}(U,V)", es.len())]), ok))
}

/// All four axioms for one pair `(U, V)`.
pub fn verify_pair(
    fixture: &str,
    label: &str,
    u: &Arc<Module>,
    v: &Arc<Module>,
    window: (i32, i32),
    towers: &Towers,
) -> Result<Vec<DiagramReport>, HarnessError> {
    let (tu, tv) = (towers.of(u), towers.of(v));
    let checks: [(&str, fn(&Arc<Tower>, &Arc<Tower>, i32) -> Result<DegreeVerdict, TateError>); 4] = [
        ("duality/nondegenerate", nondegeneracy),
        ("duality/symmetric", symmetry),
        ("duality/yoneda", yoneda_compatibility),
        ("duality/shift", shift_invariance),
    ];
    checks
        .iter()
        .map(|(d, f)| run(format!("{d}[{label}]"), fixture, window, |n| f(&tu, &tv, n)))
        .collect()
}

/// The axioms for every pair of fixture modules over `A` and over `B`, and
/// nondegeneracy of the Tate-Hochschild pairing of both algebras.
pub fn verify_duality_axioms(fx: &Fixture, window: (i32, i32), mode: CoverMode) -> Result<Vec<DiagramReport>, HarnessError> {
    let towers = Towers::new(mode);
    let mut out = Vec::new();
    for (side, mods) in [("A", &fx.modules_a), ("B", &fx.modules_b)] {
        for (un, u) in mods {
            for (vn, v) in mods {
                out.extend(verify_pair(&fx.name, &format!("{side}:{un},{vn}"), u, v, window, &towers)?);
            }
        }
    }
    for (side, alg) in [("A", &fx.a), ("B", &fx.b)] {
        let t = towers.of(&regular_bimodule(alg));
        out.push(run(format!("duality/nondegenerate[HH({side})]"), &fx.name, window, |n| nondegeneracy(&t, &t, n))?);
    }
    Ok(out)
}
