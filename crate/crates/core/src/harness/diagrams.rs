//! Structure-map identities of the adjunction pack, the special
//! adjunctions, mate traces on projectives and the stable mate square.

use super::fixtures::Fixture;
use super::par::{degrees, map_ordered};
use super::report::{dims, DegreeVerdict, DiagramReport};
use super::theorems::mate_square;
use super::HarnessError;
use crate::adjunction::{mate_traces_agree, special_adjunctions, split_bases, trace_matches_evaluation, AdjunctionPack, ExtTransfer};
use crate::modules::{CoverMode, Module};
use crate::tate::Towers;
use std::sync::Arc;
use std::time::Instant;

fn single(diagram: String, fixture: &str, corners: std::collections::BTreeMap<String, usize>, check: impl FnOnce() -> bool) -> DiagramReport {
    let start = Instant::now();
    let ok = check();
    DiagramReport::new(&diagram, fixture, vec![DegreeVerdict::flag(0, corners, ok)], start.elapsed().as_millis() as u64)
}

/// The pack of `M` rebuilt from dual bases split along `x ∈ A`, `y ∈ B`
/// gives the same units and counits.
pub fn dual_basis_independent(pack: &AdjunctionPack) -> Result<bool, HarnessError> {
    let m = &pack.m;
    let (a, b) = (m.left(), m.right());
    let x: Vec<u32> = (0..a.dim()).map(|i| (i as u32 * 7 + 1) % a.p()).collect();
    let y: Vec<u32> = (0..b.dim()).map(|i| (i as u32 + 1) % b.p()).collect();
    let (l, r) = split_bases(m, &pack.left_basis, &pack.right_basis, &x, &y);
    let other = AdjunctionPack::build_with(m, l, r)?;
    Ok(other.eps_m == pack.eps_m && other.eps_mv == pack.eps_mv && other.eta_m == pack.eta_m && other.eta_mv == pack.eta_mv)
}

pub fn verify_adjunction_diagrams(fx: &Fixture, window: (i32, i32), mode: CoverMode) -> Result<Vec<DiagramReport>, HarnessError> {
    let name = &fx.name;
    let pack = AdjunctionPack::build(&fx.m)?;
    let checks = pack.checks();
    let corners = dims([("M", pack.m.dim()), ("M^v(x)M", pack.mv_m.dim()), ("M(x)M^v", pack.m_mv.dim())]);
    let mut out = vec![
        single("adjunction/structure-maps-are-homs".into(), name, corners.clone(), || checks.homs.iter().all(|&h| h)),
        single("adjunction/triangles".into(), name, corners.clone(), || checks.triangles.iter().all(|&t| t)),
        single("adjunction/unit-dual".into(), name, corners.clone(), || checks.unitdual),
        single("adjunction/counit-dual".into(), name, corners.clone(), || checks.counitdual),
    ];
    let indep = dual_basis_independent(&pack)?;
    out.push(single("adjunction/dual-basis-independence".into(), name, corners, || indep));

    for (un, u) in fx.modules_a.iter().chain(&fx.modules_b) {
        out.push(single(format!("adjunction/special-maps[{un}:{}]", u.algebra().name()), name, dims([("U", u.dim())]), || {
            let s = special_adjunctions(u);
            s.tau.is_invertible() && s.beta.is_invertible() && trace_matches_evaluation(u)
        }));
    }

    let towers = Towers::new(mode);
    let mut ps: Vec<(String, Arc<Module>)> = vec![("A".into(), Module::regular(&fx.a))];
    ps.extend(fx.modules_a.iter().map(|(n, u)| (format!("P0({n})"), towers.of(u).layer(0).p.clone())));
    let mut qs: Vec<(String, Arc<Module>)> = vec![("B".into(), Module::regular(&fx.b))];
    qs.extend(fx.modules_b.iter().map(|(n, v)| (format!("P0({n})"), towers.of(v).layer(0).p.clone())));
    for (pn, p) in &ps {
        for (qn, q) in &qs {
            out.push(single(format!("adjunction/mate-traces[{pn},{qn}]"), name, dims([("P", p.dim()), ("Q", q.dim())]), || {
                mate_traces_agree(&pack, p, q)
            }));
        }
    }

    let et = ExtTransfer::new(&pack);
    for (vn, v) in &fx.modules_b {
        for (un, u) in &fx.modules_a {
            let (tv, tu) = (towers.of(v), towers.of(u));
            let start = Instant::now();
            let verdicts: Vec<DegreeVerdict> =
                map_ordered(&degrees(window), |&n| mate_square(&et, &tv, &tu, n)).into_iter().collect::<Result<_, _>>()?;
            out.push(DiagramReport::new(
                &format!("adjunction/stable-mates[{vn},{un}]"),
                name,
                verdicts,
                start.elapsed().as_millis() as u64,
            ));
        }
    }
    Ok(out)
}
