use super::{TateClass, TateError};
use crate::modules::{chain_lift, Tower};
use std::sync::Arc;

/// `ζη = Ω^m(η)` followed by `ζ`, for `ζ` of degree `m` from `V` and `η`
/// ending in `V`.
pub fn yoneda(zeta: &TateClass, eta: &TateClass) -> Result<TateClass, TateError> {
    let tv = &zeta.source;
    if eta.target.id() != tv.base().id() {
        return Err(TateError::ModuleMismatch("middle modules differ".into()));
    }
    let m = zeta.degree;
    let shifted = chain_lift(&eta.rep, &eta.source, eta.degree, tv, 0, m)?;
    Ok(TateClass {
        source: eta.source.clone(),
        target: zeta.target.clone(),
        degree: m + eta.degree,
        rep: zeta.rep.mul(&shifted),
    })
}

/// `Ω^s` applied to `ζ: Ω^n U → V`, giving a class of the same degree from
/// `Ω^s U` to `Ω^s V`; `tv` is the tower of `V`.
pub fn shift_class(zeta: &TateClass, tv: &Arc<Tower>, s: i32) -> Result<TateClass, TateError> {
    if zeta.target.id() != tv.base().id() {
        return Err(TateError::ModuleMismatch("tower does not belong to the target".into()));
    }
    let rep = chain_lift(&zeta.rep, &zeta.source, zeta.degree, tv, 0, s)?;
    Ok(TateClass {
        source: Tower::shifted(&zeta.source, s),
        target: tv.omega(s),
        degree: zeta.degree,
        rep,
    })
}

/// The same class represented on another tower of the same source module,
/// through the comparison map `Ω^n` (new) `→ Ω^n` (old) lifting the identity.
pub fn transport(zeta: &TateClass, to: &Arc<Tower>) -> Result<TateClass, TateError> {
    if to.base().id() != zeta.source.base().id() {
        return Err(TateError::ModuleMismatch("towers have different bases".into()));
    }
    let u = to.base();
    let id = crate::exactla::Matrix::identity(u.algebra().field(), u.dim());
    let c = chain_lift(&id, to, 0, &zeta.source, 0, zeta.degree)?;
    Ok(TateClass { source: to.clone(), target: zeta.target.clone(), degree: zeta.degree, rep: zeta.rep.mul(&c) })
}
