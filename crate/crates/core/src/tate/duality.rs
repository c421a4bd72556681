use super::{TateClass, TateError};
use crate::exactla::Matrix;
use crate::modules::{chain_lift, hom_space, stable_hom, Layer, Module, Tower};
use std::sync::Arc;

/// `τ_P(ι β f π)` for `β: V → upper` and `f: lower → V`.
pub fn layer_trace(layer: &Layer, beta: &Matrix, f: &Matrix) -> Result<u32, TateError> {
    let ps = layer
        .p
        .projective_structure()
        .ok_or(TateError::Module(crate::modules::ModuleError::NotProjective("left")))?;
    let left = layer.iota.mul(beta);
    let right = f.mul(&layer.pi);
    Ok(ps.trace(layer.p.algebra(), &left.mul(&right)))
}

/// The trace pairing on layer `k` of the tower of `U`: rows run over the
/// stable basis of `Hom(V, Ω^{k+1} U)`, columns over that of
/// `Hom(Ω^k U, V)`. Fails if the functional does not vanish on maps
/// factoring through projectives on either side.
pub fn layer_pairing(t: &Arc<Tower>, k: i32, v: &Arc<Module>) -> Result<Matrix, TateError> {
    let layer = t.layer(k);
    let left = stable_hom(v, &layer.upper);
    let right = stable_hom(&layer.lower, v);
    let f = v.algebra().field();
    let betas = left.basis_reps();
    let fs = right.basis_reps();
    for b in left.pr_maps() {
        for g in hom_space(&layer.lower, v).maps() {
            if layer_trace(&layer, &b, &g)? != 0 {
                return Err(TateError::NotWellDefined);
            }
        }
    }
    for g in right.pr_maps() {
        for b in &betas {
            if layer_trace(&layer, b, &g)? != 0 {
                return Err(TateError::NotWellDefined);
            }
        }
    }
    let mut m = Matrix::zeros(f, betas.len(), fs.len());
    for (i, b) in betas.iter().enumerate() {
        for (j, g) in fs.iter().enumerate() {
            m.set(i, j, layer_trace(&layer, b, g)?);
        }
    }
    Ok(m)
}

/// The Tate duality `\underline{Hom}(V, ΩU) → \underline{Hom}(U, V)^∨`: column `i` holds
/// the functional of the `i`-th stable basis map `V → ΩU`, in the dual
/// basis of `\underline{Hom}(U, V)`.
#[derive(Clone, Debug)]
pub struct DualityMap {
    pub matrix: Matrix,
}

impl DualityMap {
    pub fn apply(&self, beta_coords: &[u32]) -> Vec<u32> {
        self.matrix.mul_vec(beta_coords)
    }
}

pub fn tate_duality(t: &Arc<Tower>, v: &Arc<Module>) -> Result<DualityMap, TateError> {
    let g = layer_pairing(t, 0, v)?;
    let matrix = g.transpose();
    let rank = matrix.rank();
    if !matrix.is_square() || rank != matrix.rows() {
        return Err(TateError::DegeneratePairing { rows: matrix.rows(), cols: matrix.cols(), rank });
    }
    Ok(DualityMap { matrix })
}

/// `⟨ζ, η⟩` for `ζ ∈ \hat{Ext}^{n-1}(V, U)` and `η ∈ \hat{Ext}^{-n}(U, V)`: `ζ` is
/// shifted to `V → Ω^{1-n} U` and paired with `η` on layer `-n` of the
/// tower of `U`.
pub fn pairing(zeta: &TateClass, eta: &TateClass) -> Result<u32, TateError> {
    if zeta.degree + eta.degree != -1 {
        return Err(TateError::DegreeMismatch(format!(
            "degrees {} and {} do not sum to -1",
            zeta.degree, eta.degree
        )));
    }
    let (tv, tu) = (&zeta.source, &eta.source);
    if zeta.target.id() != tu.base().id() || eta.target.id() != tv.base().id() {
        return Err(TateError::ModuleMismatch("pairing needs ζ: V ⇝ U and η: U ⇝ V".into()));
    }
    let n = -eta.degree;
    let beta = chain_lift(&zeta.rep, tv, n - 1, tu, 0, 1 - n)?;
    layer_trace(&tu.layer(-n), &beta, &eta.rep)
}
