//! Mates: the bijections of the two adjunctions, on explicit maps.

use super::pack::AdjunctionPack;
use super::plumbing::{associator, identity, left_unitor, right_unitor, tensor_maps};
use crate::exactla::Matrix;
use crate::modules::{hom_space, tensor_over, Bimodule, Module};
use std::sync::Arc;

/// `Hom(X ⊗_Q v, u) → Hom(v, X^∨ ⊗_P u)` for the pack of a `P`-`Q`-bimodule
/// `X`: `φ ↦ (Id ⊗ φ) ∘ (ε_X ⊗ Id_v) ∘ λ^{-1}`.
pub fn left_mate(pack: &AdjunctionPack, v: &Bimodule, u: &Bimodule, phi: &Matrix) -> Matrix {
    let (x, xv) = (&pack.m, &pack.mv);
    let lam = left_unitor(v);
    let asc = associator(xv, x, v);
    let eps = tensor_maps((&Bimodule::regular(x.right()), v), (&pack.mv_m.result, v), &pack.eps_m, &identity(v));
    let post = tensor_maps((xv, &asc.yz.result), (xv, u), &identity(xv), phi);
    post.mul(&asc.l2r).mul(&eps).mul(&lam.from)
}

/// `Hom(w ⊗_P X, z) → Hom(w, z ⊗_Q X^∨)`:
/// `φ ↦ (φ ⊗ Id) ∘ (Id_w ⊗ ε_{X^∨}) ∘ ρ^{-1}`.
pub fn right_mate(pack: &AdjunctionPack, w: &Bimodule, z: &Bimodule, phi: &Matrix) -> Matrix {
    let (x, xv) = (&pack.m, &pack.mv);
    let rho = right_unitor(w);
    let asc = associator(w, x, xv);
    let eps = tensor_maps((w, &Bimodule::regular(x.left())), (w, &pack.m_mv.result), &identity(w), &pack.eps_mv);
    let post = tensor_maps((&asc.xy.result, xv), (z, xv), phi, &identity(xv));
    post.mul(&asc.r2l).mul(&eps).mul(&rho.from)
}

/// `M ⊗_B V` for a left `B`-module, as a left `A`-module.
pub fn induce(pack: &AdjunctionPack, v: &Arc<Module>) -> Arc<Module> {
    tensor_over(&pack.m, &Bimodule::from_left(v)).result.as_left_module()
}

/// `Hom_A(M ⊗_B V, U) ≅ Hom_B(V, M^∨ ⊗_A U)` in the Hom-space bases. Columns
/// are images of the basis of the source.
pub fn adjunction_iso(pack: &AdjunctionPack, u: &Arc<Module>, v: &Arc<Module>) -> Matrix {
    let (ub, vb) = (Bimodule::from_left(u), Bimodule::from_left(v));
    let fv = induce(pack, v);
    let gu = tensor_over(&pack.mv, &ub).result.as_left_module();
    let src = hom_space(&fv, u);
    let tgt = hom_space(v, &gu);
    let f = u.algebra().field();
    let cols: Vec<Vec<u32>> = src.maps().iter().map(|phi| tgt.coords(&left_mate(pack, &vb, &ub, phi))).collect();
    Matrix::from_columns(f, tgt.dim(), &cols)
}

/// The unit `Y → X^∨ ⊗_P (X ⊗_Q Y)` at a `Q`-`C`-bimodule.
pub fn unit_at(pack: &AdjunctionPack, y: &Bimodule) -> Matrix {
    let fy = tensor_over(&pack.m, y);
    left_mate(pack, y, &fy.result, &identity(&fy.result))
}

/// `X^∨ ⊗_P (X ⊗_Q Y) → (X^∨ ⊗_P X) ⊗_Q Y → Q ⊗_Q Y → Y`, built from
/// `η_{X^∨}`.
pub fn counit_at(pack: &AdjunctionPack, y: &Bimodule) -> Matrix {
    let asc = associator(&pack.mv, &pack.m, y);
    let lam = left_unitor(y);
    let eta = tensor_maps((&pack.mv_m.result, y), (&Bimodule::regular(pack.m.right()), y), &pack.eta_mv, &identity(y));
    lam.to.mul(&eta).mul(&asc.r2l)
}
