//! The adjunctions with the ground field: `Hom_k(U, k) ≅ Hom_A(U, A^∨)` and
//! `Hom_A(A^∨, U) ≅ Hom_k(k, U)`, and the trace identities relating them to
//! the bimodule adjunctions.

use super::mates::left_mate;
use super::pack::AdjunctionPack;
use crate::algebra::Algebra;
use crate::exactla::Matrix;
use crate::modules::{hom_space, tensor_over, Bimodule, Module};
use std::sync::Arc;

/// `A^∨ = Hom_k(A, k)` as a left `A`-module, `(bφ)(a) = φ(ab)`.
pub fn a_dual(a: &Arc<Algebra>) -> Arc<Module> {
    Module::regular(&a.opposite()).dual()
}

/// `τ(γ) = (u ↦ (a ↦ γ(au)))` for a functional `γ` on `U`.
pub fn tau_map(u: &Module, gamma: &[u32]) -> Matrix {
    let a = u.algebra();
    let f = a.field();
    let mut t = Matrix::zeros(f, a.dim(), u.dim());
    for c in 0..a.dim() {
        let row = u.act(c).transpose().mul_vec(gamma);
        for (i, v) in row.into_iter().enumerate() {
            t.set(c, i, v);
        }
    }
    t
}

/// `β(φ) = φ(s)` for `φ: A^∨ → U`.
pub fn beta_map(a: &Algebra, phi: &Matrix) -> Vec<u32> {
    phi.mul_vec(a.sform())
}

/// Both isomorphisms in Hom-space coordinates: `tau` sends the dual basis of
/// `U^*` into `Hom_A(U, A^∨)`, `beta` sends the basis of `Hom_A(A^∨, U)` into
/// `U`.
#[derive(Clone, Debug)]
pub struct SpecialAdjunctions {
    pub tau: Matrix,
    pub beta: Matrix,
}

pub fn special_adjunctions(u: &Arc<Module>) -> SpecialAdjunctions {
    let a = u.algebra();
    let f = a.field();
    let ad = a_dual(a);
    let to = hom_space(u, &ad);
    let from = hom_space(&ad, u);
    let d = u.dim();
    let cols: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            let mut g = vec![0; d];
            g[i] = 1;
            to.coords(&tau_map(u, &g))
        })
        .collect();
    let tau = Matrix::from_columns(f, to.dim(), &cols);
    let cols: Vec<Vec<u32>> = from.maps().iter().map(|phi| beta_map(a, phi)).collect();
    let beta = Matrix::from_columns(f, d, &cols);
    SpecialAdjunctions { tau, beta }
}

fn trace_of(p: &Arc<Module>, phi: &Matrix) -> Option<u32> {
    Some(p.projective_structure()?.trace(p.algebra(), phi))
}

/// `τ_{A^∨}(τ(γ) ∘ ψ) = γ(β(ψ))` for all `ψ: A^∨ → U` and functionals `γ`.
pub fn trace_matches_evaluation(u: &Arc<Module>) -> bool {
    let a = u.algebra();
    let ad = a_dual(a);
    let d = u.dim();
    hom_space(&ad, u).maps().iter().all(|psi| {
        let b = beta_map(a, psi);
        (0..d).all(|i| {
            let mut g = vec![0; d];
            g[i] = 1;
            let lhs = trace_of(&ad, &tau_map(u, &g).mul(psi));
            lhs == Some(b[i])
        })
    })
}

/// `τ_{M^∨ ⊗ P}(L(x) ∘ y) = τ_P(x ∘ L'(y))` for `x: M ⊗ Q → P` and
/// `y: M^∨ ⊗ P → Q`, where `L` and `L'` are the mates of the two
/// adjunctions and `P`, `Q` are projective.
pub fn mate_traces_agree(pack: &AdjunctionPack, p: &Arc<Module>, q: &Arc<Module>) -> bool {
    let (pb, qb) = (Bimodule::from_left(p), Bimodule::from_left(q));
    let mq = tensor_over(&pack.m, &qb).result.as_left_module();
    let mvp = tensor_over(&pack.mv, &pb).result.as_left_module();
    let dual = pack.dual();
    let xs = hom_space(&mq, p).maps();
    let ys = hom_space(&mvp, q).maps();
    xs.iter().all(|x| {
        let lx = left_mate(pack, &qb, &pb, x);
        ys.iter().all(|y| {
            let ly = left_mate(&dual, &pb, &qb, y);
            let lhs = trace_of(&mvp, &lx.mul(y));
            lhs.is_some() && lhs == trace_of(p, &x.mul(&ly))
        })
    })
}
