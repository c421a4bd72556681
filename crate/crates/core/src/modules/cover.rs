//! Projective covers.

use super::projective::{ideal_actions, left_ideal, ProjStructure};
use super::Module;
use crate::exactla::{Matrix, Subspace};
use std::sync::Arc;

/// How covers are chosen when building towers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CoverMode {
    /// `⊕ Λ e_k` over primitive idempotents, one summand per simple in the
    /// top: the projective cover.
    #[default]
    Minimal,
    /// The minimal cover plus a free summand `Λ` on a repeated generator:
    /// deliberately not minimal, used to check independence of choices.
    /// Over a local algebra the whole cover is free.
    Free,
}

/// `π: P ↠ U` with `P` projective.
#[derive(Debug, Clone)]
pub struct Cover {
    pub p: Arc<Module>,
    pub pi: Matrix,
}

/// Generators `(k, u)` with `u ∈ e_k U`, one per simple summand of the top.
fn top_generators(u: &Module) -> Vec<(usize, Vec<u32>)> {
    let alg = u.algebra();
    let f = alg.field();
    let mut s = u.radical().clone();
    let mut gens = Vec::new();
    if s.dim() == u.dim() {
        return gens;
    }
    'outer: for (k, e) in alg.primitive_idempotents().iter().enumerate() {
        let eu = Subspace::column_space(&u.action(e));
        for v in eu.basis_vectors() {
            if s.contains(&v) {
                continue;
            }
            let orbit: Vec<Vec<u32>> = (0..alg.dim()).map(|b| u.act(b).mul_vec(&v)).collect();
            s = s.sum(&Subspace::from_vectors(f, u.dim(), orbit));
            gens.push((k, v));
            if s.dim() == u.dim() {
                break 'outer;
            }
        }
    }
    gens
}

pub fn projective_cover(u: &Arc<Module>, mode: CoverMode) -> Cover {
    let alg = u.algebra().clone();
    let f = alg.field();
    let gens = top_generators(u);
    let (idems, images): (Vec<Vec<u32>>, Vec<Vec<u32>>) = match mode {
        CoverMode::Minimal => gens
            .into_iter()
            .map(|(k, v)| (alg.primitive_idempotents()[k].clone(), v))
            .unzip(),
        CoverMode::Free => {
            let (mut idems, mut images): (Vec<Vec<u32>>, Vec<Vec<u32>>) =
                gens.into_iter().map(|(k, v)| (alg.primitive_idempotents()[k].clone(), v)).unzip();
            if let Some(first) = images.first().cloned() {
                idems.push(alg.unit().to_vec());
                images.push(first);
            }
            (idems, images)
        }
    };
    if idems.is_empty() {
        let p = Module::zero(alg);
        return Cover { p, pi: Matrix::zeros(f, u.dim(), 0) };
    }
    // P = ⊕ Λ e_k in echelon coordinates of each ideal
    let ideals: Vec<Subspace> = idems.iter().map(|e| left_ideal(&alg, e)).collect();
    let blocks: Vec<Vec<Matrix>> = ideals.iter().map(|i| ideal_actions(&alg, i)).collect();
    let total: usize = ideals.iter().map(|i| i.dim()).sum();
    let mut act = Vec::with_capacity(alg.dim());
    for b in 0..alg.dim() {
        let mut m = Matrix::zeros(f, total, total);
        let mut off = 0;
        for blk in &blocks {
            let a = &blk[b];
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    m.set(off + r, off + c, a.get(r, c));
                }
            }
            off += a.rows();
        }
        act.push(m);
    }
    let mut cols = Vec::with_capacity(total);
    for (ideal, v) in ideals.iter().zip(&images) {
        for y in ideal.basis_vectors() {
            cols.push(u.action(&y).mul_vec(v));
        }
    }
    let pi = Matrix::from_columns(f, u.dim(), &cols);
    let p = Module::from_actions(alg.clone(), act);
    p.set_projective_structure(ProjStructure::standard(&alg, idems));
    debug_assert_eq!(pi.rank(), u.dim());
    Cover { p, pi }
}

/// The free cover on all basis vectors, `Λ^{dim U} → U`; exponentially
/// large under iteration, used only as an oracle.
pub fn spanning_cover(u: &Arc<Module>) -> Cover {
    let alg = u.algebra().clone();
    let f = alg.field();
    let n = alg.dim();
    let d = u.dim();
    if d == 0 {
        return Cover { p: Module::zero(alg), pi: Matrix::zeros(f, 0, 0) };
    }
    let mut act = Vec::with_capacity(n);
    for b in 0..n {
        let l = alg.left_basis(b);
        act.push(Matrix::identity(f, d).kron(l));
    }
    let mut cols = Vec::with_capacity(n * d);
    for j in 0..d {
        let mut e = vec![0u32; d];
        e[j] = 1;
        for y in 0..n {
            cols.push(u.act(y).mul_vec(&e));
        }
    }
    let pi = Matrix::from_columns(f, d, &cols);
    let p = Module::from_actions(alg.clone(), act);
    p.set_projective_structure(ProjStructure::standard(&alg, vec![alg.unit().to_vec(); d]));
    Cover { p, pi }
}
