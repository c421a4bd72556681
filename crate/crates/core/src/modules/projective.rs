//! Explicit decompositions `P = ⊕ Λ g_k` of projective modules, with
//! `Λ e_k → Λ g_k, a e_k ↦ a g_k` an isomorphism for a primitive (or unit)
//! idempotent `e_k`. Homs out of `P`, lifts through surjections and the
//! trace `τ_P` all reduce to the generators.

use super::Module;
use crate::algebra::Algebra;
use crate::exactla::{Matrix, Subspace};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Summand {
    /// The idempotent `e` with `P_k ≅ Λ e`.
    pub idem: Vec<u32>,
    /// The left ideal `Λ e`, whose echelon basis indexes summand coordinates.
    pub ideal: Subspace,
    /// The image of `e` in `P`.
    pub gen: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct ProjStructure {
    pub summands: Vec<Summand>,
    /// Summand coordinates to module coordinates.
    gamma: Matrix,
    gamma_inv: Matrix,
}

/// The left ideal `Λ e`.
pub fn left_ideal(alg: &Algebra, e: &[u32]) -> Subspace {
    Subspace::column_space(&alg.right_mult(e))
}

/// Action matrices of `Λ` on `Λ e` in echelon coordinates.
pub fn ideal_actions(alg: &Algebra, ideal: &Subspace) -> Vec<Matrix> {
    let f = alg.field();
    let basis = ideal.basis_vectors();
    (0..alg.dim())
        .map(|i| {
            let cols: Vec<Vec<u32>> = basis
                .iter()
                .map(|y| ideal.coords_unchecked(&alg.left_basis(i).mul_vec(y)))
                .collect();
            Matrix::from_columns(f, basis.len(), &cols)
        })
        .collect()
}

impl ProjStructure {
    pub fn empty(m: &Module) -> Self {
        let f = m.algebra().field();
        ProjStructure {
            summands: Vec::new(),
            gamma: Matrix::zeros(f, 0, 0),
            gamma_inv: Matrix::zeros(f, 0, 0),
        }
    }

    pub fn regular(alg: &Arc<Algebra>) -> Self {
        let f = alg.field();
        let n = alg.dim();
        let unit = alg.unit().to_vec();
        ProjStructure {
            summands: vec![Summand {
                idem: unit.clone(),
                ideal: Subspace::full(f, n),
                gen: unit,
            }],
            gamma: Matrix::identity(f, n),
            gamma_inv: Matrix::identity(f, n),
        }
    }

    /// Structure of a module whose coordinates are already summand
    /// coordinates (as built by covers).
    pub(super) fn standard(alg: &Algebra, idems: Vec<Vec<u32>>) -> Self {
        let f = alg.field();
        let mut summands = Vec::new();
        let mut total = 0;
        let mut offsets = Vec::new();
        for e in idems {
            let ideal = left_ideal(alg, &e);
            offsets.push(total);
            total += ideal.dim();
            summands.push(Summand { idem: e, ideal, gen: Vec::new() });
        }
        for (k, s) in summands.iter_mut().enumerate() {
            let mut g = vec![0u32; total];
            let c = s.ideal.coords(&s.idem).expect("e lies in Λe");
            g[offsets[k]..offsets[k] + c.len()].copy_from_slice(&c);
            s.gen = g;
        }
        ProjStructure {
            summands,
            gamma: Matrix::identity(f, total),
            gamma_inv: Matrix::identity(f, total),
        }
    }

    /// Transports a structure along an isomorphism `phi: P -> Q`.
    pub(super) fn transport(&self, phi: &Matrix) -> Self {
        let inv = phi.inverse().expect("transport along an isomorphism");
        ProjStructure {
            summands: self
                .summands
                .iter()
                .map(|s| Summand {
                    idem: s.idem.clone(),
                    ideal: s.ideal.clone(),
                    gen: phi.mul_vec(&s.gen),
                })
                .collect(),
            gamma: phi.mul(&self.gamma),
            gamma_inv: self.gamma_inv.mul(&inv),
        }
    }

    /// Finds a structure through the minimal cover; `None` if the module is
    /// not projective.
    pub(super) fn detect(m: &Arc<Module>) -> Option<Self> {
        let cover = super::cover::projective_cover(m, super::CoverMode::Minimal);
        if cover.p.dim() != m.dim() {
            return None;
        }
        let base = cover.p.projective_structure().expect("covers are projective");
        Some(base.transport(&cover.pi))
    }

    /// Matrix of the hom `P -> V` sending generator `k` to `images[k]`;
    /// requires `e_k · images[k] = images[k]`.
    pub fn map_from_images(&self, v: &Module, images: &[Vec<u32>]) -> Matrix {
        let f = v.algebra().field();
        let mut cols = Vec::with_capacity(self.gamma.rows());
        for (s, x) in self.summands.iter().zip(images) {
            debug_assert_eq!(&v.action(&s.idem).mul_vec(x), x);
            for y in s.ideal.basis_vectors() {
                cols.push(v.action(&y).mul_vec(x));
            }
        }
        Matrix::from_columns(f, v.dim(), &cols).mul(&self.gamma_inv)
    }

    /// Basis of `Hom(P, V)`, one map per basis vector of each `e_k V`.
    pub fn hom_basis(&self, v: &Module) -> Vec<Matrix> {
        let mut out = Vec::new();
        let zero = vec![0u32; v.dim()];
        for (k, s) in self.summands.iter().enumerate() {
            let ev = Subspace::column_space(&v.action(&s.idem));
            for x in ev.basis_vectors() {
                let mut images = vec![zero.clone(); self.summands.len()];
                images[k] = x;
                out.push(self.map_from_images(v, &images));
            }
        }
        out
    }

    /// Some `g: P -> P'` with `onto · g = h`, where `onto: P' -> Y` is
    /// surjective and `h: P -> Y`.
    pub fn lift_through(&self, h: &Matrix, onto: &Matrix, target: &Module) -> Option<Matrix> {
        let mut images = Vec::with_capacity(self.summands.len());
        for s in &self.summands {
            let y = h.mul_vec(&s.gen);
            let z = onto.solve(&y)?;
            images.push(target.action(&s.idem).mul_vec(&z));
        }
        Some(self.map_from_images(target, &images))
    }

    /// The symmetrising trace `τ_P(φ) = Σ_k s(α_k(φ(g_k)))` of an
    /// endomorphism, `α_k` being the coordinate projections.
    pub fn trace(&self, alg: &Algebra, phi: &Matrix) -> u32 {
        let f = alg.field();
        let mut t = 0;
        let mut off = 0;
        for s in &self.summands {
            let c = self.gamma_inv.mul_vec(&phi.mul_vec(&s.gen));
            let d = s.ideal.dim();
            let y = s.ideal.combine(&c[off..off + d]);
            t = f.add(t, alg.form(&y));
            off += d;
        }
        t
    }

    /// The coordinate projections `α_k: P -> Λ` and generators `g_k`: a dual
    /// basis of `P`.
    pub fn dual_basis(&self, alg: &Algebra) -> Vec<(Matrix, Vec<u32>)> {
        let f = alg.field();
        let mut out = Vec::new();
        let mut off = 0;
        for s in &self.summands {
            let d = s.ideal.dim();
            let total = self.gamma_inv.rows();
            let mut sel = Matrix::zeros(f, alg.dim(), total);
            let basis = s.ideal.basis_vectors();
            for (b, y) in basis.iter().enumerate() {
                for (r, &v) in y.iter().enumerate() {
                    sel.set(r, off + b, v);
                }
            }
            out.push((sel.mul(&self.gamma_inv), s.gen.clone()));
            off += d;
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }
}
