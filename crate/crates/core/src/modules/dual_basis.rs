//! Dual bases witnessing one-sided projectivity of a bimodule.

use super::{Bimodule, Module, ModuleError};
use crate::algebra::Algebra;
use crate::exactla::Matrix;
use std::sync::Arc;

/// Pairs `(α_i, m_i)` with `α_i ∈ Hom_A(M, A)` and `m = Σ α_i(m) m_i`.
#[derive(Clone, Debug)]
pub struct DualBasisLeft {
    pub pairs: Vec<(Matrix, Vec<u32>)>,
}

/// Pairs `(β_i, m_i)` with `β_i ∈ Hom_{B^0}(M, B)` and `m = Σ m_i β_i(m)`.
#[derive(Clone, Debug)]
pub struct DualBasisRight {
    pub pairs: Vec<(Matrix, Vec<u32>)>,
}

/// `M` restricted to the left action.
pub fn left_restriction(m: &Bimodule) -> Arc<Module> {
    let act = (0..m.left().dim()).map(|i| m.left_basis_action(i)).collect();
    Module::from_actions(m.left().clone(), act)
}

/// `M` restricted to the right action, as a left `B^0`-module.
pub fn right_restriction(m: &Bimodule) -> Arc<Module> {
    let act = (0..m.right().dim()).map(|j| m.right_basis_action(j)).collect();
    Module::from_actions(m.right().opposite(), act)
}

fn pairs_of(u: &Arc<Module>, alg: &Algebra, side: &'static str) -> Result<Vec<(Matrix, Vec<u32>)>, ModuleError> {
    let ps = u.projective_structure().ok_or(ModuleError::NotProjective(side))?;
    Ok(ps.dual_basis(alg))
}

pub fn dual_basis_left(m: &Bimodule) -> Result<DualBasisLeft, ModuleError> {
    let u = left_restriction(m);
    Ok(DualBasisLeft { pairs: pairs_of(&u, m.left(), "left")? })
}

pub fn dual_basis_right(m: &Bimodule) -> Result<DualBasisRight, ModuleError> {
    let u = right_restriction(m);
    let op = m.right().opposite();
    Ok(DualBasisRight { pairs: pairs_of(&u, &op, "right")? })
}

impl DualBasisLeft {
    /// Checks `α_i` are left-linear and `Σ α_i(m) m_i = m` on a basis.
    pub fn verify(&self, m: &Bimodule) -> bool {
        let a = m.left();
        let u = left_restriction(m);
        let reg = Module::regular(a);
        let f = a.field();
        let d = m.dim();
        let mut total = Matrix::zeros(f, d, d);
        for (alpha, mi) in &self.pairs {
            if !u.is_hom_to(&reg, alpha) {
                return false;
            }
            for c in 0..d {
                let x = alpha.column(c);
                let v = m.left_action(&x).mul_vec(mi);
                for (r, val) in v.into_iter().enumerate() {
                    total.set(r, c, f.add(total.get(r, c), val));
                }
            }
        }
        total == Matrix::identity(f, d)
    }
}

impl DualBasisRight {
    /// Checks `β_i` are right-linear and `Σ m_i β_i(m) = m` on a basis.
    pub fn verify(&self, m: &Bimodule) -> bool {
        let u = right_restriction(m);
        let reg = Module::regular(&m.right().opposite());
        let f = m.right().field();
        let d = m.dim();
        let mut total = Matrix::zeros(f, d, d);
        for (beta, mi) in &self.pairs {
            if !u.is_hom_to(&reg, beta) {
                return false;
            }
            for c in 0..d {
                let y = beta.column(c);
                let v = m.right_action(&y).mul_vec(mi);
                for (r, val) in v.into_iter().enumerate() {
                    total.set(r, c, f.add(total.get(r, c), val));
                }
            }
        }
        total == Matrix::identity(f, d)
    }
}
