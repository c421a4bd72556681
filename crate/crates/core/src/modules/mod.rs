//! Modules and bimodules as matrix representations: Hom spaces, stable Hom,
//! duals, tensor products, projective covers and syzygy towers.

mod bimodule;
mod cover;
mod dual_basis;
mod hom;
mod json;
mod module;
mod projective;
mod stable_iso;
mod tensor;
mod tower;

pub use bimodule::Bimodule;
pub use cover::{projective_cover, spanning_cover, Cover, CoverMode};
pub use dual_basis::{dual_basis_left, dual_basis_right, DualBasisLeft, DualBasisRight};
pub use hom::{
    hom_space, module_generators, pr_subspace, pr_subspace_via_cover, stable_hom, HomSpace, StableHom,
};
pub use json::{BimoduleDef, ModuleDef};
pub use module::Module;
pub use projective::{ProjStructure, Summand};
pub use stable_iso::{stable_iso, StableIso};
pub use tensor::{tensor_over, TensorFunctor, TensorProduct};
pub use tower::{chain_lift, extend_through, lift_through, step_down, step_up, Functor, Layer, Tower};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("invalid module: {0}")]
    Invalid(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("not projective as a {0} module: the dual-basis system has no solution")]
    NotProjective(&'static str),
    #[error("lift failed: {0}")]
    LiftFailed(String),
    #[error("malformed definition: {0}")]
    Malformed(String),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}

#[cfg(test)]
mod tests;
