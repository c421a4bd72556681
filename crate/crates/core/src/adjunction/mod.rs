//! Adjunctions between tensor functors of a two-sided projective bimodule,
//! and the transfer maps they induce.

mod mates;
mod pack;
mod plumbing;
mod special;
mod transfer;

pub use mates::{adjunction_iso, counit_at, induce, left_mate, right_mate, unit_at};
pub use pack::{dual_tensor_iso, snake_a, snake_b, split_bases, AdjunctionPack, PackChecks};
pub use plumbing::{associator, left_unitor, right_unitor, tensor_maps, Associator, Unitor};
pub use special::{
    a_dual, beta_map, mate_traces_agree, special_adjunctions, tau_map, trace_matches_evaluation, SpecialAdjunctions,
};
pub use transfer::{ExtTransfer, HhTransfer};

#[cfg(test)]
mod tests;
