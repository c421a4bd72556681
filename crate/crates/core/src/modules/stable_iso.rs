//! Searching for stable isomorphisms.

use super::{stable_hom, Module};
use crate::exactla::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Maps `u: U → V`, `v: V → U` inverse to each other modulo maps factoring
/// through projectives.
#[derive(Clone, Debug)]
pub struct StableIso {
    pub u: Matrix,
    pub v: Matrix,
}

fn solve_inverse(x: &Arc<Module>, y: &Arc<Module>, u: &Matrix) -> Option<Matrix> {
    let back = stable_hom(y, x);
    let endo = stable_hom(x, x);
    let f = u.field();
    let target = endo.class_of(&Matrix::identity(f, x.dim()));
    let reps = back.basis_reps();
    if endo.dim() == 0 {
        return Some(Matrix::zeros(f, x.dim(), y.dim()));
    }
    if reps.is_empty() {
        return None;
    }
    let cols: Vec<Vec<u32>> = reps.iter().map(|v| endo.class_of(&v.mul(u))).collect();
    let sys = Matrix::from_columns(f, endo.dim(), &cols);
    let c = sys.solve(&target)?;
    let mut v = Matrix::zeros(f, x.dim(), y.dim());
    for (ci, r) in c.iter().zip(&reps) {
        v.add_scaled(r, *ci);
    }
    Some(v)
}

/// A stable isomorphism `U ≃ V`, if one is found: exhaustive over stable
/// classes when there are at most `2^12` of them, otherwise `tries` seeded
/// random candidates.
pub fn stable_iso(x: &Arc<Module>, y: &Arc<Module>, tries: usize) -> Option<StableIso> {
    let fwd = stable_hom(x, y);
    let bwd_end = stable_hom(y, y);
    let f = x.algebra().field();
    let p = f.p() as u64;
    let n = fwd.dim();
    let check = |c: &[u32]| -> Option<StableIso> {
        let u = fwd.rep(c);
        let v = solve_inverse(x, y, &u)?;
        let id = Matrix::identity(f, y.dim());
        if bwd_end.is_stably_zero(&u.mul(&v).sub(&id)) {
            Some(StableIso { u, v })
        } else {
            None
        }
    };
    if n == 0 {
        return check(&[]);
    }
    let total = (p as f64).powi(n as i32);
    if total <= 4096.0 {
        for idx in 1..p.pow(n as u32) {
            let mut t = idx;
            let c: Vec<u32> = (0..n)
                .map(|_| {
                    let d = (t % p) as u32;
                    t /= p;
                    d
                })
                .collect();
            if let Some(s) = check(&c) {
                return Some(s);
            }
        }
        None
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x57ab_1e);
        (0..tries).find_map(|_| {
            let c: Vec<u32> = (0..n).map(|_| rng.gen_range(0..f.p())).collect();
            check(&c)
        })
    }
}
