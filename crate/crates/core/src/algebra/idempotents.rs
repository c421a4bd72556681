//! Complete sets of primitive orthogonal idempotents.
//!
//! Split in the semisimple quotient `S = A / rad A` by idempotents read off
//! minimal polynomials, then lift to `A` one at a time inside the remaining
//! corner.

use super::Algebra;
use crate::exactla::{Fp, Matrix, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TRIES: usize = 60;

pub(super) fn primitive_idempotents(a: &Algebra) -> Vec<Vec<u32>> {
    let rad = a.radical_basis().clone();
    if rad.dim() == a.dim() {
        // only possible for the zero algebra, which validation excludes
        return vec![a.unit().to_vec()];
    }
    let q = crate::exactla::quotient(a.dim(), &rad);
    let s = a.quotient_algebra(&rad);
    let top = split_semisimple(&s);
    if top.len() == 1 {
        return vec![a.unit().to_vec()];
    }
    let f = a.field();
    let mut remaining = a.unit().to_vec();
    let mut out = Vec::with_capacity(top.len());
    for (idx, e) in top.iter().enumerate() {
        if idx + 1 == top.len() {
            out.push(remaining.clone());
            break;
        }
        let y = q.lift(e);
        let x = a.product(&a.product(&remaining, &y), &remaining);
        let lifted = make_idempotent(a, x);
        remaining = sub(f, &remaining, &lifted);
        out.push(lifted);
    }
    out
}

/// Iterates `x <- 3x^2 - 2x^3` until `x` is idempotent; converges when `x` is
/// idempotent modulo a nilpotent ideal.
fn make_idempotent(a: &Algebra, mut x: Vec<u32>) -> Vec<u32> {
    let f = a.field();
    for _ in 0..64 {
        let x2 = a.product(&x, &x);
        if x2 == x {
            return x;
        }
        let x3 = a.product(&x2, &x);
        x = x2
            .iter()
            .zip(&x3)
            .map(|(&u, &v)| f.sub(f.mul(3 % f.p(), u), f.mul(2 % f.p(), v)))
            .collect();
    }
    panic!("idempotent lifting did not converge in {}", a.name());
}

/// Splits the unit of a semisimple algebra into primitive orthogonal
/// idempotents.
fn split_semisimple(s: &Algebra) -> Vec<Vec<u32>> {
    let f = s.field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1dea);
    let mut work = vec![s.unit().to_vec()];
    let mut done = Vec::new();
    while let Some(e) = work.pop() {
        match split_once(s, &e, &mut rng) {
            Some(ei) => {
                let rest = sub(f, &e, &ei);
                work.push(rest);
                work.push(ei);
            }
            None => done.push(e),
        }
    }
    // deterministic order: by first nonzero coordinate
    done.sort();
    done
}

/// Finds a proper idempotent `E` of the corner `eSe`, if one is found.
fn split_once(s: &Algebra, e: &[u32], rng: &mut ChaCha8Rng) -> Option<Vec<u32>> {
    let f = s.field();
    let n = s.dim();
    let corner_vecs: Vec<Vec<u32>> = (0..n)
        .map(|i| s.product(&s.product(e, &s.basis_element(i)), e))
        .collect();
    let corner = Subspace::from_vectors(f, n, corner_vecs);
    if corner.dim() <= 1 {
        return None;
    }
    let basis = corner.basis_vectors();
    let mut candidates: Vec<Vec<u32>> = basis.clone();
    for _ in 0..TRIES {
        let coeffs: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..f.p())).collect();
        candidates.push(corner.combine(&coeffs));
    }
    for x in candidates {
        if let Some(ei) = idempotent_from_element(s, e, &x) {
            return Some(ei);
        }
    }
    None
}

/// If the minimal polynomial of `x` in the corner with unit `e` is
/// `(t - r) h(t)` with `h(r) != 0` and `h` nonconstant, returns `h(x)/h(r)`.
fn idempotent_from_element(s: &Algebra, e: &[u32], x: &[u32]) -> Option<Vec<u32>> {
    let f = s.field();
    let n = s.dim();
    let minpoly = minimal_polynomial(s, e, x)?;
    if minpoly.len() <= 2 {
        return None;
    }
    for r in 0..f.p() {
        if eval_scalar(f, &minpoly, r) != 0 {
            continue;
        }
        let h = divide_linear(f, &minpoly, r);
        let hr = eval_scalar(f, &h, r);
        if hr == 0 {
            continue;
        }
        let inv = f.inv(hr);
        // h(x) by Horner with e as the unit
        let mut acc = vec![0u32; n];
        for &c in h.iter().rev() {
            acc = s.product(&acc, x);
            for (a, &u) in acc.iter_mut().zip(e) {
                *a = f.add(*a, f.mul(c, u));
            }
        }
        return Some(acc.iter().map(|&v| f.mul(v, inv)).collect());
    }
    None
}

/// Coefficients (lowest degree first, monic) of the minimal polynomial of
/// `x` in the corner with unit `e`.
fn minimal_polynomial(s: &Algebra, e: &[u32], x: &[u32]) -> Option<Vec<u32>> {
    let f = s.field();
    let n = s.dim();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = s.product(powers.last().unwrap(), x);
        let m = Matrix::from_columns(f, n, &powers);
        if let Some(c) = m.solve(&next) {
            let mut poly: Vec<u32> = c.iter().map(|&v| f.neg(v)).collect();
            poly.push(1);
            return Some(poly);
        }
        powers.push(next);
        if powers.len() > n + 1 {
            return None;
        }
    }
}

fn eval_scalar(f: Fp, poly: &[u32], r: u32) -> u32 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, r), c))
}

/// Quotient of `poly` by `(t - r)`, assuming `r` is a root.
fn divide_linear(f: Fp, poly: &[u32], r: u32) -> Vec<u32> {
    let d = poly.len() - 1;
    let mut q = vec![0u32; d];
    let mut carry = 0u32;
    for k in (1..=d).rev() {
        carry = f.add(poly[k], f.mul(carry, r));
        q[k - 1] = carry;
    }
    q
}

fn sub(f: Fp, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}
