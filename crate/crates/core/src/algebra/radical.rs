//! Jacobson radical by the extended trace method.
//!
//! With `L_a` the left regular representation and `l = floor(log_p n)`, set
//! `I_{-1} = A` and
//! `I_i = { a in I_{i-1} : g_i(ab) = 0 for all b }`, where
//! `g_i(a) = (Tr(L~_a^{p^i}) mod p^{i+1}) / p^i` for any integer lift `L~_a`.
//! Each `g_i` is linear on `I_{i-1}`, so every step is a kernel computation,
//! and `I_l` is the radical.

use super::Algebra;
use crate::exactla::{Matrix, Subspace};

pub(super) fn trace_radical(a: &Algebra) -> Subspace {
    let n = a.dim();
    let p = a.p() as u64;
    let field = a.field();
    let mut l = 0u32;
    while p.pow(l + 1) <= n as u64 {
        l += 1;
    }
    let mut current = Subspace::full(field, n);
    for i in 0..=l {
        let basis = current.basis_vectors();
        if basis.is_empty() {
            break;
        }
        // g[r][b] = g_i(v_r e_b)
        let mut g = Matrix::zeros(field, n, basis.len());
        for (r, v) in basis.iter().enumerate() {
            for b in 0..n {
                let w = a.right_basis(b).mul_vec(v);
                g.set(b, r, extended_trace(a, &w, i));
            }
        }
        let ker = g.kernel();
        let vecs = ker
            .basis_vectors()
            .into_iter()
            .map(|c| {
                let mut out = vec![0u32; n];
                for (cr, v) in c.iter().zip(&basis) {
                    for (o, &x) in out.iter_mut().zip(v) {
                        *o = field.add(*o, field.mul(*cr, x));
                    }
                }
                out
            })
            .collect();
        current = Subspace::from_vectors(field, n, vecs);
    }
    current
}

/// `g_i(w)` for an element `w` of the algebra.
fn extended_trace(a: &Algebra, w: &[u32], i: u32) -> u32 {
    let p = a.p() as u64;
    let lw = a.left_mult(w);
    if i == 0 {
        let mut t = 0u64;
        for k in 0..a.dim() {
            t += lw.get(k, k) as u64;
        }
        return (t % p) as u32;
    }
    let q = p.pow(i + 1);
    let n = a.dim();
    let mut m: Vec<u64> = lw.data().iter().map(|&x| x as u64).collect();
    for _ in 0..i {
        // m <- m^p mod q
        let base = m.clone();
        for _ in 1..p {
            m = int_mul(&m, &base, n, q);
        }
    }
    let t: u64 = (0..n).map(|k| m[k * n + k]).sum::<u64>() % q;
    let pi = p.pow(i);
    debug_assert_eq!(t % pi, 0, "extended trace not divisible by p^i");
    ((t / pi) % p) as u32
}

fn int_mul(x: &[u64], y: &[u64], n: usize, q: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for r in 0..n {
        for k in 0..n {
            let a = x[r * n + k];
            if a == 0 {
                continue;
            }
            let yrow = &y[k * n..(k + 1) * n];
            let orow = &mut out[r * n..(r + 1) * n];
            for (o, &b) in orow.iter_mut().zip(yrow) {
                *o = (*o + a * b) % q;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::constructors::{cyclic_table, symmetric_group_s3_table};
    use crate::algebra::{enveloping, group_algebra, truncated_poly};

    #[test]
    fn radical_of_dual_numbers() {
        let a = truncated_poly(2, 2).unwrap();
        let r = trace_radical(&a);
        assert_eq!(r.basis_vectors(), vec![vec![0, 1]]);
    }

    #[test]
    fn radical_of_c3_in_char_3() {
        let a = group_algebra(3, &cyclic_table(3)).unwrap();
        let r = trace_radical(&a);
        assert_eq!(r.dim(), 2);
        assert!(r.contains(&[2, 1, 0]));
        assert!(r.contains(&[2, 0, 1]));
    }

    #[test]
    fn semisimple_c2_in_char_3() {
        let a = group_algebra(3, &cyclic_table(2)).unwrap();
        assert_eq!(trace_radical(&a).dim(), 0);
    }

    #[test]
    fn radical_of_s3_in_char_3() {
        let a = group_algebra(3, &symmetric_group_s3_table()).unwrap();
        let r = trace_radical(&a);
        assert_eq!(r.dim(), 4);
        assert!(a.check_radical(&r).is_ok());
    }

    #[test]
    fn tensor_shortcut_matches_trace_method() {
        for a in [
            truncated_poly(2, 2).unwrap(),
            group_algebra(2, &cyclic_table(4)).unwrap(),
            group_algebra(3, &cyclic_table(3)).unwrap(),
        ] {
            let e = enveloping(&a);
            assert_eq!(&trace_radical(&e), e.radical_basis());
        }
    }
}
