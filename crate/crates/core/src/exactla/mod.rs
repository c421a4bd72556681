//! Exact dense linear algebra over prime fields: the substrate for every
//! Hom-space, kernel and quotient computation in the engine.

mod field;
mod matrix;
mod subspace;

pub use field::{is_prime, Fp, Scalar};
pub use matrix::{kron_apply, kron_mul, Matrix};
pub use subspace::{quotient, QuotientSpace, Subspace};

#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    fn matrix_strategy() -> impl Strategy<Value = Matrix> {
        (prop::sample::select(vec![2u32, 3, 5]), 1usize..6, 1usize..6).prop_flat_map(|(p, r, c)| {
            prop::collection::vec(0..p, r * c)
                .prop_map(move |d| Matrix::from_data(Fp::new(p), r, c, d))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in matrix_strategy()) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        }

        #[test]
        fn rref_idempotent_and_row_space_canonical(m in matrix_strategy()) {
            let (r, _) = m.rref();
            prop_assert_eq!(r.rref().0, r.clone());
            prop_assert_eq!(Subspace::row_space(&m), Subspace::row_space(&r));
        }

        #[test]
        fn kernel_vectors_are_killed(m in matrix_strategy()) {
            for v in m.kernel().basis_vectors() {
                prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn solve_is_exact(m in matrix_strategy(), seed in 0u32..1000) {
            let f = m.field();
            let x0: Vec<u32> = (0..m.cols()).map(|i| (seed + 7 * i as u32) % f.p()).collect();
            let b = m.mul_vec(&x0);
            let x = m.solve(&b).expect("consistent system");
            prop_assert_eq!(m.mul_vec(&x), b);
        }

        #[test]
        fn quotient_invariants(m in matrix_strategy()) {
            let s = Subspace::row_space(&m);
            let q = quotient(m.cols(), &s);
            let f = m.field();
            prop_assert_eq!(q.projection().mul(q.section()), Matrix::identity(f, q.dim()));
            for v in s.basis_vectors() {
                prop_assert!(q.projection().mul_vec(&v).iter().all(|&x| x == 0));
            }
            prop_assert_eq!(q.dim(), m.cols() - s.dim());
        }
    }
}
