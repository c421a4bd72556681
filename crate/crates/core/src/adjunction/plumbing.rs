//! Unitors and associators for tensor products of bimodules.

use crate::algebra::Algebra;
use crate::exactla::{kron_mul, Matrix};
use crate::modules::{tensor_over, Bimodule, TensorProduct};
use std::sync::Arc;

/// `R ⊗_R X` with `λ: R ⊗_R X → X` and its inverse `x ↦ 1 ⊗ x`.
pub struct Unitor {
    pub tp: Arc<TensorProduct>,
    pub to: Matrix,
    pub from: Matrix,
}

pub fn left_unitor(x: &Bimodule) -> Unitor {
    let r = x.left().clone();
    let tp = tensor_over(&Bimodule::regular(&r), x);
    let f = r.field();
    let (dr, dx) = (r.dim(), x.dim());
    let mut raw = Matrix::zeros(f, dx, dr * dx);
    for i in 0..dr {
        let l = x.left_basis_action(i);
        for j in 0..dx {
            for row in 0..dx {
                raw.set(row, i * dx + j, l.get(row, j));
            }
        }
    }
    let to = raw.mul(&tp.sect);
    let cols: Vec<Vec<u32>> = (0..dx).map(|j| tp.pure(r.unit(), &unit_vec(dx, j))).collect();
    let from = Matrix::from_columns(f, tp.dim(), &cols);
    Unitor { tp, to, from }
}

/// `X ⊗_R R` with `ρ: X ⊗_R R → X` and its inverse `x ↦ x ⊗ 1`.
pub fn right_unitor(x: &Bimodule) -> Unitor {
    let r = x.right().clone();
    let tp = tensor_over(x, &Bimodule::regular(&r));
    let f = r.field();
    let (dr, dx) = (r.dim(), x.dim());
    let mut raw = Matrix::zeros(f, dx, dx * dr);
    for i in 0..dr {
        let rt = x.right_basis_action(i);
        for j in 0..dx {
            for row in 0..dx {
                raw.set(row, j * dr + i, rt.get(row, j));
            }
        }
    }
    let to = raw.mul(&tp.sect);
    let cols: Vec<Vec<u32>> = (0..dx).map(|j| tp.pure(&unit_vec(dx, j), r.unit())).collect();
    let from = Matrix::from_columns(f, tp.dim(), &cols);
    Unitor { tp, to, from }
}

pub(crate) fn unit_vec(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// `(X ⊗ Y) ⊗ Z ≅ X ⊗ (Y ⊗ Z)` with both directions.
pub struct Associator {
    pub xy: Arc<TensorProduct>,
    pub xy_z: Arc<TensorProduct>,
    pub yz: Arc<TensorProduct>,
    pub x_yz: Arc<TensorProduct>,
    /// `(X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)`
    pub l2r: Matrix,
    /// `X ⊗ (Y ⊗ Z) → (X ⊗ Y) ⊗ Z`
    pub r2l: Matrix,
}

pub fn associator(x: &Bimodule, y: &Bimodule, z: &Bimodule) -> Associator {
    let f = x.left().field();
    let xy = tensor_over(x, y);
    let xy_z = tensor_over(&xy.result, z);
    let yz = tensor_over(y, z);
    let x_yz = tensor_over(x, &yz.result);
    let (ix, iz) = (Matrix::identity(f, x.dim()), Matrix::identity(f, z.dim()));
    let r2l = xy_z.proj.mul(&kron_mul(&xy.proj, &iz, &kron_mul(&ix, &yz.sect, &x_yz.sect)));
    let l2r = x_yz.proj.mul(&kron_mul(&ix, &yz.proj, &kron_mul(&xy.sect, &iz, &xy_z.sect)));
    Associator { xy, xy_z, yz, x_yz, l2r, r2l }
}

/// `f ⊗ g` between tensor products computed on demand.
pub fn tensor_maps(src: (&Bimodule, &Bimodule), tgt: (&Bimodule, &Bimodule), f: &Matrix, g: &Matrix) -> Matrix {
    let s = tensor_over(src.0, src.1);
    let t = tensor_over(tgt.0, tgt.1);
    s.map_to(&t, f, g)
}

pub fn identity(x: &Bimodule) -> Matrix {
    Matrix::identity(x.left().field(), x.dim())
}

/// The Gram matrix of the symmetrising form and its inverse.
pub fn gram_inverse(a: &Algebra) -> Matrix {
    a.gram().inverse().expect("symmetrising form is nondegenerate")
}
