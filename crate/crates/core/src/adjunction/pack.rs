//! Units and counits of the adjunctions `M ⊗_B − ⊣ M^∨ ⊗_A −` and
//! `M^∨ ⊗_A − ⊣ M ⊗_B −` for a bimodule projective on both sides.

use super::plumbing::{associator, gram_inverse, identity, left_unitor, right_unitor, tensor_maps};
use crate::exactla::Matrix;
use crate::modules::{
    dual_basis_left, dual_basis_right, tensor_over, Bimodule, DualBasisLeft, DualBasisRight, ModuleError,
    TensorProduct,
};
use std::sync::Arc;

/// The four structure maps of an `A`-`B`-bimodule `M`.
#[derive(Clone, Debug)]
pub struct AdjunctionPack {
    pub m: Bimodule,
    pub mv: Bimodule,
    /// Dual bases of the bimodule the pack was built from.
    pub left_basis: DualBasisLeft,
    pub right_basis: DualBasisRight,
    /// `M^∨ ⊗_A M`
    pub mv_m: Arc<TensorProduct>,
    /// `M ⊗_B M^∨`
    pub m_mv: Arc<TensorProduct>,
    /// `ε_M: B → M^∨ ⊗_A M`
    pub eps_m: Matrix,
    /// `η_M: M ⊗_B M^∨ → A`
    pub eta_m: Matrix,
    /// `ε_{M^∨}: A → M ⊗_B M^∨`
    pub eps_mv: Matrix,
    /// `η_{M^∨}: M^∨ ⊗_A M → B`
    pub eta_mv: Matrix,
}

/// Which invariants of a pack hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackChecks {
    pub homs: [bool; 4],
    pub triangles: [bool; 4],
    pub unitdual: bool,
    pub counitdual: bool,
}

impl PackChecks {
    pub fn all(&self) -> bool {
        self.homs.iter().chain(&self.triangles).all(|&b| b) && self.unitdual && self.counitdual
    }
}

impl AdjunctionPack {
    pub fn build(m: &Bimodule) -> Result<Self, ModuleError> {
        let left = dual_basis_left(m)?;
        let right = dual_basis_right(m)?;
        Self::build_with(m, left, right)
    }

    /// Builds from given dual bases and verifies every invariant.
    pub fn build_with(m: &Bimodule, left: DualBasisLeft, right: DualBasisRight) -> Result<Self, ModuleError> {
        if !left.verify(m) || !right.verify(m) {
            return Err(ModuleError::Invalid("dual basis does not reconstruct the bimodule".into()));
        }
        let pack = Self::assemble(m, left, right);
        let checks = pack.checks();
        if !checks.all() {
            return Err(ModuleError::Invalid(format!("adjunction invariants fail: {checks:?}")));
        }
        Ok(pack)
    }

    fn assemble(m: &Bimodule, left: DualBasisLeft, right: DualBasisRight) -> Self {
        let (a, b) = (m.left().clone(), m.right().clone());
        let f = a.field();
        let mv = m.dual();
        let dm = m.dim();
        let mv_m = tensor_over(&mv, m);
        let m_mv = tensor_over(m, &mv);

        let mut x0 = vec![0u32; mv_m.dim()];
        for (alpha, mi) in &left.pairs {
            let phi = alpha.transpose().mul_vec(a.sform());
            add_into(f, &mut x0, &mv_m.pure(&phi, mi));
        }
        let cols: Vec<Vec<u32>> =
            (0..b.dim()).map(|j| mv_m.result.left_basis_action(j).mul_vec(&x0)).collect();
        let eps_m = Matrix::from_columns(f, mv_m.dim(), &cols);

        let mut x1 = vec![0u32; m_mv.dim()];
        for (beta, mj) in &right.pairs {
            let phi = beta.transpose().mul_vec(b.sform());
            add_into(f, &mut x1, &m_mv.pure(mj, &phi));
        }
        let cols: Vec<Vec<u32>> =
            (0..a.dim()).map(|i| m_mv.result.left_basis_action(i).mul_vec(&x1)).collect();
        let eps_mv = Matrix::from_columns(f, m_mv.dim(), &cols);

        let (ga, gb) = (gram_inverse(&a), gram_inverse(&b));
        let la: Vec<Matrix> = (0..a.dim()).map(|r| m.left_basis_action(r)).collect();
        let rb: Vec<Matrix> = (0..b.dim()).map(|r| m.right_basis_action(r)).collect();
        let mut raw = Matrix::zeros(f, a.dim(), dm * dm);
        let mut raw_v = Matrix::zeros(f, b.dim(), dm * dm);
        for i in 0..dm {
            for j in 0..dm {
                let w: Vec<u32> = la.iter().map(|l| l.get(j, i)).collect();
                for (r, v) in ga.mul_vec(&w).into_iter().enumerate() {
                    raw.set(r, i * dm + j, v);
                }
                let w: Vec<u32> = rb.iter().map(|x| x.get(j, i)).collect();
                for (r, v) in gb.mul_vec(&w).into_iter().enumerate() {
                    raw_v.set(r, j * dm + i, v);
                }
            }
        }
        let eta_m = raw.mul(&m_mv.sect);
        let eta_mv = raw_v.mul(&mv_m.sect);
        AdjunctionPack { m: m.clone(), mv, left_basis: left, right_basis: right, mv_m, m_mv, eps_m, eta_m, eps_mv, eta_mv }
    }

    /// The pack of `M^∨`, a `B`-`A`-bimodule, with the roles of the two
    /// adjunctions exchanged.
    pub fn dual(&self) -> AdjunctionPack {
        AdjunctionPack {
            m: self.mv.clone(),
            mv: self.m.clone(),
            left_basis: self.left_basis.clone(),
            right_basis: self.right_basis.clone(),
            mv_m: self.m_mv.clone(),
            m_mv: self.mv_m.clone(),
            eps_m: self.eps_mv.clone(),
            eta_m: self.eta_mv.clone(),
            eps_mv: self.eps_m.clone(),
            eta_mv: self.eta_m.clone(),
        }
    }

    pub fn checks(&self) -> PackChecks {
        let (m, mv) = (&self.m, &self.mv);
        let (ra, rb) = (Bimodule::regular(m.left()), Bimodule::regular(m.right()));
        let homs = [
            rb.is_hom_to(&self.mv_m.result, &self.eps_m),
            self.m_mv.result.is_hom_to(&ra, &self.eta_m),
            ra.is_hom_to(&self.m_mv.result, &self.eps_mv),
            self.mv_m.result.is_hom_to(&rb, &self.eta_mv),
        ];
        let triangles = [
            snake_a(m, mv, &self.eps_m, &self.eta_m) == identity(m),
            snake_b(m, mv, &self.eps_m, &self.eta_m) == identity(mv),
            snake_a(mv, m, &self.eps_mv, &self.eta_mv) == identity(mv),
            snake_b(mv, m, &self.eps_mv, &self.eta_mv) == identity(m),
        ];
        let ga = m.left().gram();
        let gb = m.right().gram();
        let unitdual = dual_tensor_iso(m, mv).mul(&self.eps_mv) == self.eta_m.transpose().mul(&ga.transpose());
        let counitdual = self.eps_m.transpose().mul(&dual_tensor_iso(mv, m)) == gb.transpose().mul(&self.eta_mv);
        PackChecks { homs, triangles, unitdual, counitdual }
    }
}

fn add_into(f: crate::exactla::Fp, acc: &mut [u32], v: &[u32]) {
    for (a, &b) in acc.iter_mut().zip(v) {
        *a = f.add(*a, b);
    }
}

/// `X → X ⊗ S → X ⊗ (Y ⊗ X) → (X ⊗ Y) ⊗ X → R ⊗ X → X` for
/// `unit: S → Y ⊗ X` and `counit: X ⊗ Y → R`.
pub fn snake_a(x: &Bimodule, y: &Bimodule, unit: &Matrix, counit: &Matrix) -> Matrix {
    let rho = right_unitor(x);
    let lam = left_unitor(x);
    let asc = associator(x, y, x);
    let step1 = tensor_maps((x, &Bimodule::regular(x.right())), (x, &asc.yz.result), &identity(x), unit);
    let step3 = tensor_maps((&asc.xy.result, x), (&Bimodule::regular(x.left()), x), counit, &identity(x));
    lam.to.mul(&step3).mul(&asc.r2l).mul(&step1).mul(&rho.from)
}

/// `Y → S ⊗ Y → (Y ⊗ X) ⊗ Y → Y ⊗ (X ⊗ Y) → Y ⊗ R → Y` for the same data.
pub fn snake_b(x: &Bimodule, y: &Bimodule, unit: &Matrix, counit: &Matrix) -> Matrix {
    let lam = left_unitor(y);
    let rho = right_unitor(y);
    let asc = associator(y, x, y);
    let step1 = tensor_maps((&Bimodule::regular(y.left()), y), (&asc.xy.result, y), unit, &identity(y));
    let step3 = tensor_maps((y, &asc.yz.result), (y, &Bimodule::regular(y.right())), &identity(y), counit);
    rho.to.mul(&step3).mul(&asc.l2r).mul(&step1).mul(&lam.from)
}

/// `N^∨ ⊗_B M^∨ → (M ⊗_B N)^∨`, `(t∘β) ⊗ μ ↦ (m ⊗ n ↦ μ(m β(n)))`, for an
/// `A`-`B`-bimodule `M` and a `B`-`C`-bimodule `N`.
pub fn dual_tensor_iso(m: &Bimodule, n: &Bimodule) -> Matrix {
    let b = m.right();
    let f = b.field();
    let (nv, mv) = (n.dual(), m.dual());
    let src = tensor_over(&nv, &mv);
    let tgt = tensor_over(m, n);
    let (dm, dn) = (m.dim(), n.dim());
    let h = gram_inverse(b);
    let ln: Vec<Matrix> = (0..b.dim()).map(|r| n.left_basis_action(r)).collect();
    let rm: Vec<Matrix> = (0..b.dim()).map(|c| m.right_basis_action(c)).collect();
    let mut raw = Matrix::zeros(f, dm * dn, dn * dm);
    for a in 0..dn {
        for j in 0..dn {
            let w: Vec<u32> = ln.iter().map(|l| l.get(a, j)).collect();
            let beta = h.mul_vec(&w);
            for bb in 0..dm {
                for i in 0..dm {
                    let mut v = 0;
                    for (c, r) in rm.iter().enumerate() {
                        v = f.add(v, f.mul(beta[c], r.get(bb, i)));
                    }
                    raw.set(i * dn + j, a * dm + bb, v);
                }
            }
        }
    }
    tgt.sect.transpose().mul(&raw).mul(&src.sect)
}

/// Different dual bases for the same bimodule: every `(α, m)` becomes
/// `(α·x, m), (α·(1 - x), m)` and every `(β, m)` becomes
/// `(y·β, m), ((1 - y)·β, m)`, followed by a reversal of the order.
pub fn split_bases(
    m: &Bimodule,
    left: &DualBasisLeft,
    right: &DualBasisRight,
    x: &[u32],
    y: &[u32],
) -> (DualBasisLeft, DualBasisRight) {
    let (a, b) = (m.left(), m.right());
    let f = a.field();
    let comp = |alg: &crate::algebra::Algebra, z: &[u32]| -> Vec<u32> {
        alg.unit().iter().zip(z).map(|(&u, &v)| f.sub(u, v)).collect()
    };
    let (rx, rx1) = (a.right_mult(x), a.right_mult(&comp(a, x)));
    let (ly, ly1) = (b.left_mult(y), b.left_mult(&comp(b, y)));
    let mut lp = Vec::new();
    for (alpha, mi) in &left.pairs {
        lp.push((rx.mul(alpha), mi.clone()));
        lp.push((rx1.mul(alpha), mi.clone()));
    }
    let mut rp = Vec::new();
    for (beta, mi) in &right.pairs {
        rp.push((ly.mul(beta), mi.clone()));
        rp.push((ly1.mul(beta), mi.clone()));
    }
    lp.reverse();
    rp.reverse();
    (DualBasisLeft { pairs: lp }, DualBasisRight { pairs: rp })
}
