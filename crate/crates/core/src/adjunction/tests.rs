use super::*;
use crate::algebra::{cyclic_table, group_algebra, truncated_poly, AlgebraMap};
use crate::exactla::Matrix;
use crate::modules::{tensor_over, Bimodule, Module, ModuleError};

fn c4_over_c2() -> Bimodule {
    let c4 = group_algebra(2, &cyclic_table(4)).unwrap();
    let c2 = group_algebra(2, &cyclic_table(2)).unwrap();
    let phi = AlgebraMap::from_basis_indices(c2, c4, &[0, 2]).unwrap();
    Bimodule::restricted_regular(&phi)
}

#[test]
fn regular_pack_builds() {
    let a = truncated_poly(2, 2).unwrap();
    let pack = AdjunctionPack::build(&Bimodule::regular(&a)).unwrap();
    assert!(pack.checks().all());
    assert_eq!(pack.eps_m.rows(), 2);
    assert!(pack.eps_m.is_invertible());
    assert!(pack.eta_m.is_invertible());
}

#[test]
fn induced_pack_builds_and_index_vanishes() {
    let m = c4_over_c2();
    let pack = AdjunctionPack::build(&m).unwrap();
    assert_eq!(pack.mv_m.dim(), 4);
    assert_eq!(pack.m_mv.dim(), 8);
    let f = m.left().field();
    assert_eq!(pack.eta_mv.mul(&pack.eps_m), Matrix::identity(f, 2));
    assert!(pack.eta_m.mul(&pack.eps_mv).is_zero());
    assert!(pack.dual().checks().all());
}

#[test]
fn non_projective_side_is_rejected() {
    let a = truncated_poly(2, 2).unwrap();
    let k = Module::simple_top(&a).unwrap();
    let err = AdjunctionPack::build(&Bimodule::from_left(&k)).unwrap_err();
    assert_eq!(err, ModuleError::NotProjective("left"));
}

#[test]
fn dual_tensor_iso_is_invertible() {
    let m = c4_over_c2();
    let c2 = m.right().clone();
    let n = Bimodule::regular(&c2);
    let d = dual_tensor_iso(&m, &n);
    assert_eq!(d.rows(), 4);
    assert!(d.is_invertible());
    let src = tensor_over(&n.dual(), &m.dual());
    let tgt = tensor_over(&m, &n).result.dual();
    assert!(src.result.is_hom_to(&tgt, &d));
    let a = truncated_poly(3, 3).unwrap();
    let r = Bimodule::regular(&a);
    assert!(dual_tensor_iso(&r, &r).is_invertible());
}

#[test]
fn unitors_and_associator_are_inverse_pairs() {
    let m = c4_over_c2();
    let l = left_unitor(&m);
    let r = right_unitor(&m);
    let id = Matrix::identity(m.left().field(), m.dim());
    assert_eq!(l.to.mul(&l.from), id);
    assert_eq!(r.to.mul(&r.from), id);
    assert!(l.tp.result.is_hom_to(&m, &l.to));
    let mv = m.dual();
    let asc = associator(&m, &mv, &m);
    let n = asc.xy_z.dim();
    assert_eq!(asc.l2r.mul(&asc.r2l), Matrix::identity(m.left().field(), n));
    assert!(asc.xy_z.result.is_hom_to(&asc.x_yz.result, &asc.l2r));
}

fn a4_b2_fixture() -> (AdjunctionPack, std::sync::Arc<Module>, std::sync::Arc<Module>) {
    let m = c4_over_c2();
    let pack = AdjunctionPack::build(&m).unwrap();
    let kb = Module::one_dimensional(m.right(), &[1, 1]).unwrap();
    let ka = Module::one_dimensional(m.left(), &[1, 1, 1, 1]).unwrap();
    (pack, ka, kb)
}

#[test]
fn adjunction_iso_is_invertible_on_fixtures() {
    let (pack, ka, kb) = a4_b2_fixture();
    let reg_a = Module::regular(pack.m.left());
    let reg_b = Module::regular(pack.m.right());
    for u in [&ka, &reg_a] {
        for v in [&kb, &reg_b] {
            let iso = adjunction_iso(&pack, u, v);
            assert!(iso.is_square());
            assert!(iso.is_invertible(), "{}x{}", iso.rows(), iso.cols());
        }
    }
    let a = truncated_poly(2, 2).unwrap();
    let rp = AdjunctionPack::build(&Bimodule::regular(&a)).unwrap();
    let k = Module::simple_top(&a).unwrap();
    assert!(adjunction_iso(&rp, &k, &k).is_invertible());
}

#[test]
fn left_mate_is_natural_in_the_target() {
    let (pack, ka, kb) = a4_b2_fixture();
    let reg_a = Module::regular(pack.m.left());
    let fv = induce(&pack, &kb);
    let (vb, ub, ub2) = (Bimodule::from_left(&kb), Bimodule::from_left(&reg_a), Bimodule::from_left(&ka));
    let homs = crate::modules::hom_space(&fv, &reg_a);
    let fs = crate::modules::hom_space(&reg_a, &ka);
    for phi in homs.maps() {
        for f in fs.maps() {
            let lhs = left_mate(&pack, &vb, &ub2, &f.mul(&phi));
            let gf = tensor_maps((&pack.mv, &ub), (&pack.mv, &ub2), &plumbing_identity(&pack.mv), &f);
            assert_eq!(lhs, gf.mul(&left_mate(&pack, &vb, &ub, &phi)));
        }
    }
}

fn plumbing_identity(x: &Bimodule) -> Matrix {
    Matrix::identity(x.left().field(), x.dim())
}

#[test]
fn unit_then_mirror_counit_is_identity() {
    let (pack, _, kb) = a4_b2_fixture();
    let vb = Bimodule::from_left(&kb);
    let u = unit_at(&pack, &vb);
    let c = counit_at(&pack, &vb);
    assert_eq!(c.mul(&u), Matrix::identity(kb.algebra().field(), 1));
}

mod transfer {
    use super::*;
    use crate::modules::{CoverMode, Tower};
    use crate::tate::{TateClass, Towers};

    #[test]
    fn regular_transfer_is_identity() {
        let a = truncated_poly(2, 2).unwrap();
        let pack = AdjunctionPack::build(&Bimodule::regular(&a)).unwrap();
        let towers = Towers::new(CoverMode::Minimal);
        let tr = HhTransfer::new(&pack, &towers);
        for n in -2..=2 {
            for z in TateClass::basis(&tr.tq, tr.tq.base(), n) {
                let t = tr.apply(&z).unwrap();
                assert!(t.same_class(&z), "degree {n}");
                assert!(tr.direct(&z).unwrap().same_class(&z));
            }
        }
    }

    #[test]
    fn route_matches_direct_formula() {
        let pack = AdjunctionPack::build(&c4_over_c2()).unwrap();
        let towers = Towers::new(CoverMode::Minimal);
        for p in [pack.clone(), pack.dual()] {
            let tr = HhTransfer::new(&p, &towers);
            for n in -2..=2 {
                for z in TateClass::basis(&tr.tq, tr.tq.base(), n) {
                    assert!(tr.apply(&z).unwrap().same_class(&tr.direct(&z).unwrap()), "degree {n}");
                }
            }
        }
    }

    #[test]
    fn ext_transfer_routes_agree() {
        let (pack, _, kb) = a4_b2_fixture();
        let et = ExtTransfer::new(&pack);
        let reg_b = Module::regular(pack.m.right());
        let tv = Tower::new(&kb, CoverMode::Minimal);
        let ft = et.induced_tower(&tv);
        for w in [&kb, &reg_b] {
            let fw = et.induce(w);
            for n in -2..=2 {
                for eta in TateClass::basis(&ft, &fw, n) {
                    let a = et.apply(&eta, &tv, w).unwrap();
                    assert!(a.same_class(&et.via_left_mate(&eta, &tv, w).unwrap()));
                    assert!(a.same_class(&et.via_mirror_mate(&eta, &tv, w).unwrap()));
                }
            }
        }
    }

    #[test]
    fn ext_transfer_of_regular_is_identity() {
        let a = truncated_poly(2, 2).unwrap();
        let pack = AdjunctionPack::build(&Bimodule::regular(&a)).unwrap();
        let et = ExtTransfer::new(&pack);
        let k = Module::simple_top(&a).unwrap();
        let tv = Tower::new(&k, CoverMode::Minimal);
        let ft = et.induced_tower(&tv);
        let fk = et.induce(&k);
        for n in -2..=2 {
            let src = TateClass::basis(&ft, &fk, n);
            let tgt = crate::tate::hat_ext(&tv, &k, n);
            assert_eq!(src.len(), tgt.dim());
            let cols: Vec<Vec<u32>> = src.iter().map(|e| tgt.class_of(&et.apply(e, &tv, &k).unwrap().rep)).collect();
            let m = Matrix::from_columns(a.field(), tgt.dim(), &cols);
            assert!(m.is_invertible());
        }
    }
}

mod special {
    use super::*;
    use crate::modules::{projective_cover, CoverMode};

    #[test]
    fn tau_on_regular_is_the_form_iso() {
        let a = truncated_poly(3, 3).unwrap();
        let reg = Module::regular(&a);
        let t = tau_map(&reg, a.sform());
        assert_eq!(t, a.gram().transpose());
        assert!(reg.is_hom_to(&a_dual(&a), &t));
    }

    #[test]
    fn special_maps_are_isomorphisms() {
        let (pack, ka, _) = a4_b2_fixture();
        for u in [ka.clone(), Module::regular(pack.m.left())] {
            let s = special_adjunctions(&u);
            assert_eq!(s.tau.rows(), u.dim());
            assert!(s.tau.is_invertible());
            assert!(s.beta.is_invertible());
            assert!(trace_matches_evaluation(&u));
        }
    }

    #[test]
    fn mate_traces_on_projectives() {
        let (pack, ka, _) = a4_b2_fixture();
        let a = pack.m.left().clone();
        let q = Module::regular(pack.m.right());
        assert!(mate_traces_agree(&pack, &Module::regular(&a), &q));
        let p0 = projective_cover(&ka, CoverMode::Free).p;
        assert!(mate_traces_agree(&pack, &p0, &q));
    }
}

#[test]
fn structure_maps_do_not_depend_on_dual_bases() {
    for m in [c4_over_c2(), Bimodule::regular(&truncated_poly(3, 3).unwrap())] {
        let pack = AdjunctionPack::build(&m).unwrap();
        let (a, b) = (m.left(), m.right());
        let x: Vec<u32> = (0..a.dim()).map(|i| (i as u32 * 7 + 1) % a.p()).collect();
        let y: Vec<u32> = (0..b.dim()).map(|i| (i as u32 + 1) % b.p()).collect();
        let (l, r) = split_bases(&m, &pack.left_basis, &pack.right_basis, &x, &y);
        assert_eq!(l.pairs.len(), 2 * pack.left_basis.pairs.len());
        let other = AdjunctionPack::build_with(&m, l, r).unwrap();
        assert_eq!(other.eps_m, pack.eps_m);
        assert_eq!(other.eps_mv, pack.eps_mv);
        assert_eq!(other.eta_m, pack.eta_m);
        assert_eq!(other.eta_mv, pack.eta_mv);
    }
}
