//! Nonvanishing products in negative degrees: for a module `U`, every
//! nonzero class `ζ` gets a partner `η` with `⟨ζ, η⟩ ≠ 0`, and the product
//! `ζη` is checked to be nonzero; in Hochschild mode, pairs of negative
//! degrees are searched for nonzero products.

use super::par::{degrees, map_ordered};
use super::report::ENGINE_VERSION;
use super::HarnessError;
use crate::algebra::Algebra;
use crate::exactla::{Matrix, Subspace};
use crate::modules::{CoverMode, Module, Tower};
use crate::tate::{pairing, regular_bimodule, yoneda, TateClass, Towers};
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use std::time::Instant;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Degree of `ζ`.
    pub degree: i32,
    /// Index of `ζ` in the stable Hom basis.
    pub zeta: usize,
    /// Index of `η` in the basis of degree `-1 - degree`.
    pub eta: usize,
    pub pairing: u32,
    /// Coordinates of `ζη` in degree `-1`.
    pub product: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductFinding {
    pub m: i32,
    pub n: i32,
    pub dims: (usize, usize, usize),
    /// Basis pairs `(i, j)` with a nonzero product.
    pub nonzero_pairs: Vec<(usize, usize)>,
    /// Dimension of the span of all products in degree `m + n`.
    pub span: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub algebra: String,
    pub mode: String,
    pub window: (i32, i32),
    pub witnesses: Vec<Witness>,
    /// Nonzero classes without a witness; a nonempty list fails the search.
    pub unwitnessed: Vec<(i32, usize)>,
    pub findings: Vec<ProductFinding>,
    pub pass: bool,
    pub engine_version: String,
    pub elapsed_ms: u64,
}

fn witnesses_in_degree(t: &Arc<Tower>, d: i32) -> Result<(Vec<Witness>, Vec<(i32, usize)>), HarnessError> {
    let u = t.base();
    let zs = TateClass::basis(t, u, d);
    let es = TateClass::basis(t, u, -1 - d);
    let (mut found, mut missing) = (Vec::new(), Vec::new());
    for (i, z) in zs.iter().enumerate() {
        if z.is_zero() {
            continue;
        }
        let mut hit = None;
        for (j, e) in es.iter().enumerate() {
            let p = pairing(z, e)?;
            if p != 0 {
                let prod = yoneda(z, e)?;
                if !prod.is_zero() {
                    hit = Some(Witness { degree: d, zeta: i, eta: j, pairing: p, product: prod.coords() });
                    break;
                }
            }
        }
        match hit {
            Some(w) => found.push(w),
            None => missing.push((d, i)),
        }
    }
    Ok((found, missing))
}

/// Witnesses for every nonzero basis class of `\hat{Ext}^d(U, U)`, `d` in
/// the window.
pub fn search_module(u: &Arc<Module>, window: (i32, i32), mode: CoverMode) -> Result<SearchReport, HarnessError> {
    let start = Instant::now();
    let t = Towers::new(mode).of(u);
    let per: Vec<_> = map_ordered(&degrees(window), |&d| witnesses_in_degree(&t, d)).into_iter().collect::<Result<_, _>>()?;
    let (mut witnesses, mut unwitnessed) = (Vec::new(), Vec::new());
    for (w, m) in per {
        witnesses.extend(w);
        unwitnessed.extend(m);
    }
    Ok(SearchReport {
        algebra: u.algebra().name().to_string(),
        mode: "module".into(),
        window,
        pass: unwitnessed.is_empty(),
        witnesses,
        unwitnessed,
        findings: Vec::new(),
        engine_version: ENGINE_VERSION.into(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// The products `\hat{HH}^m(A) × \hat{HH}^n(A) → \hat{HH}^{m+n}(A)` over
/// basis pairs.
pub fn hh_products(t: &Arc<Tower>, m: i32, n: i32) -> Result<ProductFinding, HarnessError> {
    let r = t.base();
    let zs = TateClass::basis(t, r, m);
    let es = TateClass::basis(t, r, n);
    let target_dim = crate::tate::hat_ext(t, r, m + n).dim();
    let fld = r.algebra().field();
    let mut nonzero_pairs = Vec::new();
    let mut rows = Vec::new();
    for (i, z) in zs.iter().enumerate() {
        for (j, e) in es.iter().enumerate() {
            let p = yoneda(z, e)?;
            let c = p.coords();
            if c.iter().any(|&x| x != 0) {
                nonzero_pairs.push((i, j));
            }
            rows.push(c);
        }
    }
    let span = if rows.is_empty() || target_dim == 0 {
        0
    } else {
        let flat: Vec<u32> = rows.concat();
        Subspace::row_space(&Matrix::from_vec(fld, rows.len(), target_dim, &flat)).dim()
    };
    Ok(ProductFinding { m, n, dims: (zs.len(), es.len(), target_dim), nonzero_pairs, span })
}

/// Pairs `m ≤ n` of negative degrees in the window; findings list only the
/// pairs with some nonzero product.
pub fn search_hh(a: &Arc<Algebra>, window: (i32, i32), mode: CoverMode) -> Result<SearchReport, HarnessError> {
    let start = Instant::now();
    let t = Towers::new(mode).of(&regular_bimodule(a));
    let hi = window.1.min(-1);
    let mut pairs = Vec::new();
    for m in window.0..=hi {
        for n in m..=hi {
            pairs.push((m, n));
        }
    }
    let all: Vec<ProductFinding> =
        map_ordered(&pairs, |&(m, n)| hh_products(&t, m, n)).into_iter().collect::<Result<_, _>>()?;
    Ok(SearchReport {
        algebra: a.name().to_string(),
        mode: "hh".into(),
        window,
        witnesses: Vec::new(),
        unwitnessed: Vec::new(),
        findings: all.into_iter().filter(|f| !f.nonzero_pairs.is_empty()).collect(),
        pass: true,
        engine_version: ENGINE_VERSION.into(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::truncated_poly;
    use crate::harness::fixtures::trivial;

    #[test]
    fn every_class_of_the_dual_numbers_is_witnessed() {
        let a = truncated_poly(2, 2).unwrap();
        let r = search_module(&trivial(&a), (-3, 2), CoverMode::Minimal).unwrap();
        assert!(r.pass);
        assert_eq!(r.witnesses.len(), 6);
        assert!(r.witnesses.iter().all(|w| w.pairing != 0 && w.product.iter().any(|&c| c != 0)));
    }

    #[test]
    fn projective_module_has_nothing_to_witness() {
        let a = truncated_poly(2, 2).unwrap();
        let r = search_module(&Module::regular(&a), (-2, 1), CoverMode::Minimal).unwrap();
        assert!(r.pass);
        assert!(r.witnesses.is_empty());
    }

    // Brute force over all elements of HH^{-1}(A2) = GF(2)^2: the product into
    // HH^{-2} is multiplication in k[x]/(x^2) through periodicity, so it is
    // symmetric, its image is two-dimensional and exactly two elements square
    // to zero (0 and x).
    #[test]
    fn dual_numbers_negative_products_match_multiplication() {
        let a = truncated_poly(2, 2).unwrap();
        let t = Towers::new(CoverMode::Minimal).of(&regular_bimodule(&a));
        let f = hh_products(&t, -1, -1).unwrap();
        assert_eq!(f.dims, (2, 2, 2));
        assert_eq!(f.span, 2);
        let basis = TateClass::basis(&t, t.base(), -1);
        let combo = |c: [u32; 2]| {
            let rep = basis[0].rep.scale(c[0]).add(&basis[1].rep.scale(c[1]));
            TateClass::new(t.clone(), t.base().clone(), -1, rep).unwrap()
        };
        let mut square_zero = 0;
        for c0 in 0..2 {
            for c1 in 0..2 {
                let z = combo([c0, c1]);
                if yoneda(&z, &z).unwrap().is_zero() {
                    square_zero += 1;
                }
                for d0 in 0..2 {
                    for d1 in 0..2 {
                        let e = combo([d0, d1]);
                        assert!(yoneda(&z, &e).unwrap().same_class(&yoneda(&e, &z).unwrap()));
                    }
                }
            }
        }
        assert_eq!(square_zero, 2);
        let r = search_hh(&a, (-2, -1), CoverMode::Minimal).unwrap();
        assert!(r.findings.iter().any(|f| f.m == -1 && f.n == -1));
    }
}
