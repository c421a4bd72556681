//! Named fixtures: a bimodule `M` over `(A, B)` with test modules on both
//! sides, either from the built-in registry or from a JSON file.

use super::HarnessError;
use crate::algebra::{
    cyclic_table, group_algebra_named, symmetric_group_s3_table, truncated_poly, Algebra, AlgebraDef, AlgebraMap,
};
use crate::modules::{dual_basis_left, dual_basis_right, Bimodule, BimoduleDef, Module, ModuleDef};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

pub const DEFAULT_WINDOW: (i32, i32) = (-3, 3);

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub a: Arc<Algebra>,
    pub b: Arc<Algebra>,
    pub m: Bimodule,
    /// Left `A`-modules.
    pub modules_a: Vec<(String, Arc<Module>)>,
    /// Left `B`-modules, the `V`, `W` of the Ext transfer.
    pub modules_b: Vec<(String, Arc<Module>)>,
    pub window: (i32, i32),
}

/// The trivial module of an augmented algebra with augmentation `1` on every
/// basis element (group algebras) or the simple top of a local algebra.
pub fn trivial(a: &Arc<Algebra>) -> Arc<Module> {
    Module::one_dimensional(a, &vec![1; a.dim()])
        .or_else(|_| Module::simple_top(a))
        .expect("algebra has a one-dimensional module")
}

fn standard_modules(a: &Arc<Algebra>) -> Vec<(String, Arc<Module>)> {
    vec![("k".to_string(), trivial(a)), ("regular".to_string(), Module::regular(a))]
}

impl Fixture {
    pub fn new(name: &str, m: Bimodule, window: (i32, i32)) -> Result<Self, HarnessError> {
        dual_basis_left(&m)?;
        dual_basis_right(&m)?;
        let (a, b) = (m.left().clone(), m.right().clone());
        Ok(Fixture {
            name: name.to_string(),
            modules_a: standard_modules(&a),
            modules_b: standard_modules(&b),
            a,
            b,
            m,
            window,
        })
    }

    pub fn module_b(&self, name: &str) -> Option<&Arc<Module>> {
        self.modules_b.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

fn restriction(a: Arc<Algebra>, b: Arc<Algebra>, indices: &[usize]) -> Result<Bimodule, HarnessError> {
    let phi = AlgebraMap::from_basis_indices(b, a, indices)?;
    Ok(Bimodule::restricted_regular(&phi))
}

pub const REGISTRY: [&str; 5] = ["a2", "c4-c2", "c3", "s3-c3", "semisimple"];

/// The algebras behind the registry: `GF(2)[x]/(x^2)`, `GF(2)[x]/(x^4)`,
/// `GF(3)C_3`, `GF(3)S_3` and the semisimple `GF(3)C_2`.
pub fn registry_algebras() -> Result<Vec<Arc<Algebra>>, HarnessError> {
    Ok(vec![
        truncated_poly(2, 2)?,
        truncated_poly(2, 4)?,
        group_algebra_named("GF(3)C3", 3, &cyclic_table(3))?,
        group_algebra_named("GF(3)S3", 3, &symmetric_group_s3_table())?,
        group_algebra_named("GF(3)C2", 3, &cyclic_table(2))?,
    ])
}

pub fn registry(name: &str) -> Result<Fixture, HarnessError> {
    let w = DEFAULT_WINDOW;
    match name {
        "a2" => {
            let a = truncated_poly(2, 2)?;
            Fixture::new(name, Bimodule::regular(&a), w)
        }
        "c4-c2" => {
            let a = group_algebra_named("GF(2)C4", 2, &cyclic_table(4))?;
            let b = group_algebra_named("GF(2)C2", 2, &cyclic_table(2))?;
            Fixture::new(name, restriction(a, b, &[0, 2])?, w)
        }
        "c3" => {
            let a = group_algebra_named("GF(3)C3", 3, &cyclic_table(3))?;
            Fixture::new(name, Bimodule::regular(&a), w)
        }
        "s3-c3" => {
            let a = group_algebra_named("GF(3)S3", 3, &symmetric_group_s3_table())?;
            let b = group_algebra_named("GF(3)C3", 3, &cyclic_table(3))?;
            Fixture::new(name, restriction(a, b, &[0, 1, 2])?, w)
        }
        "semisimple" => {
            let a = group_algebra_named("GF(3)C2", 3, &cyclic_table(2))?;
            Fixture::new(name, Bimodule::regular(&a), w)
        }
        _ => Err(HarnessError::UnknownFixture(name.to_string())),
    }
}

/// A fixture file: algebras by name, the bimodule, optional extra `B`-modules
/// and an optional degree window.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureDef {
    pub name: String,
    pub algebras: Vec<AlgebraDef>,
    pub bimodule: BimoduleDef,
    #[serde(default)]
    pub modules: Vec<ModuleDef>,
    #[serde(default)]
    pub window: Option<(i32, i32)>,
}

impl FixtureDef {
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        serde_json::from_str(text).map_err(|e| HarnessError::Malformed(e.to_string()))
    }

    pub fn build(&self) -> Result<Fixture, HarnessError> {
        let algs: Vec<Arc<Algebra>> = self.algebras.iter().map(|d| d.build()).collect::<Result<_, _>>()?;
        let find = |n: &str| {
            algs.iter()
                .find(|a| a.name() == n)
                .cloned()
                .ok_or_else(|| HarnessError::Malformed(format!("unknown algebra {n}")))
        };
        let a = find(&self.bimodule.left_algebra)?;
        let b = find(&self.bimodule.right_algebra)?;
        let m = self.bimodule.build(&a, &b)?;
        let mut fx = Fixture::new(&self.name, m, self.window.unwrap_or(DEFAULT_WINDOW))?;
        for (i, d) in self.modules.iter().enumerate() {
            let alg = find(&d.algebra)?;
            let module = d.build(&alg)?;
            if alg.same_structure(&fx.b) {
                fx.modules_b.push((format!("module{i}"), module.view_over(&fx.b)));
            } else if alg.same_structure(&fx.a) {
                fx.modules_a.push((format!("module{i}"), module.view_over(&fx.a)));
            } else {
                return Err(HarnessError::Malformed(format!("module {i} is over neither side")));
            }
        }
        Ok(fx)
    }

    pub fn from_fixture(fx: &Fixture) -> Self {
        let mut algebras = vec![AlgebraDef::from_algebra(&fx.a)];
        if fx.b.name() != fx.a.name() {
            algebras.push(AlgebraDef::from_algebra(&fx.b));
        }
        FixtureDef {
            name: fx.name.clone(),
            algebras,
            bimodule: BimoduleDef::from_bimodule(&fx.m),
            modules: Vec::new(),
            window: Some(fx.window),
        }
    }
}

/// A registry name or a path to a fixture file.
pub fn load(spec: &str) -> Result<Fixture, HarnessError> {
    if REGISTRY.contains(&spec) {
        return registry(spec);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| HarnessError::Io(format!("{spec}: {e}")))?;
    FixtureDef::from_json(&text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_fixtures_build() {
        for name in REGISTRY {
            let fx = registry(name).unwrap();
            assert!(fx.m.module().validate().is_ok(), "{name}");
            assert_eq!(fx.modules_b.len(), 2);
        }
        assert!(matches!(registry("nope"), Err(HarnessError::UnknownFixture(_))));
    }

    #[test]
    fn fixture_file_round_trip() {
        let fx = registry("c4-c2").unwrap();
        let def = FixtureDef::from_fixture(&fx);
        let text = serde_json::to_string(&def).unwrap();
        let back = FixtureDef::from_json(&text).unwrap().build().unwrap();
        assert_eq!(back.m.dim(), 4);
        assert_eq!(back.b.dim(), 2);
        assert_eq!(back.window, DEFAULT_WINDOW);
    }

    #[test]
    fn non_projective_bimodule_is_rejected() {
        let a = truncated_poly(2, 2).unwrap();
        let k = Module::simple_top(&a).unwrap();
        let err = Fixture::new("bad", Bimodule::from_left(&k), DEFAULT_WINDOW).unwrap_err();
        assert!(err.to_string().contains("not projective"));
    }
}
