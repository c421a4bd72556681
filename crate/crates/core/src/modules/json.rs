//! JSON module and bimodule definitions. Algebras are referenced by name
//! and resolved by the caller.

use super::{Bimodule, Module, ModuleError};
use crate::algebra::Algebra;
use crate::exactla::{Fp, Matrix};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// A left module: `action[i]` is the `dim × dim` matrix of basis element
/// `e_i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleDef {
    pub algebra: String,
    pub dim: usize,
    pub action: Vec<Vec<Vec<i64>>>,
}

/// Either one matrix per basis element `e_i ⊗ f_j` of `A ⊗ B^0` (index
/// `i · dim B + j`), or separate lists for the two sides.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BimoduleAction {
    Sides { left: Vec<Vec<Vec<i64>>>, right: Vec<Vec<Vec<i64>>> },
    Enveloping(Vec<Vec<Vec<i64>>>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BimoduleDef {
    pub left_algebra: String,
    pub right_algebra: String,
    pub dim: usize,
    pub action: BimoduleAction,
}

fn matrices(f: Fp, dim: usize, raw: &[Vec<Vec<i64>>], count: usize, what: &str) -> Result<Vec<Matrix>, ModuleError> {
    if raw.len() != count {
        return Err(ModuleError::Malformed(format!("{what}: {} matrices, expected {count}", raw.len())));
    }
    raw.iter()
        .map(|m| {
            if m.len() != dim || m.iter().any(|r| r.len() != dim) {
                return Err(ModuleError::Malformed(format!("{what}: matrix is not {dim} x {dim}")));
            }
            let data = m.iter().flatten().map(|&x| f.reduce(x)).collect();
            Ok(Matrix::from_data(f, dim, dim, data))
        })
        .collect()
}

fn to_raw(m: &Matrix) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|&x| x as i64).collect()).collect()
}

impl ModuleDef {
    pub fn from_json(text: &str) -> Result<Self, ModuleError> {
        serde_json::from_str(text).map_err(|e| ModuleError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("module definitions serialize")
    }

    pub fn build(&self, alg: &Arc<Algebra>) -> Result<Arc<Module>, ModuleError> {
        let act = matrices(alg.field(), self.dim, &self.action, alg.dim(), "action")?;
        Module::new(alg.clone(), act)
    }

    pub fn from_module(m: &Module) -> Self {
        ModuleDef {
            algebra: m.algebra().name().to_string(),
            dim: m.dim(),
            action: m.actions().iter().map(to_raw).collect(),
        }
    }
}

impl BimoduleDef {
    pub fn from_json(text: &str) -> Result<Self, ModuleError> {
        serde_json::from_str(text).map_err(|e| ModuleError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bimodule definitions serialize")
    }

    pub fn build(&self, left: &Arc<Algebra>, right: &Arc<Algebra>) -> Result<Bimodule, ModuleError> {
        let f = left.field();
        if right.p() != left.p() {
            return Err(ModuleError::AlgebraMismatch("sides have different characteristics".into()));
        }
        match &self.action {
            BimoduleAction::Sides { left: l, right: r } => {
                let l = matrices(f, self.dim, l, left.dim(), "left action")?;
                let r = matrices(f, self.dim, r, right.dim(), "right action")?;
                Bimodule::from_sides(left.clone(), right.clone(), &l, &r)
            }
            BimoduleAction::Enveloping(raw) => {
                let env = crate::algebra::bimodule_algebra(left, right);
                let act = matrices(f, self.dim, raw, env.dim(), "action")?;
                let m = Module::new(env, act)?;
                Bimodule::new(left.clone(), right.clone(), m)
            }
        }
    }

    pub fn from_bimodule(m: &Bimodule) -> Self {
        BimoduleDef {
            left_algebra: m.left().name().to_string(),
            right_algebra: m.right().name().to_string(),
            dim: m.dim(),
            action: BimoduleAction::Sides {
                left: (0..m.left().dim()).map(|i| to_raw(&m.left_basis_action(i))).collect(),
                right: (0..m.right().dim()).map(|j| to_raw(&m.right_basis_action(j))).collect(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic_table, group_algebra, truncated_poly, AlgebraMap};

    #[test]
    fn module_round_trip_and_rejection() {
        let a = truncated_poly(2, 2).unwrap();
        let k = Module::simple_top(&a).unwrap();
        let def = ModuleDef::from_json(&ModuleDef::from_module(&k).to_json()).unwrap();
        let back = def.build(&a).unwrap();
        assert_eq!(back.actions(), k.actions());
        let mut bad = def.clone();
        bad.action[1] = vec![vec![1]];
        assert!(matches!(bad.build(&a), Err(ModuleError::Invalid(_))));
        bad.action.pop();
        assert!(matches!(bad.build(&a), Err(ModuleError::Malformed(_))));
    }

    #[test]
    fn bimodule_round_trip() {
        let c4 = group_algebra(2, &cyclic_table(4)).unwrap();
        let c2 = group_algebra(2, &cyclic_table(2)).unwrap();
        let phi = AlgebraMap::from_basis_indices(c2.clone(), c4.clone(), &[0, 2]).unwrap();
        let m = Bimodule::restricted_regular(&phi);
        let def = BimoduleDef::from_json(&BimoduleDef::from_bimodule(&m).to_json()).unwrap();
        let back = def.build(&c4, &c2).unwrap();
        assert_eq!(back.module().actions(), m.module().actions());
    }
}
