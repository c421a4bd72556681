//! JSON algebra definitions.

use super::{Algebra, AlgebraError};
use crate::exactla::{is_prime, Fp, Subspace};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// On-disk algebra definition. `mul` lists sparse triples `[i, j, k, c]`
/// meaning `e_i e_j` has coefficient `c` on `e_k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraDef {
    pub name: String,
    #[serde(rename = "char")]
    pub p: u32,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<i64>,
    pub mul: Vec<[i64; 4]>,
    pub sform: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical: Option<Vec<Vec<i64>>>,
}

impl AlgebraDef {
    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra definitions serialize")
    }

    /// Validates and builds the algebra; a supplied radical is verified too.
    pub fn build(&self) -> Result<Arc<Algebra>, AlgebraError> {
        if !is_prime(self.p) {
            return Err(AlgebraError::Malformed(format!("characteristic {} is not prime", self.p)));
        }
        let f = Fp::new(self.p);
        let n = self.dim;
        let check_len = |what: &str, len: usize| {
            if len != n {
                Err(AlgebraError::Malformed(format!("{what} has length {len}, expected {n}")))
            } else {
                Ok(())
            }
        };
        check_len("basis", self.basis.len())?;
        check_len("unit", self.unit.len())?;
        check_len("sform", self.sform.len())?;
        let mut mul = vec![0u32; n * n * n];
        for t in &self.mul {
            let idx: Vec<usize> = t[..3]
                .iter()
                .map(|&x| usize::try_from(x).ok().filter(|&x| x < n))
                .collect::<Option<_>>()
                .ok_or_else(|| AlgebraError::Malformed(format!("triple {t:?} out of range")))?;
            let slot = &mut mul[(idx[0] * n + idx[1]) * n + idx[2]];
            *slot = f.add(*slot, f.reduce(t[3]));
        }
        let red = |v: &[i64]| v.iter().map(|&x| f.reduce(x)).collect::<Vec<u32>>();
        let a = Algebra::new(
            self.name.clone(),
            f,
            self.basis.clone(),
            mul,
            red(&self.unit),
            red(&self.sform),
        )?;
        match &self.radical {
            None => Ok(a),
            Some(vs) => {
                if let Some(v) = vs.iter().find(|v| v.len() != n) {
                    return Err(AlgebraError::Malformed(format!(
                        "radical vector of length {}, expected {n}",
                        v.len()
                    )));
                }
                let rad = Subspace::from_vectors(f, n, vs.iter().map(|v| red(v)).collect());
                a.with_radical(rad)
            }
        }
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        let n = a.dim();
        let mut mul = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = a.structure_constant(i, j, k);
                    if c != 0 {
                        mul.push([i as i64, j as i64, k as i64, c as i64]);
                    }
                }
            }
        }
        let wide = |v: &[u32]| v.iter().map(|&x| x as i64).collect();
        AlgebraDef {
            name: a.name().to_string(),
            p: a.p(),
            dim: n,
            basis: a.labels().to_vec(),
            unit: wide(a.unit()),
            mul,
            sform: wide(a.sform()),
            radical: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::truncated_poly;

    const DUAL_NUMBERS: &str = r#"{
        "name": "A2", "char": 2, "dim": 2, "basis": ["1", "x"],
        "unit": [1, 0],
        "mul": [[0,0,0,1],[0,1,1,1],[1,0,1,1]],
        "sform": [0, 1]
    }"#;

    #[test]
    fn loads_and_round_trips() {
        let def = AlgebraDef::from_json(DUAL_NUMBERS).unwrap();
        let a = def.build().unwrap();
        assert!(a.same_structure(&truncated_poly(2, 2).unwrap()));
        let again = AlgebraDef::from_json(&AlgebraDef::from_algebra(&a).to_json()).unwrap();
        assert!(again.build().unwrap().same_structure(&a));
    }

    #[test]
    fn degenerate_form_from_file() {
        let mut def = AlgebraDef::from_json(DUAL_NUMBERS).unwrap();
        def.sform = vec![1, 0];
        assert!(matches!(def.build(), Err(AlgebraError::FormDegenerate(_))));
    }

    #[test]
    fn supplied_radical_is_checked() {
        let mut def = AlgebraDef::from_json(DUAL_NUMBERS).unwrap();
        def.radical = Some(vec![vec![0, 1]]);
        let a = def.build().unwrap();
        assert_eq!(a.radical_basis().basis_vectors(), vec![vec![0, 1]]);
        def.radical = Some(vec![vec![1, 0]]);
        assert!(matches!(def.build(), Err(AlgebraError::BadRadical(_))));
        def.radical = Some(vec![]);
        assert!(matches!(def.build(), Err(AlgebraError::BadRadical(_))));
    }

    #[test]
    fn malformed_inputs() {
        assert!(AlgebraDef::from_json("{").is_err());
        let mut def = AlgebraDef::from_json(DUAL_NUMBERS).unwrap();
        def.mul.push([0, 5, 0, 1]);
        assert!(matches!(def.build(), Err(AlgebraError::Malformed(_))));
    }
}
