//! Per-degree verdicts and the JSON report format.

use crate::exactla::Matrix;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// `left = λ · right` for the `λ` returned, if any; `Some(1)` when equal.
pub fn scalar_ratio(left: &Matrix, right: &Matrix) -> Option<u32> {
    if left.rows() != right.rows() || left.cols() != right.cols() {
        return None;
    }
    if left == right {
        return Some(1);
    }
    let f = left.field();
    let pos = right.data().iter().position(|&x| x != 0)?;
    let lambda = f.mul(left.data()[pos], f.inv(right.data()[pos]));
    (lambda != 0 && right.scale(lambda) == *left).then_some(lambda)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVerdict {
    pub n: i32,
    pub dims: BTreeMap<String, usize>,
    pub exact: bool,
    pub scalar: Option<u32>,
}

impl DegreeVerdict {
    pub fn compare(n: i32, dims: BTreeMap<String, usize>, left: &Matrix, right: &Matrix) -> Self {
        let scalar = scalar_ratio(left, right);
        DegreeVerdict { n, dims, exact: scalar == Some(1), scalar }
    }

    /// A yes/no check with no matrices behind it.
    pub fn flag(n: i32, dims: BTreeMap<String, usize>, ok: bool) -> Self {
        DegreeVerdict { n, dims, exact: ok, scalar: ok.then_some(1) }
    }

    pub fn passes(&self, allow_scalar: bool) -> bool {
        self.exact || (allow_scalar && self.scalar.is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub diagram: String,
    pub fixture: String,
    pub degrees: Vec<DegreeVerdict>,
    pub pass: bool,
    pub engine_version: String,
    pub elapsed_ms: u64,
}

impl DiagramReport {
    pub fn new(diagram: &str, fixture: &str, degrees: Vec<DegreeVerdict>, elapsed_ms: u64) -> Self {
        let pass = degrees.iter().all(|d| d.exact);
        DiagramReport {
            diagram: diagram.to_string(),
            fixture: fixture.to_string(),
            degrees,
            pass,
            engine_version: ENGINE_VERSION.to_string(),
            elapsed_ms,
        }
    }

    /// Re-evaluates `pass`, accepting unit scalars when allowed.
    pub fn with_policy(mut self, allow_scalar: bool) -> Self {
        self.pass = self.degrees.iter().all(|d| d.passes(allow_scalar));
        self
    }

    /// Whether some degree only holds up to a scalar other than 1.
    pub fn has_scalar(&self) -> bool {
        self.degrees.iter().any(|d| !d.exact && d.scalar.is_some())
    }
}

pub fn dims<const N: usize>(entries: [(&str, usize); N]) -> BTreeMap<String, usize> {
    entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Fp;

    #[test]
    fn ratio_detects_scalars() {
        let f = Fp::new(5);
        let a = Matrix::from_rows(f, &[vec![1, 2], vec![0, 3]]);
        assert_eq!(scalar_ratio(&a, &a), Some(1));
        assert_eq!(scalar_ratio(&a.scale(3), &a), Some(3));
        assert_eq!(scalar_ratio(&a.scale(0), &a), None);
        let z = Matrix::zeros(f, 2, 2);
        assert_eq!(scalar_ratio(&z, &z), Some(1));
        assert_eq!(scalar_ratio(&a, &z), None);
        let b = Matrix::from_rows(f, &[vec![1, 2], vec![0, 4]]);
        assert_eq!(scalar_ratio(&b, &a), None);
    }

    #[test]
    fn scalar_policy() {
        let f = Fp::new(3);
        let a = Matrix::identity(f, 2);
        let v = DegreeVerdict::compare(0, dims([("x", 2)]), &a.scale(2), &a);
        assert!(!v.exact);
        assert_eq!(v.scalar, Some(2));
        let r = DiagramReport::new("d", "fx", vec![v], 0);
        assert!(!r.pass);
        assert!(r.has_scalar());
        assert!(r.with_policy(true).pass);
    }
}
