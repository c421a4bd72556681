//! Command-line inputs: algebras and modules given as JSON files or by
//! short name, and `a..b` degree windows.

use super::fixtures::{registry_algebras, trivial};
use super::HarnessError;
use crate::algebra::{validate_algebra, Algebra, AlgebraDef};
use crate::modules::{Module, ModuleDef};
use std::path::Path;
use std::sync::Arc;

const ALIASES: [(&str, usize); 5] = [("a2", 0), ("a4", 1), ("c3", 2), ("s3", 3), ("c2", 4)];

/// A registry algebra by alias (`a2`, `a4`, `c3`, `s3`, `c2`) or full name,
/// or an algebra definition file.
pub fn resolve_algebra(spec: &str) -> Result<Arc<Algebra>, HarnessError> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| HarnessError::Io(format!("{spec}: {e}")))?;
        return Ok(validate_algebra(&AlgebraDef::from_json(&text)?)?);
    }
    let algs = registry_algebras()?;
    if let Some(&(_, i)) = ALIASES.iter().find(|(a, _)| *a == spec) {
        return Ok(algs[i].clone());
    }
    algs.into_iter()
        .find(|a| a.name() == spec)
        .ok_or_else(|| HarnessError::Io(format!("{spec}: no such file or registry algebra")))
}

/// `k` (the trivial module), `regular`, or a module definition file over `a`.
pub fn resolve_module(spec: &str, a: &Arc<Algebra>) -> Result<Arc<Module>, HarnessError> {
    match spec {
        "k" => Ok(trivial(a)),
        "regular" => Ok(Module::regular(a)),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{path}: {e}")))?;
            Ok(ModuleDef::from_json(&text)?.build(a)?)
        }
    }
}

/// `a..b` with `a ≤ b`; a single integer is a one-degree window.
pub fn parse_window(s: &str) -> Result<(i32, i32), String> {
    let parse = |t: &str| t.trim().parse::<i32>().map_err(|e| format!("bad degree '{t}': {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let n = parse(s)?;
            (n, n)
        }
    };
    if a > b {
        return Err(format!("empty window {a}..{b}"));
    }
    Ok((a, b))
}
