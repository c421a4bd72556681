//! Verification drivers behind the CLI: fixtures, per-degree verdicts and
//! the JSON report format.

pub mod fixtures;
pub mod inputs;
pub mod par;
pub mod report;
pub mod diagrams;
pub mod duality;
pub mod search;
pub mod theorems;

pub use fixtures::{load, registry, Fixture, FixtureDef, DEFAULT_WINDOW, REGISTRY};
pub use report::{DegreeVerdict, DiagramReport, ENGINE_VERSION};
pub use diagrams::verify_adjunction_diagrams;
pub use duality::verify_duality_axioms;
pub use inputs::{parse_window, resolve_algebra, resolve_module};
pub use search::{search_hh, search_module, SearchReport};
pub use theorems::{adjoint_square, mate_square, verify_theorem1, verify_theorem2, verify_theorem2_all};

use crate::algebra::AlgebraError;
use crate::modules::ModuleError;
use crate::tate::TateError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("io: {0}")]
    Io(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Tate(#[from] TateError),
}

impl From<std::io::Error> for HarnessError {
    fn from(e: std::io::Error) -> Self {
        HarnessError::Io(e.to_string())
    }
}
