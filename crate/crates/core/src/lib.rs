//! Exact symbolic verification engine for twisted affine current-algebra
//! presentations and rectangular W-algebra OPE identities.
//!
//! The crate is organised around one idea: every defining relation and every
//! displayed bracket identity is evaluated inside an explicit model and the
//! residual (left side minus right side, canonicalised) is reported exactly.
//! A zero residual verifies the identity; a nonzero residual is data, not a
//! crash, and known misprints carry corrected readings side by side.

pub mod coeff;
pub mod loop_alg;
pub mod present;
pub mod report;
pub mod roots;
pub mod ueva;
pub mod vertex;

pub mod cli;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("tau-on-center-undefined")]
    TauOnCenter,
    #[error("not-nilpotent-within-bound {0}")]
    NotNilpotent(u32),
    #[error("out-of-range bindings for relation {rel}: {detail}")]
    OutOfRange { rel: String, detail: String },
    #[error("unresolvable named element: {0}")]
    Unresolvable(String),
    #[error("unsupported bracket shape: {0}")]
    UnsupportedBracket(String),
    #[error("non-affine exponent pattern in mode family")]
    BadFamilySlope,
    #[error("uncovered index pattern for T element: {0}")]
    UncoveredT(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
