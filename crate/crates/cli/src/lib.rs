//! Batch front-end for the exact Hopf algebra engine: parse a family
//! config (or pick a named preset), run one of the pipelines, and emit a
//! deterministic report.
//!
//! Subcommands: `build` serializes a constructed member, `verify` runs the
//! full battery of structural checks, `invariants` reports the coalgebra
//! profile, `moduli` classifies lifting triples, `cohomology` tabulates
//! Hochschild dimensions against their representation-theoretic yardstick.
//!
//! Exit codes partition outcomes: 0 everything passed, 1 a structural
//! check failed (the report carries the witness), 2 the input could not be
//! parsed or validated, 3 a computation hit its capacity ceiling.

pub mod config;
pub mod report;
pub mod run;
pub mod serial;

use supertwist_core::Error as CoreError;

/// A pipeline abort: what went wrong and which exit code it maps to.
/// Structural check failures normally travel inside reports instead, so
/// the `Verify` variant only carries aborts raised mid-computation (a
/// constructor refusing to return an unverified structure, an internal
/// cross-check disagreeing).
#[derive(Debug)]
pub enum Failure {
    /// Unreadable or invalid input: exit 2.
    Parse(String),
    /// A structural check failed outside a report: exit 1.
    Verify(String),
    /// A computation would exceed its budget: exit 3.
    Capacity(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Capacity(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Verify(m) | Failure::Capacity(m) => m,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Domain(m) => Failure::Parse(m),
            CoreError::Capacity(m) => Failure::Capacity(m),
            CoreError::Internal(m) => Failure::Verify(m),
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.message())
    }
}

impl std::error::Error for Failure {}
