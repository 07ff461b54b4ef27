//! Exact construction and verification of finite-dimensional Hopf algebras
//! and Hopf superalgebras built from finite abelian group data.
//!
//! The library works entirely over cyclotomic number fields with rational
//! coefficients, so every structural claim it makes (associativity, coalgebra
//! axioms, twist equations, cocycle identities, Clifford relations, cohomology
//! dimensions) is decided exactly. Floating point appears in exactly one
//! place, the Frobenius-Perron spectral estimate, and is cross-checked there
//! against an exact eigenvector identity.
//!
//! The main pipeline:
//!
//! * [`scalar`]: arithmetic in Q(zeta_n), the coefficient fields.
//! * [`group`] and [`rep`]: finite abelian groups as explicit Cayley tables,
//!   their characters and matrix representations, symmetric powers,
//!   intertwiners and invariants.
//! * [`smash`]: the supergroup algebra C[G] ⋉ ΛV, its Hopf superalgebra
//!   structure, and exponential twisting elements e^B for symmetric tensors B.
//! * [`hopf`]: structure-constant level Hopf algebra data with an exact
//!   axiom verifier, Drinfeld twists, Hopf 2-cocycles, duals, antipode
//!   computation and triangularity checks.
//! * [`family`]: the central construction. Given (G, V, u, B), with u a
//!   central involution acting as -1 on V, it folds the twisted supergroup
//!   coproduct into an ordinary Hopf algebra of dimension |G| * 2^dim(V).
//! * [`invariants`]: coalgebra types, dual Clifford block decompositions,
//!   pointedness, grouplike and skew-primitive censuses, moduli normal
//!   forms, Hochschild cohomology and Frobenius-Perron dimensions.
//!
//! The crate is `no_std` compatible (it requires `alloc`); enable the `std`
//! feature for `std::error::Error` impls on the error types.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod family;
pub mod group;
pub mod hopf;
pub mod invariants;
pub mod linalg;
pub mod rep;
pub mod scalar;
pub mod smash;

use alloc::string::String;
use core::fmt;

/// Unified error type for the whole crate.
///
/// `Domain` covers inputs that violate a documented precondition, `Capacity`
/// covers configured resource bounds (modulus caps, brute-force bounds,
/// cochain sizes), and `Internal` flags a broken invariant that should never
/// be reachable from validated inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Domain(String),
    Capacity(String),
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Capacity(msg) => write!(f, "capacity error: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain_err<T>(msg: impl fmt::Display) -> Result<T> {
    Err(Error::Domain(alloc::format!("{msg}")))
}

pub(crate) fn capacity_err<T>(msg: impl fmt::Display) -> Result<T> {
    Err(Error::Capacity(alloc::format!("{msg}")))
}

pub(crate) fn internal_err<T>(msg: impl fmt::Display) -> Result<T> {
    Err(Error::Internal(alloc::format!("{msg}")))
}
