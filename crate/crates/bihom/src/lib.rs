//! Exact-arithmetic toolkit for finite-dimensional BiHom-Lie algebras.
//!
//! Everything runs over the rationals with arbitrary-precision integers, so
//! axiom checks, cohomology dimensions, and extension equivalences are exact
//! equality tests rather than floating-point approximations.
//!
//! The crate is organized as:
//!
//! - [`linalg`]: rational matrices, kernels, images, solving, subspaces
//! - [`algebra`]: BiHom-Lie algebras as structure constants, axiom checks
//! - [`rep`]: BiHom-modules, left/right actions, cochain spaces
//! - [`cohomology`]: coboundary operators, Z², B², H²
//! - [`ext`]: short exact sequences, semidirect sums, split extensions
//! - [`io`]: JSON document formats for all of the above
//! - [`sample`]: deterministic and randomized instance generators

pub mod algebra;
pub mod cohomology;
pub mod ext;
pub mod io;
pub mod linalg;
pub mod rep;
pub mod sample;

pub use linalg::{Matrix, Rat, SubspaceBasis};

/// Errors raised by library operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A subspace that should be contained in another is not; for cohomology
    /// this signals a broken D2∘D1 = 0 somewhere upstream.
    #[error("containment violated: {0}")]
    Containment(String),
}

pub type Result<T> = std::result::Result<T, Error>;
