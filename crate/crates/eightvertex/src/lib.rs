//! Numerical workbench for the eight-vertex Yang-Baxter solution catalog.
//!
//! The crate evaluates a catalog of spectral-parameter-dependent R-matrix
//! families with eight-vertex structure, verifies Yang-Baxter and related
//! identities by dense tensor contraction, recovers classification constants
//! from samples, extracts quantum spin-chain Hamiltonian data via check-matrix
//! expansion, and realizes the explicit three-slot intertwiner tensor together
//! with its algebra and tetrahedron-equation residual checks.
//!
//! Modules:
//! - [`linalg`]: small dense complex matrices, tensor embeddings, eigen/least-squares kernels
//! - [`elliptic`]: Jacobi elliptic kernel (AGM complete integral, Landen recursion, transforms)
//! - [`catalog`]: the R-matrix family catalog with named eight-vertex elements
//! - [`verify`]: Yang-Baxter residuals, unitarity / free-fermion / constraint defects, sweep reports
//! - [`classify`]: invariant estimation and branch labeling
//! - [`hamiltonian`]: check-matrix expansion, Pauli channels, chain and transfer operators
//! - [`tetrahedral`]: the R-pair, W-tensor, intertwiner-algebra and tetrahedron-equation residuals

pub mod catalog;
pub mod classify;
pub mod elliptic;
pub mod hamiltonian;
pub mod linalg;
pub mod tetrahedral;
pub mod verify;

pub use num_complex::Complex64 as C64;

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Modulus outside the accepted range 0 <= k <= 1.
    #[error("modulus out of range: k = {k} (require 0 <= k <= 1)")]
    ModulusRange { k: f64 },

    /// Complete elliptic integral diverges at k = 1.
    #[error("complete elliptic integral diverges at k = 1")]
    EllipticDivergence,

    /// Argument within the guard distance of a lattice pole.
    #[error("argument within {dist:.3e} of a pole near ({re:.6}, {im:.6})")]
    PoleProximity { dist: f64, re: f64, im: f64 },

    /// Family id not in the registry.
    #[error("unknown family id '{id}'; valid ids: {valid}")]
    UnknownFamily { id: String, valid: String },

    /// Parameter set rejected by a family's validation.
    #[error("invalid parameters for {family}: {message}")]
    InvalidParams { family: String, message: String },

    /// Matrix has a nonzero entry off the eight-vertex pattern.
    #[error("matrix entry ({row},{col}) violates the eight-vertex zero pattern")]
    PatternViolation { row: usize, col: usize },

    /// Evaluation hit a structural singularity (vanishing denominator, degenerate basepoint, ...).
    #[error("singular configuration: {0}")]
    SingularConfiguration(String),

    /// Least-squares system is rank-deficient; the solution is not unique.
    #[error("solution not unique: minimal singular value {min_sv:.3e} below threshold {threshold:.3e}")]
    NonUniqueSolution { min_sv: f64, threshold: f64 },

    /// Too few usable samples to estimate invariants.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// No branch's defining identities hold within tolerance.
    #[error("unclassifiable: {0}")]
    Unclassifiable(String),

    /// Generic numerical failure.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Operand dimensions do not match.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
