//! Exact symbolic and numeric engine for holomorphic Cliffordian function
//! theory.
//!
//! The crate works in the Clifford algebra `R_{0,2m+1}` (generators square to
//! -1) and studies functions `f : R^{2m+2} -> R_{0,2m+1}` annihilated by
//! `D Δ^m`, where `D = Σ e_i ∂_i` is the Cauchy-Fueter-Dirac operator and `Δ`
//! the Laplacian. It provides:
//!
//! - [`algebra`]: exact rational multivector arithmetic, paravectors,
//!   conjugation and inverses, plus a dense `f64` layer for numerics;
//! - [`polycalc`]: multivector-valued polynomials and radial rational
//!   functions closed under partial derivatives, the operators `D`, `D*`,
//!   `Δ^k`, and the monogenicity/holomorphy predicates;
//! - [`basisfun`]: the permutational solution families `P_α` and `S_β`, the
//!   generating-function check, and exact expansion of polynomial solutions
//!   in the `P_α` family;
//! - [`kernels`]: the Cauchy kernels `E` and `N`, the iterated-Laplacian
//!   closed forms, and the Taylor/Laurent kernel expansions;
//! - [`quadrature`]: product Gauss rules on `S^{2m+1}` and the Cauchy-type
//!   boundary reconstruction;
//! - [`verify`]: the seeded identity suite behind the `verify` CLI command.
//!
//! All identities in the symbolic layer are checked with exact rational
//! arithmetic; floating point appears only in quadrature and in pointwise
//! kernel evaluation.

pub mod algebra;
pub mod basisfun;
pub mod kernels;
pub mod polycalc;
pub mod quadrature;
pub mod verify;

pub(crate) mod numutil;

use thiserror::Error;

/// Exact scalar type of the symbolic layer.
pub type Scalar = num_rational::BigRational;

/// Errors shared across the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra parameter m = {m} exceeds the configured bound {max}")]
    AlgebraTooLarge { m: u32, max: u32 },

    #[error("generator index {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: u32, max: u32 },

    #[error("operands belong to different algebras (m = {left} vs m = {right})")]
    ConfigMismatch { left: u32, right: u32 },

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("unknown variable index {index}; polynomial has {nvars} variables")]
    UnknownVariable { index: usize, nvars: usize },

    #[error("multi-index must have |alpha| >= 1")]
    EmptyMultiIndex,

    #[error("multi-index length {got} does not match coordinate count {want}")]
    MultiIndexLength { got: usize, want: usize },

    #[error("polynomial is not holomorphic Cliffordian; D Δ^m residual: {residual}")]
    NotHolomorphic { residual: String },

    #[error("expansion system is inconsistent: the P_alpha family failed to span the input")]
    InconsistentExpansion,

    #[error("identity violated: {0}")]
    IdentityViolation(String),

    #[error("singular kernel evaluated at the origin")]
    KernelSingularity,

    #[error("point with |x| = {norm} is outside the open unit ball")]
    OutsideDomain { norm: f64 },

    #[error("vector part of the argument must be nonzero")]
    ZeroVectorPart,

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("rule would need {nodes} nodes, above the cap {cap}")]
    NodeCap { nodes: usize, cap: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
