//! Band-limited signal reconstruction from integer-grid samples.
//!
//! The classical cardinal series recovers a signal with spectrum inside
//! `[-omega, omega]`, `omega < pi`, from its samples at the integers, but its
//! `sin(pi(t-k))/(pi(t-k))` weights decay too slowly to handle signals that
//! grow polynomially in time. This crate implements an interpolation family
//! whose weights `a_k(t)` are Fourier coefficients of a spectral extension
//! `E(t, w)`: equal to `e^{iwt}` on a core band `|w| <= g(t)` and continued
//! by a polynomial pair `(P, Q)` up to `|w| = pi` with matching derivatives
//! at the seam and periodic boundary behaviour. The smoothness order `d` of
//! the seam controls the weight decay `|a_k(t)| = O(|k|^{-d-1})`, which makes
//! the series absolutely convergent against signals of growth `O(|t|^alpha)`
//! whenever `d > alpha + 1/2`.
//!
//! Modules:
//! - [`grid`]: the validated experiment configuration and the `(m, tau, g)`
//!   decomposition of an evaluation time.
//! - [`splice`]: construction of the extension polynomials for arbitrary `d`.
//! - [`kernels`]: closed forms for the classical weights and the `d = 1`
//!   family, plus window materialization.
//! - [`coeff`]: the coefficient integral for general `d` (semi-closed
//!   evaluation and a brute-force quadrature oracle).
//! - [`signals`]: evaluatable test signals with declared band edge and
//!   growth exponent.
//! - [`interp`]: truncated reconstruction, error measurement, sweeps, and
//!   time rescaling.
//! - [`quad`]: composite Gauss-Legendre quadrature shared by the engines.

// Quadrature tables and test reference values are recorded at full precision.
#![allow(clippy::excessive_precision)]

pub mod coeff;
pub mod grid;
pub mod interp;
pub mod kernels;
pub mod quad;
pub mod signals;
pub mod splice;

pub use coeff::{coefficient_by_integration, coefficient_window_general, oracle_coefficient};
pub use grid::{locate, select_n, BandConfig, GridPosition};
pub use interp::{error_row, interpolate, reconstruct, rescale, truncation_sweep, ErrorRow};
pub use kernels::{d1_coefficient, kernel_window, wsk_coefficient, CoefficientSeries, Method};
pub use quad::QuadratureSpec;
pub use signals::{make_linear_growth, make_sinc_combo, make_tone, sinc, SignalSpec};
pub use splice::{build_splice, build_splice_opts, eval_e, seam_residuals, SplicePolynomials};

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("band edge omega must lie strictly inside (0, pi), got {0}")]
    OmegaOutOfRange(f64),

    #[error("growth exponent alpha must be finite and non-negative, got {0}")]
    AlphaOutOfRange(f64),

    #[error("grid parameter N must be even, at least 2, and exceed omega/(pi - omega); got N = {n} for omega = {omega}")]
    InvalidGridParameter { n: u32, omega: f64 },

    #[error("smoothness order d must satisfy d >= 1 and d > alpha + 1/2; got d = {d} for alpha = {alpha}")]
    InvalidSmoothness { d: u32, alpha: f64 },

    #[error("reduced time must lie in [N, N+1), got {t_reduced} for N = {n}")]
    TReducedOutOfRange { t_reduced: f64, n: u32 },

    #[error("frequency {0} lies outside the principal band [-pi, pi]")]
    FrequencyOutOfBand(f64),

    #[error("window half-width must be at least 1")]
    InvalidWindow,

    #[error("rescaling factor must be positive, got {0}")]
    MuOutOfRange(f64),

    #[error("rescaled band edge {0} reaches or exceeds pi; the rescaled problem is not admissible")]
    InadmissibleRescale(f64),

    #[error("coefficient a_{k} assembled with imaginary residual {imag:.3e} above tolerance {tol:.3e}; the splice or the quadrature is inconsistent")]
    ImaginaryResidual { k: i64, imag: f64, tol: f64 },

    #[error("splice constraint system is singular at d = {d}")]
    SingularConstraints { d: u32 },

    #[error("Gauss-Legendre order must lie in 2..=64, got {0}")]
    QuadratureOrder(u32),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
