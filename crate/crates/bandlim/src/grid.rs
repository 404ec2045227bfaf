//! Grid geometry: the validated experiment configuration and the
//! `(m, tau, g)` decomposition every other module consumes.
//!
//! An even integer `N > omega / (pi - omega)` fixes the geometry. A time `t`
//! is reduced to the interval `[N + m, N + m + 1)` with `m = floor(t - N)`
//! and `tau = t - N - m`, and the core band edge is `g = pi N / (N + tau)`,
//! extended 1-periodically in `t`. The identity `(t - m) g = pi N` holds by
//! construction and is what later makes the seam right-hand sides real.

use crate::{Error, Result};
use std::f64::consts::PI;

/// Validated experiment configuration: band edge `omega`, growth exponent
/// `alpha`, seam smoothness order `d`, and the even grid parameter `N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandConfig {
    omega: f64,
    alpha: f64,
    d: u32,
    n: u32,
}

impl BandConfig {
    /// Builds a configuration with the minimal admissible `d` (smallest
    /// integer exceeding `alpha + 1/2`) and the minimal admissible even `N`.
    pub fn new(omega: f64, alpha: f64) -> Result<Self> {
        if !omega.is_finite() || omega <= 0.0 || omega >= PI {
            return Err(Error::OmegaOutOfRange(omega));
        }
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        let d = (alpha + 0.5).floor() as u32 + 1;
        let n = select_n(omega)?;
        Ok(Self { omega, alpha, d, n })
    }

    /// Overrides the smoothness order; it must still satisfy `d > alpha + 1/2`.
    pub fn with_d(self, d: u32) -> Result<Self> {
        if d < 1 || (d as f64) <= self.alpha + 0.5 {
            return Err(Error::InvalidSmoothness { d, alpha: self.alpha });
        }
        Ok(Self { d, ..self })
    }

    /// Overrides the grid parameter; it must stay even, at least 2, and
    /// keep `pi N / (N + 1) > omega`.
    pub fn with_n(self, n: u32) -> Result<Self> {
        let admissible = n >= 2
            && n.is_multiple_of(2)
            && PI * n as f64 / (n as f64 + 1.0) > self.omega;
        if !admissible {
            return Err(Error::InvalidGridParameter { n, omega: self.omega });
        }
        Ok(Self { n, ..self })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// Smallest even integer strictly greater than `omega / (pi - omega)`.
///
/// `omega` must lie in `(0, pi)` and leave room for a `u32` result.
pub fn select_n(omega: f64) -> Result<u32> {
    if !omega.is_finite() || omega <= 0.0 || omega >= PI {
        return Err(Error::OmegaOutOfRange(omega));
    }
    let ratio = omega / (PI - omega);
    if ratio >= u32::MAX as f64 - 2.0 {
        return Err(Error::OmegaOutOfRange(omega));
    }
    let mut n = ratio.floor() as u32 + 1;
    if n % 2 == 1 {
        n += 1;
    }
    Ok(n)
}

/// Position of a time point on the sampling grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPosition {
    /// The evaluation time.
    pub t: f64,
    /// Integer offset `m = floor(t - N)`, so `t` lies in `[N + m, N + m + 1)`.
    pub m: i64,
    /// Fractional part `tau = t - N - m` in `[0, 1)`.
    pub tau: f64,
    /// Core band edge `g = pi N / (N + tau)`; exactly `pi` at integer `t`.
    pub g: f64,
}

/// Decomposes `t` relative to the even grid parameter `n`.
///
/// Total over finite real `t`. Panics if `n` is odd or below 2.
pub fn locate(t: f64, n: u32) -> GridPosition {
    assert!(
        n >= 2 && n.is_multiple_of(2),
        "grid parameter must be even and >= 2"
    );
    assert!(t.is_finite(), "evaluation time must be finite");
    let nf = n as f64;
    let mut m = (t - nf).floor() as i64;
    let mut tau = (t - nf) - m as f64;
    // the subtraction can round up to exactly 1.0 when t - n sits half an
    // ulp below an integer; wrap so tau stays inside [0, 1)
    if tau >= 1.0 {
        m += 1;
        tau = 0.0;
    }
    let g = if tau == 0.0 { PI } else { PI * nf / (nf + tau) };
    GridPosition { t, m, tau, g }
}
