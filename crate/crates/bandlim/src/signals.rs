//! Test signals: the two reference signals used throughout the error
//! tables (a band-limited sinc combination and a linearly growing
//! variant) plus a parametric tone family for property tests.

use num_complex::Complex64;
use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::sync::Arc;

/// An evaluatable test signal with its declared band edge and growth
/// exponent. Evaluators are pure and cheap to share across threads.
#[derive(Clone)]
pub struct SignalSpec {
    pub label: String,
    /// Radian frequency bound of the spectrum.
    pub band_edge: f64,
    /// Exponent `alpha` such that the signal is `O((1 + |t|)^alpha)`.
    pub growth_exponent: f64,
    /// True when the evaluator's imaginary part is identically zero.
    pub real_valued: bool,
    evaluator: Arc<dyn Fn(f64) -> Complex64 + Send + Sync>,
}

impl SignalSpec {
    pub fn new(
        label: impl Into<String>,
        band_edge: f64,
        growth_exponent: f64,
        real_valued: bool,
        evaluator: Arc<dyn Fn(f64) -> Complex64 + Send + Sync>,
    ) -> Self {
        Self {
            label: label.into(),
            band_edge,
            growth_exponent,
            real_valued,
            evaluator,
        }
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        (self.evaluator)(t)
    }

    /// Real part of the signal; the full value for real-valued signals.
    pub fn eval_re(&self, t: f64) -> f64 {
        (self.evaluator)(t).re
    }
}

impl fmt::Debug for SignalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SignalSpec")
            .field("label", &self.label)
            .field("band_edge", &self.band_edge)
            .field("growth_exponent", &self.growth_exponent)
            .field("real_valued", &self.real_valued)
            .finish()
    }
}

/// Unnormalized cardinal sine `sin(x)/x`, with `sinc(0) = 1`.
pub fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// Bounded band-limited reference signal
/// `sinc(w(t-1) + 1/2) - 2 sinc(w(t+2)/sqrt(2) - 1)`.
pub fn make_sinc_combo(omega: f64) -> SignalSpec {
    assert!(omega > 0.0 && omega < PI, "band edge must lie in (0, pi)");
    SignalSpec {
        label: "sinc-combo".to_string(),
        band_edge: omega,
        growth_exponent: 0.0,
        real_valued: true,
        evaluator: Arc::new(move |t| {
            let v = sinc(omega * (t - 1.0) + 0.5) - 2.0 * sinc(omega * (t + 2.0) / SQRT_2 - 1.0);
            Complex64::new(v, 0.0)
        }),
    }
}

/// Linearly growing reference signal
/// `t sin(w(t-1)/1.0001 + 1/2) - 2t sin(w(t+2)/sqrt(2) - 1)`.
///
/// The `1/1.0001` factor keeps the spectrum strictly inside the band.
pub fn make_linear_growth(omega: f64) -> SignalSpec {
    assert!(omega > 0.0 && omega < PI, "band edge must lie in (0, pi)");
    SignalSpec {
        label: "linear-growth".to_string(),
        band_edge: omega,
        growth_exponent: 1.0,
        real_valued: true,
        evaluator: Arc::new(move |t| {
            let v = t * (omega * (t - 1.0) / 1.0001 + 0.5).sin()
                - 2.0 * t * (omega * (t + 2.0) / SQRT_2 - 1.0).sin();
            Complex64::new(v, 0.0)
        }),
    }
}

/// Polynomially weighted tone `t^p e^{i w0 t}`: a signal whose spectral
/// content sits exactly at `w0`, with growth exponent `p`.
pub fn make_tone(omega0: f64, poly_degree: u32) -> SignalSpec {
    assert!(omega0.abs() < PI, "tone frequency must lie in (-pi, pi)");
    let p = poly_degree as i32;
    SignalSpec {
        label: format!("tone-{omega0:.4}-p{poly_degree}"),
        band_edge: omega0.abs(),
        growth_exponent: poly_degree as f64,
        real_valued: omega0 == 0.0,
        evaluator: Arc::new(move |t| t.powi(p) * Complex64::from_polar(1.0, omega0 * t)),
    }
}
