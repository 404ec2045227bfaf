//! Truncated reconstruction, interpolation-error measurement, sweeps over
//! the window half-width, and admissible time rescaling.

use crate::grid::BandConfig;
use crate::kernels::{kernel_window, Method};
use crate::quad::QuadratureSpec;
use crate::signals::SignalSpec;
use crate::{Error, Result};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::sync::Arc;

/// One measured reconstruction error.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    pub method: Method,
    pub t: f64,
    pub l: u32,
    pub reconstructed: f64,
    pub truth: f64,
    pub abs_error: f64,
}

/// Truncated reconstruction `Sum_{k = floor(t)-L}^{floor(t)+L} a_k(t) x(k)`
/// as a complex value, summed in ascending `k` for determinism.
pub fn reconstruct(
    signal: &SignalSpec,
    t: f64,
    method: Method,
    l: u32,
    config: &BandConfig,
    quad: &QuadratureSpec,
) -> Result<Complex64> {
    let window = kernel_window(method, t, l, config, quad)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, a) in window.iter() {
        acc += a * signal.eval(k as f64);
    }
    Ok(acc)
}

/// Real-part reconstruction, the quantity tabulated for the real-valued
/// reference signals.
pub fn interpolate(
    signal: &SignalSpec,
    t: f64,
    method: Method,
    l: u32,
    config: &BandConfig,
    quad: &QuadratureSpec,
) -> Result<f64> {
    Ok(reconstruct(signal, t, method, l, config, quad)?.re)
}

/// Measures one reconstruction against the analytic evaluator.
pub fn error_row(
    signal: &SignalSpec,
    t: f64,
    method: Method,
    l: u32,
    config: &BandConfig,
    quad: &QuadratureSpec,
) -> Result<ErrorRow> {
    let reconstructed = interpolate(signal, t, method, l, config, quad)?;
    let truth = signal.eval_re(t);
    Ok(ErrorRow {
        method,
        t,
        l,
        reconstructed,
        truth,
        abs_error: (reconstructed - truth).abs(),
    })
}

/// One [`ErrorRow`] per `(method, L)` pair, in the given order (methods
/// outermost). Pairs are measured in parallel; the row order is
/// independent of scheduling.
pub fn truncation_sweep(
    signal: &SignalSpec,
    t: f64,
    ls: &[u32],
    methods: &[Method],
    config: &BandConfig,
    quad: &QuadratureSpec,
) -> Result<Vec<ErrorRow>> {
    let pairs: Vec<(Method, u32)> = methods
        .iter()
        .flat_map(|&m| ls.iter().map(move |&l| (m, l)))
        .collect();
    pairs
        .par_iter()
        .map(|&(m, l)| error_row(signal, t, m, l, config, quad))
        .collect()
}

/// Time rescaling `x(t) -> x(mu t)`: trades observation span for band
/// headroom. The rescaled band edge `mu * band_edge` must stay below pi.
pub fn rescale(signal: &SignalSpec, mu: f64) -> Result<SignalSpec> {
    // NaN factors must be rejected, so test the passing conditions
    let mu_ok = mu > 0.0 && mu.is_finite();
    if !mu_ok {
        return Err(Error::MuOutOfRange(mu));
    }
    let band_edge = mu * signal.band_edge;
    let admissible = band_edge < PI;
    if !admissible {
        return Err(Error::InadmissibleRescale(band_edge));
    }
    let inner = signal.clone();
    Ok(SignalSpec::new(
        format!("{}-mu{mu}", signal.label),
        band_edge,
        signal.growth_exponent,
        signal.real_valued,
        Arc::new(move |t| inner.eval(mu * t)),
    ))
}
