//! Closed-form interpolation weights: the classical cardinal series and the
//! explicit `d = 1` family, plus window materialization for all methods.

use crate::grid::{locate, BandConfig};
use crate::quad::QuadratureSpec;
use crate::{Error, Result};
use std::f64::consts::PI;
use std::fmt;

/// Which coefficient family a window was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Cardinal-series weights `sin(pi(k-t)) / (pi(k-t))`.
    Classical,
    /// The explicit order-1 family with `1/k^2` decay.
    D1,
    /// Arbitrary smoothness order, evaluated through the coefficient
    /// integral of the splice.
    GeneralD,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Classical => "classical",
            Method::D1 => "d1",
            Method::GeneralD => "general",
        };
        f.write_str(s)
    }
}

/// A window of interpolation weights `a_k(t)` for `k` in
/// `[floor(t) - L, floor(t) + L]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeries {
    pub method: Method,
    pub t: f64,
    /// Window half-width `L`.
    pub window: u32,
    /// Window center `floor(t)`.
    pub center: i64,
    values: Vec<f64>,
}

impl CoefficientSeries {
    pub(crate) fn from_values(
        method: Method,
        t: f64,
        window: u32,
        center: i64,
        values: Vec<f64>,
    ) -> Self {
        debug_assert_eq!(values.len(), 2 * window as usize + 1);
        Self {
            method,
            t,
            window,
            center,
            values,
        }
    }

    /// Weight at sample index `k`, if `k` lies inside the window.
    pub fn get(&self, k: i64) -> Option<f64> {
        let idx = k - (self.center - self.window as i64);
        if (0..self.values.len() as i64).contains(&idx) {
            Some(self.values[idx as usize])
        } else {
            None
        }
    }

    /// Iterates `(k, a_k)` in ascending `k`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let first = self.center - self.window as i64;
        self.values.iter().enumerate().map(move |(i, &v)| (first + i as i64, v))
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Smallest `C` with `|a_k| <= C / (1 + |k - center|)^2` over the window.
    pub fn decay_constant(&self) -> f64 {
        self.iter()
            .map(|(k, v)| {
                let r = 1.0 + (k - self.center).abs() as f64;
                v.abs() * r * r
            })
            .fold(0.0, f64::max)
    }
}

/// Classical cardinal-series weight `sin(pi(k-t)) / (pi(k-t))`.
///
/// Exact Kronecker delta at integer `t`.
pub fn wsk_coefficient(k: i64, t: f64) -> f64 {
    let kf = k as f64;
    if t == t.floor() {
        return if t == kf { 1.0 } else { 0.0 };
    }
    let x = PI * (kf - t);
    x.sin() / x
}

/// Order-1 weight: `1 - g/pi` at `k = m`, otherwise
/// `(t - m) sin(g (k - m)) / (pi (k - m) (k - t))` with `(m, g)` from
/// [`locate`]. Exact Kronecker delta at integer `t`; the removable
/// singularity at `t = k` is filled with its limit 1.
pub fn d1_coefficient(k: i64, t: f64, n: u32) -> f64 {
    let pos = locate(t, n);
    if pos.tau == 0.0 {
        return if t == k as f64 { 1.0 } else { 0.0 };
    }
    if k == pos.m {
        return 1.0 - pos.g / PI;
    }
    let kt = k as f64 - t;
    if kt.abs() < 1e-9 {
        return 1.0;
    }
    let t_r = t - pos.m as f64;
    let nu = (k - pos.m) as f64;
    t_r * (pos.g * nu).sin() / (PI * nu * kt)
}

/// Materializes the weight window for the selected method.
///
/// `GeneralD` delegates to the coefficient integral with the smoothness
/// order from `config`; the closed-form methods ignore `quad`.
pub fn kernel_window(
    method: Method,
    t: f64,
    l: u32,
    config: &BandConfig,
    quad: &QuadratureSpec,
) -> Result<CoefficientSeries> {
    if l < 1 {
        return Err(Error::InvalidWindow);
    }
    match method {
        Method::GeneralD => crate::coeff::coefficient_window_general(t, l, config, quad),
        _ => {
            let center = t.floor() as i64;
            let values = (center - l as i64..=center + l as i64)
                .map(|k| match method {
                    Method::Classical => wsk_coefficient(k, t),
                    Method::D1 => d1_coefficient(k, t, config.n()),
                    Method::GeneralD => unreachable!(),
                })
                .collect();
            Ok(CoefficientSeries::from_values(method, t, l, center, values))
        }
    }
}
