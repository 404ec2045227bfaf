//! Coefficient evaluation through the spectral integral: semi-closed
//! assembly for arbitrary smoothness order, plus a brute-force quadrature
//! oracle used to cross-check the closed forms.
//!
//! The weight at sample `k` is the Fourier integral of the spliced
//! spectrum over `[-pi, pi]`. The core band `[-g, g]` integrates in
//! closed form; each transition band is handled by panel quadrature,
//! with the panel count escalated in proportion to the oscillation
//! frequency `|k - m|` of the integrand.

use crate::grid::{locate, BandConfig};
use crate::kernels::{CoefficientSeries, Method};
use crate::quad::{gauss_legendre, integrate_complex, QuadratureSpec};
use crate::splice::{build_splice, SplicePolynomials};
use crate::{Error, Result};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::sync::Once;

static QUAD_BUDGET_WARNING: Once = Once::new();

fn panels_for(nu: f64, h: f64, quad: &QuadratureSpec) -> u32 {
    let oscillations = nu.abs() * h / PI;
    quad.panels.max(2 * oscillations.ceil() as u32)
}

/// Weight `a_k(t)` assembled from a splice: closed-form core integral plus
/// quadrature over the two transition bands.
///
/// Returns `(1/2pi) [A + B + conj(B)]` where `A` is the core integral
/// `2 sin(g (t-k)) / (t-k)` (limit `2g` at `t = k`) and `B` integrates the
/// upper transition polynomials against `e^{i w (m-k)}`. The reflected
/// band is integrated independently; it must cancel the imaginary part of
/// `B` to within `quad.abs_tol`, which guards against a splice that lost
/// its conjugate symmetry.
pub fn coefficient_by_integration(
    k: i64,
    t: f64,
    splice: &SplicePolynomials,
    m: i64,
    quad: &QuadratureSpec,
) -> Result<f64> {
    debug_assert!(
        (t - m as f64 - splice.t_reduced()).abs() < 1e-9,
        "splice was built for a different t"
    );
    let g = splice.g();
    let h = splice.h();
    if h == 0.0 {
        // integer evaluation point: the spectrum is a pure tone and the
        // weights collapse to the Kronecker delta
        return Ok(if t == k as f64 { 1.0 } else { 0.0 });
    }

    let tk = t - k as f64;
    let a = if tk == 0.0 { 2.0 * g } else { 2.0 * (g * tk).sin() / tk };

    let nu = (k - m) as f64;
    let panels = panels_for(nu, h, quad);
    let rule = gauss_legendre(quad.nodes_per_panel)?;
    let budget = panels as u64 * quad.nodes_per_panel as u64;
    if budget < (8.0 * (1.0 + nu.abs() * h / PI)).ceil() as u64 {
        QUAD_BUDGET_WARNING.call_once(|| {
            eprintln!(
                "warning: quadrature budget ({} panels x {} nodes) is below \
                 the recommended 8 (1 + |k-m| h / pi) for oscillatory tails",
                panels, quad.nodes_per_panel
            );
        });
    }

    let b = integrate_complex(
        |w| splice.eval_upper(w) * Complex64::from_polar(1.0, -w * nu),
        g,
        PI,
        panels,
        &rule,
    );
    // reflected band, integrated on its own rather than taken as conj(b):
    // the sum acts as a parity check on the assembled splice
    let b_refl = integrate_complex(
        |w| splice.eval_upper(w).conj() * Complex64::from_polar(1.0, w * nu),
        g,
        PI,
        panels,
        &rule,
    );

    let assembled = (Complex64::new(a, 0.0) + b + b_refl) / (2.0 * PI);
    // NaN must fail the check too, so test the passing condition
    let im_ok = assembled.im.abs() < quad.abs_tol;
    if !im_ok {
        return Err(Error::ImaginaryResidual {
            k,
            imag: assembled.im,
            tol: quad.abs_tol,
        });
    }
    Ok(assembled.re)
}

/// Brute-force check value: composite Gauss-Legendre quadrature of
/// `(1/2pi) Int_{-pi}^{pi} E(t, w) e^{-iwk} dw`.
///
/// `seams` lists interior break frequencies (e.g. `-g` and `g`) that are
/// placed on panel boundaries so no panel straddles a point where `E` is
/// only piecewise-smooth. Panels are split among the resulting segments
/// in proportion to segment length, at least one each. The complex value
/// is returned unreduced; callers judge the imaginary part themselves.
pub fn oracle_coefficient(
    k: i64,
    t: f64,
    e: impl Fn(f64, f64) -> Complex64,
    seams: &[f64],
    quad: &QuadratureSpec,
) -> Result<Complex64> {
    let rule = gauss_legendre(quad.nodes_per_panel)?;
    let mut cuts = vec![-PI, PI];
    cuts.extend(seams.iter().copied().filter(|s| s.abs() < PI));
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let mut total = Complex64::new(0.0, 0.0);
    for pair in cuts.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let share = quad.panels as f64 * (hi - lo) / (2.0 * PI);
        let panels = (share.ceil() as u32).max(1);
        total += integrate_complex(
            |w| e(t, w) * Complex64::from_polar(1.0, -w * k as f64),
            lo,
            hi,
            panels,
            &rule,
        );
    }
    Ok(total / (2.0 * PI))
}

/// Full weight window for the general-order method.
///
/// The splice for `t` is built once; every `k` in the window then reuses
/// it, so the per-coefficient work is a pair of transition-band integrals
/// whose only `k`-dependence is the oscillation `e^{-i w (k-m)}`.
/// Coefficients are computed in parallel and stored in ascending `k`.
pub fn coefficient_window_general(
    t: f64,
    l: u32,
    config: &BandConfig,
    quad: &QuadratureSpec,
) -> Result<CoefficientSeries> {
    if l < 1 {
        return Err(Error::InvalidWindow);
    }
    let center = t.floor() as i64;
    let pos = locate(t, config.n());
    let ks: Vec<i64> = (center - l as i64..=center + l as i64).collect();

    let values = if pos.tau == 0.0 {
        ks.iter().map(|&k| if t == k as f64 { 1.0 } else { 0.0 }).collect()
    } else {
        let nf = config.n() as f64;
        let mut t_reduced = nf + pos.tau;
        if t_reduced >= nf + 1.0 {
            // tau just below 1 can round the sum up to the excluded endpoint
            t_reduced = (nf + 1.0).next_down();
        }
        let splice = build_splice(t_reduced, config.d(), config.n())?;
        ks.par_iter()
            .map(|&k| coefficient_by_integration(k, t, &splice, pos.m, quad))
            .collect::<Result<Vec<f64>>>()?
    };
    Ok(CoefficientSeries::from_values(
        Method::GeneralD,
        t,
        l,
        center,
        values,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::d1_coefficient;

    const OMEGA: f64 = 5.0 * PI / 6.0;

    #[test]
    fn oracle_normalization() {
        let quad = QuadratureSpec::default();
        let one = |_t: f64, _w: f64| Complex64::new(1.0, 0.0);
        let v = oracle_coefficient(0, 0.0, one, &[], &quad).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        let v3 = oracle_coefficient(3, 0.0, one, &[], &quad).unwrap();
        assert!(v3.norm() < 1e-14);
    }

    #[test]
    fn integration_matches_d1_closed_form() {
        let t = -1.71;
        let pos = locate(t, 6);
        let splice = build_splice(6.0 + pos.tau, 1, 6).unwrap();
        let quad = QuadratureSpec::default();
        for k in pos.m - 20..=pos.m + 20 {
            let by_int = coefficient_by_integration(k, t, &splice, pos.m, &quad).unwrap();
            let closed = d1_coefficient(k, t, 6);
            assert!((by_int - closed).abs() < 1e-10, "k = {k}");
        }
    }

    #[test]
    fn integration_center_weight() {
        let t = -1.71;
        let pos = locate(t, 6);
        let splice = build_splice(6.0 + pos.tau, 1, 6).unwrap();
        let quad = QuadratureSpec::default();
        let a_m = coefficient_by_integration(pos.m, t, &splice, pos.m, &quad).unwrap();
        assert!((a_m - 0.29 / 6.29).abs() < 1e-10);
    }

    #[test]
    fn oracle_matches_closed_form_through_splice() {
        let t = -1.71;
        let pos = locate(t, 6);
        let splice = build_splice(6.0 + pos.tau, 1, 6).unwrap();
        let quad = QuadratureSpec {
            panels: 64,
            nodes_per_panel: 16,
            abs_tol: 1e-9,
        };
        let e = |tt: f64, w: f64| crate::splice::eval_e(tt, w, &splice, pos.m).unwrap();
        for k in [-50i64, -13, -8, 0, 17, 50] {
            let v = oracle_coefficient(k, t, e, &[-pos.g, pos.g], &quad).unwrap();
            assert!(v.im.abs() < 1e-10, "k = {k}: im = {}", v.im);
            let closed = d1_coefficient(k, t, 6);
            assert!((v.re - closed).abs() < 1e-8, "k = {k}");
        }
    }

    #[test]
    fn general_window_delta_at_integer() {
        let config = BandConfig::new(OMEGA, 0.0).unwrap().with_d(2).unwrap();
        let quad = QuadratureSpec::default();
        let w = coefficient_window_general(4.0, 6, &config, &quad).unwrap();
        for (k, v) in w.iter() {
            assert_eq!(v, if k == 4 { 1.0 } else { 0.0 });
        }
    }

    #[test]
    fn general_window_d1_equals_closed_window() {
        let config = BandConfig::new(OMEGA, 0.0).unwrap();
        assert_eq!(config.d(), 1);
        let quad = QuadratureSpec::default();
        let w = coefficient_window_general(-1.71, 30, &config, &quad).unwrap();
        for (k, v) in w.iter() {
            let closed = d1_coefficient(k, -1.71, 6);
            assert!((v - closed).abs() < 1e-8, "k = {k}");
        }
    }

    #[test]
    fn window_is_deterministic_across_runs() {
        let config = BandConfig::new(OMEGA, 1.0).unwrap();
        assert_eq!(config.d(), 2);
        let quad = QuadratureSpec::default();
        let w1 = coefficient_window_general(-1.71, 40, &config, &quad).unwrap();
        let w2 = coefficient_window_general(-1.71, 40, &config, &quad).unwrap();
        assert_eq!(w1.values(), w2.values());
    }

    #[test]
    fn shift_covariance_of_general_window() {
        let config = BandConfig::new(OMEGA, 1.0).unwrap();
        let quad = QuadratureSpec::default();
        let base = coefficient_window_general(-1.71, 20, &config, &quad).unwrap();
        let shifted = coefficient_window_general(-1.71 + 7.0, 20, &config, &quad).unwrap();
        for (k, v) in base.iter() {
            let vs = shifted.get(k + 7).unwrap();
            assert!((v - vs).abs() < 1e-9, "k = {k}");
        }
    }

    #[test]
    fn rejects_zero_window() {
        let config = BandConfig::new(OMEGA, 0.0).unwrap();
        let quad = QuadratureSpec::default();
        assert!(matches!(
            coefficient_window_general(-1.71, 0, &config, &quad),
            Err(Error::InvalidWindow)
        ));
    }

    #[test]
    fn imaginary_residual_is_exactly_cancelled() {
        // the reflected-band quadrature mirrors the upper-band arithmetic
        // operation for operation, so the imaginary parts cancel exactly
        let t = 3.86;
        let pos = locate(t, 6);
        let splice = build_splice(6.0 + pos.tau, 3, 6).unwrap();
        let quad = QuadratureSpec::default();
        for k in [-9i64, -2, 0, 4, 11] {
            let nu = (k - pos.m) as f64;
            let rule = gauss_legendre(quad.nodes_per_panel).unwrap();
            let panels = panels_for(nu, splice.h(), &quad);
            let b = integrate_complex(
                |w| splice.eval_upper(w) * Complex64::from_polar(1.0, -w * nu),
                splice.g(),
                PI,
                panels,
                &rule,
            );
            let b_refl = integrate_complex(
                |w| splice.eval_upper(w).conj() * Complex64::from_polar(1.0, w * nu),
                splice.g(),
                PI,
                panels,
                &rule,
            );
            assert_eq!((b + b_refl).im, 0.0, "k = {k}");
        }
    }
}
