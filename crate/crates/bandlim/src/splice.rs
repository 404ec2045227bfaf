//! Spectral extension polynomials.
//!
//! On the core band `|w| <= g` the extension equals `e^{iwt}`. On `(g, pi]`
//! it is the polynomial pair `P(w) + i Q(w)` chosen so that derivatives up
//! to order `d - 1` match the exponential at the seam `w = g` and so that
//! the `2 pi`-periodic continuation stays `d - 1` times differentiable at
//! `w = +/- pi`. On `[-pi, -g)` the extension is the conjugate reflection
//! `P(-w) - i Q(-w)`, which keeps every Fourier coefficient real.
//!
//! Because `(t - m) g = pi N` with even `N`, the exponential's value and
//! derivatives at the seam reduce to `(i t_r)^j` with `t_r = t - m`, so the
//! constraint right-hand sides are plain complex powers. The reflection
//! forces `Q^{(j)}(pi) = 0` for even `j` and `P^{(j)}(pi) = 0` for odd `j`.
//!
//! Internally the polynomials are stored in the scaled variable
//! `u = (w - g) / h` with `h = pi - g`, which keeps the linear solve
//! well-conditioned uniformly in `tau`: the seam-derivative constraints
//! become explicit Taylor coefficients and only the boundary conditions at
//! `u = 1` require a (tiny, constant-coefficient) solve.

use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// The polynomial pair extending `e^{iwt}` from the core band to `|w| = pi`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplicePolynomials {
    t_reduced: f64,
    g: f64,
    h: f64,
    d: u32,
    n: u32,
    /// Coefficients of `P` in the scaled variable `u = (w - g) / h`, ascending.
    p_scaled: Vec<f64>,
    /// Coefficients of `Q` likewise.
    q_scaled: Vec<f64>,
}

impl SplicePolynomials {
    pub fn t_reduced(&self) -> f64 {
        self.t_reduced
    }

    /// Core band edge for this splice.
    pub fn g(&self) -> f64 {
        self.g
    }

    /// Width `pi - g` of the splice interval; zero at integer times.
    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Coefficients of `P(w)` in the monomial basis of `w`, ascending degree.
    pub fn p_coeffs(&self) -> Vec<f64> {
        to_omega_basis(&self.p_scaled, self.g, self.h)
    }

    /// Coefficients of `Q(w)` in the monomial basis of `w`, ascending degree.
    pub fn q_coeffs(&self) -> Vec<f64> {
        to_omega_basis(&self.q_scaled, self.g, self.h)
    }

    /// Evaluates `P(w) + i Q(w)` for `w` in the upper splice interval `[g, pi]`.
    pub fn eval_upper(&self, omega: f64) -> Complex64 {
        let u = if self.h == 0.0 {
            0.0
        } else {
            (omega - self.g) / self.h
        };
        Complex64::new(horner(&self.p_scaled, u), horner(&self.q_scaled, u))
    }
}

fn horner(coeffs: &[f64], u: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * u + c;
    }
    acc
}

/// Falling factorial `j (j-1) ... (j-l+1)` as a float; 1 when `l = 0`.
fn falling(j: usize, l: usize) -> f64 {
    let mut r = 1.0;
    for i in 0..l {
        r *= (j - i) as f64;
    }
    r
}

/// Value of the `l`-th derivative of a scaled-basis polynomial at `u = 1`.
fn scaled_deriv_at_one(coeffs: &[f64], l: usize) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .skip(l)
        .map(|(j, &c)| c * falling(j, l))
        .sum()
}

fn to_omega_basis(scaled: &[f64], g: f64, h: f64) -> Vec<f64> {
    let n = scaled.len();
    let mut out = vec![0.0; n];
    for (j, &c) in scaled.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let cj = c / h.powi(j as i32);
        let mut binom = 1.0;
        for (l, slot) in out.iter_mut().enumerate().take(j + 1) {
            *slot += cj * binom * (-g).powi((j - l) as i32);
            binom *= (j - l) as f64 / (l + 1) as f64;
        }
    }
    out
}

/// Builds the minimal-degree splice for reduced time `t_reduced` in
/// `[N, N+1)` and smoothness order `d >= 1`.
///
/// `P` carries the real seam data plus the odd-order boundary conditions at
/// `pi`; `Q` carries the imaginary seam data plus the even-order boundary
/// conditions. Each polynomial gets exactly as many coefficients as it has
/// constraints. Orders up to 5 solve to residuals below 1e-9 across the
/// whole `tau` range; higher orders still solve but lose accuracy, which
/// [`seam_residuals`] quantifies.
pub fn build_splice(t_reduced: f64, d: u32, n: u32) -> Result<SplicePolynomials> {
    build_splice_opts(t_reduced, d, n, false)
}

/// As [`build_splice`], optionally imposing the extra condition
/// `Q'(pi) = 0`, which periodicity does not force; it raises the degree of
/// `Q` by one.
pub fn build_splice_opts(
    t_reduced: f64,
    d: u32,
    n: u32,
    require_q_prime_at_pi: bool,
) -> Result<SplicePolynomials> {
    if d < 1 {
        return Err(Error::InvalidSmoothness { d, alpha: 0.0 });
    }
    let nf = n as f64;
    if !(t_reduced >= nf && t_reduced < nf + 1.0) {
        return Err(Error::TReducedOutOfRange { t_reduced, n });
    }
    let tau = t_reduced - nf;
    if tau == 0.0 {
        // the core band reaches pi and the splice interval is empty
        return Ok(SplicePolynomials {
            t_reduced,
            g: PI,
            h: 0.0,
            d,
            n,
            p_scaled: vec![1.0],
            q_scaled: vec![0.0],
        });
    }
    let g = PI * nf / (nf + tau);
    let h = PI - g;

    // Taylor data at the seam: the j-th scaled coefficient of e^{iwt_r}
    // around w = g is h^j (i t_r)^j / j!, using e^{i g t_r} = 1.
    let dd = d as usize;
    let mut p_tay = Vec::with_capacity(dd);
    let mut q_tay = Vec::with_capacity(dd);
    let mut rhs = Complex64::new(1.0, 0.0);
    let step = Complex64::new(0.0, t_reduced);
    let mut factor = 1.0;
    for j in 0..dd {
        if j > 0 {
            rhs *= step;
            factor *= h / j as f64;
        }
        p_tay.push(factor * rhs.re);
        q_tay.push(factor * rhs.im);
    }

    let p_orders: Vec<usize> = (0..dd).filter(|l| l % 2 == 1).collect();
    let mut q_orders: Vec<usize> = (0..dd).filter(|l| l % 2 == 0).collect();
    if require_q_prime_at_pi && !q_orders.contains(&1) {
        q_orders.push(1);
        q_orders.sort_unstable();
    }

    let p_scaled = extend(p_tay, &p_orders, d)?;
    let q_scaled = extend(q_tay, &q_orders, d)?;

    Ok(SplicePolynomials {
        t_reduced,
        g,
        h,
        d,
        n,
        p_scaled,
        q_scaled,
    })
}

/// Appends the coefficients that make all listed derivative orders vanish
/// at `u = 1`, solving the small confluent system for the unknowns.
fn extend(tay: Vec<f64>, orders: &[usize], d: u32) -> Result<Vec<f64>> {
    if orders.is_empty() {
        return Ok(tay);
    }
    let dd = tay.len();
    let k = orders.len();
    let a = nalgebra::DMatrix::<f64>::from_fn(k, k, |r, c| falling(dd + c, orders[r]));
    let b = nalgebra::DVector::<f64>::from_fn(k, |r, _| -scaled_deriv_at_one(&tay, orders[r]));
    let sol = a
        .lu()
        .solve(&b)
        .ok_or(Error::SingularConstraints { d })?;
    let mut out = tay;
    out.extend(sol.iter().copied());
    Ok(out)
}

/// Constraint residuals of a built splice, interleaved per derivative
/// order: for each `j` in `0..d`, first the seam mismatch
/// `|P^{(j)}(g) + i Q^{(j)}(g) - (i t_r)^j|`, then the boundary mismatch at
/// `pi` (`|Q^{(j)}(pi)|` for even `j`, `|P^{(j)}(pi)|` for odd `j`). When
/// the splice was built with the extra `Q'(pi) = 0` condition, its residual
/// is appended last.
pub fn seam_residuals(splice: &SplicePolynomials) -> Vec<f64> {
    let dd = splice.d as usize;
    if splice.h == 0.0 {
        return vec![0.0; 2 * dd];
    }
    let mut out = Vec::with_capacity(2 * dd);
    let mut rhs = Complex64::new(1.0, 0.0);
    let step = Complex64::new(0.0, splice.t_reduced);
    let mut hj = 1.0;
    let mut jfact = 1.0;
    for j in 0..dd {
        if j > 0 {
            rhs *= step;
            hj *= splice.h;
            jfact *= j as f64;
        }
        let pj = splice.p_scaled.get(j).copied().unwrap_or(0.0) * jfact / hj;
        let qj = splice.q_scaled.get(j).copied().unwrap_or(0.0) * jfact / hj;
        out.push((Complex64::new(pj, qj) - rhs).norm());
        let boundary = if j % 2 == 0 {
            scaled_deriv_at_one(&splice.q_scaled, j)
        } else {
            scaled_deriv_at_one(&splice.p_scaled, j)
        };
        out.push((boundary / hj).abs());
    }
    let q_degree = splice.q_scaled.len();
    let expected = dd + dd.div_ceil(2);
    if q_degree > expected {
        out.push((scaled_deriv_at_one(&splice.q_scaled, 1) / splice.h).abs());
    }
    out
}

/// Evaluates the full extension `E(t, w)` on `[-pi, pi]`.
///
/// Returns `e^{iwt}` on the core band, the splice polynomials times
/// `e^{iwm}` above it, and the conjugate reflection below. The splice must
/// have been built for `t_reduced = t - m`.
pub fn eval_e(t: f64, omega: f64, splice: &SplicePolynomials, m: i64) -> Result<Complex64> {
    // NaN frequencies must be rejected, so test the passing condition
    let in_band = omega.abs() <= PI;
    if !in_band {
        return Err(Error::FrequencyOutOfBand(omega));
    }
    debug_assert!(
        (t - m as f64 - splice.t_reduced).abs() < 1e-9,
        "splice was built for a different reduced time"
    );
    if omega.abs() <= splice.g {
        return Ok(Complex64::from_polar(1.0, omega * t));
    }
    let phase = Complex64::from_polar(1.0, omega * m as f64);
    let value = if omega > 0.0 {
        splice.eval_upper(omega)
    } else {
        splice.eval_upper(-omega).conj()
    };
    Ok(value * phase)
}
