//! Composite Gauss-Legendre quadrature for the coefficient integrals.

use crate::{Error, Result};
use num_complex::Complex64;

/// Quadrature parameters used by the coefficient engine.
///
/// `panels` is a base count; the engine scales it up with the oscillation
/// frequency of the integrand so that the phase advance per panel stays
/// bounded. The product `panels * nodes_per_panel` should be at least
/// `8 * (1 + |k| (pi - g) / pi)` for the oscillatory tails; the engine's
/// automatic scaling satisfies this for the default settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Minimum number of panels per smooth segment.
    pub panels: u32,
    /// Gauss-Legendre order per panel.
    pub nodes_per_panel: u32,
    /// Tolerance for the imaginary-part integrity check of assembled
    /// coefficients.
    pub abs_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            panels: 8,
            nodes_per_panel: 16,
            abs_tol: 1e-9,
        }
    }
}

/// 16-point Gauss-Legendre nodes and weights on [-1, 1].
pub(crate) const GL16: [(f64, f64); 16] = [
    (-9.89400934991649939e-1, 2.71524594117540374e-2),
    (-9.44575023073232600e-1, 6.22535239386477063e-2),
    (-8.65631202387831755e-1, 9.51585116824925914e-2),
    (-7.55404408355002999e-1, 1.24628971255534030e-1),
    (-6.17876244402643771e-1, 1.49595988816576764e-1),
    (-4.58016777657227370e-1, 1.69156519395002619e-1),
    (-2.81603550779258915e-1, 1.82603415044923612e-1),
    (-9.50125098376374544e-2, 1.89450610455068585e-1),
    (9.50125098376374544e-2, 1.89450610455068585e-1),
    (2.81603550779258915e-1, 1.82603415044923612e-1),
    (4.58016777657227370e-1, 1.69156519395002619e-1),
    (6.17876244402643771e-1, 1.49595988816576764e-1),
    (7.55404408355002999e-1, 1.24628971255534030e-1),
    (8.65631202387831755e-1, 9.51585116824925914e-2),
    (9.44575023073232600e-1, 6.22535239386477063e-2),
    (9.89400934991649939e-1, 2.71524594117540374e-2),
];

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [-1, 1],
/// sorted by node. `n` must lie in 2..=64.
///
/// The default order 16 comes from a fixed table; other orders are computed
/// from the symmetric eigenproblem of the Jacobi matrix (Golub-Welsch).
pub fn gauss_legendre(n: u32) -> Result<Vec<(f64, f64)>> {
    if !(2..=64).contains(&n) {
        return Err(Error::QuadratureOrder(n));
    }
    if n == 16 {
        return Ok(GL16.to_vec());
    }
    Ok(golub_welsch(n))
}

fn golub_welsch(n: u32) -> Vec<(f64, f64)> {
    let size = n as usize;
    let mut jacobi = nalgebra::DMatrix::<f64>::zeros(size, size);
    for j in 1..size {
        let jf = j as f64;
        let b = jf / (4.0 * jf * jf - 1.0).sqrt();
        jacobi[(j - 1, j)] = b;
        jacobi[(j, j - 1)] = b;
    }
    let eig = nalgebra::SymmetricEigen::new(jacobi);
    let mut rule: Vec<(f64, f64)> = (0..size)
        .map(|i| {
            let node = eig.eigenvalues[i];
            let first = eig.eigenvectors[(0, i)];
            (node, 2.0 * first * first)
        })
        .collect();
    rule.sort_by(|a, b| a.0.total_cmp(&b.0));
    rule
}

/// Integrates a complex-valued function over `[a, b]` with `panels`
/// equal-width panels of the given rule.
pub fn integrate_complex<F>(f: F, a: f64, b: f64, panels: u32, rule: &[(f64, f64)]) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    debug_assert!(panels >= 1);
    let width = (b - a) / panels as f64;
    let half = 0.5 * width;
    let mut acc = Complex64::ZERO;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * width;
        let mut s = Complex64::ZERO;
        for &(x, w) in rule {
            s += w * f(mid + half * x);
        }
        acc += half * s;
    }
    acc
}
