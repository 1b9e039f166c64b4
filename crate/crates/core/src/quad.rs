//! Quadrature rules.
//!
//! [`integrate`] adapts by bisection on top of the double-exponential rule from the
//! `quadrature` crate. It is meant for integrands already made analytic on the
//! closed interval (for example by a sine substitution at square-root endpoints).
//! [`periodic_mean`] is the uniform trapezoid rule for smooth 2π-periodic
//! integrands, which converges spectrally.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::sum::{CompensatedSum, ComplexSum};
use crate::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

const MAX_DEPTH: u32 = 30;

/// Environment variable that overrides [`DEFAULT_TOLERANCE`] in the CLI.
pub const TOLERANCE_ENV: &str = "QWALK_QUAD_TOL";

/// `∫_a^b f` to absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    integrate_panel(&f, a, b, tol, 0)
}

fn integrate_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Result<f64> {
    let out = quadrature::double_exponential::integrate(f, a, b, tol);
    if out.error_estimate <= tol {
        return Ok(out.integral);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::QuadratureFailure {
            tolerance: tol,
            estimate: out.error_estimate,
        });
    }
    let mid = 0.5 * (a + b);
    let left = integrate_panel(f, a, mid, 0.5 * tol, depth + 1)?;
    let right = integrate_panel(f, mid, b, 0.5 * tol, depth + 1)?;
    Ok(left + right)
}

/// Node `j` of the `nodes`-point periodic grid. The grid is offset by half a step
/// so that `k = 0`, where Grover bands touch, is never sampled.
pub fn periodic_node(j: usize, nodes: usize) -> f64 {
    -PI + 2.0 * PI * (j as f64 + 0.5) / nodes as f64
}

/// `∫_{-π}^{π} f(k) dk/2π` by the trapezoid rule on `nodes` uniform points.
pub fn periodic_trapezoid<F: Fn(f64) -> f64>(f: F, nodes: usize) -> f64 {
    let total = (0..nodes)
        .map(|j| f(periodic_node(j, nodes)))
        .collect::<CompensatedSum>()
        .value();
    total / nodes as f64
}

/// [`periodic_trapezoid`] with the node count doubled from `start_nodes` until two
/// successive estimates differ by less than `tol`.
pub fn periodic_mean<F: Fn(f64) -> f64>(f: F, start_nodes: usize, tol: f64) -> Result<f64> {
    const MAX_NODES: usize = 1 << 22;
    let mut nodes = start_nodes.max(2);
    let mut previous = periodic_trapezoid(&f, nodes);
    loop {
        nodes *= 2;
        let current = periodic_trapezoid(&f, nodes);
        let change = (current - previous).abs();
        if change < tol {
            return Ok(current);
        }
        if nodes >= MAX_NODES {
            return Err(Error::QuadratureFailure {
                tolerance: tol,
                estimate: change,
            });
        }
        previous = current;
    }
}

/// Complex version of [`periodic_mean`]; both components must settle.
pub fn periodic_mean_complex<F: Fn(f64) -> Complex64>(
    f: F,
    start_nodes: usize,
    tol: f64,
) -> Result<Complex64> {
    const MAX_NODES: usize = 1 << 22;
    let estimate = |nodes: usize| {
        let mut acc = ComplexSum::new();
        for j in 0..nodes {
            acc.add(f(periodic_node(j, nodes)));
        }
        acc.value() / nodes as f64
    };
    let mut nodes = start_nodes.max(2);
    let mut previous = estimate(nodes);
    loop {
        nodes *= 2;
        let current = estimate(nodes);
        let change = (current - previous).norm();
        if change < tol {
            return Ok(current);
        }
        if nodes >= MAX_NODES {
            return Err(Error::QuadratureFailure {
                tolerance: tol,
                estimate: change,
            });
        }
        previous = current;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_transcendental() {
        let v = integrate(|x| x * x, 0.0, 3.0, 1e-12).unwrap();
        assert!((v - 9.0).abs() < 1e-12);
        let v = integrate(f64::cos, -PI / 2.0, PI / 2.0, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn sharp_peak_needs_bisection() {
        // Lorentzian of width 1e-3: ∫ = atan(1/w) - atan(-1/w) scaled.
        let w = 1e-3;
        let v = integrate(|x| w / (x * x + w * w), -1.0, 1.0, 1e-10).unwrap();
        let exact = 2.0 * (1.0 / w).atan();
        assert!((v - exact).abs() < 1e-9, "{v} vs {exact}");
    }

    #[test]
    fn unreachable_tolerance_is_reported() {
        let err = integrate(|x| x.sin(), 0.0, 1.0, 0.0).unwrap_err();
        assert!(matches!(err, Error::QuadratureFailure { .. }));
    }

    #[test]
    fn trapezoid_is_spectral_for_periodic_integrands() {
        // mean of 1/(2 + cos k) over a period is 1/sqrt(3)
        let v = periodic_mean(|k| 1.0 / (2.0 + k.cos()), 16, 1e-14).unwrap();
        assert!((v - 1.0 / 3f64.sqrt()).abs() < 1e-14);
    }
}
