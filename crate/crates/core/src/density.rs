//! Local density matrices and the rescaled sums built from them.

use std::collections::BTreeMap;
use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::linalg::{Matrix, Spinor};
use crate::sum::{CompensatedSum, ComplexSum};
use crate::walk::WalkState;
use crate::{Error, Result};

/// `ρ_t(x) = |ψ_t(x)><ψ_t(x)|` at one site.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalDensity {
    pub x: i64,
    pub mat: Matrix,
}

impl LocalDensity {
    pub fn entry(&self, j1: usize, j2: usize) -> Complex64 {
        self.mat.get(j1, j2)
    }

    pub fn trace(&self) -> f64 {
        self.mat.trace().re
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.mat.max_abs_diff(&self.mat.adjoint())
    }

    /// Largest 2×2 minor, zero for a rank ≤ 1 matrix.
    pub fn rank_one_defect(&self) -> f64 {
        let d = self.mat.dim();
        let m = |i, j| self.mat.get(i, j);
        let mut worst = 0.0f64;
        for i in 0..d {
            for k in i + 1..d {
                for j in 0..d {
                    for l in j + 1..d {
                        worst = worst.max((m(i, j) * m(k, l) - m(i, l) * m(k, j)).norm());
                    }
                }
            }
        }
        worst
    }

    /// `<w|ρ|w>`, nonnegative for a positive semidefinite ρ.
    pub fn quadratic_form(&self, w: &Spinor) -> f64 {
        self.mat.sandwich(w, w).re
    }
}

pub fn density_at(state: &WalkState, x: i64) -> LocalDensity {
    let psi = state.spinor(x);
    LocalDensity {
        x,
        mat: Matrix::outer(&psi, &psi),
    }
}

/// `<j1|ρ(x)|j2> = ψ_j1 conj(ψ_j2)`, written out so that swapping the indices
/// yields the exact complex conjugate.
fn interference(a: &[Complex64], j1: usize, j2: usize) -> Complex64 {
    let (p, q) = (a[j1], a[j2]);
    Complex64::new(p.re * q.re + p.im * q.im, p.im * q.re - p.re * q.im)
}

fn site_probability(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum()
}

fn check_pair(state: &WalkState, j1: usize, j2: usize) -> Result<()> {
    let dim = state.dim();
    if j1 >= dim || j2 >= dim {
        return Err(Error::InvalidIndex { j1, j2, dim });
    }
    Ok(())
}

/// Weight `(x/t)^r`, with `0^0 = 1` and the r = 0 weight defined at t = 0.
fn rescaling(state: &WalkState, r: u32) -> Result<impl Fn(i64) -> f64> {
    let t = state.time();
    if t == 0 && r > 0 {
        return Err(Error::UndefinedRescaling { r });
    }
    let t = t.max(1) as f64;
    Ok(move |x: i64| (x as f64 / t).powi(r as i32))
}

/// `P(X_t = x)` for every stored site.
pub fn probability_distribution(state: &WalkState) -> BTreeMap<i64, f64> {
    state
        .sites()
        .map(|(x, a)| (x, site_probability(a)))
        .collect()
}

/// `Σ_x (x/t)^r <j1|ρ_t(x)|j2>`.
pub fn rescaled_sum(state: &WalkState, r: u32, j1: usize, j2: usize) -> Result<Complex64> {
    check_pair(state, j1, j2)?;
    let weight = rescaling(state, r)?;
    let mut acc = ComplexSum::new();
    for (x, a) in state.sites() {
        acc.add(interference(a, j1, j2) * weight(x));
    }
    Ok(acc.value())
}

/// `E[(X_t/t)^r]`, the diagonal rescaled sums added over the internal states.
pub fn empirical_moment(state: &WalkState, r: u32) -> Result<f64> {
    let weight = rescaling(state, r)?;
    Ok(state
        .sites()
        .map(|(x, a)| site_probability(a) * weight(x))
        .collect::<CompensatedSum>()
        .value())
}

/// Rescaled sums of one matrix entry for `r = 0..=r_max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentSeries {
    pub entry: (usize, usize),
    pub t: u64,
    pub values: Vec<MomentValue>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentValue {
    pub r: u32,
    #[serde(with = "crate::decimal::complex")]
    pub value: Complex64,
}

impl MomentSeries {
    pub fn get(&self, r: u32) -> Option<Complex64> {
        self.values.iter().find(|v| v.r == r).map(|v| v.value)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub fn moment_series(state: &WalkState, j1: usize, j2: usize, r_max: u32) -> Result<MomentSeries> {
    let values = (0..=r_max)
        .map(|r| rescaled_sum(state, r, j1, j2).map(|value| MomentValue { r, value }))
        .collect::<Result<_>>()?;
    Ok(MomentSeries {
        entry: (j1, j2),
        t: state.time(),
        values,
    })
}

/// Density dump: `x,j1,j2,re,im` for every stored site and index pair.
pub fn write_density_csv<W: Write>(state: &WalkState, mut out: W) -> Result<()> {
    writeln!(out, "x,j1,j2,re,im")?;
    for (x, a) in state.sites() {
        for j1 in 0..state.dim() {
            for j2 in 0..state.dim() {
                let z = interference(a, j1, j2);
                writeln!(out, "{x},{j1},{j2},{},{}", z.re, z.im)?;
            }
        }
    }
    Ok(())
}

/// Interference profile: `x_over_t,re,im` of `<j1|ρ_t(x)|j2>` for every stored site.
pub fn write_interference_csv<W: Write>(
    state: &WalkState,
    j1: usize,
    j2: usize,
    mut out: W,
) -> Result<()> {
    check_pair(state, j1, j2)?;
    if state.time() == 0 {
        return Err(Error::UndefinedRescaling { r: 1 });
    }
    let t = state.time() as f64;
    writeln!(out, "x_over_t,re,im")?;
    for (x, a) in state.sites() {
        let z = interference(a, j1, j2);
        writeln!(out, "{},{},{}", x as f64 / t, z.re, z.im)?;
    }
    Ok(())
}

/// Probability table `x,probability`.
pub fn write_probability_csv<W: Write>(state: &WalkState, mut out: W) -> Result<()> {
    writeln!(out, "x,probability")?;
    for (x, p) in probability_distribution(state) {
        writeln!(out, "{x},{p}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_1_SQRT_2;

    use super::*;
    use crate::coin::Coin;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn symmetric() -> WalkState {
        WalkState::single_site(2, 0, &[c(FRAC_1_SQRT_2, 0.0), c(0.0, FRAC_1_SQRT_2)]).unwrap()
    }

    fn two_steps_from_basis0() -> WalkState {
        WalkState::single_site(2, 0, &[c(1.0, 0.0), c(0.0, 0.0)])
            .unwrap()
            .evolve(&Coin::hadamard(), 2)
            .unwrap()
    }

    #[test]
    fn initial_density_is_the_spinor_outer_product() {
        let rho = density_at(&symmetric(), 0);
        let expected = [[c(0.5, 0.0), c(0.0, -0.5)], [c(0.0, 0.5), c(0.5, 0.0)]];
        for (i, row) in expected.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                assert!((rho.entry(i, j) - e).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn unoccupied_site_has_zero_density() {
        let rho = density_at(&symmetric(), 17);
        assert_eq!(rho.mat, Matrix::zeros(2));
    }

    #[test]
    fn two_step_interference_at_origin() {
        let rho = density_at(&two_steps_from_basis0(), 0);
        assert!((rho.entry(0, 1) - c(0.25, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn two_step_distribution() {
        let p = probability_distribution(&two_steps_from_basis0());
        let nonzero: Vec<_> = p.iter().filter(|(_, v)| **v > 0.0).collect();
        assert_eq!(nonzero.len(), 3);
        assert!((p[&-2] - 0.25).abs() < 1e-15);
        assert!((p[&0] - 0.5).abs() < 1e-15);
        assert!((p[&2] - 0.25).abs() < 1e-15);
    }

    #[test]
    fn initial_distribution_is_a_point() {
        let s = WalkState::single_site(2, 5, &[c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        let p = probability_distribution(&s);
        assert_eq!(p.len(), 1);
        assert!((p[&5] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zeroth_moment_is_total_probability() {
        let s = symmetric().evolve(&Coin::hadamard(), 37).unwrap();
        let total = rescaled_sum(&s, 0, 0, 0).unwrap() + rescaled_sum(&s, 0, 1, 1).unwrap();
        assert!((total - c(1.0, 0.0)).norm() < 1e-13);
        assert!((empirical_moment(&s, 0).unwrap() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn rescaling_requires_positive_time() {
        let s = symmetric();
        assert!(matches!(
            rescaled_sum(&s, 1, 0, 1),
            Err(Error::UndefinedRescaling { r: 1 })
        ));
        assert!(rescaled_sum(&s, 0, 0, 1).is_ok());
        assert!(matches!(
            rescaled_sum(&s, 0, 0, 2),
            Err(Error::InvalidIndex { .. })
        ));
    }

    #[test]
    fn swapped_indices_give_exact_conjugates() {
        let s = symmetric()
            .evolve(&Coin::family_b(0.7).unwrap(), 101)
            .unwrap();
        for r in 0..4 {
            let a = rescaled_sum(&s, r, 0, 1).unwrap();
            let b = rescaled_sum(&s, r, 1, 0).unwrap();
            assert_eq!(a, b.conj());
        }
    }

    #[test]
    fn moment_series_and_dumps() {
        let s = two_steps_from_basis0();
        let series = moment_series(&s, 0, 1, 2).unwrap();
        assert_eq!(series.values.len(), 3);
        assert_eq!(series.get(0), Some(rescaled_sum(&s, 0, 0, 1).unwrap()));
        let json = series.to_json().unwrap();
        let back: MomentSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, series);

        let mut buf = Vec::new();
        write_density_csv(&s, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("x,j1,j2,re,im"));
        assert_eq!(text.lines().count(), 1 + 4 * s.len());
        let origin = text.lines().find(|l| l.starts_with("0,0,1,")).unwrap();
        let re: f64 = origin.split(',').nth(3).unwrap().parse().unwrap();
        assert!((re - 0.25).abs() < 1e-15);

        let mut buf = Vec::new();
        write_interference_csv(&s, 0, 1, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("x_over_t,re,im\n-1,"));
        assert!(write_interference_csv(&symmetric(), 0, 1, Vec::new()).is_err());
    }
}
