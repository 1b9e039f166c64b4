//! Closed-form weak limits of rescaled density-matrix sums.
//!
//! Every law lives on a symmetric interval `(-b, b)` and has the form
//! `reduced(y) / sqrt(b² - y²)` there, plus an optional point mass at the
//! origin. `reduced` is analytic on the closed interval, so after the
//! substitution `y = b sin φ` moments become integrals of smooth functions.
//!
//! The 2-state laws are parameterized for the two real coin families only.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use std::fmt;
use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coin::Coin;
use crate::quad;
use crate::{Error, Result};

/// Real or imaginary part of a matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Part {
    Real,
    Imag,
}

/// Off-diagonal entry of a 3-state density matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroverPair {
    P01,
    P02,
    P12,
}

impl GroverPair {
    pub const ALL: [GroverPair; 3] = [GroverPair::P01, GroverPair::P02, GroverPair::P12];

    pub fn from_indices(j1: usize, j2: usize) -> Result<Self> {
        match (j1, j2) {
            (0, 1) => Ok(GroverPair::P01),
            (0, 2) => Ok(GroverPair::P02),
            (1, 2) => Ok(GroverPair::P12),
            _ => Err(Error::InvalidIndex { j1, j2, dim: 3 }),
        }
    }

    pub fn indices(self) -> (usize, usize) {
        match self {
            GroverPair::P01 => (0, 1),
            GroverPair::P02 => (0, 2),
            GroverPair::P12 => (1, 2),
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for GroverPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.indices();
        write!(f, "{a}{b}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Shape {
    /// `|s| (1 - w y) / (π (1 - y²))`
    Konno {
        s_abs: f64,
        weight: f64,
    },
    /// `scale · y · |s| (1 - w y) / (π (1 - y²))`
    TwoStateReal {
        scale: f64,
        s_abs: f64,
        weight: f64,
    },
    /// `amp · (c² - y²) / (1 - y²)`
    TwoStateImag {
        amp: f64,
        c: f64,
    },
    GroverReal {
        pair: GroverPair,
        c: [f64; 3],
    },
    GroverImag {
        pair: GroverPair,
        d: [f64; 2],
    },
}

/// A limit law: density on `(-b, b)` plus a point mass at the origin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitLaw {
    support_bound: f64,
    point_mass: f64,
    shape: Shape,
}

const GROVER_BOUND: f64 = 0.577_350_269_189_625_8; // 1/√3

impl LimitLaw {
    pub fn support_bound(&self) -> f64 {
        self.support_bound
    }

    pub fn point_mass(&self) -> f64 {
        self.point_mass
    }

    /// `density(y) · sqrt(b² - y²)`, analytic on `[-b, b]`.
    pub fn reduced(&self, y: f64) -> f64 {
        match self.shape {
            Shape::Konno { s_abs, weight } => s_abs * (1.0 - weight * y) / (PI * (1.0 - y * y)),
            Shape::TwoStateReal {
                scale,
                s_abs,
                weight,
            } => scale * y * s_abs * (1.0 - weight * y) / (PI * (1.0 - y * y)),
            Shape::TwoStateImag { amp, c } => amp * (c * c - y * y) / (1.0 - y * y),
            Shape::GroverReal { pair, c } => {
                // √(1 - 3y²) = √3 · √(b² - y²)
                let q = SQRT_2 * (c[0] + c[1] * y + c[2] * y * y) / (4.0 * PI * 3f64.sqrt());
                q * grover_real_factor(pair, y)
            }
            Shape::GroverImag { pair, d } => {
                let b2 = GROVER_BOUND * GROVER_BOUND;
                let q = (d[0] + d[1] * y) * 3f64.sqrt() * (b2 - y * y) / PI;
                q * grover_imag_factor(pair, y)
            }
        }
    }

    /// Pointwise density; zero outside the open support.
    pub fn density(&self, y: f64) -> f64 {
        let b = self.support_bound;
        // Also rejects NaN.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(y.abs() < b) {
            return 0.0;
        }
        let root = ((b - y) * (b + y)).sqrt();
        match self.shape {
            Shape::TwoStateImag { amp, c } => amp * ((c - y) * (c + y)).sqrt() / (1.0 - y * y),
            _ => self.reduced(y) / root,
        }
    }

    /// `point_mass · 0^r + ∫ y^r density(y) dy`, with `0^0 = 1`.
    pub fn moment(&self, r: u32) -> Result<f64> {
        self.moment_with_tolerance(r, quad::DEFAULT_TOLERANCE)
    }

    pub fn moment_with_tolerance(&self, r: u32, tol: f64) -> Result<f64> {
        let b = self.support_bound;
        let continuous = quad::integrate(
            |phi| {
                let y = b * phi.sin();
                y.powi(r as i32) * self.reduced(y)
            },
            -PI / 2.0,
            PI / 2.0,
            tol,
        )?;
        let atom = if r == 0 { self.point_mass } else { 0.0 };
        Ok(atom + continuous)
    }

    /// Law table: `# point_mass=<value>`, then `y,density` on `points` uniform
    /// nodes spanning the closed support.
    pub fn write_table<W: Write>(&self, points: usize, mut out: W) -> Result<()> {
        let points = points.max(2);
        let b = self.support_bound;
        writeln!(out, "# point_mass={}", self.point_mass)?;
        writeln!(out, "y,density")?;
        for i in 0..points {
            let y = -b + 2.0 * b * i as f64 / (points - 1) as f64;
            writeln!(out, "{},{}", y, self.density(y))?;
        }
        Ok(())
    }
}

fn grover_real_factor(pair: GroverPair, y: f64) -> f64 {
    match pair {
        GroverPair::P01 => y / (1.0 + y),
        GroverPair::P02 => (1.0 - 5.0 * y * y) / (2.0 * (1.0 - y * y)),
        GroverPair::P12 => -y / (1.0 - y),
    }
}

fn grover_imag_factor(pair: GroverPair, y: f64) -> f64 {
    match pair {
        GroverPair::P01 => FRAC_1_SQRT_2 / (1.0 + y),
        GroverPair::P02 => -SQRT_2 * y / (1.0 - y * y),
        GroverPair::P12 => -FRAC_1_SQRT_2 / (1.0 - y),
    }
}

fn check_unit(norm_sqr: f64) -> Result<()> {
    if (norm_sqr.sqrt() - 1.0).abs() <= crate::walk::NORM_TOLERANCE {
        Ok(())
    } else {
        Err(Error::NotNormalized { norm_sqr })
    }
}

fn two_state_coin(coin: &Coin, alpha: Complex64, beta: Complex64) -> Result<()> {
    if !coin.is_two_state() {
        return Err(Error::WrongWalk {
            expected: "2-state",
        });
    }
    check_unit(alpha.norm_sqr() + beta.norm_sqr())
}

/// Limit density `g` of `X_t / t` for a 2-state walk started at one site in
/// `α|0> + β|1>`.
pub fn konno_density(coin: &Coin, alpha: Complex64, beta: Complex64) -> Result<LimitLaw> {
    two_state_coin(coin, alpha, beta)?;
    let m = coin.matrix();
    let (u00, u01) = (m.get(0, 0), m.get(0, 1));
    let c2 = coin.c() * coin.c();
    let cross = alpha * u00 * (beta * u01).conj() + (alpha * u00).conj() * beta * u01;
    let weight = alpha.norm_sqr() - beta.norm_sqr() + cross.re / c2;
    Ok(LimitLaw {
        support_bound: coin.c().abs(),
        point_mass: 0.0,
        shape: Shape::Konno {
            s_abs: coin.s().abs(),
            weight,
        },
    })
}

/// Limits of the real and imaginary parts of `<0|ρ_t(x)|1>` for a 2-state walk
/// started at one site in `α|0> + β|1>`.
pub fn two_state_interference_laws(
    coin: &Coin,
    alpha: Complex64,
    beta: Complex64,
) -> Result<(LimitLaw, LimitLaw)> {
    two_state_coin(coin, alpha, beta)?;
    let (c, s, det) = (coin.c(), coin.s(), coin.det());
    let ab = alpha * beta.conj();
    let weight = alpha.norm_sqr() - beta.norm_sqr() - det * (s / c) * 2.0 * ab.re;
    let real = LimitLaw {
        support_bound: c.abs(),
        point_mass: 0.0,
        shape: Shape::TwoStateReal {
            scale: det * s / (2.0 * c),
            s_abs: s.abs(),
            weight,
        },
    };
    let imag = LimitLaw {
        support_bound: c.abs(),
        point_mass: 0.0,
        shape: Shape::TwoStateImag {
            amp: s.abs() * ab.im / (PI * c * c),
            c,
        },
    };
    Ok((real, imag))
}

/// Point masses and polynomial coefficients of the 3-state Grover interference
/// limits for a walker started at one site in `α|0> + β|1> + γ|2>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroverCoefficients {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    delta_real: [f64; 3],
    delta_imag: [f64; 3],
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub d0: f64,
    pub d1: f64,
}

impl GroverCoefficients {
    pub fn delta(&self, part: Part, pair: GroverPair) -> f64 {
        match part {
            Part::Real => self.delta_real[pair.slot()],
            Part::Imag => self.delta_imag[pair.slot()],
        }
    }
}

pub fn grover_coefficients(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
) -> Result<GroverCoefficients> {
    check_unit(alpha.norm_sqr() + beta.norm_sqr() + gamma.norm_sqr())?;
    let sqrt6 = 6f64.sqrt();
    let half_beta = beta / 2.0;
    let spread = (alpha + half_beta).norm_sqr() + (gamma + half_beta).norm_sqr();
    let mixed = ((2.0 * alpha + beta) * (2.0 * gamma + beta).conj()).re;
    let r01 = sqrt6 / 36.0 * spread + (1.0 - 29.0 * sqrt6 / 72.0) * mixed;
    let r02 = -sqrt6 / 72.0 * spread + (2.0 - 115.0 * sqrt6 / 144.0) * mixed;

    let chirality = (alpha.conj() * beta + beta.conj() * gamma + 2.0 * gamma * alpha.conj()).im;
    let i01 = (2.0 - 5.0 * sqrt6 / 6.0) * chirality;
    let i02 = (4.0 - 5.0 * sqrt6 / 3.0) * chirality;

    Ok(GroverCoefficients {
        alpha,
        beta,
        gamma,
        delta_real: [r01, r02, r01],
        delta_imag: [i01, i02, i01],
        c0: (alpha + gamma).norm_sqr() + 2.0 * beta.norm_sqr(),
        c1: 2.0 * (-(alpha - beta).norm_sqr() + (gamma - beta).norm_sqr()),
        c2: (alpha - gamma).norm_sqr() - 2.0 * mixed,
        d0: ((alpha + gamma) * beta.conj()).im,
        d1: (alpha.conj() * (beta + gamma) + (alpha.conj() + beta.conj()) * gamma).im,
    })
}

/// Real and imaginary limit laws of `<j1|ρ_t(x)|j2>` for the Grover walk.
pub fn grover_interference_laws(
    coeffs: &GroverCoefficients,
    j1: usize,
    j2: usize,
) -> Result<(LimitLaw, LimitLaw)> {
    let pair = GroverPair::from_indices(j1, j2)?;
    let real = LimitLaw {
        support_bound: GROVER_BOUND,
        point_mass: coeffs.delta(Part::Real, pair),
        shape: Shape::GroverReal {
            pair,
            c: [coeffs.c0, coeffs.c1, coeffs.c2],
        },
    };
    let imag = LimitLaw {
        support_bound: GROVER_BOUND,
        point_mass: coeffs.delta(Part::Imag, pair),
        shape: Shape::GroverImag {
            pair,
            d: [coeffs.d0, coeffs.d1],
        },
    };
    Ok((real, imag))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn symmetric_hadamard() -> (Coin, Complex64, Complex64) {
        (
            Coin::hadamard(),
            c(FRAC_1_SQRT_2, 0.0),
            c(0.0, FRAC_1_SQRT_2),
        )
    }

    fn localized_spinor() -> (Complex64, Complex64, Complex64) {
        let r = 1.0 / 3f64.sqrt();
        (c(r, 0.0), c(0.0, r), c(0.0, r))
    }

    #[test]
    fn konno_density_at_origin_and_outside() {
        let (coin, a, b) = symmetric_hadamard();
        let g = konno_density(&coin, a, b).unwrap();
        assert!((g.density(0.0) - 1.0 / PI).abs() < 1e-15);
        for y in [0.71, -0.8, 1.0, 5.0] {
            assert_eq!(g.density(y), 0.0);
        }
        let other = konno_density(&coin, c(0.6, 0.0), c(0.8, 0.0)).unwrap();
        assert!((other.density(0.0) - 1.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn symmetric_start_gives_even_g() {
        let (coin, a, b) = symmetric_hadamard();
        let g = konno_density(&coin, a, b).unwrap();
        for y in [0.1, 0.3, 0.5, 0.7] {
            assert_eq!(g.density(y), g.density(-y));
        }
    }

    #[test]
    fn symmetric_interference_laws_at_origin() {
        let (coin, a, b) = symmetric_hadamard();
        let (re, im) = two_state_interference_laws(&coin, a, b).unwrap();
        assert_eq!(re.density(0.0), 0.0);
        assert!((im.density(0.0) + 1.0 / (2.0 * PI)).abs() < 1e-15);
        assert_eq!(im.density(0.3), im.density(-0.3));
        assert_eq!(re.point_mass(), 0.0);
    }

    #[test]
    fn second_moment_of_g() {
        let (coin, a, b) = symmetric_hadamard();
        let g = konno_density(&coin, a, b).unwrap();
        // ∫ y² |s| / (π (1-y²) √(c²-y²)) = 1 - √(1-c²) with c² = 1/2
        assert!((g.moment(2).unwrap() - (1.0 - FRAC_1_SQRT_2)).abs() < 1e-10);
        assert!(g.moment(1).unwrap().abs() < 1e-12);
        assert!((g.moment(0).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn imaginary_zeroth_moment_closed_form() {
        let (coin, a, b) = symmetric_hadamard();
        let (_, im) = two_state_interference_laws(&coin, a, b).unwrap();
        // ∫ √(c²-y²)/(1-y²) dy = π (1 - √(1-c²)), prefactor -1/(2π·c²) ... = -(1/√2 - 1/2)
        let expected = -(FRAC_1_SQRT_2 - 0.5);
        assert!((im.moment(0).unwrap() - expected).abs() < 1e-10);
        assert!(im.moment(1).unwrap().abs() < 1e-12);
    }

    #[test]
    fn three_state_laws_need_a_two_state_coin() {
        assert!(matches!(
            konno_density(&Coin::grover(), c(1.0, 0.0), c(0.0, 0.0)),
            Err(Error::WrongWalk { .. })
        ));
        assert!(konno_density(&Coin::hadamard(), c(1.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn localized_grover_coefficients() {
        let (a, b, g) = localized_spinor();
        let k = grover_coefficients(a, b, g).unwrap();
        let expected_i01 = 2.0 - 5.0 * 6f64.sqrt() / 6.0;
        assert!((k.delta(Part::Imag, GroverPair::P01) - expected_i01).abs() < 1e-15);
        assert!((expected_i01 + 0.041_241_452_319_315).abs() < 1e-14);
        assert!((k.c0 - 4.0 / 3.0).abs() < 1e-15);
        assert!((k.d0 + 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn grover_coefficient_identities() {
        let (a, b, g) = localized_spinor();
        let k = grover_coefficients(a, b, g).unwrap();
        for part in [Part::Real, Part::Imag] {
            assert_eq!(
                k.delta(part, GroverPair::P01),
                k.delta(part, GroverPair::P12)
            );
        }
        let i01 = k.delta(Part::Imag, GroverPair::P01);
        let i02 = k.delta(Part::Imag, GroverPair::P02);
        assert!((i02 - 2.0 * i01).abs() < 1e-15);
        assert!(k.c0 >= 0.0);
    }

    #[test]
    fn real_start_has_no_imaginary_point_masses() {
        let k = grover_coefficients(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        for pair in GroverPair::ALL {
            assert_eq!(k.delta(Part::Imag, pair), 0.0);
        }
        assert!(grover_coefficients(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn grover_pair_validation() {
        let (a, b, g) = localized_spinor();
        let k = grover_coefficients(a, b, g).unwrap();
        assert!(grover_interference_laws(&k, 1, 0).is_err());
        assert!(grover_interference_laws(&k, 0, 3).is_err());
        let (re, _) = grover_interference_laws(&k, 0, 1).unwrap();
        assert_eq!(re.density(0.0), 0.0);
        assert_eq!(re.point_mass(), k.delta(Part::Real, GroverPair::P01));
        // r = 0 carries the atom, r >= 1 does not
        let m0 = re.moment(0).unwrap();
        let continuous = re.moment_with_tolerance(0, 1e-10).unwrap() - re.point_mass();
        assert!((m0 - re.point_mass() - continuous).abs() < 1e-15);
    }

    #[test]
    fn grover_endpoint_behaviour() {
        let (a, b, g) = localized_spinor();
        let k = grover_coefficients(a, b, g).unwrap();
        let (re, im) = grover_interference_laws(&k, 0, 1).unwrap();
        // Shrinking the gap 100x scales the density by 10 (inverse root) or 1/10 (root).
        let (near, far) = (GROVER_BOUND - 1e-10, GROVER_BOUND - 1e-8);
        assert!((re.density(near) / re.density(far) - 10.0).abs() < 1e-3);
        assert!((im.density(near) / im.density(far) - 0.1).abs() < 1e-4);
        assert_eq!(re.density(GROVER_BOUND), 0.0);
    }

    #[test]
    fn mirrored_grover_real_densities() {
        // y/(1+y) at -y is -y/(1-y), so f12(y) = f01(-y) once the odd coefficient c1 flips.
        let k = grover_coefficients(c(0.6, 0.0), c(0.0, 0.0), c(0.0, 0.8)).unwrap();
        assert!((k.c1 - 2.0 * (-0.36 + 0.64)).abs() < 1e-15);
        let (f01, _) = grover_interference_laws(&k, 0, 1).unwrap();
        let (f12, _) = grover_interference_laws(&k, 1, 2).unwrap();
        let mirrored = GroverCoefficients { c1: -k.c1, ..k };
        let (f01_flipped, _) = grover_interference_laws(&mirrored, 0, 1).unwrap();
        for i in 1..50 {
            let y = -0.57 + 1.14 * i as f64 / 50.0;
            assert!((f12.density(y) - f01_flipped.density(-y)).abs() < 1e-12);
        }
        assert!((f12.density(0.2) - f01.density(-0.2)).abs() > 1e-6);
    }

    #[test]
    fn law_table_layout() {
        let (coin, a, b) = symmetric_hadamard();
        let (_, im) = two_state_interference_laws(&coin, a, b).unwrap();
        let mut buf = Vec::new();
        im.write_table(5, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "# point_mass=0");
        assert_eq!(lines[1], "y,density");
        assert_eq!(lines.len(), 7);
        assert!(lines[4].starts_with("0,"));
    }
}
