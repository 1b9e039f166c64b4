//! Momentum-space description of the walks.
//!
//! With `Ψ̂(k) = Σ_x e^{-ikx} ψ(x)` one step becomes multiplication by the
//! Fourier symbol `Û(k) = R(k) U`. Its eigenvalues `λ_j(k)` and the velocity
//! functions `h_j(k) = i λ_j'(k) / λ_j(k)` govern the long-time behaviour. This
//! module provides the eigensystems, an independent k-space propagator, and the
//! k-integrals behind the limit laws (flat-band point masses, limit moments and
//! the oscillatory band-mixing terms).

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;

use crate::coin::{Coin, CoinKind};
use crate::laws::{GroverPair, Part};
use crate::linalg::{Matrix, Spinor};
use crate::quad;
use crate::walk::WalkState;
use crate::{Error, Result};

/// Starting node count for k-space trapezoid integrals.
pub const DEFAULT_K_NODES: usize = 4096;

/// Largest accepted eigen-equation residual.
pub const EIGEN_RESIDUAL_LIMIT: f64 = 1e-10;

const FD_STEP: f64 = 1e-5;

fn cis(phase: f64) -> Complex64 {
    Complex64::from_polar(1.0, phase)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eigenpair {
    pub value: Complex64,
    /// Unit eigenvector. Its phase is arbitrary.
    pub vector: Spinor,
    /// `h(k) = i λ'(k) / λ(k)`
    pub velocity: f64,
}

/// `Û(k) = R(k) U` for a given coin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourierSymbol {
    coin: Coin,
}

impl FourierSymbol {
    pub fn new(coin: Coin) -> Self {
        Self { coin }
    }

    pub fn coin(&self) -> &Coin {
        &self.coin
    }

    pub fn dim(&self) -> usize {
        self.coin.dim()
    }

    /// Number of bands, equal to the internal dimension.
    pub fn bands(&self) -> usize {
        self.dim()
    }

    pub fn phase_matrix(&self, k: f64) -> Matrix {
        match self.dim() {
            2 => Matrix::diagonal(&[cis(k), cis(-k)]),
            _ => Matrix::diagonal(&[cis(k), Complex64::new(1.0, 0.0), cis(-k)]),
        }
    }

    pub fn matrix(&self, k: f64) -> Matrix {
        self.phase_matrix(k).mul(self.coin.matrix())
    }

    /// Eigenvalue of band `band` (0-based) at `k`. 2-state bands follow the
    /// `j = 1, 2` labelling of the closed forms; Grover bands are ordered
    /// flat, upper, lower.
    pub fn eigenvalue(&self, band: usize, k: f64) -> Complex64 {
        match self.coin.kind() {
            CoinKind::FamilyA => {
                let c = self.coin.c();
                let sign = band_sign(band);
                let root = (1.0 - c * c * k.sin().powi(2)).sqrt();
                Complex64::new(-sign * root, c * k.sin())
            }
            CoinKind::FamilyB => {
                let c = self.coin.c();
                let sign = band_sign(band);
                let root = (1.0 - c * c * k.cos().powi(2)).sqrt();
                Complex64::new(c * k.cos(), -sign * root)
            }
            CoinKind::Grover => match band {
                0 => Complex64::new(1.0, 0.0),
                _ => {
                    // Eigenvalues 1, λ, conj(λ): det = 1 and trace = -(1 + 2 cos k)/3.
                    // The imaginary part uses sin(k/2) so each branch stays analytic through k = 0.
                    let re = -(2.0 + k.cos()) / 3.0;
                    let im = (k / 2.0).sin() * (2.0 * (5.0 + k.cos())).sqrt() / 3.0;
                    let sign = if band == 1 { 1.0 } else { -1.0 };
                    Complex64::new(re, sign * im)
                }
            },
        }
    }

    /// `h(k)` for band `band`; analytic for 2-state coins, Richardson-extrapolated
    /// central differences for the Grover bands.
    pub fn velocity(&self, band: usize, k: f64) -> f64 {
        let i = Complex64::new(0.0, 1.0);
        match self.coin.kind() {
            CoinKind::FamilyA => {
                let c = self.coin.c();
                let sign = band_sign(band);
                let (sk, ck) = k.sin_cos();
                let root = (1.0 - c * c * sk * sk).sqrt();
                let d = Complex64::new(sign * c * c * sk * ck / root, c * ck);
                (i * d / self.eigenvalue(band, k)).re
            }
            CoinKind::FamilyB => {
                let c = self.coin.c();
                let sign = band_sign(band);
                let (sk, ck) = k.sin_cos();
                let root = (1.0 - c * c * ck * ck).sqrt();
                let d = Complex64::new(-c * sk, -sign * c * c * ck * sk / root);
                (i * d / self.eigenvalue(band, k)).re
            }
            CoinKind::Grover => {
                if band == 0 {
                    return 0.0;
                }
                let central = |h: f64| {
                    (self.eigenvalue(band, k + h) - self.eigenvalue(band, k - h)) / (2.0 * h)
                };
                let derivative = (4.0 * central(FD_STEP / 2.0) - central(FD_STEP)) / 3.0;
                (i * derivative / self.eigenvalue(band, k)).re
            }
        }
    }

    /// Complete orthonormal eigensystem of `Û(k)`.
    pub fn eigensystem(&self, k: f64) -> Result<Vec<Eigenpair>> {
        let u = self.matrix(k);
        let vectors: Vec<Spinor> = match self.coin.kind() {
            CoinKind::FamilyA | CoinKind::FamilyB => {
                (0..2).map(|b| self.two_state_vector(b, k)).collect()
            }
            CoinKind::Grover => {
                let flat = grover_flat_vector(k);
                let upper = null_vector(&u.sub_scalar_identity(self.eigenvalue(1, k)), &flat);
                // Eigenvectors of a unitary are orthogonal, so the last one is fixed by the other two.
                let lower = flat.conj().cross(&upper.conj()).normalized();
                vec![flat, upper, lower]
            }
        };
        vectors
            .into_iter()
            .enumerate()
            .map(|(band, vector)| {
                let value = self.eigenvalue(band, k);
                let residual = u.apply(&vector).max_abs_diff(&vector.scale(value));
                #[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN residuals fail too
                if !(residual <= EIGEN_RESIDUAL_LIMIT) {
                    return Err(Error::EigenResidual { k, residual });
                }
                Ok(Eigenpair {
                    value,
                    vector,
                    velocity: self.velocity(band, k),
                })
            })
            .collect()
    }

    fn two_state_vector(&self, band: usize, k: f64) -> Spinor {
        let (c, s) = (self.coin.c(), self.coin.s());
        let sign = band_sign(band);
        let top = cis(k) * s;
        let bottom = match self.coin.kind() {
            CoinKind::FamilyA => Complex64::new(
                -c * k.cos() - sign * (1.0 - c * c * k.sin().powi(2)).sqrt(),
                0.0,
            ),
            _ => Complex64::new(
                0.0,
                c * k.sin() + sign * (1.0 - c * c * k.cos().powi(2)).sqrt(),
            ),
        };
        Spinor::from_slice(&[top, bottom]).normalized()
    }
}

/// `(-1)^j` for the closed-form band label `j = band + 1`.
fn band_sign(band: usize) -> f64 {
    if band == 0 {
        -1.0
    } else {
        1.0
    }
}

/// Normalized eigenvector of `R(k) G` at eigenvalue 1.
pub fn grover_flat_vector(k: f64) -> Spinor {
    let norm = (2.0 / (5.0 + k.cos())).sqrt();
    let e = cis(-k);
    Spinor::from_slice(&[
        Complex64::new(norm, 0.0),
        (Complex64::new(1.0, 0.0) + e) * (norm / 2.0),
        e * norm,
    ])
}

/// Unit vector in the kernel of a singular 3×3 matrix. When the kernel is
/// two-dimensional the vector orthogonal to `avoid` is chosen.
fn null_vector(m: &Matrix, avoid: &Spinor) -> Spinor {
    let rows = [m.row(0), m.row(1), m.row(2)];
    let best = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(a, b)| rows[a].cross(&rows[b]))
        .max_by(|x, y| x.norm_sqr().total_cmp(&y.norm_sqr()))
        .expect("three candidate pairs");
    let scale = rows.iter().map(|r| r.norm_sqr()).fold(0.0, f64::max);
    if best.norm_sqr() > 1e-16 * scale * scale {
        return best.normalized();
    }
    // Rank one: the kernel is the plane orthogonal (bilinearly) to the dominant row.
    let dominant = rows
        .iter()
        .max_by(|x, y| x.norm_sqr().total_cmp(&y.norm_sqr()))
        .expect("three rows");
    let candidate = dominant.cross(&avoid.conj());
    if candidate.norm_sqr() > 1e-16 * scale {
        return candidate.normalized();
    }
    // The row is parallel to conj(avoid): the kernel is exactly the orthogonal
    // complement of `avoid`, so any vector bilinearly orthogonal to the row will do.
    (0..3)
        .map(|i| {
            let mut e = Spinor::zeros(3);
            e[i] = Complex64::new(1.0, 0.0);
            dominant.cross(&e)
        })
        .max_by(|x, y| x.norm_sqr().total_cmp(&y.norm_sqr()))
        .expect("three basis vectors")
        .normalized()
}

/// `Ψ̂(k) = Σ_x e^{-ikx} ψ(x)`.
pub fn fourier_transform(state: &WalkState, k: f64) -> Spinor {
    let mut out = Spinor::zeros(state.dim());
    for (x, a) in state.sites() {
        let phase = cis(-k * x as f64);
        for (o, z) in out.as_mut_slice().iter_mut().zip(a) {
            *o += phase * z;
        }
    }
    out
}

/// Smallest node count [`k_space_propagate`] accepts.
pub fn required_nodes(init: &WalkState, t: u64) -> usize {
    2 * (t as usize + init.len()) + 1
}

/// Propagates `init` by `t` steps in momentum space and transforms back with the
/// trapezoid rule on `nodes` uniform k-points (default: the minimum).
pub fn k_space_propagate(
    init: &WalkState,
    symbol: &FourierSymbol,
    t: u64,
    nodes: Option<usize>,
) -> Result<WalkState> {
    if init.dim() != symbol.dim() {
        return Err(Error::DimensionMismatch {
            state: init.dim(),
            coin: symbol.dim(),
        });
    }
    let required = required_nodes(init, t);
    let nodes = nodes.unwrap_or(required);
    if nodes < required {
        return Err(Error::InsufficientNodes {
            nodes,
            required,
            t,
            width: init.len(),
        });
    }
    let d = init.dim();
    let h = 2.0 * PI / nodes as f64;
    let spectra: Vec<(f64, Spinor)> = (0..nodes)
        .map(|j| {
            let k = -PI + h * j as f64;
            let u = symbol.matrix(k);
            let mut psi = fourier_transform(init, k);
            for _ in 0..t {
                psi = u.apply(&psi);
            }
            (k, psi)
        })
        .collect();

    let offset = init.offset() - t as i64;
    let len = init.len() + 2 * t as usize;
    let mut amps = vec![Complex64::new(0.0, 0.0); len * d];
    for (i, site) in amps.chunks_exact_mut(d).enumerate() {
        let x = (offset + i as i64) as f64;
        let mut acc = vec![crate::sum::ComplexSum::new(); d];
        for (k, psi) in &spectra {
            let phase = cis(k * x);
            for (a, z) in acc.iter_mut().zip(psi.as_slice()) {
                a.add(phase * z);
            }
        }
        for (s, a) in site.iter_mut().zip(&acc) {
            *s = a.value() / nodes as f64;
        }
    }
    Ok(WalkState::from_raw_parts(d, init.time() + t, offset, amps))
}

/// `∫ ||Ψ̂(k)||² dk/2π` on `nodes` trapezoid points.
pub fn fourier_norm_sqr(state: &WalkState, nodes: usize) -> f64 {
    quad::periodic_trapezoid(|k| fourier_transform(state, k).norm_sqr(), nodes)
}

/// Which flat-band integral [`delta_integral`] returns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaForm {
    /// Flat-band projection of the entry: the weight of the point mass at the
    /// origin in the limit law.
    PointMass,
    /// The constant that enters the r = 0 identity relating interference sums to
    /// moments. For the real part of (0,2) this subtracts a quarter of the
    /// flat-band weight, absorbing the identity's `1/4` term; otherwise it
    /// equals [`DeltaForm::PointMass`].
    LemmaOffset,
}

fn require_grover(init: &WalkState) -> Result<()> {
    if init.dim() != 3 {
        return Err(Error::WrongWalk {
            expected: "3-state",
        });
    }
    Ok(())
}

/// Flat-band integral `∫ ½ |<v|Ψ̂0>|² <v|J±|v> dk/2π` for the Grover walk.
pub fn delta_integral(
    init: &WalkState,
    part: Part,
    j1: usize,
    j2: usize,
    form: DeltaForm,
) -> Result<f64> {
    require_grover(init)?;
    let pair = GroverPair::from_indices(j1, j2)?;
    let lemma_shift =
        form == DeltaForm::LemmaOffset && part == Part::Real && pair == GroverPair::P02;
    quad::periodic_mean(
        |k| {
            let v = grover_flat_vector(k);
            let weight = v.inner(&fourier_transform(init, k)).norm_sqr();
            let coherence = v[j1].conj() * v[j2];
            let value = match part {
                // ½ <v|J+|v> = Re(conj(v_j1) v_j2)
                Part::Real => weight * coherence.re,
                // ½ <v|J-|v> / i = -Im(conj(v_j1) v_j2)
                Part::Imag => -weight * coherence.im,
            };
            if lemma_shift {
                value - 0.25 * weight
            } else {
                value
            }
        },
        DEFAULT_K_NODES,
        quad::DEFAULT_TOLERANCE,
    )
}

/// `∫ |<v|Ψ̂0>|² dk/2π`: the total probability that stays localized.
pub fn flat_band_weight(init: &WalkState) -> Result<f64> {
    require_grover(init)?;
    quad::periodic_mean(
        |k| {
            grover_flat_vector(k)
                .inner(&fourier_transform(init, k))
                .norm_sqr()
        },
        DEFAULT_K_NODES,
        quad::DEFAULT_TOLERANCE,
    )
}

/// `lim_t P(X_t = x)` for the Grover walk: the squared norm of the flat-band
/// component `∫ e^{ikx} <v|Ψ̂0> v dk/2π` at `x`.
pub fn localized_probability(init: &WalkState, x: i64) -> Result<f64> {
    require_grover(init)?;
    let component = |j: usize| {
        quad::periodic_mean_complex(
            |k| {
                let v = grover_flat_vector(k);
                cis(k * x as f64) * v.inner(&fourier_transform(init, k)) * v[j]
            },
            DEFAULT_K_NODES,
            1e-12,
        )
    };
    (0..3).map(|j| component(j).map(|z| z.norm_sqr())).sum()
}

/// `lim_t E[(X_t/t)^r] = ∫ Σ_j h_j(k)^r |<v_j|Ψ̂0>|² dk/2π` (with `0^0 = 1`).
pub fn limit_moment(init: &WalkState, symbol: &FourierSymbol, r: u32) -> Result<f64> {
    if init.dim() != symbol.dim() {
        return Err(Error::DimensionMismatch {
            state: init.dim(),
            coin: symbol.dim(),
        });
    }
    let failure = std::cell::Cell::new(None);
    let value = quad::periodic_mean(
        |k| match symbol.eigensystem(k) {
            Ok(pairs) => {
                let psi = fourier_transform(init, k);
                pairs
                    .iter()
                    .map(|p| p.velocity.powi(r as i32) * p.vector.inner(&psi).norm_sqr())
                    .sum()
            }
            Err(Error::EigenResidual { k, residual }) => {
                failure.set(Some((k, residual)));
                0.0
            }
            Err(_) => unreachable!("eigensystem only fails on residuals"),
        },
        DEFAULT_K_NODES,
        quad::DEFAULT_TOLERANCE,
    )?;
    match failure.into_inner() {
        Some((k, residual)) => Err(Error::EigenResidual { k, residual }),
        None => Ok(value),
    }
}

/// Leading-order band decomposition of `Σ_x (x/t)^r <j1|ρ_t(x)|j2>` for a
/// 2-state walk: `(band-diagonal, band-mixing)`. The band-diagonal part does
/// not depend on t. The band-mixing part carries the oscillating factors
/// `(λ_a conj(λ_b))^t` and decays as t grows. At r = 0 their sum is exact.
pub fn band_decomposition(
    init: &WalkState,
    symbol: &FourierSymbol,
    t: u64,
    r: u32,
    j1: usize,
    j2: usize,
) -> Result<(Complex64, Complex64)> {
    if symbol.dim() != 2 || init.dim() != 2 {
        return Err(Error::WrongWalk {
            expected: "2-state",
        });
    }
    if j1 >= 2 || j2 >= 2 {
        return Err(Error::InvalidIndex { j1, j2, dim: 2 });
    }
    let start = DEFAULT_K_NODES.max(8 * (t as usize + init.len()));
    let integrand = |k: f64, mixing: bool| -> Complex64 {
        let psi = fourier_transform(init, k);
        let mut total = Complex64::new(0.0, 0.0);
        for a in 0..2 {
            for b in 0..2 {
                if (a != b) != mixing {
                    continue;
                }
                let (va, vb) = (symbol.two_state_vector(a, k), symbol.two_state_vector(b, k));
                let (la, lb) = (symbol.eigenvalue(a, k), symbol.eigenvalue(b, k));
                let oscillation = cis(t as f64 * (la * lb.conj()).arg());
                let ha = symbol.velocity(a, k).powi(r as i32);
                total += oscillation
                    * ha
                    * va.inner(&psi)
                    * vb.inner(&psi).conj()
                    * va[j1]
                    * vb[j2].conj();
            }
        }
        total
    };
    let diagonal = quad::periodic_mean_complex(|k| integrand(k, false), start, 1e-12)?;
    let mixing = quad::periodic_mean_complex(|k| integrand(k, true), start, 1e-12)?;
    Ok((diagonal, mixing))
}

/// Magnitude of the band-mixing part of [`band_decomposition`].
pub fn cross_term_magnitude(
    init: &WalkState,
    symbol: &FourierSymbol,
    t: u64,
    r: u32,
    j1: usize,
    j2: usize,
) -> Result<f64> {
    band_decomposition(init, symbol, t, r, j1, j2).map(|(_, mixing)| mixing.norm())
}

/// Band table: `k,re_lambda_j,im_lambda_j,h_j` for every band on `nodes` uniform
/// points of `[-π, π)`.
pub fn write_band_csv<W: Write>(symbol: &FourierSymbol, nodes: usize, mut out: W) -> Result<()> {
    let mut header = String::from("k");
    for j in 1..=symbol.bands() {
        header.push_str(&format!(",re_lambda_{j},im_lambda_{j},h_{j}"));
    }
    writeln!(out, "{header}")?;
    let h = 2.0 * PI / nodes.max(1) as f64;
    for n in 0..nodes {
        let k = -PI + h * n as f64;
        write!(out, "{k}")?;
        for band in 0..symbol.bands() {
            let lambda = symbol.eigenvalue(band, k);
            write!(
                out,
                ",{},{},{}",
                lambda.re,
                lambda.im,
                symbol.velocity(band, k)
            )?;
        }
        writeln!(out)?;
    }
    Ok(())
}
