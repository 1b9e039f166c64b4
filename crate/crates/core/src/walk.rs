//! Walk states and their exact evolution in position space.
//!
//! Amplitudes are stored densely over the occupied window `offset..offset + len`.
//! Each step applies the coin at every site and then shifts internal state 0 one
//! site to the left and the last internal state one site to the right. The middle
//! state of the Grover walk stays put. The window grows by one site on each side
//! per step. Sites that parity forces to zero are kept as exact zeros.

use std::io::Write;

use num_complex::Complex64;

use crate::coin::Coin;
use crate::linalg::{Matrix, Spinor};
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// Tolerance on `| ||spinor|| - 1 |` accepted for initial states.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Looser tolerance for spinors typed by hand or read from files.
pub const INPUT_NORM_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct WalkState {
    dim: usize,
    t: u64,
    offset: i64,
    amps: Vec<Complex64>,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(dim))
    }
}

fn check_norm(norm_sqr: f64, tolerance: f64) -> Result<()> {
    if (norm_sqr.sqrt() - 1.0).abs() <= tolerance {
        Ok(())
    } else {
        Err(Error::NotNormalized { norm_sqr })
    }
}

impl WalkState {
    /// A walker at a single `position` with internal state `spinor`, at t = 0.
    pub fn single_site(dim: usize, position: i64, spinor: &[Complex64]) -> Result<Self> {
        Self::single_site_within(dim, position, spinor, NORM_TOLERANCE)
    }

    /// [`WalkState::single_site`] with an explicit norm tolerance. The spinor is
    /// stored as given, never renormalized.
    pub fn single_site_within(
        dim: usize,
        position: i64,
        spinor: &[Complex64],
        tolerance: f64,
    ) -> Result<Self> {
        check_dim(dim)?;
        if spinor.len() != dim {
            return Err(Error::DimensionMismatch {
                state: spinor.len(),
                coin: dim,
            });
        }
        let norm_sqr: f64 = spinor.iter().map(|z| z.norm_sqr()).sum();
        check_norm(norm_sqr, tolerance)?;
        Ok(Self {
            dim,
            t: 0,
            offset: position,
            amps: spinor.to_vec(),
        })
    }

    /// A normalized finite-support state at t = 0 whose first site is `offset`.
    pub fn from_sites(dim: usize, offset: i64, sites: &[Spinor]) -> Result<Self> {
        let state = Self::from_sites_unnormalized(dim, offset, sites)?;
        check_norm(state.norm_sqr(), NORM_TOLERANCE)?;
        Ok(state)
    }

    /// Like [`WalkState::from_sites`] without the normalization check. Evolution is
    /// linear, so unnormalized states are meaningful for superposition tests.
    pub fn from_sites_unnormalized(dim: usize, offset: i64, sites: &[Spinor]) -> Result<Self> {
        check_dim(dim)?;
        let mut amps = Vec::with_capacity(dim * sites.len());
        for site in sites {
            if site.dim() != dim {
                return Err(Error::DimensionMismatch {
                    state: site.dim(),
                    coin: dim,
                });
            }
            amps.extend_from_slice(site.as_slice());
        }
        Ok(Self {
            dim,
            t: 0,
            offset,
            amps,
        })
    }

    pub(crate) fn from_raw_parts(dim: usize, t: u64, offset: i64, amps: Vec<Complex64>) -> Self {
        debug_assert_eq!(amps.len() % dim, 0);
        Self {
            dim,
            t,
            offset,
            amps,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn time(&self) -> u64 {
        self.t
    }

    /// Leftmost stored position.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Number of stored sites.
    pub fn len(&self) -> usize {
        self.amps.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.len() as i64).map(move |i| self.offset + i)
    }

    /// `(x, ψ(x))` for every stored site, positions ascending.
    pub fn sites(&self) -> impl Iterator<Item = (i64, &[Complex64])> + '_ {
        self.amps
            .chunks_exact(self.dim)
            .enumerate()
            .map(move |(i, a)| (self.offset + i as i64, a))
    }

    /// `ψ(x)`, or `None` outside the stored window.
    pub fn amplitude(&self, x: i64) -> Option<&[Complex64]> {
        let i = x.checked_sub(self.offset)?;
        if i < 0 || i as usize >= self.len() {
            return None;
        }
        let i = i as usize * self.dim;
        Some(&self.amps[i..i + self.dim])
    }

    /// `ψ(x)` as a spinor, zero outside the stored window.
    pub fn spinor(&self, x: i64) -> Spinor {
        self.amplitude(x)
            .map(Spinor::from_slice)
            .unwrap_or_else(|| Spinor::zeros(self.dim))
    }

    pub fn raw_amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps
            .iter()
            .map(|z| z.norm_sqr())
            .collect::<CompensatedSum>()
            .value()
    }

    /// Smallest and largest positions carrying nonzero amplitude.
    pub fn support(&self) -> Option<(i64, i64)> {
        let mut nonzero = self
            .sites()
            .filter(|(_, a)| a.iter().any(|z| *z != Complex64::new(0.0, 0.0)))
            .map(|(x, _)| x);
        let first = nonzero.next()?;
        let last = nonzero.last().unwrap_or(first);
        Some((first, last))
    }

    fn check_coin(&self, coin: &Coin) -> Result<()> {
        if coin.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                state: self.dim,
                coin: coin.dim(),
            });
        }
        Ok(())
    }

    /// One time step: coin at every site, then the conditional shift.
    pub fn step(&self, coin: &Coin) -> Result<Self> {
        self.check_coin(coin)?;
        let d = self.dim;
        let u = coin.matrix();
        let mut next = vec![Complex64::new(0.0, 0.0); self.amps.len() + 2 * d];
        let mut coined = [Complex64::new(0.0, 0.0); 3];
        for (i, site) in self.amps.chunks_exact(d).enumerate() {
            u.apply_slice(site, &mut coined[..d]);
            // New window starts one site further left, so position p maps to index p - offset + 1.
            next[i * d] += coined[0];
            if d == 3 {
                next[(i + 1) * d + 1] += coined[1];
            }
            next[(i + 2) * d + d - 1] += coined[d - 1];
        }
        Ok(Self {
            dim: d,
            t: self.t + 1,
            offset: self.offset - 1,
            amps: next,
        })
    }

    /// Undoes one [`WalkState::step`]: reverse shift, then the adjoint coin.
    pub fn step_back(&self, coin: &Coin) -> Result<Self> {
        self.check_coin(coin)?;
        let t = self.t.checked_sub(1).ok_or(Error::NegativeTime)?;
        let d = self.dim;
        let mut shifted = vec![Complex64::new(0.0, 0.0); self.amps.len() + 2 * d];
        for (i, site) in self.amps.chunks_exact(d).enumerate() {
            shifted[(i + 2) * d] += site[0];
            if d == 3 {
                shifted[(i + 1) * d + 1] += site[1];
            }
            shifted[i * d + d - 1] += site[d - 1];
        }
        let adj: Matrix = coin.matrix().adjoint();
        let mut out = vec![Complex64::new(0.0, 0.0); shifted.len()];
        for (src, dst) in shifted.chunks_exact(d).zip(out.chunks_exact_mut(d)) {
            adj.apply_slice(src, dst);
        }
        Ok(Self {
            dim: d,
            t,
            offset: self.offset - 1,
            amps: out,
        })
    }

    /// Applies [`WalkState::step`] `steps` times.
    pub fn evolve(&self, coin: &Coin, steps: u64) -> Result<Self> {
        self.check_coin(coin)?;
        let mut state = self.clone();
        for _ in 0..steps {
            state = state.step(coin)?;
        }
        Ok(state)
    }

    /// Writes the amplitude table `x,re_0,im_0,re_1,im_1[,re_2,im_2]`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        let mut header = String::from("x");
        for j in 0..self.dim {
            header.push_str(&format!(",re_{j},im_{j}"));
        }
        writeln!(out, "{header}")?;
        for (x, amp) in self.sites() {
            write!(out, "{x}")?;
            for z in amp {
                write!(out, ",{},{}", z.re, z.im)?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}
