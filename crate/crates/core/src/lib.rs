//! Discrete-time quantum walks on the integer line.
//!
//! The crate evolves 2-state coined walks and the 3-state Grover walk exactly in
//! position space, extracts local density matrices and their off-diagonal
//! (interference) entries, and compares rescaled sums of those entries against
//! their closed-form weak limits. An independent momentum-space propagator and
//! spectral quadratures serve as oracles for the position-space results.
//!
//! Module map:
//!
//! * [`coin`] and [`walk`]: coin operators, walk states and exact evolution.
//! * [`density`]: local density matrices, probability distributions, rescaled sums.
//! * [`laws`]: limit densities, point masses and their moments.
//! * [`spectral`]: Fourier symbols, eigensystems, velocity functions and k-space oracles.
//! * [`verify`]: finite-time versus limit comparison reports.
//! * [`cli`]: the `qwalk` command-line front end.

pub mod cli;
pub mod coin;
pub mod decimal;
pub mod density;
mod error;
pub mod laws;
pub mod linalg;
pub mod quad;
pub mod spectral;
pub mod sum;
pub mod verify;
pub mod walk;

pub use coin::{Coin, CoinKind};
pub use density::{LocalDensity, MomentSeries};
pub use error::{Error, Result};
pub use laws::{GroverCoefficients, GroverPair, LimitLaw, Part};
pub use num_complex::Complex64;
pub use spectral::{DeltaForm, FourierSymbol};
pub use verify::{ComparisonReport, Quantity, Scenario};
pub use walk::WalkState;
