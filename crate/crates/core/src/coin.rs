//! Coin operators: the two real 2-state families and the 3-state Grover coin.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;
use crate::{Error, Result};

/// Coins with `|cos θ|` or `|sin θ|` below this are rejected.
const DEGENERATE_ANGLE_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoinKind {
    /// `u00 = -u11 = cos θ`, `u01 = u10 = sin θ`; determinant -1.
    FamilyA,
    /// `u00 = u11 = cos θ`, `-u01 = u10 = sin θ`; determinant +1.
    FamilyB,
    /// `G = (2/3) J - I` on three internal states.
    Grover,
}

impl CoinKind {
    pub fn dim(self) -> usize {
        match self {
            CoinKind::FamilyA | CoinKind::FamilyB => 2,
            CoinKind::Grover => 3,
        }
    }
}

impl fmt::Display for CoinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoinKind::FamilyA => "A",
            CoinKind::FamilyB => "B",
            CoinKind::Grover => "grover",
        })
    }
}

/// A validated coin together with its realized matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coin {
    kind: CoinKind,
    theta: Option<f64>,
    matrix: Matrix,
    det: f64,
}

impl Coin {
    /// 2-state coin of the given family. `theta` must lie in `(0, 2π)` away from
    /// the multiples of `π/2`.
    pub fn two_state(kind: CoinKind, theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < 2.0 * PI) {
            return Err(Error::InvalidAngle { theta });
        }
        let (s, c) = theta.sin_cos();
        if c.abs() < DEGENERATE_ANGLE_EPS || s.abs() < DEGENERATE_ANGLE_EPS {
            return Err(Error::InvalidAngle { theta });
        }
        let re = |x: f64| Complex64::new(x, 0.0);
        let matrix = match kind {
            CoinKind::FamilyA => Matrix::from_rows([[re(c), re(s)], [re(s), re(-c)]]),
            CoinKind::FamilyB => Matrix::from_rows([[re(c), re(-s)], [re(s), re(c)]]),
            CoinKind::Grover => return Err(Error::UnsupportedDimension(3)),
        };
        // The sign is read off the realized matrix, not assumed from the family.
        let det = matrix.determinant().re.signum();
        Ok(Self {
            kind,
            theta: Some(theta),
            matrix,
            det,
        })
    }

    pub fn family_a(theta: f64) -> Result<Self> {
        Self::two_state(CoinKind::FamilyA, theta)
    }

    pub fn family_b(theta: f64) -> Result<Self> {
        Self::two_state(CoinKind::FamilyB, theta)
    }

    /// The `θ = π/4` member of family A, i.e. the Hadamard coin.
    pub fn hadamard() -> Self {
        Self::family_a(PI / 4.0).expect("π/4 is an admissible angle")
    }

    pub fn grover() -> Self {
        let mut matrix = Matrix::zeros(3);
        for i in 0..3 {
            for j in 0..3 {
                let delta = if i == j { 1.0 } else { 0.0 };
                matrix.set(i, j, Complex64::new(2.0 / 3.0 - delta, 0.0));
            }
        }
        Self {
            kind: CoinKind::Grover,
            theta: None,
            matrix,
            det: 1.0,
        }
    }

    pub fn kind(&self) -> CoinKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    pub fn theta(&self) -> Option<f64> {
        self.theta
    }

    /// `cos θ`; 2-state coins only.
    pub fn c(&self) -> f64 {
        self.matrix.get(0, 0).re
    }

    /// `sin θ`; 2-state coins only.
    pub fn s(&self) -> f64 {
        self.matrix.get(1, 0).re
    }

    /// `det U`, exactly ±1.
    pub fn det(&self) -> f64 {
        self.det
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_two_state(&self) -> bool {
        self.dim() == 2
    }
}
