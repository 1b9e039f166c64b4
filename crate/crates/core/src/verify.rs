//! Finite-time simulations paired with their limit predictions.
//!
//! A [`ComparisonReport`] holds one [`Row`] per compared quantity. Reports are
//! serialized as JSON with every number written as a 17-significant-digit
//! decimal string, and `abs_error` is recomputed and checked on load.

use std::fmt;
use std::fs::OpenOptions;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coin::{Coin, CoinKind};
use crate::decimal;
use crate::density::{empirical_moment, probability_distribution, rescaled_sum};
use crate::laws::{self, GroverCoefficients, GroverPair, LimitLaw, Part};
use crate::spectral::{self, DeltaForm};
use crate::walk::WalkState;
use crate::{Error, Result};

/// Finite-t against limit, 2-state walks at t = 1000.
pub const TWO_STATE_TOLERANCE: f64 = 1e-2;
/// Finite-t against limit for the Grover walk and for the moment identities.
pub const IDENTITY_TOLERANCE: f64 = 2e-2;
/// Flat-band quadrature against the closed-form point masses.
pub const POINT_MASS_TOLERANCE: f64 = 1e-8;
/// Times scanned for the localization floor.
pub const LOCALIZATION_WINDOW: RangeInclusive<u64> = 100..=150;

/// Which limit statement a row checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quantity {
    /// `E[(X_t/t)^r]` against the moments of the position limit law.
    #[serde(rename = "g-moment")]
    GMoment,
    /// Real part of the 2-state rescaled interference sum against its law.
    #[serde(rename = "Thm2-R")]
    Thm2Real,
    /// Imaginary part of the 2-state rescaled interference sum against its law.
    #[serde(rename = "Thm2-I")]
    Thm2Imag,
    /// Real 2-state interference sum against `detU·s/(2c)·E[(X_t/t)^(r+1)]`.
    #[serde(rename = "Lemma1")]
    Lemma1,
    /// Grover r = 0 identity: flat-band constant plus low moments.
    #[serde(rename = "LemA1-r0")]
    LemmaA1Zero,
    /// Grover r ≥ 1 identities, linear in the moments.
    #[serde(rename = "LemA1-r")]
    LemmaA1,
    /// Real part of a Grover interference sum against point mass plus density.
    #[serde(rename = "ThmA2-R")]
    ThmA2Real,
    /// Imaginary part of a Grover interference sum against point mass plus density.
    #[serde(rename = "ThmA2-I")]
    ThmA2Imag,
}

impl Quantity {
    pub const ALL: [Quantity; 8] = [
        Quantity::GMoment,
        Quantity::Thm2Real,
        Quantity::Thm2Imag,
        Quantity::Lemma1,
        Quantity::LemmaA1Zero,
        Quantity::LemmaA1,
        Quantity::ThmA2Real,
        Quantity::ThmA2Imag,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Quantity::GMoment => "g-moment",
            Quantity::Thm2Real => "Thm2-R",
            Quantity::Thm2Imag => "Thm2-I",
            Quantity::Lemma1 => "Lemma1",
            Quantity::LemmaA1Zero => "LemA1-r0",
            Quantity::LemmaA1 => "LemA1-r",
            Quantity::ThmA2Real => "ThmA2-R",
            Quantity::ThmA2Imag => "ThmA2-I",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown quantity id {s:?}")))
    }
}

/// Walk and initial spinor of a scenario. The walker starts at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "walk", rename_all = "kebab-case")]
pub enum WalkSpec {
    TwoState {
        family: CoinKind,
        #[serde(with = "decimal")]
        theta: f64,
        #[serde(with = "decimal::complex")]
        alpha: Complex64,
        #[serde(with = "decimal::complex")]
        beta: Complex64,
    },
    Grover {
        #[serde(with = "decimal::complex")]
        alpha: Complex64,
        #[serde(with = "decimal::complex")]
        beta: Complex64,
        #[serde(with = "decimal::complex")]
        gamma: Complex64,
    },
}

impl WalkSpec {
    pub fn coin(&self) -> Result<Coin> {
        match *self {
            WalkSpec::TwoState { family, theta, .. } => Coin::two_state(family, theta),
            WalkSpec::Grover { .. } => Ok(Coin::grover()),
        }
    }

    pub fn spinor(&self) -> Vec<Complex64> {
        match *self {
            WalkSpec::TwoState { alpha, beta, .. } => vec![alpha, beta],
            WalkSpec::Grover { alpha, beta, gamma } => vec![alpha, beta, gamma],
        }
    }

    pub fn initial_state(&self) -> Result<WalkState> {
        let spinor = self.spinor();
        WalkState::single_site_within(spinor.len(), 0, &spinor, crate::walk::INPUT_NORM_TOLERANCE)
    }
}

/// A named configuration: walk, initial spinor and evaluation time.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub name: String,
    #[serde(flatten)]
    pub walk: WalkSpec,
    pub t: u64,
}

impl Scenario {
    /// Hadamard-like walk from `(|0> + i|1>)/√2`.
    pub fn hadamard_symmetric(t: u64) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Scenario {
            name: "thm2-fig2".into(),
            walk: WalkSpec::TwoState {
                family: CoinKind::FamilyA,
                theta: std::f64::consts::FRAC_PI_4,
                alpha: Complex64::new(h, 0.0),
                beta: Complex64::new(0.0, h),
            },
            t,
        }
    }

    /// Grover walk from `(|0> + i|1> + i|2>)/√3`.
    pub fn grover_localized(t: u64) -> Self {
        let a = 1.0 / 3f64.sqrt();
        Scenario {
            name: "thmA2-fig45".into(),
            walk: WalkSpec::Grover {
                alpha: Complex64::new(a, 0.0),
                beta: Complex64::new(0.0, a),
                gamma: Complex64::new(0.0, a),
            },
            t,
        }
    }

    pub fn custom(coin: &Coin, spinor: &[Complex64], t: u64) -> Result<Self> {
        if spinor.len() != coin.dim() {
            return Err(Error::DimensionMismatch {
                state: spinor.len(),
                coin: coin.dim(),
            });
        }
        let walk = match coin.theta() {
            Some(theta) => WalkSpec::TwoState {
                family: coin.kind(),
                theta,
                alpha: spinor[0],
                beta: spinor[1],
            },
            None => WalkSpec::Grover {
                alpha: spinor[0],
                beta: spinor[1],
                gamma: spinor[2],
            },
        };
        Ok(Scenario {
            name: "custom".into(),
            walk,
            t,
        })
    }

    /// The full set of rows for this scenario's walk type, `r = 0..=r_max`.
    pub fn check(&self, r_max: u32, quad_tol: f64) -> Result<ComparisonReport> {
        let model = Model::new(&self.walk, quad_tol)?;
        let state = self.walk.initial_state()?.evolve(&model.coin(), self.t)?;
        let mut rows = Vec::new();
        let mut localization = None;
        match &model {
            Model::TwoState { .. } => {
                for r in 0..=r_max {
                    rows.push(model.row(&state, Quantity::GMoment, Some(r), None)?);
                }
                for q in [Quantity::Thm2Real, Quantity::Thm2Imag, Quantity::Lemma1] {
                    for r in 0..=r_max {
                        rows.push(model.row(&state, q, Some(r), Some([0, 1]))?);
                    }
                }
            }
            Model::Grover { init, .. } => {
                for r in 0..=r_max {
                    rows.push(model.row(&state, Quantity::GMoment, Some(r), None)?);
                }
                for q in [Quantity::ThmA2Real, Quantity::ThmA2Imag] {
                    for pair in GroverPair::ALL {
                        let (j1, j2) = pair.indices();
                        rows.push(model.row(&state, q, None, Some([j1, j2]))?);
                        for r in 0..=r_max {
                            rows.push(model.row(&state, q, Some(r), Some([j1, j2]))?);
                        }
                    }
                }
                for pair in GroverPair::ALL {
                    let (j1, j2) = pair.indices();
                    rows.push(model.row(&state, Quantity::LemmaA1Zero, Some(0), Some([j1, j2]))?);
                    for r in 1..=r_max {
                        rows.push(model.row(&state, Quantity::LemmaA1, Some(r), Some([j1, j2]))?);
                    }
                }
                localization = Some(Localization::measure(init, LOCALIZATION_WINDOW)?);
            }
        }
        Ok(ComparisonReport {
            scenario: self.clone(),
            rows,
            convergence: Vec::new(),
            final_not_worse: None,
            localization,
        })
    }
}

/// One quantity at one order `r` and matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub quantity: Quantity,
    /// Moment order; absent for the point-mass rows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    /// Density-matrix entry; absent for position moments.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entry: Option<[usize; 2]>,
    /// Finite-t value. For point-mass rows, the flat-band quadrature.
    #[serde(rename = "finite_t_value", with = "decimal::complex")]
    pub finite: Complex64,
    #[serde(rename = "limit_value", with = "decimal::complex")]
    pub limit: Complex64,
    #[serde(with = "decimal")]
    pub abs_error: f64,
    #[serde(default, with = "decimal::option")]
    pub tolerance: Option<f64>,
}

impl Row {
    fn new(
        quantity: Quantity,
        r: Option<u32>,
        entry: Option<[usize; 2]>,
        finite: Complex64,
        limit: Complex64,
    ) -> Self {
        Row {
            quantity,
            r,
            entry,
            finite,
            limit,
            abs_error: (finite - limit).norm(),
            tolerance: None,
        }
    }

    fn within(mut self, tolerance: f64) -> Self {
        self.tolerance = Some(tolerance);
        self
    }

    pub fn passes(&self) -> bool {
        self.tolerance.is_none_or(|tol| self.abs_error <= tol)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergencePoint {
    pub t: u64,
    #[serde(with = "decimal")]
    pub abs_error: f64,
}

/// Return probability at the origin over a window of times, against a floor
/// of half its limit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Localization {
    pub t_first: u64,
    pub t_last: u64,
    pub t_at_min: u64,
    #[serde(with = "decimal")]
    pub min_probability: f64,
    #[serde(with = "decimal")]
    pub limit_probability: f64,
    #[serde(with = "decimal")]
    pub floor: f64,
}

impl Localization {
    pub fn measure(init: &WalkState, window: RangeInclusive<u64>) -> Result<Self> {
        let coin = Coin::grover();
        let limit_probability = spectral::localized_probability(init, 0)?;
        let (first, last) = (*window.start(), *window.end());
        let mut state = init.evolve(&coin, first)?;
        let mut min = (first, f64::INFINITY);
        loop {
            let p = probability_distribution(&state)
                .get(&0)
                .copied()
                .unwrap_or(0.0);
            if p < min.1 {
                min = (state.time(), p);
            }
            if state.time() >= last {
                break;
            }
            state = state.step(&coin)?;
        }
        Ok(Localization {
            t_first: first,
            t_last: last,
            t_at_min: min.0,
            min_probability: min.1,
            limit_probability,
            floor: 0.5 * limit_probability,
        })
    }

    pub fn passes(&self) -> bool {
        self.min_probability > self.floor
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub scenario: Scenario,
    pub rows: Vec<Row>,
    #[serde(default)]
    pub convergence: Vec<ConvergencePoint>,
    /// Set by sweeps: error at the largest t is no worse than at the smallest.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub final_not_worse: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub localization: Option<Localization>,
}

impl ComparisonReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(Row::passes) && self.localization.is_none_or(|l| l.passes())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|row| !row.passes())
    }

    pub fn find(
        &self,
        quantity: Quantity,
        r: Option<u32>,
        entry: Option<[usize; 2]>,
    ) -> Option<&Row> {
        self.rows
            .iter()
            .find(|row| row.quantity == quantity && row.r == r && row.entry == entry)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(text)
    }

    /// Parses a report and checks every stored `abs_error` against
    /// `|finite − limit|`.
    pub fn from_json(text: &str) -> Result<Self> {
        let report: ComparisonReport = serde_json::from_str(text)?;
        for row in &report.rows {
            let recomputed = (row.finite - row.limit).norm();
            if recomputed.to_bits() != row.abs_error.to_bits() {
                return Err(Error::Report(format!(
                    "{} r={:?} entry={:?}: stored abs_error {} but |finite - limit| = {}",
                    row.quantity,
                    row.r,
                    row.entry,
                    decimal::format(row.abs_error),
                    decimal::format(recomputed),
                )));
            }
        }
        Ok(report)
    }

    /// Writes the report to a new file. Existing files are never replaced.
    pub fn write_new(&self, path: &Path) -> Result<()> {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(self.to_json()?.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist_noclobber(path)
            .map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    /// Appends the report as one JSON line to a log file.
    pub fn append_to(&self, path: &Path) -> Result<()> {
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        let mut line = serde_json::to_string(self)?;
        line.push('\n');
        file.write_all(line.as_bytes())?;
        Ok(())
    }
}

/// Limit predictions prepared once per walk.
enum Model {
    TwoState {
        coin: Coin,
        position: LimitLaw,
        real: LimitLaw,
        imag: LimitLaw,
        quad_tol: f64,
    },
    Grover {
        init: WalkState,
        coeffs: GroverCoefficients,
        laws: [(LimitLaw, LimitLaw); 3],
        quad_tol: f64,
    },
}

impl Model {
    fn new(walk: &WalkSpec, quad_tol: f64) -> Result<Self> {
        match *walk {
            WalkSpec::TwoState { alpha, beta, .. } => {
                let coin = walk.coin()?;
                let (real, imag) = laws::two_state_interference_laws(&coin, alpha, beta)?;
                Ok(Model::TwoState {
                    coin,
                    position: laws::konno_density(&coin, alpha, beta)?,
                    real,
                    imag,
                    quad_tol,
                })
            }
            WalkSpec::Grover { alpha, beta, gamma } => {
                let coeffs = laws::grover_coefficients(alpha, beta, gamma)?;
                let law = |pair: GroverPair| {
                    let (j1, j2) = pair.indices();
                    laws::grover_interference_laws(&coeffs, j1, j2)
                };
                Ok(Model::Grover {
                    init: walk.initial_state()?,
                    coeffs,
                    laws: [
                        law(GroverPair::P01)?,
                        law(GroverPair::P02)?,
                        law(GroverPair::P12)?,
                    ],
                    quad_tol,
                })
            }
        }
    }

    fn coin(&self) -> Coin {
        match self {
            Model::TwoState { coin, .. } => *coin,
            Model::Grover { .. } => Coin::grover(),
        }
    }

    fn row(
        &self,
        state: &WalkState,
        quantity: Quantity,
        r: Option<u32>,
        entry: Option<[usize; 2]>,
    ) -> Result<Row> {
        let need_r = || r.ok_or_else(|| Error::Report(format!("{quantity} needs a moment order")));
        let moment = |order: u32| empirical_moment(state, order);
        let real = |x: f64| Complex64::new(x, 0.0);

        if quantity == Quantity::GMoment {
            let r = need_r()?;
            let limit = match self {
                Model::TwoState {
                    position, quad_tol, ..
                } => position.moment_with_tolerance(r, *quad_tol)?,
                Model::Grover { init, .. } => {
                    spectral::limit_moment(init, &spectral::FourierSymbol::new(Coin::grover()), r)?
                }
            };
            let tol = match self {
                Model::TwoState { .. } => TWO_STATE_TOLERANCE,
                Model::Grover { .. } => IDENTITY_TOLERANCE,
            };
            return Ok(
                Row::new(quantity, Some(r), None, real(moment(r)?), real(limit)).within(tol),
            );
        }

        match self {
            Model::TwoState {
                coin,
                real: re_law,
                imag: im_law,
                quad_tol,
                ..
            } => {
                if entry != Some([0, 1]) {
                    let [j1, j2] = entry.unwrap_or([0, 0]);
                    return Err(Error::InvalidIndex { j1, j2, dim: 2 });
                }
                let r = need_r()?;
                let sum = rescaled_sum(state, r, 0, 1)?;
                let row = match quantity {
                    Quantity::Thm2Real => Row::new(
                        quantity,
                        Some(r),
                        entry,
                        real(sum.re),
                        real(re_law.moment_with_tolerance(r, *quad_tol)?),
                    ),
                    Quantity::Thm2Imag => Row::new(
                        quantity,
                        Some(r),
                        entry,
                        real(sum.im),
                        real(im_law.moment_with_tolerance(r, *quad_tol)?),
                    ),
                    Quantity::Lemma1 => {
                        let scale = coin.det() * coin.s() / (2.0 * coin.c());
                        return Ok(Row::new(
                            quantity,
                            Some(r),
                            entry,
                            real(sum.re),
                            real(scale * moment(r + 1)?),
                        )
                        .within(IDENTITY_TOLERANCE));
                    }
                    _ => {
                        return Err(Error::WrongWalk {
                            expected: "3-state",
                        })
                    }
                };
                Ok(row.within(TWO_STATE_TOLERANCE))
            }
            Model::Grover {
                init,
                coeffs,
                laws,
                quad_tol,
            } => {
                let [j1, j2] = entry.ok_or(Error::InvalidIndex {
                    j1: 0,
                    j2: 0,
                    dim: 3,
                })?;
                let pair = GroverPair::from_indices(j1, j2)?;
                let (re_law, im_law) =
                    &laws[GroverPair::ALL.iter().position(|p| *p == pair).unwrap_or(0)];
                let part = match quantity {
                    Quantity::ThmA2Imag => Part::Imag,
                    _ => Part::Real,
                };
                match (quantity, r) {
                    (Quantity::ThmA2Real | Quantity::ThmA2Imag, None) => {
                        let quadrature =
                            spectral::delta_integral(init, part, j1, j2, DeltaForm::PointMass)?;
                        Ok(Row::new(
                            quantity,
                            None,
                            entry,
                            real(quadrature),
                            real(coeffs.delta(part, pair)),
                        )
                        .within(POINT_MASS_TOLERANCE))
                    }
                    (Quantity::ThmA2Real | Quantity::ThmA2Imag, Some(r)) => {
                        let sum = rescaled_sum(state, r, j1, j2)?;
                        let (finite, law) = match part {
                            Part::Real => (sum.re, re_law),
                            Part::Imag => (sum.im, im_law),
                        };
                        let limit = law.moment_with_tolerance(r, *quad_tol)?;
                        Ok(
                            Row::new(quantity, Some(r), entry, real(finite), real(limit))
                                .within(IDENTITY_TOLERANCE),
                        )
                    }
                    (Quantity::LemmaA1Zero, _) => {
                        let offset = spectral::delta_integral(
                            init,
                            Part::Real,
                            j1,
                            j2,
                            DeltaForm::LemmaOffset,
                        )?;
                        let (m1, m2) = (moment(1)?, moment(2)?);
                        let limit = offset
                            + match pair {
                                GroverPair::P01 => 0.5 * m1 - 0.5 * m2,
                                GroverPair::P02 => 0.25 - 1.25 * m2,
                                GroverPair::P12 => -0.5 * m1 - 0.5 * m2,
                            };
                        let finite = rescaled_sum(state, 0, j1, j2)?.re;
                        Ok(
                            Row::new(quantity, Some(0), entry, real(finite), real(limit))
                                .within(IDENTITY_TOLERANCE),
                        )
                    }
                    (Quantity::LemmaA1, Some(r)) if r >= 1 => {
                        let limit = match pair {
                            GroverPair::P01 => 0.5 * moment(r + 1)? - 0.5 * moment(r + 2)?,
                            GroverPair::P02 => 0.25 * moment(r)? - 1.25 * moment(r + 2)?,
                            GroverPair::P12 => -0.5 * moment(r + 1)? - 0.5 * moment(r + 2)?,
                        };
                        let finite = rescaled_sum(state, r, j1, j2)?.re;
                        Ok(
                            Row::new(quantity, Some(r), entry, real(finite), real(limit))
                                .within(IDENTITY_TOLERANCE),
                        )
                    }
                    (Quantity::LemmaA1, _) => Err(Error::Report("LemA1-r rows need r >= 1".into())),
                    _ => Err(Error::WrongWalk {
                        expected: "2-state",
                    }),
                }
            }
        }
    }
}

/// Theorem-level comparison for a 2-state walk started at the origin in
/// `α|0> + β|1>`.
pub fn check_theorem2(
    coin: &Coin,
    alpha: Complex64,
    beta: Complex64,
    t: u64,
    r_max: u32,
) -> Result<ComparisonReport> {
    if !coin.is_two_state() {
        return Err(Error::WrongWalk {
            expected: "2-state",
        });
    }
    let mut scenario = Scenario::custom(coin, &[alpha, beta], t)?;
    scenario.name = "thm2".into();
    scenario.check(r_max, crate::quad::DEFAULT_TOLERANCE)
}

/// Comparison for the Grover walk started at the origin in
/// `α|0> + β|1> + γ|2>`, including the moment identities and the flat-band
/// point masses.
pub fn check_theorem_a2(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    t: u64,
    r_max: u32,
) -> Result<ComparisonReport> {
    let mut scenario = Scenario::custom(&Coin::grover(), &[alpha, beta, gamma], t)?;
    scenario.name = "thmA2".into();
    scenario.check(r_max, crate::quad::DEFAULT_TOLERANCE)
}

/// Error of one quantity at each time of an ascending list. The walk is
/// evolved incrementally. The report carries the row at the largest time.
pub fn convergence_sweep(
    scenario: &Scenario,
    t_list: &[u64],
    quantity: Quantity,
    r: Option<u32>,
    entry: Option<[usize; 2]>,
) -> Result<ComparisonReport> {
    if t_list.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Report("sweep times must be ascending".into()));
    }
    let mut report = ComparisonReport {
        scenario: Scenario {
            t: t_list.last().copied().unwrap_or(scenario.t),
            ..scenario.clone()
        },
        rows: Vec::new(),
        convergence: Vec::new(),
        final_not_worse: None,
        localization: None,
    };
    if t_list.is_empty() {
        return Ok(report);
    }
    let model = Model::new(&scenario.walk, crate::quad::DEFAULT_TOLERANCE)?;
    let coin = model.coin();
    let mut state = scenario.walk.initial_state()?;
    let mut last = None;
    for &t in t_list {
        state = state.evolve(&coin, t - state.time())?;
        let row = model.row(&state, quantity, r, entry)?;
        report.convergence.push(ConvergencePoint {
            t,
            abs_error: row.abs_error,
        });
        last = Some(row);
    }
    let (first, final_) = (
        report.convergence[0],
        report.convergence[report.convergence.len() - 1],
    );
    report.final_not_worse = Some(final_.abs_error <= first.abs_error);
    report.rows.extend(last);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantity_ids_round_trip() {
        for q in Quantity::ALL {
            assert_eq!(q.id().parse::<Quantity>().unwrap(), q);
            assert_eq!(
                serde_json::to_string(&q).unwrap(),
                format!("\"{}\"", q.id())
            );
        }
        assert!("Thm3".parse::<Quantity>().is_err());
    }

    #[test]
    fn theorem2_symmetric_scenario() {
        let report = Scenario::hadamard_symmetric(1000).check(2, 1e-10).unwrap();
        assert!(
            report.passes(),
            "{:#?}",
            report.failures().collect::<Vec<_>>()
        );
        let imag = report
            .find(Quantity::Thm2Imag, Some(0), Some([0, 1]))
            .unwrap();
        assert!((imag.limit.re + 0.2071067811865).abs() < 1e-9);
        let re = report
            .find(Quantity::Thm2Real, Some(0), Some([0, 1]))
            .unwrap();
        assert!(re.limit.re.abs() < 1e-12);
        let g2 = report.find(Quantity::GMoment, Some(2), None).unwrap();
        assert!((g2.limit.re - (1.0 - std::f64::consts::FRAC_1_SQRT_2)).abs() < 1e-9);
    }

    #[test]
    fn grover_scenario_rows_and_localization() {
        let report = Scenario::grover_localized(1000).check(2, 1e-10).unwrap();
        assert!(
            report.passes(),
            "{:#?}",
            report.failures().collect::<Vec<_>>()
        );
        let point = |pair| {
            report
                .find(Quantity::ThmA2Real, None, Some(pair))
                .unwrap()
                .finite
                .re
        };
        assert!((point([0, 1]) - point([1, 2])).abs() < 1e-10);
        let r1 = report
            .find(Quantity::ThmA2Imag, Some(1), Some([0, 1]))
            .unwrap();
        let r0 = report
            .find(Quantity::ThmA2Imag, Some(0), Some([0, 1]))
            .unwrap();
        assert!(r0.limit.re != r1.limit.re);
        let loc = report.localization.unwrap();
        assert!(loc.floor > 0.01 && loc.min_probability > loc.floor);
    }

    #[test]
    fn report_json_round_trips_and_detects_tampering() {
        let report = Scenario::hadamard_symmetric(120).check(1, 1e-10).unwrap();
        let text = report.to_json().unwrap();
        assert_eq!(ComparisonReport::from_json(&text).unwrap(), report);
        let first = decimal::format(report.rows[0].abs_error);
        let tampered = text.replacen(&first, "1.0000000000000000e0", 1);
        assert!(matches!(
            ComparisonReport::from_json(&tampered),
            Err(Error::Report(_))
        ));
    }

    #[test]
    fn empty_sweep_is_empty() {
        let report = convergence_sweep(
            &Scenario::hadamard_symmetric(0),
            &[],
            Quantity::Thm2Imag,
            Some(0),
            Some([0, 1]),
        )
        .unwrap();
        assert!(report.rows.is_empty() && report.convergence.is_empty());
        assert_eq!(report.final_not_worse, None);
    }

    #[test]
    fn two_state_quantities_reject_grover() {
        let scenario = Scenario::grover_localized(10);
        assert!(
            convergence_sweep(&scenario, &[10], Quantity::Thm2Imag, Some(0), Some([0, 1])).is_err()
        );
    }

    #[test]
    fn write_new_refuses_to_overwrite() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.json");
        let report = Scenario::hadamard_symmetric(100).check(0, 1e-10).unwrap();
        report.write_new(&path).unwrap();
        let before = std::fs::read(&path).unwrap();
        assert!(report.write_new(&path).is_err());
        assert_eq!(std::fs::read(&path).unwrap(), before);
    }
}
