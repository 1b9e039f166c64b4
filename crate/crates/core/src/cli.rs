//! The `qwalk` command-line front end.
//!
//! Every subcommand writes CSV or JSON to `--output` (atomically, via a
//! temporary file and rename) or to stdout. Exit status is 0 on success, 2 on
//! invalid input or I/O failure, and 3 when `verify` finds a tolerance breach.

use std::ffi::OsString;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::coin::{Coin, CoinKind};
use crate::density::{self, moment_series};
use crate::laws::{self, LimitLaw};
use crate::quad;
use crate::spectral::{self, FourierSymbol};
use crate::verify::{self, ComparisonReport, Quantity, Scenario};
use crate::walk::{WalkState, INPUT_NORM_TOLERANCE};
use crate::{decimal, Error, Result};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_TOLERANCE: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "qwalk",
    version,
    about = "Discrete-time quantum walks on the line"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Amplitudes after `--steps` steps: `x,re_0,im_0,...`
    Evolve {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long)]
        steps: u64,
        /// Propagate in momentum space instead of on the lattice.
        #[arg(long)]
        kspace: bool,
        /// k-node count for `--kspace` (default: the minimum that avoids aliasing).
        #[arg(long)]
        nodes: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Position distribution: `x,probability`
    Prob {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long)]
        steps: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Every local density-matrix entry: `x,j1,j2,re,im`
    Density {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long)]
        steps: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// One interference entry against rescaled position: `x_over_t,re,im`
    Interference {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long)]
        steps: u64,
        #[arg(long, default_value = "0,1", value_parser = parse_pair)]
        pair: (usize, usize),
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Tabulated limit law: `# point_mass=...`, then `y,density`
    Limit {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, value_enum)]
        law: LawKind,
        #[arg(long, default_value = "0,1", value_parser = parse_pair)]
        pair: (usize, usize),
        #[arg(long, default_value_t = 2001)]
        points: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Rescaled sums of a simulated walk, or moments of a limit law with `--law`
    Moments {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, required_unless_present = "law")]
        steps: Option<u64>,
        #[arg(long, default_value = "0,1", value_parser = parse_pair)]
        pair: (usize, usize),
        #[arg(long, default_value_t = 4)]
        r_max: u32,
        #[arg(long, value_enum, conflicts_with = "steps")]
        law: Option<LawKind>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Finite-time against limit comparison report (JSON)
    Verify {
        #[arg(long, value_enum)]
        scenario: ScenarioName,
        #[arg(long, default_value_t = 1000)]
        steps: u64,
        #[arg(long, default_value_t = 2)]
        r_max: u32,
        /// Coin for `--scenario custom`.
        #[arg(long, value_enum)]
        coin: Option<CoinArg>,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        init: Option<String>,
        /// Ascending times for a convergence sweep of `--quantity`.
        #[arg(long, value_delimiter = ',', requires = "quantity")]
        sweep: Option<Vec<u64>>,
        #[arg(long, value_parser = parse_quantity)]
        quantity: Option<Quantity>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, value_parser = parse_pair)]
        pair: Option<(usize, usize)>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Band structure: `k,re_lambda_j,im_lambda_j,h_j` for every band
    Bands {
        #[command(flatten)]
        coin: CoinArgs,
        #[arg(long, default_value_t = 512)]
        nodes: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoinArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "grover", alias = "G")]
    Grover,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LawKind {
    /// Position law of `X_t / t` (2-state only).
    G,
    /// Real part of the interference entry.
    Re,
    /// Imaginary part of the interference entry.
    Im,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScenarioName {
    #[value(name = "thm2-fig2")]
    Symmetric2,
    #[value(name = "thmA2-fig45", alias = "thma2-fig45")]
    Grover3,
    Custom,
}

#[derive(Debug, Args)]
pub struct CoinArgs {
    #[arg(long, value_enum)]
    pub coin: CoinArg,
    /// Coin angle for the 2-state families, e.g. `pi/4`.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    #[command(flatten)]
    pub coin: CoinArgs,
    /// Initial spinor at the origin, comma-separated complex numbers, e.g. `1/sqrt2,i/sqrt2`.
    #[arg(long, allow_hyphen_values = true)]
    pub init: String,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file (stdout when absent).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

fn parse_pair(text: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = text.split_once(',').ok_or("expected `j1,j2`")?;
    let index = |s: &str| s.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((index(a)?, index(b)?))
}

fn parse_quantity(text: &str) -> std::result::Result<Quantity, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

/// Parses a real or complex expression: decimals, `i`, `pi`, `sqrtN`,
/// `sqrt(...)`, the four operations, parentheses and implicit products such
/// as `0.5i` or `2pi/3`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let chars: Vec<char> = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '−' { '-' } else { c })
        .collect();
    let mut p = ExprParser { s: &chars, pos: 0 };
    let value = p.sum()?;
    if p.pos != chars.len() {
        return Err(Error::Parse(format!(
            "unexpected {:?} in {text:?}",
            chars[p.pos]
        )));
    }
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Parse(format!("{text:?} is not finite")));
    }
    Ok(value)
}

/// Parses a real expression such as `pi/4`.
pub fn parse_real(text: &str) -> Result<f64> {
    let z = parse_complex(text)?;
    if z.im != 0.0 {
        return Err(Error::Parse(format!("{text:?} is not real")));
    }
    Ok(z.re)
}

/// Parses a comma-separated spinor and checks its norm to within
/// [`INPUT_NORM_TOLERANCE`]. The spinor is never renormalized.
pub fn parse_spinor(text: &str) -> Result<Vec<Complex64>> {
    let spinor = text
        .split(',')
        .map(parse_complex)
        .collect::<Result<Vec<_>>>()?;
    let norm_sqr: f64 = spinor.iter().map(|z| z.norm_sqr()).sum();
    if (norm_sqr.sqrt() - 1.0).abs() > INPUT_NORM_TOLERANCE {
        return Err(Error::NotNormalized { norm_sqr });
    }
    Ok(spinor)
}

struct ExprParser<'a> {
    s: &'a [char],
    pos: usize,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        if self.s.len() >= self.pos + n
            && self.s[self.pos..self.pos + n]
                .iter()
                .copied()
                .eq(word.chars())
        {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn error(&self, what: &str) -> Error {
        let text: String = self.s.iter().collect();
        Error::Parse(format!("{what} at position {} of {text:?}", self.pos))
    }

    fn sum(&mut self) -> Result<Complex64> {
        let mut acc = self.product()?;
        loop {
            if self.eat("+") {
                acc += self.product()?;
            } else if self.eat("-") {
                acc -= self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Complex64> {
        let mut acc = self.unary()?;
        loop {
            if self.eat("*") {
                acc *= self.unary()?;
            } else if self.eat("/") {
                acc /= self.unary()?;
            } else if matches!(self.peek(), Some('i' | 'p' | 's' | '(')) {
                acc *= self.atom()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Complex64> {
        if self.eat("-") {
            Ok(-self.unary()?)
        } else if self.eat("+") {
            self.unary()
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Complex64> {
        if self.eat("(") {
            let inner = self.sum()?;
            if !self.eat(")") {
                return Err(self.error("missing `)`"));
            }
            return Ok(inner);
        }
        if self.eat("pi") || self.eat("π") {
            return Ok(Complex64::new(std::f64::consts::PI, 0.0));
        }
        if self.eat("sqrt") || self.eat("√") {
            let arg = if self.peek() == Some('(') {
                self.atom()?
            } else {
                self.number()?
            };
            return Ok(arg.sqrt());
        }
        if self.eat("i") {
            return Ok(Complex64::i());
        }
        self.number()
    }

    fn number(&mut self) -> Result<Complex64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.') {
            self.pos += 1;
        }
        if matches!(self.peek(), Some('e' | 'E')) && self.pos > start {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some('+' | '-')) {
                self.pos += 1;
            }
            let digits = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            if self.pos == digits {
                self.pos = save;
            }
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let text: String = self.s[start..self.pos].iter().collect();
        let value = text
            .parse::<f64>()
            .map_err(|_| self.error("malformed number"))?;
        Ok(Complex64::new(value, 0.0))
    }
}

impl CoinArgs {
    pub fn build(&self) -> Result<Coin> {
        build_coin(self.coin, self.theta.as_deref())
    }
}

fn build_coin(coin: CoinArg, theta: Option<&str>) -> Result<Coin> {
    let theta = theta.map(parse_real).transpose()?;
    match (coin, theta) {
        (CoinArg::Grover, None) => Ok(Coin::grover()),
        (CoinArg::Grover, Some(_)) => Err(Error::Parse("the Grover coin takes no --theta".into())),
        (_, None) => Err(Error::Parse("2-state coins need --theta".into())),
        (CoinArg::A, Some(theta)) => Coin::two_state(CoinKind::FamilyA, theta),
        (CoinArg::B, Some(theta)) => Coin::two_state(CoinKind::FamilyB, theta),
    }
}

impl WalkArgs {
    pub fn build(&self) -> Result<(Coin, Vec<Complex64>, WalkState)> {
        let coin = self.coin.build()?;
        let spinor = parse_spinor(&self.init)?;
        let state = WalkState::single_site_within(coin.dim(), 0, &spinor, INPUT_NORM_TOLERANCE)?;
        Ok((coin, spinor, state))
    }
}

/// Quadrature tolerance, overridable through [`quad::TOLERANCE_ENV`].
pub fn quad_tolerance() -> Result<f64> {
    match std::env::var(quad::TOLERANCE_ENV) {
        Ok(text) => {
            let tol = parse_real(&text)?;
            if tol > 0.0 {
                Ok(tol)
            } else {
                Err(Error::Parse(format!(
                    "{} must be positive",
                    quad::TOLERANCE_ENV
                )))
            }
        }
        Err(std::env::VarError::NotPresent) => Ok(quad::DEFAULT_TOLERANCE),
        Err(e) => Err(Error::Parse(e.to_string())),
    }
}

/// Runs `write` against the output file (atomically) or stdout.
fn emit(out: &OutputArgs, write: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match &out.output {
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let tmp = tempfile::NamedTempFile::new_in(dir)?;
            let mut w = BufWriter::new(tmp);
            write(&mut w)?;
            let tmp = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            tmp.persist(path).map_err(|e| Error::Io(e.error))?;
            Ok(())
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            write(&mut w)?;
            w.flush()?;
            Ok(())
        }
    }
}

fn interference_laws(
    coin: &Coin,
    spinor: &[Complex64],
    pair: (usize, usize),
) -> Result<(LimitLaw, LimitLaw)> {
    if coin.is_two_state() {
        if pair != (0, 1) {
            return Err(Error::InvalidIndex {
                j1: pair.0,
                j2: pair.1,
                dim: 2,
            });
        }
        laws::two_state_interference_laws(coin, spinor[0], spinor[1])
    } else {
        let coeffs = laws::grover_coefficients(spinor[0], spinor[1], spinor[2])?;
        laws::grover_interference_laws(&coeffs, pair.0, pair.1)
    }
}

fn select_law(
    coin: &Coin,
    spinor: &[Complex64],
    kind: LawKind,
    pair: (usize, usize),
) -> Result<LimitLaw> {
    match kind {
        LawKind::G if coin.is_two_state() => laws::konno_density(coin, spinor[0], spinor[1]),
        LawKind::G => Err(Error::WrongWalk {
            expected: "2-state",
        }),
        LawKind::Re => interference_laws(coin, spinor, pair).map(|(re, _)| re),
        LawKind::Im => interference_laws(coin, spinor, pair).map(|(_, im)| im),
    }
}

#[derive(Serialize)]
struct LawMoments {
    law: &'static str,
    entry: Option<(usize, usize)>,
    #[serde(with = "decimal")]
    point_mass: f64,
    values: Vec<LawMoment>,
}

#[derive(Serialize)]
struct LawMoment {
    r: u32,
    #[serde(with = "decimal")]
    value: f64,
}

fn law_name(kind: LawKind) -> &'static str {
    match kind {
        LawKind::G => "g",
        LawKind::Re => "re",
        LawKind::Im => "im",
    }
}

fn write_json<T: Serialize>(w: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

/// Outcome of a successful run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Done,
    ToleranceBreach,
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Evolve {
            walk,
            steps,
            kspace,
            nodes,
            out,
        } => {
            let (coin, _, init) = walk.build()?;
            let state = if kspace {
                spectral::k_space_propagate(&init, &FourierSymbol::new(coin), steps, nodes)?
            } else {
                init.evolve(&coin, steps)?
            };
            emit(&out, |w| state.write_csv(w))?;
        }
        Command::Prob { walk, steps, out } => {
            let (coin, _, init) = walk.build()?;
            let state = init.evolve(&coin, steps)?;
            emit(&out, |w| density::write_probability_csv(&state, w))?;
        }
        Command::Density { walk, steps, out } => {
            let (coin, _, init) = walk.build()?;
            let state = init.evolve(&coin, steps)?;
            emit(&out, |w| density::write_density_csv(&state, w))?;
        }
        Command::Interference {
            walk,
            steps,
            pair,
            out,
        } => {
            let (coin, _, init) = walk.build()?;
            let state = init.evolve(&coin, steps)?;
            emit(&out, |w| {
                density::write_interference_csv(&state, pair.0, pair.1, w)
            })?;
        }
        Command::Limit {
            walk,
            law,
            pair,
            points,
            out,
        } => {
            let (coin, spinor, _) = walk.build()?;
            let law = select_law(&coin, &spinor, law, pair)?;
            emit(&out, |w| law.write_table(points, w))?;
        }
        Command::Moments {
            walk,
            steps,
            pair,
            r_max,
            law,
            out,
        } => {
            let (coin, spinor, init) = walk.build()?;
            match (law, steps) {
                (Some(kind), _) => {
                    let tol = quad_tolerance()?;
                    let limit = select_law(&coin, &spinor, kind, pair)?;
                    let values = (0..=r_max)
                        .map(|r| {
                            limit
                                .moment_with_tolerance(r, tol)
                                .map(|value| LawMoment { r, value })
                        })
                        .collect::<Result<_>>()?;
                    let report = LawMoments {
                        law: law_name(kind),
                        entry: (kind != LawKind::G).then_some(pair),
                        point_mass: limit.point_mass(),
                        values,
                    };
                    emit(&out, |w| write_json(w, &report))?;
                }
                (None, Some(steps)) => {
                    let state = init.evolve(&coin, steps)?;
                    let series = moment_series(&state, pair.0, pair.1, r_max)?;
                    emit(&out, |w| write_json(w, &series))?;
                }
                (None, None) => return Err(Error::Parse("moments needs --steps or --law".into())),
            }
        }
        Command::Verify {
            scenario,
            steps,
            r_max,
            coin,
            theta,
            init,
            sweep,
            quantity,
            r,
            pair,
            out,
        } => {
            let scenario = match scenario {
                ScenarioName::Symmetric2 => Scenario::hadamard_symmetric(steps),
                ScenarioName::Grover3 => Scenario::grover_localized(steps),
                ScenarioName::Custom => {
                    let coin =
                        coin.ok_or_else(|| Error::Parse("custom scenarios need --coin".into()))?;
                    let init =
                        init.ok_or_else(|| Error::Parse("custom scenarios need --init".into()))?;
                    let coin = build_coin(coin, theta.as_deref())?;
                    Scenario::custom(&coin, &parse_spinor(&init)?, steps)?
                }
            };
            let report = match (sweep, quantity) {
                (Some(times), Some(quantity)) => {
                    let entry = pair.map(|(a, b)| [a, b]).or(match quantity {
                        Quantity::GMoment => None,
                        _ => Some([0, 1]),
                    });
                    verify::convergence_sweep(&scenario, &times, quantity, r.or(Some(0)), entry)?
                }
                _ => scenario.check(r_max, quad_tolerance()?)?,
            };
            write_report(&report, &out)?;
            let trend_ok = report.final_not_worse.unwrap_or(true);
            if !(report.passes() && trend_ok) {
                for row in report.failures() {
                    eprintln!(
                        "tolerance breach: {} r={:?} entry={:?} abs_error={} tolerance={:?}",
                        row.quantity,
                        row.r,
                        row.entry,
                        decimal::format(row.abs_error),
                        row.tolerance
                    );
                }
                if let Some(loc) = report.localization.filter(|l| !l.passes()) {
                    eprintln!(
                        "localization below floor: {} <= {}",
                        loc.min_probability, loc.floor
                    );
                }
                if !trend_ok {
                    eprintln!("convergence sweep: final error exceeds initial error");
                }
                return Ok(Outcome::ToleranceBreach);
            }
        }
        Command::Bands { coin, nodes, out } => {
            let symbol = FourierSymbol::new(coin.build()?);
            emit(&out, |w| spectral::write_band_csv(&symbol, nodes, w))?;
        }
    }
    Ok(Outcome::Done)
}

/// Reports are never overwritten: an existing output path is an error.
fn write_report(report: &ComparisonReport, out: &OutputArgs) -> Result<()> {
    match &out.output {
        Some(path) => report.write_new(path),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(report.to_json()?.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Parses `args`, runs, and maps the outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::from(EXIT_OK),
        Ok(Outcome::ToleranceBreach) => ExitCode::from(EXIT_TOLERANCE),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-15
    }

    #[test]
    fn expressions() {
        assert!(close(
            parse_complex("1/sqrt2").unwrap(),
            Complex64::new(FRAC_1_SQRT_2, 0.0)
        ));
        assert!(close(
            parse_complex("i/sqrt2").unwrap(),
            Complex64::new(0.0, FRAC_1_SQRT_2)
        ));
        assert!(close(
            parse_complex("−0.5i").unwrap(),
            Complex64::new(0.0, -0.5)
        ));
        assert!(close(
            parse_complex("0.5+0.25i").unwrap(),
            Complex64::new(0.5, 0.25)
        ));
        assert!(close(
            parse_complex("1/sqrt(3)").unwrap(),
            Complex64::new(1.0 / 3f64.sqrt(), 0.0)
        ));
        assert!(close(
            parse_complex("2e-1").unwrap(),
            Complex64::new(0.2, 0.0)
        ));
        assert_eq!(parse_real("pi/4").unwrap(), PI / 4.0);
        assert_eq!(parse_real("2pi/3").unwrap(), 2.0 * PI / 3.0);
        for bad in ["", "1/", "pi)", "x", "1..2", "i"] {
            if bad == "i" {
                assert!(parse_real(bad).is_err());
            } else {
                assert!(parse_complex(bad).is_err(), "{bad}");
            }
        }
    }

    #[test]
    fn spinors_are_checked_not_renormalized() {
        let s = parse_spinor("1/sqrt2,i/sqrt2").unwrap();
        assert_eq!(s.len(), 2);
        assert!(matches!(
            parse_spinor("1,1"),
            Err(Error::NotNormalized { .. })
        ));
        assert!(parse_spinor("0.7071,0.7071i").is_err());
        assert!(parse_spinor("0.70710678118,0.70710678118i").is_ok());
    }

    #[test]
    fn coin_validation() {
        assert!(build_coin(CoinArg::A, Some("pi/4")).is_ok());
        assert!(matches!(
            build_coin(CoinArg::A, Some("pi/2")),
            Err(Error::InvalidAngle { .. })
        ));
        assert!(build_coin(CoinArg::B, None).is_err());
        assert!(build_coin(CoinArg::Grover, Some("pi/4")).is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
