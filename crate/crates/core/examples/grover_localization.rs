//! Localization of the 3-state Grover walk: the return probability settles
//! to the flat-band limit instead of decaying, and the interference limits
//! carry point masses at the origin.

use qwalk::density::probability_distribution;
use qwalk::laws::grover_coefficients;
use qwalk::spectral::{delta_integral, flat_band_weight, localized_probability};
use qwalk::{Coin, Complex64, DeltaForm, GroverPair, Part, WalkState};

fn main() -> qwalk::Result<()> {
    let a = 1.0 / 3f64.sqrt();
    let spinor = [
        Complex64::new(a, 0.0),
        Complex64::new(0.0, a),
        Complex64::new(0.0, a),
    ];
    let init = WalkState::single_site(3, 0, &spinor)?;
    let coin = Coin::grover();

    let limit = localized_probability(&init, 0)?;
    println!("lim P(X_t = 0)      = {limit:.8}");
    println!("flat-band weight    = {:.8}", flat_band_weight(&init)?);

    let mut state = init.clone();
    let mut min = f64::INFINITY;
    for t in 1..=150u64 {
        state = state.step(&coin)?;
        let p0 = probability_distribution(&state)[&0];
        if t >= 100 {
            min = min.min(p0);
        }
        if t % 25 == 0 {
            println!("t = {t:3}  P(X_t = 0) = {p0:.6}");
        }
    }
    println!("min over t in 100..=150: {min:.6}");

    let coeffs = grover_coefficients(spinor[0], spinor[1], spinor[2])?;
    println!("\npoint masses: quadrature vs closed form");
    for part in [Part::Real, Part::Imag] {
        for pair in GroverPair::ALL {
            let (j1, j2) = pair.indices();
            let q = delta_integral(&init, part, j1, j2, DeltaForm::PointMass)?;
            println!(
                "  {part:?} {pair}: {q:+.12}  {:+.12}",
                coeffs.delta(part, pair)
            );
        }
    }
    Ok(())
}
