//! The momentum-space oracle: k-space propagation against lattice evolution,
//! Plancherel, band velocities and the spectral limit moments.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use qwalk::density::empirical_moment;
use qwalk::spectral::{fourier_norm_sqr, k_space_propagate, limit_moment, required_nodes};
use qwalk::{Coin, CoinKind, Complex64, FourierSymbol, WalkState};

fn max_diff(a: &WalkState, b: &WalkState) -> f64 {
    let (lo, hi) = a.support().unwrap();
    (lo..=hi)
        .map(|x| a.spinor(x).max_abs_diff(&b.spinor(x)))
        .fold(0.0, f64::max)
}

fn main() -> qwalk::Result<()> {
    let h = FRAC_1_SQRT_2;
    let a = 1.0 / 3f64.sqrt();
    let cases = [
        (
            Coin::two_state(CoinKind::FamilyA, PI / 4.0)?,
            vec![Complex64::new(h, 0.0), Complex64::new(0.0, h)],
        ),
        (
            Coin::two_state(CoinKind::FamilyB, PI / 6.0)?,
            vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, -0.8)],
        ),
        (
            Coin::grover(),
            vec![
                Complex64::new(a, 0.0),
                Complex64::new(0.0, a),
                Complex64::new(0.0, a),
            ],
        ),
    ];

    for (coin, spinor) in &cases {
        let symbol = FourierSymbol::new(*coin);
        let init = WalkState::single_site(coin.dim(), 0, spinor)?;
        let t = 32;
        let lattice = init.evolve(coin, t)?;
        let kspace = k_space_propagate(&init, &symbol, t, None)?;
        println!("{} coin, t = {t}", coin.kind());
        println!(
            "  nodes {}  max |lattice - kspace| = {:.2e}",
            required_nodes(&init, t),
            max_diff(&lattice, &kspace)
        );
        println!(
            "  Plancherel defect = {:.2e}",
            (fourier_norm_sqr(&lattice, 4096) - lattice.norm_sqr()).abs()
        );

        let k = 0.7;
        for band in 0..symbol.bands() {
            println!(
                "  band {band}: λ(0.7) = {:.6}, h(0.7) = {:+.6}",
                symbol.eigenvalue(band, k),
                symbol.velocity(band, k)
            );
        }

        let late = init.evolve(coin, 1000)?;
        for r in [2, 4] {
            println!(
                "  E[(X/t)^{r}] at t = 1000: {:.6}   spectral limit: {:.6}",
                empirical_moment(&late, r)?,
                limit_moment(&init, &symbol, r)?
            );
        }
    }
    Ok(())
}
