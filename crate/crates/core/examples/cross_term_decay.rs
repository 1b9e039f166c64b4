//! The band-mixing part of the r = 0 interference sum shrinks as t doubles,
//! while the band-diagonal part stays put.

use std::f64::consts::FRAC_1_SQRT_2;

use qwalk::density::rescaled_sum;
use qwalk::spectral::band_decomposition;
use qwalk::{Coin, Complex64, FourierSymbol, WalkState};

fn main() -> qwalk::Result<()> {
    let coin = Coin::hadamard();
    let init = WalkState::single_site(
        2,
        0,
        &[
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::new(0.0, FRAC_1_SQRT_2),
        ],
    )?;
    let symbol = FourierSymbol::new(coin);

    println!("   t   diagonal                 |mixing|     diag + mix - simulated");
    let mut state = init.clone();
    for t in [0u64, 125, 250, 500, 1000] {
        state = state.evolve(&coin, t - state.time())?;
        let (diag, mix) = band_decomposition(&init, &symbol, t, 0, 0, 1)?;
        let sim = rescaled_sum(&state, 0, 0, 1)?;
        println!(
            "{t:4}   {diag:+.10}   {:.4e}   {:.1e}",
            mix.norm(),
            (diag + mix - sim).norm()
        );
    }
    Ok(())
}
