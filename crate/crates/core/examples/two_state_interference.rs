//! Rescaled interference sums `Σ_x (x/t)^r <0|ρ_t(x)|1>` of 2-state walks
//! against their limit laws, for both coin families and a few angles.

use std::f64::consts::PI;

use qwalk::density::{empirical_moment, rescaled_sum};
use qwalk::laws::two_state_interference_laws;
use qwalk::{Coin, CoinKind, Complex64, WalkState};

const T: u64 = 1000;

fn main() -> qwalk::Result<()> {
    // A generic initial spinor, so both the real and imaginary laws are nontrivial.
    let alpha = Complex64::new(0.6, 0.0);
    let beta = Complex64::new(0.0, 0.8);

    for kind in [CoinKind::FamilyA, CoinKind::FamilyB] {
        for theta in [PI / 4.0, PI / 6.0, 2.0 * PI / 3.0] {
            let coin = Coin::two_state(kind, theta)?;
            let state = WalkState::single_site(2, 0, &[alpha, beta])?.evolve(&coin, T)?;
            let (re_law, im_law) = two_state_interference_laws(&coin, alpha, beta)?;
            let scale = coin.det() * coin.s() / (2.0 * coin.c());

            println!("family {kind}, θ = {theta:.4}, det U = {:+}", coin.det());
            println!("  r   Re sum      Re limit    detU·s/2c·E[..^(r+1)]   Im sum      Im limit");
            for r in 0..=3 {
                let sum = rescaled_sum(&state, r, 0, 1)?;
                println!(
                    "  {r}   {:+.6}   {:+.6}   {:+.6}               {:+.6}   {:+.6}",
                    sum.re,
                    re_law.moment(r)?,
                    scale * empirical_moment(&state, r + 1)?,
                    sum.im,
                    im_law.moment(r)?,
                );
            }
        }
    }
    Ok(())
}
