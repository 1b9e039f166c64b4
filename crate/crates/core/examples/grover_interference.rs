//! Grover interference sums at t = 1000 against point mass plus density,
//! and the linear moment identities they satisfy.

use qwalk::density::{empirical_moment, rescaled_sum};
use qwalk::laws::{grover_coefficients, grover_interference_laws};
use qwalk::{Coin, Complex64, GroverPair, WalkState};

fn main() -> qwalk::Result<()> {
    let a = 1.0 / 3f64.sqrt();
    let (alpha, beta, gamma) = (
        Complex64::new(a, 0.0),
        Complex64::new(0.0, a),
        Complex64::new(0.0, a),
    );
    let state =
        WalkState::single_site(3, 0, &[alpha, beta, gamma])?.evolve(&Coin::grover(), 1000)?;
    let coeffs = grover_coefficients(alpha, beta, gamma)?;
    println!(
        "c0 = {:+.6}  c1 = {:+.6}  c2 = {:+.6}  d0 = {:+.6}  d1 = {:+.6}",
        coeffs.c0, coeffs.c1, coeffs.c2, coeffs.d0, coeffs.d1
    );

    let m: Vec<f64> = (0..=6)
        .map(|r| empirical_moment(&state, r))
        .collect::<qwalk::Result<_>>()?;
    for pair in GroverPair::ALL {
        let (j1, j2) = pair.indices();
        let (re, im) = grover_interference_laws(&coeffs, j1, j2)?;
        println!(
            "\npair {pair}: point masses {:+.6} (Re), {:+.6} (Im)",
            re.point_mass(),
            im.point_mass()
        );
        for r in 0..=3u32 {
            let sum = rescaled_sum(&state, r, j1, j2)?;
            let ri = r as usize;
            let identity = match pair {
                GroverPair::P01 => 0.5 * m[ri + 1] - 0.5 * m[ri + 2],
                GroverPair::P02 => 0.25 * m[ri] - 1.25 * m[ri + 2],
                GroverPair::P12 => -0.5 * m[ri + 1] - 0.5 * m[ri + 2],
            };
            print!(
                "  r={r}  Re {:+.6} vs {:+.6}   Im {:+.6} vs {:+.6}",
                sum.re,
                re.moment(r)?,
                sum.im,
                im.moment(r)?
            );
            if r >= 1 {
                print!("   moments {identity:+.6}");
            }
            println!();
        }
    }
    Ok(())
}
