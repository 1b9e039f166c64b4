//! Position distribution of the Hadamard-like walk at t = 1000 and the
//! moments of `X_t / t` against the limit density.
//!
//! ```text
//! cargo run --release --example hadamard_distribution [out.csv]
//! ```

use std::f64::consts::FRAC_1_SQRT_2;
use std::fs::File;
use std::io::BufWriter;

use qwalk::density::{empirical_moment, probability_distribution, write_probability_csv};
use qwalk::laws::konno_density;
use qwalk::{Coin, Complex64, WalkState};

fn main() -> qwalk::Result<()> {
    let coin = Coin::hadamard();
    let (alpha, beta) = (
        Complex64::new(FRAC_1_SQRT_2, 0.0),
        Complex64::new(0.0, FRAC_1_SQRT_2),
    );
    let state = WalkState::single_site(2, 0, &[alpha, beta])?.evolve(&coin, 1000)?;

    let dist = probability_distribution(&state);
    let (peak_x, peak_p) =
        dist.iter().filter(|(x, _)| **x > 0).fold(
            (0, 0.0),
            |best, (&x, &p)| if p > best.1 { (x, p) } else { best },
        );
    println!("t = {}, norm = {:.15}", state.time(), state.norm_sqr());
    println!(
        "right peak at x = {peak_x} (x/t = {:.4}), P = {peak_p:.5}",
        peak_x as f64 / 1000.0
    );
    println!(
        "P(x) = P(-x) for all x: {}",
        dist.iter().all(|(x, p)| (p - dist[&-x]).abs() < 1e-14)
    );

    let g = konno_density(&coin, alpha, beta)?;
    println!("\n r   E[(X_t/t)^r]      ∫ y^r g(y) dy");
    for r in 0..=4 {
        println!(
            "{r:2}   {:+.10}   {:+.10}",
            empirical_moment(&state, r)?,
            g.moment(r)?
        );
    }

    if let Some(path) = std::env::args().nth(1) {
        write_probability_csv(&state, BufWriter::new(File::create(&path)?))?;
        println!("\nwrote {path}");
    }
    Ok(())
}
