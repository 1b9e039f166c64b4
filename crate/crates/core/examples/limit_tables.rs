//! Tabulates limit densities on a grid and re-integrates the tables with the
//! trapezoid rule, as an external plotting tool would.

use std::f64::consts::FRAC_1_SQRT_2;

use qwalk::laws::{
    grover_coefficients, grover_interference_laws, konno_density, two_state_interference_laws,
};
use qwalk::{Coin, Complex64, LimitLaw};

fn trapezoid_moment(law: &LimitLaw, r: u32, points: usize) -> qwalk::Result<f64> {
    let mut table = Vec::new();
    law.write_table(points, &mut table)?;
    let text = String::from_utf8(table).expect("utf-8");
    let rows: Vec<(f64, f64)> = text
        .lines()
        .skip(2)
        .map(|line| {
            let (y, f) = line.split_once(',').unwrap();
            (y.parse().unwrap(), f.parse().unwrap())
        })
        .collect();
    let area = rows
        .windows(2)
        .map(|w| {
            0.5 * (w[1].0 - w[0].0)
                * (w[0].0.powi(r as i32) * w[0].1 + w[1].0.powi(r as i32) * w[1].1)
        })
        .sum::<f64>();
    Ok(area + if r == 0 { law.point_mass() } else { 0.0 })
}

fn main() -> qwalk::Result<()> {
    let coin = Coin::hadamard();
    let (alpha, beta) = (
        Complex64::new(FRAC_1_SQRT_2, 0.0),
        Complex64::new(0.0, FRAC_1_SQRT_2),
    );
    let (re, im) = two_state_interference_laws(&coin, alpha, beta)?;
    let g = konno_density(&coin, alpha, beta)?;

    let a = 1.0 / 3f64.sqrt();
    let coeffs = grover_coefficients(
        Complex64::new(a, 0.0),
        Complex64::new(0.0, a),
        Complex64::new(0.0, a),
    )?;
    let (_, grover_im) = grover_interference_laws(&coeffs, 0, 1)?;

    // Laws with inverse-square-root edges converge slowly on a uniform grid; the
    // bounded ones match to many digits.
    for (name, law) in [
        ("g", &g),
        ("Re <0|ρ|1>", &re),
        ("Im <0|ρ|1>", &im),
        ("Grover Im <0|ρ|1>", &grover_im),
    ] {
        println!(
            "{name}: support ±{:.6}, point mass {:+.6}",
            law.support_bound(),
            law.point_mass()
        );
        for r in 0..=2 {
            println!(
                "  r={r}  quadrature {:+.8}  table (20001 pts) {:+.8}",
                law.moment(r)?,
                trapezoid_moment(law, r, 20001)?
            );
        }
    }
    Ok(())
}
