use num_complex::Complex64;
use proptest::prelude::*;
use qwalk::density::probability_distribution;
use qwalk::linalg::Spinor;
use qwalk::{Coin, CoinKind, WalkState};

fn coin_strategy() -> impl Strategy<Value = Coin> {
    prop_oneof![
        (0.05f64..1.5).prop_map(|t| Coin::two_state(CoinKind::FamilyA, t).unwrap()),
        (0.05f64..1.5).prop_map(|t| Coin::two_state(CoinKind::FamilyB, t).unwrap()),
        Just(Coin::grover()),
    ]
}

fn raw_spinor(dim: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim).prop_map(|v| {
        v.into_iter()
            .map(|(re, im)| Complex64::new(re, im))
            .collect()
    })
}

fn unit(v: &[Complex64]) -> Vec<Complex64> {
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter().map(|z| z / n).collect()
}

fn coin_and_spinor() -> impl Strategy<Value = (Coin, Vec<Complex64>)> {
    coin_strategy().prop_flat_map(|coin| {
        raw_spinor(coin.dim())
            .prop_filter("nonzero", |v| {
                v.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3
            })
            .prop_map(move |v| (coin, unit(&v)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn norm_is_preserved((coin, spinor) in coin_and_spinor(), t in 0u64..400) {
        let state = WalkState::single_site(coin.dim(), 0, &spinor).unwrap().evolve(&coin, t).unwrap();
        prop_assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
        let total: f64 = probability_distribution(&state).values().sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_state_parity((coin, spinor) in coin_and_spinor(), t in 0u64..200) {
        prop_assume!(coin.is_two_state());
        let state = WalkState::single_site(2, 0, &spinor).unwrap().evolve(&coin, t).unwrap();
        let (lo, hi) = state.support().unwrap();
        prop_assert!(lo >= -(t as i64) && hi <= t as i64);
        for x in lo..=hi {
            if (x - t as i64).rem_euclid(2) == 1 {
                prop_assert_eq!(state.spinor(x).norm_sqr(), 0.0);
            }
        }
    }

    #[test]
    fn evolution_is_linear(
        (coin, a) in coin_and_spinor(),
        b_raw in raw_spinor(3),
        w in (-2.0f64..2.0, -2.0f64..2.0),
        t in 0u64..120,
    ) {
        let dim = coin.dim();
        let b: Vec<Complex64> = b_raw[..dim].to_vec();
        let w = Complex64::new(w.0, w.1);
        let mix: Vec<Complex64> = a.iter().zip(&b).map(|(x, y)| x + w * y).collect();
        let evolve = |v: &[Complex64]| {
            WalkState::from_sites_unnormalized(dim, 0, &[Spinor::from_slice(v)]).unwrap().evolve(&coin, t).unwrap()
        };
        let (ea, eb, em) = (evolve(&a), evolve(&b), evolve(&mix));
        for x in -(t as i64)..=t as i64 {
            let expect = ea.spinor(x).as_slice().iter().zip(eb.spinor(x).as_slice()).map(|(p, q)| p + w * q).collect::<Vec<_>>();
            prop_assert!(Spinor::from_slice(&expect).max_abs_diff(&em.spinor(x)) < 1e-12);
        }
    }

    #[test]
    fn steps_reverse_exactly((coin, spinor) in coin_and_spinor()) {
        let init = WalkState::single_site(coin.dim(), 0, &spinor).unwrap();
        let mut state = init.evolve(&coin, 100).unwrap();
        for _ in 0..100 {
            state = state.step_back(&coin).unwrap();
        }
        prop_assert_eq!(state.time(), 0);
        for x in -100..=100 {
            prop_assert!(state.spinor(x).max_abs_diff(&init.spinor(x)) < 1e-12);
        }
    }
}

#[test]
fn cannot_step_before_zero() {
    let init = WalkState::single_site(2, 0, &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)])
        .unwrap();
    assert!(init.step_back(&Coin::hadamard()).is_err());
}

#[test]
fn grover_is_not_parity_restricted() {
    let a = 1.0 / 3f64.sqrt();
    let s = [
        Complex64::new(a, 0.0),
        Complex64::new(0.0, a),
        Complex64::new(0.0, a),
    ];
    let state = WalkState::single_site(3, 0, &s)
        .unwrap()
        .evolve(&Coin::grover(), 5)
        .unwrap();
    let odd_sites = state
        .sites()
        .filter(|(x, a)| x.rem_euclid(2) == 0 && a.iter().any(|z| z.norm() > 0.0))
        .count();
    assert!(odd_sites > 0);
}
