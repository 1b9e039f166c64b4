use qwalk::verify::{check_theorem2, check_theorem_a2, convergence_sweep, Quantity};
use qwalk::{Coin, ComparisonReport, Complex64, Scenario};

fn is_decimal17(s: &str) -> bool {
    let mantissa = s.trim_start_matches('-').split('e').next().unwrap();
    mantissa.len() == 18 && mantissa.as_bytes()[1] == b'.'
}

#[test]
fn numbers_are_seventeen_digit_strings() {
    let report = Scenario::hadamard_symmetric(150).check(2, 1e-10).unwrap();
    let value: serde_json::Value = serde_json::from_str(&report.to_json().unwrap()).unwrap();
    for row in value["rows"].as_array().unwrap() {
        for key in ["finite_t_value", "limit_value"] {
            assert!(is_decimal17(row[key]["re"].as_str().unwrap()));
            assert!(is_decimal17(row[key]["im"].as_str().unwrap()));
        }
        assert!(is_decimal17(row["abs_error"].as_str().unwrap()));
    }
    assert!(value.get("scenario").is_some() && value.get("convergence").is_some());
}

#[test]
fn reports_are_deterministic() {
    let a = Scenario::grover_localized(300)
        .check(2, 1e-10)
        .unwrap()
        .to_json()
        .unwrap();
    let b = Scenario::grover_localized(300)
        .check(2, 1e-10)
        .unwrap()
        .to_json()
        .unwrap();
    assert_eq!(a, b);
    assert_eq!(
        ComparisonReport::from_json(&a).unwrap().to_json().unwrap(),
        a
    );
}

#[test]
fn every_quantity_is_reachable() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let two = check_theorem2(
        &Coin::hadamard(),
        Complex64::new(h, 0.0),
        Complex64::new(0.0, h),
        1000,
        2,
    )
    .unwrap();
    let a = 1.0 / 3f64.sqrt();
    let three = check_theorem_a2(
        Complex64::new(a, 0.0),
        Complex64::new(0.0, a),
        Complex64::new(0.0, a),
        1000,
        2,
    )
    .unwrap();
    assert!(two.passes() && three.passes());
    for q in Quantity::ALL {
        assert!(
            two.rows.iter().chain(&three.rows).any(|r| r.quantity == q),
            "{q}"
        );
    }
    // r = 1 rows carry no point mass; point-mass rows carry no r.
    let law = three
        .find(Quantity::ThmA2Real, Some(1), Some([0, 1]))
        .unwrap();
    assert!(law.tolerance == Some(2e-2));
    let p01 = three.find(Quantity::ThmA2Real, None, Some([0, 1])).unwrap();
    let p12 = three.find(Quantity::ThmA2Real, None, Some([1, 2])).unwrap();
    assert!((p01.finite.re - p12.finite.re).abs() < 1e-10);
    assert!(p01.abs_error < 1e-8);
}

#[test]
fn sweeps() {
    let times = [125, 250, 500, 1000];
    let scenario = Scenario::hadamard_symmetric(0);
    let imag =
        convergence_sweep(&scenario, &times, Quantity::Thm2Imag, Some(0), Some([0, 1])).unwrap();
    assert_eq!(imag.final_not_worse, Some(true));
    let g2 = convergence_sweep(&scenario, &times, Quantity::GMoment, Some(2), None).unwrap();
    assert!(g2.convergence.last().unwrap().abs_error <= 1e-2);
    assert!(convergence_sweep(&scenario, &[500, 250], Quantity::GMoment, Some(2), None).is_err());
}

#[test]
fn scenario_round_trips() {
    for s in [
        Scenario::hadamard_symmetric(7),
        Scenario::grover_localized(9),
    ] {
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<Scenario>(&text).unwrap(), s);
    }
}
