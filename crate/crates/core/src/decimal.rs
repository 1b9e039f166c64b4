//! Round-trippable decimal-string encoding of doubles for JSON artifacts.
//!
//! Every number is written with 17 significant digits, enough to recover the
//! exact `f64`.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn format(value: f64) -> String {
    if value.is_finite() {
        format!("{value:.16e}")
    } else {
        value.to_string()
    }
}

pub fn parse(text: &str) -> Result<f64, std::num::ParseFloatError> {
    text.trim().parse()
}

pub fn serialize<S: Serializer>(value: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&format(*value))
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<f64, D::Error> {
    let text = String::deserialize(deserializer)?;
    parse(&text).map_err(D::Error::custom)
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<f64>, serializer: S) -> Result<S::Ok, S::Error> {
        value.map(format).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<f64>, D::Error> {
        Option::<String>::deserialize(deserializer)?
            .map(|text| parse(&text).map_err(D::Error::custom))
            .transpose()
    }
}

/// Serde adapter for `Complex64` as `{"re": "...", "im": "..."}`.
pub mod complex {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Repr {
        #[serde(with = "super")]
        re: f64,
        #[serde(with = "super")]
        im: f64,
    }

    pub fn serialize<S: Serializer>(value: &Complex64, serializer: S) -> Result<S::Ok, S::Error> {
        Repr {
            re: value.re,
            im: value.im,
        }
        .serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Complex64, D::Error> {
        let r = Repr::deserialize(deserializer)?;
        Ok(Complex64::new(r.re, r.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(format(0.1), "1.0000000000000001e-1");
        assert_eq!(format(-2.0), "-2.0000000000000000e0");
    }

    proptest! {
        #[test]
        fn round_trips_exactly(bits in any::<u64>()) {
            let value = f64::from_bits(bits);
            prop_assume!(value.is_finite());
            prop_assert_eq!(parse(&format(value)).unwrap().to_bits(), value.to_bits());
        }
    }
}
