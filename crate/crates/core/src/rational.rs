//! Exact rational scalars.
//!
//! Every quantity in this crate is a `Rat` (arbitrary-precision rational,
//! always in lowest terms with a positive denominator). There is no
//! floating point anywhere in the computational path; the only conversions
//! to `f64` happen in display helpers that are clearly marked approximate.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::Error;

pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"n"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    Rat::from_str(s.trim()).map_err(|_| Error::InvalidInput(format!("not a rational: {s:?}")))
}

/// Lossy conversion used only for labelled approximations.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders `r` rounded to six significant digits, in plain decimal
/// notation. Display-only; never fed back into any comparison.
pub fn approx6(r: &Rat) -> String {
    if r.is_zero() {
        return "0.00000".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };

    // Scale num/den so the value lands in [10^5, 10^6), then round.
    let ten = BigInt::from(10);
    let lo = BigInt::from(100_000);
    let hi = BigInt::from(1_000_000);
    let mut num = r.numer().abs();
    let mut den = r.denom().clone();
    let mut k: i32 = 0;
    while num < &lo * &den {
        num *= &ten;
        k += 1;
    }
    while num >= &hi * &den {
        den *= &ten;
        k -= 1;
    }
    // Round half away from zero: floor((2*num + den) / (2*den)).
    let mut rounded = (BigInt::from(2) * &num + &den) / (BigInt::from(2) * &den);
    if rounded >= hi {
        rounded /= &ten;
        k -= 1;
    }
    let digits = rounded.to_string();
    debug_assert_eq!(digits.len(), 6);
    let point = 6i32 - k; // digits before the decimal point
    let out = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if point >= 6 {
        format!("{}{}", digits, "0".repeat((point - 6) as usize))
    } else {
        format!("{}.{}", &digits[..point as usize], &digits[point as usize..])
    };
    format!("{sign}{out}")
}

/// Serde adapter: rationals as exact `"p/q"` strings.
pub mod rat_string {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(de::Error::custom)
    }
}
