//! Decimal rendering and parsing of exact non-negative rationals.

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// How a rational is cut down to a fixed number of decimals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Round to nearest, ties away from zero.
    HalfUp,
    Truncate,
}

fn pow10(digits: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), digits as usize)
}

/// Scaled integer `round(r * 10^digits)` for `r >= 0`.
fn scaled(r: &BigRational, digits: u32, mode: Rounding) -> BigInt {
    debug_assert!(!r.is_negative());
    let num = r.numer() * pow10(digits);
    let den = r.denom();
    let (q, rem) = num.div_rem(den);
    match mode {
        Rounding::Truncate => q,
        Rounding::HalfUp => {
            if rem * 2u32 >= *den {
                q + 1u32
            } else {
                q
            }
        }
    }
}

/// Renders `r >= 0` with exactly `digits` decimals.
pub fn to_decimal(r: &BigRational, digits: u32, mode: Rounding) -> String {
    let q = scaled(r, digits, mode);
    let mut s = q.to_string();
    if digits == 0 {
        return s;
    }
    let d = digits as usize;
    if s.len() <= d {
        s = format!("{}{}", "0".repeat(d + 1 - s.len()), s);
    }
    let split = s.len() - d;
    format!("{}.{}", &s[..split], &s[split..])
}

/// `numerator/denominator` in lowest terms.
pub fn to_fraction(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses a non-negative decimal such as `"2.035"` or `"4"` exactly.
pub fn parse_decimal(text: &str) -> Result<BigRational> {
    let bad = || Error::BadDecimal(text.into());
    let (int, frac) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let numer = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(bad)?;
    Ok(BigRational::new(numer, pow10(frac.len() as u32)))
}

/// Whether `approx`, a value printed with `digits` decimals, is how `exact`
/// renders under round-half-up or under truncation.
pub fn matches_rendering(exact: &BigRational, approx: &str, digits: u32) -> bool {
    [Rounding::HalfUp, Rounding::Truncate]
        .iter()
        .any(|&m| to_decimal(exact, digits, m) == approx)
}

/// `|a - b| <= tol`.
pub fn within(a: &BigRational, b: &BigRational, tol: &BigRational) -> bool {
    (a - b).abs() <= *tol
}

pub fn ratio(numer: &BigRational, denom: usize) -> BigRational {
    if denom == 0 {
        return BigRational::zero();
    }
    numer / BigRational::from_integer(BigInt::from(denom))
}

pub fn from_usize(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `10^-digits`.
pub fn unit_in_last_place(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), pow10(digits))
}

/// Nearest `f64`; for display and progress output only.
pub fn to_f64(r: &BigRational) -> f64 {
    // 17 significant decimals is enough to round-trip
    let s = to_decimal(&r.abs(), 17, Rounding::HalfUp);
    let v: f64 = s.parse().unwrap_or(f64::NAN);
    if r.numer().sign() == Sign::Minus {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn half_up_and_truncate() {
        assert_eq!(to_decimal(&q(26, 3), 2, Rounding::HalfUp), "8.67");
        assert_eq!(to_decimal(&q(26, 3), 2, Rounding::Truncate), "8.66");
        assert_eq!(to_decimal(&q(4, 1), 2, Rounding::HalfUp), "4.00");
        assert_eq!(to_decimal(&q(471, 10), 2, Rounding::HalfUp), "47.10");
        assert_eq!(to_decimal(&q(1, 8), 2, Rounding::HalfUp), "0.13");
        assert_eq!(to_decimal(&q(1, 8), 2, Rounding::Truncate), "0.12");
        assert_eq!(to_decimal(&q(1, 200), 2, Rounding::HalfUp), "0.01");
        assert_eq!(to_decimal(&q(0, 1), 4, Rounding::HalfUp), "0.0000");
        assert_eq!(to_decimal(&q(7, 2), 0, Rounding::HalfUp), "4");
        assert_eq!(to_decimal(&q(999, 1000), 2, Rounding::HalfUp), "1.00");
    }

    #[test]
    fn fraction() {
        assert_eq!(to_fraction(&q(26, 3)), "26/3");
        assert_eq!(to_fraction(&q(8, 2)), "4/1");
    }

    #[test]
    fn parse() {
        assert_eq!(parse_decimal("2.035").unwrap(), q(2035, 1000));
        assert_eq!(parse_decimal("4").unwrap(), q(4, 1));
        assert_eq!(parse_decimal(".5").unwrap(), q(1, 2));
        assert_eq!(parse_decimal("0.5").unwrap(), q(1, 2));
        assert!(parse_decimal("").is_err());
        assert!(parse_decimal("-1").is_err());
        assert!(parse_decimal("1e3").is_err());
        assert!(parse_decimal(".").is_err());
    }

    #[test]
    fn rendering_match_accepts_both_modes() {
        let r = q(47099, 1000); // 47.099
        assert!(matches_rendering(&r, "47.10", 2));
        assert!(matches_rendering(&r, "47.09", 2));
        assert!(!matches_rendering(&r, "47.11", 2));
    }

    #[test]
    fn float_view() {
        assert!((to_f64(&q(26, 3)) - 8.666666666666666).abs() < 1e-12);
    }
}
