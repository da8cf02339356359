//! Exact rationals and a small scalar abstraction shared by the exact and
//! floating-point code paths.

use std::fmt::Debug;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // very large numerator/denominator: scale through the bit lengths
        let n = r.numer().bits() as i64;
        let d = r.denom().bits() as i64;
        let shift = (n - d).clamp(-1000, 1000);
        let scaled = if shift >= 0 {
            r / Rational::from_integer(BigInt::one() << shift as usize)
        } else {
            r * Rational::from_integer(BigInt::one() << (-shift) as usize)
        };
        let f = scaled.to_f64().unwrap_or(f64::NAN);
        f * 2f64.powi(shift as i32)
    })
}

/// Parses `"p/q"`, an integer, or a decimal such as `"-0.125"` or `"2.5e-3"`.
/// Decimals are converted exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::Parse(format!("not a rational: {s:?}"));
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| err())?),
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    let digits = format!("{whole}{frac}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let mut value = Rational::from_integer(BigInt::from_str(&digits).map_err(|_| err())?);
    let scale = exponent - frac.len() as i32;
    let ten = int(10);
    value *= ten.pow(scale);
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Canonical `"p/q"` (or `"p"` for integers) rendering used in reports.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Field operations needed by code that runs both exactly and in floating
/// point (monomials, eigenvalue formulas, polynomial evaluation).
pub trait Scalar: Clone + Debug + Num + Neg<Output = Self> {
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&int(n))
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    fn powi(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * b.clone();
            }
            b = b.clone() * b;
            k >>= 1;
        }
        acc
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn powi(&self, e: i32) -> Self {
        self.pow(e)
    }
}

impl Scalar for Complex64 {
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(to_f64(r), 0.0)
    }
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        to_f64(r)
    }
}

/// `|r| < 1` for rationals.
pub(crate) fn abs_lt_one(r: &Rational) -> bool {
    r.abs() < Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("0.125").unwrap(), rat(1, 8));
        assert_eq!(parse_rational("-.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("2.5e-3").unwrap(), rat(1, 400));
        assert_eq!(parse_rational("1.5E2").unwrap(), int(150));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn formatting_is_canonical() {
        assert_eq!(format_rational(&rat(2, -4)), "-1/2");
        assert_eq!(format_rational(&int(3)), "3");
    }

    #[test]
    fn huge_rationals_convert_to_floats() {
        let big = Rational::from_integer(BigInt::one() << 2000usize) / Rational::from_integer(BigInt::one() << 1999usize);
        assert_eq!(to_f64(&big), 2.0);
    }

    #[test]
    fn powi_matches_repeated_product() {
        let x = rat(-2, 3);
        assert_eq!(<Rational as Scalar>::powi(&x, -3), rat(-27, 8));
        let z = Complex64::new(0.3, 0.4);
        let p = Scalar::powi(&z, 5);
        let direct = z * z * z * z * z;
        assert!((p - direct).norm() < 1e-15);
    }
}
