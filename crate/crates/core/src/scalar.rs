//! Exact rational scalars.
//!
//! All arithmetic in this crate runs over `Scalar`, an arbitrary-precision
//! rational kept in lowest terms with positive denominator. `num-rational`
//! maintains that canonical form on every operation, so scalar equality is
//! exact mathematical equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn is_zero(s: &Scalar) -> bool {
    s.is_zero()
}

/// Parses "p/q" or "p".
pub fn parse(text: &str) -> Result<Scalar> {
    let bad = || Error::InvalidArgument(format!("not a rational: {text:?}"));
    let text = text.trim();
    match text.split_once('/') {
        None => {
            let n = text.parse::<BigInt>().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n = num.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = den.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Formats as "p/q", or "p" when the denominator is one.
pub fn format(s: &Scalar) -> String {
    s.to_string()
}

pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "5", "-3", "3/4", "-7/2"] {
            let s = parse(text).unwrap();
            assert_eq!(format(&s), text);
        }
    }

    #[test]
    fn parse_reduces_to_lowest_terms() {
        assert_eq!(parse("4/6").unwrap(), frac(2, 3));
        assert_eq!(format(&parse("4/6").unwrap()), "2/3");
        // positive denominator is canonical
        assert_eq!(format(&frac(1, -2)), "-1/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }
}
