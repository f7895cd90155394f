//! Exact rational scalars.
//!
//! Every quantity in this crate (series coefficients, cusp orders, weights,
//! valence budgets) is an arbitrary-precision rational. There is no floating
//! point anywhere; equality tests are exact. [`Rational`] is always stored in
//! lowest terms with a positive denominator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision rational number, reduced, denominator > 0.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// True if the value is an integer (denominator 1 after reduction).
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Render as `p` or `p/q` with no whitespace. The inverse of [`parse_rational`].
pub fn format_rational(x: &Rational) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `p` or `p/q` (optional leading `-`). Zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse {
        token: s.to_string(),
        expected: "rational `p` or `p/q`",
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Floor of a rational as a rational (used for fractional parts).
pub fn fractional_part(x: &Rational) -> Rational {
    let f = x - x.floor();
    debug_assert!(!f.is_negative() && f < Rational::one());
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-5", "8/3", "-7/12", "120"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_rational(&x), s);
        }
        // non-canonical inputs normalize
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational("-6/3").unwrap()), "-2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "x", "1/", "/2", "1/0", "1.5", "2/3/4"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn fractional_part_of_negatives() {
        assert_eq!(fractional_part(&ratio(-1, 2)), ratio(1, 2));
        assert_eq!(fractional_part(&rat(-3)), rat(0));
        assert_eq!(fractional_part(&ratio(7, 3)), ratio(1, 3));
    }
}
