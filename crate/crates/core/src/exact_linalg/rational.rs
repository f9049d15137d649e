//! Arbitrary-precision rational scalars.
//!
//! `Rational` is `num`'s `BigRational`: always reduced, denominator positive,
//! zero canonicalized to 0/1. Everything in this crate computes with these;
//! no floating point anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// n/d with d != 0.
pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `[-]digits[/digits]`. Rejects empty parts, zero denominators, signs
/// inside the denominator, and anything else (in particular decimal points).
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_int(num_str, true)
        .ok_or_else(|| format!("invalid rational {s:?}: bad numerator"))?;
    let denom = match den_str {
        Some(d) => {
            let d = parse_int(d, false)
                .ok_or_else(|| format!("invalid rational {s:?}: bad denominator"))?;
            if d.is_zero() {
                return Err(format!("invalid rational {s:?}: zero denominator"));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(BigRational::new(numer, denom))
}

fn parse_int(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let magnitude: BigInt = digits.parse().ok()?;
    Some(if s.starts_with('-') { -magnitude } else { magnitude })
}

/// `p` for integers, `p/q` otherwise. Inverse of `parse_rational`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign as -1, 0, or 1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3));
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), ratio(-3, 4));
        // reduction happens on construction
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for bad in ["", "1/0", "1.5", "1/-2", "--3", "a", "1/", "/2", "+3", "1 / 2"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn format_round_trips() {
        for r in [rat(0), rat(7), rat(-7), ratio(1, 2), ratio(-22, 7)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert_eq!(format_rational(&rat(0)), "0");
        assert_eq!(format_rational(&ratio(-1, 2)), "-1/2");
    }

    #[test]
    fn canonical_form_invariants() {
        let r = ratio(4, -6);
        assert!(r.denom() > &BigInt::from(0));
        assert_eq!(r, ratio(-2, 3));
        assert!(num::integer::gcd(r.numer().clone(), r.denom().clone()).is_one());
    }
}
