//! The coefficient field: arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already maintains the invariants we need
//! (always reduced, denominator positive, zero is 0/1), so the scalar type is
//! a re-export plus a few construction and formatting helpers with a stable
//! text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::RatPolyError;

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`; use [`parse_rational`] for
/// untrusted input.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Canonical text form: `p` when the denominator is 1, otherwise `p/q`.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parse `p` or `p/q` with optional sign. Rejects a zero denominator instead
/// of panicking.
pub fn parse_rational(text: &str) -> Result<Rational, RatPolyError> {
    let bad = |msg: &str| RatPolyError::Parse {
        position: 0,
        message: format!("{msg}: {text:?}"),
    };
    match text.split_once('/') {
        None => {
            let n: BigInt = text.trim().parse().map_err(|_| bad("invalid integer"))?;
            Ok(Rational::from(n))
        }
        Some((p, q)) => {
            let n: BigInt = p.trim().parse().map_err(|_| bad("invalid numerator"))?;
            let d: BigInt = q.trim().parse().map_err(|_| bad("invalid denominator"))?;
            if d.is_zero() {
                return Err(RatPolyError::ZeroDenominator);
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// gcd of the numerators over lcm of the denominators: the positive rational
/// `c` such that dividing every input by `c` yields integers with gcd 1.
/// Returns 1 for an empty or all-zero slice.
pub(crate) fn rational_content(values: &[&Rational]) -> Rational {
    use num_integer::Integer;
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for v in values {
        if v.is_zero() {
            continue;
        }
        num_gcd = num_gcd.gcd(v.numer());
        den_lcm = den_lcm.lcm(v.denom());
    }
    if num_gcd.is_zero() {
        return Rational::one();
    }
    Rational::new(num_gcd.abs(), den_lcm)
}
