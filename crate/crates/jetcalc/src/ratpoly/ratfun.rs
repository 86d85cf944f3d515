//! Quotients of polynomials, kept in a content-normalized form.
//!
//! No polynomial gcd is computed (factorization is out of scope); the
//! normalization only rescales coefficients: both parts get integer
//! coefficients with joint content 1, and the denominator's leading
//! coefficient is made positive.

use std::fmt;

use num_traits::Signed;

use super::rational::rational_content;
use super::{Polynomial, RatPolyError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(
        numerator: Polynomial,
        denominator: Polynomial,
    ) -> Result<RationalFunction, RatPolyError> {
        if denominator.is_zero() {
            return Err(RatPolyError::ZeroDenominator);
        }
        if numerator.is_zero() {
            return Ok(RationalFunction {
                numerator,
                denominator: Polynomial::one(),
            });
        }
        let coeffs: Vec<_> = numerator
            .iter()
            .map(|(_, c)| c)
            .chain(denominator.iter().map(|(_, c)| c))
            .collect();
        let content = rational_content(&coeffs);
        let mut scale = content.recip();
        let den_leading = denominator.leading_term().expect("nonzero").1;
        if (den_leading * &scale).is_negative() {
            scale = -scale;
        }
        Ok(RationalFunction {
            numerator: numerator.scale(&scale),
            denominator: denominator.scale(&scale),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> RationalFunction {
        RationalFunction::new(p, Polynomial::one()).expect("denominator 1")
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == Polynomial::one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{rat, VarId};

    #[test]
    fn normalization_clears_content_and_fixes_sign() {
        let x = Polynomial::var(VarId::jet(1, 1));
        let num = x.scale(&rat(2, 3));
        let den = x.pow(2).scale(&rat(-4, 3));
        let f = RationalFunction::new(num, den).unwrap();
        assert_eq!(f.numerator().to_string(), "-x[1,1]");
        assert_eq!(f.denominator().to_string(), "2*x[1,1]^2");
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let x = Polynomial::var(VarId::jet(1, 1));
        assert_eq!(
            RationalFunction::new(x, Polynomial::zero()),
            Err(RatPolyError::ZeroDenominator)
        );
    }

    #[test]
    fn zero_numerator_collapses_to_canonical_zero() {
        let x = Polynomial::var(VarId::jet(1, 1));
        let f = RationalFunction::new(Polynomial::zero(), x).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.denominator(), &Polynomial::one());
    }
}
