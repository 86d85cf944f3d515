//! Parser for the polynomial text grammar.
//!
//! ```text
//! polynomial := term (('+'|'-') term)* | '0'
//! term       := [sign] [coeff '*'] factor ('*' factor)*  |  [sign] coeff
//! coeff      := integer | integer '/' positive-integer
//! factor     := var ['^' positive-integer]
//! var        := 'x[' j ',' s ']' | 'a[' i ']'
//! ```
//!
//! Whitespace is allowed between tokens. Printing (`Display` on
//! [`Polynomial`]) emits terms in descending canonical order; parsing accepts
//! any order and re-canonicalizes, so `parse(print(p)) == p` always.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, Polynomial, RatPolyError, Rational, VarId};

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, b: u8) -> Result<(), RatPolyError> {
        match self.bump() {
            Some(got) if got == b => Ok(()),
            _ => Err(self.error(&format!("expected '{}'", b as char))),
        }
    }

    fn error(&self, message: &str) -> RatPolyError {
        RatPolyError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn integer(&mut self) -> Result<BigInt, RatPolyError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self
            .bytes
            .get(self.pos)
            .map(|b| b.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse()
            .map_err(|_| self.error("expected an integer"))
    }

    fn small_uint(&mut self) -> Result<u32, RatPolyError> {
        let n = self.integer()?;
        u32::try_from(&n).map_err(|_| self.error("index out of range"))
    }
}

/// Parse the text grammar into canonical form.
pub(super) fn parse_polynomial(text: &str) -> Result<Polynomial, RatPolyError> {
    let mut lx = Lexer::new(text);
    let mut poly = Polynomial::zero();
    let mut first = true;
    loop {
        let sign = match lx.peek() {
            None if first => return Err(lx.error("empty input")),
            None => break,
            Some(b'+') => {
                lx.bump();
                 1
            }
            Some(b'-') => {
                lx.bump();
                -1
            }
            Some(_) if first => 1,
            Some(_) => return Err(lx.error("expected '+' or '-' between terms")),
        };
        let (coeff, monomial) = parse_term(&mut lx)?;
        let signed = if sign < 0 { -coeff } else { coeff };
        poly = &poly + &Polynomial::term(signed, monomial);
        first = false;
    }
    Ok(poly)
}

fn parse_term(lx: &mut Lexer) -> Result<(Rational, Monomial), RatPolyError> {
    let mut coeff = Rational::from(BigInt::from(1));
    let mut monomial = Monomial::one();

    // Optional leading coefficient; a bare coefficient is a constant term.
    if matches!(lx.peek(), Some(b) if b.is_ascii_digit()) {
        let numer = lx.integer()?;
        let denom = if lx.peek() == Some(b'/') {
            lx.bump();
            let d = lx.integer()?;
            if d.is_zero() {
                return Err(RatPolyError::ZeroDenominator);
            }
            d
        } else {
            BigInt::from(1)
        };
        coeff = Rational::new(numer, denom);
        if lx.peek() == Some(b'*') {
            lx.bump();
        } else {
            return Ok((coeff, monomial));
        }
    }

    loop {
        let var = parse_var(lx)?;
        let exp = if lx.peek() == Some(b'^') {
            lx.bump();
            let e = lx.small_uint()?;
            if e == 0 {
                return Err(lx.error("exponent must be positive"));
            }
            e
        } else {
            1
        };
        monomial = monomial.mul(&Monomial::var_pow(var, exp));
        if lx.peek() == Some(b'*') {
            lx.bump();
        } else {
            break;
        }
    }
    Ok((coeff, monomial))
}

fn parse_var(lx: &mut Lexer) -> Result<VarId, RatPolyError> {
    match lx.bump() {
        Some(b'x') => {
            lx.expect(b'[')?;
            let j = lx.small_uint()?;
            lx.expect(b',')?;
            let s = lx.small_uint()?;
            lx.expect(b']')?;
            if j == 0 || s == 0 {
                return Err(lx.error("jet indices start at 1"));
            }
            Ok(VarId::jet(j, s))
        }
        Some(b'a') => {
            lx.expect(b'[')?;
            let i = lx.small_uint()?;
            lx.expect(b']')?;
            if i == 0 {
                return Err(lx.error("param index starts at 1"));
            }
            Ok(VarId::param(i))
        }
        _ => Err(lx.error("expected a variable ('x[' or 'a[')")),
    }
}

impl Polynomial {
    /// Parse the text grammar; inverse of `Display` on canonical forms.
    pub fn parse(text: &str) -> Result<Polynomial, RatPolyError> {
        parse_polynomial(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    #[test]
    fn parses_zero_constants_and_signs() {
        assert!(Polynomial::parse("0").unwrap().is_zero());
        assert_eq!(
            Polynomial::parse("-3/2").unwrap(),
            Polynomial::constant(rat(-3, 2))
        );
        assert_eq!(
            Polynomial::parse("+x[1,1]").unwrap(),
            Polynomial::var(VarId::jet(1, 1))
        );
    }

    #[test]
    fn parses_terms_with_coefficients_and_powers() {
        let p = Polynomial::parse("2*a[1]*a[2] - x[1,2]^3").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_string(), "-x[1,2]^3 + 2*a[1]*a[2]");
    }

    #[test]
    fn parse_is_inverse_of_print() {
        let inputs = [
            "x[1,1]*x[2,2] - x[2,1]*x[1,2]",
            "1/2*x[1,1]^4 - 2/3*a[3] + 7",
            "a[1]^2*x[1,2] + 2*a[2]*x[1,1]",
            "0",
        ];
        for s in inputs {
            let p = Polynomial::parse(s).unwrap();
            assert_eq!(Polynomial::parse(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn repeated_factors_accumulate() {
        let p = Polynomial::parse("x[1,1]*x[1,1]").unwrap();
        assert_eq!(p, Polynomial::var(VarId::jet(1, 1)).pow(2));
    }

    #[test]
    fn rejects_malformed_input() {
        for s in ["", "x[1]", "a[1,2]", "x[0,1]", "1/0", "x[1,1] x[1,1]", "*"] {
            assert!(Polynomial::parse(s).is_err(), "should reject {s:?}");
        }
    }
}
