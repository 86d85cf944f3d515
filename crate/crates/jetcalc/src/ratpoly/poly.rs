//! Sparse polynomials over the rationals in canonical form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::rational::{format_rational, rational_content};
use super::{Monomial, RatPolyError, Rational, VarId};

/// A polynomial as a map from monomials to nonzero rational coefficients.
/// The map is keyed by the canonical monomial order, so equality is
/// structural equality of canonical forms and iteration order is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn var(v: VarId) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Rational, Monomial)>) -> Self {
        let mut p = Polynomial::zero();
        for (c, m) in pairs {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical monomial order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The largest term in the canonical order, unless zero.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Every variable occurring with positive exponent.
    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| *v))
            .collect()
    }

    /// Weighted degree of the largest-weight monomial; `None` for zero.
    pub fn weighted_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.weight()).max()
    }

    /// All monomials share one weighted degree. Zero counts as homogeneous.
    pub fn is_weighted_homogeneous(&self) -> bool {
        let mut weights = self.terms.keys().map(|m| m.weight());
        match weights.next() {
            None => true,
            Some(w) => weights.all(|u| u == w),
        }
    }

    fn add_term(&mut self, m: &Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring-homomorphic substitution. `rules` must cover every variable of
    /// `self`; the unmapped variable is reported otherwise.
    pub fn substitute(
        &self,
        rules: &BTreeMap<VarId, Polynomial>,
    ) -> Result<Polynomial, RatPolyError> {
        for v in self.variables() {
            if !rules.contains_key(&v) {
                return Err(RatPolyError::MissingVariable(v));
            }
        }
        // Cache powers of the images; exponents repeat constantly across terms.
        let mut powers: BTreeMap<(VarId, u32), Polynomial> = BTreeMap::new();
        let mut result = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(c.clone());
            for (v, &e) in m.iter() {
                let img = powers
                    .entry((*v, e))
                    .or_insert_with(|| rules[v].pow(e))
                    .clone();
                prod = &prod * &img;
                if prod.is_zero() {
                    break;
                }
            }
            result = &result + &prod;
        }
        Ok(result)
    }

    /// The unique derivation extending `rules`: linear, Leibniz on products,
    /// zero on constants. `rules` must cover every variable of `self`.
    pub fn derive(&self, rules: &BTreeMap<VarId, Polynomial>) -> Result<Polynomial, RatPolyError> {
        for v in self.variables() {
            if !rules.contains_key(&v) {
                return Err(RatPolyError::MissingVariable(v));
            }
        }
        let mut result = Polynomial::zero();
        for (m, c) in &self.terms {
            for (v, &e) in m.iter() {
                let image = &rules[v];
                if image.is_zero() {
                    continue;
                }
                // d(v^e * rest) contributes e * v^(e-1) * rest * image.
                let reduced = m.without_one(v).expect("exponent is positive");
                let coeff = c * Rational::from(num_bigint::BigInt::from(e));
                result = &result + &image.mul_monomial(&reduced).scale(&coeff);
            }
        }
        Ok(result)
    }

    /// JSON value in the published schema:
    /// `{"terms":[{"coeff":"p/q","exps":[["x",j,s,e] | ["a",i,e], ...]}, ...]}`
    /// with terms in descending canonical order (same order as text output).
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let exps: Vec<Value> = m
                    .iter()
                    .map(|(v, &e)| match *v {
                        VarId::Jet { component, order } => json!(["x", component, order, e]),
                        VarId::Param { index } => json!(["a", index, e]),
                    })
                    .collect();
                json!({ "coeff": format_rational(c), "exps": exps })
            })
            .collect();
        json!({ "terms": terms })
    }

    /// Inverse of [`Polynomial::to_json`].
    pub fn from_json(value: &Value) -> Result<Polynomial, RatPolyError> {
        let bad = |msg: &str| RatPolyError::Parse {
            position: 0,
            message: msg.to_string(),
        };
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("expected object with \"terms\" array"))?;
        let mut poly = Polynomial::zero();
        for t in terms {
            let coeff = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term missing \"coeff\" string"))?;
            let c = super::parse_rational(coeff)?;
            let exps = t
                .get("exps")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("term missing \"exps\" array"))?;
            let mut m = Monomial::one();
            for entry in exps {
                let parts = entry.as_array().ok_or_else(|| bad("bad exps entry"))?;
                let kind = parts
                    .first()
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("bad exps entry"))?;
                let nums: Option<Vec<u64>> = parts[1..].iter().map(Value::as_u64).collect();
                let nums = nums.ok_or_else(|| bad("bad exps entry"))?;
                let (v, e) = match (kind, nums.as_slice()) {
                    ("x", [j, s, e]) => (VarId::jet(*j as u32, *s as u32), *e as u32),
                    ("a", [i, e]) => (VarId::param(*i as u32), *e as u32),
                    _ => return Err(bad("bad exps entry")),
                };
                m = m.mul(&Monomial::var_pow(v, e));
            }
            poly.add_term(&m, &c);
        }
        Ok(poly)
    }

    /// Content-normalized copy: integer coefficients with gcd 1, leading
    /// coefficient positive. Zero stays zero.
    pub fn normalized_integer_form(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let coeffs: Vec<&Rational> = self.terms.values().collect();
        let content = rational_content(&coeffs);
        let mut scaled = self.scale(&content.recip());
        if scaled
            .leading_term()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            scaled = -&scaled;
        }
        scaled
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m, &(-c));
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(&ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

/// Text form of the grammar shared with the parser: terms in descending
/// canonical order, ` + `/` - ` between terms, coefficient `1` suppressed.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}
