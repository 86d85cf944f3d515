//! The k-jet model: jet variables, truncated reparametrizations of the line,
//! their matrix action on jets, the induced pullback on jet polynomials, and
//! the total derivative along the curve.
//!
//! Conventions. A k-jet of a curve `f = (f_1, ..., f_r)` is coordinatized by
//! the underived values `x[j,s] = f_j^(s)(0)`; the variable `x[j,s]` has
//! weight `s`. A reparametrization is a truncated series
//! `phi(t) = a_1 t + ... + a_k t^k`, acting on jets by precomposition
//! `f -> f o phi`. The pullback of a jet polynomial is computed by truncated
//! power-series composition; the Faà di Bruno matrix (which acts on the
//! divided coordinates `x[j,s]/s!`) is built independently from the
//! composition-sum formula, and the two routes are checked against each
//! other in the tests.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::ratpoly::{Monomial, Polynomial, RatPolyError, Rational, VarId};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum JetError {
    /// A jet variable of order above the reparametrization's truncation.
    #[error("jet order {order} exceeds truncation order {truncation}")]
    OrderOverflow { order: u32, truncation: u32 },
    /// Two reparametrizations of different truncation order.
    #[error("truncation orders differ: {0} vs {1}")]
    TruncationMismatch(u32, u32),
    /// Inversion of a series with vanishing linear coefficient.
    #[error("not invertible: the linear coefficient is zero")]
    NonInvertible,
    /// An operation that needs concrete (rational) coefficients got formal ones.
    #[error("operation requires concrete coefficients")]
    FormalCoefficients,
    /// A jet variable outside the configured universe.
    #[error("variable {0} is outside the configured jet universe")]
    VariableOutOfRange(VarId),
    /// Formal pullback of a body that already mentions param variables would
    /// conflate them with the group's own parameters.
    #[error("formal pullback of a polynomial containing param variables")]
    ParamClash,
    #[error(transparent)]
    Poly(#[from] RatPolyError),
}

/// The variable universe: jet order `k >= 1` and rank `r >= 1`, giving the
/// `k*r` fiber coordinates `x[j,s]` with `1 <= j <= r`, `1 <= s <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JetConfig {
    pub k: u32,
    pub r: u32,
}

impl JetConfig {
    pub fn new(k: u32, r: u32) -> JetConfig {
        assert!(k >= 1 && r >= 1, "jet order and rank must be positive");
        JetConfig { k, r }
    }

    /// All jet variables in increasing `VarId` order.
    pub fn jet_vars(&self) -> impl Iterator<Item = VarId> + '_ {
        (1..=self.r).flat_map(move |j| (1..=self.k).map(move |s| VarId::jet(j, s)))
    }

    pub fn contains(&self, v: &VarId) -> bool {
        match *v {
            VarId::Jet { component, order } => {
                component >= 1 && component <= self.r && order >= 1 && order <= self.k
            }
            VarId::Param { .. } => true,
        }
    }
}

/// A polynomial on the jet fiber (possibly mentioning formal group
/// parameters), tagged with its variable universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetPolynomial {
    body: Polynomial,
    config: JetConfig,
}

impl JetPolynomial {
    pub fn new(body: Polynomial, config: JetConfig) -> Result<JetPolynomial, JetError> {
        for v in body.variables() {
            if !config.contains(&v) {
                return Err(JetError::VariableOutOfRange(v));
            }
        }
        Ok(JetPolynomial { body, config })
    }

    /// The coordinate `x[j,s]` as a jet polynomial.
    pub fn coordinate(config: JetConfig, j: u32, s: u32) -> Result<JetPolynomial, JetError> {
        JetPolynomial::new(Polynomial::var(VarId::jet(j, s)), config)
    }

    pub fn body(&self) -> &Polynomial {
        &self.body
    }

    pub fn config(&self) -> JetConfig {
        self.config
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Weighted degree when homogeneous (zero counts as homogeneous of
    /// weight 0); `None` otherwise.
    pub fn weight(&self) -> Option<u64> {
        if !self.body.is_weighted_homogeneous() {
            return None;
        }
        Some(self.body.weighted_degree().unwrap_or(0))
    }

    /// Largest jet order actually occurring in the body.
    pub fn max_jet_order(&self) -> u32 {
        self.body
            .variables()
            .iter()
            .filter_map(|v| match v {
                VarId::Jet { order, .. } => Some(*order),
                VarId::Param { .. } => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Total derivative along the curve: the derivation with
    /// `D(x[j,s]) = x[j,s+1]`, zero on params. The result lives in the
    /// universe extended by one order, since the top-order coordinate maps
    /// out of the current one.
    pub fn total_derivative(&self) -> JetPolynomial {
        let extended = JetConfig::new(self.config.k + 1, self.config.r);
        let mut rules: BTreeMap<VarId, Polynomial> = BTreeMap::new();
        for v in self.body.variables() {
            let image = match v {
                VarId::Jet { component, order } => {
                    Polynomial::var(VarId::jet(component, order + 1))
                }
                VarId::Param { .. } => Polynomial::zero(),
            };
            rules.insert(v, image);
        }
        let body = self.body.derive(&rules).expect("rules cover all variables");
        JetPolynomial {
            body,
            config: extended,
        }
    }

    /// Pullback along `phi`: substitutes for each `x[j,s]` the s-th
    /// derivative at 0 of `f_j o phi`, so that semantically
    /// `pullback(P, phi)(jet f) = P(jet (f o phi))`.
    pub fn pullback(&self, phi: &Reparametrization) -> Result<JetPolynomial, JetError> {
        let max_order = self.max_jet_order();
        if max_order > phi.order() {
            return Err(JetError::OrderOverflow {
                order: max_order,
                truncation: phi.order(),
            });
        }
        let formal = !phi.is_concrete();
        let powers = phi.powers_truncated(max_order);
        let mut rules: BTreeMap<VarId, Polynomial> = BTreeMap::new();
        for v in self.body.variables() {
            match v {
                VarId::Jet { component, order } => {
                    rules.insert(v, jet_image(component, order, &powers));
                }
                VarId::Param { .. } => {
                    if formal {
                        return Err(JetError::ParamClash);
                    }
                    rules.insert(v, Polynomial::var(v));
                }
            }
        }
        let body = self.body.substitute(&rules)?;
        Ok(JetPolynomial {
            body,
            config: self.config,
        })
    }
}

/// `sum_{u=1..s} (s!/u!) * [t^s](phi^u) * x[c,u]`: the s-th derivative at 0
/// of `f_c o phi` written in jet and param variables.
fn jet_image(component: u32, order: u32, powers: &[Vec<Polynomial>]) -> Polynomial {
    let mut image = Polynomial::zero();
    for u in 1..=order {
        let coeff = &powers[(u - 1) as usize][(order - 1) as usize];
        if coeff.is_zero() {
            continue;
        }
        let ratio = Rational::new(factorial(order), factorial(u));
        let var = Polynomial::var(VarId::jet(component, u));
        image = &image + &(&coeff.scale(&ratio) * &var);
    }
    image
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl fmt::Display for JetPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.body)
    }
}

/// A truncated reparametrization `phi(t) = c_1 t + ... + c_k t^k` of the
/// line. Coefficients are polynomials in param variables so one type covers
/// the concrete elements (all constants), the generic formal element
/// (`c_i = a[i]`), and mixed specializations such as the generic unipotent
/// element (`c_1 = 1`, `c_i = a[i]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reparametrization {
    coeffs: Vec<Polynomial>,
}

impl Reparametrization {
    /// Build from explicit coefficient polynomials, `coeffs[i]` being the
    /// coefficient of `t^(i+1)`. Jet variables are not allowed, and the
    /// linear coefficient must not be the constant zero.
    pub fn new(coeffs: Vec<Polynomial>) -> Result<Reparametrization, JetError> {
        assert!(!coeffs.is_empty(), "truncation order must be at least 1");
        for c in &coeffs {
            if let Some(v) = c
                .variables()
                .into_iter()
                .find(|v| matches!(v, VarId::Jet { .. }))
            {
                return Err(JetError::VariableOutOfRange(v));
            }
        }
        if coeffs[0].is_zero() {
            return Err(JetError::NonInvertible);
        }
        Ok(Reparametrization { coeffs })
    }

    /// The identity `t`.
    pub fn identity(k: u32) -> Reparametrization {
        let mut coeffs = vec![Polynomial::zero(); k as usize];
        coeffs[0] = Polynomial::one();
        Reparametrization { coeffs }
    }

    /// Concrete element from rational coefficients.
    pub fn concrete(coeffs: Vec<Rational>) -> Result<Reparametrization, JetError> {
        Reparametrization::new(coeffs.into_iter().map(Polynomial::constant).collect())
    }

    /// The generic element: `a_1 t + ... + a_k t^k` with formal `a_i`.
    pub fn formal(k: u32) -> Reparametrization {
        Reparametrization {
            coeffs: (1..=k).map(|i| Polynomial::var(VarId::param(i))).collect(),
        }
    }

    /// The generic unipotent element: `t + a_2 t^2 + ... + a_k t^k`.
    pub fn formal_unipotent(k: u32) -> Reparametrization {
        let mut coeffs: Vec<Polynomial> =
            (1..=k).map(|i| Polynomial::var(VarId::param(i))).collect();
        coeffs[0] = Polynomial::one();
        Reparametrization { coeffs }
    }

    /// The one-parameter curve `t + a_j t^j` whose derivative at the
    /// identity gives the j-th infinitesimal generator.
    pub fn one_parameter(k: u32, j: u32) -> Reparametrization {
        assert!((2..=k).contains(&j));
        let mut coeffs = vec![Polynomial::zero(); k as usize];
        coeffs[0] = Polynomial::one();
        coeffs[(j - 1) as usize] = Polynomial::var(VarId::param(j));
        Reparametrization { coeffs }
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32
    }

    /// Coefficient of `t^d`, 1-indexed.
    pub fn coefficient(&self, d: u32) -> &Polynomial {
        &self.coeffs[(d - 1) as usize]
    }

    pub fn is_concrete(&self) -> bool {
        self.coeffs.iter().all(|c| c.variables().is_empty())
    }

    pub fn is_unipotent(&self) -> bool {
        self.coeffs[0] == Polynomial::one()
    }

    /// Composition `self o other`, i.e. `self(other(t))`, truncated past the
    /// common order.
    pub fn compose(&self, other: &Reparametrization) -> Result<Reparametrization, JetError> {
        if self.order() != other.order() {
            return Err(JetError::TruncationMismatch(self.order(), other.order()));
        }
        let k = self.order();
        let powers = other.powers_truncated(k);
        let mut coeffs = vec![Polynomial::zero(); k as usize];
        for (m, slot) in coeffs.iter_mut().enumerate() {
            let mut sum = Polynomial::zero();
            for j in 1..=(m + 1) {
                let inner = &powers[j - 1][m];
                if !inner.is_zero() {
                    sum = &sum + &(&self.coeffs[j - 1] * inner);
                }
            }
            *slot = sum;
        }
        Ok(Reparametrization { coeffs })
    }

    /// Truncated compositional inverse of a concrete element: the unique
    /// `psi` with `self o psi = identity` up to the truncation order.
    pub fn invert(&self) -> Result<Reparametrization, JetError> {
        if !self.is_concrete() {
            return Err(JetError::FormalCoefficients);
        }
        let k = self.order();
        let a: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| c.coefficient(&Monomial::one()))
            .collect();
        if a[0].is_zero() {
            return Err(JetError::NonInvertible);
        }
        let mut b = vec![Rational::zero(); k as usize];
        b[0] = a[0].clone().recip();
        for m in 2..=k {
            // With b_m still zero, the coefficient of t^m in self(psi) is the
            // defect e_m; adding b_m t^m contributes a_1 b_m there and nothing
            // below, so b_m = -e_m / a_1.
            let partial = Reparametrization {
                coeffs: b.iter().map(|x| Polynomial::constant(x.clone())).collect(),
            };
            let composed = self.compose(&partial)?;
            let defect = composed.coeffs[(m - 1) as usize].coefficient(&Monomial::one());
            b[(m - 1) as usize] = -defect / &a[0];
        }
        Ok(Reparametrization {
            coeffs: b.into_iter().map(Polynomial::constant).collect(),
        })
    }

    /// `powers[u-1][d-1]` = coefficient of `t^d` in `self^u`, for
    /// `1 <= u, d <= upto`.
    fn powers_truncated(&self, upto: u32) -> Vec<Vec<Polynomial>> {
        let n = upto as usize;
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
        if n == 0 {
            return powers;
        }
        let first: Vec<Polynomial> = (0..n)
            .map(|d| {
                self.coeffs
                    .get(d)
                    .cloned()
                    .unwrap_or_else(Polynomial::zero)
            })
            .collect();
        powers.push(first);
        for u in 2..=n {
            let prev = &powers[u - 2];
            let mut next = vec![Polynomial::zero(); n];
            // Both factors start at degree 1, so degree d needs u <= d.
            for (d, slot) in next.iter_mut().enumerate().skip(u - 1) {
                let mut sum = Polynomial::zero();
                for split in 0..d {
                    let lhs = &prev[split];
                    let rhs = self.coeffs.get(d - 1 - split);
                    if let Some(rhs) = rhs {
                        if !lhs.is_zero() && !rhs.is_zero() {
                            sum = &sum + &(lhs * rhs);
                        }
                    }
                }
                *slot = sum;
            }
            powers.push(next);
        }
        powers
    }
}

impl fmt::Display for Reparametrization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c == &Polynomial::one() {
                write!(f, "t^{}", i + 1)?;
            } else if c.num_terms() == 1 && !c.to_string().contains(' ') {
                write!(f, "{}*t^{}", c, i + 1)?;
            } else {
                write!(f, "({})*t^{}", c, i + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The k x k matrix of the reparametrization action on divided jets
/// `(x[j,1], x[j,2]/2!, ..., x[j,k]/k!)`, as polynomials in the formal
/// parameters. Entry `(s, d)` is the sum over ordered compositions of `d`
/// into `s` positive parts `i_1 + ... + i_s = d` of `a_{i_1} ... a_{i_s}`;
/// it is upper triangular with diagonal `a_1^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaaDiBrunoMatrix {
    order: u32,
    entries: Vec<Vec<Polynomial>>,
}

impl FaaDiBrunoMatrix {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Entry in row `s`, column `d`, both 1-indexed.
    pub fn entry(&self, s: u32, d: u32) -> &Polynomial {
        &self.entries[(s - 1) as usize][(d - 1) as usize]
    }

    /// Specialize the formal parameters to a reparametrization's
    /// coefficients.
    pub fn specialize(&self, phi: &Reparametrization) -> Result<FaaDiBrunoMatrix, JetError> {
        if phi.order() != self.order {
            return Err(JetError::TruncationMismatch(self.order, phi.order()));
        }
        let rules: BTreeMap<VarId, Polynomial> = (1..=self.order)
            .map(|i| (VarId::param(i), phi.coefficient(i).clone()))
            .collect();
        let entries = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.substitute(&rules).map_err(JetError::from))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FaaDiBrunoMatrix {
            order: self.order,
            entries,
        })
    }

    /// Matrix product (for checking the group law).
    pub fn matrix_mul(&self, rhs: &FaaDiBrunoMatrix) -> Result<FaaDiBrunoMatrix, JetError> {
        if self.order != rhs.order {
            return Err(JetError::TruncationMismatch(self.order, rhs.order));
        }
        let n = self.order as usize;
        let mut entries = vec![vec![Polynomial::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut sum = Polynomial::zero();
                for l in 0..n {
                    let a = &self.entries[i][l];
                    let b = &rhs.entries[l][j];
                    if !a.is_zero() && !b.is_zero() {
                        sum = &sum + &(a * b);
                    }
                }
                *slot = sum;
            }
        }
        Ok(FaaDiBrunoMatrix {
            order: self.order,
            entries,
        })
    }

    /// JSON as an array of rows of polynomial strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|row| json!(row.iter().map(|e| e.to_string()).collect::<Vec<_>>()))
            .collect();
        json!(rows)
    }
}

/// Build the order-k matrix from the composition-sum formula. This path is
/// deliberately independent of the series-composition code in `pullback`.
pub fn faa_di_bruno(k: u32) -> FaaDiBrunoMatrix {
    assert!(k >= 1);
    let n = k as usize;
    let mut entries = vec![vec![Polynomial::zero(); n]; n];
    for s in 1..=k {
        for d in s..=k {
            let mut sum = Polynomial::zero();
            let mut parts = Vec::with_capacity(s as usize);
            compositions(d, s, &mut parts, &mut |comp| {
                let monomial =
                    Monomial::from_exponents(comp.iter().map(|&i| (VarId::param(i), 1u32)));
                sum = &sum + &Polynomial::term(Rational::one(), monomial);
            });
            entries[(s - 1) as usize][(d - 1) as usize] = sum;
        }
    }
    FaaDiBrunoMatrix { order: k, entries }
}

/// Enumerate ordered compositions of `total` into exactly `parts` positive
/// parts.
fn compositions(total: u32, parts: u32, prefix: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if parts == 1 {
        prefix.push(total);
        emit(prefix);
        prefix.pop();
        return;
    }
    // Leave at least 1 for each remaining part.
    for first in 1..=(total - parts + 1) {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, emit);
        prefix.pop();
    }
}
