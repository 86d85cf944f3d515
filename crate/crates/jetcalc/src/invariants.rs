//! Generation and certification of relative invariants.
//!
//! A jet polynomial `P` of weight `w` is a relative invariant when its
//! pullback along the generic formal reparametrization equals `a_1^w * P`
//! as an exact polynomial identity; it is unipotent-invariant when the same
//! holds with `a_1 = 1`. Certification here is always the polynomial
//! identity with formal parameters — never a sampled check — so a verdict is
//! a proof. Invariants are produced by Wronskians, the weight-raising
//! bracket, the Q-sequence it generates, and the numerators of the
//! coordinate-change derivatives.

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::jetcore::{JetConfig, JetError, JetPolynomial, Reparametrization};
use crate::ratpoly::{rat_int, Polynomial, RatPolyError, RationalFunction, VarId};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("input must be weighted-homogeneous")]
    NonHomogeneous,
    #[error("normalized bracket requires nonzero weights")]
    ZeroWeight,
    #[error("rank must be at least 2")]
    RankTooSmall,
    #[error("level must be at least 2")]
    LevelTooSmall,
    #[error("component index {0} out of range")]
    ComponentOutOfRange(u32),
    #[error("derivative order {0} out of range")]
    OrderOutOfRange(u32),
    #[error("empty argument list")]
    EmptyArguments,
    #[error("solutions are linearly dependent: their wronskian vanishes")]
    DependentSolutions,
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Poly(#[from] RatPolyError),
}

/// Which group a certification question is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    /// The full reparametrization group (nonzero linear coefficient).
    Full,
    /// The unipotent subgroup (linear coefficient 1).
    Unipotent,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Full => write!(f, "Gk"),
            Group::Unipotent => write!(f, "Uk"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvarianceStatus {
    /// `pullback(P, phi) = a_1^weight * P` identically.
    RelativeInvariant { weight: u64 },
    /// Invariant under the unipotent subgroup but carrying no single weight
    /// (non-homogeneous input).
    UnipotentInvariantOnly,
    /// Not invariant; `witness` is a nonzero term of the defect, chosen
    /// deterministically (the canonical leading term).
    NotInvariant { witness: Polynomial },
}

/// Certificate produced by [`check_invariance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub status: InvarianceStatus,
    pub group: Group,
    /// Set when a full-group question on a non-homogeneous input was
    /// answered only for the unipotent subgroup (no relative weight exists).
    pub restricted_to_unipotent: bool,
}

impl InvarianceReport {
    pub fn is_invariant(&self) -> bool {
        !matches!(self.status, InvarianceStatus::NotInvariant { .. })
    }

    pub fn to_json(&self) -> Value {
        match &self.status {
            InvarianceStatus::RelativeInvariant { weight } => {
                json!({ "status": "relative_invariant", "weight": weight })
            }
            InvarianceStatus::UnipotentInvariantOnly => {
                json!({ "status": "unipotent_invariant_only" })
            }
            InvarianceStatus::NotInvariant { witness } => {
                json!({ "status": "not_invariant", "witness": witness.to_string() })
            }
        }
    }
}

/// Certify (or refute) invariance by the exact formal-pullback identity.
///
/// For the full group the input must be weighted-homogeneous for a relative
/// weight to exist; a non-homogeneous input is answered for the unipotent
/// subgroup only, flagged in the report.
pub fn check_invariance(
    p: &JetPolynomial,
    group: Group,
) -> Result<InvarianceReport, InvariantError> {
    let k = p.config().k;
    match group {
        Group::Full => match p.weight() {
            Some(weight) => {
                let pulled = p.pullback(&Reparametrization::formal(k))?;
                let scale = Polynomial::var(VarId::param(1)).pow(weight as u32);
                let defect = &(pulled.body() - &(p.body() * &scale));
                let status = match defect.leading_term() {
                    None => InvarianceStatus::RelativeInvariant { weight },
                    Some((m, c)) => InvarianceStatus::NotInvariant {
                        witness: Polynomial::term(c.clone(), m.clone()),
                    },
                };
                Ok(InvarianceReport {
                    status,
                    group,
                    restricted_to_unipotent: false,
                })
            }
            None => {
                let mut report = check_invariance(p, Group::Unipotent)?;
                report.group = Group::Full;
                report.restricted_to_unipotent = true;
                Ok(report)
            }
        },
        Group::Unipotent => {
            let pulled = p.pullback(&Reparametrization::formal_unipotent(k))?;
            let defect = &(pulled.body() - p.body());
            let status = match defect.leading_term() {
                Some((m, c)) => InvarianceStatus::NotInvariant {
                    witness: Polynomial::term(c.clone(), m.clone()),
                },
                // A homogeneous unipotent invariant is automatically a
                // relative invariant of its weight: the scaling subgroup
                // acts on a weight-w polynomial by a_1^w.
                None => match p.weight() {
                    Some(weight) => InvarianceStatus::RelativeInvariant { weight },
                    None => InvarianceStatus::UnipotentInvariantOnly,
                },
            };
            Ok(InvarianceReport {
                status,
                group,
                restricted_to_unipotent: false,
            })
        }
    }
}

/// Total derivative on a raw polynomial body: `x[j,s] -> x[j,s+1]`, zero on
/// params.
pub(crate) fn total_derivative_body(p: &Polynomial) -> Polynomial {
    let rules = p
        .variables()
        .into_iter()
        .map(|v| {
            let image = match v {
                VarId::Jet { component, order } => {
                    Polynomial::var(VarId::jet(component, order + 1))
                }
                VarId::Param { .. } => Polynomial::zero(),
            };
            (v, image)
        })
        .collect();
    p.derive(&rules).expect("rules cover all variables")
}

fn iterated_derivatives(body: &Polynomial, upto: usize) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(upto + 1);
    out.push(body.clone());
    for i in 0..upto {
        let next = total_derivative_body(&out[i]);
        out.push(next);
    }
    out
}

/// Determinant by Laplace expansion along the first row. Fine at the sizes
/// Wronskians and Picard operators reach here.
fn determinant(rows: &[Vec<Polynomial>]) -> Polynomial {
    let n = rows.len();
    if n == 0 {
        return Polynomial::one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut det = Polynomial::zero();
    for (col, entry) in rows[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let cofactor = &(entry * &determinant(&minor));
        det = if col % 2 == 0 {
            &det + cofactor
        } else {
            &det - cofactor
        };
    }
    det
}

fn merged_config(configs: impl IntoIterator<Item = JetConfig>, extra_orders: u32) -> JetConfig {
    let mut k = 1;
    let mut r = 1;
    for c in configs {
        k = k.max(c.k);
        r = r.max(c.r);
    }
    JetConfig::new(k + extra_orders, r)
}

/// Wronskian of a tuple: the determinant whose i-th row is the (i-1)-st
/// total derivative of the arguments. Multilinear and alternating; vanishes
/// exactly when the arguments are linearly dependent over the constants.
pub fn wronskian(args: &[JetPolynomial]) -> Result<JetPolynomial, InvariantError> {
    if args.is_empty() {
        return Err(InvariantError::EmptyArguments);
    }
    let n = args.len();
    let columns: Vec<Vec<Polynomial>> = args
        .iter()
        .map(|p| iterated_derivatives(p.body(), n - 1))
        .collect();
    let rows: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| columns[j][i].clone()).collect())
        .collect();
    let det = determinant(&rows);
    let config = merged_config(args.iter().map(|p| p.config()), (n - 1) as u32);
    Ok(JetPolynomial::new(det, config)?)
}

/// `true` iff the Wronskian vanishes. In this polynomial ring (an integral
/// domain with constant field the rationals) vanishing certifies linear
/// dependence over the constants, and conversely.
pub fn wronskian_dependence_test(args: &[JetPolynomial]) -> Result<bool, InvariantError> {
    Ok(wronskian(args)?.is_zero())
}

/// Which normalization the bracket uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketConvention {
    /// `(1/p) Q dP - (1/q) P dQ`; requires both weights nonzero.
    Normalized,
    /// `q Q dP - p P dQ`; the two agree when `p = q = 1`.
    Merker,
}

/// The weight-raising bracket of two homogeneous jet polynomials of weights
/// `p` and `q`; the result is homogeneous of weight `p + q + 1`, and the
/// bracket of two relative invariants is again one.
pub fn bracket(
    lhs: &JetPolynomial,
    rhs: &JetPolynomial,
    convention: BracketConvention,
) -> Result<JetPolynomial, InvariantError> {
    let p = lhs.weight().ok_or(InvariantError::NonHomogeneous)?;
    let q = rhs.weight().ok_or(InvariantError::NonHomogeneous)?;
    let d_lhs = total_derivative_body(lhs.body());
    let d_rhs = total_derivative_body(rhs.body());
    let body = match convention {
        BracketConvention::Normalized => {
            if p == 0 || q == 0 {
                return Err(InvariantError::ZeroWeight);
            }
            let first = (rhs.body() * &d_lhs).scale(&rat_int(p as i64).recip());
            let second = (lhs.body() * &d_rhs).scale(&rat_int(q as i64).recip());
            &first - &second
        }
        BracketConvention::Merker => {
            let first = (rhs.body() * &d_lhs).scale(&rat_int(q as i64));
            let second = (lhs.body() * &d_rhs).scale(&rat_int(p as i64));
            &first - &second
        }
    };
    let config = merged_config([lhs.config(), rhs.config()], 1);
    Ok(JetPolynomial::new(body, config)?)
}

/// The level-`k_target` entries of the bracket recursion: level 2 is the
/// pairwise brackets of the first-derivative coordinates, and each further
/// level brackets every first-derivative coordinate against every entry of
/// the previous level. Every entry is homogeneous of weight
/// `2 * level - 1` and certifies as a relative invariant.
pub fn q_sequence(
    config: JetConfig,
    k_target: u32,
) -> Result<Vec<JetPolynomial>, InvariantError> {
    if config.r < 2 {
        return Err(InvariantError::RankTooSmall);
    }
    if k_target < 2 {
        return Err(InvariantError::LevelTooSmall);
    }
    let coord = |j: u32| JetPolynomial::coordinate(JetConfig::new(1, config.r), j, 1);
    let mut level: Vec<JetPolynomial> = Vec::new();
    for i in 1..=config.r {
        for j in (i + 1)..=config.r {
            level.push(bracket(
                &coord(i)?,
                &coord(j)?,
                BracketConvention::Normalized,
            )?);
        }
    }
    for _ in 3..=k_target {
        let mut next = Vec::with_capacity(level.len() * config.r as usize);
        for q in &level {
            for i in 1..=config.r {
                next.push(bracket(&coord(i)?, q, BracketConvention::Normalized)?);
            }
        }
        level = next;
    }
    Ok(level)
}

/// The infinitesimal action of the one-parameter subgroup `t + eps t^j`: a
/// derivation lowering the jet order by `j - 1`.
#[derive(Debug, Clone)]
pub struct InfinitesimalGenerator {
    index: u32,
    config: JetConfig,
}

impl InfinitesimalGenerator {
    pub fn index(&self) -> u32 {
        self.index
    }

    /// `delta_j(x[c,s]) = s!/(s-j)! * x[c,s-j+1]` for `s >= j`, else zero.
    pub fn rule(&self, v: &VarId) -> Polynomial {
        match *v {
            VarId::Jet { component, order } if order >= self.index => {
                let falling: i64 = ((order - self.index + 1)..=order).map(|x| x as i64).product();
                Polynomial::var(VarId::jet(component, order - self.index + 1))
                    .scale(&rat_int(falling))
            }
            _ => Polynomial::zero(),
        }
    }

    /// Full rule map over the configured jet universe.
    pub fn rules(&self) -> std::collections::BTreeMap<VarId, Polynomial> {
        self.config
            .jet_vars()
            .map(|v| {
                let img = self.rule(&v);
                (v, img)
            })
            .collect()
    }

    pub fn apply_body(&self, body: &Polynomial) -> Polynomial {
        let rules = body
            .variables()
            .into_iter()
            .map(|v| (v, self.rule(&v)))
            .collect();
        body.derive(&rules).expect("rules cover all variables")
    }

    pub fn apply(&self, p: &JetPolynomial) -> JetPolynomial {
        JetPolynomial::new(self.apply_body(p.body()), p.config())
            .expect("derivation lowers jet orders")
    }
}

/// The generators `delta_j`, `j = 2..k`, of the unipotent action's Lie
/// algebra. Empty when `k = 1` (the unipotent subgroup is trivial).
pub fn infinitesimal_generators(config: JetConfig) -> Vec<InfinitesimalGenerator> {
    (2..=config.k)
        .map(|index| InfinitesimalGenerator { index, config })
        .collect()
}

/// Numerator/denominator form of the s-th derivative of a component after
/// the change of parameter that makes the first component the identity:
/// the denominator is the fixed power `x[1,1]^(2s-1)` and the numerator is
/// homogeneous of weight `2s - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateChangeResult {
    pub component: u32,
    pub order: u32,
    pub numerator: JetPolynomial,
    pub denominator_exponent: u32,
}

/// Successive derivatives of `g_j = f_j o f_1^{-1}` at the origin, via the
/// chain rule `d/dt' = (1/f_1'(t)) d/dt`: starting from `f_j'/f_1'`, each
/// step maps a fraction `N / x[1,1]^e` to
/// `(x[1,1] D(N) - e x[1,2] N) / x[1,1]^(e+2)`.
pub fn coordinate_change(
    config: JetConfig,
    component: u32,
    order: u32,
) -> Result<CoordinateChangeResult, InvariantError> {
    if component < 2 || component > config.r {
        return Err(InvariantError::ComponentOutOfRange(component));
    }
    if order < 1 || order > config.k {
        return Err(InvariantError::OrderOutOfRange(order));
    }
    let x11 = Polynomial::var(VarId::jet(1, 1));
    let x12 = Polynomial::var(VarId::jet(1, 2));
    let mut numerator = Polynomial::var(VarId::jet(component, 1));
    let mut exponent: u32 = 1;
    for _ in 2..=order {
        let derived = total_derivative_body(&numerator);
        numerator = &(&x11 * &derived) - &(&x12 * &numerator).scale(&rat_int(exponent as i64));
        exponent += 2;
    }
    Ok(CoordinateChangeResult {
        component,
        order,
        numerator: JetPolynomial::new(numerator, config)?,
        denominator_exponent: exponent,
    })
}

/// The monic linear differential operator with a prescribed solution tuple:
/// `L(y) = y^(n) + a_1 y^(n-1) + ... + a_n y`, with coefficients the
/// signed Wronskian cofactors over the solutions' Wronskian.
#[derive(Debug, Clone)]
pub struct PicardOperator {
    order: usize,
    coefficients: Vec<RationalFunction>,
}

impl PicardOperator {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `a_i`, 1-indexed, the coefficient of `y^(n-i)`.
    pub fn coefficient(&self, i: usize) -> &RationalFunction {
        &self.coefficients[i - 1]
    }

    pub fn coefficients(&self) -> &[RationalFunction] {
        &self.coefficients
    }

    /// Numerator of `L(y)` after clearing all coefficient denominators.
    /// The ring has no zero divisors, so this vanishes iff `L(y) = 0`.
    pub fn apply_numerator(&self, y: &JetPolynomial) -> Polynomial {
        let derivs = iterated_derivatives(y.body(), self.order);
        let mut acc_num = derivs[self.order].clone();
        let mut acc_den = Polynomial::one();
        for (i, c) in self.coefficients.iter().enumerate() {
            let term = c.numerator() * &derivs[self.order - 1 - i];
            acc_num = &(&acc_num * c.denominator()) + &(&term * &acc_den);
            acc_den = &acc_den * c.denominator();
        }
        acc_num
    }

    pub fn annihilates(&self, y: &JetPolynomial) -> bool {
        self.apply_numerator(y).is_zero()
    }
}

/// Build the Picard operator for a tuple of independent solutions.
pub fn picard_operator(solutions: &[JetPolynomial]) -> Result<PicardOperator, InvariantError> {
    if solutions.is_empty() {
        return Err(InvariantError::EmptyArguments);
    }
    let n = solutions.len();
    let derivs: Vec<Vec<Polynomial>> = solutions
        .iter()
        .map(|u| iterated_derivatives(u.body(), n))
        .collect();
    // Cofactor of the y-column entry of order d: the determinant over rows
    // of all derivative orders 0..n except d.
    let cofactor = |d: usize| -> Polynomial {
        let rows: Vec<Vec<Polynomial>> = (0..=n)
            .filter(|&m| m != d)
            .map(|m| derivs.iter().map(|col| col[m].clone()).collect())
            .collect();
        determinant(&rows)
    };
    let wronskian_det = cofactor(n);
    if wronskian_det.is_zero() {
        return Err(InvariantError::DependentSolutions);
    }
    // Expansion along the y-column gives coefficient (-1)^d cofactor(d) for
    // y^(d); dividing by the y^(n) coefficient makes the operator monic, so
    // a_i = (-1)^i cofactor(n - i) / wronskian.
    let mut coefficients = Vec::with_capacity(n);
    for i in 1..=n {
        let mut num = cofactor(n - i);
        if i % 2 == 1 {
            num = -&num;
        }
        coefficients.push(RationalFunction::new(num, wronskian_det.clone())?);
    }
    let op = PicardOperator {
        order: n,
        coefficients,
    };
    for u in solutions {
        assert!(
            op.annihilates(u),
            "picard operator must annihilate its defining solutions"
        );
    }
    Ok(op)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config22() -> JetConfig {
        JetConfig::new(2, 2)
    }

    fn xi(j: u32, s: u32) -> Polynomial {
        Polynomial::var(VarId::jet(j, s))
    }

    fn coord(config: JetConfig, j: u32, s: u32) -> JetPolynomial {
        JetPolynomial::coordinate(config, j, s).unwrap()
    }

    fn pair_wronskian() -> JetPolynomial {
        wronskian(&[coord(config22(), 1, 1), coord(config22(), 2, 1)]).unwrap()
    }

    #[test]
    fn wronskian_singleton_and_pair() {
        let p = coord(config22(), 1, 1);
        assert_eq!(wronskian(std::slice::from_ref(&p)).unwrap().body(), p.body());

        let w = pair_wronskian();
        let expected = &(&xi(1, 1) * &xi(2, 2)) - &(&xi(2, 1) * &xi(1, 2));
        assert_eq!(w.body(), &expected);
    }

    #[test]
    fn wronskian_of_repeated_argument_vanishes() {
        let p = coord(config22(), 1, 1);
        assert!(wronskian(&[p.clone(), p]).unwrap().is_zero());
    }

    #[test]
    fn dependence_test_detects_linear_relations() {
        let p = coord(config22(), 1, 1);
        let q = coord(config22(), 2, 1);
        let triple = JetPolynomial::new(p.body().scale(&rat_int(3)), config22()).unwrap();
        assert!(wronskian_dependence_test(&[p.clone(), triple]).unwrap());
        assert!(!wronskian_dependence_test(&[p.clone(), q.clone()]).unwrap());

        // [P, Q, 2P - 5Q] is dependent by multilinearity.
        let combo = &p.body().scale(&rat_int(2)) - &q.body().scale(&rat_int(5));
        let combo = JetPolynomial::new(combo, config22()).unwrap();
        assert!(wronskian_dependence_test(&[p, q, combo]).unwrap());
    }

    #[test]
    fn bracket_is_antisymmetric_and_matches_pair_wronskian() {
        let p = coord(config22(), 1, 1);
        let q = coord(config22(), 2, 1);
        for convention in [BracketConvention::Normalized, BracketConvention::Merker] {
            assert!(bracket(&p, &p, convention).unwrap().is_zero());
            let b = bracket(&p, &q, convention).unwrap();
            let minus_w = -&pair_wronskian().body().clone();
            assert_eq!(b.body(), &minus_w, "{convention:?}");
            let ba = bracket(&q, &p, convention).unwrap();
            assert_eq!(ba.body(), &-&b.body().clone());
        }
    }

    #[test]
    fn bracket_requires_homogeneous_nonzero_weights() {
        let mixed = JetPolynomial::new(&xi(1, 1) + &xi(1, 2), config22()).unwrap();
        let p = coord(config22(), 1, 1);
        assert_eq!(
            bracket(&mixed, &p, BracketConvention::Normalized).unwrap_err(),
            InvariantError::NonHomogeneous
        );
        let zero_weight = JetPolynomial::new(Polynomial::one(), config22()).unwrap();
        assert_eq!(
            bracket(&zero_weight, &p, BracketConvention::Normalized).unwrap_err(),
            InvariantError::ZeroWeight
        );
        assert!(bracket(&zero_weight, &p, BracketConvention::Merker).is_ok());
    }

    #[test]
    fn q_sequence_level_two_is_minus_wronskian() {
        let entries = q_sequence(config22(), 2).unwrap();
        assert_eq!(entries.len(), 1);
        let minus_w = -&pair_wronskian().body().clone();
        assert_eq!(entries[0].body(), &minus_w);
    }

    #[test]
    fn q_sequence_level_weights_follow_the_recursion() {
        let entries = q_sequence(JetConfig::new(3, 2), 3).unwrap();
        assert_eq!(entries.len(), 2);
        for e in &entries {
            assert_eq!(e.weight(), Some(5));
        }
        assert_eq!(
            q_sequence(JetConfig::new(2, 1), 2).unwrap_err(),
            InvariantError::RankTooSmall
        );
    }

    #[test]
    fn certification_of_basic_invariants() {
        let p = coord(config22(), 1, 1);
        let report = check_invariance(&p, Group::Full).unwrap();
        assert_eq!(
            report.status,
            InvarianceStatus::RelativeInvariant { weight: 1 }
        );

        let w = pair_wronskian();
        let report = check_invariance(&w, Group::Full).unwrap();
        assert_eq!(
            report.status,
            InvarianceStatus::RelativeInvariant { weight: 3 }
        );
    }

    #[test]
    fn non_invariant_coordinate_yields_deterministic_witness() {
        let p = coord(config22(), 1, 2);
        let report = check_invariance(&p, Group::Unipotent).unwrap();
        let expected_witness = (&Polynomial::var(VarId::param(2)) * &xi(1, 1)).scale(&rat_int(2));
        assert_eq!(
            report.status,
            InvarianceStatus::NotInvariant {
                witness: expected_witness
            }
        );
    }

    #[test]
    fn non_homogeneous_full_group_question_is_restricted() {
        let body = &xi(1, 2) + &xi(1, 1); // weights 2 and 1
        let p = JetPolynomial::new(body, config22()).unwrap();
        let report = check_invariance(&p, Group::Full).unwrap();
        assert!(report.restricted_to_unipotent);
        assert!(matches!(
            report.status,
            InvarianceStatus::NotInvariant { .. }
        ));

        // A non-homogeneous unipotent invariant: sum of invariants of
        // different weights.
        let body = &pair_wronskian().body().clone() + &xi(1, 1);
        let p = JetPolynomial::new(body, config22()).unwrap();
        let report = check_invariance(&p, Group::Full).unwrap();
        assert!(report.restricted_to_unipotent);
        assert_eq!(report.status, InvarianceStatus::UnipotentInvariantOnly);
    }

    #[test]
    fn infinitesimal_generators_lower_order() {
        let gens = infinitesimal_generators(config22());
        assert_eq!(gens.len(), 1);
        let delta2 = &gens[0];
        assert_eq!(
            delta2.rule(&VarId::jet(1, 2)),
            xi(1, 1).scale(&rat_int(2))
        );
        assert!(delta2.rule(&VarId::jet(1, 1)).is_zero());
        assert!(delta2.apply(&pair_wronskian()).is_zero());
    }

    #[test]
    fn infinitesimal_rule_matches_pullback_derivative() {
        // delta_j is the a_j-linear part of the pullback along t + a_j t^j.
        let config = JetConfig::new(4, 2);
        for gen in infinitesimal_generators(config) {
            let phi = Reparametrization::one_parameter(4, gen.index());
            for j in 1..=2 {
                for s in 1..=4 {
                    let p = coord(config, j, s);
                    let pulled = p.pullback(&phi).unwrap();
                    let mut linear = Polynomial::zero();
                    for (m, c) in pulled.body().iter() {
                        if m.exponent(&VarId::param(gen.index())) == 1 {
                            let reduced = m.without_one(&VarId::param(gen.index())).unwrap();
                            linear = &linear + &Polynomial::term(c.clone(), reduced);
                        }
                    }
                    assert_eq!(linear, gen.rule(&VarId::jet(j, s)), "j={j} s={s}");
                }
            }
        }
    }

    #[test]
    fn coordinate_change_matches_quotient_rule() {
        let config = JetConfig::new(3, 2);
        let first = coordinate_change(config, 2, 1).unwrap();
        assert_eq!(first.numerator.body(), &xi(2, 1));
        assert_eq!(first.denominator_exponent, 1);

        let second = coordinate_change(config, 2, 2).unwrap();
        let expected = &(&xi(1, 1) * &xi(2, 2)) - &(&xi(2, 1) * &xi(1, 2));
        assert_eq!(second.numerator.body(), &expected);
        assert_eq!(second.denominator_exponent, 3);

        let third = coordinate_change(config, 2, 3).unwrap();
        assert_eq!(third.numerator.weight(), Some(5));
        assert_eq!(third.denominator_exponent, 5);
        let report = check_invariance(&third.numerator, Group::Full).unwrap();
        assert_eq!(
            report.status,
            InvarianceStatus::RelativeInvariant { weight: 5 }
        );
    }

    #[test]
    fn coordinate_change_validates_indices() {
        let config = config22();
        assert_eq!(
            coordinate_change(config, 1, 1).unwrap_err(),
            InvariantError::ComponentOutOfRange(1)
        );
        assert_eq!(
            coordinate_change(config, 2, 3).unwrap_err(),
            InvariantError::OrderOutOfRange(3)
        );
    }

    #[test]
    fn picard_operator_first_order() {
        let u = coord(config22(), 1, 1);
        let op = picard_operator(std::slice::from_ref(&u)).unwrap();
        // L(y) = y' - (x[1,2]/x[1,1]) y
        let a1 = op.coefficient(1);
        assert_eq!(a1.numerator(), &-&xi(1, 2));
        assert_eq!(a1.denominator(), &xi(1, 1));
        assert!(op.annihilates(&u));
    }

    #[test]
    fn picard_operator_annihilates_second_order_solutions() {
        let u1 = coord(config22(), 1, 1);
        let u2 = coord(config22(), 2, 1);
        let op = picard_operator(&[u1.clone(), u2.clone()]).unwrap();
        assert!(op.annihilates(&u1));
        assert!(op.annihilates(&u2));
        // And not everything: L(x[1,1]^2) != 0.
        let sq = JetPolynomial::new(xi(1, 1).pow(2), config22()).unwrap();
        assert!(!op.annihilates(&sq));
    }

    #[test]
    fn picard_operator_rejects_dependent_solutions() {
        let u = coord(config22(), 1, 1);
        let v = JetPolynomial::new(xi(1, 1).scale(&rat_int(2)), config22()).unwrap();
        assert_eq!(
            picard_operator(&[u, v]).unwrap_err(),
            InvariantError::DependentSolutions
        );
    }

    #[test]
    fn report_json_matches_published_schema() {
        let p = coord(config22(), 1, 1);
        let report = check_invariance(&p, Group::Full).unwrap();
        assert_eq!(
            report.to_json(),
            serde_json::json!({"status": "relative_invariant", "weight": 1})
        );
        let bad = coord(config22(), 1, 2);
        let report = check_invariance(&bad, Group::Unipotent).unwrap();
        assert_eq!(
            report.to_json(),
            serde_json::json!({"status": "not_invariant", "witness": "2*x[1,1]*a[2]"})
        );
    }
}
