//! Fiber dimensions: weighted monomial counting for the full jet fiber and
//! exact invariant dimensions for the unipotent action.
//!
//! The full fiber in weight `m` is spanned by the monomials of weighted
//! degree `m` in the `k*r` jet variables, counted by the series
//! `prod_{s=1..k} (1 - q^s)^(-r)`. The invariant fiber is computed two ways:
//! the primary path is the exact kernel of the stacked infinitesimal
//! generators on the monomial basis; the formal-group pullback serves as an
//! independent verifier in the tests.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::invariants::{infinitesimal_generators, InvariantError};
use crate::jetcore::{JetConfig, JetError, JetPolynomial};
use crate::ratpoly::{
    normalize_kernel_vector, nullspace, Monomial, Polynomial, QMatrix, RatPolyError, Rational,
    VarId,
};

/// Default cap on the number of monomial columns in one exact elimination.
pub const DEFAULT_MAX_COLUMNS: usize = 5000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DimensionError {
    /// The would-be elimination exceeds the column limit.
    #[error("instance too large: {rows} x {cols} matrix exceeds the {limit}-column limit")]
    InstanceTooLarge {
        rows: usize,
        cols: usize,
        limit: usize,
    },
    /// Growth certification needs enough points per residue class.
    #[error("insufficient range: need m_max >= {required}, got {given}")]
    InsufficientRange { required: u32, given: u32 },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Poly(#[from] RatPolyError),
}

/// Counting table for the full jet fiber: `coefficient(m)` is the number of
/// weighted-degree-`m` monomials in the jet variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    config: JetConfig,
    coefficients: Vec<BigInt>,
}

impl HilbertTable {
    pub fn config(&self) -> JetConfig {
        self.config
    }

    pub fn m_max(&self) -> u32 {
        (self.coefficients.len() - 1) as u32
    }

    pub fn coefficient(&self, m: u32) -> &BigInt {
        &self.coefficients[m as usize]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficients as decimal strings, so arbitrarily large counts survive
    /// JSON round trips exactly.
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.config.k,
            "r": self.config.r,
            "m_max": self.m_max(),
            "coefficients": self.coefficients.iter().map(BigInt::to_string).collect::<Vec<_>>(),
        })
    }
}

/// Coefficients of `prod_{s=1..k} (1 - q^s)^(-r)` up to `q^m_max`, by
/// repeated prefix accumulation (one pass per geometric factor).
pub fn hilbert_gg(config: JetConfig, m_max: u32) -> HilbertTable {
    let n = m_max as usize;
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::one();
    for s in 1..=config.k as usize {
        for _ in 0..config.r {
            for m in s..=n {
                let prev = c[m - s].clone();
                c[m] += prev;
            }
        }
    }
    HilbertTable {
        config,
        coefficients: c,
    }
}

/// All monomials of weighted degree exactly `m`, in increasing canonical
/// order. The length always matches the counting table.
pub fn enumerate_monomials(config: JetConfig, m: u32) -> Vec<Monomial> {
    let vars: Vec<VarId> = config.jet_vars().collect();
    let mut out = Vec::new();
    let mut exps: Vec<(VarId, u32)> = Vec::new();
    fn rec(vars: &[VarId], remaining: u32, exps: &mut Vec<(VarId, u32)>, out: &mut Vec<Monomial>) {
        let Some((&v, rest)) = vars.split_first() else {
            if remaining == 0 {
                out.push(Monomial::from_exponents(exps.iter().copied()));
            }
            return;
        };
        let w = v.weight() as u32;
        for e in 0..=(remaining / w) {
            if e > 0 {
                exps.push((v, e));
            }
            rec(rest, remaining - e * w, exps, out);
            if e > 0 {
                exps.pop();
            }
        }
    }
    rec(&vars, m, &mut exps, &mut out);
    out.sort();
    out
}

/// Basis of the unipotent-invariant part of the weight-`m` fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBasis {
    pub config: JetConfig,
    pub weight: u32,
    pub basis: Vec<JetPolynomial>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.config.k,
            "r": self.config.r,
            "m": self.weight,
            "group": "Uk",
            "dim": self.dim(),
            "basis": self.basis.iter().map(|p| p.body().to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<InvariantBasis, DimensionError> {
        let bad = || RatPolyError::Parse {
            position: 0,
            message: "malformed invariant basis".to_string(),
        };
        let get_u32 = |key: &str| -> Result<u32, DimensionError> {
            Ok(value.get(key).and_then(Value::as_u64).ok_or_else(bad)? as u32)
        };
        let config = JetConfig::new(get_u32("k")?, get_u32("r")?);
        let weight = get_u32("m")?;
        let entries = value
            .get("basis")
            .and_then(Value::as_array)
            .ok_or_else(bad)?;
        let mut basis = Vec::with_capacity(entries.len());
        for e in entries {
            let text = e.as_str().ok_or_else(bad)?;
            let body = Polynomial::parse(text)?;
            basis.push(JetPolynomial::new(body, config)?);
        }
        Ok(InvariantBasis {
            config,
            weight,
            basis,
        })
    }
}

/// Shape of the stacked generator matrix for a weight-`m` instance, using
/// only the counting table (cheap, computed before any allocation).
fn instance_shape(config: JetConfig, m: u32) -> (usize, usize) {
    let table = hilbert_gg(config, m);
    let cols: usize = usize::try_from(table.coefficient(m)).unwrap_or(usize::MAX);
    let mut rows = 0usize;
    for j in 2..=config.k {
        let drop = j - 1;
        if m >= drop {
            rows += usize::try_from(table.coefficient(m - drop)).unwrap_or(usize::MAX);
        }
    }
    (rows, cols)
}

/// Exact kernel of the stacked infinitesimal generators on the weight-`m`
/// monomial basis. Basis elements have primitive integer coefficient
/// vectors; for `k = 1` the unipotent group is trivial and the whole
/// monomial basis is returned.
pub fn invariant_basis(
    config: JetConfig,
    m: u32,
    max_columns: usize,
) -> Result<InvariantBasis, DimensionError> {
    let (rows, cols) = instance_shape(config, m);
    if cols > max_columns {
        return Err(DimensionError::InstanceTooLarge {
            rows,
            cols,
            limit: max_columns,
        });
    }
    let columns = enumerate_monomials(config, m);
    let generators = infinitesimal_generators(config);

    let mut matrix_rows: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    for gen in &generators {
        let drop = gen.index() - 1;
        if m < drop {
            continue;
        }
        let targets = enumerate_monomials(config, m - drop);
        let target_index: BTreeMap<&Monomial, usize> =
            targets.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut block = vec![vec![Rational::zero(); columns.len()]; targets.len()];
        for (col, monomial) in columns.iter().enumerate() {
            let image = gen.apply_body(&Polynomial::term(Rational::one(), monomial.clone()));
            for (t, coeff) in image.iter() {
                let row = target_index[t];
                block[row][col] = coeff.clone();
            }
        }
        matrix_rows.extend(block);
    }

    let kernel = if matrix_rows.is_empty() {
        // No generators act (k = 1): the whole space is invariant.
        (0..columns.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); columns.len()];
                v[i] = Rational::one();
                v
            })
            .collect()
    } else {
        nullspace(&QMatrix::from_rows(matrix_rows))
    };

    let basis = kernel
        .into_iter()
        .map(|v| {
            let body = Polynomial::from_terms(
                v.into_iter()
                    .zip(&columns)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, mono)| (c, mono.clone())),
            );
            JetPolynomial::new(body, config).map_err(DimensionError::from)
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(InvariantBasis {
        config,
        weight: m,
        basis,
    })
}

/// Incremental row space with exact membership tests: rows are kept
/// forward-reduced, keyed by pivot column, each scaled so the pivot is 1.
struct RowSpan {
    pivots: BTreeMap<usize, Vec<Rational>>,
}

impl RowSpan {
    fn new() -> RowSpan {
        RowSpan {
            pivots: BTreeMap::new(),
        }
    }

    fn dim(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        loop {
            let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
                return v;
            };
            let Some(row) = self.pivots.get(&lead) else {
                return v;
            };
            let factor = v[lead].clone();
            for (a, b) in v.iter_mut().zip(row) {
                *a = &*a - &(&factor * b);
            }
        }
    }

    /// Returns true when the vector enlarged the span.
    fn insert(&mut self, v: Vec<Rational>) -> bool {
        let reduced = self.reduce(v);
        let Some(lead) = reduced.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = reduced[lead].clone().recip();
        let normalized: Vec<Rational> = reduced.iter().map(|x| x * &inv).collect();
        self.pivots.insert(lead, normalized);
        true
    }
}

/// Outcome of comparing products of generators against the invariant fiber.
#[derive(Debug, Clone)]
pub struct GenerationReport {
    pub config: JetConfig,
    pub weight: u32,
    pub differential_depth: u32,
    pub spanned_dim: usize,
    pub invariant_dim: usize,
    /// Invariant directions not reached by the generator products,
    /// forward-reduced and normalized to primitive integer vectors.
    pub cogenerators: Vec<JetPolynomial>,
}

impl GenerationReport {
    pub fn spans(&self) -> bool {
        self.spanned_dim == self.invariant_dim
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.config.k,
            "r": self.config.r,
            "m": self.weight,
            "differential_depth": self.differential_depth,
            "spanned_dim": self.spanned_dim,
            "invariant_dim": self.invariant_dim,
            "spans": self.spans(),
            "cogenerators": self.cogenerators.iter().map(|p| p.body().to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Compare the span of the weight-`m` invariant products of the generators
/// (and their total derivatives up to `depth`, default `k - 1`) with the
/// invariant fiber.
///
/// Derived elements that leave the configured jet universe are discarded,
/// and only products that are themselves unipotent-invariant enter the
/// span, so the spanned space is a subspace of the invariant fiber and
/// `spanned_dim` grows monotonically with the generator list and depth.
pub fn generation_check(
    config: JetConfig,
    m: u32,
    generators: &[JetPolynomial],
    depth: Option<u32>,
    max_columns: usize,
) -> Result<GenerationReport, DimensionError> {
    let depth = depth.unwrap_or(config.k.saturating_sub(1));
    let target = invariant_basis(config, m, max_columns)?;
    let columns = enumerate_monomials(config, m);
    let column_index: BTreeMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let gens = infinitesimal_generators(config);

    // Derived pool: D^d(g) for each generator, kept while it still lives in
    // the configured universe and can contribute to weight m.
    let mut pool: Vec<(u64, Polynomial)> = Vec::new();
    for g in generators {
        let mut current = g.clone();
        for d in 0..=depth {
            if d > 0 {
                current = current.total_derivative();
            }
            if current.is_zero() || current.max_jet_order() > config.k {
                break;
            }
            match current.weight() {
                Some(w) if w >= 1 && w <= m as u64 => pool.push((w, current.body().clone())),
                _ => {}
            }
        }
    }

    let mut span = RowSpan::new();
    let mut product_stack: Vec<Polynomial> = Vec::new();
    enumerate_products(
        &pool,
        0,
        m as u64,
        &mut product_stack,
        &mut |product: &Polynomial| {
            if !gens.iter().all(|g| g.apply_body(product).is_zero()) {
                return;
            }
            let mut vector = vec![Rational::zero(); columns.len()];
            for (mono, c) in product.iter() {
                vector[column_index[mono]] = c.clone();
            }
            span.insert(vector);
        },
    );
    let spanned_dim = span.dim();

    let mut cogenerators = Vec::new();
    let mut extended = span;
    for element in &target.basis {
        let mut vector = vec![Rational::zero(); columns.len()];
        for (mono, c) in element.body().iter() {
            vector[column_index[mono]] = c.clone();
        }
        let residue = extended.reduce(vector);
        if residue.iter().any(|x| !x.is_zero()) {
            let normalized = normalize_kernel_vector(&residue);
            let body = Polynomial::from_terms(
                normalized
                    .iter()
                    .zip(&columns)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, mono)| (c.clone(), mono.clone())),
            );
            cogenerators.push(JetPolynomial::new(body, config)?);
            extended.insert(residue);
        }
    }

    Ok(GenerationReport {
        config,
        weight: m,
        differential_depth: depth,
        spanned_dim,
        invariant_dim: target.dim(),
        cogenerators,
    })
}

/// Multisets over `pool` (by nondecreasing index) whose weights sum to
/// exactly `remaining`; calls `emit` with each product polynomial.
fn enumerate_products(
    pool: &[(u64, Polynomial)],
    start: usize,
    remaining: u64,
    stack: &mut Vec<Polynomial>,
    emit: &mut impl FnMut(&Polynomial),
) {
    if remaining == 0 {
        // The empty product is the unit: weight 0 is spanned by constants.
        let product = stack.iter().fold(Polynomial::one(), |acc, p| &acc * p);
        emit(&product);
        return;
    }
    for (i, (w, p)) in pool.iter().enumerate().skip(start) {
        if *w > remaining {
            continue;
        }
        stack.push(p.clone());
        enumerate_products(pool, i, remaining - w, stack, emit);
        stack.pop();
    }
}

/// Per-residue-class finite-difference certificate for the fiber growth
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthClassReport {
    pub residue: u32,
    /// Largest difference order with a nonzero value: the polynomial degree
    /// of the class on the sampled range.
    pub degree: u32,
    /// The constant value of the degree-order differences.
    pub leading_difference: BigInt,
}

/// Result of [`growth_exponent_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    pub config: JetConfig,
    pub m_max: u32,
    /// lcm of the weights 1..k; classes are residues modulo this.
    pub modulus: u32,
    pub expected_degree: u32,
    pub classes: Vec<GrowthClassReport>,
    /// Every class has degree exactly `k*r - 1` with a positive leading
    /// constant.
    pub certified: bool,
}

impl GrowthReport {
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.config.k,
            "r": self.config.r,
            "m_max": self.m_max,
            "modulus": self.modulus,
            "expected_degree": self.expected_degree,
            "certified": self.certified,
            "classes": self.classes.iter().map(|c| json!({
                "residue": c.residue,
                "degree": c.degree,
                "leading_difference": c.leading_difference.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Certify that along every residue class mod lcm(1..k) the fiber count is
/// a polynomial in `m` of degree exactly `k*r - 1`: differences of order
/// `k*r` vanish identically on the sampled range and the order-`k*r - 1`
/// differences are a positive constant.
pub fn growth_exponent_check(
    config: JetConfig,
    m_max: u32,
) -> Result<GrowthReport, DimensionError> {
    let modulus: u32 = (1..=config.k).fold(1u32, |acc, s| acc.lcm(&s));
    let kr = config.k * config.r;
    let required = 2 * kr * modulus;
    if m_max < required {
        return Err(DimensionError::InsufficientRange {
            required,
            given: m_max,
        });
    }
    let table = hilbert_gg(config, m_max);
    let expected_degree = kr - 1;
    let class_values = |residue: u32| -> Vec<BigInt> {
        (0..)
            .map(|t| residue + t * modulus)
            .take_while(|&m| m <= m_max)
            .map(|m| table.coefficient(m).clone())
            .collect()
    };
    let mut classes = Vec::with_capacity(modulus as usize);
    let mut certified = true;
    for residue in 0..modulus {
        let mut seq = class_values(residue);
        let mut degree = 0u32;
        for level in 0..=kr {
            if seq.iter().any(|x| !x.is_zero()) {
                degree = level;
            }
            seq = seq.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        let mut leading = class_values(residue);
        for _ in 0..degree {
            leading = leading.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        let constant = leading.iter().all(|x| x == &leading[0]);
        let leading_difference = leading[0].clone();
        if degree != expected_degree || !constant || !leading_difference.is_positive() {
            certified = false;
        }
        classes.push(GrowthClassReport {
            residue,
            degree,
            leading_difference,
        });
    }
    Ok(GrowthReport {
        config,
        m_max,
        modulus,
        expected_degree,
        classes,
        certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{check_invariance, wronskian, Group};

    fn coord(config: JetConfig, j: u32, s: u32) -> JetPolynomial {
        JetPolynomial::coordinate(config, j, s).unwrap()
    }

    fn pair_wronskian(config: JetConfig) -> JetPolynomial {
        let w = wronskian(&[coord(config, 1, 1), coord(config, 2, 1)]).unwrap();
        JetPolynomial::new(w.body().clone(), config).unwrap()
    }

    #[test]
    fn hilbert_spot_values() {
        assert_eq!(
            hilbert_gg(JetConfig::new(1, 2), 3).coefficient(3),
            &BigInt::from(4)
        );
        assert_eq!(
            hilbert_gg(JetConfig::new(2, 1), 4).coefficient(4),
            &BigInt::from(3)
        );
        assert_eq!(
            hilbert_gg(JetConfig::new(3, 2), 2).coefficient(2),
            &BigInt::from(5)
        );
        assert_eq!(
            hilbert_gg(JetConfig::new(2, 2), 0).coefficient(0),
            &BigInt::from(1)
        );
    }

    #[test]
    fn enumeration_matches_counting() {
        for k in 1..=3 {
            for r in 1..=2 {
                let config = JetConfig::new(k, r);
                let table = hilbert_gg(config, 8);
                for m in 0..=8 {
                    let monos = enumerate_monomials(config, m);
                    assert_eq!(
                        BigInt::from(monos.len()),
                        table.coefficient(m).clone(),
                        "k={k} r={r} m={m}"
                    );
                    // Canonical order, no duplicates.
                    assert!(monos.windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_monomials(JetConfig::new(2, 1), 0),
            vec![Monomial::one()]
        );
        let quartic = enumerate_monomials(JetConfig::new(2, 1), 4);
        let x = VarId::jet(1, 1);
        let y = VarId::jet(1, 2);
        assert_eq!(
            quartic,
            vec![
                Monomial::var_pow(y, 2),
                Monomial::from_exponents([(x, 2), (y, 1)]),
                Monomial::var_pow(x, 4),
            ]
        );
    }

    #[test]
    fn invariant_basis_weight_one_and_three() {
        let config = JetConfig::new(2, 2);
        let b1 = invariant_basis(config, 1, DEFAULT_MAX_COLUMNS).unwrap();
        assert_eq!(b1.dim(), 2);

        let b3 = invariant_basis(config, 3, DEFAULT_MAX_COLUMNS).unwrap();
        assert_eq!(b3.dim(), 5);
        for e in &b3.basis {
            let report = check_invariance(e, Group::Unipotent).unwrap();
            assert!(report.is_invariant());
            assert_eq!(e.weight(), Some(3));
        }
    }

    #[test]
    fn trivial_group_keeps_the_whole_fiber() {
        let config = JetConfig::new(1, 2);
        for m in 0..=4 {
            let b = invariant_basis(config, m, DEFAULT_MAX_COLUMNS).unwrap();
            let table = hilbert_gg(config, m);
            assert_eq!(BigInt::from(b.dim()), table.coefficient(m).clone());
        }
    }

    #[test]
    fn size_guard_reports_shape() {
        let config = JetConfig::new(2, 2);
        let err = invariant_basis(config, 3, 3).unwrap_err();
        match err {
            DimensionError::InstanceTooLarge { cols, limit, .. } => {
                assert_eq!(cols, 8);
                assert_eq!(limit, 3);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn basis_json_round_trip() {
        let config = JetConfig::new(2, 2);
        let b = invariant_basis(config, 3, DEFAULT_MAX_COLUMNS).unwrap();
        let json = b.to_json();
        let back = InvariantBasis::from_json(&json).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn generation_check_at_weight_three() {
        let config = JetConfig::new(2, 2);
        let gens = vec![
            coord(config, 1, 1),
            coord(config, 2, 1),
            pair_wronskian(config),
        ];
        let report = generation_check(config, 3, &gens, None, DEFAULT_MAX_COLUMNS).unwrap();
        assert_eq!(report.spanned_dim, 5);
        assert_eq!(report.invariant_dim, 5);
        assert!(report.spans());
        assert!(report.cogenerators.is_empty());

        let quadratic = generation_check(config, 2, &gens, None, DEFAULT_MAX_COLUMNS).unwrap();
        assert_eq!(quadratic.spanned_dim, 3);
        assert_eq!(quadratic.invariant_dim, 3);
    }

    #[test]
    fn empty_generator_list_spans_nothing() {
        let config = JetConfig::new(2, 2);
        let report = generation_check(config, 2, &[], None, DEFAULT_MAX_COLUMNS).unwrap();
        assert_eq!(report.spanned_dim, 0);
        assert_eq!(report.invariant_dim, 3);
        assert_eq!(report.cogenerators.len(), 3);
    }

    #[test]
    fn partial_generators_leave_cogenerators() {
        let config = JetConfig::new(2, 2);
        let gens = vec![coord(config, 1, 1), coord(config, 2, 1)];
        let report = generation_check(config, 3, &gens, Some(0), DEFAULT_MAX_COLUMNS).unwrap();
        // Without the wronskian and without derivatives only the 4 cubics in
        // first derivatives are reachable.
        assert_eq!(report.spanned_dim, 4);
        assert_eq!(report.invariant_dim, 5);
        assert_eq!(report.cogenerators.len(), 1);
        let deeper = generation_check(config, 3, &gens, Some(1), DEFAULT_MAX_COLUMNS).unwrap();
        assert!(deeper.spanned_dim >= report.spanned_dim);
    }

    #[test]
    fn growth_degree_for_small_configurations() {
        let flat = growth_exponent_check(JetConfig::new(1, 1), 8).unwrap();
        assert!(flat.certified);
        assert_eq!(flat.expected_degree, 0);
        assert_eq!(flat.classes[0].leading_difference, BigInt::from(1));

        let linear = growth_exponent_check(JetConfig::new(2, 1), 24).unwrap();
        assert!(linear.certified);
        assert_eq!(linear.expected_degree, 1);
        for class in &linear.classes {
            assert_eq!(class.degree, 1);
            assert_eq!(class.leading_difference, BigInt::from(1));
        }
    }

    #[test]
    fn growth_check_requires_enough_points() {
        assert_eq!(
            growth_exponent_check(JetConfig::new(2, 2), 10).unwrap_err(),
            DimensionError::InsufficientRange {
                required: 16,
                given: 10
            }
        );
    }

    #[test]
    fn spanned_dim_is_monotone_in_generators() {
        let config = JetConfig::new(2, 2);
        let mut gens = vec![coord(config, 1, 1)];
        let mut last = 0;
        for extra in [coord(config, 2, 1), pair_wronskian(config)] {
            gens.push(extra);
            let report = generation_check(config, 4, &gens, None, DEFAULT_MAX_COLUMNS).unwrap();
            assert!(report.spanned_dim >= last);
            last = report.spanned_dim;
        }
    }
}
