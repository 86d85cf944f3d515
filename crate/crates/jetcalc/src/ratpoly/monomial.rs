//! Variables and monomials with the canonical (weight-graded) order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A variable of the jet polynomial ring.
///
/// Jet variables `x[j,s]` stand for the s-th derivative of the j-th curve
/// component at the origin and carry weight `s`. Param variables `a[i]` are
/// the formal coefficients of a reparametrization `t -> a_1 t + a_2 t^2 + ...`
/// and carry weight `i - 1`, which is exactly the assignment that makes the
/// pullback of a weighted-homogeneous jet polynomial homogeneous of the same
/// weight (substituting `x[j,s]` produces terms `a_{i_1}...a_{i_u} x[j,u]`
/// with `i_1 + ... + i_u = s`).
///
/// The derived ordering (jet variables first, then params, each by index)
/// is the lexicographic tie-break of the canonical monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    /// `x[j,s]`: component `j >= 1`, derivative order `s >= 1`.
    Jet { component: u32, order: u32 },
    /// `a[i]`: reparametrization coefficient, `i >= 1`.
    Param { index: u32 },
}

impl VarId {
    pub fn jet(component: u32, order: u32) -> Self {
        debug_assert!(component >= 1 && order >= 1);
        VarId::Jet { component, order }
    }

    pub fn param(index: u32) -> Self {
        debug_assert!(index >= 1);
        VarId::Param { index }
    }

    pub fn weight(&self) -> u64 {
        match *self {
            VarId::Jet { order, .. } => order as u64,
            VarId::Param { index } => (index - 1) as u64,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VarId::Jet { component, order } => write!(f, "x[{component},{order}]"),
            VarId::Param { index } => write!(f, "a[{index}]"),
        }
    }
}

/// A power product of variables. Zero exponents are never stored, so the
/// empty map is the constant monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<VarId, u32>,
}

impl Monomial {
    /// The constant monomial 1.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(v, e);
        }
        Monomial { exps }
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            if e > 0 {
                *m.exps.entry(v).or_insert(0) += e;
            }
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: &VarId) -> u32 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    /// Variables in increasing `VarId` order with their positive exponents.
    pub fn iter(&self) -> impl Iterator<Item = (&VarId, &u32)> {
        self.exps.iter()
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.values().map(|&e| e as u64).sum()
    }

    /// Weighted degree: sum of exponent times variable weight.
    pub fn weight(&self) -> u64 {
        self.exps.iter().map(|(v, &e)| v.weight() * e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            *exps.entry(*v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// The monomial with `v`'s exponent lowered by one, or `None` when `v`
    /// does not occur. Used by derivations.
    pub fn without_one(&self, v: &VarId) -> Option<Monomial> {
        let e = self.exponent(v);
        if e == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(v);
        } else {
            exps.insert(*v, e - 1);
        }
        Some(Monomial { exps })
    }
}

/// Canonical order: graded by weight, ties broken lexicographically — the
/// first variable (in `VarId` order) whose exponents differ decides, larger
/// exponent meaning larger monomial.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.weight().cmp(&other.weight()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut lhs = self.exps.iter();
        let mut rhs = other.exps.iter();
        let (mut a, mut b) = (lhs.next(), rhs.next());
        loop {
            match (a, b) {
                (None, None) => return Ordering::Equal,
                // Remaining variables on one side only: it has a positive
                // exponent where the other has zero, so it is lex-larger.
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            a = lhs.next();
                            b = rhs.next();
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(j: u32, s: u32) -> VarId {
        VarId::jet(j, s)
    }

    #[test]
    fn weights() {
        assert_eq!(x(1, 1).weight(), 1);
        assert_eq!(x(2, 3).weight(), 3);
        assert_eq!(VarId::param(1).weight(), 0);
        assert_eq!(VarId::param(4).weight(), 3);
        let m = Monomial::from_exponents([(x(1, 1), 2), (x(1, 2), 1)]);
        assert_eq!(m.weight(), 4);
        assert_eq!(m.total_degree(), 3);
    }

    #[test]
    fn order_grades_by_weight_first() {
        let lo = Monomial::var(x(1, 1));
        let hi = Monomial::var(x(1, 2));
        assert!(lo < hi);
        assert!(Monomial::one() < lo);
    }

    #[test]
    fn lex_tie_break_prefers_earlier_variable() {
        // Same weight 2: x[1,1]^2 vs x[1,2]. The first differing variable is
        // x[1,1], where the square has the larger exponent.
        let sq = Monomial::var_pow(x(1, 1), 2);
        let lin = Monomial::var(x(1, 2));
        assert!(sq > lin);

        // Same weight, same variables up to the param: jet variables come
        // first, so a[2]*x[1,1] vs x[1,2]: first difference is at x[1,1].
        let mixed = Monomial::from_exponents([(VarId::param(2), 1), (x(1, 1), 1)]);
        assert!(mixed > lin);
    }

    #[test]
    fn zero_exponents_are_not_stored() {
        let m = Monomial::from_exponents([(x(1, 1), 0), (x(2, 1), 1)]);
        assert_eq!(m.exponent(&x(1, 1)), 0);
        assert_eq!(m.iter().count(), 1);
        assert_eq!(m.without_one(&x(2, 1)), Some(Monomial::one()));
        assert_eq!(m.without_one(&x(1, 1)), None);
    }

    #[test]
    fn display_forms() {
        let m = Monomial::from_exponents([(x(1, 1), 2), (VarId::param(3), 1)]);
        assert_eq!(m.to_string(), "x[1,1]^2*a[3]");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
