//! Randomized algebraic properties: ring axioms, homomorphisms, derivations,
//! kernel exactness, and the group laws of the reparametrization action.

use std::collections::BTreeMap;

use num_traits::Zero;
use proptest::prelude::*;

use jetcalc::jetcore::{faa_di_bruno, JetConfig, JetPolynomial, Reparametrization};
use jetcalc::ratpoly::{nullspace, rank, rat, Monomial, Polynomial, QMatrix, Rational, VarId};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn jet_var(k: u32, r: u32) -> impl Strategy<Value = VarId> {
    (1..=r, 1..=k).prop_map(|(j, s)| VarId::jet(j, s))
}

fn monomial(k: u32, r: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec((jet_var(k, r), 1u32..=3), 0..3)
        .prop_map(Monomial::from_exponents)
}

fn polynomial(k: u32, r: u32) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((small_rational(), monomial(k, r)), 0..4)
        .prop_map(Polynomial::from_terms)
}

fn concrete_repar(k: u32) -> impl Strategy<Value = Reparametrization> {
    (
        nonzero_rational(),
        proptest::collection::vec(small_rational(), (k - 1) as usize),
    )
        .prop_map(|(a1, rest)| {
            let mut coeffs = vec![a1];
            coeffs.extend(rest);
            Reparametrization::concrete(coeffs).expect("a_1 nonzero")
        })
}

proptest! {
    #[test]
    fn ring_axioms(
        a in polynomial(3, 2),
        b in polynomial(3, 2),
        c in polynomial(3, 2),
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn canonical_form_is_idempotent(a in polynomial(3, 2)) {
        // Rebuilding from the term stream and reparsing the text form are
        // both identities on canonical polynomials.
        let rebuilt = Polynomial::from_terms(a.iter().map(|(m, c)| (c.clone(), m.clone())));
        prop_assert_eq!(&rebuilt, &a);
        let reparsed = Polynomial::parse(&a.to_string()).unwrap();
        prop_assert_eq!(reparsed, a);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        a in polynomial(2, 2),
        b in polynomial(2, 2),
        img in proptest::collection::vec(polynomial(2, 2), 4),
    ) {
        let vars: Vec<VarId> = JetConfig::new(2, 2).jet_vars().collect();
        let rules: BTreeMap<VarId, Polynomial> =
            vars.into_iter().zip(img).collect();
        let sum = (&a + &b).substitute(&rules).unwrap();
        prop_assert_eq!(sum, &a.substitute(&rules).unwrap() + &b.substitute(&rules).unwrap());
        let prod = (&a * &b).substitute(&rules).unwrap();
        prop_assert_eq!(prod, &a.substitute(&rules).unwrap() * &b.substitute(&rules).unwrap());
    }

    #[test]
    fn derivation_is_linear_and_leibniz(
        a in polynomial(2, 2),
        b in polynomial(2, 2),
        img in proptest::collection::vec(polynomial(2, 2), 4),
    ) {
        let vars: Vec<VarId> = JetConfig::new(2, 2).jet_vars().collect();
        let rules: BTreeMap<VarId, Polynomial> =
            vars.into_iter().zip(img).collect();
        let d = |p: &Polynomial| p.derive(&rules).unwrap();
        prop_assert_eq!(d(&(&a + &b)), &d(&a) + &d(&b));
        prop_assert_eq!(d(&(&a * &b)), &(&d(&a) * &b) + &(&a * &d(&b)));
    }

    #[test]
    fn kernel_vectors_are_exact(
        entries in proptest::collection::vec(small_rational(), 12),
    ) {
        let rows: Vec<Vec<Rational>> = entries.chunks(4).map(|c| c.to_vec()).collect();
        let m = QMatrix::from_rows(rows);
        let basis = nullspace(&m);
        prop_assert_eq!(rank(&m) + basis.len(), m.cols());
        for v in &basis {
            prop_assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn pullback_is_contravariant(
        body in polynomial(3, 2),
        phi in concrete_repar(3),
        psi in concrete_repar(3),
    ) {
        let config = JetConfig::new(3, 2);
        let p = JetPolynomial::new(body, config).unwrap();
        let lhs = p.pullback(&phi).unwrap().pullback(&psi).unwrap();
        let rhs = p.pullback(&psi.compose(&phi).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pullback_identity_and_weight(
        body in polynomial(3, 2),
    ) {
        let config = JetConfig::new(3, 2);
        let p = JetPolynomial::new(body, config).unwrap();
        prop_assert_eq!(p.pullback(&Reparametrization::identity(3)).unwrap(), p.clone());

        // Homogenize by picking the top-weight slice, then check the formal
        // pullback keeps that weight.
        if let Some(top) = p.body().weighted_degree() {
            let slice = Polynomial::from_terms(
                p.body()
                    .iter()
                    .filter(|(m, _)| m.weight() == top)
                    .map(|(m, c)| (c.clone(), m.clone())),
            );
            let hp = JetPolynomial::new(slice, config).unwrap();
            let pulled = hp.pullback(&Reparametrization::formal(3)).unwrap();
            prop_assert_eq!(pulled.weight(), Some(top));
        }
    }

    #[test]
    fn composition_is_associative(
        phi in concrete_repar(4),
        psi in concrete_repar(4),
        chi in concrete_repar(4),
    ) {
        let left = phi.compose(&psi).unwrap().compose(&chi).unwrap();
        let right = phi.compose(&psi.compose(&chi).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_composes_to_identity(phi in concrete_repar(4)) {
        let inv = phi.invert().unwrap();
        prop_assert_eq!(phi.compose(&inv).unwrap(), Reparametrization::identity(4));
        prop_assert_eq!(inv.compose(&phi).unwrap(), Reparametrization::identity(4));
    }

    #[test]
    fn total_derivative_leibniz_and_weight(
        a in polynomial(2, 2),
        b in polynomial(2, 2),
    ) {
        let config = JetConfig::new(2, 2);
        let pa = JetPolynomial::new(a.clone(), config).unwrap();
        let pb = JetPolynomial::new(b.clone(), config).unwrap();
        let prod = JetPolynomial::new(&a * &b, config).unwrap();
        let lhs = prod.total_derivative();
        let rhs = &(pa.total_derivative().body() * &b) + &(&a * pb.total_derivative().body());
        prop_assert_eq!(lhs.body(), &rhs);

        if let (Some(w), false) = (pa.weight(), pa.is_zero()) {
            let dw = pa.total_derivative();
            if !dw.is_zero() {
                prop_assert_eq!(dw.weight(), Some(w + 1));
            }
        }
    }
}

/// The matrix of a composition is the product of the matrices, as an exact
/// polynomial identity in two disjoint families of formal coefficients.
#[test]
fn faa_di_bruno_is_a_group_homomorphism() {
    for k in 2..=4u32 {
        let template = faa_di_bruno(k);
        let phi = Reparametrization::new(
            (1..=k).map(|i| Polynomial::var(VarId::param(i))).collect(),
        )
        .unwrap();
        let psi = Reparametrization::new(
            (1..=k)
                .map(|i| Polynomial::var(VarId::param(k + i)))
                .collect(),
        )
        .unwrap();
        let composed = phi.compose(&psi).unwrap();
        let lhs = template.specialize(&composed).unwrap();
        let rhs = template
            .specialize(&phi)
            .unwrap()
            .matrix_mul(&template.specialize(&psi).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "k={k}");
    }
}
