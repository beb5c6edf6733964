mod common;

use common::{form, monomial, polynomial};
use leflab_core::polyring::{parse_polynomial, rat, LinearChange, Monomial, Polynomial};
use proptest::prelude::*;

fn invertible(n: usize) -> impl Strategy<Value = LinearChange> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), n)
        .prop_filter_map("singular", |m| LinearChange::from_integers(&m).ok())
}

proptest! {
    #[test]
    fn ring_axioms(a in polynomial(3, 5, 3), b in polynomial(3, 5, 3), c in polynomial(3, 5, 3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-&(-&a), a.clone());
        prop_assert_eq!(&a * &Polynomial::one(3), a);
    }

    #[test]
    fn display_parses_back(p in polynomial(4, 6, 4)) {
        prop_assert_eq!(parse_polynomial(&p.to_string(), 4).unwrap(), p);
    }

    #[test]
    fn degrevlex_is_a_monomial_order(a in monomial(4, 4), b in monomial(4, 4), c in monomial(4, 4)) {
        if a < b {
            prop_assert!(a.mul(&c) < b.mul(&c));
        }
        if a.degree() < b.degree() {
            prop_assert!(a < b);
        }
        prop_assert!(Monomial::one(4) <= a);
    }

    #[test]
    fn leibniz_rule(a in polynomial(3, 4, 3), b in polynomial(3, 4, 3), i in 0usize..3) {
        let lhs = (&a * &b).partial_derivative(i);
        let rhs = &(&a.partial_derivative(i) * &b) + &(&a * &b.partial_derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_relation(f in (1u32..=4).prop_flat_map(|d| form(3, d))) {
        let d = f.homogeneous_degree().unwrap() as i64;
        let euler = (0..3).fold(Polynomial::zero(3), |acc, i| &acc + &(&Polynomial::var(3, i) * &f.partial_derivative(i)));
        prop_assert_eq!(euler, f.scale(&rat(d)));
    }

    #[test]
    fn linear_change_is_an_invertible_ring_map(g in invertible(3), a in polynomial(3, 4, 3), b in polynomial(3, 4, 3)) {
        let ga = g.apply(&a).unwrap();
        prop_assert_eq!(g.inverse().apply(&ga).unwrap(), a.clone());
        prop_assert_eq!(g.apply(&(&a * &b)).unwrap(), &ga * &g.apply(&b).unwrap());
        prop_assert_eq!(g.apply(&(&a + &b)).unwrap(), &ga + &g.apply(&b).unwrap());
        let h = g.compose(&g.inverse());
        prop_assert_eq!(h.apply(&a).unwrap(), a);
    }

    #[test]
    fn homogeneity_survives_linear_changes(g in invertible(4), f in (1u32..=3).prop_flat_map(|d| form(4, d))) {
        let gf = g.apply(&f).unwrap();
        prop_assert_eq!(gf.homogeneous_degree(), f.homogeneous_degree());
    }
}

#[test]
fn parse_examples() {
    let p = parse_polynomial("3*x^2*y - 1/2*z + x*y*x", 3).unwrap();
    assert_eq!(p.to_string(), "4*x0^2*x1 - 1/2*x2");
    assert!(parse_polynomial("x0 +", 2).is_err());
    assert!(parse_polynomial("x5", 3).is_err());
}
