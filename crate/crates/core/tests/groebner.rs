mod common;

use common::{coefficient_row, forms, hf_brute, ideal, standard_count};
use leflab_core::groebner::{ideal_quotient, normal_form, saturate};
use leflab_core::polyring::{graded_basis, rat, Polynomial};
use leflab_core::Ideal;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn combinations_of_generators_are_members(
        gens in forms(3, 1..=3, 3),
        mults in proptest::collection::vec(common::polynomial(3, 3, 2), 3),
    ) {
        let i = Ideal::new(3, gens.clone()).unwrap();
        let combo = gens.iter().zip(&mults).fold(Polynomial::zero(3), |acc, (g, m)| &acc + &(g * m));
        prop_assert!(i.contains(&combo));
        for g in i.groebner_basis().elements() {
            prop_assert!(i.contains(g));
            prop_assert!(normal_form(g, i.groebner_basis()).is_zero());
        }
    }

    #[test]
    fn normal_form_differs_by_a_member(i in ideal(3, 1..=3, 3), f in common::polynomial(3, 5, 4)) {
        let r = normal_form(&f, i.groebner_basis());
        prop_assert!(i.contains(&(&f - &r)));
        // no term of the remainder is divisible by a leading monomial
        let lt = i.leading_term_ideal();
        prop_assert!(r.terms().iter().all(|(m, _)| !lt.contains(m)));
        prop_assert_eq!(r.is_zero(), i.contains(&f));
    }

    #[test]
    fn generator_order_does_not_matter(gens in forms(3, 2..=4, 3), rot in 0usize..4) {
        let mut shuffled = gens.clone();
        shuffled.reverse();
        let len = shuffled.len();
        shuffled.rotate_left(rot % len);
        let a = Ideal::new(3, gens).unwrap();
        let b = Ideal::new(3, shuffled).unwrap();
        prop_assert_eq!(a.groebner_basis().elements(), b.groebner_basis().elements());
        prop_assert_eq!(a.leading_term_ideal(), b.leading_term_ideal());
    }

    #[test]
    fn hilbert_function_of_initial_ideal(gens in forms(4, 1..=3, 3)) {
        let i = Ideal::new(4, gens.clone()).unwrap();
        let lt = i.leading_term_ideal();
        for d in 0..=6 {
            prop_assert_eq!(standard_count(&lt, d), hf_brute(&gens, 4, d), "degree {}", d);
        }
    }

    #[test]
    fn quotients_and_saturations(i in ideal(3, 1..=3, 2), f in common::form(3, 1)) {
        let q = ideal_quotient(&i, &f).unwrap();
        for g in i.generators() {
            prop_assert!(q.contains(g));
        }
        for g in q.generators() {
            prop_assert!(i.contains(&(g * &f)));
        }
        let s = saturate(&i, &f).unwrap();
        for g in q.generators() {
            prop_assert!(s.contains(g));
        }
        // saturating twice changes nothing
        prop_assert_eq!(saturate(&s, &f).unwrap(), s);
    }
}

#[test]
fn twisted_cubic() {
    let i = Ideal::parse("x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2", 4).unwrap();
    let lt = i.leading_term_ideal();
    // HF(S/I, d) = 3d + 1
    for d in 0..8 {
        assert_eq!(standard_count(&lt, d), 3 * d as usize + 1);
    }
    let basis = graded_basis(2, 4);
    let row = coefficient_row(&i.generators()[0], &basis);
    assert_eq!(row.iter().filter(|c| **c != rat(0)).count(), 2);
}

#[test]
fn unit_and_zero_ideals() {
    let unit = Ideal::parse("x0, x1, x0 + 1", 2);
    assert!(unit.is_err(), "inhomogeneous generators are rejected");
    assert!(Ideal::unit(3).is_unit());
    assert!(Ideal::zero(3).is_zero());
    assert!(Ideal::new(3, vec![Polynomial::zero(3)]).unwrap().is_zero());
}
