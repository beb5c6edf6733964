mod common;

use common::{borel_closure, hf_brute, ideal, monomial, standard_count};
use leflab_core::gin::{gin_is_saturated, gin_saturate, is_strongly_stable, regularity, rgin, GinOptions};
use leflab_core::hilbert::hilbert_function;
use leflab_core::polyring::Monomial;
use leflab_core::{Ideal, MonomialIdeal};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gin_is_strongly_stable_with_the_same_hilbert_function(i in ideal(4, 1..=3, 3)) {
        let cert = rgin(&i, &GinOptions::default()).unwrap();
        let gin = &cert.result;
        prop_assert!(is_strongly_stable(gin));
        prop_assert!(cert.strongly_stable);
        let reg = regularity(gin).unwrap();
        for d in 0..=reg + 2 {
            prop_assert_eq!(hilbert_function(gin, d), hf_brute(i.generators(), 4, d), "degree {}", d);
        }
    }

    #[test]
    fn gin_does_not_depend_on_the_seed(i in ideal(3, 1..=3, 3), a in any::<u64>(), b in any::<u64>()) {
        let ga = rgin(&i, &GinOptions::with_seed(a)).unwrap().result;
        let gb = rgin(&i, &GinOptions::with_seed(b)).unwrap().result;
        prop_assert_eq!(ga, gb);
    }

    #[test]
    fn strongly_stable_ideals_are_their_own_gin(seeds in proptest::collection::vec(monomial(3, 3), 1..=3)) {
        let seeds: Vec<Monomial> = seeds.into_iter().filter(|m| !m.is_one()).collect();
        prop_assume!(!seeds.is_empty());
        let m = borel_closure(3, &seeds);
        prop_assert!(is_strongly_stable(&m));
        let gin = rgin(&Ideal::from_monomial_ideal(&m), &GinOptions::default()).unwrap().result;
        prop_assert_eq!(gin, m);
    }

    #[test]
    fn saturating_a_gin(seeds in proptest::collection::vec(monomial(3, 3), 1..=3)) {
        let seeds: Vec<Monomial> = seeds.into_iter().filter(|m| !m.is_one()).collect();
        prop_assume!(!seeds.is_empty());
        let m = borel_closure(3, &seeds);
        let sat = gin_saturate(&m);
        prop_assert!(gin_is_saturated(&sat));
        prop_assert!(sat.mingens().iter().all(|g| g.exponent(2) == 0));
        // M : x2^inf, checked degree by degree
        for d in 0..=6 {
            for u in leflab_core::polyring::graded_basis(d, 3) {
                let in_colon = (0..=12u16).any(|e| m.contains(&u.mul_var(2, e)));
                prop_assert_eq!(sat.contains(&u), in_colon, "{}", u);
            }
        }
    }
}

#[test]
fn regularity_of_strongly_stable_ideals() {
    // generated in degree <= 3 with x1^3 the largest generator
    let m = borel_closure(3, &[Monomial::from_exps(&[0, 3, 0])]);
    assert_eq!(m, MonomialIdeal::maximal_power(2, 3).mingens().iter().fold(MonomialIdeal::zero(3), |acc, g| {
        acc.sum(&MonomialIdeal::new(3, [Monomial::from_exps(&[g.exponent(0), g.exponent(1), 0])]))
    }));
    assert_eq!(regularity(&m).unwrap(), 3);
    assert_eq!(standard_count(&m, 2), 6);
}

#[test]
fn gin_of_two_quadrics() {
    let i = Ideal::parse("x0^2, x1^2", 3).unwrap();
    let gin = rgin(&i, &GinOptions::default()).unwrap().result;
    assert_eq!(gin.to_string(), "<x0*x1, x0^2, x1^3>");
}
