mod common;

use common::{borel_closure, ideal, monomial};
use leflab_core::gin::GinOptions;
use leflab_core::lefschetz::{classify_quotient, decide, decide_oracle, mult_rank_monomial, GradedQuotient, Property};
use leflab_core::polyring::{rat, Monomial, Polynomial};
use leflab_core::{Ideal, MonomialIdeal};
use proptest::prelude::*;

fn times(f: &Polynomial, n: usize) -> Vec<Polynomial> {
    (0..n).map(|i| f * &Polynomial::var(n, i)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn fast_path_agrees_with_the_oracle(i in ideal(3, 2..=4, 3)) {
        let opts = GinOptions::default();
        for p in [Property::Wlp, Property::Slp] {
            let fast = decide(&i, p, &opts).unwrap();
            let slow = decide_oracle(&i, p, &opts).unwrap();
            prop_assert_eq!(fast.holds, slow.holds, "{} on {}", p, i);
            let ranks = |r: &leflab_core::lefschetz::LefschetzReport| {
                r.profile.iter().map(|x| (x.i, x.s, x.rank)).collect::<Vec<_>>()
            };
            prop_assert_eq!(ranks(&fast), ranks(&slow));
        }
    }

    #[test]
    fn monomial_ranks_match_linear_algebra(seeds in proptest::collection::vec(monomial(3, 3), 1..=3), i in 0u32..5, s in 1u32..4) {
        let seeds: Vec<Monomial> = seeds.into_iter().filter(|m| !m.is_one()).collect();
        prop_assume!(!seeds.is_empty());
        let m = borel_closure(3, &seeds);
        let rec = mult_rank_monomial(&m, i, s);
        let mut q = GradedQuotient::new(&Ideal::from_monomial_ideal(&m));
        let f = Polynomial::from_monomial(Monomial::var(3, 2), rat(1)).pow(s);
        let la = q.multiplication_rank(&f, i);
        prop_assert_eq!((rec.source_dim, rec.target_dim, rec.rank), (la.source_dim, la.target_dim, la.rank));
    }

    #[test]
    fn large_dimension_trichotomy(f in (1u32..=3).prop_flat_map(|d| common::form(4, d)), g in (1u32..=2).prop_flat_map(|d| common::form(4, d)), kind in 0usize..3) {
        let gens = match kind {
            0 => vec![f],
            1 => vec![f, g],
            _ => times(&f, 4),
        };
        let i = Ideal::new(4, gens).unwrap();
        let c = classify_quotient(&i, &GinOptions::default()).unwrap();
        prop_assume!(c.theorem_applies);
        prop_assert!(c.equivalences_consistent);
        prop_assert_eq!(c.saturated, c.slp);
        prop_assert_eq!(c.slp, c.wlp);
        prop_assert_eq!(c.saturated, kind != 2);
    }
}

#[test]
fn artinian_monomial_examples() {
    let opts = GinOptions::default();
    // a complete intersection of quadrics has the SLP
    let ci = Ideal::parse("x0^2, x1^2, x2^2", 3).unwrap();
    assert!(decide(&ci, Property::Slp, &opts).unwrap().holds);
    // x0*x1*x2 with the cubes fails the WLP from degree 2 to 3 (6 -> 6, one kernel vector)
    let fails = Ideal::parse("x0^3, x1^3, x2^3, x0*x1*x2", 3).unwrap();
    let r = decide(&fails, Property::Wlp, &opts).unwrap();
    assert!(!r.holds);
    assert!(r.failures.iter().any(|f| f.i == 2 && f.source_dim == 6 && f.target_dim == 6));
    assert!(!decide_oracle(&fails, Property::Wlp, &opts).unwrap().holds);
}

#[test]
fn maximal_power_truncations() {
    let m = MonomialIdeal::maximal_power(3, 4);
    let r = mult_rank_monomial(&m, 2, 1);
    assert_eq!((r.source_dim, r.target_dim, r.rank), (6, 10, 6));
    let r = mult_rank_monomial(&m, 3, 1);
    assert_eq!((r.source_dim, r.target_dim), (10, 0));
}

#[test]
fn unequal_degrees_break_the_numerator_identity() {
    // V(I) is the reduced point [0:0:1]: deg F = 0 while m(I) = 4 from the two quadrics
    let p = |s: &str| leflab_core::polyring::parse_polynomial(s, 3).unwrap();
    let r = leflab_core::lefschetz::aci_analyze(&p("x^2 + y*z"), &p("x*y + y*z"), &p("y^3 + x*z^2"), &GinOptions::default())
        .unwrap();
    assert_eq!((r.m, r.deg_f, r.multiplicity), (4, 0, 1));
    assert!(r.violations.iter().any(|v| v.starts_with("deg F = 0")));
    assert!(r.wlp.holds);
}
