mod common;

use common::{form, forms};
use leflab_core::linalg;
use leflab_core::polyring::{graded_basis, Polynomial};
use leflab_core::syzygy::{min_syzygy_degree, minimal_ideal_generators, presentation, syzygies};
use leflab_core::Ideal;
use proptest::prelude::*;

/// Smallest module degree carrying a nonzero syzygy, by kernel ranks.
fn first_syzygy_degree(forms: &[Polynomial]) -> i64 {
    let n = forms[0].nvars();
    let degs: Vec<u32> = forms.iter().map(|f| f.homogeneous_degree().unwrap()).collect();
    for t in *degs.iter().min().unwrap().. {
        let target = graded_basis(t, n);
        let mut rows = Vec::new();
        for (f, &d) in forms.iter().zip(&degs) {
            if t >= d {
                for u in graded_basis(t - d, n) {
                    rows.push(common::coefficient_row(&f.mul_monomial(&u), &target));
                }
            }
        }
        if linalg::rank(&rows) < rows.len() {
            return t as i64;
        }
    }
    unreachable!()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn syzygies_are_relations(gens in forms(3, 2..=3, 3)) {
        let degs: Vec<i64> = gens.iter().map(|g| g.homogeneous_degree().unwrap() as i64).collect();
        let syz = syzygies(&gens, &degs).unwrap();
        prop_assert!(!syz.is_empty());
        for s in &syz {
            prop_assert!(s.dot(&gens).is_zero());
        }
        let lowest = syz.iter().filter_map(|s| s.degree()).min().unwrap();
        prop_assert_eq!(lowest, first_syzygy_degree(&gens));
        // every Koszul relation lies in the span, so nothing is lower than it
        let koszul = degs[0] + degs[1];
        prop_assert!(lowest <= koszul);
        let pres = presentation(&syz).unwrap();
        prop_assert_eq!(pres.generator_degrees.first().copied(), Some(lowest));
    }

    #[test]
    fn minimal_generators_span_the_same_ideal(gens in forms(3, 1..=3, 2), extra in (1u32..=2).prop_flat_map(|d| form(3, d))) {
        let mut all = gens.clone();
        all.push(&gens[0] * &extra);
        all.push(&gens[0] + &gens[0]);
        let minimal = minimal_ideal_generators(&all);
        prop_assert!(minimal.len() <= gens.len());
        prop_assert_eq!(Ideal::new(3, minimal).unwrap(), Ideal::new(3, gens).unwrap());
    }
}

#[test]
fn three_points() {
    let p = |s: &str| leflab_core::polyring::parse_polynomial(s, 3).unwrap();
    assert_eq!(min_syzygy_degree(&p("x1*x2"), &p("x0*x2"), &p("x0*x1")).unwrap(), 3);
    // dimension 0 is refused
    assert!(min_syzygy_degree(&p("x0"), &p("x1"), &p("x2")).is_err());
}
