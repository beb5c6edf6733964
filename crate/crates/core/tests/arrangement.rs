use leflab_core::arrangement::{
    analyze, corpus_member, derivation_presentation, gin_shape_freeness, is_essential, jacobian_ideal,
    AnalysisOptions, Arrangement, CorpusSpec,
};
use leflab_core::gin::GinOptions;
use leflab_core::polyring::Polynomial;
use leflab_core::Ideal;
use proptest::prelude::*;

/// Laplace expansion; fine for the 3x3 and 4x4 matrices used here.
fn det(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let nvars = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(nvars);
    for j in 0..n {
        let minor: Vec<Vec<Polynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect()).collect();
        let term = &m[0][j] * &det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Every generator is a logarithmic derivation, and for free arrangements
/// the coefficient matrix of a basis has determinant a nonzero multiple of Q.
fn check_derivations(a: &Arrangement) -> Result<(), TestCaseError> {
    let n = a.nvars();
    let pres = derivation_presentation(a).unwrap();
    for g in &pres.generators {
        let theta = &g.components()[..n];
        for alpha in a.forms() {
            let image = (0..n).fold(Polynomial::zero(n), |acc, i| &acc + &(&theta[i] * &alpha.partial_derivative(i)));
            prop_assert!(Ideal::new(n, vec![alpha.clone()]).unwrap().contains(&image));
        }
    }
    if pres.is_free {
        prop_assert_eq!(pres.generators.len(), n);
        let m: Vec<Vec<Polynomial>> = pres.generators.iter().map(|g| g.components()[..n].to_vec()).collect();
        let dt = det(&m);
        let q = a.defining_polynomial();
        prop_assert!(!dt.is_zero());
        let ratio = dt.leading_coefficient().unwrap() / q.leading_coefficient().unwrap();
        prop_assert_eq!(dt, q.scale(&ratio));
        prop_assert_eq!(pres.generator_pdegrees.iter().sum::<i64>(), a.len() as i64);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn plane_corpus_is_consistent(index in 0usize..200) {
        let a = corpus_member(&CorpusSpec::new(200, 3, 3, 6, 11), index);
        prop_assert!(is_essential(&a));
        let r = analyze(&a, &AnalysisOptions::default()).unwrap();
        prop_assert!(r.violations().is_empty(), "{:?}", r.violations());
        prop_assert_eq!(r.free, r.gin_shape.free);
        prop_assert!(r.wlp);
        if let Some(e) = &r.exponents {
            prop_assert_eq!(e.iter().sum::<i64>(), a.len() as i64);
        }
        check_derivations(&a)?;
    }

    #[test]
    fn reordering_hyperplanes_changes_nothing(index in 0usize..50, rot in 1usize..6) {
        let a = corpus_member(&CorpusSpec::new(50, 3, 3, 6, 5), index);
        let mut rows: Vec<Vec<i64>> = a.rows().iter().map(|r| r.iter().map(|c| c.to_integer().try_into().unwrap()).collect()).collect();
        let len = rows.len();
        rows.rotate_left(rot % len);
        let b = Arrangement::from_integers(3, &rows).unwrap();
        let (ra, rb) = (analyze(&a, &Default::default()).unwrap(), analyze(&b, &Default::default()).unwrap());
        prop_assert_eq!(ra.gin_generators, rb.gin_generators);
        prop_assert_eq!(ra.derivations.generator_pdegrees, rb.derivations.generator_pdegrees);
        prop_assert_eq!((ra.wlp, ra.slp, ra.free), (rb.wlp, rb.slp, rb.free));
    }

    #[test]
    fn text_round_trip(index in 0usize..50) {
        let a = corpus_member(&CorpusSpec::new(50, 4, 4, 7, 3), index);
        let b = Arrangement::parse(&a.to_text()).unwrap();
        prop_assert_eq!(a.rows(), b.rows());
    }
}

#[test]
fn space_corpus_has_no_violations() {
    let spec = CorpusSpec::new(8, 4, 4, 5, 21);
    for k in 0..spec.count {
        let a = corpus_member(&spec, k);
        let r = analyze(&a, &AnalysisOptions::default()).unwrap();
        assert!(r.violations().is_empty(), "corpus-{k}: {:?}", r.violations());
        check_derivations(&a).unwrap();
    }
}

#[test]
fn plus_one_generated_in_four_variables() {
    let a = corpus_member(&CorpusSpec::new(30, 4, 4, 6, 7), 5);
    let rows: Vec<Vec<i64>> = vec![vec![-1, -2, 2, 0], vec![2, -2, -2, 0], vec![3, 0, 3, 3], vec![-2, -3, 0, -3], vec![-1, -2, 3, -1]];
    assert_eq!(a.rows(), Arrangement::from_integers(4, &rows).unwrap().rows());
    let r = analyze(&a, &AnalysisOptions::default()).unwrap();
    assert!(r.plus_one.plus_one && !r.free);
    assert_eq!(r.plus_one.exponents, vec![1, 1, 2, 2]);
    assert_eq!(r.plus_one.level, Some(2));
    assert_eq!(r.plus_one.rank_consistent, Some(true));
    assert!(r.slp);
}

#[test]
fn braid_arrangement() {
    let rows = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1]];
    let a = Arrangement::from_integers(3, &rows).unwrap();
    assert!(gin_shape_freeness(&a, &GinOptions::default()).unwrap().free);
    let d = derivation_presentation(&a).unwrap();
    assert_eq!(d.generator_pdegrees, vec![1, 2, 3]);
    check_derivations(&a).unwrap();
    // Q is in the ideal of partials
    assert!(jacobian_ideal(&a).contains(&a.defining_polynomial()));
}
