#![allow(dead_code)]

use leflab_core::linalg;
use leflab_core::polyring::{graded_basis, rat, Monomial, Polynomial, Rational};
use leflab_core::{Ideal, MonomialIdeal};
use proptest::prelude::*;

pub fn monomial(n: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::from_exps(&e))
}

/// Arbitrary (usually inhomogeneous) polynomial.
pub fn polynomial(n: usize, max_terms: usize, max_exp: u16) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((monomial(n, max_exp), -9i64..=9), 0..=max_terms)
        .prop_map(move |terms| Polynomial::from_terms(n, terms.into_iter().map(|(m, c)| (m, rat(c)))))
}

/// Nonzero form of degree `d` with up to four terms.
pub fn form(n: usize, d: u32) -> impl Strategy<Value = Polynomial> {
    let basis = graded_basis(d, n);
    let len = basis.len();
    proptest::collection::vec((0..len, -5i64..=5), 1..=4)
        .prop_map(move |terms| Polynomial::from_terms(n, terms.into_iter().map(|(k, c)| (basis[k], rat(c)))))
        .prop_filter("nonzero", |f| !f.is_zero())
}

pub fn forms(n: usize, count: std::ops::RangeInclusive<usize>, max_d: u32) -> impl Strategy<Value = Vec<Polynomial>> {
    proptest::collection::vec(1..=max_d, count).prop_flat_map(move |ds| ds.into_iter().map(|d| form(n, d)).collect::<Vec<_>>())
}

/// Proper homogeneous ideal from a few random forms.
pub fn ideal(n: usize, count: std::ops::RangeInclusive<usize>, max_d: u32) -> impl Strategy<Value = Ideal> {
    forms(n, count, max_d)
        .prop_map(move |g| Ideal::new(n, g).unwrap())
        .prop_filter("proper", |i| !i.is_unit())
}

pub fn monomial_ideal(n: usize, max_gens: usize, max_exp: u16) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(monomial(n, max_exp), 1..=max_gens)
        .prop_map(move |g| MonomialIdeal::new(n, g.into_iter().filter(|m| !m.is_one())))
}

/// Smallest strongly stable ideal containing the given monomials.
pub fn borel_closure(n: usize, seeds: &[Monomial]) -> MonomialIdeal {
    let mut all: Vec<Monomial> = seeds.to_vec();
    let mut k = 0;
    while k < all.len() {
        let m = all[k];
        for j in 1..n {
            if m.exponent(j) == 0 {
                continue;
            }
            for i in 0..j {
                let moved = m.with_exponent(j, m.exponent(j) - 1).mul_var(i, 1);
                if !all.contains(&moved) {
                    all.push(moved);
                }
            }
        }
        k += 1;
    }
    MonomialIdeal::new(n, all)
}

pub fn coefficient_row(p: &Polynomial, basis: &[Monomial]) -> Vec<Rational> {
    basis.iter().map(|m| p.coefficient(m)).collect()
}

/// `dim_K (S/I)_d` as `dim S_d` minus the rank of `{u * f}` spanning `I_d`.
/// Needs nothing but the generators and linear algebra.
pub fn hf_brute(gens: &[Polynomial], n: usize, d: u32) -> usize {
    let basis = graded_basis(d, n);
    let mut rows = Vec::new();
    for f in gens {
        let fd = f.homogeneous_degree().unwrap();
        if fd > d {
            continue;
        }
        for u in graded_basis(d - fd, n) {
            rows.push(coefficient_row(&f.mul_monomial(&u), &basis));
        }
    }
    basis.len() - linalg::rank(&rows)
}

/// Number of degree-`d` monomials outside `m`.
pub fn standard_count(m: &MonomialIdeal, d: u32) -> usize {
    graded_basis(d, m.nvars()).iter().filter(|u| !m.contains(u)).count()
}
