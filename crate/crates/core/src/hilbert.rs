//! Hilbert functions and Hilbert-Poincare series of monomial quotients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gin::{gin_saturate, regularity, rgin, GinOptions};
use crate::groebner::{Ideal, MonomialIdeal};
use crate::polyring::{graded_dimension, Monomial};

/// `HS(t) = numerator(t) / (1 - t)^dim` with all `(1 - t)` factors cancelled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// Coefficients of the numerator, lowest degree first. Empty for the zero ring.
    pub numerator: Vec<i64>,
    pub dim: i64,
}

impl HilbertSeries {
    pub fn is_zero_ring(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Numerator evaluated at `t = 1` (the multiplicity).
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    pub fn numerator_degree(&self) -> Option<usize> {
        self.numerator.len().checked_sub(1)
    }

    /// Coefficient of `t^d` in the expanded series.
    pub fn coefficient(&self, d: u32) -> i64 {
        let d = d as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(j, _)| *j as i64 <= d)
            .map(|(j, &c)| {
                let k = d - j as i64;
                if self.dim == 0 {
                    if k == 0 { c } else { 0 }
                } else {
                    c * binomial(k + self.dim - 1, self.dim - 1)
                }
            })
            .sum()
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i128 / (j + 1) as i128;
    }
    acc as i64
}

/// `dim (S/M)_d`: degree-`d` monomials outside `M`.
pub fn hilbert_function(ideal: &MonomialIdeal, d: u32) -> usize {
    if ideal.is_zero() {
        return graded_dimension(d, ideal.nvars());
    }
    if ideal.is_unit() {
        return 0;
    }
    ideal.standard_monomials(d).len()
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Numerator over `(1 - t)^n` by the pivot recursion
/// `N(M) = N(M + <x>) + t * N(M : x)`.
fn numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let mut counts = vec![0usize; nvars];
    for g in gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let (pivot, &most) = counts.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))).unwrap();
    if most <= 1 {
        // pairwise coprime generators: product of (1 - t^deg)
        let mut acc = vec![1i64];
        for g in gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (i, &c) in acc.iter().enumerate() {
                next[i + d] -= c;
            }
            acc = next;
        }
        return trim(acc);
    }
    let x = Monomial::var(nvars, pivot);
    let plus = MonomialIdeal::new(nvars, gens.iter().copied().chain(std::iter::once(x)));
    let colon = MonomialIdeal::new(nvars, gens.iter().copied()).colon_var(pivot);
    let mut out = numerator(plus.mingens(), nvars);
    poly_add(&mut out, &numerator(colon.mingens(), nvars), 1);
    trim(out)
}

pub fn hilbert_series(ideal: &MonomialIdeal) -> HilbertSeries {
    let n = ideal.nvars();
    let mut num = numerator(ideal.mingens(), n);
    if num.is_empty() {
        return HilbertSeries { numerator: num, dim: 0 };
    }
    let mut dim = n as i64;
    while dim > 0 && num.iter().sum::<i64>() == 0 {
        // divide by (1 - t): prefix sums
        let mut q = Vec::with_capacity(num.len() - 1);
        let mut acc = 0;
        for &c in &num[..num.len() - 1] {
            acc += c;
            q.push(acc);
        }
        num = trim(q);
        dim -= 1;
    }
    HilbertSeries { numerator: num, dim }
}

/// Krull dimension of `S/I`; the unit ideal is flagged separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientDimension {
    pub dim: i64,
    pub unit_ideal: bool,
}

pub fn quotient_dimension(ideal: &Ideal, opts: &GinOptions) -> Result<QuotientDimension> {
    let gin = rgin(ideal, opts)?;
    let hs = hilbert_series(&gin.result);
    Ok(QuotientDimension { dim: hs.dim, unit_ideal: hs.is_zero_ring() })
}

/// Numerator `F` of `HS(S/I^sat) = F / (1 - t)` for a one-dimensional quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableNumerator {
    pub numerator: Vec<i64>,
    pub degree: i64,
    pub multiplicity: i64,
}

pub fn stable_numerator(ideal: &Ideal, opts: &GinOptions) -> Result<StableNumerator> {
    let gin = rgin(ideal, opts)?;
    stable_numerator_from_gin(&gin.result)
}

pub(crate) fn stable_numerator_from_gin(gin: &MonomialIdeal) -> Result<StableNumerator> {
    let sat = gin_saturate(gin);
    let hs = hilbert_series(&sat);
    if hs.is_zero_ring() || hs.dim != 1 {
        return Err(Error::DimensionGuard {
            expected: "1".into(),
            found: if hs.is_zero_ring() { -1 } else { hs.dim },
        });
    }
    let degree = hs.numerator_degree().unwrap() as i64;
    let reg = regularity(&sat)? as i64;
    if degree != reg - 1 {
        return Err(Error::Invariant(format!("deg F = {degree} but reg(I^sat) - 1 = {}", reg - 1)));
    }
    Ok(StableNumerator { multiplicity: hs.multiplicity(), numerator: hs.numerator, degree })
}
