use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient variable count supported (`x0..x9`).
pub const MAX_VARS: usize = 10;

/// A power product `x0^a0 * ... * xn^an` in a fixed number of variables.
///
/// Exponents past `nvars` are always zero, so the derived `Eq`/`Hash` are
/// structural. `Ord` is the degree reverse lexicographic order with
/// `x0 > x1 > ... > xn`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8, degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn new(exps: &[u16]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Self::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| e as u32).sum();
        Ok(m)
    }

    /// Panicking convenience constructor for literals in tests and examples.
    pub fn from_exps(exps: &[u16]) -> Self {
        Self::new(exps).expect("valid exponent vector")
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Bit `i` is set when `x_i` occurs. Used as a cheap divisibility filter.
    pub fn support_mask(&self) -> u16 {
        let mut mask = 0u16;
        for i in 0..self.nvars as usize {
            if self.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] += other.exps[i];
        }
        m.degree += other.degree;
        m
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] -= other.exps[i];
        }
        m.degree -= other.degree;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut deg = 0;
        for i in 0..self.nvars as usize {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            deg += m.exps[i] as u32;
        }
        m.degree = deg;
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support_mask() & other.support_mask() == 0
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut m = *self;
        m.degree = m.degree - m.exps[i] as u32 + e as u32;
        m.exps[i] = e;
        m
    }

    pub fn mul_var(&self, i: usize, e: u16) -> Monomial {
        self.with_exponent(i, self.exps[i] + e)
    }

    /// Degree reverse lexicographic comparison; rejects mismatched lengths.
    pub fn degrevlex_compare(&self, other: &Monomial) -> Result<Ordering> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                expected: self.nvars as usize,
                found: other.nvars as usize,
            });
        }
        Ok(self.cmp(other))
    }

    /// Index of the last variable occurring in the monomial.
    pub fn last_variable(&self) -> Option<usize> {
        (0..self.nvars as usize).rev().find(|&i| self.exps[i] > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.nvars.cmp(&other.nvars) {
            Ordering::Equal => {}
            o => return o,
        }
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..self.nvars as usize).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                // a smaller exponent in the last differing slot wins
                o => return o.reverse(),
            }
        }
        Ordering::Equal
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
        for i in 0..self.nvars as usize {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn count_monomials(d: u32, nvars: usize) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    // C(d + n - 1, n - 1)
    let (top, k) = (d as u128 + nvars as u128 - 1, nvars as u128 - 1);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (top - j) / (j + 1);
    }
    acc as usize
}

/// All monomials of total degree `d` in `nvars` variables, sorted descending.
pub fn graded_basis(d: u32, nvars: usize) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(count_monomials(d, nvars));
    if nvars == 0 {
        return out;
    }
    let mut exps = vec![0u16; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i == n - 1 {
            exps[i] = left as u16;
            out.push(Monomial::from_exps(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e as u16;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn graded_dimension(d: u32, nvars: usize) -> usize {
    count_monomials(d, nvars)
}
