use num_traits::{One, Zero};

use super::poly::{Polynomial, Rational};
use crate::error::{Error, Result};

/// An invertible linear substitution `x_i -> sum_j m[i][j] x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    matrix: Vec<Vec<Rational>>,
    inverse: Vec<Vec<Rational>>,
}

impl LinearChange {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::VariableCountMismatch { expected: n, found: matrix.iter().map(Vec::len).find(|&l| l != n).unwrap() });
        }
        let inverse = invert(&matrix).ok_or(Error::SingularChange)?;
        Ok(LinearChange { matrix, inverse })
    }

    pub fn from_integers(matrix: &[Vec<i64>]) -> Result<Self> {
        Self::new(matrix.iter().map(|r| r.iter().map(|&v| super::poly::rat(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let id: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        LinearChange { matrix: id.clone(), inverse: id }
    }

    pub fn nvars(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &[Vec<Rational>] {
        &self.inverse
    }

    pub fn inverse(&self) -> LinearChange {
        LinearChange { matrix: self.inverse.clone(), inverse: self.matrix.clone() }
    }

    /// Matrix product `self * other`; applying it equals applying `self` then `other`.
    pub fn compose(&self, other: &LinearChange) -> LinearChange {
        LinearChange { matrix: matmul(&self.matrix, &other.matrix), inverse: matmul(&other.inverse, &self.inverse) }
    }

    /// The linear form that `x_i` is sent to.
    pub fn image_of_var(&self, i: usize) -> Polynomial {
        Polynomial::linear_form(&self.matrix[i])
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let n = self.nvars();
        if f.nvars() != n {
            return Err(Error::VariableCountMismatch { expected: n, found: f.nvars() });
        }
        let images: Vec<Polynomial> = (0..n).map(|i| self.image_of_var(i)).collect();
        // powers[i][e] = images[i]^e, grown lazily
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|_| vec![Polynomial::one(n)]).collect();
        let mut acc = Polynomial::zero(n);
        for (m, c) in f.terms() {
            let mut term = Polynomial::constant(n, c.clone());
            for i in 0..n {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, piv);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &aug[col][c];
                    aug[r][c] -= delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
