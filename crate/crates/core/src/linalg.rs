//! Exact linear algebra over the rationals on dense vectors.
//!
//! Rows are kept fraction-free: rationals are cleared to primitive integer
//! vectors and elimination uses cross-multiplication followed by content
//! removal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::Rational;

/// Clears denominators and divides out the content.
pub fn to_integer_row(v: &[Rational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in v {
        if !c.is_zero() {
            den = den.lcm(c.denom());
        }
    }
    let mut row: Vec<BigInt> = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for c in row.iter() {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for c in row.iter_mut() {
        if !c.is_zero() {
            *c = &*c / &g;
        }
    }
}

/// Row echelon form built incrementally.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows, up to a nonzero scalar.
    pub fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        debug_assert_eq!(v.len(), self.ncols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let g = row[p].gcd(&v[p]);
            let a = &row[p] / &g;
            let b = &v[p] / &g;
            for c in 0..self.ncols {
                if row[c].is_zero() {
                    if !a.is_one() {
                        v[c] *= &a;
                    }
                    continue;
                }
                v[c] = &v[c] * &a - &b * &row[c];
            }
            make_primitive(&mut v);
        }
        v
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        let mut v = self.reduce(v);
        let Some(lead) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        make_primitive(&mut v);
        if v[lead].is_negative() {
            for c in v.iter_mut() {
                *c = -&*c;
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, v);
        true
    }

    pub fn insert_rational(&mut self, v: &[Rational]) -> bool {
        self.insert(to_integer_row(v))
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(to_integer_row(v)).iter().all(Zero::is_zero)
    }
}

/// Rank of a list of rational row vectors of equal length.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut e = Echelon::new(first.len());
    for r in rows {
        e.insert_rational(r);
    }
    e.rank()
}

/// Rank of an integer matrix given as rows.
pub fn rank_integer(rows: Vec<Vec<BigInt>>) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut e = Echelon::new(first.len());
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// A nonzero vector `c` with `sum_i c_i * rows[i] = 0`, if the rows are dependent.
pub fn left_kernel_vector(rows: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let m = rows.len();
    let n = rows.first()?.len();
    // augment with an identity block to track combinations
    let mut e = Echelon::new(n + m);
    for (i, r) in rows.iter().enumerate() {
        let mut aug = r.clone();
        aug.extend((0..m).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
        let reduced = e.reduce(to_integer_row(&aug));
        if reduced[..n].iter().all(Zero::is_zero) {
            return Some(reduced[n..].iter().map(|c| Rational::from_integer(c.clone())).collect());
        }
        e.insert(reduced);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rank_small() {
        assert_eq!(rank(&[row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])]), 2);
        assert_eq!(rank(&[row(&[0, 0]), row(&[0, 0])]), 0);
        assert_eq!(rank(&[]), 0);
        let id: Vec<_> = (0..5).map(|i| (0..5).map(|j| rat((i == j) as i64)).collect()).collect();
        assert_eq!(rank(&id), 5);
    }

    #[test]
    fn kernel_vector_is_a_dependency() {
        let rows = vec![row(&[1, 2, 3]), row(&[0, 1, 1]), row(&[2, 5, 7])];
        let c = left_kernel_vector(&rows).unwrap();
        for col in 0..3 {
            let s: Rational = (0..3).map(|i| &c[i] * &rows[i][col]).sum();
            assert!(s.is_zero());
        }
        assert!(c.iter().any(|x| !x.is_zero()));
        assert!(left_kernel_vector(&rows[..2]).is_none());
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new(3);
        e.insert_rational(&row(&[1, 1, 0]));
        e.insert_rational(&row(&[0, 1, 1]));
        assert!(e.contains(&row(&[1, 2, 1])));
        assert!(!e.contains(&row(&[1, 0, 0])));
    }
}
