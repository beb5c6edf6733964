use std::collections::HashMap;

use num_traits::Zero;

use crate::groebner::{GroebnerBasis, Ideal, MonomialIdeal};
use crate::linalg::{left_kernel_vector, Echelon};
use crate::polyring::{graded_basis, rat, Monomial, Polynomial, Rational};

struct Piece {
    /// Standard monomials, descending.
    basis: Vec<Monomial>,
    /// Normal form of every monomial of this degree in `basis` coordinates.
    nf: HashMap<Monomial, Vec<Rational>>,
}

/// Graded pieces `(S/I)_d` in normal-form coordinates.
///
/// The basis of `(S/I)_d` is the set of standard monomials of `in(I)` in
/// degree `d`. Normal forms of all monomials of a degree are tabulated at
/// once: walking the monomials in ascending order, a non-standard `t = u *
/// in(g)` has `NF(t) = -sum c * NF(u * m)` over the tail terms `c * m` of the
/// monic basis element `g`, and all those `u * m` are smaller than `t`.
pub struct GradedQuotient {
    nvars: usize,
    gb: GroebnerBasis,
    lt: MonomialIdeal,
    pieces: Vec<Option<Piece>>,
}

/// Rank of a linear map between two graded pieces, with an element
/// certifying a rank defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapRank {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub witness: Option<Polynomial>,
}

impl MapRank {
    pub fn full_rank(&self) -> bool {
        self.rank == self.source_dim.min(self.target_dim)
    }
}

impl GradedQuotient {
    pub fn new(ideal: &Ideal) -> Self {
        let gb = ideal.groebner_basis().clone();
        let lt = ideal.leading_term_ideal();
        GradedQuotient { nvars: ideal.nvars(), gb, lt, pieces: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn piece(&mut self, d: u32) -> &Piece {
        let d = d as usize;
        if self.pieces.len() <= d {
            self.pieces.resize_with(d + 1, || None);
        }
        if self.pieces[d].is_none() {
            let piece = self.build(d as u32);
            self.pieces[d] = Some(piece);
        }
        self.pieces[d].as_ref().unwrap()
    }

    fn build(&self, d: u32) -> Piece {
        let all = graded_basis(d, self.nvars);
        let basis: Vec<Monomial> = all.iter().copied().filter(|m| !self.lt.contains(m)).collect();
        let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let dim = basis.len();
        let mut nf: HashMap<Monomial, Vec<Rational>> = HashMap::with_capacity(all.len());
        for t in all.iter().rev() {
            let mut v = vec![Rational::zero(); dim];
            if let Some(&k) = index.get(t) {
                v[k] = rat(1);
            } else if dim > 0 {
                let g = self
                    .gb
                    .elements()
                    .iter()
                    .find(|g| g.leading_monomial().unwrap().divides(t))
                    .expect("non-standard monomial has a divisor among the leading monomials");
                let u = t.div(&g.leading_monomial().unwrap()).unwrap();
                for (m, c) in &g.terms()[1..] {
                    let w = &nf[&u.mul(m)];
                    for (x, y) in v.iter_mut().zip(w) {
                        if !y.is_zero() {
                            *x -= c * y;
                        }
                    }
                }
            }
            nf.insert(*t, v);
        }
        Piece { basis, nf }
    }

    pub fn dimension(&mut self, d: u32) -> usize {
        self.piece(d).basis.len()
    }

    pub fn basis(&mut self, d: u32) -> Vec<Monomial> {
        self.piece(d).basis.clone()
    }

    /// Coordinates of a homogeneous polynomial of degree `d` in `(S/I)_d`.
    pub fn coordinates(&mut self, f: &Polynomial, d: u32) -> Vec<Rational> {
        let piece = self.piece(d);
        let mut out = vec![Rational::zero(); piece.basis.len()];
        for (m, c) in f.terms() {
            debug_assert_eq!(m.degree(), d);
            for (x, y) in out.iter_mut().zip(&piece.nf[m]) {
                if !y.is_zero() {
                    *x += c * y;
                }
            }
        }
        out
    }

    /// Rank of `x f` on the subspace of `(S/I)_i` spanned by the images of
    /// `sources` (homogeneous of degree `i`).
    pub fn restricted_rank(&mut self, f: &Polynomial, sources: &[Polynomial], i: u32) -> MapRank {
        let s = f.homogeneous_degree().unwrap_or(0);
        let dim_i = self.dimension(i);
        let mut src = Echelon::new(dim_i);
        let mut kept = Vec::new();
        for p in sources {
            let c = self.coordinates(p, i);
            if src.insert_rational(&c) {
                kept.push(p.clone());
            }
        }
        let images: Vec<Vec<Rational>> = kept.iter().map(|p| self.coordinates(&(p * f), i + s)).collect();
        let target_dim = self.dimension(i + s);
        let mut img = Echelon::new(target_dim);
        for v in &images {
            img.insert_rational(v);
        }
        let rank = img.rank();
        let witness = if rank < kept.len() {
            left_kernel_vector(&images).map(|k| {
                kept.iter().zip(&k).fold(Polynomial::zero(self.nvars), |acc, (p, c)| &acc + &p.scale(c))
            })
        } else {
            None
        };
        MapRank { source_dim: kept.len(), target_dim, rank, witness }
    }

    /// Rank of `x f : (S/I)_i -> (S/I)_{i + deg f}`.
    ///
    /// The witness is a kernel element when the map should be injective and
    /// a standard monomial outside the image when it should be surjective.
    pub fn multiplication_rank(&mut self, f: &Polynomial, i: u32) -> MapRank {
        let s = f.homogeneous_degree().unwrap_or(0);
        let basis = self.basis(i);
        let images: Vec<Vec<Rational>> = basis
            .iter()
            .map(|b| self.coordinates(&f.mul_monomial(b), i + s))
            .collect();
        let target = self.basis(i + s);
        let mut img = Echelon::new(target.len());
        for v in &images {
            img.insert_rational(v);
        }
        let rank = img.rank();
        let mut out = MapRank { source_dim: basis.len(), target_dim: target.len(), rank, witness: None };
        if out.full_rank() {
            return out;
        }
        out.witness = if basis.len() <= target.len() {
            left_kernel_vector(&images).map(|k| {
                Polynomial::from_terms(self.nvars, basis.iter().zip(k).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c)))
            })
        } else {
            (0..target.len()).find_map(|k| {
                let mut e = vec![Rational::zero(); target.len()];
                e[k] = rat(1);
                (!img.contains(&e)).then(|| Polynomial::from_monomial(target[k], rat(1)))
            })
        };
        out
    }
}
