use std::fmt;

use serde::Serialize;

use crate::polyring::{graded_basis, Monomial};

/// Monomial ideal stored by its minimal generators, sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    mingens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary generating set.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        // sorting by degree first guarantees divisors come before multiples
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
        gens.dedup();
        let mut mingens: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            debug_assert_eq!(g.nvars(), nvars);
            if !mingens.iter().any(|m| m.divides(&g)) {
                mingens.push(g);
            }
        }
        mingens.sort();
        MonomialIdeal { nvars, mingens }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, mingens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, mingens: vec![Monomial::one(nvars)] }
    }

    /// `(x_0, ..., x_n)^d`.
    pub fn maximal_power(nvars: usize, d: u32) -> Self {
        Self::new(nvars, graded_basis(d, nvars))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mingens(&self) -> &[Monomial] {
        &self.mingens
    }

    pub fn is_zero(&self) -> bool {
        self.mingens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.mingens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.support_mask();
        self.mingens.iter().any(|g| g.support_mask() & !mask == 0 && g.divides(m))
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.mingens.iter().map(Monomial::degree).max()
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::new(self.nvars, self.mingens.iter().chain(other.mingens.iter()).copied())
    }

    /// `self : x_i`.
    pub fn colon_var(&self, i: usize) -> MonomialIdeal {
        Self::new(
            self.nvars,
            self.mingens.iter().map(|g| {
                let e = g.exponent(i);
                if e > 0 {
                    g.with_exponent(i, e - 1)
                } else {
                    *g
                }
            }),
        )
    }

    /// Monomials of degree `d` outside the ideal, sorted descending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        graded_basis(d, self.nvars).into_iter().filter(|m| !self.contains(m)).collect()
    }

    pub fn generators_divisible_by(&self, i: usize) -> impl Iterator<Item = &Monomial> {
        self.mingens.iter().filter(move |g| g.exponent(i) > 0)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.mingens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.mingens().len()))?;
        for g in self.mingens() {
            seq.serialize_element(&g.to_string())?;
        }
        seq.end()
    }
}
