//! Groebner bases of homogeneous ideals, normal forms, colon ideals and
//! saturation.

pub(crate) mod engine;
mod monomial_ideal;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::One;

pub use monomial_ideal::MonomialIdeal;

use crate::error::{Error, Result};
use crate::polyring::{LinearChange, Monomial, Polynomial, Rational};
use engine::{Engine, ModuleOrder};

/// Reduced, monic Groebner basis with respect to degrevlex, sorted by
/// leading monomial ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(Polynomial::leading_monomial).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(Polynomial::is_constant)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, self).is_zero()
    }
}

/// Homogeneous ideal with a lazily computed, cached Groebner basis.
#[derive(Clone)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Polynomial>,
    gb: Arc<OnceLock<GroebnerBasis>>,
}

impl Ideal {
    /// Zero generators are dropped; every other generator must be homogeneous.
    pub fn new(nvars: usize, gens: Vec<Polynomial>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::VariableCountMismatch { expected: nvars, found: g.nvars() });
            }
            if g.is_zero() {
                continue;
            }
            g.require_homogeneous()?;
            kept.push(g);
        }
        Ok(Ideal { nvars, gens: kept, gb: Arc::new(OnceLock::new()) })
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        Self::new(nvars, crate::polyring::parse_polynomial_list(text, nvars)?)
    }

    /// Reads an ideal file. A first meaningful line holding a bare integer
    /// fixes the number of variables; otherwise `nvars`, otherwise one more
    /// than the largest variable index used. Error positions refer to the
    /// whole file.
    pub fn parse_file(text: &str, nvars: Option<usize>) -> Result<Self> {
        let mut body = String::with_capacity(text.len());
        let mut header = None;
        let mut seen_content = false;
        for line in text.lines() {
            let t = line.trim();
            if !seen_content && !t.is_empty() && !t.starts_with('#') {
                seen_content = true;
                if let Ok(n) = t.parse::<usize>() {
                    header = Some(n);
                    body.push('\n');
                    continue;
                }
            }
            body.push_str(line);
            body.push('\n');
        }
        let n = match (header, nvars) {
            (Some(h), Some(v)) if h != v => return Err(Error::VariableCountMismatch { expected: v, found: h }),
            (Some(h), _) => h,
            (None, Some(v)) => v,
            (None, None) => crate::polyring::infer_nvars(&body),
        };
        if n == 0 || n > crate::polyring::MAX_VARS {
            return Err(Error::TooManyVariables(n));
        }
        Self::parse(&body, n)
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal { nvars, gens: Vec::new(), gb: Arc::new(OnceLock::new()) }
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal::new(nvars, vec![Polynomial::one(nvars)]).unwrap()
    }

    pub fn from_monomial_ideal(m: &MonomialIdeal) -> Self {
        let n = m.nvars();
        Ideal::new(n, m.mingens().iter().map(|g| Polynomial::from_monomial(*g, Rational::one())).collect()).unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| compute_reduced_basis(self.nvars, &self.gens))
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner_basis().contains(f)
    }

    pub fn leading_term_ideal(&self) -> MonomialIdeal {
        leading_term_ideal(self.groebner_basis())
    }

    /// Image under a linear change of coordinates.
    pub fn apply_change(&self, g: &LinearChange) -> Result<Ideal> {
        let gens = self.gens.iter().map(|f| g.apply(f)).collect::<Result<Vec<_>>>()?;
        Ideal::new(self.nvars, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ideal::new(self.nvars, gens).expect("both summands are homogeneous")
    }

    pub fn generators_of_degree(&self, d: u32) -> impl Iterator<Item = &Polynomial> {
        self.gens.iter().filter(move |g| g.homogeneous_degree() == Some(d))
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.groebner_basis() == other.groebner_basis()
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.gens)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn ideal_engine(nvars: usize, gens: &[Polynomial]) -> Engine {
    let mut e = Engine::new(ModuleOrder::new(vec![0]), nvars);
    for g in gens {
        e.add_components(std::slice::from_ref(g));
    }
    e.run(None);
    e
}

fn compute_reduced_basis(nvars: usize, gens: &[Polynomial]) -> GroebnerBasis {
    let e = ideal_engine(nvars, gens);
    let elements = e
        .reduced_basis()
        .iter()
        .map(|v| v.to_components(1, nvars).pop().unwrap().monic())
        .collect();
    GroebnerBasis { nvars, elements }
}

/// Reduced Groebner basis of a homogeneous ideal.
pub fn buchberger(ideal: &Ideal) -> GroebnerBasis {
    ideal.groebner_basis().clone()
}

/// Leading monomials of a Groebner basis of `gens`, without the final
/// tail reduction (only the initial ideal is needed).
pub fn leading_monomial_ideal(nvars: usize, gens: &[Polynomial]) -> MonomialIdeal {
    let e = ideal_engine(nvars, gens);
    MonomialIdeal::new(nvars, e.minimal_leads().into_iter().map(|k| k.mono))
}

/// Fully reduces `f` modulo a Groebner basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let nvars = f.nvars();
    let leads: Vec<(Monomial, u16)> = gb
        .elements
        .iter()
        .map(|g| {
            let m = g.leading_monomial().unwrap();
            (m, m.support_mask())
        })
        .collect();
    let mut rest = f.clone();
    let mut done: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((m, c)) = rest.leading_term().cloned() {
        let mask = m.support_mask();
        let hit = leads.iter().position(|(l, lm)| lm & !mask == 0 && l.divides(&m));
        match hit {
            Some(k) => {
                // elements are monic
                let q = m.div(&leads[k].0).unwrap();
                rest = &rest - &gb.elements[k].mul_term(&q, &c);
            }
            None => {
                done.push((m, c));
                rest = Polynomial::from_sorted_terms(nvars, rest.into_terms().split_off(1));
            }
        }
    }
    Polynomial::from_sorted_terms(nvars, done)
}

/// Initial ideal of the ideal generated by a (reduced) Groebner basis.
pub fn leading_term_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.nvars, gb.leading_monomials())
}

/// `I : f`, read off from the `f`-coefficients of the syzygies of
/// `(gb(I), f)`.
pub fn ideal_quotient(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let d = f.require_homogeneous()?;
    let n = ideal.nvars();
    if ideal.is_zero() {
        return Ok(Ideal::zero(n));
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    let mut columns: Vec<Polynomial> = ideal.groebner_basis().elements().to_vec();
    let mut degrees: Vec<i64> = columns.iter().map(|g| g.homogeneous_degree().unwrap() as i64).collect();
    columns.push(f.clone());
    degrees.push(d as i64);
    let syz = crate::syzygy::syzygies(&columns, &degrees)?;
    let last = columns.len() - 1;
    let gens: Vec<Polynomial> = syz.into_iter().map(|s| s.components()[last].clone()).filter(|g| !g.is_zero()).collect();
    let q = Ideal::new(n, gens)?;
    // I is always contained in I : f; keep its generators so the result is never smaller
    Ok(q.sum(ideal))
}

/// `I : f^infinity`, iterating colon ideals until the reduced bases agree.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut current = ideal.clone();
    loop {
        let next = ideal_quotient(&current, f)?;
        if next.groebner_basis() == current.groebner_basis() {
            return Ok(reduced_ideal(&current));
        }
        current = reduced_ideal(&next);
    }
}

/// Same ideal, generated by its reduced Groebner basis.
pub fn reduced_ideal(ideal: &Ideal) -> Ideal {
    let gb = ideal.groebner_basis().clone();
    let out = Ideal::new(ideal.nvars(), gb.elements().to_vec()).unwrap();
    let _ = out.gb.set(gb);
    out
}

/// `I : m^infinity` computed as `g^{-1}(g(I) : x_n^infinity)`.
///
/// Since `g` is an automorphism this is the saturation of `I` by the
/// linear form `g^{-1}(x_n)`, which avoids transforming `I` itself. For a
/// generic `g` the result is the saturation with respect to the maximal
/// ideal; callers certify it through Hilbert functions.
pub fn irrelevant_saturation(ideal: &Ideal, g: &LinearChange) -> Result<Ideal> {
    let n = ideal.nvars();
    if g.nvars() != n {
        return Err(Error::VariableCountMismatch { expected: n, found: g.nvars() });
    }
    let ell = g.inverse().image_of_var(n - 1).primitive();
    if ell.is_zero() {
        return Err(Error::SingularChange);
    }
    saturate(ideal, &ell)
}
