//! Buchberger's algorithm for graded submodules of `S^r`.
//!
//! Ideals are the rank-one case. Coefficients are kept fraction-free as
//! primitive integer vectors; only leading terms and normal forms up to a
//! nonzero scalar are ever needed inside the engine.
//!
//! The module order compares, in this sequence: the block (positions below
//! `split` beat the rest), the shifted degree `deg(m) + shift[pos]`, the
//! monomial by degrevlex, and finally the position (lower index wins). With
//! `split == rank` this is the usual degree-compatible term-over-position
//! order; a smaller split turns the order into an elimination order for the
//! leading block, which is how syzygies are extracted.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::{Monomial, Polynomial, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct TermKey {
    pub block: u8,
    pub sdeg: i64,
    pub mono: Monomial,
    pub pos: u32,
}

impl Ord for TermKey {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .block
            .cmp(&self.block)
            .then(self.sdeg.cmp(&other.sdeg))
            .then(self.mono.cmp(&other.mono))
            .then(other.pos.cmp(&self.pos))
    }
}

impl PartialOrd for TermKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TermKey {
    fn times(&self, m: &Monomial) -> TermKey {
        TermKey { block: self.block, sdeg: self.sdeg + m.degree() as i64, mono: self.mono.mul(m), pos: self.pos }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct ModuleOrder {
    pub shifts: Vec<i64>,
    pub split: usize,
}

impl ModuleOrder {
    pub fn new(shifts: Vec<i64>) -> Self {
        let split = shifts.len();
        ModuleOrder { shifts, split }
    }

    pub fn with_split(shifts: Vec<i64>, split: usize) -> Self {
        ModuleOrder { shifts, split }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn key(&self, pos: usize, mono: Monomial) -> TermKey {
        TermKey {
            block: u8::from(pos >= self.split),
            sdeg: mono.degree() as i64 + self.shifts[pos],
            mono,
            pos: pos as u32,
        }
    }
}

/// Sparse module element with integer coefficients, terms sorted descending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct IntVector {
    pub terms: Vec<(TermKey, BigInt)>,
}

impl IntVector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(TermKey, BigInt)> {
        self.terms.first()
    }

    /// Converts rational components, clearing denominators.
    pub fn from_components(components: &[Polynomial], order: &ModuleOrder) -> IntVector {
        let mut den = BigInt::one();
        for f in components {
            for (_, c) in f.terms() {
                den = den.lcm(c.denom());
            }
        }
        let mut terms: Vec<(TermKey, BigInt)> = components
            .iter()
            .enumerate()
            .flat_map(|(pos, f)| {
                let den = &den;
                f.terms().iter().map(move |(m, c)| (order.key(pos, *m), c.numer() * (den / c.denom())))
            })
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut v = IntVector { terms };
        v.make_primitive();
        v
    }

    pub fn to_components(&self, rank: usize, nvars: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); rank];
        for (k, c) in &self.terms {
            parts[k.pos as usize].push((k.mono, Rational::from_integer(c.clone())));
        }
        parts.into_iter().map(|t| Polynomial::from_terms(nvars, t)).collect()
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        let Some(first) = self.terms.first() else { return };
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if first.1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    /// `self <- a*self - b*(m*g)`.
    fn combine(&mut self, a: &BigInt, b: &BigInt, m: &Monomial, g: &IntVector) {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let old = std::mem::take(&mut self.terms);
        let mut it_a = old.into_iter().peekable();
        let mut it_b = g.terms.iter().map(|(k, c)| (k.times(m), c)).peekable();
        let a_one = a.is_one();
        loop {
            let ord = match (it_a.peek(), it_b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => x.0.cmp(&y.0),
            };
            match ord {
                Ordering::Greater => {
                    let (k, c) = it_a.next().unwrap();
                    out.push((k, if a_one { c } else { c * a }));
                }
                Ordering::Less => {
                    let (k, c) = it_b.next().unwrap();
                    out.push((k, -(b * c)));
                }
                Ordering::Equal => {
                    let (k, c) = it_a.next().unwrap();
                    let (_, d) = it_b.next().unwrap();
                    let v = if a_one { c - b * d } else { c * a - b * d };
                    if !v.is_zero() {
                        out.push((k, v));
                    }
                }
            }
        }
        self.terms = out;
    }
}

#[derive(Clone, Debug)]
struct Element {
    v: IntVector,
    lead: TermKey,
    mask: u16,
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: TermKey,
}

/// Incremental homogeneous Buchberger state.
#[derive(Clone, Debug)]
pub(crate) struct Engine {
    order: ModuleOrder,
    nvars: usize,
    basis: Vec<Element>,
    pairs: Vec<Pair>,
    pending: Vec<IntVector>,
    /// Coprime-leading-term criterion is only valid for ideals.
    ideal_mode: bool,
}

fn divides_key(d: &TermKey, dmask: u16, t: &TermKey) -> bool {
    d.pos == t.pos && dmask & !t.mono.support_mask() == 0 && d.mono.divides(&t.mono)
}

impl Engine {
    pub fn new(order: ModuleOrder, nvars: usize) -> Self {
        let ideal_mode = order.rank() == 1;
        Engine { order, nvars, basis: Vec::new(), pairs: Vec::new(), pending: Vec::new(), ideal_mode }
    }

    #[cfg(test)]
    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn add_generator(&mut self, v: IntVector) {
        if !v.is_zero() {
            self.pending.push(v);
        }
    }

    pub fn add_components(&mut self, components: &[Polynomial]) {
        let v = IntVector::from_components(components, &self.order);
        self.add_generator(v);
    }

    fn find_divisor(&self, t: &TermKey, skip: Option<usize>) -> Option<usize> {
        self.basis
            .iter()
            .enumerate()
            .find(|(idx, e)| Some(*idx) != skip && divides_key(&e.lead, e.mask, t))
            .map(|(idx, _)| idx)
    }

    fn reduce_step(v: &mut IntVector, at: usize, g: &Element) {
        let (k, c) = &v.terms[at];
        let m = k.mono.div(&g.lead.mono).expect("divisor checked");
        let lc = &g.v.terms[0].1;
        let gcd = lc.gcd(c);
        let a = lc / &gcd;
        let b = c / &gcd;
        v.combine(&a, &b, &m, &g.v);
    }

    /// Reduces until the leading term is irreducible (or zero).
    pub fn top_reduce(&self, mut v: IntVector) -> IntVector {
        let mut steps = 0usize;
        while let Some((k, _)) = v.lead() {
            let Some(idx) = self.find_divisor(k, None) else { break };
            Self::reduce_step(&mut v, 0, &self.basis[idx]);
            steps += 1;
            if steps.is_multiple_of(16) {
                v.make_primitive();
            }
        }
        v.make_primitive();
        v
    }

    /// Full reduction; no term of the result is divisible by a leading term.
    #[cfg(test)]
    pub fn reduce_full(&self, v: IntVector) -> IntVector {
        self.reduce_full_skipping(v, None)
    }

    fn reduce_full_skipping(&self, mut v: IntVector, skip: Option<usize>) -> IntVector {
        let mut at = 0;
        let mut steps = 0usize;
        while at < v.terms.len() {
            let k = v.terms[at].0;
            match self.find_divisor(&k, skip) {
                Some(idx) => {
                    Self::reduce_step(&mut v, at, &self.basis[idx]);
                    steps += 1;
                    if steps.is_multiple_of(16) {
                        v.make_primitive();
                    }
                }
                None => at += 1,
            }
        }
        v.make_primitive();
        v
    }

    fn next_degree(&self) -> Option<i64> {
        let p = self.pairs.iter().map(|p| p.lcm.sdeg).min();
        let g = self.pending.iter().filter_map(|v| v.lead().map(|l| l.0.sdeg)).min();
        match (p, g) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Runs Buchberger until every pair and pending generator of degree
    /// `<= max_degree` (or all of them) is processed.
    pub fn run(&mut self, max_degree: Option<i64>) {
        while let Some(d) = self.next_degree() {
            if max_degree.is_some_and(|m| d > m) {
                break;
            }
            let mut batch: Vec<Pair> = Vec::new();
            self.pairs.retain(|p| {
                if p.lcm.sdeg == d {
                    batch.push(*p);
                    false
                } else {
                    true
                }
            });
            batch.sort_by_key(|a| a.lcm);
            let mut gens: Vec<IntVector> = Vec::new();
            self.pending.retain(|v| {
                if v.lead().unwrap().0.sdeg == d {
                    gens.push(v.clone());
                    false
                } else {
                    true
                }
            });
            gens.sort_by_key(|a| a.lead().unwrap().0);

            for pair in batch {
                let s = self.s_vector(&pair);
                let r = self.top_reduce(s);
                if !r.is_zero() {
                    self.insert(r);
                }
            }
            for g in gens {
                let r = self.top_reduce(g);
                if !r.is_zero() {
                    self.insert(r);
                }
            }
        }
    }

    fn s_vector(&self, pair: &Pair) -> IntVector {
        let (gi, gj) = (&self.basis[pair.i], &self.basis[pair.j]);
        let mi = pair.lcm.mono.div(&gi.lead.mono).unwrap();
        let mj = pair.lcm.mono.div(&gj.lead.mono).unwrap();
        let ci = &gi.v.terms[0].1;
        let cj = &gj.v.terms[0].1;
        let g = ci.gcd(cj);
        // s = (cj/g) * mi*gi - (ci/g) * mj*gj
        let mut s = IntVector {
            terms: gi.v.terms.iter().map(|(k, c)| (k.times(&mi), c * (cj / &g))).collect(),
        };
        s.combine(&BigInt::one(), &(ci / &g), &mj, &gj.v);
        s
    }

    fn insert(&mut self, v: IntVector) {
        let lead = v.lead().unwrap().0;
        let mask = lead.mono.support_mask();
        let h = self.basis.len();
        self.basis.push(Element { v, lead, mask });
        self.update_pairs(h);
    }

    /// Gebauer-Moeller installation of the pairs created by basis element `h`.
    fn update_pairs(&mut self, h: usize) {
        let hl = self.basis[h].lead;
        let mut cands: Vec<(usize, TermKey, bool)> = Vec::new();
        for (g, e) in self.basis[..h].iter().enumerate() {
            if e.lead.pos != hl.pos || e.lead.block != hl.block {
                continue;
            }
            let lcm_mono = e.lead.mono.lcm(&hl.mono);
            let lcm = self.order.key(hl.pos as usize, lcm_mono);
            let coprime = self.ideal_mode && e.lead.mono.is_coprime(&hl.mono);
            cands.push((g, lcm, coprime));
        }
        // chain criterion among the new pairs
        let mut kept: Vec<(usize, TermKey, bool)> = Vec::new();
        let mut rest = cands;
        while let Some(c) = rest.pop() {
            let dominated = !c.2
                && rest.iter().chain(kept.iter()).any(|o| o.1.mono.divides(&c.1.mono));
            if !dominated {
                kept.push(c);
            }
        }
        // old pairs made redundant by h
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.lcm.pos != hl.pos || !hl.mono.divides(&p.lcm.mono) {
                return true;
            }
            let li = basis[p.i].lead.mono.lcm(&hl.mono);
            let lj = basis[p.j].lead.mono.lcm(&hl.mono);
            li == p.lcm.mono || lj == p.lcm.mono
        });
        for (g, lcm, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair { i: g, j: h, lcm });
            }
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = &IntVector> {
        self.basis.iter().map(|e| &e.v)
    }

    /// Indices of elements whose leading term is not divisible by another's.
    fn minimal_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, e) in self.basis.iter().enumerate() {
            let redundant = self.basis.iter().enumerate().any(|(j, o)| {
                j != i && divides_key(&o.lead, o.mask, &e.lead) && (o.lead != e.lead || j < i)
            });
            if !redundant {
                out.push(i);
            }
        }
        out
    }

    /// Minimal leading terms of the basis, sorted ascending.
    pub fn minimal_leads(&self) -> Vec<TermKey> {
        let mut l: Vec<TermKey> = self.minimal_indices().into_iter().map(|i| self.basis[i].lead).collect();
        l.sort();
        l
    }

    /// The reduced basis: minimal, tails fully reduced, sorted by leading term ascending.
    pub fn reduced_basis(&self) -> Vec<IntVector> {
        let idx = self.minimal_indices();
        let minimal = Engine {
            order: self.order.clone(),
            nvars: self.nvars,
            basis: idx.iter().map(|&i| self.basis[i].clone()).collect(),
            pairs: Vec::new(),
            pending: Vec::new(),
            ideal_mode: self.ideal_mode,
        };
        let mut out: Vec<IntVector> = (0..minimal.basis.len())
            .map(|i| {
                let v = minimal.basis[i].v.clone();
                // the leading term stays; only tails reduce
                minimal.reduce_full_skipping(v, Some(i))
            })
            .collect();
        out.sort_by_key(|a| a.lead().unwrap().0);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn ideal_engine(gens: &[&str], n: usize) -> Engine {
        let mut e = Engine::new(ModuleOrder::new(vec![0]), n);
        for g in gens {
            e.add_components(&[parse_polynomial(g, n).unwrap()]);
        }
        e.run(None);
        e
    }

    #[test]
    fn monomial_input_is_its_own_basis() {
        let e = ideal_engine(&["x0", "x1"], 3);
        assert_eq!(e.minimal_leads().len(), 2);
    }

    #[test]
    fn s_pair_produces_cubic() {
        let e = ideal_engine(&["x0^2 - x1^2", "x0*x1"], 3);
        let leads: Vec<String> = e.minimal_leads().iter().map(|k| k.mono.to_string()).collect();
        assert_eq!(leads, vec!["x0*x1", "x0^2", "x1^3"]);
    }

    #[test]
    fn full_reduction_clears_tails() {
        let e = ideal_engine(&["x0 - x1"], 2);
        let v = IntVector::from_components(&[parse_polynomial("x0*x1 + x1^2", 2).unwrap()], e.order());
        let r = e.reduce_full(v);
        let comps = r.to_components(1, 2);
        assert_eq!(comps[0], parse_polynomial("x1^2", 2).unwrap());
    }

    #[test]
    fn elimination_split_puts_real_block_first() {
        let order = ModuleOrder::with_split(vec![0, 5, 0], 1);
        let m = Monomial::from_exps(&[1, 0]);
        assert!(order.key(0, m) > order.key(1, Monomial::from_exps(&[9, 0])));
        assert!(order.key(1, m) > order.key(2, m));
    }
}
