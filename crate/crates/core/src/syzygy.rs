//! Syzygies, minimal generators and minimal presentations of graded
//! submodules of free modules `F = ⊕ S(-d_i)`.
//!
//! Syzygies come from a Groebner basis of the graph module
//! `{(v_j, e_j)}` under an order that eliminates the `F` block: the basis
//! elements whose `F` part vanishes are exactly the tracked transition
//! vectors of reductions to zero, i.e. the Schreyer syzygies, and they form
//! a Groebner basis of the syzygy module.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::engine::{Engine, IntVector, ModuleOrder};
use crate::polyring::Polynomial;

/// Homogeneous element of `⊕ S(-d_i)` with explicit column degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleElement {
    components: Vec<Polynomial>,
    shifts: Vec<i64>,
}

impl FreeModuleElement {
    pub fn new(components: Vec<Polynomial>, shifts: Vec<i64>) -> Result<Self> {
        if components.len() != shifts.len() {
            return Err(Error::Invariant(format!(
                "{} components but {} column degrees",
                components.len(),
                shifts.len()
            )));
        }
        let e = FreeModuleElement { components, shifts };
        let mut deg = None;
        for (f, s) in e.components.iter().zip(&e.shifts) {
            if f.is_zero() {
                continue;
            }
            let d = f.require_homogeneous()? as i64 + s;
            if deg.is_some_and(|x| x != d) {
                return Err(Error::NotHomogeneous(format!("{:?}", e.components)));
            }
            deg = Some(d);
        }
        Ok(e)
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Module degree `deg(g_i) + d_i` of any nonzero component.
    pub fn degree(&self) -> Option<i64> {
        self.components
            .iter()
            .zip(&self.shifts)
            .find(|(f, _)| !f.is_zero())
            .map(|(f, s)| f.degree().unwrap() as i64 + s)
    }

    /// `sum_i g_i * columns[i]`.
    pub fn dot(&self, columns: &[Polynomial]) -> Polynomial {
        let n = columns.first().map_or(1, Polynomial::nvars);
        self.components.iter().zip(columns).fold(Polynomial::zero(n), |acc, (g, f)| &acc + &(g * f))
    }

    /// `sum_i g_i * columns[i]` for vector-valued columns.
    pub fn combine(&self, columns: &[FreeModuleElement]) -> Vec<Polynomial> {
        let rank = columns.first().map_or(0, |c| c.rank());
        let n = self.components.first().map_or(1, Polynomial::nvars);
        let mut acc = vec![Polynomial::zero(n); rank];
        for (g, col) in self.components.iter().zip(columns) {
            if g.is_zero() {
                continue;
            }
            for (a, c) in acc.iter_mut().zip(&col.components) {
                *a = &*a + &(g * c);
            }
        }
        acc
    }

    fn to_int(&self, order: &ModuleOrder) -> IntVector {
        IntVector::from_components(&self.components, order)
    }
}

/// Minimal generators and minimal first relations of a graded module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedPresentation {
    pub generator_degrees: Vec<i64>,
    pub relation_degrees: Vec<i64>,
    #[serde(skip)]
    pub generators: Vec<FreeModuleElement>,
    #[serde(skip)]
    pub relations: Vec<FreeModuleElement>,
}

fn nvars_of(polys: &[Polynomial]) -> usize {
    polys.first().map_or(1, Polynomial::nvars)
}

/// Generators of the syzygy module of homogeneous vectors living in a free
/// module of rank `rank` with column degrees `shifts`.
fn vector_syzygies(vectors: &[FreeModuleElement], shifts: &[i64], nvars: usize) -> Result<Vec<FreeModuleElement>> {
    let r = shifts.len();
    let k = vectors.len();
    let mut degrees = Vec::with_capacity(k);
    for v in vectors {
        if v.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        degrees.push(v.degree().unwrap());
    }
    let mut all_shifts = shifts.to_vec();
    all_shifts.extend(&degrees);
    let order = ModuleOrder::with_split(all_shifts, r);
    let mut engine = Engine::new(order.clone(), nvars);
    for (j, v) in vectors.iter().enumerate() {
        let mut comps = v.components.clone();
        comps.extend((0..k).map(|i| if i == j { Polynomial::one(nvars) } else { Polynomial::zero(nvars) }));
        engine.add_generator(IntVector::from_components(&comps, &order));
    }
    engine.run(None);
    let mut out = Vec::new();
    for v in engine.elements() {
        if v.lead().unwrap().0.block == 0 {
            continue;
        }
        let comps = v.to_components(r + k, nvars);
        out.push(FreeModuleElement { components: comps[r..].to_vec(), shifts: degrees.clone() });
    }
    Ok(out)
}

/// Generating set of `{(g_i) : sum g_i f_i = 0}` with module degrees
/// `deg(g_i) + degrees[i]`.
pub fn syzygies(columns: &[Polynomial], degrees: &[i64]) -> Result<Vec<FreeModuleElement>> {
    if columns.len() != degrees.len() {
        return Err(Error::Invariant("one degree per column is required".into()));
    }
    let nvars = nvars_of(columns);
    let mut vectors = Vec::with_capacity(columns.len());
    for (f, &d) in columns.iter().zip(degrees) {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let fd = f.require_homogeneous()? as i64;
        if fd != d {
            return Err(Error::Invariant(format!("column {f} has degree {fd}, declared {d}")));
        }
        vectors.push(FreeModuleElement { components: vec![f.clone()], shifts: vec![0] });
    }
    vector_syzygies(&vectors, &[0], nvars)
}

/// Syzygies of homogeneous module elements sharing the same ambient module.
pub fn module_syzygies(vectors: &[FreeModuleElement]) -> Result<Vec<FreeModuleElement>> {
    let Some(first) = vectors.first() else { return Ok(Vec::new()) };
    let nvars = nvars_of(&first.components);
    vector_syzygies(vectors, &first.shifts.clone(), nvars)
}

/// Minimal generators of the submodule generated by `gens`.
///
/// Greedy by ascending degree: a generator is kept iff it is not in the
/// submodule generated by the ones kept so far.
pub fn minimalize(gens: &[FreeModuleElement]) -> Vec<FreeModuleElement> {
    let mut sorted: Vec<&FreeModuleElement> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = sorted.first() else { return Vec::new() };
    let nvars = nvars_of(&first.components);
    let order = ModuleOrder::new(first.shifts.clone());
    sorted.sort_by_key(|g| g.degree().unwrap());
    let mut engine = Engine::new(order.clone(), nvars);
    let mut kept = Vec::new();
    for g in sorted {
        let d = g.degree().unwrap();
        engine.run(Some(d));
        let v = g.to_int(&order);
        if !engine.top_reduce(v.clone()).is_zero() {
            engine.add_generator(v);
            kept.push(g.clone());
        }
    }
    kept
}

/// Minimal generators plus their minimal relations.
pub fn presentation(gens: &[FreeModuleElement]) -> Result<GradedPresentation> {
    let generators = minimalize(gens);
    let relations = if generators.is_empty() { Vec::new() } else { minimalize(&module_syzygies(&generators)?) };
    let mut generator_degrees: Vec<i64> = generators.iter().map(|g| g.degree().unwrap()).collect();
    let mut relation_degrees: Vec<i64> = relations.iter().map(|r| r.degree().unwrap()).collect();
    generator_degrees.sort();
    relation_degrees.sort();
    Ok(GradedPresentation { generator_degrees, relation_degrees, generators, relations })
}

/// Minimal generators of a homogeneous ideal given by any generating set.
pub fn minimal_ideal_generators(gens: &[Polynomial]) -> Vec<Polynomial> {
    let elems: Vec<FreeModuleElement> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| FreeModuleElement { components: vec![g.clone()], shifts: vec![0] })
        .collect();
    minimalize(&elems).into_iter().map(|e| e.components.into_iter().next().unwrap()).collect()
}

/// `m(I)` for three forms in three variables with `dim S/I = 1`: the
/// smallest module degree of a minimal syzygy.
pub fn min_syzygy_degree(f0: &Polynomial, f1: &Polynomial, f2: &Polynomial) -> Result<i64> {
    let forms = [f0.clone(), f1.clone(), f2.clone()];
    if forms.iter().any(|f| f.nvars() != 3) {
        return Err(Error::VariableCountMismatch { expected: 3, found: f0.nvars() });
    }
    let degrees = forms.iter().map(|f| f.require_homogeneous().map(i64::from)).collect::<Result<Vec<_>>>()?;
    let ideal = crate::groebner::Ideal::new(3, forms.to_vec())?;
    let dim = crate::hilbert::hilbert_series(&ideal.leading_term_ideal()).dim;
    if dim != 1 {
        return Err(Error::DimensionGuard { expected: "1".into(), found: dim });
    }
    let syz = minimalize(&syzygies(&forms, &degrees)?);
    syz.iter()
        .filter_map(FreeModuleElement::degree)
        .min()
        .ok_or_else(|| Error::Invariant("three forms in three variables always have a syzygy".into()))
}
