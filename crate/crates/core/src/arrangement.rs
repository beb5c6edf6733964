//! Central hyperplane arrangements: Jacobian ideals, freeness from both the
//! module of logarithmic derivations and the generic initial ideal,
//! plus-one generation, and Lefschetz behavior of the Jacobian algebra.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gin::{rgin, GinOptions};
use crate::groebner::{Ideal, MonomialIdeal};
use crate::lefschetz::{cross_validate, decide_from_gin, LefschetzReport, Property};
use crate::linalg;
use crate::polyring::{rat, Monomial, Polynomial, Rational, MAX_VARS};
use crate::random::{rng_for, Stream};
use crate::syzygy::{minimal_ideal_generators, presentation, syzygies, FreeModuleElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    nvars: usize,
    /// Coefficient rows of the linear forms.
    rows: Vec<Vec<Rational>>,
    forms: Vec<Polynomial>,
    pub name: Option<String>,
}

fn normalized(row: &[Rational]) -> Option<Vec<Rational>> {
    let lead = row.iter().find(|c| !num_traits::Zero::is_zero(*c))?;
    Some(row.iter().map(|c| c / lead).collect())
}

impl Arrangement {
    /// Validates that every row is nonzero and no two rows are proportional.
    pub fn new(nvars: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::with_lines(nvars, rows, None)
    }

    pub fn from_integers(nvars: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(nvars, rows.iter().map(|r| r.iter().map(|&c| rat(c)).collect()).collect())
    }

    fn with_lines(nvars: usize, rows: Vec<Vec<Rational>>, lines: Option<&[usize]>) -> Result<Self> {
        if nvars == 0 || nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        if rows.is_empty() {
            return Err(Error::InvalidArrangement("no hyperplanes".into()));
        }
        let label = |k: usize| match lines {
            Some(l) => format!("line {}", l[k]),
            None => format!("form {}", k + 1),
        };
        let mut seen: HashMap<Vec<Rational>, usize> = HashMap::new();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != nvars {
                return Err(Error::InvalidArrangement(format!(
                    "{} has {} coefficients, expected {nvars}",
                    label(k),
                    row.len()
                )));
            }
            let Some(key) = normalized(row) else {
                return Err(Error::InvalidArrangement(format!("{} is the zero form", label(k))));
            };
            if let Some(&j) = seen.get(&key) {
                return Err(Error::InvalidArrangement(format!(
                    "{} and {} define the same hyperplane",
                    label(j),
                    label(k)
                )));
            }
            seen.insert(key, k);
        }
        let forms = rows.iter().map(|r| Polynomial::linear_form(r)).collect();
        Ok(Arrangement { nvars, rows, forms, name: None })
    }

    /// First meaningful line: the number of variables; every further
    /// nonempty line not starting with `#`: one row of coefficients.
    pub fn parse(text: &str) -> Result<Self> {
        let mut nvars: Option<usize> = None;
        let mut rows = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap();
            if content.trim().is_empty() {
                continue;
            }
            let mut tokens = Vec::new();
            let mut col = 0;
            for piece in content.split_whitespace() {
                let at = content[col..].find(piece).unwrap() + col;
                col = at + piece.len();
                tokens.push((at + 1, piece));
            }
            match nvars {
                None => {
                    let (column, tok) = tokens[0];
                    let n: usize = tok.parse().map_err(|_| Error::Parse {
                        line,
                        column,
                        message: format!("expected the number of variables, found `{tok}`"),
                    })?;
                    if tokens.len() > 1 {
                        return Err(Error::Parse { line, column: tokens[1].0, message: "unexpected token".into() });
                    }
                    if n == 0 || n > MAX_VARS {
                        return Err(Error::TooManyVariables(n));
                    }
                    nvars = Some(n);
                }
                Some(n) => {
                    if tokens.len() != n {
                        return Err(Error::Parse {
                            line,
                            column: 1,
                            message: format!("expected {n} coefficients, found {}", tokens.len()),
                        });
                    }
                    let row = tokens
                        .iter()
                        .map(|&(column, tok)| {
                            tok.parse::<Rational>().map_err(|_| Error::Parse {
                                line,
                                column,
                                message: format!("`{tok}` is not a rational number"),
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    rows.push(row);
                    lines.push(line);
                }
            }
        }
        let Some(n) = nvars else {
            return Err(Error::InvalidArrangement("empty input".into()));
        };
        Self::with_lines(n, rows, Some(&lines))
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn unnamed(mut self) -> Self {
        self.name = None;
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of hyperplanes.
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn defining_polynomial(&self) -> Polynomial {
        self.forms.iter().fold(Polynomial::one(self.nvars), |acc, f| &acc * f)
    }

    /// Codimension of the center: the rank of the coefficient matrix.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows)
    }

    /// The file format read by [`Arrangement::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "# {name}");
        }
        let _ = writeln!(out, "{}", self.nvars);
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

pub fn is_essential(a: &Arrangement) -> bool {
    a.rank() == a.nvars()
}

/// `<dQ/dx_0, ..., dQ/dx_n>`; `Q` itself lies in this ideal by the Euler
/// relation.
pub fn jacobian_ideal(a: &Arrangement) -> Ideal {
    let q = a.defining_polynomial();
    Ideal::new(a.nvars(), (0..a.nvars()).map(|i| q.partial_derivative(i)).collect()).expect("partials of a form are homogeneous")
}

/// The Jacobian ideal with `Q` included among the generators.
pub fn jacobian_ideal_with_q(a: &Arrangement) -> Ideal {
    let q = a.defining_polynomial();
    let mut gens: Vec<Polynomial> = (0..a.nvars()).map(|i| q.partial_derivative(i)).collect();
    gens.push(q);
    Ideal::new(a.nvars(), gens).expect("partials of a form are homogeneous")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GinShape {
    pub free: bool,
    /// Exponents of `x1` in the staircase when it has the free shape.
    pub lambda: Option<Vec<u32>>,
    /// `rgin = S`, or its minimal generators contain `x0^{d-1}` and a pure
    /// power of `x1` and none of them lives in `x2, ..., x_n` only.
    pub shape_holds: bool,
}

pub fn gin_shape(gin: &MonomialIdeal, d: usize) -> GinShape {
    if gin.is_unit() {
        return GinShape { free: true, lambda: Some(Vec::new()), shape_holds: true };
    }
    let n = gin.nvars();
    let d1 = d as u16 - 1;
    let gens = gin.mingens();
    let has_x0 = gens.iter().any(|g| g.degree() == d1 as u32 && g.exponent(0) == d1);
    let has_x1_power = n >= 2 && gens.iter().any(|g| g.exponent(1) == g.degree() as u16);
    let only_tail = gens.iter().any(|g| n > 2 && g.exponent(0) == 0 && g.exponent(1) == 0);
    let shape_holds = has_x0 && has_x1_power && !only_tail;

    // x0^{d-1-j} x1^{lambda_j}, j = 0..d-1, lambda_0 = 0
    let mut lambda = vec![0u32; d];
    let mut seen = vec![false; d];
    let mut staircase = gens.len() == d;
    for g in gens {
        let a = g.exponent(0);
        let two_var = (2..n).all(|i| g.exponent(i) == 0);
        if !two_var || a > d1 {
            staircase = false;
            break;
        }
        let j = (d1 - a) as usize;
        if seen[j] {
            staircase = false;
            break;
        }
        seen[j] = true;
        lambda[j] = g.exponent(1) as u32;
    }
    let free = staircase
        && lambda[0] == 0
        && (d < 2 || lambda[1] >= 1)
        && lambda.windows(2).skip(1).all(|w| w[1] > w[0] && w[1] - w[0] <= 2)
        && lambda.windows(2).all(|w| w[1] > w[0]);
    GinShape { free, lambda: free.then(|| lambda[1..].to_vec()), shape_holds }
}

pub fn gin_shape_freeness(a: &Arrangement, opts: &GinOptions) -> Result<GinShape> {
    let gin = rgin(&jacobian_ideal(a), opts)?.result;
    Ok(gin_shape(&gin, a.len()))
}

/// Graded shape of the module of logarithmic derivations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationPresentation {
    /// Polynomial degrees of the minimal generators, ascending.
    pub generator_pdegrees: Vec<i64>,
    /// Degrees of the minimal relations among them, in the same grading.
    pub relation_degrees: Vec<i64>,
    pub is_free: bool,
    #[serde(skip)]
    pub generators: Vec<FreeModuleElement>,
}

/// `D(A)` as the syzygies `(f_0, ..., f_n, g)` of `(dQ/dx_0, ..., dQ/dx_n, -Q)`:
/// the derivation `sum f_i d/dx_i` sends `Q` to `g Q`.
pub fn derivation_presentation(a: &Arrangement) -> Result<DerivationPresentation> {
    let n = a.nvars();
    let q = a.defining_polynomial();
    let d = a.len() as i64;
    let mut columns: Vec<Polynomial> = (0..n).map(|i| q.partial_derivative(i)).collect();
    columns.push(-&q);
    let mut degrees = vec![d - 1; n];
    degrees.push(d);
    // a partial vanishes when Q does not involve x_k; then d/dx_k is a
    // derivation of degree 0 and the column is left out of the syzygy problem
    let keep: Vec<usize> = (0..=n).filter(|&k| !columns[k].is_zero()).collect();
    let cols: Vec<Polynomial> = keep.iter().map(|&k| columns[k].clone()).collect();
    let degs: Vec<i64> = keep.iter().map(|&k| degrees[k]).collect();
    let mut gens = Vec::new();
    for s in syzygies(&cols, &degs)? {
        let mut comps = vec![Polynomial::zero(n); n + 1];
        for (slot, &k) in keep.iter().enumerate() {
            comps[k] = s.components()[slot].clone();
        }
        gens.push(FreeModuleElement::new(comps, degrees.clone())?);
    }
    for k in (0..n).filter(|&k| columns[k].is_zero()) {
        let mut comps = vec![Polynomial::zero(n); n + 1];
        comps[k] = Polynomial::one(n);
        gens.push(FreeModuleElement::new(comps, degrees.clone())?);
    }
    let pres = presentation(&gens)?;
    let shift = d - 1;
    let generator_pdegrees: Vec<i64> = pres.generator_degrees.iter().map(|g| g - shift).collect();
    let relation_degrees: Vec<i64> = pres.relation_degrees.iter().map(|r| r - shift).collect();
    Ok(DerivationPresentation {
        is_free: relation_degrees.is_empty(),
        generator_pdegrees,
        relation_degrees,
        generators: pres.generators,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlusOne {
    pub plus_one: bool,
    /// The `n + 1` exponents, ascending, when plus-one generated.
    pub exponents: Vec<i64>,
    pub level: Option<i64>,
    /// The exponents start with `k - 2` zeros and a one, and `n - k + 3`
    /// must equal the rank of the arrangement.
    pub rank_consistent: Option<bool>,
}

/// Shape test on a presentation: `n + 2` generators, one relation of degree
/// `a + 1`, and a generator of degree `a` to drop.
pub fn plus_one_from_shape(generator_pdegrees: &[i64], relation_degrees: &[i64], nvars: usize) -> PlusOne {
    let no = PlusOne { plus_one: false, exponents: Vec::new(), level: None, rank_consistent: None };
    if generator_pdegrees.len() != nvars + 1 || relation_degrees.len() != 1 {
        return no;
    }
    let a = relation_degrees[0] - 1;
    let Some(pos) = generator_pdegrees.iter().position(|&g| g == a) else {
        return no;
    };
    let mut exponents = generator_pdegrees.to_vec();
    exponents.remove(pos);
    exponents.sort();
    PlusOne { plus_one: true, exponents, level: Some(a), rank_consistent: None }
}

pub fn is_plus_one_generated(a: &Arrangement) -> Result<PlusOne> {
    let pres = derivation_presentation(a)?;
    Ok(plus_one_with_rank(a, &pres))
}

fn plus_one_with_rank(a: &Arrangement, pres: &DerivationPresentation) -> PlusOne {
    let mut p = plus_one_from_shape(&pres.generator_pdegrees, &pres.relation_degrees, a.nvars());
    if p.plus_one {
        let zeros = p.exponents.iter().take_while(|&&e| e == 0).count();
        let k = zeros + 2;
        let n = a.nvars() - 1;
        let rank = a.rank();
        let jac_gens = minimal_ideal_generators(jacobian_ideal(a).generators()).len();
        let shape_ok = p.exponents.get(zeros) == Some(&1);
        p.rank_consistent = Some(shape_ok && n + 3 - k == rank && jac_gens == rank);
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    /// Smallest `p` with `x1^p` in `rgin(J(A))`.
    pub p0: Option<u32>,
    /// Smallest degree of a minimal generator involving `x2, ..., x_n`.
    pub min_tail_degree: Option<u32>,
    #[serde(serialize_with = "serialize_monomial")]
    pub offending: Option<Monomial>,
    pub pass: bool,
}

fn serialize_monomial<S: serde::Serializer>(m: &Option<Monomial>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match m {
        Some(m) => s.serialize_some(&m.to_string()),
        None => s.serialize_none(),
    }
}

pub fn conjecture_verdict(gin: &MonomialIdeal) -> ConjectureVerdict {
    let n = gin.nvars();
    if gin.is_unit() || n < 3 {
        let p0 = if gin.is_unit() { Some(0) } else { gin.mingens().iter().filter(|g| n >= 2 && g.exponent(1) as u32 == g.degree()).map(|g| g.degree()).min() };
        return ConjectureVerdict { p0, min_tail_degree: None, offending: None, pass: true };
    }
    let p0 = gin.mingens().iter().filter(|g| g.exponent(1) as u32 == g.degree()).map(|g| g.degree()).min();
    let tail = gin.mingens().iter().filter(|g| (2..n).any(|i| g.exponent(i) > 0)).min_by_key(|g| g.degree()).copied();
    let min_tail_degree = tail.map(|t| t.degree());
    let pass = match (min_tail_degree, p0) {
        (None, _) => true,
        (Some(t), Some(p)) => t >= p,
        (Some(_), None) => false,
    };
    ConjectureVerdict { p0, min_tail_degree, offending: if pass { None } else { tail }, pass }
}

pub fn check_conjecture(a: &Arrangement, opts: &GinOptions) -> Result<ConjectureVerdict> {
    let gin = rgin(&jacobian_ideal(a), opts)?.result;
    Ok(conjecture_verdict(&gin))
}

/// One implication checked on an arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyFlag {
    pub name: &'static str,
    pub applicable: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementReport {
    pub name: Option<String>,
    pub hyperplanes: Vec<String>,
    pub nvars: usize,
    pub d: usize,
    pub central: bool,
    pub essential: bool,
    pub rank: usize,
    pub free: bool,
    pub exponents: Option<Vec<i64>>,
    pub derivations: DerivationPresentation,
    pub plus_one: PlusOne,
    pub gin_generators: MonomialIdeal,
    pub gin_shape: GinShape,
    pub conjecture: ConjectureVerdict,
    pub wlp: bool,
    /// Degree `k` of the first map `x l : R_{k-1} -> R_k` without full rank.
    pub wlp_failure_degree: Option<u32>,
    pub slp: bool,
    pub oracle_agrees: Option<bool>,
    pub consistency: Vec<ConsistencyFlag>,
}

impl ArrangementReport {
    /// Names of applicable implications that failed.
    pub fn violations(&self) -> Vec<&'static str> {
        self.consistency.iter().filter(|f| f.applicable && !f.holds).map(|f| f.name).collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub gin: GinOptions,
    /// Put `Q` among the Jacobian generators (it is redundant in
    /// characteristic 0); used to re-check that redundancy.
    pub include_q: bool,
    /// Recompute the Lefschetz verdicts by linear algebra and require the
    /// two routes to agree.
    pub cross_validate: bool,
}

pub fn analyze(a: &Arrangement, opts: &AnalysisOptions) -> Result<ArrangementReport> {
    let n = a.nvars();
    let d = a.len();
    let jac = if opts.include_q { jacobian_ideal_with_q(a) } else { jacobian_ideal(a) };
    let gin = rgin(&jac, &opts.gin)?.result;
    let (wlp, slp, oracle_agrees): (LefschetzReport, LefschetzReport, Option<bool>) = if opts.cross_validate {
        let w = cross_validate(&jac, Property::Wlp, &opts.gin)?;
        let s = cross_validate(&jac, Property::Slp, &opts.gin)?;
        (w, s, Some(true))
    } else {
        (decide_from_gin(&gin, Property::Wlp)?, decide_from_gin(&gin, Property::Slp)?, None)
    };
    let shape = gin_shape(&gin, d);
    let derivations = derivation_presentation(a)?;
    let plus_one = plus_one_with_rank(a, &derivations);
    let conjecture = conjecture_verdict(&gin);
    let essential = is_essential(a);
    let free = derivations.is_free;
    let exponents = free.then(|| derivations.generator_pdegrees.clone());
    // failures are recorded by source degree; the bound is about the target
    let failure_degree = wlp.min_failure_degree().map(|i| i + 1);

    let flag = |name, applicable, holds| ConsistencyFlag { name, applicable, holds };
    let consistency = vec![
        flag("gin staircase freeness agrees with D(A)", true, shape.free == free),
        flag("rgin(J) has the x0^(d-1), x1^p shape", true, shape.shape_holds),
        flag("K^2 implies SLP", n == 2, slp.holds),
        flag("essential in K^3 implies WLP", n == 3 && essential, wlp.holds),
        flag("free implies SLP", free, slp.holds),
        flag("plus-one generated in K^(n+1), n >= 3, implies SLP", plus_one.plus_one && n >= 4, slp.holds),
        flag("essential WLP failures start in degree >= d", essential && !wlp.holds, failure_degree.is_none_or(|k| k as usize >= d)),
        flag("generator degree bound holds in K^3", n == 3 && essential, conjecture.pass),
        flag("free arrangements are not plus-one generated", free, !plus_one.plus_one),
        flag("free exponents sum to d", free, exponents.as_ref().is_some_and(|e| e.iter().sum::<i64>() == d as i64)),
        flag("plus-one exponents match the rank", plus_one.plus_one, plus_one.rank_consistent == Some(true)),
    ];

    Ok(ArrangementReport {
        name: a.name.clone(),
        hyperplanes: a.forms().iter().map(|f| f.to_string()).collect(),
        nvars: n,
        d,
        central: true,
        essential,
        rank: a.rank(),
        free,
        exponents,
        derivations,
        plus_one,
        gin_generators: gin,
        gin_shape: shape,
        conjecture,
        wlp: wlp.holds,
        wlp_failure_degree: failure_degree,
        slp: slp.holds,
        oracle_agrees,
        consistency,
    })
}

/// Random arrangements with small integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub count: usize,
    pub nvars: usize,
    pub min_d: usize,
    pub max_d: usize,
    pub seed: u64,
    /// Coefficients are drawn from `[-bound, bound]`.
    pub bound: i64,
    pub essential_only: bool,
}

impl CorpusSpec {
    pub fn new(count: usize, nvars: usize, min_d: usize, max_d: usize, seed: u64) -> Self {
        CorpusSpec { count, nvars, min_d, max_d, seed, bound: 3, essential_only: true }
    }
}

/// Arrangement number `index` of a corpus; depends only on the spec's seed
/// and the index.
pub fn corpus_member(spec: &CorpusSpec, index: usize) -> Arrangement {
    let mut rng = rng_for(spec.seed, Stream::Corpus, index as u64);
    let n = spec.nvars;
    let min_d = spec.min_d.max(if spec.essential_only { n } else { 1 });
    let max_d = spec.max_d.max(min_d);
    loop {
        let d = rng.gen_range(min_d..=max_d);
        let mut seen: Vec<Vec<Rational>> = Vec::new();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut attempts = 0;
        while rows.len() < d && attempts < 1000 {
            attempts += 1;
            let row: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-spec.bound..=spec.bound))).collect();
            let Some(key) = normalized(&row) else { continue };
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            rows.push(row);
        }
        if rows.len() < d {
            continue;
        }
        let a = Arrangement::new(n, rows).expect("rows are distinct and nonzero").named(format!("corpus-{index}"));
        if !spec.essential_only || is_essential(&a) {
            return a;
        }
    }
}

pub fn generate_corpus(spec: &CorpusSpec) -> Vec<Arrangement> {
    (0..spec.count).map(|k| corpus_member(spec, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn boolean() -> Arrangement {
        Arrangement::parse("3\n1 0 0\n0 1 0\n0 0 1").unwrap()
    }

    fn braid() -> Arrangement {
        Arrangement::from_integers(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1]]).unwrap()
    }

    #[test]
    fn parsing() {
        let b = boolean();
        assert_eq!(b.len(), 3);
        assert_eq!(b.defining_polynomial(), parse_polynomial("x0*x1*x2", 3).unwrap());
        let e = Arrangement::parse("3\n1 0 0\n# comment\n0 1 0\n2 0 0\n").unwrap_err();
        assert_eq!(e, Error::InvalidArrangement("line 2 and line 5 define the same hyperplane".into()));
        assert!(matches!(Arrangement::parse("3\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Arrangement::parse("3\n1 a 0\n"), Err(Error::Parse { line: 2, column: 3, .. })));
        assert!(matches!(Arrangement::parse("# nothing\n"), Err(Error::InvalidArrangement(_))));
        assert!(matches!(Arrangement::parse("3\n0 0 0\n"), Err(Error::InvalidArrangement(_))));
        let half = Arrangement::parse("2\n1/2 -3\n1 1").unwrap();
        assert_eq!(Arrangement::parse(&half.to_text()).unwrap(), half);
    }

    #[test]
    fn essentiality() {
        assert!(is_essential(&boolean()));
        let line = Arrangement::from_integers(3, &[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]).unwrap();
        assert!(!is_essential(&line));
        assert_eq!(line.rank(), 2);
    }

    #[test]
    fn jacobian_examples() {
        let j = jacobian_ideal(&boolean());
        assert_eq!(j, Ideal::parse("x1*x2, x0*x2, x0*x1", 3).unwrap());
        let two = Arrangement::from_integers(3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(jacobian_ideal(&two), Ideal::parse("x1, x0", 3).unwrap());
        // Q is redundant
        for a in [boolean(), braid()] {
            assert_eq!(jacobian_ideal_with_q(&a), jacobian_ideal(&a));
            assert!(jacobian_ideal(&a).contains(&a.defining_polynomial()));
        }
    }

    #[test]
    fn derivations_of_free_examples() {
        let b = derivation_presentation(&boolean()).unwrap();
        assert_eq!((b.generator_pdegrees.clone(), b.is_free), (vec![1, 1, 1], true));
        let r = derivation_presentation(&braid()).unwrap();
        assert_eq!((r.generator_pdegrees.clone(), r.is_free), (vec![1, 2, 3], true));
        assert!(!is_plus_one_generated(&braid()).unwrap().plus_one);
    }

    #[test]
    fn derivations_of_a_non_essential_arrangement() {
        // three lines through a point in a plane, times an extra direction
        let a = Arrangement::from_integers(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]).unwrap();
        let p = derivation_presentation(&a).unwrap();
        assert!(p.is_free);
        assert_eq!(p.generator_pdegrees, vec![0, 1, 2]);
    }

    #[test]
    fn synthetic_plus_one_shape() {
        let p = plus_one_from_shape(&[1, 2, 2, 2], &[3], 3);
        assert!(p.plus_one);
        assert_eq!((p.exponents.clone(), p.level), (vec![1, 2, 2], Some(2)));
        assert!(!plus_one_from_shape(&[1, 2, 3], &[], 3).plus_one);
    }

    #[test]
    fn gin_shapes() {
        let opts = GinOptions::default();
        let b = gin_shape_freeness(&boolean(), &opts).unwrap();
        assert!(b.free && b.shape_holds);
        assert_eq!(b.lambda, Some(vec![1, 2]));
        let r = gin_shape_freeness(&braid(), &opts).unwrap();
        assert!(r.free && r.shape_holds);
    }

    #[test]
    fn boolean_report() {
        let r = analyze(&boolean(), &AnalysisOptions::default()).unwrap();
        assert!(r.free && r.slp && r.wlp);
        assert_eq!(r.exponents, Some(vec![1, 1, 1]));
        assert!(r.conjecture.pass);
        assert!(r.violations().is_empty(), "{:?}", r.violations());
    }

    #[test]
    fn plane_arrangements_have_slp() {
        for rows in [vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1], vec![1, 2]]] {
            let a = Arrangement::from_integers(2, &rows).unwrap();
            let r = analyze(&a, &AnalysisOptions::default()).unwrap();
            assert!(r.slp && r.free, "{rows:?}");
            assert!(r.violations().is_empty(), "{:?}", r.violations());
        }
    }

    fn eight_lines() -> Arrangement {
        let rows = [[1, 0, 0], [0, 0, 1], [1, 0, -1], [1, -1, 0], [0, 1, -1], [0, 1, -2], [0, 1, -3], [0, 1, -4]];
        Arrangement::from_integers(3, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn eight_line_report() {
        let a = eight_lines();
        assert!(is_essential(&a));
        let j = jacobian_ideal(&a);
        assert_eq!(j.generators().len(), 3);
        assert!(j.generators().iter().all(|g| g.homogeneous_degree() == Some(7)));
        let r = analyze(&a, &AnalysisOptions::default()).unwrap();
        assert!(r.wlp && !r.slp && !r.free && !r.gin_shape.free);
        assert_eq!(r.derivations.generator_pdegrees, vec![1, 3, 5, 5]);
        assert_eq!(r.plus_one.exponents, vec![1, 3, 5]);
        assert_eq!(r.plus_one.level, Some(5));
        assert_eq!((r.conjecture.p0, r.conjecture.min_tail_degree, r.conjecture.pass), (Some(10), Some(11), true));
        assert!(r.violations().is_empty(), "{:?}", r.violations());
    }

    #[test]
    fn generic_five_planes_fail_into_degree_five() {
        let a = Arrangement::from_integers(4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![1, 1, 1, 1]]).unwrap();
        let r = analyze(&a, &AnalysisOptions::default()).unwrap();
        assert!(!r.wlp && !r.slp && !r.free);
        // the first bad map is (S/J)_4 -> (S/J)_5, so the bound k >= d is
        // met exactly when k names the target degree
        assert_eq!(r.wlp_failure_degree, Some(5));
        assert!(r.violations().is_empty(), "{:?}", r.violations());
    }

    #[test]
    fn corpus_is_deterministic() {
        let spec = CorpusSpec::new(5, 3, 3, 6, 11);
        let a = generate_corpus(&spec);
        assert_eq!(a, generate_corpus(&spec));
        assert!(a.iter().all(|x| is_essential(x) && (3..=6).contains(&x.len())));
        assert_eq!(corpus_member(&spec, 3), a[3]);
    }
}
