//! Weak and strong Lefschetz properties of graded quotients `S/I`.
//!
//! The default route works on the Artinian reduction
//! `M = rgin(I) + m^{r+1}`, `r = reg(rgin(I))`, where multiplication by a
//! power of the last variable has a purely combinatorial rank. The oracle
//! route computes the same ranks by linear algebra on `S/(I + m^{r+1})` in
//! the original coordinates with a random linear form.

mod aci;
mod quotient;

use rayon::prelude::*;
use serde::Serialize;

pub use aci::{aci_analyze, AciReport, Stability};
pub use quotient::{GradedQuotient, MapRank};

use crate::error::{Error, Result};
use crate::gin::{certified_saturation, gin_is_saturated, regularity, rgin, GinOptions};
use crate::groebner::{Ideal, MonomialIdeal};
use crate::hilbert::hilbert_series;
use crate::polyring::{Monomial, Polynomial};
use crate::random::{random_linear_form, rng_for, Stream};

/// Coefficient bound for random Lefschetz elements.
pub const LINEAR_FORM_BOUND: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Wlp,
    Slp,
}

impl std::fmt::Display for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Property::Wlp => "WLP",
            Property::Slp => "SLP",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    GinFastPath,
    LinearAlgebraOracle,
}

/// Rank of `x l^s : A_i -> A_{i+s}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankRecord {
    pub i: u32,
    pub s: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub full_rank: bool,
    /// Kernel element when the map should be injective, otherwise an
    /// element of the target outside the image.
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<Polynomial>,
}

fn serialize_witness<S: serde::Serializer>(w: &Option<Polynomial>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(p) => s.serialize_some(&p.to_string()),
        None => s.serialize_none(),
    }
}

impl RankRecord {
    fn from_map(i: u32, s: u32, m: MapRank) -> Self {
        RankRecord { i, s, full_rank: m.full_rank(), source_dim: m.source_dim, target_dim: m.target_dim, rank: m.rank, witness: m.witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    pub property: Property,
    pub holds: bool,
    pub failures: Vec<RankRecord>,
    pub route: Route,
    pub reg: u32,
    /// `r + 1`: the quotient vanishes from this degree on.
    pub artinian_truncation_degree: u32,
    pub profile: Vec<RankRecord>,
    /// Set when the report was cross-checked against the other route.
    pub oracle_agrees: Option<bool>,
    pub note: Option<String>,
}

impl LefschetzReport {
    /// Smallest source degree of a failing map.
    pub fn min_failure_degree(&self) -> Option<u32> {
        self.failures.iter().map(|f| f.i).min()
    }
}

/// Rank of `x x_n^s : (S/M)_i -> (S/M)_{i+s}`: the number of standard
/// monomials of degree `i` that stay standard after multiplying by `x_n^s`.
pub fn mult_rank_monomial(ideal: &MonomialIdeal, i: u32, s: u32) -> RankRecord {
    let last = ideal.nvars() - 1;
    let source = ideal.standard_monomials(i);
    let target = ideal.standard_monomials(i + s);
    let lifted: Vec<Monomial> = source.iter().map(|m| m.mul_var(last, s as u16)).collect();
    let rank = lifted.iter().filter(|m| !ideal.contains(m)).count();
    let full_rank = rank == source.len().min(target.len());
    let witness = if full_rank {
        None
    } else if source.len() <= target.len() {
        source.iter().zip(&lifted).find(|(_, l)| ideal.contains(l)).map(|(m, _)| *m)
    } else {
        target.iter().find(|t| t.exponent(last) < s as u16).copied()
    };
    RankRecord {
        i,
        s,
        source_dim: source.len(),
        target_dim: target.len(),
        rank,
        full_rank,
        witness: witness.map(|m| Polynomial::from_monomial(m, crate::polyring::rat(1))),
    }
}

/// `gin + m^{r+1}` with `r = reg(gin)`, and `r`.
pub fn truncate(gin: &MonomialIdeal) -> Result<(MonomialIdeal, u32)> {
    if gin.is_unit() {
        return Ok((gin.clone(), 0));
    }
    let r = regularity(gin)?;
    Ok((gin.sum(&MonomialIdeal::maximal_power(gin.nvars(), r + 1)), r))
}

pub fn artinian_truncation(ideal: &Ideal, opts: &GinOptions) -> Result<MonomialIdeal> {
    let gin = rgin(ideal, opts)?;
    Ok(truncate(&gin.result)?.0)
}

/// The `(i, s)` pairs whose maps decide the property on an Artinian
/// algebra with socle degree at most `r`.
pub fn pairs(property: Property, r: u32) -> Vec<(u32, u32)> {
    match property {
        Property::Wlp => (0..=r).map(|i| (i, 1)).collect(),
        Property::Slp => (1..=r + 1).flat_map(|s| (0..=r + 1 - s).map(move |i| (i, s))).collect(),
    }
}

fn trivial_report(property: Property, route: Route, note: &str) -> LefschetzReport {
    LefschetzReport {
        property,
        holds: true,
        failures: Vec::new(),
        route,
        reg: 0,
        artinian_truncation_degree: 0,
        profile: Vec::new(),
        oracle_agrees: None,
        note: Some(note.to_string()),
    }
}

fn special_case(ideal: &Ideal, property: Property, route: Route) -> Option<LefschetzReport> {
    if ideal.is_zero() {
        Some(trivial_report(property, route, "zero ideal: multiplication by a linear form is injective on S"))
    } else if ideal.is_unit() {
        Some(trivial_report(property, route, "unit ideal: the quotient is the zero ring"))
    } else {
        None
    }
}

fn assemble(property: Property, route: Route, r: u32, profile: Vec<RankRecord>) -> LefschetzReport {
    let failures: Vec<RankRecord> = profile.iter().filter(|p| !p.full_rank).cloned().collect();
    LefschetzReport {
        property,
        holds: failures.is_empty(),
        failures,
        route,
        reg: r,
        artinian_truncation_degree: r + 1,
        profile,
        oracle_agrees: None,
        note: None,
    }
}

/// Decides the property from a precomputed generic initial ideal.
pub fn decide_from_gin(gin: &MonomialIdeal, property: Property) -> Result<LefschetzReport> {
    let (m, r) = truncate(gin)?;
    let profile: Vec<RankRecord> =
        pairs(property, r).into_par_iter().map(|(i, s)| mult_rank_monomial(&m, i, s)).collect();
    Ok(assemble(property, Route::GinFastPath, r, profile))
}

pub fn decide(ideal: &Ideal, property: Property, opts: &GinOptions) -> Result<LefschetzReport> {
    if let Some(r) = special_case(ideal, property, Route::GinFastPath) {
        return Ok(r);
    }
    decide_from_gin(&rgin(ideal, opts)?.result, property)
}

pub fn has_wlp(ideal: &Ideal, opts: &GinOptions) -> Result<LefschetzReport> {
    decide(ideal, Property::Wlp, opts)
}

pub fn has_slp(ideal: &Ideal, opts: &GinOptions) -> Result<LefschetzReport> {
    decide(ideal, Property::Slp, opts)
}

/// Random Lefschetz element number `k` for a seed.
pub fn random_element(nvars: usize, seed: u64, k: u64) -> Polynomial {
    random_linear_form(nvars, LINEAR_FORM_BOUND, &mut rng_for(seed, Stream::LinearForm, k))
}

/// Ranks of `x l^s` on `S/(I + m^{r+1})` by linear algebra in the original
/// coordinates. A pair only counts as failing if two independent random
/// forms both give a rank defect; the larger rank is reported.
pub fn oracle_profile(ideal: &Ideal, property: Property, r: u32, seed: u64) -> Vec<RankRecord> {
    let n = ideal.nvars();
    let ells = [random_element(n, seed, 0), random_element(n, seed, 1)];
    let mut q = GradedQuotient::new(ideal);
    let mut powers: Vec<Vec<Polynomial>> = ells.iter().map(|l| vec![Polynomial::one(n), l.clone()]).collect();
    let mut profile = Vec::new();
    for (i, s) in pairs(property, r) {
        if i + s > r {
            // the target lies beyond the socle of the truncation
            let source_dim = q.dimension(i);
            profile.push(RankRecord { i, s, source_dim, target_dim: 0, rank: 0, full_rank: true, witness: None });
            continue;
        }
        let mut best: Option<MapRank> = None;
        for (k, l) in ells.iter().enumerate() {
            while powers[k].len() <= s as usize {
                let next = powers[k].last().unwrap() * l;
                powers[k].push(next);
            }
            let m = q.multiplication_rank(&powers[k][s as usize], i);
            let full = m.full_rank();
            if best.as_ref().is_none_or(|b| m.rank > b.rank) {
                best = Some(m);
            }
            if full {
                break;
            }
        }
        profile.push(RankRecord::from_map(i, s, best.unwrap()));
    }
    profile
}

pub fn decide_oracle(ideal: &Ideal, property: Property, opts: &GinOptions) -> Result<LefschetzReport> {
    if let Some(r) = special_case(ideal, property, Route::LinearAlgebraOracle) {
        return Ok(r);
    }
    let gin = rgin(ideal, opts)?;
    let r = regularity(&gin.result)?;
    Ok(assemble(property, Route::LinearAlgebraOracle, r, oracle_profile(ideal, property, r, opts.seed)))
}

/// Runs both routes and requires identical ranks for every pair.
pub fn cross_validate(ideal: &Ideal, property: Property, opts: &GinOptions) -> Result<LefschetzReport> {
    if let Some(r) = special_case(ideal, property, Route::GinFastPath) {
        return Ok(r);
    }
    let gin = rgin(ideal, opts)?;
    let mut fast = decide_from_gin(&gin.result, property)?;
    let oracle = oracle_profile(ideal, property, fast.reg, opts.seed);
    for (a, b) in fast.profile.iter().zip(&oracle) {
        if (a.i, a.s, a.source_dim, a.target_dim, a.rank) != (b.i, b.s, b.source_dim, b.target_dim, b.rank) {
            return Err(Error::Invariant(format!(
                "{property} routes disagree at (i={}, s={}): gin rank {} of {}x{}, oracle rank {} of {}x{}",
                a.i, a.s, a.rank, a.source_dim, a.target_dim, b.rank, b.source_dim, b.target_dim
            )));
        }
    }
    fast.oracle_agrees = Some(true);
    Ok(fast)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub dim: i64,
    pub unit_ideal: bool,
    pub saturated: bool,
    pub slp: bool,
    pub wlp: bool,
    /// `dim S/I >= 2`, where saturated, SLP and WLP must coincide.
    pub theorem_applies: bool,
    pub equivalences_consistent: bool,
}

pub fn classify_quotient(ideal: &Ideal, opts: &GinOptions) -> Result<Classification> {
    let gin = rgin(ideal, opts)?.result;
    let hs = hilbert_series(&gin);
    let unit_ideal = hs.is_zero_ring();
    let saturated = gin.is_unit() || gin_is_saturated(&gin);
    let (slp, wlp) = if unit_ideal || ideal.is_zero() {
        (true, true)
    } else {
        (decide_from_gin(&gin, Property::Slp)?.holds, decide_from_gin(&gin, Property::Wlp)?.holds)
    };
    let theorem_applies = !unit_ideal && hs.dim >= 2;
    let equivalences_consistent = !theorem_applies || (saturated == slp && slp == wlp);
    Ok(Classification { dim: hs.dim, unit_ideal, saturated, slp, wlp, theorem_applies, equivalences_consistent })
}

/// Rank of `x l : (I^sat/I)_i -> (I^sat/I)_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatQuotientRank {
    pub i: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl SatQuotientRank {
    pub fn injective(&self) -> bool {
        self.rank == self.source_dim
    }

    pub fn surjective(&self) -> bool {
        self.rank == self.target_dim
    }
}

/// The module `I^sat/I` with a fixed random linear form, set up once for
/// repeated rank queries.
pub struct SatQuotient {
    quotient: GradedQuotient,
    saturation: Ideal,
    ell: Polynomial,
    saturated: bool,
}

impl SatQuotient {
    pub fn new(ideal: &Ideal, opts: &GinOptions) -> Result<Self> {
        let gin = rgin(ideal, opts)?.result;
        let saturated = gin.is_unit() || gin_is_saturated(&gin);
        let saturation = if saturated { ideal.clone() } else { certified_saturation(ideal, &gin, opts)? };
        Ok(SatQuotient {
            quotient: GradedQuotient::new(ideal),
            saturation,
            ell: random_element(ideal.nvars(), opts.seed, 0),
            saturated,
        })
    }

    pub fn saturation(&self) -> &Ideal {
        &self.saturation
    }

    pub fn linear_form(&self) -> &Polynomial {
        &self.ell
    }

    /// `(I^sat)_i` as polynomials spanning it (not necessarily independent).
    fn spanning_set(&self, i: u32) -> Vec<Polynomial> {
        let n = self.saturation.nvars();
        let mut out = Vec::new();
        for g in self.saturation.groebner_basis().elements() {
            let d = g.homogeneous_degree().unwrap();
            if d <= i {
                out.extend(crate::polyring::graded_basis(i - d, n).iter().map(|u| g.mul_monomial(u)));
            }
        }
        out
    }

    pub fn rank(&mut self, i: u32) -> SatQuotientRank {
        if self.saturated {
            return SatQuotientRank { i, source_dim: 0, target_dim: 0, rank: 0 };
        }
        let src = self.spanning_set(i);
        let m = self.quotient.restricted_rank(&self.ell, &src, i);
        let tgt = self.spanning_set(i + 1);
        let target_dim = self.quotient.restricted_rank(&Polynomial::one(self.ell.nvars()), &tgt, i + 1).source_dim;
        SatQuotientRank { i, source_dim: m.source_dim, target_dim, rank: m.rank }
    }
}

pub fn sat_quotient_rank(ideal: &Ideal, i: u32, opts: &GinOptions) -> Result<SatQuotientRank> {
    Ok(SatQuotient::new(ideal, opts)?.rank(i))
}
