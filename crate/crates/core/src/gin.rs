//! Generic initial ideals for degrevlex, with a certificate of how the
//! result was obtained.
//!
//! Genericity is realized by random dense integer changes of coordinates.
//! A result is accepted once two independent trials produce the same
//! initial ideal and that ideal is strongly stable. Each trial draws from
//! its own seed derived from `(seed, trial index)`, so the outcome is
//! reproducible and independent of how trials are scheduled.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{irrelevant_saturation, leading_monomial_ideal, Ideal, MonomialIdeal};
use crate::hilbert::hilbert_function;
use crate::random::{random_change, rng_for, Stream, DEFAULT_SEED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GinOptions {
    pub seed: u64,
    /// Entries of the random matrices are drawn from `[-bound, bound]`.
    pub bound: u64,
    /// Total number of random changes tried before giving up.
    pub max_trials: usize,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions { seed: DEFAULT_SEED, bound: 1000, max_trials: 8 }
    }
}

impl GinOptions {
    pub fn with_seed(seed: u64) -> Self {
        GinOptions { seed, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GinTrial {
    pub index: usize,
    pub bound: u64,
    pub generators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GinCertificate {
    pub result: MonomialIdeal,
    pub trials_agreeing: usize,
    pub seed: u64,
    /// Bound in force when the accepted result was confirmed.
    pub coefficient_bound: u64,
    pub strongly_stable: bool,
    pub trials: Vec<GinTrial>,
}

/// For every generator `t`, every `x_j | t` and every `i < j`,
/// `x_i * t / x_j` lies in the ideal.
pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    let n = ideal.nvars();
    ideal.mingens().iter().all(|t| {
        (1..n).filter(|&j| t.exponent(j) > 0).all(|j| {
            let base = t.with_exponent(j, t.exponent(j) - 1);
            (0..j).all(|i| ideal.contains(&base.mul_var(i, 1)))
        })
    })
}

fn gin_trial(ideal: &Ideal, seed: u64, index: usize, bound: u64) -> Result<MonomialIdeal> {
    let mut rng = rng_for(seed, Stream::GinTrial, index as u64);
    let g = random_change(ideal.nvars(), bound, &mut rng);
    let moved = ideal.apply_change(&g)?;
    Ok(leading_monomial_ideal(ideal.nvars(), moved.generators()))
}

pub fn rgin(ideal: &Ideal, opts: &GinOptions) -> Result<GinCertificate> {
    let n = ideal.nvars();
    let trivial = |result: MonomialIdeal| GinCertificate {
        strongly_stable: true,
        result,
        trials_agreeing: 2,
        seed: opts.seed,
        coefficient_bound: opts.bound,
        trials: Vec::new(),
    };
    if ideal.is_zero() {
        return Ok(trivial(MonomialIdeal::zero(n)));
    }
    if ideal.generators().iter().any(|g| g.is_constant()) {
        return Ok(trivial(MonomialIdeal::unit(n)));
    }

    let mut results: Vec<(MonomialIdeal, u64)> = Vec::new();
    let mut trials = Vec::new();
    let mut bound = opts.bound;
    let max = opts.max_trials.max(2);
    let mut next = 0usize;
    while next < max {
        // the first two trials are independent of each other; run them together
        let batch: Vec<(usize, u64)> = if next == 0 { vec![(0, bound), (1, bound)] } else { vec![(next, bound)] };
        let computed: Vec<Result<MonomialIdeal>> = if batch.len() == 2 {
            let (a, b) = rayon::join(
                || gin_trial(ideal, opts.seed, batch[0].0, batch[0].1),
                || gin_trial(ideal, opts.seed, batch[1].0, batch[1].1),
            );
            vec![a, b]
        } else {
            vec![gin_trial(ideal, opts.seed, batch[0].0, batch[0].1)]
        };
        for ((index, b), r) in batch.into_iter().zip(computed) {
            let r = r?;
            trials.push(GinTrial { index, bound: b, generators: r.mingens().len() });
            results.push((r, b));
        }
        next = results.len();

        let last = &results[results.len() - 1].0;
        let agreeing = results.iter().filter(|(r, _)| r == last).count();
        if agreeing >= 2 && is_strongly_stable(last) {
            return Ok(GinCertificate {
                result: last.clone(),
                trials_agreeing: agreeing,
                seed: opts.seed,
                coefficient_bound: bound,
                strongly_stable: true,
                trials,
            });
        }
        bound = bound.saturating_mul(2);
    }
    Err(Error::GinNonConvergence { trials: results.len(), bound })
}

/// Largest degree of a minimal generator; `0` for the zero and unit ideals.
pub fn regularity(ideal: &MonomialIdeal) -> Result<u32> {
    if !is_strongly_stable(ideal) {
        return Err(Error::NotStronglyStable);
    }
    Ok(ideal.max_generator_degree().unwrap_or(0))
}

/// No minimal generator of `rgin(I)` involves the last variable.
pub fn is_saturated(ideal: &Ideal, opts: &GinOptions) -> Result<bool> {
    let gin = rgin(ideal, opts)?;
    Ok(gin_is_saturated(&gin.result))
}

pub fn gin_is_saturated(gin: &MonomialIdeal) -> bool {
    let last = gin.nvars() - 1;
    gin.generators_divisible_by(last).next().is_none()
}

/// `x_n -> 1` in every generator, re-minimalized.
pub fn gin_saturate(ideal: &MonomialIdeal) -> MonomialIdeal {
    let last = ideal.nvars() - 1;
    MonomialIdeal::new(ideal.nvars(), ideal.mingens().iter().map(|g| g.with_exponent(last, 0)))
}

/// `I^sat` certified against the generic initial ideal: the Hilbert function
/// of the computed saturation must match `gin_saturate(rgin(I))` through
/// degree `reg + 1`.
pub fn certified_saturation(ideal: &Ideal, gin: &MonomialIdeal, opts: &GinOptions) -> Result<Ideal> {
    let expected = gin_saturate(gin);
    let top = regularity(gin)? + 1;
    if gin_is_saturated(gin) {
        return Ok(ideal.clone());
    }
    let mut bound = opts.bound;
    for attempt in 0..opts.max_trials.max(1) {
        let mut rng = rng_for(opts.seed, Stream::Saturation, attempt as u64);
        // only the last row of g^{-1} enters, so sample g^{-1} directly
        let g = random_change(ideal.nvars(), bound, &mut rng).inverse();
        let sat = irrelevant_saturation(ideal, &g)?;
        let lt = sat.leading_term_ideal();
        if (0..=top).all(|d| hilbert_function(&lt, d) == hilbert_function(&expected, d)) {
            return Ok(sat);
        }
        bound = bound.saturating_mul(2);
    }
    Err(Error::SaturationCertification(opts.max_trials))
}
