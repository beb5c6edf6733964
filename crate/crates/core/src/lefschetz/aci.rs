//! Almost complete intersections `I = <f0, f1, f2>` in three variables with
//! `dim S/I = 1`.

use serde::Serialize;

use super::{decide_from_gin, LefschetzReport, Property, SatQuotient, SatQuotientRank};
use crate::error::{Error, Result};
use crate::gin::{gin_is_saturated, regularity, rgin, GinOptions};
use crate::groebner::Ideal;
use crate::hilbert::{hilbert_series, stable_numerator_from_gin};
use crate::polyring::Polynomial;
use crate::syzygy::min_syzygy_degree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stability {
    /// `m(I) < (d0 + d1 + d2) / 2`.
    Unstable,
    StableOrSemistable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AciReport {
    pub degrees: [u32; 3],
    /// Smallest degree of a syzygy of `(f0, f1, f2)`.
    pub m: i64,
    pub deg_f: i64,
    /// `F(1)`.
    pub multiplicity: i64,
    pub numerator: Vec<i64>,
    pub stability: Stability,
    pub saturated: bool,
    /// `x l` on `I^sat/I` must be injective in degrees up to this one ...
    pub injective_through: i64,
    /// ... and surjective from this one on.
    pub surjective_from: i64,
    pub sat_quotient: Vec<SatQuotientRank>,
    pub thresholds_hold: bool,
    pub first_non_injective: Option<u32>,
    pub last_non_surjective: Option<u32>,
    pub wlp: LefschetzReport,
    /// Broken identities or theorem consequences; empty on a consistent run.
    pub violations: Vec<String>,
}

impl AciReport {
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn aci_analyze(f0: &Polynomial, f1: &Polynomial, f2: &Polynomial, opts: &GinOptions) -> Result<AciReport> {
    let forms = [f0, f1, f2];
    if let Some(f) = forms.iter().find(|f| f.nvars() != 3) {
        return Err(Error::VariableCountMismatch { expected: 3, found: f.nvars() });
    }
    let mut degrees = [0u32; 3];
    for (d, f) in degrees.iter_mut().zip(forms) {
        *d = f.require_homogeneous()?;
    }
    let ideal = Ideal::new(3, forms.iter().map(|f| (*f).clone()).collect())?;
    let gin = rgin(&ideal, opts)?.result;
    let hs = hilbert_series(&gin);
    if hs.is_zero_ring() || hs.dim != 1 {
        return Err(Error::DimensionGuard { expected: "1".into(), found: if hs.is_zero_ring() { -1 } else { hs.dim } });
    }
    let m = min_syzygy_degree(f0, f1, f2)?;
    let stable = stable_numerator_from_gin(&gin)?;
    let sum: i64 = degrees.iter().map(|&d| d as i64).sum();
    let stability = if 2 * m < sum { Stability::Unstable } else { Stability::StableOrSemistable };
    let saturated = gin_is_saturated(&gin);
    let mut violations = Vec::new();
    if stable.degree != sum - m - 2 {
        violations.push(format!("deg F = {} but d0+d1+d2-m(I)-2 = {}", stable.degree, sum - m - 2));
    }

    let top = regularity(&gin)? + 1;
    let mut sq = SatQuotient::new(&ideal, opts)?;
    let sat_quotient: Vec<SatQuotientRank> = (0..=top).map(|i| sq.rank(i)).collect();
    let deg_f = stable.degree;
    let mut thresholds_hold = true;
    for r in &sat_quotient {
        let i = r.i as i64;
        if i < deg_f && !r.injective() {
            thresholds_hold = false;
            violations.push(format!("x l on (I^sat/I)_{i} is not injective although i <= deg F - 1 = {}", deg_f - 1));
        }
        if i >= deg_f && !r.surjective() {
            thresholds_hold = false;
            violations.push(format!("x l on (I^sat/I)_{i} is not surjective although i >= deg F = {deg_f}"));
        }
    }
    let first_non_injective = sat_quotient.iter().find(|r| !r.injective()).map(|r| r.i);
    let last_non_surjective = sat_quotient.iter().rev().find(|r| !r.surjective()).map(|r| r.i);
    if stability == Stability::Unstable && !saturated {
        let sharp = sum - m - 1;
        if first_non_injective.map(i64::from) != Some(sharp) {
            violations.push(format!(
                "unstable syzygy bundle: injectivity should first fail at {sharp}, found {first_non_injective:?}"
            ));
        }
    }

    let wlp = decide_from_gin(&gin, Property::Wlp)?;
    if !wlp.holds {
        violations.push(format!("WLP fails in degrees {:?}", wlp.failures.iter().map(|f| f.i).collect::<Vec<_>>()));
    }

    Ok(AciReport {
        degrees,
        m,
        deg_f,
        multiplicity: stable.multiplicity,
        numerator: stable.numerator,
        stability,
        saturated,
        injective_through: deg_f - 1,
        surjective_from: deg_f,
        sat_quotient,
        thresholds_hold,
        first_non_injective,
        last_non_surjective,
        wlp,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 3).unwrap()
    }

    #[test]
    fn three_points() {
        let r = aci_analyze(&p("x1*x2"), &p("x0*x2"), &p("x0*x1"), &GinOptions::default()).unwrap();
        assert_eq!((r.m, r.deg_f, r.multiplicity), (3, 1, 3));
        assert!(r.saturated);
        assert!(r.sat_quotient.iter().all(|s| s.source_dim == 0));
        assert!(r.wlp.holds);
        assert!(r.consistent(), "{:?}", r.violations);
    }

    #[test]
    fn surjectivity_threshold_fails_on_a_fat_point() {
        // I^sat = <x0^2, x0*x1, x1^2>, so I^sat/I is x0*x1 in degree 2 only,
        // and deg F = 1: x l from (I^sat/I)_1 = 0 cannot be onto
        let r = aci_analyze(&p("x0^2"), &p("x1^2"), &p("x0*x1*x2 + x0^3"), &GinOptions::default()).unwrap();
        assert_eq!((r.m, r.deg_f, r.multiplicity), (4, 1, 3));
        assert_eq!(r.stability, Stability::StableOrSemistable);
        let dims: Vec<usize> = r.sat_quotient.iter().map(|s| s.source_dim).collect();
        assert_eq!(&dims[..4], &[0, 0, 1, 0]);
        assert!(r.wlp.holds);
        assert!(!r.thresholds_hold);
        assert_eq!(r.violations, vec!["x l on (I^sat/I)_1 is not surjective although i >= deg F = 1".to_string()]);
    }

    #[test]
    fn dimension_guard() {
        let e = aci_analyze(&p("x0"), &p("x1"), &p("x2"), &GinOptions::default()).unwrap_err();
        assert!(matches!(e, Error::DimensionGuard { .. }));
    }
}
