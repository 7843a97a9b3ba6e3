//! Degree identity `T(R∘f) = d·T(f) + O(1)` as an exact slope law.
//!
//! Beyond every zero and pole radius, and beyond the radius where `µ̂`
//! crosses zero, `T̂(s, g)` is affine in `s` with slope equal to the total
//! degree of `g`. Two such radii give the slopes exactly.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::check::{Claim, DegreeInstance, Verdict};
use crate::error::Result;
use crate::nevanlinna::{characteristic, poles, zeros};
use crate::ratfunc::RatFunc;
use crate::scalar::{int, valuation, LogRadius, Prime, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub d: usize,
    pub deg_f: usize,
    pub s1: LogRadius,
    pub s2: LogRadius,
    pub slope_f: Rational,
    pub slope_composed: Rational,
    pub verdicts: Vec<Verdict>,
}

/// Every radius past which `T̂(s, g)` is affine.
fn affine_thresholds(g: &RatFunc, p: Prime) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    if !g.num().is_constant() {
        out.extend(zeros(g, p)?.radii.into_iter().map(|(r, _)| r));
    }
    out.extend(poles(g, p)?.radii.into_iter().map(|(r, _)| r));
    let dn = g.num().degree().expect("nonzero") as i64;
    let dd = g.den().degree().expect("nonzero") as i64;
    if dn != dd {
        let ln = valuation(g.num().lead().expect("nonzero"), p)
            .into_finite()
            .expect("nonzero");
        let ld = valuation(g.den().lead().expect("nonzero"), p)
            .into_finite()
            .expect("nonzero");
        out.push((ld - ln) / int(dn - dd));
    }
    Ok(out)
}

/// Slopes of `T̂(·, R∘f)` and `d·T̂(·, f)` at two radii beyond every
/// threshold, as a pair of verdicts (`≤` both ways).
pub fn check_degree_identity(instance: u64, inst: &DegreeInstance) -> Result<DegreeReport> {
    let p = inst.prime;
    let g = inst.composed()?;
    let mut thresholds = affine_thresholds(&inst.f, p)?;
    thresholds.extend(affine_thresholds(&g, p)?);
    let top = thresholds
        .into_iter()
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    let s1 = LogRadius::new(top + Rational::one());
    let s2 = &s1 + &Rational::one();
    let slope = |h: &RatFunc| -> Result<Rational> { Ok(characteristic(h, p, &s2)?.t - characteristic(h, p, &s1)?.t) };
    let slope_f = slope(&inst.f)?;
    let slope_composed = slope(&g)?;
    let d = inst.d();
    let expected = int(d as i64) * &slope_f;
    let verdicts = alloc::vec![
        Verdict::new(
            instance,
            Claim::SlopeUpper,
            s1.clone(),
            slope_composed.clone(),
            expected.clone()
        ),
        Verdict::new(
            instance,
            Claim::SlopeLower,
            s1.clone(),
            expected,
            slope_composed.clone()
        ),
    ];
    Ok(DegreeReport {
        d,
        deg_f: inst.f.total_degree()?,
        s1,
        s2,
        slope_f,
        slope_composed,
        verdicts,
    })
}
