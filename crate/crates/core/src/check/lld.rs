//! Logarithmic-derivative analogues for affine shifts and differences.
//!
//! Entire case: for `|a| ≤ 1` and `s > λ(b) − λ(a)`, `µ̂(f∘L) ≤ µ̂(f)`, hence
//! `µ̂((f∘L)/f) ≤ 0` and `µ̂(Δ_L^m f / f) ≤ 0`. Meromorphic case: for `|a| = 1`
//! and `s > λ(b)` the maximum term is preserved exactly.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::AffineMap;
use crate::check::{Checked, Claim, Verdict, Window, WindowPolicy};
use crate::error::{Error, Result};
use crate::nevanlinna::Ladder;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::{unit_check, valuation, LogRadius, Prime, Rational};

/// The verdicts shared by both cases, given the three functions at play.
fn quotient_verdicts(
    instance: u64,
    p: Prime,
    s: &LogRadius,
    f: &RatFunc,
    shifted: &RatFunc,
    delta: &RatFunc,
    out: &mut Vec<Verdict>,
) -> Result<()> {
    let zero = Rational::zero();
    let shift_q = shifted.checked_div(f)?;
    let mu_q = shift_q.mu_hat(p, s)?;
    out.push(Verdict::new(
        instance,
        Claim::ShiftQuotient,
        s.clone(),
        mu_q,
        zero.clone(),
    ));
    out.push(Verdict::new(
        instance,
        Claim::ShiftProximity,
        s.clone(),
        shift_q.mu_log(p, s).log_plus(),
        zero.clone(),
    ));
    let delta_q = delta.checked_div(f)?;
    // Δ^m f ≡ 0 has no maximum term; only the log⁺ form is meaningful.
    if !delta_q.is_zero() {
        out.push(Verdict::new(
            instance,
            Claim::DeltaQuotient,
            s.clone(),
            delta_q.mu_hat(p, s)?,
            zero.clone(),
        ));
    }
    out.push(Verdict::new(
        instance,
        Claim::DeltaProximity,
        s.clone(),
        delta_q.mu_log(p, s).log_plus(),
        zero,
    ));
    Ok(())
}

pub fn check_lld_entire(
    instance: u64,
    p: Prime,
    f: &Poly,
    map: &AffineMap,
    order: u32,
    ladder: &Ladder,
    policy: WindowPolicy,
) -> Result<Checked> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let la = valuation(map.a(), p).into_finite().expect("a is nonzero");
    if la > Rational::zero() {
        return Err(Error::ExpandingMap(map.a().clone()));
    }
    let (inside, skipped) = Window::above(map.entire_floor(p)).split(ladder, policy)?;
    let shifted = map.apply_poly(f);
    let delta = map.delta_poly(f, order);
    let fr = RatFunc::from_poly(f.clone());
    let sr = RatFunc::from_poly(shifted.clone());
    let dr = RatFunc::from_poly(delta);
    let mut verdicts = Vec::new();
    for s in &inside {
        let lhs = shifted.mu_hat(p, s).into_finite().expect("nonzero");
        let rhs = f.mu_hat(p, s).into_finite().expect("nonzero");
        verdicts.push(Verdict::new(instance, Claim::ShiftMaxTermUpper, s.clone(), lhs, rhs));
        quotient_verdicts(instance, p, s, &fr, &sr, &dr, &mut verdicts)?;
    }
    Ok(Checked { verdicts, skipped })
}

pub fn check_lld_mero(
    instance: u64,
    p: Prime,
    f: &RatFunc,
    map: &AffineMap,
    order: u32,
    ladder: &Ladder,
    policy: WindowPolicy,
) -> Result<Checked> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if !unit_check(map.a(), p) {
        return Err(Error::NonUnitMap(map.a().clone()));
    }
    let (inside, skipped) = Window::above(map.unit_floor(p)).split(ladder, policy)?;
    let shifted = map.apply(f);
    let delta = map.delta(f, order);
    let mut verdicts = Vec::new();
    for s in &inside {
        let lhs = shifted.mu_hat(p, s)?;
        let rhs = f.mu_hat(p, s)?;
        verdicts.push(Verdict::new(
            instance,
            Claim::ShiftMaxTermUpper,
            s.clone(),
            lhs.clone(),
            rhs.clone(),
        ));
        verdicts.push(Verdict::new(instance, Claim::ShiftMaxTermLower, s.clone(), rhs, lhs));
        quotient_verdicts(instance, p, s, f, &shifted, &delta, &mut verdicts)?;
    }
    Ok(Checked { verdicts, skipped })
}
