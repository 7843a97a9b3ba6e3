//! Per-radius steps behind the Malmquist-type restriction on `B(f)·Ω = Φ(f)`.
//!
//! Dividing `Φ = Φ₁·B + Φ₂` turns the equation into
//! `B(f)·(Ω − Φ₁(f)) = Φ₂(f)` with `deg Φ₂ < deg B`, to which the proximity
//! estimate applies verbatim; that is the hard assertion here. The growth
//! comparison `T̂(Ω) ≤ deg Ω·T̂(f) + Σ T̂(c_i) + C` is measured, not asserted:
//! poles of shifted operands are not controlled by `T̂(f)` alone. The
//! conclusions `q = 0` and `p ≤ deg Ω` need admissible solutions, which
//! rational `f` never are; they appear as ratio tables only.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::UniPoly;
use crate::check::clunie::proximity_verdicts;
use crate::check::{CheckOptions, Checked, Claim, ClunieInstance, Window};
use crate::error::Result;
use crate::nevanlinna::{characteristic, ratio_table, DecayTable, Ladder};
use crate::ratfunc::RatFunc;
use crate::scalar::{int, LogRadius, Prime, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRow {
    pub s: LogRadius,
    /// `T̂(Ω(f, ...))`.
    pub t_omega: Rational,
    /// `deg Ω·T̂(f) + Σ T̂(c_i)`.
    pub bound: Rational,
}

impl GrowthRow {
    pub fn excess(&self) -> Rational {
        &self.t_omega - &self.bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalmquistReport {
    /// `deg B`.
    pub q: usize,
    /// `deg Φ` in `X_0`.
    pub p: usize,
    pub omega_degree: u32,
    pub phi1: UniPoly,
    pub phi2: UniPoly,
    /// Proximity verdicts for the rearranged equation.
    pub rearranged: Checked,
    pub growth: Vec<GrowthRow>,
    /// Excess at the first admitted radius.
    pub constant: Option<Rational>,
    /// Whether the excess never rises above `constant` along the ladder.
    pub bounded: bool,
    /// `Σ T̂(coefficients) / T̂(f)`.
    pub admissibility: DecayTable,
    /// `T̂(Φ₂(f)/B(f)) / T̂(f)`; tends to `q` for large radii.
    pub remainder_ratio: DecayTable,
}

fn t_or_zero(g: &RatFunc, p: Prime, s: &LogRadius) -> Result<Rational> {
    if g.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(characteristic(g, p, s)?.t)
}

pub fn check_malmquist_consequence(
    instance: u64,
    inst: &ClunieInstance,
    ladder: &Ladder,
    opts: &CheckOptions,
) -> Result<MalmquistReport> {
    let phi = inst.phi.to_unipoly()?;
    inst.require_difference_family()?;
    inst.require_solution()?;
    let p = inst.prime;
    let nvars = inst.family.arity();
    let (phi1, phi2) = phi.div_rem(&inst.b)?;

    let rearranged_inst = ClunieInstance::new(
        p,
        inst.f.clone(),
        inst.family.clone(),
        inst.b.clone(),
        &inst.omega - &phi1.to_diffpoly(nvars),
        phi2.to_diffpoly(nvars),
    )?;
    debug_assert!(rearranged_inst.require_solution().is_ok());
    let rearranged = proximity_verdicts(instance, &rearranged_inst, Claim::ClunieRearranged, ladder, opts)?;

    let (inside, _) = Window::above(inst.window_floor()).split(ladder, opts.window)?;
    let omega_f = inst.omega.eval(&inst.f, &inst.family)?;
    let remainder = phi2.eval(&inst.f).checked_div(&inst.b.eval(&inst.f))?;
    let deg_omega = int(inst.omega_degree() as i64);
    let coefficients: Vec<&RatFunc> = inst
        .omega
        .coefficients()
        .chain(inst.phi.coefficients())
        .chain(inst.b.coeffs().iter())
        .filter(|c| !c.is_zero())
        .collect();

    let mut growth = Vec::with_capacity(inside.len());
    let mut coeff_t = Vec::with_capacity(inside.len());
    let mut remainder_t = Vec::with_capacity(inside.len());
    let mut f_t = Vec::with_capacity(inside.len());
    for s in &inside {
        let tf = t_or_zero(&inst.f, p, s)?;
        let mut c_sum = Rational::zero();
        for c in inst.omega.coefficients() {
            c_sum += t_or_zero(c, p, s)?;
        }
        growth.push(GrowthRow {
            s: s.clone(),
            t_omega: t_or_zero(&omega_f, p, s)?,
            bound: &deg_omega * &tf + c_sum,
        });
        let mut all = Rational::zero();
        for c in &coefficients {
            all += t_or_zero(c, p, s)?;
        }
        coeff_t.push(all);
        remainder_t.push(t_or_zero(&remainder, p, s)?);
        f_t.push(tf);
    }
    let constant = growth.first().map(GrowthRow::excess);
    let bounded = match &constant {
        Some(c) => growth.iter().all(|r| &r.excess() <= c),
        None => true,
    };
    Ok(MalmquistReport {
        q: inst.q(),
        p: phi.degree().unwrap_or(0),
        omega_degree: inst.omega_degree(),
        phi1,
        phi2,
        rearranged,
        growth,
        constant,
        bounded,
        admissibility: ratio_table(&inside, &coeff_t, &f_t),
        remainder_ratio: ratio_table(&inside, &remainder_t, &f_t),
    })
}
