//! The substitution chain bounding `m̂(1/(f − a))` for a non-solution `a`.
//!
//! With `g = f − a`, `P(g + a, ...) = Ψ(g, g_1, ...) + P(a, ...)` and `Ψ` has
//! no constant term. On the circle, `|g| > 1` gives `log⁺|1/g| = 0`, and
//! otherwise `1/g = −Ψ(g, ...)/(g·P(a, ...))` bounds `log⁺|1/g|` term by term.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::substitute_shift_target;
use crate::check::{CheckOptions, Checked, Claim, MokhonkoInstance, Verdict, Window};
use crate::error::{Error, Result};
use crate::nevanlinna::{characteristic, proximity_or_zero, ratio_table, DecayTable, Ladder};
use crate::ratfunc::RatFunc;
use crate::scalar::{int, LogRadius, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MokhonkoReport {
    pub checked: Checked,
    /// `m̂(1/g) / T̂(f)` along the admitted radii.
    pub advisory: DecayTable,
}

pub fn check_mokhonko(
    instance: u64,
    inst: &MokhonkoInstance,
    ladder: &Ladder,
    opts: &CheckOptions,
) -> Result<MokhonkoReport> {
    let p = inst.prime;
    if !inst.p.eval(&inst.f, &inst.family)?.is_zero() {
        return Err(Error::NotASolution);
    }
    let g = &inst.f - &inst.a;
    if g.is_zero() {
        return Err(Error::TargetIsSolution);
    }
    let (psi, pconst) = substitute_shift_target(&inst.p, &inst.a, &inst.family)?;
    if pconst.is_zero() {
        return Err(Error::TargetIsSolution);
    }
    let (inside, skipped) = Window::above(inst.window_floor()).split(ladder, opts.window)?;

    let g_inv = g.inv()?;
    let pconst_inv = pconst.inv()?;
    let operands = inst.family.operands(&g);
    let quotients: Vec<RatFunc> = operands[1..].iter().map(|gk| gk * &g_inv).collect();

    let mut verdicts = Vec::with_capacity(inside.len());
    let mut numerators = Vec::with_capacity(inside.len());
    let mut denominators = Vec::with_capacity(inside.len());
    for s in &inside {
        let lhs = proximity_or_zero(&g_inv, p, s);
        let quotient_m: Vec<Rational> = quotients.iter().map(|q| proximity_or_zero(q, p, s)).collect();
        let mut rhs = proximity_or_zero(&pconst_inv, p, s);
        for (e, c) in psi.terms() {
            rhs += proximity_or_zero(c, p, s);
            for (k, &ik) in e.as_slice()[1..].iter().enumerate() {
                if ik > 0 {
                    rhs += int(ik as i64) * &quotient_m[k];
                }
            }
        }
        numerators.push(lhs.clone());
        denominators.push(t_hat(&inst.f, inst, s)?);
        verdicts.push(Verdict::new(instance, Claim::MokhonkoChain, s.clone(), lhs, rhs));
    }
    let advisory = ratio_table(&inside, &numerators, &denominators);
    Ok(MokhonkoReport {
        checked: Checked { verdicts, skipped },
        advisory,
    })
}

fn t_hat(f: &RatFunc, inst: &MokhonkoInstance, s: &LogRadius) -> Result<Rational> {
    if f.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(characteristic(f, inst.prime, s)?.t)
}
