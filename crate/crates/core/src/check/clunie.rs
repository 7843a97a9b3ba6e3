//! Clunie-type estimates for `B(f)·Ω(f, f_1, ...) = Φ(f, f_1, ...)`.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::algebra::{DiffPoly, UniPoly};
use crate::check::gen::{self, GeneratorConfig, RETRY_BUDGET};
use crate::check::{CheckOptions, Checked, Claim, ClunieInstance, Verdict, Window};
use crate::error::{Error, Result};
use crate::nevanlinna::{proximity_or_zero, valence, valence_or_zero, Ladder};
use crate::ratfunc::RatFunc;
use crate::scalar::{int, LogRadius, Prime, Rational};

/// Draws `f`, the operators, `B`, `Ω` and the higher part of `Φ`, then forces
/// `d_0` so that `f` solves the equation.
///
/// With `cfg.constant_b` every `b_j` is a constant; otherwise at least one is
/// a nonconstant rational function. With `cfg.phi_in_x0` the higher part of
/// `Φ` involves `X_0` only.
pub fn generate_clunie_instance(cfg: &GeneratorConfig, trial: u64) -> Result<ClunieInstance> {
    if cfg.operator == gen::OperatorKind::Derivative {
        return Err(Error::UnsupportedOperator("derivative"));
    }
    let mut rng = cfg.rng(trial);
    let p = cfg.prime;
    for _ in 0..RETRY_BUDGET {
        let f = gen::random_nonconstant_ratfunc(&mut rng, cfg);
        let family = gen::random_family(&mut rng, cfg)?;
        let nvars = family.arity();
        let q = rng.gen_range(1..=cfg.eq_degree.max(1));
        let mut b: Vec<RatFunc> = (0..q)
            .map(|_| {
                if rng.gen_bool(0.25) {
                    RatFunc::zero()
                } else if cfg.constant_b {
                    RatFunc::constant(gen::random_scalar(&mut rng, cfg))
                } else {
                    gen::random_coefficient(&mut rng, cfg)
                }
            })
            .collect();
        b.push(if cfg.constant_b {
            RatFunc::constant(gen::random_scalar(&mut rng, cfg))
        } else {
            gen::random_coefficient(&mut rng, cfg)
        });
        if !cfg.constant_b && b.iter().all(RatFunc::is_constant) {
            let j = rng.gen_range(0..=q);
            b[j] = gen::random_nonconstant_coefficient(&mut rng, cfg);
        }
        let b = UniPoly::new(b);
        if b.eval(&f).is_zero() {
            continue;
        }
        let omega_deg = cfg.eq_degree.max(1) as u32;
        let omega = gen::random_diffpoly(&mut rng, cfg, nvars, 1, omega_deg, 3, false);
        let higher = if rng.gen_bool(0.25) {
            DiffPoly::zero(nvars)
        } else {
            gen::random_diffpoly(&mut rng, cfg, nvars, 1, q as u32, 2, cfg.phi_in_x0)
        };
        let inst = ClunieInstance::complete(p, f, family, b, omega, higher)?;
        if inst.phi.is_zero() {
            continue;
        }
        debug_assert!(inst.require_solution().is_ok());
        return Ok(inst);
    }
    Err(Error::GenerationFailure)
}

fn proximity_sum<'a>(fs: impl Iterator<Item = &'a RatFunc>, p: Prime, s: &LogRadius) -> Rational {
    fs.map(|c| proximity_or_zero(c, p, s)).sum()
}

fn valence_sum<'a>(fs: impl Iterator<Item = &'a RatFunc>, p: Prime, s: &LogRadius) -> Rational {
    fs.map(|c| valence_or_zero(c, p, s)).sum()
}

/// Proximity verdicts for an instance already known to be a solution.
pub(crate) fn proximity_verdicts(
    instance: u64,
    inst: &ClunieInstance,
    claim: Claim,
    ladder: &Ladder,
    opts: &CheckOptions,
) -> Result<Checked> {
    inst.require_difference_family()?;
    inst.require_degree_hypothesis(opts.degree_reading)?;
    let p = inst.prime;
    let (inside, skipped) = Window::above(inst.window_floor()).split(ladder, opts.window)?;
    let omega_f = inst.omega.eval(&inst.f, &inst.family)?;
    let l = int(inst.omega_degree().max(1) as i64);
    let bq_inv = inst.b.lead().expect("B is nonzero").inv()?;
    let verdicts = inside
        .into_iter()
        .map(|s| {
            let lhs = proximity_or_zero(&omega_f, p, &s);
            let rhs = proximity_sum(inst.omega.coefficients(), p, &s)
                + proximity_sum(inst.phi.coefficients(), p, &s)
                + &l * proximity_or_zero(&bq_inv, p, &s)
                + &l * proximity_sum(inst.b.coeffs().iter(), p, &s);
            Verdict::new(instance, claim, s, lhs, rhs)
        })
        .collect();
    Ok(Checked { verdicts, skipped })
}

/// `m̂(Ω) ≤ Σ m̂(c_i) + Σ m̂(d_j) + l·m̂(1/b_q) + l·Σ m̂(b_j)`, `l = max(1, deg Ω)`,
/// at every ladder point above `max λ(b_i)`.
pub fn check_clunie_m(instance: u64, inst: &ClunieInstance, ladder: &Ladder, opts: &CheckOptions) -> Result<Checked> {
    inst.require_solution()?;
    proximity_verdicts(instance, inst, Claim::ClunieProximity, ladder, opts)
}

/// One radius of the valence comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValenceRow {
    pub s: LogRadius,
    /// `N̂(Ω(f, ...))`.
    pub lhs: Rational,
    /// `Σ N̂(c_i) + Σ N̂(d_j)`.
    pub bound: Rational,
    /// `Σ N̂(1/b_j)` over nonzero `b_j`.
    pub b_mass: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValenceReport {
    /// Hard verdicts: constant `b_j`, or a caller-supplied constant `K`.
    Asserted(Checked),
    /// Nonconstant `b_j` and no constant supplied: the least `K ≥ 0` making
    /// `lhs ≤ bound + K·b_mass` on the ladder, or `None` if no `K` works.
    Measured {
        rows: Vec<ValenceRow>,
        k_star: Option<Rational>,
        skipped: Vec<LogRadius>,
    },
}

impl ValenceReport {
    pub fn skipped(&self) -> &[LogRadius] {
        match self {
            ValenceReport::Asserted(c) => &c.skipped,
            ValenceReport::Measured { skipped, .. } => skipped,
        }
    }
}

/// The least `K ≥ 0` with `lhs ≤ bound + K·b_mass` at every row.
pub fn measure_k(rows: &[ValenceRow]) -> Option<Rational> {
    let mut k = Rational::zero();
    for r in rows {
        let excess = &r.lhs - &r.bound;
        if !excess.is_positive() {
            continue;
        }
        if !r.b_mass.is_positive() {
            return None;
        }
        let need = excess / &r.b_mass;
        if need > k {
            k = need;
        }
    }
    Some(k)
}

/// Valence estimate for `Φ` a polynomial in `f` alone, on `s ≥ 0` above the
/// operator window.
///
/// Constant `b_j` (or an explicit `k`) gives hard verdicts
/// `N̂(Ω) ≤ Σ N̂(c_i) + Σ N̂(d_j) + K·Σ N̂(1/b_j)`; otherwise `K*` is measured.
pub fn check_clunie_n(
    instance: u64,
    inst: &ClunieInstance,
    ladder: &Ladder,
    k: Option<&Rational>,
    opts: &CheckOptions,
) -> Result<ValenceReport> {
    inst.require_difference_family()?;
    if !inst.phi.depends_only_on_x0() {
        return Err(Error::NotPolynomialInF);
    }
    inst.require_solution()?;
    let p = inst.prime;
    let window = Window {
        floor: inst.window_floor(),
        nonnegative: true,
    };
    let (inside, skipped) = window.split(ladder, opts.window)?;
    let omega_f = inst.omega.eval(&inst.f, &inst.family)?;
    let b_inv: Vec<RatFunc> = inst
        .b
        .coeffs()
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| b.inv())
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(inside.len());
    for s in inside {
        let b_mass = b_inv.iter().map(|b| valence(b, p, &s)).sum::<Result<Rational>>()?;
        rows.push(ValenceRow {
            lhs: valence_or_zero(&omega_f, p, &s),
            bound: valence_sum(inst.omega.coefficients(), p, &s) + valence_sum(inst.phi.coefficients(), p, &s),
            b_mass,
            s,
        });
    }
    let strict = inst.b.has_constant_coefficients();
    let k = match (k, strict) {
        (Some(k), _) => k.clone(),
        (None, true) => Rational::zero(),
        (None, false) => {
            let k_star = measure_k(&rows);
            return Ok(ValenceReport::Measured { rows, k_star, skipped });
        }
    };
    let verdicts = rows
        .into_iter()
        .map(|r| Verdict::new(instance, Claim::ClunieValence, r.s, r.lhs, r.bound + &k * r.b_mass))
        .collect();
    Ok(ValenceReport::Asserted(Checked { verdicts, skipped }))
}
