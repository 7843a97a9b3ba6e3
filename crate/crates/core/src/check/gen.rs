//! Seeded instance generators.
//!
//! Trial `t` of a configuration draws from `ChaCha8Rng` seeded with
//! `cfg.seed` on stream `t`, so every trial is reproducible on its own and
//! independent of execution order.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AffineMap, DiffPoly, Exponents, OperatorFamily, OperatorSpec, UniPoly};
use crate::check::{DegreeInstance, MokhonkoInstance};
use crate::error::{Error, Result};
use crate::nevanlinna::Ladder;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::{int, rat, Prime, Rational};

/// Draws per instance before giving up with `GenerationFailure`.
pub const RETRY_BUDGET: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Shift,
    Delta,
    Derivative,
}

impl OperatorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OperatorKind::Shift => "shift",
            OperatorKind::Delta => "delta",
            OperatorKind::Derivative => "derivative",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub trials: u64,
    pub prime: Prime,
    /// Bound on the numerator degree of `f`.
    pub num_degree: usize,
    /// Bound on the denominator degree of `f`.
    pub den_degree: usize,
    /// Inclusive range of `λ` for drawn coefficients.
    pub valuation_range: (i64, i64),
    /// Number of operators `f_1..f_n`.
    pub n: usize,
    pub operator: OperatorKind,
    pub ladder: Ladder,
    /// Bound on `deg B`, `deg Ω` and `deg P`.
    pub eq_degree: usize,
    /// Bound on numerator and denominator degrees of coefficient functions;
    /// `0` makes every coefficient a constant.
    pub coeff_degree: usize,
    /// Constant `b_j` in generated Clunie instances.
    pub constant_b: bool,
    /// `Φ` a polynomial in `X_0` alone in generated Clunie instances.
    pub phi_in_x0: bool,
}

impl GeneratorConfig {
    pub fn new(seed: u64, trials: u64, prime: Prime) -> Self {
        GeneratorConfig {
            seed,
            trials,
            prime,
            num_degree: 2,
            den_degree: 2,
            valuation_range: (-2, 2),
            n: 1,
            operator: OperatorKind::Shift,
            ladder: Ladder::new(rat(1, 2), rat(1, 2), 5).expect("valid ladder"),
            eq_degree: 2,
            coeff_degree: 1,
            constant_b: false,
            phi_in_x0: false,
        }
    }

    pub fn rng(&self, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial);
        rng
    }
}

fn unit_factor<R: Rng>(rng: &mut R, p: Prime, bound: i64) -> i64 {
    let p = p.get() as i64;
    loop {
        let k = rng.gen_range(1..=bound);
        if k % p != 0 {
            return k;
        }
    }
}

/// A nonzero rational of absolute value 1.
pub fn random_unit<R: Rng>(rng: &mut R, p: Prime) -> Rational {
    let n = unit_factor(rng, p, 12);
    let d = unit_factor(rng, p, 4);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(sign * n, d)
}

/// A nonzero rational with `λ` drawn uniformly from `[lo, hi]`.
pub fn random_scalar_in<R: Rng>(rng: &mut R, p: Prime, lo: i64, hi: i64) -> Rational {
    let lambda = rng.gen_range(lo..=hi);
    random_unit(rng, p) * p.power(-lambda)
}

pub fn random_scalar<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> Rational {
    let (lo, hi) = cfg.valuation_range;
    random_scalar_in(rng, cfg.prime, lo, hi)
}

/// Degree exactly `deg`; lower coefficients vanish with probability 1/4.
pub fn random_poly<R: Rng>(rng: &mut R, cfg: &GeneratorConfig, deg: usize) -> Poly {
    let mut c: Vec<Rational> = (0..deg)
        .map(|_| {
            if rng.gen_bool(0.25) {
                Rational::zero()
            } else {
                random_scalar(rng, cfg)
            }
        })
        .collect();
    c.push(random_scalar(rng, cfg));
    Poly::new(c)
}

pub fn random_ratfunc<R: Rng>(rng: &mut R, cfg: &GeneratorConfig, num_max: usize, den_max: usize) -> RatFunc {
    let dn = rng.gen_range(0..=num_max);
    let dd = rng.gen_range(0..=den_max);
    let num = random_poly(rng, cfg, dn);
    let den = random_poly(rng, cfg, dd);
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// `f` within the configured degree bounds, resampled until nonconstant.
pub fn random_nonconstant_ratfunc<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> RatFunc {
    let num_max = cfg.num_degree.max(1);
    loop {
        let f = random_ratfunc(rng, cfg, num_max, cfg.den_degree);
        if !f.is_constant() {
            return f;
        }
    }
}

/// A coefficient function: a constant half the time, otherwise a rational
/// function within `cfg.coeff_degree`.
pub fn random_coefficient<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> RatFunc {
    if cfg.coeff_degree == 0 || rng.gen_bool(0.5) {
        RatFunc::constant(random_scalar(rng, cfg))
    } else {
        random_ratfunc(rng, cfg, cfg.coeff_degree, cfg.coeff_degree)
    }
}

pub fn random_nonconstant_coefficient<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> RatFunc {
    let bound = cfg.coeff_degree.max(1);
    loop {
        let c = random_ratfunc(rng, cfg, bound, bound);
        if !c.is_constant() {
            return c;
        }
    }
}

/// `L(z) = a·z + b` with `λ(b) ≤ 0` (or `b = 0`); `a` is a unit when
/// `unit` is set, otherwise `λ(a) ∈ {0, −1, −2}`.
pub fn random_map<R: Rng>(rng: &mut R, cfg: &GeneratorConfig, unit: bool) -> AffineMap {
    let p = cfg.prime;
    let a = if unit || rng.gen_bool(0.5) {
        random_unit(rng, p)
    } else {
        random_unit(rng, p) * p.power(rng.gen_range(1..=2))
    };
    let b = if rng.gen_bool(0.2) {
        Rational::zero()
    } else {
        random_scalar_in(rng, p, cfg.valuation_range.0.min(0), 0)
    };
    AffineMap::new(a, b).expect("a is nonzero")
}

fn random_operator<R: Rng>(rng: &mut R, cfg: &GeneratorConfig, max_order: u32) -> OperatorSpec {
    match cfg.operator {
        OperatorKind::Shift => OperatorSpec::shift(random_map(rng, cfg, true)),
        OperatorKind::Delta => OperatorSpec::delta(random_map(rng, cfg, true), rng.gen_range(1..=max_order)),
        OperatorKind::Derivative => OperatorSpec::derivative(rng.gen_range(1..=max_order)),
    }
}

/// `cfg.n` distinct operators of the configured kind.
pub fn random_family<R: Rng>(rng: &mut R, cfg: &GeneratorConfig) -> Result<OperatorFamily> {
    let n = cfg.n.max(1);
    if cfg.operator == OperatorKind::Derivative {
        let mut orders: Vec<u32> = (1..=n as u32 + 1).collect();
        orders.shuffle(rng);
        orders.truncate(n);
        orders.sort_unstable();
        let ops = orders.into_iter().map(OperatorSpec::derivative).collect();
        return OperatorFamily::new(ops, cfg.prime);
    }
    for _ in 0..RETRY_BUDGET {
        let ops: Vec<OperatorSpec> = (0..n).map(|_| random_operator(rng, cfg, 2)).collect();
        if let Ok(family) = OperatorFamily::new(ops, cfg.prime) {
            return Ok(family);
        }
    }
    Err(Error::GenerationFailure)
}

/// Up to `max_terms` monomials of total degree in `[min_deg, max_deg]`,
/// in `X_0` alone when `x0_only` is set. Never zero.
pub fn random_diffpoly<R: Rng>(
    rng: &mut R,
    cfg: &GeneratorConfig,
    nvars: usize,
    min_deg: u32,
    max_deg: u32,
    max_terms: usize,
    x0_only: bool,
) -> DiffPoly {
    let mut out = DiffPoly::zero(nvars);
    while out.is_zero() {
        let terms = rng.gen_range(1..=max_terms.max(1));
        for _ in 0..terms {
            let total = rng.gen_range(min_deg..=max_deg.max(min_deg));
            let mut e = vec![0u32; nvars];
            for _ in 0..total {
                let k = if x0_only { 0 } else { rng.gen_range(0..nvars) };
                e[k] += 1;
            }
            let c = random_coefficient(rng, cfg);
            out = &out + &DiffPoly::monomial(nvars, c, Exponents::new(e));
        }
    }
    out
}

/// An entire Lipschitz-type case: `f` a polynomial, a map with `λ(a) ≤ 0`,
/// an order in `1..=3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LldEntireCase {
    pub f: Poly,
    pub map: AffineMap,
    pub order: u32,
    pub ladder: Ladder,
}

/// A meromorphic case: unit `a`, an order in `1..=3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LldMeroCase {
    pub f: RatFunc,
    pub map: AffineMap,
    pub order: u32,
    pub ladder: Ladder,
}

pub fn generate_lld_entire(cfg: &GeneratorConfig, trial: u64) -> LldEntireCase {
    let mut rng = cfg.rng(trial);
    let deg = rng.gen_range(1..=cfg.num_degree.max(1));
    let f = random_poly(&mut rng, cfg, deg);
    let map = random_map(&mut rng, cfg, false);
    let order = rng.gen_range(1..=3);
    let ladder = cfg.ladder.clear_of(&map.entire_floor(cfg.prime));
    LldEntireCase { f, map, order, ladder }
}

pub fn generate_lld_mero(cfg: &GeneratorConfig, trial: u64) -> LldMeroCase {
    let mut rng = cfg.rng(trial);
    let f = random_nonconstant_ratfunc(&mut rng, cfg);
    let map = random_map(&mut rng, cfg, true);
    let order = rng.gen_range(1..=3);
    let ladder = cfg.ladder.clear_of(&map.unit_floor(cfg.prime));
    LldMeroCase { f, map, order, ladder }
}

/// `P = Q − Q(f)` for a random `Q` of positive degree, so `f` is a
/// solution; the target `a` is a constant or a low-degree rational function
/// with `P(a) ≠ 0`.
pub fn generate_mokhonko_instance(cfg: &GeneratorConfig, trial: u64) -> Result<MokhonkoInstance> {
    let mut rng = cfg.rng(trial);
    for _ in 0..RETRY_BUDGET {
        let f = random_nonconstant_ratfunc(&mut rng, cfg);
        let family = random_family(&mut rng, cfg)?;
        let nvars = family.arity();
        let q = random_diffpoly(&mut rng, cfg, nvars, 1, cfg.eq_degree.max(1) as u32, 3, false);
        let c0 = -&q.eval(&f, &family)?;
        let p = &q + &DiffPoly::constant(nvars, c0);
        let a = if rng.gen_bool(0.5) {
            RatFunc::constant(random_scalar(&mut rng, cfg))
        } else {
            random_ratfunc(&mut rng, cfg, 1, 1)
        };
        if a == f || p.eval(&a, &family)?.is_zero() {
            continue;
        }
        return MokhonkoInstance::new(cfg.prime, p, family, f, a);
    }
    Err(Error::GenerationFailure)
}

/// `f` and a reduced `Φ/B` with constant coefficients and `d ≥ 1`.
pub fn generate_degree_instance(cfg: &GeneratorConfig, trial: u64) -> Result<DegreeInstance> {
    let mut rng = cfg.rng(trial);
    let top = cfg.eq_degree.max(1);
    for _ in 0..RETRY_BUDGET {
        let f = random_nonconstant_ratfunc(&mut rng, cfg);
        let dp = rng.gen_range(0..=top);
        let db = rng.gen_range(0..=top);
        let phi = random_poly(&mut rng, cfg, dp);
        let b = random_poly(&mut rng, cfg, db);
        let g = phi.gcd(&b);
        let phi = phi.div_exact(&g);
        let b = b.div_exact(&g);
        if phi.degree().max(b.degree()) == Some(0) {
            continue;
        }
        return DegreeInstance::new(cfg.prime, f, &UniPoly::from_poly(&phi), &UniPoly::from_poly(&b));
    }
    Err(Error::GenerationFailure)
}

/// `P` with its constant coefficient perturbed, so `f` no longer solves it.
pub fn corrupt_solution(inst: &MokhonkoInstance) -> MokhonkoInstance {
    let bump = DiffPoly::constant(inst.p.nvars(), RatFunc::constant(int(1)));
    MokhonkoInstance {
        p: &inst.p + &bump,
        ..inst.clone()
    }
}

/// The target replaced by the solution itself.
pub fn corrupt_target(inst: &MokhonkoInstance) -> MokhonkoInstance {
    MokhonkoInstance {
        a: inst.f.clone(),
        ..inst.clone()
    }
}
