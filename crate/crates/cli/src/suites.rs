//! Per-instance verification, shared by file-driven and generated runs.

use serde_json::{json, Value};
use valdist_core::algebra::AffineMap;
use valdist_core::check::gen::{self, GeneratorConfig};
use valdist_core::check::{
    check_clunie_m, check_clunie_n, check_degree_identity, check_lld_entire, check_lld_mero,
    check_malmquist_consequence, check_mokhonko, generate_clunie_instance, CheckOptions, Checked, ClunieInstance,
    DegreeInstance, MokhonkoInstance, ValenceReport, Verdict,
};
use valdist_core::{Ladder, Poly, Prime, RatFunc, Rational};

use crate::io;
use crate::runner::run_ordered;
use crate::CliError;

/// Everything one instance contributes to a run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Outcome {
    pub verdicts: Vec<Verdict>,
    pub skipped: usize,
    pub measured: Vec<Value>,
    pub advisories: Vec<Value>,
}

impl Outcome {
    fn absorb(&mut self, c: Checked) {
        self.skipped += c.skipped.len();
        self.verdicts.extend(c.verdicts);
    }
}

/// Totals over a run, in the order outcomes were produced.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Summary {
    pub checked: usize,
    pub held: usize,
    pub window_skipped: usize,
    pub measured: Vec<Value>,
    pub advisories: Vec<Value>,
}

impl Summary {
    pub fn add(&mut self, o: &Outcome) {
        self.checked += o.verdicts.len();
        self.held += o.verdicts.iter().filter(|v| v.holds).count();
        self.window_skipped += o.skipped;
        self.measured.extend(o.measured.iter().cloned());
        self.advisories.extend(o.advisories.iter().cloned());
    }

    pub fn all_held(&self) -> bool {
        self.checked == self.held
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checked": self.checked,
            "held": self.held,
            "windowSkipped": self.window_skipped,
            "measuredConstants": self.measured,
            "advisories": self.advisories,
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct ClunieSettings {
    pub valence_k: Option<Rational>,
    pub malmquist: bool,
}

pub fn verify_lld_entire(
    idx: u64,
    p: Prime,
    f: &Poly,
    map: &AffineMap,
    order: u32,
    ladder: &Ladder,
    opts: &CheckOptions,
) -> Result<Outcome, CliError> {
    let mut out = Outcome::default();
    out.absorb(check_lld_entire(idx, p, f, map, order, ladder, opts.window)?);
    Ok(out)
}

pub fn verify_lld_mero(
    idx: u64,
    p: Prime,
    f: &RatFunc,
    map: &AffineMap,
    order: u32,
    ladder: &Ladder,
    opts: &CheckOptions,
) -> Result<Outcome, CliError> {
    let mut out = Outcome::default();
    out.absorb(check_lld_mero(idx, p, f, map, order, ladder, opts.window)?);
    Ok(out)
}

/// Proximity form always; valence form when `Φ` depends on `f` alone;
/// Malmquist steps on request.
pub fn verify_clunie(
    idx: u64,
    inst: &ClunieInstance,
    ladder: &Ladder,
    opts: &CheckOptions,
    settings: &ClunieSettings,
) -> Result<Outcome, CliError> {
    let mut out = Outcome::default();
    out.absorb(check_clunie_m(idx, inst, ladder, opts)?);
    if inst.phi.depends_only_on_x0() {
        match check_clunie_n(idx, inst, ladder, settings.valence_k.as_ref(), opts)? {
            ValenceReport::Asserted(c) => out.absorb(c),
            ValenceReport::Measured { rows, k_star, skipped } => {
                out.skipped += skipped.len();
                out.measured.push(json!({
                    "instance": idx,
                    "K": k_star.as_ref().map_or(Value::Null, io::rational),
                    "radii": rows.len(),
                }));
            }
        }
    }
    if settings.malmquist && !inst.phi.depends_only_on_x0() {
        out.advisories.push(json!({
            "instance": idx,
            "kind": "malmquist",
            "skipped": "right-hand side depends on shifted operands",
        }));
    } else if settings.malmquist {
        let r = check_malmquist_consequence(idx, inst, ladder, opts)?;
        out.absorb(r.rearranged);
        out.advisories.push(json!({
            "instance": idx,
            "kind": "malmquist",
            "q": r.q,
            "p": r.p,
            "degOmega": r.omega_degree,
            "growthExcess": r.growth.iter().map(|g| json!({
                "s": io::rational(g.s.value()),
                "excess": io::rational(&g.excess()),
            })).collect::<Vec<_>>(),
            "constant": r.constant.as_ref().map_or(Value::Null, io::rational),
            "bounded": r.bounded,
            "admissibility": io::decay_table(&r.admissibility),
            "remainderRatio": io::decay_table(&r.remainder_ratio),
        }));
    }
    Ok(out)
}

pub fn verify_mokhonko(
    idx: u64,
    inst: &MokhonkoInstance,
    ladder: &Ladder,
    opts: &CheckOptions,
) -> Result<Outcome, CliError> {
    let r = check_mokhonko(idx, inst, ladder, opts)?;
    let mut out = Outcome::default();
    out.absorb(r.checked);
    out.advisories.push(json!({
        "instance": idx,
        "kind": "mokhonko-ratio",
        "table": io::decay_table(&r.advisory),
    }));
    Ok(out)
}

pub fn verify_degree(idx: u64, inst: &DegreeInstance) -> Result<Outcome, CliError> {
    let r = check_degree_identity(idx, inst)?;
    Ok(Outcome {
        verdicts: r.verdicts,
        ..Outcome::default()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    LldEntire,
    LldMero,
    Clunie,
    Mokhonko,
    Degree,
}

/// Generates and verifies trial `t`. Generated ladders are lifted clear of
/// each instance's window, so nothing is skipped.
pub fn generated_trial(
    suite: Suite,
    cfg: &GeneratorConfig,
    t: u64,
    opts: &CheckOptions,
    settings: &ClunieSettings,
) -> Result<Outcome, CliError> {
    match suite {
        Suite::LldEntire => {
            let c = gen::generate_lld_entire(cfg, t);
            verify_lld_entire(t, cfg.prime, &c.f, &c.map, c.order, &c.ladder, opts)
        }
        Suite::LldMero => {
            let c = gen::generate_lld_mero(cfg, t);
            verify_lld_mero(t, cfg.prime, &c.f, &c.map, c.order, &c.ladder, opts)
        }
        Suite::Clunie => {
            let inst = generate_clunie_instance(cfg, t)?;
            verify_clunie(t, &inst, &cfg.ladder.clear_of(&inst.window_floor()), opts, settings)
        }
        Suite::Mokhonko => {
            let inst = gen::generate_mokhonko_instance(cfg, t)?;
            verify_mokhonko(t, &inst, &cfg.ladder.clear_of(&inst.window_floor()), opts)
        }
        Suite::Degree => verify_degree(t, &gen::generate_degree_instance(cfg, t)?),
    }
}

/// All trials of a generated suite, in trial order. The first error wins.
pub fn run_generated(
    suite: Suite,
    cfg: &GeneratorConfig,
    threads: Option<usize>,
    opts: &CheckOptions,
    settings: &ClunieSettings,
) -> Result<Vec<Outcome>, CliError> {
    run_ordered(cfg.trials, threads, |t| generated_trial(suite, cfg, t, opts, settings))
        .into_iter()
        .collect()
}

/// Instance JSON for trial `t` of a generated suite.
pub fn generated_instance(suite: Suite, cfg: &GeneratorConfig, t: u64) -> Result<Value, CliError> {
    Ok(match suite {
        Suite::Clunie => io::clunie_instance(&generate_clunie_instance(cfg, t)?),
        Suite::Mokhonko => io::mokhonko_instance(&gen::generate_mokhonko_instance(cfg, t)?),
        Suite::Degree => io::degree_instance(&gen::generate_degree_instance(cfg, t)?),
        Suite::LldEntire => {
            let c = gen::generate_lld_entire(cfg, t);
            json!({
                "prime": cfg.prime.get(),
                "f": io::poly(&c.f),
                "map": [io::rational(c.map.a()), io::rational(c.map.b())],
                "order": c.order,
                "ladder": c.ladder.to_string(),
            })
        }
        Suite::LldMero => {
            let c = gen::generate_lld_mero(cfg, t);
            json!({
                "prime": cfg.prime.get(),
                "f": io::ratfunc(&c.f),
                "map": [io::rational(c.map.a()), io::rational(c.map.b())],
                "order": c.order,
                "ladder": c.ladder.to_string(),
            })
        }
    })
}
