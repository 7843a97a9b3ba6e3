//! Acceptance criteria, one PASS/FAIL line each. Every count, seed, range
//! and time budget is fixed here; all comparisons are exact.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::Rng;
use valdist::io;
use valdist::suites::{run_generated, ClunieSettings, Outcome, Suite};
use valdist_core::check::gen::{self, GeneratorConfig, OperatorKind};
use valdist_core::check::{
    check_clunie_n, check_lld_mero, check_mokhonko, generate_clunie_instance, CheckOptions, Claim, ValenceReport,
    Verdict, WindowPolicy,
};
use valdist_core::nevanlinna::jensen_defect;
use valdist_core::newton::zero_log_radii;
use valdist_core::scalar::{int, rat};
use valdist_core::{Error, Ladder, LogRadius, Poly, Prime, Rational};

const PRIMES: [u64; 3] = [2, 5, 7];
const JENSEN_FUNCTIONS: u64 = 500;
const JENSEN_RADII: usize = 8;
const JENSEN_BUDGET: Duration = Duration::from_secs(10);
const NEWTON_POLYS: u64 = 500;
const LLD_INSTANCES: u64 = 500;
const CLUNIE_INSTANCES: u64 = 200;
const CLUNIE_RADII: usize = 5;
const CLUNIE_BUDGET: Duration = Duration::from_secs(60);
const VALENCE_INSTANCES: u64 = 100;
const DEGREE_INSTANCES: u64 = 200;
const MOKHONKO_INSTANCES: u64 = 200;
const CORRUPTED: u64 = 20;
const DETERMINISM_TRIALS: u64 = 60;

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, n: u32, name: &str, ok: bool, detail: String) {
        if !ok {
            self.failures += 1;
        }
        println!("{} criterion {n:>2} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
}

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn config(seed: u64, trials: u64, p: u64, kind: OperatorKind) -> GeneratorConfig {
    let mut c = GeneratorConfig::new(seed, trials, prime(p));
    c.operator = kind;
    c
}

fn verdicts(outcomes: &[Outcome]) -> impl Iterator<Item = &Verdict> {
    outcomes.iter().flat_map(|o| o.verdicts.iter())
}

fn held(outcomes: &[Outcome], claims: &[Claim]) -> (usize, usize) {
    let mut total = 0;
    let mut ok = 0;
    for v in verdicts(outcomes).filter(|v| claims.is_empty() || claims.contains(&v.claim)) {
        total += 1;
        ok += v.holds as usize;
    }
    (ok, total)
}

fn run(suite: Suite, cfg: &GeneratorConfig) -> Vec<Outcome> {
    run_generated(suite, cfg, None, &CheckOptions::default(), &ClunieSettings::default()).expect("suite runs")
}

fn jensen(r: &mut Report) {
    let start = Instant::now();
    let radii = Ladder::new(rat(-7, 2), rat(1, 1), JENSEN_RADII).unwrap().points();
    let mut zero = 0;
    let mut total = 0;
    for t in 0..JENSEN_FUNCTIONS {
        let p = PRIMES[(t % 3) as usize];
        let mut cfg = config(1001, JENSEN_FUNCTIONS, p, OperatorKind::Shift);
        cfg.valuation_range = (-3, 3);
        let mut rng = cfg.rng(t);
        let f = gen::random_ratfunc(&mut rng, &cfg, 6, 6);
        for s in &radii {
            total += 1;
            zero += jensen_defect(&f, cfg.prime, s).unwrap().is_zero() as usize;
        }
    }
    let elapsed = start.elapsed();
    r.line(
        1,
        "Jensen defect vanishes",
        zero == total && total == (JENSEN_FUNCTIONS as usize) * JENSEN_RADII && elapsed < JENSEN_BUDGET,
        format!(
            "{zero}/{total} exact zeros in {:.2?} (budget {JENSEN_BUDGET:?})",
            elapsed
        ),
    );
}

fn unit<R: Rng>(rng: &mut R, p: u64) -> Rational {
    loop {
        let n: i64 = rng.gen_range(1..=40);
        if n % p as i64 != 0 {
            return if rng.gen_bool(0.5) { int(n) } else { int(-n) };
        }
    }
}

/// Roots `u·p^k` with `u` a unit, so `λ = −k` is known before any hull is
/// computed.
fn newton(r: &mut Report) {
    let mut matched = 0;
    for t in 0..NEWTON_POLYS {
        let p = PRIMES[(t % 3) as usize];
        let cfg = config(1002, NEWTON_POLYS, p, OperatorKind::Shift);
        let mut rng = cfg.rng(t);
        let mut f = Poly::monomial(unit(&mut rng, p), 0);
        let mut oracle: BTreeMap<Rational, usize> = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=6) {
            let k: i32 = rng.gen_range(-3..=3);
            let root = unit(&mut rng, p) * Rational::from_integer(p.into()).pow(k);
            f = &f * &Poly::new(vec![-root, Rational::one()]);
            *oracle.entry(int(-k as i64)).or_default() += 1;
        }
        let z = zero_log_radii(&f, cfg.prime).unwrap();
        let found: BTreeMap<Rational, usize> = z.radii.into_iter().collect();
        matched += (z.origin_multiplicity == 0 && found == oracle) as usize;
    }
    r.line(
        2,
        "Newton polygon matches factored roots",
        matched == NEWTON_POLYS as usize,
        format!("{matched}/{NEWTON_POLYS} multisets equal"),
    );
}

fn lld_entire(r: &mut Report) {
    let cfg = config(1003, LLD_INSTANCES, 5, OperatorKind::Shift);
    let outcomes = run(Suite::LldEntire, &cfg);
    let (ok, total) = held(&outcomes, &[]);
    r.line(
        3,
        "maximum term does not grow under non-expanding maps",
        ok == total && outcomes.len() == LLD_INSTANCES as usize && total > 0,
        format!("{ok}/{total} verdicts over {} instances", outcomes.len()),
    );
}

fn lld_mero(r: &mut Report) {
    let cfg = config(1004, LLD_INSTANCES, 5, OperatorKind::Shift);
    let outcomes = run(Suite::LldMero, &cfg);
    let (ok, total) = held(&outcomes, &[]);
    // Equality is the pair upper ∧ lower at each radius.
    let mut pairs: BTreeMap<(u64, LogRadius), (bool, bool)> = BTreeMap::new();
    for v in verdicts(&outcomes) {
        let e = pairs.entry((v.instance, v.s.clone())).or_default();
        match v.claim {
            Claim::ShiftMaxTermUpper => e.0 = v.holds,
            Claim::ShiftMaxTermLower => e.1 = v.holds,
            _ => {}
        }
    }
    let equal = pairs.values().filter(|&&(u, l)| u && l).count();
    let (dok, dtotal) = held(&outcomes, &[Claim::DeltaProximity]);
    let zero_m = verdicts(&outcomes)
        .filter(|v| v.claim == Claim::DeltaProximity)
        .all(|v| v.lhs.is_zero());
    r.line(
        4,
        "maximum term preserved under unit maps",
        ok == total && equal == pairs.len() && dok == dtotal && zero_m && dtotal > 0,
        format!(
            "{ok}/{total} verdicts; equality at {equal}/{} radii; m(Δ^m f/f) = 0 at {dok}/{dtotal}",
            pairs.len()
        ),
    );
}

fn clunie(r: &mut Report, n: u32, kind: OperatorKind, seed: u64) -> (usize, usize) {
    let start = Instant::now();
    let cfg = config(seed, CLUNIE_INSTANCES, 5, kind);
    let mut solved = 0;
    for t in 0..cfg.trials {
        solved += generate_clunie_instance(&cfg, t).unwrap().residual().unwrap().is_zero() as usize;
    }
    let outcomes = run(Suite::Clunie, &cfg);
    let (ok, total) = held(&outcomes, &[Claim::ClunieProximity]);
    let elapsed = start.elapsed();
    let expected = CLUNIE_INSTANCES as usize * CLUNIE_RADII;
    if n == 5 {
        r.line(
            5,
            "Clunie proximity estimate",
            ok == total && total == expected && solved == CLUNIE_INSTANCES as usize && elapsed < CLUNIE_BUDGET,
            format!(
                "{ok}/{total} verdicts (expected {expected}), {solved} residuals zero, {:.2?} (budget {CLUNIE_BUDGET:?})",
                elapsed
            ),
        );
    }
    (ok, total)
}

fn valence(r: &mut Report) {
    let mut cfg = config(1006, VALENCE_INSTANCES, 5, OperatorKind::Shift);
    cfg.phi_in_x0 = true;
    cfg.constant_b = true;
    let mut strict_ok = 0;
    let mut strict_total = 0;
    let mut asserted = 0;
    for t in 0..cfg.trials {
        let inst = generate_clunie_instance(&cfg, t).unwrap();
        let ladder = cfg.ladder.clear_of(&inst.window_floor());
        if let ValenceReport::Asserted(c) = check_clunie_n(t, &inst, &ladder, None, &CheckOptions::default()).unwrap() {
            asserted += 1;
            strict_total += c.verdicts.len();
            strict_ok += c.verdicts.iter().filter(|v| v.holds).count();
        }
    }
    cfg.constant_b = false;
    cfg.seed = 1007;
    let mut finite = 0;
    let mut largest = Rational::zero();
    for t in 0..cfg.trials {
        let inst = generate_clunie_instance(&cfg, t).unwrap();
        let ladder = cfg.ladder.clear_of(&inst.window_floor());
        if let ValenceReport::Measured { k_star: Some(k), .. } =
            check_clunie_n(t, &inst, &ladder, None, &CheckOptions::default()).unwrap()
        {
            finite += 1;
            largest = largest.max(k);
        }
    }
    r.line(
        6,
        "Clunie valence estimate",
        strict_ok == strict_total && asserted == VALENCE_INSTANCES && strict_total > 0 && finite == VALENCE_INSTANCES,
        format!(
            "strict {strict_ok}/{strict_total} over {asserted} instances; measured K* finite for {finite}/{VALENCE_INSTANCES} (max {})",
            valdist_core::scalar::format_rational(&largest)
        ),
    );
}

fn degree(r: &mut Report) {
    let cfg = config(1008, DEGREE_INSTANCES, 7, OperatorKind::Shift);
    let outcomes = run(Suite::Degree, &cfg);
    let exact = outcomes
        .iter()
        .filter(|o| !o.verdicts.is_empty() && o.verdicts.iter().all(|v| v.holds))
        .count();
    r.line(
        7,
        "characteristic slope equals d·deg f",
        exact == DEGREE_INSTANCES as usize,
        format!("{exact}/{DEGREE_INSTANCES} instances exact"),
    );
}

fn mokhonko_suite(kind: OperatorKind, seed: u64) -> (usize, usize, usize) {
    let cfg = config(seed, MOKHONKO_INSTANCES, 5, kind);
    let outcomes = run(Suite::Mokhonko, &cfg);
    let (ok, total) = held(&outcomes, &[Claim::MokhonkoChain]);
    let advisories = outcomes.iter().filter(|o| !o.advisories.is_empty()).count();
    (ok, total, advisories)
}

fn mokhonko(r: &mut Report) {
    let (dok, dtotal, dadv) = mokhonko_suite(OperatorKind::Derivative, 1009);
    let (sok, stotal, sadv) = mokhonko_suite(OperatorKind::Shift, 1010);
    let cfg = config(1011, CORRUPTED, 5, OperatorKind::Shift);
    let mut fired = 0;
    for t in 0..CORRUPTED {
        let inst = gen::generate_mokhonko_instance(&cfg, t).unwrap();
        let ladder = cfg.ladder.clear_of(&inst.window_floor());
        let (bad, expected) = if t % 2 == 0 {
            (gen::corrupt_solution(&inst), Error::NotASolution)
        } else {
            (gen::corrupt_target(&inst), Error::TargetIsSolution)
        };
        fired += (check_mokhonko(t, &bad, &ladder, &CheckOptions::default()).err() == Some(expected)) as usize;
    }
    let n = MOKHONKO_INSTANCES as usize;
    r.line(
        8,
        "proximity to non-solution targets",
        dok == dtotal && sok == stotal && dtotal > 0 && stotal > 0 && dadv == n && sadv == n && fired == CORRUPTED as usize,
        format!(
            "differential {dok}/{dtotal}, difference {sok}/{stotal}; advisories {dadv}+{sadv}; guards fired {fired}/{CORRUPTED}"
        ),
    );
}

fn parity(r: &mut Report) {
    let cfg = config(1012, LLD_INSTANCES, 5, OperatorKind::Delta);
    let mut mero_ok = 0;
    let mut mero_total = 0;
    for t in 0..cfg.trials {
        let c = gen::generate_lld_mero(&cfg, t);
        let checked = check_lld_mero(t, cfg.prime, &c.f, &c.map, c.order, &c.ladder, WindowPolicy::Strict).unwrap();
        for v in checked
            .verdicts
            .iter()
            .filter(|v| matches!(v.claim, Claim::DeltaQuotient | Claim::DeltaProximity))
        {
            mero_total += 1;
            mero_ok += v.holds as usize;
        }
    }
    let (cok, ctotal) = clunie(r, 9, OperatorKind::Delta, 1013);
    let (mok, mtotal, _) = mokhonko_suite(OperatorKind::Delta, 1014);
    r.line(
        9,
        "difference-operator parity",
        mero_ok == mero_total && cok == ctotal && mok == mtotal && mero_total > 0 && ctotal > 0 && mtotal > 0,
        format!("unit maps {mero_ok}/{mero_total}, Clunie {cok}/{ctotal}, chain {mok}/{mtotal}"),
    );
}

fn stream(suite: Suite, cfg: &GeneratorConfig, threads: Option<usize>) -> String {
    let outcomes = run_generated(
        suite,
        cfg,
        threads,
        &CheckOptions::default(),
        &ClunieSettings {
            valence_k: None,
            malmquist: true,
        },
    )
    .unwrap();
    let mut out = String::new();
    for v in verdicts(&outcomes) {
        out.push_str(&io::verdict(v, false).to_string());
        out.push('\n');
    }
    out
}

fn determinism(r: &mut Report) {
    let mut identical = 0;
    let mut total = 0;
    for (i, suite) in [
        Suite::LldEntire,
        Suite::LldMero,
        Suite::Clunie,
        Suite::Mokhonko,
        Suite::Degree,
    ]
    .into_iter()
    .enumerate()
    {
        let mut cfg = config(1015 + i as u64, DETERMINISM_TRIALS, 5, OperatorKind::Delta);
        cfg.phi_in_x0 = suite == Suite::Clunie;
        let first = stream(suite, &cfg, Some(1));
        for threads in [Some(1), Some(4), None] {
            total += 1;
            identical += (stream(suite, &cfg, threads) == first && !first.is_empty()) as usize;
        }
    }
    let cli = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_valdist"))
            .args([
                "verify-clunie",
                "--prime",
                "7",
                "--seed",
                "1020",
                "--trials",
                "40",
                "--phi-x0",
                "--malmquist",
                "--threads",
                threads,
            ])
            .output()
            .unwrap()
            .stdout
    };
    let (a, b, c) = (cli("1"), cli("4"), cli("4"));
    let cli_same = !a.is_empty() && a == b && b == c;
    r.line(
        10,
        "byte-identical streams",
        identical == total && cli_same,
        format!("{identical}/{total} library reruns identical; CLI across thread counts identical: {cli_same}"),
    );
}

fn main() {
    let mut r = Report { failures: 0 };
    jensen(&mut r);
    newton(&mut r);
    lld_entire(&mut r);
    lld_mero(&mut r);
    clunie(&mut r, 5, OperatorKind::Shift, 1005);
    valence(&mut r);
    degree(&mut r);
    mokhonko(&mut r);
    parity(&mut r);
    determinism(&mut r);
    if r.failures > 0 {
        println!("{} criteria failed", r.failures);
        std::process::exit(1);
    }
    println!("all criteria passed");
}
