//! The command-line surface. Exit codes: 0 when every verdict held (window
//! skips included), 1 when some verdict failed, 2 on usage or domain errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use valdist_core::algebra::AffineMap;
use valdist_core::check::gen::{GeneratorConfig, OperatorKind};
use valdist_core::check::{CheckOptions, DegreeReading, Verdict, WindowPolicy};
use valdist_core::nevanlinna::characteristic_table;
use valdist_core::newton::{newton_polygon, zero_log_radii};
use valdist_core::scalar::{format_rational, parse_rational};
use valdist_core::{Ladder, LogRadius, Prime, Rational};

use crate::dsl::{elaborate_poly, elaborate_ratfunc};
use crate::io::{self, ClunieFile, DegreeFile, MokhonkoFile};
use crate::suites::{self, ClunieSettings, Outcome, Suite, Summary};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "valdist",
    version,
    about = "Exact non-Archimedean value distribution on rational functions"
)]
pub struct Cli {
    /// The prime p; instance files carry their own.
    #[arg(long, env = "VALDIST_PRIME", global = true)]
    pub prime: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Add decimal renderings next to exact values (JSON and pretty only).
    #[arg(long, global = true)]
    pub approx: bool,
    /// Worker threads for generated runs; output order never depends on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Shift,
    Delta,
    Derivative,
}

impl From<Family> for OperatorKind {
    fn from(f: Family) -> Self {
        match f {
            Family::Shift => OperatorKind::Shift,
            Family::Delta => OperatorKind::Delta,
            Family::Derivative => OperatorKind::Derivative,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Total,
    X0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    Entire,
    Mero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenSuite {
    LldEntire,
    LldMero,
    Clunie,
    Mokhonko,
    Degree,
}

impl From<GenSuite> for Suite {
    fn from(s: GenSuite) -> Self {
        match s {
            GenSuite::LldEntire => Suite::LldEntire,
            GenSuite::LldMero => Suite::LldMero,
            GenSuite::Clunie => Suite::Clunie,
            GenSuite::Mokhonko => Suite::Mokhonko,
            GenSuite::Degree => Suite::Degree,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// log_p of the maximum term at one log-radius.
    Mu {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value = "0", value_parser = parse_radius, allow_hyphen_values = true)]
        radius: LogRadius,
    },
    /// Newton polygon vertices (n, ν_p(a_n)) and zero log-radii of a polynomial.
    Newton {
        #[arg(long)]
        expr: String,
    },
    /// Characteristic table m, N, T along a ladder.
    Char {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value = "0:1:5", allow_hyphen_values = true)]
        ladder: Ladder,
    },
    /// Maximum-term analogue of the logarithmic derivative lemma.
    VerifyLld(LldArgs),
    /// Clunie-type estimates for B(f)·Ω = Φ.
    VerifyClunie(ClunieArgs),
    /// Proximity of f to a non-solution target.
    VerifyMokhonko(RunArgs),
    /// Characteristic slope of R∘f against deg R · deg f.
    VerifyDegree(RunArgs),
    /// Generated instances as JSON lines.
    Gen {
        #[arg(value_enum)]
        suite: GenSuite,
        #[command(flatten)]
        generator: GeneratorArgs,
        #[arg(long)]
        constant_b: bool,
        #[arg(long)]
        phi_x0: bool,
    },
}

#[derive(Debug, Clone, Args)]
pub struct GeneratorArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, value_enum, default_value_t = Family::Shift)]
    pub family: Family,
    /// Number of operators per generated family.
    #[arg(long, default_value_t = 1)]
    pub operators: usize,
    /// Ladder template; generated instances lift it clear of their window.
    #[arg(long, allow_hyphen_values = true)]
    pub ladder: Option<Ladder>,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Instance file (one object, an array, or JSON lines). Without it, a
    /// generated suite runs.
    #[arg(long)]
    pub instance: Option<PathBuf>,
    #[command(flatten)]
    pub generator: GeneratorArgs,
    /// Fail on ladder points outside the validity window instead of skipping.
    #[arg(long)]
    pub strict_window: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ClunieArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long)]
    pub constant_b: bool,
    #[arg(long)]
    pub phi_x0: bool,
    /// Also run the Malmquist-type steps.
    #[arg(long)]
    pub malmquist: bool,
    /// Fixed constant K for the valence estimate with nonconstant B.
    #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
    pub valence_k: Option<Rational>,
    #[arg(long, value_enum, default_value_t = Reading::Total)]
    pub degree_reading: Reading,
}

#[derive(Debug, Clone, Args)]
pub struct LldArgs {
    /// The function; without it, a generated suite runs.
    #[arg(long)]
    pub expr: Option<String>,
    /// The map L(z) = a·z + b as `a,b`.
    #[arg(long, value_parser = parse_map, allow_hyphen_values = true)]
    pub map: Option<AffineMap>,
    #[arg(long, default_value_t = 1)]
    pub order: u32,
    /// Use the meromorphic form even for a polynomial.
    #[arg(long)]
    pub mero: bool,
    #[arg(long, value_enum, default_value_t = Lemma::Entire)]
    pub lemma: Lemma,
    #[command(flatten)]
    pub generator: GeneratorArgs,
    #[arg(long)]
    pub strict_window: bool,
}

fn parse_exact(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_radius(s: &str) -> Result<LogRadius, String> {
    parse_exact(s).map(LogRadius::new)
}

fn parse_map(s: &str) -> Result<AffineMap, String> {
    let (a, b) = s.split_once(',').ok_or("expected `a,b`")?;
    AffineMap::new(parse_exact(a)?, parse_exact(b)?).map_err(|e| e.to_string())
}

struct Session<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

impl Session<'_> {
    fn prime(&self) -> Result<Prime, CliError> {
        let p = self
            .cli
            .prime
            .ok_or_else(|| CliError::Usage("a prime is required: pass --prime or set VALDIST_PRIME".into()))?;
        Ok(Prime::new(p)?)
    }

    fn line(&mut self, v: &Value) -> Result<(), CliError> {
        writeln!(self.out, "{v}")?;
        Ok(())
    }

    fn config(&self, g: &GeneratorArgs) -> Result<GeneratorConfig, CliError> {
        let mut cfg = GeneratorConfig::new(g.seed, g.trials, self.prime()?);
        cfg.operator = g.family.into();
        cfg.n = g.operators.max(1);
        if let Some(l) = &g.ladder {
            cfg.ladder = l.clone();
        }
        Ok(cfg)
    }

    fn ladder_or_default(&self, g: &GeneratorArgs) -> Ladder {
        g.ladder
            .clone()
            .unwrap_or_else(|| GeneratorConfig::new(0, 0, Prime::new(2).expect("2 is prime")).ladder)
    }

    fn mu(&mut self, expr: &str, s: &LogRadius) -> Result<i32, CliError> {
        let p = self.prime()?;
        let f = elaborate_ratfunc(expr)?;
        let mu = f.mu_log(p, s);
        match self.cli.format {
            Format::Json => self.line(&json!({ "s": io::rational(s.value()), "mu": io::log_value(&mu) }))?,
            Format::Csv => writeln!(self.out, "s,mu\n{},{}", format_rational(s.value()), mu)?,
            Format::Pretty => writeln!(self.out, "{mu}")?,
        }
        Ok(0)
    }

    fn newton(&mut self, expr: &str) -> Result<i32, CliError> {
        let p = self.prime()?;
        let f = elaborate_poly(expr)?;
        let hull = newton_polygon(&f, p)?;
        let zeros = zero_log_radii(&f, p)?;
        match self.cli.format {
            Format::Json => self.line(&json!({
                "vertices": hull.vertices().iter().map(|(n, v)| json!([n, io::rational(v)])).collect::<Vec<_>>(),
                "zeros": {
                    "origin": zeros.origin_multiplicity,
                    "radii": zeros.radii.iter().map(|(s, m)| json!({ "s": io::rational(s), "multiplicity": m })).collect::<Vec<_>>(),
                },
            }))?,
            Format::Csv => {
                writeln!(self.out, "kind,n_or_s,value")?;
                for (n, v) in hull.vertices() {
                    writeln!(self.out, "vertex,{n},{}", format_rational(v))?;
                }
                if zeros.origin_multiplicity > 0 {
                    writeln!(self.out, "origin,,{}", zeros.origin_multiplicity)?;
                }
                for (s, m) in &zeros.radii {
                    writeln!(self.out, "zeros,{},{m}", format_rational(s))?;
                }
            }
            Format::Pretty => {
                let vertices: Vec<String> =
                    hull.vertices().iter().map(|(n, v)| format!("({n}, {})", format_rational(v))).collect();
                writeln!(self.out, "vertices: {}", vertices.join(" "))?;
                writeln!(self.out, "zeros at origin: {}", zeros.origin_multiplicity)?;
                for (s, m) in &zeros.radii {
                    writeln!(self.out, "{m} x log-radius {}", format_rational(s))?;
                }
            }
        }
        Ok(0)
    }

    fn characteristic(&mut self, expr: &str, ladder: &Ladder) -> Result<i32, CliError> {
        let p = self.prime()?;
        let f = elaborate_ratfunc(expr)?;
        let rows = characteristic_table(&f, p, ladder)?;
        match self.cli.format {
            Format::Json => {
                for r in &rows {
                    self.line(&io::characteristic_row(r, self.cli.approx))?;
                }
            }
            Format::Csv => {
                writeln!(self.out, "s,m,N,T")?;
                for r in &rows {
                    let cells = [r.s.value(), &r.m, &r.n, &r.t].map(format_rational);
                    writeln!(self.out, "{}", cells.join(","))?;
                }
            }
            Format::Pretty => {
                writeln!(self.out, "{:>10} {:>10} {:>10} {:>10}", "s", "m", "N", "T")?;
                for r in &rows {
                    let cells = [r.s.value(), &r.m, &r.n, &r.t].map(format_rational);
                    writeln!(
                        self.out,
                        "{:>10} {:>10} {:>10} {:>10}",
                        cells[0], cells[1], cells[2], cells[3]
                    )?;
                }
            }
        }
        Ok(0)
    }

    fn emit(&mut self, outcomes: &[Outcome]) -> Result<i32, CliError> {
        let mut summary = Summary::default();
        if self.cli.format == Format::Csv {
            writeln!(self.out, "instance,claim,s,lhs,rhs,holds,slack")?;
        }
        for o in outcomes {
            summary.add(o);
            for v in &o.verdicts {
                self.verdict(v)?;
            }
        }
        match self.cli.format {
            Format::Json => self.line(&summary.to_json())?,
            // The CSV body stays a single table; totals go to stderr.
            Format::Csv => eprintln!("{}", summary.to_json()),
            Format::Pretty => {
                writeln!(
                    self.out,
                    "checked {}, held {}, window-skipped {}",
                    summary.checked, summary.held, summary.window_skipped
                )?;
                for m in &summary.measured {
                    writeln!(self.out, "measured {m}")?;
                }
                for a in &summary.advisories {
                    writeln!(self.out, "advisory {a}")?;
                }
            }
        }
        Ok(if summary.all_held() { 0 } else { 1 })
    }

    fn verdict(&mut self, v: &Verdict) -> Result<(), CliError> {
        match self.cli.format {
            Format::Json => self.line(&io::verdict(v, self.cli.approx)),
            Format::Csv => {
                writeln!(
                    self.out,
                    "{},{},{},{},{},{},{}",
                    v.instance,
                    v.claim,
                    format_rational(v.s.value()),
                    format_rational(&v.lhs),
                    format_rational(&v.rhs),
                    v.holds,
                    format_rational(&v.slack)
                )?;
                Ok(())
            }
            Format::Pretty => {
                let approx = if self.cli.approx {
                    format!(
                        " (~{:.6} vs ~{:.6})",
                        valdist_core::scalar::approx(&v.lhs),
                        valdist_core::scalar::approx(&v.rhs)
                    )
                } else {
                    String::new()
                };
                writeln!(
                    self.out,
                    "#{} {} s={} lhs={} rhs={} {} slack={}{approx}",
                    v.instance,
                    v.claim,
                    format_rational(v.s.value()),
                    format_rational(&v.lhs),
                    format_rational(&v.rhs),
                    if v.holds { "holds" } else { "FAILS" },
                    format_rational(&v.slack)
                )?;
                Ok(())
            }
        }
    }

    fn options(strict: bool, reading: Reading) -> CheckOptions {
        CheckOptions {
            window: if strict {
                WindowPolicy::Strict
            } else {
                WindowPolicy::Skip
            },
            degree_reading: match reading {
                Reading::Total => DegreeReading::Total,
                Reading::X0 => DegreeReading::X0Only,
            },
        }
    }

    fn generated(
        &mut self,
        suite: Suite,
        cfg: &GeneratorConfig,
        opts: &CheckOptions,
        s: &ClunieSettings,
    ) -> Result<i32, CliError> {
        let outcomes = suites::run_generated(suite, cfg, self.cli.threads, opts, s)?;
        self.emit(&outcomes)
    }

    fn verify_lld(&mut self, a: &LldArgs) -> Result<i32, CliError> {
        let opts = Self::options(a.strict_window, Reading::Total);
        let Some(expr) = &a.expr else {
            let cfg = self.config(&a.generator)?;
            let suite = match a.lemma {
                Lemma::Entire => Suite::LldEntire,
                Lemma::Mero => Suite::LldMero,
            };
            return self.generated(suite, &cfg, &opts, &ClunieSettings::default());
        };
        let p = self.prime()?;
        let map = a
            .map
            .clone()
            .ok_or_else(|| CliError::Usage("--expr needs --map a,b".into()))?;
        let ladder = self.ladder_or_default(&a.generator);
        let f = elaborate_ratfunc(expr)?;
        let outcome = if f.is_polynomial() && !a.mero {
            suites::verify_lld_entire(0, p, f.num(), &map, a.order, &ladder, &opts)?
        } else {
            suites::verify_lld_mero(0, p, &f, &map, a.order, &ladder, &opts)?
        };
        self.emit(&[outcome])
    }

    fn verify_clunie(&mut self, a: &ClunieArgs) -> Result<i32, CliError> {
        let opts = Self::options(a.run.strict_window, a.degree_reading);
        let settings = ClunieSettings {
            valence_k: a.valence_k.clone(),
            malmquist: a.malmquist,
        };
        match &a.run.instance {
            Some(path) => {
                let files: Vec<ClunieFile> = io::read_instances(&std::fs::read_to_string(path)?)?;
                let ladder = self.ladder_or_default(&a.run.generator);
                let mut outcomes = Vec::with_capacity(files.len());
                for (i, file) in files.iter().enumerate() {
                    outcomes.push(suites::verify_clunie(
                        i as u64,
                        &file.build()?,
                        &ladder,
                        &opts,
                        &settings,
                    )?);
                }
                self.emit(&outcomes)
            }
            None => {
                let mut cfg = self.config(&a.run.generator)?;
                cfg.constant_b = a.constant_b;
                cfg.phi_in_x0 = a.phi_x0;
                self.generated(Suite::Clunie, &cfg, &opts, &settings)
            }
        }
    }

    fn verify_mokhonko(&mut self, a: &RunArgs) -> Result<i32, CliError> {
        let opts = Self::options(a.strict_window, Reading::Total);
        match &a.instance {
            Some(path) => {
                let files: Vec<MokhonkoFile> = io::read_instances(&std::fs::read_to_string(path)?)?;
                let ladder = self.ladder_or_default(&a.generator);
                let mut outcomes = Vec::with_capacity(files.len());
                for (i, file) in files.iter().enumerate() {
                    outcomes.push(suites::verify_mokhonko(i as u64, &file.build()?, &ladder, &opts)?);
                }
                self.emit(&outcomes)
            }
            None => {
                let cfg = self.config(&a.generator)?;
                self.generated(Suite::Mokhonko, &cfg, &opts, &ClunieSettings::default())
            }
        }
    }

    fn verify_degree(&mut self, a: &RunArgs) -> Result<i32, CliError> {
        match &a.instance {
            Some(path) => {
                let files: Vec<DegreeFile> = io::read_instances(&std::fs::read_to_string(path)?)?;
                let mut outcomes = Vec::with_capacity(files.len());
                for (i, file) in files.iter().enumerate() {
                    outcomes.push(suites::verify_degree(i as u64, &file.build()?)?);
                }
                self.emit(&outcomes)
            }
            None => {
                let cfg = self.config(&a.generator)?;
                let opts = Self::options(a.strict_window, Reading::Total);
                self.generated(Suite::Degree, &cfg, &opts, &ClunieSettings::default())
            }
        }
    }

    fn gen(&mut self, suite: GenSuite, g: &GeneratorArgs, constant_b: bool, phi_x0: bool) -> Result<i32, CliError> {
        let mut cfg = self.config(g)?;
        cfg.constant_b = constant_b;
        cfg.phi_in_x0 = phi_x0;
        let suite = Suite::from(suite);
        let values = crate::runner::run_ordered(cfg.trials, self.cli.threads, |t| {
            suites::generated_instance(suite, &cfg, t)
        });
        for v in values {
            self.line(&v?)?;
        }
        Ok(0)
    }
}

/// Runs a parsed command, writing its output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut s = Session { cli, out };
    let code = match &cli.command {
        Command::Mu { expr, radius } => s.mu(expr, radius),
        Command::Newton { expr } => s.newton(expr),
        Command::Char { expr, ladder } => s.characteristic(expr, ladder),
        Command::VerifyLld(a) => s.verify_lld(a),
        Command::VerifyClunie(a) => s.verify_clunie(a),
        Command::VerifyMokhonko(a) => s.verify_mokhonko(a),
        Command::VerifyDegree(a) => s.verify_degree(a),
        Command::Gen {
            suite,
            generator,
            constant_b,
            phi_x0,
        } => s.gen(*suite, generator, *constant_b, *phi_x0),
    }?;
    s.out.flush()?;
    Ok(code)
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
