//! Proximity, counting, valence and characteristic functions on the exact
//! `log_p` scale.
//!
//! With `r = p^s`:
//!
//! * `m̂(s, f) = max(0, µ̂(s, f))`
//! * `N̂(s, f) = m₀·s + Σ_{poles w ≠ 0, s_w ≤ s} (s − s_w)` where `m₀` is the
//!   pole order at the origin (base radius `s₀ = 0`)
//! * `T̂ = m̂ + N̂`
//!
//! The Jensen identity `µ̂(s, f) = λ(c₀) + ord₀(f)·s + Z(s) − P(s)` (zero and
//! pole masses away from the origin) ties the maximum term to the Newton
//! polygons of numerator and denominator; [`jensen_defect`] returns the
//! difference of the two sides.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::newton::{zero_log_radii, ZeroRadii};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::{int, parse_rational, valuation, LogValue, Prime, Rational};
use crate::series::{Entire, TruncatedSeries};

pub use crate::scalar::LogRadius;

/// Anything with a maximum term on a log-radius.
pub trait MaxTerm {
    /// `log_p µ(p^s, f)`, `Bottom` for the zero function.
    fn mu_log(&self, p: Prime, s: &LogRadius) -> Result<LogValue>;
}

impl MaxTerm for Poly {
    fn mu_log(&self, p: Prime, s: &LogRadius) -> Result<LogValue> {
        Ok(self.mu_hat(p, s))
    }
}

impl MaxTerm for TruncatedSeries {
    fn mu_log(&self, p: Prime, s: &LogRadius) -> Result<LogValue> {
        self.mu_hat(p, s)
    }
}

impl MaxTerm for Entire {
    fn mu_log(&self, p: Prime, s: &LogRadius) -> Result<LogValue> {
        self.mu_hat(p, s)
    }
}

impl MaxTerm for RatFunc {
    fn mu_log(&self, p: Prime, s: &LogRadius) -> Result<LogValue> {
        Ok(RatFunc::mu_log(self, p, s))
    }
}

/// `m̂(s, f)`; the zero function is rejected.
pub fn proximity<F: MaxTerm + ?Sized>(f: &F, p: Prime, s: &LogRadius) -> Result<Rational> {
    let mu = f.mu_log(p, s)?;
    if mu.is_bottom() {
        return Err(Error::ZeroFunction);
    }
    Ok(mu.log_plus())
}

/// `log⁺ µ̂`, with `log⁺ 0 = 0` so that identically vanishing operands
/// contribute nothing.
pub fn proximity_or_zero(f: &RatFunc, p: Prime, s: &LogRadius) -> Rational {
    f.mu_log(p, s).log_plus()
}

/// Pole data of a nonzero rational function.
pub fn poles(f: &RatFunc, p: Prime) -> Result<ZeroRadii> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    zero_log_radii(f.den(), p)
}

/// Zero data of a nonzero rational function.
pub fn zeros(f: &RatFunc, p: Prime) -> Result<ZeroRadii> {
    zero_log_radii(f.num(), p).map_err(|_| Error::ZeroFunction)
}

/// `n(s, f)`: poles of log-radius `≤ s`, origin included.
pub fn pole_count(f: &RatFunc, p: Prime, s: &LogRadius) -> Result<usize> {
    Ok(poles(f, p)?.count_within(s))
}

fn divisor_valence(d: &ZeroRadii, s: &LogRadius) -> Rational {
    int(d.origin_multiplicity as i64) * s.value() + d.mass(s)
}

/// `N̂(s, f)`.
pub fn valence(f: &RatFunc, p: Prime, s: &LogRadius) -> Result<Rational> {
    Ok(divisor_valence(&poles(f, p)?, s))
}

/// `N̂(s, f)` with the zero function (no poles) mapped to `0`.
pub fn valence_or_zero(f: &RatFunc, p: Prime, s: &LogRadius) -> Rational {
    if f.is_zero() {
        Rational::zero()
    } else {
        valence(f, p, s).expect("nonzero function")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicRow {
    pub s: LogRadius,
    pub m: Rational,
    pub n: Rational,
    pub t: Rational,
}

/// `T̂(s, f) = m̂(s, f) + N̂(s, f)`.
pub fn characteristic(f: &RatFunc, p: Prime, s: &LogRadius) -> Result<CharacteristicRow> {
    let m = proximity(f, p, s)?;
    let n = valence(f, p, s)?;
    let t = &m + &n;
    Ok(CharacteristicRow { s: s.clone(), m, n, t })
}

pub fn characteristic_table(f: &RatFunc, p: Prime, ladder: &Ladder) -> Result<Vec<CharacteristicRow>> {
    ladder.points().iter().map(|s| characteristic(f, p, s)).collect()
}

/// Jensen residual; zero for every nonzero `f` and every `s`.
///
/// `µ̂` comes from the naive coefficient maximum, the masses from the Newton
/// polygons, so the two sides share no code path.
pub fn jensen_defect(f: &RatFunc, p: Prime, s: &LogRadius) -> Result<Rational> {
    let mu = f.mu_hat(p, s)?;
    let (c0, ord0) = f.laurent_lead()?;
    let lead = valuation(&c0, p).into_finite().expect("nonzero Laurent coefficient");
    let zero_mass = zeros(f, p)?.mass(s);
    let pole_mass = poles(f, p)?.mass(s);
    Ok(mu - (lead + int(ord0) * s.value() + zero_mass - pole_mass))
}

/// An arithmetic progression of log-radii, `start:step:count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ladder {
    start: Rational,
    step: Rational,
    count: usize,
}

impl Ladder {
    pub fn new(start: Rational, step: Rational, count: usize) -> Result<Self> {
        if !step.is_positive() || count == 0 {
            return Err(Error::BadLadder(Ladder::render(&start, &step, count)));
        }
        Ok(Ladder { start, step, count })
    }

    /// `count` points starting one `step` above `floor` (or at `step` when
    /// the floor is `Bottom`).
    pub fn above(floor: &LogValue, step: Rational, count: usize) -> Result<Self> {
        let base = floor.as_finite().cloned().unwrap_or_else(Rational::zero);
        Ladder::new(&base + &step, step, count)
    }

    /// The same ladder, moved up to start one step above `floor` when its
    /// first point does not already clear it.
    pub fn clear_of(&self, floor: &LogValue) -> Ladder {
        match floor {
            LogValue::Finite(f) if &self.start <= f => Ladder {
                start: f + &self.step,
                ..self.clone()
            },
            _ => self.clone(),
        }
    }

    pub fn start(&self) -> &Rational {
        &self.start
    }

    pub fn step(&self) -> &Rational {
        &self.step
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn points(&self) -> Vec<LogRadius> {
        (0..self.count)
            .map(|k| LogRadius::new(&self.start + &self.step * int(k as i64)))
            .collect()
    }

    fn render(start: &Rational, step: &Rational, count: usize) -> String {
        use crate::scalar::format_rational;
        let mut s = format_rational(start);
        s.push(':');
        s.push_str(&format_rational(step));
        s.push(':');
        s.push_str(&count.to_string());
        s
    }
}

impl FromStr for Ladder {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::BadLadder(text.to_string());
        let mut parts = text.split(':');
        let (Some(a), Some(b), Some(c), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        let start = parse_rational(a).map_err(|_| bad())?;
        let step = parse_rational(b).map_err(|_| bad())?;
        let count = c.trim().parse::<usize>().map_err(|_| bad())?;
        Ladder::new(start, step, count).map_err(|_| bad())
    }
}

impl fmt::Display for Ladder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Ladder::render(&self.start, &self.step, self.count))
    }
}

/// How a ratio sequence behaves along the ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    /// Every defined ratio is zero.
    Vanishing,
    /// Strictly decreasing along the ladder.
    Decaying,
    NonDecaying,
    /// No radius had a positive denominator.
    Undefined,
}

impl Trend {
    pub fn as_str(self) -> &'static str {
        match self {
            Trend::Vanishing => "vanishing",
            Trend::Decaying => "decaying",
            Trend::NonDecaying => "non-decaying",
            Trend::Undefined => "undefined",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioRow {
    pub s: LogRadius,
    pub numerator: Rational,
    pub denominator: Rational,
    /// `None` where the denominator is not positive.
    pub ratio: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecayTable {
    pub rows: Vec<RatioRow>,
    pub trend: Trend,
}

/// Ratio table of arbitrary per-radius numerators against denominators.
pub fn ratio_table(radii: &[LogRadius], numerators: &[Rational], denominators: &[Rational]) -> DecayTable {
    assert_eq!(radii.len(), numerators.len());
    assert_eq!(radii.len(), denominators.len());
    let rows: Vec<RatioRow> = radii
        .iter()
        .zip(numerators.iter().zip(denominators))
        .map(|(s, (n, d))| RatioRow {
            s: s.clone(),
            numerator: n.clone(),
            denominator: d.clone(),
            ratio: d.is_positive().then(|| n / d),
        })
        .collect();
    let defined: Vec<&Rational> = rows.iter().filter_map(|r| r.ratio.as_ref()).collect();
    let trend = if defined.is_empty() {
        Trend::Undefined
    } else if defined.iter().all(|r| r.is_zero()) {
        Trend::Vanishing
    } else if defined.len() >= 2 && defined.windows(2).all(|w| w[1] < w[0]) {
        Trend::Decaying
    } else {
        Trend::NonDecaying
    };
    DecayTable { rows, trend }
}

/// `Σ T̂(coefficients) / T̂(f)` per radius: the admissibility diagnostic.
pub fn ratio_report(numerators: &[Vec<CharacteristicRow>], denominator: &[CharacteristicRow]) -> Result<DecayTable> {
    let radii: Vec<LogRadius> = denominator.iter().map(|r| r.s.clone()).collect();
    for rows in numerators {
        if rows.len() != radii.len() || rows.iter().zip(&radii).any(|(r, s)| &r.s != s) {
            return Err(Error::LadderMismatch);
        }
    }
    let sums: Vec<Rational> = (0..radii.len())
        .map(|k| numerators.iter().map(|rows| rows[k].t.clone()).sum())
        .collect();
    let dens: Vec<Rational> = denominator.iter().map(|r| r.t.clone()).collect();
    Ok(ratio_table(&radii, &sums, &dens))
}
