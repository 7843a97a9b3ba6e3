//! Executable per-radius forms of the difference-equation estimates, and the
//! seeded generators that feed them.
//!
//! Every hard assertion is an exact rational inequality evaluated at one
//! log-radius. Asymptotic statements (`o(T(r, f))`, `q = 0`) are never
//! asserted; they appear as [`DecayTable`](crate::nevanlinna::DecayTable)
//! advisories.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::nevanlinna::Ladder;
use crate::scalar::{LogRadius, LogValue, Rational};

pub mod clunie;
pub mod degree;
pub mod gen;
pub mod instance;
pub mod lld;
pub mod malmquist;
pub mod mokhonko;

pub use clunie::{check_clunie_m, check_clunie_n, generate_clunie_instance, ValenceReport};
pub use degree::{check_degree_identity, DegreeReport};
pub use gen::{GeneratorConfig, OperatorKind};
pub use instance::{ClunieInstance, DegreeInstance, MokhonkoInstance};
pub use lld::{check_lld_entire, check_lld_mero};
pub use malmquist::{check_malmquist_consequence, MalmquistReport};
pub use mokhonko::{check_mokhonko, MokhonkoReport};

/// Which inequality a verdict is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    /// `µ̂(f∘L) ≤ µ̂(f)`.
    ShiftMaxTermUpper,
    /// `µ̂(f) ≤ µ̂(f∘L)`; together with the upper form, equality.
    ShiftMaxTermLower,
    /// `µ̂((f∘L)/f) ≤ 0`.
    ShiftQuotient,
    /// `µ̂(Δ_L^m f / f) ≤ 0`.
    DeltaQuotient,
    /// `m̂((f∘L)/f) = 0`.
    ShiftProximity,
    /// `m̂(Δ_L^m f / f) = 0`.
    DeltaProximity,
    /// Proximity bound for `Ω(f, f_1, ...)`.
    ClunieProximity,
    /// Valence bound for `Ω(f, f_1, ...)` with constant `B`.
    ClunieValence,
    /// Proximity bound for `Ω − Φ₁(f)` after dividing `Φ` by `B`.
    ClunieRearranged,
    /// Characteristic slope of `R∘f` at most `deg R · deg f`.
    SlopeUpper,
    /// Characteristic slope of `R∘f` at least `deg R · deg f`.
    SlopeLower,
    /// `m̂(1/(f − a))` against the substitution chain.
    MokhonkoChain,
}

impl Claim {
    pub fn as_str(self) -> &'static str {
        match self {
            Claim::ShiftMaxTermUpper => "shift-max-term-upper",
            Claim::ShiftMaxTermLower => "shift-max-term-lower",
            Claim::ShiftQuotient => "shift-quotient",
            Claim::DeltaQuotient => "delta-quotient",
            Claim::ShiftProximity => "shift-proximity",
            Claim::DeltaProximity => "delta-proximity",
            Claim::ClunieProximity => "clunie-proximity",
            Claim::ClunieValence => "clunie-valence",
            Claim::ClunieRearranged => "clunie-rearranged",
            Claim::SlopeUpper => "slope-upper",
            Claim::SlopeLower => "slope-lower",
            Claim::MokhonkoChain => "mokhonko-chain",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One checked inequality `lhs ≤ rhs` at one radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub instance: u64,
    pub claim: Claim,
    pub s: LogRadius,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    /// `rhs − lhs`; `holds ⇔ slack ≥ 0`.
    pub slack: Rational,
}

impl Verdict {
    pub fn new(instance: u64, claim: Claim, s: LogRadius, lhs: Rational, rhs: Rational) -> Self {
        let slack = &rhs - &lhs;
        Verdict {
            instance,
            claim,
            s,
            lhs,
            rhs,
            holds: !slack.is_negative(),
            slack,
        }
    }
}

/// What to do with ladder points outside an inequality's validity window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WindowPolicy {
    /// Fail with `PreconditionWindow`.
    #[default]
    Strict,
    /// Record the point as skipped.
    Skip,
}

/// How `deg Φ` is read in the hypothesis `deg B ≥ deg Φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeReading {
    /// Total degree in `X_0..X_n`.
    #[default]
    Total,
    /// Degree in `X_0` alone.
    X0Only,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckOptions {
    pub window: WindowPolicy,
    pub degree_reading: DegreeReading,
}

impl CheckOptions {
    pub fn skipping() -> Self {
        CheckOptions {
            window: WindowPolicy::Skip,
            ..CheckOptions::default()
        }
    }
}

/// Verdicts plus the ladder points that fell outside the window.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Checked {
    pub verdicts: Vec<Verdict>,
    pub skipped: Vec<LogRadius>,
}

impl Checked {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn extend(&mut self, other: Checked) {
        self.verdicts.extend(other.verdicts);
        self.skipped.extend(other.skipped);
    }
}

/// Validity window of an inequality: `s > floor`, and `s ≥ 0` when
/// `nonnegative` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub floor: LogValue,
    pub nonnegative: bool,
}

impl Window {
    pub fn above(floor: LogValue) -> Self {
        Window {
            floor,
            nonnegative: false,
        }
    }

    pub fn admits(&self, s: &LogRadius) -> bool {
        s.is_above(&self.floor) && (!self.nonnegative || !s.value().is_negative())
    }

    /// Splits the ladder into admitted points and skipped points, or fails on
    /// the first rejected point under the strict policy.
    pub fn split(&self, ladder: &Ladder, policy: WindowPolicy) -> Result<(Vec<LogRadius>, Vec<LogRadius>)> {
        let mut inside = Vec::new();
        let mut skipped = Vec::new();
        for s in ladder.points() {
            if self.admits(&s) {
                inside.push(s);
            } else if policy == WindowPolicy::Strict {
                let floor = match &self.floor {
                    LogValue::Finite(f) if !self.nonnegative || f >= &Rational::zero() => f.clone(),
                    _ => Rational::zero(),
                };
                return Err(Error::PreconditionWindow {
                    s: s.value().clone(),
                    floor,
                });
            } else {
                skipped.push(s);
            }
        }
        Ok((inside, skipped))
    }
}

/// Runs `trial` for every index of the configuration, in order.
pub fn run_trials<T, F>(trials: u64, trial: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (0..trials).map(trial).collect()
}
