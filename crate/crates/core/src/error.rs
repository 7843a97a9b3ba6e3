use alloc::string::String;

use crate::scalar::Rational;

/// Every failure the core can report.
///
/// Variants carry exact rationals so that callers can render precise
/// diagnostics (the window bound that was violated, the radius that was
/// rejected, ...).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("malformed ladder `{0}`: expected start:step:count with step > 0 and count >= 1")]
    BadLadder(String),

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a nonzero function")]
    ZeroFunction,
    #[error("division by the zero function")]
    DivisionByZeroFunction,
    #[error("affine map with a = 0")]
    DegenerateMap,
    #[error("tail certificate needs beta < 0, got {0}")]
    InvalidCertificate(Rational),
    #[error("log-radius {s} is outside the certified window (must be < {bound})")]
    RadiusOutOfCertificate { s: Rational, bound: Rational },
    #[error("series head is zero, so no radius is certified")]
    EmptyCertificate,

    #[error("shift or difference operator needs a unit leading coefficient, got a = {0}")]
    NonUnitMap(Rational),
    #[error("map must not expand: need |a| <= 1, got a = {0}")]
    ExpandingMap(Rational),
    #[error("difference operator over the identity map")]
    IdentityMapForDelta,
    #[error("shift operator over the identity map (shifted copies must differ from f)")]
    IdentityShift,
    #[error("operator orders must be >= 1")]
    ZeroOrder,
    #[error("operator family contains a repeated operator")]
    DuplicateOperator,
    #[error("operator is not allowed here: {0}")]
    UnsupportedOperator(&'static str),

    #[error("difference polynomial has {found} variables, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("operation requires a nonzero difference polynomial")]
    ZeroDiffPoly,
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("log-radius {s} is outside the validity window (floor {floor})")]
    PreconditionWindow { s: Rational, floor: Rational },
    #[error("instance is not a solution: residual is nonzero")]
    NotASolution,
    #[error("target function satisfies the equation")]
    TargetIsSolution,
    #[error("right-hand side depends on shifted operands, not on f alone")]
    NotPolynomialInF,
    #[error("degree hypothesis fails: deg B = {deg_b} < deg Phi = {deg_phi}")]
    DegreeHypothesis { deg_b: usize, deg_phi: usize },
    #[error("B(f) vanishes identically")]
    DegenerateComposition,
    #[error("coefficients of the outer rational function must be constants")]
    NonConstantCoefficients,
    #[error("outer rational function is not in lowest terms")]
    NotReduced,
    #[error("f must be nonconstant")]
    ConstantFunction,
    #[error("characteristic rows use different radius ladders")]
    LadderMismatch,
    #[error("generator exhausted its retry budget")]
    GenerationFailure,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
