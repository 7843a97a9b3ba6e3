use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::{format_rational, unit_check, valuation, LogValue, Prime, Rational};

/// `L(z) = a·z + b` with `a ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    a: Rational,
    b: Rational,
}

impl AffineMap {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::DegenerateMap);
        }
        Ok(AffineMap { a, b })
    }

    pub fn identity() -> Self {
        AffineMap {
            a: Rational::one(),
            b: Rational::zero(),
        }
    }

    /// `z + b`.
    pub fn translation(b: Rational) -> Self {
        AffineMap { a: Rational::one(), b }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn apply_poly(&self, f: &Poly) -> Poly {
        f.compose_affine(&self.a, &self.b)
    }

    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        f.compose_affine(&self.a, &self.b).expect("a is nonzero")
    }

    /// `Δ_L^m f` for polynomials, with no restriction on `|a|`.
    pub fn delta_poly(&self, f: &Poly, m: u32) -> Poly {
        let mut g = f.clone();
        for _ in 0..m {
            g = &self.apply_poly(&g) - &g;
        }
        g
    }

    /// `Δ_L^m f`.
    pub fn delta(&self, f: &RatFunc, m: u32) -> RatFunc {
        let mut g = f.clone();
        for _ in 0..m {
            g = &self.apply(&g) - &g;
        }
        g
    }

    /// Log-radius floor `λ(b) − λ(a)` below which `|L(z)| ≤ |a||z|` fails.
    pub fn entire_floor(&self, p: Prime) -> LogValue {
        match valuation(&self.b, p) {
            LogValue::Bottom => LogValue::Bottom,
            LogValue::Finite(lb) => {
                let la = valuation(&self.a, p).into_finite().expect("a is nonzero");
                LogValue::Finite(lb - la)
            }
        }
    }

    /// Log-radius floor `λ(b)` for unit `a`.
    pub fn unit_floor(&self, p: Prime) -> LogValue {
        valuation(&self.b, p)
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*z + {}", format_rational(&self.a), format_rational(&self.b))
    }
}

/// One operand-producing operator: `f ∘ L`, `Δ_L^j f`, or `f^{(k)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OperatorSpec {
    Shift(AffineMap),
    Delta { map: AffineMap, order: u32 },
    Derivative { order: u32 },
}

impl OperatorSpec {
    pub fn shift(map: AffineMap) -> Self {
        OperatorSpec::Shift(map)
    }

    pub fn delta(map: AffineMap, order: u32) -> Self {
        OperatorSpec::Delta { map, order }
    }

    pub fn derivative(order: u32) -> Self {
        OperatorSpec::Derivative { order }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            OperatorSpec::Shift(_) => "shift",
            OperatorSpec::Delta { .. } => "delta",
            OperatorSpec::Derivative { .. } => "derivative",
        }
    }

    pub fn map(&self) -> Option<&AffineMap> {
        match self {
            OperatorSpec::Shift(m) | OperatorSpec::Delta { map: m, .. } => Some(m),
            OperatorSpec::Derivative { .. } => None,
        }
    }

    pub fn order(&self) -> Option<u32> {
        match self {
            OperatorSpec::Shift(_) => None,
            OperatorSpec::Delta { order, .. } | OperatorSpec::Derivative { order } => Some(*order),
        }
    }

    /// Checks that do not depend on the prime.
    pub fn check_shape(&self) -> Result<()> {
        match self {
            OperatorSpec::Shift(_) => Ok(()),
            OperatorSpec::Delta { map, order } => {
                if *order == 0 {
                    Err(Error::ZeroOrder)
                } else if map.is_identity() {
                    Err(Error::IdentityMapForDelta)
                } else {
                    Ok(())
                }
            }
            OperatorSpec::Derivative { order } => {
                if *order == 0 {
                    Err(Error::ZeroOrder)
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Full validation: shape plus `|a| = 1` for shift and difference maps.
    pub fn validate(&self, p: Prime) -> Result<()> {
        self.check_shape()?;
        if let Some(map) = self.map() {
            if !unit_check(map.a(), p) {
                return Err(Error::NonUnitMap(map.a().clone()));
            }
        }
        Ok(())
    }

    /// Radii at or below this floor are outside the operator's window.
    pub fn window_floor(&self, p: Prime) -> LogValue {
        self.map().map_or(LogValue::Bottom, |m| m.unit_floor(p))
    }
}

pub fn apply_operator(f: &RatFunc, op: &OperatorSpec) -> Result<RatFunc> {
    op.check_shape()?;
    Ok(match op {
        OperatorSpec::Shift(map) => map.apply(f),
        OperatorSpec::Delta { map, order } => map.delta(f, *order),
        OperatorSpec::Derivative { order } => f.derivative(*order as usize),
    })
}

/// A validated list of operators `f_1..f_n`; `X_0` is bound to `f` itself.
///
/// Shift maps must differ from each other and from the identity; no
/// operator may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorFamily {
    ops: Vec<OperatorSpec>,
}

impl OperatorFamily {
    pub fn new(ops: Vec<OperatorSpec>, p: Prime) -> Result<Self> {
        for (i, op) in ops.iter().enumerate() {
            op.validate(p)?;
            if let OperatorSpec::Shift(map) = op {
                if map.is_identity() {
                    return Err(Error::IdentityShift);
                }
            }
            if ops[..i].contains(op) {
                return Err(Error::DuplicateOperator);
            }
        }
        Ok(OperatorFamily { ops })
    }

    pub fn ops(&self) -> &[OperatorSpec] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Number of variables `X_0..X_n` a matching polynomial must have.
    pub fn arity(&self) -> usize {
        self.ops.len() + 1
    }

    pub fn has_derivative(&self) -> bool {
        self.ops.iter().any(|op| matches!(op, OperatorSpec::Derivative { .. }))
    }

    /// `max λ(b_i)` over shift and difference maps.
    pub fn window_floor(&self, p: Prime) -> LogValue {
        self.ops
            .iter()
            .map(|op| op.window_floor(p))
            .max()
            .unwrap_or(LogValue::Bottom)
    }

    /// `[f, f_1, ..., f_n]`.
    pub fn operands(&self, f: &RatFunc) -> Vec<RatFunc> {
        let mut out = Vec::with_capacity(self.arity());
        out.push(f.clone());
        for op in &self.ops {
            out.push(apply_operator(f, op).expect("validated operator"));
        }
        out
    }
}
