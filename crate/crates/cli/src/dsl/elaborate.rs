use std::fmt;

use num_bigint::BigInt;
use valdist_core::algebra::DiffPoly;
use valdist_core::{Poly, RatFunc, Rational};

use super::parse::{parse, Expr, ExprKind, SyntaxError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Context {
    Poly,
    RatFunc,
    DiffPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Poly(Poly),
    RatFunc(RatFunc),
    DiffPoly(DiffPoly),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElabError {
    Syntax(SyntaxError),
    /// A construct the context does not allow, at the given byte offset.
    ContextViolation {
        offset: usize,
        message: String,
    },
    DivisionByZeroFunction {
        offset: usize,
    },
    VariableOutOfRange {
        offset: usize,
        index: usize,
        nvars: usize,
    },
}

impl fmt::Display for ElabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElabError::Syntax(e) => e.fmt(f),
            ElabError::ContextViolation { offset, message } => write!(f, "at byte {offset}: {message}"),
            ElabError::DivisionByZeroFunction { offset } => {
                write!(f, "at byte {offset}: division by the zero function")
            }
            ElabError::VariableOutOfRange { offset, index, nvars } => write!(
                f,
                "at byte {offset}: X{index} is out of range for {nvars} variables (X0..X{})",
                nvars - 1
            ),
        }
    }
}

impl std::error::Error for ElabError {}

impl From<SyntaxError> for ElabError {
    fn from(e: SyntaxError) -> Self {
        ElabError::Syntax(e)
    }
}

type Result<T> = std::result::Result<T, ElabError>;

fn literal(n: &num_bigint::BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

fn ratfunc(e: &Expr) -> Result<RatFunc> {
    Ok(match &e.kind {
        ExprKind::Int(n) => RatFunc::constant(literal(n)),
        ExprKind::Z => RatFunc::z(),
        ExprKind::X(k) => {
            return Err(ElabError::ContextViolation {
                offset: e.span.start,
                message: format!("formal variable X{k} is not allowed in a function of z"),
            })
        }
        ExprKind::Neg(a) => -&ratfunc(a)?,
        ExprKind::Add(a, b) => &ratfunc(a)? + &ratfunc(b)?,
        ExprKind::Sub(a, b) => &ratfunc(a)? - &ratfunc(b)?,
        ExprKind::Mul(a, b) => &ratfunc(a)? * &ratfunc(b)?,
        ExprKind::Div(a, b) => {
            let num = ratfunc(a)?;
            let den = ratfunc(b)?;
            num.checked_div(&den)
                .map_err(|_| ElabError::DivisionByZeroFunction { offset: b.span.start })?
        }
        ExprKind::Pow(a, k) => ratfunc(a)?.pow(*k),
    })
}

fn diffpoly(e: &Expr, n: usize) -> Result<DiffPoly> {
    Ok(match &e.kind {
        ExprKind::Int(_) | ExprKind::Z => DiffPoly::constant(n, ratfunc(e)?),
        ExprKind::X(k) => {
            if *k >= n {
                return Err(ElabError::VariableOutOfRange {
                    offset: e.span.start,
                    index: *k,
                    nvars: n,
                });
            }
            DiffPoly::var(n, *k)
        }
        ExprKind::Neg(a) => -&diffpoly(a, n)?,
        ExprKind::Add(a, b) => &diffpoly(a, n)? + &diffpoly(b, n)?,
        ExprKind::Sub(a, b) => &diffpoly(a, n)? - &diffpoly(b, n)?,
        ExprKind::Mul(a, b) => &diffpoly(a, n)? * &diffpoly(b, n)?,
        ExprKind::Div(a, b) => {
            if b.max_var().is_some() {
                return Err(ElabError::ContextViolation {
                    offset: b.span.start,
                    message: "divisor must not contain formal variables".into(),
                });
            }
            let den = ratfunc(b)?;
            let inv = den
                .inv()
                .map_err(|_| ElabError::DivisionByZeroFunction { offset: b.span.start })?;
            diffpoly(a, n)?.scale(&inv)
        }
        ExprKind::Pow(a, k) => diffpoly(a, n)?.pow(*k),
    })
}

pub fn elaborate_ratfunc(text: &str) -> Result<RatFunc> {
    ratfunc(&parse(text)?)
}

/// A rational function that must reduce to a polynomial.
pub fn elaborate_poly(text: &str) -> Result<Poly> {
    let f = elaborate_ratfunc(text)?;
    if !f.is_polynomial() {
        return Err(ElabError::ContextViolation {
            offset: 0,
            message: "expression is not a polynomial in z".into(),
        });
    }
    Ok(f.num().clone())
}

/// A difference polynomial in `nvars` variables, or in `max k + 1` variables
/// (at least one) when `nvars` is `None`.
pub fn elaborate_diffpoly(text: &str, nvars: Option<usize>) -> Result<DiffPoly> {
    let e = parse(text)?;
    let n = nvars.unwrap_or_else(|| e.max_var().map_or(1, |k| k + 1));
    diffpoly(&e, n)
}

pub fn elaborate(text: &str, context: Context) -> Result<Value> {
    Ok(match context {
        Context::Poly => Value::Poly(elaborate_poly(text)?),
        Context::RatFunc => Value::RatFunc(elaborate_ratfunc(text)?),
        Context::DiffPoly => Value::DiffPoly(elaborate_diffpoly(text, None)?),
    })
}
