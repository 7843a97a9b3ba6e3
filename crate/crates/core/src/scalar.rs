//! Exact rational scalars with a p-adic absolute value.
//!
//! Absolute values are never materialized as floats. A nonzero `x` is
//! represented on the logarithmic scale `λ(x) = log_p |x|_p = -ν_p(x)`,
//! which is always an integer for elements of `Q` and a rational for radii.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `num/den` rendering; zero is `0/1`.
pub fn format_rational(x: &Rational) -> String {
    let mut s = x.numer().to_string();
    s.push('/');
    s.push_str(&x.denom().to_string());
    s
}

/// Accepts `num/den` or a bare integer, with an optional sign on the numerator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// A prime `p`, fixed for a whole session or instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn as_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }

    /// `p^k` as a rational, `k` may be negative.
    pub fn power(self, k: i64) -> Rational {
        let base = self.as_bigint();
        let mag = num_traits::pow(base, k.unsigned_abs() as usize);
        if k >= 0 {
            Rational::from_integer(mag)
        } else {
            Rational::new(BigInt::one(), mag)
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Multiplicity of `p` in a nonzero integer.
fn nu_integer(n: &BigInt, p: Prime) -> i64 {
    debug_assert!(!n.is_zero());
    let p = p.as_bigint();
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// `ν_p(x)` for nonzero `x`.
pub fn nu(x: &Rational, p: Prime) -> i64 {
    nu_integer(x.numer(), p) - nu_integer(x.denom(), p)
}

/// `log_p` of an absolute value: `Bottom` encodes `|0| = 0`.
///
/// The derived order puts `Bottom` below every finite value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LogValue {
    Bottom,
    Finite(Rational),
}

impl LogValue {
    pub fn finite(x: Rational) -> Self {
        LogValue::Finite(x)
    }

    pub fn zero() -> Self {
        LogValue::Finite(Rational::zero())
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, LogValue::Bottom)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            LogValue::Bottom => None,
            LogValue::Finite(x) => Some(x),
        }
    }

    pub fn into_finite(self) -> Option<Rational> {
        match self {
            LogValue::Bottom => None,
            LogValue::Finite(x) => Some(x),
        }
    }

    /// `log⁺`: `max(0, λ)` with `log⁺ 0 = 0`.
    pub fn log_plus(&self) -> Rational {
        match self {
            LogValue::Finite(x) if x.is_positive() => x.clone(),
            _ => Rational::zero(),
        }
    }

    /// Shift by a rational (multiplication by a nonzero constant on the
    /// absolute-value side). `Bottom` absorbs.
    pub fn shifted(&self, by: &Rational) -> Self {
        match self {
            LogValue::Bottom => LogValue::Bottom,
            LogValue::Finite(x) => LogValue::Finite(x + by),
        }
    }
}

impl Add for LogValue {
    type Output = LogValue;

    /// `λ(xy) = λ(x) + λ(y)`.
    fn add(self, rhs: LogValue) -> LogValue {
        match (self, rhs) {
            (LogValue::Finite(a), LogValue::Finite(b)) => LogValue::Finite(a + b),
            _ => LogValue::Bottom,
        }
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogValue::Bottom => f.write_str("bottom"),
            LogValue::Finite(x) => f.write_str(&format_rational(x)),
        }
    }
}

pub fn valuation(x: &Rational, p: Prime) -> LogValue {
    if x.is_zero() {
        LogValue::Bottom
    } else {
        LogValue::Finite(int(-nu(x, p)))
    }
}

/// Ultrametric bound for `λ(x + y)`: exact when the arguments differ.
pub fn log_add_bound(x: &LogValue, y: &LogValue) -> LogValue {
    core::cmp::max(x, y).clone()
}

pub fn unit_check(x: &Rational, p: Prime) -> bool {
    valuation(x, p) == LogValue::zero()
}

/// A rational paired with the prime that values it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    pub value: Rational,
    pub prime: Prime,
}

impl Scalar {
    pub fn new(value: Rational, prime: Prime) -> Self {
        Scalar { value, prime }
    }

    pub fn valuation(&self) -> LogValue {
        valuation(&self.value, self.prime)
    }

    pub fn is_unit(&self) -> bool {
        unit_check(&self.value, self.prime)
    }
}

/// A radius `r = p^s`, stored as its exponent `s`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LogRadius(pub Rational);

impl LogRadius {
    pub fn new(s: Rational) -> Self {
        LogRadius(s)
    }

    pub fn from_int(s: i64) -> Self {
        LogRadius(int(s))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// `s > floor`, where a `Bottom` floor admits every radius.
    pub fn is_above(&self, floor: &LogValue) -> bool {
        match floor {
            LogValue::Bottom => true,
            LogValue::Finite(f) => &self.0 > f,
        }
    }
}

impl From<Rational> for LogRadius {
    fn from(s: Rational) -> Self {
        LogRadius(s)
    }
}

impl fmt::Display for LogRadius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl Add<&Rational> for &LogRadius {
    type Output = LogRadius;
    fn add(self, rhs: &Rational) -> LogRadius {
        LogRadius(&self.0 + rhs)
    }
}

impl Sub<&LogRadius> for &LogRadius {
    type Output = Rational;
    fn sub(self, rhs: &LogRadius) -> Rational {
        &self.0 - &rhs.0
    }
}

impl Neg for &LogRadius {
    type Output = LogRadius;
    fn neg(self) -> LogRadius {
        LogRadius(-&self.0)
    }
}

/// Exact rational to `f64`, for optional decimal renderings only.
pub fn approx(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    #[test]
    fn primes() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(7919).is_ok());
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(25), Err(Error::NotPrime(25)));
    }

    #[test]
    fn valuation_examples() {
        let p = p5();
        assert_eq!(valuation(&rat(1, 25), p), LogValue::finite(int(2)));
        assert_eq!(valuation(&rat(10, 3), p), LogValue::finite(int(-1)));
        assert_eq!(valuation(&int(0), p), LogValue::Bottom);
    }

    #[test]
    fn add_bound_examples() {
        let p = p5();
        let a = valuation(&int(5), p);
        let b = valuation(&rat(1, 5), p);
        let bound = log_add_bound(&a, &b);
        assert_eq!(bound, LogValue::finite(int(1)));
        assert_eq!(valuation(&(int(5) + rat(1, 5)), p), bound);

        let x = LogValue::finite(rat(3, 2));
        assert_eq!(log_add_bound(&LogValue::Bottom, &x), x);

        let one = valuation(&int(1), p);
        let minus = valuation(&int(-1), p);
        assert_eq!(log_add_bound(&one, &minus), LogValue::zero());
        assert!(valuation(&int(0), p) <= LogValue::zero());
    }

    #[test]
    fn unit_examples() {
        let p = p5();
        assert!(unit_check(&int(3), p));
        assert!(!unit_check(&int(5), p));
        assert!(unit_check(&rat(7, 3), p));
        assert!(!unit_check(&int(0), p));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&int(0)), "0/1");
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn prime_power() {
        let p = p5();
        assert_eq!(p.power(2), int(25));
        assert_eq!(p.power(-1), rat(1, 5));
        assert_eq!(p.power(0), int(1));
    }
}
