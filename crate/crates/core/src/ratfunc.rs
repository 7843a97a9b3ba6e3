//! Rational functions over `Q`: the desk-scale meromorphic functions.
//!
//! Canonical form: numerator and denominator coprime, denominator monic,
//! zero stored as `0/1`. Every constructor and operation returns canonical
//! values, so structural equality is equality of functions.

use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{LogRadius, LogValue, Prime, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Normalizes `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lead_inv = den.lead().expect("nonzero denominator").recip();
        Ok(RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(f: Poly) -> Self {
        RatFunc {
            num: f,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::constant(Rational::one())
    }

    pub fn z() -> Self {
        RatFunc::from_poly(Poly::z())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> RatFunc {
        // Powers of coprime polynomials stay coprime; the monic denominator
        // stays monic.
        RatFunc {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// `f(az + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Result<RatFunc> {
        if a.is_zero() {
            return Err(Error::DegenerateMap);
        }
        RatFunc::new(self.num.compose_affine(a, b), self.den.compose_affine(a, b))
    }

    /// `k`-th derivative by the quotient rule.
    pub fn derivative(&self, k: usize) -> RatFunc {
        let mut f = self.clone();
        for _ in 0..k {
            if f.is_constant() {
                return RatFunc::zero();
            }
            let num = &(&f.num.derivative(1) * &f.den) - &(&f.num * &f.den.derivative(1));
            f = RatFunc::new(num, &f.den * &f.den).expect("nonzero denominator");
        }
        f
    }

    /// `max(deg num, deg den)`.
    pub fn total_degree(&self) -> Result<usize> {
        let n = self.num.degree().ok_or(Error::ZeroFunction)?;
        let d = self.den.degree().expect("nonzero denominator");
        Ok(n.max(d))
    }

    /// Maximum term on the log scale, `Bottom` for the zero function.
    pub fn mu_log(&self, p: Prime, s: &LogRadius) -> LogValue {
        match self.num.mu_hat(p, s) {
            LogValue::Bottom => LogValue::Bottom,
            LogValue::Finite(n) => {
                let d = self.den.mu_hat(p, s).into_finite().expect("nonzero denominator");
                LogValue::Finite(n - d)
            }
        }
    }

    /// `µ̂(num) − µ̂(den)`.
    pub fn mu_hat(&self, p: Prime, s: &LogRadius) -> Result<Rational> {
        self.mu_log(p, s).into_finite().ok_or(Error::ZeroFunction)
    }

    /// Leading Laurent coefficient and order at the origin.
    pub fn laurent_lead(&self) -> Result<(Rational, i64)> {
        let on = self.num.ord0().ok_or(Error::ZeroFunction)?;
        let od = self.den.ord0().expect("nonzero denominator");
        let c = self.num.coeff(on) / self.den.coeff(od);
        Ok((c, on as i64 - od as i64))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let g = self.den.gcd(&rhs.den);
        let sd = self.den.div_exact(&g);
        let rd = rhs.den.div_exact(&g);
        let num = &(&self.num * &rd) + &(&rhs.num * &sd);
        RatFunc::new(num, &self.den * &rd).expect("nonzero")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel so the product is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        let lead_inv = den.lead().expect("nonzero").recip();
        RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }
}

impl From<Poly> for RatFunc {
    fn from(f: Poly) -> Self {
        RatFunc::from_poly(f)
    }
}
