use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::diffpoly::DiffPoly;
use crate::algebra::operator::OperatorFamily;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;

/// `Σ b_k X^k` with rational-function coefficients; trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<RatFunc>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// Constant-coefficient polynomial from a polynomial over `Q`.
    pub fn from_poly(p: &Poly) -> Self {
        UniPoly::new(p.coeffs().iter().cloned().map(RatFunc::constant).collect())
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&RatFunc> {
        self.coeffs.last()
    }

    pub fn has_constant_coefficients(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_constant)
    }

    /// The same polynomial over `Q`, when every coefficient is a constant.
    pub fn to_constant_poly(&self) -> Option<Poly> {
        self.coeffs
            .iter()
            .map(RatFunc::constant_value)
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }

    /// `Σ b_k f^k` by Horner's scheme.
    pub fn eval(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * f) + c;
        }
        acc
    }

    /// The same polynomial in `X_0` among `nvars` variables.
    pub fn to_diffpoly(&self, nvars: usize) -> DiffPoly {
        let terms = self.coeffs.iter().enumerate().map(|(k, c)| {
            let mut e = vec![0; nvars];
            e[0] = k as u32;
            (c.clone(), e)
        });
        DiffPoly::from_terms(nvars, terms).expect("matching arity")
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    /// `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dq = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lead_inv = divisor.coeffs[dq].inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dq {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![RatFunc::zero(); r.len() - dq];
        for k in (0..q.len()).rev() {
            let c = &r[k + dq] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dj);
            }
            q[k] = c;
        }
        r.truncate(dq);
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }
}

/// `Φ = Φ₁·B + Φ₂` with `deg Φ₂ < deg B`.
pub fn divide_univariate(phi: &UniPoly, b: &UniPoly) -> Result<(UniPoly, UniPoly)> {
    phi.div_rem(b)
}

/// `B(f)·Ω(f, f_1, ...) − Φ(f, f_1, ...)`; zero exactly when `f` solves the
/// equation.
pub fn clunie_split_eval(
    f: &RatFunc,
    b: &UniPoly,
    omega: &DiffPoly,
    phi: &DiffPoly,
    family: &OperatorFamily,
) -> Result<RatFunc> {
    let operands = family.operands(f);
    let om = omega.eval_operands(&operands)?;
    let ph = phi.eval_operands(&operands)?;
    Ok(&(&b.eval(f) * &om) - &ph)
}
