//! Tail-certified truncated power series: the stand-in for transcendental
//! entire functions.
//!
//! A series `Σ a_n z^n` is known exactly for `n < known` and only through
//! the bound `λ(a_n) ≤ alpha + beta·n` (with `beta < 0`) beyond that. The
//! maximum term is then determined by the head on a left-infinite window of
//! log-radii; outside it every query fails with `RadiusOutOfCertificate`.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{int, valuation, LogRadius, LogValue, Prime, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    head: Poly,
    known: usize,
    alpha: Rational,
    beta: Rational,
}

impl TruncatedSeries {
    /// `head` holds the exact coefficients of degrees `0..known`.
    pub fn new(head: Poly, known: usize, alpha: Rational, beta: Rational) -> Result<Self> {
        if !beta.is_negative() {
            return Err(Error::InvalidCertificate(beta));
        }
        assert!(
            head.degree().is_none_or(|d| d < known),
            "head has terms at or beyond the certified tail"
        );
        Ok(TruncatedSeries {
            head,
            known,
            alpha,
            beta,
        })
    }

    pub fn head(&self) -> &Poly {
        &self.head
    }

    pub fn known(&self) -> usize {
        self.known
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// Upper bound on `λ(a_n) + n·s` over the tail, valid for `s < -beta`.
    fn tail_bound(&self, s: &Rational) -> Rational {
        &self.alpha + int(self.known as i64) * (&self.beta + s)
    }

    /// The supremum `s_max` of certified log-radii (exclusive).
    pub fn window_bound(&self, p: Prime) -> Result<Rational> {
        let known = int(self.known as i64);
        let base = &self.alpha + &known * &self.beta;
        let crossing = self
            .head
            .terms()
            .map(|(m, c)| {
                let lam = valuation(c, p).into_finite().expect("nonzero term");
                (lam - &base) / (&known - int(m as i64))
            })
            .max()
            .ok_or(Error::EmptyCertificate)?;
        Ok(core::cmp::min(crossing, -&self.beta))
    }

    pub fn mu_hat(&self, p: Prime, s: &LogRadius) -> Result<LogValue> {
        let bound = self.window_bound(p)?;
        if s.value() >= &bound {
            return Err(Error::RadiusOutOfCertificate {
                s: s.value().clone(),
                bound,
            });
        }
        let head = self.head.mu_hat(p, s);
        debug_assert!(head >= LogValue::Finite(self.tail_bound(s.value())));
        Ok(head)
    }

    /// Termwise `k`-th derivative. Integer factors have `|n| ≤ 1`, so the
    /// tail bound only moves by the index shift.
    pub fn derivative(&self, k: usize) -> TruncatedSeries {
        TruncatedSeries {
            head: self.head.derivative(k),
            known: self.known.saturating_sub(k),
            alpha: &self.alpha + int(k as i64) * &self.beta,
            beta: self.beta.clone(),
        }
    }
}

/// An entire function at desk scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entire {
    Poly(Poly),
    Series(TruncatedSeries),
}

impl Entire {
    pub fn mu_hat(&self, p: Prime, s: &LogRadius) -> Result<LogValue> {
        match self {
            Entire::Poly(f) => Ok(f.mu_hat(p, s)),
            Entire::Series(f) => f.mu_hat(p, s),
        }
    }

    pub fn derivative(&self, k: usize) -> Entire {
        match self {
            Entire::Poly(f) => Entire::Poly(f.derivative(k)),
            Entire::Series(f) => Entire::Series(f.derivative(k)),
        }
    }
}

impl From<Poly> for Entire {
    fn from(f: Poly) -> Self {
        Entire::Poly(f)
    }
}

impl From<TruncatedSeries> for Entire {
    fn from(f: TruncatedSeries) -> Self {
        Entire::Series(f)
    }
}
