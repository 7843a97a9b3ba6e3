use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use crate::algebra::operator::OperatorFamily;
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;

/// Exponent vector `(i_0, ..., i_n)`, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn new(e: Vec<u32>) -> Self {
        Exponents(e)
    }

    pub fn zeros(n: usize) -> Self {
        Exponents(vec![0; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    fn plus(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `Σ c_i X_0^{i_0} ··· X_n^{i_n}` with rational-function coefficients.
///
/// Terms are kept in graded-lex order, without zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, RatFunc>,
}

impl DiffPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 1, "a difference polynomial needs X_0");
        DiffPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: RatFunc) -> Self {
        DiffPoly::monomial(nvars, c, Exponents::zeros(nvars))
    }

    /// The variable `X_k`.
    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k < nvars);
        let mut e = vec![0; nvars];
        e[k] = 1;
        DiffPoly::monomial(nvars, RatFunc::one(), Exponents(e))
    }

    pub fn monomial(nvars: usize, coeff: RatFunc, exps: Exponents) -> Self {
        assert_eq!(exps.0.len(), nvars, "exponent vector length");
        let mut p = DiffPoly::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    /// Sums the given monomials; repeated exponent vectors are merged.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (RatFunc, Vec<u32>)>,
    {
        let mut p = DiffPoly::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(Exponents(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &RatFunc> {
        self.terms.values()
    }

    /// Same terms, more variables (new variables appear to the power 0).
    pub fn widen(&self, nvars: usize) -> DiffPoly {
        assert!(nvars >= self.nvars);
        let mut out = DiffPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut v = e.0.clone();
            v.resize(nvars, 0);
            out.terms.insert(Exponents(v), c.clone());
        }
        out
    }

    /// `max Σ_k i_k` over the monomials.
    pub fn total_deg(&self) -> Result<u32> {
        self.terms.keys().map(Exponents::total).max().ok_or(Error::ZeroDiffPoly)
    }

    pub fn degree_in(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.0[k]).max()
    }

    pub fn depends_only_on_x0(&self) -> bool {
        self.terms.keys().all(|e| e.0[1..].iter().all(|&x| x == 0))
    }

    /// The coefficient of `X^0`.
    pub fn constant_part(&self) -> RatFunc {
        self.terms
            .get(&Exponents::zeros(self.nvars))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    /// Monomials of positive total degree.
    pub fn positive_part(&self) -> DiffPoly {
        DiffPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total() > 0)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> DiffPoly {
        let mut out = DiffPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> DiffPoly {
        let mut acc = DiffPoly::constant(self.nvars, RatFunc::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The polynomial in `X_0` alone, as a univariate polynomial.
    pub fn to_unipoly(&self) -> Result<UniPoly> {
        if !self.depends_only_on_x0() {
            return Err(Error::NotPolynomialInF);
        }
        let deg = self.degree_in(0).unwrap_or(0) as usize;
        let mut coeffs = vec![RatFunc::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e.0[0] as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    /// `Σ c_i Π operands[k]^{i_k}`.
    pub fn eval_operands(&self, operands: &[RatFunc]) -> Result<RatFunc> {
        if operands.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: operands.len(),
            });
        }
        // powers[k][j] = operands[k]^j
        let powers: Vec<Vec<RatFunc>> = (0..self.nvars)
            .map(|k| {
                let top = self.degree_in(k).unwrap_or(0);
                let mut row = Vec::with_capacity(top as usize + 1);
                row.push(RatFunc::one());
                for j in 1..=top as usize {
                    let next = &row[j - 1] * &operands[k];
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = RatFunc::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &ik) in e.0.iter().enumerate() {
                if ik > 0 {
                    t = &t * &powers[k][ik as usize];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `P(f, f_1, ..., f_n)` with `f_k` produced by the operator family.
    pub fn eval(&self, f: &RatFunc, family: &OperatorFamily) -> Result<RatFunc> {
        check_arity(self, family)?;
        self.eval_operands(&family.operands(f))
    }
}

fn check_arity(p: &DiffPoly, family: &OperatorFamily) -> Result<()> {
    if p.nvars != family.arity() {
        return Err(Error::ArityMismatch {
            expected: family.arity(),
            found: p.nvars,
        });
    }
    Ok(())
}

pub fn eval_diffpoly(p: &DiffPoly, f: &RatFunc, family: &OperatorFamily) -> Result<RatFunc> {
    p.eval(f, family)
}

pub fn total_deg(p: &DiffPoly) -> Result<u32> {
    p.total_deg()
}

/// Expands `P(g + a, g_1 + a_1, ..., g_n + a_n)` where `a_k` is the operator
/// image of `a`, and splits it into the part of positive degree in the
/// `g`-variables and the remaining function `P(a, a_1, ...)`.
pub fn substitute_shift_target(p: &DiffPoly, a: &RatFunc, family: &OperatorFamily) -> Result<(DiffPoly, RatFunc)> {
    check_arity(p, family)?;
    let n = p.nvars;
    let shifted: Vec<DiffPoly> = family
        .operands(a)
        .into_iter()
        .enumerate()
        .map(|(k, ak)| &DiffPoly::var(n, k) + &DiffPoly::constant(n, ak))
        .collect();
    let mut out = DiffPoly::zero(n);
    for (e, c) in &p.terms {
        let mut t = DiffPoly::constant(n, c.clone());
        for (k, &ik) in e.0.iter().enumerate() {
            if ik > 0 {
                t = &t * &shifted[k].pow(ik);
            }
        }
        out = &out + &t;
    }
    let pconst = out.constant_part();
    Ok((out.positive_part(), pconst))
}

impl Add for &DiffPoly {
    type Output = DiffPoly;
    fn add(self, rhs: &DiffPoly) -> DiffPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &DiffPoly {
    type Output = DiffPoly;
    fn sub(self, rhs: &DiffPoly) -> DiffPoly {
        self + &(-rhs)
    }
}

impl Neg for &DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        DiffPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &DiffPoly {
    type Output = DiffPoly;
    fn mul(self, rhs: &DiffPoly) -> DiffPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = DiffPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.plus(eb), ca * cb);
            }
        }
        out
    }
}
