use crate::algebra::{clunie_split_eval, DiffPoly, OperatorFamily, UniPoly};
use crate::check::DegreeReading;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::{LogValue, Prime};

fn check_arity(p: &DiffPoly, family: &OperatorFamily) -> Result<()> {
    if p.nvars() != family.arity() {
        return Err(Error::ArityMismatch {
            expected: family.arity(),
            found: p.nvars(),
        });
    }
    Ok(())
}

/// `B(f)·Ω(f, f_1, ..., f_n) = Φ(f, f_1, ..., f_n)` with `B(X) = Σ b_j X^j`.
///
/// The constructor checks shapes only; whether `f` solves the equation is
/// checked by [`ClunieInstance::require_solution`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClunieInstance {
    pub prime: Prime,
    pub f: RatFunc,
    pub family: OperatorFamily,
    pub b: UniPoly,
    pub omega: DiffPoly,
    pub phi: DiffPoly,
}

impl ClunieInstance {
    pub fn new(
        prime: Prime,
        f: RatFunc,
        family: OperatorFamily,
        b: UniPoly,
        omega: DiffPoly,
        phi: DiffPoly,
    ) -> Result<Self> {
        check_arity(&omega, &family)?;
        check_arity(&phi, &family)?;
        if b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(ClunieInstance {
            prime,
            f,
            family,
            b,
            omega,
            phi,
        })
    }

    /// Builds the instance whose `Φ` is `higher` plus the degree-zero
    /// coefficient `d_0 = B(f)·Ω(f, ...) − higher(f, ...)`, which makes `f` a
    /// solution.
    pub fn complete(
        prime: Prime,
        f: RatFunc,
        family: OperatorFamily,
        b: UniPoly,
        omega: DiffPoly,
        higher: DiffPoly,
    ) -> Result<Self> {
        check_arity(&higher, &family)?;
        let d0 = clunie_split_eval(&f, &b, &omega, &higher, &family)?;
        let phi = &higher + &DiffPoly::constant(family.arity(), d0);
        ClunieInstance::new(prime, f, family, b, omega, phi)
    }

    /// `B(f)·Ω(f, ...) − Φ(f, ...)`.
    pub fn residual(&self) -> Result<RatFunc> {
        clunie_split_eval(&self.f, &self.b, &self.omega, &self.phi, &self.family)
    }

    pub fn require_solution(&self) -> Result<()> {
        if self.residual()?.is_zero() {
            Ok(())
        } else {
            Err(Error::NotASolution)
        }
    }

    /// `q = deg B`.
    pub fn q(&self) -> usize {
        self.b.degree().expect("B is nonzero")
    }

    /// `deg Ω`, with the zero polynomial read as degree 0.
    pub fn omega_degree(&self) -> u32 {
        self.omega.total_deg().unwrap_or(0)
    }

    pub fn phi_degree(&self, reading: DegreeReading) -> u32 {
        match reading {
            DegreeReading::Total => self.phi.total_deg().unwrap_or(0),
            DegreeReading::X0Only => self.phi.degree_in(0).unwrap_or(0),
        }
    }

    pub fn require_degree_hypothesis(&self, reading: DegreeReading) -> Result<()> {
        let deg_phi = self.phi_degree(reading) as usize;
        if self.q() < deg_phi {
            return Err(Error::DegreeHypothesis {
                deg_b: self.q(),
                deg_phi,
            });
        }
        Ok(())
    }

    /// The Clunie estimates are stated for shift and difference operators.
    pub fn require_difference_family(&self) -> Result<()> {
        if self.family.has_derivative() {
            return Err(Error::UnsupportedOperator("derivative"));
        }
        Ok(())
    }

    /// `max λ(b_i)` over the operator maps.
    pub fn window_floor(&self) -> LogValue {
        self.family.window_floor(self.prime)
    }
}

/// `P(f, f_1, ..., f_n) = 0` together with a target `a` that is not a
/// solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MokhonkoInstance {
    pub prime: Prime,
    pub p: DiffPoly,
    pub family: OperatorFamily,
    pub f: RatFunc,
    pub a: RatFunc,
}

impl MokhonkoInstance {
    pub fn new(prime: Prime, p: DiffPoly, family: OperatorFamily, f: RatFunc, a: RatFunc) -> Result<Self> {
        check_arity(&p, &family)?;
        if p.is_zero() {
            return Err(Error::ZeroDiffPoly);
        }
        Ok(MokhonkoInstance { prime, p, family, f, a })
    }

    pub fn window_floor(&self) -> LogValue {
        self.family.window_floor(self.prime)
    }
}

/// `f` and the outer function `R(X) = Φ(X)/B(X)` with constant coefficients,
/// in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeInstance {
    pub prime: Prime,
    pub f: RatFunc,
    phi: Poly,
    b: Poly,
}

impl DegreeInstance {
    pub fn new(prime: Prime, f: RatFunc, phi: &UniPoly, b: &UniPoly) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::ConstantFunction);
        }
        if b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if phi.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let phi = phi.to_constant_poly().ok_or(Error::NonConstantCoefficients)?;
        let b = b.to_constant_poly().ok_or(Error::NonConstantCoefficients)?;
        if !phi.gcd(&b).is_constant() {
            return Err(Error::NotReduced);
        }
        Ok(DegreeInstance { prime, f, phi, b })
    }

    pub fn phi(&self) -> &Poly {
        &self.phi
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    /// `d = max(deg Φ, deg B)`.
    pub fn d(&self) -> usize {
        self.phi.degree().max(self.b.degree()).expect("Phi and B are nonzero")
    }

    /// `Φ(f)/B(f)`.
    pub fn composed(&self) -> Result<RatFunc> {
        let num = UniPoly::from_poly(&self.phi).eval(&self.f);
        let den = UniPoly::from_poly(&self.b).eval(&self.f);
        if den.is_zero() {
            return Err(Error::DegenerateComposition);
        }
        num.checked_div(&den)
    }
}
