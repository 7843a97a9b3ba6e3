//! Newton polygons and the log-radii of zeros.
//!
//! Points are `(n, ν_p(a_n))`. A lower-hull segment of slope `σ` and
//! horizontal length `ℓ` carries `ℓ` zeros of absolute value `p^σ`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{int, nu, LogRadius, LogValue, Prime, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<(usize, Rational)>,
}

/// Zeros of a polynomial grouped by log-radius, plus the zero at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZeroRadii {
    pub origin_multiplicity: usize,
    /// `(log-radius, multiplicity)`, strictly increasing in radius.
    pub radii: Vec<(Rational, usize)>,
}

impl ZeroRadii {
    pub fn total(&self) -> usize {
        self.origin_multiplicity + self.radii.iter().map(|(_, m)| m).sum::<usize>()
    }

    /// Zeros with log-radius `≤ s`, including the origin.
    pub fn count_within(&self, s: &LogRadius) -> usize {
        self.origin_multiplicity
            + self
                .radii
                .iter()
                .filter(|(r, _)| r <= s.value())
                .map(|(_, m)| m)
                .sum::<usize>()
    }

    /// `Σ_{s_w ≤ s} (s − s_w)` over the nonzero zeros.
    pub fn mass(&self, s: &LogRadius) -> Rational {
        self.radii
            .iter()
            .filter(|(r, _)| r <= s.value())
            .map(|(r, m)| (s.value() - r) * int(*m as i64))
            .sum()
    }
}

fn cross(o: &(usize, Rational), a: &(usize, Rational), b: &(usize, Rational)) -> Rational {
    let ax = int(a.0 as i64 - o.0 as i64);
    let bx = int(b.0 as i64 - o.0 as i64);
    ax * (&b.1 - &o.1) - (&a.1 - &o.1) * bx
}

impl NewtonPolygon {
    pub fn of(f: &Poly, p: Prime) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut hull: Vec<(usize, Rational)> = Vec::new();
        for (n, c) in f.terms() {
            let pt = (n, int(nu(c, p)));
            // Pop while the last turn is not strictly counter-clockwise; this
            // also drops collinear interior points.
            while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &pt) <= int(0) {
                hull.pop();
            }
            hull.push(pt);
        }
        Ok(NewtonPolygon { vertices: hull })
    }

    pub fn vertices(&self) -> &[(usize, Rational)] {
        &self.vertices
    }

    /// `(slope, horizontal length)` per segment, slopes strictly increasing.
    pub fn segments(&self) -> impl Iterator<Item = (Rational, usize)> + '_ {
        self.vertices.windows(2).map(|w| {
            let len = w[1].0 - w[0].0;
            ((&w[1].1 - &w[0].1) / int(len as i64), len)
        })
    }

    /// Maximum term from the vertices alone.
    pub fn mu_hat(&self, s: &LogRadius) -> LogValue {
        self.vertices
            .iter()
            .map(|(n, v)| LogValue::finite(s.value() * int(*n as i64) - v))
            .max()
            .unwrap_or(LogValue::Bottom)
    }

    pub fn zero_radii(&self) -> ZeroRadii {
        ZeroRadii {
            origin_multiplicity: self.vertices.first().map_or(0, |v| v.0),
            radii: self.segments().collect(),
        }
    }
}

pub fn newton_polygon(f: &Poly, p: Prime) -> Result<NewtonPolygon> {
    NewtonPolygon::of(f, p)
}

pub fn zero_log_radii(f: &Poly, p: Prime) -> Result<ZeroRadii> {
    Ok(NewtonPolygon::of(f, p)?.zero_radii())
}
