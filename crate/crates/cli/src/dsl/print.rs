//! Printing into the expression language. Every printed form parses and
//! elaborates back to an equal value.

use num_traits::{One, Signed};
use valdist_core::algebra::DiffPoly;
use valdist_core::scalar::format_rational;
use valdist_core::{Poly, RatFunc, Rational};

use super::elaborate::Value;

/// Nonnegative integers print bare; everything else is parenthesized so it
/// can sit inside a product.
fn atom(c: &Rational) -> String {
    if c.is_integer() && !c.is_negative() {
        c.numer().to_string()
    } else if c.is_integer() {
        format!("({})", c.numer())
    } else {
        format!("({})", format_rational(c))
    }
}

fn power(base: &str, k: u32) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn join(parts: Vec<String>) -> String {
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn print_poly(f: &Poly) -> String {
    join(
        f.terms()
            .map(|(k, c)| {
                let z = power("z", k as u32);
                match (c.is_one(), z.is_empty()) {
                    (_, true) => atom(c),
                    (true, false) => z,
                    (false, false) => format!("{}*{z}", atom(c)),
                }
            })
            .collect(),
    )
}

pub fn print_ratfunc(f: &RatFunc) -> String {
    if f.is_polynomial() {
        print_poly(f.num())
    } else {
        format!("({})/({})", print_poly(f.num()), print_poly(f.den()))
    }
}

pub fn print_diffpoly(p: &DiffPoly) -> String {
    join(
        p.terms()
            .map(|(e, c)| {
                let mut factors = Vec::new();
                let is_one = c.constant_value().is_some_and(|v| v.is_one());
                if !is_one || e.total() == 0 {
                    factors.push(format!("({})", print_ratfunc(c)));
                }
                for (k, &i) in e.as_slice().iter().enumerate() {
                    if i > 0 {
                        factors.push(power(&format!("X{k}"), i));
                    }
                }
                factors.join("*")
            })
            .collect(),
    )
}

pub fn print_value(v: &Value) -> String {
    match v {
        Value::Poly(f) => print_poly(f),
        Value::RatFunc(f) => print_ratfunc(f),
        Value::DiffPoly(p) => print_diffpoly(p),
    }
}
