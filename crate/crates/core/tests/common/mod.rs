#![allow(dead_code)]

use proptest::prelude::*;
use valdist_core::scalar::rat;
use valdist_core::{Poly, Prime, RatFunc, Rational};

pub const PRIMES: [u64; 3] = [2, 5, 7];

/// `u · p^(-λ)` with `u` a p-adic unit; the oracle valuation is `λ`.
pub fn scalar_with_log(p: Prime, lambda: i64, num: i64, den: i64, negative: bool) -> Rational {
    let pp = p.get() as i64;
    let fix = |k: i64| if k % pp == 0 { k + 1 } else { k };
    let sign = if negative { -1 } else { 1 };
    rat(sign * fix(num), fix(den)) * p.power(-lambda)
}

pub fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(PRIMES.to_vec()).prop_map(|p| Prime::new(p).unwrap())
}

/// Coefficient recipe `(λ, unit numerator, unit denominator, sign, present)`.
pub type Recipe = (i64, i64, i64, bool, bool);

pub fn coeff_recipe() -> impl Strategy<Value = Recipe> {
    (-3i64..=3, 1i64..=20, 1i64..=6, any::<bool>(), prop::bool::weighted(0.8))
}

pub fn build_poly(p: Prime, recipe: &[Recipe]) -> Poly {
    let n = recipe.len();
    Poly::new(
        recipe
            .iter()
            .enumerate()
            .map(|(i, &(l, u, d, neg, present))| {
                if present || i + 1 == n {
                    scalar_with_log(p, l, u, d, neg)
                } else {
                    Rational::from_integer(0.into())
                }
            })
            .collect(),
    )
}

pub fn poly_in(max_degree: usize) -> impl Strategy<Value = (Prime, Vec<Recipe>)> {
    (prime(), prop::collection::vec(coeff_recipe(), 1..=max_degree + 1))
}

pub fn ratfunc_in(max_degree: usize) -> impl Strategy<Value = (Prime, Vec<Recipe>, Vec<Recipe>)> {
    (
        prime(),
        prop::collection::vec(coeff_recipe(), 1..=max_degree + 1),
        prop::collection::vec(coeff_recipe(), 1..=max_degree + 1),
    )
}

pub fn build_ratfunc(p: Prime, num: &[Recipe], den: &[Recipe]) -> RatFunc {
    RatFunc::new(build_poly(p, num), build_poly(p, den)).unwrap()
}
