//! Affine maps, shift/difference/derivative operators, and polynomials in
//! `f` and its operator images.

pub mod diffpoly;
pub mod operator;
pub mod unipoly;

pub use diffpoly::{eval_diffpoly, substitute_shift_target, total_deg, DiffPoly, Exponents};
pub use operator::{apply_operator, AffineMap, OperatorFamily, OperatorSpec};
pub use unipoly::{clunie_split_eval, divide_univariate, UniPoly};
