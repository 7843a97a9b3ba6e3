//! The expression language for scalars, polynomials, rational functions and
//! difference polynomials.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' uint)?
//! base   := uint | 'z' | 'X' uint | '(' expr ')'
//! ```
//!
//! A sign is allowed only at the start of an expression, so negative
//! exponents such as `z^-1` are syntax errors. `a/b` is ordinary division of
//! integer literals.

mod elaborate;
mod parse;
mod print;

pub use elaborate::{elaborate, elaborate_diffpoly, elaborate_poly, elaborate_ratfunc, Context, ElabError, Value};
pub use parse::{parse, Expr, ExprKind, SyntaxError, Token};
pub use print::{print_diffpoly, print_poly, print_ratfunc, print_value};
