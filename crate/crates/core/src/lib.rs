//! Exact non-Archimedean value distribution over `Q` with a p-adic absolute
//! value.
//!
//! Maximum terms, Newton polygons, the proximity/valence/characteristic
//! functions and polynomials in shifted or differenced copies of a function,
//! all in exact rational arithmetic on the `log_p` scale. The [`check`]
//! module turns the difference-equation estimates (Clunie, Malmquist-type,
//! Mokhon'ko-type, and the difference logarithmic-derivative lemmas) into
//! per-radius verdicts over seeded random instances.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
// Errors carry exact rationals so messages can quote the offending values.
#![allow(clippy::result_large_err)]

extern crate alloc;

pub mod algebra;
pub mod check;
pub mod error;
pub mod nevanlinna;
pub mod newton;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use nevanlinna::{CharacteristicRow, DecayTable, Ladder, MaxTerm};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use scalar::{LogRadius, LogValue, Prime, Rational, Scalar};
pub use series::{Entire, TruncatedSeries};
