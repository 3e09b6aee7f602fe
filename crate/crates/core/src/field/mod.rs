// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic in rational function fields `k(t1, ..., tm)` with
//! `k = Q` or `k = GF(2)`, together with their derivations.

mod coeff;
mod derivation;
pub mod gcd;
mod parse;
mod poly;
pub mod random;
mod ratfunc;

pub use coeff::Coefficient;
pub use derivation::{derivations_independent, Derivation};
pub use parse::parse_ratfunc;
pub use poly::{Monomial, MultiPoly};
pub use ratfunc::RatFunc;
