// SPDX-License-Identifier: Apache-2.0

//! Exact verification of derivation cocycles, the central extensions they
//! induce on `SL2` over rational function fields, and the associated
//! linearizations.

pub mod char2;
pub mod cohomology;
pub mod error;
pub mod extension;
pub mod field;
pub mod groups;
pub mod linalg;
pub mod linearization;
pub mod rng;
pub mod scalar;

pub use error::{Error, Result};
pub use field::{Coefficient, Derivation, MultiPoly, RatFunc};
pub use groups::{GroupElement, Representation};
pub use linalg::{FlagSpec, Matrix};
pub use scalar::{Field, Gf2};

/// Exact rationals.
pub type Rat = num_rational::BigRational;
/// `Q(t1, ..., tm)`.
pub type RatFuncQ = RatFunc<Rat>;
/// `GF(2)(t)`.
pub type RatFuncF2 = RatFunc<Gf2>;
pub type DerivationQ = Derivation<Rat>;
pub type DerivationF2 = Derivation<Gf2>;
pub type MatrixQ = Matrix<RatFuncQ>;
pub type MatrixF2 = Matrix<RatFuncF2>;
pub type GroupElementQ = GroupElement<Rat>;
