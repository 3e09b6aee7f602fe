// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::gcd;
use super::poly::MultiPoly;
use crate::scalar::{Field, Gf2};

/// A coefficient field for polynomials and rational functions.
///
/// The GCD hook lets each field pick its own algorithm: a modular method
/// over the rationals, a plain recursive one in characteristic two.
pub trait Coefficient: Field + Eq + Hash + fmt::Display + 'static {
    const FIELD_NAME: &'static str;

    fn characteristic() -> u64;

    /// Image of an integer under the canonical ring map.
    fn from_i64(v: i64) -> Self;

    fn is_negative(&self) -> bool {
        false
    }

    /// Greatest common divisor `g` (leading coefficient 1) together with the
    /// cofactors `a / g` and `b / g`.
    fn poly_gcd_cofactors(
        a: &MultiPoly<Self>,
        b: &MultiPoly<Self>,
    ) -> (MultiPoly<Self>, MultiPoly<Self>, MultiPoly<Self>);

    fn poly_gcd(a: &MultiPoly<Self>, b: &MultiPoly<Self>) -> MultiPoly<Self> {
        Self::poly_gcd_cofactors(a, b).0
    }

    /// Parses an unsigned integer literal appearing in a textual expression.
    fn from_literal(digits: &str) -> Option<Self>;

    /// Product of two polynomials with at least two terms each.
    fn poly_mul(a: &MultiPoly<Self>, b: &MultiPoly<Self>) -> MultiPoly<Self> {
        a.mul_generic(b)
    }
}

impl Coefficient for BigRational {
    const FIELD_NAME: &'static str = "Q";

    fn characteristic() -> u64 {
        0
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn poly_gcd_cofactors(
        a: &MultiPoly<Self>,
        b: &MultiPoly<Self>,
    ) -> (MultiPoly<Self>, MultiPoly<Self>, MultiPoly<Self>) {
        gcd::gcd_rational(a, b)
    }

    fn poly_mul(a: &MultiPoly<Self>, b: &MultiPoly<Self>) -> MultiPoly<Self> {
        super::poly::mul_rational(a, b)
    }

    fn from_literal(digits: &str) -> Option<Self> {
        digits.parse::<BigInt>().ok().map(BigRational::from_integer)
    }
}

impl Coefficient for Gf2 {
    const FIELD_NAME: &'static str = "GF2";

    fn characteristic() -> u64 {
        2
    }

    fn from_i64(v: i64) -> Self {
        Gf2(v.rem_euclid(2) == 1)
    }

    fn poly_gcd_cofactors(
        a: &MultiPoly<Self>,
        b: &MultiPoly<Self>,
    ) -> (MultiPoly<Self>, MultiPoly<Self>, MultiPoly<Self>) {
        gcd::with_cofactors(a, b, gcd::gcd_recursive(a, b))
    }

    fn from_literal(digits: &str) -> Option<Self> {
        let n: BigInt = digits.parse().ok()?;
        let two = BigInt::from(2);
        Some(Gf2(!(n % two).is_zero()))
    }
}

/// Writes `c` as a term coefficient; returns whether anything was written.
pub(crate) fn write_coeff<C: Coefficient>(
    f: &mut fmt::Formatter<'_>,
    c: &C,
    constant_term: bool,
) -> Result<bool, fmt::Error> {
    let abs_one = c.is_one() || (-c.clone()).is_one();
    if abs_one && !constant_term {
        return Ok(false);
    }
    if c.is_negative() {
        write!(f, "{}", -c.clone())?;
    } else {
        write!(f, "{}", c)?;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(Gf2::from_literal("3"), Some(Gf2::ONE));
        assert_eq!(Gf2::from_literal("10"), Some(Gf2::ZERO));
        assert_eq!(
            BigRational::from_literal("12"),
            Some(BigRational::from_i64(12))
        );
        assert_eq!(Gf2::from_i64(-1), Gf2::ONE);
    }
}
