// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::coeff::Coefficient;
use super::poly::MultiPoly;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// A rational function `num / den` in canonical form.
///
/// Numerator and denominator are coprime and the denominator's leading
/// coefficient (graded lex) is 1, so equal values have identical
/// representations. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<C> {
    num: MultiPoly<C>,
    den: MultiPoly<C>,
}

impl<C: Coefficient> RatFunc<C> {
    pub fn new(num: MultiPoly<C>, den: MultiPoly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MultiPoly<C>, den: MultiPoly<C>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let (_, n, d) = C::poly_gcd_cofactors(&num, &den);
        Self::normalize_lc(n, d)
    }

    /// Makes the denominator's leading coefficient 1; inputs must be coprime.
    fn normalize_lc(num: MultiPoly<C>, den: MultiPoly<C>) -> Self {
        let lc = den.leading_coefficient();
        if lc.is_one() {
            return RatFunc { num, den };
        }
        let inv = lc.inv().expect("nonzero denominator");
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: MultiPoly<C>) -> Self {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    /// The variable `t{i+1}` (zero-based index).
    pub fn var(i: usize) -> Self {
        Self::from_poly(MultiPoly::var(i))
    }

    pub fn numer(&self) -> &MultiPoly<C> {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly<C> {
        &self.den
    }

    /// One past the largest variable index occurring in the value.
    pub fn span(&self) -> usize {
        self.num.span().max(self.den.span())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<C> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_lc(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_ref(&rhs.try_inv()?))
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Formal partial derivative with respect to `t{var+1}`.
    pub fn partial(&self, var: usize) -> Self {
        if self.is_polynomial() {
            return Self::from_poly(self.num.partial(var));
        }
        let dn = self.num.partial(var);
        let dd = self.den.partial(var);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Self::reduce(num, &self.den * &self.den)
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let rhs_num = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.is_zero() {
            return RatFunc {
                num: rhs_num,
                den: rhs.den.clone(),
            };
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Self::from_poly(&self.num + &rhs_num);
            }
            return Self::reduce(&self.num + &rhs_num, self.den.clone());
        }
        // with one side a polynomial the sum is already in lowest terms
        if self.den.is_one() {
            let num = &(&self.num * &rhs.den) + &rhs_num;
            return RatFunc {
                num,
                den: rhs.den.clone(),
            };
        }
        if rhs.den.is_one() {
            let num = &self.num + &(&rhs_num * &self.den);
            return RatFunc {
                num,
                den: self.den.clone(),
            };
        }
        let (g, sd, rd) = C::poly_gcd_cofactors(&self.den, &rhs.den);
        let num = &(&self.num * &rd) + &(&rhs_num * &sd);
        if g.is_one() {
            return RatFunc {
                num,
                den: &self.den * &rhs.den,
            };
        }
        if num.is_zero() {
            return Self::zero();
        }
        // only factors of g can cancel
        let (_, num, g_rest) = C::poly_gcd_cofactors(&num, &g);
        let den = &(&sd * &rd) * &g_rest;
        Self::normalize_lc(num, den)
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, false)
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, true)
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let Some(c) = rhs.as_constant() {
            return RatFunc {
                num: self.num.scale(&c),
                den: self.den.clone(),
            };
        }
        if let Some(c) = self.as_constant() {
            return RatFunc {
                num: rhs.num.scale(&c),
                den: rhs.den.clone(),
            };
        }
        let (sn, rd) = if rhs.den.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            let (_, sn, rd) = C::poly_gcd_cofactors(&self.num, &rhs.den);
            (sn, rd)
        };
        let (rn, sd) = if self.den.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            let (_, rn, sd) = C::poly_gcd_cofactors(&rhs.num, &self.den);
            (rn, sd)
        };
        Self::normalize_lc(&sn * &rn, &sd * &rd)
    }
}

impl<C: Coefficient> Zero for RatFunc<C> {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: Coefficient> One for RatFunc<C> {
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl<C: Coefficient> Field for RatFunc<C> {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        self.try_div(rhs).ok()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, false)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, true)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        RatFunc::mul_ref(self, rhs)
    }
}

impl<C: Coefficient> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<C: Coefficient> $tr<&RatFunc<C>> for &RatFunc<C> {
            type Output = RatFunc<C>;
            fn $method(self, rhs: &RatFunc<C>) -> RatFunc<C> {
                self.$inner(rhs)
            }
        }
        impl<C: Coefficient> $tr for RatFunc<C> {
            type Output = RatFunc<C>;
            fn $method(self, rhs: RatFunc<C>) -> RatFunc<C> {
                self.$inner(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&RatFunc<C>> for RatFunc<C> {
            type Output = RatFunc<C>;
            fn $method(self, rhs: &RatFunc<C>) -> RatFunc<C> {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

/// Panics on a zero divisor; use [`RatFunc::try_div`] to handle it.
impl<C: Coefficient> Div for RatFunc<C> {
    type Output = RatFunc<C>;
    fn div(self, rhs: RatFunc<C>) -> RatFunc<C> {
        self.try_div(&rhs)
            .expect("division by the zero rational function")
    }
}

impl<C: Coefficient> Div<&RatFunc<C>> for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn div(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        self.try_div(rhs)
            .expect("division by the zero rational function")
    }
}

impl<C: Coefficient> Neg for RatFunc<C> {
    type Output = RatFunc<C>;
    fn neg(self) -> RatFunc<C> {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<C: Coefficient> Neg for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn neg(self) -> RatFunc<C> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf2;
    use num_rational::BigRational;

    type R = RatFunc<BigRational>;

    fn t(i: usize) -> R {
        R::var(i)
    }

    fn k(n: i64) -> R {
        R::from_i64(n)
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = t(0).try_div(&t(1)).unwrap();
        let b = t(1).try_div(&t(0)).unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn additive_inverse() {
        assert!((t(0) + (-t(0))).is_zero());
        assert_eq!(t(0) - t(0), R::zero());
    }

    #[test]
    fn difference_of_squares_quotient() {
        let num = &(&t(0) * &t(0)) - &(&t(1) * &t(1));
        let den = &t(0) - &t(1);
        let q = num.try_div(&den).unwrap();
        // oracle: expand (t1 + t2)(t1 - t2)
        let expected = &t(0) + &t(1);
        assert_eq!(&expected * &den, num);
        assert_eq!(q, expected);
        assert!(q.is_polynomial());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(t(0).try_div(&R::zero()), Err(Error::DivisionByZero));
        assert_eq!(R::zero().try_inv(), Err(Error::DivisionByZero));
        assert_eq!(
            R::new(MultiPoly::one(), MultiPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn canonical_denominator() {
        // (2 t1) / (4 t1 t2) = (1/2) / t2
        let f = R::new(
            MultiPoly::constant(BigRational::from_i64(2)) * MultiPoly::var(0),
            MultiPoly::constant(BigRational::from_i64(4)) * MultiPoly::var(0) * MultiPoly::var(1),
        )
        .unwrap();
        assert!(f.denom().leading_coefficient().is_one());
        assert_eq!(f.to_string(), "(1/2)/(t2)");
        let g = k(1).try_div(&(k(2) * t(1))).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn henrici_sum_cancels_common_factor() {
        // 1/(t1 (t1+1)) - 1/(t1 (t1+2)) = 1 / (t1 (t1+1)(t1+2))
        let a = k(1).try_div(&(t(0) * (t(0) + k(1)))).unwrap();
        let b = k(1).try_div(&(t(0) * (t(0) + k(2)))).unwrap();
        let d = &a - &b;
        let expected = k(1)
            .try_div(&(t(0) * (t(0) + k(1)) * (t(0) + k(2))))
            .unwrap();
        assert_eq!(d, expected);
        // 1/t1 + (t1-1)/t1 = 1
        let c = k(1).try_div(&t(0)).unwrap() + (t(0) - k(1)).try_div(&t(0)).unwrap();
        assert!(c.is_one());
    }

    #[test]
    fn display_format() {
        let f = k(2) * t(0) * t(1);
        assert_eq!(f.to_string(), "(2*t1*t2)/(1)");
        let g = t(0).powi(3).unwrap();
        assert_eq!(g.to_string(), "(t1^3)/(1)");
        let h = RatFunc::<Gf2>::var(0).powi(-1).unwrap();
        assert_eq!(h.to_string(), "(1)/(t1)");
    }

    #[test]
    fn quotient_rule() {
        let f = k(1).try_div(&t(0)).unwrap();
        let expected = -(k(1).try_div(&(t(0) * t(0))).unwrap());
        assert_eq!(f.partial(0), expected);
    }
}
