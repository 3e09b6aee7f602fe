// SPDX-License-Identifier: Apache-2.0

//! Scalar field abstraction shared by the polynomial, rational-function and
//! matrix layers.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative field with exact equality.
///
/// The by-reference operator bounds let generic code avoid cloning the
/// right-hand operand.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Send
    + Sync
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * &r)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2(pub bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);
}

impl fmt::Debug for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2::ZERO
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2::ONE
    }
}

// Addition in GF(2) is xor and multiplication is and.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Add<&'a Gf2> for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: &'a Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Sub<&'a Gf2> for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: &'a Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Mul<&'a Gf2> for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: &'a Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Div for Gf2 {
    type Output = Gf2;
    fn div(self, rhs: Gf2) -> Gf2 {
        assert!(rhs.0, "division by zero in GF(2)");
        self
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf2 {
    fn add_assign(&mut self, rhs: Gf2) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl SubAssign for Gf2 {
    fn sub_assign(&mut self, rhs: Gf2) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl MulAssign for Gf2 {
    fn mul_assign(&mut self, rhs: Gf2) {
        self.0 &= rhs.0;
    }
}

impl Field for Gf2 {
    fn inv(&self) -> Option<Self> {
        if self.0 {
            Some(*self)
        } else {
            None
        }
    }
}
