// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use num_traits::{One, Zero};

use super::coeff::Coefficient;
use super::poly::MultiPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// A derivation `f -> sum_i a_i * df/dt_i` of the rational function field in
/// `m` variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Derivation<C> {
    coeffs: Vec<RatFunc<C>>,
}

impl<C: Coefficient> Derivation<C> {
    /// Builds the derivation with the given coefficient vector; its length is
    /// the number of variables of the field.
    pub fn new(coeffs: Vec<RatFunc<C>>) -> Result<Self> {
        let m = coeffs.len();
        if m == 0 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: 0,
            });
        }
        if C::characteristic() == 2 && m > 1 {
            return Err(Error::UnsupportedField(format!(
                "{} supports a single variable, got {m}",
                C::FIELD_NAME
            )));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.span() > m) {
            return Err(Error::ArityMismatch {
                expected: m,
                found: bad.span(),
            });
        }
        Ok(Derivation { coeffs })
    }

    /// The formal partial `d/dt{i+1}` on a field with `nvars` variables.
    pub fn partial(i: usize, nvars: usize) -> Result<Self> {
        if i >= nvars {
            return Err(Error::ArityMismatch {
                expected: nvars,
                found: i + 1,
            });
        }
        let coeffs = (0..nvars)
            .map(|j| {
                if j == i {
                    RatFunc::one()
                } else {
                    RatFunc::zero()
                }
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[RatFunc<C>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `f * self`.
    pub fn scaled(&self, f: &RatFunc<C>) -> Result<Self> {
        Self::new(self.coeffs.iter().map(|c| c * f).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        Ok(())
    }

    fn apply_poly(&self, p: &MultiPoly<C>) -> RatFunc<C> {
        let mut acc = RatFunc::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = p.partial(i);
            if d.is_zero() {
                continue;
            }
            acc = acc + a * &RatFunc::from_poly(d);
        }
        acc
    }

    fn apply_poly_polynomial(&self, p: &MultiPoly<C>) -> MultiPoly<C> {
        let mut acc = MultiPoly::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = p.partial(i);
            if !d.is_zero() {
                acc = acc + a.numer() * &d;
            }
        }
        acc
    }

    /// Applies the derivation through the quotient rule.
    pub fn apply(&self, f: &RatFunc<C>) -> Result<RatFunc<C>> {
        if f.span() > self.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: f.span(),
            });
        }
        let (n, d) = (f.numer(), f.denom());
        if self.coeffs.iter().all(|c| c.is_polynomial()) {
            let dn = self.apply_poly_polynomial(n);
            if d.is_one() {
                return Ok(RatFunc::from_poly(dn));
            }
            let dd = self.apply_poly_polynomial(d);
            let num = &(&dn * d) - &(n * &dd);
            return RatFunc::new(num, d * d);
        }
        let dn = self.apply_poly(n);
        if d.is_one() {
            return Ok(dn);
        }
        let dd = self.apply_poly(d);
        let n = RatFunc::from_poly(n.clone());
        let d = RatFunc::from_poly(d.clone());
        let num = &(&dn * &d) - &(&n * &dd);
        num.try_div(&(&d * &d))
    }
}

/// Whether the coefficient vectors of two derivations are linearly
/// independent over the field, i.e. some 2x2 minor is nonzero.
pub fn derivations_independent<C: Coefficient>(d1: &Derivation<C>, d2: &Derivation<C>) -> bool {
    let m = d1.nvars().max(d2.nvars());
    let zero = RatFunc::zero();
    let a = |i: usize| d1.coeffs.get(i).unwrap_or(&zero);
    let b = |i: usize| d2.coeffs.get(i).unwrap_or(&zero);
    for i in 0..m {
        for j in (i + 1)..m {
            let minor = &(a(i) * b(j)) - &(a(j) * b(i));
            if !minor.is_zero() {
                return true;
            }
        }
    }
    false
}

impl<C: Coefficient> fmt::Display for Derivation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*d/dt{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
