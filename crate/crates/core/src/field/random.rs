// SPDX-License-Identifier: Apache-2.0

//! Seeded generators for random polynomials and rational functions.

use num_traits::Zero;
use rand::Rng;

use super::coeff::Coefficient;
use super::poly::{Monomial, MultiPoly};
use super::ratfunc::RatFunc;

/// Shape limits for random generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomShape {
    pub nvars: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    /// Integer coefficients are drawn from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
}

impl RandomShape {
    pub fn new(nvars: usize, max_degree: u32, max_terms: usize) -> Self {
        RandomShape {
            nvars,
            max_degree,
            max_terms,
            coeff_bound: 5,
        }
    }
}

fn random_monomial<R: Rng + ?Sized>(rng: &mut R, shape: &RandomShape) -> Monomial {
    let degree = rng.gen_range(0..=shape.max_degree);
    let mut exps = vec![0u32; shape.nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..shape.nvars)] += 1;
    }
    Monomial::from_exponents(exps)
}

fn random_coeff<C: Coefficient, R: Rng + ?Sized>(rng: &mut R, bound: i64) -> C {
    loop {
        let c = C::from_i64(rng.gen_range(-bound..=bound));
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random polynomial, possibly zero.
pub fn random_poly<C: Coefficient, R: Rng + ?Sized>(
    rng: &mut R,
    shape: &RandomShape,
) -> MultiPoly<C> {
    let nterms = rng.gen_range(1..=shape.max_terms);
    MultiPoly::from_terms((0..nterms).map(|_| {
        (
            random_monomial(rng, shape),
            random_coeff(rng, shape.coeff_bound),
        )
    }))
}

pub fn random_nonzero_poly<C: Coefficient, R: Rng + ?Sized>(
    rng: &mut R,
    shape: &RandomShape,
) -> MultiPoly<C> {
    loop {
        let p = random_poly(rng, shape);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random rational function whose numerator and denominator respect
/// `shape`; the denominator is 1 about half of the time.
pub fn random_ratfunc<C: Coefficient, R: Rng + ?Sized>(
    rng: &mut R,
    shape: &RandomShape,
) -> RatFunc<C> {
    let num = random_poly(rng, shape);
    if rng.gen_bool(0.5) {
        return RatFunc::from_poly(num);
    }
    let den = random_nonzero_poly(rng, shape);
    RatFunc::new(num, den).expect("nonzero denominator")
}

pub fn random_nonzero_ratfunc<C: Coefficient, R: Rng + ?Sized>(
    rng: &mut R,
    shape: &RandomShape,
) -> RatFunc<C> {
    loop {
        let f = random_ratfunc(rng, shape);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random non-constant rational function.
pub fn random_nonconstant_ratfunc<C: Coefficient, R: Rng + ?Sized>(
    rng: &mut R,
    shape: &RandomShape,
) -> RatFunc<C> {
    loop {
        let f = random_ratfunc(rng, shape);
        if f.as_constant().is_none() {
            return f;
        }
    }
}
