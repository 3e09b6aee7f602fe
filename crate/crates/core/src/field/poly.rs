// SPDX-License-Identifier: Apache-2.0

//! Sparse multivariate polynomials in canonical form.
//!
//! Terms are kept sorted by decreasing graded-lexicographic order with
//! `t1 > t2 > ... > tm`, and no stored coefficient is zero, so structural
//! equality coincides with equality of polynomials.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::coeff::{write_coeff, Coefficient};

/// Exponent vector of a monomial.
///
/// Trailing zero exponents are never stored, so a monomial does not depend
/// on how many variables the ambient ring has. Ordered graded
/// lexicographically: total degree first, then the exponent of `t1`, then
/// `t2`, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The variable `t{i+1}` (zero-based index).
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// Stored exponents; variables past the end have exponent zero.
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    /// Number of variables the monomial can involve (one past the last used).
    pub fn span(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut out = long.clone();
        for (o, s) in out.iter_mut().zip(short) {
            *o += s;
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = other.0.clone();
        for (o, s) in out.iter_mut().zip(&self.0) {
            *o -= s;
        }
        Monomial::from_exponents(out)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in the variables `t1, t2, ...` over the coefficient field `C`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coefficient> MultiPoly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(c, Monomial::one())
    }

    pub fn monomial(c: C, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: vec![(m, c)],
        }
    }

    /// The variable `t{i+1}` (zero-based index).
    pub fn var(i: usize) -> Self {
        Self::monomial(C::one(), Monomial::var(i))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = v.clone() + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// One past the largest variable index occurring in the polynomial.
    pub fn span(&self) -> usize {
        self.terms.iter().map(|t| t.0.span()).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The constant coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> C {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| t.0.exponent(var))
            .max()
            .unwrap_or(0)
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, lc)) if lc.is_one() => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // multiplying by a monomial preserves the term order
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone() * c))
                .collect(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let take_b = |c: &C| if negate_other { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), take_b(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        a[i].1.clone() - &b[j].1
                    } else {
                        a[i].1.clone() + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), take_b(c))));
        MultiPoly { terms: out }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m, c);
        }
        C::poly_mul(self, other)
    }

    /// Schoolbook product; the default behind [`Coefficient::poly_mul`].
    pub(crate) fn mul_generic(&self, other: &Self) -> Self {
        let mut acc: HashMap<Monomial, C> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let p = ca.mul_ref(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add_ref(&p),
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `t{var+1}`.
    pub fn partial(&self, var: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(var);
            if e == 0 {
                return None;
            }
            let coeff = c.clone() * &C::from_i64(i64::from(e));
            if coeff.is_zero() {
                return None;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            Some((Monomial::from_exponents(exps), coeff))
        });
        // lowering one exponent can reorder terms
        Self::from_terms(terms)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.terms.len() == 1 {
            let (dm, dc) = &divisor.terms[0];
            let inv = dc.inv()?;
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                terms.push((dm.quotient_of(m), c.clone() * &inv));
            }
            return Some(MultiPoly { terms });
        }
        let (lm, lc) = &divisor.terms[0];
        let lc_inv = lc.inv()?;
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((rm, rc)) = rem.pop_last() {
            if !lm.divides(&rm) {
                return None;
            }
            let qm = lm.quotient_of(&rm);
            let qc = rc.mul_ref(&lc_inv);
            for (dm, dc) in &divisor.terms[1..] {
                let p = dc.mul_ref(&qc);
                match rem.entry(dm.mul(&qm)) {
                    Entry::Occupied(mut e) => {
                        let v = e.get().sub_ref(&p);
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    Entry::Vacant(e) => {
                        e.insert(-p);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        // quotient terms were produced in decreasing order
        Some(MultiPoly { terms: quotient })
    }

    /// The largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(),
            Some((m, _)) => it.fold(m.clone(), |acc, (m, _)| acc.gcd(m)),
        }
    }

    /// Evaluates variable `var` at a constant.
    pub fn substitute_constant(&self, var: usize, value: &C) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exponent(var);
            let mut exps = m.0.clone();
            if e > 0 {
                exps[var] = 0;
            }
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff = coeff * value;
            }
            (Monomial::from_exponents(exps), coeff)
        });
        Self::from_terms(terms)
    }
}

/// Product over the rationals computed on integer numerators, so that
/// accumulation never normalizes fractions.
pub(crate) fn mul_rational(
    a: &MultiPoly<BigRational>,
    b: &MultiPoly<BigRational>,
) -> MultiPoly<BigRational> {
    fn clear(p: &MultiPoly<BigRational>) -> (Vec<(&Monomial, BigInt)>, BigInt) {
        let lcm = p
            .terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| (m, c.numer() * (&lcm / c.denom())))
            .collect();
        (terms, lcm)
    }
    let (ai, da) = clear(a);
    let (bi, db) = clear(b);
    let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(ai.len() * bi.len());
    for (ma, ca) in &ai {
        for (mb, cb) in &bi {
            let p = ca * cb;
            match acc.entry(ma.mul(mb)) {
                std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += p,
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(p);
                }
            }
        }
    }
    let den = da * db;
    let mut terms: Vec<_> = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (m, BigRational::new(c, den.clone())))
        .collect();
    terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
    MultiPoly { terms }
}

impl<C: Coefficient> Zero for MultiPoly<C> {
    fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for MultiPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }
}

impl<C: Coefficient> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let constant = m.is_one();
            let mut wrote = write_coeff(f, c, constant)?;
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "t{}", v + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<C: Coefficient> $tr<&MultiPoly<C>> for &MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
                self.$inner(rhs)
            }
        }
        impl<C: Coefficient> $tr for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                self.$inner(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<C: Coefficient> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Coefficient> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf2;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    fn t(i: usize) -> P {
        P::var(i)
    }

    #[test]
    fn deglex_order() {
        let a = Monomial::from_exponents(vec![1, 0]);
        let b = Monomial::from_exponents(vec![0, 1]);
        let c = Monomial::from_exponents(vec![0, 2]);
        assert!(a > b);
        assert!(c > a);
        assert_eq!(a, Monomial::var(0));
        assert!(Monomial::from_exponents(vec![2]) > Monomial::from_exponents(vec![1, 1]));
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&t(0) * &t(0)) - &(&t(1) * &t(1));
        assert_eq!(p.to_string(), "t1^2-t2^2");
        let f = &t(0) + &t(1);
        let g = &t(0) - &t(1);
        assert_eq!(&f * &g, p);
        assert_eq!(p.div_exact(&g), Some(f.clone()));
        assert_eq!(p.div_exact(&(&t(0) + &P::one())), None);
        let s = P::constant(q(2)) * t(0) * t(1);
        assert_eq!(s.to_string(), "2*t1*t2");
        assert_eq!((-P::one()).to_string(), "-1");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(p.span(), 2);
    }

    #[test]
    fn partials() {
        let p = t(0).pow(2) * t(1);
        assert_eq!(p.partial(0), P::constant(q(2)) * t(0) * t(1));
        assert!(t(0).partial(1).is_zero());
        let f = MultiPoly::<Gf2>::var(0).pow(2);
        assert!(f.partial(0).is_zero());
    }

    #[test]
    fn cancellation_gives_zero() {
        let z = &t(0) + &(-t(0));
        assert!(z.is_zero());
        assert_eq!(z, P::zero());
        let w = t(1) - t(1) + P::one();
        assert_eq!(w, P::one());
        assert_eq!(w.span(), 0);
    }

    #[test]
    fn monomial_content_and_substitution() {
        let p = t(0).pow(2) * t(1) + t(0) * t(1).pow(3);
        assert_eq!(p.monomial_content(), Monomial::from_exponents(vec![1, 1]));
        let s = p.substitute_constant(1, &q(2));
        assert_eq!(
            s,
            P::constant(q(2)) * t(0).pow(2) + P::constant(q(8)) * t(0)
        );
    }
}
