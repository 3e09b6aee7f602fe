// SPDX-License-Identifier: Apache-2.0

//! Multivariate polynomial GCD.
//!
//! Over the rationals the GCD is computed with Brown's dense modular
//! algorithm: images modulo word-sized primes are obtained by evaluation and
//! Newton interpolation down to univariate Euclid, lifted by Chinese
//! remaindering and confirmed by exact trial division. A plain recursive
//! primitive-remainder-sequence GCD serves fields of positive characteristic
//! and doubles as an independent oracle in tests.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::coeff::Coefficient;
use super::poly::{Monomial, MultiPoly};

/// Attaches cofactors to a known GCD.
pub fn with_cofactors<C: Coefficient>(
    a: &MultiPoly<C>,
    b: &MultiPoly<C>,
    g: MultiPoly<C>,
) -> (MultiPoly<C>, MultiPoly<C>, MultiPoly<C>) {
    let abar = a.div_exact(&g).expect("gcd divides its first argument");
    let bbar = b.div_exact(&g).expect("gcd divides its second argument");
    (g, abar, bbar)
}

fn trivial_cases<C: Coefficient>(
    a: &MultiPoly<C>,
    b: &MultiPoly<C>,
) -> Option<(MultiPoly<C>, MultiPoly<C>, MultiPoly<C>)> {
    if a.is_zero() && b.is_zero() {
        return Some((MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero()));
    }
    if a.is_zero() {
        let g = b.monic();
        let lc = b.leading_coefficient();
        return Some((g, MultiPoly::zero(), MultiPoly::constant(lc)));
    }
    if b.is_zero() {
        let g = a.monic();
        let lc = a.leading_coefficient();
        return Some((g, MultiPoly::constant(lc), MultiPoly::zero()));
    }
    if a.is_constant() || b.is_constant() {
        return Some((MultiPoly::one(), a.clone(), b.clone()));
    }
    None
}

/// Splits off the monomial content: returns `(x^m, p / x^m)`.
fn strip_monomial<C: Coefficient>(p: &MultiPoly<C>) -> (Monomial, MultiPoly<C>) {
    let m = p.monomial_content();
    if m.is_one() {
        return (m, p.clone());
    }
    let q = p
        .div_exact(&MultiPoly::monomial(C::one(), m.clone()))
        .expect("monomial content divides");
    (m, q)
}

/// GCD with cofactors over the rationals.
pub fn gcd_rational(
    a: &MultiPoly<BigRational>,
    b: &MultiPoly<BigRational>,
) -> (
    MultiPoly<BigRational>,
    MultiPoly<BigRational>,
    MultiPoly<BigRational>,
) {
    if let Some(r) = trivial_cases(a, b) {
        return r;
    }
    let (ma, a1) = strip_monomial(a);
    let (mb, b1) = strip_monomial(b);
    let mg = ma.gcd(&mb);
    let mono = |m: Monomial| MultiPoly::monomial(BigRational::one(), m);
    let (core, a2, b2) = if a1.is_constant() || b1.is_constant() {
        (MultiPoly::one(), a1, b1)
    } else if a1.monic() == b1.monic() {
        let la = MultiPoly::constant(a1.leading_coefficient());
        let lb = MultiPoly::constant(b1.leading_coefficient());
        (a1.monic(), la, lb)
    } else {
        modular_gcd(&a1, &b1)
    };
    let g = core.mul_monomial(&mg, &BigRational::one());
    // a / g = x^(ma - mg) * (a1 / core)
    let abar = a2 * mono(mg.quotient_of(&ma));
    let bbar = b2 * mono(mg.quotient_of(&mb));
    (g, abar, bbar)
}

// ---------------------------------------------------------------------------
// Conversion between the deglex rational representation and flat integer
// polynomials in lex order over the variables actually used.

type IntTerms = Vec<(Vec<u32>, BigInt)>;

struct VarMap {
    used: Vec<usize>,
    nvars: usize,
}

impl VarMap {
    fn new(polys: &[&MultiPoly<BigRational>]) -> Self {
        let nvars = polys.iter().map(|p| p.span()).max().unwrap_or(0);
        let used = (0..nvars)
            .filter(|&v| polys.iter().any(|p| p.degree_in(v) > 0))
            .collect();
        VarMap { used, nvars }
    }

    fn compress(&self, m: &Monomial) -> Vec<u32> {
        self.used.iter().map(|&v| m.exponent(v)).collect()
    }

    fn expand(&self, e: &[u32]) -> Monomial {
        let mut out = vec![0; self.nvars];
        for (k, &v) in self.used.iter().enumerate() {
            out[v] = e[k];
        }
        Monomial::from_exponents(out)
    }
}

/// Clears denominators and removes the integer content: returns `(P, s)`
/// with `p = s * P` and `P` primitive.
fn to_primitive_integer(p: &MultiPoly<BigRational>, map: &VarMap) -> (IntTerms, BigRational) {
    let lcm = p
        .terms()
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut terms: IntTerms = p
        .terms()
        .iter()
        .map(|(m, c)| (map.compress(m), c.numer() * (&lcm / c.denom())))
        .collect();
    let content = terms.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    for t in terms.iter_mut() {
        t.1 = &t.1 / &content;
    }
    terms.sort_by(|x, y| y.0.cmp(&x.0));
    (terms, BigRational::new(content, lcm))
}

/// Exact division in `Z[x]` of lex-sorted integer polynomials.
fn int_div_exact(a: &IntTerms, b: &IntTerms) -> Option<IntTerms> {
    let (lm, lc) = &b[0];
    let mut rem: BTreeMap<Vec<u32>, BigInt> = a.iter().cloned().collect();
    let mut quotient: IntTerms = Vec::new();
    while let Some((rm, rc)) = rem.pop_last() {
        if rm.iter().zip(lm).any(|(x, y)| x < y) {
            return None;
        }
        let (qc, r) = rc.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        let qm: Vec<u32> = rm.iter().zip(lm).map(|(x, y)| x - y).collect();
        for (bm, bc) in &b[1..] {
            let m: Vec<u32> = bm.iter().zip(&qm).map(|(x, y)| x + y).collect();
            let prod = &qc * bc;
            match rem.entry(m) {
                Entry::Occupied(mut e) => {
                    *e.get_mut() -= prod;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                Entry::Vacant(e) => {
                    e.insert(-prod);
                }
            }
        }
        quotient.push((qm, qc));
    }
    Some(quotient)
}

type Triple = (
    MultiPoly<BigRational>,
    MultiPoly<BigRational>,
    MultiPoly<BigRational>,
);

/// Monic GCD of two nonconstant polynomials, with cofactors.
fn modular_gcd(a: &MultiPoly<BigRational>, b: &MultiPoly<BigRational>) -> Triple {
    let map = VarMap::new(&[a, b]);
    let (ai, sa) = to_primitive_integer(a, &map);
    let (bi, sb) = to_primitive_integer(b, &map);
    let k = map.used.len();

    let lca = &ai[0].1;
    let lcb = &bi[0].1;
    let gamma = lca.gcd(lcb);

    let mut image: Option<IntTerms> = None;
    let mut modulus = BigInt::one();
    let mut lead: Option<Vec<u32>> = None;

    for &p in primes() {
        let pb = BigInt::from(p);
        if (lca % &pb).is_zero() || (lcb % &pb).is_zero() {
            continue;
        }
        let ap = Flat::from_int(k, &ai, p);
        let bp = Flat::from_int(k, &bi, p);
        let gp = pgcd(&ap, &bp, p);
        let lm = gp.terms[0].0.clone();
        if lm.iter().all(|&e| e == 0) {
            return (MultiPoly::one(), a.clone(), b.clone());
        }
        let gamma_p = mod_big(&gamma, p);
        let gp = gp.scale(gamma_p, p);
        let cmp = lead.as_ref().map(|cur| lm.cmp(cur));
        match cmp {
            Some(Ordering::Greater) => continue,
            Some(Ordering::Equal) => {
                let prev = image.take().expect("image present");
                let next = crt_combine(&prev, &modulus, &gp, p);
                modulus *= &pb;
                let stable = next == prev;
                image = Some(next);
                if stable {
                    let cand = primitive_int(image.as_ref().expect("image"));
                    if let (Some(qa), Some(qb)) =
                        (int_div_exact(&ai, &cand), int_div_exact(&bi, &cand))
                    {
                        // a = sa * A and g = G / lc(G), so a / g = sa * lc(G) * (A / G)
                        let g = from_int_terms(&cand, &map);
                        let lc = g.leading_coefficient();
                        let abar = from_int_terms(&qa, &map).scale(&(&sa * &lc));
                        let bbar = from_int_terms(&qb, &map).scale(&(&sb * &lc));
                        return (g.monic(), abar, bbar);
                    }
                }
            }
            _ => {
                image = Some(gp.to_symmetric(p));
                modulus = pb;
                lead = Some(lm);
            }
        }
    }
    unreachable!("prime supply exhausted in modular gcd")
}

fn from_int_terms(t: &IntTerms, map: &VarMap) -> MultiPoly<BigRational> {
    MultiPoly::from_terms(
        t.iter()
            .map(|(e, c)| (map.expand(e), BigRational::from_integer(c.clone()))),
    )
}

fn primitive_int(t: &IntTerms) -> IntTerms {
    let content = t.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    let sign = if t[0].1.is_negative() { -1 } else { 1 };
    let content = content * sign;
    t.iter().map(|(e, c)| (e.clone(), c / &content)).collect()
}

fn mod_big(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits")
}

/// Combines `h mod m` with `g mod p` into the symmetric residue mod `m*p`.
fn crt_combine(h: &IntTerms, m: &BigInt, g: &Flat, p: u64) -> IntTerms {
    let pb = BigInt::from(p);
    let mp = m * &pb;
    let half = &mp >> 1;
    // m^{-1} mod p
    let m_mod_p = mod_big(m, p);
    let m_inv = inv_mod(m_mod_p, p);
    let mut out: IntTerms = Vec::with_capacity(h.len().max(g.terms.len()));
    let (mut i, mut j) = (0, 0);
    let zero = BigInt::zero();
    loop {
        let (exps, u, v) = match (h.get(i), g.terms.get(j)) {
            (None, None) => break,
            (Some(x), None) => {
                i += 1;
                (x.0.clone(), &x.1, 0)
            }
            (None, Some(y)) => {
                j += 1;
                (y.0.clone(), &zero, y.1)
            }
            (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                Ordering::Greater => {
                    i += 1;
                    (x.0.clone(), &x.1, 0)
                }
                Ordering::Less => {
                    j += 1;
                    (y.0.clone(), &zero, y.1)
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (x.0.clone(), &x.1, y.1)
                }
            },
        };
        // x = u + m * ((v - u) * m^{-1} mod p)
        let u_p = mod_big(u, p);
        let diff = (v + p - u_p) % p;
        let k = mulmod(diff, m_inv, p);
        let mut x = u + m * BigInt::from(k);
        x = x.mod_floor(&mp);
        if x > half {
            x -= &mp;
        }
        if !x.is_zero() {
            out.push((exps, x));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Arithmetic modulo a word-sized prime.

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(512);
        let mut n: u64 = (1 << 31) - 1;
        while out.len() < 512 {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // deterministic for n < 3.2e9
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

/// Dense univariate polynomial mod p, lowest degree first, no trailing zeros.
type Uni = Vec<u64>;

fn uni_trim(mut a: Uni) -> Uni {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn uni_deg(a: &Uni) -> usize {
    a.len().saturating_sub(1)
}

fn uni_eval(a: &Uni, x: u64, p: u64) -> u64 {
    a.iter()
        .rev()
        .fold(0, |acc, &c| (mulmod(acc, x, p) + c) % p)
}

fn uni_mul(a: &Uni, b: &Uni, p: u64) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    uni_trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
fn uni_divrem(a: &Uni, b: &Uni, p: u64) -> (Uni, Uni) {
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(*b.last().expect("nonzero divisor"), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = mulmod(r[i + b.len() - 1], lead_inv, p);
        q[i] = c;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + p - mulmod(c, bj, p)) % p;
        }
    }
    (uni_trim(q), uni_trim(r))
}

fn uni_monic(a: Uni, p: u64) -> Uni {
    match a.last() {
        None => a,
        Some(&1) => a,
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.into_iter().map(|c| mulmod(c, inv, p)).collect()
        }
    }
}

fn uni_gcd(a: &Uni, b: &Uni, p: u64) -> Uni {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let (_, r) = uni_divrem(&x, &y, p);
        x = y;
        y = r;
    }
    uni_monic(x, p)
}

/// Sparse polynomial mod p in `k` variables, terms in decreasing lex order.
#[derive(Clone, Debug, PartialEq)]
struct Flat {
    k: usize,
    terms: Vec<(Vec<u32>, u64)>,
}

impl Flat {
    fn from_int(k: usize, t: &IntTerms, p: u64) -> Flat {
        let terms = t
            .iter()
            .filter_map(|(e, c)| {
                let r = mod_big(c, p);
                (r != 0).then(|| (e.clone(), r))
            })
            .collect();
        Flat { k, terms }
    }

    fn from_unsorted(k: usize, mut terms: Vec<(Vec<u32>, u64)>, p: u64) -> Flat {
        terms.sort_by(|x, y| y.0.cmp(&x.0));
        let mut out: Vec<(Vec<u32>, u64)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = (last.1 + c) % p,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Flat { k, terms: out }
    }

    fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|t| t.0.iter().all(|&e| e == 0))
    }

    fn scale(&self, c: u64, p: u64) -> Flat {
        Flat {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), mulmod(*x, c, p)))
                .filter(|t| t.1 != 0)
                .collect(),
        }
    }

    fn monic(&self, p: u64) -> Flat {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, l)) => self.scale(inv_mod(l, p), p),
        }
    }

    fn to_symmetric(&self, p: u64) -> IntTerms {
        let half = p / 2;
        self.terms
            .iter()
            .map(|(e, c)| {
                let v = if *c > half {
                    BigInt::from(*c) - BigInt::from(p)
                } else {
                    BigInt::from(*c)
                };
                (e.clone(), v)
            })
            .collect()
    }

    fn to_uni(&self) -> Uni {
        debug_assert_eq!(self.k, 1);
        let deg = self.terms.first().map(|t| t.0[0] as usize).unwrap_or(0);
        let mut out = vec![0u64; deg + 1];
        for (e, c) in &self.terms {
            out[e[0] as usize] = *c;
        }
        uni_trim(out)
    }

    fn from_uni(u: &Uni) -> Flat {
        let terms = u
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (vec![i as u32], c))
            .collect();
        Flat { k: 1, terms }
    }

    /// Groups terms by their exponents in all but the last variable; each
    /// group's coefficient is a univariate polynomial in the last variable.
    fn groups(&self) -> Vec<(Vec<u32>, Uni)> {
        let k = self.k;
        let mut out: Vec<(Vec<u32>, Uni)> = Vec::new();
        for (e, c) in &self.terms {
            let prefix = &e[..k - 1];
            let d = e[k - 1] as usize;
            match out.last_mut() {
                Some((pre, u)) if pre.as_slice() == prefix => {
                    if u.len() <= d {
                        u.resize(d + 1, 0);
                    }
                    u[d] = *c;
                }
                _ => {
                    let mut u = vec![0u64; d + 1];
                    u[d] = *c;
                    out.push((prefix.to_vec(), u));
                }
            }
        }
        out
    }

    fn from_groups(k: usize, groups: &[(Vec<u32>, Uni)]) -> Flat {
        let mut terms = Vec::new();
        for (prefix, u) in groups {
            for (d, &c) in u.iter().enumerate().rev() {
                if c == 0 {
                    continue;
                }
                let mut e = prefix.clone();
                e.push(d as u32);
                terms.push((e, c));
            }
        }
        Flat { k, terms }
    }

    fn content_last(&self, p: u64) -> Uni {
        let mut g: Uni = Vec::new();
        for (_, u) in self.groups() {
            g = uni_gcd(&g, &u, p);
            if g.len() == 1 {
                break;
            }
        }
        g
    }

    fn div_last(&self, c: &Uni, p: u64) -> Flat {
        if c.len() == 1 && c[0] == 1 {
            return self.clone();
        }
        let groups: Vec<_> = self
            .groups()
            .into_iter()
            .map(|(pre, u)| {
                let (q, r) = uni_divrem(&u, c, p);
                debug_assert!(r.is_empty());
                (pre, q)
            })
            .collect();
        Flat::from_groups(self.k, &groups)
    }

    fn mul_last(&self, c: &Uni, p: u64) -> Flat {
        let groups: Vec<_> = self
            .groups()
            .into_iter()
            .map(|(pre, u)| (pre, uni_mul(&u, c, p)))
            .collect();
        Flat::from_groups(self.k, &groups)
    }

    fn lcoeff_last(&self) -> Uni {
        self.groups()
            .into_iter()
            .next()
            .map(|g| g.1)
            .unwrap_or_default()
    }

    fn degree_last(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.0[self.k - 1] as usize)
            .max()
            .unwrap_or(0)
    }

    fn eval_last(&self, x: u64, p: u64) -> Flat {
        let groups = self.groups();
        let mut terms = Vec::with_capacity(groups.len());
        for (pre, u) in groups {
            let v = uni_eval(&u, x, p);
            if v != 0 {
                terms.push((pre, v));
            }
        }
        // prefixes are already in decreasing lex order
        Flat {
            k: self.k - 1,
            terms,
        }
    }

    /// Appends a zero exponent for a new last variable.
    fn lift(&self) -> Flat {
        Flat {
            k: self.k + 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.push(0);
                    (e, *c)
                })
                .collect(),
        }
    }

    fn sub(&self, other: &Flat, p: u64) -> Flat {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().map(|(e, c)| (e.clone(), (p - c) % p)));
        Flat::from_unsorted(self.k, terms, p)
    }

    fn mul(&self, other: &Flat, p: u64) -> Flat {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                terms.push((e, mulmod(*ca, *cb, p)));
            }
        }
        Flat::from_unsorted(self.k, terms, p)
    }

    /// Exact division test in lex order.
    fn divides(&self, a: &Flat, p: u64) -> bool {
        let Some((lm, lc)) = self.terms.first() else {
            return a.terms.is_empty();
        };
        let lc_inv = inv_mod(*lc, p);
        let mut rem = a.clone();
        while let Some((rm, rc)) = rem.terms.first() {
            if !lm.iter().zip(rm).all(|(x, y)| x <= y) {
                return false;
            }
            let qe: Vec<u32> = rm.iter().zip(lm).map(|(x, y)| x - y).collect();
            let qc = mulmod(*rc, lc_inv, p);
            let q = Flat {
                k: self.k,
                terms: vec![(qe, qc)],
            };
            rem = rem.sub(&self.mul(&q, p), p);
        }
        true
    }
}

/// Monic GCD modulo p of two polynomials in `k` variables.
fn pgcd(a: &Flat, b: &Flat, p: u64) -> Flat {
    let k = a.k;
    if a.terms.is_empty() {
        return b.monic(p);
    }
    if b.terms.is_empty() {
        return a.monic(p);
    }
    if k == 1 {
        return Flat::from_uni(&uni_gcd(&a.to_uni(), &b.to_uni(), p));
    }
    let ca = a.content_last(p);
    let cb = b.content_last(p);
    let c = uni_gcd(&ca, &cb, p);
    let a = a.div_last(&ca, p);
    let b = b.div_last(&cb, p);
    let lift_content = |c: &Uni| {
        let mut one = Flat {
            k,
            terms: vec![(vec![0; k], 1)],
        };
        one = one.mul_last(c, p);
        one.monic(p)
    };
    if a.is_constant() || b.is_constant() {
        return lift_content(&c);
    }
    let lca = a.lcoeff_last();
    let lcb = b.lcoeff_last();
    let g = uni_gcd(&lca, &lcb, p);
    let bound = uni_deg(&g) + a.degree_last().min(b.degree_last());

    let mut interp: Option<Flat> = None;
    let mut q: Uni = vec![1];
    let mut lead: Option<Vec<u32>> = None;
    for beta in 1..p {
        if uni_eval(&lca, beta, p) == 0 || uni_eval(&lcb, beta, p) == 0 {
            continue;
        }
        let ab = a.eval_last(beta, p);
        let bb = b.eval_last(beta, p);
        let img = pgcd(&ab, &bb, p);
        if img.is_constant() {
            return lift_content(&c);
        }
        let lm = img.terms[0].0.clone();
        let img = img.scale(uni_eval(&g, beta, p), p);
        match lead.as_ref().map(|cur| lm.cmp(cur)) {
            Some(Ordering::Greater) => continue,
            Some(Ordering::Equal) => {
                let h = interp.take().expect("interpolant present");
                let next = newton_step(&h, &q, beta, &img, p);
                q = uni_mul(&q, &vec![(p - beta) % p, 1], p);
                let stable = next == h;
                interp = Some(next);
                if stable || uni_deg(&q) > bound {
                    let h = interp.as_ref().expect("interpolant");
                    let cand = h.div_last(&h.content_last(p), p);
                    if cand.divides(&a, p) && cand.divides(&b, p) {
                        return cand.mul_last(&c, p).monic(p);
                    }
                }
            }
            _ => {
                interp = Some(img.lift());
                q = vec![(p - beta) % p, 1];
                lead = Some(lm);
            }
        }
    }
    unreachable!("ran out of evaluation points modulo {p}")
}

/// One Newton interpolation step in the last variable.
fn newton_step(h: &Flat, q: &Uni, beta: u64, value: &Flat, p: u64) -> Flat {
    let at_beta = h.eval_last(beta, p);
    let diff = value.sub(&at_beta, p);
    if diff.terms.is_empty() {
        return h.clone();
    }
    let scale = inv_mod(uni_eval(q, beta, p), p);
    let correction = diff.scale(scale, p).lift().mul_last(q, p);
    let mut terms = h.terms.clone();
    terms.extend(correction.terms);
    Flat::from_unsorted(h.k, terms, p)
}

// ---------------------------------------------------------------------------
// Recursive primitive-PRS GCD over an arbitrary coefficient field.

/// Coefficients of `p` as a polynomial in `var` (index = degree).
fn coefficients_in<C: Coefficient>(p: &MultiPoly<C>, var: usize) -> Vec<MultiPoly<C>> {
    let deg = p.degree_in(var) as usize;
    let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); deg + 1];
    for (m, c) in p.terms() {
        let mut e = m.exponents().to_vec();
        let d = m.exponent(var) as usize;
        if d > 0 {
            e[var] = 0;
        }
        buckets[d].push((Monomial::from_exponents(e), c.clone()));
    }
    buckets.into_iter().map(MultiPoly::from_terms).collect()
}

fn from_coefficients<C: Coefficient>(coeffs: &[MultiPoly<C>], var: usize) -> MultiPoly<C> {
    let mut terms = Vec::new();
    for (d, c) in coeffs.iter().enumerate() {
        for (m, x) in c.terms() {
            let mut e = m.exponents().to_vec();
            if e.len() <= var {
                e.resize(var + 1, 0);
            }
            e[var] += d as u32;
            terms.push((Monomial::from_exponents(e), x.clone()));
        }
    }
    MultiPoly::from_terms(terms)
}

fn trim_coeffs<C: Coefficient>(mut v: Vec<MultiPoly<C>>) -> Vec<MultiPoly<C>> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn content_of<C: Coefficient>(coeffs: &[MultiPoly<C>]) -> MultiPoly<C> {
    let mut it = coeffs.iter().filter(|c| !c.is_zero());
    let mut g = match it.next() {
        Some(c) => c.monic(),
        None => return MultiPoly::zero(),
    };
    for c in it {
        if g.is_one() {
            break;
        }
        g = gcd_recursive(&g, c);
    }
    g
}

fn divide_all<C: Coefficient>(coeffs: &[MultiPoly<C>], d: &MultiPoly<C>) -> Vec<MultiPoly<C>> {
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

/// Pseudo-remainder of `a` by `b` as polynomials in the main variable.
fn pseudo_remainder<C: Coefficient>(a: &[MultiPoly<C>], b: &[MultiPoly<C>]) -> Vec<MultiPoly<C>> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bj) in b.iter().enumerate() {
            let idx = dr - db + j;
            r[idx] = &r[idx] - &(&lr * bj);
        }
        r = trim_coeffs(r);
    }
    r
}

/// GCD over any coefficient field by content/primitive-part recursion.
pub fn gcd_recursive<C: Coefficient>(a: &MultiPoly<C>, b: &MultiPoly<C>) -> MultiPoly<C> {
    if let Some((g, _, _)) = trivial_cases(a, b) {
        return g;
    }
    let n = a.span().max(b.span());
    let var = (0..n)
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
        .expect("nonconstant input");
    let ac = coefficients_in(a, var);
    let bc = coefficients_in(b, var);
    if ac.len() == 1 {
        return gcd_recursive(a, &content_of(&bc));
    }
    if bc.len() == 1 {
        return gcd_recursive(&content_of(&ac), b);
    }
    let ca = content_of(&ac);
    let cb = content_of(&bc);
    let c = gcd_recursive(&ca, &cb);
    let mut x = divide_all(&ac, &ca);
    let mut y = divide_all(&bc, &cb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = pseudo_remainder(&x, &y);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            y = vec![MultiPoly::one()];
            break;
        }
        let cr = content_of(&r);
        x = y;
        y = divide_all(&r, &cr);
    }
    let pp = from_coefficients(&y, var);
    (pp * c).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf2;

    type P = MultiPoly<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    fn t(i: usize) -> P {
        P::var(i)
    }

    fn c(n: i64) -> P {
        P::constant(q(n))
    }

    #[test]
    fn primes_are_prime() {
        let ps = primes();
        assert_eq!(ps[0], 2147483647);
        assert!(ps.iter().all(|&p| is_prime(p)));
        assert!(!is_prime(1_000_000_007 * 2));
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn difference_of_squares() {
        let a = t(0).pow(2) - t(1).pow(2);
        let b = t(0) - t(1);
        let (g, abar, bbar) = gcd_rational(&a, &b);
        assert_eq!(g, b);
        assert_eq!(abar, t(0) + t(1));
        assert!(bbar.is_one());
    }

    #[test]
    fn common_factor_with_noise() {
        let f = t(0) * t(1) + c(3) * t(1).pow(2) - c(2);
        let g1 = t(0).pow(3) + c(5) * t(1) + c(1);
        let g2 = t(1).pow(2) * t(0) - c(7);
        let a = &f * &g1;
        let b = &f * &g2;
        let (g, _, _) = gcd_rational(&a, &b);
        assert_eq!(g, f.monic());
        assert_eq!(gcd_recursive(&a, &b), f.monic());
    }

    #[test]
    fn rational_coefficients_and_monomials() {
        let f = P::constant(BigRational::new(1.into(), 3.into())) * t(0) + c(1);
        let a = &f * &t(1).pow(2) * t(0);
        let b = &f * &t(1) * (t(0) + t(1));
        let (g, abar, bbar) = gcd_rational(&a, &b);
        assert_eq!(g, (&f * &t(1)).monic());
        assert_eq!(&g * &abar, a);
        assert_eq!(&g * &bbar, b);
    }

    #[test]
    fn coprime_inputs() {
        let a = t(0).pow(2) + c(1);
        let b = t(1).pow(2) + t(0);
        assert!(gcd_rational(&a, &b).0.is_one());
        assert!(gcd_recursive(&a, &b).is_one());
    }

    #[test]
    fn repeated_factors() {
        let f = t(0) + c(2) * t(1) + c(1);
        let a = f.pow(3) * (t(0) - c(1));
        let b = f.pow(2) * (t(1) + c(4));
        assert_eq!(gcd_rational(&a, &b).0, f.pow(2).monic());
    }

    #[test]
    fn three_variables() {
        let v = |i| MultiPoly::<BigRational>::var(i);
        let k = |n| MultiPoly::<BigRational>::constant(q(n));
        let f = v(0) * v(2) + v(1).pow(2) - k(3);
        let a = &f * &(v(0) + v(1) * v(2));
        let b = &f * &(v(2).pow(2) - k(1));
        assert_eq!(gcd_rational(&a, &b).0, f.monic());
        assert_eq!(gcd_recursive(&a, &b), f.monic());
    }

    #[test]
    fn univariate_over_gf2() {
        let t = MultiPoly::<Gf2>::var(0);
        let one = MultiPoly::<Gf2>::one();
        // (t+1)^2 = t^2 + 1 in characteristic two
        let a = (&t + &one).pow(2);
        let b = &t.pow(2) + &one;
        assert_eq!(gcd_recursive(&a, &b), b);
        let c = &t * &(&t + &one);
        assert_eq!(gcd_recursive(&a, &c), &t + &one);
    }
}
