// SPDX-License-Identifier: Apache-2.0

//! A four-dimensional representation of `SL2(F2(t))` built from the
//! derivation `d/dt`, and the unipotent parts of its diagonal images.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::RatFunc;
use crate::groups::{sample_sl2, GroupElement};
use crate::linalg::Matrix;
use crate::scalar::Gf2;

pub type F2t = RatFunc<Gf2>;

/// `[[a, b], [c, d]]` over `F2(t)` with `ad + bc = 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct SL2F2tElement {
    a: F2t,
    b: F2t,
    c: F2t,
    d: F2t,
}

impl SL2F2tElement {
    pub fn new(a: F2t, b: F2t, c: F2t, d: F2t) -> Result<Self> {
        let det = a.mul_ref(&d).add_ref(&b.mul_ref(&c));
        if !det.is_one() {
            return Err(Error::NotInSL2(det.to_string()));
        }
        Ok(SL2F2tElement { a, b, c, d })
    }

    pub fn identity() -> Self {
        SL2F2tElement {
            a: F2t::one(),
            b: F2t::zero(),
            c: F2t::zero(),
            d: F2t::one(),
        }
    }

    /// `diag(u, 1/u)`.
    pub fn diagonal(u: &F2t) -> Result<Self> {
        let ui = u.try_inv().map_err(|_| Error::NotInvertible)?;
        Ok(SL2F2tElement {
            a: u.clone(),
            b: F2t::zero(),
            c: F2t::zero(),
            d: ui,
        })
    }

    pub fn from_group(g: &GroupElement<Gf2>) -> Result<Self> {
        if g.dim() != 2 {
            return Err(Error::ShapeError(format!(
                "expected 2x2, got {}x{}",
                g.dim(),
                g.dim()
            )));
        }
        let m = g.matrix();
        Self::new(
            m.get(0, 0).clone(),
            m.get(0, 1).clone(),
            m.get(1, 0).clone(),
            m.get(1, 1).clone(),
        )
    }

    pub fn entries(&self) -> [&F2t; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let dot = |x: &F2t, y: &F2t, z: &F2t, w: &F2t| x.mul_ref(y).add_ref(&z.mul_ref(w));
        SL2F2tElement {
            a: dot(&self.a, &other.a, &self.b, &other.c),
            b: dot(&self.a, &other.b, &self.b, &other.d),
            c: dot(&self.c, &other.a, &self.d, &other.c),
            d: dot(&self.c, &other.b, &self.d, &other.d),
        }
    }
}

impl fmt::Display for SL2F2tElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// The representation built from `d/dt`, with rows `(1, ac, bd, d(a)d + d(b)c)`,
/// `(0, a^2, b^2, d(ab))`, `(0, c^2, d^2, d(cd))`, `(0, 0, 0, 1)`.
pub fn rho(g: &SL2F2tElement) -> Matrix<F2t> {
    let dt = |f: &F2t| f.partial(0);
    let (a, b, c, d) = (&g.a, &g.b, &g.c, &g.d);
    let (o, z) = (F2t::one(), F2t::zero());
    Matrix::from_rows(vec![
        vec![
            o.clone(),
            a.mul_ref(c),
            b.mul_ref(d),
            dt(a).mul_ref(d).add_ref(&dt(b).mul_ref(c)),
        ],
        vec![z.clone(), a.mul_ref(a), b.mul_ref(b), dt(&a.mul_ref(b))],
        vec![z.clone(), c.mul_ref(c), d.mul_ref(d), dt(&c.mul_ref(d))],
        vec![z.clone(), z.clone(), z, o],
    ])
    .expect("4x4")
}

/// `rho` with an extra `ac` added to the corner entry; used to check that
/// the homomorphism test can fail.
pub fn rho_mutated(g: &SL2F2tElement) -> Matrix<F2t> {
    let mut m = rho(g);
    let corner = m.get(0, 3).add_ref(&g.a.mul_ref(&g.c));
    m.set(0, 3, corner);
    m
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomCheck {
    pub holds: bool,
    pub checked: usize,
    /// Index and rendering of the first failing pair.
    pub witness: Option<(usize, String)>,
}

/// `count` seeded pairs from `SL2(F2(t))`.
pub fn sample_pairs(
    seed: u64,
    count: usize,
    degree_cap: u32,
) -> Vec<(SL2F2tElement, SL2F2tElement)> {
    let gs: Vec<SL2F2tElement> = sample_sl2::<Gf2>(seed, 2 * count, degree_cap, 1)
        .iter()
        .map(|g| SL2F2tElement::from_group(g).expect("sampled elements lie in SL2"))
        .collect();
    gs.chunks(2).map(|p| (p[0].clone(), p[1].clone())).collect()
}

/// Checks `f(gh) = f(g) f(h)` on seeded pairs.
pub fn homomorphism_check_with<F>(f: F, seed: u64, count: usize, degree_cap: u32) -> HomCheck
where
    F: Fn(&SL2F2tElement) -> Matrix<F2t>,
{
    for (i, (g, h)) in sample_pairs(seed, count, degree_cap).iter().enumerate() {
        let lhs = f(&g.mul(h));
        let rhs = f(g).mul(&f(h)).expect("4x4");
        if lhs != rhs {
            return HomCheck {
                holds: false,
                checked: i + 1,
                witness: Some((i, format!("g = {g}, h = {h}"))),
            };
        }
    }
    HomCheck {
        holds: true,
        checked: count,
        witness: None,
    }
}

pub fn rho_homomorphism_check(seed: u64, count: usize, degree_cap: u32) -> HomCheck {
    homomorphism_check_with(rho, seed, count, degree_cap)
}

/// `diag(1, u^2, u^-2, 1)`, the semisimple part of `rho(diag(u, 1/u))`.
pub fn semisimple_part(u: &F2t) -> Result<Matrix<F2t>> {
    let u2 = u.mul_ref(u);
    let u2i = u2.try_inv().map_err(|_| Error::NotInvertible)?;
    Ok(Matrix::diagonal(vec![F2t::one(), u2, u2i, F2t::one()]))
}

/// `v(u) = s^-1 rho(diag(u, 1/u))`.
pub fn unipotent_part(u: &F2t) -> Result<Matrix<F2t>> {
    let s = semisimple_part(u)?;
    let s_inv = s.inverse()?.ok_or(Error::NotInvertible)?;
    s_inv.mul(&rho(&SL2F2tElement::diagonal(u)?))
}

pub fn is_unipotent(v: &Matrix<F2t>) -> bool {
    let n = v.rows();
    let nil = v.sub(&Matrix::identity(n)).expect("square");
    nil.pow(n as u32).expect("square").is_zero()
}

#[derive(Clone, Debug, PartialEq)]
pub struct CentralCheck {
    pub unipotent: bool,
    pub commutes: bool,
    pub checked: usize,
    pub witness: Option<(usize, String)>,
}

impl CentralCheck {
    pub fn holds(&self) -> bool {
        self.unipotent && self.commutes
    }
}

/// Checks that `v(u)` is unipotent and commutes with `rho(g)` for `count`
/// seeded `g`.
pub fn central_unipotent_check(
    u: &F2t,
    seed: u64,
    count: usize,
    degree_cap: u32,
) -> Result<CentralCheck> {
    let v = unipotent_part(u)?;
    let unipotent = is_unipotent(&v);
    let gs = sample_sl2::<Gf2>(seed, count, degree_cap, 1);
    for (i, g) in gs.iter().enumerate() {
        let r = rho(&SL2F2tElement::from_group(g)?);
        if v.mul(&r)? != r.mul(&v)? {
            return Ok(CentralCheck {
                unipotent,
                commutes: false,
                checked: i + 1,
                witness: Some((i, format!("g = {}", g.matrix()))),
            });
        }
    }
    Ok(CentralCheck {
        unipotent,
        commutes: true,
        checked: count,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> F2t {
        s.parse().unwrap()
    }

    fn rows(rs: [[&str; 4]; 4]) -> Matrix<F2t> {
        Matrix::from_rows(
            rs.iter()
                .map(|r| r.iter().map(|s| f(s)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn determinant_condition() {
        assert!(SL2F2tElement::new(f("1"), f("t1"), f("0"), f("1")).is_ok());
        assert!(matches!(
            SL2F2tElement::new(f("t1"), f("0"), f("0"), f("1")),
            Err(Error::NotInSL2(_))
        ));
        // ad - bc = ad + bc in characteristic two
        assert!(SL2F2tElement::new(f("t1"), f("1"), f("1"), f("0")).is_ok());
        assert_eq!(SL2F2tElement::diagonal(&f("0")), Err(Error::NotInvertible));
    }

    #[test]
    fn explicit_images() {
        assert!(rho(&SL2F2tElement::identity()).is_identity());
        let g = SL2F2tElement::new(f("1"), f("t1"), f("0"), f("1")).unwrap();
        let want = rows([
            ["1", "0", "t1", "0"],
            ["0", "1", "t1^2", "1"],
            ["0", "0", "1", "0"],
            ["0", "0", "0", "1"],
        ]);
        assert_eq!(rho(&g), want);

        let d = SL2F2tElement::diagonal(&f("t1")).unwrap();
        let want = rows([
            ["1", "0", "0", "1/t1"],
            ["0", "t1^2", "0", "0"],
            ["0", "0", "1/t1^2", "0"],
            ["0", "0", "0", "1"],
        ]);
        assert_eq!(rho(&d), want);
    }

    #[test]
    fn hand_expanded_product() {
        // gh = [[1 + t^2, t], [t, 1]]; d(t^2) = 0 and d(t^3) = t^2
        let g = SL2F2tElement::new(f("1"), f("t1"), f("0"), f("1")).unwrap();
        let h = SL2F2tElement::new(f("1"), f("0"), f("t1"), f("1")).unwrap();
        let want = rows([
            ["1", "t1 + t1^3", "t1", "t1"],
            ["0", "1 + t1^4", "t1^2", "1 + t1^2"],
            ["0", "t1^2", "1", "1"],
            ["0", "0", "0", "1"],
        ]);
        assert_eq!(rho(&g.mul(&h)), want);
        assert_eq!(rho(&g).mul(&rho(&h)).unwrap(), want);
    }

    #[test]
    fn homomorphism_and_mutation() {
        assert!(rho_homomorphism_check(1, 0, 3).holds);
        let ok = rho_homomorphism_check(1, 20, 3);
        assert!(ok.holds, "{:?}", ok.witness);
        assert_eq!(ok.checked, 20);
        let bad = homomorphism_check_with(rho_mutated, 1, 20, 3);
        assert!(!bad.holds);
        assert!(bad.witness.is_some());
    }

    #[test]
    fn unipotent_parts() {
        assert!(unipotent_part(&f("1")).unwrap().is_identity());
        assert!(unipotent_part(&f("t1^2")).unwrap().is_identity());
        assert!(unipotent_part(&f("(t1^2+1)/t1^4")).unwrap().is_identity());

        let v = unipotent_part(&f("t1")).unwrap();
        let mut want = Matrix::identity(4);
        want.set(0, 3, f("1/t1"));
        assert_eq!(v, want);
        assert!(is_unipotent(&v));
        assert!(v.mul(&v).unwrap().is_identity());

        let check = central_unipotent_check(&f("t1"), 3, 10, 3).unwrap();
        assert!(check.holds(), "{:?}", check.witness);
        assert_eq!(
            central_unipotent_check(&f("0"), 3, 1, 3),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn square_classes() {
        let u = f("t1 + 1");
        let w = f("t1^2 + t1 + 1");
        let uw2 = u.mul_ref(&w).mul_ref(&w);
        assert_eq!(unipotent_part(&uw2).unwrap(), unipotent_part(&u).unwrap());
        // v(u) v(u') = v(uu')
        let u2 = f("t1");
        let prod = unipotent_part(&u)
            .unwrap()
            .mul(&unipotent_part(&u2).unwrap())
            .unwrap();
        assert_eq!(prod, unipotent_part(&u.mul_ref(&u2)).unwrap());
    }
}
