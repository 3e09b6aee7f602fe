// SPDX-License-Identifier: Apache-2.0

//! Matrix realization of the extension on the flag space
//! `W = K ⊕ End(V) ⊕ K`.
//!
//! Coordinates: `U = End(V) ⊕ K` is flattened as `(A row-major, a)` and `W`
//! as `(b, A row-major, a)`, so `dim U = n^2 + 1` and `dim W = n^2 + 2`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::extension::{AlphaCocycle, DerivationCocycle};
use crate::field::{Coefficient, RatFunc};
use crate::groups::GroupElement;
use crate::linalg::{preserves_flag, FlagSpec, Matrix};

type Mat<C> = Matrix<RatFunc<C>>;

/// `(A, a)` in `U = End(V) ⊕ K`.
#[derive(Clone, PartialEq, Debug)]
pub struct UVector<C> {
    pub mat: Mat<C>,
    pub scalar: RatFunc<C>,
}

impl<C: Coefficient> UVector<C> {
    pub fn new(mat: Mat<C>, scalar: RatFunc<C>) -> Self {
        UVector { mat, scalar }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn to_coords(&self) -> Vec<RatFunc<C>> {
        let mut v = self.mat.entries().to_vec();
        v.push(self.scalar.clone());
        v
    }

    pub fn from_coords(n: usize, v: &[RatFunc<C>]) -> Result<Self> {
        if v.len() != n * n + 1 {
            return Err(Error::ShapeError(format!(
                "{} coordinates for U with n = {n}",
                v.len()
            )));
        }
        Ok(UVector {
            mat: Matrix::new(n, n, v[..n * n].to_vec())?,
            scalar: v[n * n].clone(),
        })
    }
}

/// `(b, A, a)` in `W = K ⊕ End(V) ⊕ K`.
#[derive(Clone, PartialEq, Debug)]
pub struct WVector<C> {
    pub b: RatFunc<C>,
    pub mat: Mat<C>,
    pub a: RatFunc<C>,
}

impl<C: Coefficient> WVector<C> {
    pub fn new(b: RatFunc<C>, mat: Mat<C>, a: RatFunc<C>) -> Self {
        WVector { b, mat, a }
    }

    pub fn to_coords(&self) -> Vec<RatFunc<C>> {
        let mut v = vec![self.b.clone()];
        v.extend_from_slice(self.mat.entries());
        v.push(self.a.clone());
        v
    }

    pub fn from_coords(n: usize, v: &[RatFunc<C>]) -> Result<Self> {
        if v.len() != n * n + 2 {
            return Err(Error::ShapeError(format!(
                "{} coordinates for W with n = {n}",
                v.len()
            )));
        }
        Ok(WVector {
            b: v[0].clone(),
            mat: Matrix::new(n, n, v[1..=n * n].to_vec())?,
            a: v[n * n + 1].clone(),
        })
    }
}

/// `l_c(g)(A, a) = (g A g^-1 + c(g) a, a)`.
pub fn l_action<C: Coefficient>(
    c: &DerivationCocycle<C>,
    g: &GroupElement<C>,
    u: &UVector<C>,
) -> Result<UVector<C>> {
    let mut mat = g.conjugate(&u.mat)?;
    if !u.scalar.is_zero() {
        mat = mat.add(&c.at(g)?.scale(&u.scalar))?;
    }
    Ok(UVector::new(mat, u.scalar.clone()))
}

/// `l'_c(g)(B, b) = (g B g^-1, b + tr(c(g^-1) B))`.
pub fn l_dual_action<C: Coefficient>(
    c: &DerivationCocycle<C>,
    g: &GroupElement<C>,
    u: &UVector<C>,
) -> Result<UVector<C>> {
    let shift = c.at_inverse(g)?.trace_product(&u.mat)?;
    Ok(UVector::new(g.conjugate(&u.mat)?, &u.scalar + &shift))
}

/// `<(A, a), (B, b)> = tr(AB) + ab`.
pub fn pairing<C: Coefficient>(u: &UVector<C>, v: &UVector<C>) -> Result<RatFunc<C>> {
    Ok(u.mat.trace_product(&v.mat)? + &u.scalar * &v.scalar)
}

/// The matrix of `A -> g A g^-1` on row-major coordinates:
/// entry `(ij, kl)` is `g[i][k] * g^-1[l][j]`.
fn conjugation_block<C: Coefficient>(g: &GroupElement<C>) -> Mat<C> {
    let n = g.dim();
    let (m, mi) = (g.matrix(), g.inverse_matrix());
    Matrix::from_fn(n * n, n * n, |r, s| {
        let (i, j, k, l) = (r / n, r % n, s / n, s % n);
        let (x, y) = (m.get(i, k), mi.get(l, j));
        if x.is_zero() || y.is_zero() {
            RatFunc::zero()
        } else {
            x * y
        }
    })
}

/// Embeds an `n^2` block at offset `off` of an identity matrix of size `dim`.
fn with_block<C: Coefficient>(dim: usize, off: usize, block: &Mat<C>) -> Mat<C> {
    let mut out = Matrix::identity(dim);
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            out.set(off + i, off + j, block.get(i, j).clone());
        }
    }
    out
}

/// The matrix of `l_c(g)` on `U`.
pub fn l_matrix<C: Coefficient>(c: &DerivationCocycle<C>, g: &GroupElement<C>) -> Result<Mat<C>> {
    let n = g.dim();
    let mut out = with_block(n * n + 1, 0, &conjugation_block(g));
    for (r, e) in c.at(g)?.entries().iter().enumerate() {
        out.set(r, n * n, e.clone());
    }
    Ok(out)
}

/// The matrix of `l'_c(g)` on `U`.
pub fn l_dual_matrix<C: Coefficient>(
    c: &DerivationCocycle<C>,
    g: &GroupElement<C>,
) -> Result<Mat<C>> {
    let n = g.dim();
    let mut out = with_block(n * n + 1, 0, &conjugation_block(g));
    let ci = c.at_inverse(g)?;
    for k in 0..n {
        for l in 0..n {
            out.set(n * n, k * n + l, ci.get(l, k).clone());
        }
    }
    Ok(out)
}

/// `p_g(b, A, a) = (b + tr(c2(g^-1) A), g A g^-1 + c1(g) a, a)`.
pub fn make_p_g<C: Coefficient>(
    c1: &DerivationCocycle<C>,
    c2: &DerivationCocycle<C>,
    g: &GroupElement<C>,
) -> Result<Mat<C>> {
    let n = g.dim();
    let dim = n * n + 2;
    let mut out = with_block(dim, 1, &conjugation_block(g));
    let c2i = c2.at_inverse(g)?;
    for k in 0..n {
        for l in 0..n {
            out.set(0, 1 + k * n + l, c2i.get(l, k).clone());
        }
    }
    for (r, e) in c1.at(g)?.entries().iter().enumerate() {
        out.set(1 + r, dim - 1, e.clone());
    }
    Ok(out)
}

/// `p_t(b, A, a) = (b + a t, A, a)`.
pub fn make_p_t<C: Coefficient>(n: usize, t: &RatFunc<C>) -> Mat<C> {
    let dim = n * n + 2;
    let mut out = Matrix::identity(dim);
    out.set(0, dim - 1, t.clone());
    out
}

/// Whether `p` has the shape of some `p_t`, returning `t`.
pub fn as_p_t<C: Coefficient>(n: usize, p: &Mat<C>) -> Option<RatFunc<C>> {
    let dim = n * n + 2;
    if p.rows() != dim || p.cols() != dim {
        return None;
    }
    let t = p.get(0, dim - 1).clone();
    (make_p_t(n, &t) == *p).then_some(t)
}

/// `phi(g) = -tr(c1(g) c2(g))`, the correction turning `g -> p_g` into a
/// section whose cocycle is exactly `alpha`.
pub fn section_correction<C: Coefficient>(
    c1: &DerivationCocycle<C>,
    c2: &DerivationCocycle<C>,
    g: &GroupElement<C>,
) -> Result<RatFunc<C>> {
    Ok(-c1.at(g)?.trace_product(&c2.at(g)?)?)
}

/// `p_g p_{phi(g)}`.
pub fn make_p_g_normalized<C: Coefficient>(
    c1: &DerivationCocycle<C>,
    c2: &DerivationCocycle<C>,
    g: &GroupElement<C>,
) -> Result<Mat<C>> {
    let mut p = make_p_g(c1, c2, g)?;
    let dim = p.rows();
    // right multiplication by p_t adds t times column 0 to the last column,
    // and column 0 of p_g is e_0
    let phi = section_correction(c1, c2, g)?;
    let corner = p.get(0, dim - 1) + &phi;
    p.set(0, dim - 1, corner);
    Ok(p)
}

/// Which section `G -> E` to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Section {
    /// `g -> p_g` exactly as defined by its formula.
    Raw,
    /// `g -> p_g p_{phi(g)}`.
    Normalized,
}

impl Section {
    pub fn p<C: Coefficient>(
        &self,
        c1: &DerivationCocycle<C>,
        c2: &DerivationCocycle<C>,
        g: &GroupElement<C>,
    ) -> Result<Mat<C>> {
        match self {
            Section::Raw => make_p_g(c1, c2, g),
            Section::Normalized => make_p_g_normalized(c1, c2, g),
        }
    }
}

/// A pair `(g, p)` with `p` acting on `W`.
#[derive(Clone, PartialEq, Debug)]
pub struct LinElement<C> {
    pub g: GroupElement<C>,
    pub p: Mat<C>,
}

impl<C: Coefficient> LinElement<C> {
    pub fn new(g: GroupElement<C>, p: Mat<C>) -> Self {
        LinElement { g, p }
    }

    pub fn section(
        c1: &DerivationCocycle<C>,
        c2: &DerivationCocycle<C>,
        g: &GroupElement<C>,
    ) -> Result<Self> {
        Ok(LinElement::new(g.clone(), make_p_g(c1, c2, g)?))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(LinElement::new(
            self.g.mul(&other.g)?,
            self.p.mul(&other.p)?,
        ))
    }

    pub fn flag(&self) -> FlagSpec {
        FlagSpec::new(self.g.dim())
    }
}

fn require_flag<C: Coefficient>(n: usize, p: &Mat<C>) -> Result<()> {
    if preserves_flag(p, &FlagSpec::new(n)) {
        Ok(())
    } else {
        Err(Error::NotInP)
    }
}

/// The map induced on `W / K`, in `U` coordinates.
pub fn pi_star<C: Coefficient>(n: usize, p: &Mat<C>) -> Result<Mat<C>> {
    require_flag(n, p)?;
    let dim = n * n + 2;
    Ok(p.block(1, dim, 1, dim))
}

/// The restriction of `p` to `iota(U) = K ⊕ End(V) ⊕ 0`, re-expressed in
/// `U` coordinates `(B, b)`.
pub fn iota_star<C: Coefficient>(n: usize, p: &Mat<C>) -> Result<Mat<C>> {
    require_flag(n, p)?;
    let m = n * n;
    // U coordinate i sits at W coordinate i + 1, and b (U coordinate m) at 0
    let w = |i: usize| if i < m { i + 1 } else { 0 };
    Ok(Matrix::from_fn(m + 1, m + 1, |i, j| {
        p.get(w(i), w(j)).clone()
    }))
}

/// Whether `l_{c1}(g) = pi_*(p)` and `l'_{c2}(g) = iota^*(p)`.
pub fn membership_check<C: Coefficient>(
    el: &LinElement<C>,
    c1: &DerivationCocycle<C>,
    c2: &DerivationCocycle<C>,
) -> Result<bool> {
    let n = el.g.dim();
    let pi = pi_star(n, &el.p)?;
    let iota = iota_star(n, &el.p)?;
    Ok(pi == l_matrix(c1, &el.g)? && iota == l_dual_matrix(c2, &el.g)?)
}

/// Result of comparing `p_h p_g` with `p_{hg} p_t`.
#[derive(Clone, PartialEq, Debug)]
pub struct KeyIdentity<C> {
    /// `p_h p_g = p_{hg} p_t` for the extracted `t`.
    pub holds: bool,
    pub t: RatFunc<C>,
    /// `alpha(h, g)`.
    pub alpha: RatFunc<C>,
    pub matches_alpha: bool,
    /// `phi(h) + phi(g) - phi(hg)`; the raw section satisfies
    /// `t = alpha(h, g) - dphi(h, g)`.
    pub coboundary: RatFunc<C>,
}

impl<C: Coefficient> KeyIdentity<C> {
    /// Whether `t` and `alpha(h, g)` differ exactly by the coboundary of the
    /// section correction.
    pub fn cohomologous(&self) -> bool {
        &self.t + &self.coboundary == self.alpha
    }
}

/// Computes `p_h p_g` and `p_{hg}`, reads `t` off the `(b, a)` entry of
/// their difference (the corner of `p_{hg}^-1 p_h p_g` whenever the identity
/// holds), and checks `p_h p_g = p_{hg} p_t`.
pub fn key_identity_check<C: Coefficient>(
    c1: &DerivationCocycle<C>,
    c2: &DerivationCocycle<C>,
    g: &GroupElement<C>,
    h: &GroupElement<C>,
    section: Section,
) -> Result<KeyIdentity<C>> {
    let n = g.dim();
    let dim = n * n + 2;
    let hg = h.mul(g)?;
    let lhs = section.p(c1, c2, h)?.mul(&section.p(c1, c2, g)?)?;
    let p_hg = section.p(c1, c2, &hg)?;
    let t = lhs.get(0, dim - 1) - p_hg.get(0, dim - 1);
    let holds = lhs == p_hg.mul(&make_p_t(n, &t))?;
    let alpha = AlphaCocycle::new(c1.clone(), c2.clone())?.eval(h, g)?;
    let phi = |x: &GroupElement<C>| section_correction(c1, c2, x);
    let coboundary = match section {
        Section::Raw => &(&phi(h)? + &phi(g)?) - &phi(&hg)?,
        Section::Normalized => RatFunc::zero(),
    };
    Ok(KeyIdentity {
        holds,
        matches_alpha: t == alpha,
        t,
        alpha,
        coboundary,
    })
}

/// Whether `diag(g, p)` is invertible; its size is `n + n^2 + 2`.
pub fn embedding_invertible<C: Coefficient>(g: &GroupElement<C>, p: &Mat<C>) -> Result<bool> {
    let det = g.matrix().direct_sum(p).determinant()?;
    Ok(!det.is_zero())
}

/// The identity of `W`, for convenience.
pub fn w_identity<C: Coefficient>(n: usize) -> Mat<C> {
    make_p_t(n, &RatFunc::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::make_alpha;
    use crate::field::Derivation;
    use crate::groups::{sample_sl2, torus, Representation};
    use num_rational::BigRational;
    use num_traits::One;

    type R = RatFunc<BigRational>;
    type G = GroupElement<BigRational>;
    type Dc = DerivationCocycle<BigRational>;

    fn t(i: usize) -> R {
        R::var(i)
    }

    fn cocycles(rep: Representation) -> (Dc, Dc) {
        let alpha = make_alpha(
            &Derivation::partial(0, 2).unwrap(),
            &Derivation::partial(1, 2).unwrap(),
            rep,
        )
        .unwrap();
        (alpha.c1().clone(), alpha.c2().clone())
    }

    fn e12() -> Matrix<R> {
        Matrix::unit(2, 0, 1)
    }

    #[test]
    fn actions_and_pairing() {
        let (c1, _) = cocycles(Representation::Natural);
        let id = G::identity(2);
        let u = UVector::new(e12(), t(1));
        assert_eq!(l_action(&c1, &id, &u).unwrap(), u);
        assert_eq!(l_dual_action(&c1, &id, &u).unwrap(), u);

        let g = torus(t(0)).unwrap();
        let pure = UVector::new(e12(), R::zero());
        assert_eq!(
            l_action(&c1, &g, &pure).unwrap(),
            UVector::new(g.conjugate(&e12()).unwrap(), R::zero())
        );
        let inv = t(0).try_inv().unwrap();
        let unit = UVector::new(Matrix::zeros(2, 2), R::one());
        assert_eq!(
            l_action(&c1, &g, &unit).unwrap(),
            UVector::new(Matrix::diagonal(vec![inv.clone(), -inv]), R::one())
        );
        let b_only = UVector::new(Matrix::zeros(2, 2), t(0));
        assert_eq!(l_dual_action(&c1, &g, &b_only).unwrap(), b_only);

        let i = UVector::new(Matrix::identity(2), R::zero());
        assert_eq!(pairing(&i, &i).unwrap(), R::from_i64(2));
        let (x, y) = (
            UVector::new(Matrix::zeros(2, 2), t(0)),
            UVector::new(Matrix::zeros(2, 2), t(1)),
        );
        assert_eq!(pairing(&x, &y).unwrap(), t(0) * t(1));
        let a = UVector::new(e12(), R::one());
        let b = UVector::new(Matrix::unit(2, 1, 0), t(0));
        assert_eq!(pairing(&a, &b).unwrap(), R::one() + t(0));
    }

    #[test]
    fn matrices_agree_with_actions() {
        let (c1, c2) = cocycles(Representation::Natural);
        let g = sample_sl2::<BigRational>(9, 1, 2, 2).remove(0);
        let u = UVector::new(
            Matrix::from_rows(vec![vec![t(0), R::one()], vec![t(1), R::from_i64(-2)]]).unwrap(),
            t(0) + t(1),
        );
        let lu = l_matrix(&c1, &g).unwrap().apply(&u.to_coords()).unwrap();
        assert_eq!(
            UVector::from_coords(2, &lu).unwrap(),
            l_action(&c1, &g, &u).unwrap()
        );
        let ldu = l_dual_matrix(&c2, &g)
            .unwrap()
            .apply(&u.to_coords())
            .unwrap();
        assert_eq!(
            UVector::from_coords(2, &ldu).unwrap(),
            l_dual_action(&c2, &g, &u).unwrap()
        );
    }

    #[test]
    fn p_g_formula() {
        let (c1, c2) = cocycles(Representation::Natural);
        assert!(make_p_g(&c1, &c2, &G::identity(2)).unwrap().is_identity());
        let g = sample_sl2::<BigRational>(10, 1, 2, 2).remove(0);
        let p = make_p_g(&c1, &c2, &g).unwrap();
        assert!(preserves_flag(&p, &FlagSpec::new(2)));

        let last = WVector::new(R::zero(), Matrix::zeros(2, 2), R::one());
        let img = WVector::from_coords(2, &p.apply(&last.to_coords()).unwrap()).unwrap();
        assert_eq!(img, WVector::new(R::zero(), c1.at(&g).unwrap(), R::one()));

        let a = Matrix::from_rows(vec![vec![t(1), R::one()], vec![R::zero(), t(0)]]).unwrap();
        let mid = WVector::new(R::zero(), a.clone(), R::zero());
        let img = WVector::from_coords(2, &p.apply(&mid.to_coords()).unwrap()).unwrap();
        let b = c2
            .at(&g.inverse())
            .unwrap()
            .mul(&a)
            .unwrap()
            .trace()
            .unwrap();
        assert_eq!(img, WVector::new(b, g.conjugate(&a).unwrap(), R::zero()));
    }

    #[test]
    fn p_t_family() {
        assert!(make_p_t::<BigRational>(2, &R::zero()).is_identity());
        let (s, u) = (t(0), t(1) * t(1));
        let prod = make_p_t(2, &s).mul(&make_p_t(2, &u)).unwrap();
        assert_eq!(prod, make_p_t(2, &(&s + &u)));
        assert_eq!(as_p_t(2, &prod), Some(&s + &u));
        assert!(preserves_flag(&make_p_t(2, &s), &FlagSpec::new(2)));

        let (c1, c2) = cocycles(Representation::Natural);
        let g = sample_sl2::<BigRational>(12, 1, 2, 2).remove(0);
        let p = make_p_g(&c1, &c2, &g).unwrap();
        let pt = make_p_t(2, &u);
        assert_eq!(p.mul(&pt).unwrap(), pt.mul(&p).unwrap());
    }

    #[test]
    fn membership() {
        let (c1, c2) = cocycles(Representation::Natural);
        let id = LinElement::new(G::identity(2), w_identity(2));
        assert!(membership_check(&id, &c1, &c2).unwrap());
        for g in sample_sl2::<BigRational>(13, 3, 2, 2) {
            let el = LinElement::section(&c1, &c2, &g).unwrap();
            assert!(membership_check(&el, &c1, &c2).unwrap());
            let shifted = LinElement::new(g.clone(), el.p.mul(&make_p_t(2, &t(0))).unwrap());
            assert!(membership_check(&shifted, &c1, &c2).unwrap());
        }
        let mut bad = w_identity::<BigRational>(2);
        bad.set(3, 0, R::one());
        let el = LinElement::new(G::identity(2), bad);
        assert_eq!(membership_check(&el, &c1, &c2), Err(Error::NotInP));
    }

    #[test]
    fn raw_section_cocycle_is_alpha_up_to_a_coboundary() {
        let (c1, c2) = cocycles(Representation::Natural);
        let id = G::identity(2);
        let k = key_identity_check(&c1, &c2, &id, &id, Section::Raw).unwrap();
        assert!(k.holds && k.t.is_zero() && k.matches_alpha);

        // h = nu(t1), g = nu(t2): t = tr(c1(g) c2(h^-1)) = 0, alpha(h, g) = 2/(t1 t2)
        let h = torus(t(0)).unwrap();
        let g = torus(t(1)).unwrap();
        let k = key_identity_check(&c1, &c2, &g, &h, Section::Raw).unwrap();
        assert!(k.holds);
        assert!(k.t.is_zero());
        assert_eq!(k.alpha, R::from_i64(2).try_div(&(t(0) * t(1))).unwrap());
        assert!(!k.matches_alpha);
        assert!(k.cohomologous());

        let n = torus(t(0)).unwrap();
        let p = make_p_g(&c1, &c2, &n).unwrap();
        let p_hg = make_p_g(&c1, &c2, &n.mul(&g).unwrap()).unwrap();
        let direct = p_hg
            .inverse()
            .unwrap()
            .unwrap()
            .mul(&p.mul(&make_p_g(&c1, &c2, &g).unwrap()).unwrap())
            .unwrap();
        assert_eq!(as_p_t(2, &direct), Some(k.t));
    }

    #[test]
    fn normalized_section_cocycle_is_alpha() {
        let (c1, c2) = cocycles(Representation::Natural);
        let gs = sample_sl2::<BigRational>(14, 4, 2, 2);
        for pair in gs.chunks(2) {
            let k = key_identity_check(&c1, &c2, &pair[0], &pair[1], Section::Normalized).unwrap();
            assert!(k.holds && k.matches_alpha);
            let raw = key_identity_check(&c1, &c2, &pair[0], &pair[1], Section::Raw).unwrap();
            assert!(raw.holds && raw.cohomologous());
            let el = LinElement::new(
                pair[0].clone(),
                make_p_g_normalized(&c1, &c2, &pair[0]).unwrap(),
            );
            assert!(membership_check(&el, &c1, &c2).unwrap());
        }
    }

    #[test]
    fn embedding_is_invertible() {
        let (c1, c2) = cocycles(Representation::Natural);
        let g = sample_sl2::<BigRational>(15, 1, 2, 2).remove(0);
        let p = make_p_g(&c1, &c2, &g).unwrap();
        assert!(embedding_invertible(&g, &p).unwrap());
    }
}
