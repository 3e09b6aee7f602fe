// SPDX-License-Identifier: Apache-2.0

//! Derivation 1-cocycles `A -> d(A) A^-1`, the trace-paired 2-cocycle they
//! produce, and the central extension `G x K` it defines.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::cohomology::{Cochain, CoeffModule, ModuleValue};
use crate::error::{Error, Result};
use crate::field::random::random_nonconstant_ratfunc;
use crate::field::{derivations_independent, Coefficient, Derivation, RatFunc};
use crate::groups::{parameter_shape, GroupElement, Representation};
use crate::linalg::Matrix;
use crate::rng::rng_from_seed;

type Mat<C> = Matrix<RatFunc<C>>;

/// `c(A) = d(A) A^-1` on the image of a representation.
#[derive(Clone, PartialEq, Debug)]
pub struct DerivationCocycle<C> {
    d: Derivation<C>,
    rep: Representation,
}

impl<C: Coefficient> DerivationCocycle<C> {
    pub fn new(d: Derivation<C>, rep: Representation) -> Self {
        DerivationCocycle { d, rep }
    }

    pub fn derivation(&self) -> &Derivation<C> {
        &self.d
    }

    pub fn representation(&self) -> Representation {
        self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    /// Value at an element already in the representation's `GL_n`.
    pub fn at(&self, g: &GroupElement<C>) -> Result<Mat<C>> {
        if g.dim() != self.dim() {
            return Err(Error::ShapeError(format!(
                "{} cocycle evaluated on a {}x{} matrix",
                self.rep,
                g.dim(),
                g.dim()
            )));
        }
        g.matrix().derive(&self.d)?.mul(g.inverse_matrix())
    }

    /// Value at `g^-1`, reusing the cached inverse.
    pub fn at_inverse(&self, g: &GroupElement<C>) -> Result<Mat<C>> {
        self.at(&g.inverse())
    }

    /// The cocycle as a cochain with values in `End(V)`.
    pub fn cochain(&self) -> Cochain<C> {
        let me = self.clone();
        Cochain::new(1, CoeffModule::EndConj(self.dim()), move |gs| {
            Ok(ModuleValue::End(me.at(&gs[0])?))
        })
    }
}

/// `alpha(g, h) = tr(c1(g) g c2(h) g^-1)`.
#[derive(Clone, PartialEq, Debug)]
pub struct AlphaCocycle<C> {
    c1: DerivationCocycle<C>,
    c2: DerivationCocycle<C>,
}

impl<C: Coefficient> AlphaCocycle<C> {
    pub fn new(c1: DerivationCocycle<C>, c2: DerivationCocycle<C>) -> Result<Self> {
        if c1.rep != c2.rep {
            return Err(Error::ShapeError(format!(
                "cocycles over {} and {}",
                c1.rep, c2.rep
            )));
        }
        if c1.d.nvars() != c2.d.nvars() {
            return Err(Error::ArityMismatch {
                expected: c1.d.nvars(),
                found: c2.d.nvars(),
            });
        }
        Ok(AlphaCocycle { c1, c2 })
    }

    pub fn c1(&self) -> &DerivationCocycle<C> {
        &self.c1
    }

    pub fn c2(&self) -> &DerivationCocycle<C> {
        &self.c2
    }

    pub fn representation(&self) -> Representation {
        self.c1.rep
    }

    pub fn nvars(&self) -> usize {
        self.c1.d.nvars()
    }

    /// `tr(c1(g) g c2(h) g^-1)`.
    pub fn eval(&self, g: &GroupElement<C>, h: &GroupElement<C>) -> Result<RatFunc<C>> {
        let a = self.c1.at(g)?;
        if a.is_zero() {
            return Ok(RatFunc::zero());
        }
        let b = g.conjugate(&self.c2.at(h)?)?;
        a.trace_product(&b)
    }

    /// `-tr(c1(g^-1) c2(h))`.
    pub fn eval_inverse_form(
        &self,
        g: &GroupElement<C>,
        h: &GroupElement<C>,
    ) -> Result<RatFunc<C>> {
        let a = self.c1.at_inverse(g)?;
        let b = self.c2.at(h)?;
        Ok(-a.trace_product(&b)?)
    }

    pub fn cochain(&self) -> Cochain<C> {
        let me = self.clone();
        Cochain::new(2, CoeffModule::ScalarTrivial, move |gs| {
            Ok(ModuleValue::Scalar(me.eval(&gs[0], &gs[1])?))
        })
    }
}

/// The 2-cocycle attached to `d1`, `d2` on `rep`.
pub fn make_alpha<C: Coefficient>(
    d1: &Derivation<C>,
    d2: &Derivation<C>,
    rep: Representation,
) -> Result<AlphaCocycle<C>> {
    AlphaCocycle::new(
        DerivationCocycle::new(d1.clone(), rep),
        DerivationCocycle::new(d2.clone(), rep),
    )
}

/// An element `(g, x)` of `E' = G x K` with product
/// `(g, x)(h, y) = (gh, x + y + alpha(g, h))`.
#[derive(Clone, Debug)]
pub struct ExtElement<C> {
    g: GroupElement<C>,
    x: RatFunc<C>,
    alpha: Arc<AlphaCocycle<C>>,
}

impl<C: Coefficient> PartialEq for ExtElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.same_extension(other) && self.g == other.g && self.x == other.x
    }
}

impl<C: Coefficient> ExtElement<C> {
    pub fn new(g: GroupElement<C>, x: RatFunc<C>, alpha: Arc<AlphaCocycle<C>>) -> Result<Self> {
        if g.dim() != alpha.representation().dim() {
            return Err(Error::ShapeError(format!(
                "{}x{} element in an extension of {}",
                g.dim(),
                g.dim(),
                alpha.representation()
            )));
        }
        Ok(ExtElement { g, x, alpha })
    }

    /// `(g, 0)`.
    pub fn lift(g: GroupElement<C>, alpha: Arc<AlphaCocycle<C>>) -> Result<Self> {
        Self::new(g, RatFunc::zero(), alpha)
    }

    pub fn identity(alpha: Arc<AlphaCocycle<C>>) -> Self {
        let n = alpha.representation().dim();
        ExtElement {
            g: GroupElement::identity(n),
            x: RatFunc::zero(),
            alpha,
        }
    }

    /// The central element `(e, x)`.
    pub fn central(x: RatFunc<C>, alpha: Arc<AlphaCocycle<C>>) -> Self {
        ExtElement {
            x,
            ..Self::identity(alpha)
        }
    }

    pub fn group_part(&self) -> &GroupElement<C> {
        &self.g
    }

    pub fn scalar_part(&self) -> &RatFunc<C> {
        &self.x
    }

    pub fn cocycle(&self) -> &Arc<AlphaCocycle<C>> {
        &self.alpha
    }

    pub fn is_identity(&self) -> bool {
        self.g.is_identity() && self.x.is_zero()
    }

    fn same_extension(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alpha, &other.alpha) || *self.alpha == *other.alpha
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !self.same_extension(other) {
            return Err(Error::IncompatibleExtension);
        }
        let a = self.alpha.eval(&self.g, &other.g)?;
        Ok(ExtElement {
            g: self.g.mul(&other.g)?,
            x: &(&self.x + &other.x) + &a,
            alpha: Arc::clone(&self.alpha),
        })
    }

    /// `(g^-1, -x - alpha(g, g^-1))`.
    pub fn inverse(&self) -> Result<Self> {
        let gi = self.g.inverse();
        let a = self.alpha.eval(&self.g, &gi)?;
        Ok(ExtElement {
            g: gi,
            x: -(&self.x + &a),
            alpha: Arc::clone(&self.alpha),
        })
    }

    /// `p q p^-1 q^-1`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?
            .mul(&self.inverse()?)?
            .mul(&other.inverse()?)
    }
}

impl<C: Coefficient> fmt::Display for ExtElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.x)
    }
}

fn weight_sum<C: Coefficient>(rep: Representation) -> RatFunc<C> {
    RatFunc::from_i64(rep.weight_square_sum())
}

/// `(sum d_i^2) d1(s) d2(t) / (st)`.
pub fn torus_alpha_closed_form<C: Coefficient>(
    s: &RatFunc<C>,
    t: &RatFunc<C>,
    rep: Representation,
    d1: &Derivation<C>,
    d2: &Derivation<C>,
) -> Result<RatFunc<C>> {
    let st = s * t;
    if st.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let num = &d1.apply(s)? * &d2.apply(t)?;
    (&weight_sum(rep) * &num).try_div(&st)
}

/// `(sum d_i^2)(d1(s) d2(t) - d1(t) d2(s)) / (st)`, the commutator of the
/// torus lifts of `s` and `t`.
pub fn commutator_closed_form<C: Coefficient>(
    s: &RatFunc<C>,
    t: &RatFunc<C>,
    rep: Representation,
    d1: &Derivation<C>,
    d2: &Derivation<C>,
) -> Result<RatFunc<C>> {
    Ok(torus_alpha_closed_form(s, t, rep, d1, d2)? - torus_alpha_closed_form(t, s, rep, d1, d2)?)
}

/// The commutator `[(nu(s), 0), (nu(t), 0)]` computed in `E'`.
pub fn torus_commutator<C: Coefficient>(
    s: &RatFunc<C>,
    t: &RatFunc<C>,
    alpha: &Arc<AlphaCocycle<C>>,
) -> Result<ExtElement<C>> {
    let rep = alpha.representation();
    let p = ExtElement::lift(rep.torus_image(s)?, Arc::clone(alpha))?;
    let q = ExtElement::lift(rep.torus_image(t)?, Arc::clone(alpha))?;
    p.commutator(&q)
}

/// A torus pair whose lifts do not commute.
#[derive(Clone, PartialEq, Debug)]
pub struct NonsplitWitness<C> {
    pub s: RatFunc<C>,
    pub t: RatFunc<C>,
    pub value: RatFunc<C>,
}

/// Seed of the fallback candidate stream in [`nonsplit_witness`].
pub const WITNESS_SEED: u64 = 0x5eed;
const RANDOM_CANDIDATES: usize = 20;

/// Searches for `s, t` with `[(nu(s),0), (nu(t),0)] != (e, 0)`: first the
/// variable pairs `(ti, tj)`, then a fixed stream of random low-degree pairs.
/// Dependent derivations and zero weights make every such commutator
/// trivial, so no search is made for them.
pub fn nonsplit_witness<C: Coefficient>(
    rep: Representation,
    d1: &Derivation<C>,
    d2: &Derivation<C>,
) -> Result<Option<NonsplitWitness<C>>> {
    let alpha = Arc::new(make_alpha(d1, d2, rep)?);
    if !derivations_independent(d1, d2) || rep.weight_square_sum() == 0 {
        return Ok(None);
    }
    let m = d1.nvars();
    let mut candidates = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i != j {
                candidates.push((RatFunc::var(i), RatFunc::var(j)));
            }
        }
    }
    let mut rng = rng_from_seed(WITNESS_SEED);
    let shape = parameter_shape(m, 2);
    for _ in 0..RANDOM_CANDIDATES {
        candidates.push((
            random_nonconstant_ratfunc(&mut rng, &shape),
            random_nonconstant_ratfunc(&mut rng, &shape),
        ));
    }
    for (s, t) in candidates {
        let c = torus_commutator(&s, &t, &alpha)?;
        if !c.scalar_part().is_zero() {
            return Ok(Some(NonsplitWitness {
                s,
                t,
                value: c.scalar_part().clone(),
            }));
        }
    }
    Ok(None)
}

/// Realizes the central element with scalar
/// `(sum d_i^2)(d1(s) d2(t) - d1(t) d2(s)) / (st)` as the commutator of the
/// torus lifts of `s` and `t`.
pub fn perfectness_family<C: Coefficient>(
    s: &RatFunc<C>,
    t: &RatFunc<C>,
    rep: Representation,
    d1: &Derivation<C>,
    d2: &Derivation<C>,
) -> Result<ExtElement<C>> {
    let alpha = Arc::new(make_alpha(d1, d2, rep)?);
    let c = torus_commutator(s, t, &alpha)?;
    debug_assert!(c.group_part().is_identity());
    Ok(c)
}
