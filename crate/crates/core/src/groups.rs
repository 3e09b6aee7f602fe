// SPDX-License-Identifier: Apache-2.0

//! Elements of `SL2(K)`, seeded sampling, and the natural and adjoint
//! representations with their torus weights.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::random::{random_nonzero_ratfunc, random_ratfunc, RandomShape};
use crate::field::{Coefficient, RatFunc};
use crate::linalg::Matrix;
use crate::rng::rng_from_seed;

type Mat<C> = Matrix<RatFunc<C>>;

/// An invertible matrix together with its inverse.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupElement<C> {
    mat: Mat<C>,
    inv: Mat<C>,
}

impl<C: Coefficient> GroupElement<C> {
    pub fn new(mat: Mat<C>) -> Result<Self> {
        let inv = mat.inverse()?.ok_or(Error::NotInvertible)?;
        Ok(GroupElement { mat, inv })
    }

    /// Pairs a matrix with an inverse the caller has already computed.
    pub fn from_parts(mat: Mat<C>, inv: Mat<C>) -> Self {
        debug_assert!(mat.mul(&inv).map(|p| p.is_identity()).unwrap_or(false));
        GroupElement { mat, inv }
    }

    pub fn identity(n: usize) -> Self {
        GroupElement {
            mat: Matrix::identity(n),
            inv: Matrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &Mat<C> {
        &self.mat
    }

    pub fn inverse_matrix(&self) -> &Mat<C> {
        &self.inv
    }

    pub fn inverse(&self) -> Self {
        GroupElement {
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(GroupElement {
            mat: self.mat.mul(&other.mat)?,
            inv: other.inv.mul(&self.inv)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    pub fn det(&self) -> RatFunc<C> {
        self.mat.determinant().expect("group elements are square")
    }

    /// `g M g^-1`.
    pub fn conjugate(&self, m: &Mat<C>) -> Result<Mat<C>> {
        m.sandwich(&self.mat, &self.inv)
    }
}

impl<C: Coefficient> fmt::Display for GroupElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mat)
    }
}

/// The generating families of `SL2`.
#[derive(Clone, PartialEq, Debug)]
pub enum Generator<C> {
    /// `[[1, f], [0, 1]]`
    Upper(RatFunc<C>),
    /// `[[1, 0], [f, 1]]`
    Lower(RatFunc<C>),
    /// `diag(u, 1/u)`
    Torus(RatFunc<C>),
}

pub fn sl2_generator<C: Coefficient>(kind: &Generator<C>) -> Result<GroupElement<C>> {
    let (o, z) = (RatFunc::<C>::one(), RatFunc::<C>::zero());
    let m2 = |a: &RatFunc<C>, b: &RatFunc<C>, c: &RatFunc<C>, d: &RatFunc<C>| {
        Matrix::new(2, 2, vec![a.clone(), b.clone(), c.clone(), d.clone()]).expect("2x2")
    };
    Ok(match kind {
        Generator::Upper(f) => GroupElement::from_parts(m2(&o, f, &z, &o), m2(&o, &-f, &z, &o)),
        Generator::Lower(f) => GroupElement::from_parts(m2(&o, &z, f, &o), m2(&o, &z, &-f, &o)),
        Generator::Torus(u) => {
            let ui = u.try_inv().map_err(|_| Error::NotInvertible)?;
            GroupElement::from_parts(m2(u, &z, &z, &ui), m2(&ui, &z, &z, u))
        }
    })
}

pub fn elem_upper<C: Coefficient>(f: RatFunc<C>) -> GroupElement<C> {
    sl2_generator(&Generator::Upper(f)).expect("unipotent generators are invertible")
}

pub fn elem_lower<C: Coefficient>(f: RatFunc<C>) -> GroupElement<C> {
    sl2_generator(&Generator::Lower(f)).expect("unipotent generators are invertible")
}

/// `nu(u) = diag(u, 1/u)`.
pub fn torus<C: Coefficient>(u: RatFunc<C>) -> Result<GroupElement<C>> {
    sl2_generator(&Generator::Torus(u))
}

/// Shape of the parameters fed to random generators.
pub fn parameter_shape(nvars: usize, degree_cap: u32) -> RandomShape {
    RandomShape {
        nvars,
        max_degree: degree_cap,
        max_terms: 2,
        coeff_bound: 2,
    }
}

/// Draws one random generator.
pub fn random_generator<C: Coefficient, R: Rng + ?Sized>(
    rng: &mut R,
    nvars: usize,
    degree_cap: u32,
) -> Generator<C> {
    let shape = parameter_shape(nvars, degree_cap);
    match rng.gen_range(0..3) {
        0 => Generator::Upper(random_ratfunc(rng, &shape)),
        1 => Generator::Lower(random_ratfunc(rng, &shape)),
        _ => Generator::Torus(random_nonzero_ratfunc(rng, &shape)),
    }
}

/// A random product of one to four generators.
pub fn random_sl2<C: Coefficient, R: Rng + ?Sized>(
    rng: &mut R,
    nvars: usize,
    degree_cap: u32,
) -> GroupElement<C> {
    let len = rng.gen_range(1..=4);
    let mut g = GroupElement::identity(2);
    for _ in 0..len {
        let s = sl2_generator(&random_generator(rng, nvars, degree_cap)).expect("nonzero torus");
        g = g.mul(&s).expect("2x2");
    }
    g
}

/// `count` deterministic samples of `SL2(K)` over `nvars` variables; every
/// element is a product of at most four generators whose parameters have
/// total degree at most `degree_cap`.
pub fn sample_sl2<C: Coefficient>(
    seed: u64,
    count: usize,
    degree_cap: u32,
    nvars: usize,
) -> Vec<GroupElement<C>> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| random_sl2(&mut rng, nvars, degree_cap.max(1)))
        .collect()
}

/// A finite-dimensional representation of `SL2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Representation {
    /// `K^2` with the identity action; weights `(1, -1)`.
    Natural,
    /// Conjugation on trace-zero matrices in the basis `(E12, H, E21)`;
    /// weights `(2, 0, -2)`.
    Adjoint,
    /// The trivial module of the given dimension; all weights zero.
    Trivial(usize),
}

impl Representation {
    pub fn name(&self) -> String {
        match self {
            Representation::Natural => "natural".into(),
            Representation::Adjoint => "adjoint".into(),
            Representation::Trivial(n) => format!("trivial{n}"),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Representation::Natural => 2,
            Representation::Adjoint => 3,
            Representation::Trivial(n) => *n,
        }
    }

    pub fn weights(&self) -> Vec<i32> {
        match self {
            Representation::Natural => vec![1, -1],
            Representation::Adjoint => vec![2, 0, -2],
            Representation::Trivial(n) => vec![0; *n],
        }
    }

    pub fn weight_square_sum(&self) -> i64 {
        self.weights()
            .iter()
            .map(|&d| i64::from(d) * i64::from(d))
            .sum()
    }

    /// The image of a 2x2 element.
    pub fn apply<C: Coefficient>(&self, g: &GroupElement<C>) -> Result<GroupElement<C>> {
        if g.dim() != 2 {
            return Err(Error::ShapeError(format!(
                "{} acts on 2x2 matrices, got {}x{}",
                self.name(),
                g.dim(),
                g.dim()
            )));
        }
        Ok(match self {
            Representation::Natural => g.clone(),
            Representation::Adjoint => {
                GroupElement::from_parts(adjoint_matrix(g.matrix(), g.inverse_matrix())?, {
                    adjoint_matrix(g.inverse_matrix(), g.matrix())?
                })
            }
            Representation::Trivial(n) => GroupElement::identity(*n),
        })
    }

    /// The image of `nu(u)`, computed from the weights.
    pub fn torus_image<C: Coefficient>(&self, u: &RatFunc<C>) -> Result<GroupElement<C>> {
        let ui = u.try_inv().map_err(|_| Error::NotInvertible)?;
        let w = self.weights();
        let pow = |e: i32| u.powi(e);
        let diag = w.iter().map(|&d| pow(d)).collect::<Result<Vec<_>>>()?;
        let diag_inv = w.iter().map(|&d| ui.powi(d)).collect::<Result<Vec<_>>>()?;
        Ok(GroupElement::from_parts(
            Matrix::diagonal(diag),
            Matrix::diagonal(diag_inv),
        ))
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Coordinates of a trace-zero 2x2 matrix in the basis `(E12, H, E21)`.
fn sl2_coords<C: Coefficient>(m: &Mat<C>) -> [RatFunc<C>; 3] {
    [
        m.get(0, 1).clone(),
        m.get(0, 0).clone(),
        m.get(1, 0).clone(),
    ]
}

fn adjoint_matrix<C: Coefficient>(g: &Mat<C>, ginv: &Mat<C>) -> Result<Mat<C>> {
    let basis: [Mat<C>; 3] = [
        Matrix::unit(2, 0, 1),
        Matrix::diagonal(vec![RatFunc::one(), -RatFunc::<C>::one()]),
        Matrix::unit(2, 1, 0),
    ];
    let mut out = Matrix::zeros(3, 3);
    for (j, x) in basis.iter().enumerate() {
        for (i, c) in sl2_coords(&x.sandwich(g, ginv)?).into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type R = RatFunc<BigRational>;
    type G = GroupElement<BigRational>;

    fn t(i: usize) -> R {
        R::var(i)
    }

    #[test]
    fn generators() {
        assert!(elem_upper(R::zero()).is_identity());
        let n = torus(t(0)).unwrap();
        assert_eq!(
            n.matrix(),
            &Matrix::diagonal(vec![t(0), t(0).try_inv().unwrap()])
        );
        assert_eq!(torus(R::zero()), Err(Error::NotInvertible));
        let inv_t1 = -t(0).try_inv().unwrap();
        let g = elem_upper(t(0)).mul(&elem_lower(inv_t1)).unwrap();
        assert!(g.det().is_one());
        assert!(g.mul(&g.inverse()).unwrap().is_identity());
    }

    #[test]
    fn sampling() {
        assert!(sample_sl2::<BigRational>(1, 0, 3, 2).is_empty());
        let a = sample_sl2::<BigRational>(5, 8, 3, 2);
        let b = sample_sl2::<BigRational>(5, 8, 3, 2);
        assert_eq!(a, b);
        for g in &a {
            assert!(g.det().is_one());
            assert!(g.matrix().mul(g.inverse_matrix()).unwrap().is_identity());
        }
    }

    #[test]
    fn weights() {
        assert_eq!(Representation::Natural.weight_square_sum(), 2);
        assert_eq!(Representation::Adjoint.weight_square_sum(), 8);
        assert_eq!(Representation::Trivial(4).weight_square_sum(), 0);
    }

    #[test]
    fn adjoint_images() {
        let rep = Representation::Adjoint;
        let u = t(0) + t(1);
        let img = rep.apply(&torus(u.clone()).unwrap()).unwrap();
        let u2 = &u * &u;
        assert_eq!(
            img.matrix(),
            &Matrix::diagonal(vec![u2.clone(), R::one(), u2.try_inv().unwrap()])
        );
        assert_eq!(&rep.torus_image(&u).unwrap(), &img);
        assert!(rep.apply(&G::identity(2)).unwrap().is_identity());
        let g = sample_sl2::<BigRational>(3, 1, 2, 2).remove(0);
        assert_eq!(Representation::Natural.apply(&g).unwrap(), g);
    }

    #[test]
    fn adjoint_matches_closed_form() {
        // oracle: columns are g E12 g^-1, g H g^-1, g E21 g^-1 expanded by hand
        for g in sample_sl2::<BigRational>(11, 5, 2, 2) {
            let m = g.matrix();
            let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
            let two = R::from_i64(2);
            let expected = Matrix::from_rows(vec![
                vec![a * a, -(&two * &(a * b)), -(b * b)],
                vec![-(a * c), a * d + b * c, b * d],
                vec![-(c * c), &two * &(c * d), d * d],
            ])
            .unwrap();
            assert_eq!(
                Representation::Adjoint.apply(&g).unwrap().matrix(),
                &expected
            );
        }
    }

    #[test]
    fn adjoint_is_multiplicative() {
        let gs = sample_sl2::<BigRational>(21, 6, 2, 2);
        let rep = Representation::Adjoint;
        for pair in gs.chunks(2) {
            let (g, h) = (&pair[0], &pair[1]);
            let lhs = rep.apply(&g.mul(h).unwrap()).unwrap();
            let rhs = rep.apply(g).unwrap().mul(&rep.apply(h).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
