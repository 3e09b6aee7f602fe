// SPDX-License-Identifier: Apache-2.0

//! Dense matrices over an exact field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Coefficient, Derivation, RatFunc};
use crate::scalar::Field;

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Field> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeError(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeError("ragged rows".into()));
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn diagonal(entries: Vec<S>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    /// The matrix with a single 1 at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[i * n + j] = S::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.cols + j] = value;
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<T: Field>(&self, f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Field>(&self, f: impl FnMut(&S) -> Result<T>) -> Result<Matrix<T>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(k, e)| {
                if k / self.cols == k % self.cols {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeError(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_one() {
            return self.clone();
        }
        self.map(|e| e.mul_ref(c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeError(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    let prod = if a.is_one() { b.clone() } else { a.mul_ref(b) };
                    out.data[idx] = out.data[idx].add_ref(&prod);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::ShapeError(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(S::zero(), |acc, (a, x)| {
                    if a.is_zero() || x.is_zero() {
                        acc
                    } else {
                        acc.add_ref(&a.mul_ref(x))
                    }
                })
            })
            .collect())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `a * self * b`, the usual shape for conjugation by `a` with `b = a^-1`.
    pub fn sandwich(&self, a: &Self, b: &Self) -> Result<Self> {
        a.mul(self)?.mul(b)
    }

    /// The submatrix on rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_fn(
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => S::zero(),
            },
        )
    }

    pub fn trace(&self) -> Result<S> {
        self.require_square()?;
        Ok((0..self.rows).fold(S::zero(), |acc, i| acc.add_ref(self.get(i, i))))
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Result<S> {
        if self.cols != other.rows || self.rows != other.cols {
            return Err(Error::ShapeError("trace of a non-square product".into()));
        }
        let mut acc = S::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, i));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(acc)
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::ShapeError(format!(
                "{}x{} is not square",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<S> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(S::one());
        }
        let mut a = self.data.clone();
        let mut prev = S::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return Ok(S::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let lead = a[i * n + k].clone();
                for j in k + 1..n {
                    let mut v = a[i * n + j].mul_ref(&pivot);
                    if !lead.is_zero() && !a[k * n + j].is_zero() {
                        v = v.sub_ref(&lead.mul_ref(&a[k * n + j]));
                    }
                    a[i * n + j] = if prev.is_one() {
                        v
                    } else {
                        v.checked_div(&prev).expect("Bareiss pivots are nonzero")
                    };
                }
                a[i * n + k] = S::zero();
            }
            prev = pivot;
        }
        let det = a[n * n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Ok(None);
            };
            if p != k {
                for j in 0..n {
                    a.data.swap(k * n + j, p * n + j);
                    inv.data.swap(k * n + j, p * n + j);
                }
            }
            let pinv = a.get(k, k).inv().expect("pivot is nonzero");
            for j in 0..n {
                if !a.get(k, j).is_zero() {
                    a.data[k * n + j] = a.data[k * n + j].mul_ref(&pinv);
                }
                if !inv.get(k, j).is_zero() {
                    inv.data[k * n + j] = inv.data[k * n + j].mul_ref(&pinv);
                }
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                for j in 0..n {
                    let ak = a.get(k, j);
                    if !ak.is_zero() {
                        a.data[i * n + j] = a.data[i * n + j].sub_ref(&f.mul_ref(ak));
                    }
                    let ik = inv.get(k, j);
                    if !ik.is_zero() {
                        inv.data[i * n + j] = inv.data[i * n + j].sub_ref(&f.mul_ref(ik));
                    }
                }
            }
        }
        Ok(Some(inv))
    }

    /// `self^e` for `e >= 0`.
    pub fn pow(&self, e: u32) -> Result<Self> {
        self.require_square()?;
        let mut out = Self::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }
}

impl<C: Coefficient> Matrix<RatFunc<C>> {
    /// Entry-wise derivative.
    pub fn derive(&self, d: &Derivation<C>) -> Result<Self> {
        self.try_map(|e| d.apply(e))
    }
}

impl<S: Field + fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The flag `K ⊂ K ⊕ End(V) ⊂ W` with block sizes `(1, n^2, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlagSpec {
    n: usize,
}

impl FlagSpec {
    pub fn new(n: usize) -> Self {
        FlagSpec { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> [usize; 3] {
        [1, self.n * self.n, 1]
    }

    pub fn dim(&self) -> usize {
        self.n * self.n + 2
    }
}

/// Whether `p` maps the first coordinate line into itself and the span of
/// the first `n^2 + 1` coordinates into itself.
pub fn preserves_flag<S: Field>(p: &Matrix<S>, flag: &FlagSpec) -> bool {
    let dim = flag.dim();
    if p.rows() != dim || p.cols() != dim {
        return false;
    }
    let line = (1..dim).all(|i| p.get(i, 0).is_zero());
    let hyperplane = (0..dim - 1).all(|j| p.get(dim - 1, j).is_zero());
    line && hyperplane
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Derivation;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type R = RatFunc<BigRational>;
    type M = Matrix<R>;

    fn t(i: usize) -> R {
        R::var(i)
    }

    fn m2(a: R, b: R, c: R, d: R) -> M {
        M::from_rows(vec![vec![a, b], vec![c, d]]).unwrap()
    }

    fn inv_t1() -> R {
        t(0).try_inv().unwrap()
    }

    #[test]
    fn products() {
        let a = m2(t(0), R::one(), t(1), R::zero());
        assert_eq!(M::identity(2).mul(&a).unwrap(), a);
        let d = M::diagonal(vec![t(0), inv_t1()]);
        let e = M::diagonal(vec![inv_t1(), t(0)]);
        assert!(d.mul(&e).unwrap().is_identity());
        let u1 = m2(R::one(), t(0), R::zero(), R::one());
        let u2 = m2(R::one(), t(1), R::zero(), R::one());
        assert_eq!(
            u1.mul(&u2).unwrap(),
            m2(R::one(), t(0) + t(1), R::zero(), R::one())
        );
        assert!(matches!(
            M::identity(2).mul(&M::identity(3)),
            Err(Error::ShapeError(_))
        ));
        assert!(M::identity(2).add(&M::identity(3)).is_err());
    }

    #[test]
    fn determinant_inverse_trace() {
        let a = m2(t(0), R::one(), R::zero(), inv_t1());
        assert!(a.determinant().unwrap().is_one());
        let inv = a.inverse().unwrap().unwrap();
        assert_eq!(inv, m2(inv_t1(), -R::one(), R::zero(), t(0)));
        assert!(inv.mul(&a).unwrap().is_identity());
        assert!(a.mul(&inv).unwrap().is_identity());

        let i3 = M::identity(3);
        assert!(i3.determinant().unwrap().is_one());
        assert_eq!(i3.inverse().unwrap().unwrap(), i3);
        assert_eq!(i3.trace().unwrap(), R::from_i64(3));

        let s = m2(t(0), t(0), R::one(), R::one());
        assert!(s.determinant().unwrap().is_zero());
        assert!(s.inverse().unwrap().is_none());
    }

    #[test]
    fn bareiss_needs_a_row_swap() {
        let a = M::from_rows(vec![
            vec![R::zero(), R::one(), R::zero()],
            vec![t(0), R::zero(), R::one()],
            vec![R::one(), R::zero(), t(1)],
        ])
        .unwrap();
        // cofactor expansion along the first row: -det [[t1, 1], [1, t2]]
        let expected = R::one() - t(0) * t(1);
        assert_eq!(a.determinant().unwrap(), expected);
    }

    #[test]
    fn entrywise_derivative() {
        let d = Derivation::partial(0, 2).unwrap();
        assert!(M::identity(2).derive(&d).unwrap().is_zero());
        let u = m2(R::one(), t(0), R::zero(), R::one());
        assert_eq!(
            u.derive(&d).unwrap(),
            m2(R::zero(), R::one(), R::zero(), R::zero())
        );
        let n = M::diagonal(vec![t(0), inv_t1()]);
        let expected = M::diagonal(vec![R::one(), -(t(0) * t(0)).try_inv().unwrap()]);
        assert_eq!(n.derive(&d).unwrap(), expected);
    }

    #[test]
    fn flags() {
        let flag = FlagSpec::new(2);
        assert_eq!(flag.dim(), 6);
        assert_eq!(flag.blocks().iter().sum::<usize>(), 6);
        assert!(preserves_flag(&M::identity(6), &flag));
        let mut swap = M::identity(6);
        swap.set(0, 0, R::zero());
        swap.set(5, 5, R::zero());
        swap.set(0, 5, R::one());
        swap.set(5, 0, R::one());
        assert!(!preserves_flag(&swap, &flag));
        let mut corner = M::identity(6);
        corner.set(0, 5, t(0));
        assert!(preserves_flag(&corner, &flag));
    }

    #[test]
    fn display() {
        let u = m2(R::one(), t(0), R::zero(), R::one());
        assert_eq!(u.to_string(), "[[(1)/(1), (t1)/(1)], [(0)/(1), (1)/(1)]]");
    }
}
