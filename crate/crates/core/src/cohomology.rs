// SPDX-License-Identifier: Apache-2.0

//! Inhomogeneous group cochains, the bar differential and cup products.
//!
//! Groups here are infinite, so cochains are black-box evaluators and
//! cocycle conditions are checked on supplied sample tuples.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Coefficient, RatFunc};
use crate::groups::GroupElement;
use crate::linalg::Matrix;

/// The coefficient module of a cochain.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoeffModule {
    /// `K` with trivial action.
    ScalarTrivial,
    /// `End(K^n)` with `g . M = g M g^-1`.
    EndConj(usize),
}

impl fmt::Display for CoeffModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffModule::ScalarTrivial => write!(f, "K"),
            CoeffModule::EndConj(n) => write!(f, "End(K^{n})"),
        }
    }
}

/// A value in a coefficient module.
#[derive(Clone, PartialEq, Debug)]
pub enum ModuleValue<C> {
    Scalar(RatFunc<C>),
    End(Matrix<RatFunc<C>>),
}

impl<C: Coefficient> ModuleValue<C> {
    pub fn zero(module: CoeffModule) -> Self {
        match module {
            CoeffModule::ScalarTrivial => ModuleValue::Scalar(RatFunc::zero()),
            CoeffModule::EndConj(n) => ModuleValue::End(Matrix::zeros(n, n)),
        }
    }

    pub fn module(&self) -> CoeffModule {
        match self {
            ModuleValue::Scalar(_) => CoeffModule::ScalarTrivial,
            ModuleValue::End(m) => CoeffModule::EndConj(m.rows()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ModuleValue::Scalar(x) => x.is_zero(),
            ModuleValue::End(m) => m.is_zero(),
        }
    }

    pub fn as_scalar(&self) -> Option<&RatFunc<C>> {
        match self {
            ModuleValue::Scalar(x) => Some(x),
            ModuleValue::End(_) => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&Matrix<RatFunc<C>>> {
        match self {
            ModuleValue::End(m) => Some(m),
            ModuleValue::Scalar(_) => None,
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::ModuleMismatch(format!("{} vs {}", self.module(), other.module()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (ModuleValue::Scalar(a), ModuleValue::Scalar(b)) => Ok(ModuleValue::Scalar(a + b)),
            (ModuleValue::End(a), ModuleValue::End(b)) => a
                .add(b)
                .map(ModuleValue::End)
                .map_err(|_| self.mismatch(other)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            ModuleValue::Scalar(a) => ModuleValue::Scalar(-a),
            ModuleValue::End(m) => ModuleValue::End(m.neg()),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `g . self`.
    pub fn act(&self, g: &GroupElement<C>) -> Result<Self> {
        match self {
            ModuleValue::Scalar(_) => Ok(self.clone()),
            ModuleValue::End(m) => {
                if g.dim() != m.rows() {
                    return Err(Error::ModuleMismatch(format!(
                        "{}x{} element acting on {}",
                        g.dim(),
                        g.dim(),
                        self.module()
                    )));
                }
                Ok(ModuleValue::End(g.conjugate(m)?))
            }
        }
    }
}

impl<C: Coefficient> fmt::Display for ModuleValue<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleValue::Scalar(x) => write!(f, "{x}"),
            ModuleValue::End(m) => write!(f, "{m}"),
        }
    }
}

type Evaluator<C> = Arc<dyn Fn(&[GroupElement<C>]) -> Result<ModuleValue<C>> + Send + Sync>;

/// A function `G^n -> A`.
#[derive(Clone)]
pub struct Cochain<C> {
    arity: usize,
    module: CoeffModule,
    eval: Evaluator<C>,
}

impl<C: Coefficient> Cochain<C> {
    pub fn new<F>(arity: usize, module: CoeffModule, f: F) -> Self
    where
        F: Fn(&[GroupElement<C>]) -> Result<ModuleValue<C>> + Send + Sync + 'static,
    {
        Cochain {
            arity,
            module,
            eval: Arc::new(f),
        }
    }

    /// The 0-cochain with value `v`.
    pub fn constant(v: ModuleValue<C>) -> Self {
        let module = v.module();
        Self::new(0, module, move |_| Ok(v.clone()))
    }

    pub fn zero(arity: usize, module: CoeffModule) -> Self {
        Self::new(arity, module, move |_| Ok(ModuleValue::zero(module)))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn module(&self) -> CoeffModule {
        self.module
    }

    pub fn evaluate(&self, args: &[GroupElement<C>]) -> Result<ModuleValue<C>> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        let v = (self.eval)(args)?;
        if v.module() != self.module {
            return Err(Error::ModuleMismatch(format!(
                "cochain declared in {} returned a value in {}",
                self.module,
                v.module()
            )));
        }
        Ok(v)
    }
}

impl<C> fmt::Debug for Cochain<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cochain")
            .field("arity", &self.arity)
            .field("module", &self.module)
            .finish_non_exhaustive()
    }
}

fn product<C: Coefficient>(gs: &[GroupElement<C>]) -> Result<GroupElement<C>> {
    let (first, rest) = gs.split_first().expect("nonempty product");
    rest.iter().try_fold(first.clone(), |acc, g| acc.mul(g))
}

/// The bar differential
/// `(df)(g0..gn) = g0 f(g1..gn) + sum_{i=1}^{n} (-1)^i f(.., g_{i-1} g_i, ..)
///  + (-1)^{n+1} f(g0..g_{n-1})`.
pub fn differential<C: Coefficient>(f: &Cochain<C>) -> Cochain<C> {
    let n = f.arity;
    let inner = f.clone();
    Cochain::new(n + 1, f.module, move |gs| {
        let mut acc = inner.evaluate(&gs[1..])?.act(&gs[0])?;
        for i in 1..=n {
            let mut args: Vec<GroupElement<C>> = Vec::with_capacity(n);
            args.extend_from_slice(&gs[..i - 1]);
            args.push(gs[i - 1].mul(&gs[i])?);
            args.extend_from_slice(&gs[i + 1..]);
            let term = inner.evaluate(&args)?;
            acc = if i % 2 == 0 {
                acc.add(&term)?
            } else {
                acc.sub(&term)?
            };
        }
        let last = inner.evaluate(&gs[..n])?;
        if n % 2 == 1 {
            acc.add(&last)
        } else {
            acc.sub(&last)
        }
    })
}

/// Outcome of a sampled cocycle test.
#[derive(Clone, PartialEq, Debug)]
pub struct CocycleCheck {
    pub holds: bool,
    pub checked: usize,
    /// Index of the first failing tuple and the nonzero value found there.
    pub witness: Option<(usize, String)>,
}

/// Evaluates `df` on every sample tuple and reports the first nonzero value.
pub fn is_cocycle<C: Coefficient>(
    f: &Cochain<C>,
    samples: &[Vec<GroupElement<C>>],
) -> Result<CocycleCheck> {
    let df = differential(f);
    for (i, tuple) in samples.iter().enumerate() {
        let v = df.evaluate(tuple)?;
        if !v.is_zero() {
            return Ok(CocycleCheck {
                holds: false,
                checked: i + 1,
                witness: Some((i, v.to_string())),
            });
        }
    }
    Ok(CocycleCheck {
        holds: true,
        checked: samples.len(),
        witness: None,
    })
}

/// A `G`-equivariant bilinear form into `K`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Pairing {
    /// Multiplication `K x K -> K`.
    Product,
    /// `A (x) B -> tr(AB)` on `End(V)`.
    Trace,
}

impl Pairing {
    pub fn apply<C: Coefficient>(
        &self,
        a: &ModuleValue<C>,
        b: &ModuleValue<C>,
    ) -> Result<RatFunc<C>> {
        match (self, a, b) {
            (Pairing::Product, ModuleValue::Scalar(x), ModuleValue::Scalar(y)) => Ok(x * y),
            (Pairing::Trace, ModuleValue::End(x), ModuleValue::End(y)) => x
                .trace_product(y)
                .map_err(|e| Error::ModuleMismatch(e.to_string())),
            _ => Err(Error::ModuleMismatch(format!(
                "{self:?} pairing on {} x {}",
                a.module(),
                b.module()
            ))),
        }
    }

    fn accepts(&self, a: CoeffModule, b: CoeffModule) -> bool {
        match self {
            Pairing::Product => a == CoeffModule::ScalarTrivial && b == CoeffModule::ScalarTrivial,
            Pairing::Trace => {
                matches!((a, b), (CoeffModule::EndConj(x), CoeffModule::EndConj(y)) if x == y)
            }
        }
    }
}

/// `(f u f2)(g1..g_{i+j}) = pair(f(g1..gi), (g1...gi) . f2(g_{i+1}..))`,
/// valued in `K` with trivial action.
pub fn cup<C: Coefficient>(f: &Cochain<C>, f2: &Cochain<C>, pair: Pairing) -> Result<Cochain<C>> {
    if !pair.accepts(f.module, f2.module) {
        return Err(Error::ModuleMismatch(format!(
            "{pair:?} pairing on {} x {}",
            f.module, f2.module
        )));
    }
    let (i, j) = (f.arity, f2.arity);
    let (f, f2) = (f.clone(), f2.clone());
    Ok(Cochain::new(i + j, CoeffModule::ScalarTrivial, move |gs| {
        let left = f.evaluate(&gs[..i])?;
        let mut right = f2.evaluate(&gs[i..])?;
        if i > 0 {
            right = right.act(&product(&gs[..i])?)?;
        }
        Ok(ModuleValue::Scalar(pair.apply(&left, &right)?))
    }))
}
