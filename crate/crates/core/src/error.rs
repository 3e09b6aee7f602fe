// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the algebraic layers of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    ShapeError(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("coefficient module mismatch: {0}")]
    ModuleMismatch(String),
    #[error("extension elements belong to different cocycles")]
    IncompatibleExtension,
    #[error("matrix does not preserve the flag K < K+End(V) < W")]
    NotInP,
    #[error("matrix is not in SL2 (determinant {0})")]
    NotInSL2(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
