//! Exact linear algebra over the rationals or a prime field.

mod field;
mod matrix;
mod subspace;

use thiserror::Error;

pub use field::{Field, Scalar};
pub use matrix::{DenseMatrix, Rref};
pub use subspace::{homology_dim, induced_map, subquotient, Subquotient, SubspaceBasis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("subspace is not contained in the larger subspace")]
    NotSubspace,
    #[error("composition of consecutive maps is nonzero")]
    NonzeroComposition,
    #[error("map does not respect the subquotient filtrations")]
    FiltrationViolated,
}
