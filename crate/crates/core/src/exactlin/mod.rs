//! Exact linear algebra over a field: matrices, subspaces, nilpotent
//! operators in Jordan form, flags, Spaltenstein cells and the charts around
//! special Jordan flags.

mod chart;
mod flag;
mod matrix;
mod operator;
mod perm;
mod subspace;

use thiserror::Error;

use crate::tableaux::TableauError;

pub use chart::{chart_coords, chart_flag, special_flag, ChartCoordinates};
pub use flag::{cell_of, cell_prime_of, in_cell, perp_flag, Flag};
pub use matrix::{axpy, is_zero_vec, scale, unit, Matrix, PivotRule, Vector};
pub use operator::{jordan_operator, BilinearForm, NilpotentOperator};
pub use perm::{
    degenerate_to_special, jordan_flag_perms, kk1_basis, reduce_a, shuffles, special_perm, Permutation,
};
pub use subspace::Subspace;

#[derive(Debug, Error, PartialEq)]
pub enum LinAlgError {
    #[error("subspace is not stable under the operator")]
    NotStable,
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("expected dimension {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("subspaces do not form a flag at step {0}")]
    BadChain(usize),
    #[error("flag is outside the chart of ({d}): zero pivot at step {step}")]
    OutsideChart { d: usize, step: usize },
    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}
