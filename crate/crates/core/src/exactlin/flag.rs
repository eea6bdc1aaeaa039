use serde::Serialize;

use super::matrix::{unit, Matrix, Vector};
use super::operator::{BilinearForm, NilpotentOperator};
use super::perm::Permutation;
use super::subspace::Subspace;
use super::LinAlgError;
use crate::partitions::Partition;
use crate::scalar::Field;
use crate::tableaux::{ShapeChain, StandardTableau};

/// A complete flag `V_i = span(w_1, …, w_i)` in `F^n`.
///
/// Serializes as the matrix whose rows are `w_1, …, w_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent, bound(serialize = "F: std::fmt::Display"))]
pub struct Flag<F> {
    basis: Matrix<F>,
}

impl<F: Field> Flag<F> {
    /// Vectors must be `n` independent vectors of length `n`.
    pub fn new(vectors: Vec<Vector<F>>) -> Result<Self, LinAlgError> {
        let n = vectors.len();
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(LinAlgError::DimensionMismatch { expected: n, actual: v.len() });
        }
        let basis = Matrix::from_rows(vectors, n);
        if basis.rank() != n {
            return Err(LinAlgError::Dependent);
        }
        Ok(Flag { basis })
    }

    /// `F_σ`: `w_i = e_{σ(i)}`.
    pub fn jordan(sigma: &Permutation) -> Self {
        let n = sigma.n();
        let rows = (1..=n).map(|i| unit(n, sigma.apply(i))).collect();
        Flag { basis: Matrix::from_rows(rows, n) }
    }

    /// The flag through a nested chain `V_0 ⊂ V_1 ⊂ … ⊂ V_n`.
    pub fn from_chain(chain: &[Subspace<F>]) -> Result<Self, LinAlgError> {
        let n = chain.len().checked_sub(1).ok_or(LinAlgError::BadChain(0))?;
        let mut vectors = Vec::with_capacity(n);
        for (i, w) in chain.windows(2).enumerate() {
            if w[1].ambient() != n || w[1].dim() != i + 1 || !w[1].contains_subspace(&w[0]) {
                return Err(LinAlgError::BadChain(i + 1));
            }
            let v = w[1].basis().into_iter().find(|v| !w[0].contains(v)).expect("dimension grew");
            vectors.push(v);
        }
        Flag::new(vectors)
    }

    pub fn n(&self) -> usize {
        self.basis.num_rows()
    }

    pub fn vectors(&self) -> Vec<Vector<F>> {
        self.basis.row_vectors()
    }

    pub fn basis_matrix(&self) -> &Matrix<F> {
        &self.basis
    }

    /// `V_i`, `0 ≤ i ≤ n`.
    pub fn subspace(&self, i: usize) -> Subspace<F> {
        let vs: Vec<_> = (0..i).map(|r| self.basis.row(r)).collect();
        Subspace::span(self.n(), &vs)
    }

    /// `V_0, …, V_n`.
    pub fn subspaces(&self) -> Vec<Subspace<F>> {
        (0..=self.n()).map(|i| self.subspace(i)).collect()
    }

    /// Equality as flags, regardless of the chosen basis.
    pub fn same_as(&self, other: &Flag<F>) -> bool {
        self.n() == other.n() && (1..self.n()).all(|i| self.subspace(i) == other.subspace(i))
    }

    pub fn is_stable(&self, u: &Matrix<F>) -> bool {
        (1..self.n()).all(|i| self.subspace(i).is_stable(u))
    }

    /// `g · F`.
    pub fn transform(&self, g: &Matrix<F>) -> Result<Self, LinAlgError> {
        Flag::new(self.vectors().iter().map(|v| g.mul_vec(v)).collect())
    }
}

fn require_member<F: Field>(flag: &Flag<F>, u: &NilpotentOperator<F>) -> Result<(), LinAlgError> {
    if flag.n() != u.n() {
        return Err(LinAlgError::DimensionMismatch { expected: u.n(), actual: flag.n() });
    }
    if !flag.is_stable(u.matrix()) {
        return Err(LinAlgError::NotStable);
    }
    Ok(())
}

/// The tableau `T` with `F ∈ F_T`: `V_i` restricts `u` to shape `sh π_{1,i}(T)`.
pub fn cell_of<F: Field>(flag: &Flag<F>, u: &NilpotentOperator<F>) -> Result<StandardTableau, LinAlgError> {
    require_member(flag, u)?;
    let shapes = flag
        .subspaces()
        .iter()
        .map(|w| u.restricted_type(w))
        .collect::<Result<Vec<Partition>, _>>()?;
    Ok(ShapeChain::new(shapes)?.to_tableau())
}

pub fn in_cell<F: Field>(
    flag: &Flag<F>,
    u: &NilpotentOperator<F>,
    t: &StandardTableau,
) -> Result<bool, LinAlgError> {
    Ok(cell_of(flag, u)? == *t)
}

/// The tableau `T` with `F ∈ F'_T`: `V/V_i` carries shape `sh π_{i+1,n}(T)`.
pub fn cell_prime_of<F: Field>(
    flag: &Flag<F>,
    u: &NilpotentOperator<F>,
) -> Result<StandardTableau, LinAlgError> {
    require_member(flag, u)?;
    let shapes = flag
        .subspaces()
        .iter()
        .map(|w| u.quotient_type(w))
        .collect::<Result<Vec<Partition>, _>>()?;
    Ok(StandardTableau::from_suffix_shapes(&shapes)?)
}

/// `(V_n^⊥, …, V_0^⊥)`.
pub fn perp_flag<F: Field>(flag: &Flag<F>, b: &BilinearForm<F>) -> Result<Flag<F>, LinAlgError> {
    if b.n() != flag.n() {
        return Err(LinAlgError::DimensionMismatch { expected: flag.n(), actual: b.n() });
    }
    if !b.is_nondegenerate() {
        return Err(LinAlgError::Degenerate);
    }
    let mut chain: Vec<_> = flag.subspaces().iter().map(|w| w.perp(b.gram())).collect();
    chain.reverse();
    Flag::from_chain(&chain)
}
