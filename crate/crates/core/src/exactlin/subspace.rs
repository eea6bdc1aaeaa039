use serde::Serialize;

use super::matrix::{reduce_rows, Matrix, PivotRule, Vector};
use crate::scalar::Field;

/// A linear subspace of `F^n`, stored by its reduced echelon basis.
///
/// Two subspaces are equal exactly when their stored bases are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(bound(serialize = "F: std::fmt::Display"))]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: usize, vectors: &[Vector<F>]) -> Self {
        let (rows, _) = reduce_rows(vectors.to_vec(), ambient, PivotRule::FirstNonzero);
        let basis = Matrix::from_rows(rows, ambient);
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.num_rows()
    }

    pub fn basis(&self) -> Vec<Vector<F>> {
        self.basis.row_vectors()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut rows = self.basis();
        rows.push(v.to_vec());
        reduce_rows(rows, self.ambient, PivotRule::FirstNonzero).1.len() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Self {
        let mut rows = self.basis();
        rows.extend(other.basis());
        Subspace::span(self.ambient, &rows)
    }

    /// Linear forms vanishing on the subspace, as coefficient vectors.
    pub fn annihilator(&self) -> Vec<Vector<F>> {
        self.basis.kernel()
    }

    /// `A(W)`.
    pub fn image(&self, a: &Matrix<F>) -> Self {
        let imgs: Vec<_> = self.basis().iter().map(|v| a.mul_vec(v)).collect();
        Subspace::span(a.num_rows(), &imgs)
    }

    /// `A^{-1}(W) = { x : A x ∈ W }`.
    pub fn preimage(&self, a: &Matrix<F>) -> Self {
        let ann = self.annihilator();
        if ann.is_empty() {
            return Subspace::full(a.num_cols());
        }
        let constraints = &Matrix::from_rows(ann, self.ambient) * a;
        Subspace::span(a.num_cols(), &constraints.kernel())
    }

    /// `{ x : b(x, w) = 0 for all w ∈ W }` for the form with Gram matrix `gram`.
    pub fn perp(&self, gram: &Matrix<F>) -> Self {
        let rows: Vec<_> = self.basis().iter().map(|w| gram.mul_vec(w)).collect();
        if rows.is_empty() {
            return Subspace::full(self.ambient);
        }
        Subspace::span(self.ambient, &Matrix::from_rows(rows, self.ambient).kernel())
    }

    pub fn is_stable(&self, a: &Matrix<F>) -> bool {
        self.basis().iter().all(|v| self.contains(&a.mul_vec(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::matrix::unit;
    use crate::Rational;

    fn e(n: usize, i: usize) -> Vector<Rational> {
        unit(n, i)
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(3, &[e(3, 1), e(3, 2)]);
        let b = Subspace::span(
            3,
            &[
                vec![crate::ratio(1, 1), crate::ratio(1, 1), crate::ratio(0, 1)],
                e(3, 2),
                e(3, 2),
            ],
        );
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(!a.contains(&e(3, 3)));
        assert_eq!(a.sum(&Subspace::span(3, &[e(3, 3)])), Subspace::full(3));
    }

    #[test]
    fn preimage_and_perp() {
        let mut shift = Matrix::<Rational>::zeros(3, 3);
        shift.set(0, 1, crate::ratio(1, 1));
        shift.set(1, 2, crate::ratio(1, 1));
        let w = Subspace::span(3, &[e(3, 1)]);
        assert_eq!(w.preimage(&shift), Subspace::span(3, &[e(3, 1), e(3, 2)]));
        assert_eq!(Subspace::zero(3).preimage(&shift), Subspace::span(3, &[e(3, 1)]));
        assert!(w.is_stable(&shift));
        assert!(!Subspace::span(3, &[e(3, 2)]).is_stable(&shift));
        let id = Matrix::identity(3);
        assert_eq!(w.perp(&id), Subspace::span(3, &[e(3, 2), e(3, 3)]));
        assert_eq!(Subspace::zero(3).perp(&id), Subspace::full(3));
        assert_eq!(w.image(&shift), Subspace::zero(3));
    }
}
