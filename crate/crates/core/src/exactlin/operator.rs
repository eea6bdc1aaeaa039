use serde::Serialize;

use super::matrix::{unit, Matrix, Vector};
use super::subspace::Subspace;
use super::LinAlgError;
use crate::partitions::Partition;
use crate::scalar::Field;
use crate::tableaux::StandardTableau;

/// A nilpotent endomorphism of `F^n` in Jordan form, with its Jordan basis
/// labeled by a standard tableau: each row `t_{i,1}, …, t_{i,m}` is one chain
/// `e_{t_{i,m}} ↦ … ↦ e_{t_{i,1}} ↦ 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "F: std::fmt::Display"))]
pub struct NilpotentOperator<F> {
    matrix: Matrix<F>,
    basis_tableau: StandardTableau,
    jordan_type: Partition,
}

/// The operator whose Jordan basis is labeled by `t`.
pub fn jordan_operator<F: Field>(t: &StandardTableau) -> NilpotentOperator<F> {
    NilpotentOperator::from_tableau(t)
}

impl<F: Field> NilpotentOperator<F> {
    pub fn from_tableau(t: &StandardTableau) -> Self {
        let n = t.n();
        let mut matrix = Matrix::zeros(n, n);
        for row in t.rows() {
            for w in row.windows(2) {
                matrix.set(w[0] - 1, w[1] - 1, F::one());
            }
        }
        NilpotentOperator { matrix, basis_tableau: t.clone(), jordan_type: t.shape() }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn basis_tableau(&self) -> &StandardTableau {
        &self.basis_tableau
    }

    pub fn jordan_type(&self) -> &Partition {
        &self.jordan_type
    }

    pub fn n(&self) -> usize {
        self.matrix.num_rows()
    }

    pub fn apply(&self, v: &[F]) -> Vector<F> {
        self.matrix.mul_vec(v)
    }

    fn require_stable(&self, w: &Subspace<F>) -> Result<(), LinAlgError> {
        if w.ambient() != self.n() {
            return Err(LinAlgError::DimensionMismatch { expected: self.n(), actual: w.ambient() });
        }
        if !w.is_stable(&self.matrix) {
            return Err(LinAlgError::NotStable);
        }
        Ok(())
    }

    /// Jordan type of `u` restricted to the stable subspace `w`.
    pub fn restricted_type(&self, w: &Subspace<F>) -> Result<Partition, LinAlgError> {
        self.require_stable(w)?;
        let mut kernel_dims = vec![0];
        let mut image = w.clone();
        while image.dim() > 0 {
            image = image.image(&self.matrix);
            kernel_dims.push(w.dim() - image.dim());
        }
        Ok(from_kernel_dims(&kernel_dims))
    }

    /// Jordan type of the operator induced by `u` on `F^n / w`.
    pub fn quotient_type(&self, w: &Subspace<F>) -> Result<Partition, LinAlgError> {
        self.require_stable(w)?;
        let mut kernel_dims = vec![0];
        let mut pre = w.clone();
        while pre.dim() < self.n() {
            pre = pre.preimage(&self.matrix);
            kernel_dims.push(pre.dim() - w.dim());
        }
        Ok(from_kernel_dims(&kernel_dims))
    }

    /// The chain-pairing form: `b(e_{t_{i,j}}, e_{t_{i,m+1−j}}) = 1` within
    /// each row of length `m`, zero otherwise.
    pub fn chain_form(&self) -> BilinearForm<F> {
        let n = self.n();
        let mut gram = Matrix::zeros(n, n);
        for row in self.basis_tableau.rows() {
            for (a, b) in row.iter().zip(row.iter().rev()) {
                gram.set(a - 1, b - 1, F::one());
            }
        }
        BilinearForm { gram }
    }
}

/// Partition whose conjugate parts are the successive differences of
/// `kernel_dims = (0, dim ker A, dim ker A², …)`.
fn from_kernel_dims(kernel_dims: &[usize]) -> Partition {
    let columns = kernel_dims.windows(2).map(|w| w[1] - w[0]).filter(|&c| c > 0).collect();
    Partition::from_row_lengths(columns).conjugate()
}

/// A bilinear form on `F^n`, given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "F: std::fmt::Display"))]
pub struct BilinearForm<F> {
    gram: Matrix<F>,
}

impl<F: Field> BilinearForm<F> {
    pub fn new(gram: Matrix<F>) -> Result<Self, LinAlgError> {
        if gram.num_rows() != gram.num_cols() {
            return Err(LinAlgError::DimensionMismatch { expected: gram.num_rows(), actual: gram.num_cols() });
        }
        Ok(BilinearForm { gram })
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn n(&self) -> usize {
        self.gram.num_rows()
    }

    pub fn eval(&self, x: &[F], y: &[F]) -> F {
        x.iter()
            .zip(self.gram.mul_vec(y))
            .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b)
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram.transpose() == self.gram
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.n()
    }

    /// `b(ux, y) = b(x, uy)` on all basis pairs.
    pub fn is_self_adjoint(&self, u: &Matrix<F>) -> bool {
        let n = self.n();
        (1..=n).all(|i| {
            (1..=n).all(|j| {
                let (x, y) = (unit(n, i), unit(n, j));
                self.eval(&u.mul_vec(&x), &y) == self.eval(&x, &u.mul_vec(&y))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn st(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn op(s: &str) -> NilpotentOperator<Rational> {
        jordan_operator(&st(s))
    }

    fn e(n: usize, i: usize) -> Vector<Rational> {
        unit(n, i)
    }

    fn span(n: usize, idx: &[usize]) -> Subspace<Rational> {
        Subspace::span(n, &idx.iter().map(|&i| e(n, i)).collect::<Vec<_>>())
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn action_on_basis() {
        let u = op("1,3/2,4/5");
        for i in [1, 2, 5] {
            assert!(u.apply(&e(5, i)).iter().all(num_traits::Zero::is_zero));
        }
        assert_eq!(u.apply(&e(5, 3)), e(5, 1));
        assert_eq!(u.apply(&e(5, 4)), e(5, 2));

        let u = op("1,4,7/2,5/3,6");
        assert_eq!(u.apply(&e(7, 7)), e(7, 4));
        assert_eq!(u.apply(&e(7, 4)), e(7, 1));
        assert_eq!(u.apply(&e(7, 5)), e(7, 2));
        assert_eq!(u.apply(&e(7, 6)), e(7, 3));
        assert!(u.matrix().pow(3).is_zero());
        assert!(!u.matrix().pow(2).is_zero());

        let u = op("1,2,3,4");
        assert_eq!(u.apply(&e(4, 4)), e(4, 3));
        assert!(u.matrix().pow(4).is_zero());
    }

    #[test]
    fn restriction_types() {
        let u = op("1,4,7/2,5/3,6");
        assert_eq!(u.restricted_type(&span(7, &[1, 2])).unwrap(), p("1,1"));
        assert_eq!(u.restricted_type(&Subspace::full(7)).unwrap(), p("3,2,2"));
        assert_eq!(u.restricted_type(&span(7, &[1, 4, 7])).unwrap(), p("3"));
        assert_eq!(u.restricted_type(&Subspace::zero(7)).unwrap(), p(""));
        assert!(matches!(u.restricted_type(&span(7, &[4])), Err(LinAlgError::NotStable)));
    }

    #[test]
    fn quotient_types() {
        let u = op("1,4,7/2,5/3,6");
        assert_eq!(u.quotient_type(&Subspace::zero(7)).unwrap(), p("3,2,2"));
        assert_eq!(u.quotient_type(&Subspace::full(7)).unwrap(), p(""));
        assert_eq!(u.quotient_type(&span(7, &[1])).unwrap(), p("2,2,2"));
    }

    #[test]
    fn quotient_type_matches_explicit_quotient() {
        // Induced matrix on V/span(e1) in the basis e2..e7.
        let u = op("1,4,7/2,5/3,6");
        let m = u.matrix();
        let mut induced = Matrix::<Rational>::zeros(6, 6);
        for i in 1..7 {
            for j in 1..7 {
                induced.set(i - 1, j - 1, m.get(i, j).clone());
            }
        }
        let kernel_dims: Vec<usize> = (0..=3).map(|j| 6 - induced.pow(j).rank()).collect();
        assert_eq!(from_kernel_dims(&kernel_dims), p("2,2,2"));
    }

    #[test]
    fn chain_form_is_admissible() {
        for s in ["1,4,7/2,5/3,6", "1,3/2,4/5", "1,2,3,4", "1/2/3"] {
            let u = op(s);
            let b = u.chain_form();
            assert!(b.is_symmetric());
            assert!(b.is_nondegenerate());
            assert!(b.is_self_adjoint(u.matrix()));
        }
    }
}
