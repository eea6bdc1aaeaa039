//! Combinatorics and exact linear algebra for irreducible components of
//! Springer fibers in type A.

#![allow(clippy::needless_range_loop)]

pub mod certificates;
pub mod eqsmoves;
pub mod exactlin;
pub mod partitions;
pub mod scalar;
pub mod selftest;
pub mod tableaux;

pub use num_rational::BigRational as Rational;

pub type QMatrix = exactlin::Matrix<Rational>;
pub type QVector = exactlin::Vector<Rational>;
pub type QSubspace = exactlin::Subspace<Rational>;
pub type QFlag = exactlin::Flag<Rational>;
pub type QOperator = exactlin::NilpotentOperator<Rational>;
pub type QForm = exactlin::BilinearForm<Rational>;
pub type QChart = exactlin::ChartCoordinates<Rational>;
pub type QJet = certificates::Jet<Rational>;

/// `num / den` as an exact rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
