use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::scalar::{Field, Ring};

pub type Vector<R> = Vec<R>;

/// The `i`-th standard basis vector of length `n` (1-based `i`).
pub fn unit<R: Ring>(n: usize, i: usize) -> Vector<R> {
    let mut v = vec![R::zero(); n];
    v[i - 1] = R::one();
    v
}

/// `x + a·y`.
pub fn axpy<R: Ring>(x: &[R], a: &R, y: &[R]) -> Vector<R> {
    x.iter()
        .zip(y)
        .map(|(xi, yi)| xi.clone() + a.clone() * yi.clone())
        .collect()
}

pub fn scale<R: Ring>(a: &R, x: &[R]) -> Vector<R> {
    x.iter().map(|xi| a.clone() * xi.clone()).collect()
}

pub fn is_zero_vec<R: Ring>(x: &[R]) -> bool {
    x.iter().all(R::is_zero)
}

/// Which row supplies the pivot when several are nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    /// The topmost candidate row.
    FirstNonzero,
    /// The bottommost candidate row.
    LastNonzero,
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for r in 0..self.rows {
            l.entry(&&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        l.finish()
    }
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    /// Builds a matrix from rows, which must all have length `cols`.
    pub fn from_rows(rows: Vec<Vector<R>>, cols: usize) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(columns: &[Vector<R>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: R) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vector<R> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector<R>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[R]) -> Vector<R> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(R::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        assert_eq!(self.rows, self.cols, "square matrix");
        (0..k).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<R: Field> Matrix<R> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        self.rref_with(PivotRule::FirstNonzero)
    }

    pub fn rref_with(&self, rule: PivotRule) -> (Self, Vec<usize>) {
        let (rows, pivots) = reduce_rows(self.row_vectors(), self.cols, rule);
        let n = rows.len();
        let mut m = Matrix::from_rows(rows, self.cols);
        m.rows = n;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rank_with(PivotRule::FirstNonzero)
    }

    pub fn rank_with(&self, rule: PivotRule) -> usize {
        reduce_rows(self.row_vectors(), self.cols, rule).1.len()
    }

    /// A basis of `{ x : self · x = 0 }`.
    pub fn kernel(&self) -> Vec<Vector<R>> {
        let (rows, pivots) = reduce_rows(self.row_vectors(), self.cols, PivotRule::FirstNonzero);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![R::zero(); self.cols];
                x[f] = R::one();
                for (row, &p) in rows.iter().zip(&pivots) {
                    x[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }
}

/// Gauss-Jordan elimination. Returns the nonzero rows of the reduced echelon
/// form (unit pivots) and the pivot columns.
pub(crate) fn reduce_rows<R: Field>(
    mut rows: Vec<Vector<R>>,
    cols: usize,
    rule: PivotRule,
) -> (Vec<Vector<R>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        let candidates = top..rows.len();
        let found = match rule {
            PivotRule::FirstNonzero => candidates.clone().find(|&r| !rows[r][c].is_zero()),
            PivotRule::LastNonzero => candidates.clone().rev().find(|&r| !rows[r][c].is_zero()),
        };
        let Some(p) = found else { continue };
        rows.swap(top, p);
        let inv = R::one() / rows[top][c].clone();
        rows[top] = scale(&inv, &rows[top]);
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != top && !row[c].is_zero() {
                let f = -row[c].clone();
                *row = axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        top += 1;
    }
    rows.truncate(top);
    (rows, pivots)
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;

    fn mul(self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::<R>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let x = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, x);
                    }
                }
            }
        }
        out
    }
}

impl<R: Ring> Add for &Matrix<R> {
    type Output = Matrix<R>;

    fn add(self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<R: Ring> Sub for &Matrix<R> {
    type Output = Matrix<R>;

    fn sub(self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

/// Serializes as an array of rows, each an array of entry strings.
impl<R: fmt::Display> Serialize for Matrix<R> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            let row: Vec<String> =
                self.data[r * self.cols..(r + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_rational::Ratio;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows[0].len();
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect(),
            cols,
        )
    }

    #[test]
    fn rank_and_kernel() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_with(PivotRule::LastNonzero), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(is_zero_vec(&m.mul_vec(&ker[0])));
        assert_eq!(Matrix::<Rational>::identity(4).rank(), 4);
        assert_eq!(Matrix::<Rational>::zeros(3, 2).kernel().len(), 2);
    }

    #[test]
    fn rref_is_canonical() {
        let m = qm(&[&[0, 2, 4], &[1, 1, 1]]);
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r, qm(&[&[1, 0, -1], &[0, 1, 2]]));
        assert_eq!(m.rref_with(PivotRule::LastNonzero).0, r);
    }

    #[test]
    fn products_and_powers() {
        let shift = qm(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(!shift.pow(2).is_zero());
        assert!(shift.pow(3).is_zero());
        assert_eq!(shift.transpose().transpose(), shift);
        assert_eq!(&shift + &shift, shift.map(|x| x * q(2, 1)));
        assert!((&shift - &shift).is_zero());
        assert_eq!(shift.mul_vec(&[q(1, 1), q(2, 1), q(3, 1)]), vec![q(2, 1), q(3, 1), q(0, 1)]);
    }

    #[test]
    fn works_over_machine_rationals() {
        let m: Matrix<Ratio<i64>> = Matrix::from_rows(
            vec![
                vec![Ratio::new(1, 2), Ratio::new(1, 3)],
                vec![Ratio::new(3, 2), Ratio::new(1, 1)],
            ],
            2,
        );
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn json_strings() {
        let m = Matrix::from_rows(vec![vec![q(1, 2), q(-3, 1)]], 2);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"[["1/2","-3"]]"#);
    }
}
