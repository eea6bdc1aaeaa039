use serde::Serialize;

use super::flag::Flag;
use super::matrix::{axpy, scale, Matrix, Vector};
use super::perm::{special_perm, Permutation};
use super::LinAlgError;
use crate::scalar::Field;

/// Coordinates `φ_{i,j}` (`i < j`) of a flag in the chart `Ω_{(d)}`: the
/// unique basis `η_i = e_{(d)(i)} + Σ_{j>i} φ_{i,j} e_{(d)(j)}` with
/// `V_i = span(η_1, …, η_i)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "F: std::fmt::Display"))]
pub struct ChartCoordinates<F> {
    d: usize,
    n: usize,
    /// `phi[i−1][j−1] = φ_{i,j}`; zero on and below the diagonal.
    phi: Matrix<F>,
}

impl<F: Field> ChartCoordinates<F> {
    /// Coordinates from an upper triangular array; entries on or below the
    /// diagonal are ignored.
    pub fn new(d: usize, phi: Matrix<F>) -> Result<Self, LinAlgError> {
        let n = phi.num_rows();
        special_perm(d, n)?;
        let mut clean = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                clean.set(i, j, phi.get(i, j).clone());
            }
        }
        Ok(ChartCoordinates { d, n, phi: clean })
    }

    pub fn zero(d: usize, n: usize) -> Result<Self, LinAlgError> {
        Self::new(d, Matrix::zeros(n, n))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `φ_{i,j}`, 1-based.
    pub fn phi(&self, i: usize, j: usize) -> &F {
        self.phi.get(i - 1, j - 1)
    }

    pub fn set_phi(&mut self, i: usize, j: usize, x: F) {
        assert!(i < j && j <= self.n, "need i < j <= n");
        self.phi.set(i - 1, j - 1, x);
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero()
    }

    fn order(&self) -> Permutation {
        special_perm(self.d, self.n).expect("validated on construction")
    }

    /// `η_i` in standard coordinates.
    pub fn eta(&self, i: usize) -> Vector<F> {
        let p = self.order();
        let mut v = vec![F::zero(); self.n];
        v[p.apply(i) - 1] = F::one();
        for j in i + 1..=self.n {
            v[p.apply(j) - 1] = self.phi(i, j).clone();
        }
        v
    }
}

/// The chart coordinates of `flag` in `Ω_{(d)}`.
pub fn chart_coords<F: Field>(flag: &Flag<F>, d: usize) -> Result<ChartCoordinates<F>, LinAlgError> {
    let n = flag.n();
    let p = special_perm(d, n)?;
    let permuted = |v: &Vector<F>| -> Vector<F> { (1..=n).map(|m| v[p.apply(m) - 1].clone()).collect() };
    let mut etas: Vec<Vector<F>> = Vec::with_capacity(n);
    for (i, w) in flag.vectors().iter().enumerate() {
        let mut x = permuted(w);
        for (m, eta) in etas.iter().enumerate() {
            if !x[m].is_zero() {
                let c = -x[m].clone();
                x = axpy(&x, &c, eta);
            }
        }
        if x[i].is_zero() {
            return Err(LinAlgError::OutsideChart { d, step: i + 1 });
        }
        let inv = F::one() / x[i].clone();
        etas.push(scale(&inv, &x));
    }
    let mut phi = Matrix::zeros(n, n);
    for (i, eta) in etas.iter().enumerate() {
        for j in i + 1..n {
            phi.set(i, j, eta[j].clone());
        }
    }
    Ok(ChartCoordinates { d, n, phi })
}

/// The flag with the given chart coordinates.
pub fn chart_flag<F: Field>(coords: &ChartCoordinates<F>) -> Flag<F> {
    Flag::new((1..=coords.n).map(|i| coords.eta(i)).collect()).expect("unitriangular basis")
}

/// `F_{(d)}` for `n = 2k+1`.
pub fn special_flag<F: Field>(d: usize, k: usize) -> Result<Flag<F>, LinAlgError> {
    Ok(Flag::jordan(&special_perm(d, 2 * k + 1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::matrix::unit;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn special_flag_has_zero_coordinates() {
        for k in 1..=4 {
            for d in 3..=k + 2 {
                let f = special_flag::<Rational>(d, k).unwrap();
                let c = chart_coords(&f, d).unwrap();
                assert!(c.is_zero());
                assert!(chart_flag(&c).same_as(&f));
            }
        }
        assert!(special_flag::<Rational>(5, 2).is_err());
    }

    #[test]
    fn round_trip_from_coordinates() {
        let mut c = ChartCoordinates::<Rational>::zero(3, 5).unwrap();
        let mut x = 1;
        for i in 1..=5 {
            for j in i + 1..=5 {
                c.set_phi(i, j, q(x, 7 - x % 5));
                x = (x * 3 + 1) % 11 - 4;
            }
        }
        let f = chart_flag(&c);
        assert_eq!(chart_coords(&f, 3).unwrap(), c);
    }

    #[test]
    fn basis_choice_does_not_matter() {
        let mut c = ChartCoordinates::<Rational>::zero(4, 5).unwrap();
        c.set_phi(1, 2, q(2, 1));
        c.set_phi(2, 5, q(-1, 3));
        c.set_phi(3, 4, q(5, 2));
        let f = chart_flag(&c);
        let vs = f.vectors();
        let mixed: Vec<Vector<Rational>> = (0..5)
            .map(|i| {
                let mut v = scale(&q(i as i64 + 2, 1), &vs[i]);
                for m in 0..i {
                    v = axpy(&v, &q(m as i64 - 1, 2), &vs[m]);
                }
                v
            })
            .collect();
        let g = Flag::new(mixed).unwrap();
        assert!(g.same_as(&f));
        assert_eq!(chart_coords(&g, 4).unwrap(), c);
    }

    #[test]
    fn outside_chart() {
        let f = Flag::<Rational>::new(vec![unit(5, 3), unit(5, 1), unit(5, 2), unit(5, 4), unit(5, 5)]).unwrap();
        assert!(matches!(chart_coords(&f, 3), Err(LinAlgError::OutsideChart { step: 1, .. })));
    }
}
