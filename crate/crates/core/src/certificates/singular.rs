use serde::Serialize;

use super::jet::Jet;
use super::{CertificateError, CertificateReport, Check};
use crate::exactlin::{in_cell, jordan_operator, Flag, Matrix, Permutation};
use crate::partitions::Partition;
use crate::scalar::Ring;
use crate::tableaux::StandardTableau;
use crate::{ratio, QMatrix, Rational};

/// The Jordan basis labeling: `e7 ↦ e4 ↦ e1`, `e5 ↦ e2`, `e6 ↦ e3`.
pub fn basis_tableau_322() -> StandardTableau {
    StandardTableau::new(vec![vec![1, 4, 7], vec![2, 5], vec![3, 6]]).expect("standard")
}

/// The tableau of the singular component.
pub fn singular_tableau_322() -> StandardTableau {
    StandardTableau::new(vec![vec![1, 2, 5], vec![3, 4], vec![6, 7]]).expect("standard")
}

/// The six-parameter family of strictly lower triangular 7×7 matrices.
pub fn f_family<R: Ring>(t: &[R; 6]) -> Matrix<R> {
    let [t1, t2, t3, t4, t5, t6] = t.clone();
    let p = |xs: &[&R]| xs.iter().fold(R::one(), |acc, x| acc * (*x).clone());
    let d41 = t4.clone() - t1.clone();
    let mut m = Matrix::zeros(7, 7);
    let entries = [
        ((2, 1), t1.clone()),
        ((3, 1), p(&[&t1, &t2])),
        ((3, 2), t2.clone() + t3.clone()),
        ((4, 2), p(&[&t3, &t4, &t5])),
        ((4, 3), p(&[&t4, &t5])),
        ((5, 2), p(&[&t1, &t3, &t4, &t5])),
        ((5, 3), p(&[&t1, &t4, &t5])),
        ((5, 4), t4.clone()),
        ((6, 2), p(&[&t1, &t2, &t3, &t4, &t5])),
        ((6, 3), p(&[&t1, &t2, &t4, &t5])),
        ((6, 4), p(&[&t2, &t4])),
        ((6, 5), t2.clone() + t6.clone()),
        ((7, 5), p(&[&t5, &t6, &d41])),
        ((7, 6), p(&[&t5, &d41])),
    ];
    for ((i, j), x) in entries {
        m.set(i - 1, j - 1, x);
    }
    m
}

/// The flag `(g + I)·F_0`, where `F_0` is the coordinate flag.
pub fn chart_point(g: &QMatrix) -> Result<crate::QFlag, CertificateError> {
    let n = g.num_rows();
    let id = Matrix::identity(n);
    Ok(Flag::jordan(&Permutation::identity(n)).transform(&(g + &id))?)
}

fn check_open_conditions(t: &[Rational; 6]) -> Result<(), CertificateError> {
    let names = ["t3", "t4", "t5", "t6"];
    for (name, x) in names.iter().zip(&t[2..]) {
        if num_traits::Zero::is_zero(x) {
            return Err(CertificateError::Precondition(format!("{name} must be nonzero")));
        }
    }
    if t[3] == t[0] {
        return Err(CertificateError::Precondition("t4 - t1 must be nonzero".into()));
    }
    Ok(())
}

/// Whether `(f(t) + I)·F_0` lies in the cell of the singular tableau.
pub fn verify_curve_membership(t: &[Rational; 6]) -> Result<bool, CertificateError> {
    check_open_conditions(t)?;
    let u = jordan_operator(&basis_tableau_322());
    let flag = chart_point(&f_family(t))?;
    Ok(in_cell(&flag, &u, &singular_tableau_322())?)
}

/// A curve `t ↦ f(base + t·direction)` through `0`.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessCurve {
    pub name: String,
    pub base: Vec<String>,
    pub direction: Vec<String>,
    /// Nonzero entries of the tangent vector at `t = 0`, like `E21+E31`.
    pub tangent: String,
    pub expected_tangent: String,
    /// Perturbed parameter points confirmed to lie in the cell.
    pub samples: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SingularityCertificate {
    pub shape: Partition,
    pub tableau: StandardTableau,
    pub basis_tableau: StandardTableau,
    pub tangent_dim_lower_bound: usize,
    pub component_dim: usize,
    pub membership_confirmations: usize,
    pub witness_curves: Vec<WitnessCurve>,
    pub verdict: bool,
}

impl SingularityCertificate {
    pub fn report(&self) -> CertificateReport {
        let mut checks = Vec::new();
        for c in &self.witness_curves {
            checks.push(Check::new(
                format!("tangent of {}", c.name),
                c.tangent == c.expected_tangent,
                c.tangent.clone(),
            ));
            checks.push(Check::new(
                format!("perturbed membership along {}", c.name),
                !c.samples.is_empty(),
                format!("{} points in the cell", c.samples.len()),
            ));
        }
        checks.push(Check::new(
            "tangent rank exceeds dimension",
            self.verdict,
            format!("rank {} vs dim {}", self.tangent_dim_lower_bound, self.component_dim),
        ));
        CertificateReport {
            case: format!("singular component {} of shape {}", self.tableau, self.shape),
            checks,
            verdict: if self.verdict { "singular" } else { "inconclusive" }.into(),
        }
    }
}

fn unit6(i: usize) -> [Rational; 6] {
    let mut v: [Rational; 6] = std::array::from_fn(|_| ratio(0, 1));
    v[i - 1] = ratio(1, 1);
    v
}

fn ints(xs: [i64; 6]) -> [Rational; 6] {
    xs.map(|x| ratio(x, 1))
}

/// The seven curves, with the tangent each should produce.
fn witness_specs() -> Vec<(String, [Rational; 6], [Rational; 6], &'static str)> {
    let zero = ints([0; 6]);
    let mut out = Vec::new();
    for (i, expected) in [(1, "E21"), (3, "E32"), (4, "E54"), (6, "E65")] {
        out.push((format!("iota_{i}"), zero.clone(), unit6(i), expected));
    }
    out.push(("f(t,1,-1,0,0,-1)".into(), ints([0, 1, -1, 0, 0, -1]), unit6(1), "E21+E31"));
    out.push(("f(0,1,-1,t,0,-1)".into(), ints([0, 1, -1, 0, 0, -1]), unit6(4), "E54+E64"));
    out.push(("f(0,0,0,t,1,0)".into(), ints([0, 0, 0, 0, 1, 0]), unit6(4), "E43+E54+E76"));
    out
}

fn describe(m: &QMatrix) -> String {
    let mut terms = Vec::new();
    for i in 0..m.num_rows() {
        for j in 0..m.num_cols() {
            let x = m.get(i, j);
            if *x == ratio(1, 1) {
                terms.push(format!("E{}{}", i + 1, j + 1));
            } else if !num_traits::Zero::is_zero(x) {
                terms.push(format!("{x}*E{}{}", i + 1, j + 1));
            }
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

/// Admissible points near the curve: `base + t0·direction + s·ε` for a few
/// `t0` and scales `s`.
fn perturbed_samples(base: &[Rational; 6], dir: &[Rational; 6], wanted: usize) -> Vec<[Rational; 6]> {
    let eps = [ratio(1, 3), ratio(1, 5), ratio(1, 7), ratio(1, 11), ratio(1, 13), ratio(1, 17)];
    let mut out = Vec::new();
    for (t0, s) in [(ratio(1, 2), ratio(1, 1)), (ratio(2, 1), ratio(1, 2)), (ratio(-1, 3), ratio(2, 1)), (ratio(3, 1), ratio(-1, 1))] {
        let p: [Rational; 6] = std::array::from_fn(|i| {
            base[i].clone() + t0.clone() * dir[i].clone() + s.clone() * eps[i].clone()
        });
        if check_open_conditions(&p).is_ok() {
            out.push(p);
        }
        if out.len() == wanted {
            break;
        }
    }
    out
}

/// Tangent vectors at `0` of the seven witness curves, their rank, and
/// exact cell membership of perturbed points along each curve.
pub fn certify_322() -> Result<SingularityCertificate, CertificateError> {
    let shape = Partition::new(vec![3, 2, 2]).expect("partition");
    let mut curves = Vec::new();
    let mut tangents = Vec::new();
    let mut confirmations = 0;
    for (name, base, dir, expected) in witness_specs() {
        if !f_family(&base).is_zero() {
            return Err(CertificateError::Check(format!("{name} does not pass through 0")));
        }
        let jets: [Jet<Rational>; 6] = std::array::from_fn(|i| Jet::affine(base[i].clone(), dir[i].clone()));
        let tangent = f_family(&jets).map(|x| x.derivative.clone());
        let description = describe(&tangent);
        if description != expected {
            return Err(CertificateError::Check(format!("{name}: tangent {description}, expected {expected}")));
        }
        let mut samples = Vec::new();
        for p in perturbed_samples(&base, &dir, 2) {
            if !verify_curve_membership(&p)? {
                return Err(CertificateError::Check(format!("{name}: point {:?} not in the cell", strings(&p))));
            }
            confirmations += 1;
            samples.push(strings(&p));
        }
        if samples.len() < 2 {
            return Err(CertificateError::Check(format!("{name}: too few admissible samples")));
        }
        tangents.push((0..7).flat_map(|i| tangent.row(i)).collect::<Vec<_>>());
        curves.push(WitnessCurve {
            name,
            base: strings(&base),
            direction: strings(&dir),
            tangent: description,
            expected_tangent: expected.into(),
            samples,
        });
    }
    let rank = Matrix::from_rows(tangents, 49).rank();
    let dim = shape.springer_dim();
    if rank <= dim {
        return Err(CertificateError::Check(format!("tangent rank {rank} does not exceed dimension {dim}")));
    }
    Ok(SingularityCertificate {
        shape,
        tableau: singular_tableau_322(),
        basis_tableau: basis_tableau_322(),
        tangent_dim_lower_bound: rank,
        component_dim: dim,
        membership_confirmations: confirmations,
        witness_curves: curves,
        verdict: rank > dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_entries() {
        assert!(f_family(&ints([0; 6])).is_zero());
        let t = ints([1, 2, 3, 4, 5, 6]);
        let m = f_family(&t);
        assert_eq!(*m.get(4, 3), ratio(4, 1));
        assert_eq!(*m.get(6, 5), ratio(5 * 3, 1));
        let m = f_family(&ints([1, 1, 1, 2, 1, 1]));
        assert_eq!(*m.get(6, 5), ratio(1, 1));
        assert_eq!(*m.get(2, 0), ratio(1, 1));
        for i in 0..7 {
            for j in i..7 {
                assert!(num_traits::Zero::is_zero(m.get(i, j)));
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(verify_curve_membership(&ints([1, 1, 1, 2, 1, 1])).unwrap());
        assert!(verify_curve_membership(&ints([0, 1, -1, 1, 1, -1])).unwrap());
        assert!(matches!(
            verify_curve_membership(&ints([2, 1, 1, 2, 1, 1])),
            Err(CertificateError::Precondition(_))
        ));
        assert!(verify_curve_membership(&ints([1, 1, 0, 2, 1, 1])).is_err());
    }

    #[test]
    fn base_flag_is_in_the_basis_cell() {
        let u = jordan_operator::<Rational>(&basis_tableau_322());
        let f = chart_point(&f_family(&ints([0; 6]))).unwrap();
        assert!(in_cell(&f, &u, &basis_tableau_322()).unwrap());
    }

    #[test]
    fn certificate() {
        let c = certify_322().unwrap();
        assert_eq!(c.tangent_dim_lower_bound, 7);
        assert_eq!(c.component_dim, 6);
        assert!(c.verdict);
        assert!(c.membership_confirmations >= 5);
        assert_eq!(c.witness_curves.len(), 7);
        let r = c.report();
        assert_eq!(r.verdict, "singular");
        assert!(r.passed());
    }
}
