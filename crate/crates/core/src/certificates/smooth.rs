use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{CertificateError, CertificateReport, Check};
use crate::exactlin::{
    axpy, chart_coords, in_cell, jordan_operator, kk1_basis, special_flag, special_perm, unit, Flag, Vector,
};
use crate::scalar::Field;
use crate::tableaux::StandardTableau;
use crate::{ratio, Rational};

fn check_k(k: usize) -> Result<(), CertificateError> {
    if k < 2 {
        return Err(CertificateError::Precondition(format!("k = {k}: charts need k >= 2")));
    }
    Ok(())
}

/// `w(e_i) = e_{i+2}` for `i ≤ n−3`, zero on `e_{n−2}, e_{n−1}, e_n`.
fn w_map<F: Field>(v: &[F]) -> Vector<F> {
    let n = v.len();
    let mut out = vec![F::zero(); n];
    if n >= 3 {
        out[2..n - 1].clone_from_slice(&v[..n - 3]);
    }
    out
}

/// `v_1, …, v_{k+1}` for `α_3, …, α_{k+1}` (`alpha.len() = k − 1`).
pub fn v_vectors<F: Field>(k: usize, alpha: &[F]) -> Result<Vec<Vector<F>>, CertificateError> {
    if k == 0 || alpha.len() != k - 1 {
        return Err(CertificateError::Precondition(format!(
            "need {} values alpha_3..alpha_{}",
            k.saturating_sub(1),
            k + 1
        )));
    }
    let n = 2 * k + 1;
    let mut v = vec![unit(n, 1), unit(n, 2)];
    for i in 3..=k + 1 {
        let next = axpy(&w_map(&v[i - 3]), &alpha[i - 3], &w_map(&v[i - 2]));
        v.push(next);
    }
    v.truncate(k + 1);
    Ok(v)
}

/// `r_1^{(i)}, …, r_i^{(i)}` with their coefficients `β_j^{(i)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct RVectors<F> {
    pub r: Vec<Vector<F>>,
    pub beta: Vec<F>,
}

/// The family `r^{(i)}` for `k+1 ≤ i ≤ n−1`.
pub fn r_vectors<F: Field>(k: usize, i: usize, alpha: &[F]) -> Result<RVectors<F>, CertificateError> {
    let n = 2 * k + 1;
    if i < k + 1 || i > n - 1 {
        return Err(CertificateError::Precondition(format!("i = {i} outside {}..={}", k + 1, n - 1)));
    }
    let mut cur = RVectors {
        r: v_vectors(k, alpha)?,
        beta: [F::zero(), F::zero()].into_iter().chain(alpha.iter().cloned()).collect(),
    };
    for _ in k + 2..=i {
        let mut r = vec![unit(n, 1), unit(n, 2)];
        let mut beta = vec![F::zero(), F::zero()];
        for j in 3..=cur.r.len() + 1 {
            r.push(w_map(&cur.r[j - 3]));
            beta.push(cur.beta[j - 3].clone());
        }
        cur = RVectors { r, beta };
    }
    Ok(cur)
}

/// `v_1, …, v_{n−1}`, with `v_i = r_i^{(i)}` beyond `k+1`.
pub fn all_v_vectors<F: Field>(k: usize, alpha: &[F]) -> Result<Vec<Vector<F>>, CertificateError> {
    let mut v = v_vectors(k, alpha)?;
    for i in k + 2..2 * k + 1 {
        v.push(r_vectors(k, i, alpha)?.r[i - 1].clone());
    }
    Ok(v)
}

/// `α̃_1 = α̃_2 = 0`, `α̃_i = α̃_{i−2} + α_i`; `alpha[0]` is `α_3`.
pub fn alpha_tilde<F: Field>(alpha: &[F]) -> Vec<F> {
    let mut t = vec![F::zero(), F::zero()];
    for (idx, a) in alpha.iter().enumerate() {
        let prev = t[idx].clone();
        t.push(prev + a.clone());
    }
    t
}

/// Parameters of the chart map at `(d)`: `k + 2` values.
///
/// For `d = k+2`: `(α_1, α_3, …, α_{k+1}, γ_k, γ_{k+1})`.
/// For `d < k+2`: `(α_1, α_3, …, α_d, α_{d+2}, …, α_{k+2}, γ_{d−1}, ν)`, and
/// `α_{d+1} = −ν γ_{d−1}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiParams<F> {
    k: usize,
    d: usize,
    #[serde(skip)]
    values: Vec<F>,
}

impl<F: Field> PhiParams<F> {
    pub fn new(k: usize, d: usize, values: Vec<F>) -> Result<Self, CertificateError> {
        check_k(k)?;
        special_perm(d, 2 * k + 1)?;
        if values.len() != k + 2 {
            return Err(CertificateError::Precondition(format!(
                "expected {} parameters, got {}",
                k + 2,
                values.len()
            )));
        }
        Ok(PhiParams { k, d, values })
    }

    pub fn zero(k: usize, d: usize) -> Result<Self, CertificateError> {
        Self::new(k, d, vec![F::zero(); k + 2])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    fn top(&self) -> bool {
        self.d == self.k + 2
    }

    /// `α_i` for `i = 1` or `3 ≤ i ≤ k+1` (also `k+2` when `d < k+2`).
    pub fn alpha(&self, i: usize) -> F {
        let (k, d) = (self.k, self.d);
        match i {
            1 => self.values[0].clone(),
            _ if self.top() => {
                assert!((3..=k + 1).contains(&i), "alpha_{i} undefined");
                self.values[i - 2].clone()
            }
            _ if i <= d => self.values[i - 2].clone(),
            _ if i == d + 1 => -(self.nu() * self.gamma_param()),
            _ => {
                assert!(i <= k + 2, "alpha_{i} undefined");
                self.values[i - 3].clone()
            }
        }
    }

    fn gamma_param(&self) -> F {
        self.values[self.k].clone()
    }

    /// `ν`; only meaningful for `d < k+2`.
    pub fn nu(&self) -> F {
        self.values[self.k + 1].clone()
    }

    /// `α_3, …, α_{k+1}`.
    pub fn v_alphas(&self) -> Vec<F> {
        (3..=self.k + 1).map(|i| self.alpha(i)).collect()
    }

    /// `γ_1, …` up to `γ_{k+1}` (`d = k+2`) or `γ_{d−1}` (`d < k+2`), 1-based.
    pub fn gammas(&self) -> Vec<F> {
        let last = if self.top() { self.k + 1 } else { self.d - 1 };
        let mut g = vec![F::zero(); last + 1];
        if self.top() {
            g[self.k] = self.values[self.k].clone();
            g[self.k + 1] = self.values[self.k + 1].clone();
        } else {
            g[last] = self.gamma_param();
        }
        let lowest_given = if self.top() { self.k } else { last };
        for i in (2..lowest_given).rev() {
            g[i] = -(self.alpha(i + 2) * g[i + 1].clone());
        }
        g[1] = -((self.alpha(3) - self.alpha(1)) * g[2].clone());
        g
    }
}

/// The flag `Φ(p) = (U_0, …, U_n)` in the chart around `F_{(d)}`.
pub fn phi_map<F: Field>(p: &PhiParams<F>) -> Result<Flag<F>, CertificateError> {
    Ok(Flag::new(eta_basis(p)?)?)
}

/// `η_1, …, η_n`.
pub fn eta_basis<F: Field>(p: &PhiParams<F>) -> Result<Vec<Vector<F>>, CertificateError> {
    let (k, d) = (p.k, p.d);
    let n = 2 * k + 1;
    let v = all_v_vectors(k, &p.v_alphas())?;
    let vi = |i: usize| v[i - 1].clone();
    let en = unit::<F>(n, n);
    let g = p.gammas();
    let mut eta = Vec::with_capacity(n);
    let first = axpy(&unit(n, 1), &p.alpha(1), &unit(n, 2));
    eta.push(axpy(&first, &g[1], &en));
    eta.push(axpy(&unit(n, 2), &g[2], &en));
    if p.top() {
        for i in 3..=k + 1 {
            eta.push(axpy(&vi(i), &g[i], &en));
        }
        eta.push(en);
    } else {
        for i in 3..d {
            eta.push(axpy(&vi(i), &g[i], &en));
        }
        eta.push(axpy(&en, &p.nu(), &vi(d)));
        for i in d + 1..=k + 1 {
            eta.push(axpy(&vi(i - 1), &p.alpha(i + 1), &vi(i)));
        }
        eta.push(vi(k + 1));
    }
    for i in k + 3..=n {
        eta.push(vi(i - 1));
    }
    Ok(eta)
}

/// Parameters read back from the chart coordinates of `Φ(p)`.
pub fn recover_params(flag: &Flag<Rational>, k: usize, d: usize) -> Result<PhiParams<Rational>, CertificateError> {
    check_k(k)?;
    let n = 2 * k + 1;
    let c = chart_coords(flag, d)?;
    let pos = special_perm(d, n)?.inverse();
    // Coefficient of e_m in η_i.
    let coef = |i: usize, m: usize| -> Result<Rational, CertificateError> {
        let j = pos.apply(m);
        if j <= i {
            return Err(CertificateError::Check(format!("e_{m} is not after position {i}")));
        }
        Ok(c.phi(i, j).clone())
    };
    let mut tilde = vec![ratio(0, 1); k + 3];
    let alpha1 = c.phi(1, 2).clone();
    let mut values = vec![alpha1];
    if d == k + 2 {
        for i in 3..=k + 1 {
            tilde[i] = coef(i, i + 1)?;
        }
        for i in 3..=k + 1 {
            values.push(tilde[i].clone() - tilde[i - 2].clone());
        }
        values.push(c.phi(k, k + 2).clone());
        values.push(c.phi(k + 1, k + 2).clone());
    } else {
        for i in 3..d {
            tilde[i] = coef(i, i + 1)?;
        }
        let gamma = c.phi(d - 1, d).clone();
        let nu = c.phi(d, d + 1).clone();
        tilde[d + 1] = tilde[d - 1].clone() - nu.clone() * gamma.clone();
        for i in d + 2..=k + 2 {
            tilde[i] = c.phi(i - 1, i).clone();
        }
        let i = 2 * k + 2 - d;
        tilde[d] = c.phi(i + 1, i + 2).clone();
        for i in (3..=k + 2).filter(|&i| i != d + 1) {
            values.push(tilde[i].clone() - tilde[i - 2].clone());
        }
        values.push(gamma);
        values.push(nu);
    }
    PhiParams::new(k, d, values)
}

/// Outcome of checking one chart `Φ` at `(d)` for `Q(k,k,1)`.
#[derive(Debug, Clone, Serialize)]
pub struct ChartReport {
    pub k: usize,
    pub d: usize,
    pub target: StandardTableau,
    pub samples: Vec<Vec<String>>,
    #[serde(flatten)]
    pub report: CertificateReport,
}

impl ChartReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Deterministic all-nonzero parameter tuples: three fixed ones and two
/// drawn from a seeded generator.
pub fn sample_params(k: usize, d: usize) -> Vec<Vec<Rational>> {
    let m = k + 2;
    let mut out: Vec<Vec<Rational>> = (0..3)
        .map(|s| (0..m).map(|j| ratio((j + s + 1) as i64, (j + 2 * s + 2) as i64)).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64((k * 100 + d) as u64);
    for _ in 0..2 {
        out.push(
            (0..m)
                .map(|_| {
                    let num: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
                    ratio(num, rng.gen_range(1..=7))
                })
                .collect(),
        );
    }
    out
}

fn show(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

/// Checks `Φ(0) = F_{(d)}`, that nonzero parameters land in `F_{Q(k,k,1)}`,
/// that every `Φ(p)` is `u`-stable, and that the chart coordinates give the
/// parameters back.
pub fn verify_smooth_chart(k: usize, d: usize) -> Result<ChartReport, CertificateError> {
    check_k(k)?;
    let n = 2 * k + 1;
    special_perm(d, n)?;
    let u = jordan_operator::<Rational>(&kk1_basis(k)?);
    let target = StandardTableau::q_tableau(k)?;
    let mut checks = Vec::new();

    let zero = phi_map(&PhiParams::<Rational>::zero(k, d)?)?;
    let special = special_flag::<Rational>(d, k)?;
    let zero_coords = chart_coords(&zero, d)?;
    checks.push(Check::new(
        "Phi(0) = F_(d)",
        zero.same_as(&special) && zero_coords.is_zero(),
        format!("special flag ({})", special_perm(d, n)?),
    ));

    let samples = sample_params(k, d);
    let mut in_q = 0;
    let mut recovered = 0;
    for values in &samples {
        let p = PhiParams::new(k, d, values.clone())?;
        let flag = phi_map(&p)?;
        if in_cell(&flag, &u, &target).unwrap_or(false) {
            in_q += 1;
        }
        if recover_params(&flag, k, d).map(|r| r == p).unwrap_or(false) {
            recovered += 1;
        }
    }
    checks.push(Check::new(
        "nonzero parameters land in the cell of Q(k,k,1)",
        in_q == samples.len() && in_q >= 3,
        format!("{in_q}/{} tuples, hypothesis: all {} parameters nonzero", samples.len(), k + 2),
    ));
    checks.push(Check::new(
        "chart coordinates recover the parameters",
        recovered == samples.len(),
        format!("{recovered}/{} tuples", samples.len()),
    ));

    // The proof only needs some of the parameters nonzero: α_3..α_{k+1} when
    // d = k+2, everything but α_1 otherwise.
    let mut weak = samples[0].clone();
    weak[0] = ratio(0, 1);
    if d == k + 2 {
        weak[k] = ratio(0, 1);
        weak[k + 1] = ratio(0, 1);
    }
    let weak_ok = in_cell(&phi_map(&PhiParams::new(k, d, weak.clone())?)?, &u, &target).unwrap_or(false);
    checks.push(Check::new(
        "weaker hypothesis lands in the cell of Q(k,k,1)",
        weak_ok,
        format!("parameters {}", show(&weak).join(",")),
    ));

    let mut stable = 0;
    let mut partial = 0;
    for (s, values) in samples.iter().enumerate() {
        for z in 0..k + 2 {
            let mut v = values.clone();
            v[z] = ratio(0, 1);
            if s % 2 == 1 {
                v[(z + 1) % (k + 2)] = ratio(0, 1);
            }
            let p = PhiParams::new(k, d, v)?;
            let flag = phi_map(&p)?;
            partial += 1;
            let ok = flag.is_stable(u.matrix())
                && chart_coords(&flag, d).is_ok()
                && recover_params(&flag, k, d).map(|r| r == p).unwrap_or(false);
            stable += ok as usize;
        }
    }
    checks.push(Check::new(
        "Phi(p) is u-stable and in the chart for tuples with zeros",
        stable == partial,
        format!("{stable}/{partial} tuples"),
    ));

    let passed = checks.iter().all(|c| c.passed());
    Ok(ChartReport {
        k,
        d,
        target,
        samples: samples.iter().map(|s| show(s)).collect(),
        report: CertificateReport {
            case: format!("chart at ({d}) for Q({k},{k},1)"),
            checks,
            verdict: if passed { "smooth point" } else { "failed" }.into(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{cell_of, Matrix, Subspace};

    fn q(n: i64) -> Rational {
        ratio(n, 1)
    }

    fn u(k: usize) -> Matrix<Rational> {
        jordan_operator::<Rational>(&kk1_basis(k).unwrap()).matrix().clone()
    }

    #[test]
    fn v_examples() {
        let v = v_vectors(2, &[q(1)]).unwrap();
        let mut e3e4 = unit::<Rational>(5, 3);
        e3e4[3] = q(1);
        assert_eq!(v[2], e3e4);
        assert_eq!(u(2).mul_vec(&v[2]), axpy(&unit(5, 1), &q(1), &unit(5, 2)));
        for k in 1..=5 {
            let v = all_v_vectors(k, &vec![q(0); k - 1]).unwrap();
            for (i, vi) in v.iter().enumerate() {
                assert_eq!(*vi, unit(2 * k + 1, i + 1));
            }
        }
    }

    #[test]
    fn r_examples() {
        let alpha = [q(2), ratio(-1, 3), q(5)];
        let k = 4;
        let r = r_vectors(k, k + 1, &alpha).unwrap();
        assert_eq!(r.r, v_vectors(k, &alpha).unwrap());
        for i in k + 1..2 * k + 1 {
            let r0 = r_vectors(k, i, &[q(0), q(0), q(0)]).unwrap();
            for (j, rj) in r0.r.iter().enumerate() {
                assert_eq!(*rj, unit(2 * k + 1, j + 1));
            }
            let r = r_vectors(k, i, &alpha).unwrap();
            for j in 2 * (i - k) + 1..=i {
                let a = j - 2 * (i - k - 1);
                assert_eq!(r.beta[j - 1], alpha[a - 3], "i={i} j={j}");
            }
        }
        assert!(r_vectors(k, k, &alpha).is_err());
        assert!(r_vectors(k, 2 * k + 1, &alpha).is_err());
    }

    #[test]
    fn v_recurrence_and_kernels() {
        let k = 4;
        let alpha = [q(2), ratio(-1, 3), q(5)];
        let v = v_vectors(k, &alpha).unwrap();
        let um = u(k);
        for i in 3..=k + 1 {
            let expected = axpy(&v[i - 3], &alpha[i - 3], &v[i - 2]);
            assert_eq!(um.mul_vec(&v[i - 1]), expected);
        }
        for i in 1..=k + 1 {
            assert!(Subspace::span(2 * k + 1, &v[..i]).is_stable(&um));
        }
        for i in 2..=k + 1 {
            assert!(um.pow(i as u32 - 1).mul_vec(&v[i - 1]).iter().all(num_traits::Zero::is_zero));
            assert!(!um.pow(i as u32 - 2).mul_vec(&v[i - 1]).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn gamma_chain() {
        let p = PhiParams::new(3, 5, vec![q(1), q(2), q(3), q(4), q(5)]).unwrap();
        let g = p.gammas();
        assert_eq!(g[3], q(4));
        assert_eq!(g[4], q(5));
        assert_eq!(g[2], q(-12));
        assert_eq!(g[1], q(12));
        let p = PhiParams::new(3, 4, vec![q(1), q(2), q(3), q(6), q(7)]).unwrap();
        assert_eq!(p.alpha(4), q(3));
        assert_eq!(p.alpha(5), q(-42));
        assert_eq!(p.gammas()[3], q(6));
        assert_eq!(p.gammas()[2], q(-18));
    }

    #[test]
    fn phi_zero_is_special() {
        for k in 2..=4 {
            for d in 3..=k + 2 {
                let f = phi_map(&PhiParams::<Rational>::zero(k, d).unwrap()).unwrap();
                assert!(f.same_as(&special_flag(d, k).unwrap()));
            }
        }
    }

    #[test]
    fn phi_examples_in_q_cell() {
        let q2 = StandardTableau::q_tableau(2).unwrap();
        let op = jordan_operator::<Rational>(&kk1_basis(2).unwrap());
        let f = phi_map(&PhiParams::new(2, 4, vec![q(1), q(2), q(3), q(-1)]).unwrap()).unwrap();
        assert!(in_cell(&f, &op, &q2).unwrap());
        let f = phi_map(&PhiParams::new(2, 3, vec![q(1); 4]).unwrap()).unwrap();
        assert!(in_cell(&f, &op, &q2).unwrap());
    }

    #[test]
    fn weaker_hypothesis_top_chart() {
        let k = 4;
        let op = jordan_operator::<Rational>(&kk1_basis(k).unwrap());
        let target = StandardTableau::q_tableau(k).unwrap();
        let cell = |v: [i64; 6]| {
            let p = PhiParams::new(k, k + 2, v.iter().map(|&x| q(x)).collect()).unwrap();
            cell_of(&phi_map(&p).unwrap(), &op).unwrap()
        };
        assert_eq!(cell([0, 2, 3, 5, 0, 0]), target);
        assert_eq!(cell([0, 2, 3, 5, 1, 0]), target);
        // α_{k+1} = 0 leaves the cell.
        assert_eq!(cell([0, 2, 3, 0, 0, 0]).to_string(), "1,3,4,7/2,5,8,9/6");
        assert_ne!(cell([1, 2, 3, 0, 1, 1]), target);
    }

    #[test]
    fn charts_verify() {
        for (k, d) in [(2, 3), (2, 4), (3, 3), (3, 4), (3, 5)] {
            let r = verify_smooth_chart(k, d).unwrap();
            assert!(r.passed(), "{:?}", r.report);
        }
        assert!(verify_smooth_chart(1, 3).is_err());
        assert!(verify_smooth_chart(3, 6).is_err());
    }
}
