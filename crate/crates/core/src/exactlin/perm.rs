use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LinAlgError;
use crate::tableaux::StandardTableau;

/// A permutation of `1..=n`, stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, LinAlgError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(LinAlgError::NotPermutation(images));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `σ^{-1}(x)`.
    pub fn position(&self, x: usize) -> usize {
        self.images.iter().position(|&y| y == x).expect("value in range") + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation { images: other.images.iter().map(|&i| self.apply(i)).collect() }
    }

    /// `(a b) ∘ σ`: exchanges the values `a` and `b`.
    pub fn swap_values(&self, a: usize, b: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&x| if x == a { b } else if x == b { a } else { x })
            .collect();
        Permutation { images }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = LinAlgError;

    fn try_from(images: Vec<usize>) -> Result<Self, LinAlgError> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = LinAlgError;

    fn from_str(s: &str) -> Result<Self, LinAlgError> {
        let images = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| LinAlgError::Parse(s.to_string()))?;
        Permutation::new(images)
    }
}

/// All `σ` with the Jordan flag `F_σ` stable under the operator labeled by
/// `t`, i.e. every entry of `t` comes after its left neighbour. Sorted.
pub fn jordan_flag_perms(t: &StandardTableau) -> Vec<Permutation> {
    let n = t.n();
    let mut left = vec![None; n + 1];
    for row in t.rows() {
        for w in row.windows(2) {
            left[w[1]] = Some(w[0]);
        }
    }
    let mut out = Vec::new();
    let mut placed = vec![false; n + 1];
    let mut prefix = Vec::with_capacity(n);
    extend(&left, &mut placed, &mut prefix, &mut out);
    out
}

fn extend(
    left: &[Option<usize>],
    placed: &mut [bool],
    prefix: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
) {
    let n = left.len() - 1;
    if prefix.len() == n {
        out.push(Permutation { images: prefix.clone() });
        return;
    }
    for x in 1..=n {
        if !placed[x] && left[x].is_none_or(|l| placed[l]) {
            placed[x] = true;
            prefix.push(x);
            extend(left, placed, prefix, out);
            prefix.pop();
            placed[x] = false;
        }
    }
}

/// The basis tableau with rows `1,3,…,n−2` / `2,4,…,n−1` / `n`, `n = 2k+1`.
pub fn kk1_basis(k: usize) -> Result<StandardTableau, LinAlgError> {
    if k == 0 {
        return Err(LinAlgError::OutOfRange("k must be at least 1".into()));
    }
    let n = 2 * k + 1;
    Ok(StandardTableau::new(vec![
        (1..n - 1).step_by(2).collect(),
        (2..n).step_by(2).collect(),
        vec![n],
    ])?)
}

/// Shuffles of `{1,3,…,n−2}`, `{2,4,…,n−1}` and `{n}`.
pub fn shuffles(k: usize) -> Result<Vec<Permutation>, LinAlgError> {
    Ok(jordan_flag_perms(&kk1_basis(k)?))
}

/// `(d)`: fixes `1..d−1`, sends `d` to `n` and `i > d` to `i−1`.
pub fn special_perm(d: usize, n: usize) -> Result<Permutation, LinAlgError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(LinAlgError::OutOfRange(format!("n = {n} must be odd and at least 3")));
    }
    let k = (n - 1) / 2;
    if !(3..=k + 2).contains(&d) {
        return Err(LinAlgError::OutOfRange(format!("d = {d} outside 3..={}", k + 2)));
    }
    Ok(Permutation {
        images: (1..=n)
            .map(|i| match i.cmp(&d) {
                std::cmp::Ordering::Less => i,
                std::cmp::Ordering::Equal => n,
                std::cmp::Ordering::Greater => i - 1,
            })
            .collect(),
    })
}

/// Exchanges `i ∈ {1, 2}` with `n` while `n` precedes `i`.
pub fn reduce_a(sigma: &Permutation) -> Permutation {
    let n = sigma.n();
    let mut s = sigma.clone();
    loop {
        match [1, 2].into_iter().find(|&i| i < n && s.position(n) < s.position(i)) {
            Some(i) => s = s.swap_values(i, n),
            None => return s,
        }
    }
}

/// For the smallest `i` in `2..n` with `i` before `i−1`, exchanges every such
/// adjacent pair `(s−1, s)` with `s ≡ i (mod 2)`. `None` if there is no such `i`.
fn reduce_b(sigma: &Permutation) -> Option<Permutation> {
    let n = sigma.n();
    let bad = |s: usize| sigma.position(s) < sigma.position(s - 1);
    let i = (2..n).find(|&i| bad(i))?;
    let mut out = sigma.clone();
    for s in (2..n).filter(|s| s % 2 == i % 2 && bad(*s)) {
        out = out.swap_values(s - 1, s);
    }
    Some(out)
}

/// Degenerates `σ ∈ shuffles(k)` to a special permutation `(d)`.
pub fn degenerate_to_special(sigma: &Permutation, k: usize) -> Result<Permutation, LinAlgError> {
    let n = 2 * k + 1;
    if sigma.n() != n {
        return Err(LinAlgError::DimensionMismatch { expected: n, actual: sigma.n() });
    }
    let mut s = sigma.clone();
    loop {
        s = reduce_a(&s);
        match reduce_b(&s) {
            Some(next) => s = next,
            None => return Ok(s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn basics() {
        let s = perm("2,3,1");
        assert_eq!(s.inverse(), perm("3,1,2"));
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        assert_eq!(s.position(1), 3);
        assert_eq!(s.swap_values(1, 3), perm("2,1,3"));
        assert_eq!(s.to_string(), "2,3,1");
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,3,1]");
        assert!(serde_json::from_str::<Permutation>("[0,1]").is_err());
    }

    #[test]
    fn special_perms() {
        assert_eq!(special_perm(3, 5).unwrap(), perm("1,2,5,3,4"));
        assert_eq!(special_perm(4, 5).unwrap(), perm("1,2,3,5,4"));
        assert_eq!(special_perm(3, 3).unwrap(), perm("1,2,3"));
        assert!(special_perm(5, 5).is_err());
        assert!(special_perm(2, 5).is_err());
        assert!(special_perm(3, 4).is_err());
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(1).unwrap().len(), 6);
        for k in 1..=5 {
            let n = 2 * k + 1;
            let expected = factorial(n) / (factorial(k) * factorial(k));
            assert_eq!(shuffles(k).unwrap().len(), expected);
        }
    }

    #[test]
    fn shuffles_keep_chains_increasing() {
        for s in shuffles(3).unwrap() {
            let inv = s.inverse();
            for x in [1, 2, 3, 4] {
                assert!(inv.apply(x) < inv.apply(x + 2));
            }
        }
    }

    #[test]
    fn degeneration_fixes_special_perms() {
        for k in 1..=4 {
            for d in 3..=k + 2 {
                let p = special_perm(d, 2 * k + 1).unwrap();
                assert_eq!(degenerate_to_special(&p, k).unwrap(), p);
            }
        }
        for s in shuffles(1).unwrap() {
            assert_eq!(degenerate_to_special(&s, 1).unwrap(), special_perm(3, 3).unwrap());
        }
    }

    #[test]
    fn degeneration_terminals_have_special_form() {
        for k in 1..=4 {
            let n = 2 * k + 1;
            for s in shuffles(k).unwrap() {
                let t = degenerate_to_special(&s, k).unwrap();
                let d = t.position(n);
                assert!(d >= 3);
                let rest: Vec<usize> = t.images().iter().copied().filter(|&x| x != n).collect();
                assert_eq!(rest, (1..n).collect::<Vec<_>>());
                if d <= k + 2 {
                    assert!(reduce_a(&s).position(n) <= k + 2);
                }
            }
        }
    }

    #[test]
    fn simultaneous_swaps_stay_in_shuffles() {
        let s = perm("2,4,1,3,5");
        let all = shuffles(2).unwrap();
        assert!(all.contains(&s));
        let next = reduce_b(&s).unwrap();
        assert!(all.contains(&next));
    }
}
