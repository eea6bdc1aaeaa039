//! Partitions and Young diagrams.
//!
//! A [`Partition`] lists row lengths of a Young diagram in non-increasing
//! order. Rows and columns are 1-based in every public accessor, matching the
//! usual `(T)_{row,col}` indexing of tableaux.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part {0} is zero")]
    ZeroPart(usize),
    #[error("parts are not non-increasing at position {0}")]
    NotDecreasing(usize),
    #[error("column index {index} out of range 1..={columns}")]
    ColumnOutOfRange { index: usize, columns: usize },
    #[error("invalid column block [{0},{1}]")]
    BadBlock(usize, usize),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

/// A partition of `n`, doubling as the Young diagram with those row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(PartitionError::ZeroPart(i + 1));
            }
            if i > 0 && parts[i - 1] < p {
                return Err(PartitionError::NotDecreasing(i + 1));
            }
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from row lengths that may contain trailing zeros.
    pub(crate) fn from_row_lengths(mut rows: Vec<usize>) -> Self {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts: rows }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of columns of the diagram (`λ_1`, or 0 when empty).
    pub fn num_columns(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of row `i` (1-based); 0 beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The conjugate partition: column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = (1..=self.num_columns())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts: cols }
    }

    /// The partition whose columns are columns `i..=j` of this diagram.
    pub fn column_block(&self, i: usize, j: usize) -> Result<Partition, PartitionError> {
        let m = self.num_columns();
        if i == 0 || i > m {
            return Err(PartitionError::ColumnOutOfRange { index: i, columns: m });
        }
        if j > m {
            return Err(PartitionError::ColumnOutOfRange { index: j, columns: m });
        }
        if j < i {
            return Err(PartitionError::BadBlock(i, j));
        }
        let conj = self.conjugate();
        Ok(Partition {
            parts: conj.parts[i - 1..j].to_vec(),
        }
        .conjugate())
    }

    /// Sum of the first `i` column lengths.
    pub fn prefix_sum(&self, i: usize) -> Result<usize, PartitionError> {
        let m = self.num_columns();
        if i > m {
            return Err(PartitionError::ColumnOutOfRange { index: i, columns: m });
        }
        Ok(self.conjugate().parts[..i].iter().sum())
    }

    /// Dimension of the Springer fiber (and of each of its components) for
    /// a nilpotent with this Jordan type: sum over columns of `c(c-1)/2`.
    pub fn springer_dim(&self) -> usize {
        self.conjugate().parts.iter().map(|&c| c * (c - 1) / 2).sum()
    }

    /// Hook length of the box in row `i`, column `j` (1-based).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let conj = self.conjugate();
        (self.parts[i - 1] - j) + (conj.parts[j - 1] - i) + 1
    }

    /// Number of standard tableaux of this shape, by the hook-length formula.
    pub fn count_tableaux(&self) -> BigUint {
        let mut num = BigUint::one();
        for k in 2..=self.n() {
            num *= BigUint::from(k);
        }
        let mut den = BigUint::one();
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                den *= BigUint::from(self.hook_length(i + 1, j));
            }
        }
        num / den
    }

    pub fn classify_smooth(&self) -> SmoothnessVerdict {
        SmoothnessVerdict::of(self)
    }

    /// Whether this shape meets the sufficient condition for a singular
    /// component: `λ_2 ≥ 2` and either at least four rows, or exactly three
    /// rows with `λ_1 ≥ 3` and `λ_3 ≥ 2`.
    pub fn forces_singular_component(&self) -> bool {
        let k = self.len();
        self.row(2) >= 2 && (k >= 4 || (k == 3 && self.row(1) >= 3 && self.row(3) >= 2))
    }

    /// Whether `other` fits inside this diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Which family of the smoothness classification a Jordan type falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SmoothnessVerdict {
    /// `(λ_1, 1, …, 1)`, including one row and one column.
    Hook,
    /// `(λ_1, λ_2)` with `λ_2 ≥ 2`.
    TwoRow,
    /// `(λ_1, λ_2, 1)` with `λ_2 ≥ 2`.
    TwoRowPlusBox,
    /// `(2, 2, 2)`.
    TwoTwoTwo,
    /// Some component of the Springer fiber is singular.
    HasSingular,
}

impl SmoothnessVerdict {
    pub fn of(shape: &Partition) -> Self {
        let p = shape.parts();
        if p.len() <= 1 || p[1] == 1 {
            SmoothnessVerdict::Hook
        } else if p.len() == 2 {
            SmoothnessVerdict::TwoRow
        } else if p.len() == 3 && p[2] == 1 {
            SmoothnessVerdict::TwoRowPlusBox
        } else if p == [2, 2, 2] {
            SmoothnessVerdict::TwoTwoTwo
        } else {
            SmoothnessVerdict::HasSingular
        }
    }

    /// True when every component is nonsingular.
    pub fn is_smooth(self) -> bool {
        self != SmoothnessVerdict::HasSingular
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,2,2").conjugate(), p("3,3,1"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("4,4,1").conjugate(), p("3,2,2,2"));
    }

    #[test]
    fn column_blocks() {
        assert_eq!(p("3,2,2").column_block(1, 1).unwrap(), p("1,1,1"));
        assert_eq!(p("3,2,2").column_block(2, 3).unwrap(), p("2,1,1"));
        assert_eq!(p("4,2").column_block(1, 2).unwrap(), p("2,2"));
        assert!(p("3,2,2").column_block(2, 4).is_err());
        assert!(p("3,2,2").column_block(0, 1).is_err());
        assert!(p("3,2,2").column_block(3, 2).is_err());
    }

    #[test]
    fn prefix_sums() {
        assert_eq!(p("3,2,2").prefix_sum(1).unwrap(), 3);
        assert_eq!(p("3,2,2").prefix_sum(3).unwrap(), 7);
        assert_eq!(p("2,2,1,1").prefix_sum(1).unwrap(), 4);
        assert!(p("2,2,1,1").prefix_sum(3).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(p("3,2,2").springer_dim(), 6);
        assert_eq!(p("2,2,1,1").springer_dim(), 7);
        assert_eq!(p("5,5,1").springer_dim(), 7);
        assert_eq!(p("").springer_dim(), 0);
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(p("5,1,1").classify_smooth(), SmoothnessVerdict::Hook);
        assert_eq!(p("2,2,1,1").classify_smooth(), SmoothnessVerdict::HasSingular);
        assert_eq!(p("2,2,2").classify_smooth(), SmoothnessVerdict::TwoTwoTwo);
        assert_eq!(p("3,2,2").classify_smooth(), SmoothnessVerdict::HasSingular);
        assert_eq!(p("4,3,1").classify_smooth(), SmoothnessVerdict::TwoRowPlusBox);
        assert_eq!(p("4,1").classify_smooth(), SmoothnessVerdict::Hook);
        assert_eq!(p("").classify_smooth(), SmoothnessVerdict::Hook);
        assert_eq!(p("1").classify_smooth(), SmoothnessVerdict::Hook);
        assert_eq!(p("1,1,1,1").classify_smooth(), SmoothnessVerdict::Hook);
    }

    #[test]
    fn hook_counts() {
        assert_eq!(p("6").count_tableaux(), BigUint::from(1u32));
        assert_eq!(p("2,2,1,1").count_tableaux(), BigUint::from(9u32));
        assert_eq!(p("3,3").count_tableaux(), BigUint::from(5u32));
        assert_eq!(p("").count_tableaux(), BigUint::from(1u32));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn parse_errors() {
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(" 3, 1 ").to_string(), "3,1");
    }

    #[test]
    fn json_is_integer_array() {
        assert_eq!(serde_json::to_string(&p("3,2,2")).unwrap(), "[3,2,2]");
        let back: Partition = serde_json::from_str("[3,2,2]").unwrap();
        assert_eq!(back, p("3,2,2"));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn classifier_matches_singularity_condition() {
        for n in 0..=12 {
            for lam in Partition::all(n) {
                assert_eq!(
                    lam.classify_smooth().is_smooth(),
                    !lam.forces_singular_component(),
                    "{lam}"
                );
            }
        }
    }
}
