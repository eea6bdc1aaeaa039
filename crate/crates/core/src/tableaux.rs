//! Young tableaux, jeu de taquin restrictions and the Schützenberger
//! transform.
//!
//! A [`Tableau`] holds distinct positive entries increasing along rows and
//! columns. It need not be standard: the restrictions `π_{i,j}` keep their
//! original entries `i..=j`. A [`StandardTableau`] additionally has entry set
//! exactly `1..=n`.
//!
//! Rows and columns are 1-based in the public API.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::Partition;

/// Largest `n` enumerated without an explicit override.
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("entries must be positive")]
    ZeroEntry,
    #[error("row {0} is not strictly increasing")]
    RowNotIncreasing(usize),
    #[error("column {0} is not strictly increasing")]
    ColumnNotIncreasing(usize),
    #[error("entry {0} appears more than once")]
    Duplicate(usize),
    #[error("row lengths do not form a partition")]
    ShapeNotPartition,
    #[error("entries are not exactly 1..={0}")]
    NotStandard(usize),
    #[error("entries are not consecutive")]
    NotConsecutive,
    #[error("index {index} outside {lo}..={hi}")]
    OutOfRange { index: usize, lo: usize, hi: usize },
    #[error("expected shape {expected}, got {actual}")]
    WrongShape { expected: String, actual: String },
    #[error("column heights must be non-increasing when concatenating")]
    MismatchedColumns,
    #[error("n = {n} exceeds the enumeration bound {max}")]
    TooLarge { n: usize, max: usize },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("cannot parse tableau {0:?}")]
    Parse(String),
    #[error("shape chain is not a chain of single-box additions at step {0}")]
    BadChain(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let mut seen = BTreeSet::new();
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() || (r > 0 && rows[r - 1].len() < row.len()) {
                return Err(TableauError::ShapeNotPartition);
            }
            for (c, &x) in row.iter().enumerate() {
                if x == 0 {
                    return Err(TableauError::ZeroEntry);
                }
                if !seen.insert(x) {
                    return Err(TableauError::Duplicate(x));
                }
                if c > 0 && row[c - 1] >= x {
                    return Err(TableauError::RowNotIncreasing(r + 1));
                }
                if r > 0 && rows[r - 1][c] >= x {
                    return Err(TableauError::ColumnNotIncreasing(c + 1));
                }
            }
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_row_lengths(self.rows.iter().map(Vec::len).collect())
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry `(T)_{row,col}`.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        if row == 0 || col == 0 {
            return None;
        }
        self.rows.get(row - 1)?.get(col - 1).copied()
    }

    pub fn entries(&self) -> BTreeSet<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn min_entry(&self) -> Option<usize> {
        self.rows.first().map(|r| r[0])
    }

    pub fn position(&self, x: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&y| y == x).map(|c| (r + 1, c + 1))
        })
    }

    /// The row containing entry `x`.
    pub fn row_of(&self, x: usize) -> Option<usize> {
        self.position(x).map(|(r, _)| r)
    }

    /// Descent set: entries `i` with `i + 1` present in a strictly lower row.
    pub fn tau(&self) -> BTreeSet<usize> {
        let mut rows_by_entry = std::collections::BTreeMap::new();
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                rows_by_entry.insert(x, r);
            }
        }
        rows_by_entry
            .iter()
            .filter_map(|(&x, &r)| match rows_by_entry.get(&(x + 1)) {
                Some(&r2) if r2 > r => Some(x),
                _ => None,
            })
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let m = self.rows.first().map_or(0, Vec::len);
        (0..m)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect()
    }

    /// Rebuilds a tableau from its columns; heights must be non-increasing.
    pub fn from_columns(cols: &[Vec<usize>]) -> Result<Self, TableauError> {
        if cols.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(TableauError::MismatchedColumns);
        }
        let height = cols.first().map_or(0, Vec::len);
        let rows = (0..height)
            .map(|r| cols.iter().filter(|c| c.len() > r).map(|c| c[r]).collect())
            .collect();
        Tableau::new(rows)
    }

    /// The subtableau made of columns `a..=b` (1-based).
    pub fn column_range(&self, a: usize, b: usize) -> Result<Tableau, TableauError> {
        let cols = self.columns();
        if a == 0 || b > cols.len() || a > b {
            return Err(TableauError::OutOfRange {
                index: if a == 0 { a } else { b },
                lo: 1,
                hi: cols.len(),
            });
        }
        Tableau::from_columns(&cols[a - 1..b])
    }

    /// Adds `offset` to every entry.
    pub fn shifted(&self, offset: usize) -> Tableau {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x + offset).collect())
                .collect(),
        }
    }

    /// Entries read row by row, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Deletes every entry larger than `j`. Entries increase along rows and
    /// columns, so the result is again a tableau.
    pub fn drop_above(&self, j: usize) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&x| x <= j).collect())
            .collect();
        Tableau::new(rows).expect("deleting large entries keeps a tableau")
    }

    /// Removes the minimal entry by a jeu de taquin slide into the vacated
    /// `(1,1)` box. Returns the 1-based box that leaves the diagram.
    pub fn remove_min(&mut self) -> Option<(usize, usize)> {
        if self.rows.is_empty() {
            return None;
        }
        let rows = &mut self.rows;
        let (mut r, mut c) = (0, 0);
        loop {
            let right = rows[r].get(c + 1).copied();
            let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
            match (right, below) {
                (None, None) => break,
                (Some(x), Some(y)) if x < y => {
                    rows[r][c] = x;
                    c += 1;
                }
                (Some(x), None) => {
                    rows[r][c] = x;
                    c += 1;
                }
                (_, Some(y)) => {
                    rows[r][c] = y;
                    r += 1;
                }
            }
        }
        rows[r].pop();
        if rows[r].is_empty() {
            rows.remove(r);
        }
        Some((r + 1, c + 1))
    }

    /// Inverse of [`Tableau::remove_min`]: adds the outer corner `cell`,
    /// slides the hole back to `(1,1)` and writes `value` there. `value`
    /// must be smaller than every entry.
    pub fn insert_min(&mut self, cell: (usize, usize), value: usize) -> Result<(), TableauError> {
        let (mut r, mut c) = (cell.0 - 1, cell.1 - 1);
        let addable = if r == self.rows.len() {
            c == 0
        } else {
            r < self.rows.len()
                && self.rows[r].len() == c
                && (r == 0 || self.rows[r - 1].len() > c)
        };
        if !addable || self.min_entry().is_some_and(|m| m <= value) || value == 0 {
            return Err(TableauError::InvalidArgument(format!(
                "cannot insert {value} through box {cell:?}"
            )));
        }
        if r == self.rows.len() {
            self.rows.push(vec![0]);
        } else {
            self.rows[r].push(0);
        }
        while r > 0 || c > 0 {
            let left = (c > 0).then(|| self.rows[r][c - 1]);
            let up = (r > 0).then(|| self.rows[r - 1][c]);
            match (left, up) {
                (Some(x), Some(y)) if x > y => {
                    self.rows[r][c] = x;
                    c -= 1;
                }
                (Some(x), None) => {
                    self.rows[r][c] = x;
                    c -= 1;
                }
                (_, Some(y)) => {
                    self.rows[r][c] = y;
                    r -= 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.rows[0][0] = value;
        Ok(())
    }

    /// `π_{i,j}`: delete entries above `j`, then remove entries below `i`
    /// one at a time by jeu de taquin. Entries of the result are `i..=j`
    /// when the input is standard.
    pub fn restrict(&self, i: usize, j: usize) -> Result<Tableau, TableauError> {
        let lo = self.min_entry().unwrap_or(1);
        let hi = lo + self.size().saturating_sub(1);
        if i < lo || j > hi || i > j + 1 {
            return Err(TableauError::OutOfRange { index: if i < lo { i } else { j }, lo, hi });
        }
        let mut t = self.drop_above(j);
        while t.min_entry().is_some_and(|m| m < i) {
            t.remove_min();
        }
        Ok(t)
    }

    /// Subtracts a constant so that entries become `1..=n`.
    pub fn standardize(&self) -> Result<StandardTableau, TableauError> {
        let Some(min) = self.min_entry() else {
            return Ok(StandardTableau(Tableau::empty()));
        };
        let entries = self.entries();
        let max = *entries.last().unwrap();
        if max - min + 1 != entries.len() {
            return Err(TableauError::NotConsecutive);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x - (min - 1)).collect())
            .collect();
        Ok(StandardTableau(Tableau { rows }))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::empty());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| TableauError::Parse(s.to_string()))?;
        Tableau::new(rows)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Tableau::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// A tableau with entries exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StandardTableau(Tableau);

impl Deref for StandardTableau {
    type Target = Tableau;

    fn deref(&self) -> &Tableau {
        &self.0
    }
}

impl From<StandardTableau> for Tableau {
    fn from(t: StandardTableau) -> Tableau {
        t.0
    }
}

impl TryFrom<Tableau> for StandardTableau {
    type Error = TableauError;

    fn try_from(t: Tableau) -> Result<Self, TableauError> {
        let n = t.size();
        if t.rows.iter().flatten().any(|&x| x > n) {
            return Err(TableauError::NotStandard(n));
        }
        Ok(StandardTableau(t))
    }
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        Tableau::new(rows)?.try_into()
    }

    pub fn empty() -> Self {
        StandardTableau(Tableau::empty())
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.size()
    }

    /// All standard tableaux of shape `shape` with `n ≤ DEFAULT_MAX_N`.
    pub fn enumerate(shape: &Partition) -> Result<Vec<StandardTableau>, TableauError> {
        Self::enumerate_bounded(shape, DEFAULT_MAX_N)
    }

    /// All standard tableaux of a shape, in lexicographic order of the row
    /// sequence `(r_T(1), …, r_T(n))`.
    pub fn enumerate_bounded(
        shape: &Partition,
        max_n: usize,
    ) -> Result<Vec<StandardTableau>, TableauError> {
        let n = shape.n();
        if n > max_n {
            return Err(TableauError::TooLarge { n, max: max_n });
        }
        fn fill(
            shape: &[usize],
            rows: &mut Vec<Vec<usize>>,
            next: usize,
            n: usize,
            out: &mut Vec<StandardTableau>,
        ) {
            if next > n {
                out.push(StandardTableau(Tableau { rows: rows.clone() }));
                return;
            }
            for r in 0..shape.len() {
                let len = rows[r].len();
                if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                    rows[r].push(next);
                    fill(shape, rows, next + 1, n, out);
                    rows[r].pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut rows = vec![Vec::new(); shape.len()];
        fill(shape.parts(), &mut rows, 1, n, &mut out);
        Ok(out)
    }

    /// `π_{1,i}`: the entries `1..=i`.
    pub fn truncate(&self, i: usize) -> Result<StandardTableau, TableauError> {
        if i > self.n() {
            return Err(TableauError::OutOfRange { index: i, lo: 0, hi: self.n() });
        }
        Ok(StandardTableau(self.drop_above(i)))
    }

    /// `r_T(i)`.
    pub fn row_index(&self, i: usize) -> Result<usize, TableauError> {
        self.row_of(i)
            .ok_or(TableauError::OutOfRange { index: i, lo: 1, hi: self.n() })
    }

    fn check_rs1(&self) -> Result<(), TableauError> {
        let p = self.shape();
        let parts = p.parts();
        if parts.len() != 3 || parts[2] != 1 {
            return Err(TableauError::WrongShape {
                expected: "(r,s,1)".into(),
                actual: format!("({p})"),
            });
        }
        Ok(())
    }

    /// `j(T) = max{ i ∈ τ(T) : i < (T)_{3,1} − 1 }` for shapes `(r,s,1)`.
    pub fn j_stat(&self) -> Result<usize, TableauError> {
        self.check_rs1()?;
        let t31 = self.get(3, 1).unwrap();
        Ok(self
            .tau()
            .into_iter()
            .filter(|&i| i + 1 < t31)
            .max()
            .expect("(T)_{2,1} - 1 is always a candidate"))
    }

    /// `dist(T) = (T)_{3,1} − 1 − j(T)` for shapes `(r,s,1)`.
    pub fn dist(&self) -> Result<usize, TableauError> {
        let j = self.j_stat()?;
        Ok(self.get(3, 1).unwrap() - 1 - j)
    }

    /// Evacuation: entry `i` goes into the box by which
    /// `sh(π_{n+1−i,n}(T))` exceeds `sh(π_{n+2−i,n}(T))`.
    pub fn schuetzenberger(&self) -> StandardTableau {
        let n = self.n();
        let mut rows: Vec<Vec<usize>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        let mut t = self.0.clone();
        for k in 1..=n {
            let (r, c) = t.remove_min().expect("non-empty");
            rows[r - 1][c - 1] = n + 1 - k;
        }
        StandardTableau(Tableau { rows })
    }

    /// `(sh π_{1,0}, sh π_{1,1}, …, sh π_{1,n})`.
    pub fn shape_chain(&self) -> ShapeChain {
        let diagrams = (0..=self.n())
            .map(|i| self.drop_above(i).shape())
            .collect();
        ShapeChain { diagrams }
    }

    /// The tableau whose suffix restrictions have the given shapes:
    /// `suffix_shapes[i] = sh(π_{i+1,n}(T))` for `i = 0..=n`.
    pub fn from_suffix_shapes(suffix_shapes: &[Partition]) -> Result<StandardTableau, TableauError> {
        let n = suffix_shapes.len().checked_sub(1).ok_or(TableauError::BadChain(0))?;
        let mut t = Tableau::empty();
        for i in (1..=n).rev() {
            let cell = added_box(&suffix_shapes[i], &suffix_shapes[i - 1])
                .ok_or(TableauError::BadChain(i))?;
            t.insert_min(cell, i)?;
        }
        Ok(StandardTableau(t))
    }

    /// Filled column by column, top to bottom.
    pub fn column_reading(shape: &Partition) -> StandardTableau {
        let mut next = 1;
        let cols: Vec<Vec<usize>> = shape
            .conjugate()
            .parts()
            .iter()
            .map(|&h| {
                let col = (next..next + h).collect();
                next += h;
                col
            })
            .collect();
        StandardTableau(Tableau::from_columns(&cols).expect("column heights come from a partition"))
    }

    /// `P(r,s)`: first row `1,3,…,2s−1,2s+1,…,r+s`, second row `2,4,…,2s`.
    pub fn two_row(r: usize, s: usize) -> Result<StandardTableau, TableauError> {
        if s > r {
            return Err(TableauError::InvalidArgument(format!("P({r},{s}) needs r >= s")));
        }
        let first = (1..=s).map(|i| 2 * i - 1).chain(2 * s + 1..=r + s).collect();
        let second = (1..=s).map(|i| 2 * i).collect();
        StandardTableau::new(vec![first, second])
    }

    /// `P(s,s|t)`: `P(s,s)` with `t` added to every entry.
    pub fn two_row_shifted(s: usize, t: usize) -> Tableau {
        Self::two_row(s, s).expect("s >= s").shifted(t)
    }

    /// `Q(k,k,1)`: rows `(1,3,4,…,k+1)`, `(2,k+3,…,2k+1)`, `(k+2)`.
    pub fn q_tableau(k: usize) -> Result<StandardTableau, TableauError> {
        if k == 0 {
            return Err(TableauError::InvalidArgument("Q(k,k,1) needs k >= 1".into()));
        }
        let first = std::iter::once(1).chain(3..=k + 1).collect();
        let second = std::iter::once(2).chain(k + 3..=2 * k + 1).collect();
        StandardTableau::new(vec![first, second, vec![k + 2]])
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StandardTableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<Tableau>()?.try_into()
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Tableau::deserialize(d)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}

/// Concatenates tableaux column-wise: columns of the first, then the second,
/// and so on.
pub fn concat(parts: &[&Tableau]) -> Result<Tableau, TableauError> {
    let cols: Vec<Vec<usize>> = parts.iter().flat_map(|t| t.columns()).collect();
    Tableau::from_columns(&cols)
}

/// The single box by which `big` exceeds `small`, if that is the relation.
fn added_box(small: &Partition, big: &Partition) -> Option<(usize, usize)> {
    if big.n() != small.n() + 1 || !big.contains(small) {
        return None;
    }
    (1..=big.len())
        .find(|&r| big.row(r) != small.row(r))
        .map(|r| (r, big.row(r)))
}

/// A chain of diagrams `D_0 ⊂ D_1 ⊂ … ⊂ D_n`, each one box larger.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeChain {
    diagrams: Vec<Partition>,
}

impl ShapeChain {
    pub fn new(diagrams: Vec<Partition>) -> Result<Self, TableauError> {
        match diagrams.first() {
            Some(d) if d.is_empty() => {}
            _ => return Err(TableauError::BadChain(0)),
        }
        for (i, w) in diagrams.windows(2).enumerate() {
            if added_box(&w[0], &w[1]).is_none() {
                return Err(TableauError::BadChain(i + 1));
            }
        }
        Ok(ShapeChain { diagrams })
    }

    pub fn diagrams(&self) -> &[Partition] {
        &self.diagrams
    }

    /// The standard tableau with `i` in the box `D_i \ D_{i−1}`.
    pub fn to_tableau(&self) -> StandardTableau {
        let last = self.diagrams.last().cloned().unwrap_or_default();
        let mut rows: Vec<Vec<usize>> = last.parts().iter().map(|&l| vec![0; l]).collect();
        for (i, w) in self.diagrams.windows(2).enumerate() {
            let (r, c) = added_box(&w[0], &w[1]).expect("validated chain");
            rows[r - 1][c - 1] = i + 1;
        }
        StandardTableau(Tableau { rows })
    }
}
