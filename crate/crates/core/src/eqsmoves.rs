//! Moves between tableaux whose components are simultaneously singular or
//! nonsingular, and the classes they generate.
//!
//! The generating moves are the cyclic move `C`, its inverse, and the
//! Schützenberger transform, each applied either to the whole tableau or to
//! a block of columns `[a, b]` cut out by [`cut_points`].

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::partitions::Partition;
use crate::tableaux::{concat, StandardTableau, Tableau, TableauError, DEFAULT_MAX_N};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("move not applicable: {0}")]
    NotApplicable(String),
    #[error("columns [{0},{1}] do not form a block")]
    NotABlock(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    C,
    Cinv,
    SchBlock,
}

/// A move applied to the column block `[columns.0, columns.1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MoveLabel {
    pub kind: MoveKind,
    pub columns: (usize, usize),
}

impl fmt::Display for MoveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            MoveKind::C => "C",
            MoveKind::Cinv => "C^-1",
            MoveKind::SchBlock => "Sch",
        };
        write!(f, "{name}[{},{}]", self.columns.0, self.columns.1)
    }
}

/// Index `j` of the last row of maximal length, and that length.
fn top_block(shape: &Partition) -> (usize, usize) {
    let l1 = shape.row(1);
    (shape.parts().iter().take_while(|&&p| p == l1).count(), l1)
}

fn with_box(t: &Tableau, row: usize, value: usize) -> Result<Tableau, TableauError> {
    let mut rows = t.rows().to_vec();
    if rows.len() < row {
        rows.resize(row, Vec::new());
    }
    rows[row - 1].push(value);
    Tableau::new(rows)
}

/// The cyclic move: remove 1 by jeu de taquin, standardize, and put `n` in
/// the vacated box. Defined only when that box is the end of the last row of
/// maximal length.
pub fn c_move(t: &StandardTableau) -> Result<StandardTableau, MoveError> {
    let n = t.n();
    if n == 0 {
        return Err(MoveError::NotApplicable("empty tableau".into()));
    }
    let shape = t.shape();
    let (j, l1) = top_block(&shape);
    let mut rest = t.as_tableau().clone();
    let hole = rest.remove_min().expect("non-empty");
    if hole != (j, l1) {
        return Err(MoveError::NotApplicable(format!(
            "jeu de taquin hole lands at {hole:?}, not at the end of row {j}"
        )));
    }
    let st = rest.standardize()?;
    Ok(with_box(&st, j, n)?.try_into()?)
}

/// Inverse of [`c_move`]; needs `n` at the end of the last row of maximal
/// length.
pub fn c_inverse(s: &StandardTableau) -> Result<StandardTableau, MoveError> {
    let n = s.n();
    let shape = s.shape();
    let (j, l1) = top_block(&shape);
    if n == 0 || s.get(j, l1) != Some(n) {
        return Err(MoveError::NotApplicable(format!(
            "{n} is not at the end of row {j}"
        )));
    }
    let mut rest = s.drop_above(n - 1).shifted(1);
    rest.insert_min((j, l1), 1)?;
    Ok(rest.try_into()?)
}

/// The unrestricted version of the cyclic move: `n` goes wherever the jeu de
/// taquin hole lands.
///
/// This does not preserve singularity in general and is never used as an
/// equivalence move; it exists to reproduce counterexamples.
pub fn generalized_cyclic(t: &StandardTableau) -> StandardTableau {
    let n = t.n();
    if n == 0 {
        return t.clone();
    }
    let mut rest = t.as_tableau().clone();
    let (r, _) = rest.remove_min().expect("non-empty");
    let st = rest.standardize().expect("consecutive");
    with_box(&st, r, n)
        .expect("hole is an outer corner")
        .try_into()
        .expect("standard")
}

/// Column indices `i` such that columns `1..=i` hold exactly `1..=ς_i`,
/// together with `0` and the number of columns.
pub fn cut_points(t: &StandardTableau) -> BTreeSet<usize> {
    let m = t.shape().num_columns();
    let conj = t.shape().conjugate();
    let mut out = BTreeSet::from([0, m]);
    let mut prefix = 0;
    for i in 1..m {
        prefix += conj.parts()[i - 1];
        if t.get(1, i + 1) == Some(prefix + 1) {
            out.insert(i);
        }
    }
    out
}

/// Applies `label.kind` to the column block `[a, b]`, which must be bounded
/// by cut points (`a − 1` and `b`).
pub fn block_move(t: &StandardTableau, label: MoveLabel) -> Result<StandardTableau, MoveError> {
    let (a, b) = label.columns;
    let m = t.shape().num_columns();
    let cuts = cut_points(t);
    if a == 0 || a >= b || b > m || !cuts.contains(&(a - 1)) || !cuts.contains(&b) {
        return Err(MoveError::NotABlock(a, b));
    }
    let offset = if a > 1 { t.shape().prefix_sum(a - 1).expect("in range") } else { 0 };
    let block = t.column_range(a, b)?.standardize()?;
    let moved = match label.kind {
        MoveKind::C => c_move(&block)?,
        MoveKind::Cinv => c_inverse(&block)?,
        MoveKind::SchBlock => block.schuetzenberger(),
    };
    let left = if a > 1 { t.column_range(1, a - 1)? } else { Tableau::empty() };
    let right = if b < m { t.column_range(b + 1, m)? } else { Tableau::empty() };
    let glued = concat(&[&left, &moved.shifted(offset), &right])?;
    Ok(glued.try_into()?)
}

/// Every move that applies to `t`, with its result.
pub fn applicable_moves(t: &StandardTableau) -> Vec<(MoveLabel, StandardTableau)> {
    let cuts: Vec<usize> = cut_points(t).into_iter().collect();
    let mut out = Vec::new();
    for (x, &p) in cuts.iter().enumerate() {
        for &q in &cuts[x + 1..] {
            let (a, b) = (p + 1, q);
            if a >= b {
                continue;
            }
            for kind in [MoveKind::C, MoveKind::Cinv, MoveKind::SchBlock] {
                let label = MoveLabel { kind, columns: (a, b) };
                if let Ok(s) = block_move(t, label) {
                    out.push((label, s));
                }
            }
        }
    }
    out
}

/// A class of tableaux closed under the block moves.
#[derive(Debug, Clone)]
pub struct EqsClass {
    /// Members in breadth-first discovery order from the seed.
    pub members: Vec<StandardTableau>,
    /// `(from, move, to)` as indices into `members`.
    pub edges: Vec<(usize, MoveLabel, usize)>,
    representative: usize,
}

impl EqsClass {
    /// The member with lexicographically smallest row-reading word.
    pub fn representative(&self) -> &StandardTableau {
        &self.members[self.representative]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &StandardTableau) -> bool {
        self.members.iter().any(|m| m == t)
    }

    pub fn shape(&self) -> Partition {
        self.members[0].shape()
    }
}

pub fn eqs_class(t: &StandardTableau) -> Result<EqsClass, MoveError> {
    eqs_class_bounded(t, DEFAULT_MAX_N)
}

/// Breadth-first closure of `{t}` under [`applicable_moves`].
pub fn eqs_class_bounded(t: &StandardTableau, max_n: usize) -> Result<EqsClass, MoveError> {
    if t.n() > max_n {
        return Err(TableauError::TooLarge { n: t.n(), max: max_n }.into());
    }
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut members = vec![t.clone()];
    let mut edges = Vec::new();
    index.insert(t.reading_word(), 0);
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for (label, s) in applicable_moves(&members[i]) {
            let key = s.reading_word();
            let to = match index.get(&key) {
                Some(&to) => to,
                None => {
                    let to = members.len();
                    index.insert(key, to);
                    members.push(s);
                    queue.push_back(to);
                    to
                }
            };
            edges.push((i, label, to));
        }
    }
    let representative = (0..members.len())
        .min_by_key(|&i| members[i].reading_word())
        .expect("non-empty");
    Ok(EqsClass { members, edges, representative })
}

pub fn eqs_partition(shape: &Partition) -> Result<Vec<EqsClass>, MoveError> {
    eqs_partition_bounded(shape, DEFAULT_MAX_N)
}

/// Splits all tableaux of `shape` into classes, ordered by representative.
pub fn eqs_partition_bounded(shape: &Partition, max_n: usize) -> Result<Vec<EqsClass>, MoveError> {
    let all = StandardTableau::enumerate_bounded(shape, max_n)?;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut classes = Vec::new();
    for t in &all {
        if seen.contains(&t.reading_word()) {
            continue;
        }
        let class = eqs_class_bounded(t, max_n)?;
        seen.extend(class.members.iter().map(|m| m.reading_word()));
        classes.push(class);
    }
    classes.sort_by_key(|c| c.representative().reading_word());
    Ok(classes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub representative: StandardTableau,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dist: Option<usize>,
}

/// JSON-facing summary of a class partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub shape: Partition,
    pub class_count: usize,
    pub classes: Vec<ClassSummary>,
}

impl PartitionReport {
    pub fn new(shape: &Partition, classes: &[EqsClass]) -> Self {
        let classes = classes
            .iter()
            .map(|c| ClassSummary {
                representative: c.representative().clone(),
                size: c.len(),
                dist: c.representative().dist().ok(),
            })
            .collect::<Vec<_>>();
        PartitionReport {
            shape: shape.clone(),
            class_count: classes.len(),
            classes,
        }
    }
}

/// Result of checking that `dist` is constant on every class of a shape
/// `(r,s,1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistInvariantReport {
    pub shape: Partition,
    pub class_count: usize,
    /// Distinct `dist` values seen in each class, in class order.
    pub class_dists: Vec<BTreeSet<usize>>,
    pub violations: Vec<String>,
}

impl DistInvariantReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn dist_class_invariant(shape: &Partition) -> Result<DistInvariantReport, MoveError> {
    dist_class_invariant_bounded(shape, DEFAULT_MAX_N)
}

pub fn dist_class_invariant_bounded(
    shape: &Partition,
    max_n: usize,
) -> Result<DistInvariantReport, MoveError> {
    let parts = shape.parts();
    if parts.len() != 3 || parts[2] != 1 {
        return Err(TableauError::WrongShape {
            expected: "(r,s,1)".into(),
            actual: format!("({shape})"),
        }
        .into());
    }
    let classes = eqs_partition_bounded(shape, max_n)?;
    let mut class_dists = Vec::new();
    let mut violations = Vec::new();
    for class in &classes {
        let dists: BTreeSet<usize> = class
            .members
            .iter()
            .map(|m| m.dist())
            .collect::<Result<_, _>>()?;
        if dists.len() != 1 {
            violations.push(format!(
                "class of {} has dist values {:?}",
                class.representative(),
                dists
            ));
        }
        class_dists.push(dists);
    }
    Ok(DistInvariantReport {
        shape: shape.clone(),
        class_count: classes.len(),
        class_dists,
        violations,
    })
}
