//! Boxes, diagrams and partitions in matrix coordinates.
//!
//! Rows grow downward and columns grow rightward, both starting at 1. A
//! [`Diagram`] is an arbitrary finite set of boxes; a [`Partition`] is a
//! nonincreasing list of positive parts whose Ferrers diagram is
//! left-justified and top-justified.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A unit box at `(row, col)`. Ordering is row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn transpose(self) -> Self {
        Cell::new(self.col, self.row)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell::new(row, col)
    }
}

/// A finite set of boxes with no shape constraint.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    cells: BTreeSet<Cell>,
}

/// The hook based at a box, split into its arm and leg.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hook {
    pub arm: BTreeSet<Cell>,
    pub leg: BTreeSet<Cell>,
}

impl Hook {
    pub fn arm_len(&self) -> usize {
        self.arm.len()
    }

    pub fn leg_len(&self) -> usize {
        self.leg.len()
    }

    pub fn len(&self) -> usize {
        self.arm.len() + self.leg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn cells(&self) -> BTreeSet<Cell> {
        self.arm.union(&self.leg).copied().collect()
    }
}

/// `true` when `inner` lies in the hook based at `base` (arm strictly right in
/// the same row, leg weakly below in the same column).
#[inline]
pub fn in_hook(base: Cell, inner: Cell) -> bool {
    (inner.row == base.row && inner.col > base.col) || (inner.col == base.col && inner.row >= base.row)
}

impl Diagram {
    pub fn new() -> Self {
        Diagram::default()
    }

    /// Builds a diagram, rejecting boxes with a zero coordinate.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return Err(Error::InvalidBox(c));
            }
            set.insert(c);
        }
        Ok(Diagram { cells: set })
    }

    pub fn ferrers(lambda: &Partition) -> Self {
        let cells = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
            .collect();
        Diagram { cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// Boxes in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.cells.insert(c)
    }

    pub fn remove(&mut self, c: Cell) -> bool {
        self.cells.remove(&c)
    }

    pub fn hook_cells(&self, c: Cell) -> Result<Hook> {
        if !self.contains(c) {
            return Err(Error::BoxNotInDiagram(c));
        }
        let mut arm = BTreeSet::new();
        let mut leg = BTreeSet::new();
        for d in self.iter() {
            if d.row == c.row && d.col > c.col {
                arm.insert(d);
            } else if d.col == c.col && d.row >= c.row {
                leg.insert(d);
            }
        }
        Ok(Hook { arm, leg })
    }

    /// Hook length `h_S(c)`.
    pub fn hook_length(&self, c: Cell) -> Result<usize> {
        if !self.contains(c) {
            return Err(Error::BoxNotInDiagram(c));
        }
        Ok(self.iter().filter(|&d| in_hook(c, d)).count())
    }

    pub fn arm_length(&self, c: Cell) -> Result<usize> {
        if !self.contains(c) {
            return Err(Error::BoxNotInDiagram(c));
        }
        Ok(self.iter().filter(|d| d.row == c.row && d.col > c.col).count())
    }

    /// `∏ h_S(c)`, the number of types of this shape.
    pub fn hook_product(&self) -> BigUint {
        self.iter()
            .map(|c| BigUint::from(self.iter().filter(|&d| in_hook(c, d)).count()))
            .fold(BigUint::one(), |acc, h| acc * h)
    }

    pub fn row_lengths(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in self.iter() {
            *out.entry(c.row).or_insert(0) += 1;
        }
        out
    }

    pub fn col_lengths(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in self.iter() {
            *out.entry(c.col).or_insert(0) += 1;
        }
        out
    }

    pub fn transpose(&self) -> Diagram {
        Diagram { cells: self.iter().map(Cell::transpose).collect() }
    }

    /// Boxes with no box directly right and none directly below.
    pub fn corners(&self) -> Vec<Cell> {
        self.iter()
            .filter(|c| {
                !self.contains(Cell::new(c.row + 1, c.col)) && !self.contains(Cell::new(c.row, c.col + 1))
            })
            .collect()
    }

    /// YX stacking: push every row against the left wall, then sort the rows.
    pub fn stack_yx(&self) -> Partition {
        Partition::from_unsorted(self.row_lengths().into_values())
    }

    /// XY stacking: push every column against the top wall, then sort the
    /// columns; the result is reported by its rows.
    pub fn stack_xy(&self) -> Partition {
        Partition::from_unsorted(self.col_lengths().into_values()).conjugate()
    }

    /// Maximal 4-connected pieces, ordered by their smallest box.
    pub fn connected_components(&self) -> Vec<Diagram> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.iter() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(c) = stack.pop() {
                comp.insert(c);
                let mut nbrs = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
                if c.row > 1 {
                    nbrs.push(Cell::new(c.row - 1, c.col));
                }
                if c.col > 1 {
                    nbrs.push(Cell::new(c.row, c.col - 1));
                }
                for d in nbrs {
                    if self.contains(d) && seen.insert(d) {
                        stack.push(d);
                    }
                }
            }
            out.push(Diagram { cells: comp });
        }
        out
    }

    /// Renumbers nonempty rows to `1..=r`, preserving their order. Returns the
    /// new diagram and the map from new row index to old row index.
    pub fn compress_rows(&self) -> (Diagram, Vec<usize>) {
        let rows: Vec<usize> = self.row_lengths().into_keys().collect();
        let index: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i + 1)).collect();
        let cells = self.iter().map(|c| Cell::new(index[&c.row], c.col)).collect();
        (Diagram { cells }, rows)
    }

    /// `Some(λ)` when the diagram is exactly the Ferrers diagram of `λ`.
    pub fn as_partition(&self) -> Option<Partition> {
        let lambda = self.stack_yx();
        (Diagram::ferrers(&lambda) == *self).then_some(lambda)
    }
}

impl FromIterator<Cell> for Diagram {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Diagram { cells: iter.into_iter().collect() }
    }
}

impl<'a> IntoIterator for &'a Diagram {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;

    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter()
    }
}

/// A nonincreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Sorts arbitrary lengths into a partition, dropping zeros.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(lengths: I) -> Self {
        let mut parts: Vec<usize> = lengths.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i`, 1-based; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// Corners of the Ferrers diagram, in increasing row order.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.part(i + 1) < self.part(i))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// The partition with the corner in row `row` removed.
    pub fn remove_corner(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() || self.part(row + 1) == self.part(row) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        Some(Partition::from_unsorted(parts))
    }

    /// `n! / ∏ h(c)`, the number of standard Young tableaux of this shape.
    pub fn hook_length_formula(&self) -> BigUint {
        let n = self.size();
        let conj = self.conjugate();
        let mut num = BigUint::one();
        for k in 2..=n {
            num *= BigUint::from(k);
        }
        let mut den = BigUint::one();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                let hook = p - j + conj.part(j) - (i + 1) + 1;
                den *= BigUint::from(hook);
            }
        }
        num / den
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The staircase `(n-1, n-2, ..., 1)`.
pub fn staircase(n: usize) -> Partition {
    Partition { parts: (1..n).rev().collect() }
}
