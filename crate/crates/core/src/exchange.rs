//! Row and column exchanges on types.
//!
//! A dominant row `a` (every box has a box directly below with strictly
//! smaller theta) can be swapped with row `a + 1` after decrementing its
//! values; transporting tableaux along the swap is a bijection between the two
//! classes. The line-exchange algorithm repeats this until no row is
//! dominant. Column operations are the row operations on the transpose, since
//! hooks are invariant under transposition.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::Cell;
use crate::error::{Error, Result};
use crate::tableau::{Tableau, TypeFilling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Row,
    Column,
}

/// One elementary step of an exchange run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Empty rows (or columns) removed and the rest renumbered.
    Compress(Axis),
    /// `T↓_a` (row) or `T→^b` (column): lines `index` and `index + 1`.
    Forward(Axis, usize),
    /// `T↑_a` (row) or `T←_b` (column): lines `index - 1` and `index`.
    Backward(Axis, usize),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Compress(Axis::Row) => write!(f, "erase empty rows"),
            Step::Compress(Axis::Column) => write!(f, "erase empty columns"),
            Step::Forward(Axis::Row, a) => write!(f, "row {a} down"),
            Step::Forward(Axis::Column, b) => write!(f, "column {b} right"),
            Step::Backward(Axis::Row, a) => write!(f, "row {a} up"),
            Step::Backward(Axis::Column, b) => write!(f, "column {b} left"),
        }
    }
}

/// Bijection from the boxes of a result shape back to the boxes of the shape
/// the exchange started from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoxMapping {
    to_source: BTreeMap<Cell, Cell>,
}

impl BoxMapping {
    pub fn identity<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        BoxMapping { to_source: cells.into_iter().map(|c| (c, c)).collect() }
    }

    /// Source box of a result box.
    pub fn source(&self, c: Cell) -> Option<Cell> {
        self.to_source.get(&c).copied()
    }

    pub fn pairs(&self) -> &BTreeMap<Cell, Cell> {
        &self.to_source
    }

    pub fn inverse(&self) -> BTreeMap<Cell, Cell> {
        self.to_source.iter().map(|(&r, &s)| (s, r)).collect()
    }

    /// Follows a step that moves each current box `c` to `forward(c)`.
    fn then(&self, forward: impl Fn(Cell) -> Cell) -> BoxMapping {
        let to_source = self.to_source.iter().map(|(&c, &src)| (forward(c), src)).collect();
        BoxMapping { to_source }
    }

    fn transpose(&self) -> BoxMapping {
        BoxMapping { to_source: self.to_source.iter().map(|(r, s)| (r.transpose(), s.transpose())).collect() }
    }
}

/// Outcome of an exchange: the new type, where each of its boxes came from,
/// and the steps taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeResult {
    pub result: TypeFilling,
    pub mapping: BoxMapping,
    pub steps: Vec<Step>,
}

impl ExchangeResult {
    fn start(ty: &TypeFilling) -> Self {
        ExchangeResult {
            result: ty.clone(),
            mapping: BoxMapping::identity(ty.entries().keys().copied()),
            steps: Vec::new(),
        }
    }

    fn transpose(self) -> Self {
        let steps = self
            .steps
            .into_iter()
            .map(|s| match s {
                Step::Compress(a) => Step::Compress(flip(a)),
                Step::Forward(a, i) => Step::Forward(flip(a), i),
                Step::Backward(a, i) => Step::Backward(flip(a), i),
            })
            .collect();
        ExchangeResult { result: transpose_type(&self.result), mapping: self.mapping.transpose(), steps }
    }

    /// Sends a tableau of the source type to the corresponding tableau of the
    /// result type.
    pub fn transport_forward(&self, t: &Tableau) -> Tableau {
        let inv = self.mapping.inverse();
        t.transport(|c| inv[&c])
    }

    /// Sends a tableau of the result type back to the source type.
    pub fn transport_back(&self, t: &Tableau) -> Tableau {
        t.transport(|c| self.mapping.source(c).expect("box outside result shape"))
    }

    /// Continues with another exchange run, composing mappings.
    fn chain(self, next: ExchangeResult) -> ExchangeResult {
        let to_source = next
            .mapping
            .pairs()
            .iter()
            .map(|(&r, &mid)| (r, self.mapping.source(mid).expect("mapping gap")))
            .collect();
        let mut steps = self.steps;
        steps.extend(next.steps);
        ExchangeResult { result: next.result, mapping: BoxMapping { to_source }, steps }
    }
}

fn flip(a: Axis) -> Axis {
    match a {
        Axis::Row => Axis::Column,
        Axis::Column => Axis::Row,
    }
}

fn transpose_type(ty: &TypeFilling) -> TypeFilling {
    TypeFilling::from_map_unchecked(ty.entries().iter().map(|(c, &t)| (c.transpose(), t)).collect())
}

fn row_cols(ty: &TypeFilling, a: usize) -> Vec<usize> {
    ty.entries().keys().filter(|c| c.row == a).map(|c| c.col).collect()
}

fn dominant_row(ty: &TypeFilling, a: usize) -> bool {
    let cols = row_cols(ty, a);
    !cols.is_empty()
        && cols.iter().all(|&y| match ty.theta(Cell::new(a + 1, y)) {
            Some(below) => ty.theta(Cell::new(a, y)).unwrap() > below,
            None => false,
        })
}

fn dethroned_row(ty: &TypeFilling, a: usize) -> bool {
    let cols = row_cols(ty, a);
    a > 1
        && !cols.is_empty()
        && cols.iter().all(|&y| match ty.theta(Cell::new(a - 1, y)) {
            Some(above) => above <= ty.theta(Cell::new(a, y)).unwrap(),
            None => false,
        })
}

fn swap_rows_map(a: usize) -> impl Fn(Cell) -> Cell {
    move |c| match c.row {
        r if r == a => Cell::new(a + 1, c.col),
        r if r == a + 1 => Cell::new(a, c.col),
        _ => c,
    }
}

/// Exchange rows `a`, `a+1`, first subtracting `dec_upper` from row `a` and
/// adding `inc_lower` to row `a + 1`.
fn swap_rows_with(ty: &TypeFilling, a: usize, dec_upper: u32, inc_lower: u32) -> TypeFilling {
    let map = swap_rows_map(a);
    let theta = ty
        .entries()
        .iter()
        .map(|(&c, &t)| {
            let t = match c.row {
                r if r == a => t - dec_upper,
                r if r == a + 1 => t + inc_lower,
                _ => t,
            };
            (map(c), t)
        })
        .collect();
    TypeFilling::from_map_unchecked(theta)
}

pub fn is_dominant_row(ty: &TypeFilling, a: usize) -> bool {
    dominant_row(ty, a)
}

pub fn is_dominant_column(ty: &TypeFilling, b: usize) -> bool {
    dominant_row(&transpose_type(ty), b)
}

pub fn is_dethroned_row(ty: &TypeFilling, a: usize) -> bool {
    dethroned_row(ty, a)
}

pub fn is_dethroned_column(ty: &TypeFilling, b: usize) -> bool {
    dethroned_row(&transpose_type(ty), b)
}

fn swap_down_unchecked(state: ExchangeResult, a: usize) -> ExchangeResult {
    let result = swap_rows_with(&state.result, a, 1, 0);
    let mapping = state.mapping.then(swap_rows_map(a));
    let mut steps = state.steps;
    steps.push(Step::Forward(Axis::Row, a));
    ExchangeResult { result, mapping, steps }
}

fn swap_up_unchecked(state: ExchangeResult, a: usize) -> ExchangeResult {
    // T↑_a is the type whose ↓_{a-1} is T: row a moves up gaining one.
    let result = swap_rows_with(&state.result, a - 1, 0, 1);
    let mapping = state.mapping.then(swap_rows_map(a - 1));
    let mut steps = state.steps;
    steps.push(Step::Backward(Axis::Row, a));
    ExchangeResult { result, mapping, steps }
}

/// `T↓_a`.
pub fn swap_down(ty: &TypeFilling, a: usize) -> Result<ExchangeResult> {
    if !dominant_row(ty, a) {
        return Err(Error::RowNotDominant(a));
    }
    Ok(swap_down_unchecked(ExchangeResult::start(ty), a))
}

/// `T→^b`, the column analogue of [`swap_down`].
pub fn swap_right(ty: &TypeFilling, b: usize) -> Result<ExchangeResult> {
    let t = transpose_type(ty);
    if !dominant_row(&t, b) {
        return Err(Error::ColumnNotDominant(b));
    }
    Ok(swap_down_unchecked(ExchangeResult::start(&t), b).transpose())
}

/// `T↑_a`, defined when row `a` is dethroned; inverse of `↓_{a-1}`.
pub fn swap_up(ty: &TypeFilling, a: usize) -> Result<ExchangeResult> {
    if !dethroned_row(ty, a) {
        return Err(Error::RowNotDethroned(a));
    }
    Ok(swap_up_unchecked(ExchangeResult::start(ty), a))
}

/// Column analogue of [`swap_up`].
pub fn swap_left(ty: &TypeFilling, b: usize) -> Result<ExchangeResult> {
    let t = transpose_type(ty);
    if !dethroned_row(&t, b) {
        return Err(Error::ColumnNotDethroned(b));
    }
    Ok(swap_up_unchecked(ExchangeResult::start(&t), b).transpose())
}

/// Exchanges rows `a` and `a + 1` of a tableau, entries travelling with
/// their boxes.
pub fn tableau_swap_rows(t: &Tableau, a: usize) -> Tableau {
    t.transport(swap_rows_map(a))
}

pub fn tableau_swap_columns(t: &Tableau, b: usize) -> Tableau {
    t.transport(|c| swap_rows_map(b)(c.transpose()).transpose())
}

fn compress_rows(state: ExchangeResult) -> ExchangeResult {
    let (_, old_rows) = state.result.shape().compress_rows();
    let renumber: BTreeMap<usize, usize> = old_rows.iter().enumerate().map(|(i, &r)| (r, i + 1)).collect();
    let result = TypeFilling::from_map_unchecked(
        state.result.entries().iter().map(|(c, &t)| (Cell::new(renumber[&c.row], c.col), t)).collect(),
    );
    let mapping = state.mapping.then(|c| Cell::new(renumber[&c.row], c.col));
    let mut steps = state.steps;
    steps.push(Step::Compress(Axis::Row));
    ExchangeResult { result, mapping, steps }
}

fn row_count(ty: &TypeFilling) -> usize {
    ty.entries().keys().map(|c| c.row).max().unwrap_or(0)
}

fn line_exchange_from(state: ExchangeResult) -> ExchangeResult {
    let mut state = compress_rows(state);
    'scan: loop {
        let rows = row_count(&state.result);
        for i in 1..rows {
            if dominant_row(&state.result, i) {
                state = swap_down_unchecked(state, i);
                continue 'scan;
            }
        }
        return state;
    }
}

fn reverse_line_exchange_from(state: ExchangeResult) -> ExchangeResult {
    let mut state = compress_rows(state);
    'scan: loop {
        let rows = row_count(&state.result);
        for i in (2..=rows).rev() {
            if dethroned_row(&state.result, i) {
                state = swap_up_unchecked(state, i);
                continue 'scan;
            }
        }
        return state;
    }
}

/// `T^L`: erase empty rows, then repeatedly swap down the first dominant row,
/// restarting the scan from the top after every swap.
pub fn line_exchange(ty: &TypeFilling) -> ExchangeResult {
    line_exchange_from(ExchangeResult::start(ty))
}

/// `T^C`, the column analogue of [`line_exchange`].
pub fn column_exchange(ty: &TypeFilling) -> ExchangeResult {
    line_exchange_from(ExchangeResult::start(&transpose_type(ty))).transpose()
}

/// `T^E = (T^L)^C`.
pub fn full_exchange(ty: &TypeFilling) -> ExchangeResult {
    let lines = line_exchange(ty);
    let cols = column_exchange(&lines.result);
    lines.chain(cols)
}

/// `^L T`: erase empty rows, then repeatedly move up the last dethroned row,
/// restarting the scan from the bottom after every swap.
pub fn reverse_line_exchange(ty: &TypeFilling) -> ExchangeResult {
    reverse_line_exchange_from(ExchangeResult::start(ty))
}

pub fn reverse_column_exchange(ty: &TypeFilling) -> ExchangeResult {
    reverse_line_exchange_from(ExchangeResult::start(&transpose_type(ty))).transpose()
}

/// The type with empty rows erased, `T̄`.
pub fn erase_empty_rows(ty: &TypeFilling) -> ExchangeResult {
    compress_rows(ExchangeResult::start(ty))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{Diagram, Partition};
    use crate::permutation::{type_of_permutation, Permutation};
    use crate::tableau::enumerate_tableaux;

    fn ty(entries: &[((usize, usize), u32)]) -> TypeFilling {
        TypeFilling::from_entries(entries.iter().map(|&(b, t)| (b.into(), t))).unwrap()
    }

    fn ferrers(parts: &[usize]) -> Diagram {
        Diagram::ferrers(&Partition::new(parts.to_vec()).unwrap())
    }

    fn rows_10_00() -> TypeFilling {
        ty(&[((1, 1), 1), ((1, 2), 1), ((2, 1), 0), ((2, 2), 0)])
    }

    #[test]
    fn dominance() {
        assert!(is_dominant_row(&rows_10_00(), 1));
        assert!(!is_dominant_row(&rows_10_00(), 2));
        let hook = ty(&[((1, 1), 1), ((1, 2), 0), ((2, 1), 0)]);
        assert!(!is_dominant_row(&hook, 1));
        assert!(!is_dominant_row(&TypeFilling::standard(&ferrers(&[2, 2])), 1));
        assert!(!is_dominant_row(&rows_10_00(), 7));
        assert!(is_dethroned_row(&TypeFilling::standard(&ferrers(&[2, 2])), 2));
        assert!(!is_dethroned_row(&TypeFilling::standard(&ferrers(&[2, 2])), 1));
    }

    #[test]
    fn swaps() {
        let down = swap_down(&rows_10_00(), 1).unwrap();
        assert_eq!(down.result, TypeFilling::standard(&ferrers(&[2, 2])));
        assert_eq!(down.mapping.source(Cell::new(2, 1)), Some(Cell::new(1, 1)));

        let b = TypeFilling::balanced(&ferrers(&[2, 2]));
        assert!(is_dominant_column(&b, 1));
        let right = swap_right(&b, 1).unwrap();
        assert_eq!(right.result, TypeFilling::standard(&ferrers(&[2, 2])));
        assert_eq!(right.steps, vec![Step::Forward(Axis::Column, 1)]);

        let back = swap_up(&down.result, 2).unwrap();
        assert_eq!(back.result, rows_10_00());
        let back = swap_left(&right.result, 2).unwrap();
        assert_eq!(back.result, b);

        assert_eq!(swap_down(&b, 1), Err(Error::RowNotDominant(1)));
        assert_eq!(swap_right(&rows_10_00(), 1), Err(Error::ColumnNotDominant(1)));
    }

    #[test]
    fn tableau_swaps() {
        let t = Tableau::from_entries([
            (Cell::new(1, 1), 3),
            (Cell::new(1, 2), 4),
            (Cell::new(2, 1), 1),
            (Cell::new(2, 2), 2),
        ])
        .unwrap();
        let s = tableau_swap_rows(&t, 1);
        assert_eq!(s.entry(Cell::new(1, 1)), Some(1));
        assert_eq!(s.entry(Cell::new(2, 2)), Some(4));
        let row = Tableau::from_entries([(Cell::new(1, 1), 2), (Cell::new(1, 2), 1)]).unwrap();
        let swapped = tableau_swap_columns(&row, 1);
        assert_eq!(swapped.entry(Cell::new(1, 1)), Some(1));
        assert_eq!(swapped.entry(Cell::new(1, 2)), Some(2));
    }

    #[test]
    fn dominant_rows_order_entries() {
        let t = rows_10_00();
        for tab in enumerate_tableaux(&t).unwrap() {
            for y in 1..=2 {
                assert!(tab.entry(Cell::new(1, y)) > tab.entry(Cell::new(2, y)));
            }
        }
    }

    #[test]
    fn line_exchange_examples() {
        let r = line_exchange(&rows_10_00());
        assert_eq!(r.result, TypeFilling::standard(&ferrers(&[2, 2])));
        assert_eq!(r.steps, vec![Step::Compress(Axis::Row), Step::Forward(Axis::Row, 1)]);

        let t321 = type_of_permutation(&Permutation::new(vec![3, 2, 1]).unwrap());
        assert_eq!(line_exchange(&t321).result, t321);
        assert_eq!(full_exchange(&t321).result, t321);
        assert_eq!(full_exchange(&TypeFilling::empty()).result, TypeFilling::empty());
    }

    #[test]
    fn empty_rows_are_erased() {
        let t = ty(&[((2, 3), 0), ((5, 3), 0)]);
        let r = line_exchange(&t);
        assert_eq!(r.result, ty(&[((1, 3), 0), ((2, 3), 0)]));
        assert_eq!(r.mapping.source(Cell::new(2, 3)), Some(Cell::new(5, 3)));
        let c = column_exchange(&t);
        assert_eq!(c.result, ty(&[((2, 1), 0), ((5, 1), 0)]));
    }

    #[test]
    fn reverse_examples() {
        let r = reverse_line_exchange(&TypeFilling::standard(&ferrers(&[2, 2])));
        assert_eq!(r.result, rows_10_00());
        let t321 = type_of_permutation(&Permutation::new(vec![3, 2, 1]).unwrap());
        assert_eq!(reverse_line_exchange(&t321).result, t321);
        let row = TypeFilling::balanced(&ferrers(&[3]));
        assert_eq!(reverse_line_exchange(&row).result, row);
    }

    #[test]
    fn transport_round_trip() {
        let t = rows_10_00();
        let r = full_exchange(&t);
        let target = enumerate_tableaux(&r.result).unwrap();
        for tab in enumerate_tableaux(&t).unwrap() {
            let moved = r.transport_forward(&tab);
            assert!(target.contains(&moved));
            assert_eq!(r.transport_back(&moved), tab);
        }
    }
}
