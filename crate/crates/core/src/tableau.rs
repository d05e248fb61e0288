//! Types of tableaux and the filling process.
//!
//! A type assigns to every box `c` of a diagram an integer
//! `0 <= theta(c) <= h(c) - 1`. The class `Tab(T)` of a type is the set of
//! bijective fillings whose hook statistics reproduce `theta`; it is generated
//! by repeatedly erasing an erasable box and recording the order of erasure.

use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::diagram::{in_hook, Cell, Diagram};
use crate::error::{Error, Result};

/// Default cap on the number of residual subsets memoized by
/// [`count_tableaux`].
pub const DEFAULT_MEMO_LIMIT: usize = 1 << 22;

/// A type: a diagram together with a bounded integer per box.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeFilling {
    theta: BTreeMap<Cell, u32>,
}

impl TypeFilling {
    /// Validates `0 <= theta(c) <= h(c) - 1` for every box.
    pub fn new(theta: BTreeMap<Cell, u32>) -> Result<Self> {
        let shape: Diagram = Diagram::from_cells(theta.keys().copied())?;
        for (&c, &t) in &theta {
            let h = shape.hook_length(c)? as u32;
            if t >= h {
                return Err(Error::ThetaOutOfRange { cell: c, theta: t, max: h - 1 });
            }
        }
        Ok(TypeFilling { theta })
    }

    pub fn from_entries<I: IntoIterator<Item = (Cell, u32)>>(entries: I) -> Result<Self> {
        TypeFilling::new(entries.into_iter().collect())
    }

    pub(crate) fn from_map_unchecked(theta: BTreeMap<Cell, u32>) -> Self {
        TypeFilling { theta }
    }

    pub fn empty() -> Self {
        TypeFilling::default()
    }

    /// The all-zeros type, whose class is the standard tableaux.
    pub fn standard(shape: &Diagram) -> Self {
        TypeFilling { theta: shape.iter().map(|c| (c, 0)).collect() }
    }

    /// Arm lengths, whose class is the balanced tableaux.
    pub fn balanced(shape: &Diagram) -> Self {
        let theta = shape
            .iter()
            .map(|c| (c, shape.iter().filter(|d| d.row == c.row && d.col > c.col).count() as u32))
            .collect();
        TypeFilling { theta }
    }

    pub fn shape(&self) -> Diagram {
        self.theta.keys().copied().collect()
    }

    pub fn theta(&self, c: Cell) -> Option<u32> {
        self.theta.get(&c).copied()
    }

    pub fn entries(&self) -> &BTreeMap<Cell, u32> {
        &self.theta
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.theta.contains_key(&c)
    }

    /// `theta(c) == 0` and no other box whose hook contains `c` has theta 0.
    pub fn is_erasable(&self, c: Cell) -> Result<bool> {
        let t = self.theta(c).ok_or(Error::BoxNotInDiagram(c))?;
        if t != 0 {
            return Ok(false);
        }
        Ok(self.theta.iter().all(|(&d, &td)| d == c || !in_hook(d, c) || td != 0))
    }

    /// Erasable boxes in row-major order. Never empty for a nonempty type.
    pub fn erasable_boxes(&self) -> Result<Vec<Cell>> {
        if self.is_empty() {
            return Err(Error::EmptyShape);
        }
        let out: Vec<Cell> = self
            .theta
            .keys()
            .copied()
            .filter(|&c| self.is_erasable(c).unwrap_or(false))
            .collect();
        debug_assert!(!out.is_empty());
        Ok(out)
    }

    /// Removes an erasable box and decrements theta on every box whose hook
    /// contained it.
    pub fn erase(&self, c: Cell) -> Result<TypeFilling> {
        if !self.is_erasable(c)? {
            return Err(Error::NotErasable(c));
        }
        let mut theta = self.theta.clone();
        theta.remove(&c);
        for (&d, t) in theta.iter_mut() {
            if in_hook(d, c) {
                debug_assert!(*t > 0);
                *t -= 1;
            }
        }
        Ok(TypeFilling { theta })
    }
}

/// A bijective filling of a diagram with `1..=n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    entries: BTreeMap<Cell, u32>,
}

impl Tableau {
    pub fn new(entries: BTreeMap<Cell, u32>) -> Result<Self> {
        Diagram::from_cells(entries.keys().copied())?;
        let n = entries.len() as u32;
        let mut seen = vec![false; entries.len()];
        for (&c, &e) in &entries {
            if e == 0 || e > n || std::mem::replace(&mut seen[(e - 1) as usize], true) {
                return Err(Error::InvalidTableau(format!("entry {e} at {c} is out of range or repeated")));
            }
        }
        Ok(Tableau { entries })
    }

    pub fn from_entries<I: IntoIterator<Item = (Cell, u32)>>(entries: I) -> Result<Self> {
        Tableau::new(entries.into_iter().collect())
    }

    pub(crate) fn from_map_unchecked(entries: BTreeMap<Cell, u32>) -> Self {
        Tableau { entries }
    }

    /// The tableau assigning `i` to the `i`-th box of `sequence`.
    pub fn from_sequence(sequence: &[Cell]) -> Result<Self> {
        let entries: BTreeMap<Cell, u32> =
            sequence.iter().enumerate().map(|(i, &c)| (c, i as u32 + 1)).collect();
        if entries.len() != sequence.len() {
            return Err(Error::InvalidTableau("filling sequence repeats a box".into()));
        }
        Tableau::new(entries)
    }

    pub fn shape(&self) -> Diagram {
        self.entries.keys().copied().collect()
    }

    pub fn entry(&self, c: Cell) -> Option<u32> {
        self.entries.get(&c).copied()
    }

    pub fn entries(&self) -> &BTreeMap<Cell, u32> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `theta(c)` = number of boxes in the hook of `c` holding a smaller entry.
    pub fn type_of(&self) -> TypeFilling {
        let theta = self
            .entries
            .iter()
            .map(|(&c, &t)| {
                let smaller = self.entries.iter().filter(|(&d, &td)| in_hook(c, d) && td < t).count();
                (c, smaller as u32)
            })
            .collect();
        TypeFilling { theta }
    }

    /// Boxes sorted by entry: the filling sequence that produces this tableau.
    pub fn filling_sequence(&self) -> FillingSequence {
        let mut boxes = vec![Cell::new(0, 0); self.entries.len()];
        for (&c, &e) in &self.entries {
            boxes[(e - 1) as usize] = c;
        }
        FillingSequence { boxes }
    }

    /// Relabels boxes through `map` (old box -> new box).
    pub fn transport(&self, map: impl Fn(Cell) -> Cell) -> Tableau {
        Tableau { entries: self.entries.iter().map(|(&c, &e)| (map(c), e)).collect() }
    }
}

/// An order of erasure; entry `i` of the associated tableau sits at `boxes[i-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FillingSequence {
    pub boxes: Vec<Cell>,
}

impl FillingSequence {
    pub fn tableau(&self) -> Result<Tableau> {
        Tableau::from_sequence(&self.boxes)
    }

    /// Whether every step erases an erasable box of the residual type and the
    /// sequence exhausts the shape.
    pub fn is_valid_for(&self, ty: &TypeFilling) -> bool {
        let Ok(idx) = Indexed::new(ty) else { return false };
        if self.boxes.len() != idx.len() {
            return false;
        }
        let mut remaining = idx.full();
        for c in &self.boxes {
            match idx.position(*c) {
                Some(i) if remaining >> i & 1 == 1 && idx.erasable(i, remaining) => remaining &= !(1u128 << i),
                _ => return false,
            }
        }
        true
    }
}

/// Row-major indexing of a type with precomputed hook masks, used by the
/// counting and enumeration routines. Shapes are limited to 128 boxes.
#[derive(Debug, Clone)]
pub(crate) struct Indexed {
    pub cells: Vec<Cell>,
    pub theta: Vec<u32>,
    /// `hook[i]`: boxes of `H(i)` other than `i`.
    pub hook: Vec<u128>,
    /// `above[i]`: boxes `d != i` whose hook contains `i`.
    pub above: Vec<u128>,
}

impl Indexed {
    pub fn new(ty: &TypeFilling) -> Result<Self> {
        let n = ty.len();
        if n > 128 {
            return Err(Error::ShapeTooLarge(n));
        }
        let cells: Vec<Cell> = ty.theta.keys().copied().collect();
        let theta: Vec<u32> = ty.theta.values().copied().collect();
        let mut hook = vec![0u128; n];
        let mut above = vec![0u128; n];
        for (i, &c) in cells.iter().enumerate() {
            for (j, &d) in cells.iter().enumerate() {
                if i != j && in_hook(c, d) {
                    hook[i] |= 1 << j;
                    above[j] |= 1 << i;
                }
            }
        }
        Ok(Indexed { cells, theta, hook, above })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn full(&self) -> u128 {
        if self.cells.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.cells.len()) - 1
        }
    }

    pub fn position(&self, c: Cell) -> Option<usize> {
        self.cells.binary_search(&c).ok()
    }

    /// Theta of box `i` in the residual type on `remaining`.
    #[inline]
    pub fn residual(&self, i: usize, remaining: u128) -> u32 {
        let erased = self.full() & !remaining;
        self.theta[i] - (self.hook[i] & erased).count_ones()
    }

    #[inline]
    pub fn erasable(&self, i: usize, remaining: u128) -> bool {
        if self.residual(i, remaining) != 0 {
            return false;
        }
        let mut others = self.above[i] & remaining;
        while others != 0 {
            let d = others.trailing_zeros() as usize;
            if self.residual(d, remaining) == 0 {
                return false;
            }
            others &= others - 1;
        }
        true
    }

    /// Erasable boxes of the residual type, as indices in row-major order.
    pub fn erasable_in(&self, remaining: u128) -> Vec<usize> {
        let mut out = Vec::new();
        let mut rest = remaining;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            if self.erasable(i, remaining) {
                out.push(i);
            }
            rest &= rest - 1;
        }
        out
    }
}

/// Subset-memoized counter over residual box sets.
pub(crate) struct Counter<'a> {
    idx: &'a Indexed,
    memo: HashMap<u128, BigUint>,
    limit: usize,
}

impl<'a> Counter<'a> {
    pub fn new(idx: &'a Indexed, limit: usize) -> Self {
        Counter { idx, memo: HashMap::new(), limit }
    }

    pub fn count(&mut self, remaining: u128) -> BigUint {
        if remaining == 0 {
            return BigUint::one();
        }
        if let Some(v) = self.memo.get(&remaining) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in self.idx.erasable_in(remaining) {
            total += self.count(remaining & !(1u128 << i));
        }
        if self.memo.len() < self.limit {
            self.memo.insert(remaining, total.clone());
        }
        total
    }
}

/// `|Tab(T)|`.
pub fn count_tableaux(ty: &TypeFilling) -> Result<BigUint> {
    count_tableaux_with_limit(ty, DEFAULT_MEMO_LIMIT)
}

/// `|Tab(T)|` with at most `memo_limit` memoized residual subsets; beyond it
/// the recursion keeps going without storing new entries.
pub fn count_tableaux_with_limit(ty: &TypeFilling, memo_limit: usize) -> Result<BigUint> {
    let idx = Indexed::new(ty)?;
    Ok(Counter::new(&idx, memo_limit).count(idx.full()))
}

/// Number of tableaux of `ty` whose first entries sit at `prefix`, in order.
/// Zero when some forced step is not erasable.
pub fn count_with_prefix(ty: &TypeFilling, prefix: &[Cell]) -> Result<BigUint> {
    let idx = Indexed::new(ty)?;
    let mut remaining = idx.full();
    for &c in prefix {
        let i = idx.position(c).ok_or(Error::BoxOutsideShape(c))?;
        if remaining >> i & 1 == 0 || !idx.erasable(i, remaining) {
            return Ok(BigUint::zero());
        }
        remaining &= !(1u128 << i);
    }
    Ok(Counter::new(&idx, DEFAULT_MEMO_LIMIT).count(remaining))
}

/// Calls `visit` on every filling sequence of `ty` in lexicographic order of
/// row-major erasure choices. Stops early when `visit` breaks.
pub fn for_each_filling_sequence<F>(ty: &TypeFilling, mut visit: F) -> Result<()>
where
    F: FnMut(&[Cell]) -> ControlFlow<()>,
{
    let idx = Indexed::new(ty)?;
    let mut seq = Vec::with_capacity(idx.len());
    fn go<F: FnMut(&[Cell]) -> ControlFlow<()>>(
        idx: &Indexed,
        remaining: u128,
        seq: &mut Vec<Cell>,
        visit: &mut F,
    ) -> ControlFlow<()> {
        if remaining == 0 {
            return visit(seq);
        }
        for i in idx.erasable_in(remaining) {
            seq.push(idx.cells[i]);
            go(idx, remaining & !(1u128 << i), seq, visit)?;
            seq.pop();
        }
        ControlFlow::Continue(())
    }
    let _ = go(&idx, idx.full(), &mut seq, &mut visit);
    Ok(())
}

/// Every tableau of type `ty`.
pub fn enumerate_tableaux(ty: &TypeFilling) -> Result<Vec<Tableau>> {
    Ok(enumerate_tableaux_limited(ty, usize::MAX)?.0)
}

/// At most `limit` tableaux of type `ty`; the flag reports truncation.
pub fn enumerate_tableaux_limited(ty: &TypeFilling, limit: usize) -> Result<(Vec<Tableau>, bool)> {
    let mut out = Vec::new();
    let mut truncated = false;
    for_each_filling_sequence(ty, |seq| {
        if out.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        let entries = seq.iter().enumerate().map(|(i, &c)| (c, i as u32 + 1)).collect();
        out.push(Tableau::from_map_unchecked(entries));
        ControlFlow::Continue(())
    })?;
    Ok((out, truncated))
}

/// Calls `visit` on every type of shape `shape` (odometer order, row-major).
pub fn for_each_type<F: FnMut(&TypeFilling)>(shape: &Diagram, mut visit: F) -> Result<()> {
    let cells: Vec<Cell> = shape.iter().collect();
    let bounds: Vec<u32> = cells.iter().map(|&c| shape.hook_length(c).map(|h| h as u32)).collect::<Result<_>>()?;
    let mut digits = vec![0u32; cells.len()];
    loop {
        let ty = TypeFilling::from_map_unchecked(cells.iter().copied().zip(digits.iter().copied()).collect());
        visit(&ty);
        let mut k = cells.len();
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < bounds[k] {
                break;
            }
            digits[k] = 0;
        }
    }
}

/// Exhaustive statistics of `|Tab(T)|` over all types of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeStatistics {
    pub count_of_types: BigUint,
    /// Sum of `|Tab(T)|` over all types; equals `|S|!`.
    pub total: BigUint,
    pub mean: BigRational,
    pub variance: BigRational,
}

/// Enumerates `Typ(S)` (refusing when `∏ h` exceeds `limit`) and reports the
/// count, mean and variance of `|Tab(T)|` in exact arithmetic.
pub fn type_statistics(shape: &Diagram, limit: u128) -> Result<TypeStatistics> {
    let types = shape.hook_product();
    match types.to_u128() {
        Some(t) if t <= limit => {}
        _ => return Err(Error::LimitExceeded(limit)),
    }
    let mut total = BigUint::zero();
    let mut squares = BigUint::zero();
    let mut failure = None;
    for_each_type(shape, |ty| match count_tableaux(ty) {
        Ok(c) => {
            squares += &c * &c;
            total += c;
        }
        Err(e) => failure = Some(e),
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let n = BigInt::from(types.clone());
    let mean = BigRational::new(BigInt::from(total.clone()), n.clone());
    let second = BigRational::new(BigInt::from(squares), n);
    let variance = second - &mean * &mean;
    Ok(TypeStatistics { count_of_types: types, total, mean, variance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Partition;

    fn c(r: usize, col: usize) -> Cell {
        Cell::new(r, col)
    }

    fn ferrers(parts: &[usize]) -> Diagram {
        Diagram::ferrers(&Partition::new(parts.to_vec()).unwrap())
    }

    fn ty(entries: &[((usize, usize), u32)]) -> TypeFilling {
        TypeFilling::from_entries(entries.iter().map(|&(b, t)| (b.into(), t))).unwrap()
    }

    fn tab(entries: &[((usize, usize), u32)]) -> Tableau {
        Tableau::from_entries(entries.iter().map(|&(b, t)| (b.into(), t))).unwrap()
    }

    #[test]
    fn type_of_hand_example() {
        let t = tab(&[((1, 1), 2), ((1, 2), 1), ((2, 1), 3)]);
        assert_eq!(t.type_of(), ty(&[((1, 1), 1), ((1, 2), 0), ((2, 1), 0)]));
        assert_eq!(tab(&[((1, 1), 1)]).type_of(), ty(&[((1, 1), 0)]));
        let syt = tab(&[((1, 1), 1), ((1, 2), 2), ((2, 1), 3), ((2, 2), 4)]);
        assert_eq!(syt.type_of(), TypeFilling::standard(&ferrers(&[2, 2])));
    }

    #[test]
    fn type_bounds_are_checked() {
        let err = TypeFilling::from_entries([(c(1, 1), 1)]).unwrap_err();
        assert!(matches!(err, Error::ThetaOutOfRange { .. }));
    }

    #[test]
    fn standard_and_balanced() {
        let b = TypeFilling::balanced(&ferrers(&[2, 2]));
        assert_eq!(b, ty(&[((1, 1), 1), ((1, 2), 0), ((2, 1), 1), ((2, 2), 0)]));
        let row = TypeFilling::balanced(&ferrers(&[3]));
        assert_eq!(row, ty(&[((1, 1), 2), ((1, 2), 1), ((1, 3), 0)]));
        assert!(TypeFilling::standard(&ferrers(&[3, 1])).entries().values().all(|&t| t == 0));
    }

    #[test]
    fn erasability() {
        let st = TypeFilling::standard(&ferrers(&[2, 1]));
        assert!(st.is_erasable(c(1, 1)).unwrap());
        assert!(!st.is_erasable(c(1, 2)).unwrap());
        assert!(!st.is_erasable(c(2, 1)).unwrap());
        let b = TypeFilling::balanced(&ferrers(&[2, 2]));
        assert!(b.is_erasable(c(1, 2)).unwrap());
        assert!(!b.is_erasable(c(2, 2)).unwrap());
        assert!(TypeFilling::standard(&ferrers(&[1])).is_erasable(c(1, 1)).unwrap());
        assert_eq!(st.is_erasable(c(3, 3)), Err(Error::BoxNotInDiagram(c(3, 3))));
    }

    #[test]
    fn erasable_lists() {
        assert_eq!(TypeFilling::standard(&ferrers(&[2, 1])).erasable_boxes().unwrap(), vec![c(1, 1)]);
        assert_eq!(TypeFilling::balanced(&ferrers(&[2, 2])).erasable_boxes().unwrap(), vec![c(1, 2)]);
        assert_eq!(TypeFilling::standard(&ferrers(&[1])).erasable_boxes().unwrap(), vec![c(1, 1)]);
        assert_eq!(TypeFilling::empty().erasable_boxes(), Err(Error::EmptyShape));
    }

    #[test]
    fn erasing() {
        let b = TypeFilling::balanced(&ferrers(&[2, 2]));
        assert_eq!(b.erase(c(1, 2)).unwrap(), ty(&[((1, 1), 0), ((2, 1), 1), ((2, 2), 0)]));
        assert_eq!(TypeFilling::standard(&ferrers(&[1])).erase(c(1, 1)).unwrap(), TypeFilling::empty());
        let st = TypeFilling::standard(&ferrers(&[2, 1]));
        assert_eq!(st.erase(c(1, 1)).unwrap(), ty(&[((1, 2), 0), ((2, 1), 0)]));
        assert_eq!(st.erase(c(2, 1)), Err(Error::NotErasable(c(2, 1))));
    }

    #[test]
    fn enumerate_hand_example() {
        let t = ty(&[((1, 1), 1), ((1, 2), 0), ((2, 1), 0)]);
        let all = enumerate_tableaux(&t).unwrap();
        assert_eq!(
            all,
            vec![
                tab(&[((1, 1), 2), ((1, 2), 1), ((2, 1), 3)]),
                tab(&[((1, 1), 2), ((1, 2), 3), ((2, 1), 1)]),
            ]
        );
    }

    #[test]
    fn enumerate_standard_two_two() {
        let all = enumerate_tableaux(&TypeFilling::standard(&ferrers(&[2, 2]))).unwrap();
        assert_eq!(
            all,
            vec![
                tab(&[((1, 1), 1), ((1, 2), 2), ((2, 1), 3), ((2, 2), 4)]),
                tab(&[((1, 1), 1), ((1, 2), 3), ((2, 1), 2), ((2, 2), 4)]),
            ]
        );
    }

    #[test]
    fn single_row_has_one_tableau_per_type() {
        for_each_type(&ferrers(&[4]), |t| {
            assert_eq!(enumerate_tableaux(t).unwrap().len(), 1);
        })
        .unwrap();
    }

    #[test]
    fn counts() {
        assert_eq!(count_tableaux(&TypeFilling::balanced(&ferrers(&[2, 2]))).unwrap(), BigUint::from(2u32));
        assert_eq!(count_tableaux(&TypeFilling::empty()).unwrap(), BigUint::one());
        for_each_type(&ferrers(&[3, 1, 1]), |t| {
            assert_eq!(count_tableaux(t).unwrap(), BigUint::from(6u32));
        })
        .unwrap();
    }

    #[test]
    fn memo_limit_does_not_change_counts() {
        let t = TypeFilling::balanced(&ferrers(&[3, 3, 2]));
        let full = count_tableaux(&t).unwrap();
        assert_eq!(count_tableaux_with_limit(&t, 0).unwrap(), full);
        assert_eq!(count_tableaux_with_limit(&t, 3).unwrap(), full);
    }

    #[test]
    fn filling_sequences() {
        let t = tab(&[((1, 1), 2), ((1, 2), 1), ((2, 1), 3)]);
        assert_eq!(t.filling_sequence().boxes, vec![c(1, 2), c(1, 1), c(2, 1)]);
        assert!(t.filling_sequence().is_valid_for(&t.type_of()));
        let syt = tab(&[((1, 1), 1), ((1, 2), 3), ((2, 1), 2), ((2, 2), 4)]);
        assert_eq!(syt.filling_sequence().boxes[0], c(1, 1));
        assert_eq!(tab(&[((1, 1), 1)]).filling_sequence().boxes, vec![c(1, 1)]);
        let bogus = FillingSequence { boxes: vec![c(2, 1), c(1, 1), c(1, 2)] };
        assert!(!bogus.is_valid_for(&TypeFilling::standard(&ferrers(&[2, 1]))));
    }

    #[test]
    fn prefix_counts() {
        let t = ty(&[((1, 1), 1), ((1, 2), 0), ((2, 1), 0)]);
        assert_eq!(count_with_prefix(&t, &[c(1, 2)]).unwrap(), BigUint::one());
        assert_eq!(count_with_prefix(&t, &[c(1, 1)]).unwrap(), BigUint::zero());
        assert_eq!(count_with_prefix(&t, &[]).unwrap(), BigUint::from(2u32));
        assert!(count_with_prefix(&t, &[c(5, 5)]).is_err());
    }

    #[test]
    fn statistics() {
        let s = type_statistics(&ferrers(&[2, 1]), 1000).unwrap();
        assert_eq!(s.count_of_types, BigUint::from(3u32));
        assert_eq!(s.total, BigUint::from(6u32));
        assert_eq!(s.mean, BigRational::from_integer(2.into()));

        let s = type_statistics(&ferrers(&[1]), 1000).unwrap();
        assert_eq!(s.count_of_types, BigUint::one());
        assert_eq!(s.mean, BigRational::one());
        assert_eq!(s.variance, BigRational::zero());

        let s = type_statistics(&ferrers(&[2, 2]), 1000).unwrap();
        assert_eq!(s.count_of_types, BigUint::from(12u32));
        assert_eq!(s.mean, BigRational::from_integer(2.into()));

        assert_eq!(type_statistics(&ferrers(&[2, 2]), 11), Err(Error::LimitExceeded(11)));
    }
}
