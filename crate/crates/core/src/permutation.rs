//! Permutations, inversion sets, reduced words and the staircase types.
//!
//! The staircase `λ_n` is identified with the pairs `1 <= a < b <= n` through
//! `(a, b) ↦ box (n + 1 - b, a)`. Under this identification the hook of the
//! box of `(a, b)` is `{(a, c), (c, b) : a < c < b}` plus the box itself, and
//! row `n + 1 - b` collects the pairs whose larger element is `b`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, Diagram, Partition};
use crate::error::{Error, Result};
use crate::tableau::{Tableau, TypeFilling};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(one_line));
            }
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    /// `σ(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "composing permutations of different sizes");
        Permutation { one_line: other.one_line.iter().map(|&i| self.apply(i)).collect() }
    }

    /// `σ · s_i`: exchanges the values in positions `i` and `i + 1`.
    pub fn times_generator(&self, i: usize) -> Permutation {
        let mut one_line = self.one_line.clone();
        one_line.swap(i - 1, i);
        Permutation { one_line }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Positions `i` with `σ(i) > σ(i + 1)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.apply(i) > self.apply(i + 1)).collect()
    }

    /// Pairs of values `a < b` with `a` appearing after `b`.
    pub fn inversion_set(&self) -> InversionSet {
        let n = self.size();
        let pos = self.inverse();
        let pairs = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .filter(|&(a, b)| pos.apply(a) > pos.apply(b))
            .collect();
        InversionSet { n, pairs }
    }

    /// `{(a, σ(b)) : a < b, σ(a) > σ(b)}`.
    pub fn rothe_diagram(&self) -> Diagram {
        let n = self.size();
        (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.apply(a) > self.apply(b))
            .map(|(a, b)| Cell::new(a, self.apply(b)))
            .collect()
    }

    pub fn vexillary_data(&self) -> VexillaryData {
        let w = &self.one_line;
        let n = w.len();
        let d: Vec<usize> = (0..n).map(|i| (i + 1..n).filter(|&j| w[j] < w[i]).count()).collect();
        let g: Vec<usize> = (0..n).map(|i| (0..i).filter(|&j| w[j] > w[i]).count()).collect();
        let mu = Partition::from_unsorted(d.iter().copied());
        let lambda = Partition::from_unsorted(g.iter().copied());
        let is_vexillary = lambda == mu.conjugate();
        VexillaryData { d, g, mu, lambda, is_vexillary }
    }

    pub fn is_vexillary(&self) -> bool {
        self.vexillary_data().is_vexillary
    }

    /// Strips leading and trailing fixed points and shifts the rest down.
    /// The identity normalizes to the identity of size 1.
    pub fn bar_normalize(&self) -> Permutation {
        let moved: Vec<usize> = (1..=self.size()).filter(|&i| self.apply(i) != i).collect();
        match (moved.first(), moved.last()) {
            (Some(&p), Some(&q)) => Permutation { one_line: (p..=q).map(|i| self.apply(i) - (p - 1)).collect() },
            _ => Permutation::identity(1),
        }
    }

    /// Parses comma-separated one-line notation, e.g. `3,2,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim().trim_start_matches('[').trim_end_matches(']');
        if text.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let values = text
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Malformed(format!("bad permutation entry {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some((1..=n).collect()) }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut w = cur.clone();
        if let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) {
            let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
            w.swap(i - 1, j);
            w[i..].reverse();
            self.next = Some(w);
        }
        Some(Permutation { one_line: cur })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VexillaryData {
    /// `d_i = |{j > i : σ(j) < σ(i)}|`
    pub d: Vec<usize>,
    /// `g_i = |{j < i : σ(j) > σ(i)}|`
    pub g: Vec<usize>,
    pub mu: Partition,
    pub lambda: Partition,
    pub is_vexillary: bool,
}

/// A set of pairs `a < b` within `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSet {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl InversionSet {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a == 0 || a >= b || b > n {
                return Err(Error::InvalidPair(a, b, n));
            }
            set.insert((a, b));
        }
        Ok(InversionSet { n, pairs: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    /// Checks the two hook conditions against the staircase valuation
    /// `θ(a, b) = b - a - 1`: every member has at most as many members strictly
    /// inside its hook as `θ`, every non-member at least as many.
    pub fn is_inversion_set(&self) -> bool {
        let n = self.n;
        for a in 1..=n {
            for b in a + 1..=n {
                let theta = b - a - 1;
                let inside = (a + 1..b).filter(|&c| self.contains(a, c)).count()
                    + (a + 1..b).filter(|&c| self.contains(c, b)).count();
                let ok = if self.contains(a, b) { theta <= inside } else { theta >= inside };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Orders `1..=n` so that `a < b` keeps `a` first exactly when `(a, b)` is
    /// not a member, and checks that the result reproduces the set.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let n = self.n;
        let mut one_line = vec![0; n];
        for v in 1..=n {
            let before = (1..v).filter(|&u| !self.contains(u, v)).count()
                + (v + 1..=n).filter(|&u| self.contains(v, u)).count();
            if one_line[before] != 0 {
                return Err(Error::NotAnInversionSet);
            }
            one_line[before] = v;
        }
        let sigma = Permutation { one_line };
        if sigma.inversion_set() != *self {
            return Err(Error::NotAnInversionSet);
        }
        Ok(sigma)
    }
}

/// A word `s_{i_1} ... s_{i_l}` recorded by its generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    /// Product of the generators, applied right to left on the identity of `S_n`.
    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        let mut sigma = Permutation::identity(n);
        for &i in &self.0 {
            if i == 0 || i >= n {
                return Err(Error::InvalidWord(format!("generator s_{i} outside S_{n}")));
            }
            sigma = sigma.times_generator(i);
        }
        Ok(sigma)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `|Red(σ)|`: maximal chains from the identity to `σ` in the right weak
/// order, counted downward through right descents.
pub fn count_reduced_words(sigma: &Permutation) -> BigUint {
    fn go(w: &Permutation, memo: &mut HashMap<Permutation, BigUint>) -> BigUint {
        let descents = w.right_descents();
        if descents.is_empty() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in descents {
            total += go(&w.times_generator(i), memo);
        }
        memo.insert(w.clone(), total.clone());
        total
    }
    go(sigma, &mut HashMap::new())
}

/// All reduced words of `σ`, refusing when there are more than `limit`.
pub fn enumerate_reduced_words(sigma: &Permutation, limit: usize) -> Result<Vec<ReducedWord>> {
    let total = count_reduced_words(sigma);
    if total.to_usize().is_none_or(|t| t > limit) {
        return Err(Error::LimitExceeded(limit as u128));
    }
    fn go(w: &Permutation, suffix: &mut Vec<usize>, out: &mut Vec<ReducedWord>) {
        let descents = w.right_descents();
        if descents.is_empty() {
            out.push(ReducedWord(suffix.iter().rev().copied().collect()));
            return;
        }
        for i in descents {
            suffix.push(i);
            go(&w.times_generator(i), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    go(sigma, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Box of the pair `(a, b)` in the staircase `λ_n`.
pub fn pair_to_cell(n: usize, (a, b): (usize, usize)) -> Cell {
    debug_assert!(1 <= a && a < b && b <= n);
    Cell::new(n + 1 - b, a)
}

/// Pair of a box of the staircase `λ_n`, or `None` outside it.
pub fn cell_to_pair(n: usize, c: Cell) -> Option<(usize, usize)> {
    if c.row == 0 || c.col == 0 || c.row + c.col > n {
        return None;
    }
    Some((c.col, n + 1 - c.row))
}

/// The staircase type `𝒜_n`: `θ = b - a - 1` on the box of `(a, b)`.
pub fn staircase_type(n: usize) -> Result<TypeFilling> {
    if n < 2 {
        return Err(Error::SizeTooSmall { min: 2, got: n });
    }
    let theta = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .map(|(a, b)| (pair_to_cell(n, (a, b)), (b - a - 1) as u32))
        .collect();
    Ok(TypeFilling::from_map_unchecked(theta))
}

/// `𝒯_σ`: the staircase type restricted to the boxes of `Inv(σ)`.
pub fn type_of_permutation(sigma: &Permutation) -> TypeFilling {
    let n = sigma.size();
    let theta: BTreeMap<Cell, u32> = sigma
        .inversion_set()
        .pairs()
        .iter()
        .map(|&(a, b)| (pair_to_cell(n, (a, b)), (b - a - 1) as u32))
        .collect();
    TypeFilling::from_map_unchecked(theta)
}

/// Reads a tableau of `𝒯_σ` as a chain `id ⋖ σ_1 ⋖ ... ⋖ σ` and returns the
/// generator added at each step.
pub fn tableau_to_reduced_word(sigma: &Permutation, t: &Tableau) -> Result<ReducedWord> {
    let n = sigma.size();
    if t.shape() != type_of_permutation(sigma).shape() {
        return Err(Error::InvalidTableauForType);
    }
    let mut cur = Permutation::identity(n);
    let mut letters = Vec::with_capacity(t.len());
    for c in t.filling_sequence().boxes {
        let (a, b) = cell_to_pair(n, c).ok_or(Error::InvalidTableauForType)?;
        let pos = cur.inverse();
        let (pa, pb) = (pos.apply(a), pos.apply(b));
        if pb != pa + 1 {
            return Err(Error::InvalidTableauForType);
        }
        letters.push(pa);
        cur = cur.times_generator(pa);
    }
    debug_assert_eq!(cur, *sigma);
    Ok(ReducedWord(letters))
}

/// Inverse of [`tableau_to_reduced_word`]: entry `i` goes to the box of the
/// inversion added by the `i`-th letter.
pub fn reduced_word_to_tableau(sigma: &Permutation, w: &ReducedWord) -> Result<Tableau> {
    let n = sigma.size();
    let mut cur = Permutation::identity(n);
    let mut entries = BTreeMap::new();
    for (k, &i) in w.0.iter().enumerate() {
        if i == 0 || i >= n {
            return Err(Error::InvalidWord(format!("generator s_{i} outside S_{n}")));
        }
        let (x, y) = (cur.apply(i), cur.apply(i + 1));
        if x > y {
            return Err(Error::InvalidWord(format!("letter {} at step {} is not reduced", i, k + 1)));
        }
        entries.insert(pair_to_cell(n, (x, y)), k as u32 + 1);
        cur = cur.times_generator(i);
    }
    if cur != *sigma {
        return Err(Error::InvalidWord(format!("word evaluates to {cur}, not {sigma}")));
    }
    Tableau::new(entries)
}
