//! Semistandard labellings of a type and their generating polynomials.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, Diagram, Partition};
use crate::error::{Error, Result};
use crate::tableau::{Indexed, TypeFilling};

/// Labels in `1..=m` on the boxes of a diagram, repetitions allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelledFilling {
    labels: BTreeMap<Cell, u32>,
}

impl LabelledFilling {
    pub fn new(labels: BTreeMap<Cell, u32>) -> Result<Self> {
        if let Some((_, &l)) = labels.iter().find(|(_, &l)| l == 0) {
            return Err(Error::LabelOutOfRange(l));
        }
        Ok(LabelledFilling { labels })
    }

    pub fn from_entries<I: IntoIterator<Item = (Cell, u32)>>(entries: I) -> Result<Self> {
        Self::new(entries.into_iter().collect())
    }

    pub fn shape(&self) -> Diagram {
        self.labels.keys().copied().collect()
    }

    pub fn label(&self, c: Cell) -> Option<u32> {
        self.labels.get(&c).copied()
    }

    pub fn labels(&self) -> &BTreeMap<Cell, u32> {
        &self.labels
    }

    /// Exponent vector of `x^F` in `m` variables.
    pub fn monomial(&self, m: usize) -> Result<Vec<u32>> {
        let mut exps = vec![0u32; m];
        for &l in self.labels.values() {
            if l as usize > m {
                return Err(Error::LabelOutOfRange(m as u32));
            }
            exps[l as usize - 1] += 1;
        }
        Ok(exps)
    }
}

/// Polynomial in `m` variables with nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    m: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl Polynomial {
    pub fn zero(m: usize) -> Self {
        Polynomial { m, terms: BTreeMap::new() }
    }

    pub fn vars(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.terms
    }

    pub fn coefficient(&self, exps: &[u32]) -> u64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coef: u64) {
        assert_eq!(exps.len(), self.m, "exponent vector length");
        if coef > 0 {
            *self.terms.entry(exps).or_insert(0) += coef;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `x_1 = ... = x_m = 1`.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Invariant under swapping any two adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.m).all(|i| {
            self.terms.iter().all(|(e, &c)| {
                let mut s = e.clone();
                s.swap(i - 1, i);
                self.coefficient(&s) == c
            })
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Largest exponent vectors first reads like the usual leading term.
        for (k, (exps, &c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            match (c, mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{}", mono.join("*"))?,
                _ => write!(f, "{c}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u32>,
    coef: u64,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    m: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            m: self.m,
            terms: self.terms.iter().map(|(e, &c)| TermJson { exps: e.clone(), coef: c }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(d)?;
        let mut p = Polynomial::zero(raw.m);
        for t in raw.terms {
            if t.exps.len() != raw.m {
                return Err(serde::de::Error::custom("exponent vector length differs from m"));
            }
            p.add_term(t.exps, t.coef);
        }
        Ok(p)
    }
}

/// Whether `f` is a semistandard labelling of `ty`: labels are distinct
/// within each column and some filling sequence of `ty` visits the boxes
/// with weakly increasing labels.
pub fn is_sst(ty: &TypeFilling, f: &LabelledFilling) -> Result<bool> {
    if ty.shape() != f.shape() {
        return Err(Error::ShapeMismatch);
    }
    let mut columns = BTreeSet::new();
    for (c, &l) in f.labels() {
        if !columns.insert((c.col, l)) {
            return Ok(false);
        }
    }
    let idx = Indexed::new(ty)?;
    let labels: Vec<u32> = idx.cells.iter().map(|c| f.labels()[c]).collect();
    let mut dead = HashSet::new();
    Ok(monotone_sequence_exists(&idx, &labels, idx.full(), &mut dead))
}

fn monotone_sequence_exists(idx: &Indexed, labels: &[u32], remaining: u128, dead: &mut HashSet<u128>) -> bool {
    if remaining == 0 {
        return true;
    }
    if dead.contains(&remaining) {
        return false;
    }
    let mut rest = remaining;
    let mut level = u32::MAX;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        level = level.min(labels[i]);
        rest &= rest - 1;
    }
    for i in idx.erasable_in(remaining) {
        if labels[i] == level && monotone_sequence_exists(idx, labels, remaining & !(1u128 << i), dead) {
            return true;
        }
    }
    dead.insert(remaining);
    false
}

/// `Σ x^F` over semistandard labellings `F` of `ty` with labels in `1..=m`,
/// by checking all `m^|S|` labellings. Fails when that exceeds `budget`.
pub fn sst_polynomial(ty: &TypeFilling, m: usize, budget: u128) -> Result<Polynomial> {
    let n = ty.len();
    let candidates = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if candidates > budget {
        return Err(Error::LimitExceeded(budget));
    }
    let mut poly = Polynomial::zero(m);
    if m == 0 {
        if n == 0 {
            poly.add_term(Vec::new(), 1);
        }
        return Ok(poly);
    }
    let cells: Vec<Cell> = ty.entries().keys().copied().collect();
    let mut digits = vec![1u32; n];
    loop {
        let f = LabelledFilling { labels: cells.iter().copied().zip(digits.iter().copied()).collect() };
        if is_sst(ty, &f)? {
            poly.add_term(f.monomial(m)?, 1);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(poly);
            }
            if digits[pos] < m as u32 {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 1;
            pos += 1;
        }
    }
}

/// The Schur polynomial `s_λ(x_1..x_m)` from semistandard Young tableaux
/// (rows weakly increasing, columns strictly increasing). At most `budget`
/// tableaux are generated.
pub fn classical_schur(lambda: &Partition, m: usize, budget: u128) -> Result<Polynomial> {
    let cells: Vec<Cell> = Diagram::ferrers(lambda).iter().collect();
    let mut labels: BTreeMap<Cell, u32> = BTreeMap::new();
    let mut poly = Polynomial::zero(m);
    let mut produced = 0u128;

    fn go(
        cells: &[Cell],
        k: usize,
        m: u32,
        labels: &mut BTreeMap<Cell, u32>,
        poly: &mut Polynomial,
        produced: &mut u128,
        budget: u128,
    ) -> Result<()> {
        if k == cells.len() {
            *produced += 1;
            if *produced > budget {
                return Err(Error::LimitExceeded(budget));
            }
            let mut exps = vec![0u32; m as usize];
            for &l in labels.values() {
                exps[l as usize - 1] += 1;
            }
            poly.add_term(exps, 1);
            return Ok(());
        }
        let c = cells[k];
        let left = if c.col > 1 { labels[&Cell::new(c.row, c.col - 1)] } else { 1 };
        let up = if c.row > 1 { labels[&Cell::new(c.row - 1, c.col)] + 1 } else { 1 };
        for l in left.max(up)..=m {
            labels.insert(c, l);
            go(cells, k + 1, m, labels, poly, produced, budget)?;
        }
        labels.remove(&c);
        Ok(())
    }

    go(&cells, 0, m as u32, &mut labels, &mut poly, &mut produced, budget)?;
    Ok(poly)
}
