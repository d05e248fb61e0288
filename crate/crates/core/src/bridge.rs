//! The falling construction `S(λ)` linking balanced tableaux to reduced
//! words of a vexillary permutation, blocks of a partition, and tableaux with
//! a prescribed initial segment.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::diagram::{Cell, Diagram, Partition};
use crate::error::{Error, Result};
use crate::exchange::{full_exchange, line_exchange, ExchangeResult};
use crate::permutation::{cell_to_pair, count_reduced_words, type_of_permutation, InversionSet, Permutation};
use crate::tableau::{count_with_prefix, TypeFilling};

/// Where a partition sits inside a staircase: `λ` occupies the top-left of
/// `λ_{k+1}` and `anchor` is a corner touching the boundary `row + col = k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Embedding {
    pub k: usize,
    pub anchor: Cell,
}

impl Embedding {
    /// Size of the ambient permutation group, `k + 1`.
    pub fn n(&self) -> usize {
        self.k + 1
    }
}

/// Corners `(a, b)` of `λ` maximizing `λ_a + λ'_b - 1`, in row order.
pub fn maximal_corners(lambda: &Partition) -> Vec<Cell> {
    let conj = lambda.conjugate();
    let score = |c: &Cell| lambda.part(c.row) + conj.part(c.col) - 1;
    let best = lambda.corners().iter().map(score).max().unwrap_or(0);
    lambda.corners().into_iter().filter(|c| score(c) == best).collect()
}

pub fn embed_in_staircase(lambda: &Partition) -> Result<Embedding> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let anchor = maximal_corners(lambda)[0];
    let k = lambda.part(anchor.row) + lambda.conjugate().part(anchor.col) - 1;
    Ok(Embedding { k, anchor })
}

/// State of the falling construction inside the staircase `λ_{size}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FallingState {
    pub fixed: Diagram,
    pub loose: Vec<Diagram>,
    pub size: usize,
}

impl FallingState {
    pub fn new(lambda: &Partition) -> Result<Self> {
        let emb = embed_in_staircase(lambda)?;
        Ok(Self::from_diagram(Diagram::ferrers(lambda), emb.n()))
    }

    fn from_diagram(current: Diagram, size: usize) -> Self {
        let fixed = anchored(&current, size);
        let rest: Diagram = current.iter().filter(|c| !fixed.contains(*c)).collect();
        FallingState { fixed, loose: rest.connected_components(), size }
    }

    pub fn current(&self) -> Diagram {
        self.fixed.iter().chain(self.loose.iter().flat_map(|d| d.iter())).collect()
    }

    pub fn is_settled(&self) -> bool {
        self.loose.is_empty()
    }

    /// Drops the first loose component that can move as far down as it
    /// goes. Returns false when nothing can move.
    pub fn step(&mut self) -> bool {
        let current = self.current();
        for comp in &self.loose {
            let others: BTreeSet<Cell> = current.iter().filter(|c| !comp.contains(*c)).collect();
            let fits = |d: usize| {
                comp.iter().all(|c| {
                    let moved = Cell::new(c.row + d, c.col);
                    moved.row + moved.col <= self.size && !others.contains(&moved)
                })
            };
            let mut d = 0;
            while fits(d + 1) {
                d += 1;
            }
            if d > 0 {
                let moved: Diagram = others
                    .iter()
                    .copied()
                    .chain(comp.iter().map(|c| Cell::new(c.row + d, c.col)))
                    .collect();
                *self = Self::from_diagram(moved, self.size);
                return true;
            }
        }
        false
    }
}

/// Union of the regions `R_(u,v)`: boxes weakly north-west of a boundary box
/// `(u, v)` inside that box's connected component.
fn anchored(d: &Diagram, size: usize) -> Diagram {
    let mut out = BTreeSet::new();
    for comp in d.connected_components() {
        for corner in comp.iter().filter(|c| c.row + c.col == size) {
            out.extend(comp.iter().filter(|c| c.row <= corner.row && c.col <= corner.col));
        }
    }
    out.into_iter().collect()
}

/// `S(λ)`: place `λ` in `λ_{k+1}` and let every component not anchored to
/// the boundary fall until nothing moves.
pub fn build_s_lambda(lambda: &Partition) -> Result<Diagram> {
    let mut state = FallingState::new(lambda)?;
    while !state.is_settled() {
        if !state.step() {
            let stuck = state.loose.iter().flat_map(|d| d.iter()).collect();
            return Err(Error::FallingStuck(stuck));
        }
    }
    Ok(state.fixed)
}

/// Inversion pairs of the boxes of `S(λ)`.
pub fn s_lambda_pairs(lambda: &Partition) -> Result<InversionSet> {
    let n = embed_in_staircase(lambda)?.n();
    let s = build_s_lambda(lambda)?;
    let pairs = s.iter().map(|c| cell_to_pair(n, c).expect("S(λ) lies in the staircase"));
    InversionSet::new(n, pairs)
}

/// `σ_λ`, the permutation whose inversion set is `S(λ)`.
pub fn sigma_lambda(lambda: &Partition) -> Result<Permutation> {
    s_lambda_pairs(lambda)?.to_permutation()
}

/// True when the line exchange of `𝒯_{σ_λ}` is the balanced type of `λ`.
pub fn verify_bridge(lambda: &Partition) -> bool {
    if lambda.is_empty() {
        return false;
    }
    match sigma_lambda(lambda) {
        Ok(sigma) => {
            line_exchange(&type_of_permutation(&sigma)).result == TypeFilling::balanced(&Diagram::ferrers(lambda))
        }
        Err(_) => false,
    }
}

/// A maximal run of equal parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub first_row: usize,
    pub last_row: usize,
    /// Upper-right corner `(first_row, λ_first_row)`.
    pub corner: Cell,
}

pub fn blocks(lambda: &Partition) -> Vec<Block> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=parts.len() {
        if i == parts.len() || parts[i] != parts[start] {
            out.push(Block {
                first_row: start + 1,
                last_row: i,
                corner: Cell::new(start + 1, parts[start]),
            });
            start = i;
        }
    }
    out
}

/// Number of balanced tableaux of shape `λ` with entry 1 in box `c`.
pub fn count_balanced_with_one_at(lambda: &Partition, c: Cell) -> Result<BigUint> {
    let shape = Diagram::ferrers(lambda);
    if !shape.contains(c) {
        return Err(Error::BoxOutsideShape(c));
    }
    count_with_prefix(&TypeFilling::balanced(&shape), &[c])
}

fn exchanged(sigma: &Permutation) -> Result<ExchangeResult> {
    if !sigma.is_vexillary() {
        return Err(Error::NotVexillary);
    }
    Ok(full_exchange(&type_of_permutation(sigma)))
}

fn check_fill(ex: &ExchangeResult, fill: &[Cell]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &z in fill {
        if !ex.result.contains(z) {
            return Err(Error::BoxOutsideShape(z));
        }
        if !seen.insert(z) {
            return Err(Error::Malformed(format!("box {z} repeated in partial fill")));
        }
    }
    Ok(())
}

/// `|N_{σ,U}|`: tableaux of `𝒯_σ^E` with entry `i` in box `fill[i-1]`.
pub fn partial_fill_count(sigma: &Permutation, fill: &[Cell]) -> Result<BigUint> {
    let ex = exchanged(sigma)?;
    check_fill(&ex, fill)?;
    count_with_prefix(&ex.result, fill)
}

/// The permutation `ω = τ⁻¹σ`, where `Inv(τ)` is the set of inversion pairs
/// the boxes of `fill` come from. Absent unless every initial segment of
/// `fill` maps onto an inversion set.
pub fn partial_fill_witness(sigma: &Permutation, fill: &[Cell]) -> Result<Option<Permutation>> {
    let ex = exchanged(sigma)?;
    check_fill(&ex, fill)?;
    let n = sigma.size();
    let mut pairs = Vec::with_capacity(fill.len());
    for &z in fill {
        let src = ex.mapping.source(z).expect("mapping covers the result shape");
        pairs.push(cell_to_pair(n, src).expect("source box is an inversion pair"));
        let prefix = InversionSet::new(n, pairs.iter().copied())?;
        if !prefix.is_inversion_set() {
            return Ok(None);
        }
    }
    let tau = InversionSet::new(n, pairs)?.to_permutation()?;
    Ok(Some(tau.inverse().compose(sigma)))
}

/// `|Red(ω)|` for the witness, or 0 when there is none.
pub fn partial_fill_witness_count(sigma: &Permutation, fill: &[Cell]) -> Result<BigUint> {
    Ok(partial_fill_witness(sigma, fill)?.map(|w| count_reduced_words(&w)).unwrap_or_default())
}

/// `μ` when the boxes of `Sh(𝒯_σ^E)` outside `fill` stack to the same
/// partition in both orders and the fill can start a tableau.
pub fn nice_partial(sigma: &Permutation, fill: &[Cell]) -> Result<Option<Partition>> {
    if partial_fill_witness(sigma, fill)?.is_none() {
        return Ok(None);
    }
    let shape = exchanged(sigma)?.result.shape();
    let rest: Diagram = shape.iter().filter(|c| !fill.contains(c)).collect();
    let (xy, yx) = (rest.stack_xy(), rest.stack_yx());
    Ok((xy == yx).then_some(xy))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> Diagram {
        list.iter().map(|&c| Cell::from(c)).collect()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn embedding() {
        let e = embed_in_staircase(&p(&[8, 7, 7, 7, 3, 3, 1])).unwrap();
        assert_eq!(e.k, 10);
        assert_eq!(e.anchor, Cell::new(4, 7));
        assert_eq!(embed_in_staircase(&p(&[1])).unwrap().k, 1);
        let e = embed_in_staircase(&p(&[2, 1])).unwrap();
        assert_eq!((e.k, e.anchor), (2, Cell::new(1, 2)));
        assert_eq!(maximal_corners(&p(&[2, 1])).len(), 2);
        assert_eq!(embed_in_staircase(&Partition::empty()), Err(Error::EmptyPartition));
    }

    #[test]
    fn falling_examples() {
        assert_eq!(build_s_lambda(&p(&[2, 1])).unwrap(), cells(&[(1, 1), (1, 2), (2, 1)]));
        assert_eq!(build_s_lambda(&p(&[1])).unwrap(), cells(&[(1, 1)]));
        assert_eq!(build_s_lambda(&p(&[2, 2])).unwrap(), cells(&[(1, 1), (1, 2), (2, 1), (2, 2)]));
        assert_eq!(build_s_lambda(&p(&[3, 1])).unwrap(), cells(&[(1, 1), (1, 2), (1, 3), (3, 1)]));
        assert_eq!(
            build_s_lambda(&p(&[2, 2, 1, 1])).unwrap(),
            cells(&[(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1)])
        );
    }

    #[test]
    fn sigma_lambda_examples() {
        assert_eq!(sigma_lambda(&p(&[1])).unwrap(), perm(&[2, 1]));
        assert_eq!(sigma_lambda(&p(&[2, 1])).unwrap(), perm(&[3, 2, 1]));
        assert!(verify_bridge(&p(&[2, 1])));
        assert!(verify_bridge(&p(&[1])));
        assert!(!verify_bridge(&Partition::empty()));
    }

    #[test]
    fn bridge_small_sweep() {
        for n in 1..=6 {
            for lambda in Partition::all_of(n) {
                let sigma = sigma_lambda(&lambda).unwrap();
                assert!(sigma.is_vexillary(), "{lambda}");
                assert_eq!(sigma.vexillary_data().lambda.conjugate(), lambda);
                assert!(verify_bridge(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn block_examples() {
        let b = blocks(&p(&[2, 2]));
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].corner, Cell::new(1, 2));
        let corners: Vec<Cell> = blocks(&p(&[2, 1])).iter().map(|b| b.corner).collect();
        assert_eq!(corners, vec![Cell::new(1, 2), Cell::new(2, 1)]);
        let b = blocks(&p(&[3, 3, 1]));
        assert_eq!((b[0].first_row, b[0].last_row, b[0].corner), (1, 2, Cell::new(1, 3)));
        assert_eq!((b[1].first_row, b[1].last_row, b[1].corner), (3, 3, Cell::new(3, 1)));
        assert!(blocks(&Partition::empty()).is_empty());
    }

    #[test]
    fn one_positions() {
        let l = p(&[2, 2]);
        assert_eq!(count_balanced_with_one_at(&l, Cell::new(1, 2)).unwrap(), 2u32.into());
        assert_eq!(count_balanced_with_one_at(&l, Cell::new(1, 1)).unwrap(), 0u32.into());
        assert_eq!(count_balanced_with_one_at(&p(&[1]), Cell::new(1, 1)).unwrap(), 1u32.into());
        assert!(count_balanced_with_one_at(&l, Cell::new(3, 1)).is_err());
    }

    #[test]
    fn partial_fills() {
        let s = perm(&[3, 2, 1]);
        assert_eq!(partial_fill_count(&s, &[Cell::new(1, 2)]).unwrap(), 1u32.into());
        assert_eq!(partial_fill_count(&s, &[Cell::new(1, 1)]).unwrap(), 0u32.into());
        assert_eq!(partial_fill_count(&s, &[]).unwrap(), 2u32.into());
        assert_eq!(partial_fill_count(&s, &[Cell::new(2, 2)]), Err(Error::BoxOutsideShape(Cell::new(2, 2))));
        assert_eq!(partial_fill_count(&perm(&[2, 1, 4, 3]), &[]), Err(Error::NotVexillary));

        let w = partial_fill_witness(&s, &[Cell::new(1, 2)]).unwrap().unwrap();
        assert_eq!(w, perm(&[2, 3, 1]));
        assert_eq!(count_reduced_words(&w), 1u32.into());
        assert_eq!(partial_fill_witness(&s, &[]).unwrap(), Some(s.clone()));
        assert_eq!(partial_fill_witness(&s, &[Cell::new(1, 1)]).unwrap(), None);
        assert_eq!(partial_fill_witness_count(&s, &[Cell::new(1, 1)]).unwrap(), 0u32.into());

        assert_eq!(nice_partial(&s, &[Cell::new(1, 2)]).unwrap(), Some(p(&[1, 1])));
        assert_eq!(nice_partial(&s, &[]).unwrap(), Some(p(&[2, 1])));
    }
}
