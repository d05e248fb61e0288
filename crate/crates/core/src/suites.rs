//! Exhaustive and sampled identity checks, grouped into named suites. Each
//! suite takes a size bound and a seed for the sampled parts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bridge::{
    blocks, build_s_lambda, count_balanced_with_one_at, nice_partial, partial_fill_count, partial_fill_witness,
    sigma_lambda, verify_bridge,
};
use crate::diagram::{Cell, Diagram, Partition};
use crate::error::{Error, Result};
use crate::exchange::{
    full_exchange, is_dominant_column, is_dominant_row, swap_down, swap_right,
    tableau_swap_columns, tableau_swap_rows,
};
use crate::permutation::{count_reduced_words, type_of_permutation, Permutation};
use crate::schur::{classical_schur, sst_polynomial};
use crate::tableau::{count_tableaux, enumerate_tableaux, for_each_type, type_statistics, Tableau, TypeFilling};

/// Suite names accepted by [`run_suite`], with their default size bounds.
pub const SUITES: &[(&str, usize)] = &[
    ("oracle", 5),
    ("balanced", 8),
    ("hook", 7),
    ("expectation", 5),
    ("exchange", 6),
    ("swap", 6),
    ("bridge", 8),
    ("equivalence", 5),
    ("schur", 5),
    ("partial", 5),
];

pub const DEFAULT_SEED: u64 = 0x7ab7_e5ed;

/// Outcome of one check: how many cases were tried and the first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict}  {} ({} cases", self.name, self.cases)?;
        if self.failures > 0 {
            write!(f, ", {} failed", self.failures)?;
        }
        write!(f, ")")?;
        if let Some(first) = &self.first_failure {
            write!(f, ": {first}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

struct Tally {
    name: String,
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally { name: name.into(), cases: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn done(self) -> Check {
        Check { name: self.name, cases: self.cases, failures: self.failures, first_failure: self.first_failure }
    }
}

pub fn run_suite(name: &str, max_n: usize, seed: u64, budget: u128) -> Result<SuiteReport> {
    let checks = match name {
        "oracle" => oracle(max_n, seed)?,
        "balanced" => balanced(max_n)?,
        "hook" => hook_shapes(max_n)?,
        "expectation" => expectation(max_n, seed)?,
        "exchange" => exchange_theorem(max_n)?,
        "swap" => swap_bijection(max_n, seed)?,
        "bridge" => bridge(max_n)?,
        "equivalence" => equivalence(max_n),
        "schur" => schur(max_n, budget)?,
        "partial" => partial(max_n)?,
        other => return Err(Error::Malformed(format!("unknown suite {other:?}"))),
    };
    Ok(SuiteReport { suite: name.to_string(), checks })
}

pub fn vexillary_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    Permutation::all(n).filter(Permutation::is_vexillary)
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffled identity")
}

/// A diagram of `size` distinct boxes in the `side x side` square that is
/// not a Ferrers diagram.
pub fn random_non_ferrers(size: usize, side: usize, rng: &mut impl Rng) -> Diagram {
    assert!(size >= 2 && size <= side * side);
    loop {
        let mut all: Vec<Cell> = (1..=side).flat_map(|r| (1..=side).map(move |c| Cell::new(r, c))).collect();
        all.shuffle(rng);
        let d: Diagram = all.into_iter().take(size).collect();
        if d.as_partition().is_none() {
            return d;
        }
    }
}

/// A uniformly random type on `shape`.
pub fn random_type(shape: &Diagram, rng: &mut impl Rng) -> TypeFilling {
    let entries = shape.iter().map(|c| {
        let h = shape.hook_length(c).expect("box in shape") as u32;
        (c, rng.gen_range(0..h))
    });
    TypeFilling::from_entries(entries).expect("theta below hook length")
}

fn oracle(max_n: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut t = Tally::new(format!("|Tab(T_s)| = |Red(s)| for all s in S_{n}"));
        for sigma in Permutation::all(n) {
            let a = count_tableaux(&type_of_permutation(&sigma))?;
            let b = count_reduced_words(&sigma);
            t.record(a == b, || format!("{sigma}: {a} tableaux, {b} reduced words"));
        }
        out.push(t.done());
    }
    let n = max_n + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new(format!("|Tab(T_s)| = |Red(s)| for 50 random s in S_{n}"));
    for _ in 0..50 {
        let sigma = random_permutation(n, &mut rng);
        let a = count_tableaux(&type_of_permutation(&sigma))?;
        let b = count_reduced_words(&sigma);
        t.record(a == b, || format!("{sigma}: {a} tableaux, {b} reduced words"));
    }
    out.push(t.done());
    Ok(out)
}

fn balanced(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut t = Tally::new(format!("|Bal(l)| = |SYT(l)| = f^l for l |- {n}"));
        for lambda in Partition::all_of(n) {
            let shape = Diagram::ferrers(&lambda);
            let bal = enumerate_tableaux(&TypeFilling::balanced(&shape))?.len();
            let std = enumerate_tableaux(&TypeFilling::standard(&shape))?.len();
            let f = lambda.hook_length_formula();
            t.record(BigUint::from(bal) == f && BigUint::from(std) == f, || {
                format!("{lambda}: balanced {bal}, standard {std}, f = {f}")
            });
        }
        out.push(t.done());
    }
    Ok(out)
}

fn hook_shapes(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut t = Tally::new(format!("every type of a hook shape (k,1^p), k+p = {n}, has f^l tableaux"));
        for p in 0..n {
            let mut parts = vec![n - p];
            parts.extend(std::iter::repeat_n(1, p));
            let lambda = Partition::new(parts)?;
            let f = lambda.hook_length_formula();
            let mut err = None;
            for_each_type(&Diagram::ferrers(&lambda), |ty| match count_tableaux(ty) {
                Ok(c) => t.record(c == f, || format!("{lambda}: type {:?} has {c}, f = {f}", ty.entries())),
                Err(e) => err = Some(e),
            })?;
            if let Some(e) = err {
                return Err(e);
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn expectation_case(t: &mut Tally, label: &str, shape: &Diagram) -> Result<()> {
    let stats = type_statistics(shape, u128::MAX)?;
    let n = shape.len();
    let expected_mean = num_rational::BigRational::new(factorial(n).into(), shape.hook_product().into());
    let ok = stats.total == factorial(n) && stats.mean == expected_mean;
    t.record(ok, || format!("{label}: total {} over {} types, mean {}", stats.total, stats.count_of_types, stats.mean));
    Ok(())
}

fn expectation(max_n: usize, seed: u64) -> Result<Vec<Check>> {
    let mut ferrers = Tally::new(format!("sum over Typ(l) of |Tab| = n! for l |- n <= {max_n}"));
    for n in 1..=max_n {
        for lambda in Partition::all_of(n) {
            expectation_case(&mut ferrers, &lambda.to_string(), &Diagram::ferrers(&lambda))?;
        }
    }
    let mut random = Tally::new(format!("sum over Typ(S) of |Tab| = |S|! for 20 random non-Ferrers S, |S| <= {max_n}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        let size = rng.gen_range(2..=max_n.max(2));
        let shape = random_non_ferrers(size, 4, &mut rng);
        let label = serde_json::to_string(&shape).unwrap_or_default();
        expectation_case(&mut random, &label, &shape)?;
    }
    Ok(vec![ferrers.done(), random.done()])
}

fn exchange_theorem(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut t = Tally::new(format!("Sh(T_s^E) = l(s)' and |Tab(T_s^E)| = f^l(s) for vexillary s in S_{n}"));
        for sigma in vexillary_permutations(n) {
            let e = full_exchange(&type_of_permutation(&sigma)).result;
            let lambda = sigma.vexillary_data().lambda;
            let shape_ok = e.shape() == Diagram::ferrers(&lambda.conjugate());
            let count = count_tableaux(&e)?;
            let f = lambda.hook_length_formula();
            t.record(shape_ok && count == f, || {
                format!("{sigma}: shape {}, l(s) = {lambda}, count {count}, f = {f}", e.shape().stack_yx())
            });
        }
        out.push(t.done());
    }
    Ok(out)
}

fn transported_class_matches(
    source: &TypeFilling,
    target: &TypeFilling,
    swap: impl Fn(&Tableau) -> Tableau,
) -> Result<bool> {
    let moved: BTreeSet<Tableau> = enumerate_tableaux(source)?.iter().map(swap).collect();
    let expected: BTreeSet<Tableau> = enumerate_tableaux(target)?.into_iter().collect();
    Ok(moved == expected)
}

/// Random types on random diagrams of at most `max_size` boxes that have a
/// dominant row or column, paired with one such line.
pub fn sample_dominant_instances(
    count: usize,
    max_size: usize,
    rng: &mut impl Rng,
) -> Vec<(TypeFilling, crate::exchange::Axis, usize)> {
    use crate::exchange::Axis;
    let mut out = Vec::new();
    while out.len() < count {
        let size = rng.gen_range(2..=max_size.max(2));
        let side = 3;
        let mut all: Vec<Cell> = (1..=side).flat_map(|r| (1..=side).map(move |c| Cell::new(r, c))).collect();
        all.shuffle(rng);
        let shape: Diagram = all.into_iter().take(size.min(side * side)).collect();
        let ty = random_type(&shape, rng);
        let mut options = Vec::new();
        for i in 1..=side {
            if is_dominant_row(&ty, i) {
                options.push((Axis::Row, i));
            }
            if is_dominant_column(&ty, i) {
                options.push((Axis::Column, i));
            }
        }
        if let Some(&(axis, i)) = options.choose(rng) {
            out.push((ty, axis, i));
        }
    }
    out
}

fn swap_bijection(max_n: usize, seed: u64) -> Result<Vec<Check>> {
    use crate::exchange::Axis;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new(format!("T -> T swapped maps Tab onto the swapped class, 100 samples, |S| <= {max_n}"));
    for (ty, axis, i) in sample_dominant_instances(100, max_n, &mut rng) {
        let ok = match axis {
            Axis::Row => transported_class_matches(&ty, &swap_down(&ty, i)?.result, |t| tableau_swap_rows(t, i))?,
            Axis::Column => {
                transported_class_matches(&ty, &swap_right(&ty, i)?.result, |t| tableau_swap_columns(t, i))?
            }
        };
        t.record(ok, || format!("{:?} {i} of {:?}", axis, ty.entries()));
    }
    Ok(vec![t.done()])
}

fn bridge(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut t = Tally::new(format!("S(l) builds, s_l vexillary with l(s_l)' = l, T_(s_l)^L = Bal type, l |- {n}"));
        for lambda in Partition::all_of(n) {
            let ok = build_s_lambda(&lambda).is_ok()
                && sigma_lambda(&lambda)
                    .map(|s| s.is_vexillary() && s.vexillary_data().lambda.conjugate() == lambda)
                    .unwrap_or(false)
                && verify_bridge(&lambda);
            t.record(ok, || format!("{lambda}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

fn equivalence(max_n: usize) -> Vec<Check> {
    let all: Vec<(Permutation, TypeFilling, Permutation)> = (1..=max_n)
        .flat_map(vexillary_permutations)
        .map(|s| {
            let e = full_exchange(&type_of_permutation(&s)).result;
            let bar = s.bar_normalize();
            (s, e, bar)
        })
        .collect();
    let mut t = Tally::new(format!("T_s^E = T_w^E iff bar(s) = bar(w), vexillary s, w of size <= {max_n}"));
    for (s, es, bs) in &all {
        for (w, ew, bw) in &all {
            t.record((es == ew) == (bs == bw), || format!("{s} vs {w}"));
        }
    }
    vec![t.done()]
}

fn schur(max_n: usize, budget: u128) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 4.min(max_n)..=max_n {
        for m in [2usize, 3] {
            let mut stated = Tally::new(format!("SST(T_s^E) polynomial = s_l(s) in {m} variables, vexillary s in S_{n}"));
            let mut conj = Tally::new(format!("SST(T_s^E) polynomial = s_l(s)' in {m} variables, vexillary s in S_{n}"));
            for sigma in vexillary_permutations(n) {
                let e = full_exchange(&type_of_permutation(&sigma)).result;
                let lambda = sigma.vexillary_data().lambda;
                let lhs = sst_polynomial(&e, m, budget)?;
                let rhs = classical_schur(&lambda, m, budget)?;
                stated.record(lhs == rhs, || format!("{sigma}: {lhs} vs {rhs}"));
                let rhs = classical_schur(&lambda.conjugate(), m, budget)?;
                conj.record(lhs == rhs, || format!("{sigma}: {lhs} vs {rhs}"));
            }
            out.push(stated.done());
            out.push(conj.done());
        }
    }
    Ok(out)
}

/// Distinct initial segments of length `k` of the tableaux of `ty`.
pub fn tableau_prefixes(ty: &TypeFilling, k: usize) -> Result<BTreeSet<Vec<Cell>>> {
    Ok(enumerate_tableaux(ty)?
        .iter()
        .filter(|t| t.len() >= k)
        .map(|t| {
            let mut by_entry: Vec<(u32, Cell)> = t.entries().iter().map(|(&c, &e)| (e, c)).collect();
            by_entry.sort();
            by_entry.into_iter().take(k).map(|(_, c)| c).collect()
        })
        .collect())
}

fn sequences(cells: &[Cell], k: usize) -> Vec<Vec<Cell>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for shorter in sequences(cells, k - 1) {
        for &c in cells {
            if !shorter.contains(&c) {
                let mut s = shorter.clone();
                s.push(c);
                out.push(s);
            }
        }
    }
    out
}

fn partial(max_n: usize) -> Result<Vec<Check>> {
    let mut witness = Tally::new(format!("|N_s,U| = |Red(w)| for U a prefix (k <= 3) of a tableau, vexillary s in S_{max_n}"));
    let mut absent = Tally::new(format!("U not a tableau prefix (k <= 2): |N_s,U| = 0 and no witness, S_{max_n}"));
    let mut nice = Tally::new(format!("nice_partial gives m => |N_s,U| = f^m, S_{max_n}"));
    for sigma in vexillary_permutations(max_n) {
        let e = full_exchange(&type_of_permutation(&sigma)).result;
        let cells: Vec<Cell> = e.entries().keys().copied().collect();
        for k in 0..=3.min(cells.len()) {
            let prefixes = tableau_prefixes(&e, k)?;
            for u in &prefixes {
                let n = partial_fill_count(&sigma, u)?;
                let w = partial_fill_witness(&sigma, u)?;
                let red = w.as_ref().map(count_reduced_words).unwrap_or_default();
                witness.record(!n.is_zero() && n == red, || format!("{sigma}, U = {u:?}: |N| = {n}, |Red(w)| = {red}"));
            }
            if k <= 2 {
                for u in sequences(&cells, k).into_iter().filter(|u| !prefixes.contains(u)) {
                    let n = partial_fill_count(&sigma, &u)?;
                    let w = partial_fill_witness(&sigma, &u)?;
                    absent.record(n.is_zero() && w.is_none(), || format!("{sigma}, U = {u:?}: |N| = {n}, witness {w:?}"));
                }
            }
            for u in sequences(&cells, k) {
                if let Some(mu) = nice_partial(&sigma, &u)? {
                    let n = partial_fill_count(&sigma, &u)?;
                    let f = mu.hook_length_formula();
                    nice.record(n == f, || format!("{sigma}, U = {u:?}: |N| = {n}, m = {mu}, f = {f}"));
                }
            }
        }
    }

    let bal_max = max_n + 2;
    let mut corner = Tally::new(format!("|Bal(l)| = sum over l- of |Bal(l-)|, l |- n <= {bal_max}"));
    let mut ones = Tally::new(format!("entry 1 of a balanced tableau: f^(l-) at block corners, 0 elsewhere, n <= {bal_max}"));
    let mut bal_counts: BTreeMap<Partition, BigUint> = BTreeMap::new();
    bal_counts.insert(Partition::empty(), BigUint::one());
    for n in 1..=bal_max {
        for lambda in Partition::all_of(n) {
            let shape = Diagram::ferrers(&lambda);
            let total = count_tableaux(&TypeFilling::balanced(&shape))?;
            let sum: BigUint = lambda
                .corners()
                .iter()
                .map(|c| bal_counts[&lambda.remove_corner(c.row).expect("corner")].clone())
                .sum();
            corner.record(total == sum, || format!("{lambda}: |Bal| = {total}, corner sum {sum}"));

            let block_corners: BTreeMap<Cell, Partition> = blocks(&lambda)
                .iter()
                .map(|b| (b.corner, lambda.remove_corner(b.last_row).expect("block end is a corner")))
                .collect();
            for c in shape.iter() {
                let got = count_balanced_with_one_at(&lambda, c)?;
                let want = block_corners.get(&c).map(Partition::hook_length_formula).unwrap_or_default();
                ones.record(got == want, || format!("{lambda} at {c}: {got}, expected {want}"));
            }
            bal_counts.insert(lambda, total);
        }
    }
    Ok(vec![witness.done(), absent.done(), nice.done(), corner.done(), ones.done()])
}
