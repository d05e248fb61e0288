//! Tableaux of a given type: counting and enumeration by filling sequences,
//! the staircase types of permutations and their reduced words, row and
//! column exchanges, balanced tableaux, and semistandard labellings.

pub mod bridge;
pub mod diagram;
pub mod error;
pub mod exchange;
pub mod io;
pub mod permutation;
pub mod render;
pub mod schur;
pub mod suites;
pub mod tableau;

pub use bridge::{
    blocks, build_s_lambda, count_balanced_with_one_at, embed_in_staircase, nice_partial, partial_fill_count,
    partial_fill_witness, sigma_lambda, verify_bridge, Block, Embedding, FallingState,
};
pub use diagram::{in_hook, staircase, Cell, Diagram, Hook, Partition};
pub use error::{Error, Result};
pub use exchange::{
    column_exchange, full_exchange, line_exchange, reverse_column_exchange, reverse_line_exchange, swap_down,
    swap_right, Axis, BoxMapping, ExchangeResult, Step,
};
pub use permutation::{
    count_reduced_words, enumerate_reduced_words, type_of_permutation, InversionSet, Permutation, ReducedWord,
    VexillaryData,
};
pub use schur::{classical_schur, is_sst, sst_polynomial, LabelledFilling, Polynomial};
pub use tableau::{count_tableaux, enumerate_tableaux, FillingSequence, Tableau, TypeFilling, TypeStatistics};

/// Default cap on enumeration sizes.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

/// The enumeration cap from `TABTYPE_BUDGET`, or [`DEFAULT_BUDGET`] when unset.
pub fn enumeration_budget() -> Result<u128> {
    match std::env::var("TABTYPE_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Malformed(format!("TABTYPE_BUDGET={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}
