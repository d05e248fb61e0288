use thiserror::Error;

use crate::diagram::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("box {0} is not in the diagram")]
    BoxNotInDiagram(Cell),
    #[error("box {0} is not erasable")]
    NotErasable(Cell),
    #[error("the shape is empty")]
    EmptyShape,
    #[error("invalid box {0}: coordinates are 1-based")]
    InvalidBox(Cell),
    #[error("theta({cell}) = {theta} exceeds hook length minus one ({max})")]
    ThetaOutOfRange { cell: Cell, theta: u32, max: u32 },
    #[error("parts must be positive and nonincreasing: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("pair ({0},{1}) is not a valid inversion pair for n = {2}")]
    InvalidPair(usize, usize, usize),
    #[error("not a tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau is not a member of the type's class")]
    InvalidTableauForType,
    #[error("invalid reduced word: {0}")]
    InvalidWord(String),
    #[error("pair set is not an inversion set")]
    NotAnInversionSet,
    #[error("staircase size must be at least {min}, got {got}")]
    SizeTooSmall { min: usize, got: usize },
    #[error("shape has {0} boxes; at most 128 are supported")]
    ShapeTooLarge(usize),
    #[error("enumeration limit of {0} exceeded")]
    LimitExceeded(u128),
    #[error("row {0} is not dominant")]
    RowNotDominant(usize),
    #[error("column {0} is not dominant")]
    ColumnNotDominant(usize),
    #[error("row {0} is not dethroned")]
    RowNotDethroned(usize),
    #[error("column {0} is not dethroned")]
    ColumnNotDethroned(usize),
    #[error("the partition is empty")]
    EmptyPartition,
    #[error("falling construction made no progress with unanchored boxes {0:?}")]
    FallingStuck(Vec<Cell>),
    #[error("permutation is not vexillary")]
    NotVexillary,
    #[error("box {0} lies outside the shape")]
    BoxOutsideShape(Cell),
    #[error("label filling does not match the type's shape")]
    ShapeMismatch,
    #[error("labels must lie in 1..={0}")]
    LabelOutOfRange(u32),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
