use thiserror::Error;

/// Errors raised while building groups, transversals and loops.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplication table is empty")]
    EmptyTable,
    #[error("multiplication table is not square: row {row} has {len} entries, expected {expected}")]
    MalformedTable { row: usize, len: usize, expected: usize },
    #[error("table entry ({row}, {col}) = {value} is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("index 0 is not a two-sided identity: entry ({row}, {col}) is wrong")]
    NoIdentityAtZero { row: usize, col: usize },
    #[error("table is not a latin square: value {value} repeats in {line} {index}")]
    NotLatinSquare { line: &'static str, index: usize, value: usize },
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("not a permutation of 0..{degree}: {images:?}")]
    NotAPermutation { degree: usize, images: Vec<usize> },
    #[error("generated group exceeds the closure cap of {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("parameter {parameter} is out of range for family {family} (allowed {min}..={max})")]
    ParameterOutOfRange { family: &'static str, parameter: usize, min: usize, max: usize },
    #[error("group of order {order} exceeds the cap of {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("element index {index} is out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("element list is not a subgroup: {reason}")]
    NotASubgroup { reason: String },
    #[error("{count} transversals exceed the enumeration cap of {cap}")]
    EnumerationTooLarge { count: String, cap: u64 },
    #[error("odometer index {index} is out of range for {count} transversals")]
    OdometerOutOfRange { index: u64, count: u64 },
    #[error("subgroup is normal, so every normalized right transversal is also a left transversal")]
    SubgroupIsNormal,
    #[error("subgroup is not normal")]
    SubgroupNotNormal,
    #[error("invalid transversal: {reason}")]
    InvalidTransversal { reason: String },
    #[error("invalid right loop: {reason}")]
    InvalidLoop { reason: String },
    #[error("cannot parse permutation `{input}`: {reason}")]
    PermParse { input: String, reason: String },
    #[error("cannot parse group table: {reason}")]
    TableParse { reason: String },
    #[error("group has no permutation representation")]
    NoPermutationRepresentation,
    #[error("permutation {0} is not an element of the group")]
    NotAnElement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
