use thiserror::Error;

use crate::fssmc::ObjectWord;
use crate::gluing::Verdict;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown place `{0}`")]
    UnknownPlace(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate {kind} name `{name}`")]
    DuplicateName { kind: &'static str, name: String },
    #[error("invalid name `{0}`: names must be non-empty and contain no whitespace, commas, parentheses or brackets")]
    InvalidName(String),
    #[error("multiset entry `{0}` has count zero")]
    ZeroCount(String),

    #[error("type mismatch in {context}: expected {expected}, found {found}")]
    TypeMismatch {
        context: String,
        expected: ObjectWord,
        found: ObjectWord,
    },
    #[error("bad permutation {perm:?} for a word of length {len}")]
    BadPermutation { perm: Vec<usize>, len: usize },
    #[error("functor is not strict on `{generator}`: image has type {found_dom} -> {found_cod}, expected {expected_dom} -> {expected_cod}")]
    NotStrict {
        generator: String,
        expected_dom: ObjectWord,
        expected_cod: ObjectWord,
        found_dom: ObjectWord,
        found_cod: ObjectWord,
    },
    #[error("functor map is not total: no image for `{0}`")]
    MissingImage(String),
    #[error("functor map has an image for `{0}`, which is not a generator of the source")]
    ExtraImage(String),

    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),
    #[error("semantics mismatch: {0}")]
    SemanticsMismatch(String),
    #[error("folds have different source presentations")]
    SourceMismatch,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("predicate failed: {0}")]
    PredicateFailed(String),

    #[error("faithfulness search exceeded its budget of {limit} candidate morphisms")]
    BudgetExceeded { limit: usize },
    #[error("verdict failed: {0}")]
    VerdictFailed(Verdict),
    #[error("expression uses no generator; a synchronized transition must conflate at least one transition")]
    EmptyDecomposition,
    #[error("semantic obstruction at `{generator}`: {reason}")]
    SemanticsObstruction { generator: String, reason: String },
    #[error("internal well-definedness failure: {0}")]
    WellDefinednessFailure(String),
    #[error("the coequalizer is not free: {0}")]
    NonFreeCoequalizer(String),
    #[error("cannot merge place `{0}` with itself")]
    SamePlace(String),
    #[error("boundary orientation error: {0}")]
    BoundaryOrientation(String),
    #[error("no balanced firing vector within bound {bound}")]
    NoSolutionWithinBound { bound: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error: {0}")]
    Validation(String),
}
