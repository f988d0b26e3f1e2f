use thiserror::Error;

use crate::weyl::CartanType;

/// Malformed text or raw data handed to a constructor.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("not a signed permutation of rank {rank}: {text}")]
    NotASignedPermutation { rank: usize, text: String },
    #[error("type D elements need an even number of negative entries: {0}")]
    OddSignChanges(String),
    #[error("unknown group {0:?}, expected something like \"C4\" or \"D3\"")]
    Group(String),
    #[error("invalid word {0:?}")]
    Word(String),
    #[error("invalid clan symbol {0:?}")]
    ClanSymbol(String),
    #[error("arc label {label} occurs {count} time(s), expected exactly 2")]
    UnmatchedArc { label: u32, count: usize },
    #[error("clan has signature ({p},{q}), expected ({want_p},{want_q})")]
    Signature {
        p: usize,
        q: usize,
        want_p: usize,
        want_q: usize,
    },
}

/// Errors from Weyl group operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("type mismatch: {0} vs {1}")]
    TypeMismatch(CartanType, CartanType),
    #[error("simple reflection index {index} out of range for rank {rank}")]
    BadLetter { index: usize, rank: usize },
    #[error("type {ty} needs rank at least {min}, got {rank}")]
    RankTooSmall {
        ty: CartanType,
        rank: usize,
        min: usize,
    },
    #[error("word {0} is not reduced")]
    NotReduced(String),
}

/// Errors from the monoid action on clans.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("clan {0} is not skew-symmetric")]
    NotSkewSymmetric(String),
    #[error("clan {0} is not a type D clan")]
    NotTypeD(String),
    #[error("clan {clan} has {len} symbols, expected {expected}")]
    WrongLength {
        clan: String,
        len: usize,
        expected: usize,
    },
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// Errors from the clan/Richardson dictionary.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RichardsonError {
    #[error("clan {0} contains the pattern (1,2,1,2)")]
    Contains1212(String),
    #[error("({u}, {v}) is not a ({p},{q})-pair of shuffles")]
    NotAShufflePair {
        u: String,
        v: String,
        p: usize,
        q: usize,
    },
    #[error("FS-pattern of ({u}, {v}) cannot be completed to a clan")]
    Incomplete { u: String, v: String },
    #[error("({u}, {v}) is not a type {ty} pair of signed shuffles")]
    NotASignedShufflePair {
        u: String,
        v: String,
        ty: CartanType,
    },
    #[error("clan {clan} built from a type {ty} pair fails the orbit predicate")]
    PredicateFailed { clan: String, ty: CartanType },
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// Errors from the structure-constant rules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstantError {
    /// The pair is outside the signed-shuffle regime. This says nothing about
    /// the value of the constant.
    #[error("unsupported pair: ({u}, {v}) is not a type {ty} pair of signed shuffles")]
    Unsupported {
        u: String,
        v: String,
        ty: CartanType,
    },
    /// A type D pair whose clan `γ(u', v')` has an arc joining mirror
    /// positions, so it names no orbit of the smaller group and the rule has
    /// nothing to act on.
    #[error("({u}, {v}) gives clan {clan}, which is not a type D clan")]
    NotAnOrbitClan { u: String, v: String, clan: String },
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Richardson(#[from] RichardsonError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// Errors from the divided-difference oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),
    #[error("length mismatch: l(w) = {w}, l(u) + l(v) = {uv}")]
    LengthMismatch { w: usize, uv: usize },
    #[error("divided difference left a non-constant polynomial: {0}")]
    NotConstant(String),
    #[error("too many variables: {0}")]
    TooManyVariables(usize),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// Errors from cross-checking the rules against the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Constant(#[from] ConstantError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
