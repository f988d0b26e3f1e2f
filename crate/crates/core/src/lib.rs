//! Schubert structure constants in types C and D for pairs of signed shuffles.
//!
//! Orbits of `GL(n)` on the symplectic and even orthogonal flag varieties are
//! indexed by clans. Orbit closures whose clans avoid `(1,2,1,2)` are
//! Richardson varieties, so Brion's weak-order formula for their classes
//! yields positive rules for the constants `c_{u,v}^w`. The crate also ships
//! an independent divided-difference oracle used to cross-check those rules.

pub mod action;
pub mod clan;
pub mod constants;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod par;
pub mod perm;
pub mod poly;
pub mod richardson;
pub mod tables;
pub mod verify;
pub mod weyl;

/// Library version, used to key on-disk caches.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use action::{ActionStep, Rule};
pub use clan::{Clan, RawSymbol};
pub use constants::{schubert_constant, schubert_product, PreparedPair, Regime, SchubertProduct};
pub use error::*;
pub use graph::{BrionDecomposition, WeakOrderGraph};
pub use oracle::{oracle_constant, Oracle, RootSystem};
pub use par::Exec;
pub use perm::Permutation;
pub use poly::ExactPolynomial;
pub use richardson::{PairKind, ShufflePair};
pub use verify::{verify_exhaustive, verify_sample, Qualifying, VerifyReport};
pub use weyl::{CartanType, Side, SignedPermutation, WeylGroup, Word};
