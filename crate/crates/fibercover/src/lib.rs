//! Branch-cycle combinatorics for covers of the projective line.
//!
//! A cover of degree `n` with `r` branch points is recorded by an `r`-tuple of
//! permutations of `{1..n}` whose product is the identity. From such tuples
//! this crate computes genera by Riemann-Hurwitz, the components of fiber
//! products of two covers with their genera, Nielsen classes with the braid
//! action, coalescing of branch points, and screening reports for composing a
//! fiber-product projection with a further cover.

pub mod catalog;
pub mod cover;
pub mod error;
pub mod fiber;
pub mod group;
pub mod growth;
pub mod limits;
pub mod nielsen;
pub mod perm;

pub use cover::{Cover, CoverJson, Rational, ValidityReport};
pub use error::{Error, ErrorKind, Result};
pub use group::{BlockSystem, ConjugacyClass, CosetAction, GeneratedGroup, GroupSpec};
pub use perm::{CycleType, Permutation};
pub use fiber::{Component, PairedCover, PairedCoverJson};
