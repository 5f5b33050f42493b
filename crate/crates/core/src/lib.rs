//! Sparse paving matroids with constructive exchange algorithms: walks in the
//! basis pair graph and in the symmetric-exchange graphs on multisets and
//! tuples of bases, cyclic orderings, and cyclic orderings through two
//! disjoint bases. Also includes
//! the Graham–Sloane residue-class construction and cyclic-flat bounds.
//!
//! Every constructive routine has a brute-force counterpart so the two can be
//! checked against each other.

pub mod constructions;
pub mod cyclic;
pub mod exchange;
pub mod flats;
pub mod matroid;
pub mod set;

pub use matroid::{
    explicit_validate, ExplicitMatroid, Matroid, MatroidError, Minor, MinorKind, SparsePavingMatroid, SwapPrecondition,
    DEFAULT_EXPLICIT_CAP,
};
pub use set::{binomial, k_subsets, ElementSet};
