//! Restoring scrambled minds when no pair of bodies may swap twice.
//!
//! A scramble is a product of distinct transpositions; an undo is a further
//! product of distinct transpositions, none shared with the scramble, whose
//! composite with the scramble is the identity. This crate builds undos
//! (Keeler's two-outsider method, the optimal `n + r + 2` refinement, and
//! specialised plans for the two standard products of `(12...n)`), writes the
//! identity as a product of distinct transpositions, and checks minimality
//! claims by exhaustive search.

pub mod census;
pub mod error;
pub mod factor_graph;
pub mod identity;
pub mod keeler;
pub mod log;
pub mod optimal;
pub mod oracle;
pub mod perm;
pub mod special;

pub use error::{Error, Result};
pub use perm::{
    compose, cycle_decompose, parity, undoes, CycleDecomposition, Parity, Permutation,
    SwapSequence, Transposition, UndoPlan,
};
