//! Exact computation and exhaustive search for the Wiener index of signed
//! trees.
//!
//! A signed tree carries a `+1`/`-1` label on every edge; the signed distance
//! between two distinct vertices is the absolute sign sum along the path
//! joining them, and the signed Wiener index sums that over all unordered
//! pairs. The alternating path was long the natural candidate for minimizing
//! this index among trees of a fixed order, but balanced-signed two-level
//! star trees beat it at every order from 30 up. This crate computes the
//! index exactly, builds those star families and their signings, evaluates
//! the relevant closed forms and bounds in exact arithmetic, and provides
//! brute-force oracles that settle small orders exhaustively.
//!
//! Organized as:
//!
//! - [`graph`] — signed trees and small signed graphs, distances, the index
//!   itself, edge-list IO;
//! - [`families`] — two-level star trees `T(a_1, ..., a_k)`, balanced
//!   signings, the order-indexed family, alternating paths;
//! - [`formulas`] — closed forms and inequality checks in exact arithmetic;
//! - [`search`] — exhaustive signing minimization, free-tree enumeration
//!   with an independent counting oracle, the global search, and the
//!   family-versus-path sweep;
//! - [`cli`] — the `signed-wiener` binary.
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `counterexample.rs`.

pub mod cli;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Sign, SignedGraph, SignedTree, Signing, VertexRole};
