//! Symmetric `v_3` configurations and their Levi graphs.
//!
//! A symmetric configuration `v_3` is an incidence structure with `v` points
//! and `v` blocks (triples) in which every point lies in exactly three blocks
//! and every pair of points lies in at most one block. Its Levi graph is a
//! connected-or-not cubic bipartite graph of girth at least 6, and all of the
//! topological questions handled here — most importantly whether the
//! configuration admits an upper embedding (a cellular orientable embedding
//! with one triangular face per block and a single extra face) — reduce to
//! combinatorial statements about that graph.
//!
//! The crate is organised around that reduction:
//!
//! * [`config`], [`graph`], [`levi`], [`rotation`], [`tree`] — the data
//!   model: configurations, plain graphs, Levi graphs with dart structure,
//!   rotation systems with face tracing, spanning trees and co-trees.
//! * [`embed`] — decision procedures and certificates for upper
//!   embeddability: Jungerman-criterion tree searches, dominating-set
//!   certificates, exhaustive rotation searches, ring-cut witnesses of
//!   non-embeddability, and a verdict pipeline that never guesses.
//! * [`construct`] — named families: Fano/Heawood, cyclic configurations,
//!   the three-way stitching construction, Martinetti extension/reduction.
//! * [`enumerate`] — isomorph-free generation of all configurations of a
//!   given order and the census table built from them.
//! * [`classify`] — canonical labeling, automorphism groups, and the
//!   property predicates (self-duality, polarity, transitivity, blocking
//!   sets) that feed the census columns.
//! * [`graph6`] — the standard graph6 exchange format.
//! * [`check`] — independent re-verification of serialized certificates
//!   using only the data-model layer.

pub mod check;
pub mod classify;
pub mod config;
pub mod construct;
pub mod embed;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod levi;
pub mod rotation;
pub mod tree;

pub use config::Configuration;
pub use graph::Graph;
pub use levi::LeviGraph;
pub use rotation::{FaceTrace, RotationSystem};
pub use tree::SpanningTree;
