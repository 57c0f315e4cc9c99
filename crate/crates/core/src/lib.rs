//! Combinatorial crystal graphs in three realizations, with the dictionary
//! between them.
//!
//! The same highest-weight crystal can be drawn with nodes labeled by
//! multisegments (multisets of integer intervals), by colored multipartitions
//! (tuples of Young diagrams), or by tensor products of level-1 crystals.
//! This crate implements the operators `E_i`/`F_i` and the statistics
//! `eps_i`/`phi_i` in all three realizations, the conversion maps between
//! them, a shuffle-product character calculator, and graph builders with an
//! isomorphism verifier.
//!
//! All rules reduce to one cancellation engine ([`signature`]): write a word
//! of `-`/`+`/blank symbols, cancel adjacent pairs transitively, act on a
//! distinguished uncanceled symbol.
//!
//! - [`segments`]: segments, multisegments, right/left orders, weights
//! - [`signature`]: the ± reduction engine
//! - [`seg_crystal`]: operators on multisegments, the cyclotomic membership
//!   test, highest-weight paths
//! - [`partitions`]: colored partitions, multipartitions, the Kleshchev
//!   condition, enumerators
//! - [`mp_crystal`]: operators on multipartitions (box rule)
//! - [`transport`]: multisegment ⇄ multipartition conversion
//! - [`tensor`]: generic crystal interface and tensor products
//! - [`characters`]: shuffle products and multiplicity queries
//! - [`graph`]: truncated graph builders, isomorphism checks, DOT/JSON

pub mod bounds;
pub mod characters;
pub mod error;
pub mod graph;
pub mod mp_crystal;
pub mod partitions;
pub mod seg_crystal;
pub mod segments;
pub mod signature;
pub mod tensor;
pub mod transport;

pub use error::{Error, Result};
pub use segments::{Content, ContentMultiset, Multisegment, Segment, Weight};
