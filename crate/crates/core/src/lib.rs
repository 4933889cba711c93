//! Combinatorial maps as 3-edge-colored flag graphs, and the two
//! delta-matroids they carry.
//!
//! A map is stored as three perfect matchings on a set of flags (see
//! [`map`]). From it the crate extracts
//!
//! - the embedded graph, its geometric dual, the Euler characteristic and
//!   orientability ([`map`]),
//! - the feasible sets of the Hamiltonian delta-matroid and of the 2-regular
//!   delta-matroid by exhaustive enumeration ([`selection`]),
//! - exchange-axiom checkers, upper and lower matroids, and brute-force cycle
//!   and cocycle matroids to compare them with ([`delta`]),
//! - the map itself back from its graph and dual ([`reconstruct`]).
//!
//! ```
//! use deltamap::{fixtures, selection, delta};
//!
//! let torus = fixtures::get("torus1v").unwrap();
//! assert_eq!(torus.euler_characteristic(), 0);
//!
//! let feasible = selection::enumerate_feasible_gamma(&torus).unwrap();
//! assert_eq!(feasible.to_string(), "{{}, {1,2}}");
//! assert!(delta::check_symmetric_exchange(&feasible).unwrap().is_none());
//! ```
//!
//! The guide in `book/` walks through the same material with runnable
//! snippets; they are compiled as doctests of this crate.

pub mod builder;
pub mod delta;
pub mod edgeset;
pub mod fixtures;
pub mod graph;
pub mod map;
pub mod random;
pub mod reconstruct;
pub mod report;
pub mod selection;
pub mod text;
mod unionfind;

pub use edgeset::{EdgeId, EdgeSet, SetFamily};
pub use graph::{EdgeEnd, LabeledEdge, LabeledGraph};
pub use map::{validate_map, Color, ColorPair, CombinatorialMap, MapError};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/maps.md")]
    mod maps {}
    #[doc = include_str!("../../../book/src/subgraphs.md")]
    mod subgraphs {}
    #[doc = include_str!("../../../book/src/delta-matroids.md")]
    mod delta_matroids {}
    #[doc = include_str!("../../../book/src/reconstruction.md")]
    mod reconstruction {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
}
