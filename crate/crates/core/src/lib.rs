//! Exact computation of DP color functions of small multigraphs.
//!
//! DP-coloring generalizes list coloring: every vertex gets a list of `m`
//! cover vertices and every edge a perfect matching between its endpoint
//! lists; a coloring picks one cover vertex per list avoiding all matching
//! edges. Minimizing or maximizing the number of colorings over all full
//! m-fold covers gives the DP color function `P_DP(G, m)` and its dual
//! `P*_DP(G, m)`, which sandwich the chromatic polynomial.
//!
//! The crate represents covers as one permutation per edge, counts their
//! colorings exactly, searches the (symmetry-reduced) cover space
//! exhaustively, implements the cover-level deletion and contraction
//! constructions, and evaluates the closed-form formulas known for trees,
//! cycles, unicyclic graphs, fat trees and small two-cycle graphs.
//!
//! ```
//! use dpcolor::{counting, Cover, Limits, MultiGraph};
//!
//! let c4 = MultiGraph::cycle(4);
//! let twist = Cover::twister(c4.clone(), 3).unwrap();
//! assert_eq!(counting::count_colorings(&twist), 15u32.into());
//!
//! let min = counting::dp_color_function(&c4, 3, &Limits::default()).unwrap();
//! assert_eq!(min.count, 15u32.into());
//! ```

#![forbid(unsafe_code)]

pub mod catalog;
pub mod counting;
pub mod cover;
pub mod error;
pub mod formulas;
pub mod limits;
pub mod multigraph;
pub mod perm;
pub mod poly;
pub mod relations;

pub use cover::{enumerate_full_covers, random_cover, Cover, CoverEnumeration, Relabeling};
pub use error::{Error, Result};
pub use limits::Limits;
pub use multigraph::{ContractionMap, Edge, EdgeId, GraphClass, MultiGraph, Vertex};
pub use perm::Perm;
pub use poly::IntPolynomial;
