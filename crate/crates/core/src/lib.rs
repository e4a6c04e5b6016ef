//! Maximal label search over pluggable labeling structures.
//!
//! The crate computes perfect elimination and moplex orderings, clique trees
//! and minimal separators of chordal graphs, clique trees of complement
//! graphs, minimal triangulations, and atom trees of the clique minimal
//! separator decomposition. Every construction has a brute-force counterpart
//! in [`oracle`] used by the test suites.

pub mod decomposition;
pub mod error;
pub mod export;
pub mod graph;
pub mod hooks;
pub mod labeling;
pub mod oracle;
pub mod search;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{Adjacency, ComplementView, Graph, Ordering, Vertex, VertexSet};
pub use labeling::{lexbfs, lexdfs, mcs, mns, rev, Builtin, LabelOrdering, LabelingStructure};
pub use search::TieBreak;
