//! Brute-force ground truth for small graphs, random instance generators and
//! the worked example graphs.
//!
//! Everything here favors exactness over speed; each oracle rejects inputs
//! above its size cap with [`Error::OracleLimit`](crate::Error::OracleLimit).

mod atoms;
mod chordal;
mod cliques;
pub mod fixtures;
mod generate;
mod separators;
mod validate;

pub use atoms::{atoms_brute, ATOM_LIMIT};
pub use chordal::{
    is_chordal, is_mccomp_peo, is_minimal_triangulation, is_peo, is_pmo, mccomp_violation, peo_violation,
};
pub use cliques::maximal_cliques;
pub use generate::{gen, Family, GeneratorConfig};
pub use separators::{clique_minimal_separators, is_minimal_separator, minimal_separators};
pub(crate) use validate::{validate_atom_parts, validate_clique_parts};
pub use validate::{validate_atom_tree, validate_clique_tree, TreeViolation};

use crate::graph::{Adjacency, VertexSet};

/// Largest graph the bit-mask oracles accept.
pub const MASK_LIMIT: usize = 64;

/// Largest graph for subset enumeration of separators.
pub const SUBSET_LIMIT: usize = 16;

pub(crate) fn adjacency_masks<A: Adjacency>(g: &A) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | (1u64 << w)))
        .collect()
}

pub(crate) fn mask_to_set(mask: u64) -> VertexSet {
    VertexSet::from_sorted((0..64).filter(|b| mask & (1u64 << b) != 0).collect())
}

pub(crate) fn set_to_mask(set: &VertexSet) -> u64 {
    set.iter().fold(0u64, |m, v| m | (1u64 << v))
}
