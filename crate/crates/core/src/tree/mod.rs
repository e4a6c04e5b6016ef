//! Clique trees of chordal graphs and of complements of chordal graphs.

mod complement;
mod invariants;
pub mod linear;
mod mls;
mod peo;

use std::collections::BTreeSet;

pub use complement::{complement_mls_clique_tree, complement_mls_generators, generators_from_tree};
pub use mls::{dcl_mls_clique_tree, mls_clique_tree};
pub use peo::{clique_tree_from_peo, clique_tree_from_pmo};

pub(crate) use invariants::{check_partial_tree, oracle_hooks};

use crate::error::{Error, Result};
use crate::graph::{Ordering, Vertex, VertexSet};

/// Deduplicating store of separators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeparatorStore {
    sets: BTreeSet<VertexSet>,
}

impl SeparatorStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `false` if an equal set was already stored.
    pub fn insert(&mut self, s: VertexSet) -> bool {
        self.sets.insert(s)
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.sets.contains(s)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Sets in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.sets.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<VertexSet> {
        &self.sets
    }
}

impl FromIterator<VertexSet> for SeparatorStore {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        SeparatorStore {
            sets: iter.into_iter().collect(),
        }
    }
}

/// One iteration of a clique-tree construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueStep {
    pub iteration: usize,
    pub vertex: Vertex,
    /// 1-based index of the clique the vertex was added to.
    pub clique: usize,
    /// Whether this iteration started that clique.
    pub started: bool,
}

/// A clique tree `K_1..K_s` with 1-based node indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTreeResult {
    pub cliques: Vec<VertexSet>,
    /// Tree edges `(p, q)` between 1-based clique indices, in creation order.
    pub tree_edges: Vec<(usize, usize)>,
    pub separators: SeparatorStore,
    /// 1-based clique index of each vertex.
    pub clique_of: Vec<usize>,
    pub ordering: Ordering,
    pub steps: Vec<CliqueStep>,
}

impl CliqueTreeResult {
    /// `K_j`, 1-based.
    pub fn clique(&self, j: usize) -> &VertexSet {
        &self.cliques[j - 1]
    }

    pub fn node_count(&self) -> usize {
        self.cliques.len()
    }

    pub fn clique_set(&self) -> BTreeSet<VertexSet> {
        self.cliques.iter().cloned().collect()
    }

    /// `K_p ∩ K_q` for each tree edge.
    pub fn edge_intersections(&self) -> Vec<VertexSet> {
        self.tree_edges
            .iter()
            .map(|&(p, q)| self.clique(p).intersection(self.clique(q)))
            .collect()
    }
}

/// Generators of the maximal cliques and minimal separators of a complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorsResult {
    pub ordering: Ordering,
    pub gen_cliques: Vec<Vertex>,
    pub gen_separators: Vec<Vertex>,
}

/// The blocks shared by every clique-tree construction: initialization,
/// starting a clique, increasing the current clique, and the final tree.
#[derive(Clone, Debug)]
pub(crate) struct CliqueTreeBuilder {
    cliques: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    separators: SeparatorStore,
    clique_of: Vec<usize>,
    steps: Vec<CliqueStep>,
}

impl CliqueTreeBuilder {
    pub fn new(n: usize) -> Self {
        CliqueTreeBuilder {
            cliques: vec![VertexSet::new()],
            edges: Vec::new(),
            separators: SeparatorStore::new(),
            clique_of: vec![0; n],
            steps: Vec::with_capacity(n),
        }
    }

    /// Number of cliques `s`.
    pub fn s(&self) -> usize {
        self.cliques.len()
    }

    pub fn clique(&self, j: usize) -> &VertexSet {
        &self.cliques[j - 1]
    }

    /// Index of the clique containing the lowest-positioned vertex of `s`.
    pub fn anchor(&self, s: &VertexSet, position: impl Fn(Vertex) -> usize) -> Result<usize> {
        let Some(first) = s.iter().min_by_key(|&v| position(v)) else {
            return Err(Error::DisconnectedGraph);
        };
        Ok(self.clique_of[first])
    }

    /// Opens `K_{s+1} = S` below `K_p`, `p` the clique of the lowest vertex
    /// of `S`; returns `p`.
    pub fn start_clique(&mut self, s: VertexSet, position: impl Fn(Vertex) -> usize) -> Result<usize> {
        let p = self.anchor(&s, position)?;
        self.separators.insert(s.clone());
        self.cliques.push(s);
        self.edges.push((p, self.cliques.len()));
        Ok(p)
    }

    /// Adds `x` to `K_j`.
    pub fn increase(&mut self, x: Vertex, j: usize, iteration: usize, started: bool) {
        self.cliques[j - 1].insert(x);
        self.clique_of[x] = j;
        self.steps.push(CliqueStep {
            iteration,
            vertex: x,
            clique: j,
            started,
        });
    }

    pub fn view(&self) -> PartialTree<'_> {
        PartialTree {
            cliques: &self.cliques,
            edges: &self.edges,
            separators: &self.separators,
            clique_of: &self.clique_of,
        }
    }

    pub fn finish(self, ordering: Ordering) -> CliqueTreeResult {
        CliqueTreeResult {
            cliques: self.cliques,
            tree_edges: self.edges,
            separators: self.separators,
            clique_of: self.clique_of,
            ordering,
            steps: self.steps,
        }
    }
}

/// Borrowed view of a tree under construction.
#[derive(Clone, Copy)]
pub(crate) struct PartialTree<'a> {
    pub cliques: &'a [VertexSet],
    pub edges: &'a [(usize, usize)],
    pub separators: &'a SeparatorStore,
    pub clique_of: &'a [usize],
}
