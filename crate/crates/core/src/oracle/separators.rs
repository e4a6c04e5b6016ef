use std::collections::BTreeSet;

use super::{adjacency_masks, mask_to_set, set_to_mask, SUBSET_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{is_clique, Adjacency, VertexSet};

/// Connected components of the subgraph induced by `alive`, as masks.
pub(crate) fn components(adj: &[u64], alive: u64) -> Vec<u64> {
    let mut left = alive;
    let mut out = Vec::new();
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

pub(crate) fn neighborhood(adj: &[u64], set: u64) -> u64 {
    let mut acc = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        acc |= adj[v];
    }
    acc & !set
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Whether `s` has at least two full components.
pub(crate) fn is_minimal_separator_mask(adj: &[u64], n: usize, s: u64) -> bool {
    let alive = full_mask(n) & !s;
    components(adj, alive)
        .into_iter()
        .filter(|&c| neighborhood(adj, c) == s)
        .nth(1)
        .is_some()
}

/// All minimal separators by subset enumeration.
pub fn minimal_separators<A: Adjacency>(g: &A) -> Result<BTreeSet<VertexSet>> {
    let n = g.vertex_count();
    if n > SUBSET_LIMIT {
        return Err(Error::OracleLimit { n, limit: SUBSET_LIMIT });
    }
    let adj = adjacency_masks(g);
    Ok((0u64..1 << n)
        .filter(|&s| is_minimal_separator_mask(&adj, n, s))
        .map(mask_to_set)
        .collect())
}

/// Minimal separators that are cliques.
pub fn clique_minimal_separators<A: Adjacency>(g: &A) -> Result<BTreeSet<VertexSet>> {
    Ok(minimal_separators(g)?
        .into_iter()
        .filter(|s| is_clique(g, s.as_slice()))
        .collect())
}

pub fn is_minimal_separator<A: Adjacency>(g: &A, s: &VertexSet) -> bool {
    let adj = adjacency_masks(g);
    is_minimal_separator_mask(&adj, g.vertex_count(), set_to_mask(s))
}
