use std::collections::HashMap;

use super::PartialTree;
use crate::graph::{Adjacency, Graph, Vertex, VertexSet};
use crate::hooks;
use crate::oracle::validate_clique_parts;

/// Whether oracle-backed tree hooks run for a graph on `n` vertices.
pub(crate) fn oracle_hooks(n: usize) -> bool {
    n <= hooks::ORACLE_HOOK_LIMIT && hooks::enabled()
}

/// After iteration `i`: the partial structure is a clique tree of `H(V')`
/// whose separators are those of `H(V')`, and every numbered `y` has
/// `N⁺[y] ⊆ K_clique(y)`. `position` holds 1-based positions, with the
/// numbered vertices being those at positions `>= i`.
pub(crate) fn check_partial_tree(h: &Graph, tree: PartialTree<'_>, position: &[usize], i: usize) {
    let numbered: VertexSet = (0..h.n()).filter(|&v| position[v] >= i).collect();
    let local: HashMap<Vertex, Vertex> = numbered.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let sub = crate::graph::induced_subgraph(h, &numbered);
    let remap = |s: &VertexSet| -> VertexSet { s.iter().filter_map(|v| local.get(&v).copied()).collect() };
    let nodes: Vec<VertexSet> = tree.cliques.iter().map(remap).collect();
    let node_of: Vec<usize> = numbered.iter().map(|v| tree.clique_of[v]).collect();
    let separators = tree.separators.iter().map(remap).collect();
    match validate_clique_parts(&sub, &nodes, tree.edges, &separators, &node_of) {
        Ok(violations) => {
            for v in violations {
                hooks::record("partial-tree", i, v.describe(&sub));
            }
        }
        Err(e) => hooks::record("partial-tree", i, e.to_string()),
    }
    for y in numbered.iter() {
        let j = tree.clique_of[y];
        let clique = &tree.cliques[j - 1];
        let closed = std::iter::once(y).chain(h.neighbors(y).iter().copied().filter(|&w| position[w] > position[y]));
        for w in closed {
            if !clique.contains(w) {
                hooks::record(
                    "partial-tree",
                    i,
                    format!(
                        "higher neighborhood of {} is not inside its clique {}",
                        h.name(y),
                        clique.display(h)
                    ),
                );
                break;
            }
        }
    }
}

/// `K_s = N⁺[x_i]` after iteration `i` of a clique-completing run.
pub(crate) fn check_last_clique<A: Adjacency>(h: &A, tree: PartialTree<'_>, position: &[usize], x: Vertex, i: usize) {
    let mut closed: Vec<Vertex> = h.neighbors(x).filter(|&w| position[w] > i).collect();
    closed.push(x);
    closed.sort_unstable();
    let last = tree.cliques.last().expect("at least one clique");
    if last.as_slice() != closed.as_slice() {
        hooks::record(
            "last-clique",
            i,
            format!(
                "last clique {} differs from the closed higher neighborhood of {}",
                last.display(h),
                h.vertex_name(x)
            ),
        );
    }
}

/// `N_H⁺[x_{i+1}] = N_H^{α,i}(x)` in `h`, the side of the equivalence that
/// does not involve labels.
pub(crate) fn continues_clique<A: Adjacency>(h: &A, position: &[usize], x: Vertex, prev: Vertex, i: usize) -> bool {
    let mut closed: Vec<Vertex> = h.neighbors(prev).filter(|&w| position[w] > i + 1).collect();
    closed.push(prev);
    closed.sort_unstable();
    let mut higher: Vec<Vertex> = h.neighbors(x).filter(|&w| position[w] > i).collect();
    higher.sort_unstable();
    closed == higher
}
