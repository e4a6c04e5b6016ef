use std::collections::BTreeSet;

use super::separators::{components, neighborhood};
use super::{adjacency_masks, mask_to_set};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexSet};

/// Largest graph accepted by [`atoms_brute`].
pub const ATOM_LIMIT: usize = 14;

/// Atoms of the clique minimal separator decomposition, by recursive
/// splitting on any clique minimal separator.
pub fn atoms_brute<A: Adjacency>(g: &A) -> Result<BTreeSet<VertexSet>> {
    let n = g.vertex_count();
    if n > ATOM_LIMIT {
        return Err(Error::OracleLimit { n, limit: ATOM_LIMIT });
    }
    let adj = adjacency_masks(g);
    let mut pieces = Vec::new();
    if n > 0 {
        split(&adj, (1u64 << n) - 1, &mut pieces);
    }
    pieces.sort_unstable();
    pieces.dedup();
    let maximal: Vec<u64> = pieces
        .iter()
        .copied()
        .filter(|&p| !pieces.iter().any(|&q| q != p && p & q == p))
        .collect();
    Ok(maximal.into_iter().map(mask_to_set).collect())
}

fn is_clique_mask(adj: &[u64], s: u64) -> bool {
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (s & !(1u64 << v)) & !adj[v] != 0 {
            return false;
        }
    }
    true
}

/// First clique minimal separator of `G(piece)` in numeric mask order.
fn clique_separator(adj: &[u64], piece: u64) -> Option<u64> {
    let local: Vec<u64> = adj.iter().map(|&a| a & piece).collect();
    let mut s = 0u64;
    loop {
        if is_clique_mask(&local, s) {
            let full = components(&local, piece & !s)
                .into_iter()
                .filter(|&c| neighborhood(&local, c) == s)
                .count();
            if full >= 2 {
                return Some(s);
            }
        }
        if s == piece {
            return None;
        }
        s = ((s | !piece).wrapping_add(1)) & piece;
    }
}

fn split(adj: &[u64], piece: u64, out: &mut Vec<u64>) {
    match clique_separator(adj, piece) {
        None => out.push(piece),
        Some(s) => {
            let local: Vec<u64> = adj.iter().map(|&a| a & piece).collect();
            for c in components(&local, piece & !s) {
                split(adj, c | neighborhood(&local, c), out);
            }
        }
    }
}
