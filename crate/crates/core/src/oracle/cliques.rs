use std::collections::BTreeSet;

use super::{adjacency_masks, mask_to_set, MASK_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexSet};

/// All maximal cliques, by Bron–Kerbosch with pivoting on bit masks.
pub fn maximal_cliques<A: Adjacency>(g: &A) -> Result<BTreeSet<VertexSet>> {
    let n = g.vertex_count();
    if n > MASK_LIMIT {
        return Err(Error::OracleLimit { n, limit: MASK_LIMIT });
    }
    let adj = adjacency_masks(g);
    let mut out = BTreeSet::new();
    if n == 0 {
        return Ok(out);
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    expand(&adj, 0, all, 0, &mut out);
    Ok(out)
}

fn expand(adj: &[u64], r: u64, p: u64, x: u64, out: &mut BTreeSet<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.insert(mask_to_set(r));
        }
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let pivot = {
        // choose the pivot with most neighbors in P
        let mut best = pivot;
        let mut best_count = (p & adj[pivot]).count_ones();
        let mut rest = (p | x) & !(1u64 << pivot);
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let c = (p & adj[u]).count_ones();
            if c > best_count {
                best = u;
                best_count = c;
            }
        }
        best
    };
    let mut candidates = p & !adj[pivot];
    let (mut p, mut x) = (p, x);
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let bit = 1u64 << v;
        expand(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::fixtures;

    fn names(g: &Graph, sets: &BTreeSet<VertexSet>) -> BTreeSet<Vec<String>> {
        sets.iter()
            .map(|s| {
                let mut v = s.names(g);
                v.sort();
                v
            })
            .collect()
    }

    #[test]
    fn fig1_cliques() {
        let h = fixtures::fig1_h().graph;
        let got = names(&h, &maximal_cliques(&h).unwrap());
        let want: BTreeSet<Vec<String>> = [vec!["a", "b", "f"], vec!["c", "d", "e"], vec!["e", "f"]]
            .iter()
            .map(|v| v.iter().map(|s| s.to_string()).collect())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn complete_and_cycle() {
        let k4 = Graph::numbered(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(maximal_cliques(&k4).unwrap().len(), 1);
        let c5 = Graph::numbered(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        let cl = maximal_cliques(&c5).unwrap();
        assert_eq!(cl.len(), 5);
        assert!(cl.iter().all(|c| c.len() == 2));
        let iso = Graph::parse_edge_list("x\ny").unwrap();
        assert_eq!(maximal_cliques(&iso).unwrap().len(), 2);
    }
}
