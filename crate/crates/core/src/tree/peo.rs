use super::invariants::{check_last_clique, check_partial_tree, oracle_hooks};
use super::{CliqueTreeBuilder, CliqueTreeResult};
use crate::error::{Error, Result};
use crate::graph::{is_clique, Graph, Ordering, VertexSet};

fn check_inputs(h: &Graph, alpha: &Ordering) -> Result<()> {
    if h.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if alpha.len() != h.n() {
        return Err(Error::InvalidOrdering(format!(
            "ordering has {} vertices, graph has {}",
            alpha.len(),
            h.n()
        )));
    }
    if !h.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(())
}

fn higher(h: &Graph, alpha: &Ordering, i: usize) -> Result<VertexSet> {
    let x = alpha.vertex_at(i);
    let s = VertexSet::from_sorted(
        h.neighbors(x)
            .iter()
            .copied()
            .filter(|&y| alpha.position(y) > i)
            .collect(),
    );
    if (s.is_empty() && i < h.n()) || !is_clique(h, s.as_slice()) {
        return Err(Error::NotAPeo { position: i });
    }
    Ok(s)
}

/// Clique tree of a connected chordal graph from any of its peos: each
/// vertex either joins the clique equal to its higher neighborhood or
/// starts a new clique below the clique of its lowest higher neighbor.
pub fn clique_tree_from_peo(h: &Graph, alpha: &Ordering) -> Result<CliqueTreeResult> {
    check_inputs(h, alpha)?;
    let n = h.n();
    let pos = |v| alpha.position(v);
    let mut b = CliqueTreeBuilder::new(n);
    let hooks = oracle_hooks(n);
    for i in (1..=n).rev() {
        let x = alpha.vertex_at(i);
        let s = higher(h, alpha, i)?;
        let p = if i == n { 1 } else { b.anchor(&s, pos)? };
        if *b.clique(p) == s {
            b.increase(x, p, i, false);
        } else {
            b.start_clique(s, pos)?;
            b.increase(x, b.s(), i, true);
        }
        if hooks {
            check_partial_tree(h, b.view(), alpha.positions(), i);
        }
    }
    Ok(b.finish(alpha.clone()))
}

/// Clique tree from a peo that completes each maximal clique before
/// starting the next one; a new clique starts whenever the higher
/// neighborhood differs from the current clique.
pub fn clique_tree_from_pmo(h: &Graph, alpha: &Ordering) -> Result<CliqueTreeResult> {
    check_inputs(h, alpha)?;
    let n = h.n();
    let pos = |v| alpha.position(v);
    let mut b = CliqueTreeBuilder::new(n);
    let hooks = oracle_hooks(n);
    for i in (1..=n).rev() {
        let x = alpha.vertex_at(i);
        let s = higher(h, alpha, i)?;
        if *b.clique(b.s()) == s {
            b.increase(x, b.s(), i, false);
        } else {
            let p = b.anchor(&s, pos)?;
            if *b.clique(p) == s {
                return Err(Error::NotMCComp { position: i });
            }
            b.start_clique(s, pos)?;
            b.increase(x, b.s(), i, true);
        }
        if hooks {
            check_partial_tree(h, b.view(), alpha.positions(), i);
            check_last_clique(h, b.view(), alpha.positions(), x, i);
        }
    }
    Ok(b.finish(alpha.clone()))
}
