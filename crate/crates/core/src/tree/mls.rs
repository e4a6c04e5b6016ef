use super::invariants::{check_last_clique, check_partial_tree, oracle_hooks};
use super::{CliqueTreeBuilder, CliqueTreeResult};
use crate::error::{Error, Result};
use crate::graph::{is_clique, Graph, VertexSet};
use crate::labeling::{ensure_dcl, LabelingStructure, DEFAULT_CHECK_BOUND};
use crate::search::{search_preconditions, Choice, Engine, TieBreak};

#[derive(Clone, Copy, PartialEq, Eq)]
enum NewClique {
    /// `K_s ≠ S`.
    Compare,
    /// `prev-max-label ⊀ label(x)` and `i < n`.
    Labels,
}

fn run<L: LabelingStructure>(h: &Graph, l: &L, tb: &TieBreak, test: NewClique) -> Result<CliqueTreeResult> {
    search_preconditions(h, l)?;
    let n = h.n();
    let mut e = Engine::new(h, l, tb, Choice::MaxPreferGreater)?;
    let mut b = CliqueTreeBuilder::new(n);
    let hooks = oracle_hooks(n);
    for _ in 0..n {
        let x = e.choose()?;
        let i = e.i();
        let s: VertexSet = e.numbered_label_neighbors(x).into_iter().collect();
        if !is_clique(h, s.as_slice()) {
            return Err(Error::NotChordal { position: i });
        }
        let start = match test {
            NewClique::Compare => *b.clique(b.s()) != s,
            NewClique::Labels => i < n && !l.less(e.reference(), e.label(x)),
        };
        if start {
            b.start_clique(s, |v| e.position(v))?;
        }
        b.increase(x, b.s(), i, start);
        if hooks {
            check_partial_tree(h, b.view(), e.positions(), i);
            check_last_clique(h, b.view(), e.positions(), x, i);
        }
        let ys = e.unnumbered_neighbors(x);
        e.increase(&ys);
        e.end_step(x);
    }
    let (ordering, _) = e.finish();
    Ok(b.finish(ordering))
}

/// Clique tree of a connected chordal graph built during a moplex label
/// search, starting a clique whenever the numbered neighborhood of the
/// chosen vertex differs from the current clique.
pub fn mls_clique_tree<L: LabelingStructure>(h: &Graph, l: &L, tb: &TieBreak) -> Result<CliqueTreeResult> {
    run(h, l, tb, NewClique::Compare)
}

/// As [`mls_clique_tree`], but new cliques are detected from labels alone:
/// one starts when the previous chosen label is not smaller than the
/// current one. Only correct for structures that detect new cliques with
/// labels; `enforce_dcl = false` lets other structures run anyway.
pub fn dcl_mls_clique_tree<L: LabelingStructure>(
    h: &Graph,
    l: &L,
    tb: &TieBreak,
    enforce_dcl: bool,
) -> Result<CliqueTreeResult> {
    if enforce_dcl {
        ensure_dcl(l, DEFAULT_CHECK_BOUND)?;
    }
    run(h, l, tb, NewClique::Labels)
}
