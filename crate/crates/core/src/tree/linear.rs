//! Linear-time clique trees for MCS and LexBFS.
//!
//! Both builders produce exactly what
//! [`dcl_mls_clique_tree`](super::dcl_mls_clique_tree) produces under
//! `LowestIndex` tie-breaking, with the generic label scan replaced by a
//! bucket queue (MCS) or partition refinement (LexBFS). The new-clique test
//! compares the chosen label with the previous one; for LexBFS the lists
//! compared have length at most the degrees of the two vertices.
//!
//! With `verify` set, every numbered neighborhood is checked to be a clique
//! and non-chordal input is rejected with `NotChordal`; without it, chordality
//! is trusted.

use std::collections::BTreeSet;

use super::{CliqueTreeBuilder, CliqueTreeResult};
use crate::error::{Error, Result};
use crate::graph::{is_clique, Graph, Ordering, Vertex, VertexSet};

fn preconditions(h: &Graph) -> Result<()> {
    if h.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !h.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(())
}

struct Numbering {
    position: Vec<usize>,
    seq: Vec<Vertex>,
}

impl Numbering {
    fn new(n: usize) -> Self {
        Numbering {
            position: vec![0; n],
            seq: vec![0; n],
        }
    }

    fn assign(&mut self, x: Vertex, i: usize) {
        self.position[x] = i;
        self.seq[i - 1] = x;
    }

    fn finish(self) -> Ordering {
        Ordering::from_sequence(self.seq).expect("every vertex numbered once")
    }
}

fn place(
    h: &Graph,
    b: &mut CliqueTreeBuilder,
    num: &Numbering,
    x: Vertex,
    i: usize,
    start: bool,
    verify: bool,
) -> Result<()> {
    if start || verify {
        let s = VertexSet::from_sorted(
            h.neighbors(x)
                .iter()
                .copied()
                .filter(|&y| num.position[y] > i)
                .collect(),
        );
        if verify && !is_clique(h, s.as_slice()) {
            return Err(Error::NotChordal { position: i });
        }
        if start {
            b.start_clique(s, |v| num.position[v])?;
        }
    }
    b.increase(x, b.s(), i, start);
    Ok(())
}

/// MCS clique tree with a bucket queue over neighbor counts.
pub fn mcs_clique_tree(h: &Graph, verify: bool) -> Result<CliqueTreeResult> {
    preconditions(h)?;
    let n = h.n();
    let mut count = vec![0usize; n];
    let mut buckets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n + 1];
    buckets[0] = (0..n).collect();
    let mut top = 0;
    let mut num = Numbering::new(n);
    let mut b = CliqueTreeBuilder::new(n);
    let mut prev = 0usize;
    for i in (1..=n).rev() {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let x = buckets[top].pop_first().expect("nonempty bucket");
        num.assign(x, i);
        let label = count[x];
        let start = i < n && label <= prev;
        place(h, &mut b, &num, x, i, start, verify)?;
        for &y in h.neighbors(x) {
            if num.position[y] == 0 {
                buckets[count[y]].remove(&y);
                count[y] += 1;
                buckets[count[y]].insert(y);
                top = top.max(count[y]);
            }
        }
        prev = label;
    }
    Ok(b.finish(num.finish()))
}

/// LexBFS clique tree with partition refinement over label classes.
pub fn lexbfs_clique_tree(h: &Graph, verify: bool) -> Result<CliqueTreeResult> {
    preconditions(h)?;
    let n = h.n();
    // Classes form a doubly linked list from the greatest label (`head`)
    // downwards; `NONE` terminates it.
    const NONE: usize = usize::MAX;
    let mut members: Vec<BTreeSet<Vertex>> = vec![(0..n).collect()];
    let mut up: Vec<usize> = vec![NONE];
    let mut down: Vec<usize> = vec![NONE];
    let mut split: Vec<(usize, usize)> = vec![(0, NONE)];
    let mut linked = vec![true];
    let mut head = 0;
    let mut class_of = vec![0usize; n];
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut num = Numbering::new(n);
    let mut b = CliqueTreeBuilder::new(n);
    let mut prev: Vec<usize> = Vec::new();
    for i in (1..=n).rev() {
        let origin = head;
        let x = members[origin].pop_first().expect("head class is nonempty");
        num.assign(x, i);
        let start = i < n && labels[x] <= prev;
        place(h, &mut b, &num, x, i, start, verify)?;
        let mut touched = vec![origin];
        for &y in h.neighbors(x) {
            if num.position[y] != 0 {
                continue;
            }
            labels[y].push(i);
            let c = class_of[y];
            let target = if split[c].0 == i {
                split[c].1
            } else {
                let id = members.len();
                members.push(BTreeSet::new());
                split.push((0, NONE));
                linked.push(true);
                up.push(up[c]);
                down.push(c);
                if up[c] == NONE {
                    head = id;
                } else {
                    down[up[c]] = id;
                }
                up[c] = id;
                split[c] = (i, id);
                touched.push(c);
                id
            };
            members[c].remove(&y);
            members[target].insert(y);
            class_of[y] = target;
        }
        for c in touched {
            if linked[c] && members[c].is_empty() {
                let (u, d) = (up[c], down[c]);
                if u == NONE {
                    head = d;
                } else {
                    down[u] = d;
                }
                if d != NONE {
                    up[d] = u;
                }
                linked[c] = false;
            }
        }
        prev = std::mem::take(&mut labels[x]);
    }
    Ok(b.finish(num.finish()))
}
