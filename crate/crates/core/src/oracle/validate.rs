use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use super::{atoms_brute, clique_minimal_separators, maximal_cliques, minimal_separators};
use crate::decomposition::AtomTreeResult;
use crate::error::Result;
use crate::graph::{is_clique, Adjacency, Graph, Vertex, VertexSet};
use crate::tree::{CliqueTreeResult, SeparatorStore};

/// A way in which a claimed clique tree or atom tree is wrong.
///
/// Node indices are 1-based, as in the results being validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeViolation {
    NodeNotClique { node: usize, set: VertexSet },
    NodeNotMaximal { node: usize, set: VertexSet },
    NodeNotAtom { node: usize, set: VertexSet },
    DuplicateNode { node: usize, first: usize },
    MissingNode { set: VertexSet },
    NotATree { reason: String },
    VertexUncovered { vertex: Vertex },
    SubtreeDisconnected { vertex: Vertex },
    WrongNodeIndex { vertex: Vertex, node: usize },
    SeparatorMissing { set: VertexSet },
    SeparatorSpurious { set: VertexSet },
    StoredSeparatorMismatch { set: VertexSet },
}

impl TreeViolation {
    /// Human-readable form using the vertex names of `g`.
    pub fn describe<A: Adjacency>(&self, g: &A) -> String {
        let mut s = String::new();
        let _ = match self {
            TreeViolation::NodeNotClique { node, set } => {
                write!(s, "node {node} {} is not a clique", set.display(g))
            }
            TreeViolation::NodeNotMaximal { node, set } => {
                write!(s, "node {node} {} is not a maximal clique", set.display(g))
            }
            TreeViolation::NodeNotAtom { node, set } => {
                write!(s, "node {node} {} is not an atom", set.display(g))
            }
            TreeViolation::DuplicateNode { node, first } => {
                write!(s, "node {node} repeats node {first}")
            }
            TreeViolation::MissingNode { set } => {
                write!(s, "{} is missing from the node set", set.display(g))
            }
            TreeViolation::NotATree { reason } => write!(s, "edges do not form a tree: {reason}"),
            TreeViolation::VertexUncovered { vertex } => {
                write!(s, "vertex {} is in no node", g.vertex_name(*vertex))
            }
            TreeViolation::SubtreeDisconnected { vertex } => {
                write!(s, "nodes containing {} do not induce a subtree", g.vertex_name(*vertex))
            }
            TreeViolation::WrongNodeIndex { vertex, node } => write!(
                s,
                "vertex {} is assigned to node {node}, which does not contain it",
                g.vertex_name(*vertex)
            ),
            TreeViolation::SeparatorMissing { set } => {
                write!(s, "separator {} is not an edge intersection", set.display(g))
            }
            TreeViolation::SeparatorSpurious { set } => {
                write!(s, "edge intersection {} is not an expected separator", set.display(g))
            }
            TreeViolation::StoredSeparatorMismatch { set } => write!(
                s,
                "stored separators and edge intersections disagree on {}",
                set.display(g)
            ),
        };
        s
    }
}

/// Shape checks shared by both tree kinds: tree edges, per-vertex subtrees
/// and the vertex-to-node map (a 0 entry means "unassigned" and is skipped).
pub(crate) fn structural(
    n: usize,
    nodes: &[VertexSet],
    edges: &[(usize, usize)],
    node_of: &[usize],
) -> Vec<TreeViolation> {
    let mut out = Vec::new();
    let s = nodes.len();
    let mut shape_ok = true;
    if edges.len() + 1 != s {
        out.push(TreeViolation::NotATree {
            reason: format!("{} nodes but {} edges", s, edges.len()),
        });
        shape_ok = false;
    }
    let mut parent: Vec<usize> = (0..=s).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(p, q) in edges {
        if p == 0 || q == 0 || p > s || q > s {
            out.push(TreeViolation::NotATree {
                reason: format!("edge ({p},{q}) has an endpoint outside 1..={s}"),
            });
            shape_ok = false;
            continue;
        }
        let (a, b) = (find(&mut parent, p), find(&mut parent, q));
        if a == b {
            out.push(TreeViolation::NotATree {
                reason: format!("edge ({p},{q}) closes a cycle"),
            });
            shape_ok = false;
        } else {
            parent[a] = b;
        }
    }
    if shape_ok && s > 0 {
        let root = find(&mut parent, 1);
        if (2..=s).any(|j| find(&mut parent, j) != root) {
            out.push(TreeViolation::NotATree {
                reason: "edges do not connect all nodes".into(),
            });
        }
    }
    for v in 0..n {
        let holding: BTreeSet<usize> = (1..=s).filter(|&j| nodes[j - 1].contains(v)).collect();
        let Some(&start) = holding.iter().next() else {
            out.push(TreeViolation::VertexUncovered { vertex: v });
            continue;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(j) = stack.pop() {
            for &(p, q) in edges {
                let next = if p == j {
                    q
                } else if q == j {
                    p
                } else {
                    continue;
                };
                if holding.contains(&next) && seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        if seen.len() != holding.len() {
            out.push(TreeViolation::SubtreeDisconnected { vertex: v });
        }
    }
    for (v, &j) in node_of.iter().enumerate() {
        if j != 0 && (j > s || !nodes[j - 1].contains(v)) {
            out.push(TreeViolation::WrongNodeIndex { vertex: v, node: j });
        }
    }
    out
}

fn duplicates(nodes: &[VertexSet]) -> Vec<TreeViolation> {
    let mut first: BTreeMap<&VertexSet, usize> = BTreeMap::new();
    let mut out = Vec::new();
    for (k, set) in nodes.iter().enumerate() {
        match first.get(set) {
            Some(&j) => out.push(TreeViolation::DuplicateNode { node: k + 1, first: j }),
            None => {
                first.insert(set, k + 1);
            }
        }
    }
    out
}

fn separator_checks(
    nodes: &[VertexSet],
    edges: &[(usize, usize)],
    stored: &SeparatorStore,
    expected: &BTreeSet<VertexSet>,
) -> Vec<TreeViolation> {
    let s = nodes.len();
    let intersections: BTreeSet<VertexSet> = edges
        .iter()
        .filter(|&&(p, q)| (1..=s).contains(&p) && (1..=s).contains(&q))
        .map(|&(p, q)| nodes[p - 1].intersection(&nodes[q - 1]))
        .collect();
    let mut out = Vec::new();
    for set in stored.as_set().symmetric_difference(&intersections) {
        out.push(TreeViolation::StoredSeparatorMismatch { set: set.clone() });
    }
    for set in expected.difference(&intersections) {
        out.push(TreeViolation::SeparatorMissing { set: set.clone() });
    }
    for set in intersections.difference(expected) {
        out.push(TreeViolation::SeparatorSpurious { set: set.clone() });
    }
    out
}

pub(crate) fn validate_clique_parts<A: Adjacency>(
    h: &A,
    nodes: &[VertexSet],
    edges: &[(usize, usize)],
    stored: &SeparatorStore,
    node_of: &[usize],
) -> Result<Vec<TreeViolation>> {
    let maximal = maximal_cliques(h)?;
    let separators = minimal_separators(h)?;
    let mut out = Vec::new();
    for (k, set) in nodes.iter().enumerate() {
        if !is_clique(h, set.as_slice()) {
            out.push(TreeViolation::NodeNotClique {
                node: k + 1,
                set: set.clone(),
            });
        } else if !maximal.contains(set) {
            out.push(TreeViolation::NodeNotMaximal {
                node: k + 1,
                set: set.clone(),
            });
        }
    }
    out.extend(duplicates(nodes));
    let present: BTreeSet<&VertexSet> = nodes.iter().collect();
    for set in &maximal {
        if !present.contains(set) {
            out.push(TreeViolation::MissingNode { set: set.clone() });
        }
    }
    out.extend(structural(h.vertex_count(), nodes, edges, node_of));
    out.extend(separator_checks(nodes, edges, stored, &separators));
    Ok(out)
}

/// Checks `t` against the oracles: nodes are exactly the maximal cliques of
/// `h`, edges form a tree with the induced-subtree property, and the edge
/// intersections are exactly the minimal separators of `h`.
pub fn validate_clique_tree(h: &Graph, t: &CliqueTreeResult) -> Result<Vec<TreeViolation>> {
    validate_clique_parts(h, &t.cliques, &t.tree_edges, &t.separators, &t.clique_of)
}

/// Checks `t` against the oracles: nodes are exactly the atoms of `g`, edges
/// form a tree with the induced-subtree property, and the edge
/// intersections are exactly the clique minimal separators of `g`.
pub fn validate_atom_tree(g: &Graph, t: &AtomTreeResult) -> Result<Vec<TreeViolation>> {
    validate_atom_parts(g, &t.atoms, &t.tree_edges, &t.clique_separators, &t.atom_of)
}

pub(crate) fn validate_atom_parts(
    g: &Graph,
    nodes: &[VertexSet],
    edges: &[(usize, usize)],
    stored: &SeparatorStore,
    atom_of: &[usize],
) -> Result<Vec<TreeViolation>> {
    let atoms = atoms_brute(g)?;
    let separators = clique_minimal_separators(g)?;
    let mut out = Vec::new();
    for (k, set) in nodes.iter().enumerate() {
        if !atoms.contains(set) {
            out.push(TreeViolation::NodeNotAtom {
                node: k + 1,
                set: set.clone(),
            });
        }
    }
    out.extend(duplicates(nodes));
    let present: BTreeSet<&VertexSet> = nodes.iter().collect();
    for set in &atoms {
        if !present.contains(set) {
            out.push(TreeViolation::MissingNode { set: set.clone() });
        }
    }
    out.extend(structural(g.n(), nodes, edges, atom_of));
    out.extend(separator_checks(nodes, edges, stored, &separators));
    Ok(out)
}
