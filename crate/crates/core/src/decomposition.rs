//! Minimal triangulations with their clique trees, and atom trees of the
//! clique minimal separator decomposition.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{is_clique, Graph, Vertex, VertexSet};
use crate::labeling::{ensure_dcl, LabelingStructure, DEFAULT_CHECK_BOUND};
use crate::search::{search_preconditions, with_edges, Choice, Engine, TieBreak, TriangulationResult};
use crate::tree::{check_partial_tree, oracle_hooks, CliqueTreeBuilder, CliqueTreeResult, SeparatorStore};

/// A minimal triangulation `H` of `g` and a clique tree of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MlsmCliqueTreeResult {
    pub triangulation: TriangulationResult,
    pub tree: CliqueTreeResult,
}

/// An atom tree `A_1..A_s` with 1-based node indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomTreeResult {
    pub atoms: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
    pub clique_separators: SeparatorStore,
    /// 1-based atom index of each vertex.
    pub atom_of: Vec<usize>,
    pub triangulation: TriangulationResult,
    /// Clique tree of the triangulation the atoms were derived from.
    pub clique_tree: CliqueTreeResult,
    /// Current atom `q` after each iteration, from `i = n` down to 1; only
    /// recorded by the single-pass construction.
    pub current_atom_history: Option<Vec<usize>>,
}

impl AtomTreeResult {
    pub fn atom(&self, j: usize) -> &VertexSet {
        &self.atoms[j - 1]
    }

    pub fn atom_set(&self) -> BTreeSet<VertexSet> {
        self.atoms.iter().cloned().collect()
    }

    pub fn edge_intersections(&self) -> Vec<VertexSet> {
        self.tree_edges
            .iter()
            .map(|&(p, q)| self.atom(p).intersection(self.atom(q)))
            .collect()
    }
}

/// Whether every pair of `s` is adjacent in `g`.
pub fn is_clique_in(g: &Graph, s: &VertexSet) -> bool {
    is_clique(g, s.as_slice())
}

struct AtomBuilder {
    atoms: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    separators: SeparatorStore,
    atom_of: Vec<usize>,
    q: usize,
    history: Vec<usize>,
}

impl AtomBuilder {
    fn new(n: usize) -> Self {
        AtomBuilder {
            atoms: vec![VertexSet::new()],
            edges: Vec::new(),
            separators: SeparatorStore::new(),
            atom_of: vec![0; n],
            q: 1,
            history: Vec::with_capacity(n),
        }
    }

    fn boundary(&mut self, g: &Graph, s: &VertexSet, position: impl Fn(Vertex) -> usize) -> Result<()> {
        let Some(first) = s.iter().min_by_key(|&v| position(v)) else {
            return Err(Error::DisconnectedGraph);
        };
        let p = self.atom_of[first];
        if is_clique_in(g, s) {
            self.atoms.push(s.clone());
            self.edges.push((p, self.atoms.len()));
            self.separators.insert(s.clone());
            self.q = self.atoms.len();
        } else {
            self.q = p;
        }
        Ok(())
    }

    fn increase(&mut self, x: Vertex) {
        self.atoms[self.q - 1].insert(x);
        self.atom_of[x] = self.q;
        self.history.push(self.q);
    }
}

fn run<L: LabelingStructure>(
    g: &Graph,
    l: &L,
    tb: &TieBreak,
    mut atoms: Option<&mut AtomBuilder>,
) -> Result<MlsmCliqueTreeResult> {
    ensure_dcl(l, DEFAULT_CHECK_BOUND)?;
    search_preconditions(g, l)?;
    let n = g.n();
    let mut e = Engine::new(g, l, tb, Choice::MaxPreferGreater)?.with_fill();
    let mut b = CliqueTreeBuilder::new(n);
    let hooks = oracle_hooks(n);
    for _ in 0..n {
        let x = e.choose()?;
        let i = e.i();
        let start = i < n && !l.less(e.reference(), e.label(x));
        if start {
            let s: VertexSet = e.numbered_label_neighbors(x).into_iter().collect();
            if let Some(a) = atoms.as_deref_mut() {
                a.boundary(g, &s, |v| e.position(v))?;
            }
            b.start_clique(s, |v| e.position(v))?;
        }
        b.increase(x, b.s(), i, start);
        if let Some(a) = atoms.as_deref_mut() {
            a.increase(x);
        }
        if hooks {
            let h = with_edges(g, e.fill_edges());
            check_partial_tree(&h, b.view(), e.positions(), i);
        }
        let ys = e.path_targets(x);
        e.record_fill(x, &ys);
        e.increase(&ys);
        e.end_step(x);
    }
    let fill = e.fill_edges().to_vec();
    let (ordering, _) = e.finish();
    let h = with_edges(g, &fill);
    let tree = b.finish(ordering.clone());
    Ok(MlsmCliqueTreeResult {
        triangulation: TriangulationResult { ordering, h, fill },
        tree,
    })
}

/// Minimal triangulation of a connected graph together with a clique tree
/// of it, from one moplex search with the path rule; cliques are detected
/// with labels, so `L` must detect new cliques with labels.
pub fn dcl_mlsm_clique_tree<L: LabelingStructure>(g: &Graph, l: &L, tb: &TieBreak) -> Result<MlsmCliqueTreeResult> {
    run(g, l, tb, None)
}

/// Atom tree of `g` from a clique tree `t` of a minimal triangulation `h`:
/// tree edges whose intersection is not a clique of `g` are contracted, and
/// each contracted component becomes one atom.
pub fn atom_tree_from_clique_tree(g: &Graph, h: &Graph, t: &CliqueTreeResult) -> Result<AtomTreeResult> {
    let n = g.n();
    if h.n() != n || t.clique_of.len() != n || t.ordering.len() != n {
        return Err(Error::InputMismatch(format!(
            "graph has {n} vertices, triangulation {}, clique tree {}",
            h.n(),
            t.clique_of.len()
        )));
    }
    let covered: VertexSet = t.cliques.iter().flat_map(|c| c.iter()).collect();
    if covered.len() != n {
        return Err(Error::InputMismatch(format!(
            "cliques cover {} of {n} vertices",
            covered.len()
        )));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !h.is_adjacent(u, v)) {
        return Err(Error::InputMismatch(format!(
            "edge {}-{} of the graph is missing from the triangulation",
            g.name(u),
            g.name(v)
        )));
    }
    let s = t.cliques.len();
    let mut parent: Vec<usize> = (0..=s).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut kept = Vec::new();
    for &(p, q) in &t.tree_edges {
        let sep = t.clique(p).intersection(t.clique(q));
        if is_clique_in(g, &sep) {
            kept.push((p, q, sep));
        } else {
            let (a, b) = (find(&mut parent, p), find(&mut parent, q));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut index = vec![0usize; s + 1];
    let mut atoms: Vec<VertexSet> = Vec::new();
    for j in 1..=s {
        let root = find(&mut parent, j);
        if index[root] == 0 {
            atoms.push(VertexSet::new());
            index[root] = atoms.len();
        }
        let k = index[root];
        atoms[k - 1] = atoms[k - 1].union(t.clique(j));
    }
    let comp = |parent: &mut [usize], j: usize| index[find(parent, j)];
    let mut tree_edges = Vec::with_capacity(kept.len());
    let mut clique_separators = SeparatorStore::new();
    for (p, q, sep) in kept {
        tree_edges.push((comp(&mut parent, p), comp(&mut parent, q)));
        clique_separators.insert(sep);
    }
    let atom_of = (0..n).map(|v| comp(&mut parent, t.clique_of[v])).collect();
    let fill = h.edges().filter(|&(u, v)| !g.is_adjacent(u, v)).collect();
    Ok(AtomTreeResult {
        atoms,
        tree_edges,
        clique_separators,
        atom_of,
        triangulation: TriangulationResult {
            ordering: t.ordering.clone(),
            h: h.clone(),
            fill,
        },
        clique_tree: t.clone(),
        current_atom_history: None,
    })
}

/// Atom tree of a connected graph in one pass: at each detected clique
/// boundary a new atom starts only if the numbered neighborhood is a clique
/// of `g`; otherwise the vertex joins the atom of its lowest numbered
/// neighbor.
pub fn dcl_atom_tree<L: LabelingStructure>(g: &Graph, l: &L, tb: &TieBreak) -> Result<AtomTreeResult> {
    let mut a = AtomBuilder::new(g.n());
    let r = run(g, l, tb, Some(&mut a))?;
    Ok(AtomTreeResult {
        atoms: a.atoms,
        tree_edges: a.edges,
        clique_separators: a.separators,
        atom_of: a.atom_of,
        triangulation: r.triangulation,
        clique_tree: r.tree,
        current_atom_history: Some(a.history),
    })
}
