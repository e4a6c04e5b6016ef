//! Immutable undirected graphs, orderings and vertex sets.
//!
//! Vertices carry external string names, but every algorithm works on the
//! dense indices `0..n`. Positions inside an [`Ordering`] are 1-based, so
//! `alpha.vertex_at(1)` is the first vertex and `alpha.vertex_at(n)` the last.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Read-only adjacency queries.
///
/// Implemented by [`Graph`], by [`ComplementView`] and by the fill overlay
/// used while a triangulation is being built, so the searches can run on any
/// of them.
pub trait Adjacency {
    type Neighbors<'a>: Iterator<Item = Vertex> + 'a
    where
        Self: 'a;

    fn vertex_count(&self) -> usize;

    fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool;

    /// Neighbors of `v` in increasing index order.
    fn neighbors(&self, v: Vertex) -> Self::Neighbors<'_>;

    fn vertex_name(&self, v: Vertex) -> &str;
}

/// An undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

/// Incremental construction of a [`Graph`] from names.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adjacency: Vec<BTreeSet<Vertex>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the index of `name`, creating the vertex on first sight.
    pub fn vertex(&mut self, name: &str) -> Vertex {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        self.adjacency.push(BTreeSet::new());
        v
    }

    pub fn edge(&mut self, a: &str, b: &str) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        let u = self.vertex(a);
        let v = self.vertex(b);
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn build(self) -> Result<Graph> {
        if self.names.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let adjacency: Vec<Vec<Vertex>> = self.adjacency.into_iter().map(|s| s.into_iter().collect()).collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            names: self.names,
            index: self.index,
            adjacency,
            edge_count,
        })
    }
}

impl Graph {
    /// Builds a graph from name pairs; vertex indices follow first appearance.
    pub fn from_edge_list<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<Graph> {
        let mut builder = GraphBuilder::new();
        for (a, b) in pairs {
            builder.edge(a.as_ref(), b.as_ref())?;
        }
        builder.build()
    }

    /// Builds a graph on explicitly named vertices from index pairs.
    pub fn from_index_edges(names: Vec<String>, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let n = names.len();
        let mut adjacency = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(names[u].clone()));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        let mut index = HashMap::with_capacity(n);
        for (v, name) in names.iter().enumerate() {
            if index.insert(name.clone(), v).is_some() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("duplicate vertex name `{name}`"),
                });
            }
        }
        let adjacency: Vec<Vec<Vertex>> = adjacency.into_iter().map(|s| s.into_iter().collect()).collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            names,
            index,
            adjacency,
            edge_count,
        })
    }

    /// Graph with vertices named `"1"..="n"` and 1-based index pairs.
    pub fn numbered(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let names = (1..=n).map(|i| i.to_string()).collect();
        let shifted: Vec<_> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        Graph::from_index_edges(names, &shifted)
    }

    /// Parses the edge-list text format: one edge per line as two
    /// whitespace-separated names, `#` starts a comment, blank lines are
    /// ignored. A line with a single name declares an isolated vertex.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut builder = GraphBuilder::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                [a] => {
                    builder.vertex(a);
                }
                [a, b] => builder.edge(a, b)?,
                _ => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: format!("expected at most two vertex names, found {}", tokens.len()),
                    })
                }
            }
        }
        builder.build()
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        is_connected(self)
    }

    /// The subgraph induced by `subset`. Vertex `i` of the result is
    /// `subset.as_slice()[i]` of `self`, names are preserved.
    pub fn induced_subgraph(&self, subset: &VertexSet) -> Graph {
        induced_subgraph(self, subset)
    }

    pub fn complement_view(&self) -> ComplementView<'_> {
        ComplementView { base: self }
    }

    /// Materialized complement.
    pub fn complement(&self) -> Graph {
        let view = self.complement_view();
        induced_subgraph(&view, &VertexSet::full(self.n()))
    }

    /// `true` iff all pairs of `set` are adjacent.
    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        is_clique(self, set)
    }
}

impl Adjacency for Graph {
    type Neighbors<'a> = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        Graph::is_adjacent(self, u, v)
    }

    fn neighbors(&self, v: Vertex) -> Self::Neighbors<'_> {
        self.adjacency[v].iter().copied()
    }

    fn vertex_name(&self, v: Vertex) -> &str {
        &self.names[v]
    }
}

/// Adjacency of the complement of a graph, answered from the base graph.
#[derive(Clone, Copy, Debug)]
pub struct ComplementView<'g> {
    base: &'g Graph,
}

impl<'g> ComplementView<'g> {
    pub fn base(&self) -> &'g Graph {
        self.base
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.base.n() - 1 - self.base.degree(v)
    }
}

/// Iterator over the non-neighbors of a vertex.
pub struct ComplementNeighbors<'a> {
    v: Vertex,
    next: Vertex,
    n: usize,
    base: std::iter::Peekable<std::slice::Iter<'a, Vertex>>,
}

impl Iterator for ComplementNeighbors<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        while self.next < self.n {
            let w = self.next;
            self.next += 1;
            while self.base.peek().is_some_and(|&&b| b < w) {
                self.base.next();
            }
            if w == self.v || self.base.peek().is_some_and(|&&b| b == w) {
                continue;
            }
            return Some(w);
        }
        None
    }
}

impl Adjacency for ComplementView<'_> {
    type Neighbors<'a>
        = ComplementNeighbors<'a>
    where
        Self: 'a;

    fn vertex_count(&self) -> usize {
        self.base.n()
    }

    fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u != v && !self.base.is_adjacent(u, v)
    }

    fn neighbors(&self, v: Vertex) -> Self::Neighbors<'_> {
        ComplementNeighbors {
            v,
            next: 0,
            n: self.base.n(),
            base: self.base.neighbors(v).iter().peekable(),
        }
    }

    fn vertex_name(&self, v: Vertex) -> &str {
        self.base.name(v)
    }
}

/// Canonical sorted, duplicate-free set of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    /// Wraps a vector that is already sorted and duplicate-free.
    pub fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Inserts `v`; returns `false` if it was already present.
    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(at) => {
                self.0.insert(at, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        let mut it = other.0.iter().peekable();
        'outer: for v in &self.0 {
            while let Some(&&w) = it.peek() {
                it.next();
                if w == *v {
                    continue 'outer;
                }
                if w > *v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut all: Vec<Vertex> = self.0.iter().chain(other.0.iter()).copied().collect();
        all.sort_unstable();
        all.dedup();
        VertexSet(all)
    }

    /// Renders the set with vertex names, e.g. `{a,b,f}`.
    pub fn display<'a, A: Adjacency>(&'a self, g: &'a A) -> impl fmt::Display + 'a {
        DisplaySet { set: self, g }
    }

    /// Vertex names in set order.
    pub fn names<A: Adjacency>(&self, g: &A) -> Vec<String> {
        self.0.iter().map(|&v| g.vertex_name(v).to_string()).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

struct DisplaySet<'a, A> {
    set: &'a VertexSet,
    g: &'a A,
}

impl<A: Adjacency> fmt::Display for DisplaySet<'_, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.set.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.g.vertex_name(v))?;
        }
        f.write_str("}")
    }
}

/// A bijection between positions `1..=n` and vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ordering {
    seq: Vec<Vertex>,
    position: Vec<usize>,
}

impl Ordering {
    /// `seq[k]` is the vertex at position `k + 1`.
    pub fn from_sequence(seq: Vec<Vertex>) -> Result<Ordering> {
        let n = seq.len();
        let mut position = vec![0; n];
        for (k, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex index {v} out of range")));
            }
            if position[v] != 0 {
                return Err(Error::InvalidOrdering(format!("vertex index {v} appears twice")));
            }
            position[v] = k + 1;
        }
        Ok(Ordering { seq, position })
    }

    /// Ordering given by vertex names in position order.
    pub fn from_names<S: AsRef<str>>(g: &Graph, names: &[S]) -> Result<Ordering> {
        if names.len() != g.n() {
            return Err(Error::InvalidOrdering(format!(
                "ordering names {} vertices, graph has {}",
                names.len(),
                g.n()
            )));
        }
        let seq = names.iter().map(|s| g.vertex(s.as_ref())).collect::<Result<Vec<_>>>()?;
        Ordering::from_sequence(seq)
    }

    pub fn identity(n: usize) -> Ordering {
        Ordering {
            seq: (0..n).collect(),
            position: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// `alpha(position)`, 1-based.
    pub fn vertex_at(&self, position: usize) -> Vertex {
        self.seq[position - 1]
    }

    /// `alpha^-1(v)`, 1-based.
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    /// Vertices in position order.
    pub fn as_slice(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    pub fn names<A: Adjacency>(&self, g: &A) -> Vec<String> {
        self.seq.iter().map(|&v| g.vertex_name(v).to_string()).collect()
    }
}

/// `N^{alpha,i}(y)`: neighbors of `y` at positions strictly above `i`.
pub fn higher_neighborhood<A: Adjacency>(g: &A, alpha: &Ordering, y: Vertex, i: usize) -> VertexSet {
    VertexSet::from_sorted(g.neighbors(y).filter(|&z| alpha.position(z) > i).collect())
}

/// `N^{alpha,i}(y) ∪ {y}`.
pub fn closed_higher_neighborhood<A: Adjacency>(g: &A, alpha: &Ordering, y: Vertex, i: usize) -> VertexSet {
    let mut set = higher_neighborhood(g, alpha, y, i);
    set.insert(y);
    set
}

/// `N^{alpha+}(y)`.
pub fn forward_neighborhood<A: Adjacency>(g: &A, alpha: &Ordering, y: Vertex) -> VertexSet {
    higher_neighborhood(g, alpha, y, alpha.position(y))
}

/// `N^{alpha+}[y]`.
pub fn closed_forward_neighborhood<A: Adjacency>(g: &A, alpha: &Ordering, y: Vertex) -> VertexSet {
    closed_higher_neighborhood(g, alpha, y, alpha.position(y))
}

pub fn is_connected<A: Adjacency>(g: &A) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Connectivity of the complement of `g` in `O(n + m)`, without complement
/// adjacency queries.
pub fn complement_is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let mut unvisited: Vec<Vertex> = (1..n).collect();
    let mut mark = vec![false; n];
    let mut queue = vec![0];
    while let Some(v) = queue.pop() {
        for &w in g.neighbors(v) {
            mark[w] = true;
        }
        let (reached, kept): (Vec<Vertex>, Vec<Vertex>) = unvisited.iter().partition(|&&u| !mark[u]);
        for &w in g.neighbors(v) {
            mark[w] = false;
        }
        unvisited = kept;
        queue.extend(reached);
    }
    unvisited.is_empty()
}

pub fn is_clique<A: Adjacency>(g: &A, set: &[Vertex]) -> bool {
    set.iter()
        .enumerate()
        .all(|(k, &u)| set[k + 1..].iter().all(|&v| g.is_adjacent(u, v)))
}

/// Materializes the subgraph of any adjacency induced by `subset`.
pub fn induced_subgraph<A: Adjacency>(g: &A, subset: &VertexSet) -> Graph {
    let local: HashMap<Vertex, Vertex> = subset.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let names: Vec<String> = subset.iter().map(|v| g.vertex_name(v).to_string()).collect();
    let mut edges = Vec::new();
    for (k, u) in subset.iter().enumerate() {
        for w in g.neighbors(u) {
            if let Some(&j) = local.get(&w) {
                if k < j {
                    edges.push((k, j));
                }
            }
        }
    }
    Graph::from_index_edges(names, &edges).expect("induced subgraph of a simple graph is simple")
}
