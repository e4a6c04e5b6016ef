//! Maximal label searches and their triangulating variants.

mod engine;

use std::collections::BTreeSet;

use serde::Serialize;

pub(crate) use engine::{Choice, Engine};

use crate::error::{Error, Result};
use crate::graph::{complement_is_connected, is_connected, Adjacency, Graph, Ordering, Vertex};
use crate::labeling::{ensure_complement_reversing, ensure_ic, LabelingStructure, DEFAULT_CHECK_BOUND};

/// How ties between admissible vertices are broken.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub enum TieBreak {
    /// The admissible vertex with the smallest index.
    #[default]
    LowestIndex,
    /// A uniform choice driven by `ChaCha8Rng::seed_from_u64`.
    SeededRandom(u64),
    /// Explicit picks, the first one being `x_n`. Every pick must be
    /// admissible at its turn; once exhausted, `LowestIndex` applies.
    Scripted(Vec<Vertex>),
}

impl TieBreak {
    /// Picks reproducing the ordering given in position order
    /// `alpha(1), ..., alpha(n)`.
    pub fn reproduce<S: AsRef<str>>(g: &Graph, alpha: &[S]) -> Result<TieBreak> {
        let mut picks = alpha.iter().map(|s| g.vertex(s.as_ref())).collect::<Result<Vec<_>>>()?;
        picks.reverse();
        Ok(TieBreak::Scripted(picks))
    }
}

/// One iteration of a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep<Lab> {
    pub i: usize,
    pub vertex: Vertex,
    /// Label of the vertex when it was chosen.
    pub label: Lab,
    /// The prev-max-label or prev-min-label, for the variants that use one.
    pub reference: Option<Lab>,
    /// Vertices whose label was increased, in increasing index order.
    pub increased: Vec<Vertex>,
    pub fill: Vec<(Vertex, Vertex)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchTrace<Lab> {
    pub steps: Vec<TraceStep<Lab>>,
}

impl<Lab: Clone> SearchTrace<Lab> {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Final label of each vertex, indexed by vertex. Numbered vertices
    /// never change label, so this is the label at choice time.
    pub fn final_labels(&self) -> Vec<Lab> {
        let mut out: Vec<Option<Lab>> = vec![None; self.steps.len()];
        for s in &self.steps {
            out[s.vertex] = Some(s.label.clone());
        }
        out.into_iter().map(|l| l.expect("one step per vertex")).collect()
    }
}

/// `H = G⁺_α` together with the ordering and the fill.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationResult {
    pub ordering: Ordering,
    pub h: Graph,
    /// Fill edges `(u, v)` with `u < v`, in insertion order.
    pub fill: Vec<(Vertex, Vertex)>,
}

impl TriangulationResult {
    pub fn fill_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.fill.iter().copied().collect()
    }
}

pub(crate) fn search_preconditions<A: Adjacency, L: LabelingStructure>(g: &A, l: &L) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    ensure_ic(l, DEFAULT_CHECK_BOUND)?;
    if !is_connected(g) {
        return Err(Error::DisconnectedGraph);
    }
    Ok(())
}

pub(crate) fn complement_preconditions<L: LabelingStructure>(g: &Graph, l: &L) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    ensure_ic(l, DEFAULT_CHECK_BOUND)?;
    ensure_complement_reversing(l, DEFAULT_CHECK_BOUND)?;
    if !complement_is_connected(g) {
        return Err(Error::ComplementDisconnected);
    }
    Ok(())
}

fn run_plain<A: Adjacency, L: LabelingStructure>(
    g: &A,
    l: &L,
    tb: &TieBreak,
    choice: Choice,
) -> Result<(Ordering, SearchTrace<L::Label>)> {
    let mut e = Engine::new(g, l, tb, choice)?;
    for _ in 0..g.vertex_count() {
        let x = e.choose()?;
        let ys = e.unnumbered_neighbors(x);
        e.increase(&ys);
        e.end_step(x);
    }
    let (ordering, steps) = e.finish();
    Ok((ordering, SearchTrace { steps }))
}

/// Maximal label search: repeatedly number an unnumbered vertex of maximal
/// label and increase the labels of its unnumbered neighbors.
pub fn mls<A: Adjacency, L: LabelingStructure>(
    g: &A,
    l: &L,
    tb: &TieBreak,
) -> Result<(Ordering, SearchTrace<L::Label>)> {
    search_preconditions(g, l)?;
    run_plain(g, l, tb, Choice::Max)
}

/// [`mls`] preferring labels greater than the previous chosen label.
pub fn moplex_mls<A: Adjacency, L: LabelingStructure>(
    g: &A,
    l: &L,
    tb: &TieBreak,
) -> Result<(Ordering, SearchTrace<L::Label>)> {
    search_preconditions(g, l)?;
    run_plain(g, l, tb, Choice::MaxPreferGreater)
}

/// Minimal label search on `g`, which simulates [`mls`] on the complement
/// when `L` is complement-reversing.
pub fn complement_mls<L: LabelingStructure>(
    g: &Graph,
    l: &L,
    tb: &TieBreak,
) -> Result<(Ordering, SearchTrace<L::Label>)> {
    complement_preconditions(g, l)?;
    run_plain(g, l, tb, Choice::Min)
}

fn run_mlsm<L: LabelingStructure>(
    g: &Graph,
    l: &L,
    tb: &TieBreak,
    choice: Choice,
) -> Result<(TriangulationResult, SearchTrace<L::Label>)> {
    search_preconditions(g, l)?;
    let mut e = Engine::new(g, l, tb, choice)?.with_fill();
    for _ in 0..g.n() {
        let x = e.choose()?;
        let ys = e.path_targets(x);
        e.record_fill(x, &ys);
        e.increase(&ys);
        e.end_step(x);
    }
    let fill = e.fill_edges().to_vec();
    let (ordering, steps) = e.finish();
    let h = with_edges(g, &fill);
    Ok((TriangulationResult { ordering, h, fill }, SearchTrace { steps }))
}

/// Maximal label search with the path rule, producing a minimal
/// elimination ordering and its triangulation.
pub fn mlsm<L: LabelingStructure>(
    g: &Graph,
    l: &L,
    tb: &TieBreak,
) -> Result<(TriangulationResult, SearchTrace<L::Label>)> {
    run_mlsm(g, l, tb, Choice::Max)
}

/// [`mlsm`] with the prev-max-label preference.
pub fn moplex_mlsm<L: LabelingStructure>(
    g: &Graph,
    l: &L,
    tb: &TieBreak,
) -> Result<(TriangulationResult, SearchTrace<L::Label>)> {
    run_mlsm(g, l, tb, Choice::MaxPreferGreater)
}

pub(crate) fn with_edges(g: &Graph, extra: &[(Vertex, Vertex)]) -> Graph {
    if extra.is_empty() {
        return g.clone();
    }
    let edges: Vec<(Vertex, Vertex)> = g.edges().chain(extra.iter().copied()).collect();
    Graph::from_index_edges(g.names().to_vec(), &edges).expect("fill edges are new, simple edges")
}

/// The elimination game along `alpha`.
pub fn triangulation_from_ordering(g: &Graph, alpha: &Ordering) -> Result<TriangulationResult> {
    if alpha.len() != g.n() {
        return Err(Error::InvalidOrdering(format!(
            "ordering has {} vertices, graph has {}",
            alpha.len(),
            g.n()
        )));
    }
    let mut adj: Vec<BTreeSet<Vertex>> = (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut fill = Vec::new();
    for p in 1..=g.n() {
        let x = alpha.vertex_at(p);
        let higher: Vec<Vertex> = adj[x].iter().copied().filter(|&y| alpha.position(y) > p).collect();
        for (a, &u) in higher.iter().enumerate() {
            for &v in &higher[a + 1..] {
                if adj[u].insert(v) {
                    adj[v].insert(u);
                    fill.push((u.min(v), u.max(v)));
                }
            }
        }
    }
    let h = with_edges(g, &fill);
    Ok(TriangulationResult {
        ordering: alpha.clone(),
        h,
        fill,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{lexbfs, lexdfs, mcs, mns};
    use crate::oracle::fixtures::{fig1_h, fig4_g};

    #[test]
    fn path_graph_elimination() {
        let g = Graph::from_edge_list(&[("a", "b"), ("b", "c")]).unwrap();
        let alpha = Ordering::from_names(&g, &["b", "a", "c"]).unwrap();
        let t = triangulation_from_ordering(&g, &alpha).unwrap();
        assert_eq!(t.fill, vec![(0, 2)]);
    }

    #[test]
    fn fig4_lexbfs_fill() {
        let f = fig4_g();
        let g = &f.graph;
        let tb = TieBreak::reproduce(g, &f.ordering).unwrap();
        let (alpha, _) = mls(g, &lexbfs(), &tb).unwrap();
        let t = triangulation_from_ordering(g, &alpha).unwrap();
        let named: Vec<(&str, &str)> = t.fill.iter().map(|&(u, v)| (g.name(u), g.name(v))).collect();
        assert_eq!(named, vec![("2", "4"), ("3", "4")]);
    }

    #[test]
    fn script_conflict_is_an_error() {
        let g = fig1_h().graph;
        let a = g.vertex("a").unwrap();
        let c = g.vertex("c").unwrap();
        let err = mls(&g, &mcs(), &TieBreak::Scripted(vec![a, c])).unwrap_err();
        assert!(matches!(err, Error::ScriptConflict { position: 5, .. }), "{err}");
        let err = mls(&g, &mcs(), &TieBreak::Scripted(vec![a, a])).unwrap_err();
        assert!(matches!(err, Error::InvalidScript(_)));
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::parse_edge_list("a b\nc d\n").unwrap();
        assert_eq!(
            mls(&g, &mcs(), &TieBreak::LowestIndex).unwrap_err(),
            Error::DisconnectedGraph
        );
    }

    #[test]
    fn single_vertex() {
        let g = Graph::parse_edge_list("v\n").unwrap();
        let (alpha, trace) = mls(&g, &lexdfs(), &TieBreak::LowestIndex).unwrap();
        assert_eq!(alpha.as_slice(), &[0]);
        assert_eq!(trace.len(), 1);
    }

    #[test]
    fn c4_gets_one_chord() {
        let g = Graph::parse_edge_list("a b\nb c\nc d\nd a\n").unwrap();
        let (t, _) = mlsm(&g, &mcs(), &TieBreak::LowestIndex).unwrap();
        assert_eq!(t.fill.len(), 1);
        assert_eq!(t.h.m(), 5);
    }

    #[test]
    fn total_path_rule_matches_generic() {
        use crate::oracle::{gen, Family, GeneratorConfig};
        for seed in 0..40 {
            let g = gen(&GeneratorConfig::new(Family::Connected, seed, 4, 10).with_density(0.3));
            for tb in [TieBreak::LowestIndex, TieBreak::SeededRandom(seed)] {
                let l = lexbfs();
                let mut fast = Engine::new(&g, &l, &tb, Choice::Max).unwrap().with_fill();
                let mut slow = Engine::new(&g, &l, &tb, Choice::Max)
                    .unwrap()
                    .with_fill()
                    .without_fast_paths();
                for _ in 0..g.n() {
                    let x = fast.choose().unwrap();
                    assert_eq!(slow.choose().unwrap(), x);
                    let ys = fast.path_targets(x);
                    assert_eq!(slow.path_targets(x), ys);
                    for e in [&mut fast, &mut slow] {
                        e.record_fill(x, &ys);
                        e.increase(&ys);
                        e.end_step(x);
                    }
                }
            }
        }
    }

    #[test]
    fn mns_candidates_are_maximal() {
        let g = fig1_h().graph;
        let (alpha, trace) = mls(&g, &mns(), &TieBreak::LowestIndex).unwrap();
        assert_eq!(alpha.len(), 6);
        assert_eq!(trace.final_labels().len(), 6);
    }
}
