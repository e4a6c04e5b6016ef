//! JSON and DOT renderings of results, with vertices written by name.
//!
//! The JSON documents can be read back and re-validated with
//! [`Document::check`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::decomposition::AtomTreeResult;
use crate::error::{Error, Result};
use crate::graph::{closed_higher_neighborhood, higher_neighborhood, Adjacency, Graph, Ordering, Vertex, VertexSet};
use crate::labeling::LabelingStructure;
use crate::oracle::{
    is_chordal, is_minimal_triangulation, is_peo, maximal_cliques, minimal_separators, validate_atom_parts,
    validate_clique_tree,
};
use crate::search::{with_edges, SearchTrace, TriangulationResult};
use crate::tree::{CliqueTreeResult, GeneratorsResult, SeparatorStore};

fn names<A: Adjacency>(g: &A, vs: impl IntoIterator<Item = Vertex>) -> Vec<String> {
    vs.into_iter().map(|v| g.vertex_name(v).to_string()).collect()
}

fn set_names<A: Adjacency>(g: &A, s: &VertexSet) -> Vec<String> {
    names(g, s.iter())
}

fn edge_names<A: Adjacency>(g: &A, edges: &[(Vertex, Vertex)]) -> Vec<[String; 2]> {
    edges
        .iter()
        .map(|&(u, v)| [g.vertex_name(u).to_string(), g.vertex_name(v).to_string()])
        .collect()
}

fn resolve(g: &Graph, names: &[String]) -> Result<VertexSet> {
    names.iter().map(|s| g.vertex(s)).collect()
}

fn resolve_ordering(g: &Graph, names: &[String]) -> Result<Ordering> {
    Ordering::from_names(g, names)
}

fn resolve_edges(g: &Graph, edges: &[[String; 2]]) -> Result<Vec<(Vertex, Vertex)>> {
    edges
        .iter()
        .map(|[a, b]| {
            let (u, v) = (g.vertex(a)?, g.vertex(b)?);
            Ok((u.min(v), u.max(v)))
        })
        .collect()
}

fn node_map(n: usize, nodes: &[VertexSet]) -> Vec<usize> {
    let mut out = vec![0; n];
    for (k, set) in nodes.iter().enumerate() {
        for v in set.iter() {
            if out[v] == 0 {
                out[v] = k + 1;
            }
        }
    }
    out
}

fn check_edges(edges: &[[usize; 2]], s: usize) -> Result<Vec<(usize, usize)>> {
    edges
        .iter()
        .map(|&[p, q]| {
            if (1..=s).contains(&p) && (1..=s).contains(&q) {
                Ok((p, q))
            } else {
                Err(Error::InputMismatch(format!(
                    "edge ({p},{q}) names a node outside 1..={s}"
                )))
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTreeJson {
    pub cliques: Vec<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
    pub separators: Vec<Vec<String>>,
    pub ordering: Vec<String>,
}

impl CliqueTreeJson {
    pub fn new<A: Adjacency>(g: &A, t: &CliqueTreeResult) -> Self {
        CliqueTreeJson {
            cliques: t.cliques.iter().map(|c| set_names(g, c)).collect(),
            edges: t.tree_edges.iter().map(|&(p, q)| [p, q]).collect(),
            separators: t.separators.iter().map(|s| set_names(g, s)).collect(),
            ordering: names(g, t.ordering.as_slice().iter().copied()),
        }
    }

    /// Rebuilds the tree over the vertices of `g`; each vertex is assigned
    /// to the first clique containing it and no construction steps are
    /// recorded.
    pub fn to_result(&self, g: &Graph) -> Result<CliqueTreeResult> {
        let cliques = self.cliques.iter().map(|c| resolve(g, c)).collect::<Result<Vec<_>>>()?;
        let separators = self
            .separators
            .iter()
            .map(|c| resolve(g, c))
            .collect::<Result<SeparatorStore>>()?;
        Ok(CliqueTreeResult {
            tree_edges: check_edges(&self.edges, cliques.len())?,
            clique_of: node_map(g.n(), &cliques),
            cliques,
            separators,
            ordering: resolve_ordering(g, &self.ordering)?,
            steps: Vec::new(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomTreeJson {
    pub atoms: Vec<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
    pub clique_separators: Vec<Vec<String>>,
    pub ordering: Vec<String>,
    pub fill_edges: Vec<[String; 2]>,
}

impl AtomTreeJson {
    pub fn new(g: &Graph, t: &AtomTreeResult) -> Self {
        AtomTreeJson {
            atoms: t.atoms.iter().map(|c| set_names(g, c)).collect(),
            edges: t.tree_edges.iter().map(|&(p, q)| [p, q]).collect(),
            clique_separators: t.clique_separators.iter().map(|s| set_names(g, s)).collect(),
            ordering: names(g, t.triangulation.ordering.as_slice().iter().copied()),
            fill_edges: edge_names(g, &t.triangulation.fill),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsJson {
    pub ordering: Vec<String>,
    pub gen_cliques: Vec<String>,
    pub gen_separators: Vec<String>,
}

impl GeneratorsJson {
    pub fn new(g: &Graph, r: &GeneratorsResult) -> Self {
        GeneratorsJson {
            ordering: names(g, r.ordering.as_slice().iter().copied()),
            gen_cliques: names(g, r.gen_cliques.iter().copied()),
            gen_separators: names(g, r.gen_separators.iter().copied()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub ordering: Vec<String>,
    pub fill_edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree: Option<CliqueTreeJson>,
}

impl TriangulationJson {
    pub fn new(g: &Graph, t: &TriangulationResult, tree: Option<&CliqueTreeResult>) -> Self {
        TriangulationJson {
            ordering: names(g, t.ordering.as_slice().iter().copied()),
            fill_edges: edge_names(g, &t.fill),
            tree: tree.map(|tree| CliqueTreeJson::new(g, tree)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStepJson {
    pub i: usize,
    pub vertex: String,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    pub increased: Vec<String>,
    pub fill: Vec<[String; 2]>,
}

pub fn trace_json<A: Adjacency, L: LabelingStructure>(
    g: &A,
    l: &L,
    trace: &SearchTrace<L::Label>,
) -> Vec<TraceStepJson> {
    trace
        .steps
        .iter()
        .map(|s| TraceStepJson {
            i: s.i,
            vertex: g.vertex_name(s.vertex).to_string(),
            label: l.render(&s.label),
            reference: s.reference.as_ref().map(|r| l.render(r)),
            increased: names(g, s.increased.iter().copied()),
            fill: edge_names(g, &s.fill),
        })
        .collect()
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot_tree<A: Adjacency>(g: &A, name: &str, nodes: &[VertexSet], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {name} {{");
    let _ = writeln!(out, "  node [shape=box];");
    for (k, set) in nodes.iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{} [label=\"{}\"];",
            k + 1,
            dot_escape(&set.display(g).to_string())
        );
    }
    for &(p, q) in edges {
        let sep = nodes[p - 1].intersection(&nodes[q - 1]);
        let _ = writeln!(
            out,
            "  n{p} -- n{q} [label=\"{}\"];",
            dot_escape(&sep.display(g).to_string())
        );
    }
    out.push_str("}\n");
    out
}

/// Tree nodes labeled with clique contents, edges with separators.
pub fn clique_tree_dot<A: Adjacency>(g: &A, t: &CliqueTreeResult) -> String {
    dot_tree(g, "clique_tree", &t.cliques, &t.tree_edges)
}

/// Atom nodes, edges labeled with clique minimal separators.
pub fn atom_tree_dot(g: &Graph, t: &AtomTreeResult) -> String {
    dot_tree(g, "atom_tree", &t.atoms, &t.tree_edges)
}

/// The triangulation with fill edges dashed.
pub fn triangulation_dot(g: &Graph, t: &TriangulationResult) -> String {
    let mut out = String::from("graph triangulation {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  \"{}\";", dot_escape(g.name(v)));
    }
    let fill: BTreeSet<(Vertex, Vertex)> = t.fill_set();
    for (u, v) in t.h.edges() {
        let style = if fill.contains(&(u, v)) { " [style=dashed]" } else { "" };
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\"{style};",
            dot_escape(g.name(u)),
            dot_escape(g.name(v))
        );
    }
    out.push_str("}\n");
    out
}

/// Generator vertices in order, clique generators as boxes.
pub fn generators_dot(g: &Graph, r: &GeneratorsResult) -> String {
    let mut out = String::from("graph generators {\n");
    for &v in &r.gen_cliques {
        let _ = writeln!(out, "  \"{}\" [shape=box];", dot_escape(g.name(v)));
    }
    for &v in &r.gen_separators {
        let _ = writeln!(out, "  \"{}\" [shape=ellipse];", dot_escape(g.name(v)));
    }
    out.push_str("}\n");
    out
}

/// A JSON document produced by one of the commands, recognized by its keys.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Document {
    AtomTree(AtomTreeJson),
    CliqueTree(CliqueTreeJson),
    Generators(GeneratorsJson),
    Triangulation(TriangulationJson),
}

/// Outcome of re-validating a document against the oracles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub document: &'static str,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::AtomTree(_) => "atom-tree",
            Document::CliqueTree(_) => "clique-tree",
            Document::Generators(_) => "generators",
            Document::Triangulation(_) => "triangulation",
        }
    }

    /// Runs every applicable oracle. Clique trees and generators describe
    /// `g` itself, or its complement when `complement` is set; a
    /// triangulation document must describe a minimal triangulation of `g`
    /// for which its ordering is a perfect elimination ordering.
    pub fn check(&self, g: &Graph, complement: bool) -> Result<CheckReport> {
        let target = if complement { g.complement() } else { g.clone() };
        let mut violations = Vec::new();
        match self {
            Document::CliqueTree(doc) => {
                let t = doc.to_result(&target)?;
                violations.extend(validate_clique_tree(&target, &t)?.iter().map(|v| v.describe(&target)));
            }
            Document::Triangulation(doc) => {
                let fill = resolve_edges(g, &doc.fill_edges)?;
                if let Some((u, v)) = fill.iter().find(|&&(u, v)| g.is_adjacent(u, v)) {
                    violations.push(format!("fill edge {}-{} is already an edge", g.name(*u), g.name(*v)));
                }
                let h = with_edges(g, &fill);
                let alpha = resolve_ordering(g, &doc.ordering)?;
                if !is_chordal(&h) {
                    violations.push("the triangulation is not chordal".to_string());
                } else {
                    if !is_minimal_triangulation(g, &h) {
                        violations.push("the triangulation is not minimal".to_string());
                    }
                    if !is_peo(&h, &alpha) {
                        violations.push(
                            "the ordering is not a perfect elimination ordering of the triangulation".to_string(),
                        );
                    }
                }
                if let Some(tree) = &doc.tree {
                    let t = tree.to_result(&h)?;
                    violations.extend(validate_clique_tree(&h, &t)?.iter().map(|v| v.describe(&h)));
                }
            }
            Document::AtomTree(doc) => {
                let atoms = doc.atoms.iter().map(|a| resolve(g, a)).collect::<Result<Vec<_>>>()?;
                let edges = check_edges(&doc.edges, atoms.len())?;
                let seps = doc
                    .clique_separators
                    .iter()
                    .map(|s| resolve(g, s))
                    .collect::<Result<SeparatorStore>>()?;
                let atom_of = node_map(g.n(), &atoms);
                violations.extend(
                    validate_atom_parts(g, &atoms, &edges, &seps, &atom_of)?
                        .iter()
                        .map(|v| v.describe(g)),
                );
            }
            Document::Generators(doc) => {
                violations.extend(check_generators(&target, doc)?);
            }
        }
        Ok(CheckReport {
            document: self.kind(),
            violations,
        })
    }
}

fn check_generators(h: &Graph, doc: &GeneratorsJson) -> Result<Vec<String>> {
    let alpha = resolve_ordering(h, &doc.ordering)?;
    let mut out = Vec::new();
    if doc.gen_cliques.len() != doc.gen_separators.len() + 1 {
        out.push(format!(
            "{} clique generators but {} separator generators",
            doc.gen_cliques.len(),
            doc.gen_separators.len()
        ));
    }
    let cliques = maximal_cliques(h)?;
    let separators = minimal_separators(h)?;
    let mut generated: BTreeMap<VertexSet, String> = BTreeMap::new();
    for name in &doc.gen_cliques {
        let v = h.vertex(name)?;
        let set = closed_higher_neighborhood(h, &alpha, v, alpha.position(v));
        if !cliques.contains(&set) {
            out.push(format!("{} does not generate a maximal clique", name));
        }
        generated.insert(set, name.clone());
    }
    for set in cliques.iter().filter(|c| !generated.contains_key(*c)) {
        out.push(format!("maximal clique {} has no generator", set.display(h)));
    }
    for name in &doc.gen_separators {
        let v = h.vertex(name)?;
        let set = higher_neighborhood(h, &alpha, v, alpha.position(v));
        if !separators.contains(&set) {
            out.push(format!("{} does not generate a minimal separator", name));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{lexdfs, mcs};
    use crate::oracle::fixtures::{fig1_h, fig3_g, fig4_g};
    use crate::search::TieBreak;
    use crate::tree::{complement_mls_generators, mls_clique_tree};

    #[test]
    fn clique_tree_round_trip() {
        let h = fig1_h().graph;
        let t = mls_clique_tree(&h, &mcs(), &TieBreak::LowestIndex).unwrap();
        let json = serde_json::to_string(&CliqueTreeJson::new(&h, &t)).unwrap();
        let doc = Document::parse(&json).unwrap();
        assert_eq!(doc.kind(), "clique-tree");
        assert!(doc.check(&h, false).unwrap().passed());
        let back = match doc {
            Document::CliqueTree(d) => d.to_result(&h).unwrap(),
            _ => unreachable!(),
        };
        assert_eq!(back.cliques, t.cliques);
        assert_eq!(back.tree_edges, t.tree_edges);
    }

    #[test]
    fn broken_documents_are_reported() {
        let h = fig1_h().graph;
        let doc = Document::parse(
            r#"{"cliques":[["c","d","e","f"],["a","b","f"]],"edges":[[1,2]],"separators":[["f"]],"ordering":["a","b","c","d","e","f"]}"#,
        )
        .unwrap();
        let report = doc.check(&h, false).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("{c,d,e,f} is not a clique")));
    }

    #[test]
    fn generators_and_atoms_round_trip() {
        let g = fig3_g().graph;
        let tb = TieBreak::reproduce(&g, &["a", "b", "c", "d", "e", "f"]).unwrap();
        let r = complement_mls_generators(&g, &lexdfs(), &tb).unwrap();
        let json = serde_json::to_string(&GeneratorsJson::new(&g, &r)).unwrap();
        assert_eq!(
            json,
            r#"{"ordering":["a","b","c","d","e","f"],"gen_cliques":["e","c","a"],"gen_separators":["d","b"]}"#
        );
        assert!(Document::parse(&json).unwrap().check(&g, true).unwrap().passed());

        let g = fig4_g().graph;
        let t = crate::decomposition::dcl_atom_tree(&g, &mcs(), &TieBreak::LowestIndex).unwrap();
        let json = serde_json::to_string(&AtomTreeJson::new(&g, &t)).unwrap();
        let doc = Document::parse(&json).unwrap();
        assert_eq!(doc.kind(), "atom-tree");
        assert!(doc.check(&g, false).unwrap().passed());
    }

    #[test]
    fn dot_output() {
        let h = fig1_h().graph;
        let t = mls_clique_tree(&h, &mcs(), &TieBreak::LowestIndex).unwrap();
        let dot = clique_tree_dot(&h, &t);
        assert!(dot.starts_with("graph clique_tree {"));
        assert_eq!(dot.matches(" -- ").count(), 2);
    }
}
