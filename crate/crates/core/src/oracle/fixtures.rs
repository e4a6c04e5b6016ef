//! The worked example graphs, with scripted orderings and the final labels
//! those orderings produce.
//!
//! Vertex indices follow the listed name order, so `LowestIndex` tie-breaking
//! prefers alphabetically (or numerically) smaller names.

use crate::graph::Graph;
use crate::labeling::Builtin;

/// How the expected labels of a fixture are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Run {
    /// `mls` with the scripted ordering.
    Search,
    /// The min-choosing complement search with the scripted ordering.
    Complement,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: Graph,
    pub structure: Builtin,
    pub run: Run,
    /// Scripted ordering in position order `alpha(1), ..., alpha(n)`.
    pub ordering: Vec<&'static str>,
    /// Final label of each vertex after the scripted run.
    pub labels: Vec<(&'static str, &'static str)>,
}

fn build(names: &[&str], edges: &[(&str, &str)]) -> Graph {
    let idx = |s: &str| names.iter().position(|n| *n == s).expect("fixture vertex");
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Graph::from_index_edges(names.iter().map(|s| s.to_string()).collect(), &pairs).expect("fixture graphs are simple")
}

/// Chordal graph on `a..f` with maximal cliques `{a,b,f}`, `{c,d,e}`, `{e,f}`.
pub fn fig1_h() -> Fixture {
    Fixture {
        name: "fig1_H",
        description: "chordal graph with three maximal cliques joined by single-vertex separators",
        graph: build(
            &["a", "b", "c", "d", "e", "f"],
            &[
                ("f", "a"),
                ("a", "b"),
                ("b", "f"),
                ("f", "e"),
                ("e", "c"),
                ("c", "d"),
                ("d", "e"),
            ],
        ),
        structure: Builtin::LexDfs,
        run: Run::Search,
        ordering: vec!["a", "b", "c", "d", "e", "f"],
        labels: vec![
            ("a", "(2,6)"),
            ("b", "(6)"),
            ("c", "(4,5)"),
            ("d", "(5)"),
            ("e", "(6)"),
            ("f", "()"),
        ],
    }
}

/// Complement of [`fig1_h`].
pub fn fig3_g() -> Fixture {
    Fixture {
        name: "fig3_G",
        description: "complement of fig1_H; searched with minimal labels",
        graph: build(
            &["a", "b", "c", "d", "e", "f"],
            &[
                ("a", "e"),
                ("e", "b"),
                ("b", "d"),
                ("d", "f"),
                ("f", "c"),
                ("c", "a"),
                ("a", "d"),
                ("b", "c"),
            ],
        ),
        structure: Builtin::LexDfs,
        run: Run::Complement,
        ordering: vec!["a", "b", "c", "d", "e", "f"],
        labels: vec![
            ("a", "(3,4,5)"),
            ("b", "(3,4,5)"),
            ("c", "(6)"),
            ("d", "(6)"),
            ("e", "()"),
            ("f", "()"),
        ],
    }
}

/// Non-chordal graph whose LexBFS ordering `1..5` is not a minimal
/// elimination ordering.
pub fn fig4_g() -> Fixture {
    Fixture {
        name: "fig4_G",
        description: "non-chordal graph with clique minimal separator {2,5}",
        graph: build(
            &["1", "2", "3", "4", "5"],
            &[("1", "2"), ("1", "4"), ("2", "3"), ("2", "5"), ("3", "5"), ("4", "5")],
        ),
        structure: Builtin::LexBfs,
        run: Run::Search,
        ordering: vec!["1", "2", "3", "4", "5"],
        labels: vec![("1", "(4,2)"), ("2", "(5,3)"), ("3", "(5)"), ("4", "(5)"), ("5", "()")],
    }
}

/// Non-chordal graph where the separators inside `N[1]` are incomparable.
pub fn fig5_g() -> Fixture {
    Fixture {
        name: "fig5_G",
        description: "non-chordal graph; LexDFS ordering 1..7 with incomparable separators in N[1]",
        graph: build(
            &["1", "2", "3", "4", "5", "6", "7"],
            &[
                ("1", "2"),
                ("1", "4"),
                ("1", "6"),
                ("2", "3"),
                ("2", "7"),
                ("3", "4"),
                ("3", "6"),
                ("4", "5"),
                ("5", "6"),
                ("6", "7"),
            ],
        ),
        structure: Builtin::LexDfs,
        run: Run::Search,
        ordering: vec!["1", "2", "3", "4", "5", "6", "7"],
        labels: vec![
            ("1", "(2,4,6)"),
            ("2", "(3,7)"),
            ("3", "(4,6)"),
            ("4", "(5)"),
            ("5", "(6)"),
            ("6", "(7)"),
            ("7", "()"),
        ],
    }
}

/// Non-chordal graph where the components of `G - N[1]` interleave in the
/// LexDFS ordering `1..6`.
pub fn fig6_g() -> Fixture {
    Fixture {
        name: "fig6_G",
        description: "non-chordal graph; LexDFS ordering 1..6 interleaving the components of G-N[1]",
        graph: build(
            &["1", "2", "3", "4", "5", "6"],
            &[("1", "5"), ("2", "3"), ("2", "6"), ("3", "5"), ("4", "5"), ("5", "6")],
        ),
        structure: Builtin::LexDfs,
        run: Run::Search,
        ordering: vec!["1", "2", "3", "4", "5", "6"],
        labels: vec![
            ("1", "(5)"),
            ("2", "(3,6)"),
            ("3", "(5)"),
            ("4", "(5)"),
            ("5", "(6)"),
            ("6", "()"),
        ],
    }
}

pub fn fixtures() -> Vec<Fixture> {
    vec![fig1_h(), fig3_g(), fig4_g(), fig5_g(), fig6_g()]
}

pub fn by_name(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let h = fig1_h().graph;
        assert_eq!((h.n(), h.m()), (6, 7));
        assert_eq!(fig3_g().graph.m(), 8);
        assert_eq!(fig4_g().graph.m(), 6);
        assert_eq!((fig5_g().graph.n(), fig5_g().graph.m()), (7, 10));
        assert_eq!((fig6_g().graph.n(), fig6_g().graph.m()), (6, 6));
        assert!(by_name("fig4_G").is_some());
    }

    #[test]
    fn fig3_is_the_complement_of_fig1() {
        let c = fig1_h().graph.complement();
        assert_eq!(c, fig3_g().graph);
    }
}
