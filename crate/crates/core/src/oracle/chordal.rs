use super::cliques::maximal_cliques;
use crate::graph::{closed_forward_neighborhood, forward_neighborhood, Adjacency, Graph, Ordering};

/// Chordality by repeated removal of simplicial vertices.
pub fn is_chordal<A: Adjacency>(g: &A) -> bool {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let simplicial = (0..n).find(|&v| {
            alive[v] && {
                let nbrs: Vec<usize> = g.neighbors(v).filter(|&w| alive[w]).collect();
                nbrs.iter()
                    .enumerate()
                    .all(|(k, &a)| nbrs[k + 1..].iter().all(|&b| g.is_adjacent(a, b)))
            }
        });
        match simplicial {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// First position whose forward neighborhood is not a clique.
pub fn peo_violation<A: Adjacency>(g: &A, alpha: &Ordering) -> Option<usize> {
    (1..=alpha.len()).find(|&i| {
        let fwd = forward_neighborhood(g, alpha, alpha.vertex_at(i));
        !crate::graph::is_clique(g, fwd.as_slice())
    })
}

pub fn is_peo<A: Adjacency>(g: &A, alpha: &Ordering) -> bool {
    alpha.len() == g.vertex_count() && peo_violation(g, alpha).is_none()
}

/// First `i` for which `N+[x_{i+1}]` is neither a maximal clique nor equal
/// to `N+(x_i)`; `Some(0)` when `alpha` is not even a peo.
pub fn mccomp_violation(g: &Graph, alpha: &Ordering) -> Option<usize> {
    if !is_peo(g, alpha) {
        return Some(0);
    }
    let cliques = maximal_cliques(g).expect("maximal clique oracle limit");
    (1..alpha.len()).find(|&i| {
        let next = closed_forward_neighborhood(g, alpha, alpha.vertex_at(i + 1));
        !cliques.contains(&next) && next != forward_neighborhood(g, alpha, alpha.vertex_at(i))
    })
}

/// Perfect moplex ordering check through the MCComp condition.
pub fn is_mccomp_peo(g: &Graph, alpha: &Ordering) -> bool {
    mccomp_violation(g, alpha).is_none()
}

pub fn is_pmo(g: &Graph, alpha: &Ordering) -> bool {
    is_mccomp_peo(g, alpha)
}

/// `h` is chordal, contains `g`, and no single fill edge can be dropped.
pub fn is_minimal_triangulation(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edges().any(|(u, v)| !h.is_adjacent(u, v)) || !is_chordal(h) {
        return false;
    }
    let fill: Vec<(usize, usize)> = h.edges().filter(|&(u, v)| !g.is_adjacent(u, v)).collect();
    fill.iter().all(|&(u, v)| {
        let kept: Vec<(usize, usize)> = h.edges().filter(|&e| e != (u, v)).collect();
        let without = Graph::from_index_edges(h.names().to_vec(), &kept).expect("subgraph of a simple graph");
        !is_chordal(&without)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    #[test]
    fn chordality() {
        assert!(is_chordal(&fixtures::fig1_h().graph));
        let c4 = Graph::numbered(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(!is_chordal(&c4));
        assert!(!is_chordal(&fixtures::fig4_g().graph));
    }

    #[test]
    fn peo_checks() {
        let h = fixtures::fig1_h().graph;
        let alpha = Ordering::from_names(&h, &["a", "b", "c", "d", "e", "f"]).unwrap();
        assert!(is_peo(&h, &alpha));
        let back = Ordering::from_names(&h, &["f", "e", "d", "c", "b", "a"]).unwrap();
        assert!(!is_peo(&h, &back));
        let c4 = Graph::numbered(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(!is_peo(&c4, &Ordering::identity(4)));
    }

    #[test]
    fn minimal_triangulations() {
        let c4 = Graph::numbered(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let chorded = Graph::numbered(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]).unwrap();
        assert!(is_minimal_triangulation(&c4, &chorded));
        let both = Graph::numbered(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4)]).unwrap();
        assert!(!is_minimal_triangulation(&c4, &both));
        assert!(!is_minimal_triangulation(&c4, &c4));
        let h = fixtures::fig1_h().graph;
        assert!(is_minimal_triangulation(&h, &h));
    }

    #[test]
    fn mccomp_examples() {
        let h = fixtures::fig1_h().graph;
        let alpha = Ordering::from_names(&h, &["a", "b", "c", "d", "e", "f"]).unwrap();
        assert!(is_mccomp_peo(&h, &alpha));
        let beta = Ordering::from_names(&h, &["a", "c", "d", "b", "e", "f"]).unwrap();
        assert!(is_peo(&h, &beta));
        assert_eq!(mccomp_violation(&h, &beta), Some(3));
        let k4 = Graph::numbered(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(is_pmo(&k4, &Ordering::from_sequence(vec![2, 0, 3, 1]).unwrap()));
    }
}
