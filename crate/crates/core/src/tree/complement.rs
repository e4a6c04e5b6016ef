use super::invariants::{check_last_clique, check_partial_tree, continues_clique, oracle_hooks};
use super::{CliqueTreeBuilder, CliqueTreeResult, GeneratorsResult};
use crate::error::{Error, Result};
use crate::graph::{is_clique, Adjacency, Graph, VertexSet};
use crate::hooks;
use crate::labeling::{LabelOrdering, LabelingStructure};
use crate::search::{complement_preconditions, Choice, Engine, TieBreak};

fn prev_min_is_minimal<L: LabelingStructure>(e: &Engine<'_, Graph, L>) {
    let l = e.l;
    for (v, label) in e.labels().iter().enumerate() {
        if e.position(v) == 0 && l.less(label, e.reference()) {
            hooks::record(
                "prev-min-minimal",
                e.i(),
                format!(
                    "unnumbered {} has label {} below prev-min-label {}",
                    e.g.name(v),
                    l.render(label),
                    l.render(e.reference())
                ),
            );
        }
    }
}

/// Clique tree of the complement of `g`, computed by a minimal label
/// search on `g` itself. New cliques start when the chosen label differs
/// from the label that started the current clique.
///
/// Clique contents are complement neighborhoods, so the cost is
/// proportional to the size of the complement;
/// [`complement_mls_generators`] avoids that.
pub fn complement_mls_clique_tree<L: LabelingStructure>(g: &Graph, l: &L, tb: &TieBreak) -> Result<CliqueTreeResult> {
    complement_preconditions(g, l)?;
    let n = g.n();
    let cv = g.complement_view();
    let mut e = Engine::new(g, l, tb, Choice::MinPreferEqual)?;
    let mut b = CliqueTreeBuilder::new(n);
    let oracle = oracle_hooks(n);
    let materialized = oracle.then(|| g.complement());
    let label_hooks = hooks::enabled();
    for _ in 0..n {
        if label_hooks {
            prev_min_is_minimal(&e);
        }
        let x = e.choose()?;
        let i = e.i();
        let s: VertexSet = cv.neighbors(x).filter(|&y| e.in_numbered(y)).collect();
        if !is_clique(&cv, s.as_slice()) {
            return Err(Error::ComplementNotChordal { position: i });
        }
        let start = i < n && l.compare(e.reference(), e.label(x)) != LabelOrdering::Equal;
        if let Some(c) = &materialized {
            if i < n {
                let prev = e.vertex_at(i + 1);
                if !start != continues_clique(c, e.positions(), x, prev, i) {
                    hooks::record(
                        "complement-clique-test",
                        i,
                        format!(
                            "label test and neighborhood test disagree for {} after {}",
                            g.name(x),
                            g.name(prev)
                        ),
                    );
                }
            }
        }
        if start {
            b.start_clique(s, |v| e.position(v))?;
            e.set_reference(e.label(x).clone());
        }
        b.increase(x, b.s(), i, start);
        if let Some(c) = &materialized {
            check_partial_tree(c, b.view(), e.positions(), i);
            check_last_clique(c, b.view(), e.positions(), x, i);
        }
        let ys = e.unnumbered_neighbors(x);
        e.increase(&ys);
        e.end_step(x);
    }
    let (ordering, _) = e.finish();
    Ok(b.finish(ordering))
}

/// Generators of the maximal cliques and minimal separators of the
/// complement of `g`, using adjacency queries on `g` only.
///
/// Complement connectivity is checked; complement chordality is assumed.
pub fn complement_mls_generators<L: LabelingStructure>(g: &Graph, l: &L, tb: &TieBreak) -> Result<GeneratorsResult> {
    complement_preconditions(g, l)?;
    let n = g.n();
    let mut e = Engine::new(g, l, tb, Choice::MinPreferEqual)?;
    let mut gen_cliques = Vec::new();
    let mut gen_separators = Vec::new();
    for _ in 0..n {
        let x = e.choose()?;
        let i = e.i();
        if i < n && l.compare(e.reference(), e.label(x)) != LabelOrdering::Equal {
            gen_cliques.push(e.vertex_at(i + 1));
            gen_separators.push(x);
            e.set_reference(e.label(x).clone());
        }
        let ys = e.unnumbered_neighbors(x);
        e.increase(&ys);
        e.end_step(x);
    }
    let (ordering, _) = e.finish();
    gen_cliques.push(ordering.vertex_at(1));
    Ok(GeneratorsResult {
        ordering,
        gen_cliques,
        gen_separators,
    })
}

/// Generators read off a clique-completing tree run: at each clique start
/// at position `i`, `α(i+1)` generates a clique and `α(i)` a separator;
/// `α(1)` generates the last clique.
pub fn generators_from_tree(t: &CliqueTreeResult) -> GeneratorsResult {
    let alpha = &t.ordering;
    let mut gen_cliques = Vec::new();
    let mut gen_separators = Vec::new();
    for step in t.steps.iter().filter(|s| s.started) {
        gen_cliques.push(alpha.vertex_at(step.iteration + 1));
        gen_separators.push(step.vertex);
    }
    if !alpha.is_empty() {
        gen_cliques.push(alpha.vertex_at(1));
    }
    GeneratorsResult {
        ordering: alpha.clone(),
        gen_cliques,
        gen_separators,
    }
}
