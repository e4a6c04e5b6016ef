use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{TieBreak, TraceStep};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Ordering, Vertex};
use crate::hooks;
use crate::labeling::{lab, LabelOrdering, LabelingStructure};

/// Which labels are eligible at each iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Choice {
    /// Maximal labels.
    Max,
    /// Maximal labels, restricted to those greater than the previous
    /// chosen label when possible.
    MaxPreferGreater,
    /// Minimal labels.
    Min,
    /// Minimal labels, restricted to those equal to the reference label
    /// when possible.
    MinPreferEqual,
}

impl Choice {
    fn dominating(self) -> LabelOrdering {
        match self {
            Choice::Max | Choice::MaxPreferGreater => LabelOrdering::Greater,
            Choice::Min | Choice::MinPreferEqual => LabelOrdering::Less,
        }
    }

    fn uses_reference(self) -> bool {
        matches!(self, Choice::MaxPreferGreater | Choice::MinPreferEqual)
    }
}

enum Picker {
    Lowest,
    Random(Box<ChaCha8Rng>),
    Script { picks: Vec<Vertex>, next: usize },
}

/// Shared state of one label search: labels, positions, tie-breaking and
/// the per-iteration trace.
///
/// During iteration `i`, `V'` is the set of vertices with position `> i`;
/// the vertex chosen at iteration `i` gets position `i` but is not yet in
/// `V'` until [`Engine::end_step`].
pub(crate) struct Engine<'a, A: Adjacency, L: LabelingStructure> {
    pub g: &'a A,
    pub l: &'a L,
    labels: Vec<L::Label>,
    position: Vec<usize>,
    seq: Vec<Vertex>,
    i: usize,
    choice: Choice,
    reference: L::Label,
    picker: Picker,
    trace: Vec<TraceStep<L::Label>>,
    fill: Option<Vec<BTreeSet<Vertex>>>,
    fill_edges: Vec<(Vertex, Vertex)>,
    hooks: bool,
    fast_paths: bool,
}

impl<'a, A: Adjacency, L: LabelingStructure> Engine<'a, A, L> {
    pub fn new(g: &'a A, l: &'a L, tb: &TieBreak, choice: Choice) -> Result<Self> {
        let n = g.vertex_count();
        let picker = match tb {
            TieBreak::LowestIndex => Picker::Lowest,
            TieBreak::SeededRandom(seed) => Picker::Random(Box::new(ChaCha8Rng::seed_from_u64(*seed))),
            TieBreak::Scripted(picks) => {
                let mut seen = vec![false; n];
                for &v in picks {
                    if v >= n {
                        return Err(Error::InvalidScript(format!("vertex index {v} out of range")));
                    }
                    if std::mem::replace(&mut seen[v], true) {
                        return Err(Error::InvalidScript(format!(
                            "vertex `{}` is scripted twice",
                            g.vertex_name(v)
                        )));
                    }
                }
                Picker::Script {
                    picks: picks.clone(),
                    next: 0,
                }
            }
        };
        Ok(Engine {
            g,
            l,
            labels: vec![l.initial(); n],
            position: vec![0; n],
            seq: vec![0; n],
            i: n,
            choice,
            reference: l.initial(),
            picker,
            trace: Vec::with_capacity(n),
            fill: None,
            fill_edges: Vec::new(),
            hooks: hooks::enabled() && n <= hooks::LABEL_HOOK_LIMIT,
            fast_paths: true,
        })
    }

    /// Records fill edges so that the label graph is `G + F`.
    pub fn with_fill(mut self) -> Self {
        self.fill = Some(vec![BTreeSet::new(); self.g.vertex_count()]);
        self
    }

    #[cfg(test)]
    pub fn without_fast_paths(mut self) -> Self {
        self.fast_paths = false;
        self
    }

    pub fn n(&self) -> usize {
        self.g.vertex_count()
    }

    /// The position being filled in the current iteration.
    pub fn i(&self) -> usize {
        self.i
    }

    pub fn label(&self, v: Vertex) -> &L::Label {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[L::Label] {
        &self.labels
    }

    /// The prev-max-label or prev-min-label.
    pub fn reference(&self) -> &L::Label {
        &self.reference
    }

    /// 1-based position, or 0 while unnumbered.
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    pub fn vertex_at(&self, p: usize) -> Vertex {
        self.seq[p - 1]
    }

    pub fn in_numbered(&self, v: Vertex) -> bool {
        self.position[v] > self.i
    }

    fn unnumbered(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n()).filter(move |&v| self.position[v] == 0)
    }

    /// Neighbors of `v` in the label graph (`G`, plus fill when recorded).
    pub fn label_graph_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.g.neighbors(v).collect();
        if let Some(fill) = &self.fill {
            out.extend(fill[v].iter().copied());
            out.sort_unstable();
        }
        out
    }

    /// Unnumbered vertices whose label is extremal, then filtered by the
    /// reference preference; ascending vertex order.
    pub fn candidates(&self) -> Vec<Vertex> {
        let dominating = self.choice.dominating();
        let mut cand: Vec<Vertex> = Vec::new();
        if self.l.is_total() {
            for v in self.unnumbered() {
                match cand.first() {
                    None => cand.push(v),
                    Some(&c) => {
                        let cmp = self.l.compare(&self.labels[v], &self.labels[c]);
                        if cmp == dominating {
                            cand.clear();
                            cand.push(v);
                        } else if cmp == LabelOrdering::Equal {
                            cand.push(v);
                        }
                    }
                }
            }
        } else {
            for v in self.unnumbered() {
                let beaten = cand
                    .iter()
                    .any(|&c| self.l.compare(&self.labels[c], &self.labels[v]) == dominating);
                if beaten {
                    continue;
                }
                cand.retain(|&c| self.l.compare(&self.labels[v], &self.labels[c]) != dominating);
                cand.push(v);
            }
            cand.sort_unstable();
        }
        let wanted = match self.choice {
            Choice::MaxPreferGreater => Some(LabelOrdering::Greater),
            Choice::MinPreferEqual => Some(LabelOrdering::Equal),
            _ => None,
        };
        if let Some(wanted) = wanted {
            let preferred: Vec<Vertex> = cand
                .iter()
                .copied()
                .filter(|&v| self.l.compare(&self.labels[v], &self.reference) == wanted)
                .collect();
            if !preferred.is_empty() {
                return preferred;
            }
        }
        cand
    }

    /// Chooses `x_i` and assigns it position `i`.
    pub fn choose(&mut self) -> Result<Vertex> {
        assert!(self.i > 0, "all vertices are numbered");
        if self.hooks {
            self.check_label_order();
        }
        let cand = self.candidates();
        let x = match &mut self.picker {
            Picker::Lowest => cand[0],
            Picker::Random(rng) => *cand.choose(rng.as_mut()).expect("nonempty candidates"),
            Picker::Script { picks, next } => match picks.get(*next) {
                None => cand[0],
                Some(&v) => {
                    *next += 1;
                    if !cand.contains(&v) {
                        return Err(Error::ScriptConflict {
                            position: self.i,
                            vertex: self.g.vertex_name(v).to_string(),
                        });
                    }
                    v
                }
            },
        };
        self.position[x] = self.i;
        self.seq[self.i - 1] = x;
        self.trace.push(TraceStep {
            i: self.i,
            vertex: x,
            label: self.labels[x].clone(),
            reference: self.choice.uses_reference().then(|| self.reference.clone()),
            increased: Vec::new(),
            fill: Vec::new(),
        });
        Ok(x)
    }

    /// Applies `Inc(·, i)` to each vertex of `ys`.
    pub fn increase(&mut self, ys: &[Vertex]) {
        let i = self.i;
        for &y in ys {
            if self.hooks {
                let old = self.labels[y].clone();
                self.l.inc_mut(&mut self.labels[y], i);
                if !self.l.compare(&old, &self.labels[y]).is_le() {
                    hooks::record(
                        "monotonicity",
                        i,
                        format!(
                            "label of {} went from {} to {}",
                            self.g.vertex_name(y),
                            self.l.render(&old),
                            self.l.render(&self.labels[y])
                        ),
                    );
                }
            } else {
                self.l.inc_mut(&mut self.labels[y], i);
            }
        }
        if let Some(step) = self.trace.last_mut() {
            step.increased.extend_from_slice(ys);
        }
    }

    /// Unnumbered neighbors of `x` in `G`.
    pub fn unnumbered_neighbors(&self, x: Vertex) -> Vec<Vertex> {
        self.g.neighbors(x).filter(|&y| self.position[y] == 0).collect()
    }

    /// The set `Y` of the path rule: unnumbered `y ≠ x` joined to `x` by a
    /// path in `G(V ∖ V')` whose internal vertices have labels `≺ label(y)`.
    pub fn path_targets(&self, x: Vertex) -> Vec<Vertex> {
        if self.l.is_total() && self.fast_paths {
            self.path_targets_total(x)
        } else {
            self.path_targets_generic(x)
        }
    }

    fn path_targets_generic(&self, x: Vertex) -> Vec<Vertex> {
        let n = self.n();
        let mut out = Vec::new();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        for y in self.unnumbered().filter(|&y| y != x) {
            if self.g.is_adjacent(x, y) {
                out.push(y);
                continue;
            }
            seen.iter_mut().for_each(|s| *s = false);
            seen[x] = true;
            stack.clear();
            stack.push(x);
            let mut found = false;
            'search: while let Some(z) = stack.pop() {
                for w in self.g.neighbors(z) {
                    if w == y {
                        if z != x {
                            found = true;
                            break 'search;
                        }
                        continue;
                    }
                    if self.position[w] == 0 && !seen[w] && self.l.less(&self.labels[w], &self.labels[y]) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if found {
                out.push(y);
            }
        }
        out
    }

    /// Path rule for total orders: targets are processed by increasing
    /// label class while the component of `x` through strictly smaller
    /// labels grows monotonically.
    fn path_targets_total(&self, x: Vertex) -> Vec<Vertex> {
        let n = self.n();
        let mut order: Vec<Vertex> = self.unnumbered().filter(|&y| y != x).collect();
        let cmp = |a: &Vertex, b: &Vertex| match self.l.compare(&self.labels[*a], &self.labels[*b]) {
            LabelOrdering::Less => std::cmp::Ordering::Less,
            LabelOrdering::Greater => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        };
        order.sort_by(|a, b| cmp(a, b).then(a.cmp(b)));
        let mut in_comp = vec![false; n];
        let mut allowed = vec![false; n];
        in_comp[x] = true;
        let mut out = Vec::new();
        let mut start = 0;
        while start < order.len() {
            let mut end = start + 1;
            while end < order.len() && cmp(&order[start], &order[end]) == std::cmp::Ordering::Equal {
                end += 1;
            }
            let class = &order[start..end];
            let touching: Vec<bool> = class.iter().map(|&y| self.g.neighbors(y).any(|w| in_comp[w])).collect();
            for (&y, &t) in class.iter().zip(&touching) {
                if t {
                    out.push(y);
                }
            }
            for &y in class {
                allowed[y] = true;
            }
            let mut stack: Vec<Vertex> = class
                .iter()
                .zip(&touching)
                .filter(|&(_, &t)| t)
                .map(|(&y, _)| y)
                .collect();
            for &y in &stack {
                in_comp[y] = true;
            }
            while let Some(z) = stack.pop() {
                for w in self.g.neighbors(z) {
                    if allowed[w] && !in_comp[w] {
                        in_comp[w] = true;
                        stack.push(w);
                    }
                }
            }
            start = end;
        }
        out.sort_unstable();
        out
    }

    /// Adds `xy` to the fill overlay for each `y` of `ys` not adjacent to
    /// `x` in `G`.
    pub fn record_fill(&mut self, x: Vertex, ys: &[Vertex]) {
        let Some(fill) = self.fill.as_mut() else {
            return;
        };
        let mut added = Vec::new();
        for &y in ys {
            if !self.g.is_adjacent(x, y) && fill[x].insert(y) {
                fill[y].insert(x);
                added.push((x.min(y), x.max(y)));
            }
        }
        self.fill_edges.extend_from_slice(&added);
        if let Some(step) = self.trace.last_mut() {
            step.fill.extend(added);
        }
    }

    /// `N_H(x) ∩ V'` in the label graph.
    pub fn numbered_label_neighbors(&self, x: Vertex) -> Vec<Vertex> {
        self.label_graph_neighbors(x)
            .into_iter()
            .filter(|&y| self.in_numbered(y))
            .collect()
    }

    /// Closes iteration `i`: `x_i` joins `V'`. The prev-max-label follows
    /// every choice; the prev-min-label moves only through
    /// [`Engine::set_reference`].
    pub fn end_step(&mut self, x: Vertex) {
        if self.choice == Choice::MaxPreferGreater {
            self.reference = self.labels[x].clone();
        }
        self.i -= 1;
    }

    pub fn set_reference(&mut self, label: L::Label) {
        self.reference = label;
    }

    pub fn fill_edges(&self) -> &[(Vertex, Vertex)] {
        &self.fill_edges
    }

    pub fn finish(self) -> (Ordering, Vec<TraceStep<L::Label>>) {
        let ordering = Ordering::from_sequence(self.seq).expect("every vertex numbered once");
        (ordering, self.trace)
    }

    /// Label consistency and the neighborhood-inclusion rule at the start of
    /// the current iteration.
    fn check_label_order(&self) {
        let i = self.i;
        let open: Vec<Vertex> = self.unnumbered().collect();
        let sets: Vec<BTreeSet<usize>> = open
            .iter()
            .map(|&y| {
                self.label_graph_neighbors(y)
                    .into_iter()
                    .filter(|&z| self.position[z] > i)
                    .map(|z| self.position[z])
                    .collect()
            })
            .collect();
        for (k, &y) in open.iter().enumerate() {
            let elems: Vec<usize> = sets[k].iter().copied().collect();
            let expect = lab(self.l, &elems);
            if self.l.compare(&expect, &self.labels[y]) != LabelOrdering::Equal {
                hooks::record(
                    "label-consistency",
                    i,
                    format!(
                        "label of {} is {} but its numbered neighborhood gives {}",
                        self.g.vertex_name(y),
                        self.l.render(&self.labels[y]),
                        self.l.render(&expect)
                    ),
                );
            }
        }
        for (a, &y) in open.iter().enumerate() {
            for (b, &z) in open.iter().enumerate() {
                if a == b {
                    continue;
                }
                let (sy, sz) = (&sets[a], &sets[b]);
                let cmp = self.l.compare(&self.labels[y], &self.labels[z]);
                let bad = if sy == sz {
                    cmp != LabelOrdering::Equal
                } else if sy.is_subset(sz) {
                    cmp != LabelOrdering::Less
                } else {
                    false
                };
                if bad {
                    hooks::record(
                        "label-order",
                        i,
                        format!(
                            "numbered neighborhoods of {} and {} are nested but labels compare {:?}",
                            self.g.vertex_name(y),
                            self.g.vertex_name(z),
                            cmp
                        ),
                    );
                }
            }
        }
    }
}
