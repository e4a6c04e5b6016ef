use std::collections::BTreeSet;

use super::{Known, LabelOrdering, LabelingStructure};

/// Maximum cardinality search: labels count numbered neighbors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Mcs;

/// Lexicographic breadth-first search: `Inc` appends, usual lexicographic order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LexBfs;

/// Lexicographic depth-first search: `Inc` prepends, lexicographic order on
/// the reversed integer order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LexDfs;

/// Maximal neighborhood search: labels are sets ordered by inclusion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Mns;

/// The dual of a structure: same `l0` and `Inc`, reversed order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rev<L>(pub L);

pub fn mcs() -> Mcs {
    Mcs
}

pub fn lexbfs() -> LexBfs {
    LexBfs
}

pub fn lexdfs() -> LexDfs {
    LexDfs
}

pub fn mns() -> Mns {
    Mns
}

pub fn rev<L: LabelingStructure>(l: L) -> Rev<L> {
    Rev(l)
}

fn render_list(items: impl Iterator<Item = usize>, open: char, close: char) -> String {
    let body: Vec<String> = items.map(|i| i.to_string()).collect();
    format!("{open}{}{close}", body.join(","))
}

impl LabelingStructure for Mcs {
    type Label = usize;

    fn name(&self) -> String {
        "mcs".into()
    }
    fn initial(&self) -> usize {
        0
    }
    fn inc(&self, l: &usize, _i: usize) -> usize {
        l + 1
    }
    fn compare(&self, a: &usize, b: &usize) -> LabelOrdering {
        LabelOrdering::from_total(a.cmp(b))
    }
    fn is_total(&self) -> bool {
        true
    }
    fn ic_known(&self) -> Known {
        Known::Yes
    }
    fn dcl_known(&self) -> Known {
        Known::Yes
    }
    fn complement_reversing_known(&self) -> Known {
        Known::Yes
    }
    fn render(&self, l: &usize) -> String {
        l.to_string()
    }
}

impl LabelingStructure for LexBfs {
    type Label = Vec<usize>;

    fn name(&self) -> String {
        "lexbfs".into()
    }
    fn initial(&self) -> Vec<usize> {
        Vec::new()
    }
    fn inc(&self, l: &Vec<usize>, i: usize) -> Vec<usize> {
        let mut next = l.clone();
        next.push(i);
        next
    }
    fn inc_mut(&self, l: &mut Vec<usize>, i: usize) {
        l.push(i);
    }
    fn compare(&self, a: &Vec<usize>, b: &Vec<usize>) -> LabelOrdering {
        LabelOrdering::from_total(a.cmp(b))
    }
    fn is_total(&self) -> bool {
        true
    }
    fn ic_known(&self) -> Known {
        Known::Yes
    }
    fn dcl_known(&self) -> Known {
        Known::Yes
    }
    fn complement_reversing_known(&self) -> Known {
        Known::Yes
    }
    fn render(&self, l: &Vec<usize>) -> String {
        render_list(l.iter().copied(), '(', ')')
    }
}

impl LabelingStructure for LexDfs {
    type Label = Vec<usize>;

    fn name(&self) -> String {
        "lexdfs".into()
    }
    fn initial(&self) -> Vec<usize> {
        Vec::new()
    }
    fn inc(&self, l: &Vec<usize>, i: usize) -> Vec<usize> {
        let mut next = Vec::with_capacity(l.len() + 1);
        next.push(i);
        next.extend_from_slice(l);
        next
    }
    fn inc_mut(&self, l: &mut Vec<usize>, i: usize) {
        l.insert(0, i);
    }
    fn compare(&self, a: &Vec<usize>, b: &Vec<usize>) -> LabelOrdering {
        for (x, y) in a.iter().zip(b) {
            if x != y {
                return LabelOrdering::from_total(y.cmp(x));
            }
        }
        LabelOrdering::from_total(a.len().cmp(&b.len()))
    }
    fn is_total(&self) -> bool {
        true
    }
    fn ic_known(&self) -> Known {
        Known::Yes
    }
    fn dcl_known(&self) -> Known {
        Known::No
    }
    fn complement_reversing_known(&self) -> Known {
        Known::Yes
    }
    fn render(&self, l: &Vec<usize>) -> String {
        render_list(l.iter().copied(), '(', ')')
    }
}

impl LabelingStructure for Mns {
    type Label = BTreeSet<usize>;

    fn name(&self) -> String {
        "mns".into()
    }
    fn initial(&self) -> BTreeSet<usize> {
        BTreeSet::new()
    }
    fn inc(&self, l: &BTreeSet<usize>, i: usize) -> BTreeSet<usize> {
        let mut next = l.clone();
        next.insert(i);
        next
    }
    fn inc_mut(&self, l: &mut BTreeSet<usize>, i: usize) {
        l.insert(i);
    }
    fn compare(&self, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> LabelOrdering {
        match (a.is_subset(b), b.is_subset(a)) {
            (true, true) => LabelOrdering::Equal,
            (true, false) => LabelOrdering::Less,
            (false, true) => LabelOrdering::Greater,
            (false, false) => LabelOrdering::Incomparable,
        }
    }
    fn is_total(&self) -> bool {
        false
    }
    fn ic_known(&self) -> Known {
        Known::Yes
    }
    fn dcl_known(&self) -> Known {
        Known::Yes
    }
    fn complement_reversing_known(&self) -> Known {
        Known::Yes
    }
    fn render(&self, l: &BTreeSet<usize>) -> String {
        render_list(l.iter().copied(), '{', '}')
    }
}

impl<L: LabelingStructure> LabelingStructure for Rev<L> {
    type Label = L::Label;

    fn name(&self) -> String {
        format!("rev({})", self.0.name())
    }
    fn initial(&self) -> L::Label {
        self.0.initial()
    }
    fn inc(&self, l: &L::Label, i: usize) -> L::Label {
        self.0.inc(l, i)
    }
    fn inc_mut(&self, l: &mut L::Label, i: usize) {
        self.0.inc_mut(l, i)
    }
    fn compare(&self, a: &L::Label, b: &L::Label) -> LabelOrdering {
        self.0.compare(a, b).reverse()
    }
    fn is_total(&self) -> bool {
        self.0.is_total()
    }
    fn ic_known(&self) -> Known {
        match self.0.ic_known() {
            Known::Yes => Known::No,
            _ => Known::Unknown,
        }
    }
    fn render(&self, l: &L::Label) -> String {
        self.0.render(l)
    }
}
