//! Labeling structures `(L, ⪯, l0, Inc)` parameterizing maximal label search.

mod builtins;
mod checks;

use std::fmt::Debug;
use std::str::FromStr;

use serde::Serialize;

pub use builtins::{lexbfs, lexdfs, mcs, mns, rev, LexBfs, LexDfs, Mcs, Mns, Rev};
pub use checks::{
    check_complement_reversing, check_dcl, check_ic, check_property, ensure_complement_reversing, ensure_dcl,
    ensure_ic, Property, PropertyReport, PropertyWitness, CHECK_LIMIT, DEFAULT_CHECK_BOUND,
};

use crate::error::Error;

/// Outcome of comparing two labels under a partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LabelOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl LabelOrdering {
    pub fn reverse(self) -> LabelOrdering {
        match self {
            LabelOrdering::Less => LabelOrdering::Greater,
            LabelOrdering::Greater => LabelOrdering::Less,
            other => other,
        }
    }

    pub fn from_total(o: std::cmp::Ordering) -> LabelOrdering {
        match o {
            std::cmp::Ordering::Less => LabelOrdering::Less,
            std::cmp::Ordering::Equal => LabelOrdering::Equal,
            std::cmp::Ordering::Greater => LabelOrdering::Greater,
        }
    }

    /// `⪯`: Less or Equal.
    pub fn is_le(self) -> bool {
        matches!(self, LabelOrdering::Less | LabelOrdering::Equal)
    }
}

/// Tri-state knowledge about a universally quantified property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Known {
    Yes,
    No,
    Unknown,
}

/// The parameter of maximal label search.
///
/// `inc(l, i)` is applied with strictly decreasing `i` along a run, so
/// `lab(I)` folds the elements of `I` from largest to smallest.
///
/// Property flags default to [`Known::Unknown`]; unknown properties are
/// established by the bounded checks before a structure is used.
pub trait LabelingStructure {
    type Label: Clone + Eq + Debug;

    fn name(&self) -> String;

    fn initial(&self) -> Self::Label;

    fn inc(&self, l: &Self::Label, i: usize) -> Self::Label;

    fn inc_mut(&self, l: &mut Self::Label, i: usize) {
        *l = self.inc(l, i);
    }

    fn compare(&self, a: &Self::Label, b: &Self::Label) -> LabelOrdering;

    fn is_total(&self) -> bool;

    fn ic_known(&self) -> Known {
        Known::Unknown
    }

    fn dcl_known(&self) -> Known {
        Known::Unknown
    }

    fn complement_reversing_known(&self) -> Known {
        Known::Unknown
    }

    /// Human-readable label, used in traces and witness reports.
    fn render(&self, l: &Self::Label) -> String {
        format!("{l:?}")
    }

    fn less(&self, a: &Self::Label, b: &Self::Label) -> bool {
        self.compare(a, b) == LabelOrdering::Less
    }
}

impl<L: LabelingStructure + ?Sized> LabelingStructure for &L {
    type Label = L::Label;

    fn name(&self) -> String {
        (**self).name()
    }
    fn initial(&self) -> Self::Label {
        (**self).initial()
    }
    fn inc(&self, l: &Self::Label, i: usize) -> Self::Label {
        (**self).inc(l, i)
    }
    fn inc_mut(&self, l: &mut Self::Label, i: usize) {
        (**self).inc_mut(l, i)
    }
    fn compare(&self, a: &Self::Label, b: &Self::Label) -> LabelOrdering {
        (**self).compare(a, b)
    }
    fn is_total(&self) -> bool {
        (**self).is_total()
    }
    fn ic_known(&self) -> Known {
        (**self).ic_known()
    }
    fn dcl_known(&self) -> Known {
        (**self).dcl_known()
    }
    fn complement_reversing_known(&self) -> Known {
        (**self).complement_reversing_known()
    }
    fn render(&self, l: &Self::Label) -> String {
        (**self).render(l)
    }
}

/// `lab_L(I)`: folds `Inc` over `I` in decreasing order starting from `l0`.
pub fn lab<L: LabelingStructure>(l: &L, set: &[usize]) -> L::Label {
    let mut sorted = set.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.dedup();
    let mut label = l.initial();
    for i in sorted {
        l.inc_mut(&mut label, i);
    }
    label
}

/// The built-in structures by CLI token.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Mcs,
    LexBfs,
    LexDfs,
    Mns,
}

impl Builtin {
    pub const ALL: [Builtin; 4] = [Builtin::Mcs, Builtin::LexBfs, Builtin::LexDfs, Builtin::Mns];

    pub fn token(self) -> &'static str {
        match self {
            Builtin::Mcs => "mcs",
            Builtin::LexBfs => "lexbfs",
            Builtin::LexDfs => "lexdfs",
            Builtin::Mns => "mns",
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "mcs" => Ok(Builtin::Mcs),
            "lexbfs" => Ok(Builtin::LexBfs),
            "lexdfs" => Ok(Builtin::LexDfs),
            "mns" => Ok(Builtin::Mns),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown labeling structure `{other}` (expected mcs, lexbfs, lexdfs or mns)"),
            }),
        }
    }
}

impl std::fmt::Display for Builtin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Binds `$s` to the built-in structure value selected by `$b` and evaluates
/// `$body` once per arm, so generic code can be driven by a runtime token.
#[macro_export]
macro_rules! with_builtin {
    ($b:expr, $s:ident => $body:expr) => {
        match $b {
            $crate::labeling::Builtin::Mcs => {
                let $s = $crate::labeling::Mcs;
                $body
            }
            $crate::labeling::Builtin::LexBfs => {
                let $s = $crate::labeling::LexBfs;
                $body
            }
            $crate::labeling::Builtin::LexDfs => {
                let $s = $crate::labeling::LexDfs;
                $body
            }
            $crate::labeling::Builtin::Mns => {
                let $s = $crate::labeling::Mns;
                $body
            }
        }
    };
}
