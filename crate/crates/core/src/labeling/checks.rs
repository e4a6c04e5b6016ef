//! Exhaustive verification of labeling-structure properties on `[1, n_max]`.
//!
//! Subsets are encoded as bit masks (element `k` is bit `k - 1`) and visited
//! in increasing numeric order; the reported witness is the first one in the
//! order `(n, i, I, I')`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{lab, Known, LabelOrdering, LabelingStructure};
use crate::error::{Error, Result};

/// Largest `n_max` accepted by the checks.
pub const CHECK_LIMIT: usize = 12;

/// Bound used for structures whose properties are not known in advance.
pub const DEFAULT_CHECK_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Ic,
    Dcl,
    ComplementReversing,
}

impl Property {
    pub fn token(self) -> &'static str {
        match self {
            Property::Ic => "ic",
            Property::Dcl => "dcl",
            Property::ComplementReversing => "complement-reversing",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ic" => Ok(Property::Ic),
            "dcl" => Ok(Property::Dcl),
            "complement-reversing" => Ok(Property::ComplementReversing),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown property `{other}` (expected ic, dcl or complement-reversing)"),
            }),
        }
    }
}

/// A counterexample to one of the quantified properties.
///
/// `left` and `right` are the rendered labels whose comparison gave
/// `comparison`:
/// - IC: `lab(I)` vs `lab(I')`, expected Less.
/// - DCL: `lab(I')` vs `lab(I ∪ {i+1})`, found Less although `I ≠ I'`.
/// - complement-reversing: `lab([i,n]∖I')` vs `lab([i,n]∖I)`, expected Less or Equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyWitness {
    pub property: Property,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(rename = "I")]
    pub set: Vec<usize>,
    #[serde(rename = "I_prime")]
    pub other: Vec<usize>,
    pub left: String,
    pub right: String,
    pub comparison: LabelOrdering,
}

impl PropertyWitness {
    /// Recomputes the labels through `lab` and reports whether the
    /// violation is reproduced.
    pub fn replay<L: LabelingStructure>(&self, l: &L) -> bool {
        match self.property {
            Property::Ic => {
                let strict = self.set.len() < self.other.len() && self.set.iter().all(|k| self.other.contains(k));
                strict && !l.less(&lab(l, &self.set), &lab(l, &self.other))
            }
            Property::Dcl => {
                let Some(i) = self.i else { return false };
                let mut with_next = self.set.clone();
                with_next.push(i + 1);
                self.set != self.other && l.less(&lab(l, &self.other), &lab(l, &with_next))
            }
            Property::ComplementReversing => {
                let Some(i) = self.i else { return false };
                let universe: Vec<usize> = (i..=self.n).collect();
                let minus =
                    |s: &[usize]| -> Vec<usize> { universe.iter().copied().filter(|k| !s.contains(k)).collect() };
                let premise = l.compare(&lab(l, &self.set), &lab(l, &self.other)).is_le();
                let conclusion = l
                    .compare(&lab(l, &minus(&self.other)), &lab(l, &minus(&self.set)))
                    .is_le();
                premise && !conclusion
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: Property,
    pub bound: usize,
    pub result: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PropertyWitness>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.result == Verdict::Pass
    }

    fn from_witness(property: Property, bound: usize, witness: Option<PropertyWitness>) -> Self {
        PropertyReport {
            property,
            bound,
            result: if witness.is_some() {
                Verdict::Fail
            } else {
                Verdict::Pass
            },
            witness,
        }
    }
}

fn elements(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| b as usize + 1)
        .collect()
}

/// Mask of the interval `[lo, hi]`; empty when `lo > hi`.
fn interval(lo: usize, hi: usize) -> u32 {
    if lo > hi {
        return 0;
    }
    let upto_hi = (1u32 << hi) - 1;
    let below_lo = (1u32 << (lo - 1)) - 1;
    upto_hi & !below_lo
}

/// Submasks of `universe` in increasing numeric order.
fn submasks(universe: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == universe {
            None
        } else {
            Some(((cur | !universe).wrapping_add(1)) & universe)
        };
        Some(cur)
    })
}

struct Table<L: LabelingStructure> {
    labels: Vec<L::Label>,
}

impl<L: LabelingStructure> Table<L> {
    fn new(l: &L, n_max: usize) -> Self {
        let labels = (0u32..1 << n_max).map(|m| lab(l, &elements(m))).collect();
        Table { labels }
    }

    fn get(&self, mask: u32) -> &L::Label {
        &self.labels[mask as usize]
    }
}

fn check_bound(n_max: usize) -> Result<()> {
    if n_max > CHECK_LIMIT {
        return Err(Error::BoundTooLarge {
            n_max,
            limit: CHECK_LIMIT,
        });
    }
    Ok(())
}

/// `I ⊂ I' ⊆ [1, n_max]` implies `lab(I) ≺ lab(I')`.
pub fn check_ic<L: LabelingStructure>(l: &L, n_max: usize) -> Result<PropertyReport> {
    check_bound(n_max)?;
    let table = Table::new(l, n_max);
    let witness = (1..=n_max).find_map(|n| {
        let universe = interval(1, n);
        let top = 1u32 << (n - 1);
        submasks(universe).find_map(|set| {
            submasks(universe & !set)
                .filter(|&extra| extra != 0 && (set | extra) & top != 0)
                .find_map(|extra| {
                    let other = set | extra;
                    let cmp = l.compare(table.get(set), table.get(other));
                    (cmp != LabelOrdering::Less).then(|| PropertyWitness {
                        property: Property::Ic,
                        n,
                        i: None,
                        set: elements(set),
                        other: elements(other),
                        left: l.render(table.get(set)),
                        right: l.render(table.get(other)),
                        comparison: cmp,
                    })
                })
        })
    });
    Ok(PropertyReport::from_witness(Property::Ic, n_max, witness))
}

/// For `1 ≤ i < n ≤ n_max` and `I ⊆ I' ⊆ [i+2, n]`:
/// `lab(I') ≺ lab(I ∪ {i+1})` implies `I = I'`.
pub fn check_dcl<L: LabelingStructure>(l: &L, n_max: usize) -> Result<PropertyReport> {
    check_bound(n_max)?;
    let table = Table::new(l, n_max);
    let witness = (2..=n_max).find_map(|n| {
        (1..n).find_map(|i| {
            let universe = interval(i + 2, n);
            let next = 1u32 << i;
            submasks(universe).find_map(|set| {
                submasks(universe & !set).filter(|&extra| extra != 0).find_map(|extra| {
                    let other = set | extra;
                    let cmp = l.compare(table.get(other), table.get(set | next));
                    (cmp == LabelOrdering::Less).then(|| PropertyWitness {
                        property: Property::Dcl,
                        n,
                        i: Some(i),
                        set: elements(set),
                        other: elements(other),
                        left: l.render(table.get(other)),
                        right: l.render(table.get(set | next)),
                        comparison: cmp,
                    })
                })
            })
        })
    });
    Ok(PropertyReport::from_witness(Property::Dcl, n_max, witness))
}

/// For `1 ≤ i ≤ n ≤ n_max` and `I, I' ⊆ [i, n]`: `lab(I) ⪯ lab(I')` implies
/// `lab([i,n]∖I') ⪯ lab([i,n]∖I)`.
pub fn check_complement_reversing<L: LabelingStructure>(l: &L, n_max: usize) -> Result<PropertyReport> {
    check_bound(n_max)?;
    let table = Table::new(l, n_max);
    let witness = (1..=n_max).find_map(|n| {
        (1..=n).find_map(|i| {
            let universe = interval(i, n);
            submasks(universe).find_map(|set| {
                submasks(universe).find_map(|other| {
                    if !l.compare(table.get(set), table.get(other)).is_le() {
                        return None;
                    }
                    let (left, right) = (universe & !other, universe & !set);
                    let cmp = l.compare(table.get(left), table.get(right));
                    (!cmp.is_le()).then(|| PropertyWitness {
                        property: Property::ComplementReversing,
                        n,
                        i: Some(i),
                        set: elements(set),
                        other: elements(other),
                        left: l.render(table.get(left)),
                        right: l.render(table.get(right)),
                        comparison: cmp,
                    })
                })
            })
        })
    });
    Ok(PropertyReport::from_witness(
        Property::ComplementReversing,
        n_max,
        witness,
    ))
}

pub fn check_property<L: LabelingStructure>(l: &L, property: Property, n_max: usize) -> Result<PropertyReport> {
    match property {
        Property::Ic => check_ic(l, n_max),
        Property::Dcl => check_dcl(l, n_max),
        Property::ComplementReversing => check_complement_reversing(l, n_max),
    }
}

fn ensure<L: LabelingStructure>(
    l: &L,
    known: Known,
    property: Property,
    bound: usize,
    fail: fn(String) -> Error,
) -> Result<()> {
    match known {
        Known::Yes => Ok(()),
        Known::No => Err(fail(l.name())),
        Known::Unknown => {
            let report = check_property(l, property, bound)?;
            if report.passed() {
                log::info!("{} passes {property} up to n = {bound}", l.name());
                Ok(())
            } else {
                Err(fail(l.name()))
            }
        }
    }
}

/// Accepts `l` if IC is known or verified up to `bound`.
pub fn ensure_ic<L: LabelingStructure>(l: &L, bound: usize) -> Result<()> {
    ensure(l, l.ic_known(), Property::Ic, bound, Error::InclusionConditionViolated)
}

pub fn ensure_dcl<L: LabelingStructure>(l: &L, bound: usize) -> Result<()> {
    ensure(l, l.dcl_known(), Property::Dcl, bound, Error::NonDclStructure)
}

pub fn ensure_complement_reversing<L: LabelingStructure>(l: &L, bound: usize) -> Result<()> {
    ensure(
        l,
        l.complement_reversing_known(),
        Property::ComplementReversing,
        bound,
        Error::NotComplementReversing,
    )
}
