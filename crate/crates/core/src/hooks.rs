//! Runtime invariant assertions.
//!
//! When `CHORDALKIT_DEBUG=1` is set (or a [`force`] guard is alive on the
//! current thread) the algorithms check their loop invariants against the
//! oracles as they run. Violations are collected in a thread-local sink and
//! logged rather than aborting the run, so a caller can inspect them with
//! [`take_violations`].

use std::cell::{Cell, RefCell};
use std::sync::OnceLock;

/// Largest graph on which oracle-backed invariants (partial clique trees,
/// minimal separators of `H(V')`) are checked.
pub const ORACLE_HOOK_LIMIT: usize = 8;

/// Largest graph on which the quadratic label-order checks run.
pub const LABEL_HOOK_LIMIT: usize = 64;

thread_local! {
    static FORCED: Cell<usize> = const { Cell::new(0) };
    static SINK: RefCell<Vec<Violation>> = const { RefCell::new(Vec::new()) };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Name of the invariant, e.g. `"label-order"` or `"partial-tree"`.
    pub check: &'static str,
    /// Iteration (position being filled) at which it was detected.
    pub iteration: usize,
    pub message: String,
}

fn env_enabled() -> bool {
    static FLAG: OnceLock<bool> = OnceLock::new();
    *FLAG.get_or_init(|| std::env::var("CHORDALKIT_DEBUG").map(|v| v == "1").unwrap_or(false))
}

pub fn enabled() -> bool {
    FORCED.with(Cell::get) > 0 || env_enabled()
}

/// Enables the hooks on this thread until the guard is dropped.
#[must_use]
pub fn force() -> ForceGuard {
    FORCED.with(|f| f.set(f.get() + 1));
    ForceGuard { _private: () }
}

pub struct ForceGuard {
    _private: (),
}

impl Drop for ForceGuard {
    fn drop(&mut self) {
        FORCED.with(|f| f.set(f.get() - 1));
    }
}

pub fn record(check: &'static str, iteration: usize, message: String) {
    log::warn!("invariant {check} violated at iteration {iteration}: {message}");
    SINK.with(|s| {
        s.borrow_mut().push(Violation {
            check,
            iteration,
            message,
        })
    });
}

/// Drains the violations recorded on this thread.
pub fn take_violations() -> Vec<Violation> {
    SINK.with(|s| std::mem::take(&mut *s.borrow_mut()))
}
