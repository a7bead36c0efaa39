//! The acceptance suite: one named check per criterion, shared by the CLI
//! (`coxeter verify`) and the integration tests.
//!
//! Each check runs a batch of exact comparisons and collects every mismatch
//! instead of stopping at the first one. A panic inside a check is caught and
//! reported as a failure of that check.

mod checks;

pub use checks::irreducible_up_to_rank_8;

use std::fmt::{self, Debug, Display};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::Instant;

use serde::Serialize;

use crate::coxgroup::{CoxeterType, RootSystem, DEFAULT_LIMIT};
use crate::involutions::HPolynomial;

/// `Core` keeps the whole suite within about a minute; `Heavy` adds the full
/// E8 cube census and the exhaustive E6 orthogonal model over F₃.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    Core,
    Heavy,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub suite: Suite,
    /// Enumeration threshold for whole-group enumeration.
    pub limit: u128,
    /// Replace a simple reflection of E6 by the identity before the order
    /// check, to confirm that a broken root table is caught.
    pub corrupt_root_table: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { suite: Suite::Core, limit: DEFAULT_LIMIT, corrupt_root_table: false }
    }
}

/// Identifier and name of every check, in report order.
pub const CHECKS: [(usize, &str); 12] = [
    (1, "orders-and-reflections"),
    (2, "h-polynomials"),
    (3, "h-polynomial-shape"),
    (4, "cube-census"),
    (5, "phi-groups"),
    (6, "conjugacy"),
    (7, "adjoint-involutions"),
    (8, "characteristic-degrees"),
    (9, "centralizers"),
    (10, "modp-models"),
    (11, "quaternion-constructions"),
    (12, "h4-cross-validation"),
];

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub comparisons: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub millis: u64,
}

impl Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>2} {} ({} comparisons, {} ms)", self.id, self.name, self.comparisons, self.millis)?;
        for msg in &self.failures {
            write!(f, "\n       failure: {msg}")?;
        }
        Ok(())
    }
}

/// Accumulates comparisons for one check.
#[derive(Debug, Default)]
pub(crate) struct Checker {
    comparisons: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checker {
    pub(crate) fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.comparisons += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub(crate) fn eq<T: PartialEq + Debug>(&mut self, what: impl Display, got: T, want: T) {
        self.check(got == want, || format!("{what}: got {got:?}, expected {want:?}"));
    }

    /// Unwraps `r`, recording an error as a failure.
    pub(crate) fn ok<T, E: Display>(&mut self, what: impl Display, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.comparisons += 1;
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }

    pub(crate) fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub(crate) fn build(&mut self, ty: &CoxeterType) -> Option<RootSystem> {
        self.ok(format!("building {ty}"), RootSystem::build(ty))
    }
}

/// One enumerated h-polynomial next to its closed form.
#[derive(Debug, Clone)]
pub(crate) struct HRow {
    pub ty: CoxeterType,
    pub enumerated: Result<HPolynomial, String>,
    pub formula: HPolynomial,
}

/// Runs checks, caching data shared between them.
pub struct Verifier {
    opts: Options,
    hrows: OnceLock<Vec<HRow>>,
}

impl Verifier {
    pub fn new(opts: Options) -> Verifier {
        Verifier { opts, hrows: OnceLock::new() }
    }

    pub fn options(&self) -> &Options {
        &self.opts
    }

    pub(crate) fn h_rows(&self) -> &[HRow] {
        self.hrows.get_or_init(|| checks::compute_h_rows(self.opts.limit))
    }

    /// Runs the check with identifier `id` (1 to 12).
    pub fn run(&self, id: usize) -> CheckResult {
        let (_, name) = CHECKS.iter().copied().find(|&(i, _)| i == id).expect("check id in 1..=12");
        let start = Instant::now();
        let mut c = Checker::default();
        let outcome = catch_unwind(AssertUnwindSafe(|| checks::run(self, id, &mut c)));
        if let Err(panic) = outcome {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            c.failures.push(format!("panicked: {msg}"));
        }
        CheckResult {
            id,
            name,
            passed: c.failures.is_empty(),
            comparisons: c.comparisons,
            failures: c.failures,
            notes: c.notes,
            millis: start.elapsed().as_millis() as u64,
        }
    }

    pub fn run_all(&self) -> Vec<CheckResult> {
        CHECKS.iter().map(|&(id, _)| self.run(id)).collect()
    }
}

/// Looks up a check by number or name.
pub fn check_id(s: &str) -> Option<usize> {
    CHECKS.iter().find(|&&(id, name)| name == s || id.to_string() == s).map(|&(id, _)| id)
}
