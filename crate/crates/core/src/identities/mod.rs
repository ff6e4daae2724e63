//! Verifiers for the generating-function identities.
//!
//! Every verifier builds two sides independently: one by enumerating the
//! group and tallying statistics, the other from a closed form, and compares
//! them coefficient by coefficient with [`TruncatedSeries::equal_on`]. All
//! series are kept modulo the monomial ideal given by the caps, which is
//! compatible with products and with `{·}_M`, so the compared region is
//! the full cap box and no guard band is needed.
//!
//! A report holds one or more named checks. Gating checks decide the
//! outcome; informational checks are carried along for the reader.

mod bivariate;
mod carlitz;
mod character;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exec::{Executor, Sequential};
use crate::group::{GroupDescriptor, ProjectiveElement, DEFAULT_BUDGET};
use crate::series::{IntSeries, IntegerRing, Mismatch, Variables};

pub use bivariate::{HilbertCaps, SixStatsCaps};
pub use carlitz::{CarlitzCaps, FdesCaps};

/// Result of one comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "SCREAMING_SNAKE_CASE")
)]
pub enum Outcome {
    Match,
    Mismatch,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Match => "MATCH",
            Outcome::Mismatch => "MISMATCH",
        })
    }
}

/// First differing coefficient, rendered as text.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FirstMismatch {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

impl<E: fmt::Display> From<Mismatch<E>> for FirstMismatch {
    fn from(m: Mismatch<E>) -> Self {
        Self {
            monomial: m.monomial.to_string(),
            lhs: m.lhs.to_string(),
            rhs: m.rhs.to_string(),
        }
    }
}

/// One named comparison inside a report.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "camelCase")
)]
pub struct Check {
    pub name: String,
    pub gating: bool,
    pub outcome: Outcome,
    pub first_mismatch: Option<FirstMismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "camelCase")
)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, i64>,
    /// Per-variable exponent bounds of the compared box.
    pub region: BTreeMap<String, u32>,
    pub outcome: Outcome,
    /// First mismatch of the first failing gating check.
    pub first_mismatch: Option<FirstMismatch>,
    /// Number of group elements enumerated.
    pub count: u64,
    /// Wall-clock time, filled in by callers that have a clock.
    pub millis: Option<u64>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn is_match(&self) -> bool {
        self.outcome == Outcome::Match
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub(crate) struct ReportBuilder {
    report: VerificationReport,
}

impl ReportBuilder {
    pub(crate) fn new(identity: &str) -> Self {
        Self {
            report: VerificationReport {
                identity: identity.to_string(),
                params: BTreeMap::new(),
                region: BTreeMap::new(),
                outcome: Outcome::Match,
                first_mismatch: None,
                count: 0,
                millis: None,
                checks: Vec::new(),
                notes: Vec::new(),
            },
        }
    }

    pub(crate) fn param(mut self, name: &str, v: impl Into<i64>) -> Self {
        self.report.params.insert(name.to_string(), v.into());
        self
    }

    pub(crate) fn group(self, g: &GroupDescriptor) -> Self {
        self.param("r", g.r())
            .param("p", g.p())
            .param("s", g.s())
            .param("n", g.n())
    }

    pub(crate) fn region(&mut self, vars: &Variables, bounds: &[u32]) {
        for (v, &b) in vars.names().iter().zip(bounds) {
            self.report.region.insert(v.clone(), b);
        }
    }

    pub(crate) fn check<M: Into<FirstMismatch>>(&mut self, name: &str, gating: bool, found: Option<M>) {
        let first_mismatch = found.map(Into::into);
        self.report.checks.push(Check {
            name: name.to_string(),
            gating,
            outcome: if first_mismatch.is_some() {
                Outcome::Mismatch
            } else {
                Outcome::Match
            },
            first_mismatch,
        });
    }

    pub(crate) fn note(&mut self, text: String) {
        self.report.notes.push(text);
    }

    pub(crate) fn count(&mut self, n: u64) {
        self.report.count += n;
    }

    pub(crate) fn finish(mut self) -> VerificationReport {
        let failing = self
            .report
            .checks
            .iter()
            .find(|c| c.gating && c.outcome == Outcome::Mismatch);
        if let Some(c) = failing {
            self.report.outcome = Outcome::Mismatch;
            self.report.first_mismatch = c.first_mismatch.clone();
        }
        self.report
    }
}

/// Entry point for all verifiers.
#[derive(Clone, Debug)]
pub struct Verifier<E = Sequential> {
    exec: E,
    budget: u64,
}

impl Default for Verifier<Sequential> {
    fn default() -> Self {
        Self::new()
    }
}

impl Verifier<Sequential> {
    pub fn new() -> Self {
        Self::with_executor(Sequential)
    }
}

impl<E: Executor> Verifier<E> {
    pub fn with_executor(exec: E) -> Self {
        Self {
            exec,
            budget: DEFAULT_BUDGET,
        }
    }

    /// Largest group order that will be enumerated.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn ensure_enumerable(&self, group: &GroupDescriptor) -> Result<()> {
        let order = group.order();
        if order > self.budget as u128 {
            return Err(Error::BudgetExceeded {
                order,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Sums `weight` over elements grouped by `key`; also returns the
    /// number of elements visited.
    fn tally<K, F>(&self, group: GroupDescriptor, key: F) -> Result<(BTreeMap<K, i64>, u64)>
    where
        K: Ord + Send,
        F: Fn(&ProjectiveElement) -> Option<(K, i64)> + Sync + Send,
    {
        self.ensure_enumerable(&group)?;
        Ok(self.exec.fold_elements(
            group,
            || (BTreeMap::new(), 0u64),
            |acc: &mut (BTreeMap<K, i64>, u64), g| {
                acc.1 += 1;
                if let Some((k, w)) = key(g) {
                    *acc.0.entry(k).or_insert(0) += w;
                }
            },
            |mut a, b| {
                for (k, w) in b.0 {
                    *a.0.entry(k).or_insert(0) += w;
                }
                a.1 += b.1;
                a
            },
        ))
    }
}

/// Zero series over `ℤ` in the given variables.
pub(crate) fn int_space(names: &[&str], caps: &[u32]) -> IntSeries {
    IntSeries::zero(IntegerRing, Variables::new(names), caps)
}

/// `c · x^exps` in the space of `like`.
pub(crate) fn term(like: &IntSeries, c: i64, exps: &[u32]) -> IntSeries {
    like.term_like(BigInt::from(c), exps)
}

/// `[n]_{c·x^exps}` in the space of `like`.
pub(crate) fn bracket(like: &IntSeries, n: u32, c: i64, exps: &[u32]) -> IntSeries {
    IntSeries::q_bracket(n, &term(like, c, exps)).expect("single-term base")
}

/// Builds `Σ weight · x^{exps(key)}` from a tally.
pub(crate) fn series_from<K>(like: &IntSeries, tally: &BTreeMap<K, i64>, exps: impl Fn(&K) -> Vec<u32>) -> IntSeries {
    let mut out = like.zero_like();
    for (k, &w) in tally {
        if w != 0 {
            out = out.add(&term(like, w, &exps(k))).expect("same space");
        }
    }
    out
}

/// `d = sp / gcd(sp, r)`.
pub(crate) fn lattice_step(r: u32, p: u32, s: u32) -> u32 {
    let sp = s * p;
    sp / num_integer::gcd(sp, r)
}

pub(crate) fn require_positive_caps(caps: &[(&str, u32)]) -> Result<()> {
    for &(name, c) in caps {
        if c == 0 {
            return Err(Error::Region(alloc::format!("cap for {name} must be positive")));
        }
    }
    Ok(())
}
