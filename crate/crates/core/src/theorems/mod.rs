//! Executable verdicts: each check filters on its hypotheses, evaluates its
//! conclusion over every admissible instance of a group, and returns one
//! [`CheckReport`].
//!
//! All checks read from a [`GroupContext`], which computes the character
//! table, residue field and principal block of `G` once and caches
//! subgroup and quotient data on first use.

mod checks;
mod context;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

pub use checks::*;
pub use context::{Flags, GroupContext, QuotientData, SubgroupData};

/// Structured witness values. Serialized without tags, so a JSON
/// round-trip reproduces the value exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Text(String),
    List(Vec<Value>),
    Map(BTreeMap<String, Value>),
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

macro_rules! int_value {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(x: $t) -> Self {
                Value::Int(x as i64)
            }
        }
    )*};
}
int_value!(i64, u64, u32, usize);

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

impl From<Witness> for Value {
    fn from(w: Witness) -> Self {
        Value::Map(w.0)
    }
}

/// Ordered key/value witness.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Witness(pub BTreeMap<String, Value>);

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), v.into());
        self
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.0.insert(key.to_string(), v.into());
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.get(key)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub group_id: String,
    pub check_name: String,
    pub status: Status,
    pub witness: Witness,
}

impl CheckReport {
    pub fn new(ctx: &GroupContext, check: &str, status: Status, witness: Witness) -> Self {
        CheckReport { group_id: ctx.id().to_string(), check_name: check.to_string(), status, witness }
    }

    pub fn verdict(ctx: &GroupContext, check: &str, pass: bool, witness: Witness) -> Self {
        Self::new(ctx, check, if pass { Status::Pass } else { Status::Fail }, witness)
    }

    pub fn skipped(ctx: &GroupContext, check: &str, reason: impl Into<String>) -> Self {
        Self::new(ctx, check, Status::Skipped(reason.into()), Witness::new())
    }
}

/// Limits on the exhaustive sweeps over normal subgroups, characters and
/// Galois elements. Groups above `max_order` skip the sweeping checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBudget {
    pub max_order: u64,
}

impl Default for SweepBudget {
    fn default() -> Self {
        SweepBudget { max_order: 400 }
    }
}

/// Registered check names, in report column order.
pub const CHECK_NAMES: [&str; 12] = [
    "theorem_a",
    "theorem_b",
    "cyclic_sylow_count",
    "kernel_lemma",
    "relative_divisibility",
    "p_action_count",
    "alperin_dade",
    "invariant_constituent",
    "murai_domination",
    "simple_degree_spread",
    "almost_simple_iff",
    "k0_divisibility",
];

/// Canonical name for `name`, which may carry a `check_` prefix.
pub fn resolve_check(name: &str) -> Option<&'static str> {
    let bare = name.strip_prefix("check_").unwrap_or(name);
    CHECK_NAMES.iter().copied().find(|&c| c == bare)
}

/// Runs a registered check. Computation errors become failed reports that
/// carry the error text.
pub fn run_check(ctx: &GroupContext, name: &str, budget: &SweepBudget) -> CheckReport {
    let Some(name) = resolve_check(name) else {
        return CheckReport::new(ctx, name, Status::Fail, Witness::new().with("error", "unknown check"));
    };
    let result = match name {
        "theorem_a" => check_theorem_a(ctx),
        "theorem_b" => sweep_theorem_b(ctx, budget),
        "cyclic_sylow_count" => check_cyclic_sylow_count(ctx),
        "kernel_lemma" => check_kernel_lemma(ctx),
        "relative_divisibility" => sweep_relative_divisibility(ctx, budget),
        "p_action_count" => sweep_p_action_count(ctx, budget),
        "alperin_dade" => sweep_alperin_dade(ctx, budget),
        "invariant_constituent" => sweep_invariant_constituent(ctx, budget),
        "murai_domination" => sweep_murai_domination(ctx, budget),
        "simple_degree_spread" => check_simple_degree_spread(ctx),
        "almost_simple_iff" => check_almost_simple_iff(ctx),
        "k0_divisibility" => check_k0_divisibility(ctx),
        _ => unreachable!("resolve_check returns registered names"),
    };
    result.unwrap_or_else(|e| CheckReport::new(ctx, name, Status::Fail, Witness::new().with("error", e.to_string())))
}
