//! A named, runnable suite of exact checks on the number-theoretic facts
//! behind the nonexistence arguments for α = π/12, π/9 and 2π/15.
//!
//! Each check records, item by item, the value it expected and the value
//! it computed. Nothing here uses a tolerance.

mod norms;
mod pi12;
mod reductions;
mod sigma;
mod simpletrig;

use serde::Serialize;

pub use norms::{verify_norm_table_15, verify_norm_table_9, verify_norm_tables, verify_prime_splitting_facts};
pub use pi12::{verify_area_pi12, verify_minpoly_pi12};
pub use reductions::{parse_printed_poly, reduction_system, verify_galois_reductions, verify_reduction_a_eq_alpha, verify_reduction_b_eq_beta, ReductionCase};
pub use sigma::verify_sigma_actions;
pub use simpletrig::{simpletrig_default_samples, verify_simpletrig, xi_ratio};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One compared value inside a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckItem {
    pub fn new(name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        CheckItem { name: name.into(), ok: expected == computed, expected, computed, note: None }
    }

    /// An item whose pass/fail is decided by the caller, e.g. when the
    /// comparison is an exact identity rather than string equality.
    pub fn with_ok(name: impl Into<String>, expected: impl ToString, computed: impl ToString, ok: bool) -> Self {
        CheckItem { name: name.into(), expected: expected.to_string(), computed: computed.to_string(), ok, note: None }
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.note = Some(s.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub id: String,
    pub status: Status,
    pub details: Vec<CheckItem>,
}

impl LemmaCheck {
    pub fn from_items(id: &str, details: Vec<CheckItem>) -> Self {
        let status = if details.iter().all(|i| i.ok) { Status::Pass } else { Status::Fail };
        LemmaCheck { id: id.to_string(), status, details }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.details.iter().filter(|i| !i.ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown lemma id: {0}")]
pub struct UnknownLemma(pub String);

type Runner = fn() -> LemmaCheck;

/// Suite order. Reports always follow this order regardless of how ids are
/// requested.
pub const LEMMA_IDS: [&str; 9] = [
    "norm-table-15",
    "norm-table-9",
    "prime-splitting",
    "minpoly-pi12",
    "area-pi12",
    "reduction-A-eq-alpha",
    "reduction-B-eq-beta",
    "sigma-actions",
    "simpletrig",
];

fn runner(id: &str) -> Option<Runner> {
    Some(match id {
        "norm-table-15" => verify_norm_table_15,
        "norm-table-9" => verify_norm_table_9,
        "prime-splitting" => verify_prime_splitting_facts,
        "minpoly-pi12" => verify_minpoly_pi12,
        "area-pi12" => verify_area_pi12,
        "reduction-A-eq-alpha" => verify_reduction_a_eq_alpha,
        "reduction-B-eq-beta" => verify_reduction_b_eq_beta,
        "sigma-actions" => verify_sigma_actions,
        "simpletrig" => || verify_simpletrig(&simpletrig_default_samples()),
        _ => return None,
    })
}

pub fn verify_all() -> Vec<LemmaCheck> {
    LEMMA_IDS.iter().map(|id| runner(id).expect("registered")()).collect()
}

/// Runs the named checks, deduplicated and in suite order.
pub fn verify_ids<S: AsRef<str>>(ids: &[S]) -> Result<Vec<LemmaCheck>, UnknownLemma> {
    for id in ids {
        if runner(id.as_ref()).is_none() {
            return Err(UnknownLemma(id.as_ref().to_string()));
        }
    }
    Ok(LEMMA_IDS
        .iter()
        .filter(|id| ids.iter().any(|r| r.as_ref() == **id))
        .map(|id| runner(id).expect("registered")())
        .collect())
}
