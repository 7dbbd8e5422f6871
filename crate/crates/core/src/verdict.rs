//! Tri-state verdicts with machine-checkable witnesses.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    CertifiedTrue,
    CertifiedFalse,
    UnknownUpTo,
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    None,
    /// The recorded preconditions of a certification rule.
    Preconditions { facts: BTreeMap<String, String> },
    /// A module exhibiting the property (or its failure), with Betti numbers.
    Module { module: String, betti: Vec<usize> },
    /// `ℓ(M)` against `μ(M)·ℓ(R)`.
    LengthCount { length: usize, mu: usize, ring_length: usize },
    /// Rank of the natural map into the bidual.
    PhiRank { rank: usize, source_length: usize, bidual_length: usize },
    /// `Ext^index(module, R)` has the given nonzero length.
    ExtNonzero { module: String, index: usize, length: usize },
    /// `Ext^i(module, R) = 0` for `1 ≤ i ≤ checked_up_to`.
    ExtVanishing { module: String, checked_up_to: usize },
    /// The dual is not free (length count for `M*`).
    DualNotFree { dual_length: usize, dual_mu: usize, ring_length: usize },
    All { parts: Vec<Witness> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    /// Name of the rule that produced the verdict.
    pub rule: String,
    pub witness: Witness,
}

impl Verdict {
    pub fn certified(value: bool, rule: impl Into<String>, witness: Witness) -> Self {
        Verdict {
            status: if value { Status::CertifiedTrue } else { Status::CertifiedFalse },
            bound: None,
            rule: rule.into(),
            witness,
        }
    }

    pub fn unknown(bound: usize, rule: impl Into<String>, witness: Witness) -> Self {
        Verdict { status: Status::UnknownUpTo, bound: Some(bound), rule: rule.into(), witness }
    }

    pub fn is_true(&self) -> bool {
        self.status == Status::CertifiedTrue
    }

    pub fn is_false(&self) -> bool {
        self.status == Status::CertifiedFalse
    }

    pub fn is_unknown(&self) -> bool {
        self.status == Status::UnknownUpTo
    }

    /// `Some(b)` for certified verdicts.
    pub fn value(&self) -> Option<bool> {
        match self.status {
            Status::CertifiedTrue => Some(true),
            Status::CertifiedFalse => Some(false),
            Status::UnknownUpTo => None,
        }
    }

    /// Two verdicts conflict when both are certified with opposite values.
    pub fn conflicts_with(&self, other: &Verdict) -> bool {
        matches!((self.value(), other.value()), (Some(a), Some(b)) if a != b)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::CertifiedTrue => write!(f, "certified(rule {})", self.rule),
            Status::CertifiedFalse => write!(f, "refuted(rule {})", self.rule),
            Status::UnknownUpTo => write!(f, "unknown(up to {})", self.bound.unwrap_or(0)),
        }
    }
}
