//! The built-in example corpus and its verification runner.

use std::sync::Arc;

use globset::Glob;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::ArtinianAlgebra;
use crate::classify::{classify, classify_ring};
use crate::error::{Error, Result};
use crate::hom::{aus_transpose, dual, dual_tower, natural_map, reflexivity_flags};
use crate::module::RealizedModule;
use crate::resolution::{betti_bound_checks, ext_formula_report, ext_lengths, min_resolution};
use crate::wire::{input_hash, ModuleSpec, RingSpec};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Stated explicitly in the literature for this example.
    Published,
    /// Immediate from definitions.
    Trivial,
    /// Obtained by an independent computation or closed form.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum Fact {
    RingLength,
    RingType,
    MuMaxIdeal,
    Loewy,
    Gorenstein,
    OmegaTorsionless,
    Socle,
    Bnsi,
    Length,
    Mu,
    IsFree,
    HasFreeSummand,
    DualLength,
    BidualLength,
    PhiInjective,
    PhiSurjective,
    TransposeLength,
    /// `ℓ(coker φ_M) = ℓ(Ext²(D(M), R))`.
    CokernelMatchesTransposeExt,
    Betti { steps: usize },
    Ext { bound: usize },
    TowerLengths { depth: usize },
    TowerRatios { depth: usize },
    Verdict { predicate: String, bound: usize },
    BettiBounds { steps: usize },
    ExtFormula { from: usize, to: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
    #[serde(flatten)]
    pub fact: Fact,
    pub expected: Value,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    pub id: String,
    /// What the entry reproduces.
    pub claim: String,
    pub ring: RingSpec,
    pub checks: Vec<Check>,
}

fn ring_check(fact: Fact, expected: Value, provenance: Provenance) -> Check {
    Check { module: None, fact, expected, provenance }
}

fn module_check(module: ModuleSpec, fact: Fact, expected: Value, provenance: Provenance) -> Check {
    Check { module: Some(module), fact, expected, provenance }
}

fn verdict(predicate: &str, bound: usize) -> Fact {
    Fact::Verdict { predicate: predicate.into(), bound }
}

fn powers_of_two(n: usize) -> Vec<u64> {
    (0..n).map(|i| 1u64 << i).collect()
}

/// The built-in corpus, sorted by id.
pub fn corpus() -> Vec<CorpusEntry> {
    use ModuleSpec::{Canonical, MaxIdeal, ResidueField};
    use Provenance::{Derived, Published, Trivial};

    let mut entries = vec![
        CorpusEntry {
            id: "lam".into(),
            claim: "square-zero maximal ideal in two variables: m has dual and bidual of lengths 4 and 8, \
                    k is torsion-less but not reflexive, Ext^i(k, R) never vanishes"
                .into(),
            ring: RingSpec::named("lam").unwrap(),
            checks: vec![
                ring_check(Fact::RingLength, json!(3), Trivial),
                ring_check(Fact::RingType, json!(2), Derived),
                ring_check(Fact::Gorenstein, json!(false), Derived),
                ring_check(Fact::OmegaTorsionless, json!(false), Published),
                ring_check(Fact::Bnsi, json!({"status": "certified_true", "rule": "m2=0"}), Published),
                module_check(MaxIdeal, Fact::DualLength, json!(4), Published),
                module_check(MaxIdeal, Fact::BidualLength, json!(8), Published),
                module_check(MaxIdeal, Fact::PhiSurjective, json!(false), Published),
                module_check(MaxIdeal, Fact::IsFree, json!(false), Derived),
                module_check(MaxIdeal, Fact::CokernelMatchesTransposeExt, json!(true), Derived),
                module_check(ResidueField, Fact::PhiInjective, json!(true), Published),
                module_check(
                    ResidueField,
                    verdict("reflexive", 6),
                    json!({"status": "certified_false", "rule": "phi-rank"}),
                    Published,
                ),
                module_check(ResidueField, Fact::Ext { bound: 6 }, json!([2, 3, 6, 12, 24, 48, 96]), Derived),
                module_check(ResidueField, Fact::Betti { steps: 8 }, json!(powers_of_two(9)), Derived),
                module_check(ResidueField, Fact::TransposeLength, json!(5), Derived),
                module_check(ResidueField, Fact::HasFreeSummand, json!(false), Derived),
                module_check(ResidueField, Fact::CokernelMatchesTransposeExt, json!(true), Derived),
                module_check(
                    ResidueField,
                    Fact::BettiBounds { steps: 8 },
                    json!({"holds": true, "socle_constant": 2, "loewy_constant": 1}),
                    Published,
                ),
                module_check(
                    ResidueField,
                    Fact::ExtFormula { from: 2, to: 6 },
                    json!({"all_agree": true, "ratio_trend": "strictly decreasing toward 0"}),
                    Derived,
                ),
                module_check(
                    MaxIdeal,
                    Fact::ExtFormula { from: 2, to: 6 },
                    json!({"all_agree": true, "ratio_trend": "strictly decreasing toward 0"}),
                    Derived,
                ),
            ],
        },
        CorpusEntry {
            id: "ex56".into(),
            claim: "k[x,y]/(x^2,xy,y^3): type 2, every reflexive module free, \
                    and l(m^{n*}) = 2^{n+1}+1 so the tower ratio tends to 2 < l(m)"
                .into(),
            ring: RingSpec::named("ex56").unwrap(),
            checks: {
                let mut c = vec![
                    ring_check(Fact::RingLength, json!(4), Published),
                    ring_check(Fact::RingType, json!(2), Published),
                    ring_check(Fact::Socle, json!(["x", "y^2"]), Published),
                    ring_check(Fact::MuMaxIdeal, json!(2), Published),
                    ring_check(Fact::Loewy, json!(3), Derived),
                    ring_check(Fact::OmegaTorsionless, json!(false), Published),
                    ring_check(Fact::Bnsi, json!({"status": "certified_true", "rule": "m3=0,m2!=soc"}), Published),
                    module_check(MaxIdeal, Fact::Length, json!(3), Published),
                    module_check(MaxIdeal, Fact::Mu, json!(2), Published),
                    module_check(
                        ModuleSpec::Presentation { rows: 1, matrix: vec![vec!["x".into(), "y^2".into()]] }.dual_of(1),
                        Fact::Length,
                        json!(3),
                        Published,
                    ),
                    module_check(MaxIdeal, Fact::DualLength, json!(5), Published),
                    module_check(
                        MaxIdeal,
                        verdict("reflexive", 6),
                        json!({"status": "certified_false", "rule": "phi-rank"}),
                        Published,
                    ),
                    module_check(
                        MaxIdeal,
                        verdict("weakly_gorenstein", 6),
                        json!({"status": "certified_false", "rule": "bnsi:m3=0,m2!=soc"}),
                        Published,
                    ),
                    module_check(MaxIdeal, Fact::CokernelMatchesTransposeExt, json!(true), Derived),
                ];
                let lengths: Vec<u64> = (0..=10).map(|n| (1u64 << (n + 1)) + 1).collect();
                let ratios: Vec<String> =
                    (0..=10).map(|n| if n == 0 { "3".into() } else { format!("{}/{}", (1u64 << (n + 1)) + 1, 1u64 << n) }).collect();
                c.push(module_check(MaxIdeal, Fact::TowerLengths { depth: 10 }, json!(lengths), Published));
                c.push(module_check(MaxIdeal, Fact::TowerRatios { depth: 10 }, json!(ratios), Published));
                c
            },
        },
        CorpusEntry {
            id: "ex57".into(),
            claim: "k[x,y]/(x^2,xy,y^2): l(m^{n*}) = 2^{n+1}, ratio constantly l(m) = 2".into(),
            ring: RingSpec::named("ex57").unwrap(),
            checks: vec![
                module_check(
                    MaxIdeal,
                    Fact::TowerLengths { depth: 10 },
                    json!((0..=10).map(|n| 1u64 << (n + 1)).collect::<Vec<_>>()),
                    Published,
                ),
                module_check(MaxIdeal, Fact::TowerRatios { depth: 10 }, json!(vec!["2"; 11]), Published),
                module_check(MaxIdeal, Fact::HasFreeSummand, json!(false), Derived),
            ],
        },
        CorpusEntry {
            id: "gor415".into(),
            claim: "k[x,y,z]/(x^2-y^2,y^2-z^2,xy,yz,zx): Gorenstein of length 5 with m^3 = 0, \
                    k totally reflexive but not free, Betti numbers at least double"
                .into(),
            ring: RingSpec::named("gor415").unwrap(),
            checks: vec![
                ring_check(Fact::RingLength, json!(5), Published),
                ring_check(Fact::RingType, json!(1), Published),
                ring_check(Fact::MuMaxIdeal, json!(3), Published),
                ring_check(Fact::Loewy, json!(3), Published),
                ring_check(Fact::Gorenstein, json!(true), Published),
                ring_check(Fact::OmegaTorsionless, json!(true), Published),
                module_check(Canonical, Fact::Length, json!(5), Derived),
                module_check(Canonical, Fact::Mu, json!(1), Derived),
                module_check(
                    ResidueField,
                    verdict("totally_reflexive", 4),
                    json!({"status": "certified_true", "rule": "gorenstein"}),
                    Published,
                ),
                module_check(
                    ResidueField,
                    verdict("free", 4),
                    json!({"status": "certified_false", "rule": "length-count"}),
                    Published,
                ),
                module_check(ResidueField, Fact::Betti { steps: 5 }, json!([1, 3, 8, 21, 55, 144]), Derived),
                module_check(
                    ResidueField,
                    Fact::BettiBounds { steps: 5 },
                    json!({"holds": true, "socle_constant": null, "loewy_constant": 2}),
                    Published,
                ),
                module_check(ResidueField, Fact::Ext { bound: 4 }, json!([1, 0, 0, 0, 0]), Trivial),
            ],
        },
        CorpusEntry {
            id: "power:2,3".into(),
            claim: "k[x1,x2]/(x1,x2)^3 has strictly increasing Betti numbers, so reflexive means free".into(),
            ring: RingSpec::named("power:2,3").unwrap(),
            checks: vec![
                ring_check(Fact::RingLength, json!(6), Trivial),
                ring_check(Fact::RingType, json!(3), Derived),
                ring_check(Fact::OmegaTorsionless, json!(false), Published),
                ring_check(Fact::Bnsi, json!({"status": "certified_true", "rule": "power-of-max-ideal"}), Published),
                module_check(
                    MaxIdeal,
                    verdict("reflexive", 4),
                    json!({"status": "certified_false", "rule": "phi-rank"}),
                    Published,
                ),
            ],
        },
        CorpusEntry {
            id: "power:3,2".into(),
            claim: "k[x1,x2,x3]/(x1,x2,x3)^2: square-zero maximal ideal, reflexive means free".into(),
            ring: RingSpec::named("power:3,2").unwrap(),
            checks: vec![
                ring_check(Fact::RingLength, json!(4), Trivial),
                ring_check(Fact::RingType, json!(3), Derived),
                ring_check(Fact::OmegaTorsionless, json!(false), Published),
                ring_check(Fact::Bnsi, json!({"status": "certified_true", "rule": "m2=0"}), Published),
                module_check(ResidueField, Fact::Betti { steps: 5 }, json!([1, 3, 9, 27, 81, 243]), Derived),
                module_check(
                    ResidueField,
                    Fact::BettiBounds { steps: 5 },
                    json!({"holds": true, "socle_constant": 3, "loewy_constant": 2}),
                    Published,
                ),
            ],
        },
    ];
    for n in [3u32, 4, 5] {
        entries.push(CorpusEntry {
            id: format!("kxn:{n}"),
            claim: format!(
                "k[x]/(x^{n}): Gorenstein, every finitely generated module reflexive, \
                 and R/(x) has constant Betti numbers"
            ),
            ring: RingSpec::named(&format!("kxn:{n}")).unwrap(),
            checks: vec![
                ring_check(Fact::RingLength, json!(n), Trivial),
                ring_check(Fact::Gorenstein, json!(true), Published),
                ring_check(Fact::OmegaTorsionless, json!(true), Published),
                ring_check(Fact::Bnsi, json!({"status": "certified_false", "rule": "principal-max-ideal"}), Published),
                module_check(ResidueField, Fact::Betti { steps: 8 }, json!(vec![1; 9]), Published),
                module_check(
                    ResidueField,
                    verdict("reflexive", 4),
                    json!({"status": "certified_true", "rule": "phi-rank"}),
                    Published,
                ),
                module_check(
                    MaxIdeal,
                    verdict("reflexive", 4),
                    json!({"status": "certified_true", "rule": "phi-rank"}),
                    Published,
                ),
                module_check(ResidueField, Fact::Ext { bound: 4 }, json!([1, 0, 0, 0, 0]), Trivial),
            ],
        });
    }
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    entries
}

fn need_module(m: Option<&Arc<RealizedModule>>) -> Result<&Arc<RealizedModule>> {
    m.ok_or_else(|| Error::Input("fact requires a module".into()))
}

/// Evaluates one fact. Budget-limited computations that stop early fail
/// with [`Error::BudgetExceeded`].
pub fn evaluate(fact: &Fact, alg: &Arc<ArtinianAlgebra>, m: Option<&Arc<RealizedModule>>, budget: usize) -> Result<Value> {
    let inv = alg.invariants();
    let over = |what: &str, needed: usize| Error::BudgetExceeded { what: what.into(), needed, budget };
    Ok(match fact {
        Fact::RingLength => json!(inv.length),
        Fact::RingType => json!(inv.socle_dim),
        Fact::MuMaxIdeal => json!(inv.mu_m),
        Fact::Loewy => json!(inv.loewy),
        Fact::Gorenstein => json!(inv.is_gorenstein),
        Fact::OmegaTorsionless => json!(classify_ring(alg)?.omega_torsionless),
        Fact::Socle => json!(alg.socle_polys().iter().map(ToString::to_string).collect::<Vec<_>>()),
        Fact::Bnsi => {
            let v = alg.bnsi_certificate();
            json!({"status": v.status, "rule": v.rule})
        }
        Fact::Length => json!(need_module(m)?.length()),
        Fact::Mu => json!(need_module(m)?.mu()),
        Fact::IsFree => json!(need_module(m)?.is_free()),
        Fact::HasFreeSummand => json!(need_module(m)?.has_free_summand()),
        Fact::DualLength => json!(dual(need_module(m)?).length()),
        Fact::BidualLength => json!(natural_map(need_module(m)?).target().length()),
        Fact::PhiInjective => json!(reflexivity_flags(need_module(m)?).torsionless),
        Fact::PhiSurjective => json!(reflexivity_flags(need_module(m)?).weakly_reflexive),
        Fact::TransposeLength => json!(aus_transpose(need_module(m)?).length()),
        Fact::CokernelMatchesTransposeExt => {
            let m = need_module(m)?;
            let flags = reflexivity_flags(m);
            let ext = ext_lengths(&aus_transpose(m), 2, budget);
            let e2 = *ext.lengths.get(2).ok_or_else(|| over("Ext^2 of the transpose", 3))?;
            json!(flags.bidual_length - flags.phi_rank == e2)
        }
        Fact::Betti { steps } => {
            let res = min_resolution(need_module(m)?, *steps, budget);
            if res.partial {
                return Err(over("resolution", res.betti.last().copied().unwrap_or(0) * alg.length()));
            }
            json!(res.betti)
        }
        Fact::Ext { bound } => {
            let ext = ext_lengths(need_module(m)?, *bound, budget);
            if ext.partial {
                return Err(over("Ext scan", ext.betti.last().copied().unwrap_or(0) * alg.length()));
            }
            json!(ext.lengths)
        }
        Fact::TowerLengths { depth } | Fact::TowerRatios { depth } => {
            let t = dual_tower(need_module(m)?, *depth, budget);
            if t.partial {
                return Err(over("dual tower", t.mu.last().copied().unwrap_or(0) * alg.length()));
            }
            if matches!(fact, Fact::TowerLengths { .. }) {
                json!(t.lengths)
            } else {
                json!(t.ratios)
            }
        }
        Fact::Verdict { predicate, bound } => {
            let rep = classify(need_module(m)?, *bound, budget)?;
            let (_, v) = rep
                .predicates()
                .into_iter()
                .find(|(name, _)| name == predicate)
                .ok_or_else(|| Error::Input(format!("unknown predicate `{predicate}`")))?;
            json!({"status": v.status, "rule": v.rule})
        }
        Fact::BettiBounds { steps } => {
            let rep = betti_bound_checks(need_module(m)?, *steps, budget);
            json!({
                "holds": rep.holds,
                "socle_constant": rep.socle_bound.as_ref().map(|b| b.constant),
                "loewy_constant": rep.loewy_bound.constant,
            })
        }
        Fact::ExtFormula { from, to } => {
            let rep = ext_formula_report(need_module(m)?, *from, *to, budget);
            json!({"all_agree": rep.all_agree, "ratio_trend": rep.ratio_trend})
        }
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Budget,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(flatten)]
    pub fact: Fact,
    pub provenance: Provenance,
    pub expected: Value,
    pub actual: Value,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub claim: String,
    pub input_hash: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl EntryReport {
    pub fn budget_exceeded(&self) -> bool {
        self.checks.iter().any(|c| matches!(c.status, CheckStatus::Budget))
    }
}

pub fn run_entry(entry: &CorpusEntry, budget: usize) -> EntryReport {
    let input_hash = input_hash(entry);
    let alg = entry.ring.build();
    let checks: Vec<CheckResult> = entry
        .checks
        .iter()
        .map(|c| {
            let outcome = alg.as_ref().map_err(Clone::clone).and_then(|alg| {
                let module = c.module.as_ref().map(|s| s.build(alg)).transpose()?;
                evaluate(&c.fact, alg, module.as_ref(), budget)
            });
            let (actual, status) = match outcome {
                Ok(v) => {
                    let status = if v == c.expected { CheckStatus::Pass } else { CheckStatus::Fail };
                    (v, status)
                }
                Err(e @ Error::BudgetExceeded { .. }) => (json!({"error": e.to_string()}), CheckStatus::Budget),
                Err(e) => (json!({"error": e.to_string()}), CheckStatus::Fail),
            };
            CheckResult {
                module: c.module.as_ref().map(ModuleSpec::describe),
                fact: c.fact.clone(),
                provenance: c.provenance,
                expected: c.expected.clone(),
                actual,
                status,
            }
        })
        .collect();
    EntryReport {
        id: entry.id.clone(),
        claim: entry.claim.clone(),
        input_hash,
        passed: checks.iter().all(|c| matches!(c.status, CheckStatus::Pass)),
        checks,
    }
}

/// Runs every entry whose id matches `filter` (a glob), in parallel;
/// reports are sorted by id.
pub fn verify(filter: Option<&str>, budget: usize) -> Result<Vec<EntryReport>> {
    let matcher = match filter {
        Some(f) => Some(Glob::new(f).map_err(|e| Error::Input(format!("filter: {e}")))?.compile_matcher()),
        None => None,
    };
    let selected: Vec<CorpusEntry> =
        corpus().into_iter().filter(|e| matcher.as_ref().is_none_or(|m| m.is_match(&e.id))).collect();
    if selected.is_empty() {
        return Err(Error::Input(format!("no corpus entry matches `{}`", filter.unwrap_or("*"))));
    }
    let mut reports: Vec<EntryReport> = selected.par_iter().map(|e| run_entry(e, budget)).collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids: Vec<String> = corpus().into_iter().map(|e| e.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn filter_selects_by_glob() {
        let r = verify(Some("kxn:*"), 10_000).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(|e| e.passed), "{}", serde_json::to_string_pretty(&r).unwrap());
        assert!(verify(Some("nothing"), 10_000).is_err());
    }
}
