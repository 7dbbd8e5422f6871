//! Tri-state verdicts for the reflexivity classes of a module.
//!
//! Direct computations (length counts, ranks of `φ_M`, bounded Ext scans)
//! always run. Structural shortcuts (Gorenstein rings, rings certified to
//! have strictly increasing Betti numbers) run alongside them, and any
//! certified disagreement is an [`Error::Inconsistent`].

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraInvariants, ArtinianAlgebra};
use crate::error::{Error, Result};
use crate::hom::{dual, reflexivity_flags};
use crate::module::{canonical, RealizedModule};
use crate::resolution::{ext_lengths, ExtLengths};
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub free: Verdict,
    pub torsionless: Verdict,
    pub weakly_reflexive: Verdict,
    pub reflexive: Verdict,
    pub totally_reflexive: Verdict,
    pub weakly_gorenstein: Verdict,
    pub skew_gorenstein: Verdict,
    pub bound: usize,
    pub ext: Vec<usize>,
    pub dual_ext: Vec<usize>,
}

impl ClassReport {
    pub fn predicates(&self) -> [(&'static str, &Verdict); 7] {
        [
            ("free", &self.free),
            ("torsionless", &self.torsionless),
            ("weakly_reflexive", &self.weakly_reflexive),
            ("reflexive", &self.reflexive),
            ("totally_reflexive", &self.totally_reflexive),
            ("weakly_gorenstein", &self.weakly_gorenstein),
            ("skew_gorenstein", &self.skew_gorenstein),
        ]
    }

    /// reflexive ⇒ torsionless ∧ weakly reflexive; totally reflexive ⇒
    /// reflexive ∧ weakly Gorenstein ∧ skew Gorenstein; free ⇒ everything.
    pub fn check_closure(&self) -> Result<()> {
        let implies = |name: &str, premise: &Verdict, consequences: &[(&str, &Verdict)]| -> Result<()> {
            if !premise.is_true() {
                return Ok(());
            }
            for (c, v) in consequences {
                if v.is_false() {
                    return Err(Error::Inconsistent {
                        predicate: (*c).into(),
                        detail: format!("{name} holds but {c} is refuted"),
                    });
                }
            }
            Ok(())
        };
        implies(
            "reflexive",
            &self.reflexive,
            &[("torsionless", &self.torsionless), ("weakly_reflexive", &self.weakly_reflexive)],
        )?;
        implies(
            "totally_reflexive",
            &self.totally_reflexive,
            &[
                ("reflexive", &self.reflexive),
                ("weakly_gorenstein", &self.weakly_gorenstein),
                ("skew_gorenstein", &self.skew_gorenstein),
            ],
        )?;
        implies("free", &self.free, &self.predicates()[1..])?;
        Ok(())
    }
}

fn inconsistent(predicate: &str, a: &Verdict, b: &Verdict) -> Error {
    Error::Inconsistent { predicate: predicate.into(), detail: format!("{} vs {}", a, b) }
}

/// The first certified verdict among `candidates` (which must not
/// conflict), else the last candidate.
fn settle(predicate: &str, candidates: Vec<Verdict>) -> Result<Verdict> {
    for (i, a) in candidates.iter().enumerate() {
        for b in &candidates[i + 1..] {
            if a.conflicts_with(b) {
                return Err(inconsistent(predicate, a, b));
            }
        }
    }
    let fallback = candidates.last().cloned().expect("at least one candidate");
    Ok(candidates.into_iter().find(|v| !v.is_unknown()).unwrap_or(fallback))
}

/// Verdict on `Ext^i(module, R) = 0` for all `i ≥ 1`, from a bounded scan.
fn ext_scan(name: &str, module: &RealizedModule, ext: &ExtLengths) -> Verdict {
    if module.is_free() {
        return Verdict::certified(
            true,
            "free",
            Witness::LengthCount { length: module.length(), mu: module.mu(), ring_length: module.algebra().length() },
        );
    }
    match ext.first_nonzero(1) {
        Some(i) => Verdict::certified(
            false,
            "ext-scan",
            Witness::ExtNonzero { module: name.into(), index: i, length: ext.lengths[i] },
        ),
        None => Verdict::unknown(
            ext.computed_up_to(),
            "ext-scan",
            Witness::ExtVanishing { module: name.into(), checked_up_to: ext.computed_up_to() },
        ),
    }
}

fn preconditions(facts: &[(&str, String)]) -> Witness {
    Witness::Preconditions { facts: facts.iter().map(|(k, v)| (k.to_string(), v.clone())).collect::<BTreeMap<_, _>>() }
}

/// Classifies `M`, scanning `Ext^i(M, R)` and `Ext^i(M*, R)` for `1 ≤ i ≤ bound`.
pub fn classify(m: &Arc<RealizedModule>, bound: usize, budget: usize) -> Result<ClassReport> {
    if bound < 2 {
        return Err(Error::Input(format!("classification bound must be at least 2, got {bound}")));
    }
    let alg = m.algebra();
    let inv = alg.invariants();
    let ring_length = alg.length();
    let is_free = m.is_free();
    let dual_module = dual(m).module().clone();

    // direct
    let free_v = Verdict::certified(
        is_free,
        "length-count",
        Witness::LengthCount { length: m.length(), mu: m.mu(), ring_length },
    );
    let flags = reflexivity_flags(m);
    let phi = Witness::PhiRank { rank: flags.phi_rank, source_length: flags.length, bidual_length: flags.bidual_length };
    let tl = Verdict::certified(flags.torsionless, "phi-rank", phi.clone());
    let wr = Verdict::certified(flags.weakly_reflexive, "phi-rank", phi.clone());
    let refl = Verdict::certified(flags.reflexive, "phi-rank", phi);
    let ext = ext_lengths(m, bound, budget);
    let dual_ext = ext_lengths(&dual_module, bound, budget);
    let wg_direct = ext_scan("M", m, &ext);
    let sg_direct = ext_scan("M*", &dual_module, &dual_ext);
    let tr_direct = match (refl.value(), wg_direct.value(), sg_direct.value()) {
        (Some(false), _, _) => Verdict::certified(false, "closure", Witness::All { parts: vec![refl.witness.clone()] }),
        (_, Some(false), _) => {
            Verdict::certified(false, "closure", Witness::All { parts: vec![wg_direct.witness.clone()] })
        }
        (_, _, Some(false)) => {
            Verdict::certified(false, "closure", Witness::All { parts: vec![sg_direct.witness.clone()] })
        }
        (Some(true), Some(true), Some(true)) => Verdict::certified(
            true,
            "closure",
            Witness::All { parts: vec![refl.witness.clone(), wg_direct.witness.clone(), sg_direct.witness.clone()] },
        ),
        _ => Verdict::unknown(ext.computed_up_to().min(dual_ext.computed_up_to()), "closure", Witness::None),
    };

    let mut tl_c = vec![tl];
    let mut wr_c = vec![wr];
    let mut refl_c = vec![refl];
    let mut tr_c = Vec::new();
    let mut wg_c = Vec::new();
    let mut sg_c = Vec::new();

    if inv.is_gorenstein {
        let w = preconditions(&[("type", inv.socle_dim.to_string()), ("length", ring_length.to_string())]);
        for (c, name) in [(&mut tr_c, "gorenstein"), (&mut wg_c, "gorenstein"), (&mut sg_c, "gorenstein")] {
            c.push(Verdict::certified(true, name, w.clone()));
        }
        refl_c.push(Verdict::certified(true, "gorenstein", w.clone()));
        tl_c.push(Verdict::certified(true, "gorenstein", w.clone()));
        wr_c.push(Verdict::certified(true, "gorenstein", w));
    }

    let bnsi = alg.bnsi_certificate();
    if bnsi.is_true() && !is_free {
        let rule = format!("bnsi:{}", bnsi.rule);
        // Ext^i(M, R) ≠ 0 for every i ≥ 2; the scan must see it at i = 2
        let ext2 = ext.lengths.get(2).copied();
        let ext_witness = match ext2 {
            Some(l) if l > 0 => Witness::ExtNonzero { module: "M".into(), index: 2, length: l },
            Some(_) => {
                return Err(Error::Inconsistent {
                    predicate: "weakly_gorenstein".into(),
                    detail: format!("ring certified by {rule} but Ext^2(M, R) = 0 for nonfree M"),
                })
            }
            None => bnsi.witness.clone(),
        };
        if let Some(i) = (2..ext.lengths.len()).find(|&i| ext.lengths[i] == 0) {
            return Err(Error::Inconsistent {
                predicate: "weakly_gorenstein".into(),
                detail: format!("ring certified by {rule} but Ext^{i}(M, R) = 0 for nonfree M"),
            });
        }
        let dual_witness = Witness::DualNotFree {
            dual_length: dual_module.length(),
            dual_mu: dual_module.mu(),
            ring_length,
        };
        if dual_module.is_free() {
            return Err(Error::Inconsistent {
                predicate: "skew_gorenstein".into(),
                detail: format!("ring certified by {rule} but M* is free for nonfree M"),
            });
        }
        let w = Witness::All { parts: vec![bnsi.witness.clone(), ext_witness] };
        wg_c.push(Verdict::certified(false, rule.clone(), w.clone()));
        tr_c.push(Verdict::certified(false, rule.clone(), w.clone()));
        refl_c.push(Verdict::certified(false, rule.clone(), w.clone()));
        wr_c.push(Verdict::certified(false, rule.clone(), w));
        sg_c.push(Verdict::certified(
            false,
            rule,
            Witness::All { parts: vec![bnsi.witness.clone(), dual_witness] },
        ));
    }

    if is_free {
        let w = Witness::LengthCount { length: m.length(), mu: m.mu(), ring_length };
        for c in [&mut tl_c, &mut wr_c, &mut refl_c, &mut tr_c, &mut wg_c, &mut sg_c] {
            c.push(Verdict::certified(true, "free", w.clone()));
        }
    }

    tr_c.push(tr_direct);
    wg_c.push(wg_direct);
    sg_c.push(sg_direct);

    let report = ClassReport {
        free: free_v,
        torsionless: settle("torsionless", tl_c)?,
        weakly_reflexive: settle("weakly_reflexive", wr_c)?,
        reflexive: settle("reflexive", refl_c)?,
        totally_reflexive: settle("totally_reflexive", tr_c)?,
        weakly_gorenstein: settle("weakly_gorenstein", wg_c)?,
        skew_gorenstein: settle("skew_gorenstein", sg_c)?,
        bound,
        ext: ext.lengths,
        dual_ext: dual_ext.lengths,
    };
    report.check_closure()?;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub invariants: AlgebraInvariants,
    pub order: String,
    pub gorenstein: bool,
    pub bnsi: Verdict,
    pub omega_torsionless: bool,
    pub standard_monomials: Vec<String>,
    pub socle: Vec<String>,
}

/// Ring-level facts; `ω` torsion-less must coincide with Gorenstein.
pub fn classify_ring(alg: &Arc<ArtinianAlgebra>) -> Result<RingReport> {
    let inv = alg.invariants().clone();
    let omega_torsionless = reflexivity_flags(&canonical(alg)).torsionless;
    if omega_torsionless != inv.is_gorenstein {
        return Err(Error::Inconsistent {
            predicate: "omega_torsionless".into(),
            detail: format!("torsion-less = {omega_torsionless} but type = {}", inv.socle_dim),
        });
    }
    let names = alg.vars();
    Ok(RingReport {
        gorenstein: inv.is_gorenstein,
        invariants: inv,
        order: alg.order().name().to_string(),
        bnsi: alg.bnsi_certificate(),
        omega_torsionless,
        standard_monomials: alg.std_monomials().iter().map(|m| m.format(names)).collect(),
        socle: alg.socle_polys().iter().map(|p| p.to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{free, max_ideal, residue_field};
    use crate::poly::MonomialOrder;
    use crate::scalar::Field;
    use crate::verdict::Status;

    fn alg(vars: &[&str], gens: &[&str]) -> Arc<ArtinianAlgebra> {
        ArtinianAlgebra::from_strings(Field::Rational, vars, gens, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn max_ideal_over_cubic_socle_ring() {
        let r = alg(&["x", "y"], &["x^2", "x*y", "y^3"]);
        let rep = classify(&max_ideal(&r), 4, 10_000).unwrap();
        assert!(rep.reflexive.is_false());
        assert_eq!(rep.reflexive.rule, "phi-rank");
        assert!(rep.weakly_gorenstein.rule.starts_with("bnsi"));
        assert!(rep.skew_gorenstein.is_false());
    }

    #[test]
    fn everything_reflexive_over_principal_ring() {
        let r = alg(&["x"], &["x^4"]);
        for m in [residue_field(&r), max_ideal(&r)] {
            let rep = classify(&m, 3, 10_000).unwrap();
            assert!(rep.reflexive.is_true());
            assert!(rep.totally_reflexive.is_true());
            assert!(rep.free.is_false());
        }
    }

    #[test]
    fn free_module_is_everything() {
        let r = alg(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let rep = classify(&free(&r, 2), 3, 10_000).unwrap();
        for (_, v) in rep.predicates() {
            assert_eq!(v.status, Status::CertifiedTrue);
        }
    }

    #[test]
    fn canonical_module_torsionless_iff_gorenstein() {
        assert!(!classify_ring(&alg(&["x", "y"], &["x^2", "x*y", "y^2"])).unwrap().omega_torsionless);
        let g = classify_ring(&alg(&["x", "y", "z"], &["x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "z*x"])).unwrap();
        assert!(g.gorenstein && g.omega_torsionless);
    }

    #[test]
    fn bound_below_two_is_rejected() {
        let r = alg(&["x"], &["x^2"]);
        assert!(matches!(classify(&residue_field(&r), 1, 100), Err(Error::Input(_))));
    }
}
