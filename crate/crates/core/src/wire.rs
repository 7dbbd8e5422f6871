//! JSON wire format for rings and modules, plus the named rings.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::ArtinianAlgebra;
use crate::error::{Error, Result};
use crate::hom::{aus_transpose, dual};
use crate::module::{self, Presentation, RealizedModule};
use crate::poly::MonomialOrder;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    #[serde(default = "rational")]
    pub field: Field,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    #[serde(default)]
    pub order: MonomialOrder,
}

fn rational() -> Field {
    Field::Rational
}

impl RingSpec {
    pub fn new(vars: &[&str], ideal: &[&str]) -> Self {
        RingSpec {
            field: Field::Rational,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            ideal: ideal.iter().map(|s| s.to_string()).collect(),
            order: MonomialOrder::GrevLex,
        }
    }

    pub fn build(&self) -> Result<Arc<ArtinianAlgebra>> {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let ideal: Vec<&str> = self.ideal.iter().map(String::as_str).collect();
        ArtinianAlgebra::from_strings(self.field, &vars, &ideal, self.order)
    }

    /// Named rings: `lam`, `ex56`, `ex57`, `gor415`, `kxn:{n}`, `power:{m},{n}`.
    pub fn named(id: &str) -> Result<Self> {
        let bad = || Error::Input(format!("unknown ring id `{id}`"));
        Ok(match id {
            "lam" | "ex57" => RingSpec::new(&["x", "y"], &["x^2", "x*y", "y^2"]),
            "ex56" => RingSpec::new(&["x", "y"], &["x^2", "x*y", "y^3"]),
            "gor415" => RingSpec::new(&["x", "y", "z"], &["x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "z*x"]),
            _ => {
                if let Some(n) = id.strip_prefix("kxn:") {
                    let n: u32 = n.parse().map_err(|_| bad())?;
                    if n == 0 {
                        return Err(bad());
                    }
                    RingSpec::new(&["x"], &[&format!("x^{n}")])
                } else if let Some(rest) = id.strip_prefix("power:") {
                    let (m, n) = rest.split_once(',').ok_or_else(bad)?;
                    let (m, n): (usize, u32) = (m.parse().map_err(|_| bad())?, n.parse().map_err(|_| bad())?);
                    if m == 0 || n == 0 || m > 8 {
                        return Err(bad());
                    }
                    power_ring(m, n)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

/// `k[x1…xm]/(x1…xm)^n`, generated by all degree-`n` monomials.
fn power_ring(m: usize, n: u32) -> RingSpec {
    let vars: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let mut gens = Vec::new();
    let mut exps = vec![0u32; m];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, vars: &[String], out: &mut Vec<String>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            let parts: Vec<String> = exps
                .iter()
                .zip(vars)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            out.push(parts.join("*"));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, vars, out);
        }
    }
    rec(0, n, &mut exps, &vars, &mut gens);
    RingSpec { field: Field::Rational, vars, ideal: gens, order: MonomialOrder::GrevLex }
}

/// How to build a module over a ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "builder", deny_unknown_fields)]
pub enum ModuleSpec {
    /// The residue field.
    #[serde(rename = "k")]
    ResidueField,
    #[serde(rename = "m")]
    MaxIdeal,
    #[serde(rename = "R")]
    Free {
        #[serde(default = "one")]
        rank: usize,
    },
    #[serde(rename = "omega")]
    Canonical,
    #[serde(rename = "ideal")]
    Ideal { gens: Vec<String> },
    /// Cokernel of the matrix; `rows` fixes the rank of the target.
    #[serde(rename = "presentation")]
    Presentation { rows: usize, matrix: Vec<Vec<String>> },
    #[serde(rename = "syzygy")]
    Syzygy { index: usize, of: Box<ModuleSpec> },
    #[serde(rename = "dual")]
    Dual {
        #[serde(default = "one")]
        times: usize,
        of: Box<ModuleSpec>,
    },
    #[serde(rename = "transpose")]
    Transpose { of: Box<ModuleSpec> },
    #[serde(rename = "sum")]
    Sum { parts: Vec<ModuleSpec> },
}

fn one() -> usize {
    1
}

impl ModuleSpec {
    /// `k`, `m`, `R`, `R:{n}`, `omega`, or JSON.
    pub fn parse_short(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('{') {
            return serde_json::from_str(t).map_err(|e| Error::Input(format!("module spec: {e}")));
        }
        Ok(match t {
            "k" => ModuleSpec::ResidueField,
            "m" => ModuleSpec::MaxIdeal,
            "R" => ModuleSpec::Free { rank: 1 },
            "omega" => ModuleSpec::Canonical,
            _ => match t.strip_prefix("R:").and_then(|n| n.parse().ok()) {
                Some(rank) => ModuleSpec::Free { rank },
                None => return Err(Error::Input(format!("unknown module `{t}`"))),
            },
        })
    }

    pub fn dual_of(self, times: usize) -> Self {
        ModuleSpec::Dual { times, of: Box::new(self) }
    }

    pub fn build(&self, alg: &Arc<ArtinianAlgebra>) -> Result<Arc<RealizedModule>> {
        Ok(match self {
            ModuleSpec::ResidueField => module::residue_field(alg),
            ModuleSpec::MaxIdeal => module::max_ideal(alg),
            ModuleSpec::Free { rank } => module::free(alg, *rank),
            ModuleSpec::Canonical => module::canonical(alg),
            ModuleSpec::Ideal { gens } => {
                let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
                module::ideal_from_strings(alg, &gens)?
            }
            ModuleSpec::Presentation { rows, matrix } => {
                Presentation::from_strings(alg.clone(), *rows, matrix)?.realize()
            }
            ModuleSpec::Syzygy { index, of } => {
                let mut m = of.build(alg)?;
                for _ in 0..*index {
                    m = m.syzygy();
                }
                m
            }
            ModuleSpec::Dual { times, of } => {
                let mut m = of.build(alg)?;
                for _ in 0..*times {
                    m = dual(&m).module().clone();
                }
                m
            }
            ModuleSpec::Transpose { of } => aus_transpose(&of.build(alg)?),
            ModuleSpec::Sum { parts } => {
                let mut acc = module::free(alg, 0);
                for p in parts {
                    acc = module::direct_sum(&acc, &p.build(alg)?)?;
                }
                acc
            }
        })
    }

    /// Short human-readable name.
    pub fn describe(&self) -> String {
        match self {
            ModuleSpec::ResidueField => "k".into(),
            ModuleSpec::MaxIdeal => "m".into(),
            ModuleSpec::Free { rank: 1 } => "R".into(),
            ModuleSpec::Free { rank } => format!("R^{rank}"),
            ModuleSpec::Canonical => "omega".into(),
            ModuleSpec::Ideal { gens } => format!("({})", gens.join(",")),
            ModuleSpec::Presentation { rows, matrix } => {
                let rows_text: Vec<String> = matrix.iter().map(|r| r.join(" ")).collect();
                if rows_text.is_empty() {
                    format!("R^{rows}")
                } else {
                    format!("coker[{}]", rows_text.join("; "))
                }
            }
            ModuleSpec::Syzygy { index, of } => format!("Syz_{index}({})", of.describe()),
            ModuleSpec::Dual { times, of } => format!("{}{}", of.describe(), "*".repeat(*times)),
            ModuleSpec::Transpose { of } => format!("D({})", of.describe()),
            ModuleSpec::Sum { parts } => {
                parts.iter().map(ModuleSpec::describe).collect::<Vec<_>>().join(" + ")
            }
        }
    }
}

/// Hex sha256 of the canonical JSON of `value`.
pub fn input_hash<T: Serialize>(value: &T) -> String {
    let bytes = serde_json::to_vec(value).expect("wire types serialize");
    hex::encode(Sha256::digest(&bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_rings_build() {
        assert_eq!(RingSpec::named("ex56").unwrap().build().unwrap().length(), 4);
        assert_eq!(RingSpec::named("kxn:5").unwrap().build().unwrap().length(), 5);
        let p = RingSpec::named("power:3,2").unwrap();
        assert_eq!(p.ideal.len(), 6);
        assert_eq!(p.build().unwrap().length(), 4);
        assert_eq!(RingSpec::named("power:2,3").unwrap().build().unwrap().length(), 6);
        assert!(RingSpec::named("kxn:0").is_err());
        assert!(RingSpec::named("nope").is_err());
    }

    #[test]
    fn module_specs_round_trip() {
        let spec = ModuleSpec::Dual {
            times: 2,
            of: Box::new(ModuleSpec::Presentation { rows: 1, matrix: vec![vec!["x".into(), "y^2".into()]] }),
        };
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<ModuleSpec>(&text).unwrap(), spec);
        assert_eq!(ModuleSpec::parse_short("R:3").unwrap(), ModuleSpec::Free { rank: 3 });
        assert_eq!(ModuleSpec::parse_short(r#"{"builder":"k"}"#).unwrap(), ModuleSpec::ResidueField);
        let ring = RingSpec::named("lam").unwrap();
        let back: RingSpec = serde_json::from_str(&serde_json::to_string(&ring).unwrap()).unwrap();
        assert_eq!(back, ring);
    }

    #[test]
    fn hash_is_stable() {
        let a = input_hash(&RingSpec::named("lam").unwrap());
        assert_eq!(a, input_hash(&RingSpec::named("lam").unwrap()));
        assert_eq!(a.len(), 64);
    }
}
