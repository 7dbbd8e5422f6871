use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use reflexa::corpus::{verify, CheckStatus, EntryReport};
use reflexa::random::{random_presentation, rng, RandomShape};
use reflexa::resolution::{betti_bound_checks, ext_formula_report, ext_from_resolution, min_resolution};
use reflexa::wire::input_hash;
use reflexa::{classify, classify_ring, dual_tower, ArtinianAlgebra, Error, Field, ModuleSpec, MonomialOrder, RingSpec};

/// Exact computations with modules over artinian local algebras.
#[derive(Parser)]
#[command(name = "reflexa", version)]
struct Cli {
    /// Emit JSON (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit plain text.
    #[arg(long, global = true)]
    text: bool,
    /// Dimension budget for free modules, Hom spaces and towers.
    #[arg(long, global = true, env = "REFLEXA_BUDGET", default_value_t = 10_000)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a ring and ring-level verdicts.
    Ring(RingArgs),
    /// Reflexivity verdicts for a module.
    Classify {
        #[command(flatten)]
        target: ModuleArgs,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Betti numbers, Ext lengths and Betti lower bounds.
    Resolve {
        #[command(flatten)]
        target: ModuleArgs,
        #[arg(long, default_value_t = 8)]
        steps: usize,
    },
    /// Lengths of iterated duals.
    Tower {
        #[command(flatten)]
        target: ModuleArgs,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Check every built-in example against its expected values.
    VerifyPaper {
        /// Glob over entry ids, e.g. `kxn:*`.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Args)]
struct RingArgs {
    /// Named ring (lam, ex56, ex57, gor415, kxn:N, power:M,N), inline JSON, or @file.
    #[arg(long, conflicts_with_all = ["vars", "ideal"])]
    ring: Option<String>,
    /// Comma-separated variable names.
    #[arg(long, requires = "ideal")]
    vars: Option<String>,
    /// Comma-separated ideal generators.
    #[arg(long, requires = "vars")]
    ideal: Option<String>,
    /// Q or Fp (e.g. F101).
    #[arg(long, default_value = "Q")]
    field: String,
    #[arg(long, default_value = "grevlex")]
    order: String,
}

#[derive(Args)]
struct ModuleArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// k, m, R, R:n, omega, random, or a JSON module spec (or @file).
    #[arg(long, default_value = "k")]
    module: String,
    /// Seed for `--module random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn read_arg(text: &str) -> Result<String, Error> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

fn parse_order(text: &str) -> Result<MonomialOrder, Error> {
    serde_json::from_value(json!(text)).map_err(|_| Error::Input(format!("unknown monomial order `{text}`")))
}

impl RingArgs {
    fn spec(&self) -> Result<RingSpec, Error> {
        let mut spec = match (&self.ring, &self.vars, &self.ideal) {
            (Some(r), _, _) => {
                let text = read_arg(r)?;
                if text.trim_start().starts_with('{') {
                    return serde_json::from_str(&text).map_err(|e| Error::Input(format!("ring spec: {e}")));
                }
                RingSpec::named(text.trim())?
            }
            (None, Some(v), Some(i)) => RingSpec {
                field: Field::Rational,
                vars: v.split(',').map(|s| s.trim().to_string()).collect(),
                ideal: i.split(',').map(|s| s.trim().to_string()).collect(),
                order: MonomialOrder::GrevLex,
            },
            _ => return Err(Error::Input("give --ring, or --vars with --ideal".into())),
        };
        spec.field = self.field.parse()?;
        spec.order = parse_order(&self.order)?;
        Ok(spec)
    }
}

impl ModuleArgs {
    fn resolve(&self) -> Result<(RingSpec, Arc<ArtinianAlgebra>, ModuleSpec), Error> {
        let ring = self.ring.spec()?;
        let alg = ring.build()?;
        let text = read_arg(&self.module)?;
        let module = if text.trim() == "random" {
            let p = random_presentation(&alg, &mut rng(self.seed), &RandomShape::default());
            let matrix = (0..p.rows()).map(|i| (0..p.cols()).map(|j| p.entry(i, j).to_string()).collect()).collect();
            ModuleSpec::Presentation { rows: p.rows(), matrix }
        } else {
            ModuleSpec::parse_short(&text)?
        };
        Ok((ring, alg, module))
    }
}

struct Outcome {
    report: Value,
    text: String,
    code: u8,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconsistent { .. } => 1,
        Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

fn hashed<T: Serialize>(command: &str, input: &T) -> String {
    input_hash(&json!({"command": command, "input": input}))
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let budget = cli.budget;
    match &cli.command {
        Command::Ring(args) => {
            let spec = args.spec()?;
            let alg = spec.build()?;
            let rep = classify_ring(&alg)?;
            let text = format!(
                "length {}  type {}  mu(m) {}  loewy {}  gorenstein {}\nbnsi {}\nomega torsion-less {}\nbasis {}\nsocle {}",
                rep.invariants.length,
                rep.invariants.socle_dim,
                rep.invariants.mu_m,
                rep.invariants.loewy,
                rep.gorenstein,
                rep.bnsi,
                rep.omega_torsionless,
                rep.standard_monomials.join(" "),
                rep.socle.join(", "),
            );
            let report = json!({
                "command": "ring",
                "input_hash": hashed("ring", &spec),
                "ring": spec,
                "bnsi_summary": rep.bnsi.to_string(),
                "report": rep,
            });
            Ok(Outcome { report, text, code: 0 })
        }
        Command::Classify { target, bound } => {
            let (ring, alg, module) = target.resolve()?;
            let m = module.build(&alg)?;
            let rep = classify(&m, *bound, budget)?;
            let mut text = format!("module {}  length {}  mu {}\n", module.describe(), m.length(), m.mu());
            for (name, v) in rep.predicates() {
                text.push_str(&format!("{name:<18} {v}\n"));
            }
            let input = json!({"ring": ring, "module": module, "bound": bound, "budget": budget});
            let report = json!({
                "command": "classify",
                "input_hash": hashed("classify", &input),
                "budget": budget,
                "ring": ring,
                "module": module,
                "length": m.length(),
                "mu": m.mu(),
                "report": rep,
            });
            Ok(Outcome { report, text: text.trim_end().to_string(), code: 0 })
        }
        Command::Resolve { target, steps } => {
            let (ring, alg, module) = target.resolve()?;
            let m = module.build(&alg)?;
            let res = min_resolution(&m, *steps, budget);
            let ext = ext_from_resolution(&res, steps.saturating_sub(1));
            let bounds = betti_bound_checks(&m, *steps, budget);
            let formula = ext_formula_report(&m, 2, steps.saturating_sub(1), budget);
            let text = format!(
                "betti {:?}\next   {:?}\nbounds hold {}\nclosed form {}{}",
                res.betti,
                ext.lengths,
                bounds.holds,
                if formula.applicable { if formula.all_agree { "agrees" } else { "deviates" } } else { "n/a" },
                if res.partial { "\npartial: dimension budget reached" } else { "" },
            );
            let input = json!({"ring": ring, "module": module, "steps": steps, "budget": budget});
            let report = json!({
                "command": "resolve",
                "input_hash": hashed("resolve", &input),
                "budget": budget,
                "ring": ring,
                "module": module,
                "betti": res.betti,
                "computed_up_to": res.computed_up_to(),
                "partial": res.partial,
                "ext_lengths": ext.lengths,
                "betti_bounds": bounds,
                "ext_closed_form": formula,
            });
            Ok(Outcome { report, text, code: if res.partial { 3 } else { 0 } })
        }
        Command::Tower { target, depth } => {
            let (ring, alg, module) = target.resolve()?;
            let m = module.build(&alg)?;
            let t = dual_tower(&m, *depth, budget);
            let mut text = format!("type {}\n", t.ring_type);
            for (i, (l, r)) in t.lengths.iter().zip(&t.ratios).enumerate() {
                text.push_str(&format!("{i:>3}  length {l:<8} ratio {r}\n"));
            }
            if t.partial {
                text.push_str("partial: dimension budget reached\n");
            }
            let input = json!({"ring": ring, "module": module, "depth": depth, "budget": budget});
            let report = json!({
                "command": "tower",
                "input_hash": hashed("tower", &input),
                "budget": budget,
                "ring": ring,
                "module": module,
                "tower": t,
            });
            Ok(Outcome { report, text: text.trim_end().to_string(), code: if t.partial { 3 } else { 0 } })
        }
        Command::VerifyPaper { filter } => {
            let reports = verify(filter.as_deref(), budget)?;
            let text = verify_text(&reports);
            let passed = reports.iter().all(|r| r.passed);
            let code = if passed {
                0
            } else if reports.iter().all(|r| r.passed || r.budget_exceeded()) {
                3
            } else {
                1
            };
            let report = json!({
                "command": "verify-paper",
                "budget": budget,
                "filter": filter,
                "passed": passed,
                "entries": reports,
            });
            Ok(Outcome { report, text, code })
        }
    }
}

fn verify_text(reports: &[EntryReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let ok = r.checks.iter().filter(|c| matches!(c.status, CheckStatus::Pass)).count();
        let tag = if r.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{tag} {:<10} {ok}/{} checks  {}\n", r.id, r.checks.len(), r.claim));
        for c in r.checks.iter().filter(|c| !matches!(c.status, CheckStatus::Pass)) {
            out.push_str(&format!(
                "     {} {}: expected {} got {}\n",
                c.module.as_deref().unwrap_or("ring"),
                serde_json::to_string(&c.fact).unwrap_or_default(),
                c.expected,
                c.actual
            ));
        }
    }
    out.trim_end().to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.text {
                out.text
            } else {
                serde_json::to_string_pretty(&out.report).expect("reports serialize")
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
