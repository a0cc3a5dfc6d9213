//! Command logic shared by the binary and the examples: every command
//! produces a serializable report whose failure entries decide the exit code.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{AnickError, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::homology::{homotopy_failures, laurent_mismatches, reduced_matrix, tor_dims};
use crate::leavitt::{
    closed_form_mismatches, double_substitution_sum, laurent_graph, substitution_differential, DoubleSumMode,
    Leavitt,
};
use crate::resolution::{Augmentation, Resolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl std::str::FromStr for FieldChoice {
    type Err = AnickError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" || s == "Q" {
            return Ok(FieldChoice::Rational);
        }
        let p = s
            .strip_prefix("p=")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| AnickError::InvalidConfig(format!("field must be `rational` or `p=<prime>`, got `{s}`")))?;
        PrimeField::new(p)?;
        Ok(FieldChoice::Prime(p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AugmentationChoice {
    Zero,
    Unit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub field: FieldChoice,
    pub max_n: usize,
    pub max_deg: usize,
    pub augmentation: AugmentationChoice,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: FieldChoice::Rational,
            max_n: 4,
            max_deg: 6,
            augmentation: AugmentationChoice::Zero,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n < 1 {
            return Err(AnickError::InvalidConfig("max_n must be at least 1".into()));
        }
        if self.max_deg < 2 {
            return Err(AnickError::InvalidConfig("max_deg must be at least 2".into()));
        }
        if let FieldChoice::Prime(p) = self.field {
            PrimeField::new(p)?;
        }
        Ok(())
    }

    /// Degree cap for the engine: large enough for chains of degree
    /// `max_n + 1` with a short tail, and never below `max_deg`.
    fn engine_cap(&self) -> usize {
        self.max_deg.max(2 * self.max_n + 6)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsbReport {
    pub field: String,
    pub relations: usize,
    pub rules: Vec<String>,
    pub unresolved: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainsReport {
    pub max_n: usize,
    pub generic_counts: Vec<usize>,
    pub adjacency_counts: Vec<usize>,
    pub chains: Vec<Vec<String>>,
    pub discrepancies: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffEntry {
    pub n: usize,
    pub chain: String,
    pub engine: String,
    pub formula: String,
    pub formula_agrees: bool,
    pub fast_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub augmentation: AugmentationChoice,
    pub entries: Vec<DiffEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub field: String,
    pub augmentation: AugmentationChoice,
    pub tor: Vec<usize>,
    pub ranks: Vec<usize>,
    pub chain_counts: Vec<usize>,
    /// `(rows, cols)` of the reduced matrix in each degree.
    pub matrices: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub field: String,
    pub max_n: usize,
    pub max_deg: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentReport {
    pub chain_counts: Vec<usize>,
    pub formula_mismatches: Vec<String>,
    pub tor: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Gsb(GsbReport),
    Chains(ChainsReport),
    Diff(DiffReport),
    Homology(HomologyReport),
    Verify(VerifyReport),
    Laurent(LaurentReport),
}

impl Report {
    /// Failure entries; the run succeeds iff this is empty.
    pub fn failures(&self) -> Vec<String> {
        match self {
            Report::Gsb(r) => r.unresolved.clone(),
            Report::Chains(r) => r.discrepancies.clone(),
            Report::Diff(r) => r
                .entries
                .iter()
                .filter(|e| !e.formula_agrees || !e.fast_agrees)
                .map(|e| e.chain.clone())
                .collect(),
            Report::Homology(_) => Vec::new(),
            Report::Verify(r) => r.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect(),
            Report::Laurent(r) => r.formula_mismatches.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AnickError::InvalidConfig(format!("report document: {e}")))
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        match self {
            Report::Gsb(r) => {
                let _ = writeln!(s, "{} relations, {} rewrite rules over {}", r.relations, r.rules.len(), r.field);
                for rule in &r.rules {
                    let _ = writeln!(s, "  {rule}");
                }
                if r.unresolved.is_empty() {
                    let _ = writeln!(s, "all compositions resolve");
                } else {
                    for u in &r.unresolved {
                        let _ = writeln!(s, "unresolved composition: {u}");
                    }
                }
            }
            Report::Chains(r) => {
                for n in 0..=r.max_n {
                    let _ = writeln!(
                        s,
                        "n = {n}: {} chains (adjacency rule: {})",
                        r.generic_counts[n], r.adjacency_counts[n]
                    );
                    if r.chains[n].len() <= 40 {
                        for c in &r.chains[n] {
                            let _ = writeln!(s, "  {c}");
                        }
                    }
                }
                for d in &r.discrepancies {
                    let _ = writeln!(s, "discrepancy: {d}");
                }
            }
            Report::Diff(r) => {
                for e in &r.entries {
                    let mark = if e.formula_agrees && e.fast_agrees { "" } else { "  <-- differs" };
                    let _ = writeln!(s, "d_{}({} ⊗ 1) = {}{mark}", e.n, e.chain, e.engine);
                    if !e.formula_agrees {
                        let _ = writeln!(s, "    formula: {}", e.formula);
                    }
                    if !e.fast_agrees {
                        let _ = writeln!(s, "    fast form disagrees");
                    }
                }
            }
            Report::Homology(r) => {
                let _ = writeln!(s, "field {}, augmentation {:?}", r.field, r.augmentation);
                for (n, (rows, cols)) in r.matrices.iter().enumerate() {
                    let _ = writeln!(s, "  d̄_{n}: {rows} x {cols}, rank {}", r.ranks[n]);
                }
                for (i, d) in r.tor.iter().enumerate() {
                    let _ = writeln!(s, "Tor_{i} = {d}");
                }
            }
            Report::Verify(r) => {
                let _ = writeln!(s, "field {}, max_n {}, max_deg {}, seed {}", r.field, r.max_n, r.max_deg, r.seed);
                for c in &r.checks {
                    let _ = writeln!(s, "[{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
                }
            }
            Report::Laurent(r) => {
                let _ = writeln!(s, "chain counts: {:?}", r.chain_counts);
                if r.formula_mismatches.is_empty() {
                    let _ = writeln!(s, "closed formula agrees with the engine");
                }
                for m in &r.formula_mismatches {
                    let _ = writeln!(s, "mismatch: {m}");
                }
                for (i, d) in r.tor.iter().enumerate() {
                    let _ = writeln!(s, "Tor_{i} = {d}");
                }
            }
        }
        s
    }
}

/// The commands understood by [`run`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Gsb,
    Chains,
    Diff,
    Homology,
    Verify,
    Laurent,
}

/// Runs a command over the field selected in `cfg`.
pub fn run(cmd: Command, lv: &Leavitt, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    match cfg.field {
        FieldChoice::Rational => run_in(cmd, lv, cfg, Rationals),
        FieldChoice::Prime(p) => run_in(cmd, lv, cfg, PrimeField::new(p)?),
    }
}

/// Runs the Laurent command on the one-loop graph.
pub fn run_laurent(cfg: &RunConfig) -> Result<Report> {
    let lv = Leavitt::new(laurent_graph())?;
    run(Command::Laurent, &lv, cfg)
}

fn resolution<F: Field>(lv: &Leavitt, field: F, cfg: &RunConfig, aug: AugmentationChoice) -> Result<Resolution<F>> {
    let sys = lv.gsb(field.clone())?;
    let eps = match aug {
        AugmentationChoice::Zero => Augmentation::zero(&field, sys.alphabet()),
        AugmentationChoice::Unit => Augmentation::unit(&field, sys.alphabet()),
    };
    Resolution::new(sys, eps, cfg.engine_cap())
}

fn run_in<F: Field>(cmd: Command, lv: &Leavitt, cfg: &RunConfig, field: F) -> Result<Report> {
    match cmd {
        Command::Gsb => gsb_report(lv, field).map(Report::Gsb),
        Command::Chains => chains_report(lv, field, cfg).map(Report::Chains),
        Command::Diff => diff_report(lv, field, cfg).map(Report::Diff),
        Command::Homology => homology_report(lv, field, cfg).map(Report::Homology),
        Command::Verify => verify_report(lv, field, cfg).map(Report::Verify),
        Command::Laurent => laurent_report(lv, field, cfg).map(Report::Laurent),
    }
}

pub fn gsb_report<F: Field>(lv: &Leavitt, field: F) -> Result<GsbReport> {
    let relations = lv.presentation(&field).len();
    let sys = lv.gsb(field)?;
    let a = sys.alphabet();
    Ok(GsbReport {
        field: sys.field().name(),
        relations,
        rules: sys.rules().iter().map(|r| sys.render_rule(r)).collect(),
        unresolved: sys
            .check_compositions()
            .iter()
            .map(|o| format!("{} leaves {}", a.render(&o.word), o.difference.render(a)))
            .collect(),
    })
}

pub fn chains_report<F: Field>(lv: &Leavitt, field: F, cfg: &RunConfig) -> Result<ChainsReport> {
    let sys = lv.gsb(field)?;
    let sets = crate::chains::enumerate_all(cfg.max_n, &sys);
    let a = sys.alphabet();
    let mut report = ChainsReport {
        max_n: cfg.max_n,
        generic_counts: Vec::new(),
        adjacency_counts: Vec::new(),
        chains: Vec::new(),
        discrepancies: Vec::new(),
    };
    for (n, set) in sets.iter().enumerate() {
        let generic: BTreeSet<_> = set.chains().iter().cloned().collect();
        let adjacency: BTreeSet<_> = lv.adjacency_chains(n).into_iter().collect();
        for w in generic.symmetric_difference(&adjacency) {
            let side = if generic.contains(w) { "enumerator only" } else { "adjacency rule only" };
            report.discrepancies.push(format!("n = {n}: {} ({side})", a.render(w)));
        }
        report.generic_counts.push(generic.len());
        report.adjacency_counts.push(adjacency.len());
        report.chains.push(set.chains().iter().map(|w| a.render(w)).collect());
    }
    Ok(report)
}

pub fn diff_report<F: Field>(lv: &Leavitt, field: F, cfg: &RunConfig) -> Result<DiffReport> {
    let mut res = resolution(lv, field, cfg, cfg.augmentation)?;
    res.build(cfg.max_n)?;
    let a = res.system().alphabet().clone();
    let mut entries = Vec::new();
    for n in 1..=cfg.max_n {
        for c in res.chains(n)?.chains() {
            let engine = res.differential(n, c)?;
            let formula = match cfg.augmentation {
                AugmentationChoice::Zero => crate::leavitt::closed_form_differential(lv, &res, n, c),
                AugmentationChoice::Unit => substitution_differential(&res, n, c, true),
            };
            let fast = res.fast_differential_unchecked(n, c)?;
            entries.push(DiffEntry {
                n,
                chain: a.render(c),
                engine: engine.render(&a),
                formula: formula.render(&a),
                formula_agrees: &formula == engine,
                fast_agrees: &fast == engine,
            });
        }
    }
    Ok(DiffReport {
        augmentation: cfg.augmentation,
        entries,
    })
}

pub fn homology_report<F: Field>(lv: &Leavitt, field: F, cfg: &RunConfig) -> Result<HomologyReport> {
    let name = field.name();
    let mut res = resolution(lv, field, cfg, cfg.augmentation)?;
    let tor = tor_dims(&mut res, cfg.max_n)?;
    let mut matrices = Vec::new();
    for n in 0..=cfg.max_n {
        let m = reduced_matrix(&res, n)?;
        matrices.push((m.rows(), m.cols()));
    }
    Ok(HomologyReport {
        field: name,
        augmentation: cfg.augmentation,
        tor: tor.dims,
        ranks: tor.ranks,
        chain_counts: tor.chain_counts,
        matrices,
    })
}

pub fn laurent_report<F: Field>(lv: &Leavitt, field: F, cfg: &RunConfig) -> Result<LaurentReport> {
    let mut res = resolution(lv, field, cfg, AugmentationChoice::Unit)?;
    let tor = tor_dims(&mut res, cfg.max_n)?;
    Ok(LaurentReport {
        chain_counts: tor.chain_counts.clone(),
        formula_mismatches: laurent_mismatches(&res, cfg.max_n)?
            .into_iter()
            .map(|e| e.to_string())
            .collect(),
        tor: tor.dims,
    })
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

fn summarize(items: &[String]) -> String {
    let shown: Vec<&str> = items.iter().take(3).map(String::as_str).collect();
    let more = if items.len() > 3 { format!(" and {} more", items.len() - 3) } else { String::new() };
    format!("{} failing: {}{more}", items.len(), shown.join("; "))
}

/// Every check the library offers, for one graph and augmentation.
pub fn verify_report<F: Field>(lv: &Leavitt, field: F, cfg: &RunConfig) -> Result<VerifyReport> {
    let name = field.name();
    let mut checks = Vec::new();

    let gsb = gsb_report(lv, field.clone())?;
    checks.push(check(
        "compositions",
        gsb.unresolved.is_empty(),
        if gsb.unresolved.is_empty() {
            format!("{} rules, all compositions resolve", gsb.rules.len())
        } else {
            summarize(&gsb.unresolved)
        },
    ));
    if !gsb.unresolved.is_empty() {
        return Ok(VerifyReport {
            field: name,
            max_n: cfg.max_n,
            max_deg: cfg.max_deg,
            seed: cfg.seed,
            checks,
        });
    }

    let chains = chains_report(lv, field.clone(), cfg)?;
    checks.push(check(
        "chain adjacency",
        chains.discrepancies.is_empty(),
        if chains.discrepancies.is_empty() {
            format!("counts {:?}", chains.generic_counts)
        } else {
            summarize(&chains.discrepancies)
        },
    ));

    let mut res = resolution(lv, field, cfg, cfg.augmentation)?;
    let complex = res.verify_complex(cfg.max_n, cfg.max_deg)?;
    let complex_fail: Vec<String> = complex
        .composition_failures
        .iter()
        .map(|(n, c)| format!("d∘d at {c} (n = {n})"))
        .chain(complex.leading_term_failures.iter().map(|(n, c)| format!("leading term at {c} (n = {n})")))
        .chain(complex.exactness_failures.iter().map(|(n, e)| format!("exactness in degree {n}: {e}")))
        .collect();
    checks.push(check(
        "complex",
        complex_fail.is_empty(),
        if complex_fail.is_empty() {
            format!(
                "d∘d = 0 on {} chains; cycles lifted per degree from -1: {:?}",
                complex.chains_checked, complex.cycles_checked
            )
        } else {
            summarize(&complex_fail)
        },
    ));

    let formula_fail: Vec<String> = match cfg.augmentation {
        AugmentationChoice::Zero => closed_form_mismatches(lv, &res, cfg.max_n)?,
        AugmentationChoice::Unit => laurent_mismatches(&res, cfg.max_n)?,
    }
    .into_iter()
    .map(|e| match e {
        AnickError::FormulaMismatch { chain, .. } => chain,
        other => other.to_string(),
    })
    .collect();
    checks.push(check(
        "closed form",
        formula_fail.is_empty(),
        if formula_fail.is_empty() {
            "closed-form differentials equal the engine".to_string()
        } else {
            summarize(&formula_fail)
        },
    ));

    let mut fast_fail = Vec::new();
    for n in 1..=cfg.max_n {
        for c in res.chains(n)?.chains() {
            if res.fast_differential(n, c).is_err() {
                fast_fail.push(res.system().alphabet().render(c));
            }
        }
    }
    checks.push(check(
        "fast form",
        fast_fail.is_empty(),
        if fast_fail.is_empty() {
            "termwise projection equals the engine".to_string()
        } else {
            summarize(&fast_fail)
        },
    ));

    if cfg.augmentation == AugmentationChoice::Zero {
        let (mut nonzero, mut flipped) = (Vec::new(), 0usize);
        for n in 2..=cfg.max_n {
            for c in res.chains(n)?.chains() {
                if !double_substitution_sum(&res, n, c, DoubleSumMode::Words).is_zero() {
                    nonzero.push(res.system().alphabet().render(c));
                }
                if !double_substitution_sum(&res, n, c, DoubleSumMode::FlippedDiagonal).is_zero() {
                    flipped += 1;
                }
            }
        }
        let has_chains = (2..=cfg.max_n).any(|n| res.chain_sets().get(n).is_some_and(|s| !s.is_empty()));
        checks.push(check(
            "double substitution sum",
            nonzero.is_empty() && (flipped > 0 || !has_chains),
            if nonzero.is_empty() {
                format!("vanishes; flipped control nonzero on {flipped} chains")
            } else {
                summarize(&nonzero)
            },
        ));

        let hom = homotopy_failures(&mut res, cfg.max_n, &|x| lv.right_unit(x))?;
        checks.push(check(
            "contracting homotopy",
            hom.is_empty(),
            if hom.is_empty() {
                format!("identity holds through degree {}", cfg.max_n)
            } else {
                summarize(&hom)
            },
        ));
    }

    let tor = tor_dims(&mut res, cfg.max_n)?;
    let tor_ok = match cfg.augmentation {
        AugmentationChoice::Zero => tor.dims[1..].iter().all(|&d| d == 0),
        AugmentationChoice::Unit => true,
    };
    checks.push(check("tor", tor_ok, format!("dims {:?}", tor.dims)));

    let mut rng = Resolution::<F>::rng(cfg.seed);
    let mut section_fail = Vec::new();
    let top = cfg.max_n.min(3);
    for n in 0..=top {
        for _ in 0..100 {
            let omega = res.random_cycle(n, &mut rng, 2)?;
            match res.split(n, &omega).and_then(|s| res.apply_d(n, &s)) {
                Ok(back) if back == omega => {}
                Ok(_) => section_fail.push(format!("degree {n}: section property")),
                Err(e) => section_fail.push(format!("degree {n}: {e}")),
            }
        }
    }
    checks.push(check(
        "section",
        section_fail.is_empty(),
        if section_fail.is_empty() {
            format!("split is a section on 100 random cycles per degree 0..={top}")
        } else {
            summarize(&section_fail)
        },
    ));

    Ok(VerifyReport {
        field: res.field().name(),
        max_n: cfg.max_n,
        max_deg: cfg.max_deg,
        seed: cfg.seed,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leavitt::suite;

    #[test]
    fn field_choice_parsing() {
        assert_eq!("rational".parse::<FieldChoice>().unwrap(), FieldChoice::Rational);
        assert_eq!("p=101".parse::<FieldChoice>().unwrap(), FieldChoice::Prime(101));
        assert!("p=100".parse::<FieldChoice>().is_err());
        assert!("real".parse::<FieldChoice>().is_err());
    }

    #[test]
    fn machine_output_round_trips() {
        let lv = Leavitt::new(suite()[2].1.clone()).unwrap();
        let cfg = RunConfig {
            max_n: 2,
            ..RunConfig::default()
        };
        for cmd in [Command::Gsb, Command::Chains, Command::Homology, Command::Diff] {
            let r = run(cmd, &lv, &cfg).unwrap();
            assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        }
    }

    #[test]
    fn unit_augmentation_rejected_off_the_loop() {
        let lv = Leavitt::new(suite()[2].1.clone()).unwrap();
        let cfg = RunConfig {
            augmentation: AugmentationChoice::Unit,
            ..RunConfig::default()
        };
        assert!(matches!(
            run(Command::Homology, &lv, &cfg),
            Err(AnickError::InvalidAugmentation { .. })
        ));
    }
}
