//! The suite runner, its JSON report and the exchange closure cross-check.

use super::registry::{resolve_suite, Status, Theorem};
use super::{trial_rng, Ctx, InstanceSpec, Outcome};
use crate::error::Result;
use crate::exchange::{exchange_partition, TupleSpace};
use crate::harness::generate_instances;
use crate::lattice::whole;
use crate::oracle::{bfs_partition, canonical_labels, congruence_partition};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::time::{Duration, Instant};

pub const SCHEMA_VERSION: u32 = 1;
/// Counterexamples kept per theorem; the tally counts all of them.
const KEPT_PER_THEOREM: usize = 5;
/// Largest tuple space in the closure cross-check.
const CROSSCHECK_TUPLES: usize = 400;
/// Largest tuple space also compared against the congruence oracle.
const CONGRUENCE_TUPLES: usize = 200;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremTally {
    pub id: String,
    pub claim: String,
    pub known_false: bool,
    pub non_vacuous: usize,
    pub vacuous: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteViolation {
    pub theorem: String,
    pub instance: InstanceSpec,
    pub counterexample: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub instances_run: usize,
    pub theorems: Vec<TheoremTally>,
    pub violations: Vec<SuiteViolation>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Ids with at least one violation, in registry order.
    pub fn violating_ids(&self) -> Vec<&str> {
        self.theorems.iter().filter(|t| t.violations > 0).map(|t| t.id.as_str()).collect()
    }

    pub fn tally(&self, id: &str) -> Option<&TheoremTally> {
        self.theorems.iter().find(|t| t.id == id)
    }
}

/// The versioned JSON document written by `samod suite --json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub seed: Option<u64>,
    pub budget: Option<usize>,
    pub result: SuiteResult,
}

impl Report {
    pub fn new(seed: Option<u64>, budget: Option<usize>, result: SuiteResult) -> Self {
        Report { schema_version: SCHEMA_VERSION, seed, budget, result }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::error::Error::Parse(e.to_string()))
    }
}

fn selected(spec: &InstanceSpec, th: &Theorem) -> bool {
    spec.suites.is_empty() || spec.suites.iter().any(|s| s == th.id || s == th.suite || s == "all")
}

type InstanceOutcome = Vec<Option<Outcome>>;

fn run_instance(spec: &InstanceSpec, theorems: &[&Theorem]) -> Result<InstanceOutcome> {
    let inst = spec.build()?;
    let ctx = Ctx::new(&inst)?;
    Ok(theorems
        .iter()
        .map(|th| match th.check {
            Some(check) if selected(spec, th) => Some(check(&ctx, &mut trial_rng(spec.seed, th.id))),
            _ => None,
        })
        .collect())
}

/// Runs the theorems selected by `suite` over `specs`. Instances are checked
/// in parallel and merged in input order, so the result depends only on the
/// inputs.
pub fn run_suite(suite: &str, specs: &[InstanceSpec]) -> Result<SuiteResult> {
    let start = Instant::now();
    let theorems = resolve_suite(suite)?;
    let outcomes: Vec<Result<InstanceOutcome>> = specs.par_iter().map(|s| run_instance(s, &theorems)).collect();

    let mut tallies: Vec<TheoremTally> = theorems
        .iter()
        .map(|t| TheoremTally {
            id: t.id.to_string(),
            claim: t.claim.to_string(),
            known_false: matches!(t.status, Status::KnownFalse(_)),
            non_vacuous: 0,
            vacuous: 0,
            violations: 0,
        })
        .collect();
    let mut kept: Vec<Vec<SuiteViolation>> = vec![Vec::new(); theorems.len()];
    for (spec, out) in specs.iter().zip(outcomes) {
        for (i, o) in out?.into_iter().enumerate() {
            let tally = &mut tallies[i];
            match o {
                None => {}
                Some(Outcome::Vacuous) => tally.vacuous += 1,
                Some(Outcome::Pass) => tally.non_vacuous += 1,
                Some(Outcome::Violation(cx)) => {
                    tally.non_vacuous += 1;
                    tally.violations += 1;
                    if kept[i].len() < KEPT_PER_THEOREM {
                        kept[i].push(SuiteViolation {
                            theorem: tally.id.clone(),
                            instance: spec.clone(),
                            counterexample: cx,
                        });
                    }
                }
            }
        }
    }
    Ok(SuiteResult {
        suite: suite.to_string(),
        instances_run: specs.len(),
        theorems: tallies,
        violations: kept.into_iter().flatten().collect(),
        wall_time: start.elapsed(),
    })
}

/// Union-find against breadth-first search and the congruence oracle.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub spaces: usize,
    pub largest: usize,
    pub bfs_mismatches: Vec<String>,
    pub congruence_checked: usize,
    pub congruence_mismatches: Vec<String>,
}

impl ClosureReport {
    pub fn ok(&self) -> bool {
        self.bfs_mismatches.is_empty() && self.congruence_mismatches.is_empty()
    }
}

/// Checks the exchange partition of every space of at most 400 tuples
/// over `budget` generated instances.
pub fn closure_crosscheck(seed: u64, budget: usize) -> Result<ClosureReport> {
    let specs = generate_instances(seed, budget);
    let per: Vec<Result<ClosureReport>> = specs
        .par_iter()
        .map(|spec| {
            let inst = spec.build()?;
            let mut rep = ClosureReport::default();
            // the declared spaces plus larger ones built from the whole module
            let mut spaces = spec.spaces.clone();
            for extra in [&["V", "V"][..], &["V", "T"], &["V", "A1", "T"], &["V", "V", "A2"]] {
                spaces.push(extra.iter().map(|s| s.to_string()).collect());
            }
            for names in &spaces {
                let factors: Vec<_> = names
                    .iter()
                    .filter_map(|n| if n == "V" { Some(whole(&inst.module)) } else { inst.selection(n) })
                    .collect();
                let Ok(space) = TupleSpace::with_cap(factors, CROSSCHECK_TUPLES) else { continue };
                let labels = canonical_labels(exchange_partition(&space)?.labels());
                let tag = format!("instance {} {}", spec.id, names.join("×"));
                rep.spaces += 1;
                rep.largest = rep.largest.max(space.len());
                if canonical_labels(&bfs_partition(&space)) != labels {
                    rep.bfs_mismatches.push(tag.clone());
                }
                if space.len() <= CONGRUENCE_TUPLES {
                    rep.congruence_checked += 1;
                    if canonical_labels(&congruence_partition(&space)) != labels {
                        rep.congruence_mismatches.push(tag);
                    }
                }
            }
            Ok(rep)
        })
        .collect();
    let mut out = ClosureReport::default();
    for r in per {
        let r = r?;
        out.spaces += r.spaces;
        out.largest = out.largest.max(r.largest);
        out.congruence_checked += r.congruence_checked;
        out.bfs_mismatches.extend(r.bfs_mismatches);
        out.congruence_mismatches.extend(r.congruence_mismatches);
    }
    Ok(out)
}
