//! Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
//!
//! Criterion 6 reports FAIL because the registry contains claims that are
//! false as stated; the run only aborts when a violation falls outside that
//! known-false set or a quota is missed.

use samod_core::exchange::{exchange_partition, TupleSpace};
use samod_core::extensions::extension_report;
use samod_core::fixtures::{fixture, retraction_spec};
use samod_core::harness::{closure_crosscheck, generate_instances, registry, run_suite, Status};
use samod_core::lattice::{enumerate_sa_in_v, enumerate_submodules, submodule_of, subtractive_hull, whole};
use samod_core::retraction::build_from_retraction;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

const CROSSCHECK_SEED: u64 = 7;
const CROSSCHECK_BUDGET: usize = 100;
const MIN_SPACES: usize = 200;
const MAX_SPACE_TUPLES: usize = 400;
const CROSSCHECK_LIMIT: Duration = Duration::from_secs(60);

const SUITE_SEED: u64 = 42;
const SUITE_INSTANCES: usize = 500;
const MIN_NON_VACUOUS: usize = 20;
const SUITE_LIMIT: Duration = Duration::from_secs(600);

struct Verdict {
    pass: bool,
    /// A failure that is documented and expected.
    tolerated: bool,
}

fn line(n: usize, pass: bool, detail: String) -> Verdict {
    println!("criterion {n}: {} {detail}", if pass { "PASS" } else { "FAIL" });
    Verdict { pass, tolerated: false }
}

fn counts() -> Verdict {
    let mut got = vec![];
    for name in ["B2", "C3", "NSAT4"] {
        let m = fixture(name).unwrap();
        let all = enumerate_submodules(&m).unwrap();
        let sa = enumerate_sa_in_v(&all, &whole(&m), &all[0]).unwrap().len();
        got.push((name, all.len(), sa));
    }
    let pass = got[0].1 == 7 && got[0].2 == 4 && got[1].1 == 4 && got[1].2 == 3 && got[2].1 == 4;
    line(1, pass, format!("(module, submodules, SA) = {got:?}"))
}

fn hulls() -> Verdict {
    let pins: [(&str, &[usize], &[usize]); 3] =
        [("C3", &[0, 2], &[0, 1, 2]), ("C4", &[0, 1], &[0, 1]), ("NSAT4", &[0, 3], &[0, 1, 2, 3])];
    let mut bad = vec![];
    for (name, d, want) in pins {
        let m = fixture(name).unwrap();
        let h = subtractive_hull(&submodule_of(&m, d).unwrap()).to_vec();
        if h != want {
            bad.push((name, h));
        }
    }
    line(2, bad.is_empty(), format!("mismatches {bad:?}"))
}

fn amalgamation() -> Verdict {
    let b2 = fixture("B2").unwrap();
    let sp = TupleSpace::new(vec![submodule_of(&b2, &[0, 1]).unwrap(), submodule_of(&b2, &[0, 2]).unwrap()]).unwrap();
    let b = exchange_partition(&sp).unwrap().amalgamation();
    let c3 = fixture("C3").unwrap();
    let sp = TupleSpace::new(vec![submodule_of(&c3, &[0, 1]).unwrap(), submodule_of(&c3, &[0, 2]).unwrap()]).unwrap();
    let c = exchange_partition(&sp).unwrap().amalgamation();
    let pass = b.has_am && !c.has_am && c.certificate == Some((vec![0, 2], vec![1, 2]));
    line(3, pass, format!("B2 AM {}, C3 AM {} certificate {:?}", b.has_am, c.has_am, c.certificate))
}

fn saturated() -> Verdict {
    let c4 = fixture("C4").unwrap();
    let a = submodule_of(&c4, &[0, 1, 3]).unwrap();
    let d = submodule_of(&c4, &[0, 1]).unwrap();
    let rep = extension_report(&a, &d, Some(&d)).unwrap();
    let sp = TupleSpace::new(vec![a, d]).unwrap();
    let am = exchange_partition(&sp).unwrap().amalgamation();
    let pass = rep.is_sa_extension && rep.is_complementary && rep.is_saturated && am.has_am && am.class_count == 3;
    line(
        4,
        pass,
        format!(
            "ext {} complementary {} saturated {} AM {} classes {}",
            rep.is_sa_extension, rep.is_complementary, rep.is_saturated, am.has_am, am.class_count
        ),
    )
}

fn closure() -> Verdict {
    let start = Instant::now();
    let rep = closure_crosscheck(CROSSCHECK_SEED, CROSSCHECK_BUDGET).unwrap();
    let took = start.elapsed();
    let pass = rep.ok() && rep.spaces >= MIN_SPACES && rep.largest <= MAX_SPACE_TUPLES && took < CROSSCHECK_LIMIT;
    line(
        5,
        pass,
        format!(
            "{} spaces (largest {}), {} vs congruence, mismatches {}+{}, {:.1?}",
            rep.spaces,
            rep.largest,
            rep.congruence_checked,
            rep.bfs_mismatches.len(),
            rep.congruence_mismatches.len(),
            took
        ),
    )
}

fn suite() -> Verdict {
    let specs = generate_instances(SUITE_SEED, SUITE_INSTANCES);
    let r = run_suite("all", &specs).unwrap();
    let checked: Vec<_> = registry().iter().filter(|t| !matches!(t.status, Status::VacuousByDesign(_))).map(|t| t.id).collect();
    let short: Vec<&str> = r
        .theorems
        .iter()
        .filter(|t| checked.contains(&t.id.as_str()) && t.non_vacuous < MIN_NON_VACUOUS)
        .map(|t| t.id.as_str())
        .collect();
    let ids = r.violating_ids();
    let unexpected: Vec<&str> = ids.iter().copied().filter(|id| !r.tally(id).unwrap().known_false).collect();
    let quotas = r.instances_run >= SUITE_INSTANCES && short.is_empty() && r.wall_time < SUITE_LIMIT;
    let pass = quotas && ids.is_empty();
    let mut v = line(
        6,
        pass,
        format!(
            "{} instances, {:.1?}, below quota {short:?}, violated {ids:?}, unexpected {unexpected:?}",
            r.instances_run, r.wall_time
        ),
    );
    v.tolerated = quotas && unexpected.is_empty();
    v
}

fn retraction() -> Verdict {
    let spec = retraction_spec("V5").unwrap();
    let (m, rep) = build_from_retraction(&spec).unwrap();
    let (a, b) = (3, 4);
    let pass = m.size() == 5 && m.add(a, b) == 1 && rep.upper_bound && rep.fiber_convex && rep.doubling && rep.ok();
    line(
        7,
        pass,
        format!(
            "size {}, a+b = {}, u.b. {}, fibers convex {}, v+v = φ(v) {}",
            m.size(),
            m.add(a, b),
            rep.upper_bound,
            rep.fiber_convex,
            rep.doubling
        ),
    )
}

fn determinism() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_samod"))
            .args(["suite", "--seed", "42", "--budget", "500", "--json"])
            .output()
            .unwrap()
    };
    let (x, y) = (run(), run());
    let code = x.status.code();
    let pass = x.stdout == y.stdout && !x.stdout.is_empty() && code == y.status.code() && code != Some(2);
    line(8, pass, format!("{} bytes, exit {:?}", x.stdout.len(), code))
}

fn main() -> ExitCode {
    let verdicts =
        [counts(), hulls(), amalgamation(), saturated(), closure(), suite(), retraction(), determinism()];
    let hard = verdicts.iter().filter(|v| !v.pass && !v.tolerated).count();
    let passed = verdicts.iter().filter(|v| v.pass).count();
    println!("acceptance: {passed}/8 PASS, {hard} unexpected");
    if hard == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
