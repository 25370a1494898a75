use samod_core::fixtures::fixture;
use samod_core::harness::{
    generate_instances, hierarchy_pipeline, registry, run_suite, InstanceSpec, Report, Status,
};
use std::collections::BTreeMap;

const GOLDEN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/instances_seed1_budget3.json");

fn pinned(module: &str, sel: &[(&str, &[usize])]) -> InstanceSpec {
    let map: BTreeMap<String, Vec<usize>> = sel.iter().map(|(k, v)| (k.to_string(), v.to_vec())).collect();
    InstanceSpec::pinned(module, map)
}

#[test]
fn generator_matches_golden_file() {
    let specs = generate_instances(1, 3);
    assert_eq!(specs.len(), 3);
    let json = serde_json::to_string_pretty(&specs).unwrap();
    if std::env::var_os("SAMOD_BLESS").is_some() {
        std::fs::create_dir_all(std::path::Path::new(GOLDEN).parent().unwrap()).unwrap();
        std::fs::write(GOLDEN, &json).unwrap();
    }
    let golden = std::fs::read_to_string(GOLDEN).expect("golden file; regenerate with SAMOD_BLESS=1");
    assert_eq!(json.trim(), golden.trim());
    let back: Vec<InstanceSpec> = serde_json::from_str(&golden).unwrap();
    assert_eq!(back, specs);
}

#[test]
fn generator_edge_cases() {
    assert!(generate_instances(9, 0).is_empty());
    assert_eq!(generate_instances(9, 12), generate_instances(9, 12));
    assert_ne!(generate_instances(9, 12), generate_instances(10, 12));
}

#[test]
fn unique_complement_in_b2_passes() {
    let spec = pinned("B2", &[("W", &[0, 1]), ("D", &[0])]);
    let r = run_suite("T6.5", &[spec]).unwrap();
    assert!(r.passed());
    assert_eq!(r.tally("T6.5").unwrap().non_vacuous, 1);
}

#[test]
fn saturated_pair_in_c4_passes() {
    let spec = pinned("C4", &[("A", &[0, 1, 3]), ("D", &[0, 1]), ("T", &[0, 1])]);
    let r = run_suite("T7.7", &[spec]).unwrap();
    assert!(r.passed(), "{:?}", r.violations);
    assert_eq!(r.tally("T7.7").unwrap().non_vacuous, 1);
}

#[test]
fn failed_hypothesis_counts_as_vacuous() {
    // W₁ ∩ A₂ = {0,1} is not inside W₂ = {0}
    let spec = pinned("C3", &[("A1", &[0, 1, 2]), ("A2", &[0, 1, 2]), ("W1", &[0, 1]), ("W2", &[0])]);
    let r = run_suite("T3.1", &[spec]).unwrap();
    let t = r.tally("T3.1").unwrap();
    assert_eq!((t.non_vacuous, t.vacuous, t.violations), (0, 1, 0));
    assert!(r.passed());
}

#[test]
fn known_counterexamples_are_reported() {
    let p81 = pinned("B2", &[("A", &[0, 1]), ("D", &[0]), ("T", &[0, 2]), ("U'", &[0, 1, 3])]);
    let r = run_suite("P8.1", &[p81]).unwrap();
    assert_eq!(r.violating_ids(), ["P8.1"]);
    let t77 = pinned("C4", &[("A", &[0, 3]), ("D", &[0]), ("T", &[0, 1])]);
    let r = run_suite("T7.7", &[t77]).unwrap();
    assert_eq!(r.violating_ids(), ["T7.7"]);
}

#[test]
fn report_round_trips_and_violations_replay() {
    let specs = generate_instances(3, 40);
    let result = run_suite("T7.9am,P6.4", &specs).unwrap();
    let report = Report::new(Some(3), Some(40), result);
    let json = report.to_json();
    let back = Report::from_json(&json).unwrap();
    assert_eq!(back.schema_version, 1);
    assert_eq!(back.result.theorems, report.result.theorems);
    assert_eq!(back.result.violations, report.result.violations);
    assert!(!back.result.violations.is_empty(), "expected a T7.9am counterexample in 40 instances");
    for v in &back.result.violations {
        let spec: InstanceSpec = serde_json::from_value(serde_json::to_value(&v.instance).unwrap()).unwrap();
        let again = run_suite(&v.theorem, std::slice::from_ref(&spec)).unwrap();
        assert_eq!(again.violations[0].counterexample, v.counterexample);
    }
}

#[test]
fn suite_is_deterministic() {
    let specs = generate_instances(42, 30);
    let a = Report::new(Some(42), Some(30), run_suite("all", &specs).unwrap()).to_json();
    let b = Report::new(Some(42), Some(30), run_suite("all", &specs).unwrap()).to_json();
    assert_eq!(a, b);
}

#[test]
fn registry_statuses() {
    let reg = registry();
    let vacuous: Vec<_> = reg.iter().filter(|t| matches!(t.status, Status::VacuousByDesign(_))).map(|t| t.id).collect();
    assert_eq!(vacuous, ["S4.9"]);
    assert!(reg.iter().all(|t| !t.claim.is_empty()));
}

#[test]
fn hierarchy_single_factor_is_trivial() {
    let c3 = fixture("C3").unwrap();
    let rep = hierarchy_pipeline(&c3, &[vec![0, 1, 2]], &[vec![2]]).unwrap();
    assert_eq!(rep.amalgam_size, 3);
    assert_eq!(rep.cbar_sum, vec![0, 1, 2]);
    assert!(rep.ok());
}

#[test]
fn hierarchy_two_chains_in_c3() {
    let c3 = fixture("C3").unwrap();
    let rep = hierarchy_pipeline(&c3, &[vec![0, 1], vec![0, 2]], &[vec![1], vec![2]]).unwrap();
    assert_eq!(rep.amalgam_size, 4);
    assert!(!rep.kappa_injective);
    // brute force inside the amalgam: C̄(S) = {z | ∃ s ∈ S: z + s ≤ s}
    let v = fixture("AMALGAM(C3,{0,1},{0,2})").unwrap();
    let le = |x: usize, y: usize| v.elements().any(|z| v.add(x, z) == y);
    let direct: Vec<usize> = v.elements().filter(|&z| rep.s.iter().any(|&s| le(v.add(z, s), s))).collect();
    assert_eq!(rep.cbar_sum, direct);
    assert!(rep.ok(), "{rep:?}");
}

#[test]
fn hierarchy_nested_factors_collapse() {
    let c4 = fixture("C4").unwrap();
    let rep = hierarchy_pipeline(&c4, &[vec![0, 1, 2, 3], vec![0, 1]], &[vec![2], vec![1]]).unwrap();
    assert_eq!(rep.amalgam_size, 4);
    assert!(rep.kappa_injective);
    let le = |x: usize, y: usize| c4.elements().any(|z| c4.add(x, z) == y);
    let s: Vec<usize> = vec![2];
    let direct: Vec<usize> = c4.elements().filter(|&z| s.iter().any(|&s| le(c4.add(z, s), s))).collect();
    assert_eq!(rep.cbar_sum, direct);
}
