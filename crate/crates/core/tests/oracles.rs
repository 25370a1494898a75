//! Pinned values checked against brute-force oracles written from the
//! definitions, independent of the library algorithms.

use samod_core::exchange::{exchange_partition, TupleSpace};
use samod_core::extensions::extension_report;
use samod_core::fixtures::fixture;
use samod_core::lattice::{enumerate_sa_in_v, enumerate_submodules, submodule_of, subtractive_hull, whole};
use samod_core::retraction::{build_from_retraction, RetractionSpec};
use samod_core::FiniteModule;

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |bits| (0..n).filter(|i| bits >> i & 1 == 1).collect())
}

fn is_submodule(m: &FiniteModule, s: &[usize]) -> bool {
    s.contains(&m.zero())
        && s.iter().all(|&a| s.iter().all(|&b| s.contains(&m.add(a, b))))
        && s.iter().all(|&a| (0..m.ring().size()).all(|l| s.contains(&m.act(l, a))))
}

/// `x + y ∈ W ⇒ x, y ∈ W` for all `x, y ∈ V`.
fn is_sa(m: &FiniteModule, s: &[usize]) -> bool {
    m.elements().all(|x| m.elements().all(|y| !s.contains(&m.add(x, y)) || (s.contains(&x) && s.contains(&y))))
}

/// `x, x + y ∈ T ⇒ y ∈ T`.
fn is_subtractive(m: &FiniteModule, s: &[usize]) -> bool {
    s.iter().all(|&x| m.elements().all(|y| !s.contains(&m.add(x, y)) || s.contains(&y)))
}

fn scan(m: &FiniteModule) -> (usize, usize) {
    let subs: Vec<Vec<usize>> = subsets(m.size()).filter(|s| is_submodule(m, s)).collect();
    let sa = subs.iter().filter(|s| is_sa(m, s)).count();
    (subs.len(), sa)
}

fn hull_oracle(m: &FiniteModule, d: &[usize]) -> Vec<usize> {
    subsets(m.size())
        .filter(|s| d.iter().all(|x| s.contains(x)) && is_submodule(m, s) && is_subtractive(m, s))
        .min_by_key(|s| s.len())
        .expect("V itself qualifies")
}

/// Exchange classes from the transitive closure of the one-step relation.
fn exchange_oracle(m: &FiniteModule, a1: &[usize], a2: &[usize]) -> Vec<Vec<bool>> {
    let tuples: Vec<(usize, usize)> = a1.iter().flat_map(|&x| a2.iter().map(move |&y| (x, y))).collect();
    let n = tuples.len();
    let common: Vec<usize> = a1.iter().copied().filter(|x| a2.contains(x)).collect();
    let mut rel = vec![vec![false; n]; n];
    for (i, &(x1, x2)) in tuples.iter().enumerate() {
        rel[i][i] = true;
        for (j, &(y1, y2)) in tuples.iter().enumerate() {
            // (c + d, a₂) and (c, a₂ + d), in either coordinate order
            if common.iter().any(|&d| (x1 == m.add(y1, d) && y2 == m.add(x2, d)) || (y1 == m.add(x1, d) && x2 == m.add(y2, d))) {
                rel[i][j] = true;
                rel[j][i] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    rel
}

fn oracle_am(m: &FiniteModule, a1: &[usize], a2: &[usize]) -> (bool, usize) {
    let rel = exchange_oracle(m, a1, a2);
    let tuples: Vec<(usize, usize)> = a1.iter().flat_map(|&x| a2.iter().map(move |&y| (x, y))).collect();
    let classes = (0..tuples.len()).filter(|&i| (0..i).all(|j| !rel[i][j])).count();
    let am = (0..tuples.len()).all(|i| {
        (0..tuples.len()).all(|j| {
            let (s, t) = (m.add(tuples[i].0, tuples[i].1), m.add(tuples[j].0, tuples[j].1));
            s != t || rel[i][j]
        })
    });
    (am, classes)
}

#[test]
fn submodule_and_sa_counts_match_subset_scan() {
    // NSAT4 has no pinned SA count; only the oracle decides it
    for (name, subs, sa) in [("B2", 7, Some(4)), ("C3", 4, Some(3)), ("NSAT4", 4, None)] {
        let m = fixture(name).unwrap();
        let all = enumerate_submodules(&m).unwrap();
        let v = whole(&m);
        let found_sa = enumerate_sa_in_v(&all, &v, &all[0]).unwrap().len();
        let (o_subs, o_sa) = scan(&m);
        assert_eq!(o_subs, subs, "{name} oracle");
        assert_eq!(sa.unwrap_or(o_sa), o_sa, "{name} oracle");
        assert_eq!((all.len(), found_sa), (o_subs, o_sa), "{name}");
    }
}

#[test]
fn hull_pins_match_oracle() {
    for (name, d, want) in [("C3", vec![0, 2], vec![0, 1, 2]), ("C4", vec![0, 1], vec![0, 1]), ("NSAT4", vec![0, 3], vec![0, 1, 2, 3])] {
        let m = fixture(name).unwrap();
        let h = subtractive_hull(&submodule_of(&m, &d).unwrap());
        assert_eq!(hull_oracle(&m, &d), want, "{name} oracle");
        assert_eq!(h.to_vec(), want, "{name}");
    }
}

#[test]
fn amalgamation_pins() {
    let b2 = fixture("B2").unwrap();
    let sp = TupleSpace::new(vec![submodule_of(&b2, &[0, 1]).unwrap(), submodule_of(&b2, &[0, 2]).unwrap()]).unwrap();
    let v = exchange_partition(&sp).unwrap().amalgamation();
    assert!(v.has_am);
    assert_eq!(oracle_am(&b2, &[0, 1], &[0, 2]), (true, v.class_count));

    let c3 = fixture("C3").unwrap();
    let sp = TupleSpace::new(vec![submodule_of(&c3, &[0, 1]).unwrap(), submodule_of(&c3, &[0, 2]).unwrap()]).unwrap();
    let v = exchange_partition(&sp).unwrap().amalgamation();
    assert!(!v.has_am);
    assert_eq!(v.certificate, Some((vec![0, 2], vec![1, 2])));
    assert_eq!(oracle_am(&c3, &[0, 1], &[0, 2]), (false, v.class_count));
}

#[test]
fn saturated_extension_in_c4() {
    let c4 = fixture("C4").unwrap();
    let a = submodule_of(&c4, &[0, 1, 3]).unwrap();
    let d = submodule_of(&c4, &[0, 1]).unwrap();
    let rep = extension_report(&a, &d, Some(&d)).unwrap();
    assert!(rep.is_sa_extension && rep.is_complementary && rep.is_saturated, "{rep:?}");
    let sp = TupleSpace::new(vec![a, d]).unwrap();
    let v = exchange_partition(&sp).unwrap().amalgamation();
    assert!(v.has_am);
    assert_eq!(v.class_count, 3);
    assert_eq!(oracle_am(&c4, &[0, 1, 3], &[0, 1]), (true, 3));
}

#[test]
fn v5_retraction_monoid() {
    let spec = RetractionSpec::from_phi(vec![0, 1, 2, 1, 1], vec![0, 1, 2]);
    let (m, rep) = build_from_retraction(&spec).unwrap();
    assert!(rep.ok(), "{rep:?}");
    assert_eq!(m.size(), 5);
    let (a, b) = (3, 4);
    assert_eq!(m.add(a, b), 1);
    assert_eq!(m.add(a, 2), 2);
    assert_eq!(m.add(a, 0), a);
    // oracle: upper bound, v + v = φ(v), convex fibers under ≤_V
    let le = |x: usize, y: usize| m.elements().any(|z| m.add(x, z) == y);
    let anti = m.elements().all(|x| m.elements().all(|y| !(le(x, y) && le(y, x)) || x == y));
    assert!(anti);
    assert!(m.elements().all(|v| m.add(v, v) == spec.phi[v]));
    for x in m.elements() {
        for y in m.elements() {
            for z in m.elements() {
                if spec.phi[x] == spec.phi[z] && le(x, y) && le(y, z) {
                    assert_eq!(spec.phi[y], spec.phi[x], "fiber of {x} not convex at {y}");
                }
            }
        }
    }
}
