use proptest::prelude::*;
use samod_core::exchange::{exchange_partition, TupleSpace};
use samod_core::fixtures::fixture;
use samod_core::lattice::{enumerate_submodules, generate};
use samod_core::{FiniteModule, Mask};
use std::collections::BTreeSet;

const MODULES: [&str; 6] = ["B2", "C3", "C4", "NSAT4", "FREE(BOOL,2)", "PRODUCT(CHAIN(1),CHAIN(2))"];
const MAX_TUPLES: usize = 120;

fn to_mask(s: &BTreeSet<usize>) -> Mask {
    s.iter().fold(Mask::EMPTY, |m, &x| m.with(x))
}

fn set() -> impl Strategy<Value = BTreeSet<usize>> {
    proptest::collection::btree_set(0usize..256, 0..40)
}

/// Transitive closure of the one-step exchange relation, by Warshall.
fn oracle_classes(m: &FiniteModule, factors: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for f in factors {
        tuples = tuples.iter().flat_map(|t| f.iter().map(move |&x| [t.clone(), vec![x]].concat())).collect();
    }
    let n = tuples.len();
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        rel[i][i] = true;
    }
    let k = factors.len();
    for (ia, a) in tuples.iter().enumerate() {
        for (ib, b) in tuples.iter().enumerate() {
            // a = (.., c + d at i, .., e at j, ..), b = (.., c at i, .., e + d at j, ..)
            // an absorbing step may leave a coordinate unchanged
            let hit = (0..k).any(|i| {
                (0..k).any(|j| {
                    i != j
                        && (0..k).all(|p| p == i || p == j || a[p] == b[p])
                        && factors[i]
                            .iter()
                            .filter(|d| factors[j].contains(d))
                            .any(|&d| a[i] == m.add(b[i], d) && b[j] == m.add(a[j], d))
                })
            });
            if hit {
                rel[ia][ib] = true;
                rel[ib][ia] = true;
            }
        }
    }
    for p in 0..n {
        for i in 0..n {
            if rel[i][p] {
                for j in 0..n {
                    if rel[p][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    let mut seen = vec![false; n];
    let mut classes = vec![];
    for i in 0..n {
        if !seen[i] {
            let c: Vec<usize> = (0..n).filter(|&j| rel[i][j]).collect();
            c.iter().for_each(|&j| seen[j] = true);
            classes.push(c);
        }
    }
    classes.into_iter().map(|c| c.into_iter().map(|i| tuples[i].iter().fold(0, |h, &x| h * 1000 + x)).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mask_ops_agree_with_btreeset(a in set(), b in set()) {
        let (ma, mb) = (to_mask(&a), to_mask(&b));
        prop_assert_eq!(ma.union(mb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!(ma.intersect(mb).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!(ma.minus(mb).to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!(ma.is_subset(&mb), a.is_subset(&b));
        prop_assert_eq!(ma.is_disjoint(&mb), a.is_disjoint(&b));
        prop_assert_eq!(ma.len(), a.len());
        prop_assert_eq!(ma.first(), a.first().copied());
        let json = serde_json::to_string(&ma).unwrap();
        prop_assert_eq!(serde_json::from_str::<Mask>(&json).unwrap(), ma);
    }

    #[test]
    fn union_find_matches_relation_closure(
        which in 0..MODULES.len(),
        gens in proptest::collection::vec(any::<u64>(), 2..4),
    ) {
        let m = fixture(MODULES[which]).unwrap();
        let factors: Vec<_> = gens.iter().map(|&g| generate(&m, Mask::from_u64(g).intersect(Mask::full(m.size())))).collect();
        let Ok(space) = TupleSpace::with_cap(factors.clone(), MAX_TUPLES) else { return Ok(()) };
        let part = exchange_partition(&space).unwrap();
        let key = |t: &[usize]| t.iter().fold(0, |h, &x| h * 1000 + x);
        let mut got: Vec<Vec<usize>> = part
            .classes()
            .iter()
            .map(|c| { let mut v: Vec<usize> = c.iter().map(|&i| key(&space.tuple(i))).collect(); v.sort(); v })
            .collect();
        got.sort();
        let elems: Vec<Vec<usize>> = factors.iter().map(|f| f.to_vec()).collect();
        let mut want = oracle_classes(&m, &elems);
        want.iter_mut().for_each(|c| c.sort());
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn submodule_lattice_is_closed(which in 0..MODULES.len(), i in any::<usize>(), j in any::<usize>()) {
        let m = fixture(MODULES[which]).unwrap();
        let all = enumerate_submodules(&m).unwrap();
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        let (s, t) = (a.sum(b).unwrap(), a.intersect(b).unwrap());
        prop_assert!(all.iter().any(|x| x.mask() == s.mask()));
        prop_assert!(all.iter().any(|x| x.mask() == t.mask()));
        prop_assert!(a.is_subset(&s) && b.is_subset(&s));
        prop_assert!(t.is_subset(a) && t.is_subset(b));
        // the sum is the least submodule containing both
        for x in &all {
            if a.is_subset(x) && b.is_subset(x) {
                prop_assert!(s.is_subset(x));
            }
        }
    }
}
