//! Slow reference implementations used to cross-check the main algorithms.
//!
//! Each function recomputes its answer straight from a definition, without
//! sharing code paths with the routine it checks.

use crate::algebra::SemiringTable;
use crate::exchange::TupleSpace;
use crate::lattice::Submodule;
use crate::mask::Mask;
use std::collections::VecDeque;

/// Relabels a partition so classes are numbered by first occurrence.
pub fn canonical_labels(labels: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect()
}

/// Whether `u` arises from `t` by one basic `(i, j)`-exchange.
fn one_step(space: &TupleSpace<'_>, t: &[usize], u: &[usize]) -> bool {
    let m = space.module();
    let n = t.len();
    for i in 0..n {
        for j in 0..n {
            if i == j || (0..n).any(|k| k != i && k != j && t[k] != u[k]) {
                continue;
            }
            for d in space.intersection(i, j).iter() {
                if m.add(u[i], d) == t[i] && u[j] == m.add(t[j], d) {
                    return true;
                }
            }
        }
    }
    false
}

/// Exchange classes by breadth-first search over pairwise adjacency.
pub fn bfs_partition(space: &TupleSpace<'_>) -> Vec<usize> {
    let n = space.len();
    let tuples: Vec<Vec<usize>> = (0..n).map(|i| space.tuple(i)).collect();
    let mut adj = vec![Vec::new(); n];
    for a in 0..n {
        for b in (a + 1)..n {
            let diff = tuples[a].iter().zip(&tuples[b]).filter(|(x, y)| x != y).count();
            if diff <= 2 && (one_step(space, &tuples[a], &tuples[b]) || one_step(space, &tuples[b], &tuples[a])) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if label[y] == usize::MAX {
                    label[y] = next;
                    queue.push_back(y);
                }
            }
        }
        next += 1;
    }
    label
}

/// The smallest equivalence on the product that contains every pair
/// `(d at i, d at j)` for `d ∈ Aᵢ ∩ Aⱼ` and is stable under adding a tuple.
pub fn congruence_partition(space: &TupleSpace<'_>) -> Vec<usize> {
    let m = space.module();
    let n = space.len();
    let tuples: Vec<Vec<usize>> = (0..n).map(|i| space.tuple(i)).collect();
    let plus = |a: usize, b: usize| -> usize {
        let s: Vec<usize> = tuples[a].iter().zip(&tuples[b]).map(|(&x, &y)| m.add(x, y)).collect();
        space.index_of(&s).expect("factors are submodules")
    };
    let mut label: Vec<usize> = (0..n).collect();
    let merge = |label: &mut Vec<usize>, a: usize, b: usize| -> bool {
        let (la, lb) = (label[a], label[b]);
        if la == lb {
            return false;
        }
        let (keep, drop) = (la.min(lb), la.max(lb));
        for l in label.iter_mut() {
            if *l == drop {
                *l = keep;
            }
        }
        true
    };
    let arity = space.arity();
    let zero = m.zero();
    for i in 0..arity {
        for j in 0..arity {
            if i == j {
                continue;
            }
            for d in space.intersection(i, j).iter() {
                let place = |k: usize| {
                    let t: Vec<usize> = (0..arity).map(|c| if c == k { d } else { zero }).collect();
                    space.index_of(&t).expect("zero in every factor")
                };
                merge(&mut label, place(i), place(j));
            }
        }
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            let rep = label.iter().position(|&l| l == label[a]).expect("own label");
            if rep == a {
                continue;
            }
            for u in 0..n {
                changed |= merge(&mut label, plus(a, u), plus(rep, u));
            }
        }
        if !changed {
            return canonical_labels(&label);
        }
    }
}

/// Intersection of every subtractive submodule containing `d`.
pub fn subtractive_hull_oracle(all: &[Submodule<'_>], d: &Submodule<'_>) -> Mask {
    let m = d.module();
    let subtractive = |t: Mask| {
        m.elements().all(|x| t.contains(x) || t.iter().all(|a| t.iter().all(|b| m.add(x, a) != b)))
    };
    all.iter()
        .map(|t| t.mask())
        .filter(|&t| d.mask().is_subset(&t) && subtractive(t))
        .fold(m.all(), |acc, t| acc.intersect(t))
}

/// Intersection of every submodule SA in the whole module containing `d`.
pub fn sa_closure_oracle(all: &[Submodule<'_>], d: &Submodule<'_>) -> Mask {
    let m = d.module();
    let sa = |w: Mask| m.elements().all(|x| m.elements().all(|y| !w.contains(m.add(x, y)) || (w.contains(x) && w.contains(y))));
    all.iter()
        .map(|t| t.mask())
        .filter(|&t| d.mask().is_subset(&t) && sa(t))
        .fold(m.all(), |acc, t| acc.intersect(t))
}

/// The smallest subsemiring that is SA in `(R, +)`, by subset scan.
pub fn smallest_sa_subsemiring(r: &SemiringTable) -> Option<Mask> {
    let n = r.size();
    if n > 16 {
        return None;
    }
    let mut acc = Mask::full(n);
    for bits in 0u64..(1 << n) {
        let s = Mask::from_u64(bits);
        let sub = s.contains(r.zero())
            && s.contains(r.one())
            && s.iter().all(|a| s.iter().all(|b| s.contains(r.add(a, b)) && s.contains(r.mul(a, b))));
        let absorbing = (0..n).all(|a| (0..n).all(|b| !s.contains(r.add(a, b)) || (s.contains(a) && s.contains(b))));
        if sub && absorbing {
            acc = acc.intersect(s);
        }
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::exchange_partition;
    use crate::fixtures::fixture;
    use crate::lattice::{enumerate_submodules, submodule_of};

    #[test]
    fn oracles_on_worked_spaces() {
        let c4 = fixture("C4").unwrap();
        let s = TupleSpace::new(vec![submodule_of(&c4, &[0, 1, 3]).unwrap(), submodule_of(&c4, &[0, 1]).unwrap()]).unwrap();
        let p = exchange_partition(&s).unwrap();
        let fast = canonical_labels(p.labels());
        assert_eq!(bfs_partition(&s), fast);
        assert_eq!(congruence_partition(&s), fast);
        assert_eq!(fast.iter().max(), Some(&2));
    }

    #[test]
    fn hull_oracles() {
        let c3 = fixture("C3").unwrap();
        let all = enumerate_submodules(&c3).unwrap();
        let d = submodule_of(&c3, &[0, 2]).unwrap();
        assert_eq!(subtractive_hull_oracle(&all, &d), Mask::full(3));
        assert_eq!(sa_closure_oracle(&all, &d), Mask::full(3));
        let b = crate::fixtures::boolean();
        assert_eq!(smallest_sa_subsemiring(&b), Some(Mask::full(2)));
    }
}
