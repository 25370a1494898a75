use super::space::TupleSpace;
use super::unionfind::UnionFind;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Exchange-equivalence classes of a [`TupleSpace`].
#[derive(Clone, Debug)]
pub struct ExchangePartition<'a> {
    space: &'a TupleSpace<'a>,
    class_of: Vec<usize>,
    class_count: usize,
}

/// One basic `(i, j)`-exchange of `d`: `from = (…, t′ᵢ + d, …, tⱼ, …)` and
/// `to = (…, t′ᵢ, …, tⱼ + d, …)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeStep {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub i: usize,
    pub j: usize,
    pub d: usize,
}

/// Verdict of the amalgamation test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmVerdict {
    pub has_am: bool,
    pub class_count: usize,
    /// Lexicographically least pair of inequivalent tuples with equal sum.
    pub certificate: Option<(Vec<usize>, Vec<usize>)>,
}

/// All tuples reachable from `t` by one basic exchange.
pub fn basic_exchange_step(space: &TupleSpace<'_>, t: &[usize], i: usize, j: usize, d: usize) -> Result<Vec<Vec<usize>>> {
    let n = space.arity();
    if i >= n || j >= n || i == j {
        return Err(Error::PreconditionFailed(format!("bad coordinate pair ({i},{j})")));
    }
    if !space.intersection(i, j).contains(d) {
        return Err(Error::NotInIntersection(d));
    }
    let idx = space.index_of(t).ok_or_else(|| Error::Containment(format!("{t:?} is not a tuple of the space")))?;
    Ok(space.step_targets(idx, i, j, d).map(|u| space.tuple(u)).collect())
}

/// Union-find closure of all basic exchanges.
pub fn exchange_partition<'a>(space: &'a TupleSpace<'a>) -> Result<ExchangePartition<'a>> {
    let n = space.arity();
    let mut uf = UnionFind::new(space.len());
    for idx in 0..space.len() {
        let s = space.sum(idx);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for d in space.intersection(i, j).iter() {
                    for u in space.step_targets(idx, i, j, d) {
                        if space.sum(u) != s {
                            return Err(Error::Internal(format!(
                                "exchange edge {:?} -> {:?} changes the sum",
                                space.tuple(idx),
                                space.tuple(u)
                            )));
                        }
                        uf.union(idx, u);
                    }
                }
            }
        }
    }
    let class_count = uf.set_count();
    Ok(ExchangePartition { space, class_of: uf.canonical_labels(), class_count })
}

impl<'a> ExchangePartition<'a> {
    /// Wraps externally computed labels; used by oracles and tests.
    pub fn from_labels(space: &'a TupleSpace<'a>, labels: Vec<usize>) -> Self {
        let mut canon = vec![usize::MAX; labels.len()];
        let mut map = std::collections::HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            let next = map.len();
            canon[i] = *map.entry(*l).or_insert(next);
        }
        ExchangePartition { space, class_of: canon, class_count: map.len() }
    }

    pub fn space(&self) -> &'a TupleSpace<'a> {
        self.space
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// Canonical class id of a tuple index (classes numbered by least member).
    pub fn class_of(&self, idx: usize) -> usize {
        self.class_of[idx]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn are_equivalent(&self, t1: &[usize], t2: &[usize]) -> Result<bool> {
        let a = self.index(t1)?;
        let b = self.index(t2)?;
        Ok(self.class_of[a] == self.class_of[b])
    }

    fn index(&self, t: &[usize]) -> Result<usize> {
        self.space
            .index_of(t)
            .ok_or_else(|| Error::Containment(format!("{t:?} is not a tuple of the space")))
    }

    /// Classes as lists of tuple indices, in canonical order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (idx, &c) in self.class_of.iter().enumerate() {
            out[c].push(idx);
        }
        out
    }

    pub fn classes_as_tuples(&self) -> Vec<Vec<Vec<usize>>> {
        self.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.space.tuple(i)).collect())
            .collect()
    }

    /// Two partitions of the same space agree.
    pub fn same_as(&self, other: &ExchangePartition<'_>) -> bool {
        self.class_of == other.class_of
    }

    /// Every fiber of the sum map is a single class.
    pub fn amalgamation(&self) -> AmVerdict {
        let sp = self.space;
        let m = sp.module();
        // first tuple and its class per sum value; tuples arrive in lex order
        let mut first: Vec<Option<usize>> = vec![None; m.size()];
        let mut best: Option<(usize, usize)> = None;
        let mut found = vec![false; m.size()];
        for idx in 0..sp.len() {
            let s = sp.sum(idx);
            match first[s] {
                None => first[s] = Some(idx),
                Some(f) => {
                    if !found[s] && self.class_of[f] != self.class_of[idx] {
                        found[s] = true;
                        if best.map_or(true, |b| (f, idx) < b) {
                            best = Some((f, idx));
                        }
                    }
                }
            }
        }
        AmVerdict {
            has_am: best.is_none(),
            class_count: self.class_count,
            certificate: best.map(|(a, b)| (sp.tuple(a), sp.tuple(b))),
        }
    }

    pub fn has_amalgamation(&self) -> bool {
        self.amalgamation().has_am
    }

    /// Shortest chain of basic exchanges from `t1` to `t2`; with `normalized`
    /// (pairs only) trivial steps are inserted so the types alternate
    /// `(1,2), (2,1), …`, starting with `(1,2)` and ending with `(2,1)`.
    pub fn witness_chain(&self, t1: &[usize], t2: &[usize], normalized: bool) -> Result<Vec<ExchangeStep>> {
        let sp = self.space;
        let a = self.index(t1)?;
        let b = self.index(t2)?;
        if self.class_of[a] != self.class_of[b] {
            return Err(Error::NotEquivalent);
        }
        if normalized && sp.arity() != 2 {
            return Err(Error::PreconditionFailed("normalized chains are defined for pairs".into()));
        }
        let n = sp.arity();
        let mut prev: Vec<Option<(usize, usize, usize, usize)>> = vec![None; sp.len()];
        let mut seen = vec![false; sp.len()];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    for d in sp.intersection(i, j).iter() {
                        for u in sp.step_targets(x, i, j, d) {
                            if !seen[u] {
                                seen[u] = true;
                                prev[u] = Some((x, i, j, d));
                                queue.push_back(u);
                            }
                        }
                    }
                }
            }
        }
        let mut steps = Vec::new();
        let mut cur = b;
        while cur != a {
            let (p, i, j, d) = prev[cur].ok_or_else(|| Error::Internal("BFS lost the target".into()))?;
            steps.push(ExchangeStep { from: sp.tuple(p), to: sp.tuple(cur), i, j, d });
            cur = p;
        }
        steps.reverse();
        if normalized {
            steps = normalize(steps, sp.module().zero(), t1);
        }
        Ok(steps)
    }
}

fn normalize(steps: Vec<ExchangeStep>, zero: usize, start: &[usize]) -> Vec<ExchangeStep> {
    let trivial = |t: &[usize], i: usize| ExchangeStep { from: t.to_vec(), to: t.to_vec(), i, j: 1 - i, d: zero };
    let mut out: Vec<ExchangeStep> = Vec::new();
    let mut want = 0;
    let mut at = start.to_vec();
    for s in steps {
        if s.i != want {
            out.push(trivial(&at, want));
            want = 1 - want;
        }
        at = s.to.clone();
        out.push(s);
        want = 1 - want;
    }
    if out.is_empty() || want == 1 {
        if out.is_empty() {
            out.push(trivial(&at, 0));
        }
        out.push(trivial(&at, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::lattice::submodule_of;

    #[test]
    fn c4_partition_and_steps() {
        let c4 = fixture("C4").unwrap();
        let sp = TupleSpace::new(vec![submodule_of(&c4, &[0, 1, 3]).unwrap(), submodule_of(&c4, &[0, 1]).unwrap()]).unwrap();
        let p = exchange_partition(&sp).unwrap();
        assert_eq!(
            p.classes_as_tuples(),
            vec![
                vec![vec![0, 0]],
                vec![vec![0, 1], vec![1, 0], vec![1, 1]],
                vec![vec![3, 0], vec![3, 1]],
            ]
        );
        let steps = basic_exchange_step(&sp, &[1, 0], 0, 1, 1).unwrap();
        assert!(steps.contains(&vec![0, 1]));
        assert_eq!(basic_exchange_step(&sp, &[3, 0], 0, 1, 0).unwrap(), vec![vec![3, 0]]);
        assert_eq!(basic_exchange_step(&sp, &[3, 0], 0, 1, 3), Err(Error::NotInIntersection(3)));
        assert!(p.are_equivalent(&[1, 0], &[0, 1]).unwrap());
        let chain = p.witness_chain(&[1, 0], &[0, 1], false).unwrap();
        assert_eq!(chain.len(), 1);
        assert_eq!((chain[0].i, chain[0].j, chain[0].d), (0, 1, 1));
        let chain = p.witness_chain(&[3, 0], &[3, 1], false).unwrap();
        assert_eq!(chain, vec![ExchangeStep { from: vec![3, 0], to: vec![3, 1], i: 0, j: 1, d: 1 }]);
        assert!(p.witness_chain(&[0, 0], &[0, 0], false).unwrap().is_empty());
        let norm = p.witness_chain(&[0, 0], &[0, 0], true).unwrap();
        assert_eq!(norm.iter().map(|s| s.i).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(p.witness_chain(&[0, 0], &[3, 0], false), Err(Error::NotEquivalent));
    }

    #[test]
    fn normalized_chains_alternate() {
        let c4 = fixture("C4").unwrap();
        let a = submodule_of(&c4, &[0, 1, 2, 3]).unwrap();
        let sp = TupleSpace::new(vec![a, a]).unwrap();
        let p = exchange_partition(&sp).unwrap();
        for x in 0..sp.len() {
            for y in 0..sp.len() {
                let (t1, t2) = (sp.tuple(x), sp.tuple(y));
                if !p.are_equivalent(&t1, &t2).unwrap() {
                    continue;
                }
                let ch = p.witness_chain(&t1, &t2, true).unwrap();
                assert_eq!(ch.first().unwrap().i, 0);
                assert_eq!(ch.last().unwrap().i, 1);
                for w in ch.windows(2) {
                    assert_ne!(w[0].i, w[1].i);
                    assert_eq!(w[0].to, w[1].from);
                }
                assert_eq!(ch.first().unwrap().from, t1);
                assert_eq!(ch.last().unwrap().to, t2);
            }
        }
    }

    #[test]
    fn am_pins() {
        let b2 = fixture("B2").unwrap();
        let sp = TupleSpace::new(vec![submodule_of(&b2, &[0, 1]).unwrap(), submodule_of(&b2, &[0, 2]).unwrap()]).unwrap();
        let p = exchange_partition(&sp).unwrap();
        assert_eq!(p.class_count(), 4);
        assert!(p.has_amalgamation());
        assert_eq!(basic_exchange_step(&sp, &[1, 0], 0, 1, 0).unwrap(), vec![vec![1, 0]]);

        let c3 = fixture("C3").unwrap();
        let sp = TupleSpace::new(vec![submodule_of(&c3, &[0, 1]).unwrap(), submodule_of(&c3, &[0, 2]).unwrap()]).unwrap();
        let p = exchange_partition(&sp).unwrap();
        assert_eq!(p.class_count(), 4);
        let v = p.amalgamation();
        assert!(!v.has_am);
        assert_eq!(v.certificate, Some((vec![0, 2], vec![1, 2])));
        assert!(!p.are_equivalent(&[1, 0], &[0, 2]).unwrap());
    }
}
