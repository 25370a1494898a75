use crate::algebra::FiniteModule;
use crate::error::{Error, Result};
use crate::lattice::Submodule;
use crate::mask::Mask;

/// Default bound on the number of tuples in a space.
pub const DEFAULT_TUPLE_CAP: usize = 1_000_000;

const NONE: usize = usize::MAX;

/// The product `A₁ × ⋯ × Aₙ` with a dense mixed-radix tuple index.
///
/// Coordinate 0 is the most significant digit and each factor lists its
/// elements in increasing order, so index order is lexicographic order on
/// element tuples.
#[derive(Clone, Debug)]
pub struct TupleSpace<'m> {
    module: &'m FiniteModule,
    factors: Vec<Submodule<'m>>,
    elems: Vec<Vec<usize>>,
    pos: Vec<Vec<usize>>,
    strides: Vec<usize>,
    len: usize,
    inter: Vec<Vec<Mask>>,
}

impl<'m> TupleSpace<'m> {
    pub fn new(factors: Vec<Submodule<'m>>) -> Result<Self> {
        Self::with_cap(factors, DEFAULT_TUPLE_CAP)
    }

    pub fn with_cap(factors: Vec<Submodule<'m>>, cap: usize) -> Result<Self> {
        let Some(first) = factors.first() else {
            return Err(Error::PreconditionFailed("a tuple space needs at least one factor".into()));
        };
        let module = first.module();
        if factors.iter().any(|f| !f.same_ambient(module)) {
            return Err(Error::AmbientMismatch);
        }
        let mut len: usize = 1;
        for f in &factors {
            len = len
                .checked_mul(f.len())
                .filter(|&l| l <= cap)
                .ok_or_else(|| Error::CapExceeded(format!("tuple space above {cap} tuples")))?;
        }
        let elems: Vec<Vec<usize>> = factors.iter().map(|f| f.to_vec()).collect();
        let pos = elems
            .iter()
            .map(|es| {
                let mut p = vec![NONE; module.size()];
                for (k, &e) in es.iter().enumerate() {
                    p[e] = k;
                }
                p
            })
            .collect();
        let n = factors.len();
        let mut strides = vec![1; n];
        for k in (0..n.saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * elems[k + 1].len();
        }
        let inter = (0..n)
            .map(|i| (0..n).map(|j| factors[i].mask().intersect(factors[j].mask())).collect())
            .collect();
        Ok(TupleSpace { module, factors, elems, pos, strides, len, inter })
    }

    pub fn module(&self) -> &'m FiniteModule {
        self.module
    }

    pub fn factors(&self) -> &[Submodule<'m>] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Cached `Aᵢ ∩ Aⱼ`.
    pub fn intersection(&self, i: usize, j: usize) -> Mask {
        self.inter[i][j]
    }

    pub fn factor_elements(&self, k: usize) -> &[usize] {
        &self.elems[k]
    }

    #[inline]
    pub fn coord(&self, idx: usize, k: usize) -> usize {
        self.elems[k][(idx / self.strides[k]) % self.elems[k].len()]
    }

    /// Replaces coordinate `k` of tuple `idx` by element `e ∈ Aₖ`.
    #[inline]
    pub fn replace(&self, idx: usize, k: usize, e: usize) -> usize {
        let old = self.pos[k][self.coord(idx, k)];
        let new = self.pos[k][e];
        debug_assert!(new != NONE);
        idx - old * self.strides[k] + new * self.strides[k]
    }

    pub fn tuple(&self, idx: usize) -> Vec<usize> {
        (0..self.arity()).map(|k| self.coord(idx, k)).collect()
    }

    pub fn index_of(&self, t: &[usize]) -> Option<usize> {
        if t.len() != self.arity() {
            return None;
        }
        let mut idx = 0;
        for (k, &e) in t.iter().enumerate() {
            let p = *self.pos[k].get(e)?;
            if p == NONE {
                return None;
            }
            idx += p * self.strides[k];
        }
        Some(idx)
    }

    pub fn contains_element(&self, k: usize, e: usize) -> bool {
        e < self.module.size() && self.pos[k][e] != NONE
    }

    /// Sum of the coordinates of tuple `idx`.
    pub fn sum(&self, idx: usize) -> usize {
        let m = self.module;
        (0..self.arity()).fold(m.zero(), |acc, k| m.add(acc, self.coord(idx, k)))
    }

    /// The tuple with `e` at coordinate `k` and zeros elsewhere.
    pub fn placed(&self, k: usize, e: usize) -> usize {
        let z = self.module.zero();
        let t: Vec<usize> = (0..self.arity()).map(|c| if c == k { e } else { z }).collect();
        self.index_of(&t).expect("every factor contains zero")
    }

    /// Componentwise sum of two tuples.
    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut idx = 0;
        for k in 0..self.arity() {
            let s = self.module.add(self.coord(a, k), self.coord(b, k));
            idx += self.pos[k][s] * self.strides[k];
        }
        idx
    }

    /// Componentwise scalar multiple.
    pub fn act(&self, l: usize, a: usize) -> usize {
        let mut idx = 0;
        for k in 0..self.arity() {
            let s = self.module.act(l, self.coord(a, k));
            idx += self.pos[k][s] * self.strides[k];
        }
        idx
    }

    /// Sum of all factors `A₁ + ⋯ + Aₙ`.
    pub fn total(&self) -> Submodule<'m> {
        let mut acc = self.factors[0];
        for f in &self.factors[1..] {
            acc = acc.sum(f).expect("same ambient");
        }
        acc
    }

    /// Every `t′ᵢ ∈ Aᵢ` with `t′ᵢ + d = tᵢ`, paired with the resulting tuple
    /// index after also replacing `tⱼ` by `tⱼ + d`.
    pub(crate) fn step_targets(&self, idx: usize, i: usize, j: usize, d: usize) -> impl Iterator<Item = usize> + '_ {
        let ti = self.coord(idx, i);
        let tj = self.coord(idx, j);
        let nj = self.module.add(tj, d);
        let base = self.replace(idx, j, nj);
        self.elems[i]
            .iter()
            .filter(move |&&c| self.module.add(c, d) == ti)
            .map(move |&c| self.replace(base, i, c))
    }

    /// The space over `(A_{J₁}, …, A_{J_m})` for a set partition of the
    /// coordinates (zero based).
    pub fn contract(&self, blocks: &[Vec<usize>]) -> Result<TupleSpace<'m>> {
        let n = self.arity();
        let mut seen = vec![false; n];
        for b in blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &k in b {
                if k >= n || seen[k] {
                    return Err(Error::InvalidPartition(format!("index {k} repeated or out of range")));
                }
                seen[k] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPartition("blocks do not cover every coordinate".into()));
        }
        let factors = blocks
            .iter()
            .map(|b| {
                let mut acc = self.factors[b[0]];
                for &k in &b[1..] {
                    acc = acc.sum(&self.factors[k]).expect("same ambient");
                }
                acc
            })
            .collect();
        TupleSpace::new(factors)
    }

    /// The space with factors reordered so that new coordinate `k` is old
    /// coordinate `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Result<TupleSpace<'m>> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.arity()).collect::<Vec<_>>() {
            return Err(Error::InvalidPartition("not a permutation".into()));
        }
        TupleSpace::new(perm.iter().map(|&k| self.factors[k]).collect())
    }
}
