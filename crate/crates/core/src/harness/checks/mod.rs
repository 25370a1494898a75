//! Checkers, one function per registry entry.

pub(crate) mod actions;
pub(crate) mod exchange;
pub(crate) mod extensions;
pub(crate) mod hierarchy;
pub(crate) mod order;
pub(crate) mod retraction;

use super::Ctx;
use crate::algebra::FiniteModule;
use crate::exchange::{exchange_partition, ExchangePartition, TupleSpace};
use crate::lattice::Submodule;
use crate::mask::Mask;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Tuple-space size bound inside the checkers.
pub(crate) const SPACE_CAP: usize = 1000;

pub(crate) fn space<'m>(fs: &[Submodule<'m>]) -> Option<TupleSpace<'m>> {
    TupleSpace::with_cap(fs.to_vec(), SPACE_CAP).ok()
}

pub(crate) fn has_am(fs: &[Submodule<'_>]) -> Option<bool> {
    let sp = space(fs)?;
    let p = exchange_partition(&sp).ok()?;
    Some(p.has_amalgamation())
}

pub(crate) fn is_sa(m: &FiniteModule, w: Mask, ambient: Mask) -> bool {
    w.is_subset(&ambient) && m.sa_witness_masks(w, ambient).is_none()
}

/// The sum of several submodules.
pub(crate) fn total<'m>(fs: &[Submodule<'m>]) -> Submodule<'m> {
    fs[1..].iter().fold(fs[0], |acc, f| acc.sum(f).expect("same ambient"))
}

/// Whether `labels` induce a well-defined map on classes into `target`.
pub(crate) fn class_map_ok(p: &ExchangePartition<'_>, q: &ExchangePartition<'_>, f: impl Fn(usize) -> usize) -> bool {
    let mut img = vec![usize::MAX; p.class_count()];
    (0..p.space().len()).all(|t| {
        let c = q.class_of(f(t));
        let slot = &mut img[p.class_of(t)];
        if *slot == usize::MAX {
            *slot = c;
        }
        *slot == c
    })
}

/// Whether two partitions of spaces of equal size agree under `f`.
pub(crate) fn same_partition(p: &ExchangePartition<'_>, q: &ExchangePartition<'_>, f: impl Fn(usize) -> usize) -> bool {
    let n = p.space().len();
    let mut fwd = vec![usize::MAX; p.class_count()];
    let mut back = vec![usize::MAX; q.class_count()];
    (0..n).all(|t| {
        let (a, b) = (p.class_of(t), q.class_of(f(t)));
        if fwd[a] == usize::MAX && back[b] == usize::MAX {
            fwd[a] = b;
            back[b] = a;
        }
        fwd[a] == b && back[b] == a
    })
}

/// Class of `t + u` depends only on the classes of `t` and `u`; otherwise
/// returns `[t, u, t′, u′]` with `t ~ t′`, `u ~ u′` and `t + u ≁ t′ + u′`.
pub(crate) fn additive(p: &ExchangePartition<'_>) -> Option<Vec<Vec<usize>>> {
    let sp = p.space();
    let n = sp.len();
    let k = p.class_count();
    let mut table = vec![usize::MAX; k * k];
    let mut first = vec![(0, 0); k * k];
    for t in 0..n {
        for u in 0..n {
            let key = p.class_of(t) * k + p.class_of(u);
            let c = p.class_of(sp.add(t, u));
            if table[key] == usize::MAX {
                table[key] = c;
                first[key] = (t, u);
            } else if table[key] != c {
                let (t0, u0) = first[key];
                return Some(vec![sp.tuple(t0), sp.tuple(u0), sp.tuple(t), sp.tuple(u)]);
            }
        }
    }
    None
}

/// `λ·t ~ λ·u` whenever `t ~ u`.
pub(crate) fn linear(p: &ExchangePartition<'_>) -> Option<usize> {
    let sp = p.space();
    (0..sp.module().ring().size()).find(|&l| !class_map_ok(p, p, |t| sp.act(l, t)))
}

/// A random submodule of `a`.
pub(crate) fn sub_of<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, a: &Submodule<'i>) -> Submodule<'i> {
    ctx.any_where(rng, |s| s.is_subset(a)).expect("zero submodule")
}

/// A random SA-submodule of `a`.
pub(crate) fn sa_of<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, a: &Submodule<'i>) -> Submodule<'i> {
    let m = ctx.m;
    ctx.any_where(rng, |s| is_sa(m, s.mask(), a.mask())).expect("a is SA in itself")
}

/// Factors for amalgamation theorems: named on the first trial, otherwise
/// random with a bias toward nested (hence amalgamating) tuples.
pub(crate) fn factors<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize, n: usize) -> Option<Vec<Submodule<'i>>> {
    const NAMES: [&str; 3] = ["A1", "A2", "A3"];
    if k == 0 {
        if let Some(v) = NAMES[..n].iter().map(|s| ctx.inst.selection(s)).collect::<Option<Vec<_>>>() {
            return Some(v);
        }
    }
    if ctx.pinned() {
        return None;
    }
    let mut out = vec![ctx.any(rng)];
    for _ in 1..n {
        let next = if rng.gen_bool(0.4) {
            let base = out[rng.gen_range(0..out.len())];
            if rng.gen_bool(0.5) {
                sub_of(ctx, rng, &base)
            } else {
                ctx.any_where(rng, |s| base.is_subset(s)).expect("base itself")
            }
        } else {
            ctx.any(rng)
        };
        out.push(next);
    }
    Some(out)
}

pub(crate) fn masks(fs: &[Submodule<'_>]) -> Vec<Vec<usize>> {
    fs.iter().map(|f| f.to_vec()).collect()
}
