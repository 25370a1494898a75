//! The amalgam hierarchy of `C̄`-submonoids.

use super::*;
use crate::harness::{concl, hierarchy_pipeline, sample, some, HierarchyReport, Outcome, Trial};
use crate::lattice::generate;

/// Factors and additively closed `Sₖ ⊆ Aₖ`, with the pipeline report.
fn run(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, k: usize) -> Option<(Vec<Vec<usize>>, Vec<Vec<usize>>, HierarchyReport)> {
    let m = ctx.m;
    let n = 1 + k % 3;
    let fs = factors(ctx, rng, k, n)?;
    let gens: Vec<Vec<usize>> = fs
        .iter()
        .map(|a| {
            let s = if rand::Rng::gen_bool(rng, 0.5) {
                m.positive_multiples(ctx.elem(rng, a.mask()))
            } else {
                generate(m, ctx.few(rng, a.mask(), 2)).mask()
            };
            s.iter().collect()
        })
        .collect();
    let fl = masks(&fs);
    let rep = hierarchy_pipeline(m, &fl, &gens).ok()?;
    Some((fl, gens, rep))
}

fn check(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, f: impl Fn(&HierarchyReport) -> bool) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let (fs, gens, rep) = some!(run(ctx, rng, k));
        concl!(f(&rep), {"factors": fs, "s": gens, "report": rep});
        Trial::Hold
    })
}

pub(crate) fn t13_8(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    check(ctx, rng, HierarchyReport::theorem_holds)
}

pub(crate) fn t13_8r(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    check(ctx, rng, HierarchyReport::traces_hold)
}

pub(crate) fn e13_11(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    check(ctx, rng, |r| r.omega_split)
}

pub(crate) fn e13_12(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    check(ctx, rng, |r| r.nesting)
}
