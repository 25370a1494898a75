//! Actions on upper-bound monoids, the sets `C_α` and `o_R`.

use super::*;
use crate::action::ActionTable;
use crate::harness::{concl, hyp, ok, sample, some, v, Outcome, Trial};
use crate::lattice::generate;
use crate::order::{
    is_convex, is_subsemiring, naturals_image, o_r, quotient, ring_order, stabilizing_scalars, NaturalOrder,
    QuotientModule,
};
use crate::oracle::smallest_sa_subsemiring;

/// Translation when `V` is upper bound, and the projection onto `V̄`.
fn actions<'a>(ctx: &Ctx<'a>, q: &'a Option<QuotientModule>, need_ub: bool) -> Vec<(&'static str, ActionTable<'a>)> {
    let mut out = Vec::new();
    if !need_ub || ctx.le.is_antisymmetric() {
        out.push(("translation", ActionTable::translation(ctx.m)));
    }
    if let Some(q) = q {
        out.push(("quotient", ActionTable::quotient_projection(ctx.m, q)));
    }
    out
}

/// Runs `f` on each action in turn, one per trial.
fn per_action(
    ctx: &Ctx<'_>,
    rng: &mut ChaCha8Rng,
    need_ub: bool,
    mut f: impl FnMut(&mut ChaCha8Rng, &str, &ActionTable<'_>) -> Trial,
) -> Outcome {
    let q = quotient(ctx.m).ok();
    let acts = actions(ctx, &q, need_ub);
    sample(ctx, rng, |rng, k| {
        let (name, a) = some!(acts.get(k % acts.len().max(1)));
        f(rng, name, a)
    })
}

pub(crate) fn r12_1(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let ub = ctx.le.is_antisymmetric();
    per_action(ctx, rng, false, |rng, name, a| {
        concl!(a.validate().ok(), {"action": name, "part": "axioms"});
        concl!(a.tilde_is_hom(), {"action": name, "part": "tilde"});
        hyp!(name != "translation" || ub);
        concl!(a.acts_by_tilde(), {"action": name, "part": "by-tilde"});
        let x = a.target();
        let le = crate::order::natural_quasiorder(x);
        let (u, t) = (ctx.elem(rng, a.actor().all()), ctx.elem(rng, x.all()));
        concl!(le.le(t, a.apply(u, t)), {"action": name, "u": u, "x": t});
        Trial::Hold
    })
}

pub(crate) fn p12_2(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    per_action(ctx, rng, true, |rng, name, a| {
        let s = ctx.elem(rng, a.target().all());
        let c = a.c_alpha(s).mask();
        concl!(m.is_submonoid(c) && is_sa(m, c, m.all()), {"action": name, "s": s, "c": v(c)});
        Trial::Hold
    })
}

pub(crate) fn p12_3(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    per_action(ctx, rng, true, |rng, name, a| {
        let x = a.target();
        let (s1, s2) = (ctx.elem(rng, x.all()), ctx.elem(rng, x.all()));
        let lhs = m.sumset(a.c_alpha(s1).mask(), a.c_alpha(s2).mask());
        concl!(lhs.is_subset(&a.c_alpha(x.add(s1, s2)).mask()), {"action": name, "s1": s1, "s2": s2});
        Trial::Hold
    })
}

/// An additively closed subset of the target: the positive multiples of
/// an element or a generated submodule.
fn closed_subset(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, x: &FiniteModule) -> Mask {
    if rand::Rng::gen_bool(rng, 0.5) {
        x.positive_multiples(ctx.elem(rng, x.all()))
    } else {
        generate(x, ctx.few(rng, x.all(), 2)).mask()
    }
}

pub(crate) fn p12_4a(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    per_action(ctx, rng, true, |rng, name, a| {
        let s = closed_subset(ctx, rng, a.target());
        let c = ok!(a.c_alpha_set(s)).mask();
        concl!(m.is_submonoid(c) && is_sa(m, c, m.all()), {"action": name, "s": v(s), "c": v(c)});
        Trial::Hold
    })
}

pub(crate) fn p12_4b(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    per_action(ctx, rng, true, |rng, name, a| {
        let x = a.target();
        let (s, t) = (closed_subset(ctx, rng, x), closed_subset(ctx, rng, x));
        let lhs = m.sumset(ok!(a.c_alpha_set(s)).mask(), ok!(a.c_alpha_set(t)).mask());
        let rhs = ok!(a.c_alpha_set(x.sumset(s, t))).mask();
        concl!(lhs.is_subset(&rhs), {"action": name, "s": v(s), "t": v(t)});
        Trial::Hold
    })
}

pub(crate) fn p12_4c(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    per_action(ctx, rng, true, |rng, name, a| {
        let x = a.target();
        let le = crate::order::natural_quasiorder(x);
        let e = ctx.elem(rng, x.all());
        let s = x.positive_multiples(e);
        let t = x.positive_multiples(x.add(e, ctx.elem(rng, x.all())));
        let cofinal = |p: Mask, q: Mask| p.iter().all(|a| q.iter().any(|b| le.le(a, b)));
        hyp!(cofinal(s, t) && cofinal(t, s));
        concl!(ok!(a.c_alpha_set(s)) == ok!(a.c_alpha_set(t)), {"action": name, "s": v(s), "t": v(t)});
        Trial::Hold
    })
}

/// `C(S)` for `S = ℕx` stabilises at the first `n` with `nx = (n+1)x`.
pub(crate) fn e12_5(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    let a = ActionTable::translation(m);
    sample(ctx, rng, |rng, _| {
        hyp!(ctx.le.is_antisymmetric());
        let x = ctx.elem(rng, m.all());
        hyp!(x != m.zero());
        let mut nx = x;
        let mut steps = 0;
        while m.add(nx, x) != nx {
            nx = m.add(nx, x);
            steps += 1;
            concl!(steps <= m.size(), {"x": x, "part": "stabilises"});
        }
        let c = ok!(a.c_alpha_set(m.positive_multiples(x))).mask();
        concl!(c == a.c_alpha(nx).mask(), {"x": x, "nx": nx});
        Trial::Hold
    })
}

/// `C_ω(x) = ⋃ C(nx)` for the translation action.
fn c_omega_plain(m: &FiniteModule, x: usize) -> Mask {
    let mut out = Mask::EMPTY;
    for y in m.positive_multiples(x).iter() {
        out = out.union(m.elements().filter(|&u| m.add(u, y) == y).collect());
    }
    out
}

fn stable_multiple(m: &FiniteModule, x: usize) -> Option<usize> {
    m.positive_multiples(x).iter().find(|&y| m.add(y, x) == y)
}

pub(crate) fn r12_7(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    let no = NaturalOrder::new(m);
    let arch = no.arch_partition();
    sample(ctx, rng, |rng, _| {
        let x = ctx.elem(rng, m.all());
        let y = ctx.elem(rng, m.all());
        hyp!(x != m.zero() && y != m.zero() && arch[x] == arch[y]);
        let stable = match (stable_multiple(m, x), stable_multiple(m, y)) {
            (Some(a), Some(b)) => arch[a] == arch[b],
            _ => false,
        };
        concl!(stable || c_omega_plain(m, x) == c_omega_plain(m, y), {"x": x, "y": y});
        Trial::Hold
    })
}

/// `R_x` is a subsemiring containing `ℕ₀·1`.
pub(crate) fn s12_rx(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let r = ctx.m.ring();
    per_action(ctx, rng, true, |rng, name, a| {
        let s = ctx.elem(rng, a.target().all());
        let rx = a.r_sub(s);
        concl!(is_subsemiring(r, rx) && naturals_image(r).is_subset(&rx), {"action": name, "s": s, "r_s": v(rx)});
        Trial::Hold
    })
}

pub(crate) fn p12_8(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let r = ctx.m.ring();
    let le = ring_order(r);
    per_action(ctx, rng, true, |rng, name, a| {
        let s = ctx.elem(rng, a.target().all());
        let rx = a.r_sub(s);
        concl!(is_convex(&le, rx), {"action": name, "s": s, "r_s": v(rx)});
        Trial::Hold
    })
}

pub(crate) fn d12_8(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let r = ctx.m.ring();
    sample(ctx, rng, |_, _| {
        let o = o_r(r);
        let oracle = smallest_sa_subsemiring(r);
        concl!(Some(o) == oracle, {"o_r": v(o), "oracle": oracle.map(v)});
        Trial::Hold
    })
}

pub(crate) fn c12_10(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let o = o_r(ctx.m.ring());
    per_action(ctx, rng, true, |rng, name, a| {
        let s = closed_subset(ctx, rng, a.target());
        let c = ok!(a.c_alpha_set(s)).mask();
        concl!(o.is_subset(&stabilizing_scalars(ctx.m, c)), {"action": name, "s": v(s), "c": v(c)});
        Trial::Hold
    })
}

/// `C̄(x)` and `C̄(S)` are `o_R`-submodules for any `V`.
pub(crate) fn s13_or(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    let o = o_r(m.ring());
    let no = NaturalOrder::new(m);
    sample(ctx, rng, |rng, _| {
        let x = ctx.elem(rng, m.all());
        let s = closed_subset(ctx, rng, m);
        let cs = ok!(no.cbar_set(s)).mask();
        let cx = no.cbar(x).mask();
        concl!(o.is_subset(&stabilizing_scalars(m, cx)), {"x": x, "cbar": v(cx)});
        concl!(o.is_subset(&stabilizing_scalars(m, cs)), {"s": v(s), "cbar": v(cs)});
        Trial::Hold
    })
}
