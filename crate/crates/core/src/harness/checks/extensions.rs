//! D-complements, SA-extensions, complementary modules and hulls.

use super::*;
use crate::extensions::{
    complementary_mask, compl_posets, d_complement_mask, find_d_complements, hull_is_universal_complement,
    nac_extension, reduce_complement, sa_ext_intrinsic, sa_ext_mask, saturation_mask, strip_to_zero,
};
use crate::harness::{concl, hyp, ok, sample, some, v, Outcome, Trial};
use crate::lattice::{generate, is_subtractive, subtractive_hull};
use crate::oracle::{sa_closure_oracle, subtractive_hull_oracle};
use serde_json::json;

/// `T` is a `D`-complement of `W` inside `U`.
fn d_complement_in(m: &FiniteModule, u: Mask, w: Mask, d: Mask, t: Mask) -> bool {
    t.is_subset(&u) && m.sumset(w, t) == u && complementary_mask(m, w, d, t)
}

/// An SA-extension `(A, D)`: named on the first trial, otherwise a random
/// `D` and a random `A ⊇ D` in which `D` is SA.
fn extension<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize) -> Option<(Submodule<'i>, Submodule<'i>)> {
    let m = ctx.m;
    let d = ctx.get(rng, "D", k)?;
    let a = ctx.get_where(rng, "A", k, |a| sa_ext_mask(m, a.mask(), d.mask()))?;
    Some((a, d))
}

/// A module complementary to `A` over `D`: named, the subtractive hull of
/// `D`, something between, or a random submodule.
fn complement<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize, a: &Submodule<'i>, d: &Submodule<'i>) -> Option<Submodule<'i>> {
    if let Some(t) = ctx.named("T", k) {
        return Some(t);
    }
    if ctx.pinned() {
        return None;
    }
    let m = ctx.m;
    let hull = subtractive_hull(d);
    match rand::Rng::gen_range(rng, 0..4) {
        0 => Some(hull),
        1 => ctx.any_where(rng, |t| d.is_subset(t) && t.is_subset(&hull)),
        2 => ctx.any_where(rng, |t| d.is_subset(t) && complementary_mask(m, a.mask(), d.mask(), t.mask())),
        _ => ctx.any_where(rng, |t| d.is_subset(t)),
    }
}

pub(crate) fn p6_2(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let t = some!(ctx.get_where(rng, "T", k, |t| is_sa(m, t.mask(), m.all())));
        hyp!(is_sa(m, t.mask(), m.all()));
        let w = some!(ctx.get_where(rng, "W", k, |w| m.sumset(w.mask(), t.mask()) == m.all()));
        hyp!(m.sumset(w.mask(), t.mask()) == m.all());
        let d = w.mask().intersect(t.mask());
        concl!(d_complement_mask(m, w.mask(), d, t.mask()) && is_sa(m, d, w.mask()), {"w": w.to_vec(), "t": t.to_vec()});
        Trial::Hold
    })
}

/// `(W, D, T)` with `D` SA in `W` and `T` a `D`-complement of `W`.
fn complemented<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize) -> Option<(Submodule<'i>, Submodule<'i>, Submodule<'i>)> {
    let m = ctx.m;
    let (w, d) = extension(ctx, rng, k)?;
    let t = match ctx.named("T", k) {
        Some(t) => t,
        None if ctx.pinned() => {
            let cs = find_d_complements(&ctx.all, &w, &d).ok()?;
            *cs.first()?
        }
        None => ctx.any_where(rng, |t| d_complement_mask(m, w.mask(), d.mask(), t.mask()))?,
    };
    Some((w, d, t))
}

pub(crate) fn p6_3(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let (w, d, t) = some!(complemented(ctx, rng, k));
        hyp!(is_sa(m, d.mask(), w.mask()) && d_complement_mask(m, w.mask(), d.mask(), t.mask()));
        concl!(is_sa(m, t.mask(), m.all()), {"w": w.to_vec(), "d": d.to_vec(), "t": t.to_vec()});
        Trial::Hold
    })
}

pub(crate) fn p6_4(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let (w, d, t) = some!(complemented(ctx, rng, k));
        hyp!(is_sa(m, d.mask(), w.mask()) && d_complement_mask(m, w.mask(), d.mask(), t.mask()));
        let u = some!(ctx.get_where(rng, "U", k, |u| d.is_subset(u) && m.sumset(w.mask(), u.mask()) == m.all()));
        hyp!(d.is_subset(&u) && m.sumset(w.mask(), u.mask()) == m.all());
        concl!(t.is_subset(&u), {"w": w.to_vec(), "d": d.to_vec(), "t": t.to_vec(), "u": u.to_vec()});
        Trial::Hold
    })
}

pub(crate) fn t6_5(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let d = some!(ctx.get(rng, "D", k));
        let w = some!(ctx.get_where(rng, "W", k, |w| d.is_subset(w) && sa_ext_mask(m, w.mask(), d.mask())));
        hyp!(d.is_subset(&w) && sa_ext_mask(m, w.mask(), d.mask()));
        let cs = ok!(find_d_complements(&ctx.all, &w, &d));
        hyp!(!cs.is_empty());
        concl!(cs.len() == 1, {"w": w.to_vec(), "d": d.to_vec(), "complements": masks(&cs)});
        Trial::Hold
    })
}

pub(crate) fn r6_6(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let fs = some!(factors(ctx, rng, k, 2));
        let (a1, a2) = (fs[0].mask(), fs[1].mask());
        let d = a1.intersect(a2);
        hyp!(is_sa(m, d, a1));
        hyp!(some!(has_am(&fs)));
        let u = m.sumset(a1, a2);
        let cx = json!({"factors": masks(&fs)});
        concl!(is_sa(m, a2, u) && d_complement_in(m, u, a1, d, a2), {"ctx": cx, "part": "A2"});
        if is_sa(m, d, a2) {
            concl!(is_sa(m, d, u) && d_complement_in(m, u, a2, d, a1), {"ctx": cx, "part": "A1"});
        }
        Trial::Hold
    })
}

pub(crate) fn r7_2a(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let (a, d) = some!(extension(ctx, rng, k));
        hyp!(sa_ext_mask(m, a.mask(), d.mask()));
        let b = some!(ctx.get_where(rng, "B", k, |b| a.is_subset(b)));
        hyp!(a.is_subset(&b));
        let (am, bm, dm) = (a.mask(), b.mask(), d.mask());
        let cx = json!({"a": v(am), "b": v(bm), "d": v(dm)});
        if sa_ext_mask(m, bm, dm) {
            concl!(sa_ext_mask(m, am, dm), {"ctx": cx, "part": "down"});
        }
        if sa_ext_mask(m, bm, am) {
            concl!(sa_ext_mask(m, bm, dm), {"ctx": cx, "part": "transitive"});
        }
        Trial::Hold
    })
}

pub(crate) fn p7_3(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let a = some!(ctx.get(rng, "A", k));
        let d = some!(ctx.get_where(rng, "D", k, |d| d.is_subset(&a)));
        hyp!(d.is_subset(&a));
        let (am, dm) = (a.mask(), d.mask());
        let ext = sa_ext_mask(m, am, dm);
        concl!(ext == sa_ext_intrinsic(m, am, dm), {"a": v(am), "d": v(dm)});
        if ext {
            concl!(m.sumset(am.minus(dm), dm) == am.minus(dm), {"a": v(am), "d": v(dm), "part": "coset"});
        }
        Trial::Hold
    })
}

pub(crate) fn t7_5(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let (a, d) = some!(extension(ctx, rng, k));
        let t = some!(complement(ctx, rng, k, &a, &d));
        let (am, dm, tm) = (a.mask(), d.mask(), t.mask());
        hyp!(dm.is_subset(&tm) && sa_ext_mask(m, am, dm) && complementary_mask(m, am, dm, tm));
        let b = saturation_mask(m, am, dm, tm);
        let ok = m.is_closed(b)
            && sa_ext_mask(m, b, dm)
            && complementary_mask(m, b, dm, tm)
            && m.sumset(b, tm) == m.sumset(am, tm);
        concl!(ok, {"a": v(am), "d": v(dm), "t": v(tm), "b": v(b)});
        Trial::Hold
    })
}

/// `(A, D, T)` with `A` an SA-extension, `T` complementary and `A` saturated;
/// a random `A` is replaced by its saturation.
fn saturated<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize) -> Option<(Mask, Mask, Mask)> {
    let m = ctx.m;
    let (a, d) = extension(ctx, rng, k)?;
    let t = complement(ctx, rng, k, &a, &d)?;
    let (am, dm, tm) = (a.mask(), d.mask(), t.mask());
    if !(dm.is_subset(&tm) && sa_ext_mask(m, am, dm) && complementary_mask(m, am, dm, tm)) {
        return None;
    }
    let b = if ctx.named("A", k).is_some() { am } else { saturation_mask(m, am, dm, tm) };
    (saturation_mask(m, b, dm, tm) == b && m.is_closed(b)).then_some((b, dm, tm))
}

fn pair_am(m: &FiniteModule, a: Mask, b: Mask) -> Option<bool> {
    crate::extensions::pair_has_am(m, a, b).ok()
}

pub(crate) fn t7_7(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let (a, d, t) = some!(saturated(ctx, rng, k));
        concl!(some!(pair_am(ctx.m, a, t)), {"a": v(a), "d": v(d), "t": v(t)});
        Trial::Hold
    })
}

/// Submodule `T′` with `D ⊆ T′ ⊆ T`.
fn between<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize, d: Mask, t: Mask) -> Option<Mask> {
    match ctx.named("T'", k) {
        Some(s) => Some(s.mask()),
        None if ctx.pinned() => Some(d),
        None => ctx.any_where(rng, |s| d.is_subset(&s.mask()) && s.mask().is_subset(&t)).map(|s| s.mask()),
    }
}

pub(crate) fn r7_8(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let (a, d) = some!(extension(ctx, rng, k));
        let t = some!(complement(ctx, rng, k, &a, &d));
        let (am, dm, tm) = (a.mask(), d.mask(), t.mask());
        hyp!(dm.is_subset(&tm) && sa_ext_mask(m, am, dm) && complementary_mask(m, am, dm, tm));
        let tp = some!(between(ctx, rng, k, dm, tm));
        hyp!(dm.is_subset(&tp) && tp.is_subset(&tm));
        let cx = json!({"a": v(am), "d": v(dm), "t": v(tm), "t'": v(tp)});
        concl!(complementary_mask(m, am, dm, tp), {"ctx": cx, "part": "complementary"});
        if saturation_mask(m, am, dm, tm) == am {
            concl!(saturation_mask(m, am, dm, tp) == am, {"ctx": cx, "part": "saturated"});
        }
        Trial::Hold
    })
}

pub(crate) fn r7_8am(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let (a, d, t) = some!(saturated(ctx, rng, k));
        let tp = some!(between(ctx, rng, k, d, t));
        hyp!(d.is_subset(&tp) && tp.is_subset(&t));
        concl!(some!(pair_am(ctx.m, a, tp)), {"a": v(a), "d": v(d), "t": v(t), "t'": v(tp)});
        Trial::Hold
    })
}

fn strip(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, am_part: bool) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        hyp!(m.ring().is_sum_of_units());
        let (a, d) = some!(extension(ctx, rng, k));
        let t = some!(complement(ctx, rng, k, &a, &d));
        hyp!(d.is_subset(&t) && sa_ext_mask(m, a.mask(), d.mask()) && complementary_mask(m, a.mask(), d.mask(), t.mask()));
        let a = if am_part && ctx.named("A", k).is_none() {
            let b = saturation_mask(m, a.mask(), d.mask(), t.mask());
            some!(crate::lattice::submodule(m, b).ok())
        } else {
            a
        };
        let rep = ok!(strip_to_zero(&a, &d, &t));
        let cx = json!({"a": a.to_vec(), "d": d.to_vec(), "t": t.to_vec(), "report": rep});
        if am_part {
            hyp!(rep.amalgamation.is_some());
            concl!(rep.amalgamation == Some(true), cx);
        } else {
            concl!(rep.is_submodule && rep.is_sa_extension && rep.complementary && rep.saturation_agrees, cx);
        }
        Trial::Hold
    })
}

pub(crate) fn t7_9(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    strip(ctx, rng, false)
}

pub(crate) fn t7_9am(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    strip(ctx, rng, true)
}

/// `D ⊆ A`, `T` complementary to `A` over `D` (no SA assumption).
fn compl_triple<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize) -> Option<(Submodule<'i>, Submodule<'i>, Submodule<'i>)> {
    let m = ctx.m;
    let d = ctx.get(rng, "D", k)?;
    let a = ctx.get_where(rng, "A", k, |a| d.is_subset(a))?;
    let t = match ctx.named("T", k) {
        Some(t) => t,
        None if ctx.pinned() => return None,
        None => ctx.any_where(rng, |t| d.is_subset(t) && complementary_mask(m, a.mask(), d.mask(), t.mask()))?,
    };
    (d.is_subset(&a) && d.is_subset(&t) && complementary_mask(m, a.mask(), d.mask(), t.mask())).then_some((a, d, t))
}

pub(crate) fn p8_1(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let (a, d, t) = some!(compl_triple(ctx, rng, k));
        let u = m.sumset(a.mask(), t.mask());
        let up = some!(ctx.get_where(rng, "U'", k, |s| a.is_subset(s) && s.mask().is_subset(&u)));
        hyp!(a.is_subset(&up) && up.mask().is_subset(&u));
        let rep = ok!(reduce_complement(&a, &d, &t, &up));
        concl!(rep.ok(), {"a": a.to_vec(), "d": d.to_vec(), "t": t.to_vec(), "u'": up.to_vec(), "report": rep});
        Trial::Hold
    })
}

pub(crate) fn p8_1r(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let (a, d, t) = some!(compl_triple(ctx, rng, k));
        let tpp = some!(ctx.get_where(rng, "T''", k, |s| d.is_subset(s) && s.is_subset(&t)));
        hyp!(d.is_subset(&tpp) && tpp.is_subset(&t));
        let up = ok!(crate::lattice::submodule(m, m.sumset(a.mask(), tpp.mask())));
        let rep = ok!(reduce_complement(&a, &d, &t, &up));
        concl!(rep.ok(), {"a": a.to_vec(), "d": d.to_vec(), "t": t.to_vec(), "t''": tpp.to_vec(), "report": rep});
        Trial::Hold
    })
}

fn posets(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, lower_double: bool) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let (a, d) = some!(extension(ctx, rng, k));
        hyp!(sa_ext_mask(m, a.mask(), d.mask()));
        let p = ok!(compl_posets(&ctx.all, &a, &d));
        let cx = json!({"a": a.to_vec(), "d": d.to_vec(), "compl'": masks(&p.compl_prime), "compl''": masks(&p.compl_double)});
        if lower_double {
            concl!(p.compl_double_lower, cx);
        } else {
            concl!(p.pairing_bijective && p.pairing_order_iso && p.compl_prime_lower, cx);
        }
        Trial::Hold
    })
}

pub(crate) fn s8_iso(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    posets(ctx, rng, false)
}

pub(crate) fn s8_lower(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    posets(ctx, rng, true)
}

pub(crate) fn r9_1(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let (a, d) = some!(extension(ctx, rng, k));
        let t = some!(complement(ctx, rng, k, &a, &d));
        let (am, dm, tm) = (a.mask(), d.mask(), t.mask());
        hyp!(dm.is_subset(&tm) && sa_ext_mask(m, am, dm) && complementary_mask(m, am, dm, tm));
        let a1 = some!(ctx.get_where(rng, "A'", k, |s| d.is_subset(s) && s.is_subset(&a)));
        hyp!(d.is_subset(&a1) && a1.is_subset(&a));
        let a1m = a1.mask();
        concl!(sa_ext_mask(m, a1m, dm) && complementary_mask(m, a1m, dm, tm), {"a": v(am), "a'": v(a1m), "d": v(dm), "t": v(tm)});
        Trial::Hold
    })
}

pub(crate) fn e9_2(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let t1 = some!(ctx.get_where(rng, "T", k, is_subtractive));
        let t2 = some!(ctx.get_where(rng, "T'", k, is_subtractive));
        hyp!(is_subtractive(&t1) && is_subtractive(&t2));
        let meet = ok!(t1.intersect(&t2));
        concl!(is_subtractive(&meet), {"t1": t1.to_vec(), "t2": t2.to_vec()});
        Trial::Hold
    })
}

pub(crate) fn p9_4(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let d = some!(ctx.get(rng, "D", k));
        let hull = subtractive_hull(&d);
        let oracle = subtractive_hull_oracle(&ctx.all, &d);
        concl!(hull.mask() == oracle && is_subtractive(&hull), {"d": d.to_vec(), "hull": hull.to_vec(), "oracle": v(oracle)});
        Trial::Hold
    })
}

pub(crate) fn t9_5(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let d = some!(ctx.get(rng, "D", k));
        let bad = ok!(hull_is_universal_complement(&ctx.all, &d));
        concl!(bad.is_none(), {"d": d.to_vec(), "extension": bad.map(|a| a.to_vec())});
        Trial::Hold
    })
}

pub(crate) fn p9_6(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    let r = m.ring();
    sample(ctx, rng, |rng, k| {
        hyp!(r.is_zerosumfree_semifield());
        let d = some!(ctx.get(rng, "D", k));
        let t = subtractive_hull(&d);
        let tp = some!(ctx.get_where(rng, "T'", k, |s| t.is_subset(s) && *s != t));
        hyp!(t.is_subset(&tp) && tp != t);
        let x = ctx.elem(rng, tp.mask().minus(t.mask()));
        let rx: Mask = (0..r.size()).map(|l| m.act(l, x)).collect();
        let a = generate(m, d.mask().union(rx));
        let (am, dm) = (a.mask(), d.mask());
        let cx = json!({"d": v(dm), "t'": tp.to_vec(), "x": x, "a": v(am)});
        concl!(am == m.sumset(dm, rx), {"ctx": cx, "part": "D + Rx"});
        concl!(sa_ext_mask(m, am, dm), {"ctx": cx, "part": "extension"});
        concl!(!complementary_mask(m, am, dm, tp.mask()), {"ctx": cx, "part": "not complementary"});
        Trial::Hold
    })
}

pub(crate) fn t9_7(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let d = some!(ctx.get(rng, "D", k));
        let rep = nac_extension(&ctx.all, &d);
        let oracle = sa_closure_oracle(&ctx.all, &d);
        concl!(rep.ok() && v(oracle) == rep.closure, {"d": d.to_vec(), "report": rep, "closure_oracle": v(oracle)});
        Trial::Hold
    })
}
