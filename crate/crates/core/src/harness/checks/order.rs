//! D-orderings, minimal cosets, the upper-bound quotient and `C̄`.

use super::*;
use crate::extensions::{complementary_mask, pair_has_am, sa_ext_mask, saturation_mask};
use crate::harness::{concl, hyp, ok, sample, some, v, Outcome, Trial};
use crate::lattice::{subtractive_hull, ElementSet};
use crate::order::{coset_maximal, d_max, fix_mask, minimal_cosets_in, quasiorder_mask, quotient, NaturalOrder};
use serde_json::json;

fn d_ordered(m: &FiniteModule, d: Mask) -> bool {
    quasiorder_mask(m, d).is_antisymmetric()
}

/// A `D` on which `≤_D` is an ordering.
fn ordering_d<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize) -> Option<Submodule<'i>> {
    let m = ctx.m;
    ctx.get_where(rng, "D", k, |d| d_ordered(m, d.mask()))
}

fn singletons(xs: Mask) -> Vec<Mask> {
    let mut out: Vec<Mask> = xs.iter().map(Mask::singleton).collect();
    out.sort();
    out
}

pub(crate) fn p10_3(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let d = some!(ordering_d(ctx, rng, k));
        hyp!(d_ordered(m, d.mask()));
        let u = some!(ctx.get_where(rng, "U", k, |u| d.is_subset(u)));
        hyp!(d.is_subset(&u));
        let fix = fix_mask(m, u.mask(), d.mask());
        let max = ok!(coset_maximal(&ok!(ElementSet::new(m, u.mask())), &d)).mask();
        let cx = json!({"d": d.to_vec(), "u": u.to_vec()});
        concl!(max == fix, {"ctx": cx, "maximal": v(max), "fix": v(fix)});
        concl!(minimal_cosets_in(m, u.mask(), d.mask()) == singletons(fix), {"ctx": cx, "part": "singletons"});
        Trial::Hold
    })
}

pub(crate) fn e10_4(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let d = some!(ordering_d(ctx, rng, k));
        hyp!(d_ordered(m, d.mask()));
        let cosets = minimal_cosets_in(m, d.mask(), d.mask());
        let want: Vec<Mask> = d_max(&d).map(Mask::singleton).into_iter().collect();
        concl!(cosets == want, {"d": d.to_vec(), "cosets": cosets.iter().map(|c| v(*c)).collect::<Vec<_>>()});
        Trial::Hold
    })
}

pub(crate) fn p10_6(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let d = some!(ctx.get(rng, "D", k));
        let s = ctx.few(rng, m.all(), 3);
        let x = m.sumset(s, d.mask());
        hyp!(m.sumset(x, d.mask()).is_subset(&x));
        let hull = subtractive_hull(&d).mask();
        for f in fix_mask(m, x, d.mask()).iter() {
            concl!(m.translate(f, hull) == Mask::singleton(f), {"d": d.to_vec(), "x": v(x), "fixed": f});
        }
        Trial::Hold
    })
}

pub(crate) fn p10_7(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let d = some!(ctx.get(rng, "D", k));
        let fix = fix_mask(m, m.all(), d.mask());
        let bad = m.sumset(m.all(), fix).minus(fix);
        concl!(bad.is_empty(), {"d": d.to_vec(), "fix": v(fix), "escaped": v(bad)});
        Trial::Hold
    })
}

/// `(A, D, D↓, B)` with `V` `D`-ordered and `D ⊆ A` an SA-extension.
fn saturated_by_hull<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize) -> Option<(Mask, Mask, Mask, Mask)> {
    let m = ctx.m;
    let d = ordering_d(ctx, rng, k)?;
    let a = ctx.get_where(rng, "A", k, |a| sa_ext_mask(m, a.mask(), d.mask()))?;
    let hull = subtractive_hull(&d).mask();
    let b = saturation_mask(m, a.mask(), d.mask(), hull);
    Some((a.mask(), d.mask(), hull, b))
}

fn t10_8(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, part: char) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let (a, d, hull, b) = some!(saturated_by_hull(ctx, rng, k));
        hyp!(d_ordered(m, d) && sa_ext_mask(m, a, d));
        let cx = json!({"a": v(a), "d": v(d), "hull": v(hull), "b": v(b)});
        match part {
            'a' => {
                concl!(complementary_mask(m, a, d, hull), {"ctx": cx, "part": "complementary"});
                concl!(m.is_submonoid(b) && sa_ext_mask(m, b, d), {"ctx": cx, "part": "b-extension"});
                concl!(b.intersect(hull) == d, {"ctx": cx, "part": "b-meet"});
                concl!(m.sumset(a, hull) == m.sumset(b, hull), {"ctx": cx, "part": "sum"});
            }
            'm' => {
                hyp!(m.is_submonoid(b));
                concl!(ok!(pair_has_am(m, b, hull)), cx);
            }
            'b' => {
                let fix = fix_mask(m, a.minus(d), d).union(d_max_mask(m, d));
                let got = minimal_cosets_in(m, b, d);
                concl!(got == singletons(fix), {"ctx": cx, "cosets": got.iter().map(|c| v(*c)).collect::<Vec<_>>()});
                let big = m.sumset(a, hull);
                let minimal = minimal_cosets_in(m, big, hull);
                for x in fix.iter() {
                    concl!(m.translate(x, hull) == Mask::singleton(x), {"ctx": cx, "x": x, "part": "isolated"});
                    concl!(minimal.contains(&Mask::singleton(x)), {"ctx": cx, "x": x, "part": "hull-minimal"});
                }
            }
            _ => {
                let (fa, fb) = (fix_mask(m, a, d), fix_mask(m, b, d));
                concl!(fa == fb, {"ctx": cx, "fix_a": v(fa), "fix_b": v(fb)});
                for x in fb.iter() {
                    for y in m.elements() {
                        let s = m.add(x, y);
                        concl!(!b.contains(s) || fb.contains(s), {"ctx": cx, "x": x, "v": y});
                    }
                }
            }
        }
        Trial::Hold
    })
}

fn d_max_mask(m: &FiniteModule, d: Mask) -> Mask {
    let f = fix_mask(m, d, d);
    if f.len() == 1 {
        f
    } else {
        Mask::EMPTY
    }
}

pub(crate) fn t10_8a(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    t10_8(ctx, rng, 'a')
}

pub(crate) fn t10_8am(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    t10_8(ctx, rng, 'm')
}

pub(crate) fn t10_8b(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    t10_8(ctx, rng, 'b')
}

pub(crate) fn t10_8c(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    t10_8(ctx, rng, 'c')
}

pub(crate) fn l10_9(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let e = some!(ctx.get(rng, "D", k));
        for c in minimal_cosets_in(m, m.all(), e.mask()) {
            for u in c.iter() {
                concl!(m.translate(u, e.mask()) == c, {"e": e.to_vec(), "coset": v(c), "u": u});
            }
        }
        Trial::Hold
    })
}

pub(crate) fn p10_10(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |rng, k| {
        let d = some!(ctx.get(rng, "D", k));
        let hull = subtractive_hull(&d).mask();
        let small = minimal_cosets_in(m, m.all(), d.mask());
        for big in minimal_cosets_in(m, m.all(), hull) {
            let inside: Vec<Mask> = small.iter().filter(|c| c.is_subset(&big)).copied().collect();
            let cx = json!({"d": d.to_vec(), "coset": v(big), "inside": inside.iter().map(|c| v(*c)).collect::<Vec<_>>()});
            concl!(inside.len() <= 1, cx);
            if let Some(c) = inside.first() {
                let u = c.first().expect("cosets are nonempty");
                concl!(m.translate(u, hull) == big, cx);
            }
        }
        Trial::Hold
    })
}

/// `{0}` is SA exactly when `V` lacks zero sums, and upper bound implies it.
pub(crate) fn i_lzs(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |_, _| {
        let zero = Mask::singleton(m.zero());
        let ub = ctx.le.is_antisymmetric();
        concl!(is_sa(m, zero, m.all()) == m.is_lzs(), {"lzs": m.is_lzs(), "part": "zero-sa"});
        concl!(!ub || m.is_lzs(), {"lzs": m.is_lzs(), "part": "ub"});
        Trial::Hold
    })
}

/// The converse: lacking zero sums makes `V` upper bound.
pub(crate) fn s10_ub(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    sample(ctx, rng, |_, _| {
        hyp!(m.is_lzs());
        concl!(ctx.le.is_antisymmetric(), {"witness": ctx.le.antisymmetry_witness()});
        Trial::Hold
    })
}

pub(crate) fn p13_1(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    let q = quotient(m).ok();
    sample(ctx, rng, |rng, k| {
        let q = some!(q.as_ref());
        let s = some!(ctx.get(rng, "A", k));
        let lhs = is_sa(m, s.mask(), m.all());
        let img = q.image(s.mask());
        let rhs = q.is_saturated(s.mask()) && is_sa(&q.module, img, q.module.all());
        concl!(lhs == rhs, {"s": s.to_vec(), "sa": lhs, "image": v(img)});
        Trial::Hold
    })
}

fn nat<'i>(ctx: &Ctx<'i>) -> NaturalOrder<'i> {
    NaturalOrder::new(ctx.m)
}

pub(crate) fn p13_2(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    let no = nat(ctx);
    sample(ctx, rng, |rng, _| {
        let x = ctx.elem(rng, m.all());
        let c = no.cbar(x).mask();
        concl!(m.is_submonoid(c) && is_sa(m, c, m.all()), {"x": x, "cbar": v(c)});
        Trial::Hold
    })
}

pub(crate) fn p13_3(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    let no = nat(ctx);
    sample(ctx, rng, |rng, _| {
        let x = ctx.elem(rng, m.all());
        let y = ctx.elem(rng, m.all());
        let x2 = m.add(x, y);
        let (a, b) = (no.cbar(x).mask(), no.cbar(x2).mask());
        concl!(a.is_subset(&b), {"x": x, "x'": x2});
        Trial::Hold
    })
}

pub(crate) fn l13_6(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    let no = nat(ctx);
    sample(ctx, rng, |rng, _| {
        let y = ctx.elem(rng, m.all());
        let my = ctx.elem(rng, m.positive_multiples(y));
        let x = ctx.elem(rng, ctx.le.down(my));
        let cx = json!({"x": x, "y": y, "my": my});
        concl!(no.cbar(x).mask().is_subset(&no.cbar(my).mask()), {"ctx": cx, "part": "cbar"});
        concl!(no.c_omega(x).mask().is_subset(&no.c_omega(y).mask()), {"ctx": cx, "part": "omega"});
        Trial::Hold
    })
}

pub(crate) fn p13_7(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    let no = nat(ctx);
    let arch = no.arch_partition();
    let omega: Vec<Mask> = m.elements().map(|x| no.c_omega(x).mask()).collect();
    sample(ctx, rng, |_, _| {
        for x in m.elements() {
            for y in m.elements() {
                if arch[x] == arch[y] {
                    concl!(omega[x] == omega[y], {"x": x, "y": y});
                }
            }
        }
        Trial::Hold
    })
}

/// `C̄(S)` is an SA-submodule for additively closed `S`, and equals
/// `C̄(T)` when `S` and `T` are cofinal.
pub(crate) fn s13_cbar(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = ctx.m;
    let no = nat(ctx);
    sample(ctx, rng, |rng, _| {
        let x = ctx.elem(rng, m.all());
        let s = m.positive_multiples(x);
        let c = ok!(no.cbar_set(s)).mask();
        concl!(m.is_submonoid(c) && is_sa(m, c, m.all()), {"s": v(s), "part": "sa"});
        concl!(c == no.c_omega(x).mask(), {"x": x, "part": "omega"});
        let y = ctx.elem(rng, m.all());
        let t = m.positive_multiples(m.add(x, y));
        let cofinal = |p: Mask, q: Mask| p.iter().all(|a| q.iter().any(|b| ctx.le.le(a, b)));
        if cofinal(s, t) && cofinal(t, s) {
            concl!(c == ok!(no.cbar_set(t)).mask(), {"s": v(s), "t": v(t), "part": "cofinal"});
        }
        Trial::Hold
    })
}
