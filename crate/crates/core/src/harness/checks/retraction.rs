//! Bipotent monoids, retractions onto chains and isolated vectors.

use super::*;
use crate::extensions::{d_complement_mask, pair_has_am, sa_ext_mask, saturation_mask};
use crate::fixtures::{fixture, supertropical_nu};
use crate::harness::{concl, hyp, ok, sample, some, v, Outcome, Trial};
use crate::lattice::{submodule, subtractive_hull};
use crate::order::{isolated_mask, natural_quasiorder, QuasiOrder};
use crate::retraction::{is_monotone_pointed, monoid_from_chain, order_from_bipotent, Retraction};
use rand::seq::SliceRandom;
use serde_json::json;

/// Total, antisymmetric and with `0` at the bottom on `carrier`.
fn chain_like(le: &QuasiOrder, carrier: Mask, zero: usize) -> bool {
    carrier.iter().all(|a| {
        le.le(zero, a) && carrier.iter().all(|b| (le.le(a, b) || le.le(b, a)) && (a == b || !(le.le(a, b) && le.le(b, a))))
    })
}

pub(crate) fn p11_3(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let r = &ctx.inst.retract;
    let phi = &ctx.inst.spec.retraction.phi;
    let image: Mask = phi.iter().copied().collect();
    sample(ctx, rng, |rng, k| {
        let (m, carrier, le) = if k % 2 == 0 {
            hyp!(ctx.m.is_bipotent());
            (ctx.m, ctx.m.all(), ctx.le.clone())
        } else {
            (r, image, natural_quasiorder(r))
        };
        let x = ctx.elem(rng, carrier);
        let y = ctx.elem(rng, carrier);
        hyp!(m.is_submonoid(carrier));
        concl!(chain_like(&le, carrier, m.zero()), {"carrier": v(carrier)});
        // the total order x ≤ y ⇔ x + y = y agrees with ≤ on the carrier
        concl!((m.add(x, y) == y) == le.le(x, y), {"x": x, "y": y});
        Trial::Hold
    })
}

fn random_chain(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut rest: Vec<usize> = (1..n).collect();
    rest.shuffle(rng);
    let mut order = vec![0];
    order.extend(rest);
    order
}

pub(crate) fn p11_4(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, _| {
        let (n1, n2) = (rand::Rng::gen_range(rng, 1..=5), rand::Rng::gen_range(rng, 1..=5));
        let (o1, o2) = (random_chain(rng, n1), random_chain(rng, n2));
        let (x1, x2) = (ok!(monoid_from_chain(&o1)), ok!(monoid_from_chain(&o2)));
        concl!(ok!(order_from_bipotent(&x1)) == o1, {"order": o1, "part": "roundtrip"});
        let f: Vec<usize> = (0..n1).map(|_| rand::Rng::gen_range(rng, 0..n2)).collect();
        let additive = f[x1.zero()] == x2.zero()
            && x1.elements().all(|a| x1.elements().all(|b| f[x1.add(a, b)] == x2.add(f[a], f[b])));
        concl!(additive == is_monotone_pointed(&o1, &o2, &f), {"src": o1, "dst": o2, "f": f, "part": "morphisms"});
        Trial::Hold
    })
}

/// The retraction monoid of the instance, checked directly against each
/// clause; `part` selects the clause.
fn t11_7(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, part: u8) -> Outcome {
    let m = &ctx.inst.retract;
    let spec = &ctx.inst.spec.retraction;
    let phi = spec.phi.clone();
    let le = natural_quasiorder(m);
    sample(ctx, rng, |_, _| {
        let cx = json!({"phi": phi, "order": spec.order});
        let n = m.size();
        match part {
            1 => {
                concl!(le.is_antisymmetric(), {"ctx": cx, "part": "upper-bound"});
                let r = ok!(Retraction::new(m, phi.clone()));
                concl!(r.is_special(), {"ctx": cx, "part": "special"});
            }
            2 => {
                for a in 0..n {
                    for b in 0..n {
                        for x in 0..n {
                            let between = le.le(a, x) && le.le(x, b) && phi[a] == phi[b];
                            concl!(!between || phi[x] == phi[a], {"ctx": cx, "a": a, "b": b, "v": x});
                        }
                    }
                }
                concl!((0..n).all(|x| phi[x] != m.zero() || x == m.zero()), {"ctx": cx, "part": "zero-fiber"});
            }
            3 => {
                let rank = |x: usize| spec.order.iter().position(|&y| y == x).expect("x in X");
                for x in spec.x.iter().copied() {
                    for u in 0..n {
                        let want = if rank(phi[u]) <= rank(x) { x } else { u };
                        concl!(m.add(u, x) == want, {"ctx": cx, "v": u, "x": x});
                    }
                }
            }
            _ => {
                for a in 0..n {
                    concl!(m.add(a, a) == phi[a], {"ctx": cx, "v": a});
                    for b in 0..n {
                        concl!(m.add(a, a) != m.add(b, b) || m.add(a, a) == m.add(a, b), {"ctx": cx, "v1": a, "v2": b});
                    }
                }
            }
        }
        Trial::Hold
    })
}

pub(crate) fn t11_7i(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    t11_7(ctx, rng, 1)
}

pub(crate) fn t11_7ii(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    t11_7(ctx, rng, 2)
}

pub(crate) fn t11_7iii(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    t11_7(ctx, rng, 3)
}

pub(crate) fn t11_7iv(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    t11_7(ctx, rng, 4)
}

pub(crate) fn r11_6(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let m = &ctx.inst.retract;
    let phi = ctx.inst.spec.retraction.phi.clone();
    sample(ctx, rng, |_, _| {
        let r = ok!(Retraction::new(m, phi.clone()));
        hyp!(r.is_special());
        concl!(r.follows_case_rule(), {"phi": phi});
        Trial::Hold
    })
}

/// `SUPERTROP(k)`: the instance module when it is one, otherwise a fresh one.
fn supertropical(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Option<(FiniteModule, usize)> {
    let spec = &ctx.inst.spec.module;
    let k = spec
        .strip_prefix("SUPERTROP(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.parse().ok())
        .unwrap_or_else(|| rand::Rng::gen_range(rng, 1..=3));
    Some((fixture(&format!("SUPERTROP({k})")).ok()?, k))
}

pub(crate) fn x11_7(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, _| {
        let (m, k) = some!(supertropical(ctx, rng));
        let nu: Vec<usize> = m.elements().map(|x| supertropical_nu(k, x)).collect();
        let r = Retraction::new(&m, nu.clone());
        concl!(r.is_ok(), {"k": k, "part": "retraction"});
        concl!(r.expect("checked").is_special(), {"k": k, "part": "special"});
        Trial::Hold
    })
}

/// A chain `0 < 1 < … < n-1` under max, `D = {0} ∪ [lo, hi]`.
pub(crate) fn x11_1(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, _| {
        let n = rand::Rng::gen_range(rng, 3..=7);
        let m = ok!(monoid_from_chain(&(0..n).collect::<Vec<_>>()));
        let lo = rand::Rng::gen_range(rng, 1..n);
        let hi = rand::Rng::gen_range(rng, lo..n);
        let d: Mask = std::iter::once(0).chain(lo..=hi).collect();
        let ds = ok!(submodule(&m, d));
        let upper: Mask = ((hi + 1)..n).collect();
        let below: Mask = (0..=hi).collect();
        let a = upper.union(d);
        let cx = json!({"n": n, "d": v(d)});
        concl!(subtractive_hull(&ds).mask() == below, {"ctx": cx, "part": "hull"});
        concl!(sa_ext_mask(&m, a, d), {"ctx": cx, "part": "extension"});
        concl!(d_complement_mask(&m, a, d, below), {"ctx": cx, "part": "complement"});
        concl!(saturation_mask(&m, a, d, below) == a, {"ctx": cx, "part": "saturated"});
        concl!(ok!(pair_has_am(&m, a, below)), {"ctx": cx, "part": "am"});
        concl!(isolated_mask(&m, d) == upper, {"ctx": cx, "part": "isolated", "got": v(isolated_mask(&m, d))});
        Trial::Hold
    })
}

/// `D̄ = {0} ∪` an interval of `X∖{0}` in the chain order.
fn dbar(rng: &mut ChaCha8Rng, order: &[usize]) -> Mask {
    let n = order.len();
    let mut d = Mask::singleton(order[0]);
    if n > 1 && rand::Rng::gen_bool(rng, 0.85) {
        let lo = rand::Rng::gen_range(rng, 1..n);
        let hi = rand::Rng::gen_range(rng, lo..n);
        for &x in &order[lo..=hi] {
            d.insert(x);
        }
    }
    d
}

/// The instance retraction, or `ν` on a supertropical module.
fn retraction_pair<'a>(ctx: &'a Ctx<'_>, k: usize, st: &'a Option<(FiniteModule, usize)>) -> Option<Retraction<'a>> {
    match (k % 3, st) {
        (2, Some((m, s))) => Retraction::new(m, m.elements().map(|x| supertropical_nu(*s, x)).collect()).ok(),
        _ => Retraction::new(&ctx.inst.retract, ctx.inst.spec.retraction.phi.clone()).ok(),
    }
}

pub(crate) fn s11_lift(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let st = fixture("SUPERTROP(2)").ok().map(|m| (m, 2));
    sample(ctx, rng, |rng, k| {
        let r = some!(retraction_pair(ctx, k, &st));
        let db = dbar(rng, r.order());
        let lift = ok!(r.lift_submonoid(db));
        concl!(lift.is_submonoid && lift.sandwich, {"dbar": v(db), "lift": lift});
        Trial::Hold
    })
}

pub(crate) fn l11_9(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let st = fixture("SUPERTROP(2)").ok().map(|m| (m, 2));
    sample(ctx, rng, |rng, k| {
        let r = some!(retraction_pair(ctx, k, &st));
        let m = r.module();
        let db = dbar(rng, r.order());
        let d: Mask = m.elements().filter(|&x| db.contains(r.phi()[x])).collect();
        let x = r.image();
        let down_v: Mask = m.elements().filter(|&a| m.elements().any(|w| d.contains(m.add(a, w)))).collect();
        let down_x: Mask = x.iter().filter(|&l| x.iter().any(|u| db.contains(m.add(l, u)))).collect();
        let lifted: Mask = m.elements().filter(|&a| down_x.contains(r.phi()[a])).collect();
        concl!(down_v == lifted, {"dbar": v(db), "down": v(down_v), "lifted": v(lifted)});
        Trial::Hold
    })
}

pub(crate) fn t11_9(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let st = fixture("SUPERTROP(2)").ok().map(|m| (m, 2));
    sample(ctx, rng, |rng, k| {
        let r = some!(retraction_pair(ctx, k, &st));
        let m = r.module();
        let db = dbar(rng, r.order());
        let d: Mask = m.elements().filter(|&x| db.contains(r.phi()[x])).collect();
        let x = r.image();
        let iso_x: Mask = x
            .iter()
            .filter(|&l| db.iter().all(|e| m.add(l, e) == l) && !x.iter().any(|y| y != l && db.iter().any(|e| m.add(y, e) == l)))
            .collect();
        hyp!(!iso_x.is_empty());
        let iso_v = isolated_mask(m, d);
        let lifted: Mask = m.elements().filter(|&a| iso_x.contains(r.phi()[a])).collect();
        concl!(lifted.is_subset(&iso_v), {"dbar": v(db), "lifted": v(lifted), "isolated": v(iso_v)});
        Trial::Hold
    })
}
