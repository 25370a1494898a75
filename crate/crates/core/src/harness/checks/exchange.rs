//! Exchange equivalence and amalgamation.

use super::*;
use crate::algebra::Homomorphism;
use crate::exchange::{restriction_compare, transport, transport_check, Restriction};
use crate::fixtures::product;
use crate::harness::{concl, hyp, ok, sample, some, Outcome, Trial};
use crate::lattice::{generate, submodule};
use crate::oracle::{bfs_partition, canonical_labels, congruence_partition};
use rand::seq::SliceRandom;
use serde_json::json;

/// Congruence-oracle size bound.
const ORACLE_CAP: usize = 200;

fn union_of_classes(p: &ExchangePartition<'_>, inside: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let mut state = vec![None; p.class_count()];
    for t in 0..p.space().len() {
        let c = p.class_of(t);
        match state[c] {
            None => state[c] = Some(inside(t)),
            Some(b) if b != inside(t) => return Some(p.space().tuple(t)),
            _ => {}
        }
    }
    None
}

fn in_product(sp: &TupleSpace<'_>, t: usize, ws: &[Submodule<'_>]) -> bool {
    (0..sp.arity()).all(|k| ws[k].contains(sp.coord(t, k)))
}

/// Oracle agreement, linearity and the defining identifications.
fn finest(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let fs = some!(factors(ctx, rng, k, n));
        let sp = some!(space(&fs));
        hyp!(sp.len() <= ORACLE_CAP);
        let p = ok!(exchange_partition(&sp));
        let fast = canonical_labels(p.labels());
        concl!(fast == congruence_partition(&sp), {"factors": masks(&fs), "part": "oracle"});
        concl!(linear(&p).is_none(), {"factors": masks(&fs), "scalar": linear(&p)});
        for i in 0..n {
            for j in 0..n {
                for d in sp.intersection(i, j).iter() {
                    concl!(p.class_of(sp.placed(i, d)) == p.class_of(sp.placed(j, d)), {"factors": masks(&fs), "d": d});
                }
            }
        }
        Trial::Hold
    })
}

pub(crate) fn p1_3(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    finest(ctx, rng, 2)
}

pub(crate) fn t4_3(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    finest(ctx, rng, 3)
}

pub(crate) fn p1_6(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let fs = some!(factors(ctx, rng, k, 2));
        let sp = some!(space(&fs));
        let p = ok!(exchange_partition(&sp));
        hyp!(p.has_amalgamation());
        let subs = if k == 0 && ctx.named("W1", 0).is_some() {
            vec![some!(ctx.named("W1", 0)), some!(ctx.named("W2", 0))]
        } else {
            hyp!(!ctx.pinned());
            vec![sub_of(ctx, rng, &fs[0]), sub_of(ctx, rng, &fs[1])]
        };
        hyp!(subs[0].is_subset(&fs[0]) && subs[1].is_subset(&fs[1]));
        let ss = some!(space(&subs));
        let q = ok!(exchange_partition(&ss));
        let coincide = ok!(restriction_compare(&q, &p)) == Restriction::Coincide;
        concl!(q.has_amalgamation() == coincide, {"factors": masks(&fs), "subs": masks(&subs)});
        Trial::Hold
    })
}

pub(crate) fn r1_7(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let fs = some!(factors(ctx, rng, k, 2));
        let sp = some!(space(&fs));
        let p = ok!(exchange_partition(&sp));
        let sw = ok!(sp.permute(&[1, 0]));
        let q = ok!(exchange_partition(&sw));
        let swap = |t: usize| sw.index_of(&[sp.coord(t, 1), sp.coord(t, 0)]).expect("swapped tuple");
        concl!(same_partition(&p, &q, swap), {"factors": masks(&fs), "part": "i"});
        concl!(p.has_amalgamation() == q.has_amalgamation(), {"factors": masks(&fs), "part": "i-am"});
        if fs[1].is_subset(&fs[0]) {
            for t in 0..sp.len() {
                let s = sp.sum(t);
                let flat = sp.index_of(&[s, ctx.m.zero()]).expect("sum lies in A1");
                concl!(p.class_of(t) == p.class_of(flat), {"factors": masks(&fs), "tuple": sp.tuple(t)});
            }
            concl!(p.has_amalgamation(), {"factors": masks(&fs), "part": "ii"});
        }
        Trial::Hold
    })
}

fn additivity(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let fs = some!(factors(ctx, rng, k, n));
        let sp = some!(space(&fs));
        hyp!(sp.len() <= 400);
        let p = ok!(exchange_partition(&sp));
        let bad = additive(&p);
        concl!(bad.is_none(), {"factors": masks(&fs), "tuples": bad});
        Trial::Hold
    })
}

pub(crate) fn p2_1(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    additivity(ctx, rng, 2)
}

pub(crate) fn p4_2(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    additivity(ctx, rng, 3)
}

/// `(Wᵢ)` with `Wᵢ ∈ SA(Aᵢ)` and `Wᵢ ∩ Aⱼ ⊆ Wⱼ`: either named, cut from an
/// SA-submodule of the sum, or random SA-submodules of each factor.
fn sa_family<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize, fs: &[Submodule<'i>]) -> Option<Vec<Submodule<'i>>> {
    if k == 0 {
        let named: Option<Vec<_>> = (1..=fs.len()).map(|i| ctx.named(&format!("W{i}"), 0)).collect();
        if named.is_some() || ctx.pinned() {
            return named;
        }
    }
    if rand::Rng::gen_bool(rng, 0.6) {
        let sum = total(fs);
        let w = sa_of(ctx, rng, &sum);
        Some(fs.iter().map(|a| w.intersect(a).expect("same ambient")).collect())
    } else {
        Some(fs.iter().map(|a| sa_of(ctx, rng, a)).collect())
    }
}

fn family_hyp(m: &FiniteModule, fs: &[Submodule<'_>], ws: &[Submodule<'_>]) -> bool {
    let n = fs.len();
    (0..n).all(|i| is_sa(m, ws[i].mask(), fs[i].mask()))
        && (0..n).all(|i| (0..n).all(|j| i == j || ws[i].mask().intersect(fs[j].mask()).is_subset(&ws[j].mask())))
}

/// Amalgamation, closedness of the product under `EC` and SA of the sum for
/// a family satisfying the hypotheses; `part` selects the conclusion.
fn sa_pairs(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, n: usize, part: char) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let fs = some!(factors(ctx, rng, k, n));
        let ws = some!(sa_family(ctx, rng, k, &fs));
        hyp!(family_hyp(ctx.m, &fs, &ws));
        let sp = some!(space(&fs));
        let p = ok!(exchange_partition(&sp));
        hyp!(p.has_amalgamation());
        let cx = json!({"factors": masks(&fs), "w": masks(&ws)});
        match part {
            'a' => {
                let wsp = some!(space(&ws));
                let q = ok!(exchange_partition(&wsp));
                concl!(q.has_amalgamation(), cx);
            }
            'u' => {
                let bad = union_of_classes(&p, |t| in_product(&sp, t, &ws));
                concl!(bad.is_none(), {"ctx": cx, "tuple": bad});
                if n > 2 {
                    let wsp = some!(space(&ws));
                    let q = ok!(exchange_partition(&wsp));
                    concl!(ok!(restriction_compare(&q, &p)) == Restriction::Coincide, cx);
                }
            }
            _ => {
                let (w, a) = (total(&ws), total(&fs));
                concl!(is_sa(ctx.m, w.mask(), a.mask()), cx);
            }
        }
        Trial::Hold
    })
}

pub(crate) fn t3_1(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sa_pairs(ctx, rng, 2, 'a')
}

pub(crate) fn t3_2a(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sa_pairs(ctx, rng, 2, 'u')
}

pub(crate) fn t3_2b(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sa_pairs(ctx, rng, 2, 'b')
}

pub(crate) fn t4_5(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sa_pairs(ctx, rng, 3, 'a')
}

pub(crate) fn t4_6a(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sa_pairs(ctx, rng, 3, 'u')
}

pub(crate) fn t4_6b(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sa_pairs(ctx, rng, 3, 'b')
}

pub(crate) fn c3_3(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let fs = some!(factors(ctx, rng, k, 2));
        let meet = ok!(fs[0].intersect(&fs[1]));
        hyp!(is_sa(ctx.m, meet.mask(), fs[1].mask()));
        hyp!(some!(has_am(&fs)));
        let sum = total(&fs);
        concl!(is_sa(ctx.m, fs[0].mask(), sum.mask()), {"factors": masks(&fs)});
        Trial::Hold
    })
}

pub(crate) fn c4_7(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let n = if k % 2 == 0 { 2 } else { 3 };
        let fs = some!(factors(ctx, rng, k, n));
        let sum = total(&fs);
        let w = some!(ctx.get_where(rng, "W", k, |s| is_sa(ctx.m, s.mask(), sum.mask())));
        hyp!(is_sa(ctx.m, w.mask(), sum.mask()));
        let ws: Vec<_> = fs.iter().map(|a| w.intersect(a).expect("same ambient")).collect();
        let sp = some!(space(&fs));
        let p = ok!(exchange_partition(&sp));
        let wsp = some!(space(&ws));
        let q = ok!(exchange_partition(&wsp));
        let cx = json!({"factors": masks(&fs), "w": w.to_vec()});
        if p.has_amalgamation() {
            concl!(q.has_amalgamation(), {"ctx": cx, "part": "a"});
        }
        concl!(ok!(restriction_compare(&q, &p)) == Restriction::Coincide, {"ctx": cx, "part": "b"});
        let bad = union_of_classes(&p, |t| in_product(&sp, t, &ws));
        concl!(bad.is_none(), {"ctx": cx, "part": "c", "tuple": bad});
        Trial::Hold
    })
}

pub(crate) fn p5_1(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let fs = some!(factors(ctx, rng, k, 3));
        let sp = some!(space(&fs));
        let p = ok!(exchange_partition(&sp));
        let mut perm = vec![0, 1, 2];
        perm.shuffle(rng);
        let ps = ok!(sp.permute(&perm));
        let q = ok!(exchange_partition(&ps));
        let map = |t: usize| {
            let tu = sp.tuple(t);
            ps.index_of(&perm.iter().map(|&k| tu[k]).collect::<Vec<_>>()).expect("permuted tuple")
        };
        let cx = json!({"factors": masks(&fs), "perm": perm});
        concl!(same_partition(&p, &q, map), {"ctx": cx, "part": "a"});
        concl!(p.has_amalgamation() == q.has_amalgamation(), {"ctx": cx, "part": "b"});
        Trial::Hold
    })
}

/// Same-ring homomorphisms used to pull spaces back.
enum Map {
    Scalar(usize),
    Inject,
    Diagonal,
    Sum,
}

/// Pulls `(A₁, …, Aₙ)` back along a homomorphism and checks both parts.
fn pullback(
    dom: &FiniteModule,
    phi: &Homomorphism,
    fs: &[Submodule<'_>],
    part: char,
    label: &str,
) -> Trial {
    let sd = some!(space(fs));
    let down = ok!(exchange_partition(&sd));
    let up_sp = ok!(transport(phi, dom, &sd));
    hyp!(up_sp.len() <= SPACE_CAP);
    let up = ok!(exchange_partition(&up_sp));
    let rep = transport_check(phi, &up, &down);
    let cx = json!({"map": label, "factors": masks(fs), "report": rep});
    if part == 'a' {
        concl!(rep.forward, cx);
    } else {
        hyp!(rep.injective_on_preimage);
        // the restricted form also asks for A₁ + ⋯ + Aₙ ⊆ φ(V′)
        hyp!(part != 's' || sd.total().mask().is_subset(&phi.image(dom.all())));
        concl!(rep.backward == Some(true) && rep.am_transfer == Some(true), cx);
    }
    Trial::Hold
}

fn p5_2(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, part: char) -> Outcome {
    let m = ctx.m;
    let r = m.ring();
    let vv = product(m, m).ok();
    let nb = m.size();
    sample(ctx, rng, |rng, k| {
        let choice = if ctx.pinned() { 0 } else if part == 'a' { k % 4 } else { k % 3 };
        let kind = match choice {
            0 if r.is_commutative() => Map::Scalar(rand::Rng::gen_range(rng, 0..r.size())),
            0 | 1 => Map::Inject,
            2 if part == 'a' => Map::Sum,
            _ => Map::Diagonal,
        };
        let n = if k % 3 == 0 { 3 } else { 2 };
        match kind {
            Map::Scalar(l) => {
                let phi = Homomorphism { map: m.elements().map(|x| m.act(l, x)).collect() };
                hyp!(phi.validate(m, m).is_ok());
                let fs = some!(factors(ctx, rng, k, n));
                pullback(m, &phi, &fs, part, &format!("scalar {l}"))
            }
            Map::Inject | Map::Diagonal => {
                hyp!(!ctx.pinned());
                let vv = some!(vv.as_ref());
                let phi = Homomorphism {
                    map: m
                        .elements()
                        .map(|x| if matches!(kind, Map::Inject) { x * nb + m.zero() } else { x * nb + x })
                        .collect(),
                };
                let pool: Vec<usize> = if part == 's' { phi.image(m.all()).iter().collect() } else { vv.elements().collect() };
                let fs: Vec<Submodule<'_>> = (0..n)
                    .map(|_| {
                        let g: Mask = (0..rand::Rng::gen_range(rng, 1..=2))
                            .map(|_| pool[rand::Rng::gen_range(rng, 0..pool.len())])
                            .collect();
                        generate(vv, g)
                    })
                    .collect();
                pullback(m, &phi, &fs, part, if matches!(kind, Map::Inject) { "inject" } else { "diagonal" })
            }
            Map::Sum => {
                hyp!(!ctx.pinned());
                let vv = some!(vv.as_ref());
                let phi = Homomorphism { map: vv.elements().map(|x| m.add(x / nb, x % nb)).collect() };
                let fs: Vec<Submodule<'_>> = (0..n)
                    .map(|_| {
                        let g = Mask::singleton(rand::Rng::gen_range(rng, 0..nb));
                        submodule(m, generate(m, g).mask()).expect("generated")
                    })
                    .collect();
                pullback(vv, &phi, &fs, part, "sum")
            }
        }
    })
}

pub(crate) fn p5_2a(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    p5_2(ctx, rng, 'a')
}

pub(crate) fn p5_2b(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    p5_2(ctx, rng, 'b')
}

pub(crate) fn p5_2s(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    p5_2(ctx, rng, 's')
}

/// `(A₁, …, Aₙ)` with `n = 2` and `A₀ ⊆ A₁`.
fn refine<'i>(ctx: &Ctx<'i>, rng: &mut ChaCha8Rng, k: usize) -> Option<(Vec<Submodule<'i>>, Submodule<'i>)> {
    let fs = factors(ctx, rng, k, 2)?;
    let a0 = match ctx.named("A0", k) {
        Some(a) => a,
        None if ctx.pinned() => return None,
        None => sub_of(ctx, rng, &fs[0]),
    };
    Some((fs, a0))
}

pub(crate) fn t5_3a(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let (fs, a0) = some!(refine(ctx, rng, k));
        hyp!(a0.is_subset(&fs[0]));
        hyp!(some!(has_am(&fs)));
        let ext = [a0, fs[0], fs[1]];
        concl!(some!(has_am(&ext)), {"factors": masks(&fs), "a0": a0.to_vec()});
        Trial::Hold
    })
}

pub(crate) fn t5_3b(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let (fs, a0) = some!(refine(ctx, rng, k));
        hyp!(a0.is_subset(&fs[0]));
        let sp = some!(space(&fs));
        let p = ok!(exchange_partition(&sp));
        hyp!(p.has_amalgamation());
        let ext = some!(space(&[a0, fs[0], fs[1]]));
        let q = ok!(exchange_partition(&ext));
        let merge = |t: usize| {
            let tu = ext.tuple(t);
            sp.index_of(&[ctx.m.add(tu[0], tu[1]), tu[2]]).expect("A₀ + A₁ = A₁")
        };
        let n = ext.len();
        for a in 0..n {
            for b in (a + 1)..n {
                let up = q.class_of(a) == q.class_of(b);
                let down = p.class_of(merge(a)) == p.class_of(merge(b));
                concl!(up == down, {"factors": masks(&fs), "a0": a0.to_vec(), "tuples": [ext.tuple(a), ext.tuple(b)]});
            }
        }
        Trial::Hold
    })
}

pub(crate) fn t5_4(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let fs = some!(factors(ctx, rng, k, 3));
        let sp = some!(space(&fs));
        hyp!(ok!(exchange_partition(&sp)).has_amalgamation());
        for blocks in [vec![vec![0, 1], vec![2]], vec![vec![0], vec![1, 2]], vec![vec![0, 2], vec![1]], vec![vec![0, 1, 2]]] {
            let c = ok!(sp.contract(&blocks));
            let cs = some!(space(c.factors()));
            concl!(ok!(exchange_partition(&cs)).has_amalgamation(), {"factors": masks(&fs), "blocks": blocks});
        }
        Trial::Hold
    })
}

pub(crate) fn c5_5(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    sample(ctx, rng, |rng, k| {
        let fs = some!(factors(ctx, rng, k, 3));
        hyp!(some!(has_am(&fs)));
        let sums = [ok!(fs[0].sum(&fs[1])), ok!(fs[0].sum(&fs[2]))];
        concl!(some!(has_am(&sums)), {"factors": masks(&fs)});
        Trial::Hold
    })
}

/// Union-find against breadth-first reachability on the declared spaces
/// and on random ones.
pub(crate) fn i_bfs(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Outcome {
    let declared: Vec<Vec<Submodule<'_>>> = ctx
        .inst
        .spec
        .spaces
        .iter()
        .filter_map(|names| names.iter().map(|n| ctx.inst.selection(n)).collect())
        .collect();
    sample(ctx, rng, |rng, k| {
        let fs = match declared.get(k) {
            Some(fs) => fs.clone(),
            None => {
                let n = if k % 2 == 0 { 2 } else { 3 };
                some!(factors(ctx, rng, k, n))
            }
        };
        let sp = some!(space(&fs));
        hyp!(sp.len() <= 400);
        let p = ok!(exchange_partition(&sp));
        concl!(canonical_labels(p.labels()) == bfs_partition(&sp), {"factors": masks(&fs)});
        Trial::Hold
    })
}
