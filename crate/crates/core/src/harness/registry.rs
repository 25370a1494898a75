//! Every checkable result, with its claim, suite and checker.

use super::checks::{actions as ac, exchange as ex, extensions as se, hierarchy as hi, order as or, retraction as re};
use super::{Ctx, Outcome};
use crate::error::{Error, Result};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub(crate) type Check = fn(&Ctx<'_>, &mut ChaCha8Rng) -> Outcome;

/// How a registry entry is treated by the runner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "note", rename_all = "kebab-case")]
pub enum Status {
    Checked,
    /// Checked, and known to have counterexamples; the note says which.
    KnownFalse(&'static str),
    /// Not run; the note says why.
    VacuousByDesign(&'static str),
}

#[derive(Clone, Copy, Debug)]
pub struct Theorem {
    pub id: &'static str,
    pub suite: &'static str,
    /// The conclusion being checked.
    pub claim: &'static str,
    pub status: Status,
    pub(crate) check: Option<Check>,
}

pub const SUITES: [&str; 7] =
    ["exchange-amalgam", "sa-extensions", "order-structure", "bipotent-retraction", "actions", "hierarchy", "invariants"];

const EX: &str = "exchange-amalgam";
const SE: &str = "sa-extensions";
const OR: &str = "order-structure";
const RE: &str = "bipotent-retraction";
const AC: &str = "actions";
const HI: &str = "hierarchy";
const IN: &str = "invariants";

const fn t(id: &'static str, suite: &'static str, claim: &'static str, check: Check) -> Theorem {
    Theorem { id, suite, claim, status: Status::Checked, check: Some(check) }
}

const fn f(id: &'static str, suite: &'static str, claim: &'static str, note: &'static str, check: Check) -> Theorem {
    Theorem { id, suite, claim, status: Status::KnownFalse(note), check: Some(check) }
}

static REGISTRY: &[Theorem] = &[
    t("P1.3", EX, "exchange equivalence is the finest additive equivalence relation with (d,0) ~ (0,d)", ex::p1_3),
    t("P1.6", EX, "a subpair has amalgamation iff its exchange classes are the restricted ones", ex::p1_6),
    t("R1.7", EX, "swapping the factors preserves classes; A₂ ⊆ A₁ forces amalgamation", ex::r1_7),
    t("P2.1", EX, "exchange equivalence is additive", ex::p2_1),
    t("T3.1", EX, "(W₁, W₂) has amalgamation", ex::t3_1),
    t("T3.2a", EX, "W₁ × W₂ is a union of exchange classes of A₁ × A₂", ex::t3_2a),
    t("T3.2b", EX, "W₁ + W₂ ∈ SA(A₁ + A₂)", ex::t3_2b),
    t("C3.3", EX, "A₁ is SA in A₁ + A₂", ex::c3_3),
    t("P4.2", EX, "multiple exchange equivalence is additive", ex::p4_2),
    t("T4.3", EX, "multiple exchange equivalence is the finest additive equivalence identifying placements of Aᵢ ∩ Aⱼ", ex::t4_3),
    t("T4.5", EX, "(W₁, …, Wₙ) has amalgamation", ex::t4_5),
    t("T4.6a", EX, "W₁ × ⋯ × Wₙ is a union of exchange classes", ex::t4_6a),
    t("T4.6b", EX, "W₁ + ⋯ + Wₙ ∈ SA(A₁ + ⋯ + Aₙ)", ex::t4_6b),
    t("C4.7", EX, "Wᵢ = W ∩ Aᵢ inherit amalgamation and exchange classes", ex::c4_7),
    Theorem {
        id: "S4.9",
        suite: EX,
        claim: "the amalgam is the colimit of the factor diagram",
        status: Status::VacuousByDesign(
            "a universal property over arbitrary target categories; amalgamation is checked through injectivity of κ",
        ),
        check: None,
    },
    t("P5.1", EX, "permuting the factors preserves classes and amalgamation", ex::p5_1),
    t("P5.2a", EX, "a homomorphism maps exchange classes of the pullback into exchange classes", ex::p5_2a),
    f(
        "P5.2b",
        EX,
        "an injective pullback reflects exchange classes and amalgamation",
        "needs A₁ + ⋯ + Aₙ ⊆ φ(V′): with V′ = 0 every pullback amalgamates",
        ex::p5_2b,
    ),
    t("P5.2s", EX, "a pullback bijective onto A₁ + ⋯ + Aₙ reflects exchange classes and amalgamation", ex::p5_2s),
    t("T5.3a", EX, "(A₀, A₁, A₂) has amalgamation when A₀ ⊆ A₁ and (A₁, A₂) has", ex::t5_3a),
    t("T5.3b", EX, "the classes of (A₀, A₁, A₂) are those of (A₁, A₂) under merging", ex::t5_3b),
    t("T5.4", EX, "every contraction of an amalgamating tuple amalgamates", ex::t5_4),
    t("C5.5", EX, "(A₁ + A₂, A₁ + A₃) has amalgamation", ex::c5_5),
    t("P6.2", SE, "W ∩ T is SA in W and T is a (W ∩ T)-complement of W", se::p6_2),
    t("P6.3", SE, "a D-complement of W is SA in V", se::p6_3),
    t("P6.4", SE, "W + U = V with D ⊆ U forces T ⊆ U", se::p6_4),
    t("T6.5", SE, "a D-complement T of W with T ⊆ U equals U", se::t6_5),
    t("R6.6", SE, "A₂ is an (A₁ ∩ A₂)-complement of A₁ in A₁ + A₂", se::r6_6),
    t("R7.2a", SE, "SA-extensions restrict downward and compose", se::r7_2a),
    t("P7.3", SE, "D ⊆ A is an SA-extension iff A∖D is additively closed and absorbs D", se::p7_3),
    t("T7.5", SE, "the saturation B is an SA-extension complementary to T with B + T = A + T", se::t7_5),
    f(
        "T7.7",
        SE,
        "the pair (A, T) has amalgamation",
        "fails for T ≠ D, e.g. C4 with A = {0,3}, D = {0}, T = {0,1}",
        se::t7_7,
    ),
    t("R7.8", SE, "D ⊆ T′ ⊆ T keeps complementarity and saturation", se::r7_8),
    f("R7.8am", SE, "(A, T′) has amalgamation for D ⊆ T′ ⊆ T", "inherits the failure of T7.7", se::r7_8am),
    t("T7.9", SE, "stripping to zero keeps an SA-extension with a complementary module", se::t7_9),
    f("T7.9am", SE, "the stripped pair has amalgamation", "inherits the failure of T7.7", se::t7_9am),
    f(
        "P8.1",
        SE,
        "every U′ between A and A + T is A + T′ for T′ = U′ ∩ T",
        "fails in B2 with A = {00,01}, D = {00}, T = {00,10}, U′ = {00,01,11}",
        se::p8_1,
    ),
    t("P8.1r", SE, "U′ = A + T″ with D ⊆ T″ ⊆ T is recovered from T′ = U′ ∩ T", se::p8_1r),
    t("S8.iso", SE, "Compl′ and Compl″ are order-isomorphic and Compl′ is a lower set", se::s8_iso),
    f("S8.lower", SE, "Compl″ is a lower set", "fails with the data refuting P8.1", se::s8_lower),
    t("R9.1", SE, "D ⊆ A′ ⊆ A stays an SA-extension complementary to T", se::r9_1),
    t("E9.2", SE, "an intersection of subtractive submodules is subtractive", se::e9_2),
    t("P9.4", SE, "D↓ is the subtractive hull of D", se::p9_4),
    t("T9.5", SE, "the subtractive hull of D is complementary to every SA-extension of D", se::t9_5),
    t("P9.6", SE, "A = D + Rx is an SA-extension not complementary to T′ ⊋ D↓", se::p9_6),
    t("T9.7", SE, "A₀ = Nac ∪ D is an SA-extension with A₀ + D↓ = V", se::t9_7),
    t("P10.3", OR, "the ⪯_D-maximal elements of U are Fix_D(U) and minimal D-cosets are singletons", or::p10_3),
    t("E10.4", OR, "{d_max} is the unique minimal D-coset in D", or::e10_4),
    t("P10.6", OR, "x + D↓ = {x} for x ∈ Fix_D(X)", or::p10_6),
    t("P10.7", OR, "V + Fix_D(V) ⊆ Fix_D(V)", or::p10_7),
    t("T10.8a", OR, "B is an SA-extension of D with B ∩ D↓ = D and A + D↓ = B + D↓", or::t10_8a),
    f("T10.8am", OR, "(B, D↓) has amalgamation", "restates T7.7 with T = D↓ and inherits its failure", or::t10_8am),
    t("T10.8b", OR, "the minimal D-cosets in B are {x} for x ∈ Fix_D(A∖D) and {d_max}", or::t10_8b),
    t("T10.8c", OR, "Fix_D(A) = Fix_D(B) is an upper set in B", or::t10_8c),
    t("L10.9", OR, "v + E = u + E for every u in a minimal coset v + E", or::l10_9),
    t("P10.10", OR, "a minimal D↓-coset contains at most one minimal D-coset u + D, and u + D↓ = v + D↓", or::p10_10),
    t("I.lzs", OR, "{0} is SA iff V lacks zero sums; upper bound implies it", or::i_lzs),
    f(
        "S10.ub",
        OR,
        "V is upper bound iff V lacks zero sums",
        "the converse fails: NCYC(1,2) lacks zero sums and is not upper bound",
        or::s10_ub,
    ),
    t("P11.3", RE, "a bipotent monoid is upper bound with total ordering and least element 0", re::p11_3),
    t("P11.4", RE, "bipotent monoids and pointed chains determine each other, with the same morphisms", re::p11_4),
    t("X11.1", RE, "in a max-chain the D-isolated vectors are those above D", re::x11_1),
    t("R11.6", RE, "a special retraction adds by the three-case rule", re::r11_6),
    t("T11.7i", RE, "(V,+) is an upper bound additive monoid and φ is special", re::t11_7i),
    t("T11.7ii", RE, "every fiber of φ is convex and φ⁻¹(0) = {0}", re::t11_7ii),
    t("T11.7iii", RE, "φ(v) ≤ x gives v + x = x, otherwise v + x = v", re::t11_7iii),
    t("T11.7iv", RE, "v + v = φ(v), and v₁ + v₁ = v₂ + v₂ gives v₁ + v₁ = v₁ + v₂", re::t11_7iv),
    t("X11.7", RE, "ν on a supertropical semiring is a special bipotent retraction", re::x11_7),
    t("S11.lift", RE, "φ⁻¹(D̄) is a submonoid closed between its nonzero levels", re::s11_lift),
    t("L11.9", RE, "D↓ = φ⁻¹(D̄↓)", re::l11_9),
    t("T11.9", RE, "fibers over D̄-isolated points are D-isolated", re::t11_9),
    t("R12.1", AC, "u ↦ ũ is a homomorphism and u +_α x = ũ + x ≥ x", ac::r12_1),
    t("P12.2", AC, "C_α(s) is an SA-submonoid of V", ac::p12_2),
    t("P12.3", AC, "C_α(s₁) + C_α(s₂) ⊆ C_α(s₁ + s₂)", ac::p12_3),
    t("P12.4a", AC, "C_α(S) is an SA-submonoid for additively closed S", ac::p12_4a),
    t("P12.4b", AC, "C_α(S) + C_α(T) ⊆ C_α(S + T)", ac::p12_4b),
    t("P12.4c", AC, "cofinal S and T give C_α(S) = C_α(T)", ac::p12_4c),
    t("E12.5", AC, "C(ℕx) = C(nx) for the least n with nx = (n+1)x", ac::e12_5),
    t("R12.7", AC, "archimedean-equivalent x, y stabilise in one class or share C_ω", ac::r12_7),
    t("S12.rx", AC, "R_x is a subsemiring containing ℕ₀·1", ac::s12_rx),
    t("P12.8", AC, "R_x is convex in R", ac::p12_8),
    t("D12.8", AC, "o_R is the smallest SA-subsemiring of R", ac::d12_8),
    t("C12.10", AC, "C_α(S) is an o_R-submodule", ac::c12_10),
    t("P13.1", OR, "S is SA iff S is a union of ≡_V classes and S̄ is SA in V̄", or::p13_1),
    t("P13.2", OR, "C̄(x) is an SA-submonoid of V", or::p13_2),
    t("P13.3", OR, "x ≤ x′ gives C̄(x) ⊆ C̄(x′)", or::p13_3),
    t("S13.or", OR, "C̄(x) and C̄(S) are o_R-submodules", ac::s13_or),
    t("S13.cbar", OR, "C̄(ℕx) = C̄_ω(x) is SA, and cofinal sets give equal C̄", or::s13_cbar),
    t("L13.6", OR, "x ≤ my gives C̄(x) ⊆ C̄(my) and C̄_ω(x) ⊆ C̄_ω(y)", or::l13_6),
    t("P13.7", OR, "Arch(x) = Arch(y) gives C̄_ω(x) = C̄_ω(y)", or::p13_7),
    f(
        "T13.8",
        HI,
        "C̄(S) is the amalgamation of the submonoids C̄(S₁), …, C̄(S_r)",
        "fails in SUPERTROP(1) with A₁ = {0,2} ⊆ A₂, S₁ = {0,2}, S₂ = {0}: 1 + 2 = 2 puts 1 in C̄(S) but in no C̄(Sₖ)",
        hi::t13_8,
    ),
    t("T13.8r", HI, "C̄(S) is the amalgamation of the traces C̄(S) ∩ Aₖ, each SA in Aₖ", hi::t13_8r),
    f(
        "E13.11",
        HI,
        "C̄_ω(x) = C̄_ω(x₁) + ⋯ + C̄_ω(x_r), each SA in W(x)",
        "fails in AMALGAM(FREE(SB,2),{0,3,5,6,7,8},{0,1,2,5,6,7,8}) at x₁ = 7, x₂ = 1: 3 + 2x = 2x but 3 is in no C̄_ω(xₖ) sum",
        hi::e13_11,
    ),
    t("E13.12", HI, "x ≤ x′ gives W(x) ⊆ W(x′) and C̄_ω(x) ⊆ C̄_ω(x′)", hi::e13_12),
    t("I.bfs", IN, "union-find exchange classes equal breadth-first reachability", ex::i_bfs),
];

/// The full registry in a fixed order.
pub fn registry() -> &'static [Theorem] {
    REGISTRY
}

/// Resolves `all`, a suite name, a theorem id, or a comma-separated list of
/// these into registry entries in registry order.
pub fn resolve_suite(sel: &str) -> Result<Vec<&'static Theorem>> {
    let mut keep = vec![false; REGISTRY.len()];
    for part in sel.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let mut hit = false;
        for (i, th) in REGISTRY.iter().enumerate() {
            if part == "all" || part == th.suite || part == th.id {
                keep[i] = true;
                hit = true;
            }
        }
        if !hit {
            return Err(Error::Parse(format!("unknown suite or theorem `{part}`")));
        }
    }
    if !keep.iter().any(|&k| k) {
        return Err(Error::Parse("empty suite selection".into()));
    }
    Ok(REGISTRY.iter().zip(keep).filter(|(_, k)| *k).map(|(t, _)| t).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_are_unique_and_suites_known() {
        let ids: BTreeSet<_> = REGISTRY.iter().map(|t| t.id).collect();
        assert_eq!(ids.len(), REGISTRY.len());
        assert!(REGISTRY.iter().all(|t| SUITES.contains(&t.suite)));
        assert!(REGISTRY.iter().all(|t| t.check.is_some() || matches!(t.status, Status::VacuousByDesign(_))));
    }

    #[test]
    fn every_numbered_result_has_an_entry() {
        let numbered = [
            "P1.3", "P1.6", "P2.1", "T3.1", "T3.2", "C3.3", "P4.2", "T4.3", "T4.5", "T4.6", "C4.7", "P5.1", "P5.2",
            "T5.3", "T5.4", "C5.5", "P6.2", "P6.3", "P6.4", "T6.5", "P7.3", "T7.5", "T7.7", "T7.9", "P8.1", "P9.4",
            "T9.5", "P9.6", "T9.7", "P10.3", "P10.6", "P10.7", "T10.8", "L10.9", "P10.10", "P11.3", "P11.4",
            "T11.7", "L11.9", "T11.9", "P12.2", "P12.3", "P12.4", "P12.8", "C12.10", "P13.1", "P13.2", "P13.3",
            "L13.6", "P13.7", "T13.8",
        ];
        for n in numbered {
            assert!(
                REGISTRY.iter().any(|t| t.id == n || (t.id.starts_with(n) && !t.id[n.len()..].starts_with(char::is_numeric))),
                "{n} missing"
            );
        }
    }

    #[test]
    fn selections_resolve() {
        assert_eq!(resolve_suite("all").unwrap().len(), REGISTRY.len());
        assert_eq!(resolve_suite("T6.5").unwrap().len(), 1);
        assert!(resolve_suite("T3.1,actions").unwrap().len() > 1);
        assert!(resolve_suite("nope").is_err());
    }
}
