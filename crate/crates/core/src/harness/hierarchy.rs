//! The amalgam `V = A₁ ∞ ⋯ ∞ A_r` and its hierarchy of `C̄`-submonoids.

use crate::algebra::FiniteModule;
use crate::error::{Error, Result};
use crate::exchange::{build_amalgam, exchange_partition, TupleSpace};
use crate::lattice::submodule;
use crate::mask::Mask;
use crate::order::{o_r, stabilizing_scalars, NaturalOrder};
use serde::Serialize;

/// Largest number of factors accepted.
const MAX_FACTORS: usize = 3;
/// Tuples inspected for the nesting checks.
const NESTING_CAP: usize = 400;

/// Everything computed by [`hierarchy_pipeline`]. Element indices refer to
/// the amalgam `V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HierarchyReport {
    pub factors: usize,
    pub amalgam_size: usize,
    /// `κ: V → V₀` is injective, i.e. `A₁, …, A_r` already amalgamate in `V₀`.
    pub kappa_injective: bool,
    /// `jₖ(Aₖ)`.
    pub embedded: Vec<Vec<usize>>,
    /// `S = S₁ + ⋯ + S_r`.
    pub s: Vec<usize>,
    /// `C̄(Sₖ) ⊆ Aₖ`.
    pub cbar_factors: Vec<Vec<usize>>,
    /// `C̄(S) ⊆ V`.
    pub cbar_sum: Vec<usize>,
    pub factors_sa: bool,
    pub sum_sa: bool,
    /// `C̄(S₁) + ⋯ + C̄(S_r) = C̄(S)`.
    pub sum_matches: bool,
    /// The space `(C̄(S₁), …, C̄(S_r))` has amalgamation in `V`.
    pub amalgamates: bool,
    /// `C̄(S) ∩ Aₖ`, the part of `C̄(S)` absorbed by all of `S`.
    pub traces: Vec<Vec<usize>>,
    /// Each trace is SA in `Aₖ`, they sum to `C̄(S)` and their space has amalgamation.
    pub traces_ok: bool,
    /// `C̄_ω(x) = Σ C̄_ω(xₖ)`, each summand SA in `W(x)`.
    pub omega_split: bool,
    /// First `(x₁, …, x_r)` where the split fails.
    pub omega_witness: Option<Vec<usize>>,
    /// `x ≤ x′ ⇒ W(x) ⊆ W(x′)` and `C̄_ω(x) ⊆ C̄_ω(x′)`.
    pub nesting: bool,
    /// `o_R` maps every `C̄(Sₖ)` and `C̄(S)` into itself.
    pub o_r_closed: bool,
}

impl HierarchyReport {
    pub fn ok(&self) -> bool {
        self.theorem_holds() && self.omega_split && self.nesting
    }

    /// The conclusion about `C̄(S)` and the `C̄(Sₖ)` as stated.
    pub fn theorem_holds(&self) -> bool {
        self.factors_sa && self.sum_sa && self.sum_matches && self.amalgamates && self.o_r_closed
    }

    /// The same conclusion with `C̄(Sₖ)` replaced by the traces `C̄(S) ∩ Aₖ`.
    pub fn traces_hold(&self) -> bool {
        self.sum_sa && self.traces_ok && self.o_r_closed
    }
}

fn sa_in(m: &FiniteModule, w: Mask, ambient: Mask) -> bool {
    w.is_subset(&ambient) && m.is_submonoid(w) && m.sa_witness_masks(w, ambient).is_none()
}

fn sum_all(m: &FiniteModule, parts: &[Mask]) -> Mask {
    parts.iter().fold(Mask::singleton(m.zero()), |acc, p| m.sumset(acc, *p))
}

/// Whether the submonoids `parts` of `m` amalgamate; false when one is not a submonoid.
fn space_has_am(m: &FiniteModule, parts: &[Mask]) -> Result<bool> {
    let cs: Result<Vec<_>> = parts.iter().map(|&c| submodule(m, c)).collect();
    match cs {
        Ok(cs) => Ok(exchange_partition(&TupleSpace::new(cs)?)?.has_amalgamation()),
        Err(_) => Ok(false),
    }
}

/// Builds the amalgam of `A₁, …, A_r ⊆ V₀` and checks the `C̄` hierarchy for
/// additively closed `Sₖ ⊆ Aₖ`.
pub fn hierarchy_pipeline(v0: &FiniteModule, factors: &[Vec<usize>], gens: &[Vec<usize>]) -> Result<HierarchyReport> {
    let r = factors.len();
    if r == 0 || r > MAX_FACTORS || gens.len() != r {
        return Err(Error::PreconditionFailed(format!("need 1..={MAX_FACTORS} factors, each with one S")));
    }
    let mut subs = Vec::with_capacity(r);
    for (k, (a, s)) in factors.iter().zip(gens).enumerate() {
        if a.iter().chain(s).any(|&x| x >= v0.size()) {
            return Err(Error::PreconditionFailed(format!("factor {} has an out-of-range element", k + 1)));
        }
        let a = submodule(v0, a.iter().copied().collect())
            .map_err(|_| Error::PreconditionFailed(format!("A{} is not a submodule", k + 1)))?;
        let s: Mask = s.iter().copied().collect();
        if s.is_empty() || !s.is_subset(&a.mask()) || !v0.is_add_closed(s) {
            return Err(Error::PreconditionFailed(format!("S{} must be a nonempty additively closed subset of A{}", k + 1, k + 1)));
        }
        subs.push(a);
    }
    let space = TupleSpace::new(subs)?;
    let part = exchange_partition(&space)?;
    let am = build_amalgam(&part)?;
    let vm = &am.module;
    // the bare monoid, so that additively closed sets are submodules
    let mon = FiniteModule::from_monoid(vm.add_table(), vm.zero())?;
    let no = NaturalOrder::new(&mon);
    let all = mon.all();

    let embed = |k: usize, s: &[usize]| -> Mask { s.iter().map(|&a| am.embed(k, a).expect("element of Aₖ")).collect() };
    let embedded: Vec<Mask> = (0..r).map(|k| am.embedded_factor(k)).collect();
    let s_parts: Vec<Mask> = (0..r).map(|k| embed(k, &gens[k])).collect();
    let s = sum_all(&mon, &s_parts);

    let cbar_factors: Vec<Mask> = (0..r)
        .map(|k| s_parts[k].iter().fold(Mask::EMPTY, |acc, x| acc.union(no.cbar_within(x, embedded[k]))))
        .collect();
    let cbar_sum = no.cbar_set(s)?.mask();

    let factors_sa = (0..r).all(|k| sa_in(&mon, cbar_factors[k], embedded[k]));
    let sum_sa = sa_in(&mon, cbar_sum, all);
    let sum_matches = sum_all(&mon, &cbar_factors) == cbar_sum;
    let amalgamates = space_has_am(&mon, &cbar_factors)?;
    let traces: Vec<Mask> = embedded.iter().map(|&e| e.intersect(cbar_sum)).collect();
    let traces_ok = (0..r).all(|k| sa_in(&mon, traces[k], embedded[k]))
        && sum_all(&mon, &traces) == cbar_sum
        && space_has_am(&mon, &traces)?;

    // tuples x = Σ xₖ with xₖ ∈ Aₖ, and the element each one sums to
    let omega: Vec<Mask> = mon.elements().map(|x| no.c_omega(x).mask()).collect();
    let w: Vec<Mask> = mon.elements().map(|x| no.w(x).mask()).collect();
    let mut omega_witness = None;
    for t in (0..space.len()).take(NESTING_CAP) {
        let parts: Vec<usize> = (0..r).map(|k| am.embed(k, space.coord(t, k)).expect("coordinate of Aₖ")).collect();
        let x = parts.iter().fold(mon.zero(), |acc, &p| mon.add(acc, p));
        let pieces: Vec<Mask> = parts.iter().map(|&p| omega[p]).collect();
        if sum_all(&mon, &pieces) != omega[x] || !pieces.iter().all(|&p| sa_in(&mon, p, w[x])) {
            omega_witness = Some(parts);
            break;
        }
    }
    let le = no.relation();
    let nesting = mon.elements().all(|x| {
        mon.elements()
            .all(|y| !le.le(x, y) || (w[x].is_subset(&w[y]) && omega[x].is_subset(&omega[y])))
    });

    let o = o_r(vm.ring());
    let o_r_closed = cbar_factors.iter().chain(std::iter::once(&cbar_sum)).all(|&c| o.is_subset(&stabilizing_scalars(vm, c)));

    let list = |m: Mask| m.iter().collect::<Vec<_>>();
    Ok(HierarchyReport {
        factors: r,
        amalgam_size: vm.size(),
        kappa_injective: am.kappa_injective(),
        embedded: embedded.iter().map(|&e| list(e)).collect(),
        s: list(s),
        cbar_factors: cbar_factors.iter().map(|&c| list(c)).collect(),
        cbar_sum: list(cbar_sum),
        factors_sa,
        sum_sa,
        sum_matches,
        amalgamates,
        traces: traces.iter().map(|&c| list(c)).collect(),
        traces_ok,
        omega_split: omega_witness.is_none(),
        omega_witness,
        nesting,
        o_r_closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn two_chains_in_c3() {
        let c3 = fixture("C3").unwrap();
        let rep = hierarchy_pipeline(&c3, &[vec![0, 1], vec![0, 2]], &[vec![1], vec![2]]).unwrap();
        assert_eq!(rep.amalgam_size, 4);
        assert!(!rep.kappa_injective);
        assert!(rep.ok(), "{rep:?}");
    }

    #[test]
    fn single_factor_is_trivial() {
        let c3 = fixture("C3").unwrap();
        let rep = hierarchy_pipeline(&c3, &[vec![0, 1, 2]], &[vec![2]]).unwrap();
        assert_eq!(rep.amalgam_size, 3);
        assert_eq!(rep.cbar_sum.len(), 3);
        assert!(rep.ok());
    }

    #[test]
    fn rejects_bad_input() {
        let c3 = fixture("C3").unwrap();
        assert!(hierarchy_pipeline(&c3, &vec![vec![0, 1]; 4], &vec![vec![1]; 4]).is_err());
        assert!(hierarchy_pipeline(&c3, &[vec![1]], &[vec![1]]).is_err());
        assert!(hierarchy_pipeline(&c3, &[vec![0, 1]], &[vec![2]]).is_err());
    }
}
