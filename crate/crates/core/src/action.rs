//! Monoid actions `α: V × X → X` and the stabilizer sets `C_α`.

use crate::algebra::{FiniteModule, Homomorphism, ValidationReport};
use crate::error::{Error, Result};
use crate::lattice::ElementSet;
use crate::mask::Mask;
use crate::order::{natural_quasiorder, stabilizing_scalars, QuotientModule};

/// An action of the additive monoid of `actor` on the additive monoid of
/// `target`, stored as a `|V| × |X|` table.
#[derive(Clone, Debug)]
pub struct ActionTable<'a> {
    actor: &'a FiniteModule,
    target: &'a FiniteModule,
    table: Vec<usize>,
}

impl<'a> ActionTable<'a> {
    pub fn new(actor: &'a FiniteModule, target: &'a FiniteModule, table: Vec<Vec<usize>>) -> Result<Self> {
        if table.len() != actor.size() || table.iter().any(|r| r.len() != target.size()) {
            return Err(Error::MalformedTable("action table must be |V| × |X|".into()));
        }
        if table.iter().flatten().any(|&x| x >= target.size()) {
            return Err(Error::MalformedTable("action value out of range".into()));
        }
        Ok(ActionTable { actor, target, table: table.into_iter().flatten().collect() })
    }

    /// `u +_α x = u + x` on a single module.
    pub fn translation(v: &'a FiniteModule) -> Self {
        let table = v.elements().flat_map(|u| v.elements().map(move |x| v.add(u, x))).collect();
        ActionTable { actor: v, target: v, table }
    }

    /// `u +_α x̄ = ū + x̄` on the upper-bound quotient.
    pub fn quotient_projection(v: &'a FiniteModule, q: &'a QuotientModule) -> Self {
        let t = &q.module;
        let table = v.elements().flat_map(|u| t.elements().map(move |x| t.add(q.project(u), x))).collect();
        ActionTable { actor: v, target: t, table }
    }

    /// `u +_α x = f(u) + x` for an additive map `f: V → X`.
    pub fn through(actor: &'a FiniteModule, target: &'a FiniteModule, f: &Homomorphism) -> Result<Self> {
        if f.map.len() != actor.size() || f.map.iter().any(|&y| y >= target.size()) {
            return Err(Error::MalformedTable("map has the wrong shape".into()));
        }
        let table = actor.elements().flat_map(|u| target.elements().map(move |x| target.add(f.apply(u), x))).collect();
        Ok(ActionTable { actor, target, table })
    }

    pub fn actor(&self) -> &'a FiniteModule {
        self.actor
    }

    pub fn target(&self) -> &'a FiniteModule {
        self.target
    }

    #[inline]
    pub fn apply(&self, u: usize, x: usize) -> usize {
        self.table[u * self.target.size() + x]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.target.size()).map(|r| r.to_vec()).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let (v, x) = (self.actor, self.target);
        let mut rep = ValidationReport::default();
        'shift: for u in v.elements() {
            for a in x.elements() {
                for b in x.elements() {
                    if self.apply(u, x.add(a, b)) != x.add(self.apply(u, a), b) {
                        rep.push("action-shifts-sum", vec![u, a, b]);
                        break 'shift;
                    }
                }
            }
        }
        'compose: for u1 in v.elements() {
            for u2 in v.elements() {
                for a in x.elements() {
                    if self.apply(v.add(u1, u2), a) != self.apply(u1, self.apply(u2, a)) {
                        rep.push("action-composes", vec![u1, u2, a]);
                        break 'compose;
                    }
                }
            }
        }
        if let Some(a) = x.elements().find(|&a| self.apply(v.zero(), a) != a) {
            rep.push("action-zero", vec![a]);
        }
        rep
    }

    /// `C_α(s) = {u | u +_α s = s}`.
    pub fn c_alpha(&self, s: usize) -> ElementSet<'a> {
        ElementSet::raw(self.actor, self.c_alpha_mask(s))
    }

    fn c_alpha_mask(&self, s: usize) -> Mask {
        self.actor.elements().filter(|&u| self.apply(u, s) == s).collect()
    }

    /// `C_α(S) = ⋃_{s ∈ S} C_α(s)` for an additively closed `S ⊆ X`.
    pub fn c_alpha_set(&self, s: Mask) -> Result<ElementSet<'a>> {
        if s.is_empty() || !self.target.is_add_closed(s) {
            return Err(Error::NotAddClosed);
        }
        let mut out = Mask::EMPTY;
        for x in s.iter() {
            out = out.union(self.c_alpha_mask(x));
        }
        Ok(ElementSet::raw(self.actor, out))
    }

    /// `ũ = u +_α 0`.
    pub fn tilde(&self, u: usize) -> usize {
        self.apply(u, self.target.zero())
    }

    /// `u ↦ ũ` respects sums and zero.
    pub fn tilde_is_hom(&self) -> bool {
        let (v, x) = (self.actor, self.target);
        self.tilde(v.zero()) == x.zero()
            && v.elements().all(|a| v.elements().all(|b| self.tilde(v.add(a, b)) == x.add(self.tilde(a), self.tilde(b))))
    }

    /// `u +_α x = ũ + x` everywhere.
    pub fn acts_by_tilde(&self) -> bool {
        let x = self.target;
        self.actor.elements().all(|u| x.elements().all(|a| self.apply(u, a) == x.add(self.tilde(u), a)))
    }

    /// Whether `≤_X` is antisymmetric.
    pub fn target_is_upper_bound(&self) -> bool {
        natural_quasiorder(self.target).is_antisymmetric()
    }

    /// `R_s = {λ | λ·C_α(s) ⊆ C_α(s)}` over the ring of the actor.
    pub fn r_sub(&self, s: usize) -> Mask {
        stabilizing_scalars(self.actor, self.c_alpha_mask(s))
    }
}
