//! D-quasiorderings, coset orders, fix sets, D-isolated vectors, the
//! congruence `≡_V` with its upper-bound quotient, the `C`/`C̄` operators,
//! archimedean classes, `R_x` and `o_R`.

use crate::algebra::{FiniteModule, SemiringTable};
use crate::error::{Error, Result};
use crate::lattice::{ElementSet, Submodule};
use crate::mask::Mask;
use serde::{Serialize, Serializer};
use std::sync::Arc;

/// A reflexive, transitive relation on `0..size`, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QuasiOrder {
    size: usize,
    rel: Vec<bool>,
}

impl QuasiOrder {
    pub(crate) fn from_fn(size: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut rel = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                rel.push(f(x, y));
            }
        }
        QuasiOrder { size, rel }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.rel[x * self.size + y]
    }

    /// Elements below `y`.
    pub fn down(&self, y: usize) -> Mask {
        (0..self.size).filter(|&x| self.le(x, y)).collect()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|x| self.le(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| (0..n).all(|y| !self.le(x, y) || (0..n).all(|z| !self.le(y, z) || self.le(x, z))))
    }

    /// First pair `x ≠ y` with `x ≤ y ≤ x`.
    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        let n = self.size;
        (0..n).flat_map(|x| ((x + 1)..n).map(move |y| (x, y))).find(|&(x, y)| self.le(x, y) && self.le(y, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_witness().is_none()
    }

    /// Class labels of the symmetric core, numbered by least member.
    pub fn symmetric_classes(&self) -> Vec<usize> {
        let n = self.size;
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if label[x] != usize::MAX {
                continue;
            }
            for y in x..n {
                if self.le(x, y) && self.le(y, x) {
                    label[y] = next;
                }
            }
            next += 1;
        }
        label
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        self.rel.chunks(self.size.max(1)).map(|r| r.to_vec()).collect()
    }
}

impl std::fmt::Debug for QuasiOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for x in 0..self.size {
            let row: String = (0..self.size).map(|y| if self.le(x, y) { '1' } else { '.' }).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl Serialize for QuasiOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix().serialize(s)
    }
}

// ---------------------------------------------------------------------------
// mask-level primitives, shared with the retraction and harness code

/// `x ≤_D y ⇔ ∃ d ∈ D: x + d = y`.
pub(crate) fn quasiorder_mask(m: &FiniteModule, d: Mask) -> QuasiOrder {
    let n = m.size();
    let mut rel = vec![false; n * n];
    for x in 0..n {
        for e in d.iter() {
            rel[x * n + m.add(x, e)] = true;
        }
    }
    QuasiOrder { size: n, rel }
}

pub(crate) fn is_stable_mask(m: &FiniteModule, x: Mask, d: Mask) -> bool {
    m.sumset(x, d).is_subset(&x)
}

pub(crate) fn fix_mask(m: &FiniteModule, x: Mask, d: Mask) -> Mask {
    x.iter().filter(|&v| d.iter().all(|e| m.add(v, e) == v)).collect()
}

/// `v + D = {v}` and no `x ≠ v`, `d ∈ D` with `x + d = v`.
pub(crate) fn isolated_mask(m: &FiniteModule, d: Mask) -> Mask {
    m.elements()
        .filter(|&v| {
            d.iter().all(|e| m.add(v, e) == v)
                && !m.elements().any(|x| x != v && d.iter().any(|e| m.add(x, e) == v))
        })
        .collect()
}

/// `{x | ∃ v: x + v ∈ D}` at the set level.
pub(crate) fn downset_mask(m: &FiniteModule, d: Mask) -> Mask {
    m.elements().filter(|&x| m.elements().any(|v| d.contains(m.add(x, v)))).collect()
}

// ---------------------------------------------------------------------------
// D-quasiorderings and cosets

pub fn d_quasiorder(d: &Submodule<'_>) -> QuasiOrder {
    quasiorder_mask(d.module(), d.mask())
}

/// `≤_V`, the quasiordering of the additive monoid.
pub fn natural_quasiorder(m: &FiniteModule) -> QuasiOrder {
    quasiorder_mask(m, m.all())
}

/// Antisymmetry of `≤_D`.
pub fn is_d_ordered(d: &Submodule<'_>) -> bool {
    d_quasiorder(d).is_antisymmetric()
}

/// `x ⪯_D y ⇔ y + D ⊆ x + D`, defined when `≤_D` is antisymmetric.
pub fn coset_order(d: &Submodule<'_>) -> Result<QuasiOrder> {
    if !is_d_ordered(d) {
        return Err(Error::NotDOrdered);
    }
    let m = d.module();
    let cosets: Vec<Mask> = m.elements().map(|x| m.translate(x, d.mask())).collect();
    Ok(QuasiOrder::from_fn(m.size(), |x, y| cosets[y].is_subset(&cosets[x])))
}

pub fn is_stable(x: &ElementSet<'_>, d: &Submodule<'_>) -> bool {
    is_stable_mask(d.module(), x.mask(), d.mask())
}

/// `Fix_D(X) = {x ∈ X | ∀ d ∈ D: x + d = x}` for a `D`-stable set `X`.
pub fn fix_set<'m>(x: &ElementSet<'m>, d: &Submodule<'_>) -> Result<ElementSet<'m>> {
    if !std::ptr::eq(x.module(), d.module()) {
        return Err(Error::AmbientMismatch);
    }
    if x.is_empty() || !is_stable(x, d) {
        return Err(Error::NotStable);
    }
    Ok(ElementSet::raw(x.module(), fix_mask(x.module(), x.mask(), d.mask())))
}

/// `⪯_D`-maximal elements of a stable set, computed from the coset order.
pub fn coset_maximal<'m>(x: &ElementSet<'m>, d: &Submodule<'_>) -> Result<ElementSet<'m>> {
    let ord = coset_order(d)?;
    let mask = x.iter().filter(|&a| x.iter().all(|b| !ord.le(a, b) || ord.le(b, a))).collect();
    Ok(ElementSet::raw(x.module(), mask))
}

pub fn d_isolated<'m>(d: &Submodule<'m>) -> ElementSet<'m> {
    ElementSet::raw(d.module(), isolated_mask(d.module(), d.mask()))
}

/// The `⪯_D`-maximum of `D`, i.e. the unique element of `Fix_D(D)`.
pub fn d_max(d: &Submodule<'_>) -> Option<usize> {
    let f = fix_mask(d.module(), d.mask(), d.mask());
    (f.len() == 1).then(|| f.first().expect("nonempty"))
}

/// Minimal `D`-cosets `x + D` with `x ∈ U`, distinct and in canonical order.
pub fn minimal_cosets<'m>(u: &Submodule<'m>, d: &Submodule<'_>) -> Result<Vec<ElementSet<'m>>> {
    if !is_d_ordered(d) {
        return Err(Error::NotDOrdered);
    }
    Ok(minimal_cosets_in(u.module(), u.mask(), d.mask())
        .into_iter()
        .map(|c| ElementSet::raw(u.module(), c))
        .collect())
}

/// Inclusion-minimal sets among `{x + E | x ∈ X}`.
pub(crate) fn minimal_cosets_in(m: &FiniteModule, x: Mask, e: Mask) -> Vec<Mask> {
    let mut cosets: Vec<Mask> = x.iter().map(|v| m.translate(v, e)).collect();
    cosets.sort_by_key(|c| (c.len(), *c));
    cosets.dedup();
    let mut out: Vec<Mask> = cosets
        .iter()
        .filter(|c| !cosets.iter().any(|o| o != *c && o.is_subset(c)))
        .copied()
        .collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// the congruence ≡_V and the upper-bound quotient

/// `≡_V` as the symmetric core of `≤_V`, with class labels.
pub fn congruence(m: &FiniteModule) -> (QuasiOrder, Vec<usize>) {
    let le = natural_quasiorder(m);
    let labels = le.symmetric_classes();
    let eq = QuasiOrder::from_fn(m.size(), |x, y| labels[x] == labels[y]);
    (eq, labels)
}

fn ring_quasiorder(r: &SemiringTable) -> QuasiOrder {
    let n = r.size();
    let mut rel = vec![false; n * n];
    for x in 0..n {
        for z in 0..n {
            rel[x * n + r.add(x, z)] = true;
        }
    }
    QuasiOrder { size: n, rel }
}

/// `≤_R`, the quasiordering of the additive monoid of a semiring.
pub fn ring_order(r: &SemiringTable) -> QuasiOrder {
    ring_quasiorder(r)
}

/// `V̄ = V/≡_V` as a module over `R̄ = R/≡_R`.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    /// `x ↦ x̄`.
    pub class_of: Vec<usize>,
    /// `λ ↦ λ̄` on the ring.
    pub ring_class_of: Vec<usize>,
    pub module: FiniteModule,
}

impl QuotientModule {
    pub fn project(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Image of a set of `V` in `V̄`.
    pub fn image(&self, s: Mask) -> Mask {
        s.iter().map(|x| self.class_of[x]).collect()
    }

    /// Whether `s` is a union of `≡_V` classes.
    pub fn is_saturated(&self, s: Mask) -> bool {
        (0..self.class_of.len()).all(|x| s.contains(x) == self.image(s).contains(self.class_of[x]))
    }
}

pub fn quotient(m: &FiniteModule) -> Result<QuotientModule> {
    let r = m.ring();
    let rl = ring_quasiorder(r).symmetric_classes();
    let rn = rl.iter().max().map_or(0, |&c| c + 1);
    let rep_r: Vec<usize> = (0..rn).map(|c| rl.iter().position(|&l| l == c).expect("class")).collect();
    let ring = SemiringTable::from_fn(
        rn,
        |a, b| rl[r.add(rep_r[a], rep_r[b])],
        |a, b| rl[r.mul(rep_r[a], rep_r[b])],
        rl[r.zero()],
        rl[r.one()],
    );
    let (_, vl) = congruence(m);
    let vn = vl.iter().max().map_or(0, |&c| c + 1);
    let rep_v: Vec<usize> = (0..vn).map(|c| vl.iter().position(|&l| l == c).expect("class")).collect();
    // well-definedness on every pair of representatives of a class
    for a in m.elements() {
        for b in m.elements() {
            if vl[m.add(a, b)] != vl[m.add(rep_v[vl[a]], rep_v[vl[b]])] {
                return Err(Error::Internal(format!("≡_V is not additive at ({a},{b})")));
            }
        }
        for l in 0..r.size() {
            if vl[m.act(l, a)] != vl[m.act(rep_r[rl[l]], rep_v[vl[a]])] {
                return Err(Error::Internal(format!("scalar action does not descend at ({l},{a})")));
            }
        }
    }
    for a in 0..r.size() {
        for b in 0..r.size() {
            if rl[r.add(a, b)] != rl[r.add(rep_r[rl[a]], rep_r[rl[b]])]
                || rl[r.mul(a, b)] != rl[r.mul(rep_r[rl[a]], rep_r[rl[b]])]
            {
                return Err(Error::Internal(format!("≡_R is not a congruence at ({a},{b})")));
            }
        }
    }
    let module = FiniteModule::from_fn(
        Arc::new(ring),
        vn,
        |a, b| vl[m.add(rep_v[a], rep_v[b])],
        |l, x| vl[m.act(rep_r[l], rep_v[x])],
        vl[m.zero()],
    );
    Ok(QuotientModule { class_of: vl, ring_class_of: rl, module })
}

// ---------------------------------------------------------------------------
// C, C̄, C_ω, archimedean classes, W(x)

/// Caches `≤_V` of one module for the stabilizer-style operators.
#[derive(Clone, Debug)]
pub struct NaturalOrder<'m> {
    module: &'m FiniteModule,
    le: QuasiOrder,
}

impl<'m> NaturalOrder<'m> {
    pub fn new(module: &'m FiniteModule) -> Self {
        NaturalOrder { module, le: natural_quasiorder(module) }
    }

    pub fn module(&self) -> &'m FiniteModule {
        self.module
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.le.le(x, y)
    }

    pub fn relation(&self) -> &QuasiOrder {
        &self.le
    }

    pub fn is_upper_bound(&self) -> bool {
        self.le.is_antisymmetric()
    }

    fn set(&self, mask: Mask) -> ElementSet<'m> {
        ElementSet::raw(self.module, mask)
    }

    /// `C(x) = {v | v + x = x}`.
    pub fn c(&self, x: usize) -> ElementSet<'m> {
        let m = self.module;
        self.set(m.elements().filter(|&v| m.add(v, x) == x).collect())
    }

    /// `C̄(x) = {u | u + x ≤_V x}`.
    pub fn cbar(&self, x: usize) -> ElementSet<'m> {
        let m = self.module;
        self.set(m.elements().filter(|&u| self.le(m.add(u, x), x)).collect())
    }

    /// `C̄(x)` restricted to `u ∈ within`.
    pub fn cbar_within(&self, x: usize, within: Mask) -> Mask {
        let m = self.module;
        within.iter().filter(|&u| self.le(m.add(u, x), x)).collect()
    }

    /// `C̄_ω(x) = ⋃_{n ≥ 1} C̄(nx)`.
    pub fn c_omega(&self, x: usize) -> ElementSet<'m> {
        let mut out = Mask::EMPTY;
        for y in self.module.positive_multiples(x).iter() {
            out = out.union(self.cbar(y).mask());
        }
        self.set(out)
    }

    /// `C̄(S) = ⋃_{s ∈ S} C̄(s)` for an additively closed `S`.
    pub fn cbar_set(&self, s: Mask) -> Result<ElementSet<'m>> {
        if !self.module.is_add_closed(s) {
            return Err(Error::NotAddClosed);
        }
        let mut out = Mask::EMPTY;
        for x in s.iter() {
            out = out.union(self.cbar(x).mask());
        }
        Ok(self.set(out))
    }

    /// `{y | ∃ n ≥ 1: y ≤_V nx}`.
    pub fn below_multiples(&self, x: usize) -> Mask {
        let mut out = Mask::EMPTY;
        for y in self.module.positive_multiples(x).iter() {
            out = out.union(self.le.down(y));
        }
        out
    }

    /// `Arch(x) = {y | ∃ n: y ≤ nx, ∃ m: x ≤ my}` with `n, m ≥ 1`.
    pub fn arch_class(&self, x: usize) -> ElementSet<'m> {
        let below = self.below_multiples(x);
        self.set(below.iter().filter(|&y| self.below_multiples(y).contains(x)).collect())
    }

    /// Class labels of the archimedean partition, numbered by least member.
    pub fn arch_partition(&self) -> Vec<usize> {
        let n = self.module.size();
        let below: Vec<Mask> = (0..n).map(|x| self.below_multiples(x)).collect();
        QuasiOrder::from_fn(n, |x, y| below[y].contains(x) && below[x].contains(y)).symmetric_classes()
    }

    /// `W(x)`, the convex hull of `ℕx`.
    pub fn w(&self, x: usize) -> ElementSet<'m> {
        self.set(self.below_multiples(x))
    }
}

pub fn c_of(m: &FiniteModule, x: usize) -> ElementSet<'_> {
    NaturalOrder::new(m).c(x)
}

pub fn cbar_of(m: &FiniteModule, x: usize) -> ElementSet<'_> {
    NaturalOrder::new(m).cbar(x)
}

pub fn c_omega(m: &FiniteModule, x: usize) -> ElementSet<'_> {
    NaturalOrder::new(m).c_omega(x)
}

pub fn cbar_of_set<'m>(s: &ElementSet<'m>) -> Result<ElementSet<'m>> {
    NaturalOrder::new(s.module()).cbar_set(s.mask())
}

pub fn arch_class(m: &FiniteModule, x: usize) -> ElementSet<'_> {
    NaturalOrder::new(m).arch_class(x)
}

pub fn arch_partition(m: &FiniteModule) -> Vec<usize> {
    NaturalOrder::new(m).arch_partition()
}

pub fn w_of(m: &FiniteModule, x: usize) -> ElementSet<'_> {
    NaturalOrder::new(m).w(x)
}

// ---------------------------------------------------------------------------
// R_x and o_R

/// `R_x = {λ | λ·C(x) ⊆ C(x)}` as a mask over the ring.
pub fn r_sub_x(m: &FiniteModule, x: usize) -> Mask {
    stabilizing_scalars(m, c_of(m, x).mask())
}

/// Scalars mapping `s` into itself.
pub fn stabilizing_scalars(m: &FiniteModule, s: Mask) -> Mask {
    (0..m.ring().size()).filter(|&l| s.iter().all(|u| s.contains(m.act(l, u)))).collect()
}

/// `ℕ₀·1_R`.
pub fn naturals_image(r: &SemiringTable) -> Mask {
    let mut out = Mask::singleton(r.zero());
    let mut cur = r.one();
    while !out.contains(cur) {
        out.insert(cur);
        cur = r.add(cur, r.one());
    }
    out
}

/// `o_R`, the convex hull of `ℕ₀·1_R` under `≤_R`.
pub fn o_r(r: &SemiringTable) -> Mask {
    let le = ring_quasiorder(r);
    convex_hull(&le, naturals_image(r))
}

/// `{λ | ∃ a, b ∈ Y: a ≤ λ ≤ b}`.
pub fn convex_hull(le: &QuasiOrder, y: Mask) -> Mask {
    (0..le.size())
        .filter(|&l| y.iter().any(|a| le.le(a, l)) && y.iter().any(|b| le.le(l, b)))
        .collect()
}

pub fn is_convex(le: &QuasiOrder, y: Mask) -> bool {
    convex_hull(le, y) == y
}

/// Contains `0`, `1` and is closed under both operations.
pub fn is_subsemiring(r: &SemiringTable, s: Mask) -> bool {
    s.contains(r.zero())
        && s.contains(r.one())
        && s.iter().all(|a| s.iter().all(|b| s.contains(r.add(a, b)) && s.contains(r.mul(a, b))))
}

/// Summand absorption of `s` in `(R, +)`.
pub fn is_sa_in_ring(r: &SemiringTable, s: Mask) -> bool {
    (0..r.size()).all(|a| (0..r.size()).all(|b| !s.contains(r.add(a, b)) || (s.contains(a) && s.contains(b))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::lattice::{submodule_of, whole, zero_submodule};

    fn v(e: ElementSet<'_>) -> Vec<usize> {
        e.to_vec()
    }

    #[test]
    fn quasiorder_examples() {
        let c3 = fixture("C3").unwrap();
        let q = d_quasiorder(&whole(&c3));
        assert!(q.le(0, 1) && q.le(1, 2) && !q.le(2, 1));
        let z2 = fixture("Z2").unwrap();
        let q = d_quasiorder(&whole(&z2));
        assert!(q.le(0, 1) && q.le(1, 0));
        assert!(!is_d_ordered(&whole(&z2)));
        let q = d_quasiorder(&zero_submodule(&c3));
        assert!((0..3).all(|x| (0..3).all(|y| q.le(x, y) == (x == y))));
        let c4 = fixture("C4").unwrap();
        for d in crate::lattice::enumerate_submodules(&c4).unwrap() {
            assert!(is_d_ordered(&d));
        }
    }

    #[test]
    fn coset_order_examples() {
        let c4 = fixture("C4").unwrap();
        let d = submodule_of(&c4, &[0, 1]).unwrap();
        let o = coset_order(&d).unwrap();
        assert!(!o.le(0, 2) || c4.translate(2, d.mask()).is_subset(&c4.translate(0, d.mask())));
        assert!(o.le(0, 1) && !o.le(1, 0));
        assert!((0..4).all(|x| o.le(x, x)));
        let z2 = fixture("Z2").unwrap();
        assert_eq!(coset_order(&whole(&z2)), Err(Error::NotDOrdered));
    }

    #[test]
    fn fix_and_isolated_examples() {
        let c4 = fixture("C4").unwrap();
        let d = submodule_of(&c4, &[0, 1]).unwrap();
        assert_eq!(v(fix_set(&whole(&c4).as_set(), &d).unwrap()), vec![1, 2, 3]);
        assert_eq!(v(d_isolated(&d)), vec![2, 3]);
        let n4 = fixture("NSAT4").unwrap();
        let d = submodule_of(&n4, &[0, 3]).unwrap();
        assert_eq!(v(fix_set(&whole(&n4).as_set(), &d).unwrap()), vec![3]);
        assert!(d_isolated(&d).is_empty());
        let z = zero_submodule(&c4);
        assert_eq!(v(fix_set(&whole(&c4).as_set(), &z).unwrap()), vec![0, 1, 2, 3]);
        assert_eq!(v(d_isolated(&z)), vec![0, 1, 2, 3]);
        let not_stable = ElementSet::from_slice(&c4, &[0]).unwrap();
        let d4 = submodule_of(&c4, &[0, 1]).unwrap();
        assert_eq!(fix_set(&not_stable, &d4), Err(Error::NotStable));
    }

    #[test]
    fn minimal_coset_examples() {
        let c4 = fixture("C4").unwrap();
        let d = submodule_of(&c4, &[0, 1]).unwrap();
        let cs: Vec<Vec<usize>> = minimal_cosets(&whole(&c4), &d).unwrap().into_iter().map(v).collect();
        assert_eq!(cs, vec![vec![1], vec![2], vec![3]]);
        let cs = minimal_cosets(&whole(&c4), &zero_submodule(&c4)).unwrap();
        assert_eq!(cs.len(), 4);
        let n4 = fixture("NSAT4").unwrap();
        let d = submodule_of(&n4, &[0, 3]).unwrap();
        let cs: Vec<Vec<usize>> = minimal_cosets(&whole(&n4), &d).unwrap().into_iter().map(v).collect();
        assert_eq!(cs, vec![vec![3]]);
        assert_eq!(d_max(&d), Some(3));
    }

    #[test]
    fn congruence_and_quotient() {
        let c3 = fixture("C3").unwrap();
        assert_eq!(congruence(&c3).1, vec![0, 1, 2]);
        let z2 = fixture("Z2").unwrap();
        assert_eq!(congruence(&z2).1, vec![0, 0]);
        let q = quotient(&z2).unwrap();
        assert_eq!(q.module.size(), 1);
        assert_eq!(q.module.ring().size(), 1);
        let b2 = fixture("B2").unwrap();
        assert_eq!(congruence(&b2).1, vec![0, 1, 2, 3]);
        let c4 = fixture("C4").unwrap();
        let q = quotient(&c4).unwrap();
        assert_eq!(q.module.add_table(), c4.add_table());
        assert!(q.module.validate().ok() && q.module.is_lzs());
    }

    #[test]
    fn stabilizer_examples() {
        let c3 = fixture("C3").unwrap();
        assert_eq!(v(c_of(&c3, 2)), vec![0, 1, 2]);
        assert_eq!(v(c_of(&c3, 1)), vec![0, 1]);
        assert_eq!(v(c_of(&c3, 0)), vec![0]);
        assert_eq!(v(c_omega(&c3, 1)), vec![0, 1]);
        let n4 = fixture("NSAT4").unwrap();
        assert_eq!(v(c_of(&n4, 3)), vec![0, 1, 2, 3]);
        assert_eq!(v(c_omega(&n4, 1)), vec![0, 1, 2, 3]);
        let s = ElementSet::from_slice(&n4, &[1, 2, 3]).unwrap();
        assert_eq!(v(cbar_of_set(&s).unwrap()), vec![0, 1, 2, 3]);
        let s = ElementSet::from_slice(&c3, &[2]).unwrap();
        assert_eq!(v(cbar_of_set(&s).unwrap()), vec![0, 1, 2]);
        let s = ElementSet::from_slice(&n4, &[1]).unwrap();
        assert_eq!(cbar_of_set(&s), Err(Error::NotAddClosed));
    }

    #[test]
    fn arch_and_w_examples() {
        let n4 = fixture("NSAT4").unwrap();
        assert_eq!(arch_partition(&n4), vec![0, 1, 1, 1]);
        let c3 = fixture("C3").unwrap();
        assert_eq!(arch_partition(&c3), vec![0, 1, 2]);
        assert_eq!(v(arch_class(&c3, 0)), vec![0]);
        assert_eq!(v(w_of(&n4, 1)), vec![0, 1, 2, 3]);
        assert_eq!(v(w_of(&c3, 1)), vec![0, 1]);
        assert_eq!(v(w_of(&c3, 0)), vec![0]);
    }

    #[test]
    fn scalar_examples() {
        let b = crate::fixtures::boolean();
        assert_eq!(o_r(&b), Mask::full(2));
        let n4 = fixture("NSAT4").unwrap();
        assert_eq!(o_r(n4.ring()), Mask::full(4));
        assert_eq!(r_sub_x(&n4, 3), Mask::full(4));
        assert!(is_subsemiring(n4.ring(), r_sub_x(&n4, 1)));
    }
}
