//! Submodules as bitsets: generation, enumeration, the SA predicate,
//! subtractive submodules and the hull operators.

use crate::algebra::FiniteModule;
use crate::error::{Error, Result};
use crate::mask::Mask;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// Subset scans are used up to this carrier size.
pub const SUBSET_SCAN_MAX: usize = 16;

/// Upper bound on the number of submodules an enumeration may return.
pub const DEFAULT_ENUMERATION_CAP: usize = 1 << 16;

/// A subset of a module closed under addition and scalar action.
#[derive(Clone, Copy)]
pub struct Submodule<'m> {
    module: &'m FiniteModule,
    mask: Mask,
}

/// A subset of a module with no closure requirement.
#[derive(Clone, Copy)]
pub struct ElementSet<'m> {
    module: &'m FiniteModule,
    mask: Mask,
}

macro_rules! set_common {
    ($t:ident) => {
        impl<'m> $t<'m> {
            pub fn module(&self) -> &'m FiniteModule {
                self.module
            }
            pub fn mask(&self) -> Mask {
                self.mask
            }
            pub fn contains(&self, x: usize) -> bool {
                self.mask.contains(x)
            }
            pub fn len(&self) -> usize {
                self.mask.len()
            }
            pub fn is_empty(&self) -> bool {
                self.mask.is_empty()
            }
            pub fn iter(&self) -> crate::mask::MaskIter {
                self.mask.iter()
            }
            pub fn to_vec(&self) -> Vec<usize> {
                self.mask.to_vec()
            }
            pub fn same_ambient(&self, m: &FiniteModule) -> bool {
                std::ptr::eq(self.module, m)
            }
        }

        impl PartialEq for $t<'_> {
            fn eq(&self, o: &Self) -> bool {
                std::ptr::eq(self.module, o.module) && self.mask == o.mask
            }
        }
        impl Eq for $t<'_> {}

        impl PartialOrd for $t<'_> {
            fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
                Some(self.cmp(o))
            }
        }
        impl Ord for $t<'_> {
            /// Canonical order: popcount, then mask value.
            fn cmp(&self, o: &Self) -> Ordering {
                (self.mask.len(), self.mask).cmp(&(o.mask.len(), o.mask))
            }
        }

        impl fmt::Display for $t<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(&self.mask, f)
            }
        }
        impl fmt::Debug for $t<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(&self.mask, f)
            }
        }
        impl Serialize for $t<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.mask.serialize(s)
            }
        }
    };
}

set_common!(Submodule);
set_common!(ElementSet);

impl<'m> Submodule<'m> {
    pub fn as_set(&self) -> ElementSet<'m> {
        ElementSet { module: self.module, mask: self.mask }
    }

    pub fn is_subset(&self, o: &Submodule<'_>) -> bool {
        self.mask.is_subset(&o.mask)
    }

    fn check(&self, o: &Submodule<'_>) -> Result<()> {
        if std::ptr::eq(self.module, o.module) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// `A + B`; closed automatically.
    pub fn sum(&self, o: &Submodule<'_>) -> Result<Submodule<'m>> {
        self.check(o)?;
        Ok(Submodule { module: self.module, mask: self.module.sumset(self.mask, o.mask) })
    }

    pub fn intersect(&self, o: &Submodule<'_>) -> Result<Submodule<'m>> {
        self.check(o)?;
        Ok(Submodule { module: self.module, mask: self.mask.intersect(o.mask) })
    }

    /// `A ∖ D` as an element set.
    pub fn minus(&self, o: &Submodule<'_>) -> Result<ElementSet<'m>> {
        self.check(o)?;
        Ok(ElementSet { module: self.module, mask: self.mask.minus(o.mask) })
    }

    /// Summand absorption of `self` inside `ambient`.
    pub fn is_sa(&self, ambient: &Submodule<'_>) -> Result<bool> {
        Ok(self.sa_witness(ambient)?.is_none())
    }

    /// The lexicographically least pair `(x, y)` in the ambient with
    /// `x + y ∈ W` but not both in `W`.
    pub fn sa_witness(&self, ambient: &Submodule<'_>) -> Result<Option<(usize, usize)>> {
        self.check(ambient)?;
        if !self.is_subset(ambient) {
            return Err(Error::Containment(format!("{} is not inside {}", self.mask, ambient.mask)));
        }
        Ok(self.module.sa_witness_masks(self.mask, ambient.mask))
    }
}

impl<'m> ElementSet<'m> {
    pub fn new(module: &'m FiniteModule, mask: Mask) -> Result<Self> {
        if !mask.is_subset(&module.all()) {
            return Err(Error::Containment("element index out of range".into()));
        }
        Ok(ElementSet { module, mask })
    }

    pub fn from_slice(module: &'m FiniteModule, xs: &[usize]) -> Result<Self> {
        ElementSet::new(module, xs.iter().collect())
    }

    pub(crate) fn raw(module: &'m FiniteModule, mask: Mask) -> Self {
        ElementSet { module, mask }
    }

    /// Reinterprets the set as a submodule if it is one.
    pub fn to_submodule(&self) -> Result<Submodule<'m>> {
        submodule(self.module, self.mask)
    }
}

/// Wraps a mask that is already known to be closed.
pub(crate) fn closed(module: &FiniteModule, mask: Mask) -> Submodule<'_> {
    debug_assert!(module.is_closed(mask), "mask {mask} is not closed");
    Submodule { module, mask }
}

/// Validates `mask` as a submodule.
pub fn submodule(module: &FiniteModule, mask: Mask) -> Result<Submodule<'_>> {
    if !mask.is_subset(&module.all()) {
        return Err(Error::Containment("element index out of range".into()));
    }
    if !module.is_closed(mask) {
        return Err(Error::NotASubmodule(mask.to_string()));
    }
    Ok(Submodule { module, mask })
}

pub fn submodule_of<'m>(module: &'m FiniteModule, xs: &[usize]) -> Result<Submodule<'m>> {
    submodule(module, xs.iter().collect())
}

pub fn whole(module: &FiniteModule) -> Submodule<'_> {
    Submodule { module, mask: module.all() }
}

pub fn zero_submodule(module: &FiniteModule) -> Submodule<'_> {
    Submodule { module, mask: Mask::singleton(module.zero()) }
}

/// Mask-level closure used by [`generate`].
pub(crate) fn close_mask(module: &FiniteModule, gens: Mask) -> Mask {
    let mut set = gens.with(module.zero());
    let mut queue: VecDeque<usize> = set.iter().collect();
    while let Some(x) = queue.pop_front() {
        let mut fresh = Vec::new();
        for y in set.iter() {
            let s = module.add(x, y);
            if !set.contains(s) {
                fresh.push(s);
            }
        }
        for l in 0..module.ring().size() {
            let s = module.act(l, x);
            if !set.contains(s) {
                fresh.push(s);
            }
        }
        for s in fresh {
            if !set.contains(s) {
                set.insert(s);
                queue.push_back(s);
            }
        }
    }
    set
}

/// The least submodule containing `gens`.
pub fn generate(module: &FiniteModule, gens: Mask) -> Submodule<'_> {
    closed(module, close_mask(module, gens.intersect(module.all())))
}

/// All submodules in canonical `(popcount, mask)` order.
pub fn enumerate_submodules(module: &FiniteModule) -> Result<Vec<Submodule<'_>>> {
    enumerate_submodules_capped(module, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_submodules_capped(module: &FiniteModule, cap: usize) -> Result<Vec<Submodule<'_>>> {
    let n = module.size();
    let mut masks: Vec<Mask> = if n <= SUBSET_SCAN_MAX {
        let others: Vec<usize> = module.elements().filter(|&x| x != module.zero()).collect();
        let mut out = Vec::new();
        for bits in 0u32..(1u32 << others.len()) {
            let mut m = Mask::singleton(module.zero());
            for (k, &x) in others.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    m.insert(x);
                }
            }
            if module.is_closed(m) {
                out.push(m);
                if out.len() > cap {
                    return Err(Error::CapExceeded(format!("more than {cap} submodules")));
                }
            }
        }
        out
    } else {
        // every submodule is reached by adjoining its elements one at a time
        let start = close_mask(module, Mask::EMPTY);
        let mut seen: BTreeSet<Mask> = BTreeSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            for x in module.elements() {
                if s.contains(x) {
                    continue;
                }
                let t = close_mask(module, s.with(x));
                if seen.insert(t) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded(format!("more than {cap} submodules")));
                    }
                    queue.push_back(t);
                }
            }
        }
        seen.into_iter().collect()
    };
    masks.sort_by_key(|m| (m.len(), *m));
    Ok(masks.into_iter().map(|m| closed(module, m)).collect())
}

/// `SA(A, C)`: SA-submodules of `A` containing `C`, filtered from `all`.
pub fn enumerate_sa<'m>(all: &[Submodule<'m>], a: &Submodule<'m>, c: &Submodule<'m>) -> Result<Vec<Submodule<'m>>> {
    sa_filter(all, a, c, a)
}

/// `SA_V(A, C)`: submodules between `C` and `A` that are SA in the whole module.
pub fn enumerate_sa_in_v<'m>(all: &[Submodule<'m>], a: &Submodule<'m>, c: &Submodule<'m>) -> Result<Vec<Submodule<'m>>> {
    sa_filter(all, a, c, &whole(a.module()))
}

fn sa_filter<'m>(
    all: &[Submodule<'m>],
    a: &Submodule<'m>,
    c: &Submodule<'m>,
    ambient: &Submodule<'m>,
) -> Result<Vec<Submodule<'m>>> {
    a.check(c)?;
    if !c.is_subset(a) {
        return Err(Error::Containment(format!("{} is not inside {}", c.mask, a.mask)));
    }
    let mut out = Vec::new();
    for w in all {
        w.check(a)?;
        if c.is_subset(w) && w.is_subset(a) && w.module.sa_witness_masks(w.mask, ambient.mask).is_none() {
            out.push(*w);
        }
    }
    Ok(out)
}

/// `(x + T) ∩ T ≠ ∅ ⇒ x ∈ T` for every `x` in the module.
pub fn is_subtractive(t: &Submodule<'_>) -> bool {
    let m = t.module;
    m.elements().all(|x| t.contains(x) || m.translate(x, t.mask).is_disjoint(&t.mask))
}

/// Elements without access to `D` through `D` (`Nac_D`) or through the whole
/// module (`Nac_V`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub enum Access {
    D,
    V,
}

pub fn nac<'m>(d: &Submodule<'m>, mode: Access) -> ElementSet<'m> {
    let m = d.module;
    let through = match mode {
        Access::D => d.mask,
        Access::V => m.all(),
    };
    let mask = m.elements().filter(|&x| m.translate(x, through).is_disjoint(&d.mask)).collect();
    ElementSet { module: m, mask }
}

/// `{x | (x + D) ∩ D ≠ ∅}`, the complement of `Nac_D(D)`.
pub fn subtractive_hull<'m>(d: &Submodule<'m>) -> Submodule<'m> {
    let m = d.module;
    let mask = m.all().minus(nac(d, Access::D).mask);
    closed(m, mask)
}

/// `{x | ∃v: x + v ∈ D}`, the complement of `Nac_V(D)`.
pub fn sa_closure<'m>(d: &Submodule<'m>) -> Submodule<'m> {
    let m = d.module;
    closed(m, m.all().minus(nac(d, Access::V).mask))
}

/// The least SA-submodule of `ambient` containing `gens`:
/// `{x ∈ A | ∃y ∈ A: x + y ∈ ⟨gens⟩}`.
pub fn sa_closure_within<'m>(gens: Mask, ambient: &Submodule<'m>) -> Result<Submodule<'m>> {
    let m = ambient.module;
    if !gens.is_subset(&ambient.mask) {
        return Err(Error::Containment("generators outside the ambient submodule".into()));
    }
    let d = close_mask(m, gens);
    let mask = ambient
        .mask
        .iter()
        .filter(|&x| ambient.mask.iter().any(|y| d.contains(m.add(x, y))))
        .collect();
    Ok(closed(m, mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn generate_examples() {
        let b2 = fixture("B2").unwrap();
        assert_eq!(generate(&b2, Mask::singleton(1)).to_vec(), vec![0, 1]);
        let n4 = fixture("NSAT4").unwrap();
        assert_eq!(generate(&n4, Mask::singleton(2)).to_vec(), vec![0, 2, 3]);
        let c3 = fixture("C3").unwrap();
        assert_eq!(generate(&c3, Mask::EMPTY).to_vec(), vec![0]);
    }

    #[test]
    fn enumeration_counts() {
        let b2 = fixture("B2").unwrap();
        assert_eq!(enumerate_submodules(&b2).unwrap().len(), 7);
        let c3 = fixture("C3").unwrap();
        let subs: Vec<Vec<usize>> = enumerate_submodules(&c3).unwrap().iter().map(|s| s.to_vec()).collect();
        assert_eq!(subs, vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2]]);
        let n4 = fixture("NSAT4").unwrap();
        let subs: Vec<Vec<usize>> = enumerate_submodules(&n4).unwrap().iter().map(|s| s.to_vec()).collect();
        assert_eq!(subs, vec![vec![0], vec![0, 3], vec![0, 2, 3], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn generator_search_matches_subset_scan() {
        for name in ["FREE(BOOL,3)", "PRODUCT(CHAIN(2),CHAIN(2))", "SUPERTROP(3)"] {
            let m = fixture(name).unwrap();
            let scan: Vec<Mask> = enumerate_submodules(&m).unwrap().iter().map(|s| s.mask()).collect();
            let search: Vec<Mask> =
                enumerate_submodules_capped_search(&m).iter().copied().collect();
            assert_eq!(scan, search, "{name}");
        }
    }

    fn enumerate_submodules_capped_search(m: &FiniteModule) -> Vec<Mask> {
        let start = close_mask(m, Mask::EMPTY);
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            for x in m.elements().filter(|&x| !s.contains(x)) {
                let t = close_mask(m, s.with(x));
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        let mut v: Vec<Mask> = seen.into_iter().collect();
        v.sort_by_key(|m| (m.len(), *m));
        v
    }

    #[test]
    fn sum_and_intersect() {
        let b2 = fixture("B2").unwrap();
        let a = submodule_of(&b2, &[0, 1]).unwrap();
        let b = submodule_of(&b2, &[0, 2]).unwrap();
        assert_eq!(a.sum(&b).unwrap().mask(), b2.all());
        assert_eq!(a.sum(&zero_submodule(&b2)).unwrap(), a);
        let c3 = fixture("C3").unwrap();
        let x = submodule_of(&c3, &[0, 1]).unwrap();
        let y = submodule_of(&c3, &[0, 2]).unwrap();
        assert_eq!(x.intersect(&y).unwrap().to_vec(), vec![0]);
        assert_eq!(x.sum(&a), Err(Error::AmbientMismatch));
    }

    #[test]
    fn sa_examples() {
        let b2 = fixture("B2").unwrap();
        let v = whole(&b2);
        assert!(submodule_of(&b2, &[0, 1]).unwrap().is_sa(&v).unwrap());
        let w = submodule_of(&b2, &[0, 3]).unwrap();
        assert_eq!(w.sa_witness(&v).unwrap(), Some((1, 2)));
        assert!(v.is_sa(&v).unwrap());
        let all = enumerate_submodules(&b2).unwrap();
        assert_eq!(enumerate_sa(&all, &v, &zero_submodule(&b2)).unwrap().len(), 4);
        let c3 = fixture("C3").unwrap();
        let all = enumerate_submodules(&c3).unwrap();
        let sa: Vec<Vec<usize>> =
            enumerate_sa(&all, &whole(&c3), &zero_submodule(&c3)).unwrap().iter().map(|s| s.to_vec()).collect();
        assert_eq!(sa, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
        let a = submodule_of(&c3, &[0, 1]).unwrap();
        assert_eq!(enumerate_sa(&all, &a, &a).unwrap(), vec![a]);
        assert!(matches!(w.is_sa(&submodule_of(&b2, &[0, 1]).unwrap()), Err(Error::Containment(_))));
    }

    #[test]
    fn subtractive_examples() {
        let c3 = fixture("C3").unwrap();
        assert!(is_subtractive(&submodule_of(&c3, &[0, 1]).unwrap()));
        assert!(!is_subtractive(&submodule_of(&c3, &[0, 2]).unwrap()));
        assert!(is_subtractive(&whole(&c3)));
    }

    #[test]
    fn hull_examples() {
        let c3 = fixture("C3").unwrap();
        let d = submodule_of(&c3, &[0, 2]).unwrap();
        assert_eq!(subtractive_hull(&d).to_vec(), vec![0, 1, 2]);
        assert_eq!(sa_closure(&d).to_vec(), vec![0, 1, 2]);
        let c4 = fixture("C4").unwrap();
        let d = submodule_of(&c4, &[0, 1]).unwrap();
        assert_eq!(subtractive_hull(&d).to_vec(), vec![0, 1]);
        assert_eq!(sa_closure(&d).to_vec(), vec![0, 1]);
        assert_eq!(nac(&d, Access::D).to_vec(), vec![2, 3]);
        assert_eq!(nac(&d, Access::V).to_vec(), vec![2, 3]);
        assert!(nac(&whole(&c4), Access::D).is_empty());
        assert_eq!(sa_closure(&whole(&c4)).mask(), c4.all());
        let n4 = fixture("NSAT4").unwrap();
        let d = submodule_of(&n4, &[0, 3]).unwrap();
        assert_eq!(subtractive_hull(&d).to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn lzs_iff_zero_is_sa() {
        for name in ["B2", "C3", "NSAT4", "Z2", "NCYC(1,2)", "SUPERTROP(2)"] {
            let m = fixture(name).unwrap();
            let z = zero_submodule(&m);
            assert_eq!(m.is_lzs(), z.is_sa(&whole(&m)).unwrap(), "{name}");
        }
    }
}
