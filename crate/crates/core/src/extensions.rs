//! D-complements, SA-extensions, complementary modules, saturation, the
//! complement posets and the hull complementarity results.

use crate::algebra::FiniteModule;
use crate::error::{Error, Result};
use crate::exchange::{exchange_partition, TupleSpace};
use crate::lattice::{closed, nac, sa_closure, subtractive_hull, Access, ElementSet, Submodule};
use crate::mask::Mask;
use crate::order::naturals_image;
use serde::Serialize;

fn same(a: &Submodule<'_>, b: &Submodule<'_>) -> Result<()> {
    if std::ptr::eq(a.module(), b.module()) {
        Ok(())
    } else {
        Err(Error::AmbientMismatch)
    }
}

fn inside(small: &Submodule<'_>, big: &Submodule<'_>, what: &str) -> Result<()> {
    same(small, big)?;
    if small.is_subset(big) {
        Ok(())
    } else {
        Err(Error::Containment(format!("{what}: {} is not inside {}", small.mask(), big.mask())))
    }
}

// ---------------------------------------------------------------------------
// mask-level predicates

/// `D ⊆ A` and `D` is SA in `A`.
pub(crate) fn sa_ext_mask(m: &FiniteModule, a: Mask, d: Mask) -> bool {
    d.is_subset(&a) && m.sa_witness_masks(d, a).is_none()
}

/// `A∖D` closed under addition and `(A∖D) + D ⊆ A∖D`.
pub(crate) fn sa_ext_intrinsic(m: &FiniteModule, a: Mask, d: Mask) -> bool {
    let rest = a.minus(d);
    m.sumset(rest, rest).is_subset(&rest) && m.sumset(rest, d).is_subset(&rest)
}

pub(crate) fn complementary_mask(m: &FiniteModule, a: Mask, d: Mask, t: Mask) -> bool {
    a.intersect(t) == d && m.sumset(a.minus(d), t).is_disjoint(&t)
}

pub(crate) fn d_complement_mask(m: &FiniteModule, w: Mask, d: Mask, t: Mask) -> bool {
    m.sumset(w, t) == m.all() && complementary_mask(m, w, d, t)
}

pub(crate) fn saturation_mask(m: &FiniteModule, a: Mask, d: Mask, t: Mask) -> Mask {
    m.sumset(a.minus(d), t).union(d)
}

// ---------------------------------------------------------------------------
// D-complements

/// `W + T = V`, `W ∩ T = D` and `(w + T) ∩ T = ∅` for `w ∈ W∖D`.
pub fn is_d_complement(w: &Submodule<'_>, d: &Submodule<'_>, t: &Submodule<'_>) -> Result<bool> {
    inside(d, w, "D ⊆ W")?;
    same(w, t)?;
    Ok(d_complement_mask(w.module(), w.mask(), d.mask(), t.mask()))
}

/// Every `D`-complement of `W`, scanning a submodule enumeration.
pub fn find_d_complements<'m>(
    all: &[Submodule<'m>],
    w: &Submodule<'m>,
    d: &Submodule<'m>,
) -> Result<Vec<Submodule<'m>>> {
    inside(d, w, "D ⊆ W")?;
    let m = w.module();
    Ok(all.iter().filter(|t| d_complement_mask(m, w.mask(), d.mask(), t.mask())).copied().collect())
}

// ---------------------------------------------------------------------------
// SA-extensions and complementary modules

/// Whether `D` is SA in `A`, cross-checked against the intrinsic form.
pub fn is_sa_extension(a: &Submodule<'_>, d: &Submodule<'_>) -> Result<bool> {
    inside(d, a, "D ⊆ A")?;
    let m = a.module();
    let direct = sa_ext_mask(m, a.mask(), d.mask());
    if direct != sa_ext_intrinsic(m, a.mask(), d.mask()) {
        return Err(Error::Internal(format!("SA-extension characterizations disagree on A={} D={}", a.mask(), d.mask())));
    }
    Ok(direct)
}

/// `A ∩ T = D` and `[(A∖D) + T] ∩ T = ∅`.
pub fn is_complementary(a: &Submodule<'_>, d: &Submodule<'_>, t: &Submodule<'_>) -> Result<bool> {
    inside(d, a, "D ⊆ A")?;
    inside(d, t, "D ⊆ T")?;
    Ok(complementary_mask(a.module(), a.mask(), d.mask(), t.mask()))
}

/// `B = [(A∖D) + T] ∪ D`, with its postconditions checked.
pub fn saturate<'m>(a: &Submodule<'m>, d: &Submodule<'m>, t: &Submodule<'m>) -> Result<Submodule<'m>> {
    if !is_sa_extension(a, d)? || !is_complementary(a, d, t)? {
        return Err(Error::PreconditionFailed("A must be an SA-extension of D with T complementary".into()));
    }
    let m = a.module();
    let b = saturation_mask(m, a.mask(), d.mask(), t.mask());
    if !m.is_closed(b) {
        return Err(Error::Internal(format!("saturation {b} is not a submodule")));
    }
    if !sa_ext_mask(m, b, d.mask())
        || !complementary_mask(m, b, d.mask(), t.mask())
        || m.sumset(b, t.mask()) != m.sumset(a.mask(), t.mask())
    {
        return Err(Error::Internal(format!("saturation {b} breaks its postconditions")));
    }
    Ok(closed(m, b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub is_sa_extension: bool,
    pub is_complementary: bool,
    /// The complementary module used; defaults to the subtractive hull.
    pub complement: Vec<usize>,
    pub saturation: Option<Vec<usize>>,
    pub is_saturated: bool,
    pub witnesses: Option<Vec<usize>>,
}

/// Full report for `(A, D)` against `T`, or against the subtractive hull
/// of `D` when `T` is not given.
pub fn extension_report(a: &Submodule<'_>, d: &Submodule<'_>, t: Option<&Submodule<'_>>) -> Result<ExtensionReport> {
    let hull = subtractive_hull(d);
    let t = t.copied().unwrap_or(hull);
    let is_ext = is_sa_extension(a, d)?;
    let is_comp = is_complementary(a, d, &t)?;
    let m = a.module();
    let witnesses = if !is_ext {
        m.sa_witness_masks(d.mask(), a.mask()).map(|(x, y)| vec![x, y])
    } else if !is_comp {
        a.mask().minus(d.mask()).iter().find_map(|x| {
            t.iter().find_map(|u| t.contains(m.add(x, u)).then(|| vec![x, u])).or_else(|| t.contains(x).then(|| vec![x]))
        })
    } else {
        None
    };
    let saturation = (is_ext && is_comp).then(|| saturate(a, d, &t)).transpose()?;
    Ok(ExtensionReport {
        is_sa_extension: is_ext,
        is_complementary: is_comp,
        complement: t.to_vec(),
        is_saturated: saturation.is_some_and(|b| b == *a),
        saturation: saturation.map(|b| b.to_vec()),
        witnesses,
    })
}

/// Outcome of replacing `D` by `{0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripReport {
    pub a0: Vec<usize>,
    pub is_submodule: bool,
    pub is_sa_extension: bool,
    pub complementary: bool,
    /// `A₀` is `T`-saturated iff `A` is.
    pub saturation_agrees: bool,
    /// `(A₀, T)` has amalgamation, checked when `A` is `T`-saturated.
    pub amalgamation: Option<bool>,
}

impl StripReport {
    pub fn ok(&self) -> bool {
        self.is_submodule && self.is_sa_extension && self.complementary && self.saturation_agrees && self.amalgamation != Some(false)
    }
}

/// `A₀ = (A∖D) ∪ {0}` over a ring whose elements are sums of units.
pub fn strip_to_zero(a: &Submodule<'_>, d: &Submodule<'_>, t: &Submodule<'_>) -> Result<StripReport> {
    let m = a.module();
    if !m.ring().is_sum_of_units() {
        return Err(Error::RingPrecondition("not every scalar is a sum of units".into()));
    }
    if !is_sa_extension(a, d)? || !is_complementary(a, d, t)? {
        return Err(Error::PreconditionFailed("A must be an SA-extension of D with T complementary".into()));
    }
    let zero = Mask::singleton(m.zero());
    let a0 = a.mask().minus(d.mask()).union(zero);
    let tm = t.mask();
    let a_sat = saturation_mask(m, a.mask(), d.mask(), tm) == a.mask();
    let a0_sat = saturation_mask(m, a0, zero, tm) == a0;
    let is_submodule = m.is_closed(a0);
    let amalgamation = (is_submodule && a0_sat).then(|| pair_has_am(m, a0, tm)).transpose()?;
    Ok(StripReport {
        a0: a0.to_vec(),
        is_submodule,
        is_sa_extension: sa_ext_mask(m, a0, zero),
        complementary: complementary_mask(m, a0, zero, tm),
        saturation_agrees: a_sat == a0_sat,
        amalgamation,
    })
}

pub(crate) fn pair_has_am(m: &FiniteModule, a: Mask, b: Mask) -> Result<bool> {
    let space = TupleSpace::new(vec![closed(m, a), closed(m, b)])?;
    Ok(exchange_partition(&space)?.has_amalgamation())
}

// ---------------------------------------------------------------------------
// complement posets

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReduceReport {
    pub t_prime: Vec<usize>,
    pub is_submodule: bool,
    pub complementary: bool,
    /// `A + T′ = U′`.
    pub sum_matches: bool,
    /// Agreement with `{x ∈ T | A + x ⊆ U′}` when the scalars are a quotient
    /// of the naturals.
    pub naturals_form_agrees: Option<bool>,
}

impl ReduceReport {
    pub fn ok(&self) -> bool {
        self.is_submodule && self.complementary && self.sum_matches && self.naturals_form_agrees != Some(false)
    }
}

/// `T′ = {x ∈ T | A + Rx ⊆ U′}` and the claims made about it.
pub fn reduce_complement(
    a: &Submodule<'_>,
    d: &Submodule<'_>,
    t: &Submodule<'_>,
    u_prime: &Submodule<'_>,
) -> Result<ReduceReport> {
    let m = a.module();
    same(a, u_prime)?;
    if !is_complementary(a, d, t)? {
        return Err(Error::PreconditionFailed("T is not complementary to A over D".into()));
    }
    let u = m.sumset(a.mask(), t.mask());
    if !d.mask().is_subset(&u_prime.mask()) || !u_prime.mask().is_subset(&u) {
        return Err(Error::PreconditionFailed("need D ⊆ U′ ⊆ A + T".into()));
    }
    let up = u_prime.mask();
    let ring = 0..m.ring().size();
    let t_prime: Mask = t
        .iter()
        .filter(|&x| {
            let rx: Mask = ring.clone().map(|l| m.act(l, x)).collect();
            m.sumset(a.mask(), rx).is_subset(&up)
        })
        .collect();
    let naturals = naturals_image(m.ring()) == Mask::full(m.ring().size());
    let naturals_form_agrees = naturals.then(|| {
        let phi: Mask = t.iter().filter(|&x| m.translate(x, a.mask()).is_subset(&up)).collect();
        phi == t_prime
    });
    Ok(ReduceReport {
        t_prime: t_prime.to_vec(),
        is_submodule: m.is_closed(t_prime),
        complementary: d.mask().is_subset(&t_prime) && complementary_mask(m, a.mask(), d.mask(), t_prime),
        sum_matches: m.sumset(a.mask(), t_prime) == up,
        naturals_form_agrees,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplPosets<'m> {
    /// Modules complementary to `A` over `D`.
    pub compl_prime: Vec<Submodule<'m>>,
    /// Modules `U ⊇ A` in which `A` has a `D`-complement.
    pub compl_double: Vec<Submodule<'m>>,
    /// `T ↦ A + T` is a bijection.
    pub pairing_bijective: bool,
    /// `T ⊆ T′ ⇔ A + T ⊆ A + T′`.
    pub pairing_order_iso: bool,
    pub compl_prime_lower: bool,
    pub compl_double_lower: bool,
}

pub fn compl_posets<'m>(all: &[Submodule<'m>], a: &Submodule<'m>, d: &Submodule<'m>) -> Result<ComplPosets<'m>> {
    if !is_sa_extension(a, d)? {
        return Err(Error::PreconditionFailed("A must be an SA-extension of D".into()));
    }
    let m = a.module();
    let (am, dm) = (a.mask(), d.mask());
    let compl_prime: Vec<Submodule<'m>> =
        all.iter().filter(|t| dm.is_subset(&t.mask()) && complementary_mask(m, am, dm, t.mask())).copied().collect();
    let compl_double: Vec<Submodule<'m>> = all
        .iter()
        .filter(|u| am.is_subset(&u.mask()))
        .filter(|u| {
            all.iter().any(|t| {
                t.mask().is_subset(&u.mask())
                    && m.sumset(am, t.mask()) == u.mask()
                    && complementary_mask(m, am, dm, t.mask())
            })
        })
        .copied()
        .collect();
    let images: Vec<Mask> = compl_prime.iter().map(|t| m.sumset(am, t.mask())).collect();
    let mut distinct = images.clone();
    distinct.sort();
    distinct.dedup();
    let mut targets: Vec<Mask> = compl_double.iter().map(|u| u.mask()).collect();
    targets.sort();
    let pairing_bijective = distinct.len() == images.len() && distinct == targets;
    let pairing_order_iso = (0..images.len()).all(|i| {
        (0..images.len()).all(|j| {
            compl_prime[i].mask().is_subset(&compl_prime[j].mask()) == images[i].is_subset(&images[j])
        })
    });
    let prime_set: Vec<Mask> = compl_prime.iter().map(|t| t.mask()).collect();
    let compl_prime_lower = all
        .iter()
        .filter(|s| dm.is_subset(&s.mask()))
        .all(|s| prime_set.contains(&s.mask()) || !prime_set.iter().any(|t| s.mask().is_subset(t)));
    let compl_double_lower = all
        .iter()
        .filter(|s| am.is_subset(&s.mask()))
        .all(|s| targets.contains(&s.mask()) || !targets.iter().any(|u| s.mask().is_subset(u)));
    Ok(ComplPosets { compl_prime, compl_double, pairing_bijective, pairing_order_iso, compl_prime_lower, compl_double_lower })
}

// ---------------------------------------------------------------------------
// hulls as complements

/// The subtractive hull of `D` is complementary to every SA-extension of
/// `D`; returns the first extension where that fails.
pub fn hull_is_universal_complement<'m>(all: &[Submodule<'m>], d: &Submodule<'m>) -> Result<Option<Submodule<'m>>> {
    let t = subtractive_hull(d);
    let m = d.module();
    for a in all.iter().filter(|a| d.is_subset(a)) {
        if sa_ext_mask(m, a.mask(), d.mask()) && !complementary_mask(m, a.mask(), d.mask(), t.mask()) {
            return Ok(Some(*a));
        }
    }
    Ok(None)
}

/// `A₀ = Nac_V(D) ∪ D` and the claims about it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NacExtension {
    pub a0: Vec<usize>,
    pub closure: Vec<usize>,
    pub is_submodule: bool,
    pub is_sa_extension: bool,
    /// `A₀ ∩ D^↓ = D`.
    pub meets_in_d: bool,
    /// `D^↓` is the one and only `D`-complement of `A₀` in `V`.
    pub unique_complement: bool,
}

impl NacExtension {
    pub fn ok(&self) -> bool {
        self.is_submodule && self.is_sa_extension && self.meets_in_d && self.unique_complement
    }
}

pub fn nac_extension(all: &[Submodule<'_>], d: &Submodule<'_>) -> NacExtension {
    let m = d.module();
    let n0 = nac(d, Access::V).mask();
    let a0 = n0.union(d.mask());
    let down = sa_closure(d).mask();
    let complements: Vec<Mask> =
        all.iter().map(|t| t.mask()).filter(|&t| d_complement_mask(m, a0, d.mask(), t)).collect();
    NacExtension {
        a0: a0.to_vec(),
        closure: down.to_vec(),
        is_submodule: m.is_closed(a0),
        is_sa_extension: sa_ext_mask(m, a0, d.mask()),
        meets_in_d: a0.intersect(down) == d.mask(),
        unique_complement: complements == vec![down],
    }
}

/// Greedily enlarges an SA-extension of `D` one generator at a time until no
/// single element can be added.
pub fn maximal_sa_extension<'m>(a: &Submodule<'m>, d: &Submodule<'m>) -> Result<Submodule<'m>> {
    if !is_sa_extension(a, d)? {
        return Err(Error::PreconditionFailed("A must be an SA-extension of D".into()));
    }
    let m = a.module();
    let mut cur = a.mask();
    'grow: loop {
        for x in m.elements().filter(|&x| !cur.contains(x)) {
            let next = crate::lattice::close_mask(m, cur.with(x));
            if sa_ext_mask(m, next, d.mask()) {
                cur = next;
                continue 'grow;
            }
        }
        return Ok(closed(m, cur));
    }
}

/// `A∖D` as an element set.
pub fn difference<'m>(a: &Submodule<'m>, d: &Submodule<'_>) -> Result<ElementSet<'m>> {
    a.minus(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::lattice::{enumerate_submodules, submodule_of, whole};

    #[test]
    fn d_complement_examples() {
        let b2 = fixture("B2").unwrap();
        let s = |xs: &[usize]| submodule_of(&b2, xs).unwrap();
        assert!(is_d_complement(&s(&[0, 1]), &s(&[0]), &s(&[0, 2])).unwrap());
        assert!(!is_d_complement(&s(&[0, 1]), &s(&[0]), &s(&[0, 2, 3])).unwrap());
        assert!(is_d_complement(&whole(&b2), &whole(&b2), &whole(&b2)).unwrap());
        let all = enumerate_submodules(&b2).unwrap();
        let found = find_d_complements(&all, &s(&[0, 1]), &s(&[0])).unwrap();
        assert_eq!(found.iter().map(|t| t.to_vec()).collect::<Vec<_>>(), vec![vec![0, 2]]);
        let c4 = fixture("C4").unwrap();
        let all = enumerate_submodules(&c4).unwrap();
        let d = submodule_of(&c4, &[0, 1]).unwrap();
        let found = find_d_complements(&all, &d, &d).unwrap();
        assert_eq!(found.iter().map(|t| t.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn extension_examples() {
        let c4 = fixture("C4").unwrap();
        let s = |xs: &[usize]| submodule_of(&c4, xs).unwrap();
        assert!(is_sa_extension(&s(&[0, 1, 3]), &s(&[0, 1])).unwrap());
        assert!(is_complementary(&s(&[0, 1, 3]), &s(&[0, 1]), &s(&[0, 1])).unwrap());
        assert!(is_complementary(&s(&[0, 1, 3]), &s(&[0, 1]), &s(&[0, 1, 2])).unwrap());
        assert!(!is_complementary(&whole(&c4), &s(&[0, 1]), &whole(&c4)).unwrap());
        let b2 = fixture("B2").unwrap();
        let d = submodule_of(&b2, &[0, 3]).unwrap();
        assert!(!is_sa_extension(&whole(&b2), &d).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let c4 = fixture("C4").unwrap();
        let s = |xs: &[usize]| submodule_of(&c4, xs).unwrap();
        assert_eq!(saturate(&s(&[0, 1, 3]), &s(&[0, 1]), &s(&[0, 1])).unwrap().to_vec(), vec![0, 1, 3]);
        assert_eq!(saturate(&whole(&c4), &s(&[0, 1]), &s(&[0, 1])).unwrap().to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(saturate(&s(&[0, 1]), &s(&[0, 1]), &s(&[0, 1, 2])).unwrap().to_vec(), vec![0, 1]);
        let rep = extension_report(&s(&[0, 1, 3]), &s(&[0, 1]), None).unwrap();
        assert!(rep.is_sa_extension && rep.is_complementary && rep.is_saturated);
    }

    #[test]
    fn strip_examples() {
        let c4 = fixture("C4").unwrap();
        let s = |xs: &[usize]| submodule_of(&c4, xs).unwrap();
        let rep = strip_to_zero(&s(&[0, 1, 3]), &s(&[0, 1]), &s(&[0, 1])).unwrap();
        assert_eq!(rep.a0, vec![0, 3]);
        assert!(rep.is_submodule && rep.is_sa_extension && rep.complementary && rep.saturation_agrees);
        // (3,0) and (3,1) share the sum 3 but only trivial exchanges exist
        assert_eq!(rep.amalgamation, Some(false));
        let rep = strip_to_zero(&s(&[0, 1]), &s(&[0, 1]), &s(&[0, 1])).unwrap();
        assert_eq!(rep.a0, vec![0]);
        let n4 = fixture("NSAT4").unwrap();
        let d = submodule_of(&n4, &[0, 3]).unwrap();
        assert!(strip_to_zero(&whole(&n4), &d, &d).is_err());
    }

    #[test]
    fn reduce_examples() {
        let c4 = fixture("C4").unwrap();
        let s = |xs: &[usize]| submodule_of(&c4, xs).unwrap();
        let rep = reduce_complement(&s(&[0, 1, 3]), &s(&[0, 1]), &s(&[0, 1]), &s(&[0, 1, 3])).unwrap();
        assert_eq!(rep.t_prime, vec![0, 1]);
        assert!(rep.ok());
        let b2 = fixture("B2").unwrap();
        let s = |xs: &[usize]| submodule_of(&b2, xs).unwrap();
        let rep = reduce_complement(&s(&[0, 1]), &s(&[0]), &s(&[0, 2]), &s(&[0, 1])).unwrap();
        assert_eq!(rep.t_prime, vec![0]);
        assert!(rep.ok());
        let rep = reduce_complement(&s(&[0, 1]), &s(&[0]), &s(&[0, 2]), &whole(&b2)).unwrap();
        assert_eq!(rep.t_prime, vec![0, 2]);
        // U′ = {00,01,11} lies between A and A + T but is not A + T′ for any T′ ⊆ T
        let rep = reduce_complement(&s(&[0, 1]), &s(&[0]), &s(&[0, 2]), &s(&[0, 1, 3])).unwrap();
        assert_eq!(rep.t_prime, vec![0]);
        assert!(!rep.sum_matches);
    }

    #[test]
    fn compl_poset_examples() {
        let c4 = fixture("C4").unwrap();
        let all = enumerate_submodules(&c4).unwrap();
        let s = |xs: &[usize]| submodule_of(&c4, xs).unwrap();
        let p = compl_posets(&all, &s(&[0, 1, 3]), &s(&[0, 1])).unwrap();
        let primes: Vec<Vec<usize>> = p.compl_prime.iter().map(|t| t.to_vec()).collect();
        assert!(primes.contains(&vec![0, 1]) && primes.contains(&vec![0, 1, 2]));
        assert!(p.pairing_bijective && p.pairing_order_iso);
        let b2 = fixture("B2").unwrap();
        let all = enumerate_submodules(&b2).unwrap();
        let s = |xs: &[usize]| submodule_of(&b2, xs).unwrap();
        let p = compl_posets(&all, &s(&[0, 1]), &s(&[0])).unwrap();
        let primes: Vec<Vec<usize>> = p.compl_prime.iter().map(|t| t.to_vec()).collect();
        assert_eq!(primes, vec![vec![0], vec![0, 2]]);
        assert!(p.compl_prime_lower);
        assert!(!p.compl_double_lower);
    }

    #[test]
    fn hull_and_nac_examples() {
        let c4 = fixture("C4").unwrap();
        let all = enumerate_submodules(&c4).unwrap();
        let d = submodule_of(&c4, &[0, 1]).unwrap();
        assert_eq!(hull_is_universal_complement(&all, &d).unwrap(), None);
        let ext = nac_extension(&all, &d);
        assert_eq!(ext.a0, vec![0, 1, 2, 3]);
        assert_eq!(ext.closure, vec![0, 1]);
        assert!(ext.ok());
        let c3 = fixture("C3").unwrap();
        let all = enumerate_submodules(&c3).unwrap();
        let d = submodule_of(&c3, &[0, 2]).unwrap();
        let ext = nac_extension(&all, &d);
        assert_eq!(ext.a0, vec![0, 2]);
        assert_eq!(ext.closure, vec![0, 1, 2]);
        assert!(ext.ok());
        let n4 = fixture("NSAT4").unwrap();
        let all = enumerate_submodules(&n4).unwrap();
        let d = submodule_of(&n4, &[0, 2, 3]).unwrap();
        assert_eq!(hull_is_universal_complement(&all, &d).unwrap(), None);
    }

    #[test]
    fn greedy_maximal_extension() {
        let c4 = fixture("C4").unwrap();
        let d = submodule_of(&c4, &[0, 1]).unwrap();
        let top = maximal_sa_extension(&d, &d).unwrap();
        assert_eq!(top.to_vec(), vec![0, 1, 2, 3]);
    }
}
