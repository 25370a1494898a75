//! Bipotent monoids, bipotent retractions, the construction of special
//! retractions from a set retraction plus a total order, and the lifting of
//! submonoids and isolated vectors along a retraction.

use crate::algebra::FiniteModule;
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::order::{downset_mask, natural_quasiorder};
use serde::{Deserialize, Serialize};

/// A set retraction `φ: V → X` together with a total order on `X`.
///
/// `order` lists `X` ascending; its first entry is the zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetractionSpec {
    pub carrier: usize,
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    pub phi: Vec<usize>,
    pub order: Vec<usize>,
}

impl RetractionSpec {
    pub fn from_phi(phi: Vec<usize>, order: Vec<usize>) -> Self {
        let mut x = order.clone();
        x.sort_unstable();
        RetractionSpec { carrier: phi.len(), x, phi, order }
    }

    pub fn zero(&self) -> usize {
        self.order[0]
    }

    fn rank(&self) -> Vec<usize> {
        let mut rank = vec![usize::MAX; self.carrier];
        for (r, &x) in self.order.iter().enumerate() {
            rank[x] = r;
        }
        rank
    }

    /// Checks the structural invariants of a set retraction onto a chain.
    pub fn check(&self) -> Result<()> {
        let n = self.carrier;
        if n == 0 || self.phi.len() != n {
            return Err(Error::MalformedTable(format!("phi has {} entries for a carrier of {n}", self.phi.len())));
        }
        let mut sorted = self.order.clone();
        sorted.sort_unstable();
        if sorted.is_empty() || sorted != self.x || sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedTable("order must list X exactly once".into()));
        }
        if self.x.iter().any(|&x| x >= n) || self.phi.iter().any(|&p| p >= n) {
            return Err(Error::MalformedTable("index out of range".into()));
        }
        let in_x: Mask = self.x.iter().copied().collect();
        if let Some(v) = (0..n).find(|&v| !in_x.contains(self.phi[v])) {
            return Err(Error::NotARetraction(format!("phi({v}) lies outside X")));
        }
        if let Some(&x) = self.x.iter().find(|&&x| self.phi[x] != x) {
            return Err(Error::NotARetraction(format!("phi({x}) ≠ {x} on X")));
        }
        Ok(())
    }
}

/// Clause-by-clause outcome of the special-retraction construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetractionReport {
    pub associative: bool,
    pub commutative: bool,
    pub upper_bound: bool,
    pub fiber_convex: bool,
    /// `φ(v) ≤ x ⇒ v + x = x` and `φ(v) > x ⇒ v + x = v` for `x ∈ X`.
    pub addition_laws: bool,
    /// `v + v = φ(v)`.
    pub doubling: bool,
    /// `v₁ + v₁ = v₂ + v₂ ⇒ v₁ + v₁ = v₁ + v₂`.
    pub doubling_collapse: bool,
    pub special: bool,
    /// `{v + v} = X`.
    pub image_is_x: bool,
}

impl RetractionReport {
    pub fn ok(&self) -> bool {
        self.associative
            && self.commutative
            && self.upper_bound
            && self.fiber_convex
            && self.addition_laws
            && self.doubling
            && self.doubling_collapse
            && self.special
            && self.image_is_x
    }
}

/// The addition table given by the three-case rule on `φ`-ranks.
pub(crate) fn case_rule_table(spec: &RetractionSpec) -> Vec<Vec<usize>> {
    let rank = spec.rank();
    let n = spec.carrier;
    let phi = &spec.phi;
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| match rank[phi[a]].cmp(&rank[phi[b]]) {
                    std::cmp::Ordering::Less => b,
                    std::cmp::Ordering::Greater => a,
                    std::cmp::Ordering::Equal => phi[a],
                })
                .collect()
        })
        .collect()
}

/// Builds the monoid of a set retraction onto a chain and checks every
/// clause of the resulting structure.
pub fn build_from_retraction(spec: &RetractionSpec) -> Result<(FiniteModule, RetractionReport)> {
    spec.check()?;
    let zero = spec.zero();
    if (0..spec.carrier).any(|v| v != zero && spec.phi[v] == zero) {
        return Err(Error::NonzeroFiberOverZero);
    }
    let add = case_rule_table(spec);
    let n = spec.carrier;
    let op = |a: usize, b: usize| add[a][b];
    let mut rep = RetractionReport {
        associative: (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c))))),
        commutative: (0..n).all(|a| (0..n).all(|b| op(a, b) == op(b, a))),
        ..Default::default()
    };
    if !(rep.associative && rep.commutative) {
        return Err(Error::Internal("the case rule did not produce a commutative monoid".into()));
    }
    let m = FiniteModule::from_monoid(add.clone(), zero)?;
    let le = natural_quasiorder(&m);
    let rank = spec.rank();
    let phi = &spec.phi;
    rep.upper_bound = le.is_antisymmetric();
    rep.fiber_convex = (0..n).all(|a| {
        (0..n).all(|v| (0..n).all(|b| !(phi[a] == phi[b] && le.le(a, v) && le.le(v, b)) || phi[v] == phi[a]))
    }) && (0..n).all(|v| phi[v] != zero || v == zero);
    rep.addition_laws = (0..n).all(|v| {
        spec.x.iter().all(|&x| if rank[phi[v]] <= rank[x] { op(v, x) == x } else { op(v, x) == v })
    });
    rep.doubling = (0..n).all(|v| op(v, v) == phi[v]);
    rep.doubling_collapse =
        (0..n).all(|a| (0..n).all(|b| op(a, a) != op(b, b) || op(a, a) == op(a, b)));
    let retraction = Retraction::new(&m, phi.clone())?;
    rep.special = retraction.is_special();
    let image: Mask = (0..n).map(|v| op(v, v)).collect();
    rep.image_is_x = image == spec.x.iter().copied().collect();
    Ok((m, rep))
}

/// Total order of a bipotent monoid, ascending: `x ≤ y ⇔ x + y = y`.
pub fn order_from_bipotent(m: &FiniteModule) -> Result<Vec<usize>> {
    if let Some((a, b)) = m.bipotent_witness() {
        return Err(Error::NotBipotent(format!("{a} + {b} = {}", m.add(a, b))));
    }
    let mut order: Vec<usize> = m.elements().collect();
    // the number of elements below x determines its position
    order.sort_by_key(|&x| m.elements().filter(|&y| m.add(y, x) == x).count());
    Ok(order)
}

/// The bipotent monoid `(X, max)` of a chain given ascending.
pub fn monoid_from_chain(order: &[usize]) -> Result<FiniteModule> {
    let n = order.len();
    let mut rank = vec![usize::MAX; n];
    for (r, &x) in order.iter().enumerate() {
        if x >= n || rank[x] != usize::MAX {
            return Err(Error::MalformedTable("chain order is not a permutation".into()));
        }
        rank[x] = r;
    }
    let add = (0..n).map(|a| (0..n).map(|b| if rank[a] >= rank[b] { a } else { b }).collect()).collect();
    FiniteModule::from_monoid(add, *order.first().ok_or_else(|| Error::MalformedTable("empty chain".into()))?)
}

/// A bipotent retraction `φ: V → X` of the additive monoid of a module.
#[derive(Clone, Debug)]
pub struct Retraction<'m> {
    module: &'m FiniteModule,
    phi: Vec<usize>,
    x: Mask,
    order: Vec<usize>,
}

impl<'m> Retraction<'m> {
    /// Validates additivity, `φ(0) = 0`, `φ|X = id` and bipotency of `X`.
    pub fn new(module: &'m FiniteModule, phi: Vec<usize>) -> Result<Self> {
        let m = module;
        if phi.len() != m.size() || phi.iter().any(|&p| p >= m.size()) {
            return Err(Error::NotARetraction("map has the wrong shape".into()));
        }
        if phi[m.zero()] != m.zero() {
            return Err(Error::NotARetraction("zero is not fixed".into()));
        }
        for a in m.elements() {
            for b in m.elements() {
                if phi[m.add(a, b)] != m.add(phi[a], phi[b]) {
                    return Err(Error::NotARetraction(format!("not additive at ({a},{b})")));
                }
            }
        }
        let x: Mask = phi.iter().copied().collect();
        if let Some(v) = x.iter().find(|&v| phi[v] != v) {
            return Err(Error::NotARetraction(format!("phi({v}) ≠ {v} on the image")));
        }
        for a in x.iter() {
            for b in x.iter() {
                let s = m.add(a, b);
                if s != a && s != b {
                    return Err(Error::NotARetraction(format!("image is not bipotent: {a} + {b} = {s}")));
                }
            }
        }
        let mut order = x.to_vec();
        order.sort_by_key(|&v| x.iter().filter(|&y| m.add(y, v) == v).count());
        Ok(Retraction { module, phi, x, order })
    }

    pub fn module(&self) -> &'m FiniteModule {
        self.module
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn image(&self) -> Mask {
        self.x
    }

    /// `X` ascending.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    fn rank_of(&self, x: usize) -> usize {
        self.order.iter().position(|&y| y == x).expect("x in X")
    }

    /// Both clauses of the special condition.
    pub fn is_special(&self) -> bool {
        let m = self.module;
        let phi = &self.phi;
        m.elements().all(|a| {
            m.elements().all(|b| {
                let s = m.add(a, b);
                if phi[a] != phi[b] {
                    s == a || s == b
                } else {
                    s == phi[a]
                }
            })
        })
    }

    /// The three-case table driven by comparing `φ(v₁)` and `φ(v₂)`.
    pub fn follows_case_rule(&self) -> bool {
        let m = self.module;
        let phi = &self.phi;
        m.elements().all(|a| {
            m.elements().all(|b| {
                let want = match self.rank_of(phi[a]).cmp(&self.rank_of(phi[b])) {
                    std::cmp::Ordering::Less => b,
                    std::cmp::Ordering::Greater => a,
                    std::cmp::Ordering::Equal => phi[a],
                };
                m.add(a, b) == want
            })
        })
    }

    /// `φ⁻¹(D̄)` with its checks.
    pub fn lift_submonoid(&self, dbar: Mask) -> Result<SubmonoidLift> {
        let m = self.module;
        if !dbar.is_subset(&self.x) || !dbar.contains(m.zero()) {
            return Err(Error::PreconditionFailed("D̄ must be a subset of X containing 0".into()));
        }
        let inner = dbar.minus(Mask::singleton(m.zero()));
        let ranks: Vec<usize> = inner.iter().map(|v| self.rank_of(v)).collect();
        if let (Some(&lo), Some(&hi)) = (ranks.iter().min(), ranks.iter().max()) {
            if hi - lo + 1 != ranks.len() {
                return Err(Error::ConvexityViolation);
            }
        }
        let d: Mask = m.elements().filter(|&v| dbar.contains(self.phi[v])).collect();
        let le = natural_quasiorder(m);
        let ends: Vec<usize> = d.iter().filter(|&v| inner.contains(self.phi[v])).collect();
        let sandwich = m.elements().all(|v| {
            d.contains(v) || !ends.iter().any(|&a| le.le(a, v)) || !ends.iter().any(|&b| le.le(v, b))
        });
        let x_down: Mask = self.x.iter().filter(|&l| self.x.iter().any(|u| dbar.contains(m.add(l, u)))).collect();
        let lifted_down: Mask = m.elements().filter(|&v| x_down.contains(self.phi[v])).collect();
        Ok(SubmonoidLift {
            d,
            is_submonoid: m.is_submonoid(d),
            sandwich,
            downset: downset_mask(m, d),
            downset_matches: downset_mask(m, d) == lifted_down,
        })
    }

    /// The union of the fibers over `D̄`-isolated points of `X`, with the
    /// check that each of them is `D`-isolated in `V`.
    pub fn lift_isolated(&self, dbar: Mask) -> Result<IsolatedLift> {
        let lift = self.lift_submonoid(dbar)?;
        let m = self.module;
        let isolated_in_x = isolated_within(m, self.x, dbar);
        let lifted: Mask = m.elements().filter(|&v| isolated_in_x.contains(self.phi[v])).collect();
        let isolated_in_v = isolated_within(m, m.all(), lift.d);
        Ok(IsolatedLift { isolated_in_x, lifted, holds: lifted.is_subset(&isolated_in_v) })
    }
}

/// Outcome of lifting `D̄ ⊆ X` to `D = φ⁻¹(D̄)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubmonoidLift {
    pub d: Mask,
    pub is_submonoid: bool,
    /// `d₁ ≤ v ≤ d₂` with `φ(dᵢ) ∈ D̄∖{0}` forces `v ∈ D`.
    pub sandwich: bool,
    pub downset: Mask,
    /// `D^↓ = φ⁻¹(D̄^↓)`, with `↓` read existentially.
    pub downset_matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolatedLift {
    pub isolated_in_x: Mask,
    pub lifted: Mask,
    pub holds: bool,
}

/// `D`-isolated elements of the submonoid `carrier`, computed inside it.
pub(crate) fn isolated_within(m: &FiniteModule, carrier: Mask, d: Mask) -> Mask {
    carrier
        .iter()
        .filter(|&v| {
            d.iter().all(|e| m.add(v, e) == v)
                && !carrier.iter().any(|x| x != v && d.iter().any(|e| m.add(x, e) == v))
        })
        .collect()
}

/// Additive, zero-preserving maps between two bipotent monoids are exactly
/// the monotone zero-preserving maps.
pub fn is_monotone_pointed(src: &[usize], dst: &[usize], f: &[usize]) -> bool {
    let rs = |x: usize| src.iter().position(|&y| y == x).expect("in src");
    let rd = |x: usize| dst.iter().position(|&y| y == x).expect("in dst");
    f[src[0]] == dst[0] && src.iter().all(|&a| src.iter().all(|&b| rs(a) > rs(b) || rd(f[a]) <= rd(f[b])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, supertropical_nu};

    #[test]
    fn v5_construction() {
        let spec = RetractionSpec::from_phi(vec![0, 1, 2, 1, 1], vec![0, 1, 2]);
        let (m, rep) = build_from_retraction(&spec).unwrap();
        assert!(rep.ok(), "{rep:?}");
        assert_eq!(m.size(), 5);
        assert_eq!(m.add(3, 4), 1);
        assert_eq!(m.add(3, 2), 2);
        assert_eq!(m.add(3, 0), 3);
    }

    #[test]
    fn fiber_over_zero_rejected() {
        let spec = RetractionSpec::from_phi(vec![0, 1, 0], vec![0, 1]);
        assert_eq!(build_from_retraction(&spec).unwrap_err(), Error::NonzeroFiberOverZero);
    }

    #[test]
    fn identity_on_chain_is_unchanged() {
        let spec = RetractionSpec::from_phi(vec![0, 1, 2], vec![0, 1, 2]);
        let (m, rep) = build_from_retraction(&spec).unwrap();
        assert!(rep.ok());
        assert_eq!(m.add_table(), fixture("C3").unwrap().add_table());
    }

    #[test]
    fn bipotent_round_trip() {
        let c3 = fixture("C3").unwrap();
        let order = order_from_bipotent(&c3).unwrap();
        assert_eq!(order, vec![0, 1, 2]);
        assert_eq!(monoid_from_chain(&order).unwrap().add_table(), c3.add_table());
        assert!(matches!(order_from_bipotent(&fixture("NSAT4").unwrap()), Err(Error::NotBipotent(_))));
        assert!(matches!(order_from_bipotent(&fixture("B2").unwrap()), Err(Error::NotBipotent(_))));
    }

    #[test]
    fn supertropical_nu_is_special() {
        let st = fixture("SUPERTROP(2)").unwrap();
        let phi: Vec<usize> = st.elements().map(|x| supertropical_nu(2, x)).collect();
        let r = Retraction::new(&st, phi).unwrap();
        assert!(r.is_special());
        assert!(r.follows_case_rule());
        let c4 = fixture("C4").unwrap();
        let r = Retraction::new(&c4, c4.elements().collect()).unwrap();
        assert!(r.is_special());
    }

    #[test]
    fn lift_examples() {
        let v5 = fixture("V5").unwrap();
        let r = Retraction::new(&v5, vec![0, 1, 2, 1, 1]).unwrap();
        let lift = r.lift_submonoid(Mask::from_iter([0, 1])).unwrap();
        assert_eq!(lift.d.to_vec(), vec![0, 1, 3, 4]);
        assert!(lift.is_submonoid && lift.sandwich && lift.downset_matches);
        let lift = r.lift_submonoid(Mask::singleton(0)).unwrap();
        assert_eq!(lift.d.to_vec(), vec![0]);
        let iso = r.lift_isolated(Mask::from_iter([0, 1])).unwrap();
        assert_eq!(iso.lifted.to_vec(), vec![2]);
        assert!(iso.holds);
        let iso = r.lift_isolated(Mask::from_iter([0, 1, 2])).unwrap();
        assert!(iso.lifted.is_empty());
        let c4 = fixture("C4").unwrap();
        let r = Retraction::new(&c4, c4.elements().collect()).unwrap();
        assert_eq!(r.lift_submonoid(Mask::from_iter([0, 1, 3])).unwrap_err(), Error::ConvexityViolation);
    }

    #[test]
    fn fat_fiber_over_top_is_isolated() {
        let spec = RetractionSpec::from_phi(vec![0, 1, 2, 1, 1, 2], vec![0, 1, 2]);
        let (m, rep) = build_from_retraction(&spec).unwrap();
        assert!(rep.ok());
        let r = Retraction::new(&m, spec.phi.clone()).unwrap();
        let iso = r.lift_isolated(Mask::from_iter([0, 1])).unwrap();
        assert_eq!(iso.lifted.to_vec(), vec![2, 5]);
        assert!(iso.holds);
    }

    #[test]
    fn spec_json_shape() {
        let spec = RetractionSpec::from_phi(vec![0, 1, 2, 1, 1], vec![0, 1, 2]);
        let j = serde_json::to_value(&spec).unwrap();
        assert_eq!(j["X"], serde_json::json!([0, 1, 2]));
        let back: RetractionSpec = serde_json::from_value(j).unwrap();
        assert_eq!(back, spec);
    }
}
