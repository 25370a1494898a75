use super::partition::ExchangePartition;
use super::space::TupleSpace;
use crate::algebra::{FiniteModule, Homomorphism};
use crate::error::{Error, Result};
use crate::lattice::Submodule;
use crate::mask::{Mask, DEFAULT_ELEMENT_CAP};
use serde::{Deserialize, Serialize};

/// Full well-definedness scan is used up to this many tuples; larger spaces
/// are checked against class representatives only.
const FULL_CHECK_MAX: usize = 2048;

/// The module of exchange classes with its projection and embeddings.
#[derive(Clone, Debug)]
pub struct AmalgamModule {
    pub module: FiniteModule,
    /// Least tuple of each class.
    pub representatives: Vec<Vec<usize>>,
    /// `κ`: class ↦ sum of its tuples, an element of the ambient module.
    pub kappa: Vec<usize>,
    /// `j_k`: for factor `k`, element `a ∈ Aₖ` ↦ class of `(0,…,a,…,0)`.
    pub embeddings: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct AmalgamView {
    classes: usize,
    representatives: Vec<Vec<usize>>,
    kappa: Vec<usize>,
    embeddings: Vec<Vec<(usize, usize)>>,
}

impl Serialize for AmalgamModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AmalgamView {
            classes: self.module.size(),
            representatives: self.representatives.clone(),
            kappa: self.kappa.clone(),
            embeddings: self.embeddings.clone(),
        }
        .serialize(s)
    }
}

impl AmalgamModule {
    pub fn embed(&self, k: usize, a: usize) -> Option<usize> {
        self.embeddings[k].iter().find(|&&(e, _)| e == a).map(|&(_, c)| c)
    }

    /// `jₖ(Aₖ)` as a mask over classes.
    pub fn embedded_factor(&self, k: usize) -> Mask {
        self.embeddings[k].iter().map(|&(_, c)| c).collect()
    }

    /// `κ` is injective, i.e. the factors have amalgamation.
    pub fn kappa_injective(&self) -> bool {
        Homomorphism { map: self.kappa.clone() }.is_injective_on(self.module.all())
    }
}

/// Builds the amalgam on the classes of `p`.
pub fn build_amalgam(p: &ExchangePartition<'_>) -> Result<AmalgamModule> {
    build_amalgam_capped(p, DEFAULT_ELEMENT_CAP)
}

pub fn build_amalgam_capped(p: &ExchangePartition<'_>, cap: usize) -> Result<AmalgamModule> {
    let sp: &TupleSpace<'_> = p.space();
    let m = sp.module();
    let c = p.class_count();
    if c > cap {
        return Err(Error::CapExceeded(format!("{c} classes above the element cap {cap}")));
    }
    let classes = p.classes();
    let reps: Vec<usize> = classes.iter().map(|cl| cl[0]).collect();
    let rs = m.ring().size();
    let mut add = vec![vec![0; c]; c];
    for x in 0..c {
        for y in 0..c {
            add[x][y] = p.class_of(sp.add(reps[x], reps[y]));
        }
    }
    let mut act = vec![vec![0; c]; rs];
    for (l, row) in act.iter_mut().enumerate() {
        for x in 0..c {
            row[x] = p.class_of(sp.act(l, reps[x]));
        }
    }
    // well-definedness of the operations on classes
    let full = sp.len() <= FULL_CHECK_MAX;
    for t in 0..sp.len() {
        let ct = p.class_of(t);
        let partners: Box<dyn Iterator<Item = usize>> = if full { Box::new(0..sp.len()) } else { Box::new(reps.iter().copied()) };
        for u in partners {
            if p.class_of(sp.add(t, u)) != add[ct][p.class_of(u)] {
                return Err(Error::Internal(format!(
                    "addition on classes is not well defined at {:?} + {:?}",
                    sp.tuple(t),
                    sp.tuple(u)
                )));
            }
        }
        for (l, row) in act.iter().enumerate() {
            if p.class_of(sp.act(l, t)) != row[ct] {
                return Err(Error::Internal(format!("action on classes is not well defined at {:?}", sp.tuple(t))));
            }
        }
    }
    let zero = p.class_of(sp.index_of(&vec![m.zero(); sp.arity()]).expect("zero tuple"));
    let module = FiniteModule::new(m.ring_arc().clone(), add, act, zero)?;
    let rep = module.validate();
    if !rep.ok() {
        return Err(Error::Internal(format!("amalgam fails validation: {:?}", rep.violations)));
    }
    let kappa: Vec<usize> = reps.iter().map(|&r| sp.sum(r)).collect();
    let embeddings: Vec<Vec<(usize, usize)>> = (0..sp.arity())
        .map(|k| sp.factor_elements(k).iter().map(|&a| (a, p.class_of(sp.placed(k, a)))).collect())
        .collect();
    for (k, emb) in embeddings.iter().enumerate() {
        for &(a, cls) in emb {
            if kappa[cls] != a {
                return Err(Error::Internal(format!("κ∘j_{k} moves {a}")));
            }
        }
    }
    Ok(AmalgamModule { module, representatives: reps.iter().map(|&r| sp.tuple(r)).collect(), kappa, embeddings })
}

/// How the partition of a subspace relates to the restricted partition of a
/// superspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Restriction {
    Coincide,
    StrictlyFiner,
}

/// Compares `EC` of `A′₁ × ⋯ × A′ₙ` with the restriction of `EC` of
/// `A₁ × ⋯ × Aₙ`, where `A′ᵢ ⊆ Aᵢ`.
pub fn restriction_compare(sub: &ExchangePartition<'_>, sup: &ExchangePartition<'_>) -> Result<Restriction> {
    let (ss, sp) = (sub.space(), sup.space());
    if ss.arity() != sp.arity() || !std::ptr::eq(ss.module(), sp.module()) {
        return Err(Error::AmbientMismatch);
    }
    for k in 0..ss.arity() {
        if !ss.factors()[k].is_subset(&sp.factors()[k]) {
            return Err(Error::Containment(format!("factor {k} of the subspace is not contained in the superspace")));
        }
    }
    let mut image = vec![usize::MAX; sub.class_count()];
    let mut coincide = true;
    let mut used = vec![usize::MAX; sup.class_count()];
    for t in 0..ss.len() {
        let big = sup.class_of(sp.index_of(&ss.tuple(t)).expect("contained tuple"));
        let small = sub.class_of(t);
        if image[small] == usize::MAX {
            image[small] = big;
            if used[big] != usize::MAX {
                coincide = false;
            }
            used[big] = small;
        } else if image[small] != big {
            return Err(Error::Internal("subspace partition is coarser than the restriction".into()));
        }
    }
    Ok(if coincide { Restriction::Coincide } else { Restriction::StrictlyFiner })
}

/// Pulls a space over `V` back along `φ: V′ → V`, giving `φ⁻¹(Aᵢ)`.
pub fn transport<'d>(phi: &Homomorphism, domain: &'d FiniteModule, space: &TupleSpace<'_>) -> Result<TupleSpace<'d>> {
    phi.validate(domain, space.module())?;
    let factors: Vec<Submodule<'d>> = space
        .factors()
        .iter()
        .map(|f| crate::lattice::submodule(domain, phi.preimage(f.mask())))
        .collect::<Result<_>>()?;
    TupleSpace::new(factors)
}

/// Outcome of the transport checks on a pulled-back space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransportReport {
    /// Equivalence upstairs implies equivalence of the images.
    pub forward: bool,
    pub injective_on_preimage: bool,
    /// When injective: equivalence of images implies equivalence upstairs.
    pub backward: Option<bool>,
    /// When injective: AM upstairs iff AM downstairs.
    pub am_transfer: Option<bool>,
}

pub fn transport_check(phi: &Homomorphism, up: &ExchangePartition<'_>, down: &ExchangePartition<'_>) -> TransportReport {
    let (su, sd) = (up.space(), down.space());
    let image = |t: usize| -> usize {
        let img: Vec<usize> = su.tuple(t).into_iter().map(|x| phi.apply(x)).collect();
        sd.index_of(&img).expect("images land in the factors")
    };
    let imgs: Vec<usize> = (0..su.len()).map(image).collect();
    let mut forward = true;
    let mut backward = true;
    for a in 0..su.len() {
        for b in (a + 1)..su.len() {
            let up_eq = up.class_of(a) == up.class_of(b);
            let down_eq = down.class_of(imgs[a]) == down.class_of(imgs[b]);
            if up_eq && !down_eq {
                forward = false;
            }
            if down_eq && !up_eq {
                backward = false;
            }
        }
    }
    let injective = phi.is_injective_on(phi.preimage(sd.total().mask()));
    let am_transfer = injective.then(|| down.has_amalgamation() == up.has_amalgamation());
    TransportReport { forward, injective_on_preimage: injective, backward: injective.then_some(backward), am_transfer }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::exchange_partition;
    use crate::fixtures::fixture;
    use crate::lattice::{submodule_of, whole};

    #[test]
    fn amalgam_examples() {
        let c3 = fixture("C3").unwrap();
        let sp = TupleSpace::new(vec![submodule_of(&c3, &[0, 1]).unwrap(), submodule_of(&c3, &[0, 2]).unwrap()]).unwrap();
        let p = exchange_partition(&sp).unwrap();
        let am = build_amalgam(&p).unwrap();
        assert_eq!(am.module.size(), 4);
        assert_eq!(am.kappa.iter().filter(|&&s| s == 2).count(), 2);
        assert!(!am.kappa_injective());

        let b2 = fixture("B2").unwrap();
        let sp = TupleSpace::new(vec![submodule_of(&b2, &[0, 1]).unwrap(), submodule_of(&b2, &[0, 2]).unwrap()]).unwrap();
        let p = exchange_partition(&sp).unwrap();
        let am = build_amalgam(&p).unwrap();
        assert!(am.kappa_injective());
        assert_eq!(am.module.size(), 4);

        let z = submodule_of(&c3, &[0]).unwrap();
        let sp = TupleSpace::new(vec![z, z]).unwrap();
        let p = exchange_partition(&sp).unwrap();
        assert_eq!(build_amalgam(&p).unwrap().module.size(), 1);
    }

    #[test]
    fn restriction_examples() {
        let b2 = fixture("B2").unwrap();
        let a1 = submodule_of(&b2, &[0, 1]).unwrap();
        let a2 = submodule_of(&b2, &[0, 2]).unwrap();
        let z = submodule_of(&b2, &[0]).unwrap();
        let sup = TupleSpace::new(vec![a1, a2]).unwrap();
        let sub = TupleSpace::new(vec![a1, z]).unwrap();
        let (ps, pb) = (exchange_partition(&sub).unwrap(), exchange_partition(&sup).unwrap());
        assert_eq!(restriction_compare(&ps, &pb).unwrap(), Restriction::Coincide);
        assert_eq!(restriction_compare(&pb, &pb).unwrap(), Restriction::Coincide);
        assert!(matches!(restriction_compare(&pb, &ps), Err(Error::Containment(_))));

        let c4 = fixture("C4").unwrap();
        let sup = TupleSpace::new(vec![submodule_of(&c4, &[0, 1, 3]).unwrap(), submodule_of(&c4, &[0, 1]).unwrap()]).unwrap();
        let sub = TupleSpace::new(vec![submodule_of(&c4, &[0, 1]).unwrap(), submodule_of(&c4, &[0, 1]).unwrap()]).unwrap();
        let (ps, pb) = (exchange_partition(&sub).unwrap(), exchange_partition(&sup).unwrap());
        assert_eq!(restriction_compare(&ps, &pb).unwrap(), Restriction::Coincide);
    }

    #[test]
    fn strictly_finer_restriction() {
        // (2,0) ~ (2,1) upstairs via d = 1; downstairs the intersection is {0}
        let c3 = fixture("C3").unwrap();
        let sub = TupleSpace::new(vec![submodule_of(&c3, &[0, 2]).unwrap(), submodule_of(&c3, &[0, 1]).unwrap()]).unwrap();
        let sup = TupleSpace::new(vec![whole(&c3), submodule_of(&c3, &[0, 1]).unwrap()]).unwrap();
        let (ps, pb) = (exchange_partition(&sub).unwrap(), exchange_partition(&sup).unwrap());
        assert_eq!(restriction_compare(&ps, &pb).unwrap(), Restriction::StrictlyFiner);
    }

    #[test]
    fn contraction_examples() {
        let b2 = fixture("B2").unwrap();
        let sp = TupleSpace::new(vec![
            submodule_of(&b2, &[0, 1]).unwrap(),
            submodule_of(&b2, &[0, 2]).unwrap(),
            submodule_of(&b2, &[0]).unwrap(),
        ])
        .unwrap();
        let c = sp.contract(&[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(c.factors()[0].mask(), b2.all());
        assert_eq!(c.factors()[1].to_vec(), vec![0]);
        let id = sp.contract(&[vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(id.factors(), sp.factors());
        assert_eq!(sp.contract(&[vec![0, 1, 2]]).unwrap().factors()[0].mask(), b2.all());
        assert!(sp.contract(&[vec![0, 1]]).is_err());
        assert!(sp.contract(&[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn transport_examples() {
        let c4 = fixture("C4").unwrap();
        let c3 = fixture("C3").unwrap();
        let phi = Homomorphism { map: vec![0, 1, 2, 2] };
        let a = submodule_of(&c3, &[0, 1]).unwrap();
        let sp = TupleSpace::new(vec![a, a]).unwrap();
        let up = transport(&phi, &c4, &sp).unwrap();
        assert_eq!(up.factors()[0].to_vec(), vec![0, 1]);

        let id = Homomorphism::identity(&c3);
        let same = transport(&id, &c3, &sp).unwrap();
        assert_eq!(same.factors(), sp.factors());

        let z2 = fixture("Z2").unwrap();
        let triv = crate::algebra::FiniteModule::trivial(z2.ring_arc().clone());
        let to_triv = Homomorphism { map: vec![0, 0] };
        let tsp = TupleSpace::new(vec![whole(&triv)]).unwrap();
        let up = transport(&to_triv, &z2, &tsp).unwrap();
        assert_eq!(up.factors()[0].mask(), z2.all());

        let bad = Homomorphism { map: vec![0, 2, 1, 2] };
        assert!(matches!(transport(&bad, &c4, &sp), Err(Error::NotAHomomorphism(_))));
    }
}
