//! Instance descriptions and the seeded instance generator.

use crate::algebra::FiniteModule;
use crate::error::{Error, Result};
use crate::fixtures::fixture_with_cap;
use crate::lattice::{generate, submodule, Submodule};
use crate::mask::{Mask, DEFAULT_ELEMENT_CAP};
use crate::retraction::{build_from_retraction, RetractionSpec};
use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Largest module the generator emits.
pub const GENERATED_ELEMENT_CAP: usize = 10;

/// How the checkers use the named selections.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Selections seed the first trial; further configurations are sampled.
    #[default]
    Sample,
    /// Only the named configuration is checked.
    Pinned,
}

/// One checkable instance: a module, named submodules, tuple spaces over
/// them and a set retraction for the bipotent-retraction suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub id: usize,
    /// Fixture expression, e.g. `PRODUCT(CHAIN(1),CHAIN(2))`.
    pub module: String,
    #[serde(default)]
    pub selections: BTreeMap<String, Vec<usize>>,
    /// Each space lists selection names, one per factor.
    #[serde(default)]
    pub spaces: Vec<Vec<String>>,
    pub retraction: RetractionSpec,
    /// Theorem ids or suite names to restrict to; empty means no restriction.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<String>,
    #[serde(default)]
    pub mode: Mode,
    pub seed: u64,
}

/// A validated instance owning its modules.
#[derive(Debug)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub module: FiniteModule,
    pub retract: FiniteModule,
}

impl InstanceSpec {
    /// A pinned single-configuration instance on `module`.
    pub fn pinned(module: &str, selections: BTreeMap<String, Vec<usize>>) -> Self {
        InstanceSpec {
            id: 0,
            module: module.to_string(),
            selections,
            spaces: Vec::new(),
            retraction: RetractionSpec::from_phi(vec![0, 1, 2, 1, 1], vec![0, 1, 2]),
            suites: Vec::new(),
            mode: Mode::Pinned,
            seed: 0,
        }
    }

    /// Builds the modules and checks that every name resolves to a submodule.
    pub fn build(&self) -> Result<Instance> {
        let module = fixture_with_cap(&self.module, DEFAULT_ELEMENT_CAP)?;
        for (name, xs) in &self.selections {
            if xs.iter().any(|&x| x >= module.size()) {
                return Err(Error::NotASubmodule(format!("selection {name} has an out-of-range element")));
            }
            submodule(&module, xs.iter().copied().collect())
                .map_err(|_| Error::NotASubmodule(format!("selection {name}")))?;
        }
        for space in &self.spaces {
            if let Some(bad) = space.iter().find(|n| !self.selections.contains_key(*n)) {
                return Err(Error::Parse(format!("space refers to unknown selection `{bad}`")));
            }
        }
        self.retraction.check()?;
        let (retract, _) = build_from_retraction(&self.retraction)?;
        Ok(Instance { spec: self.clone(), module, retract })
    }
}

impl Instance {
    pub fn selection(&self, name: &str) -> Option<Submodule<'_>> {
        let xs = self.spec.selections.get(name)?;
        submodule(&self.module, xs.iter().copied().collect()).ok()
    }
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, xs: &'a [T]) -> &'a T {
    xs.choose(rng).expect("nonempty choice")
}

fn chain_or_nsat(rng: &mut ChaCha8Rng) -> String {
    match rng.gen_range(0..4) {
        0 => format!("CHAIN({})", rng.gen_range(1..=5)),
        1 => format!("NSAT({})", rng.gen_range(1..=5)),
        2 => pick(rng, &["NCYC(1,2)", "NCYC(2,2)", "NCYC(1,3)", "ZMOD(2)", "ZMOD(3)", "NCYC(2,1)"]).to_string(),
        _ => pick(rng, &["FREE(BOOL,2)", "FREE(BOOL,3)", "FREE(SB,2)", "SB", "FREE(ZMOD(2),2)"]).to_string(),
    }
}

fn product_expr(rng: &mut ChaCha8Rng) -> String {
    match rng.gen_range(0..5) {
        0 => {
            let a = rng.gen_range(1..=3);
            let b = rng.gen_range(1..=(10 / (a + 1) - 1).max(1));
            format!("PRODUCT(CHAIN({a}),CHAIN({b}))")
        }
        1 => "PRODUCT(CHAIN(1),FREE(BOOL,2))".to_string(),
        2 => pick(rng, &["PRODUCT(NSAT(1),NSAT(1))", "PRODUCT(NSAT(2),NSAT(2))"]).to_string(),
        3 => pick(rng, &["PRODUCT(NCYC(1,2),NCYC(1,2))", "PRODUCT(ZMOD(2),ZMOD(2))", "PRODUCT(ZMOD(3),ZMOD(3))"])
            .to_string(),
        _ => "PRODUCT(SUPERTROP(1),SB)".to_string(),
    }
}

/// Random submodule of `m` generated by one or two random elements.
fn random_submodule(rng: &mut ChaCha8Rng, m: &FiniteModule, within: Mask) -> Mask {
    let pool: Vec<usize> = within.iter().collect();
    let k = rng.gen_range(0..=2);
    let gens: Mask = (0..k).map(|_| *pick(rng, &pool)).collect();
    generate(m, gens).mask()
}

fn amalgam_expr(rng: &mut ChaCha8Rng) -> Option<String> {
    let base = pick(rng, &["CHAIN(2)", "CHAIN(3)", "FREE(BOOL,2)", "NSAT(3)", "NCYC(1,2)", "SUPERTROP(1)", "ZMOD(2)"]);
    let m = fixture_with_cap(base, GENERATED_ELEMENT_CAP).ok()?;
    let set = |mask: Mask| format!("{{{}}}", mask.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    let a = random_submodule(rng, &m, m.all());
    let b = random_submodule(rng, &m, m.all());
    Some(format!("AMALGAM({base},{},{})", set(a), set(b)))
}

fn random_retraction(rng: &mut ChaCha8Rng) -> RetractionSpec {
    let n = rng.gen_range(2..=7);
    let k = rng.gen_range(2..=n.min(4));
    let mut rest: Vec<usize> = (1..n).collect();
    rest.shuffle(rng);
    let mut x: Vec<usize> = rest[..k - 1].to_vec();
    let mut phi: Vec<usize> = (0..n).collect();
    for v in 1..n {
        if !x.contains(&v) {
            phi[v] = *pick(rng, &x);
        }
    }
    x.shuffle(rng);
    let mut order = vec![0];
    order.extend(x);
    RetractionSpec::from_phi(phi, order)
}

fn module_expr(rng: &mut ChaCha8Rng) -> String {
    loop {
        let expr = match rng.gen_range(0..12) {
            0..=3 => chain_or_nsat(rng),
            4 => format!("SUPERTROP({})", rng.gen_range(1..=3)),
            5 | 6 => product_expr(rng),
            7 => format!("QUOTIENT({})", pick(rng, &["NCYC(1,2)", "PRODUCT(NCYC(1,2),NCYC(1,2))", "ZMOD(3)", "NCYC(2,2)", "FREE(ZMOD(2),2)"])),
            8 | 9 => match amalgam_expr(rng) {
                Some(e) => e,
                None => continue,
            },
            _ => {
                let r = random_retraction(rng);
                let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                format!("RETRACT([{}],[{}])", list(&r.phi), list(&r.order))
            }
        };
        match fixture_with_cap(&expr, GENERATED_ELEMENT_CAP) {
            Ok(m) if m.size() <= GENERATED_ELEMENT_CAP => return expr,
            _ => continue,
        }
    }
}

fn one_instance(rng: &mut ChaCha8Rng, id: usize) -> InstanceSpec {
    let expr = module_expr(rng);
    let m = fixture_with_cap(&expr, GENERATED_ELEMENT_CAP).expect("expression was just validated");
    let mut sel = BTreeMap::new();
    let mut put = |name: &str, mask: Mask| {
        sel.insert(name.to_string(), mask.iter().collect::<Vec<_>>());
    };
    let a1 = random_submodule(rng, &m, m.all());
    let a2 = random_submodule(rng, &m, m.all());
    let a3 = random_submodule(rng, &m, m.all());
    put("A1", a1);
    put("A2", a2);
    put("A3", a3);
    let d = random_submodule(rng, &m, a1);
    put("D", d);
    let t = generate(&m, d.union(random_submodule(rng, &m, m.all()))).mask();
    put("T", t);
    InstanceSpec {
        id,
        module: expr,
        selections: sel,
        spaces: vec![vec!["A1".into(), "A2".into()], vec!["A1".into(), "A2".into(), "A3".into()]],
        retraction: random_retraction(rng),
        suites: Vec::new(),
        mode: Mode::Sample,
        seed: rng.next_u64(),
    }
}

/// Deterministic stream of `budget` instances drawn from the fixture
/// families, with random submodule selections built by `generate`.
pub fn generate_instances(seed: u64, budget: usize) -> Vec<InstanceSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..budget).map(|id| one_instance(&mut rng, id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_deterministic_and_valid() {
        assert!(generate_instances(7, 0).is_empty());
        let a = generate_instances(7, 25);
        assert_eq!(a, generate_instances(7, 25));
        for spec in &a {
            let inst = spec.build().unwrap();
            assert!(inst.module.size() <= GENERATED_ELEMENT_CAP);
            assert!(inst.selection("D").unwrap().is_subset(&inst.selection("A1").unwrap()));
            assert!(inst.selection("D").unwrap().is_subset(&inst.selection("T").unwrap()));
        }
    }

    #[test]
    fn bad_selection_is_rejected() {
        let mut sel = BTreeMap::new();
        sel.insert("A".to_string(), vec![0, 1]);
        let mut spec = InstanceSpec::pinned("B2", sel);
        spec.selections.insert("B".into(), vec![1]);
        assert!(matches!(spec.build(), Err(Error::NotASubmodule(_))));
        spec.selections.remove("B");
        spec.spaces.push(vec!["A".into(), "Q".into()]);
        assert!(matches!(spec.build(), Err(Error::Parse(_))));
    }
}
