//! The theorem harness: seeded instances, a registry of checkable results,
//! the suite runner and its reports, and the amalgamation hierarchy pipeline.

mod checks;
mod hierarchy;
mod instance;
mod registry;
mod suite;

pub use hierarchy::{hierarchy_pipeline, HierarchyReport};
pub use instance::{generate_instances, Instance, InstanceSpec, Mode, GENERATED_ELEMENT_CAP};
pub use registry::{registry, resolve_suite, Status, Theorem, SUITES};
pub use suite::{closure_crosscheck, run_suite, ClosureReport, Report, SuiteResult, SuiteViolation, TheoremTally, SCHEMA_VERSION};

use crate::algebra::FiniteModule;
use crate::lattice::{enumerate_submodules_capped, Submodule};
use crate::mask::Mask;
use crate::order::{natural_quasiorder, QuasiOrder};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

/// Upper bound on the submodule lists kept per instance.
const SUBMODULE_CAP: usize = 4096;
/// Trials per theorem and instance in sampling mode.
const TRIALS: usize = 64;
/// Trials after which a theorem stops once its hypotheses held this often.
const HITS: usize = 8;

/// What one checker found on one instance.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    /// No sampled configuration satisfied the hypotheses.
    Vacuous,
    Pass,
    /// A configuration satisfying the hypotheses where the conclusion fails.
    Violation(Value),
}

/// Result of a single sampled configuration.
pub(crate) enum Trial {
    Skip,
    Hold,
    Fail(Value),
}

macro_rules! hyp {
    ($c:expr) => {
        if !$c {
            return $crate::harness::Trial::Skip;
        }
    };
}

macro_rules! concl {
    ($c:expr, $($j:tt)+) => {
        if !$c {
            return $crate::harness::Trial::Fail(serde_json::json!($($j)+));
        }
    };
}

macro_rules! some {
    ($e:expr) => {
        match $e {
            Some(v) => v,
            None => return $crate::harness::Trial::Skip,
        }
    };
}

macro_rules! ok {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(_) => return $crate::harness::Trial::Skip,
        }
    };
}

pub(crate) use {concl, hyp, ok, some};

/// Everything a checker may read about one instance.
pub(crate) struct Ctx<'i> {
    pub inst: &'i Instance,
    pub m: &'i FiniteModule,
    pub all: Vec<Submodule<'i>>,
    pub le: QuasiOrder,
}

impl<'i> Ctx<'i> {
    pub fn new(inst: &'i Instance) -> crate::error::Result<Self> {
        let m = &inst.module;
        Ok(Ctx { inst, m, all: enumerate_submodules_capped(m, SUBMODULE_CAP)?, le: natural_quasiorder(m) })
    }

    pub fn pinned(&self) -> bool {
        self.inst.spec.mode == Mode::Pinned
    }

    /// The named selection on the first trial, otherwise nothing. `A` and
    /// `W` fall back to `A1`.
    pub fn named(&self, key: &str, k: usize) -> Option<Submodule<'i>> {
        if k != 0 {
            return None;
        }
        self.inst.selection(key).or_else(|| matches!(key, "A" | "W").then(|| self.inst.selection("A1")).flatten())
    }

    pub fn any(&self, rng: &mut ChaCha8Rng) -> Submodule<'i> {
        *self.all.choose(rng).expect("the zero submodule always exists")
    }

    pub fn any_where(&self, rng: &mut ChaCha8Rng, f: impl Fn(&Submodule<'i>) -> bool) -> Option<Submodule<'i>> {
        let pool: Vec<&Submodule<'i>> = self.all.iter().filter(|s| f(s)).collect();
        pool.choose(rng).map(|s| **s)
    }

    /// Named selection on the first trial, else a uniform submodule; in
    /// pinned mode only the named selection.
    pub fn get(&self, rng: &mut ChaCha8Rng, key: &str, k: usize) -> Option<Submodule<'i>> {
        self.get_where(rng, key, k, |_| true)
    }

    /// Named selection on the first trial, else a submodule passing `f`.
    pub fn get_where(
        &self,
        rng: &mut ChaCha8Rng,
        key: &str,
        k: usize,
        f: impl Fn(&Submodule<'i>) -> bool,
    ) -> Option<Submodule<'i>> {
        match self.named(key, k) {
            Some(s) => Some(s),
            None if self.pinned() => None,
            None => self.any_where(rng, f),
        }
    }

    /// A uniformly random element of `s`.
    pub fn elem(&self, rng: &mut ChaCha8Rng, s: Mask) -> usize {
        let v: Vec<usize> = s.iter().collect();
        *v.choose(rng).expect("nonempty set")
    }

    /// A uniformly random nonempty subset of `s` of at most `k` elements.
    pub fn few(&self, rng: &mut ChaCha8Rng, s: Mask, k: usize) -> Mask {
        let mut v: Vec<usize> = s.iter().collect();
        v.shuffle(rng);
        let n = rand::Rng::gen_range(rng, 1..=k.min(v.len()).max(1));
        v.into_iter().take(n).collect()
    }
}

/// FNV-1a, so per-theorem streams do not depend on the std hasher.
fn fnv(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub(crate) fn trial_rng(seed: u64, id: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv(id))
}

/// Runs `f` on sampled configurations until enough of them satisfy the
/// hypotheses or the trial budget is spent.
pub(crate) fn sample(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, mut f: impl FnMut(&mut ChaCha8Rng, usize) -> Trial) -> Outcome {
    let trials = if ctx.pinned() { 1 } else { TRIALS };
    let mut hits = 0;
    for k in 0..trials {
        match f(rng, k) {
            Trial::Skip => {}
            Trial::Hold => {
                hits += 1;
                if hits >= HITS {
                    break;
                }
            }
            Trial::Fail(v) => return Outcome::Violation(v),
        }
    }
    if hits > 0 {
        Outcome::Pass
    } else {
        Outcome::Vacuous
    }
}

/// Serializes a mask as a sorted element list.
pub(crate) fn v(m: Mask) -> Vec<usize> {
    m.iter().collect()
}
