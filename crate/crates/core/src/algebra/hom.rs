use super::module::FiniteModule;
use crate::error::{Error, Result};
use crate::mask::Mask;
use serde::{Deserialize, Serialize};

/// An explicit element map between two modules over the same ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homomorphism {
    pub map: Vec<usize>,
}

impl Homomorphism {
    pub fn identity(m: &FiniteModule) -> Self {
        Homomorphism { map: m.elements().collect() }
    }

    /// Checks additivity, zero preservation and scalar compatibility.
    pub fn validate(&self, domain: &FiniteModule, codomain: &FiniteModule) -> Result<()> {
        if self.map.len() != domain.size() {
            return Err(Error::NotAHomomorphism(format!(
                "map has {} entries for a domain of {}",
                self.map.len(),
                domain.size()
            )));
        }
        if let Some(&bad) = self.map.iter().find(|&&y| y >= codomain.size()) {
            return Err(Error::NotAHomomorphism(format!("image {bad} out of range")));
        }
        if domain.ring() != codomain.ring() {
            return Err(Error::NotAHomomorphism("domain and codomain have different rings".into()));
        }
        if self.map[domain.zero()] != codomain.zero() {
            return Err(Error::NotAHomomorphism("zero not preserved".into()));
        }
        for x in domain.elements() {
            for y in domain.elements() {
                if self.map[domain.add(x, y)] != codomain.add(self.map[x], self.map[y]) {
                    return Err(Error::NotAHomomorphism(format!("not additive at ({x},{y})")));
                }
            }
            for l in 0..domain.ring().size() {
                if self.map[domain.act(l, x)] != codomain.act(l, self.map[x]) {
                    return Err(Error::NotAHomomorphism(format!("not linear at ({l},{x})")));
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image(&self, s: Mask) -> Mask {
        s.iter().map(|x| self.map[x]).collect()
    }

    pub fn preimage(&self, s: Mask) -> Mask {
        (0..self.map.len()).filter(|&x| s.contains(self.map[x])).collect()
    }

    /// Injective on the given subset of the domain.
    pub fn is_injective_on(&self, s: Mask) -> bool {
        let mut seen = Mask::EMPTY;
        for x in s.iter() {
            let y = self.map[x];
            if seen.contains(y) {
                return false;
            }
            seen.insert(y);
        }
        true
    }
}
