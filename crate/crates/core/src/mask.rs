use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Number of 64-bit words backing a [`Mask`].
pub const MASK_WORDS: usize = 4;

/// Hard upper bound on carrier sizes.
pub const MAX_ELEMENTS: usize = 64 * MASK_WORDS;

/// Default element cap for fixtures and derived modules.
pub const DEFAULT_ELEMENT_CAP: usize = 64;

/// Fixed-width bitset over element indices.
///
/// Ordering compares the masks as unsigned integers, so a mask whose highest
/// element is larger sorts later.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mask([u64; MASK_WORDS]);

impl Mask {
    pub const EMPTY: Mask = Mask([0; MASK_WORDS]);

    pub fn full(n: usize) -> Mask {
        assert!(n <= MAX_ELEMENTS);
        let mut m = Mask::EMPTY;
        for (w, word) in m.0.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        m
    }

    pub fn singleton(x: usize) -> Mask {
        let mut m = Mask::EMPTY;
        m.insert(x);
        m
    }

    pub fn from_u64(bits: u64) -> Mask {
        let mut m = Mask::EMPTY;
        m.0[0] = bits;
        m
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.0[x >> 6] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0[x >> 6] |= 1 << (x & 63);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0[x >> 6] &= !(1 << (x & 63));
    }

    pub fn with(mut self, x: usize) -> Mask {
        self.insert(x);
        self
    }

    pub fn union(self, o: Mask) -> Mask {
        let mut r = self;
        for i in 0..MASK_WORDS {
            r.0[i] |= o.0[i];
        }
        r
    }

    pub fn intersect(self, o: Mask) -> Mask {
        let mut r = self;
        for i in 0..MASK_WORDS {
            r.0[i] &= o.0[i];
        }
        r
    }

    pub fn minus(self, o: Mask) -> Mask {
        let mut r = self;
        for i in 0..MASK_WORDS {
            r.0[i] &= !o.0[i];
        }
        r
    }

    pub fn is_subset(&self, o: &Mask) -> bool {
        (0..MASK_WORDS).all(|i| self.0[i] & !o.0[i] == 0)
    }

    pub fn is_disjoint(&self, o: &Mask) -> bool {
        (0..MASK_WORDS).all(|i| self.0[i] & o.0[i] == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> MaskIter {
        MaskIter { words: self.0, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn words(&self) -> &[u64; MASK_WORDS] {
        &self.0
    }
}

impl FromIterator<usize> for Mask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut m = Mask::EMPTY;
        for x in iter {
            m.insert(x);
        }
        m
    }
}

impl<'a> FromIterator<&'a usize> for Mask {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

pub struct MaskIter {
    words: [u64; MASK_WORDS],
    word: usize,
}

impl Iterator for MaskIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < MASK_WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl Ord for Mask {
    fn cmp(&self, other: &Self) -> Ordering {
        for i in (0..MASK_WORDS).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "e{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Mask {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Mask {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= MAX_ELEMENTS) {
            return Err(serde::de::Error::custom(format!("element index {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_len() {
        assert_eq!(Mask::full(0).len(), 0);
        assert_eq!(Mask::full(5).to_vec(), vec![0, 1, 2, 3, 4]);
        assert_eq!(Mask::full(64).len(), 64);
        assert_eq!(Mask::full(130).len(), 130);
        assert!(Mask::full(130).contains(129));
        assert!(!Mask::full(130).contains(130));
    }

    #[test]
    fn ordering_is_numeric() {
        let a = Mask::singleton(3);
        let b = Mask::singleton(70);
        assert!(a < b);
        assert!(Mask::from_u64(0b011) < Mask::from_u64(0b100));
    }

    #[test]
    fn display_and_serde() {
        let m: Mask = [0usize, 3, 7].iter().collect();
        assert_eq!(m.to_string(), "{e0,e3,e7}");
        let j = serde_json::to_string(&m).unwrap();
        assert_eq!(j, "[0,3,7]");
        let back: Mask = serde_json::from_str(&j).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn set_algebra() {
        let a: Mask = [1usize, 2, 3].iter().collect();
        let b: Mask = [2usize, 3, 4].iter().collect();
        assert_eq!(a.intersect(b).to_vec(), vec![2, 3]);
        assert_eq!(a.minus(b).to_vec(), vec![1]);
        assert!(a.intersect(b).is_subset(&a));
        assert!(Mask::singleton(1).is_disjoint(&b));
    }
}
