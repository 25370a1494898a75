use super::report::ValidationReport;
use crate::error::{Error, Result};
use crate::mask::Mask;
use serde::{Deserialize, Serialize};

/// A finite semiring given by dense operation tables.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSemiring", into = "RawSemiring")]
pub struct SemiringTable {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

#[derive(Serialize, Deserialize)]
struct RawSemiring {
    size: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

impl TryFrom<RawSemiring> for SemiringTable {
    type Error = Error;
    fn try_from(r: RawSemiring) -> Result<Self> {
        if r.size != r.add.len() {
            return Err(Error::MalformedTable(format!(
                "size is {} but add has {} rows",
                r.size,
                r.add.len()
            )));
        }
        SemiringTable::new(r.add, r.mul, r.zero, r.one)
    }
}

impl From<SemiringTable> for RawSemiring {
    fn from(t: SemiringTable) -> Self {
        RawSemiring {
            size: t.size,
            add: t.add.chunks(t.size).map(<[usize]>::to_vec).collect(),
            mul: t.mul.chunks(t.size).map(<[usize]>::to_vec).collect(),
            zero: t.zero,
            one: t.one,
        }
    }
}

pub(crate) fn flatten_square(name: &str, rows: Vec<Vec<usize>>, n: usize) -> Result<Vec<usize>> {
    if rows.len() != n {
        return Err(Error::MalformedTable(format!("{name} has {} rows, expected {n}", rows.len())));
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, row) in rows.into_iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!("{name} row {i} has length {}", row.len())));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= n) {
            return Err(Error::MalformedTable(format!("{name} row {i} holds index {bad}")));
        }
        out.extend(row);
    }
    Ok(out)
}

impl SemiringTable {
    /// Builds a table after structural checks only; axioms are checked by
    /// [`SemiringTable::validate`].
    pub fn new(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, zero: usize, one: usize) -> Result<Self> {
        let size = add.len();
        if size == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if size > crate::mask::MAX_ELEMENTS {
            return Err(Error::SizeCap { what: "semiring".into(), size, cap: crate::mask::MAX_ELEMENTS });
        }
        let add = flatten_square("add", add, size)?;
        let mul = flatten_square("mul", mul, size)?;
        if zero >= size || one >= size {
            return Err(Error::MalformedTable("zero or one out of range".into()));
        }
        Ok(SemiringTable { size, add, mul, zero, one })
    }

    pub(crate) fn from_flat(size: usize, add: Vec<usize>, mul: Vec<usize>, zero: usize, one: usize) -> Self {
        debug_assert_eq!(add.len(), size * size);
        debug_assert_eq!(mul.len(), size * size);
        SemiringTable { size, add, mul, zero, one }
    }

    /// Builds a table from closures over `0..size`.
    pub fn from_fn(
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
    ) -> Self {
        let mut a = Vec::with_capacity(size * size);
        let mut m = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                a.push(add(x, y));
                m.push(mul(x, y));
            }
        }
        SemiringTable::from_flat(size, a, m, zero, one)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }
    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }
    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    /// Returns a copy with one addition entry replaced (used to build
    /// deliberately broken tables in tests and demos).
    pub fn with_add_entry(&self, a: usize, b: usize, v: usize) -> Self {
        let mut t = self.clone();
        t.add[a * self.size + b] = v;
        t
    }

    pub fn with_mul_entry(&self, a: usize, b: usize, v: usize) -> Self {
        let mut t = self.clone();
        t.mul[a * self.size + b] = v;
        t
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.size;
        let mut rep = ValidationReport::default();
        let (z, o) = (self.zero, self.one);
        rep.first3(n, "add-associative", |a, b, c| {
            self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
        });
        rep.first2(n, "add-commutative", |a, b| self.add(a, b) == self.add(b, a));
        rep.first1(n, "add-identity", |a| self.add(a, z) == a && self.add(z, a) == a);
        rep.first3(n, "mul-associative", |a, b, c| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        });
        rep.first1(n, "mul-identity", |a| self.mul(a, o) == a && self.mul(o, a) == a);
        rep.first3(n, "left-distributive", |a, b, c| {
            self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
        });
        rep.first3(n, "right-distributive", |a, b, c| {
            self.mul(self.add(a, b), c) == self.add(self.mul(a, c), self.mul(b, c))
        });
        rep.first1(n, "zero-annihilates", |a| self.mul(a, z) == z && self.mul(z, a) == z);
        if n > 1 && z == o {
            rep.push("zero-ne-one", vec![z]);
        }
        rep
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// No two nonzero elements sum to zero.
    pub fn is_lzs(&self) -> bool {
        (0..self.size).all(|a| {
            (0..self.size).all(|b| self.add(a, b) != self.zero || (a == self.zero && b == self.zero))
        })
    }

    /// Elements with a two-sided multiplicative inverse.
    pub fn units(&self) -> Mask {
        (0..self.size)
            .filter(|&a| (0..self.size).any(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one))
            .collect()
    }

    /// Every element is a (possibly empty) sum of units.
    pub fn is_sum_of_units(&self) -> bool {
        let units = self.units();
        let mut reach = Mask::singleton(self.zero);
        loop {
            let mut next = reach;
            for r in reach.iter() {
                for u in units.iter() {
                    next.insert(self.add(r, u));
                }
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        reach == Mask::full(self.size)
    }

    /// Commutative, zero-sum-free, and every nonzero element invertible.
    pub fn is_zerosumfree_semifield(&self) -> bool {
        let units = self.units();
        self.size > 1
            && self.is_commutative()
            && self.is_lzs()
            && (0..self.size).all(|a| a == self.zero || units.contains(a))
    }
}

impl std::fmt::Debug for SemiringTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SemiringTable(size={}, zero={}, one={})", self.size, self.zero, self.one)
    }
}
