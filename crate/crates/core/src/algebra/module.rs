use super::report::ValidationReport;
use super::semiring::{flatten_square, SemiringTable};
use crate::error::{Error, Result};
use crate::mask::{Mask, MAX_ELEMENTS};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// A finite left module over a [`SemiringTable`].
///
/// `act` is stored row-major with one row per ring element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteModule {
    ring: Arc<SemiringTable>,
    size: usize,
    add: Vec<usize>,
    act: Vec<usize>,
    zero: usize,
}

impl FiniteModule {
    pub fn new(ring: Arc<SemiringTable>, add: Vec<Vec<usize>>, act: Vec<Vec<usize>>, zero: usize) -> Result<Self> {
        let size = add.len();
        if size == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if size > MAX_ELEMENTS {
            return Err(Error::SizeCap { what: "module".into(), size, cap: MAX_ELEMENTS });
        }
        let add = flatten_square("add", add, size)?;
        if act.len() != ring.size() {
            return Err(Error::MalformedTable(format!(
                "act has {} rows, ring has {} elements",
                act.len(),
                ring.size()
            )));
        }
        let mut flat = Vec::with_capacity(ring.size() * size);
        for (i, row) in act.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::MalformedTable(format!("act row {i} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= size) {
                return Err(Error::MalformedTable(format!("act row {i} holds index {bad}")));
            }
            flat.extend(row);
        }
        if zero >= size {
            return Err(Error::MalformedTable("zero out of range".into()));
        }
        Ok(FiniteModule { ring, size, add, act: flat, zero })
    }

    /// Builds a module from closures over the carrier and the ring.
    pub fn from_fn(
        ring: Arc<SemiringTable>,
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        act: impl Fn(usize, usize) -> usize,
        zero: usize,
    ) -> Self {
        let mut a = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                a.push(add(x, y));
            }
        }
        let mut s = Vec::with_capacity(ring.size() * size);
        for l in 0..ring.size() {
            for x in 0..size {
                s.push(act(l, x));
            }
        }
        FiniteModule { ring, size, add: a, act: s, zero }
    }

    /// The ring regarded as a left module over itself.
    pub fn regular(ring: Arc<SemiringTable>) -> Self {
        let r = ring.clone();
        let r2 = ring.clone();
        FiniteModule::from_fn(ring.clone(), ring.size(), move |a, b| r.add(a, b), move |l, x| r2.mul(l, x), ring.zero())
    }

    /// The one-element module over `ring`.
    pub fn trivial(ring: Arc<SemiringTable>) -> Self {
        FiniteModule::from_fn(ring, 1, |_, _| 0, |_, _| 0, 0)
    }

    /// Regards a finite commutative monoid as a module over the cyclic
    /// quotient of the naturals that acts on it by iterated addition.
    pub fn from_monoid(add: Vec<Vec<usize>>, zero: usize) -> Result<Self> {
        let size = add.len();
        if size == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        let flat = flatten_square("add", add, size)?;
        if zero >= size {
            return Err(Error::MalformedTable("zero out of range".into()));
        }
        let op = |a: usize, b: usize| flat[a * size + b];
        let mut rep = ValidationReport::default();
        rep.first3(size, "add-associative", |a, b, c| op(op(a, b), c) == op(a, op(b, c)));
        rep.first2(size, "add-commutative", |a, b| op(a, b) == op(b, a));
        rep.first1(size, "add-identity", |a| op(a, zero) == a);
        if let Some(v) = rep.violations.first() {
            return Err(Error::PreconditionFailed(format!(
                "not a commutative monoid ({} at {:?})",
                v.axiom, v.witness
            )));
        }
        // index and period of n ↦ n·x for every x
        let mut index = 0usize;
        let mut period = 1usize;
        for x in 0..size {
            let mut seen = vec![usize::MAX; size];
            let mut cur = zero;
            let mut n = 0usize;
            while seen[cur] == usize::MAX {
                seen[cur] = n;
                cur = op(cur, x);
                n += 1;
            }
            let i = seen[cur];
            index = index.max(i);
            period = lcm(period, n - i);
        }
        let rsize = index + period;
        if rsize > MAX_ELEMENTS {
            return Err(Error::SizeCap { what: "cyclic scalar semiring".into(), size: rsize, cap: MAX_ELEMENTS });
        }
        let ring = Arc::new(cyclic_semiring(index, period));
        let mut act = Vec::with_capacity(rsize * size);
        for n in 0..rsize {
            for x in 0..size {
                let mut cur = zero;
                for _ in 0..n {
                    cur = op(cur, x);
                }
                act.push(cur);
            }
        }
        Ok(FiniteModule { ring, size, add: flat, act, zero })
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
    pub fn ring(&self) -> &SemiringTable {
        &self.ring
    }
    pub fn ring_arc(&self) -> &Arc<SemiringTable> {
        &self.ring
    }
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }
    #[inline]
    pub fn act(&self, l: usize, x: usize) -> usize {
        self.act[l * self.size + x]
    }

    pub fn all(&self) -> Mask {
        Mask::full(self.size)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn act_table(&self) -> Vec<Vec<usize>> {
        self.act.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn with_act_entry(&self, l: usize, x: usize, v: usize) -> Self {
        let mut m = self.clone();
        m.act[l * self.size + x] = v;
        m
    }

    pub fn with_add_entry(&self, a: usize, b: usize, v: usize) -> Self {
        let mut m = self.clone();
        m.add[a * self.size + b] = v;
        m
    }

    /// Checks the monoid and module axioms exhaustively.
    pub fn validate(&self) -> ValidationReport {
        let n = self.size;
        let r = &*self.ring;
        let mut rep = ValidationReport::default();
        rep.first3(n, "add-associative", |a, b, c| self.add(self.add(a, b), c) == self.add(a, self.add(b, c)));
        rep.first2(n, "add-commutative", |a, b| self.add(a, b) == self.add(b, a));
        rep.first1(n, "add-identity", |a| self.add(a, self.zero) == a);
        rep.first1(n, "act-identity", |x| self.act(r.one(), x) == x);
        let rs = r.size();
        let mut first = |axiom: &str, ok: &dyn Fn(usize, usize, usize) -> bool| {
            for l in 0..rs {
                for x in 0..n.max(rs) {
                    for y in 0..n.max(rs) {
                        if ok(l, x, y) {
                            continue;
                        }
                        rep.push(axiom, vec![l, x, y]);
                        return;
                    }
                }
            }
        };
        first("act-distributes-over-vector-sum", &|l, x, y| {
            x >= n || y >= n || self.act(l, self.add(x, y)) == self.add(self.act(l, x), self.act(l, y))
        });
        // witness order (λ, μ, x)
        first("act-distributes-over-scalar-sum", &|l, m, x| {
            m >= rs || x >= n || self.act(r.add(l, m), x) == self.add(self.act(l, x), self.act(m, x))
        });
        first("act-compatible-with-mul", &|l, m, x| {
            m >= rs || x >= n || self.act(r.mul(l, m), x) == self.act(l, self.act(m, x))
        });
        rep.first1(n, "act-zero-scalar", |x| self.act(r.zero(), x) == self.zero);
        rep.first1(rs, "act-zero-vector", |l| self.act(l, self.zero) == self.zero);
        rep
    }

    /// No two nonzero elements sum to zero.
    pub fn is_lzs(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.add(a, b) != self.zero || (a == self.zero && b == self.zero)))
    }

    pub fn is_idempotent(&self) -> bool {
        self.elements().all(|x| self.add(x, x) == x)
    }

    /// `x + y ∈ {x, y}` for all pairs.
    pub fn is_bipotent(&self) -> bool {
        self.bipotent_witness().is_none()
    }

    pub fn bipotent_witness(&self) -> Option<(usize, usize)> {
        for x in self.elements() {
            for y in self.elements() {
                let s = self.add(x, y);
                if s != x && s != y {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// `n·x` for `n ≥ 0`.
    pub fn multiple(&self, n: usize, x: usize) -> usize {
        let mut cur = self.zero;
        for _ in 0..n {
            cur = self.add(cur, x);
        }
        cur
    }

    /// The set `{n·x | n ≥ 1}`, collected from the full orbit.
    pub fn positive_multiples(&self, x: usize) -> Mask {
        let mut out = Mask::EMPTY;
        let mut cur = x;
        while !out.contains(cur) {
            out.insert(cur);
            cur = self.add(cur, x);
        }
        out
    }

    /// Elementwise sum set `{a + b | a ∈ A, b ∈ B}`.
    pub fn sumset(&self, a: Mask, b: Mask) -> Mask {
        let mut out = Mask::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// Translate `x + S`.
    pub fn translate(&self, x: usize, s: Mask) -> Mask {
        s.iter().map(|y| self.add(x, y)).collect()
    }

    /// Whether `s` contains zero and is closed under addition and action.
    pub fn is_closed(&self, s: Mask) -> bool {
        if !s.contains(self.zero) {
            return false;
        }
        for x in s.iter() {
            for y in s.iter() {
                if y < x {
                    continue;
                }
                if !s.contains(self.add(x, y)) {
                    return false;
                }
            }
            for l in 0..self.ring.size() {
                if !s.contains(self.act(l, x)) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `s` is closed under addition (not necessarily containing 0).
    pub fn is_add_closed(&self, s: Mask) -> bool {
        s.iter().all(|x| s.iter().all(|y| s.contains(self.add(x, y))))
    }

    /// Whether `s` contains zero and is closed under addition.
    pub fn is_submonoid(&self, s: Mask) -> bool {
        s.contains(self.zero) && self.is_add_closed(s)
    }

    /// Additive closure of a set, without adjoining zero.
    pub fn additive_closure(&self, s: Mask) -> Mask {
        let mut cur = s;
        loop {
            let next = cur.union(self.sumset(cur, cur));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Summand absorption of `w` inside `ambient` at the set level.
    pub fn sa_witness_masks(&self, w: Mask, ambient: Mask) -> Option<(usize, usize)> {
        for x in ambient.iter() {
            for y in ambient.iter() {
                if w.contains(self.add(x, y)) && !(w.contains(x) && w.contains(y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// The quotient of the naturals identifying `n` with `n + period` for
/// `n ≥ index`; elements are `0..index+period`.
pub fn cyclic_semiring(index: usize, period: usize) -> SemiringTable {
    assert!(period >= 1);
    let size = index + period;
    let red = move |n: usize| if n < size { n } else { index + (n - index) % period };
    let one = red(1);
    SemiringTable::from_fn(size, |a, b| red(a + b), |a, b| red(a * b), 0, one)
}

#[derive(Serialize, Deserialize)]
struct RawModule {
    size: usize,
    add: Vec<Vec<usize>>,
    act: Vec<Vec<usize>>,
    zero: usize,
}

/// JSON document `{"semiring": {...}, "module": {...}}`.
#[derive(Serialize, Deserialize)]
pub struct ModuleDocument {
    semiring: SemiringTable,
    module: RawModule,
}

impl ModuleDocument {
    pub fn from_module(m: &FiniteModule) -> Self {
        ModuleDocument {
            semiring: (*m.ring).clone(),
            module: RawModule { size: m.size, add: m.add_table(), act: m.act_table(), zero: m.zero },
        }
    }

    pub fn into_module(self) -> Result<FiniteModule> {
        if self.module.size != self.module.add.len() {
            return Err(Error::MalformedTable("module size disagrees with add table".into()));
        }
        FiniteModule::new(Arc::new(self.semiring), self.module.add, self.module.act, self.module.zero)
    }
}

impl std::fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteModule(size={}, ring={:?})", self.size, self.ring)
    }
}
