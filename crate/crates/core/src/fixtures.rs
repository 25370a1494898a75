//! Fixture families addressed by short expressions such as `CHAIN(3)` or
//! `PRODUCT(CHAIN(1),FREE(BOOL,2))`.
//!
//! Module expressions:
//! `BOOL`, `SB`, `CHAIN(k)`, `NSAT(k)`, `NCYC(i,p)`, `ZMOD(n)`, `SUPERTROP(k)`,
//! `FREE(R,n)`, `PRODUCT(M,N)`, `QUOTIENT(M)`, `AMALGAM(M,{..},{..}[,{..}])`,
//! `RETRACT([phi],[order])`, and the aliases `B2`, `C3`, `C4`, `NSAT4`, `Z2`,
//! `V5`. Semiring expressions (the `R` of `FREE`): `BOOL`, `SB`, `NSAT(k)`,
//! `NCYC(i,p)`, `ZMOD(n)`.
//!
//! Element encodings: `FREE(R,n)` reads coordinates most significant first, so
//! in `B2` the elements `00, 01, 10, 11` are `0, 1, 2, 3`. `PRODUCT(M,N)` puts
//! `(m, n)` at `m·|N| + n`. `SUPERTROP(k)` has `0`, tangibles `1..=k` and the
//! ghost of level `i` at `k + i`.

use crate::algebra::{cyclic_semiring, FiniteModule, SemiringTable};
use crate::error::{Error, Result};
use crate::mask::{Mask, DEFAULT_ELEMENT_CAP};
use std::sync::Arc;

/// Parsed fixture expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Call(String, Vec<Expr>),
    Num(usize),
    Set(Vec<usize>),
    List(Vec<usize>),
}

impl std::fmt::Display for Expr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Set(v) => write!(f, "{{{}}}", join(v)),
            Expr::List(v) => write!(f, "[{}]", join(v)),
            Expr::Call(name, args) if args.is_empty() => write!(f, "{name}"),
            Expr::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn number(&mut self) -> Result<usize> {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i])
            .unwrap()
            .parse()
            .map_err(|_| Error::FixtureSyntax(format!("expected a number at offset {start}")))
    }

    fn numbers(&mut self, close: u8) -> Result<Vec<usize>> {
        let mut v = Vec::new();
        if self.peek() == Some(close) {
            self.i += 1;
            return Ok(v);
        }
        loop {
            v.push(self.number()?);
            match self.peek() {
                Some(b',') => self.i += 1,
                Some(c) if c == close => {
                    self.i += 1;
                    return Ok(v);
                }
                _ => return Err(Error::FixtureSyntax(format!("unterminated list at offset {}", self.i))),
            }
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'{') => {
                self.i += 1;
                Ok(Expr::Set(self.numbers(b'}')?))
            }
            Some(b'[') => {
                self.i += 1;
                Ok(Expr::List(self.numbers(b']')?))
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Num(self.number()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
                    self.i += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.i]).unwrap().to_ascii_uppercase();
                let mut args = Vec::new();
                if self.peek() == Some(b'(') {
                    self.i += 1;
                    loop {
                        args.push(self.expr()?);
                        match self.peek() {
                            Some(b',') => self.i += 1,
                            Some(b')') => {
                                self.i += 1;
                                break;
                            }
                            _ => {
                                return Err(Error::FixtureSyntax(format!("expected `,` or `)` at offset {}", self.i)))
                            }
                        }
                    }
                }
                Ok(Expr::Call(name, args))
            }
            _ => Err(Error::FixtureSyntax(format!("unexpected input at offset {}", self.i))),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { s: src.as_bytes(), i: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(Error::FixtureSyntax(format!("trailing input at offset {}", p.i)));
    }
    Ok(e)
}

/// Builds the module named by `src` under the default element cap.
pub fn fixture(src: &str) -> Result<FiniteModule> {
    fixture_with_cap(src, DEFAULT_ELEMENT_CAP)
}

pub fn fixture_with_cap(src: &str, cap: usize) -> Result<FiniteModule> {
    let e = parse(src)?;
    let m = build_module(&e, cap)?;
    let rep = m.ring().validate();
    if !rep.ok() {
        return Err(Error::Internal(format!("fixture {src} has an invalid ring: {:?}", rep.violations)));
    }
    let rep = m.validate();
    if !rep.ok() {
        return Err(Error::Internal(format!("fixture {src} failed validation: {:?}", rep.violations)));
    }
    Ok(m)
}

/// The set retraction behind a `RETRACT([phi],[order])` expression or `V5`.
pub fn retraction_spec(src: &str) -> Result<crate::retraction::RetractionSpec> {
    let src = alias(src.trim()).unwrap_or(src);
    match parse(src)? {
        Expr::Call(name, args) if name == "RETRACT" && args.len() == 2 => match (&args[0], &args[1]) {
            (Expr::List(phi), Expr::List(order)) => {
                Ok(crate::retraction::RetractionSpec::from_phi(phi.clone(), order.clone()))
            }
            _ => Err(Error::FixtureSyntax(format!("{src} is not RETRACT([phi],[order])"))),
        },
        _ => Err(Error::FixtureSyntax(format!("{src} is not RETRACT([phi],[order])"))),
    }
}

/// Builds the semiring named by `src`.
pub fn semiring_fixture(src: &str) -> Result<SemiringTable> {
    build_semiring(&parse(src)?)
}

fn bad(e: &Expr) -> Error {
    Error::UnknownFixture(e.to_string())
}

fn num(e: &Expr, args: &[Expr], k: usize) -> Result<usize> {
    match args.get(k) {
        Some(Expr::Num(n)) => Ok(*n),
        _ => Err(bad(e)),
    }
}

fn cap_check(what: &Expr, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeCap { what: what.to_string(), size, cap })
    } else {
        Ok(())
    }
}

pub fn boolean() -> SemiringTable {
    cyclic_semiring(1, 1)
}

/// The supertropical boolean semiring `{0, 1, 1ν}` with `1 + 1 = 1ν`.
pub fn supertropical_boolean() -> SemiringTable {
    let add = |a: usize, b: usize| match (a, b) {
        (0, x) | (x, 0) => x,
        _ => 2,
    };
    let mul = |a: usize, b: usize| match (a, b) {
        (0, _) | (_, 0) => 0,
        (1, 1) => 1,
        _ => 2,
    };
    SemiringTable::from_fn(3, add, mul, 0, 1)
}

fn build_semiring(e: &Expr) -> Result<SemiringTable> {
    let Expr::Call(name, args) = e else { return Err(bad(e)) };
    match (name.as_str(), args.len()) {
        ("BOOL", 0) => Ok(boolean()),
        ("SB", 0) => Ok(supertropical_boolean()),
        ("NSAT", 1) => {
            let k = num(e, args, 0)?;
            if k == 0 {
                return Err(bad(e));
            }
            Ok(cyclic_semiring(k, 1))
        }
        ("NCYC", 2) => {
            let (i, p) = (num(e, args, 0)?, num(e, args, 1)?);
            if p == 0 || i + p > crate::mask::MAX_ELEMENTS {
                return Err(bad(e));
            }
            Ok(cyclic_semiring(i, p))
        }
        ("ZMOD", 1) => {
            let n = num(e, args, 0)?;
            if n == 0 || n > crate::mask::MAX_ELEMENTS {
                return Err(bad(e));
            }
            Ok(cyclic_semiring(0, n))
        }
        _ => Err(bad(e)),
    }
}

fn alias(name: &str) -> Option<&'static str> {
    Some(match name {
        "B2" => "FREE(BOOL,2)",
        "C3" => "CHAIN(2)",
        "C4" => "CHAIN(3)",
        "NSAT4" => "NSAT(3)",
        "Z2" => "ZMOD(2)",
        "V5" => "RETRACT([0,1,2,1,1],[0,1,2])",
        _ => return None,
    })
}

fn set_arg(e: &Expr, a: &Expr) -> Result<Mask> {
    match a {
        Expr::Set(v) => Ok(v.iter().collect()),
        _ => Err(bad(e)),
    }
}

pub(crate) fn build_module(e: &Expr, cap: usize) -> Result<FiniteModule> {
    let Expr::Call(name, args) = e else { return Err(bad(e)) };
    if args.is_empty() {
        if let Some(src) = alias(name) {
            return build_module(&parse(src)?, cap);
        }
    }
    let m = match (name.as_str(), args.len()) {
        ("BOOL" | "SB" | "NSAT" | "NCYC" | "ZMOD", _) => {
            let r = build_semiring(e)?;
            cap_check(e, r.size(), cap)?;
            FiniteModule::regular(Arc::new(r))
        }
        ("CHAIN", 1) => {
            let k = num(e, args, 0)?;
            cap_check(e, k + 1, cap)?;
            FiniteModule::from_fn(Arc::new(boolean()), k + 1, |a, b| a.max(b), |l, x| if l == 0 { 0 } else { x }, 0)
        }
        ("SUPERTROP", 1) => {
            let k = num(e, args, 0)?;
            if k == 0 {
                return Err(bad(e));
            }
            cap_check(e, 2 * k + 1, cap)?;
            supertropical(k)
        }
        ("FREE", 2) => {
            let r = Arc::new(build_semiring(&args[0])?);
            let n = num(e, args, 1)?;
            let size = r.size().checked_pow(n as u32).unwrap_or(usize::MAX);
            cap_check(e, size, cap)?;
            free(r, n)
        }
        ("PRODUCT", 2) => {
            let a = build_module(&args[0], cap)?;
            let b = build_module(&args[1], cap)?;
            cap_check(e, a.size() * b.size(), cap)?;
            product(&a, &b)?
        }
        ("QUOTIENT", 1) => {
            let a = build_module(&args[0], cap)?;
            crate::order::quotient(&a)?.module
        }
        ("AMALGAM", n) if n >= 2 => {
            let a = build_module(&args[0], cap)?;
            let mut factors = Vec::new();
            for x in &args[1..] {
                factors.push(crate::lattice::submodule(&a, set_arg(e, x)?)?);
            }
            let space = crate::exchange::TupleSpace::new(factors)?;
            let p = crate::exchange::exchange_partition(&space)?;
            cap_check(e, p.class_count(), cap)?;
            crate::exchange::build_amalgam(&p)?.module
        }
        ("RETRACT", 2) => {
            let (Expr::List(phi), Expr::List(order)) = (&args[0], &args[1]) else { return Err(bad(e)) };
            cap_check(e, phi.len(), cap)?;
            let spec = crate::retraction::RetractionSpec::from_phi(phi.clone(), order.clone());
            crate::retraction::build_from_retraction(&spec)?.0
        }
        _ => return Err(bad(e)),
    };
    Ok(m)
}

/// `R^n` with coordinates read most significant first.
pub fn free(r: Arc<SemiringTable>, n: usize) -> FiniteModule {
    let q = r.size();
    let size = q.pow(n as u32);
    let digits = move |mut x: usize| {
        let mut d = vec![0; n];
        for k in (0..n).rev() {
            d[k] = x % q;
            x /= q;
        }
        d
    };
    let undigits = move |d: &[usize]| d.iter().fold(0, |acc, &c| acc * q + c);
    let (ra, rm) = (r.clone(), r.clone());
    FiniteModule::from_fn(
        r.clone(),
        size,
        |a, b| {
            let (da, db) = (digits(a), digits(b));
            let s: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| ra.add(x, y)).collect();
            undigits(&s)
        },
        |l, x| {
            let s: Vec<usize> = digits(x).iter().map(|&c| rm.mul(l, c)).collect();
            undigits(&s)
        },
        undigits(&vec![r.zero(); n]),
    )
}

/// Direct product over a shared ring; `(a, b)` sits at `a·|B| + b`.
pub fn product(a: &FiniteModule, b: &FiniteModule) -> Result<FiniteModule> {
    if a.ring() != b.ring() {
        return Err(Error::PreconditionFailed("product factors have different rings".into()));
    }
    let nb = b.size();
    Ok(FiniteModule::from_fn(
        a.ring_arc().clone(),
        a.size() * nb,
        |x, y| a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb),
        |l, x| a.act(l, x / nb) * nb + b.act(l, x % nb),
        a.zero() * nb + b.zero(),
    ))
}

/// Level and ghost flag of a `SUPERTROP(k)` element.
pub fn supertropical_level(k: usize, x: usize) -> (usize, bool) {
    if x == 0 {
        (0, false)
    } else if x <= k {
        (x, false)
    } else {
        (x - k, true)
    }
}

/// The ghost map ν on `SUPERTROP(k)`.
pub fn supertropical_nu(k: usize, x: usize) -> usize {
    match supertropical_level(k, x) {
        (0, _) => 0,
        (l, _) => k + l,
    }
}

fn supertropical(k: usize) -> FiniteModule {
    let add = move |a: usize, b: usize| {
        let (la, _) = supertropical_level(k, a);
        let (lb, _) = supertropical_level(k, b);
        if la > lb {
            a
        } else if lb > la {
            b
        } else if la == 0 {
            0
        } else {
            k + la
        }
    };
    let act = move |l: usize, x: usize| match l {
        0 => 0,
        1 => x,
        _ => supertropical_nu(k, x),
    };
    FiniteModule::from_fn(Arc::new(supertropical_boolean()), 2 * k + 1, add, act, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["CHAIN(3)", "PRODUCT(CHAIN(1),FREE(BOOL,2))", "AMALGAM(C3,{0,1},{0,2})", "RETRACT([0,1,2,1,1],[0,1,2])"] {
            assert_eq!(parse(s).unwrap().to_string(), s);
        }
        assert!(parse("CHAIN(3").is_err());
        assert!(matches!(fixture("NOPE(1)"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn fixture_sizes() {
        assert_eq!(fixture("CHAIN(2)").unwrap().size(), 3);
        assert_eq!(fixture("NSAT(3)").unwrap().size(), 4);
        assert_eq!(fixture("SUPERTROP(2)").unwrap().size(), 5);
        assert_eq!(fixture("B2").unwrap().size(), 4);
        assert_eq!(fixture("V5").unwrap().size(), 5);
        assert_eq!(fixture("AMALGAM(C3,{0,1},{0,2})").unwrap().size(), 4);
        assert!(matches!(fixture("CHAIN(64)"), Err(Error::SizeCap { .. })));
        assert_eq!(fixture_with_cap("CHAIN(64)", 65).unwrap().size(), 65);
    }

    #[test]
    fn every_family_validates() {
        for s in [
            "BOOL",
            "SB",
            "CHAIN(0)",
            "CHAIN(6)",
            "NSAT(1)",
            "NSAT(6)",
            "NCYC(2,3)",
            "ZMOD(5)",
            "SUPERTROP(1)",
            "SUPERTROP(3)",
            "FREE(BOOL,3)",
            "FREE(NSAT(2),2)",
            "FREE(SB,2)",
            "PRODUCT(CHAIN(1),CHAIN(3))",
            "PRODUCT(ZMOD(2),ZMOD(2))",
            "QUOTIENT(NCYC(1,2))",
        ] {
            let m = fixture(s).unwrap();
            assert!(m.validate().ok(), "{s}");
            assert!(m.ring().validate().ok(), "{s}");
        }
    }

    #[test]
    fn semiring_validation_pins() {
        let n4 = semiring_fixture("NSAT(3)").unwrap();
        assert!(n4.validate().ok());
        let broken = n4.with_add_entry(2, 2, 2);
        let rep = broken.validate();
        assert!(!rep.ok());
        assert_eq!(rep.get("left-distributive").unwrap().witness, vec![2, 1, 1]);
        assert!(boolean().validate().ok());
    }

    #[test]
    fn module_validation_pins() {
        let c3 = fixture("C3").unwrap();
        let broken = c3.with_act_entry(1, 2, 1);
        let rep = broken.validate();
        assert_eq!(rep.get("act-identity").unwrap().witness, vec![2]);
    }

    #[test]
    fn malformed_tables_are_structural_errors() {
        let r = SemiringTable::new(vec![vec![0, 1], vec![1]], vec![vec![0, 0], vec![0, 1]], 0, 1);
        assert!(matches!(r, Err(Error::MalformedTable(_))));
        let r = SemiringTable::new(vec![vec![0, 5], vec![1, 1]], vec![vec![0, 0], vec![0, 1]], 0, 1);
        assert!(matches!(r, Err(Error::MalformedTable(_))));
    }

    #[test]
    fn lzs_examples() {
        assert!(fixture("B2").unwrap().is_lzs());
        assert!(!fixture("Z2").unwrap().is_lzs());
        assert!(fixture("NSAT4").unwrap().is_lzs());
    }

    #[test]
    fn supertropical_tables() {
        let m = fixture("SUPERTROP(2)").unwrap();
        // 1 + 1 = 1ν, 1 + 2 = 2, 2 + 2ν = 2ν
        assert_eq!(m.add(1, 1), 3);
        assert_eq!(m.add(1, 2), 2);
        assert_eq!(m.add(2, 4), 4);
        assert_eq!(supertropical_nu(2, 1), 3);
    }
}
