//! Root systems of the finite truncations and positive systems from orders.
//!
//! Positive systems are computed from a linear functional: slot `s` at
//! position `p` of the order gets value `σ(s)·(N − p)`, and a root is
//! positive when its value is. For sl and q this reproduces
//! `{x − y | x ≺ y}`; for osp and p it gives `σx − σy` for `x ≺ y`, all
//! `σx + σy`, and the short and long roots `σx`, `2σx`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::weight::{Kind, Slot, Weight, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootParity {
    Even,
    Odd,
    /// q-type root spaces of dimension 1|1.
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    terms: Vec<(Slot, i8)>,
    pub parity: RootParity,
}

impl Root {
    pub fn new(terms: &[(Slot, i8)], parity: RootParity) -> Root {
        let mut t: Vec<(Slot, i8)> = terms.iter().copied().filter(|&(_, c)| c != 0).collect();
        t.sort();
        Root { terms: t, parity }
    }

    pub fn odd(terms: &[(Slot, i8)]) -> Root {
        Root::new(terms, RootParity::Odd)
    }

    pub fn even(terms: &[(Slot, i8)]) -> Root {
        Root::new(terms, RootParity::Even)
    }

    pub fn terms(&self) -> &[(Slot, i8)] {
        &self.terms
    }

    pub fn neg(&self) -> Root {
        Root {
            terms: self.terms.iter().map(|&(s, c)| (s, -c)).collect(),
            parity: self.parity,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.parity != RootParity::Even
    }

    fn value(&self, phi: impl Fn(Slot) -> i64) -> i64 {
        self.terms.iter().map(|&(s, c)| c as i64 * phi(s)).sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(s, c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{s}")?;
            } else {
                write!(f, "{sign}{mag}{s}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraFamily {
    /// sl(∞|m); m = 0 is the Lie algebra sl(∞).
    Sl(u32),
    SlInf,
    /// ospB(∞|2k), parameter k.
    OspB(u32),
    OspBInf,
    /// ospB(m|∞), m odd.
    OspBFin(u32),
    OspC,
    /// ospD(∞|2k), parameter k.
    OspD(u32),
    OspDInf,
    /// ospD(m|∞), m even.
    OspDFin(u32),
    P,
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OspType {
    B,
    C,
    D,
}

impl AlgebraFamily {
    pub fn is_sl(self) -> bool {
        matches!(self, AlgebraFamily::Sl(_) | AlgebraFamily::SlInf)
    }

    pub fn osp_type(self) -> Option<OspType> {
        use AlgebraFamily::*;
        match self {
            OspB(_) | OspBInf | OspBFin(_) => Some(OspType::B),
            OspC => Some(OspType::C),
            OspD(_) | OspDInf | OspDFin(_) => Some(OspType::D),
            _ => None,
        }
    }

    pub fn needs_sign(self) -> bool {
        self.osp_type().is_some() || self == AlgebraFamily::P
    }

    /// Rank of the delta side when it is fixed by the family.
    pub fn fixed_delta(self) -> Option<usize> {
        use AlgebraFamily::*;
        match self {
            OspBFin(m) => Some((m as usize - 1) / 2),
            OspDFin(m) => Some(m as usize / 2),
            OspC => Some(1),
            P | Q => Some(0),
            _ => None,
        }
    }

    /// Rank of the epsilon side when it is fixed by the family.
    pub fn fixed_eps(self) -> Option<usize> {
        use AlgebraFamily::*;
        match self {
            Sl(m) | OspB(m) | OspD(m) => Some(m as usize),
            _ => None,
        }
    }

    /// The chain truncation `n ↦ (n, x_n)`, `x_n = n − 1` on an infinite side.
    pub fn truncation(self, n: usize) -> (usize, usize) {
        match (self.fixed_delta(), self.fixed_eps()) {
            (Some(d), _) => (d, n),
            (None, Some(x)) => (n, x),
            (None, None) => (n, n.saturating_sub(1)),
        }
    }

    pub fn check_ranks(self, n_delta: usize, n_eps: usize) -> Result<()> {
        if let Some(d) = self.fixed_delta() {
            if d != n_delta {
                return Err(Error::RankMismatch(format!(
                    "{self} has delta rank {d}, got {n_delta}"
                )));
            }
        }
        if let Some(x) = self.fixed_eps() {
            if x != n_eps {
                return Err(Error::RankMismatch(format!(
                    "{self} has eps rank {x}, got {n_eps}"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AlgebraFamily::*;
        match self {
            Sl(m) => write!(f, "sl:{m}"),
            SlInf => write!(f, "sl:inf"),
            OspB(k) => write!(f, "ospB:k={k}"),
            OspBInf => write!(f, "ospB"),
            OspBFin(m) => write!(f, "ospB:m={m}"),
            OspC => write!(f, "ospC"),
            OspD(k) => write!(f, "ospD:k={k}"),
            OspDInf => write!(f, "ospD"),
            OspDFin(m) => write!(f, "ospD:m={m}"),
            P => write!(f, "p"),
            Q => write!(f, "q"),
        }
    }
}

impl FromStr for AlgebraFamily {
    type Err = Error;

    /// Accepts the forms produced by `Display`, plus `sl` for sl(∞|∞)
    /// and `ospB:inf`, `ospD:inf`.
    fn from_str(s: &str) -> Result<Self> {
        use AlgebraFamily::*;
        let bad = || Error::Parse(format!("unknown algebra family {s:?}"));
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let (head, tail) = match s.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (s, None),
        };
        let fam = match (head, tail) {
            ("sl", None) | ("sl", Some("inf")) => SlInf,
            ("sl", Some(t)) => Sl(num(t)?),
            ("ospB", None) | ("ospB", Some("inf")) => OspBInf,
            ("ospD", None) | ("ospD", Some("inf")) => OspDInf,
            ("ospC", None) => OspC,
            ("p", None) => P,
            ("q", None) => Q,
            ("ospB" | "ospD", Some(t)) => {
                let (key, val) = t.split_once('=').ok_or_else(bad)?;
                let v = num(val)?;
                match (head, key) {
                    ("ospB", "k") => OspB(v),
                    ("ospD", "k") => OspD(v),
                    ("ospB", "m") if v % 2 == 1 => OspBFin(v),
                    ("ospD", "m") if v % 2 == 0 && v >= 4 => OspDFin(v),
                    _ => return Err(bad()),
                }
            }
            _ => return Err(bad()),
        };
        Ok(fam)
    }
}

fn pair(a: Slot, ca: i8, b: Slot, cb: i8, p: RootParity) -> Root {
    Root::new(&[(a, ca), (b, cb)], p)
}

/// The root list of the truncation with `n_delta` delta and `n_eps` epsilon slots.
pub fn roots(fam: AlgebraFamily, n_delta: usize, n_eps: usize) -> Result<BTreeSet<Root>> {
    use RootParity::*;
    fam.check_ranks(n_delta, n_eps)?;
    let ds: Vec<Slot> = (1..=n_delta as u32).map(Slot::delta).collect();
    let es: Vec<Slot> = (1..=n_eps as u32).map(Slot::eps).collect();
    let mut out = BTreeSet::new();

    if fam.is_sl() || fam == AlgebraFamily::Q {
        let par = if fam == AlgebraFamily::Q { Both } else { Even };
        for side in [&ds, &es] {
            for &x in side.iter() {
                for &y in side.iter() {
                    if x != y {
                        out.insert(pair(x, 1, y, -1, par));
                    }
                }
            }
        }
        for &e in &es {
            for &d in &ds {
                out.insert(pair(e, 1, d, -1, Odd));
                out.insert(pair(e, -1, d, 1, Odd));
            }
        }
        return Ok(out);
    }

    if fam == AlgebraFamily::P {
        for &x in &es {
            for &y in &es {
                if x != y {
                    out.insert(pair(x, 1, y, -1, Even));
                }
                if x < y {
                    out.insert(pair(x, 1, y, 1, Odd));
                    out.insert(pair(x, -1, y, -1, Odd));
                }
            }
            out.insert(Root::new(&[(x, 2)], Odd));
        }
        return Ok(out);
    }

    let ty = fam.osp_type().expect("remaining families are osp");
    for side in [&ds, &es] {
        for (i, &x) in side.iter().enumerate() {
            for &y in &side[i + 1..] {
                for (cx, cy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    out.insert(pair(x, cx, y, cy, Even));
                }
            }
        }
    }
    for &e in &es {
        out.insert(Root::new(&[(e, 2)], Even));
        out.insert(Root::new(&[(e, -2)], Even));
        for &d in &ds {
            for (ce, cd) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.insert(pair(e, ce, d, cd, Odd));
            }
        }
    }
    if ty == OspType::B {
        for &d in &ds {
            out.insert(Root::new(&[(d, 1)], Even));
            out.insert(Root::new(&[(d, -1)], Even));
        }
        for &e in &es {
            out.insert(Root::new(&[(e, 1)], Odd));
            out.insert(Root::new(&[(e, -1)], Odd));
        }
    }
    Ok(out)
}

/// A linear order on the active slots, listed Borel-first, with an
/// optional sign map aligned with `slots`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorelSeq {
    pub slots: Vec<Slot>,
    pub sign: Option<Vec<i8>>,
}

impl BorelSeq {
    pub fn new(slots: Vec<Slot>) -> BorelSeq {
        BorelSeq { slots, sign: None }
    }

    pub fn with_sign(slots: Vec<Slot>, sign: Vec<i8>) -> BorelSeq {
        BorelSeq {
            slots,
            sign: Some(sign),
        }
    }

    /// `b(<) = (δ_n, …, δ_1, ε_1, …, ε_m)`.
    pub fn less(n: usize, m: usize) -> BorelSeq {
        let mut slots: Vec<Slot> = (1..=n as u32).rev().map(Slot::delta).collect();
        slots.extend((1..=m as u32).map(Slot::eps));
        BorelSeq::new(slots)
    }

    /// `b(>)`, the full reverse of `b(<)`.
    pub fn greater(n: usize, m: usize) -> BorelSeq {
        let mut b = BorelSeq::less(n, m);
        b.slots.reverse();
        b
    }

    pub fn counts(&self) -> (usize, usize) {
        let d = self.slots.iter().filter(|s| s.kind == Kind::Delta).count();
        (d, self.slots.len() - d)
    }

    /// Checks that the slots are `δ_1..δ_n` and `ε_1..ε_m`, each once.
    pub fn validate_slots(&self) -> Result<(usize, usize)> {
        let (n, m) = self.counts();
        let got: BTreeSet<Slot> = self.slots.iter().copied().collect();
        let want: BTreeSet<Slot> = BorelSeq::less(n, m).slots.into_iter().collect();
        if got != want || self.slots.len() != got.len() {
            return Err(Error::SlotMismatch(format!(
                "order {} does not list d1..d{n} and e1..e{m} once each",
                self
            )));
        }
        Ok((n, m))
    }

    pub fn sign_of(&self, s: Slot) -> i8 {
        match &self.sign {
            Some(sig) => {
                let p = self
                    .slots
                    .iter()
                    .position(|&t| t == s)
                    .expect("slot in order");
                sig[p]
            }
            None => 1,
        }
    }
}

impl fmt::Display for BorelSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.slots.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn parse_slot(t: &str) -> Result<Slot> {
    let t = t.trim();
    let bad = || Error::Parse(format!("bad slot {t:?}, expected dK or eK"));
    let (kind, rest) = match t.as_bytes().first() {
        Some(b'd') => (Kind::Delta, &t[1..]),
        Some(b'e') => (Kind::Eps, &t[1..]),
        _ => return Err(bad()),
    };
    let index: u32 = rest.parse().map_err(|_| bad())?;
    if index == 0 {
        return Err(bad());
    }
    Ok(Slot { kind, index })
}

/// Parses `"d2,d1,e1"`, or the shorthands `b<` / `b>` given the shape.
pub fn parse_order(s: &str, shape: Option<(usize, usize)>) -> Result<Vec<Slot>> {
    match (s.trim(), shape) {
        ("b<", Some((n, m))) => Ok(BorelSeq::less(n, m).slots),
        ("b>", Some((n, m))) => Ok(BorelSeq::greater(n, m).slots),
        ("b<" | "b>", None) => Err(Error::Parse("b< and b> need a shape".into())),
        ("", _) => Ok(Vec::new()),
        (t, _) => t.split(',').map(parse_slot).collect(),
    }
}

pub fn parse_signs(s: &str) -> Result<Vec<i8>> {
    s.split(',')
        .map(|t| match t.trim() {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            other => Err(Error::Parse(format!("bad sign {other:?}"))),
        })
        .collect()
}

pub fn positive_roots(fam: AlgebraFamily, b: &BorelSeq) -> Result<BTreeSet<Root>> {
    let (n, m) = b.validate_slots()?;
    match (&b.sign, fam.needs_sign()) {
        (None, true) => return Err(Error::MissingSignMap(fam.to_string())),
        (Some(_), false) => return Err(Error::UnexpectedSignMap(fam.to_string())),
        (Some(sig), true) => {
            if sig.len() != b.slots.len() || sig.iter().any(|&x| x != 1 && x != -1) {
                return Err(Error::Parse(format!(
                    "sign map must list +1/-1 for each of {} slots",
                    b.slots.len()
                )));
            }
            if fam.osp_type() == Some(OspType::D) {
                if let (Some(last), Some(&sg)) = (b.slots.last(), sig.last()) {
                    if last.kind == Kind::Delta && sg == -1 {
                        return Err(Error::IllegalSignOnMaxDeltaSlot(last.to_string()));
                    }
                }
            }
        }
        (None, false) => {}
    }
    let all = roots(fam, n, m)?;
    let len = b.slots.len() as i64 + 1;
    let phi = |s: Slot| {
        let p = b.slots.iter().position(|&t| t == s).expect("validated") as i64;
        b.sign_of(s) as i64 * (len - p)
    };
    Ok(all.into_iter().filter(|r| r.value(phi) > 0).collect())
}

/// Membership in the support of the natural module, with its parity rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaturalSupport {
    pub family: AlgebraFamily,
}

pub fn natural_support(fam: AlgebraFamily) -> NaturalSupport {
    NaturalSupport { family: fam }
}

impl NaturalSupport {
    /// The single nonzero coordinate of `w` as `(slot, value)`; `None` for
    /// the zero weight, `Err(())` for two or more nonzero coordinates.
    fn single(w: &Weight) -> std::result::Result<Option<(Slot, Q)>, ()> {
        let n = w.n();
        let mut found = None;
        for (i, x) in w.left.iter().enumerate() {
            if *x != Q::from_integer(0) {
                if found.is_some() {
                    return Err(());
                }
                found = Some((Slot::delta((n - i) as u32), *x));
            }
        }
        for (j, x) in w.right.iter().enumerate() {
            if *x != Q::from_integer(0) {
                if found.is_some() {
                    return Err(());
                }
                found = Some((Slot::eps(j as u32 + 1), *x));
            }
        }
        Ok(found)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.parity(w).is_some()
    }

    /// Parity of the weight space of `w` in the natural module, or `None`
    /// when `w` is not a weight of it. q-type weight spaces are `Both`.
    pub fn parity(&self, w: &Weight) -> Option<RootParity> {
        use AlgebraFamily::*;
        let one = crate::weight::q(1);
        let hit = match Self::single(w) {
            Err(()) => return None,
            Ok(h) => h,
        };
        let fam = self.family;
        match hit {
            None => (fam.osp_type() == Some(OspType::B)).then_some(RootParity::Even),
            Some((s, v)) => {
                let signed = v == one || v == -one;
                match (fam, s.kind) {
                    (f, Kind::Delta) if f.is_sl() => (v == one).then_some(RootParity::Even),
                    (f, Kind::Eps) if f.is_sl() => (v == one).then_some(RootParity::Odd),
                    (Q, Kind::Eps) => (v == one).then_some(RootParity::Both),
                    (P, Kind::Eps) if v == one => Some(RootParity::Even),
                    (P, Kind::Eps) if v == -one => Some(RootParity::Odd),
                    (OspC, Kind::Delta) => (signed && s.index == 1).then_some(RootParity::Even),
                    (f, Kind::Delta) if f.osp_type().is_some() => {
                        signed.then_some(RootParity::Even)
                    }
                    (f, Kind::Eps) if f.osp_type().is_some() => signed.then_some(RootParity::Odd),
                    _ => None,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(set: &BTreeSet<Root>) -> BTreeSet<String> {
        set.iter().map(|r| r.to_string()).collect()
    }

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn q_roots_carry_both_parities() {
        let r = roots(AlgebraFamily::Q, 0, 3).unwrap();
        assert_eq!(r.len(), 6);
        assert!(r.iter().all(|x| x.parity == RootParity::Both));
        assert!(roots(AlgebraFamily::Q, 0, 0).unwrap().is_empty());
    }

    #[test]
    fn ospb_small() {
        let r = roots(AlgebraFamily::OspBInf, 1, 1).unwrap();
        assert_eq!(r.len(), 10);
        assert_eq!(r.iter().filter(|x| x.is_odd()).count(), 6);
        assert_eq!(
            names(&r),
            set(&["2e1", "-2e1", "d1", "-d1", "d1+e1", "d1-e1", "-d1+e1", "-d1-e1", "e1", "-e1"])
        );
    }

    #[test]
    fn p_roots_are_asymmetric() {
        let r = roots(AlgebraFamily::P, 0, 2).unwrap();
        assert_eq!(
            names(&r),
            set(&["e1-e2", "-e1+e2", "-e1-e2", "e1+e2", "2e1", "2e2"])
        );
        assert!(!r.iter().any(|x| x.to_string() == "-2e1"));
    }

    #[test]
    fn rank_mismatch() {
        assert!(matches!(
            roots(AlgebraFamily::Sl(2), 3, 1),
            Err(Error::RankMismatch(_))
        ));
        assert!(matches!(
            roots(AlgebraFamily::OspC, 2, 1),
            Err(Error::RankMismatch(_))
        ));
        assert!(roots(AlgebraFamily::OspBFin(3), 1, 4).is_ok());
    }

    #[test]
    fn positive_examples() {
        let b = BorelSeq::new(parse_order("d2,d1,e1", None).unwrap());
        let p = positive_roots(AlgebraFamily::Sl(1), &b).unwrap();
        assert_eq!(names(&p), set(&["-d1+d2", "d2-e1", "d1-e1"]));

        let b = BorelSeq::with_sign(parse_order("e1,e2", None).unwrap(), vec![1, 1]);
        let p = positive_roots(AlgebraFamily::P, &b).unwrap();
        assert_eq!(names(&p), set(&["e1-e2", "e1+e2", "2e1", "2e2"]));

        let b = BorelSeq::with_sign(parse_order("d1,e1", None).unwrap(), vec![1, 1]);
        let p = positive_roots(AlgebraFamily::OspBInf, &b).unwrap();
        assert_eq!(names(&p), set(&["d1", "e1", "2e1", "d1+e1", "d1-e1"]));
    }

    #[test]
    fn sign_rules() {
        let b = BorelSeq::new(parse_order("d1,e1", None).unwrap());
        assert!(matches!(
            positive_roots(AlgebraFamily::OspBInf, &b),
            Err(Error::MissingSignMap(_))
        ));
        let b = BorelSeq::with_sign(parse_order("e1,d1", None).unwrap(), vec![1, -1]);
        assert!(matches!(
            positive_roots(AlgebraFamily::OspDInf, &b),
            Err(Error::IllegalSignOnMaxDeltaSlot(_))
        ));
        assert!(positive_roots(AlgebraFamily::OspBInf, &b).is_ok());
        let b = BorelSeq::with_sign(parse_order("e1,d1", None).unwrap(), vec![-1, -1]);
        assert!(positive_roots(AlgebraFamily::OspC, &b).is_ok());
        let b = BorelSeq::with_sign(parse_order("d1", None).unwrap(), vec![1]);
        assert!(matches!(
            positive_roots(AlgebraFamily::Sl(0), &b),
            Err(Error::UnexpectedSignMap(_))
        ));
        let b = BorelSeq::new(parse_order("d1,d1", None).unwrap());
        assert!(matches!(
            positive_roots(AlgebraFamily::Sl(0), &b),
            Err(Error::SlotMismatch(_))
        ));
    }

    #[test]
    fn natural_supports() {
        let w = Weight::from_ints;
        let c = natural_support(AlgebraFamily::OspC);
        assert!(c.contains(&w(&[1], &[0, 0])));
        assert!(!c.contains(&w(&[2], &[0, 0])));
        assert!(natural_support(AlgebraFamily::OspBInf).contains(&w(&[0, 0], &[0])));
        assert!(!natural_support(AlgebraFamily::OspDInf).contains(&w(&[0, 0], &[0])));
        let qs = natural_support(AlgebraFamily::Q);
        assert!(!qs.contains(&w(&[], &[-1, 0])));
        assert_eq!(qs.parity(&w(&[], &[1, 0])), Some(RootParity::Both));
        let p = natural_support(AlgebraFamily::P);
        assert_eq!(p.parity(&w(&[], &[0, -1])), Some(RootParity::Odd));
        let sl = natural_support(AlgebraFamily::Sl(1));
        assert_eq!(sl.parity(&w(&[0, 1], &[0])), Some(RootParity::Even));
        assert_eq!(sl.parity(&w(&[0, 0], &[1])), Some(RootParity::Odd));
        assert!(!sl.contains(&w(&[0, -1], &[0])));
    }

    #[test]
    fn family_names_round_trip() {
        use AlgebraFamily::*;
        for f in [
            Sl(0),
            Sl(3),
            SlInf,
            OspB(2),
            OspBInf,
            OspBFin(5),
            OspC,
            OspD(1),
            OspDInf,
            OspDFin(6),
            P,
            Q,
        ] {
            assert_eq!(f.to_string().parse::<AlgebraFamily>().unwrap(), f);
        }
        assert!("ospD:m=2".parse::<AlgebraFamily>().is_err());
    }
}
