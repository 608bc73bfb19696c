//! Finite encodings of infinite index sets and sequences.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Residue classes mod 2 that a base set contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    None,
    Evens,
    Odds,
    All,
}

impl Base {
    fn mask(self) -> u8 {
        match self {
            Base::None => 0,
            Base::Evens => 1,
            Base::Odds => 2,
            Base::All => 3,
        }
    }

    fn from_mask(m: u8) -> Base {
        match m & 3 {
            0 => Base::None,
            1 => Base::Evens,
            2 => Base::Odds,
            _ => Base::All,
        }
    }

    pub fn contains(self, i: u64) -> bool {
        self.mask() & (1 << (i % 2)) != 0
    }

    fn name(self) -> &'static str {
        match self {
            Base::None => "none",
            Base::Evens => "evens",
            Base::Odds => "odds",
            Base::All => "all",
        }
    }
}

/// A subset of the positive integers: a base set with finitely many
/// memberships flipped. Kept normalised, so equality is set equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    base: Base,
    flips: BTreeSet<u64>,
}

impl IndexSet {
    pub fn new(base: Base, xor: impl IntoIterator<Item = u64>) -> Result<IndexSet> {
        let mut flips = BTreeSet::new();
        for i in xor {
            if i == 0 {
                return Err(Error::Parse(
                    "index sets live in the positive integers".into(),
                ));
            }
            if !flips.insert(i) {
                flips.remove(&i);
            }
        }
        Ok(IndexSet { base, flips })
    }

    pub fn finite(items: impl IntoIterator<Item = u64>) -> Result<IndexSet> {
        let items: BTreeSet<u64> = items.into_iter().collect();
        IndexSet::new(Base::None, items)
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn flips(&self) -> &BTreeSet<u64> {
        &self.flips
    }

    pub fn contains(&self, i: u64) -> bool {
        i >= 1 && (self.base.contains(i) != self.flips.contains(&i))
    }

    pub fn complement(&self) -> IndexSet {
        IndexSet {
            base: Base::from_mask(!self.base.mask()),
            flips: self.flips.clone(),
        }
    }

    /// Largest index where membership can differ from the base pattern.
    pub fn horizon(&self) -> u64 {
        self.flips.iter().next_back().copied().unwrap_or(0)
    }

    fn combine(&self, other: &IndexSet, op: impl Fn(bool, bool) -> bool) -> IndexSet {
        let mut mask = 0u8;
        for r in 0..2u8 {
            if op(
                self.base.mask() & (1 << r) != 0,
                other.base.mask() & (1 << r) != 0,
            ) {
                mask |= 1 << r;
            }
        }
        let base = Base::from_mask(mask);
        let flips = (1..=self.horizon().max(other.horizon()))
            .filter(|&i| op(self.contains(i), other.contains(i)) != base.contains(i))
            .collect();
        IndexSet { base, flips }
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn is_empty(&self) -> bool {
        *self
            == IndexSet {
                base: Base::None,
                flips: BTreeSet::new(),
            }
    }

    pub fn is_finite(&self) -> bool {
        self.base == Base::None
    }

    /// `(|self ∖ other|, |other ∖ self|)` when both are finite.
    pub fn finite_difference(&self, other: &IndexSet) -> Option<(usize, usize)> {
        if self.base != other.base {
            return None;
        }
        let h = self.horizon().max(other.horizon());
        let ab = (1..=h)
            .filter(|&i| self.contains(i) && !other.contains(i))
            .count();
        let ba = (1..=h)
            .filter(|&i| other.contains(i) && !self.contains(i))
            .count();
        Some((ab, ba))
    }

    /// Net count of flips that add elements minus flips that remove them.
    pub fn charge(&self) -> i64 {
        self.flips
            .iter()
            .map(|&i| if self.base.contains(i) { -1 } else { 1 })
            .sum()
    }

    pub fn disjoint(&self, other: &IndexSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// Parses `base:evens;xor:2,3`, or a bare base name.
    pub fn parse(s: &str) -> Result<IndexSet> {
        let mut base = None;
        let mut xor = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once(':').unwrap_or(("base", part));
            match k.trim() {
                "base" => base = Some(parse_base(v.trim())?),
                "xor" => xor = parse_list(v)?,
                other => return Err(Error::Parse(format!("unknown set key {other:?}"))),
            }
        }
        let base = base.ok_or_else(|| Error::Parse(format!("set {s:?} needs a base")))?;
        IndexSet::new(base, xor)
    }
}

fn parse_base(s: &str) -> Result<Base> {
    match s {
        "none" | "empty" => Ok(Base::None),
        "evens" => Ok(Base::Evens),
        "odds" => Ok(Base::Odds),
        "all" => Ok(Base::All),
        _ => Err(Error::Parse(format!("unknown base set {s:?}"))),
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<u64>> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad natural {x:?}")))
        })
        .collect()
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "base:{}", self.base.name())?;
        if !self.flips.is_empty() {
            let xs: Vec<String> = self.flips.iter().map(|x| x.to_string()).collect();
            write!(f, ";xor:{}", xs.join(","))?;
        }
        Ok(())
    }
}

/// A sequence `((a_n, b_n))_{n ≥ 1}`: explicit prefixes, then
/// `a_n = slope·n + offset` and `b_n = b_tail`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqSpec {
    pub prefix: Vec<i64>,
    pub slope: i64,
    pub offset: i64,
    pub b_prefix: Vec<u8>,
    pub b_tail: u8,
}

impl SeqSpec {
    pub fn affine(slope: i64, offset: i64, b: u8) -> SeqSpec {
        SeqSpec {
            prefix: Vec::new(),
            slope,
            offset,
            b_prefix: Vec::new(),
            b_tail: b,
        }
    }

    pub fn a(&self, n: usize) -> i64 {
        match self.prefix.get(n.wrapping_sub(1)) {
            Some(&v) if n >= 1 => v,
            _ => self.slope * n as i64 + self.offset,
        }
    }

    pub fn b(&self, n: usize) -> u8 {
        match self.b_prefix.get(n.wrapping_sub(1)) {
            Some(&v) if n >= 1 => v,
            _ => self.b_tail,
        }
    }

    /// First index from which both `a` and `b` follow the tail.
    pub fn tail_start(&self) -> usize {
        self.prefix.len().max(self.b_prefix.len()) + 1
    }

    /// Checks the conditions for `S^∞_𝒜`: `a_n ≥ 0` weakly increasing,
    /// unbounded, `b_n ∈ {0,1}` and `b_n = b_{n+1}` whenever `a_n = a_{n+1}`.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidFamily(m));
        if self.slope < 1 {
            return bad(format!("tail slope {} must be at least 1", self.slope));
        }
        let end = self.tail_start() + 1;
        for n in 1..=end {
            if self.a(n) < 0 {
                return bad(format!("a_{n} = {} is negative", self.a(n)));
            }
            if self.b(n) > 1 {
                return bad(format!("b_{n} = {} is not 0 or 1", self.b(n)));
            }
            if self.a(n + 1) < self.a(n) {
                return bad(format!("a_{} < a_{n}", n + 1));
            }
            if self.a(n + 1) == self.a(n) && self.b(n + 1) != self.b(n) {
                return bad(format!("b changes while a_{n} = a_{}", n + 1));
            }
        }
        Ok(())
    }

    /// The set `{a_n} ∩ Z_{>0}` when the tail has slope 1.
    pub fn value_set(&self) -> Option<IndexSet> {
        if self.slope != 1 {
            return None;
        }
        let start = self.tail_start();
        let tail_from = self.a(start).max(1) as u64;
        let members: BTreeSet<u64> = (1..start)
            .map(|n| self.a(n))
            .filter(|&v| v >= 1)
            .map(|v| v as u64)
            .collect();
        let missing: Vec<u64> = (1..tail_from).filter(|i| !members.contains(i)).collect();
        IndexSet::new(Base::All, missing).ok()
    }

    /// Parses `a:1,2,2;tail:n-1;b:0` (`prefix:` is a synonym of `a:`,
    /// `bprefix:` lists leading b-values).
    pub fn parse(s: &str) -> Result<SeqSpec> {
        let mut spec = SeqSpec::affine(1, 0, 0);
        let mut have_tail = false;
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("sequence part {part:?} needs key:value")))?;
            match k.trim() {
                "a" | "prefix" => {
                    spec.prefix = parse_list(v)?.into_iter().map(|x| x as i64).collect();
                }
                "tail" => {
                    let (sl, off) = parse_affine(v)?;
                    spec.slope = sl;
                    spec.offset = off;
                    have_tail = true;
                }
                "b" => spec.b_tail = parse_bit(v)?,
                "bprefix" => {
                    spec.b_prefix = parse_list(v)?.into_iter().map(|x| x as u8).collect();
                }
                other => return Err(Error::Parse(format!("unknown sequence key {other:?}"))),
            }
        }
        if !have_tail {
            return Err(Error::Parse(format!("sequence {s:?} needs a tail")));
        }
        Ok(spec)
    }
}

fn parse_bit(s: &str) -> Result<u8> {
    match s.trim() {
        "0" => Ok(0),
        "1" => Ok(1),
        other => Err(Error::Parse(format!("b must be 0 or 1, got {other:?}"))),
    }
}

/// Parses `α·n + β` written like `n-1`, `2n`, `2n+3`, `n`, `-n+4`, `5`.
pub fn parse_affine(s: &str) -> Result<(i64, i64)> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("bad affine expression {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in t.char_indices() {
        if (c == '+' || c == '-') && i > 0 {
            terms.push(&t[start..i]);
            start = i;
        }
    }
    terms.push(&t[start..]);
    let (mut slope, mut offset) = (0i64, 0i64);
    for term in terms {
        let (sign, body) = match term.as_bytes()[0] {
            b'+' => (1, &term[1..]),
            b'-' => (-1, &term[1..]),
            _ => (1, term),
        };
        if let Some(coef) = body.strip_suffix('n') {
            let c = if coef.is_empty() {
                1
            } else {
                coef.strip_suffix('*')
                    .unwrap_or(coef)
                    .parse::<i64>()
                    .map_err(|_| bad())?
            };
            slope += sign * c;
        } else {
            offset += sign * body.parse::<i64>().map_err(|_| bad())?;
        }
    }
    Ok((slope, offset))
}

impl fmt::Display for SeqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: Vec<String>| xs.join(",");
        if !self.prefix.is_empty() {
            write!(
                f,
                "a:{};",
                join(self.prefix.iter().map(|x| x.to_string()).collect())
            )?;
        }
        let tail = match (self.slope, self.offset) {
            (1, 0) => "n".to_string(),
            (1, o) => format!("n{o:+}"),
            (s, 0) => format!("{s}n"),
            (s, o) => format!("{s}n{o:+}"),
        };
        write!(f, "tail:{tail}")?;
        if !self.b_prefix.is_empty() {
            write!(
                f,
                ";bprefix:{}",
                join(self.b_prefix.iter().map(|x| x.to_string()).collect())
            )?;
        }
        write!(f, ";b:{}", self.b_tail)
    }
}
