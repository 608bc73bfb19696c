//! The classified integrable bounded simple weight modules, as symbolic
//! families with finite-rank highest weights.

mod order;
mod sets;
mod support;

use std::fmt;
use std::str::FromStr;

pub use order::{hw_borel_condition, Bucket, OrderRule};
pub use sets::{parse_affine, Base, IndexSet, SeqSpec};
pub use support::{support_contains, SeqWeight, SupportSet};

use crate::error::{Error, Result};
use crate::oddref::transport;
use crate::roots::{AlgebraFamily, BorelSeq};
use crate::weight::{Parity, Weight, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    SmuV,
    SmuVdual,
    SinfV,
    SinfVdual,
    LinfV,
    LinfVdual,
    LhalfV,
    SpinorB,
    SpinorD,
    Natural,
    Trivial,
    Qpart,
    QpartDual,
    GenericSl1,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 14] = [
        FamilyKind::SmuV,
        FamilyKind::SmuVdual,
        FamilyKind::SinfV,
        FamilyKind::SinfVdual,
        FamilyKind::LinfV,
        FamilyKind::LinfVdual,
        FamilyKind::LhalfV,
        FamilyKind::SpinorB,
        FamilyKind::SpinorD,
        FamilyKind::Natural,
        FamilyKind::Trivial,
        FamilyKind::Qpart,
        FamilyKind::QpartDual,
        FamilyKind::GenericSl1,
    ];

    pub fn name(self) -> &'static str {
        use FamilyKind::*;
        match self {
            SmuV => "SmuV",
            SmuVdual => "SmuVdual",
            SinfV => "SinfV",
            SinfVdual => "SinfVdual",
            LinfV => "LinfV",
            LinfVdual => "LinfVdual",
            LhalfV => "LhalfV",
            SpinorB => "SpinorB",
            SpinorD => "SpinorD",
            Natural => "Natural",
            Trivial => "Trivial",
            Qpart => "Qpart",
            QpartDual => "QpartDual",
            GenericSl1 => "GenSl1",
        }
    }

    /// The algebra a bare family string is read over.
    pub fn default_algebra(self) -> AlgebraFamily {
        use FamilyKind::*;
        match self {
            LhalfV => AlgebraFamily::Sl(0),
            SpinorB => AlgebraFamily::OspB(0),
            SpinorD => AlgebraFamily::OspD(0),
            Qpart | QpartDual => AlgebraFamily::Q,
            _ => AlgebraFamily::Sl(1),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "Spinor_B" => "SpinorB",
            "Spinor_D" => "SpinorD",
            "GenericSl1" => "GenSl1",
            other => other,
        };
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == alias)
            .ok_or_else(|| Error::Parse(format!("unknown family kind {s:?}")))
    }
}

/// Which Borel a reported highest weight is taken with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HwBorel {
    /// `b(<_n)`.
    Less,
    /// `b(>_n)`.
    Greater,
    /// `b(<_n, τ)` with the constant sign map.
    LessTau,
    /// The order putting `A` before its complement.
    AFirst,
}

impl fmt::Display for HwBorel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HwBorel::Less => "b<",
            HwBorel::Greater => "b>",
            HwBorel::LessTau => "b<,tau",
            HwBorel::AFirst => "A-first",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Params {
    None,
    Partition(Vec<u64>),
    Seq(SeqSpec),
    Set(IndexSet),
    Generic { a: Q, borel: HwBorel },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Params,
    pub twist: Parity,
    pub algebra: AlgebraFamily,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn is_finite_m(alg: AlgebraFamily) -> bool {
    matches!(alg, AlgebraFamily::Sl(_))
}

impl FamilySpec {
    pub fn new(
        kind: FamilyKind,
        params: Params,
        twist: Parity,
        algebra: AlgebraFamily,
    ) -> Result<FamilySpec> {
        let f = FamilySpec {
            kind,
            params,
            twist,
            algebra,
        };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        use FamilyKind::*;
        let alg = self.algebra;
        let ok_alg = match self.kind {
            SmuV | SmuVdual | SinfV | SinfVdual => alg.is_sl(),
            LinfV | LinfVdual => alg.is_sl() && alg != AlgebraFamily::Sl(0),
            LhalfV => alg == AlgebraFamily::Sl(0),
            SpinorB => alg == AlgebraFamily::OspB(0),
            SpinorD => alg == AlgebraFamily::OspD(0),
            Natural | Trivial => true,
            Qpart | QpartDual => alg == AlgebraFamily::Q,
            GenericSl1 => alg == AlgebraFamily::Sl(1),
        };
        if !ok_alg {
            return Err(Error::AlgebraMismatch(format!(
                "{} is not a family over {alg}",
                self.kind.name()
            )));
        }
        match (self.kind, &self.params) {
            (Natural | Trivial, Params::None) => Ok(()),
            (SmuV | SmuVdual, Params::Partition(mu)) => {
                if mu.contains(&0) || mu.windows(2).any(|w| w[0] < w[1]) {
                    return Err(Error::BadPartition(format!(
                        "{mu:?} is not weakly decreasing and positive"
                    )));
                }
                Ok(())
            }
            (Qpart | QpartDual, Params::Partition(g)) => {
                if g.contains(&0) || g.windows(2).any(|w| w[0] <= w[1]) {
                    return Err(Error::BadPartition(format!(
                        "{g:?} is not strictly decreasing and positive"
                    )));
                }
                Ok(())
            }
            (SinfV | SinfVdual, Params::Seq(s)) => s.validate(),
            (LinfV | LinfVdual, Params::Seq(s)) => {
                s.validate()?;
                if is_finite_m(alg) && s.slope != 1 {
                    return Err(invalid(format!(
                        "over {alg} the tail must have a_(n+1) - a_n in {{0,1}}"
                    )));
                }
                Ok(())
            }
            (LhalfV, Params::Set(a)) => {
                if matches!(a.base(), Base::None | Base::All) {
                    return Err(invalid(format!(
                        "{a} must be infinite with infinite complement"
                    )));
                }
                Ok(())
            }
            (SpinorB | SpinorD, Params::Set(_)) => Ok(()),
            (GenericSl1, Params::Generic { a, borel }) => {
                if a.is_integer() {
                    return Err(invalid(format!(
                        "GenSl1 needs a non-integral parameter, got {a}"
                    )));
                }
                if !matches!(borel, HwBorel::Less | HwBorel::Greater) {
                    return Err(invalid("GenSl1 borel must be < or >"));
                }
                Ok(())
            }
            (k, p) => Err(invalid(format!(
                "{} does not take parameters {p:?}",
                k.name()
            ))),
        }
    }

    pub fn partition(kind: FamilyKind, mu: &[u64], algebra: AlgebraFamily) -> Result<FamilySpec> {
        FamilySpec::new(kind, Params::Partition(mu.to_vec()), Parity::Even, algebra)
    }

    pub fn trivial(algebra: AlgebraFamily) -> FamilySpec {
        FamilySpec {
            kind: FamilyKind::Trivial,
            params: Params::None,
            twist: Parity::Even,
            algebra,
        }
    }

    pub fn twisted(&self) -> FamilySpec {
        FamilySpec {
            twist: self.twist.flip(),
            ..self.clone()
        }
    }

    /// Parses `SmuV[3,1]`, `SinfV[a:1,2,2;tail:n-1;b:0]`, `LhalfV[base:evens]`,
    /// `GenSl1[1/2;borel:<]`, `Trivial`, each with an optional `!Pi`.
    pub fn parse(s: &str, algebra: Option<AlgebraFamily>) -> Result<FamilySpec> {
        let t = s.trim();
        let (t, twist) = match t.strip_suffix("!Pi") {
            Some(rest) => (rest, Parity::Odd),
            None => (t, Parity::Even),
        };
        let (head, body) = match t.split_once('[') {
            Some((h, rest)) => {
                let b = rest
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("unclosed bracket in {s:?}")))?;
                (h.trim(), Some(b.trim()))
            }
            None => (t, None),
        };
        let kind: FamilyKind = head.parse()?;
        let algebra = algebra.unwrap_or_else(|| kind.default_algebra());
        let body_or = || body.ok_or_else(|| Error::Parse(format!("{head} needs [parameters]")));
        use FamilyKind::*;
        let params = match kind {
            Natural | Trivial => match body {
                None | Some("") => Params::None,
                Some(b) => {
                    return Err(Error::Parse(format!(
                        "{head} takes no parameters, got {b:?}"
                    )))
                }
            },
            SmuV | SmuVdual | Qpart | QpartDual => {
                Params::Partition(crate::parse::parse_nats(body.unwrap_or(""))?)
            }
            SinfV | SinfVdual | LinfV | LinfVdual => Params::Seq(SeqSpec::parse(body_or()?)?),
            LhalfV | SpinorB | SpinorD => Params::Set(IndexSet::parse(body_or()?)?),
            GenericSl1 => {
                let b = body_or()?;
                let (a, rest) = b.split_once(';').unwrap_or((b, "borel:<"));
                let borel = match rest.trim() {
                    "borel:<" => HwBorel::Less,
                    "borel:>" => HwBorel::Greater,
                    other => return Err(Error::Parse(format!("bad GenSl1 borel {other:?}"))),
                };
                Params::Generic {
                    a: crate::parse::parse_rational(a)?,
                    borel,
                }
            }
        };
        FamilySpec::new(kind, params, twist, algebra)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        match &self.params {
            Params::None => {}
            Params::Partition(mu) => {
                let xs: Vec<String> = mu.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", xs.join(","))?;
            }
            Params::Seq(s) => write!(f, "[{s}]")?,
            Params::Set(a) => write!(f, "[{a}]")?,
            Params::Generic { a, borel } => {
                let b = if *borel == HwBorel::Greater { ">" } else { "<" };
                write!(f, "[{a};borel:{b}]")?;
            }
        }
        if self.twist.is_odd() {
            f.write_str("!Pi")?;
        }
        Ok(())
    }
}

/// A highest weight at a finite truncation, with its Borel and the parity
/// of the highest weight vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyHw {
    pub weight: Weight,
    pub borel: HwBorel,
    pub parity: Parity,
}

fn ints(xs: impl IntoIterator<Item = i64>) -> Vec<Q> {
    xs.into_iter().map(Q::from_integer).collect()
}

fn zeros(k: usize) -> Vec<Q> {
    vec![Q::from_integer(0); k]
}

/// Left coordinates `(v(δ_n), …, v(δ_1))` from a function of the index.
fn by_delta(n: usize, v: impl Fn(u64) -> Q) -> Vec<Q> {
    (1..=n as u64).rev().map(v).collect()
}

/// Over sl the parity is that of the highest weight vector itself: the
/// twist, plus `b_n`, plus one for every odd tensor factor, which is the
/// sum of the ε-coordinates mod 2.
pub fn family_highest_weight(f: &FamilySpec, n: usize) -> Result<FamilyHw> {
    let mut hw = presented_weight(f, n)?;
    if f.algebra.is_sl() && f.kind != FamilyKind::GenericSl1 {
        hw.parity = hw.parity + Parity::of(hw.weight.right_sum().to_integer());
    }
    Ok(hw)
}

fn presented_weight(f: &FamilySpec, n: usize) -> Result<FamilyHw> {
    use FamilyKind::*;
    if n == 0 {
        return Err(Error::RankTooSmall { n, need: 1 });
    }
    let (nd, x) = f.algebra.truncation(n);
    let need = |k: usize| {
        if k > nd {
            Err(Error::RankTooSmall { n, need: k })
        } else {
            Ok(())
        }
    };
    let hw = |weight, borel| FamilyHw {
        weight,
        borel,
        parity: f.twist,
    };
    Ok(match (f.kind, &f.params) {
        (Trivial, _) => hw(Weight::zero(nd, x), HwBorel::Less),
        (Natural, _) => {
            let borel = if f.algebra.is_sl() || f.algebra == AlgebraFamily::Q {
                HwBorel::Less
            } else {
                HwBorel::LessTau
            };
            let mut w = Weight::zero(nd, x);
            if nd > 0 {
                w.left[0] = Q::from_integer(1);
            } else if x > 0 {
                w.right[0] = Q::from_integer(1);
            } else {
                return Err(Error::RankTooSmall { n, need: n + 1 });
            }
            hw(w, borel)
        }
        (SmuV | SmuVdual, Params::Partition(mu)) => {
            need(mu.len())?;
            let s: i64 = if f.kind == SmuV { 1 } else { -1 };
            let left = ints(
                mu.iter()
                    .map(|&v| s * v as i64)
                    .chain(std::iter::repeat_n(0, nd - mu.len())),
            );
            let borel = if f.kind == SmuV {
                HwBorel::Less
            } else {
                HwBorel::Greater
            };
            hw(Weight::new(left, zeros(x)), borel)
        }
        (Qpart | QpartDual, Params::Partition(g)) => {
            if g.len() > x {
                return Err(Error::RankTooSmall { n, need: g.len() });
            }
            let s: i64 = if f.kind == Qpart { 1 } else { -1 };
            let right = ints(
                g.iter()
                    .map(|&v| s * v as i64)
                    .chain(std::iter::repeat_n(0, x - g.len())),
            );
            let borel = if f.kind == Qpart {
                HwBorel::Less
            } else {
                HwBorel::Greater
            };
            hw(Weight::new(Vec::new(), right), borel)
        }
        (SinfV | SinfVdual, Params::Seq(s)) => {
            let s_sign = if f.kind == SinfV { 1 } else { -1 };
            let mut left = zeros(nd);
            left[0] = Q::from_integer(s_sign * s.a(n));
            let borel = if f.kind == SinfV {
                HwBorel::Less
            } else {
                HwBorel::Greater
            };
            FamilyHw {
                weight: Weight::new(left, zeros(x)),
                borel,
                parity: f.twist + Parity::of(s.b(n) as i64),
            }
        }
        (LinfV | LinfVdual, Params::Seq(s)) => {
            if x == 0 {
                return Err(Error::RankTooSmall { n, need: n + 1 });
            }
            let s_sign = if f.kind == LinfV { 1 } else { -1 };
            let mut right = zeros(x);
            right[x - 1] = Q::from_integer(s_sign * s.a(n));
            let borel = if f.kind == LinfV {
                HwBorel::Greater
            } else {
                HwBorel::Less
            };
            FamilyHw {
                weight: Weight::new(zeros(nd), right),
                borel,
                parity: f.twist + Parity::of(s.b(n) as i64),
            }
        }
        (LhalfV, Params::Set(a)) => {
            let left = by_delta(nd, |i| Q::from_integer(a.contains(i) as i64));
            hw(Weight::new(left, Vec::new()), HwBorel::AFirst)
        }
        (SpinorB | SpinorD, Params::Set(a)) => {
            let left = by_delta(nd, |i| {
                if a.contains(i) {
                    Q::new(1, 2)
                } else {
                    Q::new(-1, 2)
                }
            });
            hw(Weight::new(left, zeros(x)), HwBorel::LessTau)
        }
        (GenericSl1, Params::Generic { a, borel }) => hw(Weight::new(zeros(nd), vec![*a]), *borel),
        _ => return Err(invalid(format!("{f} has malformed parameters"))),
    })
}

/// The highest weight at `n` with respect to `b(<_n)`, transporting along
/// odd reflections when the family is presented at `b(>_n)`. Only sl
/// families have one.
pub fn less_highest_weight(f: &FamilySpec, n: usize) -> Result<FamilyHw> {
    let hw = family_highest_weight(f, n)?;
    match hw.borel {
        HwBorel::Less => Ok(hw),
        HwBorel::Greater if f.algebra.is_sl() => {
            let (nd, x) = hw.weight.shape();
            let (w, p) = transport(
                &hw.weight,
                &BorelSeq::greater(nd, x),
                &BorelSeq::less(nd, x),
            )?;
            Ok(FamilyHw {
                weight: w,
                borel: HwBorel::Less,
                parity: hw.parity + p,
            })
        }
        _ => Err(invalid(format!(
            "{f} has no b(<) presentation over {}",
            f.algebra
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Key {
    Trivial,
    Natural,
    Smu(bool, Vec<u64>),
    Q(bool, Vec<u64>),
    Seq(FamilyKind, i64, i64),
    Lhalf(Base, i64),
    Spinor(FamilyKind, Base, usize),
    Generic(Q, HwBorel),
}

/// Normal form for isomorphism: `(algebra, class, effective twist)`.
fn canonical(f: &FamilySpec) -> (AlgebraFamily, Key, Parity) {
    use FamilyKind::*;
    let mut twist = f.twist;
    let key = match (f.kind, &f.params) {
        (Trivial, _) => Key::Trivial,
        (Natural, _) if f.algebra.is_sl() => Key::Smu(false, vec![1]),
        (Natural, _) if f.algebra == AlgebraFamily::Q => Key::Q(false, vec![1]),
        (Natural, _) => Key::Natural,
        (SmuV | SmuVdual, Params::Partition(mu)) if mu.is_empty() => Key::Trivial,
        (SmuV | SmuVdual, Params::Partition(mu)) => Key::Smu(f.kind == SmuVdual, mu.clone()),
        (Qpart | QpartDual, Params::Partition(g)) if g.is_empty() => Key::Trivial,
        (Qpart | QpartDual, Params::Partition(g)) => Key::Q(f.kind == QpartDual, g.clone()),
        (SinfV | SinfVdual | LinfV | LinfVdual, Params::Seq(s)) => {
            twist = twist + Parity::of(s.b_tail as i64);
            Key::Seq(f.kind, s.slope, s.offset)
        }
        (LhalfV, Params::Set(a)) => Key::Lhalf(a.base(), a.charge()),
        (SpinorB, Params::Set(a)) => Key::Spinor(SpinorB, a.base(), 0),
        (SpinorD, Params::Set(a)) => Key::Spinor(SpinorD, a.base(), a.flips().len() % 2),
        (GenericSl1, Params::Generic { a, borel }) => Key::Generic(*a, *borel),
        _ => unreachable!("validated on construction"),
    };
    if let Key::Q(_, g) = &key {
        if g.len() % 2 == 1 {
            twist = Parity::Even;
        }
    }
    (f.algebra, key, twist)
}

pub fn isomorphic(f: &FamilySpec, g: &FamilySpec) -> bool {
    canonical(f) == canonical(g)
}

pub fn dual_family(f: &FamilySpec) -> FamilySpec {
    use FamilyKind::*;
    let (kind, params) = match (f.kind, &f.params) {
        (SmuV, p) => (SmuVdual, p.clone()),
        (SmuVdual, p) => (SmuV, p.clone()),
        (SinfV, p) => (SinfVdual, p.clone()),
        (SinfVdual, p) => (SinfV, p.clone()),
        (LinfV, p) => (LinfVdual, p.clone()),
        (LinfVdual, p) => (LinfV, p.clone()),
        (Qpart, p) => (QpartDual, p.clone()),
        (QpartDual, p) => (Qpart, p.clone()),
        (LhalfV, Params::Set(a)) => (LhalfV, Params::Set(a.complement())),
        (GenericSl1, Params::Generic { a, borel }) => {
            let b = if *borel == HwBorel::Less {
                HwBorel::Greater
            } else {
                HwBorel::Less
            };
            (GenericSl1, Params::Generic { a: -a, borel: b })
        }
        (k, p) => (k, p.clone()),
    };
    FamilySpec {
        kind,
        params,
        twist: f.twist,
        algebra: f.algebra,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
    pub twist: Parity,
    pub parameters: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub algebra: AlgebraFamily,
    pub families: Vec<FamilyDescriptor>,
    pub notes: Vec<&'static str>,
}

pub fn classify_bounded(alg: AlgebraFamily) -> Classification {
    use FamilyKind::*;
    let d = |kind, twist, parameters| FamilyDescriptor {
        kind,
        twist,
        parameters,
    };
    let (e, o) = (Parity::Even, Parity::Odd);
    let mut notes = Vec::new();
    let families = match alg {
        AlgebraFamily::Sl(0) => vec![
            d(
                LhalfV,
                e,
                "A infinite with infinite complement, up to finite balanced changes",
            ),
            d(SinfV, e, "sequence a_n weakly increasing, unbounded"),
            d(SinfVdual, e, "sequence a_n weakly increasing, unbounded"),
            d(SmuV, e, "partition mu"),
            d(SmuVdual, e, "partition mu"),
        ],
        a if a.is_sl() => {
            let mut v = vec![
                d(SmuV, e, "partition mu"),
                d(SmuV, o, "partition mu"),
                d(SmuVdual, e, "partition mu"),
                d(SmuVdual, o, "partition mu"),
                d(SinfV, e, "sequence (a_n, b_n), twist carried by b"),
                d(SinfVdual, e, "sequence (a_n, b_n), twist carried by b"),
                d(LinfV, e, "sequence (a_n, b_n), twist carried by b"),
                d(LinfVdual, e, "sequence (a_n, b_n), twist carried by b"),
            ];
            if let AlgebraFamily::Sl(_) = a {
                notes.push("the sequence b_n is constant");
            }
            if a == AlgebraFamily::Sl(1) {
                v.push(d(GenericSl1, e, "a non-integral, borel:>"));
                v.push(d(GenericSl1, e, "a non-integral, borel:<"));
                notes.push(
                    "one statement lists both GenSl1 borels, another only borel:<; both are kept",
                );
            }
            v
        }
        AlgebraFamily::Q => {
            notes.push("Pi-twists are isomorphic when the strict partition has odd length");
            vec![
                d(Qpart, e, "strict partition gamma"),
                d(Qpart, o, "strict partition gamma"),
                d(QpartDual, e, "strict partition gamma"),
                d(QpartDual, o, "strict partition gamma"),
            ]
        }
        AlgebraFamily::OspB(0) | AlgebraFamily::OspD(0) => {
            let spinor = if alg == AlgebraFamily::OspB(0) {
                SpinorB
            } else {
                SpinorD
            };
            vec![
                d(Trivial, e, ""),
                d(Natural, e, ""),
                d(spinor, e, "subset A up to the spinor equivalence"),
            ]
        }
        _ => vec![
            d(Trivial, e, ""),
            d(Trivial, o, ""),
            d(Natural, e, ""),
            d(Natural, o, ""),
        ],
    };
    Classification {
        algebra: alg,
        families,
        notes,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeCase {
    A,
    B,
    C,
    D,
    E,
}

impl FromStr for ShapeCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(ShapeCase::A),
            "b" => Ok(ShapeCase::B),
            "c" => Ok(ShapeCase::C),
            "d" => Ok(ShapeCase::D),
            "e" => Ok(ShapeCase::E),
            _ => Err(Error::Parse(format!("shape case must be a..e, got {s:?}"))),
        }
    }
}

/// Whether `w` has one of the singular-weight shapes listed for `case`.
pub fn validate_singular_shape(case: ShapeCase, w: &Weight, n: usize, x: usize) -> bool {
    if w.shape() != (n, x) || n == 0 {
        return false;
    }
    let zero = Q::from_integer(0);
    let int = |v: &Q| v.is_integer();
    let all = |xs: &[Q], v: Q| xs.iter().all(|y| *y == v);
    let right_zero = all(&w.right, zero);
    // (±1^(n) | ±a, 0^(x−1)) with a ∈ Z≥0, or any a when x = 1.
    let ones_then = |s: i64| {
        x >= 1
            && all(&w.left, Q::from_integer(s))
            && all(&w.right[1..], zero)
            && (x == 1 || (int(&w.right[0]) && w.right[0] * Q::from_integer(s) >= zero))
    };
    let trivial = all(&w.left, zero) && right_zero;
    let partition = |s: i64| {
        let v: Vec<Q> = w.left.iter().map(|y| y * Q::from_integer(s)).collect();
        right_zero && v.iter().all(|y| int(y) && *y >= zero) && v.windows(2).all(|p| p[0] >= p[1])
    };
    let leading = |s: i64| {
        let v = w.left[0] * Q::from_integer(s);
        right_zero && int(&v) && v > zero && all(&w.left[1..], zero)
    };
    match case {
        ShapeCase::A => partition(1) || trivial || ones_then(1),
        ShapeCase::B => partition(-1) || trivial || ones_then(-1),
        ShapeCase::C => leading(1) || trivial,
        ShapeCase::D => leading(-1) || trivial,
        ShapeCase::E => {
            let k = w
                .left
                .iter()
                .take_while(|y| **y == Q::from_integer(1))
                .count();
            (right_zero && all(&w.left[k..], zero)) || ones_then(1) || trivial
        }
    }
}

/// The value at `E_{1,1}` of the extension of `λ + β` to gl(∞), where
/// `c` is the value at `λ` and `β` is a root-lattice element given by its
/// coordinates `(β_1, β_2, …)`.
pub fn extend_to_gl(beta: &[Q], c: Q) -> Result<Q> {
    if let Some(b) = beta.iter().find(|b| !b.is_integer()) {
        return Err(Error::NotInRootLatticeTranslate(format!(
            "coordinate {b} is not an integer"
        )));
    }
    let s: Q = beta.iter().sum();
    if s != Q::from_integer(0) {
        return Err(Error::NotInRootLatticeTranslate(format!(
            "coordinates sum to {s}, not 0"
        )));
    }
    Ok(c + beta.first().copied().unwrap_or_default())
}

/// `2^⌊#λ/2⌋`, the dimension of a q-type highest weight space.
pub fn q_hw_space_dim(w: &Weight) -> u64 {
    let nz = w
        .left
        .iter()
        .chain(&w.right)
        .filter(|v| **v != Q::from_integer(0))
        .count();
    1u64 << (nz / 2)
}

/// The singular-shape case whose shapes contain the family's highest
/// weight, with the Borel that case is stated for.
pub fn shape_case(kind: FamilyKind) -> Option<(ShapeCase, HwBorel)> {
    use FamilyKind::*;
    match kind {
        SmuV => Some((ShapeCase::A, HwBorel::Less)),
        SmuVdual => Some((ShapeCase::B, HwBorel::Greater)),
        SinfV => Some((ShapeCase::C, HwBorel::Less)),
        SinfVdual => Some((ShapeCase::D, HwBorel::Greater)),
        LinfV => Some((ShapeCase::E, HwBorel::Less)),
        LinfVdual => Some((ShapeCase::B, HwBorel::Greater)),
        _ => None,
    }
}

/// The highest weight of `f` at `n` with respect to `b`, transporting
/// between `b(<)` and `b(>)` when needed.
pub fn highest_weight_at(f: &FamilySpec, n: usize, b: HwBorel) -> Result<FamilyHw> {
    let hw = family_highest_weight(f, n)?;
    if hw.borel == b {
        return Ok(hw);
    }
    let (nd, x) = hw.weight.shape();
    let seq = |h: HwBorel| match h {
        HwBorel::Less => Ok(BorelSeq::less(nd, x)),
        HwBorel::Greater => Ok(BorelSeq::greater(nd, x)),
        _ => Err(invalid(format!("no transport to {h}"))),
    };
    if !f.algebra.is_sl() {
        return Err(invalid(format!(
            "transport is only available over sl, not {}",
            f.algebra
        )));
    }
    let (w, p) = transport(&hw.weight, &seq(hw.borel)?, &seq(b)?)?;
    Ok(FamilyHw {
        weight: w,
        borel: b,
        parity: hw.parity + p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oddref::{omega_table, OmegaArg, OmegaKind};
    use crate::parse::parse_weight;

    fn fam(s: &str, alg: &str) -> FamilySpec {
        FamilySpec::parse(s, Some(alg.parse().unwrap())).unwrap()
    }

    #[test]
    fn parse_roundtrip() {
        for s in [
            "SmuV[3,1]",
            "SinfV[a:1,2,2;tail:n-1;b:0]",
            "LinfV[a:1,2;tail:n;b:1]!Pi",
            "Trivial",
            "SmuVdual[2]!Pi",
        ] {
            assert_eq!(fam(s, "sl:2").to_string(), s);
        }
        assert_eq!(
            FamilySpec::parse("LhalfV[base:evens;xor:2,3]", None)
                .unwrap()
                .to_string(),
            "LhalfV[base:evens;xor:2,3]"
        );
        assert_eq!(
            FamilySpec::parse("Qpart[3,2]", None).unwrap().algebra,
            AlgebraFamily::Q
        );
        assert_eq!(
            FamilySpec::parse("GenSl1[1/2;borel:>]", None)
                .unwrap()
                .to_string(),
            "GenSl1[1/2;borel:>]"
        );
        assert!(FamilySpec::parse("GenSl1[2;borel:<]", None).is_err());
        assert!(matches!(
            FamilySpec::parse("Qpart[2,2]", None),
            Err(Error::BadPartition(_))
        ));
        assert!(matches!(
            FamilySpec::parse("SmuV[1,2]", None),
            Err(Error::BadPartition(_))
        ));
        assert!(matches!(
            FamilySpec::parse("SpinorB[all]", Some(AlgebraFamily::P)),
            Err(Error::AlgebraMismatch(_))
        ));
        // A jump of two in the tail needs m = ∞.
        assert!(FamilySpec::parse("LinfV[tail:2n;b:0]", None).is_err());
        assert!(FamilySpec::parse("LinfV[tail:2n;b:0]", Some(AlgebraFamily::SlInf)).is_ok());
    }

    #[test]
    fn highest_weight_examples() {
        let h = family_highest_weight(&fam("SmuV[3,1]", "sl:2"), 5).unwrap();
        assert_eq!(
            (h.weight.to_string(), h.borel),
            ("(3,1,0,0,0|0,0)".to_string(), HwBorel::Less)
        );
        let h = family_highest_weight(&fam("LinfVdual[tail:n-1;b:1]", "sl:1"), 4).unwrap();
        assert_eq!(
            (h.weight.to_string(), h.borel),
            ("(0,0,0,0|-3)".to_string(), HwBorel::Less)
        );
        // Π^1 on an odd vector of degree three.
        assert_eq!(h.parity, Parity::Even);
        let h = family_highest_weight(&fam("SinfVdual[a:1,1,2;tail:n;b:0]", "sl:2"), 3).unwrap();
        assert_eq!(
            (h.weight.to_string(), h.borel),
            ("(-2,0,0|0,0)".to_string(), HwBorel::Greater)
        );
        assert_eq!(
            family_highest_weight(&fam("SmuV[3,1]", "sl:2"), 1),
            Err(Error::RankTooSmall { n: 1, need: 2 })
        );
        let s = family_highest_weight(
            &FamilySpec::parse("SpinorD[base:all;xor:1]", None).unwrap(),
            3,
        )
        .unwrap();
        assert_eq!(s.weight.to_string(), "(1/2,1/2,-1/2|)");
        let l =
            family_highest_weight(&FamilySpec::parse("LhalfV[evens]", None).unwrap(), 4).unwrap();
        assert_eq!(l.weight.to_string(), "(1,0,1,0|)");
    }

    #[test]
    fn greater_presentations_match_tables() {
        for n in 1..=6usize {
            for x in 1..=3u32 {
                let alg = AlgebraFamily::Sl(x);
                let xs = x as usize;
                for a in 1..=5u64 {
                    let f = FamilySpec::new(
                        FamilyKind::SinfVdual,
                        Params::Seq(SeqSpec {
                            prefix: vec![a as i64; n],
                            ..SeqSpec::affine(1, a as i64, 0)
                        }),
                        Parity::Even,
                        alg,
                    );
                    if let Ok(f) = f {
                        let t = less_highest_weight(&f, n).unwrap().weight;
                        assert_eq!(
                            t,
                            omega_table(OmegaKind::O2, n, xs, &OmegaArg::Int(a)).unwrap()
                        );
                    }
                }
                for c in 0..=2 {
                    let f = fam(&format!("LinfV[tail:n+{c};b:0]"), &alg.to_string());
                    let t = less_highest_weight(&f, n).unwrap().weight;
                    let a = OmegaArg::Int((n + c) as u64);
                    assert_eq!(t, omega_table(OmegaKind::O3, n, xs, &a).unwrap());
                }
                for mu in [vec![1], vec![2, 1], vec![3, 3], vec![4, 2, 1]] {
                    if mu.len() > n {
                        continue;
                    }
                    let f = FamilySpec::partition(FamilyKind::SmuVdual, &mu, alg).unwrap();
                    let t = less_highest_weight(&f, n).unwrap().weight;
                    assert_eq!(
                        t,
                        omega_table(OmegaKind::O6, n, xs, &OmegaArg::Partition(mu)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn transported_parity_matches_epsilon_count() {
        for n in 1..=6 {
            for s in [
                "LinfV[tail:n+1;b:1]",
                "SmuVdual[3,1]!Pi",
                "SinfVdual[tail:n;b:0]",
                "LinfVdual[tail:n-1;b:1]",
            ] {
                let f = fam(s, "sl:2");
                let Ok(h) = less_highest_weight(&f, n) else {
                    continue;
                };
                let b = match &f.params {
                    Params::Seq(q) => q.b(n) as i64,
                    _ => 0,
                };
                let expect = f.twist + Parity::of(b + h.weight.right_sum().to_integer());
                assert_eq!(h.parity, expect, "{s} n={n}");
            }
        }
    }

    #[test]
    fn shapes_hold_for_catalog_weights() {
        for n in 1..=6usize {
            for x in 1..=3u32 {
                let alg = AlgebraFamily::Sl(x);
                for s in [
                    "SmuV[2,1]",
                    "SmuVdual[3]",
                    "SinfV[tail:n+1;b:0]",
                    "SinfVdual[tail:2n;b:1]",
                    "LinfV[tail:n+1;b:0]",
                    "LinfVdual[tail:n-1;b:1]",
                ] {
                    let f = fam(s, &alg.to_string());
                    let Ok(h) = family_highest_weight(&f, n) else {
                        continue;
                    };
                    let (case, b) = shape_case(f.kind).unwrap();
                    let w = highest_weight_at(&f, n, b).unwrap().weight;
                    assert!(
                        validate_singular_shape(case, &w, n, x as usize),
                        "{s} n={n} x={x}: {} -> {w}",
                        h.weight
                    );
                }
            }
        }
    }

    #[test]
    fn shape_examples() {
        let w = |s: &str| parse_weight(s).unwrap();
        assert!(validate_singular_shape(
            ShapeCase::A,
            &w("(2,1,0,0|0,0)"),
            4,
            2
        ));
        assert!(validate_singular_shape(
            ShapeCase::A,
            &w("(1,1,1,1|3,0)"),
            4,
            2
        ));
        assert!(!validate_singular_shape(
            ShapeCase::C,
            &w("(0,2,0|0)"),
            3,
            1
        ));
        assert!(validate_singular_shape(ShapeCase::A, &w("(1,1|1/2)"), 2, 1));
        assert!(!validate_singular_shape(
            ShapeCase::A,
            &w("(1,1|1/2,0)"),
            2,
            2
        ));
    }

    #[test]
    fn isomorphism_examples() {
        let a = fam("SinfV[a:1,1,1,2;tail:n;b:0]", "sl:1");
        let b = fam("SinfV[a:2,2,3,4;tail:n;b:0]", "sl:1");
        assert!(isomorphic(&a, &b));
        assert!(!isomorphic(&a, &a.twisted()));
        assert!(isomorphic(&fam("SmuV[]", "sl:1"), &fam("Trivial", "sl:1")));
        assert!(isomorphic(
            &fam("SmuVdual[]", "sl:1"),
            &fam("Trivial", "sl:1")
        ));
        let q21 = fam("Qpart[2,1]", "q");
        assert!(!isomorphic(&q21, &q21.twisted()));
        let q1 = fam("Qpart[1]", "q");
        assert!(isomorphic(&q1, &q1.twisted()));
        assert!(isomorphic(&fam("Natural", "sl:1"), &fam("SmuV[1]", "sl:1")));
        let l1 = FamilySpec::parse("LhalfV[base:evens;xor:2,3]", None).unwrap();
        let l2 = FamilySpec::parse("LhalfV[base:evens]", None).unwrap();
        let l3 = FamilySpec::parse("LhalfV[base:evens;xor:3]", None).unwrap();
        assert!(isomorphic(&l1, &l2) && !isomorphic(&l2, &l3));
        // b twists fold into the global twist.
        assert!(isomorphic(
            &fam("SinfV[tail:n;b:1]", "sl:1"),
            &fam("SinfV[tail:n;b:0]!Pi", "sl:1")
        ));
    }

    #[test]
    fn duals() {
        let f = fam("SmuV[3,1]", "sl:1");
        assert_eq!(dual_family(&f), fam("SmuVdual[3,1]", "sl:1"));
        let t = fam("Trivial", "sl:1");
        assert_eq!(dual_family(&t), t);
        let l = fam("LinfV[tail:n-1;b:1]", "sl:1");
        assert_eq!(dual_family(&l), fam("LinfVdual[tail:n-1;b:1]", "sl:1"));
        for s in ["SinfV[tail:n;b:0]", "GenSl1[1/3;borel:<]", "Qpart[2]"] {
            let f = FamilySpec::parse(s, None).unwrap();
            assert_eq!(dual_family(&dual_family(&f)), f);
        }
    }

    #[test]
    fn classification() {
        let p = classify_bounded(AlgebraFamily::P);
        assert_eq!(p.families.len(), 4);
        assert_eq!(classify_bounded(AlgebraFamily::Sl(2)).families.len(), 8);
        assert_eq!(classify_bounded(AlgebraFamily::Sl(1)).families.len(), 10);
        assert!(classify_bounded(AlgebraFamily::Q)
            .families
            .iter()
            .all(|d| matches!(d.kind, FamilyKind::Qpart | FamilyKind::QpartDual)));
    }

    #[test]
    fn borel_conditions() {
        let l = FamilySpec::parse("LhalfV[evens]", None).unwrap();
        assert!(hw_borel_condition(&l, &OrderRule::parse("evens|rest").unwrap()).unwrap());
        assert!(!hw_borel_condition(&l, &OrderRule::parse("odds|rest").unwrap()).unwrap());
        let s = fam("SinfV[tail:n;b:0]", "sl:1");
        for o in ["1,2,3|rest", "evens|rest", "rest|1"] {
            assert!(!hw_borel_condition(&s, &OrderRule::parse(o).unwrap()).unwrap());
        }
        let wide = fam("LinfV[tail:2n;b:0]", "sl");
        for o in ["1,2,3|rest", "evens|rest", "rest|1", "odds|evens"] {
            assert!(!hw_borel_condition(&wide, &OrderRule::parse(o).unwrap()).unwrap());
        }
        let m = fam("SmuV[3,1]", "sl:1");
        assert!(hw_borel_condition(&m, &OrderRule::parse("5,2|rest").unwrap()).unwrap());
        assert!(!hw_borel_condition(&m, &OrderRule::parse("5|rest").unwrap()).unwrap());
        let d = fam("SmuVdual[3,1]", "sl:1");
        assert!(hw_borel_condition(&d, &OrderRule::parse("rest|5,2").unwrap()).unwrap());
        let sp = FamilySpec::parse("SpinorB[all]", None).unwrap();
        assert!(matches!(
            hw_borel_condition(&sp, &OrderRule::parse("1|rest").unwrap()),
            Err(Error::UnsupportedOrderRule(_))
        ));
    }

    #[test]
    fn small_helpers() {
        assert_eq!(
            extend_to_gl(&[], Q::from_integer(3)).unwrap(),
            Q::from_integer(3)
        );
        assert_eq!(
            extend_to_gl(
                &[Q::from_integer(1), Q::from_integer(-1)],
                Q::from_integer(0)
            )
            .unwrap(),
            Q::from_integer(1)
        );
        let b = [Q::from_integer(0), Q::from_integer(-1), Q::from_integer(1)];
        assert_eq!(extend_to_gl(&b, Q::new(1, 2)).unwrap(), Q::new(1, 2));
        assert!(matches!(
            extend_to_gl(&[Q::from_integer(1)], Q::from_integer(0)),
            Err(Error::NotInRootLatticeTranslate(_))
        ));
        assert_eq!(q_hw_space_dim(&Weight::zero(0, 3)), 1);
        assert_eq!(q_hw_space_dim(&Weight::from_ints(&[], &[3, 2, 1])), 2);
        assert_eq!(q_hw_space_dim(&Weight::from_ints(&[], &[4, 3, 2, 1])), 4);
    }
}
