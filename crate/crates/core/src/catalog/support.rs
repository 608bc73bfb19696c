//! Supports of the catalog modules as predicates on weights of sl(∞).

use std::fmt;

use num_integer::Integer;

use super::sets::{Base, IndexSet, SeqSpec};
use crate::error::{Error, Result};
use crate::parse::parse_coords;
use crate::weight::Q;

/// An sl(∞)-weight `(λ_1, λ_2, …)`: explicit prefix, then a periodic tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqWeight {
    pub prefix: Vec<Q>,
    pub period: Vec<Q>,
}

impl SeqWeight {
    pub fn finite(prefix: Vec<Q>) -> SeqWeight {
        SeqWeight {
            prefix,
            period: vec![Q::from_integer(0)],
        }
    }

    pub fn periodic(prefix: Vec<Q>, period: Vec<Q>) -> Result<SeqWeight> {
        if period.is_empty() {
            return Err(Error::Parse("empty period".into()));
        }
        Ok(SeqWeight { prefix, period })
    }

    /// `Σ_{i∈S} value_in·ε_i + Σ_{i∉S} value_out·ε_i`.
    pub fn of_set(s: &IndexSet, value_in: Q, value_out: Q) -> SeqWeight {
        let h = s.horizon() as usize;
        let len = h + h % 2;
        let val = |i: u64| if s.contains(i) { value_in } else { value_out };
        let prefix = (1..=len as u64).map(val).collect();
        // Indices len+1 (odd) and len+2 (even) start the tail.
        let period = vec![
            if Base::contains(s.base(), 1) {
                value_in
            } else {
                value_out
            },
            if Base::contains(s.base(), 2) {
                value_in
            } else {
                value_out
            },
        ];
        SeqWeight { prefix, period }
    }

    /// `λ_i`, 1-based.
    pub fn at(&self, i: usize) -> Q {
        let l = self.prefix.len();
        if i >= 1 && i <= l {
            self.prefix[i - 1]
        } else {
            self.period[(i - l - 1) % self.period.len()]
        }
    }

    fn values(&self) -> impl Iterator<Item = &Q> {
        self.prefix.iter().chain(&self.period)
    }

    /// Parses `1,1,0` (finitely supported), `0,1;repeat:1,0`,
    /// `eps:<set>` (indicator of a set) or `omega:<set>` (±1/2 on the set
    /// and its complement).
    pub fn parse(s: &str) -> Result<SeqWeight> {
        let t = s.trim();
        if let Some(set) = t.strip_prefix("eps:") {
            return Ok(SeqWeight::of_set(
                &IndexSet::parse(set)?,
                Q::from_integer(1),
                Q::from_integer(0),
            ));
        }
        if let Some(set) = t.strip_prefix("omega:") {
            return Ok(SeqWeight::of_set(
                &IndexSet::parse(set)?,
                Q::new(1, 2),
                Q::new(-1, 2),
            ));
        }
        let t = t.trim_start_matches('(').trim_end_matches(')');
        match t.split_once(";repeat:") {
            Some((p, r)) => SeqWeight::periodic(parse_coords(p)?, parse_coords(r)?),
            None => Ok(SeqWeight::finite(parse_coords(t)?)),
        }
    }
}

impl fmt::Display for SeqWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |xs: &[Q]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};repeat:{}", j(&self.prefix), j(&self.period))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportSet {
    /// Exterior type: `{ε_B | B ≈ A}`.
    LambdaA(IndexSet),
    /// Symmetric type: weights `λ ≥ 0` with partial sums following `a_n`.
    SA(SeqSpec),
    /// Dual symmetric type: the negatives of the above.
    SAdual(SeqSpec),
    /// `0 ≤ λ_i ≤ μ_i`.
    Smu(Vec<u64>),
    /// `0 ≤ −λ_i ≤ μ_i`.
    SmuDual(Vec<u64>),
    /// `{ω_{A'} | A' ∼_B A}`: finite symmetric difference.
    SpinorB(IndexSet),
    /// `{ω_{A'} | A' ∼_D A}`: finite symmetric difference of even size.
    SpinorD(IndexSet),
    /// `{ε_i}`, with `−ε_i` when `signed` and `0` when `zero`.
    Natural {
        signed: bool,
        zero: bool,
    },
    Singleton(SeqWeight),
}

impl SupportSet {
    /// Parses `Lambda[base:evens]`, `S[a:1;tail:n;b:0]`, `Sdual[...]`,
    /// `Smu[2,1]`, `SmuDual[2,1]`, `SpinorB[...]`, `SpinorD[...]`,
    /// `Natural`, `NaturalSigned`, `NaturalSignedZero`, `Point[weight]`.
    pub fn parse(s: &str) -> Result<SupportSet> {
        let t = s.trim();
        let (head, body) = match t.split_once('[') {
            Some((h, rest)) => {
                let b = rest
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("unclosed bracket in {t:?}")))?;
                (h, Some(b))
            }
            None => (t, None),
        };
        let body = || body.ok_or_else(|| Error::Parse(format!("{head} needs [parameters]")));
        let nats = |b: &str| super::sets::parse_list(b);
        Ok(match head {
            "Lambda" | "LambdaA" => SupportSet::LambdaA(IndexSet::parse(body()?)?),
            "S" | "SA" => SupportSet::SA(SeqSpec::parse(body()?)?),
            "Sdual" | "SAdual" => SupportSet::SAdual(SeqSpec::parse(body()?)?),
            "Smu" => SupportSet::Smu(nats(body()?)?),
            "SmuDual" => SupportSet::SmuDual(nats(body()?)?),
            "SpinorB" => SupportSet::SpinorB(IndexSet::parse(body()?)?),
            "SpinorD" => SupportSet::SpinorD(IndexSet::parse(body()?)?),
            "Natural" => SupportSet::Natural {
                signed: false,
                zero: false,
            },
            "NaturalSigned" => SupportSet::Natural {
                signed: true,
                zero: false,
            },
            "NaturalSignedZero" => SupportSet::Natural {
                signed: true,
                zero: true,
            },
            "Point" => SupportSet::Singleton(SeqWeight::parse(body()?)?),
            _ => return Err(Error::Parse(format!("unknown support kind {head:?}"))),
        })
    }
}

fn require_integral(w: &SeqWeight) -> Result<()> {
    match w.values().find(|x| !x.is_integer()) {
        Some(x) => Err(Error::NonIntegralWeight(x.to_string())),
        None => Ok(()),
    }
}

/// Compares `{i | λ_i = v}` with `a` and returns `(|A∖B|, |B∖A|)` when
/// the difference is finite.
fn level_set_difference(w: &SeqWeight, v: Q, a: &IndexSet) -> Option<(usize, usize)> {
    let h = w.prefix.len().max(a.horizon() as usize);
    let p = w.period.len().lcm(&2);
    if (h + 1..=h + p).any(|i| (w.at(i) == v) != a.contains(i as u64)) {
        return None;
    }
    let ab = (1..=h)
        .filter(|&i| a.contains(i as u64) && w.at(i) != v)
        .count();
    let ba = (1..=h)
        .filter(|&i| !a.contains(i as u64) && w.at(i) == v)
        .count();
    Some((ab, ba))
}

fn partial_sum_rule(w: &SeqWeight, s: &SeqSpec) -> bool {
    if w.values().any(|x| *x < Q::from_integer(0)) {
        return false;
    }
    // Past both prefixes, the increments are constant and the condition
    // propagates upward, so one large index decides it.
    let t = w.prefix.len().max(s.tail_start()) + 1;
    if (t + 1..=t + w.period.len()).any(|i| w.at(i) != Q::from_integer(s.slope)) {
        return false;
    }
    let sum: Q = (1..=t).map(|i| w.at(i)).sum();
    sum == Q::from_integer(s.a(t))
}

fn bounded_by(w: &SeqWeight, mu: &[u64], sign: i64) -> bool {
    let end = w.prefix.len().max(mu.len()) + w.period.len();
    (1..=end).all(|i| {
        let x = w.at(i) * Q::from_integer(sign);
        let cap = Q::from_integer(mu.get(i - 1).copied().unwrap_or(0) as i64);
        x >= Q::from_integer(0) && x <= cap
    })
}

pub fn support_contains(s: &SupportSet, w: &SeqWeight) -> Result<bool> {
    let zero = Q::from_integer(0);
    let one = Q::from_integer(1);
    match s {
        SupportSet::LambdaA(a) => {
            require_integral(w)?;
            if w.values().any(|x| *x != zero && *x != one) {
                return Ok(false);
            }
            Ok(level_set_difference(w, one, a).is_some_and(|(x, y)| x == y))
        }
        SupportSet::SA(seq) => {
            require_integral(w)?;
            Ok(partial_sum_rule(w, seq))
        }
        SupportSet::SAdual(seq) => {
            require_integral(w)?;
            let neg = SeqWeight {
                prefix: w.prefix.iter().map(|x| -x).collect(),
                period: w.period.iter().map(|x| -x).collect(),
            };
            Ok(partial_sum_rule(&neg, seq))
        }
        SupportSet::Smu(mu) => Ok(bounded_by(w, mu, 1)),
        SupportSet::SmuDual(mu) => Ok(bounded_by(w, mu, -1)),
        SupportSet::SpinorB(a) | SupportSet::SpinorD(a) => {
            let half = Q::new(1, 2);
            if let Some(x) = w.values().find(|x| **x != half && **x != -half) {
                return Err(Error::BadParity(x.to_string()));
            }
            let Some((x, y)) = level_set_difference(w, half, a) else {
                return Ok(false);
            };
            Ok(matches!(s, SupportSet::SpinorB(_)) || (x + y) % 2 == 0)
        }
        SupportSet::Natural {
            signed,
            zero: allow_zero,
        } => {
            let end = w.prefix.len() + w.period.len();
            if w.period.iter().any(|x| *x != zero) {
                return Ok(false);
            }
            let nz: Vec<Q> = (1..=end).map(|i| w.at(i)).filter(|x| *x != zero).collect();
            Ok(match nz.as_slice() {
                [] => *allow_zero,
                [x] => *x == one || (*signed && *x == -one),
                _ => false,
            })
        }
        SupportSet::Singleton(v) => {
            let h = v.prefix.len().max(w.prefix.len()) + v.period.len().lcm(&w.period.len());
            Ok((1..=h).all(|i| v.at(i) == w.at(i)))
        }
    }
}
