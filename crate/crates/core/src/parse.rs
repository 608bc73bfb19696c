//! Text forms shared by the library and the command line.
//!
//! ```text
//! WEIGHT   := "(" COORDS "|" COORDS ")"
//! COORDS   := ITEM ("," ITEM)* | ""
//! ITEM     := RATIONAL | RATIONAL "^" NAT
//! RATIONAL := ["-"] NAT ["/" NAT]
//! ```

use crate::error::{Error, Result};
use crate::weight::{Weight, Q};

pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::Parse(format!("bad rational {t:?}"));
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let nat = |x: &str| -> Result<i64> {
        if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        x.parse::<i64>().map_err(|_| bad())
    };
    let (p, d) = match body.split_once('/') {
        Some((p, d)) => (nat(p)?, nat(d)?),
        None => (nat(body)?, 1),
    };
    if d == 0 {
        return Err(bad());
    }
    let v = Q::new(p, d);
    Ok(if neg { -v } else { v })
}

pub fn parse_coords(s: &str) -> Result<Vec<Q>> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for item in t.split(',') {
        match item.split_once('^') {
            Some((r, k)) => {
                let v = parse_rational(r)?;
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad repetition in {item:?}")))?;
                out.extend(std::iter::repeat_n(v, k));
            }
            None => out.push(parse_rational(item)?),
        }
    }
    Ok(out)
}

pub fn parse_weight(s: &str) -> Result<Weight> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("weight {t:?} must be parenthesised")))?;
    let (l, r) = inner
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("weight {t:?} needs a '|'")))?;
    if r.contains('|') {
        return Err(Error::Parse(format!("weight {t:?} has more than one '|'")));
    }
    Ok(Weight::new(parse_coords(l)?, parse_coords(r)?))
}

/// Parses `"3,1"`, `"3^2,1"` or `""` into a list of naturals.
pub fn parse_nats(s: &str) -> Result<Vec<u64>> {
    parse_coords(s)?
        .into_iter()
        .map(|x| {
            if x.is_integer() && x >= Q::from_integer(0) {
                Ok(x.to_integer() as u64)
            } else {
                Err(Error::Parse(format!("expected a natural number, got {x}")))
            }
        })
        .collect()
}

/// Parses `"n,m"`.
pub fn parse_shape(s: &str) -> Result<(usize, usize)> {
    let v = parse_nats(s)?;
    match v.as_slice() {
        [n, m] => Ok((*n as usize, *m as usize)),
        _ => Err(Error::Parse(format!("shape {s:?} must be n,m"))),
    }
}

/// Parses an inclusive range `"3..8"` (or `"3..=8"`).
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("range {s:?} must be lo..hi"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}
