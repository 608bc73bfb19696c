//! Finite descriptions of total orders on the positive integers, and the
//! highest-weight criteria of the catalog families against them.

use std::fmt;

use super::sets::{parse_list, IndexSet};
use super::{FamilyKind, FamilySpec, Params};
use crate::error::{Error, Result};

/// One block of an order rule. Lists are ordered left to right; sets and
/// `rest` are blocks whose internal order is left unspecified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bucket {
    List(Vec<u64>),
    Set(IndexSet),
    Rest,
}

/// Buckets separated by `|`, each preceding the next: `1,2,3|rest`,
/// `evens|rest`, `rest|2,1`, `base:odds;xor:1|evens`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRule {
    buckets: Vec<Bucket>,
    /// The set each bucket stands for, with `rest` resolved.
    sets: Vec<IndexSet>,
}

fn unsupported(msg: String) -> Error {
    Error::UnsupportedOrderRule(msg)
}

impl OrderRule {
    pub fn new(buckets: Vec<Bucket>) -> Result<OrderRule> {
        let mut sets = Vec::with_capacity(buckets.len());
        let mut seen = IndexSet::finite([])?;
        let mut rest_at = None;
        for (i, b) in buckets.iter().enumerate() {
            let s = match b {
                Bucket::List(xs) => {
                    let s = IndexSet::finite(xs.iter().copied())?;
                    if xs.len() != s.flips().len() {
                        return Err(unsupported(format!("bucket {i} repeats an index")));
                    }
                    s
                }
                Bucket::Set(s) => s.clone(),
                Bucket::Rest => {
                    if rest_at.replace(i).is_some() {
                        return Err(unsupported("more than one rest bucket".into()));
                    }
                    IndexSet::finite([])?
                }
            };
            if !seen.disjoint(&s) {
                return Err(unsupported(format!("bucket {i} overlaps an earlier one")));
            }
            seen = seen.union(&s);
            sets.push(s);
        }
        let remainder = seen.complement();
        match rest_at {
            Some(i) => sets[i] = remainder,
            None if !remainder.is_empty() => {
                return Err(unsupported(format!(
                    "the rule misses {remainder} and has no rest bucket"
                )))
            }
            None => {}
        }
        Ok(OrderRule { buckets, sets })
    }

    pub fn parse(s: &str) -> Result<OrderRule> {
        let buckets = s
            .split('|')
            .map(|t| {
                let t = t.trim();
                match t {
                    "rest" => Ok(Bucket::Rest),
                    "evens" | "odds" | "all" => IndexSet::parse(t).map(Bucket::Set),
                    _ if t.starts_with("base:") => IndexSet::parse(t).map(Bucket::Set),
                    _ => parse_list(t).map(Bucket::List),
                }
                .map_err(|e| unsupported(format!("bucket {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        OrderRule::new(buckets)
    }

    /// The order as a sequence of blocks; singletons come from lists.
    fn atoms(&self) -> Vec<(IndexSet, bool)> {
        let mut out = Vec::new();
        for (b, s) in self.buckets.iter().zip(&self.sets) {
            match b {
                Bucket::List(xs) => out.extend(
                    xs.iter()
                        .map(|&x| (IndexSet::finite([x]).expect("positive"), true)),
                ),
                _ if s.is_empty() => {}
                _ => out.push((s.clone(), false)),
            }
        }
        out
    }

    fn leading_singletons(&self) -> usize {
        self.atoms()
            .iter()
            .take_while(|(_, single)| *single)
            .count()
    }

    fn trailing_singletons(&self) -> usize {
        self.atoms()
            .iter()
            .rev()
            .take_while(|(_, single)| *single)
            .count()
    }

    /// Whether some initial segment of the order is exactly `a`.
    fn has_initial_segment(&self, a: &IndexSet) -> bool {
        let mut acc = IndexSet::finite([]).expect("empty");
        if acc == *a {
            return true;
        }
        for (s, _) in self.atoms() {
            acc = acc.union(&s);
            if acc == *a {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for OrderRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .buckets
            .iter()
            .map(|b| match b {
                Bucket::List(xs) => xs
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                Bucket::Set(s) => s.to_string(),
                Bucket::Rest => "rest".into(),
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Whether `f` is a highest weight module for the Borel subalgebra given
/// by the order on the infinite index set.
pub fn hw_borel_condition(f: &FamilySpec, order: &OrderRule) -> Result<bool> {
    use FamilyKind::*;
    match (f.kind, &f.params) {
        (Trivial, _) => Ok(true),
        (SmuV | Qpart, Params::Partition(mu)) => Ok(order.leading_singletons() >= mu.len()),
        (SmuVdual | QpartDual, Params::Partition(mu)) => {
            Ok(order.trailing_singletons() >= mu.len())
        }
        (Natural, _) if f.algebra.is_sl() || f.algebra == crate::AlgebraFamily::Q => {
            Ok(order.leading_singletons() >= 1)
        }
        (SinfV | SinfVdual, _) => Ok(false),
        (LhalfV, Params::Set(a)) => Ok(order.has_initial_segment(a)),
        (LinfV | LinfVdual, Params::Seq(s)) => {
            // Gaps a_{n+1} − a_n > 1 occur infinitely often exactly when the
            // tail slope exceeds one; the b tail is constant.
            let Some(a) = s.value_set() else {
                return Ok(false);
            };
            Ok(if f.kind == LinfV {
                order.has_initial_segment(&a)
            } else {
                order.has_initial_segment(&a.complement())
            })
        }
        _ => Err(unsupported(format!("no order criterion for {f}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let r = OrderRule::parse("1,2,3|rest").unwrap();
        assert_eq!(r.leading_singletons(), 3);
        assert_eq!(r.trailing_singletons(), 0);
        assert_eq!(r.to_string(), "1,2,3|rest");
        let r = OrderRule::parse("rest|2,1").unwrap();
        assert_eq!(r.trailing_singletons(), 2);
        assert!(OrderRule::parse("evens|odds").is_ok());
        for bad in [
            "1,2|1|rest",
            "evens",
            "rest|rest",
            "evens|2|rest",
            "1,x|rest",
        ] {
            assert!(
                matches!(OrderRule::parse(bad), Err(Error::UnsupportedOrderRule(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn initial_segments() {
        let r = OrderRule::parse("evens|rest").unwrap();
        assert!(r.has_initial_segment(&IndexSet::parse("evens").unwrap()));
        assert!(!r.has_initial_segment(&IndexSet::parse("odds").unwrap()));
        let r = OrderRule::parse("3,1|rest").unwrap();
        assert!(r.has_initial_segment(&IndexSet::finite([1, 3]).unwrap()));
        assert!(!r.has_initial_segment(&IndexSet::finite([1]).unwrap()));
    }
}
