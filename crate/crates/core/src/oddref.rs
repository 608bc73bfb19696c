//! Odd reflections of gl(n|m) highest weights and the closed-form tables.
//!
//! [`transport`] moves a highest weight between two Borels. Swaps of a δ
//! and an ε slot are odd reflections. When the two orders also differ
//! inside one kind, the remaining relabelling is an even Weyl group
//! element, which permutes coordinates of the same kind and leaves the
//! parity alone; this step assumes the even part acts integrably, as it
//! does for every module the tables describe.

use crate::error::{Error, Result};
use crate::roots::{BorelSeq, Root};
use crate::weight::{pairing, Kind, Parity, Slot, Weight, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeightState {
    pub weight: Weight,
    pub borel: Vec<Slot>,
    pub parity: Parity,
}

impl HighestWeightState {
    pub fn new(weight: Weight, borel: Vec<Slot>) -> Result<HighestWeightState> {
        let (n, m) = BorelSeq::new(borel.clone()).validate_slots()?;
        if (n, m) != weight.shape() {
            return Err(Error::SlotMismatch(format!(
                "borel has shape ({n},{m}), weight has {:?}",
                weight.shape()
            )));
        }
        Ok(HighestWeightState {
            weight,
            borel,
            parity: Parity::Even,
        })
    }
}

/// Reflects in the simple root formed by the slots at `pos` and `pos + 1`
/// (1-based), which must be one δ and one ε.
pub fn odd_reflect(s: &HighestWeightState, pos: usize) -> Result<HighestWeightState> {
    if pos == 0 || pos >= s.borel.len() {
        return Err(Error::IndexOutOfRange(format!(
            "position {pos} in a borel of length {}",
            s.borel.len()
        )));
    }
    let (x, y) = (s.borel[pos - 1], s.borel[pos]);
    if x.kind == y.kind {
        return Err(Error::NotOddSimple(pos, pos + 1));
    }
    let alpha = Root::odd(&[(x, 1), (y, -1)]);
    let mut out = s.clone();
    out.borel.swap(pos - 1, pos);
    if pairing(&s.weight, &alpha)? != Q::from_integer(0) {
        out.weight = s.weight.add_root(&alpha, -1)?;
        out.parity = s.parity.flip();
    }
    Ok(out)
}

/// Rewrites `to` so that each kind appears in the same relative order as
/// in `from`; returns it with the pairing `(slot in to', slot in to)`.
fn relabel(from: &[Slot], to: &[Slot]) -> (Vec<Slot>, Vec<(Slot, Slot)>) {
    let of_kind = |k: Kind, seq: &[Slot]| {
        seq.iter()
            .copied()
            .filter(move |s| s.kind == k)
            .collect::<Vec<_>>()
    };
    let mut pools = [
        of_kind(Kind::Delta, from).into_iter(),
        of_kind(Kind::Eps, from).into_iter(),
    ];
    let mut out = Vec::with_capacity(to.len());
    let mut pairs = Vec::with_capacity(to.len());
    for &t in to {
        let pool = &mut pools[(t.kind == Kind::Eps) as usize];
        let s = pool.next().expect("same slot counts");
        out.push(s);
        pairs.push((s, t));
    }
    (out, pairs)
}

/// Positions `p` (1-based) where the swap of `p, p+1` moves `cur` closer to `target`.
pub fn reducing_swaps(cur: &[Slot], target: &[Slot]) -> Vec<usize> {
    let rank = |s: &Slot| target.iter().position(|t| t == s).expect("same slots");
    (1..cur.len())
        .filter(|&p| rank(&cur[p - 1]) > rank(&cur[p]))
        .collect()
}

/// [`transport`] with a caller-chosen reduced path: `choose` picks one of
/// the offered swap positions at each step.
pub fn transport_by(
    w: &Weight,
    from: &BorelSeq,
    to: &BorelSeq,
    choose: &mut dyn FnMut(&[usize]) -> usize,
) -> Result<(Weight, Parity)> {
    let shape_from = from.validate_slots()?;
    let shape_to = to.validate_slots()?;
    if shape_from != shape_to || shape_from != w.shape() {
        return Err(Error::SlotMismatch(format!(
            "borels of shape {shape_from:?} and {shape_to:?} for a weight of shape {:?}",
            w.shape()
        )));
    }
    let (target, pairs) = relabel(&from.slots, &to.slots);
    let mut state = HighestWeightState::new(w.clone(), from.slots.clone())?;
    loop {
        let options = reducing_swaps(&state.borel, &target);
        if options.is_empty() {
            break;
        }
        let pos = choose(&options);
        if !options.contains(&pos) {
            return Err(Error::SlotMismatch(format!(
                "swap at {pos} is not on a reduced path"
            )));
        }
        state = odd_reflect(&state, pos)?;
    }
    let mut out = state.weight.clone();
    for (s, t) in pairs {
        out.set(t, state.weight.get(s)?)?;
    }
    Ok((out, state.parity))
}

pub fn transport(w: &Weight, from: &BorelSeq, to: &BorelSeq) -> Result<(Weight, Parity)> {
    transport_by(w, from, to, &mut |opts| opts[0])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaKind {
    /// `S^a V*`.
    O2,
    /// `Λ^a V`.
    O3,
    /// `S^μ V*`.
    O6,
}

impl std::str::FromStr for OmegaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O2" | "2" => Ok(OmegaKind::O2),
            "O3" | "3" => Ok(OmegaKind::O3),
            "O6" | "6" => Ok(OmegaKind::O6),
            _ => Err(Error::Parse(format!(
                "unknown table {s:?}, expected O2, O3 or O6"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OmegaArg {
    Int(u64),
    Partition(Vec<u64>),
}

pub fn check_partition(mu: &[u64]) -> Result<()> {
    if mu.contains(&0) || mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BadPartition(format!(
            "{mu:?} is not weakly decreasing and positive"
        )));
    }
    Ok(())
}

fn ints(xs: impl IntoIterator<Item = i64>) -> Vec<Q> {
    xs.into_iter().map(Q::from_integer).collect()
}

fn rep(v: i64, k: usize) -> impl Iterator<Item = i64> {
    std::iter::repeat_n(v, k)
}

/// The b(<) highest weights of `S^a V*`, `Λ^a V` and `S^μ V*` at `gl(n|x)`.
pub fn omega_table(kind: OmegaKind, n: usize, x: usize, arg: &OmegaArg) -> Result<Weight> {
    if n == 0 || x == 0 {
        return Err(Error::NonPositiveRank(format!("n={n}, x={x}")));
    }
    match (kind, arg) {
        (OmegaKind::O2, OmegaArg::Int(a)) => {
            let a = *a as usize;
            Ok(if a <= x {
                Weight::new(ints(rep(0, n)), ints(rep(0, x - a).chain(rep(-1, a))))
            } else {
                Weight::new(
                    ints(rep(0, n - 1).chain([x as i64 - a as i64])),
                    ints(rep(-1, x)),
                )
            })
        }
        (OmegaKind::O3, OmegaArg::Int(a)) => {
            let a = *a as usize;
            Ok(if a <= n {
                Weight::new(ints(rep(1, a).chain(rep(0, n - a))), ints(rep(0, x)))
            } else {
                Weight::new(
                    ints(rep(1, n)),
                    ints([(a - n) as i64].into_iter().chain(rep(0, x - 1))),
                )
            })
        }
        (OmegaKind::O6, OmegaArg::Partition(mu)) => omega6(n, x, mu),
        _ => Err(Error::Parse(format!(
            "table {kind:?} does not take {arg:?}"
        ))),
    }
}

fn omega6(n: usize, x: usize, mu: &[u64]) -> Result<Weight> {
    check_partition(mu)?;
    let k = mu.len();
    if k > n {
        return Err(Error::RankTooSmall { n, need: k });
    }
    let mu: Vec<i64> = mu.iter().map(|&v| v as i64).collect();
    let xi = x as i64;
    let at = |i: usize| if i >= 1 && i <= k { mu[i - 1] } else { 0 };
    // Runs of −i on the right, for i from `l` to k, of length min(μ_i, x) − μ_{i+1}.
    let runs = |l: usize| -> Vec<i64> {
        (l..=k)
            .flat_map(|i| {
                let top = if i == l { xi } else { at(i).min(xi) };
                rep(-(i as i64), (top - at(i + 1)).max(0) as usize)
            })
            .collect()
    };
    if k > 0 && mu[0] >= xi {
        // Some μ_l ≥ x > μ_{l+1}.
        let l = mu.iter().take_while(|&&v| v >= xi).count();
        let left = rep(0, n - l).chain((1..=l).rev().map(|i| xi - at(i)));
        Ok(Weight::new(ints(left), ints(runs(l))))
    } else {
        Ok(Weight::new(ints(rep(0, n)), ints(runs(0))))
    }
}

/// The b(>) highest weights that the tables start from.
pub fn omega_source(kind: OmegaKind, n: usize, x: usize, arg: &OmegaArg) -> Result<Weight> {
    if n == 0 || x == 0 {
        return Err(Error::NonPositiveRank(format!("n={n}, x={x}")));
    }
    match (kind, arg) {
        (OmegaKind::O2, OmegaArg::Int(a)) => Ok(Weight::new(
            ints([-(*a as i64)].into_iter().chain(rep(0, n - 1))),
            ints(rep(0, x)),
        )),
        (OmegaKind::O3, OmegaArg::Int(a)) => Ok(Weight::new(
            ints(rep(0, n)),
            ints(rep(0, x - 1).chain([*a as i64])),
        )),
        (OmegaKind::O6, OmegaArg::Partition(mu)) => {
            check_partition(mu)?;
            if mu.len() > n {
                return Err(Error::RankTooSmall { n, need: mu.len() });
            }
            let left = mu.iter().map(|&v| -(v as i64)).chain(rep(0, n - mu.len()));
            Ok(Weight::new(ints(left), ints(rep(0, x))))
        }
        _ => Err(Error::Parse(format!(
            "table {kind:?} does not take {arg:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_weight;
    use crate::roots::parse_order;

    fn st(w: &str, b: &str) -> HighestWeightState {
        HighestWeightState::new(parse_weight(w).unwrap(), parse_order(b, None).unwrap()).unwrap()
    }

    #[test]
    fn reflect_examples() {
        let r = odd_reflect(&st("(1|0)", "d1,e1"), 1).unwrap();
        assert_eq!(r.weight, parse_weight("(0|1)").unwrap());
        assert_eq!(r.borel, parse_order("e1,d1", None).unwrap());
        assert_eq!(r.parity, Parity::Odd);
        let r = odd_reflect(&st("(1|-1)", "d1,e1"), 1).unwrap();
        assert_eq!(
            (r.weight, r.parity),
            (parse_weight("(1|-1)").unwrap(), Parity::Even)
        );
        assert_eq!(
            odd_reflect(&st("(0,0|0)", "d1,d2,e1"), 1),
            Err(Error::NotOddSimple(1, 2))
        );
    }

    #[test]
    fn transport_examples() {
        let w = parse_weight("(-1,0|0,0)").unwrap();
        let (t, _) = transport(&w, &BorelSeq::greater(2, 2), &BorelSeq::less(2, 2)).unwrap();
        assert_eq!(t, parse_weight("(0,0|0,-1)").unwrap());

        let z = Weight::zero(3, 1);
        let b = BorelSeq::less(3, 1);
        assert_eq!(transport(&z, &b, &b).unwrap(), (z.clone(), Parity::Even));

        let w = parse_weight("(0,0|3)").unwrap();
        let (t, p) = transport(&w, &BorelSeq::greater(2, 1), &BorelSeq::less(2, 1)).unwrap();
        assert_eq!(t, parse_weight("(1,1|1)").unwrap());
        assert_eq!(p, Parity::Even);

        let bad = BorelSeq::less(2, 2);
        assert!(matches!(
            transport(&Weight::zero(2, 1), &bad, &bad),
            Err(Error::SlotMismatch(_))
        ));
    }

    #[test]
    fn table_examples() {
        let o = |k, n, x, a| omega_table(k, n, x, &OmegaArg::Int(a)).unwrap().to_string();
        assert_eq!(o(OmegaKind::O2, 3, 2, 1), "(0,0,0|0,-1)");
        assert_eq!(o(OmegaKind::O2, 3, 2, 5), "(0,0,-3|-1,-1)");
        assert_eq!(o(OmegaKind::O3, 4, 2, 6), "(1,1,1,1|2,0)");
        assert!(matches!(
            omega_table(OmegaKind::O3, 0, 2, &OmegaArg::Int(1)),
            Err(Error::NonPositiveRank(_))
        ));
        let bad = OmegaArg::Partition(vec![1, 2]);
        assert!(matches!(
            omega_table(OmegaKind::O6, 3, 2, &bad),
            Err(Error::BadPartition(_))
        ));
    }

    #[test]
    fn omega6_branches() {
        let o = |n, x, mu: &[u64]| {
            omega_table(OmegaKind::O6, n, x, &OmegaArg::Partition(mu.to_vec()))
                .unwrap()
                .to_string()
        };
        // μ_1 < x: everything lands on the ε side, columns read from ε_x down.
        assert_eq!(o(3, 3, &[2, 1]), "(0,0,0|0,-1,-2)");
        // μ_1 ≥ x: the overhang beyond x sits on δ_1.
        assert_eq!(o(3, 2, &[4, 1]), "(0,0,-2|-1,-2)");
        assert_eq!(o(2, 1, &[3, 3]), "(-2,-2|-2)");
    }
}
