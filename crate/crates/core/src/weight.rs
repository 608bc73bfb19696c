//! Exact weights of gl(n|m), the rho-shift and central shifts.
//!
//! A [`Weight`] stores its delta coordinates Borel-first: `left[0]` is the
//! coordinate of `δ_n`, `left[n-1]` the coordinate of `δ_1`. The epsilon
//! coordinates are stored in index order, `right[j-1]` for `ε_j`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::roots::Root;

pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Parity {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        self + Parity::Odd
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u8 {
        self as u8
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Delta,
    Eps,
}

/// A basis functional `δ_i` or `ε_i`, indices from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub kind: Kind,
    pub index: u32,
}

impl Slot {
    pub fn delta(index: u32) -> Slot {
        Slot {
            kind: Kind::Delta,
            index,
        }
    }

    pub fn eps(index: u32) -> Slot {
        Slot {
            kind: Kind::Eps,
            index,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Delta => write!(f, "d{}", self.index),
            Kind::Eps => write!(f, "e{}", self.index),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight {
    pub left: Vec<Q>,
    pub right: Vec<Q>,
}

impl Weight {
    pub fn new(left: Vec<Q>, right: Vec<Q>) -> Weight {
        Weight { left, right }
    }

    pub fn from_ints(left: &[i64], right: &[i64]) -> Weight {
        Weight {
            left: left.iter().map(|&x| q(x)).collect(),
            right: right.iter().map(|&x| q(x)).collect(),
        }
    }

    pub fn zero(n: usize, m: usize) -> Weight {
        Weight {
            left: vec![Q::zero(); n],
            right: vec![Q::zero(); m],
        }
    }

    pub fn n(&self) -> usize {
        self.left.len()
    }

    pub fn m(&self) -> usize {
        self.right.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n(), self.m())
    }

    pub fn is_integral(&self) -> bool {
        self.left.iter().chain(&self.right).all(|x| x.is_integer())
    }

    fn position(&self, s: Slot) -> Result<(bool, usize)> {
        let i = s.index as usize;
        match s.kind {
            Kind::Delta if i >= 1 && i <= self.n() => Ok((true, self.n() - i)),
            Kind::Eps if i >= 1 && i <= self.m() => Ok((false, i - 1)),
            _ => Err(Error::IndexOutOfRange(format!(
                "{s} in shape {:?}",
                self.shape()
            ))),
        }
    }

    pub fn get(&self, s: Slot) -> Result<Q> {
        let (l, i) = self.position(s)?;
        Ok(if l { self.left[i] } else { self.right[i] })
    }

    pub fn set(&mut self, s: Slot, v: Q) -> Result<()> {
        let (l, i) = self.position(s)?;
        if l {
            self.left[i] = v;
        } else {
            self.right[i] = v;
        }
        Ok(())
    }

    /// Adds `k * s` to the weight.
    pub fn add_slot(&mut self, s: Slot, k: Q) -> Result<()> {
        let v = self.get(s)?;
        self.set(s, v + k)
    }

    /// Adds a root, viewed as an element of the weight lattice.
    pub fn add_root(&self, r: &Root, sign: i64) -> Result<Weight> {
        let mut w = self.clone();
        for &(s, c) in r.terms() {
            w.add_slot(s, q(c as i64 * sign))?;
        }
        Ok(w)
    }

    pub fn left_sum(&self) -> Q {
        self.left.iter().copied().sum()
    }

    pub fn right_sum(&self) -> Q {
        self.right.iter().copied().sum()
    }

    fn zip_with(&self, other: &Weight, op: impl Fn(Q, Q) -> Q) -> Weight {
        assert_eq!(self.shape(), other.shape(), "weights of different shapes");
        Weight {
            left: self
                .left
                .iter()
                .zip(&other.left)
                .map(|(&x, &y)| op(x, y))
                .collect(),
            right: self
                .right
                .iter()
                .zip(&other.right)
                .map(|(&x, &y)| op(x, y))
                .collect(),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |x, y| x - y)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            left: self.left.iter().map(|x| -x).collect(),
            right: self.right.iter().map(|x| -x).collect(),
        }
    }
}

fn write_coords(f: &mut fmt::Formatter<'_>, xs: &[Q]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_coords(f, &self.left)?;
        f.write_str("|")?;
        write_coords(f, &self.right)?;
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedWeight {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub dominant: bool,
}

impl ShiftedWeight {
    /// Builds a shifted weight and sets the dominance flag from the marks.
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> ShiftedWeight {
        let dominant = a.windows(2).all(|w| w[0] > w[1]) && b.windows(2).all(|w| w[0] < w[1]);
        ShiftedWeight { a, b, dominant }
    }
}

/// `ρ(n|m) = (n, …, 1 | −1, …, −m)`.
pub fn rho(n: usize, m: usize) -> Weight {
    Weight {
        left: (1..=n as i64).rev().map(q).collect(),
        right: (1..=m as i64).map(|j| q(-j)).collect(),
    }
}

fn integer(x: &Q) -> Result<i64> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NonIntegralWeight(x.to_string()))
    }
}

pub fn shift(w: &Weight) -> Result<ShiftedWeight> {
    let n = w.n() as i64;
    let a = w
        .left
        .iter()
        .enumerate()
        .map(|(i, x)| Ok(integer(x)? + n - i as i64))
        .collect::<Result<Vec<_>>>()?;
    let b = w
        .right
        .iter()
        .enumerate()
        .map(|(j, x)| Ok(j as i64 + 1 - integer(x)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(ShiftedWeight::new(a, b))
}

pub fn unshift(s: &ShiftedWeight) -> Result<Weight> {
    if !ShiftedWeight::new(s.a.clone(), s.b.clone()).dominant {
        return Err(Error::NotDominant);
    }
    let n = s.a.len() as i64;
    Ok(Weight {
        left: s
            .a
            .iter()
            .enumerate()
            .map(|(i, &a)| q(a - (n - i as i64)))
            .collect(),
        right: s
            .b
            .iter()
            .enumerate()
            .map(|(j, &b)| q(j as i64 + 1 - b))
            .collect(),
    })
}

pub fn central_shift(w: &Weight, c: Q) -> Weight {
    Weight {
        left: w.left.iter().map(|x| x + c).collect(),
        right: w.right.iter().map(|x| x - c).collect(),
    }
}

/// The `c` with `w = central_shift(v, c)`, if there is one.
pub fn central_shift_between(v: &Weight, w: &Weight) -> Result<Option<Q>> {
    if v.shape() != w.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{:?} vs {:?}",
            v.shape(),
            w.shape()
        )));
    }
    let c = if let (Some(x), Some(y)) = (v.left.first(), w.left.first()) {
        y - x
    } else if let (Some(x), Some(y)) = (v.right.first(), w.right.first()) {
        x - y
    } else {
        Q::zero()
    };
    Ok((central_shift(v, c) == *w).then_some(c))
}

/// The invariant form with `(δ_i, δ_i) = 1` and `(ε_j, ε_j) = −1`.
pub fn pairing(w: &Weight, r: &Root) -> Result<Q> {
    let mut acc = Q::zero();
    for &(s, c) in r.terms() {
        let x = w.get(s)?;
        acc += match s.kind {
            Kind::Delta => x * q(c as i64),
            Kind::Eps => -x * q(c as i64),
        };
    }
    Ok(acc)
}

pub fn c_of(w: &Weight) -> Q {
    w.left_sum() + w.right_sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Root;

    fn w(l: &[i64], r: &[i64]) -> Weight {
        Weight::from_ints(l, r)
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(3, 2), w(&[3, 2, 1], &[-1, -2]));
        assert_eq!(rho(0, 0), Weight::default());
        assert_eq!(rho(1, 3), w(&[1], &[-1, -2, -3]));
    }

    #[test]
    fn shift_examples() {
        let s = shift(&w(&[0, 0], &[0])).unwrap();
        assert_eq!((s.a, s.b, s.dominant), (vec![2, 1], vec![1], true));
        let s = shift(&w(&[0, 0, 0, 0], &[-3])).unwrap();
        assert_eq!((s.a, s.b, s.dominant), (vec![4, 3, 2, 1], vec![4], true));
        let s = shift(&w(&[1, 2], &[0])).unwrap();
        assert_eq!((s.a, s.dominant), (vec![3, 3], false));
        let half = Weight::new(vec![q(0)], vec![Q::new(1, 2)]);
        assert!(matches!(shift(&half), Err(Error::NonIntegralWeight(_))));
    }

    #[test]
    fn unshift_examples() {
        let u = |a: Vec<i64>, b: Vec<i64>| unshift(&ShiftedWeight::new(a, b)).unwrap();
        assert_eq!(u(vec![3, 2, 0], vec![0]), w(&[0, 0, -1], &[1]));
        assert_eq!(u(vec![2, 1], vec![1]), w(&[0, 0], &[0]));
        assert_eq!(u(vec![5, 1], vec![3]), w(&[3, 0], &[-2]));
        let bad = ShiftedWeight::new(vec![1, 2], vec![]);
        assert_eq!(unshift(&bad), Err(Error::NotDominant));
    }

    #[test]
    fn central_shifts() {
        assert_eq!(central_shift(&w(&[0, 0], &[0]), q(1)), w(&[1, 1], &[-1]));
        assert_eq!(
            central_shift(&w(&[-1, -1], &[1]), q(-1)),
            w(&[-2, -2], &[2])
        );
        assert_eq!(central_shift(&Weight::default(), q(5)), Weight::default());
        let z = w(&[0, 0], &[0]);
        assert_eq!(
            central_shift_between(&z, &w(&[1, 1], &[-1])).unwrap(),
            Some(q(1))
        );
        assert_eq!(central_shift_between(&z, &w(&[1, 1], &[1])).unwrap(), None);
        assert_eq!(
            central_shift_between(&w(&[0, -1], &[2]), &w(&[2, 1], &[0])).unwrap(),
            Some(q(2))
        );
        assert!(central_shift_between(&z, &w(&[0], &[0])).is_err());
        assert_eq!(
            central_shift_between(&w(&[], &[3]), &w(&[], &[1])).unwrap(),
            Some(q(2))
        );
    }

    #[test]
    fn pairing_examples() {
        let a = Root::odd(&[(Slot::delta(1), 1), (Slot::eps(1), -1)]);
        assert_eq!(pairing(&w(&[1], &[0]), &a).unwrap(), q(1));
        assert_eq!(pairing(&w(&[1], &[-1]), &a).unwrap(), q(0));
        // δ_2 is the first left coordinate, so this reads 2 + (−3).
        let shifted = &w(&[0, 0], &[-2]) + &rho(2, 1);
        let b = Root::odd(&[(Slot::delta(2), 1), (Slot::eps(1), -1)]);
        assert_eq!(pairing(&shifted, &b).unwrap(), q(-1));
        let far = Root::odd(&[(Slot::delta(3), 1), (Slot::eps(1), -1)]);
        assert!(matches!(
            pairing(&shifted, &far),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn c_of_examples() {
        assert_eq!(c_of(&w(&[0, 0], &[0])), q(0));
        assert_eq!(c_of(&w(&[0, 0, 0], &[-2])), q(-2));
        assert_eq!(c_of(&w(&[-1, -2], &[2])), q(-1));
    }

    #[test]
    fn parity_arithmetic() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::of(-3), Parity::Odd);
        assert_eq!(Parity::Even.flip(), Parity::Odd);
    }
}
