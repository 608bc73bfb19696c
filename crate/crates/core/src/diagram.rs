//! Weight diagrams of dominant integral gl(n|m) weights and legal moves.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::weight::{c_of, central_shift, shift, unshift, ShiftedWeight, Weight, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// `>`: a left mark only.
    Left,
    /// `<`: a right mark only.
    Right,
    /// `×`: both marks.
    Cross,
    /// `∘`: neither.
    Empty,
}

impl Symbol {
    pub fn ascii(self) -> char {
        match self {
            Symbol::Left => '>',
            Symbol::Right => '<',
            Symbol::Cross => 'x',
            Symbol::Empty => 'o',
        }
    }
}

/// A finitely supported map `Z → {<, >, ×, ∘}`; only non-`∘` entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeightDiagram {
    symbols: BTreeMap<i64, Symbol>,
}

impl WeightDiagram {
    pub fn from_sets(core_l: &[i64], core_r: &[i64], crosses: &[i64]) -> Result<WeightDiagram> {
        let mut symbols = BTreeMap::new();
        for (set, sym) in [
            (core_l, Symbol::Left),
            (core_r, Symbol::Right),
            (crosses, Symbol::Cross),
        ] {
            for &z in set {
                if symbols.insert(z, sym).is_some() {
                    return Err(Error::ShapeMismatch(format!("position {z} given twice")));
                }
            }
        }
        Ok(WeightDiagram { symbols })
    }

    pub fn get(&self, z: i64) -> Symbol {
        self.symbols.get(&z).copied().unwrap_or(Symbol::Empty)
    }

    fn positions(&self, sym: Symbol) -> Vec<i64> {
        self.symbols
            .iter()
            .filter(|(_, &s)| s == sym)
            .map(|(&z, _)| z)
            .collect()
    }

    /// Positions of `>`, ascending.
    pub fn core_left(&self) -> Vec<i64> {
        self.positions(Symbol::Left)
    }

    /// Positions of `<`, ascending.
    pub fn core_right(&self) -> Vec<i64> {
        self.positions(Symbol::Right)
    }

    /// Positions of `×`, ascending.
    pub fn crosses(&self) -> Vec<i64> {
        self.positions(Symbol::Cross)
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        Some((
            *self.symbols.keys().next()?,
            *self.symbols.keys().next_back()?,
        ))
    }

    /// Moves the symbol at `from` to the empty position `to`.
    fn relocate(&self, from: i64, to: i64) -> WeightDiagram {
        let mut g = self.clone();
        let s = g.symbols.remove(&from).expect("source occupied");
        g.symbols.insert(to, s);
        g
    }

    /// Two lines over `[min−2, max+2]`: an index ruler and the symbols.
    pub fn render(&self) -> String {
        let (lo, hi) = self.support().unwrap_or((0, 0));
        let (lo, hi) = (lo - 2, hi + 2);
        let width = (lo..=hi).map(|z| z.to_string().len()).max().unwrap_or(1) + 1;
        let mut ruler = String::new();
        let mut line = String::new();
        for z in lo..=hi {
            let _ = write!(ruler, "{:>width$}", z);
            let _ = write!(line, "{:>width$}", self.get(z).ascii());
        }
        format!("{ruler}\n{line}\n")
    }
}

pub fn diagram_of(w: &Weight) -> Result<WeightDiagram> {
    let s = shift(w)?;
    if !s.dominant {
        return Err(Error::NotDominant);
    }
    let mut symbols = BTreeMap::new();
    for &a in &s.a {
        symbols.insert(a, Symbol::Left);
    }
    for &b in &s.b {
        let sym = if symbols.contains_key(&b) {
            Symbol::Cross
        } else {
            Symbol::Right
        };
        symbols.insert(b, sym);
    }
    Ok(WeightDiagram { symbols })
}

pub fn weight_of(f: &WeightDiagram, n: usize, m: usize) -> Result<Weight> {
    let x = f.crosses();
    let mut a: Vec<i64> = f.core_left().into_iter().chain(x.iter().copied()).collect();
    let mut b: Vec<i64> = f
        .core_right()
        .into_iter()
        .chain(x.iter().copied())
        .collect();
    if a.len() != n || b.len() != m {
        return Err(Error::ShapeMismatch(format!(
            "diagram has {} left and {} right marks, shape is ({n},{m})",
            a.len(),
            b.len()
        )));
    }
    a.sort_unstable_by(|p, q| q.cmp(p));
    b.sort_unstable();
    unshift(&ShiftedWeight::new(a, b))
}

/// `#f`, the number of crosses.
pub fn atypicality(f: &WeightDiagram) -> usize {
    f.crosses().len()
}

/// `#× − #∘` strictly between `b` and `a`.
pub fn l_count(f: &WeightDiagram, b: i64, a: i64) -> Result<i64> {
    if b >= a {
        return Err(Error::BadInterval { b, a });
    }
    Ok((b + 1..a)
        .map(|z| match f.get(z) {
            Symbol::Cross => 1,
            Symbol::Empty => -1,
            _ => 0,
        })
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegalMove {
    pub a: i64,
    pub b: i64,
    pub result: WeightDiagram,
}

pub fn legal_moves(f: &WeightDiagram) -> Vec<LegalMove> {
    let Some((lo, _)) = f.support() else {
        return Vec::new();
    };
    let mut crosses = f.crosses();
    crosses.reverse();
    let mut out = Vec::new();
    for a in crosses {
        // Below the support every further step adds one more ∘, so the
        // count only decreases once it is negative there.
        let mut l = 0i64;
        let mut b = a - 1;
        loop {
            match f.get(b) {
                Symbol::Empty if l == 0 => out.push(LegalMove {
                    a,
                    b,
                    result: f.relocate(a, b),
                }),
                _ => {}
            }
            l += match f.get(b) {
                Symbol::Cross => 1,
                Symbol::Empty => -1,
                _ => 0,
            };
            if b < lo && l < 0 {
                break;
            }
            b -= 1;
        }
    }
    out
}

/// Shifts `w` centrally so that `c_of` agrees with `v`.
pub fn align_central(v: &Weight, w: &Weight) -> Result<Weight> {
    if v.shape() != w.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{:?} vs {:?}",
            v.shape(),
            w.shape()
        )));
    }
    let (n, m) = v.shape();
    let diff = c_of(v) - c_of(w);
    if n == m {
        return if diff == Q::from_integer(0) {
            Ok(w.clone())
        } else {
            Err(Error::NoIntegralAlignment)
        };
    }
    let c = diff / Q::from_integer(n as i64 - m as i64);
    if !c.is_integer() {
        return Err(Error::NoIntegralAlignment);
    }
    Ok(central_shift(w, c))
}

/// Whether one diagram is a single legal move away from the other.
pub fn related_by_move(f: &WeightDiagram, g: &WeightDiagram) -> bool {
    legal_moves(f).iter().any(|mv| mv.result == *g)
        || legal_moves(g).iter().any(|mv| mv.result == *f)
}

pub fn ext1_nonzero(v: &Weight, w: &Weight, align: bool) -> Result<bool> {
    if v.shape() != w.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{:?} vs {:?}",
            v.shape(),
            w.shape()
        )));
    }
    let w = if align {
        align_central(v, w)?
    } else {
        w.clone()
    };
    Ok(related_by_move(&diagram_of(v)?, &diagram_of(&w)?))
}
