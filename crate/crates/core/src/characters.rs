//! Dimension formulas for super symmetric and exterior powers, and weight
//! multiplicities of `S^μ(C^{n|m})` by hook tableau enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::weight::{Parity, Weight, Q};

pub const DEFAULT_BUDGET: usize = 12;

/// The cap on `|μ|`, read from `SUPERWEIGHT_BUDGET`.
pub fn budget() -> usize {
    std::env::var("SUPERWEIGHT_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `dim S^a(C^{n|m}) = Σ_{i+j=a} C(n+i−1, i)·C(m, j)`.
pub fn super_sym_dim(a: u64, n: u64, m: u64) -> u128 {
    (0..=a).map(|i| sym_count(i, n) * binom(m, a - i)).sum()
}

/// `dim Λ^a(C^{n|m}) = Σ_{i+j=a} C(n, i)·C(m+j−1, j)`.
pub fn super_ext_dim(a: u64, n: u64, m: u64) -> u128 {
    (0..=a).map(|i| binom(n, i) * sym_count(a - i, m)).sum()
}

/// `C(n+i−1, i)`, the number of degree-`i` monomials in `n` variables.
fn sym_count(i: u64, n: u64) -> u128 {
    if n == 0 {
        (i == 0) as u128
    } else {
        binom(n + i - 1, i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub entries: BTreeMap<Weight, u64>,
    /// `(even, odd)` dimensions.
    pub total_dim: (u128, u128),
}

impl MultiplicityTable {
    pub fn total(&self) -> u128 {
        self.total_dim.0 + self.total_dim.1
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.entries.values().copied().max().unwrap_or(0)
    }
}

fn check_partition(mu: &[u64]) -> Result<()> {
    if mu.contains(&0) || mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BadPartition(format!(
            "{mu:?} is not weakly decreasing and positive"
        )));
    }
    Ok(())
}

struct Enum<'a> {
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    n: usize,
    m: usize,
    counts: Vec<u64>,
    out: &'a mut MultiplicityTable,
}

impl Enum<'_> {
    fn allowed(&self, r: usize, c: usize, v: usize) -> bool {
        let primed = v >= self.n;
        if c > 0 {
            let l = self.grid[r][c - 1];
            if v < l || (v == l && primed) {
                return false;
            }
        }
        if r > 0 {
            let u = self.grid[r - 1][c];
            if v < u || (v == u && !primed) {
                return false;
            }
        }
        true
    }

    fn go(&mut self, k: usize) {
        if k == self.cells.len() {
            let left = self.counts[..self.n]
                .iter()
                .map(|&x| Q::from_integer(x as i64))
                .collect();
            let right = self.counts[self.n..]
                .iter()
                .map(|&x| Q::from_integer(x as i64))
                .collect();
            *self
                .out
                .entries
                .entry(Weight::new(left, right))
                .or_insert(0) += 1;
            let odd: u64 = self.counts[self.n..].iter().sum();
            match Parity::of(odd as i64) {
                Parity::Even => self.out.total_dim.0 += 1,
                Parity::Odd => self.out.total_dim.1 += 1,
            }
            return;
        }
        let (r, c) = self.cells[k];
        for v in 0..self.n + self.m {
            if self.allowed(r, c, v) {
                self.grid[r][c] = v;
                self.counts[v] += 1;
                self.go(k + 1);
                self.counts[v] -= 1;
            }
        }
    }
}

/// Weight multiplicities of `S^μ(C^{n|m})`, read off `(n|m)` hook
/// tableaux: letters `1 < … < n < 1' < … < m'`, rows weakly increasing
/// with primed letters not repeated, columns strictly increasing with
/// primed letters allowed to repeat. Content of `i` goes to `left[i−1]`,
/// content of `j'` to `right[j−1]`; the parity is the primed count.
pub fn hook_multiplicities(mu: &[u64], n: usize, m: usize) -> Result<MultiplicityTable> {
    hook_multiplicities_with(mu, n, m, budget())
}

pub fn hook_multiplicities_with(
    mu: &[u64],
    n: usize,
    m: usize,
    budget: usize,
) -> Result<MultiplicityTable> {
    check_partition(mu)?;
    let size: u64 = mu.iter().sum();
    if size as usize > budget {
        return Err(Error::BudgetExceeded {
            size: size as usize,
            budget,
        });
    }
    let cells = mu
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let grid = mu.iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = MultiplicityTable {
        entries: BTreeMap::new(),
        total_dim: (0, 0),
    };
    Enum {
        cells,
        grid,
        n,
        m,
        counts: vec![0; n + m],
        out: &mut out,
    }
    .go(0);
    Ok(out)
}

/// `max_λ dim S^μ(C^{n|m})^λ` for each `n` in `lo..=hi`, computed in
/// parallel and returned in rank order.
pub fn max_multiplicity_sweep(mu: &[u64], range: (usize, usize), m: usize) -> Result<Vec<u64>> {
    let b = budget();
    (range.0..=range.1)
        .into_par_iter()
        .map(|n| hook_multiplicities_with(mu, n, m, b).map(|t| t.max_multiplicity()))
        .collect()
}

/// All partitions of `total`, largest parts first, in reverse lexicographic order.
pub fn partitions(total: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard tableaux of shape `μ` with entries `≤ n`, by the
/// hook-content formula.
pub fn ssyt_count(mu: &[u64], n: u64) -> u128 {
    let conj = |c: usize| mu.iter().filter(|&&len| len as usize > c).count();
    let (mut num, mut den) = (1u128, 1u128);
    for (r, &len) in mu.iter().enumerate() {
        for c in 0..len as usize {
            let content = n as i64 + c as i64 - r as i64;
            if content <= 0 {
                return 0;
            }
            num *= content as u128;
            den *= (len as usize - c + conj(c) - r - 1) as u128;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(super_sym_dim(0, 3, 2), 1);
        assert_eq!(super_sym_dim(2, 1, 1), 2);
        assert_eq!(super_sym_dim(3, 2, 1), 7);
        assert_eq!(super_ext_dim(2, 1, 1), 2);
        assert_eq!(super_ext_dim(4, 4, 0), 1);
        // Every subset of the three even vectors, times the odd power.
        assert_eq!(super_ext_dim(8, 3, 1), 8);
        assert_eq!(super_sym_dim(3, 0, 2), 0);
    }

    #[test]
    fn convolution() {
        for a in 0..6 {
            for (n, m, n2, m2) in [(1, 0, 1, 1), (2, 1, 1, 2), (0, 2, 3, 0), (2, 2, 1, 1)] {
                let lhs = super_sym_dim(a, n + n2, m + m2);
                let rhs: u128 = (0..=a)
                    .map(|b| super_sym_dim(b, n, m) * super_sym_dim(a - b, n2, m2))
                    .sum();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn tableau_examples() {
        let col = hook_multiplicities(&[1, 1], 1, 1).unwrap();
        assert_eq!(col.total(), 2);
        let nat = hook_multiplicities(&[1], 2, 3).unwrap();
        assert_eq!(nat.entries.len(), 5);
        assert_eq!(nat.max_multiplicity(), 1);
        assert_eq!(nat.total_dim, (2, 3));
        for a in 1..=5 {
            let row = hook_multiplicities(&[a; 1], 2, 2).unwrap();
            assert_eq!(row.max_multiplicity(), 1);
            assert_eq!(row.total(), super_sym_dim(a, 2, 2));
        }
        assert_eq!(
            hook_multiplicities_with(&[5, 5, 3], 2, 1, 12),
            Err(Error::BudgetExceeded {
                size: 13,
                budget: 12
            })
        );
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=7).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn kostka_totals() {
        for mu in [
            vec![1],
            vec![2, 1],
            vec![3, 2, 1],
            vec![2, 2],
            vec![1, 1, 1],
            vec![4, 2],
        ] {
            for n in 1..=5 {
                let t = hook_multiplicities(&mu, n, 0).unwrap();
                assert_eq!(t.total(), ssyt_count(&mu, n as u64), "{mu:?} n={n}");
            }
        }
    }
}
