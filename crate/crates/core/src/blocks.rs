//! Kac modules over gl(n|1), Ext¹ between catalog families, and blocks.

use crate::catalog::{isomorphic, less_highest_weight, FamilyKind, FamilySpec, Params};
use crate::diagram::{
    align_central, atypicality, diagram_of, legal_moves, weight_of, LegalMove, WeightDiagram,
};
use crate::error::{Error, Result};
use crate::roots::AlgebraFamily;
use crate::weight::{Parity, Weight};

/// The legal move of a diagram with at most one.
pub fn unique_legal_move(f: &WeightDiagram) -> Result<Option<LegalMove>> {
    let mut moves = legal_moves(f);
    match moves.len() {
        0 => Ok(None),
        1 => Ok(moves.pop()),
        k => Err(Error::MultipleMoves(k)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KacStructure {
    Simple,
    /// Top `L(λ)`, socle `Π^p L(λ_α)`.
    Length2 {
        socle_hw: Weight,
        parity_twist: Parity,
    },
}

pub fn kac_structure(lambda: &Weight, n: usize) -> Result<KacStructure> {
    if lambda.shape() != (n, 1) {
        return Err(Error::ShapeMismatch(format!(
            "expected shape ({n},1), got {:?}",
            lambda.shape()
        )));
    }
    // An integral δ-part against a non-integral ε-mark never pairs to zero.
    if lambda.left.iter().all(|x| x.is_integer()) && !lambda.right[0].is_integer() {
        return Ok(KacStructure::Simple);
    }
    let f = diagram_of(lambda)?;
    if atypicality(&f) == 0 {
        return Ok(KacStructure::Simple);
    }
    match unique_legal_move(&f)? {
        None => Ok(KacStructure::Simple),
        Some(mv) => {
            let socle = weight_of(&mv.result, n, 1)?;
            // Each odd root δ_i − ε subtracted lowers the δ-sum by one.
            let drop = (lambda.left_sum() - socle.left_sum()).to_integer();
            Ok(KacStructure::Length2 {
                socle_hw: socle,
                parity_twist: Parity::of(drop),
            })
        }
    }
}

/// `dim Ext¹` with the parity twist an extension needs: with `twist` odd
/// the nonsplit extension is between `M` and `ΠN` rather than `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ext1 {
    pub dim: u8,
    pub twist: Option<Parity>,
}

impl Ext1 {
    const ZERO: Ext1 = Ext1 {
        dim: 0,
        twist: None,
    };
}

/// At one rank: `Some(twist)` when one highest weight is the socle of the
/// Kac module of the other, after central alignment.
fn related_at(f: &FamilySpec, g: &FamilySpec, n: usize) -> Result<Option<Parity>> {
    let v = less_highest_weight(f, n)?;
    let w = less_highest_weight(g, n)?;
    let w_aligned = match align_central(&v.weight, &w.weight) {
        Ok(x) => x,
        Err(Error::NoIntegralAlignment) => return Ok(None),
        Err(e) => return Err(e),
    };
    let check = |top: &Weight, bottom: &Weight| -> Result<Option<Parity>> {
        match kac_structure(top, n)? {
            KacStructure::Length2 {
                socle_hw,
                parity_twist,
            } if socle_hw == *bottom => Ok(Some(parity_twist)),
            _ => Ok(None),
        }
    };
    let mismatch = |p: Parity| v.parity + w.parity + p;
    if let Some(p) = check(&v.weight, &w_aligned)? {
        return Ok(Some(mismatch(p)));
    }
    if let Some(p) = check(&w_aligned, &v.weight)? {
        return Ok(Some(mismatch(p)));
    }
    Ok(None)
}

fn strict_len(f: &FamilySpec) -> Option<usize> {
    match &f.params {
        Params::Partition(g) => Some(g.len()),
        _ => None,
    }
}

pub fn ext1_dim(f: &FamilySpec, g: &FamilySpec, window: (usize, usize)) -> Result<Ext1> {
    if f.algebra != g.algebra {
        return Err(Error::AlgebraMismatch(format!(
            "{} vs {}",
            f.algebra, g.algebra
        )));
    }
    let (lo, hi) = window;
    let ranks = if hi >= lo { hi - lo + 1 } else { 0 };
    if ranks < 3 {
        return Err(Error::WindowTooSmall(ranks));
    }
    match f.algebra {
        AlgebraFamily::Q => {
            // Self-extensions exist exactly when M ≅ ΠM.
            let odd = |x: &FamilySpec| match x.kind {
                FamilyKind::Trivial => false,
                FamilyKind::Natural => true,
                _ => strict_len(x).is_some_and(|k| k % 2 == 1),
            };
            Ok(if isomorphic(f, g) && odd(f) {
                Ext1 {
                    dim: 1,
                    twist: None,
                }
            } else {
                Ext1::ZERO
            })
        }
        AlgebraFamily::Sl(1) => {
            if f.kind == FamilyKind::GenericSl1 || g.kind == FamilyKind::GenericSl1 {
                return Ok(Ext1::ZERO);
            }
            let verdicts: Vec<Option<Parity>> = (lo..=hi)
                .map(|n| related_at(f, g, n))
                .collect::<Result<_>>()?;
            if let Some(i) = verdicts.windows(2).position(|p| p[0] != p[1]) {
                return Err(Error::UnstableVerdict(lo + i + 1));
            }
            Ok(match verdicts[0] {
                Some(t) => Ext1 {
                    dim: 1,
                    twist: Some(t),
                },
                None => Ext1::ZERO,
            })
        }
        // sl(∞|m) with m ≠ 1, osp and p: the category is semisimple.
        _ => Ok(Ext1::ZERO),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockGraph {
    pub nodes: Vec<FamilySpec>,
    /// `(i, j, twist)` with `i ≤ j`.
    pub edges: Vec<(usize, usize, Option<Parity>)>,
    /// Components as sorted node indices, ordered by their first node.
    pub components: Vec<Vec<usize>>,
}

impl BlockGraph {
    pub fn nontrivial_components(&self) -> Vec<&Vec<usize>> {
        self.components.iter().filter(|c| c.len() > 1).collect()
    }
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut j = i;
    while parent[j] != r {
        let next = parent[j];
        parent[j] = r;
        j = next;
    }
    r
}

pub fn block_graph(nodes: &[FamilySpec], window: (usize, usize)) -> Result<BlockGraph> {
    if let Some(f) = nodes.iter().find(|f| f.algebra != nodes[0].algebra) {
        return Err(Error::AlgebraMismatch(format!(
            "{f} is over {}, not {}",
            f.algebra, nodes[0].algebra
        )));
    }
    let mut edges = Vec::new();
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    for i in 0..nodes.len() {
        for j in i..nodes.len() {
            let e = ext1_dim(&nodes[i], &nodes[j], window)?;
            if e.dim == 1 {
                edges.push((i, j, e.twist));
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut root_of = std::collections::BTreeMap::new();
    for i in 0..nodes.len() {
        let r = find(&mut parent, i);
        let slot = *root_of.entry(r).or_insert_with(|| {
            components.push(Vec::new());
            components.len() - 1
        });
        components[slot].push(i);
    }
    Ok(BlockGraph {
        nodes: nodes.to_vec(),
        edges,
        components,
    })
}

/// The representative sl(∞|1) nodes: the trivial module, the two
/// exterior-type limits with `a_n = n − 1, b = 1`, the natural module, a
/// symmetric-type limit and a generic module.
pub fn representative_sl1_nodes() -> Vec<FamilySpec> {
    let alg = Some(AlgebraFamily::Sl(1));
    [
        "Trivial",
        "LinfV[tail:n-1;b:1]",
        "LinfVdual[tail:n-1;b:1]",
        "SmuV[1]",
        "SinfV[tail:n;b:0]",
        "GenSl1[1/2;borel:<]",
    ]
    .iter()
    .map(|s| FamilySpec::parse(s, alg).expect("valid node"))
    .collect()
}
