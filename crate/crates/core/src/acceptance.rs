//! The release checks, one function per criterion. The `acceptance` test
//! target and `superweight selftest` both run them.

use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};

use crate::blocks::{
    block_graph, ext1_dim, kac_structure, representative_sl1_nodes, unique_legal_move, KacStructure,
};
use crate::catalog::{
    family_highest_weight, isomorphic, less_highest_weight, q_hw_space_dim, FamilyKind, FamilySpec,
    Params, SeqSpec,
};
use crate::characters::{
    hook_multiplicities, max_multiplicity_sweep, partitions, super_ext_dim, super_sym_dim,
};
use crate::diagram::{diagram_of, ext1_nonzero, legal_moves, weight_of};
use crate::oddref::{omega_source, omega_table, transport, OmegaArg, OmegaKind};
use crate::parse::parse_weight;
use crate::roots::{positive_roots, roots, AlgebraFamily, BorelSeq, Root, RootParity};
use crate::weight::{central_shift_between, unshift, Parity, ShiftedWeight, Slot, Weight};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub group: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}. {}: {}", self.id, self.name, self.detail)
    }
}

pub type OmegaFn = dyn Fn(OmegaKind, usize, usize, &OmegaArg) -> Result<Weight> + Sync;

fn outcome(
    id: u8,
    group: &'static str,
    name: &'static str,
    r: std::result::Result<String, String>,
) -> Outcome {
    match r {
        Ok(detail) => Outcome {
            id,
            group,
            name,
            passed: true,
            detail,
        },
        Err(detail) => Outcome {
            id,
            group,
            name,
            passed: false,
            detail,
        },
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e2s<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{}: {e}", e.name()))
}

/// 1. `weight_of ∘ diagram_of` is the identity on random dominant weights.
pub fn diagram_bijection() -> Outcome {
    let run = || -> std::result::Result<String, String> {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let samples = 2000;
        for _ in 0..samples {
            let n = rng.gen_range(0..=8);
            let m = rng.gen_range(0..=8);
            let mut a: Vec<i64> = sample(&mut rng, 21, n)
                .into_iter()
                .map(|i| i as i64 - 10)
                .collect();
            let mut b: Vec<i64> = sample(&mut rng, 21, m)
                .into_iter()
                .map(|i| i as i64 - 10)
                .collect();
            a.sort_unstable_by(|x, y| y.cmp(x));
            b.sort_unstable();
            let w = e2s(unshift(&ShiftedWeight::new(a, b)))?;
            let back = e2s(diagram_of(&w).and_then(|f| weight_of(&f, n, m)))?;
            ensure!(back == w, "{w} came back as {back}");
        }
        Ok(format!("{samples} random weights round-trip"))
    };
    outcome(1, "diagram", "diagram bijection", run())
}

/// 2. The chain `(0^n|1−n) → (−1^n|1) → (−1^{n−1},−2|2)`.
pub fn example_chain() -> Outcome {
    let run = || -> std::result::Result<String, String> {
        for n in 2..=10usize {
            let rep = |v: i64, k: usize| vec![v.to_string(); k].join(",");
            let lam = e2s(parse_weight(&format!("({}|{})", rep(0, n), 1 - n as i64)))?;
            let mu = e2s(parse_weight(&format!("({}|1)", rep(-1, n))))?;
            let nu = e2s(parse_weight(&format!(
                "({}{}-2|2)",
                rep(-1, n - 1),
                if n > 1 { "," } else { "" }
            )))?;
            for (x, y) in [(&lam, &mu), (&mu, &nu)] {
                let fx = e2s(diagram_of(x))?;
                let mv =
                    e2s(unique_legal_move(&fx))?.ok_or(format!("n={n}: {x} has no legal move"))?;
                ensure!(
                    mv.result == e2s(diagram_of(y))?,
                    "n={n}: move of {x} does not give {y}"
                );
                ensure!(
                    e2s(ext1_nonzero(x, y, true))?,
                    "n={n}: Ext1({x}, {y}) vanishes"
                );
            }
            ensure!(
                !e2s(ext1_nonzero(&lam, &nu, true))?,
                "n={n}: Ext1 between the chain ends"
            );
        }
        Ok("n = 2..10, each step the unique move".into())
    };
    outcome(2, "diagram", "example chain", run())
}

/// 3. Odd reflections reproduce the closed-form b(<) tables.
pub fn omega_grid_with(table: &OmegaFn) -> Outcome {
    let run = || -> std::result::Result<String, String> {
        let mut checked = 0usize;
        for n in 1..=6usize {
            for x in 1..=4usize {
                let mut args: Vec<(OmegaKind, OmegaArg)> = Vec::new();
                for a in 0..=8u64 {
                    args.push((OmegaKind::O2, OmegaArg::Int(a)));
                    args.push((OmegaKind::O3, OmegaArg::Int(a)));
                }
                for k in 1..=6 {
                    for mu in partitions(k).into_iter().filter(|p| p.len() <= n) {
                        args.push((OmegaKind::O6, OmegaArg::Partition(mu)));
                    }
                }
                for (kind, arg) in args {
                    let src = e2s(omega_source(kind, n, x, &arg))?;
                    let (got, _) = e2s(transport(
                        &src,
                        &BorelSeq::greater(n, x),
                        &BorelSeq::less(n, x),
                    ))?;
                    let want = e2s(table(kind, n, x, &arg))?;
                    ensure!(
                        got == want,
                        "{kind:?} {arg:?} at ({n}|{x}): transport gives {got}, table {want}"
                    );
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} table entries agree"))
    };
    outcome(3, "oddref", "tables vs odd reflections", run())
}

pub fn omega_grid() -> Outcome {
    omega_grid_with(&omega_table)
}

fn seq_at(a: u64, n: usize) -> SeqSpec {
    // Constant a up to n, then the tail n + a keeps the sequence valid.
    SeqSpec {
        prefix: vec![a as i64; n],
        ..SeqSpec::affine(1, a as i64, 0)
    }
}

/// b(<) highest weights at rank `n` of the catalog families over
/// sl(∞|x) with sequence values `a ≤ amax` and partitions of size `≤ pmax`.
pub fn catalog_weights(n: usize, x: u32, amax: u64, pmax: u64) -> Result<Vec<(String, Weight)>> {
    let alg = AlgebraFamily::Sl(x);
    let mut specs = vec![FamilySpec::trivial(alg)];
    for a in 1..=amax {
        for kind in [
            FamilyKind::SinfV,
            FamilyKind::SinfVdual,
            FamilyKind::LinfV,
            FamilyKind::LinfVdual,
        ] {
            specs.push(FamilySpec::new(
                kind,
                Params::Seq(seq_at(a, n)),
                Parity::Even,
                alg,
            )?);
        }
    }
    for k in 1..=pmax {
        for mu in partitions(k).into_iter().filter(|p| p.len() <= n) {
            specs.push(FamilySpec::partition(FamilyKind::SmuV, &mu, alg)?);
            specs.push(FamilySpec::partition(FamilyKind::SmuVdual, &mu, alg)?);
        }
    }
    specs
        .iter()
        .map(|f| Ok((f.to_string(), less_highest_weight(f, n)?.weight)))
        .collect()
}

/// 4. No legal-move image of a catalog weight is a central shift of a
/// catalog weight once `x ≥ 2`.
pub fn no_collision() -> Outcome {
    let run = || -> std::result::Result<String, String> {
        let mut pairs = 0usize;
        for x in 2..=4u32 {
            for n in 3..=8usize {
                // Partitions stay short next to n, as the statement requires.
                let pmax = (n as u64 / 2).min(4);
                let cat = e2s(catalog_weights(n, x, 8, pmax))?;
                for (name, w) in &cat {
                    for mv in legal_moves(&e2s(diagram_of(w))?) {
                        let img = e2s(weight_of(&mv.result, n, x as usize))?;
                        for (other, v) in &cat {
                            pairs += 1;
                            ensure!(
                                e2s(central_shift_between(v, &img))?.is_none(),
                                "sl(inf|{x}) n={n}: moving {name} lands on a shift of {other}"
                            );
                        }
                    }
                }
            }
            let nodes: Vec<FamilySpec> = [
                "Trivial",
                "LinfV[tail:n-1;b:1]",
                "LinfVdual[tail:n-1;b:1]",
                "SmuV[1]",
                "SinfV[tail:n;b:0]",
            ]
            .iter()
            .map(|s| FamilySpec::parse(s, Some(AlgebraFamily::Sl(x))))
            .collect::<Result<_>>()
            .map_err(|e| e.to_string())?;
            for f in &nodes {
                for g in &nodes {
                    ensure!(
                        e2s(ext1_dim(f, g, (3, 8)))?.dim == 0,
                        "Ext1({f}, {g}) over sl(inf|{x})"
                    );
                }
            }
        }
        Ok(format!("{pairs} move images checked, x = 2..4, n = 3..8"))
    };
    outcome(4, "blocks", "no collisions for x >= 2", run())
}

/// 5. The only nontrivial sl(∞|1) block is the trivial module with the two
/// exterior-type limits.
pub fn sl1_block() -> Outcome {
    let run = || -> std::result::Result<String, String> {
        let nodes = representative_sl1_nodes();
        let expected = ["Trivial", "LinfV[tail:n-1;b:1]", "LinfVdual[tail:n-1;b:1]"];
        for hi in 5..=10 {
            let g = e2s(block_graph(&nodes, (3, hi)))?;
            let big = g.nontrivial_components();
            ensure!(
                big.len() == 1,
                "window 3..{hi}: {} nontrivial components",
                big.len()
            );
            let names: Vec<String> = big[0].iter().map(|&i| nodes[i].to_string()).collect();
            ensure!(names == expected, "window 3..{hi}: component {names:?}");
        }
        Ok("one component {Trivial, LinfV, LinfVdual} on windows 3..5 to 3..10".into())
    };
    outcome(5, "blocks", "sl(inf|1) block", run())
}

/// 6. Kac modules of the trivial weight, and typical Kac modules.
pub fn kac_trivial() -> Outcome {
    let run = || -> std::result::Result<String, String> {
        for n in 2..=8usize {
            let k = e2s(kac_structure(&Weight::zero(n, 1), n))?;
            let mut socle = Weight::zero(n, 1);
            socle.left[n - 1] = (-1).into();
            socle.right[0] = 1.into();
            let want = KacStructure::Length2 {
                socle_hw: socle,
                parity_twist: Parity::Odd,
            };
            ensure!(k == want, "n={n}: got {k:?}");
            for typical in [
                format!("(0^{n}|5)"),
                format!("(0^{n}|1/2)"),
                format!("(3^{n}|-1)"),
            ] {
                let k = e2s(kac_structure(&e2s(parse_weight(&typical))?, n))?;
                ensure!(k == KacStructure::Simple, "{typical} should be typical");
            }
        }
        Ok("n = 2..8".into())
    };
    outcome(6, "blocks", "Kac structure", run())
}

/// The frozen maxima of `S^μ(C^{n|1})` weight multiplicities for n = 2..8.
pub const SWEEP_REGRESSION: [(&[u64], [u64; 7]); 3] = [
    (&[2, 1], [2, 2, 2, 2, 2, 2, 2]),
    (&[2, 2], [1, 2, 2, 2, 2, 2, 2]),
    (&[3, 1], [2, 3, 3, 3, 3, 3, 3]),
];

/// 7. Tableau totals against the closed forms, and sweep stabilization.
pub fn character_oracles() -> Outcome {
    let run = || -> std::result::Result<String, String> {
        for a in 1..=8u64 {
            for n in 0..=4usize {
                for m in 0..=4usize {
                    let row = e2s(hook_multiplicities(&[a], n, m))?;
                    ensure!(
                        row.total() == super_sym_dim(a, n as u64, m as u64),
                        "row {a} at ({n}|{m})"
                    );
                    ensure!(
                        row.entries.values().all(|&v| v == 1),
                        "row {a} at ({n}|{m}) repeats a weight"
                    );
                    let col = e2s(hook_multiplicities(&vec![1; a as usize], n, m))?;
                    ensure!(
                        col.total() == super_ext_dim(a, n as u64, m as u64),
                        "column {a} at ({n}|{m})"
                    );
                }
            }
        }
        let mut seen = Vec::new();
        for (mu, frozen) in SWEEP_REGRESSION {
            let s = e2s(max_multiplicity_sweep(mu, (2, 8), 1))?;
            ensure!(
                s[s.len() - 3..].iter().all(|&v| v == s[s.len() - 1]),
                "{mu:?} does not settle: {s:?}"
            );
            ensure!(s == frozen, "{mu:?} sweep {s:?}, frozen {frozen:?}");
            seen.push(format!("{mu:?}->{}", s[s.len() - 1]));
        }
        Ok(format!(
            "totals agree; sweeps settle at {}",
            seen.join(", ")
        ))
    };
    outcome(7, "characters", "character oracles", run())
}

/// 8. Strict partitions, Π-self-equivalence and q highest weight spaces.
pub fn q_rules() -> Outcome {
    let run = || -> std::result::Result<String, String> {
        for bad in ["Qpart[2,2]", "Qpart[3,1,1]", "QpartDual[1,1]", "Qpart[0]"] {
            ensure!(FamilySpec::parse(bad, None).is_err(), "{bad} was accepted");
        }
        for g in ["1", "2", "2,1", "3,1", "3,2,1", "4,3,1", "5,4,2,1"] {
            for kind in ["Qpart", "QpartDual"] {
                let f = e2s(FamilySpec::parse(&format!("{kind}[{g}]"), None))?;
                let k = g.split(',').count();
                ensure!(
                    isomorphic(&f, &f.twisted()) == (k % 2 == 1),
                    "{f}: Pi-self-equivalence wrong for k={k}"
                );
            }
        }
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..20 {
            let len = rng.gen_range(0..=9);
            let right: Vec<i64> = (0..len)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        0
                    } else {
                        rng.gen_range(1..6)
                    }
                })
                .collect();
            let w = Weight::from_ints(&[], &right);
            let nz = right.iter().filter(|&&v| v != 0).count() as u32;
            ensure!(q_hw_space_dim(&w) == 2u64.pow(nz / 2), "{w}");
        }
        let f = e2s(FamilySpec::parse("Qpart[3,1]", None))?;
        let hw = e2s(family_highest_weight(&f, 4))?;
        ensure!(q_hw_space_dim(&hw.weight) == 2, "Qpart[3,1] at rank 4");
        Ok("strictness, Pi rule and 20 dimension cases".into())
    };
    outcome(8, "catalog", "q-type rules", run())
}

fn split(fam: AlgebraFamily, nd: usize, ne: usize) -> Result<(usize, usize)> {
    let rs = roots(fam, nd, ne)?;
    let even = rs.iter().filter(|r| r.parity == RootParity::Even).count();
    Ok((even, rs.len() - even))
}

/// 9. Root counts and positive systems.
pub fn root_sanity() -> Outcome {
    let run = || -> std::result::Result<String, String> {
        let rs = e2s(roots(AlgebraFamily::OspB(1), 1, 1))?;
        ensure!(rs.len() == 10, "ospB(1,1) has {} roots", rs.len());
        ensure!(
            e2s(split(AlgebraFamily::OspB(1), 1, 1))? == (4, 6),
            "ospB(1,1) parity split"
        );
        for ne in 1..=4 {
            let p = e2s(roots(AlgebraFamily::P, 0, ne))?;
            for i in 1..=ne as u32 {
                let e = Slot::eps(i);
                ensure!(
                    p.contains(&Root::new(&[(e, 2)], RootParity::Odd)),
                    "p: 2e{i} missing"
                );
                ensure!(
                    !p.iter().any(|r| r.terms() == [(e, -2)]),
                    "p: -2e{i} present"
                );
            }
        }
        // Each positive-system rule on a few orders and sign maps: the
        // positive roots and their negatives partition the root set.
        let cases: Vec<(AlgebraFamily, BorelSeq)> = vec![
            (AlgebraFamily::Sl(2), BorelSeq::less(3, 2)),
            (AlgebraFamily::Sl(2), BorelSeq::greater(3, 2)),
            (
                AlgebraFamily::Sl(1),
                BorelSeq::new(vec![Slot::delta(1), Slot::eps(1), Slot::delta(2)]),
            ),
            (AlgebraFamily::Q, BorelSeq::less(0, 3)),
            (
                AlgebraFamily::OspB(1),
                BorelSeq::with_sign(vec![Slot::delta(1), Slot::eps(1)], vec![1, 1]),
            ),
            (
                AlgebraFamily::OspB(1),
                BorelSeq::with_sign(vec![Slot::eps(1), Slot::delta(1)], vec![1, -1]),
            ),
            (
                AlgebraFamily::OspC,
                BorelSeq::with_sign(
                    vec![Slot::eps(1), Slot::delta(1), Slot::eps(2)],
                    vec![1, -1, 1],
                ),
            ),
            (
                AlgebraFamily::OspD(1),
                BorelSeq::with_sign(
                    vec![Slot::delta(2), Slot::eps(1), Slot::delta(1)],
                    vec![1, -1, 1],
                ),
            ),
            (
                AlgebraFamily::OspDFin(4),
                BorelSeq::with_sign(
                    vec![Slot::delta(1), Slot::eps(1), Slot::delta(2)],
                    vec![-1, 1, 1],
                ),
            ),
        ];
        let mut covered = 0;
        for (fam, b) in &cases {
            let (nd, ne) = b.counts();
            let all = e2s(roots(*fam, nd, ne))?;
            let pos = e2s(positive_roots(*fam, b))?;
            let neg: std::collections::BTreeSet<Root> = pos.iter().map(Root::neg).collect();
            ensure!(
                pos.is_disjoint(&neg),
                "{fam} {b}: a root and its negative are both positive"
            );
            ensure!(
                pos.union(&neg)
                    .cloned()
                    .collect::<std::collections::BTreeSet<_>>()
                    == all,
                "{fam} {b}: not a partition"
            );
            covered += 1;
        }
        let b = BorelSeq::with_sign(vec![Slot::eps(1), Slot::eps(2)], vec![1, -1]);
        let pos = e2s(positive_roots(AlgebraFamily::P, &b))?;
        ensure!(
            pos.iter().all(|r| e2s(roots(AlgebraFamily::P, 0, 2))
                .map(|a| a.contains(r))
                .unwrap_or(false)),
            "p positives"
        );
        Ok(format!(
            "counts, p asymmetry and {} positive systems",
            covered + 1
        ))
    };
    outcome(9, "roots", "root-system sanity", run())
}

pub const GROUPS: [&str; 6] = [
    "diagram",
    "oddref",
    "blocks",
    "characters",
    "catalog",
    "roots",
];

/// Runs every criterion, or those in one group.
pub fn run_all(only: Option<&str>) -> Vec<Outcome> {
    let checks: [(&str, fn() -> Outcome); 9] = [
        ("diagram", diagram_bijection),
        ("diagram", example_chain),
        ("oddref", omega_grid),
        ("blocks", no_collision),
        ("blocks", sl1_block),
        ("blocks", kac_trivial),
        ("characters", character_oracles),
        ("catalog", q_rules),
        ("roots", root_sanity),
    ];
    checks
        .iter()
        .filter(|(g, _)| only.is_none_or(|o| o == *g))
        .map(|(_, f)| f())
        .collect()
}
