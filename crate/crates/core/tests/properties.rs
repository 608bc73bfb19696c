use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use superweight::blocks::{block_graph, ext1_dim, representative_sl1_nodes};
use superweight::catalog::{
    family_highest_weight, isomorphic, support_contains, FamilySpec, SeqWeight, SupportSet,
};
use superweight::diagram::{diagram_of, weight_of, WeightDiagram};
use superweight::oddref::{transport, transport_by};
use superweight::weight::{unshift, ShiftedWeight};
use superweight::{AlgebraFamily, BorelSeq, Slot, Weight};

fn dominant(a: Vec<i64>, b: Vec<i64>) -> Weight {
    let mut a = a;
    a.sort_unstable_by(|x, y| y.cmp(x));
    let mut b = b;
    b.sort_unstable();
    unshift(&ShiftedWeight::new(a, b)).unwrap()
}

proptest! {
    #[test]
    fn weight_diagram_round_trip(
        a in prop::collection::btree_set(-12i64..12, 0..6),
        b in prop::collection::btree_set(-12i64..12, 0..4),
    ) {
        let (n, m) = (a.len(), b.len());
        let w = dominant(a.into_iter().collect(), b.into_iter().collect());
        let f = diagram_of(&w).unwrap();
        prop_assert_eq!(weight_of(&f, n, m).unwrap(), w);
    }

    #[test]
    fn diagram_weight_round_trip(cells in prop::collection::btree_map(-10i64..10, 0u8..3, 0..8)) {
        let pick = |k: u8| cells.iter().filter(|(_, &s)| s == k).map(|(&z, _)| z).collect::<Vec<_>>();
        let (l, r, x) = (pick(0), pick(1), pick(2));
        let f = WeightDiagram::from_sets(&l, &r, &x).unwrap();
        let w = weight_of(&f, l.len() + x.len(), r.len() + x.len()).unwrap();
        prop_assert_eq!(diagram_of(&w).unwrap(), f);
    }
}

fn all_slots(n: usize, m: usize) -> Vec<Slot> {
    (1..=n as u32)
        .map(Slot::delta)
        .chain((1..=m as u32).map(Slot::eps))
        .collect()
}

#[test]
fn transport_is_path_independent() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        let left = (0..n).map(|_| rng.gen_range(-3..=3)).collect::<Vec<i64>>();
        let right = (0..m).map(|_| rng.gen_range(-3..=3)).collect::<Vec<i64>>();
        let w = Weight::from_ints(&left, &right);
        let mut from = all_slots(n, m);
        from.shuffle(&mut rng);
        let mut to = all_slots(n, m);
        to.shuffle(&mut rng);
        let (from, to) = (BorelSeq::new(from), BorelSeq::new(to));
        let base = transport(&w, &from, &to).unwrap();
        for _ in 0..4 {
            let got = transport_by(&w, &from, &to, &mut |opts| {
                opts[rng.gen_range(0..opts.len())]
            })
            .unwrap();
            assert_eq!(got, base, "{w:?} {from:?} -> {to:?}");
        }
    }
}

#[test]
fn transport_there_and_back() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        let left = (0..n).map(|_| rng.gen_range(-2..=4)).collect::<Vec<i64>>();
        let right = (0..m).map(|_| rng.gen_range(-2..=4)).collect::<Vec<i64>>();
        let w = Weight::from_ints(&left, &right);
        let (lo, hi) = (BorelSeq::less(n, m), BorelSeq::greater(n, m));
        let (v, p) = transport(&w, &lo, &hi).unwrap();
        let (back, q) = transport(&v, &hi, &lo).unwrap();
        assert_eq!(back, w);
        assert_eq!(p, q);
    }
}

const POOL: [&str; 14] = [
    "Trivial",
    "SmuV[]",
    "SmuVdual[]",
    "Natural",
    "SmuV[1]",
    "SmuV[1]!Pi",
    "SmuV[2,1]",
    "SmuVdual[2,1]",
    "SinfV[tail:n;b:1]",
    "SinfV[tail:n;b:0]!Pi",
    "SinfV[a:1,1,1,2;tail:n;b:0]",
    "SinfV[a:2,2,3,4;tail:n;b:0]",
    "LinfV[tail:n-1;b:1]",
    "LinfVdual[tail:n-1;b:1]",
];

#[test]
fn isomorphism_is_an_equivalence() {
    let alg = Some(AlgebraFamily::Sl(1));
    let fs: Vec<FamilySpec> = POOL
        .iter()
        .map(|s| FamilySpec::parse(s, alg).unwrap())
        .collect();
    for f in &fs {
        assert!(isomorphic(f, f), "{f}");
        for g in &fs {
            assert_eq!(isomorphic(f, g), isomorphic(g, f), "{f} {g}");
            for h in &fs {
                if isomorphic(f, g) && isomorphic(g, h) {
                    assert!(isomorphic(f, h), "{f} {g} {h}");
                }
            }
        }
    }
}

#[test]
fn ext1_is_symmetric() {
    let nodes = representative_sl1_nodes();
    for f in &nodes {
        for g in &nodes {
            assert_eq!(
                ext1_dim(f, g, (3, 7)).unwrap(),
                ext1_dim(g, f, (3, 7)).unwrap(),
                "{f} {g}"
            );
        }
    }
}

#[test]
fn blocks_stable_across_windows() {
    let nodes = representative_sl1_nodes();
    let base = block_graph(&nodes, (3, 5)).unwrap();
    for hi in 6..=10 {
        let g = block_graph(&nodes, (3, hi)).unwrap();
        assert_eq!(g.edges, base.edges, "window 3..{hi}");
        assert_eq!(g.components, base.components);
    }
    assert_eq!(base.nontrivial_components(), vec![&vec![0, 1, 2]]);
}

#[test]
fn highest_weight_lies_in_support() {
    for mu in [vec![1u64], vec![2, 1], vec![3, 1], vec![2, 2, 1], vec![4]] {
        let f = FamilySpec::partition(
            superweight::catalog::FamilyKind::SmuV,
            &mu,
            AlgebraFamily::Sl(1),
        )
        .unwrap();
        for n in mu.len()..=7 {
            let h = family_highest_weight(&f, n).unwrap();
            let w = SeqWeight::finite(h.weight.left.clone());
            assert!(
                support_contains(&SupportSet::Smu(mu.clone()), &w).unwrap(),
                "{mu:?} n={n}"
            );
        }
    }
}
