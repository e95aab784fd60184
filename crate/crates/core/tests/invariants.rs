//! Algebraic invariants of groups, power graphs and number-theory helpers.

use proptest::prelude::*;

use powcut::cyclic::maximal_cyclic_subgroups;
use powcut::number_theory::{euler_phi, factorize, gcd, is_prime, solve_congruence};
use powcut::{AbelianSpec, Group, PowerGraph, VertexSet};

fn arb_spec() -> impl Strategy<Value = AbelianSpec> {
    proptest::collection::vec((prop::sample::select(vec![2u64, 3, 5, 7]), 1u32..=2), 1..=3)
        .prop_filter_map("order cap", |f| {
            let order: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            (order <= 200).then(|| AbelianSpec::new(f).unwrap())
        })
}

fn arb_group() -> impl Strategy<Value = Group> {
    prop_oneof![
        3 => arb_spec().prop_map(|s| Group::make_abelian(s).unwrap()),
        1 => (1u64..=100).prop_map(|n| Group::make_cyclic(n).unwrap()),
        1 => (3u32..=5).prop_map(|k| Group::make_generalized_quaternion(1 << k).unwrap()),
        1 => (3u64..=12).prop_map(|n| Group::make_dihedral(2 * n).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lagrange_and_closure(g in arb_group()) {
        for x in 0..g.size() {
            let o = g.element_order(x);
            prop_assert_eq!(g.order() % o, 0);
            prop_assert_eq!(g.pow(x, o), 0);
            prop_assert_eq!(g.cyclic_closure(x).len() as u64, o);
            prop_assert_eq!(g.mul(x, g.inverse(x)), 0);
        }
    }

    #[test]
    fn generator_classes_partition(g in arb_group()) {
        let mut seen = VertexSet::new(g.size());
        for c in g.generator_classes() {
            prop_assert!(!seen.intersects(&c));
            seen.union_with(&c);
            let x = c.first().unwrap();
            prop_assert_eq!(c.len() as u64, euler_phi(g.element_order(x)));
            for y in &c {
                prop_assert_eq!(g.cyclic_closure(y), g.cyclic_closure(x));
            }
        }
        prop_assert_eq!(seen.len(), g.size());
    }

    #[test]
    fn sylow_projections_reconstruct(g in arb_group()) {
        if let Ok(syl) = g.sylow_decomposition() {
            let sizes: u64 = (0..syl.rank()).map(|i| syl.subgroup(i).len() as u64).product();
            prop_assert_eq!(sizes, g.order());
            prop_assert!(syl.projections(0).iter().all(|&c| c == 0));
            for x in 0..g.size() {
                let back = syl.projections(x).iter().fold(0, |acc, &c| g.mul(acc, c));
                prop_assert_eq!(back, x);
                for i in 0..syl.rank() {
                    prop_assert!(syl.subgroup(i).contains(syl.project(x, i)));
                }
            }
        } else {
            prop_assert!(!g.is_nilpotent());
        }
    }

    #[test]
    fn power_graph_adjacency(g in arb_group()) {
        let pg = PowerGraph::build(&g);
        for a in 0..g.size() {
            prop_assert!(!pg.is_adjacent(a, a));
            for b in 0..g.size() {
                let expect = a != b && (g.cyclic_closure(a).contains(b) || g.cyclic_closure(b).contains(a));
                prop_assert_eq!(pg.is_adjacent(a, b), expect);
                prop_assert_eq!(pg.is_adjacent(a, b), pg.is_adjacent(b, a));
            }
        }
        prop_assert_eq!(pg.degree(0), g.size() - 1);
    }

    #[test]
    fn maximal_cyclics_cover(g in arb_group()) {
        let ms = maximal_cyclic_subgroups(&g);
        let mut cover = VertexSet::new(g.size());
        for m in &ms {
            cover.union_with(&m.elements);
            for other in &ms {
                prop_assert!(other == m || !m.elements.is_subset(&other.elements));
            }
        }
        prop_assert_eq!(cover.len(), g.size());
        prop_assert_eq!(ms.len() == 1, g.is_cyclic());
    }

    #[test]
    fn congruence_by_scan(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
                          q in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
                          r in 1u32..=4, m in 0u64..10_000) {
        prop_assume!(p != q);
        let qr = q.pow(r);
        let l = solve_congruence(p, m, qr).unwrap();
        prop_assert!(l < qr);
        let scan = (0..qr).find(|&x| (p * x) % qr == m % qr).unwrap();
        prop_assert_eq!(l, scan);
    }
}

#[test]
fn phi_against_coprime_count() {
    for n in 1..=1000u64 {
        let count = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
        assert_eq!(euler_phi(n), count, "{n}");
    }
}

#[test]
fn factorize_reconstructs() {
    for n in 1..=5000u64 {
        let f = factorize(n);
        assert_eq!(f.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
        assert!(f.iter().all(|&(p, _)| is_prime(p)));
        assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
    }
}

#[test]
fn congruence_rejects_bad_input() {
    assert!(solve_congruence(4, 1, 9).is_err());
    assert!(solve_congruence(3, 1, 9).is_err());
    assert!(solve_congruence(3, 1, 12).is_err());
}

#[test]
fn cayley_table_validation() {
    // Z/3 written as a table
    let table: Vec<u32> = (0..9).map(|k| ((k / 3 + k % 3) % 3) as u32).collect();
    let g = Group::from_table("Z3", 3, table).unwrap();
    assert!(g.is_cyclic());
    // not associative: a*b = b for a != 0 breaks identity axioms
    let broken = vec![0, 1, 2, 1, 1, 0, 2, 0, 1];
    assert!(Group::from_table("bad", 3, broken).is_err());
}
