//! Connectivity and cut-set routines against exhaustive subset oracles.

use proptest::prelude::*;

use powcut::connectivity::{
    all_minimal_cutsets, all_minimum_cutsets, canonical_listing, minimum_vertex_cut, vertex_connectivity,
    DEFAULT_SEARCH_LIMIT,
};
use powcut::{AbelianSpec, Group, PowerGraph, VertexSet};

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Plain adjacency-matrix BFS, independent of the library's bitsets.
fn disconnected_after(adj: &[Vec<bool>], removed: &[usize]) -> bool {
    let n = adj.len();
    let alive: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    let mut seen = vec![false; n];
    let mut stack = vec![alive[0]];
    seen[alive[0]] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &alive {
            if adj[u][w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count < alive.len()
}

fn matrix(g: &PowerGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n).map(|a| (0..n).map(|b| g.is_adjacent(a, b)).collect()).collect()
}

/// Smallest disconnecting set size, or `n - 1` when none exists.
fn brute_kappa(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    for k in 0..n.saturating_sub(1) {
        if subsets_of_size(n, k).iter().any(|s| disconnected_after(adj, s)) {
            return k;
        }
    }
    n - 1
}

fn brute_minimum_cutsets(adj: &[Vec<bool>], k: usize) -> Vec<Vec<usize>> {
    subsets_of_size(adj.len(), k)
        .into_iter()
        .filter(|s| disconnected_after(adj, s))
        .collect()
}

fn brute_minimal_cutsets(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut cuts: Vec<Vec<usize>> = Vec::new();
    for k in 0..n.saturating_sub(1) {
        for s in subsets_of_size(n, k) {
            if disconnected_after(adj, &s) {
                cuts.push(s);
            }
        }
    }
    let is_sub = |a: &Vec<usize>, b: &Vec<usize>| a.len() < b.len() && a.iter().all(|x| b.contains(x));
    let mut minimal: Vec<Vec<usize>> = cuts
        .iter()
        .filter(|b| !cuts.iter().any(|a| is_sub(a, b)))
        .cloned()
        .collect();
    minimal.sort();
    minimal
}

fn small_groups() -> Vec<Group> {
    let mut out = Vec::new();
    for n in 2..=16 {
        out.push(Group::make_cyclic(n).unwrap());
    }
    for f in [
        vec![(2, 1), (2, 1)],
        vec![(2, 1), (2, 1), (2, 1)],
        vec![(2, 1), (2, 2)],
        vec![(3, 1), (3, 1)],
        vec![(2, 1), (2, 1), (3, 1)],
    ] {
        out.push(Group::make_abelian(AbelianSpec::new(f).unwrap()).unwrap());
    }
    out.push(Group::make_generalized_quaternion(8).unwrap());
    for n in [6, 8, 10, 12, 14] {
        out.push(Group::make_dihedral(n).unwrap());
    }
    out
}

#[test]
fn kappa_matches_subset_oracle_on_small_groups() {
    for grp in small_groups() {
        let g = PowerGraph::build(&grp);
        let adj = matrix(&g);
        assert_eq!(vertex_connectivity(&g).unwrap(), brute_kappa(&adj), "{}", grp.name());
    }
}

#[test]
fn minimum_cutsets_match_subset_oracle() {
    for grp in small_groups() {
        let g = PowerGraph::build(&grp);
        if g.is_complete() {
            continue;
        }
        let adj = matrix(&g);
        let k = vertex_connectivity(&g).unwrap();
        let found = all_minimum_cutsets(&g, &grp.generator_classes(), k, DEFAULT_SEARCH_LIMIT).unwrap();
        assert_eq!(canonical_listing(&found), brute_minimum_cutsets(&adj, k), "{}", grp.name());
        let one = minimum_vertex_cut(&g).unwrap().cut.unwrap();
        assert!(found.contains(&one), "{}", grp.name());
    }
}

#[test]
fn minimal_cutsets_match_subset_oracle() {
    for grp in small_groups().into_iter().filter(|g| g.size() <= 14) {
        let g = PowerGraph::build(&grp);
        let adj = matrix(&g);
        let found = all_minimal_cutsets(&g, DEFAULT_SEARCH_LIMIT).unwrap();
        assert_eq!(canonical_listing(&found), brute_minimal_cutsets(&adj), "{}", grp.name());
    }
}

#[test]
fn minimal_cutsets_respect_generator_classes() {
    for grp in small_groups() {
        let g = PowerGraph::build(&grp);
        let classes = grp.generator_classes();
        for x in all_minimal_cutsets(&g, DEFAULT_SEARCH_LIMIT).unwrap() {
            assert!(x.contains(0));
            for c in &classes {
                assert!(c.is_subset(&x) || !c.intersects(&x), "{}: {:?}", grp.name(), x.to_vec());
            }
        }
    }
}

fn arb_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (3usize..=9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let m = pairs.len();
        (Just(n), proptest::collection::vec(any::<bool>(), m)).prop_map(move |(n, keep)| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e).collect();
            (n, edges)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kappa_on_arbitrary_graphs((n, edges) in arb_graph()) {
        let g = PowerGraph::from_edges("random", n, &edges).unwrap();
        let adj = matrix(&g);
        prop_assert_eq!(vertex_connectivity(&g).unwrap(), brute_kappa(&adj));
    }

    #[test]
    fn minimal_separators_on_arbitrary_graphs((n, edges) in arb_graph()) {
        let g = PowerGraph::from_edges("random", n, &edges).unwrap();
        let adj = matrix(&g);
        let found = all_minimal_cutsets(&g, DEFAULT_SEARCH_LIMIT).unwrap();
        prop_assert_eq!(canonical_listing(&found), brute_minimal_cutsets(&adj));
        for x in &found {
            prop_assert!(g.is_minimal_cut_set(x).unwrap());
        }
    }

    #[test]
    fn minimality_predicate((n, edges) in arb_graph(), mask in any::<u16>()) {
        let g = PowerGraph::from_edges("random", n, &edges).unwrap();
        let adj = matrix(&g);
        let x: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        prop_assume!(x.len() + 2 <= n);
        let set = VertexSet::from_indices(n, x.iter().copied());
        let cut = disconnected_after(&adj, &x);
        prop_assert_eq!(g.is_cut_set(&set).unwrap(), cut);
        let minimal = cut && x.iter().all(|&v| {
            let smaller: Vec<usize> = x.iter().copied().filter(|&w| w != v).collect();
            !disconnected_after(&adj, &smaller)
        });
        prop_assert_eq!(g.is_minimal_cut_set(&set).unwrap(), minimal);
    }
}
