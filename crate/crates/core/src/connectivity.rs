//! Exact vertex connectivity and minimum cut-set enumeration.
//!
//! Connectivity is the minimum, over non-adjacent pairs, of the number of
//! internally disjoint paths between them (Menger), computed by unit-capacity
//! max-flow. Vertices with identical closed neighborhoods are interchangeable
//! by an automorphism, so one representative pair per pair of twin classes is
//! enough.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::flow::SplitNetwork;
use crate::power_graph::{PowerGraph, Separation};
use crate::vertex_set::VertexSet;

/// Default budget for the class-union search, counted in search nodes.
pub const DEFAULT_SEARCH_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutReport {
    pub cut: VertexSet,
    /// Global connectivity for whole-graph reports; local `s`-`t`
    /// connectivity for [`min_vertex_cut_between`].
    pub kappa: usize,
    pub is_minimal: bool,
    /// `|cut| == kappa`.
    pub is_minimum: bool,
    pub witness: Separation,
}

/// Connectivity value plus one minimum cut-set (absent for complete graphs).
#[derive(Debug, Clone)]
pub struct Connectivity {
    pub kappa: usize,
    pub cut: Option<VertexSet>,
}

fn representative_pairs(g: &PowerGraph) -> Vec<(usize, usize)> {
    let reps: Vec<usize> = g
        .closed_twin_classes()
        .iter()
        .map(|c| c.first().expect("non-empty"))
        .collect();
    let mut pairs = Vec::new();
    for (i, &a) in reps.iter().enumerate() {
        for &b in &reps[i + 1..] {
            if !g.is_adjacent(a, b) {
                pairs.push((a, b));
            }
        }
    }
    pairs.sort_by_key(|&(a, b)| (g.degree(a) + g.degree(b), a, b));
    pairs
}

pub fn vertex_connectivity(g: &PowerGraph) -> Result<usize> {
    minimum_vertex_cut(g).map(|c| c.kappa)
}

/// Vertex connectivity together with a minimum cut-set. The reported cut is
/// the one found for the first pair, in degree-sum order, attaining the
/// minimum, so the result does not depend on thread scheduling.
pub fn minimum_vertex_cut(g: &PowerGraph) -> Result<Connectivity> {
    let n = g.vertex_count();
    if n < 2 {
        return invalid("vertex connectivity needs at least 2 vertices");
    }
    if g.is_complete() {
        return Ok(Connectivity { kappa: n - 1, cut: None });
    }
    let pairs = representative_pairs(g);
    let net = SplitNetwork::new(g);
    let min_degree = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let best = AtomicUsize::new(min_degree);
    pairs.par_iter().for_each_init(
        || net.solver(),
        |run, &(s, t)| {
            let bound = best.load(Ordering::Relaxed);
            let f = run.max_flow(s, t, bound);
            if f < bound {
                best.fetch_min(f, Ordering::Relaxed);
            }
        },
    );
    let kappa = best.into_inner();
    let mut run = net.solver();
    for &(s, t) in &pairs {
        if run.max_flow(s, t, kappa + 1) == kappa {
            let cut = run.residual_cut(s);
            debug_assert_eq!(cut.len(), kappa);
            return Ok(Connectivity { kappa, cut: Some(cut) });
        }
    }
    Err(Error::Inconsistent(format!(
        "no pair attains connectivity {kappa} in {}",
        g.label()
    )))
}

fn check_pair(g: &PowerGraph, s: usize, t: usize) -> Result<()> {
    let n = g.vertex_count();
    if s >= n || t >= n {
        return invalid(format!("vertex out of range ({s}, {t})"));
    }
    if s == t {
        return invalid("s and t must differ");
    }
    if g.is_adjacent(s, t) {
        return invalid(format!("{s} and {t} are adjacent; no vertex cut separates them"));
    }
    Ok(())
}

/// Minimum `s`-`t` vertex cut for a non-adjacent pair.
pub fn min_vertex_cut_between(g: &PowerGraph, s: usize, t: usize) -> Result<CutReport> {
    check_pair(g, s, t)?;
    let net = SplitNetwork::new(g);
    let mut run = net.solver();
    let k = run.max_flow(s, t, usize::MAX);
    let cut = run.residual_cut(s);
    let side_a = g.component_within(s, &cut.complement());
    let side_b = cut.complement().difference(&side_a);
    Ok(CutReport {
        is_minimal: g.is_minimal_cut_set(&cut)?,
        is_minimum: cut.len() == k,
        kappa: k,
        cut,
        witness: Separation { side_a, side_b },
    })
}

/// Internally vertex-disjoint `s`-`t` paths of maximum cardinality.
pub fn vertex_disjoint_paths(g: &PowerGraph, s: usize, t: usize) -> Result<Vec<Vec<usize>>> {
    check_pair(g, s, t)?;
    let net = SplitNetwork::new(g);
    let mut run = net.solver();
    run.max_flow(s, t, usize::MAX);
    Ok(run.paths(s, t))
}

/// Minimality certificate for a cut-set.
pub fn certify_minimal(g: &PowerGraph, x: &VertexSet) -> Result<CutReport> {
    if !g.is_cut_set(x)? {
        return invalid("not a cut-set");
    }
    let kappa = vertex_connectivity(g)?;
    let witness = g
        .separation_after_removal(x)
        .expect("cut-set leaves at least two components");
    Ok(CutReport {
        cut: x.clone(),
        kappa,
        is_minimal: g.is_minimal_cut_set(x)?,
        is_minimum: x.len() == kappa,
        witness,
    })
}

fn sorted_listing(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
    v.sort();
    v
}

/// Every minimum cut-set, searched over unions of the given classes.
///
/// `classes` must partition the vertices into generator classes: a minimal
/// cut-set of a power graph never splits one. Classes of universal vertices
/// (the identity among them) lie in every cut-set and are always included.
/// The search is depth-first over the remaining classes by decreasing size and
/// fails with [`Error::ResourceLimit`] once more than `limit` nodes have been
/// visited, carrying the cut-sets found so far.
pub fn all_minimum_cutsets(
    g: &PowerGraph,
    classes: &[VertexSet],
    kappa: usize,
    limit: u64,
) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    let mut cover = VertexSet::new(n);
    for c in classes {
        if c.is_empty() || c.capacity() != n || cover.intersects(c) {
            return invalid("classes must be disjoint non-empty vertex sets");
        }
        cover.union_with(c);
    }
    if cover.len() != n {
        return invalid("classes must cover every vertex");
    }
    if g.is_complete() || kappa + 2 > n {
        return Ok(Vec::new());
    }

    let mut forced = VertexSet::new(n);
    let mut optional: Vec<&VertexSet> = Vec::new();
    for c in classes {
        let rep = c.first().expect("non-empty");
        if g.degree(rep) == n - 1 {
            forced.union_with(c);
        } else {
            optional.push(c);
        }
    }
    if forced.len() > kappa {
        return Ok(Vec::new());
    }
    optional.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.first()));
    let mut suffix = vec![0usize; optional.len() + 1];
    for i in (0..optional.len()).rev() {
        suffix[i] = suffix[i + 1] + optional[i].len();
    }

    struct Search<'a> {
        g: &'a PowerGraph,
        optional: Vec<&'a VertexSet>,
        suffix: Vec<usize>,
        visited: u64,
        limit: u64,
        found: Vec<VertexSet>,
    }

    impl Search<'_> {
        fn run(&mut self, idx: usize, budget: usize, current: &mut VertexSet) -> bool {
            self.visited += 1;
            if self.visited > self.limit {
                return false;
            }
            if budget == 0 {
                if self.g.is_cut_set(current).unwrap_or(false) {
                    self.found.push(current.clone());
                }
                return true;
            }
            if idx == self.optional.len() || self.suffix[idx] < budget {
                return true;
            }
            let class = self.optional[idx];
            if class.len() <= budget {
                current.union_with(class);
                let ok = self.run(idx + 1, budget - class.len(), current);
                current.difference_with(class);
                if !ok {
                    return false;
                }
            }
            self.run(idx + 1, budget, current)
        }
    }

    let mut search = Search {
        g,
        optional,
        suffix,
        visited: 0,
        limit,
        found: Vec::new(),
    };
    let budget = kappa - forced.len();
    let mut current = forced;
    if !search.run(0, budget, &mut current) {
        return Err(Error::ResourceLimit {
            limit,
            partial: sorted_listing(&search.found),
        });
    }
    let mut found = search.found;
    found.sort_by_key(|s| s.to_vec());
    Ok(found)
}

/// All inclusion-minimal cut-sets, enumerated without any group structure.
///
/// Every minimal cut-set is a minimal separator (a set with at least two full
/// components), and minimal separators are closed under the local move
/// `S -> N(C)` for components `C` of `G - (S ∪ N(x))`, `x ∈ S`. A separator is a
/// minimal cut-set exactly when every component left by it is full.
pub fn all_minimal_cutsets(g: &PowerGraph, limit: u64) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    // a disconnected graph is already split; every cut-set contains the empty one
    if g.components_after_removal(&VertexSet::new(n)).len() > 1 {
        return Ok(vec![VertexSet::new(n)]);
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<VertexSet> = VecDeque::new();
    let push = |s: VertexSet, seen: &mut HashSet<Vec<usize>>, queue: &mut VecDeque<VertexSet>| {
        if !s.is_empty() && seen.insert(s.to_vec()) {
            queue.push_back(s);
        }
    };
    for v in 0..n {
        let mut closed = g.neighbors(v).clone();
        closed.insert(v);
        for c in g.components_after_removal(&closed) {
            push(g.neighborhood_of_set(&c), &mut seen, &mut queue);
        }
    }
    let mut separators = Vec::new();
    while let Some(s) = queue.pop_front() {
        if separators.len() as u64 >= limit {
            return Err(Error::ResourceLimit {
                limit,
                partial: sorted_listing(&separators),
            });
        }
        for x in &s {
            let mut removed = s.clone();
            removed.union_with(g.neighbors(x));
            for c in g.components_after_removal(&removed) {
                push(g.neighborhood_of_set(&c), &mut seen, &mut queue);
            }
        }
        separators.push(s);
    }
    let mut minimal: Vec<VertexSet> = separators
        .into_iter()
        .filter(|s| {
            let comps = g.components_after_removal(s);
            comps.len() >= 2 && comps.iter().all(|c| &g.neighborhood_of_set(c) == s)
        })
        .collect();
    minimal.sort_by_key(|s| s.to_vec());
    Ok(minimal)
}

/// Canonical listing: sorted index lists, sorted lexicographically.
pub fn canonical_listing(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    let set: BTreeSet<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
    set.into_iter().collect()
}
