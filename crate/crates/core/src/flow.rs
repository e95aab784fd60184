//! Unit-capacity max-flow on the vertex-split digraph of a graph.
//!
//! Vertex `v` becomes `in(v) = 2v` and `out(v) = 2v + 1` joined by an arc of
//! capacity one; every undirected edge `{a, b}` becomes `out(a) -> in(b)` and
//! `out(b) -> in(a)`. A flow from `out(s)` to `in(t)` is a family of internally
//! vertex-disjoint `s`-`t` paths. Edge arcs get capacity 2; since every
//! vertex passes at most one unit, they never saturate and a minimum cut
//! consists of split arcs only.

use std::collections::VecDeque;

use crate::power_graph::PowerGraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    rev: usize,
    cap: u8,
}

#[derive(Debug, Clone)]
pub(crate) struct SplitNetwork {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    arcs: Vec<Arc>,
}

#[inline]
fn node_in(v: usize) -> usize {
    2 * v
}

#[inline]
fn node_out(v: usize) -> usize {
    2 * v + 1
}

impl SplitNetwork {
    pub(crate) fn new(g: &PowerGraph) -> Self {
        let n = g.vertex_count();
        let mut net = SplitNetwork {
            n,
            adjacency: vec![Vec::new(); 2 * n],
            arcs: Vec::with_capacity(2 * (n + 2 * g.edge_count())),
        };
        for v in 0..n {
            net.add_arc(node_in(v), node_out(v), 1);
        }
        for (a, b) in g.edges() {
            net.add_arc(node_out(a), node_in(b), 2);
            net.add_arc(node_out(b), node_in(a), 2);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u8) {
        let fwd = self.arcs.len();
        self.arcs.push(Arc { to, rev: fwd + 1, cap });
        self.arcs.push(Arc { to: from, rev: fwd, cap: 0 });
        self.adjacency[from].push(fwd);
        self.adjacency[to].push(fwd + 1);
    }

    pub(crate) fn solver(&self) -> FlowRun<'_> {
        FlowRun {
            net: self,
            cap: self.arcs.iter().map(|a| a.cap).collect(),
            parent: vec![usize::MAX; 2 * self.n],
            queue: VecDeque::new(),
        }
    }
}

/// Mutable residual state for one `s`-`t` computation.
pub(crate) struct FlowRun<'a> {
    net: &'a SplitNetwork,
    cap: Vec<u8>,
    parent: Vec<usize>,
    queue: VecDeque<usize>,
}

impl FlowRun<'_> {
    fn reset(&mut self) {
        for (c, a) in self.cap.iter_mut().zip(&self.net.arcs) {
            *c = a.cap;
        }
    }

    /// Number of internally disjoint `s`-`t` paths, stopping once `bound` is
    /// reached. `s` and `t` must be distinct and non-adjacent.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, bound: usize) -> usize {
        self.reset();
        let (src, sink) = (node_out(s), node_in(t));
        let mut flow = 0;
        while flow < bound && self.augment(src, sink) {
            flow += 1;
        }
        flow
    }

    fn augment(&mut self, src: usize, sink: usize) -> bool {
        self.parent.iter_mut().for_each(|p| *p = usize::MAX);
        self.queue.clear();
        self.queue.push_back(src);
        self.parent[src] = usize::MAX - 1;
        while let Some(u) = self.queue.pop_front() {
            for &ai in &self.net.adjacency[u] {
                let to = self.net.arcs[ai].to;
                if self.cap[ai] > 0 && self.parent[to] == usize::MAX {
                    self.parent[to] = ai;
                    if to == sink {
                        let mut v = sink;
                        while v != src {
                            let a = self.parent[v];
                            self.cap[a] -= 1;
                            self.cap[self.net.arcs[a].rev] += 1;
                            v = self.net.arcs[self.net.arcs[a].rev].to;
                        }
                        return true;
                    }
                    self.queue.push_back(to);
                }
            }
        }
        false
    }

    /// Vertex cut read off the residual graph after a completed max-flow:
    /// vertices whose `in` node is reachable from the source and whose `out`
    /// node is not.
    pub(crate) fn residual_cut(&mut self, s: usize) -> VertexSet {
        let n = self.net.n;
        let mut seen = vec![false; 2 * n];
        let src = node_out(s);
        seen[src] = true;
        self.queue.clear();
        self.queue.push_back(src);
        while let Some(u) = self.queue.pop_front() {
            for &ai in &self.net.adjacency[u] {
                let to = self.net.arcs[ai].to;
                if self.cap[ai] > 0 && !seen[to] {
                    seen[to] = true;
                    self.queue.push_back(to);
                }
            }
        }
        VertexSet::from_indices(n, (0..n).filter(|&v| seen[node_in(v)] && !seen[node_out(v)]))
    }

    /// Decomposes the current flow into vertex sequences `s, ..., t`.
    pub(crate) fn paths(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut used = vec![false; self.cap.len()];
        let mut out = Vec::new();
        let carries = |ai: usize| self.cap[ai] < self.net.arcs[ai].cap;
        for &first in &self.net.adjacency[node_out(s)] {
            if !carries(first) {
                continue;
            }
            used[first] = true;
            let mut path = vec![s];
            let mut node = self.net.arcs[first].to;
            loop {
                let v = node / 2;
                path.push(v);
                if v == t {
                    break;
                }
                // in(v) -> out(v) carries this unit; continue from out(v)
                let out_node = node_out(v);
                let next = self.net.adjacency[out_node]
                    .iter()
                    .copied()
                    .find(|&ai| carries(ai) && !used[ai])
                    .expect("flow conservation");
                used[next] = true;
                node = self.net.arcs[next].to;
            }
            out.push(path);
        }
        out
    }
}
