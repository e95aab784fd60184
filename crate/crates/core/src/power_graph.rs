//! Power graph of a finite group and basic separation predicates.

use std::collections::HashMap;

use crate::error::{invalid, Result};
use crate::group::Group;
use crate::vertex_set::VertexSet;

/// Simple undirected graph on group elements: `x ~ y` iff `x != y` and one of
/// them lies in the cyclic subgroup generated by the other. Vertex `i` is
/// group element `i`, so the identity is vertex 0.
#[derive(Debug, Clone)]
pub struct PowerGraph {
    label: String,
    adj: Vec<VertexSet>,
}

/// A split `(A, B)` of the vertices left after removing some set, with no edge
/// between the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl PowerGraph {
    pub fn build(group: &Group) -> PowerGraph {
        let n = group.size();
        let mut adj = vec![VertexSet::new(n); n];
        // one closure per cyclic subgroup, shared by its generators
        let mut closure_of_class: HashMap<usize, VertexSet> = HashMap::new();
        for class in group.generator_classes() {
            let rep = class.first().expect("classes are non-empty");
            let closure = group.cyclic_closure(rep);
            for x in &class {
                closure_of_class.insert(x, closure.clone());
            }
        }
        for y in 0..n {
            let cl = &closure_of_class[&y];
            for x in cl {
                if x != y {
                    adj[y].insert(x);
                    adj[x].insert(y);
                }
            }
        }
        PowerGraph {
            label: group.name().to_string(),
            adj,
        }
    }

    /// Arbitrary simple graph from an adjacency list; used for tests and for
    /// running the connectivity machinery on non-power graphs.
    pub fn from_edges(label: impl Into<String>, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return invalid(format!("bad edge ({a},{b})"));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(PowerGraph {
            label: label.into(),
            adj,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|v| self.degree(v) == n - 1)
    }

    /// Sorted edge list `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.vertex_count() {
            for b in &self.adj[a] {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Union of neighborhoods of `set`, minus `set` itself.
    pub fn neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.vertex_count());
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }

    /// Component of `start` inside the induced subgraph on `alive`.
    pub fn component_within(&self, start: usize, alive: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new(self.vertex_count());
        seen.insert(start);
        let mut frontier = seen.clone();
        loop {
            let mut next = VertexSet::new(self.vertex_count());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(alive);
            next.difference_with(&seen);
            if next.is_empty() {
                return seen;
            }
            seen.union_with(&next);
            frontier = next;
        }
    }

    /// Connected components of the subgraph induced on `alive`, ordered by
    /// least vertex.
    pub fn components_within(&self, alive: &VertexSet) -> Vec<VertexSet> {
        let mut rest = alive.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_within(v, alive);
            rest.difference_with(&c);
            out.push(c);
        }
        out
    }

    /// Components of `G - removed`, ordered by least vertex.
    pub fn components_after_removal(&self, removed: &VertexSet) -> Vec<VertexSet> {
        self.components_within(&removed.complement())
    }

    pub fn is_connected_within(&self, alive: &VertexSet) -> bool {
        match alive.first() {
            None => true,
            Some(v) => self.component_within(v, alive).len() == alive.len(),
        }
    }

    /// Whether removing `x` disconnects the graph. At least two vertices must
    /// remain.
    pub fn is_cut_set(&self, x: &VertexSet) -> Result<bool> {
        let alive = x.complement();
        if alive.len() < 2 {
            return invalid(format!(
                "cut-set candidate leaves {} vertices; at least 2 required",
                alive.len()
            ));
        }
        Ok(!self.is_connected_within(&alive))
    }

    /// A cut-set none of whose single-vertex deletions is still a cut-set.
    /// Non-cut-sets are reported as not minimal.
    pub fn is_minimal_cut_set(&self, x: &VertexSet) -> Result<bool> {
        if !self.is_cut_set(x)? {
            return Ok(false);
        }
        // X - {v} stays a cut iff v misses some component of G - X
        let comps = self.components_after_removal(x);
        Ok(x.iter().all(|v| comps.iter().all(|c| self.adj[v].intersects(c))))
    }

    pub fn is_separation(&self, x: &VertexSet, s: &Separation) -> Result<bool> {
        if s.side_a.is_empty() || s.side_b.is_empty() {
            return invalid("separation sides must be non-empty");
        }
        if s.side_a.intersects(&s.side_b) {
            return invalid("separation sides overlap");
        }
        if s.side_a.union(&s.side_b) != x.complement() {
            return invalid("separation sides must partition the remaining vertices");
        }
        Ok(s.side_a.iter().all(|a| !self.adj[a].intersects(&s.side_b)))
    }

    /// Separation of `G - x` with the first component on side A, if any.
    pub fn separation_after_removal(&self, x: &VertexSet) -> Option<Separation> {
        let comps = self.components_after_removal(x);
        if comps.len() < 2 {
            return None;
        }
        let side_a = comps[0].clone();
        let side_b = x.complement().difference(&side_a);
        Some(Separation { side_a, side_b })
    }

    /// Twin classes: vertices with identical closed neighborhoods, ordered by
    /// least member. Swapping two twins is a graph automorphism.
    pub fn closed_twin_classes(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut by_nbhd: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut classes: Vec<VertexSet> = Vec::new();
        for v in 0..n {
            let mut closed = self.adj[v].clone();
            closed.insert(v);
            let key = closed.words().to_vec();
            match by_nbhd.get(&key) {
                Some(&i) => {
                    classes[i].insert(v);
                }
                None => {
                    by_nbhd.insert(key, classes.len());
                    classes.push(VertexSet::from_indices(n, [v]));
                }
            }
        }
        classes
    }
}

pub fn build_power_graph(group: &Group) -> PowerGraph {
    PowerGraph::build(group)
}

/// Connectivity of the power graph with the identity removed.
pub fn proper_power_graph_connected(group: &Group) -> Result<bool> {
    if group.size() < 3 {
        return invalid("proper power graph needs |G| >= 3");
    }
    let g = PowerGraph::build(group);
    let mut alive = VertexSet::full(group.size());
    alive.remove(0);
    Ok(g.is_connected_within(&alive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::AbelianSpec;

    fn klein() -> Group {
        Group::make_abelian(AbelianSpec::new(vec![(2, 1), (2, 1)]).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_prime_power_is_complete() {
        let g = PowerGraph::build(&Group::make_cyclic(8).unwrap());
        assert!(g.is_complete());
        assert_eq!(g.edge_count(), 28);
    }

    #[test]
    fn klein_is_star() {
        let g = PowerGraph::build(&klein());
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn c6_universal_vertices() {
        let grp = Group::make_cyclic(6).unwrap();
        let g = PowerGraph::build(&grp);
        for v in 0..6 {
            let universal = g.degree(v) == 5;
            assert_eq!(universal, grp.element_order(v) == 1 || grp.element_order(v) == 6);
        }
    }

    #[test]
    fn components_and_cuts() {
        let g = PowerGraph::build(&Group::make_cyclic(6).unwrap());
        let none = VertexSet::new(6);
        assert_eq!(g.components_after_removal(&none).len(), 1);
        assert!(!g.is_cut_set(&none).unwrap());
        let all_but_one = VertexSet::from_indices(6, 1..6);
        let comps = g.components_after_removal(&all_but_one);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].to_vec(), vec![0]);
        assert!(g.is_cut_set(&all_but_one).is_err());
    }

    #[test]
    fn dihedral_identity_cut_vertex() {
        let grp = Group::make_dihedral(6).unwrap();
        let g = PowerGraph::build(&grp);
        let id = VertexSet::from_indices(6, [0]);
        assert!(g.is_cut_set(&id).unwrap());
        assert!(g.is_minimal_cut_set(&id).unwrap());
        let padded = VertexSet::from_indices(6, [0, 3]);
        assert!(g.is_cut_set(&padded).unwrap());
        assert!(!g.is_minimal_cut_set(&padded).unwrap());
    }

    #[test]
    fn quaternion_identity_and_involution() {
        let grp = Group::make_generalized_quaternion(8).unwrap();
        let g = PowerGraph::build(&grp);
        let inv = (0..8).find(|&x| grp.element_order(x) == 2).unwrap();
        assert!(g.is_cut_set(&VertexSet::from_indices(8, [0, inv])).unwrap());
    }

    #[test]
    fn separation_validation() {
        let g = PowerGraph::build(&klein());
        let x = VertexSet::from_indices(4, [0]);
        let good = Separation {
            side_a: VertexSet::from_indices(4, [1]),
            side_b: VertexSet::from_indices(4, [2, 3]),
        };
        assert!(g.is_separation(&x, &good).unwrap());
        let empty_side = Separation {
            side_a: VertexSet::new(4),
            side_b: VertexSet::from_indices(4, [1, 2, 3]),
        };
        assert!(g.is_separation(&x, &empty_side).is_err());
        let not_partition = Separation {
            side_a: VertexSet::from_indices(4, [1]),
            side_b: VertexSet::from_indices(4, [2]),
        };
        assert!(g.is_separation(&x, &not_partition).is_err());
    }

    #[test]
    fn proper_power_graph_examples() {
        assert!(proper_power_graph_connected(&Group::make_generalized_quaternion(8).unwrap()).unwrap());
        assert!(!proper_power_graph_connected(&klein()).unwrap());
        assert!(!proper_power_graph_connected(&Group::make_dihedral(6).unwrap()).unwrap());
        assert!(proper_power_graph_connected(&Group::make_cyclic(2).unwrap()).is_err());
    }

    #[test]
    fn twin_classes_match_generator_classes() {
        // closed twins in a power graph include the generator classes
        let grp = Group::make_abelian(AbelianSpec::new(vec![(2, 1), (2, 1), (3, 1)]).unwrap()).unwrap();
        let g = PowerGraph::build(&grp);
        let twins = g.closed_twin_classes();
        for class in grp.generator_classes() {
            assert!(twins.iter().any(|t| class.is_subset(t)));
        }
    }
}
