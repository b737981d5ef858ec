//! Immutable simple undirected graphs over dense vertex ids `0..n`.
//!
//! Adjacency is a bit set per vertex, so neighborhood unions, membership and
//! degree are word operations.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::vset::VertexSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Result of deleting a vertex: the compacted graph plus both relabeling maps.
#[derive(Clone, Debug)]
pub struct DeletedVertex {
    pub graph: Graph,
    /// `old_to_new[v]` is `None` for the deleted vertex.
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl DeletedVertex {
    /// Map a set in the original graph (not containing the deleted vertex)
    /// into the compacted graph.
    pub fn map_set(&self, s: &VertexSet) -> Option<VertexSet> {
        let mut out = VertexSet::empty(self.graph.n());
        for v in s {
            out.insert(self.old_to_new[v]?);
        }
        Some(out)
    }

    /// Map a set in the compacted graph back into the original graph's ids.
    pub fn unmap_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.old_to_new.len());
        for v in s {
            out.insert(self.new_to_old[v]);
        }
        out
    }
}

/// An induced subgraph together with its relabeling maps.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    /// Build a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range ids are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn is_isolate_free(&self) -> bool {
        self.n > 0 && self.adj.iter().all(|a| !a.is_empty())
    }

    /// Adjacency rows as single words, when the graph fits in one word.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(self.adj.iter().map(|a| a.as_mask().unwrap()).collect())
    }

    /// Open neighborhood N(S).
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Closed neighborhood N[S].
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.open_neighborhood(s);
        out.union_with(s);
        out
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut frontier = vec![v];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for w in &self.adj[u] {
                    if dist[w].is_none() {
                        dist[w] = Some(d);
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// Shortest-path distance; `None` when no path exists.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    /// Vertices within distance 2 of `v` (the closed second neighborhood).
    pub fn ball2(&self, v: usize) -> VertexSet {
        let mut out = VertexSet::singleton(self.n, v);
        out.union_with(&self.adj[v]);
        for u in &self.adj[v] {
            out.union_with(&self.adj[u]);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut frontier = vec![0];
        while let Some(u) = frontier.pop() {
            for w in self.adj[u].difference(&seen).iter() {
                seen.insert(w);
                frontier.push(w);
            }
        }
        seen.len() == self.n
    }

    /// Connectivity of the subgraph induced by `s`, without building it.
    pub fn is_connected_within(&self, s: &VertexSet) -> bool {
        let Some(start) = s.first() else {
            return true;
        };
        let mut seen = VertexSet::singleton(self.n, start);
        let mut frontier = vec![start];
        while let Some(u) = frontier.pop() {
            let mut reach = self.adj[u].intersection(s);
            reach.subtract(&seen);
            for w in reach.iter() {
                seen.insert(w);
                frontier.push(w);
            }
        }
        seen.len() == s.len()
    }

    /// Does the subgraph induced by `s` contain an isolated vertex?
    pub fn has_isolate_within(&self, s: &VertexSet) -> bool {
        s.iter().any(|v| self.adj[v].is_disjoint(s))
    }

    /// True iff all distinct members of `p` are pairwise at distance >= 3,
    /// equivalently their closed neighborhoods are pairwise disjoint.
    pub fn is_packing(&self, p: &VertexSet) -> bool {
        let members = p.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if self.adj[u].contains(v) || !self.adj[u].is_disjoint(&self.adj[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// A packing whose closed neighborhoods partition V.
    pub fn is_perfect_packing(&self, p: &VertexSet) -> bool {
        self.is_packing(p) && self.closed_neighborhood(p).len() == self.n
    }

    /// Every vertex outside `s` has a neighbor in `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        self.closed_neighborhood(s).len() == self.n
    }

    /// Every vertex of the graph has a neighbor in `s`.
    pub fn is_total_dominating(&self, s: &VertexSet) -> bool {
        self.open_neighborhood(s).len() == self.n
    }

    /// Every vertex is within distance 2 of some member of `s`.
    pub fn is_two_step_dominating(&self, s: &VertexSet) -> bool {
        let mut covered = VertexSet::empty(self.n);
        for v in s {
            covered.union_with(&self.ball2(v));
        }
        covered.len() == self.n
    }

    /// Delete a vertex, compacting ids and reporting the relabeling.
    pub fn delete_vertex(&self, v: usize) -> Result<DeletedVertex, GraphError> {
        self.check_vertex(v)?;
        let mut keep = VertexSet::full(self.n);
        keep.remove(v);
        let sub = self.induced(&keep);
        Ok(DeletedVertex {
            graph: sub.graph,
            old_to_new: sub.old_to_new,
            new_to_old: sub.new_to_old,
        })
    }

    /// The subgraph induced by `s`, with compact relabeling.
    pub fn induced(&self, s: &VertexSet) -> InducedSubgraph {
        let new_to_old = s.to_vec();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut g = Graph::edgeless(new_to_old.len());
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            for old_v in self.adj[old_u].intersection(s).iter() {
                if old_v > old_u {
                    let new_v = old_to_new[old_v].unwrap();
                    g.adj[new_u].insert(new_v);
                    g.adj[new_v].insert(new_u);
                }
            }
        }
        InducedSubgraph {
            graph: g,
            old_to_new,
            new_to_old,
        }
    }

    /// Leaf neighbors (degree-1 neighbors) of `v`.
    pub fn leaf_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_members(self.n, self.adj[v].iter().filter(|&u| self.degree(u) == 1))
    }

    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.adj.iter().all(|a| a.len() == self.n - 1)
    }

    /// K_{1,n-1}: one center adjacent to all others, no other edges.
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.m() == self.n - 1
            && self.max_degree() == self.n - 1
            && self.is_connected()
    }

    /// Connected with maximum degree at most 2 and at least one endpoint
    /// (or a trivial graph).
    pub fn is_path_graph(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        match self.n {
            0 => false,
            1 => true,
            _ => self.max_degree() <= 2 && self.min_degree() == 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })
        ));
        // duplicate edges collapse
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn distance_examples() {
        let p4 = generate(&Family::Path(4)).unwrap();
        assert_eq!(p4.distance(0, 3).unwrap(), Some(3));
        assert_eq!(p4.distance(2, 2).unwrap(), Some(0));
        let two_comp = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_comp.distance(0, 3).unwrap(), None);
        assert!(two_comp.distance(0, 9).is_err());
    }

    #[test]
    fn packing_examples() {
        let spider = generate(&Family::Spider(3)).unwrap();
        // leaves of spider(3) under our numbering: k+1..=2k
        let leaves = VertexSet::from_members(7, [4, 5, 6]);
        assert!(spider.is_packing(&leaves));
        assert!(!spider.is_perfect_packing(&leaves)); // center undominated
        let single = VertexSet::singleton(7, 0);
        assert!(spider.is_packing(&single));
        let adjacent = VertexSet::from_members(7, [0, 1]);
        assert!(!spider.is_packing(&adjacent));
        // perfect packing of spider(3): {middle, leaf, leaf}
        let perfect = VertexSet::from_members(7, [1, 5, 6]);
        assert!(spider.is_perfect_packing(&perfect));
    }

    // BFS-distance oracle for the packing predicate.
    #[test]
    fn packing_matches_bfs_definition() {
        for fam in [Family::Spider(3), Family::Cycle(6), Family::Fig1b] {
            let g = generate(&fam).unwrap();
            let n = g.n();
            for mask in 0u64..(1 << n) {
                let s = VertexSet::from_mask(n, mask);
                let members = s.to_vec();
                let mut expect = true;
                for (i, &u) in members.iter().enumerate() {
                    for &v in &members[i + 1..] {
                        match g.distance(u, v).unwrap() {
                            Some(d) if d >= 3 => {}
                            None => {}
                            _ => expect = false,
                        }
                    }
                }
                assert_eq!(g.is_packing(&s), expect, "mask {mask:b}");
            }
        }
    }

    #[test]
    fn delete_vertex_relabels() {
        let spider = generate(&Family::Spider(3)).unwrap();
        let del = spider.delete_vertex(0).unwrap();
        // 3 disjoint copies of P_2
        assert_eq!(del.graph.n(), 6);
        assert_eq!(del.graph.m(), 3);
        assert!(del.graph.vertices().all(|v| del.graph.degree(v) == 1));
        assert!(!del.graph.is_connected());
        assert_eq!(del.old_to_new[0], None);
        assert_eq!(del.old_to_new[1], Some(0));
        let s = VertexSet::from_members(7, [1, 4]);
        let mapped = del.map_set(&s).unwrap();
        assert_eq!(del.unmap_set(&mapped), s);
        assert!(del.map_set(&VertexSet::singleton(7, 0)).is_none());
    }

    #[test]
    fn induced_subgraph() {
        let c4 = generate(&Family::Cycle(4)).unwrap();
        let sub = c4.induced(&VertexSet::from_members(4, [0, 1]));
        assert_eq!(sub.graph.n(), 2);
        assert_eq!(sub.graph.m(), 1);
    }

    #[test]
    fn shape_predicates() {
        assert!(generate(&Family::Complete(4)).unwrap().is_complete());
        assert!(generate(&Family::Star(4)).unwrap().is_star());
        assert!(generate(&Family::Path(3)).unwrap().is_star()); // P_3 = K_{1,2}
        assert!(generate(&Family::Path(5)).unwrap().is_path_graph());
        assert!(!generate(&Family::Cycle(5)).unwrap().is_path_graph());
        assert!(generate(&Family::Complete(2)).unwrap().is_isolate_free());
    }

    #[test]
    fn domination_predicates() {
        let c6 = generate(&Family::Cycle(6)).unwrap();
        assert!(c6.is_dominating(&VertexSet::from_members(6, [0, 3])));
        assert!(!c6.is_dominating(&VertexSet::from_members(6, [0, 1])));
        assert!(c6.is_two_step_dominating(&VertexSet::from_members(6, [0, 3])));
        assert!(c6.is_two_step_dominating(&VertexSet::from_members(6, [0])) == false);
        let star = generate(&Family::Star(4)).unwrap();
        assert!(star.is_total_dominating(&VertexSet::from_members(5, [0, 1])));
        assert!(!star.is_total_dominating(&VertexSet::from_members(5, [1, 2])));
    }
}
