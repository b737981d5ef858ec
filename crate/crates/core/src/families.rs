//! Generators for the graph families used throughout: paths, cycles,
//! complete graphs, stars, spiders, the double-star-with-middle graph and its
//! chained copies, plus exhaustive enumeration of small labeled connected
//! graphs.

use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// K_{1,k}: center 0, leaves 1..=k.
    Star(usize),
    /// K_{1,k} with every edge subdivided once: center 0, middles 1..=k,
    /// leaves k+1..=2k; 2k+1 vertices.
    Spider(usize),
    /// The 7-vertex graph with two vertices each carrying two leaves, joined
    /// through a middle vertex. Local ids: 0 = w (the chaining vertex),
    /// 1 = middle, 2 = far support, 3,4 leaves of 0, 5,6 leaves of 2.
    Fig1b,
    /// k disjoint copies of `Fig1b` with consecutive `w` vertices joined;
    /// copy j occupies ids 7j..7j+7.
    Fig1bChain(usize),
    /// Arbitrary edge list.
    FromEdges { n: usize, edges: Vec<(usize, usize)> },
}

pub fn generate(family: &Family) -> Result<Graph, GraphError> {
    match *family {
        Family::Path(n) => {
            if n < 1 {
                return Err(GraphError::BadParameter { what: "path needs n >= 1" });
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::BadParameter { what: "cycle needs n >= 3" });
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete(n) => {
            if n < 1 {
                return Err(GraphError::BadParameter { what: "complete graph needs n >= 1" });
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::Star(k) => {
            if k < 1 {
                return Err(GraphError::BadParameter { what: "star needs k >= 1" });
            }
            let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            Graph::from_edges(k + 1, &edges)
        }
        Family::Spider(k) => {
            if k < 1 {
                return Err(GraphError::BadParameter { what: "spider needs k >= 1" });
            }
            let mut edges = Vec::new();
            for i in 1..=k {
                edges.push((0, i));
                edges.push((i, k + i));
            }
            Graph::from_edges(2 * k + 1, &edges)
        }
        Family::Fig1b => generate(&Family::Fig1bChain(1)),
        Family::Fig1bChain(k) => {
            if k < 1 {
                return Err(GraphError::BadParameter { what: "chain needs k >= 1" });
            }
            let mut edges = Vec::new();
            for j in 0..k {
                let b = 7 * j;
                // within-copy edges: w-middle, middle-support, leaves
                edges.extend_from_slice(&[
                    (b, b + 1),
                    (b + 1, b + 2),
                    (b, b + 3),
                    (b, b + 4),
                    (b + 2, b + 5),
                    (b + 2, b + 6),
                ]);
                if j + 1 < k {
                    edges.push((b, b + 7));
                }
            }
            Graph::from_edges(7 * k, &edges)
        }
        Family::FromEdges { n, ref edges } => Graph::from_edges(n, edges),
    }
}

/// Every labeled simple connected graph on `n` vertices, each exactly once.
/// No isomorphism reduction is performed. Supported for 1 <= n <= 7.
pub fn all_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if !(1..=7).contains(&n) {
        return Err(GraphError::BadParameter {
            what: "labeled enumeration supports 1 <= n <= 7",
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("enumerated edges are valid");
        g.is_connected().then_some(g)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let p1 = generate(&Family::Path(1)).unwrap();
        assert_eq!((p1.n(), p1.m()), (1, 0));
        let c5 = generate(&Family::Cycle(5)).unwrap();
        assert_eq!((c5.n(), c5.m()), (5, 5));
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));
        let k4 = generate(&Family::Complete(4)).unwrap();
        assert_eq!(k4.m(), 6);
        let star = generate(&Family::Star(4)).unwrap();
        assert_eq!((star.n(), star.degree(0)), (5, 4));
        assert!(generate(&Family::Cycle(2)).is_err());
        assert!(generate(&Family::Spider(0)).is_err());
    }

    #[test]
    fn spider_shape() {
        let g = generate(&Family::Spider(3)).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.degree(0), 3);
        for i in 1..=3 {
            assert_eq!(g.degree(i), 2);
            assert_eq!(g.degree(3 + i), 1);
            assert_eq!(g.distance(0, 3 + i).unwrap(), Some(2));
        }
    }

    #[test]
    fn fig1b_shape() {
        let g = generate(&Family::Fig1b).unwrap();
        assert_eq!((g.n(), g.m()), (7, 6));
        assert_eq!(g.degree(0), 3); // w: two leaves plus the middle
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(2), 3);
        assert_eq!(g.vertices().filter(|&v| g.degree(v) == 1).count(), 4);
    }

    #[test]
    fn fig1b_chain_shape() {
        let g = generate(&Family::Fig1bChain(3)).unwrap();
        assert_eq!(g.n(), 21);
        assert_eq!(g.m(), 3 * 6 + 2);
        assert!(g.is_connected());
        assert!(g.has_edge(0, 7));
        assert!(g.has_edge(7, 14));
    }

    #[test]
    fn labeled_connected_counts() {
        // n=3: three labelings of P_3 plus K_3; n=4 recomputed by brute
        // enumeration matches the known labeled-connected count.
        assert_eq!(all_connected_graphs(1).unwrap().count(), 1);
        assert_eq!(all_connected_graphs(2).unwrap().count(), 1);
        assert_eq!(all_connected_graphs(3).unwrap().count(), 4);
        assert_eq!(all_connected_graphs(4).unwrap().count(), 38);
        assert!(all_connected_graphs(0).is_err());
        assert!(all_connected_graphs(8).is_err());
    }
}
