//! The ZF-to-TF reduction: attach a pendant P_3 to every vertex, shifting
//! the budget by exactly 2n. Forcing sets of the base lift to TF-sets of the
//! gadget and TF-sets of the gadget project back, both directions certified.

use alloc::vec::Vec;

use crate::error::GadgetError;
use crate::forcing::{classify_set, forcing_closure};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// The transformed instance: base, gadget, and the per-vertex attachment
/// triple (path center, low leaf, high leaf).
#[derive(Clone, Debug)]
pub struct GadgetMapping {
    pub base: Graph,
    pub gadget: Graph,
    /// `triples[i] = (v_i_star, leaf1, leaf2)` for base vertex `i`.
    pub triples: Vec<(usize, usize, usize)>,
    /// Budget offset of the reduction: 2n.
    pub budget_shift: usize,
}

/// Attach a disjoint P_3 to every base vertex through the path's center.
/// Base vertices keep their ids; triple `i` occupies `n + 3i .. n + 3i + 3`.
pub fn build_gadget(g: &Graph) -> GadgetMapping {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut triples = Vec::with_capacity(n);
    for i in 0..n {
        let center = n + 3 * i;
        let (l1, l2) = (center + 1, center + 2);
        edges.push((i, center));
        edges.push((center, l1));
        edges.push((center, l2));
        triples.push((center, l1, l2));
    }
    let gadget = Graph::from_edges(4 * n, &edges).expect("shifted ids stay in range");
    GadgetMapping {
        base: g.clone(),
        gadget,
        triples,
        budget_shift: 2 * n,
    }
}

/// Lift a forcing set of the base to a TF-set of the gadget by adding every
/// path center and the lower leaf of every triple. The result has size
/// `|s| + 2n` and is certified before it is returned.
pub fn lift_forcing_set(m: &GadgetMapping, s: &VertexSet) -> Result<VertexSet, GadgetError> {
    if !classify_set(&m.base, s).forcing {
        return Err(GadgetError::NotForcingInBase);
    }
    let mut out = VertexSet::empty(m.gadget.n());
    for v in s {
        out.insert(v);
    }
    for &(center, l1, _) in &m.triples {
        out.insert(center);
        out.insert(l1);
    }
    if !classify_set(&m.gadget, &out).total_forcing {
        return Err(GadgetError::NotTotalForcingInGadget);
    }
    Ok(out)
}

/// Project a TF-set of the gadget down to a forcing set of the base by
/// dropping all attachment vertices. The input must contain every path
/// center and at least one leaf per triple; the projection is certified
/// forcing and the stuck closure is returned as evidence otherwise.
pub fn project_tf_set(m: &GadgetMapping, s_prime: &VertexSet) -> Result<VertexSet, GadgetError> {
    for &(center, l1, l2) in &m.triples {
        if !s_prime.contains(center) || !(s_prime.contains(l1) || s_prime.contains(l2)) {
            return Err(GadgetError::MissingGadgetVertices);
        }
    }
    if !classify_set(&m.gadget, s_prime).total_forcing {
        return Err(GadgetError::NotTotalForcingInGadget);
    }
    let n = m.base.n();
    let out = VertexSet::from_members(n, s_prime.iter().filter(|&v| v < n));
    let class = classify_set(&m.base, &out);
    if !class.forcing {
        return Err(GadgetError::ProjectionNotForcing(forcing_closure(&m.base, &out)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};
    use crate::solve::{all_min_tf_sets, min_forcing, ForcingVariant, SolverLimits};

    fn lim() -> SolverLimits {
        SolverLimits::default()
    }

    #[test]
    fn gadget_shapes() {
        let k1 = generate(&Family::Complete(1)).unwrap();
        let m = build_gadget(&k1);
        assert_eq!((m.gadget.n(), m.gadget.m()), (4, 3));
        assert!(m.gadget.is_connected());
        assert_eq!(m.gadget.degree(1), 3); // the path center carries everything
        let p3 = generate(&Family::Path(3)).unwrap();
        let m = build_gadget(&p3);
        assert_eq!((m.gadget.n(), m.gadget.m()), (12, 11));
        let c4 = generate(&Family::Cycle(4)).unwrap();
        let m = build_gadget(&c4);
        assert_eq!((m.gadget.n(), m.gadget.m()), (16, 16));
        assert_eq!(m.budget_shift, 8);
        // an isolated base vertex becomes non-isolated
        let iso = Graph::edgeless(1);
        assert!(build_gadget(&iso).gadget.is_isolate_free());
    }

    #[test]
    fn lift_examples() {
        let p3 = generate(&Family::Path(3)).unwrap();
        let m = build_gadget(&p3);
        let lifted = lift_forcing_set(&m, &VertexSet::singleton(3, 0)).unwrap();
        assert_eq!(lifted.len(), 7);
        let k3 = generate(&Family::Complete(3)).unwrap();
        let m = build_gadget(&k3);
        let lifted = lift_forcing_set(&m, &VertexSet::from_members(3, [0, 1])).unwrap();
        assert_eq!(lifted.len(), 8);
        // the whole vertex set always lifts
        assert!(lift_forcing_set(&m, &VertexSet::full(3)).is_ok());
        // a non-forcing set is rejected
        assert!(matches!(
            lift_forcing_set(&m, &VertexSet::singleton(3, 0)),
            Err(GadgetError::NotForcingInBase)
        ));
    }

    #[test]
    fn project_round_trip() {
        let p3 = generate(&Family::Path(3)).unwrap();
        let m = build_gadget(&p3);
        for s in [
            VertexSet::singleton(3, 0),
            VertexSet::singleton(3, 2),
            VertexSet::from_members(3, [0, 1]),
            VertexSet::full(3),
        ] {
            let lifted = lift_forcing_set(&m, &s).unwrap();
            assert_eq!(project_tf_set(&m, &lifted).unwrap(), s);
        }
    }

    #[test]
    fn project_minimum_tf_sets() {
        let p3 = generate(&Family::Path(3)).unwrap();
        let m = build_gadget(&p3);
        let r = min_forcing(&m.gadget, ForcingVariant::Total, &lim()).unwrap();
        assert_eq!(r.value, 7); // F(P_3) + 2n = 1 + 6
        let projected = project_tf_set(&m, &r.witness).unwrap();
        assert_eq!(projected.len(), 1);
        let c4 = generate(&Family::Cycle(4)).unwrap();
        let m = build_gadget(&c4);
        let r = min_forcing(&m.gadget, ForcingVariant::Total, &lim()).unwrap();
        assert_eq!(r.value, 10); // F(C_4) + 2n = 2 + 8
        assert_eq!(project_tf_set(&m, &r.witness).unwrap().len(), 2);
    }

    #[test]
    fn projection_failure_carries_closure() {
        // a TF-set of the K_1 gadget that keeps the base vertex uncolored
        let k1 = generate(&Family::Complete(1)).unwrap();
        let m = build_gadget(&k1);
        let bad = VertexSet::from_members(4, [1, 2, 3]);
        match project_tf_set(&m, &bad) {
            Err(GadgetError::ProjectionNotForcing(c)) => assert!(!c.is_complete()),
            other => panic!("expected a projection failure, got {other:?}"),
        }
        // missing a path center
        let p3 = generate(&Family::Path(3)).unwrap();
        let m = build_gadget(&p3);
        assert!(matches!(
            project_tf_set(&m, &VertexSet::full(12).difference(&VertexSet::singleton(12, 3))),
            Err(GadgetError::MissingGadgetVertices)
        ));
    }

    #[test]
    fn every_minimum_gadget_tf_set_contains_centers() {
        let p3 = generate(&Family::Path(3)).unwrap();
        let m = build_gadget(&p3);
        let r = all_min_tf_sets(&m.gadget, &lim()).unwrap();
        for s in r.all_witnesses.unwrap() {
            for &(center, l1, l2) in &m.triples {
                assert!(s.contains(center));
                assert!(s.contains(l1) || s.contains(l2));
            }
        }
    }
}
