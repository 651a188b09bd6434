//! Weighted minimum cuts: plain s-t cuts, rooted cuts avoiding a node, the
//! anchor node, and the minimum double cut.
//!
//! The double cut of a digraph is the smallest total weighted in-degree
//! ϱ(Z1) + ϱ(Z2) over pairs of disjoint non-empty node sets. It reduces to
//! plain s-t cuts in a doubled auxiliary graph: each node v becomes v' and
//! v'', each arc u->v becomes a reversed copy v'->u' and a forward copy
//! u''->v'' (both at the arc's weight), and every node contributes v'->v''
//! at effectively infinite weight. A minimum s'-t'' cut then picks one set
//! around s (via the reversed first copy) and one around t (via the second
//! copy), and the infinite arcs force the two sets apart.
//!
//! All cut extraction uses the minimal source side of the final residual
//! network, which is the same for every maximum flow, so results are
//! deterministic and identical across the parallel and sequential builds.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{invalid, Result};
use crate::flow::FlowNetwork;
use crate::graph::{ArcAttribute, ArcId, Digraph, NodeId, NodeSet, Weight};
use crate::par;

/// Counts maximum-flow invocations across a solver run. Shared by reference
/// so nested and parallel phases all bill the same budget.
#[derive(Debug, Default)]
pub struct CutCounter(AtomicU64);

impl CutCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&self) {
        self.0.fetch_add(1, Ordering::Relaxed);
    }

    pub fn count(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }
}

fn check_weights(d: &Digraph, w: &ArcAttribute) -> Result<()> {
    if !w.covers(d) {
        return Err(invalid("weight attribute does not cover all arcs"));
    }
    if !w.non_negative_on(d) {
        return Err(invalid("cut weights must be non-negative"));
    }
    Ok(())
}

fn network(d: &Digraph, w: &ArcAttribute) -> FlowNetwork {
    let mut net = FlowNetwork::new(d.node_count());
    for a in d.arcs() {
        net.add_edge(a.tail, a.head, w.get(a.id));
    }
    net
}

fn side_to_set(side: &[bool], keep: impl Fn(NodeId) -> bool) -> NodeSet {
    (0..side.len()).filter(|&v| side[v] && keep(v)).collect()
}

/// Minimum weight of δ^out(X) over X with s ∈ X, t ∉ X, together with the
/// minimal such X.
pub fn min_st_cut(
    d: &Digraph,
    w: &ArcAttribute,
    s: NodeId,
    t: NodeId,
) -> Result<(Weight, NodeSet)> {
    if s >= d.node_count() || t >= d.node_count() {
        return Err(invalid("cut terminal out of range"));
    }
    if s == t {
        return Err(invalid("cut terminals coincide"));
    }
    check_weights(d, w)?;
    let mut net = network(d, w);
    let value = net.max_flow(s, t);
    let side = net.source_side(s);
    Ok((value, side_to_set(&side, |_| true)))
}

/// min { ϱ_w(X) : ∅ ≠ X ⊆ V − t }, with a minimal minimizer. Ties over the
/// inner terminal are broken toward the smallest node id.
pub fn min_rooted_cut_avoiding(
    d: &Digraph,
    w: &ArcAttribute,
    t: NodeId,
    counter: &CutCounter,
) -> Result<(Weight, NodeSet)> {
    if t >= d.node_count() {
        return Err(invalid("node out of range"));
    }
    if d.node_count() < 2 {
        return Err(invalid("rooted cut needs at least two nodes"));
    }
    check_weights(d, w)?;
    // ϱ(X) with t outside X equals an ordinary cut with source t and sink v
    // for any v ∈ X; the minimal X is the minimal sink side.
    let base = network(d, w);
    let candidates: Vec<NodeId> = d.nodes().filter(|&v| v != t).collect();
    let best = par::min_candidate(candidates, |v| {
        let mut net = base.clone();
        let value = net.max_flow(t, v);
        counter.record();
        let side = net.sink_side(v);
        Some(((value, v), side_to_set(&side, |_| true)))
    })
    .expect("at least one candidate sink");
    let ((value, _), x) = best;
    debug_assert!(!x.contains(&t) && !x.is_empty());
    Ok((value, x))
}

/// The node t maximizing min { ϱ_w(X) : ∅ ≠ X ⊆ V − t }, ties broken toward
/// the smallest id. Removing arcs around the anchor is never much worse than
/// the best double cut: ϱ_w(Z) ≥ μ_w / 2 for every ∅ ≠ Z ⊆ V − t.
pub fn anchor_node(d: &Digraph, w: &ArcAttribute, counter: &CutCounter) -> Result<NodeId> {
    match d.node_count() {
        0 => return Err(invalid("anchor of an empty graph")),
        1 => return Ok(0),
        _ => {}
    }
    check_weights(d, w)?;
    let best = par::min_candidate(d.nodes().collect(), |t| {
        let (inner, _) = min_rooted_cut_avoiding(d, w, t, counter).expect("validated inputs");
        Some((std::cmp::Reverse(inner), t))
    })
    .expect("non-empty graph");
    Ok(best.1)
}

/// The doubled auxiliary graph used by `min_double_cut`.
#[derive(Clone, Debug)]
pub struct DoubleCutAux {
    pub graph: Digraph,
    pub weights: ArcAttribute,
    node_count: usize,
    infinite: Weight,
}

impl DoubleCutAux {
    /// First copy of an original node (reversed-arc layer).
    pub fn first_copy(&self, v: NodeId) -> NodeId {
        v
    }

    /// Second copy of an original node (forward-arc layer).
    pub fn second_copy(&self, v: NodeId) -> NodeId {
        self.node_count + v
    }

    /// Weight of the per-node crossing arcs; exceeds any finite cut.
    pub fn infinite_weight(&self) -> Weight {
        self.infinite
    }
}

/// Builds the doubled graph: 2n nodes and 2m + n arcs.
pub fn build_double_cut_aux(d: &Digraph, w: &ArcAttribute) -> Result<DoubleCutAux> {
    let n = d.node_count();
    if n < 2 {
        return Err(invalid("double cut needs at least two nodes"));
    }
    check_weights(d, w)?;
    let infinite = w.total_on(d) + 1;
    let mut arcs = Vec::with_capacity(2 * d.arc_count() + n);
    let mut weights = Vec::with_capacity(arcs.capacity());
    for (k, a) in d.arcs().iter().enumerate() {
        let id = ArcId(2 * k as u64);
        arcs.push((id, a.head, a.tail));
        weights.push((id, w.get(a.id)));
        let id = ArcId(2 * k as u64 + 1);
        arcs.push((id, n + a.tail, n + a.head));
        weights.push((id, w.get(a.id)));
    }
    for v in 0..n {
        let id = ArcId((2 * d.arc_count() + v) as u64);
        arcs.push((id, v, n + v));
        weights.push((id, infinite));
    }
    let graph = Digraph::with_arc_ids(2 * n, arcs)?;
    let weights = ArcAttribute::from_pairs(&graph, weights)?;
    Ok(DoubleCutAux {
        graph,
        weights,
        node_count: n,
        infinite,
    })
}

/// A pair of disjoint non-empty node sets attaining value ϱ(z1) + ϱ(z2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoubleCut {
    pub value: Weight,
    pub z1: NodeSet,
    pub z2: NodeSet,
}

/// μ_w(D) = min { ϱ_w(Z1) + ϱ_w(Z2) : Z1, Z2 disjoint and non-empty }, with
/// an attaining pair. `fixed_source = Some(a)` restricts to pairs touching a
/// (a ∈ Z1 ∪ Z2), which needs only n − 1 cut computations instead of
/// n(n − 1). Graphs with fewer than two nodes have no pair at all; that is
/// reported as `None` (value +∞).
pub fn min_double_cut(
    d: &Digraph,
    w: &ArcAttribute,
    fixed_source: Option<NodeId>,
    counter: &CutCounter,
) -> Result<Option<DoubleCut>> {
    let n = d.node_count();
    if let Some(a) = fixed_source {
        if a >= n {
            return Err(invalid("fixed source out of range"));
        }
    }
    check_weights(d, w)?;
    if n < 2 {
        return Ok(None);
    }
    let aux = build_double_cut_aux(d, w)?;
    let base = network(&aux.graph, &aux.weights);
    let sources: Vec<NodeId> = match fixed_source {
        Some(a) => vec![a],
        None => (0..n).collect(),
    };
    // A pair (Z1, Z2) with a ∈ Z2 is found by the flow rooted at a as the
    // swapped pair (Z2, Z1): the objective is symmetric, so a single source
    // suffices for the restricted variant.
    let best = par::min_candidate(sources, |s| {
        let mut net = base.clone();
        let mut local: Option<((Weight, NodeId, NodeId), (NodeSet, NodeSet))> = None;
        for t in 0..n {
            if t == s {
                continue;
            }
            let value = net.max_flow(aux.first_copy(s), aux.second_copy(t));
            counter.record();
            let side = net.source_side(aux.first_copy(s));
            let z1 = side_to_set(&side[..n], |_| true);
            let z2: NodeSet = (0..n).filter(|&v| !side[n + v]).collect();
            debug_assert!(value < aux.infinite_weight());
            debug_assert!(z1.contains(&s) && z2.contains(&t) && z1.is_disjoint(&z2));
            debug_assert_eq!(
                value,
                d.weighted_indegree(w, &z1).unwrap() + d.weighted_indegree(w, &z2).unwrap()
            );
            let cand = ((value, s, t), (z1, z2));
            if local.as_ref().map_or(true, |b| cand < *b) {
                local = Some(cand);
            }
        }
        local
    })
    .expect("n >= 2 leaves at least one terminal pair");
    let ((value, _, _), (z1, z2)) = best;
    Ok(Some(DoubleCut { value, z1, z2 }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::node_set;

    fn unit(d: &Digraph) -> ArcAttribute {
        ArcAttribute::uniform(d, 1)
    }

    #[test]
    fn st_cut_examples() {
        let d = Digraph::new(2, &[(0, 1)]).unwrap();
        let w = ArcAttribute::uniform(&d, 3);
        assert_eq!(min_st_cut(&d, &w, 0, 1).unwrap(), (3, node_set([0])));

        // Sink unreachable: value 0, side is everything the source reaches.
        let d = Digraph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(
            min_st_cut(&d, &unit(&d), 0, 2).unwrap(),
            (0, node_set([0, 1]))
        );

        let d = Digraph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let w = ArcAttribute::from_pairs(
            &d,
            vec![(ArcId(0), 2), (ArcId(1), 1), (ArcId(2), 1), (ArcId(3), 2)],
        )
        .unwrap();
        assert_eq!(min_st_cut(&d, &w, 0, 3).unwrap().0, 2);

        assert!(min_st_cut(&d, &w, 1, 1).is_err());
        let neg = ArcAttribute::uniform(&d, -1);
        assert!(min_st_cut(&d, &neg, 0, 3).is_err());
    }

    #[test]
    fn rooted_cut_examples() {
        let counter = CutCounter::new();
        let d = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            min_rooted_cut_avoiding(&d, &unit(&d), 2, &counter).unwrap(),
            (0, node_set([0]))
        );

        let cyc = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        for t in 0..3 {
            let (value, x) = min_rooted_cut_avoiding(&cyc, &unit(&cyc), t, &counter).unwrap();
            assert_eq!(value, 1);
            assert_eq!(x.len(), 1);
            assert!(!x.contains(&t));
        }

        let star = Digraph::new(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(
            min_rooted_cut_avoiding(&star, &unit(&star), 0, &counter).unwrap(),
            (1, node_set([1]))
        );

        let single = Digraph::new(1, &[]).unwrap();
        assert!(min_rooted_cut_avoiding(&single, &unit(&single), 0, &counter).is_err());
    }

    #[test]
    fn anchor_examples() {
        let counter = CutCounter::new();
        let single = Digraph::new(1, &[]).unwrap();
        assert_eq!(anchor_node(&single, &unit(&single), &counter).unwrap(), 0);

        let star = Digraph::new(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(anchor_node(&star, &unit(&star), &counter).unwrap(), 0);

        let cyc = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(anchor_node(&cyc, &unit(&cyc), &counter).unwrap(), 0);

        let empty = Digraph::new(0, &[]).unwrap();
        assert!(anchor_node(&empty, &unit(&empty), &counter).is_err());
    }

    #[test]
    fn aux_graph_shape() {
        let d = Digraph::new(2, &[(0, 1)]).unwrap();
        let aux = build_double_cut_aux(&d, &unit(&d)).unwrap();
        assert_eq!(aux.graph.arc_count(), 2 * d.arc_count() + d.node_count());
        let ends: Vec<(usize, usize, i64)> = aux
            .graph
            .arcs()
            .iter()
            .map(|a| (a.tail, a.head, aux.weights.get(a.id)))
            .collect();
        // b'->a', a''->b'', a'->a'', b'->b'' with copies at weight 1 and
        // crossing arcs above the total weight.
        assert_eq!(ends, vec![(1, 0, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2)]);

        let single = Digraph::new(1, &[]).unwrap();
        assert!(build_double_cut_aux(&single, &unit(&single)).is_err());
    }

    #[test]
    fn aux_graph_cut_matches_double_cut() {
        let d = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let w = unit(&d);
        let aux = build_double_cut_aux(&d, &w).unwrap();
        let (value, _) = min_st_cut(
            &aux.graph,
            &aux.weights,
            aux.first_copy(0),
            aux.second_copy(2),
        )
        .unwrap();
        assert_eq!(value, 1);
    }

    #[test]
    fn double_cut_examples() {
        let counter = CutCounter::new();

        let path = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let cut = min_double_cut(&path, &unit(&path), None, &counter)
            .unwrap()
            .unwrap();
        assert_eq!(cut.value, 1);
        assert_eq!(cut.z1, node_set([0]));
        assert!(cut.z1.is_disjoint(&cut.z2) && !cut.z2.is_empty());

        let two = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        let cut = min_double_cut(&two, &unit(&two), None, &counter)
            .unwrap()
            .unwrap();
        assert_eq!(
            cut,
            DoubleCut {
                value: 2,
                z1: node_set([0]),
                z2: node_set([1])
            }
        );

        let cyc = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let cut = min_double_cut(&cyc, &unit(&cyc), None, &counter)
            .unwrap()
            .unwrap();
        assert_eq!(cut.value, 2);
        assert!(cut.z1.contains(&0));

        let single = Digraph::new(1, &[]).unwrap();
        assert_eq!(
            min_double_cut(&single, &unit(&single), None, &counter).unwrap(),
            None
        );
    }

    #[test]
    fn fixed_source_covers_pairs_on_either_side() {
        // Cheapest pair is ({b}, {c}) in a graph where a is expensive to
        // isolate; fixing the source at b or c must still find it, and
        // fixing at a must report the best pair touching a.
        let counter = CutCounter::new();
        let d = Digraph::new(3, &[(1, 0), (2, 0), (1, 0), (2, 0)]).unwrap();
        let w = unit(&d);
        let full = min_double_cut(&d, &w, None, &counter).unwrap().unwrap();
        assert_eq!(full.value, 0);
        for a in [1, 2] {
            let cut = min_double_cut(&d, &w, Some(a), &counter).unwrap().unwrap();
            assert_eq!(cut.value, 0);
            assert!(cut.z1.contains(&a) || cut.z2.contains(&a));
        }
        // Best pair touching a groups a with c: ({a,c}, {b}) costs the two
        // b->a arcs, cheaper than isolating a outright.
        let at_a = min_double_cut(&d, &w, Some(0), &counter).unwrap().unwrap();
        assert_eq!(at_a, DoubleCut {
            value: 2,
            z1: node_set([0, 2]),
            z2: node_set([1]),
        });
    }

    #[test]
    fn counter_tracks_flow_calls() {
        let counter = CutCounter::new();
        let d = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        min_double_cut(&d, &unit(&d), None, &counter).unwrap();
        assert_eq!(counter.count(), 6);
        min_double_cut(&d, &unit(&d), Some(1), &counter).unwrap();
        assert_eq!(counter.count(), 8);
    }
}
