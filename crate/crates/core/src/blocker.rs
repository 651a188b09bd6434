//! Minimum-weight arc sets whose removal destroys every L-tight spanning
//! arborescence, and on top of that, every minimum-cost rooted arborescence.
//!
//! For a laminar family L, the L-cut of a node set Z collects the arcs
//! entering Z except those leaving some member that meets Z; its weight is
//! f(Z). Any L-tight arborescence rooted outside Z must use an arc of the
//! L-cut, so removing the L-cuts of two disjoint sets Z1 and Z2 leaves no
//! root available at all. The cheapest such double cut, minimized over the
//! members of L (universe included), is exactly the optimum, and it becomes
//! an ordinary minimum double cut after redirecting the tails of arcs that
//! leave a member: either to that member's anchor node (computed once per
//! member, innermost first), or, for candidates that pin a node `a`, to `a`
//! itself in every member containing it.

use std::collections::{BTreeMap, BTreeSet};

use crate::arborescence::{find_l_tight, tight_structure};
use crate::error::{invalid, Result};
use crate::graph::{ArcAttribute, ArcId, Digraph, LaminarFamily, NodeId, NodeSet, Weight};
use crate::mincut::{anchor_node, min_double_cut, CutCounter};
use crate::par;

/// How the witness graph of a certificate was derived from the input.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum WitnessGraph {
    /// Tails relocated to each member's anchor node.
    Relocated,
    /// Tails relocated to one pinned node inside every member containing it.
    AnchorOverride(NodeId),
}

/// The structure certifying optimality of a blocking set: inside member
/// `member`, removing the L-cuts of `z1` and `z2` leaves no possible root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoubleCutCertificate {
    pub member: NodeSet,
    pub z1: NodeSet,
    pub z2: NodeSet,
    pub witness: WitnessGraph,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockerResult {
    pub value: Weight,
    pub blocking_arcs: BTreeSet<ArcId>,
    pub certificate: Option<DoubleCutCertificate>,
    pub mincut_calls: u64,
}

fn check_family(d: &Digraph, l: &LaminarFamily) -> Result<()> {
    if let Some(&v) = l.sets().iter().flatten().find(|&&v| v >= d.node_count()) {
        return Err(invalid(format!("laminar member contains node {v} out of range")));
    }
    Ok(())
}

fn check_weights(d: &Digraph, w: &ArcAttribute) -> Result<()> {
    if !w.covers(d) {
        return Err(invalid("weight attribute does not cover all arcs"));
    }
    if !w.non_negative_on(d) {
        return Err(invalid("blocking weights must be non-negative"));
    }
    Ok(())
}

/// M(Z): the arcs entering `z` minus the arcs leaving any member of `l`
/// that meets `z`.
pub fn l_cut(d: &Digraph, l: &LaminarFamily, z: &NodeSet) -> Result<BTreeSet<ArcId>> {
    check_family(d, l)?;
    if let Some(&v) = z.iter().find(|&&v| v >= d.node_count()) {
        return Err(invalid(format!("node {v} out of range")));
    }
    let excluded: BTreeSet<ArcId> = l
        .members_meeting(z)
        .flat_map(|f| d.leaving(f).map(|a| a.id))
        .collect();
    Ok(d.entering(z)
        .map(|a| a.id)
        .filter(|id| !excluded.contains(id))
        .collect())
}

/// f(Z) = w(M(Z)).
pub fn f_value(d: &Digraph, l: &LaminarFamily, w: &ArcAttribute, z: &NodeSet) -> Result<Weight> {
    check_weights(d, w)?;
    Ok(w.sum(l_cut(d, l, z)?))
}

/// Relocates, in one simultaneous pass, the tail of every arc leaving a
/// member of `lv` containing `a` to `a` itself.
fn pinned_relocation(dprime: &Digraph, lv: &LaminarFamily, a: NodeId) -> Digraph {
    let mut moves = BTreeMap::new();
    for arc in dprime.arcs() {
        let crosses = lv
            .sets()
            .iter()
            .any(|f| f.contains(&a) && f.contains(&arc.tail) && !f.contains(&arc.head));
        if crosses && arc.tail != a {
            moves.insert(arc.id, a);
        }
    }
    dprime
        .with_relocated_tails(&moves)
        .expect("relocation inside a member cannot form a self-loop")
}

type Candidate = (
    (Weight, usize, (u8, NodeId)),
    (NodeSet, NodeSet, WitnessGraph),
);

/// Minimum-weight arc set destroying every L-tight spanning arborescence of
/// `d` (any root), with an optimality certificate. The universe is always
/// treated as a member of the family.
pub fn covering_tight_arborescences(
    d: &Digraph,
    l: &LaminarFamily,
    w: &ArcAttribute,
) -> Result<BlockerResult> {
    match d.node_count() {
        0 => return Err(invalid("empty graph")),
        1 => {
            return Err(invalid(
                "single-node graph: the empty arborescence cannot be blocked",
            ))
        }
        _ => {}
    }
    check_family(d, l)?;
    check_weights(d, w)?;
    let lv = l.with_universe(d.node_count())?;
    let counter = CutCounter::new();

    if find_l_tight(d, &lv, None)?.is_none() {
        return Ok(BlockerResult {
            value: 0,
            blocking_arcs: BTreeSet::new(),
            certificate: None,
            mincut_calls: 0,
        });
    }

    // Innermost members first: each member's leaving arcs are gathered at
    // its own anchor before any enclosing member is processed.
    let mut dprime = d.clone();
    for f in lv.sets() {
        let sub = dprime.induced_subgraph(f)?;
        let local = anchor_node(&sub.graph, w, &counter)?;
        let a_f = sub.parent_node(local);
        let moves: BTreeMap<ArcId, NodeId> = dprime
            .leaving(f)
            .filter(|arc| arc.tail != a_f)
            .map(|arc| (arc.id, a_f))
            .collect();
        dprime = dprime.with_relocated_tails(&moves)?;
    }

    // One candidate per member (its minimum double cut in the relocated
    // graph) plus one per member node pinned as the relocation target.
    // Ties prefer smaller members, then the unpinned graph, then smaller
    // pinned nodes.
    let mut items: Vec<(usize, Option<NodeId>)> = Vec::new();
    for (fi, f) in lv.sets().iter().enumerate() {
        items.push((fi, None));
        items.extend(f.iter().map(|&a| (fi, Some(a))));
    }
    let best: Candidate = par::min_candidate(items, |(fi, pin)| {
        let f = &lv.sets()[fi];
        let graph = match pin {
            None => dprime.clone(),
            Some(a) => pinned_relocation(&dprime, &lv, a),
        };
        let sub = graph.induced_subgraph(f).expect("member within range");
        let fixed = pin.map(|a| sub.local_node(a).expect("pinned node inside member"));
        let cut = min_double_cut(&sub.graph, w, fixed, &counter)
            .expect("validated weights")?;
        let rank = match pin {
            None => (0, 0),
            Some(a) => (1, a),
        };
        Some((
            (cut.value, fi, rank),
            (
                sub.to_parent_set(&cut.z1),
                sub.to_parent_set(&cut.z2),
                match pin {
                    None => WitnessGraph::Relocated,
                    Some(a) => WitnessGraph::AnchorOverride(a),
                },
            ),
        ))
    })
    .expect("the universe member always yields a double cut");

    let ((value, fi, _), (z1, z2, witness)) = best;
    let member = lv.sets()[fi].clone();

    // The blocking set itself is read off in the original graph: the L-cuts
    // of the two certificate sets inside the chosen member.
    let sub = d.induced_subgraph(&member)?;
    let local_family = lv
        .restrict_to(&member)
        .map_nodes(|v| sub.local_node(v).expect("member node"))?;
    let mut blocking_arcs = l_cut(&sub.graph, &local_family, &sub.to_local_set(&z1)?)?;
    blocking_arcs.extend(l_cut(&sub.graph, &local_family, &sub.to_local_set(&z2)?)?);
    debug_assert_eq!(w.sum(blocking_arcs.iter().copied()), value);
    debug_assert!(!blocking_arcs.is_empty());

    Ok(BlockerResult {
        value,
        blocking_arcs,
        certificate: Some(DoubleCutCertificate {
            member,
            z1,
            z2,
            witness,
        }),
        mincut_calls: counter.count(),
    })
}

/// Minimum-weight arc set destroying every minimum-cost arborescence rooted
/// at `root`: compute the tight arcs and dual family certifying optimality,
/// drop the arcs entering the root (so every remaining spanning arborescence
/// is rooted there), and block the family-tight arborescences of what is
/// left.
pub fn solve_blocker(
    d: &Digraph,
    c: &ArcAttribute,
    w: &ArcAttribute,
    root: NodeId,
) -> Result<BlockerResult> {
    if root >= d.node_count() {
        return Err(invalid("root out of range"));
    }
    if !c.covers(d) {
        return Err(invalid("cost attribute does not cover all arcs"));
    }
    check_weights(d, w)?;
    let ts = tight_structure(d, c, root)?;
    let restricted =
        d.filter_arcs(|a| ts.tight_arcs.contains(&a.id) && a.head != root);
    covering_tight_arborescences(&restricted, &ts.laminar, w)
}
