//! Directed multigraph with stable arc identities, plus the per-arc
//! attributes and laminar set families shared by every algorithm here.
//!
//! Arc identifiers survive induced subgraphs and tail relocation, so arc
//! sets computed on a derived graph are meaningful in the graph it came
//! from. Node ids are dense (`0..node_count`); induced subgraphs re-index
//! their nodes and record the bijection back to the parent.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{invalid, Result};

/// Dense node identifier, `0..node_count`.
pub type NodeId = usize;

/// Exact arc cost. May be negative.
pub type Cost = i64;

/// Exact arc weight. Validated non-negative by the operations that need it.
pub type Weight = i64;

/// Stable arc identifier.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArcId(pub u64);

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Node set with deterministic iteration order.
pub type NodeSet = BTreeSet<NodeId>;

/// Convenience constructor for node sets.
pub fn node_set<I: IntoIterator<Item = NodeId>>(nodes: I) -> NodeSet {
    nodes.into_iter().collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Arc {
    pub id: ArcId,
    pub tail: NodeId,
    pub head: NodeId,
}

impl Arc {
    /// The arc points from a node of `z` to a node outside `z`.
    pub fn leaves(&self, z: &NodeSet) -> bool {
        z.contains(&self.tail) && !z.contains(&self.head)
    }

    /// The arc points from outside `z` to a node of `z`.
    pub fn enters(&self, z: &NodeSet) -> bool {
        z.contains(&self.head) && !z.contains(&self.tail)
    }
}

/// Directed multigraph. Parallel arcs are allowed (distinct ids); self-loops
/// are rejected at construction since they lie in no arborescence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    node_count: usize,
    arcs: Vec<Arc>,
}

impl Digraph {
    /// Builds a digraph whose arc ids are the positions in `pairs`.
    pub fn new(node_count: usize, pairs: &[(NodeId, NodeId)]) -> Result<Self> {
        let arcs = pairs
            .iter()
            .enumerate()
            .map(|(i, &(tail, head))| (ArcId(i as u64), tail, head))
            .collect();
        Self::with_arc_ids(node_count, arcs)
    }

    /// Builds a digraph from explicitly identified arcs.
    pub fn with_arc_ids(node_count: usize, arcs: Vec<(ArcId, NodeId, NodeId)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(id, tail, head) in &arcs {
            if tail >= node_count || head >= node_count {
                return Err(invalid(format!(
                    "arc {id}: endpoint out of range (node_count = {node_count})"
                )));
            }
            if tail == head {
                return Err(invalid(format!("arc {id}: self-loop at node {tail}")));
            }
            if !seen.insert(id) {
                return Err(invalid(format!("duplicate arc id {id}")));
            }
        }
        Ok(Digraph {
            node_count,
            arcs: arcs
                .into_iter()
                .map(|(id, tail, head)| Arc { id, tail, head })
                .collect(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.node_count
    }

    pub fn node_set(&self) -> NodeSet {
        self.nodes().collect()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: ArcId) -> Option<Arc> {
        self.arcs.iter().find(|a| a.id == id).copied()
    }

    pub fn arc_id_set(&self) -> BTreeSet<ArcId> {
        self.arcs.iter().map(|a| a.id).collect()
    }

    /// Arcs of δ^in(z): head inside `z`, tail outside.
    pub fn entering<'a>(&'a self, z: &'a NodeSet) -> impl Iterator<Item = &'a Arc> {
        self.arcs.iter().filter(move |a| a.enters(z))
    }

    /// Arcs of δ^out(z): tail inside `z`, head outside.
    pub fn leaving<'a>(&'a self, z: &'a NodeSet) -> impl Iterator<Item = &'a Arc> {
        self.arcs.iter().filter(move |a| a.leaves(z))
    }

    fn check_members(&self, z: &NodeSet) -> Result<()> {
        match z.iter().find(|&&v| v >= self.node_count) {
            Some(v) => Err(invalid(format!("node {v} out of range"))),
            None => Ok(()),
        }
    }

    /// ϱ_w(z): total weight of the arcs entering `z`.
    pub fn weighted_indegree(&self, w: &ArcAttribute, z: &NodeSet) -> Result<Weight> {
        self.check_members(z)?;
        Ok(self.entering(z).map(|a| w.get(a.id)).sum())
    }

    /// Subgraph on the nodes of `z`, keeping exactly the arcs with both ends
    /// in `z` under their original ids. Node ids are re-indexed densely; the
    /// returned handle records the bijection back to this graph.
    pub fn induced_subgraph(&self, z: &NodeSet) -> Result<InducedSubgraph> {
        if z.is_empty() {
            return Err(invalid("induced subgraph of the empty node set"));
        }
        self.check_members(z)?;
        let to_parent: Vec<NodeId> = z.iter().copied().collect();
        let mut local = vec![usize::MAX; self.node_count];
        for (i, &v) in to_parent.iter().enumerate() {
            local[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|a| z.contains(&a.tail) && z.contains(&a.head))
            .map(|a| (a.id, local[a.tail], local[a.head]))
            .collect();
        Ok(InducedSubgraph {
            graph: Digraph::with_arc_ids(to_parent.len(), arcs)?,
            to_parent,
        })
    }

    /// Same graph except that the named arc now starts at `new_tail`.
    pub fn relocate_tail(&self, id: ArcId, new_tail: NodeId) -> Result<Digraph> {
        let mut moves = BTreeMap::new();
        moves.insert(id, new_tail);
        self.with_relocated_tails(&moves)
    }

    /// Applies several tail relocations at once.
    pub fn with_relocated_tails(&self, moves: &BTreeMap<ArcId, NodeId>) -> Result<Digraph> {
        let mut pending = moves.clone();
        let mut arcs = self.arcs.clone();
        for arc in &mut arcs {
            if let Some(new_tail) = pending.remove(&arc.id) {
                if new_tail >= self.node_count {
                    return Err(invalid(format!("node {new_tail} out of range")));
                }
                if new_tail == arc.head {
                    return Err(invalid(format!(
                        "relocating arc {} to tail {new_tail} would create a self-loop",
                        arc.id
                    )));
                }
                arc.tail = new_tail;
            }
        }
        if let Some((id, _)) = pending.into_iter().next() {
            return Err(invalid(format!("unknown arc id {id}")));
        }
        Ok(Digraph {
            node_count: self.node_count,
            arcs,
        })
    }

    /// Same node set, keeping only the arcs accepted by `keep`.
    pub fn filter_arcs(&self, mut keep: impl FnMut(&Arc) -> bool) -> Digraph {
        Digraph {
            node_count: self.node_count,
            arcs: self.arcs.iter().filter(|a| keep(a)).copied().collect(),
        }
    }

    /// Same node set with the named arcs removed.
    pub fn delete_arcs(&self, ids: &BTreeSet<ArcId>) -> Digraph {
        self.filter_arcs(|a| !ids.contains(&a.id))
    }
}

/// An induced subgraph together with the node bijection to its parent.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Digraph,
    to_parent: Vec<NodeId>,
}

impl InducedSubgraph {
    pub fn parent_node(&self, local: NodeId) -> NodeId {
        self.to_parent[local]
    }

    pub fn local_node(&self, parent: NodeId) -> Option<NodeId> {
        self.to_parent.binary_search(&parent).ok()
    }

    pub fn to_parent_set(&self, local: &NodeSet) -> NodeSet {
        local.iter().map(|&v| self.to_parent[v]).collect()
    }

    /// Fails if some node of `parent` is not part of the subgraph.
    pub fn to_local_set(&self, parent: &NodeSet) -> Result<NodeSet> {
        parent
            .iter()
            .map(|&v| {
                self.local_node(v)
                    .ok_or_else(|| invalid(format!("node {v} not in the induced subgraph")))
            })
            .collect()
    }
}

/// Exact-valued per-arc attribute (costs, weights).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArcAttribute {
    values: BTreeMap<ArcId, i64>,
}

impl ArcAttribute {
    /// The constant attribute on the arcs of `d`.
    pub fn uniform(d: &Digraph, value: i64) -> Self {
        Self::from_fn(d, |_| value)
    }

    pub fn from_fn(d: &Digraph, mut f: impl FnMut(&Arc) -> i64) -> Self {
        ArcAttribute {
            values: d.arcs().iter().map(|a| (a.id, f(a))).collect(),
        }
    }

    /// Builds from explicit pairs; must cover exactly the arcs of `d`.
    pub fn from_pairs(d: &Digraph, pairs: Vec<(ArcId, i64)>) -> Result<Self> {
        let values: BTreeMap<ArcId, i64> = pairs.into_iter().collect();
        if values.len() != d.arc_count() || !d.arcs().iter().all(|a| values.contains_key(&a.id)) {
            return Err(invalid("attribute does not cover exactly the graph's arcs"));
        }
        Ok(ArcAttribute { values })
    }

    /// Value on an arc. Panics on an unknown id: attributes are constructed
    /// for a graph whose arcs are a superset of any subgraph's arcs, so a
    /// missing id is a caller bug.
    pub fn get(&self, id: ArcId) -> i64 {
        match self.values.get(&id) {
            Some(&v) => v,
            None => panic!("attribute not defined on arc {id}"),
        }
    }

    pub fn try_get(&self, id: ArcId) -> Option<i64> {
        self.values.get(&id).copied()
    }

    /// Every arc of `d` has a value (superset coverage is fine).
    pub fn covers(&self, d: &Digraph) -> bool {
        d.arcs().iter().all(|a| self.values.contains_key(&a.id))
    }

    pub fn non_negative_on(&self, d: &Digraph) -> bool {
        d.arcs().iter().all(|a| self.get(a.id) >= 0)
    }

    pub fn total_on(&self, d: &Digraph) -> i64 {
        d.arcs().iter().map(|a| self.get(a.id)).sum()
    }

    pub fn sum<I: IntoIterator<Item = ArcId>>(&self, ids: I) -> i64 {
        ids.into_iter().map(|id| self.get(id)).sum()
    }
}

/// Compares node sets by ascending size, ties by lexicographic node order.
/// This is the canonical order used for all deterministic tie-breaking.
pub fn canonical_set_cmp(a: &NodeSet, b: &NodeSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A family of node sets in which any two members are disjoint or nested.
/// Members are kept in canonical order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaminarFamily {
    sets: Vec<NodeSet>,
}

impl LaminarFamily {
    pub fn empty() -> Self {
        LaminarFamily { sets: Vec::new() }
    }

    /// Validates pairwise laminarity, rejects duplicates and empty members,
    /// and stores the sets canonically ordered.
    pub fn new(sets: Vec<NodeSet>) -> Result<Self> {
        let mut sets = sets;
        sets.sort_by(canonical_set_cmp);
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(invalid("laminar family member is empty"));
            }
            if i > 0 && sets[i - 1] == *s {
                return Err(invalid(format!("duplicate laminar member {s:?}")));
            }
            for t in &sets[..i] {
                if !s.is_disjoint(t) && !s.is_subset(t) && !t.is_subset(s) {
                    return Err(invalid(format!("crossing laminar members {t:?} and {s:?}")));
                }
            }
        }
        Ok(LaminarFamily { sets })
    }

    pub fn sets(&self) -> &[NodeSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains_set(&self, z: &NodeSet) -> bool {
        self.sets.iter().any(|s| s == z)
    }

    /// Adds the full node set `{0, .., n-1}` if absent.
    pub fn with_universe(&self, n: usize) -> Result<Self> {
        let v: NodeSet = (0..n).collect();
        if let Some(out) = self.sets.iter().flatten().find(|&&x| x >= n) {
            return Err(invalid(format!("laminar member contains node {out} >= {n}")));
        }
        if self.contains_set(&v) {
            return Ok(self.clone());
        }
        let mut sets = self.sets.clone();
        sets.push(v);
        Self::new(sets)
    }

    /// L[F]: the members contained in `f`.
    pub fn restrict_to(&self, f: &NodeSet) -> Self {
        LaminarFamily {
            sets: self.sets.iter().filter(|s| s.is_subset(f)).cloned().collect(),
        }
    }

    /// L_Z: the members intersecting `z`.
    pub fn members_meeting<'a>(&'a self, z: &'a NodeSet) -> impl Iterator<Item = &'a NodeSet> {
        self.sets.iter().filter(move |s| !s.is_disjoint(z))
    }

    /// Relabels every member through `f` (must be injective on the nodes
    /// involved, e.g. a subgraph bijection).
    pub fn map_nodes(&self, f: impl Fn(NodeId) -> NodeId) -> Result<Self> {
        Self::new(
            self.sets
                .iter()
                .map(|s| s.iter().map(|&v| f(v)).collect())
                .collect(),
        )
    }
}
