//! Minimum-cost rooted arborescences and the dual structure that certifies
//! them.
//!
//! The engine is a committed primal-dual scheme. Starting from reduced costs
//! equal to the (shifted) arc costs, it repeatedly raises a dual value on
//! every super-node without a tight entering arc, by exactly the minimum
//! reduced cost over its entering arcs, then contracts the strongly
//! connected components of the tight digraph, until a tight spanning
//! arborescence exists. The raised sets form a laminar family L over
//! V minus the root, every raise is strictly positive, and an arborescence
//! is optimal exactly when it uses tight arcs only and enters each member of
//! L exactly once (never, if the member contains its root).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{invalid, Error, Result};
use crate::graph::{Arc, ArcAttribute, ArcId, Cost, Digraph, LaminarFamily, NodeId, NodeSet};

/// A rooted spanning arborescence, stored as its arc id set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Arborescence {
    pub root: NodeId,
    pub arcs: BTreeSet<ArcId>,
}

impl Arborescence {
    pub fn cost(&self, c: &ArcAttribute) -> Cost {
        c.sum(self.arcs.iter().copied())
    }
}

/// Checks that `b` is a spanning arborescence of `d`: n - 1 arcs of `d`,
/// every non-root node entered exactly once, all nodes reached from the root.
pub(crate) fn check_spanning(d: &Digraph, b: &Arborescence) -> Result<()> {
    let n = d.node_count();
    if b.root >= n {
        return Err(invalid("arborescence root out of range"));
    }
    if b.arcs.len() + 1 != n {
        return Err(invalid("arborescence has the wrong number of arcs"));
    }
    let mut parent_arc: Vec<Option<Arc>> = vec![None; n];
    for &id in &b.arcs {
        let arc = d
            .arc(id)
            .ok_or_else(|| invalid(format!("arborescence arc {id} not in the graph")))?;
        if arc.head == b.root || parent_arc[arc.head].is_some() {
            return Err(invalid("arborescence enters a node twice or enters its root"));
        }
        parent_arc[arc.head] = Some(arc);
    }
    let mut seen = vec![false; n];
    seen[b.root] = true;
    let mut stack = vec![b.root];
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && parent_arc[v].is_some_and(|a| a.tail == u) {
                seen[v] = true;
                reached += 1;
                stack.push(v);
            }
        }
    }
    if reached != n {
        return Err(invalid("arborescence does not reach every node"));
    }
    Ok(())
}

/// The dual structure behind minimum-cost arborescences rooted at a node:
/// the tight arcs (those whose cost is exactly covered by duals) and the
/// laminar family of raised sets with their positive dual values.
///
/// When some arc costs are negative, all costs are first shifted up by the
/// recorded uniform `cost_shift` (every spanning arborescence has exactly
/// n - 1 arcs, so the shift moves all their costs equally and preserves the
/// optimal set). The shift is zero whenever all costs are non-negative, and
/// tightness always means: shifted cost == sum of duals over entered sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TightStructure {
    pub tight_arcs: BTreeSet<ArcId>,
    pub laminar: LaminarFamily,
    pub duals: BTreeMap<NodeSet, Cost>,
    pub cost_shift: Cost,
}

struct SuperNode {
    nodes: NodeSet,
    children: Vec<usize>,
    tight_inside: Vec<Arc>,
}

struct DualEngine<'a> {
    d: &'a Digraph,
    root: NodeId,
    rc: Vec<Cost>,
    shift: Cost,
    arena: Vec<SuperNode>,
    active: Vec<usize>,
    raises: Vec<(NodeSet, Cost)>,
}

impl<'a> DualEngine<'a> {
    fn new(d: &'a Digraph, c: &ArcAttribute, root: NodeId) -> Result<Self> {
        if root >= d.node_count() {
            return Err(invalid("root out of range"));
        }
        if !c.covers(d) {
            return Err(invalid("cost attribute does not cover all arcs"));
        }
        let shift = d
            .arcs()
            .iter()
            .map(|a| c.get(a.id))
            .min()
            .map_or(0, |m| (-m).max(0));
        let rc = d.arcs().iter().map(|a| c.get(a.id) + shift).collect();
        let arena = d
            .nodes()
            .map(|v| SuperNode {
                nodes: [v].into(),
                children: Vec::new(),
                tight_inside: Vec::new(),
            })
            .collect();
        Ok(DualEngine {
            d,
            root,
            rc,
            shift,
            arena,
            active: d.nodes().collect(),
            raises: Vec::new(),
        })
    }

    /// Position of each node's super in `active`.
    fn owner_positions(&self) -> Vec<usize> {
        let mut owner = vec![usize::MAX; self.d.node_count()];
        for (i, &idx) in self.active.iter().enumerate() {
            for &v in &self.arena[idx].nodes {
                owner[v] = i;
            }
        }
        owner
    }

    /// Tight arcs crossing between distinct supers, sorted by arc id, as
    /// (tail super, head super, arc).
    fn tight_cross(&self, owner: &[usize]) -> Vec<(usize, usize, Arc)> {
        let mut arcs: Vec<(usize, usize, Arc)> = self
            .d
            .arcs()
            .iter()
            .enumerate()
            .filter(|&(pos, a)| self.rc[pos] == 0 && owner[a.tail] != owner[a.head])
            .map(|(_, a)| (owner[a.tail], owner[a.head], *a))
            .collect();
        arcs.sort_by_key(|&(_, _, a)| a.id);
        arcs
    }

    fn run(&mut self) -> Result<()> {
        for _ in 0..=self.d.node_count() {
            let owner = self.owner_positions();
            let k = self.active.len();
            let root_pos = owner[self.root];

            // Raise every non-root super without a tight entering arc by the
            // minimum reduced cost over its entering arcs. Each arc enters
            // exactly one super, so the raises of one round are independent.
            let mut min_in: Vec<Option<Cost>> = vec![None; k];
            for (pos, a) in self.d.arcs().iter().enumerate() {
                let (tp, hp) = (owner[a.tail], owner[a.head]);
                if tp != hp && hp != root_pos {
                    min_in[hp] = Some(min_in[hp].map_or(self.rc[pos], |m: Cost| m.min(self.rc[pos])));
                }
            }
            for (i, m) in min_in.iter().enumerate() {
                if i == root_pos {
                    continue;
                }
                match m {
                    None => return Err(Error::NoArborescence(self.root)),
                    Some(m) if *m > 0 => {
                        self.raises.push((self.arena[self.active[i]].nodes.clone(), *m));
                    }
                    _ => {}
                }
            }
            for (pos, a) in self.d.arcs().iter().enumerate() {
                let (tp, hp) = (owner[a.tail], owner[a.head]);
                if tp != hp && hp != root_pos {
                    self.rc[pos] -= min_in[hp].unwrap();
                    debug_assert!(self.rc[pos] >= 0);
                }
            }

            // Every super now has a tight entering arc; stop once the tight
            // digraph spans from the root super.
            let cross = self.tight_cross(&owner);
            let mut seen = vec![false; k];
            seen[root_pos] = true;
            let mut queue = VecDeque::from([root_pos]);
            let mut reached = 1;
            while let Some(s) = queue.pop_front() {
                for &(tp, hp, _) in &cross {
                    if tp == s && !seen[hp] {
                        seen[hp] = true;
                        reached += 1;
                        queue.push_back(hp);
                    }
                }
            }
            if reached == k {
                return Ok(());
            }

            // Otherwise the unreached supers contain a tight cycle: contract
            // every non-trivial strongly connected component.
            let comp = strongly_connected_components(
                k,
                cross.iter().map(|&(tp, hp, _)| (tp, hp)),
            );
            let comp_count = 1 + comp.iter().copied().max().unwrap_or(0);
            let mut members: Vec<Vec<usize>> = vec![Vec::new(); comp_count];
            for (i, &c) in comp.iter().enumerate() {
                members[c].push(i);
            }
            debug_assert!(members.iter().any(|m| m.len() > 1));
            let mut new_super: Vec<Option<usize>> = vec![None; comp_count];
            for (c, m) in members.iter().enumerate() {
                if m.len() < 2 {
                    continue;
                }
                let nodes = m
                    .iter()
                    .flat_map(|&i| self.arena[self.active[i]].nodes.iter().copied())
                    .collect();
                let tight_inside = cross
                    .iter()
                    .filter(|&&(tp, hp, _)| comp[tp] == c && comp[hp] == c)
                    .map(|&(_, _, a)| a)
                    .collect();
                new_super[c] = Some(self.arena.len());
                self.arena.push(SuperNode {
                    nodes,
                    children: m.iter().map(|&i| self.active[i]).collect(),
                    tight_inside,
                });
            }
            let mut next = Vec::with_capacity(self.active.len());
            let mut emitted = vec![false; comp_count];
            for (i, &idx) in self.active.iter().enumerate() {
                match new_super[comp[i]] {
                    None => next.push(idx),
                    Some(s) => {
                        if !emitted[comp[i]] {
                            emitted[comp[i]] = true;
                            next.push(s);
                        }
                    }
                }
            }
            self.active = next;
        }
        unreachable!("every round contracts at least two supers");
    }

    /// The optimal arborescence certified by the final tight structure:
    /// discovery arcs of a breadth-first search over tight arcs, expanding
    /// contracted supers recursively, preferring smaller arc ids.
    fn optimal_arborescence(&self) -> Arborescence {
        let owner = self.owner_positions();
        let k = self.active.len();
        let root_pos = owner[self.root];
        let cross = self.tight_cross(&owner);
        let mut discovery: Vec<Option<Arc>> = vec![None; k];
        let mut seen = vec![false; k];
        seen[root_pos] = true;
        let mut queue = VecDeque::from([root_pos]);
        while let Some(s) = queue.pop_front() {
            for &(tp, hp, a) in &cross {
                if tp == s && !seen[hp] {
                    seen[hp] = true;
                    discovery[hp] = Some(a);
                    queue.push_back(hp);
                }
            }
        }
        debug_assert!(seen.iter().all(|&s| s));
        let mut arcs = BTreeSet::new();
        for (i, &idx) in self.active.iter().enumerate() {
            let entry = if i == root_pos {
                self.root
            } else {
                let a = discovery[i].expect("reached super has a discovery arc");
                arcs.insert(a.id);
                a.head
            };
            self.expand(idx, entry, &mut arcs);
        }
        Arborescence {
            root: self.root,
            arcs,
        }
    }

    fn expand(&self, idx: usize, entry: NodeId, out: &mut BTreeSet<ArcId>) {
        let sn = &self.arena[idx];
        if sn.children.is_empty() {
            return;
        }
        let child_of = |v: NodeId| {
            sn.children
                .iter()
                .position(|&c| self.arena[c].nodes.contains(&v))
                .expect("endpoint inside the contracted super")
        };
        let root_child = child_of(entry);
        let mut inside = sn.tight_inside.clone();
        inside.sort_by_key(|a| a.id);
        let kc = sn.children.len();
        let mut discovery: Vec<Option<Arc>> = vec![None; kc];
        let mut seen = vec![false; kc];
        seen[root_child] = true;
        let mut queue = VecDeque::from([root_child]);
        while let Some(s) = queue.pop_front() {
            for a in &inside {
                let (tc, hc) = (child_of(a.tail), child_of(a.head));
                if tc == s && !seen[hc] {
                    seen[hc] = true;
                    discovery[hc] = Some(*a);
                    queue.push_back(hc);
                }
            }
        }
        debug_assert!(seen.iter().all(|&s| s), "contracted supers are strongly connected");
        for (ci, &child_idx) in sn.children.iter().enumerate() {
            let e = if ci == root_child {
                entry
            } else {
                let a = discovery[ci].expect("non-root child discovered");
                out.insert(a.id);
                a.head
            };
            self.expand(child_idx, e, out);
        }
    }

    fn tight_structure(&self) -> TightStructure {
        let tight_arcs = self
            .d
            .arcs()
            .iter()
            .enumerate()
            .filter(|&(pos, _)| self.rc[pos] == 0)
            .map(|(_, a)| a.id)
            .collect();
        let sets: Vec<NodeSet> = self.raises.iter().map(|(s, _)| s.clone()).collect();
        let laminar = LaminarFamily::new(sets).expect("raised sets are laminar and distinct");
        TightStructure {
            tight_arcs,
            laminar,
            duals: self.raises.iter().cloned().collect(),
            cost_shift: self.shift,
        }
    }
}

/// Kosaraju's algorithm on a small explicit digraph; returns a component
/// index per node.
fn strongly_connected_components(
    n: usize,
    arcs: impl Iterator<Item = (usize, usize)> + Clone,
) -> Vec<usize> {
    let mut fwd = vec![Vec::new(); n];
    let mut bwd = vec![Vec::new(); n];
    for (u, v) in arcs {
        fwd[u].push(v);
        bwd[v].push(u);
    }
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        // Iterative post-order.
        let mut stack = vec![(s, 0usize)];
        seen[s] = true;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < fwd[u].len() {
                let v = fwd[u][*i];
                *i += 1;
                if !seen[v] {
                    seen[v] = true;
                    stack.push((v, 0));
                }
            } else {
                order.push(u);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for &s in order.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = next;
        while let Some(u) = stack.pop() {
            for &v in &bwd[u] {
                if comp[v] == usize::MAX {
                    comp[v] = next;
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    comp
}

/// A minimum-cost spanning arborescence rooted at `root`.
pub fn min_cost_arborescence(d: &Digraph, c: &ArcAttribute, root: NodeId) -> Result<Arborescence> {
    let mut engine = DualEngine::new(d, c, root)?;
    engine.run()?;
    let b = engine.optimal_arborescence();
    debug_assert!(check_spanning(d, &b).is_ok());
    Ok(b)
}

/// The tight arcs and positive laminar duals certifying optimality of every
/// minimum-cost arborescence rooted at `root`.
pub fn tight_structure(d: &Digraph, c: &ArcAttribute, root: NodeId) -> Result<TightStructure> {
    let mut engine = DualEngine::new(d, c, root)?;
    engine.run()?;
    Ok(engine.tight_structure())
}

/// Whether the spanning arborescence `b` enters every member of `l` at most
/// once, and never when the member contains its root.
pub fn is_l_tight(d: &Digraph, l: &LaminarFamily, b: &Arborescence) -> Result<bool> {
    check_spanning(d, b)?;
    if let Some(&v) = l.sets().iter().flatten().find(|&&v| v >= d.node_count()) {
        return Err(invalid(format!("laminar member contains node {v} out of range")));
    }
    let arcs: Vec<Arc> = b.arcs.iter().map(|&id| d.arc(id).unwrap()).collect();
    let tight = l.sets().iter().all(|f| {
        let entries = arcs.iter().filter(|a| a.enters(f)).count();
        if f.contains(&b.root) {
            entries == 0
        } else {
            entries <= 1
        }
    });
    // Equivalent characterization: within every member, the arborescence
    // restricts to a spanning arborescence of that member.
    debug_assert_eq!(
        tight,
        l.sets().iter().all(|f| {
            let inside = arcs
                .iter()
                .filter(|a| f.contains(&a.tail) && f.contains(&a.head))
                .count();
            inside + 1 == f.len()
        })
    );
    Ok(tight)
}

/// Finds a spanning arborescence entering every member of `l` at most once
/// (an L-tight arborescence), if one exists: minimize the number of member
/// entries as an arc cost; a minimizer achieving the unavoidable count, one
/// entry per member not containing the root, is exactly an L-tight
/// arborescence. Roots are tried in ascending order unless one is given.
pub fn find_l_tight(
    d: &Digraph,
    l: &LaminarFamily,
    root: Option<NodeId>,
) -> Result<Option<Arborescence>> {
    if let Some(&v) = l.sets().iter().flatten().find(|&&v| v >= d.node_count()) {
        return Err(invalid(format!("laminar member contains node {v} out of range")));
    }
    if let Some(r) = root {
        if r >= d.node_count() {
            return Err(invalid("root out of range"));
        }
    }
    let entry_count = ArcAttribute::from_fn(d, |a| {
        l.sets().iter().filter(|f| a.enters(f)).count() as Cost
    });
    let candidates: Vec<NodeId> = match root {
        Some(r) => vec![r],
        None => d.nodes().collect(),
    };
    for r in candidates {
        let unavoidable = l.sets().iter().filter(|f| !f.contains(&r)).count() as Cost;
        match min_cost_arborescence(d, &entry_count, r) {
            Ok(b) if b.cost(&entry_count) == unavoidable => {
                debug_assert_eq!(is_l_tight(d, l, &b), Ok(true));
                return Ok(Some(b));
            }
            Ok(_) | Err(Error::NoArborescence(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// All nodes that root a spanning arborescence: the nodes reaching every
/// other node.
pub fn root_set(d: &Digraph) -> NodeSet {
    let n = d.node_count();
    let mut fwd = vec![Vec::new(); n];
    for a in d.arcs() {
        fwd[a.tail].push(a.head);
    }
    let roots: NodeSet = (0..n)
        .filter(|&r| {
            let mut seen = vec![false; n];
            seen[r] = true;
            let mut stack = vec![r];
            let mut count = 1;
            while let Some(u) = stack.pop() {
                for &v in &fwd[u] {
                    if !seen[v] {
                        seen[v] = true;
                        count += 1;
                        stack.push(v);
                    }
                }
            }
            count == n
        })
        .collect();
    // The root set is closed against entering arcs and induces a strongly
    // connected subgraph.
    debug_assert!(d.entering(&roots).next().is_none());
    debug_assert!(
        roots.len() < 2 || {
            let sub = d.induced_subgraph(&roots).unwrap();
            let comp = strongly_connected_components(
                sub.graph.node_count(),
                sub.graph.arcs().iter().map(|a| (a.tail, a.head)).collect::<Vec<_>>().into_iter(),
            );
            comp.iter().all(|&c| c == 0)
        }
    );
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::node_set;

    fn i1() -> Digraph {
        Digraph::new(3, &[(0, 1), (0, 2), (1, 2), (2, 1)]).unwrap()
    }

    fn i2() -> Digraph {
        Digraph::new(3, &[(0, 1), (1, 2), (2, 1)]).unwrap()
    }

    fn i5() -> (Digraph, ArcAttribute) {
        let d = i1();
        let c = ArcAttribute::from_pairs(
            &d,
            vec![(ArcId(0), 1), (ArcId(1), 5), (ArcId(2), 1), (ArcId(3), 1)],
        )
        .unwrap();
        (d, c)
    }

    #[test]
    fn min_arborescence_examples() {
        let single = Digraph::new(1, &[]).unwrap();
        let b = min_cost_arborescence(&single, &ArcAttribute::uniform(&single, 1), 0).unwrap();
        assert_eq!(b, Arborescence { root: 0, arcs: BTreeSet::new() });
        assert_eq!(b.cost(&ArcAttribute::uniform(&single, 1)), 0);

        let (d, c) = i5();
        let b = min_cost_arborescence(&d, &c, 0).unwrap();
        assert_eq!(b.arcs, [ArcId(0), ArcId(2)].into());
        assert_eq!(b.cost(&c), 2);

        let path = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            min_cost_arborescence(&path, &ArcAttribute::uniform(&path, 1), 2),
            Err(Error::NoArborescence(2))
        );
        assert!(min_cost_arborescence(&path, &ArcAttribute::uniform(&path, 1), 5).is_err());
    }

    #[test]
    fn tight_structure_examples() {
        let d = i1();
        let zero = ArcAttribute::uniform(&d, 0);
        let ts = tight_structure(&d, &zero, 0).unwrap();
        assert_eq!(ts.tight_arcs, d.arc_id_set());
        assert!(ts.laminar.is_empty() && ts.duals.is_empty());
        assert_eq!(ts.cost_shift, 0);

        let (d, c) = i5();
        let ts = tight_structure(&d, &c, 0).unwrap();
        assert_eq!(ts.tight_arcs, [ArcId(0), ArcId(2), ArcId(3)].into());
        assert_eq!(
            ts.duals,
            [(node_set([1]), 1), (node_set([2]), 1)].into()
        );

        let d = i2();
        let c = ArcAttribute::from_pairs(
            &d,
            vec![(ArcId(0), 2), (ArcId(1), 1), (ArcId(2), 1)],
        )
        .unwrap();
        let ts = tight_structure(&d, &c, 0).unwrap();
        assert_eq!(ts.tight_arcs, d.arc_id_set());
        assert_eq!(
            ts.duals,
            [
                (node_set([1]), 1),
                (node_set([2]), 1),
                (node_set([1, 2]), 1)
            ]
            .into()
        );
        assert_eq!(ts.laminar.len(), 3);
    }

    #[test]
    fn duals_cover_exactly_the_tight_arcs() {
        let cases = vec![
            (i2(), vec![2, 1, 1]),
            (i1(), vec![3, 0, 2, 7]),
            (i1(), vec![1, 5, 1, 1]),
        ];
        for (d, costs) in cases {
            let c = ArcAttribute::from_fn(&d, |a| costs[a.id.0 as usize]);
            let ts = tight_structure(&d, &c, 0).unwrap();
            for a in d.arcs() {
                let covered: Cost = ts
                    .duals
                    .iter()
                    .filter(|(f, _)| a.enters(f))
                    .map(|(_, y)| *y)
                    .sum();
                assert!(covered <= c.get(a.id) + ts.cost_shift);
                assert_eq!(
                    covered == c.get(a.id) + ts.cost_shift,
                    ts.tight_arcs.contains(&a.id)
                );
            }
        }
    }

    #[test]
    fn negative_costs_are_shifted_uniformly() {
        let d = Digraph::new(2, &[(0, 1)]).unwrap();
        let c = ArcAttribute::uniform(&d, -5);
        let ts = tight_structure(&d, &c, 0).unwrap();
        assert_eq!(ts.cost_shift, 5);
        assert_eq!(ts.tight_arcs, [ArcId(0)].into());
        assert!(ts.duals.is_empty());
        let b = min_cost_arborescence(&d, &c, 0).unwrap();
        assert_eq!(b.cost(&c), -5);
    }

    #[test]
    fn optimal_arborescence_is_tight_and_enters_members_once() {
        let (d, c) = i5();
        let ts = tight_structure(&d, &c, 0).unwrap();
        let b = min_cost_arborescence(&d, &c, 0).unwrap();
        assert!(b.arcs.is_subset(&ts.tight_arcs));
        assert_eq!(is_l_tight(&d, &ts.laminar, &b), Ok(true));
    }

    #[test]
    fn l_tight_membership_examples() {
        let d = i1();
        let l = LaminarFamily::new(vec![node_set([0, 1, 2]), node_set([1, 2])]).unwrap();
        let good = Arborescence { root: 0, arcs: [ArcId(0), ArcId(2)].into() };
        let bad = Arborescence { root: 0, arcs: [ArcId(0), ArcId(1)].into() };
        assert_eq!(is_l_tight(&d, &l, &good), Ok(true));
        assert_eq!(is_l_tight(&d, &l, &bad), Ok(false));
        assert_eq!(is_l_tight(&d, &LaminarFamily::empty(), &bad), Ok(true));

        let not_spanning = Arborescence { root: 0, arcs: [ArcId(0)].into() };
        assert!(is_l_tight(&d, &l, &not_spanning).is_err());
        let cyclic = Arborescence { root: 0, arcs: [ArcId(2), ArcId(3)].into() };
        assert!(is_l_tight(&d, &l, &cyclic).is_err());
    }

    #[test]
    fn find_l_tight_examples() {
        let d = i2();
        let l = LaminarFamily::new(vec![node_set([0, 1, 2]), node_set([1, 2])]).unwrap();
        let b = find_l_tight(&d, &l, None).unwrap().unwrap();
        assert_eq!(b.root, 0);
        assert_eq!(b.arcs, [ArcId(0), ArcId(1)].into());

        let d = i1();
        assert!(find_l_tight(&d, &LaminarFamily::empty(), None).unwrap().is_some());

        let pruned = d.delete_arcs(&[ArcId(0), ArcId(2)].into());
        let b = find_l_tight(&pruned, &l, None).unwrap().unwrap();
        assert_eq!(b.arcs, [ArcId(1), ArcId(3)].into());

        // Both arborescences of the star enter {a, b} twice.
        let star = Digraph::new(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(find_l_tight(&star, &l, None).unwrap(), None);
        assert_eq!(find_l_tight(&star, &l, Some(0)).unwrap(), None);
        assert_eq!(find_l_tight(&star, &LaminarFamily::empty(), Some(1)).unwrap(), None);
    }

    #[test]
    fn root_set_examples() {
        let cyc = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(root_set(&cyc), node_set([0, 1, 2]));

        let path = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(root_set(&path), node_set([0]));

        let split = Digraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(root_set(&split), NodeSet::new());
    }
}
