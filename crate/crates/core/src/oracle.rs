//! Exhaustive reference implementations for small instances.
//!
//! Everything here recomputes its answer from first principles: spanning
//! arborescences by direct enumeration, tightness straight from the
//! definition, blocking sets as minimum-weight hitting sets, and double cuts
//! by scanning all set pairs. None of it shares logic with the fast paths,
//! so agreement between the two is meaningful evidence. Size guards return
//! `ResourceLimit` rather than letting the search explode.

use std::collections::BTreeSet;

use crate::arborescence::Arborescence;
use crate::error::{invalid, Error, Result};
use crate::graph::{Arc, ArcAttribute, ArcId, Digraph, LaminarFamily, NodeId, NodeSet, Weight};

const MAX_NODES: usize = 7;
const MAX_ARCS: usize = 24;
const MAX_HITTING_ARCS: usize = 20;

fn guard_size(d: &Digraph) -> Result<()> {
    if d.node_count() > MAX_NODES {
        return Err(Error::ResourceLimit(format!(
            "{} nodes exceeds the enumeration bound of {MAX_NODES}",
            d.node_count()
        )));
    }
    if d.arc_count() > MAX_ARCS {
        return Err(Error::ResourceLimit(format!(
            "{} arcs exceeds the enumeration bound of {MAX_ARCS}",
            d.arc_count()
        )));
    }
    Ok(())
}

fn check_weights(d: &Digraph, w: &ArcAttribute) -> Result<()> {
    if !w.covers(d) || !w.non_negative_on(d) {
        return Err(invalid("weights must cover all arcs and be non-negative"));
    }
    Ok(())
}

/// Every spanning arborescence of `d`, rooted at `root` or anywhere. Each
/// non-root node picks one entering arc; a choice is kept when the root
/// reaches every node through it.
pub fn enumerate_arborescences(d: &Digraph, root: Option<NodeId>) -> Result<Vec<Arborescence>> {
    guard_size(d)?;
    let n = d.node_count();
    if let Some(r) = root {
        if r >= n {
            return Err(invalid("root out of range"));
        }
    }
    let roots: Vec<NodeId> = match root {
        Some(r) => vec![r],
        None => (0..n).collect(),
    };
    let mut out = Vec::new();
    for r in roots {
        if n == 1 {
            out.push(Arborescence {
                root: r,
                arcs: BTreeSet::new(),
            });
            continue;
        }
        let others: Vec<NodeId> = (0..n).filter(|&v| v != r).collect();
        let entering: Vec<Vec<&Arc>> = others
            .iter()
            .map(|&v| d.arcs().iter().filter(|a| a.head == v).collect())
            .collect();
        if entering.iter().any(|e| e.is_empty()) {
            continue;
        }
        let mut choice = vec![0usize; others.len()];
        loop {
            let picked: Vec<&Arc> = choice.iter().zip(&entering).map(|(&i, e)| e[i]).collect();
            let mut seen = vec![false; n];
            seen[r] = true;
            let mut grown = true;
            while grown {
                grown = false;
                for a in &picked {
                    if seen[a.tail] && !seen[a.head] {
                        seen[a.head] = true;
                        grown = true;
                    }
                }
            }
            if seen.iter().all(|&s| s) {
                out.push(Arborescence {
                    root: r,
                    arcs: picked.iter().map(|a| a.id).collect(),
                });
            }
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    break;
                }
                choice[pos] += 1;
                if choice[pos] < entering[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == choice.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Tightness straight from the definition: every family member is entered
/// at most once, never when it contains the root.
fn definitionally_tight(d: &Digraph, lv: &LaminarFamily, b: &Arborescence) -> bool {
    lv.sets().iter().all(|f| {
        let entries = b
            .arcs
            .iter()
            .filter(|&&id| d.arc(id).expect("arborescence arc").enters(f))
            .count();
        if f.contains(&b.root) {
            entries == 0
        } else {
            entries <= 1
        }
    })
}

/// Minimum-weight set of arcs meeting every target, over the arcs that
/// appear in some target. Ties prefer the lexicographically smallest id
/// list. Assumes every target is non-empty.
fn min_weight_hitting_set(
    targets: &[BTreeSet<ArcId>],
    w: &ArcAttribute,
) -> Result<(Weight, BTreeSet<ArcId>)> {
    let relevant: Vec<ArcId> = targets
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let k = relevant.len();
    if k > MAX_HITTING_ARCS {
        return Err(Error::ResourceLimit(format!(
            "{k} candidate arcs exceeds the hitting-set bound of {MAX_HITTING_ARCS}"
        )));
    }
    let target_masks: Vec<u32> = targets
        .iter()
        .map(|t| {
            relevant
                .iter()
                .enumerate()
                .filter(|(_, id)| t.contains(id))
                .fold(0u32, |m, (i, _)| m | (1 << i))
        })
        .collect();
    debug_assert!(target_masks.iter().all(|&m| m != 0));
    let mut best: Option<(Weight, Vec<ArcId>)> = None;
    for mask in 0u32..(1 << k) {
        if !target_masks.iter().all(|&t| t & mask != 0) {
            continue;
        }
        let weight: Weight = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| w.get(relevant[i]))
            .sum();
        if best.as_ref().is_some_and(|(bw, _)| weight > *bw) {
            continue;
        }
        let ids: Vec<ArcId> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| relevant[i])
            .collect();
        if best.as_ref().is_none_or(|b| (weight, ids.clone()) < *b) {
            best = Some((weight, ids));
        }
    }
    let (weight, ids) = best.expect("the full arc set hits every non-empty target");
    Ok((weight, ids.into_iter().collect()))
}

/// Reference value of the covering problem: enumerate the arborescences
/// tight for `l` (universe included), then hit them as cheaply as possible.
/// No tight arborescence at all gives 0.
pub fn oracle_gamma(d: &Digraph, l: &LaminarFamily, w: &ArcAttribute) -> Result<Weight> {
    if d.node_count() < 2 {
        return Err(invalid(
            "graphs with fewer than two nodes have nothing to block",
        ));
    }
    check_weights(d, w)?;
    let lv = l.with_universe(d.node_count())?;
    let targets: Vec<BTreeSet<ArcId>> = enumerate_arborescences(d, None)?
        .into_iter()
        .filter(|b| definitionally_tight(d, &lv, b))
        .map(|b| b.arcs)
        .collect();
    if targets.is_empty() {
        return Ok(0);
    }
    Ok(min_weight_hitting_set(&targets, w)?.0)
}

/// Reference blocking set for minimum-cost arborescences rooted at `root`:
/// enumerate them, keep the cost minimizers, hit them as cheaply as
/// possible.
pub fn oracle_blocker(
    d: &Digraph,
    c: &ArcAttribute,
    w: &ArcAttribute,
    root: NodeId,
) -> Result<(Weight, BTreeSet<ArcId>)> {
    if d.node_count() < 2 {
        return Err(invalid(
            "graphs with fewer than two nodes have nothing to block",
        ));
    }
    if !c.covers(d) {
        return Err(invalid("cost attribute does not cover all arcs"));
    }
    check_weights(d, w)?;
    let arbs = enumerate_arborescences(d, Some(root))?;
    if arbs.is_empty() {
        return Err(Error::NoArborescence(root));
    }
    let min_cost = arbs.iter().map(|b| b.cost(c)).min().unwrap();
    let targets: Vec<BTreeSet<ArcId>> = arbs
        .into_iter()
        .filter(|b| b.cost(c) == min_cost)
        .map(|b| b.arcs)
        .collect();
    min_weight_hitting_set(&targets, w)
}

/// Reference minimum-cost arborescence, by enumeration; ties prefer the
/// lexicographically smallest arc id set.
pub fn oracle_min_arborescence(
    d: &Digraph,
    c: &ArcAttribute,
    root: NodeId,
) -> Result<Arborescence> {
    if !c.covers(d) {
        return Err(invalid("cost attribute does not cover all arcs"));
    }
    enumerate_arborescences(d, Some(root))?
        .into_iter()
        .min_by_key(|b| (b.cost(c), b.arcs.clone()))
        .ok_or(Error::NoArborescence(root))
}

/// Reference double-cut value: scan every assignment of nodes to the two
/// sides.
pub fn oracle_mu(d: &Digraph, w: &ArcAttribute) -> Result<Weight> {
    let n = d.node_count();
    if n < 2 {
        return Err(invalid("double cut needs at least two nodes"));
    }
    if n > MAX_NODES {
        return Err(Error::ResourceLimit(format!(
            "{n} nodes exceeds the enumeration bound of {MAX_NODES}"
        )));
    }
    check_weights(d, w)?;
    let mut best: Option<Weight> = None;
    for assign in 0..3usize.pow(n as u32) {
        let mut z1 = NodeSet::new();
        let mut z2 = NodeSet::new();
        let mut rest = assign;
        for v in 0..n {
            match rest % 3 {
                1 => {
                    z1.insert(v);
                }
                2 => {
                    z2.insert(v);
                }
                _ => {}
            }
            rest /= 3;
        }
        if z1.is_empty() || z2.is_empty() {
            continue;
        }
        let value = d.weighted_indegree(w, &z1)? + d.weighted_indegree(w, &z2)?;
        best = Some(best.map_or(value, |b| b.min(value)));
    }
    Ok(best.expect("two nodes admit at least one pair"))
}
