//! JSON instance format: labeled nodes, arcs with exact rational costs and
//! weights, an optional root, an optional laminar family, and a problem
//! selector. Rationals are scaled to a common integer grid before the
//! solvers run, so every comparison stays exact.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use arbocut::graph::{ArcAttribute, ArcId, Digraph, LaminarFamily, NodeId, NodeSet};

/// Input rejection with a human-readable reason. The binary maps this to
/// exit code 2.
#[derive(Clone, Debug)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn bad(msg: impl Into<String>) -> ParseError {
    ParseError(msg.into())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    /// Minimum-cost spanning arborescence from the root.
    MinArb,
    /// Cheapest arc set meeting every minimum-cost rooted arborescence.
    Blocker,
    /// Cheapest arc set meeting every arborescence tight for the family.
    TightBlocker,
}

/// Exact number: a JSON integer, or a string holding an integer or "p/q".
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExactNumber {
    Int(i64),
    Text(String),
}

impl ExactNumber {
    pub fn to_rational(&self) -> Result<Rational64, ParseError> {
        match self {
            ExactNumber::Int(i) => Ok(Rational64::from_integer(*i)),
            ExactNumber::Text(s) => parse_rational(s),
        }
    }

    pub fn from_rational(r: Rational64) -> Self {
        if *r.denom() == 1 {
            ExactNumber::Int(*r.numer())
        } else {
            ExactNumber::Text(format!("{}/{}", r.numer(), r.denom()))
        }
    }
}

impl fmt::Display for ExactNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactNumber::Int(i) => write!(f, "{i}"),
            ExactNumber::Text(s) => f.write_str(s),
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational64, ParseError> {
    let trimmed = s.trim();
    let (p, q) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (trimmed, "1"),
    };
    let p: i64 = p
        .parse()
        .map_err(|_| bad(format!("invalid exact number {s:?}")))?;
    let q: i64 = q
        .parse()
        .map_err(|_| bad(format!("invalid exact number {s:?}")))?;
    if q <= 0 {
        return Err(bad(format!(
            "exact number {s:?} needs a positive denominator"
        )));
    }
    Ok(Rational64::new(p, q))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArc {
    id: u64,
    tail: String,
    head: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cost: Option<ExactNumber>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<ExactNumber>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    nodes: Vec<String>,
    arcs: Vec<RawArc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    root: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    laminar: Option<Vec<Vec<String>>>,
    problem: Problem,
}

/// A validated instance. Node ids are positions in `labels`; missing costs
/// default to 0 and missing weights to 1.
#[derive(Clone, PartialEq, Debug)]
pub struct Instance {
    pub labels: Vec<String>,
    pub digraph: Digraph,
    pub costs: BTreeMap<ArcId, Rational64>,
    pub weights: BTreeMap<ArcId, Rational64>,
    pub root: Option<NodeId>,
    pub laminar: LaminarFamily,
    pub problem: Problem,
}

impl Instance {
    pub fn labels_of(&self, set: &NodeSet) -> Vec<String> {
        set.iter().map(|&v| self.labels[v].clone()).collect()
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let raw: RawInstance =
        serde_json::from_str(text).map_err(|e| bad(format!("malformed instance: {e}")))?;

    let mut index: BTreeMap<&str, NodeId> = BTreeMap::new();
    for (i, label) in raw.nodes.iter().enumerate() {
        if index.insert(label.as_str(), i).is_some() {
            return Err(bad(format!("duplicate node label {label:?}")));
        }
    }
    let resolve = |label: &str, what: &str| -> Result<NodeId, ParseError> {
        index
            .get(label)
            .copied()
            .ok_or_else(|| bad(format!("{what} references unknown node label {label:?}")))
    };

    let mut arcs = Vec::with_capacity(raw.arcs.len());
    let mut costs = BTreeMap::new();
    let mut weights = BTreeMap::new();
    for a in &raw.arcs {
        let id = ArcId(a.id);
        let tail = resolve(&a.tail, &format!("arc {}", a.id))?;
        let head = resolve(&a.head, &format!("arc {}", a.id))?;
        arcs.push((id, tail, head));
        let cost = match &a.cost {
            None => Rational64::from_integer(0),
            Some(x) => x.to_rational()?,
        };
        let weight = match &a.weight {
            None => Rational64::from_integer(1),
            Some(x) => x.to_rational()?,
        };
        costs.insert(id, cost);
        weights.insert(id, weight);
    }
    let digraph =
        Digraph::with_arc_ids(raw.nodes.len(), arcs).map_err(|e| bad(e.to_string()))?;

    let root = match raw.root.as_deref() {
        None => None,
        Some(label) => Some(resolve(label, "root")?),
    };

    let laminar = match &raw.laminar {
        None => LaminarFamily::empty(),
        Some(sets) => {
            let mut members = Vec::with_capacity(sets.len());
            for (i, set) in sets.iter().enumerate() {
                let mut ns = NodeSet::new();
                for label in set {
                    ns.insert(resolve(label, &format!("laminar set {i}"))?);
                }
                members.push(ns);
            }
            LaminarFamily::new(members).map_err(|e| bad(e.to_string()))?
        }
    };

    Ok(Instance {
        labels: raw.nodes,
        digraph,
        costs,
        weights,
        root,
        laminar,
        problem: raw.problem,
    })
}

/// Canonical serialization; `parse_instance` inverts it exactly.
pub fn print_instance(inst: &Instance) -> String {
    let raw = RawInstance {
        nodes: inst.labels.clone(),
        arcs: inst
            .digraph
            .arcs()
            .iter()
            .map(|a| RawArc {
                id: a.id.0,
                tail: inst.labels[a.tail].clone(),
                head: inst.labels[a.head].clone(),
                cost: Some(ExactNumber::from_rational(inst.costs[&a.id])),
                weight: Some(ExactNumber::from_rational(inst.weights[&a.id])),
            })
            .collect(),
        root: inst.root.map(|r| inst.labels[r].clone()),
        laminar: if inst.laminar.is_empty() {
            None
        } else {
            Some(
                inst.laminar
                    .sets()
                    .iter()
                    .map(|s| inst.labels_of(s))
                    .collect(),
            )
        },
        problem: inst.problem,
    };
    let mut out =
        serde_json::to_string_pretty(&raw).expect("instance serialization cannot fail");
    out.push('\n');
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> Result<i64, ParseError> {
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or_else(|| bad("attribute denominators overflow the 64-bit scale"))
}

/// Clears denominators: the common scale and the integer attribute it
/// induces. Scaling preserves every comparison the solvers make.
pub fn scale_to_integers(
    d: &Digraph,
    values: &BTreeMap<ArcId, Rational64>,
) -> Result<(ArcAttribute, i64), ParseError> {
    let mut scale = 1i64;
    for r in values.values() {
        scale = lcm(scale, *r.denom())?;
    }
    let pairs = values
        .iter()
        .map(|(&id, r)| {
            r.numer()
                .checked_mul(scale / r.denom())
                .map(|v| (id, v))
                .ok_or_else(|| bad("scaled attribute overflows 64 bits"))
        })
        .collect::<Result<Vec<_>, ParseError>>()?;
    let attr = ArcAttribute::from_pairs(d, pairs).map_err(|e| bad(e.to_string()))?;
    Ok((attr, scale))
}

/// `value / scale` in lowest terms, for reports.
pub fn exact_ratio(value: i64, scale: i64) -> ExactNumber {
    ExactNumber::from_rational(Rational64::new(value, scale))
}
