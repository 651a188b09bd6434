//! Integer maximum flow (Dinic's algorithm) on an explicit residual network.
//!
//! Edges are stored in pairs (`2k` forward, `2k+1` reverse), which makes the
//! two canonical minimum-cut sides cheap to extract: the nodes reachable from
//! the source through positive residual capacity, and the nodes that still
//! reach the sink. Both sets are the same for every maximum flow, so cut
//! extraction is deterministic by construction.

pub(crate) const INF: i64 = i64::MAX / 4;

#[derive(Clone, Debug)]
pub(crate) struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<i64>,
    orig: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64) {
        debug_assert!(cap >= 0);
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(cap);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn reset(&mut self) {
        if self.orig.is_empty() {
            self.orig = self.cap.clone();
        } else {
            self.cap.copy_from_slice(&self.orig);
        }
    }

    /// Maximum `s`-`t` flow. Restores full capacities first, so one network
    /// can serve many terminal pairs.
    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        debug_assert_ne!(s, t);
        self.reset();
        let n = self.node_count();
        let mut flow = 0;
        let mut level = vec![-1i32; n];
        loop {
            level.fill(-1);
            level[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && level[v] < 0 {
                        level[v] = level[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if level[t] < 0 {
                return flow;
            }
            let mut iter = vec![0usize; n];
            loop {
                let pushed = self.dfs(s, t, INF, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64, level: &[i32], iter: &mut [usize]) -> i64 {
        if u == t {
            return limit;
        }
        while iter[u] < self.adj[u].len() {
            let e = self.adj[u][iter[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]), level, iter);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            iter[u] += 1;
        }
        0
    }

    /// Nodes reachable from `s` through positive residual capacity: the
    /// unique minimal source side of a minimum cut. Call after `max_flow`.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Nodes with a positive-residual path to `t`: the unique minimal sink
    /// side of a minimum cut. Call after `max_flow`.
    pub fn sink_side(&self, t: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        seen[t] = true;
        let mut stack = vec![t];
        while let Some(v) = stack.pop() {
            for &e in &self.adj[v] {
                // The pair of an edge out of `v` is an edge into `v`; it has
                // residual capacity iff its tail still reaches `v`.
                let u = self.to[e];
                if self.cap[e ^ 1] > 0 && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_reuse() {
        let mut net = FlowNetwork::new(3);
        net.add_edge(0, 1, 5);
        net.add_edge(1, 2, 3);
        assert_eq!(net.max_flow(0, 2), 3);
        assert_eq!(net.max_flow(0, 2), 3);
        assert_eq!(net.max_flow(0, 1), 5);
    }

    #[test]
    fn diamond() {
        let mut net = FlowNetwork::new(4);
        net.add_edge(0, 1, 2);
        net.add_edge(0, 2, 1);
        net.add_edge(1, 3, 1);
        net.add_edge(2, 3, 2);
        assert_eq!(net.max_flow(0, 3), 2);
    }

    #[test]
    fn parallel_edges_accumulate() {
        let mut net = FlowNetwork::new(2);
        net.add_edge(0, 1, 1);
        net.add_edge(0, 1, 2);
        assert_eq!(net.max_flow(0, 1), 3);
    }

    #[test]
    fn cut_sides_are_minimal() {
        // 0 -> 1 -> 2 -> 3 with the bottleneck in the middle: the minimal
        // source side is {0, 1}, the minimal sink side is {2, 3}.
        let mut net = FlowNetwork::new(4);
        net.add_edge(0, 1, 9);
        net.add_edge(1, 2, 1);
        net.add_edge(2, 3, 9);
        assert_eq!(net.max_flow(0, 3), 1);
        assert_eq!(net.source_side(0), vec![true, true, false, false]);
        assert_eq!(net.sink_side(3), vec![false, false, true, true]);
    }

    #[test]
    fn disconnected_sink() {
        let mut net = FlowNetwork::new(3);
        net.add_edge(0, 1, 4);
        assert_eq!(net.max_flow(0, 2), 0);
        assert_eq!(net.source_side(0), vec![true, true, false]);
    }
}
