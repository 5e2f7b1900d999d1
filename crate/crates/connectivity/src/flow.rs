//! Integral max-flow (Dinic) and successive-shortest-path min-cost flow.
//!
//! Both networks iterate edges in insertion order, so results are deterministic
//! for a fixed construction order.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct Edge {
    to: usize,
    cap: i64,
}

/// Residual network for integral max-flow. Edge `2k` is the forward edge of the
/// `k`-th added arc and `2k + 1` its reverse.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    edges: Vec<Edge>,
    original: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            edges: Vec::new(),
            original: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Adds arc `u -> v` with capacity `cap`; returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64) -> usize {
        let id = self.original.len();
        self.adj[u].push(self.edges.len());
        self.edges.push(Edge { to: v, cap });
        self.adj[v].push(self.edges.len());
        self.edges.push(Edge { to: u, cap: 0 });
        self.original.push(cap);
        id
    }

    /// Flow currently carried by arc `id`.
    pub fn flow(&self, id: usize) -> i64 {
        self.original[id] - self.edges[2 * id].cap
    }

    /// Endpoints of arc `id`.
    pub fn endpoints(&self, id: usize) -> (usize, usize) {
        (self.edges[2 * id + 1].to, self.edges[2 * id].to)
    }

    fn levels(&self, s: usize) -> Vec<i64> {
        let mut level = vec![-1; self.adj.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.edges[e].to;
                if self.edges[e].cap > 0 && level[v] < 0 {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn augment(&mut self, u: usize, t: usize, pushed: i64, level: &[i64], it: &mut [usize]) -> i64 {
        if u == t {
            return pushed;
        }
        while it[u] < self.adj[u].len() {
            let e = self.adj[u][it[u]];
            let v = self.edges[e].to;
            if self.edges[e].cap > 0 && level[v] == level[u] + 1 {
                let got = self.augment(v, t, pushed.min(self.edges[e].cap), level, it);
                if got > 0 {
                    self.edges[e].cap -= got;
                    self.edges[e ^ 1].cap += got;
                    return got;
                }
            }
            it[u] += 1;
        }
        0
    }

    /// Pushes up to `limit` additional units from `s` to `t`; returns the amount pushed.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut total = 0;
        while total < limit {
            let level = self.levels(s);
            if level[t] < 0 {
                break;
            }
            let mut it = vec![0; self.adj.len()];
            loop {
                let got = self.augment(s, t, limit - total, &level, &mut it);
                if got == 0 {
                    break;
                }
                total += got;
                if total == limit {
                    break;
                }
            }
        }
        total
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.adj[u] {
                let v = self.edges[e].to;
                if self.edges[e].cap > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

#[derive(Clone, Debug)]
struct CostEdge {
    to: usize,
    cap: i64,
    cost: i64,
}

/// Min-cost flow by successive shortest paths (Bellman-Ford, so negative
/// residual costs are handled without potentials).
#[derive(Clone, Debug)]
pub struct MinCostFlow {
    edges: Vec<CostEdge>,
    original: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl MinCostFlow {
    pub fn new(nodes: usize) -> Self {
        MinCostFlow {
            edges: Vec::new(),
            original: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64, cost: i64) -> usize {
        let id = self.original.len();
        self.adj[u].push(self.edges.len());
        self.edges.push(CostEdge { to: v, cap, cost });
        self.adj[v].push(self.edges.len());
        self.edges.push(CostEdge {
            to: u,
            cap: 0,
            cost: -cost,
        });
        self.original.push(cap);
        id
    }

    pub fn flow(&self, id: usize) -> i64 {
        self.original[id] - self.edges[2 * id].cap
    }

    /// Sends up to `amount` units at minimum cost; returns `(sent, cost)`.
    pub fn run(&mut self, s: usize, t: usize, amount: i64) -> (i64, i64) {
        let n = self.adj.len();
        let (mut sent, mut cost) = (0, 0);
        while sent < amount {
            let mut dist = vec![i64::MAX; n];
            let mut via = vec![usize::MAX; n];
            dist[s] = 0;
            // Bellman-Ford in insertion order keeps the chosen path deterministic.
            for _ in 0..n {
                let mut changed = false;
                for u in 0..n {
                    if dist[u] == i64::MAX {
                        continue;
                    }
                    for &e in &self.adj[u] {
                        let edge = &self.edges[e];
                        if edge.cap > 0 && dist[u] + edge.cost < dist[edge.to] {
                            dist[edge.to] = dist[u] + edge.cost;
                            via[edge.to] = e;
                            changed = true;
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            if dist[t] == i64::MAX {
                break;
            }
            let mut push = amount - sent;
            let mut v = t;
            while v != s {
                let e = via[v];
                push = push.min(self.edges[e].cap);
                v = self.edges[e ^ 1].to;
            }
            let mut v = t;
            while v != s {
                let e = via[v];
                self.edges[e].cap -= push;
                self.edges[e ^ 1].cap += push;
                v = self.edges[e ^ 1].to;
            }
            sent += push;
            cost += push * dist[t];
        }
        (sent, cost)
    }
}
