//! Strong connectivity, cut-arcs, arc-connectivity and Menger certificates.

pub mod flow;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use serde::Serialize;

use eulertrail_core::{Arc, Digraph, Error, Result, Vertex};

pub use flow::{FlowNetwork, MinCostFlow};

/// Witness that fewer than `k` arcs leave `side_s`: `(side_s, side_t)` partitions
/// the vertices and `crossing_arcs` are exactly the arcs from `side_s` to `side_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub side_s: Vec<Vertex>,
    pub side_t: Vec<Vertex>,
    pub crossing_arcs: Vec<Arc>,
}

impl CutCertificate {
    /// Builds the certificate for the vertex set marked in `in_s`.
    pub fn from_side(d: &Digraph, in_s: &[bool]) -> Self {
        let side_s: Vec<Vertex> = (0..d.n()).filter(|&v| in_s[v]).collect();
        let side_t: Vec<Vertex> = (0..d.n()).filter(|&v| !in_s[v]).collect();
        let crossing_arcs = d.arcs().filter(|a| in_s[a.tail] && !in_s[a.head]).collect();
        CutCertificate {
            side_s,
            side_t,
            crossing_arcs,
        }
    }

    /// Checks the partition and crossing-arc invariants against `d`.
    pub fn validate(&self, d: &Digraph) -> bool {
        let mut in_s = vec![None; d.n()];
        for &v in &self.side_s {
            if v >= d.n() || in_s[v].is_some() {
                return false;
            }
            in_s[v] = Some(true);
        }
        for &v in &self.side_t {
            if v >= d.n() || in_s[v].is_some() {
                return false;
            }
            in_s[v] = Some(false);
        }
        if in_s.iter().any(Option::is_none) {
            return false;
        }
        let flags: Vec<bool> = in_s.into_iter().map(|f| f == Some(true)).collect();
        *self == CutCertificate::from_side(d, &flags)
    }
}

/// Vertices reachable from `start`, following arcs backwards when `reverse`.
pub fn reachable(d: &Digraph, start: Vertex, reverse: bool) -> Vec<bool> {
    let n = d.n();
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in 0..n {
            let arc = if reverse {
                d.has_arc(v, u)
            } else {
                d.has_arc(u, v)
            };
            if arc && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

/// Every ordered pair is joined by a path. Empty and single-vertex digraphs are strong.
pub fn is_strong(d: &Digraph) -> bool {
    d.n() <= 1
        || (reachable(d, 0, false).into_iter().all(|b| b)
            && reachable(d, 0, true).into_iter().all(|b| b))
}

/// Strongly connected components in an acyclic order (no arc from a later
/// component to an earlier one). Ties between incomparable components are broken
/// by smallest member; each component is sorted.
pub fn strong_components(d: &Digraph) -> Vec<Vec<Vertex>> {
    let n = d.n();
    // Kosaraju: finishing order on d, then sweeps on the reverse.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            let mut advanced = false;
            while *next < n {
                let v = *next;
                *next += 1;
                if d.has_arc(u, v) && !seen[v] {
                    seen[v] = true;
                    stack.push((v, 0));
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                order.push(u);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for &root in order.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = count;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if d.has_arc(v, u) && comp[v] == usize::MAX {
                    comp[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    let mut members = vec![Vec::new(); count];
    for v in 0..n {
        members[comp[v]].push(v);
    }
    // Kahn's algorithm on the condensation, smallest minimum vertex first.
    let mut indeg = vec![0usize; count];
    let mut succ = vec![vec![false; count]; count];
    for a in d.arcs() {
        let (cu, cv) = (comp[a.tail], comp[a.head]);
        if cu != cv && !succ[cu][cv] {
            succ[cu][cv] = true;
            indeg[cv] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<(Vertex, usize)>> = (0..count)
        .filter(|&c| indeg[c] == 0)
        .map(|c| Reverse((members[c][0], c)))
        .collect();
    let mut out = Vec::with_capacity(count);
    while let Some(Reverse((_, c))) = heap.pop() {
        out.push(std::mem::take(&mut members[c]));
        for c2 in 0..count {
            if succ[c][c2] {
                indeg[c2] -= 1;
                if indeg[c2] == 0 {
                    heap.push(Reverse((members[c2][0], c2)));
                }
            }
        }
    }
    out
}

fn reaches_avoiding(d: &Digraph, from: Vertex, to: Vertex, skip: Arc) -> bool {
    let n = d.n();
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        if u == to {
            return true;
        }
        for v in 0..n {
            if !seen[v] && d.has_arc(u, v) && !(u == skip.tail && v == skip.head) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}

/// True when `d` minus `a` is not strong. Requires `d` strong.
pub fn is_cut_arc(d: &Digraph, a: Arc) -> bool {
    // In a strong digraph, deleting uv keeps strongness iff u still reaches v.
    d.contains(a) && !reaches_avoiding(d, a.tail, a.head, a)
}

/// Arcs whose single removal destroys strongness, in lexicographic order.
pub fn cut_arcs(d: &Digraph) -> Result<Vec<Arc>> {
    if !is_strong(d) {
        return Err(Error::Precondition(
            "cut_arcs requires a strong digraph".into(),
        ));
    }
    Ok(d.arcs().filter(|&a| is_cut_arc(d, a)).collect())
}

fn unit_network(d: &Digraph) -> (FlowNetwork, Vec<Arc>) {
    let mut net = FlowNetwork::new(d.n());
    let arcs: Vec<Arc> = d.arcs().collect();
    for a in &arcs {
        net.add_edge(a.tail, a.head, 1);
    }
    (net, arcs)
}

/// Maximum number of arc-disjoint `(x, y)`-paths, capped at `limit`.
pub fn local_arc_connectivity(d: &Digraph, x: Vertex, y: Vertex, limit: usize) -> usize {
    let (mut net, _) = unit_network(d);
    net.max_flow(x, y, limit as i64) as usize
}

/// `λ(d)` together with a minimum cut when `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcConnectivity {
    pub lambda: usize,
    pub cut: Option<CutCertificate>,
}

/// Largest `k` such that `d` is `k`-arc-strong; `0` when not strong and for
/// digraphs with fewer than two vertices.
pub fn arc_connectivity(d: &Digraph) -> ArcConnectivity {
    let n = d.n();
    if n <= 1 {
        return ArcConnectivity {
            lambda: 0,
            cut: None,
        };
    }
    let fwd = reachable(d, 0, false);
    if fwd.iter().any(|&b| !b) {
        return ArcConnectivity {
            lambda: 0,
            cut: Some(CutCertificate::from_side(d, &fwd)),
        };
    }
    let bwd = reachable(d, 0, true);
    if bwd.iter().any(|&b| !b) {
        let side: Vec<bool> = bwd.iter().map(|&b| !b).collect();
        return ArcConnectivity {
            lambda: 0,
            cut: Some(CutCertificate::from_side(d, &side)),
        };
    }
    let mut best = usize::MAX;
    let mut best_side = Vec::new();
    for v in 1..n {
        for (s, t) in [(0, v), (v, 0)] {
            let (mut net, _) = unit_network(d);
            let f = net.max_flow(s, t, best.min(n * n) as i64) as usize;
            if f < best {
                best = f;
                best_side = net.residual_reachable(s);
            }
        }
    }
    ArcConnectivity {
        lambda: best,
        cut: Some(CutCertificate::from_side(d, &best_side)),
    }
}

/// Outcome of [`arc_disjoint_paths`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathsOrCut {
    /// Pairwise arc-disjoint simple paths, each a vertex sequence from `x` to `y`.
    Paths(Vec<Vec<Vertex>>),
    /// A cut separating `x` from `y` with fewer than `k` crossing arcs.
    Cut(CutCertificate),
}

/// Splits an integral flow from `x` to `y` into simple paths (flow cycles are dropped).
fn decompose_paths(
    n: usize,
    mut used: Vec<Vec<Vertex>>,
    x: Vertex,
    y: Vertex,
    k: usize,
) -> Vec<Vec<Vertex>> {
    for succ in &mut used {
        succ.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut paths = Vec::with_capacity(k);
    for _ in 0..k {
        let mut path = vec![x];
        let mut pos = vec![usize::MAX; n];
        pos[x] = 0;
        let mut u = x;
        while u != y {
            let v = used[u].pop().expect("flow conservation");
            if pos[v] != usize::MAX {
                for &w in &path[pos[v] + 1..] {
                    pos[w] = usize::MAX;
                }
                path.truncate(pos[v] + 1);
            } else {
                pos[v] = path.len();
                path.push(v);
            }
            u = v;
        }
        paths.push(path);
    }
    paths
}

/// Either `k` pairwise arc-disjoint `(x, y)`-paths or a cut with fewer than `k`
/// crossing arcs.
pub fn arc_disjoint_paths(d: &Digraph, x: Vertex, y: Vertex, k: usize) -> Result<PathsOrCut> {
    if x == y {
        return Err(Error::InvalidParameter("x and y must differ".into()));
    }
    if x >= d.n() || y >= d.n() {
        return Err(Error::InvalidParameter("vertex out of range".into()));
    }
    if k == 0 {
        return Ok(PathsOrCut::Paths(Vec::new()));
    }
    let (mut net, arcs) = unit_network(d);
    let f = net.max_flow(x, y, k as i64) as usize;
    if f < k {
        let side = net.residual_reachable(x);
        return Ok(PathsOrCut::Cut(CutCertificate::from_side(d, &side)));
    }
    let mut used = vec![Vec::new(); d.n()];
    for (id, a) in arcs.iter().enumerate() {
        if net.flow(id) > 0 {
            used[a.tail].push(a.head);
        }
    }
    Ok(PathsOrCut::Paths(decompose_paths(d.n(), used, x, y, k)))
}

/// Two arc-disjoint `(x, y)`-paths `(p1, p2)` whose union has the fewest arcs,
/// with `p1` the shortest `(x, y)`-path inside that union. `None` when no such
/// pair exists.
pub fn min_disjoint_pair(d: &Digraph, x: Vertex, y: Vertex) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let n = d.n();
    let mut mcf = MinCostFlow::new(n);
    let arcs: Vec<Arc> = d.arcs().collect();
    for a in &arcs {
        mcf.add_edge(a.tail, a.head, 1, 1);
    }
    let (sent, _) = mcf.run(x, y, 2);
    if sent < 2 {
        return None;
    }
    let union: Vec<Arc> = arcs
        .iter()
        .enumerate()
        .filter(|&(id, _)| mcf.flow(id) > 0)
        .map(|(_, &a)| a)
        .collect();
    // Shortest (x, y)-path inside the union; the remaining arcs form the other path
    // because a minimum-cost flow carries no cycle.
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        for a in union.iter().filter(|a| a.tail == u) {
            if !seen[a.head] {
                seen[a.head] = true;
                prev[a.head] = u;
                queue.push_back(a.head);
            }
        }
    }
    let mut p1 = vec![y];
    while *p1.last().unwrap() != x {
        p1.push(prev[*p1.last().unwrap()]);
    }
    p1.reverse();
    let p1_arcs: Vec<Arc> = p1.windows(2).map(|w| Arc::new(w[0], w[1])).collect();
    let mut rest = vec![Vec::new(); n];
    for a in union.iter().filter(|a| !p1_arcs.contains(a)) {
        rest[a.tail].push(a.head);
    }
    let mut p2 = vec![x];
    let mut u = x;
    while u != y {
        let v = rest[u].pop()?;
        p2.push(v);
        u = v;
    }
    Some((p1, p2))
}
