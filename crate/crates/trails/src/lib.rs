//! Spanning `(x, y)`-trails in semicomplete digraphs with two arc-disjoint
//! `(x, y)`-paths, and the eulerian-connectivity test built on them.
//!
//! The construction never uses the arc `yx` and keeps every trail out-degree at
//! most 2.

use serde::Serialize;
use thiserror::Error;

use eulertrail_connectivity::{
    arc_disjoint_paths, is_strong, min_disjoint_pair, strong_components, CutCertificate, PathsOrCut,
};
use eulertrail_core::{Arc, Digraph, Vertex};
use eulertrail_hamilton::{
    cycle_arcs, cycle_covering_complement, hamiltonian_cycle, hamiltonian_path_from,
};
use eulertrail_oracle::{find_spanning_eulerian, oracle_limit};

/// Walk `v_0, ..., v_k` with pairwise distinct arcs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trail {
    pub vertices: Vec<Vertex>,
}

impl Trail {
    pub fn arcs(&self) -> Vec<Arc> {
        self.vertices
            .windows(2)
            .map(|w| Arc::new(w[0], w[1]))
            .collect()
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().expect("nonempty trail")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TrailError {
    #[error("invalid input: {0}")]
    Precondition(String),
    #[error("fewer than two arc-disjoint paths; cut has {} arcs", .0.crossing_arcs.len())]
    NoTwoPaths(CutCertificate),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

/// Case of the construction that produced (part of) a trail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `D - yx` is not strong: a hamiltonian cycle through `yx`, minus `yx`.
    CycleMinusBackArc,
    /// `D - yx - A(P1)` is strong: `P1` plus a cycle covering the rest.
    PathPlusCycle,
    /// Partition with `x, y` in the terminal side.
    TerminalSide,
    /// Partition with `x, y` in the initial side.
    InitialSide,
}

/// True when `t` is an `(x, y)`-trail of `d` (spanning every vertex if `spanning`).
pub fn validate_trail(d: &Digraph, t: &Trail, x: Vertex, y: Vertex, spanning: bool) -> bool {
    if t.vertices.is_empty() || t.start() != x || t.end() != y {
        return false;
    }
    if t.vertices.iter().any(|&v| v >= d.n()) {
        return false;
    }
    let arcs = t.arcs();
    let mut sorted = arcs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != arcs.len() || arcs.iter().any(|&a| !d.contains(a)) {
        return false;
    }
    !spanning || (0..d.n()).all(|v| t.vertices.contains(&v))
}

/// Orders a trail arc set from `x` to `y` (Hierholzer on the set plus a closing arc).
fn sequence(n: usize, arcs: &[Arc], x: Vertex, y: Vertex) -> Option<Trail> {
    let mut succ: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
    // A fresh vertex `n` closes the trail into a circuit without clashing with real arcs.
    for a in arcs {
        succ[a.tail].push(a.head);
    }
    succ[y].push(n);
    succ[n].push(x);
    for s in &mut succ {
        s.sort_unstable_by(|a, b| b.cmp(a));
    }
    let total = arcs.len() + 2;
    let mut stack = vec![x];
    let mut circuit = Vec::with_capacity(total + 1);
    while let Some(&u) = stack.last() {
        if let Some(v) = succ[u].pop() {
            stack.push(v);
        } else {
            circuit.push(stack.pop().unwrap());
        }
    }
    circuit.reverse();
    if circuit.len() != total + 1 {
        return None;
    }
    // Cut the circuit at the closing vertex.
    let k = circuit.iter().position(|&v| v == n)?;
    let mut walk: Vec<Vertex> = circuit[k + 1..].to_vec();
    walk.extend_from_slice(&circuit[1..k]);
    (walk.first() == Some(&x) && walk.last() == Some(&y)).then_some(Trail { vertices: walk })
}

fn degree_profile_ok(n: usize, arcs: &[Arc], x: Vertex, y: Vertex) -> bool {
    let mut out = vec![0i64; n];
    let mut inn = vec![0i64; n];
    for a in arcs {
        out[a.tail] += 1;
        inn[a.head] += 1;
    }
    (0..n).all(|v| {
        let want = if v == x {
            1
        } else if v == y {
            -1
        } else {
            0
        };
        out[v] - inn[v] == want && out[v] + inn[v] > 0 && out[v] <= 2
    })
}

struct Builder {
    branches: Vec<Branch>,
}

impl Builder {
    /// Spanning `(x, y)`-trail arc set of `d` avoiding `yx`, or `None`.
    fn build(&mut self, d: &Digraph, x: Vertex, y: Vertex) -> Option<Vec<Arc>> {
        let (p1, _p2) = min_disjoint_pair(d, x, y)?;
        let p1_arcs: Vec<Arc> = p1.windows(2).map(|w| Arc::new(w[0], w[1])).collect();
        let back = Arc::new(y, x);
        let d1 = d.without_arc(back);
        if !is_strong(&d1) {
            // Every hamiltonian cycle of d uses yx here.
            let c = hamiltonian_cycle(d).ok()?;
            self.branches.push(Branch::CycleMinusBackArc);
            return Some(cycle_arcs(&c).filter(|&a| a != back).collect());
        }
        let host = d1.without_arcs(&p1_arcs);
        if is_strong(&host) {
            let mut f_arcs = p1_arcs.clone();
            if d.contains(back) {
                f_arcs.push(back);
            }
            let c = cycle_covering_complement(d, &p1, &f_arcs, x).ok()?;
            self.branches.push(Branch::PathPlusCycle);
            let mut arcs = p1_arcs;
            arcs.extend(cycle_arcs(&c));
            return Some(arcs);
        }
        self.partition(d, x, y, &p1, &host, Branch::TerminalSide)
            .or_else(|| {
                // The initial-side case is the terminal-side case of the reverse digraph.
                let rev_p1: Vec<Vertex> = p1.iter().rev().copied().collect();
                let arcs = self.partition(
                    &d.reversed(),
                    y,
                    x,
                    &rev_p1,
                    &host.reversed(),
                    Branch::InitialSide,
                )?;
                Some(arcs.into_iter().map(Arc::reversed).collect())
            })
    }

    /// Splits off a part `X` entered only through the last arc of `P1` into `y`'s
    /// predecessor, recurses on the rest and reinserts `X` as a hamiltonian path.
    fn partition(
        &mut self,
        d: &Digraph,
        x: Vertex,
        y: Vertex,
        p1: &[Vertex],
        host: &Digraph,
        tag: Branch,
    ) -> Option<Vec<Arc>> {
        let k = p1.len();
        if k < 3 {
            return None;
        }
        let (x1, w1) = (p1[k - 2], p1[k - 3]);
        for ys in terminal_candidates(host, x, y) {
            if let Some(arcs) = self.terminal_side(d, x, y, p1, x1, w1, &ys) {
                self.branches.push(tag);
                return Some(arcs);
            }
        }
        None
    }

    #[allow(clippy::too_many_arguments)]
    fn terminal_side(
        &mut self,
        d: &Digraph,
        x: Vertex,
        y: Vertex,
        p1: &[Vertex],
        x1: Vertex,
        w1: Vertex,
        ys: &[bool],
    ) -> Option<Vec<Arc>> {
        let n = d.n();
        let xs: Vec<Vertex> = (0..n).filter(|&v| !ys[v]).collect();
        let yv: Vec<Vertex> = (0..n).filter(|&v| ys[v]).collect();
        if xs.is_empty() || ys[x1] || p1.iter().any(|&v| v != x1 && !ys[v]) {
            return None;
        }
        let crossing: Vec<Arc> = d.arcs().filter(|a| ys[a.tail] && !ys[a.head]).collect();
        if crossing != [Arc::new(w1, x1)] {
            return None;
        }
        let dx = d.induced(&xs);
        let qx: Vec<Vertex> = hamiltonian_path_from(&dx, local(&xs, x1))
            .ok()?
            .into_iter()
            .map(|i| xs[i])
            .collect();
        let mut dy = d.induced(&yv);
        let (lw1, ly) = (local(&yv, w1), local(&yv, y));
        dy.add_arc(lw1, ly);
        if !is_strong(&dy) {
            return None;
        }
        let inner = self.build(&dy, local(&yv, x), ly)?;
        let mut w: Vec<Arc> = inner
            .into_iter()
            .map(|a| Arc::new(yv[a.tail], yv[a.head]))
            .collect();
        let u = if w.contains(&Arc::new(w1, y)) {
            y
        } else {
            w.iter().filter(|a| a.tail == w1).map(|a| a.head).min()?
        };
        w.retain(|&a| a != Arc::new(w1, u));
        let last = *qx.last().unwrap();
        if !d.has_arc(last, u) {
            return None;
        }
        w.push(Arc::new(w1, x1));
        w.extend(qx.windows(2).map(|p| Arc::new(p[0], p[1])));
        w.push(Arc::new(last, u));
        Some(w)
    }
}

fn local(vs: &[Vertex], v: Vertex) -> usize {
    vs.iter().position(|&w| w == v).expect("vertex in part")
}

/// Out-closed vertex sets of `host` containing `x` and `y`: terminal strong
/// components holding both, then the set reachable from `{x, y}`.
fn terminal_candidates(host: &Digraph, x: Vertex, y: Vertex) -> Vec<Vec<bool>> {
    let n = host.n();
    let mut out = Vec::new();
    let comps = strong_components(host);
    let mut comp_of = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    if comp_of[x] == comp_of[y] {
        let c = comp_of[x];
        let terminal = host
            .arcs()
            .all(|a| comp_of[a.tail] != c || comp_of[a.head] == c);
        if terminal {
            out.push((0..n).map(|v| comp_of[v] == c).collect());
        }
    }
    let rx = eulertrail_connectivity::reachable(host, x, false);
    let ry = eulertrail_connectivity::reachable(host, y, false);
    let closure: Vec<bool> = (0..n).map(|v| rx[v] || ry[v]).collect();
    if !out.contains(&closure) {
        out.push(closure);
    }
    out
}

/// Spanning `(x, y)`-trail avoiding `yx`, together with the construction cases used.
pub fn spanning_trail_traced(
    d: &Digraph,
    x: Vertex,
    y: Vertex,
) -> Result<(Trail, Vec<Branch>), TrailError> {
    let n = d.n();
    if x >= n || y >= n || x == y {
        return Err(TrailError::Precondition(
            "x and y must be distinct vertices".into(),
        ));
    }
    if !d.is_semicomplete() {
        return Err(TrailError::Precondition(
            "digraph is not semicomplete".into(),
        ));
    }
    if !is_strong(d) {
        return Err(TrailError::Precondition("digraph is not strong".into()));
    }
    if let Ok(PathsOrCut::Cut(cut)) = arc_disjoint_paths(d, x, y, 2) {
        return Err(TrailError::NoTwoPaths(cut));
    }
    let mut builder = Builder {
        branches: Vec::new(),
    };
    let arcs = builder
        .build(d, x, y)
        .ok_or_else(|| TrailError::ConstructionFailed(format!("no case applied for ({x}, {y})")))?;
    if arcs.contains(&Arc::new(y, x)) || !degree_profile_ok(n, &arcs, x, y) {
        return Err(TrailError::ConstructionFailed(format!(
            "assembled arcs for ({x}, {y}) do not form a spanning trail"
        )));
    }
    let trail = sequence(n, &arcs, x, y).ok_or_else(|| {
        TrailError::ConstructionFailed(format!("arcs for ({x}, {y}) are disconnected"))
    })?;
    Ok((trail, builder.branches))
}

/// Spanning `(x, y)`-trail of a strong semicomplete digraph that never uses `yx`.
/// Fails with the separating cut when two arc-disjoint `(x, y)`-paths do not exist.
pub fn spanning_trail(d: &Digraph, x: Vertex, y: Vertex) -> Result<Trail, TrailError> {
    spanning_trail_traced(d, x, y).map(|(t, _)| t)
}

/// Spanning eulerian subdigraph of `d` containing `uv`: a spanning `(v, u)`-trail closed by `uv`.
pub fn eulerian_through_arc(d: &Digraph, uv: Arc) -> Result<Vec<Arc>, TrailError> {
    if !d.contains(uv) {
        return Err(TrailError::Precondition(format!("{uv} is not an arc")));
    }
    let trail = spanning_trail(d, uv.head, uv.tail)?;
    let mut arcs = trail.arcs();
    arcs.push(uv);
    arcs.sort_unstable();
    Ok(arcs)
}

/// How [`is_eulerian_connected`] settled a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairMethod {
    Constructed,
    Oracle,
}

/// Verdict of [`is_eulerian_connected`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum EulerianConnectivity {
    /// Every ordered pair has a spanning trail.
    Connected,
    /// The pair has no spanning trail.
    Fails {
        x: Vertex,
        y: Vertex,
        method: PairMethod,
    },
    /// The pair lies beyond both the construction and the oracle size limit.
    Unknown { x: Vertex, y: Vertex },
}

impl EulerianConnectivity {
    pub fn is_connected(&self) -> bool {
        matches!(self, EulerianConnectivity::Connected)
    }
}

/// Spanning `(x, y)`-trail by exhaustive search: a spanning eulerian subdigraph of
/// `d` plus a new vertex `w` with arcs `y -> w -> x`.
pub fn spanning_trail_by_oracle(d: &Digraph, x: Vertex, y: Vertex) -> Option<Result<Trail, ()>> {
    let n = d.n();
    if n + 1 > oracle_limit() {
        return None;
    }
    let mut ext = d.with_extra_vertices(1);
    ext.add_arc(y, n);
    ext.add_arc(n, x);
    let found = find_spanning_eulerian(&ext, &[Arc::new(y, n)], &[]).ok()?;
    Some(match found {
        Some(sub) => {
            let arcs: Vec<Arc> = sub
                .arcs
                .into_iter()
                .filter(|a| a.tail != n && a.head != n)
                .collect();
            sequence(n, &arcs, x, y).ok_or(())
        }
        None => Err(()),
    })
}

/// Whether every ordered pair of distinct vertices is joined by a spanning trail.
/// Pairs with two arc-disjoint paths are settled by construction, the rest by the
/// oracle when small enough.
pub fn is_eulerian_connected(d: &Digraph) -> EulerianConnectivity {
    let n = d.n();
    let strong = is_strong(d);
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            if !strong {
                // Some vertex is unreachable from x, or cannot reach y.
                let bad = !eulertrail_connectivity::reachable(d, x, false)
                    .iter()
                    .all(|&b| b)
                    || !eulertrail_connectivity::reachable(d, y, true)
                        .iter()
                        .all(|&b| b);
                if bad {
                    return EulerianConnectivity::Fails {
                        x,
                        y,
                        method: PairMethod::Constructed,
                    };
                }
            }
            if strong && d.is_semicomplete() && spanning_trail(d, x, y).is_ok() {
                continue;
            }
            match spanning_trail_by_oracle(d, x, y) {
                Some(Ok(_)) => {}
                Some(Err(())) => {
                    return EulerianConnectivity::Fails {
                        x,
                        y,
                        method: PairMethod::Oracle,
                    }
                }
                None => return EulerianConnectivity::Unknown { x, y },
            }
        }
    }
    EulerianConnectivity::Connected
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_three_trail_is_one_of_the_enumerated() {
        // Arc sets of all spanning (0, 1)-trails avoiding 10, by subset enumeration.
        let d = Digraph::complete(3);
        let t = spanning_trail(&d, 0, 1).unwrap();
        assert!(validate_trail(&d, &t, 0, 1, true));
        let mut arcs = t.arcs();
        arcs.sort_unstable();
        let expected = [
            vec![Arc::new(0, 2), Arc::new(2, 1)],
            vec![Arc::new(0, 1), Arc::new(0, 2), Arc::new(2, 0)],
            vec![Arc::new(0, 1), Arc::new(1, 2), Arc::new(2, 1)],
            vec![
                Arc::new(0, 1),
                Arc::new(0, 2),
                Arc::new(1, 2),
                Arc::new(2, 0),
                Arc::new(2, 1),
            ],
        ];
        assert!(expected.contains(&arcs));
    }

    #[test]
    fn missing_paths_yield_cut() {
        match spanning_trail(&Digraph::cycle(3), 0, 1) {
            Err(TrailError::NoTwoPaths(cut)) => assert_eq!(cut.crossing_arcs.len(), 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn validation() {
        let d = Digraph::complete(3);
        let good = Trail {
            vertices: vec![0, 2, 1],
        };
        assert!(validate_trail(&d, &good, 0, 1, true));
        let repeat = Trail {
            vertices: vec![0, 1, 0, 1],
        };
        assert!(!validate_trail(&d, &repeat, 0, 1, false));
        let short = Trail {
            vertices: vec![0, 1],
        };
        assert!(validate_trail(&d, &short, 0, 1, false));
        assert!(!validate_trail(&d, &short, 0, 1, true));
    }

    #[test]
    fn eulerian_connectivity_examples() {
        assert!(is_eulerian_connected(&Digraph::complete(4)).is_connected());
        assert!(!is_eulerian_connected(&Digraph::transitive_tournament(3)).is_connected());
    }
}
