//! Merging the components of an eulerian factor by local arc substitutions.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use eulertrail_core::{degrees, euler_tour, weak_components, Arc, Digraph, Error, Result, Vertex};

use crate::circulation::EulerianFactor;

/// Which merge pattern licensed a substitution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MergeRule {
    /// A cycle whose arcs all join distinct components.
    CrossCycle,
    /// A 2-cycle between two components.
    TwoCycle,
    /// `uv` of one component replaced by `ux, xv` through another.
    PathInsertion,
    /// `uv, xy` from two components replaced by `uy, xv`.
    CrossSwap,
    /// A vertex adjacent to all of another component that has arcs both ways.
    UniversalMixed,
    /// A vertex missing one neighbour of another component, with arcs both ways
    /// but without the bridging arcs around that neighbour.
    HypouniversalMixed,
    /// Three components joined around a 3-cycle of the contraction.
    ThreeCycle,
    /// A short alternating cycle of added and removed arcs.
    Alternating,
}

/// Arcs to remove from and add to a factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Substitution {
    pub rule: MergeRule,
    pub remove: Vec<Arc>,
    pub add: Vec<Arc>,
}

impl Substitution {
    fn new(rule: MergeRule, remove: Vec<Arc>, add: Vec<Arc>) -> Self {
        Substitution { rule, remove, add }
    }
}

fn vertex_set(arcs: &[Arc]) -> BTreeSet<Vertex> {
    arcs.iter().flat_map(|a| [a.tail, a.head]).collect()
}

/// Patterns that merge two vertex-disjoint eulerian subdigraphs `h1`, `h2` of
/// `d`. Empty when none is present. Each entry lists one licensed
/// substitution; a vertex that is universal (or misses a single vertex) and
/// mixed towards the other side is reported with the substitution its tour
/// neighbourhood yields.
pub fn check_merge_obstructions(d: &Digraph, h1: &[Arc], h2: &[Arc]) -> Vec<Substitution> {
    let mut found = Vec::new();
    let sides = [(h1, h2), (h2, h1)];
    let v1 = vertex_set(h1);
    let v2 = vertex_set(h2);

    for &u in &v1 {
        for &v in &v2 {
            if d.has_arc(u, v) && d.has_arc(v, u) {
                found.push(Substitution::new(
                    MergeRule::TwoCycle,
                    vec![],
                    vec![Arc::new(u, v), Arc::new(v, u)],
                ));
            }
        }
    }
    for (hi, hj) in sides {
        for &uv in hi {
            for x in vertex_set(hj) {
                if d.has_arc(uv.tail, x) && d.has_arc(x, uv.head) {
                    found.push(path_insertion(uv, x));
                }
            }
        }
    }
    for &uv in h1 {
        for &xy in h2 {
            if d.has_arc(uv.tail, xy.head) && d.has_arc(xy.tail, uv.head) {
                found.push(Substitution::new(
                    MergeRule::CrossSwap,
                    vec![uv, xy],
                    vec![Arc::new(uv.tail, xy.head), Arc::new(xy.tail, uv.head)],
                ));
            }
        }
    }
    for (hi, hj) in sides {
        let other = vertex_set(hj);
        for x in vertex_set(hi) {
            let missing: Vec<Vertex> = other
                .iter()
                .copied()
                .filter(|&w| !d.adjacent(x, w))
                .collect();
            let mixed =
                other.iter().any(|&w| d.has_arc(x, w)) && other.iter().any(|&w| d.has_arc(w, x));
            if !mixed {
                continue;
            }
            match missing.as_slice() {
                [] => {
                    if let Some(s) = tour_neighbourhood_merge(d, hj, x) {
                        found.push(Substitution {
                            rule: MergeRule::UniversalMixed,
                            ..s
                        });
                    }
                }
                [y] => {
                    let bridged = hj.iter().any(|a| a.head == *y && d.has_arc(a.tail, x))
                        && hj.iter().any(|a| a.tail == *y && d.has_arc(x, a.head));
                    if !bridged {
                        if let Some(s) = tour_neighbourhood_merge(d, hj, x) {
                            found.push(Substitution {
                                rule: MergeRule::HypouniversalMixed,
                                ..s
                            });
                        }
                    }
                }
                _ => {}
            }
        }
    }
    found
}

fn path_insertion(uv: Arc, x: Vertex) -> Substitution {
    Substitution::new(
        MergeRule::PathInsertion,
        vec![uv],
        vec![Arc::new(uv.tail, x), Arc::new(x, uv.head)],
    )
}

/// A 2-cycle or path insertion joining `x` to the component `h`.
fn tour_neighbourhood_merge(d: &Digraph, h: &[Arc], x: Vertex) -> Option<Substitution> {
    for w in vertex_set(h) {
        if d.has_arc(x, w) && d.has_arc(w, x) {
            return Some(Substitution::new(
                MergeRule::TwoCycle,
                vec![],
                vec![Arc::new(x, w), Arc::new(w, x)],
            ));
        }
    }
    h.iter()
        .find(|a| d.has_arc(a.tail, x) && d.has_arc(x, a.head))
        .map(|&uv| path_insertion(uv, x))
}

/// One applied merge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MergeStep {
    pub substitution: Substitution,
    pub components_after: usize,
}

/// Result of [`merge_all`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MergeOutcome {
    pub factor: EulerianFactor,
    pub steps: Vec<MergeStep>,
}

/// Search budget of the alternating-cycle rule, in visited partial paths.
const ALTERNATING_BUDGET: usize = 200_000;

struct State<'a> {
    host: &'a Digraph,
    arcs: BTreeSet<Arc>,
    comp: Vec<usize>,
    count: usize,
}

impl<'a> State<'a> {
    fn new(host: &'a Digraph, arcs: &[Arc]) -> Self {
        let mut s = State {
            host,
            arcs: arcs.iter().copied().collect(),
            comp: Vec::new(),
            count: 0,
        };
        s.refresh();
        s
    }

    fn refresh(&mut self) {
        let arcs: Vec<Arc> = self.arcs.iter().copied().collect();
        let comps = weak_components(self.host.n(), &arcs);
        self.comp = vec![0; self.host.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                self.comp[v] = i;
            }
        }
        self.count = comps.len();
    }

    fn crossing(&self, u: Vertex, v: Vertex) -> bool {
        self.comp[u] != self.comp[v] && self.host.has_arc(u, v)
    }

    /// Applies `s` when it yields a factor with fewer components.
    fn try_apply(&mut self, s: &Substitution) -> bool {
        if s.remove.iter().any(|a| !self.arcs.contains(a))
            || s.add
                .iter()
                .any(|a| self.arcs.contains(a) || !self.host.contains(*a))
        {
            return false;
        }
        let mut next = self.arcs.clone();
        for a in &s.remove {
            next.remove(a);
        }
        for a in &s.add {
            if !next.insert(*a) {
                return false;
            }
        }
        let list: Vec<Arc> = next.iter().copied().collect();
        let n = self.host.n();
        let (out, inn) = degrees(n, &list);
        if (0..n).any(|v| out[v] != inn[v] || out[v] == 0) {
            return false;
        }
        if weak_components(n, &list).len() >= self.count {
            return false;
        }
        self.arcs = next;
        self.refresh();
        true
    }

    fn members(&self, c: usize) -> Vec<Vertex> {
        (0..self.host.n()).filter(|&v| self.comp[v] == c).collect()
    }

    fn preds(&self, v: Vertex) -> Vec<Vertex> {
        self.arcs
            .iter()
            .filter(|a| a.head == v)
            .map(|a| a.tail)
            .collect()
    }

    /// Shortest cycle made of crossing arcs.
    fn cross_cycle(&self) -> Option<Substitution> {
        let n = self.host.n();
        let mut best: Option<Vec<Vertex>> = None;
        for start in 0..n {
            let mut prev = vec![usize::MAX; n];
            let mut queue = VecDeque::from([start]);
            let mut closing = None;
            'bfs: while let Some(u) = queue.pop_front() {
                for w in self.host.out_neighbors(u) {
                    if !self.crossing(u, w) {
                        continue;
                    }
                    if w == start {
                        closing = Some(u);
                        break 'bfs;
                    }
                    if prev[w] == usize::MAX && w != start {
                        prev[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if let Some(mut u) = closing {
                let mut cycle = vec![u];
                while u != start {
                    u = prev[u];
                    cycle.push(u);
                }
                cycle.reverse();
                if !best.as_ref().is_some_and(|b| b.len() <= cycle.len()) {
                    best = Some(cycle);
                }
                if best.as_ref().is_some_and(|b| b.len() == 2) {
                    break;
                }
            }
        }
        best.map(|c| {
            let add: Vec<Arc> = (0..c.len())
                .map(|i| Arc::new(c[i], c[(i + 1) % c.len()]))
                .collect();
            let rule = if c.len() == 2 {
                MergeRule::TwoCycle
            } else {
                MergeRule::CrossCycle
            };
            Substitution::new(rule, vec![], add)
        })
    }

    fn path_insertions(&mut self) -> Option<Substitution> {
        let factor: Vec<Arc> = self.arcs.iter().copied().collect();
        for uv in factor {
            for x in 0..self.host.n() {
                if self.crossing(uv.tail, x) && self.crossing(x, uv.head) {
                    let s = path_insertion(uv, x);
                    if self.try_apply(&s) {
                        return Some(s);
                    }
                }
            }
        }
        None
    }

    fn cross_swaps(&mut self) -> Option<Substitution> {
        let factor: Vec<Arc> = self.arcs.iter().copied().collect();
        for &uv in &factor {
            for &xy in &factor {
                if self.comp[uv.tail] == self.comp[xy.tail] {
                    continue;
                }
                if self.host.has_arc(uv.tail, xy.head) && self.host.has_arc(xy.tail, uv.head) {
                    let s = Substitution::new(
                        MergeRule::CrossSwap,
                        vec![uv, xy],
                        vec![Arc::new(uv.tail, xy.head), Arc::new(xy.tail, uv.head)],
                    );
                    if self.try_apply(&s) {
                        return Some(s);
                    }
                }
            }
        }
        None
    }

    /// Ways to leave `from` towards component `target`: the arc `from → t`, or
    /// `p → t` replacing a factor arc `p → from`.
    fn hops(&self, from: Vertex, target: usize) -> Vec<(Vec<Arc>, Arc)> {
        let mut out = Vec::new();
        for t in self.members(target) {
            if self.host.has_arc(from, t) {
                out.push((vec![], Arc::new(from, t)));
            }
        }
        for p in self.preds(from) {
            for t in self.members(target) {
                if self.host.has_arc(p, t) {
                    out.push((vec![Arc::new(p, from)], Arc::new(p, t)));
                }
            }
        }
        out
    }

    /// Joins components `i, j, k` forming a 3-cycle `i → j → k → i` of the
    /// contraction with no arc from `j` to `i` or from `i` to `k`, starting from a
    /// vertex of `k` dominated by all but at most one vertex of `j`.
    fn three_cycle(&mut self) -> Option<Substitution> {
        let p = self.count;
        let mut t = vec![vec![false; p]; p];
        for a in self.host.arcs() {
            let (ci, cj) = (self.comp[a.tail], self.comp[a.head]);
            if ci != cj {
                t[ci][cj] = true;
            }
        }
        let mut budget = ALTERNATING_BUDGET;
        for i in 0..p {
            for j in 0..p {
                for k in 0..p {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    if !(t[i][j] && t[j][k] && t[k][i]) || t[j][i] || t[i][k] {
                        continue;
                    }
                    let hj = self.members(j);
                    for u in self.members(k) {
                        let misses = hj.iter().filter(|&&w| !self.host.has_arc(w, u)).count();
                        if misses > 1 {
                            continue;
                        }
                        if let Some(s) = self.three_cycle_from(u, i, j, &mut budget) {
                            return Some(s);
                        }
                        if budget == 0 {
                            return None;
                        }
                    }
                }
            }
        }
        None
    }

    fn three_cycle_from(
        &mut self,
        u: Vertex,
        i: usize,
        j: usize,
        budget: &mut usize,
    ) -> Option<Substitution> {
        let first = self.hops(u, i);
        for (r1, a1) in &first {
            for (r2, a2) in self.hops(a1.head, j) {
                for (r3, a3) in self.hops(a2.head, self.comp[u]) {
                    if a3.head != u {
                        continue;
                    }
                    if *budget == 0 {
                        return None;
                    }
                    *budget -= 1;
                    let remove: Vec<Arc> = r1.iter().chain(&r2).chain(&r3).copied().collect();
                    let s = Substitution::new(MergeRule::ThreeCycle, remove, vec![*a1, a2, a3]);
                    if self.try_apply(&s) {
                        return Some(s);
                    }
                }
            }
        }
        None
    }

    /// Simple cycles in the residual digraph (crossing host arcs forwards,
    /// factor arcs backwards) through at least one crossing arc, up to
    /// `max_len` arcs; the first one that merges components is applied.
    fn alternating(&mut self, max_len: usize) -> Option<Substitution> {
        let n = self.host.n();
        let mut residual: Vec<Vec<(Vertex, bool)>> = vec![Vec::new(); n];
        for a in self.host.arcs() {
            if !self.arcs.contains(&a) {
                residual[a.tail].push((a.head, true));
            }
        }
        for a in &self.arcs {
            residual[a.head].push((a.tail, false));
        }
        let mut budget = ALTERNATING_BUDGET;
        let starts: Vec<Arc> = self
            .host
            .arcs()
            .filter(|a| self.crossing(a.tail, a.head))
            .collect();
        for start in starts {
            let mut path = vec![(start.tail, true), (start.head, true)];
            let mut on_path = vec![false; n];
            on_path[start.tail] = true;
            on_path[start.head] = true;
            if let Some(s) = self.extend(&residual, &mut path, &mut on_path, max_len, &mut budget) {
                return Some(s);
            }
            if budget == 0 {
                return None;
            }
        }
        None
    }

    fn extend(
        &mut self,
        residual: &[Vec<(Vertex, bool)>],
        path: &mut Vec<(Vertex, bool)>,
        on_path: &mut [bool],
        max_len: usize,
        budget: &mut usize,
    ) -> Option<Substitution> {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let origin = path[0].0;
        let last = path.last().unwrap().0;
        for &(w, forward) in &residual[last] {
            if w == origin && path.len() >= 2 {
                let mut cycle = path.clone();
                cycle.push((w, forward));
                let mut remove = Vec::new();
                let mut add = Vec::new();
                for pair in cycle.windows(2) {
                    let (a, b) = (pair[0].0, pair[1].0);
                    if pair[1].1 {
                        add.push(Arc::new(a, b));
                    } else {
                        remove.push(Arc::new(b, a));
                    }
                }
                let s = Substitution::new(MergeRule::Alternating, remove, add);
                if self.try_apply(&s) {
                    return Some(s);
                }
                continue;
            }
            if on_path[w] || path.len() >= max_len {
                continue;
            }
            on_path[w] = true;
            path.push((w, forward));
            let found = self.extend(residual, path, on_path, max_len, budget);
            path.pop();
            on_path[w] = false;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Longest alternating cycle tried by [`merge_all`].
pub const ALTERNATING_MAX_LEN: usize = 6;

/// Repeatedly merges components of `factor` inside `d` minus `avoid`, trying
/// in order: crossing cycles (2-cycles included), path insertions, cross swaps,
/// 3-cycles of the contraction and short alternating cycles. Every step yields
/// a factor of the host with strictly fewer components; avoided arcs are never
/// added.
pub fn merge_all(d: &Digraph, factor: &EulerianFactor, avoid: &[Arc]) -> Result<MergeOutcome> {
    let host = d.without_arcs(avoid);
    if !factor.validate(&host) {
        return Err(Error::Precondition(
            "factor is not an eulerian factor of the digraph minus the avoided arcs".into(),
        ));
    }
    let mut state = State::new(&host, &factor.arcs);
    let mut steps = Vec::new();
    while state.count > 1 {
        let applied = match state.cross_cycle() {
            Some(s) if state.try_apply(&s) => Some(s),
            _ => None,
        }
        .or_else(|| state.path_insertions())
        .or_else(|| state.cross_swaps())
        .or_else(|| state.three_cycle())
        .or_else(|| state.alternating(ALTERNATING_MAX_LEN));
        match applied {
            Some(substitution) => steps.push(MergeStep {
                substitution,
                components_after: state.count,
            }),
            None => break,
        }
    }
    let arcs: Vec<Arc> = state.arcs.into_iter().collect();
    Ok(MergeOutcome {
        factor: EulerianFactor::from_arcs(host.n(), arcs),
        steps,
    })
}

/// How two unmergeable components sit against each other when the deleted
/// arcs form a star-set: a closed tour `w_1 … w_l` of one of them whose `w_1`
/// has no neighbour in the other, split after `w_k` into `R1 = {w_2..w_k}` and
/// `R2 = {w_{k+1}..w_l}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StalledPair {
    /// Index (0 or 1) of the component carrying the tour.
    pub side: usize,
    pub tour: Vec<Vertex>,
    pub r1: Vec<Vertex>,
    pub r2: Vec<Vertex>,
}

/// Looks for the stalled-pair structure between components `h1`, `h2` of a
/// factor of `host`: `w_1` non-adjacent to the other component, `w_k w_{k+1}`
/// the only arc from `R1` to `R2`, no arc from `R1` to `w_1` or from `w_1` to
/// `R2`, the other component dominating `R1` and dominated by `R2`.
pub fn stalled_pair_structure(host: &Digraph, h1: &[Arc], h2: &[Arc]) -> Option<StalledPair> {
    let n = host.n();
    for (side, (hi, hj)) in [(h1, h2), (h2, h1)].into_iter().enumerate() {
        let other: Vec<Vertex> = vertex_set(hj).into_iter().collect();
        for w1 in vertex_set(hi) {
            if other.iter().any(|&x| host.adjacent(w1, x)) {
                continue;
            }
            let Some(closed) = euler_tour(n, hi, w1) else {
                continue;
            };
            let tour = &closed[..closed.len() - 1];
            if tour.iter().skip(1).any(|&v| v == w1) {
                continue;
            }
            for k in 1..tour.len() - 1 {
                let r1: Vec<Vertex> = tour[1..=k].to_vec();
                let r2: Vec<Vertex> = tour[k + 1..].to_vec();
                if r1.iter().any(|v| r2.contains(v)) {
                    continue;
                }
                let r1_to_r2: Vec<Arc> = host
                    .arcs()
                    .filter(|a| r1.contains(&a.tail) && r2.contains(&a.head))
                    .collect();
                let only_link = r1_to_r2 == [Arc::new(tour[k], tour[k + 1])];
                let cut_from_w1 = r1.iter().all(|&v| !host.has_arc(v, w1))
                    && r2.iter().all(|&v| !host.has_arc(w1, v));
                let dominance = other.iter().all(|&x| {
                    r1.iter()
                        .all(|&v| host.has_arc(x, v) && !host.has_arc(v, x))
                        && r2
                            .iter()
                            .all(|&v| host.has_arc(v, x) && !host.has_arc(x, v))
                });
                if only_link && cut_from_w1 && dominance {
                    return Some(StalledPair {
                        side,
                        tour: tour.to_vec(),
                        r1,
                        r2,
                    });
                }
            }
        }
    }
    None
}
