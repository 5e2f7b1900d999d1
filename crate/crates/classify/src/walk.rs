//! Direct witness for a good forward arc: one closed walk
//! `u v ~> s_1 t_1 ~> s_2 t_2 ~> ... ~> s_r t_r ~> u`
//! whose connectors are arc-disjoint forward paths, preferring to visit every
//! set between their ends, with each touched set completed by a hamiltonian
//! cycle or a spanning trail.

use std::collections::{BTreeSet, HashMap};

use eulertrail_core::{Arc, Digraph, Vertex};
use eulertrail_decomposition::Decomposition;
use eulertrail_hamilton::{cycle_arcs, cycle_covering_complement, hamiltonian_cycle};
use eulertrail_trails::spanning_trail;

use crate::containment::{path_inside, Layout};

/// Passage of one connector through a set: enters at `entry`, leaves at `exit`.
#[derive(Clone, Copy)]
struct Visit {
    set: usize,
    entry: Vertex,
    exit: Vertex,
}

struct Planner<'a> {
    d: &'a Digraph,
    dec: &'a Decomposition,
    /// Arcs between distinct sets already used by some connector.
    used: BTreeSet<Arc>,
    /// Sets whose internal arcs carry a spanning trail between the two vertices.
    internal: Vec<Option<(Vertex, Vertex)>>,
    /// Remaining search steps; routing gives up when it runs out.
    budget: usize,
    /// Memoised feasibility of internal spanning trails.
    trail_ok: HashMap<(Vertex, Vertex), bool>,
}

const ROUTING_BUDGET: usize = 200_000;

impl Planner<'_> {
    /// Visits for a forward connector from `a` to `b`, preferring to cross each
    /// set at a single vertex. Returns `None` when no arc-disjoint choice exists.
    fn connect(&mut self, a: Vertex, b: Vertex) -> Option<Vec<Visit>> {
        let (i1, i2) = (self.dec.ind(a), self.dec.ind(b));
        let mut visits = Vec::new();
        if self.extend(a, b, i1, i2, &mut visits) {
            Some(visits)
        } else {
            None
        }
    }

    /// Whether the set can still host a spanning trail from `entry` to `exit`.
    fn internal_free(&mut self, set: usize, entry: Vertex, exit: Vertex) -> bool {
        if entry == exit {
            return true;
        }
        if self.internal[set].is_some() {
            return false;
        }
        let (d, dec) = (self.d, self.dec);
        *self
            .trail_ok
            .entry((entry, exit))
            .or_insert_with(|| set_trail(d, dec.set(set), entry, exit).is_some())
    }

    fn extend(
        &mut self,
        entry: Vertex,
        b: Vertex,
        i: usize,
        i2: usize,
        visits: &mut Vec<Visit>,
    ) -> bool {
        if self.budget == 0 {
            return false;
        }
        self.budget -= 1;
        let exits: Vec<Vertex> = if i == i2 {
            vec![b]
        } else {
            let mut xs = vec![entry];
            xs.extend(self.dec.set(i).iter().copied().filter(|&x| x != entry));
            xs
        };
        for exit in exits {
            if !self.internal_free(i, entry, exit) {
                continue;
            }
            if entry != exit {
                self.internal[i] = Some((entry, exit));
            }
            visits.push(Visit {
                set: i,
                entry,
                exit,
            });
            if i == i2 {
                return true;
            }
            // Visiting the next set is preferred; skipping ahead keeps arcs free for
            // other connectors.
            for k in i + 1..=i2 {
                let mut nexts: Vec<Vertex> = self.dec.set(k).to_vec();
                if k == i2 {
                    nexts.sort_by_key(|&x| x != b);
                }
                for next in nexts {
                    let step = Arc::new(exit, next);
                    if !self.d.contains(step) || self.used.contains(&step) {
                        continue;
                    }
                    self.used.insert(step);
                    if self.extend(next, b, k, i2, visits) {
                        return true;
                    }
                    self.used.remove(&step);
                }
            }
            visits.pop();
            if entry != exit {
                self.internal[i] = None;
            }
        }
        false
    }
}

/// Closed walk through `a`, every backward arc and every set, or `None` when
/// a connector cannot be routed.
pub(crate) fn closed_walk(d: &Digraph, layout: &Layout, a: Arc) -> Option<Vec<Arc>> {
    let (dec, ord) = (&layout.dec, &layout.ord);
    let r = ord.r();
    if r == 0 || dec.ind(a.tail) >= dec.ind(a.head) {
        return None;
    }
    let mut connectors = vec![(a.head, ord.s(1)), (ord.t(r), a.tail)];
    connectors.extend((1..r).map(|j| (ord.t(j), ord.s(j + 1))));
    if connectors.iter().any(|&(x, y)| dec.ind(x) > dec.ind(y)) {
        return None;
    }
    // Connectors inside one set claim that set's internal arcs first.
    connectors.sort_by_key(|&(x, y)| dec.ind(x) != dec.ind(y));

    let mut planner = Planner {
        d,
        dec,
        used: BTreeSet::from([a]),
        internal: vec![None; dec.p() + 1],
        budget: ROUTING_BUDGET,
        trail_ok: HashMap::new(),
    };
    let mut touched = vec![false; dec.p() + 1];
    let mut arcs = vec![a];
    arcs.extend(ord.arcs.iter().copied());
    for &(x, y) in &connectors {
        let visits = planner.connect(x, y)?;
        for v in &visits {
            touched[v.set] = true;
        }
        arcs.extend(visits.windows(2).map(|w| Arc::new(w[0].exit, w[1].entry)));
    }
    for b in &arcs {
        touched[dec.ind(b.tail)] = true;
        touched[dec.ind(b.head)] = true;
    }
    for i in 1..=dec.p() {
        if !touched[i] {
            return None;
        }
        let set = dec.set(i);
        match planner.internal[i] {
            Some((x, y)) => arcs.extend(set_trail(d, set, x, y)?),
            None if set.len() > 1 => {
                let cycle = hamiltonian_cycle(&d.induced(set)).ok()?;
                arcs.extend(cycle_arcs(&cycle).map(|b| Arc::new(set[b.tail], set[b.head])));
            }
            None => {}
        }
    }
    Some(arcs)
}

/// Trail from `x` to `y` through every vertex of `D⟨set⟩`: a spanning trail
/// when two arc-disjoint paths exist, otherwise a shortest path plus a cycle
/// through the vertices it misses.
pub(crate) fn set_trail(d: &Digraph, set: &[Vertex], x: Vertex, y: Vertex) -> Option<Vec<Arc>> {
    let sub = d.induced(set);
    let local = |v: Vertex| set.iter().position(|&w| w == v).expect("vertex of the set");
    let lift = |b: Arc| Arc::new(set[b.tail], set[b.head]);
    if let Ok(trail) = spanning_trail(&sub, local(x), local(y)) {
        return Some(trail.arcs().into_iter().map(lift).collect());
    }
    let path: Vec<Vertex> = path_inside(d, set, x, y)?.into_iter().map(local).collect();
    let path_arcs: Vec<Arc> = path.windows(2).map(|w| Arc::new(w[0], w[1])).collect();
    let mut arcs: Vec<Arc> = path_arcs.iter().copied().map(lift).collect();
    if path.len() < set.len() {
        match cycle_covering_complement(&sub, &path, &path_arcs, path[0]) {
            Ok(cycle) => arcs.extend(cycle_arcs(&cycle).map(lift)),
            Err(_) => {
                let path = hamiltonian_path_search(&sub, local(x), local(y))?;
                return Some(
                    path.windows(2)
                        .map(|w| lift(Arc::new(w[0], w[1])))
                        .collect(),
                );
            }
        }
    }
    Some(arcs)
}

const PATH_BUDGET: usize = 100_000;

/// Hamiltonian path from `x` to `y` by bounded depth-first search.
fn hamiltonian_path_search(d: &Digraph, x: Vertex, y: Vertex) -> Option<Vec<Vertex>> {
    fn go(
        d: &Digraph,
        y: Vertex,
        path: &mut Vec<Vertex>,
        seen: &mut [bool],
        budget: &mut usize,
    ) -> bool {
        let last = *path.last().expect("path starts at x");
        if path.len() == d.n() {
            return last == y;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let nexts: Vec<Vertex> = d.out_neighbors(last).filter(|&w| !seen[w]).collect();
        for w in nexts {
            // `y` may only close the path.
            if w == y && path.len() + 1 < d.n() {
                continue;
            }
            seen[w] = true;
            path.push(w);
            if go(d, y, path, seen, budget) {
                return true;
            }
            path.pop();
            seen[w] = false;
        }
        false
    }
    let mut seen = vec![false; d.n()];
    seen[x] = true;
    let mut path = vec![x];
    let mut budget = PATH_BUDGET;
    (x != y && go(d, y, &mut path, &mut seen, &mut budget)).then_some(path)
}
