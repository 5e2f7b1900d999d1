//! Arc-set predicates shared by every certificate type.

use serde::{Deserialize, Serialize};

use crate::digraph::{Arc, Digraph, Vertex};

/// A spanning eulerian subdigraph certificate: a connected, balanced arc set
/// touching every vertex of its host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerianSubdigraph {
    pub arcs: Vec<Arc>,
}

impl EulerianSubdigraph {
    /// Sorts the arcs so that equal subdigraphs compare equal.
    pub fn new(mut arcs: Vec<Arc>) -> Self {
        arcs.sort_unstable();
        EulerianSubdigraph { arcs }
    }

    pub fn contains(&self, a: Arc) -> bool {
        self.arcs.binary_search(&a).is_ok()
    }

    /// True when this is a spanning eulerian subdigraph of `d`.
    pub fn validate(&self, d: &Digraph) -> bool {
        is_spanning_eulerian(d, &self.arcs)
    }
}

/// Out- and in-degree of every vertex within `arcs`.
pub fn degrees(n: usize, arcs: &[Arc]) -> (Vec<usize>, Vec<usize>) {
    let mut out = vec![0; n];
    let mut inn = vec![0; n];
    for a in arcs {
        out[a.tail] += 1;
        inn[a.head] += 1;
    }
    (out, inn)
}

/// Connected components of the underlying graph of `(0..n, arcs)`, each sorted,
/// listed by smallest member. Isolated vertices form singleton components.
pub fn weak_components(n: usize, arcs: &[Arc]) -> Vec<Vec<Vertex>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in arcs {
        let (ra, rb) = (find(&mut parent, a.tail), find(&mut parent, a.head));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut slot = vec![usize::MAX; n];
    let mut comps: Vec<Vec<Vertex>> = Vec::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = comps.len();
            comps.push(Vec::new());
        }
        comps[slot[r]].push(v);
    }
    comps
}

fn distinct_arcs_of(d: &Digraph, arcs: &[Arc]) -> bool {
    let mut sorted = arcs.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1]) && arcs.iter().all(|&a| d.contains(a))
}

/// Spanning, balanced and connected. A single vertex with no arcs qualifies.
pub fn is_spanning_eulerian(d: &Digraph, arcs: &[Arc]) -> bool {
    let n = d.n();
    if !distinct_arcs_of(d, arcs) {
        return false;
    }
    if n <= 1 {
        return arcs.is_empty();
    }
    let (out, inn) = degrees(n, arcs);
    if (0..n).any(|v| out[v] != inn[v] || out[v] == 0) {
        return false;
    }
    weak_components(n, arcs).len() == 1
}

/// Every vertex has equal positive in- and out-degree within `arcs`.
pub fn is_eulerian_factor(d: &Digraph, arcs: &[Arc]) -> bool {
    if !distinct_arcs_of(d, arcs) {
        return false;
    }
    let (out, inn) = degrees(d.n(), arcs);
    (0..d.n()).all(|v| out[v] == inn[v] && out[v] > 0)
}

/// Closed eulerian tour through all of `arcs` starting at `start`, as a vertex
/// sequence whose first and last entries are `start`. Requires a balanced,
/// connected arc set containing `start`; returns `None` otherwise.
pub fn euler_tour(n: usize, arcs: &[Arc], start: Vertex) -> Option<Vec<Vertex>> {
    if arcs.is_empty() {
        return Some(vec![start]);
    }
    let (out, inn) = degrees(n, arcs);
    if out != inn {
        return None;
    }
    let mut succ: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for a in arcs {
        succ[a.tail].push(a.head);
    }
    // Reverse so that popping yields the smallest head first.
    for s in &mut succ {
        s.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut stack = vec![start];
    let mut tour = Vec::with_capacity(arcs.len() + 1);
    while let Some(&v) = stack.last() {
        if let Some(w) = succ[v].pop() {
            stack.push(w);
        } else {
            tour.push(v);
            stack.pop();
        }
    }
    tour.reverse();
    if tour.len() != arcs.len() + 1 || tour.last() != Some(&start) {
        return None;
    }
    Some(tour)
}

/// Arcs traversed by a vertex sequence.
pub fn walk_arcs(walk: &[Vertex]) -> Vec<Arc> {
    walk.windows(2).map(|w| Arc::new(w[0], w[1])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spanning_eulerian_checks() {
        let d = Digraph::complete(3);
        let cyc = walk_arcs(&[0, 1, 2, 0]);
        assert!(is_spanning_eulerian(&d, &cyc));
        assert!(!is_spanning_eulerian(&d, &walk_arcs(&[0, 1, 0])));
        assert!(is_spanning_eulerian(&Digraph::new(1), &[]));
        assert!(!is_spanning_eulerian(&Digraph::new(2), &[]));
    }

    #[test]
    fn factor_may_be_disconnected() {
        let d = Digraph::complete(4);
        let arcs = walk_arcs(&[0, 1, 0])
            .into_iter()
            .chain(walk_arcs(&[2, 3, 2]))
            .collect::<Vec<_>>();
        assert!(is_eulerian_factor(&d, &arcs));
        assert!(!is_spanning_eulerian(&d, &arcs));
        assert_eq!(weak_components(4, &arcs), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn euler_tour_covers_every_arc() {
        let arcs = walk_arcs(&[0, 1, 2, 0, 3, 2, 1, 0]);
        let tour = euler_tour(4, &arcs, 0).unwrap();
        assert_eq!(tour.len(), arcs.len() + 1);
        let mut used = walk_arcs(&tour);
        used.sort();
        let mut expected = arcs.clone();
        expected.sort();
        assert_eq!(used, expected);
    }
}
