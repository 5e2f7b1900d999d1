//! Hamiltonian paths and cycles in semicomplete digraphs.
//!
//! Paths are vertex sequences. Cycles are vertex sequences without the repeated
//! first vertex: `[c_0, ..., c_{k-1}]` stands for `c_0 -> ... -> c_{k-1} -> c_0`.

use std::collections::VecDeque;

use eulertrail_connectivity::{is_strong, reachable, strong_components};
use eulertrail_core::{Arc, Digraph, Error, Result, Vertex};

fn require_semicomplete(d: &Digraph) -> Result<()> {
    if d.is_semicomplete() {
        Ok(())
    } else {
        Err(Error::Precondition("digraph is not semicomplete".into()))
    }
}

/// Vertices that reach every other vertex.
pub fn out_generators(d: &Digraph) -> Vec<Vertex> {
    (0..d.n())
        .filter(|&v| reachable(d, v, false).into_iter().all(|b| b))
        .collect()
}

/// Vertices reached by every other vertex.
pub fn in_generators(d: &Digraph) -> Vec<Vertex> {
    (0..d.n())
        .filter(|&v| reachable(d, v, true).into_iter().all(|b| b))
        .collect()
}

/// True when `path` visits every vertex of `d` once along arcs of `d`.
pub fn is_hamiltonian_path(d: &Digraph, path: &[Vertex]) -> bool {
    let mut seen = vec![false; d.n()];
    path.len() == d.n()
        && path
            .iter()
            .all(|&v| v < d.n() && !std::mem::replace(&mut seen[v], true))
        && path.windows(2).all(|w| d.has_arc(w[0], w[1]))
}

/// True when `cycle` is a cycle of `d` on distinct vertices (length at least 2).
pub fn is_cycle(d: &Digraph, cycle: &[Vertex]) -> bool {
    let mut seen = vec![false; d.n()];
    cycle.len() >= 2
        && cycle
            .iter()
            .all(|&v| v < d.n() && !std::mem::replace(&mut seen[v], true))
        && cycle_arcs(cycle).all(|a| d.contains(a))
}

/// Arcs of a cycle given as a vertex sequence.
pub fn cycle_arcs(cycle: &[Vertex]) -> impl Iterator<Item = Arc> + '_ {
    let k = cycle.len();
    (0..k).map(move |i| Arc::new(cycle[i], cycle[(i + 1) % k]))
}

/// Rotates `cycle` so that it starts at `x`. Panics if `x` is not on the cycle.
pub fn rotate_to(cycle: &[Vertex], x: Vertex) -> Vec<Vertex> {
    let i = cycle.iter().position(|&v| v == x).expect("vertex on cycle");
    cycle[i..].iter().chain(&cycle[..i]).copied().collect()
}

/// Hamiltonian path by vertex insertion in order `0..n`.
pub fn hamiltonian_path(d: &Digraph) -> Result<Vec<Vertex>> {
    require_semicomplete(d)?;
    let mut path: Vec<Vertex> = Vec::with_capacity(d.n());
    for v in 0..d.n() {
        let Some(&last) = path.last() else {
            path.push(v);
            continue;
        };
        if d.has_arc(v, path[0]) {
            path.insert(0, v);
        } else if d.has_arc(last, v) {
            path.push(v);
        } else {
            // path[0] -> v and v -> last, so the dominance switches somewhere.
            let i = (0..path.len() - 1)
                .find(|&i| d.has_arc(path[i], v) && d.has_arc(v, path[i + 1]))
                .expect("semicomplete insertion point");
            path.insert(i + 1, v);
        }
    }
    Ok(path)
}

/// Shortest cycle through `v` using arcs of `d`, or `None` when `v` lies on no cycle.
pub fn shortest_cycle_through(d: &Digraph, v: Vertex) -> Option<Vec<Vertex>> {
    let n = d.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        if u != v && d.has_arc(u, v) {
            let mut cycle = vec![u];
            while *cycle.last().unwrap() != v {
                cycle.push(prev[*cycle.last().unwrap()]);
            }
            cycle.reverse();
            return Some(cycle);
        }
        for w in d.out_neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Hamiltonian cycle of a strong semicomplete digraph on at least two vertices,
/// starting at vertex 0.
pub fn hamiltonian_cycle(d: &Digraph) -> Result<Vec<Vertex>> {
    require_semicomplete(d)?;
    if d.n() < 2 || !is_strong(d) {
        return Err(Error::Precondition(
            "hamiltonian cycles need a strong digraph on at least 2 vertices".into(),
        ));
    }
    let n = d.n();
    let mut cycle = shortest_cycle_through(d, 0).expect("strong digraph");
    let mut on = vec![false; n];
    for &c in &cycle {
        on[c] = true;
    }
    while cycle.len() < n {
        let k = cycle.len();
        // A vertex with neighbours both ways on the cycle slots between c_i -> v -> c_{i+1}.
        let mixed = (0..n).filter(|&v| !on[v]).find_map(|v| {
            (0..k)
                .find(|&i| d.has_arc(cycle[i], v) && d.has_arc(v, cycle[(i + 1) % k]))
                .map(|i| (v, i))
        });
        if let Some((v, i)) = mixed {
            cycle.insert(i + 1, v);
            on[v] = true;
            continue;
        }
        // Otherwise every outside vertex is dominated by the cycle or dominates it, and
        // strongness yields an arc u -> w from the first kind to the second.
        let dominated = |v: Vertex| !on[v] && cycle.iter().all(|&c| d.has_arc(c, v));
        let dominating = |v: Vertex| !on[v] && cycle.iter().all(|&c| d.has_arc(v, c));
        let (u, w) = (0..n)
            .filter(|&u| dominated(u))
            .find_map(|u| d.out_neighbors(u).find(|&w| dominating(w)).map(|w| (u, w)))
            .expect("strong semicomplete digraph");
        cycle.splice(1..1, [u, w]);
        on[u] = true;
        on[w] = true;
    }
    Ok(rotate_to(&cycle, 0))
}

fn lift(vs: &[Vertex], local: Vec<Vertex>) -> Vec<Vertex> {
    local.into_iter().map(|i| vs[i]).collect()
}

fn local_index(vs: &[Vertex], v: Vertex) -> usize {
    vs.iter()
        .position(|&w| w == v)
        .expect("vertex in component")
}

/// Hamiltonian path starting at the out-generator `x`, ending at `y` when given.
/// A prescribed end requires `d` non-strong and `y` an in-generator.
pub fn hamiltonian_path_between(d: &Digraph, x: Vertex, y: Option<Vertex>) -> Result<Vec<Vertex>> {
    require_semicomplete(d)?;
    if x >= d.n() || y.is_some_and(|y| y >= d.n()) {
        return Err(Error::InvalidParameter("vertex out of range".into()));
    }
    if !reachable(d, x, false).into_iter().all(|b| b) {
        return Err(Error::Precondition(format!("{x} is not an out-generator")));
    }
    if let Some(y) = y {
        if !reachable(d, y, true).into_iter().all(|b| b) {
            return Err(Error::Precondition(format!("{y} is not an in-generator")));
        }
        if is_strong(d) && d.n() > 1 {
            return Err(Error::Precondition(
                "a prescribed end vertex requires a non-strong digraph".into(),
            ));
        }
    }
    let comps = strong_components(d);
    let k = comps.len();
    let mut path = Vec::with_capacity(d.n());
    for (i, comp) in comps.iter().enumerate() {
        let sub = d.induced(comp);
        let piece = if comp.len() == 1 {
            comp.clone()
        } else if i == 0 {
            rotate_to(&lift(comp, hamiltonian_cycle(&sub)?), x)
        } else if let Some(y) = y.filter(|_| i == k - 1) {
            // Rotate so that y is last.
            let cycle = lift(comp, hamiltonian_cycle(&sub)?);
            let mut r = rotate_to(&cycle, y);
            r.rotate_left(1);
            r
        } else {
            lift(comp, hamiltonian_path(&sub)?)
        };
        path.extend(piece);
    }
    Ok(path)
}

/// Hamiltonian path starting at the out-generator `x`.
pub fn hamiltonian_path_from(d: &Digraph, x: Vertex) -> Result<Vec<Vertex>> {
    hamiltonian_path_between(d, x, None)
}

/// Hamiltonian path ending at the in-generator `y`.
pub fn hamiltonian_path_to(d: &Digraph, y: Vertex) -> Result<Vec<Vertex>> {
    let mut path = hamiltonian_path_from(&d.reversed(), y)?;
    path.reverse();
    Ok(path)
}

/// Cycle in `d` minus the arcs `f_arcs` that passes through `z` and through every
/// vertex outside `f_vertices`. Requires `z` in `f_vertices` and `d` minus `f_arcs`
/// strong.
pub fn cycle_covering_complement(
    d: &Digraph,
    f_vertices: &[Vertex],
    f_arcs: &[Arc],
    z: Vertex,
) -> Result<Vec<Vertex>> {
    require_semicomplete(d)?;
    if !f_vertices.contains(&z) {
        return Err(Error::Precondition(format!(
            "{z} is not a vertex of the subdigraph"
        )));
    }
    let host = d.without_arcs(f_arcs);
    if !is_strong(&host) {
        return Err(Error::Precondition(
            "digraph minus the subdigraph arcs is not strong".into(),
        ));
    }
    let mut in_f = vec![false; d.n()];
    for &v in f_vertices {
        in_f[v] = true;
    }
    let w: Vec<Vertex> = (0..d.n()).filter(|&v| !in_f[v] || v == z).collect();
    if w.len() == 1 {
        return shortest_cycle_through(&host, z)
            .ok_or_else(|| Error::Precondition(format!("{z} lies on no cycle")));
    }
    // Arcs of F never join two vertices of W, so D⟨W⟩ already avoids them.
    let dw = d.induced(&w);
    if is_strong(&dw) {
        return Ok(lift(&w, hamiltonian_cycle(&dw)?));
    }
    let out_gen: Vec<bool> = {
        let mut flags = vec![false; d.n()];
        for v in out_generators(&dw) {
            flags[w[v]] = true;
        }
        flags
    };
    let ins: Vec<Vertex> = in_generators(&dw).into_iter().map(|v| w[v]).collect();
    // Shortest path in the host from the in-generators to the out-generators of D⟨W⟩.
    let n = d.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in &ins {
        seen[s] = true;
        queue.push_back(s);
    }
    let mut end = None;
    while let Some(u) = queue.pop_front() {
        if out_gen[u] {
            end = Some(u);
            break;
        }
        for v in host.out_neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    let end = end.expect("host is strong");
    let mut p = vec![end];
    while prev[*p.last().unwrap()] != usize::MAX {
        p.push(prev[*p.last().unwrap()]);
    }
    p.reverse();
    let (s, t) = (p[0], *p.last().unwrap());
    let interior = &p[1..p.len() - 1];
    let rest: Vec<Vertex> = w
        .iter()
        .copied()
        .filter(|v| !interior.contains(v))
        .collect();
    let q = lift(
        &rest,
        hamiltonian_path_between(
            &d.induced(&rest),
            local_index(&rest, t),
            Some(local_index(&rest, s)),
        )?,
    );
    let mut cycle = q;
    cycle.extend_from_slice(interior);
    Ok(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use eulertrail_core::gen_d3;

    #[test]
    fn path_examples() {
        assert_eq!(
            hamiltonian_path(&Digraph::transitive_tournament(3)).unwrap(),
            vec![0, 1, 2]
        );
        assert!(is_hamiltonian_path(
            &Digraph::cycle(3),
            &hamiltonian_path(&Digraph::cycle(3)).unwrap()
        ));
        assert_eq!(hamiltonian_path(&Digraph::new(1)).unwrap(), vec![0]);
        assert!(hamiltonian_path(&Digraph::new(2)).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(
            hamiltonian_cycle(&Digraph::cycle(3)).unwrap(),
            vec![0, 1, 2]
        );
        assert_eq!(hamiltonian_cycle(&gen_d3()).unwrap(), vec![0, 1, 2]);
        let t4 = Digraph::from_arcs(4, [(0, 1), (0, 2), (1, 2), (2, 3), (1, 3), (3, 0)]).unwrap();
        assert_eq!(hamiltonian_cycle(&t4).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(
            hamiltonian_cycle(&Digraph::complete(2)).unwrap(),
            vec![0, 1]
        );
        assert!(hamiltonian_cycle(&Digraph::transitive_tournament(3)).is_err());
    }

    #[test]
    fn generator_paths() {
        let tt = Digraph::transitive_tournament(3);
        assert_eq!(
            hamiltonian_path_between(&tt, 0, Some(2)).unwrap(),
            vec![0, 1, 2]
        );
        assert!(hamiltonian_path_between(&tt, 1, None).is_err());
        assert!(hamiltonian_path_between(&Digraph::cycle(3), 0, Some(2)).is_err());
        assert_eq!(
            hamiltonian_path_from(&Digraph::cycle(3), 1).unwrap(),
            vec![1, 2, 0]
        );
        assert_eq!(
            hamiltonian_path_to(&Digraph::cycle(3), 1).unwrap(),
            vec![2, 0, 1]
        );
    }

    #[test]
    fn complement_cycle_single_arc() {
        let k4 = Digraph::complete(4);
        let c = cycle_covering_complement(&k4, &[0, 1], &[Arc::new(0, 1)], 0).unwrap();
        assert!(is_cycle(&k4, &c));
        assert!(c.contains(&0) && c.contains(&2) && c.contains(&3));
        assert!(cycle_arcs(&c).all(|a| a != Arc::new(0, 1)));
    }
}
