use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex identifier; a digraph on `n` vertices uses exactly `0..n`.
pub type Vertex = usize;

/// A directed arc `tail -> head`. Ordering is lexicographic on `(tail, head)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arc {
    pub const fn new(tail: Vertex, head: Vertex) -> Self {
        Arc { tail, head }
    }

    pub const fn reversed(self) -> Self {
        Arc {
            tail: self.head,
            head: self.tail,
        }
    }
}

impl From<(Vertex, Vertex)> for Arc {
    fn from((tail, head): (Vertex, Vertex)) -> Self {
        Arc { tail, head }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

/// Ordered set of arcs; iteration is lexicographic.
pub type ArcSet = BTreeSet<Arc>;

/// Loop-free simple digraph stored as a dense adjacency matrix.
///
/// Invariants: no loops, at most one arc per ordered pair, vertices are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<(usize, usize)> = self.arcs().map(|a| (a.tail, a.head)).collect();
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &arcs)
            .finish()
    }
}

impl Digraph {
    /// Arcless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// Builds a digraph, rejecting loops, out-of-range endpoints and duplicate arcs.
    pub fn from_arcs<I, A>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = A>,
        A: Into<Arc>,
    {
        let mut d = Digraph::new(n);
        for (index, arc) in arcs.into_iter().enumerate() {
            let Arc { tail, head } = arc.into();
            if tail >= n || head >= n {
                return Err(Error::InvalidArc {
                    index,
                    message: format!("endpoint out of range 0..{n} in ({tail},{head})"),
                });
            }
            if tail == head {
                return Err(Error::InvalidArc {
                    index,
                    message: format!("loop at vertex {tail}"),
                });
            }
            if d.has_arc(tail, head) {
                return Err(Error::InvalidArc {
                    index,
                    message: format!("duplicate arc ({tail},{head})"),
                });
            }
            d.add_arc(tail, head);
        }
        Ok(d)
    }

    /// Complete digraph: every ordered pair of distinct vertices is an arc.
    pub fn complete(n: usize) -> Self {
        let mut d = Digraph::new(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    d.add_arc(u, v);
                }
            }
        }
        d
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0` (for `n >= 2`).
    pub fn cycle(n: usize) -> Self {
        let mut d = Digraph::new(n);
        if n >= 2 {
            for u in 0..n {
                d.add_arc(u, (u + 1) % n);
            }
        }
        d
    }

    /// Transitive tournament with `u -> v` whenever `u < v`.
    pub fn transitive_tournament(n: usize) -> Self {
        let mut d = Digraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                d.add_arc(u, v);
            }
        }
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count()
    }

    #[inline]
    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    #[inline]
    pub fn contains(&self, a: Arc) -> bool {
        self.has_arc(a.tail, a.head)
    }

    /// True when at least one of `uv`, `vu` is an arc.
    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// Inserts `uv`.
    ///
    /// # Panics
    /// Panics on a loop or an out-of-range endpoint.
    pub fn add_arc(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u * self.n + v] = true;
    }

    /// Removes `uv`; returns whether it was present.
    pub fn remove_arc(&mut self, u: Vertex, v: Vertex) -> bool {
        if !self.has_arc(u, v) {
            return false;
        }
        self.adj[u * self.n + v] = false;
        true
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        let n = self.n;
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| Arc::new(i / n, i % n))
    }

    pub fn arc_set(&self) -> ArcSet {
        self.arcs().collect()
    }

    pub fn out_neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&v| self.has_arc(u, v))
    }

    pub fn in_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&u| self.has_arc(u, v))
    }

    pub fn out_degree(&self, u: Vertex) -> usize {
        self.out_neighbors(u).count()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_neighbors(v).count()
    }

    /// Copy of `self` with the given arcs deleted (absent arcs are ignored).
    pub fn without_arcs<'a, I>(&self, arcs: I) -> Digraph
    where
        I: IntoIterator<Item = &'a Arc>,
    {
        let mut d = self.clone();
        for a in arcs {
            d.remove_arc(a.tail, a.head);
        }
        d
    }

    /// Copy of `self` with one arc deleted.
    pub fn without_arc(&self, a: Arc) -> Digraph {
        let mut d = self.clone();
        d.remove_arc(a.tail, a.head);
        d
    }

    /// Induced subdigraph on `vertices`; local vertex `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Digraph {
        let k = vertices.len();
        let mut d = Digraph::new(k);
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j && self.has_arc(u, v) {
                    d.adj[i * k + j] = true;
                }
            }
        }
        d
    }

    /// Digraph with every arc reversed.
    pub fn reversed(&self) -> Digraph {
        let mut d = Digraph::new(self.n);
        for a in self.arcs() {
            d.add_arc(a.head, a.tail);
        }
        d
    }

    /// Copy of `self` extended by `extra` isolated vertices `n..n+extra`.
    pub fn with_extra_vertices(&self, extra: usize) -> Digraph {
        let mut d = Digraph::new(self.n + extra);
        for a in self.arcs() {
            d.add_arc(a.tail, a.head);
        }
        d
    }

    /// Every unordered pair of distinct vertices is joined by at least one arc.
    pub fn is_semicomplete(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.adjacent(u, v)))
    }

    /// Semicomplete and free of 2-cycles.
    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_arc(u, v) != self.has_arc(v, u)))
    }

    /// Pairs `{u, v}` (with `u < v`) joined by no arc.
    pub fn non_adjacent_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Free function form of [`Digraph::is_semicomplete`].
pub fn is_semicomplete(d: &Digraph) -> bool {
    d.is_semicomplete()
}

/// Free function form of [`Digraph::is_tournament`].
pub fn is_tournament(d: &Digraph) -> bool {
    d.is_tournament()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_arcs_rejects_bad_input() {
        assert!(matches!(
            Digraph::from_arcs(2, [(0, 0)]),
            Err(Error::InvalidArc { index: 0, .. })
        ));
        assert!(matches!(
            Digraph::from_arcs(2, [(0, 1), (0, 1)]),
            Err(Error::InvalidArc { index: 1, .. })
        ));
        assert!(matches!(
            Digraph::from_arcs(2, [(0, 2)]),
            Err(Error::InvalidArc { index: 0, .. })
        ));
    }

    #[test]
    fn arcs_iterate_lexicographically() {
        let d = Digraph::from_arcs(3, [(2, 0), (0, 2), (1, 0), (0, 1)]).unwrap();
        let arcs: Vec<_> = d.arcs().map(|a| (a.tail, a.head)).collect();
        assert_eq!(arcs, vec![(0, 1), (0, 2), (1, 0), (2, 0)]);
    }

    #[test]
    fn semicomplete_and_tournament_predicates() {
        let c4 = Digraph::cycle(4);
        assert!(!c4.is_semicomplete());
        assert!(Digraph::complete(3).is_semicomplete());
        assert!(!Digraph::complete(3).is_tournament());
        assert!(Digraph::cycle(3).is_tournament());
        assert!(Digraph::new(1).is_tournament());
        assert_eq!(c4.non_adjacent_pairs(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn induced_relabels_in_given_order() {
        let d = Digraph::cycle(4);
        let sub = d.induced(&[2, 3, 0]);
        assert!(sub.has_arc(0, 1));
        assert!(sub.has_arc(1, 2));
        assert!(!sub.has_arc(2, 0));
    }
}
