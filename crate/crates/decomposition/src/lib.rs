//! Ordered vertex partitions of strong semicomplete digraphs: 1-decompositions,
//! nice decompositions, the natural ordering of backward arcs and ignored sets.
//!
//! Indices are 1-based throughout, so `ind(v) == 1` means `v` lies in the first set.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use eulertrail_connectivity::{
    arc_disjoint_paths, cut_arcs, is_strong, strong_components, PathsOrCut,
};
use eulertrail_core::{Arc, Digraph, Error, Result, Vertex};

/// Position of an arc relative to a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcTag {
    Forward,
    Backward,
    Flat,
}

/// Ordered partition `(S_1, ..., S_p)` of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    sets: Vec<Vec<Vertex>>,
    #[serde(skip)]
    ind: Vec<usize>,
}

impl Decomposition {
    /// Validates that `sets` are nonempty, disjoint and cover `0..n`. Each set is sorted.
    pub fn new(n: usize, sets: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut ind = vec![0; n];
        let mut sets = sets;
        for (i, set) in sets.iter_mut().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidParameter(format!("set {} is empty", i + 1)));
            }
            set.sort_unstable();
            for &v in set.iter() {
                if v >= n {
                    return Err(Error::InvalidParameter(format!("vertex {v} out of range")));
                }
                if ind[v] != 0 {
                    return Err(Error::InvalidParameter(format!("vertex {v} appears twice")));
                }
                ind[v] = i + 1;
            }
        }
        if let Some(v) = ind.iter().position(|&i| i == 0) {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} is not covered"
            )));
        }
        Ok(Decomposition { sets, ind })
    }

    /// The one-set decomposition.
    pub fn trivial(n: usize) -> Self {
        let sets = if n == 0 {
            Vec::new()
        } else {
            vec![(0..n).collect()]
        };
        Decomposition {
            sets,
            ind: vec![1; n],
        }
    }

    /// Number of sets `p`.
    pub fn p(&self) -> usize {
        self.sets.len()
    }

    pub fn n(&self) -> usize {
        self.ind.len()
    }

    /// Index of `v`, in `1..=p`.
    pub fn ind(&self, v: Vertex) -> usize {
        self.ind[v]
    }

    /// The set `S_i` for `1 <= i <= p`.
    pub fn set(&self, i: usize) -> &[Vertex] {
        &self.sets[i - 1]
    }

    pub fn sets(&self) -> &[Vec<Vertex>] {
        &self.sets
    }

    pub fn tag(&self, a: Arc) -> ArcTag {
        arc_tag(self, a)
    }

    /// Backward arcs of `d`, in lexicographic order.
    pub fn backward_arcs(&self, d: &Digraph) -> Vec<Arc> {
        d.arcs()
            .filter(|&a| self.tag(a) == ArcTag::Backward)
            .collect()
    }

    /// Vertices of `S_lo ∪ ... ∪ S_hi` (empty when `lo > hi`).
    pub fn union(&self, lo: usize, hi: usize) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = (lo.max(1)..=hi.min(self.p()))
            .flat_map(|i| self.set(i).iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// The same partition in reverse order. A nice decomposition of `d` becomes a
    /// nice decomposition of `d.reversed()`.
    pub fn mirrored(&self) -> Self {
        let sets: Vec<Vec<Vertex>> = self.sets.iter().rev().cloned().collect();
        let p = self.p();
        let ind = self.ind.iter().map(|&i| p + 1 - i).collect();
        Decomposition { sets, ind }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, set) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let items: Vec<String> = set.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        f.write_str(")")
    }
}

pub fn arc_tag(dec: &Decomposition, a: Arc) -> ArcTag {
    let (iu, iv) = (dec.ind(a.tail), dec.ind(a.head));
    match iu.cmp(&iv) {
        std::cmp::Ordering::Less => ArcTag::Forward,
        std::cmp::Ordering::Greater => ArcTag::Backward,
        std::cmp::Ordering::Equal => ArcTag::Flat,
    }
}

/// Strong decomposition whose backward arcs are cut-arcs and whose cut-arcs are
/// never flat: the strong components of `d` minus its cut-arcs, in acyclic order.
pub fn one_decomposition(d: &Digraph) -> Result<Decomposition> {
    let cuts = cut_arcs(d)?;
    if cuts.is_empty() {
        return Ok(Decomposition::trivial(d.n()));
    }
    let rest = d.without_arcs(&cuts);
    Decomposition::new(d.n(), strong_components(&rest))
}

/// Which forward cut-arc [`nice_decomposition_with`] turns backward first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SwapOrder {
    #[default]
    SmallestTailFirst,
    LargestTailFirst,
}

/// 1-decomposition whose backward arcs are exactly the cut-arcs of `d`.
pub fn nice_decomposition(d: &Digraph) -> Result<Decomposition> {
    nice_decomposition_with(d, SwapOrder::SmallestTailFirst)
}

/// As [`nice_decomposition`], choosing forward cut-arcs to swap in the given order.
pub fn nice_decomposition_with(d: &Digraph, order: SwapOrder) -> Result<Decomposition> {
    if d.n() < 4 {
        return Err(Error::Precondition(format!(
            "nice decompositions need at least 4 vertices (got {})",
            d.n()
        )));
    }
    if !d.is_semicomplete() {
        return Err(Error::Precondition("digraph is not semicomplete".into()));
    }
    let cuts = cut_arcs(d)?;
    let mut dec = if cuts.is_empty() {
        Decomposition::trivial(d.n())
    } else {
        Decomposition::new(d.n(), strong_components(&d.without_arcs(&cuts)))?
    };
    // A forward cut-arc joins consecutive singletons; swapping them turns it backward.
    loop {
        let forward = cuts.iter().filter(|&&a| dec.tag(a) == ArcTag::Forward);
        let next = match order {
            SwapOrder::SmallestTailFirst => forward.min_by_key(|a| dec.ind(a.tail)),
            SwapOrder::LargestTailFirst => forward.max_by_key(|a| dec.ind(a.tail)),
        };
        let Some(&a) = next else { break };
        let (iu, iv) = (dec.ind(a.tail), dec.ind(a.head));
        if iv != iu + 1 || dec.set(iu).len() != 1 || dec.set(iv).len() != 1 {
            return Err(Error::Precondition(format!(
                "forward cut-arc {a} does not join consecutive singletons"
            )));
        }
        let mut sets = dec.sets;
        sets.swap(iu - 1, iv - 1);
        dec = Decomposition::new(d.n(), sets)?;
    }
    if dec.backward_arcs(d) != cuts {
        return Err(Error::Precondition(
            "backward arcs differ from cut-arcs".into(),
        ));
    }
    Ok(dec)
}

/// Backward arcs `(s_1t_1, ..., s_rt_r)` by decreasing tail index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BackwardOrdering {
    pub arcs: Vec<Arc>,
}

impl BackwardOrdering {
    /// Number of backward arcs `r`.
    pub fn r(&self) -> usize {
        self.arcs.len()
    }

    /// Tail `s_j`, `1 <= j <= r`.
    pub fn s(&self, j: usize) -> Vertex {
        self.arcs[j - 1].tail
    }

    /// Head `t_j`, `1 <= j <= r`.
    pub fn t(&self, j: usize) -> Vertex {
        self.arcs[j - 1].head
    }
}

/// Natural ordering of the backward arcs of a nice decomposition.
pub fn natural_backward_ordering(d: &Digraph, dec: &Decomposition) -> Result<BackwardOrdering> {
    let backward = dec.backward_arcs(d);
    if backward != cut_arcs(d)? {
        return Err(Error::Precondition("decomposition is not nice".into()));
    }
    Ok(ordering_by_tail(dec, backward))
}

/// Orders the given arcs by decreasing tail index without checking niceness.
pub fn ordering_by_tail(dec: &Decomposition, mut arcs: Vec<Arc>) -> BackwardOrdering {
    arcs.sort_by_key(|a| (std::cmp::Reverse(dec.ind(a.tail)), a.tail, a.head));
    BackwardOrdering { arcs }
}

/// Indices `i` of ignored sets: some `1 <= j <= r` has
/// `ind(s_{j+1}) < i < ind(t_{j-1})`, reading `ind(t_0)` as `p` and
/// `ind(s_{r+1})` as `1`. With `r = 1` every set strictly between the first
/// and the last is ignored.
pub fn ignored_sets(dec: &Decomposition, ord: &BackwardOrdering) -> BTreeSet<usize> {
    let (p, r) = (dec.p(), ord.r());
    let mut out = BTreeSet::new();
    let mut open = |lo: usize, hi: usize| {
        out.extend(lo + 1..hi);
    };
    for j in 1..=r {
        let lo = if j == r { 1 } else { dec.ind(ord.s(j + 1)) };
        let hi = if j == 1 { p } else { dec.ind(ord.t(j - 1)) };
        open(lo, hi);
    }
    out
}

/// A structural property a 1-decomposition or its backward ordering fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Violation {
    /// `D⟨S_i⟩` is not strong.
    SetNotStrong { index: usize },
    /// A backward arc that is not a cut-arc.
    BackwardNotCut { arc: Arc },
    /// A cut-arc inside one set.
    FlatCutArc { arc: Arc },
    /// Two cut-arcs with tails (or heads) in the same set.
    SharedIndex { first: Arc, second: Arc },
    /// Two nested backward arcs.
    Nested { first: Arc, second: Arc },
    /// A forward cut-arc that does not join consecutive singletons.
    ForwardCutShape { arc: Arc },
    /// The ordering breaks the interleaving chain at position `j`.
    OrderingChain { j: usize },
    /// `s_1` is not in the last set or `t_r` is not in the first.
    OrderingEnds,
    /// Fewer than two arc-disjoint `(t_j, s_{j+1})`-paths inside a shared set.
    WeakJunction { j: usize },
}

fn nested(dec: &Decomposition, a: Arc, b: Arc) -> bool {
    let (u, v, x, y) = (
        dec.ind(a.tail),
        dec.ind(a.head),
        dec.ind(b.tail),
        dec.ind(b.head),
    );
    (v <= y && y < x && x <= u) || (y <= v && v < u && u <= x)
}

/// Every structural property a 1-decomposition of a strong semicomplete digraph must
/// satisfy that `dec` fails; empty for a correct decomposition.
pub fn verify_structure(d: &Digraph, dec: &Decomposition) -> Vec<Violation> {
    let mut out = Vec::new();
    for i in 1..=dec.p() {
        if !is_strong(&d.induced(dec.set(i))) {
            out.push(Violation::SetNotStrong { index: i });
        }
    }
    let cuts = cut_arcs(d).unwrap_or_default();
    let backward = dec.backward_arcs(d);
    for &a in &backward {
        if !cuts.contains(&a) {
            out.push(Violation::BackwardNotCut { arc: a });
        }
    }
    for &a in &cuts {
        if dec.tag(a) == ArcTag::Flat {
            out.push(Violation::FlatCutArc { arc: a });
        }
    }
    let mut candidates: Vec<Arc> = cuts.iter().chain(&backward).copied().collect();
    candidates.sort_unstable();
    candidates.dedup();
    for (k, &a) in candidates.iter().enumerate() {
        for &b in &candidates[k + 1..] {
            if dec.ind(a.tail) == dec.ind(b.tail) || dec.ind(a.head) == dec.ind(b.head) {
                out.push(Violation::SharedIndex {
                    first: a,
                    second: b,
                });
            }
        }
    }
    for (k, &a) in backward.iter().enumerate() {
        for &b in &backward[k + 1..] {
            if nested(dec, a, b) {
                out.push(Violation::Nested {
                    first: a,
                    second: b,
                });
            }
        }
    }
    if d.n() >= 4 {
        for &a in cuts.iter().filter(|&&a| dec.tag(a) == ArcTag::Forward) {
            let (iu, iv) = (dec.ind(a.tail), dec.ind(a.head));
            if iv != iu + 1 || dec.set(iu).len() != 1 || dec.set(iv).len() != 1 {
                out.push(Violation::ForwardCutShape { arc: a });
            }
        }
    }
    out
}

/// Checks the interleaving chain, the end positions and the two-path property at
/// shared sets for the natural ordering of a nice decomposition.
pub fn verify_ordering(d: &Digraph, dec: &Decomposition, ord: &BackwardOrdering) -> Vec<Violation> {
    let mut out = Vec::new();
    let r = ord.r();
    let (s, t) = (|j| dec.ind(ord.s(j)), |j| dec.ind(ord.t(j)));
    for j in 1..r {
        let chain = t(j + 1) < t(j) && t(j) <= s(j + 1) && s(j + 1) < s(j);
        let next = j + 2 > r || (t(j + 1) <= s(j + 2) && s(j + 2) < t(j));
        if !(chain && next) {
            out.push(Violation::OrderingChain { j });
        }
    }
    if r > 0 && (s(1) != dec.p() || t(r) != 1) {
        out.push(Violation::OrderingEnds);
    }
    for j in 1..r {
        let (tj, sj1) = (ord.t(j), ord.s(j + 1));
        if t(j) == s(j + 1) && tj != sj1 {
            let set = dec.set(t(j));
            let local = |v: Vertex| set.iter().position(|&w| w == v).expect("member of set");
            let inner = d.induced(set);
            let two = matches!(
                arc_disjoint_paths(&inner, local(tj), local(sj1), 2),
                Ok(PathsOrCut::Paths(_))
            );
            if !two {
                out.push(Violation::WeakJunction { j });
            }
        }
    }
    out
}
