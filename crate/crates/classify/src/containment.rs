//! Which arcs of a strong semicomplete digraph lie in some spanning eulerian
//! subdigraph, with a constructed witness for every arc that does.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use eulertrail_core::{is_spanning_eulerian, Arc, Digraph, EulerianSubdigraph, Vertex};
use eulertrail_decomposition::{
    ignored_sets, natural_backward_ordering, nice_decomposition, ArcTag, BackwardOrdering,
    Decomposition,
};
use eulertrail_hamilton::{cycle_arcs, hamiltonian_cycle, hamiltonian_path_between, rotate_to};
use eulertrail_oracle::{find_spanning_eulerian, oracle_limit};
use eulertrail_trails::eulerian_through_arc;

use crate::walk::{closed_walk, set_trail};
use crate::{check_input, ClassifyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ContainmentTag {
    Good,
    RegularBad,
    LeftBad,
    RightBad,
    /// The arc `zy` of the three-vertex exception.
    SmallCase,
}

impl ContainmentTag {
    pub fn is_good(self) -> bool {
        self == ContainmentTag::Good
    }
}

/// Structure that keeps a bad arc out of every spanning eulerian subdigraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Blocking {
    /// Index of an ignored set strictly between the ends of the arc.
    IgnoredSet { index: usize },
    /// `S_1 = {t_r}` and `S_2 = {u}` with `t_r u` missing.
    SingletonFirst { t_r: Vertex },
    /// `S_p = {s_1}` and `S_{p-1} = {v}` with `v s_1` missing.
    SingletonLast { s_1: Vertex },
    /// Three vertices, no spanning eulerian subdigraph through the arc.
    SmallCase,
}

/// Construction that produced a containment witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessMethod {
    /// Exhaustive search on at most four vertices.
    BaseCase,
    /// Hamiltonian cycle through every backward arc.
    BackwardCycle,
    /// Spanning `(v, u)`-trail closed by `uv`.
    FlatTrail,
    /// Split into the parts before and from `S_ind(u)`, recursing on the right.
    SplitAtTail,
    /// Mirror image of [`WitnessMethod::SplitAtTail`].
    SplitAtHead,
    /// `ind(u) = 2` with `|S_1| = 1`: delete `t_r` and recurse.
    SingletonSource,
    /// Mirror image of [`WitnessMethod::SingletonSource`].
    SingletonSink,
    /// `ind(u) = 1`, `ind(v) = p`: spanning trails between consecutive backward arcs.
    ChainedTrails,
    /// One closed walk through `uv` and every backward arc, used when the
    /// recursive constructions fail.
    ClosedWalk,
    /// Exhaustive search after the construction failed validation.
    OracleFallback,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ContainmentWitness {
    Subdigraph {
        subdigraph: EulerianSubdigraph,
        method: WitnessMethod,
    },
    Blocked(Blocking),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentClass {
    pub arc: Arc,
    pub tag: ContainmentTag,
    pub witness: ContainmentWitness,
    /// Constructions that failed validation and were replaced by search.
    pub diagnostics: Vec<String>,
}

impl ContainmentClass {
    pub fn is_good(&self) -> bool {
        self.tag.is_good()
    }

    pub fn subdigraph(&self) -> Option<&EulerianSubdigraph> {
        match &self.witness {
            ContainmentWitness::Subdigraph { subdigraph, .. } => Some(subdigraph),
            ContainmentWitness::Blocked(_) => None,
        }
    }

    pub fn method(&self) -> Option<WitnessMethod> {
        match &self.witness {
            ContainmentWitness::Subdigraph { method, .. } => Some(*method),
            ContainmentWitness::Blocked(_) => None,
        }
    }

    /// Checks the witness: a good arc's subdigraph spans `d`, is eulerian and
    /// contains the arc.
    pub fn validate(&self, d: &Digraph) -> bool {
        match (&self.witness, self.tag.is_good()) {
            (ContainmentWitness::Subdigraph { subdigraph, .. }, true) => {
                subdigraph.validate(d) && subdigraph.contains(self.arc)
            }
            (ContainmentWitness::Blocked(_), false) => true,
            _ => false,
        }
    }
}

/// Nice decomposition with its natural backward ordering and ignored sets.
#[derive(Clone, Debug)]
pub struct Layout {
    pub dec: Decomposition,
    pub ord: BackwardOrdering,
    pub ignored: BTreeSet<usize>,
}

impl Layout {
    pub fn of(d: &Digraph) -> Result<Self, ClassifyError> {
        Self::with_decomposition(d, nice_decomposition(d)?)
    }

    pub fn with_decomposition(d: &Digraph, dec: Decomposition) -> Result<Self, ClassifyError> {
        let ord = natural_backward_ordering(d, &dec)?;
        let ignored = ignored_sets(&dec, &ord);
        Ok(Layout { dec, ord, ignored })
    }

    /// Layout of `d.reversed()` obtained by reversing the set order.
    fn mirrored(&self, reversed: &Digraph) -> Result<Self, ClassifyError> {
        Self::with_decomposition(reversed, self.dec.mirrored())
    }
}

/// Why `a` is bad with respect to `layout`, if it is.
pub fn blocking(d: &Digraph, layout: &Layout, a: Arc) -> Option<Blocking> {
    let dec = &layout.dec;
    let p = dec.p();
    if p < 2 || layout.ord.r() == 0 {
        return None;
    }
    let (iu, iv) = (dec.ind(a.tail), dec.ind(a.head));
    if dec.tag(a) == ArcTag::Forward {
        if let Some(&index) = layout.ignored.range(iu + 1..iv).next() {
            return Some(Blocking::IgnoredSet { index });
        }
    }
    let t_r = layout.ord.t(layout.ord.r());
    if dec.set(2) == [a.tail] && dec.set(1) == [t_r] && t_r != a.head && !d.has_arc(t_r, a.tail) {
        return Some(Blocking::SingletonFirst { t_r });
    }
    let s_1 = layout.ord.s(1);
    if dec.set(p - 1) == [a.head] && dec.set(p) == [s_1] && s_1 != a.tail && !d.has_arc(a.head, s_1)
    {
        return Some(Blocking::SingletonLast { s_1 });
    }
    None
}

fn tag_of(b: &Blocking) -> ContainmentTag {
    match b {
        Blocking::IgnoredSet { .. } => ContainmentTag::RegularBad,
        Blocking::SingletonFirst { .. } => ContainmentTag::LeftBad,
        Blocking::SingletonLast { .. } => ContainmentTag::RightBad,
        Blocking::SmallCase => ContainmentTag::SmallCase,
    }
}

/// Classifies `a` as good or bad and certifies the answer.
///
/// Good arcs come with a spanning eulerian subdigraph containing them. Bad arcs
/// come with the structure that blocks them. Requires `d` strong and semicomplete.
pub fn classify_containment(d: &Digraph, a: Arc) -> Result<ContainmentClass, ClassifyError> {
    check_input(d, a)?;
    let layout = if d.n() >= 4 {
        Some(Layout::of(d)?)
    } else {
        None
    };
    classify_in(d, layout.as_ref(), a)
}

/// [`classify_containment`] against a caller-supplied nice decomposition.
pub fn classify_containment_with(
    d: &Digraph,
    dec: Decomposition,
    a: Arc,
) -> Result<ContainmentClass, ClassifyError> {
    check_input(d, a)?;
    let layout = Layout::with_decomposition(d, dec)?;
    classify_in(d, Some(&layout), a)
}

fn classify_in(
    d: &Digraph,
    layout: Option<&Layout>,
    a: Arc,
) -> Result<ContainmentClass, ClassifyError> {
    let mut diagnostics = Vec::new();
    if let Some(b) = layout.and_then(|l| blocking(d, l, a)) {
        return Ok(ContainmentClass {
            arc: a,
            tag: tag_of(&b),
            witness: ContainmentWitness::Blocked(b),
            diagnostics,
        });
    }
    let found = match layout {
        Some(l) if d.n() > 4 => certify(d, l, a, &mut diagnostics)?,
        _ => base_case(d, a)?,
    };
    Ok(match found {
        Some((subdigraph, method)) => ContainmentClass {
            arc: a,
            tag: ContainmentTag::Good,
            witness: ContainmentWitness::Subdigraph { subdigraph, method },
            diagnostics,
        },
        None if d.n() <= 3 => ContainmentClass {
            arc: a,
            tag: ContainmentTag::SmallCase,
            witness: ContainmentWitness::Blocked(Blocking::SmallCase),
            diagnostics,
        },
        None => return Err(ClassifyError::ConstructionFailed(a)),
    })
}

type Found = Option<(EulerianSubdigraph, WitnessMethod)>;

fn base_case(d: &Digraph, a: Arc) -> Result<Found, ClassifyError> {
    Ok(find_spanning_eulerian(d, &[a], &[])?.map(|s| (s, WitnessMethod::BaseCase)))
}

/// Witness for `a` in the strong semicomplete `d`, or `None` when `a` is bad.
fn witness(d: &Digraph, a: Arc, diag: &mut Vec<String>) -> Result<Found, ClassifyError> {
    if d.n() <= 4 {
        return base_case(d, a);
    }
    let layout = Layout::of(d)?;
    if blocking(d, &layout, a).is_some() {
        return Ok(None);
    }
    certify(d, &layout, a, diag)
}

/// [`witness`] on a smaller auxiliary digraph; a failed construction there only
/// makes the caller's construction fail.
fn sub_witness(d: &Digraph, a: Arc, diag: &mut Vec<String>) -> Result<Found, ClassifyError> {
    match witness(d, a, diag) {
        Err(ClassifyError::ConstructionFailed(_)) => Ok(None),
        other => other,
    }
}

/// Constructs and validates a witness for the good arc `a`, falling back to
/// search within the oracle limit.
fn certify(
    d: &Digraph,
    layout: &Layout,
    a: Arc,
    diag: &mut Vec<String>,
) -> Result<Found, ClassifyError> {
    let built = match layout.dec.tag(a) {
        ArcTag::Backward => backward_cycle(d, layout).map(|c| (c, WitnessMethod::BackwardCycle)),
        ArcTag::Flat => eulerian_through_arc(d, a)
            .ok()
            .map(|c| (c, WitnessMethod::FlatTrail)),
        ArcTag::Forward => forward(d, layout, a, diag)?,
    };
    if let Some((arcs, method)) = built {
        if arcs.contains(&a) && is_spanning_eulerian(d, &arcs) {
            return Ok(Some((EulerianSubdigraph::new(arcs), method)));
        }
    }
    diag.push(format!(
        "construction for {a} on {} vertices failed validation",
        d.n()
    ));
    if layout.dec.tag(a) == ArcTag::Forward {
        if let Some(arcs) = closed_walk(d, layout, a) {
            if arcs.contains(&a) && is_spanning_eulerian(d, &arcs) {
                return Ok(Some((
                    EulerianSubdigraph::new(arcs),
                    WitnessMethod::ClosedWalk,
                )));
            }
        }
    }
    if d.n() <= oracle_limit() {
        if let Some(s) = find_spanning_eulerian(d, &[a], &[])? {
            return Ok(Some((s, WitnessMethod::OracleFallback)));
        }
    }
    Err(ClassifyError::ConstructionFailed(a))
}

type Built = Option<(Vec<Arc>, WitnessMethod)>;

fn forward(
    d: &Digraph,
    layout: &Layout,
    a: Arc,
    diag: &mut Vec<String>,
) -> Result<Built, ClassifyError> {
    let dec = &layout.dec;
    if dec.ind(a.tail) >= 2 {
        return tail_side(d, layout, a, diag, false);
    }
    if dec.ind(a.head) < dec.p() {
        let rev = d.reversed();
        let mirrored = layout.mirrored(&rev)?;
        let built = tail_side(&rev, &mirrored, a.reversed(), diag, true)?;
        return Ok(built.map(|(arcs, m)| (arcs.into_iter().map(Arc::reversed).collect(), m)));
    }
    Ok(chained_trails(d, layout, a).map(|arcs| (arcs, WitnessMethod::ChainedTrails)))
}

fn tail_side(
    d: &Digraph,
    layout: &Layout,
    a: Arc,
    diag: &mut Vec<String>,
    mirrored: bool,
) -> Result<Built, ClassifyError> {
    let dec = &layout.dec;
    let (split, single) = if mirrored {
        (WitnessMethod::SplitAtHead, WitnessMethod::SingletonSink)
    } else {
        (WitnessMethod::SplitAtTail, WitnessMethod::SingletonSource)
    };
    if dec.ind(a.tail) >= 3 || dec.set(1).len() > 1 {
        Ok(split_at_tail(d, layout, a, diag)?.map(|arcs| (arcs, split)))
    } else {
        Ok(singleton_source(d, layout, a, diag)?.map(|arcs| (arcs, single)))
    }
}

/// `vs` plus one extra vertex, which gets local index `vs.len()`.
struct Gadget {
    vs: Vec<Vertex>,
    g: Digraph,
}

impl Gadget {
    fn new(d: &Digraph, vs: Vec<Vertex>) -> Self {
        let g = d.induced(&vs).with_extra_vertices(1);
        Gadget { vs, g }
    }

    fn extra(&self) -> usize {
        self.vs.len()
    }

    fn local(&self, v: Vertex) -> usize {
        self.vs
            .iter()
            .position(|&w| w == v)
            .expect("vertex of the gadget")
    }

    fn global(&self, i: usize) -> Vertex {
        self.vs[i]
    }
}

/// Splits `V` into `L` (before `S_ind(u)`) and `R`. `R` plus a source-like
/// vertex is solved recursively; `L` plus a sink-like vertex is covered by a
/// hamiltonian cycle; the two are joined through the backward arc crossing the split.
fn split_at_tail(
    d: &Digraph,
    layout: &Layout,
    a: Arc,
    diag: &mut Vec<String>,
) -> Result<Option<Vec<Arc>>, ClassifyError> {
    let dec = &layout.dec;
    let iu = dec.ind(a.tail);
    let left = dec.union(1, iu - 1);
    let right = dec.union(iu, dec.p());
    let Some(cross) = layout
        .ord
        .arcs
        .iter()
        .copied()
        .find(|b| dec.ind(b.tail) >= iu && dec.ind(b.head) < iu)
    else {
        return Ok(None);
    };

    let mut dl = Gadget::new(d, left);
    let zl = dl.extra();
    for l in 0..zl {
        dl.g.add_arc(l, zl);
    }
    dl.g.add_arc(zl, dl.local(cross.head));
    let Ok(cl) = hamiltonian_cycle(&dl.g) else {
        return Ok(None);
    };
    let cl = rotate_to(&cl, zl);
    let y_left = dl.global(*cl.last().expect("cycle through the extra vertex"));

    let mut dr = Gadget::new(d, right);
    let zr = dr.extra();
    for r in 0..zr {
        dr.g.add_arc(zr, r);
    }
    dr.g.add_arc(dr.local(cross.tail), zr);
    let inner = Arc::new(dr.local(a.tail), dr.local(a.head));
    let Some((er, _)) = sub_witness(&dr.g, inner, diag)? else {
        return Ok(None);
    };
    let Some(y_right) = er
        .arcs
        .iter()
        .find(|b| b.tail == zr)
        .map(|b| dr.global(b.head))
    else {
        return Ok(None);
    };

    let mut arcs: Vec<Arc> = cycle_arcs(&cl)
        .filter(|b| b.tail != zl && b.head != zl)
        .map(|b| Arc::new(dl.global(b.tail), dl.global(b.head)))
        .collect();
    arcs.extend(
        er.arcs
            .iter()
            .filter(|b| b.tail != zr && b.head != zr)
            .map(|b| Arc::new(dr.global(b.tail), dr.global(b.head))),
    );
    arcs.push(Arc::new(y_left, y_right));
    arcs.push(cross);
    Ok(Some(arcs))
}

/// `ind(u) = 2` and `S_1 = {t_r}`: solve `D - t_r` (plus `s_r u` when no other
/// backward arc enters `S_2`) and route the solution through `t_r`.
fn singleton_source(
    d: &Digraph,
    layout: &Layout,
    a: Arc,
    diag: &mut Vec<String>,
) -> Result<Option<Vec<Arc>>, ClassifyError> {
    let (dec, ord) = (&layout.dec, &layout.ord);
    let r = ord.r();
    let (s_r, t_r) = (ord.s(r), ord.t(r));
    let u = a.tail;
    let rest: Vec<Vertex> = (0..d.n()).filter(|&x| x != t_r).collect();
    let local = |x: Vertex| {
        rest.iter()
            .position(|&w| w == x)
            .expect("vertex other than t_r")
    };
    let global = |b: &Arc| Arc::new(rest[b.tail], rest[b.head]);
    let mut sub = d.induced(&rest);
    let inner = Arc::new(local(a.tail), local(a.head));

    if r == 1 || dec.ind(ord.t(r - 1)) > 2 {
        if s_r == u || d.has_arc(s_r, u) {
            return Ok(None);
        }
        let shortcut = Arc::new(local(s_r), local(u));
        sub.add_arc(shortcut.tail, shortcut.head);
        let Some((w1, _)) = sub_witness(&sub, inner, diag)? else {
            return Ok(None);
        };
        if !w1.contains(shortcut) {
            return Ok(None);
        }
        let mut arcs: Vec<Arc> = w1
            .arcs
            .iter()
            .filter(|&&b| b != shortcut)
            .map(global)
            .collect();
        arcs.push(Arc::new(s_r, t_r));
        arcs.push(Arc::new(t_r, u));
        return Ok(Some(arcs));
    }

    let Some((w2, _)) = sub_witness(&sub, inner, diag)? else {
        return Ok(None);
    };
    let mut arcs: Vec<Arc> = w2.arcs.iter().map(global).collect();
    if let Some(pos) = arcs.iter().position(|&b| b.tail == s_r && b != a) {
        let w = arcs.remove(pos).head;
        arcs.push(Arc::new(s_r, t_r));
        arcs.push(Arc::new(t_r, w));
        return Ok(Some(arcs));
    }
    if s_r != u {
        return Ok(None);
    }
    let z = arcs.iter().find(|b| b.head == u).map(|b| b.tail);
    let Some(y) = d.in_neighbors(u).find(|&y| Some(y) != z) else {
        return Ok(None);
    };
    arcs.push(Arc::new(u, t_r));
    if y == t_r {
        arcs.push(Arc::new(t_r, u));
    } else {
        arcs.push(Arc::new(t_r, y));
        arcs.push(Arc::new(y, u));
    }
    Ok(Some(arcs))
}

/// `ind(u) = 1` and `ind(v) = p`: spanning trails from each `t_j` to `s_{j+1}`
/// (with `t_0 = v`, `s_{r+1} = u`) closed up by the backward arcs and `uv`.
fn chained_trails(d: &Digraph, layout: &Layout, a: Arc) -> Option<Vec<Arc>> {
    let (dec, ord) = (&layout.dec, &layout.ord);
    let r = ord.r();
    let head = |j: usize| if j == 0 { a.head } else { ord.t(j) };
    let tail = |j: usize| if j == r + 1 { a.tail } else { ord.s(j) };
    let mut arcs = vec![a];
    let mut covered = 0;
    for j in 0..=r {
        let (from, to) = (head(j), tail(j + 1));
        let (i1, i2) = (dec.ind(from), dec.ind(to));
        if i1 > i2 {
            return None;
        }
        covered += dec.union(i1, i2).len();
        if i1 == i2 {
            arcs.extend(trail_inside(d, dec.set(i1), from, to)?);
        } else {
            arcs.extend(path_across(d, dec, from, to)?);
            for i in i1..=i2 {
                arcs.extend(set_cycle(d, dec.set(i))?);
            }
        }
    }
    if covered != d.n() {
        return None;
    }
    arcs.extend(ord.arcs.iter().copied());
    Some(arcs)
}

/// Spanning `(from, to)`-trail of `D⟨set⟩`; a hamiltonian cycle when `from = to`.
fn trail_inside(d: &Digraph, set: &[Vertex], from: Vertex, to: Vertex) -> Option<Vec<Arc>> {
    if from == to {
        return set_cycle(d, set);
    }
    set_trail(d, set, from, to)
}

/// Arcs of a hamiltonian cycle of `D⟨set⟩`, empty for a singleton.
fn set_cycle(d: &Digraph, set: &[Vertex]) -> Option<Vec<Arc>> {
    if set.len() == 1 {
        return Some(vec![]);
    }
    let cycle = hamiltonian_cycle(&d.induced(set)).ok()?;
    Some(
        cycle_arcs(&cycle)
            .map(|b| Arc::new(set[b.tail], set[b.head]))
            .collect(),
    )
}

/// Path from `from` to `to` meeting each set strictly between theirs once.
fn path_across(d: &Digraph, dec: &Decomposition, from: Vertex, to: Vertex) -> Option<Vec<Arc>> {
    let (i1, i2) = (dec.ind(from), dec.ind(to));
    let mut path = vec![from];
    for i in i1 + 1..i2 {
        let prev = *path.last().expect("nonempty path");
        let last = i + 1 == i2;
        let x = dec
            .set(i)
            .iter()
            .copied()
            .find(|&x| d.has_arc(prev, x) && (!last || d.has_arc(x, to)))?;
        path.push(x);
    }
    path.push(to);
    Some(path.windows(2).map(|w| Arc::new(w[0], w[1])).collect())
}

/// Hamiltonian cycle through every backward arc: a path from `S_p` to `S_1`
/// through all backward arcs, closed by a hamiltonian path of the rest.
fn backward_cycle(d: &Digraph, layout: &Layout) -> Option<Vec<Arc>> {
    let (dec, ord) = (&layout.dec, &layout.ord);
    let (r, p) = (ord.r(), dec.p());
    if r == 0 {
        return None;
    }
    let mut q1 = ends_at(d, dec.set(p), ord.s(1))?;
    for j in 1..=r {
        q1.push(ord.t(j));
        if j < r {
            let (t, s) = (ord.t(j), ord.s(j + 1));
            if dec.ind(t) == dec.ind(s) {
                q1.extend(
                    path_inside(d, dec.set(dec.ind(t)), t, s)?
                        .into_iter()
                        .skip(1),
                );
            } else {
                q1.push(s);
            }
        }
    }
    let mut first = ends_at(&d.reversed(), dec.set(1), ord.t(r))?;
    first.reverse();
    q1.extend(first.into_iter().skip(1));

    let mut seen = vec![false; d.n()];
    if q1.iter().any(|&x| std::mem::replace(&mut seen[x], true)) {
        return None;
    }
    let (y, x) = (q1[0], *q1.last().expect("nonempty path"));
    let interior: BTreeSet<Vertex> = q1[1..q1.len() - 1].iter().copied().collect();
    let rest: Vec<Vertex> = (0..d.n()).filter(|v| !interior.contains(v)).collect();
    let local = |v: Vertex| rest.iter().position(|&w| w == v).expect("endpoint kept");
    let mut sub = d.induced(&rest);
    if rest.len() > 2 {
        // Matters only when `Q1` is the arc `yx`. A hamiltonian `(x, y)`-path on
        // more than two vertices never uses `xy`, so adding it is harmless.
        sub.remove_arc(local(y), local(x));
        sub.add_arc(local(x), local(y));
    }
    let q2 = hamiltonian_path_between(&sub, local(x), Some(local(y))).ok()?;
    let mut arcs: Vec<Arc> = q1.windows(2).map(|w| Arc::new(w[0], w[1])).collect();
    arcs.extend(q2.windows(2).map(|w| Arc::new(rest[w[0]], rest[w[1]])));
    Some(arcs)
}

/// Hamiltonian path of the strong `D⟨set⟩` ending at `end`.
fn ends_at(d: &Digraph, set: &[Vertex], end: Vertex) -> Option<Vec<Vertex>> {
    if set.len() == 1 {
        return Some(vec![end]);
    }
    let local = set.iter().position(|&w| w == end)?;
    let cycle = hamiltonian_cycle(&d.induced(set)).ok()?;
    let mut path = rotate_to(&cycle, local);
    path.rotate_left(1);
    Some(path.into_iter().map(|i| set[i]).collect())
}

/// Shortest `(from, to)`-path inside `D⟨set⟩`.
pub(crate) fn path_inside(
    d: &Digraph,
    set: &[Vertex],
    from: Vertex,
    to: Vertex,
) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; d.n()];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            while *path.last().expect("nonempty path") != from {
                path.push(prev[*path.last().expect("nonempty path")]);
            }
            path.reverse();
            return Some(path);
        }
        for &y in set {
            if prev[y] == usize::MAX && d.has_arc(x, y) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}
