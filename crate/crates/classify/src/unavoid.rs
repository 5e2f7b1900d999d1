//! Arcs contained in every spanning eulerian subdigraph.

use serde::Serialize;

use eulertrail_connectivity::{is_cut_arc, reachable, CutCertificate};
use eulertrail_core::{Arc, Digraph, EulerianSubdigraph, Vertex};
use eulertrail_factor::{spanning_eulerian_avoiding, AvoidOutcome, ObstructionPartition};

use crate::containment::Layout;
use crate::{check_input, ClassifyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnavoidTag {
    Avoidable,
    CutArc,
    RegularCompulsory,
    LeftCompulsory,
    RightCompulsory,
    Exceptional,
    /// Unavoidable by the partition test but matching none of the named shapes.
    Unlabelled,
}

impl UnavoidTag {
    pub fn is_unavoidable(self) -> bool {
        self != UnavoidTag::Avoidable
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UnavoidWitness {
    /// Spanning eulerian subdigraph without the arc.
    Avoiding(EulerianSubdigraph),
    /// The arc is the only one leaving `side_s`.
    Cut(CutCertificate),
    /// Partition of `d` minus the arc with `Y` the ends of the arc.
    Partition(ObstructionPartition),
    /// Avoidable, but no subdigraph could be produced within the search limits.
    Missing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnavoidClass {
    pub arc: Arc,
    pub tag: UnavoidTag,
    /// Every named shape the arc matches; the tag is the first of them.
    pub labels: Vec<UnavoidTag>,
    pub witness: UnavoidWitness,
}

impl UnavoidClass {
    pub fn is_unavoidable(&self) -> bool {
        self.tag.is_unavoidable()
    }

    /// Checks the witness against `d`.
    pub fn validate(&self, d: &Digraph) -> bool {
        match (&self.witness, self.is_unavoidable()) {
            (UnavoidWitness::Avoiding(s), false) => s.validate(d) && !s.contains(self.arc),
            (UnavoidWitness::Missing, false) => false,
            (UnavoidWitness::Cut(c), true) => c.validate(d) && c.crossing_arcs == [self.arc],
            (UnavoidWitness::Partition(p), true) => {
                p.validate(&d.without_arc(self.arc))
                    && p.y == sorted(vec![self.arc.tail, self.arc.head])
            }
            _ => false,
        }
    }
}

fn sorted(mut v: Vec<Vertex>) -> Vec<Vertex> {
    v.sort_unstable();
    v
}

/// Partition `(R1, R2, {u, v})` of `d` minus `uv` with `u, v` non-adjacent,
/// sharing in-neighbourhood `R1` and out-neighbourhood `R2`, and exactly one arc
/// from `R2` to `R1`. Exists exactly when a strong `d - uv` has no spanning
/// eulerian subdigraph.
pub fn neighbourhood_partition(d: &Digraph, a: Arc) -> Option<ObstructionPartition> {
    let (u, v) = (a.tail, a.head);
    let host = d.without_arc(a);
    if host.adjacent(u, v) {
        return None;
    }
    let r1 = sorted(host.in_neighbors(u).collect());
    let r2 = sorted(host.out_neighbors(u).collect());
    if r1 != sorted(host.in_neighbors(v).collect()) || r2 != sorted(host.out_neighbors(v).collect())
    {
        return None;
    }
    if r1.iter().any(|x| r2.binary_search(x).is_ok()) || r1.len() + r2.len() + 2 != d.n() {
        return None;
    }
    let back = r2
        .iter()
        .map(|&x| r1.iter().filter(|&&y| host.has_arc(x, y)).count())
        .sum::<usize>();
    (back == 1).then(|| ObstructionPartition {
        r1,
        r2,
        y: sorted(vec![u, v]),
    })
}

fn cut_certificate(d: &Digraph, a: Arc) -> CutCertificate {
    let side = reachable(&d.without_arc(a), a.tail, false);
    CutCertificate::from_side(d, &side)
}

fn is_exceptional(d: &Digraph, a: Arc) -> bool {
    if d.n() != 4 {
        return false;
    }
    let (x, w) = (a.tail, a.head);
    let others: Vec<Vertex> = (0..4).filter(|&v| v != x && v != w).collect();
    [(others[0], others[1]), (others[1], others[0])]
        .into_iter()
        .any(|(b, c)| {
            let required = [(x, b), (b, c), (c, w), (x, w), (c, x), (w, b)];
            let allowed =
                |e: Arc| required.contains(&(e.tail, e.head)) || (e.tail, e.head) == (c, b);
            required.iter().all(|&(s, t)| d.has_arc(s, t)) && d.arcs().all(allowed)
        })
}

/// Named compulsory shapes `a` matches with respect to `layout`.
fn compulsory_labels(d: &Digraph, layout: &Layout, a: Arc) -> Vec<UnavoidTag> {
    let dec = &layout.dec;
    let p = dec.p();
    let single = |i: usize| (1..=p).contains(&i) && dec.set(i).len() == 1;
    let only = |i: usize| dec.set(i)[0];
    let mut labels = Vec::new();
    let (iu, iv) = (dec.ind(a.tail), dec.ind(a.head));
    if iv == iu + 1
        && 1 < iu
        && iu + 1 < p
        && single(iu)
        && single(iv)
        && layout.ignored.contains(&iu)
        && layout.ignored.contains(&iv)
    {
        labels.push(UnavoidTag::RegularCompulsory);
    }
    if p >= 3 && single(1) && single(2) && single(3) {
        let (v1, v2, v3) = (only(1), only(2), only(3));
        let preds: Vec<Vertex> = sorted(d.in_neighbors(v3).collect());
        if d.has_arc(v2, v1)
            && !d.has_arc(v1, v2)
            && !d.has_arc(v3, v2)
            && preds == sorted(vec![v1, v2])
            && a == Arc::new(v1, v3)
        {
            labels.push(UnavoidTag::LeftCompulsory);
        }
    }
    if p >= 3 && single(p - 2) && single(p - 1) && single(p) {
        let (w2, w1, w0) = (only(p - 2), only(p - 1), only(p));
        let succs: Vec<Vertex> = sorted(d.out_neighbors(w2).collect());
        if d.has_arc(w0, w1)
            && !d.has_arc(w1, w0)
            && !d.has_arc(w1, w2)
            && succs == sorted(vec![w1, w0])
            && a == Arc::new(w2, w0)
        {
            labels.push(UnavoidTag::RightCompulsory);
        }
    }
    labels
}

/// Named unavoidable shapes `a` matches, cut-arc first. Computed against the
/// canonical nice decomposition when `n ≥ 4`.
pub fn taxonomy_labels(d: &Digraph, a: Arc) -> Result<Vec<UnavoidTag>, ClassifyError> {
    check_input(d, a)?;
    let mut labels = Vec::new();
    if is_cut_arc(d, a) {
        labels.push(UnavoidTag::CutArc);
    }
    if d.n() >= 4 {
        labels.extend(compulsory_labels(d, &Layout::of(d)?, a));
    }
    if is_exceptional(d, a) {
        labels.push(UnavoidTag::Exceptional);
    }
    Ok(labels)
}

/// Decides whether `a` lies in every spanning eulerian subdigraph of the strong
/// semicomplete `d`, with a cut, a partition or an avoiding subdigraph as proof.
pub fn classify_unavoidable(d: &Digraph, a: Arc) -> Result<UnavoidClass, ClassifyError> {
    let labels = taxonomy_labels(d, a)?;
    if labels.first() == Some(&UnavoidTag::CutArc) {
        return Ok(UnavoidClass {
            arc: a,
            tag: UnavoidTag::CutArc,
            labels,
            witness: UnavoidWitness::Cut(cut_certificate(d, a)),
        });
    }
    if let Some(partition) = neighbourhood_partition(d, a) {
        let tag = labels.first().copied().unwrap_or(UnavoidTag::Unlabelled);
        return Ok(UnavoidClass {
            arc: a,
            tag,
            labels,
            witness: UnavoidWitness::Partition(partition),
        });
    }
    let witness = match spanning_eulerian_avoiding(d, &[a])? {
        AvoidOutcome::Found { subdigraph, .. } => UnavoidWitness::Avoiding(subdigraph),
        _ => UnavoidWitness::Missing,
    };
    Ok(UnavoidClass {
        arc: a,
        tag: UnavoidTag::Avoidable,
        labels,
        witness,
    })
}

/// All unavoidable arcs of the strong semicomplete `d`.
pub fn unavoidable_arcs(d: &Digraph) -> Result<Vec<Arc>, ClassifyError> {
    let mut out = Vec::new();
    for a in d.arcs() {
        if classify_unavoidable(d, a)?.is_unavoidable() {
            out.push(a);
        }
    }
    Ok(out)
}
