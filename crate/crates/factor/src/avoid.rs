//! Spanning eulerian subdigraphs of a semicomplete digraph that avoid a
//! prescribed arc set.

use serde::Serialize;

use eulertrail_connectivity::{arc_connectivity, is_strong, reachable, CutCertificate};
use eulertrail_core::{weak_components, Arc, Digraph, Error, EulerianSubdigraph, Result, Vertex};
use eulertrail_oracle::{find_spanning_eulerian, oracle_limit};

use crate::circulation::{eulerian_factor, FactorOutcome, ObstructionPartition};
use crate::merge::merge_all;

/// How a certificate was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AvoidMethod {
    /// Circulation factor of `d` minus `f`, merged into one component.
    Merge,
    /// Same, inside the multipartite digraph obtained by deleting every arc
    /// within a component of the underlying graph of `f`.
    MultipartiteReduction,
    /// Exhaustive search.
    Oracle,
}

/// Result of [`spanning_eulerian_avoiding`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AvoidOutcome {
    Found {
        subdigraph: EulerianSubdigraph,
        method: AvoidMethod,
    },
    /// `d` minus `f` is not strong; no arc leaves `side_s`.
    NotStrong(CutCertificate),
    /// `d` minus `f` has no eulerian factor.
    NoFactor(ObstructionPartition),
    /// Exhaustive search found no solution.
    Exhausted,
    /// No certificate either way; `components` is the size of the best factor found.
    Unknown { components: usize },
}

impl AvoidOutcome {
    pub fn subdigraph(&self) -> Option<&EulerianSubdigraph> {
        match self {
            AvoidOutcome::Found { subdigraph, .. } => Some(subdigraph),
            _ => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, AvoidOutcome::Unknown { .. })
    }

    pub fn is_impossible(&self) -> bool {
        matches!(
            self,
            AvoidOutcome::NotStrong(_) | AvoidOutcome::NoFactor(_) | AvoidOutcome::Exhausted
        )
    }
}

fn check_arcs(d: &Digraph, f: &[Arc]) -> Result<()> {
    match f.iter().find(|a| !d.contains(**a)) {
        Some(a) => Err(Error::InvalidParameter(format!(
            "arc {a} is not in the digraph"
        ))),
        None => Ok(()),
    }
}

/// True when the underlying graph of `f` is a disjoint union of stars: every
/// component is a tree with at most one vertex of degree above one.
pub fn is_star_set(d: &Digraph, f: &[Arc]) -> Result<bool> {
    check_arcs(d, f)?;
    let mut edges: Vec<(Vertex, Vertex)> = f
        .iter()
        .map(|a| (a.tail.min(a.head), a.tail.max(a.head)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let mut degree = vec![0usize; d.n()];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let as_arcs: Vec<Arc> = edges.iter().map(|&(u, v)| Arc::new(u, v)).collect();
    Ok(weak_components(d.n(), &as_arcs).into_iter().all(|comp| {
        let m = edges
            .iter()
            .filter(|e| comp.binary_search(&e.0).is_ok())
            .count();
        let centres = comp.iter().filter(|&&v| degree[v] > 1).count();
        m + 1 == comp.len() && centres <= 1
    }))
}

/// True when non-adjacency in `d` is transitive, so the vertex classes of
/// mutually non-adjacent vertices make `d` semicomplete multipartite.
pub fn is_semicomplete_multipartite(d: &Digraph) -> bool {
    let n = d.n();
    (0..n).all(|u| {
        (0..n)
            .filter(|&v| v != u && !d.adjacent(u, v))
            .all(|v| (0..n).all(|w| w == u || w == v || d.adjacent(v, w) || !d.adjacent(u, w)))
    })
}

/// `d` without every arc joining two vertices of the same component of the
/// underlying graph of `f`. Avoids `f` and is semicomplete multipartite when `d`
/// is semicomplete.
pub fn multipartite_reduction(d: &Digraph, f: &[Arc]) -> Digraph {
    let comps = weak_components(d.n(), f);
    let mut class = vec![0; d.n()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            class[v] = i;
        }
    }
    let inside: Vec<Arc> = d
        .arcs()
        .filter(|a| class[a.tail] == class[a.head])
        .collect();
    d.without_arcs(&inside)
}

fn not_strong_cut(host: &Digraph) -> CutCertificate {
    let fwd = reachable(host, 0, false);
    if fwd.iter().any(|&b| !b) {
        return CutCertificate::from_side(host, &fwd);
    }
    let bwd = reachable(host, 0, true);
    let side: Vec<bool> = bwd.iter().map(|&b| !b).collect();
    CutCertificate::from_side(host, &side)
}

enum Attempt {
    Found(EulerianSubdigraph),
    NoFactor(ObstructionPartition),
    Stalled(usize),
}

fn factor_and_merge(host: &Digraph) -> Result<Attempt> {
    match eulerian_factor(host, &[])? {
        FactorOutcome::Obstruction(p) => Ok(Attempt::NoFactor(p)),
        FactorOutcome::Factor(factor) => {
            let merged = merge_all(host, &factor, &[])?.factor;
            if merged.is_connected() {
                Ok(Attempt::Found(EulerianSubdigraph::new(merged.arcs)))
            } else {
                Ok(Attempt::Stalled(merged.components.len()))
            }
        }
    }
}

/// Spanning eulerian subdigraph of the semicomplete digraph `d` avoiding `f`.
///
/// Order of attempts: strongness of `d` minus `f` (a cut proves impossibility),
/// an eulerian factor (an obstruction proves impossibility) merged into one
/// component, the same inside [`multipartite_reduction`], and finally the oracle
/// when `n` is within [`oracle_limit`], which settles the question either way. When `d` minus `f` is itself
/// semicomplete multipartite, strongness plus a factor guarantee a solution, so
/// `Unknown` can only come from instances beyond the oracle.
pub fn spanning_eulerian_avoiding(d: &Digraph, f: &[Arc]) -> Result<AvoidOutcome> {
    check_arcs(d, f)?;
    if !d.is_semicomplete() {
        return Err(Error::Precondition("digraph is not semicomplete".into()));
    }
    let host = d.without_arcs(f);
    if host.n() <= 1 {
        return Ok(AvoidOutcome::Found {
            subdigraph: EulerianSubdigraph::new(vec![]),
            method: AvoidMethod::Merge,
        });
    }
    if !is_strong(&host) {
        return Ok(AvoidOutcome::NotStrong(not_strong_cut(&host)));
    }
    let mut components = match factor_and_merge(&host)? {
        Attempt::Found(s) => {
            return Ok(AvoidOutcome::Found {
                subdigraph: s,
                method: AvoidMethod::Merge,
            })
        }
        Attempt::NoFactor(p) => return Ok(AvoidOutcome::NoFactor(p)),
        Attempt::Stalled(c) => c,
    };
    let reduced = multipartite_reduction(d, f);
    if reduced != host && is_strong(&reduced) {
        match factor_and_merge(&reduced)? {
            Attempt::Found(s) => {
                return Ok(AvoidOutcome::Found {
                    subdigraph: s,
                    method: AvoidMethod::MultipartiteReduction,
                })
            }
            Attempt::Stalled(c) => components = components.min(c),
            Attempt::NoFactor(_) => {}
        }
    }
    if d.n() <= oracle_limit() {
        return Ok(match find_spanning_eulerian(d, &[], f)? {
            Some(s) => AvoidOutcome::Found {
                subdigraph: s,
                method: AvoidMethod::Oracle,
            },
            None => AvoidOutcome::Exhausted,
        });
    }
    Ok(AvoidOutcome::Unknown { components })
}

/// Runs only the multipartite-reduction path: factor and merge inside
/// [`multipartite_reduction`]. Succeeds whenever the reduced digraph is strong
/// and the merge rules connect its factor.
pub fn spanning_eulerian_via_reduction(
    d: &Digraph,
    f: &[Arc],
) -> Result<Option<EulerianSubdigraph>> {
    check_arcs(d, f)?;
    let reduced = multipartite_reduction(d, f);
    if reduced.n() <= 1 || !is_strong(&reduced) {
        return Ok(None);
    }
    Ok(match factor_and_merge(&reduced)? {
        Attempt::Found(s) => Some(s),
        _ => None,
    })
}

/// Smallest `λ` for which avoiding any `k` arcs is guaranteed through the
/// multipartite reduction: `⌈(k + 1)² / 4⌉ + 1`.
pub fn reduction_threshold(k: usize) -> usize {
    (k + 1).pow(2).div_ceil(4) + 1
}

/// True when `d` is semicomplete and `λ(d) ≥ |f| + 1` with `f` a star-set or
/// `|f| ≤ 3`, or `λ(d) ≥ ⌈(|f| + 1)² / 4⌉ + 1`: the regimes where a spanning
/// eulerian subdigraph avoiding `f` always exists.
pub fn avoidance_guaranteed(d: &Digraph, f: &[Arc]) -> Result<bool> {
    check_arcs(d, f)?;
    if !d.is_semicomplete() || d.n() < 2 {
        return Ok(false);
    }
    let k = f.len();
    let lambda = arc_connectivity(d).lambda;
    let small = lambda > k && (k <= 3 || is_star_set(d, f)?);
    Ok(small || lambda >= reduction_threshold(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_sets() {
        let d = Digraph::complete(5);
        let arcs = |v: &[(usize, usize)]| v.iter().map(|&p| Arc::from(p)).collect::<Vec<_>>();
        assert!(is_star_set(&d, &arcs(&[(0, 1), (2, 3)])).unwrap());
        assert!(!is_star_set(&d, &arcs(&[(0, 1), (1, 2), (2, 3)])).unwrap());
        assert!(is_star_set(&d, &arcs(&[(0, 1), (2, 0), (0, 3)])).unwrap());
        assert!(!is_star_set(&d, &arcs(&[(0, 1), (1, 2), (2, 0)])).unwrap());
        assert!(is_star_set(&d, &arcs(&[(0, 1), (1, 0)])).unwrap());
        assert!(is_star_set(&d, &[]).unwrap());
    }

    #[test]
    fn multipartite_detection() {
        let d = Digraph::complete(4);
        assert!(is_semicomplete_multipartite(&d));
        let two_classes = multipartite_reduction(&d, &[Arc::new(0, 1), Arc::new(2, 3)]);
        assert!(is_semicomplete_multipartite(&two_classes));
        assert!(!two_classes.adjacent(0, 1));
        let path = d.without_arcs(&[
            Arc::new(0, 1),
            Arc::new(1, 0),
            Arc::new(1, 2),
            Arc::new(2, 1),
        ]);
        assert!(!is_semicomplete_multipartite(&path));
    }

    #[test]
    fn thresholds() {
        assert_eq!(reduction_threshold(4), 8);
        assert_eq!(reduction_threshold(5), 10);
        assert_eq!(reduction_threshold(1), 2);
    }
}
