//! Eulerian factors as integral circulations on the split digraph, and the
//! obstruction partitions certifying infeasibility.

use serde::Serialize;

use eulertrail_connectivity::FlowNetwork;
use eulertrail_core::{is_eulerian_factor, weak_components, Arc, Digraph, Error, Result, Vertex};

/// Spanning subdigraph with in-degree equal to a positive out-degree at every
/// vertex. `components` are the weak components of `arcs`, each sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerianFactor {
    pub arcs: Vec<Arc>,
    pub components: Vec<Vec<Vertex>>,
}

impl EulerianFactor {
    /// Sorts `arcs` and computes the components; does not validate.
    pub fn from_arcs(n: usize, mut arcs: Vec<Arc>) -> Self {
        arcs.sort_unstable();
        let components = weak_components(n, &arcs);
        EulerianFactor { arcs, components }
    }

    /// True when this is an eulerian factor of `host` with correct components.
    pub fn validate(&self, host: &Digraph) -> bool {
        is_eulerian_factor(host, &self.arcs)
            && weak_components(host.n(), &self.arcs) == self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// Arcs of component `index`.
    pub fn component_arcs(&self, index: usize) -> Vec<Arc> {
        let members = &self.components[index];
        self.arcs
            .iter()
            .copied()
            .filter(|a| members.binary_search(&a.tail).is_ok())
            .collect()
    }
}

/// Partition `(R1, R2, Y)` of the vertices of a host digraph such that `Y` is
/// independent, no arc goes from `R2` to `Y` or from `Y` to `R1`, and fewer than
/// `|Y|` arcs go from `R2` to `R1`. Such a partition rules out an eulerian factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionPartition {
    pub r1: Vec<Vertex>,
    pub r2: Vec<Vertex>,
    pub y: Vec<Vertex>,
}

/// Arc counts between the parts of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionCounts {
    pub within_y: usize,
    pub r2_to_y: usize,
    pub y_to_r1: usize,
    pub r2_to_r1: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    R1,
    R2,
    Y,
}

impl ObstructionPartition {
    fn labels(&self, n: usize) -> Option<Vec<Part>> {
        let mut label = vec![None; n];
        for (part, set) in [
            (Part::R1, &self.r1),
            (Part::R2, &self.r2),
            (Part::Y, &self.y),
        ] {
            for &v in set {
                if v >= n || label[v].is_some() {
                    return None;
                }
                label[v] = Some(part);
            }
        }
        label.into_iter().collect()
    }

    /// Arc counts in `host`; `None` when the sets do not partition its vertices.
    pub fn counts(&self, host: &Digraph) -> Option<PartitionCounts> {
        let label = self.labels(host.n())?;
        Some(count_parts(host, &label))
    }

    /// Checks all defining conditions against `host`.
    pub fn validate(&self, host: &Digraph) -> bool {
        match self.counts(host) {
            Some(c) => {
                c.within_y == 0 && c.r2_to_y == 0 && c.y_to_r1 == 0 && c.r2_to_r1 < self.y.len()
            }
            None => false,
        }
    }
}

fn count_parts(host: &Digraph, label: &[Part]) -> PartitionCounts {
    let mut c = PartitionCounts {
        within_y: 0,
        r2_to_y: 0,
        y_to_r1: 0,
        r2_to_r1: 0,
    };
    for a in host.arcs() {
        match (label[a.tail], label[a.head]) {
            (Part::Y, Part::Y) => c.within_y += 1,
            (Part::R2, Part::Y) => c.r2_to_y += 1,
            (Part::Y, Part::R1) => c.y_to_r1 += 1,
            (Part::R2, Part::R1) => c.r2_to_r1 += 1,
            _ => {}
        }
    }
    c
}

/// Either an eulerian factor or a partition proving none exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FactorOutcome {
    Factor(EulerianFactor),
    Obstruction(ObstructionPartition),
}

/// An edge of the circulation network with its flow bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundedEdge {
    pub from: usize,
    pub to: usize,
    pub lower: i64,
    pub upper: i64,
}

/// Circulation network on the split digraph of a host: node `v` is the in-part
/// `v⁻` and node `n + v` the out-part `v⁺`. Each `v⁻v⁺` has bounds `[1, n]`, and
/// each host arc `xy` yields `x⁺y⁻` with bounds `[0, 1]`. Integral feasible
/// circulations are exactly the eulerian factors of the host.
#[derive(Clone, Debug)]
pub struct CirculationNetwork {
    n: usize,
    arcs: Vec<Arc>,
}

/// Solution of a [`CirculationNetwork`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Circulation {
    /// Host arcs carrying one unit of flow.
    Feasible(Vec<Arc>),
    /// Node set `S` with `u(S̄, S) < l(S, S̄)`.
    Infeasible(Vec<bool>),
}

impl CirculationNetwork {
    pub fn new(host: &Digraph) -> Self {
        CirculationNetwork {
            n: host.n(),
            arcs: host.arcs().collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        2 * self.n
    }

    pub fn in_node(&self, v: Vertex) -> usize {
        v
    }

    pub fn out_node(&self, v: Vertex) -> usize {
        self.n + v
    }

    /// Split edges first, then one edge per host arc in arc order.
    pub fn edges(&self) -> Vec<BoundedEdge> {
        let split = (0..self.n).map(|v| BoundedEdge {
            from: self.in_node(v),
            to: self.out_node(v),
            lower: 1,
            upper: self.n as i64,
        });
        let arcs = self.arcs.iter().map(|a| BoundedEdge {
            from: self.out_node(a.tail),
            to: self.in_node(a.head),
            lower: 0,
            upper: 1,
        });
        split.chain(arcs).collect()
    }

    /// `l(S, S̄) - u(S̄, S)` for the node set marked in `s`; positive exactly
    /// when `s` violates the circulation condition.
    pub fn deficit(&self, s: &[bool]) -> i64 {
        let mut deficit = 0;
        for e in self.edges() {
            if s[e.from] && !s[e.to] {
                deficit += e.lower;
            }
            if !s[e.from] && s[e.to] {
                deficit -= e.upper;
            }
        }
        deficit
    }

    /// Reduces the lower bounds to a max-flow problem with a super source and sink.
    pub fn solve(&self) -> Circulation {
        let n = self.n;
        let (source, sink) = (2 * n, 2 * n + 1);
        let mut net = FlowNetwork::new(2 * n + 2);
        for v in 0..n {
            net.add_edge(self.in_node(v), self.out_node(v), n as i64 - 1);
        }
        let arc_ids: Vec<usize> = self
            .arcs
            .iter()
            .map(|a| net.add_edge(self.out_node(a.tail), self.in_node(a.head), 1))
            .collect();
        for v in 0..n {
            net.add_edge(source, self.out_node(v), 1);
            net.add_edge(self.in_node(v), sink, 1);
        }
        let pushed = net.max_flow(source, sink, n as i64);
        if pushed == n as i64 {
            let used = self
                .arcs
                .iter()
                .zip(arc_ids)
                .filter(|&(_, id)| net.flow(id) == 1)
                .map(|(&a, _)| a)
                .collect();
            Circulation::Feasible(used)
        } else {
            let reach = net.residual_reachable(source);
            Circulation::Infeasible((0..2 * n).map(|x| !reach[x]).collect())
        }
    }
}

fn check_avoid(d: &Digraph, avoid: &[Arc]) -> Result<()> {
    match avoid.iter().find(|a| !d.contains(**a)) {
        Some(a) => Err(Error::InvalidParameter(format!(
            "avoided arc {a} is not in the digraph"
        ))),
        None => Ok(()),
    }
}

/// Eulerian factor of `d` avoiding `avoid`, or an obstruction partition of
/// `d` minus `avoid` showing that none exists.
pub fn eulerian_factor(d: &Digraph, avoid: &[Arc]) -> Result<FactorOutcome> {
    check_avoid(d, avoid)?;
    let host = d.without_arcs(avoid);
    let net = CirculationNetwork::new(&host);
    Ok(match net.solve() {
        Circulation::Feasible(arcs) => {
            FactorOutcome::Factor(EulerianFactor::from_arcs(host.n(), arcs))
        }
        Circulation::Infeasible(s) => FactorOutcome::Obstruction(obstruction_from_cut(&host, &s)),
    })
}

/// Turns a violating node set of the circulation network into a valid
/// obstruction partition.
///
/// `x⁻ ∈ S, x⁺ ∉ S` puts `x` in `Y`, both in `S` puts it in `R1`, neither in
/// `R2`. The excess of `|Y|` over the arcs `R2 → R1 ∪ Y` and `Y → R1 ∪ Y` is
/// positive and never drops while a vertex of `Y` with an in-arc from `R2 ∪ Y`
/// moves to `R2`, or one with an out-arc to `R1 ∪ Y` moves to `R1`. Each move
/// shrinks `Y`, and when none applies the partition is an obstruction.
pub fn obstruction_from_cut(host: &Digraph, s: &[bool]) -> ObstructionPartition {
    let n = host.n();
    let mut label: Vec<Part> = (0..n)
        .map(|v| match (s[v], s[n + v]) {
            (true, false) => Part::Y,
            (true, true) => Part::R1,
            (false, false) => Part::R2,
            (false, true) => unreachable!("a violating set never separates v⁺ from v⁻ this way"),
        })
        .collect();
    let excess = |label: &[Part]| {
        let c = count_parts(host, label);
        let y = label.iter().filter(|&&p| p == Part::Y).count() as i64;
        y - (c.within_y + c.r2_to_y + c.y_to_r1 + c.r2_to_r1) as i64
    };
    debug_assert!(excess(&label) > 0);
    loop {
        let moved = (0..n).filter(|&v| label[v] == Part::Y).find_map(|y| {
            if host
                .in_neighbors(y)
                .any(|u| matches!(label[u], Part::R2 | Part::Y))
            {
                Some((y, Part::R2))
            } else if host
                .out_neighbors(y)
                .any(|w| matches!(label[w], Part::R1 | Part::Y))
            {
                Some((y, Part::R1))
            } else {
                None
            }
        });
        match moved {
            Some((y, part)) => {
                label[y] = part;
                debug_assert!(excess(&label) > 0);
            }
            None => break,
        }
    }
    let collect = |part: Part| (0..n).filter(|&v| label[v] == part).collect::<Vec<_>>();
    ObstructionPartition {
        r1: collect(Part::R1),
        r2: collect(Part::R2),
        y: collect(Part::Y),
    }
}

/// True when every avoid set of size at most `k` leaves an eulerian factor,
/// which holds as soon as `d` is `(k + 1)`-arc-strong.
pub fn factor_exists_guarantee(d: &Digraph, k: usize) -> bool {
    d.n() >= 2 && eulertrail_connectivity::arc_connectivity(d).lambda > k
}

#[cfg(test)]
mod tests {
    use super::*;
    use eulertrail_core::{gen_exceptional, EXCEPTIONAL_ARC};

    #[test]
    fn complete_four_has_factor() {
        let FactorOutcome::Factor(f) = eulerian_factor(&Digraph::complete(4), &[]).unwrap() else {
            panic!("expected a factor");
        };
        assert!(f.validate(&Digraph::complete(4)));
    }

    #[test]
    fn three_cycle_is_its_own_factor() {
        let d = Digraph::cycle(3);
        let FactorOutcome::Factor(f) = eulerian_factor(&d, &[]).unwrap() else {
            panic!("expected a factor");
        };
        assert_eq!(f.arcs, d.arcs().collect::<Vec<_>>());
        assert_eq!(f.components, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn exceptional_without_its_arc_is_obstructed() {
        let d = gen_exceptional(false);
        let FactorOutcome::Obstruction(p) = eulerian_factor(&d, &[EXCEPTIONAL_ARC]).unwrap() else {
            panic!("expected an obstruction");
        };
        assert_eq!(
            p,
            ObstructionPartition {
                r1: vec![2],
                r2: vec![1],
                y: vec![0, 3]
            }
        );
        assert!(p.validate(&d.without_arc(EXCEPTIONAL_ARC)));
    }

    #[test]
    fn avoid_must_be_arcs() {
        let d = Digraph::cycle(3);
        assert!(matches!(
            eulerian_factor(&d, &[Arc::new(1, 0)]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn single_vertex_has_no_factor() {
        let FactorOutcome::Obstruction(p) = eulerian_factor(&Digraph::new(1), &[]).unwrap() else {
            panic!("expected an obstruction");
        };
        assert_eq!(p.y, vec![0]);
    }
}
