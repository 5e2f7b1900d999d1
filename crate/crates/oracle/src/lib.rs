//! Brute-force ground truth for eulerian subdigraph questions on small digraphs.
//!
//! Two engines: plain subset enumeration for at most [`SUBSET_ARC_LIMIT`] candidate
//! arcs, and a depth-first search over arcs in `(tail, head)` order that prunes on
//! degree feasibility and on strongness of the arcs still available. The pruned
//! engine serves digraphs up to [`oracle_limit`] vertices.

use eulertrail_core::{
    is_eulerian_factor, is_spanning_eulerian, Arc, Digraph, Error, EulerianSubdigraph, Result,
};

/// Largest number of candidate arcs the subset engine accepts.
pub const SUBSET_ARC_LIMIT: usize = 24;

/// Default vertex limit of the pruned engine.
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

/// Vertex limit of the pruned engine: `EULERTRAIL_ORACLE_LIMIT` when set to a
/// positive integer, [`DEFAULT_ORACLE_LIMIT`] otherwise.
pub fn oracle_limit() -> usize {
    std::env::var("EULERTRAIL_ORACLE_LIMIT")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&k| k > 0)
        .unwrap_or(DEFAULT_ORACLE_LIMIT)
}

/// What a solution must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Spanning, balanced and connected.
    SpanningEulerian,
    /// Every vertex balanced with positive degree; connectivity not required.
    EulerianFactor,
}

impl Target {
    fn accepts(self, d: &Digraph, arcs: &[Arc]) -> bool {
        match self {
            Target::SpanningEulerian => is_spanning_eulerian(d, arcs),
            Target::EulerianFactor => is_eulerian_factor(d, arcs),
        }
    }
}

fn check_subset(d: &Digraph, arcs: &[Arc], what: &str) -> Result<()> {
    match arcs.iter().find(|a| !d.contains(**a)) {
        Some(a) => Err(Error::InvalidParameter(format!(
            "{what} arc {a} is not in the digraph"
        ))),
        None => Ok(()),
    }
}

/// Subsets of `A(d)` meeting `target`, containing `must_contain` and disjoint from
/// `must_avoid`, in the pruned engine's order. At most `limit` are returned.
pub fn search(
    d: &Digraph,
    target: Target,
    must_contain: &[Arc],
    must_avoid: &[Arc],
    limit: Option<usize>,
) -> Result<Vec<EulerianSubdigraph>> {
    check_subset(d, must_contain, "required")?;
    check_subset(d, must_avoid, "avoided")?;
    if must_contain.iter().any(|a| must_avoid.contains(a)) {
        return Ok(Vec::new());
    }
    let cap = oracle_limit();
    if d.n() > cap {
        return Err(Error::TooLarge(format!(
            "oracle handles at most {cap} vertices (got {})",
            d.n()
        )));
    }
    let mut dfs = Dfs::new(
        d,
        target,
        must_contain,
        must_avoid,
        limit.unwrap_or(usize::MAX),
    );
    dfs.run();
    Ok(dfs.found)
}

/// All spanning eulerian subdigraphs under the constraints (first `limit` if given).
pub fn enumerate_spanning_eulerian(
    d: &Digraph,
    must_contain: &[Arc],
    must_avoid: &[Arc],
    limit: Option<usize>,
) -> Result<Vec<EulerianSubdigraph>> {
    search(d, Target::SpanningEulerian, must_contain, must_avoid, limit)
}

/// Some spanning eulerian subdigraph under the constraints.
pub fn find_spanning_eulerian(
    d: &Digraph,
    must_contain: &[Arc],
    must_avoid: &[Arc],
) -> Result<Option<EulerianSubdigraph>> {
    Ok(enumerate_spanning_eulerian(d, must_contain, must_avoid, Some(1))?.pop())
}

/// Some eulerian factor of `d` avoiding `avoid`.
pub fn find_eulerian_factor(d: &Digraph, avoid: &[Arc]) -> Result<Option<EulerianSubdigraph>> {
    Ok(search(d, Target::EulerianFactor, &[], avoid, Some(1))?.pop())
}

/// Whether `d` has an eulerian factor avoiding `avoid`.
pub fn oracle_eulerian_factor(d: &Digraph, avoid: &[Arc]) -> Result<bool> {
    Ok(find_eulerian_factor(d, avoid)?.is_some())
}

/// Plain subset enumeration; independent of the pruned engine and used to cross-check it.
pub fn enumerate_by_subsets(
    d: &Digraph,
    target: Target,
    must_contain: &[Arc],
    must_avoid: &[Arc],
) -> Result<Vec<EulerianSubdigraph>> {
    check_subset(d, must_contain, "required")?;
    check_subset(d, must_avoid, "avoided")?;
    let free: Vec<Arc> = d
        .arcs()
        .filter(|a| !must_contain.contains(a) && !must_avoid.contains(a))
        .collect();
    if free.len() > SUBSET_ARC_LIMIT {
        return Err(Error::TooLarge(format!(
            "subset enumeration handles at most {SUBSET_ARC_LIMIT} free arcs (got {})",
            free.len()
        )));
    }
    if must_contain.iter().any(|a| must_avoid.contains(a)) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << free.len()) {
        let mut arcs: Vec<Arc> = must_contain.to_vec();
        arcs.extend(
            (0..free.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| free[i]),
        );
        if target.accepts(d, &arcs) {
            out.push(EulerianSubdigraph::new(arcs));
        }
    }
    out.sort_by(|a, b| a.arcs.cmp(&b.arcs));
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Undecided,
    In,
    Out,
}

struct Dfs<'a> {
    d: &'a Digraph,
    target: Target,
    arcs: Vec<Arc>,
    state: Vec<State>,
    /// Indices of arcs the search branches on, in `(tail, head)` order.
    order: Vec<usize>,
    out_in: Vec<usize>,
    in_in: Vec<usize>,
    out_open: Vec<usize>,
    in_open: Vec<usize>,
    limit: usize,
    found: Vec<EulerianSubdigraph>,
}

impl<'a> Dfs<'a> {
    fn new(
        d: &'a Digraph,
        target: Target,
        must_contain: &[Arc],
        must_avoid: &[Arc],
        limit: usize,
    ) -> Self {
        let n = d.n();
        let arcs: Vec<Arc> = d.arcs().collect();
        let mut dfs = Dfs {
            d,
            target,
            state: vec![State::Undecided; arcs.len()],
            order: Vec::new(),
            out_in: vec![0; n],
            in_in: vec![0; n],
            out_open: vec![0; n],
            in_open: vec![0; n],
            limit,
            found: Vec::new(),
            arcs,
        };
        for (i, a) in dfs.arcs.iter().enumerate() {
            if must_contain.contains(a) {
                dfs.state[i] = State::In;
                dfs.out_in[a.tail] += 1;
                dfs.in_in[a.head] += 1;
            } else if must_avoid.contains(a) {
                dfs.state[i] = State::Out;
            } else {
                dfs.order.push(i);
                dfs.out_open[a.tail] += 1;
                dfs.in_open[a.head] += 1;
            }
        }
        dfs
    }

    fn run(&mut self) {
        let n = self.d.n();
        if n <= 1 {
            // The empty arc set is the only candidate.
            if self.target.accepts(self.d, &[]) && self.order.is_empty() {
                self.found.push(EulerianSubdigraph::new(Vec::new()));
            }
            return;
        }
        if (0..n).all(|v| self.degree_ok(v)) && self.available_ok() {
            self.branch(0);
        }
    }

    /// Some common value `b >= 1` is reachable for the in- and out-degree of `v`.
    fn degree_ok(&self, v: usize) -> bool {
        let lo = self.out_in[v].max(self.in_in[v]).max(1);
        lo <= self.out_in[v] + self.out_open[v] && lo <= self.in_in[v] + self.in_open[v]
    }

    /// Chosen and undecided arcs can still host a solution: one strong component for
    /// spanning targets, no trivial component and no chosen arc between components
    /// for factors.
    fn available_ok(&self) -> bool {
        let n = self.d.n();
        let mut avail = Digraph::new(n);
        for (i, a) in self.arcs.iter().enumerate() {
            if self.state[i] != State::Out {
                avail.add_arc(a.tail, a.head);
            }
        }
        let comps = scc_labels(&avail);
        match self.target {
            Target::SpanningEulerian => comps.iter().all(|&c| c == comps[0]),
            Target::EulerianFactor => {
                let mut size = vec![0usize; n];
                for &c in &comps {
                    size[c] += 1;
                }
                comps.iter().all(|&c| size[c] >= 2)
                    && self
                        .arcs
                        .iter()
                        .enumerate()
                        .all(|(i, a)| self.state[i] != State::In || comps[a.tail] == comps[a.head])
            }
        }
    }

    fn branch(&mut self, depth: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            let chosen: Vec<Arc> = self
                .arcs
                .iter()
                .enumerate()
                .filter(|&(i, _)| self.state[i] == State::In)
                .map(|(_, &a)| a)
                .collect();
            if self.target.accepts(self.d, &chosen) {
                self.found.push(EulerianSubdigraph::new(chosen));
            }
            return;
        }
        let i = self.order[depth];
        let a = self.arcs[i];
        self.out_open[a.tail] -= 1;
        self.in_open[a.head] -= 1;

        self.state[i] = State::In;
        self.out_in[a.tail] += 1;
        self.in_in[a.head] += 1;
        if self.degree_ok(a.tail) && self.degree_ok(a.head) {
            self.branch(depth + 1);
        }
        self.out_in[a.tail] -= 1;
        self.in_in[a.head] -= 1;

        self.state[i] = State::Out;
        if self.degree_ok(a.tail) && self.degree_ok(a.head) && self.available_ok() {
            self.branch(depth + 1);
        }

        self.state[i] = State::Undecided;
        self.out_open[a.tail] += 1;
        self.in_open[a.head] += 1;
    }
}

/// Strong component label of each vertex (labels are arbitrary but consistent).
fn scc_labels(d: &Digraph) -> Vec<usize> {
    let n = d.n();
    let reach = |start: usize, reverse: bool| {
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                let arc = if reverse {
                    d.has_arc(v, u)
                } else {
                    d.has_arc(u, v)
                };
                if arc && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    };
    let mut label = vec![usize::MAX; n];
    for v in 0..n {
        if label[v] != usize::MAX {
            continue;
        }
        let (fwd, bwd) = (reach(v, false), reach(v, true));
        for w in 0..n {
            if fwd[w] && bwd[w] {
                label[w] = v;
            }
        }
    }
    label
}

/// Number of unordered pairs of `0..n`, the exponent of the enumerators.
fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every labeled tournament on `0..n`, `n <= 6`. Bit `k` of the counter orients the
/// `k`-th pair `(u, v)`, `u < v`, in lexicographic order: set means `u -> v`.
pub fn enumerate_all_tournaments(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n > 6 {
        return Err(Error::TooLarge(format!(
            "tournament sweep limited to n <= 6 (got {n})"
        )));
    }
    let ps = pairs(n);
    Ok((0u64..1u64 << pair_count(n)).map(move |mask| {
        let mut d = Digraph::new(n);
        for (k, &(u, v)) in ps.iter().enumerate() {
            if mask >> k & 1 == 1 {
                d.add_arc(u, v);
            } else {
                d.add_arc(v, u);
            }
        }
        d
    }))
}

/// Every labeled semicomplete digraph on `0..n`, `n <= 5`. Base-3 digit `k` of the
/// counter sets the `k`-th pair to `u -> v` (0), `v -> u` (1) or both (2).
pub fn enumerate_all_semicomplete(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n > 5 {
        return Err(Error::TooLarge(format!(
            "semicomplete sweep limited to n <= 5 (got {n})"
        )));
    }
    let ps = pairs(n);
    let total = 3u64.pow(pair_count(n) as u32);
    Ok((0..total).map(move |mut code| {
        let mut d = Digraph::new(n);
        for &(u, v) in &ps {
            match code % 3 {
                0 => d.add_arc(u, v),
                1 => d.add_arc(v, u),
                _ => {
                    d.add_arc(u, v);
                    d.add_arc(v, u);
                }
            }
            code /= 3;
        }
        d
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use eulertrail_core::{gen_d3, gen_exceptional, EXCEPTIONAL_ARC};

    #[test]
    fn d3_has_one_spanning_eulerian_subdigraph() {
        let found = enumerate_spanning_eulerian(&gen_d3(), &[], &[], None).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(
            found[0].arcs,
            vec![Arc::new(0, 1), Arc::new(1, 2), Arc::new(2, 0)]
        );
    }

    #[test]
    fn cycle_is_its_own_witness() {
        let found = enumerate_spanning_eulerian(&Digraph::cycle(3), &[], &[], None).unwrap();
        assert_eq!(found.len(), 1);
        assert!(oracle_eulerian_factor(&Digraph::cycle(3), &[]).unwrap());
    }

    #[test]
    fn exceptional_arc_is_unavoidable() {
        for with_cb in [false, true] {
            let d = gen_exceptional(with_cb);
            assert!(
                enumerate_spanning_eulerian(&d, &[], &[EXCEPTIONAL_ARC], None)
                    .unwrap()
                    .is_empty()
            );
            assert!(!oracle_eulerian_factor(&d, &[EXCEPTIONAL_ARC]).unwrap());
        }
    }

    #[test]
    fn enumerator_counts() {
        assert_eq!(enumerate_all_tournaments(3).unwrap().count(), 8);
        assert_eq!(enumerate_all_tournaments(5).unwrap().count(), 1024);
        assert_eq!(enumerate_all_semicomplete(4).unwrap().count(), 729);
        assert!(enumerate_all_semicomplete(6).is_err());
    }

    #[test]
    fn bad_arguments() {
        let d = Digraph::cycle(3);
        assert!(find_spanning_eulerian(&d, &[Arc::new(1, 0)], &[]).is_err());
        assert!(find_spanning_eulerian(&Digraph::complete(11), &[], &[]).is_err());
    }
}
