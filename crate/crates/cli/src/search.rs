//! Randomized probe for arc sets that cannot be avoided in highly arc-strong
//! semicomplete digraphs.
//!
//! Instance `i` is drawn from the ChaCha stream `i` of the seed, so results do
//! not depend on the number of workers.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use eulertrail_connectivity::arc_connectivity;
use eulertrail_core::{random_semicomplete_with, seeded_rng, serialize_json, Arc, Digraph};
use eulertrail_factor::{spanning_eulerian_avoiding, AvoidMethod, AvoidOutcome};
use eulertrail_oracle::{find_spanning_eulerian, oracle_limit};

use crate::CliError;

/// Random semicomplete digraph on `n` vertices with `λ ≥ k`: a random draw whose
/// minimum cuts are raised by turning crossing-free pairs into arcs until none
/// is smaller than `k`. Requires `k < n`.
pub fn arc_strong_semicomplete<R: Rng>(rng: &mut R, n: usize, k: usize) -> Digraph {
    assert!(
        k < n,
        "arc-strong connectivity {k} needs more than {n} vertices"
    );
    let two_cycles = rng.gen_range(0.2..0.8);
    let mut d = random_semicomplete_with(rng, n, two_cycles);
    loop {
        let c = arc_connectivity(&d);
        let Some(cut) = c.cut.filter(|_| c.lambda < k) else {
            return d;
        };
        let missing: Vec<Arc> = cut
            .side_s
            .iter()
            .flat_map(|&s| cut.side_t.iter().map(move |&t| Arc::new(s, t)))
            .filter(|&a| !d.contains(a))
            .collect();
        let a = *missing
            .choose(rng)
            .expect("a cut below n - 1 misses some pair");
        d.add_arc(a.tail, a.head);
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub k: usize,
    /// Largest number of vertices; each instance draws its size from `k + 2..=n`.
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub jobs: usize,
}

/// An instance where neither the pipeline nor exhaustive search avoids the arcs.
#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub index: usize,
    pub digraph: serde_json::Value,
    pub avoid: Vec<Arc>,
    pub outcome: AvoidOutcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub k: usize,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub candidates: Vec<Candidate>,
    /// Instances beyond the oracle with no certificate, or with a certificate
    /// that failed validation.
    pub unknown: usize,
    /// Solved instances per method.
    pub methods: BTreeMap<String, usize>,
}

enum Trial {
    Solved(AvoidMethod),
    Unknown,
    Candidate(Candidate),
}

fn method_name(m: AvoidMethod) -> String {
    serde_json::to_value(m)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_else(|| format!("{m:?}"))
}

fn run_trial(config: &SearchConfig, index: usize) -> Result<Trial, CliError> {
    let mut rng = seeded_rng(config.seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(config.k + 2..=config.n);
    let d = arc_strong_semicomplete(&mut rng, n, config.k + 1);
    let mut arcs: Vec<Arc> = d.arcs().collect();
    arcs.shuffle(&mut rng);
    arcs.truncate(config.k);
    arcs.sort_unstable();
    let outcome = spanning_eulerian_avoiding(&d, &arcs)?;
    if let AvoidOutcome::Found { subdigraph, method } = &outcome {
        let valid = subdigraph.validate(&d) && arcs.iter().all(|&a| !subdigraph.contains(a));
        return Ok(if valid {
            Trial::Solved(*method)
        } else {
            Trial::Unknown
        });
    }
    if outcome.is_unknown() && n > oracle_limit() {
        return Ok(Trial::Unknown);
    }
    // An impossibility certificate is confirmed by search when it is affordable.
    if n <= oracle_limit() {
        if let Some(s) = find_spanning_eulerian(&d, &[], &arcs)? {
            if s.validate(&d) {
                return Ok(Trial::Solved(AvoidMethod::Oracle));
            }
        }
    }
    Ok(Trial::Candidate(Candidate {
        index,
        digraph: serde_json::from_str(&serialize_json(&d)).expect("valid JSON"),
        avoid: arcs,
        outcome,
    }))
}

/// Runs `config.trials` independent instances on `config.jobs` workers.
pub fn conjecture_search(config: &SearchConfig) -> Result<SearchReport, CliError> {
    if config.n < config.k + 2 {
        return Err(CliError::Input(format!(
            "--n must be at least k + 2 = {} for a {}-arc-strong digraph",
            config.k + 2,
            config.k + 1
        )));
    }
    if config.jobs == 0 {
        return Err(CliError::Input("--jobs must be positive".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CliError::Input(format!("worker pool: {e}")))?;
    let trials: Vec<Trial> = pool.install(|| {
        (0..config.trials)
            .into_par_iter()
            .map(|i| run_trial(config, i))
            .collect::<Result<_, _>>()
    })?;
    let mut report = SearchReport {
        k: config.k,
        n: config.n,
        trials: config.trials,
        seed: config.seed,
        candidates: Vec::new(),
        unknown: 0,
        methods: BTreeMap::new(),
    };
    for t in trials {
        match t {
            Trial::Solved(m) => *report.methods.entry(method_name(m)).or_default() += 1,
            Trial::Unknown => report.unknown += 1,
            Trial::Candidate(c) => report.candidates.push(c),
        }
    }
    Ok(report)
}
