//! Acceptance suite: one line per criterion, nonzero exit when any fails.
//!
//! Every verdict is checked against exhaustive search or by re-validating the
//! certificate, and every criterion runs under a wall-clock budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use eulertrail_classify::{classify_containment, classify_unavoidable, UnavoidTag};
use eulertrail_cli::{arc_strong_semicomplete, conjecture_search, SearchConfig};
use eulertrail_connectivity::{arc_disjoint_paths, is_strong, PathsOrCut};
use eulertrail_core::{
    gen_d3, gen_glued_tournament, random_semicomplete_with, seeded_rng, Arc, Digraph,
};
use eulertrail_decomposition::{
    natural_backward_ordering, nice_decomposition, verify_ordering, verify_structure,
};
use eulertrail_factor::{
    eulerian_factor, is_star_set, reduction_threshold, spanning_eulerian_avoiding,
    spanning_eulerian_via_reduction, AvoidOutcome, FactorOutcome,
};
use eulertrail_oracle::{
    enumerate_all_semicomplete, enumerate_all_tournaments, find_spanning_eulerian,
    oracle_eulerian_factor,
};
use eulertrail_trails::{spanning_trail, validate_trail};

/// Detail line on success, first failure on error.
type Check = Result<String, String>;

fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

/// Strong semicomplete digraphs on four vertices and strong tournaments on five.
fn small_instances() -> Vec<Digraph> {
    let four = enumerate_all_semicomplete(4).expect("small n");
    let five = enumerate_all_tournaments(5).expect("small n");
    four.chain(five).filter(is_strong).collect()
}

/// Every failure message across `items`, or the number of checks on success.
fn collect<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Vec<String> + Sync,
) -> Result<usize, String> {
    let failures: Vec<String> = items.par_iter().flat_map_iter(&check).collect();
    match failures.first() {
        None => Ok(items.len()),
        Some(f) => Err(format!("{} failure(s), first: {f}", failures.len())),
    }
}

fn containment_matches_oracle() -> Check {
    let ds = small_instances();
    let arcs: usize = ds.iter().map(Digraph::arc_count).sum();
    collect(&ds, |d| {
        d.arcs()
            .filter_map(|a| {
                let c = match classify_containment(d, a) {
                    Ok(c) => c,
                    Err(e) => return Some(format!("{a} in {d:?}: {e}")),
                };
                let truth = find_spanning_eulerian(d, &[a], &[])
                    .expect("oracle")
                    .is_some();
                (c.is_good() != truth || !c.validate(d))
                    .then(|| format!("{a} in {d:?}: {:?}", c.tag))
            })
            .collect()
    })?;
    Ok(format!("{} digraphs, {arcs} arcs", ds.len()))
}

fn unavoidability_matches_oracle() -> Check {
    let ds = small_instances();
    let mut unavoidable = 0;
    for d in &ds {
        unavoidable += d
            .arcs()
            .filter(|&a| find_spanning_eulerian(d, &[], &[a]).unwrap().is_none())
            .count();
    }
    collect(&ds, |d| {
        d.arcs()
            .filter_map(|a| {
                let u = match classify_unavoidable(d, a) {
                    Ok(u) => u,
                    Err(e) => return Some(format!("{a} in {d:?}: {e}")),
                };
                let truth = find_spanning_eulerian(d, &[], &[a])
                    .expect("oracle")
                    .is_none();
                let labels_ok = match u.tag {
                    UnavoidTag::Avoidable => u.labels.is_empty(),
                    UnavoidTag::CutArc => u.labels.first() == Some(&UnavoidTag::CutArc),
                    tag => u.labels == [tag],
                };
                (u.is_unavoidable() != truth || !u.validate(d) || !labels_ok)
                    .then(|| format!("{a} in {d:?}: {:?} {:?}", u.tag, u.labels))
            })
            .collect()
    })?;
    Ok(format!(
        "{} digraphs, {unavoidable} unavoidable arcs",
        ds.len()
    ))
}

/// Failure message for `(x, y)` when a spanning trail is expected but the
/// constructed one is missing or breaks a property.
fn trail_failure(d: &Digraph, x: usize, y: usize) -> Option<String> {
    let t = match spanning_trail(d, x, y) {
        Ok(t) => t,
        Err(e) => return Some(format!("({x},{y}) in {d:?}: {e}")),
    };
    let arcs = t.arcs();
    let mut out = vec![0; d.n()];
    for a in &arcs {
        out[a.tail] += 1;
    }
    let ok = validate_trail(d, &t, x, y, true)
        && !arcs.contains(&Arc::new(y, x))
        && out.iter().all(|&k| k <= 2);
    (!ok).then(|| format!("({x},{y}) in {d:?}: invalid trail {:?}", t.vertices))
}

fn has_two_paths(d: &Digraph, x: usize, y: usize) -> bool {
    matches!(arc_disjoint_paths(d, x, y, 2), Ok(PathsOrCut::Paths(_)))
}

fn random_strong(n: usize, seed: u64) -> Digraph {
    let mut rng = seeded_rng(seed);
    loop {
        let p = rng.gen_range(0.0..0.6);
        let d = random_semicomplete_with(&mut rng, n, p);
        if is_strong(&d) {
            return d;
        }
    }
}

fn trails_between_two_path_pairs() -> Check {
    let mut ds: Vec<Digraph> = (2..=5)
        .flat_map(|n| enumerate_all_tournaments(n).expect("small n"))
        .filter(is_strong)
        .collect();
    ds.extend((0..1000u64).map(|i| random_strong(6 + (i % 3) as usize, 3000 + i)));
    let pairs: usize = ds
        .iter()
        .map(|d| {
            (0..d.n())
                .flat_map(|x| (0..d.n()).map(move |y| (x, y)))
                .filter(|&(x, y)| x != y && has_two_paths(d, x, y))
                .count()
        })
        .sum();
    collect(&ds, |d| {
        let n = d.n();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && has_two_paths(d, x, y))
            .filter_map(|(x, y)| trail_failure(d, x, y))
            .collect()
    })?;
    Ok(format!("{} digraphs, {pairs} pairs", ds.len()))
}

fn two_arc_strong_witnesses() -> Check {
    let ds: Vec<Digraph> = (0..500u64)
        .map(|i| {
            let mut rng = seeded_rng(4000 + i);
            let n = rng.gen_range(4..=30);
            arc_strong_semicomplete(&mut rng, n, 2)
        })
        .collect();
    collect(&ds, |d| {
        let n = d.n();
        let mut fails: Vec<String> = d
            .arcs()
            .filter_map(|a| match classify_containment(d, a) {
                Ok(c) if c.is_good() && c.validate(d) => None,
                Ok(c) => Some(format!("{a} in {d:?}: {:?}", c.tag)),
                Err(e) => Some(format!("{a} in {d:?}: {e}")),
            })
            .collect();
        fails.extend(
            (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .filter(|&(x, y)| x != y)
                .filter_map(|(x, y)| trail_failure(d, x, y)),
        );
        fails
    })?;
    let n_max = ds.iter().map(Digraph::n).max().unwrap_or(0);
    Ok(format!("{} digraphs up to {n_max} vertices", ds.len()))
}

fn factor_certificates() -> Check {
    let cases: Vec<(Digraph, Vec<Arc>)> = (0..2000u64)
        .map(|i| {
            let mut rng = seeded_rng(5000 + i);
            let n = rng.gen_range(2..=8);
            let p = rng.gen_range(0.0..0.5);
            let d = random_semicomplete_with(&mut rng, n, p);
            let mut f: Vec<Arc> = d.arcs().collect();
            f.shuffle(&mut rng);
            f.truncate(rng.gen_range(0..=4));
            (d, f)
        })
        .collect();
    let obstructions = cases
        .iter()
        .filter(|(d, f)| matches!(eulerian_factor(d, f), Ok(FactorOutcome::Obstruction(_))))
        .count();
    collect(&cases, |(d, f)| {
        let host = d.without_arcs(f.iter());
        let truth = oracle_eulerian_factor(d, f).expect("oracle");
        let ok = match eulerian_factor(d, f) {
            Ok(FactorOutcome::Factor(h)) => truth && h.validate(&host),
            Ok(FactorOutcome::Obstruction(p)) => {
                let c = p.counts(&host);
                !truth
                    && c.is_some_and(|c| {
                        c.within_y == 0
                            && c.r2_to_y == 0
                            && c.y_to_r1 == 0
                            && c.r2_to_r1 < p.y.len()
                    })
            }
            Err(_) => false,
        };
        if ok {
            vec![]
        } else {
            vec![format!("{d:?} avoiding {f:?}")]
        }
    })?;
    Ok(format!(
        "{} instances, {obstructions} obstructions",
        cases.len()
    ))
}

/// `k` arcs of `d` whose underlying graph is a star forest.
fn star_set<R: Rng>(rng: &mut R, d: &Digraph, k: usize) -> Vec<Arc> {
    let mut all: Vec<Arc> = d.arcs().collect();
    all.shuffle(rng);
    let mut f: Vec<Arc> = Vec::new();
    for a in all {
        if f.len() == k {
            break;
        }
        f.push(a);
        if !is_star_set(d, &f).expect("arcs of d") {
            f.pop();
        }
    }
    f
}

fn avoidance_regimes() -> Check {
    // (lambda, |f|, star-set only)
    let regimes = [
        (2, 1, false),
        (3, 2, false),
        (4, 3, false),
        (5, 4, true),
        (6, 5, true),
    ];
    let mut cases = Vec::new();
    for (r, &(lambda, k, star)) in regimes.iter().enumerate() {
        for i in 0..500u64 {
            let mut rng = seeded_rng(6000 + 1000 * r as u64 + i);
            let n = rng.gen_range(lambda + 1..=lambda + 9);
            let d = arc_strong_semicomplete(&mut rng, n, lambda);
            let f = if star {
                star_set(&mut rng, &d, k)
            } else {
                let mut all: Vec<Arc> = d.arcs().collect();
                all.shuffle(&mut rng);
                all.truncate(k);
                all
            };
            cases.push((d, f, k));
        }
    }
    collect(&cases, |(d, f, k)| {
        let ok = f.len() == *k
            && match spanning_eulerian_avoiding(d, f) {
                Ok(AvoidOutcome::Found { subdigraph, .. }) => {
                    subdigraph.validate(d) && f.iter().all(|&a| !subdigraph.contains(a))
                }
                _ => false,
            };
        if ok {
            vec![]
        } else {
            vec![format!("{d:?} avoiding {f:?}")]
        }
    })?;
    Ok(format!(
        "{} instances over {} regimes",
        cases.len(),
        regimes.len()
    ))
}

fn reduction_path() -> Check {
    let mut cases = Vec::new();
    for k in [4usize, 5] {
        let lambda = reduction_threshold(k);
        for i in 0..100u64 {
            let mut rng = seeded_rng(9000 + 100 * k as u64 + i);
            let n = rng.gen_range(lambda + 1..=lambda + 6);
            let d = arc_strong_semicomplete(&mut rng, n, lambda);
            let mut f: Vec<Arc> = d.arcs().collect();
            f.shuffle(&mut rng);
            f.truncate(k);
            cases.push((d, f));
        }
    }
    collect(&cases, |(d, f)| {
        let ok = matches!(
            spanning_eulerian_via_reduction(d, f),
            Ok(Some(s)) if s.validate(d) && f.iter().all(|&a| !s.contains(a))
        );
        if ok {
            vec![]
        } else {
            vec![format!("{d:?} avoiding {f:?}")]
        }
    })?;
    Ok(format!("{} instances with k = 4, 5", cases.len()))
}

fn glued_tournament_arc() -> Check {
    let (d, xz) = gen_glued_tournament(3, 3, 1, 2).map_err(|e| e.to_string())?;
    let c = classify_containment(&d, xz).map_err(|e| e.to_string())?;
    let oracle = find_spanning_eulerian(&d, &[xz], &[]).map_err(|e| e.to_string())?;
    match (c.is_good(), oracle) {
        (false, None) => Ok(format!(
            "arc {xz} on {} vertices is bad ({:?})",
            d.n(),
            c.tag
        )),
        (good, found) => Err(format!("good = {good}, oracle found = {}", found.is_some())),
    }
}

fn d3_single_bad_arc() -> Check {
    let d = gen_d3();
    let zy = Arc::new(2, 1);
    let mut bad = Vec::new();
    for a in d.arcs() {
        let c = classify_containment(&d, a).map_err(|e| e.to_string())?;
        let truth = find_spanning_eulerian(&d, &[a], &[])
            .map_err(|e| e.to_string())?
            .is_some();
        if c.is_good() != truth || !c.validate(&d) {
            return Err(format!("arc {a}: {:?} against oracle {truth}", c.tag));
        }
        if !c.is_good() {
            bad.push(a);
        }
    }
    if bad == [zy] {
        Ok(format!("only {zy} is bad; {} witnesses", d.arc_count() - 1))
    } else {
        Err(format!("bad arcs {bad:?}"))
    }
}

fn decomposition_structure() -> Check {
    let ds = small_instances();
    collect(&ds, |d| {
        let dec = match nice_decomposition(d) {
            Ok(dec) => dec,
            Err(e) => return vec![format!("{d:?}: {e}")],
        };
        let mut v = verify_structure(d, &dec);
        match natural_backward_ordering(d, &dec) {
            Ok(ord) => v.extend(verify_ordering(d, &dec, &ord)),
            Err(e) => return vec![format!("{d:?}: {e}")],
        }
        v.into_iter().map(|x| format!("{d:?}: {x:?}")).collect()
    })?;
    Ok(format!("{} decompositions", ds.len()))
}

fn conjecture_probe() -> Check {
    let config = SearchConfig {
        k: 4,
        n: 8,
        trials: 10_000,
        seed: 2024,
        jobs: rayon::current_num_threads(),
    };
    let report = conjecture_search(&config).map_err(|e| e.to_string())?;
    if report.candidates.is_empty() {
        Ok(format!(
            "{} trials, {} unknown, methods {:?}",
            report.trials, report.unknown, report.methods
        ))
    } else {
        Err(format!(
            "{} candidate(s), first {:?}",
            report.candidates.len(),
            report.candidates[0]
        ))
    }
}

/// Name, check and wall-clock budget.
type Criterion = (&'static str, fn() -> Check, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "containment verdicts match the oracle",
            containment_matches_oracle,
            minutes(2),
        ),
        (
            "unavoidability verdicts match the oracle",
            unavoidability_matches_oracle,
            minutes(5),
        ),
        (
            "spanning trails for pairs with two arc-disjoint paths",
            trails_between_two_path_pairs,
            minutes(5),
        ),
        (
            "two-arc-strong digraphs: every arc good, every pair joined",
            two_arc_strong_witnesses,
            minutes(5),
        ),
        (
            "eulerian factor outcomes match the oracle",
            factor_certificates,
            minutes(3),
        ),
        (
            "avoidance in the guaranteed regimes",
            avoidance_regimes,
            minutes(10),
        ),
        (
            "multipartite reduction above its threshold",
            reduction_path,
            minutes(10),
        ),
        (
            "glued tournament arc is bad",
            glued_tournament_arc,
            minutes(1),
        ),
        (
            "three-vertex digraph has exactly one bad arc",
            d3_single_bad_arc,
            minutes(1),
        ),
        (
            "decomposition structure and ordering",
            decomposition_structure,
            minutes(5),
        ),
        (
            "random search finds no unavoidable four-arc set",
            conjecture_probe,
            minutes(30),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > *budget => Err(format!("{detail}; over budget of {budget:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} [{elapsed:.1?}]",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL  {name}: {detail} [{elapsed:.1?}]",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
