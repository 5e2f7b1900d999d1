use std::collections::BTreeSet;

use eulertrail_connectivity::{arc_connectivity, arc_disjoint_paths, is_strong, PathsOrCut};
use eulertrail_core::{gen_random_semicomplete, Arc, Digraph};
use eulertrail_oracle::{enumerate_all_semicomplete, enumerate_all_tournaments};
use eulertrail_trails::{
    eulerian_through_arc, is_eulerian_connected, spanning_trail, spanning_trail_by_oracle,
    spanning_trail_traced, validate_trail, Branch, EulerianConnectivity, TrailError,
};
use proptest::prelude::*;

fn out_degrees(n: usize, arcs: &[Arc]) -> Vec<usize> {
    let mut out = vec![0; n];
    for a in arcs {
        out[a.tail] += 1;
    }
    out
}

/// Runs every pair of `d` with two arc-disjoint paths and records the cases used.
fn check_all_pairs(d: &Digraph, seen: &mut BTreeSet<Branch>) {
    let n = d.n();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let two = matches!(
                arc_disjoint_paths(d, x, y, 2).unwrap(),
                PathsOrCut::Paths(_)
            );
            match spanning_trail_traced(d, x, y) {
                Ok((t, branches)) => {
                    assert!(two);
                    assert!(validate_trail(d, &t, x, y, true), "{d:?} {x} {y} {t:?}");
                    let arcs = t.arcs();
                    assert!(!arcs.contains(&Arc::new(y, x)));
                    assert!(out_degrees(n, &arcs).into_iter().all(|k| k <= 2));
                    seen.extend(branches);
                }
                Err(TrailError::NoTwoPaths(cut)) => {
                    assert!(!two);
                    assert!(cut.validate(d) && cut.crossing_arcs.len() < 2);
                }
                Err(e) => panic!("{d:?} ({x}, {y}): {e}"),
            }
        }
    }
}

#[test]
fn exhaustive_tournaments_up_to_six() {
    let mut seen = BTreeSet::new();
    for n in 3..=6 {
        for d in enumerate_all_tournaments(n).unwrap().filter(is_strong) {
            check_all_pairs(&d, &mut seen);
        }
    }
    assert!(seen.len() >= 3, "{seen:?}");
}

#[test]
fn exhaustive_semicomplete_up_to_five() {
    let mut seen = BTreeSet::new();
    for n in 2..=5 {
        for d in enumerate_all_semicomplete(n).unwrap().filter(is_strong) {
            check_all_pairs(&d, &mut seen);
        }
    }
    let all = BTreeSet::from([
        Branch::CycleMinusBackArc,
        Branch::PathPlusCycle,
        Branch::TerminalSide,
        Branch::InitialSide,
    ]);
    assert_eq!(seen, all);
}

#[test]
fn direct_arc_with_strong_remainder_uses_cycle() {
    // x -> y with D - yx strong: P1 = xy plus a cycle through the other vertices and x.
    let d = Digraph::complete(5);
    let (t, branches) = spanning_trail_traced(&d, 0, 1).unwrap();
    assert!(validate_trail(&d, &t, 0, 1, true));
    assert!(branches.contains(&Branch::PathPlusCycle));
    assert_eq!(t.arcs()[t.arcs().len() - 1].head, 1);
}

#[test]
fn oracle_trails_agree_with_construction() {
    for d in enumerate_all_tournaments(5).unwrap().filter(is_strong) {
        for x in 0..5 {
            for y in 0..5 {
                if x == y {
                    continue;
                }
                let oracle = spanning_trail_by_oracle(&d, x, y).unwrap();
                if let Ok(t) = spanning_trail(&d, x, y) {
                    assert!(oracle.is_ok());
                    assert!(validate_trail(&d, &t, x, y, true));
                }
                if let Ok(t) = oracle {
                    assert!(validate_trail(&d, &t, x, y, true));
                }
            }
        }
    }
}

#[test]
fn eulerian_connectivity_matches_oracle_on_small_tournaments() {
    for d in enumerate_all_tournaments(5).unwrap().filter(is_strong) {
        let verdict = is_eulerian_connected(&d);
        let by_oracle = (0..5)
            .all(|x| (0..5).all(|y| x == y || spanning_trail_by_oracle(&d, x, y).unwrap().is_ok()));
        assert_eq!(verdict.is_connected(), by_oracle);
        assert!(!matches!(verdict, EulerianConnectivity::Unknown { .. }));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn sampled_semicomplete_pairs(n in 3usize..16, p in 0.0f64..0.7, seed: u64) {
        let d = gen_random_semicomplete(n, p, seed);
        prop_assume!(is_strong(&d));
        let mut seen = BTreeSet::new();
        check_all_pairs(&d, &mut seen);
    }

    #[test]
    fn two_arc_strong_contains_every_arc(n in 3usize..14, p in 0.2f64..0.9, seed: u64) {
        let d = gen_random_semicomplete(n, p, seed);
        prop_assume!(arc_connectivity(&d).lambda >= 2);
        for uv in d.arcs() {
            let arcs = eulerian_through_arc(&d, uv).unwrap();
            prop_assert!(eulertrail_core::is_spanning_eulerian(&d, &arcs));
            prop_assert!(arcs.contains(&uv));
        }
        prop_assert!(is_eulerian_connected(&d).is_connected());
    }
}
