use std::collections::BTreeSet;

use eulertrail_connectivity::{cut_arcs, is_strong};
use eulertrail_core::{gen_random_semicomplete, Arc, Digraph};
use eulertrail_decomposition::{
    ignored_sets, natural_backward_ordering, nice_decomposition, one_decomposition,
    verify_ordering, verify_structure,
};
use proptest::prelude::*;

/// Sets of sizes `sizes` laid out left to right, each a complete digraph, all
/// forward arcs between different sets, plus the listed backward arcs given as
/// `(set, slot) -> (set, slot)` with 1-based set indices.
fn layered(
    sizes: &[usize],
    backward: &[((usize, usize), (usize, usize))],
) -> (Digraph, Vec<Vec<usize>>) {
    let mut sets = Vec::new();
    let mut next = 0;
    for &k in sizes {
        sets.push((next..next + k).collect::<Vec<_>>());
        next += k;
    }
    let mut d = Digraph::new(next);
    for (i, a) in sets.iter().enumerate() {
        for &u in a {
            for &v in a {
                if u != v {
                    d.add_arc(u, v);
                }
            }
            for b in &sets[i + 1..] {
                for &v in b {
                    d.add_arc(u, v);
                }
            }
        }
    }
    for &((si, sk), (ti, tk)) in backward {
        let (u, v) = (sets[si - 1][sk], sets[ti - 1][tk]);
        d.remove_arc(v, u);
        d.add_arc(u, v);
    }
    (d, sets)
}

#[test]
fn three_backward_arcs_ignore_four_sets() {
    // s1 in S10 -> t1 in S6, s2 in S8 -> t2 in S4, s3 in S4 -> t3 in S1, with t2 != s3.
    let (d, sets) = layered(
        &[3; 10],
        &[((10, 0), (6, 0)), ((8, 0), (4, 0)), ((4, 1), (1, 0))],
    );
    let dec = nice_decomposition(&d).unwrap();
    assert_eq!(dec.sets(), sets.as_slice());
    let ord = natural_backward_ordering(&d, &dec).unwrap();
    assert_eq!(ord.r(), 3);
    assert_eq!(ord.arcs[0], Arc::new(sets[9][0], sets[5][0]));
    assert_eq!(ignored_sets(&dec, &ord), BTreeSet::from([2, 3, 5, 9]));
    assert!(verify_structure(&d, &dec).is_empty());
    assert!(verify_ordering(&d, &dec, &ord).is_empty());
}

#[test]
fn single_spanning_backward_arc_ignores_the_middle() {
    let (d, _) = layered(&[3, 3, 3], &[((3, 0), (1, 0))]);
    let dec = nice_decomposition(&d).unwrap();
    let ord = natural_backward_ordering(&d, &dec).unwrap();
    assert_eq!(ord.r(), 1);
    // Only one arc enters S_1, so a forward arc from S_1 to S_3 would cut off S_2.
    assert_eq!(ignored_sets(&dec, &ord), BTreeSet::from([2]));
}

#[test]
fn no_cut_arcs_gives_one_set() {
    // Every strong 4-tournament has a vertex of out-degree 1 whose out-arc is a
    // cut-arc, so the regular 5-tournament and the complete digraph serve instead.
    let regular =
        Digraph::from_arcs(5, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, (i + 2) % 5)])).unwrap();
    for d in [regular, Digraph::complete(4)] {
        let dec = nice_decomposition(&d).unwrap();
        assert_eq!(dec.p(), 1);
        assert!(natural_backward_ordering(&d, &dec).unwrap().arcs.is_empty());
    }
}

#[test]
fn every_strong_four_tournament_has_a_cut_arc() {
    for mask in 0u32..64 {
        let mut d = Digraph::new(4);
        let mut bit = 0;
        for u in 0..4 {
            for v in u + 1..4 {
                if mask >> bit & 1 == 1 {
                    d.add_arc(u, v)
                } else {
                    d.add_arc(v, u)
                }
                bit += 1;
            }
        }
        if is_strong(&d) {
            assert!(!cut_arcs(&d).unwrap().is_empty());
        }
    }
}

fn strong_sample(n: usize, p: f64, seed: u64) -> Option<Digraph> {
    let d = gen_random_semicomplete(n, p, seed);
    is_strong(&d).then_some(d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn computed_decompositions_are_sound(n in 4usize..10, p in 0.0f64..0.6, seed: u64) {
        let Some(d) = strong_sample(n, p, seed) else { return Ok(()) };
        let one = one_decomposition(&d).unwrap();
        prop_assert!(verify_structure(&d, &one).is_empty());
        let nice = nice_decomposition(&d).unwrap();
        prop_assert!(verify_structure(&d, &nice).is_empty());
        prop_assert_eq!(nice.backward_arcs(&d), cut_arcs(&d).unwrap());
        let ord = natural_backward_ordering(&d, &nice).unwrap();
        prop_assert!(verify_ordering(&d, &nice, &ord).is_empty());
        let m = nice.mirrored();
        let rev = d.reversed();
        prop_assert_eq!(
            m.backward_arcs(&rev).len(),
            cut_arcs(&rev).unwrap().len()
        );
        prop_assert!(verify_structure(&rev, &m).is_empty());
    }
}
