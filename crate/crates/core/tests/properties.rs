use eulertrail_core::{gen_random_semicomplete, parse_json, serialize_json, Digraph};
use proptest::prelude::*;

proptest! {
    #[test]
    fn generators_emit_semicomplete_digraphs(n in 0usize..12, p in 0.0f64..=1.0, seed: u64) {
        prop_assert!(gen_random_semicomplete(n, p, seed).is_semicomplete());
    }

    #[test]
    fn generator_is_a_pure_function(n in 0usize..10, p in 0.0f64..=1.0, seed: u64) {
        prop_assert_eq!(gen_random_semicomplete(n, p, seed), gen_random_semicomplete(n, p, seed));
    }

    #[test]
    fn json_round_trip(n in 1usize..9, bits in proptest::collection::vec(any::<bool>(), 64)) {
        let mut d = Digraph::new(n);
        for u in 0..n {
            for v in 0..n {
                if u != v && bits[(u * 8 + v) % 64] {
                    d.add_arc(u, v);
                }
            }
        }
        let text = serialize_json(&d);
        prop_assert_eq!(parse_json(&text).unwrap(), d);
    }
}
