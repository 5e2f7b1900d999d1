//! Named digraph families and seeded random generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Arc, Digraph};
use crate::error::{Error, Result};

/// Attempts allowed when drawing a strong random tournament for [`gen_glued_tournament`].
pub const STRONG_RETRY_CAP: usize = 1000;

/// Seeded RNG used by every generator in the workspace.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random semicomplete digraph: each pair independently becomes a 2-cycle with
/// probability `two_cycle_prob`, otherwise a single arc of uniform direction.
///
/// # Panics
/// Panics if `two_cycle_prob` is outside `[0, 1]`.
pub fn gen_random_semicomplete(n: usize, two_cycle_prob: f64, seed: u64) -> Digraph {
    let mut rng = seeded_rng(seed);
    random_semicomplete_with(&mut rng, n, two_cycle_prob)
}

/// As [`gen_random_semicomplete`], drawing from a caller-supplied RNG.
pub fn random_semicomplete_with<R: Rng>(rng: &mut R, n: usize, two_cycle_prob: f64) -> Digraph {
    assert!(
        (0.0..=1.0).contains(&two_cycle_prob),
        "two_cycle_prob must lie in [0, 1]"
    );
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(two_cycle_prob) {
                d.add_arc(u, v);
                d.add_arc(v, u);
            } else if rng.gen_bool(0.5) {
                d.add_arc(u, v);
            } else {
                d.add_arc(v, u);
            }
        }
    }
    d
}

/// The digraph on `{x, y, z} = {0, 1, 2}` with arcs `xy, yz, zy, zx`.
pub fn gen_d3() -> Digraph {
    Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 1), (2, 0)]).expect("static arc list")
}

/// Vertices of [`gen_exceptional`]: `a, b, c, d = 0, 1, 2, 3`.
pub const EXCEPTIONAL_ARC: Arc = Arc::new(0, 3);

/// The 4-vertex digraph with arcs `ab, bc, cd, ad, ca, db`, plus `cb` when
/// `with_cb`. Its arc `ad` ([`EXCEPTIONAL_ARC`]) is exceptional.
pub fn gen_exceptional(with_cb: bool) -> Digraph {
    let (a, b, c, d) = (0, 1, 2, 3);
    let mut g = Digraph::from_arcs(4, [(a, b), (b, c), (c, d), (a, d), (c, a), (d, b)])
        .expect("static arc list");
    if with_cb {
        g.add_arc(c, b);
    }
    g
}

/// Vertex layout of the tournament built by [`gen_glued_tournament`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedLayout {
    pub a_side: Vec<usize>,
    pub b_side: Vec<usize>,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    /// Vertex of the `A` side dominated by `b`.
    pub a: usize,
    /// Vertex of the `B` side dominating `a`.
    pub b: usize,
}

fn reaches_everything(d: &Digraph, reverse: bool) -> bool {
    let n = d.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
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
    seen.into_iter().all(|s| s)
}

fn strong_random_tournament(size: usize, seed: u64) -> Result<Digraph> {
    let mut rng = seeded_rng(seed);
    for _ in 0..STRONG_RETRY_CAP {
        let t = random_semicomplete_with(&mut rng, size, 0.0);
        if reaches_everything(&t, false) && reaches_everything(&t, true) {
            return Ok(t);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no strong tournament of order {size} within {STRONG_RETRY_CAP} draws from seed {seed}"
    )))
}

/// Strong tournament on `A ∪ {x, y, z} ∪ B` with `A -> {x,y,z} -> B`, `x -> {y, z}`,
/// `y -> z`, every `A -> B` arc except `ab`, and `b -> a`.
///
/// Returns the tournament and the arc `xz`, which lies in no spanning eulerian
/// subdigraph. The sub-tournaments on `A` and `B` are drawn from the seed streams
/// until strong. Layout: `A = 0..size_a`, then `x, y, z`, then `B`; `a` and `b` are
/// the first vertices of their sides.
pub fn gen_glued_tournament(
    size_a: usize,
    size_b: usize,
    seed_a: u64,
    seed_b: u64,
) -> Result<(Digraph, Arc)> {
    let (d, layout) = gen_glued_with_layout(size_a, size_b, seed_a, seed_b)?;
    Ok((d, Arc::new(layout.x, layout.z)))
}

/// [`gen_glued_tournament`] together with its vertex layout.
pub fn gen_glued_with_layout(
    size_a: usize,
    size_b: usize,
    seed_a: u64,
    seed_b: u64,
) -> Result<(Digraph, GluedLayout)> {
    if size_a < 3 || size_b < 3 {
        return Err(Error::InvalidParameter(format!(
            "both sides need at least 3 vertices (got {size_a}, {size_b})"
        )));
    }
    let ta = strong_random_tournament(size_a, seed_a)?;
    let tb = strong_random_tournament(size_b, seed_b)?;
    let n = size_a + size_b + 3;
    let a_side: Vec<usize> = (0..size_a).collect();
    let (x, y, z) = (size_a, size_a + 1, size_a + 2);
    let b_side: Vec<usize> = (size_a + 3..n).collect();
    let (a, b) = (a_side[0], b_side[0]);

    let mut d = Digraph::new(n);
    for arc in ta.arcs() {
        d.add_arc(a_side[arc.tail], a_side[arc.head]);
    }
    for arc in tb.arcs() {
        d.add_arc(b_side[arc.tail], b_side[arc.head]);
    }
    for &p in &a_side {
        for q in [x, y, z] {
            d.add_arc(p, q);
        }
    }
    for p in [x, y, z] {
        for &q in &b_side {
            d.add_arc(p, q);
        }
    }
    d.add_arc(x, y);
    d.add_arc(x, z);
    d.add_arc(y, z);
    for &p in &a_side {
        for &q in &b_side {
            if (p, q) == (a, b) {
                d.add_arc(b, a);
            } else {
                d.add_arc(p, q);
            }
        }
    }
    let layout = GluedLayout {
        a_side,
        b_side,
        x,
        y,
        z,
        a,
        b,
    };
    Ok((d, layout))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_semicomplete_is_deterministic() {
        let d1 = gen_random_semicomplete(6, 0.5, 42);
        let d2 = gen_random_semicomplete(6, 0.5, 42);
        assert_eq!(d1, d2);
        assert!(d1.is_semicomplete());
        assert_eq!(gen_random_semicomplete(0, 0.0, 7).n(), 0);
        assert!(gen_random_semicomplete(5, 0.0, 1).is_tournament());
    }

    #[test]
    fn d3_shape() {
        let d = gen_d3();
        assert_eq!(d.n(), 3);
        assert_eq!(d.arc_count(), 4);
        assert!(d.is_semicomplete());
        assert!(!d.is_tournament());
    }

    #[test]
    fn exceptional_shapes() {
        let plain = gen_exceptional(false);
        let with_cb = gen_exceptional(true);
        assert_eq!(plain.arc_count(), 6);
        assert_eq!(with_cb.arc_count(), 7);
        assert!(plain.is_semicomplete() && with_cb.is_semicomplete());
        assert!(plain.contains(EXCEPTIONAL_ARC));
    }

    #[test]
    fn glued_tournament_is_a_strong_tournament() {
        let (d, xz) = gen_glued_tournament(3, 3, 1, 2).unwrap();
        assert_eq!(d.n(), 9);
        assert!(d.is_tournament());
        assert!(reaches_everything(&d, false) && reaches_everything(&d, true));
        assert_eq!(xz, Arc::new(3, 5));
        assert!(gen_glued_tournament(2, 3, 0, 0).is_err());
    }
}
