//! JSON and DOT serialization.
//!
//! JSON shape: `{"n": <int>, "arcs": [[u, v], ...]}` with 0-based ids. Serialized
//! arcs are sorted lexicographically so output is byte-stable.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::digraph::{Arc, Digraph};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDigraph {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

/// Parses the JSON digraph format. Syntax errors report line and column;
/// semantic errors (loops, duplicates, bad ids) report the arc index.
pub fn parse_json(text: &str) -> Result<Digraph> {
    let raw: JsonDigraph = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Digraph::from_arcs(raw.n, raw.arcs.iter().map(|&[u, v]| Arc::new(u, v)))
}

/// Canonical JSON form.
pub fn serialize_json(d: &Digraph) -> String {
    let raw = JsonDigraph {
        n: d.n(),
        arcs: d.arcs().map(|a| [a.tail, a.head]).collect(),
    };
    serde_json::to_string(&raw).expect("plain integer payload")
}

/// Graphviz DOT export with one edge statement per arc.
pub fn to_dot(d: &Digraph) -> String {
    to_dot_highlighted(d, &[])
}

/// DOT export drawing the listed arcs in bold.
pub fn to_dot_highlighted(d: &Digraph, highlight: &[Arc]) -> String {
    let mut s = String::from("digraph D {\n");
    for v in 0..d.n() {
        let _ = writeln!(s, "  {v};");
    }
    for a in d.arcs() {
        if highlight.contains(&a) {
            let _ = writeln!(s, "  {} -> {} [penwidth=3];", a.tail, a.head);
        } else {
            let _ = writeln!(s, "  {} -> {};", a.tail, a.head);
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle_round_trip() {
        let text = r#"{"n":3,"arcs":[[0,1],[1,2],[2,0]]}"#;
        let d = parse_json(text).unwrap();
        assert_eq!(d, Digraph::cycle(3));
        assert_eq!(serialize_json(&d), text);
    }

    #[test]
    fn serialization_is_canonical() {
        let d = parse_json(r#"{"n": 3, "arcs": [[2,0],[0,1],[1,2]]}"#).unwrap();
        assert_eq!(serialize_json(&d), r#"{"n":3,"arcs":[[0,1],[1,2],[2,0]]}"#);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_json("{\"n\": 3,\n \"arcs\": [[0,1],]}") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_json(r#"{"n":2,"arcs":[[0,1],[0,1]]}"#),
            Err(Error::InvalidArc { index: 1, .. })
        ));
        assert!(matches!(
            parse_json(r#"{"n":2,"arcs":[],"extra":1}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn dot_lists_each_arc_once() {
        let dot = to_dot(&Digraph::cycle(3));
        assert_eq!(dot.matches("->").count(), 3);
        assert!(dot.starts_with("digraph"));
    }
}
