//! Core data model for semicomplete digraphs: the [`Digraph`] type, arc-set
//! certificates, named generator families and JSON/DOT serialization.

pub mod digraph;
pub mod error;
pub mod generators;
pub mod io;
pub mod subgraph;

pub use digraph::{is_semicomplete, is_tournament, Arc, ArcSet, Digraph, Vertex};
pub use error::{Error, Result};
pub use generators::{
    gen_d3, gen_exceptional, gen_glued_tournament, gen_glued_with_layout, gen_random_semicomplete,
    random_semicomplete_with, seeded_rng, GluedLayout, EXCEPTIONAL_ARC,
};
pub use io::{parse_json, serialize_json, to_dot, to_dot_highlighted};
pub use subgraph::{
    degrees, euler_tour, is_eulerian_factor, is_spanning_eulerian, walk_arcs, weak_components,
    EulerianSubdigraph,
};
