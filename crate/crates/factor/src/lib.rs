//! Eulerian factors, obstruction partitions, component merging and spanning
//! eulerian subdigraphs that avoid prescribed arcs.

pub mod avoid;
pub mod circulation;
pub mod merge;

pub use avoid::{
    avoidance_guaranteed, is_semicomplete_multipartite, is_star_set, multipartite_reduction,
    reduction_threshold, spanning_eulerian_avoiding, spanning_eulerian_via_reduction, AvoidMethod,
    AvoidOutcome,
};
pub use circulation::{
    eulerian_factor, factor_exists_guarantee, obstruction_from_cut, BoundedEdge, Circulation,
    CirculationNetwork, EulerianFactor, FactorOutcome, ObstructionPartition, PartitionCounts,
};
pub use merge::{
    check_merge_obstructions, merge_all, stalled_pair_structure, MergeOutcome, MergeRule,
    MergeStep, StalledPair, Substitution, ALTERNATING_MAX_LEN,
};
