//! Per-arc classification of strong semicomplete digraphs.
//!
//! [`classify_containment`] decides whether an arc lies in some spanning
//! eulerian subdigraph and [`classify_unavoidable`] whether it lies in all of
//! them. Both return a certificate that can be checked independently.

pub mod containment;
pub mod unavoid;
mod walk;

use thiserror::Error;

use eulertrail_connectivity::{reachable, CutCertificate};
use eulertrail_core::{Arc, Digraph};

pub use containment::{
    blocking, classify_containment, classify_containment_with, Blocking, ContainmentClass,
    ContainmentTag, ContainmentWitness, Layout, WitnessMethod,
};
pub use unavoid::{
    classify_unavoidable, neighbourhood_partition, taxonomy_labels, unavoidable_arcs, UnavoidClass,
    UnavoidTag, UnavoidWitness,
};

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("digraph is not strong; no arc leaves the cut side")]
    NotStrong(CutCertificate),
    #[error("arc {0} is not in the digraph")]
    ArcNotInDigraph(Arc),
    #[error("digraph is not semicomplete")]
    NotSemicomplete,
    #[error("no witness could be constructed or found for the good arc {0}")]
    ConstructionFailed(Arc),
    #[error(transparent)]
    Core(#[from] eulertrail_core::Error),
}

/// Requires `d` strong and semicomplete and `a` one of its arcs.
pub(crate) fn check_input(d: &Digraph, a: Arc) -> Result<(), ClassifyError> {
    if !d.contains(a) {
        return Err(ClassifyError::ArcNotInDigraph(a));
    }
    if !d.is_semicomplete() {
        return Err(ClassifyError::NotSemicomplete);
    }
    let fwd = reachable(d, 0, false);
    if fwd.iter().any(|&b| !b) {
        return Err(ClassifyError::NotStrong(CutCertificate::from_side(d, &fwd)));
    }
    let bwd = reachable(d, 0, true);
    if bwd.iter().any(|&b| !b) {
        let side: Vec<bool> = bwd.iter().map(|&b| !b).collect();
        return Err(ClassifyError::NotStrong(CutCertificate::from_side(
            d, &side,
        )));
    }
    Ok(())
}
