//! Command-line surface for the eulertrail workspace.
//!
//! Every command produces a [`Report`]: a JSON document for stdout, an optional
//! DOT rendering, a one-line human summary for stderr and a [`Status`] that maps
//! to the process exit code. Certificates are re-validated before they are
//! placed in a report.

pub mod search;

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use eulertrail_classify::{
    blocking, classify_containment, classify_unavoidable, ClassifyError, ContainmentClass,
    ContainmentWitness, Layout, UnavoidClass, UnavoidWitness,
};
use eulertrail_connectivity::{arc_connectivity, cut_arcs, is_strong};
use eulertrail_core::{parse_json, to_dot, to_dot_highlighted, Arc, Digraph, Vertex};
use eulertrail_decomposition::{ignored_sets, natural_backward_ordering, nice_decomposition};
use eulertrail_factor::{spanning_eulerian_avoiding, AvoidOutcome};
use eulertrail_oracle::find_spanning_eulerian;
use eulertrail_trails::{spanning_trail, spanning_trail_by_oracle, validate_trail, TrailError};

pub use search::{
    arc_strong_semicomplete, conjecture_search, Candidate, SearchConfig, SearchReport,
};

#[derive(Debug, Parser)]
#[command(
    name = "eulertrail",
    version,
    about = "Spanning eulerian subdigraphs of semicomplete digraphs"
)]
pub struct Cli {
    /// Suppress the human summary on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Output format for stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, strongness, arc-connectivity, cut-arcs and the nice decomposition.
    Analyze { input: PathBuf },
    /// Containment and unavoidability classes of one arc or of every arc.
    Classify(ClassifyArgs),
    /// Spanning trail between two vertices, or a certificate that none exists.
    Trail {
        input: PathBuf,
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        to: Vertex,
    },
    /// Spanning eulerian subdigraph avoiding the arcs listed in a JSON file.
    Avoid {
        input: PathBuf,
        /// JSON list of arcs `[[u, v], ...]`.
        #[arg(long)]
        arcs: PathBuf,
    },
    /// Random search for digraphs with arc-strong connectivity `k + 1` in which
    /// some `k` arcs cannot be avoided.
    ConjectureSearch {
        #[arg(long)]
        k: usize,
        /// Largest number of vertices.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Args)]
#[command(group = ArgGroup::new("which").required(true).args(["arc", "all"]))]
pub struct ClassifyArgs {
    pub input: PathBuf,
    /// Tail and head of the arc.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    pub arc: Option<Vec<Vertex>>,
    #[arg(long)]
    pub all: bool,
}

/// Decision status; the discriminant is the exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Decided, with a positive certificate (or a complete classification).
    Certified = 0,
    /// Decided impossible, with an obstruction.
    Impossible = 2,
    /// Neither certificate could be produced.
    Unknown = 3,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug)]
pub struct Report {
    pub json: Value,
    /// Digraph with the certificate arcs in bold.
    pub dot: Option<String>,
    pub summary: String,
    pub status: Status,
}

impl Report {
    /// Text for stdout in the requested format. Commands without a graph
    /// rendering fall back to JSON.
    pub fn render(&self, format: Format) -> String {
        match (format, &self.dot) {
            (Format::Dot, Some(dot)) => dot.clone(),
            _ => serde_json::to_string_pretty(&self.json).expect("serializable report"),
        }
    }
}

/// Input errors; they exit with code 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] eulertrail_core::Error),
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

/// Reads a digraph in the JSON format.
pub fn load_digraph(path: &PathBuf) -> Result<Digraph, CliError> {
    Ok(parse_json(&read(path)?)?)
}

/// Parses a JSON list of arcs `[[u, v], ...]`.
pub fn parse_arc_list(text: &str) -> Result<Vec<Arc>, CliError> {
    let pairs: Vec<[Vertex; 2]> =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("arc list: {e}")))?;
    Ok(pairs.into_iter().map(|[u, v]| Arc::new(u, v)).collect())
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Analyze { input } => Ok(analyze(&load_digraph(input)?)),
        Command::Classify(args) => {
            let d = load_digraph(&args.input)?;
            let arcs = match &args.arc {
                Some(uv) => vec![Arc::new(uv[0], uv[1])],
                None => d.arcs().collect(),
            };
            classify(&d, &arcs, args.arc.is_some())
        }
        Command::Trail { input, from, to } => trail(&load_digraph(input)?, *from, *to),
        Command::Avoid { input, arcs } => {
            avoid(&load_digraph(input)?, &parse_arc_list(&read(arcs)?)?)
        }
        Command::ConjectureSearch {
            k,
            n,
            trials,
            seed,
            jobs,
        } => {
            let config = SearchConfig {
                k: *k,
                n: *n,
                trials: *trials,
                seed: *seed,
                jobs: *jobs,
            };
            let report = conjecture_search(&config)?;
            Ok(report.into_report())
        }
    }
}

/// Structural summary of `d`; decomposition fields are `null` unless `d` is
/// strong and semicomplete.
pub fn analyze(d: &Digraph) -> Report {
    let strong = d.n() > 0 && is_strong(d);
    let lambda = arc_connectivity(d).lambda;
    let cuts = cut_arcs(d).ok();
    let layout = (strong && d.is_semicomplete())
        .then(|| nice_decomposition(d).ok())
        .flatten()
        .and_then(|dec| {
            let ord = natural_backward_ordering(d, &dec).ok()?;
            let ignored = ignored_sets(&dec, &ord);
            Some((dec, ord, ignored))
        });
    let json = json!({
        "n": d.n(),
        "m": d.arc_count(),
        "semicomplete": d.is_semicomplete(),
        "strong": strong,
        "lambda": lambda,
        "cut_arcs": cuts,
        "decomposition": layout.as_ref().map(|(dec, _, _)| dec.sets()),
        "backward_ordering": layout.as_ref().map(|(_, ord, _)| &ord.arcs),
        "ignored_sets": layout.as_ref().map(|(_, _, ign)| ign),
    });
    let summary = format!(
        "n={} m={} strong={strong} lambda={lambda} cut-arcs={}",
        d.n(),
        d.arc_count(),
        cuts.map_or("n/a".into(), |c| c.len().to_string()),
    );
    Report {
        json,
        dot: Some(to_dot(d)),
        summary,
        status: Status::Certified,
    }
}

/// Re-derives the verdict behind a containment class.
fn containment_checks(d: &Digraph, c: &ContainmentClass) -> bool {
    if !c.validate(d) {
        return false;
    }
    match &c.witness {
        ContainmentWitness::Subdigraph { .. } => true,
        ContainmentWitness::Blocked(b) if d.n() >= 4 => {
            Layout::of(d)
                .ok()
                .and_then(|l| blocking(d, &l, c.arc))
                .as_ref()
                == Some(b)
        }
        ContainmentWitness::Blocked(_) => {
            matches!(find_spanning_eulerian(d, &[c.arc], &[]), Ok(None))
        }
    }
}

fn unavoid_json(u: &UnavoidClass) -> Value {
    let mut v = json!({
        "unavoidable": u.tag,
        "labels": u.labels,
        "witness": u.witness,
    });
    if let UnavoidWitness::Partition(p) = &u.witness {
        v["partition"] = json!(p);
    }
    v
}

/// Containment and unavoidability classes of `arcs`. A single arc is reported as
/// one object, several as a list.
pub fn classify(d: &Digraph, arcs: &[Arc], single: bool) -> Result<Report, CliError> {
    let mut entries = Vec::new();
    let mut status = Status::Certified;
    let (mut bad, mut unavoidable) = (Vec::new(), Vec::new());
    let mut highlight = Vec::new();
    for &a in arcs {
        let c = classify_containment(d, a)?;
        let u = classify_unavoidable(d, a)?;
        let verified = containment_checks(d, &c) && u.validate(d);
        if !verified {
            status = Status::Unknown;
        }
        if !c.is_good() {
            bad.push(a);
        }
        if u.is_unavoidable() {
            unavoidable.push(a);
        }
        if single {
            highlight = c.subdigraph().map(|s| s.arcs.clone()).unwrap_or_default();
        }
        let mut entry = json!({
            "arc": a,
            "good": c.is_good(),
            "containment": c,
            "verified": verified,
        });
        if let (Value::Object(e), Value::Object(extra)) = (&mut entry, unavoid_json(&u)) {
            e.extend(extra);
        }
        entries.push(entry);
    }
    if !single {
        highlight.clone_from(&unavoidable);
    }
    let json = if single {
        entries.pop().expect("one arc")
    } else {
        json!({ "arcs": entries, "bad": bad, "unavoidable": unavoidable })
    };
    let summary = format!(
        "{} arc(s): {} bad, {} unavoidable{}",
        arcs.len(),
        bad.len(),
        unavoidable.len(),
        if status == Status::Unknown {
            ", some certificates missing"
        } else {
            ""
        }
    );
    Ok(Report {
        json,
        dot: Some(to_dot_highlighted(d, &highlight)),
        summary,
        status,
    })
}

/// Spanning `(x, y)`-trail. Without two arc-disjoint paths the oracle decides
/// when the digraph is small enough; the cut is reported either way.
pub fn trail(d: &Digraph, x: Vertex, y: Vertex) -> Result<Report, CliError> {
    if !d.is_semicomplete() {
        return Err(CliError::Input("digraph is not semicomplete".into()));
    }
    if x >= d.n() || y >= d.n() || x == y {
        return Err(CliError::Input(format!(
            "need two distinct vertices below {}",
            d.n()
        )));
    }
    let cut = match spanning_trail(d, x, y) {
        Ok(t) if validate_trail(d, &t, x, y, true) => {
            let arcs = t.arcs();
            return Ok(Report {
                json: json!({ "kind": "trail", "from": x, "to": y, "method": "constructed", "vertices": t.vertices }),
                dot: Some(to_dot_highlighted(d, &arcs)),
                summary: format!("spanning trail {x} -> {y} with {} arcs", arcs.len()),
                status: Status::Certified,
            });
        }
        Ok(_) => None,
        Err(TrailError::NoTwoPaths(cut)) => Some(cut),
        Err(TrailError::Precondition(m)) => return Err(CliError::Input(m)),
        Err(TrailError::ConstructionFailed(_)) => None,
    };
    let (json, summary, status, arcs) = match spanning_trail_by_oracle(d, x, y) {
        Some(Ok(t)) if validate_trail(d, &t, x, y, true) => {
            let arcs = t.arcs();
            (
                json!({ "kind": "trail", "from": x, "to": y, "method": "oracle", "vertices": t.vertices }),
                format!("spanning trail {x} -> {y} found by search"),
                Status::Certified,
                arcs,
            )
        }
        Some(Err(())) => (
            json!({ "kind": "impossible", "from": x, "to": y, "method": "oracle", "cut": cut }),
            format!("no spanning trail {x} -> {y}"),
            Status::Impossible,
            vec![],
        ),
        _ => (
            json!({ "kind": "unknown", "from": x, "to": y, "cut": cut }),
            format!("spanning trail {x} -> {y} undecided; fewer than two arc-disjoint paths"),
            Status::Unknown,
            vec![],
        ),
    };
    Ok(Report {
        json,
        dot: Some(to_dot_highlighted(d, &arcs)),
        summary,
        status,
    })
}

/// Spanning eulerian subdigraph of `d` avoiding `f`.
pub fn avoid(d: &Digraph, f: &[Arc]) -> Result<Report, CliError> {
    let outcome = spanning_eulerian_avoiding(d, f)?;
    let host = d.without_arcs(f);
    let valid = match &outcome {
        AvoidOutcome::Found { subdigraph, .. } => {
            subdigraph.validate(d) && f.iter().all(|&a| !subdigraph.contains(a))
        }
        AvoidOutcome::NotStrong(cut) => cut.validate(&host) && cut.crossing_arcs.is_empty(),
        AvoidOutcome::NoFactor(p) => p.validate(&host),
        AvoidOutcome::Exhausted | AvoidOutcome::Unknown { .. } => true,
    };
    let status = match &outcome {
        _ if !valid => Status::Unknown,
        AvoidOutcome::Found { .. } => Status::Certified,
        o if o.is_impossible() => Status::Impossible,
        _ => Status::Unknown,
    };
    let summary = match (&outcome, status) {
        (_, Status::Unknown) if !valid => "certificate failed validation".to_string(),
        (AvoidOutcome::Found { subdigraph, .. }, _) => {
            format!(
                "spanning eulerian subdigraph with {} arcs avoids all {} arcs",
                subdigraph.arcs.len(),
                f.len()
            )
        }
        (AvoidOutcome::NotStrong(_), _) => "removing the arcs destroys strongness".into(),
        (AvoidOutcome::NoFactor(_), _) => "no eulerian factor after removing the arcs".into(),
        (AvoidOutcome::Exhausted, _) => "exhaustive search found no solution".into(),
        (AvoidOutcome::Unknown { components }, _) => {
            format!("unknown: best factor has {components} components")
        }
    };
    let highlight = outcome
        .subdigraph()
        .map(|s| s.arcs.clone())
        .unwrap_or_default();
    Ok(Report {
        json: json!({ "avoid": f, "outcome": outcome, "verified": valid }),
        dot: Some(to_dot_highlighted(d, &highlight)),
        summary,
        status,
    })
}

impl SearchReport {
    pub fn into_report(self) -> Report {
        let status = if !self.candidates.is_empty() {
            Status::Impossible
        } else if self.unknown > 0 {
            Status::Unknown
        } else {
            Status::Certified
        };
        let summary = format!(
            "{} trials: {} candidate(s), {} unknown",
            self.trials,
            self.candidates.len(),
            self.unknown
        );
        Report {
            json: serde_json::to_value(&self).expect("serializable report"),
            dot: None,
            summary,
            status,
        }
    }
}
