//! Maximal non-forcibly-P sequences in the majorization order, the sink
//! family for edge connectivity, and containment sweeps between conditions.

mod family;
mod partitions;
mod sweep;

pub use family::{kriesell_family, verify_sink_lower_bound, ClaimCheck, FamilyMember, LowerBoundReport};
pub use partitions::{partition_count, partitions};
pub use sweep::{binding_one_boundary, binding_tough_boundary, bm_sweep, Containment, ContainmentReport, SweepSide};

use crate::catalog::Condition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{forcibly_report, Direction, OracleLimits, Requirement};
use crate::sequence::{enumerate_graphical, DegreeSequence};
use rayon::prelude::*;
use serde::Serialize;

/// One graphical sequence with its oracle verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classified {
    pub sequence: DegreeSequence,
    /// A realization violating the requirement, if there is one.
    pub counterexample: Option<Graph>,
}

impl Classified {
    pub fn forcibly(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Runs the forcibly oracle on every graphical sequence of length `n`,
/// in lexicographic order.
pub fn classify(req: Requirement, n: usize, limits: &OracleLimits) -> Result<Vec<Classified>> {
    req.check_scale(n, limits)?;
    let all: Vec<DegreeSequence> = enumerate_graphical(n).collect();
    all.into_par_iter()
        .map(|sequence| {
            let r = forcibly_report(req, &sequence, limits)?;
            Ok(Classified { sequence, counterexample: r.counterexample })
        })
        .collect()
}

pub fn direction(req: Requirement) -> Direction {
    match req {
        Requirement::Has { property } => property.direction(),
        Requirement::Implies { .. } => Direction::Increasing,
    }
}

/// `a` lies above `b` in the order used for sinks of `dir`.
fn above(dir: Direction, a: &DegreeSequence, b: &DegreeSequence) -> bool {
    let (hi, lo) = match dir {
        Direction::Increasing => (a, b),
        Direction::Decreasing => (b, a),
    };
    hi.degrees().iter().zip(lo.degrees()).all(|(x, y)| x >= y)
}

#[derive(Clone, Debug, Serialize)]
pub struct SinkReport {
    pub property: String,
    pub params: Option<String>,
    pub n: usize,
    pub sinks: Vec<DegreeSequence>,
    pub count: usize,
    pub certificates: Vec<Graph>,
    pub pairwise_incomparable: bool,
    /// Each sink satisfies the blocking condition of every other sink.
    /// Only meaningful for properties preserved by adding edges.
    pub pairwise_blocking: bool,
    #[serde(skip)]
    pub direction: Direction,
}

#[derive(Clone, Copy, Debug)]
pub struct SinkOptions {
    pub max_n: usize,
    pub limits: OracleLimits,
}

impl Default for SinkOptions {
    fn default() -> Self {
        SinkOptions { max_n: 7, limits: OracleLimits::default() }
    }
}

fn property_fields(req: Requirement) -> (String, Option<String>) {
    match req {
        Requirement::Has { property } => {
            let text = property.to_string();
            match text.split_once(':') {
                Some((name, arg)) => (name.to_string(), Some(arg.to_string())),
                None => (text, None),
            }
        }
        Requirement::Implies { .. } => (req.to_string(), None),
    }
}

/// Non-forcibly sequences of length `n` that no other non-forcibly sequence
/// lies above. For properties preserved by deleting edges, "above" is
/// reversed, so the sinks are the minimal elements.
pub fn sinks(req: Requirement, n: usize, opts: &SinkOptions) -> Result<SinkReport> {
    if n > opts.max_n {
        return Err(Error::ScaleExceeded { n, limit: opts.max_n });
    }
    let classified = classify(req, n, &opts.limits.raised_to(n))?;
    Ok(sinks_from(req, n, &classified))
}

/// Sink extraction over an existing classification.
pub fn sinks_from(req: Requirement, n: usize, classified: &[Classified]) -> SinkReport {
    let dir = direction(req);
    let bad: Vec<&Classified> = classified.iter().filter(|c| !c.forcibly()).collect();
    let top: Vec<&Classified> = bad
        .iter()
        .copied()
        .filter(|c| !bad.iter().any(|o| o.sequence != c.sequence && above(dir, &o.sequence, &c.sequence)))
        .collect();
    let sinks: Vec<DegreeSequence> = top.iter().map(|c| c.sequence.clone()).collect();
    let certificates = top.iter().filter_map(|c| c.counterexample.clone()).collect();
    let pairs = || sinks.iter().enumerate().flat_map(|(a, s)| sinks.iter().skip(a + 1).map(move |t| (s, t)));
    let pairwise_incomparable = pairs().all(|(s, t)| !above(dir, s, t) && !above(dir, t, s));
    let pairwise_blocking = pairs().all(|(s, t)| {
        let st = t.blocking_condition().is_satisfied_by(s).unwrap_or(false);
        let ts = s.blocking_condition().is_satisfied_by(t).unwrap_or(false);
        st && ts
    });
    let (property, params) = property_fields(req);
    SinkReport {
        property,
        params,
        n,
        count: sinks.len(),
        sinks,
        certificates,
        pairwise_incomparable,
        pairwise_blocking,
        direction: dir,
    }
}

impl SinkReport {
    /// Whether some sink lies above `pi`.
    pub fn covers(&self, pi: &DegreeSequence) -> bool {
        self.sinks.iter().any(|s| above(self.direction, s, pi))
    }
}

/// Graphical sequences where the condition's verdict differs from
/// "no sink lies above". Empty exactly when the condition declares the
/// best monotone set at this length.
pub fn bm_mismatches(cond: &Condition, report: &SinkReport) -> Result<Vec<DegreeSequence>> {
    if cond.n() != report.n {
        return Err(Error::LengthMismatch { left: cond.n(), right: report.n });
    }
    let mut out = Vec::new();
    for pi in enumerate_graphical(cond.n()) {
        if cond.declares(&pi)? == report.covers(&pi) {
            out.push(pi);
        }
    }
    Ok(out)
}
