//! Labeled realizations of a degree sequence and the "forcibly" quantifier.

use super::properties::{GraphFacts, OracleLimits, PropertyId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::DegreeSequence;
use serde::Serialize;
use std::ops::ControlFlow;

/// What every realization must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Requirement {
    Has {
        property: PropertyId,
    },
    /// Every realization with `given` also has `then`.
    Implies {
        given: PropertyId,
        then: PropertyId,
    },
}

impl Requirement {
    pub fn has(p: PropertyId) -> Self {
        Requirement::Has { property: p }
    }

    pub fn implies(given: PropertyId, then: PropertyId) -> Self {
        Requirement::Implies { given, then }
    }

    pub fn holds(&self, facts: &GraphFacts<'_>) -> bool {
        match *self {
            Requirement::Has { property } => facts.has(property),
            Requirement::Implies { given, then } => !facts.has(given) || facts.has(then),
        }
    }

    pub fn check_scale(&self, n: usize, limits: &OracleLimits) -> Result<()> {
        if n > limits.realizations {
            return Err(Error::ScaleExceeded { n, limit: limits.realizations });
        }
        match *self {
            Requirement::Has { property } => limits.check(property, n),
            Requirement::Implies { given, then } => {
                limits.check(given, n)?;
                limits.check(then, n)
            }
        }
    }
}

impl std::fmt::Display for Requirement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Requirement::Has { property } => write!(f, "{property}"),
            Requirement::Implies { given, then } => write!(f, "{given} => {then}"),
        }
    }
}

/// Visits every graph on vertices `0..n` in which vertex `v` has degree
/// `degrees[v]`. Rows are filled in vertex order; each row picks its
/// higher-numbered neighbours in lexicographic order and the residual
/// degrees are kept graphical, so no branch dead-ends.
pub fn visit_labeled<F>(degrees: &[usize], mut f: F) -> ControlFlow<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    let n = degrees.len();
    if !DegreeSequence::new(degrees.to_vec()).is_graphical() {
        return ControlFlow::Continue(());
    }
    let mut g = Graph::empty(n);
    let mut residual = degrees.to_vec();
    fill_row(&mut g, &mut residual, 0, &mut f)
}

fn fill_row<F>(g: &mut Graph, res: &mut Vec<usize>, u: usize, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    let n = res.len();
    if u == n {
        return f(g);
    }
    if res[u] == 0 {
        return fill_row(g, res, u + 1, f);
    }
    let cands: Vec<usize> = (u + 1..n).filter(|&w| res[w] > 0).collect();
    let need = res[u];
    if cands.len() < need {
        return ControlFlow::Continue(());
    }
    let mut picked = Vec::with_capacity(need);
    pick(g, res, u, &cands, 0, need, &mut picked, f)
}

#[allow(clippy::too_many_arguments)]
fn pick<F>(
    g: &mut Graph,
    res: &mut Vec<usize>,
    u: usize,
    cands: &[usize],
    from: usize,
    need: usize,
    picked: &mut Vec<usize>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    if picked.len() == need {
        let saved = res[u];
        for &w in picked.iter() {
            g.add_edge(u, w);
            res[w] -= 1;
        }
        res[u] = 0;
        let feasible = DegreeSequence::new(res[u + 1..].to_vec()).is_graphical();
        let flow = if feasible { fill_row(g, res, u + 1, f) } else { ControlFlow::Continue(()) };
        res[u] = saved;
        for &w in picked.iter() {
            g.remove_edge(u, w);
            res[w] += 1;
        }
        return flow;
    }
    let left = need - picked.len();
    for idx in from..=cands.len() - left {
        picked.push(cands[idx]);
        let flow = pick(g, res, u, cands, idx + 1, need, picked, f);
        picked.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every labeled simple graph whose sorted degrees equal `pi`, each once:
/// degree vectors in lexicographic order, graphs within a vector in
/// backtracking order.
pub fn visit_realizations<F>(pi: &DegreeSequence, limits: &OracleLimits, mut f: F) -> Result<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    if pi.len() > limits.realizations {
        return Err(Error::ScaleExceeded { n: pi.len(), limit: limits.realizations });
    }
    if !pi.is_graphical() {
        return Err(Error::NotGraphical);
    }
    let mut vector = pi.degrees().to_vec();
    loop {
        if visit_labeled(&vector, &mut f).is_break() {
            return Ok(());
        }
        if !next_permutation(&mut vector) {
            return Ok(());
        }
    }
}

pub fn enumerate_realizations(pi: &DegreeSequence) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    visit_realizations(pi, &OracleLimits::default(), |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForciblyReport {
    pub requirement: Requirement,
    pub sequence: DegreeSequence,
    pub holds: bool,
    /// First realization (in enumeration order) violating the requirement.
    pub counterexample: Option<Graph>,
    pub realizations_checked: u64,
}

/// Checks the requirement on every realization up to isomorphism, using
/// only graphs where vertex `v` has degree `d_(v+1)`; each isomorphism
/// class of realizations has such a labeling.
pub fn forcibly_report(req: Requirement, pi: &DegreeSequence, limits: &OracleLimits) -> Result<ForciblyReport> {
    req.check_scale(pi.len(), limits)?;
    if !pi.is_graphical() {
        return Err(Error::NotGraphical);
    }
    let mut counterexample = None;
    let mut checked = 0u64;
    let _ = visit_labeled(pi.degrees(), |g| {
        checked += 1;
        if req.holds(&GraphFacts::new(g)) {
            ControlFlow::Continue(())
        } else {
            counterexample = Some(g.clone());
            ControlFlow::Break(())
        }
    });
    Ok(ForciblyReport {
        requirement: req,
        sequence: pi.clone(),
        holds: counterexample.is_none(),
        counterexample,
        realizations_checked: checked,
    })
}

pub fn forcibly(p: PropertyId, pi: &DegreeSequence) -> Result<bool> {
    Ok(forcibly_report(Requirement::has(p), pi, &OracleLimits::default())?.holds)
}

pub fn conditionally_forcibly(given: PropertyId, then: PropertyId, pi: &DegreeSequence) -> Result<bool> {
    Ok(forcibly_report(Requirement::implies(given, then), pi, &OracleLimits::default())?.holds)
}
