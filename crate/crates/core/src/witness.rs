//! Extremal graphs showing that each catalog condition cannot be weakened,
//! and a harness that checks them against the condition and the oracles.

use crate::catalog::{Condition, ConditionId, Instance, Params};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::GraphFacts;
use crate::rational::{self, int};
use crate::sequence::{enumerate_graphical, DegreeSequence};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

/// Graph expression over cliques and independent sets. Leaves are numbered
/// left to right; vertices follow leaf order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Complete(usize),
    Empty(usize),
    Union(Vec<Expr>),
    Join(Box<Expr>, Box<Expr>),
}

/// Vertex `offset` of leaf number `leaf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Port {
    pub leaf: usize,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub expr: Expr,
    pub extra: Vec<(Port, Port)>,
}

impl Expr {
    fn size(&self) -> usize {
        match self {
            Expr::Complete(m) | Expr::Empty(m) => *m,
            Expr::Union(parts) => parts.iter().map(Expr::size).sum(),
            Expr::Join(a, b) => a.size() + b.size(),
        }
    }

    fn leaves<'a>(&'a self, out: &mut Vec<&'a Expr>) {
        match self {
            Expr::Complete(_) | Expr::Empty(_) => out.push(self),
            Expr::Union(parts) => parts.iter().for_each(|p| p.leaves(out)),
            Expr::Join(a, b) => {
                a.leaves(out);
                b.leaves(out);
            }
        }
    }

    fn build(&self) -> Graph {
        match self {
            Expr::Complete(m) => Graph::complete(*m),
            Expr::Empty(m) => Graph::empty(*m),
            Expr::Union(parts) => parts.iter().fold(Graph::empty(0), |g, p| g.union(&p.build())),
            Expr::Join(a, b) => a.build().join(&b.build()),
        }
    }

    /// Degree of every vertex without building adjacency; `bonus` is the
    /// number of vertices joined to this whole subtree.
    fn degrees_into(&self, bonus: usize, out: &mut Vec<usize>) {
        match self {
            Expr::Complete(m) => out.extend(std::iter::repeat_n(m.saturating_sub(1) + bonus, *m)),
            Expr::Empty(m) => out.extend(std::iter::repeat_n(bonus, *m)),
            Expr::Union(parts) => parts.iter().for_each(|p| p.degrees_into(bonus, out)),
            Expr::Join(a, b) => {
                a.degrees_into(bonus + b.size(), out);
                b.degrees_into(bonus + a.size(), out);
            }
        }
    }

    fn render(&self, top: bool) -> String {
        match self {
            Expr::Complete(m) => format!("K{m}"),
            Expr::Empty(m) => format!("E{m}"),
            Expr::Union(parts) => {
                let mut names: Vec<String> = Vec::new();
                let mut idx = 0;
                while idx < parts.len() {
                    let run = parts[idx..].iter().take_while(|p| **p == parts[idx]).count();
                    let one = parts[idx].render(false);
                    names.push(if run > 1 { format!("{run}{one}") } else { one });
                    idx += run;
                }
                let s = names.join(" u ");
                if top || parts.len() < 2 {
                    s
                } else {
                    format!("({s})")
                }
            }
            Expr::Join(a, b) => {
                let s = format!("{} + {}", a.render(false), b.render(false));
                if top {
                    s
                } else {
                    format!("({s})")
                }
            }
        }
    }
}

impl Recipe {
    fn plain(expr: Expr) -> Self {
        Recipe { expr, extra: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.expr.size()
    }

    fn leaf_starts(&self) -> (Vec<&Expr>, Vec<usize>) {
        let mut leaves = Vec::new();
        self.expr.leaves(&mut leaves);
        let mut starts = Vec::with_capacity(leaves.len());
        let mut at = 0;
        for l in &leaves {
            starts.push(at);
            at += l.size();
        }
        (leaves, starts)
    }

    fn vertex(&self, p: Port) -> Result<usize> {
        let (leaves, starts) = self.leaf_starts();
        match leaves.get(p.leaf) {
            Some(l) if p.offset < l.size() => Ok(starts[p.leaf] + p.offset),
            _ => Err(Error::EmptyPart(format!("leaf {} has no vertex {}", p.leaf, p.offset))),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        let mut g = self.expr.build();
        for &(a, b) in &self.extra {
            let (u, v) = (self.vertex(a)?, self.vertex(b)?);
            if u == v || g.has_edge(u, v) {
                return Err(Error::Internal(format!("added edge {u}-{v} is not new")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Degrees computed from the expression alone.
    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        let mut deg = Vec::with_capacity(self.n());
        self.expr.degrees_into(0, &mut deg);
        for &(a, b) in &self.extra {
            deg[self.vertex(a)?] += 1;
            deg[self.vertex(b)?] += 1;
        }
        Ok(DegreeSequence::new(deg))
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.expr.render(true))?;
        if !self.extra.is_empty() {
            let (leaves, _) = self.leaf_starts();
            let name = |p: Port| format!("{}#{}[{}]", leaves[p.leaf].render(false), p.leaf, p.offset);
            let edges: Vec<String> = self.extra.iter().map(|&(a, b)| format!("{}-{}", name(a), name(b))).collect();
            write!(f, " with {}", edges.join(", "))?;
        }
        Ok(())
    }
}

fn size(m: i64, what: &str) -> Result<usize> {
    usize::try_from(m).map_err(|_| Error::EmptyPart(format!("{what} has size {m}")))
}

fn k(m: i64) -> Result<Expr> {
    Ok(Expr::Complete(size(m, "clique")?))
}

fn e(m: i64) -> Result<Expr> {
    Ok(Expr::Empty(size(m, "independent set")?))
}

fn join(a: Expr, b: Expr) -> Expr {
    Expr::Join(Box::new(a), Box::new(b))
}

fn union(parts: Vec<Expr>) -> Expr {
    Expr::Union(parts)
}

fn port(leaf: usize, offset: usize) -> Port {
    Port { leaf, offset }
}

/// `K_a + (E_b u K_c)`, the shape shared by most hamiltonian-type families.
fn split(a: i64, b: i64, c: i64) -> Result<Recipe> {
    Ok(Recipe::plain(join(k(a)?, union(vec![e(b)?, k(c)?]))))
}

/// Two cliques with the given cross edges between leaf 0 and leaf 1.
fn two_cliques(x: i64, y: i64, cross: &[(usize, usize)]) -> Result<Recipe> {
    let (xs, ys) = (size(x, "clique")?, size(y, "clique")?);
    for &(a, b) in cross {
        if a >= xs || b >= ys {
            return Err(Error::EmptyPart(format!("K{xs} u K{ys} cannot carry cross edge {a}-{b}")));
        }
    }
    Ok(Recipe {
        expr: union(vec![Expr::Complete(xs), Expr::Complete(ys)]),
        extra: cross.iter().map(|&(a, b)| (port(0, a), port(1, b))).collect(),
    })
}

fn need(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::EmptyPart(what()))
    }
}

/// Recipe for the extremal graph attached to one clause instance.
pub fn recipe_for(cond: &Condition, inst: &Instance) -> Result<Recipe> {
    use ConditionId::*;
    let n = cond.n() as i64;
    let p = cond.id().checked_params(cond.params())?;
    let i = inst.i.unwrap_or(0);
    let j = inst.j.unwrap_or(0);
    let h = n / 2;
    let clause = inst.clause;
    match (cond.id(), clause) {
        (Ham | TraceHam | Conn2Ham | Pancyc | Bind1Ham | F2Tough1, "A") => split(i, i, n - 2 * i),
        (Kconn, _) => {
            let kk = p.k() as i64;
            Ok(Recipe::plain(join(k(kk - 1)?, union(vec![k(i)?, k(n - kk - i + 1)?]))))
        }
        (Edge2, "A") if n <= 2 => Ok(Recipe::plain(k(n)?)),
        (Edge2, "A") => two_cliques(1, n - 1, &[(0, 0)]),
        (Edge2, "B") => two_cliques(i, n - i, &[(0, 0)]),
        (Edge2, "C") => {
            need(n >= 4, || "two cliques of order 1 joined by an edge form K2".into())?;
            two_cliques(h, h, &[(0, 0)])
        }
        (Edge3, "A") if n <= 2 => Ok(Recipe::plain(k(n)?)),
        (Edge3, "A") => two_cliques(1, n - 1, &[(0, 0), (0, 1)]),
        (Edge3, "B") => two_cliques(i, n - i, &[(0, 0), (1, 1)]),
        (Edge3, "C") => two_cliques(i, n - i, &[(0, 0), (0, 1)]),
        (Edge3, "D") => two_cliques(i, n - i, &[(0, 0), (1, 0)]),
        (Edge3, "E") => {
            need(n >= 8, || format!("two independent cross edges need n >= 8, got {n}"))?;
            two_cliques(h, h, &[(0, 0), (1, 1)])
        }
        (Edge3, "F") => two_cliques((n - 1) / 2, (n + 1) / 2, &[(0, 0), (0, 1)]),
        (Edge3, "G") => {
            need(n >= 6, || format!("a vertex with two cross edges needs n >= 6, got {n}"))?;
            two_cliques(h, h, &[(0, 0), (0, 1)])
        }
        (Bindlo, "A") => {
            let c = rational::ceil(p.b() * int(i));
            Ok(Recipe::plain(join(k(c - 1)?, union(vec![k(n - i - c + 1)?, e(i)?]))))
        }
        (Bindhi, "A") => {
            let q = rational::floor(int(n - i) / p.b());
            Ok(Recipe::plain(join(k(n - q - 1)?, union(vec![k(q - i + 1)?, e(i)?]))))
        }
        (Bindlo | Bindhi, "B") => {
            let m = rational::floor(int(n) / (p.b() + int(1)));
            Ok(Recipe::plain(join(k(n - m - 1)?, e(m + 1)?)))
        }
        (Tough, _) => {
            let f = rational::floor(int(i) / p.t());
            split(i, f, n - i - f)
        }
        (Defic, _) => {
            let beta = p.beta() as i64;
            split(i - beta, i + 1, n - 2 * i + beta - 1)
        }
        (Factor2, "A") => Ok(Recipe::plain(join(k((n - 1) / 2)?, e((n + 1) / 2)?))),
        (Factor2, "B") => Ok(Recipe::plain(join(k(h - 1)?, union(vec![e(h - 1)?, k(2)?])))),
        (Factor2, "C") => {
            need(n - 2 * i > 2, || "the added edge would raise the only clique vertex".into())?;
            let mut r = split(i, i + 1, n - 2 * i - 1)?;
            r.extra.push((port(1, 0), port(2, 0)));
            Ok(r)
        }
        (Factor2, "D") => {
            let mut r = split(i, i + 2, n - 2 * i - 2)?;
            r.extra.extend((0..3).map(|x| (port(1, x), port(2, x))));
            Ok(r)
        }
        (Kham, _) => {
            let kk = p.k() as i64;
            split(i + kk, i, n - 2 * i - kk)
        }
        (Kpath, _) => {
            let kk = p.k() as i64;
            split(i, i + kk, n - 2 * i - kk)
        }
        (Hamconn, _) => split(i, i - 1, n - 2 * i + 1),
        (Kedgeham, _) => {
            let kk = p.k() as i64;
            split(i, i - kk, n - 2 * i + kk)
        }
        (Pancyc, "B") => Ok(Recipe::plain(join(e(h)?, e(h)?))),
        (AlphaLe, _) => {
            let kk = p.k() as i64;
            Ok(Recipe::plain(join(e(kk + 1)?, k(n - kk - 1)?)))
        }
        (ChiLe, _) => {
            let kk = p.k() as i64;
            Ok(Recipe::plain(union(vec![k(kk + 1)?, e(n - kk - 1)?])))
        }
        (ArbLe, _) => {
            let kk = p.k() as i64;
            Ok(Recipe::plain(union(vec![k(2 * kk + 1)?, e(n - 2 * kk - 1)?])))
        }
        (Bind1Ham, "B") | (F2Tough1, "B") => {
            let c = (n + 1) / 2 - i;
            Ok(Recipe::plain(join(k(i)?, union(vec![e(i - 1)?, k(c)?, k(c)?]))))
        }
        (F2Tough1, "C") => Ok(Recipe::plain(join(k(i)?, union(vec![e(i - 1)?, k(h - i)?, k(h + 1 - i)?])))),
        (Bind1_1f, "A") => Ok(Recipe::plain(join(k(i)?, union(vec![e(i)?, k(2 * j + 1)?, k(n - 2 * i - 2 * j - 1)?])))),
        (Bind1_1f, "B") => Ok(Recipe::plain(join(k(h - 4)?, union(vec![e(h - 5)?, k(3)?, k(3)?, k(3)?])))),
        (Tough1F2, "A") => {
            let mut r = split(i + j, i + 2 * j + 1, n - 2 * i - 3 * j - 1)?;
            r.extra.extend((0..(2 * j + 1) as usize).map(|x| (port(1, x), port(2, x))));
            Ok(r)
        }
        (Tough1F2, "B") => {
            let c = h - i - 3;
            let mut r = Recipe::plain(join(k(i + 2)?, union(vec![e(i + 4)?, k(c)?, k(c)?])));
            r.extra.extend((0..3).map(|x| (port(1, x), port(2, x))));
            r.extra.push((port(1, 3), port(3, 0)));
            Ok(r)
        }
        (Tough1F2, "C") => {
            let c = h - i - 2;
            let mut r = Recipe::plain(join(k(i + 1)?, union(vec![e(i + 3)?, k(c)?, k(c)?])));
            r.extra.extend((0..3).map(|x| (port(1, x), port(2, x))));
            r.extra.push((port(1, 0), port(3, 0)));
            Ok(r)
        }
        (Tough1F2, "D") => {
            let mut r = Recipe::plain(join(k(h - 3)?, union(vec![e(h - 1)?, k(3)?, k(1)?])));
            r.extra.extend((0..3).map(|x| (port(1, x), port(2, x))));
            r.extra.push((port(1, 3), port(3, 0)));
            Ok(r)
        }
        (Edgek | Toughlo | Jung | Hoang | HoangCor | Dirac, _) => Err(Error::NoWitness(cond.id().to_string())),
        (id, c) => Err(Error::Internal(format!("{id} has no clause {c}"))),
    }
}

fn find_instance<'c>(cond: &'c Condition, clause: &str, i: Option<i64>, j: Option<i64>) -> Result<&'c Instance> {
    cond.instances()
        .iter()
        .find(|x| x.clause.eq_ignore_ascii_case(clause) && (i.is_none() || x.i == i) && (j.is_none() || x.j == j))
        .ok_or_else(|| {
            Error::ParamOutOfRange(format!(
                "{} at n = {} has no clause {clause} with i = {i:?}, j = {j:?}",
                cond.id(),
                cond.n()
            ))
        })
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub recipe: String,
    pub sequence: DegreeSequence,
    pub graph: Graph,
}

/// Builds the extremal graph for `clause` at index `i` (and `j`).
pub fn witness_for(
    id: ConditionId,
    params: &Params,
    n: usize,
    clause: &str,
    i: Option<i64>,
    j: Option<i64>,
) -> Result<Witness> {
    let cond = Condition::new(id, params, n)?;
    let inst = find_instance(&cond, clause, i, j)?;
    let recipe = recipe_for(&cond, inst)?;
    let graph = recipe.graph()?;
    Ok(Witness { recipe: recipe.to_string(), sequence: graph.degree_sequence(), graph })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceStatus {
    /// A witness exists and every check on it passed.
    Witnessed,
    /// No graphical sequence of this length fails the clause.
    Vacuous,
    /// The family does not exist at this `n`; every failing sequence is
    /// dominated by another instance's witness instead.
    Covered,
    Violated,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceCheck {
    pub clause: &'static str,
    pub i: Option<i64>,
    pub j: Option<i64>,
    pub status: InstanceStatus,
    pub recipe: Option<String>,
    pub sequence: Option<DegreeSequence>,
    pub fails_clause: Option<bool>,
    /// `None` when the graph is beyond the oracle scale.
    pub violates_property: Option<bool>,
    pub failing_sequences: usize,
    pub dominated: usize,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimalityReport {
    pub condition: ConditionId,
    pub params: Params,
    pub n: usize,
    pub passed: bool,
    pub instances: Vec<InstanceCheck>,
    pub violations: Vec<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest `n` at which witness graphs are run through the oracles.
    pub oracle_max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { oracle_max_n: 7 }
    }
}

struct Built {
    seq: DegreeSequence,
    ok: bool,
}

/// Checks that every clause instance has an extremal graph that fails the
/// clause, violates the row's requirement, and dominates every graphical
/// sequence failing the clause (minorizes, for decreasing rows).
pub fn verify_weak_optimality(
    id: ConditionId,
    params: &Params,
    n: usize,
    opts: &VerifyOptions,
) -> Result<OptimalityReport> {
    let cond = Condition::new(id, params, n)?;
    if !id.info().flags.best_monotone {
        return Err(Error::NoWitness(format!("{id} is not flagged best monotone")));
    }
    let req = cond.requirement();
    let decreasing = id.is_decreasing();
    let dominates = |w: &DegreeSequence, pi: &DegreeSequence| -> bool {
        let (a, b) = if decreasing { (pi, w) } else { (w, pi) };
        a.degrees().iter().zip(b.degrees()).all(|(x, y)| x >= y)
    };
    let all: Vec<DegreeSequence> = enumerate_graphical(n).collect();
    let run_oracle = n <= opts.oracle_max_n;

    let built: Vec<(InstanceCheck, Option<Built>)> = cond
        .instances()
        .par_iter()
        .map(|inst| -> Result<(InstanceCheck, Option<Built>)> {
            let failing: Vec<&DegreeSequence> = all.iter().filter(|pi| !inst.holds(pi).unwrap_or(true)).collect();
            let mut check = InstanceCheck {
                clause: inst.clause,
                i: inst.i,
                j: inst.j,
                status: InstanceStatus::Witnessed,
                recipe: None,
                sequence: None,
                fails_clause: None,
                violates_property: None,
                failing_sequences: failing.len(),
                dominated: 0,
                note: None,
            };
            let recipe = match recipe_for(&cond, inst) {
                Ok(r) => r,
                Err(Error::EmptyPart(why)) => {
                    check.note = Some(why);
                    check.status = if failing.is_empty() { InstanceStatus::Vacuous } else { InstanceStatus::Covered };
                    return Ok((check, None));
                }
                Err(err) => return Err(err),
            };
            let graph = recipe.graph()?;
            let seq = graph.degree_sequence();
            let fails = !inst.holds(&seq)?;
            let violates = run_oracle.then(|| !req.holds(&GraphFacts::new(&graph)));
            check.dominated = failing.iter().filter(|pi| dominates(&seq, pi)).count();
            check.recipe = Some(recipe.to_string());
            check.sequence = Some(seq.clone());
            check.fails_clause = Some(fails);
            check.violates_property = violates;
            let ok = fails && violates != Some(false);
            if !ok || check.dominated != check.failing_sequences {
                check.status = InstanceStatus::Violated;
            }
            Ok((check, Some(Built { seq, ok })))
        })
        .collect::<Result<_>>()?;

    let witnesses: Vec<DegreeSequence> =
        built.iter().filter_map(|(_, b)| b.as_ref().filter(|b| b.ok).map(|b| b.seq.clone())).collect();
    let mut checks: Vec<InstanceCheck> = built.into_iter().map(|(c, _)| c).collect();
    for (check, inst) in checks.iter_mut().zip(cond.instances()) {
        if check.status != InstanceStatus::Covered {
            continue;
        }
        let uncovered = all
            .iter()
            .filter(|pi| !inst.holds(pi).unwrap_or(true))
            .filter(|pi| !witnesses.iter().any(|w| dominates(w, pi)))
            .count();
        check.dominated = check.failing_sequences - uncovered;
        if uncovered > 0 {
            check.status = InstanceStatus::Violated;
        }
    }

    let mut violations = Vec::new();
    for c in &checks {
        if c.status != InstanceStatus::Violated {
            continue;
        }
        let at = match (c.i, c.j) {
            (Some(i), Some(j)) => format!("{} i={i} j={j}", c.clause),
            (Some(i), None) => format!("{} i={i}", c.clause),
            _ => c.clause.to_string(),
        };
        let mut why = Vec::new();
        if c.fails_clause == Some(false) {
            why.push("witness satisfies the clause".to_string());
        }
        if c.violates_property == Some(false) {
            why.push("witness meets the requirement".to_string());
        }
        if c.dominated < c.failing_sequences {
            why.push(format!(
                "{} of {} failing sequences undominated",
                c.failing_sequences - c.dominated,
                c.failing_sequences
            ));
        }
        violations.push(format!("{id} n={n} {at}: {}", why.join("; ")));
    }
    Ok(OptimalityReport {
        condition: id,
        params: *params,
        n,
        passed: violations.is_empty(),
        instances: checks,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec())
    }

    fn w(id: ConditionId, p: Params, n: usize, clause: &str, i: Option<i64>) -> Witness {
        witness_for(id, &p, n, clause, i, None).unwrap()
    }

    #[test]
    fn ham_witnesses() {
        let x = w(ConditionId::Ham, Params::none(), 7, "A", Some(2));
        assert_eq!(x.recipe, "K2 + (E2 u K3)");
        assert_eq!(x.sequence, seq(&[2, 2, 4, 4, 4, 6, 6]));
        let paw = w(ConditionId::Ham, Params::none(), 4, "A", Some(1));
        assert_eq!(paw.sequence, seq(&[1, 2, 2, 3]));
    }

    #[test]
    fn other_examples() {
        let x = w(ConditionId::Tough, Params::t(Rational::new(3, 2)), 7, "A", Some(3));
        assert_eq!(x.recipe, "K3 + (E2 u K2)");
        assert_eq!(x.sequence, seq(&[3, 3, 4, 4, 6, 6, 6]));
        assert_eq!(crate::oracles::toughness(&x.graph).0, int(1));
        let k33 = w(ConditionId::Pancyc, Params::none(), 6, "B", None);
        assert_eq!(k33.recipe, "E3 + E3");
        assert_eq!(k33.sequence, seq(&[3; 6]));
        let t = w(ConditionId::Tough1F2, Params::none(), 18, "B", Some(0));
        assert_eq!(t.recipe, "K2 + (E4 u 2K6) with E4#1[0]-K6#2[0], E4#1[1]-K6#2[1], E4#1[2]-K6#2[2], E4#1[3]-K6#3[0]");
    }

    #[test]
    fn bad_indices() {
        assert!(matches!(
            witness_for(ConditionId::Ham, &Params::none(), 7, "A", Some(4), None),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(matches!(
            witness_for(ConditionId::Hoang, &Params::none(), 7, "A", Some(1), Some(2)),
            Err(Error::NoWitness(_))
        ));
        assert!(matches!(
            witness_for(ConditionId::Edge3, &Params::none(), 6, "E", None, None),
            Err(Error::EmptyPart(_))
        ));
    }

    #[test]
    fn symbolic_degrees_match_construction() {
        for &id in ConditionId::all() {
            for p in id.param_grid() {
                for n in 1..=12 {
                    let Ok(cond) = Condition::new(id, &p, n) else { continue };
                    for inst in cond.instances() {
                        match recipe_for(&cond, inst) {
                            Ok(r) => {
                                assert_eq!(r.n(), n, "{id} {inst}");
                                assert_eq!(r.degree_sequence().unwrap(), r.graph().unwrap().degree_sequence());
                            }
                            Err(Error::EmptyPart(_) | Error::NoWitness(_)) => {}
                            Err(err) => panic!("{id} n={n} {inst}: {err}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ham_witnesses_pairwise_incomparable() {
        for n in 3..=12 {
            let cond = Condition::new(ConditionId::Ham, &Params::none(), n).unwrap();
            let seqs: Vec<_> =
                cond.instances().iter().map(|x| recipe_for(&cond, x).unwrap().degree_sequence().unwrap()).collect();
            for a in 0..seqs.len() {
                for b in 0..seqs.len() {
                    if a != b {
                        assert!(!seqs[a].majorizes(&seqs[b]).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn verify_examples() {
        let opts = VerifyOptions::default();
        for n in 5..=7 {
            assert!(verify_weak_optimality(ConditionId::Ham, &Params::none(), n, &opts).unwrap().passed);
        }
        let r = verify_weak_optimality(ConditionId::AlphaLe, &Params::k(1), 5, &opts).unwrap();
        assert!(r.passed, "{:?}", r.violations);
        assert_eq!(r.instances[0].recipe.as_deref(), Some("E2 + K3"));
        assert!(verify_weak_optimality(ConditionId::Defic, &Params::beta(0), 6, &opts).unwrap().passed);
        assert!(verify_weak_optimality(ConditionId::Hoang, &Params::none(), 6, &opts).is_err());
    }
}
