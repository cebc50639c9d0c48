use super::partitions::{partition_count, partitions, partitions_at_most};
use super::{sinks, SinkOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{PropertyId, Requirement};
use crate::sequence::DegreeSequence;
use serde::Serialize;

/// One graph of the family: two copies of `K_{n/2}` with `k - 1` cross edges,
/// `partition[i]` of them at X-vertex `i`, each ending at its own Y-vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub partition: Vec<usize>,
    pub graph: Graph,
    pub sequence: DegreeSequence,
}

fn check_args(k: usize, n: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::ParamOutOfRange(format!("k = {k} must be at least 2")));
    }
    if !n.is_multiple_of(2) || n < 4 * k - 2 {
        return Err(Error::ParamOutOfRange(format!("n = {n} must be even and at least 4k - 2 = {}", 4 * k - 2)));
    }
    Ok(())
}

/// X is `0..n/2`, Y is `n/2..n`; cross edges leave the lowest X-vertices and
/// enter Y-vertices `n/2, n/2 + 1, ...` in order.
pub fn kriesell_family(k: usize, n: usize) -> Result<Vec<FamilyMember>> {
    check_args(k, n)?;
    let h = n / 2;
    let cliques = Graph::complete(h).union(&Graph::complete(h));
    Ok(partitions(k - 1)
        .into_iter()
        .map(|partition| {
            let mut graph = cliques.clone();
            let mut y = h;
            for (x, &a) in partition.iter().enumerate() {
                for _ in 0..a {
                    graph.add_edge(x, y);
                    y += 1;
                }
            }
            let sequence = graph.degree_sequence();
            FamilyMember { partition, graph, sequence }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    /// (|X|, |Y|) splits examined.
    pub splits: usize,
    /// Realizable cross-edge degree patterns examined.
    pub patterns: usize,
    /// A sequence from some split that majorizes a family member without
    /// being equal to it.
    pub counterexample: Option<DegreeSequence>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LowerBoundReport {
    pub k: usize,
    pub n: usize,
    /// Number of partitions of `k - 1`.
    pub expected: u128,
    pub count: usize,
    pub family: Vec<FamilyMember>,
    pub structure_ok: bool,
    pub pairwise_incomparable: bool,
    pub claim: ClaimCheck,
    /// `None` when `n` is above oracle scale.
    pub oracle_confirmed: Option<bool>,
    pub passed: bool,
}

/// Gale-Ryser test for a simple bipartite graph with the given side degrees.
fn bipartite_realizable(a: &[usize], b: &[usize]) -> bool {
    if a.iter().sum::<usize>() != b.iter().sum::<usize>() {
        return false;
    }
    let mut a = a.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    let mut lhs = 0;
    for (m, &ai) in a.iter().enumerate() {
        lhs += ai;
        let rhs: usize = b.iter().map(|&bj| bj.min(m + 1)).sum();
        if lhs > rhs {
            return false;
        }
    }
    true
}

fn split_sequence(x: usize, y: usize, a: &[usize], b: &[usize]) -> DegreeSequence {
    let side = |size: usize, extra: &[usize]| {
        (0..size).map(move |v| size - 1 + extra.get(v).copied().unwrap_or(0)).collect::<Vec<_>>()
    };
    let mut all = side(x, a);
    all.extend(side(y, b));
    DegreeSequence::new(all)
}

/// Every edge-maximal graph with a `k - 1` edge cut is two cliques `K_x`,
/// `K_y` plus `k - 1` cross edges; its degrees depend only on how many cross
/// edges meet each vertex. Checks that none of these majorizes a family
/// member without equalling it.
fn claim_check(k: usize, n: usize, family: &[FamilyMember]) -> ClaimCheck {
    let mut check = ClaimCheck { splits: 0, patterns: 0, counterexample: None };
    for y in 1..=n / 2 {
        let x = n - y;
        check.splits += 1;
        let xs: Vec<_> = partitions_at_most(k - 1, x).into_iter().filter(|p| p[0] <= y).collect();
        let ys: Vec<_> = partitions_at_most(k - 1, y).into_iter().filter(|p| p[0] <= x).collect();
        for a in &xs {
            for b in &ys {
                if !bipartite_realizable(a, b) {
                    continue;
                }
                check.patterns += 1;
                let seq = split_sequence(x, y, a, b);
                let beats = family.iter().any(|f| seq != f.sequence && seq.majorizes(&f.sequence).unwrap_or(false));
                if beats && check.counterexample.is_none() {
                    check.counterexample = Some(seq);
                }
            }
        }
    }
    check
}

/// The family has one member per partition of `k - 1`, all with minimum
/// degree `n/2 - 1` and a `k - 1` edge cut, pairwise incomparable and not
/// majorized by any other edge-maximal non-k-edge-connected sequence. At
/// `n <= oracle_max_n` the members are also confirmed as sinks by the oracle.
pub fn verify_sink_lower_bound(k: usize, n: usize, oracle_max_n: usize) -> Result<LowerBoundReport> {
    let family = kriesell_family(k, n)?;
    let h = n / 2;
    let expected = partition_count(k - 1)?;
    let structure_ok = family.iter().all(|f| {
        let cut = (0..h).map(|v| (f.graph.neighbors(v) >> h).count_ones() as usize).sum::<usize>();
        cut == k - 1 && f.sequence.min_degree() == h - 1
    });
    let pairwise_incomparable = family.iter().enumerate().all(|(i, f)| {
        family[i + 1..].iter().all(|g| {
            !f.sequence.majorizes(&g.sequence).unwrap_or(true) && !g.sequence.majorizes(&f.sequence).unwrap_or(true)
        })
    });
    let claim = claim_check(k, n, &family);
    let oracle_confirmed = if n <= oracle_max_n {
        let opts = SinkOptions { max_n: oracle_max_n, ..SinkOptions::default() };
        let report = sinks(Requirement::has(PropertyId::KEdgeConnected(k)), n, &opts)?;
        Some(family.iter().all(|f| report.sinks.contains(&f.sequence)))
    } else {
        None
    };
    let count = family.len();
    let passed = count as u128 == expected
        && structure_ok
        && pairwise_incomparable
        && claim.counterexample.is_none()
        && oracle_confirmed != Some(false);
    Ok(LowerBoundReport {
        k,
        n,
        expected,
        count,
        family,
        structure_ok,
        pairwise_incomparable,
        claim,
        oracle_confirmed,
        passed,
    })
}
