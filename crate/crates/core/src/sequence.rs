//! Degree sequences in canonical nondecreasing order.
//!
//! Positions are 1-based to match the way every condition is written
//! (`d_1 <= ... <= d_n`). Position 0, and anything below it, reads as the
//! sentinel value 0.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        DegreeSequence { degrees }
    }

    /// Builds `v1^m1 v2^m2 ...` from (value, multiplicity) runs.
    pub fn from_runs(runs: &[(usize, usize)]) -> Self {
        let mut degrees = Vec::new();
        for &(value, count) in runs {
            degrees.extend(std::iter::repeat_n(value, count));
        }
        DegreeSequence::new(degrees)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut degrees = Vec::new();
        if text.contains(',') {
            for tok in text.split(',') {
                degrees.push(parse_degree(tok.trim())?);
            }
        } else {
            for tok in text.split_whitespace() {
                match tok.split_once('^') {
                    Some((value, count)) => {
                        let value = parse_degree(value)?;
                        let count: usize = count.parse().map_err(|_| Error::MalformedToken(tok.to_string()))?;
                        if count == 0 {
                            return Err(Error::MalformedToken(tok.to_string()));
                        }
                        degrees.extend(std::iter::repeat_n(value, count));
                    }
                    None => degrees.push(parse_degree(tok)?),
                }
            }
        }
        Ok(DegreeSequence::new(degrees))
    }

    /// Run-length form with ascending values, e.g. `1^5 4^2 6^2 7^3`.
    pub fn render(&self) -> String {
        self.runs().iter().map(|(v, m)| format!("{v}^{m}")).collect::<Vec<_>>().join(" ")
    }

    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.degrees {
            match out.last_mut() {
                Some((v, m)) if *v == d => *m += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `d_i` with 1-based `i`; `i <= 0` is the zero sentinel.
    ///
    /// Panics if `i > n`; the condition evaluator checks bounds first.
    pub fn d(&self, i: i64) -> usize {
        if i <= 0 {
            0
        } else {
            self.degrees[(i - 1) as usize]
        }
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.last().copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    /// Erdős–Gallai test with an even-sum precheck.
    pub fn is_graphical(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        if self.sum() % 2 == 1 || self.max_degree() >= n {
            return false;
        }
        let desc: Vec<usize> = self.degrees.iter().rev().copied().collect();
        let mut prefix = 0usize;
        for k in 1..=n {
            prefix += desc[k - 1];
            let tail: usize = desc[k..].iter().map(|&d| d.min(k)).sum();
            if prefix > k * (k - 1) + tail {
                return false;
            }
        }
        true
    }

    /// One realization, built by repeatedly saturating the vertex of largest
    /// residual degree against the next largest residuals (ties go to the
    /// lowest index). Vertex `v` carries degree `d_{v+1}`.
    pub fn realize(&self) -> Result<Graph> {
        if !self.is_graphical() {
            return Err(Error::NotGraphical);
        }
        let n = self.len();
        let mut g = Graph::empty(n);
        let mut residual = self.degrees.clone();
        loop {
            let v = (0..n).max_by(|&a, &b| residual[a].cmp(&residual[b]).then(b.cmp(&a))).filter(|&v| residual[v] > 0);
            let Some(v) = v else { break };
            let mut cands: Vec<usize> = (0..n).filter(|&w| w != v && residual[w] > 0).collect();
            cands.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
            let r = residual[v];
            if cands.len() < r {
                return Err(Error::Internal("residual reduction stalled".into()));
            }
            for &w in &cands[..r] {
                g.add_edge(v, w);
                residual[w] -= 1;
            }
            residual[v] = 0;
        }
        Ok(g)
    }

    /// `self >= other` componentwise.
    pub fn majorizes(&self, other: &DegreeSequence) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(self.degrees.iter().zip(&other.degrees).all(|(a, b)| a >= b))
    }

    pub fn complement(&self) -> Result<DegreeSequence> {
        let n = self.len();
        if let Some(&bad) = self.degrees.iter().find(|&&d| d + 1 > n) {
            return Err(Error::DegreeOutOfRange { degree: bad, n });
        }
        Ok(DegreeSequence::new(self.degrees.iter().map(|&d| n - 1 - d).collect()))
    }

    pub fn blocking_condition(&self) -> BlockingCondition {
        BlockingCondition { thresholds: self.degrees.iter().map(|d| d + 1).collect(), source: self.clone() }
    }
}

fn parse_degree(tok: &str) -> Result<usize> {
    if tok.is_empty() {
        return Err(Error::MalformedToken(tok.to_string()));
    }
    if let Some(rest) = tok.strip_prefix('-') {
        if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
            return Err(Error::NegativeDegree(tok.to_string()));
        }
    }
    tok.parse().map_err(|_| Error::MalformedToken(tok.to_string()))
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DegreeSequence::parse(s)
    }
}

/// The weakest monotone condition that its source sequence fails:
/// some position `j` with `d'_j >= thresholds[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockingCondition {
    pub thresholds: Vec<usize>,
    pub source: DegreeSequence,
}

impl BlockingCondition {
    pub fn is_satisfied_by(&self, seq: &DegreeSequence) -> Result<bool> {
        if seq.len() != self.thresholds.len() {
            return Err(Error::LengthMismatch { left: seq.len(), right: self.thresholds.len() });
        }
        Ok(seq.degrees().iter().zip(&self.thresholds).any(|(d, t)| d >= t))
    }

    /// First position (1-based) at which `seq` meets its threshold.
    pub fn witness_position(&self, seq: &DegreeSequence) -> Option<usize> {
        seq.degrees().iter().zip(&self.thresholds).position(|(d, t)| d >= t).map(|p| p + 1)
    }
}

/// Every graphical sequence of length `n`, in lexicographic order.
pub fn enumerate_graphical(n: usize) -> GraphicalSequences {
    GraphicalSequences { n, next: Some(vec![0; n]) }
}

pub struct GraphicalSequences {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for GraphicalSequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        loop {
            let cur = self.next.take()?;
            // successor among nondecreasing sequences bounded by n-1
            let top = self.n.saturating_sub(1);
            if let Some(p) = cur.iter().rposition(|&d| d < top) {
                let mut succ = cur.clone();
                let v = succ[p] + 1;
                for x in &mut succ[p..] {
                    *x = v;
                }
                self.next = Some(succ);
            }
            let seq = DegreeSequence { degrees: cur };
            if seq.is_graphical() {
                return Some(seq);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec())
    }

    /// Every degree sequence realized by some labeled graph on `n` vertices.
    fn brute_force_graphical(n: usize) -> BTreeSet<Vec<usize>> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut out = BTreeSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let mut deg = vec![0; n];
            for (e, &(u, v)) in pairs.iter().enumerate() {
                if mask >> e & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            deg.sort_unstable();
            out.insert(deg);
        }
        out
    }

    #[test]
    fn parse_examples() {
        assert_eq!(DegreeSequence::parse("1^5 4^2 6^2 7^3").unwrap().degrees(), &[1, 1, 1, 1, 1, 4, 4, 6, 6, 7, 7, 7]);
        assert_eq!(DegreeSequence::parse("0").unwrap().degrees(), &[0]);
        assert_eq!(DegreeSequence::parse("2,2,1,1").unwrap().degrees(), &[1, 1, 2, 2]);
        assert_eq!(DegreeSequence::parse("3 1^2").unwrap().degrees(), &[1, 1, 3]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(DegreeSequence::parse("  "), Err(Error::EmptyInput));
        assert!(matches!(DegreeSequence::parse("1,-2"), Err(Error::NegativeDegree(_))));
        assert!(matches!(DegreeSequence::parse("-1^3"), Err(Error::NegativeDegree(_))));
        assert!(matches!(DegreeSequence::parse("2^x"), Err(Error::MalformedToken(_))));
        assert!(matches!(DegreeSequence::parse("2^0"), Err(Error::MalformedToken(_))));
        assert!(matches!(DegreeSequence::parse("1,,2"), Err(Error::MalformedToken(_))));
        assert!(matches!(DegreeSequence::parse("a b"), Err(Error::MalformedToken(_))));
    }

    #[test]
    fn render_examples() {
        assert_eq!(seq(&[1, 1, 2, 2]).render(), "1^2 2^2");
        assert_eq!(seq(&[6, 4, 4, 4, 4, 4, 5, 5]).render(), "4^5 5^2 6^1");
    }

    #[test]
    fn graphical_examples() {
        assert!(seq(&[1, 1, 1, 3]).is_graphical());
        assert!(!seq(&[1, 3, 3, 3]).is_graphical());
        assert!(seq(&[0, 0, 0]).is_graphical());
        assert!(seq(&[0]).is_graphical());
        assert!(!seq(&[1]).is_graphical());
        assert!(!seq(&[2, 2]).is_graphical());
        assert!(seq(&[]).is_graphical());
    }

    #[test]
    fn erdos_gallai_matches_exhaustive_search() {
        for n in 1..=7 {
            let truth = brute_force_graphical(n);
            let ours: BTreeSet<Vec<usize>> = enumerate_graphical(n).map(|s| s.degrees().to_vec()).collect();
            assert_eq!(ours, truth, "n = {n}");
            // and nothing outside the enumerated set slips through
            let mut all = vec![0; n];
            loop {
                let s = seq(&all);
                assert_eq!(s.is_graphical(), truth.contains(&all), "{all:?}");
                match all.iter().rposition(|&d| d < n) {
                    Some(p) => {
                        let v = all[p] + 1;
                        all[p..].iter_mut().for_each(|x| *x = v);
                    }
                    None => break,
                }
            }
        }
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_graphical(1).collect::<Vec<_>>(), vec![seq(&[0])]);
        let three: Vec<_> = enumerate_graphical(3).map(|s| s.degrees().to_vec()).collect();
        assert_eq!(three, vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 1, 2], vec![2, 2, 2]]);
        let four: Vec<_> = enumerate_graphical(4).collect();
        assert!(four.contains(&seq(&[1, 2, 2, 3])));
        assert!(!four.contains(&seq(&[1, 3, 3, 3])));
        let mut sorted = four.clone();
        sorted.sort();
        assert_eq!(sorted, four);
    }

    #[test]
    fn realize_examples() {
        let c5 = seq(&[2, 2, 2, 2, 2]).realize().unwrap();
        assert!(c5.is_connected());
        assert_eq!(c5.edge_count(), 5);
        let k2 = seq(&[1, 1]).realize().unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let star = seq(&[1, 1, 1, 3]).realize().unwrap();
        assert_eq!(star.edges(), vec![(0, 3), (1, 3), (2, 3)]);
        assert_eq!(seq(&[1, 3, 3, 3]).realize(), Err(Error::NotGraphical));
    }

    #[test]
    fn realize_every_graphical_sequence() {
        for n in 1..=8 {
            for s in enumerate_graphical(n) {
                let g = s.realize().unwrap();
                assert_eq!(g.degrees(), s.degrees(), "vertex v must carry d_(v+1)");
            }
        }
    }

    #[test]
    fn majorization_examples() {
        assert!(seq(&[1, 2, 2, 3]).majorizes(&seq(&[1, 1, 1, 3])).unwrap());
        let p = seq(&[2, 3, 3, 4]);
        assert!(p.majorizes(&p).unwrap());
        let a = seq(&[4, 4, 4, 4, 4, 4, 4, 5, 5, 6]);
        let b = seq(&[4, 4, 4, 4, 4, 4, 5, 5, 5, 5]);
        assert!(!a.majorizes(&b).unwrap());
        assert!(!b.majorizes(&a).unwrap());
        assert!(matches!(a.majorizes(&seq(&[1])), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn majorization_is_partial_order() {
        for n in 1..=5 {
            let all: Vec<_> = enumerate_graphical(n).collect();
            for a in &all {
                assert!(a.majorizes(a).unwrap());
                for b in &all {
                    let ab = a.majorizes(b).unwrap();
                    if ab && b.majorizes(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if ab && b.majorizes(c).unwrap() {
                            assert!(a.majorizes(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(seq(&[3; 6]).complement().unwrap(), seq(&[2; 6]));
        assert_eq!(seq(&[0]).complement().unwrap(), seq(&[0]));
        assert_eq!(seq(&[1, 1, 2, 2]).complement().unwrap(), seq(&[1, 1, 2, 2]));
        assert!(matches!(seq(&[3, 1]).complement(), Err(Error::DegreeOutOfRange { .. })));
        for n in 1..=7 {
            for s in enumerate_graphical(n) {
                let c = s.complement().unwrap();
                assert!(c.is_graphical());
                assert_eq!(c.complement().unwrap(), s);
            }
        }
    }

    #[test]
    fn blocking_condition_examples() {
        let c = seq(&[1, 2, 2, 3]).blocking_condition();
        assert_eq!(c.thresholds, vec![2, 3, 3, 4]);
        assert_eq!(seq(&[0]).blocking_condition().thresholds, vec![1]);
        assert!(!c.is_satisfied_by(&seq(&[1, 2, 2, 3])).unwrap());
        assert!(c.is_satisfied_by(&seq(&[2, 2, 2, 2])).unwrap());
        assert_eq!(c.witness_position(&seq(&[2, 2, 2, 2])), Some(1));
    }

    #[test]
    fn blocking_condition_is_non_majorization() {
        for n in 1..=5 {
            let all: Vec<_> = enumerate_graphical(n).collect();
            for p in &all {
                let c = p.blocking_condition();
                for q in &all {
                    assert_eq!(c.is_satisfied_by(q).unwrap(), !p.majorizes(q).unwrap());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(v in proptest::collection::vec(0usize..12, 1..15)) {
            let s = DegreeSequence::new(v);
            prop_assert_eq!(DegreeSequence::parse(&s.render()).unwrap(), s.clone());
            let json = serde_json::to_string(&s).unwrap();
            prop_assert_eq!(serde_json::from_str::<DegreeSequence>(&json).unwrap(), s);
        }

        #[test]
        fn realization_has_requested_degrees(v in proptest::collection::vec(0usize..9, 1..10)) {
            let s = DegreeSequence::new(v);
            match s.realize() {
                Ok(g) => prop_assert_eq!(g.degree_sequence(), s),
                Err(e) => {
                    prop_assert_eq!(e, Error::NotGraphical);
                    prop_assert!(!s.is_graphical());
                }
            }
        }
    }
}
