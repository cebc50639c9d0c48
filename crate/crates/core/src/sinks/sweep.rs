use crate::catalog::{Condition, ConditionId, FailingClause, Params};
use crate::error::{Error, Result};
use crate::sequence::{enumerate_graphical, DegreeSequence};
use serde::Serialize;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// A registry row with its parameter, written `id` or `id:value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSide {
    pub condition: ConditionId,
    pub params: Params,
}

impl SweepSide {
    pub fn new(condition: ConditionId, params: Params) -> Self {
        SweepSide { condition, params }
    }
}

impl FromStr for SweepSide {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (name, value) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let condition: ConditionId = name.parse()?;
        let params = match value {
            Some(v) => Params::parse_for(condition, v)?,
            None => Params::none(),
        };
        condition.checked_params(&params)?;
        Ok(SweepSide { condition, params })
    }
}

impl fmt::Display for SweepSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.params.is_empty() {
            write!(f, "{}", self.condition)
        } else {
            write!(f, "{}({})", self.condition, self.params)
        }
    }
}

/// A sequence declared by the first row and not by the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Containment {
    pub n: usize,
    pub sequence: DegreeSequence,
    pub fails: FailingClause,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContainmentReport {
    pub from: SweepSide,
    pub to: SweepSide,
    pub checked: usize,
    /// Lengths where either row is undefined, with the reason.
    pub skipped: Vec<(usize, String)>,
    pub holds: bool,
    pub counterexamples: Vec<Containment>,
}

/// Checks declared(from) ⊆ declared(to) on every graphical sequence of each
/// length in `ns`.
pub fn bm_sweep(from: SweepSide, to: SweepSide, ns: RangeInclusive<usize>) -> Result<ContainmentReport> {
    from.condition.checked_params(&from.params)?;
    to.condition.checked_params(&to.params)?;
    let mut report =
        ContainmentReport { from, to, checked: 0, skipped: Vec::new(), holds: true, counterexamples: Vec::new() };
    for n in ns {
        let pair = Condition::new(from.condition, &from.params, n)
            .and_then(|a| Ok((a, Condition::new(to.condition, &to.params, n)?)));
        let (a, b) = match pair {
            Ok(p) => p,
            Err(e) => {
                report.skipped.push((n, e.to_string()));
                continue;
            }
        };
        for pi in enumerate_graphical(n) {
            report.checked += 1;
            if !a.declares(&pi)? {
                continue;
            }
            if let Some(inst) = b.first_failure(&pi)? {
                let fails = FailingClause { clause: inst.clause, i: inst.i, j: inst.j };
                report.counterexamples.push(Containment { n, sequence: pi, fails });
            }
        }
    }
    report.holds = report.counterexamples.is_empty();
    Ok(report)
}

/// `(h-1)^(h-1) (n-h)^(n-2h+2) (n-1)^(h-1)` with `h = floor(n/2)`: declared
/// by the 1-binding condition yet failing the hamiltonian one at `i = h - 1`.
pub fn binding_one_boundary(n: usize) -> Result<DegreeSequence> {
    if n < 4 {
        return Err(Error::ParamOutOfRange(format!("n = {n} must be at least 4")));
    }
    let h = n / 2;
    Ok(DegreeSequence::from_runs(&[(h - 1, h - 1), (n - h, n - 2 * h + 2), (n - 1, h - 1)]))
}

/// `(2m-3)^(m-2) (2m-2)^2 (3m-4)^(2m-3)` on `3m - 3` vertices: declared by
/// the `(2 - 1/m)`-binding condition yet failing the `(2 - 1/m)`-tough one
/// at `i = 2m - 3`.
pub fn binding_tough_boundary(m: usize) -> Result<DegreeSequence> {
    if m < 3 {
        return Err(Error::ParamOutOfRange(format!("m = {m} must be at least 3")));
    }
    Ok(DegreeSequence::from_runs(&[(2 * m - 3, m - 2), (2 * m - 2, 2), (3 * m - 4, 2 * m - 3)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn side_parsing() {
        let s: SweepSide = "bindhi:3/2".parse().unwrap();
        assert_eq!(s, SweepSide::new(ConditionId::Bindhi, Params::b(Rational::new(3, 2))));
        assert_eq!(s.to_string(), "BINDHI(b=3/2)");
        let s: SweepSide = "ham".parse().unwrap();
        assert_eq!(s.params, Params::none());
        assert!("ham:1".parse::<SweepSide>().is_err());
        assert!("tough".parse::<SweepSide>().is_err());
        assert!("tough:1.5".parse::<SweepSide>().is_err());
        assert!("nope".parse::<SweepSide>().is_err());
    }

    #[test]
    fn tough_one_inside_ham() {
        let r = bm_sweep("tough:1".parse().unwrap(), "ham".parse().unwrap(), 3..=7).unwrap();
        assert!(r.holds);
        assert!(r.checked > 0);
    }

    #[test]
    fn binding_one_not_inside_ham() {
        let r = bm_sweep("bindhi:1".parse().unwrap(), "ham".parse().unwrap(), 6..=8).unwrap();
        assert!(!r.holds);
        let boundary = binding_one_boundary(6).unwrap();
        assert!(r.counterexamples.iter().any(|c| c.sequence == boundary));
    }

    #[test]
    fn boundary_shapes() {
        assert_eq!(binding_one_boundary(6).unwrap(), DegreeSequence::from_runs(&[(2, 2), (3, 2), (5, 2)]));
        assert_eq!(binding_one_boundary(7).unwrap().len(), 7);
        let s = binding_tough_boundary(3).unwrap();
        assert_eq!(s, DegreeSequence::from_runs(&[(3, 1), (4, 2), (5, 3)]));
        assert!(s.is_graphical());
        assert!(binding_tough_boundary(2).is_err());
    }

    #[test]
    fn skipped_lengths_are_reported() {
        let r = bm_sweep("ham".parse().unwrap(), "ham".parse().unwrap(), 1..=4).unwrap();
        assert_eq!(r.skipped.iter().map(|s| s.0).collect::<Vec<_>>(), vec![1, 2]);
        assert!(r.holds);
    }
}
