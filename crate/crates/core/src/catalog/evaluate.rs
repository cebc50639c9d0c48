use super::clauses::{instances, Instance};
use super::{ConditionId, Params};
use crate::error::{Error, Result};
use crate::oracles::Requirement;
use crate::sequence::DegreeSequence;
use serde::Serialize;

/// A registry row instantiated for one parameter choice and one length.
#[derive(Clone, Debug)]
pub struct Condition {
    id: ConditionId,
    params: Params,
    n: usize,
    requirement: Requirement,
    instances: Vec<Instance>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailingClause {
    pub clause: &'static str,
    pub i: Option<i64>,
    pub j: Option<i64>,
}

impl std::fmt::Display for FailingClause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.clause)?;
        match (self.i, self.j) {
            (Some(i), Some(j)) => write!(f, " at i={i}, j={j}"),
            (Some(i), None) => write!(f, " at i={i}"),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceEval {
    pub clause: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    pub antecedent: bool,
    /// `None` when the antecedent already fails.
    pub consequent: Option<bool>,
}

impl InstanceEval {
    pub fn holds(&self) -> bool {
        !self.antecedent || self.consequent == Some(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub condition: ConditionId,
    pub params: Params,
    pub declared: bool,
    pub failing_clause: Option<FailingClause>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<InstanceEval>,
}

impl Verdict {
    pub fn without_trace(mut self) -> Self {
        self.trace.clear();
        self
    }
}

impl Condition {
    pub fn new(id: ConditionId, params: &Params, n: usize) -> Result<Self> {
        let checked = id.checked_params(params)?;
        let requirement = id.requirement(params)?;
        let instances = instances(id, &checked, n)?;
        Ok(Condition { id, params: *params, n, requirement, instances })
    }

    pub fn id(&self) -> ConditionId {
        self.id
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn requirement(&self) -> Requirement {
        self.requirement
    }

    pub fn instances(&self) -> &[Instance] {
        &self.instances
    }

    fn check_len(&self, pi: &DegreeSequence) -> Result<()> {
        if pi.len() != self.n {
            return Err(Error::LengthMismatch { left: pi.len(), right: self.n });
        }
        Ok(())
    }

    /// First violated instance, if any.
    pub fn first_failure(&self, pi: &DegreeSequence) -> Result<Option<&Instance>> {
        self.check_len(pi)?;
        for inst in &self.instances {
            if !inst.holds(pi)? {
                return Ok(Some(inst));
            }
        }
        Ok(None)
    }

    pub fn declares(&self, pi: &DegreeSequence) -> Result<bool> {
        Ok(self.first_failure(pi)?.is_none())
    }

    pub fn evaluate(&self, pi: &DegreeSequence) -> Result<Verdict> {
        self.check_len(pi)?;
        let mut trace = Vec::with_capacity(self.instances.len());
        let mut failing = None;
        for inst in &self.instances {
            let antecedent = inst.antecedent(pi)?;
            let consequent = if antecedent { Some(inst.consequent(pi)?) } else { None };
            let row = InstanceEval { clause: inst.clause, i: inst.i, j: inst.j, antecedent, consequent };
            if failing.is_none() && !row.holds() {
                failing = Some(FailingClause { clause: inst.clause, i: inst.i, j: inst.j });
            }
            trace.push(row);
        }
        Ok(Verdict {
            condition: self.id,
            params: self.params,
            declared: failing.is_none(),
            failing_clause: failing,
            trace,
        })
    }
}

/// Parameters are checked first, then graphicality, then the length domain.
pub fn evaluate(id: ConditionId, params: &Params, pi: &DegreeSequence) -> Result<Verdict> {
    id.checked_params(params)?;
    if !pi.is_graphical() {
        return Err(Error::NotGraphical);
    }
    Condition::new(id, params, pi.len())?.evaluate(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use crate::sequence::enumerate_graphical;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec())
    }

    fn fail_at(v: &Verdict) -> Option<(&'static str, Option<i64>)> {
        v.failing_clause.as_ref().map(|f| (f.clause, f.i))
    }

    #[test]
    fn ham_examples() {
        let none = Params::none();
        let v = evaluate(ConditionId::Ham, &none, &seq(&[1, 2, 2, 3])).unwrap();
        assert!(!v.declared);
        assert_eq!(fail_at(&v), Some(("A", Some(1))));
        let v = evaluate(ConditionId::Ham, &none, &seq(&[2; 5])).unwrap();
        assert_eq!(fail_at(&v), Some(("A", Some(2))));
        assert!(evaluate(ConditionId::Ham, &none, &seq(&[4; 5])).unwrap().declared);
    }

    #[test]
    fn tough_and_defic_examples() {
        let v = evaluate(ConditionId::Tough, &Params::t(Rational::new(5, 3)), &seq(&[3, 4, 4, 5, 5, 5])).unwrap();
        assert_eq!(fail_at(&v), Some(("A", Some(3))));
        assert!(evaluate(ConditionId::Defic, &Params::beta(0), &seq(&[2; 4])).unwrap().declared);
    }

    #[test]
    fn validation_order() {
        let bad = seq(&[1, 1, 1]);
        assert!(matches!(
            evaluate(ConditionId::Tough, &Params::t(Rational::new(1, 2)), &bad),
            Err(Error::ParamOutOfDomain(_))
        ));
        assert_eq!(evaluate(ConditionId::Ham, &Params::none(), &bad), Err(Error::NotGraphical));
        assert!(matches!(
            evaluate(ConditionId::Ham, &Params::none(), &seq(&[1, 1])),
            Err(Error::SequenceTooShort { n: 2, min: 3 })
        ));
    }

    #[test]
    fn trace_covers_every_instance() {
        let c = Condition::new(ConditionId::Edge3, &Params::none(), 12).unwrap();
        let v = c.evaluate(&seq(&[3; 12])).unwrap();
        assert_eq!(v.trace.len(), c.instances().len());
        assert_eq!(v.declared, v.failing_clause.is_none());
        assert!(v.trace.iter().all(|t| t.antecedent || t.consequent.is_none()));
    }

    #[test]
    fn verdict_json() {
        let v = evaluate(ConditionId::Ham, &Params::none(), &seq(&[1, 2, 2, 3])).unwrap().without_trace();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"condition":"HAM","params":{},"declared":false,"failing_clause":{"clause":"A","i":1,"j":null}}"#
        );
    }

    #[test]
    fn tough_one_matches_ham() {
        let t1 = Params::t(Rational::from_integer(1));
        for n in 3..=8 {
            let ham = Condition::new(ConditionId::Ham, &Params::none(), n).unwrap();
            let tough = Condition::new(ConditionId::Tough, &t1, n).unwrap();
            let kham = Condition::new(ConditionId::Kham, &Params::k(0), n).unwrap();
            for pi in enumerate_graphical(n) {
                let a = ham.evaluate(&pi).unwrap();
                let b = tough.evaluate(&pi).unwrap();
                assert_eq!(a.failing_clause, b.failing_clause, "{pi}");
                assert_eq!(a.declared, kham.declares(&pi).unwrap());
            }
        }
    }

    #[test]
    fn chi_and_arboricity_agree() {
        for n in 2..=8 {
            for k in 1..=n / 2 {
                let chi = Condition::new(ConditionId::ChiLe, &Params::k(2 * k), n).unwrap();
                let arb = Condition::new(ConditionId::ArbLe, &Params::k(k), n).unwrap();
                for pi in enumerate_graphical(n) {
                    assert_eq!(chi.declares(&pi).unwrap(), arb.declares(&pi).unwrap());
                }
            }
        }
    }

    #[test]
    fn hoang_corollary_is_weaker() {
        for n in 3..=8 {
            let h = Condition::new(ConditionId::Hoang, &Params::none(), n).unwrap();
            let c = Condition::new(ConditionId::HoangCor, &Params::none(), n).unwrap();
            for pi in enumerate_graphical(n) {
                if c.declares(&pi).unwrap() {
                    assert!(h.declares(&pi).unwrap(), "{pi}");
                }
            }
        }
    }

    #[test]
    fn binding_rows_agree_at_one() {
        let one = Params::b(Rational::from_integer(1));
        for n in 2..=8 {
            let lo = Condition::new(ConditionId::Bindlo, &one, n).unwrap();
            let hi = Condition::new(ConditionId::Bindhi, &one, n).unwrap();
            for pi in enumerate_graphical(n) {
                assert_eq!(lo.declares(&pi).unwrap(), hi.declares(&pi).unwrap(), "{pi}");
            }
        }
    }

    #[test]
    fn boundary_instances() {
        let none = Params::none();
        let k5_plus_point = seq(&[0, 4, 4, 4, 4, 4]);
        assert!(!evaluate(ConditionId::Defic, &Params::beta(0), &k5_plus_point).unwrap().declared);
        let v = evaluate(ConditionId::Kpath, &Params::k(1), &k5_plus_point).unwrap();
        assert_eq!(fail_at(&v), Some(("A", Some(0))));
        assert!(!evaluate(ConditionId::Bind1_1f, &none, &seq(&[2; 6])).unwrap().declared);
        assert!(evaluate(ConditionId::Bind1Ham, &none, &seq(&[2, 2, 2, 4, 4])).unwrap().declared);
        assert!(evaluate(ConditionId::F2Tough1, &none, &seq(&[0, 2, 2, 2, 4, 4])).unwrap().declared);
    }

    #[test]
    fn welsh_powell_is_least_chromatic_row() {
        use crate::catalog::welsh_powell_chi_upper;
        for n in 1..=8 {
            for pi in enumerate_graphical(n) {
                let least = (1..=n)
                    .find(|&k| Condition::new(ConditionId::ChiLe, &Params::k(k), n).unwrap().declares(&pi).unwrap())
                    .unwrap();
                assert_eq!(welsh_powell_chi_upper(&pi).unwrap().integer, least as i64, "{pi}");
            }
        }
    }
}
