//! Registry of Chvátal-type degree conditions and a uniform evaluator.

pub mod bounds;
pub mod clauses;
pub mod evaluate;

use crate::error::{Error, Result};
use crate::oracles::{PropertyId, Requirement};
use crate::rational::{self, int, Rational};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

pub use bounds::{
    arboricity_trivial_upper, arboricity_upper, binding_toughness_bound, caro_wei, chi_trivial_upper,
    clique_chromatic_lower, murphy_alpha, murphy_f_trace, welsh_powell_chi_upper, BoundResult, FValue,
};
pub use clauses::{Atom, Instance};
pub use evaluate::{evaluate, Condition, FailingClause, InstanceEval, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConditionId {
    Ham,
    Kconn,
    Edge2,
    Edge3,
    Edgek,
    Bindlo,
    Bindhi,
    Tough,
    Toughlo,
    Defic,
    Factor2,
    Kham,
    Kpath,
    Hamconn,
    Kedgeham,
    Pancyc,
    AlphaLe,
    ChiLe,
    ArbLe,
    TraceHam,
    Conn2Ham,
    Bind1Ham,
    Bind1_1f,
    F2Tough1,
    Jung,
    Hoang,
    HoangCor,
    Tough1F2,
    Dirac,
}

/// Which parameter a row takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    None,
    K,
    B,
    T,
    Beta,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub best_monotone: bool,
    pub sufficient_only: bool,
    pub structural_min_degree: bool,
    pub implication: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowInfo {
    pub id: ConditionId,
    pub statement: &'static str,
    pub param: ParamKind,
    pub domain: &'static str,
    pub flags: Flags,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(with = "rational::serde_opt", skip_serializing_if = "Option::is_none", default)]
    pub b: Option<Rational>,
    #[serde(with = "rational::serde_opt", skip_serializing_if = "Option::is_none", default)]
    pub t: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<usize>,
}

impl Params {
    pub fn none() -> Self {
        Params::default()
    }

    pub fn k(k: usize) -> Self {
        Params { k: Some(k), ..Params::default() }
    }

    pub fn b(b: Rational) -> Self {
        Params { b: Some(b), ..Params::default() }
    }

    pub fn t(t: Rational) -> Self {
        Params { t: Some(t), ..Params::default() }
    }

    pub fn beta(beta: usize) -> Self {
        Params { beta: Some(beta), ..Params::default() }
    }

    pub fn is_empty(&self) -> bool {
        *self == Params::default()
    }

    /// Reads the row's one parameter from text: an integer for `k` and
    /// `beta`, `p/q` or an integer for `b` and `t`.
    pub fn parse_for(id: ConditionId, value: &str) -> Result<Params> {
        let count = || value.trim().parse::<usize>().map_err(|_| Error::MalformedToken(value.to_string()));
        match id.param_kind() {
            ParamKind::None => Err(Error::ParamOutOfDomain(format!("{id} takes no parameter"))),
            ParamKind::K => Ok(Params::k(count()?)),
            ParamKind::Beta => Ok(Params::beta(count()?)),
            ParamKind::B => Ok(Params::b(rational::parse_rational(value)?)),
            ParamKind::T => Ok(Params::t(rational::parse_rational(value)?)),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(b) = self.b {
            parts.push(format!("b={}", rational::format_rational(&b)));
        }
        if let Some(t) = self.t {
            parts.push(format!("t={}", rational::format_rational(&t)));
        }
        if let Some(beta) = self.beta {
            parts.push(format!("beta={beta}"));
        }
        f.write_str(&parts.join(","))
    }
}

const ALL: [ConditionId; 29] = [
    ConditionId::Ham,
    ConditionId::Kconn,
    ConditionId::Edge2,
    ConditionId::Edge3,
    ConditionId::Edgek,
    ConditionId::Bindlo,
    ConditionId::Bindhi,
    ConditionId::Tough,
    ConditionId::Toughlo,
    ConditionId::Defic,
    ConditionId::Factor2,
    ConditionId::Kham,
    ConditionId::Kpath,
    ConditionId::Hamconn,
    ConditionId::Kedgeham,
    ConditionId::Pancyc,
    ConditionId::AlphaLe,
    ConditionId::ChiLe,
    ConditionId::ArbLe,
    ConditionId::TraceHam,
    ConditionId::Conn2Ham,
    ConditionId::Bind1Ham,
    ConditionId::Bind1_1f,
    ConditionId::F2Tough1,
    ConditionId::Jung,
    ConditionId::Hoang,
    ConditionId::HoangCor,
    ConditionId::Tough1F2,
    ConditionId::Dirac,
];

impl ConditionId {
    pub fn all() -> &'static [ConditionId] {
        &ALL
    }

    /// Registry id, e.g. `HAM`, `BIND1_1F`.
    pub fn id(self) -> &'static str {
        use ConditionId::*;
        match self {
            Ham => "HAM",
            Kconn => "KCONN",
            Edge2 => "EDGE2",
            Edge3 => "EDGE3",
            Edgek => "EDGEK",
            Bindlo => "BINDLO",
            Bindhi => "BINDHI",
            Tough => "TOUGH",
            Toughlo => "TOUGHLO",
            Defic => "DEFIC",
            Factor2 => "FACTOR2",
            Kham => "KHAM",
            Kpath => "KPATH",
            Hamconn => "HAMCONN",
            Kedgeham => "KEDGEHAM",
            Pancyc => "PANCYC",
            AlphaLe => "ALPHA_LE",
            ChiLe => "CHI_LE",
            ArbLe => "ARB_LE",
            TraceHam => "TRACE_HAM",
            Conn2Ham => "CONN2_HAM",
            Bind1Ham => "BIND1_HAM",
            Bind1_1f => "BIND1_1F",
            F2Tough1 => "F2_TOUGH1",
            Jung => "JUNG",
            Hoang => "HOANG",
            HoangCor => "HOANG_COR",
            Tough1F2 => "TOUGH1_F2",
            Dirac => "DIRAC",
        }
    }

    pub fn info(self) -> RowInfo {
        use ConditionId::*;
        let bm = Flags { best_monotone: true, ..Flags::default() };
        let bm_imp = Flags { best_monotone: true, implication: true, ..Flags::default() };
        let suff = Flags { sufficient_only: true, ..Flags::default() };
        let (statement, param, domain, flags) = match self {
            Ham => ("forcibly hamiltonian", ParamKind::None, "n >= 3", bm),
            Kconn => ("forcibly k-connected", ParamKind::K, "n >= 2, 1 <= k <= n-1", bm),
            Edge2 => ("forcibly 2-edge-connected", ParamKind::None, "n >= 1", bm),
            Edge3 => ("forcibly 3-edge-connected", ParamKind::None, "n >= 1", bm),
            Edgek => ("forcibly k-edge-connected", ParamKind::K, "k >= 1", suff),
            Bindlo => ("forcibly b-binding", ParamKind::B, "0 < b <= 1, n >= 2", bm),
            Bindhi => ("forcibly b-binding", ParamKind::B, "b >= 1, n >= ceil(b+1)", bm),
            Tough => ("forcibly t-tough", ParamKind::T, "t >= 1, n >= ceil(t)+2", bm),
            Toughlo => ("forcibly t-tough", ParamKind::T, "0 < t < 1, n >= floor(1/t)+2", suff),
            Defic => ("forcibly beta-deficient", ParamKind::Beta, "0 <= beta <= n, n = beta mod 2", bm),
            Factor2 => ("forcibly contains a 2-factor", ParamKind::None, "n >= 3", bm),
            Kham => ("forcibly k-hamiltonian", ParamKind::K, "n >= 3, 0 <= k <= n-3", bm),
            Kpath => ("forcibly k-path-coverable", ParamKind::K, "k >= 1", bm),
            Hamconn => ("forcibly hamiltonian-connected", ParamKind::None, "n >= 4", bm),
            Kedgeham => ("forcibly k-edge-hamiltonian", ParamKind::K, "n >= 3, 0 <= k <= n-3", bm),
            Pancyc => ("forcibly pancyclic", ParamKind::None, "n >= 3", bm),
            AlphaLe => ("forcibly alpha(G) <= k", ParamKind::K, "1 <= k <= n-1", bm),
            ChiLe => ("forcibly chi(G) <= k", ParamKind::K, "1 <= k <= n", bm),
            ArbLe => ("forcibly a(G) <= k", ParamKind::K, "1 <= k <= n/2", bm),
            TraceHam => ("every traceable realization is hamiltonian", ParamKind::None, "n >= 3", bm_imp),
            Conn2Ham => ("every 2-connected realization is hamiltonian", ParamKind::None, "n >= 3", bm_imp),
            Bind1Ham => ("every 1-binding realization is hamiltonian", ParamKind::None, "n >= 3", bm_imp),
            Bind1_1f => ("every 1-binding realization has a 1-factor", ParamKind::None, "n even", bm_imp),
            F2Tough1 => ("every realization with a 2-factor is 1-tough", ParamKind::None, "n >= 3", bm_imp),
            Jung => (
                "minimum degree n/2 - 2 makes every 1-tough realization hamiltonian",
                ParamKind::None,
                "n >= 11",
                Flags { structural_min_degree: true, implication: true, ..Flags::default() },
            ),
            Hoang => (
                "every 1-tough realization is hamiltonian (two-index form)",
                ParamKind::None,
                "n >= 3",
                Flags { sufficient_only: true, implication: true, ..Flags::default() },
            ),
            HoangCor => (
                "every 1-tough realization is hamiltonian (one-index form)",
                ParamKind::None,
                "n >= 3",
                Flags { sufficient_only: true, implication: true, ..Flags::default() },
            ),
            Tough1F2 => ("every 1-tough realization has a 2-factor", ParamKind::None, "n >= 3", bm_imp),
            Dirac => (
                "minimum degree n/2 forces a hamiltonian cycle",
                ParamKind::None,
                "n >= 3",
                Flags { structural_min_degree: true, ..Flags::default() },
            ),
        };
        RowInfo { id: self, statement, param, domain, flags }
    }

    pub fn param_kind(self) -> ParamKind {
        self.info().param
    }

    /// What the condition guarantees for every realization.
    pub fn requirement(self, params: &Params) -> Result<Requirement> {
        use ConditionId::*;
        use PropertyId as P;
        let p = self.checked_params(params)?;
        let has = Requirement::has;
        let imp = Requirement::implies;
        Ok(match self {
            Ham | Dirac => has(P::Hamiltonian),
            Kconn => has(P::KConnected(p.k())),
            Edge2 => has(P::KEdgeConnected(2)),
            Edge3 => has(P::KEdgeConnected(3)),
            Edgek => has(P::KEdgeConnected(p.k())),
            Bindlo | Bindhi => has(P::Binding(p.b())),
            Tough | Toughlo => has(P::Tough(p.t())),
            Defic => has(P::Deficient(p.beta())),
            Factor2 => has(P::TwoFactor),
            Kham => has(P::KHamiltonian(p.k())),
            Kpath => has(P::KPathCoverable(p.k())),
            Hamconn => has(P::HamiltonianConnected),
            Kedgeham => has(P::KEdgeHamiltonian(p.k())),
            Pancyc => has(P::Pancyclic),
            AlphaLe => has(P::AlphaLe(p.k())),
            ChiLe => has(P::ChiLe(p.k())),
            ArbLe => has(P::ArboricityLe(p.k())),
            TraceHam => imp(P::Traceable, P::Hamiltonian),
            Conn2Ham => imp(P::KConnected(2), P::Hamiltonian),
            Bind1Ham => imp(P::Binding(int(1)), P::Hamiltonian),
            Bind1_1f => imp(P::Binding(int(1)), P::KFactor(1)),
            F2Tough1 => imp(P::TwoFactor, P::Tough(int(1))),
            Jung | Hoang | HoangCor => imp(P::Tough(int(1)), P::Hamiltonian),
            Tough1F2 => imp(P::Tough(int(1)), P::TwoFactor),
        })
    }

    /// Rows whose declared sets shrink as degrees grow.
    pub fn is_decreasing(self) -> bool {
        matches!(self, ConditionId::ChiLe | ConditionId::ArbLe)
    }

    /// Checks that exactly the row's own parameter is present and in range
    /// (range checks that involve `n` happen at evaluation time).
    pub fn checked_params(self, params: &Params) -> Result<CheckedParams> {
        let kind = self.param_kind();
        let extra = |name: &str| Err(Error::ParamOutOfDomain(format!("{} takes no parameter `{name}`", self.id())));
        if params.k.is_some() && kind != ParamKind::K {
            return extra("k");
        }
        if params.b.is_some() && kind != ParamKind::B {
            return extra("b");
        }
        if params.t.is_some() && kind != ParamKind::T {
            return extra("t");
        }
        if params.beta.is_some() && kind != ParamKind::Beta {
            return extra("beta");
        }
        let missing = |name: &str| Error::ParamOutOfDomain(format!("{} needs `{name}`", self.id()));
        let out = CheckedParams(*params);
        match kind {
            ParamKind::None => {}
            ParamKind::K => {
                let k = params.k.ok_or_else(|| missing("k"))?;
                let min = match self {
                    ConditionId::Kham | ConditionId::Kedgeham => 0,
                    _ => 1,
                };
                if k < min {
                    return Err(Error::ParamOutOfDomain(format!("{} needs k >= {min}", self.id())));
                }
            }
            ParamKind::B => {
                let b = params.b.ok_or_else(|| missing("b"))?;
                let ok = match self {
                    ConditionId::Bindlo => b > int(0) && b <= int(1),
                    _ => b >= int(1),
                };
                if !ok {
                    return Err(Error::ParamOutOfDomain(format!(
                        "{} does not accept b = {}",
                        self.id(),
                        rational::format_rational(&b)
                    )));
                }
            }
            ParamKind::T => {
                let t = params.t.ok_or_else(|| missing("t"))?;
                let ok = match self {
                    ConditionId::Toughlo => t > int(0) && t < int(1),
                    _ => t >= int(1),
                };
                if !ok {
                    return Err(Error::ParamOutOfDomain(format!(
                        "{} does not accept t = {}",
                        self.id(),
                        rational::format_rational(&t)
                    )));
                }
            }
            ParamKind::Beta => {
                params.beta.ok_or_else(|| missing("beta"))?;
            }
        }
        Ok(out)
    }

    /// Default sweep grid for this row.
    pub fn param_grid(self) -> Vec<Params> {
        let r = Rational::new;
        match (self, self.param_kind()) {
            (_, ParamKind::None) => vec![Params::none()],
            (ConditionId::Kham | ConditionId::Kedgeham, ParamKind::K) => (0..=4).map(Params::k).collect(),
            (_, ParamKind::K) => (1..=4).map(Params::k).collect(),
            (ConditionId::Bindlo, _) => vec![Params::b(r(1, 2)), Params::b(int(1))],
            (_, ParamKind::B) => [r(1, 1), r(3, 2), r(2, 1), r(5, 2)].into_iter().map(Params::b).collect(),
            (ConditionId::Toughlo, _) => [r(1, 2), r(1, 3), r(2, 3)].into_iter().map(Params::t).collect(),
            (_, ParamKind::T) => [r(1, 1), r(3, 2), r(2, 1)].into_iter().map(Params::t).collect(),
            (_, ParamKind::Beta) => (0..=2).map(Params::beta).collect(),
        }
    }
}

/// Parameters already validated against a row.
#[derive(Clone, Copy, Debug)]
pub struct CheckedParams(Params);

impl CheckedParams {
    pub fn k(&self) -> usize {
        self.0.k.unwrap_or(0)
    }
    pub fn b(&self) -> Rational {
        self.0.b.unwrap_or_else(|| int(0))
    }
    pub fn t(&self) -> Rational {
        self.0.t.unwrap_or_else(|| int(0))
    }
    pub fn beta(&self) -> usize {
        self.0.beta.unwrap_or(0)
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ConditionId {
    type Err = Error;

    /// Accepts the registry id in any case, with `-` or `_`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        ALL.iter().copied().find(|c| c.id() == norm).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

pub fn registry() -> Vec<RowInfo> {
    ALL.iter().map(|c| c.info()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_distinct_and_parse() {
        let mut seen = std::collections::HashSet::new();
        for &c in ConditionId::all() {
            assert!(seen.insert(c.id()));
            assert_eq!(c.id().parse::<ConditionId>().unwrap(), c);
            assert_eq!(c.id().to_lowercase().replace('_', "-").parse::<ConditionId>().unwrap(), c);
        }
        assert!("ore".parse::<ConditionId>().is_err());
    }

    #[test]
    fn flags_partition_rows() {
        for row in registry() {
            let f = row.flags;
            let kinds = [f.best_monotone, f.sufficient_only, f.structural_min_degree];
            assert_eq!(kinds.iter().filter(|&&x| x).count(), 1, "{}", row.id);
        }
        assert!(!ConditionId::Edgek.info().flags.best_monotone);
        assert!(ConditionId::Toughlo.info().flags.sufficient_only);
        assert!(ConditionId::Jung.info().flags.structural_min_degree);
    }

    #[test]
    fn params_are_validated() {
        assert!(ConditionId::Tough.requirement(&Params::t(Rational::new(1, 2))).is_err());
        assert!(ConditionId::Tough.requirement(&Params::none()).is_err());
        assert!(ConditionId::Ham.requirement(&Params::k(1)).is_err());
        assert!(ConditionId::Bindlo.requirement(&Params::b(int(2))).is_err());
        assert!(ConditionId::Bindhi.requirement(&Params::b(int(1))).is_ok());
        assert!(ConditionId::Kham.requirement(&Params::k(0)).is_ok());
        assert!(ConditionId::Kconn.requirement(&Params::k(0)).is_err());
    }

    #[test]
    fn params_json() {
        let p = Params::t(Rational::new(3, 2));
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"t":"3/2"}"#);
        let back: Params = serde_json::from_str(r#"{"t":"3/2"}"#).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&Params::none()).unwrap(), "{}");
    }
}
