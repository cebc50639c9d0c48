//! Named graph properties and their exhaustive decision procedures.

use super::measures::{self, CycleTable};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{format_rational, int, parse_rational, Rational};
use serde::{Serialize, Serializer};
use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropertyId {
    Hamiltonian,
    Traceable,
    KConnected(usize),
    KEdgeConnected(usize),
    Binding(Rational),
    Tough(Rational),
    Deficient(usize),
    TwoFactor,
    KFactor(usize),
    KHamiltonian(usize),
    KPathCoverable(usize),
    HamiltonianConnected,
    KEdgeHamiltonian(usize),
    Pancyclic,
    AlphaLe(usize),
    AlphaGe(usize),
    OmegaGe(usize),
    ChiLe(usize),
    ChiGe(usize),
    ArboricityLe(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Preserved by adding edges.
    Increasing,
    /// Preserved by deleting edges.
    Decreasing,
}

/// Which exhaustive search a property needs; each has its own size cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Subsets,
    Partitions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleLimits {
    /// Largest n for realization enumeration.
    pub realizations: usize,
    /// Largest n for cycle, path, cut and subset searches on one graph.
    pub graph: usize,
    /// Largest n for colouring and arboricity partition searches.
    pub partitions: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { realizations: 8, graph: 10, partitions: 8 }
    }
}

impl OracleLimits {
    /// Every cap raised to at least `n`.
    pub fn raised_to(self, n: usize) -> Self {
        OracleLimits {
            realizations: self.realizations.max(n),
            graph: self.graph.max(n),
            partitions: self.partitions.max(n),
        }
    }

    pub fn check(&self, p: PropertyId, n: usize) -> Result<()> {
        // hamiltonian cycles are stored as edge bitmasks
        if matches!(p, PropertyId::KEdgeHamiltonian(_)) && n > 11 {
            return Err(Error::ScaleExceeded { n, limit: 11 });
        }
        let limit = match p.oracle_kind() {
            OracleKind::Subsets => self.graph,
            OracleKind::Partitions => self.partitions,
        };
        if n > limit {
            return Err(Error::ScaleExceeded { n, limit });
        }
        Ok(())
    }
}

impl PropertyId {
    pub fn direction(self) -> Direction {
        match self {
            PropertyId::ChiLe(_) | PropertyId::ArboricityLe(_) | PropertyId::AlphaGe(_) => Direction::Decreasing,
            _ => Direction::Increasing,
        }
    }

    pub fn oracle_kind(self) -> OracleKind {
        match self {
            PropertyId::ChiLe(_) | PropertyId::ChiGe(_) | PropertyId::ArboricityLe(_) => OracleKind::Partitions,
            _ => OracleKind::Subsets,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::Hamiltonian => "hamiltonian",
            PropertyId::Traceable => "traceable",
            PropertyId::KConnected(_) => "k-connected",
            PropertyId::KEdgeConnected(_) => "k-edge-connected",
            PropertyId::Binding(_) => "binding",
            PropertyId::Tough(_) => "tough",
            PropertyId::Deficient(_) => "deficient",
            PropertyId::TwoFactor => "2-factor",
            PropertyId::KFactor(_) => "k-factor",
            PropertyId::KHamiltonian(_) => "k-hamiltonian",
            PropertyId::KPathCoverable(_) => "k-path-coverable",
            PropertyId::HamiltonianConnected => "hamiltonian-connected",
            PropertyId::KEdgeHamiltonian(_) => "k-edge-hamiltonian",
            PropertyId::Pancyclic => "pancyclic",
            PropertyId::AlphaLe(_) => "alpha-le",
            PropertyId::AlphaGe(_) => "alpha-ge",
            PropertyId::OmegaGe(_) => "omega-ge",
            PropertyId::ChiLe(_) => "chi-le",
            PropertyId::ChiGe(_) => "chi-ge",
            PropertyId::ArboricityLe(_) => "arboricity-le",
        }
    }

    pub fn names() -> &'static [&'static str] {
        &[
            "hamiltonian",
            "traceable",
            "k-connected:K",
            "k-edge-connected:K",
            "binding:B",
            "tough:T",
            "deficient:BETA",
            "2-factor",
            "k-factor:K",
            "k-hamiltonian:K",
            "k-path-coverable:K",
            "hamiltonian-connected",
            "k-edge-hamiltonian:K",
            "pancyclic",
            "alpha-le:K",
            "alpha-ge:K",
            "omega-ge:K",
            "chi-le:K",
            "chi-ge:K",
            "arboricity-le:K",
        ]
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match *self {
            PropertyId::KConnected(k)
            | PropertyId::KEdgeConnected(k)
            | PropertyId::Deficient(k)
            | PropertyId::KFactor(k)
            | PropertyId::KHamiltonian(k)
            | PropertyId::KPathCoverable(k)
            | PropertyId::KEdgeHamiltonian(k)
            | PropertyId::AlphaLe(k)
            | PropertyId::AlphaGe(k)
            | PropertyId::OmegaGe(k)
            | PropertyId::ChiLe(k)
            | PropertyId::ChiGe(k)
            | PropertyId::ArboricityLe(k) => write!(f, "{name}:{k}"),
            PropertyId::Binding(r) | PropertyId::Tough(r) => {
                write!(f, "{name}:{}", format_rational(&r))
            }
            _ => f.write_str(name),
        }
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    /// `name` or `name:value`, e.g. `hamiltonian`, `k-connected:2`, `tough:3/2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let unknown = || Error::UnknownName(s.to_string());
        let count = || -> Result<usize> {
            let a = arg.ok_or_else(|| Error::ParamOutOfDomain(format!("`{name}` needs a value")))?;
            a.trim().parse().map_err(|_| Error::MalformedToken(a.to_string()))
        };
        let ratio = || -> Result<Rational> {
            let a = arg.ok_or_else(|| Error::ParamOutOfDomain(format!("`{name}` needs a value")))?;
            let r = parse_rational(a)?;
            if r < int(0) {
                return Err(Error::ParamOutOfDomain(format!("`{name}` must be nonnegative")));
            }
            Ok(r)
        };
        let bare = |p: PropertyId| if arg.is_some() { Err(unknown()) } else { Ok(p) };
        match name {
            "hamiltonian" => bare(PropertyId::Hamiltonian),
            "traceable" => bare(PropertyId::Traceable),
            "2-factor" => bare(PropertyId::TwoFactor),
            "hamiltonian-connected" => bare(PropertyId::HamiltonianConnected),
            "pancyclic" => bare(PropertyId::Pancyclic),
            "k-connected" => Ok(PropertyId::KConnected(count()?)),
            "k-edge-connected" => Ok(PropertyId::KEdgeConnected(count()?)),
            "binding" => Ok(PropertyId::Binding(ratio()?)),
            "tough" => Ok(PropertyId::Tough(ratio()?)),
            "deficient" => Ok(PropertyId::Deficient(count()?)),
            "k-factor" => Ok(PropertyId::KFactor(count()?)),
            "k-hamiltonian" => Ok(PropertyId::KHamiltonian(count()?)),
            "k-path-coverable" => Ok(PropertyId::KPathCoverable(count()?)),
            "k-edge-hamiltonian" => Ok(PropertyId::KEdgeHamiltonian(count()?)),
            "alpha-le" => Ok(PropertyId::AlphaLe(count()?)),
            "alpha-ge" => Ok(PropertyId::AlphaGe(count()?)),
            "omega-ge" => Ok(PropertyId::OmegaGe(count()?)),
            "chi-le" => Ok(PropertyId::ChiLe(count()?)),
            "chi-ge" => Ok(PropertyId::ChiGe(count()?)),
            "arboricity-le" => Ok(PropertyId::ArboricityLe(count()?)),
            _ => Err(unknown()),
        }
    }
}

impl Serialize for PropertyId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Lazily computed invariants of one graph, shared across property queries.
pub struct GraphFacts<'g> {
    graph: &'g Graph,
    cycles: OnceCell<CycleTable>,
    toughness: OnceCell<Rational>,
    binding: OnceCell<Rational>,
    deficiency: OnceCell<usize>,
    kappa: OnceCell<usize>,
    lambda: OnceCell<usize>,
    alpha: OnceCell<usize>,
    omega: OnceCell<usize>,
    chi: OnceCell<usize>,
    arboricity: OnceCell<usize>,
    path_cover: OnceCell<usize>,
}

impl<'g> GraphFacts<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        GraphFacts {
            graph,
            cycles: OnceCell::new(),
            toughness: OnceCell::new(),
            binding: OnceCell::new(),
            deficiency: OnceCell::new(),
            kappa: OnceCell::new(),
            lambda: OnceCell::new(),
            alpha: OnceCell::new(),
            omega: OnceCell::new(),
            chi: OnceCell::new(),
            arboricity: OnceCell::new(),
            path_cover: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn cycles(&self) -> &CycleTable {
        self.cycles.get_or_init(|| CycleTable::new(self.graph))
    }

    pub fn toughness(&self) -> Rational {
        *self.toughness.get_or_init(|| measures::toughness(self.graph).0)
    }

    pub fn binding_number(&self) -> Rational {
        *self.binding.get_or_init(|| measures::binding_number(self.graph).0)
    }

    pub fn deficiency(&self) -> usize {
        *self.deficiency.get_or_init(|| measures::deficiency(self.graph))
    }

    pub fn vertex_connectivity(&self) -> usize {
        *self.kappa.get_or_init(|| measures::vertex_connectivity(self.graph))
    }

    pub fn edge_connectivity(&self) -> usize {
        *self.lambda.get_or_init(|| measures::edge_connectivity(self.graph))
    }

    pub fn independence_number(&self) -> usize {
        *self.alpha.get_or_init(|| measures::independence_number(self.graph))
    }

    pub fn clique_number(&self) -> usize {
        *self.omega.get_or_init(|| measures::clique_number(self.graph))
    }

    pub fn chromatic_number(&self) -> usize {
        *self.chi.get_or_init(|| measures::chromatic_number(self.graph))
    }

    pub fn vertex_arboricity(&self) -> usize {
        *self.arboricity.get_or_init(|| measures::vertex_arboricity(self.graph))
    }

    pub fn path_cover_number(&self) -> usize {
        *self.path_cover.get_or_init(|| self.cycles().path_cover_number())
    }

    pub fn has(&self, p: PropertyId) -> bool {
        let n = self.graph.n();
        match p {
            PropertyId::Hamiltonian => self.cycles().hamiltonian(),
            PropertyId::Traceable => self.cycles().traceable(),
            PropertyId::KConnected(k) => self.vertex_connectivity() >= k,
            PropertyId::KEdgeConnected(k) => self.edge_connectivity() >= k,
            PropertyId::Binding(b) => self.binding_number() >= b,
            PropertyId::Tough(t) => self.toughness() >= t,
            PropertyId::Deficient(beta) => self.deficiency() <= beta,
            PropertyId::TwoFactor => self.cycles().has_cycle_partition(),
            PropertyId::KFactor(k) => measures::has_k_factor(self.graph, k),
            PropertyId::KHamiltonian(k) => self.cycles().k_hamiltonian(k),
            PropertyId::KPathCoverable(k) => self.path_cover_number() <= k,
            PropertyId::HamiltonianConnected => measures::hamiltonian_connected(self.graph),
            PropertyId::KEdgeHamiltonian(k) => measures::k_edge_hamiltonian(self.graph, k),
            PropertyId::Pancyclic => self.cycles().pancyclic(),
            PropertyId::AlphaLe(k) => self.independence_number() <= k,
            PropertyId::AlphaGe(k) => self.independence_number() >= k,
            PropertyId::OmegaGe(k) => self.clique_number() >= k,
            PropertyId::ChiLe(k) => n == 0 || self.chromatic_number() <= k,
            PropertyId::ChiGe(k) => self.chromatic_number() >= k,
            PropertyId::ArboricityLe(k) => n == 0 || self.vertex_arboricity() <= k,
        }
    }
}

/// Exact answer under the default size caps.
pub fn has_property(p: PropertyId, g: &Graph) -> Result<bool> {
    has_property_with(p, g, &OracleLimits::default())
}

pub fn has_property_with(p: PropertyId, g: &Graph, limits: &OracleLimits) -> Result<bool> {
    limits.check(p, g.n())?;
    Ok(GraphFacts::new(g).has(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Graph {
        Graph::empty(3).join(&Graph::empty(3))
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn examples() {
        assert!(has_property(PropertyId::Hamiltonian, &cycle(5)).unwrap());
        assert!(!has_property(PropertyId::Pancyclic, &k33()).unwrap());
        assert!(has_property(PropertyId::ChiLe(2), &k33()).unwrap());
        let g = Graph::complete(1).join(&Graph::complete(3).union(&Graph::complete(3)));
        assert!(has_property(PropertyId::TwoFactor, &g).unwrap());
        assert!(!has_property(PropertyId::Hamiltonian, &g).unwrap());
    }

    #[test]
    fn scale_guard() {
        let big = Graph::complete(11);
        assert_eq!(has_property(PropertyId::Hamiltonian, &big), Err(Error::ScaleExceeded { n: 11, limit: 10 }));
        assert!(has_property(PropertyId::ChiLe(3), &Graph::complete(9)).is_err());
        let wide = OracleLimits::default().raised_to(11);
        assert!(has_property_with(PropertyId::Hamiltonian, &big, &wide).unwrap());
    }

    #[test]
    fn names_round_trip() {
        let all = [
            PropertyId::Hamiltonian,
            PropertyId::Traceable,
            PropertyId::KConnected(2),
            PropertyId::KEdgeConnected(3),
            PropertyId::Binding(Rational::new(3, 2)),
            PropertyId::Tough(int(1)),
            PropertyId::Deficient(0),
            PropertyId::TwoFactor,
            PropertyId::KFactor(1),
            PropertyId::KHamiltonian(1),
            PropertyId::KPathCoverable(2),
            PropertyId::HamiltonianConnected,
            PropertyId::KEdgeHamiltonian(1),
            PropertyId::Pancyclic,
            PropertyId::AlphaLe(2),
            PropertyId::AlphaGe(2),
            PropertyId::OmegaGe(3),
            PropertyId::ChiLe(2),
            PropertyId::ChiGe(3),
            PropertyId::ArboricityLe(1),
        ];
        assert_eq!(all.len(), PropertyId::names().len());
        for p in all {
            assert_eq!(p.to_string().parse::<PropertyId>().unwrap(), p);
        }
        assert!("hamiltonian:2".parse::<PropertyId>().is_err());
        assert!("tough:0.5".parse::<PropertyId>().is_err());
        assert!("planar".parse::<PropertyId>().is_err());
    }

    #[test]
    fn directions() {
        assert_eq!(PropertyId::ChiLe(2).direction(), Direction::Decreasing);
        assert_eq!(PropertyId::AlphaLe(2).direction(), Direction::Increasing);
        assert_eq!(PropertyId::ArboricityLe(1).direction(), Direction::Decreasing);
    }
}
