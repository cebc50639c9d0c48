//! Exact, exhaustive graph-property oracles for small graphs.

pub mod measures;
pub mod properties;
pub mod realizations;

pub use measures::{binding_number, deficiency, toughness, CycleTable};
pub use properties::{has_property, has_property_with, Direction, GraphFacts, OracleLimits, PropertyId};
pub use realizations::{
    conditionally_forcibly, enumerate_realizations, forcibly, forcibly_report, visit_realizations, ForciblyReport,
    Requirement,
};
