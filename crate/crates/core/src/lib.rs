//! Degree-sequence conditions that force graph properties.
//!
//! A nondecreasing degree sequence `d_1 <= ... <= d_n` is *forcibly P* when
//! every graph realizing it has property P. The [`catalog`] holds the
//! classical Chvátal-type conditions, [`witness`] builds the extremal graphs
//! showing each one cannot be weakened, [`oracles`] decides properties by
//! exhaustive search, and [`sinks`] computes the maximal non-forcibly-P
//! sequences in the majorization order.

pub mod catalog;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod rational;
pub mod sequence;
pub mod sinks;
pub mod witness;

pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
pub use sequence::{enumerate_graphical, BlockingCondition, DegreeSequence};
