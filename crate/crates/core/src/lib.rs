//! Finite modules over semirings: summand-absorbing submodules, exchange
//! equivalence and amalgamation, SA-extensions and complements, order
//! structure, bipotent retractions and actions, plus a seeded theorem
//! harness that checks the whole theory on random finite instances.

pub mod action;
pub mod algebra;
pub mod error;
pub mod exchange;
pub mod extensions;
pub mod fixtures;
pub mod harness;
pub mod lattice;
pub mod mask;
pub mod oracle;
pub mod order;
pub mod retraction;

pub use action::ActionTable;
pub use algebra::{FiniteModule, Homomorphism, SemiringTable, ValidationReport, Violation};
pub use error::{Error, Result};
pub use exchange::{AmalgamModule, ExchangePartition, TupleSpace};
pub use extensions::{ExtensionReport, ReduceReport, StripReport};
pub use lattice::{ElementSet, Submodule};
pub use mask::Mask;
pub use order::{QuasiOrder, QuotientModule};
pub use retraction::{Retraction, RetractionReport, RetractionSpec};
pub use harness::{InstanceSpec, Report, SuiteResult};
