//! Finite semirings, modules over them, and validated homomorphisms.

mod hom;
mod module;
mod report;
mod semiring;

pub use hom::Homomorphism;
pub use module::{cyclic_semiring, FiniteModule, ModuleDocument};
pub use report::{ValidationReport, Violation};
pub use semiring::SemiringTable;
