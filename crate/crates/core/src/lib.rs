//! Finite granular operator spaces and generalized rough inclusion functions.
//!
//! The crate models a space as a finite partial algebraic system
//! `⟨S, G, l, u, P, ≤, ∨, ∧, ⊥, ⊤⟩` (see [`space::GranularSpace`]), builds
//! inclusion functions over it with exact rational values, checks the axioms
//! that separate RIFs, quasi RIFs and weak quasi RIFs, and implements the
//! operator algebra on weak quasi RIFs (`⊗`, `⊕α`, `♯`, `♭`, `ς`, `⊤`).
//!
//! Modules:
//! - [`table`]: information tables, indiscernibility, classical approximations.
//! - [`space`]: spaces, the space file format, axiom and admissibility checks.
//! - [`inclusion`]: `k0`/`k1`/`k2`/`kst`, the axiom family and classification.
//! - [`algebra`]: operators, the term language, law checks, fitting.
//! - [`measures`]: accuracy, misclassification, regions and VPRS.
//! - [`random`]: seeded generators used by the test suites and the CLI.

pub mod algebra;
pub mod atoms;
pub mod error;
pub mod fixtures;
pub mod inclusion;
pub mod measures;
pub mod random;
pub mod rational;
pub mod space;
pub mod table;
mod tally;

pub use algebra::{AlgebraTerm, Environment, Law, LawReport};
pub use atoms::AtomSet;
pub use error::{Error, Result};
pub use inclusion::{InclusionFunction, RifAxiom, RifAxiomReport, RifClass};
pub use rational::Rational;
pub use space::{Axiom, AxiomReport, ElemId, Flavor, GranularSpace};
pub use table::{EquivalenceRelation, InformationTable};

/// Maximum number of witness tuples stored per report. The total count of
/// violations is always recorded separately.
pub const MAX_WITNESSES: usize = 32;
