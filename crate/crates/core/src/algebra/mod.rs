//! The operator algebra over weak quasi-RIFs: product, α-sums,
//! decontaminations, the granular sum and the pointwise order, with a small
//! term language and exhaustive law checks.

mod laws;
mod ops;
mod parse;
mod poly;
mod search;
mod term;

pub use laws::{check_laws, Law, LawReport};
pub use ops::{flat, leq, leq_witness, oplus, otimes, power, sharp, sigma, top};
pub use parse::parse_term;
pub use poly::{convex_polynomial, fit_alpha};
pub use search::{
    rif_failure_search, rif_pool, wqrif_pool, FailureKind, FailureSearchReport, FailureWitness,
    WitnessRecord, MAX_STORED_WITNESSES,
};
pub use term::{eval_term, AlgebraTerm, Environment, BUILTINS};
