//! Inclusion functions `κ : S × S → [0, 1]` over a finite space.

mod axioms;
mod constructors;
mod prif;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::{in_unit_interval, one, Rational};
use crate::space::{ElemId, GranularSpace};

pub use axioms::{
    check_rif_axiom, check_rif_axiom_with, classify, AxiomProfile, Basis, RifAxiom, RifAxiomReport,
    RifClass,
};
pub use constructors::{k0, k0_value, k1, k2, kst};
pub use prif::{verify_prif, ImplicationVerdict};

/// Largest space an inclusion function may be tabulated over.
pub const MAX_TABULATED_ELEMENTS: usize = 4096;

/// A total table of exact values in `[0, 1]`, indexed by element pairs.
#[derive(Clone)]
pub struct InclusionFunction {
    space: Arc<GranularSpace>,
    values: Vec<Rational>,
    label: String,
}

impl fmt::Debug for InclusionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InclusionFunction")
            .field("label", &self.label)
            .field("elements", &self.space.len())
            .finish()
    }
}

impl PartialEq for InclusionFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_space(other) && self.values == other.values
    }
}

impl InclusionFunction {
    pub fn tabulate(
        space: &Arc<GranularSpace>,
        label: impl Into<String>,
        mut value: impl FnMut(ElemId, ElemId) -> Result<Rational>,
    ) -> Result<Self> {
        let n = space.len();
        if n > MAX_TABULATED_ELEMENTS {
            return Err(Error::Size(format!(
                "{n} elements; inclusion functions are tabulated up to {MAX_TABULATED_ELEMENTS}"
            )));
        }
        let mut values = Vec::with_capacity(n * n);
        for (a, b) in space.pairs() {
            values.push(value(a, b)?);
        }
        Self::from_values(space, label, values)
    }

    /// Builds from a row-major `n × n` table; every value must lie in `[0, 1]`.
    pub fn from_values(
        space: &Arc<GranularSpace>,
        label: impl Into<String>,
        values: Vec<Rational>,
    ) -> Result<Self> {
        let n = space.len();
        if values.len() != n * n {
            return Err(Error::Input(format!(
                "expected {} values, got {}",
                n * n,
                values.len()
            )));
        }
        if let Some(i) = values.iter().position(|q| !in_unit_interval(q)) {
            return Err(Error::Parameter(format!(
                "value {} at ({}, {}) lies outside [0, 1]",
                values[i],
                space.name(ElemId(i / n)),
                space.name(ElemId(i % n))
            )));
        }
        Ok(InclusionFunction {
            space: Arc::clone(space),
            values,
            label: label.into(),
        })
    }

    /// Applies `op` pointwise; the result is checked to stay in `[0, 1]`.
    pub(crate) fn map(
        &self,
        label: impl Into<String>,
        op: impl Fn(&Rational) -> Rational,
    ) -> Result<Self> {
        Self::from_values(&self.space, label, self.values.iter().map(op).collect())
    }

    pub(crate) fn zip(
        &self,
        other: &Self,
        label: impl Into<String>,
        op: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Self> {
        if !self.same_space(other) {
            return Err(Error::MismatchedSpaces);
        }
        Self::from_values(
            &self.space,
            label,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(x, y)| op(x, y))
                .collect(),
        )
    }

    pub fn value(&self, a: ElemId, b: ElemId) -> &Rational {
        &self.values[a.0 * self.space.len() + b.0]
    }

    pub fn is_one(&self, a: ElemId, b: ElemId) -> bool {
        *self.value(a, b) == one()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn space(&self) -> &Arc<GranularSpace> {
        &self.space
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn same_space(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space
    }

    pub fn image(&self) -> BTreeSet<Rational> {
        self.values.iter().cloned().collect()
    }

    /// The largest value strictly below 1, if any. On a finite space this is
    /// the bound `b < 1` with `image ⊆ [0, b] ∪ {1}`.
    pub fn max_below_one(&self) -> Option<Rational> {
        let one = one();
        self.values.iter().filter(|q| **q < one).max().cloned()
    }
}
