//! Convex polynomials over inclusion functions and one-parameter fitting.

use num_traits::Zero;

use super::ops;
use crate::error::{Error, Result};
use crate::inclusion::InclusionFunction;
use crate::rational::{in_unit_interval, one, ratio, zero, Rational};
use crate::space::ElemId;

/// Pointwise `Σ αᵢ · fᵢ^{nᵢ}`. The coefficients must lie in `[0, 1]` and sum
/// to exactly 1; every power must be at least 1.
pub fn convex_polynomial(
    coeffs: &[Rational],
    powers: &[u32],
    fns: &[InclusionFunction],
) -> Result<InclusionFunction> {
    if coeffs.is_empty() || coeffs.len() != powers.len() || coeffs.len() != fns.len() {
        return Err(Error::Input(format!(
            "need equally many coefficients, powers and functions (got {}, {}, {})",
            coeffs.len(),
            powers.len(),
            fns.len()
        )));
    }
    if let Some(c) = coeffs.iter().find(|c| !in_unit_interval(c)) {
        return Err(Error::Parameter(format!(
            "coefficient {c} lies outside [0, 1]"
        )));
    }
    let sum: Rational = coeffs.iter().sum();
    if sum != one() {
        return Err(Error::Parameter(format!(
            "coefficients sum to {sum}, not 1"
        )));
    }
    let space = fns[0].space();
    if fns.iter().any(|f| !f.same_space(&fns[0])) {
        return Err(Error::MismatchedSpaces);
    }
    let terms = fns
        .iter()
        .zip(powers)
        .map(|(f, &n)| ops::power(f, n))
        .collect::<Result<Vec<_>>>()?;
    let mut values = vec![zero(); space.len() * space.len()];
    for (c, t) in coeffs.iter().zip(&terms) {
        for (acc, x) in values.iter_mut().zip(t.values()) {
            *acc += c * x;
        }
    }
    let label = coeffs
        .iter()
        .zip(powers)
        .zip(fns)
        .map(|((c, n), f)| format!("{c}*{}^{n}", f.label()))
        .collect::<Vec<_>>()
        .join(" + ");
    InclusionFunction::from_values(space, label, values)
}

/// Least-squares `α` for `α f + (1 − α) h ≈ v` over the samples, clamped to
/// `[0, 1]`. When `f` and `h` agree on every sampled pair the objective is
/// constant and `1/2` is returned.
pub fn fit_alpha(
    f: &InclusionFunction,
    h: &InclusionFunction,
    samples: &[((ElemId, ElemId), Rational)],
) -> Result<Rational> {
    if samples.is_empty() {
        return Err(Error::Input("fit_alpha needs at least one sample".into()));
    }
    if !f.same_space(h) {
        return Err(Error::MismatchedSpaces);
    }
    let n = f.space().len();
    let mut num = zero();
    let mut den = zero();
    for ((a, b), v) in samples {
        if a.0 >= n || b.0 >= n {
            return Err(Error::Input(format!(
                "sample pair ({}, {}) is out of range",
                a.0, b.0
            )));
        }
        if !in_unit_interval(v) {
            return Err(Error::Parameter(format!("target {v} lies outside [0, 1]")));
        }
        let hv = h.value(*a, *b);
        let d = f.value(*a, *b) - hv;
        num += &d * (v - hv);
        den += &d * &d;
    }
    if den.is_zero() {
        return Ok(ratio(1, 2));
    }
    let alpha = num / den;
    Ok(if alpha < zero() {
        zero()
    } else if alpha > one() {
        one()
    } else {
        alpha
    })
}
