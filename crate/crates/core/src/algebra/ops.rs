use std::sync::Arc;

use crate::error::{Error, Result};
use crate::inclusion::InclusionFunction;
use crate::rational::{in_unit_interval, one, Rational};
use crate::space::{ElemId, GranularSpace};

/// The constant-1 function.
pub fn top(s: &Arc<GranularSpace>) -> Result<InclusionFunction> {
    InclusionFunction::from_values(s, "top", vec![one(); s.len() * s.len()])
}

/// Pointwise product `f ⊗ g`.
pub fn otimes(f: &InclusionFunction, g: &InclusionFunction) -> Result<InclusionFunction> {
    f.zip(
        g,
        format!("otimes({}, {})", f.label(), g.label()),
        |x, y| x * y,
    )
}

/// Convex combination `α f + (1 − α) g`.
pub fn oplus(
    alpha: &Rational,
    f: &InclusionFunction,
    g: &InclusionFunction,
) -> Result<InclusionFunction> {
    check_alpha(alpha)?;
    let beta = one() - alpha;
    f.zip(
        g,
        format!("oplus({alpha}, {}, {})", f.label(), g.label()),
        |x, y| alpha * x + &beta * y,
    )
}

pub(crate) fn check_alpha(alpha: &Rational) -> Result<()> {
    if in_unit_interval(alpha) {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "alpha = {alpha} lies outside [0, 1]"
        )))
    }
}

fn compose(
    f: &InclusionFunction,
    label: String,
    map: impl Fn(ElemId) -> ElemId,
) -> Result<InclusionFunction> {
    let s = f.space();
    InclusionFunction::tabulate(s, label, |a, b| Ok(f.value(map(a), map(b)).clone()))
}

/// `(♯f)(a, b) = f(aˡ, bˡ)`.
pub fn sharp(f: &InclusionFunction) -> Result<InclusionFunction> {
    let s = Arc::clone(f.space());
    compose(f, format!("sharp({})", f.label()), |x| s.lower(x))
}

/// `(♭f)(a, b) = f(aᵘ, bᵘ)`.
pub fn flat(f: &InclusionFunction) -> Result<InclusionFunction> {
    let s = Arc::clone(f.space());
    compose(f, format!("flat({})", f.label()), |x| s.upper(x))
}

/// Granular sum: `(ςf)(a, b)` is the largest `f(w, bˡ)` over granules `w`
/// with `P w a`, or 1 when `a` has no granule part.
pub fn sigma(f: &InclusionFunction) -> Result<InclusionFunction> {
    let s = Arc::clone(f.space());
    let parts: Vec<Vec<ElemId>> = s
        .elements()
        .map(|a| {
            s.granules()
                .iter()
                .copied()
                .filter(|&w| s.part(w, a))
                .collect()
        })
        .collect();
    InclusionFunction::tabulate(&s, format!("sigma({})", f.label()), |a, b| {
        let bl = s.lower(b);
        Ok(parts[a.0]
            .iter()
            .map(|&w| f.value(w, bl))
            .max()
            .cloned()
            .unwrap_or_else(one))
    })
}

/// `fⁿ = f ⊗ … ⊗ f`, `n ≥ 1`.
pub fn power(f: &InclusionFunction, n: u32) -> Result<InclusionFunction> {
    if n == 0 {
        return Err(Error::Parameter("powers start at 1".into()));
    }
    let exp = n as usize;
    f.map(format!("pow({}, {n})", f.label()), |x| {
        num_traits::pow(x.clone(), exp)
    })
}

/// `f ⪯ g`: `f(a, b) ≤ g(a, b)` at every pair.
pub fn leq(f: &InclusionFunction, g: &InclusionFunction) -> Result<bool> {
    Ok(leq_witness(f, g)?.is_none())
}

/// The first pair where `f(a, b) > g(a, b)`, if any.
pub fn leq_witness(
    f: &InclusionFunction,
    g: &InclusionFunction,
) -> Result<Option<(ElemId, ElemId)>> {
    if !f.same_space(g) {
        return Err(Error::MismatchedSpaces);
    }
    Ok(f.space()
        .pairs()
        .find(|&(a, b)| f.value(a, b) > g.value(a, b)))
}
