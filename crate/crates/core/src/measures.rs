//! Rough measures and relations on set-extensional spaces.
//!
//! Approximations are the space's own `l` and `u`, read through carriers.

use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::inclusion::{k0_value, InclusionFunction};
use crate::rational::{one, ratio, zero, Rational};
use crate::space::{ElemId, GranularSpace};

/// VPRS thresholds with `0 < α ≤ β < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VprsParams {
    alpha: Rational,
    beta: Rational,
}

impl VprsParams {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if !(zero() < alpha && alpha <= beta && beta < one()) {
            return Err(Error::Parameter(format!(
                "VPRS needs 0 < alpha <= beta < 1, got alpha = {alpha}, beta = {beta}"
            )));
        }
        Ok(VprsParams { alpha, beta })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }
}

fn lower_carrier(s: &GranularSpace, x: ElemId) -> Result<AtomSet> {
    s.require_carrier(s.lower(x))
}

fn upper_carrier(s: &GranularSpace, x: ElemId) -> Result<AtomSet> {
    s.require_carrier(s.upper(x))
}

/// `#(xˡ) / #(xᵘ)`.
pub fn accuracy_degree(s: &GranularSpace, x: ElemId) -> Result<Rational> {
    s.require_set_extensional()?;
    let (l, u) = (lower_carrier(s, x)?, upper_carrier(s, x)?);
    if u.is_empty() {
        return Err(Error::UndefinedMeasure(format!(
            "upper approximation of `{}` is empty",
            s.name(x)
        )));
    }
    Ok(ratio(l.len() as i64, u.len() as i64))
}

/// `1 − k0(a, b)`.
pub fn misclassification(s: &GranularSpace, a: ElemId, b: ElemId) -> Result<Rational> {
    let (ca, cb) = (s.require_carrier(a)?, s.require_carrier(b)?);
    Ok(one() - k0_value(ca, cb))
}

/// Rough inclusion: `Aˡ ⊆ Bˡ` and `Aᵘ ⊆ Bᵘ`.
pub fn rough_leq(s: &GranularSpace, a: ElemId, b: ElemId) -> Result<bool> {
    Ok(lower_carrier(s, a)?.is_subset(lower_carrier(s, b)?)
        && upper_carrier(s, a)?.is_subset(upper_carrier(s, b)?))
}

pub fn rough_eq(s: &GranularSpace, a: ElemId, b: ElemId) -> Result<bool> {
    Ok(rough_leq(s, a, b)? && rough_leq(s, b, a)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Regions {
    pub positive: AtomSet,
    pub negative: AtomSet,
    pub boundary: AtomSet,
}

/// Positive `Aˡ`, negative `⊤ \ Aᵘ` and boundary `Aᵘ \ Aˡ`.
pub fn regions(s: &GranularSpace, a: ElemId) -> Result<Regions> {
    let top = s.require_carrier(s.top())?;
    let (l, u) = (lower_carrier(s, a)?, upper_carrier(s, a)?);
    Ok(Regions {
        positive: l,
        negative: top.difference(u),
        boundary: u.difference(l),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VprsApproximation {
    pub lower: AtomSet,
    pub upper: AtomSet,
}

fn threshold_union(
    s: &GranularSpace,
    f: &InclusionFunction,
    p: &VprsParams,
    target: ElemId,
) -> Result<VprsApproximation> {
    if !std::ptr::eq(f.space().as_ref(), s) && **f.space() != *s {
        return Err(Error::MismatchedSpaces);
    }
    let mut out = VprsApproximation {
        lower: AtomSet::EMPTY,
        upper: AtomSet::EMPTY,
    };
    for &h in s.granules() {
        let c = s.require_carrier(h)?;
        let v = f.value(h, target);
        if v > &p.beta {
            out.lower = out.lower.union(c);
        }
        if v > &p.alpha {
            out.upper = out.upper.union(c);
        }
    }
    Ok(out)
}

/// Unions of granules `h` with `f(h, X) > β` (lower) and `> α` (upper).
pub fn vprs(
    s: &GranularSpace,
    f: &InclusionFunction,
    p: &VprsParams,
    x: ElemId,
) -> Result<VprsApproximation> {
    s.require_set_extensional()?;
    threshold_union(s, f, p, x)
}

/// As [`vprs`], thresholding `f(h, Xˡ)` instead of `f(h, X)`.
pub fn fixed_vprs(
    s: &GranularSpace,
    f: &InclusionFunction,
    p: &VprsParams,
    x: ElemId,
) -> Result<VprsApproximation> {
    s.require_set_extensional()?;
    threshold_union(s, f, p, s.lower(x))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fixtures::abstract_example;
    use crate::inclusion::k0;

    #[test]
    fn accuracy_on_fixture() {
        let s = abstract_example();
        assert_eq!(
            accuracy_degree(&s, s.id("ab").unwrap()).unwrap(),
            ratio(1, 4)
        );
        assert_eq!(
            accuracy_degree(&s, s.id("e").unwrap()).unwrap(),
            ratio(1, 2)
        );
        assert_eq!(accuracy_degree(&s, s.id("bce").unwrap()).unwrap(), one());
        assert!(matches!(
            accuracy_degree(&s, s.bottom()),
            Err(Error::UndefinedMeasure(_))
        ));
    }

    #[test]
    fn misclassification_on_fixture() {
        let s = abstract_example();
        let (ab, bc) = (s.id("ab").unwrap(), s.id("bc").unwrap());
        assert_eq!(misclassification(&s, ab, bc).unwrap(), ratio(1, 2));
        assert_eq!(misclassification(&s, ab, ab).unwrap(), zero());
        assert_eq!(misclassification(&s, s.bottom(), bc).unwrap(), zero());
    }

    #[test]
    fn rough_order_and_regions_on_fixture() {
        let s = abstract_example();
        let (e, be, ab) = (s.id("e").unwrap(), s.id("be").unwrap(), s.id("ab").unwrap());
        assert!(rough_leq(&s, e, be).unwrap());
        assert!(rough_eq(&s, ab, ab).unwrap());
        let r = regions(&s, ab).unwrap();
        assert_eq!(s.show_carrier(r.positive), "{a}");
        assert_eq!(s.show_carrier(r.negative), "{}");
        assert_eq!(s.show_carrier(r.boundary), "{b,c,e}");
    }

    #[test]
    fn vprs_on_fixture() {
        let s = Arc::new(abstract_example());
        let f = k0(&s).unwrap();
        let p = VprsParams::new(ratio(1, 4), ratio(1, 2)).unwrap();
        let ab = s.id("ab").unwrap();
        let fixed = fixed_vprs(&s, &f, &p, ab).unwrap();
        assert_eq!(s.show_carrier(fixed.lower), "{a}");
        let plain = vprs(&s, &f, &p, ab).unwrap();
        assert_eq!(s.show_carrier(plain.upper), "{a,b,c,e}");
        assert_eq!(s.show_carrier(plain.lower), "{a}");
    }

    #[test]
    fn parameters_are_validated() {
        assert!(VprsParams::new(zero(), ratio(1, 2)).is_err());
        assert!(VprsParams::new(ratio(1, 2), ratio(1, 3)).is_err());
        assert!(VprsParams::new(ratio(1, 2), one()).is_err());
        assert!(VprsParams::new(ratio(1, 2), ratio(1, 2)).is_ok());
    }
}
