//! Concrete inclusion functions computed on carriers.
//!
//! Set operations are extensional: `A ∩ B` and `A ∪ B` need not be elements of
//! the space, only their sizes are used.

use std::sync::Arc;

use num_traits::Zero;

use super::InclusionFunction;
use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::rational::{int, one, ratio, zero, Rational};
use crate::space::GranularSpace;

/// `#(A ∩ B) / #A`, or 1 when `A` is empty.
pub fn k0_value(a: AtomSet, b: AtomSet) -> Rational {
    if a.is_empty() {
        one()
    } else {
        ratio(a.intersection(b).len() as i64, a.len() as i64)
    }
}

pub fn k0(s: &Arc<GranularSpace>) -> Result<InclusionFunction> {
    s.require_set_extensional()?;
    InclusionFunction::tabulate(s, "k0", |a, b| {
        Ok(k0_value(s.require_carrier(a)?, s.require_carrier(b)?))
    })
}

/// `#B / #(A ∪ B)`, or 1 when both are empty.
pub fn k1(s: &Arc<GranularSpace>) -> Result<InclusionFunction> {
    s.require_set_extensional()?;
    InclusionFunction::tabulate(s, "k1", |a, b| {
        let (a, b) = (s.require_carrier(a)?, s.require_carrier(b)?);
        let u = a.union(b);
        Ok(if u.is_empty() {
            one()
        } else {
            ratio(b.len() as i64, u.len() as i64)
        })
    })
}

/// `#(Aᶜ ∪ B) / #⊤`, complements taken inside `⊤`'s carrier.
pub fn k2(s: &Arc<GranularSpace>) -> Result<InclusionFunction> {
    s.require_set_extensional()?;
    let top = s.require_carrier(s.top())?;
    if top.is_empty() {
        return Err(Error::Degenerate("k2 needs a nonempty top".into()));
    }
    InclusionFunction::tabulate(s, "k2", |a, b| {
        let (a, b) = (s.require_carrier(a)?, s.require_carrier(b)?);
        let value = top.difference(a).union(b).intersection(top);
        Ok(ratio(value.len() as i64, top.len() as i64))
    })
}

/// Threshold rescaling: 0 at or below `s`, 1 at or above `t`, affine between.
pub fn kst(f: &InclusionFunction, s: &Rational, t: &Rational) -> Result<InclusionFunction> {
    if s < &zero() || t > &one() || s >= t {
        return Err(Error::Parameter(format!(
            "kst needs 0 <= s < t <= 1, got s = {s}, t = {t}"
        )));
    }
    let width = t - s;
    f.map(format!("kst({}, {s}, {t})", f.label()), |v| {
        if v <= s {
            Rational::zero()
        } else if v >= t {
            int(1)
        } else {
            (v - s) / &width
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::abstract_example;

    fn fixture() -> Arc<GranularSpace> {
        Arc::new(abstract_example())
    }

    #[test]
    fn k0_edge_cases_and_fixture_value() {
        let s = fixture();
        let f = k0(&s).unwrap();
        let (bot, ab, bc) = (s.bottom(), s.id("ab").unwrap(), s.id("bc").unwrap());
        assert_eq!(*f.value(bot, bc), one());
        for x in s.elements() {
            assert_eq!(*f.value(x, x), one());
        }
        // {a,b} ∩ {b,c} = {b}: 1 of 2.
        assert_eq!(*f.value(ab, bc), ratio(1, 2));
    }

    #[test]
    fn k1_k2_fixture_values() {
        let s = fixture();
        let (ab, bc, bot) = (s.id("ab").unwrap(), s.id("bc").unwrap(), s.bottom());
        // {b,c} has 2 atoms, {a,b,c} has 3.
        assert_eq!(*k1(&s).unwrap().value(ab, bc), ratio(2, 3));
        assert_eq!(*k1(&s).unwrap().value(bot, bot), one());
        // {c,e} ∪ {b,c} = {b,c,e}: 3 of 4.
        let f2 = k2(&s).unwrap();
        assert_eq!(*f2.value(ab, bc), ratio(3, 4));
        let top = s.top();
        assert_eq!(*f2.value(top, bc), ratio(2, 4));
        assert_eq!(*f2.value(top, top), one());
    }

    #[test]
    fn kst_piecewise() {
        let s = fixture();
        let f = k0(&s).unwrap();
        let g = kst(&f, &ratio(1, 4), &ratio(3, 4)).unwrap();
        let (ab, bc) = (s.id("ab").unwrap(), s.id("bc").unwrap());
        // (1/2 - 1/4) / (3/4 - 1/4) = 1/2
        assert_eq!(*g.value(ab, bc), ratio(1, 2));
        for (a, b) in s.pairs() {
            if *f.value(a, b) >= ratio(3, 4) {
                assert_eq!(*g.value(a, b), one());
            }
            if *f.value(a, b) <= ratio(1, 4) {
                assert_eq!(*g.value(a, b), zero());
            }
        }
        assert_eq!(kst(&f, &zero(), &one()).unwrap().values(), f.values());
        assert!(matches!(
            kst(&f, &ratio(1, 2), &ratio(1, 2)),
            Err(Error::Parameter(_))
        ));
        assert!(kst(&f, &ratio(3, 4), &ratio(1, 4)).is_err());
    }

    #[test]
    fn carrier_free_space_is_rejected() {
        let text = r#"{
            "elements": [{"id": "bot"}, {"id": "top"}],
            "parthood": [["bot","top"]], "order": [["bot","top"]],
            "closure": ["parthood", "order"],
            "granulation": ["top"],
            "lower": [["bot","bot"],["top","top"]], "upper": [["bot","bot"],["top","top"]],
            "bottom": "bot", "top": "top"
        }"#;
        let s = Arc::new(GranularSpace::from_json_str(text).unwrap());
        assert!(matches!(k0(&s), Err(Error::MissingCarrier(_))));
        assert!(matches!(k2(&s), Err(Error::MissingCarrier(_))));
    }
}
