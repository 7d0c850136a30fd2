//! Granule-generated approximations on set-extensional spaces.
//!
//! The lower approximation of `x` is the union of the granules contained in
//! `x`, the upper approximation the union of the granules meeting `x`. Both
//! are computed on carriers; containment is carrier inclusion, not the listed
//! parthood, so a space whose parthood is not transitive still gets the
//! extensional answer.

use super::{ElemId, GranularSpace};
use crate::atoms::AtomSet;
use crate::error::{Error, Result};

pub fn granular_lower_carrier(s: &GranularSpace, x: ElemId) -> Result<AtomSet> {
    let cx = s.require_carrier(x)?;
    s.granules().iter().try_fold(AtomSet::EMPTY, |acc, &g| {
        let cg = s.require_carrier(g)?;
        Ok(if cg.is_subset(cx) { acc.union(cg) } else { acc })
    })
}

pub fn granular_upper_carrier(s: &GranularSpace, x: ElemId) -> Result<AtomSet> {
    let cx = s.require_carrier(x)?;
    s.granules().iter().try_fold(AtomSet::EMPTY, |acc, &g| {
        let cg = s.require_carrier(g)?;
        Ok(if cg.meets(cx) { acc.union(cg) } else { acc })
    })
}

fn resolve(s: &GranularSpace, c: AtomSet) -> Result<ElemId> {
    s.element_with_carrier(c).ok_or_else(|| Error::Closure {
        carrier: s.show_carrier(c),
    })
}

/// Union of the granules inside `x`, as an element of `s`.
pub fn granular_lower(s: &GranularSpace, x: ElemId) -> Result<ElemId> {
    resolve(s, granular_lower_carrier(s, x)?)
}

/// Union of the granules meeting `x`, as an element of `s`.
pub fn granular_upper(s: &GranularSpace, x: ElemId) -> Result<ElemId> {
    resolve(s, granular_upper_carrier(s, x)?)
}
