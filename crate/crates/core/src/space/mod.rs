//! Finite granular operator spaces.
//!
//! A [`GranularSpace`] is the partial algebraic system
//! `⟨S, G, l, u, P, ≤, ∨, ∧, ⊥, ⊤⟩`: a finite universe of named elements
//! (optionally carrying finite sets of atoms), a parthood relation `P`, an
//! order `≤`, partial binary operations `∨`/`∧`, a granulation `G`, total
//! lower/upper approximation maps and the distinguished `⊥`/`⊤`.
//!
//! Relations and operations are either explicit tables or symbolic
//! (`inclusion`, `union`, `intersection`); the symbolic forms keep large
//! power-set spaces cheap.

mod approx;
mod axioms;
mod io;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::atoms::{AtomSet, MAX_ATOMS};
use crate::error::{Error, Result};

pub use approx::{granular_lower, granular_lower_carrier, granular_upper, granular_upper_carrier};
pub use axioms::{check_admissibility, validate_space, Axiom, AxiomReport};
pub use io::{
    ApproxName, ApproxSpec, ClosureTarget, ElementEntry, OpName, OpSpec, RelationName,
    RelationSpec, SpaceFile,
};

/// Index of an element within its space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub usize);

impl ElemId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// The specializations of a GGS, from most general to most concrete.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Flavor {
    #[default]
    #[serde(rename = "GGS")]
    Ggs,
    #[serde(rename = "GS")]
    Gs,
    #[serde(rename = "HGOS")]
    Hgos,
    #[serde(rename = "setHGOS")]
    SetHgos,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Ggs => "GGS",
            Flavor::Gs => "GS",
            Flavor::Hgos => "HGOS",
            Flavor::SetHgos => "setHGOS",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Relation {
    /// Row-major `n × n` truth table.
    Table(Vec<bool>),
    /// Carrier inclusion.
    Inclusion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum OpTable {
    /// Row-major `n × n`, `None` where undefined.
    Table(Vec<Option<ElemId>>),
    /// Carrier union, defined when the union is the carrier of an element.
    Union,
    /// Carrier intersection, defined when the result is the carrier of an element.
    Intersection,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GranularSpace {
    pub(crate) names: Vec<String>,
    pub(crate) index: HashMap<String, ElemId>,
    pub(crate) atoms: Vec<String>,
    pub(crate) carriers: Vec<Option<AtomSet>>,
    pub(crate) by_carrier: HashMap<AtomSet, ElemId>,
    pub(crate) parthood: Relation,
    pub(crate) order: Relation,
    pub(crate) join: OpTable,
    pub(crate) meet: OpTable,
    pub(crate) granules: Vec<ElemId>,
    pub(crate) is_granule: Vec<bool>,
    pub(crate) lower: Vec<ElemId>,
    pub(crate) upper: Vec<ElemId>,
    pub(crate) bottom: ElemId,
    pub(crate) top: ElemId,
    pub(crate) flavor: Flavor,
}

/// `ω`-equality of two possibly undefined terms: holds unless both sides are
/// defined and differ.
pub fn weak_equal(lhs: Option<ElemId>, rhs: Option<ElemId>) -> bool {
    match (lhs, rhs) {
        (Some(l), Some(r)) => l == r,
        _ => true,
    }
}

/// `ω*`-equality: either both sides are undefined, or both are defined and
/// equal.
pub fn strong_weak_equal(lhs: Option<ElemId>, rhs: Option<ElemId>) -> bool {
    lhs == rhs
}

impl GranularSpace {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = ElemId> + ExactSizeIterator {
        (0..self.names.len()).map(ElemId)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ElemId, ElemId)> + '_ {
        self.elements()
            .flat_map(move |a| self.elements().map(move |b| (a, b)))
    }

    pub fn name(&self, e: ElemId) -> &str {
        &self.names[e.0]
    }

    pub fn id(&self, name: &str) -> Result<ElemId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn carrier(&self, e: ElemId) -> Option<AtomSet> {
        self.carriers[e.0]
    }

    pub fn require_carrier(&self, e: ElemId) -> Result<AtomSet> {
        self.carriers[e.0].ok_or_else(|| Error::MissingCarrier(self.names[e.0].clone()))
    }

    /// True when every element carries an extensional set.
    pub fn is_set_extensional(&self) -> bool {
        self.carriers.iter().all(Option::is_some)
    }

    /// Fails with a carrier error naming the first element lacking a carrier.
    pub fn require_set_extensional(&self) -> Result<()> {
        match self.carriers.iter().position(Option::is_none) {
            Some(i) => Err(Error::MissingCarrier(self.names[i].clone())),
            None => Ok(()),
        }
    }

    pub fn element_with_carrier(&self, c: AtomSet) -> Option<ElemId> {
        self.by_carrier.get(&c).copied()
    }

    pub fn show_carrier(&self, c: AtomSet) -> String {
        c.display(&self.atoms).to_string()
    }

    /// The carrier of `e` as a brace list, or the element name when it has none.
    pub fn show(&self, e: ElemId) -> String {
        match self.carriers[e.0] {
            Some(c) => self.show_carrier(c),
            None => self.names[e.0].clone(),
        }
    }

    /// Parthood `P a b`.
    pub fn part(&self, a: ElemId, b: ElemId) -> bool {
        self.relation_holds(&self.parthood, a, b)
    }

    /// Proper parthood: `P a b` and not `P b a`.
    pub fn proper_part(&self, a: ElemId, b: ElemId) -> bool {
        self.part(a, b) && !self.part(b, a)
    }

    pub fn leq(&self, a: ElemId, b: ElemId) -> bool {
        self.relation_holds(&self.order, a, b)
    }

    pub fn join(&self, a: ElemId, b: ElemId) -> Option<ElemId> {
        self.apply(&self.join, a, b)
    }

    pub fn meet(&self, a: ElemId, b: ElemId) -> Option<ElemId> {
        self.apply(&self.meet, a, b)
    }

    pub fn lower(&self, e: ElemId) -> ElemId {
        self.lower[e.0]
    }

    pub fn upper(&self, e: ElemId) -> ElemId {
        self.upper[e.0]
    }

    pub fn granules(&self) -> &[ElemId] {
        &self.granules
    }

    pub fn is_granule(&self, e: ElemId) -> bool {
        self.is_granule[e.0]
    }

    pub fn bottom(&self) -> ElemId {
        self.bottom
    }

    pub fn top(&self) -> ElemId {
        self.top
    }

    /// The flavor declared when the space was built.
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Definite elements coincide with both their approximations.
    pub fn is_definite(&self, e: ElemId) -> bool {
        self.lower(e) == e && self.upper(e) == e
    }

    /// Complement of `e`'s carrier relative to `⊤`'s carrier, when both exist.
    pub fn complement_carrier(&self, e: ElemId) -> Result<AtomSet> {
        let top = self.require_carrier(self.top)?;
        Ok(top.difference(self.require_carrier(e)?))
    }

    /// The element whose carrier is the complement of `e`'s, if present.
    pub fn complement(&self, e: ElemId) -> Option<ElemId> {
        self.complement_carrier(e)
            .ok()
            .and_then(|c| self.element_with_carrier(c))
    }

    /// True when the space is set-extensional and every complement is an element.
    pub fn closed_under_complement(&self) -> bool {
        self.is_set_extensional() && self.elements().all(|e| self.complement(e).is_some())
    }

    fn relation_holds(&self, r: &Relation, a: ElemId, b: ElemId) -> bool {
        match r {
            Relation::Table(bits) => bits[a.0 * self.len() + b.0],
            Relation::Inclusion => match (self.carriers[a.0], self.carriers[b.0]) {
                (Some(x), Some(y)) => x.is_subset(y),
                _ => false,
            },
        }
    }

    fn apply(&self, op: &OpTable, a: ElemId, b: ElemId) -> Option<ElemId> {
        match op {
            OpTable::Table(t) => t[a.0 * self.len() + b.0],
            OpTable::Union => {
                let c = self.carriers[a.0]?.union(self.carriers[b.0]?);
                self.element_with_carrier(c)
            }
            OpTable::Intersection => {
                let c = self.carriers[a.0]?.intersection(self.carriers[b.0]?);
                self.element_with_carrier(c)
            }
        }
    }

    /// True when the carriers are exactly the power set of the atoms.
    fn is_full_power_set(&self) -> bool {
        self.atoms.len() < 64
            && self.is_set_extensional()
            && self.by_carrier.len() == self.len()
            && self.len() == 1usize << self.atoms.len()
    }

    fn relations_equal(&self, r: &Relation, s: &Relation) -> bool {
        if r == s {
            return true;
        }
        self.pairs()
            .all(|(a, b)| self.relation_holds(r, a, b) == self.relation_holds(s, a, b))
    }

    fn op_total(&self, op: &OpTable) -> bool {
        if matches!(op, OpTable::Union | OpTable::Intersection) && self.is_full_power_set() {
            return true;
        }
        self.pairs().all(|(a, b)| self.apply(op, a, b).is_some())
    }

    fn op_matches(&self, op: &OpTable, set_op: &OpTable) -> bool {
        if op == set_op && self.is_full_power_set() {
            return true;
        }
        self.pairs().all(|(a, b)| {
            let want = self.apply(set_op, a, b);
            want.is_some() && self.apply(op, a, b) == want
        })
    }

    /// The most specific flavor whose defining conditions hold.
    pub fn classify_flavor(&self) -> Flavor {
        if !self.relations_equal(&self.parthood, &self.order) {
            return Flavor::Ggs;
        }
        if !(self.op_total(&self.join) && self.op_total(&self.meet)) {
            return Flavor::Gs;
        }
        let set_like = self.is_set_extensional()
            && self.relations_equal(&self.parthood, &Relation::Inclusion)
            && self.op_matches(&self.join, &OpTable::Union)
            && self.op_matches(&self.meet, &OpTable::Intersection);
        if set_like {
            Flavor::SetHgos
        } else {
            Flavor::Hgos
        }
    }

    /// Checks the structural invariants shared by every constructor.
    pub(crate) fn check_structure(&self) -> Result<()> {
        let n = self.len();
        if n == 0 {
            return Err(Error::Structural(
                "a space needs at least one element".into(),
            ));
        }
        if self.atoms.len() > MAX_ATOMS {
            return Err(Error::Size(format!(
                "{} atoms exceed the limit of {MAX_ATOMS}",
                self.atoms.len()
            )));
        }
        for (what, r) in [("parthood", &self.parthood), ("order", &self.order)] {
            match r {
                Relation::Table(bits) if bits.len() != n * n => {
                    return Err(Error::Structural(format!("{what} table has wrong size")))
                }
                Relation::Inclusion => self
                    .require_set_extensional()
                    .map_err(|e| Error::Structural(format!("{what} = inclusion: {e}")))?,
                _ => {}
            }
        }
        for (what, op) in [("join", &self.join), ("meet", &self.meet)] {
            match op {
                OpTable::Table(t) if t.len() != n * n => {
                    return Err(Error::Structural(format!("{what} table has wrong size")))
                }
                OpTable::Union | OpTable::Intersection => self
                    .require_set_extensional()
                    .map_err(|e| Error::Structural(format!("{what}: {e}")))?,
                _ => {}
            }
        }
        if self.lower.len() != n || self.upper.len() != n {
            return Err(Error::Structural("lower/upper must be total".into()));
        }
        let declared = self.flavor;
        let actual = self.classify_flavor();
        if declared > actual {
            return Err(Error::Structural(format!(
                "declared flavor {declared} but the space only satisfies {actual}"
            )));
        }
        Ok(())
    }
}

/// Reflexive–transitive closure of a row-major `n × n` relation.
pub(crate) fn reflexive_transitive_closure(bits: &mut [bool], n: usize) {
    for i in 0..n {
        bits[i * n + i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if bits[i * n + k] {
                for j in 0..n {
                    if bits[k * n + j] {
                        bits[i * n + j] = true;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_equalities() {
        let x = Some(ElemId(1));
        let y = Some(ElemId(2));
        assert!(weak_equal(None, None));
        assert!(strong_weak_equal(None, None));
        assert!(weak_equal(None, x));
        assert!(!strong_weak_equal(None, x));
        assert!(!strong_weak_equal(x, None));
        assert!(weak_equal(x, x));
        assert!(strong_weak_equal(x, x));
        assert!(!weak_equal(x, y));
        assert!(!strong_weak_equal(x, y));
    }

    #[test]
    fn closure_is_reflexive_and_transitive() {
        // 0 -> 1 -> 2
        let mut bits = vec![false; 9];
        bits[1] = true;
        bits[3 + 2] = true;
        reflexive_transitive_closure(&mut bits, 3);
        assert!(bits[0] && bits[4] && bits[8]);
        assert!(bits[2], "0 -> 2 by transitivity");
        assert!(!bits[3 * 2], "no edge back");
    }
}
