//! The axiom family U1, R0–R6, IR0, IR4, RB and the RIF / qRIF / wqRIF
//! classification.
//!
//! Axioms mentioning `∧` or `∨` are evaluated only where the operation is
//! defined; undefined instances are counted in `skipped`. R5 is read with
//! `ℙ⊥a` guarding the biconditional: for every `a` with `ℙ⊥a`,
//! `κ(a,b) = 0 ⇔ a ∧ b = ⊥`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use super::InclusionFunction;
use crate::error::{Error, Result};
use crate::rational::one;
use crate::space::{ElemId, GranularSpace};
use crate::tally::Tally;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RifAxiom {
    U1,
    R0,
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    IR0,
    IR4,
    RB,
}

impl RifAxiom {
    pub const ALL: [RifAxiom; 11] = [
        RifAxiom::U1,
        RifAxiom::R0,
        RifAxiom::R1,
        RifAxiom::R2,
        RifAxiom::R3,
        RifAxiom::R4,
        RifAxiom::R5,
        RifAxiom::R6,
        RifAxiom::IR0,
        RifAxiom::IR4,
        RifAxiom::RB,
    ];
}

impl fmt::Display for RifAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for RifAxiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RifAxiom::ALL
            .into_iter()
            .find(|a| a.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown axiom `{s}`")))
    }
}

/// Which relation plays the role of parthood in the axioms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Basis {
    #[default]
    Parthood,
    /// The space's order `≤`, with `a < b` as the proper version.
    Order,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RifAxiomReport {
    pub axiom: RifAxiom,
    pub holds: bool,
    pub violations: usize,
    pub witnesses: Vec<Vec<String>>,
    pub skipped: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RifClass {
    #[serde(rename = "none")]
    None,
    #[serde(rename = "wqRIF")]
    WqRif,
    #[serde(rename = "qRIF")]
    QRif,
    #[serde(rename = "RIF")]
    Rif,
}

impl fmt::Display for RifClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RifClass::None => "none",
            RifClass::WqRif => "wqRIF",
            RifClass::QRif => "qRIF",
            RifClass::Rif => "RIF",
        })
    }
}

impl RifClass {
    /// Membership: a RIF is also a qRIF and a wqRIF.
    pub fn is_at_least(self, other: RifClass) -> bool {
        self >= other
    }
}

struct Ctx<'a> {
    s: &'a GranularSpace,
    f: &'a InclusionFunction,
    basis: Basis,
}

impl Ctx<'_> {
    fn rel(&self, a: ElemId, b: ElemId) -> bool {
        match self.basis {
            Basis::Parthood => self.s.part(a, b),
            Basis::Order => self.s.leq(a, b),
        }
    }

    fn proper(&self, a: ElemId, b: ElemId) -> bool {
        self.rel(a, b) && !self.rel(b, a)
    }

    fn is_one(&self, a: ElemId, b: ElemId) -> bool {
        self.f.is_one(a, b)
    }

    fn is_zero(&self, a: ElemId, b: ElemId) -> bool {
        self.f.value(a, b).is_zero()
    }

    fn names(&self, es: &[ElemId]) -> Vec<String> {
        es.iter().map(|&e| self.s.name(e).to_string()).collect()
    }
}

pub fn check_rif_axiom(f: &InclusionFunction, axiom: RifAxiom) -> RifAxiomReport {
    check_rif_axiom_with(f, axiom, Basis::Parthood)
}

pub fn check_rif_axiom_with(
    f: &InclusionFunction,
    axiom: RifAxiom,
    basis: Basis,
) -> RifAxiomReport {
    let s = f.space().as_ref();
    let cx = Ctx { s, f, basis };
    let mut t = Tally::default();
    let els: Vec<ElemId> = s.elements().collect();
    let bot = s.bottom();
    match axiom {
        RifAxiom::U1 => {
            for &a in &els {
                t.check(cx.is_one(a, a), || cx.names(&[a]));
            }
        }
        RifAxiom::R0 | RifAxiom::IR0 | RifAxiom::R1 => {
            for (a, b) in s.pairs() {
                let (p, k) = (cx.rel(a, b), cx.is_one(a, b));
                let ok = match axiom {
                    RifAxiom::R0 => !p || k,
                    RifAxiom::IR0 => !k || p,
                    _ => p == k,
                };
                t.check(ok, || cx.names(&[a, b]));
            }
        }
        RifAxiom::R2 | RifAxiom::R3 => {
            for (b, c) in s.pairs() {
                let premise = if axiom == RifAxiom::R2 {
                    cx.is_one(b, c)
                } else {
                    cx.rel(b, c)
                };
                if premise {
                    for &a in &els {
                        t.check(f.value(a, b) <= f.value(a, c), || cx.names(&[a, b, c]));
                    }
                }
            }
        }
        RifAxiom::RB => {
            for &a in &els {
                if cx.proper(bot, a) {
                    t.check(cx.is_zero(a, bot), || cx.names(&[a]));
                }
            }
        }
        RifAxiom::R4 => {
            for (a, b) in s.pairs() {
                if cx.is_zero(a, b) {
                    match s.meet(a, b) {
                        Some(m) => t.check(m == bot, || cx.names(&[a, b])),
                        None => t.skip(),
                    }
                }
            }
        }
        RifAxiom::IR4 => {
            for (a, b) in s.pairs() {
                if !cx.proper(bot, a) {
                    continue;
                }
                match s.meet(a, b) {
                    Some(m) if m == bot => t.check(cx.is_zero(a, b), || cx.names(&[a, b])),
                    Some(_) => {}
                    None => t.skip(),
                }
            }
        }
        RifAxiom::R5 => {
            for (a, b) in s.pairs() {
                if !cx.proper(bot, a) {
                    continue;
                }
                match s.meet(a, b) {
                    Some(m) => t.check(cx.is_zero(a, b) == (m == bot), || cx.names(&[a, b])),
                    None => t.skip(),
                }
            }
        }
        RifAxiom::R6 => {
            let one = one();
            for &a in &els {
                if !cx.proper(bot, a) {
                    continue;
                }
                for (b, c) in s.pairs() {
                    match s.join(b, c) {
                        Some(j) if j == s.top() => {
                            let sum = f.value(a, b) + f.value(a, c);
                            t.check(sum == one, || cx.names(&[a, b, c]));
                        }
                        Some(_) => {}
                        None => t.skip(),
                    }
                }
            }
        }
    }
    RifAxiomReport {
        axiom,
        holds: t.holds(),
        violations: t.violations,
        witnesses: t.witnesses,
        skipped: t.skipped,
    }
}

/// All eleven axiom verdicts for one function, computed once.
#[derive(Clone, Debug)]
pub struct AxiomProfile {
    reports: BTreeMap<RifAxiom, RifAxiomReport>,
}

impl AxiomProfile {
    pub fn new(f: &InclusionFunction) -> Self {
        Self::with_basis(f, Basis::Parthood)
    }

    pub fn with_basis(f: &InclusionFunction, basis: Basis) -> Self {
        AxiomProfile {
            reports: RifAxiom::ALL
                .into_iter()
                .map(|ax| (ax, check_rif_axiom_with(f, ax, basis)))
                .collect(),
        }
    }

    pub fn holds(&self, axiom: RifAxiom) -> bool {
        self.reports[&axiom].holds
    }

    pub fn report(&self, axiom: RifAxiom) -> &RifAxiomReport {
        &self.reports[&axiom]
    }

    pub fn reports(&self) -> impl Iterator<Item = &RifAxiomReport> {
        self.reports.values()
    }

    pub fn class(&self) -> RifClass {
        use RifAxiom::*;
        if self.holds(R1) && self.holds(R2) {
            RifClass::Rif
        } else if self.holds(R0) && self.holds(R2) {
            RifClass::QRif
        } else if self.holds(R0) && self.holds(R3) {
            RifClass::WqRif
        } else {
            RifClass::None
        }
    }
}

/// The most specific class whose defining axioms hold: RIF (R1, R2), qRIF
/// (R0, R2), wqRIF (R0, R3), otherwise none.
pub fn classify(f: &InclusionFunction) -> RifClass {
    use RifAxiom::*;
    let holds = |ax| check_rif_axiom(f, ax).holds;
    if holds(R2) {
        if holds(R1) {
            return RifClass::Rif;
        }
        if holds(R0) {
            return RifClass::QRif;
        }
    }
    if holds(R0) && holds(R3) {
        RifClass::WqRif
    } else {
        RifClass::None
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::inclusion::{k0, k1, k2, kst};
    use crate::rational::ratio;
    use crate::table::EquivalenceRelation;

    fn power_set(objects: &[&str], blocks: &[&[&str]]) -> Arc<GranularSpace> {
        let carrier = objects.iter().map(|s| s.to_string()).collect();
        let blocks = blocks
            .iter()
            .map(|b| b.iter().map(|s| s.to_string()).collect())
            .collect();
        Arc::new(
            EquivalenceRelation::new(carrier, blocks)
                .unwrap()
                .to_set_hgos()
                .unwrap(),
        )
    }

    #[test]
    fn k_functions_are_rifs_on_power_sets() {
        let s = power_set(&["x", "y", "z"], &[&["x", "y"], &["z"]]);
        for f in [k0(&s).unwrap(), k1(&s).unwrap(), k2(&s).unwrap()] {
            assert!(check_rif_axiom(&f, RifAxiom::R1).holds, "{}", f.label());
            assert_eq!(classify(&f), RifClass::Rif, "{}", f.label());
        }
    }

    #[test]
    fn u1_failure_names_the_element() {
        let s = power_set(&["x"], &[&["x"]]);
        let f = k0(&s).unwrap();
        let mut values = f.values().to_vec();
        values[s.len() + 1] = ratio(1, 2); // κ({x},{x})
        let g = InclusionFunction::from_values(&s, "broken", values).unwrap();
        let r = check_rif_axiom(&g, RifAxiom::U1);
        assert!(!r.holds);
        assert_eq!(r.witnesses, vec![vec!["{x}".to_string()]]);
    }

    #[test]
    fn kst_on_two_objects_keeps_r1() {
        // k0 takes only the values 0, 1/2, 1 here, so no value reaches 3/4
        // without being 1: R1 survives the rescaling.
        let s = power_set(&["x", "y"], &[&["x"], &["y"]]);
        let f = kst(&k0(&s).unwrap(), &ratio(1, 4), &ratio(3, 4)).unwrap();
        assert!(check_rif_axiom(&f, RifAxiom::R0).holds);
        assert!(check_rif_axiom(&f, RifAxiom::R1).holds);
    }

    #[test]
    fn kst_below_half_breaks_r1_with_witness() {
        let s = power_set(&["x", "y"], &[&["x"], &["y"]]);
        let f = kst(&k0(&s).unwrap(), &ratio(1, 4), &ratio(1, 2)).unwrap();
        let r = check_rif_axiom(&f, RifAxiom::R1);
        assert!(check_rif_axiom(&f, RifAxiom::R0).holds);
        assert!(!r.holds);
        // k0({x,y},{x}) = 1/2 reaches t without inclusion.
        assert!(r
            .witnesses
            .contains(&vec!["{x,y}".to_string(), "{x}".to_string()]));
        assert_eq!(classify(&f), RifClass::WqRif);
    }

    #[test]
    fn kst_with_t_one_is_at_least_qrif() {
        let s = power_set(&["x", "y", "z"], &[&["x"], &["y", "z"]]);
        let f = kst(&k0(&s).unwrap(), &ratio(1, 3), &ratio(1, 1)).unwrap();
        assert!(classify(&f).is_at_least(RifClass::QRif));
    }

    #[test]
    fn k0_on_fixture_is_qrif_not_rif() {
        // The fixture's parthood is strictly smaller than inclusion, so R1
        // fails ({e} ⊆ {a,b,e} without P) while R2 still holds.
        let s = Arc::new(crate::fixtures::abstract_example());
        let f = k0(&s).unwrap();
        assert!(!check_rif_axiom(&f, RifAxiom::R1).holds);
        assert_eq!(classify(&f), RifClass::QRif);
        let g = kst(&f, &ratio(1, 4), &ratio(3, 4)).unwrap();
        assert_eq!(classify(&g), RifClass::WqRif);
    }

    #[test]
    fn order_basis_changes_the_verdict() {
        let s = Arc::new(crate::fixtures::abstract_example());
        let f = k0(&s).unwrap();
        // {e} ⊆ {a,b,e} and e ≤ be ≤ abe, but e is not a part of abe: IR0
        // fails relative to P and holds relative to ≤.
        assert!(!check_rif_axiom_with(&f, RifAxiom::IR0, Basis::Parthood).holds);
        assert!(check_rif_axiom_with(&f, RifAxiom::IR0, Basis::Order).holds);
        assert!(check_rif_axiom_with(&f, RifAxiom::R0, Basis::Order).holds);
    }

    #[test]
    fn partial_meets_are_skipped() {
        let s = Arc::new(crate::fixtures::abstract_example());
        let r = check_rif_axiom(&k0(&s).unwrap(), RifAxiom::R5);
        assert!(r.skipped > 0);
    }

    #[test]
    fn parses_axiom_names() {
        assert_eq!("ir4".parse::<RifAxiom>().unwrap(), RifAxiom::IR4);
        assert!("R9".parse::<RifAxiom>().is_err());
    }
}
