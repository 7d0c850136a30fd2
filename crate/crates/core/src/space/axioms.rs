//! Exhaustive checks of the GGS axioms and of granulation admissibility.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{weak_equal, ElemId, GranularSpace};
use crate::error::{Error, Result};
use crate::tally::Tally;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    PT1,
    PT2,
    G1,
    G2,
    G3,
    G4,
    G5,
    UL1,
    UL2,
    UL3,
    TB,
    WRA,
    LS,
    FU,
}

impl Axiom {
    pub const STRUCTURAL: [Axiom; 11] = [
        Axiom::PT1,
        Axiom::PT2,
        Axiom::G1,
        Axiom::G2,
        Axiom::G3,
        Axiom::G4,
        Axiom::G5,
        Axiom::UL1,
        Axiom::UL2,
        Axiom::UL3,
        Axiom::TB,
    ];
    pub const ADMISSIBILITY: [Axiom; 3] = [Axiom::WRA, Axiom::LS, Axiom::FU];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Verdict for one axiom. `witnesses` holds up to
/// [`MAX_WITNESSES`](crate::MAX_WITNESSES) falsifying assignments (element
/// names); `violations` counts all of them. `skipped` counts instances that
/// were vacuous because a partial operation was undefined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub holds: bool,
    pub violations: usize,
    pub witnesses: Vec<Vec<String>>,
    pub skipped: usize,
}

impl AxiomReport {
    fn from_tally(axiom: Axiom, t: Tally) -> Self {
        AxiomReport {
            axiom,
            holds: t.holds(),
            violations: t.violations,
            witnesses: t.witnesses,
            skipped: t.skipped,
        }
    }
}

type PartialOp = fn(&GranularSpace, ElemId, ElemId) -> Option<ElemId>;

/// Runs PT1–TB and returns one report per axiom, in axiom order.
pub fn validate_space(s: &GranularSpace) -> Vec<AxiomReport> {
    Axiom::STRUCTURAL
        .iter()
        .map(|&ax| AxiomReport::from_tally(ax, check_structural(s, ax)))
        .collect()
}

fn names(s: &GranularSpace, es: &[ElemId]) -> Vec<String> {
    es.iter().map(|&e| s.name(e).to_string()).collect()
}

fn tagged(s: &GranularSpace, tag: &str, es: &[ElemId]) -> Vec<String> {
    std::iter::once(tag.to_string())
        .chain(names(s, es))
        .collect()
}

fn check_structural(s: &GranularSpace, axiom: Axiom) -> Tally {
    let mut t = Tally::default();
    let els: Vec<ElemId> = s.elements().collect();
    match axiom {
        Axiom::PT1 => {
            for &x in &els {
                t.check(s.part(x, x), || names(s, &[x]));
            }
        }
        Axiom::PT2 => {
            for (a, b) in s.pairs() {
                t.check(!(s.part(a, b) && s.part(b, a)) || a == b, || {
                    names(s, &[a, b])
                });
            }
        }
        Axiom::G1 => {
            for (a, b) in s.pairs() {
                let (j1, j2) = (s.join(a, b), s.join(b, a));
                if j1.is_none() || j2.is_none() {
                    t.skip();
                }
                t.check(weak_equal(j1, j2), || tagged(s, "join", &[a, b]));
                let (m1, m2) = (s.meet(a, b), s.meet(b, a));
                if m1.is_none() || m2.is_none() {
                    t.skip();
                }
                t.check(weak_equal(m1, m2), || tagged(s, "meet", &[a, b]));
            }
        }
        Axiom::G2 => {
            for (a, b) in s.pairs() {
                let lhs = s.join(a, b).and_then(|j| s.meet(j, a));
                if lhs.is_none() {
                    t.skip();
                }
                t.check(weak_equal(lhs, Some(a)), || tagged(s, "join-meet", &[a, b]));
                let lhs = s.meet(a, b).and_then(|m| s.join(m, a));
                if lhs.is_none() {
                    t.skip();
                }
                t.check(weak_equal(lhs, Some(a)), || tagged(s, "meet-join", &[a, b]));
            }
        }
        Axiom::G3 | Axiom::G4 => {
            // G3: (a∧b)∨c = (a∨c)∧(b∨c); G4 is its dual.
            let (inner, outer): (PartialOp, PartialOp) = if axiom == Axiom::G3 {
                (GranularSpace::meet, GranularSpace::join)
            } else {
                (GranularSpace::join, GranularSpace::meet)
            };
            for &a in &els {
                for &b in &els {
                    let ab = inner(s, a, b);
                    for &c in &els {
                        let lhs = ab.and_then(|x| outer(s, x, c));
                        let rhs = match (outer(s, a, c), outer(s, b, c)) {
                            (Some(x), Some(y)) => inner(s, x, y),
                            _ => None,
                        };
                        if lhs.is_none() || rhs.is_none() {
                            t.skip();
                        }
                        t.check(weak_equal(lhs, rhs), || names(s, &[a, b, c]));
                    }
                }
            }
        }
        Axiom::G5 => {
            for (a, b) in s.pairs() {
                let by_order = s.leq(a, b);
                let by_join = s.join(a, b).map(|j| j == b);
                let by_meet = s.meet(a, b).map(|m| m == a);
                if by_join.is_none() || by_meet.is_none() {
                    t.skip();
                }
                let agree = [by_join, by_meet].iter().flatten().all(|&v| v == by_order);
                t.check(agree, || names(s, &[a, b]));
            }
        }
        Axiom::UL1 => {
            for &a in &els {
                let (l, u) = (s.lower(a), s.upper(a));
                let ok = s.part(l, a) && s.lower(l) == l && s.part(u, s.upper(u));
                t.check(ok, || names(s, &[a]));
            }
        }
        Axiom::UL2 => {
            for (a, b) in s.pairs() {
                if s.part(a, b) {
                    let ok = s.part(s.lower(a), s.lower(b)) && s.part(s.upper(a), s.upper(b));
                    t.check(ok, || names(s, &[a, b]));
                }
            }
        }
        Axiom::UL3 => {
            let (bot, top) = (s.bottom(), s.top());
            let ok = s.lower(bot) == bot
                && s.upper(bot) == bot
                && s.part(s.lower(top), top)
                && s.part(s.upper(top), top);
            t.check(ok, || names(s, &[bot, top]));
        }
        Axiom::TB => {
            for &a in &els {
                t.check(s.part(s.bottom(), a) && s.part(a, s.top()), || {
                    names(s, &[a])
                });
            }
        }
        Axiom::WRA | Axiom::LS | Axiom::FU => unreachable!("admissibility axioms"),
    }
    t
}

/// Elements expressible as joins of granules. Depth 1 explores flat iterated
/// joins `((g1 ∨ g2) ∨ g3) ∨ …`; each further level closes the set once more
/// under arbitrary `∨` and `∧` of already reachable terms. The empty join is
/// `⊥`.
pub fn granule_terms(s: &GranularSpace, term_depth: usize) -> BTreeSet<ElemId> {
    let mut reach: BTreeSet<ElemId> = s.granules().iter().copied().collect();
    let mut frontier: Vec<ElemId> = reach.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        for &g in s.granules() {
            if let Some(y) = s.join(x, g) {
                if reach.insert(y) {
                    frontier.push(y);
                }
            }
        }
    }
    for _ in 1..term_depth {
        let current: Vec<ElemId> = reach.iter().copied().collect();
        let mut grew = false;
        for &x in &current {
            for &y in &current {
                for z in [s.join(x, y), s.meet(x, y)].into_iter().flatten() {
                    grew |= reach.insert(z);
                }
            }
        }
        if !grew {
            break;
        }
    }
    reach.insert(s.bottom());
    reach
}

/// Runs WRA, LS and FU. `term_depth` bounds the WRA term search (1 = flat
/// iterated joins of granules).
pub fn check_admissibility(s: &GranularSpace, term_depth: usize) -> Result<Vec<AxiomReport>> {
    if term_depth < 1 {
        return Err(Error::Input("term depth must be at least 1".into()));
    }
    let terms = granule_terms(s, term_depth);
    let mut wra = Tally::default();
    for x in s.elements() {
        let (l, u) = (s.lower(x), s.upper(x));
        wra.check(terms.contains(&l), || tagged(s, "lower", &[x, l]));
        wra.check(terms.contains(&u), || tagged(s, "upper", &[x, u]));
    }

    let mut ls = Tally::default();
    for &a in s.granules() {
        for x in s.elements() {
            if s.part(a, x) {
                ls.check(s.part(a, s.lower(x)), || names(s, &[a, x]));
            }
        }
    }

    let mut fu = Tally::default();
    let definite: Vec<ElemId> = s.elements().filter(|&z| s.is_definite(z)).collect();
    for &x in s.granules() {
        for &a in s.granules() {
            let found = definite
                .iter()
                .any(|&z| s.proper_part(x, z) && s.proper_part(a, z));
            fu.check(found, || names(s, &[x, a]));
        }
    }

    Ok(vec![
        AxiomReport::from_tally(Axiom::WRA, wra),
        AxiomReport::from_tally(Axiom::LS, ls),
        AxiomReport::from_tally(Axiom::FU, fu),
    ])
}
