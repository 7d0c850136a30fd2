//! Implications between the inclusion axioms, checked on one function.

use serde::Serialize;

use super::{AxiomProfile, InclusionFunction, RifAxiom};

/// Outcome of one implication (or biconditional) on one function.
///
/// For an implication `falsified` means every premise held and the conclusion
/// failed. For a biconditional it means the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImplicationVerdict {
    pub name: &'static str,
    pub statement: &'static str,
    /// False when the implication needs a set HGOS closed under complement
    /// and the space is not one.
    pub applicable: bool,
    pub premises: bool,
    pub conclusion: bool,
    pub falsified: bool,
}

pub fn verify_prif(f: &InclusionFunction) -> Vec<ImplicationVerdict> {
    use RifAxiom::*;
    let p = AxiomProfile::new(f);
    let h = |ax| p.holds(ax);
    let complemented = f.space().classify_flavor() == crate::space::Flavor::SetHgos
        && f.space().closed_under_complement();

    let imp =
        |name, statement, applicable: bool, premises: bool, conclusion: bool| ImplicationVerdict {
            name,
            statement,
            applicable,
            premises,
            conclusion,
            falsified: applicable && premises && !conclusion,
        };
    let iff = |name, statement, lhs: bool, rhs: bool| ImplicationVerdict {
        name,
        statement,
        applicable: true,
        premises: lhs,
        conclusion: rhs,
        falsified: lhs != rhs,
    };

    vec![
        imp("prif1", "R1 => (R2 <=> R3)", true, h(R1), h(R2) == h(R3)),
        iff("prif2", "R1 <=> R0 & IR0", h(R1), h(R0) && h(IR0)),
        imp("prif3", "R0 & R2 => R3", true, h(R0) && h(R2), h(R3)),
        imp("prif4", "IR0 & R3 => R2", true, h(IR0) && h(R3), h(R2)),
        imp("prif5", "IR4 => RB", true, h(IR4), h(RB)),
        iff("prif6", "IR4 & R4 <=> R5", h(IR4) && h(R4), h(R5)),
        imp(
            "prif7",
            "R0 & R6 => IR4",
            complemented,
            h(R0) && h(R6),
            h(IR4),
        ),
        imp(
            "prif8",
            "IR0 & R6 => R4",
            complemented,
            h(IR0) && h(R6),
            h(R4),
        ),
        imp(
            "prif9",
            "R1 & R6 => R5",
            complemented,
            h(R1) && h(R6),
            h(R5),
        ),
        imp("R1=>U1", "R1 => U1", true, h(R1), h(U1)),
        imp("R0=>U1", "R0 => U1", true, h(R0), h(U1)),
    ]
}
