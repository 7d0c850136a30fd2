//! Randomized search for operations that leave the class of RIFs, alongside
//! closure checks for the product.
//!
//! A pool of RIFs is built from the carrier-based functions and their
//! products, powers and threshold rescalings, keeping only members that
//! classify as RIF. Trials then draw from the pool and test the α-sum, both
//! decontaminations and the product. Every stored witness carries the actual
//! functions so it can be re-checked from scratch.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::ops;
use crate::error::{Error, Result};
use crate::inclusion::{
    check_rif_axiom, classify, k0, k1, k2, kst, InclusionFunction, RifAxiom, RifClass,
};
use crate::rational::{format_rational, one, parse_rational, ratio, Rational};
use crate::space::{GranularSpace, SpaceFile};

/// Witnesses kept per failure kind.
pub const MAX_STORED_WITNESSES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    AlphaSum,
    Sharp,
    Flat,
}

/// An R1 failure produced by applying one operation to RIF inputs.
#[derive(Clone, Debug)]
pub struct FailureWitness {
    pub kind: FailureKind,
    pub f: InclusionFunction,
    /// Second operand of the α-sum.
    pub h: Option<InclusionFunction>,
    pub alpha: Option<Rational>,
    pub result: InclusionFunction,
    /// Pairs at which R1 fails on `result`.
    pub r1_witnesses: Vec<Vec<String>>,
}

impl FailureWitness {
    fn recompute(&self) -> Result<InclusionFunction> {
        match self.kind {
            FailureKind::AlphaSum => {
                let (Some(h), Some(alpha)) = (&self.h, &self.alpha) else {
                    return Err(Error::Input("α-sum witness lacks h or α".into()));
                };
                ops::oplus(alpha, &self.f, h)
            }
            FailureKind::Sharp => ops::sharp(&self.f),
            FailureKind::Flat => ops::flat(&self.f),
        }
    }

    /// Re-derives the witness: the inputs classify as RIF, the operation
    /// reproduces `result`, and R1 fails on it at the recorded pairs.
    pub fn reverify(&self) -> Result<bool> {
        let inputs_rif = classify(&self.f) == RifClass::Rif
            && self.h.as_ref().is_none_or(|h| classify(h) == RifClass::Rif);
        let result = self.recompute()?;
        let r1 = check_rif_axiom(&result, RifAxiom::R1);
        let recorded = self.r1_witnesses.iter().all(|w| r1.witnesses.contains(w));
        Ok(inputs_rif && result == self.result && !r1.holds && recorded)
    }

    pub fn to_record(&self) -> WitnessRecord {
        let table = |f: &InclusionFunction| f.values().iter().map(format_rational).collect();
        WitnessRecord {
            kind: self.kind,
            space: self.f.space().to_file(),
            f_label: self.f.label().to_string(),
            f: table(&self.f),
            h_label: self.h.as_ref().map(|h| h.label().to_string()),
            h: self.h.as_ref().map(table),
            alpha: self.alpha.as_ref().map(format_rational),
            result: table(&self.result),
            r1_witnesses: self.r1_witnesses.clone(),
        }
    }

    pub fn from_record(record: &WitnessRecord) -> Result<Self> {
        let space = Arc::new(GranularSpace::from_file(record.space.clone())?);
        let load = |label: &str, vals: &[String]| -> Result<InclusionFunction> {
            let values = vals
                .iter()
                .map(|v| parse_rational(v))
                .collect::<Result<Vec<_>>>()?;
            InclusionFunction::from_values(&space, label, values)
        };
        let h = match (&record.h_label, &record.h) {
            (Some(l), Some(v)) => Some(load(l, v)?),
            (None, None) => None,
            _ => return Err(Error::Input("h_label and h must appear together".into())),
        };
        Ok(FailureWitness {
            kind: record.kind,
            f: load(&record.f_label, &record.f)?,
            h,
            alpha: record.alpha.as_deref().map(parse_rational).transpose()?,
            result: load("result", &record.result)?,
            r1_witnesses: record.r1_witnesses.clone(),
        })
    }
}

/// Self-contained serialized witness: the space plus row-major value tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessRecord {
    pub kind: FailureKind,
    pub space: SpaceFile,
    pub f_label: String,
    pub f: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    pub result: Vec<String>,
    pub r1_witnesses: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default)]
pub struct FailureSearchReport {
    pub budget: usize,
    pub rif_pool: Vec<String>,
    pub wqrif_pool: Vec<String>,
    pub alpha_sum_trials: usize,
    pub sharp_trials: usize,
    pub flat_trials: usize,
    pub alpha_sum: Vec<FailureWitness>,
    pub sharp: Vec<FailureWitness>,
    pub flat: Vec<FailureWitness>,
    /// RIF ⊗ RIF trials, and those whose product was not a RIF.
    pub product_trials: usize,
    pub product_failures: Vec<String>,
    /// RIF ⊗ wqRIF trials, and those whose product was not a RIF.
    pub mixed_trials: usize,
    pub mixed_failures: Vec<String>,
    /// Commutativity, associativity and order compatibility of ⊗ on RIFs.
    pub semigroup_trials: usize,
    pub semigroup_failures: Vec<String>,
}

impl FailureSearchReport {
    pub fn witnesses(&self, kind: FailureKind) -> &[FailureWitness] {
        match kind {
            FailureKind::AlphaSum => &self.alpha_sum,
            FailureKind::Sharp => &self.sharp,
            FailureKind::Flat => &self.flat,
        }
    }

    fn store(&mut self, w: FailureWitness, seen: &mut BTreeSet<String>) {
        let key = format!(
            "{:?}|{}|{}|{}",
            w.kind,
            w.f.label(),
            w.h.as_ref().map_or("", |h| h.label()),
            w.alpha.as_ref().map(format_rational).unwrap_or_default()
        );
        let list = match w.kind {
            FailureKind::AlphaSum => &mut self.alpha_sum,
            FailureKind::Sharp => &mut self.sharp,
            FailureKind::Flat => &mut self.flat,
        };
        if list.len() < MAX_STORED_WITNESSES && seen.insert(key) {
            list.push(w);
        }
    }
}

/// RIFs built from k0, k1, k2 by products, squares and `kst(·, s, 1)`,
/// filtered to those that classify as RIF on `s`.
pub fn rif_pool(s: &Arc<GranularSpace>) -> Result<Vec<InclusionFunction>> {
    let mut bases = vec![k0(s)?, k1(s)?];
    if let Ok(f) = k2(s) {
        bases.push(f);
    }
    let mut candidates = bases.clone();
    for (i, f) in bases.iter().enumerate() {
        candidates.push(ops::power(f, 2)?);
        for g in &bases[i + 1..] {
            candidates.push(ops::otimes(f, g)?);
        }
        for t in [ratio(1, 4), ratio(1, 2)] {
            candidates.push(kst(f, &t, &one())?);
        }
    }
    Ok(candidates
        .into_iter()
        .filter(|f| classify(f) == RifClass::Rif)
        .collect())
}

/// Weak quasi-RIFs that are not required to be RIFs: threshold rescalings and
/// decontaminated or granular-summed bases, filtered by classification.
pub fn wqrif_pool(s: &Arc<GranularSpace>) -> Result<Vec<InclusionFunction>> {
    let mut candidates = Vec::new();
    for f in rif_pool(s)?.iter().take(3) {
        candidates.push(kst(f, &ratio(1, 4), &ratio(3, 4))?);
        candidates.push(kst(f, &ratio(1, 3), &ratio(1, 2))?);
        candidates.push(ops::sharp(f)?);
        candidates.push(ops::flat(f)?);
        candidates.push(ops::sigma(f)?);
    }
    Ok(candidates
        .into_iter()
        .filter(|f| classify(f).is_at_least(RifClass::WqRif))
        .collect())
}

/// `α` drawn from `{p/q : 0 < p < q ≤ 12}`.
fn open_alpha<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let q = rng.gen_range(2..=12i64);
    ratio(rng.gen_range(1..q), q)
}

/// Runs `budget` trials, cycling through α-sum, ♯, ♭, RIF⊗RIF and
/// RIF⊗wqRIF. The space should be a set HGOS.
pub fn rif_failure_search<R: Rng + ?Sized>(
    s: &Arc<GranularSpace>,
    budget: usize,
    rng: &mut R,
) -> Result<FailureSearchReport> {
    let rifs = rif_pool(s)?;
    let wqs = wqrif_pool(s)?;
    if rifs.is_empty() {
        return Err(Error::Degenerate("no RIF among the pool candidates".into()));
    }
    let mut report = FailureSearchReport {
        budget,
        rif_pool: rifs.iter().map(|f| f.label().to_string()).collect(),
        wqrif_pool: wqs.iter().map(|f| f.label().to_string()).collect(),
        ..Default::default()
    };
    let mut seen = BTreeSet::new();
    let pick = |rng: &mut R| rifs.choose(rng).expect("pool is nonempty").clone();

    let r1_failure = |kind, f: InclusionFunction, h, alpha, result: InclusionFunction| {
        let r1 = check_rif_axiom(&result, RifAxiom::R1);
        (!r1.holds).then(|| FailureWitness {
            kind,
            f,
            h,
            alpha,
            result,
            r1_witnesses: r1.witnesses.into_iter().take(4).collect(),
        })
    };

    for trial in 0..budget {
        match trial % 5 {
            0 => {
                report.alpha_sum_trials += 1;
                let (f, h, alpha) = (pick(rng), pick(rng), open_alpha(rng));
                let result = ops::oplus(&alpha, &f, &h)?;
                if let Some(w) = r1_failure(FailureKind::AlphaSum, f, Some(h), Some(alpha), result)
                {
                    report.store(w, &mut seen);
                }
            }
            1 => {
                report.sharp_trials += 1;
                let f = pick(rng);
                let result = ops::sharp(&f)?;
                if let Some(w) = r1_failure(FailureKind::Sharp, f, None, None, result) {
                    report.store(w, &mut seen);
                }
            }
            2 => {
                report.flat_trials += 1;
                let f = pick(rng);
                let result = ops::flat(&f)?;
                if let Some(w) = r1_failure(FailureKind::Flat, f, None, None, result) {
                    report.store(w, &mut seen);
                }
            }
            3 => {
                report.product_trials += 1;
                let (f, h, g) = (pick(rng), pick(rng), pick(rng));
                let fh = ops::otimes(&f, &h)?;
                if classify(&fh) != RifClass::Rif {
                    report.product_failures.push(fh.label().to_string());
                }
                report.semigroup_trials += 1;
                let comm = fh == ops::otimes(&h, &f)?;
                let assoc = ops::otimes(&fh, &g)? == ops::otimes(&f, &ops::otimes(&h, &g)?)?;
                let order =
                    !ops::leq(&f, &h)? || ops::leq(&ops::otimes(&f, &g)?, &ops::otimes(&h, &g)?)?;
                if !(comm && assoc && order) {
                    report.semigroup_failures.push(format!(
                        "{} / {} / {}",
                        f.label(),
                        h.label(),
                        g.label()
                    ));
                }
            }
            _ => {
                let Some(h) = wqs.choose(rng) else { continue };
                report.mixed_trials += 1;
                let f = pick(rng);
                let fh = ops::otimes(&f, h)?;
                if classify(&fh) != RifClass::Rif {
                    report.mixed_failures.push(fh.label().to_string());
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::table::EquivalenceRelation;

    fn space(blocks: &[&[&str]]) -> Arc<GranularSpace> {
        let carrier: Vec<String> = blocks
            .iter()
            .flat_map(|b| b.iter().map(|x| x.to_string()))
            .collect();
        let blocks = blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect())
            .collect();
        Arc::new(
            EquivalenceRelation::new(carrier, blocks)
                .unwrap()
                .to_set_hgos()
                .unwrap(),
        )
    }

    #[test]
    fn sharp_fails_r1_inside_a_coarse_block() {
        let s = space(&[&["x", "y"], &["z"]]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let report = rif_failure_search(&s, 50, &mut rng).unwrap();
        assert!(!report.sharp.is_empty());
        for w in &report.sharp {
            assert!(w.reverify().unwrap());
        }
        assert!(report.product_failures.is_empty());
        assert!(report.mixed_failures.is_empty());
        assert!(report.semigroup_failures.is_empty());
    }

    #[test]
    fn alpha_sum_of_k0_and_k1_keeps_r1_on_two_objects() {
        let s = space(&[&["x"], &["y"]]);
        let f = ops::oplus(&ratio(1, 2), &k0(&s).unwrap(), &k1(&s).unwrap()).unwrap();
        assert!(check_rif_axiom(&f, RifAxiom::R1).holds);
    }

    #[test]
    fn records_round_trip() {
        let s = space(&[&["x", "y"]]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let report = rif_failure_search(&s, 10, &mut rng).unwrap();
        let w = &report.sharp[0];
        let json = serde_json::to_string(&w.to_record()).unwrap();
        let back: WitnessRecord = serde_json::from_str(&json).unwrap();
        let w2 = FailureWitness::from_record(&back).unwrap();
        assert!(w2.reverify().unwrap());
        assert_eq!(w2.result.values(), w.result.values());
    }

    #[test]
    fn tampered_record_fails_reverification() {
        let s = space(&[&["x", "y"]]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let report = rif_failure_search(&s, 10, &mut rng).unwrap();
        let mut rec = report.sharp[0].to_record();
        rec.result[0] = "0".into();
        let w = FailureWitness::from_record(&rec).unwrap();
        assert!(!w.reverify().unwrap());
    }
}
