//! Seeded generators for spaces, inclusion functions, terms and weights.
//!
//! Everything takes the caller's RNG so a seed fixes the whole run.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::AlgebraTerm;
use crate::error::Result;
use crate::inclusion::{k0, kst, InclusionFunction};
use crate::rational::{one, ratio, Rational};
use crate::space::GranularSpace;
use crate::table::{InformationTable, ValueSet};

/// Largest denominator of generated rationals.
pub const MAX_DENOMINATOR: i64 = 12;

/// A rational in `[0, 1]` with denominator at most [`MAX_DENOMINATOR`].
pub fn random_unit_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let q = rng.gen_range(1..=MAX_DENOMINATOR);
    ratio(rng.gen_range(0..=q), q)
}

/// A weight for `⊕α`, including the endpoints 0 and 1.
pub fn random_alpha<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    random_unit_rational(rng)
}

/// A pair `s < t` in `[0, 1]`. With `open_top` the result has `t < 1`.
pub fn random_thresholds<R: Rng + ?Sized>(rng: &mut R, open_top: bool) -> (Rational, Rational) {
    loop {
        let q = rng.gen_range(2..=MAX_DENOMINATOR);
        let hi = if open_top { q - 1 } else { q };
        let a = rng.gen_range(0..=hi);
        let b = rng.gen_range(0..=hi);
        if a != b {
            let (s, t) = (a.min(b), a.max(b));
            return (ratio(s, q), ratio(t, q));
        }
    }
}

/// An information table with one to three attributes over at most three
/// values each.
pub fn random_table<R: Rng + ?Sized>(rng: &mut R, objects: usize) -> Result<InformationTable> {
    let attributes = rng.gen_range(1..=3);
    let names = (1..=objects).map(|i| format!("o{i}")).collect();
    let attrs = (1..=attributes).map(|i| format!("a{i}")).collect();
    let rows = (0..objects)
        .map(|_| {
            (0..attributes)
                .map(|_| ValueSet::from([rng.gen_range(0..3).to_string()]))
                .collect()
        })
        .collect();
    InformationTable::new(names, attrs, rows)
}

/// The set HGOS of a random table with `min..=max` objects, granulated by
/// indiscernibility on all attributes.
pub fn random_set_hgos<R: Rng + ?Sized>(
    rng: &mut R,
    min: usize,
    max: usize,
) -> Result<Arc<GranularSpace>> {
    let n = rng.gen_range(min..=max);
    let t = random_table(rng, n)?;
    let attrs = t.attributes().to_vec();
    Ok(Arc::new(t.derive_indiscernibility(&attrs)?.to_set_hgos()?))
}

/// How [`random_kappa`] shapes a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KappaStrategy {
    /// Independent values; with probability 1/2 the diagonal is forced to 1.
    Uniform,
    /// 1 on parthood pairs; off them, either random or kept below 1.
    PartsOne,
    /// k0 with a few entries replaced.
    PerturbedK0,
    /// `kst(k0, s, t)` for random thresholds.
    Threshold,
}

impl KappaStrategy {
    pub const ALL: [KappaStrategy; 4] = [
        KappaStrategy::Uniform,
        KappaStrategy::PartsOne,
        KappaStrategy::PerturbedK0,
        KappaStrategy::Threshold,
    ];
}

/// A random exact-valued inclusion table on `s`, shaped by `strategy`.
/// The k0-based strategies need a set-extensional space.
pub fn random_kappa_with<R: Rng + ?Sized>(
    rng: &mut R,
    s: &Arc<GranularSpace>,
    strategy: KappaStrategy,
) -> Result<InclusionFunction> {
    let below_one = |rng: &mut R| {
        let q = rng.gen_range(1..=MAX_DENOMINATOR);
        ratio(rng.gen_range(0..q), q)
    };
    match strategy {
        KappaStrategy::Uniform => {
            let diag = rng.gen_bool(0.5);
            let mut vals = Vec::with_capacity(s.len() * s.len());
            for (a, b) in s.pairs() {
                vals.push(if diag && a == b {
                    one()
                } else {
                    random_unit_rational(rng)
                });
            }
            InclusionFunction::from_values(s, "uniform", vals)
        }
        KappaStrategy::PartsOne => {
            let strict = rng.gen_bool(0.5);
            let mut vals = Vec::with_capacity(s.len() * s.len());
            for (a, b) in s.pairs() {
                vals.push(if s.part(a, b) {
                    one()
                } else if strict {
                    below_one(rng)
                } else {
                    random_unit_rational(rng)
                });
            }
            InclusionFunction::from_values(s, "parts-one", vals)
        }
        KappaStrategy::PerturbedK0 => {
            let mut vals = k0(s)?.values().to_vec();
            let edits = rng.gen_range(1..=3);
            for _ in 0..edits {
                let i = rng.gen_range(0..vals.len());
                vals[i] = random_unit_rational(rng);
            }
            InclusionFunction::from_values(s, "perturbed-k0", vals)
        }
        KappaStrategy::Threshold => {
            let (lo, hi) = random_thresholds(rng, false);
            kst(&k0(s)?, &lo, &hi)
        }
    }
}

pub fn random_kappa<R: Rng + ?Sized>(
    rng: &mut R,
    s: &Arc<GranularSpace>,
) -> Result<InclusionFunction> {
    let strategy = *KappaStrategy::ALL.choose(rng).expect("nonempty");
    random_kappa_with(rng, s, strategy)
}

/// A term over `k0`, `k1`, `k2` and `top` whose value is a wqRIF on any set
/// HGOS. `depth` bounds the nesting of operators.
pub fn random_wqrif_term<R: Rng + ?Sized>(rng: &mut R, depth: u32) -> AlgebraTerm {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..7) {
            0 => AlgebraTerm::Top,
            1 | 2 => AlgebraTerm::base("k0"),
            3 | 4 => AlgebraTerm::base("k1"),
            _ => AlgebraTerm::base("k2"),
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..7) {
        0 => AlgebraTerm::product(random_wqrif_term(rng, d), random_wqrif_term(rng, d)),
        1 => AlgebraTerm::alpha_sum(
            random_alpha(rng),
            random_wqrif_term(rng, d),
            random_wqrif_term(rng, d),
        ),
        2 => AlgebraTerm::sharp(random_wqrif_term(rng, d)),
        3 => AlgebraTerm::flat(random_wqrif_term(rng, d)),
        4 => AlgebraTerm::sigma(random_wqrif_term(rng, d)),
        5 => AlgebraTerm::power(random_wqrif_term(rng, d), rng.gen_range(1..=3)),
        _ => {
            let (lo, hi) = random_thresholds(rng, false);
            AlgebraTerm::kst(random_wqrif_term(rng, d), lo, hi)
        }
    }
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::rational::{in_unit_interval, zero};

    #[test]
    fn generators_are_seed_deterministic() {
        let run = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = random_set_hgos(&mut rng, 2, 4).unwrap();
            let f = random_kappa(&mut rng, &s).unwrap();
            (
                s.len(),
                f.values().to_vec(),
                random_wqrif_term(&mut rng, 3).to_string(),
            )
        };
        assert_eq!(run(11), run(11));
    }

    #[test]
    fn generated_values_stay_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            assert!(in_unit_interval(&random_unit_rational(&mut rng)));
            let (s, t) = random_thresholds(&mut rng, true);
            assert!(zero() <= s && s < t && t < one());
        }
        for _ in 0..20 {
            let s = random_set_hgos(&mut rng, 2, 4).unwrap();
            assert!((4..=16).contains(&s.len()));
        }
    }
}
