//! Exhaustive verification of the hemiring and order laws.
//!
//! Every law is checked pointwise with exact rational arithmetic over all
//! supplied functions, every supplied `α`, and every element pair. Witnesses
//! name the functions by label, then `α` where relevant, then the pair.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::ops;
use crate::error::{Error, Result};
use crate::inclusion::InclusionFunction;
use crate::rational::{one, Rational};
use crate::space::{ElemId, GranularSpace};
use crate::tally::Tally;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Law {
    Comm,
    Assoc,
    Identity,
    Idempotence,
    Distributivity,
    #[serde(rename = "Order-1")]
    Order1,
    #[serde(rename = "Order-2")]
    Order2,
    Top,
    #[serde(rename = "weak-sharp-comp")]
    WeakSharpComp,
    #[serde(rename = "weak-flat-comp")]
    WeakFlatComp,
    #[serde(rename = "R0+")]
    R0Plus,
}

impl Law {
    pub const ALL: [Law; 11] = [
        Law::Comm,
        Law::Assoc,
        Law::Identity,
        Law::Idempotence,
        Law::Distributivity,
        Law::Order1,
        Law::Order2,
        Law::Top,
        Law::WeakSharpComp,
        Law::WeakFlatComp,
        Law::R0Plus,
    ];

    /// The hemiring identities, as opposed to the order laws.
    pub fn is_hemiring(self) -> bool {
        matches!(
            self,
            Law::Comm | Law::Assoc | Law::Identity | Law::Idempotence | Law::Distributivity
        )
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::Comm => "Comm",
            Law::Assoc => "Assoc",
            Law::Identity => "Identity",
            Law::Idempotence => "Idempotence",
            Law::Distributivity => "Distributivity",
            Law::Order1 => "Order-1",
            Law::Order2 => "Order-2",
            Law::Top => "Top",
            Law::WeakSharpComp => "weak-sharp-comp",
            Law::WeakFlatComp => "weak-flat-comp",
            Law::R0Plus => "R0+",
        })
    }
}

/// Verdict for one law. `checked` counts the instances examined: function
/// tuples (times `α` values) for the identities and order laws, and
/// `(function, pair)` instances whose premise held for the pointwise laws.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: Law,
    pub holds: bool,
    pub checked: usize,
    pub violations: usize,
    pub witnesses: Vec<Vec<String>>,
}

impl LawReport {
    fn new(law: Law, checked: usize, t: Tally) -> Self {
        LawReport {
            law,
            holds: t.holds(),
            checked,
            violations: t.violations,
            witnesses: t.witnesses,
        }
    }
}

struct Ctx<'a> {
    s: &'a GranularSpace,
    fns: &'a [InclusionFunction],
}

impl Ctx<'_> {
    fn pair_names(&self, i: usize) -> [String; 2] {
        let n = self.s.len();
        [
            self.s.name(ElemId(i / n)).to_string(),
            self.s.name(ElemId(i % n)).to_string(),
        ]
    }

    /// First pair index (row-major) at which `ok` fails.
    fn first_failure(&self, ok: impl Fn(usize) -> bool) -> Option<usize> {
        (0..self.s.len() * self.s.len()).find(|&i| !ok(i))
    }

    fn witness(&self, idx: &[usize], alpha: Option<&Rational>, pair: usize) -> Vec<String> {
        let mut w: Vec<String> = idx
            .iter()
            .map(|&i| self.fns[i].label().to_string())
            .collect();
        if let Some(a) = alpha {
            w.push(format!("alpha={a}"));
        }
        w.extend(self.pair_names(pair));
        w
    }
}

/// Checks all eleven laws and returns one report per law, in [`Law::ALL`]
/// order.
pub fn check_laws(
    s: &Arc<GranularSpace>,
    fns: &[InclusionFunction],
    alphas: &[Rational],
) -> Result<Vec<LawReport>> {
    if fns
        .iter()
        .any(|f| !Arc::ptr_eq(f.space(), s) && **f.space() != **s)
    {
        return Err(Error::MismatchedSpaces);
    }
    for a in alphas {
        ops::check_alpha(a)?;
    }
    let cx = Ctx { s, fns };
    let v = |i: usize| fns[i].values();
    let k = fns.len();
    let one = one();
    let mut out = Vec::with_capacity(Law::ALL.len());

    // Comm
    let mut t = Tally::default();
    let mut checked = 0;
    for i in 0..k {
        for j in 0..k {
            checked += 1;
            if let Some(p) = cx.first_failure(|p| &v(i)[p] * &v(j)[p] == &v(j)[p] * &v(i)[p]) {
                t.check(false, || cx.witness(&[i, j], None, p));
            }
        }
    }
    out.push(LawReport::new(Law::Comm, checked, t));

    // Assoc
    let mut t = Tally::default();
    let mut checked = 0;
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                checked += 1;
                let ok =
                    |p: usize| &v(i)[p] * (&v(j)[p] * &v(l)[p]) == (&v(i)[p] * &v(j)[p]) * &v(l)[p];
                if let Some(p) = cx.first_failure(ok) {
                    t.check(false, || cx.witness(&[i, j, l], None, p));
                }
            }
        }
    }
    out.push(LawReport::new(Law::Assoc, checked, t));

    // Identity: f ⊗ ⊤ = f
    let mut t = Tally::default();
    for i in 0..k {
        if let Some(p) = cx.first_failure(|p| &v(i)[p] * &one == v(i)[p]) {
            t.check(false, || cx.witness(&[i], None, p));
        }
    }
    out.push(LawReport::new(Law::Identity, k, t));

    // Idempotence: f ⊕α f = f
    let mut t = Tally::default();
    let mut checked = 0;
    for i in 0..k {
        for a in alphas {
            checked += 1;
            let b = &one - a;
            if let Some(p) = cx.first_failure(|p| a * &v(i)[p] + &b * &v(i)[p] == v(i)[p]) {
                t.check(false, || cx.witness(&[i], Some(a), p));
            }
        }
    }
    out.push(LawReport::new(Law::Idempotence, checked, t));

    // Distributivity: f ⊗ (t ⊕α h) = (f ⊗ t) ⊕α (f ⊗ h)
    let mut t = Tally::default();
    let mut checked = 0;
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                for a in alphas {
                    checked += 1;
                    let b = &one - a;
                    let ok = |p: usize| {
                        let (f, tt, h) = (&v(i)[p], &v(j)[p], &v(l)[p]);
                        f * (a * tt + &b * h) == a * (f * tt) + &b * (f * h)
                    };
                    if let Some(p) = cx.first_failure(ok) {
                        t.check(false, || cx.witness(&[i, j, l], Some(a), p));
                    }
                }
            }
        }
    }
    out.push(LawReport::new(Law::Distributivity, checked, t));

    // Order-1 and Order-2 over all ⪯-comparable quadruples.
    let below: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| v(i).iter().zip(v(j)).all(|(x, y)| x <= y))
                .collect()
        })
        .collect();
    let comparable: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| below[i][j])
        .collect();

    let mut t = Tally::default();
    let mut checked = 0;
    for &(f, h) in &comparable {
        for &(f2, h2) in &comparable {
            checked += 1;
            let ok = |p: usize| &v(f)[p] * &v(f2)[p] <= &v(h)[p] * &v(h2)[p];
            if let Some(p) = cx.first_failure(ok) {
                t.check(false, || cx.witness(&[f, h, f2, h2], None, p));
            }
        }
    }
    out.push(LawReport::new(Law::Order1, checked, t));

    let mut t = Tally::default();
    let mut checked = 0;
    for &(f, h) in &comparable {
        for &(f2, h2) in &comparable {
            for a in alphas {
                checked += 1;
                let b = &one - a;
                let ok = |p: usize| a * &v(f)[p] + &b * &v(f2)[p] <= a * &v(h)[p] + &b * &v(h2)[p];
                if let Some(p) = cx.first_failure(ok) {
                    t.check(false, || cx.witness(&[f, h, f2, h2], Some(a), p));
                }
            }
        }
    }
    out.push(LawReport::new(Law::Order2, checked, t));

    // Top: f ⪯ ⊤
    let mut t = Tally::default();
    for i in 0..k {
        if let Some(p) = cx.first_failure(|p| v(i)[p] <= one) {
            t.check(false, || cx.witness(&[i], None, p));
        }
    }
    out.push(LawReport::new(Law::Top, k, t));

    // Pointwise comparison laws.
    let mut sharp_t = Tally::default();
    let mut flat_t = Tally::default();
    let mut r0_t = Tally::default();
    let (mut sharp_n, mut flat_n, mut r0_n) = (0, 0, 0);
    for (i, f) in fns.iter().enumerate() {
        let sf = ops::sharp(f)?;
        let ff = ops::flat(f)?;
        let gf = ops::sigma(f)?;
        for (a, b) in s.pairs() {
            let p = a.0 * s.len() + b.0;
            if s.part(a, s.lower(a)) {
                sharp_n += 1;
                sharp_t.check(sf.value(a, b) <= f.value(a, b), || {
                    cx.witness(&[i], None, p)
                });
            }
            if s.part(s.upper(a), a) {
                flat_n += 1;
                flat_t.check(f.value(a, b) <= ff.value(a, b), || {
                    cx.witness(&[i], None, p)
                });
            }
            if s.part(a, b) {
                r0_n += 1;
                r0_t.check(gf.is_one(a, b), || cx.witness(&[i], None, p));
            }
        }
    }
    out.push(LawReport::new(Law::WeakSharpComp, sharp_n, sharp_t));
    out.push(LawReport::new(Law::WeakFlatComp, flat_n, flat_t));
    out.push(LawReport::new(Law::R0Plus, r0_n, r0_t));

    Ok(out)
}
