use std::fs;
use std::path::Path;

use anyhow::Context as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use rif_forge::algebra::{self, eval_term, AlgebraTerm, FailureKind, FailureWitness};
use rif_forge::inclusion::{verify_prif, AxiomProfile, Basis};
use rif_forge::measures::{self, VprsParams};
use rif_forge::random::{random_alpha, random_kappa, random_wqrif_term};
use rif_forge::rational::{format_rational, parse_rational, ratio};
use rif_forge::space::{check_admissibility, validate_space};
use rif_forge::table::{table_to_set_hgos, InformationTable};
use rif_forge::{AtomSet, GranularSpace, RifClass};

use crate::input;
use crate::output::{columns, witness_text, Outcome};

pub struct Context {
    pub seed: u64,
    pub budget: usize,
}

impl Context {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "ok"
    } else {
        "FAIL"
    }
}

fn verdict_row(
    name: String,
    holds: bool,
    violations: usize,
    witnesses: &[Vec<String>],
) -> Vec<String> {
    let mut row = vec![name, verdict(holds).to_string()];
    if !holds {
        let shown: Vec<String> = witnesses.iter().take(3).map(|w| witness_text(w)).collect();
        row.push(format!("{violations} violation(s): {}", shown.join(" ")));
    }
    row
}

pub fn validate(_ctx: &Context, path: &Path, term_depth: usize) -> anyhow::Result<Outcome> {
    let s = input::load_space(path)?;
    let mut reports = validate_space(&s);
    reports.extend(check_admissibility(&s, term_depth)?);
    let flavor = s.classify_flavor();
    let pass = reports.iter().all(|r| r.holds);

    let mut rows = vec![vec![
        "flavor".to_string(),
        flavor.to_string(),
        format!("(declared {})", s.flavor()),
    ]];
    for r in &reports {
        rows.push(verdict_row(
            r.axiom.to_string(),
            r.holds,
            r.violations,
            &r.witnesses,
        ));
    }
    rows.push(vec![
        "result".into(),
        if pass { "pass" } else { "fail" }.into(),
    ]);
    let json = json!({
        "command": "validate",
        "flavor": flavor,
        "declared_flavor": s.flavor(),
        "pass": pass,
        "axioms": reports,
    });
    Ok(Outcome::new(pass, json, columns(&rows)))
}

pub fn approximate(_ctx: &Context, path: &Path, include_bottom: bool) -> anyhow::Result<Outcome> {
    let s = input::load_space(path)?;
    s.require_set_extensional()?;
    let atoms = s.atoms();
    let mut elems: Vec<_> = s
        .elements()
        .filter(|&x| include_bottom || x != s.bottom())
        .map(|x| Ok((s.require_carrier(x)?, x)))
        .collect::<rif_forge::Result<_>>()?;
    elems.sort_by(|(a, _), (b, _)| a.size_lex_key(atoms).cmp(&b.size_lex_key(atoms)));

    let show = |c: AtomSet| s.show_carrier(c);
    let mut rows = vec![vec!["x".to_string(), "x^l".into(), "x^u".into()]];
    let mut json_rows = Vec::new();
    for (c, x) in elems {
        let (l, u) = (
            s.require_carrier(s.lower(x))?,
            s.require_carrier(s.upper(x))?,
        );
        rows.push(vec![show(c), show(l), show(u)]);
        json_rows.push(json!({
            "element": s.name(x),
            "x": show(c),
            "lower": show(l),
            "upper": show(u),
            "definite": l == c && u == c,
        }));
    }
    let json = json!({ "command": "approximate", "rows": json_rows });
    Ok(Outcome::new(true, json, columns(&rows)))
}

fn parse_class(text: &str) -> anyhow::Result<RifClass> {
    Ok(match text.to_ascii_lowercase().as_str() {
        "rif" => RifClass::Rif,
        "qrif" => RifClass::QRif,
        "wqrif" => RifClass::WqRif,
        "none" => RifClass::None,
        _ => {
            return Err(rif_forge::Error::Input(format!(
                "unknown class `{text}` (expected RIF, qRIF, wqRIF or none)"
            ))
            .into())
        }
    })
}

pub fn classify(
    _ctx: &Context,
    path: &Path,
    term: &str,
    env: Option<&Path>,
    order_basis: bool,
    expect: Option<&str>,
) -> anyhow::Result<Outcome> {
    let s = input::load_space(path)?;
    let env = input::load_env(&s, env)?;
    let f = input::eval(&env, term)?;
    let basis = if order_basis {
        Basis::Order
    } else {
        Basis::Parthood
    };
    let profile = AxiomProfile::with_basis(&f, basis);
    let class = profile.class();
    let pass = match expect {
        Some(e) => class.is_at_least(parse_class(e)?),
        None => class != RifClass::None,
    };

    let mut rows = vec![vec!["class".to_string(), class.to_string()]];
    for r in profile.reports() {
        rows.push(verdict_row(
            r.axiom.to_string(),
            r.holds,
            r.violations,
            &r.witnesses,
        ));
    }
    let reports: Vec<_> = profile.reports().collect();
    let json = json!({
        "command": "classify",
        "term": f.label(),
        "basis": if order_basis { "order" } else { "parthood" },
        "class": class,
        "axioms": reports,
    });
    Ok(Outcome::new(pass, json, columns(&rows)))
}

pub fn check_laws(
    ctx: &Context,
    path: &Path,
    terms: &[String],
    env: Option<&Path>,
    alphas: &[String],
    random: usize,
) -> anyhow::Result<Outcome> {
    let s = input::load_space(path)?;
    let env = input::load_env(&s, env)?;
    let mut rng = ctx.rng();
    let term_list: Vec<AlgebraTerm> = if terms.is_empty() {
        (0..random)
            .map(|_| random_wqrif_term(&mut rng, 3))
            .collect()
    } else {
        terms
            .iter()
            .map(|t| AlgebraTerm::parse(t).with_context(|| format!("parsing term `{t}`")))
            .collect::<anyhow::Result<_>>()?
    };
    let alpha_list = if alphas.is_empty() {
        let mut a = vec![ratio(0, 1), ratio(1, 3), ratio(1, 2), ratio(1, 1)];
        a.extend((0..2).map(|_| random_alpha(&mut rng)));
        a
    } else {
        alphas
            .iter()
            .map(|a| parse_rational(a))
            .collect::<rif_forge::Result<_>>()?
    };
    let fns = term_list
        .iter()
        .map(|t| eval_term(t, &env).with_context(|| format!("evaluating `{t}`")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let reports = algebra::check_laws(&s, &fns, &alpha_list)?;
    let pass = reports.iter().all(|r| r.holds);

    let mut rows: Vec<Vec<String>> = term_list
        .iter()
        .enumerate()
        .map(|(i, t)| vec![format!("f{i}"), t.to_string()])
        .collect();
    rows.push(vec![
        "alphas".into(),
        alpha_list
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(" "),
    ]);
    for r in &reports {
        rows.push(verdict_row(
            r.law.to_string(),
            r.holds,
            r.violations,
            &r.witnesses,
        ));
    }
    let json = json!({
        "command": "check-laws",
        "seed": ctx.seed,
        "terms": term_list.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "alphas": alpha_list.iter().map(format_rational).collect::<Vec<_>>(),
        "pass": pass,
        "laws": reports,
    });
    Ok(Outcome::new(pass, json, columns(&rows)))
}

pub fn prif_verify(
    ctx: &Context,
    path: &Path,
    term: Option<&str>,
    env: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let s = input::load_space(path)?;
    let fns = match term {
        Some(t) => vec![input::eval(&input::load_env(&s, env)?, t)?],
        None => {
            let mut rng = ctx.rng();
            (0..ctx.budget)
                .map(|_| random_kappa(&mut rng, &s))
                .collect::<rif_forge::Result<_>>()?
        }
    };
    let mut falsified = Vec::new();
    let mut tallies: Vec<(String, usize, usize)> = Vec::new();
    for (i, f) in fns.iter().enumerate() {
        for v in verify_prif(f) {
            match tallies.iter_mut().find(|(n, _, _)| n == v.name) {
                Some(t) => {
                    t.1 += usize::from(v.applicable && v.premises);
                    t.2 += usize::from(v.falsified);
                }
                None => tallies.push((
                    v.name.to_string(),
                    usize::from(v.applicable && v.premises),
                    usize::from(v.falsified),
                )),
            }
            if v.falsified {
                falsified.push(json!({ "trial": i, "function": f.label(), "verdict": v }));
            }
        }
    }
    let pass = falsified.is_empty();
    let mut rows = vec![vec![
        "implication".to_string(),
        "premise held".into(),
        "falsified".into(),
    ]];
    for (name, premises, bad) in &tallies {
        rows.push(vec![name.clone(), premises.to_string(), bad.to_string()]);
    }
    rows.push(vec!["trials".into(), fns.len().to_string()]);
    let json = json!({
        "command": "prif-verify",
        "seed": ctx.seed,
        "trials": fns.len(),
        "pass": pass,
        "implications": tallies
            .iter()
            .map(|(n, p, b)| json!({ "name": n, "premises_held": p, "falsified": b }))
            .collect::<Vec<_>>(),
        "counterexamples": falsified,
    });
    Ok(Outcome::new(pass, json, columns(&rows)))
}

fn witness_json(w: &FailureWitness, verified: bool) -> Value {
    json!({
        "kind": w.kind,
        "f": w.f.label(),
        "h": w.h.as_ref().map(|h| h.label()),
        "alpha": w.alpha.as_ref().map(format_rational),
        "r1_witnesses": w.r1_witnesses,
        "reverified": verified,
    })
}

pub fn rif_failure_search(
    ctx: &Context,
    path: &Path,
    store: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let s = input::load_space(path)?;
    let mut rng = ctx.rng();
    let report = algebra::rif_failure_search(&s, ctx.budget, &mut rng)?;
    let closure_ok = report.product_failures.is_empty()
        && report.mixed_failures.is_empty()
        && report.semigroup_failures.is_empty();

    let mut rows = vec![
        vec!["budget".to_string(), report.budget.to_string()],
        vec!["RIF pool".into(), report.rif_pool.join(" ")],
    ];
    let mut kinds = serde_json::Map::new();
    let mut all_verified = true;
    for (kind, name, trials) in [
        (FailureKind::AlphaSum, "alpha-sum", report.alpha_sum_trials),
        (FailureKind::Sharp, "sharp", report.sharp_trials),
        (FailureKind::Flat, "flat", report.flat_trials),
    ] {
        let ws = report.witnesses(kind);
        let mut entries = Vec::new();
        for (i, w) in ws.iter().enumerate() {
            let ok = w.reverify()?;
            all_verified &= ok;
            entries.push(witness_json(w, ok));
            if let Some(dir) = store {
                fs::create_dir_all(dir).map_err(rif_forge::Error::from)?;
                let file = dir.join(format!("{name}_r1_{i}.json"));
                let text = serde_json::to_string_pretty(&w.to_record()).expect("records serialize");
                fs::write(&file, text + "\n").map_err(rif_forge::Error::from)?;
            }
        }
        let summary = match ws.first() {
            Some(w) => format!(
                "{} witness(es); e.g. {}{} at {}",
                ws.len(),
                w.f.label(),
                w.alpha
                    .as_ref()
                    .map(|a| format!(" alpha={a} h={}", w.h.as_ref().map_or("", |h| h.label())))
                    .unwrap_or_default(),
                w.r1_witnesses
                    .first()
                    .map(|p| witness_text(p))
                    .unwrap_or_default()
            ),
            None => "none found within budget".into(),
        };
        rows.push(vec![
            format!("{name} R1"),
            format!("{trials} trials"),
            summary,
        ]);
        kinds.insert(
            name.to_string(),
            json!({ "trials": trials, "witnesses": entries }),
        );
    }
    rows.push(vec![
        "RIF*RIF".into(),
        format!("{} trials", report.product_trials),
        format!("{} non-RIF", report.product_failures.len()),
    ]);
    rows.push(vec![
        "RIF*wqRIF".into(),
        format!("{} trials", report.mixed_trials),
        format!("{} non-RIF", report.mixed_failures.len()),
    ]);
    rows.push(vec![
        "semigroup".into(),
        format!("{} trials", report.semigroup_trials),
        format!("{} failures", report.semigroup_failures.len()),
    ]);
    let pass = closure_ok && all_verified;
    let json = json!({
        "command": "rif-failure-search",
        "seed": ctx.seed,
        "budget": report.budget,
        "rif_pool": report.rif_pool,
        "wqrif_pool": report.wqrif_pool,
        "failures": kinds,
        "product": { "trials": report.product_trials, "failures": report.product_failures },
        "mixed_product": { "trials": report.mixed_trials, "failures": report.mixed_failures },
        "semigroup": { "trials": report.semigroup_trials, "failures": report.semigroup_failures },
        "pass": pass,
    });
    Ok(Outcome::new(pass, json, columns(&rows)))
}

#[allow(clippy::too_many_arguments)]
pub fn vprs(
    _ctx: &Context,
    path: &Path,
    term: &str,
    element: &str,
    alpha: &str,
    beta: &str,
    env: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let s = input::load_space(path)?;
    let env = input::load_env(&s, env)?;
    let f = input::eval(&env, term)?;
    let x = input::element(&s, element)?;
    let p = VprsParams::new(parse_rational(alpha)?, parse_rational(beta)?)?;
    let plain = measures::vprs(&s, &f, &p, x)?;
    let fixed = measures::fixed_vprs(&s, &f, &p, x)?;
    let regions = measures::regions(&s, x)?;
    let accuracy = match measures::accuracy_degree(&s, x) {
        Ok(a) => Some(a),
        Err(rif_forge::Error::UndefinedMeasure(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let show = |c: AtomSet| s.show_carrier(c);
    let rows = vec![
        vec!["X".to_string(), s.show(x)],
        vec!["vprs lower".into(), show(plain.lower)],
        vec!["vprs upper".into(), show(plain.upper)],
        vec!["fixed lower".into(), show(fixed.lower)],
        vec!["fixed upper".into(), show(fixed.upper)],
        vec!["positive".into(), show(regions.positive)],
        vec!["negative".into(), show(regions.negative)],
        vec!["boundary".into(), show(regions.boundary)],
        vec![
            "accuracy".into(),
            accuracy
                .as_ref()
                .map_or("undefined".into(), format_rational),
        ],
    ];
    let json = json!({
        "command": "vprs",
        "function": f.label(),
        "element": s.name(x),
        "alpha": format_rational(p.alpha()),
        "beta": format_rational(p.beta()),
        "vprs": { "lower": show(plain.lower), "upper": show(plain.upper) },
        "fixed_vprs": { "lower": show(fixed.lower), "upper": show(fixed.upper) },
        "regions": {
            "positive": show(regions.positive),
            "negative": show(regions.negative),
            "boundary": show(regions.boundary),
        },
        "accuracy": accuracy.as_ref().map(format_rational),
    });
    Ok(Outcome::new(true, json, columns(&rows)))
}

pub fn fit_alpha(
    _ctx: &Context,
    path: &Path,
    f: &str,
    h: &str,
    samples: &Path,
    env: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let s = input::load_space(path)?;
    let env = input::load_env(&s, env)?;
    let (fv, hv) = (input::eval(&env, f)?, input::eval(&env, h)?);
    let samples = input::load_samples(&s, samples)?;
    let alpha = algebra::fit_alpha(&fv, &hv, &samples)?;
    let one = ratio(1, 1);
    let error: rif_forge::Rational = samples
        .iter()
        .map(|((a, b), v)| {
            let r = &alpha * fv.value(*a, *b) + (&one - &alpha) * hv.value(*a, *b) - v;
            &r * &r
        })
        .sum();
    let rows = vec![
        vec!["alpha".to_string(), format_rational(&alpha)],
        vec!["squared error".into(), format_rational(&error)],
        vec!["samples".into(), samples.len().to_string()],
    ];
    let json = json!({
        "command": "fit-alpha",
        "f": fv.label(),
        "h": hv.label(),
        "alpha": format_rational(&alpha),
        "squared_error": format_rational(&error),
        "samples": samples.len(),
    });
    Ok(Outcome::new(true, json, columns(&rows)))
}

pub fn derive(csv: &Path, attrs: &[String], delimiter: char) -> anyhow::Result<Outcome> {
    let file = fs::File::open(input::resolve(csv))
        .map_err(rif_forge::Error::from)
        .with_context(|| format!("opening {}", csv.display()))?;
    let table = InformationTable::from_csv(file, delimiter)?;
    let attrs = if attrs.is_empty() {
        table.attributes().to_vec()
    } else {
        attrs.to_vec()
    };
    let space: GranularSpace = table_to_set_hgos(&table, &attrs)?;
    let text = space.to_json_string();
    let json: Value = serde_json::from_str(&text).expect("space files are JSON");
    let mut table_text = serde_json::to_string_pretty(&json).expect("JSON re-serializes");
    table_text.push('\n');
    Ok(Outcome::new(true, json, table_text))
}
