//! Loading spaces, environments and sample files.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context as _};
use serde::Deserialize;

use rif_forge::algebra::{eval_term, AlgebraTerm, Environment};
use rif_forge::fixtures::ABSTRACT_EXAMPLE_JSON;
use rif_forge::rational::parse_rational;
use rif_forge::{ElemId, GranularSpace, InclusionFunction, Rational};

pub const FIXTURES_ENV: &str = "RIF_FORGE_FIXTURES";

/// Name accepted in place of a path for the bundled example space.
pub const BUNDLED_FIXTURE: &str = "fixture";

fn bundled_fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Resolves an input path. Existing paths are used as given. Otherwise a
/// relative path is looked up in the fixture directory (`RIF_FORGE_FIXTURES`
/// when set, else the workspace's `fixtures/`), first as given and then by
/// file name.
pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    let dir = std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(bundled_fixture_dir);
    let stripped = path.strip_prefix("fixtures").unwrap_or(path);
    for candidate in [
        dir.join(stripped),
        dir.join(path.file_name().unwrap_or_default()),
    ] {
        if candidate.exists() {
            return candidate;
        }
    }
    path.to_path_buf()
}

pub fn read(path: &Path) -> anyhow::Result<String> {
    let resolved = resolve(path);
    fs::read_to_string(&resolved)
        .map_err(rif_forge::Error::from)
        .with_context(|| format!("reading {}", resolved.display()))
}

pub fn load_space(path: &Path) -> anyhow::Result<Arc<GranularSpace>> {
    let text = if path == Path::new(BUNDLED_FIXTURE) && !path.exists() {
        match std::env::var_os(FIXTURES_ENV) {
            Some(dir) => read(&PathBuf::from(dir).join("abstract_example.json"))?,
            None => ABSTRACT_EXAMPLE_JSON.to_string(),
        }
    } else {
        read(path)?
    };
    let space = GranularSpace::from_json_str(&text)
        .with_context(|| format!("loading space {}", path.display()))?;
    Ok(Arc::new(space))
}

/// One binding in an environment file: a term, or a full value table given
/// row by row in element order.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Binding {
    Term(String),
    Table(Vec<Vec<String>>),
}

/// Builds an environment with the built-ins plus the bindings of `path`.
/// Tables are bound first; terms may refer to built-ins, tables and other
/// terms, in any order, as long as there is no cycle.
pub fn load_env(space: &Arc<GranularSpace>, path: Option<&Path>) -> anyhow::Result<Environment> {
    let mut env = Environment::with_builtins(space);
    let Some(path) = path else { return Ok(env) };
    let text = read(path)?;
    let bindings: BTreeMap<String, Binding> = serde_json::from_str(&text)
        .map_err(rif_forge::Error::from)
        .with_context(|| format!("parsing environment {}", path.display()))?;
    let mut pending = Vec::new();
    for (name, b) in bindings {
        match b {
            Binding::Table(rows) => {
                let n = space.len();
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(rif_forge::Error::Input(format!(
                        "table `{name}` must be {n} x {n}"
                    )))
                    .context(format!("binding `{name}`"));
                }
                let values = rows
                    .iter()
                    .flatten()
                    .map(|v| parse_rational(v))
                    .collect::<Result<Vec<_>, _>>()?;
                env.bind(
                    name.clone(),
                    InclusionFunction::from_values(space, name, values)?,
                )?;
            }
            Binding::Term(text) => pending.push((name, AlgebraTerm::parse(&text)?)),
        }
    }
    while !pending.is_empty() {
        let before = pending.len();
        let mut rest = Vec::new();
        for (name, term) in pending {
            match eval_term(&term, &env) {
                Ok(f) => env.bind(name.clone(), f.with_label(name))?,
                Err(rif_forge::Error::Unbound(_)) => rest.push((name, term)),
                Err(e) => return Err(e).context(format!("binding `{name}`")),
            }
        }
        if rest.len() == before {
            let names: Vec<&str> = rest.iter().map(|(n, _)| n.as_str()).collect();
            return Err(rif_forge::Error::Unbound(names.join(", ")))
                .context("environment bindings refer to unknown or cyclic names");
        }
        pending = rest;
    }
    Ok(env)
}

pub fn eval(env: &Environment, text: &str) -> anyhow::Result<InclusionFunction> {
    let term = AlgebraTerm::parse(text).with_context(|| format!("parsing term `{text}`"))?;
    eval_term(&term, env).with_context(|| format!("evaluating `{text}`"))
}

/// An element given by id, or by its carrier written as `{a,b}`.
pub fn element(space: &GranularSpace, text: &str) -> anyhow::Result<ElemId> {
    if let Ok(id) = space.id(text) {
        return Ok(id);
    }
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| anyhow!(rif_forge::Error::UnknownElement(text.to_string())))?;
    let mut carrier = rif_forge::AtomSet::EMPTY;
    for atom in inner.split(',').map(str::trim).filter(|a| !a.is_empty()) {
        let Some(i) = space.atoms().iter().position(|a| a == atom) else {
            bail!(rif_forge::Error::UnknownElement(text.to_string()));
        };
        carrier = carrier.union(rif_forge::AtomSet::singleton(i));
    }
    space
        .element_with_carrier(carrier)
        .ok_or_else(|| anyhow!(rif_forge::Error::UnknownElement(text.to_string())))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Sample {
    a: String,
    b: String,
    target: String,
}

pub fn load_samples(
    space: &GranularSpace,
    path: &Path,
) -> anyhow::Result<Vec<((ElemId, ElemId), Rational)>> {
    let text = read(path)?;
    let raw: Vec<Sample> = serde_json::from_str(&text)
        .map_err(rif_forge::Error::from)
        .with_context(|| format!("parsing samples {}", path.display()))?;
    raw.iter()
        .map(|s| {
            Ok((
                (element(space, &s.a)?, element(space, &s.b)?),
                parse_rational(&s.target)?,
            ))
        })
        .collect()
}
