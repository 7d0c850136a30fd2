//! The JSON space file format.
//!
//! ```json
//! {
//!   "elements": [{"id": "bot", "carrier": []}, {"id": "top", "carrier": ["x"]}],
//!   "parthood": [["bot", "top"]],
//!   "order": "inclusion",
//!   "join": [["top", "top", "top"]],
//!   "meet": "intersection",
//!   "granulation": ["top"],
//!   "lower": "granular",
//!   "upper": [["bot", "bot"], ["top", "top"]],
//!   "bottom": "bot",
//!   "top": "top",
//!   "flavor": "GGS",
//!   "closure": ["parthood"]
//! }
//! ```
//!
//! `closure` lists relations given by generating pairs; they are replaced by
//! their reflexive–transitive closure on load.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{
    approx, reflexive_transitive_closure, ElemId, Flavor, GranularSpace, OpTable, Relation,
};
use crate::atoms::{AtomSet, MAX_ATOMS};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationName {
    Inclusion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RelationSpec {
    Named(RelationName),
    Pairs(Vec<(String, String)>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpName {
    Union,
    Intersection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OpSpec {
    Named(OpName),
    Triples(Vec<(String, String, String)>),
}

impl Default for OpSpec {
    fn default() -> Self {
        OpSpec::Triples(Vec::new())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ApproxName {
    Granular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ApproxSpec {
    Named(ApproxName),
    Pairs(Vec<(String, String)>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureTarget {
    Parthood,
    Order,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    #[serde(default)]
    pub flavor: Flavor,
    pub elements: Vec<ElementEntry>,
    pub bottom: String,
    pub top: String,
    pub granulation: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub closure: Vec<ClosureTarget>,
    pub parthood: RelationSpec,
    pub order: RelationSpec,
    #[serde(default)]
    pub join: OpSpec,
    #[serde(default)]
    pub meet: OpSpec,
    pub lower: ApproxSpec,
    pub upper: ApproxSpec,
}

impl GranularSpace {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: SpaceFile = serde_json::from_str(text)?;
        Self::from_file(file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("space files always serialize")
    }

    pub fn from_file(file: SpaceFile) -> Result<Self> {
        let n = file.elements.len();
        let mut names = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        for (i, entry) in file.elements.iter().enumerate() {
            if index.insert(entry.id.clone(), ElemId(i)).is_some() {
                return Err(Error::Duplicate(entry.id.clone()));
            }
            names.push(entry.id.clone());
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Structural(format!("`{name}` is not an element")))
        };

        let atoms: Vec<String> = file
            .elements
            .iter()
            .flat_map(|e| e.carrier.iter().flatten().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if atoms.len() > MAX_ATOMS {
            return Err(Error::Size(format!(
                "{} atoms exceed the limit of {MAX_ATOMS}",
                atoms.len()
            )));
        }
        let atom_index: HashMap<&str, usize> = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_str(), i))
            .collect();
        let mut carriers = Vec::with_capacity(n);
        let mut by_carrier = HashMap::new();
        for (i, entry) in file.elements.iter().enumerate() {
            let carrier = entry.carrier.as_ref().map(|c| {
                c.iter().fold(AtomSet::EMPTY, |acc, a| {
                    acc.union(AtomSet::singleton(atom_index[a.as_str()]))
                })
            });
            if let Some(c) = carrier {
                if let Some(prev) = by_carrier.insert(c, ElemId(i)) {
                    return Err(Error::Structural(format!(
                        "`{}` and `{}` share a carrier",
                        names[prev.0], entry.id
                    )));
                }
            }
            carriers.push(carrier);
        }

        let relation = |spec: &RelationSpec, target: ClosureTarget| -> Result<Relation> {
            match spec {
                RelationSpec::Named(RelationName::Inclusion) => Ok(Relation::Inclusion),
                RelationSpec::Pairs(pairs) => {
                    let mut bits = vec![false; n * n];
                    for (a, b) in pairs {
                        bits[lookup(a)?.0 * n + lookup(b)?.0] = true;
                    }
                    if file.closure.contains(&target) {
                        reflexive_transitive_closure(&mut bits, n);
                    }
                    Ok(Relation::Table(bits))
                }
            }
        };
        let op = |spec: &OpSpec, what: &str| -> Result<OpTable> {
            match spec {
                OpSpec::Named(OpName::Union) => Ok(OpTable::Union),
                OpSpec::Named(OpName::Intersection) => Ok(OpTable::Intersection),
                OpSpec::Triples(triples) => {
                    let mut table = vec![None; n * n];
                    for (a, b, r) in triples {
                        let slot = &mut table[lookup(a)?.0 * n + lookup(b)?.0];
                        let r = lookup(r)?;
                        if slot.is_some_and(|prev| prev != r) {
                            return Err(Error::Structural(format!(
                                "{what}({a}, {b}) has two results"
                            )));
                        }
                        *slot = Some(r);
                    }
                    Ok(OpTable::Table(table))
                }
            }
        };

        let mut granules = Vec::new();
        let mut is_granule = vec![false; n];
        for g in &file.granulation {
            let id = lookup(g)?;
            if !is_granule[id.0] {
                is_granule[id.0] = true;
                granules.push(id);
            }
        }
        granules.sort();

        let mut space = GranularSpace {
            parthood: relation(&file.parthood, ClosureTarget::Parthood)?,
            order: relation(&file.order, ClosureTarget::Order)?,
            join: op(&file.join, "join")?,
            meet: op(&file.meet, "meet")?,
            bottom: lookup(&file.bottom)?,
            top: lookup(&file.top)?,
            names,
            index: index.clone(),
            atoms,
            carriers,
            by_carrier,
            granules,
            is_granule,
            lower: (0..n).map(ElemId).collect(),
            upper: (0..n).map(ElemId).collect(),
            flavor: file.flavor,
        };
        let approximations = |spec: &ApproxSpec, space: &GranularSpace, upper: bool| match spec {
            ApproxSpec::Named(ApproxName::Granular) => space
                .elements()
                .map(|e| {
                    if upper {
                        approx::granular_upper(space, e)
                    } else {
                        approx::granular_lower(space, e)
                    }
                })
                .collect::<Result<Vec<_>>>(),
            ApproxSpec::Pairs(pairs) => {
                let mut map = vec![None; n];
                for (x, y) in pairs {
                    let slot = &mut map[lookup(x)?.0];
                    if slot.is_some() {
                        return Err(Error::Structural(format!(
                            "approximation of `{x}` given twice"
                        )));
                    }
                    *slot = Some(lookup(y)?);
                }
                map.into_iter()
                    .enumerate()
                    .map(|(i, v)| {
                        v.ok_or_else(|| {
                            Error::Structural(format!(
                                "approximation of `{}` missing",
                                space.names[i]
                            ))
                        })
                    })
                    .collect()
            }
        };
        let lower = approximations(&file.lower, &space, false)?;
        let upper = approximations(&file.upper, &space, true)?;
        space.lower = lower;
        space.upper = upper;
        space.check_structure()?;
        Ok(space)
    }

    /// Serializes back to the file format; symbolic relations and operations
    /// stay symbolic.
    pub fn to_file(&self) -> SpaceFile {
        let name = |e: ElemId| self.names[e.0].clone();
        let relation = |r: &Relation| match r {
            Relation::Inclusion => RelationSpec::Named(RelationName::Inclusion),
            Relation::Table(_) => RelationSpec::Pairs(
                self.pairs()
                    .filter(|&(a, b)| self.relation_holds(r, a, b))
                    .map(|(a, b)| (name(a), name(b)))
                    .collect(),
            ),
        };
        let op = |o: &OpTable| match o {
            OpTable::Union => OpSpec::Named(OpName::Union),
            OpTable::Intersection => OpSpec::Named(OpName::Intersection),
            OpTable::Table(_) => OpSpec::Triples(
                self.pairs()
                    .filter_map(|(a, b)| self.apply(o, a, b).map(|r| (name(a), name(b), name(r))))
                    .collect(),
            ),
        };
        let approx = |m: &[ElemId]| {
            ApproxSpec::Pairs(self.elements().map(|e| (name(e), name(m[e.0]))).collect())
        };
        SpaceFile {
            flavor: self.flavor,
            elements: self
                .elements()
                .map(|e| ElementEntry {
                    id: name(e),
                    carrier: self.carriers[e.0]
                        .map(|c| c.iter().map(|i| self.atoms[i].clone()).collect()),
                })
                .collect(),
            bottom: name(self.bottom),
            top: name(self.top),
            granulation: self.granules.iter().map(|&g| name(g)).collect(),
            closure: Vec::new(),
            parthood: relation(&self.parthood),
            order: relation(&self.order),
            join: op(&self.join),
            meet: op(&self.meet),
            lower: approx(&self.lower),
            upper: approx(&self.upper),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TINY: &str = r#"{
        "elements": [{"id": "bot", "carrier": []}, {"id": "top", "carrier": ["x"]}],
        "parthood": "inclusion",
        "order": "inclusion",
        "join": "union",
        "meet": "intersection",
        "granulation": ["top"],
        "lower": "granular",
        "upper": "granular",
        "bottom": "bot",
        "top": "top",
        "flavor": "setHGOS"
    }"#;

    #[test]
    fn loads_symbolic_space() {
        let s = GranularSpace::from_json_str(TINY).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.classify_flavor(), Flavor::SetHgos);
        let top = s.id("top").unwrap();
        assert_eq!(s.lower(top), top);
        assert_eq!(s.upper(s.bottom()), s.bottom());
    }

    #[test]
    fn round_trips_through_file_format() {
        let s = GranularSpace::from_json_str(TINY).unwrap();
        let again = GranularSpace::from_json_str(&s.to_json_string()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn operation_result_outside_elements_is_structural() {
        let text = TINY.replace(
            r#""join": "union""#,
            r#""join": [["top", "top", "nowhere"]]"#,
        );
        let err = GranularSpace::from_json_str(&text).unwrap_err();
        assert!(
            matches!(err, Error::Structural(ref m) if m.contains("nowhere")),
            "{err}"
        );
    }

    #[test]
    fn missing_approximation_is_structural() {
        let text = TINY.replace(r#""upper": "granular""#, r#""upper": [["top", "top"]]"#);
        assert!(matches!(
            GranularSpace::from_json_str(&text),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn overclaimed_flavor_is_rejected() {
        let text = TINY.replace(r#""order": "inclusion""#, r#""order": [["bot", "bot"]]"#);
        let err = GranularSpace::from_json_str(&text).unwrap_err();
        assert!(err.to_string().contains("declared flavor"), "{err}");
    }

    #[test]
    fn malformed_json_is_a_json_error() {
        assert!(matches!(
            GranularSpace::from_json_str("{ \"elements\": [ }"),
            Err(Error::Json(_))
        ));
    }
}
