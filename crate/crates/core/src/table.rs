//! Information tables, indiscernibility and classical approximations.

use std::collections::{BTreeSet, HashMap};
use std::io::Read;

use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::space::{ElemId, Flavor, GranularSpace, OpTable, Relation};

/// Power-set universes are limited to this many objects.
pub const MAX_POWER_SET_OBJECTS: usize = 16;

pub type ValueSet = BTreeSet<String>;

/// Objects × attributes with set-valued cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InformationTable {
    objects: Vec<String>,
    attributes: Vec<String>,
    /// `valuation[attribute][object]`
    valuation: Vec<Vec<ValueSet>>,
}

impl InformationTable {
    /// `rows[i][j]` is the value-set of object `i` on attribute `j`.
    pub fn new(
        objects: Vec<String>,
        attributes: Vec<String>,
        rows: Vec<Vec<ValueSet>>,
    ) -> Result<Self> {
        unique(&objects)?;
        unique(&attributes)?;
        if rows.len() != objects.len() || rows.iter().any(|r| r.len() != attributes.len()) {
            return Err(Error::Input(
                "valuation must cover every (attribute, object) pair".into(),
            ));
        }
        let valuation = (0..attributes.len())
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Ok(InformationTable {
            objects,
            attributes,
            valuation,
        })
    }

    /// Reads a CSV table: a header row whose first column is `object`, then
    /// one row per object. Cells holding several values separate them with
    /// `delimiter`; an empty cell is the empty value-set.
    pub fn from_csv(reader: impl Read, delimiter: char) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader);
        let header = rdr.headers()?.clone();
        if header.get(0) != Some("object") {
            return Err(Error::Input("first CSV column must be `object`".into()));
        }
        let attributes: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
        let mut objects = Vec::new();
        let mut rows = Vec::new();
        for record in rdr.records() {
            let record = record?;
            let mut cells = record.iter();
            let object = cells.next().unwrap_or_default().to_string();
            let row: Vec<ValueSet> = cells
                .map(|cell| {
                    cell.split(delimiter)
                        .map(str::trim)
                        .filter(|v| !v.is_empty())
                        .map(str::to_string)
                        .collect()
                })
                .collect();
            objects.push(object);
            rows.push(row);
        }
        Self::new(objects, attributes, rows)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn value(&self, attribute: &str, object: &str) -> Result<&ValueSet> {
        let a = self.attribute_index(attribute)?;
        let o = self
            .objects
            .iter()
            .position(|x| x == object)
            .ok_or_else(|| Error::UnknownObject(object.to_string()))?;
        Ok(&self.valuation[a][o])
    }

    fn attribute_index(&self, attribute: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|a| a == attribute)
            .ok_or_else(|| Error::UnknownAttribute(attribute.to_string()))
    }

    /// Objects are indiscernible when their value-sets agree on every
    /// attribute in `attrs`.
    pub fn derive_indiscernibility<S: AsRef<str>>(
        &self,
        attrs: &[S],
    ) -> Result<EquivalenceRelation> {
        if attrs.is_empty() {
            return Err(Error::Input("at least one attribute is required".into()));
        }
        let cols = attrs
            .iter()
            .map(|a| self.attribute_index(a.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let mut block_of: HashMap<Vec<&ValueSet>, usize> = HashMap::new();
        let mut blocks: Vec<Vec<String>> = Vec::new();
        for (o, name) in self.objects.iter().enumerate() {
            let key: Vec<&ValueSet> = cols.iter().map(|&a| &self.valuation[a][o]).collect();
            let next = blocks.len();
            let b = *block_of.entry(key).or_insert(next);
            if b == next {
                blocks.push(Vec::new());
            }
            blocks[b].push(name.clone());
        }
        EquivalenceRelation::new(self.objects.clone(), blocks)
    }
}

fn unique(ids: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(Error::Duplicate(id.clone()));
        }
    }
    Ok(())
}

/// A partition of a finite carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceRelation {
    carrier: Vec<String>,
    blocks: Vec<Vec<String>>,
    block_of: HashMap<String, usize>,
}

impl EquivalenceRelation {
    pub fn new(carrier: Vec<String>, blocks: Vec<Vec<String>>) -> Result<Self> {
        unique(&carrier)?;
        let mut block_of = HashMap::new();
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Input("blocks must be nonempty".into()));
            }
            for x in block {
                if !carrier.contains(x) {
                    return Err(Error::UnknownObject(x.clone()));
                }
                if block_of.insert(x.clone(), b).is_some() {
                    return Err(Error::Input(format!("`{x}` lies in two blocks")));
                }
            }
        }
        if let Some(x) = carrier.iter().find(|x| !block_of.contains_key(*x)) {
            return Err(Error::Input(format!("`{x}` lies in no block")));
        }
        Ok(EquivalenceRelation {
            carrier,
            blocks,
            block_of,
        })
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn blocks(&self) -> &[Vec<String>] {
        &self.blocks
    }

    pub fn related(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.class_index(x)? == self.class_index(y)?)
    }

    fn class_index(&self, x: &str) -> Result<usize> {
        self.block_of
            .get(x)
            .copied()
            .ok_or_else(|| Error::UnknownObject(x.to_string()))
    }

    fn check_subset(&self, a: &BTreeSet<String>) -> Result<()> {
        match a.iter().find(|x| !self.block_of.contains_key(*x)) {
            Some(x) => Err(Error::UnknownObject(x.clone())),
            None => Ok(()),
        }
    }

    /// Union of the blocks contained in `a`.
    pub fn classical_lower(&self, a: &BTreeSet<String>) -> Result<BTreeSet<String>> {
        self.check_subset(a)?;
        Ok(self
            .blocks
            .iter()
            .filter(|b| b.iter().all(|x| a.contains(x)))
            .flatten()
            .cloned()
            .collect())
    }

    /// Union of the blocks meeting `a`.
    pub fn classical_upper(&self, a: &BTreeSet<String>) -> Result<BTreeSet<String>> {
        self.check_subset(a)?;
        Ok(self
            .blocks
            .iter()
            .filter(|b| b.iter().any(|x| a.contains(x)))
            .flatten()
            .cloned()
            .collect())
    }

    /// The set HGOS over the power set of the carrier: inclusion as parthood
    /// and order, union/intersection as `∨`/`∧`, the blocks as granules and
    /// the classical approximations as `l`/`u`.
    pub fn to_set_hgos(&self) -> Result<GranularSpace> {
        let n = self.carrier.len();
        if n > MAX_POWER_SET_OBJECTS {
            return Err(Error::Size(format!(
                "{n} objects; power-set spaces are limited to {MAX_POWER_SET_OBJECTS}"
            )));
        }
        // Atoms are kept in sorted order, as in loaded spaces.
        let mut atoms = self.carrier.clone();
        atoms.sort();
        let atom_of: HashMap<&str, usize> = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_str(), i))
            .collect();
        let block_sets: Vec<AtomSet> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter().fold(AtomSet::EMPTY, |acc, x| {
                    acc.union(AtomSet::singleton(atom_of[x.as_str()]))
                })
            })
            .collect();

        let size = 1usize << n;
        let carriers: Vec<Option<AtomSet>> = (0..size as u64).map(|m| Some(AtomSet(m))).collect();
        let names: Vec<String> = (0..size as u64)
            .map(|m| AtomSet(m).display(&atoms).to_string())
            .collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, name)| (name.clone(), ElemId(i)))
            .collect();
        let by_carrier = (0..size).map(|i| (AtomSet(i as u64), ElemId(i))).collect();
        let lower = (0..size as u64)
            .map(|m| {
                let x = AtomSet(m);
                let l = block_sets
                    .iter()
                    .filter(|b| b.is_subset(x))
                    .fold(AtomSet::EMPTY, |acc, b| acc.union(*b));
                ElemId(l.0 as usize)
            })
            .collect();
        let upper = (0..size as u64)
            .map(|m| {
                let x = AtomSet(m);
                let u = block_sets
                    .iter()
                    .filter(|b| b.meets(x))
                    .fold(AtomSet::EMPTY, |acc, b| acc.union(*b));
                ElemId(u.0 as usize)
            })
            .collect();
        let mut granules: Vec<ElemId> = block_sets.iter().map(|b| ElemId(b.0 as usize)).collect();
        granules.sort();
        let mut is_granule = vec![false; size];
        for g in &granules {
            is_granule[g.0] = true;
        }
        let space = GranularSpace {
            names,
            index,
            atoms,
            carriers,
            by_carrier,
            parthood: Relation::Inclusion,
            order: Relation::Inclusion,
            join: OpTable::Union,
            meet: OpTable::Intersection,
            granules,
            is_granule,
            lower,
            upper,
            bottom: ElemId(0),
            top: ElemId(size - 1),
            flavor: Flavor::SetHgos,
        };
        space.check_structure()?;
        Ok(space)
    }
}

/// Derives the indiscernibility partition on `attrs` and builds its set HGOS.
pub fn table_to_set_hgos<S: AsRef<str>>(
    t: &InformationTable,
    attrs: &[S],
) -> Result<GranularSpace> {
    t.derive_indiscernibility(attrs)?.to_set_hgos()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[&str]) -> ValueSet {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn set(v: &[&str]) -> BTreeSet<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// Rows (1,0), (1,0), (0,0).
    fn three_objects() -> InformationTable {
        InformationTable::new(
            strings(&["o1", "o2", "o3"]),
            strings(&["p", "q"]),
            vec![
                vec![vs(&["1"]), vs(&["0"])],
                vec![vs(&["1"]), vs(&["0"])],
                vec![vs(&["0"]), vs(&["0"])],
            ],
        )
        .unwrap()
    }

    /// Independent oracle: objects are related iff every listed column agrees.
    fn pairwise_related(t: &InformationTable, attrs: &[&str], x: &str, y: &str) -> bool {
        attrs
            .iter()
            .all(|a| t.value(a, x).unwrap() == t.value(a, y).unwrap())
    }

    #[test]
    fn indiscernibility_matches_pairwise_oracle() {
        let t = three_objects();
        let r = t.derive_indiscernibility(&["p", "q"]).unwrap();
        assert_eq!(r.blocks(), &[strings(&["o1", "o2"]), strings(&["o3"])]);
        for x in t.objects() {
            for y in t.objects() {
                assert_eq!(
                    r.related(x, y).unwrap(),
                    pairwise_related(&t, &["p", "q"], x, y)
                );
            }
        }
    }

    #[test]
    fn single_object_is_singleton_partition() {
        let t = InformationTable::new(strings(&["x"]), strings(&["p"]), vec![vec![vs(&["v"])]])
            .unwrap();
        let r = t.derive_indiscernibility(&["p"]).unwrap();
        assert_eq!(r.blocks(), &[strings(&["x"])]);
    }

    #[test]
    fn set_valued_cells_compare_as_sets() {
        let t = InformationTable::new(
            strings(&["x", "y", "z"]),
            strings(&["p"]),
            vec![
                vec![vs(&["1", "2"])],
                vec![vs(&["2", "1"])],
                vec![vs(&["1"])],
            ],
        )
        .unwrap();
        let r = t.derive_indiscernibility(&["p"]).unwrap();
        assert!(r.related("x", "y").unwrap());
        assert!(!r.related("x", "z").unwrap());
    }

    #[test]
    fn unknown_attribute_is_named() {
        let err = three_objects()
            .derive_indiscernibility(&["nope"])
            .unwrap_err();
        assert!(matches!(err, Error::UnknownAttribute(ref a) if a == "nope"));
        assert!(three_objects()
            .derive_indiscernibility::<&str>(&[])
            .is_err());
    }

    #[test]
    fn classical_approximations() {
        let r = EquivalenceRelation::new(
            strings(&["1", "2", "3"]),
            vec![strings(&["1", "2"]), strings(&["3"])],
        )
        .unwrap();
        assert_eq!(r.classical_lower(&set(&["1", "3"])).unwrap(), set(&["3"]));
        assert_eq!(
            r.classical_upper(&set(&["1", "3"])).unwrap(),
            set(&["1", "2", "3"])
        );
        assert!(r.classical_lower(&set(&[])).unwrap().is_empty());
        assert!(r.classical_upper(&set(&[])).unwrap().is_empty());
        let all = set(&["1", "2", "3"]);
        assert_eq!(r.classical_lower(&all).unwrap(), all);
        assert_eq!(r.classical_upper(&all).unwrap(), all);
        assert!(matches!(
            r.classical_lower(&set(&["9"])),
            Err(Error::UnknownObject(_))
        ));
    }

    #[test]
    fn csv_ingestion_splits_multi_valued_cells() {
        let csv = "object,colour,size\nx,red|blue,1\ny,blue|red,1\nz,red,2\n";
        let t = InformationTable::from_csv(csv.as_bytes(), '|').unwrap();
        assert_eq!(t.objects(), &strings(&["x", "y", "z"]));
        assert_eq!(t.value("colour", "x").unwrap(), &vs(&["blue", "red"]));
        let r = t.derive_indiscernibility(&["colour", "size"]).unwrap();
        assert_eq!(r.blocks().len(), 2);
        assert!(InformationTable::from_csv("id,a\nx,1\n".as_bytes(), '|').is_err());
    }

    #[test]
    fn derived_space_shape() {
        let one = InformationTable::new(strings(&["x"]), strings(&["p"]), vec![vec![vs(&["v"])]])
            .unwrap();
        let s = table_to_set_hgos(&one, &["p"]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.granules().len(), 1);

        let s = table_to_set_hgos(&three_objects(), &["p", "q"]).unwrap();
        assert_eq!(s.len(), 8);
        assert_eq!(s.classify_flavor(), Flavor::SetHgos);
        let x = s.id("{o1,o3}").unwrap();
        assert_eq!(s.show(s.lower(x)), "{o3}");
        assert_eq!(s.show(s.upper(x)), "{o1,o2,o3}");
    }

    #[test]
    fn power_set_cap() {
        let objs: Vec<String> = (0..17).map(|i| format!("o{i}")).collect();
        let r =
            EquivalenceRelation::new(objs.clone(), objs.iter().map(|o| vec![o.clone()]).collect())
                .unwrap();
        assert!(matches!(r.to_set_hgos(), Err(Error::Size(_))));
    }
}
