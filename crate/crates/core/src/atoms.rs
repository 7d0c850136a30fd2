//! Finite carriers as bitsets over a space's atom list.

use std::fmt;

/// Largest number of distinct atoms a space may use.
pub const MAX_ATOMS: usize = 64;

/// A subset of a space's atoms. Bit `i` stands for the `i`-th atom in the
/// space's sorted atom list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomSet(pub u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn singleton(i: usize) -> Self {
        AtomSet(1 << i)
    }

    /// The set `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            AtomSet(u64::MAX)
        } else {
            AtomSet((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn union(self, other: Self) -> Self {
        AtomSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        AtomSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        AtomSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// Renders as a sorted brace list, e.g. `{a,b}`; the empty set is `{}`.
    pub fn display<'a>(self, atoms: &'a [String]) -> AtomSetDisplay<'a> {
        AtomSetDisplay { set: self, atoms }
    }

    /// Ordering used for tabular output: by size, then lexicographically by
    /// the sorted atom names.
    pub fn size_lex_key(self, atoms: &[String]) -> (u32, Vec<&str>) {
        (self.len(), self.iter().map(|i| atoms[i].as_str()).collect())
    }
}

pub struct AtomSetDisplay<'a> {
    set: AtomSet,
    atoms: &'a [String],
}

impl fmt::Display for AtomSetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.set.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.atoms[i])?;
        }
        f.write_str("}")
    }
}
