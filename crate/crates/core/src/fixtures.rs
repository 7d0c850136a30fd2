//! Bundled fixture spaces.

use crate::space::GranularSpace;

/// The abstract example space in JSON form: nine set-valued elements over
/// atoms `a, b, c, e`, granules `{b,e}, {b,c}, {a}, {e}`, non-transitive listed
/// parthood (closed on load) and partial union/intersection.
pub const ABSTRACT_EXAMPLE_JSON: &str = include_str!("../../../fixtures/abstract_example.json");

pub fn abstract_example() -> GranularSpace {
    GranularSpace::from_json_str(ABSTRACT_EXAMPLE_JSON).expect("bundled fixture is valid")
}
