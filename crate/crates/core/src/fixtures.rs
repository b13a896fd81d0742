//! Bundled example spaces.

use crate::format::parse_space;
use crate::space::UltrametricSpace;

/// Matrix-format source of the 15-point space `Z`.
pub const Z15_TEXT: &str = include_str!("../fixtures/z15.um");

/// Structured-document source of the same space.
pub const Z15_JSON: &str = include_str!("../fixtures/z15.json");

/// The 15-point space `Z`: root diameter 9 over three balls of diameters
/// 4, 5 and 8, with every internal diameter in `1..=9` used exactly once.
pub fn z15() -> UltrametricSpace {
    parse_space(Z15_TEXT).expect("bundled z15 fixture is valid")
}
