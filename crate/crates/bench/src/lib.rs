//! Fixtures shared by the criterion benchmarks.

use polya_core::{dihedral_group, symmetric_group, ColorSet, PermutationGroup};

/// Named groups of increasing size used across the benchmarks.
pub fn groups() -> Vec<(&'static str, PermutationGroup)> {
    vec![
        ("dihedral:4", dihedral_group(4).unwrap()),
        ("dihedral:8", dihedral_group(8).unwrap()),
        ("symmetric:6", symmetric_group(6).unwrap()),
    ]
}

pub fn palette(k: usize) -> ColorSet {
    ColorSet::numbered(k).unwrap()
}
