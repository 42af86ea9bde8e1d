//! Counting colorings up to symmetry.
//!
//! Positions `1..=n` are colored from a finite palette and a permutation
//! group says which colorings look the same. [`pattern_inventory`] returns
//! a polynomial in the color names whose coefficient on `Π c^(n_c)` is the
//! number of distinct colorings using each color `c` exactly `n_c` times.
//! [`oracle`] computes the same numbers by brute force.
//!
//! ```
//! use polya_core::{cyclic_group, count_distinct};
//!
//! let rotations = cyclic_group(4).unwrap();
//! assert_eq!(count_distinct(&rotations, 3).unwrap(), 24u32.into());
//! ```

pub mod group;
pub mod inventory;
pub mod oracle;
pub mod perm;
pub mod polynomial;

pub use group::{
    cyclic_group, dihedral_group, symmetric_group, trivial_group, GroupError, GroupSpec,
    PermutationGroup,
};
pub use inventory::{
    count_by_composition, count_distinct, cycle_index, pattern_inventory, ColorSet, Composition,
    InventoryError,
};
pub use oracle::{
    act, burnside_count, enumerate_orbits, orbit_census, Coloring, OracleError, Orbit,
};
pub use perm::{CycleDecomposition, CycleType, PermError, Permutation};
pub use polynomial::{Monomial, PolyError, Polynomial, Rational};
