//! Cycle indices, pattern inventories, and the counting queries on them.
//!
//! The cycle-index variable for cycles of length `ℓ` is named `x{ℓ}`
//! (`x1`, `x2`, ...). The pattern inventory replaces each `x{ℓ}` by the
//! power sum `Σ_c c^ℓ` over the color names.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use thiserror::Error;

use crate::group::PermutationGroup;
use crate::perm::CycleType;
use crate::polynomial::{Monomial, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InventoryError {
    #[error("a color set needs at least one color")]
    NoColors,
    #[error("color names must be nonempty")]
    EmptyColorName,
    #[error("color {0:?} listed more than once")]
    DuplicateColor(String),
    #[error("unknown color {0:?}")]
    UnknownColor(String),
    #[error("composition {composition} sums to {sum}, but the group acts on {degree} positions")]
    CompositionSize {
        composition: String,
        sum: u64,
        degree: usize,
    },
    #[error("bad composition {0:?}")]
    BadComposition(String),
    #[error("non-integral count {0}; the element set is not a group")]
    NonIntegral(String),
}

/// Name of the cycle-index variable for cycles of length `len`.
pub fn cycle_variable(len: usize) -> String {
    format!("x{len}")
}

/// Cycle-index variable names `x1..=x{degree}` in their natural order.
pub fn cycle_variables(degree: usize) -> Vec<String> {
    (1..=degree).map(cycle_variable).collect()
}

/// An ordered list of distinct, nonempty color names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorSet {
    colors: Vec<String>,
}

impl ColorSet {
    pub fn new<I, S>(colors: I) -> Result<Self, InventoryError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let colors: Vec<String> = colors.into_iter().map(Into::into).collect();
        if colors.is_empty() {
            return Err(InventoryError::NoColors);
        }
        let mut seen = BTreeSet::new();
        for c in &colors {
            if c.is_empty() {
                return Err(InventoryError::EmptyColorName);
            }
            if !seen.insert(c) {
                return Err(InventoryError::DuplicateColor(c.clone()));
            }
        }
        Ok(ColorSet { colors })
    }

    /// `c1, c2, ..., c{k}`.
    pub fn numbered(k: usize) -> Result<Self, InventoryError> {
        ColorSet::new((1..=k).map(|i| format!("c{i}")))
    }

    /// Parses a comma-separated list such as `r,w,b`.
    pub fn parse_list(text: &str) -> Result<Self, InventoryError> {
        ColorSet::new(text.split(',').map(str::trim))
    }

    pub fn names(&self) -> &[String] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.colors.iter().position(|c| c == name)
    }

    /// Single-character names are concatenated (`rwww`); longer names are
    /// joined with `-`.
    pub fn render(&self, assignment: &[usize]) -> String {
        let names = assignment.iter().map(|&i| self.colors[i].as_str());
        if self.colors.iter().all(|c| c.chars().count() == 1) {
            names.collect()
        } else {
            names.collect::<Vec<_>>().join("-")
        }
    }
}

/// How many positions receive each color. Zero counts are not stored, so
/// equal compositions compare equal however they were written.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    counts: BTreeMap<String, u32>,
}

impl Composition {
    pub fn new<I, S>(counts: I) -> Self
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut map = BTreeMap::new();
        for (c, n) in counts {
            if n > 0 {
                *map.entry(c.into()).or_insert(0) += n;
            }
        }
        Composition { counts: map }
    }

    /// Parses `r=2,w=1,b=1`.
    pub fn parse(text: &str) -> Result<Self, InventoryError> {
        let bad = || InventoryError::BadComposition(text.to_string());
        let mut pairs = Vec::new();
        let mut seen = BTreeSet::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, count) = item.split_once('=').ok_or_else(bad)?;
            let name = name.trim();
            if name.is_empty() || !seen.insert(name) {
                return Err(bad());
            }
            let count: u32 = count.trim().parse().map_err(|_| bad())?;
            pairs.push((name.to_string(), count));
        }
        Ok(Composition::new(pairs))
    }

    pub fn counts(&self) -> &BTreeMap<String, u32> {
        &self.counts
    }

    pub fn get(&self, color: &str) -> u32 {
        self.counts.get(color).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().map(|&n| u64::from(n)).sum()
    }

    /// The color monomial `Π c^counts[c]`.
    pub fn monomial(&self) -> Monomial {
        self.counts.iter().map(|(c, &n)| (c.clone(), n)).collect()
    }

    /// Text form listing every color of `colors` in order, zeros included.
    pub fn render(&self, colors: &ColorSet) -> String {
        colors
            .names()
            .iter()
            .map(|c| format!("{c}={}", self.get(c)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .counts
            .iter()
            .map(|(c, n)| format!("{c}={n}"))
            .collect();
        f.write_str(&items.join(","))
    }
}

fn cycle_monomial(cycle_type: &CycleType) -> Monomial {
    cycle_type
        .counts()
        .iter()
        .map(|(&len, &count)| (cycle_variable(len), count as u32))
        .collect()
}

/// `(1/|G|) Σ_g Π_ℓ x_ℓ^(number of ℓ-cycles of g)`.
pub fn cycle_index(group: &PermutationGroup) -> Polynomial {
    let mut tally: BTreeMap<Monomial, u64> = BTreeMap::new();
    for g in group {
        *tally.entry(cycle_monomial(&g.cycle_type())).or_insert(0) += 1;
    }
    let order = BigInt::from(group.order());
    tally
        .into_iter()
        .map(|(m, n)| Polynomial::term(m, Rational::new(BigInt::from(n), order.clone())))
        .fold(Polynomial::zero(), |acc, t| acc + t)
}

/// `Σ_c c^len` over the colors.
pub fn power_sum(colors: &ColorSet, len: u32) -> Polynomial {
    colors
        .names()
        .iter()
        .map(|c| Polynomial::term(Monomial::from_iter([(c.as_str(), len)]), Rational::one()))
        .fold(Polynomial::zero(), |acc, t| acc + t)
}

/// The cycle index with every `x{ℓ}` replaced by the power sum of degree `ℓ`.
/// Coefficient of `Π c^(n_c)` = number of distinct colorings using color `c`
/// exactly `n_c` times.
pub fn pattern_inventory(group: &PermutationGroup, colors: &ColorSet) -> Polynomial {
    let bindings: BTreeMap<String, Polynomial> = (1..=group.degree())
        .map(|len| (cycle_variable(len), power_sum(colors, len as u32)))
        .collect();
    cycle_index(group)
        .substitute(&bindings)
        .expect("every cycle length is at most the degree")
}

fn to_natural(value: &Rational) -> Result<BigUint, InventoryError> {
    if !value.is_integer() || value.is_negative() {
        return Err(InventoryError::NonIntegral(value.to_string()));
    }
    Ok(value.numer().to_biguint().expect("nonnegative integer"))
}

/// Number of distinct colorings with `num_colors` colors: the cycle index
/// evaluated at `x_ℓ = num_colors` for every `ℓ`.
pub fn count_distinct(
    group: &PermutationGroup,
    num_colors: usize,
) -> Result<BigUint, InventoryError> {
    let k = Rational::from_integer(BigInt::from(num_colors));
    let values = cycle_variables(group.degree())
        .into_iter()
        .map(|v| (v, k.clone()))
        .collect();
    let value = cycle_index(group)
        .evaluate(&values)
        .expect("every cycle length is at most the degree");
    to_natural(&value)
}

/// Number of distinct colorings read off an already expanded inventory.
pub fn count_in_inventory(inventory: &Polynomial) -> Result<BigUint, InventoryError> {
    to_natural(&inventory.coefficient_sum())
}

/// Coefficient lookup on an already expanded inventory.
pub fn coefficient_for(
    inventory: &Polynomial,
    colors: &ColorSet,
    degree: usize,
    composition: &Composition,
) -> Result<BigUint, InventoryError> {
    if let Some(c) = composition
        .counts()
        .keys()
        .find(|c| colors.index_of(c).is_none())
    {
        return Err(InventoryError::UnknownColor(c.clone()));
    }
    if composition.total() != degree as u64 {
        return Err(InventoryError::CompositionSize {
            composition: composition.to_string(),
            sum: composition.total(),
            degree,
        });
    }
    to_natural(&inventory.coefficient(&composition.monomial()))
}

/// Number of distinct colorings with the given color multiplicities.
pub fn count_by_composition(
    group: &PermutationGroup,
    colors: &ColorSet,
    composition: &Composition,
) -> Result<BigUint, InventoryError> {
    let inventory = pattern_inventory(group, colors);
    coefficient_for(&inventory, colors, group.degree(), composition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, dihedral_group, symmetric_group, trivial_group};

    fn rwb() -> ColorSet {
        ColorSet::new(["r", "w", "b"]).unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_indices() {
        let c4 = cyclic_group(4).unwrap();
        assert_eq!(cycle_index(&c4), poly("(1/4)x1^4 + (1/4)x2^2 + (1/2)x4"));
        let d4 = dihedral_group(4).unwrap();
        assert_eq!(
            cycle_index(&d4),
            poly("(1/8)x1^4 + (3/8)x2^2 + (1/4)x1^2x2 + (1/4)x4")
        );
        assert_eq!(cycle_index(&trivial_group(4).unwrap()), poly("x1^4"));
    }

    #[test]
    fn single_color_inventory() {
        let one = ColorSet::new(["c"]).unwrap();
        for g in [
            cyclic_group(5).unwrap(),
            dihedral_group(4).unwrap(),
            symmetric_group(3).unwrap(),
        ] {
            let inv = pattern_inventory(&g, &one);
            assert_eq!(inv, Polynomial::var("c").pow(g.degree() as u32));
        }
    }

    #[test]
    fn counts() {
        let u = |n: u32| BigUint::from(n);
        assert_eq!(
            count_distinct(&trivial_group(4).unwrap(), 3).unwrap(),
            u(81)
        );
        assert_eq!(count_distinct(&cyclic_group(4).unwrap(), 3).unwrap(), u(24));
        assert_eq!(
            count_distinct(&dihedral_group(4).unwrap(), 3).unwrap(),
            u(21)
        );
        assert_eq!(count_distinct(&cyclic_group(5).unwrap(), 2).unwrap(), u(8));
        let d4 = dihedral_group(4).unwrap();
        assert_eq!(
            count_in_inventory(&pattern_inventory(&d4, &rwb())).unwrap(),
            u(21)
        );
    }

    #[test]
    fn compositions() {
        let c4 = cyclic_group(4).unwrap();
        let cases = [
            ("r=2,w=2,b=0", 2u32),
            ("r=2,w=1,b=1", 3),
            ("r=4,w=0,b=0", 1),
            ("r=1,w=1,b=2", 3),
        ];
        for (text, expected) in cases {
            let comp = Composition::parse(text).unwrap();
            assert_eq!(
                count_by_composition(&c4, &rwb(), &comp).unwrap(),
                BigUint::from(expected),
                "{text}"
            );
        }
    }

    #[test]
    fn composition_errors() {
        let c4 = cyclic_group(4).unwrap();
        let short = Composition::parse("r=2,w=1").unwrap();
        assert!(matches!(
            count_by_composition(&c4, &rwb(), &short),
            Err(InventoryError::CompositionSize {
                sum: 3,
                degree: 4,
                ..
            })
        ));
        let unknown = Composition::parse("r=2,g=2").unwrap();
        assert_eq!(
            count_by_composition(&c4, &rwb(), &unknown),
            Err(InventoryError::UnknownColor("g".into()))
        );
        for bad in ["r", "r=x", "=2", "r=1,r=2", "r=-1"] {
            assert!(Composition::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn composition_normalizes_zeros() {
        assert_eq!(
            Composition::parse("r=2,w=2,b=0").unwrap(),
            Composition::new([("w", 2), ("r", 2)])
        );
        assert_eq!(
            Composition::new([("r", 1), ("b", 0)]).render(&rwb()),
            "r=1,w=0,b=0"
        );
    }

    #[test]
    fn color_sets() {
        assert_eq!(
            ColorSet::new(Vec::<String>::new()),
            Err(InventoryError::NoColors)
        );
        assert_eq!(
            ColorSet::new(["r", ""]),
            Err(InventoryError::EmptyColorName)
        );
        assert_eq!(
            ColorSet::parse_list("r,w,r"),
            Err(InventoryError::DuplicateColor("r".into()))
        );
        assert_eq!(ColorSet::numbered(3).unwrap().names(), ["c1", "c2", "c3"]);
        assert_eq!(rwb().render(&[0, 1, 1, 1]), "rwww");
        let long = ColorSet::new(["red", "white"]).unwrap();
        assert_eq!(long.render(&[0, 1]), "red-white");
    }

    #[test]
    fn non_integral_values_are_rejected() {
        assert!(to_natural(&Rational::new(7.into(), 3.into())).is_err());
        assert!(to_natural(&Rational::from_integer((-1).into())).is_err());
    }
}
