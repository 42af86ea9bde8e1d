//! Brute-force ground truth: enumerate every coloring, merge colorings
//! related by the group action, and count.
//!
//! Nothing here goes through cycle indices or polynomials, so the results
//! can be used to check the inventory pipeline.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::group::PermutationGroup;
use crate::inventory::{ColorSet, Composition};
use crate::perm::Permutation;

/// Default cap on the number of colorings enumerated.
pub const DEFAULT_LIMIT: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{num_colors}^{degree} colorings exceed the enumeration limit {limit}")]
    LimitExceeded {
        num_colors: usize,
        degree: usize,
        limit: usize,
    },
    #[error("at least one color is required")]
    NoColors,
    #[error("permutation of degree {permutation} cannot act on a coloring of length {coloring}")]
    DegreeMismatch { permutation: usize, coloring: usize },
    #[error("fixed-coloring sum {sum} is not divisible by the group order {order}")]
    Indivisible { sum: String, order: usize },
}

/// Color indices by position (index 0 is position 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    assignment: Vec<usize>,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        Coloring { assignment }
    }

    /// Looks up each character (or `-`-separated name) in `colors`.
    pub fn parse(text: &str, colors: &ColorSet) -> Option<Self> {
        let single = colors.names().iter().all(|c| c.chars().count() == 1);
        let assignment = if single {
            text.chars()
                .map(|ch| colors.index_of(ch.encode_utf8(&mut [0; 4])))
                .collect::<Option<Vec<_>>>()?
        } else {
            text.split('-')
                .map(|name| colors.index_of(name))
                .collect::<Option<Vec<_>>>()?
        };
        Some(Coloring { assignment })
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn composition(&self, colors: &ColorSet) -> Composition {
        Composition::new(
            self.assignment
                .iter()
                .map(|&i| (colors.names()[i].as_str(), 1)),
        )
    }
}

/// Applies `g` to a coloring: the color at position `i` moves to `g(i)`, so
/// `result[i] = c[g⁻¹(i)]`. Under this convention `(1 2 3 4)` turns `rwww`
/// into `wrww`.
pub fn act(g: &Permutation, c: &Coloring) -> Result<Coloring, OracleError> {
    if g.degree() != c.len() {
        return Err(OracleError::DegreeMismatch {
            permutation: g.degree(),
            coloring: c.len(),
        });
    }
    let mut out = vec![0; c.len()];
    for (i, &color) in c.assignment.iter().enumerate() {
        out[g.image(i + 1) - 1] = color;
    }
    Ok(Coloring { assignment: out })
}

/// One equivalence class of colorings.
///
/// Members are stored as base-`num_colors` codes with position 1 as the most
/// significant digit, so numeric order is lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    degree: usize,
    num_colors: usize,
    codes: Vec<u64>,
}

impl Orbit {
    /// The lexicographically least member.
    pub fn representative(&self) -> Coloring {
        self.decode(self.codes[0])
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Members in lexicographic order.
    pub fn members(&self) -> impl Iterator<Item = Coloring> + '_ {
        self.codes.iter().map(|&c| self.decode(c))
    }

    pub fn contains(&self, c: &Coloring) -> bool {
        c.len() == self.degree
            && c.assignment.iter().all(|&x| x < self.num_colors)
            && self
                .codes
                .binary_search(&encode(&c.assignment, self.num_colors))
                .is_ok()
    }

    fn decode(&self, code: u64) -> Coloring {
        let mut assignment = vec![0; self.degree];
        decode_into(code, self.num_colors, &mut assignment);
        Coloring { assignment }
    }
}

fn encode(assignment: &[usize], k: usize) -> u64 {
    assignment
        .iter()
        .fold(0, |acc, &c| acc * k as u64 + c as u64)
}

fn decode_into(mut code: u64, k: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = (code % k as u64) as usize;
        code /= k as u64;
    }
}

/// Union-find with path halving and union by size.
struct DisjointSets {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a as usize] < self.size[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
    }
}

fn coloring_count(degree: usize, num_colors: usize, limit: usize) -> Result<u64, OracleError> {
    if num_colors == 0 {
        return Err(OracleError::NoColors);
    }
    // Codes are u32 inside the union-find.
    let cap = limit.min(u32::MAX as usize);
    u32::try_from(degree)
        .ok()
        .and_then(|d| num_colors.checked_pow(d))
        .filter(|&total| total <= cap)
        .map(|total| total as u64)
        .ok_or(OracleError::LimitExceeded {
            num_colors,
            degree,
            limit,
        })
}

/// Partitions all `num_colors^degree` colorings into orbits, sorted by
/// representative.
pub fn enumerate_orbits(
    group: &PermutationGroup,
    num_colors: usize,
    limit: usize,
) -> Result<Vec<Orbit>, OracleError> {
    let degree = group.degree();
    let total = coloring_count(degree, num_colors, limit)?;

    // The generators reach every element, so unioning along them suffices.
    let movers: Vec<Vec<usize>> = if group.generators().is_empty() {
        group.elements()
    } else {
        group.generators()
    }
    .iter()
    .map(|g| (1..=degree).map(|i| g.image(i) - 1).collect())
    .collect();

    let mut sets = DisjointSets::new(total as usize);
    let mut colors = vec![0; degree];
    let mut moved = vec![0; degree];
    for code in 0..total {
        decode_into(code, num_colors, &mut colors);
        for images in &movers {
            for (i, &color) in colors.iter().enumerate() {
                moved[images[i]] = color;
            }
            sets.union(code as u32, encode(&moved, num_colors) as u32);
        }
    }

    // Codes are visited in increasing order, so orbits are created in order
    // of their least member.
    let mut orbit_of_root: BTreeMap<u32, usize> = BTreeMap::new();
    let mut orbits: Vec<Orbit> = Vec::new();
    for code in 0..total {
        let root = sets.find(code as u32);
        let idx = *orbit_of_root.entry(root).or_insert_with(|| {
            orbits.push(Orbit {
                degree,
                num_colors,
                codes: Vec::new(),
            });
            orbits.len() - 1
        });
        orbits[idx].codes.push(code);
    }
    Ok(orbits)
}

/// `(1/|G|) Σ_g k^(cycles of g)` with exact integers; the division must be
/// exact.
pub fn burnside_count(group: &PermutationGroup, num_colors: usize) -> Result<BigUint, OracleError> {
    let k = BigUint::from(num_colors);
    let mut sum = BigUint::zero();
    for g in group {
        sum += k.pow(count_cycles(g));
    }
    let order = BigUint::from(group.order());
    let (quotient, remainder) = sum.div_rem(&order);
    if !remainder.is_zero() {
        return Err(OracleError::Indivisible {
            sum: sum.to_string(),
            order: group.order(),
        });
    }
    Ok(quotient)
}

fn count_cycles(g: &Permutation) -> u32 {
    let n = g.degree();
    let mut seen = vec![false; n + 1];
    let mut cycles = 0;
    for start in 1..=n {
        if !seen[start] {
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = g.image(i);
            }
        }
    }
    cycles
}

/// Number of orbits per color composition.
pub fn orbit_census(
    group: &PermutationGroup,
    colors: &ColorSet,
    limit: usize,
) -> Result<BTreeMap<Composition, u64>, OracleError> {
    let mut census = BTreeMap::new();
    for orbit in enumerate_orbits(group, colors.len(), limit)? {
        *census
            .entry(orbit.representative().composition(colors))
            .or_insert(0) += 1;
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, dihedral_group, symmetric_group, trivial_group};

    fn rwb() -> ColorSet {
        ColorSet::new(["r", "w", "b"]).unwrap()
    }

    fn coloring(text: &str) -> Coloring {
        Coloring::parse(text, &rwb()).unwrap()
    }

    fn perm(text: &str) -> Permutation {
        Permutation::parse(text, 4).unwrap()
    }

    #[test]
    fn action_follows_rotation() {
        let c = coloring("rwww");
        assert_eq!(act(&perm("(1234)"), &c).unwrap(), coloring("wrww"));
        assert_eq!(act(&perm("(13)(24)"), &c).unwrap(), coloring("wwrw"));
        assert_eq!(act(&perm("(1432)"), &c).unwrap(), coloring("wwwr"));
        assert_eq!(
            act(&Permutation::identity(4), &coloring("rwbb")).unwrap(),
            coloring("rwbb")
        );
        assert!(matches!(
            act(&Permutation::identity(3), &c),
            Err(OracleError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn action_is_a_left_action() {
        let (g, h) = (perm("(1234)"), perm("(14)(23)"));
        let c = coloring("rwbb");
        let gh = g.compose(&h).unwrap();
        assert_eq!(
            act(&gh, &c).unwrap(),
            act(&g, &act(&h, &c).unwrap()).unwrap()
        );
    }

    #[test]
    fn orbit_enumeration() {
        let c4 = cyclic_group(4).unwrap();
        let orbits = enumerate_orbits(&c4, 2, DEFAULT_LIMIT).unwrap();
        assert_eq!(orbits.len(), 6);
        assert_eq!(orbits.iter().map(Orbit::len).sum::<usize>(), 16);

        let rwww = enumerate_orbits(&c4, 3, DEFAULT_LIMIT)
            .unwrap()
            .into_iter()
            .find(|o| o.contains(&coloring("rwww")))
            .unwrap();
        let members: Vec<String> = rwww
            .members()
            .map(|m| rwb().render(m.assignment()))
            .collect();
        assert_eq!(members, ["rwww", "wrww", "wwrw", "wwwr"]);
        assert_eq!(rwb().render(rwww.representative().assignment()), "rwww");

        let fixed = enumerate_orbits(&trivial_group(4).unwrap(), 3, DEFAULT_LIMIT).unwrap();
        assert_eq!(fixed.len(), 81);
        assert!(fixed.iter().all(|o| o.len() == 1));

        for g in [c4, dihedral_group(5).unwrap(), symmetric_group(3).unwrap()] {
            assert_eq!(enumerate_orbits(&g, 1, DEFAULT_LIMIT).unwrap().len(), 1);
        }
    }

    #[test]
    fn orbits_sorted_by_representative() {
        let orbits = enumerate_orbits(&dihedral_group(5).unwrap(), 3, DEFAULT_LIMIT).unwrap();
        let reps: Vec<Coloring> = orbits.iter().map(Orbit::representative).collect();
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn limits() {
        let c4 = cyclic_group(4).unwrap();
        assert!(enumerate_orbits(&c4, 3, 81).is_ok());
        assert_eq!(
            enumerate_orbits(&c4, 3, 80),
            Err(OracleError::LimitExceeded {
                num_colors: 3,
                degree: 4,
                limit: 80
            })
        );
        assert_eq!(enumerate_orbits(&c4, 0, 80), Err(OracleError::NoColors));
        let big = cyclic_group(70).unwrap();
        assert!(matches!(
            enumerate_orbits(&big, 2, usize::MAX),
            Err(OracleError::LimitExceeded { .. })
        ));
    }

    #[test]
    fn burnside() {
        let u = |n: u32| BigUint::from(n);
        assert_eq!(burnside_count(&cyclic_group(4).unwrap(), 3).unwrap(), u(24));
        assert_eq!(
            burnside_count(&dihedral_group(4).unwrap(), 3).unwrap(),
            u(21)
        );
        assert_eq!(
            burnside_count(&trivial_group(4).unwrap(), 3).unwrap(),
            u(81)
        );
        assert_eq!(burnside_count(&cyclic_group(5).unwrap(), 2).unwrap(), u(8));
    }

    #[test]
    fn census() {
        let census = orbit_census(&cyclic_group(4).unwrap(), &rwb(), DEFAULT_LIMIT).unwrap();
        assert_eq!(census[&Composition::new([("r", 2), ("w", 2)])], 2);
        assert_eq!(census[&Composition::new([("r", 2), ("w", 1), ("b", 1)])], 3);
        assert_eq!(census[&Composition::new([("r", 4)])], 1);
        assert_eq!(census.values().sum::<u64>(), 24);
    }

    #[test]
    fn coloring_parse() {
        assert_eq!(coloring("rwb").assignment(), [0, 1, 2]);
        assert!(Coloring::parse("rx", &rwb()).is_none());
        let long = ColorSet::new(["red", "blue"]).unwrap();
        assert_eq!(
            Coloring::parse("blue-red", &long).unwrap().assignment(),
            [1, 0]
        );
    }
}
