//! Finite permutation groups built by closure, plus the named families.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::{PermError, Permutation};

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

/// Largest `n` accepted by [`symmetric_group`], since its order is `n!`.
pub const SYMMETRIC_DEGREE_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("group degree must be at least 1")]
    ZeroDegree,
    #[error("generator {generator} has degree {found}, expected {expected}")]
    GeneratorDegree {
        generator: String,
        expected: usize,
        found: usize,
    },
    #[error("closure exceeds the maximum order {max_order}")]
    MaxOrderExceeded { max_order: usize },
    #[error("symmetric group on {degree} positions exceeds the degree cap {cap}")]
    SymmetricCapExceeded { degree: usize, cap: usize },
    #[error("bad group spec {spec:?}: {reason}")]
    BadSpec { spec: String, reason: String },
}

impl GroupError {
    /// True for errors caused by a group being too large to build.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            GroupError::MaxOrderExceeded { .. } | GroupError::SymmetricCapExceeded { .. }
        )
    }
}

/// A finite group of permutations of `{1, ..., degree}`.
///
/// Elements are kept sorted by image table, so iteration order is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    /// The smallest group containing `generators`, found by breadth-first
    /// multiplication from the identity.
    pub fn closure(
        generators: Vec<Permutation>,
        degree: usize,
        max_order: usize,
    ) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::GeneratorDegree {
                generator: g.to_string(),
                expected: degree,
                found: g.degree(),
            });
        }

        let identity = Permutation::identity(degree);
        let mut seen = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        if seen.len() > max_order {
            return Err(GroupError::MaxOrderExceeded { max_order });
        }
        // In a finite group the monoid generated by the generators is already
        // closed under inverses, so products alone suffice.
        while let Some(element) = queue.pop_front() {
            for g in &generators {
                let next = g.compose(&element)?;
                if !seen.contains(&next) {
                    if seen.len() == max_order {
                        return Err(GroupError::MaxOrderExceeded { max_order });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }

        Ok(PermutationGroup {
            degree,
            elements: seen.into_iter().collect(),
            generators,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// True when every element of `self` is an element of `other`.
    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }
}

impl<'a> IntoIterator for &'a PermutationGroup {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

fn rotation(n: usize) -> Permutation {
    Permutation::from_zero_based((0..n).map(|i| (i + 1) % n).collect())
}

/// The flip `(1 n)(2 n-1)...`.
fn reflection(n: usize) -> Permutation {
    Permutation::from_zero_based((0..n).map(|i| n - 1 - i).collect())
}

/// Rotations of an `n`-cycle: the closure of `(1 2 ... n)`.
pub fn cyclic_group(n: usize) -> Result<PermutationGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::ZeroDegree);
    }
    PermutationGroup::closure(vec![rotation(n)], n, DEFAULT_MAX_ORDER)
}

/// Rotations and flips of a regular `n`-gon, generated by `(1 2 ... n)` and
/// `(1 n)(2 n-1)...`. Order `2n` for `n >= 3`; for `n = 1` the group is
/// trivial and for `n = 2` both generators coincide, giving order 2.
pub fn dihedral_group(n: usize) -> Result<PermutationGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::ZeroDegree);
    }
    PermutationGroup::closure(vec![rotation(n), reflection(n)], n, DEFAULT_MAX_ORDER)
}

/// All `n!` permutations, for `n <= SYMMETRIC_DEGREE_CAP`.
pub fn symmetric_group(n: usize) -> Result<PermutationGroup, GroupError> {
    symmetric_group_with_cap(n, SYMMETRIC_DEGREE_CAP)
}

pub fn symmetric_group_with_cap(n: usize, cap: usize) -> Result<PermutationGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::ZeroDegree);
    }
    if n > cap {
        return Err(GroupError::SymmetricCapExceeded { degree: n, cap });
    }
    let mut generators = vec![rotation(n)];
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        generators.push(Permutation::from_zero_based(swap));
    }
    PermutationGroup::closure(generators, n, usize::MAX)
}

/// The identity-only group: positions cannot be moved at all.
pub fn trivial_group(n: usize) -> Result<PermutationGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::ZeroDegree);
    }
    PermutationGroup::closure(Vec::new(), n, DEFAULT_MAX_ORDER)
}

/// Textual group description: `cyclic:N`, `dihedral:N`, `symmetric:N`,
/// `trivial:N`, or `gens:<perm>[;<perm>...]@N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Trivial(usize),
    Generators {
        generators: Vec<String>,
        degree: usize,
    },
}

impl GroupSpec {
    pub fn degree(&self) -> usize {
        match *self {
            GroupSpec::Cyclic(n)
            | GroupSpec::Dihedral(n)
            | GroupSpec::Symmetric(n)
            | GroupSpec::Trivial(n) => n,
            GroupSpec::Generators { degree, .. } => degree,
        }
    }

    /// Builds the group; `max_order` bounds closures over user generators.
    pub fn build(&self, max_order: usize) -> Result<PermutationGroup, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => cyclic_group(*n),
            GroupSpec::Dihedral(n) => dihedral_group(*n),
            GroupSpec::Symmetric(n) => symmetric_group(*n),
            GroupSpec::Trivial(n) => trivial_group(*n),
            GroupSpec::Generators { generators, degree } => {
                let gens = generators
                    .iter()
                    .map(|g| Permutation::parse(g, *degree))
                    .collect::<Result<Vec<_>, _>>()?;
                PermutationGroup::closure(gens, *degree, max_order)
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| GroupError::BadSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let parse_degree = |text: &str| match text.trim().parse::<usize>() {
            Ok(0) => Err(bad("degree must be at least 1")),
            Ok(n) => Ok(n),
            Err(_) => Err(bad(&format!("invalid degree {:?}", text.trim()))),
        };

        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| bad("expected <family>:<degree> or gens:<perms>@<degree>"))?;
        match kind.trim() {
            "cyclic" => Ok(GroupSpec::Cyclic(parse_degree(rest)?)),
            "dihedral" => Ok(GroupSpec::Dihedral(parse_degree(rest)?)),
            "symmetric" => Ok(GroupSpec::Symmetric(parse_degree(rest)?)),
            "trivial" => Ok(GroupSpec::Trivial(parse_degree(rest)?)),
            "gens" => {
                let (perms, degree) = rest
                    .rsplit_once('@')
                    .ok_or_else(|| bad("missing '@<degree>'"))?;
                let generators = perms
                    .split(';')
                    .map(str::trim)
                    .filter(|g| !g.is_empty())
                    .map(str::to_string)
                    .collect();
                Ok(GroupSpec::Generators {
                    generators,
                    degree: parse_degree(degree)?,
                })
            }
            other => Err(bad(&format!("unknown group family {other:?}"))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Trivial(n) => write!(f, "trivial:{n}"),
            GroupSpec::Generators { generators, degree } => {
                write!(f, "gens:{}@{degree}", generators.join(";"))
            }
        }
    }
}
