//! Permutations of `{1, ..., n}` in image-table form, with cycle notation.
//!
//! Positions are 1-based throughout the public API. Composition follows the
//! function convention: `p.compose(&q)` applies `q` first, then `p`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("malformed cycle notation {input:?} at byte {offset}: {reason}")]
    Syntax {
        input: String,
        offset: usize,
        reason: &'static str,
    },
    #[error("position {position} appears more than once in {input:?}")]
    RepeatedPosition { input: String, position: usize },
    #[error("position {token} in {input:?} exceeds degree {degree}")]
    PositionOutOfRange {
        input: String,
        token: String,
        degree: usize,
    },
    #[error("position 0 in {input:?}; positions start at 1")]
    ZeroPosition { input: String },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image table {images:?} is not a bijection of 1..={}", images.len())]
    NotBijection { images: Vec<usize> },
}

/// A bijection of `{1, ..., n}`.
///
/// Stored as a 0-based image table; the derived ordering is the
/// lexicographic order of image tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `degree` positions.
    ///
    /// Panics if `degree` is zero.
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be at least 1");
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its 1-based image table: `images[i - 1]` is
    /// the image of position `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        for &img in &images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(PermError::NotBijection { images });
            }
            seen[img - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!(!images.is_empty());
        Permutation { images }
    }

    /// Parses cycle notation such as `"(1 2 3 4)"`, `"(1,4)(2,3)"` or the
    /// compact `"(1234)"`. Positions not mentioned are fixed.
    ///
    /// A cycle written without any separators is read digit by digit when
    /// `degree <= 9`, and as a single position otherwise.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let syntax = |offset, reason| PermError::Syntax {
            input: text.to_string(),
            offset,
            reason,
        };

        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            if bytes[i] != b'(' {
                return Err(syntax(i, "expected '('"));
            }
            let open = i;
            let close = match text[open + 1..].find(')') {
                Some(rel) => open + 1 + rel,
                None => return Err(syntax(open, "unterminated cycle")),
            };
            let body = &text[open + 1..close];
            if let Some(rel) = body
                .char_indices()
                .find(|&(_, c)| !(c.is_ascii_digit() || c == ',' || c.is_whitespace()))
                .map(|(j, _)| j)
            {
                return Err(syntax(open + 1 + rel, "unexpected character in cycle"));
            }
            let tokens: Vec<&str> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .collect();
            if tokens.is_empty() {
                return Err(syntax(open, "empty cycle"));
            }
            let compact = tokens.len() == 1 && degree <= 9;
            let tokens: Vec<&str> = if compact {
                let t = tokens[0];
                (0..t.len()).map(|k| &t[k..k + 1]).collect()
            } else {
                tokens
            };

            let mut cycle = Vec::with_capacity(tokens.len());
            for token in tokens {
                let position = match token.parse::<usize>() {
                    Ok(0) => {
                        return Err(PermError::ZeroPosition {
                            input: text.to_string(),
                        })
                    }
                    Ok(p) if p <= degree => p,
                    _ => {
                        return Err(PermError::PositionOutOfRange {
                            input: text.to_string(),
                            token: token.to_string(),
                            degree,
                        })
                    }
                };
                if used[position - 1] {
                    return Err(PermError::RepeatedPosition {
                        input: text.to_string(),
                        position,
                    });
                }
                used[position - 1] = true;
                cycle.push(position - 1);
            }
            for (k, &from) in cycle.iter().enumerate() {
                images[from] = cycle[(k + 1) % cycle.len()];
            }
            i = close + 1;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based `position`. Panics if out of range.
    pub fn image(&self, position: usize) -> usize {
        self.images[position - 1] + 1
    }

    /// The 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: the permutation sending `i` to `self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Disjoint-cycle form, fixed points included as 1-cycles.
    pub fn cycles(&self) -> CycleDecomposition {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        // Scanning starts in increasing order, so each cycle begins at its
        // smallest element and the cycles come out sorted.
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = BTreeMap::new();
        for cycle in self.cycles().cycles {
            *counts.entry(cycle.len()).or_insert(0) += 1;
        }
        CycleType { counts }
    }

    /// Number of cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        self.cycles().cycles.len()
    }
}

/// Canonical string: space-separated positions, every cycle shown.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycles().fmt(f)
    }
}

/// Disjoint cycles in canonical order: each cycle starts at its smallest
/// position and cycles are sorted by that position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Cycle length → number of cycles of that length (nonzero entries only).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    counts: BTreeMap<usize, usize>,
}

impl CycleType {
    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn get(&self, length: usize) -> usize {
        self.counts.get(&length).copied().unwrap_or(0)
    }

    /// `Σ ℓ · counts[ℓ]`, which equals the degree of the permutation.
    pub fn degree(&self) -> usize {
        self.counts.iter().map(|(l, c)| l * c).sum()
    }

    pub fn num_cycles(&self) -> usize {
        self.counts.values().sum()
    }
}

impl<const N: usize> From<[(usize, usize); N]> for CycleType {
    fn from(entries: [(usize, usize); N]) -> Self {
        CycleType {
            counts: entries.into_iter().filter(|&(_, c)| c > 0).collect(),
        }
    }
}
