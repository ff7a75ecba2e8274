//! Dashed patterns, the family `Pat(q)` and the avoidance class `Avoid_q(m)`.
//!
//! A dashed pattern is a sequence of blocks. An occurrence picks consecutive
//! positions for each block, blocks left to right with any gap (possibly
//! none) between them, such that the chosen letters are order-isomorphic to
//! the pattern.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::{symmetric_group, Permutation};

/// Largest degree [`enumerate_avoiders`] accepts.
pub const ENUMERATION_CAP: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DashedPattern {
    blocks: Vec<Vec<usize>>,
}

impl DashedPattern {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::InvalidPattern("empty block".into()));
        }
        let flat: Vec<usize> = blocks.iter().flatten().copied().collect();
        Permutation::new(flat).map_err(|e| Error::InvalidPattern(e.to_string()))?;
        Ok(DashedPattern { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of letters `k`.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    fn flat(&self) -> Vec<usize> {
        self.blocks.iter().flatten().copied().collect()
    }
}

impl fmt::Display for DashedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.blocks.iter().map(|b| b.iter().join(",")).join("-"))
    }
}

/// Parses `(1-2-4,3)`: dashes separate blocks, commas separate letters
/// inside a block.
impl FromStr for DashedPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let blocks = inner
            .split('-')
            .map(|block| {
                block
                    .split(',')
                    .map(|t| {
                        t.trim().parse::<usize>().map_err(|_| Error::MalformedToken(t.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        DashedPattern::new(blocks)
    }
}

/// `Pat(q) = {(π_1-…-π_q-(q+2),(q+1)) : π ∈ S_q}`, in lexicographic order of `π`.
pub fn pat(q: usize) -> Vec<DashedPattern> {
    assert!(q >= 1, "q must be positive");
    symmetric_group(q)
        .into_iter()
        .map(|pi| {
            let mut blocks: Vec<Vec<usize>> = pi.images().iter().map(|&x| vec![x]).collect();
            blocks.push(vec![q + 2, q + 1]);
            DashedPattern { blocks }
        })
        .collect()
}

/// Positions (1-based) of the leftmost occurrence found by backtracking.
pub fn find_occurrence(p: &DashedPattern, w: &Permutation) -> Option<Vec<usize>> {
    let pattern = p.flat();
    if pattern.len() > w.degree() {
        return None;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    if search(p.blocks(), &pattern, w.images(), 0, &mut chosen) {
        Some(chosen.iter().map(|i| i + 1).collect())
    } else {
        None
    }
}

fn search(
    blocks: &[Vec<usize>],
    pattern: &[usize],
    word: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let Some((block, rest)) = blocks.split_first() else { return true };
    let remaining: usize = blocks.iter().map(Vec::len).sum();
    if from + remaining > word.len() {
        return false;
    }
    for start in from..=word.len() - remaining {
        let base = chosen.len();
        let fits = (0..block.len()).all(|k| {
            let pos = start + k;
            let idx = base + k;
            (0..idx).all(|e| {
                let prev = if e < base { chosen[e] } else { start + e - base };
                (word[prev] < word[pos]) == (pattern[e] < pattern[idx])
            })
        });
        if fits {
            chosen.extend(start..start + block.len());
            if search(rest, pattern, word, start + block.len(), chosen) {
                return true;
            }
            chosen.truncate(base);
        }
    }
    false
}

pub fn occurs(p: &DashedPattern, w: &Permutation) -> bool {
    find_occurrence(p, w).is_some()
}

/// Fast test: `w` avoids `Pat(q)` iff no adjacent descent `w(j) > w(j+1)`
/// has `q` or more letters smaller than `w(j+1)` to the left of `j`.
pub fn avoids_pat_q(q: usize, w: &Permutation) -> bool {
    assert!(q >= 1, "q must be positive");
    let x = w.images();
    (0..x.len().saturating_sub(1))
        .filter(|&j| x[j] > x[j + 1])
        .all(|j| x[..j].iter().filter(|&&a| a < x[j + 1]).count() < q)
}

/// Reference test running the generic matcher over every member of `Pat(q)`.
pub fn avoids_pat_q_by_matching(q: usize, w: &Permutation) -> bool {
    pat(q).iter().all(|p| !occurs(p, w))
}

/// The first member of `Pat(q)` occurring in `w`, with its positions.
pub fn pat_q_witness(q: usize, w: &Permutation) -> Option<(DashedPattern, Vec<usize>)> {
    pat(q).into_iter().find_map(|p| find_occurrence(&p, w).map(|pos| (p, pos)))
}

/// `Avoid_q(m)` in lexicographic order.
pub fn enumerate_avoiders(q: usize, m: usize) -> Result<Vec<Permutation>> {
    if m == 0 {
        return Err(Error::Empty);
    }
    if q == 0 {
        return Err(Error::QOutOfRange { q, degree: m });
    }
    if m > ENUMERATION_CAP {
        return Err(Error::ResourceCap { degree: m, cap: ENUMERATION_CAP });
    }
    Ok(symmetric_group(m).into_iter().filter(|w| avoids_pat_q(q, w)).collect())
}
