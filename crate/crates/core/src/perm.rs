//! Permutations of `{1..n}` in one-line notation.
//!
//! Positions and values are 1-based on the public surface. Products follow
//! `(a * b)(i) = a(b(i))`, so right-multiplying by the adjacent transposition
//! `s_i` swaps the entries at positions `i` and `i + 1`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation")]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Deserialize)]
struct RawPermutation {
    images: Vec<usize>,
}

impl TryFrom<RawPermutation> for Permutation {
    type Error = Error;

    fn try_from(raw: RawPermutation) -> Result<Self> {
        Permutation::new(raw.images)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// How [`Permutation::format`] renders the one-line word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FormatStyle {
    /// `[5,6,3,2,1,4]`
    #[default]
    Bracketed,
    /// `5 6 3 2 1 4`
    Spaced,
}

impl Permutation {
    /// Builds a permutation from its one-line images `[σ(1), …, σ(n)]`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::OutOfRange { value: v, degree: n });
            }
            if seen[v] {
                return Err(Error::Duplicate(v));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection of `{1..len}`.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        Permutation { images: (1..=n).collect() }
    }

    /// The longest element `ρ = [n, n-1, …, 1]`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        Permutation { images: (1..=n).rev().collect() }
    }

    /// The Coxeter generator `s_i = (i, i+1)` in `S_n`.
    pub fn adjacent(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, degree: n });
        }
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    /// `σ(i)` for a 1-based position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// 1-based position holding `value`.
    pub fn position_of(&self, value: usize) -> usize {
        self.images.iter().position(|&v| v == value).expect("value in range") + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self * other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        let images = other.images.iter().map(|&b| self.images[b - 1]).collect();
        Ok(Permutation { images })
    }

    /// In-place right multiplication by `s_i`.
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Reverse of the one-line word; equals `self * ρ`.
    pub fn rev(&self) -> Permutation {
        Permutation { images: self.images.iter().rev().copied().collect() }
    }

    /// Complement `i ↦ n + 1 - σ(i)`; equals `ρ * self`.
    pub fn com(&self) -> Permutation {
        let n = self.degree();
        Permutation { images: self.images.iter().map(|&v| n + 1 - v).collect() }
    }

    /// Number of pairs `i < j` with `σ(i) > σ(j)`.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }

    pub fn parity(&self) -> Parity {
        if self.inversions().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Accepts whitespace- or comma-separated integers with optional surrounding
    /// brackets, e.g. `"6 4 3 7 5 2 1"` or `"[5,6,3,2,1,4]"`.
    pub fn parse(text: &str) -> Result<Permutation> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .or_else(|| trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')))
            .unwrap_or(trimmed);
        let images = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::MalformedToken(t.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }

    pub fn format(&self, style: FormatStyle) -> String {
        match style {
            FormatStyle::Bracketed => format!("[{}]", self.images.iter().join(",")),
            FormatStyle::Spaced => self.images.iter().join(" "),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(FormatStyle::Bracketed))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

/// All of `S_n` in lexicographic one-line order.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    assert!(n >= 1, "degree must be positive");
    (1..=n)
        .permutations(n)
        .map(Permutation::from_images_unchecked)
        .collect()
}

/// All of `A_n` in lexicographic one-line order.
pub fn alternating_group(n: usize) -> Vec<Permutation> {
    symmetric_group(n).into_iter().filter(Permutation::is_even).collect()
}
