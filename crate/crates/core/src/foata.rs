//! Foata's second fundamental transformation `Φ` on injective words, its
//! right-to-left conjugate `rtlΦ = rev ∘ Φ ∘ rev`, and their inverses.
//!
//! `Φ` is computed by the compartment-cutting algorithm; the recursive
//! definition `Φ(r x) = γ_x(Φ(r)) x` is kept as [`phi_recursive`] so the two
//! can be checked against each other.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A nonempty word of pairwise distinct letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Empty);
        }
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(w[0]));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_permutation(self) -> Result<Permutation> {
        Permutation::new(self.0)
    }
}

impl From<&Permutation> for Word {
    fn from(p: &Permutation) -> Self {
        Word(p.images().to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.iter().join(" "))
    }
}

/// `γ_x`: split `r` into blocks ending on the same side of `x` as the last
/// letter of `r` (interior letters on the other side) and rotate each block's
/// last letter to its front.
pub fn gamma(x: usize, r: &Word) -> Result<Word> {
    if r.0.contains(&x) {
        return Err(Error::LetterInWord(x));
    }
    Ok(Word(gamma_letters(x, &r.0)))
}

fn gamma_letters(x: usize, r: &[usize]) -> Vec<usize> {
    let Some(&last) = r.last() else { return Vec::new() };
    let low = last <= x;
    let mut out = Vec::with_capacity(r.len());
    let mut start = 0;
    for (i, &c) in r.iter().enumerate() {
        if (c <= x) == low {
            out.push(c);
            out.extend_from_slice(&r[start..i]);
            start = i + 1;
        }
    }
    out
}

/// Inverse of [`gamma`]: blocks now start on the side of the first letter;
/// each block's first letter moves to its end.
pub fn gamma_inverse(x: usize, c: &Word) -> Result<Word> {
    if c.0.contains(&x) {
        return Err(Error::LetterInWord(x));
    }
    Ok(Word(gamma_inverse_letters(x, &c.0)))
}

fn gamma_inverse_letters(x: usize, c: &[usize]) -> Vec<usize> {
    let Some(&first) = c.first() else { return Vec::new() };
    let low = first <= x;
    let mut out = Vec::with_capacity(c.len());
    let mut i = 0;
    while i < c.len() {
        let head = c[i];
        let mut k = i + 1;
        while k < c.len() && (c[k] <= x) != low {
            k += 1;
        }
        out.extend_from_slice(&c[i + 1..k]);
        out.push(head);
        i = k;
    }
    out
}

/// One row `r'_i` of the algorithm together with the cuts made for the next
/// letter. `cuts` holds the indices (into `letters`) of compartment
/// boundaries: after a letter for `Φ`, before a letter for `rtlΦ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRow {
    pub letters: Vec<usize>,
    pub cuts: Vec<usize>,
    pub cut_before: bool,
}

impl fmt::Display for TraceRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.letters.iter().enumerate() {
            if self.cut_before && self.cuts.contains(&i) {
                parts.push("|".to_string());
            }
            parts.push(c.to_string());
            if !self.cut_before && self.cuts.contains(&i) {
                parts.push("|".to_string());
            }
        }
        f.write_str(&parts.join(" "))
    }
}

fn phi_rows(r: &[usize]) -> (Vec<usize>, Vec<TraceRow>) {
    let mut cur = vec![r[0]];
    let mut rows = Vec::with_capacity(r.len());
    for &next in &r[1..] {
        let cut_low = *cur.last().expect("nonempty") <= next;
        let cuts: Vec<usize> =
            (0..cur.len()).filter(|&i| (cur[i] <= next) == cut_low).collect();
        let mut t = Vec::with_capacity(cur.len() + 1);
        let mut start = 0;
        for &end in &cuts {
            t.push(cur[end]);
            t.extend_from_slice(&cur[start..end]);
            start = end + 1;
        }
        rows.push(TraceRow { letters: cur, cuts, cut_before: false });
        t.push(next);
        cur = t;
    }
    rows.push(TraceRow { letters: cur.clone(), cuts: Vec::new(), cut_before: false });
    (cur, rows)
}

/// `Φ` by the left-to-right compartment algorithm.
pub fn phi(r: &Word) -> Result<Word> {
    if r.is_empty() {
        return Err(Error::Empty);
    }
    Ok(Word(phi_rows(&r.0).0))
}

/// The rows `r'_1, …, r'_m` of the algorithm, the last one being `Φ(r)`.
pub fn phi_trace(r: &Word) -> Result<Vec<TraceRow>> {
    if r.is_empty() {
        return Err(Error::Empty);
    }
    Ok(phi_rows(&r.0).1)
}

/// `Φ` straight from the recursion `Φ(r x) = γ_x(Φ(r)) x`.
pub fn phi_recursive(r: &Word) -> Result<Word> {
    fn go(r: &[usize]) -> Vec<usize> {
        match r.split_last() {
            None => Vec::new(),
            Some((&x, [])) => vec![x],
            Some((&x, rest)) => {
                let mut out = gamma_letters(x, &go(rest));
                out.push(x);
                out
            }
        }
    }
    if r.is_empty() {
        return Err(Error::Empty);
    }
    Ok(Word(go(&r.0)))
}

pub fn phi_inverse(r: &Word) -> Result<Word> {
    if r.is_empty() {
        return Err(Error::Empty);
    }
    let mut cur = r.0.clone();
    let mut peeled = Vec::with_capacity(cur.len());
    while cur.len() > 1 {
        let x = cur.pop().expect("nonempty");
        peeled.push(x);
        cur = gamma_inverse_letters(x, &cur);
    }
    peeled.push(cur[0]);
    peeled.reverse();
    Ok(Word(peeled))
}

pub fn phi_perm(w: &Permutation) -> Permutation {
    Permutation::from_images_unchecked(phi_rows(w.images()).0)
}

pub fn phi_inverse_perm(w: &Permutation) -> Permutation {
    let word = phi_inverse(&Word::from(w)).expect("permutations are nonempty");
    Permutation::from_images_unchecked(word.0)
}

fn rtl_phi_rows(r: &[usize]) -> (Vec<usize>, Vec<TraceRow>) {
    let (&last, rest) = r.split_last().expect("nonempty");
    let mut cur = vec![last];
    let mut rows = Vec::with_capacity(r.len());
    for &next in rest.iter().rev() {
        let cut_low = cur[0] <= next;
        let cuts: Vec<usize> =
            (0..cur.len()).filter(|&i| (cur[i] <= next) == cut_low).collect();
        let mut t = Vec::with_capacity(cur.len() + 1);
        t.push(next);
        for (k, &begin) in cuts.iter().enumerate() {
            let end = cuts.get(k + 1).copied().unwrap_or(cur.len());
            t.extend_from_slice(&cur[begin + 1..end]);
            t.push(cur[begin]);
        }
        rows.push(TraceRow { letters: cur, cuts, cut_before: true });
        cur = t;
    }
    rows.push(TraceRow { letters: cur.clone(), cuts: Vec::new(), cut_before: true });
    (cur, rows)
}

/// `rtlΦ` by the right-to-left compartment algorithm.
pub fn rtl_phi(w: &Permutation) -> Permutation {
    Permutation::from_images_unchecked(rtl_phi_rows(w.images()).0)
}

/// Rows of the right-to-left algorithm; the last one is `rtlΦ(w)`.
pub fn rtl_phi_trace(w: &Permutation) -> Vec<TraceRow> {
    rtl_phi_rows(w.images()).1
}

/// `rev ∘ Φ ∘ rev`, the defining composition.
pub fn rtl_phi_via_rev(w: &Permutation) -> Permutation {
    phi_perm(&w.rev()).rev()
}

pub fn rtl_phi_inverse(w: &Permutation) -> Permutation {
    phi_inverse_perm(&w.rev()).rev()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::symmetric_group;

    fn word(xs: &[usize]) -> Word {
        Word::new(xs.to_vec()).unwrap()
    }

    fn p(text: &str) -> Permutation {
        text.parse().unwrap()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(5, &word(&[1, 2, 6, 7, 8, 3, 4])).unwrap(), word(&[1, 2, 3, 6, 7, 8, 4]));
        assert_eq!(gamma(9, &word(&[1, 2, 3])).unwrap(), word(&[1, 2, 3]));
        assert_eq!(gamma(0, &word(&[3, 1, 2])).unwrap(), word(&[3, 1, 2]));
        assert_eq!(gamma(2, &word(&[3, 1])).unwrap(), word(&[1, 3]));
        assert_eq!(gamma(2, &word(&[2, 3])), Err(Error::LetterInWord(2)));
    }

    #[test]
    fn gamma_inverse_examples() {
        assert_eq!(
            gamma_inverse(5, &word(&[1, 2, 3, 6, 7, 8, 4])).unwrap(),
            word(&[1, 2, 6, 7, 8, 3, 4])
        );
        assert_eq!(gamma_inverse(9, &word(&[1, 2, 3])).unwrap(), word(&[1, 2, 3]));
    }

    #[test]
    fn gamma_round_trip_exhaustive() {
        for n in 1..=5 {
            for w in symmetric_group(n) {
                let r = Word::from(&w);
                for x in 0..=n + 1 {
                    if r.letters().contains(&x) {
                        continue;
                    }
                    let c = gamma(x, &r).unwrap();
                    assert_eq!(gamma_inverse(x, &c).unwrap(), r);
                    assert_eq!(gamma(x, &gamma_inverse(x, &r).unwrap()).unwrap(), r);
                }
            }
        }
    }

    #[test]
    fn phi_examples() {
        let r = word(&[6, 5, 3, 1, 4, 2]);
        assert_eq!(phi(&r).unwrap(), word(&[3, 6, 5, 4, 1, 2]));
        assert_eq!(phi_recursive(&r).unwrap(), word(&[3, 6, 5, 4, 1, 2]));
        assert_eq!(phi(&word(&[7])).unwrap(), word(&[7]));
        assert_eq!(phi(&word(&[1, 2, 3, 4, 5])).unwrap(), word(&[1, 2, 3, 4, 5]));
        assert_eq!(phi_inverse(&word(&[3, 6, 5, 4, 1, 2])).unwrap(), r);
        assert_eq!(phi_inverse(&word(&[4])).unwrap(), word(&[4]));
    }

    #[test]
    fn empty_words_are_rejected() {
        assert_eq!(Word::new(vec![]), Err(Error::Empty));
        assert_eq!(Word::new(vec![1, 3, 1]), Err(Error::Duplicate(1)));
    }

    #[test]
    fn phi_trace_matches_worked_layout() {
        let rows: Vec<String> = phi_trace(&word(&[6, 5, 3, 1, 4, 2]))
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            rows,
            ["6 |", "6 | 5 |", "6 | 5 | 3 |", "6 5 3 | 1 |", "3 | 6 | 5 | 1 4 |", "3 6 5 4 1 2"]
        );
    }

    #[test]
    fn rtl_phi_examples() {
        let w = p("5 3 6 4 2 1");
        assert_eq!(rtl_phi(&w), p("5 6 3 2 1 4"));
        assert_eq!(rtl_phi_via_rev(&w), p("5 6 3 2 1 4"));
        assert_eq!(rtl_phi_inverse(&p("5 6 3 2 1 4")), w);
        assert!(rtl_phi(&Permutation::identity(5)).is_identity());
        assert!(rtl_phi_inverse(&Permutation::identity(5)).is_identity());
        assert_eq!(rtl_phi(&w).inversions(), 11);
    }

    #[test]
    fn rtl_phi_trace_matches_worked_layout() {
        let rows: Vec<String> =
            rtl_phi_trace(&p("5 3 6 4 2 1")).iter().map(ToString::to_string).collect();
        assert_eq!(
            rows,
            ["| 1", "| 2 | 1", "| 4 | 2 | 1", "| 6 | 4 2 1", "| 3 6 | 2 | 1 | 4", "5 6 3 2 1 4"]
        );
    }

    #[test]
    fn algorithms_agree_and_invert_exhaustive() {
        for n in 1..=7 {
            for w in symmetric_group(n) {
                let r = Word::from(&w);
                let f = phi(&r).unwrap();
                assert_eq!(phi_recursive(&r).unwrap(), f);
                assert_eq!(phi_inverse(&f).unwrap(), r);
                let t = rtl_phi(&w);
                assert_eq!(rtl_phi_via_rev(&w), t);
                assert_eq!(rtl_phi_inverse(&t), w);
            }
        }
    }
}
