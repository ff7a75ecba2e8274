//! Descent, major-index, length and delent statistics on `S_n`, on `A_{n+1}`
//! and the `q`-analogues on `S_{n+q-1}`.
//!
//! Sets of positions and sets of letters are returned as `BTreeSet<usize>`,
//! 1-based. Cardinalities (`del`) are exposed next to the sets.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::canonical::{a_canonical, s_canonical, Generator};
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub type PosSet = BTreeSet<usize>;

/// Number of `i < j` with `σ(i) < σ(j)`, for every position `j`.
fn smaller_before(w: &Permutation) -> Vec<usize> {
    let x = w.images();
    (0..x.len()).map(|j| x[..j].iter().filter(|&&a| a < x[j]).count()).collect()
}

/// Positions `j > k + 1` with at most `k` smaller letters to their left.
fn delent(w: &Permutation, k: usize) -> PosSet {
    smaller_before(w)
        .into_iter()
        .enumerate()
        .filter(|&(i, c)| i + 1 > k + 1 && c <= k)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Letters with at most `k` smaller letters to their left.
fn almost_minima(w: &Permutation, k: usize) -> PosSet {
    smaller_before(w)
        .into_iter()
        .zip(w.images())
        .filter(|&(c, _)| c <= k)
        .map(|(_, &v)| v)
        .collect()
}

// ---------------------------------------------------------------------------
// S_n

pub fn des_s(w: &Permutation) -> PosSet {
    w.images().windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1).collect()
}

pub fn maj_s(w: &Permutation) -> usize {
    des_s(w).iter().sum()
}

pub fn rmaj_s(w: &Permutation) -> usize {
    let n = w.degree();
    des_s(w).iter().map(|i| n - i).sum()
}

/// `ℓ_S`, the inversion number.
pub fn ell_s(w: &Permutation) -> usize {
    w.inversions()
}

/// Positions of left-to-right minima, excluding position 1.
pub fn del_s(w: &Permutation) -> PosSet {
    delent(w, 0)
}

/// Left-to-right minima as letters, first letter included.
pub fn ltrm(w: &Permutation) -> PosSet {
    almost_minima(w, 0)
}

/// Right-to-left minima as letters.
pub fn rtlm(w: &Permutation) -> PosSet {
    let x = w.images();
    (0..x.len()).filter(|&j| x[j + 1..].iter().all(|&b| b > x[j])).map(|j| x[j]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SStatRecord {
    pub des: PosSet,
    pub maj: usize,
    pub rmaj: usize,
    pub ell: usize,
    pub del_set: PosSet,
    pub del_count: usize,
    pub ltrm: PosSet,
}

pub fn s_stats(w: &Permutation) -> SStatRecord {
    let n = w.degree();
    let des = des_s(w);
    let ell = ell_s(w);
    debug_assert_eq!(ell, s_canonical(w).length());
    let del_set = del_s(w);
    SStatRecord {
        maj: des.iter().sum(),
        rmaj: des.iter().map(|i| n - i).sum(),
        des,
        ell,
        del_count: del_set.len(),
        del_set,
        ltrm: ltrm(w),
    }
}

// ---------------------------------------------------------------------------
// A_{n+1}

fn require_alternating(v: &Permutation) -> Result<()> {
    if v.degree() < 2 {
        return Err(Error::DegreeTooSmall { degree: v.degree(), min: 2 });
    }
    if !v.is_even() {
        return Err(Error::OddPermutation(v.to_string()));
    }
    Ok(())
}

/// `ℓ_A`: generators in the A-canonical presentation, `a_1^{-1}` counting one.
pub fn ell_a(v: &Permutation) -> Result<usize> {
    Ok(a_canonical(v)?.length())
}

/// `{1 ≤ i ≤ n-1 : ℓ_A(v) ≥ ℓ_A(v a_i)}`, evaluated literally.
pub fn des_a(v: &Permutation) -> Result<PosSet> {
    require_alternating(v)?;
    let n = v.degree() - 1;
    let ell = ell_a(v)?;
    let mut des = PosSet::new();
    for i in 1..n {
        let mut moved = v.clone();
        for k in Generator::A(i).s_letters() {
            moved.swap_positions(k);
        }
        if ell >= ell_a(&moved)? {
            des.insert(i);
        }
    }
    Ok(des)
}

/// Positions `j > 2` with at most one smaller letter to their left.
pub fn del_a(v: &Permutation) -> Result<PosSet> {
    require_alternating(v)?;
    Ok(delent(v, 1))
}

/// Letters with at most one smaller letter to their left.
pub fn ltram(v: &Permutation) -> Result<PosSet> {
    require_alternating(v)?;
    Ok(almost_minima(v, 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AStatRecord {
    pub des: PosSet,
    pub maj: usize,
    pub rmaj: usize,
    pub ell: usize,
    pub del_set: PosSet,
    pub del_count: usize,
    pub ltram: PosSet,
}

pub fn a_stats(v: &Permutation) -> Result<AStatRecord> {
    require_alternating(v)?;
    let n = v.degree() - 1;
    let des = des_a(v)?;
    let del_set = delent(v, 1);
    Ok(AStatRecord {
        maj: des.iter().sum(),
        rmaj: des.iter().map(|i| n - i).sum(),
        des,
        ell: ell_a(v)?,
        del_count: del_set.len(),
        del_set,
        ltram: almost_minima(v, 1),
    })
}

pub fn rmaj_a(v: &Permutation) -> Result<usize> {
    let n = v.degree() - 1;
    Ok(des_a(v)?.iter().map(|i| n - i).sum())
}

// ---------------------------------------------------------------------------
// q-analogues on S_m, m = n + q - 1

fn require_q(q: usize, v: &Permutation) -> Result<()> {
    if q == 0 || q > v.degree() {
        return Err(Error::QOutOfRange { q, degree: v.degree() });
    }
    Ok(())
}

/// `ℓ_q`: canonical generators `s_k` with `k ≥ q`.
pub fn ell_q(q: usize, v: &Permutation) -> Result<usize> {
    require_q(q, v)?;
    Ok(s_canonical(v).length_from(q))
}

/// `Del_q = {q < j ≤ m : #{i < j : π(i) < π(j)} ≤ q - 1}`.
pub fn del_q(q: usize, v: &Permutation) -> Result<PosSet> {
    require_q(q, v)?;
    Ok(delent(v, q - 1))
}

/// Letters with at most `q - 1` smaller letters to their left.
pub fn ltrm_q(q: usize, v: &Permutation) -> Result<PosSet> {
    require_q(q, v)?;
    Ok(almost_minima(v, q - 1))
}

/// `i ≥ q` with `i ∈ Des(π)` or `i + 1 ∈ Del_q(π)`.
pub fn des_q(q: usize, v: &Permutation) -> Result<PosSet> {
    require_q(q, v)?;
    let descents = des_s(v);
    let dels = delent(v, q - 1);
    Ok((q..v.degree()).filter(|i| descents.contains(i) || dels.contains(&(i + 1))).collect())
}

pub fn rmaj_q(q: usize, v: &Permutation) -> Result<usize> {
    let m = v.degree();
    Ok(des_q(q, v)?.iter().map(|i| m - i).sum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QStatRecord {
    pub q: usize,
    pub m: usize,
    pub ell_q: usize,
    pub del_q_set: PosSet,
    pub des_q: PosSet,
    pub rmaj_q: usize,
    pub ltrm_q: PosSet,
}

pub fn q_stats(q: usize, v: &Permutation) -> Result<QStatRecord> {
    require_q(q, v)?;
    let des = des_q(q, v)?;
    let m = v.degree();
    Ok(QStatRecord {
        q,
        m,
        ell_q: ell_q(q, v)?,
        del_q_set: del_q(q, v)?,
        rmaj_q: des.iter().map(|i| m - i).sum(),
        des_q: des,
        ltrm_q: ltrm_q(q, v)?,
    })
}

/// `X - r = {x - r : x ∈ X}`; elements not exceeding `r` are dropped.
pub fn shift_down(set: &PosSet, r: usize) -> PosSet {
    set.iter().filter(|&&x| x > r).map(|&x| x - r).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{alternating_group, symmetric_group};

    fn p(text: &str) -> Permutation {
        text.parse().unwrap()
    }

    fn set(xs: &[usize]) -> PosSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn s_stats_examples() {
        let r = s_stats(&p("5 3 6 4 2 1"));
        assert_eq!(r.des, set(&[1, 3, 4, 5]));
        assert_eq!(r.rmaj, 11);
        assert_eq!(r.del_count, 3);
        let r = s_stats(&p("5 2 3 1 4"));
        assert_eq!(r.del_set, set(&[2, 4]));
        assert_eq!(r.ltrm, set(&[5, 2, 1]));
        let r = s_stats(&Permutation::identity(5));
        assert!(r.des.is_empty() && r.del_set.is_empty());
        assert_eq!((r.maj, r.rmaj, r.ell), (0, 0, 0));
        assert_eq!(r.ltrm, set(&[1]));
    }

    #[test]
    fn s_procedure_example_descents() {
        let w = p("5 6 3 2 1 4");
        assert_eq!(des_s(&w), set(&[2, 3, 4]));
        assert_eq!(maj_s(&w), 9);
        assert_eq!(rmaj_s(&w), 9);
        assert_eq!(ell_s(&w), 11);
    }

    #[test]
    fn a_stats_examples() {
        let r = a_stats(&p("6 4 3 7 5 2 1")).unwrap();
        assert_eq!(r.ell, 12);
        assert_eq!(r.des, set(&[1, 3, 4, 5]));
        assert_eq!(r.rmaj, 11);
        assert_eq!(r.del_set, set(&[3, 6, 7]));
        assert_eq!(r.del_count, 3);
        let r = a_stats(&p("4 2 6 3 1 5")).unwrap();
        assert_eq!(r.del_set, set(&[4, 5]));
        assert_eq!(r.ltram, set(&[4, 2, 3, 1]));
        let r = a_stats(&p("7 6 3 2 5 1 4")).unwrap();
        assert_eq!(r.des, set(&[1, 2, 4]));
        assert_eq!(r.del_set, set(&[3, 4, 6]));
        assert!(matches!(a_stats(&p("2 1 3")), Err(Error::OddPermutation(_))));
    }

    #[test]
    fn q_stats_examples() {
        let pi = p("3 7 2 5 1 4 6");
        assert_eq!(q_stats(3, &pi).unwrap().ell_q, 6);
        assert_eq!(q_stats(4, &pi).unwrap().ell_q, 4);
        let r = q_stats(2, &Permutation::identity(5)).unwrap();
        assert_eq!(r.ell_q, 0);
        assert!(r.des_q.is_empty() && r.del_q_set.is_empty());
        assert!(matches!(q_stats(0, &pi), Err(Error::QOutOfRange { .. })));
        assert!(matches!(q_stats(8, &pi), Err(Error::QOutOfRange { .. })));
    }

    #[test]
    fn q_equal_one_degenerates_to_s_statistics() {
        for n in 1..=6 {
            for w in symmetric_group(n) {
                let s = s_stats(&w);
                let q = q_stats(1, &w).unwrap();
                assert_eq!(q.ell_q, s.ell);
                assert_eq!(q.des_q, s.des);
                assert_eq!(q.del_q_set, s.del_set);
                assert_eq!(q.rmaj_q, s.rmaj);
            }
        }
    }

    #[test]
    fn q_equal_two_delent_matches_alternating_delent() {
        for v in alternating_group(6) {
            assert_eq!(del_q(2, &v).unwrap(), del_a(&v).unwrap());
        }
    }

    #[test]
    fn record_invariants() {
        for w in symmetric_group(5) {
            let r = s_stats(&w);
            assert_eq!(r.maj, r.des.iter().sum::<usize>());
            assert!(!r.del_set.contains(&1));
            assert!(r.ltrm.contains(&w.image(1)));
            assert_eq!(r.del_count, r.del_set.len());
        }
        for v in alternating_group(6) {
            let r = a_stats(&v).unwrap();
            assert!(r.des.iter().all(|&i| (1..5).contains(&i)));
            assert!(r.del_set.iter().all(|&j| (3..=6).contains(&j)));
        }
        for w in symmetric_group(6) {
            for q in 1..=3 {
                let r = q_stats(q, &w).unwrap();
                assert!(r.des_q.iter().all(|&i| i >= q && i < 6));
                assert!(r.del_q_set.iter().all(|&j| j > q));
            }
        }
    }

    #[test]
    fn rtlm_example() {
        assert_eq!(rtlm(&p("6 5 3 1 4 2")), set(&[1, 2]));
        assert_eq!(rtlm(&Permutation::identity(3)), set(&[1, 2, 3]));
    }

    #[test]
    fn shift_down_drops_small() {
        assert_eq!(shift_down(&set(&[1, 3, 4]), 1), set(&[2, 3]));
    }
}
