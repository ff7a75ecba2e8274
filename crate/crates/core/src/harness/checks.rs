//! Theorem checkers. Each one enumerates its population in lexicographic
//! order and reports the first failure in that order, whatever the number of
//! worker threads.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde_json::json;

use super::poly::{distribution, DistributionPoly};
use super::report::{expect_eq, run_report, Counterexample, ReportBuilder, VerifyReport};
use super::{first_failure, Options};
use crate::bijections::{psi, psi_inverse, psi_q, psi_q_inverse};
use crate::covering::{f, f_q};
use crate::error::{Error, Result};
use crate::foata::{
    phi, phi_inverse_perm, phi_perm, phi_recursive, rtl_phi, rtl_phi_inverse, rtl_phi_via_rev, Word,
};
use crate::patterns::avoids_pat_q;
use crate::perm::{alternating_group, symmetric_group, Permutation};
use crate::stats::{
    del_a, del_q, des_a, des_q, des_s, ell_a, ell_q, ell_s, maj_s, rmaj_a, rmaj_q, rmaj_s, rtlm,
    PosSet,
};

macro_rules! ensure_eq {
    ($detail:expr, $left:expr, $right:expr) => {
        if let Some(c) = expect_eq($detail, $left, $right) {
            return Ok(Some(c));
        }
    };
}

pub(crate) use ensure_eq;

/// `A_{n+1}` for `n ≥ 2`, within the degree cap.
pub(crate) fn a_population(n: usize, opts: &Options) -> Result<Vec<Permutation>> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n + 1, min: 3 });
    }
    opts.check_degree(n + 1)?;
    Ok(alternating_group(n + 1))
}

/// `S_{n+q-1}` for `n, q ≥ 1`, within the degree cap.
fn q_population(n: usize, q: usize, opts: &Options) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if q == 0 {
        return Err(Error::QOutOfRange { q, degree: n + q - 1 });
    }
    opts.check_degree(n + q - 1)?;
    Ok(symmetric_group(n + q - 1))
}

fn s_population(n: usize, opts: &Options) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::Empty);
    }
    opts.check_degree(n)?;
    Ok(symmetric_group(n))
}

/// All subsets of `{lo..=hi}` in increasing binary order.
pub fn subsets(lo: usize, hi: usize) -> Vec<PosSet> {
    (lo..=hi).powerset().map(|s| s.into_iter().collect()).collect()
}

fn candidates(given: &Option<PosSet>, lo: usize, hi: usize) -> Vec<PosSet> {
    match given {
        Some(set) => vec![set.clone()],
        None => subsets(lo, hi),
    }
}

fn set_text(set: &PosSet) -> String {
    format!("{{{}}}", set.iter().join(","))
}

/// The first pair of elements with equal images, if any.
fn first_collision(population: &[Permutation], images: &[Permutation]) -> Option<Counterexample> {
    let mut seen: HashMap<&Permutation, usize> = HashMap::with_capacity(images.len());
    for (i, image) in images.iter().enumerate() {
        if let Some(&k) = seen.get(image) {
            return Some(Counterexample::new(
                format!("not injective: both map to {image}"),
                population[k].clone(),
                population[i].clone(),
            ));
        }
        seen.insert(image, i);
    }
    None
}

/// Checks injectivity of `map` on `population` once the element checks passed.
fn check_bijective<M>(b: &mut ReportBuilder, population: &[Permutation], map: M)
where
    M: Fn(&Permutation) -> Result<Permutation> + Sync,
{
    if b.failed() {
        return;
    }
    match population.par_iter().map(&map).collect::<Result<Vec<_>>>() {
        Ok(images) => {
            if let Some(c) = first_collision(population, &images) {
                b.fail(c);
            }
        }
        Err(e) => b.fail(Counterexample::from_error(&e)),
    }
}

// ---------------------------------------------------------------------------
// Ψ on A_{n+1}

pub(crate) fn psi_element(v: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let u = psi(v)?;
    ensure_eq!("Ψ(v) is even", u.is_even(), true);
    ensure_eq!("rmaj_A(v) = ℓ_A(Ψ(v))", rmaj_a(v)?, ell_a(&u)?);
    ensure_eq!("del_A(v) = del_A(Ψ(v))", del_a(v)?.len(), del_a(&u)?.len());
    let (vi, ui) = (v.inverse(), u.inverse());
    ensure_eq!("Del_A(v^-1) = Del_A(Ψ(v)^-1)", del_a(&vi)?, del_a(&ui)?);
    ensure_eq!("Des_A(v^-1) = Des_A(Ψ(v)^-1)", des_a(&vi)?, des_a(&ui)?);
    ensure_eq!("Ψ^-1(Ψ(v)) = v", psi_inverse(&u)?, v.clone());
    ensure_eq!("f(Ψ(v)) = rtlΦ(f(v))", f(&u)?, rtl_phi(&f(v)?));
    Ok(None)
}

pub fn check_psi_theorem(n: usize, opts: &Options) -> Result<VerifyReport> {
    let population = a_population(n, opts)?;
    run_report("psi", json!({ "n": n }), |b| {
        b.population = population.len() as u64;
        if let Some(c) = first_failure(&population, |v| psi_element(v, 0)) {
            b.fail(c);
        }
        check_bijective(b, &population, psi);
        b.note(format!(
            "A_{} exhaustive: bijectivity, rmaj_A -> l_A, del_A, Del_A and Des_A of the inverse, \
             round trip, f o Psi = rtlPhi o f",
            n + 1
        ));
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Ψ_q on S_{n+q-1}

pub(crate) fn psi_q_element(v: &Permutation, q: usize) -> Result<Option<Counterexample>> {
    let u = psi_q(q, v)?;
    ensure_eq!("rmaj_q(v) = ℓ_q(Ψ_q(v))", rmaj_q(q, v)?, ell_q(q, &u)?);
    let (vi, ui) = (v.inverse(), u.inverse());
    ensure_eq!("Del_q(v^-1) = Del_q(Ψ_q(v)^-1)", del_q(q, &vi)?, del_q(q, &ui)?);
    ensure_eq!("Des_q(v^-1) = Des_q(Ψ_q(v)^-1)", des_q(q, &vi)?, des_q(q, &ui)?);
    ensure_eq!("Ψ_q^-1(Ψ_q(v)) = v", psi_q_inverse(q, &u)?, v.clone());
    ensure_eq!("f_q(Ψ_q(v)) = rtlΦ(f_q(v))", f_q(q, &u)?, rtl_phi(&f_q(q, v)?));
    if q == 1 {
        ensure_eq!("Ψ_1(v) = rtlΦ(v)", u, rtl_phi(v));
    }
    Ok(None)
}

pub fn check_psi_q_theorem(n: usize, q: usize, opts: &Options) -> Result<VerifyReport> {
    let population = q_population(n, q, opts)?;
    run_report("psi-q", json!({ "n": n, "q": q }), |b| {
        b.population = population.len() as u64;
        if let Some(c) = first_failure(&population, |v| psi_q_element(v, q)) {
            b.fail(c.with_q(q));
        }
        check_bijective(b, &population, |v| psi_q(q, v));
        b.note(format!(
            "S_{} exhaustive at q = {q}: bijectivity, rmaj_q -> l_q, Del_q and Des_q of the inverse, \
             round trip, f_q o Psi_q = rtlPhi o f_q{}",
            n + q - 1,
            if q == 1 { ", Psi_1 = rtlPhi" } else { "" }
        ));
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Foata's transformation on S_n

pub(crate) fn foata_element(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let image = phi_perm(w);
    ensure_eq!("maj_S(w) = ℓ_S(Φ(w))", maj_s(w), ell_s(&image));
    ensure_eq!("rtlm(w) = rtlm(Φ(w))", rtlm(w), rtlm(&image));
    ensure_eq!("Des_S(w^-1) = Des_S(Φ(w)^-1)", des_s(&w.inverse()), des_s(&image.inverse()));
    ensure_eq!("Φ(com w) = com Φ(w)", phi_perm(&w.com()), image.com());
    let word = Word::from(w);
    ensure_eq!("algorithmic Φ = recursive Φ", phi(&word)?.into_permutation()?, phi_recursive(&word)?.into_permutation()?);
    ensure_eq!("Φ^-1(Φ(w)) = w", phi_inverse_perm(&image), w.clone());
    let rtl = rtl_phi(w);
    ensure_eq!("rmaj_S(w) = ℓ_S(rtlΦ(w))", rmaj_s(w), ell_s(&rtl));
    ensure_eq!("direct rtlΦ = rev Φ rev", rtl.clone(), rtl_phi_via_rev(w));
    ensure_eq!("rtlΦ^-1(rtlΦ(w)) = w", rtl_phi_inverse(&rtl), w.clone());
    Ok(None)
}

pub fn check_foata(n: usize, opts: &Options) -> Result<VerifyReport> {
    let population = s_population(n, opts)?;
    run_report("foata", json!({ "n": n }), |b| {
        b.population = population.len() as u64;
        if let Some(c) = first_failure(&population, |w| foata_element(w, 0)) {
            b.fail(c);
        }
        check_bijective(b, &population, |w| Ok(phi_perm(w)));
        check_bijective(b, &population, |w| Ok(rtl_phi(w)));
        b.note(format!(
            "S_{n} exhaustive: bijectivity of Phi and rtlPhi, maj -> l, rtlm, inverse descents, \
             Phi o com = com o Phi, recursive and direct variants, rmaj -> l o rtlPhi"
        ));
        Ok(())
    })
}

pub fn check_macmahon(n: usize, opts: &Options) -> Result<VerifyReport> {
    let population = s_population(n, opts)?;
    run_report("macmahon", json!({ "n": n }), |b| {
        b.population = population.len() as u64;
        let maj = distribution(&population, maj_s, |_| true);
        let ell = distribution(&population, ell_s, |_| true);
        let rmaj = distribution(&population, rmaj_s, |_| true);
        if let Some((k, l, r)) = maj.first_difference(&ell) {
            b.fail(Counterexample::new(format!("maj vs length, coefficient of t^{k}: {l} vs {r}"), maj.clone(), ell.clone()));
        }
        if let Some((k, l, r)) = rmaj.first_difference(&ell) {
            b.fail(Counterexample::new(format!("rmaj vs length, coefficient of t^{k}: {l} vs {r}"), rmaj, ell.clone()));
        }
        b.note(format!("sum t^maj = sum t^rmaj = sum t^l = {ell}"));
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Equidistribution on A_{n+1}

struct ARecord {
    des_inv: PosSet,
    del_inv: PosSet,
    rmaj: usize,
    ell: usize,
    image: usize,
}

fn a_records(population: &[Permutation]) -> Result<Vec<ARecord>> {
    population
        .par_iter()
        .map(|v| {
            let vi = v.inverse();
            let image = psi(v)?;
            let index = population.binary_search(&image).map_err(|_| {
                Error::Invariant(format!("Psi({v}) = {image} is outside the population"))
            })?;
            Ok(ARecord {
                des_inv: des_a(&vi)?,
                del_inv: del_a(&vi)?,
                rmaj: rmaj_a(v)?,
                ell: ell_a(v)?,
                image: index,
            })
        })
        .collect()
}

fn a_eq_case(
    population: &[Permutation],
    records: &[ARecord],
    d1: &PosSet,
    d2: &PosSet,
) -> Option<Counterexample> {
    let inside = |r: &ARecord| r.des_inv.is_subset(d1) && r.del_inv.is_subset(d2);
    let case = format!("D1={} D2={}", set_text(d1), set_text(d2));
    let lhs: DistributionPoly = records.iter().filter(|r| inside(r)).map(|r| r.rmaj).collect();
    let rhs: DistributionPoly = records.iter().filter(|r| inside(r)).map(|r| r.ell).collect();
    if let Some((k, l, r)) = lhs.first_difference(&rhs) {
        return Some(Counterexample::new(format!("{case}: coefficient of q^{k}: {l} vs {r}"), lhs, rhs));
    }
    for (v, r) in population.iter().zip(records).filter(|(_, r)| inside(r)) {
        let image = &records[r.image];
        if !inside(image) {
            return Some(
                Counterexample::new(
                    format!("{case}: Psi(v) = {} leaves the filtered population", population[r.image]),
                    image.des_inv.clone(),
                    image.del_inv.clone(),
                )
                .at(v),
            );
        }
        if image.ell != r.rmaj {
            return Some(Counterexample::new(format!("{case}: rmaj_A(v) = l_A(Psi(v))"), r.rmaj, image.ell).at(v));
        }
    }
    None
}

/// Theorem a_eq for the given `D1`, `D2`; an absent set is swept over all
/// subsets (for `D2`, in both the literal and the extended regime).
pub fn check_a_eq(
    n: usize,
    d1: Option<&PosSet>,
    d2: Option<&PosSet>,
    opts: &Options,
) -> Result<VerifyReport> {
    let population = a_population(n, opts)?;
    let d1 = d1.cloned();
    let d2 = d2.cloned();
    run_report("a-eq", json!({ "n": n, "d1": d1, "d2": d2 }), |b| {
        b.population = population.len() as u64;
        let records = a_records(&population)?;
        let distinct: HashSet<usize> = records.iter().map(|r| r.image).collect();
        if distinct.len() != records.len() {
            b.fail(Counterexample::new("Psi is not injective", distinct.len(), records.len()));
        }
        let d1s = candidates(&d1, 1, n - 1);
        let regimes: Vec<(&str, Vec<PosSet>)> = match &d2 {
            Some(set) => vec![("given", vec![set.clone()])],
            None => vec![("literal", subsets(1, n - 1)), ("extended", subsets(1, n + 1))],
        };
        for (regime, d2s) in &regimes {
            let mut cases = 0usize;
            'outer: for s1 in &d1s {
                for s2 in d2s {
                    cases += 1;
                    if let Some(c) = a_eq_case(&population, &records, s1, s2) {
                        b.fail(c);
                        break 'outer;
                    }
                }
            }
            b.note(format!("{regime} regime: {cases} (D1, D2) pairs compared"));
        }
        if d2.is_none() {
            b.note(format!(
                "Del_A takes values in {{3..{}}}; the literal regime bounds D2 by {{1..{}}}, \
                 the extended regime by {{1..{}}}",
                n + 1,
                n - 1,
                n + 1
            ));
        }
        b.note("each pair: coefficient-wise polynomial equality and Psi mapping the filtered set onto itself with rmaj_A -> l_A");
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// q-analogues on S_{n+q-1}

type QKey = (PosSet, PosSet);

struct QRecord {
    key: QKey,
    ell: usize,
    rmaj: usize,
    avoids_inv: bool,
}

fn q_records(q: usize, population: &[Permutation]) -> Result<Vec<QRecord>> {
    population
        .par_iter()
        .map(|pi| {
            let inv = pi.inverse();
            Ok(QRecord {
                key: (des_q(q, &inv)?, del_q(q, &inv)?),
                ell: ell_q(q, pi)?,
                rmaj: rmaj_q(q, pi)?,
                avoids_inv: avoids_pat_q(q, &inv),
            })
        })
        .collect()
}

fn compare_group(case: &str, pair: Option<&(DistributionPoly, DistributionPoly)>) -> Option<Counterexample> {
    let (ell, rmaj) = pair?;
    ell.first_difference(rmaj).map(|(k, l, r)| {
        Counterexample::new(format!("{case}: coefficient of t^{k}: {l} vs {r}"), ell.clone(), rmaj.clone())
    })
}

/// Theorem qst1 for the given `B1`, `B2`; an absent set is swept over all
/// subsets of `{q..n+q-1}`.
pub fn check_qst1(
    n: usize,
    q: usize,
    b1: Option<&PosSet>,
    b2: Option<&PosSet>,
    opts: &Options,
) -> Result<VerifyReport> {
    let population = q_population(n, q, opts)?;
    let m = n + q - 1;
    let b1 = b1.cloned();
    let b2 = b2.cloned();
    run_report("qst1", json!({ "n": n, "q": q, "b1": b1, "b2": b2 }), |b| {
        b.population = population.len() as u64;
        let records = q_records(q, &population)?;
        let mut groups: HashMap<&QKey, (DistributionPoly, DistributionPoly)> = HashMap::new();
        for r in &records {
            let entry = groups.entry(&r.key).or_default();
            entry.0.add(r.ell);
            entry.1.add(r.rmaj);
        }
        let mut cases = 0usize;
        'outer: for s1 in candidates(&b1, q, m) {
            for s2 in candidates(&b2, q, m) {
                cases += 1;
                let key = (s1.clone(), s2);
                let case = format!("B1={} B2={}", set_text(&key.0), set_text(&key.1));
                if let Some(c) = compare_group(&case, groups.get(&key)) {
                    b.fail(c.with_q(q));
                    break 'outer;
                }
            }
        }
        b.note(format!("{cases} (B1, B2) pairs compared; {} nonempty populations", groups.len()));
        if !b.failed() {
            let route = first_failure(&population, |pi| {
                let inv = pi.inverse();
                let image = psi_q(q, pi)?;
                let image_inv = image.inverse();
                ensure_eq!("Des_q of the inverse under Psi_q", des_q(q, &inv)?, des_q(q, &image_inv)?);
                ensure_eq!("Del_q of the inverse under Psi_q", del_q(q, &inv)?, del_q(q, &image_inv)?);
                ensure_eq!("rmaj_q(pi) = l_q(Psi_q(pi))", rmaj_q(q, pi)?, ell_q(q, &image)?);
                Ok(None)
            });
            if let Some(c) = route {
                b.fail(c.with_q(q));
            }
            b.note("bijective route: Psi_q keeps (Des_q, Del_q) of the inverse and carries rmaj_q to l_q");
        }
        Ok(())
    })
}

/// Theorem qst2 for the given `B`; an absent set is swept over all subsets
/// of `{q..n+q-2}`.
pub fn check_qst2(n: usize, q: usize, set: Option<&PosSet>, opts: &Options) -> Result<VerifyReport> {
    let population = q_population(n, q, opts)?;
    let m = n + q - 1;
    let set = set.cloned();
    run_report("qst2", json!({ "n": n, "q": q, "b": set }), |b| {
        b.population = population.len() as u64;
        let records = q_records(q, &population)?;
        let mut groups: HashMap<&PosSet, (DistributionPoly, DistributionPoly)> = HashMap::new();
        let mut avoiders = 0usize;
        for r in records.iter().filter(|r| r.avoids_inv) {
            avoiders += 1;
            let entry = groups.entry(&r.key.0).or_default();
            entry.0.add(r.ell);
            entry.1.add(r.rmaj);
        }
        let mut cases = 0usize;
        for s in candidates(&set, q, m - 1) {
            cases += 1;
            let case = format!("B={}", set_text(&s));
            if let Some(c) = compare_group(&case, groups.get(&s)) {
                b.fail(c.with_q(q));
                break;
            }
        }
        b.note(format!("{cases} sets B compared; {avoiders} permutations with inverse in Avoid_q({m})"));
        Ok(())
    })
}
