//! Named lemmas and propositions checked element by element, plus the
//! oracle equivalences between production algorithms and reference ones.

use std::collections::HashSet;

use itertools::Itertools;
use serde_json::json;

use super::checks::ensure_eq;
use super::report::{expect_eq, run_report, Counterexample, VerifyReport};
use super::{first_failure, ElementCheck, Options};
use crate::bijections::psi;
use crate::canonical::{
    a_canonical, a_canonical_rewrite, enumerate_r_a, enumerate_r_s, s_canonical, ACanonical,
    SCanonical,
};
use crate::covering::{f, f_q};
use crate::error::Result;
use crate::foata::{phi_perm, rtl_phi};
use crate::patterns::{avoids_pat_q, avoids_pat_q_by_matching};
use crate::perm::{alternating_group, symmetric_group, Permutation};
use crate::stats::{
    del_a, del_q, del_s, des_a, des_q, des_s, ell_a, ell_q, ell_s, ltram, ltrm, ltrm_q, maj_s,
    rmaj_a, rmaj_q, rmaj_s, shift_down, PosSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// `S_n`, `1 ≤ n ≤ n_cap`.
    Symmetric,
    /// `A_{n+1}`, `3 ≤ n + 1 ≤ n_cap`.
    Alternating,
    /// `S_m` with `1 ≤ q ≤ min(q_cap, m)`, `m ≤ n_cap`.
    Quotient,
}

pub struct Lemma {
    pub name: &'static str,
    pub statement: &'static str,
    pub domain: Domain,
    pub(crate) check: ElementCheck,
}

fn rev_com_remark(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let rho = Permutation::longest(w.degree());
    ensure_eq!("rev(w) = w rho", w.rev(), w.compose(&rho)?);
    ensure_eq!("com(w) = rho w", w.com(), rho.compose(w)?);
    ensure_eq!("rev(w)^-1 = com(w^-1)", w.rev().inverse(), w.inverse().com());
    ensure_eq!("rev com = com rev", w.com().rev(), w.rev().com());
    ensure_eq!("rev and com are involutions", (w.rev().rev(), w.com().com()) == (w.clone(), w.clone()), true);
    Ok(None)
}

fn phi_commutes_with_com(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    Ok(expect_eq("Phi(com w) = com Phi(w)", phi_perm(&w.com()), phi_perm(w).com()))
}

fn length_rev_com(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    Ok(expect_eq("l(rev com w) = l(w)", ell_s(&w.com().rev()), ell_s(w)))
}

fn maj_rev_com(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    Ok(expect_eq("maj(rev com w) = rmaj(w)", maj_s(&w.com().rev()), rmaj_s(w)))
}

fn rmaj_rtl_phi(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    Ok(expect_eq("rmaj(w) = l(rtlPhi(w))", rmaj_s(w), ell_s(&rtl_phi(w))))
}

fn length_is_inversions(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    Ok(expect_eq("l_S(w) = inv(w)", s_canonical(w).length(), w.inversions()))
}

fn descent_iff_length_drop(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let des = des_s(w);
    for i in 1..w.degree() {
        let mut moved = w.clone();
        moved.swap_positions(i);
        ensure_eq!("i in Des_S(w) iff l(w s_i) < l(w)", des.contains(&i), ell_s(&moved) < ell_s(w));
    }
    Ok(None)
}

fn ltrm_duality(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let mut rhs = del_s(&w.inverse());
    rhs.insert(1);
    Ok(expect_eq("ltrm(w) = Del_S(w^-1) + {1}", ltrm(w), rhs))
}

fn rep_ltrm(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let form = s_canonical(w);
    let set = ltrm(w);
    for j in 2..=w.degree() {
        ensure_eq!("j in ltrm(w) iff w_{j-1} = s_{j-1}..s_1", set.contains(&j), form.factor(j - 1).is_full_run());
    }
    Ok(None)
}

fn ltrm_rtl_phi(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let image = rtl_phi(w);
    ensure_eq!("ltrm(w) = ltrm(rtlPhi(w))", ltrm(w), ltrm(&image));
    ensure_eq!("del_S(w) = del_S(rtlPhi(w))", del_s(w).len(), del_s(&image).len());
    Ok(None)
}

fn full_runs_preserved(w: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let full = |form: SCanonical| -> PosSet {
        form.factors().iter().filter(|s| s.is_full_run()).map(|s| s.j()).collect()
    };
    Ok(expect_eq("full runs of w and rtlPhi(w)", full(s_canonical(w)), full(s_canonical(&rtl_phi(w)))))
}

fn ltram_duality(v: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let mut rhs = del_a(&v.inverse())?;
    rhs.extend([1, 2]);
    Ok(expect_eq("ltram(v) = Del_A(v^-1) + {1,2}", ltram(v)?, rhs))
}

fn f_pairs(v: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let w = f(v)?;
    ensure_eq!("l_A(v) = l_S(f(v))", ell_a(v)?, ell_s(&w));
    ensure_eq!("rmaj_A(v) = rmaj_S(f(v))", rmaj_a(v)?, rmaj_s(&w));
    ensure_eq!("del_A(v) = del_S(f(v))", del_a(v)?.len(), del_s(&w).len());
    ensure_eq!("Des_A(v) = Des_S(f(v))", des_a(v)?, des_s(&w));
    Ok(None)
}

fn f_inverse(v: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    Ok(expect_eq("f(v)^-1 = f(v^-1)", f(v)?.inverse(), f(&v.inverse())?))
}

fn rep_ltram(v: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    let form: ACanonical = a_canonical(v)?;
    let set = ltram(v)?;
    for j in 3..=v.degree() {
        ensure_eq!("j in ltram(v) iff v_{j-2} is a tail", set.contains(&j), form.factor(j - 2).is_tail());
    }
    Ok(None)
}

fn ltram_ltrm_bridge(v: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    Ok(expect_eq("ltrm(f(v)) = ltram(v) - 1", ltrm(&f(v)?), shift_down(&ltram(v)?, 1)))
}

fn f_intertwines_psi(v: &Permutation, _q: usize) -> Result<Option<Counterexample>> {
    Ok(expect_eq("f(Psi(v)) = rtlPhi(f(v))", f(&psi(v)?)?, rtl_phi(&f(v)?)))
}

fn ltrm_q_duality(w: &Permutation, q: usize) -> Result<Option<Counterexample>> {
    let mut rhs = del_q(q, &w.inverse())?;
    rhs.extend(1..=q);
    Ok(expect_eq("ltrm_q(w) = Del_q(w^-1) + {1..q}", ltrm_q(q, w)?, rhs))
}

fn f_q_pairs(w: &Permutation, q: usize) -> Result<Option<Counterexample>> {
    let image = f_q(q, w)?;
    ensure_eq!("Del_q(w) - q + 1 = Del_S(f_q(w))", shift_down(&del_q(q, w)?, q - 1), del_s(&image));
    ensure_eq!("Des_q(w) - q + 1 = Des_S(f_q(w))", shift_down(&des_q(q, w)?, q - 1), des_s(&image));
    ensure_eq!("l_q(w) = l_S(f_q(w))", ell_q(q, w)?, ell_s(&image));
    ensure_eq!("rmaj_q(w) = rmaj_S(f_q(w))", rmaj_q(q, w)?, rmaj_s(&image));
    Ok(None)
}

fn f_q_inverse(w: &Permutation, q: usize) -> Result<Option<Counterexample>> {
    Ok(expect_eq("f_q(w)^-1 = f_q(w^-1)", f_q(q, w)?.inverse(), f_q(q, &w.inverse())?))
}

fn rep_ltrm_q(w: &Permutation, q: usize) -> Result<Option<Counterexample>> {
    let form = s_canonical(w);
    let set = ltrm_q(q, w)?;
    for j in q + 1..=w.degree() {
        let short = form.factor(j - 1).low().is_some_and(|ell| ell <= q);
        ensure_eq!("j in ltrm_q(w) iff w_{j-1} = s_{j-1}..s_l with l <= q", set.contains(&j), short);
    }
    Ok(None)
}

fn f_q_intertwines_psi_q(w: &Permutation, q: usize) -> Result<Option<Counterexample>> {
    let image = crate::bijections::psi_q(q, w)?;
    Ok(expect_eq("f_q(Psi_q(w)) = rtlPhi(f_q(w))", f_q(q, &image)?, rtl_phi(&f_q(q, w)?)))
}

/// Every named lemma and proposition, in the order they are reported.
pub fn lemmas() -> Vec<Lemma> {
    use Domain::*;
    let lemma = |name, statement, domain, check: ElementCheck| Lemma { name, statement, domain, check };
    vec![
        lemma("rev-com-remark", "rev(w) = w rho, com(w) = rho w, rev(w)^-1 = com(w^-1), rev com = com rev", Symmetric, rev_com_remark),
        lemma("phi-commutes-with-com", "Phi o com = com o Phi", Symmetric, phi_commutes_with_com),
        lemma("length-rev-com", "l_S(rev com w) = l_S(w)", Symmetric, length_rev_com),
        lemma("maj-rev-com", "maj_S(rev com w) = rmaj_S(w)", Symmetric, maj_rev_com),
        lemma("rmaj-is-length-of-rtl-phi", "rmaj_S(w) = l_S(rtlPhi(w))", Symmetric, rmaj_rtl_phi),
        lemma("length-is-inversions", "l_S(w) = inv(w)", Symmetric, length_is_inversions),
        lemma("descent-iff-length-drop", "i in Des_S(w) iff l_S(w s_i) < l_S(w)", Symmetric, descent_iff_length_drop),
        lemma("ltrm-duality", "ltrm(w) = Del_S(w^-1) + {1}", Symmetric, ltrm_duality),
        lemma("rep-ltrm", "j in ltrm(w) iff w_{j-1} = s_{j-1}..s_1", Symmetric, rep_ltrm),
        lemma("ltrm-rtl-phi", "ltrm(w) = ltrm(rtlPhi(w)), del_S(w) = del_S(rtlPhi(w))", Symmetric, ltrm_rtl_phi),
        lemma("full-runs-rtl-phi", "w_j = s_j..s_1 iff rtlPhi(w)_j = s_j..s_1", Symmetric, full_runs_preserved),
        lemma("ltram-duality", "ltram(v) = Del_A(v^-1) + {1,2}", Alternating, ltram_duality),
        lemma("f-pairs", "(l_S, l_A), (rmaj_S, rmaj_A), (del_S, del_A), (Des_S, Des_A) are f-pairs", Alternating, f_pairs),
        lemma("f-inverse", "f(v)^-1 = f(v^-1)", Alternating, f_inverse),
        lemma("rep-ltram", "j in ltram(v) iff v_{j-2} = a_{j-2}..a_1^(+-1)", Alternating, rep_ltram),
        lemma("ltram-ltrm-bridge", "ltrm(f(v)) = ltram(v) - 1", Alternating, ltram_ltrm_bridge),
        lemma("f-intertwines-psi", "f(Psi(v)) = rtlPhi(f(v))", Alternating, f_intertwines_psi),
        lemma("ltrm-q-duality", "ltrm_q(w) = Del_q(w^-1) + {1..q}", Quotient, ltrm_q_duality),
        lemma("f-q-pairs", "Del_q, Des_q shift by q-1 under f_q; l_q and rmaj_q are f_q-pairs", Quotient, f_q_pairs),
        lemma("f-q-inverse", "f_q(w)^-1 = f_q(w^-1)", Quotient, f_q_inverse),
        lemma("rep-ltrm-q", "j in ltrm_q(w) iff w_{j-1} = s_{j-1}..s_l with l <= q", Quotient, rep_ltrm_q),
        lemma("f-q-intertwines-psi-q", "f_q(Psi_q(w)) = rtlPhi(f_q(w))", Quotient, f_q_intertwines_psi_q),
    ]
}

pub fn find_lemma(name: &str) -> Option<Lemma> {
    lemmas().into_iter().find(|l| l.name == name)
}

/// One report per lemma, each exhaustive over its domain within the caps.
pub fn check_lemma_suite(n_cap: usize, q_cap: usize, opts: &Options) -> Result<Vec<VerifyReport>> {
    opts.check_degree(n_cap)?;
    let groups: Vec<Vec<Permutation>> = (0..=n_cap).map(|n| if n == 0 { Vec::new() } else { symmetric_group(n) }).collect();
    let alternating: Vec<Vec<Permutation>> =
        groups.iter().map(|g| g.iter().filter(|w| w.is_even()).cloned().collect()).collect();
    lemmas()
        .into_iter()
        .map(|lemma| {
            run_report(format!("lemma:{}", lemma.name), json!({ "n_cap": n_cap, "q_cap": q_cap }), |b| {
                let runs: Vec<(&[Permutation], usize)> = match lemma.domain {
                    Domain::Symmetric => (1..=n_cap).map(|n| (groups[n].as_slice(), 0)).collect(),
                    Domain::Alternating => (3..=n_cap).map(|n| (alternating[n].as_slice(), 0)).collect(),
                    Domain::Quotient => (1..=n_cap)
                        .flat_map(|m| (1..=q_cap.min(m)).map(move |q| (m, q)))
                        .map(|(m, q)| (groups[m].as_slice(), q))
                        .collect(),
                };
                for (population, q) in runs {
                    b.population += population.len() as u64;
                    if let Some(c) = first_failure(population, |w| (lemma.check)(w, q)) {
                        let c = if lemma.domain == Domain::Quotient { c.with_q(q) } else { c };
                        b.fail(c);
                        break;
                    }
                }
                b.note(lemma.statement);
                Ok(())
            })
        })
        .collect()
}

/// Peel-off A-canonical form against the pairwise rewrite of the S-word,
/// for `A_d`, `2 ≤ d ≤ max_degree`.
pub fn check_a_canonical_oracle(max_degree: usize, opts: &Options) -> Result<VerifyReport> {
    opts.check_degree(max_degree)?;
    run_report("oracle:a-canonical", json!({ "max_degree": max_degree }), |b| {
        for d in 2..=max_degree {
            let population = alternating_group(d);
            b.population += population.len() as u64;
            let failure = first_failure(&population, |v| {
                let form = a_canonical(v)?;
                ensure_eq!("peel-off = rewrite", form.to_string(), a_canonical_rewrite(v)?.to_string());
                ensure_eq!("expand(a_canonical(v)) = v", form.expand(), v.clone());
                Ok(None)
            });
            if let Some(c) = failure {
                b.fail(c);
                break;
            }
        }
        Ok(())
    })
}

/// Factor tuples from `R_1 × ⋯ × R_{n-1}` expand to pairwise distinct
/// elements covering the group, and canonicalization recovers each tuple.
pub fn check_canonical_uniqueness(max_degree: usize, opts: &Options) -> Result<VerifyReport> {
    opts.check_degree(max_degree)?;
    run_report("oracle:canonical-uniqueness", json!({ "max_degree": max_degree }), |b| {
        for n in 2..=max_degree {
            let mut seen = HashSet::new();
            for factors in (1..n).map(enumerate_r_s).multi_cartesian_product() {
                b.population += 1;
                let form = SCanonical::from_factors(n, factors)?;
                let w = form.expand();
                if s_canonical(&w) != form {
                    b.fail(Counterexample::new("s_canonical(expand(t)) = t", s_canonical(&w).to_string(), form.to_string()).at(&w));
                }
                seen.insert(w);
            }
            if let Some(c) = expect_eq("S-tuples cover S_n", seen.len(), symmetric_group(n).len()) {
                b.fail(c);
            }
        }
        for d in 3..=max_degree {
            let mut seen = HashSet::new();
            for factors in (1..d - 1).map(enumerate_r_a).multi_cartesian_product() {
                b.population += 1;
                let form = ACanonical::from_factors(d, factors)?;
                let v = form.expand();
                if a_canonical(&v)? != form {
                    b.fail(Counterexample::new("a_canonical(expand(t)) = t", a_canonical(&v)?.to_string(), form.to_string()).at(&v));
                }
                seen.insert(v);
            }
            if let Some(c) = expect_eq("A-tuples cover A_{n+1}", seen.len(), alternating_group(d).len()) {
                b.fail(c);
            }
        }
        Ok(())
    })
}

/// Fast avoidance criterion against the generic dashed-pattern matcher, and
/// monotonicity in `q`, on `S_m` for `m ≤ max_degree`, `q ≤ q_cap`.
pub fn check_avoidance_oracle(max_degree: usize, q_cap: usize, opts: &Options) -> Result<VerifyReport> {
    opts.check_degree(max_degree)?;
    run_report("oracle:avoidance", json!({ "max_degree": max_degree, "q_cap": q_cap }), |b| {
        for m in 1..=max_degree {
            let population = symmetric_group(m);
            for q in 1..=q_cap {
                b.population += population.len() as u64;
                let failure = first_failure(&population, |w| {
                    let fast = avoids_pat_q(q, w);
                    ensure_eq!("fast criterion = matcher", fast, avoids_pat_q_by_matching(q, w));
                    if fast {
                        ensure_eq!("avoiding Pat(q) implies avoiding Pat(q+1)", avoids_pat_q(q + 1, w), true);
                    }
                    Ok(None)
                });
                if let Some(c) = failure {
                    b.fail(c.with_q(q));
                    return Ok(());
                }
            }
        }
        Ok(())
    })
}
