//! Covering maps `f : A_{n+1} → S_n` and `f_q : S_{n+q-1} → S_n`, with the
//! anchored local inverses `g_u` and `g_{q,u}`.
//!
//! Every map here works factor by factor on canonical presentations.

use crate::canonical::{
    a_canonical, s_canonical, ACanonical, AFactor, AKind, SCanonical, SFactor, SKind,
};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `f` on presentations: `a_j ⋯ a_ell ↦ s_j ⋯ s_ell`, both tails `↦ s_j ⋯ s_1`.
pub fn f_presentation(v: &ACanonical) -> SCanonical {
    let factors = v
        .factors()
        .iter()
        .map(|a| {
            let kind = match a.kind() {
                AKind::Identity => SKind::Identity,
                AKind::Run(ell) => SKind::Run(ell),
                AKind::Tail(_) => SKind::Run(1),
            };
            SFactor::new(a.j(), kind).expect("run bounds carry over")
        })
        .collect();
    SCanonical::from_factors(v.degree() - 1, factors).expect("one factor per index")
}

pub fn f(v: &Permutation) -> Result<Permutation> {
    Ok(f_presentation(&a_canonical(v)?).expand())
}

/// A lifting anchor `u ∈ A_{n+1}` with its A-canonical presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverContext {
    anchor: Permutation,
    presentation: ACanonical,
}

impl CoverContext {
    pub fn new(anchor: &Permutation) -> Result<Self> {
        let presentation = a_canonical(anchor)?;
        Ok(CoverContext { anchor: anchor.clone(), presentation })
    }

    pub fn anchor(&self) -> &Permutation {
        &self.anchor
    }

    pub fn presentation(&self) -> &ACanonical {
        &self.presentation
    }

    fn check_degree(&self, w: &SCanonical) -> Result<()> {
        if w.degree() + 1 != self.anchor.degree() {
            return Err(Error::DegreeMismatch { left: self.anchor.degree(), right: w.degree() + 1 });
        }
        Ok(())
    }

    /// `g_u` on presentations. Total: any `w` lifts, whether or not
    /// [`CoverContext::lift_compatible`] holds.
    pub fn g_presentation(&self, w: &SCanonical) -> Result<ACanonical> {
        self.check_degree(w)?;
        let factors = w
            .factors()
            .iter()
            .zip(self.presentation.factors())
            .map(|(s, u)| match s.kind() {
                SKind::Identity => Ok(AFactor::identity(s.j())),
                SKind::Run(1) => Ok(*u),
                SKind::Run(ell) => AFactor::new(s.j(), AKind::Run(ell)),
            })
            .collect::<Result<Vec<_>>>()?;
        ACanonical::from_factors(self.anchor.degree(), factors)
    }

    pub fn g(&self, w: &Permutation) -> Result<Permutation> {
        Ok(self.g_presentation(&s_canonical(w))?.expand())
    }

    /// `u_j` is a tail exactly when `w_j = s_j ⋯ s_1`, for every `j`.
    pub fn lift_compatible(&self, w: &Permutation) -> Result<bool> {
        let w = s_canonical(w);
        self.check_degree(&w)?;
        Ok(w.factors()
            .iter()
            .zip(self.presentation.factors())
            .all(|(s, u)| s.is_full_run() == u.is_tail()))
    }
}

pub fn g(ctx: &CoverContext, w: &Permutation) -> Result<Permutation> {
    ctx.g(w)
}

fn check_q(q: usize, degree: usize) -> Result<()> {
    if q == 0 || q > degree {
        return Err(Error::QOutOfRange { q, degree });
    }
    Ok(())
}

/// `f_q` on presentations: drop `w_1 … w_{q-1}`, rename `s_k ↦ s_{k-q+1}`
/// and delete letters below `s_q` in the remaining factors.
pub fn f_q_presentation(q: usize, w: &SCanonical) -> Result<SCanonical> {
    check_q(q, w.degree())?;
    let factors = w.factors()[q - 1..]
        .iter()
        .map(|s| {
            let j = s.j() - q + 1;
            let kind = match s.kind() {
                SKind::Identity => SKind::Identity,
                SKind::Run(ell) => SKind::Run(ell.saturating_sub(q - 1).max(1)),
            };
            SFactor::new(j, kind)
        })
        .collect::<Result<Vec<_>>>()?;
    SCanonical::from_factors(w.degree() - q + 1, factors)
}

pub fn f_q(q: usize, w: &Permutation) -> Result<Permutation> {
    Ok(f_q_presentation(q, &s_canonical(w))?.expand())
}

/// A lifting anchor `u ∈ S_{n+q-1}` with its S-canonical presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCoverContext {
    q: usize,
    anchor: Permutation,
    presentation: SCanonical,
}

impl QCoverContext {
    pub fn new(q: usize, anchor: &Permutation) -> Result<Self> {
        check_q(q, anchor.degree())?;
        Ok(QCoverContext { q, anchor: anchor.clone(), presentation: s_canonical(anchor) })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn anchor(&self) -> &Permutation {
        &self.anchor
    }

    pub fn presentation(&self) -> &SCanonical {
        &self.presentation
    }

    fn check_degree(&self, w: &SCanonical) -> Result<()> {
        if w.degree() + self.q - 1 != self.anchor.degree() {
            return Err(Error::DegreeMismatch {
                left: self.anchor.degree(),
                right: w.degree() + self.q - 1,
            });
        }
        Ok(())
    }

    /// `g_{q,u}(w) = u_1 ⋯ u_{q-1} · g_{q,u}(w_1) ⋯ g_{q,u}(w_{n-1})`.
    pub fn g_presentation(&self, w: &SCanonical) -> Result<SCanonical> {
        self.check_degree(w)?;
        let shift = self.q - 1;
        let u = self.presentation.factors();
        let mut factors = u[..shift].to_vec();
        for s in w.factors() {
            let j = s.j() + shift;
            factors.push(match s.kind() {
                SKind::Identity => SFactor::identity(j),
                SKind::Run(1) => u[j - 1],
                SKind::Run(ell) => SFactor::run(j, ell + shift)?,
            });
        }
        SCanonical::from_factors(self.anchor.degree(), factors)
    }

    pub fn g(&self, w: &Permutation) -> Result<Permutation> {
        Ok(self.g_presentation(&s_canonical(w))?.expand())
    }

    /// `w_j = s_j ⋯ s_1` forces `u_{j+q-1} = s_{j+q-1} ⋯ s_ell` with `ell ≤ q`.
    pub fn lift_compatible(&self, w: &Permutation) -> Result<bool> {
        let w = s_canonical(w);
        self.check_degree(&w)?;
        let shift = self.q - 1;
        Ok(w.factors().iter().all(|s| {
            !s.is_full_run()
                || self.presentation.factor(s.j() + shift).low().is_some_and(|ell| ell <= self.q)
        }))
    }
}

pub fn g_q(ctx: &QCoverContext, w: &Permutation) -> Result<Permutation> {
    ctx.g(w)
}
