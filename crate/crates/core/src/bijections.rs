//! The bijections `Ψ = g_v ∘ rtlΦ ∘ f` on `A_{n+1}` and
//! `Ψ_q = g_{q,v} ∘ rtlΦ ∘ f_q` on `S_{n+q-1}`, with their inverses.
//!
//! The lift anchor is the argument itself. Each evaluation checks that the
//! lift is compatible and reports [`Error::Invariant`] otherwise.

use serde::Serialize;

use crate::canonical::{s_canonical, SCanonical};
use crate::covering::{f_presentation, f_q_presentation, CoverContext, QCoverContext};
use crate::error::{Error, Result};
use crate::foata::{rtl_phi, rtl_phi_inverse};
use crate::perm::Permutation;

/// Every stage of one `Ψ` / `Ψ_q` evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiTrace {
    pub input: Permutation,
    /// `q` for `Ψ_q`, absent for `Ψ`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    pub inverse: bool,
    /// A-canonical (for `Ψ`) or S-canonical (for `Ψ_q`) form of the input.
    pub input_presentation: String,
    pub f_image: Permutation,
    pub rtl_phi_image: Permutation,
    pub s_presentation_of_image: String,
    pub lifted_presentation: String,
    pub output: Permutation,
}

fn psi_impl(v: &Permutation, inverse: bool) -> Result<PsiTrace> {
    let ctx = CoverContext::new(v)?;
    let f_image = f_presentation(ctx.presentation()).expand();
    let rtl_phi_image = if inverse { rtl_phi_inverse(&f_image) } else { rtl_phi(&f_image) };
    let image_form = s_canonical(&rtl_phi_image);
    if !ctx.lift_compatible(&rtl_phi_image)? {
        return Err(Error::Invariant(format!(
            "anchor {v} is not lift-compatible with {rtl_phi_image}"
        )));
    }
    let lifted = ctx.g_presentation(&image_form)?;
    let output = lifted.expand();
    Ok(PsiTrace {
        input: v.clone(),
        q: None,
        inverse,
        input_presentation: ctx.presentation().to_string(),
        f_image,
        rtl_phi_image,
        s_presentation_of_image: image_form.to_string(),
        lifted_presentation: lifted.to_string(),
        output,
    })
}

pub fn psi_trace(v: &Permutation) -> Result<PsiTrace> {
    psi_impl(v, false)
}

pub fn psi_inverse_trace(p: &Permutation) -> Result<PsiTrace> {
    psi_impl(p, true)
}

pub fn psi(v: &Permutation) -> Result<Permutation> {
    Ok(psi_impl(v, false)?.output)
}

/// `π ↦ g_π(rtlΦ^{-1}(f(π)))`.
pub fn psi_inverse(p: &Permutation) -> Result<Permutation> {
    Ok(psi_impl(p, true)?.output)
}

fn psi_q_impl(q: usize, v: &Permutation, inverse: bool) -> Result<PsiTrace> {
    let ctx = QCoverContext::new(q, v)?;
    let f_image = f_q_presentation(q, ctx.presentation())?.expand();
    let rtl_phi_image = if inverse { rtl_phi_inverse(&f_image) } else { rtl_phi(&f_image) };
    let image_form: SCanonical = s_canonical(&rtl_phi_image);
    if !ctx.lift_compatible(&rtl_phi_image)? {
        return Err(Error::Invariant(format!(
            "anchor {v} is not lift-compatible with {rtl_phi_image} at q = {q}"
        )));
    }
    let lifted = ctx.g_presentation(&image_form)?;
    let output = lifted.expand();
    Ok(PsiTrace {
        input: v.clone(),
        q: Some(q),
        inverse,
        input_presentation: ctx.presentation().to_string(),
        f_image,
        rtl_phi_image,
        s_presentation_of_image: image_form.to_string(),
        lifted_presentation: lifted.to_string(),
        output,
    })
}

pub fn psi_q_trace(q: usize, v: &Permutation) -> Result<PsiTrace> {
    psi_q_impl(q, v, false)
}

pub fn psi_q_inverse_trace(q: usize, p: &Permutation) -> Result<PsiTrace> {
    psi_q_impl(q, p, true)
}

pub fn psi_q(q: usize, v: &Permutation) -> Result<Permutation> {
    Ok(psi_q_impl(q, v, false)?.output)
}

/// `π ↦ g_{q,π}(rtlΦ^{-1}(f_q(π)))`.
pub fn psi_q_inverse(q: usize, p: &Permutation) -> Result<Permutation> {
    Ok(psi_q_impl(q, p, true)?.output)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::f;
    use crate::perm::{alternating_group, symmetric_group};
    use crate::stats::{ell_a, rmaj_a};

    fn p(text: &str) -> Permutation {
        text.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let v = p("6 4 3 7 5 2 1");
        let t = psi_trace(&v).unwrap();
        assert_eq!(t.f_image, p("5 3 6 4 2 1"));
        assert_eq!(t.rtl_phi_image, p("5 6 3 2 1 4"));
        assert_eq!(t.output, p("4 6 7 3 2 1 5"));
        assert_eq!(t.lifted_presentation, "(a_1)(a_2 a_1^-1)(1)(a_4 a_3 a_2 a_1)(a_5 a_4 a_3 a_2)");
        assert_eq!(ell_a(&t.output).unwrap(), 11);
        assert_eq!(rmaj_a(&v).unwrap(), 11);
        assert_eq!(psi_inverse(&p("4 6 7 3 2 1 5")).unwrap(), v);
    }

    #[test]
    fn identity_is_fixed() {
        for m in 2..=6 {
            let e = Permutation::identity(m);
            assert_eq!(psi(&e).unwrap(), e);
            assert_eq!(psi_inverse(&e).unwrap(), e);
            for q in 1..=m.min(3) {
                assert_eq!(psi_q(q, &e).unwrap(), e);
                assert_eq!(psi_q_inverse(q, &e).unwrap(), e);
            }
        }
        let t = psi_trace(&Permutation::identity(5)).unwrap();
        assert!(t.f_image.is_identity() && t.rtl_phi_image.is_identity() && t.output.is_identity());
    }

    #[test]
    fn errors() {
        assert!(matches!(psi(&p("2 1 3")), Err(Error::OddPermutation(_))));
        assert!(matches!(psi_q(4, &p("2 1 3")), Err(Error::QOutOfRange { .. })));
        assert!(matches!(psi_q(0, &p("2 1 3")), Err(Error::QOutOfRange { .. })));
    }

    #[test]
    fn psi_round_trips_and_intertwines_f() {
        for m in 3..=6 {
            for v in alternating_group(m) {
                let out = psi(&v).unwrap();
                assert!(out.is_even());
                assert_eq!(psi_inverse(&out).unwrap(), v);
                assert_eq!(psi(&psi_inverse(&v).unwrap()).unwrap(), v);
                assert_eq!(f(&out).unwrap(), rtl_phi(&f(&v).unwrap()));
            }
        }
    }

    #[test]
    fn psi_one_is_rtl_phi() {
        for w in symmetric_group(6) {
            assert_eq!(psi_q(1, &w).unwrap(), rtl_phi(&w));
            assert_eq!(psi_q_inverse(1, &w).unwrap(), rtl_phi_inverse(&w));
        }
    }

    #[test]
    fn psi_q_round_trips() {
        for q in 1..=3 {
            for v in symmetric_group(6) {
                let out = psi_q(q, &v).unwrap();
                assert_eq!(psi_q_inverse(q, &out).unwrap(), v);
            }
        }
    }

    #[test]
    fn trace_serializes() {
        let t = psi_q_trace(2, &p("3 1 2 5 4")).unwrap();
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["q"], 2);
        assert!(json["output"]["images"].is_array());
    }
}
