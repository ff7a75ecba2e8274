use proptest::prelude::*;

use foata_core::bijections::{psi, psi_inverse, psi_q, psi_q_inverse};
use foata_core::canonical::{a_canonical, a_canonical_rewrite, s_canonical};
use foata_core::covering::{f, f_q};
use foata_core::foata::{phi_inverse_perm, phi_perm, rtl_phi, rtl_phi_inverse, rtl_phi_via_rev};
use foata_core::harness::{distribution, DistributionPoly};
use foata_core::patterns::{avoids_pat_q, avoids_pat_q_by_matching};
use foata_core::stats::{des_a, des_q, des_s, del_a, del_q, ell_a, ell_q, ell_s, maj_s, rmaj_a, rmaj_q, rmaj_s, rtlm};
use foata_core::{symmetric_group, Permutation};

fn perm_of(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|images| Permutation::new(images).unwrap())
}

fn even_perm_of(max: usize) -> impl Strategy<Value = Permutation> {
    (3..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|mut images| {
            let w = Permutation::new(images.clone()).unwrap();
            if !w.is_even() {
                images.swap(0, 1);
            }
            Permutation::new(images).unwrap()
        })
}

/// A permutation of degree `m` together with a `q <= m`.
fn q_perm_of(max: usize) -> impl Strategy<Value = (usize, Permutation)> {
    perm_of(max).prop_flat_map(|w| {
        let m = w.degree();
        (1..=m.min(4), Just(w))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn inverse_and_composition(w in perm_of(9)) {
        let id = Permutation::identity(w.degree());
        prop_assert_eq!(w.compose(&w.inverse()).unwrap(), id.clone());
        prop_assert_eq!(w.inverse().compose(&w).unwrap(), id);
        prop_assert_eq!(w.rev().com(), w.com().rev());
    }

    #[test]
    fn s_canonical_round_trip(w in perm_of(9)) {
        let p = s_canonical(&w);
        prop_assert_eq!(p.expand(), w.clone());
        prop_assert_eq!(p.length(), w.inversions());
        prop_assert_eq!(ell_s(&w), w.inversions());
    }

    #[test]
    fn a_canonical_round_trip(v in even_perm_of(9)) {
        let p = a_canonical(&v).unwrap();
        prop_assert_eq!(p.expand(), v.clone());
        prop_assert_eq!(a_canonical_rewrite(&v).unwrap(), p);
        prop_assert_eq!(f(&v).unwrap().degree() + 1, v.degree());
    }

    #[test]
    fn phi_carries_maj_to_length(w in perm_of(9)) {
        let image = phi_perm(&w);
        prop_assert_eq!(phi_inverse_perm(&image), w.clone());
        prop_assert_eq!(ell_s(&image), maj_s(&w));
        prop_assert_eq!(rtlm(&image), rtlm(&w));
        prop_assert_eq!(des_s(&image.inverse()), des_s(&w.inverse()));
    }

    #[test]
    fn rtl_phi_carries_rmaj_to_length(w in perm_of(9)) {
        let image = rtl_phi(&w);
        prop_assert_eq!(rtl_phi_via_rev(&w), image.clone());
        prop_assert_eq!(rtl_phi_inverse(&image), w.clone());
        prop_assert_eq!(ell_s(&image), rmaj_s(&w));
    }

    #[test]
    fn psi_theorem_pointwise(v in even_perm_of(9)) {
        let p = psi(&v).unwrap();
        prop_assert!(p.is_even());
        prop_assert_eq!(psi_inverse(&p).unwrap(), v.clone());
        prop_assert_eq!(ell_a(&p).unwrap(), rmaj_a(&v).unwrap());
        prop_assert_eq!(des_a(&p.inverse()).unwrap(), des_a(&v.inverse()).unwrap());
        prop_assert_eq!(del_a(&p.inverse()).unwrap(), del_a(&v.inverse()).unwrap());
        prop_assert_eq!(f(&p).unwrap(), rtl_phi(&f(&v).unwrap()));
    }

    #[test]
    fn psi_q_theorem_pointwise((q, v) in q_perm_of(9)) {
        let p = psi_q(q, &v).unwrap();
        prop_assert_eq!(psi_q_inverse(q, &p).unwrap(), v.clone());
        prop_assert_eq!(ell_q(q, &p).unwrap(), rmaj_q(q, &v).unwrap());
        prop_assert_eq!(des_q(q, &p.inverse()).unwrap(), des_q(q, &v.inverse()).unwrap());
        prop_assert_eq!(del_q(q, &p.inverse()).unwrap(), del_q(q, &v.inverse()).unwrap());
        prop_assert_eq!(f_q(q, &p).unwrap(), rtl_phi(&f_q(q, &v).unwrap()));
        if q == 1 {
            prop_assert_eq!(p, rtl_phi(&v));
        }
    }

    #[test]
    fn avoidance_criterion_matches_matcher((q, w) in q_perm_of(8)) {
        prop_assert_eq!(avoids_pat_q(q, &w), avoids_pat_q_by_matching(q, &w));
        // Pat(q + 1) patterns are longer, so avoidance is monotone in q
        if avoids_pat_q(q, &w) {
            prop_assert!(avoids_pat_q(q + 1, &w));
        }
    }

    #[test]
    fn distribution_merge_is_partition_invariant(n in 1usize..=6, cuts in prop::collection::vec(any::<prop::sample::Index>(), 0..4)) {
        let population = symmetric_group(n);
        let whole = distribution(&population, maj_s, |_| true);
        let mut points: Vec<usize> = cuts.iter().map(|c| c.index(population.len() + 1)).collect();
        points.extend([0, population.len()]);
        points.sort_unstable();
        let merged = points
            .windows(2)
            .map(|pair| distribution(&population[pair[0]..pair[1]], maj_s, |_| true))
            .fold(DistributionPoly::new(), DistributionPoly::merge);
        prop_assert_eq!(merged.total(), population.len() as u64);
        prop_assert_eq!(merged, whole);
    }
}
