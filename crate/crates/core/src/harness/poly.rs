use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::perm::Permutation;

/// Generating polynomial `Σ t^{stat(σ)}` stored as exact coefficient counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DistributionPoly {
    coeffs: BTreeMap<usize, u64>,
}

impl DistributionPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: usize) {
        self.add_count(value, 1);
    }

    pub fn add_count(&mut self, value: usize, count: u64) {
        if count > 0 {
            *self.coeffs.entry(value).or_default() += count;
        }
    }

    /// Coefficient-wise sum, the merge step for partitioned populations.
    pub fn merge(mut self, other: DistributionPoly) -> DistributionPoly {
        for (value, count) in other.coeffs {
            self.add_count(value, count);
        }
        self
    }

    pub fn coeff(&self, value: usize) -> u64 {
        self.coeffs.get(&value).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, u64> {
        &self.coeffs
    }

    /// Number of elements counted.
    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest exponent whose coefficients differ, with both coefficients.
    pub fn first_difference(&self, other: &DistributionPoly) -> Option<(usize, u64, u64)> {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .filter(|&k| self.coeff(k) != other.coeff(k))
            .min()
            .map(|k| (k, self.coeff(k), other.coeff(k)))
    }

    /// `value,count` lines under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,count\n");
        for (value, count) in &self.coeffs {
            out.push_str(&format!("{value},{count}\n"));
        }
        out
    }
}

impl FromIterator<usize> for DistributionPoly {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut poly = DistributionPoly::new();
        for value in iter {
            poly.add(value);
        }
        poly
    }
}

/// Renders as `1 + 2t + 2t^2 + t^3`; the empty polynomial is `0`.
impl fmt::Display for DistributionPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&e, &c)| match (e, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (e, 1) => format!("t^{e}"),
                (e, c) => format!("{c}t^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `coeffs[v] = #{σ ∈ population : filter(σ), stat(σ) = v}`.
///
/// Slices of the population are counted in parallel and merged additively,
/// so the result does not depend on the number of workers.
pub fn distribution<S, F>(population: &[Permutation], stat: S, filter: F) -> DistributionPoly
where
    S: Fn(&Permutation) -> usize + Sync,
    F: Fn(&Permutation) -> bool + Sync,
{
    population
        .par_iter()
        .filter(|w| filter(w))
        .fold(DistributionPoly::new, |mut poly, w| {
            poly.add(stat(w));
            poly
        })
        .reduce(DistributionPoly::new, DistributionPoly::merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::symmetric_group;
    use crate::stats::{ell_s, maj_s};

    #[test]
    fn length_on_s3() {
        let poly = distribution(&symmetric_group(3), ell_s, |_| true);
        let expected: BTreeMap<usize, u64> = [(0, 1), (1, 2), (2, 2), (3, 1)].into();
        assert_eq!(poly.coeffs(), &expected);
        assert_eq!(poly.total(), 6);
        assert_eq!(poly.to_string(), "1 + 2t + 2t^2 + t^3");
        assert_eq!(poly.degree(), Some(3));
    }

    #[test]
    fn empty_filter_gives_zero() {
        let poly = distribution(&symmetric_group(4), ell_s, |_| false);
        assert!(poly.is_empty());
        assert_eq!(poly.to_string(), "0");
        assert_eq!(poly.degree(), None);
    }

    #[test]
    fn macmahon_small() {
        for n in 1..=6 {
            let group = symmetric_group(n);
            assert_eq!(distribution(&group, maj_s, |_| true), distribution(&group, ell_s, |_| true));
        }
    }

    #[test]
    fn merge_and_difference() {
        let a: DistributionPoly = [0, 1, 1].into_iter().collect();
        let b: DistributionPoly = [1, 2].into_iter().collect();
        let sum = a.clone().merge(b.clone());
        assert_eq!(sum.coeff(1), 3);
        assert_eq!(sum.total(), 5);
        assert_eq!(a.first_difference(&b), Some((0, 1, 0)));
        assert_eq!(a.first_difference(&a), None);
        assert_eq!(sum.to_csv(), "value,count\n0,1\n1,3\n2,1\n");
    }

    #[test]
    fn json_round_trip() {
        let a: DistributionPoly = [0, 2, 2].into_iter().collect();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"0":1,"2":2}"#);
        assert_eq!(serde_json::from_str::<DistributionPoly>(&json).unwrap(), a);
    }
}
