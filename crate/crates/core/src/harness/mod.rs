//! Exhaustive verification: distribution tables, theorem checkers, the lemma
//! suite and oracle equivalences.
//!
//! Populations are enumerated in lexicographic order and split across rayon
//! workers. Results are merged additively or by first failure in enumeration
//! order, so every report is the same for any number of threads.

mod checks;
mod lemmas;
mod poly;
mod report;
mod table;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::stats::PosSet;

pub use checks::{
    check_a_eq, check_foata, check_macmahon, check_psi_q_theorem, check_psi_theorem, check_qst1,
    check_qst2, subsets,
};
pub use lemmas::{
    check_a_canonical_oracle, check_avoidance_oracle, check_canonical_uniqueness,
    check_lemma_suite, find_lemma, lemmas, Domain, Lemma,
};
pub use poly::{distribution, DistributionPoly};
pub use report::{expect_eq, Counterexample, StatValue, Status, VerifyReport};
pub use table::{stat_value, table, Filter, Group, Statistic};

/// Largest degree enumerated by default.
pub const DEFAULT_CAP: usize = 8;
/// Largest degree enumerated with [`Options::slow`].
pub const SLOW_CAP: usize = 9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Raise the degree cap from [`DEFAULT_CAP`] to [`SLOW_CAP`].
    pub slow: bool,
}

impl Options {
    pub fn cap(&self) -> usize {
        if self.slow {
            SLOW_CAP
        } else {
            DEFAULT_CAP
        }
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.cap() {
            return Err(Error::ResourceCap { degree, cap: self.cap() });
        }
        Ok(())
    }
}

/// A property of one element; the second argument is `q` where relevant.
pub(crate) type ElementCheck = fn(&Permutation, usize) -> Result<Option<Counterexample>>;

/// First element (in population order) for which `check` fails or errors.
pub(crate) fn first_failure<F>(population: &[Permutation], check: F) -> Option<Counterexample>
where
    F: Fn(&Permutation) -> Result<Option<Counterexample>> + Sync,
{
    population.par_iter().find_map_first(|w| match check(w) {
        Ok(None) => None,
        Ok(Some(c)) => Some(c.at(w)),
        Err(e) => Some(Counterexample::from_error(&e).at(w)),
    })
}

/// A verification run, as named on the command line. Absent sets are swept
/// over every admissible value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "theorem", rename_all = "kebab-case")]
pub enum Request {
    AEq { n: usize, d1: Option<PosSet>, d2: Option<PosSet> },
    Psi { n: usize },
    PsiQ { n: usize, q: usize },
    Qst1 { n: usize, q: usize, b1: Option<PosSet>, b2: Option<PosSet> },
    Qst2 { n: usize, q: usize, b: Option<PosSet> },
    Foata { n: usize },
    Macmahon { n: usize },
    Lemmas { n_cap: usize, q_cap: usize },
}

impl Request {
    pub fn run(&self, opts: &Options) -> Result<Vec<VerifyReport>> {
        let one = |r: Result<VerifyReport>| r.map(|r| vec![r]);
        match self {
            Request::AEq { n, d1, d2 } => one(check_a_eq(*n, d1.as_ref(), d2.as_ref(), opts)),
            Request::Psi { n } => one(check_psi_theorem(*n, opts)),
            Request::PsiQ { n, q } => one(check_psi_q_theorem(*n, *q, opts)),
            Request::Qst1 { n, q, b1, b2 } => one(check_qst1(*n, *q, b1.as_ref(), b2.as_ref(), opts)),
            Request::Qst2 { n, q, b } => one(check_qst2(*n, *q, b.as_ref(), opts)),
            Request::Foata { n } => one(check_foata(*n, opts)),
            Request::Macmahon { n } => one(check_macmahon(*n, opts)),
            Request::Lemmas { n_cap, q_cap } => check_lemma_suite(*n_cap, *q_cap, opts),
        }
    }

    /// Reconstructs the request that produced `report`.
    pub fn from_report(report: &VerifyReport) -> Result<Request> {
        let mut params = report.params.clone();
        let tag = if report.theorem.starts_with("lemma:") { "lemmas" } else { report.theorem.as_str() };
        let object = params
            .as_object_mut()
            .ok_or_else(|| Error::MalformedToken(report.params.to_string()))?;
        object.insert("theorem".into(), Value::from(tag));
        serde_json::from_value(params).map_err(|e| Error::MalformedToken(e.to_string()))
    }
}

fn element_check(theorem: &str) -> Option<ElementCheck> {
    match theorem {
        "psi" => Some(checks::psi_element),
        "psi-q" => Some(checks::psi_q_element),
        "foata" => Some(checks::foata_element),
        name => name.strip_prefix("lemma:").and_then(find_lemma).map(|l| l.check),
    }
}

/// Whether the failure recorded in `report` reproduces. A counterexample
/// local to one element is re-evaluated on that element alone; any other
/// failure is reproduced by rerunning the request.
pub fn recheck(report: &VerifyReport, opts: &Options) -> Result<bool> {
    let Some(c) = &report.counterexample else { return Ok(false) };
    if let (Some(w), Some(check)) = (&c.permutation, element_check(&report.theorem)) {
        let q = c
            .q
            .or_else(|| report.params.get("q").and_then(Value::as_u64).map(|q| q as usize))
            .unwrap_or(0);
        return Ok(!matches!(check(w, q), Ok(None)));
    }
    let reports = Request::from_report(report)?.run(opts)?;
    Ok(reports
        .iter()
        .any(|r| r.theorem == report.theorem && r.counterexample == report.counterexample))
}
