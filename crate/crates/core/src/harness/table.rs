use std::fmt;
use std::str::FromStr;

use super::poly::{distribution, DistributionPoly};
use super::Options;
use crate::error::{Error, Result};
use crate::perm::{alternating_group, symmetric_group, Permutation};
use crate::stats::{del_a, del_s, des_a, des_s, ell_a, ell_s, maj_s, rmaj_a, rmaj_s, PosSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    /// `S_n`.
    S,
    /// `A_{n+1}`.
    A,
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s" | "S" => Ok(Group::S),
            "a" | "A" => Ok(Group::A),
            _ => Err(Error::MalformedToken(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    Ell,
    Inv,
    Maj,
    Rmaj,
    /// Number of descents.
    Des,
    /// Number of delents.
    Del,
}

impl Statistic {
    pub const NAMES: [&'static str; 6] = ["ell", "inv", "maj", "rmaj", "des", "del"];
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ell" | "length" => Statistic::Ell,
            "inv" => Statistic::Inv,
            "maj" => Statistic::Maj,
            "rmaj" => Statistic::Rmaj,
            "des" => Statistic::Des,
            "del" => Statistic::Del,
            _ => return Err(Error::MalformedToken(s.to_string())),
        })
    }
}

/// Restriction on the inverse's descent or delent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    DesInvSubset(PosSet),
    DelInvSubset(PosSet),
    DesInvEquals(PosSet),
    DelInvEquals(PosSet),
}

/// Parses `des-inv-sub:1,2`, `del-inv-eq:` (empty set) and the like.
impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, list) = s.split_once(':').ok_or_else(|| Error::MalformedToken(s.to_string()))?;
        let set = list
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::MalformedToken(t.to_string())))
            .collect::<Result<PosSet>>()?;
        Ok(match kind {
            "des-inv-sub" => Filter::DesInvSubset(set),
            "del-inv-sub" => Filter::DelInvSubset(set),
            "des-inv-eq" => Filter::DesInvEquals(set),
            "del-inv-eq" => Filter::DelInvEquals(set),
            _ => return Err(Error::MalformedToken(kind.to_string())),
        })
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, set) = match self {
            Filter::DesInvSubset(s) => ("des-inv-sub", s),
            Filter::DelInvSubset(s) => ("del-inv-sub", s),
            Filter::DesInvEquals(s) => ("des-inv-eq", s),
            Filter::DelInvEquals(s) => ("del-inv-eq", s),
        };
        let list: Vec<String> = set.iter().map(ToString::to_string).collect();
        write!(f, "{kind}:{}", list.join(","))
    }
}

fn descents(group: Group, w: &Permutation) -> Result<PosSet> {
    match group {
        Group::S => Ok(des_s(w)),
        Group::A => des_a(w),
    }
}

fn delents(group: Group, w: &Permutation) -> Result<PosSet> {
    match group {
        Group::S => Ok(del_s(w)),
        Group::A => del_a(w),
    }
}

pub fn stat_value(group: Group, stat: Statistic, w: &Permutation) -> Result<usize> {
    Ok(match (group, stat) {
        (_, Statistic::Inv) => w.inversions(),
        (Group::S, Statistic::Ell) => ell_s(w),
        (Group::A, Statistic::Ell) => ell_a(w)?,
        (Group::S, Statistic::Maj) => maj_s(w),
        (Group::A, Statistic::Maj) => des_a(w)?.iter().sum(),
        (Group::S, Statistic::Rmaj) => rmaj_s(w),
        (Group::A, Statistic::Rmaj) => rmaj_a(w)?,
        (_, Statistic::Des) => descents(group, w)?.len(),
        (_, Statistic::Del) => delents(group, w)?.len(),
    })
}

fn keep(group: Group, filters: &[Filter], w: &Permutation) -> Result<bool> {
    let inv = w.inverse();
    for filter in filters {
        let ok = match filter {
            Filter::DesInvSubset(s) => descents(group, &inv)?.is_subset(s),
            Filter::DelInvSubset(s) => delents(group, &inv)?.is_subset(s),
            Filter::DesInvEquals(s) => &descents(group, &inv)? == s,
            Filter::DelInvEquals(s) => &delents(group, &inv)? == s,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Distribution of `stat` over `S_n` or `A_{n+1}` restricted by `filters`.
pub fn table(group: Group, stat: Statistic, n: usize, filters: &[Filter], opts: &Options) -> Result<DistributionPoly> {
    let population = match group {
        Group::S => {
            if n == 0 {
                return Err(Error::Empty);
            }
            opts.check_degree(n)?;
            symmetric_group(n)
        }
        Group::A => {
            if n < 1 {
                return Err(Error::DegreeTooSmall { degree: n + 1, min: 2 });
            }
            opts.check_degree(n + 1)?;
            alternating_group(n + 1)
        }
    };
    // surface evaluation errors before the infallible parallel pass
    if let Some(w) = population.first() {
        stat_value(group, stat, w)?;
        keep(group, filters, w)?;
    }
    Ok(distribution(
        &population,
        |w| stat_value(group, stat, w).unwrap_or(0),
        |w| keep(group, filters, w).unwrap_or(false),
    ))
}
