//! Canonical presentations of `S_n` (Coxeter generators `s_i`) and of
//! `A_{n+1}` (generators `a_i = s_1 s_{i+1}`).
//!
//! Every `w ∈ S_n` factors uniquely as `w_1 ⋯ w_{n-1}` with
//! `w_j ∈ {1, s_j, s_j s_{j-1}, …, s_j ⋯ s_1}`, and every `v ∈ A_{n+1}` as
//! `v_1 ⋯ v_{n-1}` with
//! `v_j ∈ {1, a_j, a_j a_{j-1}, …, a_j ⋯ a_2, a_j ⋯ a_2 a_1, a_j ⋯ a_2 a_1^{-1}}`.
//! Factors are stored for every `j`, identities included, so `factor(j)` is a
//! plain index.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SKind {
    Identity,
    /// `s_j s_{j-1} ⋯ s_ell`
    Run(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "FactorRecord", try_from = "FactorRecord")]
pub struct SFactor {
    j: usize,
    kind: SKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = Error;

    fn try_from(v: i8) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidFactor(format!("sign must be ±1, got {other}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AKind {
    Identity,
    /// `a_j ⋯ a_ell` with `ell ≥ 2`
    Run(usize),
    /// `a_j ⋯ a_2 a_1^{±1}`
    Tail(Sign),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "FactorRecord", try_from = "FactorRecord")]
pub struct AFactor {
    j: usize,
    kind: AKind,
}

/// Wire form shared by both factor types.
#[derive(Serialize, Deserialize)]
struct FactorRecord {
    j: usize,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ell: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sign: Option<Sign>,
}

impl From<SFactor> for FactorRecord {
    fn from(f: SFactor) -> Self {
        match f.kind {
            SKind::Identity => FactorRecord { j: f.j, kind: "identity".into(), ell: None, sign: None },
            SKind::Run(ell) => FactorRecord { j: f.j, kind: "run".into(), ell: Some(ell), sign: None },
        }
    }
}

impl TryFrom<FactorRecord> for SFactor {
    type Error = Error;

    fn try_from(r: FactorRecord) -> Result<Self> {
        match (r.kind.as_str(), r.ell) {
            ("identity", None) => SFactor::new(r.j, SKind::Identity),
            ("run", Some(ell)) => SFactor::new(r.j, SKind::Run(ell)),
            _ => Err(Error::InvalidFactor(format!("not an S-factor: kind `{}`", r.kind))),
        }
    }
}

impl From<AFactor> for FactorRecord {
    fn from(f: AFactor) -> Self {
        let (kind, ell, sign) = match f.kind {
            AKind::Identity => ("identity", None, None),
            AKind::Run(ell) => ("run", Some(ell), None),
            AKind::Tail(s) => ("tail", None, Some(s)),
        };
        FactorRecord { j: f.j, kind: kind.into(), ell, sign }
    }
}

impl TryFrom<FactorRecord> for AFactor {
    type Error = Error;

    fn try_from(r: FactorRecord) -> Result<Self> {
        match (r.kind.as_str(), r.ell, r.sign) {
            ("identity", None, None) => AFactor::new(r.j, AKind::Identity),
            ("run", Some(ell), None) => AFactor::new(r.j, AKind::Run(ell)),
            ("tail", None, Some(s)) => AFactor::new(r.j, AKind::Tail(s)),
            _ => Err(Error::InvalidFactor(format!("not an A-factor: kind `{}`", r.kind))),
        }
    }
}

impl SFactor {
    pub fn new(j: usize, kind: SKind) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidFactor("factor index must be positive".into()));
        }
        if let SKind::Run(ell) = kind {
            if ell == 0 || ell > j {
                return Err(Error::InvalidFactor(format!("s-run must satisfy 1 <= {ell} <= {j}")));
            }
        }
        Ok(SFactor { j, kind })
    }

    pub fn identity(j: usize) -> Self {
        SFactor { j, kind: SKind::Identity }
    }

    pub fn run(j: usize, ell: usize) -> Result<Self> {
        SFactor::new(j, SKind::Run(ell))
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn kind(&self) -> SKind {
        self.kind
    }

    pub fn is_identity(&self) -> bool {
        self.kind == SKind::Identity
    }

    /// True for the full staircase `s_j ⋯ s_1`.
    pub fn is_full_run(&self) -> bool {
        self.kind == SKind::Run(1)
    }

    /// Lowest generator index, `None` for the identity.
    pub fn low(&self) -> Option<usize> {
        match self.kind {
            SKind::Identity => None,
            SKind::Run(ell) => Some(ell),
        }
    }

    pub fn len(&self) -> usize {
        self.low().map_or(0, |ell| self.j - ell + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Generator indices in word order: `j, j-1, …, ell`.
    pub fn letters(&self) -> impl Iterator<Item = usize> {
        let j = self.j;
        let ell = self.low().unwrap_or(j + 1);
        (ell..=j).rev()
    }

    /// Number of letters `s_k` with `k ≥ q`.
    pub fn count_from(&self, q: usize) -> usize {
        match self.low() {
            None => 0,
            Some(ell) => (self.j + 1).saturating_sub(ell.max(q)),
        }
    }

    fn apply_right(&self, p: &mut Permutation) {
        for k in self.letters() {
            p.swap_positions(k);
        }
    }
}

impl fmt::Display for SFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("(1)");
        }
        write!(f, "({})", self.letters().map(|k| format!("s_{k}")).join(" "))
    }
}

impl AFactor {
    pub fn new(j: usize, kind: AKind) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidFactor("factor index must be positive".into()));
        }
        if let AKind::Run(ell) = kind {
            if ell < 2 || ell > j {
                return Err(Error::InvalidFactor(format!("a-run must satisfy 2 <= {ell} <= {j}")));
            }
        }
        Ok(AFactor { j, kind })
    }

    pub fn identity(j: usize) -> Self {
        AFactor { j, kind: AKind::Identity }
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn kind(&self) -> AKind {
        self.kind
    }

    pub fn is_identity(&self) -> bool {
        self.kind == AKind::Identity
    }

    pub fn is_tail(&self) -> bool {
        matches!(self.kind, AKind::Tail(_))
    }

    /// Generator count; `a_1^{-1}` counts as one.
    pub fn len(&self) -> usize {
        match self.kind {
            AKind::Identity => 0,
            AKind::Run(ell) => self.j - ell + 1,
            AKind::Tail(_) => self.j,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn generators(&self) -> Vec<Generator> {
        match self.kind {
            AKind::Identity => Vec::new(),
            AKind::Run(ell) => (ell..=self.j).rev().map(Generator::A).collect(),
            AKind::Tail(sign) => {
                let mut g: Vec<_> = (2..=self.j).rev().map(Generator::A).collect();
                g.push(match sign {
                    Sign::Plus => Generator::A(1),
                    Sign::Minus => Generator::AInv(1),
                });
                g
            }
        }
    }

    fn apply_right(&self, p: &mut Permutation) {
        for g in self.generators() {
            for k in g.s_letters() {
                p.swap_positions(k);
            }
        }
    }
}

impl fmt::Display for AFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("(1)");
        }
        write!(f, "({})", self.generators().iter().map(Generator::to_string).join(" "))
    }
}

/// S-canonical presentation of a permutation of degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SCanonical {
    degree: usize,
    factors: Vec<SFactor>,
}

impl SCanonical {
    /// `factors[j-1]` must carry index `j` for `j = 1..degree-1`.
    pub fn from_factors(degree: usize, factors: Vec<SFactor>) -> Result<Self> {
        check_indices(degree, factors.len(), factors.iter().map(SFactor::j))?;
        Ok(SCanonical { degree, factors })
    }

    pub fn identity(degree: usize) -> Self {
        SCanonical { degree, factors: (1..degree).map(SFactor::identity).collect() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factors(&self) -> &[SFactor] {
        &self.factors
    }

    /// `w_j`, 1-based.
    pub fn factor(&self, j: usize) -> &SFactor {
        &self.factors[j - 1]
    }

    /// Total number of generators.
    pub fn length(&self) -> usize {
        self.factors.iter().map(SFactor::len).sum()
    }

    /// Generators `s_k` with `k ≥ q`.
    pub fn length_from(&self, q: usize) -> usize {
        self.factors.iter().map(|f| f.count_from(q)).sum()
    }

    /// The flat word `s_{i_1} ⋯ s_{i_r}`.
    pub fn letters(&self) -> Vec<usize> {
        self.factors.iter().flat_map(SFactor::letters).collect()
    }

    pub fn expand(&self) -> Permutation {
        let mut p = Permutation::identity(self.degree);
        for f in &self.factors {
            f.apply_right(&mut p);
        }
        p
    }

    /// Omits identity factors.
    pub fn display_compact(&self) -> String {
        let s: String = self.factors.iter().filter(|f| !f.is_identity()).join("");
        if s.is_empty() {
            "(1)".into()
        } else {
            s
        }
    }
}

impl fmt::Display for SCanonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("(1)");
        }
        f.write_str(&self.factors.iter().join(""))
    }
}

/// A-canonical presentation of an even permutation of degree `degree = n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ACanonical {
    degree: usize,
    factors: Vec<AFactor>,
}

impl ACanonical {
    /// `factors[j-1]` must carry index `j` for `j = 1..degree-2`.
    pub fn from_factors(degree: usize, factors: Vec<AFactor>) -> Result<Self> {
        if degree < 2 {
            return Err(Error::DegreeTooSmall { degree, min: 2 });
        }
        check_indices(degree - 1, factors.len(), factors.iter().map(AFactor::j))?;
        Ok(ACanonical { degree, factors })
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 2, "alternating presentations need degree >= 2");
        ACanonical { degree, factors: (1..degree - 1).map(AFactor::identity).collect() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factors(&self) -> &[AFactor] {
        &self.factors
    }

    pub fn factor(&self, j: usize) -> &AFactor {
        &self.factors[j - 1]
    }

    pub fn length(&self) -> usize {
        self.factors.iter().map(AFactor::len).sum()
    }

    pub fn expand(&self) -> Permutation {
        let mut p = Permutation::identity(self.degree);
        for f in &self.factors {
            f.apply_right(&mut p);
        }
        p
    }

    pub fn display_compact(&self) -> String {
        let s: String = self.factors.iter().filter(|f| !f.is_identity()).join("");
        if s.is_empty() {
            "(1)".into()
        } else {
            s
        }
    }
}

impl fmt::Display for ACanonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("(1)");
        }
        f.write_str(&self.factors.iter().join(""))
    }
}

fn check_indices(degree: usize, len: usize, js: impl Iterator<Item = usize>) -> Result<()> {
    if degree == 0 || len != degree - 1 {
        return Err(Error::InvalidFactor(format!(
            "expected {} factors, got {len}",
            degree.saturating_sub(1)
        )));
    }
    for (expected, j) in (1..).zip(js) {
        if j != expected {
            return Err(Error::InvalidFactor(format!("factor {expected} carries index {j}")));
        }
    }
    Ok(())
}

/// S-procedure: repeatedly pull the largest remaining value to its place on
/// the right, recording the staircase that moved it.
pub fn s_canonical(w: &Permutation) -> SCanonical {
    let n = w.degree();
    let mut cur = w.images().to_vec();
    let mut factors = vec![SFactor::identity(1); n.saturating_sub(1)];
    for j in (1..n).rev() {
        let value = j + 1;
        let r = cur[..=j].iter().position(|&v| v == value).expect("value present") + 1;
        factors[j - 1] = if r == value {
            SFactor::identity(j)
        } else {
            // cur * s_r s_{r+1} ⋯ s_j moves `value` from position r to j + 1
            cur[r - 1..=j].rotate_left(1);
            SFactor { j, kind: SKind::Run(r) }
        };
    }
    SCanonical { degree: n, factors }
}

pub fn expand_s(p: &SCanonical) -> Permutation {
    p.expand()
}

/// A-canonical presentation by top-down peeling: for `j = n-1, …, 1` pick the
/// unique `u_j ∈ R^A_j` for which `cur * u_j^{-1}` fixes `j + 2`.
pub fn a_canonical(v: &Permutation) -> Result<ACanonical> {
    let degree = v.degree();
    if degree < 2 {
        return Err(Error::DegreeTooSmall { degree, min: 2 });
    }
    if !v.is_even() {
        return Err(Error::OddPermutation(v.to_string()));
    }
    let n = degree - 1;
    let mut cur = v.clone();
    let mut factors = vec![AFactor::identity(1); n - 1];
    for j in (1..n).rev() {
        let target = j + 2;
        let p = cur.position_of(target);
        let (u, u_perm) = enumerate_r_a(j)
            .into_iter()
            .map(|f| {
                let mut e = Permutation::identity(degree);
                f.apply_right(&mut e);
                (f, e)
            })
            .find(|(_, e)| e.image(p) == target)
            .ok_or_else(|| Error::Invariant(format!("no R^A_{j} factor moves {p} to {target}")))?;
        cur = cur.compose(&u_perm.inverse())?;
        factors[j - 1] = u;
    }
    if !cur.is_identity() {
        return Err(Error::Invariant(format!("peeling {v} left remainder {cur}")));
    }
    Ok(ACanonical { degree, factors })
}

/// The three-step rewriting: take the S-canonical word, pair consecutive
/// letters, insert `s_1 s_1` inside each pair, and regroup into `a`-factors.
/// Independent of [`a_canonical`]; used to cross-check it.
pub fn a_canonical_rewrite(v: &Permutation) -> Result<ACanonical> {
    let degree = v.degree();
    if degree < 2 {
        return Err(Error::DegreeTooSmall { degree, min: 2 });
    }
    if !v.is_even() {
        return Err(Error::OddPermutation(v.to_string()));
    }
    // (s_x s_y) = (s_x s_1)(s_1 s_y); s_1 s_1 = 1, s_2 s_1 = a_1^{-1},
    // s_x s_1 = s_1 s_x = a_{x-1} for x ≥ 3, and s_1 s_y = a_{y-1}.
    let letters = s_canonical(v).letters();
    let mut word = Vec::with_capacity(letters.len());
    for pair in letters.chunks(2) {
        let &[x, y] = pair else {
            return Err(Error::Invariant("odd-length S-word for an even permutation".into()));
        };
        match x {
            1 => {}
            2 => word.push(Generator::AInv(1)),
            _ => word.push(Generator::A(x - 1)),
        }
        if y > 1 {
            word.push(Generator::A(y - 1));
        }
    }
    // regroup: a new factor starts whenever the index fails to decrease
    let mut groups: Vec<Vec<Generator>> = Vec::new();
    for g in word {
        match groups.last_mut() {
            Some(group) if group.last().expect("nonempty").index() > g.index() => group.push(g),
            _ => groups.push(vec![g]),
        }
    }
    let n = degree - 1;
    let mut factors: Vec<AFactor> = (1..n).map(AFactor::identity).collect();
    for group in groups {
        let j = group[0].index();
        let last = *group.last().expect("nonempty");
        let kind = match last {
            Generator::A(1) => AKind::Tail(Sign::Plus),
            Generator::AInv(1) => AKind::Tail(Sign::Minus),
            Generator::A(ell) => AKind::Run(ell),
            other => return Err(Error::Invariant(format!("unexpected letter {other}"))),
        };
        let factor = AFactor::new(j, kind)?;
        if j >= n || !factors[j - 1].is_identity() || factor.generators() != group {
            return Err(Error::Invariant(format!("regrouping produced a non-canonical factor for {v}")));
        }
        factors[j - 1] = factor;
    }
    Ok(ACanonical { degree, factors })
}

pub fn expand_a(p: &ACanonical) -> Permutation {
    p.expand()
}

/// `R^S_j = {1, s_j, s_j s_{j-1}, …, s_j ⋯ s_1}`.
pub fn enumerate_r_s(j: usize) -> Vec<SFactor> {
    assert!(j >= 1, "factor index must be positive");
    std::iter::once(SFactor::identity(j))
        .chain((1..=j).rev().map(|ell| SFactor { j, kind: SKind::Run(ell) }))
        .collect()
}

/// `R^A_j = {1, a_j, …, a_j ⋯ a_2, a_j ⋯ a_2 a_1, a_j ⋯ a_2 a_1^{-1}}`.
pub fn enumerate_r_a(j: usize) -> Vec<AFactor> {
    assert!(j >= 1, "factor index must be positive");
    std::iter::once(AFactor::identity(j))
        .chain((2..=j).rev().map(|ell| AFactor { j, kind: AKind::Run(ell) }))
        .chain([Sign::Plus, Sign::Minus].map(|s| AFactor { j, kind: AKind::Tail(s) }))
        .collect()
}

/// One letter of a generator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `s_k`
    S(usize),
    /// `a_k = s_1 s_{k+1}`
    A(usize),
    /// `a_k^{-1} = s_{k+1} s_1`
    AInv(usize),
}

impl Generator {
    pub fn index(&self) -> usize {
        match *self {
            Generator::S(k) | Generator::A(k) | Generator::AInv(k) => k,
        }
    }

    /// The letter as a word in Coxeter generators.
    pub fn s_letters(&self) -> Vec<usize> {
        match *self {
            Generator::S(k) => vec![k],
            Generator::A(k) => vec![1, k + 1],
            Generator::AInv(k) => vec![k + 1, 1],
        }
    }

    fn max_s_index(&self) -> usize {
        match *self {
            Generator::S(k) => k,
            Generator::A(k) | Generator::AInv(k) => k + 1,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::S(k) => write!(f, "s_{k}"),
            Generator::A(k) => write!(f, "a_{k}"),
            Generator::AInv(k) => write!(f, "a_{k}^-1"),
        }
    }
}

/// Parses tokens `s<k>`, `a<k>`, `a<k>^-1` or `e` (underscores optional),
/// separated by whitespace; parentheses are ignored.
pub fn parse_word(text: &str) -> Result<Vec<Generator>> {
    let cleaned: String = text.chars().map(|c| if c == '(' || c == ')' { ' ' } else { c }).collect();
    let mut word = Vec::new();
    for token in cleaned.split_whitespace() {
        if token == "e" || token == "1" {
            continue;
        }
        let bad = || Error::MalformedToken(token.to_string());
        let (head, rest) = token.split_at(1);
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let (digits, inverse) = match rest.strip_suffix("^-1") {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let k: usize = digits.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        word.push(match (head, inverse) {
            ("s", false) => Generator::S(k),
            ("s", true) => Generator::S(k),
            ("a", false) => Generator::A(k),
            ("a", true) => Generator::AInv(k),
            _ => return Err(bad()),
        });
    }
    Ok(word)
}

/// Left-to-right product of the word in `S_degree`.
pub fn word_to_perm(word: &[Generator], degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::Empty);
    }
    let mut p = Permutation::identity(degree);
    for g in word {
        if g.max_s_index() >= degree {
            return Err(Error::GeneratorOutOfRange { index: g.index(), degree });
        }
        for k in g.s_letters() {
            p.swap_positions(k);
        }
    }
    Ok(p)
}
