//! Exhaustive search for equality cases among hyperplane-type arrangements.
//!
//! Two families are searched:
//!
//! * `pn`: `(P^n, D_1 + ... + D_l)` with `D_i ~ d_i H`, one case per degree
//!   multiset (stored as a non-increasing partition);
//! * `hypersurface`: a degree-`q` hypersurface `X ⊂ P^{n+1}` with `l`
//!   hyperplane sections.
//!
//! Every configuration is screened with an integer closed form. Hits are then
//! re-evaluated through intersection products ([`full_report`]) and the two
//! evaluations must agree exactly; any disagreement aborts the search.
//!
//! Work is split by `n` across a dedicated thread pool and the merged output
//! is sorted canonically, so results do not depend on the worker count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bg::{full_report, BGReport};
use crate::log_invariants::LogPair;
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Pn,
    Hypersurface,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "n")]
    EqualityN,
    #[serde(rename = "n1")]
    EqualityNPlus1,
    #[serde(rename = "either")]
    Either,
}

impl Mode {
    pub fn accepts(self, equality_n: bool, equality_n_plus_1: bool) -> bool {
        match self {
            Mode::EqualityN => equality_n,
            Mode::EqualityNPlus1 => equality_n_plus_1,
            Mode::Either => equality_n || equality_n_plus_1,
        }
    }
}

/// Which of the two equalities a case satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Equality {
    #[serde(rename = "n")]
    N,
    #[serde(rename = "n+1")]
    NPlus1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub family: Family,
    pub n_min: u32,
    pub n_max: u32,
    pub mode: Mode,
    pub require_nef: bool,
    /// Drop `D = ∅` and, on `P^n`, a single hyperplane.
    pub exclude_trivial: bool,
    /// Cap on `Σ d_i` (the component count `l` for hypersurfaces). `None`
    /// means `n + 1` with `require_nef`, else `3(n + 1)`.
    pub s_max: Option<u32>,
    /// Hypersurface degrees `q_min..=q_max`; ignored for `pn`.
    pub q_min: u32,
    pub q_max: u32,
    #[serde(skip, default = "one")]
    pub workers: usize,
}

fn one() -> usize {
    1
}

pub const PN_FLOOR: usize = 18;
pub const HYPERSURFACE_FLOOR: usize = 90;

impl SearchConfig {
    pub fn pn(n_min: u32, n_max: u32) -> Self {
        SearchConfig {
            family: Family::Pn,
            n_min,
            n_max,
            mode: Mode::Either,
            require_nef: true,
            exclude_trivial: true,
            s_max: None,
            q_min: 1,
            q_max: 1,
            workers: 1,
        }
    }

    pub fn hypersurface(n_min: u32, n_max: u32, q_max: u32) -> Self {
        SearchConfig {
            family: Family::Hypersurface,
            q_min: 2,
            q_max,
            ..SearchConfig::pn(n_min, n_max)
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_nef(mut self, require_nef: bool) -> Self {
        self.require_nef = require_nef;
        self
    }

    pub fn with_trivial(mut self, exclude_trivial: bool) -> Self {
        self.exclude_trivial = exclude_trivial;
        self
    }

    pub fn with_s_max(mut self, s_max: Option<u32>) -> Self {
        self.s_max = s_max;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSearch(msg));
        if self.n_min < 2 {
            return bad(format!("n_min must be at least 2, got {}", self.n_min));
        }
        if self.n_min > self.n_max {
            return bad(format!("empty range n = {}..{}", self.n_min, self.n_max));
        }
        if self.s_max == Some(0) {
            return bad("s_max must be positive".into());
        }
        if self.workers == 0 {
            return bad("worker count must be positive".into());
        }
        if self.family == Family::Hypersurface {
            if self.q_min < 1 {
                return bad("q_min must be at least 1".into());
            }
            if self.q_min > self.q_max {
                return bad(format!("empty range q = {}..{}", self.q_min, self.q_max));
            }
        }
        Ok(())
    }

    pub fn s_max_for(&self, n: u32) -> u32 {
        self.s_max
            .unwrap_or(if self.require_nef { n + 1 } else { 3 * (n + 1) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EqualityCase {
    pub family: Family,
    pub n: u32,
    /// `1` for projective space.
    pub q: u32,
    /// Component degrees, non-increasing.
    pub partition: Vec<u32>,
    pub satisfied: Vec<Equality>,
    /// Whether `-(K_X + D)` is nef.
    pub nef: bool,
    pub report: BGReport,
}

impl EqualityCase {
    pub fn l(&self) -> usize {
        self.partition.len()
    }

    /// Rebuilds the pair this case describes.
    pub fn pair(&self) -> Result<LogPair> {
        match self.family {
            Family::Pn => LogPair::projective_with_degrees(self.n, &self.partition),
            Family::Hypersurface => {
                LogPair::hypersurface_with_sections(self.n, self.q, self.partition.len() as u32)
            }
        }
    }
}

/// Closed-form `(c1^2·H^{n-2}, c2·H^{n-2})` for `(P^n, Σ d_i H)`:
/// `c1 = (n+1-s) H`, `c2 = (C(n+1,2) - (n+1)s + s^2 - e2(d)) H^2`.
pub fn pn_closed_form(n: u32, partition: &[u32]) -> (i128, i128) {
    let n = i128::from(n);
    let s: i128 = partition.iter().map(|&d| i128::from(d)).sum();
    let squares: i128 = partition
        .iter()
        .map(|&d| i128::from(d) * i128::from(d))
        .sum();
    let e2 = (s * s - squares) / 2;
    let c1 = n + 1 - s;
    let c2 = (n + 1) * n / 2 - (n + 1) * s + s * s - e2;
    (c1 * c1, c2)
}

/// Closed form for `l` hyperplane sections on a degree-`q` hypersurface of
/// dimension `n`, evaluated against `h^{n-2}` (so both carry a factor `q`).
pub fn hypersurface_closed_form(n: u32, q: u32, l: u32) -> (i128, i128) {
    let (n, q, l) = (i128::from(n), i128::from(q), i128::from(l));
    let c1 = n + 2 - q - l;
    let tangent_c2 = (n + 2) * (n + 1) / 2 - q * (n + 2) + q * q;
    let c2 = tangent_c2 - (n + 2 - q) * l + l * l - l * (l - 1) / 2;
    (q * c1 * c1, q * c2)
}

/// `(equality_n, equality_n_plus_1)` from exact integer evaluations.
pub fn closed_form_flags(n: u32, c1_sq: i128, c2_eval: i128) -> (bool, bool) {
    let n = i128::from(n);
    (
        2 * n * c2_eval == (n - 1) * c1_sq,
        2 * (n + 1) * c2_eval == n * c1_sq,
    )
}

/// Calls `visit` on every non-increasing sequence of positive integers with
/// sum at most `cap`, including the empty one.
pub fn for_each_partition<F>(cap: u32, visit: &mut F) -> Result<()>
where
    F: FnMut(&[u32]) -> Result<()>,
{
    fn go<F>(remaining: u32, max_part: u32, current: &mut Vec<u32>, visit: &mut F) -> Result<()>
    where
        F: FnMut(&[u32]) -> Result<()>,
    {
        visit(current)?;
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            go(remaining - part, part, current, visit)?;
            current.pop();
        }
        Ok(())
    }
    go(cap, cap, &mut Vec::new(), visit)
}

fn confirm(
    pair: &LogPair,
    what: impl Fn() -> String,
    closed: (i128, i128),
    nef: bool,
) -> Result<BGReport> {
    let report = full_report(pair, None)?;
    let expected = (Rational::from_i128(closed.0), Rational::from_i128(closed.1));
    if report.c1_sq != expected.0
        || report.c2_eval != expected.1
        || report.minus_k_plus_d_nef != nef
    {
        return Err(Error::PathDisagreement(what()));
    }
    Ok(report)
}

fn satisfied(report: &BGReport) -> Vec<Equality> {
    let mut out = Vec::new();
    if report.equality_n {
        out.push(Equality::N);
    }
    if report.equality_n_plus_1 {
        out.push(Equality::NPlus1);
    }
    out
}

fn search_pn_dimension(config: &SearchConfig, n: u32) -> Result<Vec<EqualityCase>> {
    let mut hits = Vec::new();
    for_each_partition(config.s_max_for(n), &mut |partition| {
        if config.exclude_trivial && (partition.is_empty() || partition == [1]) {
            return Ok(());
        }
        let s: u32 = partition.iter().sum();
        let nef = s <= n + 1;
        if config.require_nef && !nef {
            return Ok(());
        }
        let closed = pn_closed_form(n, partition);
        let (eq_n, eq_n1) = closed_form_flags(n, closed.0, closed.1);
        if !config.mode.accepts(eq_n, eq_n1) {
            return Ok(());
        }
        let pair = LogPair::projective_with_degrees(n, partition)?;
        let report = confirm(
            &pair,
            || format!("P^{n} with degrees {partition:?}"),
            closed,
            nef,
        )?;
        hits.push(EqualityCase {
            family: Family::Pn,
            n,
            q: 1,
            partition: partition.to_vec(),
            satisfied: satisfied(&report),
            nef,
            report,
        });
        Ok(())
    })?;
    Ok(hits)
}

fn search_hypersurface_dimension(config: &SearchConfig, n: u32) -> Result<Vec<EqualityCase>> {
    let mut hits = Vec::new();
    let first = u32::from(config.exclude_trivial);
    for q in config.q_min..=config.q_max {
        for l in first..=config.s_max_for(n) {
            let nef = i64::from(n) + 2 - i64::from(q) - i64::from(l) >= 0;
            if config.require_nef && !nef {
                continue;
            }
            let closed = hypersurface_closed_form(n, q, l);
            let (eq_n, eq_n1) = closed_form_flags(n, closed.0, closed.1);
            if !config.mode.accepts(eq_n, eq_n1) {
                continue;
            }
            let pair = LogPair::hypersurface_with_sections(n, q, l)?;
            let report = confirm(
                &pair,
                || format!("degree {q} hypersurface of dimension {n} with {l} sections"),
                closed,
                nef,
            )?;
            hits.push(EqualityCase {
                family: Family::Hypersurface,
                n,
                q,
                partition: vec![1; l as usize],
                satisfied: satisfied(&report),
                nef,
                report,
            });
        }
    }
    Ok(hits)
}

fn run(
    config: &SearchConfig,
    family: Family,
    per_dimension: fn(&SearchConfig, u32) -> Result<Vec<EqualityCase>>,
) -> Result<Vec<EqualityCase>> {
    config.validate()?;
    if config.family != family {
        return Err(Error::InvalidSearch(format!(
            "configuration is for family {:?}",
            config.family
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidSearch(format!("cannot start workers: {e}")))?;
    let chunks: Vec<Vec<EqualityCase>> = pool.install(|| {
        (config.n_min..=config.n_max)
            .into_par_iter()
            .map(|n| per_dimension(config, n))
            .collect::<Result<_>>()
    })?;
    let mut cases: Vec<EqualityCase> = chunks.into_iter().flatten().collect();
    cases.sort_by(|a, b| (a.n, a.q, a.l(), &a.partition).cmp(&(b.n, b.q, b.l(), &b.partition)));
    Ok(cases)
}

/// Equality cases on projective space, sorted by `(n, l, partition)`.
pub fn enumerate_pn(config: &SearchConfig) -> Result<Vec<EqualityCase>> {
    run(config, Family::Pn, search_pn_dimension)
}

/// Equality cases on hypersurfaces, sorted by `(n, q, l)`.
pub fn enumerate_hypersurface(config: &SearchConfig) -> Result<Vec<EqualityCase>> {
    run(config, Family::Hypersurface, search_hypersurface_dimension)
}

pub fn enumerate(config: &SearchConfig) -> Result<Vec<EqualityCase>> {
    match config.family {
        Family::Pn => enumerate_pn(config),
        Family::Hypersurface => enumerate_hypersurface(config),
    }
}

/// Default bounds for checking the example-count floors: `P^n` for
/// `n ∈ [2, 30]` and hypersurfaces for `n, q ∈ [2, 150]`, both with
/// `-(K+D)` nef, either equality, trivial boundaries excluded.
pub fn remark_default_bounds() -> (SearchConfig, SearchConfig) {
    (
        SearchConfig::pn(2, 30),
        SearchConfig::hypersurface(2, 150, 150),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegimeCount {
    pub regime: String,
    pub bounds: SearchConfig,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub floor: usize,
    /// Regimes in the order they were run.
    pub regimes: Vec<RegimeCount>,
    /// The first regime whose count reached the floor.
    pub met_by: Option<String>,
    /// Cases found by the last regime run.
    #[serde(skip)]
    pub cases: Vec<EqualityCase>,
}

impl ClaimOutcome {
    pub fn count(&self) -> usize {
        self.regimes.last().map_or(0, |r| r.count)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkCounts {
    pub pn: ClaimOutcome,
    pub hypersurface: ClaimOutcome,
}

fn claim(config: &SearchConfig, floor: usize) -> Result<ClaimOutcome> {
    let mut config = config.clone().with_mode(Mode::Either).with_trivial(true);
    let mut regimes = Vec::new();
    let mut cases = enumerate(&config)?;
    regimes.push(RegimeCount {
        regime: if config.require_nef { "nef" } else { "any" }.into(),
        bounds: config.clone(),
        count: cases.len(),
    });
    if cases.len() < floor && config.require_nef {
        config = config.with_nef(false).with_s_max(None);
        cases = enumerate(&config)?;
        regimes.push(RegimeCount {
            regime: "widened".into(),
            bounds: config.clone(),
            count: cases.len(),
        });
    }
    let met_by = regimes
        .iter()
        .find(|r| r.count >= floor)
        .map(|r| r.regime.clone());
    Ok(ClaimOutcome {
        floor,
        regimes,
        met_by,
        cases,
    })
}

/// Counts equality cases with `D ≠ 0` (and `D ≠ H` on `P^n`) for either
/// equality. If the nef-restricted search falls short of the floor it is
/// rerun without the nef filter and a wider degree cap; every regime run is
/// reported with its bounds.
pub fn count_remark_claims(pn: &SearchConfig, hypersurface: &SearchConfig) -> Result<RemarkCounts> {
    Ok(RemarkCounts {
        pn: claim(pn, PN_FLOOR)?,
        hypersurface: claim(hypersurface, HYPERSURFACE_FLOOR)?,
    })
}
