//! Output records (one JSON object per line) and plain-text tables.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::ambient::{AmbientModel, ModelKind};
use crate::bg::BGReport;
use crate::chow::CycleClass;
use crate::descriptor::PairDescriptor;
use crate::log_invariants::LogPair;
use crate::search::{Equality, EqualityCase, Family, RemarkCounts, SearchConfig};
use crate::verify::FixtureResult;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum OutputRecord {
    Report {
        tool_version: String,
        input: PairDescriptor,
        /// Readable divisor classes, e.g. `C0 + 2f (= C_inf)`.
        divisors: Vec<String>,
        report: BGReport,
    },
    Case {
        tool_version: String,
        bounds: SearchConfig,
        case: EqualityCase,
    },
    Summary {
        tool_version: String,
        bounds: SearchConfig,
        count: usize,
    },
    RemarkClaims {
        tool_version: String,
        counts: RemarkCounts,
    },
    Fixture {
        tool_version: String,
        fixture: FixtureResult,
    },
    Nef {
        tool_version: String,
        model: AmbientModel,
        class: CycleClass,
        nef: bool,
    },
}

impl OutputRecord {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Class text with the `C_inf = C0 + m f` alias on Hirzebruch surfaces.
pub fn describe_divisor(class: &CycleClass) -> String {
    let text = class.to_string();
    if let ModelKind::Hirzebruch { m } = class.model().kind() {
        let c_inf = class
            .model()
            .divisor(&[1, i64::from(m)])
            .expect("divisor basis");
        if &c_inf == class {
            return format!("{text} (= C_inf)");
        }
    }
    text
}

pub fn divisor_descriptions(pair: &LogPair) -> Vec<String> {
    pair.components()
        .iter()
        .map(|c| format!("{} = {}", c.label, describe_divisor(&c.class)))
        .collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn report_table(index: usize, pair: &LogPair, report: &BGReport) -> String {
    let n = pair.model().dim();
    let divisors = divisor_descriptions(pair);
    let rows: Vec<(String, String)> = vec![
        ("ambient".into(), pair.model().to_string()),
        (
            "divisors".into(),
            if divisors.is_empty() {
                "(none)".into()
            } else {
                divisors.join(", ")
            },
        ),
        ("polarization".into(), report.polarization.to_string()),
        ("c1(T(-log D))".into(), report.log_c1.to_string()),
        ("c2(T(-log D))".into(), report.log_c2.to_string()),
        ("c1^2 . H^(n-2)".into(), report.c1_sq.to_string()),
        ("c2 . H^(n-2)".into(), report.c2_eval.to_string()),
        (
            format!("discriminant, rank {n}"),
            report.discriminant.to_string(),
        ),
        (
            format!("discriminant, rank {}", n + 1),
            report.discriminant_n_plus_1.to_string(),
        ),
        ("equality (n-1)/2n".into(), yes_no(report.equality_n).into()),
        (
            "equality n/2(n+1)".into(),
            yes_no(report.equality_n_plus_1).into(),
        ),
        (
            "-(K+D) nef".into(),
            yes_no(report.minus_k_plus_d_nef).into(),
        ),
    ];
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = format!("pair {}\n", index + 1);
    for (k, v) in rows {
        let _ = writeln!(out, "  {k:<width$}  {v}");
    }
    out
}

fn range_text(lo: u32, hi: u32) -> String {
    if lo == hi {
        lo.to_string()
    } else {
        format!("{lo}..{hi}")
    }
}

pub fn bounds_text(config: &SearchConfig) -> String {
    let family = match config.family {
        Family::Pn => "pn",
        Family::Hypersurface => "hypersurface",
    };
    let mode = serde_json::to_value(config.mode).expect("mode");
    let mut text = format!(
        "family={family} n={} mode={} nef={} trivial={} s_max={}",
        range_text(config.n_min, config.n_max),
        mode.as_str().unwrap_or_default(),
        if config.require_nef {
            "required"
        } else {
            "any"
        },
        if config.exclude_trivial {
            "excluded"
        } else {
            "kept"
        },
        match (config.s_max, config.require_nef) {
            (Some(s), _) => s.to_string(),
            (None, true) => "n+1".into(),
            (None, false) => "3(n+1)".into(),
        },
    );
    if config.family == Family::Hypersurface {
        let _ = write!(text, " q={}", range_text(config.q_min, config.q_max));
    }
    text
}

fn equalities_text(satisfied: &[Equality]) -> String {
    satisfied
        .iter()
        .map(|e| match e {
            Equality::N => "n",
            Equality::NPlus1 => "n+1",
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Degrees with repeated parts written as powers, e.g. `(2,1^3)`.
pub fn partition_text(partition: &[u32]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < partition.len() {
        let d = partition[i];
        let run = partition[i..].iter().take_while(|&&x| x == d).count();
        parts.push(if run == 1 {
            d.to_string()
        } else {
            format!("{d}^{run}")
        });
        i += run;
    }
    format!("({})", parts.join(","))
}

pub fn cases_table(cases: &[EqualityCase]) -> String {
    let header = ["n", "q", "l", "degrees", "equality", "nef", "c1^2", "c2"];
    let rows: Vec<[String; 8]> = cases
        .iter()
        .map(|c| {
            [
                c.n.to_string(),
                c.q.to_string(),
                c.l().to_string(),
                partition_text(&c.partition),
                equalities_text(&c.satisfied),
                yes_no(c.nef).into(),
                c.report.c1_sq.to_string(),
                c.report.c2_eval.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.to_vec(), &mut out);
    for row in &rows {
        line(row.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

pub fn remark_table(counts: &RemarkCounts) -> String {
    let mut out = String::new();
    for (name, outcome) in [("pn", &counts.pn), ("hypersurface", &counts.hypersurface)] {
        for regime in &outcome.regimes {
            let _ = writeln!(
                out,
                "{name}: {} cases (floor {}) regime={} [{}]",
                regime.count,
                outcome.floor,
                regime.regime,
                bounds_text(&regime.bounds)
            );
        }
        let _ = writeln!(
            out,
            "{name}: floor {}",
            match &outcome.met_by {
                Some(regime) => format!("met by regime {regime}"),
                None => "NOT met".into(),
            }
        );
    }
    out
}

pub fn fixtures_table(results: &[FixtureResult]) -> String {
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        let _ = writeln!(
            out,
            "{}  {:<width$}  expected {}  computed {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.expected,
            r.computed
        );
        if !r.passed {
            let _ = writeln!(out, "      source: {}", r.source);
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{passed}/{} fixtures passed", results.len());
    out
}
