//! Built-in fixture suite behind `verify-paper`.
//!
//! Each fixture pins published values for the reference pairs and compares
//! them with what the library computes. Grids report the first failing
//! parameter.

use serde::{Deserialize, Serialize};

use crate::ambient::AmbientModel;
use crate::bg::{discriminant, full_report};
use crate::log_invariants::{slope, wedge_cotangent_slope, LogPair};
use crate::rational::Rational;
use crate::search::{count_remark_claims, remark_default_bounds, Mode};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureResult {
    pub name: String,
    /// The statement the expected value comes from.
    pub source: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

struct Suite {
    results: Vec<FixtureResult>,
}

impl Suite {
    fn single(&mut self, name: &str, source: &str, expected: &str, computed: Result<String>) {
        let computed = computed.unwrap_or_else(|e| format!("error: {e}"));
        self.results.push(FixtureResult {
            name: name.into(),
            source: source.into(),
            expected: expected.into(),
            passed: computed == expected,
            computed,
        });
    }

    /// One row for a whole grid: passes iff every `(label, expected,
    /// computed)` triple matches.
    fn grid<I>(&mut self, name: &str, source: &str, summary: &str, items: I)
    where
        I: IntoIterator<Item = (String, String, Result<String>)>,
    {
        let mut first_failure = None;
        let mut count = 0;
        for (label, expected, computed) in items {
            count += 1;
            let computed = computed.unwrap_or_else(|e| format!("error: {e}"));
            if computed != expected && first_failure.is_none() {
                first_failure = Some(format!("{label}: expected {expected}, got {computed}"));
            }
        }
        let passed = first_failure.is_none();
        self.results.push(FixtureResult {
            name: name.into(),
            source: source.into(),
            expected: summary.into(),
            computed: first_failure.unwrap_or_else(|| format!("{summary} ({count} cases)")),
            passed,
        });
    }
}

/// Text of `c G^k` as printed by `CycleClass`.
fn monomial(c: u32, generator: &str, k: u32) -> String {
    let power = if k == 1 {
        generator.to_string()
    } else {
        format!("{generator}^{k}")
    };
    match c {
        0 => "0".into(),
        1 => power,
        _ => format!("{c}{power}"),
    }
}

fn degree_of_product(model: &AmbientModel, a: &[i64], b: &[i64]) -> Result<String> {
    let prod = model.divisor(a)?.checked_mul(&model.divisor(b)?)?;
    Ok(prod.degree()?.to_string())
}

fn projective_fixtures(suite: &mut Suite) {
    let ns = 2..=12u32;
    suite.grid(
        "P^n tangent c2 = n(n+1)/2 H^2, n=2..12",
        "c_2(T_{P^n}) = n(n+1)/2 H^2",
        "n(n+1)/2 H^2",
        ns.clone().map(|n| {
            let expected = monomial(n * (n + 1) / 2, "H", 2);
            let computed =
                AmbientModel::projective_space(n).map(|p| p.tangent_chern().c2.to_string());
            (format!("n={n}"), expected, computed)
        }),
    );
    suite.grid(
        "P^n log c1 = nH for D = H, n=2..12",
        "c_1(T_{P^n}(-log H)) = nH",
        "nH",
        ns.clone().map(|n| {
            let computed =
                LogPair::projective_with_degrees(n, &[1]).map(|p| p.log_c1().to_string());
            (format!("n={n}"), monomial(n, "H", 1), computed)
        }),
    );
    suite.grid(
        "P^n log c2 = n(n-1)/2 H^2 for D = H, n=2..12",
        "c_2(T_{P^n}(-log H)) = (n(n+1)/2 - (n+1) + 1) H^2 = n(n-1)/2 H^2",
        "n(n-1)/2 H^2",
        ns.clone().map(|n| {
            let computed =
                LogPair::projective_with_degrees(n, &[1]).map(|p| p.log_c2().to_string());
            (
                format!("n={n}"),
                monomial(n * (n - 1) / 2, "H", 2),
                computed,
            )
        }),
    );
    suite.grid(
        "P^n rank-n BG discriminant = 0 for D = H, n=2..12",
        "(c_2 - (n-1)/2n c_1^2) H^{n-2} = 0 for T_{P^n}(-log H)",
        "0",
        ns.clone().map(|n| {
            let computed = LogPair::projective_with_degrees(n, &[1])
                .and_then(|p| full_report(&p, None))
                .map(|r| r.discriminant.to_string());
            (format!("n={n}"), "0".into(), computed)
        }),
    );
    suite.grid(
        "P^n -(K+H) nef, n=2..12",
        "-(K_{P^n} + H) is nef",
        "true",
        ns.map(|n| {
            let computed = LogPair::projective_with_degrees(n, &[1])
                .and_then(|p| full_report(&p, None))
                .map(|r| r.minus_k_plus_d_nef.to_string());
            (format!("n={n}"), "true".into(), computed)
        }),
    );
}

fn hirzebruch_fixtures(suite: &mut Suite) {
    let ms = || 1..=50u32;
    let model = |m: u32| AmbientModel::hirzebruch(m);
    suite.grid(
        "F_m C0^2 = -m, m=1..50",
        "(C_0)^2 = -m",
        "-m",
        ms().map(|m| {
            let computed = model(m).and_then(|x| degree_of_product(&x, &[1, 0], &[1, 0]));
            (format!("m={m}"), (-i64::from(m)).to_string(), computed)
        }),
    );
    suite.grid(
        "F_m C0.f = 1, f^2 = 0, m=1..50",
        "C_0 f = 1, f^2 = 0",
        "1, 0",
        ms().map(|m| {
            let computed = model(m).and_then(|x| {
                Ok(format!(
                    "{}, {}",
                    degree_of_product(&x, &[1, 0], &[0, 1])?,
                    degree_of_product(&x, &[0, 1], &[0, 1])?
                ))
            });
            (format!("m={m}"), "1, 0".into(), computed)
        }),
    );
    let fixed = |suite: &mut Suite,
                 name: &str,
                 source: &str,
                 expected: &str,
                 computed: &dyn Fn(u32) -> Result<String>| {
        suite.grid(
            name,
            source,
            expected,
            ms().map(|m| (format!("m={m}"), expected.to_string(), computed(m))),
        );
    };
    fixed(
        suite,
        "F_m tangent c2 = 4, m=1..50",
        "c_2(T_{F_m}) = (2C_0 + mf) 2f = 4",
        "4",
        &|m| Ok(model(m)?.tangent_chern().c2.degree()?.to_string()),
    );
    fixed(
        suite,
        "F_m (2C0 + mf).2f = 4, m=1..50",
        "(2C_0 + mf) 2f = 4",
        "4",
        &|m| degree_of_product(&model(m)?, &[2, i64::from(m)], &[0, 2]),
    );
    fixed(
        suite,
        "F_m -(K+D) = 2f for D = C0 + C_inf, m=1..50",
        "-(K_{F_m} + D) ~ (2C_0 + (m+2)f) - (2C_0 + mf) = 2f",
        "2f",
        &|m| Ok(LogPair::hirzebruch_two_sections(m)?.log_c1().to_string()),
    );
    fixed(
        suite,
        "F_m (2f)^2 = 0, m=1..50",
        "c_1(T_{F_m}(-log D))^2 = (2f)^2 = 0",
        "0",
        &|m| degree_of_product(&model(m)?, &[0, 2], &[0, 2]),
    );
    fixed(
        suite,
        "F_m log c2 = 0, m=1..50",
        "c_2(T_{F_m}(-log D)) = 4 - 4 + 0 - 0 = 0",
        "0",
        &|m| {
            Ok(LogPair::hirzebruch_two_sections(m)?
                .log_c2()
                .degree()?
                .to_string())
        },
    );
    fixed(
        suite,
        "F_m BG discriminant rank 2 and rank 3 = 0, m=1..50",
        "c_2 - 1/4 c_1^2 = 0",
        "0, 0",
        &|m| {
            let pair = LogPair::hirzebruch_two_sections(m)?;
            let h = pair.model().default_polarization();
            Ok(format!(
                "{}, {}",
                discriminant(&pair.log_tangent_chern(), &h)?,
                discriminant(&pair.extension_chern(), &h)?
            ))
        },
    );
    fixed(
        suite,
        "F_m -(K+D) nef, m=1..50",
        "-(K_{F_m} + D) is nef",
        "true",
        &|m| {
            Ok(full_report(&LogPair::hirzebruch_two_sections(m)?, None)?
                .minus_k_plus_d_nef
                .to_string())
        },
    );
    fixed(
        suite,
        "(K+D).C0 = -2 on F_m, m=1..50",
        "(K_{F_m} + D) C_0 = -2 < 0",
        "-2",
        &|m| {
            let pair = LogPair::hirzebruch_two_sections(m)?;
            let k_plus_d = pair.log_c1().neg();
            Ok(k_plus_d
                .checked_mul(&pair.model().divisor(&[1, 0])?)?
                .degree()?
                .to_string())
        },
    );
    fixed(
        suite,
        "(K+D).f = 0 on F_m, m=1..50",
        "(K_{F_m} + D) f = 0",
        "0",
        &|m| {
            let pair = LogPair::hirzebruch_two_sections(m)?;
            let k_plus_d = pair.log_c1().neg();
            Ok(k_plus_d
                .checked_mul(&pair.model().divisor(&[0, 1])?)?
                .degree()?
                .to_string())
        },
    );
}

fn slope_fixtures(suite: &mut Suite) {
    let grid: Vec<(u32, u32)> = (2..=12u32)
        .flat_map(|n| (1..=n).map(move |r| (n, r)))
        .collect();
    suite.grid(
        "mu(Omega^r) = -r(n+1)/n grid, n=2..12",
        "mu_H(Omega^r_{P^n}) = -r(n+1)/n",
        "-r(n+1)/n",
        grid.into_iter().map(|(n, r)| {
            let expected = Rational::ratio(-i64::from(r * (n + 1)), i64::from(n)).to_string();
            let computed = wedge_cotangent_slope(n, r).map(|s| s.to_string());
            (format!("n={n} r={r}"), expected, computed)
        }),
    );
    suite.grid(
        "mu(Omega^1(log H)) = -1, n=2..12",
        "mu_H(Omega^1_{P^n}(log H)) = -1",
        "-1",
        (2..=12u32).map(|n| {
            let computed = LogPair::projective_with_degrees(n, &[1]).and_then(|pair| {
                let model = *pair.model();
                slope(
                    &model,
                    &pair.log_c1().neg(),
                    n,
                    &model.default_polarization(),
                )
                .map(|s| s.to_string())
            });
            (format!("n={n}"), "-1".into(), computed)
        }),
    );
}

fn tuple_fixtures(suite: &mut Suite) {
    let check = |pair: Result<LogPair>, mode: Mode| -> Result<String> {
        let r = full_report(&pair?, None)?;
        let (flag, disc) = match mode {
            Mode::EqualityN => (r.equality_n, r.discriminant),
            _ => (r.equality_n_plus_1, r.discriminant_n_plus_1),
        };
        Ok(format!("{flag}, {disc}"))
    };
    suite.single(
        "P^7 degrees (2,1,1): rank-8 equality",
        "n=7, l=3, (d_1, d_2, d_3) = (2,1,1)",
        "true, 0",
        check(
            LogPair::projective_with_degrees(7, &[2, 1, 1]),
            Mode::EqualityNPlus1,
        ),
    );
    suite.single(
        "P^8 degrees (2,1,1,1): rank-8 equality",
        "n=8, l=4, (d_1, d_2, d_3, d_4) = (2,1,1,1)",
        "true, 0",
        check(
            LogPair::projective_with_degrees(8, &[2, 1, 1, 1]),
            Mode::EqualityN,
        ),
    );
    suite.single(
        "quadric (n,q,l) = (7,2,3): rank-8 equality",
        "(n, q, l) = (7, 2, 3)",
        "true, 0",
        check(
            LogPair::hypersurface_with_sections(7, 2, 3),
            Mode::EqualityNPlus1,
        ),
    );
    suite.single(
        "quadric (n,q,l) = (8,2,4): rank-8 equality",
        "(n, q, l) = (8, 2, 4)",
        "true, 0",
        check(
            LogPair::hypersurface_with_sections(8, 2, 4),
            Mode::EqualityN,
        ),
    );
}

fn count_fixtures(suite: &mut Suite, workers: usize) {
    let (pn, hyp) = remark_default_bounds();
    let counts = count_remark_claims(&pn.with_workers(workers), &hyp.with_workers(workers));
    match counts {
        Ok(counts) => {
            for (name, source, outcome) in [
                (
                    "P^n equality cases with D != 0, D != H",
                    "at least 18 examples",
                    &counts.pn,
                ),
                (
                    "hypersurface equality cases, q >= 2, degree-1 components",
                    "at least 90 examples",
                    &counts.hypersurface,
                ),
            ] {
                let count = outcome.count();
                suite.results.push(FixtureResult {
                    name: name.into(),
                    source: source.into(),
                    expected: format!(">= {}", outcome.floor),
                    computed: format!(
                        "{count} (regime {})",
                        outcome.regimes.last().map_or("none", |r| r.regime.as_str())
                    ),
                    passed: outcome.met_by.is_some(),
                });
            }
        }
        Err(e) => suite.single(
            "equality case counts",
            "at least 18 / 90 examples",
            ">= floor",
            Err(e),
        ),
    }
}

/// Runs every fixture; `workers` only affects the count search.
pub fn run_fixtures(workers: usize) -> Vec<FixtureResult> {
    let mut suite = Suite {
        results: Vec::new(),
    };
    projective_fixtures(&mut suite);
    hirzebruch_fixtures(&mut suite);
    slope_fixtures(&mut suite);
    tuple_fixtures(&mut suite);
    count_fixtures(&mut suite, workers);
    suite.results
}
