//! Oracles shared by the integration tests. Nothing here goes through the
//! library's cycle-class arithmetic: Chern classes are computed as truncated
//! power series in one hyperplane variable with plain integers.

#![allow(dead_code)]

/// `1 + a1 t + a2 t^2` modulo `t^3`.
pub type Series = [i128; 3];

pub fn mul(a: Series, b: Series) -> Series {
    [
        a[0] * b[0],
        a[0] * b[1] + a[1] * b[0],
        a[0] * b[2] + a[1] * b[1] + a[2] * b[0],
    ]
}

/// Long division by a series with constant term 1.
pub fn div(a: Series, b: Series) -> Series {
    assert_eq!(b[0], 1);
    let q0 = a[0];
    let q1 = a[1] - b[1] * q0;
    let q2 = a[2] - b[1] * q1 - b[2] * q0;
    [q0, q1, q2]
}

pub fn linear(a: i128) -> Series {
    [1, a, 0]
}

pub fn power(a: Series, k: u32) -> Series {
    (0..k).fold([1, 0, 0], |acc, _| mul(acc, a))
}

/// `c(T_X)` for a degree-`q` hypersurface of dimension `n`, by dividing
/// `(1+h)^{n+2}` by `(1+qh)`. `q = 1` is projective space.
pub fn tangent_series(n: u32, q: u32) -> Series {
    div(power(linear(1), n + 2), linear(i128::from(q)))
}

/// `c(T_X(-log D)) = c(T_X) / Π (1 + d_i h)`.
pub fn log_series(n: u32, q: u32, degrees: &[u32]) -> Series {
    degrees.iter().fold(tangent_series(n, q), |acc, &d| {
        div(acc, linear(i128::from(d)))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub c1_sq: i128,
    pub c2_eval: i128,
    pub equality_n: bool,
    pub equality_n_plus_1: bool,
    pub nef: bool,
}

/// Evaluates against `h^{n-2}`; `deg h^n = q`.
pub fn verdict(n: u32, q: u32, degrees: &[u32]) -> Verdict {
    let c = log_series(n, q, degrees);
    let q = i128::from(q);
    let (c1_sq, c2_eval) = (q * c[1] * c[1], q * c[2]);
    let vanishes = |r: i128| 2 * r * c2_eval == (r - 1) * c1_sq;
    let n = i128::from(n);
    Verdict {
        c1_sq,
        c2_eval,
        equality_n: vanishes(n),
        equality_n_plus_1: vanishes(n + 1),
        nef: c[1] >= 0,
    }
}

/// Non-increasing positive sequences with sum at most `cap`.
pub fn partitions(cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::<u32>::new(), cap)];
    while let Some((prefix, remaining)) = frontier.pop() {
        let largest = prefix.last().copied().unwrap_or(cap).min(remaining);
        for d in 1..=largest {
            let mut next = prefix.clone();
            next.push(d);
            out.push(next.clone());
            frontier.push((next, remaining - d));
        }
    }
    out.sort();
    out
}

/// One oracle hit: `(n, q, degrees)` with the equality flags.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hit {
    pub n: u32,
    pub q: u32,
    pub degrees: Vec<u32>,
    pub equality_n: bool,
    pub equality_n_plus_1: bool,
}

/// Brute force over `P^n`, `n_lo..=n_hi`, total degree at most `cap(n)`,
/// skipping `D = 0` and `D = H`, either equality.
pub fn brute_force_pn(n_lo: u32, n_hi: u32, nef: bool, cap: impl Fn(u32) -> u32) -> Vec<Hit> {
    let mut hits = Vec::new();
    for n in n_lo..=n_hi {
        for degrees in partitions(cap(n)) {
            if degrees.is_empty() || degrees == [1] {
                continue;
            }
            let v = verdict(n, 1, &degrees);
            if (v.equality_n || v.equality_n_plus_1) && (!nef || v.nef) {
                hits.push(Hit {
                    n,
                    q: 1,
                    degrees,
                    equality_n: v.equality_n,
                    equality_n_plus_1: v.equality_n_plus_1,
                });
            }
        }
    }
    hits.sort();
    hits
}

/// Brute force over `l ≥ 1` hyperplane sections of degree-`q`
/// hypersurfaces, either equality, `l ≤ cap(n)`.
pub fn brute_force_hypersurface(
    (n_lo, n_hi): (u32, u32),
    (q_lo, q_hi): (u32, u32),
    nef: bool,
    cap: impl Fn(u32) -> u32,
) -> Vec<Hit> {
    let mut hits = Vec::new();
    for n in n_lo..=n_hi {
        for q in q_lo..=q_hi {
            for l in 1..=cap(n) {
                let degrees = vec![1; l as usize];
                let v = verdict(n, q, &degrees);
                if (v.equality_n || v.equality_n_plus_1) && (!nef || v.nef) {
                    hits.push(Hit {
                        n,
                        q,
                        degrees,
                        equality_n: v.equality_n,
                        equality_n_plus_1: v.equality_n_plus_1,
                    });
                }
            }
        }
    }
    hits.sort();
    hits
}

pub fn hits_of(cases: &[logbg::EqualityCase]) -> Vec<Hit> {
    let mut hits: Vec<Hit> = cases
        .iter()
        .map(|c| Hit {
            n: c.n,
            q: c.q,
            degrees: c.partition.clone(),
            equality_n: c.report.equality_n,
            equality_n_plus_1: c.report.equality_n_plus_1,
        })
        .collect();
    hits.sort();
    hits
}

pub fn binomial(n: u32, k: u32) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * i128::from(n - i) / i128::from(i + 1))
}
