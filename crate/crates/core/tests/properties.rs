mod common;

use logbg::output::OutputRecord;
use logbg::search::{for_each_partition, Equality};
use logbg::{
    discriminant, enumerate, full_report, wedge_cotangent_slope, AmbientModel, ChernData,
    Component, LogPair, Mode, Rational, SearchConfig,
};
use proptest::prelude::*;

fn model_strategy() -> impl Strategy<Value = AmbientModel> {
    prop_oneof![
        (2..=9u32).prop_map(|n| AmbientModel::projective_space(n).unwrap()),
        (2..=9u32, 1..=8u32).prop_map(|(n, q)| AmbientModel::hypersurface(n, q).unwrap()),
        (1..=40u32).prop_map(|m| AmbientModel::hirzebruch(m).unwrap()),
    ]
}

/// Effective components on the given model.
fn components(model: AmbientModel) -> impl Strategy<Value = Vec<Component>> {
    let len = model.basis_len(1);
    prop::collection::vec(prop::collection::vec(0..=4i64, len), 0..=5).prop_map(move |raw| {
        raw.into_iter()
            .enumerate()
            .map(|(i, mut coeffs)| {
                if coeffs.iter().all(|&c| c == 0) {
                    coeffs[0] = 1;
                }
                Component {
                    label: format!("D{i}"),
                    class: model.divisor(&coeffs).unwrap(),
                }
            })
            .collect()
    })
}

fn pair_strategy() -> impl Strategy<Value = LogPair> {
    model_strategy()
        .prop_flat_map(|model| (Just(model), components(model)))
        .prop_map(|(model, comps)| LogPair::new(model, comps).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn split_bundles_have_zero_discriminant(
        model in model_strategy(),
        r in 1..=16u32,
        coeffs in prop::collection::vec(-40i64..=40, 2),
    ) {
        let b = model.divisor(&coeffs[..model.basis_len(1)]).unwrap();
        let chern = ChernData::split(r, &b).unwrap();
        prop_assert!(discriminant(&chern, &model.default_polarization()).unwrap().is_zero());
    }
}

proptest! {
    #[test]
    fn extension_shares_chern_classes(pair in pair_strategy()) {
        let ext = pair.extension_chern();
        prop_assert_eq!(ext.rank, pair.model().dim() + 1);
        prop_assert_eq!(&ext.c1, &pair.log_c1());
        prop_assert_eq!(&ext.c2, &pair.log_c2());
    }

    #[test]
    fn log_c2_is_symmetric(pair in pair_strategy(), k in 0usize..6) {
        let mut comps = pair.components().to_vec();
        if !comps.is_empty() {
            let k = k % comps.len();
            comps.rotate_left(k);
            comps.reverse();
        }
        let permuted = LogPair::new(*pair.model(), comps).unwrap();
        prop_assert_eq!(permuted.log_c1(), pair.log_c1());
        prop_assert_eq!(permuted.log_c2(), pair.log_c2());
    }

    #[test]
    fn merging_components_adds_their_product(
        n in 2..=12u32,
        degrees in prop::collection::vec(1..=6u32, 2..=6),
    ) {
        let before = LogPair::projective_with_degrees(n, &degrees).unwrap();
        let mut merged = vec![degrees[0] + degrees[1]];
        merged.extend_from_slice(&degrees[2..]);
        let after = LogPair::projective_with_degrees(n, &merged).unwrap();
        prop_assert_eq!(after.log_c1(), before.log_c1());
        let h2 = before.model().divisor(&[1]).unwrap().checked_pow(2).unwrap();
        let bump = h2.scale(&Rational::from_int(i64::from(degrees[0] * degrees[1])));
        prop_assert_eq!(after.log_c2(), before.log_c2().checked_add(&bump).unwrap());
    }

    #[test]
    fn log_chern_matches_series_oracle(
        n in 2..=14u32,
        q in 1..=10u32,
        degrees in prop::collection::vec(1..=5u32, 0..=6),
    ) {
        let model = if q == 1 {
            AmbientModel::projective_space(n).unwrap()
        } else {
            AmbientModel::hypersurface(n, q).unwrap()
        };
        let comps = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| Component {
                label: format!("D{i}"),
                class: model.divisor(&[i64::from(d)]).unwrap(),
            })
            .collect();
        let pair = LogPair::new(model, comps).unwrap();
        let s = common::log_series(n, q, &degrees);
        prop_assert_eq!(pair.log_c1().coeffs().to_vec(), vec![Rational::from_i128(s[1])]);
        prop_assert_eq!(pair.log_c2().coeffs().to_vec(), vec![Rational::from_i128(s[2])]);
        let v = common::verdict(n, q, &degrees);
        let report = full_report(&pair, None).unwrap();
        prop_assert_eq!(report.c1_sq, Rational::from_i128(v.c1_sq));
        prop_assert_eq!(report.c2_eval, Rational::from_i128(v.c2_eval));
        prop_assert_eq!(report.equality_n, v.equality_n);
        prop_assert_eq!(report.equality_n_plus_1, v.equality_n_plus_1);
        prop_assert_eq!(report.minus_k_plus_d_nef, v.nef);
    }

    #[test]
    fn discriminant_drops_with_rank(pair in pair_strategy()) {
        let r = full_report(&pair, None).unwrap();
        let n = i64::from(pair.model().dim());
        prop_assert_eq!(
            &r.discriminant,
            &(r.c2_eval.clone() - Rational::ratio(n - 1, 2 * n) * r.c1_sq.clone())
        );
        if !r.c1_sq.is_negative() {
            prop_assert!(!(r.discriminant_n_plus_1.clone() - r.discriminant.clone()).is_positive());
            prop_assert_eq!(r.discriminant_n_plus_1 == r.discriminant, r.c1_sq.is_zero());
        }
        if r.equality_n && r.equality_n_plus_1 {
            prop_assert!(r.c1_sq.is_zero());
        }
    }

    #[test]
    fn polarization_scaling(pair in pair_strategy(), t in 1..=5i64) {
        let model = *pair.model();
        let h = model.default_polarization();
        let th = h.scale(&Rational::from_int(t));
        let a = full_report(&pair, Some(&h)).unwrap();
        let b = full_report(&pair, Some(&th)).unwrap();
        let factor = Rational::from_int(t).pow(model.dim() - 2);
        prop_assert_eq!(b.c1_sq, a.c1_sq * factor.clone());
        prop_assert_eq!(b.c2_eval, a.c2_eval * factor);
        prop_assert_eq!(b.equality_n, a.equality_n);
        prop_assert_eq!(b.equality_n_plus_1, a.equality_n_plus_1);
    }

    #[test]
    fn nef_ignores_positive_scaling(model in model_strategy(), coeffs in prop::collection::vec(-6i64..=6, 2), t in 1..=9i64) {
        let d = model.divisor(&coeffs[..model.basis_len(1)]).unwrap();
        let td = d.scale(&Rational::ratio(t, 7));
        prop_assert_eq!(model.is_nef(&d).unwrap(), model.is_nef(&td).unwrap());
        prop_assert!(model.is_nef(&model.divisor(&[0, 0][..model.basis_len(1)]).unwrap()).unwrap());
    }

    #[test]
    fn reports_are_deterministic(pair in pair_strategy()) {
        let a = serde_json::to_string(&full_report(&pair, None).unwrap()).unwrap();
        let b = serde_json::to_string(&full_report(&pair, None).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn wedge_slopes_satisfy_linear_relation() {
    for n in 2..=12u32 {
        for r in 1..=n {
            let mu = wedge_cotangent_slope(n, r).unwrap();
            let lhs =
                mu * Rational::from_int(i64::from(n)) + Rational::from_int(i64::from(r * (n + 1)));
            assert!(lhs.is_zero(), "n={n} r={r}");
        }
    }
    assert!(wedge_cotangent_slope(3, 0).is_err());
    assert!(wedge_cotangent_slope(3, 4).is_err());
}

#[test]
fn surface_euler_numbers() {
    for m in 1..=50 {
        let c2 = AmbientModel::hirzebruch(m).unwrap().tangent_chern().c2;
        assert_eq!(c2.degree().unwrap(), Rational::from_int(4));
    }
    let p2 = AmbientModel::projective_space(2)
        .unwrap()
        .tangent_chern()
        .c2;
    assert_eq!(p2.degree().unwrap(), Rational::from_int(3));
}

#[test]
fn enumerator_matches_brute_force_on_small_boxes() {
    for nef in [true, false] {
        let config = SearchConfig::pn(2, 9).with_nef(nef);
        let cap = |n: u32| config.s_max_for(n);
        assert_eq!(
            common::hits_of(&enumerate(&config).unwrap()),
            common::brute_force_pn(2, 9, nef, cap),
            "nef={nef}"
        );
        let config = SearchConfig::hypersurface(2, 40, 40).with_nef(nef);
        let cap = |n: u32| config.s_max_for(n);
        assert_eq!(
            common::hits_of(&enumerate(&config).unwrap()),
            common::brute_force_hypersurface((2, 40), (2, 40), nef, cap),
            "nef={nef}"
        );
    }
}

#[test]
fn non_emitted_configurations_have_nonzero_discriminants() {
    let config = SearchConfig::pn(2, 7).with_nef(false).with_trivial(false);
    let emitted: Vec<(u32, Vec<u32>)> = enumerate(&config)
        .unwrap()
        .into_iter()
        .map(|c| (c.n, c.partition))
        .collect();
    for n in 2..=7 {
        for_each_partition(config.s_max_for(n), &mut |p| {
            let r = full_report(&LogPair::projective_with_degrees(n, p)?, None)?;
            let found = emitted.contains(&(n, p.to_vec()));
            assert_eq!(found, r.equality_n || r.equality_n_plus_1, "n={n} {p:?}");
            if !found {
                assert!(!r.discriminant.is_zero() && !r.discriminant_n_plus_1.is_zero());
            }
            Ok(())
        })
        .unwrap();
    }
}

#[test]
fn p2_equality_cases_by_hand() {
    // brute force on P^2 with s <= 9, no nef filter, via the integer oracle
    let config = SearchConfig::pn(2, 2).with_nef(false).with_s_max(Some(9));
    let expected: Vec<Vec<u32>> = common::partitions(9)
        .into_iter()
        .filter(|p| !p.is_empty() && p.as_slice() != [1])
        .filter(|p| {
            let v = common::verdict(2, 1, p);
            v.equality_n || v.equality_n_plus_1
        })
        .collect();
    let mut found: Vec<Vec<u32>> = enumerate(&config)
        .unwrap()
        .into_iter()
        .map(|c| c.partition)
        .collect();
    found.sort();
    assert_eq!(found, expected);
    assert!(found.contains(&vec![1, 1, 1]));
}

#[test]
fn degree_one_hypersurfaces_are_projective_space() {
    let x = SearchConfig {
        q_min: 1,
        q_max: 1,
        ..SearchConfig::hypersurface(2, 12, 1).with_trivial(false)
    };
    let p = SearchConfig::pn(2, 12).with_trivial(false);
    let from_x: Vec<(u32, Vec<u32>)> = enumerate(&x)
        .unwrap()
        .into_iter()
        .map(|c| (c.n, c.partition))
        .collect();
    let from_p: Vec<(u32, Vec<u32>)> = enumerate(&p)
        .unwrap()
        .into_iter()
        .filter(|c| c.partition.iter().all(|&d| d == 1))
        .map(|c| (c.n, c.partition))
        .collect();
    assert_eq!(from_x, from_p);
}

#[test]
fn enlarging_bounds_keeps_cases() {
    let key = |c: &logbg::EqualityCase| (c.n, c.q, c.partition.clone());
    let small = enumerate(&SearchConfig::pn(2, 8).with_nef(false).with_s_max(Some(10))).unwrap();
    let large = enumerate(&SearchConfig::pn(2, 11).with_nef(false).with_s_max(Some(14))).unwrap();
    let large: Vec<_> = large.iter().map(key).collect();
    assert!(small.iter().all(|c| large.contains(&key(c))));

    let small = enumerate(&SearchConfig::hypersurface(2, 30, 10)).unwrap();
    let large = enumerate(&SearchConfig::hypersurface(2, 60, 40)).unwrap();
    let large: Vec<_> = large.iter().map(key).collect();
    assert!(small.iter().all(|c| large.contains(&key(c))));
}

#[test]
fn mode_filters_and_flags_agree() {
    for mode in [Mode::EqualityN, Mode::EqualityNPlus1, Mode::Either] {
        let cases = enumerate(&SearchConfig::pn(2, 14).with_mode(mode)).unwrap();
        assert!(!cases.is_empty());
        for c in cases {
            assert!(c.partition.windows(2).all(|w| w[0] >= w[1]));
            assert!(mode.accepts(c.report.equality_n, c.report.equality_n_plus_1));
            assert_eq!(c.satisfied.contains(&Equality::N), c.report.equality_n);
            assert_eq!(
                c.satisfied.contains(&Equality::NPlus1),
                c.report.equality_n_plus_1
            );
        }
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let config = SearchConfig::pn(2, 16).with_nef(false);
    let one = serde_json::to_string(&enumerate(&config).unwrap()).unwrap();
    let four = serde_json::to_string(&enumerate(&config.clone().with_workers(4)).unwrap()).unwrap();
    assert_eq!(one, four);
}

#[test]
fn records_round_trip() {
    let config = SearchConfig::hypersurface(2, 20, 10);
    for case in enumerate(&config).unwrap() {
        let record = OutputRecord::Case {
            tool_version: logbg::VERSION.into(),
            bounds: config.clone(),
            case,
        };
        let line = record.to_line();
        assert_eq!(serde_json::from_str::<OutputRecord>(&line).unwrap(), record);
    }
}
