use std::f64::consts::PI;

use interlacing_core::families::{
    mixed_residual, mp_extra_points, pj_admissible, pj_a_bound, MixedRelation,
};
use interlacing_core::hyper::{jacobi_poly_oracle, mp_poly, pj_poly, MonomialPoly};
use interlacing_core::interlace::{hk_sign, place_point, Chain};
use interlacing_core::scan::{analyze_pair, draw_validity};
use interlacing_core::{FamilySpec, Placement, TheoremVariant, Verdict, ZeroSet};
use proptest::prelude::*;

fn oracle(family: FamilySpec, n: usize) -> MonomialPoly {
    match family {
        FamilySpec::Jacobi { alpha, beta } => jacobi_poly_oracle(n, alpha, beta),
        FamilySpec::MeixnerPollaczek { lambda, phi } => mp_poly(n, lambda, phi),
        FamilySpec::PseudoJacobi { a, b } => pj_poly(n, a, b),
    }
    .unwrap()
}

fn mp_window_open(n: usize, lambda: f64, phi: f64) -> bool {
    let nf = n as f64;
    (2.0 * phi).cos() > (2.0 * lambda - nf - 1.0) / (2.0 * lambda + nf + 1.0)
}

fn jacobi() -> impl Strategy<Value = (FamilySpec, usize)> {
    (-0.95f64..12.0, -0.95f64..12.0, 1usize..=10)
        .prop_map(|(alpha, beta, n)| (FamilySpec::Jacobi { alpha, beta }, n))
}

fn mp() -> impl Strategy<Value = (FamilySpec, usize)> {
    (0.05f64..10.0, 0.02f64..(PI - 0.02), 1usize..=10)
        .prop_filter("inside the window", |(l, p, n)| {
            let nf = *n as f64;
            (2.0 * p).cos() - (2.0 * l - nf - 1.0) / (2.0 * l + nf + 1.0) > 1e-3
        })
        .prop_map(|(lambda, phi, n)| (FamilySpec::MeixnerPollaczek { lambda, phi }, n))
}

fn pj() -> impl Strategy<Value = (FamilySpec, usize)> {
    (1usize..=9, 0.05f64..8.0, -12.0f64..12.0)
        .prop_map(|(n, delta, b)| (FamilySpec::PseudoJacobi { a: pj_a_bound(n) - delta, b }, n))
        .prop_filter("admissible", |(f, n)| {
            let FamilySpec::PseudoJacobi { a, b } = *f else { return false };
            pj_admissible(*n, a, b).admissible && draw_validity(*f, *n).is_ok()
        })
}

fn any_family() -> impl Strategy<Value = (FamilySpec, usize)> {
    prop_oneof![jacobi(), mp(), pj()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mixed_identity_holds_on_recurrence((family, n) in any_family(), t in -1.5f64..1.5) {
        let p = analyze_pair(family, n).unwrap();
        let lo = p.g_zeros.first().unwrap();
        let hi = p.g_zeros.last().unwrap();
        let x = 0.5 * (lo + hi) + t * (hi - lo).max(1.0);
        let r = mixed_residual(family, n, x).unwrap();
        prop_assert!(r.residual <= 1e-9 * r.scale, "{family} n={n} x={x}: {r:?}");
    }

    #[test]
    fn mixed_identity_holds_on_hypergeometric_forms((family, n) in any_family(), t in -1.5f64..1.5) {
        let rel = MixedRelation::new(family, n).unwrap();
        let p = oracle(family, n);
        let g = oracle(family.shifted(), n + 1);
        let q = oracle(family.shifted(), n);
        let x = t * 4.0;
        let lhs = rel.a_coef * p.eval(x);
        let b_term = rel.b_at(x) * g.eval(x);
        let t_term = (x - rel.extra.e1) * (x - rel.extra.e2) * q.eval(x);
        let rhs = match family.variant() {
            TheoremVariant::Minus => b_term - t_term,
            TheoremVariant::Plus => b_term + t_term,
        };
        let scale = rel.a_coef.abs() * p.abs_scale(x)
            + rel.b_at(x).abs() * g.abs_scale(x)
            + ((x - rel.extra.e1) * (x - rel.extra.e2)).abs() * q.abs_scale(x);
        prop_assert!((lhs - rhs).abs() <= 1e-8 * scale, "{family} n={n} x={x}");
    }

    #[test]
    fn extra_points_sorted_and_sum_closed_form((family, n) in any_family()) {
        let e = family.extra_points(n).unwrap();
        prop_assert!(e.e1 <= e.e2);
        let nf = n as f64;
        let expected = match family {
            FamilySpec::Jacobi { alpha, beta } => {
                2.0 * (nf + 1.0) * (alpha - beta)
                    / ((2.0 * nf + alpha + beta + 4.0) * (2.0 * nf + alpha + beta + 2.0))
            }
            FamilySpec::MeixnerPollaczek { phi, .. } => -(nf + 1.0) / phi.tan(),
            FamilySpec::PseudoJacobi { a, b } => b * (nf + 1.0) / ((a + nf + 1.0) * (a + nf + 2.0)),
        };
        prop_assert!((e.sum() - expected).abs() <= 1e-9 * (1.0 + expected.abs() + e.e1.abs() + e.e2.abs()));
        prop_assert!(e.quadratic(e.e1).abs() <= 1e-8 * (1.0 + e.e1 * e.e1));
    }

    #[test]
    fn predicted_chains_verify((family, n) in any_family()) {
        let a = match analyze_pair(family, n) {
            Ok(a) => a,
            Err(e) => return Err(TestCaseError::reject(e.to_string())),
        };
        prop_assert!(a.defect().is_none(), "{family} n={n}: {:?}", a.defect());
        if let Some(chain) = a.report.verdict.chain(family.variant()) {
            let p = a.p_zeros.as_slice();
            let g = a.g_zeros.as_slice();
            prop_assert!(chain.holds(p, g, a.extra.e1, a.extra.e2));
        }
    }

    #[test]
    fn two_point_completion_matches_augmented_chain((family, n) in jacobi()) {
        let a = match analyze_pair(family, n) {
            Ok(a) => a,
            Err(e) => return Err(TestCaseError::reject(e.to_string())),
        };
        let aug = a.report.chain_result(Chain::AugmentedBelowG) == Some(true);
        let both_gaps = matches!(
            (a.report.placement_e1, a.report.placement_e2),
            (Placement::Gap(i), Placement::Gap(j)) if i != j
        );
        prop_assert_eq!(a.report.verdict == Verdict::TwoPointCompleted, both_gaps);
        if both_gaps {
            prop_assert!(aug);
        }
    }

    #[test]
    fn plus_never_straddles((family, n) in prop_oneof![mp(), pj()]) {
        let a = match analyze_pair(family, n) {
            Ok(a) => a,
            Err(e) => return Err(TestCaseError::reject(e.to_string())),
        };
        prop_assert!(!matches!(
            (a.report.placement_e1, a.report.placement_e2),
            (Placement::LeftOfAll, Placement::RightOfAll)
        ));
    }

    #[test]
    fn one_point_placement_gives_one_point_chain((family, n) in any_family()) {
        let a = match analyze_pair(family, n) {
            Ok(a) => a,
            Err(e) => return Err(TestCaseError::reject(e.to_string())),
        };
        let p = a.p_zeros.as_slice();
        let g = a.g_zeros.as_slice();
        let (e1, e2) = (a.extra.e1, a.extra.e2);
        match (a.report.placement_e1, a.report.placement_e2, family.variant()) {
            (Placement::LeftOfAll, Placement::Gap(_), TheoremVariant::Minus) => {
                prop_assert!(Chain::GOverPWithE2.holds(p, g, e1, e2));
            }
            (Placement::Gap(_), Placement::RightOfAll, TheoremVariant::Minus) => {
                prop_assert!(Chain::PWithE1OverG.holds(p, g, e1, e2));
            }
            (Placement::LeftOfAll, Placement::Gap(_), TheoremVariant::Plus) => {
                prop_assert!(Chain::PWithE2OverG.holds(p, g, e1, e2));
            }
            (Placement::Gap(_), Placement::RightOfAll, TheoremVariant::Plus) => {
                prop_assert!(Chain::GOverPWithE1.holds(p, g, e1, e2));
            }
            _ => {}
        }
    }

    #[test]
    fn hk_sign_is_product_sign(
        e1 in -5.0f64..5.0, e2 in -5.0f64..5.0, yk in -5.0f64..5.0, w in 0.01f64..5.0,
    ) {
        let yk1 = yk + w;
        let product = (yk - e1) * (yk1 - e1) * (yk - e2) * (yk1 - e2);
        prop_assume!(product != 0.0);
        prop_assert_eq!(hk_sign(e1, e2, yk, yk1), if product > 0.0 { 1 } else { -1 });
    }

    #[test]
    fn placement_counts_zeros_below(
        mut ys in prop::collection::vec(-10.0f64..10.0, 1..12), e in -12.0f64..12.0,
    ) {
        ys.sort_by(f64::total_cmp);
        ys.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
        prop_assume!(ys.iter().all(|y| (e - y).abs() > 1e-9));
        let below = ys.iter().filter(|y| **y < e).count();
        let grid = ZeroSet::new(ys.clone()).unwrap();
        let expected = match below {
            0 => Placement::LeftOfAll,
            k if k == ys.len() => Placement::RightOfAll,
            k => Placement::Gap(k),
        };
        prop_assert_eq!(place_point(e, &grid), expected);
    }

    #[test]
    fn mp_window_decides_reality(n in 1usize..=12, lambda in 0.02f64..8.0, phi in 0.01f64..(PI - 0.01)) {
        let nf = n as f64;
        let margin = (2.0 * phi).cos() - (2.0 * lambda - nf - 1.0) / (2.0 * lambda + nf + 1.0);
        prop_assume!(margin.abs() > 1e-9);
        prop_assert_eq!(mp_extra_points(n, lambda, phi).is_ok(), mp_window_open(n, lambda, phi));
    }

    #[test]
    fn pj_closed_form_threshold_agrees(n in 1usize..=10, delta in 0.01f64..10.0, b in -15.0f64..15.0) {
        let a = pj_a_bound(n) - delta;
        let adm = pj_admissible(n, a, b);
        if let Some(agrees) = adm.closed_form_agrees {
            prop_assert!(agrees, "n={n} a={a} b={b}: {adm:?}");
        }
    }
}
