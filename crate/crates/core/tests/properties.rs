use proptest::prelude::*;

use quintic_locus::bounds::bounds_of;
use quintic_locus::cli::locate;
use quintic_locus::cli::json::LocateDoc;
use quintic_locus::localization::{
    no_positive_roots_certificate, two_negative_roots_certificate, verify_report,
};
use quintic_locus::number::{sign_left, sign_right};
use quintic_locus::oracle::{count_roots_open, discriminant, isolate_all, real_root_multiplicities};
use quintic_locus::rational::{int, pow10_neg, rat, Sign};
use quintic_locus::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn quintic() -> impl Strategy<Value = MonicQuintic> {
    proptest::array::uniform5(small_rational()).prop_map(MonicQuintic::from_coeffs)
}

/// Products of linear factors with small integer roots, so repeated roots
/// show up often.
fn factored_quintic() -> impl Strategy<Value = MonicQuintic> {
    (proptest::collection::vec(-3i64..=3, 1..=5), proptest::collection::vec(0i64..=4, 0..=2)).prop_map(
        |(roots, quads)| {
            let mut p = Polynomial::one();
            for r in &roots {
                p = &p * &Polynomial::linear_factor(&int(*r));
            }
            // fill up with irreducible quadratics x^2 + c + 1, then with x - 1
            for c in quads {
                if p.degree().unwrap() + 2 <= 5 {
                    p = &p * &Polynomial::from_ints(&[c + 1, 0, 1]);
                }
            }
            while p.degree().unwrap() < 5 {
                p = &p * &Polynomial::linear_factor(&int(1));
            }
            from_polynomial(&p)
        },
    )
}

fn from_polynomial(p: &Polynomial) -> MonicQuintic {
    let c = p.coeffs();
    MonicQuintic::new(c[4].clone(), c[3].clone(), c[2].clone(), c[1].clone(), c[0].clone())
}

fn width() -> Rational {
    pow10_neg(12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn depressing_is_a_shift(q in quintic()) {
        let shifted = q.to_polynomial().shift(&(-q.a4.clone() / int(5)));
        prop_assert_eq!(depress(&q).to_polynomial(), shifted);
    }

    #[test]
    fn reflecting_twice_is_identity(q in quintic()) {
        let p = q.to_polynomial();
        prop_assert_eq!(p.reflect().reflect(), p);
    }

    #[test]
    fn derivative_drops_degree(q in quintic()) {
        prop_assert_eq!(q.to_polynomial().derivative().degree(), Some(4));
    }

    #[test]
    fn bounds_contain_roots(q in quintic()) {
        let p = q.to_polynomial();
        let b = root_bounds(&q);
        prop_assert!(b.lower < b.upper);
        for r in isolate_all(&p, &pow10_neg(6)) {
            prop_assert!(b.lower <= r.lo && r.hi <= b.upper);
        }
        prop_assert_eq!(b.lower, -bounds_of(&p.reflect()).upper);
    }

    #[test]
    fn classification_survives_shifts(q in quintic(), t in small_rational()) {
        let moved = from_polynomial(&q.to_polynomial().shift(&t));
        prop_assert_eq!(classify(&q), classify(&moved));
    }

    #[test]
    fn classification_matches_oracle(q in prop_oneof![quintic(), factored_quintic()]) {
        let c = classify(&q);
        prop_assert_eq!(&c.multiplicities, &real_root_multiplicities(&q.to_polynomial()));
    }

    #[test]
    fn d5_sign_is_discriminant_sign(q in prop_oneof![quintic(), factored_quintic()]) {
        let ds = classification::discrimination_system(&depress(&q));
        prop_assert_eq!(Sign::of(&ds.d5), Sign::of(&discriminant(&q.to_polynomial())));
    }

    #[test]
    fn quadratic_claims_are_sound(q in prop_oneof![quintic(), factored_quintic()]) {
        let report = cluster_intervals(&q);
        for check in verify_report(&q, &report) {
            prop_assert!(check.ok, "claim {} is {}, oracle {}", check.index, report.intervals[check.index], check.oracle_count);
        }
    }

    #[test]
    fn cell_parity_follows_end_signs(q in prop_oneof![quintic(), factored_quintic()]) {
        let p = q.to_polynomial();
        for claim in cluster_intervals(&q).intervals.iter().filter(|c| !c.is_point()) {
            let l = sign_right(&p, &claim.left.value);
            let r = sign_left(&p, &claim.right.value);
            let n = count_roots_open(&p, &claim.left.value, &claim.right.value);
            prop_assert_eq!(l != r, n % 2 == 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn full_mode_is_exact(q in prop_oneof![quintic(), factored_quintic()]) {
        let report = isolate_full(&q, &width()).unwrap();
        let checks = verify_report(&q, &report);
        prop_assert!(checks.iter().all(|c| c.ok));
        prop_assert!(report.intervals.iter().all(|c| c.count.is_exact()));
        prop_assert_eq!(report.max_total(), classify(&q).total_real);
    }

    #[test]
    fn json_round_trip(q in quintic(), full in any::<bool>()) {
        let mode = if full { Mode::Full } else { Mode::QuadraticOnly };
        let (doc, _) = locate(&q, mode, &width(), false).unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        let back: LocateDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.report().unwrap(), doc.report().unwrap());
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn sufficient_conditions_hold(q in quintic()) {
        let r = ResolventSet::compute(&q);
        let p = q.to_polynomial();
        let b = root_bounds(&q);
        if no_positive_roots_certificate(&q, &r) {
            prop_assert_eq!(count_roots_open(&p, &int(0), &b.upper), 0);
            prop_assert!(p.sign_at(&int(0)) != Sign::Zero);
        }
        if two_negative_roots_certificate(&q, &r) {
            prop_assert!(count_roots_open(&p, &b.lower, &int(0)) >= 2);
        }
    }
}
